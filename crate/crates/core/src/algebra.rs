//! Finite implicative involutive BE algebras: representation, validation,
//! derived operation tables, and the structure checks built on them.
//!
//! An algebra lives entirely in its implication table. Validation replays
//! the structural axioms and, on success, eagerly derives the involution,
//! the `⋓`/`⋒` operations and the three order relations; everything
//! downstream reads those cached tables.

use serde::Serialize;
use thiserror::Error;

use crate::term_laws::{self, LawReport};

/// An unvalidated implication table with its designated constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawAlgebra {
    pub size: usize,
    /// `imp[x][y]` encodes `x→y`.
    pub imp: Vec<Vec<usize>>,
    pub one: usize,
    pub zero: usize,
}

/// Derived operation tables, computed once at validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedTables {
    /// `x* = x→0`.
    pub star: Vec<usize>,
    /// `x⋓y = (x→y)→y`, row-major.
    pub cup: Vec<usize>,
    /// `x⋒y = ((x*→y*)→y*)*`, row-major.
    pub cap: Vec<usize>,
    /// `x ≤ y` iff `x→y = 1`.
    pub le: Vec<bool>,
    /// `x ≤_Q y` iff `x = x⋒y`.
    pub le_q: Vec<bool>,
    /// `x ≤_L y` iff `x = (x→y*)*`.
    pub le_l: Vec<bool>,
}

/// A validated implicative involutive bounded BE algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    n: usize,
    imp: Vec<usize>,
    one: usize,
    zero: usize,
    derived: DerivedTables,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ValidateError {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("index out of range: imp[{x}][{y}] = {value} with carrier size {n}")]
    IndexOutOfRange {
        x: usize,
        y: usize,
        value: usize,
        n: usize,
    },
    #[error("axiom violations: {}", violated_ids(.0))]
    Axioms(Vec<LawReport>),
}

fn violated_ids(reports: &[LawReport]) -> String {
    reports
        .iter()
        .map(|r| r.law.as_str())
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("not an implicative-orthomodular lattice: {law} fails at {witness:?}")]
pub struct NotIomlError {
    pub law: String,
    pub witness: Vec<usize>,
}

impl FiniteAlgebra {
    /// Validates a raw table. All violated axioms are collected, not just
    /// the first one.
    pub fn validate(raw: &RawAlgebra) -> Result<Self, ValidateError> {
        let n = raw.size;
        if n == 0 {
            return Err(ValidateError::Malformed("empty carrier".into()));
        }
        if n == 1 || raw.one == raw.zero {
            return Err(ValidateError::Malformed(
                "degenerate algebra: one and zero coincide".into(),
            ));
        }
        if raw.one >= n || raw.zero >= n {
            return Err(ValidateError::Malformed(format!(
                "constants out of range: one={}, zero={}, size={}",
                raw.one, raw.zero, n
            )));
        }
        if raw.imp.len() != n {
            return Err(ValidateError::Malformed(format!(
                "expected {} rows, found {}",
                n,
                raw.imp.len()
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (x, row) in raw.imp.iter().enumerate() {
            if row.len() != n {
                return Err(ValidateError::Malformed(format!(
                    "row {} has {} entries, expected {}",
                    x,
                    row.len(),
                    n
                )));
            }
            for (y, &value) in row.iter().enumerate() {
                if value >= n {
                    return Err(ValidateError::IndexOutOfRange { x, y, value, n });
                }
                flat.push(value);
            }
        }

        let derived = derive_tables(n, &flat, raw.one, raw.zero);
        let alg = FiniteAlgebra {
            n,
            imp: flat,
            one: raw.one,
            zero: raw.zero,
            derived,
        };

        let mut violations = Vec::new();
        for id in term_laws::VALIDATION_LAWS {
            let report = term_laws::check_id(&alg, id);
            if !report.holds {
                violations.push(report);
            }
        }
        if violations.is_empty() {
            Ok(alg)
        } else {
            Err(ValidateError::Axioms(violations))
        }
    }

    /// Convenience constructor from row vectors.
    pub fn from_rows(rows: Vec<Vec<usize>>, one: usize, zero: usize) -> Result<Self, ValidateError> {
        let raw = RawAlgebra {
            size: rows.len(),
            imp: rows,
            one,
            zero,
        };
        Self::validate(&raw)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x * self.n + y]
    }

    #[inline]
    pub fn star(&self, x: usize) -> usize {
        self.derived.star[x]
    }

    #[inline]
    pub fn cup(&self, x: usize, y: usize) -> usize {
        self.derived.cup[x * self.n + y]
    }

    #[inline]
    pub fn cap(&self, x: usize, y: usize) -> usize {
        self.derived.cap[x * self.n + y]
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.derived.le[x * self.n + y]
    }

    #[inline]
    pub fn le_q(&self, x: usize, y: usize) -> bool {
        self.derived.le_q[x * self.n + y]
    }

    #[inline]
    pub fn le_l(&self, x: usize, y: usize) -> bool {
        self.derived.le_l[x * self.n + y]
    }

    pub fn derived(&self) -> &DerivedTables {
        &self.derived
    }

    /// The implication table as rows (for serialization and canonicalization).
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| self.imp[x * self.n..(x + 1) * self.n].to_vec())
            .collect()
    }

    /// `x C y`: `x = (x→y*)→(x→y)*`.
    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.imp(self.imp(x, self.star(y)), self.star(self.imp(x, y))) == x
    }

    /// Both distributivity identities at `(x,y,z)`:
    /// `((x*→y)→z*)* = (x→z*)→(y→z*)*` and `((x→y*)→z)* = (z*→x)→(z*→y)*`.
    pub fn distributive_triple(&self, x: usize, y: usize, z: usize) -> bool {
        let idis1 = self.star(self.imp(self.imp(self.star(x), y), self.star(z)))
            == self.imp(
                self.imp(x, self.star(z)),
                self.star(self.imp(y, self.star(z))),
            );
        let idis2 = self.star(self.imp(self.imp(x, self.star(y)), z))
            == self.imp(
                self.imp(self.star(z), x),
                self.star(self.imp(self.star(z), y)),
            );
        idis1 && idis2
    }

    /// True when the `IOM` identity holds everywhere.
    pub fn is_ioml(&self) -> bool {
        self.elements().all(|x| {
            self.elements()
                .all(|y| self.cap(x, self.imp(y, x)) == x)
        })
    }

    /// Implicative-Boolean: an IOML with commutative `⋓`.
    pub fn is_boolean(&self) -> bool {
        self.is_ioml()
            && self
                .elements()
                .all(|x| self.elements().all(|y| self.cup(x, y) == self.cup(y, x)))
    }
}

fn derive_tables(n: usize, imp: &[usize], one: usize, zero: usize) -> DerivedTables {
    let at = |x: usize, y: usize| imp[x * n + y];
    let star: Vec<usize> = (0..n).map(|x| at(x, zero)).collect();
    let mut cup = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            cup[x * n + y] = at(at(x, y), y);
        }
    }
    let mut cap = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            cap[x * n + y] = star[cup[star[x] * n + star[y]]];
        }
    }
    let mut le = vec![false; n * n];
    let mut le_q = vec![false; n * n];
    let mut le_l = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            le[x * n + y] = at(x, y) == one;
            le_q[x * n + y] = cap[x * n + y] == x;
            le_l[x * n + y] = star[at(x, star[y])] == x;
        }
    }
    DerivedTables {
        star,
        cup,
        cap,
        le,
        le_q,
        le_l,
    }
}

/// Verdicts for the three equivalent orthomodularity identities.
#[derive(Debug, Clone, Serialize)]
pub struct IomlReport {
    pub iom: LawReport,
    pub iom_prime: LawReport,
    pub iom_second: LawReport,
}

impl IomlReport {
    pub fn holds(&self) -> bool {
        self.iom.holds
    }

    /// The three identities are provably equivalent; disagreement on a
    /// validated algebra indicates an implementation bug.
    pub fn agree(&self) -> bool {
        self.iom.holds == self.iom_prime.holds && self.iom.holds == self.iom_second.holds
    }
}

pub fn check_ioml(alg: &FiniteAlgebra) -> IomlReport {
    IomlReport {
        iom: term_laws::check_id(alg, "IOM"),
        iom_prime: term_laws::check_id(alg, "IOM'"),
        iom_second: term_laws::check_id(alg, "IOM''"),
    }
}

/// Verdicts for the quantum-Wajsberg conditions.
#[derive(Debug, Clone, Serialize)]
pub struct QwReport {
    pub qw: LawReport,
    pub qw1: LawReport,
    pub qw2: LawReport,
}

impl QwReport {
    pub fn all_hold(&self) -> bool {
        self.qw.holds && self.qw1.holds && self.qw2.holds
    }
}

pub fn check_qw(alg: &FiniteAlgebra) -> QwReport {
    QwReport {
        qw: term_laws::check_id(alg, "QW"),
        qw1: term_laws::check_id(alg, "QW1"),
        qw2: term_laws::check_id(alg, "QW2"),
    }
}

/// `⋓`-commutativity; only defined on IOMLs.
pub fn check_boolean(alg: &FiniteAlgebra) -> Result<LawReport, NotIomlError> {
    let ioml = check_ioml(alg);
    if !ioml.holds() {
        let w = ioml.iom.first_witness().unwrap_or(&[]).to_vec();
        return Err(NotIomlError {
            law: "IOM".into(),
            witness: w,
        });
    }
    Ok(term_laws::check_id(alg, "CUPCOMM"))
}

/// A bounded ortholattice presented by its meet table and orthocomplement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawOrtholattice {
    pub size: usize,
    pub meet: Vec<Vec<usize>>,
    pub complement: Vec<usize>,
    pub zero: usize,
    pub one: usize,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum OmlError {
    #[error("malformed lattice: {0}")]
    Malformed(String),
    #[error("not an ortholattice ({reason}) at {witness:?}")]
    NotOrtholattice { reason: String, witness: Vec<usize> },
    #[error("induced implication table is not a valid algebra: {0}")]
    Algebra(#[from] ValidateError),
}

/// Builds the algebra with `x→y = (x ∧ y′)′` from a bounded ortholattice.
pub fn from_oml(raw: &RawOrtholattice) -> Result<FiniteAlgebra, OmlError> {
    let n = raw.size;
    if n == 0 || raw.meet.len() != n || raw.complement.len() != n {
        return Err(OmlError::Malformed("table shape mismatch".into()));
    }
    if raw.zero >= n || raw.one >= n {
        return Err(OmlError::Malformed("constants out of range".into()));
    }
    for (x, row) in raw.meet.iter().enumerate() {
        if row.len() != n {
            return Err(OmlError::Malformed(format!("meet row {x} has wrong length")));
        }
        for &v in row {
            if v >= n {
                return Err(OmlError::Malformed(format!("meet entry out of range in row {x}")));
            }
        }
    }
    for &v in &raw.complement {
        if v >= n {
            return Err(OmlError::Malformed("complement entry out of range".into()));
        }
    }

    let m = |x: usize, y: usize| raw.meet[x][y];
    let c = |x: usize| raw.complement[x];
    let join = |x: usize, y: usize| c(m(c(x), c(y)));
    let fail = |reason: &str, witness: Vec<usize>| OmlError::NotOrtholattice {
        reason: reason.into(),
        witness,
    };

    for x in 0..n {
        if m(x, x) != x {
            return Err(fail("meet not idempotent", vec![x]));
        }
        if m(x, raw.zero) != raw.zero {
            return Err(fail("zero not a bottom for meet", vec![x]));
        }
        if m(x, raw.one) != x {
            return Err(fail("one not a top for meet", vec![x]));
        }
        if c(c(x)) != x {
            return Err(fail("complement not involutive", vec![x]));
        }
        if m(x, c(x)) != raw.zero {
            return Err(fail("x ∧ x′ ≠ 0", vec![x]));
        }
        if join(x, c(x)) != raw.one {
            return Err(fail("x ∨ x′ ≠ 1", vec![x]));
        }
    }
    for x in 0..n {
        for y in 0..n {
            if m(x, y) != m(y, x) {
                return Err(fail("meet not commutative", vec![x, y]));
            }
            // complement must reverse the meet order
            if m(x, y) == x && m(c(y), c(x)) != c(y) {
                return Err(fail("complement not order-reversing", vec![x, y]));
            }
            if m(x, join(x, y)) != x || join(x, m(x, y)) != x {
                return Err(fail("absorption fails (De Morgan join)", vec![x, y]));
            }
            for z in 0..n {
                if m(m(x, y), z) != m(x, m(y, z)) {
                    return Err(fail("meet not associative", vec![x, y, z]));
                }
            }
        }
    }

    let imp: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| c(m(x, c(y)))).collect())
        .collect();
    let raw_alg = RawAlgebra {
        size: n,
        imp,
        one: raw.one,
        zero: raw.zero,
    };
    Ok(FiniteAlgebra::validate(&raw_alg)?)
}

/// Recovers the meet table and orthocomplement from an IOML via
/// `x ∧ y = (x→y*)*` and `x′ = x*`.
pub fn to_oml(alg: &FiniteAlgebra) -> Result<RawOrtholattice, NotIomlError> {
    let ioml = check_ioml(alg);
    if !ioml.holds() {
        return Err(NotIomlError {
            law: "IOM".into(),
            witness: ioml.iom.first_witness().unwrap_or(&[]).to_vec(),
        });
    }
    let n = alg.size();
    let meet: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| alg.star(alg.imp(x, alg.star(y))))
                .collect()
        })
        .collect();
    Ok(RawOrtholattice {
        size: n,
        meet,
        complement: (0..n).map(|x| alg.star(x)).collect(),
        zero: alg.zero(),
        one: alg.one(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::corpus;

    #[test]
    fn b2_validates() {
        let alg = FiniteAlgebra::from_rows(vec![vec![1, 1], vec![0, 1]], 1, 0).unwrap();
        assert_eq!(alg.star(0), 1);
        assert_eq!(alg.star(1), 0);
        assert_eq!(alg.cup(0, 1), 1);
        assert_eq!(alg.cap(0, 1), 0);
    }

    #[test]
    fn be3_violation_is_reported() {
        let err = FiniteAlgebra::from_rows(vec![vec![1, 1], vec![1, 1]], 1, 0).unwrap_err();
        match err {
            ValidateError::Axioms(reports) => {
                let be3 = reports.iter().find(|r| r.law == "BE3").expect("BE3 failure");
                assert_eq!(be3.witnesses[0], vec![0]);
            }
            other => panic!("expected axiom violations, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_carrier_is_rejected() {
        let err = FiniteAlgebra::from_rows(vec![vec![0]], 0, 0).unwrap_err();
        assert!(matches!(err, ValidateError::Malformed(_)));
    }

    #[test]
    fn out_of_range_entry_is_rejected() {
        let err = FiniteAlgebra::from_rows(vec![vec![1, 2], vec![0, 1]], 1, 0).unwrap_err();
        assert!(matches!(err, ValidateError::IndexOutOfRange { x: 0, y: 1, value: 2, .. }));
    }

    #[test]
    fn mo2_le_is_weaker_than_le_l() {
        let alg = corpus::mo2();
        let (a, b) = (1, 3);
        assert!(alg.le(a, b));
        assert!(!alg.le_l(a, b));
    }

    #[test]
    fn mo2_is_ioml_but_not_boolean() {
        let alg = corpus::mo2();
        let ioml = check_ioml(&alg);
        assert!(ioml.holds() && ioml.agree());
        assert!(check_qw(&alg).all_hold());
        let boolean = check_boolean(&alg).unwrap();
        assert!(!boolean.holds);
        assert_eq!(boolean.witnesses[0], vec![1, 3]); // (a, b)
        // a⋓b = b while b⋓a = a
        assert_eq!(alg.cup(1, 3), 3);
        assert_eq!(alg.cup(3, 1), 1);
    }

    #[test]
    fn b4_is_boolean() {
        let alg = corpus::b4();
        assert!(check_boolean(&alg).unwrap().holds);
        assert!(alg.is_boolean());
    }

    #[test]
    fn commutation_examples() {
        let alg = corpus::mo2();
        for x in alg.elements() {
            assert!(alg.commutes(x, x));
            assert!(alg.commutes(x, alg.zero()));
            assert!(alg.commutes(x, alg.one()));
        }
        assert!(!alg.commutes(1, 3)); // a C b fails on MO2
        for x in alg.elements() {
            for y in alg.elements() {
                if alg.le_l(x, y) {
                    assert!(alg.commutes(x, y));
                }
            }
        }
    }

    #[test]
    fn distributive_triple_examples() {
        let b4 = corpus::b4();
        for x in b4.elements() {
            for y in b4.elements() {
                for z in b4.elements() {
                    assert!(b4.distributive_triple(x, y, z));
                }
            }
        }
        let mo2 = corpus::mo2();
        for y in mo2.elements() {
            for z in mo2.elements() {
                assert!(mo2.distributive_triple(mo2.one(), y, z));
            }
        }
    }

    #[test]
    fn oml_round_trips() {
        for alg in [corpus::b2(), corpus::b4(), corpus::b8(), corpus::mo2()] {
            let lattice = to_oml(&alg).unwrap();
            let back = from_oml(&lattice).unwrap();
            assert_eq!(alg, back);
        }
    }

    #[test]
    fn o6_is_implicative_involutive_but_not_orthomodular() {
        let alg = corpus::o6();
        let ioml = check_ioml(&alg);
        assert!(!ioml.holds());
        assert!(ioml.agree()); // all three identities fail together
        assert!(!ioml.iom.witnesses.is_empty());
        // the witness replays: x⋒(y→x) ≠ x at the reported pair
        let w = ioml.iom.first_witness().unwrap();
        assert_ne!(alg.cap(w[0], alg.imp(w[1], w[0])), w[0]);
        assert!(check_boolean(&alg).is_err());
        assert!(to_oml(&alg).is_err());
    }

    #[test]
    fn from_oml_rejects_non_lattice() {
        // break idempotence
        let raw = RawOrtholattice {
            size: 2,
            meet: vec![vec![0, 0], vec![0, 0]],
            complement: vec![1, 0],
            zero: 0,
            one: 1,
        };
        let err = from_oml(&raw).unwrap_err();
        assert!(matches!(err, OmlError::NotOrtholattice { .. }));
    }
}
