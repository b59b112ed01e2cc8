//! Deductive systems: subset classification, family enumeration, and the
//! characterizations of orthomodularity and Booleanness they induce.
//!
//! Subsets of the carrier are n-bit masks (bit `x` = membership of element
//! `x`). Enumeration walks all `2^n` masks in ascending order, which both
//! fixes the reported order and makes witness tie-breaking deterministic:
//! smallest mask first, then lexicographic element tuples.

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::FiniteAlgebra;

/// Default carrier-size cap for full subset enumeration.
pub const DEFAULT_SUBSET_BUDGET: usize = 14;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("enumeration budget exceeded: carrier size {n} over budget {budget}")]
pub struct BudgetError {
    pub n: usize,
    pub budget: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DsKind {
    Ods,
    Qds,
    Pds,
    Ds,
}

impl DsKind {
    pub const ALL: [DsKind; 4] = [DsKind::Ods, DsKind::Qds, DsKind::Pds, DsKind::Ds];

    pub fn parse(s: &str) -> Option<DsKind> {
        match s {
            "ods" => Some(DsKind::Ods),
            "qds" => Some(DsKind::Qds),
            "pds" => Some(DsKind::Pds),
            "ds" => Some(DsKind::Ds),
            _ => None,
        }
    }
}

/// Exact truth values of the defining subset conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubsetFlags {
    /// The subset was empty; all condition flags are reported false.
    pub empty: bool,
    /// `x∈F, x≤_L y imply y∈F`.
    pub f1: bool,
    /// `x∈F, y∈X imply y→x∈F`.
    pub f1_prime: bool,
    /// `x,y∈F imply (x→y*)*∈F`.
    pub f2: bool,
    /// `x∈F, y∈X imply x⋓y∈F`.
    pub f3: bool,
    /// `x∈F, x≤y imply y∈F`.
    pub f4: bool,
    /// `1∈F`.
    pub ds1: bool,
    /// `x, x→y∈F imply y∈F`.
    pub ds2: bool,
    /// `x∈F, y≤_L x imply x⋓y∈F`.
    pub p1: bool,
    /// `x∈F, y∈X imply x⋓y∈F` (same condition as `f3`).
    pub p2: bool,
}

impl SubsetFlags {
    pub fn is_kind(&self, kind: DsKind) -> bool {
        !self.empty
            && match kind {
                DsKind::Ods => self.f1,
                DsKind::Qds => self.f1 && self.f2,
                DsKind::Pds => self.f1 && self.f2 && self.f3,
                DsKind::Ds => self.ds1 && self.ds2,
            }
    }
}

#[inline]
fn has(mask: u64, x: usize) -> bool {
    mask >> x & 1 == 1
}

/// Replays every defining condition of the deductive-system families on
/// one subset.
pub fn classify_subset(alg: &FiniteAlgebra, mask: u64) -> SubsetFlags {
    let n = alg.size();
    if mask & ((1u64 << n) - 1) == 0 {
        return SubsetFlags {
            empty: true,
            f1: false,
            f1_prime: false,
            f2: false,
            f3: false,
            f4: false,
            ds1: false,
            ds2: false,
            p1: false,
            p2: false,
        };
    }
    let mut f1 = true;
    let mut f1_prime = true;
    let mut f2 = true;
    let mut f3 = true;
    let mut f4 = true;
    let mut ds2 = true;
    let mut p1 = true;
    for x in 0..n {
        if !has(mask, x) {
            continue;
        }
        for y in 0..n {
            if alg.le_l(x, y) && !has(mask, y) {
                f1 = false;
            }
            if !has(mask, alg.imp(y, x)) {
                f1_prime = false;
            }
            if has(mask, y) && !has(mask, alg.star(alg.imp(x, alg.star(y)))) {
                f2 = false;
            }
            if !has(mask, alg.cup(x, y)) {
                f3 = false;
            }
            if alg.le(x, y) && !has(mask, y) {
                f4 = false;
            }
            if has(mask, alg.imp(x, y)) && !has(mask, y) {
                ds2 = false;
            }
            if alg.le_l(y, x) && !has(mask, alg.cup(x, y)) {
                p1 = false;
            }
        }
    }
    SubsetFlags {
        empty: false,
        f1,
        f1_prime,
        f2,
        f3,
        f4,
        ds1: has(mask, alg.one()),
        ds2,
        p1,
        p2: f3,
    }
}

fn hex_masks<S: Serializer>(members: &Vec<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(members.iter().map(|m| format!("{m:#x}")))
}

/// An enumerated deductive-system family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetFamily {
    pub algebra: String,
    pub kind: DsKind,
    #[serde(serialize_with = "hex_masks")]
    pub members: Vec<u64>,
}

fn check_budget(alg: &FiniteAlgebra, budget: usize) -> Result<(), BudgetError> {
    if alg.size() > budget {
        Err(BudgetError {
            n: alg.size(),
            budget,
        })
    } else {
        Ok(())
    }
}

/// All subsets of the given kind, ascending by bitmask.
pub fn enumerate_family(
    alg: &FiniteAlgebra,
    algebra_id: &str,
    kind: DsKind,
    budget: usize,
) -> Result<SubsetFamily, BudgetError> {
    check_budget(alg, budget)?;
    let n = alg.size();
    let members = (1u64..1 << n)
        .filter(|&mask| classify_subset(alg, mask).is_kind(kind))
        .collect();
    Ok(SubsetFamily {
        algebra: algebra_id.to_string(),
        kind,
        members,
    })
}

/// `[x,1] = {z : x ≤_L z}` as a bitmask; always an order deductive system.
pub fn principal_interval(alg: &FiniteAlgebra, x: usize) -> u64 {
    let mut mask = 0u64;
    for z in alg.elements() {
        if alg.le_l(x, z) {
            mask |= 1 << z;
        }
    }
    mask
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DsProperty {
    P1,
    P2,
}

impl DsProperty {
    fn satisfied(self, flags: &SubsetFlags) -> bool {
        match self {
            DsProperty::P1 => flags.p1,
            DsProperty::P2 => flags.p2,
        }
    }

    /// First violating pair `(x, y)` of the property on `mask`,
    /// lexicographic scan.
    fn violation(self, alg: &FiniteAlgebra, mask: u64) -> Option<(usize, usize)> {
        for x in alg.elements() {
            if !has(mask, x) {
                continue;
            }
            for y in alg.elements() {
                let applicable = match self {
                    DsProperty::P1 => alg.le_l(y, x),
                    DsProperty::P2 => true,
                };
                if applicable && !has(mask, alg.cup(x, y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterizationWitness {
    pub mask: u64,
    pub x: usize,
    pub y: usize,
}

/// Both sides of a structure-vs-deductive-system equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Characterization {
    /// The structural verdict (orthomodular, or Boolean).
    pub left: bool,
    /// "Every order deductive system satisfies the property."
    pub right: bool,
    pub agree: bool,
    /// Smallest failing (mask, x, y) when `right` is false.
    pub witness: Option<CharacterizationWitness>,
}

fn characterize(
    alg: &FiniteAlgebra,
    left: bool,
    property: DsProperty,
    budget: usize,
) -> Result<Characterization, BudgetError> {
    check_budget(alg, budget)?;
    let n = alg.size();
    let mut right = true;
    let mut witness = None;
    for mask in 1u64..1 << n {
        let flags = classify_subset(alg, mask);
        if flags.is_kind(DsKind::Ods) && !property.satisfied(&flags) {
            right = false;
            let (x, y) = property
                .violation(alg, mask)
                .expect("flag false implies a violating pair");
            witness = Some(CharacterizationWitness { mask, x, y });
            break;
        }
    }
    Ok(Characterization {
        left,
        right,
        agree: left == right,
        witness,
    })
}

/// Orthomodularity iff every order deductive system satisfies `P1`.
pub fn characterize_ioml_via_ds(
    alg: &FiniteAlgebra,
    budget: usize,
) -> Result<Characterization, BudgetError> {
    characterize(alg, alg.is_ioml(), DsProperty::P1, budget)
}

/// Booleanness iff every order deductive system satisfies `P2`.
pub fn characterize_boolean_via_ds(
    alg: &FiniteAlgebra,
    budget: usize,
) -> Result<Characterization, BudgetError> {
    characterize(alg, alg.is_boolean(), DsProperty::P2, budget)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub holds: bool,
    /// First pair `(x, y)` with `y ⋠_L x` that no admissible system
    /// separates.
    pub failing_pair: Option<(usize, usize)>,
}

/// For every pair with `y ⋠_L x`, searches the order deductive systems
/// satisfying the property for one containing `y` but not `x`.
pub fn separation_check(
    alg: &FiniteAlgebra,
    property: DsProperty,
    budget: usize,
) -> Result<SeparationReport, BudgetError> {
    check_budget(alg, budget)?;
    let n = alg.size();
    let admissible: Vec<u64> = (1u64..1 << n)
        .filter(|&mask| {
            let flags = classify_subset(alg, mask);
            flags.is_kind(DsKind::Ods) && property.satisfied(&flags)
        })
        .collect();
    for x in alg.elements() {
        for y in alg.elements() {
            if alg.le_l(y, x) {
                continue;
            }
            let separated = admissible
                .iter()
                .any(|&mask| has(mask, y) && !has(mask, x));
            if !separated {
                return Ok(SeparationReport {
                    holds: false,
                    failing_pair: Some((x, y)),
                });
            }
        }
    }
    Ok(SeparationReport {
        holds: true,
        failing_pair: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::corpus;

    #[test]
    fn b2_order_ds_family() {
        let alg = corpus::b2();
        let fam = enumerate_family(&alg, "b2", DsKind::Ods, DEFAULT_SUBSET_BUDGET).unwrap();
        assert_eq!(fam.members, vec![0b10, 0b11]);
    }

    #[test]
    fn singleton_one_is_always_an_order_ds() {
        for (_, alg) in corpus::all() {
            let mask = 1u64 << alg.one();
            assert!(classify_subset(&alg, mask).is_kind(DsKind::Ods));
        }
    }

    #[test]
    fn whole_carrier_satisfies_everything() {
        for (_, alg) in corpus::all() {
            let mask = (1u64 << alg.size()) - 1;
            let flags = classify_subset(&alg, mask);
            assert!(flags.f1 && flags.f1_prime && flags.f2 && flags.f3 && flags.f4);
            assert!(flags.ds1 && flags.ds2 && flags.p1 && flags.p2);
        }
    }

    #[test]
    fn empty_set_reports_all_false() {
        let alg = corpus::b4();
        let flags = classify_subset(&alg, 0);
        assert!(flags.empty);
        assert!(!flags.f1 && !flags.ds1 && !flags.p1);
    }

    #[test]
    fn b4_ds_equals_pds() {
        let alg = corpus::b4();
        let ds = enumerate_family(&alg, "b4", DsKind::Ds, 14).unwrap();
        let pds = enumerate_family(&alg, "b4", DsKind::Pds, 14).unwrap();
        assert_eq!(ds.members, pds.members);
        assert_eq!(ds.members, vec![0b1000, 0b1010, 0b1100, 0b1111]);
    }

    #[test]
    fn principal_intervals() {
        let b2 = corpus::b2();
        assert_eq!(principal_interval(&b2, 1), 0b10);
        let mo2 = corpus::mo2();
        assert_eq!(principal_interval(&mo2, 1), 0b100010); // {a, 1}
        for (_, alg) in corpus::all() {
            assert_eq!(
                principal_interval(&alg, alg.zero()),
                (1u64 << alg.size()) - 1
            );
            for x in alg.elements() {
                assert!(classify_subset(&alg, principal_interval(&alg, x)).is_kind(DsKind::Ods));
            }
        }
    }

    #[test]
    fn mo2_boolean_characterization_fails_with_interval_witness() {
        let alg = corpus::mo2();
        let ch = characterize_boolean_via_ds(&alg, 14).unwrap();
        assert!(!ch.left && !ch.right && ch.agree);
        let w = ch.witness.unwrap();
        assert_eq!(w.mask, 0b100010); // F = [a, 1]
        assert_eq!((w.x, w.y), (1, 3)); // a⋓b = b ∉ F
    }

    #[test]
    fn ioml_characterizations_agree_on_corpus() {
        for (id, alg) in corpus::all() {
            let ch = characterize_ioml_via_ds(&alg, 14).unwrap();
            assert!(ch.left && ch.right && ch.agree, "{id}");
        }
    }

    #[test]
    fn separation_matches_structure_on_corpus() {
        for (id, alg) in corpus::all() {
            let p1 = separation_check(&alg, DsProperty::P1, 14).unwrap();
            assert_eq!(p1.holds, alg.is_ioml(), "{id} P1");
            let p2 = separation_check(&alg, DsProperty::P2, 14).unwrap();
            assert_eq!(p2.holds, alg.is_boolean(), "{id} P2");
        }
    }

    #[test]
    fn o6_fails_both_characterizations_with_concrete_systems() {
        let alg = corpus::o6();
        let ch = characterize_ioml_via_ds(&alg, 14).unwrap();
        assert!(!ch.left && !ch.right && ch.agree);
        let w = ch.witness.unwrap();
        // replay: the reported system is an o-DS violating P1 at (x, y)
        let flags = classify_subset(&alg, w.mask);
        assert!(flags.is_kind(DsKind::Ods) && !flags.p1);
        assert!(alg.le_l(w.y, w.x));
        assert_eq!(w.mask >> alg.cup(w.x, w.y) & 1, 0);

        let sep = separation_check(&alg, DsProperty::P1, 14).unwrap();
        assert!(!sep.holds);
        assert!(sep.failing_pair.is_some());
    }

    #[test]
    fn budget_is_enforced() {
        let alg = corpus::b8();
        let err = enumerate_family(&alg, "b8", DsKind::Ods, 4).unwrap_err();
        assert_eq!(err, BudgetError { n: 8, budget: 4 });
    }
}
