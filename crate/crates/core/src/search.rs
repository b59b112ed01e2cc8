//! Exhaustive enumeration of implicative involutive BE algebras of a given
//! size, up to isomorphism.
//!
//! The search fixes `zero = 0` and `one = n−1`, fills every cell forced by
//! the axioms (the diagonal, the rows of 0 and 1, the column of 1), then
//! branches on the involution column as a fixed-point-free pairing of the
//! middle elements. The identity `x*→y* = y→x` pairs the remaining cells
//! two by two, and `x*→x = x` pre-fills the cells between involution
//! partners, so only a handful of representative cells are ever branched
//! on. Axiom instances are replayed incrementally during the descent and a
//! full validation plus canonical-form dedup runs at emission.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{FiniteAlgebra, RawAlgebra};

/// Largest size the search is designed for.
pub const MAX_SEARCH_SIZE: usize = 6;

/// Structural requirements a model must satisfy to be emitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Requirement {
    Ioml,
    Boolean,
    NonIoml,
}

impl Requirement {
    pub fn parse(s: &str) -> Option<Requirement> {
        match s {
            "ioml" => Some(Requirement::Ioml),
            "boolean" => Some(Requirement::Boolean),
            "non-ioml" => Some(Requirement::NonIoml),
            _ => None,
        }
    }

    fn satisfied(self, alg: &FiniteAlgebra) -> bool {
        match self {
            Requirement::Ioml => alg.is_ioml(),
            Requirement::Boolean => alg.is_boolean(),
            Requirement::NonIoml => !alg.is_ioml(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub size: usize,
    pub require: Vec<Requirement>,
    pub limit: usize,
}

impl SearchSpec {
    pub fn new(size: usize) -> Self {
        SearchSpec {
            size,
            require: Vec::new(),
            limit: usize::MAX,
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("search size {0} outside the supported range 2..={MAX_SEARCH_SIZE}")]
    SizeOutOfRange(usize),
    #[error("invalid search spec: {0}")]
    BadSpec(String),
}

/// Canonical table bytes: two algebras are isomorphic iff their canonical
/// forms are byte-equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

/// Minimal relabeled table over all carrier permutations sending `zero` to
/// `0` and `one` to `n−1` (both constants are term-definable, hence fixed
/// by every isomorphism).
pub fn canonical_form(alg: &FiniteAlgebra) -> CanonicalForm {
    let n = alg.size();
    assert!(n <= 10, "canonical form supports carriers up to 10 elements");
    let middle: Vec<usize> = alg
        .elements()
        .filter(|&x| x != alg.zero() && x != alg.one())
        .collect();

    let mut best: Option<Vec<u8>> = None;
    let mut order = middle.clone();
    permute(&mut order, 0, &mut |perm| {
        // map: zero -> 0, middle -> 1.., one -> n-1
        let mut map = vec![0usize; n];
        map[alg.zero()] = 0;
        map[alg.one()] = n - 1;
        for (i, &x) in perm.iter().enumerate() {
            map[x] = i + 1;
        }
        let mut bytes = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                bytes[map[x] * n + map[y]] = map[alg.imp(x, y)] as u8;
            }
        }
        if best.as_ref().map_or(true, |b| bytes < *b) {
            best = Some(bytes);
        }
    });
    CanonicalForm(best.expect("at least the identity permutation"))
}

fn permute<F: FnMut(&[usize])>(items: &mut Vec<usize>, k: usize, visit: &mut F) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Rebuilds an algebra from canonical bytes (zero = 0, one = n−1).
fn algebra_of_canonical(n: usize, form: &CanonicalForm) -> FiniteAlgebra {
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| form.0[x * n + y] as usize).collect())
        .collect();
    FiniteAlgebra::validate(&RawAlgebra {
        size: n,
        imp: rows,
        one: n - 1,
        zero: 0,
    })
    .expect("canonical form of a validated model revalidates")
}

struct Search {
    n: usize,
    one: usize,
    cells: Vec<Option<usize>>,
    star: Vec<usize>,
    /// Representative free cells in row-major order.
    decisions: Vec<(usize, usize)>,
    found: BTreeMap<Vec<u8>, FiniteAlgebra>,
    require: Vec<Requirement>,
}

impl Search {
    fn at(&self, x: usize, y: usize) -> Option<usize> {
        self.cells[x * self.n + y]
    }

    fn set(&mut self, x: usize, y: usize, v: usize) {
        self.cells[x * self.n + y] = Some(v);
    }

    /// Mirror of a cell under `x*→y* = y→x`.
    fn mirror(&self, x: usize, y: usize) -> (usize, usize) {
        (self.star[y], self.star[x])
    }

    /// Replays every fully determined instance of BE4 and (Impl).
    fn consistent(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                if let Some(xy) = self.at(x, y) {
                    if let Some(v) = self.at(xy, x) {
                        if v != x {
                            return false; // (Impl)
                        }
                    }
                }
                for z in 0..n {
                    let lhs = self.at(y, z).and_then(|yz| self.at(x, yz));
                    let rhs = self.at(x, z).and_then(|xz| self.at(y, xz));
                    if let (Some(l), Some(r)) = (lhs, rhs) {
                        if l != r {
                            return false; // BE4
                        }
                    }
                }
            }
        }
        true
    }

    fn dfs(&mut self, depth: usize) {
        if depth == self.decisions.len() {
            self.emit();
            return;
        }
        let (x, y) = self.decisions[depth];
        // the mirror holds the same value by x*→y* = y→x
        let (mx, my) = self.mirror(x, y);
        for v in 0..self.n {
            self.set(x, y, v);
            self.set(mx, my, v);
            if self.consistent() {
                self.dfs(depth + 1);
            }
            self.cells[x * self.n + y] = None;
            if (mx, my) != (x, y) {
                self.cells[mx * self.n + my] = None;
            }
        }
    }

    fn emit(&mut self) {
        let rows: Vec<Vec<usize>> = (0..self.n)
            .map(|x| {
                (0..self.n)
                    .map(|y| self.at(x, y).expect("leaf has a full table"))
                    .collect()
            })
            .collect();
        let raw = RawAlgebra {
            size: self.n,
            imp: rows,
            one: self.one,
            zero: 0,
        };
        let alg = match FiniteAlgebra::validate(&raw) {
            Ok(alg) => alg,
            Err(_) => return,
        };
        if !self.require.iter().all(|r| r.satisfied(&alg)) {
            return;
        }
        let form = canonical_form(&alg);
        self.found
            .entry(form.0.clone())
            .or_insert_with(|| algebra_of_canonical(self.n, &form));
    }
}

/// Fixed-point-free involutions of `middle`, each as a full star vector.
fn involutions(n: usize, one: usize) -> Vec<Vec<usize>> {
    let middle: Vec<usize> = (1..one).collect();
    let mut out = Vec::new();
    let mut star = vec![usize::MAX; n];
    star[0] = one;
    star[one] = 0;
    pair_up(&middle, &mut star, &mut out);
    out
}

fn pair_up(unmatched: &[usize], star: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    match unmatched.first() {
        None => out.push(star.clone()),
        Some(&first) => {
            for (i, &partner) in unmatched.iter().enumerate().skip(1) {
                star[first] = partner;
                star[partner] = first;
                let rest: Vec<usize> = unmatched[1..i]
                    .iter()
                    .chain(&unmatched[i + 1..])
                    .copied()
                    .collect();
                pair_up(&rest, star, out);
                star[first] = usize::MAX;
                star[partner] = usize::MAX;
            }
        }
    }
}

/// Complete, isomorphism-free enumeration at the given size, in ascending
/// canonical-form order.
pub fn enumerate_models(spec: &SearchSpec) -> Result<Vec<FiniteAlgebra>, SearchError> {
    let n = spec.size;
    if !(2..=MAX_SEARCH_SIZE).contains(&n) {
        return Err(SearchError::SizeOutOfRange(n));
    }
    if spec.limit == 0 {
        return Err(SearchError::BadSpec("limit must be at least 1".into()));
    }
    let one = n - 1;
    let mut found = BTreeMap::new();

    for star in involutions(n, one) {
        let mut cells = vec![None; n * n];
        let set = |cells: &mut Vec<Option<usize>>, x: usize, y: usize, v: usize| {
            cells[x * n + y] = Some(v);
        };
        for x in 0..n {
            set(&mut cells, x, x, one); // BE1
            set(&mut cells, x, one, one); // BE2
            set(&mut cells, one, x, x); // BE3
            set(&mut cells, 0, x, one); // boundedness
            set(&mut cells, x, 0, star[x]); // the involution column
        }
        // x*→x = x forces the cells between involution partners
        for x in 1..one {
            set(&mut cells, star[x], x, x);
        }

        let mut decisions = Vec::new();
        for x in 1..one {
            for y in 1..one {
                if cells[x * n + y].is_some() {
                    continue;
                }
                let (mx, my) = (star[y], star[x]);
                // keep one representative per mirror orbit
                if (x, y) <= (mx, my) {
                    decisions.push((x, y));
                }
            }
        }

        let mut search = Search {
            n,
            one,
            cells,
            star,
            decisions,
            found: std::mem::take(&mut found),
            require: spec.require.clone(),
        };
        if search.consistent() {
            search.dfs(0);
        }
        found = search.found;
    }

    Ok(found.into_values().take(spec.limit).collect())
}

/// Per-model structural flags for the search manifest.
#[derive(Debug, Clone, Serialize)]
pub struct ModelFlags {
    pub ioml: bool,
    pub boolean: bool,
}

pub fn model_flags(alg: &FiniteAlgebra) -> ModelFlags {
    ModelFlags {
        ioml: alg.is_ioml(),
        boolean: alg.is_boolean(),
    }
}

/// Bucket name for manifest counts.
pub fn flag_bucket(flags: &ModelFlags) -> &'static str {
    if flags.boolean {
        "boolean"
    } else if flags.ioml {
        "ioml"
    } else {
        "non-ioml"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::corpus;

    #[test]
    fn size_two_has_exactly_b2() {
        let models = enumerate_models(&SearchSpec::new(2)).unwrap();
        assert_eq!(models.len(), 1);
        assert_eq!(models[0], corpus::b2());
    }

    #[test]
    fn size_three_has_no_models() {
        // the involution must pair the single middle element with itself,
        // which (Impl) forbids
        let models = enumerate_models(&SearchSpec::new(3)).unwrap();
        assert!(models.is_empty());
    }

    #[test]
    fn size_four_has_exactly_b4() {
        let models = enumerate_models(&SearchSpec::new(4)).unwrap();
        assert_eq!(models.len(), 1);
        assert_eq!(canonical_form(&models[0]), canonical_form(&corpus::b4()));
    }

    #[test]
    fn size_six_has_exactly_mo2_and_the_benzene_algebra() {
        let models = enumerate_models(&SearchSpec::new(6)).unwrap();
        assert_eq!(models.len(), 2);
        let forms: std::collections::BTreeSet<_> = models.iter().map(canonical_form).collect();
        assert!(forms.contains(&canonical_form(&corpus::mo2())));
        assert!(forms.contains(&canonical_form(&corpus::o6())));
        assert_eq!(forms.len(), 2);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        // swap the two atom pairs of MO2: a<->b, a'<->b'
        let alg = corpus::mo2();
        let perm = [0usize, 3, 4, 1, 2, 5];
        let n = alg.size();
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| perm[alg.imp(x, y)]).collect())
            .collect();
        let mut relabeled = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                relabeled[perm[x]][perm[y]] = rows[x][y];
            }
        }
        let swapped = FiniteAlgebra::from_rows(relabeled, 5, 0).unwrap();
        assert_eq!(canonical_form(&alg), canonical_form(&swapped));
    }

    #[test]
    fn require_flags_filter_models() {
        let mut spec = SearchSpec::new(4);
        spec.require = vec![Requirement::Boolean];
        assert_eq!(enumerate_models(&spec).unwrap().len(), 1);
        spec.require = vec![Requirement::NonIoml];
        assert!(enumerate_models(&spec).unwrap().is_empty());
    }

    #[test]
    fn size_out_of_range_is_rejected() {
        assert_eq!(
            enumerate_models(&SearchSpec::new(7)).unwrap_err(),
            SearchError::SizeOutOfRange(7)
        );
        assert_eq!(
            enumerate_models(&SearchSpec::new(1)).unwrap_err(),
            SearchError::SizeOutOfRange(1)
        );
    }
}
