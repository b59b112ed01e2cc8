//! States on implicative involutive BE algebras: the constraint system,
//! exact state search, the classification hierarchy, kernels, and the
//! unital/full/rich analysis of the full state space.
//!
//! A state assigns each element an exact rational in `[0,1]` with
//! `s(1) = 1` and `s(x→y) = 1 − s(x) + s(y)` whenever `y ≤_L x` (the
//! additivity condition with `s(x*)` rewritten via `s(x*) = 1 − s(x)`,
//! which is itself the `y := 0` instance). Every question about the set of
//! all states is decided by optimizing over the state polytope with the
//! exact simplex, so strict comparisons like `s(y) ≠ 1` are decidable.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::FiniteAlgebra;
use crate::ds::{self, BudgetError};
use crate::lp::{self, FarkasCertificate, LinearCondition, LinearProgram, LpOutcome};
use crate::Rat;

fn one() -> Rat {
    Rat::new(1.into(), 1.into())
}

fn zero() -> Rat {
    Rat::new(0.into(), 1.into())
}

/// An exact state vector on a fixed algebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StateVector {
    pub algebra: String,
    pub values: Vec<Rat>,
}

impl StateVector {
    pub fn value(&self, x: usize) -> &Rat {
        &self.values[x]
    }

    pub fn is_zero_one(&self) -> bool {
        self.values.iter().all(|v| v == &zero() || v == &one())
    }
}

impl Serialize for StateVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.values.len()))?;
        for v in &self.values {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }
}

#[derive(Debug, Clone, Error)]
pub enum StateError {
    #[error("invalid state: {0}")]
    Invalid(String),
    #[error(transparent)]
    Lp(#[from] lp::LpError),
}

/// Replays the state invariants exactly.
pub fn is_valid_state(alg: &FiniteAlgebra, values: &[Rat]) -> Result<(), StateError> {
    let n = alg.size();
    if values.len() != n {
        return Err(StateError::Invalid(format!(
            "expected {n} values, found {}",
            values.len()
        )));
    }
    for (x, v) in values.iter().enumerate() {
        if v < &zero() || v > &one() {
            return Err(StateError::Invalid(format!("value at {x} outside [0,1]")));
        }
    }
    if values[alg.one()] != one() {
        return Err(StateError::Invalid("s(1) ≠ 1".into()));
    }
    if values[alg.zero()] != zero() {
        return Err(StateError::Invalid("s(0) ≠ 0".into()));
    }
    for x in alg.elements() {
        for y in alg.elements() {
            if alg.le_l(y, x) {
                let lhs = values[alg.imp(x, y)].clone();
                let rhs = one() - &values[x] + &values[y];
                if lhs != rhs {
                    return Err(StateError::Invalid(format!(
                        "additivity fails at pair ({x},{y})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Builds the state polytope constraint system plus extra side conditions.
pub fn state_lp(alg: &FiniteAlgebra, extra: &[LinearCondition<Rat>]) -> LinearProgram<Rat> {
    let n = alg.size();
    let mut lp = LinearProgram::new(n);
    lp.fix_var(alg.one(), one());
    lp.fix_var(alg.zero(), zero());
    for x in 0..n {
        lp.lower_bound(x, zero());
        lp.upper_bound(x, one());
    }
    for x in 0..n {
        for y in 0..n {
            if alg.le_l(y, x) {
                // s(x→y) + s(x) − s(y) = 1, with coefficients accumulated in
                // case indices coincide
                let mut row = vec![zero(); n];
                row[alg.imp(x, y)] += one();
                row[x] += one();
                row[y] -= one();
                lp.push_eq(row, one());
            }
        }
    }
    for cond in extra {
        lp.push_condition(cond.clone());
    }
    lp
}

/// Outcome of an existence probe.
#[derive(Debug, Clone)]
pub enum StateSearch {
    Found(StateVector),
    Infeasible(FarkasCertificate<Rat>),
}

/// Finds an exact state satisfying the extra conditions, or certifies that
/// none exists.
pub fn find_state(
    alg: &FiniteAlgebra,
    algebra_id: &str,
    extra: &[LinearCondition<Rat>],
) -> Result<StateSearch, lp::LpError> {
    let lp = state_lp(alg, extra);
    match lp::solve(&lp)? {
        LpOutcome::Optimal { point, .. } => Ok(StateSearch::Found(StateVector {
            algebra: algebra_id.to_string(),
            values: point,
        })),
        LpOutcome::Infeasible(cert) => Ok(StateSearch::Infeasible(cert)),
        LpOutcome::Unbounded => unreachable!("state polytope is boxed"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagVerdict {
    pub holds: bool,
    /// Lexicographically first falsifying pair.
    pub witness: Option<(usize, usize)>,
}

fn scan_pairs(
    alg: &FiniteAlgebra,
    mut violated: impl FnMut(usize, usize) -> bool,
) -> FlagVerdict {
    for x in alg.elements() {
        for y in alg.elements() {
            if violated(x, y) {
                return FlagVerdict {
                    holds: false,
                    witness: Some((x, y)),
                };
            }
        }
    }
    FlagVerdict {
        holds: true,
        witness: None,
    }
}

/// The five state-type flags of the classification hierarchy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StateClassification {
    /// Jauch-Piron: `s(x)=1, s(y)=0 imply s(x→y)=0`.
    pub t1: FlagVerdict,
    /// (P)-state: `s(x)=1 implies s(x→y)=s(y)`.
    pub t2: FlagVerdict,
    /// (B)-state: `x ≤ y* implies s(x*→y)=s(x)+s(y)`.
    pub t3: FlagVerdict,
    /// Subadditive: `s(x→y) ≤ s(x*)+s(y)`.
    pub t4: FlagVerdict,
    /// Valuation: `s(x→y)−s(y→x) = s(y)−s(x)`.
    pub t5: FlagVerdict,
    pub zero_one: bool,
}

/// Classifies a state by exhaustive pair replay of each defining condition.
pub fn classify_state(
    alg: &FiniteAlgebra,
    state: &StateVector,
) -> Result<StateClassification, StateError> {
    is_valid_state(alg, &state.values)?;
    let s = |x: usize| state.values[x].clone();
    let t1 = scan_pairs(alg, |x, y| {
        s(x) == one() && s(y) == zero() && s(alg.imp(x, y)) != zero()
    });
    let t2 = scan_pairs(alg, |x, y| s(x) == one() && s(alg.imp(x, y)) != s(y));
    let t3 = scan_pairs(alg, |x, y| {
        alg.le(x, alg.star(y)) && s(alg.imp(alg.star(x), y)) != s(x) + s(y)
    });
    let t4 = scan_pairs(alg, |x, y| s(alg.imp(x, y)) > one() - s(x) + s(y));
    let t5 = scan_pairs(alg, |x, y| {
        s(alg.imp(x, y)) - s(alg.imp(y, x)) != s(y) - s(x)
    });
    Ok(StateClassification {
        t1,
        t2,
        t3,
        t4,
        t5,
        zero_one: state.is_zero_one(),
    })
}

/// `Ker(s) = {x : s(x) = 1}` as a bitmask.
pub fn kernel(alg: &FiniteAlgebra, state: &StateVector) -> u64 {
    let mut mask = 0u64;
    for x in alg.elements() {
        if state.values[x] == one() {
            mask |= 1 << x;
        }
    }
    mask
}

/// Exhaustive enumeration of the `{0,1}`-valued states.
pub fn enumerate_01_states(
    alg: &FiniteAlgebra,
    algebra_id: &str,
    budget: usize,
) -> Result<Vec<StateVector>, BudgetError> {
    let n = alg.size();
    if n > budget {
        return Err(BudgetError { n, budget });
    }
    let middle: Vec<usize> = alg
        .elements()
        .filter(|&x| x != alg.one() && x != alg.zero())
        .collect();
    let mut found = Vec::new();
    for bits in 0u64..1 << middle.len() {
        let mut values = vec![zero(); n];
        values[alg.one()] = one();
        for (k, &x) in middle.iter().enumerate() {
            if bits >> k & 1 == 1 {
                values[x] = one();
            }
        }
        if is_valid_state(alg, &values).is_ok() {
            found.push(StateVector {
                algebra: algebra_id.to_string(),
                values,
            });
        }
    }
    found.sort();
    Ok(found)
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementProbe {
    pub x: usize,
    pub ok: bool,
    pub witness: Option<StateVector>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairProbe {
    pub x: usize,
    pub y: usize,
    pub ok: bool,
    pub witness: Option<StateVector>,
}

#[derive(Debug, Clone, Serialize)]
pub struct UnitalReport {
    pub holds: bool,
    pub failing: Option<usize>,
    pub probes: Vec<ElementProbe>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub holds: bool,
    pub failing: Option<(usize, usize)>,
    pub probes: Vec<PairProbe>,
}

/// Separation strengths of the set of all states, decided per element or
/// per pair by exact LP probes.
#[derive(Debug, Clone, Serialize)]
pub struct StateSpaceReport {
    pub algebra: String,
    pub feasible: bool,
    pub note: Option<String>,
    pub unital: UnitalReport,
    pub full: PairReport,
    pub rich: PairReport,
}

impl StateSpaceReport {
    /// Every probe witness state, in scan order.
    pub fn witness_states(&self) -> impl Iterator<Item = &StateVector> {
        self.unital
            .probes
            .iter()
            .filter_map(|p| p.witness.as_ref())
            .chain(self.full.probes.iter().filter_map(|p| p.witness.as_ref()))
            .chain(self.rich.probes.iter().filter_map(|p| p.witness.as_ref()))
    }
}

fn empty_pair_report() -> PairReport {
    PairReport {
        holds: false,
        failing: None,
        probes: Vec::new(),
    }
}

/// Decides unital, full and rich for `S =` the set of all states.
pub fn state_space_report(
    alg: &FiniteAlgebra,
    algebra_id: &str,
) -> Result<StateSpaceReport, lp::LpError> {
    let base = state_lp(alg, &[]);
    let feasible = !lp::solve(&base)?.is_infeasible();
    if !feasible {
        return Ok(StateSpaceReport {
            algebra: algebra_id.to_string(),
            feasible,
            note: Some("state space empty".into()),
            unital: UnitalReport {
                holds: false,
                failing: None,
                probes: Vec::new(),
            },
            full: empty_pair_report(),
            rich: empty_pair_report(),
        });
    }

    let state_of = |point: Vec<Rat>| StateVector {
        algebra: algebra_id.to_string(),
        values: point,
    };

    // unital: for each x ≠ 0, is {s(x) = 1} feasible?
    let mut unital = UnitalReport {
        holds: true,
        failing: None,
        probes: Vec::new(),
    };
    for x in alg.elements() {
        if x == alg.zero() {
            continue;
        }
        let mut lp = state_lp(alg, &[]);
        lp.fix_var(x, one());
        let probe = match lp::solve(&lp)? {
            LpOutcome::Optimal { point, .. } => ElementProbe {
                x,
                ok: true,
                witness: Some(state_of(point)),
            },
            LpOutcome::Infeasible(_) => ElementProbe {
                x,
                ok: false,
                witness: None,
            },
            LpOutcome::Unbounded => unreachable!("state polytope is boxed"),
        };
        if !probe.ok && unital.holds {
            unital.holds = false;
            unital.failing = Some(x);
        }
        unital.probes.push(probe);
    }

    // full: for each pair x ⋠_L y, maximize s(x) − s(y); want optimum > 0
    let mut full = PairReport {
        holds: true,
        failing: None,
        probes: Vec::new(),
    };
    // rich: for each such pair, minimize s(y) subject to s(x) = 1;
    // want feasible with minimum < 1
    let mut rich = PairReport {
        holds: true,
        failing: None,
        probes: Vec::new(),
    };
    for x in alg.elements() {
        for y in alg.elements() {
            if alg.le_l(x, y) {
                continue;
            }
            let mut flp = state_lp(alg, &[]);
            let mut objective = vec![zero(); alg.size()];
            objective[x] += one();
            objective[y] -= one();
            flp.set_objective(objective);
            let probe = match lp::solve(&flp)? {
                LpOutcome::Optimal { value, point } => {
                    let ok = value > zero();
                    PairProbe {
                        x,
                        y,
                        ok,
                        witness: ok.then(|| state_of(point)),
                    }
                }
                LpOutcome::Infeasible(_) => unreachable!("base polytope known feasible"),
                LpOutcome::Unbounded => unreachable!("state polytope is boxed"),
            };
            if !probe.ok && full.holds {
                full.holds = false;
                full.failing = Some((x, y));
            }
            full.probes.push(probe);

            let mut rlp = state_lp(alg, &[]);
            rlp.fix_var(x, one());
            let mut objective = vec![zero(); alg.size()];
            objective[y] -= one();
            rlp.set_objective(objective);
            let probe = match lp::solve(&rlp)? {
                LpOutcome::Optimal { value, point } => {
                    // optimum of −s(y); rich needs min s(y) < 1
                    let ok = -value < one();
                    PairProbe {
                        x,
                        y,
                        ok,
                        witness: ok.then(|| state_of(point)),
                    }
                }
                LpOutcome::Infeasible(_) => PairProbe {
                    x,
                    y,
                    ok: false,
                    witness: None,
                },
                LpOutcome::Unbounded => unreachable!("state polytope is boxed"),
            };
            if !probe.ok && rich.holds {
                rich.holds = false;
                rich.failing = Some((x, y));
            }
            rich.probes.push(probe);
        }
    }

    Ok(StateSpaceReport {
        algebra: algebra_id.to_string(),
        feasible,
        note: None,
        unital,
        full,
        rich,
    })
}

/// Min/max probes of every coordinate; returns the optimal vertices.
pub fn coordinate_probe_states(
    alg: &FiniteAlgebra,
    algebra_id: &str,
) -> Result<Vec<StateVector>, lp::LpError> {
    let mut found = Vec::new();
    for x in alg.elements() {
        for sign in [one(), -one()] {
            let mut lp = state_lp(alg, &[]);
            let mut objective = vec![zero(); alg.size()];
            objective[x] = sign;
            lp.set_objective(objective);
            if let LpOutcome::Optimal { point, .. } = lp::solve(&lp)? {
                found.push(StateVector {
                    algebra: algebra_id.to_string(),
                    values: point,
                });
            }
        }
    }
    Ok(found)
}

#[derive(Debug, Clone)]
pub struct SampleConfig {
    /// Number of seeded random convex combinations added to the sample.
    pub combos: usize,
    pub seed: u64,
    /// Carrier-size cap for the exhaustive `{0,1}`-state enumeration.
    pub budget: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            combos: 16,
            seed: 0,
            budget: ds::DEFAULT_SUBSET_BUDGET,
        }
    }
}

/// The state sample used for universally-quantified-over-states checks:
/// all `{0,1}`-states, all LP probe vertices, and seeded rational convex
/// combinations of those. Deduplicated and sorted.
pub fn sample_states(
    alg: &FiniteAlgebra,
    algebra_id: &str,
    report: &StateSpaceReport,
    config: &SampleConfig,
) -> Result<Vec<StateVector>, StateError> {
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut push = |values: Vec<Rat>, basis: &mut Vec<Vec<Rat>>| {
        if seen.insert(values.clone()) {
            basis.push(values);
        }
    };

    if let Ok(zo) = enumerate_01_states(alg, algebra_id, config.budget) {
        for s in zo {
            push(s.values, &mut basis);
        }
    }
    for s in coordinate_probe_states(alg, algebra_id)? {
        push(s.values, &mut basis);
    }
    for s in report.witness_states() {
        push(s.values.clone(), &mut basis);
    }

    let mut sample: std::collections::BTreeSet<Vec<Rat>> = basis.iter().cloned().collect();
    if !basis.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        for _ in 0..config.combos {
            let mut weights: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..9)).collect();
            if weights.iter().all(|&w| w == 0) {
                weights[0] = 1;
            }
            let total: u32 = weights.iter().sum();
            let total = Rat::new(total.into(), 1.into());
            let mut values = vec![zero(); alg.size()];
            for (w, b) in weights.iter().zip(&basis) {
                let w = Rat::new((*w).into(), 1.into()) / total.clone();
                for (acc, v) in values.iter_mut().zip(b) {
                    *acc += w.clone() * v;
                }
            }
            sample.insert(values);
        }
    }

    let states: Vec<StateVector> = sample
        .into_iter()
        .map(|values| StateVector {
            algebra: algebra_id.to_string(),
            values,
        })
        .collect();
    for s in &states {
        is_valid_state(alg, &s.values)?;
    }
    Ok(states)
}

/// One per-state theorem replay.
#[derive(Debug, Clone, Serialize)]
pub struct StateTheoremReport {
    pub label: &'static str,
    pub applicable: bool,
    pub holds: bool,
    /// Violating state together with the offending elements.
    pub witness: Option<(StateVector, Vec<usize>)>,
}

struct ClassifiedState {
    state: StateVector,
    class: StateClassification,
    kernel_mask: u64,
    kernel_flags: ds::SubsetFlags,
}

/// Replays the per-state theorems on a sample.
///
/// Implication-chain statements are checked on every state; the
/// biconditionals that require orthomodularity are gated on `is_ioml` and
/// reported not-applicable otherwise.
pub fn verify_state_theorems(
    alg: &FiniteAlgebra,
    sample: &[StateVector],
) -> Result<Vec<StateTheoremReport>, StateError> {
    let is_ioml = alg.is_ioml();
    let mut classified = Vec::with_capacity(sample.len());
    for state in sample {
        let class = classify_state(alg, state)?;
        let kernel_mask = kernel(alg, state);
        classified.push(ClassifiedState {
            state: state.clone(),
            class,
            kernel_mask,
            kernel_flags: ds::classify_subset(alg, kernel_mask),
        });
    }

    let mut out = Vec::new();
    let mut check = |label: &'static str,
                     applicable: bool,
                     mut violation: Box<dyn FnMut(&ClassifiedState) -> Option<Vec<usize>> + '_>| {
        let mut holds = true;
        let mut witness = None;
        if applicable {
            for cs in &classified {
                if let Some(elems) = violation(cs) {
                    holds = false;
                    witness = Some((cs.state.clone(), elems));
                    break;
                }
            }
        }
        out.push(StateTheoremReport {
            label,
            applicable,
            holds: applicable && holds,
            witness,
        });
        if !applicable {
            // normalize: inapplicable entries are neither holds nor fails
            let last = out.last_mut().unwrap();
            last.holds = true;
        }
    };

    let s_zero = zero();
    let s_one = one();

    // s(0)=0, s(x*)=1−s(x), y ≤_L x implies s(y) ≤ s(x)
    check(
        "Lemma4.2",
        true,
        Box::new(|cs| {
            let v = &cs.state.values;
            if v[alg.zero()] != s_zero {
                return Some(vec![alg.zero()]);
            }
            for x in alg.elements() {
                if v[alg.star(x)] != s_one.clone() - &v[x] {
                    return Some(vec![x]);
                }
                for y in alg.elements() {
                    if alg.le_l(y, x) && v[y] > v[x] {
                        return Some(vec![x, y]);
                    }
                }
            }
            None
        }),
    );

    // T5 ⇒ T4 ⇒ T2 ⇒ T1 and T5 ⇒ T3
    check(
        "Prop4.4",
        true,
        Box::new(|cs| {
            let c = &cs.class;
            let chain = (!c.t5.holds || c.t4.holds)
                && (!c.t4.holds || c.t2.holds)
                && (!c.t2.holds || c.t1.holds)
                && (!c.t5.holds || c.t3.holds);
            (!chain).then(Vec::new)
        }),
    );

    check(
        "Prop4.5",
        is_ioml,
        Box::new(|cs| (cs.class.t4.holds && !cs.class.t3.holds).then(Vec::new)),
    );

    check(
        "Prop4.6",
        is_ioml,
        Box::new(|cs| (cs.class.t3.holds && !cs.class.t5.holds).then(Vec::new)),
    );

    check(
        "Thm4.7",
        is_ioml,
        Box::new(|cs| {
            let c = &cs.class;
            let eq = c.t3.holds == c.t4.holds && c.t4.holds == c.t5.holds;
            let chain = !c.t3.holds || (c.t2.holds && c.t1.holds);
            (!(eq && chain)).then(Vec::new)
        }),
    );

    // {0,1}-states: valuation iff Jauch-Piron
    check(
        "Prop4.8",
        true,
        Box::new(|cs| {
            (cs.class.zero_one && cs.class.t5.holds != cs.class.t1.holds).then(Vec::new)
        }),
    );

    check(
        "Prop4.10(1)",
        true,
        Box::new(|cs| (!cs.kernel_flags.is_kind(ds::DsKind::Ods)).then(Vec::new)),
    );

    check(
        "Prop4.10(2)",
        true,
        Box::new(|cs| {
            (cs.kernel_flags.is_kind(ds::DsKind::Qds) != cs.class.t1.holds).then(Vec::new)
        }),
    );

    check(
        "Prop4.10(3)",
        true,
        Box::new(|cs| {
            (cs.kernel_flags.is_kind(ds::DsKind::Pds) != cs.class.t2.holds).then(Vec::new)
        }),
    );

    // kernel membership corollaries
    check(
        "Cor4.11(1)",
        true,
        Box::new(|cs| {
            let ker = cs.kernel_mask;
            for x in alg.elements() {
                if ker >> x & 1 == 0 {
                    continue;
                }
                for y in alg.elements() {
                    if alg.le_l(x, y) {
                        for z in [y, alg.imp(x, y), alg.imp(y, x)] {
                            if ker >> z & 1 == 0 {
                                return Some(vec![x, y]);
                            }
                        }
                    }
                }
            }
            None
        }),
    );

    check(
        "Cor4.11(2)",
        true,
        Box::new(|cs| {
            let ker = cs.kernel_mask;
            for x in alg.elements() {
                if ker >> x & 1 == 0 {
                    continue;
                }
                for y in alg.elements() {
                    if alg.le_l(y, x) && ker >> alg.cup(x, y) & 1 == 0 {
                        return Some(vec![x, y]);
                    }
                }
            }
            None
        }),
    );

    check(
        "Cor4.11(3)",
        true,
        Box::new(|cs| {
            if !cs.class.t2.holds {
                return None;
            }
            let ker = cs.kernel_mask;
            for x in alg.elements() {
                if ker >> x & 1 == 0 {
                    continue;
                }
                for y in alg.elements() {
                    if ker >> alg.cup(x, y) & 1 == 0 {
                        return Some(vec![x, y]);
                    }
                }
            }
            None
        }),
    );

    check(
        "Prop4.12(1)",
        true,
        Box::new(|cs| (!cs.kernel_flags.p1).then(Vec::new)),
    );

    check(
        "Prop4.12(2)",
        true,
        Box::new(|cs| (cs.class.t2.holds && !cs.kernel_flags.p2).then(Vec::new)),
    );

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::corpus;
    use crate::rat;

    fn state(alg_id: &str, fracs: &[(i64, i64)]) -> StateVector {
        StateVector {
            algebra: alg_id.to_string(),
            values: fracs.iter().map(|&(p, q)| rat(p, q)).collect(),
        }
    }

    #[test]
    fn b2_has_the_unique_state() {
        let alg = corpus::b2();
        match find_state(&alg, "b2", &[]).unwrap() {
            StateSearch::Found(s) => assert_eq!(s.values, vec![rat(0, 1), rat(1, 1)]),
            StateSearch::Infeasible(_) => panic!("B2 has a state"),
        }
    }

    #[test]
    fn contradictory_condition_is_certified_infeasible() {
        let alg = corpus::b2();
        let cond = LinearCondition {
            rel: lp::Rel::Eq,
            coeffs: vec![rat(1, 1), rat(0, 1)],
            rhs: rat(1, 1),
        };
        match find_state(&alg, "b2", &[cond.clone()]).unwrap() {
            StateSearch::Infeasible(cert) => {
                let lp = state_lp(&alg, &[cond]);
                assert!(cert.replay(&lp));
            }
            StateSearch::Found(_) => panic!("s(0)=1 contradicts s(0)=0"),
        }
    }

    #[test]
    fn b4_feasible_set_is_a_segment() {
        let alg = corpus::b4();
        // maximize and minimize s(a): the polytope is s(a)=t, s(a')=1−t
        for (sign, expect) in [(1i64, rat(1, 1)), (-1, rat(0, 1))] {
            let mut lp = state_lp(&alg, &[]);
            let mut obj = vec![rat(0, 1); 4];
            obj[1] = rat(sign, 1);
            lp.set_objective(obj);
            let (value, point) = match lp::solve(&lp).unwrap() {
                LpOutcome::Optimal { value, point } => (value, point),
                other => panic!("expected optimal, got {other:?}"),
            };
            assert_eq!(value * rat(sign, 1), expect);
            assert_eq!(point[2], rat(1, 1) - &point[1]);
        }
    }

    #[test]
    fn mo2_square_parameterization() {
        let alg = corpus::mo2();
        let cond_a = LinearCondition {
            rel: lp::Rel::Eq,
            coeffs: {
                let mut c = vec![rat(0, 1); 6];
                c[1] = rat(1, 1);
                c
            },
            rhs: rat(1, 3),
        };
        let lp = state_lp(&alg, &[cond_a]);
        let point = match lp::solve(&lp).unwrap() {
            LpOutcome::Optimal { point, .. } => point,
            other => panic!("expected optimal, got {other:?}"),
        };
        assert_eq!(point[2], rat(2, 3)); // s(a') = 1 − s(a)
        assert_eq!(point[4], rat(1, 1) - &point[3]); // s(b') = 1 − s(b)
    }

    #[test]
    fn zero_one_state_counts_match_corpus() {
        let expected = [("b2", 1), ("b4", 2), ("b8", 3), ("mo2", 4)];
        for (id, count) in expected {
            let alg = corpus::all()
                .into_iter()
                .find(|(n, _)| *n == id)
                .unwrap()
                .1;
            let states = enumerate_01_states(&alg, id, 14).unwrap();
            assert_eq!(states.len(), count, "{id}");
        }
    }

    #[test]
    fn mo2_alpha1_beta0_is_not_jauch_piron() {
        let alg = corpus::mo2();
        let s = state("mo2", &[(0, 1), (1, 1), (0, 1), (0, 1), (1, 1), (1, 1)]);
        let class = classify_state(&alg, &s).unwrap();
        assert!(!class.t1.holds);
        assert_eq!(class.t1.witness, Some((1, 3))); // (a, b)
        assert!(class.zero_one);
        assert_eq!(kernel(&alg, &s), 0b110010); // {a, b', 1}
    }

    #[test]
    fn b4_midpoint_state_is_a_valuation() {
        let alg = corpus::b4();
        let s = state("b4", &[(0, 1), (1, 2), (1, 2), (1, 1)]);
        let class = classify_state(&alg, &s).unwrap();
        assert!(class.t5.holds && class.t4.holds && class.t3.holds);
        assert!(class.t2.holds && class.t1.holds);
        assert!(!class.zero_one);
    }

    #[test]
    fn invalid_state_is_rejected() {
        let alg = corpus::b4();
        let s = state("b4", &[(0, 1), (1, 2), (1, 3), (1, 1)]);
        assert!(classify_state(&alg, &s).is_err());
    }

    #[test]
    fn corpus_state_spaces_are_unital_full_rich() {
        for (id, alg) in corpus::all() {
            let report = state_space_report(&alg, id).unwrap();
            assert!(report.feasible, "{id}");
            assert!(report.unital.holds, "{id} unital");
            assert!(report.full.holds, "{id} full");
            assert!(report.rich.holds, "{id} rich");
        }
    }

    #[test]
    fn sample_contains_zero_one_states_and_is_valid() {
        let alg = corpus::mo2();
        let report = state_space_report(&alg, "mo2").unwrap();
        let sample = sample_states(&alg, "mo2", &report, &SampleConfig::default()).unwrap();
        assert!(sample.len() >= 4);
        let zo = enumerate_01_states(&alg, "mo2", 14).unwrap();
        for s in &zo {
            assert!(sample.iter().any(|t| t.values == s.values));
        }
    }

    #[test]
    fn state_theorems_hold_on_corpus_samples() {
        for (id, alg) in corpus::all() {
            let report = state_space_report(&alg, id).unwrap();
            let sample = sample_states(&alg, id, &report, &SampleConfig::default()).unwrap();
            for entry in verify_state_theorems(&alg, &sample).unwrap() {
                assert!(
                    !entry.applicable || entry.holds,
                    "{id}: {} fails with {:?}",
                    entry.label,
                    entry.witness
                );
            }
        }
    }

    #[test]
    fn o6_state_space_is_unital_but_neither_full_nor_rich() {
        // states on the benzene-ring algebra form the segment
        // s(a)=s(b')=t, s(b)=s(a')=1−t, so unseparated pairs exist
        let alg = corpus::o6();
        let report = state_space_report(&alg, "o6").unwrap();
        assert!(report.feasible);
        assert!(report.unital.holds);
        assert!(!report.full.holds);
        assert!(!report.rich.holds);
        let sample = sample_states(&alg, "o6", &report, &SampleConfig::default()).unwrap();
        for s in &sample {
            assert_eq!(s.values[1], s.values[4]);
            assert_eq!(s.values[2], s.values[3]);
            let class = classify_state(&alg, s).unwrap();
            assert!(class.t1.holds, "every state here is Jauch-Piron");
        }
    }

    #[test]
    fn kernel_of_mo2_witness_state_is_qds_iff_jauch_piron() {
        let alg = corpus::mo2();
        let s = state("mo2", &[(0, 1), (1, 1), (0, 1), (0, 1), (1, 1), (1, 1)]);
        let flags = ds::classify_subset(&alg, kernel(&alg, &s));
        assert!(flags.is_kind(ds::DsKind::Ods));
        assert!(!flags.is_kind(ds::DsKind::Qds)); // matches T1 = false
    }
}
