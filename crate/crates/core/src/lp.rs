//! Exact linear programming over an ordered field.
//!
//! A dense two-phase simplex with the smallest-index (Bland) pivot rule, so
//! termination is guaranteed even on degenerate programs. All arithmetic is
//! exact in the scalar type `T`; the solver never compares against an
//! epsilon. Variables are unrestricted; box constraints are ordinary
//! inequalities supplied by the caller.
//!
//! Infeasibility is certified: the returned multipliers aggregate the
//! constraints into `0 ≤ c` with `c < 0`, and [`FarkasCertificate::replay`]
//! re-checks that contradiction against the original program.

use std::fmt;

use num_traits::{Num, Signed};

/// Scalar bound for exact LP work. `Rat` (and any other exact ordered
/// field in the `num` hierarchy, e.g. `Ratio<i64>`) satisfies it; floats do
/// not, because total order is required.
pub trait LpScalar: Clone + Num + Signed + Ord + fmt::Debug + fmt::Display {}

impl<T> LpScalar for T where T: Clone + Num + Signed + Ord + fmt::Debug + fmt::Display {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint<T> {
    pub coeffs: Vec<T>,
    pub rhs: T,
}

/// Relation of an extra side condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Eq,
    Le,
}

/// A side condition appended verbatim to a generated program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCondition<T> {
    pub rel: Rel,
    pub coeffs: Vec<T>,
    pub rhs: T,
}

/// `maximize objective·x` subject to equalities and `≤`-inequalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram<T> {
    pub num_vars: usize,
    pub equalities: Vec<Constraint<T>>,
    pub inequalities: Vec<Constraint<T>>,
    pub objective: Vec<T>,
}

impl<T: LpScalar> LinearProgram<T> {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            equalities: Vec::new(),
            inequalities: Vec::new(),
            objective: vec![T::zero(); num_vars],
        }
    }

    pub fn set_objective(&mut self, coeffs: Vec<T>) {
        self.objective = coeffs;
    }

    pub fn push_eq(&mut self, coeffs: Vec<T>, rhs: T) {
        self.equalities.push(Constraint { coeffs, rhs });
    }

    pub fn push_le(&mut self, coeffs: Vec<T>, rhs: T) {
        self.inequalities.push(Constraint { coeffs, rhs });
    }

    fn unit_row(&self, var: usize, sign: T) -> Vec<T> {
        let mut row = vec![T::zero(); self.num_vars];
        row[var] = sign;
        row
    }

    /// `x_var = value`.
    pub fn fix_var(&mut self, var: usize, value: T) {
        let row = self.unit_row(var, T::one());
        self.push_eq(row, value);
    }

    /// `x_var ≤ ub`.
    pub fn upper_bound(&mut self, var: usize, ub: T) {
        let row = self.unit_row(var, T::one());
        self.push_le(row, ub);
    }

    /// `x_var ≥ lb`.
    pub fn lower_bound(&mut self, var: usize, lb: T) {
        let row = self.unit_row(var, -T::one());
        self.push_le(row, -lb);
    }

    pub fn push_condition(&mut self, cond: LinearCondition<T>) {
        match cond.rel {
            Rel::Eq => self.push_eq(cond.coeffs, cond.rhs),
            Rel::Le => self.push_le(cond.coeffs, cond.rhs),
        }
    }

    /// Exact satisfaction check of every constraint at `point`.
    pub fn is_feasible_point(&self, point: &[T]) -> bool {
        if point.len() != self.num_vars {
            return false;
        }
        self.equalities
            .iter()
            .all(|c| dot(&c.coeffs, point) == c.rhs)
            && self
                .inequalities
                .iter()
                .all(|c| dot(&c.coeffs, point) <= c.rhs)
    }

    pub fn objective_value(&self, point: &[T]) -> T {
        dot(&self.objective, point)
    }
}

impl<T: LpScalar> fmt::Display for LinearProgram<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |coeffs: &[T]| {
            coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "max: {}", row(&self.objective))?;
        for c in &self.equalities {
            writeln!(f, "{} = {}", row(&c.coeffs), c.rhs)?;
        }
        for c in &self.inequalities {
            writeln!(f, "{} <= {}", row(&c.coeffs), c.rhs)?;
        }
        Ok(())
    }
}

fn dot<T: LpScalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Multipliers aggregating the constraints to a contradiction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate<T> {
    pub eq_multipliers: Vec<T>,
    /// Nonnegative multipliers over the inequalities.
    pub ineq_multipliers: Vec<T>,
}

impl<T: LpScalar> FarkasCertificate<T> {
    /// Re-checks the contradiction: the multiplier combination of the
    /// constraint rows vanishes on every variable, the inequality
    /// multipliers are nonnegative, and the combined right-hand side is
    /// strictly negative.
    pub fn replay(&self, lp: &LinearProgram<T>) -> bool {
        if self.eq_multipliers.len() != lp.equalities.len()
            || self.ineq_multipliers.len() != lp.inequalities.len()
        {
            return false;
        }
        if self.ineq_multipliers.iter().any(|w| w < &T::zero()) {
            return false;
        }
        let mut combo = vec![T::zero(); lp.num_vars];
        let mut rhs = T::zero();
        for (u, c) in self.eq_multipliers.iter().zip(&lp.equalities) {
            for (acc, a) in combo.iter_mut().zip(&c.coeffs) {
                *acc = acc.clone() + u.clone() * a.clone();
            }
            rhs = rhs + u.clone() * c.rhs.clone();
        }
        for (w, c) in self.ineq_multipliers.iter().zip(&lp.inequalities) {
            for (acc, a) in combo.iter_mut().zip(&c.coeffs) {
                *acc = acc.clone() + w.clone() * a.clone();
            }
            rhs = rhs + w.clone() * c.rhs.clone();
        }
        combo.iter().all(|v| v.is_zero()) && rhs < T::zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome<T> {
    Optimal { value: T, point: Vec<T> },
    Infeasible(FarkasCertificate<T>),
    Unbounded,
}

impl<T> LpOutcome<T> {
    pub fn optimal(&self) -> Option<(&T, &[T])> {
        match self {
            LpOutcome::Optimal { value, point } => Some((value, point)),
            _ => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible(_))
    }
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum LpError {
    #[error("malformed program: {0}")]
    MalformedProgram(String),
}

const MAX_PIVOTS: usize = 200_000;

/// Dense simplex tableau over standard-form nonnegative variables
/// `x⁺, x⁻, slacks, artificials`.
struct Tableau<T> {
    cols: usize,
    /// Constraint rows, each of length `cols + 1` (rhs last).
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    art_start: usize,
    /// Sign applied to each original row during rhs normalization.
    row_sign: Vec<bool>, // true = flipped
}

pub fn solve<T: LpScalar>(lp: &LinearProgram<T>) -> Result<LpOutcome<T>, LpError> {
    let nv = lp.num_vars;
    if lp.objective.len() != nv {
        return Err(LpError::MalformedProgram(format!(
            "objective has {} coefficients, expected {nv}",
            lp.objective.len()
        )));
    }
    for (i, c) in lp.equalities.iter().chain(&lp.inequalities).enumerate() {
        if c.coeffs.len() != nv {
            return Err(LpError::MalformedProgram(format!(
                "constraint {i} has {} coefficients, expected {nv}",
                c.coeffs.len()
            )));
        }
    }

    let ne = lp.equalities.len();
    let ni = lp.inequalities.len();
    let m = ne + ni;
    let art_start = 2 * nv + ni;
    let cols = art_start + m;

    let mut t = Tableau {
        cols,
        rows: Vec::with_capacity(m),
        basis: Vec::with_capacity(m),
        art_start,
        row_sign: Vec::with_capacity(m),
    };

    for (k, c) in lp.equalities.iter().chain(&lp.inequalities).enumerate() {
        let flip = c.rhs < T::zero();
        let sgn = if flip { -T::one() } else { T::one() };
        let mut row = vec![T::zero(); cols + 1];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = sgn.clone() * a.clone();
            row[nv + j] = -row[j].clone();
        }
        if k >= ne {
            row[2 * nv + (k - ne)] = sgn.clone();
        }
        row[art_start + k] = T::one();
        row[cols] = sgn * c.rhs.clone();
        t.rows.push(row);
        t.basis.push(art_start + k);
        t.row_sign.push(flip);
    }

    // phase 1: minimize the artificial sum
    let phase1_cost: Vec<T> = (0..cols)
        .map(|j| if j >= art_start { T::one() } else { T::zero() })
        .collect();
    run_simplex(&mut t, &phase1_cost, cols)?;
    let z1 = objective_of(&t, &phase1_cost);
    if z1 > T::zero() {
        // dual multipliers off the artificial columns certify infeasibility
        let mut mult = Vec::with_capacity(m);
        for k in 0..m {
            let mut y_k = T::zero();
            for (i, &b) in t.basis.iter().enumerate() {
                if phase1_cost[b].is_one() {
                    y_k = y_k + t.rows[i][art_start + k].clone();
                }
            }
            let sgn = if t.row_sign[k] { T::one() } else { -T::one() };
            mult.push(sgn * y_k);
        }
        let cert = FarkasCertificate {
            eq_multipliers: mult[..ne].to_vec(),
            ineq_multipliers: mult[ne..].to_vec(),
        };
        debug_assert!(cert.replay(lp), "Farkas certificate failed to replay");
        return Ok(LpOutcome::Infeasible(cert));
    }

    drive_out_artificials(&mut t);

    // phase 2: minimize the negated objective over structural columns
    let mut phase2_cost = vec![T::zero(); cols];
    for (j, c) in lp.objective.iter().enumerate() {
        phase2_cost[j] = -c.clone();
        phase2_cost[nv + j] = c.clone();
    }
    let unbounded = !run_simplex(&mut t, &phase2_cost, art_start)?;
    if unbounded {
        return Ok(LpOutcome::Unbounded);
    }

    let mut point = vec![T::zero(); nv];
    for (i, &b) in t.basis.iter().enumerate() {
        let v = t.rows[i][t.cols].clone();
        if b < nv {
            point[b] = point[b].clone() + v;
        } else if b < 2 * nv {
            point[b - nv] = point[b - nv].clone() - v;
        }
    }
    let value = lp.objective_value(&point);
    debug_assert!(lp.is_feasible_point(&point), "optimal point fails replay");
    Ok(LpOutcome::Optimal { value, point })
}

fn objective_of<T: LpScalar>(t: &Tableau<T>, cost: &[T]) -> T {
    let mut z = T::zero();
    for (i, &b) in t.basis.iter().enumerate() {
        if !cost[b].is_zero() {
            z = z + cost[b].clone() * t.rows[i][t.cols].clone();
        }
    }
    z
}

/// Bland-rule simplex minimizing `cost`. Columns at or beyond
/// `enterable_limit` never enter the basis. Returns `false` when the
/// program is unbounded below.
fn run_simplex<T: LpScalar>(
    t: &mut Tableau<T>,
    cost: &[T],
    enterable_limit: usize,
) -> Result<bool, LpError> {
    for _ in 0..MAX_PIVOTS {
        // reduced costs from scratch: c̄_j = c_j − c_B · B⁻¹A_j
        let mut entering = None;
        'cols: for j in 0..enterable_limit {
            if t.basis.contains(&j) {
                continue;
            }
            let mut red = cost[j].clone();
            for (i, &b) in t.basis.iter().enumerate() {
                if !cost[b].is_zero() {
                    red = red - cost[b].clone() * t.rows[i][j].clone();
                }
            }
            if red < T::zero() {
                entering = Some(j);
                break 'cols;
            }
        }
        let q = match entering {
            Some(q) => q,
            None => return Ok(true),
        };

        // ratio test; ties resolved by smallest basis index (Bland)
        let mut leave: Option<(usize, T)> = None;
        for i in 0..t.rows.len() {
            let a = &t.rows[i][q];
            if a > &T::zero() {
                let ratio = t.rows[i][t.cols].clone() / a.clone();
                let better = match &leave {
                    None => true,
                    Some((r, best)) => {
                        ratio < *best || (ratio == *best && t.basis[i] < t.basis[*r])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let r = match leave {
            Some((r, _)) => r,
            None => return Ok(false),
        };
        pivot(t, r, q);
    }
    Err(LpError::MalformedProgram(
        "pivot limit exceeded (anti-cycling guard)".into(),
    ))
}

fn pivot<T: LpScalar>(t: &mut Tableau<T>, r: usize, q: usize) {
    let p = t.rows[r][q].clone();
    for v in t.rows[r].iter_mut() {
        *v = v.clone() / p.clone();
    }
    let pivot_row = t.rows[r].clone();
    for (i, row) in t.rows.iter_mut().enumerate() {
        if i == r || row[q].is_zero() {
            continue;
        }
        let f = row[q].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            *v = v.clone() - f.clone() * pv.clone();
        }
    }
    t.basis[r] = q;
}

/// Pivots basic artificials onto structural columns; rows that cannot be
/// repaired are redundant (their rhs is zero after phase 1) and are dropped.
fn drive_out_artificials<T: LpScalar>(t: &mut Tableau<T>) {
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= t.art_start {
            let q = (0..t.art_start).find(|&j| !t.rows[i][j].is_zero());
            match q {
                Some(q) => pivot(t, i, q),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
}
