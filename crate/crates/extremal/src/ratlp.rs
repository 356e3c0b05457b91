//! Exact rational linear feasibility with replayable certificates.
//!
//! Systems mix weak relations (`≤`, `≥`, `=`) with strict ones (`<`, `>`).
//! Strict relations are compiled to weak ones sharing a single margin
//! variable which the solver maximizes (capped at 1 so the problem stays
//! bounded); the strict system is feasible exactly when the margin can be
//! made positive. An infeasible system comes with a nonnegative combination
//! of its constraints (signed multipliers allowed on equalities) that derives
//! a contradiction. Both witnesses and certificates are replayed against the
//! input in exact arithmetic before being returned.
//!
//! The solver is a textbook two-phase simplex over arbitrary-precision
//! rationals using Bland's rule, which guarantees termination. Every system
//! in this crate is tiny (well under a hundred variables), so no effort is
//! spent on sparsity or revised-form updates.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Builds a rational from an integer numerator and denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Relation of a linear constraint `coeffs · x  (rel)  bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Lt,
    Ge,
    Gt,
    Eq,
}

impl Relation {
    /// Whether the relation is strict (`<` or `>`).
    pub fn is_strict(self) -> bool {
        matches!(self, Relation::Lt | Relation::Gt)
    }
}

/// A single linear constraint `coeffs · x  (relation)  bound`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub bound: Rat,
}

/// A finite system of linear constraints over `num_vars` free (unsigned,
/// unbounded) rational variables.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    num_vars: usize,
    constraints: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Appends a constraint, validating the coefficient vector length.
    pub fn push(&mut self, coeffs: Vec<Rat>, relation: Relation, bound: Rat) -> Result<()> {
        if coeffs.len() != self.num_vars {
            return Err(Error::invalid(format!(
                "constraint has {} coefficients but the system has {} variables",
                coeffs.len(),
                self.num_vars
            )));
        }
        self.constraints.push(Constraint {
            coeffs,
            relation,
            bound,
        });
        Ok(())
    }
}

/// Outcome of a feasibility query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult {
    /// A point satisfying every constraint (strict ones strictly).
    Feasible(Vec<Rat>),
    /// Per-constraint multipliers combining the constraints into a
    /// contradiction; nonnegative except on equalities. See
    /// [`verify_certificate`] for the exact replay rule.
    Infeasible(Vec<Rat>),
}

/// Checks a candidate point against every constraint of the system.
pub fn verify_witness(sys: &LinearSystem, point: &[Rat]) -> bool {
    if point.len() != sys.num_vars {
        return false;
    }
    sys.constraints.iter().all(|c| {
        let lhs: Rat = c
            .coeffs
            .iter()
            .zip(point)
            .map(|(a, x)| a * x)
            .fold(Rat::zero(), |acc, t| acc + t);
        match c.relation {
            Relation::Le => lhs <= c.bound,
            Relation::Lt => lhs < c.bound,
            Relation::Ge => lhs >= c.bound,
            Relation::Gt => lhs > c.bound,
            Relation::Eq => lhs == c.bound,
        }
    })
}

/// Replays an infeasibility certificate. Each constraint is oriented to a
/// `≤`-form (`≥`/`>` rows are negated; equalities kept as given and allowed
/// signed multipliers). The certificate is valid when the multipliers are
/// nonnegative on inequalities, the combined coefficient vector vanishes, and
/// the combined bound is negative — or zero while some strict constraint
/// carries positive weight, in which case `0 < 0` is derived.
pub fn verify_certificate(sys: &LinearSystem, multipliers: &[Rat]) -> bool {
    if multipliers.len() != sys.constraints.len() {
        return false;
    }
    let mut combined = vec![Rat::zero(); sys.num_vars];
    let mut total = Rat::zero();
    let mut strict_weight = false;
    let mut any_positive = false;
    for (c, m) in sys.constraints.iter().zip(multipliers) {
        if m.is_zero() {
            continue;
        }
        any_positive = true;
        // Orientation: ≤/</= use (coeffs, bound) as-is with the multiplier
        // required nonnegative for inequalities; ≥/> are negated first.
        let sign = match c.relation {
            Relation::Le | Relation::Lt => {
                if m.is_negative() {
                    return false;
                }
                Rat::one()
            }
            Relation::Ge | Relation::Gt => {
                if m.is_negative() {
                    return false;
                }
                -Rat::one()
            }
            Relation::Eq => Rat::one(),
        };
        let factor = m * &sign;
        for (acc, a) in combined.iter_mut().zip(&c.coeffs) {
            *acc += a * &factor;
        }
        total += &c.bound * &factor;
        if c.relation.is_strict() {
            strict_weight = true;
        }
    }
    any_positive
        && combined.iter().all(|v| v.is_zero())
        && (total.is_negative() || (total.is_zero() && strict_weight))
}

/// One row of the internal standard-form tableau bookkeeping.
struct Row {
    coeffs: Vec<Rat>,
    bound: Rat,
    is_eq: bool,
    has_margin: bool,
}

/// Decides feasibility of the system, returning either a satisfying point or
/// a replay-checked infeasibility certificate. Deterministic: identical
/// systems produce identical outputs.
pub fn feasible(sys: &LinearSystem) -> Result<LpResult> {
    let nv = sys.num_vars;
    let n_orig = sys.constraints.len();
    if n_orig == 0 {
        return Ok(LpResult::Feasible(vec![Rat::zero(); nv]));
    }
    let has_strict = sys.constraints.iter().any(|c| c.relation.is_strict());

    // Orient every constraint to `g·x (+ margin) ≤ h` or `g·x = h`.
    let mut rows: Vec<Row> = Vec::with_capacity(n_orig + 1);
    for c in &sys.constraints {
        let (coeffs, bound) = match c.relation {
            Relation::Le | Relation::Lt | Relation::Eq => (c.coeffs.clone(), c.bound.clone()),
            Relation::Ge | Relation::Gt => (
                c.coeffs.iter().map(|a| -a.clone()).collect(),
                -c.bound.clone(),
            ),
        };
        rows.push(Row {
            coeffs,
            bound,
            is_eq: c.relation == Relation::Eq,
            has_margin: c.relation.is_strict(),
        });
    }
    if has_strict {
        // Cap the shared margin so maximizing it stays bounded.
        rows.push(Row {
            coeffs: vec![Rat::zero(); nv],
            bound: Rat::one(),
            is_eq: false,
            has_margin: true,
        });
    }
    let m = rows.len();

    // Nonnegative column layout: x⁺ | x⁻ | margin? | slacks | artificials.
    let margin_col = 2 * nv;
    let slack_start = margin_col + usize::from(has_strict);
    let n_slack = rows.iter().filter(|r| !r.is_eq).count();
    let art_start = slack_start + n_slack;
    let ncols = art_start + m;
    let rhs = ncols;

    let mut t = vec![vec![Rat::zero(); ncols + 1]; m];
    let mut sigma = vec![false; m]; // row negated during rhs normalization
    let mut next_slack = slack_start;
    for (i, row) in rows.iter().enumerate() {
        let neg = row.bound.is_negative();
        sigma[i] = neg;
        let apply = |v: Rat| if neg { -v } else { v };
        for j in 0..nv {
            let a = apply(row.coeffs[j].clone());
            t[i][nv + j] = -a.clone();
            t[i][j] = a;
        }
        if row.has_margin {
            t[i][margin_col] = apply(Rat::one());
        }
        if !row.is_eq {
            t[i][next_slack] = apply(Rat::one());
            next_slack += 1;
        }
        t[i][art_start + i] = Rat::one();
        t[i][rhs] = apply(row.bound.clone());
    }
    let mut basis: Vec<usize> = (0..m).map(|i| art_start + i).collect();

    // Phase 1: drive the artificials to zero.
    let mut cost1 = vec![Rat::zero(); ncols];
    for c in cost1.iter_mut().skip(art_start) {
        *c = Rat::one();
    }
    run_simplex(&mut t, &mut basis, &cost1, art_start)?;
    if objective(&t, &basis, &cost1).is_positive() {
        let cert = dual_multipliers(&t, &basis, &cost1, art_start, &sigma, n_orig);
        if !verify_certificate(sys, &cert) {
            return Err(Error::invalid(
                "internal: infeasibility certificate failed replay",
            ));
        }
        return Ok(LpResult::Infeasible(cert));
    }

    // Drive any artificial still basic (at value zero) out of the basis, so
    // later pivots can never lift it back to a positive value. A row with no
    // nonzero structural entry is redundant; its artificial stays basic but
    // inert, since every eligible column is zero there.
    for i in 0..m {
        if basis[i] >= art_start {
            if let Some(j) = (0..art_start).find(|&j| !t[i][j].is_zero()) {
                pivot(&mut t, &mut basis, i, j);
            }
        }
    }

    if has_strict {
        // Phase 2: maximize the shared margin (minimize its negation).
        let mut cost2 = vec![Rat::zero(); ncols];
        cost2[margin_col] = -Rat::one();
        run_simplex(&mut t, &mut basis, &cost2, art_start)?;
        let margin = -objective(&t, &basis, &cost2);
        if !margin.is_positive() {
            let cert = dual_multipliers(&t, &basis, &cost2, art_start, &sigma, n_orig);
            if !verify_certificate(sys, &cert) {
                return Err(Error::invalid(
                    "internal: infeasibility certificate failed replay",
                ));
            }
            return Ok(LpResult::Infeasible(cert));
        }
    }

    let value = |col: usize| -> Rat {
        basis
            .iter()
            .position(|&b| b == col)
            .map(|i| t[i][rhs].clone())
            .unwrap_or_else(Rat::zero)
    };
    let point: Vec<Rat> = (0..nv).map(|j| value(j) - value(nv + j)).collect();
    if !verify_witness(sys, &point) {
        return Err(Error::invalid("internal: witness failed replay"));
    }
    Ok(LpResult::Feasible(point))
}

/// Runs the simplex loop to optimality with Bland's rule. Columns at or past
/// `art_start` (the artificials) are never allowed to enter the basis: once
/// out they stay out, which keeps phase 1 sound and lets phase 2 reuse their
/// columns as an identity block for dual extraction.
fn run_simplex(
    t: &mut [Vec<Rat>],
    basis: &mut [usize],
    cost: &[Rat],
    art_start: usize,
) -> Result<()> {
    let m = t.len();
    let rhs = t[0].len() - 1;
    loop {
        // Bland: entering column = smallest eligible index with negative
        // reduced cost r_j = c_j − c_B · T_j.
        let mut entering = None;
        'cols: for j in 0..art_start {
            let mut r = cost[j].clone();
            for i in 0..m {
                if !t[i][j].is_zero() && !cost[basis[i]].is_zero() {
                    r -= &cost[basis[i]] * &t[i][j];
                }
            }
            if r.is_negative() {
                entering = Some(j);
                break 'cols;
            }
        }
        let Some(j) = entering else { return Ok(()) };
        // Ratio test; ties broken by smallest basic column index (Bland).
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if t[i][j].is_positive() {
                let ratio = &t[i][rhs] / &t[i][j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            return Err(Error::invalid("internal: unbounded pivot column"));
        };
        pivot(t, basis, pr, j);
    }
}

fn pivot(t: &mut [Vec<Rat>], basis: &mut [usize], pr: usize, pc: usize) {
    let m = t.len();
    let width = t[0].len();
    let p = t[pr][pc].clone();
    for v in t[pr].iter_mut() {
        *v /= &p;
    }
    for i in 0..m {
        if i == pr || t[i][pc].is_zero() {
            continue;
        }
        let f = t[i][pc].clone();
        for k in 0..width {
            let d = &t[pr][k] * &f;
            t[i][k] -= d;
        }
    }
    basis[pr] = pc;
}

/// Current objective value `c_B · b̃`.
fn objective(t: &[Vec<Rat>], basis: &[usize], cost: &[Rat]) -> Rat {
    let rhs = t[0].len() - 1;
    basis
        .iter()
        .zip(t)
        .map(|(&b, row)| &cost[b] * &row[rhs])
        .fold(Rat::zero(), |acc, v| acc + v)
}

/// Extracts per-original-constraint multipliers from the simplex duals. The
/// dual of normalized row `i` is read off the artificial column `e_i`; the
/// multiplier for the oriented row is its negation, undoing the rhs sign
/// normalization. The synthetic margin-cap row (if any) is dropped — doing so
/// only strengthens the derived contradiction.
fn dual_multipliers(
    t: &[Vec<Rat>],
    basis: &[usize],
    cost: &[Rat],
    art_start: usize,
    sigma: &[bool],
    n_orig: usize,
) -> Vec<Rat> {
    let m = t.len();
    (0..n_orig)
        .map(|i| {
            let mut pi = Rat::zero();
            for r in 0..m {
                if !cost[basis[r]].is_zero() {
                    pi += &cost[basis[r]] * &t[r][art_start + i];
                }
            }
            if sigma[i] {
                pi
            } else {
                -pi
            }
        })
        .collect()
}
