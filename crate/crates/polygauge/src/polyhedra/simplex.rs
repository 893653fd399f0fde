//! Exact two-phase primal simplex over the rationals.
//!
//! Free variables are split as x = x⁺ − x⁻; every constraint row gets a
//! slack, and rows infeasible at the slack basis get an artificial. Pivoting
//! follows Bland's rule throughout (lowest-index entering column, lowest
//! basic-variable index on ratio ties), so the method terminates and is
//! deterministic for a fixed input.
//!
//! Every result is re-verified before it is returned: optimal points are
//! substituted into all constraints together with an exact dual (Farkas)
//! certificate of optimality, and unbounded rays are checked to lie in the
//! recession cone while strictly improving the objective.

use num_traits::{One, Signed, Zero};

use crate::linalg::dot;
use crate::scalar::Rat;

/// Outcome of one solve, in original x-coordinates.
#[derive(Debug)]
pub(crate) enum RawOutcome {
    Optimal { value: Rat, point: Vec<Rat> },
    Unbounded { ray: Vec<Rat> },
    Infeasible,
}

/// Maximize `objective · x` over `{x : rows[i] · x <= rhs[i]}` with x free.
pub(crate) fn maximize(objective: &[Rat], rows: &[Vec<Rat>], rhs: &[Rat]) -> RawOutcome {
    let n = objective.len();
    let m = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));

    // Standard-form columns: x⁺ (n), x⁻ (n), slacks (m), artificials (on demand).
    let slack_start = 2 * n;
    let art_start = slack_start + m;

    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut b: Vec<Rat> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut n_art = 0usize;

    for (i, row) in rows.iter().enumerate() {
        let flip = rhs[i].is_negative();
        let mut t = vec![Rat::zero(); art_start];
        for (j, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (p, q) = if flip {
                (-v, v.clone())
            } else {
                (v.clone(), -v)
            };
            t[j] = p;
            t[n + j] = q;
        }
        t[slack_start + i] = if flip { -Rat::one() } else { Rat::one() };
        if flip {
            basis.push(art_start + n_art);
            n_art += 1;
        } else {
            basis.push(slack_start + i);
        }
        b.push(if flip { -&rhs[i] } else { rhs[i].clone() });
        a.push(t);
    }
    // Append artificial columns.
    let ncols = art_start + n_art;
    let mut next_art = art_start;
    for (i, row) in a.iter_mut().enumerate() {
        row.resize(ncols, Rat::zero());
        if basis[i] >= art_start {
            row[next_art] = Rat::one();
            next_art += 1;
        }
    }

    let mut tab = Tableau {
        a,
        b,
        basis,
        ncols,
        last_ray: None,
    };

    // Phase 1: minimize the sum of artificials.
    if n_art > 0 {
        let mut phase1 = vec![Rat::zero(); ncols];
        for c in phase1.iter_mut().skip(art_start) {
            *c = Rat::one();
        }
        let (mut cost, mut cost_rhs) = tab.reduced_costs(&phase1);
        if tab.iterate(&mut cost, &mut cost_rhs, ncols).is_none() {
            unreachable!("phase-1 objective is bounded below by zero");
        }
        let opt = -cost_rhs;
        if opt.is_positive() {
            return RawOutcome::Infeasible;
        }
        debug_assert!(opt.is_zero());
        tab.expel_artificials(art_start);
    }

    // Phase 2: minimize -objective in split coordinates.
    let mut obj = vec![Rat::zero(); ncols];
    for (j, v) in objective.iter().enumerate() {
        obj[j] = -v;
        obj[n + j] = v.clone();
    }
    let (mut cost, mut cost_rhs) = tab.reduced_costs(&obj);
    match tab.iterate(&mut cost, &mut cost_rhs, art_start) {
        Some(()) => {
            let y = tab.solution();
            let point: Vec<Rat> = (0..n).map(|j| &y[j] - &y[n + j]).collect();
            let value = dot(objective, &point);
            verify_optimal(objective, rows, rhs, &point, &value, &cost, slack_start, m);
            RawOutcome::Optimal { value, point }
        }
        None => {
            let y = tab.last_ray.take().expect("unbounded exit sets a ray");
            let ray: Vec<Rat> = (0..n).map(|j| &y[j] - &y[n + j]).collect();
            verify_ray(objective, rows, &ray);
            RawOutcome::Unbounded { ray }
        }
    }
}

struct Tableau {
    a: Vec<Vec<Rat>>,
    b: Vec<Rat>,
    basis: Vec<usize>,
    ncols: usize,
    last_ray: Option<Vec<Rat>>,
}

impl Tableau {
    /// Reduced costs of `obj` for the current basis: c − c_B B⁻¹ A.
    fn reduced_costs(&self, obj: &[Rat]) -> (Vec<Rat>, Rat) {
        let mut cost = obj.to_vec();
        let mut cost_rhs = Rat::zero();
        for (r, &bv) in self.basis.iter().enumerate() {
            let f = obj[bv].clone();
            if f.is_zero() {
                continue;
            }
            for (j, v) in self.a[r].iter().enumerate() {
                if !v.is_zero() {
                    let t = v * &f;
                    cost[j] -= t;
                }
            }
            cost_rhs -= &f * &self.b[r];
        }
        (cost, cost_rhs)
    }

    /// Bland's-rule iteration, minimizing. Entering columns are restricted
    /// to indices below `enter_limit` (used to bar artificials in phase 2).
    /// Returns Some(()) at optimality, None if unbounded (recording the
    /// improving ray in standard-form coordinates).
    fn iterate(&mut self, cost: &mut [Rat], cost_rhs: &mut Rat, enter_limit: usize) -> Option<()> {
        loop {
            let Some(entering) = (0..enter_limit).find(|&j| cost[j].is_negative()) else {
                return Some(());
            };
            let mut best: Option<(Rat, usize)> = None;
            for r in 0..self.a.len() {
                let v = &self.a[r][entering];
                if !v.is_positive() {
                    continue;
                }
                let ratio = &self.b[r] / v;
                best = match best {
                    None => Some((ratio, r)),
                    Some((cur, cr)) => {
                        if ratio < cur || (ratio == cur && self.basis[r] < self.basis[cr]) {
                            Some((ratio, r))
                        } else {
                            Some((cur, cr))
                        }
                    }
                };
            }
            let Some((_, leave_row)) = best else {
                self.last_ray = Some(self.ray(entering));
                return None;
            };
            self.pivot(leave_row, entering, cost, cost_rhs);
        }
    }

    fn pivot(&mut self, r: usize, c: usize, cost: &mut [Rat], cost_rhs: &mut Rat) {
        let inv = self.a[r][c].recip();
        if !inv.is_one() {
            for v in self.a[r].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
            self.b[r] *= &inv;
        }
        let nz: Vec<usize> = (0..self.ncols)
            .filter(|&j| !self.a[r][j].is_zero())
            .collect();
        for i in 0..self.a.len() {
            if i == r || self.a[i][c].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut self.a[i][c], Rat::zero());
            for &j in &nz {
                if j == c {
                    continue;
                }
                let t = &self.a[r][j] * &f;
                self.a[i][j] -= t;
            }
            let t = &self.b[r] * &f;
            self.b[i] -= t;
        }
        let f = std::mem::replace(&mut cost[c], Rat::zero());
        if !f.is_zero() {
            for &j in &nz {
                if j == c {
                    continue;
                }
                let t = &self.a[r][j] * &f;
                cost[j] -= t;
            }
            let t = &self.b[r] * &f;
            *cost_rhs -= t;
        }
        self.basis[r] = c;
    }

    /// Pivot artificial variables out of the basis where possible. A row
    /// whose artificial cannot leave is identically zero on the real
    /// columns (redundant); it is kept and never pivots again.
    fn expel_artificials(&mut self, art_start: usize) {
        let mut dummy_cost = vec![Rat::zero(); self.ncols];
        let mut dummy_rhs = Rat::zero();
        for r in 0..self.a.len() {
            if self.basis[r] < art_start {
                continue;
            }
            debug_assert!(self.b[r].is_zero());
            if let Some(c) = (0..art_start).find(|&j| !self.a[r][j].is_zero()) {
                self.pivot(r, c, &mut dummy_cost, &mut dummy_rhs);
            }
        }
    }

    fn solution(&self) -> Vec<Rat> {
        let mut y = vec![Rat::zero(); self.ncols];
        for (r, &bv) in self.basis.iter().enumerate() {
            y[bv] = self.b[r].clone();
        }
        y
    }

    /// Improving ray for an entering column with no positive entries.
    fn ray(&self, entering: usize) -> Vec<Rat> {
        let mut y = vec![Rat::zero(); self.ncols];
        y[entering] = Rat::one();
        for (r, &bv) in self.basis.iter().enumerate() {
            if !self.a[r][entering].is_zero() {
                y[bv] = -&self.a[r][entering];
            }
        }
        y
    }
}

/// Exact re-verification of an optimal solution: primal feasibility plus a
/// dual vector recovered from the slack reduced costs certifying that no
/// better value exists.
#[allow(clippy::too_many_arguments)]
fn verify_optimal(
    objective: &[Rat],
    rows: &[Vec<Rat>],
    rhs: &[Rat],
    point: &[Rat],
    value: &Rat,
    cost: &[Rat],
    slack_start: usize,
    m: usize,
) {
    for (row, bound) in rows.iter().zip(rhs) {
        assert!(
            dot(row, point) <= *bound,
            "optimal point violates a constraint"
        );
    }
    // Dual y ≥ 0 with yᵀA = objective and yᵀb = value. Whether or not row i
    // was flipped at setup, y_i equals the final reduced cost of its slack.
    let mut y = Vec::with_capacity(m);
    for i in 0..m {
        let yi = cost[slack_start + i].clone();
        assert!(
            !yi.is_negative(),
            "dual certificate has a negative multiplier"
        );
        y.push(yi);
    }
    for j in 0..objective.len() {
        let mut s = Rat::zero();
        for (i, row) in rows.iter().enumerate() {
            if !y[i].is_zero() && !row[j].is_zero() {
                s += &y[i] * &row[j];
            }
        }
        assert_eq!(
            s, objective[j],
            "dual certificate does not reproduce the objective"
        );
    }
    let dual_value = dot(&y, rhs);
    assert_eq!(&dual_value, value, "strong duality check failed");
}

fn verify_ray(objective: &[Rat], rows: &[Vec<Rat>], ray: &[Rat]) {
    assert!(
        dot(objective, ray).is_positive(),
        "ray does not improve the objective"
    );
    for row in rows {
        assert!(
            !dot(row, ray).is_positive(),
            "ray leaves the recession cone"
        );
    }
}
