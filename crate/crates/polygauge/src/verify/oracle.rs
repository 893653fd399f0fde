//! Floating-point sphere-sampling oracle for the index of symmetry.
//!
//! This is the one place in the crate where floats appear. It never feeds a
//! decision: it produces an upper bound on c(X) by brute force so that the
//! exact facet-LP value can be checked against something computed by a
//! completely different route.
//!
//! The sampler draws random directions, projects them onto the unit sphere
//! {‖x| = 1}, and records the reverse norm; the best basins found are then
//! refined with shrinking local perturbations. Every recorded value is an
//! upper bound on c(X) up to float roundoff, and with enough samples the
//! minimum lands within ~1e-6 of the true minimum on desk-scale gauges.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::gauge::PolyhedralGauge;
use num_traits::ToPrimitive;

pub struct SphereOracle {
    gens: Vec<Vec<f64>>,
    dim: usize,
}

/// Result of a sampling run.
pub struct OracleResult {
    /// The smallest reverse norm observed over all sphere samples.
    pub min_reverse: f64,
    /// How many sphere points were actually evaluated.
    pub samples: usize,
}

impl SphereOracle {
    pub fn new(g: &PolyhedralGauge) -> Self {
        let gens = g
            .generators()
            .iter()
            .map(|row| row.iter().map(|v| v.to_f64().unwrap()).collect())
            .collect();
        SphereOracle { gens, dim: g.dim() }
    }

    fn eval(&self, x: &[f64]) -> f64 {
        let mut best = f64::NEG_INFINITY;
        for g in &self.gens {
            let mut s = 0.0;
            for (a, b) in g.iter().zip(x) {
                s += a * b;
            }
            if s > best {
                best = s;
            }
        }
        best
    }

    fn eval_reverse(&self, x: &[f64]) -> f64 {
        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        self.eval(&neg)
    }

    /// Brute-force minimum of the reverse norm over ≥ `budget` sphere
    /// samples: a global pass followed by local refinement of the best
    /// separated basins.
    pub fn min_reverse(&self, rng: &mut ChaCha8Rng, budget: usize) -> OracleResult {
        let coarse_budget = (budget * 3) / 5;
        let mut samples = 0usize;

        // best separated candidates from the global pass
        const CANDIDATES: usize = 32;
        let mut pool: Vec<(f64, Vec<f64>)> = Vec::new();
        let record = |val: f64, x: &[f64], pool: &mut Vec<(f64, Vec<f64>)>| {
            pool.push((val, x.to_vec()));
            pool.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
            if pool.len() > 4 * CANDIDATES {
                pool.truncate(2 * CANDIDATES);
            }
        };

        while samples < coarse_budget {
            let u = self.random_direction(rng);
            let s = self.eval(&u);
            samples += 1;
            if s <= 1e-12 {
                continue;
            }
            let x: Vec<f64> = u.iter().map(|v| v / s).collect();
            let val = self.eval_reverse(&x);
            if pool.len() < 4 * CANDIDATES || val < pool.last().unwrap().0 {
                record(val, &x, &mut pool);
            }
        }
        pool.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut candidates: Vec<(f64, Vec<f64>)> = Vec::new();
        for (val, x) in pool {
            let separated = candidates.iter().all(|(_, c)| {
                let d2: f64 = c.iter().zip(&x).map(|(a, b)| (a - b) * (a - b)).sum();
                d2 > 0.02
            });
            if separated {
                candidates.push((val, x));
            }
            if candidates.len() >= CANDIDATES {
                break;
            }
        }
        if candidates.is_empty() {
            // every direction had ‖u| ≈ 0 on one side; retry reversed
            return OracleResult {
                min_reverse: f64::INFINITY,
                samples,
            };
        }

        // Local refinement per candidate: greedy stochastic descent with a
        // radius that shrinks only when a whole level stalls. Piecewise
        // linear minima sit in narrow descent wedges, so an unconditional
        // shrink schedule converges prematurely.
        let refine_budget = budget.saturating_sub(samples).max(1);
        let per_candidate = (refine_budget / candidates.len()).max(64);
        const TRIES_PER_LEVEL: usize = 48;
        for cand in candidates.iter_mut() {
            let mut spent = 0usize;
            let mut radius = 0.3f64;
            while spent < per_candidate && radius > 1e-12 {
                let mut improved = false;
                for _ in 0..TRIES_PER_LEVEL.min(per_candidate - spent) {
                    let u: Vec<f64> = cand
                        .1
                        .iter()
                        .map(|v| v + radius * rng.gen_range(-1.0..1.0))
                        .collect();
                    let s = self.eval(&u);
                    samples += 1;
                    spent += 1;
                    if s <= 1e-12 {
                        continue;
                    }
                    let x: Vec<f64> = u.iter().map(|v| v / s).collect();
                    let val = self.eval_reverse(&x);
                    if val < cand.0 {
                        *cand = (val, x);
                        improved = true;
                        break;
                    }
                }
                if !improved {
                    radius *= 0.5;
                }
            }
        }
        let mut min_reverse = candidates
            .iter()
            .map(|(v, _)| *v)
            .fold(f64::INFINITY, f64::min);
        // rounding in the refinement schedule can leave the budget short;
        // spend the remainder on extra global samples
        while samples < budget {
            let u = self.random_direction(rng);
            let s = self.eval(&u);
            samples += 1;
            if s <= 1e-12 {
                continue;
            }
            let x: Vec<f64> = u.iter().map(|v| v / s).collect();
            let val = self.eval_reverse(&x);
            if val < min_reverse {
                min_reverse = val;
            }
        }
        OracleResult {
            min_reverse,
            samples,
        }
    }

    fn random_direction(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        if self.dim == 1 {
            return vec![if rng.gen_bool(0.5) { 1.0 } else { -1.0 }];
        }
        loop {
            let u: Vec<f64> = (0..self.dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let n2: f64 = u.iter().map(|v| v * v).sum();
            if n2 > 1e-9 && n2 <= 1.0 {
                let n = n2.sqrt();
                return u.iter().map(|v| v / n).collect();
            }
        }
    }
}
