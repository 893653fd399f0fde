//! Counterexample minimization: greedy generator truncation and coordinate
//! zeroing, keeping the gauge valid and the failure reproducible.

use num_traits::Zero;

use crate::gauge::PolyhedralGauge;

/// Shrink a failing gauge. `fails` must return true on the input and is
/// re-run on every candidate; only candidates that still fail survive.
pub fn shrink_gauge<F>(g: &PolyhedralGauge, fails: F) -> PolyhedralGauge
where
    F: Fn(&PolyhedralGauge) -> bool,
{
    debug_assert!(fails(g), "shrinking needs a failing input");
    let mut current = g.clone();
    loop {
        let mut improved = false;

        // drop whole generators
        let gens = current.generators().to_vec();
        if gens.len() > 1 {
            for i in 0..gens.len() {
                let mut trimmed = gens.clone();
                trimmed.remove(i);
                if let Ok(candidate) = PolyhedralGauge::new(current.dim(), trimmed, current.label())
                {
                    if fails(&candidate) {
                        current = candidate;
                        improved = true;
                        break;
                    }
                }
            }
        }
        if improved {
            continue;
        }

        // zero single coordinates
        let gens = current.generators().to_vec();
        'outer: for i in 0..gens.len() {
            for j in 0..current.dim() {
                if gens[i][j].is_zero() {
                    continue;
                }
                let mut zeroed = gens.clone();
                zeroed[i][j] = crate::scalar::int(0);
                if let Ok(candidate) = PolyhedralGauge::new(current.dim(), zeroed, current.label())
                {
                    if fails(&candidate) {
                        current = candidate;
                        improved = true;
                        break 'outer;
                    }
                }
            }
        }
        if !improved {
            return current;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauge::fixtures::weighted_linf;
    use crate::scalar::int;
    use num_traits::Signed;

    #[test]
    fn shrinks_to_a_small_failing_gauge() {
        // weighted_linf(2) padded with redundant generators; the "failure"
        // is strict asymmetry with c > 0. The padding must go.
        let mut gens = weighted_linf(2).unwrap().generators().to_vec();
        gens.push(gens[0].clone());
        gens.push(vec![int(0), int(0)]);
        let g = PolyhedralGauge::new(2, gens, "padded").unwrap();
        let fails = |g: &PolyhedralGauge| {
            let (c, _) = crate::symmetry::index(g);
            c < int(1) && c.is_positive()
        };
        assert!(fails(&g));
        let small = shrink_gauge(&g, fails);
        assert!(fails(&small));
        assert!(small.generators().len() <= g.generators().len() - 2);
    }

    #[test]
    fn already_minimal_gauges_survive_unchanged() {
        // every single-generator drop or coordinate zeroing of the weighted
        // space kills T1 and with it the predicate, so nothing can shrink
        let g = weighted_linf(3).unwrap();
        let fails = |g: &PolyhedralGauge| crate::symmetry::index(g).0.is_positive();
        let small = shrink_gauge(&g, fails);
        assert_eq!(small.generators(), g.generators());
    }
}
