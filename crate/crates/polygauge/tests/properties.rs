//! Property tests over the stratified random gauge population.
//!
//! Structured inputs come from the seeded samplers; proptest drives the
//! seeds and the unstructured data (points, scalars, matrices).

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polygauge::gauge::PolyhedralGauge;
use polygauge::linalg::{self, dot};
use polygauge::operators::{self, LinearOperator};
use polygauge::polyhedra::{enumerate_vrep, lp_solve, HPolyhedron, LpOutcome, Sense};
use polygauge::scalar::{int, rat, Rat};
use polygauge::symmetry;
use polygauge::verify::sampling;
use polygauge::{dual, io};

fn gauge(dims: (usize, usize)) -> impl Strategy<Value = PolyhedralGauge> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        sampling::random_gauge(&mut rng, dims)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn gauge_axioms_hold(g in gauge((1, 4)), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = sampling::random_point(&mut rng, g.dim());
        let y = sampling::random_point(&mut rng, g.dim());
        let nx = g.eval(&x).unwrap();
        let ny = g.eval(&y).unwrap();
        prop_assert!(!nx.is_negative());
        prop_assert!(g.eval(&linalg::add(&x, &y)).unwrap() <= &nx + &ny);
        let sym = g.symmetric_norm(&x).unwrap();
        prop_assert!(nx <= sym);
        if !linalg::is_zero(&x) {
            prop_assert!(sym.is_positive());
        }
        prop_assert_eq!(g.sum_with_symmetric().eval(&x).unwrap(), &nx + &sym);
    }

    #[test]
    fn positive_homogeneity(g in gauge((1, 4)), numer in 0i64..=9, denom in 1i64..=4, seed in any::<u64>()) {
        let lambda = rat(numer, denom);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = sampling::random_point(&mut rng, g.dim());
        let direct = g.eval(&linalg::scale(&x, &lambda)).unwrap();
        prop_assert_eq!(direct, &lambda * &g.eval(&x).unwrap());
    }

    #[test]
    fn index_is_certified_and_bounded(g in gauge((1, 4))) {
        let (c, minimizer) = symmetry::index(&g);
        prop_assert!(!c.is_negative());
        prop_assert!(c <= Rat::one());
        prop_assert_eq!(g.eval(&minimizer).unwrap(), Rat::one());
        prop_assert_eq!(g.eval_reverse(&minimizer).unwrap(), c.clone());
        // positive index forces T1
        if c.is_positive() {
            prop_assert!(symmetry::is_t1(&g).0);
        }
    }

    #[test]
    fn flat_norm_dominates_symmetric_dual(g in gauge((1, 4)), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = sampling::random_int_vector(&mut rng, g.dim());
        let (flat, _) = dual::flat_norm(&g, &p).unwrap();
        let sym = dual::symmetric_dual_norm(&g, &p).unwrap();
        prop_assert!(flat >= polygauge::ExtendedRat::Finite(sym));
    }

    #[test]
    fn operator_triangle_inequality(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = sampling::random_gauge(&mut rng, (1, 3));
        let y = sampling::random_gauge(&mut rng, (1, 3));
        let s = sampling::random_continuous_operator(&mut rng, &x, &y);
        let t = sampling::random_continuous_operator(&mut rng, &x, &y);
        let ns = operators::lc_norm(&s).lc_norm.expect_finite("continuous").clone();
        let nt = operators::lc_norm(&t).lc_norm.expect_finite("continuous").clone();
        let nsum = operators::lc_norm(&s.sum(&t).unwrap()).lc_norm.expect_finite("sum").clone();
        prop_assert!(nsum <= ns + nt);
    }

    #[test]
    fn gauge_files_round_trip(g in gauge((1, 4))) {
        let value = io::gauge_to_value(&g);
        let back = io::gauge_from_value(&value, "memory").unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn certificates_are_deterministic(g in gauge((1, 3))) {
        let a = symmetry::report(&g);
        let b = symmetry::report(&g);
        prop_assert_eq!(a.c, b.c);
        prop_assert_eq!(a.minimizer, b.minimizer);
        prop_assert_eq!(a.sup_certificate, b.sup_certificate);
        prop_assert_eq!(a.t1_certificate, b.t1_certificate);
    }
}

/// x ∈ conv(vertices) + cone(rays), decided exactly by LP feasibility.
fn in_vrep(x: &[Rat], vertices: &[Vec<Rat>], rays: &[Vec<Rat>]) -> bool {
    let dim = x.len();
    let k = vertices.len();
    let r = rays.len();
    if k == 0 {
        return false;
    }
    // variables (λ_1..λ_k, μ_1..μ_r) ≥ 0, Σλ = 1, Σλv + Σμr = x
    let vars = k + r;
    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for i in 0..vars {
        rows.push((linalg::neg(&linalg::unit(vars, i)), Rat::zero()));
    }
    let mut ones = vec![Rat::one(); k];
    ones.extend(vec![Rat::zero(); r]);
    rows.push((ones.clone(), Rat::one()));
    rows.push((linalg::neg(&ones), -Rat::one()));
    for c in 0..dim {
        let mut coeffs: Vec<Rat> = vertices.iter().map(|v| v[c].clone()).collect();
        coeffs.extend(rays.iter().map(|ray| ray[c].clone()));
        rows.push((coeffs.clone(), x[c].clone()));
        rows.push((linalg::neg(&coeffs), -&x[c]));
    }
    let poly = HPolyhedron::new(vars, rows).unwrap();
    !matches!(
        lp_solve(&linalg::zeros(vars), Sense::Max, &poly).unwrap(),
        LpOutcome::Infeasible
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn vrep_reproduces_the_ball(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = sampling::random_gauge(&mut rng, (1, 3));
        let ball = g.unit_ball();
        let vrep = enumerate_vrep(&ball).unwrap();

        // V-side points land inside the H-representation
        for _ in 0..4 {
            let mut x = linalg::zeros(g.dim());
            let mut weight_left = int(1);
            for v in &vrep.vertices {
                let w = &weight_left * &rat(1, 2);
                x = linalg::add(&x, &linalg::scale(v, &w));
                weight_left -= w;
            }
            if let Some(first) = vrep.vertices.first() {
                x = linalg::add(&x, &linalg::scale(first, &weight_left));
            }
            for ray in &vrep.rays {
                let mu = rat(rng.gen_range(0..=3), 1);
                x = linalg::add(&x, &linalg::scale(ray, &mu));
            }
            prop_assert!(ball.contains(&x));
        }

        // H-side points are expressible in the V-representation
        for _ in 0..4 {
            let raw = sampling::random_point(&mut rng, g.dim());
            let norm = g.eval(&raw).unwrap();
            let x = if norm > Rat::one() {
                linalg::scale(&raw, &norm.recip())
            } else {
                raw
            };
            prop_assert!(ball.contains(&x));
            prop_assert!(in_vrep(&x, &vrep.vertices, &vrep.rays));
        }
    }

    #[test]
    fn rank_one_isometry_on_random_functionals(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = sampling::random_gauge(&mut rng, (1, 3));
        let y = loop {
            let y = sampling::random_gauge(&mut rng, (1, 3));
            if !symmetry::is_t1(&y).0 {
                break y;
            }
        };
        let (_, d) = symmetry::is_t1(&y);
        let d = d.unwrap();
        let rev = y.eval_reverse(&d).unwrap();
        let e = linalg::scale(&linalg::neg(&d), &rev.recip());
        let p = sampling::random_int_vector(&mut rng, x.dim());
        let op = operators::rank_one(&x, &y, &p, &e).unwrap();
        let (flat, _) = dual::flat_norm(&x, &p).unwrap();
        prop_assert_eq!(operators::lc_norm(&op).lc_norm, flat);
    }

    #[test]
    fn continuity_bound_for_dual_members(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = sampling::random_gauge(&mut rng, (1, 4));
        // members arise as conic combinations of generators
        let gens = g.generators();
        let i = rng.gen_range(0..gens.len());
        let j = rng.gen_range(0..gens.len());
        let p = linalg::add(
            &linalg::scale(&gens[i], &rat(rng.gen_range(0..=3), 1)),
            &linalg::scale(&gens[j], &rat(rng.gen_range(0..=3), 1)),
        );
        let (member, norm, _) = dual::in_dual_cone(&g, &p).unwrap();
        prop_assert!(member);
        let norm = norm.expect_finite("member").clone();
        for _ in 0..4 {
            let x = sampling::random_point(&mut rng, g.dim());
            prop_assert!(dot(&p, &x) <= &norm * &g.eval(&x).unwrap());
        }
    }
}

#[test]
fn vrep_membership_helper_is_sane() {
    // unit square: (0,0) inside, (2,0) outside
    let vertices = vec![
        vec![int(-1), int(-1)],
        vec![int(-1), int(1)],
        vec![int(1), int(-1)],
        vec![int(1), int(1)],
    ];
    assert!(in_vrep(&[int(0), int(0)], &vertices, &[]));
    assert!(!in_vrep(&[int(2), int(0)], &vertices, &[]));
    // adding a ray opens the right side
    let rays = vec![vec![int(1), int(0)]];
    assert!(in_vrep(&[int(2), int(0)], &vertices, &rays));
}

#[test]
fn gauge_axioms_over_a_thousand_gauges() {
    let cfg = polygauge::verify::RunConfig {
        seed: 2024,
        cases: 1000,
        dims: (1, 5),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let report = polygauge::verify::run_suite("gauge-axioms", &mut rng, &cfg);
    assert!(
        report.ok(),
        "axiom failures: {:?}",
        report.failures.first().map(|f| &f.message)
    );
    assert_eq!(report.passed, 1000);
}

#[test]
fn operator_sum_requires_matching_spaces() {
    let a = polygauge::gauge::fixtures::upper_real();
    let b = polygauge::gauge::fixtures::referee_plane();
    let id = LinearOperator::new(vec![vec![int(1)]], a.clone(), a.clone()).unwrap();
    let row = LinearOperator::new(vec![vec![int(0), int(1)]], b, a).unwrap();
    assert!(id.sum(&row).is_err());
}
