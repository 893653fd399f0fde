//! Seeded randomized verification campaign.
//!
//! Every mathematical law the library relies on is re-checked here on
//! random gauges and operators: the gauge axioms, the range and
//! certificates of the index, the product identity, the finite-dimensional
//! dichotomy (c > 0 ⟺ T₁ ⟺ full dual cone ⟺ bounded ball), the norm and
//! operator-norm inequalities, support/vertex cross-checks, dual-cone
//! closure, the rank-one isometry, the vector-space decision with witness
//! re-verification, the operator-space gauge, and a float sphere-sampling
//! oracle for the index.
//!
//! The seed fully determines the campaign; identical configurations give
//! byte-identical reports. Failures are minimized by generator shrinking
//! before being reported.

pub mod oracle;
pub mod sampling;
pub mod shrink;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dual;
use crate::gauge::PolyhedralGauge;
use crate::linalg::{self, dot};
use crate::operators::{self, LinearOperator};
use crate::polyhedra::{enumerate_vrep, recession_direction, support_value};
use crate::scalar::{format_rat, format_vec, ExtendedRat, Rat};
use crate::symmetry;

/// Campaign configuration. The seed determines everything.
#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub cases: usize,
    /// Inclusive dimension range for sampled spaces.
    pub dims: (usize, usize),
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 42,
            cases: 100,
            dims: (1, 4),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FailureReport {
    pub case: usize,
    pub message: String,
    /// Minimized gauge(s) reproducing the failure, as compact JSON.
    pub counterexample: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<FailureReport>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CampaignReport {
    pub seed: u64,
    pub cases: usize,
    pub dims: [usize; 2],
    pub suites: Vec<SuiteReport>,
    pub ok: bool,
}

impl CampaignReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "verification campaign: seed {}, {} cases per suite, dims {}..{}\n",
            self.seed, self.cases, self.dims[0], self.dims[1]
        );
        for s in &self.suites {
            out.push_str(&format!(
                "  suite {:<24} {:>5} cases  {}\n",
                s.name,
                s.cases,
                if s.ok() {
                    "ok".to_string()
                } else {
                    format!("{} FAILED", s.failures.len())
                }
            ));
            for f in &s.failures {
                out.push_str(&format!("    case {}: {}\n", f.case, f.message));
                out.push_str(&format!("    counterexample: {}\n", f.counterexample));
            }
        }
        out.push_str(if self.ok {
            "result: ok\n"
        } else {
            "result: FAILED\n"
        });
        out
    }
}

/// The names of all suites, in execution order.
pub const SUITE_NAMES: &[&str] = &[
    "gauge-axioms",
    "index-range",
    "symmetry-iff",
    "t1-dichotomy",
    "product-identity",
    "norm-inequalities",
    "support-vertex",
    "dual-cone",
    "operator-norms",
    "rank-one-isometry",
    "vector-space-corollary",
    "operator-space-index",
    "oracle-equivalence",
];

/// Run the whole campaign.
pub fn run_campaign(config: &RunConfig) -> CampaignReport {
    let mut suites = Vec::new();
    if config.cases > 0 {
        for (i, name) in SUITE_NAMES.iter().enumerate() {
            let mut rng = suite_rng(config.seed, i);
            suites.push(run_suite(name, &mut rng, config));
        }
    }
    let ok = suites.iter().all(|s| s.ok());
    CampaignReport {
        seed: config.seed,
        cases: config.cases,
        dims: [config.dims.0, config.dims.1],
        suites,
        ok,
    }
}

/// Run a single suite by name (used by the campaign and by focused tests).
pub fn run_suite(name: &str, rng: &mut ChaCha8Rng, config: &RunConfig) -> SuiteReport {
    let case: CaseFn = match name {
        "gauge-axioms" => gauge_axioms_case,
        "index-range" => index_range_case,
        "symmetry-iff" => symmetry_iff_case,
        "t1-dichotomy" => t1_dichotomy_case,
        "product-identity" => |rng, cfg| product_identity_case(rng, cfg, &real_index),
        "norm-inequalities" => norm_inequalities_case,
        "support-vertex" => support_vertex_case,
        "dual-cone" => dual_cone_case,
        "operator-norms" => operator_norms_case,
        "rank-one-isometry" => rank_one_case,
        "vector-space-corollary" => vector_space_case,
        "operator-space-index" => operator_space_case,
        "oracle-equivalence" => oracle_case,
        other => panic!("unknown suite {other:?}"),
    };
    run_cases(name, rng, config, case)
}

fn suite_rng(seed: u64, suite_index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        seed.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(suite_index as u64 + 1)),
    )
}

/// A case draws its own inputs and either passes or yields a failure with
/// the smallest gauge it could still reproduce on.
type CaseFn = fn(&mut ChaCha8Rng, &RunConfig) -> Result<(), Failure>;

struct Failure {
    message: String,
    counterexample: String,
}

impl Failure {
    fn of_gauge(message: impl Into<String>, g: &PolyhedralGauge) -> Failure {
        Failure {
            message: message.into(),
            counterexample: crate::io::gauge_to_value(g).to_string(),
        }
    }

    fn of_pair(message: impl Into<String>, x: &PolyhedralGauge, y: &PolyhedralGauge) -> Failure {
        Failure {
            message: message.into(),
            counterexample: format!(
                "{{\"domain\": {}, \"codomain\": {}}}",
                crate::io::gauge_to_value(x),
                crate::io::gauge_to_value(y)
            ),
        }
    }
}

/// Build a failure for `g`, minimizing it first with `fails`.
fn shrunk<F>(message: String, g: &PolyhedralGauge, fails: F) -> Failure
where
    F: Fn(&PolyhedralGauge) -> bool,
{
    if fails(g) {
        let small = shrink::shrink_gauge(g, fails);
        Failure::of_gauge(message, &small)
    } else {
        // The failure is not a pure function of the gauge (it involves other
        // sampled data); report unshrunk.
        Failure::of_gauge(message, g)
    }
}

fn run_cases(name: &str, rng: &mut ChaCha8Rng, config: &RunConfig, case: CaseFn) -> SuiteReport {
    let mut failures = Vec::new();
    let mut passed = 0usize;
    for i in 0..config.cases {
        match case(rng, config) {
            Ok(()) => passed += 1,
            Err(f) => failures.push(FailureReport {
                case: i,
                message: f.message,
                counterexample: f.counterexample,
            }),
        }
    }
    SuiteReport {
        name: name.to_string(),
        cases: config.cases,
        passed,
        failures,
    }
}

fn clamp_dims(dims: (usize, usize), hi: usize) -> (usize, usize) {
    (dims.0.min(hi), dims.1.min(hi))
}

// ---------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------

fn gauge_axioms_case(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<(), Failure> {
    let g = sampling::random_gauge(rng, cfg.dims);
    let x = sampling::random_point(rng, g.dim());
    let y = sampling::random_point(rng, g.dim());
    let lambda = sampling::random_nonneg_scalar(rng);

    let nx = g.eval(&x).unwrap();
    let ny = g.eval(&y).unwrap();
    let nxy = g.eval(&linalg::add(&x, &y)).unwrap();
    if nxy > &nx + &ny {
        let msg = format!(
            "subadditivity failed at x = {}, y = {}",
            format_vec(&x),
            format_vec(&y)
        );
        return Err(shrunk(msg, &g, |g| {
            g.eval(&linalg::add(&x, &y)).unwrap() > g.eval(&x).unwrap() + g.eval(&y).unwrap()
        }));
    }
    let scaled = g.eval(&linalg::scale(&x, &lambda)).unwrap();
    if scaled != &lambda * &nx {
        let msg = format!(
            "positive homogeneity failed at x = {}, lambda = {}",
            format_vec(&x),
            format_rat(&lambda)
        );
        return Err(shrunk(msg, &g, |g| {
            g.eval(&linalg::scale(&x, &lambda)).unwrap() != &lambda * &g.eval(&x).unwrap()
        }));
    }
    let sym = g.symmetric_norm(&x).unwrap();
    if nx > sym {
        return Err(Failure::of_gauge(
            format!("‖x| exceeded ‖x‖s at x = {}", format_vec(&x)),
            &g,
        ));
    }
    if sym != g.symmetric_norm(&linalg::neg(&x)).unwrap() {
        return Err(Failure::of_gauge(
            format!("symmetric norm is not symmetric at x = {}", format_vec(&x)),
            &g,
        ));
    }
    if !linalg::is_zero(&x) && !sym.is_positive() {
        return Err(Failure::of_gauge(
            format!("symmetric norm vanished at nonzero x = {}", format_vec(&x)),
            &g,
        ));
    }
    let sws = g.sum_with_symmetric();
    if sws.eval(&x).unwrap() != &nx + &sym {
        return Err(Failure::of_gauge(
            format!(
                "sum-with-symmetric identity failed at x = {}",
                format_vec(&x)
            ),
            &g,
        ));
    }
    Ok(())
}

fn index_range_case(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<(), Failure> {
    let g = sampling::random_gauge(rng, cfg.dims);
    let (c, min) = symmetry::index(&g);
    if c.is_negative() || c > Rat::one() {
        let msg = format!("index {} out of [0, 1]", format_rat(&c));
        return Err(shrunk(msg, &g, |g| {
            let (c, _) = symmetry::index(g);
            c.is_negative() || c > Rat::one()
        }));
    }
    if g.eval(&min).unwrap() != Rat::one() || g.eval_reverse(&min).unwrap() != c {
        return Err(Failure::of_gauge(
            "index minimizer certificate failed to re-check",
            &g,
        ));
    }
    let again = symmetry::index(&g);
    if again != (c, min) {
        return Err(Failure::of_gauge("index is not deterministic", &g));
    }
    Ok(())
}

fn symmetry_iff_case(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<(), Failure> {
    let g = sampling::random_gauge(rng, cfg.dims);
    let (c, _) = symmetry::index(&g);
    if c.is_one() {
        for _ in 0..8 {
            let x = sampling::random_point(rng, g.dim());
            if g.eval(&x).unwrap() != g.eval_reverse(&x).unwrap() {
                let msg = format!(
                    "c = 1 but the gauge is asymmetric at x = {}",
                    format_vec(&x)
                );
                return Err(shrunk(msg, &g, |g| {
                    let (c, _) = symmetry::index(g);
                    c.is_one() && g.eval(&x).unwrap() != g.eval_reverse(&x).unwrap()
                }));
            }
        }
    }
    if g.is_symmetric() && !c.is_one() {
        let msg = format!("symmetric generators but c = {}", format_rat(&c));
        return Err(shrunk(msg, &g, |g| {
            let (c, _) = symmetry::index(g);
            g.is_symmetric() && !c.is_one()
        }));
    }
    Ok(())
}

fn t1_dichotomy_case(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<(), Failure> {
    let g = sampling::random_gauge(rng, clamp_dims(cfg.dims, 8));
    let (c, _) = symmetry::index(&g);
    let (t1, cert) = symmetry::is_t1(&g);
    let full = dual::dual_cone_full(&g);
    let bounded = enumerate_vrep(&g.unit_ball())
        .expect("dims within caps")
        .rays
        .is_empty();
    let quad = [c.is_positive(), t1, full, bounded];
    if quad.iter().any(|&q| q != quad[0]) {
        let msg = format!(
            "dichotomy split: c > 0 = {}, T1 = {}, dual cone full = {}, ball bounded = {}",
            quad[0], quad[1], quad[2], quad[3]
        );
        return Err(shrunk(msg, &g, |g| {
            let (c, _) = symmetry::index(g);
            let (t1, _) = symmetry::is_t1(g);
            let full = dual::dual_cone_full(g);
            let bounded = match enumerate_vrep(&g.unit_ball()) {
                Ok(v) => v.rays.is_empty(),
                Err(_) => return false,
            };
            let quad = [c.is_positive(), t1, full, bounded];
            quad.iter().any(|&q| q != quad[0])
        }));
    }
    if let Some(d) = cert {
        if !g.eval(&d).unwrap().is_zero() || linalg::is_zero(&d) {
            return Err(Failure::of_gauge(
                "non-T1 certificate failed to re-check",
                &g,
            ));
        }
    }
    // classify panics on an inconsistent pair; reaching here means I or III.
    let ty = symmetry::classify(&g);
    if (ty == symmetry::SpaceType::I) != c.is_positive() {
        return Err(Failure::of_gauge(
            "classification disagrees with the index",
            &g,
        ));
    }
    Ok(())
}

fn real_index(g: &PolyhedralGauge) -> Rat {
    symmetry::index(g).0
}

/// The identity check, parameterized over the index computation so that
/// fault-injection tests can feed a corrupted one and watch it get caught.
fn product_identity_case(
    rng: &mut ChaCha8Rng,
    cfg: &RunConfig,
    index_of: &dyn Fn(&PolyhedralGauge) -> Rat,
) -> Result<(), Failure> {
    let g = sampling::random_gauge(rng, cfg.dims);
    check_product_identity(&g, index_of)
}

fn check_product_identity(
    g: &PolyhedralGauge,
    index_of: &dyn Fn(&PolyhedralGauge) -> Rat,
) -> Result<(), Failure> {
    let c = index_of(g);
    let (sup, _) = symmetry::sup_reverse(g);
    match sup {
        ExtendedRat::Finite(s) => {
            if !c.is_positive() {
                let msg = format!(
                    "bounded ball (sup = {}) with index {} = 0",
                    format_rat(&s),
                    format_rat(&c)
                );
                return Err(shrunk(msg, g, |g| {
                    let c = index_of(g);
                    let (sup, _) = symmetry::sup_reverse(g);
                    sup.is_finite() && !c.is_positive()
                }));
            }
            if &s * &c != Rat::one() {
                let msg = format!(
                    "product identity failed: sup = {}, inf = {}",
                    format_rat(&s),
                    format_rat(&c)
                );
                return Err(shrunk(msg, g, |g| {
                    let c = index_of(g);
                    let (sup, _) = symmetry::sup_reverse(g);
                    match sup {
                        ExtendedRat::Finite(s) => c.is_positive() && &s * &c != Rat::one(),
                        ExtendedRat::Infinity => false,
                    }
                }));
            }
        }
        ExtendedRat::Infinity => {
            if !c.is_zero() {
                return Err(Failure::of_gauge(
                    format!("unbounded ball with positive index {}", format_rat(&c)),
                    g,
                ));
            }
        }
    }
    Ok(())
}

fn norm_inequalities_case(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<(), Failure> {
    let g = sampling::random_gauge(rng, cfg.dims);
    let (c, _) = symmetry::index(&g);
    if !c.is_positive() {
        return Ok(()); // the bounds are stated under c > 0
    }
    let x = sampling::random_point(rng, g.dim());
    let fwd = g.eval(&x).unwrap();
    let rev = g.eval_reverse(&x).unwrap();
    let sym = g.symmetric_norm(&x).unwrap();
    // c‖x| ≤ ‖-x| ≤ (1/c)‖x|, cross-multiplied to stay in exact arithmetic
    let ok = &c * &fwd <= rev && &c * &rev <= fwd && &c * &sym <= fwd && fwd <= sym;
    if !ok {
        let msg = format!(
            "norm inequalities failed at x = {} (c = {}, ‖x| = {}, ‖-x| = {}, ‖x‖s = {})",
            format_vec(&x),
            format_rat(&c),
            format_rat(&fwd),
            format_rat(&rev),
            format_rat(&sym)
        );
        return Err(shrunk(msg, &g, |g| {
            let (c, _) = symmetry::index(g);
            if !c.is_positive() {
                return false;
            }
            let fwd = g.eval(&x).unwrap();
            let rev = g.eval_reverse(&x).unwrap();
            let sym = g.symmetric_norm(&x).unwrap();
            !(&c * &fwd <= rev && &c * &rev <= fwd && &c * &sym <= fwd && fwd <= sym)
        }));
    }
    Ok(())
}

fn support_vertex_case(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<(), Failure> {
    let g = sampling::random_gauge(rng, clamp_dims(cfg.dims, 4));
    let ball = g.unit_ball();
    let p = sampling::random_int_vector(rng, g.dim());
    let vrep = enumerate_vrep(&ball).expect("dims within caps");
    let (value, cert) = support_value(&ball, &p).expect("balls contain 0");
    match value {
        ExtendedRat::Finite(v) => {
            let best = vrep
                .vertices
                .iter()
                .map(|vx| dot(&p, vx))
                .max()
                .expect("pointed nonempty ball has vertices");
            if best != v {
                return Err(Failure::of_gauge(
                    format!(
                        "support {} disagrees with vertex max {} at p = {}",
                        format_rat(&v),
                        format_rat(&best),
                        format_vec(&p)
                    ),
                    &g,
                ));
            }
            if vrep.rays.iter().any(|r| dot(&p, r).is_positive()) {
                return Err(Failure::of_gauge(
                    format!(
                        "finite support with an improving ray at p = {}",
                        format_vec(&p)
                    ),
                    &g,
                ));
            }
        }
        ExtendedRat::Infinity => {
            if !vrep.rays.iter().any(|r| dot(&p, r).is_positive()) {
                return Err(Failure::of_gauge(
                    format!(
                        "infinite support but no improving ray at p = {}",
                        format_vec(&p)
                    ),
                    &g,
                ));
            }
            let ray = cert.as_ray().expect("divergence carries a ray");
            if !ball.admits_direction(ray) || !dot(&p, ray).is_positive() {
                return Err(Failure::of_gauge(
                    "divergence certificate failed to re-check",
                    &g,
                ));
            }
        }
    }
    let rec = recession_direction(&ball);
    if rec.is_none() != vrep.rays.is_empty() {
        return Err(Failure::of_gauge(
            "recession test disagrees with enumerated rays",
            &g,
        ));
    }
    Ok(())
}

fn dual_cone_case(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<(), Failure> {
    let g = sampling::random_gauge(rng, cfg.dims);
    let gens = g.generators();
    let pick = |rng: &mut ChaCha8Rng| {
        let i = rng.gen_range(0..gens.len());
        let j = rng.gen_range(0..gens.len());
        let li = sampling::random_nonneg_scalar(rng);
        let lj = sampling::random_nonneg_scalar(rng);
        linalg::add(&linalg::scale(&gens[i], &li), &linalg::scale(&gens[j], &lj))
    };
    let p = pick(rng);
    let q = pick(rng);

    let (p_in, p_norm, _) = dual::in_dual_cone(&g, &p).unwrap();
    if !p_in {
        return Err(Failure::of_gauge(
            format!(
                "conic combination of generators escaped X♭: p = {}",
                format_vec(&p)
            ),
            &g,
        ));
    }
    let p_norm = p_norm.expect_finite("member flat norm").clone();

    // the defining continuity bound, exactly, on sampled points
    for _ in 0..4 {
        let x = sampling::random_point(rng, g.dim());
        if dot(&p, &x) > &p_norm * &g.eval(&x).unwrap() {
            return Err(Failure::of_gauge(
                format!(
                    "continuity bound failed for p = {} at x = {}",
                    format_vec(&p),
                    format_vec(&x)
                ),
                &g,
            ));
        }
    }

    // cone closure
    let (sum_in, _, _) = dual::in_dual_cone(&g, &linalg::add(&p, &q)).unwrap();
    let lambda = sampling::random_nonneg_scalar(rng);
    let (scaled_in, _, _) = dual::in_dual_cone(&g, &linalg::scale(&p, &lambda)).unwrap();
    if !sum_in || !scaled_in {
        return Err(Failure::of_gauge(
            "X♭ is not closed under the cone operations",
            &g,
        ));
    }

    // flat norm dominates the symmetric dual norm
    let r = sampling::random_int_vector(rng, g.dim());
    let (flat, _) = dual::flat_norm(&g, &r).unwrap();
    let sym = dual::symmetric_dual_norm(&g, &r).unwrap();
    if flat < ExtendedRat::Finite(sym.clone()) {
        return Err(Failure::of_gauge(
            format!(
                "‖p|♭ = {} below ‖p‖* = {} at p = {}",
                flat,
                format_rat(&sym),
                format_vec(&r)
            ),
            &g,
        ));
    }

    // c = 0 ⇒ some member has no negative in the cone
    let (c, _) = symmetry::index(&g);
    if c.is_zero() {
        let (_, d) = symmetry::is_t1(&g);
        let d = d.expect("c = 0 is non-T1 in finite dimension");
        let rev = g.eval_reverse(&d).unwrap();
        let a = linalg::scale(&linalg::neg(&d), &rev.recip());
        let witness = dual::support_functional(&g, &a).unwrap();
        let (neg_in, _, _) = dual::in_dual_cone(&g, &linalg::neg(&witness.p)).unwrap();
        if neg_in {
            return Err(Failure::of_gauge(
                format!(
                    "c = 0 but -p stayed in X♭ for the support functional p = {}",
                    format_vec(&witness.p)
                ),
                &g,
            ));
        }
    }
    Ok(())
}

fn operator_norms_case(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<(), Failure> {
    let dims = clamp_dims(cfg.dims, 4);
    let x = sampling::random_gauge(rng, dims);
    let y = sampling::random_gauge(rng, dims);
    let t = LinearOperator::new(
        sampling::random_matrix(rng, y.dim(), x.dim()),
        x.clone(),
        y.clone(),
    )
    .unwrap();

    let report = operators::lc_norm(&t);
    match &report.lc_norm {
        ExtendedRat::Finite(lc) => {
            if &report.ls_norm > lc {
                return Err(Failure::of_pair("‖T‖Ls exceeded ‖T|Lc", &x, &y));
            }
            let pt = report.certificate.as_point().expect("finite norm attains");
            if x.eval(pt).unwrap() > Rat::one() || y.eval(&t.apply(pt)).unwrap() != *lc {
                return Err(Failure::of_pair(
                    "operator norm certificate failed to re-check",
                    &x,
                    &y,
                ));
            }
        }
        ExtendedRat::Infinity => {
            let ray = report
                .certificate
                .as_ray()
                .expect("divergence carries a ray");
            if !x.eval(ray).unwrap().is_zero() || !y.eval(&t.apply(ray)).unwrap().is_positive() {
                return Err(Failure::of_pair(
                    "discontinuity certificate failed to re-check",
                    &x,
                    &y,
                ));
            }
        }
    }

    // triangle inequality on continuous operators
    let s1 = sampling::random_continuous_operator(rng, &x, &y);
    let s2 = sampling::random_continuous_operator(rng, &x, &y);
    let n1 = operators::lc_norm(&s1)
        .lc_norm
        .expect_finite("continuous sample")
        .clone();
    let n2 = operators::lc_norm(&s2)
        .lc_norm
        .expect_finite("continuous sample")
        .clone();
    let nsum = operators::lc_norm(&s1.sum(&s2).unwrap())
        .lc_norm
        .expect_finite("sum of continuous")
        .clone();
    if nsum > &n1 + &n2 {
        return Err(Failure::of_pair(
            "operator triangle inequality failed",
            &x,
            &y,
        ));
    }

    // the c(X) > 0 inequalities
    let (c, _) = symmetry::index(&x);
    if c.is_positive() {
        let lc = operators::lc_norm(&t)
            .lc_norm
            .expect_finite("T1 domain")
            .clone();
        let lc_neg = operators::lc_norm(&t.negated())
            .lc_norm
            .expect_finite("T1 domain")
            .clone();
        let ls = operators::ls_norm(&t);
        let ok = &c * &lc <= lc_neg && &c * &lc_neg <= lc && ls <= lc && &c * &lc <= ls;
        if !ok {
            return Err(Failure::of_pair(
                format!(
                    "operator norm inequalities failed (c = {}, ‖T| = {}, ‖-T| = {}, ‖T‖Ls = {})",
                    format_rat(&c),
                    format_rat(&lc),
                    format_rat(&lc_neg),
                    format_rat(&ls)
                ),
                &x,
                &y,
            ));
        }
    }
    Ok(())
}

fn rank_one_case(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<(), Failure> {
    let x = sampling::random_gauge(rng, cfg.dims);
    // need a non-T1 codomain; resample until the stratified sampler gives one
    let y = loop {
        let y = sampling::random_gauge(rng, cfg.dims);
        if !symmetry::is_t1(&y).0 {
            break y;
        }
    };
    let (_, d) = symmetry::is_t1(&y);
    let d = d.expect("sampled non-T1");
    let rev = y.eval_reverse(&d).unwrap();
    let e = linalg::scale(&linalg::neg(&d), &rev.recip());
    let p = sampling::random_int_vector(rng, x.dim());
    // rank_one verifies the isometry internally; confirm independently here
    let op = operators::rank_one(&x, &y, &p, &e).unwrap();
    let (flat, _) = dual::flat_norm(&x, &p).unwrap();
    if operators::lc_norm(&op).lc_norm != flat {
        return Err(Failure::of_pair(
            format!("rank-one isometry failed at p = {}", format_vec(&p)),
            &x,
            &y,
        ));
    }
    Ok(())
}

fn vector_space_case(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<(), Failure> {
    let dims = clamp_dims(cfg.dims, 4);
    let x = sampling::random_gauge(rng, dims);
    let y = sampling::random_gauge(rng, dims);
    let (cx, _) = symmetry::index(&x);
    let (cy, _) = symmetry::index(&y);
    let decision = operators::lc_is_vector_space(&x, &y);
    if decision != !(cx.is_zero() && cy.is_zero()) {
        return Err(Failure::of_pair(
            "vector-space decision disagrees with the indices",
            &x,
            &y,
        ));
    }
    if decision {
        for _ in 0..2 {
            let t = sampling::random_continuous_operator(rng, &x, &y);
            let (fwd, _) = operators::is_continuous(&t);
            let (bwd, _) = operators::is_continuous(&t.negated());
            if !fwd || !bwd {
                return Err(Failure::of_pair(
                    "vector space claimed but a continuous operator had a discontinuous negative",
                    &x,
                    &y,
                ));
            }
        }
    } else {
        let w = operators::nonreversible_witness(&x, &y)
            .map_err(|e| Failure::of_pair(format!("witness construction failed: {e}"), &x, &y))?;
        let (fwd, _) = operators::is_continuous(&w.operator);
        let (bwd, _) = operators::is_continuous(&w.operator.negated());
        if !fwd || bwd {
            return Err(Failure::of_pair(
                "witness failed independent re-verification",
                &x,
                &y,
            ));
        }
    }
    Ok(())
}

fn operator_space_case(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<(), Failure> {
    let dims = clamp_dims(cfg.dims, 3);
    let x = loop {
        let x = sampling::random_gauge(rng, dims);
        let (c, _) = symmetry::index(&x);
        if c.is_positive() {
            break x;
        }
    };
    let y = sampling::random_gauge(rng, dims);
    let og = operators::operator_space_gauge(&x, &y).expect("c(X) > 0 by construction");
    for _ in 0..4 {
        let m = sampling::random_matrix(rng, y.dim(), x.dim());
        let op = LinearOperator::new(m.clone(), x.clone(), y.clone()).unwrap();
        let direct = operators::lc_norm(&op)
            .lc_norm
            .expect_finite("c(X) > 0")
            .clone();
        let via_gauge = og.eval(&operators::flatten_matrix(&m)).unwrap();
        if direct != via_gauge {
            return Err(Failure::of_pair(
                format!(
                    "operator gauge mismatch: ‖T| = {} but gauge gave {}",
                    format_rat(&direct),
                    format_rat(&via_gauge)
                ),
                &x,
                &y,
            ));
        }
    }
    let (c_op, _) = symmetry::index(&og);
    let (c_x, _) = symmetry::index(&x);
    if c_op < c_x {
        return Err(Failure::of_pair(
            format!(
                "operator space index dropped: c(Lc) = {} < c(X) = {}",
                format_rat(&c_op),
                format_rat(&c_x)
            ),
            &x,
            &y,
        ));
    }
    Ok(())
}

fn oracle_case(rng: &mut ChaCha8Rng, cfg: &RunConfig) -> Result<(), Failure> {
    use num_traits::ToPrimitive;
    let g = sampling::random_gauge(rng, clamp_dims(cfg.dims, 3));
    let (c, min) = symmetry::index(&g);
    if g.eval(&min).unwrap() != Rat::one() || g.eval_reverse(&min).unwrap() != c {
        return Err(Failure::of_gauge(
            "index certificate failed before oracle comparison",
            &g,
        ));
    }
    let result = oracle::SphereOracle::new(&g).min_reverse(rng, 20_000);
    let c_f = c.to_f64().unwrap();
    // every sampled value is an upper bound on the true infimum
    if c_f > result.min_reverse + 1e-9 {
        return Err(Failure::of_gauge(
            format!(
                "exact index {} exceeds a sampled reverse norm {}",
                format_rat(&c),
                result.min_reverse
            ),
            &g,
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauge::fixtures::weighted_linf;
    use crate::polyhedra::{lp_solve, HPolyhedron, LpOutcome, Sense};

    #[test]
    fn small_campaign_is_clean_and_deterministic() {
        let cfg = RunConfig {
            seed: 42,
            cases: 12,
            dims: (1, 3),
        };
        let a = run_campaign(&cfg);
        assert!(a.ok, "campaign failed:\n{}", a.render_text());
        let b = run_campaign(&cfg);
        assert_eq!(a, b);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn zero_cases_give_an_empty_report() {
        let cfg = RunConfig {
            seed: 1,
            cases: 0,
            dims: (1, 3),
        };
        let r = run_campaign(&cfg);
        assert!(r.ok);
        assert!(r.suites.is_empty());
    }

    /// The index LP with its "≤ -1" rows dropped: the facet equality decays
    /// to a one-sided constraint, the feasible set swallows the whole ball,
    /// and the computed index collapses to 0.
    fn mutant_index(g: &PolyhedralGauge) -> Rat {
        let n = g.dim();
        let gens = g.generators();
        let mut best: Option<Rat> = None;
        for active in gens {
            let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
            let mut eq = active.clone();
            eq.push(Rat::zero());
            rows.push((eq, Rat::one()));
            // the (-a_i, -1) row is deliberately missing
            for a in gens {
                let mut ball_row = a.clone();
                ball_row.push(Rat::zero());
                rows.push((ball_row, Rat::one()));
                let mut rev_row = linalg::neg(a);
                rev_row.push(-Rat::one());
                rows.push((rev_row, Rat::zero()));
            }
            let poly = HPolyhedron::new(n + 1, rows).unwrap();
            let mut objective = linalg::zeros(n + 1);
            objective[n] = Rat::one();
            match lp_solve(&objective, Sense::Min, &poly).unwrap() {
                LpOutcome::Optimal { value, .. } => {
                    if best.as_ref().is_none_or(|b| value < *b) {
                        best = Some(value);
                    }
                }
                _ => continue,
            }
        }
        best.expect("mutant LPs are feasible")
    }

    #[test]
    fn injected_mutant_is_caught_by_the_identity_suite() {
        let base = weighted_linf(3).unwrap();
        // sanity: the mutant really corrupts the index
        assert_eq!(mutant_index(&base), crate::scalar::int(0));
        assert_eq!(real_index(&base), crate::scalar::rat(1, 3));

        // the healthy check passes
        assert!(check_product_identity(&base, &real_index).is_ok());

        // pad with redundant generators, then watch the corrupted index get
        // caught and the counterexample shrink back down
        let mut gens = base.generators().to_vec();
        gens.push(gens[0].clone());
        gens.push(linalg::zeros(3));
        let padded = PolyhedralGauge::new(3, gens, "padded").unwrap();
        let failure = check_product_identity(&padded, &mutant_index).unwrap_err();
        assert!(
            failure.message.contains("index"),
            "message: {}",
            failure.message
        );
        let minimized: serde_json::Value = serde_json::from_str(&failure.counterexample).unwrap();
        let shrunk_gens = minimized["generators"].as_array().unwrap().len();
        assert!(
            shrunk_gens <= base.generators().len(),
            "counterexample should have shrunk the padding away, got {shrunk_gens} generators"
        );
    }
}
