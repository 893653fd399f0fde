//! Index of symmetry, reverse supremum, T₁ detection, and the
//! type I / type III classification.
//!
//! The index c(X) = inf{‖-x| : ‖x| = 1} lies in [0, 1]; it equals 1 exactly
//! for norms and 0 exactly for non-T₁ spaces (in finite dimension there is
//! no third case, and [`classify`] treats one as an internal invariant
//! violation). For a polyhedral gauge the unit sphere is the union of the
//! facet pieces Fᵢ = {x : ⟨aᵢ, x⟩ = 1, ⟨aⱼ, x⟩ ≤ 1 ∀j}, so the infimum is
//! attained and one LP per generator computes it exactly.

use num_traits::{One, Signed, Zero};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::gauge::PolyhedralGauge;
use crate::linalg;
use crate::polyhedra::{
    lp_solve, recession_direction, support_value, HPolyhedron, LpOutcome, Sense,
};
use crate::scalar::{ExtendedRat, Rat};

/// The topological type of an asymmetric normed space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpaceType {
    /// c > 0: isomorphic to the associated normed space.
    I,
    /// c = 0 but T₁. Requires infinite dimension; a polyhedral gauge can
    /// never produce it, and seeing it at runtime signals a bug.
    II,
    /// Not T₁: some x ≠ 0 has ‖x| = 0.
    III,
}

impl std::fmt::Display for SpaceType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceType::I => write!(f, "I"),
            SpaceType::II => write!(f, "II"),
            SpaceType::III => write!(f, "III"),
        }
    }
}

/// Everything the symmetry analysis produces, certificates included.
#[derive(Clone, Debug)]
pub struct SymmetryReport {
    /// c(X) ∈ [0, 1], exact.
    pub c: Rat,
    /// A sphere point attaining c: ‖minimizer| = 1, ‖-minimizer| = c.
    pub minimizer: Vec<Rat>,
    /// sup{‖-x| : x in the unit ball}; +inf iff the ball is unbounded.
    pub sup_reverse: ExtendedRat,
    /// Attaining sphere point (finite case) or a recession ray.
    pub sup_certificate: Certificate,
    pub t1: bool,
    /// For non-T₁ spaces: d ≠ 0 with ‖d| = 0.
    pub t1_certificate: Option<Vec<Rat>>,
    pub space_type: SpaceType,
}

/// c(X) with an attaining minimizer.
///
/// One LP per generator: minimize t subject to x on that facet of the
/// sphere and ⟨-aⱼ, x⟩ ≤ t for all j. Facets that never reach value 1
/// (possible with redundant generators) are infeasible and skipped.
pub fn index(g: &PolyhedralGauge) -> (Rat, Vec<Rat>) {
    let n = g.dim();
    let gens = g.generators();
    let mut best: Option<(Rat, Vec<Rat>)> = None;

    for active in gens {
        // Variables (x, t).
        let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::with_capacity(2 * gens.len() + 2);
        let mut eq = active.clone();
        eq.push(Rat::zero());
        rows.push((eq.clone(), Rat::one()));
        rows.push((linalg::neg(&eq), -Rat::one()));
        for a in gens {
            let mut ball_row = a.clone();
            ball_row.push(Rat::zero());
            rows.push((ball_row, Rat::one()));
            let mut rev_row = linalg::neg(a);
            rev_row.push(-Rat::one());
            rows.push((rev_row, Rat::zero()));
        }
        let poly = HPolyhedron::new(n + 1, rows).expect("facet rows are well-formed");
        let mut objective = linalg::zeros(n + 1);
        objective[n] = Rat::one();
        match lp_solve(&objective, Sense::Min, &poly).expect("dimensions agree") {
            LpOutcome::Optimal { value, point } => {
                let better = best.as_ref().is_none_or(|(b, _)| value < *b);
                if better {
                    best = Some((value, point[..n].to_vec()));
                }
            }
            LpOutcome::Infeasible => continue,
            LpOutcome::UnboundedAlong { .. } => {
                unreachable!("t is bounded below by 0 on a gauge facet")
            }
        }
    }

    let (c, minimizer) = best.expect("a valid gauge has a nonempty unit sphere");
    debug_assert!(!c.is_negative() && c <= Rat::one());
    debug_assert_eq!(g.eval(&minimizer).unwrap(), Rat::one());
    debug_assert_eq!(g.eval_reverse(&minimizer).unwrap(), c);
    (c, minimizer)
}

/// sup of ‖-x| over the unit ball, with certificate.
///
/// When the ball is bounded this equals the supremum over the sphere and is
/// attained: it is max over generators of the support value of -aⱼ. An
/// unbounded ball gives +inf along a recession ray, on which the reverse
/// norm is strictly positive.
pub fn sup_reverse(g: &PolyhedralGauge) -> (ExtendedRat, Certificate) {
    let ball = g.unit_ball();
    if let Some(ray) = recession_direction(&ball) {
        debug_assert!(g.eval_reverse(&ray).unwrap().is_positive());
        return (ExtendedRat::Infinity, Certificate::Ray(ray));
    }
    let mut best: Option<(Rat, Vec<Rat>)> = None;
    for a in g.generators() {
        let p = linalg::neg(a);
        let (value, cert) = support_value(&ball, &p).expect("ball contains 0");
        let value = match value {
            ExtendedRat::Finite(v) => v,
            ExtendedRat::Infinity => unreachable!("bounded ball has finite support values"),
        };
        let point = cert
            .as_point()
            .expect("finite support value attains")
            .to_vec();
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, point));
        }
    }
    let (value, point) = best.expect("gauges have at least one generator");
    debug_assert_eq!(g.eval_reverse(&point).unwrap(), value);
    // A bounded ball forces T₁ and hence c > 0; the winner sits on the sphere.
    debug_assert_eq!(g.eval(&point).unwrap(), Rat::one());
    (ExtendedRat::Finite(value), Certificate::Point(point))
}

/// The exact identity (sup ‖-x|)(inf ‖-x|) = 1 over the sphere.
///
/// Only meaningful when c > 0; calling it on a gauge with c = 0 is a
/// precondition error.
pub fn check_identity(g: &PolyhedralGauge) -> Result<bool> {
    let (c, _) = index(g);
    if c.is_zero() {
        return Err(Error::Precondition(
            "the product identity requires c(X) > 0".into(),
        ));
    }
    let (sup, _) = sup_reverse(g);
    let sup = sup.expect_finite("sup_reverse with c > 0");
    Ok(sup * &c == Rat::one())
}

/// T₁ ⟺ ‖x| > 0 for every x ≠ 0 ⟺ the unit ball has no recession
/// direction. Returns the witness direction otherwise.
pub fn is_t1(g: &PolyhedralGauge) -> (bool, Option<Vec<Rat>>) {
    match recession_direction(&g.unit_ball()) {
        Some(d) => {
            debug_assert!(g.eval(&d).unwrap().is_zero());
            debug_assert!(!linalg::is_zero(&d));
            (false, Some(d))
        }
        None => (true, None),
    }
}

/// Type I or type III; type II cannot occur for a polyhedral gauge.
///
/// Panics on the combinations c > 0 without T₁ and c = 0 with T₁: both are
/// mathematically impossible in finite dimension, so reaching one means the
/// engine itself is broken.
pub fn classify(g: &PolyhedralGauge) -> SpaceType {
    let (c, _) = index(g);
    let (t1, _) = is_t1(g);
    match (c.is_positive(), t1) {
        (true, true) => SpaceType::I,
        (false, false) => SpaceType::III,
        (true, false) => panic!(
            "internal invariant violation: c(X) > 0 must force T1 (gauge {:?})",
            g.label()
        ),
        (false, true) => panic!(
            "internal invariant violation: type II detected in finite dimension (gauge {:?})",
            g.label()
        ),
    }
}

/// Run the full symmetry analysis.
pub fn report(g: &PolyhedralGauge) -> SymmetryReport {
    let (c, minimizer) = index(g);
    let (sup, sup_certificate) = sup_reverse(g);
    let (t1, t1_certificate) = is_t1(g);
    let space_type = match (c.is_positive(), t1) {
        (true, true) => SpaceType::I,
        (false, false) => SpaceType::III,
        _ => panic!(
            "internal invariant violation: inconsistent (c, T1) pair for gauge {:?}",
            g.label()
        ),
    };
    SymmetryReport {
        c,
        minimizer,
        sup_reverse: sup,
        sup_certificate,
        t1,
        t1_certificate,
        space_type,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauge::fixtures::*;
    use crate::scalar::{int, rat};

    #[test]
    fn symmetric_linf_has_index_one() {
        let g = linf_sym(2).unwrap();
        let (c, min) = index(&g);
        assert_eq!(c, int(1));
        assert_eq!(g.eval(&min).unwrap(), int(1));
        assert_eq!(classify(&g), SpaceType::I);
        let (sup, _) = sup_reverse(&g);
        assert_eq!(sup, ExtendedRat::Finite(int(1)));
        assert!(check_identity(&g).unwrap());
    }

    #[test]
    fn upper_real_is_type_three() {
        let g = upper_real();
        let (c, min) = index(&g);
        assert_eq!(c, int(0));
        assert_eq!(min, vec![int(1)]);
        let (t1, cert) = is_t1(&g);
        assert!(!t1);
        assert_eq!(cert, Some(vec![int(-1)]));
        assert_eq!(classify(&g), SpaceType::III);
        // reverse norms on the ball are unbounded along the non-T1 direction
        let (sup, cert) = sup_reverse(&g);
        assert_eq!(sup, ExtendedRat::Infinity);
        assert_eq!(cert, Certificate::Ray(vec![int(-1)]));
        assert!(matches!(check_identity(&g), Err(Error::Precondition(_))));
    }

    #[test]
    fn weighted_family_index_and_identity() {
        for n in 2..=6usize {
            let g = weighted_linf(n).unwrap();
            let (c, min) = index(&g);
            assert_eq!(c, rat(1, n as i64), "c(weighted_linf({n}))");
            assert_eq!(g.eval(&min).unwrap(), int(1));
            assert_eq!(g.eval_reverse(&min).unwrap(), c);
            // e_n attains the same value, matching the family's witness
            let en = linalg::unit(n, n - 1);
            assert_eq!(g.eval_reverse(&en).unwrap(), c);
            let (sup, _) = sup_reverse(&g);
            assert_eq!(sup, ExtendedRat::Finite(int(n as i64)));
            assert!(check_identity(&g).unwrap());
            assert_eq!(classify(&g), SpaceType::I);
        }
    }

    #[test]
    fn referee_plane_classification() {
        let g = referee_plane();
        let (c, _) = index(&g);
        assert_eq!(c, int(0));
        let (t1, cert) = is_t1(&g);
        assert!(!t1);
        assert_eq!(cert, Some(vec![int(0), int(-1)]));
        assert_eq!(classify(&g), SpaceType::III);
    }

    #[test]
    fn sum_with_symmetric_has_half_index() {
        // hand expansion: gauge max(-t, 2t); sphere {1/2, -1}; c = 1/2, sup = 2.
        let g = upper_real().sum_with_symmetric();
        let (c, _) = index(&g);
        assert_eq!(c, rat(1, 2));
        let (sup, _) = sup_reverse(&g);
        assert_eq!(sup, ExtendedRat::Finite(int(2)));
        assert!(check_identity(&g).unwrap());
    }

    #[test]
    fn report_is_deterministic_and_consistent() {
        for g in [upper_real(), referee_plane(), weighted_linf(3).unwrap()] {
            let a = report(&g);
            let b = report(&g);
            assert_eq!(a.c, b.c);
            assert_eq!(a.minimizer, b.minimizer);
            assert_eq!(a.sup_certificate, b.sup_certificate);
            assert_eq!(a.t1, b.t1);
            assert_eq!(a.t1, a.t1_certificate.is_none());
            assert_eq!(a.space_type == SpaceType::I, a.c.is_positive());
        }
    }
}
