//! The dual cone X♭ of functionals continuous from (X, ‖·|) to the upper
//! real line.
//!
//! X♭ is a convex cone, not a vector space in general: p can be a member
//! while -p is not. Membership is decided by the flat norm
//! ‖p|♭ = sup{⟨p, x⟩ : ‖x| ≤ 1}. A finite supremum comes with an attaining
//! ball point; divergence comes with a ray r on which ‖r| = 0 but
//! ⟨p, r⟩ > 0 — the discontinuity certificate.

use num_traits::{One, Signed, Zero};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::gauge::PolyhedralGauge;
use crate::linalg::{self, dot};
use crate::polyhedra::support_value;
use crate::scalar::{format_rat, ExtendedRat, Rat};

/// A linear functional together with its flat norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFunctional {
    pub p: Vec<Rat>,
    /// sup over the unit ball of ⟨p, ·⟩; finite exactly when p ∈ X♭.
    pub flat_norm: ExtendedRat,
}

/// ‖p|♭ with certificate: attaining ball point, or a divergence ray with
/// ‖ray| = 0 and ⟨p, ray⟩ > 0.
pub fn flat_norm(g: &PolyhedralGauge, p: &[Rat]) -> Result<(ExtendedRat, Certificate)> {
    if p.len() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: p.len(),
        });
    }
    let (value, cert) = support_value(&g.unit_ball(), p).expect("unit balls contain 0");
    if let Certificate::Ray(r) = &cert {
        debug_assert!(g.eval(r).unwrap().is_zero());
        debug_assert!(dot(p, r).is_positive());
    }
    Ok((value, cert))
}

/// Membership p ∈ X♭, with the flat-norm certificate either way.
pub fn in_dual_cone(g: &PolyhedralGauge, p: &[Rat]) -> Result<(bool, ExtendedRat, Certificate)> {
    let (value, cert) = flat_norm(g, p)?;
    Ok((value.is_finite(), value, cert))
}

/// A Hahn–Banach support functional at x₀: p with ‖p|♭ = 1 and
/// ⟨p, x₀⟩ = ‖x₀|.
///
/// The construction is direct: take the lowest-index generator active at
/// x₀. Both defining equalities are re-verified exactly before returning.
/// Requires ‖x₀| > 0 — nothing normalizes at a point of vanishing norm.
pub fn support_functional(g: &PolyhedralGauge, x0: &[Rat]) -> Result<DualFunctional> {
    let norm = g.eval(x0)?;
    if !norm.is_positive() {
        return Err(Error::Precondition(format!(
            "support functional requires ‖x0| > 0, got ‖x0| = {}",
            format_rat(&norm)
        )));
    }
    let active = g
        .generators()
        .iter()
        .find(|a| dot(a, x0) == norm)
        .expect("the max is attained by some generator");
    let p = active.clone();
    let (value, _) = flat_norm(g, &p)?;
    assert_eq!(
        value,
        ExtendedRat::Finite(Rat::one()),
        "active generator must have flat norm 1"
    );
    assert_eq!(
        dot(&p, x0),
        norm,
        "support functional must attain ‖x0| at x0"
    );
    Ok(DualFunctional {
        p,
        flat_norm: value,
    })
}

/// Whether X♭ is all of the dual space rather than a proper cone.
///
/// Decided by membership of every ±coordinate functional: since X♭ is a
/// convex cone, it is full iff it contains all of ±e₁*, …, ±eₙ*. This route
/// is independent of the recession-cone test behind `symmetry::is_t1`, and
/// agrees with it on every gauge.
pub fn dual_cone_full(g: &PolyhedralGauge) -> bool {
    let n = g.dim();
    for k in 0..n {
        let e = linalg::unit(n, k);
        let (up, _) = flat_norm(g, &e).expect("dimensions agree");
        if up.is_infinite() {
            return false;
        }
        let (down, _) = flat_norm(g, &linalg::neg(&e)).expect("dimensions agree");
        if down.is_infinite() {
            return false;
        }
    }
    true
}

/// The symmetric dual norm ‖p‖* = sup{⟨p, x⟩ : ‖x‖ₛ ≤ 1}, always finite.
pub fn symmetric_dual_norm(g: &PolyhedralGauge, p: &[Rat]) -> Result<Rat> {
    if p.len() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: p.len(),
        });
    }
    let ball = g.symmetrize().unit_ball();
    let (value, _) = support_value(&ball, p).expect("symmetric balls contain 0");
    match value {
        ExtendedRat::Finite(v) => Ok(v),
        ExtendedRat::Infinity => unreachable!("symmetric balls are bounded"),
    }
}
