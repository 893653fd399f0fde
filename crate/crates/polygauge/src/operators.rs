//! Linear operators between asymmetric normed spaces.
//!
//! The asymmetric operator norm is ‖T| = sup{‖Tx|_Y : ‖x|_X ≤ 1}; it is
//! finite exactly when T is continuous, and the continuous operators form a
//! convex cone L_c(X,Y) that fails to be a vector space exactly when
//! c(X) = c(Y) = 0. This module computes ‖T| and the symmetric operator
//! norm by support LPs (one per codomain generator), builds the rank-one
//! embedding p⊗e, constructs operators T with -T discontinuous together
//! with re-checkable certificates, produces the ε-perturbations that break
//! symmetry arbitrarily close to any continuous operator, and realizes the
//! operator space itself as a polyhedral gauge when c(X) > 0.

use num_traits::{One, Signed, Zero};

use crate::certificate::Certificate;
use crate::dual::{flat_norm, support_functional};
use crate::error::{Error, Result};
use crate::gauge::PolyhedralGauge;
use crate::linalg;
use crate::polyhedra::{enumerate_vrep, support_value};
use crate::scalar::{format_rat, ExtendedRat, Rat};
use crate::symmetry;

/// A rational matrix acting between two gauged spaces.
///
/// The matrix is m×n row-major: rows index codomain coordinates. Operators
/// own their gauges; arithmetic (negation, sums, scaling) requires the
/// spaces to match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator {
    matrix: Vec<Vec<Rat>>,
    domain: PolyhedralGauge,
    codomain: PolyhedralGauge,
}

impl LinearOperator {
    pub fn new(
        matrix: Vec<Vec<Rat>>,
        domain: PolyhedralGauge,
        codomain: PolyhedralGauge,
    ) -> Result<Self> {
        if matrix.len() != codomain.dim() {
            return Err(Error::Input(format!(
                "matrix has {} rows, codomain dimension is {}",
                matrix.len(),
                codomain.dim()
            )));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != domain.dim() {
                return Err(Error::Input(format!(
                    "matrix row {i} has {} entries, domain dimension is {}",
                    row.len(),
                    domain.dim()
                )));
            }
        }
        Ok(LinearOperator {
            matrix,
            domain,
            codomain,
        })
    }

    /// The zero operator between two spaces.
    pub fn zero(domain: PolyhedralGauge, codomain: PolyhedralGauge) -> Self {
        let matrix = vec![linalg::zeros(domain.dim()); codomain.dim()];
        LinearOperator {
            matrix,
            domain,
            codomain,
        }
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }

    pub fn domain(&self) -> &PolyhedralGauge {
        &self.domain
    }

    pub fn codomain(&self) -> &PolyhedralGauge {
        &self.codomain
    }

    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        linalg::mat_vec(&self.matrix, x)
    }

    /// Tᵀb, pulling a codomain functional back to the domain.
    pub fn transpose_apply(&self, b: &[Rat]) -> Vec<Rat> {
        let n = self.domain.dim();
        let mut out = linalg::zeros(n);
        for (i, row) in self.matrix.iter().enumerate() {
            if b[i].is_zero() {
                continue;
            }
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out[j] += &b[i] * v;
                }
            }
        }
        out
    }

    pub fn negated(&self) -> LinearOperator {
        LinearOperator {
            matrix: self.matrix.iter().map(|r| linalg::neg(r)).collect(),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
        }
    }

    pub fn scaled(&self, c: &Rat) -> LinearOperator {
        LinearOperator {
            matrix: self.matrix.iter().map(|r| linalg::scale(r, c)).collect(),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
        }
    }

    /// Sum of two operators between the same spaces.
    pub fn sum(&self, other: &LinearOperator) -> Result<LinearOperator> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::Input(
                "operator sum requires identical spaces".into(),
            ));
        }
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(a, b)| linalg::add(a, b))
            .collect();
        Ok(LinearOperator {
            matrix,
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
        })
    }
}

/// Both operator norms plus the certificate for the asymmetric one.
#[derive(Clone, Debug)]
pub struct OpNormReport {
    /// ‖T| = sup over the domain unit ball of ‖Tx|_Y; +inf iff T is
    /// discontinuous.
    pub lc_norm: ExtendedRat,
    /// Attaining ball point, or a ray r with ‖r|_X = 0 and ‖Tr|_Y > 0.
    pub certificate: Certificate,
    /// The usual operator norm between the associated normed spaces;
    /// always finite and never above a finite lc_norm.
    pub ls_norm: Rat,
}

/// Compute ‖T| (one support LP per codomain generator) together with
/// ‖T‖ between the symmetrizations.
pub fn lc_norm(op: &LinearOperator) -> OpNormReport {
    let ball = op.domain().unit_ball();
    let mut best: Option<(Rat, Vec<Rat>)> = None;
    let mut divergence: Option<Certificate> = None;
    for b in op.codomain().generators() {
        let pulled = op.transpose_apply(b);
        let (value, cert) = support_value(&ball, &pulled).expect("unit balls contain 0");
        match value {
            ExtendedRat::Infinity => {
                if divergence.is_none() {
                    divergence = Some(cert);
                }
            }
            ExtendedRat::Finite(v) => {
                if best.as_ref().is_none_or(|(b, _)| v > *b) {
                    let point = cert.as_point().expect("finite support attains").to_vec();
                    best = Some((v, point));
                }
            }
        }
    }
    let ls = ls_norm(op);
    if let Some(ray_cert) = divergence {
        let ray = ray_cert.as_ray().expect("divergence carries a ray");
        debug_assert!(op.domain().eval(ray).unwrap().is_zero());
        debug_assert!(op.codomain().eval(&op.apply(ray)).unwrap().is_positive());
        return OpNormReport {
            lc_norm: ExtendedRat::Infinity,
            certificate: Certificate::Ray(ray.to_vec()),
            ls_norm: ls,
        };
    }
    let (value, point) = best.expect("codomain has at least one generator");
    debug_assert_eq!(op.codomain().eval(&op.apply(&point)).unwrap(), value);
    debug_assert!(ls <= value);
    OpNormReport {
        lc_norm: ExtendedRat::Finite(value),
        certificate: Certificate::Point(point),
        ls_norm: ls,
    }
}

/// The symmetric operator norm: the same LP scheme with both gauges
/// symmetrized. Always finite.
pub fn ls_norm(op: &LinearOperator) -> Rat {
    let ball = op.domain().symmetrize().unit_ball();
    let mut best = Rat::zero();
    for b in op.codomain().symmetrize().generators() {
        let pulled = op.transpose_apply(b);
        let (value, _) = support_value(&ball, &pulled).expect("symmetric balls contain 0");
        match value {
            ExtendedRat::Finite(v) => {
                if v > best {
                    best = v;
                }
            }
            ExtendedRat::Infinity => unreachable!("symmetric balls are bounded"),
        }
    }
    best
}

/// Boundedness = continuity. False comes with the violating ray.
pub fn is_continuous(op: &LinearOperator) -> (bool, OpNormReport) {
    let report = lc_norm(op);
    (report.lc_norm.is_finite(), report)
}

/// The rank-one operator p⊗e : x ↦ ⟨p, x⟩e, for a codomain direction with
/// ‖e| = 1 and ‖-e| = 0.
///
/// Under that hypothesis ‖p⊗e| = ‖p|♭ exactly (with +inf on both sides when
/// p ∉ X♭); the equality is re-verified through the LP machinery before the
/// operator is returned.
pub fn rank_one(
    domain: &PolyhedralGauge,
    codomain: &PolyhedralGauge,
    p: &[Rat],
    e: &[Rat],
) -> Result<LinearOperator> {
    if p.len() != domain.dim() {
        return Err(Error::DimensionMismatch {
            expected: domain.dim(),
            got: p.len(),
        });
    }
    let e_norm = codomain.eval(e)?;
    let e_rev = codomain.eval_reverse(e)?;
    if !(e_norm.is_one() && e_rev.is_zero()) {
        return Err(Error::Precondition(format!(
            "rank-one embedding requires ‖e| = 1 and ‖-e| = 0, got ‖e| = {}, ‖-e| = {}",
            format_rat(&e_norm),
            format_rat(&e_rev)
        )));
    }
    let matrix = e.iter().map(|ei| linalg::scale(p, ei)).collect();
    let op = LinearOperator::new(matrix, domain.clone(), codomain.clone())?;
    let (expected, _) = flat_norm(domain, p)?;
    let report = lc_norm(&op);
    assert_eq!(
        report.lc_norm, expected,
        "rank-one isometry must hold under the hypothesis on e"
    );
    Ok(op)
}

/// Whether L_c(X, Y) is a vector space: true unless c(X) = c(Y) = 0.
pub fn lc_is_vector_space(x: &PolyhedralGauge, y: &PolyhedralGauge) -> bool {
    let (cx, _) = symmetry::index(x);
    let (cy, _) = symmetry::index(y);
    !(cx.is_zero() && cy.is_zero())
}

/// A continuous operator whose negative is discontinuous, with both facts
/// certified.
#[derive(Clone, Debug)]
pub struct NonreversibleWitness {
    pub operator: LinearOperator,
    /// ‖T|; equals 1 by construction (the rank-one isometry).
    pub forward_norm: Rat,
    /// Ray r with ‖r|_X = 0 and ‖(-T)(r)|_Y > 0, certifying -T ∉ L_c.
    pub discontinuity_ray: Vec<Rat>,
}

/// Build T ∈ L_c(X, Y) with -T ∉ L_c(X, Y).
///
/// Requires c(X) = 0 and Y not T₁. The construction mirrors the cone
/// structure: take the non-T₁ witness d of X, normalize a = -d/‖-d| so that
/// ‖a| = 1 and ‖-a| = 0, pick a support functional p at a, take the unit
/// non-T₁ direction e of Y, and return p⊗e. Both continuity facts are
/// re-verified through the LP machinery before returning.
pub fn nonreversible_witness(
    x: &PolyhedralGauge,
    y: &PolyhedralGauge,
) -> Result<NonreversibleWitness> {
    let (cx, _) = symmetry::index(x);
    if !cx.is_zero() {
        return Err(Error::Precondition(format!(
            "nonreversible witness requires c(X) = 0, got c(X) = {}",
            format_rat(&cx)
        )));
    }
    let (y_t1, y_cert) = symmetry::is_t1(y);
    if y_t1 {
        return Err(Error::Precondition(
            "nonreversible witness requires a non-T1 codomain".into(),
        ));
    }

    // c(X) = 0 forces X non-T1 in finite dimension.
    let (_, x_cert) = symmetry::is_t1(x);
    let d = x_cert.expect("c(X) = 0 implies a non-T1 witness in finite dimension");
    let rev = x.eval_reverse(&d)?;
    debug_assert!(rev.is_positive());
    let a = linalg::scale(&linalg::neg(&d), &rev.recip());
    debug_assert!(x.eval(&a)?.is_one());
    debug_assert!(x.eval_reverse(&a)?.is_zero());

    let p = support_functional(x, &a)?.p;

    let dy = y_cert.expect("non-T1 codomain has a witness");
    let rev_y = y.eval_reverse(&dy)?;
    let e = linalg::scale(&linalg::neg(&dy), &rev_y.recip());

    let op = rank_one(x, y, &p, &e)?;
    let (cont, forward) = is_continuous(&op);
    assert!(cont, "the witness itself must be continuous");
    let forward_norm = forward.lc_norm.expect_finite("forward norm").clone();
    let (rev_cont, reverse) = is_continuous(&op.negated());
    assert!(
        !rev_cont,
        "the negative of the witness must be discontinuous"
    );
    let ray = reverse
        .certificate
        .as_ray()
        .expect("discontinuity carries a ray")
        .to_vec();
    Ok(NonreversibleWitness {
        operator: op,
        forward_norm,
        discontinuity_ray: ray,
    })
}

/// An ε-perturbation of H that breaks symmetry: T with ‖T| ≤ ε such that
/// H + T stays continuous while -(H + T) is not.
#[derive(Clone, Debug)]
pub struct Perturbation {
    /// The perturbing operator T = ε·(p⊗e).
    pub perturbation: LinearOperator,
    /// ‖T|, exactly ≤ ε.
    pub perturbation_norm: Rat,
    /// H + T.
    pub perturbed: LinearOperator,
    /// ‖H + T|.
    pub perturbed_norm: Rat,
    /// Ray certifying -(H + T) ∉ L_c.
    pub discontinuity_ray: Vec<Rat>,
}

/// Perturb a continuous H by ε·(p⊗e) so that the sum has a discontinuous
/// negative. Requires c(X) = 0, Y not T₁, and H continuous; every claim in
/// the result is re-verified exactly before returning.
pub fn perturb_nonsymmetric(h: &LinearOperator, epsilon: &Rat) -> Result<Perturbation> {
    if !epsilon.is_positive() {
        return Err(Error::Input("perturbation size must be positive".into()));
    }
    let witness = nonreversible_witness(h.domain(), h.codomain())?;
    let (h_cont, _) = is_continuous(h);
    if !h_cont {
        return Err(Error::Precondition(
            "perturbation requires a continuous base operator".into(),
        ));
    }
    let t = witness.operator.scaled(epsilon);
    let t_report = lc_norm(&t);
    let t_norm = t_report.lc_norm.expect_finite("perturbation norm").clone();
    assert!(
        &t_norm <= epsilon,
        "perturbation norm must stay within epsilon"
    );

    let perturbed = h.sum(&t)?;
    let (sum_cont, sum_report) = is_continuous(&perturbed);
    assert!(sum_cont, "H + T must remain continuous");
    let perturbed_norm = sum_report.lc_norm.expect_finite("perturbed norm").clone();
    let (rev_cont, rev_report) = is_continuous(&perturbed.negated());
    assert!(!rev_cont, "-(H + T) must be discontinuous");
    let ray = rev_report
        .certificate
        .as_ray()
        .expect("discontinuity carries a ray")
        .to_vec();
    Ok(Perturbation {
        perturbation: t,
        perturbation_norm: t_norm,
        perturbed,
        perturbed_norm,
        discontinuity_ray: ray,
    })
}

/// The operator space L_c(X, Y) as a polyhedral gauge on matrices
/// (flattened row-major), valid when c(X) > 0.
///
/// With a bounded domain ball, ‖T| = max over codomain generators b and
/// ball vertices v of ⟨b, Tv⟩, a max of linear functionals of the entries
/// with generators b⊗v. Evaluating the result on a flattened matrix
/// reproduces ‖T| exactly, and the index of the resulting gauge is at least
/// c(X).
pub fn operator_space_gauge(x: &PolyhedralGauge, y: &PolyhedralGauge) -> Result<PolyhedralGauge> {
    let (cx, _) = symmetry::index(x);
    if cx.is_zero() {
        return Err(Error::Precondition(
            "the operator space is a gauge space only when c(X) > 0".into(),
        ));
    }
    let vrep = enumerate_vrep(&x.unit_ball())?;
    assert!(vrep.rays.is_empty(), "c(X) > 0 forces a bounded unit ball");
    let n = x.dim();
    let m = y.dim();
    let mut generators = Vec::with_capacity(y.generators().len() * vrep.vertices.len());
    for b in y.generators() {
        for v in &vrep.vertices {
            let mut g = Vec::with_capacity(m * n);
            for bi in b {
                for vj in v {
                    g.push(bi * vj);
                }
            }
            generators.push(g);
        }
    }
    PolyhedralGauge::new(
        m * n,
        generators,
        format!("Lc({} -> {})", x.label(), y.label()),
    )
}

/// Flatten an operator matrix row-major for evaluation against
/// [`operator_space_gauge`].
pub fn flatten_matrix(matrix: &[Vec<Rat>]) -> Vec<Rat> {
    matrix.iter().flat_map(|r| r.iter().cloned()).collect()
}
