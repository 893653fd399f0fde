//! Machine- and human-readable reports for the CLI.
//!
//! JSON reports encode every scalar as a lossless string (`"p/q"` or
//! `"+inf"`), so parsing a report and re-serializing it is the identity.

use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::dual;
use crate::gauge::PolyhedralGauge;
use crate::operators::{LinearOperator, NonreversibleWitness, OpNormReport, Perturbation};
use crate::scalar::{format_rat, ExtendedRat, Rat};
use crate::symmetry::{self, SymmetryReport};

fn rats(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

fn matrix_strings(m: &[Vec<Rat>]) -> Vec<Vec<String>> {
    m.iter().map(|r| rats(r)).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateRepr {
    pub kind: String,
    pub coords: Vec<String>,
}

impl From<&Certificate> for CertificateRepr {
    fn from(c: &Certificate) -> Self {
        match c {
            Certificate::Point(p) => CertificateRepr {
                kind: "point".into(),
                coords: rats(p),
            },
            Certificate::Ray(r) => CertificateRepr {
                kind: "ray".into(),
                coords: rats(r),
            },
        }
    }
}

impl std::fmt::Display for CertificateRepr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ({})", self.kind, self.coords.join(", "))
    }
}

/// The consistency facts behind the classification: all four are computed
/// by distinct routes and must agree.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Consistency {
    pub c_positive: bool,
    pub t1: bool,
    pub dual_cone_full: bool,
    pub ball_bounded: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassifyReport {
    pub label: String,
    pub dim: usize,
    pub space_type: String,
    pub c: String,
    pub minimizer: Vec<String>,
    pub sup_reverse: String,
    pub sup_certificate: CertificateRepr,
    pub t1: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t1_certificate: Option<Vec<String>>,
    pub consistency: Consistency,
}

pub fn classify_report(g: &PolyhedralGauge) -> ClassifyReport {
    let sym: SymmetryReport = symmetry::report(g);
    let consistency = Consistency {
        c_positive: num_traits::Signed::is_positive(&sym.c),
        t1: sym.t1,
        dual_cone_full: dual::dual_cone_full(g),
        ball_bounded: sym.sup_reverse.is_finite(),
    };
    ClassifyReport {
        label: g.label().to_string(),
        dim: g.dim(),
        space_type: sym.space_type.to_string(),
        c: format_rat(&sym.c),
        minimizer: rats(&sym.minimizer),
        sup_reverse: sym.sup_reverse.to_string(),
        sup_certificate: (&sym.sup_certificate).into(),
        t1: sym.t1,
        t1_certificate: sym.t1_certificate.as_deref().map(rats),
        consistency,
    }
}

impl ClassifyReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "space {:?} (dim {}): type {}, c = {}\n",
            self.label, self.dim, self.space_type, self.c
        ));
        out.push_str(&format!(
            "  minimizer on the sphere: ({})\n",
            self.minimizer.join(", ")
        ));
        out.push_str(&format!(
            "  sup of reverse norms: {} at {}\n",
            self.sup_reverse, self.sup_certificate
        ));
        match &self.t1_certificate {
            None => out.push_str("  T1: yes\n"),
            Some(d) => out.push_str(&format!("  T1: no, certificate d = ({})\n", d.join(", "))),
        }
        let c = &self.consistency;
        out.push_str(&format!(
            "  consistency (c > 0, T1, dual cone full, ball bounded): {} {} {} {}\n",
            c.c_positive, c.t1, c.dual_cone_full, c.ball_bounded
        ));
        out
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IndexReport {
    pub label: String,
    pub c: String,
    pub minimizer: Vec<String>,
    pub sup_reverse: String,
    pub sup_certificate: CertificateRepr,
    /// Present when c > 0: whether (sup)(inf) = 1 held exactly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_identity: Option<bool>,
}

pub fn index_report(g: &PolyhedralGauge) -> IndexReport {
    let sym = symmetry::report(g);
    let product_identity = if num_traits::Signed::is_positive(&sym.c) {
        Some(symmetry::check_identity(g).expect("c > 0 checked"))
    } else {
        None
    };
    IndexReport {
        label: g.label().to_string(),
        c: format_rat(&sym.c),
        minimizer: rats(&sym.minimizer),
        sup_reverse: sym.sup_reverse.to_string(),
        sup_certificate: (&sym.sup_certificate).into(),
        product_identity,
    }
}

impl IndexReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "c({:?}) = {}, minimizer ({})\n",
            self.label,
            self.c,
            self.minimizer.join(", ")
        );
        out.push_str(&format!(
            "sup of reverse norms: {} at {}\n",
            self.sup_reverse, self.sup_certificate
        ));
        if let Some(ok) = self.product_identity {
            out.push_str(&format!("product identity (sup)(inf) = 1: {ok}\n"));
        }
        out
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DualNormReport {
    pub label: String,
    pub functional: Vec<String>,
    pub flat_norm: String,
    pub in_dual_cone: bool,
    pub certificate: CertificateRepr,
}

pub fn dual_norm_report(g: &PolyhedralGauge, p: &[Rat]) -> crate::error::Result<DualNormReport> {
    let (member, value, cert) = dual::in_dual_cone(g, p)?;
    Ok(DualNormReport {
        label: g.label().to_string(),
        functional: rats(p),
        flat_norm: value.to_string(),
        in_dual_cone: member,
        certificate: (&cert).into(),
    })
}

impl DualNormReport {
    pub fn render_text(&self) -> String {
        let membership = if self.in_dual_cone {
            "p ∈ X♭"
        } else {
            "p ∉ X♭"
        };
        format!(
            "‖p|♭ = {} for p = ({}) on {:?}: {}, certificate {}\n",
            self.flat_norm,
            self.functional.join(", "),
            self.label,
            membership,
            self.certificate
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OpNormCliReport {
    pub domain: String,
    pub codomain: String,
    pub matrix: Vec<Vec<String>>,
    pub lc_norm: String,
    pub ls_norm: String,
    pub continuous: bool,
    pub certificate: CertificateRepr,
}

pub fn opnorm_report(op: &LinearOperator, norms: &OpNormReport) -> OpNormCliReport {
    OpNormCliReport {
        domain: op.domain().label().to_string(),
        codomain: op.codomain().label().to_string(),
        matrix: matrix_strings(op.matrix()),
        lc_norm: norms.lc_norm.to_string(),
        ls_norm: format_rat(&norms.ls_norm),
        continuous: norms.lc_norm.is_finite(),
        certificate: (&norms.certificate).into(),
    }
}

impl OpNormCliReport {
    pub fn render_text(&self) -> String {
        format!(
            "‖T| = {} ({}), ‖T‖ between the symmetrizations = {}\ncertificate: {}\n",
            self.lc_norm,
            if self.continuous {
                "continuous"
            } else {
                "discontinuous"
            },
            self.ls_norm,
            self.certificate
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessCliReport {
    pub domain: String,
    pub codomain: String,
    pub matrix: Vec<Vec<String>>,
    pub forward_norm: String,
    pub discontinuity_ray: Vec<String>,
}

pub fn witness_report(w: &NonreversibleWitness) -> WitnessCliReport {
    WitnessCliReport {
        domain: w.operator.domain().label().to_string(),
        codomain: w.operator.codomain().label().to_string(),
        matrix: matrix_strings(w.operator.matrix()),
        forward_norm: format_rat(&w.forward_norm),
        discontinuity_ray: rats(&w.discontinuity_ray),
    }
}

impl WitnessCliReport {
    pub fn render_text(&self) -> String {
        format!(
            "witness T: {:?} -> {:?}, matrix {:?}\n‖T| = {} but -T is discontinuous along ray ({})\n",
            self.domain,
            self.codomain,
            self.matrix,
            self.forward_norm,
            self.discontinuity_ray.join(", ")
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PerturbCliReport {
    pub epsilon: String,
    pub perturbation_matrix: Vec<Vec<String>>,
    pub perturbation_norm: String,
    pub perturbed_matrix: Vec<Vec<String>>,
    pub perturbed_norm: String,
    pub discontinuity_ray: Vec<String>,
}

pub fn perturb_report(p: &Perturbation, epsilon: &Rat) -> PerturbCliReport {
    PerturbCliReport {
        epsilon: format_rat(epsilon),
        perturbation_matrix: matrix_strings(p.perturbation.matrix()),
        perturbation_norm: format_rat(&p.perturbation_norm),
        perturbed_matrix: matrix_strings(p.perturbed.matrix()),
        perturbed_norm: format_rat(&p.perturbed_norm),
        discontinuity_ray: rats(&p.discontinuity_ray),
    }
}

impl PerturbCliReport {
    pub fn render_text(&self) -> String {
        format!(
            "perturbation T with ‖T| = {} ≤ ε = {}: matrix {:?}\nH + T has ‖H+T| = {}, matrix {:?}\n-(H + T) is discontinuous along ray ({})\n",
            self.perturbation_norm,
            self.epsilon,
            self.perturbation_matrix,
            self.perturbed_norm,
            self.perturbed_matrix,
            self.discontinuity_ray.join(", ")
        )
    }
}

/// Extended scalar formatting shared with reports.
pub fn extended_to_string(v: &ExtendedRat) -> String {
    v.to_string()
}
