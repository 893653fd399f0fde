//! Exact rational polyhedral geometry: LP solving with certificates,
//! support values, recession-cone tests, positive-span tests, and
//! vertex/ray enumeration.
//!
//! All operations are pure functions on immutable inputs and are
//! deterministic for a fixed input.

mod dd;
mod simplex;

use num_traits::{One, Signed, Zero};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::linalg::{self, dot};
use crate::scalar::{ExtendedRat, Rat};

/// An H-polyhedron `{x ∈ Qⁿ : ⟨aᵢ, x⟩ ≤ bᵢ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolyhedron {
    dim: usize,
    rows: Vec<(Vec<Rat>, Rat)>,
}

impl HPolyhedron {
    pub fn new(dim: usize, rows: Vec<(Vec<Rat>, Rat)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Input(
                "polyhedron dimension must be at least 1".into(),
            ));
        }
        for (i, (a, _)) in rows.iter().enumerate() {
            if a.len() != dim {
                return Err(Error::Input(format!(
                    "row {i} has {} coordinates, expected {dim}",
                    a.len()
                )));
            }
        }
        Ok(HPolyhedron { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[(Vec<Rat>, Rat)] {
        &self.rows
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.rows.iter().all(|(a, b)| dot(a, x) <= *b)
    }

    /// True iff x + t·d stays inside for all t ≥ 0, i.e. ⟨aᵢ, d⟩ ≤ 0 for
    /// every row.
    pub fn admits_direction(&self, d: &[Rat]) -> bool {
        self.rows.iter().all(|(a, _)| !dot(a, d).is_positive())
    }
}

/// Result of an exact LP solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rat, point: Vec<Rat> },
    UnboundedAlong { ray: Vec<Rat> },
    Infeasible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

/// A V-representation: `conv(vertices) + cone(rays)`.
///
/// Vertices and rays are listed in lexicographic order; rays have coprime
/// integer coordinates. For polyhedra with a lineality space the two
/// opposite generators of each line are both listed among the rays (a
/// minimal representation by extreme rays does not exist in that case).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    pub vertices: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
}

/// Size limits for [`enumerate_vrep`]. Double description is exponential
/// in the worst case, so both dimensions and row counts are capped.
#[derive(Clone, Copy, Debug)]
pub struct VrepCaps {
    pub max_dim: usize,
    pub max_rows: usize,
}

impl Default for VrepCaps {
    fn default() -> Self {
        VrepCaps {
            max_dim: 8,
            max_rows: 64,
        }
    }
}

/// Solve `max/min objective · x` over `poly` exactly.
///
/// Returns the optimum with an attaining point, an improving recession ray,
/// or infeasibility. Points are re-checked against every constraint and
/// against an exact dual certificate before being returned.
pub fn lp_solve(objective: &[Rat], sense: Sense, poly: &HPolyhedron) -> Result<LpOutcome> {
    if objective.len() != poly.dim {
        return Err(Error::DimensionMismatch {
            expected: poly.dim,
            got: objective.len(),
        });
    }
    let flipped;
    let obj: Vec<Rat> = match sense {
        Sense::Max => {
            flipped = false;
            objective.to_vec()
        }
        Sense::Min => {
            flipped = true;
            linalg::neg(objective)
        }
    };
    let rows: Vec<Vec<Rat>> = poly.rows.iter().map(|(a, _)| a.clone()).collect();
    let rhs: Vec<Rat> = poly.rows.iter().map(|(_, b)| b.clone()).collect();
    Ok(match simplex::maximize(&obj, &rows, &rhs) {
        simplex::RawOutcome::Optimal { value, point } => LpOutcome::Optimal {
            value: if flipped { -value } else { value },
            point,
        },
        simplex::RawOutcome::Unbounded { ray } => {
            // canonical, hashable certificate
            LpOutcome::UnboundedAlong {
                ray: linalg::coprime_integer(&ray),
            }
        }
        simplex::RawOutcome::Infeasible => LpOutcome::Infeasible,
    })
}

/// `sup_{x ∈ poly} ⟨p, x⟩` with a certificate: a finite value with an
/// attaining point, or `+inf` with an improving ray (coprime integer
/// coordinates).
pub fn support_value(poly: &HPolyhedron, p: &[Rat]) -> Result<(ExtendedRat, Certificate)> {
    match lp_solve(p, Sense::Max, poly)? {
        LpOutcome::Optimal { value, point } => {
            Ok((ExtendedRat::Finite(value), Certificate::Point(point)))
        }
        LpOutcome::UnboundedAlong { ray } => {
            let ray = linalg::coprime_integer(&ray);
            Ok((ExtendedRat::Infinity, Certificate::Ray(ray)))
        }
        LpOutcome::Infeasible => Err(Error::Input("support value of an empty polyhedron".into())),
    }
}

/// A nonzero direction in the recession cone `{d : ⟨aᵢ, d⟩ ≤ 0}`, or None
/// if the cone is trivial. The direction is returned with coprime integer
/// coordinates and the search is deterministic.
pub fn recession_direction(poly: &HPolyhedron) -> Option<Vec<Rat>> {
    let n = poly.dim;
    // Intersect the cone with the box [-1,1]ⁿ; the cone is nontrivial iff
    // some ±e_k objective attains a positive maximum there.
    let mut rows: Vec<(Vec<Rat>, Rat)> = poly
        .rows
        .iter()
        .map(|(a, _)| (a.clone(), Rat::zero()))
        .collect();
    for k in 0..n {
        rows.push((linalg::unit(n, k), Rat::one()));
        rows.push((linalg::neg(&linalg::unit(n, k)), Rat::one()));
    }
    let boxed = HPolyhedron::new(n, rows).expect("cone rows are well-formed");
    for k in 0..n {
        for sign in [1i64, -1] {
            let mut obj = linalg::zeros(n);
            obj[k] = crate::scalar::int(sign);
            match lp_solve(&obj, Sense::Max, &boxed).expect("dimensions agree") {
                LpOutcome::Optimal { value, point } if value.is_positive() => {
                    debug_assert!(poly.admits_direction(&point));
                    return Some(linalg::coprime_integer(&point));
                }
                LpOutcome::Optimal { .. } => {}
                other => unreachable!("boxed cone LP must be bounded and feasible: {other:?}"),
            }
        }
    }
    None
}

/// Enumerate vertices and extreme rays with the default caps.
pub fn enumerate_vrep(poly: &HPolyhedron) -> Result<VRep> {
    enumerate_vrep_with_caps(poly, VrepCaps::default())
}

/// Enumerate vertices and extreme rays by the double description method on
/// the homogenization cone.
pub fn enumerate_vrep_with_caps(poly: &HPolyhedron, caps: VrepCaps) -> Result<VRep> {
    if poly.dim > caps.max_dim {
        return Err(Error::Capacity(format!(
            "vertex enumeration capped at dimension {}, got {}",
            caps.max_dim, poly.dim
        )));
    }
    if poly.rows.len() > caps.max_rows {
        return Err(Error::Capacity(format!(
            "vertex enumeration capped at {} rows, got {}",
            caps.max_rows,
            poly.rows.len()
        )));
    }
    let mut vrep = dd::double_description(poly);
    vrep.vertices.sort_by(|a, b| linalg::lex_cmp(a, b));
    vrep.rays.sort_by(|a, b| linalg::lex_cmp(a, b));
    debug_assert!(vrep.vertices.iter().all(|v| poly.contains(v)));
    debug_assert!(vrep.rays.iter().all(|r| poly.admits_direction(r)));
    Ok(vrep)
}

/// True iff `cone(vectors) = Qⁿ`, decided by checking that the polar cone
/// `{x : ⟨vᵢ, x⟩ ≤ 0}` is trivial.
pub fn positively_spans(vectors: &[Vec<Rat>]) -> bool {
    assert!(
        !vectors.is_empty(),
        "positively_spans needs a nonempty list"
    );
    let dim = vectors[0].len();
    let rows = vectors.iter().map(|v| (v.clone(), Rat::zero())).collect();
    let polar = HPolyhedron::new(dim, rows).expect("polar rows are well-formed");
    recession_direction(&polar).is_none()
}
