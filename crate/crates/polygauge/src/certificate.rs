//! Re-checkable witnesses attached to every computed value.

use crate::scalar::{format_vec, Rat};

/// A point or ray certifying a claim.
///
/// A `Point` attains a finite optimum; a `Ray` witnesses divergence (an
/// unbounded objective, a non-T₁ direction, a discontinuity direction).
/// Certificates are plain data: checking one is a finite sequence of exact
/// evaluations, never a re-run of the search that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Point(Vec<Rat>),
    Ray(Vec<Rat>),
}

impl Certificate {
    pub fn as_point(&self) -> Option<&[Rat]> {
        match self {
            Certificate::Point(p) => Some(p),
            Certificate::Ray(_) => None,
        }
    }

    pub fn as_ray(&self) -> Option<&[Rat]> {
        match self {
            Certificate::Ray(r) => Some(r),
            Certificate::Point(_) => None,
        }
    }

    pub fn coords(&self) -> &[Rat] {
        match self {
            Certificate::Point(p) | Certificate::Ray(p) => p,
        }
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Certificate::Point(p) => write!(f, "point {}", format_vec(p)),
            Certificate::Ray(r) => write!(f, "ray {}", format_vec(r)),
        }
    }
}
