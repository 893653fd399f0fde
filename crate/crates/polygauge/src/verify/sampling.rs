//! Seeded random generation of gauges, points, and operators.
//!
//! Plain rejection sampling almost never produces non-T₁ or exactly
//! symmetric gauges, so the population is stratified: half generic, a
//! quarter symmetric by construction, a quarter with a forced recession
//! direction. Every sample still passes full gauge validation.

use num_traits::Zero;
use rand::Rng;

use crate::gauge::PolyhedralGauge;
use crate::linalg;
use crate::operators::LinearOperator;
use crate::polyhedra::{enumerate_vrep_with_caps, HPolyhedron, VrepCaps};
use crate::scalar::{int, rat, Rat};

const MAX_RETRIES: usize = 10_000;

pub fn random_dim<R: Rng>(rng: &mut R, dims: (usize, usize)) -> usize {
    rng.gen_range(dims.0..=dims.1)
}

/// An integer point with entries in [-5, 5].
pub fn random_int_vector<R: Rng>(rng: &mut R, dim: usize) -> Vec<Rat> {
    (0..dim).map(|_| int(rng.gen_range(-5..=5))).collect()
}

/// A rational point with small numerators and denominators.
pub fn random_point<R: Rng>(rng: &mut R, dim: usize) -> Vec<Rat> {
    (0..dim)
        .map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
        .collect()
}

/// A small nonnegative rational, for homogeneity checks.
pub fn random_nonneg_scalar<R: Rng>(rng: &mut R) -> Rat {
    rat(rng.gen_range(0..=6), rng.gen_range(1..=3))
}

fn generator_count<R: Rng>(rng: &mut R, dim: usize) -> usize {
    rng.gen_range(dim + 1..=3 * dim)
}

fn generic_gauge<R: Rng>(rng: &mut R, dim: usize) -> PolyhedralGauge {
    for _ in 0..MAX_RETRIES {
        let k = generator_count(rng, dim);
        let gens: Vec<Vec<Rat>> = (0..k).map(|_| random_int_vector(rng, dim)).collect();
        if let Ok(g) = PolyhedralGauge::new(dim, gens, "random") {
            return g;
        }
    }
    panic!("gauge sampler failed to produce a valid generic gauge");
}

fn symmetric_gauge<R: Rng>(rng: &mut R, dim: usize) -> PolyhedralGauge {
    for _ in 0..MAX_RETRIES {
        let half = generator_count(rng, dim).div_ceil(2);
        let mut gens: Vec<Vec<Rat>> = Vec::with_capacity(2 * half);
        for _ in 0..half {
            let v = random_int_vector(rng, dim);
            gens.push(linalg::neg(&v));
            gens.push(v);
        }
        if let Ok(g) = PolyhedralGauge::new(dim, gens, "random-symmetric") {
            return g;
        }
    }
    panic!("gauge sampler failed to produce a valid symmetric gauge");
}

/// A gauge whose unit ball recedes along a chosen signed axis: every
/// generator has a zero or opposite-sign component there, so the axis
/// direction has norm exactly 0.
fn non_t1_gauge<R: Rng>(rng: &mut R, dim: usize) -> PolyhedralGauge {
    for _ in 0..MAX_RETRIES {
        let axis = rng.gen_range(0..dim);
        let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let k = generator_count(rng, dim);
        let gens: Vec<Vec<Rat>> = (0..k)
            .map(|_| {
                let mut v = random_int_vector(rng, dim);
                let raw: i64 = rng.gen_range(0..=5);
                v[axis] = if rng.gen_bool(0.5) {
                    int(0)
                } else {
                    int(-sign * raw)
                };
                v
            })
            .collect();
        if let Ok(g) = PolyhedralGauge::new(dim, gens, "random-non-t1") {
            return g;
        }
    }
    panic!("gauge sampler failed to produce a valid non-T1 gauge");
}

/// Stratified random gauge: 50% generic, 25% symmetric, 25% non-T₁.
pub fn random_gauge<R: Rng>(rng: &mut R, dims: (usize, usize)) -> PolyhedralGauge {
    let dim = random_dim(rng, dims);
    match rng.gen_range(0..4) {
        0 | 1 => generic_gauge(rng, dim),
        2 => symmetric_gauge(rng, dim),
        _ => non_t1_gauge(rng, dim),
    }
}

/// A random matrix with small rational entries.
pub fn random_matrix<R: Rng>(rng: &mut R, m: usize, n: usize) -> Vec<Vec<Rat>> {
    (0..m)
        .map(|_| {
            (0..n)
                .map(|_| rat(rng.gen_range(-3..=3), rng.gen_range(1..=2)))
                .collect()
        })
        .collect()
}

/// A random member of L_c(X, Y): a raw matrix composed with the projection
/// that annihilates the span of the domain ball's recession rays. Operators
/// built this way are always continuous (the image of every recession
/// direction is 0), which is re-checkable through the norm LPs.
pub fn random_continuous_operator<R: Rng>(
    rng: &mut R,
    domain: &PolyhedralGauge,
    codomain: &PolyhedralGauge,
) -> LinearOperator {
    let matrix = random_matrix(rng, codomain.dim(), domain.dim());
    let matrix = project_out_recession(matrix, domain);
    LinearOperator::new(matrix, domain.clone(), codomain.clone())
        .expect("sampled dimensions are consistent")
}

/// M ↦ M·P where P is the orthogonal projection onto the complement of the
/// recession span of the domain's unit ball.
pub fn project_out_recession(matrix: Vec<Vec<Rat>>, domain: &PolyhedralGauge) -> Vec<Vec<Rat>> {
    let n = domain.dim();
    let cone_rows = domain
        .generators()
        .iter()
        .map(|a| (a.clone(), Rat::zero()))
        .collect();
    let cone = HPolyhedron::new(n, cone_rows).expect("cone rows are well-formed");
    let caps = VrepCaps {
        max_dim: n.max(8),
        max_rows: domain.generators().len().max(64),
    };
    let rays = enumerate_vrep_with_caps(&cone, caps)
        .expect("caps sized to fit")
        .rays;
    if rays.is_empty() {
        return matrix;
    }
    // exact Gram-Schmidt on the ray span
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for ray in &rays {
        let mut v = ray.clone();
        for b in &basis {
            let coeff = linalg::dot(&v, b) / linalg::dot(b, b);
            v = linalg::sub(&v, &linalg::scale(b, &coeff));
        }
        if !linalg::is_zero(&v) {
            basis.push(v);
        }
    }
    matrix
        .into_iter()
        .map(|row| {
            let mut r = row;
            for b in &basis {
                let coeff = linalg::dot(&r, b) / linalg::dot(b, b);
                r = linalg::sub(&r, &linalg::scale(b, &coeff));
            }
            r
        })
        .collect()
}
