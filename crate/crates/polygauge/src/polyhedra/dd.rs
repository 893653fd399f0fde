//! Double description on the homogenization cone.
//!
//! The polyhedron {x : Ax ≤ b} is lifted to the cone
//! {(x₀, x) : x₀ ≥ 0, Ax − b·x₀ ≤ 0}; its extreme rays with x₀ > 0 are the
//! vertices (after dividing by x₀) and those with x₀ = 0 are the extreme
//! recession rays. Halfspaces are inserted one at a time. While the current
//! intersection still has a lineality space, inserting a halfspace that
//! cuts it consumes one lineality generator and turns it into a ray; once
//! the cone is pointed modulo its lineality, the classic step applies with
//! the combinatorial adjacency test on active-constraint sets.

use num_traits::{One, Signed, Zero};

use crate::linalg::{coprime_integer, dot, neg, scale, sub, unit, zeros};
use crate::scalar::Rat;

use super::{HPolyhedron, VRep};

#[derive(Clone)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(words: usize) -> Self {
        BitSet(vec![0; words])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_superset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

#[derive(Clone)]
struct Ray {
    v: Vec<Rat>,
    /// Which of the already-processed halfspaces are active (tight) here.
    zero: BitSet,
}

pub(crate) fn double_description(poly: &HPolyhedron) -> VRep {
    let n = poly.dim();
    let d = n + 1;

    // Homogeneous halfspace normals η with constraint η·y ≤ 0; the x₀ ≥ 0
    // row goes first.
    let mut normals: Vec<Vec<Rat>> = Vec::with_capacity(poly.rows().len() + 1);
    let mut nonneg = zeros(d);
    nonneg[0] = -Rat::one();
    normals.push(nonneg);
    for (a, b) in poly.rows() {
        let mut h = Vec::with_capacity(d);
        h.push(-b);
        h.extend(a.iter().cloned());
        normals.push(h);
    }
    let words = normals.len().div_ceil(64);

    let mut lineality: Vec<Vec<Rat>> = (0..d).map(|k| unit(d, k)).collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (t, eta) in normals.iter().enumerate() {
        if let Some(idx) = lineality.iter().position(|l| !dot(eta, l).is_zero()) {
            // The halfspace cuts the lineality space: one generator leaves
            // it and becomes a ray, everything else moves into ker(η).
            let mut l0 = lineality.remove(idx);
            if dot(eta, &l0).is_positive() {
                l0 = neg(&l0);
            }
            let e0 = dot(eta, &l0);
            for l in lineality.iter_mut() {
                let e = dot(eta, l);
                if !e.is_zero() {
                    *l = coprime_integer(&sub(l, &scale(&l0, &(&e / &e0))));
                }
            }
            for r in rays.iter_mut() {
                let e = dot(eta, &r.v);
                if !e.is_zero() {
                    r.v = coprime_integer(&sub(&r.v, &scale(&l0, &(&e / &e0))));
                }
                r.zero.set(t);
            }
            let mut z = BitSet::new(words);
            for c in 0..t {
                z.set(c);
            }
            rays.push(Ray {
                v: coprime_integer(&l0),
                zero: z,
            });
            continue;
        }

        // Classic step: split rays by the sign of η·r.
        let evals: Vec<Rat> = rays.iter().map(|r| dot(eta, &r.v)).collect();
        if !evals.iter().any(|e| e.is_positive()) {
            for (r, e) in rays.iter_mut().zip(&evals) {
                if e.is_zero() {
                    r.zero.set(t);
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for (r, e) in rays.iter().zip(&evals) {
            if e.is_positive() {
                continue;
            }
            let mut kept = r.clone();
            if e.is_zero() {
                kept.zero.set(t);
            }
            next.push(kept);
        }
        for (i, ri) in rays.iter().enumerate() {
            if !evals[i].is_positive() {
                continue;
            }
            for (j, rj) in rays.iter().enumerate() {
                if !evals[j].is_negative() {
                    continue;
                }
                let common = ri.zero.and(&rj.zero);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, rk)| k == i || k == j || !rk.zero.is_superset(&common));
                if !adjacent {
                    continue;
                }
                // Conic combination that lands exactly on the hyperplane.
                let w = sub(&scale(&rj.v, &evals[i]), &scale(&ri.v, &evals[j]));
                let mut z = common;
                z.set(t);
                next.push(Ray {
                    v: coprime_integer(&w),
                    zero: z,
                });
            }
        }
        rays = next;
    }

    let mut vertices = Vec::new();
    let mut out_rays = Vec::new();
    for r in rays {
        let x0 = &r.v[0];
        if x0.is_positive() {
            vertices.push(r.v[1..].iter().map(|c| c / x0).collect());
        } else {
            debug_assert!(x0.is_zero(), "homogenization keeps x0 nonnegative");
            out_rays.push(r.v[1..].to_vec());
        }
    }
    for l in lineality {
        debug_assert!(l[0].is_zero(), "lineality cannot meet x0 > 0");
        let dir = l[1..].to_vec();
        out_rays.push(neg(&dir));
        out_rays.push(dir);
    }
    VRep {
        vertices,
        rays: out_rays,
    }
}
