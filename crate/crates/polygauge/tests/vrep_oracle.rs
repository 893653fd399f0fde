//! Brute-force oracle for vertex/ray enumeration.
//!
//! For pointed polyhedra in low dimension the V-representation can be
//! computed by exhaustive basis enumeration: vertices are the feasible
//! solutions of n-row invertible subsystems, and extreme rays are the
//! feasible kernel directions of rank-(n-1) subsystems of the recession
//! cone. That route shares no code with the double description method, so
//! exact agreement on random gauge balls is a genuine cross-check.

use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polygauge::gauge::fixtures;
use polygauge::linalg::{self, dot};
use polygauge::polyhedra::{enumerate_vrep, HPolyhedron};
use polygauge::scalar::{int, Rat};
use polygauge::verify::sampling;

/// Solve the square system rows · x = rhs exactly; None if singular.
fn solve_square(rows: &[&[Rat]], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let n = rhs.len();
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.to_vec();
            row.push(b.clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for v in m[c].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let t = &m[c][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, m: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..m {
            current.push(i);
            rec(i + 1, m, k, current, out);
            current.pop();
        }
    }
    rec(0, m, k, &mut current, &mut out);
    out
}

fn brute_force_vertices(poly: &HPolyhedron) -> Vec<Vec<Rat>> {
    let n = poly.dim();
    let rows = poly.rows();
    let mut vertices: Vec<Vec<Rat>> = Vec::new();
    for subset in subsets(rows.len(), n) {
        let sub_rows: Vec<&[Rat]> = subset.iter().map(|&i| rows[i].0.as_slice()).collect();
        let sub_rhs: Vec<Rat> = subset.iter().map(|&i| rows[i].1.clone()).collect();
        let Some(x) = solve_square(&sub_rows, &sub_rhs) else {
            continue;
        };
        if poly.contains(&x) && !vertices.contains(&x) {
            vertices.push(x);
        }
    }
    vertices.sort_by(|a, b| linalg::lex_cmp(a, b));
    vertices
}

fn brute_force_rays(poly: &HPolyhedron) -> Vec<Vec<Rat>> {
    let n = poly.dim();
    let normals: Vec<&Vec<Rat>> = poly.rows().iter().map(|(a, _)| a).collect();
    let mut rays: Vec<Vec<Rat>> = Vec::new();
    if n == 0 {
        return rays;
    }
    for subset in subsets(normals.len(), n.saturating_sub(1)) {
        let sub: Vec<Vec<Rat>> = subset.iter().map(|&i| normals[i].clone()).collect();
        if linalg::rank(&sub, n) != n - 1 {
            continue;
        }
        let Some(d) = linalg::kernel_vector(&sub, n) else {
            continue;
        };
        for candidate in [linalg::coprime_integer(&d), linalg::coprime_integer(&linalg::neg(&d))] {
            let inside = normals.iter().all(|a| !dot(a, &candidate).is_positive());
            if !inside {
                continue;
            }
            // extreme ⟺ the active normals have rank n-1
            let active: Vec<Vec<Rat>> = normals
                .iter()
                .filter(|a| dot(a, &candidate).is_zero())
                .map(|a| (*a).clone())
                .collect();
            if linalg::rank(&active, n) == n - 1 && !rays.contains(&candidate) {
                rays.push(candidate);
            }
        }
    }
    rays.sort_by(|a, b| linalg::lex_cmp(a, b));
    rays
}

fn cross_check(poly: &HPolyhedron, context: &str) {
    let vrep = enumerate_vrep(poly).expect("within caps");
    let expected_vertices = brute_force_vertices(poly);
    let expected_rays = brute_force_rays(poly);
    assert_eq!(vrep.vertices, expected_vertices, "vertices differ on {context}");
    assert_eq!(vrep.rays, expected_rays, "rays differ on {context}");
}

#[test]
fn fixtures_agree_with_basis_enumeration() {
    for g in [
        fixtures::upper_real(),
        fixtures::referee_plane(),
        fixtures::weighted_linf(2).unwrap(),
        fixtures::weighted_linf(3).unwrap(),
        fixtures::sup_gauge(3).unwrap(),
        fixtures::linf_sym(2).unwrap(),
        fixtures::linf_sym(3).unwrap(),
        fixtures::upper_real().sum_with_symmetric(),
        fixtures::referee_plane().sum_with_symmetric(),
    ] {
        cross_check(&g.unit_ball(), g.label());
    }
}

#[test]
fn random_gauge_balls_agree_with_basis_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for case in 0..150 {
        let g = sampling::random_gauge(&mut rng, (1, 3));
        cross_check(&g.unit_ball(), &format!("case {case}: {:?}", g.generators()));
    }
}

#[test]
fn degenerate_square_system_is_rejected() {
    let rows: Vec<Vec<Rat>> = vec![vec![int(1), int(1)], vec![int(2), int(2)]];
    let refs: Vec<&[Rat]> = rows.iter().map(|r| r.as_slice()).collect();
    assert!(solve_square(&refs, &[int(1), int(2)]).is_none());
    let rows: Vec<Vec<Rat>> = vec![vec![int(1), int(0)], vec![int(1), int(1)]];
    let refs: Vec<&[Rat]> = rows.iter().map(|r| r.as_slice()).collect();
    assert_eq!(solve_square(&refs, &[int(2), int(3)]), Some(vec![int(2), Rat::one()]));
}
