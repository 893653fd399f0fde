//! Small exact-arithmetic vector and matrix helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Rat;

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn neg(a: &[Rat]) -> Vec<Rat> {
    a.iter().map(|x| -x).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

pub fn is_zero(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn zeros(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

/// k-th standard basis vector of Qⁿ.
pub fn unit(n: usize, k: usize) -> Vec<Rat> {
    let mut v = zeros(n);
    v[k] = Rat::one();
    v
}

/// Matrix-vector product for a row-major matrix.
pub fn mat_vec(m: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    m.iter().map(|row| dot(row, x)).collect()
}

/// Rescale a nonzero rational vector to coprime integer coordinates,
/// preserving its direction. Used to canonicalize rays and certificates.
pub fn coprime_integer(v: &[Rat]) -> Vec<Rat> {
    assert!(!is_zero(v), "cannot canonicalize the zero vector");
    let mut lcm = BigInt::from(1);
    for x in v {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for n in &ints {
        gcd = gcd.gcd(n);
    }
    debug_assert!(gcd.is_positive());
    ints.into_iter()
        .map(|n| Rat::from_integer(n / &gcd))
        .collect()
}

/// Exact lexicographic comparison of rational vectors.
pub fn lex_cmp(a: &[Rat], b: &[Rat]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// Rank of a row-major matrix by exact Gaussian elimination.
pub fn rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
    reduce(rows, ncols).0
}

/// A nonzero vector in the common kernel of the rows (`row · x = 0` for all
/// rows), if one exists.
pub fn kernel_vector(rows: &[Vec<Rat>], ncols: usize) -> Option<Vec<Rat>> {
    let (rk, echelon, pivots) = reduce(rows, ncols);
    if rk == ncols {
        return None;
    }
    // Pick the first free column and back-substitute.
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut x = zeros(ncols);
    x[free] = Rat::one();
    for (r, &pc) in pivots.iter().enumerate().rev() {
        // echelon[r][pc] == 1 after reduction
        let mut s = Rat::zero();
        for (e, xv) in echelon[r][pc + 1..].iter().zip(&x[pc + 1..]) {
            if !e.is_zero() && !xv.is_zero() {
                s += e * xv;
            }
        }
        x[pc] = -s;
    }
    debug_assert!(rows.iter().all(|row| dot(row, &x).is_zero()));
    Some(x)
}

fn reduce(rows: &[Vec<Rat>], ncols: usize) -> (usize, Vec<Vec<Rat>>, Vec<usize>) {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (entry, pv) in row[c..ncols].iter_mut().zip(&pivot_row[c..ncols]) {
                    if !pv.is_zero() {
                        let t = pv * &f;
                        *entry -= t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    (r, m, pivots)
}
