//! Exact scalars: arbitrary-precision rationals plus a `+inf` marker for
//! divergent suprema.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Shorthand for the exact rational type used throughout.
pub type Rat = BigRational;

/// Build a rational from an integer pair. Panics on q = 0.
pub fn rat(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Build a rational from an integer.
pub fn int(p: i64) -> Rat {
    BigRational::from_integer(BigInt::from(p))
}

/// A nonnegative exact scalar that is either a rational or `+inf`.
///
/// `+inf` records a divergent supremum: an unbounded support value, the flat
/// norm of a functional outside the dual cone, or the operator norm of a
/// discontinuous operator. Arithmetic follows sup-semantics: adding or
/// scaling by a positive amount preserves `+inf`, and `min(+inf, r) = r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendedRat {
    Finite(Rat),
    Infinity,
}

impl ExtendedRat {
    pub fn zero() -> Self {
        ExtendedRat::Finite(Rat::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedRat::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRat::Infinity)
    }

    /// The finite value, if any.
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtendedRat::Finite(r) => Some(r),
            ExtendedRat::Infinity => None,
        }
    }

    /// Unwrap a value known to be finite.
    pub fn expect_finite(&self, what: &str) -> &Rat {
        self.finite()
            .unwrap_or_else(|| panic!("{what} unexpectedly infinite"))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtendedRat::Finite(r) => r.to_f64().unwrap_or(f64::NAN),
            ExtendedRat::Infinity => f64::INFINITY,
        }
    }
}

impl From<Rat> for ExtendedRat {
    fn from(r: Rat) -> Self {
        ExtendedRat::Finite(r)
    }
}

impl PartialOrd for ExtendedRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedRat::Infinity, ExtendedRat::Infinity) => Ordering::Equal,
            (ExtendedRat::Infinity, _) => Ordering::Greater,
            (_, ExtendedRat::Infinity) => Ordering::Less,
            (ExtendedRat::Finite(a), ExtendedRat::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for ExtendedRat {
    type Output = ExtendedRat;
    fn add(self, rhs: ExtendedRat) -> ExtendedRat {
        match (self, rhs) {
            (ExtendedRat::Finite(a), ExtendedRat::Finite(b)) => ExtendedRat::Finite(a + b),
            _ => ExtendedRat::Infinity,
        }
    }
}

impl Mul<&Rat> for &ExtendedRat {
    type Output = ExtendedRat;
    /// Scale by a positive rational; `0 * +inf` is rejected.
    fn mul(self, rhs: &Rat) -> ExtendedRat {
        match self {
            ExtendedRat::Finite(a) => ExtendedRat::Finite(a * rhs),
            ExtendedRat::Infinity => {
                assert!(
                    rhs.is_positive(),
                    "cannot scale +inf by a nonpositive factor"
                );
                ExtendedRat::Infinity
            }
        }
    }
}

impl fmt::Display for ExtendedRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRat::Finite(r) => write!(f, "{}", format_rat(r)),
            ExtendedRat::Infinity => write!(f, "+inf"),
        }
    }
}

impl FromStr for ExtendedRat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "+inf" {
            return Ok(ExtendedRat::Infinity);
        }
        parse_rat(s).map(ExtendedRat::Finite)
    }
}

/// Render a rational as `p/q`, or just `p` for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Render a vector of rationals as `(a, b, ...)`.
pub fn format_vec(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(format_rat).collect();
    format!("({})", parts.join(", "))
}

/// Parse `p`, `-p`, or `p/q` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || {
        Error::Input(format!(
            "malformed rational {s:?}: expected \"p\" or \"p/q\""
        ))
    };
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Input(format!(
                    "malformed rational {s:?}: zero denominator"
                )));
            }
            Ok(Rat::new(p, q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "3", "-2", "1/3", "-7/5"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        // unreduced input normalizes
        assert_eq!(format_rat(&parse_rat("2/4").unwrap()), "1/2");
        assert_eq!(format_rat(&parse_rat("3/-6").unwrap()), "-1/2");
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "a", "1/0", "1.5", "1/2/3"] {
            assert!(parse_rat(s).is_err(), "{s:?} should be rejected");
        }
    }

    #[test]
    fn extended_arithmetic_is_sup_semantics() {
        let two = ExtendedRat::Finite(int(2));
        let inf = ExtendedRat::Infinity;
        assert_eq!(two.clone() + inf.clone(), ExtendedRat::Infinity);
        assert_eq!(two.clone() + two.clone(), ExtendedRat::Finite(int(4)));
        assert!(inf > two);
        assert_eq!(std::cmp::min(inf.clone(), two.clone()), two);
        assert_eq!(&inf * &int(3), ExtendedRat::Infinity);
    }

    #[test]
    fn extended_parses_inf_token() {
        assert_eq!(
            "+inf".parse::<ExtendedRat>().unwrap(),
            ExtendedRat::Infinity
        );
        assert_eq!(
            "5/2".parse::<ExtendedRat>().unwrap(),
            ExtendedRat::Finite(rat(5, 2))
        );
    }
}
