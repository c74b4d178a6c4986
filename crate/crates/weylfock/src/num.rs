//! Exact scalars: arbitrary-precision rationals and half-integers.
//!
//! Every quantity in this crate is exact; no floating point anywhere.
//! Conformal degrees and Weyl-algebra mode indices live in `(1/2)Z`, so
//! they get a dedicated [`Half`] type stored as twice the value.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The scalar field: exact rationals of unbounded size.
pub type Q = BigRational;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_is_integer(q: &Q) -> bool {
    q.denom().is_one()
}

/// Renders `p/q`, or just `p` for integers. Used for all serialized output.
pub fn q_string(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `p/q`, with optional sign.
pub fn q_parse(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Q::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Q::from_integer(n))
    }
}

/// An element of `(1/2)Z`, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);

    /// The integer `n` as a half-integer.
    pub fn int(n: i64) -> Half {
        Half(2 * n)
    }

    /// The value `n/2`.
    pub fn halves(n: i64) -> Half {
        Half(n)
    }

    /// Twice the value (always an integer).
    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if integral.
    pub fn as_int(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn abs(self) -> Half {
        Half(self.0.abs())
    }

    pub fn to_q(self) -> Q {
        qr(self.0, 2)
    }

    pub fn parse(s: &str) -> Option<Half> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            if d.trim() != "2" {
                return None;
            }
            Some(Half(n.trim().parse().ok()?))
        } else {
            Some(Half::int(s.parse().ok()?))
        }
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl AddAssign for Half {
    fn add_assign(&mut self, rhs: Half) {
        self.0 += rhs.0;
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl SubAssign for Half {
    fn sub_assign(&mut self, rhs: Half) {
        self.0 -= rhs.0;
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_arithmetic_and_display() {
        let a = Half::halves(3); // 3/2
        let b = Half::int(1);
        assert_eq!((a + b).to_string(), "5/2");
        assert_eq!((a - a), Half::ZERO);
        assert!(!a.is_integer());
        assert_eq!(b.as_int(), Some(1));
        assert_eq!(Half::parse("-3/2"), Some(Half::halves(-3)));
        assert_eq!(Half::parse("2"), Some(Half::int(2)));
    }

    #[test]
    fn rational_parsing_round_trips() {
        for s in ["5", "-7/3", "0", "22/7"] {
            let q = q_parse(s).unwrap();
            assert_eq!(q_string(&q), s);
        }
        assert!(q_parse("1/0").is_none());
    }
}
