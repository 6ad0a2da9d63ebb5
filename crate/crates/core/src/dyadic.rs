//! Exact dyadic rationals `num / 2^exp`.
//!
//! Every coefficient produced by the projector constructions is of this form,
//! so sums cancel exactly and golden tests compare bit-for-bit.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::Error;

/// A rational number whose denominator is a power of two.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };

    pub fn new(num: i64, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    pub fn from_int(v: i64) -> Self {
        Dyadic { num: v, exp: 0 }
    }

    /// `1 / 2^exp`.
    pub fn inv_pow2(exp: u32) -> Self {
        Dyadic::new(1, exp)
    }

    /// Converts `num/den` when `den` is (up to sign and common factors) a power of two.
    pub fn from_ratio(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let r = Ratio::new(num, den);
        let (n, d) = (*r.numer(), *r.denom());
        if d <= 0 || (d & (d - 1)) != 0 {
            return None;
        }
        Some(Dyadic::new(n, d.trailing_zeros()))
    }

    fn normalize(&mut self) {
        if self.num == 0 {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().min(self.exp);
        self.num >>= tz;
        self.exp -= tz;
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Divides by `2^k`.
    pub fn halve(self, k: u32) -> Self {
        Dyadic::new(self.num, self.exp + k)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / 2f64.powi(self.exp as i32)
    }

    fn aligned(a: Dyadic, b: Dyadic) -> (i64, i64, u32) {
        let e = a.exp.max(b.exp);
        (a.num << (e - a.exp), b.num << (e - b.exp), e)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, e) = Dyadic::aligned(self, rhs);
        Dyadic::new(a + b, e)
    }
}

impl AddAssign for Dyadic {
    fn add_assign(&mut self, rhs: Dyadic) {
        *self = *self + rhs;
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num, exp: self.exp }
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        Dyadic::new(self.num * rhs.num, self.exp + rhs.exp)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = Dyadic::aligned(*self, *other);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.num, self.exp)
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `num/2^m`, `num/den` with a power-of-two `den`, or a bare integer.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse { what: "dyadic coefficient", detail: s.to_string() };
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i64>().map(Dyadic::from_int).map_err(|_| bad()),
            Some((num, den)) => {
                let num = num.trim().parse::<i64>().map_err(|_| bad())?;
                let den = den.trim();
                if let Some(exp) = den.strip_prefix("2^") {
                    let exp = exp.parse::<u32>().map_err(|_| bad())?;
                    if exp > 62 {
                        return Err(bad());
                    }
                    Ok(Dyadic::new(num, exp))
                } else {
                    let den = den.parse::<i64>().map_err(|_| bad())?;
                    Dyadic::from_ratio(num, den).ok_or_else(bad)
                }
            }
        }
    }
}
