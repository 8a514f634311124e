use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The exact binary fraction `mantissa / 2^exp`.
#[derive(Debug, Clone)]
pub struct Dyadic {
    mantissa: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exp: u32) -> Self {
        Dyadic { mantissa, exp }
    }

    pub fn from_int(v: i64) -> Self {
        Dyadic {
            mantissa: BigInt::from(v),
            exp: 0,
        }
    }

    /// Nearest dyadic with denominator `2^exp`.
    pub fn from_f64(x: f64, exp: u32) -> Self {
        assert!(x.is_finite());
        let scaled = (x * f64::powi(2.0, exp as i32)).round();
        let mantissa = num_bigint::BigInt::from(scaled as i128);
        Dyadic { mantissa, exp }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    fn at_exp(&self, exp: u32) -> BigInt {
        &self.mantissa << (exp - self.exp)
    }

    pub fn midpoint(&self, other: &Dyadic) -> Dyadic {
        let e = self.exp.max(other.exp);
        Dyadic {
            mantissa: self.at_exp(e) + other.at_exp(e),
            exp: e + 1,
        }
    }

    pub fn add_units(&self, units: i64) -> Dyadic {
        Dyadic {
            mantissa: &self.mantissa + units,
            exp: self.exp,
        }
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        let e = self.exp.max(other.exp);
        Dyadic {
            mantissa: self.at_exp(e) - other.at_exp(e),
            exp: e,
        }
    }

    pub fn square(&self) -> Dyadic {
        Dyadic {
            mantissa: &self.mantissa * &self.mantissa,
            exp: 2 * self.exp,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let m = self.mantissa.to_f64().unwrap_or(f64::NAN);
        m / f64::powi(2.0, self.exp as i32)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), BigInt::one() << self.exp)
    }

    /// Exact decimal expansion (every dyadic has a finite one).
    pub fn to_decimal_string(&self) -> String {
        let neg = self.mantissa.is_negative();
        let digits =
            (self.mantissa.abs() * num_traits::pow(BigInt::from(5), self.exp as usize)).to_string();
        let e = self.exp as usize;
        let (int, frac) = if digits.len() > e {
            (
                digits[..digits.len() - e].to_string(),
                digits[digits.len() - e..].to_string(),
            )
        } else {
            (
                "0".to_string(),
                format!("{}{}", "0".repeat(e - digits.len()), digits),
            )
        };
        let frac = frac.trim_end_matches('0');
        let sign = if neg && !self.mantissa.is_zero() {
            "-"
        } else {
            ""
        };
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        self.at_exp(e).cmp(&other.at_exp(e))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}
