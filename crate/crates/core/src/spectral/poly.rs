use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Dyadic;

/// Dense integer polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

/// Characteristic polynomial `det(xI - A)`.
pub type CharPolynomial = Polynomial;

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content; the sign of the leading coefficient is kept.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Pseudo-remainder `r` with `lc(d)^(deg self - deg d + 1) * self = q * d + r`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by the zero polynomial");
        let Some(ds) = self.degree() else {
            return Self::zero();
        };
        if ds < dd {
            return self.scale(&d.leading());
        }
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        for k in (dd..=ds).rev() {
            let top = r[k].clone();
            for c in r.iter_mut().take(k + 1) {
                *c *= &lc;
            }
            if !top.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k - dd + i] -= &top * dc;
                }
            }
        }
        r.truncate(dd);
        Self::new(r)
    }

    /// Exact quotient `self / d` over the integers, if it exists.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let Some(ds) = self.degree() else {
            return Some(Self::zero());
        };
        if ds < dd {
            return None;
        }
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        for k in (dd..=ds).rev() {
            let (quot, rem) = r[k].div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            if !quot.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k - dd + i] -= &quot * dc;
                }
            }
            q[k - dd] = quot;
        }
        r.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Primitive gcd with positive leading coefficient (the zero polynomial if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.leading().is_negative() {
            -a
        } else {
            a
        }
    }

    /// The product of the distinct irreducible factors, primitive with positive leading
    /// coefficient. Has the same real roots, each simple.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let q = self.div_exact(&g).expect("gcd divides").primitive_part();
        if q.leading().is_negative() {
            -q
        } else {
            q
        }
    }

    /// Sign of `self(m / 2^e)`, using only integer arithmetic.
    pub fn sign_at(&self, x: &Dyadic) -> i8 {
        let Some(d) = self.degree() else { return 0 };
        let mut acc = self.coeffs[d].clone();
        let mut pow2 = BigInt::one();
        for k in 1..=d {
            pow2 <<= x.exp();
            acc = acc * x.mantissa() + &self.coeffs[d - k] * &pow2;
        }
        sign_of(&acc)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from(c.clone())
            })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn to_f64s(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Splits `x^k * q(x^2)` into `(k, q)` when every monomial has the parity of the degree.
    pub fn even_odd_split(&self) -> Option<(usize, Self)> {
        let d = self.degree()?;
        let k = self.coeffs.iter().position(|c| !c.is_zero())?;
        if (k..=d).any(|i| (i - k) % 2 == 1 && !self.coeffs[i].is_zero()) {
            return None;
        }
        let q = self.coeffs[k..].iter().step_by(2).cloned().collect();
        Some((k, Self::new(q)))
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Exact coefficient-wise equality.
pub fn poly_identity_check(lhs: &Polynomial, rhs: &Polynomial) -> bool {
    lhs == rhs
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<_, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(&a * &a, p(&[1, 2, 1]));
        assert_eq!(&(&a * &a) - &a, p(&[0, 1, 1]));
        assert_eq!(&a + &(-a.clone()), Polynomial::zero());
        assert_eq!(a.shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(p(&[5, 0, 3]).derivative(), p(&[0, 6]));
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[2, 1])), None);
        assert_eq!(a.gcd(&p(&[1, 2, 1])), b);
        // (x - 1)^2 (x + 2)^3 x
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[2, 1]).pow(3)) * &Polynomial::x();
        assert_eq!(
            f.squarefree_part(),
            &(&p(&[-1, 1]) * &p(&[2, 1])) * &Polynomial::x()
        );
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = p(&[3, -2, 0, 5, 7]);
        let d = p(&[1, 0, 3]);
        let r = a.pseudo_rem(&d);
        let scaled = a.scale(&BigInt::from(27));
        let q = (&scaled - &r).div_exact(&d);
        assert!(q.is_some());
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn signs_at_dyadics() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(f.sign_at(&Dyadic::from_int(1)), -1);
        assert_eq!(f.sign_at(&Dyadic::from_int(2)), 1);
        assert_eq!(p(&[-1, 2]).sign_at(&Dyadic::new(BigInt::from(1), 1)), 0);
        assert_eq!(Polynomial::zero().sign_at(&Dyadic::from_int(3)), 0);
    }

    #[test]
    fn display_and_json() {
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "x^3 - 2x");
        assert_eq!(p(&[-5]).to_string(), "-5");
        let f = p(&[0, -2, 0, 1]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"["0","-2","0","1"]"#);
        assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), f);
    }

    #[test]
    fn even_odd_split() {
        assert_eq!(p(&[0, -2, 0, 1]).even_odd_split(), Some((1, p(&[-2, 1]))));
        assert_eq!(p(&[1, 1]).even_odd_split(), None);
    }
}
