use std::cmp::Ordering;

use num_traits::{Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use super::{Dyadic, Polynomial};
use crate::error::{Error, Result};

/// Sturm chain of a squarefree polynomial, kept primitive at every step.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    seq: Vec<Polynomial>,
}

impl SturmSequence {
    pub fn new(p: &Polynomial) -> Self {
        assert!(!p.is_zero(), "Sturm sequence of the zero polynomial");
        let mut seq = vec![p.primitive_part()];
        let d = p.derivative();
        if d.is_zero() {
            return SturmSequence { seq };
        }
        seq.push(d.primitive_part());
        loop {
            let (a, b) = (&seq[seq.len() - 2], &seq[seq.len() - 1]);
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // -rem(a, b) has the sign of -r / lc(b)^delta.
            let delta = a.degree().unwrap() - b.degree().unwrap() + 1;
            let flip = b.leading().is_negative() && delta % 2 == 1;
            let next = if flip { r } else { -r };
            seq.push(next.primitive_part());
        }
        SturmSequence { seq }
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Dyadic) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| super::poly::sign_of(&p.leading())))
    }

    /// Distinct real roots in `(x, ∞)`.
    pub fn roots_above(&self, x: &Dyadic) -> usize {
        self.variations_at(x) - self.variations_at_pos_inf()
    }

    /// Distinct real roots in `(a, b]`.
    pub fn roots_in(&self, a: &Dyadic, b: &Dyadic) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Half-open interval `(lo, hi]` containing a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Enclosure {
    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.lo.midpoint(&self.hi).to_f64()
    }

    pub fn disjoint_below(&self, other: &Enclosure) -> bool {
        self.hi <= other.lo
    }
}

impl Serialize for Enclosure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Enclosure", 3)?;
        st.serialize_field("lo", &self.lo.to_decimal_string())?;
        st.serialize_field("hi", &self.hi.to_decimal_string())?;
        st.serialize_field("width", &self.width().to_decimal_string())?;
        st.end()
    }
}

/// Smallest `e` with `2^-e <= tol / 8`.
fn exponent_for(tol: f64) -> u32 {
    ((8.0 / tol).log2().ceil().max(0.0) as u32).min(200)
}

/// Integer `B` with every real root in `(-B, B)`.
fn cauchy_bound(p: &Polynomial) -> i64 {
    let lc = p.leading().abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    let ratio = (&max + &lc - 1u32) / &lc;
    ratio.to_i64().unwrap_or(i64::MAX / 4) + 1
}

/// Newton iteration started above the largest root. For real-rooted polynomials the
/// iterates decrease monotonically onto it.
pub fn newton_from_above(coeffs: &[f64], start: f64) -> f64 {
    let eval = |x: f64| {
        let mut p = 0.0;
        let mut dp = 0.0;
        for &c in coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };
    let mut x = start;
    for _ in 0..10_000 {
        let (p, dp) = eval(x);
        if p == 0.0 || dp == 0.0 {
            break;
        }
        let step = p / dp;
        if !step.is_finite() || step <= 0.0 {
            break;
        }
        x -= step;
        if step <= 1e-16 * x.abs().max(1.0) {
            break;
        }
    }
    x
}

/// Certified enclosure of the largest real root, refinable on demand.
#[derive(Debug, Clone)]
pub struct LargestRoot {
    squarefree: Polynomial,
    sturm: SturmSequence,
    enclosure: Enclosure,
}

impl LargestRoot {
    /// Enclosure of width at most `tol`. `upper_hint` is any value at or above the
    /// largest root; it only seeds the floating-point guess.
    pub fn new(p: &Polynomial, tol: f64, upper_hint: Option<f64>) -> Result<Self> {
        if p.degree().unwrap_or(0) == 0 {
            return Err(Error::Precondition("polynomial has no roots".into()));
        }
        let squarefree = p.squarefree_part();
        let sturm = SturmSequence::new(&squarefree);
        let b = cauchy_bound(&squarefree);
        let lo = Dyadic::from_int(-b);
        if sturm.roots_above(&lo) == 0 {
            return Err(Error::Precondition("polynomial has no real roots".into()));
        }
        let mut root = LargestRoot {
            squarefree,
            sturm,
            enclosure: Enclosure {
                lo,
                hi: Dyadic::from_int(b),
            },
        };
        if !root.try_float_bracket(tol, upper_hint.unwrap_or(b as f64)) {
            root.refine_to(tol);
        }
        Ok(root)
    }

    fn try_float_bracket(&mut self, tol: f64, start: f64) -> bool {
        let guess = newton_from_above(&self.squarefree.to_f64s(), start);
        if !guess.is_finite() {
            return false;
        }
        let e = exponent_for(tol);
        let units = ((tol / 4.0) * f64::powi(2.0, e as i32)).floor().max(1.0) as i64;
        let center = Dyadic::from_f64(guess, e);
        let (lo, hi) = (center.add_units(-units), center.add_units(units));
        if self.sturm.roots_above(&hi) == 0 && self.sturm.roots_above(&lo) >= 1 {
            self.enclosure = Enclosure { lo, hi };
            true
        } else {
            false
        }
    }

    pub fn enclosure(&self) -> &Enclosure {
        &self.enclosure
    }

    pub fn squarefree(&self) -> &Polynomial {
        &self.squarefree
    }

    pub fn sturm(&self) -> &SturmSequence {
        &self.sturm
    }

    /// Halves the enclosure.
    pub fn bisect(&mut self) {
        let mid = self.enclosure.lo.midpoint(&self.enclosure.hi);
        if self.sturm.roots_above(&mid) >= 1 {
            self.enclosure.lo = mid;
        } else {
            self.enclosure.hi = mid;
        }
    }

    pub fn refine_to(&mut self, tol: f64) {
        while self.enclosure.width().to_f64() > tol {
            self.bisect();
        }
    }

    /// Shrinks until the enclosure holds no other root.
    pub fn isolate(&mut self) {
        while self.sturm.roots_above(&self.enclosure.lo) > 1 {
            self.bisect();
        }
    }

    /// Whether the largest root is strictly greater than `t`.
    pub fn exceeds(&self, t: &Dyadic) -> bool {
        self.sturm.roots_above(t) >= 1
    }

    pub fn value_f64(&self) -> f64 {
        self.enclosure.midpoint_f64()
    }
}

/// Certified comparison of two largest roots. `Equal` is returned only when both
/// polynomials provably share their largest root.
pub fn compare_largest_roots(a: &mut LargestRoot, b: &mut LargestRoot) -> Ordering {
    a.isolate();
    b.isolate();
    let mut distinct = false;
    loop {
        if a.enclosure.disjoint_below(&b.enclosure) {
            return Ordering::Less;
        }
        if b.enclosure.disjoint_below(&a.enclosure) {
            return Ordering::Greater;
        }
        if !distinct {
            let g = a.squarefree.gcd(&b.squarefree);
            if g.degree().unwrap_or(0) >= 1 {
                let lo = (&a.enclosure.lo).max(&b.enclosure.lo).clone();
                let hi = (&a.enclosure.hi).min(&b.enclosure.hi).clone();
                if SturmSequence::new(&g).roots_in(&lo, &hi) >= 1 {
                    return Ordering::Equal;
                }
            }
            distinct = true;
        }
        a.bisect();
        b.bisect();
    }
}

/// Whether `p` has a root strictly above the dyadic `t` (distinct roots counted once).
pub fn has_root_above(p: &Polynomial, t: &Dyadic) -> bool {
    SturmSequence::new(&p.squarefree_part()).roots_above(t) >= 1
}
