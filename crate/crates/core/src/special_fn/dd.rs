//! Minimal double-double arithmetic (~32 significant digits).
//!
//! Only what the large-height phase bookkeeping needs: θ(t) near 10⁷ has
//! magnitude ~10⁸, so plain f64 cannot resolve residuals at the 10⁻⁹ level.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub const PI: Dd = Dd::from_parts(std::f64::consts::PI, 1.2246467991473532e-16);
pub const TWO_PI: Dd = Dd::from_parts(std::f64::consts::TAU, 2.4492935982947064e-16);
pub const LN_2: Dd = Dd::from_parts(std::f64::consts::LN_2, 2.3190468138462996e-17);

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub const fn from_parts(hi: f64, lo: f64) -> Dd {
        Dd { hi, lo }
    }

    pub fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn add_f64(self, b: f64) -> Dd {
        let (s, e) = two_sum(self.hi, b);
        let e = e + self.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    /// Exact scaling by a power of two.
    pub fn ldexp(self, k: i32) -> Dd {
        let f = 2f64.powi(k);
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    pub fn floor(self) -> f64 {
        let f = self.hi.floor();
        if f == self.hi {
            // hi is integral; the tail decides.
            let (s, _) = quick_two_sum(f, self.lo.floor());
            s
        } else {
            f
        }
    }

    /// Natural logarithm of a positive double-double.
    ///
    /// Reduces to `m·2^k` with `m ∈ [1/√2, √2)` and sums the atanh series of
    /// `(m-1)/(m+1)` in double-double.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let mut k = self.hi.log2().round() as i32;
        let mut m = self.ldexp(-k);
        if m.hi > std::f64::consts::SQRT_2 {
            m = m.ldexp(-1);
            k += 1;
        } else if m.hi < std::f64::consts::FRAC_1_SQRT_2 {
            m = m.ldexp(1);
            k -= 1;
        }
        let z = (m - Dd::ONE) / (m + Dd::ONE);
        let z2 = z * z;
        let mut term = z;
        let mut sum = z;
        for j in 1..40 {
            term = term * z2;
            let contrib = term / Dd::new((2 * j + 1) as f64);
            sum = sum + contrib;
            if contrib.hi.abs() < 1e-34 * sum.hi.abs() {
                break;
            }
        }
        sum.mul_f64(2.0) + LN_2.mul_f64(k as f64)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let e = e + t;
        let (s, e) = quick_two_sum(s, e);
        let e = e + f;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add_f64(q3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_of_two_matches_constant() {
        let l = Dd::new(2.0).ln();
        assert_eq!(l.hi, LN_2.hi);
        assert!((l.lo - LN_2.lo).abs() < 1e-31);
    }

    #[test]
    fn ln_inverts_products() {
        // ln(a·b) = ln a + ln b to double-double accuracy
        let a = Dd::new(123456.789);
        let b = Dd::new(0.0031415);
        let lhs = (a * b).ln();
        let rhs = a.ln() + b.ln();
        assert!((lhs - rhs).to_f64().abs() < 1e-28);
    }

    #[test]
    fn division_round_trips() {
        let x = Dd::new(1.0) / Dd::new(3.0);
        let back = x.mul_f64(3.0) - Dd::ONE;
        assert!(back.to_f64().abs() < 1e-31);
    }

    #[test]
    fn floor_respects_negative_tail() {
        let x = Dd::from_parts(5.0, -1e-20);
        assert_eq!(x.floor(), 4.0);
        let y = Dd::from_parts(5.0, 1e-20);
        assert_eq!(y.floor(), 5.0);
        assert_eq!(Dd::new(-0.5).floor(), -1.0);
    }
}
