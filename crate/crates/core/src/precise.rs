//! Binary fixed-point complex arithmetic on big integers.
//!
//! The double-binomial sum for the generator coefficients and its
//! hypergeometric form both add terms of size up to roughly `3ⁿ` to produce a
//! result of order one. In `f64` that leaves no correct digits past `n ≈ 35`.
//! Here every value is stored as `(re + i·im) · 2^{-bits}` with `bits` chosen
//! from the worst-case term growth, so the sums are exact up to a final
//! rounding to `f64`.

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use std::ops::{Add, AddAssign};

/// Working precision (fractional bits) for a sum whose terms are bounded by
/// `growth^n` in modulus, targeting roughly 64 correct bits in the result.
pub fn bits_for(n: usize, growth_log2: f64) -> u32 {
    let n = n.max(1) as f64;
    (80.0 + n * growth_log2.max(1.0) + 4.0 * n.log2()).ceil() as u32
}

/// Scales `x` to an integer multiple of `2^{-bits}`, exactly when the
/// mantissa fits.
pub fn scale_f64(x: f64, bits: u32) -> BigInt {
    assert!(x.is_finite(), "non-finite value in fixed-point conversion");
    if x == 0.0 {
        return BigInt::zero();
    }
    let bits_repr = x.to_bits();
    let negative = bits_repr >> 63 == 1;
    let exponent = ((bits_repr >> 52) & 0x7ff) as i64;
    let fraction = bits_repr & ((1u64 << 52) - 1);
    let (mantissa, exp2) = if exponent == 0 {
        (fraction, -1074)
    } else {
        (fraction | (1u64 << 52), exponent - 1075)
    };
    let mut v = BigInt::from(mantissa);
    let shift = exp2 + bits as i64;
    if shift >= 0 {
        v <<= shift as usize;
    } else {
        v >>= (-shift) as usize;
    }
    if negative {
        -v
    } else {
        v
    }
}

/// The integer `k` at precision `bits`.
pub fn scale_int(k: i64, bits: u32) -> BigInt {
    BigInt::from(k) << bits as usize
}

/// Rounds `v · 2^{-bits}` to the nearest representable `f64` (up to one ulp).
pub fn unscale(v: &BigInt, bits: u32) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    let len = v.bits() as i64;
    let drop = (len - 64).max(0);
    let head = (v >> drop as usize).to_f64().unwrap_or(0.0);
    let e = drop - bits as i64;
    // two steps keep the intermediate power of two in range
    let half = e / 2;
    head * 2f64.powi(half as i32) * 2f64.powi((e - half) as i32)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedComplex {
    pub re: BigInt,
    pub im: BigInt,
    pub bits: u32,
}

impl FixedComplex {
    pub fn zero(bits: u32) -> Self {
        Self {
            re: BigInt::zero(),
            im: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Self {
        Self {
            re: BigInt::from(1) << bits as usize,
            im: BigInt::zero(),
            bits,
        }
    }

    pub fn from_complex(z: Complex64, bits: u32) -> Self {
        Self {
            re: scale_f64(z.re, bits),
            im: scale_f64(z.im, bits),
            bits,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(unscale(&self.re, self.bits), unscale(&self.im, self.bits))
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.bits, other.bits);
        let shift = self.bits as usize;
        Self {
            re: (&self.re * &other.re - &self.im * &other.im) >> shift,
            im: (&self.re * &other.im + &self.im * &other.re) >> shift,
            bits: self.bits,
        }
    }

    /// Multiplies by a real fixed-point scalar stored at the same precision.
    pub fn mul_real(&self, scalar: &BigInt) -> Self {
        let shift = self.bits as usize;
        Self {
            re: (&self.re * scalar) >> shift,
            im: (&self.im * scalar) >> shift,
            bits: self.bits,
        }
    }

    /// Divides by a real fixed-point scalar stored at the same precision.
    pub fn div_real(&self, scalar: &BigInt) -> Self {
        assert!(!scalar.is_zero(), "fixed-point division by zero");
        let shift = self.bits as usize;
        Self {
            re: (&self.re << shift) / scalar,
            im: (&self.im << shift) / scalar,
            bits: self.bits,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Self {
            re: &self.re * k,
            im: &self.im * k,
            bits: self.bits,
        }
    }

    pub fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "fixed-point division by zero");
        Self {
            re: &self.re / k,
            im: &self.im / k,
            bits: self.bits,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.sign() == Sign::NoSign && self.im.sign() == Sign::NoSign
    }
}

impl Add<&FixedComplex> for &FixedComplex {
    type Output = FixedComplex;
    fn add(self, rhs: &FixedComplex) -> FixedComplex {
        debug_assert_eq!(self.bits, rhs.bits);
        FixedComplex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
            bits: self.bits,
        }
    }
}

impl AddAssign<&FixedComplex> for FixedComplex {
    fn add_assign(&mut self, rhs: &FixedComplex) {
        debug_assert_eq!(self.bits, rhs.bits);
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

/// Row `n` of Pascal's triangle as exact integers.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut current = BigInt::from(1);
    row.push(current.clone());
    for k in 1..=n {
        current = current * BigInt::from(n - k + 1) / BigInt::from(k);
        row.push(current.clone());
    }
    row
}

/// Terminating Gauss hypergeometric sum `₂F₁(−m, b; c; z)`, which has exactly
/// `m + 1` terms. `c` must not be a non-positive integer `≥ −m`.
pub fn hyp2f1_terminating(m: usize, b: f64, c: f64, z: Complex64) -> Complex64 {
    let growth = (1.0 + z.norm()).log2() + 1.0 + (1.0 + b.abs()).log2();
    let bits = bits_for(m, growth);
    let z_fixed = FixedComplex::from_complex(z, bits);
    let b_fixed = scale_f64(b, bits);
    let c_fixed = scale_f64(c, bits);
    let mut term = FixedComplex::one(bits);
    let mut sum = term.clone();
    for k in 0..m {
        // t_{k+1} / t_k = (k − m)(b + k) / ((c + k)(k + 1)) · z
        let b_k = &b_fixed + scale_int(k as i64, bits);
        let c_k = &c_fixed + scale_int(k as i64, bits);
        term = term
            .mul_real(&b_k)
            .mul_int(&BigInt::from(k as i64 - m as i64))
            .div_real(&c_k)
            .div_int(k as i64 + 1)
            .mul(&z_fixed);
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    sum.to_complex()
}
