//! 16-bit brain-float arithmetic (1 sign, 8 exponent, 7 mantissa bits).
//!
//! Neuron states and graded spike magnitudes are carried in this format.
//! Every arithmetic step is computed in f32 and rounded back to bf16 with
//! round-to-nearest-even, so results are reproducible bit for bit across
//! the engines and the reference oracle.

use std::fmt;

/// A bf16 value stored as its raw 16-bit pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Bf16(u16);

impl Bf16 {
    pub const ZERO: Bf16 = Bf16(0x0000);
    pub const ONE: Bf16 = Bf16(0x3F80);

    /// Round-to-nearest-even conversion from f32.
    pub fn from_f32(x: f32) -> Bf16 {
        let bits = x.to_bits();
        if x.is_nan() {
            // Quiet NaN, preserving the sign bit.
            return Bf16(((bits >> 16) as u16) | 0x0040);
        }
        let round_bit = (bits >> 16) & 1;
        Bf16(((bits + 0x7FFF + round_bit) >> 16) as u16)
    }

    /// Truncating conversion (mantissa chopped to 7 bits, no rounding).
    /// Used only by the bf16 weight-storage scheme.
    pub fn from_f32_truncate(x: f32) -> Bf16 {
        Bf16((x.to_bits() >> 16) as u16)
    }

    pub fn from_bits(bits: u16) -> Bf16 {
        Bf16(bits)
    }

    pub fn to_bits(self) -> u16 {
        self.0
    }

    pub fn to_f32(self) -> f32 {
        f32::from_bits((self.0 as u32) << 16)
    }

    pub fn is_finite(self) -> bool {
        self.to_f32().is_finite()
    }

    pub fn is_zero(self) -> bool {
        // Both +0.0 and -0.0.
        self.0 & 0x7FFF == 0
    }

    /// `self + rhs`, computed in f32 and rounded to bf16.
    pub fn add(self, rhs: Bf16) -> Bf16 {
        Bf16::from_f32(self.to_f32() + rhs.to_f32())
    }

    /// `self * rhs`, computed in f32 and rounded to bf16.
    pub fn mul(self, rhs: Bf16) -> Bf16 {
        Bf16::from_f32(self.to_f32() * rhs.to_f32())
    }
}

impl fmt::Display for Bf16 {
    fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f32())
    }
}
