use rug::float::Constant;
use rug::Float;

use crate::error::{Error, Result};

/// Working precision for every high-precision real in the crate.
///
/// Quantities are computed at `bits + guard` and rounded to `bits` when
/// handed back to callers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    bits: u32,
    guard: u32,
}

impl PrecisionContext {
    pub const MIN_BITS: u32 = 64;
    pub const DEFAULT_BITS: u32 = 256;
    pub const DEFAULT_GUARD: u32 = 32;
    /// Ceiling for automatic precision escalation.
    pub const MAX_BITS: u32 = 4096;

    pub fn new(bits: u32) -> Result<Self> {
        Self::with_guard(bits, Self::DEFAULT_GUARD)
    }

    pub fn with_guard(bits: u32, guard: u32) -> Result<Self> {
        if bits < Self::MIN_BITS {
            return Err(Error::Precondition(format!(
                "precision must be at least {} bits (got {bits})",
                Self::MIN_BITS
            )));
        }
        Ok(Self { bits, guard })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    /// `bits + guard`.
    pub fn working(&self) -> u32 {
        self.bits + self.guard
    }

    pub fn doubled(&self) -> Self {
        Self {
            bits: self.bits * 2,
            guard: self.guard,
        }
    }

    /// Zero at working precision.
    pub fn zero(&self) -> Float {
        Float::new(self.working())
    }

    /// Converts any value rug can build a float from, at working precision.
    pub fn real<T>(&self, value: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        let mut f = Float::new(self.working());
        rug::Assign::assign(&mut f, value);
        f
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.working(), Constant::Pi)
    }

    pub fn ln2(&self) -> Float {
        Float::with_val(self.working(), Constant::Log2)
    }

    pub fn ln10(&self) -> Float {
        Float::with_val(self.working(), 10).ln()
    }

    /// Rounds a working-precision value to the public precision.
    pub fn finish(&self, x: Float) -> Float {
        Float::with_val(self.bits, x)
    }

    /// `2^k` at working precision; used for relative tolerances.
    pub fn pow2(&self, k: i32) -> Float {
        Float::with_val(self.working(), 1) << k
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self {
            bits: Self::DEFAULT_BITS,
            guard: Self::DEFAULT_GUARD,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let ctx = PrecisionContext::default();
        assert_eq!((ctx.bits(), ctx.guard(), ctx.working()), (256, 32, 288));
        assert_eq!(ctx.doubled().bits(), 512);
    }

    #[test]
    fn floor_on_bits() {
        assert!(PrecisionContext::new(63).is_err());
        assert!(PrecisionContext::new(64).is_ok());
    }

    #[test]
    fn finish_rounds_to_public_precision() {
        let ctx = PrecisionContext::new(80).unwrap();
        let x = ctx.pi();
        assert_eq!(x.prec(), 112);
        assert_eq!(ctx.finish(x).prec(), 80);
        assert_eq!(ctx.pow2(-3), 0.125);
    }
}
