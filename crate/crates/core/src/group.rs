//! Elements of `Z_2^n` as bitmasks, and the parity kernels built on them.
//!
//! Bit `i-1` of a mask is the exponent of generator `e_i`, so `e_1` is the
//! least significant bit and the blade `e_x` is `e_1^{x_1} ... e_n^{x_n}`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported `n` for closed-form cochains.
pub const MAX_DIM: usize = 24;

/// An element of `Z_2^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    mask: u32,
    n: u8,
}

impl GroupElement {
    pub fn new(mask: u32, n: usize) -> Result<Self> {
        if n > MAX_DIM {
            return Err(Error::TooLarge {
                what: "group dimension",
                n,
                limit: MAX_DIM,
            });
        }
        if (mask as u64) >> n != 0 {
            return Err(Error::MaskOutOfRange { mask, n });
        }
        Ok(GroupElement { mask, n: n as u8 })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement { mask: 0, n: n as u8 }
    }

    /// The generator `e_i`, 1-based.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::MaskOutOfRange {
                mask: if i == 0 { 0 } else { 1 << (i - 1).min(31) },
                n,
            });
        }
        GroupElement::new(1 << (i - 1), n)
    }

    /// `(1, ..., 1)`, the label of the top blade.
    pub fn top(n: usize) -> Self {
        GroupElement {
            mask: full_mask(n),
            n: n as u8,
        }
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn dim(self) -> usize {
        self.n as usize
    }

    /// Group law: bitwise XOR.
    pub fn add(self, other: GroupElement) -> Result<GroupElement> {
        check_same(self, other)?;
        Ok(GroupElement {
            mask: self.mask ^ other.mask,
            n: self.n,
        })
    }

    pub fn rho(self) -> u32 {
        rho(self.mask)
    }

    pub fn dot(self, other: GroupElement) -> u32 {
        dot(self.mask, other.mask)
    }

    /// All `2^n` elements in ascending mask order.
    pub fn all(n: usize) -> impl Iterator<Item = GroupElement> {
        (0..(1u32 << n)).map(move |mask| GroupElement { mask, n: n as u8 })
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", (self.mask >> i) & 1)?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_same(a: GroupElement, b: GroupElement) -> Result<()> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            expected: a.n as usize,
            found: b.n as usize,
        });
    }
    Ok(())
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// `rho(x) = sum_i x_i`, as an ordinary integer.
#[inline]
pub fn rho(x: u32) -> u32 {
    x.count_ones()
}

/// `x . y`, the number of shared coordinates (not reduced mod 2).
#[inline]
pub fn dot(x: u32, y: u32) -> u32 {
    (x & y).count_ones()
}

/// Parity of `sum_{j<i} x_i y_j`: for each set bit `i` of `x`, count the set
/// bits of `y` strictly below `i`.
#[inline]
pub fn ordered_pair_parity(x: u32, y: u32) -> bool {
    let mut rest = x;
    let mut acc = 0u32;
    while rest != 0 {
        let i = rest.trailing_zeros();
        acc += (y & ((1u32 << i) - 1)).count_ones();
        rest &= rest - 1;
    }
    acc & 1 == 1
}

/// Number of set bits of `x` strictly below bit `i` (0-based).
#[inline]
pub fn bits_below(x: u32, i: u32) -> u32 {
    (x & ((1u32 << i) - 1)).count_ones()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks_range() {
        assert!(GroupElement::new(0b100, 2).is_err());
        assert!(GroupElement::new(0b11, 2).is_ok());
        assert!(GroupElement::new(0, 25).is_err());
        assert!(GroupElement::generator(3, 2).is_err());
        assert_eq!(GroupElement::generator(2, 3).unwrap().mask(), 0b010);
        let a = GroupElement::new(1, 2).unwrap();
        let b = GroupElement::new(1, 3).unwrap();
        assert!(a.add(b).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(0b000), 0);
        assert_eq!(rho(0b011), 2);
        for x in 0..64u32 {
            for y in 0..64u32 {
                assert_eq!(rho(x ^ y) as i64, rho(x) as i64 + rho(y) as i64 - 2 * dot(x, y) as i64);
            }
        }
    }

    #[test]
    fn parity_kernel_small_cases() {
        // x = (0,1), y = (1,0): x_2 y_1 = 1
        assert!(ordered_pair_parity(0b10, 0b01));
        assert!(!ordered_pair_parity(0b01, 0b10));
        // x = (1,1,0), y = (1,0,1): x_2 y_1 = 1
        assert!(ordered_pair_parity(0b011, 0b101));
    }

    #[test]
    fn debug_lists_coordinates() {
        let x = GroupElement::new(0b011, 3).unwrap();
        assert_eq!(format!("{x:?}"), "(1,1,0)");
    }
}
