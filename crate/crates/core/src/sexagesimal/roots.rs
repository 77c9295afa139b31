//! Square and cube roots of exact rationals on a fixed grid.
//!
//! Both roots are computed as `floor(root(x) · Q) / Q` using exact integer
//! roots, so the result is monotone in `x` and never exceeds the true root.
//! With `Q` a multiple of `2 · 3600` (an even number of grid steps per third)
//! the half-third points lie on the grid, and rounding the floored root to
//! the nearest third gives the same third as rounding the true root.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::arc::{RationalArc, THIRDS_PER_MINUTE};
use crate::error::{Error, Result};

/// Grid steps per third used when no precision is given (1/8 third).
pub const DEFAULT_ROOT_PRECISION: u32 = 8;

fn floor_scaled(x: &BigRational, scale: &BigInt) -> BigUint {
    let scaled = x * BigRational::from_integer(scale.clone());
    scaled
        .numer()
        .div_floor(scaled.denom())
        .to_biguint()
        .expect("non-negative radicand")
}

/// `floor(√x · grid) / grid`.
pub fn sqrt_floor(x: &BigRational, grid: &BigInt) -> Result<BigRational> {
    if x.is_negative() {
        return Err(Error::Domain(format!("square root of negative value {x}")));
    }
    let root = floor_scaled(x, &(grid * grid)).sqrt();
    Ok(BigRational::new(root.into(), grid.clone()))
}

/// `floor(∛x · grid) / grid`.
pub fn cbrt_floor(x: &BigRational, grid: &BigInt) -> Result<BigRational> {
    if x.is_negative() {
        return Err(Error::Domain(format!("cube root of negative value {x}")));
    }
    let root = floor_scaled(x, &(grid * grid * grid)).cbrt();
    Ok(BigRational::new(root.into(), grid.clone()))
}

/// Exact square root when `x` is the square of a rational.
pub fn exact_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(BigRational::zero());
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| BigRational::new(n, d))
}

fn minute_grid(precision_thirds: u32) -> Result<BigInt> {
    if precision_thirds == 0 {
        return Err(Error::Domain("root precision must be positive".into()));
    }
    Ok(BigInt::from(THIRDS_PER_MINUTE) * precision_thirds)
}

/// Square root of an arc quantity, within `1/precision_thirds` of a third
/// below the true root.
pub fn isqrt_rational(x: &RationalArc, precision_thirds: u32) -> Result<RationalArc> {
    sqrt_floor(x.minutes(), &minute_grid(precision_thirds)?).map(RationalArc::new)
}

/// Cube root of an arc quantity, within `1/precision_thirds` of a third
/// below the true root.
pub fn icbrt_rational(x: &RationalArc, precision_thirds: u32) -> Result<RationalArc> {
    cbrt_floor(x.minutes(), &minute_grid(precision_thirds)?).map(RationalArc::new)
}
