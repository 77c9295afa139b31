use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const THIRDS_PER_SECOND: i64 = 60;
pub const THIRDS_PER_MINUTE: i64 = 3600;

/// Sign of a sexagesimal quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// The positional fields of an arc: minutes, seconds and thirds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Components {
    pub sign: Sign,
    pub minutes: u64,
    pub seconds: u8,
    pub thirds: u8,
}

/// An arc (or jyā) as a whole number of arc-thirds.
///
/// One third is 1/60 of an arc-second, so one minute is 3600 thirds. This is
/// the resolution every hand computation in the tradition is carried to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcThirds(i64);

impl ArcThirds {
    pub const ZERO: ArcThirds = ArcThirds(0);

    pub const fn new(thirds: i64) -> Self {
        ArcThirds(thirds)
    }

    pub const fn from_minutes(minutes: i64) -> Self {
        ArcThirds(minutes * THIRDS_PER_MINUTE)
    }

    pub const fn from_seconds(seconds: i64) -> Self {
        ArcThirds(seconds * THIRDS_PER_SECOND)
    }

    pub const fn value(self) -> i64 {
        self.0
    }

    /// Builds `sign · (minutes·3600 + seconds·60 + thirds)`.
    pub fn from_components(sign: Sign, minutes: u64, seconds: u8, thirds: u8) -> Result<Self> {
        if seconds >= 60 {
            return Err(Error::ComponentRange {
                field: "seconds",
                value: seconds.into(),
            });
        }
        if thirds >= 60 {
            return Err(Error::ComponentRange {
                field: "thirds",
                value: thirds.into(),
            });
        }
        let magnitude = i64::try_from(minutes)
            .ok()
            .and_then(|m| m.checked_mul(THIRDS_PER_MINUTE))
            .and_then(|m| m.checked_add(i64::from(seconds) * THIRDS_PER_SECOND + i64::from(thirds)))
            .ok_or_else(|| {
                Error::Domain(format!("{minutes} minutes overflows the thirds range"))
            })?;
        Ok(match sign {
            Sign::Positive => ArcThirds(magnitude),
            Sign::Negative => ArcThirds(-magnitude),
        })
    }

    pub fn components(self) -> Components {
        let sign = if self.0 < 0 {
            Sign::Negative
        } else {
            Sign::Positive
        };
        let magnitude = self.0.unsigned_abs();
        let per_minute = THIRDS_PER_MINUTE as u64;
        let per_second = THIRDS_PER_SECOND as u64;
        Components {
            sign,
            minutes: magnitude / per_minute,
            seconds: ((magnitude % per_minute) / per_second) as u8,
            thirds: (magnitude % per_second) as u8,
        }
    }

    /// Exact value in arc-minutes.
    pub fn to_rational(self) -> RationalArc {
        RationalArc::from_thirds(self)
    }

    pub fn abs(self) -> Self {
        ArcThirds(self.0.abs())
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub(crate) fn big(self) -> BigInt {
        BigInt::from(self.0)
    }
}

impl Add for ArcThirds {
    type Output = ArcThirds;
    fn add(self, rhs: Self) -> Self {
        ArcThirds(self.0 + rhs.0)
    }
}

impl Sub for ArcThirds {
    type Output = ArcThirds;
    fn sub(self, rhs: Self) -> Self {
        ArcThirds(self.0 - rhs.0)
    }
}

impl Neg for ArcThirds {
    type Output = ArcThirds;
    fn neg(self) -> Self {
        ArcThirds(-self.0)
    }
}

impl Mul<i64> for ArcThirds {
    type Output = ArcThirds;
    fn mul(self, rhs: i64) -> Self {
        ArcThirds(self.0 * rhs)
    }
}

impl From<i64> for ArcThirds {
    fn from(v: i64) -> Self {
        ArcThirds(v)
    }
}

impl fmt::Display for ArcThirds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format_sexagesimal(*self))
    }
}

/// How a rational quantity is brought onto the integer thirds grid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Rounding {
    /// Nearest third, exact halves away from zero.
    #[default]
    Nearest,
    /// Nearest third, exact halves to the even neighbour.
    NearestEven,
    Floor,
    Ceil,
}

/// An exact rational number of arc-minutes.
///
/// `BigRational` keeps the fraction normalised (positive denominator, lowest
/// terms) after every operation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalArc(BigRational);

impl RationalArc {
    pub fn zero() -> Self {
        RationalArc(BigRational::zero())
    }

    pub fn new(minutes: BigRational) -> Self {
        RationalArc(minutes)
    }

    pub fn from_thirds(v: ArcThirds) -> Self {
        RationalArc(BigRational::new(v.big(), BigInt::from(THIRDS_PER_MINUTE)))
    }

    pub fn from_minutes(minutes: i64) -> Self {
        RationalArc(BigRational::from_integer(minutes.into()))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        RationalArc(BigRational::new(numer.into(), denom.into()))
    }

    pub fn minutes(&self) -> &BigRational {
        &self.0
    }

    pub fn into_minutes(self) -> BigRational {
        self.0
    }

    /// The same quantity expressed as a (possibly fractional) count of thirds.
    pub fn in_thirds(&self) -> BigRational {
        &self.0 * BigInt::from(THIRDS_PER_MINUTE)
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        RationalArc(self.0.abs())
    }

    pub fn round(&self, mode: Rounding) -> ArcThirds {
        round_to_thirds(self, mode)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<ArcThirds> for RationalArc {
    fn from(v: ArcThirds) -> Self {
        RationalArc::from_thirds(v)
    }
}

impl Add for RationalArc {
    type Output = RationalArc;
    fn add(self, rhs: Self) -> Self {
        RationalArc(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a RationalArc> for &'a RationalArc {
    type Output = RationalArc;
    fn add(self, rhs: &'a RationalArc) -> RationalArc {
        RationalArc(&self.0 + &rhs.0)
    }
}

impl Sub for RationalArc {
    type Output = RationalArc;
    fn sub(self, rhs: Self) -> Self {
        RationalArc(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a RationalArc> for &'a RationalArc {
    type Output = RationalArc;
    fn sub(self, rhs: &'a RationalArc) -> RationalArc {
        RationalArc(&self.0 - &rhs.0)
    }
}

impl Neg for RationalArc {
    type Output = RationalArc;
    fn neg(self) -> Self {
        RationalArc(-self.0)
    }
}

impl<'a> Mul<&'a BigRational> for &'a RationalArc {
    type Output = RationalArc;
    fn mul(self, rhs: &'a BigRational) -> RationalArc {
        RationalArc(&self.0 * rhs)
    }
}

/// Rounds an exact arc onto the thirds grid.
///
/// # Panics
///
/// Panics if the rounded count does not fit in an `i64` (beyond ~2.5·10¹⁵
/// arc-minutes).
pub fn round_to_thirds(x: &RationalArc, mode: Rounding) -> ArcThirds {
    let thirds = x.in_thirds();
    let rounded = round_rational(&thirds, mode);
    ArcThirds(rounded.to_i64().expect("arc exceeds the i64 thirds range"))
}

pub(crate) fn round_rational(x: &BigRational, mode: Rounding) -> BigInt {
    let (floor, rem) = x.numer().div_mod_floor(x.denom());
    if rem.is_zero() {
        return floor;
    }
    let ceil = &floor + BigInt::one();
    match mode {
        Rounding::Floor => floor,
        Rounding::Ceil => ceil,
        Rounding::Nearest | Rounding::NearestEven => {
            // rem/denom is the fractional part in (0, 1)
            let twice = &rem * 2u8;
            match twice.cmp(x.denom()) {
                std::cmp::Ordering::Less => floor,
                std::cmp::Ordering::Greater => ceil,
                std::cmp::Ordering::Equal => match mode {
                    Rounding::NearestEven => {
                        if floor.is_even() {
                            floor
                        } else {
                            ceil
                        }
                    }
                    // away from zero: the tie sits between floor and floor+1
                    _ => {
                        if x.is_negative() {
                            floor
                        } else {
                            ceil
                        }
                    }
                },
            }
        }
    }
}

/// The radius (trijyā) of the reference circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RadiusConstant(ArcThirds);

impl RadiusConstant {
    /// 3437′44″48‴, the traditional trijyā.
    pub const TRIJYA: RadiusConstant = RadiusConstant(ArcThirds(12_375_888));

    pub fn new(thirds: ArcThirds) -> Result<Self> {
        if thirds.value() <= 0 {
            return Err(Error::Domain(format!(
                "radius must be positive, got {thirds}"
            )));
        }
        Ok(RadiusConstant(thirds))
    }

    pub const fn thirds(self) -> ArcThirds {
        self.0
    }

    pub fn to_rational(self) -> RationalArc {
        RationalArc::from_thirds(self.0)
    }
}

impl Default for RadiusConstant {
    fn default() -> Self {
        RadiusConstant::TRIJYA
    }
}
