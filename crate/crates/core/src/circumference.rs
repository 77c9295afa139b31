//! Refining an approximate circumference `C*` of a circle of diameter `D`.
//!
//! On a circle of radius `D` the arc `C/4` is an eighth of the circle, so its
//! jyā and kojyā are both `√(D²/2)`. Comparing these with the jyā `a*` and
//! kojyā `b*` of `C*/4` gives the jyā of the gap `C/4 − C*/4`, which the
//! small-arc inversion turns into an arc.
//!
//! Squared quantities are carried in square minutes and shown with a
//! sexagesimal fraction, as in the hand computation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::oracle::{self, Precision};
use crate::sexagesimal::{isqrt_rational, RationalArc, Rounding, DEFAULT_ROOT_PRECISION};

/// How intermediate rows are carried.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Arithmetic {
    /// Every row is rounded to thirds before it feeds the next one, the way
    /// the computation is done by hand.
    #[default]
    Hand,
    /// Rows are exact rationals; only square roots are floored to 1/8 third.
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `b* > a*`: the true circumference is larger, `C = C* + 4δ`.
    Increase,
    /// `b* < a*`: `C = C* − 4δ`.
    Decrease,
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircumferenceTrace {
    pub d: RationalArc,
    pub c_star: RationalArc,
    pub series_terms: Vec<RationalArc>,
    pub a_star: RationalArc,
    pub a_star_sq: RationalArc,
    pub b_star_sq: RationalArc,
    pub sqrt_half_a: RationalArc,
    pub sqrt_half_b: RationalArc,
    /// Δ, the jyā of the gap between `C/4` and `C*/4`.
    pub delta_jya: RationalArc,
    /// δ = Δ + Δ³/(6D²).
    pub delta_arc: RationalArc,
    /// 4δ.
    pub correction: RationalArc,
    pub c: RationalArc,
    pub direction: Direction,
}

/// Printed figure values for `D = 1400′`, `C* = 4400′` that differ from the
/// recomputation: Δ = 0′26″24‴ and C = 4398′14″24‴.
pub const FIGURE_PRINTED_DELTA_THIRDS: i64 = 26 * 60 + 24;
pub const FIGURE_PRINTED_C_THIRDS: i64 = (4398 * 60 + 14) * 60 + 24;

fn carry(x: BigRational, mode: Arithmetic) -> BigRational {
    match mode {
        Arithmetic::Exact => x,
        Arithmetic::Hand => RationalArc::new(x)
            .round(Rounding::Nearest)
            .to_rational()
            .into_minutes(),
    }
}

fn root(x: &BigRational, mode: Arithmetic) -> Result<BigRational> {
    let r = isqrt_rational(&RationalArc::new(x.clone()), DEFAULT_ROOT_PRECISION)?.into_minutes();
    Ok(carry(r, mode))
}

/// Jyā of `arc` on a circle of radius `D` from the sine series
/// `arc − arc³/(3!·D²) + arc⁵/(5!·D⁴) − …`.
///
/// Each term is the previous one times `−arc² / ((2k)(2k+1)·D²)`; terms are
/// kept while at least `cutoff`. In [`Arithmetic::Hand`] each term is rounded
/// to thirds and the rounded value feeds the next.
pub fn jya_on_diameter_circle(
    arc: &RationalArc,
    d: &RationalArc,
    cutoff: &RationalArc,
    mode: Arithmetic,
) -> Result<(RationalArc, Vec<RationalArc>)> {
    let (s, dm) = (arc.minutes(), d.minutes());
    if !dm.is_positive() {
        return Err(Error::Domain(format!("diameter {dm} must be positive")));
    }
    if s.is_negative() || *s > dm * BigInt::from(2) {
        return Err(Error::Domain(format!("arc {s} outside [0, 2D]")));
    }
    let ratio = s * s / (dm * dm);
    let mut terms = Vec::new();
    let mut term = carry(s.clone(), mode);
    let mut k = 1i64;
    while term.abs() >= *cutoff.minutes() && !term.is_zero() {
        terms.push(RationalArc::new(term.clone()));
        term = carry(
            -(&term * &ratio) / BigInt::from((2 * k) * (2 * k + 1)),
            mode,
        );
        k += 1;
    }
    let sum = terms
        .iter()
        .fold(BigRational::zero(), |acc, t| acc + t.minutes());
    Ok((RationalArc::new(sum), terms))
}

/// 1/8 third, in minutes.
pub fn default_cutoff() -> RationalArc {
    RationalArc::new(BigRational::new(BigInt::one(), BigInt::from(8 * 3600)))
}

/// `(√(D²/2), √(D²/2))`: jyā and kojyā of a quarter of the circumference on
/// a circle of radius `D`.
pub fn quadrant_jya_constants(d: &RationalArc) -> Result<(RationalArc, RationalArc)> {
    if !d.minutes().is_positive() {
        return Err(Error::Domain(format!(
            "diameter {} must be positive",
            d.minutes()
        )));
    }
    let v = isqrt_rational(
        &RationalArc::new(d.minutes() * d.minutes() / BigInt::from(2)),
        DEFAULT_ROOT_PRECISION,
    )?;
    Ok((v.clone(), v))
}

pub fn refine_circumference(
    d: &RationalArc,
    c_star: &RationalArc,
) -> Result<(RationalArc, CircumferenceTrace)> {
    refine_circumference_with(d, c_star, Arithmetic::default())
}

/// One refinement step. `C*` must lie within 10% of `πD`.
pub fn refine_circumference_with(
    d: &RationalArc,
    c_star: &RationalArc,
    mode: Arithmetic,
) -> Result<(RationalArc, CircumferenceTrace)> {
    let dm = d.minutes();
    if !dm.is_positive() {
        return Err(Error::Domain(format!("diameter {dm} must be positive")));
    }
    let pi_d = oracle::pi(Precision::DEFAULT) * dm;
    if (c_star.minutes() - &pi_d).abs() * BigInt::from(10) > pi_d {
        return Err(Error::Domain(format!(
            "approximate circumference {} is not within 10% of pi*D",
            c_star.minutes()
        )));
    }

    let quarter = RationalArc::new(c_star.minutes() / BigInt::from(4));
    let (a_star, series_terms) = jya_on_diameter_circle(&quarter, d, &default_cutoff(), mode)?;
    let a = a_star.minutes();
    let a_sq = carry(a * a, mode);
    let b_sq = dm * dm - &a_sq;
    let two = BigInt::from(2);
    let sqrt_half_a = root(&(&a_sq / &two), mode)?;
    let sqrt_half_b = root(&(&b_sq / &two), mode)?;

    let direction = match b_sq.cmp(&a_sq) {
        std::cmp::Ordering::Greater => Direction::Increase,
        std::cmp::Ordering::Less => Direction::Decrease,
        std::cmp::Ordering::Equal => Direction::Equal,
    };
    let delta_jya = (&sqrt_half_b - &sqrt_half_a).abs();
    let delta_arc = carry(
        &delta_jya + &delta_jya * &delta_jya * &delta_jya / (dm * dm * BigInt::from(6)),
        mode,
    );
    let correction = &delta_arc * BigInt::from(4);
    let c = match direction {
        Direction::Increase => c_star.minutes() + &correction,
        Direction::Decrease => c_star.minutes() - &correction,
        Direction::Equal => c_star.minutes().clone(),
    };
    let c = RationalArc::new(c);
    let trace = CircumferenceTrace {
        d: d.clone(),
        c_star: c_star.clone(),
        series_terms,
        a_star,
        a_star_sq: RationalArc::new(a_sq),
        b_star_sq: RationalArc::new(b_sq),
        sqrt_half_a: RationalArc::new(sqrt_half_a),
        sqrt_half_b: RationalArc::new(sqrt_half_b),
        delta_jya: RationalArc::new(delta_jya),
        delta_arc: RationalArc::new(delta_arc),
        correction: RationalArc::new(correction),
        c: c.clone(),
        direction,
    };
    Ok((c, trace))
}
