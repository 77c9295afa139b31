//! Arcs of large jyās: Mādhava's sine table, kojyā, and the arc-difference
//! rule `s₂ − s₁ ≈ 2r (jyā s₂ − jyā s₁) / (kojyā s₂ + kojyā s₁)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::oracle::{self, Precision};
use crate::sexagesimal::{
    round_rational, sqrt_floor, ArcThirds, RadiusConstant, RationalArc, Rounding,
    DEFAULT_ROOT_PRECISION,
};

/// Spacing of the sine table: 225′.
pub const TABLE_STEP: ArcThirds = ArcThirds::from_minutes(225);
pub const TABLE_ENTRIES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MadhavaSineTable {
    pub radius: RadiusConstant,
    /// `jya[j]` is the jyā of `j·225′` for `j = 0..=24`; `jya[0] = 0`.
    jya: Vec<ArcThirds>,
}

impl MadhavaSineTable {
    pub fn arc(&self, j: usize) -> ArcThirds {
        TABLE_STEP * j as i64
    }

    pub fn jya(&self, j: usize) -> ArcThirds {
        self.jya[j]
    }

    /// `kojyā(j·225′) = jyā((24 − j)·225′)`.
    pub fn kojya(&self, j: usize) -> ArcThirds {
        self.jya[TABLE_ENTRIES - j]
    }

    /// `(j, arc, jyā)` for `j = 1..=24`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, ArcThirds, ArcThirds)> + '_ {
        (1..=TABLE_ENTRIES).map(move |j| (j, self.arc(j), self.jya[j]))
    }
}

fn to_thirds(x: &BigRational) -> ArcThirds {
    ArcThirds::new(
        round_rational(x, Rounding::Nearest)
            .to_i64()
            .expect("value within i64 thirds"),
    )
}

/// `round(r · sin(j·225′ / r))` for `j = 0..=24`, from the oracle sine.
pub fn build_madhava_table(r: RadiusConstant) -> MadhavaSineTable {
    build_madhava_table_with(r, Precision::DEFAULT)
}

pub fn build_madhava_table_with(r: RadiusConstant, p: Precision) -> MadhavaSineTable {
    let rq = BigRational::from_integer(r.thirds().big());
    let jya = (0..=TABLE_ENTRIES)
        .map(|j| {
            let arc = BigRational::from_integer((TABLE_STEP * j as i64).big());
            to_thirds(&(&rq * oracle::sin(&(arc / &rq), p)))
        })
        .collect();
    MadhavaSineTable { radius: r, jya }
}

/// `√(r² − m²)` rounded to thirds.
pub fn kojya_from_jya(m: ArcThirds, r: RadiusConstant) -> Result<ArcThirds> {
    let (mb, rb) = (m.big(), r.thirds().big());
    if m.is_negative() || m > r.thirds() {
        return Err(Error::Domain(format!("jya {m} outside [0, r]")));
    }
    let radicand = BigRational::from_integer(&rb * &rb - &mb * &mb);
    let root = sqrt_floor(&radicand, &BigInt::from(DEFAULT_ROOT_PRECISION))?;
    Ok(to_thirds(&root))
}

/// `2r (jyā₂ − jyā₁) / (kojyā₂ + kojyā₁)` on exact values sharing a unit.
pub fn arc_difference_exact(
    jya1: &BigRational,
    kojya1: &BigRational,
    jya2: &BigRational,
    kojya2: &BigRational,
    r: &BigRational,
) -> Result<BigRational> {
    let denom = kojya1 + kojya2;
    if denom.is_zero() {
        return Err(Error::Degenerate("both kojyās vanish".into()));
    }
    Ok(r * BigInt::from(2) * (jya2 - jya1) / denom)
}

/// The arc difference in thirds, kept exact.
pub fn arc_difference(
    jya1: ArcThirds,
    kojya1: ArcThirds,
    jya2: ArcThirds,
    kojya2: ArcThirds,
    r: RadiusConstant,
) -> Result<RationalArc> {
    let q = |v: ArcThirds| BigRational::from_integer(v.big());
    let thirds = arc_difference_exact(&q(jya1), &q(kojya1), &q(jya2), &q(kojya2), &q(r.thirds()))?;
    Ok(RationalArc::new(
        thirds / BigInt::from(crate::sexagesimal::THIRDS_PER_MINUTE),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LargeArcResult {
    pub s: ArcThirds,
    /// Arc of the table entry used.
    pub s1: ArcThirds,
    /// Signed correction; negative when the entry lies above `m`.
    pub p: ArcThirds,
    pub kojya_m: ArcThirds,
    /// Index `j` of the entry used.
    pub entry: usize,
}

/// The arc of a jyā between the first table entry and `r`.
///
/// Starts from the entry whose jyā is nearest `m` (the lower entry on an
/// exact midpoint) and adds the signed arc difference between it and `m`.
pub fn arcsin_large(
    m: ArcThirds,
    r: RadiusConstant,
    table: &MadhavaSineTable,
) -> Result<LargeArcResult> {
    if m > r.thirds() {
        return Err(Error::Domain(format!(
            "jya {m} exceeds the radius {}",
            r.thirds()
        )));
    }
    if m < table.jya(1) {
        return Err(Error::BelowTable {
            value: m.to_string(),
            first: table.jya(1).to_string(),
        });
    }
    let entry = (1..=TABLE_ENTRIES)
        .min_by_key(|&j| ((m - table.jya(j)).abs(), j))
        .expect("table has entries");
    let kojya_m = kojya_from_jya(m, r)?;
    let diff = arc_difference(table.jya(entry), table.kojya(entry), m, kojya_m, r)?;
    let p = diff.round(Rounding::Nearest);
    let s1 = table.arc(entry);
    Ok(LargeArcResult {
        s: s1 + p,
        s1,
        p,
        kojya_m,
        entry,
    })
}

/// `|2r·tan(step/2r) − step|` rounded to thirds: the error of one
/// arc-difference step across a whole table interval.
pub fn max_error_bound(r: RadiusConstant, step: ArcThirds) -> ArcThirds {
    max_error_bound_exact(r, step, Precision::DEFAULT).round(Rounding::Nearest)
}

pub fn max_error_bound_exact(r: RadiusConstant, step: ArcThirds, p: Precision) -> RationalArc {
    let two_r = BigRational::from_integer(r.thirds().big() * 2);
    let step = BigRational::from_integer(step.big());
    let tan = oracle::tan(&(&step / &two_r), p).expect("step/2r is far from a pole");
    let thirds = (two_r * tan - step).abs();
    RationalArc::new(thirds / BigInt::from(crate::sexagesimal::THIRDS_PER_MINUTE))
}
