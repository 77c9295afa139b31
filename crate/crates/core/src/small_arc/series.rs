use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::sexagesimal::{round_rational, ArcThirds, RadiusConstant, Rounding};

/// Terms are summed while they are at least 1/8 third.
pub fn default_cutoff() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(8))
}

/// Signed terms of the jyā series in nested form:
///
/// ```text
/// jyā(s) = s − s·s²/((2²+2)r²) + s·s²/((2²+2)r²)·s²/((4²+4)r²) − …
/// ```
///
/// Each term is the previous one times `s² / ((2k)² + 2k)·r²`. Terms are kept
/// while their magnitude is at least `cutoff`; arc, radius and cutoff share a
/// unit.
pub fn jya_series_terms(
    arc: &BigRational,
    radius: &BigRational,
    cutoff: &BigRational,
) -> Vec<BigRational> {
    let ratio = arc * arc / (radius * radius);
    let mut terms = Vec::new();
    let mut term = arc.clone();
    let mut k = 1i64;
    while !term.is_zero() && term.abs() >= *cutoff {
        terms.push(term.clone());
        let divisor = (2 * k) * (2 * k) + 2 * k;
        term = -(term * &ratio) / BigInt::from(divisor);
        k += 1;
    }
    terms
}

fn cube_over_six_r2(v: &BigInt, r: RadiusConstant) -> BigRational {
    let r = r.thirds().big();
    BigRational::new(v * v * v, BigInt::from(6) * &r * &r)
}

fn rounded(x: &BigRational) -> ArcThirds {
    ArcThirds::new(
        round_rational(x, Rounding::Nearest)
            .to_i64()
            .expect("result within i64 thirds"),
    )
}

/// Quadrant limit on arguments of the series: 5400′.
pub const QUADRANT: ArcThirds = ArcThirds::from_minutes(5400);

/// Jyā of an arc from the full series, summed to 1/8 third and rounded.
pub fn madhava_jya(s: ArcThirds, r: RadiusConstant) -> Result<ArcThirds> {
    if s.abs() > QUADRANT {
        return Err(Error::Domain(format!("arc {s} exceeds the quadrant 5400'")));
    }
    let terms = jya_series_terms(
        &BigRational::from_integer(s.big()),
        &BigRational::from_integer(r.thirds().big()),
        &default_cutoff(),
    );
    let sum: BigRational = terms.iter().sum();
    Ok(rounded(&sum))
}

/// `s − s³/(6r²)`, rounded to thirds.
pub fn cubic_jya(s: ArcThirds, r: RadiusConstant) -> ArcThirds {
    let s_big = s.big();
    rounded(&(BigRational::from_integer(s_big.clone()) - cube_over_six_r2(&s_big, r)))
}

/// `m + m³/(6r²)`, rounded to thirds: the one-step inversion of
/// [`cubic_jya`].
pub fn arcsin_poly3(m: ArcThirds, r: RadiusConstant) -> Result<ArcThirds> {
    if m.is_negative() || m > r.thirds() {
        return Err(Error::Domain(format!("jya {m} outside [0, r]")));
    }
    let m_big = m.big();
    Ok(rounded(
        &(BigRational::from_integer(m_big.clone()) + cube_over_six_r2(&m_big, r)),
    ))
}

/// Coefficient of `x^(2k+1)` in the arcsin series: `(2k)! / (4^k (k!)² (2k+1))`.
pub fn arcsin_coefficient(k: u32) -> BigRational {
    // ratio of successive coefficients is (2k−1)²/(2k(2k+1))
    let mut c = BigRational::one();
    for j in 1..=i64::from(k) {
        c = c * BigInt::from((2 * j - 1) * (2 * j - 1)) / BigInt::from(2 * j * (2 * j + 1));
    }
    c
}

pub fn arcsin_coefficients(n: u32) -> Vec<BigRational> {
    (0..n).map(arcsin_coefficient).collect()
}

/// Sum of the first `n` terms of the arcsin power series at `x`.
pub fn arcsin_series(x: &BigRational, n: u32) -> Result<BigRational> {
    if x.abs() > BigRational::one() {
        return Err(Error::Domain(format!(
            "arcsin argument {x} outside [-1, 1]"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("at least one series term is required".into()));
    }
    let x2 = x * x;
    let mut power = x.clone();
    let mut sum = BigRational::from_integer(BigInt::from(0));
    for k in 0..n {
        sum += arcsin_coefficient(k) * &power;
        power *= &x2;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    const R: RadiusConstant = RadiusConstant::TRIJYA;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn madhava_worked_values() {
        assert_eq!(
            madhava_jya(ArcThirds::new(810_000), R).unwrap().value(),
            809_422
        );
        assert_eq!(madhava_jya(ArcThirds::ZERO, R).unwrap().value(), 0);
        assert_eq!(
            madhava_jya(ArcThirds::new(6_480_000), R).unwrap().value(),
            6_187_944
        );
        assert_eq!(
            madhava_jya(ArcThirds::new(-810_000), R).unwrap().value(),
            -809_422
        );
        assert!(madhava_jya(ArcThirds::from_minutes(5401), R).is_err());
    }

    #[test]
    fn series_terms_alternate_and_shrink() {
        let terms = jya_series_terms(&q(6_480_000, 1), &q(12_375_888, 1), &default_cutoff());
        assert!(terms.len() > 3);
        for pair in terms.windows(2) {
            assert!(pair[0].abs() > pair[1].abs());
            assert!(pair[0].is_positive() != pair[1].is_positive());
        }
        assert!(jya_series_terms(&q(0, 1), &q(1, 1), &default_cutoff()).is_empty());
    }

    #[test]
    fn cubic_values() {
        assert_eq!(cubic_jya(ArcThirds::new(810_000), R).value(), 809_422);
        assert_eq!(cubic_jya(ArcThirds::ZERO, R).value(), 0);
        let r = R.thirds().value();
        // s = r: s³/(6r²) = r/6
        let expect = crate::sexagesimal::round_to_thirds(
            &crate::sexagesimal::RationalArc::from_ratio(5 * r, 6 * 3600),
            Rounding::Nearest,
        );
        assert_eq!(cubic_jya(R.thirds(), R), expect);
    }

    #[test]
    fn poly3_values() {
        assert_eq!(
            arcsin_poly3(ArcThirds::new(809_422), R).unwrap().value(),
            809_999
        );
        assert_eq!(arcsin_poly3(ArcThirds::ZERO, R).unwrap().value(), 0);
        assert_eq!(
            arcsin_poly3(ArcThirds::new(1_615_378), R).unwrap().value(),
            1_619_965
        );
        assert!(arcsin_poly3(R.thirds() + ArcThirds::new(1), R).is_err());
        assert!(arcsin_poly3(ArcThirds::new(-1), R).is_err());
    }

    #[test]
    fn arcsin_series_values() {
        assert_eq!(arcsin_series(&q(1, 2), 2).unwrap(), q(25, 48));
        assert_eq!(arcsin_series(&q(0, 1), 7).unwrap(), q(0, 1));
        assert_eq!(
            arcsin_coefficients(5),
            vec![q(1, 1), q(1, 6), q(3, 40), q(5, 112), q(35, 1152)]
        );
        assert!(arcsin_series(&q(3, 2), 2).is_err());
        assert!(arcsin_series(&q(1, 2), 0).is_err());
    }
}
