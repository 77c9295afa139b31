//! Bhāskara I's rational sine approximation and Brahmagupta's arcsin rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::oracle::{self, Precision};
use crate::sexagesimal::{exact_sqrt, RadiusConstant, RationalArc};

/// An angle as an exact rational number of degrees.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeAngle(BigRational);

impl DegreeAngle {
    pub fn new(degrees: BigRational) -> Self {
        DegreeAngle(degrees)
    }

    pub fn from_integer(degrees: i64) -> Self {
        DegreeAngle(BigRational::from_integer(degrees.into()))
    }

    pub fn degrees(&self) -> &BigRational {
        &self.0
    }

    pub fn into_degrees(self) -> BigRational {
        self.0
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn check_half_circle(x: &DegreeAngle) -> Result<()> {
    if x.0.is_negative() || x.0 > int(180) {
        return Err(Error::Domain(format!("angle {} deg outside [0, 180]", x.0)));
    }
    Ok(())
}

/// `4x(180 − x) / (40500 − x(180 − x))` for `x` in degrees.
pub fn bhaskara_sin(x: &DegreeAngle) -> Result<BigRational> {
    check_half_circle(x)?;
    let p = &x.0 * (int(180) - &x.0);
    Ok(&p * int(4) / (int(40500) - &p))
}

/// `r · x(180 − x) / (¼ [40500 − x(180 − x)])`, in the units of `r`.
pub fn bhaskara_jya(x: &DegreeAngle, r: RadiusConstant) -> Result<RationalArc> {
    let sin = bhaskara_sin(x)?;
    Ok(&r.to_rational() * &sin)
}

/// Constants of `g(x) = a + b·x(180 − x)` fitted to `g(30) = 9000`,
/// `g(90) = 8100`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFitResult {
    pub a: BigRational,
    pub b: BigRational,
}

impl RationalFitResult {
    /// `x(180 − x) / g(x)`, the sine rebuilt from the fitted constants.
    pub fn reconstructed_sin(&self, x: &DegreeAngle) -> Result<BigRational> {
        check_half_circle(x)?;
        let p = &x.0 * (int(180) - &x.0);
        let g = &self.a + &self.b * &p;
        if g.is_zero() {
            return Err(Error::Degenerate("fitted denominator vanishes".into()));
        }
        Ok(p / g)
    }
}

/// Solves the 2×2 system `a + 4500b = 9000`, `a + 8100b = 8100` exactly.
///
/// The left-hand columns come from `x(180 − x)` at 30° and 90°; the right
/// hand sides are the values of `1/k` that make `k·x(180 − x)` hit ½ and 1.
pub fn fit_bhaskara_constants() -> RationalFitResult {
    let nodes = [(30i64, int(9000)), (90, int(8100))];
    let rows: Vec<(BigRational, BigRational, BigRational)> = nodes
        .iter()
        .map(|(x, g)| (int(1), int(x * (180 - x)), g.clone()))
        .collect();
    let (a11, a12, r1) = &rows[0];
    let (a21, a22, r2) = &rows[1];
    let det = a11 * a22 - a12 * a21;
    assert!(!det.is_zero(), "the two nodes give independent equations");
    let a = (r1 * a22 - a12 * r2) / &det;
    let b = (a11 * r2 - r1 * a21) / &det;
    RationalFitResult { a, b }
}

/// `s = 90 − √(8100 − 10125·m / (m/4 + r))` degrees.
///
/// `m` and `r` only need to share a unit. The square root is exact whenever
/// the radicand is a rational square, which is the case for every `m` that
/// is the Bhāskara jyā of a rational angle; otherwise it is evaluated to the
/// oracle precision `p`.
pub fn brahmagupta_arcsin(m: &RationalArc, r: RadiusConstant, p: Precision) -> Result<DegreeAngle> {
    let r = r.to_rational();
    if m.is_negative() || *m > r {
        return Err(Error::Domain(format!("jya {} outside [0, r]", m.minutes())));
    }
    let m = m.minutes();
    let quotient = int(10125) * m / (m / BigInt::from(4) + r.minutes());
    let radicand = int(8100) - quotient;
    if radicand.is_negative() {
        return Err(Error::Domain(format!("negative radicand {radicand}")));
    }
    let root = match exact_sqrt(&radicand) {
        Some(root) => root,
        None => oracle::sqrt(&radicand, p)?,
    };
    Ok(DegreeAngle(int(90) - root))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub x: BigRational,
    pub approx: BigRational,
    pub exact: BigRational,
    /// `|approx − exact| / exact · 100`.
    pub rel_err_percent: BigRational,
}

#[derive(Clone, Debug)]
pub struct ErrorScan {
    pub rows: Vec<ScanRow>,
    /// Index into `rows` of the largest relative error.
    pub max_index: usize,
    /// `lim x→0⁺` of the relative error in percent: `(16/(5π) − 1)·100`.
    pub small_angle_limit_percent: BigRational,
}

impl ErrorScan {
    pub fn max_row(&self) -> &ScanRow {
        &self.rows[self.max_index]
    }
}

/// Relative error of the rational sine against the oracle sine on the grid
/// `step, 2·step, …` strictly inside `(0, 180)`.
pub fn bhaskara_error_scan(step: &BigRational, p: Precision) -> Result<ErrorScan> {
    if !step.is_positive() || *step >= int(180) {
        return Err(Error::Domain(format!("scan step {step} outside (0, 180)")));
    }
    let degree = oracle::degree(p);
    let mut rows = Vec::new();
    let mut x = step.clone();
    while x < int(180) {
        let angle = DegreeAngle(x.clone());
        let approx = bhaskara_sin(&angle)?;
        let exact = oracle::sin(&(&x * &degree), p);
        let rel_err_percent = ((&approx - &exact) / &exact).abs() * int(100);
        rows.push(ScanRow {
            x: x.clone(),
            approx,
            exact,
            rel_err_percent,
        });
        x += step;
    }
    let max_index = rows
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.rel_err_percent.cmp(&b.1.rel_err_percent))
        .map(|(i, _)| i)
        .expect("at least one grid point below 180");
    // near 0 the rational form is 720x/40500 = 16x/900 against πx/180
    let small_angle_limit_percent =
        (int(16) / (int(5) * oracle::pi(p)) - BigRational::one()) * int(100);
    Ok(ErrorScan {
        rows,
        max_index,
        small_angle_limit_percent,
    })
}
