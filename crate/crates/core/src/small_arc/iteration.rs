//! Śankara Vāriyar's fixed-point iteration for the arc of a small jyā.
//!
//! Starting from `s₀ = m`, `Δ₀ = 0`, each step computes
//! `Δᵢ = (m + Δᵢ₋₁)³ / 6r²` and `sᵢ = m + Δᵢ`, stopping once two successive
//! `sᵢ` agree. As in the hand computation, every `Δᵢ` is rounded to a whole
//! third before it is used, which makes "agree" an exact equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::sexagesimal::{round_rational, ArcThirds, RadiusConstant, RationalArc, Rounding};

pub const DEFAULT_MAX_ITER: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IterationStep {
    /// 1-based step number.
    pub index: usize,
    pub delta: ArcThirds,
    pub s: ArcThirds,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationTrace {
    pub m: ArcThirds,
    pub r: ArcThirds,
    pub steps: Vec<IterationStep>,
    pub converged: bool,
}

/// Whether `s = m + s³/6r²` has a solution at all.
///
/// `s − s³/6r²` peaks at `s = √2·r` with value `(2√2/3)·r`, so a fixed point
/// exists iff `m ≤ (2√2/3)·r`, i.e. `9m² ≤ 8r²`.
pub fn fixed_point_exists(m: ArcThirds, r: RadiusConstant) -> bool {
    let m = m.big();
    let r = r.thirds().big();
    BigInt::from(9) * &m * &m <= BigInt::from(8) * &r * &r
}

fn delta(base: &BigInt, six_r2: &BigInt) -> ArcThirds {
    let d = round_rational(
        &BigRational::new(base * base * base, six_r2.clone()),
        Rounding::Nearest,
    );
    ArcThirds::new(d.to_i64().expect("delta within i64 thirds"))
}

/// Runs the iteration with per-step rounding to thirds.
///
/// Returns the stabilised arc and the full trace, or
/// [`Error::NoConvergence`] carrying the partial trace when `m` has no fixed
/// point (`m > (2√2/3)·r ≈ 0.943·r`) or `max_iter` steps pass without two
/// equal successive values.
pub fn variyar_arcsin(
    m: ArcThirds,
    r: RadiusConstant,
    max_iter: usize,
) -> Result<(ArcThirds, IterationTrace)> {
    if m.is_negative() || m > r.thirds() {
        return Err(Error::Domain(format!("jya {m} outside [0, r]")));
    }
    let mut trace = IterationTrace {
        m,
        r: r.thirds(),
        steps: Vec::new(),
        converged: false,
    };
    if !fixed_point_exists(m, r) {
        return Err(Error::NoConvergence {
            trace: Box::new(trace),
        });
    }

    let r_big = r.thirds().big();
    let six_r2 = BigInt::from(6) * &r_big * &r_big;
    let mut prev_delta = ArcThirds::ZERO;
    let mut prev_s = m;
    for index in 1..=max_iter {
        let d = delta(&(m + prev_delta).big(), &six_r2);
        let s = m + d;
        trace.steps.push(IterationStep { index, delta: d, s });
        if s == prev_s {
            trace.converged = true;
            return Ok((s, trace));
        }
        prev_delta = d;
        prev_s = s;
    }
    Err(Error::NoConvergence {
        trace: Box::new(trace),
    })
}

/// The iterates `s₀ … s_n` without any rounding.
///
/// Denominators grow threefold per step, so this is meant for a handful of
/// iterations (property checks against the formal expansion), not for
/// running to stabilisation.
pub fn variyar_exact(m: &RationalArc, r: RadiusConstant, iterations: usize) -> Vec<RationalArc> {
    let m = m.minutes();
    let r = r.to_rational().into_minutes();
    let six_r2 = &r * &r * BigInt::from(6);
    let mut out = vec![RationalArc::new(m.clone())];
    let mut d = BigRational::from_integer(BigInt::from(0));
    for _ in 0..iterations {
        let base = m + &d;
        d = &base * &base * &base / &six_r2;
        out.push(RationalArc::new(m + &d));
    }
    out
}
