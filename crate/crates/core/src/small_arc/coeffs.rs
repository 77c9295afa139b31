//! The iteration as a formal power series, and the sequence it uncovers.
//!
//! Writing `x = m` and `t = 1/6r²`, the iteration becomes
//! `yᵢ = t(x + yᵢ₋₁)³`, `sᵢ = x + yᵢ` with `y₀ = 0`. Every iterate has the
//! shape `sᵢ = x · Pᵢ(t x²)` for a polynomial `Pᵢ(u) = Σ c_a u^a`, and the
//! recursion on the polynomials is simply `Pᵢ = 1 + u · Pᵢ₋₁³`. Coefficient
//! `c_a` therefore multiplies `t^a x^(2a+1)`.
//!
//! The first `i + 1` coefficients of `Pᵢ` are the ternary-tree numbers
//! `(3j)! / (j! (2j+1)!)` (OEIS A001764).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::oracle::{self, Precision};

/// Coefficients `c_0 … c_N` of `Σ c_a t^a x^(2a+1)`, truncated at grade `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffSeries {
    coeffs: Vec<BigInt>,
}

impl CoeffSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, grade: usize) -> Option<&BigInt> {
        self.coeffs.get(grade)
    }

    /// Coefficients of `x^(2a+1)` once `t` is fixed: `c_a · t^a`.
    pub fn substitute(&self, t: &BigRational) -> Vec<BigRational> {
        let mut power = BigRational::one();
        self.coeffs
            .iter()
            .map(|c| {
                let v = &power * BigRational::from_integer(c.clone());
                power *= t;
                v
            })
            .collect()
    }

    /// `Σ c_a t^a x^(2a+1)` at exact `t`, `x`.
    pub fn evaluate(&self, t: &BigRational, x: &BigRational) -> BigRational {
        let u = t * x * x;
        // Horner in u
        let inner = self
            .coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * &u + BigRational::from_integer(c.clone())
            });
        inner * x
    }
}

/// Product of two polynomials, dropping every degree above `order`.
fn mul_truncated(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, bj) in b.iter().enumerate().take(order + 1 - i.min(order + 1)) {
            if i + j <= order {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Default truncation grade for `n` iterations.
pub fn default_order(n: usize) -> usize {
    n + 2
}

/// Coefficients of the `n`-th iterate truncated at grade `order`.
///
/// Truncation never disturbs the kept grades: the recursion only multiplies
/// by `u` and cubes, neither of which can move a higher grade down.
pub fn iterate_coeff_series(n: usize, order: usize) -> Result<CoeffSeries> {
    if order < n {
        return Err(Error::Domain(format!(
            "truncation grade {order} is below the iteration count {n}"
        )));
    }
    let mut p = vec![BigInt::zero(); order + 1];
    p[0] = BigInt::one();
    for _ in 0..n {
        let cube = mul_truncated(&mul_truncated(&p, &p, order), &p, order);
        let mut next = vec![BigInt::zero(); order + 1];
        next[0] = BigInt::one();
        next[1..].clone_from_slice(&cube[..order]);
        p = next;
    }
    Ok(CoeffSeries { coeffs: p })
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `(3j)! / (j! (2j+1)!)`.
pub fn a001764(j: u64) -> BigInt {
    factorial(3 * j) / (factorial(j) * factorial(2 * j + 1))
}

/// The first `count` terms by `a_{j+1} = a_j · 3(3j+1)(3j+2) / ((2j+2)(2j+3))`.
pub fn a001764_by_recurrence(count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut a = BigInt::one();
    for j in 0..count as u64 {
        out.push(a.clone());
        a = a * (3 * (3 * j + 1) * (3 * j + 2)) / ((2 * j + 2) * (2 * j + 3));
    }
    out
}

/// `2/√(3t) · sin(⅓ · arcsin(3√(3t)/2 · x))`, the sum of `Σ a_n t^n x^(2n+1)`.
pub fn gf_closed_form(t: &BigRational, x: &BigRational, p: Precision) -> Result<BigRational> {
    if !t.is_positive() {
        return Err(Error::Domain(format!("t = {t} must be positive")));
    }
    // |3√(3t)/2 · x| ≤ 1  ⇔  27 t x² ≤ 4
    if BigRational::from_integer(27.into()) * t * x * x > BigRational::from_integer(4.into()) {
        return Err(Error::Domain(format!(
            "arcsin argument outside [-1, 1] for t = {t}, x = {x}"
        )));
    }
    if x.is_zero() {
        return Ok(BigRational::zero());
    }
    let root = oracle::sqrt(&(t * BigInt::from(3)), p)?;
    let arg = (&root * BigInt::from(3) / BigInt::from(2) * x)
        .clamp(-BigRational::one(), BigRational::one());
    let angle = oracle::asin(&arg, p)? / BigInt::from(3);
    Ok(oracle::sin(&angle, p) * BigInt::from(2) / root)
}
