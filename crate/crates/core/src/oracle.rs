//! High-precision reference values for sin, cos, tan, arcsin and π.
//!
//! Everything is evaluated in binary fixed point on `BigInt` mantissas with
//! 64 guard bits beyond the requested decimal precision. Inputs and outputs
//! are exact rationals; an output is a dyadic rational whose error is far
//! below `10^-digits` relative to the magnitudes involved here (arguments of
//! a few radians, results of order one).
//!
//! None of the methods under study is implemented on top of this module
//! except where a quantity is defined by the true sine (table generation and
//! error bounds); it exists to check them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Decimal digits of precision requested from the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision(u32);

impl Precision {
    pub const DEFAULT: Precision = Precision(30);

    pub fn digits(digits: u32) -> Self {
        Precision(digits.max(1))
    }

    pub fn decimal_digits(self) -> u32 {
        self.0
    }

    fn bits(self) -> u64 {
        // log2(10) < 3.33
        u64::from(self.0) * 333 / 100 + 64
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::DEFAULT
    }
}

/// Fixed-point context: a value `m` stands for `m / 2^bits`.
struct Fixed {
    bits: u64,
    one: BigInt,
}

impl Fixed {
    fn new(p: Precision) -> Self {
        let bits = p.bits();
        Fixed {
            bits,
            one: BigInt::one() << bits,
        }
    }

    fn encode(&self, x: &BigRational) -> BigInt {
        let scaled = x.numer() << self.bits;
        // round to nearest
        let den = x.denom();
        (scaled * 2u32 + den).div_floor(&(den * 2u32))
    }

    fn to_rational(&self, m: BigInt) -> BigRational {
        BigRational::new(m, self.one.clone())
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.bits
    }

    fn div(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a << self.bits).div_floor(b)
    }

    fn sqrt(&self, a: &BigInt) -> BigInt {
        (a << self.bits).sqrt()
    }

    /// atan(1/n) for integer n > 1.
    fn atan_inv(&self, n: u32) -> BigInt {
        let n = BigInt::from(n);
        let n2 = &n * &n;
        let mut power = &self.one / &n;
        let mut sum = power.clone();
        let mut k = 1u64;
        loop {
            power = &power / &n2;
            if power.is_zero() {
                break;
            }
            let term = &power / BigInt::from(2 * k + 1);
            if k % 2 == 1 {
                sum -= term;
            } else {
                sum += term;
            }
            k += 1;
        }
        sum
    }

    fn pi(&self) -> BigInt {
        // Machin: π = 16·atan(1/5) − 4·atan(1/239)
        self.atan_inv(5) * 16 - self.atan_inv(239) * 4
    }

    /// Taylor sums for sin and cos of |y| ≤ π/4.
    fn sin_cos_small(&self, y: &BigInt) -> (BigInt, BigInt) {
        let y2 = self.mul(y, y);
        let mut s_term = y.clone();
        let mut sin = y.clone();
        let mut c_term = self.one.clone();
        let mut cos = self.one.clone();
        let mut k = 1u64;
        while !s_term.is_zero() || !c_term.is_zero() {
            c_term = -self.mul(&c_term, &y2) / BigInt::from((2 * k - 1) * (2 * k));
            s_term = -self.mul(&s_term, &y2) / BigInt::from((2 * k) * (2 * k + 1));
            cos += &c_term;
            sin += &s_term;
            k += 1;
        }
        (sin, cos)
    }

    fn sin_cos(&self, x: &BigInt) -> (BigInt, BigInt) {
        let half_pi = self.pi() >> 1u32;
        // nearest multiple of π/2
        let q = (x * 2u32 + &half_pi).div_floor(&(&half_pi * 2u32));
        let y = x - &q * &half_pi;
        let (s, c) = self.sin_cos_small(&y);
        match q.mod_floor(&BigInt::from(4)).to_u8() {
            Some(0) => (s, c),
            Some(1) => (c, -s),
            Some(2) => (-s, -c),
            _ => (-c, s),
        }
    }

    fn atan(&self, x: &BigInt) -> BigInt {
        if x.is_negative() {
            return -self.atan(&-x);
        }
        if *x > self.one {
            let half_pi = self.pi() >> 1u32;
            let inv = self.div(&self.one, x);
            return half_pi - self.atan(&inv);
        }
        // halve the angle until the argument is small: atan(x) = 2·atan(x / (1 + √(1 + x²)))
        let mut y = x.clone();
        let halvings = 8u32;
        for _ in 0..halvings {
            let hyp = self.sqrt(&(&self.one + self.mul(&y, &y)));
            y = self.div(&y, &(&self.one + hyp));
        }
        let y2 = self.mul(&y, &y);
        let mut power = y.clone();
        let mut sum = y;
        let mut k = 1u64;
        loop {
            power = -self.mul(&power, &y2);
            let term = &power / BigInt::from(2 * k + 1);
            if term.is_zero() {
                break;
            }
            sum += term;
            k += 1;
        }
        sum << halvings
    }

    fn asin(&self, x: &BigInt) -> BigInt {
        // asin(x) = 2·atan(x / (1 + √(1 − x²))), well conditioned on [−1, 1]
        let rest = &self.one - self.mul(x, x);
        let root = self.sqrt(&rest.max(BigInt::zero()));
        self.atan(&self.div(x, &(&self.one + root))) * 2
    }
}

pub fn pi(p: Precision) -> BigRational {
    let f = Fixed::new(p);
    f.to_rational(f.pi())
}

pub fn sin(x: &BigRational, p: Precision) -> BigRational {
    let f = Fixed::new(p);
    let (s, _) = f.sin_cos(&f.encode(x));
    f.to_rational(s)
}

pub fn cos(x: &BigRational, p: Precision) -> BigRational {
    let f = Fixed::new(p);
    let (_, c) = f.sin_cos(&f.encode(x));
    f.to_rational(c)
}

pub fn tan(x: &BigRational, p: Precision) -> Result<BigRational> {
    let f = Fixed::new(p);
    let (s, c) = f.sin_cos(&f.encode(x));
    if c.is_zero() {
        return Err(Error::Domain(format!("tan is undefined at {x}")));
    }
    Ok(f.to_rational(f.div(&s, &c)))
}

pub fn atan(x: &BigRational, p: Precision) -> BigRational {
    let f = Fixed::new(p);
    f.to_rational(f.atan(&f.encode(x)))
}

pub fn asin(x: &BigRational, p: Precision) -> Result<BigRational> {
    if x.abs() > BigRational::one() {
        return Err(Error::Domain(format!(
            "arcsin argument {x} outside [-1, 1]"
        )));
    }
    let f = Fixed::new(p);
    Ok(f.to_rational(f.asin(&f.encode(x))))
}

pub fn sqrt(x: &BigRational, p: Precision) -> Result<BigRational> {
    if x.is_negative() {
        return Err(Error::Domain(format!("square root of negative value {x}")));
    }
    let f = Fixed::new(p);
    Ok(f.to_rational(f.sqrt(&f.encode(x))))
}

/// Radians in one degree.
pub fn degree(p: Precision) -> BigRational {
    pi(p) / BigInt::from(180)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn close(a: &BigRational, b: &BigRational, tol_exp: i32) -> bool {
        let tol = BigRational::new(BigInt::one(), BigInt::from(10).pow(tol_exp as u32));
        (a - b).abs() <= tol
    }

    #[test]
    fn pi_digits() {
        let pi_40 = "3.1415926535897932384626433832795028841971";
        let p = pi(Precision::digits(40));
        let scaled = p * BigRational::from_integer(BigInt::from(10).pow(40));
        assert_eq!(
            scaled.floor().to_integer().to_string(),
            pi_40.replace('.', "")
        );
    }

    #[test]
    fn identities() {
        let p = Precision::DEFAULT;
        for x in [q(1, 3), q(7, 2), q(-5, 4), q(100, 7), q(0, 1)] {
            let s = sin(&x, p);
            let c = cos(&x, p);
            assert!(
                close(&(&s * &s + &c * &c), &BigRational::one(), 30),
                "x = {x}"
            );
        }
        // sin(π/6) = 1/2
        let sixth = pi(p) / BigInt::from(6);
        assert!(close(&sin(&sixth, p), &q(1, 2), 30));
        // atan(1) = π/4
        assert!(close(&(atan(&q(1, 1), p) * BigInt::from(4)), &pi(p), 30));
        // asin(1/2) = π/6, asin(1) = π/2
        assert!(close(&asin(&q(1, 2), p).unwrap(), &sixth, 30));
        assert!(close(
            &(asin(&q(1, 1), p).unwrap() * BigInt::from(2)),
            &pi(p),
            30
        ));
        assert!(close(
            &(asin(&q(-1, 1), p).unwrap() * BigInt::from(-2)),
            &pi(p),
            30
        ));
        assert!(asin(&q(3, 2), p).is_err());
        // tan(π/4) = 1
        let quarter = pi(p) / BigInt::from(4);
        assert!(close(&tan(&quarter, p).unwrap(), &BigRational::one(), 29));
        // atan of a large argument
        assert!(close(
            &(atan(&q(1000, 1), p) + atan(&q(1, 1000), p)),
            &(pi(p) / BigInt::from(2)),
            30
        ));
    }

    #[test]
    fn agrees_with_f64() {
        let p = Precision::DEFAULT;
        for &(n, d) in &[(1i64, 10i64), (3, 1), (-22, 7), (123, 4)] {
            let x = q(n, d);
            let xf = n as f64 / d as f64;
            assert!((sin(&x, p).to_f64().unwrap() - xf.sin()).abs() < 1e-14);
            assert!((cos(&x, p).to_f64().unwrap() - xf.cos()).abs() < 1e-14);
        }
        let x = q(3, 5);
        assert!((asin(&x, p).unwrap().to_f64().unwrap() - 0.6f64.asin()).abs() < 1e-15);
        assert!((sqrt(&q(2, 1), p).unwrap().to_f64().unwrap() - 2f64.sqrt()).abs() < 1e-15);
    }
}
