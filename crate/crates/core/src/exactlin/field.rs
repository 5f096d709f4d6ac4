//! Exact coefficient fields: the rationals and prime fields GF(p), p >= 5.
//!
//! All arithmetic is exact. Rationals are arbitrary-precision and always kept
//! reduced with positive denominator; GF(p) elements are canonical residues in
//! 0..p. Characteristics 2 and 3 are rejected because the sign conventions and
//! the cocycle normalizations used elsewhere divide by 2 and 3.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficient field descriptor. Cheap to copy; owns no element data.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    Rationals,
    /// GF(p) for a prime p >= 5.
    Prime(u64),
}

/// A field element. Values are interpreted relative to a [`Field`]; all
/// arithmetic goes through the field so mixed-field bugs surface as panics in
/// debug assertions rather than silent nonsense.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Fp(u64),
}

impl Field {
    /// Builds GF(p), rejecting p in {2, 3} and composite p.
    pub fn prime(p: u64) -> Result<Field> {
        if p == 2 || p == 3 {
            return Err(Error::UnsupportedCharacteristic(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let m = n.rem_euclid(*p as i64);
                Scalar::Fp(m as u64)
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp(v) => *v == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp((*x as u128 * *y as u128 % *p as u128) as u64)
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    /// Multiplicative inverse. Panics on zero: callers pivot on nonzero entries.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Rat(x.recip())
            }
            (Field::Prime(p), Scalar::Fp(x)) => {
                assert!(*x != 0, "inverse of zero");
                Scalar::Fp(mod_inverse(*x, *p))
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Parses a coefficient string: an optional sign, an integer, optionally
    /// followed by `/denominator`. Over GF(p) the value is reduced mod p and a
    /// denominator must be invertible.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty coefficient".into()));
        }
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {num_str:?}")))?;
        let den: BigInt = match den_str {
            Some(d) => d
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {d:?}")))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        match self {
            Field::Rationals => Ok(Scalar::Rat(BigRational::new(num, den))),
            Field::Prime(p) => {
                let n = bigint_mod_u64(&num, *p);
                let d = bigint_mod_u64(&den, *p);
                if d == 0 {
                    return Err(Error::Parse(format!(
                        "denominator of {s:?} vanishes in GF({p})"
                    )));
                }
                let v = (n as u128 * mod_inverse(d, *p) as u128 % *p as u128) as u64;
                Ok(Scalar::Fp(v))
            }
        }
    }

    /// Canonical string form: `n` or `n/d` with d > 1 over Q, the residue over GF(p).
    pub fn format_scalar(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(v) => v.to_string(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Field::Rationals => "Q".into(),
            Field::Prime(p) => format!("GF({p})"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

fn bigint_mod_u64(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    // m is in 0..p which fits u64
    let (_, digits) = m.to_u64_digits();
    *digits.first().unwrap_or(&0)
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on signed 128-bit, safe for any u64 modulus
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible");
    (t.rem_euclid(p as i128)) as u64
}

/// Deterministic Miller-Rabin for u64 (the listed witness set is exact below 2^64).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}
