//! Exact field arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Every scalar in the crate is a [`Scalar`]; there is no floating point
//! anywhere. A scalar knows which field it belongs to, and mixing fields
//! panics (it is always a programming error, never a data error).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// The ground field of an algebra: exact rationals or a prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Fp { val: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Fp { val: 1 % *p, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { val: m, p: *p }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Number of elements for finite fields, None for Q.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }

    /// Iterate all field elements (finite fields only).
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some((0..*p).map(|v| Scalar::Fp { val: v, p: *p }).collect()),
        }
    }

    /// Parse an integer or rational literal like `-3`, `7`, `2/5`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, String> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let num = BigInt::from_str(num_str).map_err(|e| format!("bad integer `{num_str}`: {e}"))?;
        let den = match den_str {
            Some(d) => BigInt::from_str(d).map_err(|e| format!("bad integer `{d}`: {e}"))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        match self {
            FieldSpec::Rational => Ok(Scalar::Rat(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(*p);
                let red = |x: &BigInt| -> u64 {
                    let m = x % &pb;
                    let m = if m.is_negative() { m + &pb } else { m };
                    // p fits in u64, so the remainder does too
                    u64::from_str(&m.to_string()).unwrap()
                };
                let n = Scalar::Fp { val: red(&num), p: *p };
                let d = Scalar::Fp { val: red(&den), p: *p };
                if d.is_zero() {
                    return Err(format!("denominator divisible by {p}"));
                }
                Ok(n.div(&d))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// An element of the ground field.
///
/// Rationals are kept in lowest terms with positive denominator by
/// `BigRational`; residues are kept in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { val: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rational,
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, p } => *val == 1 % *p,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { val: mod_add(*a, *b, *p), p: *p }
            }
            _ => panic!("mixed field arithmetic"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { val, p } => Scalar::Fp { val: if *val == 0 { 0 } else { p - val }, p: *p },
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { val: mod_mul(*a, *b, *p), p: *p }
            }
            _ => panic!("mixed field arithmetic"),
        }
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { val, p } => Scalar::Fp { val: mod_inv(*val, *p), p: *p },
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv())
    }

    /// Canonical text form: integer, `a/b`, or residue value.
    pub fn to_literal(&self) -> String {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => val.to_string(),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}

fn mod_add(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, a, p);
        }
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    mod_pow(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
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
    // deterministic Miller-Rabin for u64
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let f = FieldSpec::Rational;
        let x = f.parse_scalar("4/6").unwrap();
        assert_eq!(x.to_literal(), "2/3");
        let y = f.parse_scalar("3/-6").unwrap();
        assert_eq!(y.to_literal(), "-1/2");
    }

    #[test]
    fn prime_field_ops() {
        let f = FieldSpec::Prime(7);
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(a.add(&b).to_literal(), "1");
        assert_eq!(a.mul(&b).to_literal(), "1");
        assert_eq!(a.inv().mul(&a), f.one());
        assert_eq!(f.parse_scalar("1/3").unwrap(), f.from_i64(5));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(7919));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
        assert!(is_prime(2147483647));
    }
}
