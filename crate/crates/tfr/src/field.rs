//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! The field is a runtime choice (ring-theoretic properties of a toric face
//! ring may depend on the characteristic), so scalars carry their field tag
//! and arithmetic panics on a mismatch rather than coercing silently.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Which coefficient field to compute over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldSpec {
    Rationals,
    /// The prime field `F_p`.
    Prime(u64),
}

impl FieldSpec {
    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Mod { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Mod { v: 1, p: *p },
        }
    }

    /// Image of the integer `n` in the field.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Mod { v: r, p: *p }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Rejects composite moduli; everything downstream assumes a field.
    pub fn validate(&self) -> Result<(), String> {
        match self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Prime(p) => {
                if *p < 2 {
                    return Err(format!("{p} is not prime"));
                }
                let mut d = 2u64;
                while d * d <= *p {
                    if p % d == 0 {
                        return Err(format!("{p} is not prime"));
                    }
                    d += 1;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An element of the chosen field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rat(BigRational),
    Mod { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => {
                Scalar::Mod { v: (a + b) % p, p: *p }
            }
            _ => panic!("field mismatch: {self:?} vs {other:?}"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => {
                let prod = (*a as u128 * *b as u128) % (*p as u128);
                Scalar::Mod { v: prod as u64, p: *p }
            }
            _ => panic!("field mismatch: {self:?} vs {other:?}"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { v, p } => Scalar::Mod { v: if *v == 0 { 0 } else { p - v }, p: *p },
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "division by zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Mod { v, p } => {
                assert!(*v != 0, "division by zero");
                // extended Euclid on (v, p)
                let (mut r0, mut r1) = (*v as i128, *p as i128);
                let (mut s0, mut s1) = (1i128, 0i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1);
                let v = s0.rem_euclid(*p as i128) as u64;
                Scalar::Mod { v, p: *p }
            }
        }
    }

    /// Rational value, when the field is `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

/// Image of a big integer in the field.
pub fn scalar_from_bigint(field: FieldSpec, n: &BigInt) -> Scalar {
    match field {
        FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
        FieldSpec::Prime(p) => {
            let m = BigInt::from(p);
            let mut r = n % &m;
            if r.is_negative() {
                r += &m;
            }
            let digits = r.to_u64_digits().1;
            let v = if digits.is_empty() { 0 } else { digits[0] };
            Scalar::Mod { v, p }
        }
    }
}
