//! Exact scalar fields: the rationals and prime fields `F_p`.
//!
//! Everything downstream is generic over [`Field`]. The prime is a const
//! parameter of [`Fp`], so mixing two fields is a type error rather than a
//! runtime check, and primality is asserted at compile time.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::FieldError;

/// Runtime description of a scalar field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Builds `F_p`, rejecting composite `p`.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(*p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rational"),
            FieldSpec::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rational" | "rationals" | "q" | "Q" => Ok(FieldSpec::Rationals),
            _ => {
                let digits = s
                    .strip_prefix("fp:")
                    .ok_or_else(|| FieldError::Parse(s.to_string()))?;
                let p: u64 = digits
                    .parse()
                    .map_err(|_| FieldError::Parse(s.to_string()))?;
                FieldSpec::prime(p)
            }
        }
    }
}

pub const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact commutative field.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn spec() -> FieldSpec;

    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// All elements in a fixed order (zero first, then one), or `None` for
    /// infinite fields.
    fn elements() -> Option<Vec<Self>>;
}

/// The prime field `Z/PZ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const PRIME: () = assert!(is_prime(P), "Fp modulus must be prime");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::PRIME;
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + P - rhs.0
        })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Self::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Self::new(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn spec() -> FieldSpec {
        FieldSpec::PrimeField(P)
    }

    fn from_i64(v: i64) -> Self {
        Self::new(v.rem_euclid(P as i64) as u64)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat: a^(p-2) = a^(-1)
            Some(self.pow(P - 2))
        }
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Self::new).collect())
    }
}

impl Field for BigRational {
    fn spec() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frobenius_is_identity<const P: u64>() {
        for x in Fp::<P>::elements().unwrap() {
            assert_eq!(x.pow(P), x, "x^p != x in F_{P} for x = {x}");
        }
    }

    #[test]
    fn fermat_small_primes() {
        frobenius_is_identity::<2>();
        frobenius_is_identity::<3>();
        frobenius_is_identity::<5>();
        frobenius_is_identity::<7>();
    }

    #[test]
    fn inverses_in_f7() {
        for x in Fp::<7>::elements().unwrap().into_iter().skip(1) {
            assert_eq!(x * x.inv().unwrap(), Fp::one());
        }
        assert!(Fp::<7>::zero().inv().is_none());
    }

    #[test]
    fn negative_lift() {
        assert_eq!(Fp::<5>::from_i64(-1), Fp::new(4));
        assert_eq!(Fp::<2>::from_i64(-1), Fp::new(1));
    }

    #[test]
    fn rationals_stay_reduced() {
        let a = BigRational::from_i64(2) / BigRational::from_i64(-4);
        assert_eq!(a.to_string(), "-1/2");
        assert_eq!(*a.denom(), BigInt::from(2));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("rational".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("fp:5".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(5));
        assert!(matches!("fp:6".parse::<FieldSpec>(), Err(FieldError::NotPrime(6))));
        assert!("gf4".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::PrimeField(2).to_string(), "fp:2");
    }
}
