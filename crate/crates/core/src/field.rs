//! Exact coefficient fields.
//!
//! Everything above this module is generic over [`Field`]. A field is a small
//! value (the modulus for `GF(p)`, nothing for the rationals) that performs
//! arithmetic on its element type, so runtime-chosen primes work without
//! const generics. The characteristic-zero field is generic over any
//! `num-integer` integer type; [`Rationals`] fixes it to arbitrary precision.

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest supported prime modulus; products of two residues must fit in `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// A checked prime modulus. Only constructible through [`PrimeModulus::new`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::FieldTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Runtime description of a field, as it appears in files and on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(PrimeModulus),
    Rationals,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        PrimeModulus::new(p).map(FieldSpec::Prime)
    }

    pub fn gf2() -> Self {
        FieldSpec::Prime(PrimeModulus(2))
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => p.get(),
            FieldSpec::Rationals => 0,
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::gf2()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "{}", p.get()),
            FieldSpec::Rationals => f.write_str("q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts a prime (`2`, `3`, ...) or `q` / `Q` for the rationals.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let p: u64 = s.parse().map_err(|_| Error::BadField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

/// Arithmetic over an exact field.
///
/// Elements never carry their field; every operation goes through the field
/// value so that `GF(p)` can be chosen at runtime.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;
    /// The `i`-th element in a fixed enumeration of a finite field.
    fn nth(&self, i: u64) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }
}

/// The prime field `GF(p)`, elements stored as canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        PrimeModulus::new(p).map(Self::from_modulus)
    }

    pub fn from_modulus(p: PrimeModulus) -> Self {
        PrimeField { p: p.get() }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(PrimeModulus(self.p))
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let g = (*a as i64).extended_gcd(&(self.p as i64));
        debug_assert_eq!(g.gcd, 1);
        Some(g.x.rem_euclid(self.p as i64) as u64)
    }

    fn order(&self) -> Option<u64> {
        Some(self.p)
    }

    fn nth(&self, i: u64) -> u64 {
        i % self.p
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<u64> {
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::BadScalar(s.to_string()))?;
        Ok(self.from_i64(v))
    }
}

/// The field of fractions of an integer type. Elements are reduced
/// [`Ratio`]s with positive denominators.
pub struct RationalField<T = BigInt> {
    _int: PhantomData<fn() -> T>,
}

/// Rationals with arbitrary-precision numerators and denominators.
pub type Rationals = RationalField<BigInt>;

impl<T> RationalField<T> {
    pub fn new() -> Self {
        RationalField { _int: PhantomData }
    }
}

impl<T> Default for RationalField<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for RationalField<T> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for RationalField<T> {}

impl<T> fmt::Debug for RationalField<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("RationalField")
    }
}

impl<T> PartialEq for RationalField<T> {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl<T> Eq for RationalField<T> {}

/// Integer types usable as numerators and denominators.
pub trait ExactInteger:
    Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + FromStr + FromPrimitive + Send + Sync + 'static
{
}

impl<T> ExactInteger for T where
    T: Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + FromStr + FromPrimitive + Send + Sync + 'static
{
}

impl<T: ExactInteger> Field for RationalField<T> {
    type Elem = Ratio<T>;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> Ratio<T> {
        Ratio::zero()
    }

    fn one(&self) -> Ratio<T> {
        Ratio::one()
    }

    fn from_i64(&self, v: i64) -> Ratio<T> {
        Ratio::from_integer(T::from_i64(v).expect("integer type too narrow"))
    }

    fn is_zero(&self, a: &Ratio<T>) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        a + b
    }

    fn sub(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        a - b
    }

    fn mul(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        a * b
    }

    fn neg(&self, a: &Ratio<T>) -> Ratio<T> {
        -a.clone()
    }

    fn inv(&self, a: &Ratio<T>) -> Option<Ratio<T>> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn order(&self) -> Option<u64> {
        None
    }

    /// Enumerates 0, 1, -1, 2, -2, ...
    fn nth(&self, i: u64) -> Ratio<T> {
        let mag = i.div_ceil(2) as i64;
        self.from_i64(if i % 2 == 1 { mag } else { -mag })
    }

    fn format(&self, a: &Ratio<T>) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<Ratio<T>> {
        let bad = || Error::BadScalar(s.to_string());
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: T = num.parse().map_err(|_| bad())?;
        let den: T = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Ratio::new(num, den))
    }
}

/// Runs `$body` with `$f` bound to the concrete field described by a [`FieldSpec`].
///
/// ```
/// use simatroid::{with_field, Field, FieldSpec};
/// let spec: FieldSpec = "3".parse().unwrap();
/// let two = with_field!(spec, |f| f.format(&f.add(&f.one(), &f.one())));
/// assert_eq!(two, "2");
/// ```
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            $crate::FieldSpec::Prime(p) => {
                let $f = $crate::PrimeField::from_modulus(p);
                $body
            }
            $crate::FieldSpec::Rationals => {
                let $f = $crate::Rationals::new();
                $body
            }
        }
    };
}
