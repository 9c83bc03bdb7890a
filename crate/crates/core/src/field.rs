//! Exact scalar fields: the rationals and prime fields.
//!
//! All algebra in this crate is generic over [`Field`]. Concrete fields are
//! chosen at compile time; [`FieldSpec`] names a field at runtime (for file
//! formats) and [`with_field!`](crate::with_field) dispatches from one to the
//! other.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Runtime name of a base field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::UnsupportedField(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Parses the short form used on the command line: `Q`, `F5`, `GF(5)`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix('F'))
            .or_else(|| t.strip_prefix('f'))
            .ok_or_else(|| Error::UnsupportedField(s.to_string()))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::UnsupportedField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

pub const fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field.
///
/// Arithmetic goes through the `std::ops` traits by value; callers clone.
pub trait Field:
    Clone
    + Debug
    + Display
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
    fn field_spec() -> FieldSpec;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    /// Parses the serialized form: `a` or `a/b` for the rationals, an integer
    /// (reduced modulo p) or `a/b` with `b` invertible for prime fields.
    fn parse_scalar(s: &str) -> Result<Self>;

    fn characteristic() -> u32 {
        Self::field_spec().characteristic()
    }
}

/// Arbitrary precision rationals.
pub type Rational = BigRational;

impl Field for BigRational {
    fn field_spec() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let bad = || Error::ParseScalar(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            None => t
                .parse::<BigInt>()
                .map(BigRational::from_integer)
                .map_err(|_| bad()),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
        }
    }
}

/// The prime field of order `P`, stored as its canonical representative in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

/// The field with two elements.
pub type F2 = Fp<2>;
/// The field with three elements.
pub type F3 = Fp<3>;
/// The field with five elements.
pub type F5 = Fp<5>;

impl<const P: u32> Fp<P> {
    const CHECK: () = assert!(is_prime(P), "Fp modulus must be prime");

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::CHECK;
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(&self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        let p = P as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u32)
    }
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in prime field")
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn field_spec() -> FieldSpec {
        FieldSpec::Prime(P)
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P as u64 - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let bad = || Error::ParseScalar(s.to_string());
        let reduce = |t: &str| -> Result<Self> {
            let n: BigInt = t.trim().parse().map_err(|_| bad())?;
            let r = ((n % BigInt::from(P)) + BigInt::from(P)) % BigInt::from(P);
            let v: u32 = r.try_into().map_err(|_| bad())?;
            Ok(Fp(v))
        };
        match s.trim().split_once('/') {
            None => reduce(s),
            Some((n, d)) => {
                let d = reduce(d)?.inverse().ok_or_else(bad)?;
                Ok(reduce(n)? * d)
            }
        }
    }
}

/// Runs `$body` with the type alias `$F` bound to the concrete field named
/// by a [`FieldSpec`]. `$body` must evaluate to a `Result`.
///
/// Prime fields are monomorphized for a fixed list of primes; other primes
/// yield [`Error::UnsupportedField`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $F:ident => $body:expr) => {{
        #[allow(unused_imports)]
        use $crate::field::Fp as __Fp;
        match $spec {
            $crate::FieldSpec::Rationals => {
                type $F = $crate::Rational;
                $body
            }
            $crate::FieldSpec::Prime(p) => $crate::with_field!(@primes p, $F, $body,
                2 3 5 7 11 13 17 19 23 29 31 37 41 43 47 53 59 61 67 71 73 79 83 89 97
                101 103 107 109 113 127 251 257 65521 65537 2147483647),
        }
    }};
    (@primes $p:ident, $F:ident, $body:expr, $($q:literal)*) => {
        match $p {
            $(
                $q => {
                    type $F = __Fp<$q>;
                    $body
                }
            )*
            other => Err($crate::Error::UnsupportedField(format!(
                "prime field F{} is not compiled in",
                other
            ))
            .into()),
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let a = F5::new(3);
        let b = F5::new(4);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 4);
        assert_eq!((a * b).value(), 2);
        assert_eq!((-a).value(), 2);
        assert_eq!(a * a.inverse().unwrap(), F5::one());
        assert_eq!(F5::zero().inverse(), None);
        assert_eq!(F5::new(-1).value(), 4);
    }

    #[test]
    fn scalar_strings() {
        let q = Rational::parse_scalar("6/-4").unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(Rational::parse_scalar("7").unwrap().to_string(), "7");
        assert!(Rational::parse_scalar("1/0").is_err());
        assert!(Rational::parse_scalar("x").is_err());
        assert_eq!(F3::parse_scalar("-1").unwrap().to_string(), "2");
        assert_eq!(F3::parse_scalar("1/2").unwrap().to_string(), "2");
        assert!(F3::parse_scalar("1/3").is_err());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("F7").unwrap(), FieldSpec::Prime(7));
        assert_eq!(FieldSpec::parse("GF(3)").unwrap(), FieldSpec::Prime(3));
        assert!(FieldSpec::parse("F4").is_err());
        assert_eq!(FieldSpec::Prime(2).characteristic(), 2);
    }

    #[test]
    fn dispatch_selects_the_named_field() {
        fn char_of(spec: FieldSpec) -> crate::Result<u32> {
            with_field!(spec, K => Ok(<K as Field>::characteristic()))
        }
        assert_eq!(char_of(FieldSpec::Rationals).unwrap(), 0);
        assert_eq!(char_of(FieldSpec::Prime(13)).unwrap(), 13);
        assert!(char_of(FieldSpec::Prime(1009)).is_err());
    }
}
