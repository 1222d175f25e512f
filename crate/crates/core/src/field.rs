//! Exact base fields.
//!
//! Every vector space in the crate lives over one of two fields: the prime
//! field `F_p` (default `p = 2^31 - 1`) or the rationals. Arithmetic is exact
//! in both; there is no tolerance anywhere.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_core::RngCore;
use serde::{Serialize, Serializer};

/// The Mersenne prime `2^31 - 1`.
pub const MERSENNE_31: u64 = 2_147_483_647;

/// Which field a computation runs over. Echoed into every report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldKind {
    Prime { p: u64 },
    Rational,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Prime { p } => write!(f, "F_{p}"),
            FieldKind::Rational => f.write_str("Q"),
        }
    }
}

/// Exact field arithmetic.
///
/// Methods take references so the rational field does not copy big integers
/// more than needed; `Fp` is `Copy` and the references are free.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + Serialize + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` only for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    /// A random element for genericity sampling. For `F_p` this is uniform.
    fn sample<R: RngCore + ?Sized>(rng: &mut R) -> Self;
    fn kind() -> FieldKind;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Residue modulo the prime `P`. `P` must be an odd or even prime below `2^32`
/// so that products fit in a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

/// The default field.
pub type Fp31 = Fp<MERSENNE_31>;

impl<const P: u64> Fp<P> {
    const CHECK: () = assert!(P >= 2 && P < (1 << 32), "modulus must fit in 32 bits");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp(v % P)
    }

    pub fn residue(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
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

impl<const P: u64> Serialize for Fp<P> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u64(self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1 % P)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }

    fn sub(&self, rhs: &Self) -> Self {
        Fp(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + P - rhs.0
        })
    }

    fn mul(&self, rhs: &Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }

    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat; P is prime.
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    fn sample<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        let zone = u64::MAX - (u64::MAX % P);
        loop {
            let x = rng.next_u64();
            if x < zone {
                return Fp(x % P);
            }
        }
    }

    fn kind() -> FieldKind {
        FieldKind::Prime { p: P }
    }
}

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

/// Half-width of the integer box rational samples are drawn from.
pub const RATIONAL_SAMPLE_BOUND: i64 = 1 << 16;

impl Rational {
    pub fn integer(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let text: String = self.to_string();
        serializer.serialize_str(&text)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn from_i64(v: i64) -> Self {
        Rational::integer(v)
    }

    fn sample<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        let span = (2 * RATIONAL_SAMPLE_BOUND + 1) as u64;
        let zone = u64::MAX - (u64::MAX % span);
        loop {
            let x = rng.next_u64();
            if x < zone {
                return Rational::integer((x % span) as i64 - RATIONAL_SAMPLE_BOUND);
            }
        }
    }

    fn kind() -> FieldKind {
        FieldKind::Rational
    }
}

impl Rational {
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_inverses() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let x = Fp31::sample(&mut rng);
            if x.is_zero() {
                continue;
            }
            assert!(x.mul(&x.inv().unwrap()).is_one());
        }
        assert_eq!(Fp31::zero().inv(), None);
    }

    #[test]
    fn negative_integers_wrap() {
        assert_eq!(Fp31::from_i64(-1).residue(), MERSENNE_31 - 1);
        assert_eq!(Fp::<5>::from_i64(-7).residue(), 3);
        assert!(Fp31::from_i64(-1).add(&Fp31::one()).is_zero());
    }

    #[test]
    fn small_prime_arithmetic() {
        type F5 = Fp<5>;
        let two = F5::from_i64(2);
        assert_eq!(two.inv().unwrap(), F5::from_i64(3));
        assert_eq!(two.sub(&F5::from_i64(4)), F5::from_i64(3));
        assert_eq!(two.neg(), F5::from_i64(3));
    }

    #[test]
    fn rational_arithmetic() {
        let a = Rational::integer(3);
        let b = Rational::integer(-4);
        let q = a.mul(&b.inv().unwrap());
        assert_eq!(alloc::format!("{q}"), "-3/4");
        assert!(q.add(&q.neg()).is_zero());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let x = Rational::sample(&mut rng);
            assert!(x.0.numer().abs() <= BigInt::from(RATIONAL_SAMPLE_BOUND));
        }
    }
}
