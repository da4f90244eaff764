//! Division-ring scalars: exact rationals and rational quaternions.
//!
//! All arithmetic is exact; there is no floating point anywhere in this
//! crate. `Rat` wraps an arbitrary-precision `BigRational` kept in canonical
//! form (reduced, positive denominator), so equality is structural. `Quat`
//! is the quaternion algebra over `Rat`: the simplest exactly-computable
//! noncommutative division ring, with center the rational scalars.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Discriminant naming the active division ring.
///
/// Containers parsed from JSON carry the tag explicitly; mixing rings is
/// rejected at the parsing boundary with [`Error::RingMismatch`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingTag {
    Rational,
    Quaternion,
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Rational => write!(f, "rational"),
            RingTag::Quaternion => write!(f, "quaternion"),
        }
    }
}

impl FromStr for RingTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(RingTag::Rational),
            "quaternion" => Ok(RingTag::Quaternion),
            other => Err(Error::ParseScalar(format!("unknown ring {other:?}"))),
        }
    }
}

/// Scalar interface every algorithm in this crate is generic over.
///
/// The operations are exactly the division-ring axioms: exact `add`/`mul`/
/// `neg`, a two-sided `inv` for nonzero elements, and a centrality test.
/// Multiplication need not commute; all code in this crate preserves the
/// written order of factors.
pub trait DivisionRing:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + Sized + 'static
{
    const TAG: RingTag;
    /// Whether multiplication commutes for every pair of elements.
    const COMMUTATIVE: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Two-sided inverse. Fails with [`Error::DivisionByZero`] on zero.
    fn inv(&self) -> Result<Self>;
    /// True iff the element commutes with every element of the ring.
    fn is_central(&self) -> bool;
    fn from_int(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// Exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Build `num/den`, reducing to canonical form.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Parse `"num/den"` or a bare integer `"num"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParseScalar(s.to_string());
        match s.split_once('/') {
            Some((num, den)) => {
                let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
                let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Ok(Rat(BigRational::new(num, den)))
            }
            None => {
                let num = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rat(BigRational::from_integer(num)))
            }
        }
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational prints "n" when the denominator is 1, "n/d" otherwise.
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({})", self.0)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl DivisionRing for Rat {
    const TAG: RingTag = RingTag::Rational;
    const COMMUTATIVE: bool = true;

    fn zero() -> Self {
        Rat(BigRational::zero())
    }

    fn one() -> Self {
        Rat(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rat(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rat(-&self.0)
    }

    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    fn is_central(&self) -> bool {
        true
    }

    fn from_int(n: i64) -> Self {
        Rat::from(n)
    }
}

// ---------------------------------------------------------------------------
// Rational quaternions
// ---------------------------------------------------------------------------

/// Quaternion `a + b i + c j + d k` with exact rational components.
///
/// Defining relations: `i^2 = j^2 = k^2 = -1`, `ij = k = -ji`. Every nonzero
/// element is invertible via its conjugate over the (positive) norm, so this
/// is a division ring; its center is the set of elements with
/// `b = c = d = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quat {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl Quat {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        Quat { a, b, c, d }
    }

    /// Embed a rational into the center.
    pub fn from_rat(a: Rat) -> Self {
        Quat {
            a,
            b: Rat::from(0),
            c: Rat::from(0),
            d: Rat::from(0),
        }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quat {
            a: Rat::from(a),
            b: Rat::from(b),
            c: Rat::from(c),
            d: Rat::from(d),
        }
    }

    pub fn i() -> Self {
        Quat::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quat::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quat::from_ints(0, 0, 0, 1)
    }

    pub fn conjugate(&self) -> Self {
        Quat {
            a: self.a.clone(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.d.neg(),
        }
    }

    /// Reduced norm `a^2 + b^2 + c^2 + d^2`, a nonnegative rational.
    pub fn norm_sq(&self) -> Rat {
        let sq = |x: &Rat| x.mul(x);
        sq(&self.a)
            .add(&sq(&self.b))
            .add(&sq(&self.c))
            .add(&sq(&self.d))
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, coeff: &Rat, unit: &str| -> fmt::Result {
            if coeff.is_zero() {
                return Ok(());
            }
            let neg = coeff.numer().is_negative();
            let mag = coeff.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if unit.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{unit}")?;
            } else {
                write!(f, "{mag}{unit}")?;
            }
            Ok(())
        };
        term(f, &self.a, "")?;
        term(f, &self.b, "i")?;
        term(f, &self.c, "j")?;
        term(f, &self.d, "k")?;
        Ok(())
    }
}

impl fmt::Debug for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quat({})", self)
    }
}

impl DivisionRing for Quat {
    const TAG: RingTag = RingTag::Quaternion;
    const COMMUTATIVE: bool = false;

    fn zero() -> Self {
        Quat::from_ints(0, 0, 0, 0)
    }

    fn one() -> Self {
        Quat::from_ints(1, 0, 0, 0)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Quat {
            a: self.a.add(&rhs.a),
            b: self.b.add(&rhs.b),
            c: self.c.add(&rhs.c),
            d: self.d.add(&rhs.d),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        Quat {
            a: self.a.sub(&rhs.a),
            b: self.b.sub(&rhs.b),
            c: self.c.sub(&rhs.c),
            d: self.d.sub(&rhs.d),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        Quat {
            a: a1.mul(a2).sub(&b1.mul(b2)).sub(&c1.mul(c2)).sub(&d1.mul(d2)),
            b: a1.mul(b2).add(&b1.mul(a2)).add(&c1.mul(d2)).sub(&d1.mul(c2)),
            c: a1.mul(c2).sub(&b1.mul(d2)).add(&c1.mul(a2)).add(&d1.mul(b2)),
            d: a1.mul(d2).add(&b1.mul(c2)).sub(&c1.mul(b2)).add(&d1.mul(a2)),
        }
    }

    fn neg(&self) -> Self {
        Quat {
            a: self.a.neg(),
            b: self.b.neg(),
            c: self.c.neg(),
            d: self.d.neg(),
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq().inv()?;
        let conj = self.conjugate();
        Ok(Quat {
            a: conj.a.mul(&n),
            b: conj.b.mul(&n),
            c: conj.c.mul(&n),
            d: conj.d.mul(&n),
        })
    }

    fn is_central(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    fn from_int(n: i64) -> Self {
        Quat::from_rat(Rat::from(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    fn random_quat(rng: &mut StdRng) -> Quat {
        let comp = |rng: &mut StdRng| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        Quat::new(comp(rng), comp(rng), comp(rng), comp(rng))
    }

    #[test]
    fn quaternion_defining_relations() {
        let (i, j, k) = (Quat::i(), Quat::j(), Quat::k());
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(i.mul(&i), Quat::one().neg());
        assert_eq!(j.mul(&j), Quat::one().neg());
        assert_eq!(k.mul(&k), Quat::one().neg());
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(rat(1, 2).add(&rat(1, 3)), rat(5, 6));
        assert_eq!(rat(2, 3).inv().unwrap(), rat(3, 2));
        assert_eq!(rat(2, 4), rat(1, 2)); // canonical form
        assert_eq!(rat(1, -2), rat(-1, 2)); // denominator made positive
        assert_eq!(Rat::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_parse_and_display() {
        assert_eq!(Rat::parse("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(Rat::parse("7").unwrap(), rat(7, 1));
        assert_eq!(Rat::parse("4/6").unwrap().to_string(), "2/3");
        assert_eq!(rat(5, 1).to_string(), "5");
        assert!(Rat::parse("1/0").is_err());
        assert!(Rat::parse("x").is_err());
    }

    #[test]
    fn quaternion_unit_inverses() {
        assert_eq!(Quat::i().inv().unwrap(), Quat::i().neg());
        let one_plus_i = Quat::from_ints(1, 1, 0, 0);
        // conjugate over norm: (1 - i)/2
        let expect = Quat::new(rat(1, 2), rat(-1, 2), rat(0, 1), rat(0, 1));
        let inv = one_plus_i.inv().unwrap();
        assert_eq!(inv, expect);
        assert_eq!(one_plus_i.mul(&inv), Quat::one());
        assert_eq!(inv.mul(&one_plus_i), Quat::one());
    }

    #[test]
    fn centrality() {
        assert!(Quat::from_rat(rat(3, 4)).is_central());
        assert!(!Quat::i().is_central());
        assert!(Quat::zero().is_central());
        assert!(rat(7, 3).is_central());
    }

    #[test]
    fn random_inverses_are_two_sided() {
        let mut rng = StdRng::seed_from_u64(42);
        let mut checked = 0;
        while checked < 1000 {
            let x = random_quat(&mut rng);
            if x.is_zero() {
                continue;
            }
            let xi = x.inv().unwrap();
            assert_eq!(x.mul(&xi), Quat::one());
            assert_eq!(xi.mul(&x), Quat::one());
            checked += 1;
        }
    }

    #[test]
    fn associativity_and_distributivity_spot_checks() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let x = random_quat(&mut rng);
            let y = random_quat(&mut rng);
            let z = random_quat(&mut rng);
            assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            assert_eq!(y.add(&z).mul(&x), y.mul(&x).add(&z.mul(&x)));
        }
    }

    #[test]
    fn central_elements_commute() {
        let mut rng = StdRng::seed_from_u64(11);
        let central = Quat::from_rat(rat(-5, 7));
        assert!(central.is_central());
        for _ in 0..100 {
            let y = random_quat(&mut rng);
            assert_eq!(central.mul(&y), y.mul(&central));
        }
    }

    #[test]
    fn noncentral_witness() {
        // is_central(x) = false comes with an actual non-commuting partner.
        let x = Quat::i();
        let y = Quat::j();
        assert_ne!(x.mul(&y), y.mul(&x));
    }
}
