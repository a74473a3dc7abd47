//! Exact scalars for the linear algebra layer.
//!
//! Everything downstream is generic over [`Scalar`]; the two instances used
//! in practice are arbitrary-precision rationals and the quadratic extension
//! by sqrt(2) needed for the explicit g2 matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arbitrary-precision rational, the workhorse scalar.
pub type Rat = BigRational;

/// An exact field scalar with reduction modulo a machine prime.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_rat(r: &Rat) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    /// sqrt(2) if the field contains one.
    fn sqrt2() -> Option<Self>;
    /// The rational part if the scalar is rational, else `None`.
    fn as_rat(&self) -> Option<Rat>;
    /// Image in `F_p` where `sqrt2_p * sqrt2_p == 2 (mod p)`.
    /// `None` when a denominator vanishes mod `p`.
    fn mod_p(&self, p: u64, sqrt2_p: u64) -> Option<u64>;
}

fn rat_mod_p(r: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = ((r.numer() % &pb) + &pb) % &pb;
    let den = ((r.denom() % &pb) + &pb) % &pb;
    let den = den.to_u64()?;
    if den == 0 {
        return None;
    }
    Some(mulmod(num.to_u64()?, invmod(den, p)?, p))
}

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn invmod(a: u64, p: u64) -> Option<u64> {
    // extended Euclid
    if a == 0 {
        return None;
    }
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(((t % p as i128 + p as i128) % p as i128) as u64)
}

impl Scalar for Rat {
    fn from_i64(v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn inv(&self) -> Self {
        Rat::one() / self
    }
    fn sqrt2() -> Option<Self> {
        None
    }
    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn mod_p(&self, p: u64, _sqrt2_p: u64) -> Option<u64> {
        rat_mod_p(self, p)
    }
}

/// Element `a + b*sqrt(2)` of the quadratic extension of the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Sqrt2 {
    pub a: Rat,
    pub b: Rat,
}

impl Sqrt2 {
    pub fn new(a: Rat, b: Rat) -> Self {
        Sqrt2 { a, b }
    }
    pub fn rational(a: Rat) -> Self {
        Sqrt2 { a, b: Rat::zero() }
    }
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl fmt::Debug for Sqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Sqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt2", self.b)
        } else {
            write!(f, "{}+{}*sqrt2", self.a, self.b)
        }
    }
}

impl Add for Sqrt2 {
    type Output = Sqrt2;
    fn add(self, o: Sqrt2) -> Sqrt2 {
        Sqrt2::new(self.a + o.a, self.b + o.b)
    }
}
impl Sub for Sqrt2 {
    type Output = Sqrt2;
    fn sub(self, o: Sqrt2) -> Sqrt2 {
        Sqrt2::new(self.a - o.a, self.b - o.b)
    }
}
impl Neg for Sqrt2 {
    type Output = Sqrt2;
    fn neg(self) -> Sqrt2 {
        Sqrt2::new(-self.a, -self.b)
    }
}
impl Mul for Sqrt2 {
    type Output = Sqrt2;
    fn mul(self, o: Sqrt2) -> Sqrt2 {
        // (a + b s)(c + d s) = ac + 2bd + (ad + bc) s
        if self.b.is_zero() && o.b.is_zero() {
            return Sqrt2::rational(self.a * o.a);
        }
        let two = Rat::from_integer(BigInt::from(2));
        Sqrt2::new(
            self.a.clone() * o.a.clone() + two * self.b.clone() * o.b.clone(),
            self.a * o.b + self.b * o.a,
        )
    }
}
impl Div for Sqrt2 {
    type Output = Sqrt2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Sqrt2) -> Sqrt2 {
        self * o.inv()
    }
}
impl Zero for Sqrt2 {
    fn zero() -> Self {
        Sqrt2::rational(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}
impl One for Sqrt2 {
    fn one() -> Self {
        Sqrt2::rational(Rat::one())
    }
}

impl Scalar for Sqrt2 {
    fn from_i64(v: i64) -> Self {
        Sqrt2::rational(<Rat as Scalar>::from_i64(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Sqrt2::rational(<Rat as Scalar>::from_ratio(num, den))
    }
    fn from_rat(r: &Rat) -> Self {
        Sqrt2::rational(r.clone())
    }
    fn inv(&self) -> Self {
        // 1/(a + b s) = (a - b s)/(a^2 - 2 b^2)
        let two = Rat::from_integer(BigInt::from(2));
        let n = self.a.clone() * self.a.clone() - two * self.b.clone() * self.b.clone();
        assert!(!n.is_zero(), "division by zero in Q(sqrt2)");
        Sqrt2::new(self.a.clone() / n.clone(), -self.b.clone() / n)
    }
    fn sqrt2() -> Option<Self> {
        Some(Sqrt2::new(Rat::zero(), Rat::one()))
    }
    fn as_rat(&self) -> Option<Rat> {
        if self.b.is_zero() {
            Some(self.a.clone())
        } else {
            None
        }
    }
    fn mod_p(&self, p: u64, sqrt2_p: u64) -> Option<u64> {
        let a = rat_mod_p(&self.a, p)?;
        let b = rat_mod_p(&self.b, p)?;
        Some((a + mulmod(b, sqrt2_p, p)) % p)
    }
}

/// Mersenne prime used for modular rank shortcuts; 2 is a square mod it
/// since 2 = (2^31)^2 mod (2^61 - 1).
pub const RANK_PRIME: u64 = (1u64 << 61) - 1;
/// A square root of 2 modulo [`RANK_PRIME`].
pub const RANK_SQRT2: u64 = 1u64 << 31;

pub fn rat_is_integer(r: &Rat) -> bool {
    r.denom().is_one() || (-r.denom()).is_one()
}

pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    if rat_is_integer(r) {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn rat_abs_le(r: &Rat, bound: i64) -> bool {
    r.abs() <= <Rat as Scalar>::from_i64(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_arith() {
        let s = Sqrt2::sqrt2().unwrap();
        let two = <Sqrt2 as Scalar>::from_i64(2);
        assert_eq!(s.clone() * s.clone(), two);
        let x = Sqrt2::new(<Rat as Scalar>::from_i64(3), <Rat as Scalar>::from_i64(-2));
        let y = x.clone() * x.inv();
        assert_eq!(y, Sqrt2::one());
    }

    #[test]
    fn modp_sqrt2_consistent() {
        assert_eq!(mulmod(RANK_SQRT2, RANK_SQRT2, RANK_PRIME), 2);
        let s = Sqrt2::sqrt2().unwrap();
        let m = s.mod_p(RANK_PRIME, RANK_SQRT2).unwrap();
        assert_eq!(mulmod(m, m, RANK_PRIME), 2);
        let half = <Rat as Scalar>::from_ratio(1, 2);
        let m = half.mod_p(RANK_PRIME, RANK_SQRT2).unwrap();
        assert_eq!(mulmod(m, 2, RANK_PRIME), 1);
    }
}
