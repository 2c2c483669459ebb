//! Exact coefficient rings.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::elim;
use super::sparse::SparseLinearMap;

/// An exact commutative ring usable as the coefficient ring of every map.
///
/// Implemented for [`BigInt`], [`BigRational`] and [`Fp`].
pub trait Scalar:
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
    + Neg<Output = Self>
{
    /// Short ring name used in reports (`"Z"`, `"Q"`, `"F_p"`).
    fn ring_name() -> String;

    /// Characteristic of the ring (0 for Z and Q).
    fn characteristic() -> u64;

    fn from_i64(v: i64) -> Self;

    /// Image of a rational number, if it lies in the ring.
    fn from_rational(v: &BigRational) -> Option<Self>;

    /// Canonical rational representative (residues map to `0..p`).
    fn to_rational(&self) -> BigRational;

    /// Multiplicative inverse, if it exists in the ring.
    fn inverse(&self) -> Option<Self>;

    /// Rank over the fraction field (or over the field itself).
    fn rank_of(map: &SparseLinearMap<Self>) -> usize;

    /// Two-sided inverse of a square map over this ring.
    fn invert_map(map: &SparseLinearMap<Self>) -> Option<SparseLinearMap<Self>>;

    fn is_unit(&self) -> bool {
        self.inverse().is_some()
    }
}

/// Marker for coefficient rings that are fields.
pub trait Field: Scalar {}

impl Scalar for BigInt {
    fn ring_name() -> String {
        "Z".into()
    }
    fn characteristic() -> u64 {
        0
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_rational(v: &BigRational) -> Option<Self> {
        v.is_integer().then(|| v.numer().clone())
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
    fn inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
    fn rank_of(map: &SparseLinearMap<Self>) -> usize {
        elim::integer_rank(map)
    }
    fn invert_map(map: &SparseLinearMap<Self>) -> Option<SparseLinearMap<Self>> {
        if map.rows() != map.cols() {
            return None;
        }
        let factors = elim::smith_invariant_factors(map);
        if factors.len() != map.rows() || factors.iter().any(|f| !f.is_one()) {
            return None;
        }
        let inv = elim::field_inverse(&map.to_rational())?;
        inv.try_map_scalars(BigInt::from_rational)
    }
}

impl Scalar for BigRational {
    fn ring_name() -> String {
        "Q".into()
    }
    fn characteristic() -> u64 {
        0
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_rational(v: &BigRational) -> Option<Self> {
        Some(v.clone())
    }
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn rank_of(map: &SparseLinearMap<Self>) -> usize {
        elim::integer_rank(&elim::clear_denominators(map))
    }
    fn invert_map(map: &SparseLinearMap<Self>) -> Option<SparseLinearMap<Self>> {
        elim::field_inverse(map)
    }
}

impl Field for BigRational {}

/// Residue class modulo the prime `P`, stored as `0..P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn residue(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn ring_name() -> String {
        format!("F_{P}")
    }
    fn characteristic() -> u64 {
        P
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn from_rational(v: &BigRational) -> Option<Self> {
        let n = residue_mod(v.numer(), P);
        let d = residue_mod(v.denom(), P);
        let dinv = inverse_mod(d, P)?;
        Some(Fp(((n as u128 * dinv as u128) % P as u128) as u64))
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.0))
    }
    fn inverse(&self) -> Option<Self> {
        inverse_mod(self.0, P).map(Fp)
    }
    fn rank_of(map: &SparseLinearMap<Self>) -> usize {
        let cols: Vec<Vec<(usize, u64)>> = (0..map.cols())
            .map(|c| map.column(c).iter().map(|(r, v)| (*r, v.0)).collect())
            .collect();
        elim::modular_rank(map.rows(), &cols, P)
    }
    fn invert_map(map: &SparseLinearMap<Self>) -> Option<SparseLinearMap<Self>> {
        elim::field_inverse(map)
    }
}

impl<const P: u64> Field for Fp<P> {}

/// `v mod p` in `0..p`.
pub fn residue_mod(v: &BigInt, p: u64) -> u64 {
    let p_big = BigInt::from(p);
    v.mod_floor(&p_big).to_u64().expect("residue fits in u64")
}

/// Inverse of `a` modulo `p`, if `gcd(a, p) = 1`.
pub fn inverse_mod(a: u64, p: u64) -> Option<u64> {
    if p == 0 {
        return None;
    }
    let a = a % p;
    let ext = (a as i128).extended_gcd(&(p as i128));
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(p as i128) as u64)
}

/// Rational residue `v mod p`, or `None` when the denominator vanishes mod `p`.
pub fn rational_mod(v: &BigRational, p: u64) -> Option<u64> {
    let n = residue_mod(v.numer(), p);
    let d = inverse_mod(residue_mod(v.denom(), p), p)?;
    Some(((n as u128 * d as u128) % p as u128) as u64)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into a reduced rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        BigInt::from_str(t).ok().map(BigRational::from_integer)
    }
}

/// Formats a rational as a reduced fraction (`"p"` when integral).
pub fn format_rational(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}
