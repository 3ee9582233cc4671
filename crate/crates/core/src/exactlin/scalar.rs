//! Exact field elements: rationals (with a machine-word fast path) and
//! residues modulo a prime.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// The ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    PrimeField { characteristic: u64 },
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::schema(
                "field.characteristic",
                format!("{p} is not prime"),
            ));
        }
        if p >= 1 << 32 {
            return Err(Error::schema(
                "field.characteristic",
                "prime must be below 2^32",
            ));
        }
        Ok(Field::PrimeField { characteristic: p })
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::PrimeField { characteristic } => characteristic,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar(Repr::Small(0, 1)),
            Field::PrimeField { characteristic } => Scalar(Repr::Mod(0, characteristic)),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar(Repr::Small(v, 1)),
            Field::PrimeField { characteristic: p } => {
                Scalar(Repr::Mod(v.rem_euclid(p as i64) as u64, p))
            }
        }
    }

    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Internal("zero denominator".into()));
        }
        match self {
            Field::Rationals => Ok(Scalar::from_big(BigRational::new(num.clone(), den.clone()))),
            Field::PrimeField { characteristic: p } => {
                let pb = BigInt::from(p);
                let n = num.mod_floor(&pb).to_u64().unwrap_or(0);
                let d = den.mod_floor(&pb).to_u64().unwrap_or(0);
                if d == 0 {
                    return Err(Error::Internal(format!("denominator divisible by {p}")));
                }
                Ok(Scalar(Repr::Mod(n * mod_inv(d, p) % p, p)))
            }
        }
    }

    /// Parse `"p/q"` or an integer string exactly.
    pub fn parse(self, text: &str) -> std::result::Result<Scalar, String> {
        let text = text.trim();
        let (n, d) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = n.parse().map_err(|_| format!("bad numerator `{n}`"))?;
        let den: BigInt = d.parse().map_err(|_| format!("bad denominator `{d}`"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in `{text}`"));
        }
        self.from_ratio(&num, &den).map_err(|e| e.to_string())
    }

    /// Whether trace-form arguments are valid for algebras or modules of this dimension.
    pub fn trace_form_ok(self, dim: usize) -> bool {
        match self {
            Field::Rationals => true,
            Field::PrimeField { characteristic } => characteristic as usize > dim,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::PrimeField { characteristic } => write!(f, "GF({characteristic})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced fraction with positive denominator.
    Small(i64, i64),
    /// Only used when the value does not fit `Small`.
    Big(BigRational),
    Mod(u64, u64),
}

/// A field element. Arithmetic between elements of different fields panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Scalar {
    fn small(n: i128, d: i128) -> Scalar {
        debug_assert!(d != 0);
        let g = gcd_i128(n, d);
        let (mut n, mut d) = if g > 1 { (n / g, d / g) } else { (n, d) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(BigRational::new(
                BigInt::from(n),
                BigInt::from(d),
            ))),
        }
    }

    fn from_big(r: BigRational) -> Scalar {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
            Repr::Mod(..) => panic!("prime-field element used as a rational"),
        }
    }

    pub fn field(&self) -> Field {
        match self.0 {
            Repr::Mod(_, p) => Field::PrimeField { characteristic: p },
            _ => Field::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n == 0,
            Repr::Big(r) => r.is_zero(),
            Repr::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(n, d) => *n == 1 && *d == 1,
            Repr::Big(r) => r.is_one(),
            Repr::Mod(v, _) => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Scalar::small(*d as i128, *n as i128),
            Repr::Big(r) => Scalar::from_big(r.recip()),
            Repr::Mod(v, p) => Scalar(Repr::Mod(mod_inv(*v, *p), *p)),
        })
    }

    /// Numerator and denominator for rationals; `(v, 1)` for residues.
    pub fn to_ratio(&self) -> (BigInt, BigInt) {
        match &self.0 {
            Repr::Mod(v, _) => (BigInt::from(*v), BigInt::one()),
            _ => {
                let r = self.to_big();
                (r.numer().clone(), r.denom().clone())
            }
        }
    }

    /// Residue value; `None` for rationals.
    pub fn residue(&self) -> Option<u64> {
        match self.0 {
            Repr::Mod(v, _) => Some(v),
            _ => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
            Repr::Mod(..) => true,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) => write!(f, "{r}"),
            Repr::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    match a.checked_add(*c) {
                        Some(s) => Scalar(Repr::Small(s, 1)),
                        None => Scalar::small(*a as i128 + *c as i128, 1),
                    }
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    Scalar::small(a * d + c * b, b * d)
                }
            }
            (Repr::Mod(a, p), Repr::Mod(b, q)) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar(Repr::Mod((a + b) % p, *p))
            }
            _ => Scalar::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    match a.checked_mul(*c) {
                        Some(s) => Scalar(Repr::Small(s, 1)),
                        None => Scalar::small(*a as i128 * *c as i128, 1),
                    }
                } else {
                    Scalar::small(*a as i128 * *c as i128, *b as i128 * *d as i128)
                }
            }
            (Repr::Mod(a, p), Repr::Mod(b, q)) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar(Repr::Mod(a * b % p, *p))
            }
            _ => Scalar::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Scalar(Repr::Small(m, *d)),
                None => Scalar::small(-(*n as i128), *d as i128),
            },
            Repr::Big(r) => Scalar::from_big(-r.clone()),
            Repr::Mod(v, p) => Scalar(Repr::Mod((p - v) % p, *p)),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Scalar {
    /// `self += a * b`, skipping work when either factor is zero.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += &(a * b);
    }

    pub fn abs_is_small(&self) -> bool {
        matches!(self.0, Repr::Small(..) | Repr::Mod(..))
    }
}
