//! The ground field ℚ(i).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::ParseScalarError;
use crate::rational::Rational;

/// `re + im·i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

pub type Q = GaussianRational;

impl GaussianRational {
    pub const ZERO: Self = Self {
        re: Rational::ZERO,
        im: Rational::ZERO,
    };
    pub const ONE: Self = Self {
        re: Rational::ONE,
        im: Rational::ZERO,
    };
    pub const I: Self = Self {
        re: Rational::ZERO,
        im: Rational::ONE,
    };

    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::ZERO }
    }

    pub fn int(n: i64) -> Self {
        Self::real(Rational::integer(n))
    }

    /// `num / den` as a real scalar.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::real(Rational::new(num, den))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `re² + im²`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return self.re.recip().map(Self::real);
        }
        let n = self.norm().recip()?;
        Some(Self::new(&self.re * &n, -(&self.im * &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// A square root lying in ℚ(i), if there is one.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.im.is_zero() {
            return if self.re.is_negative() {
                (-&self.re).sqrt_exact().map(|r| Self::new(Rational::ZERO, r))
            } else {
                self.re.sqrt_exact().map(Self::real)
            };
        }
        let modulus = self.norm().sqrt_exact()?;
        let u_sq = (&self.re + &modulus) / Rational::integer(2);
        let u = u_sq.sqrt_exact()?;
        if u.is_zero() {
            return None;
        }
        let v = &self.im / (Rational::integer(2) * &u);
        let root = Self::new(u, v);
        (&root * &root == *self).then_some(root)
    }

    /// The exact-matrix text token: `p/q`, `p/q+r/s*i` or `p/q-r/s*i`.
    pub fn to_token(&self) -> String {
        if self.im.is_zero() {
            self.re.to_fraction_string()
        } else if self.im.is_negative() {
            format!(
                "{}-{}*i",
                self.re.to_fraction_string(),
                (-&self.im).to_fraction_string()
            )
        } else {
            format!("{}+{}*i", self.re.to_fraction_string(), self.im.to_fraction_string())
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::real(&self.re * &rhs.re);
        }
        if self.im.is_zero() {
            return Self::new(&self.re * &rhs.re, &self.re * &rhs.im);
        }
        if rhs.im.is_zero() {
            return Self::new(&self.re * &rhs.re, &self.im * &rhs.re);
        }
        Self::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::real(&self.re + &rhs.re);
        }
        Self::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    fn sub_impl(&self, rhs: &Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::real(&self.re - &rhs.re);
        }
        Self::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    fn div_impl(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("division by zero in Q(i)")
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::ZERO
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::ONE
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                self.$imp(rhs)
            }
        }
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$imp(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$imp(rhs)
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        *self = self.add_impl(rhs);
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        *self = self.sub_impl(rhs);
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = self.mul_impl(rhs);
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = GaussianRational>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ParseScalarError(t.to_string());
        let Some(body) = t.strip_suffix("*i") else {
            return Ok(Self::real(t.parse().map_err(|_| bad())?));
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im = im.strip_prefix('+').unwrap_or(im);
        Ok(Self::new(
            re.parse().map_err(|_| bad())?,
            im.parse().map_err(|_| bad())?,
        ))
    }
}

impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Shorthand for a real scalar `num/den`.
pub fn q(num: i64, den: i64) -> Q {
    Q::frac(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Q::I * &Q::I, -Q::ONE);
    }

    #[test]
    fn inverse_and_division() {
        let z = Q::new(Rational::new(1, 2), Rational::new(-3, 4));
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, Q::ONE);
        assert!(Q::ZERO.inv().is_none());
        assert!(Q::ONE.checked_div(&Q::ZERO).is_none());
    }

    #[test]
    fn tokens_round_trip() {
        for s in ["1/2", "1/2+3/4*i", "-1/2-3/4*i", "0/1+1/1*i"] {
            let z: Q = s.parse().unwrap();
            assert_eq!(z.to_token(), s);
        }
        let z: Q = "-7*i".parse().unwrap();
        assert_eq!(z, Q::new(Rational::ZERO, Rational::integer(-7)));
        assert!("1/2+*i".parse::<Q>().is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(q(-1, 1).sqrt_exact(), Some(Q::I));
        // (1+2i)^2 = -3+4i
        let z = Q::new(Rational::integer(-3), Rational::integer(4));
        let r = z.sqrt_exact().unwrap();
        assert_eq!(&r * &r, z);
        assert_eq!(q(2, 1).sqrt_exact(), None);
        assert_eq!(Q::I.sqrt_exact(), None);
    }
}
