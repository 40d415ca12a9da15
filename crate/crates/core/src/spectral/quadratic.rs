use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{IntPolynomial, SpectralError};

/// Exact element `p + q√d` of the real quadratic field `ℚ(√d)`.
///
/// `d` is kept square-free and positive. Rationals carry `q = 0` and may be
/// combined with elements of any field; two irrational operands must share
/// the same radicand.
#[derive(Clone, Debug)]
pub struct QuadraticNumber {
    p: BigRational,
    q: BigRational,
    d: BigInt,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Splits `n > 0` as `s² · f` with `f` square-free.
fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut f = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let pp = &p * &p;
        while (&rest % &pp).is_zero() {
            rest /= &pp;
            square *= &p;
        }
        if (&rest % &p).is_zero() {
            rest /= &p;
            f *= &p;
        }
        p += 1;
    }
    (square, f * rest)
}

impl QuadraticNumber {
    /// `p + q√d`; `d` is reduced to its square-free part.
    pub fn new(p: BigRational, q: BigRational, d: impl Into<BigInt>) -> Result<Self, SpectralError> {
        let d = d.into();
        if !d.is_positive() {
            return Err(SpectralError::InvalidRadicand(d.to_string()));
        }
        let (s, free) = square_free_split(&d);
        let mut out = QuadraticNumber {
            p,
            q: q * BigRational::from_integer(s),
            d: free,
        };
        out.normalize();
        Ok(out)
    }

    /// Convenience constructor from integer numerators over common denominators:
    /// `p_num/p_den + (q_num/q_den)√d`.
    pub fn from_parts(p: (i64, i64), q: (i64, i64), d: i64) -> Result<Self, SpectralError> {
        Self::new(
            BigRational::new(p.0.into(), p.1.into()),
            BigRational::new(q.0.into(), q.1.into()),
            d,
        )
    }

    pub fn from_rational(p: BigRational) -> Self {
        QuadraticNumber {
            p,
            q: BigRational::zero(),
            d: BigInt::one(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// `√n` for a positive integer `n`.
    pub fn sqrt(n: i64) -> Result<Self, SpectralError> {
        Self::new(BigRational::zero(), BigRational::one(), n)
    }

    /// `(1 + √5) / 2`
    pub fn golden_ratio() -> Self {
        Self::from_parts((1, 2), (1, 2), 5).expect("5 is a valid radicand")
    }

    fn normalize(&mut self) {
        if self.d.is_one() {
            self.p = &self.p + &self.q;
            self.q = BigRational::zero();
        }
    }

    pub fn p(&self) -> &BigRational {
        &self.p
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadraticNumber {
            p: self.p.clone(),
            q: -&self.q,
            d: self.d.clone(),
        }
    }

    /// `p² - q²d`
    pub fn norm(&self) -> BigRational {
        &self.p * &self.p - &self.q * &self.q * BigRational::from_integer(self.d.clone())
    }

    fn common_radicand(&self, other: &Self) -> Result<BigInt, SpectralError> {
        if self.q.is_zero() {
            Ok(other.d.clone())
        } else if other.q.is_zero() || self.d == other.d {
            Ok(self.d.clone())
        } else {
            Err(SpectralError::FieldMismatch {
                left: self.d.to_string(),
                right: other.d.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SpectralError> {
        let d = self.common_radicand(other)?;
        let mut out = QuadraticNumber {
            p: &self.p + &other.p,
            q: &self.q + &other.q,
            d,
        };
        out.normalize();
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SpectralError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, SpectralError> {
        let d = self.common_radicand(other)?;
        let dr = BigRational::from_integer(d.clone());
        let mut out = QuadraticNumber {
            p: &self.p * &other.p + &self.q * &other.q * dr,
            q: &self.p * &other.q + &self.q * &other.p,
            d,
        };
        out.normalize();
        Ok(out)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, SpectralError> {
        if other.is_zero() {
            return Err(SpectralError::DivisionByZero);
        }
        let n = other.norm();
        let num = self.checked_mul(&other.conjugate())?;
        let mut out = QuadraticNumber {
            p: num.p / &n,
            q: num.q / &n,
            d: num.d,
        };
        out.normalize();
        Ok(out)
    }

    pub fn signum(&self) -> Ordering {
        let sp = self.p.cmp(&BigRational::zero());
        let sq = self.q.cmp(&BigRational::zero());
        if sq == Ordering::Equal {
            return sp;
        }
        if sp == Ordering::Equal || sp == sq {
            return sq;
        }
        // opposite signs: compare p² with q²d
        let p2 = &self.p * &self.p;
        let q2d = &self.q * &self.q * BigRational::from_integer(self.d.clone());
        match p2.cmp(&q2d) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn compare(&self, other: &Self) -> Result<Ordering, SpectralError> {
        Ok(self.checked_sub(other)?.signum())
    }

    /// Rational interval `[lo, hi]` containing the value, of width at most `width`.
    pub fn enclosure(&self, width: &BigRational) -> (BigRational, BigRational) {
        if self.q.is_zero() {
            return (self.p.clone(), self.p.clone());
        }
        // scale s = 2^k with |q| / s <= width
        let mut s = BigInt::one();
        let qa = self.q.abs();
        while &qa / BigRational::from_integer(s.clone()) > *width {
            s <<= 1;
        }
        let root = (&self.d * &s * &s).sqrt();
        let lo_root = BigRational::new(root.clone(), s.clone());
        let hi_root = if &root * &root == &self.d * &s * &s {
            lo_root.clone()
        } else {
            BigRational::new(root + 1, s)
        };
        let a = &self.p + &self.q * &lo_root;
        let b = &self.p + &self.q * &hi_root;
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        p + q * d.sqrt()
    }
}

/// Exact evaluation of an integer polynomial inside `ℚ(√d)`.
pub fn eval_quadratic(poly: &IntPolynomial, v: &QuadraticNumber) -> QuadraticNumber {
    let mut acc = QuadraticNumber {
        p: BigRational::zero(),
        q: BigRational::zero(),
        d: v.d.clone(),
    };
    for c in poly.coeffs().iter().rev() {
        acc = &(&acc * v) + &QuadraticNumber::from_rational(BigRational::from_integer(c.clone()));
    }
    acc
}

impl PartialEq for QuadraticNumber {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.q == other.q && (self.q.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadraticNumber {}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber {
            p: -&self.p,
            q: -&self.q,
            d: self.d.clone(),
        }
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics if both operands are irrational with different radicands.
        impl $trait<&QuadraticNumber> for &QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: &QuadraticNumber) -> QuadraticNumber {
                self.$checked(rhs).expect("quadratic field arithmetic")
            }
        }

        impl $trait<QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $method(self, rhs: QuadraticNumber) -> QuadraticNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", fmt_rational(&self.p));
        }
        let den = self.p.denom().lcm(self.q.denom());
        let scale = BigRational::from_integer(den.clone());
        let pn = (&self.p * &scale).to_integer();
        let qn = (&self.q * &scale).to_integer();
        let mut body = String::new();
        if !pn.is_zero() {
            body.push_str(&pn.to_string());
            body.push(if qn.is_negative() { '−' } else { '+' });
        } else if qn.is_negative() {
            body.push('-');
        }
        if !qn.abs().is_one() {
            body.push_str(&qn.abs().to_string());
        }
        body.push('√');
        body.push_str(&self.d.to_string());
        if den.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{den}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: (i64, i64), q: (i64, i64), d: i64) -> QuadraticNumber {
        QuadraticNumber::from_parts(p, q, d).unwrap()
    }

    #[test]
    fn radicand_is_reduced() {
        let x = QuadraticNumber::sqrt(8).unwrap();
        assert_eq!(x, q((0, 1), (2, 1), 2));
        let four = QuadraticNumber::sqrt(16).unwrap();
        assert!(four.is_rational());
        assert_eq!(four, QuadraticNumber::from_integer(4));
        assert!(QuadraticNumber::sqrt(0).is_err());
        assert!(QuadraticNumber::sqrt(-3).is_err());
    }

    #[test]
    fn golden_ratio_identity() {
        let phi = QuadraticNumber::golden_ratio();
        assert_eq!(&phi * &phi, &phi + &QuadraticNumber::from_integer(1));
        assert_eq!(
            eval_quadratic(&IntPolynomial::from_i64(&[-1, -1, 1]), &phi),
            QuadraticNumber::from_integer(0)
        );
        assert_eq!(
            eval_quadratic(&IntPolynomial::from_i64(&[-2, 0, 1]), &QuadraticNumber::sqrt(2).unwrap()),
            QuadraticNumber::from_integer(0)
        );
    }

    #[test]
    fn division_and_sign() {
        let a = q((8, 1), (4, 1), 2);
        let b = a.conjugate();
        // 1/(8+4√2) + 1/(8−4√2) = 1/2
        let one = QuadraticNumber::from_integer(1);
        let s = &(&one / &a) + &(&one / &b);
        assert_eq!(s, QuadraticNumber::from_parts((1, 2), (0, 1), 2).unwrap());
        assert_eq!(b.signum(), Ordering::Greater);
        assert_eq!(q((1, 1), (-1, 1), 2).signum(), Ordering::Less);
        assert_eq!(q((-3, 1), (1, 1), 9).signum(), Ordering::Equal);
        assert!(a.checked_div(&QuadraticNumber::from_integer(0)).is_err());
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = QuadraticNumber::sqrt(2).unwrap();
        let b = QuadraticNumber::sqrt(3).unwrap();
        assert!(matches!(a.checked_add(&b), Err(SpectralError::FieldMismatch { .. })));
        assert!(a.checked_add(&QuadraticNumber::from_integer(1)).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(q((8, 1), (4, 1), 2).to_string(), "8+4√2");
        assert_eq!(q((8, 1), (-4, 1), 2).to_string(), "8−4√2");
        assert_eq!(QuadraticNumber::golden_ratio().to_string(), "(1+√5)/2");
        assert_eq!(q((5, 2), (-1, 2), 5).to_string(), "(5−√5)/2");
        assert_eq!(q((0, 1), (-1, 1), 5).to_string(), "-√5");
        assert_eq!(QuadraticNumber::from_integer(4).to_string(), "4");
    }

    #[test]
    fn enclosure_contains_value() {
        let phi = QuadraticNumber::golden_ratio();
        let w = BigRational::new(1.into(), BigInt::from(10u64).pow(12));
        let (lo, hi) = phi.enclosure(&w);
        assert!(&hi - &lo <= w);
        let v = phi.to_f64();
        assert!(lo.to_f64().unwrap() <= v + 1e-15 && v - 1e-15 <= hi.to_f64().unwrap());
        // exact check: lo < φ < hi via signs
        let lo_q = QuadraticNumber::from_rational(lo);
        let hi_q = QuadraticNumber::from_rational(hi);
        assert_eq!(phi.compare(&lo_q).unwrap(), Ordering::Greater);
        assert_eq!(phi.compare(&hi_q).unwrap(), Ordering::Less);
    }
}
