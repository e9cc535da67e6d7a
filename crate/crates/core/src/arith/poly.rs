use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Scalar;
use super::{Int, Rat};

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// Canonical form: no trailing zeros, so the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c * t^deg`
    pub fn monomial(c: T, deg: usize) -> Self {
        let mut v = vec![T::zero(); deg + 1];
        v[deg] = c;
        Poly::new(v)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|v| v.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = T::zero();
        for c in self.coeffs.iter() {
            if !k.is_zero() {
                out.push(c.clone() * k.clone());
            }
            k = k + T::one();
        }
        Poly::new(out)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Largest `k` with `t^k` dividing `self` (0 for the zero polynomial).
    pub fn t_adic_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count().min(self.coeffs.len())
    }

    /// Remove the factor `t^k` with `k = t_adic_valuation`.
    pub fn strip_t(&self) -> Self {
        Poly { coeffs: self.coeffs[self.t_adic_valuation()..].to_vec() }
    }

    /// `t^deg * p(1/t)`.
    pub fn reciprocal(&self) -> Self {
        Poly::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl Poly<Int> {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> Int {
        self.coeffs.iter().fold(Int::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Poly { coeffs: self.coeffs.iter().map(|v| v / &c).collect() }
    }

    pub fn to_rat(&self) -> Poly<Rat> {
        Poly { coeffs: self.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect() }
    }

    /// Exact quotient `self / d` in Z[t], or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Poly<Int>) -> Option<Poly<Int>> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let n = self.degree()?;
        if n < dd {
            return None;
        }
        let lc = d.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * dc;
            }
            quot[k] = qk;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Poly::new(quot))
        } else {
            None
        }
    }

    /// Sum of absolute values of coefficients.
    pub fn l1_norm(&self) -> Int {
        self.coeffs.iter().map(Signed::abs).sum()
    }

    /// Normalized reciprocal: `±t^deg p(1/t)` with positive leading coefficient.
    pub fn normalized_reciprocal(&self) -> Self {
        self.strip_t().reciprocal().strip_t().with_positive_leading()
    }

    pub fn with_positive_leading(&self) -> Self {
        if self.leading().is_some_and(Signed::is_negative) {
            -self
        } else {
            self.clone()
        }
    }
}

impl Poly<Rat> {
    /// Division with remainder over Q. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly<Rat>) -> (Poly<Rat>, Poly<Rat>) {
        let dd = d.degree().expect("division by the zero polynomial");
        let Some(n) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if n < dd {
            return (Poly::zero(), self.clone());
        }
        let inv = d.leading().expect("nonzero").recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let qk = &rem[k + dd] * &inv;
            if qk.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let v = &rem[k + j] - &qk * dc;
                rem[k + j] = v;
            }
            quot[k] = qk;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Clear denominators and take the primitive integer part.
    pub fn to_primitive_int(&self) -> Poly<Int> {
        let den = self.coeffs.iter().fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let ints = Poly::new(self.coeffs.iter().map(|c| (c * &den).to_integer()).collect());
        ints.primitive_part()
    }

    /// Integer polynomial if all coefficients are integral.
    pub fn to_int(&self) -> Option<Poly<Int>> {
        if self.coeffs.iter().all(Rat::is_integer) {
            Some(Poly { coeffs: self.coeffs.iter().map(Rat::to_integer).collect() })
        } else {
            None
        }
    }
}

/// Formats with `t` as the variable, ascending degree: `1 - t + t^2`.
impl<T> fmt::Display for Poly<T>
where
    T: Scalar + fmt::Display + PartialOrd,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone()));
        super::laurent::write_terms(f, terms)
    }
}
