use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::matrix::Scalar;
use super::{Int, Poly, Rat};

/// Finitely supported coefficient map `exponent -> coefficient` over powers of `t`,
/// exponents possibly negative. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly<T = Int> {
    terms: BTreeMap<i64, T>,
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut map: BTreeMap<i64, T> = BTreeMap::new();
        for (e, c) in terms {
            let v = map.remove(&e).map_or(c.clone(), |old| old + c);
            if !v.is_zero() {
                map.insert(e, v);
            }
        }
        LaurentPoly { terms: map }
    }

    pub fn constant(c: T) -> Self {
        LaurentPoly::from_terms([(0, c)])
    }

    /// `c * t^e`
    pub fn monomial(c: T, e: i64) -> Self {
        LaurentPoly::from_terms([(e, c)])
    }

    /// `shift` is the exponent of the constant coefficient of `p`.
    pub fn from_poly(p: &Poly<T>, shift: i64) -> Self {
        LaurentPoly::from_terms(
            p.coeffs().iter().enumerate().map(|(i, c)| (i as i64 + shift, c.clone())),
        )
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> T {
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max - min` exponent; `None` for zero.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitute `t -> t^{-1}`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// `p(t^{-1}) == p(t)`
    pub fn is_symmetric(&self) -> bool {
        self.invert_variable() == *self
    }

    pub fn scale(&self, c: &T) -> Self {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, v)| (*e, v.clone() * c.clone())))
    }

    /// Ordinary polynomial `t^{-min} * self` together with `min`.
    pub fn to_poly(&self) -> (Poly<T>, i64) {
        let Some(lo) = self.min_exp() else {
            return (Poly::zero(), 0);
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut v = vec![T::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (Poly::new(v), lo)
    }

    /// Evaluate at a nonzero point. Negative powers use `inv = x^{-1}`.
    pub fn eval_with_inverse(&self, x: &T, inv: &T) -> T {
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let (base, n) = if *e >= 0 { (x, *e) } else { (inv, -e) };
            let mut p = T::one();
            for _ in 0..n {
                p = p * base.clone();
            }
            acc = acc + c.clone() * p;
        }
        acc
    }
}

impl LaurentPoly<Int> {
    pub fn from_i64(terms: &[(i64, i64)]) -> Self {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Int::from(c))))
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> Int {
        self.terms.values().sum()
    }

    /// Value at `t = -1`.
    pub fn eval_at_minus_one(&self) -> Int {
        self.terms
            .iter()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Canonical representative up to the unit `±t^k`: nonzero constant term,
    /// minimal exponent 0, positive leading coefficient.
    pub fn unit_normalized(&self) -> Poly<Int> {
        self.to_poly().0.with_positive_leading()
    }

    pub fn to_rat(&self) -> LaurentPoly<Rat> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, Rat::from_integer(c.clone()))))
    }

    /// Evaluate at an integer (for negative exponents the point must be ±1).
    pub fn eval_int(&self, x: &Int) -> Option<Int> {
        if self.min_exp().is_some_and(|m| m < 0) && !x.abs().is_one() {
            return None;
        }
        Some(self.eval_with_inverse(x, x))
    }
}

impl<T: Scalar> Zero for LaurentPoly<T> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Scalar> One for LaurentPoly<T> {
    fn one() -> Self {
        LaurentPoly::constant(T::one())
    }
}

impl<T: Scalar> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        LaurentPoly::from_terms(
            self.terms.iter().chain(rhs.terms.iter()).map(|(e, c)| (*e, c.clone())),
        )
    }
}

impl<T: Scalar> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<T: Scalar> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        LaurentPoly::from_terms(self.terms.iter().flat_map(|(e1, c1)| {
            rhs.terms.iter().map(move |(e2, c2)| (e1 + e2, c1.clone() * c2.clone()))
        }))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        -&self
    }
}

/// Ascending exponent order with explicit negative powers: `t^-1 - 1 + t`.
impl<T> fmt::Display for LaurentPoly<T>
where
    T: Scalar + fmt::Display + PartialOrd,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(e, c)| (*e, c.clone())))
    }
}

pub(crate) fn write_terms<T>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, T)>,
) -> fmt::Result
where
    T: Scalar + fmt::Display + PartialOrd,
{
    let mut first = true;
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c < T::zero();
        let mag = if negative { -c } else { c };
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        let coeff = mag.to_string();
        let coeff = if coeff.contains('/') { format!("({coeff})") } else { coeff };
        match e {
            0 => write!(f, "{coeff}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{coeff}")?;
                }
                if e == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{e}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_ascending_with_negative_powers() {
        let conway = LaurentPoly::from_i64(&[(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(conway.to_string(), "t^-1 - 1 + t");
        assert!(conway.is_symmetric());
        assert_eq!(LaurentPoly::from_i64(&[(2, -3)]).to_string(), "-3t^2");
        assert_eq!(LaurentPoly::<Int>::zero().to_string(), "0");
        let half = LaurentPoly::from_terms([(1, Rat::new(1.into(), 2.into()))]);
        assert_eq!(half.to_string(), "(1/2)t");
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let p = LaurentPoly::from_i64(&[(0, 1), (3, 2)]);
        let q = LaurentPoly::from_i64(&[(3, -2)]);
        let s = &p + &q;
        assert_eq!(s, LaurentPoly::one());
        assert_eq!(s.span(), Some(0));
        assert_eq!(LaurentPoly::from_i64(&[(4, 0)]).min_exp(), None);
    }

    #[test]
    fn evaluation_and_normalization() {
        let p = LaurentPoly::from_i64(&[(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(p.eval_at_one(), Int::from(1));
        assert_eq!(p.eval_at_minus_one(), Int::from(-3));
        assert_eq!(p.eval_int(&Int::from(2)), None);
        let raw = p.shift(5).scale(&Int::from(-1));
        assert_eq!(raw.unit_normalized(), Poly::from_i64(&[1, -1, 1]));
        let (poly, lo) = p.to_poly();
        assert_eq!((poly, lo), (Poly::from_i64(&[1, -1, 1]), -1));
    }

    #[test]
    fn multiplication() {
        let a = LaurentPoly::from_i64(&[(-1, 1), (0, 1)]);
        assert_eq!(&a * &a, LaurentPoly::from_i64(&[(-2, 1), (-1, 2), (0, 1)]));
    }
}
