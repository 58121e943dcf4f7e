//! Sparse Laurent polynomials in one formal parameter with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// A finite map from integer exponents to nonzero rational coefficients.
///
/// The zero polynomial is the empty map. Polynomial-only routines
/// (`div_rem`, `gcd`) assume every exponent is nonnegative; the rational
/// function layer shifts exponents before calling them.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&e| e == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    /// Multiply by `p^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, -v)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Evaluate at `p = v`. `v` must be nonzero when negative exponents occur.
    pub fn eval(&self, v: &Rational) -> Option<Rational> {
        if v.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let mut acc = Rational::zero();
        for (&e, c) in &self.coeffs {
            acc += c * pow_rational(v, e);
        }
        Some(acc)
    }

    /// Polynomial long division. Both operands must have nonnegative exponents
    /// and `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d_deg = divisor.max_exp().expect("division by the zero polynomial");
        let d_lc = divisor.leading_coeff().cloned().unwrap();
        let mut quot = Self::zero();
        let mut rem = self.clone();
        while let Some(r_deg) = rem.max_exp() {
            if r_deg < d_deg {
                break;
            }
            let factor = rem.leading_coeff().unwrap() / &d_lc;
            let shift = r_deg - d_deg;
            quot.add_term(shift, factor.clone());
            for (&e, c) in &divisor.coeffs {
                rem.add_term(e + shift, -(c * &factor));
            }
        }
        (quot, rem)
    }

    /// Monic greatest common divisor of two polynomials (nonnegative exponents).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.make_monic();
        }
        a.make_monic()
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Rational content, signed so that `self / content` has a positive
    /// leading coefficient and coprime integer coefficients.
    pub fn content(&self) -> Rational {
        let Some(lc) = self.leading_coeff() else {
            return Rational::one();
        };
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.coeffs.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let content = Rational::new(num_gcd, den_lcm);
        if lc.is_negative() {
            -content
        } else {
            content
        }
    }

    /// Render with the given parameter name, descending exponents, no spaces.
    pub fn render(&self, name: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let mag = c.abs();
            let power = match e {
                0 => String::new(),
                1 => name.to_owned(),
                _ => format!("{name}^{e}"),
            };
            if power.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}*{power}"));
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.render("p"))
    }
}

pub(crate) fn pow_rational(v: &Rational, e: i64) -> Rational {
    let base = if e < 0 { v.recip() } else { v.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, r(c))))
    }

    #[test]
    fn cancelling_terms_are_dropped() {
        let a = poly(&[(0, 1), (2, 3)]);
        let b = poly(&[(2, -3)]);
        assert_eq!(a.add(&b), LaurentPoly::one());
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn long_division() {
        // (p^3 - 1) = (p - 1)(p^2 + p + 1)
        let (q, rem) = poly(&[(3, 1), (0, -1)]).div_rem(&poly(&[(1, 1), (0, -1)]));
        assert_eq!(q, poly(&[(2, 1), (1, 1), (0, 1)]));
        assert!(rem.is_zero());
        let (q, rem) = poly(&[(2, 1), (0, 1)]).div_rem(&poly(&[(1, 1), (0, -1)]));
        assert_eq!(q, poly(&[(1, 1), (0, 1)]));
        assert_eq!(rem, poly(&[(0, 2)]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = poly(&[(2, 2), (0, -2)]); // 2(p-1)(p+1)
        let b = poly(&[(2, 3), (1, -6), (0, 3)]); // 3(p-1)^2
        assert_eq!(a.gcd(&b), poly(&[(1, 1), (0, -1)]));
    }

    #[test]
    fn content_sign_follows_leading_coefficient() {
        let p = poly(&[(1, -4), (0, 6)]);
        assert_eq!(p.content(), r(-2));
        assert_eq!(p.render("q"), "-4*q+6");
    }

    #[test]
    fn eval_rejects_negative_power_at_zero() {
        assert!(poly(&[(-1, 1)]).eval(&r(0)).is_none());
        assert_eq!(
            poly(&[(-2, 1), (-1, 1)]).eval(&r(2)),
            Some(Rational::new(3.into(), 4.into()))
        );
    }
}
