//! Exact coefficients: rationals and univariate rational functions.
//!
//! Every structure constant in the kit is a [`Scalar`], an element of the
//! field `Q(p)` of rational functions in one formal parameter `p`. The
//! parameter is anonymous at this level; algebras carry its name and pass it
//! to the renderer.
//!
//! Scalars are kept in a canonical form so that equality is structural:
//!
//! - the numerator is a Laurent polynomial (negative powers allowed),
//! - the denominator is a monic polynomial with nonzero constant term,
//! - numerator and denominator are coprime as polynomials once the
//!   numerator is shifted to a nonnegative minimum exponent.

mod laurent;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use laurent::LaurentPoly;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Build a rational from machine integers. Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An element of `Q(p)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Apply one field operation. Only division can fail.
pub fn scalar_op(kind: ScalarOp, a: &Scalar, b: &Scalar) -> Result<Scalar> {
    Ok(match kind {
        ScalarOp::Add => a + b,
        ScalarOp::Sub => a - b,
        ScalarOp::Mul => a * b,
        ScalarOp::Div => a.checked_div(b)?,
    })
}

impl Scalar {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self {
            num: LaurentPoly::constant(c),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }

    /// The formal parameter `p`.
    pub fn param() -> Self {
        Self::param_pow(1)
    }

    /// `p^k` for any integer `k`.
    pub fn param_pow(k: i64) -> Self {
        Self::monomial(Rational::one(), k)
    }

    /// `c * p^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        Self::from_laurent(LaurentPoly::monomial(c, k))
    }

    /// Build `num / den` and bring it to canonical form.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let k = den.min_exp().unwrap();
        let den = den.shift(-k);
        let num = num.shift(-k);
        if den.is_constant() {
            let c = den.coeff(0);
            return Ok(Self::from_laurent(num.scale(&c.recip())));
        }
        let m = num.min_exp().unwrap();
        let mut n = num.shift(-m);
        let mut d = den;
        let g = n.gcd(&d);
        if !g.is_constant() {
            n = n.div_rem(&g).0;
            d = d.div_rem(&g).0;
        }
        let lc_inv = d.leading_coeff().unwrap().recip();
        Ok(Self {
            num: n.scale(&lc_inv).shift(m),
            den: d.scale(&lc_inv),
        })
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the value does not depend on the parameter.
    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    /// The rational value if the scalar is a constant.
    pub fn as_rational(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::from_fraction(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if rhs.den.is_one() && rhs.num.is_monomial() {
            // dividing by c*p^k only rescales the numerator
            let (e, c) = rhs.num.terms().next().unwrap();
            let num = self.num.scale(&c.recip()).shift(-e);
            return Ok(Self {
                num,
                den: self.den.clone(),
            });
        }
        Self::from_fraction(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        let mut sq = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Exact value at `p = v`.
    pub fn eval_at(&self, v: &Rational) -> Result<Rational> {
        let num = self.num.eval(v).ok_or(Error::NegativePowerAtZero)?;
        let den = self.den.eval(v).ok_or(Error::NegativePowerAtZero)?;
        if den.is_zero() {
            return Err(Error::Pole(v.to_string()));
        }
        Ok(num / den)
    }

    /// Render using `name` for the parameter. The output is accepted by the
    /// algebra-file scalar grammar.
    pub fn render(&self, name: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let m = self.num.min_exp().unwrap();
        let (top, den_pow) = if m < 0 {
            (self.num.shift(-m), -m)
        } else {
            (self.num.clone(), 0)
        };
        let content = top.content();
        let prim = top.scale(&content.recip());

        let mut out = if prim.is_one() {
            content.to_string()
        } else {
            let body = if prim.num_terms() > 1 {
                format!("({})", prim.render(name))
            } else {
                prim.render(name)
            };
            if content.is_one() {
                if prim.num_terms() > 1 && den_pow == 0 && self.den.is_one() {
                    prim.render(name)
                } else {
                    body
                }
            } else if content == -Rational::one() {
                format!("-{body}")
            } else {
                format!("{content}*{body}")
            }
        };

        let mut den_factors = Vec::new();
        if !self.den.is_one() {
            let d = self.den.render(name);
            den_factors.push(if self.den.num_terms() > 1 {
                format!("({d})")
            } else {
                d
            });
        }
        if den_pow > 0 {
            den_factors.push(LaurentPoly::monomial(Rational::one(), den_pow).render(name));
        }
        match den_factors.len() {
            0 => {}
            1 => {
                out.push('/');
                out.push_str(&den_factors[0]);
            }
            _ => {
                out.push_str("/(");
                out.push_str(&den_factors.join("*"));
                out.push(')');
            }
        }
        out
    }

    /// Display adapter that renders with a parameter name.
    pub fn display<'a>(&'a self, name: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Scalar, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        D(self, name)
    }
}

/// True when a rendered scalar has a `+` or `-` outside parentheses after
/// its first character, i.e. it needs parentheses before `* name`.
pub fn has_top_level_sum(rendered: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in rendered.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("p"))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.render("p"))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        if self.den == rhs.den {
            let num = self.num.add(&rhs.num);
            if self.den.is_one() {
                return Scalar::from_laurent(num);
            }
            return Scalar::from_fraction(num, self.den.clone()).expect("nonzero denominator");
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Scalar::from_fraction(num, self.den.mul(&rhs.den)).expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let num = self.num.mul(&rhs.num);
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_laurent(num);
        }
        Scalar::from_fraction(num, self.den.mul(&rhs.den)).expect("nonzero denominator")
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] to handle it.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

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

/// The q-number `{n} = (1 - p^n) / (1 - p)`, defined for every integer `n`.
///
/// For `n >= 0` this is `1 + p + ... + p^(n-1)`; for `n < 0` it is
/// `-(p^n + ... + p^-1)`.
pub fn q_number(n: i64) -> Scalar {
    let one = Rational::one();
    let terms: Vec<(i64, Rational)> = if n >= 0 {
        (0..n).map(|e| (e, one.clone())).collect()
    } else {
        (n..0).map(|e| (e, -one.clone())).collect()
    };
    Scalar::from_laurent(LaurentPoly::from_terms(terms))
}
