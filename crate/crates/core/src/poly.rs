//! Sparse commutative polynomials in indeterminates `x_0, x_1, x_2, ...`
//! and truncated power series over any commutative coefficient ring.
//!
//! Variable `i >= 1` plays the role of `a_i` (Bell polynomials) or `c_i`
//! (symmetric functions); variable 0 is kept free for auxiliary markers
//! such as the `x` of a double generating function.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::lincomb::LinComb;
use crate::scalar::{Field, Rational, Scalar};

/// Exponent vector; entry `i` is the exponent of `x_i`. Trailing zeros are
/// trimmed so equal monomials compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exponent(i) + other.exponent(i)).collect())
    }

    /// Total degree with `x_i` of weight `w(i)`.
    pub fn weighted_degree(&self, w: impl Fn(usize) -> u32) -> u32 {
        self.0.iter().enumerate().map(|(i, e)| e * w(i)).sum()
    }

    fn without(&self, i: usize) -> Self {
        let mut e = self.0.clone();
        if i < e.len() {
            e[i] = 0;
        }
        Monomial::new(e)
    }
}

/// Polynomial with coefficients in `C`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Poly<C = Rational> {
    terms: LinComb<Monomial, C>,
}

impl<C: Scalar> Poly<C> {
    pub fn constant(c: C) -> Self {
        Poly { terms: LinComb::term(Monomial::one(), c) }
    }

    pub fn var(i: usize) -> Self {
        Poly { terms: LinComb::monomial(Monomial::var(i)) }
    }

    pub fn from_terms(terms: LinComb<Monomial, C>) -> Self {
        Poly { terms }
    }

    pub fn terms(&self) -> &LinComb<Monomial, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.coeff(m)
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly { terms: self.terms.scale(c) }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Evaluates with `x_i ↦ value(i)`.
    pub fn eval(&self, value: impl Fn(usize) -> C) -> C {
        let mut out = C::zero();
        for (m, c) in self.terms.iter() {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t * crate::scalar::pow(&value(i), e as usize);
                }
            }
            out = out + t;
        }
        out
    }

    /// Substitutes a polynomial for every variable.
    pub fn substitute(&self, value: impl Fn(usize) -> Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (m, c) in self.terms.iter() {
            let mut t = Poly::constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t * value(i).pow(e as usize);
                }
            }
            out = out + t;
        }
        out
    }

    /// Coefficient of `x_i^k`, as a polynomial in the other variables.
    pub fn coeff_of_var(&self, i: usize, k: u32) -> Poly<C> {
        Poly { terms: self.terms.iter().filter(|(m, _)| m.exponent(i) == k).map(|(m, c)| (m.without(i), c.clone())).collect() }
    }

    /// Part of weighted degree `d`.
    pub fn weighted_component(&self, d: u32, w: impl Fn(usize) -> u32) -> Poly<C> {
        Poly { terms: self.terms.filter(|m| m.weighted_degree(&w) == d) }
    }

    /// `{"terms": [{"exponents": [e_1, e_2, ...], "num", "den"}]}`; a
    /// nonzero exponent of the marker `x_0` is reported as `"marker"`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let (num, den) = c.num_den();
                let exps: Vec<u32> = m.exponents().iter().skip(1).copied().collect();
                let mut t = json!({"exponents": exps, "num": num, "den": den});
                if m.exponent(0) > 0 {
                    t["marker"] = json!(m.exponent(0));
                }
                t
            })
            .collect();
        json!({ "terms": terms })
    }

    /// Display with variables named `{name}{i}`.
    pub fn display(&self, name: &str) -> String {
        if self.terms.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let (n, d) = c.num_den();
                let coeff = if d == "1" { n } else { format!("{n}/{d}") };
                let vars: Vec<String> = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("{name}{i}") } else { format!("{name}{i}^{e}") })
                    .collect();
                if vars.is_empty() {
                    coeff
                } else {
                    format!("{coeff}*{}", vars.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl<C: Scalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("a"))
    }
}

impl<C: Scalar> Add for Poly<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Poly { terms: self.terms + rhs.terms }
    }
}

impl<C: Scalar> Sub for Poly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Poly { terms: self.terms - rhs.terms }
    }
}

impl<C: Scalar> Neg for Poly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly { terms: -self.terms }
    }
}

impl<C: Scalar> Mul for Poly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Poly { terms: self.terms.bilinear(&rhs.terms, |a, b| LinComb::monomial(a.mul(b))) }
    }
}

impl<C: Scalar> Zero for Poly<C> {
    fn zero() -> Self {
        Poly { terms: LinComb::zero() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

impl<C: Scalar> One for Poly<C> {
    fn one() -> Self {
        Poly::constant(C::one())
    }
}

/// Commutative ring operations needed by the series routines.
pub trait Ring:
    Clone + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
}

/// A ring that is also a module over the scalar field `C`.
pub trait Algebra<C>: Ring {
    fn scale_by(&self, c: &C) -> Self;
}

impl<C: Scalar> Algebra<C> for Poly<C> {
    fn scale_by(&self, c: &C) -> Self {
        self.scale(c)
    }
}

impl Algebra<Rational> for Rational {
    fn scale_by(&self, c: &Rational) -> Self {
        self * c
    }
}

/// Power series truncated after `t^n`: `coeffs.len() == n + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Series<T> {
    /// Pads or cuts `coeffs` to length `n + 1`.
    pub fn new(mut coeffs: Vec<T>, n: usize) -> Self {
        coeffs.resize(n + 1, T::zero());
        Series { coeffs }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> T) -> Self {
        Series { coeffs: (0..=n).map(f).collect() }
    }

    pub fn one(n: usize) -> Self {
        Self::new(vec![T::one()], n)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Series::from_fn(self.order(), |i| self.coeff(i) + other.coeff(i))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Series::from_fn(self.order(), |i| self.coeff(i) - other.coeff(i))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..=n - i {
                let b = other.coeff(j);
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b;
                }
            }
        }
        Series { coeffs: out }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Series::one(self.order()), |acc, _| acc.mul(self))
    }

    /// `1 / self`, requiring `self[0] = 1`.
    pub fn inverse_unit(&self) -> Self {
        let n = self.order();
        let mut out = vec![T::one()];
        for m in 1..=n {
            let mut s = T::zero();
            for j in 1..=m {
                s = s + self.coeff(j) * out[m - j].clone();
            }
            out.push(-s);
        }
        Series { coeffs: out }
    }

    /// `self(g(t))`, requiring `g[0] = 0`.
    pub fn compose(&self, g: &Self) -> Self {
        let n = self.order();
        let mut out = Series::new(Vec::new(), n);
        let mut gp: Series<T> = Series::one(n);
        for i in 0..=n {
            let c = self.coeff(i);
            if !c.is_zero() {
                out = out.add(&gp.map(|x: &T| x.clone() * c.clone()));
            }
            gp = gp.mul(g);
        }
        out
    }

    /// Multiplies by `t^s`, dropping what falls past the order.
    pub fn shift(&self, s: usize) -> Self {
        Series::from_fn(self.order(), |i| if i >= s { self.coeff(i - s) } else { T::zero() })
    }
}

impl<T: Ring> Series<T> {
    /// `exp(self)` for `self[0] = 0`, by `m g_m = Σ_j j f_j g_{m-j}`.
    pub fn exp<C: Field>(&self) -> Self
    where
        T: Algebra<C>,
    {
        let n = self.order();
        let mut g = vec![T::one()];
        for m in 1..=n {
            let mut s = T::zero();
            for j in 1..=m {
                s = s + self.coeff(j).scale_by(&C::from_i64(j as i64)) * g[m - j].clone();
            }
            g.push(s.scale_by(&(C::one() / C::from_i64(m as i64))));
        }
        Series { coeffs: g }
    }

    /// `log(self)` for `self[0] = 1`, by `m l_m = m g_m - Σ_{j<m} j l_j g_{m-j}`.
    pub fn log<C: Field>(&self) -> Self
    where
        T: Algebra<C>,
    {
        let n = self.order();
        let mut l = vec![T::zero()];
        for m in 1..=n {
            let mut s = self.coeff(m).scale_by(&C::from_i64(m as i64));
            for j in 1..m {
                s = s - l[j].scale_by(&C::from_i64(j as i64)) * self.coeff(m - j);
            }
            l.push(s.scale_by(&(C::one() / C::from_i64(m as i64))));
        }
        Series { coeffs: l }
    }
}
