//! Sparse finite linear combinations over ordered keys.

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Neg, Sub};

use crate::scalar::{Rational, Scalar};

/// Finite map from keys to nonzero coefficients, kept in key order so that
/// iteration and serialization are deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord, C = Rational> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord, C> Default for LinComb<K, C> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, C: Scalar> LinComb<K, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(key: K) -> Self {
        Self::term(key, C::one())
    }

    pub fn term(key: K, coeff: C) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    /// Adds `coeff * key`, dropping the key if the result cancels.
    pub fn add_term(&mut self, key: K, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + coeff;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    pub fn coeff(&self, key: &K) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, C> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, C> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn map_keys<K2: Ord + Clone>(&self, f: impl Fn(&K) -> K2) -> LinComb<K2, C> {
        self.iter().map(|(k, c)| (f(k), c.clone())).collect()
    }

    /// Linear extension of `f` defined on keys.
    pub fn flat_map<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2, C>) -> LinComb<K2, C> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Bilinear extension of `f` defined on pairs of keys.
    pub fn bilinear<K2: Ord + Clone, K3: Ord + Clone>(
        &self,
        other: &LinComb<K2, C>,
        mut f: impl FnMut(&K, &K2) -> LinComb<K3, C>,
    ) -> LinComb<K3, C> {
        let mut out = LinComb::zero();
        for (k1, c1) in self.iter() {
            for (k2, c2) in other.iter() {
                out.add_scaled(&f(k1, k2), &(c1.clone() * c2.clone()));
            }
        }
        out
    }

    /// Keeps only the terms whose key satisfies `pred`.
    pub fn filter(&self, pred: impl Fn(&K) -> bool) -> Self {
        self.iter().filter(|(k, _)| pred(k)).map(|(k, c)| (k.clone(), c.clone())).collect()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }
}

impl<K: Ord + Clone, C: Scalar> FromIterator<(K, C)> for LinComb<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord, C> IntoIterator for LinComb<K, C> {
    type Item = (K, C);
    type IntoIter = btree_map::IntoIter<K, C>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord, C> IntoIterator for &'a LinComb<K, C> {
    type Item = (&'a K, &'a C);
    type IntoIter = btree_map::Iter<'a, K, C>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone, C: Scalar> Add for LinComb<K, C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs {
            self.add_term(k, c);
        }
        self
    }
}

impl<K: Ord + Clone, C: Scalar> Sub for LinComb<K, C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (k, c) in rhs {
            self.add_term(k, -c);
        }
        self
    }
}

impl<K: Ord + Clone, C: Scalar> Neg for LinComb<K, C> {
    type Output = Self;
    fn neg(self) -> Self {
        self.into_iter().map(|(k, c)| (k, -c)).collect()
    }
}

/// Polynomial in a formal parameter `t` with coefficients in some additive
/// structure. Trailing zero coefficients are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPoly<T> {
    coeffs: Vec<T>,
}

impl<K: Ord + Clone, C: Scalar> TPoly<LinComb<K, C>> {
    pub fn from_coeffs(mut coeffs: Vec<LinComb<K, C>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> LinComb<K, C> {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[LinComb<K, C>] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> LinComb<K, C> {
        self.coeffs.iter().cloned().fold(LinComb::zero(), |a, b| a + b)
    }
}
