//! The Hopf algebras `CWSym(a)` (basis Φ, concatenation-type product) and
//! its graded dual `CΠQSym(a)` (basis Ψ, shuffle-type product), plus the
//! monomial (M) and complete (S) bases of the uncolored case `a = ones`.

use std::fmt;
use std::marker::PhantomData;

use serde_json::{json, Value};

use crate::combinatorics::{ColorSequence, ColoredSetPartition, SetPartition};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{Rational, Scalar};
use crate::util::{combinations, complement};

/// Compile-time basis tag.
pub trait Basis: Copy + Clone + fmt::Debug + PartialEq + Eq + 'static {
    const NAME: &'static str;
}

/// Bases that carry a Hopf structure on colored set partitions.
pub trait HopfBasis: Basis {
    fn product_keys<C: Scalar>(x: &ColoredSetPartition, y: &ColoredSetPartition) -> LinComb<ColoredSetPartition, C>;
    fn coproduct_key<C: Scalar>(x: &ColoredSetPartition) -> LinComb<(ColoredSetPartition, ColoredSetPartition), C>;
}

macro_rules! basis {
    ($(#[$m:meta])* $t:ident, $name:expr) => {
        $(#[$m])*
        #[derive(Copy, Clone, Debug, PartialEq, Eq)]
        pub struct $t;
        impl Basis for $t {
            const NAME: &'static str = $name;
        }
    };
}

basis!(
    /// Φ basis of `CWSym(a)`.
    Phi,
    "Phi"
);
basis!(
    /// Ψ basis of `CΠQSym(a)`, dual to Φ.
    Psi,
    "Psi"
);
basis!(
    /// Word monomial basis of `WSym`.
    Mono,
    "M"
);
basis!(
    /// Complete basis of `ΠQSym`, dual to M.
    Complete,
    "S"
);

/// Pairs `(x, y)` of bases in duality: `⟨x_Π, y_Π'⟩ = δ_{Π,Π'}`.
pub trait DualTo<B: Basis>: Basis {}
impl DualTo<Psi> for Phi {}
impl DualTo<Mono> for Complete {}

impl HopfBasis for Phi {
    fn product_keys<C: Scalar>(x: &ColoredSetPartition, y: &ColoredSetPartition) -> LinComb<ColoredSetPartition, C> {
        LinComb::monomial(x.shifted_union(y))
    }

    /// Sum over splittings of the parts into two complementary subsets.
    fn coproduct_key<C: Scalar>(x: &ColoredSetPartition) -> LinComb<(ColoredSetPartition, ColoredSetPartition), C> {
        let k = x.len();
        let mut out = LinComb::zero();
        for mask in 0u64..(1 << k) {
            let left: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
            let right: Vec<bool> = left.iter().map(|b| !b).collect();
            out.add_term((x.restrict_std(&left), x.restrict_std(&right)), C::one());
        }
        out
    }
}

impl HopfBasis for Psi {
    /// `Σ_{Π ∈ x ⋓ y} α^Π_{x,y} Ψ_Π`: one term per choice of support for `x`.
    fn product_keys<C: Scalar>(x: &ColoredSetPartition, y: &ColoredSetPartition) -> LinComb<ColoredSetPartition, C> {
        let n = x.size() + y.size();
        let mut out = LinComb::zero();
        for s in combinations(n, x.size()) {
            let c = complement(n, &s);
            let mut parts: Vec<(Vec<usize>, usize)> =
                x.parts().iter().map(|p| (p.block.iter().map(|&i| s[i - 1]).collect(), p.color)).collect();
            parts.extend(y.parts().iter().map(|p| (p.block.iter().map(|&i| c[i - 1]).collect(), p.color)));
            out.add_term(ColoredSetPartition::new(parts).expect("interleaving is a partition"), C::one());
        }
        out
    }

    /// Deconcatenation: all `Π = Π' ⊎ Π''`.
    fn coproduct_key<C: Scalar>(x: &ColoredSetPartition) -> LinComb<(ColoredSetPartition, ColoredSetPartition), C> {
        let mut out = LinComb::zero();
        for m in 0..=x.size() {
            let left: Vec<bool> = x.parts().iter().map(|p| p.block[0] <= m).collect();
            let splits = x
                .parts()
                .iter()
                .zip(&left)
                .all(|(p, &l)| if l { *p.block.last().unwrap() <= m } else { p.block[0] > m });
            if splits {
                let right: Vec<bool> = left.iter().map(|b| !b).collect();
                out.add_term((x.restrict_std(&left), x.restrict_std(&right)), C::one());
            }
        }
        out
    }
}

/// Element of one of the algebras, expanded in basis `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element<B: Basis, C = Rational> {
    seq: ColorSequence,
    terms: LinComb<ColoredSetPartition, C>,
    _basis: PhantomData<B>,
}

/// Element of the tensor square, expanded in `B ⊗ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<B: Basis, C = Rational> {
    seq: ColorSequence,
    terms: LinComb<(ColoredSetPartition, ColoredSetPartition), C>,
    _basis: PhantomData<B>,
}

fn same_seq(a: &ColorSequence, b: &ColorSequence) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::SequenceMismatch(a.to_string(), b.to_string()))
    }
}

fn key_json(k: &ColoredSetPartition, colored: bool) -> Value {
    if colored {
        k.to_json()
    } else {
        k.underlying().to_json()
    }
}

impl<B: Basis, C: Scalar> Element<B, C> {
    pub fn zero(seq: ColorSequence) -> Self {
        Element { seq, terms: LinComb::zero(), _basis: PhantomData }
    }

    /// The unit `B_∅`.
    pub fn one(seq: ColorSequence) -> Self {
        Self::from_terms_unchecked(seq, LinComb::monomial(ColoredSetPartition::empty()))
    }

    /// Single basis element; the key is validated against `seq`.
    pub fn basis(seq: ColorSequence, key: ColoredSetPartition) -> Result<Self> {
        key.validate(&seq)?;
        Ok(Self::from_terms_unchecked(seq, LinComb::monomial(key)))
    }

    /// Uncolored basis element of `WSym`/`ΠQSym` (`a = ones`).
    pub fn word(p: &SetPartition) -> Self {
        Self::from_terms_unchecked(ColorSequence::ones(), LinComb::monomial(ColoredSetPartition::from_uncolored(p)))
    }

    pub fn from_terms(seq: ColorSequence, terms: LinComb<ColoredSetPartition, C>) -> Result<Self> {
        for k in terms.keys() {
            k.validate(&seq)?;
        }
        Ok(Self::from_terms_unchecked(seq, terms))
    }

    pub(crate) fn from_terms_unchecked(seq: ColorSequence, terms: LinComb<ColoredSetPartition, C>) -> Self {
        Element { seq, terms, _basis: PhantomData }
    }

    pub fn seq(&self) -> &ColorSequence {
        &self.seq
    }

    pub fn terms(&self) -> &LinComb<ColoredSetPartition, C> {
        &self.terms
    }

    pub fn coeff(&self, key: &ColoredSetPartition) -> C {
        self.terms.coeff(key)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Degree if homogeneous, `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(ColoredSetPartition::size);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Component of degree `n`.
    pub fn homogeneous(&self, n: usize) -> Self {
        Self::from_terms_unchecked(self.seq.clone(), self.terms.filter(|k| k.size() == n))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_seq(&self.seq, &other.seq)?;
        Ok(Self::from_terms_unchecked(self.seq.clone(), self.terms.clone() + other.terms.clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_seq(&self.seq, &other.seq)?;
        Ok(Self::from_terms_unchecked(self.seq.clone(), self.terms.clone() - other.terms.clone()))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms_unchecked(self.seq.clone(), self.terms.scale(c))
    }

    /// Counit: coefficient of the empty partition.
    pub fn counit(&self) -> C {
        self.terms.coeff(&ColoredSetPartition::empty())
    }

    /// `{"basis", "sequence", "terms": [{"key", "num", "den"}]}`; keys are
    /// uncolored lists of blocks when the sequence is `ones`.
    pub fn to_json(&self) -> Value {
        let colored = self.seq != ColorSequence::ones();
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let (num, den) = c.num_den();
                json!({"key": key_json(k, colored), "num": num, "den": den})
            })
            .collect();
        json!({"basis": B::NAME, "sequence": self.seq.to_string(), "terms": terms})
    }
}

impl<B: Basis, C: Scalar> fmt::Display for Element<B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let (n, d) = c.num_den();
                let coeff = if d == "1" { n } else { format!("{n}/{d}") };
                format!("{coeff}*{}{}", B::NAME, k)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<B: HopfBasis, C: Scalar> Element<B, C> {
    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_seq(&self.seq, &other.seq)?;
        let terms = self.terms.bilinear(&other.terms, |x, y| B::product_keys(x, y));
        Ok(Self::from_terms_unchecked(self.seq.clone(), terms))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.seq.clone()), |acc, _| acc.mul(self).unwrap())
    }

    pub fn coproduct(&self) -> Tensor<B, C> {
        Tensor { seq: self.seq.clone(), terms: self.terms.flat_map(|k| B::coproduct_key(k)), _basis: PhantomData }
    }

    /// Antipode of the graded connected bialgebra, by the recursion
    /// `S(x) = -x - Σ S(x') x''` over the reduced coproduct.
    pub fn antipode(&self) -> Self {
        let terms = self.terms.flat_map(|k| antipode_key::<B, C>(k));
        Self::from_terms_unchecked(self.seq.clone(), terms)
    }
}

fn antipode_key<B: HopfBasis, C: Scalar>(k: &ColoredSetPartition) -> LinComb<ColoredSetPartition, C> {
    if k.size() == 0 {
        return LinComb::monomial(k.clone());
    }
    let mut out = LinComb::term(k.clone(), -C::one());
    let cop: LinComb<(ColoredSetPartition, ColoredSetPartition), C> = B::coproduct_key(k);
    for ((l, r), c) in cop.iter() {
        if l.size() == 0 || r.size() == 0 {
            continue;
        }
        let sl = antipode_key::<B, C>(l);
        let prod = sl.bilinear(&LinComb::monomial(r.clone()), |x, y| B::product_keys::<C>(x, y));
        out.add_scaled(&prod, &-c.clone());
    }
    out
}

impl<B: Basis, C: Scalar> Tensor<B, C> {
    pub fn from_terms(seq: ColorSequence, terms: LinComb<(ColoredSetPartition, ColoredSetPartition), C>) -> Self {
        Tensor { seq, terms, _basis: PhantomData }
    }

    pub fn simple(x: &Element<B, C>, y: &Element<B, C>) -> Result<Self> {
        same_seq(&x.seq, &y.seq)?;
        let terms = x.terms.bilinear(&y.terms, |a, b| LinComb::monomial((a.clone(), b.clone())));
        Ok(Self::from_terms(x.seq.clone(), terms))
    }

    pub fn terms(&self) -> &LinComb<(ColoredSetPartition, ColoredSetPartition), C> {
        &self.terms
    }

    pub fn seq(&self) -> &ColorSequence {
        &self.seq
    }

    /// Exchanges the tensor legs.
    pub fn swap(&self) -> Self {
        Self::from_terms(self.seq.clone(), self.terms.map_keys(|(a, b)| (b.clone(), a.clone())))
    }

    /// `f ⊗ g` applied leg-wise, then multiplied: `Σ c f(a) g(b)` for a product `m`.
    pub fn contract<K: Ord + Clone>(
        &self,
        mut f: impl FnMut(&ColoredSetPartition, &ColoredSetPartition) -> LinComb<K, C>,
    ) -> LinComb<K, C> {
        self.terms.flat_map(|(a, b)| f(a, b))
    }

    pub fn to_json(&self) -> Value {
        let colored = self.seq != ColorSequence::ones();
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                let (num, den) = c.num_den();
                json!({"key": [key_json(a, colored), key_json(b, colored)], "num": num, "den": den})
            })
            .collect();
        json!({"basis": format!("{0}⊗{0}", B::NAME), "sequence": self.seq.to_string(), "terms": terms})
    }
}

impl<B: HopfBasis, C: Scalar> Tensor<B, C> {
    /// Product in the tensor square algebra.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_seq(&self.seq, &other.seq)?;
        let terms = self.terms.bilinear(&other.terms, |(a1, b1), (a2, b2)| {
            let l: LinComb<ColoredSetPartition, C> = B::product_keys(a1, a2);
            let r: LinComb<ColoredSetPartition, C> = B::product_keys(b1, b2);
            l.bilinear(&r, |x, y| LinComb::monomial((x.clone(), y.clone())))
        });
        Ok(Self::from_terms(self.seq.clone(), terms))
    }

    /// `(Δ ⊗ id)` when `left` is true, else `(id ⊗ Δ)`; keys are triples.
    pub fn coproduct_leg(&self, left: bool) -> LinComb<(ColoredSetPartition, ColoredSetPartition, ColoredSetPartition), C> {
        self.terms.flat_map(|(a, b)| {
            if left {
                let d: LinComb<_, C> = B::coproduct_key(a);
                d.map_keys(|(x, y)| (x.clone(), y.clone(), b.clone()))
            } else {
                let d: LinComb<_, C> = B::coproduct_key(b);
                d.map_keys(|(x, y)| (a.clone(), x.clone(), y.clone()))
            }
        })
    }
}

/// `⟨x, y⟩` for bases in duality.
pub fn pairing<B1: DualTo<B2>, B2: Basis, C: Scalar>(x: &Element<B1, C>, y: &Element<B2, C>) -> Result<C> {
    same_seq(&x.seq, &y.seq)?;
    Ok(x.terms.iter().fold(C::zero(), |acc, (k, c)| acc + c.clone() * y.terms.coeff(k)))
}

/// `⟨x ⊗ y, z⟩` on tensor squares of dual bases.
pub fn tensor_pairing<B1: DualTo<B2>, B2: Basis, C: Scalar>(x: &Tensor<B1, C>, y: &Tensor<B2, C>) -> Result<C> {
    same_seq(&x.seq, &y.seq)?;
    Ok(x.terms.iter().fold(C::zero(), |acc, (k, c)| acc + c.clone() * y.terms.coeff(k)))
}

fn require_uncolored<B: Basis, C: Scalar>(x: &Element<B, C>) -> Result<()> {
    if x.seq != ColorSequence::ones() {
        return Err(Error::UnsupportedBasis(format!(
            "{} ↔ M/S changes of basis are defined for a = ones, got {}",
            B::NAME,
            x.seq
        )));
    }
    Ok(())
}

/// `Φ_π = Σ_{π ≤ π'} M_{π'}`.
pub fn phi_to_monomial<C: Scalar>(x: &Element<Phi, C>) -> Result<Element<Mono, C>> {
    require_uncolored(x)?;
    let terms = x.terms.flat_map(|k| {
        k.underlying().coarsenings().iter().map(|p| (ColoredSetPartition::from_uncolored(p), C::one())).collect()
    });
    Ok(Element::from_terms_unchecked(x.seq.clone(), terms))
}

/// Inverse of [`phi_to_monomial`] by triangular solve: peel off the finest
/// remaining key.
pub fn monomial_to_phi<C: Scalar>(x: &Element<Mono, C>) -> Result<Element<Phi, C>> {
    require_uncolored(x)?;
    let mut rest = x.terms.clone();
    let mut out = LinComb::zero();
    // a key with the most blocks has no strictly finer key left in `rest`
    while let Some(k) = rest.keys().max_by_key(|k| (k.len(), (*k).clone())).cloned() {
        let c = rest.coeff(&k);
        for p in k.underlying().coarsenings() {
            rest.add_term(ColoredSetPartition::from_uncolored(&p), -c.clone());
        }
        out.add_term(k, c);
    }
    Ok(Element::from_terms_unchecked(x.seq.clone(), out))
}

/// `S_π = Σ_{π' ≤ π} Ψ_{π'}`.
pub fn complete_to_psi<C: Scalar>(x: &Element<Complete, C>) -> Result<Element<Psi, C>> {
    require_uncolored(x)?;
    let terms = x.terms.flat_map(|k| {
        k.underlying().refinements().iter().map(|p| (ColoredSetPartition::from_uncolored(p), C::one())).collect()
    });
    Ok(Element::from_terms_unchecked(x.seq.clone(), terms))
}

/// Inverse of [`complete_to_psi`]: peel off the coarsest remaining key.
pub fn psi_to_complete<C: Scalar>(x: &Element<Psi, C>) -> Result<Element<Complete, C>> {
    require_uncolored(x)?;
    let mut rest = x.terms.clone();
    let mut out = LinComb::zero();
    while let Some(k) = rest.keys().min_by_key(|k| (k.len(), (*k).clone())).cloned() {
        let c = rest.coeff(&k);
        for p in k.underlying().refinements() {
            rest.add_term(ColoredSetPartition::from_uncolored(&p), -c.clone());
        }
        out.add_term(k, c);
    }
    Ok(Element::from_terms_unchecked(x.seq.clone(), out))
}

/// Every basis key of degree `n`, as elements.
pub fn basis_of_degree<B: Basis>(seq: &ColorSequence, n: usize) -> Vec<Element<B>> {
    crate::combinatorics::enumerate_colored(seq, n)
        .into_iter()
        .map(|k| Element::from_terms_unchecked(seq.clone(), LinComb::monomial(k)))
        .collect()
}
