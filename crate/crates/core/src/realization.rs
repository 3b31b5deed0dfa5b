//! Realization of the partition algebras as noncommutative polynomials over
//! disjoint alphabets `𝔸_1, 𝔸_2, ...`, each truncated to `L` letters.

use std::fmt;

use serde_json::{json, Value};

use crate::combinatorics::{ColoredSetPartition, CyclePermutation, SetPartition};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{Rational, Scalar};
use crate::util::{combinations, complement};

/// Letter `index` of alphabet `𝔸_alphabet`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub alphabet: usize,
    pub index: usize,
}

impl Letter {
    pub fn new(alphabet: usize, index: usize) -> Self {
        Letter { alphabet, index }
    }
}

pub type Word = Vec<Letter>;
pub type WordPoly<C = Rational> = LinComb<Word, C>;

/// Uncolored word `b_{i_1} ... b_{i_n}` over alphabet 1.
pub fn word(indices: &[usize]) -> Word {
    indices.iter().map(|&i| Letter::new(1, i)).collect()
}

pub struct DisplayWord<'a>(pub &'a Word);

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for l in self.0 {
            write!(f, "[{},{}]", l.alphabet, l.index)?;
        }
        Ok(())
    }
}

/// Terms sorted lexicographically, letters as `[alphabet, index]`.
pub fn word_poly_json<C: Scalar>(p: &WordPoly<C>) -> Value {
    let terms: Vec<Value> = p
        .iter()
        .map(|(w, c)| {
            let (num, den) = c.num_den();
            let letters: Vec<Value> = w.iter().map(|l| json!([l.alphabet, l.index])).collect();
            json!({"word": letters, "num": num, "den": den})
        })
        .collect();
    json!({ "terms": terms })
}

/// Calls `f` with every map from `k` items to letter indices `1..=l`.
fn for_each_assignment(k: usize, l: usize, injective: bool, mut f: impl FnMut(&[usize])) {
    fn go(i: usize, k: usize, l: usize, inj: bool, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i == k {
            f(cur);
            return;
        }
        for x in 1..=l {
            if inj && cur.contains(&x) {
                continue;
            }
            cur.push(x);
            go(i + 1, k, l, inj, cur, f);
            cur.pop();
        }
    }
    go(0, k, l, injective, &mut Vec::with_capacity(k), &mut f);
}

/// `Φ_Π(𝔸_1, 𝔸_2, ...)`: letters constant on each block, drawn from the
/// alphabet named by the block's color; distinct blocks choose independently.
pub fn expand_phi<C: Scalar>(p: &ColoredSetPartition, l: usize) -> WordPoly<C> {
    let mut out = LinComb::zero();
    for_each_assignment(p.len(), l, false, |choice| {
        let mut w = vec![Letter::new(0, 0); p.size()];
        for (part, &x) in p.parts().iter().zip(choice) {
            for &i in &part.block {
                w[i - 1] = Letter::new(part.color, x);
            }
        }
        out.add_term(w, C::one());
    });
    out
}

/// `Ψ_Π(𝔸) = Π! Φ_Π(𝔸)`, the shuffle realization of the dual basis.
pub fn expand_psi<C: Scalar>(p: &ColoredSetPartition, l: usize) -> WordPoly<C> {
    expand_phi::<C>(p, l).scale(&C::from_bigint(p.factorial_weight()))
}

/// `M_π(𝔸)`: letters equal exactly within blocks (alphabet 1).
pub fn expand_monomial<C: Scalar>(p: &SetPartition, l: usize) -> WordPoly<C> {
    let mut out = LinComb::zero();
    for_each_assignment(p.len(), l, true, |choice| {
        let mut w = vec![Letter::new(1, 0); p.size()];
        for (b, &x) in p.blocks().iter().zip(choice) {
            for &i in b {
                w[i - 1] = Letter::new(1, x);
            }
        }
        out.add_term(w, C::one());
    });
    out
}

/// Linear extension of [`expand_phi`] to a combination of keys.
pub fn realize_phi<C: Scalar>(x: &LinComb<ColoredSetPartition, C>, l: usize) -> WordPoly<C> {
    x.flat_map(|k| expand_phi(k, l))
}

/// Linear extension of [`expand_psi`].
pub fn realize_psi<C: Scalar>(x: &LinComb<ColoredSetPartition, C>, l: usize) -> WordPoly<C> {
    x.flat_map(|k| expand_psi(k, l))
}

pub fn concat<C: Scalar>(x: &WordPoly<C>, y: &WordPoly<C>) -> WordPoly<C> {
    x.bilinear(y, |u, v| {
        let mut w = u.clone();
        w.extend_from_slice(v);
        LinComb::monomial(w)
    })
}

/// All interleavings of `u` and `v`, with multiplicity.
pub fn shuffle_words<C: Scalar>(u: &Word, v: &Word) -> WordPoly<C> {
    let n = u.len() + v.len();
    let mut out = LinComb::zero();
    for s in combinations(n, u.len()) {
        let c = complement(n, &s);
        out.add_term(scatter(&[s, c], &[u.clone(), v.clone()]).unwrap(), C::one());
    }
    out
}

pub fn shuffle<C: Scalar>(x: &WordPoly<C>, y: &WordPoly<C>) -> WordPoly<C> {
    x.bilinear(y, shuffle_words)
}

/// `⧢_{[π_1,...,π_k]}(w_1, ..., w_k)`: word `p` is written at the positions of
/// `π_p` in increasing order. `None` when some `|w_p| ≠ #π_p`.
pub fn scatter(composition: &[Vec<usize>], words: &[Word]) -> Option<Word> {
    if composition.len() != words.len() {
        return None;
    }
    let n: usize = composition.iter().map(Vec::len).sum();
    let mut out = vec![Letter::new(0, 0); n];
    for (block, w) in composition.iter().zip(words) {
        if block.len() != w.len() {
            return None;
        }
        let mut sorted = block.clone();
        sorted.sort_unstable();
        for (&pos, &letter) in sorted.iter().zip(w) {
            out[pos - 1] = letter;
        }
    }
    Some(out)
}

/// Multilinear extension of [`scatter`] (mismatches contribute zero).
pub fn shuffle_composite<C: Scalar>(composition: &[Vec<usize>], polys: &[WordPoly<C>]) -> WordPoly<C> {
    let mut acc: Vec<(Vec<Word>, C)> = vec![(Vec::new(), C::one())];
    for p in polys {
        let mut next = Vec::new();
        for (ws, c) in &acc {
            for (w, d) in p.iter() {
                let mut ws = ws.clone();
                ws.push(w.clone());
                next.push((ws, c.clone() * d.clone()));
            }
        }
        acc = next;
    }
    let mut out = LinComb::zero();
    for (ws, c) in acc {
        if let Some(w) = scatter(composition, &ws) {
            out.add_term(w, c);
        }
    }
    out
}

/// Checks that `p` is homogeneous of degree `n` (zero passes).
pub fn require_degree<C: Scalar>(p: &WordPoly<C>, n: usize) -> Result<()> {
    match p.keys().find(|w| w.len() != n) {
        Some(w) => Err(Error::DegreeMismatch(format!("word of length {} in a polynomial of degree {n}", w.len()))),
        None => Ok(()),
    }
}

/// `S_π[𝔸^{(P)}]`: `P_{#π_i}` scattered onto each block `π_i`.
/// `family[m - 1]` is `P_m`.
pub fn specialize_complete<C: Scalar>(p: &SetPartition, family: &[WordPoly<C>]) -> Result<WordPoly<C>> {
    let polys = p
        .blocks()
        .iter()
        .map(|b| {
            let m = b.len();
            let pm = family
                .get(m - 1)
                .ok_or_else(|| Error::DegreeMismatch(format!("no polynomial of degree {m} supplied")))?;
            require_degree(pm, m)?;
            Ok(pm.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(shuffle_composite(p.blocks(), &polys))
}

/// `w[c]` for a single cycle: `b_{c̃_1} ... b_{c̃_ℓ}` where `c̃` is the
/// standardized cycle read from its minimum.
fn cycle_word(cycle: &[usize]) -> Word {
    let mut support = cycle.to_vec();
    support.sort_unstable();
    let indices: Vec<usize> = cycle.iter().map(|x| support.binary_search(x).unwrap() + 1).collect();
    word(&indices)
}

/// `w[σ] = ⧢_{[supports]}(w[c^(1)], ..., w[c^(k)])`.
pub fn cycle_specialization(s: &CyclePermutation) -> Word {
    let supports: Vec<Vec<usize>> = s
        .cycles()
        .iter()
        .map(|c| {
            let mut b = c.clone();
            b.sort_unstable();
            b
        })
        .collect();
    let words: Vec<Word> = s.cycles().iter().map(|c| cycle_word(c)).collect();
    scatter(&supports, &words).expect("cycle words match their supports")
}

/// `Σ w[σ]` over permutations of `{1..n}` with exactly `k` cycles.
pub fn cycle_bell<C: Scalar>(n: usize, k: usize) -> WordPoly<C> {
    crate::combinatorics::all_permutations(n)
        .into_iter()
        .map(|p| CyclePermutation::from_one_line(&p).unwrap())
        .filter(|s| s.cycles().len() == k)
        .map(|s| (cycle_specialization(&s), C::one()))
        .collect()
}

/// Coproduct on the realization: letters with index `<= cut` form the first
/// alphabet, the others (renumbered from 1) the second, and every word maps
/// to the tensor of its two restrictions.
pub fn split_alphabets<C: Scalar>(p: &WordPoly<C>, cut: usize) -> LinComb<(Word, Word), C> {
    p.iter()
        .map(|(w, c)| {
            let left: Word = w.iter().copied().filter(|l| l.index <= cut).collect();
            let right: Word =
                w.iter().filter(|l| l.index > cut).map(|l| Letter::new(l.alphabet, l.index - cut)).collect();
            ((left, right), c.clone())
        })
        .collect()
}
