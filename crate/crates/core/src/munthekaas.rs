//! Noncommutative Bell polynomials on the letters `d_1, d_2, ...`, the map
//! `Ξ` from `WSym`, the half-shuffle (Zinbiel) products on set partitions,
//! triangular polynomials `P(A_n; t)` and the Hessenberg chain expansion.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::bell::word_partial_bell;
use crate::combinatorics::{enumerate_ordinary, ColoredSetPartition, SetPartition};
use crate::error::{Error, Result};
use crate::hopf::{Element, Phi};
use crate::lincomb::{LinComb, TPoly};
use crate::report::{expect_eq, expect_same, Check, Report};
use crate::scalar::{binomial, binomial_in, factorial_in, Rational, Scalar};
use crate::util::{combinations, compositions};

/// `d_{i_1} ... d_{i_k}`, stored as the indices; empty is 1.
pub type NCWord = Vec<usize>;
pub type NCPoly<C = Rational> = LinComb<NCWord, C>;

/// Leibniz extension of `d_i ↦ d_{i+1}`.
pub fn derive<C: Scalar>(x: &NCPoly<C>) -> NCPoly<C> {
    x.flat_map(|w| {
        (0..w.len())
            .map(|i| {
                let mut v = w.clone();
                v[i] += 1;
                (v, C::one())
            })
            .collect()
    })
}

fn times_d1<C: Scalar>(x: &NCPoly<C>) -> NCPoly<C> {
    x.map_keys(|w| {
        let mut v = w.clone();
        v.push(1);
        v
    })
}

/// `MB_n(t) = 1 (t d_1 + ∂)^n`, operators acting on the right.
pub fn mb<C: Scalar>(n: usize) -> TPoly<NCPoly<C>> {
    let mut cur: Vec<NCPoly<C>> = vec![LinComb::monomial(Vec::new())];
    for _ in 0..n {
        let mut next = vec![LinComb::zero(); cur.len() + 1];
        for (j, x) in cur.iter().enumerate() {
            next[j + 1] = next[j + 1].clone() + times_d1(x);
            next[j] = next[j].clone() + derive(x);
        }
        cur = next;
    }
    TPoly::from_coeffs(cur)
}

/// `MB_{n,k} = [t^k] MB_n(t)`.
pub fn mb_partial<C: Scalar>(n: usize, k: usize) -> NCPoly<C> {
    mb(n).coeff(k)
}

/// `MB_n(1)`.
pub fn mb_total<C: Scalar>(n: usize) -> NCPoly<C> {
    mb(n).at_one()
}

/// Block sizes in order of increasing minima.
pub fn chi(p: &SetPartition) -> NCWord {
    p.blocks().iter().map(Vec::len).collect()
}

/// `Ξ(Φ_π) = d_{χ(π)_1} ... d_{χ(π)_k}`.
pub fn xi<C: Scalar>(x: &Element<Phi, C>) -> Result<NCPoly<C>> {
    if *x.seq() != crate::combinatorics::ColorSequence::ones() {
        return Err(Error::UnsupportedBasis("Ξ is defined on uncolored Φ".into()));
    }
    Ok(x.terms().map_keys(|k| chi(&k.underlying())))
}

/// Number of set partitions of `{1..n}` whose blocks, ordered by minima,
/// have sizes `j_1, ..., j_k`: the block of the smallest unused point takes
/// `j_ℓ - 1` further points from the rest.
pub fn block_composition_count(j: &[usize]) -> Result<BigInt> {
    if j.contains(&0) {
        return Err(Error::InvalidComposition(format!("zero part in {j:?}")));
    }
    let mut rest: usize = j.iter().sum();
    let mut out = BigInt::one();
    for &p in j {
        out *= binomial(rest as i64 - 1, p as i64 - 1);
        rest -= p;
    }
    Ok(out)
}

/// Same count by enumerating partitions.
pub fn block_composition_enumerated(j: &[usize]) -> usize {
    let n = j.iter().sum();
    enumerate_ordinary(n).iter().filter(|p| chi(p) == j).count()
}

/// Coefficient of `d_{j_1} ... d_{j_k}` in `MB_{n,k}`.
pub fn mb_coefficient(j: &[usize]) -> Result<BigInt> {
    if j.contains(&0) {
        return Err(Error::InvalidComposition(format!("zero part in {j:?}")));
    }
    let n = j.iter().sum();
    let c: NCPoly<Rational> = mb_partial(n, j.len());
    Ok(c.coeff(&j.to_vec()).to_integer())
}

// ---------------------------------------------------------------------------
// Half-shuffles

/// Finite combination of set partitions, the `Φ` keys of `ΠQSym`.
pub type SetPoly<C = Rational> = LinComb<SetPartition, C>;

fn relabel(p: &SetPartition, into: &[usize]) -> Vec<Vec<usize>> {
    p.blocks().iter().map(|b| b.iter().map(|&x| into[x - 1]).collect()).collect()
}

/// `Σ π[I] ∪ π'[J]` over `I ⊔ J = {1..n+m}`, `|I| = n`, restricted by
/// whether 1 lies in `I`.
fn half_shuffle_keys<C: Scalar>(p: &SetPartition, q: &SetPartition, one_left: bool) -> SetPoly<C> {
    let (n, m) = (p.size(), q.size());
    let mut out = LinComb::zero();
    for i in combinations(n + m, n) {
        if (i.first() == Some(&1)) != one_left {
            continue;
        }
        let j = crate::util::complement(n + m, &i);
        let mut blocks = relabel(p, &i);
        blocks.extend(relabel(q, &j));
        out.add_term(SetPartition::new(blocks).expect("disjoint supports"), C::one());
    }
    out
}

/// `x ≺ y`: 1 lands in the support of the left factor. The unit `∅` acts
/// as `∅ ≺ y = y` and `x ≺ ∅ = x`.
pub fn zinbiel_left<C: Scalar>(x: &SetPoly<C>, y: &SetPoly<C>) -> SetPoly<C> {
    x.bilinear(y, |p, q| {
        if p.size() == 0 || q.size() == 0 {
            let k = if p.size() == 0 { q } else { p };
            return LinComb::monomial(k.clone());
        }
        half_shuffle_keys(p, q, true)
    })
}

/// `x ≻ y = y ≺ x` on nonempty keys: 1 lands in the right factor.
pub fn zinbiel_right<C: Scalar>(x: &SetPoly<C>, y: &SetPoly<C>) -> SetPoly<C> {
    x.bilinear(y, |p, q| {
        if p.size() == 0 || q.size() == 0 {
            let k = if p.size() == 0 { q } else { p };
            return LinComb::monomial(k.clone());
        }
        half_shuffle_keys(p, q, false)
    })
}

/// `x ≺ y + x ≻ y`: the shuffle-type product.
pub fn shuffle_product<C: Scalar>(x: &SetPoly<C>, y: &SetPoly<C>) -> SetPoly<C> {
    x.bilinear(y, |p, q| half_shuffle_keys(p, q, true) + half_shuffle_keys(p, q, false))
}

/// Which half-shuffle drives the recursion of [`p_triangular`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfShuffle {
    Left,
    Right,
}

/// Upper triangular array; `entry(i, j)` for `1 <= i <= j <= n`.
pub struct Triangular<C = Rational> {
    n: usize,
    entries: Vec<Vec<SetPoly<C>>>,
}

impl<C: Scalar> Triangular<C> {
    /// `rows[i-1][j-i]` is `a_{ij}`.
    pub fn new(rows: Vec<Vec<SetPoly<C>>>) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n - i {
                return Err(Error::DimensionMismatch(format!("row {} has {} entries, expected {}", i + 1, r.len(), n - i)));
            }
        }
        Ok(Triangular { n, entries: rows })
    }

    /// `M_n = (Φ_{{1..j-i+1}})`.
    pub fn m(n: usize) -> Self {
        let rows =
            (1..=n).map(|i| (i..=n).map(|j| LinComb::monomial(SetPartition::one_block(j - i + 1))).collect()).collect();
        Triangular { n, entries: rows }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &SetPoly<C> {
        &self.entries[i - 1][j - i]
    }
}

/// `P(A_n; t) = t Σ_{k=1}^{n} P(A_{k-1}; t) ∘ a_{k,n}`, `P(A_0) = 1`, with
/// `∘` the chosen half-shuffle. With [`HalfShuffle::Left`] this is the
/// recursion as stated, nesting to the left: `((a ≺ b) ≺ c) ≺ d`.
pub fn p_triangular<C: Scalar>(a: &Triangular<C>, op: HalfShuffle) -> TPoly<SetPoly<C>> {
    let prod = |x: &SetPoly<C>, y: &SetPoly<C>| match op {
        HalfShuffle::Left => zinbiel_left(x, y),
        HalfShuffle::Right => zinbiel_right(x, y),
    };
    // ps[m] = coefficients in t of P(A_m)
    let mut ps: Vec<Vec<SetPoly<C>>> = vec![vec![LinComb::monomial(SetPartition::empty())]];
    for n in 1..=a.size() {
        let mut cur: Vec<SetPoly<C>> = vec![LinComb::zero(); n + 1];
        for k in 1..=n {
            for (d, c) in ps[k - 1].iter().enumerate() {
                cur[d + 1] = cur[d + 1].clone() + prod(c, a.entry(k, n));
            }
        }
        ps.push(cur);
    }
    TPoly::from_coeffs(ps.pop().expect("at least P(A_0)"))
}

/// `ℬ_{n,k}(Φ_{{1}}, Φ_{{1,2}}, ...) = Σ_{#π = k} Φ_π`.
pub fn psi_bell_keys<C: Scalar>(n: usize, k: usize) -> SetPoly<C> {
    enumerate_ordinary(n).into_iter().filter(|p| p.len() == k).map(|p| (p, C::one())).collect()
}

/// `a_{1n} + Σ_{j_1 < ... < j_k < n} a_{1 j_1} a_{j_1+1, j_2} ... a_{j_k+1, n}`
/// with `a_{ij} = binom(n-i, j-i) d_{j-i+1}`.
pub fn hessenberg_expansion<C: Scalar>(n: usize) -> NCPoly<C> {
    let entry = |i: usize, j: usize| -> NCPoly<C> {
        LinComb::term(vec![j - i + 1], binomial_in::<C>((n - i) as i64, (j - i) as i64))
    };
    let concat = |x: &NCPoly<C>, y: &NCPoly<C>| {
        x.bilinear(y, |u, v| {
            let mut w = u.clone();
            w.extend_from_slice(v);
            LinComb::monomial(w)
        })
    };
    let mut out = LinComb::zero();
    if n == 0 {
        return LinComb::monomial(Vec::new());
    }
    // cut points j_1 < ... < j_k < n: every subset of {1..n-1}
    for k in 0..n {
        for cuts in combinations(n - 1, k) {
            let mut start = 1;
            let mut term: NCPoly<C> = LinComb::monomial(Vec::new());
            for &j in cuts.iter().chain(std::iter::once(&n)) {
                term = concat(&term, &entry(start, j));
                start = j + 1;
            }
            out = out + term;
        }
    }
    out
}

/// `{"[j_1,...,j_k]": coefficient}`, integer coefficients as numbers and
/// fractions as `"num/den"`.
pub fn nc_poly_json<C: Scalar>(x: &NCPoly<C>) -> Value {
    let mut m = Map::new();
    // keys in descending text order: [2,1] before [1,2]
    let mut entries: Vec<(String, Value)> = x
        .iter()
        .map(|(w, c)| {
            let key = format!("[{}]", w.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","));
            let (n, d) = c.num_den();
            let v = if d == "1" { n.parse::<i64>().map(|i| json!(i)).unwrap_or_else(|_| json!(n)) } else { json!(format!("{n}/{d}")) };
            (key, v)
        })
        .collect();
    entries.sort_by(|a, b| b.0.cmp(&a.0));
    for (k, v) in entries {
        m.insert(k, v);
    }
    Value::Object(m)
}

pub fn nc_display<C: Scalar>(x: &NCPoly<C>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|(w, c)| {
            let (n, d) = c.num_den();
            let coeff = if d == "1" { n } else { format!("{n}/{d}") };
            let word: Vec<String> = w.iter().map(|i| format!("d{i}")).collect();
            if word.is_empty() {
                coeff
            } else {
                format!("{coeff}*{}", word.join("*"))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

// ---------------------------------------------------------------------------
// Verification

fn word_bell_element(n: usize, k: usize) -> Element<Phi, Rational> {
    word_partial_bell(n, k)
}

pub fn suite(max_n: usize) -> Report {
    let mut r = Report::new("noncommutative Bell polynomials");
    r.push(Check::run(
        "Ξ(𝔅_{n,k}) = MB_{n,k}",
        format!("n <= {max_n}"),
        (0..=max_n).flat_map(|n| (0..=n).map(move |k| (n, k))).map(|(n, k)| {
            let lhs = xi(&word_bell_element(n, k)).map_err(|e| e.to_string())?;
            expect_eq(format!("n = {n}, k = {k}"), &lhs, &mb_partial::<Rational>(n, k))
        }),
    ));
    let pairs = (0..=max_n.min(5)).flat_map(|s| {
        (0..=s).flat_map(move |n1| {
            let n2 = s - n1;
            enumerate_ordinary(n1).into_iter().flat_map(move |p| enumerate_ordinary(n2).into_iter().map(move |q| (p.clone(), q)))
        })
    });
    r.push(Check::run(
        "Ξ(Φ_π Φ_π') = Ξ(Φ_π) Ξ(Φ_π')",
        format!("|π| + |π'| <= {}", max_n.min(5)),
        pairs.map(|(p, q)| {
            let x = Element::<Phi>::word(&p);
            let y = Element::<Phi>::word(&q);
            let lhs = xi(&x.mul(&y).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let mut w = chi(&p);
            w.extend(chi(&q));
            expect_eq(format!("π = {p}, π' = {q}"), &lhs, &LinComb::monomial(w))
        }),
    ));
    r.push(Check::run(
        "coefficient of d_j in MB_{n,k} counts partitions with block sizes j in order of minima",
        format!("n <= {max_n}"),
        (1..=max_n).flat_map(compositions).map(|j| {
            let by_mb = mb_coefficient(&j).map_err(|e| e.to_string())?;
            let by_product = block_composition_count(&j).map_err(|e| e.to_string())?;
            expect_eq(format!("j = {j:?}"), &by_mb, &BigInt::from(block_composition_enumerated(&j)))?;
            expect_eq(format!("j = {j:?} (product formula)"), &by_product, &by_mb)
        }),
    ));
    r.push(zinbiel_axioms(max_n.min(4)));
    r.push(b2p(max_n, HalfShuffle::Left));
    r.push(b2p(max_n, HalfShuffle::Right));
    r.push(Check::run(
        "Hessenberg chain expansion with entries binom(n-i,j-i) d_{j-i+1} = MB_n(1)",
        format!("1 <= n <= {max_n}"),
        (1..=max_n).map(|n| expect_eq(format!("n = {n}"), &hessenberg_expansion::<Rational>(n), &mb_total(n))),
    ));
    r
}

fn nonempty_keys(max: usize) -> Vec<SetPartition> {
    (1..=max).flat_map(enumerate_ordinary).collect()
}

/// The four Zinbiel relations and `≺ + ≻ = ` product, on basis triples of
/// positive sizes with total at most `max_total`.
pub fn zinbiel_axioms(max_total: usize) -> Check {
    let keys = nonempty_keys(max_total);
    let mut triples = Vec::new();
    for u in &keys {
        for v in &keys {
            if u.size() + v.size() >= max_total {
                continue;
            }
            for w in &keys {
                if u.size() + v.size() + w.size() <= max_total {
                    triples.push((u.clone(), v.clone(), w.clone()));
                }
            }
        }
    }
    let m = |p: &SetPartition| SetPoly::<Rational>::monomial(p.clone());
    let cases = triples.into_iter().map(move |(u, v, w)| {
        let (u, v, w) = (m(&u), m(&v), m(&w));
        let label = |i: usize| format!("relation {i} on ({u:?}, {v:?}, {w:?})");
        let l = zinbiel_left::<Rational>;
        let r = zinbiel_right::<Rational>;
        expect_same(label(1), &l(&l(&u, &v), &w), &(l(&u, &l(&v, &w)) + l(&u, &r(&v, &w))))?;
        expect_same(label(2), &l(&r(&u, &v), &w), &r(&u, &l(&v, &w)))?;
        expect_same(label(3), &r(&u, &r(&v, &w)), &(r(&l(&u, &v), &w) + r(&r(&u, &v), &w)))?;
        expect_same(label(4), &l(&u, &v), &r(&v, &u))?;
        expect_same(label(5), &(l(&u, &v) + r(&u, &v)), &shuffle_product(&u, &v))
    });
    Check::run("Zinbiel relations of the half-shuffles", format!("basis triples, total size <= {max_total}"), cases)
}

/// `[t^k] P(M_n; t) = ℬ_{n,k}(Φ_{{1}}, Φ_{{1,2}}, ...)`.
pub fn b2p(max_n: usize, op: HalfShuffle) -> Check {
    let cases = (0..=max_n).map(move |n| {
        let p = p_triangular(&Triangular::<Rational>::m(n), op);
        for k in 0..=n {
            expect_same(format!("n = {n}, k = {k}"), &p.coeff(k), &psi_bell_keys(n, k))?;
        }
        Ok(())
    });
    match op {
        HalfShuffle::Left => Check::run("[t^k] P(M_n; t) = ℬ_{n,k}, recursion with ≺ (1 in the left factor)", format!("n <= {max_n}"), cases)
            .with_note("left nesting of ≺ weights every Φ_π with #π = k by (k-1)!"),
        HalfShuffle::Right => {
            Check::run("[t^k] P(M_n; t) = ℬ_{n,k}, recursion with ≻ (1 in the right factor)", format!("n <= {max_n}"), cases)
        }
    }
}

/// `(k-1)! ℬ_{n,k}` for `k >= 1`: what the left recursion produces.
pub fn left_fold_factor(k: usize) -> Rational {
    if k == 0 {
        Rational::one()
    } else {
        factorial_in(k - 1)
    }
}

/// Converts `Φ`-keyed elements of `WSym` to [`SetPoly`].
pub fn set_poly_of<C: Scalar>(x: &Element<Phi, C>) -> SetPoly<C> {
    x.terms().map_keys(ColoredSetPartition::underlying)
}
