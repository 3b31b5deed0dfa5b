//! Bell polynomials: classical (symbolic and evaluated), word Bell
//! polynomials in `WSym` via the operator `∂`, their `ΠQSym` and colored
//! normalizations, shuffle-power Bell polynomials of word polynomials, and
//! the morphisms `α`, `β_a`, `γ_a` from `Sym` to the scalars.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{enumerate_colored, enumerate_ordinary, ColorSequence, ColoredSetPartition, SetPartition};
use crate::error::{Error, Result};
use crate::hopf::{monomial_to_phi, phi_to_monomial, Element, Mono, Phi, Psi};
use crate::lincomb::{LinComb, TPoly};
use crate::poly::{Poly, Series};
use crate::realization::{require_degree, shuffle, Letter, Word, WordPoly};
use crate::report::{expect_eq, expect_same, Check, Report};
use crate::scalar::{binomial_in, factorial, factorial_in, pow, Field, Rational, Scalar};

/// `a_1, ..., a_n` as rationals.
pub fn sequence_values(a: &ColorSequence, n: usize) -> Vec<Rational> {
    a.values(n).into_iter().map(Rational::from_integer).collect()
}

fn arg<C: Scalar>(a: &[C], i: usize) -> C {
    if i == 0 {
        return C::zero();
    }
    a.get(i - 1).cloned().unwrap_or_else(C::zero)
}

// ---------------------------------------------------------------------------
// Classical, symbolic

/// `Σ_{i>=1} x_i t^i / i!` truncated after `t^n`.
fn exponential_argument<C: Field>(n: usize) -> Series<Poly<C>> {
    Series::from_fn(n, |i| {
        if i == 0 {
            Poly::zero()
        } else {
            Poly::var(i).scale(&(C::one() / factorial_in::<C>(i)))
        }
    })
}

/// `B_{n,k}(a_1, a_2, ...) = n!/k! [t^n] (Σ a_i t^i/i!)^k`, with `a_i` the
/// variable `x_i`. Zero for `k > n`.
pub fn partial_bell<C: Field>(n: usize, k: usize) -> Poly<C> {
    if k > n {
        return Poly::zero();
    }
    let f = exponential_argument::<C>(n).pow(k);
    f.coeff(n).scale(&(factorial_in::<C>(n) / factorial_in::<C>(k)))
}

/// `A_n = Σ_k B_{n,k}`, `A_0 = 1`.
pub fn complete_bell<C: Field>(n: usize) -> Poly<C> {
    let f = exponential_argument::<C>(n);
    let mut out = Poly::zero();
    let mut pw: Series<Poly<C>> = Series::one(n);
    for k in 0..=n {
        out = out + pw.coeff(n).scale(&(factorial_in::<C>(n) / factorial_in::<C>(k)));
        pw = pw.mul(&f);
    }
    out
}

/// `n! [x^k t^n] exp{x Σ a_i t^i/i!}`, with `x` the marker variable `x_0`.
pub fn partial_bell_double_gf<C: Field>(n: usize, k: usize) -> Poly<C>
where
    Poly<C>: crate::poly::Algebra<C>,
{
    let x = Poly::var(0);
    let g = exponential_argument::<C>(n).map(|c| c.clone() * x.clone()).exp::<C>();
    g.coeff(n).coeff_of_var(0, k as u32).scale(&factorial_in::<C>(n))
}

/// `n!/k! [t^n] (Σ a_i t^i/i!)^n`: the single-variable extraction with the
/// exponent `n` in place of `k`. Kept only to document that it differs from
/// [`partial_bell`].
pub fn partial_bell_exponent_n<C: Field>(n: usize, k: usize) -> Poly<C> {
    let f = exponential_argument::<C>(n).pow(n);
    f.coeff(n).scale(&(factorial_in::<C>(n) / factorial_in::<C>(k)))
}

// ---------------------------------------------------------------------------
// Classical, evaluated

/// `table[m][j] = B_{m,j}(a)` for `0 <= j <= m <= n`, by
/// `B_{m,j} = Σ_i binom(m-1, i-1) a_i B_{m-i,j-1}`. `a[i-1]` is `a_i`;
/// missing entries count as zero.
pub fn bell_table<C: Scalar>(a: &[C], n: usize) -> Vec<Vec<C>> {
    let mut t: Vec<Vec<C>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = vec![C::zero(); m + 1];
        if m == 0 {
            row[0] = C::one();
        }
        for (j, slot) in row.iter_mut().enumerate().skip(1) {
            let mut s = C::zero();
            for i in 1..=m + 1 - j {
                let prev = &t[m - i];
                if j - 1 < prev.len() {
                    let b = prev[j - 1].clone();
                    if !b.is_zero() {
                        s = s + binomial_in::<C>(m as i64 - 1, i as i64 - 1) * arg(a, i) * b;
                    }
                }
            }
            *slot = s;
        }
        t.push(row);
    }
    t
}

pub fn eval_partial_bell<C: Scalar>(a: &[C], n: usize, k: usize) -> C {
    if k > n {
        return C::zero();
    }
    bell_table(a, n)[n][k].clone()
}

/// `A_n(a)` by `A_{m+1} = Σ_i binom(m, i) a_{i+1} A_{m-i}`.
pub fn eval_complete_bell<C: Scalar>(a: &[C], n: usize) -> C {
    let mut aa = vec![C::one()];
    for m in 0..n {
        let mut s = C::zero();
        for i in 0..=m {
            s = s + binomial_in::<C>(m as i64, i as i64) * arg(a, i + 1) * aa[m - i].clone();
        }
        aa.push(s);
    }
    aa[n].clone()
}

/// `a_1^k B_{n,k}(1, a_2/a_1, ..., a_p/a_1, ...)` for `a_1 ≠ 0`.
pub fn leading_normalization<C: Field>(a: &[C], n: usize, k: usize) -> C {
    let a1 = arg(a, 1);
    let scaled: Vec<C> = (1..=n).map(|i| arg(a, i) / a1.clone()).collect();
    pow(&a1, k) * eval_partial_bell(&scaled, n, k)
}

/// For `a_1 = 0`: `n!/(n-k)! B_{n-k,k}(a_2/2, a_3/3, ...)` (zero when
/// `n < k`). The factor `t^k` pulled out of `(Σ_{i>=2} a_i t^i/i!)^k` shifts
/// every argument down by one index.
pub fn zero_leading_shift<C: Field>(a: &[C], n: usize, k: usize) -> C {
    if n < k {
        return C::zero();
    }
    let shifted: Vec<C> = (1..=n).map(|i| arg(a, i + 1) / C::from_i64(i as i64 + 1)).collect();
    factorial_in::<C>(n) / factorial_in::<C>(n - k) * eval_partial_bell(&shifted, n - k, k)
}

/// `n!/(n-k)! B_{n,k}(a_2, a_3, ...)`: the shift without the index and
/// argument corrections. Disagrees with direct evaluation already at
/// `n = 2, k = 1`.
pub fn zero_leading_shift_uncorrected<C: Field>(a: &[C], n: usize, k: usize) -> C {
    if n < k {
        return C::zero();
    }
    let shifted: Vec<C> = (1..=n).map(|i| arg(a, i + 1)).collect();
    factorial_in::<C>(n) / factorial_in::<C>(n - k) * eval_partial_bell(&shifted, n, k)
}

/// Evaluation through the reductions: normalize `a_1` away when it is
/// nonzero, shift when it is zero.
pub fn eval_partial_bell_reduced<C: Field>(a: &[C], n: usize, k: usize) -> C {
    if arg(a, 1).is_zero() {
        zero_leading_shift(a, n, k)
    } else {
        leading_normalization(a, n, k)
    }
}

// ---------------------------------------------------------------------------
// WSym: the operator ∂ and word Bell polynomials

fn phi1() -> ColoredSetPartition {
    ColoredSetPartition::from_uncolored(&SetPartition::singletons(1))
}

fn require_ones<B: crate::hopf::Basis, C: Scalar>(x: &Element<B, C>) -> Result<()> {
    if *x.seq() != ColorSequence::ones() {
        return Err(Error::UnsupportedBasis(format!("∂ acts on uncolored keys, got sequence {}", x.seq())));
    }
    Ok(())
}

/// Adds `n + 1` to each block in turn.
fn deriv_key<C: Scalar>(p: &ColoredSetPartition) -> LinComb<ColoredSetPartition, C> {
    let n = p.size();
    let mut out = LinComb::zero();
    for i in 0..p.len() {
        let parts = p
            .parts()
            .iter()
            .enumerate()
            .map(|(j, part)| {
                let mut b = part.block.clone();
                if i == j {
                    b.push(n + 1);
                }
                (b, part.color)
            })
            .collect();
        out.add_term(ColoredSetPartition::new(parts).expect("adding a point keeps a partition"), C::one());
    }
    out
}

fn mu_key<C: Scalar>(p: &ColoredSetPartition) -> LinComb<ColoredSetPartition, C> {
    LinComb::monomial(p.shifted_union(&phi1()))
}

/// `x∂`; `1∂ = 0`.
pub fn deriv_op<C: Scalar>(x: &Element<Phi, C>) -> Result<Element<Phi, C>> {
    require_ones(x)?;
    Ok(Element::from_terms_unchecked(x.seq().clone(), x.terms().flat_map(deriv_key)))
}

/// `xμ = x Φ_{{1}}`.
pub fn mu<C: Scalar>(x: &Element<Phi, C>) -> Element<Phi, C> {
    Element::from_terms_unchecked(x.seq().clone(), x.terms().flat_map(mu_key))
}

/// `x(φ⁻¹ μ φ - μ)` where `M_π φ = Φ_π`: relabel `Φ_π` as `M_π`, multiply by
/// `Φ_{{1}}` inside `WSym`, read the result back in the `M` basis and
/// relabel to `Φ`.
pub fn deriv_via_monomials<C: Scalar>(x: &Element<Phi, C>) -> Result<Element<Phi, C>> {
    require_ones(x)?;
    let as_m: Element<Mono, C> = Element::from_terms_unchecked(x.seq().clone(), x.terms().clone());
    let prod = mu(&monomial_to_phi(&as_m)?);
    let back = phi_to_monomial(&prod)?;
    let relabeled: Element<Phi, C> = Element::from_terms_unchecked(x.seq().clone(), back.terms().clone());
    relabeled.sub(&mu(x))
}

/// `1 (tΦ_{{1}} + ∂)^n` as a polynomial in `t`.
pub fn word_bell_tpoly<C: Scalar>(n: usize) -> TPoly<LinComb<ColoredSetPartition, C>> {
    let mut cur: Vec<LinComb<ColoredSetPartition, C>> = vec![LinComb::monomial(ColoredSetPartition::empty())];
    for _ in 0..n {
        let mut next = vec![LinComb::zero(); cur.len() + 1];
        for (j, x) in cur.iter().enumerate() {
            next[j + 1] = next[j + 1].clone() + x.flat_map(mu_key);
            next[j] = next[j].clone() + x.flat_map(deriv_key);
        }
        cur = next;
    }
    TPoly::from_coeffs(cur)
}

/// `𝔅_{n,k} = [t^k] 1 (tΦ_{{1}} + ∂)^n`.
pub fn word_partial_bell<C: Scalar>(n: usize, k: usize) -> Element<Phi, C> {
    Element::from_terms_unchecked(ColorSequence::ones(), word_bell_tpoly(n).coeff(k))
}

/// `𝔄_n = 1 (Φ_{{1}} + ∂)^n`.
pub fn word_complete_bell<C: Scalar>(n: usize) -> Element<Phi, C> {
    let mut x = Element::one(ColorSequence::ones());
    for _ in 0..n {
        let d = deriv_op(&x).expect("uncolored");
        x = mu(&x).add(&d).expect("same sequence");
    }
    x
}

// ---------------------------------------------------------------------------
// Generating-function powers

/// `[t^n] (Σ_{i>=1} gens[i-1] t^i)^k` in a graded algebra given by closures.
fn power_coeff<T: Clone>(
    gens: &[T],
    n: usize,
    k: usize,
    zero: &T,
    one: &T,
    add: impl Fn(&T, &T) -> T,
    mul: impl Fn(&T, &T) -> T,
) -> T {
    if k > n {
        return zero.clone();
    }
    let mut cur: Vec<Option<T>> = vec![None; n + 1];
    cur[0] = Some(one.clone());
    for step in 1..=k {
        let mut next: Vec<Option<T>> = vec![None; n + 1];
        // each remaining factor adds at least one to the degree
        for (m, slot) in next.iter_mut().enumerate().take(n + 1 + step - k) {
            for i in 1..=m.min(gens.len()) {
                if let Some(prev) = &cur[m - i] {
                    let term = mul(&gens[i - 1], prev);
                    *slot = Some(match slot.take() {
                        Some(s) => add(&s, &term),
                        None => term,
                    });
                }
            }
        }
        cur = next;
    }
    cur[n].clone().unwrap_or_else(|| zero.clone())
}

/// `Σ_{i <= a_m} Ψ_{{[{1..m}, i]}}`.
pub fn atomic_generator<C: Scalar>(a: &ColorSequence, m: usize) -> Element<Psi, C> {
    let block: Vec<usize> = (1..=m).collect();
    let terms = (1..=a.colors(m))
        .map(|i| (ColoredSetPartition::new(vec![(block.clone(), i)]).expect("one block"), C::one()))
        .collect();
    Element::from_terms_unchecked(a.clone(), terms)
}

/// `ℬ_{n,k}(F_1, F_2, ...) = (1/n!) B_{n,k}(1!F_1, 2!F_2, ...)`
/// `= (1/k!) [t^n] (Σ F_i t^i)^k` in `CΠQSym(a)`; `f[m-1]` is `F_m`.
pub fn psi_partial_bell<C: Field>(seq: &ColorSequence, f: &[Element<Psi, C>], n: usize, k: usize) -> Result<Element<Psi, C>> {
    for g in f {
        if g.seq() != seq {
            return Err(Error::SequenceMismatch(seq.to_string(), g.seq().to_string()));
        }
    }
    let zero = Element::zero(seq.clone());
    let one = Element::one(seq.clone());
    let p = power_coeff(f, n, k, &zero, &one, |x, y| x.add(y).unwrap(), |x, y| x.mul(y).unwrap());
    Ok(p.scale(&(C::one() / factorial_in::<C>(k))))
}

/// `ℬ_{n,k}` of the atomic generators of `CΠQSym(a)`.
pub fn colored_psi_bell<C: Field>(a: &ColorSequence, n: usize, k: usize) -> Element<Psi, C> {
    let gens: Vec<Element<Psi, C>> = (1..=n).map(|m| atomic_generator(a, m)).collect();
    psi_partial_bell(a, &gens, n, k).expect("generators share the sequence")
}

/// `𝒜_n = Σ_k ℬ_{n,k}` of the atomic generators.
pub fn colored_psi_complete<C: Field>(a: &ColorSequence, n: usize) -> Element<Psi, C> {
    (0..=n).fold(Element::zero(a.clone()), |acc, k| acc.add(&colored_psi_bell(a, n, k)).unwrap())
}

// ---------------------------------------------------------------------------
// Shuffle powers of word polynomials

/// `(1/k!) [t^n] (Σ F_i t^i)^{⧢k}` without any degree requirement on `F`.
pub fn indexed_shuffle_bell<C: Field>(f: &[WordPoly<C>], n: usize, k: usize) -> WordPoly<C> {
    let one = LinComb::monomial(Word::new());
    let p = power_coeff(f, n, k, &LinComb::zero(), &one, |x, y| x.clone() + y.clone(), shuffle);
    p.scale(&(C::one() / factorial_in::<C>(k)))
}

/// `𝚝B_{n,k}(F_1, F_2, ...)`, requiring `deg F_i = i`; `f[i-1]` is `F_i`.
pub fn shuffle_partial_bell<C: Field>(f: &[WordPoly<C>], n: usize, k: usize) -> Result<WordPoly<C>> {
    for (i, g) in f.iter().enumerate() {
        require_degree(g, i + 1)?;
    }
    Ok(indexed_shuffle_bell(f, n, k))
}

/// `𝚝A_n = Σ_{k=0}^{n} 𝚝B_{n,k}` (so `𝚝A_0 = 1`).
pub fn shuffle_complete_bell<C: Field>(f: &[WordPoly<C>], n: usize) -> Result<WordPoly<C>> {
    (0..=n).try_fold(LinComb::zero(), |acc, k| Ok(acc + shuffle_partial_bell(f, n, k)?))
}

// ---------------------------------------------------------------------------
// Sym -> ΠQSym -> CΠQSym(a) -> scalars

/// `α`: the algebra map `Sym → ΠQSym`, `c_i ↦ Ψ_{{{1..i}}}`, applied to a
/// polynomial in `c_1, c_2, ...` (variable `i` is `c_i`).
pub fn alpha<C: Scalar>(x: &Poly<C>) -> Element<Psi, C> {
    let ones = ColorSequence::ones();
    let gen = |i: usize| Element::<Psi, C>::word(&SetPartition::one_block(i));
    let mut out = Element::zero(ones.clone());
    for (m, c) in x.terms().iter() {
        let mut t = Element::one(ones.clone()).scale(c);
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                assert!(i > 0, "the marker variable has no image under α");
                t = t.mul(&gen(i).pow(e as usize)).unwrap();
            }
        }
        out = out.add(&t).unwrap();
    }
    out
}

/// `β_a(Ψ_π) = Σ_{Π ⇛ π} Ψ_Π`, every coloring of the blocks.
pub fn beta<C: Scalar>(a: &ColorSequence, x: &Element<Psi, C>) -> Result<Element<Psi, C>> {
    require_ones(x)?;
    let terms = x.terms().flat_map(|k| {
        let blocks = k.underlying().blocks().to_vec();
        let mut acc: Vec<Vec<(Vec<usize>, usize)>> = vec![Vec::new()];
        for b in &blocks {
            let colors = a.colors(b.len());
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    (1..=colors).map(move |c| {
                        let mut v = prefix.clone();
                        v.push((b.clone(), c));
                        v
                    })
                })
                .collect();
        }
        acc.into_iter().map(|parts| (ColoredSetPartition::new(parts).unwrap(), C::one())).collect()
    });
    Ok(Element::from_terms_unchecked(a.clone(), terms))
}

/// `γ_a(Ψ_Π) = 1/|Π|!`.
pub fn gamma<C: Field>(x: &Element<Psi, C>) -> C {
    x.terms().iter().fold(C::zero(), |acc, (k, c)| acc + c.clone() / factorial_in::<C>(k.size()))
}

/// `γ_a ∘ β_a` on uncolored keys for an arbitrary scalar sequence:
/// `Ψ_π ↦ ∏ a_{#π_i} / |π|!`. On integer sequences this is the composite
/// of [`beta`] and [`gamma`].
pub fn gamma_beta<C: Field>(a: &[C], x: &Element<Psi, C>) -> C {
    x.terms().iter().fold(C::zero(), |acc, (k, c)| {
        let w = k.parts().iter().fold(C::one(), |p, part| p * arg(a, part.block.len()));
        acc + c.clone() * w / factorial_in::<C>(k.size())
    })
}

/// `γ_a β_a α(h_n) = A_n(a)/n!` for `n <= max_n`, the agreement of
/// [`gamma_beta`] with the explicit composite, and multiplicativity of `γ_a`
/// on basis pairs of total size `<= max_pair`.
pub fn morphism_diagram(a: &ColorSequence, max_n: usize, max_pair: usize) -> Report {
    let mut r = Report::new(format!("morphism diagram, a = {a}"));
    let vals = sequence_values(a, max_n.max(1));
    r.push(Check::run(
        "γ_a β_a α(h_n) = A_n(a)/n!",
        format!("n <= {max_n}"),
        (0..=max_n).map(|n| {
            let img = alpha(&crate::symfun::h_from_c::<Rational>(n));
            let lhs = gamma(&beta(a, &img).map_err(|e| e.to_string())?);
            let rhs = eval_complete_bell(&vals, n) / Rational::from_integer(factorial(n));
            expect_eq(format!("n = {n}"), &lhs, &rhs)
        }),
    ));
    r.push(Check::run(
        "γ_a β_a on uncolored keys = ∏ a_{#π_i}/|π|!",
        format!("n <= {max_n}"),
        (0..=max_n).flat_map(enumerate_ordinary).map(|p| {
            let x = Element::<Psi>::word(&p);
            let lhs = gamma(&beta(a, &x).map_err(|e| e.to_string())?);
            expect_eq(format!("π = {p}"), &lhs, &gamma_beta(&vals, &x))
        }),
    ));
    r.push(gamma_multiplicativity(a, max_pair));
    r
}

/// `γ_a β_a α(h_n) = A_n(a)/n!` for a rational sequence, through
/// [`gamma_beta`].
pub fn morphism_diagram_rational(a: &[Rational], max_n: usize) -> Check {
    Check::run(
        "γ_a β_a α(h_n) = A_n(a)/n! (rational a)",
        format!("n <= {max_n}, a = {}", display_seq(a)),
        (0..=max_n).map(|n| {
            let img = alpha(&crate::symfun::h_from_c::<Rational>(n));
            let rhs = eval_complete_bell(a, n) / Rational::from_integer(factorial(n));
            expect_eq(format!("n = {n}"), &gamma_beta(a, &img), &rhs)
        }),
    )
}

/// `γ_a(Ψ_{Π_1} Ψ_{Π_2}) = γ_a(Ψ_{Π_1}) γ_a(Ψ_{Π_2})`.
pub fn gamma_multiplicativity(a: &ColorSequence, max_total: usize) -> Check {
    let keys: Vec<Vec<ColoredSetPartition>> = (0..=max_total).map(|n| enumerate_colored(a, n)).collect();
    let cases = (0..=max_total).flat_map(move |n1| (0..=max_total - n1).map(move |n2| (n1, n2))).flat_map(move |(n1, n2)| {
        let keys = keys.clone();
        let a = a.clone();
        keys[n1]
            .clone()
            .into_iter()
            .flat_map(move |k1| keys[n2].clone().into_iter().map(move |k2| (k1.clone(), k2)))
            .map(move |(k1, k2)| {
                let x = Element::<Psi>::basis(a.clone(), k1.clone()).unwrap();
                let y = Element::<Psi>::basis(a.clone(), k2.clone()).unwrap();
                let lhs = gamma(&x.mul(&y).unwrap());
                expect_eq(format!("{k1} · {k2}"), &lhs, &(gamma(&x) * gamma(&y)))
            })
    });
    Check::run(format!("γ_a multiplicative, a = {a}"), format!("|Π_1| + |Π_2| <= {max_total}"), cases)
}

pub(crate) fn display_seq(a: &[Rational]) -> String {
    let v: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    format!("({}, ...)", v.join(", "))
}

// ---------------------------------------------------------------------------
// Word identities over disjoint alphabets

/// A union of truncated alphabets: `(alphabet index, number of letters)`.
pub type Alphabet = [(usize, usize)];

fn letters(alph: &Alphabet) -> Vec<Letter> {
    alph.iter().flat_map(|&(a, l)| (1..=l).map(move |i| Letter::new(a, i))).collect()
}

fn words_of_length(n: usize, ls: &[Letter]) -> Vec<Word> {
    let mut acc: Vec<Word> = vec![Word::new()];
    for _ in 0..n {
        acc = acc
            .into_iter()
            .flat_map(|w| {
                ls.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    acc
}

/// `S_{{1},...,{k}}(𝔸)`: every word of length `k`, coefficient 1.
pub fn all_words<C: Scalar>(k: usize, alph: &Alphabet) -> WordPoly<C> {
    words_of_length(k, &letters(alph)).into_iter().map(|w| (w, C::one())).collect()
}

/// `S_{{1..n}}(𝔸) = Σ_{π ⊨ n} Ψ_π(𝔸)`. A word whose positions group by
/// letter into blocks `B_1, ..., B_r` lies in `Φ_π(𝔸)` exactly when `π`
/// refines that grouping, so its coefficient is `∏ A_{#B_j}(1!, 2!, ...)`.
pub fn complete_word<C: Scalar>(n: usize, alph: &Alphabet) -> WordPoly<C> {
    let facts: Vec<BigInt> = (1..=n).map(factorial).collect();
    let lists: Vec<BigInt> = (0..=n).map(|m| eval_complete_bell(&facts, m)).collect();
    words_of_length(n, &letters(alph))
        .into_iter()
        .map(|w| {
            let mut seen: Vec<(Letter, usize)> = Vec::new();
            for l in &w {
                match seen.iter_mut().find(|(x, _)| x == l) {
                    Some(e) => e.1 += 1,
                    None => seen.push((*l, 1)),
                }
            }
            let c: BigInt = seen.iter().map(|&(_, m)| lists[m].clone()).product();
            (w, C::from_bigint(c))
        })
        .collect()
}

/// `S_{{1..n}}(k𝔸) = [t^n] σ^W_t(𝔸)^{⧢k}` with `σ^W_t(𝔸) = Σ_m S_{{1..m}}(𝔸) t^m`.
pub fn complete_word_scaled<C: Scalar>(n: usize, k: usize, alph: &Alphabet) -> WordPoly<C> {
    let s: Vec<WordPoly<C>> = (0..=n).map(|m| complete_word(m, alph)).collect();
    let mut cur: Vec<WordPoly<C>> = (0..=n).map(|m| if m == 0 { LinComb::monomial(Word::new()) } else { LinComb::zero() }).collect();
    for _ in 0..k {
        cur = (0..=n)
            .map(|m| (0..=m).fold(LinComb::zero(), |acc, i| acc + shuffle(&s[i], &cur[m - i])))
            .collect();
    }
    cur[n].clone()
}

/// `S^{𝔸'}_m(𝔸'') = S_{{1}}(𝔸') ⧢ S_{{1..m-1}}(𝔸'')`, for `m = 1..=n`.
pub fn s_sup_family<C: Scalar>(n: usize, a1: &Alphabet, a2: &Alphabet) -> Vec<WordPoly<C>> {
    let s1 = all_words::<C>(1, a1);
    (1..=n).map(|m| shuffle(&s1, &complete_word(m - 1, a2))).collect()
}

/// `𝚝B^{𝔸'}_{n,k}(𝔸'') = 𝚝B_{n,k}(S^{𝔸'}_1(𝔸''), S^{𝔸'}_2(𝔸''), ...)`.
pub fn word_bell_sup<C: Field>(n: usize, k: usize, a1: &Alphabet, a2: &Alphabet) -> WordPoly<C> {
    if k > n {
        return LinComb::zero();
    }
    // with k factors no single factor exceeds degree n - k + 1
    let len = if k == 0 { 0 } else { n - k + 1 };
    indexed_shuffle_bell(&s_sup_family(len, a1, a2), n, k)
}

/// The shuffle identities on word Bell polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordIdentity {
    /// `𝚝B^{𝔸'}_{n,k}(𝔸'') = S_{{1},...,{k}}(𝔸') ⧢ S_{{1..n-k}}(k𝔸'')`.
    CompleteToS,
    /// `binom(k, k_1) 𝚝B^{𝔸'}_{n,k} = Σ_i 𝚝B^{𝔸'}_{i,k_1} ⧢ 𝚝B^{𝔸'}_{n-i,k_2}`.
    Binomiality,
    /// Splitting `𝔸'' = 𝔸''_1 + 𝔸''_2`.
    Convolution,
    /// Bell polynomials of the `𝚝B^{𝔸'}_{k_2+m-1,k_2}`.
    Composition,
}

impl std::str::FromStr for WordIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "completeToS" => Ok(WordIdentity::CompleteToS),
            "binomiality" => Ok(WordIdentity::Binomiality),
            "convolution" => Ok(WordIdentity::Convolution),
            "composition" => Ok(WordIdentity::Composition),
            _ => Err(Error::Parse(format!("unknown word identity {s:?}"))),
        }
    }
}

/// `𝔸'` has one letter: every coefficient depends on the `𝔸'` letters
/// only through their positions. `𝔸''` gets as many letters as the words
/// have `𝔸''` positions, enough to realize every pattern of equal letters.
const A1: [(usize, usize); 1] = [(1, 1)];

fn a2(l: usize) -> [(usize, usize); 1] {
    [(2, l)]
}

const K_MAX: usize = 3;

pub fn identity_suite(which: WordIdentity, max_n: usize) -> Report {
    let mut r = Report::new("word Bell identities");
    match which {
        WordIdentity::CompleteToS => r.push(complete_to_s(max_n)),
        WordIdentity::Binomiality => r.push(binomiality(max_n)),
        WordIdentity::Convolution => {
            r.push(convolution_literal(max_n));
            r.push(convolution_corrected(max_n));
        }
        WordIdentity::Composition => {
            r.push(composition_literal(max_n));
            r.push(composition_corrected(max_n));
        }
    }
    r
}

fn complete_to_s(max_n: usize) -> Check {
    let cases = (0..=max_n).flat_map(|n| (0..=K_MAX.min(n)).map(move |k| (n, k))).map(|(n, k)| {
        let a2 = a2(n - k);
        let lhs = word_bell_sup::<Rational>(n, k, &A1, &a2);
        let rhs = shuffle(&all_words(k, &A1), &complete_word_scaled(n - k, k, &a2));
        expect_same(format!("n = {n}, k = {k}"), &lhs, &rhs)
    });
    Check::run("word Bell as shuffle of completes: 𝚝B^{𝔸'}_{n,k}(𝔸'') = S_{1^k}(𝔸') ⧢ S_{n-k}(k𝔸'')", format!("n <= {max_n}, k <= {K_MAX}"), cases)
}

fn binomiality(max_n: usize) -> Check {
    let cases = (0..=max_n)
        .flat_map(|n| (0..=K_MAX).flat_map(move |k1| (0..=K_MAX).map(move |k2| (n, k1, k2))))
        .map(|(n, k1, k2)| {
            let k = k1 + k2;
            let a2 = a2(n.saturating_sub(k));
            let fam = s_sup_family::<Rational>(n, &A1, &a2);
            let lhs = indexed_shuffle_bell(&fam, n, k).scale(&binomial_in(k as i64, k1 as i64));
            let rhs = (0..=n).fold(LinComb::zero(), |acc, i| {
                acc + shuffle(&indexed_shuffle_bell(&fam, i, k1), &indexed_shuffle_bell(&fam, n - i, k2))
            });
            expect_same(format!("n = {n}, k1 = {k1}, k2 = {k2}"), &lhs, &rhs)
        });
    Check::run(
        "word Bell binomiality: binom(k,k1) 𝚝B^{𝔸'}_{n,k} = Σ_i 𝚝B^{𝔸'}_{i,k1} ⧢ 𝚝B^{𝔸'}_{n-i,k2}",
        format!("n <= {max_n}, k1, k2 <= {K_MAX}"),
        cases,
    )
}

/// `𝔸''_1`, `𝔸''_2` are alphabets 3 and 4 with `l` letters each.
fn split(l: usize) -> ([(usize, usize); 1], [(usize, usize); 1], [(usize, usize); 2]) {
    ([(3, l)], [(4, l)], [(3, l), (4, l)])
}

/// `S_{1^k}(𝔸') ⧢ 𝚝B^{𝔸'}_{n,k}(𝔸'') = Σ_{i=0}^{n} 𝚝B^{𝔸'}_{i,k}(𝔸''_1) ⧢ 𝚝B^{𝔸'}_{n-i,k}(𝔸''_2)`
/// read literally: the left side has degree `n + k`, the right side `n`.
fn convolution_literal(max_n: usize) -> Check {
    let cases = (0..=max_n).flat_map(|n| (0..=K_MAX).map(move |k| (n, k))).map(|(n, k)| {
        let (b1, b2, both) = split(n.saturating_sub(k).max(1));
        let lhs = shuffle(&all_words(k, &A1), &word_bell_sup::<Rational>(n, k, &A1, &both));
        let f1 = s_sup_family::<Rational>(n, &A1, &b1);
        let f2 = s_sup_family::<Rational>(n, &A1, &b2);
        let rhs = (0..=n).fold(LinComb::zero(), |acc, i| {
            acc + shuffle(&indexed_shuffle_bell(&f1, i, k), &indexed_shuffle_bell(&f2, n - i, k))
        });
        expect_same(format!("n = {n}, k = {k}"), &lhs, &rhs)
    });
    Check::run(
        "word Bell convolution, literal: S_{1^k}(𝔸') ⧢ 𝚝B^{𝔸'}_{n,k}(𝔸''_1+𝔸''_2) = Σ_i 𝚝B^{𝔸'}_{i,k}(𝔸''_1) ⧢ 𝚝B^{𝔸'}_{n-i,k}(𝔸''_2)",
        format!("n <= {max_n}, k <= {K_MAX}"),
        cases,
    )
    .with_note("left side is homogeneous of degree n + k, right side of degree n; holds only for k = 0")
}

/// Degree-consistent form, the word analogue of
/// `binom(n,k) B_{n-k,k}(c) = Σ_i binom(n,i) B_{i,k}(a) B_{n-i,k}(b)`:
/// `S_{1^k}(𝔸') ⧢ 𝚝B^{𝔸'}_{n-k,k}(𝔸'') = Σ_{i=0}^{n} 𝚝B^{𝔸'}_{i,k}(𝔸''_1) ⧢ 𝚝B^{𝔸'}_{n-i,k}(𝔸''_2)`.
fn convolution_corrected(max_n: usize) -> Check {
    let cases = (0..=max_n).flat_map(|n| (0..=K_MAX).map(move |k| (n, k))).map(|(n, k)| {
        let (b1, b2, both) = split(n.saturating_sub(2 * k));
        let lhs = if n >= k {
            shuffle(&all_words(k, &A1), &word_bell_sup::<Rational>(n - k, k, &A1, &both))
        } else {
            LinComb::zero()
        };
        let f1 = s_sup_family::<Rational>(n, &A1, &b1);
        let f2 = s_sup_family::<Rational>(n, &A1, &b2);
        let rhs = (0..=n).fold(LinComb::zero(), |acc, i| {
            acc + shuffle(&indexed_shuffle_bell(&f1, i, k), &indexed_shuffle_bell(&f2, n - i, k))
        });
        expect_same(format!("n = {n}, k = {k}"), &lhs, &rhs)
    });
    Check::run(
        "word Bell convolution, corrected: S_{1^k}(𝔸') ⧢ 𝚝B^{𝔸'}_{n-k,k}(𝔸''_1+𝔸''_2) = Σ_i 𝚝B^{𝔸'}_{i,k}(𝔸''_1) ⧢ 𝚝B^{𝔸'}_{n-i,k}(𝔸''_2)",
        format!("n <= {max_n}, k <= {K_MAX}"),
        cases,
    )
}

/// `F_m = 𝚝B^{𝔸'}_{k2+m-1,k2}(𝔸'')` for `m = 1..=n`.
fn composition_family(n: usize, k2: usize, a2: &Alphabet) -> Vec<WordPoly<Rational>> {
    let fam = s_sup_family::<Rational>(n, &A1, a2);
    (1..=n).map(|m| indexed_shuffle_bell(&fam, k2 + m - 1, k2)).collect()
}

fn composition_cases(max_n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=max_n).flat_map(|n| (1..=K_MAX).flat_map(move |k1| (1..=K_MAX).map(move |k2| (n, k1, k2))))
}

/// `𝚝B_{n,k1}(F) = 𝚝B^{𝔸'}_{n-k1+k1k2, k1k2}(𝔸'')` read literally.
fn composition_literal(max_n: usize) -> Check {
    let cases = composition_cases(max_n).map(|(n, k1, k2)| {
        if n < k1 {
            return Ok(());
        }
        let a2 = a2(n - k1);
        let lhs = indexed_shuffle_bell(&composition_family(n, k2, &a2), n, k1);
        let big = n - k1 + k1 * k2;
        let rhs = word_bell_sup::<Rational>(big, k1 * k2, &A1, &a2);
        expect_same(format!("n = {n}, k1 = {k1}, k2 = {k2}"), &lhs, &rhs)
    });
    Check::run(
        "word Bell composition, literal: 𝚝B_{n,k1}(𝚝B^{𝔸'}_{k2,k2}, 𝚝B^{𝔸'}_{k2+1,k2}, ...) = 𝚝B^{𝔸'}_{n-k1+k1k2,k1k2}",
        format!("n <= {max_n}, 1 <= k1, k2 <= {K_MAX}"),
        cases,
    )
    .with_note("the sides differ by the factor (k1k2)!/(k1!(k2!)^k1), which is 1 only when k1 = 1 or k2 = 1")
}

/// `k1! (k2!)^{k1} 𝚝B_{n,k1}(F) = (k1k2)! 𝚝B^{𝔸'}_{n-k1+k1k2, k1k2}(𝔸'')`.
fn composition_corrected(max_n: usize) -> Check {
    let cases = composition_cases(max_n).map(|(n, k1, k2)| {
        if n < k1 {
            return Ok(());
        }
        let a2 = a2(n - k1);
        let lhs = indexed_shuffle_bell(&composition_family(n, k2, &a2), n, k1)
            .scale(&(factorial_in::<Rational>(k1) * pow(&factorial_in::<Rational>(k2), k1)));
        let big = n - k1 + k1 * k2;
        let rhs = word_bell_sup::<Rational>(big, k1 * k2, &A1, &a2).scale(&factorial_in(k1 * k2));
        expect_same(format!("n = {n}, k1 = {k1}, k2 = {k2}"), &lhs, &rhs)
    });
    Check::run(
        "word Bell composition, corrected: k1!(k2!)^k1 𝚝B_{n,k1}(F) = (k1k2)! 𝚝B^{𝔸'}_{n-k1+k1k2,k1k2}",
        format!("n <= {max_n}, 1 <= k1, k2 <= {K_MAX}"),
        cases,
    )
}

/// `B_{n,k}` values for the CLI tables: rows `n = 0..=n_max`, columns
/// `k = 0..=n`.
pub fn table<C: Scalar>(a: &[C], n_max: usize) -> Vec<Vec<C>> {
    bell_table(a, n_max)
}

/// True when `word_partial_bell(n, k)` is exactly the sum of `Φ_π` over
/// partitions with `k` blocks.
pub fn word_partial_bell_matches_enumeration(n: usize, k: usize) -> bool {
    let expected: LinComb<ColoredSetPartition, Rational> = enumerate_ordinary(n)
        .into_iter()
        .filter(|p| p.len() == k)
        .map(|p| (ColoredSetPartition::from_uncolored(&p), Rational::one()))
        .collect();
    *word_partial_bell::<Rational>(n, k).terms() == expected
}
