//! Verification suites behind `wordbell verify`: each gathers [`Check`]s
//! over exhaustive ranges, stopping each identity at its first
//! counterexample.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bell::{
    self, colored_psi_bell, deriv_op, deriv_via_monomials, eval_partial_bell, eval_partial_bell_reduced, morphism_diagram,
    morphism_diagram_rational, partial_bell, partial_bell_double_gf, partial_bell_exponent_n, word_complete_bell,
    word_partial_bell, zero_leading_shift_uncorrected, WordIdentity,
};
use crate::combinatorics::{
    all_permutations, count_by_type, enumerate_colored, enumerate_colored_parts, enumerate_ordinary, ColorSequence,
    ColoredSetPartition, CyclePermutation, SetPartition,
};
use crate::error::{Error, Result};
use crate::hopf::{pairing, tensor_pairing, Element, HopfBasis, Phi, Psi, Tensor};
use crate::lincomb::LinComb;
use crate::munthekaas;
use crate::random;
use crate::realization::{concat, realize_phi, realize_psi, shuffle, split_alphabets, WordPoly};
use crate::report::{expect_eq, expect_same, Check, Report};
use crate::scalar::{binomial, factorial, int, pow, Rational};
use crate::symfun::{alphabet_suite, appendix_suite, AppendixRanges};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hopf,
    Bell,
    Word,
    Mk,
    Appendix,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "hopf" => Suite::Hopf,
            "bell" => Suite::Bell,
            "word" => Suite::Word,
            "mk" => Suite::Mk,
            "appendix" => Suite::Appendix,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// Default degree bounds.
pub const HOPF_MAX: usize = 5;
pub const BELL_MAX: usize = 8;
pub const WORD_MAX: usize = 5;
pub const MK_MAX: usize = 6;
pub const APPENDIX_MAX: usize = 8;

/// Runs a suite; `cap` lowers every default bound.
pub fn run(suite: Suite, cap: Option<usize>) -> Report {
    let b = |d: usize| cap.map_or(d, |c| c.min(d));
    match suite {
        Suite::Hopf => hopf_suite(b(HOPF_MAX)),
        Suite::Bell => bell_suite(b(BELL_MAX)),
        Suite::Word => word_suite(b(WORD_MAX)),
        Suite::Mk => mk_suite(b(MK_MAX)),
        Suite::Appendix => appendix(cap),
        Suite::All => {
            let mut r = Report::new("all");
            for s in [Suite::Hopf, Suite::Bell, Suite::Word, Suite::Mk, Suite::Appendix] {
                r.extend(run(s, cap));
            }
            r
        }
    }
}

/// ones, factorial, shifted factorial, `(1, 2, 3, ...)`.
pub fn named_sequences() -> Vec<ColorSequence> {
    vec![ColorSequence::ones(), ColorSequence::factorial(), ColorSequence::shifted_factorial(), ColorSequence::idempotent()]
}

// ---------------------------------------------------------------------------
// Hopf structure

fn keys_up_to(a: &ColorSequence, max: usize) -> Vec<ColoredSetPartition> {
    (0..=max).flat_map(|n| enumerate_colored(a, n)).collect()
}

fn el<B: HopfBasis>(a: &ColorSequence, k: &ColoredSetPartition) -> Element<B> {
    Element::basis(a.clone(), k.clone()).expect("enumerated key")
}

fn s(e: Error) -> String {
    e.to_string()
}

fn mul_tensor_legs<B: HopfBasis>(t: &Tensor<B>, f: impl Fn(&Element<B>) -> Element<B>, left: bool) -> Element<B> {
    let seq = t.seq().clone();
    let mut out = Element::zero(seq.clone());
    for ((l, r), c) in t.terms().iter() {
        let (mut x, mut y) = (el::<B>(&seq, l), el::<B>(&seq, r));
        if left {
            x = f(&x);
        } else {
            y = f(&y);
        }
        out = out.add(&x.mul(&y).unwrap().scale(c)).unwrap();
    }
    out
}

/// Associativity, coassociativity, compatibility, counit and antipode for
/// basis elements of one basis.
fn hopf_axioms<B: HopfBasis>(a: &ColorSequence, max_n: usize) -> Check {
    let keys = keys_up_to(a, max_n);
    let by_size = |n: usize| keys.iter().filter(move |k| k.size() == n);
    let mut cases: Vec<std::result::Result<(), String>> = Vec::new();
    let mut push = |r: std::result::Result<(), String>| {
        let fail = r.is_err();
        cases.push(r);
        fail
    };
    'outer: for x in &keys {
        let ex = el::<B>(a, x);
        let d = ex.coproduct();
        // coassociativity
        if push(expect_same(format_args!("coassociativity at {x}"), &d.coproduct_leg(true), &d.coproduct_leg(false))) {
            break;
        }
        // counit on both sides
        let left: LinComb<ColoredSetPartition, Rational> = d.contract(|l, r| {
            if l.size() == 0 {
                LinComb::monomial(r.clone())
            } else {
                LinComb::zero()
            }
        });
        let right: LinComb<ColoredSetPartition, Rational> = d.contract(|l, r| {
            if r.size() == 0 {
                LinComb::monomial(l.clone())
            } else {
                LinComb::zero()
            }
        });
        if push(expect_same(format_args!("left counit at {x}"), &left, ex.terms()))
            || push(expect_same(format_args!("right counit at {x}"), &right, ex.terms()))
        {
            break;
        }
        // antipode
        let unit = Element::<B>::one(a.clone()).scale(&ex.counit());
        let sl = mul_tensor_legs(&d, |e| e.antipode(), true);
        let sr = mul_tensor_legs(&d, |e| e.antipode(), false);
        if push(expect_same(format_args!("m(S ⊗ id)Δ at {x}"), &sl, &unit)) || push(expect_same(format_args!("m(id ⊗ S)Δ at {x}"), &sr, &unit)) {
            break;
        }
        for y in keys.iter().filter(|y| x.size() + y.size() <= max_n) {
            let ey = el::<B>(a, y);
            let xy = ex.mul(&ey).unwrap();
            if push(expect_same(format_args!("Δ(xy) = Δ(x)Δ(y) at {x}, {y}"), &xy.coproduct(), &d.mul(&ey.coproduct()).unwrap())) {
                break 'outer;
            }
            for n3 in 0..=max_n - x.size() - y.size() {
                for z in by_size(n3) {
                    let ez = el::<B>(a, z);
                    let l = xy.mul(&ez).unwrap();
                    let r = ex.mul(&ey.mul(&ez).unwrap()).unwrap();
                    if push(expect_same(format_args!("associativity at {x}, {y}, {z}"), &l, &r)) {
                        break 'outer;
                    }
                }
            }
        }
    }
    Check::run(format!("Hopf axioms in the {} basis, a = {a}", B::NAME), format!("total degree <= {max_n}"), cases)
}

/// `⟨xy, z⟩ = ⟨x ⊗ y, Δz⟩` in both directions of the `Φ`/`Ψ` duality.
fn adjointness(a: &ColorSequence, max_n: usize) -> Check {
    let keys = keys_up_to(a, max_n);
    let zs: Vec<_> = keys
        .iter()
        .map(|z| {
            let (p, q) = (el::<Phi>(a, z), el::<Psi>(a, z));
            let (dp, dq) = (p.coproduct(), q.coproduct());
            (z, p, q, dp, dq)
        })
        .collect();
    let mut cases = Vec::new();
    'outer: for x in &keys {
        for y in keys.iter().filter(|y| x.size() + y.size() <= max_n) {
            let n = x.size() + y.size();
            let (px, py, qx, qy) = (el::<Phi>(a, x), el::<Phi>(a, y), el::<Psi>(a, x), el::<Psi>(a, y));
            let (pxy, qxy) = (px.mul(&py).unwrap(), qx.mul(&qy).unwrap());
            let (pt, qt) = (Tensor::simple(&px, &py).unwrap(), Tensor::simple(&qx, &qy).unwrap());
            for (z, pz, qz, dpz, dqz) in zs.iter().filter(|t| t.0.size() == n) {
                let r = (|| {
                    let (l1, r1) = (pairing(&pxy, qz).map_err(s)?, tensor_pairing(&pt, dqz).map_err(s)?);
                    let (l2, r2) = (pairing(pz, &qxy).map_err(s)?, tensor_pairing(dpz, &qt).map_err(s)?);
                    if l1 != r1 {
                        return expect_eq(format_args!("⟨Φ_x Φ_y, Ψ_z⟩ at {x}, {y}, {z}"), &l1, &r1);
                    }
                    expect_eq(format_args!("⟨Φ_z, Ψ_x Ψ_y⟩ at {x}, {y}, {z}"), &l2, &r2)
                })();
                let fail = r.is_err();
                cases.push(r);
                if fail {
                    break 'outer;
                }
            }
        }
    }
    Check::run(format!("duality ⟨xy, z⟩ = ⟨x ⊗ y, Δz⟩, a = {a}"), format!("total degree <= {max_n}"), cases)
}

pub fn hopf_suite(max_n: usize) -> Report {
    let mut r = Report::new("Hopf algebras");
    for a in named_sequences() {
        r.push(hopf_axioms::<Phi>(&a, max_n));
        r.push(hopf_axioms::<Psi>(&a, max_n));
        r.push(adjointness(&a, max_n));
    }
    r
}

// ---------------------------------------------------------------------------
// Bell polynomials

fn ints(v: impl IntoIterator<Item = i64>) -> Vec<Rational> {
    v.into_iter().map(int).collect()
}

fn cycle_count(p: &[usize]) -> usize {
    CyclePermutation::from_one_line(p).map(|c| c.cycles().len()).unwrap_or(0)
}

/// Classical values against independent counts and closed forms.
pub fn classical_checks(max_n: usize) -> Vec<Check> {
    let ones = ints(std::iter::repeat_n(1, max_n));
    let facts: Vec<Rational> = (1..=max_n).map(|i| Rational::from_integer(factorial(i))).collect();
    let shifted: Vec<Rational> = (0..max_n).map(|i| Rational::from_integer(factorial(i))).collect();
    let idem = ints((1..=max_n as i64).collect::<Vec<_>>());
    let nk = move || (0..=max_n).flat_map(|n| (0..=n).map(move |k| (n, k)));
    let mut out = vec![
        Check::run(
            "B_{n,k}(1,1,...) = S_{n,k}, partitions counted by enumeration",
            format!("n <= {max_n}"),
            nk().map(|(n, k)| {
                let count = enumerate_ordinary(n).iter().filter(|p| p.len() == k).count() as i64;
                expect_eq(format_args!("n = {n}, k = {k}"), &eval_partial_bell(&ones, n, k), &int(count))
            }),
        ),
        Check::run(
            "B_{n,k}(1!,2!,...) = binom(n-1,k-1) n!/k!",
            format!("n <= {max_n}"),
            nk().map(|(n, k)| {
                let lah = if n == 0 && k == 0 {
                    Rational::one()
                } else if k == 0 {
                    Rational::zero()
                } else {
                    Rational::from_integer(binomial(n as i64 - 1, k as i64 - 1) * factorial(n)) / Rational::from_integer(factorial(k))
                };
                expect_eq(format_args!("n = {n}, k = {k}"), &eval_partial_bell(&facts, n, k), &lah)
            }),
        ),
        Check::run(
            "B_{n,k}(1,2,3,...) = binom(n,k) k^{n-k}",
            format!("n <= {max_n}"),
            nk().map(|(n, k)| {
                let v = Rational::from_integer(binomial(n as i64, k as i64)) * pow(&int(k as i64), n - k);
                expect_eq(format_args!("n = {n}, k = {k}"), &eval_partial_bell(&idem, n, k), &v)
            }),
        ),
        Check::run(
            "B_{n,k}(0!,1!,2!,...) = |s_{n,k}|, permutations counted by cycles",
            format!("n <= {max_n}"),
            nk().map(|(n, k)| {
                let count = all_permutations(n).iter().filter(|p| cycle_count(p) == k).count() as i64;
                expect_eq(format_args!("n = {n}, k = {k}"), &eval_partial_bell(&shifted, n, k), &int(count))
            }),
        ),
    ];
    let sym = max_n.min(7);
    out.push(Check::run(
        "symbolic B_{n,k}: power extraction = double generating function = recurrence",
        format!("n <= {sym}"),
        (0..=sym).flat_map(|n| (0..=n).map(move |k| (n, k))).map(|(n, k)| {
            let p = partial_bell::<Rational>(n, k);
            expect_eq(format_args!("n = {n}, k = {k}"), &p, &partial_bell_double_gf::<Rational>(n, k))?;
            let a = random::rationals(3, n.max(1));
            expect_eq(format_args!("n = {n}, k = {k} (evaluated)"), &p.eval(|i| if i == 0 { Rational::zero() } else { a.get(i - 1).cloned().unwrap_or_else(Rational::zero) }), &eval_partial_bell(&a, n, k))
        }),
    ));
    out.push(Check::run(
        "B_{n,k} through a_1-normalization (a_1 ≠ 0) and the index shift (a_1 = 0)",
        format!("n <= {max_n}, random a"),
        nk().map(|(n, k)| {
            let a = random::rationals(5, max_n.max(1));
            let mut z = random::rationals(7, max_n.max(1));
            z[0] = Rational::zero();
            let mut nz = a.clone();
            if nz[0].is_zero() {
                nz[0] = Rational::one();
            }
            expect_eq(format_args!("n = {n}, k = {k}, a_1 ≠ 0"), &eval_partial_bell_reduced(&nz, n, k), &eval_partial_bell(&nz, n, k))?;
            expect_eq(format_args!("n = {n}, k = {k}, a_1 = 0"), &eval_partial_bell_reduced(&z, n, k), &eval_partial_bell(&z, n, k))
        }),
    ));
    out
}

/// Forms that the recurrence and the generating function contradict.
pub fn classical_discrepancies(max_n: usize) -> Vec<Check> {
    let sym = max_n.min(6);
    vec![
        Check::run(
            "B_{n,k} = n!/k! [t^n] (Σ a_i t^i/i!)^n, exponent n",
            format!("n <= {sym}"),
            (0..=sym).flat_map(|n| (0..=n).map(move |k| (n, k))).map(|(n, k)| {
                expect_eq(format_args!("n = {n}, k = {k}"), &partial_bell_exponent_n::<Rational>(n, k), &partial_bell::<Rational>(n, k))
            }),
        )
        .with_note("the exponent of the inner series must be k"),
        Check::run(
            "a_1 = 0: B_{n,k}(0, a_2, ...) = n!/(n-k)! B_{n,k}(a_2, a_3, ...)",
            format!("n <= {max_n}, random a"),
            (0..=max_n).flat_map(|n| (0..=n).map(move |k| (n, k))).map(|(n, k)| {
                let mut z = random::rationals(7, max_n.max(1));
                z[0] = Rational::zero();
                expect_eq(format_args!("n = {n}, k = {k}"), &zero_leading_shift_uncorrected(&z, n, k), &eval_partial_bell(&z, n, k))
            }),
        )
        .with_note("pulling t^k out of (Σ_{i>=2} a_i t^i/i!)^k gives n!/(n-k)! B_{n-k,k}(a_2/2, a_3/3, ...)"),
    ]
}

/// The seven partitions of `{1,2,3,4}` into two blocks, as listed.
pub const B42_LISTED: [&[&[usize]]; 7] = [
    &[&[1], &[2, 3, 4]],
    &[&[2], &[1, 3, 4]],
    &[&[3], &[1, 2, 4]],
    &[&[4], &[1, 2, 3]],
    &[&[1, 2], &[3, 4]],
    &[&[1, 3], &[2, 4]],
    &[&[1, 4], &[2, 3]],
];

fn phi_sum(ps: impl IntoIterator<Item = SetPartition>) -> LinComb<ColoredSetPartition, Rational> {
    ps.into_iter().map(|p| (ColoredSetPartition::from_uncolored(&p), Rational::one())).collect()
}

pub fn word_bell_checks(max_n: usize, max_deriv: usize) -> Vec<Check> {
    let listed = phi_sum(B42_LISTED.iter().map(|bs| SetPartition::new(bs.iter().map(|b| b.to_vec()).collect()).unwrap()));
    vec![
        Check::run(
            "𝔅_{4,2} is the listed seven-term sum",
            "n = 4, k = 2",
            std::iter::once(expect_eq("𝔅_{4,2}", word_partial_bell::<Rational>(4, 2).terms(), &listed)),
        ),
        Check::run(
            "𝔄_n = Σ_{π ⊨ n} Φ_π and 𝔅_{n,k} = Σ_{#π = k} Φ_π",
            format!("n <= {max_n}"),
            (0..=max_n).map(|n| {
                let all = phi_sum(enumerate_ordinary(n));
                expect_eq(format_args!("𝔄_{n}"), word_complete_bell::<Rational>(n).terms(), &all)?;
                for k in 0..=n {
                    let want = phi_sum(enumerate_ordinary(n).into_iter().filter(|p| p.len() == k));
                    expect_eq(format_args!("𝔅_{{{n},{k}}}"), word_partial_bell::<Rational>(n, k).terms(), &want)?;
                }
                Ok(())
            }),
        ),
        Check::run(
            "x∂ = x(φ⁻¹ μ φ - μ) on every Φ_π",
            format!("n <= {max_deriv}"),
            (0..=max_deriv).flat_map(enumerate_ordinary).map(|p| {
                let x = Element::<Phi>::word(&p);
                let lhs = deriv_op(&x).map_err(s)?;
                let rhs = deriv_via_monomials(&x).map_err(s)?;
                expect_eq(format_args!("π = {p}"), &lhs, &rhs)
            }),
        ),
    ]
}

/// `ℬ_{n,k}` of the atomic generators is the sum of `Ψ_Π` over `CP_{n,k}(a)`.
pub fn colored_bell_check(a: &ColorSequence, max_n: usize) -> Check {
    Check::run(
        format!("ℬ_{{n,k}} of atomic generators = Σ_{{Π ∈ CP_{{n,k}}(a)}} Ψ_Π, a = {a}"),
        format!("n <= {max_n}"),
        (0..=max_n).flat_map(|n| (0..=n).map(move |k| (n, k))).map(|(n, k)| {
            let want: LinComb<ColoredSetPartition, Rational> =
                enumerate_colored_parts(a, n, k).into_iter().map(|p| (p, Rational::one())).collect();
            expect_eq(format_args!("n = {n}, k = {k}"), colored_psi_bell::<Rational>(a, n, k).terms(), &want)
        }),
    )
}

/// `#CP_n(a)` for `a = (1!, 2!, ...)` and `a = (b_1, b_2, ...)`.
pub fn sequence_count_checks() -> Vec<Check> {
    let lists = [1u64, 1, 3, 13, 73, 501];
    let bells = [1u64, 3, 12, 60, 358];
    vec![
        Check::run(
            "#CP_n(1!, 2!, ...) = 1, 1, 3, 13, 73, 501",
            "n <= 5",
            lists.iter().enumerate().map(|(n, &c)| {
                expect_eq(format_args!("n = {n}"), &(enumerate_colored(&ColorSequence::factorial(), n).len() as u64), &c)
            }),
        ),
        Check::run(
            "#CP_n(b_1, b_2, ...) = 1, 3, 12, 60, 358",
            "1 <= n <= 5",
            bells.iter().enumerate().map(|(i, &c)| {
                let n = i + 1;
                expect_eq(format_args!("n = {n}"), &(enumerate_colored(&ColorSequence::bell(), n).len() as u64), &c)
            }),
        ),
    ]
}

pub fn count_by_type_check(a: &ColorSequence, max_n: usize) -> Check {
    Check::run(
        format!("type count = distinct type multisets of CP_n(a), a = {a}"),
        format!("n <= {max_n}"),
        (0..=max_n).map(|n| {
            let types: BTreeSet<Vec<(usize, usize)>> = enumerate_colored(a, n).iter().map(|p| p.type_signature()).collect();
            expect_eq(format_args!("n = {n}"), &count_by_type(a, n), &BigInt::from(types.len()))
        }),
    )
}

/// Seeds of the two random rational sequences in the morphism checks.
pub const MORPHISM_SEEDS: [u64; 2] = [101, 202];

pub fn morphism_checks(max_n: usize, max_pair: usize) -> Report {
    let mut r = Report::new("morphisms");
    for a in named_sequences() {
        r.extend(morphism_diagram(&a, max_n, max_pair));
    }
    for seed in MORPHISM_SEEDS {
        r.push(morphism_diagram_rational(&random::rationals(seed, max_n.max(1)), max_n));
    }
    r
}

pub fn bell_suite(max_n: usize) -> Report {
    let mut r = Report::new("Bell polynomials");
    for c in classical_checks(max_n) {
        r.push(c);
    }
    for c in classical_discrepancies(max_n) {
        r.document(c);
    }
    for c in sequence_count_checks() {
        r.push(c);
    }
    for a in named_sequences() {
        r.push(count_by_type_check(&a, max_n.min(6)));
    }
    for c in word_bell_checks(max_n.min(6), max_n.min(5)) {
        r.push(c);
    }
    for a in named_sequences() {
        r.push(colored_bell_check(&a, max_n.min(5)));
    }
    r.extend(morphism_checks(max_n.min(6), max_n.min(5)));
    r
}

// ---------------------------------------------------------------------------
// Words

/// Pairs of keys with total size `<= max_n`, realized with as many letters
/// as the total size.
pub fn realization_checks(a: &ColorSequence, max_n: usize) -> Vec<Check> {
    let keys = keys_up_to(a, max_n);
    let pairs = || keys.iter().flat_map(|x| keys.iter().filter(move |y| x.size() + y.size() <= max_n).map(move |y| (x, y)));
    let one = |k: &ColoredSetPartition| LinComb::<ColoredSetPartition, Rational>::monomial(k.clone());
    vec![
        Check::run(
            format!("Φ_x Φ_y realizes to the concatenation of realizations, a = {a}"),
            format!("|x| + |y| <= {max_n}, L = |x| + |y|"),
            pairs().map(|(x, y)| {
                let l = x.size() + y.size();
                let xy = el::<Phi>(a, x).mul(&el::<Phi>(a, y)).unwrap();
                let lhs: WordPoly = realize_phi(xy.terms(), l);
                expect_same(format_args!("{x} · {y}"), &lhs, &concat(&realize_phi(&one(x), l), &realize_phi(&one(y), l)))
            }),
        ),
        Check::run(
            format!("Ψ_x Ψ_y realizes to the shuffle of realizations, a = {a}"),
            format!("|x| + |y| <= {max_n}, L = |x| + |y|"),
            pairs().map(|(x, y)| {
                let l = x.size() + y.size();
                let xy = el::<Psi>(a, x).mul(&el::<Psi>(a, y)).unwrap();
                let lhs: WordPoly = realize_psi(xy.terms(), l);
                expect_same(format_args!("{x} · {y}"), &lhs, &shuffle(&realize_psi(&one(x), l), &realize_psi(&one(y), l)))
            }),
        ),
        Check::run(
            format!("Δ(Φ_x) realizes to the split of the doubled alphabet, a = {a}"),
            format!("|x| <= {max_n}, L = |x| per side"),
            keys.iter().map(|x| {
                let n = x.size();
                let lhs = split_alphabets(&realize_phi::<Rational>(&one(x), 2 * n), n);
                let rhs = el::<Phi>(a, x).coproduct().contract(|l, r| {
                    let (wl, wr): (WordPoly, WordPoly) = (realize_phi(&one(l), n), realize_phi(&one(r), n));
                    wl.bilinear(&wr, |u, v| LinComb::monomial((u.clone(), v.clone())))
                });
                expect_same(format_args!("{x}"), &lhs, &rhs)
            }),
        ),
        Check::run(
            format!("distinct Φ keys realize to distinct polynomials, a = {a}"),
            format!("n <= {max_n}, L = n"),
            (0..=max_n).map(|n| {
                let ks = enumerate_colored(a, n);
                let images: BTreeSet<WordPoly> = ks.iter().map(|k| realize_phi(&one(k), n)).collect();
                expect_eq(format_args!("n = {n}"), &images.len(), &ks.len())
            }),
        ),
    ]
}

pub fn word_suite(max_n: usize) -> Report {
    let mut r = Report::new("word polynomials");
    for a in [ColorSequence::ones(), ColorSequence::idempotent()] {
        for c in realization_checks(&a, max_n) {
            r.push(c);
        }
    }
    for w in [WordIdentity::CompleteToS, WordIdentity::Binomiality, WordIdentity::Convolution, WordIdentity::Composition] {
        r.extend(bell::identity_suite(w, max_n));
    }
    r
}

// ---------------------------------------------------------------------------
// Noncommutative

/// `MB_1, ..., MB_4` as listed: `(n, k, [(word, coefficient)])`.
pub const MB_LISTED: &[(usize, usize, &[(&[usize], i64)])] = &[
    (1, 1, &[(&[1], 1)]),
    (2, 2, &[(&[1, 1], 1)]),
    (2, 1, &[(&[2], 1)]),
    (3, 3, &[(&[1, 1, 1], 1)]),
    (3, 2, &[(&[2, 1], 2), (&[1, 2], 1)]),
    (3, 1, &[(&[3], 1)]),
    (4, 4, &[(&[1, 1, 1, 1], 1)]),
    (4, 3, &[(&[2, 1, 1], 3), (&[1, 2, 1], 2), (&[1, 1, 2], 1)]),
    (4, 2, &[(&[3, 1], 3), (&[2, 2], 3), (&[1, 3], 1)]),
    (4, 1, &[(&[4], 1)]),
];

pub fn mb_listed_check() -> Check {
    Check::run(
        "MB_1, ..., MB_4 as listed",
        "n <= 4",
        MB_LISTED.iter().map(|&(n, k, terms)| {
            let want: munthekaas::NCPoly = terms.iter().map(|&(w, c)| (w.to_vec(), int(c))).collect();
            expect_eq(format_args!("MB_{{{n},{k}}}"), &munthekaas::mb_partial::<Rational>(n, k), &want)
        }),
    )
}

pub fn mk_suite(max_n: usize) -> Report {
    let mut r = Report::new("noncommutative Bell polynomials");
    r.push(mb_listed_check());
    r.extend(munthekaas::suite(max_n));
    r
}

// ---------------------------------------------------------------------------

pub fn appendix(cap: Option<usize>) -> Report {
    let ranges = cap.map_or(AppendixRanges::DEFAULT, AppendixRanges::capped);
    let mut r = appendix_suite(ranges);
    r.extend(alphabet_suite(cap.map_or(APPENDIX_MAX, |c| c.min(APPENDIX_MAX))));
    r
}
