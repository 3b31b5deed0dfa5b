//! Commutative symmetric functions in the basis `c_n = p_n / n`, virtual
//! alphabets given by their `c` values, alphabet operations, Schur functions
//! by Jacobi–Trudi, and the Bell polynomial identities they encode.

use num_traits::{One, Zero};

use crate::bell::{bell_table, eval_complete_bell, eval_partial_bell, partial_bell};
use crate::error::{Error, Result};
use crate::poly::{Poly, Series};
use crate::random;
use crate::report::{expect_eq, Check, Report};
use crate::scalar::{binomial_in, factorial_in, int, pow, rat, Field, Rational};
use crate::util::integer_partitions;

/// Degree bound used when none is given.
pub const DEFAULT_ORDER: usize = 10;

/// `h_n = [t^n] exp(Σ c_i t^i)`, a polynomial in `c_i` (variable `i`).
pub fn h_from_c<C: Field>(n: usize) -> Poly<C> {
    Series::from_fn(n, |i| if i == 0 { Poly::zero() } else { Poly::var(i) }).exp::<C>().coeff(n)
}

/// `c_n = [t^n] log(1 + Σ h_i t^i)`, a polynomial in `h_i` (variable `i`).
pub fn c_from_h<C: Field>(n: usize) -> Poly<C> {
    Series::from_fn(n, |i| if i == 0 { Poly::one() } else { Poly::var(i) }).log::<C>().coeff(n)
}

/// `h_n(αX) = [t^n] exp(α Σ c_i t^i)` with `α` the marker variable `x_0`.
pub fn scaled_h<C: Field>(n: usize) -> Poly<C> {
    let alpha = Poly::var(0);
    Series::from_fn(n, |i| if i == 0 { Poly::zero() } else { Poly::var(i) * alpha.clone() }).exp::<C>().coeff(n)
}

/// `h^{(k)}_n = [α^k] h_n(αX)`.
pub fn h_k<C: Field>(n: usize, k: usize) -> Poly<C> {
    scaled_h::<C>(n).coeff_of_var(0, k as u32)
}

/// A specialization of `Sym`, recorded by `c_1, ..., c_N`. Everything
/// past degree `N` is unknown, and operations keep the smaller bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualAlphabet {
    c: Vec<Rational>,
}

impl VirtualAlphabet {
    /// `c[n-1] = c_n(X)`.
    pub fn from_c(c: Vec<Rational>) -> Self {
        VirtualAlphabet { c }
    }

    /// From `h_0 = 1, h_1, ..., h_N`.
    pub fn from_h(h: &[Rational]) -> Result<Self> {
        if h.first().map(|x| x.is_one()) != Some(true) {
            return Err(Error::InvalidSequence("h_0 must be 1".into()));
        }
        let n = h.len() - 1;
        let l = Series::new(h.to_vec(), n).log::<Rational>();
        Ok(VirtualAlphabet { c: l.coeffs()[1..].to_vec() })
    }

    pub fn zero(order: usize) -> Self {
        VirtualAlphabet { c: vec![Rational::zero(); order] }
    }

    /// `σ_t(Y) = 1`, the neutral alphabet for [`VirtualAlphabet::compose`].
    pub fn identity(order: usize) -> Self {
        Self::zero(order)
    }

    /// `c_n(𝟏) = 1/n`, so that `h_n(𝟏) = 1`.
    pub fn ones(order: usize) -> Self {
        VirtualAlphabet { c: (1..=order).map(|n| rat(1, n as i64)).collect() }
    }

    /// `X^{(a)}`: `c_n = a_n / n!`, so `h_n = A_n(a)/n!`.
    pub fn of_sequence(a: &[Rational]) -> Self {
        VirtualAlphabet { c: a.iter().enumerate().map(|(i, x)| x / factorial_in::<Rational>(i + 1)).collect() }
    }

    /// `X̂^{(a)}`: `h_{i-1} = a_i / i!`; requires `a_1 = 1`. Order `len - 1`.
    pub fn hat(a: &[Rational]) -> Result<Self> {
        let h: Vec<Rational> = a.iter().enumerate().map(|(i, x)| x / factorial_in::<Rational>(i + 1)).collect();
        Self::from_h(&h)
    }

    pub fn order(&self) -> usize {
        self.c.len()
    }

    pub fn c(&self, n: usize) -> Rational {
        if n == 0 {
            return Rational::zero();
        }
        self.c.get(n - 1).cloned().unwrap_or_else(Rational::zero)
    }

    /// `σ_t(X) = exp(Σ c_n t^n)`.
    pub fn sigma(&self) -> Series<Rational> {
        Series::from_fn(self.order(), |n| self.c(n)).exp::<Rational>()
    }

    pub fn h(&self, n: usize) -> Rational {
        self.sigma().coeff(n)
    }

    /// `Σ e_n t^n = 1 / σ_{-t}(X)`.
    pub fn e_series(&self) -> Series<Rational> {
        Series::from_fn(self.order(), |n| if n % 2 == 0 { -self.c(n) } else { self.c(n) }).exp::<Rational>()
    }

    /// Substitutes `c_i ↦ c_i(X)`.
    pub fn eval(&self, x: &Poly<Rational>) -> Rational {
        x.eval(|i| self.c(i))
    }

    /// `[α^k] h_n(αX) = [t^n] (Σ c_i t^i)^k / k!`.
    pub fn h_k(&self, n: usize, k: usize) -> Rational {
        let f = Series::from_fn(n, |i| self.c(i)).pow(k);
        f.coeff(n) / factorial_in::<Rational>(k)
    }

    pub fn sum(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        VirtualAlphabet { c: (1..=n).map(|i| self.c(i) + other.c(i)).collect() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        VirtualAlphabet { c: self.c.iter().map(|x| x * r).collect() }
    }

    /// `p_n(XY) = p_n(X) p_n(Y)`, so `c_n(XY) = n c_n(X) c_n(Y)`.
    pub fn product(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        VirtualAlphabet { c: (1..=n).map(|i| int(i as i64) * self.c(i) * other.c(i)).collect() }
    }

    /// `t σ_t(X)`, order `N + 1`.
    fn shifted_sigma(&self, n: usize) -> Series<Rational> {
        let s = Series::from_fn(n, |i| self.c(i)).exp::<Rational>();
        Series::new(s.into_coeffs(), n + 1).shift(1)
    }

    /// `σ_t(X∘Y) = f(g(t))/t` with `f = tσ_t(X)`, `g = tσ_t(Y)`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let fg = self.shifted_sigma(n).compose(&other.shifted_sigma(n));
        Self::from_h(&fg.coeffs()[1..]).expect("leading coefficient 1")
    }

    /// `X^{⟨-1⟩}` with `σ_t(X∘X^{⟨-1⟩}) = 1`: the compositional inverse of
    /// `tσ_t(X)`, solved one coefficient at a time.
    pub fn inverse(&self) -> Self {
        let n = self.order();
        let f = self.shifted_sigma(n);
        let mut g = Series::new(vec![Rational::zero(), Rational::one()], n + 1);
        for m in 2..=n + 1 {
            let defect = f.compose(&g).coeff(m);
            let mut c = g.clone().into_coeffs();
            c[m] = -defect;
            g = Series::new(c, n + 1);
        }
        Self::from_h(&g.coeffs()[1..]).expect("leading coefficient 1")
    }
}

/// `s_λ = det |h_{λ_i - i + j}|`.
pub fn schur(lambda: &[usize], x: &VirtualAlphabet) -> Rational {
    let s = x.sigma();
    jacobi_trudi(lambda, |m| s.coeff(m))
}

/// `det |h(λ_i - i + j)|`, `h` vanishing at negative arguments.
pub fn jacobi_trudi(lambda: &[usize], h: impl Fn(usize) -> Rational) -> Rational {
    let l = lambda.len();
    let m: Vec<Vec<Rational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = lambda[i] as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        Rational::zero()
                    } else {
                        h(idx as usize)
                    }
                })
                .collect()
        })
        .collect();
    det(m)
}

/// Determinant by Gaussian elimination.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            d = -d;
        }
        let pivot = m[col][col].clone();
        d *= &pivot;
        for r in col + 1..n {
            let f = &m[r][col] / &pivot;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = &m[col][c] * &f;
                m[r][c] -= v;
            }
        }
    }
    d
}

/// `h_n(X^{⟨-1⟩}) = n!/(2n+1)! B_{2n+1,n+1}(y)` with
/// `y_i = (-1)^{i-1} i! e_{i-1}(X)`.
pub fn inverse_closed_form(x: &VirtualAlphabet, n: usize) -> Rational {
    let y = inverse_argument(x, 2 * n + 1);
    factorial_in::<Rational>(n) / factorial_in::<Rational>(2 * n + 1) * eval_partial_bell(&y, 2 * n + 1, n + 1)
}

/// `n!/((2n+1)!(n+1)) B_{2n+1,n}(y)`: the same argument with the index
/// `n` and the extra `1/(n+1)`.
pub fn inverse_closed_form_uncorrected(x: &VirtualAlphabet, n: usize) -> Rational {
    let y = inverse_argument(x, 2 * n + 1);
    factorial_in::<Rational>(n) / (factorial_in::<Rational>(2 * n + 1) * int(n as i64 + 1))
        * eval_partial_bell(&y, 2 * n + 1, n)
}

fn inverse_argument(x: &VirtualAlphabet, len: usize) -> Vec<Rational> {
    let e = x.e_series();
    (1..=len)
        .map(|i| {
            let v = factorial_in::<Rational>(i) * e.coeff(i - 1);
            if i % 2 == 0 {
                -v
            } else {
                v
            }
        })
        .collect()
}

fn seq(a: &[Rational], i: usize) -> Rational {
    if i == 0 {
        return Rational::zero();
    }
    a.get(i - 1).cloned().unwrap_or_else(Rational::zero)
}

fn binom(n: usize, k: usize) -> Rational {
    binomial_in(n as i64, k as i64)
}

fn fact(n: usize) -> Rational {
    factorial_in(n)
}

fn range_nk(max_n: usize, k_min: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=max_n).flat_map(move |n| (k_min..=n).map(move |k| (n, k)))
}

/// Seeds of the random sequences used by the suites.
const SEEDS: [u64; 2] = [11, 29];

/// Checks of the alphabet calculus itself.
pub fn alphabet_suite(max_n: usize) -> Report {
    let mut r = Report::new("symmetric functions and alphabets");
    let a = random::rationals(SEEDS[0], max_n.max(1) + 2);
    let b = random::rationals(SEEDS[1], max_n.max(1) + 2);
    let x = VirtualAlphabet::from_c(a.clone());
    let y = VirtualAlphabet::from_c(b.clone());

    r.push(Check::run(
        "c_n(h_1, h_2, ...) after h_i(c_1, c_2, ...) gives c_n",
        format!("n <= {max_n}"),
        (0..=max_n).map(|n| {
            let back = c_from_h::<Rational>(n).substitute(h_from_c::<Rational>);
            let want = if n == 0 { Poly::zero() } else { Poly::var(n) };
            expect_eq(format!("n = {n}"), &back, &want)
        }),
    ));
    r.push(Check::run(
        "n! h_n = A_n(1!c_1, 2!c_2, ...)",
        format!("n <= {max_n}"),
        (0..=max_n).map(|n| {
            let a = crate::bell::complete_bell::<Rational>(n).substitute(|i| Poly::var(i).scale(&fact(i)));
            expect_eq(format!("n = {n}"), &h_from_c::<Rational>(n).scale(&fact(n)), &a)
        }),
    ));
    r.push(Check::run(
        "h_n(𝟏) = 1",
        format!("n <= {max_n}"),
        (0..=max_n).map(|n| expect_eq(format!("n = {n}"), &VirtualAlphabet::ones(max_n).h(n), &Rational::one())),
    ));
    r.push(Check::run(
        "h_n(X^(a)) = A_n(a)/n!",
        format!("n <= {max_n}, random a"),
        (0..=max_n).map(|n| {
            expect_eq(format!("n = {n}"), &VirtualAlphabet::of_sequence(&a).h(n), &(eval_complete_bell(&a, n) / fact(n)))
        }),
    ));
    r.push(Check::run(
        "n! h^(k)_n(X^(a)) = B_{n,k}(a), symbolically and evaluated",
        format!("n <= {max_n}, random a"),
        range_nk(max_n, 0).map(|(n, k)| {
            let xa = VirtualAlphabet::of_sequence(&a);
            let want = eval_partial_bell(&a, n, k);
            expect_eq(format!("n = {n}, k = {k}"), &(xa.h_k(n, k) * fact(n)), &want)?;
            expect_eq(format!("n = {n}, k = {k} (symbolic)"), &(xa.eval(&h_k(n, k)) * fact(n)), &want)
        }),
    ));
    r.push(Check::run(
        "h_n(X+Y) = Σ h_i(X) h_{n-i}(Y)",
        format!("n <= {max_n}, random X, Y"),
        (0..=max_n).map(|n| {
            let rhs = (0..=n).fold(Rational::zero(), |s, i| s + x.h(i) * y.h(n - i));
            expect_eq(format!("n = {n}"), &x.sum(&y).h(n), &rhs)
        }),
    ));
    r.push(Check::run(
        "σ_t(kX) = σ_t(X)^k",
        format!("k <= 3, degree <= {max_n}"),
        (0..=3).map(|k| expect_eq(format!("k = {k}"), &x.scale(&int(k as i64)).sigma(), &x.sigma().pow(k))),
    ));
    r.push(Check::run(
        "h_n(XY) = Σ_{λ ⊢ n} s_λ(X) s_λ(Y)",
        format!("n <= {}, random X, Y", max_n.min(5)),
        (0..=max_n.min(5)).map(|n| {
            let rhs = integer_partitions(n).iter().fold(Rational::zero(), |s, l| s + schur(l, &x) * schur(l, &y));
            expect_eq(format!("n = {n}"), &x.product(&y).h(n), &rhs)
        }),
    ));
    r.push(Check::run(
        "X∘Y with σ_t(Y) = 1 is X",
        format!("degree <= {max_n}"),
        std::iter::once(expect_eq("compose", &x.compose(&VirtualAlphabet::identity(x.order())), &x)),
    ));
    r.push(Check::run(
        "σ_t(X∘X^⟨-1⟩) = 1",
        format!("degree <= {max_n}"),
        std::iter::once(expect_eq("inverse", &x.compose(&x.inverse()), &VirtualAlphabet::identity(x.order()))),
    ));
    // the closed forms need e_i up to 2n, and the inverse is only known to
    // the order of X
    let xi = VirtualAlphabet::from_c(random::rationals(SEEDS[0], 2 * max_n.min(5) + 2));
    let inv = xi.inverse();
    r.document(
        Check::run(
            "h_n(X^⟨-1⟩) = n!/((2n+1)!(n+1)) B_{2n+1,n}(1, -2!e_1, 3!e_2, ...), literal",
            format!("1 <= n <= {}", max_n.min(5)),
            (1..=max_n.min(5)).map(|n| expect_eq(format!("n = {n}"), &inverse_closed_form_uncorrected(&xi, n), &inv.h(n))),
        )
        .with_note("Lagrange inversion gives index n+1 and no extra 1/(n+1)"),
    );
    r.push(Check::run(
        "h_n(X^⟨-1⟩) = n!/(2n+1)! B_{2n+1,n+1}(1, -2!e_1, 3!e_2, ...), corrected",
        format!("n <= {}", max_n.min(5)),
        (0..=max_n.min(5)).map(|n| expect_eq(format!("n = {n}"), &inverse_closed_form(&xi, n), &inv.h(n))),
    ));
    r
}

/// Range bounds of the appendix identities.
#[derive(Clone, Copy, Debug)]
pub struct AppendixRanges {
    pub hat: usize,
    pub binomial: usize,
    pub convolution: usize,
    pub idempotent: usize,
    pub binomial_families: usize,
    pub recurrence: usize,
    pub lambert: usize,
    pub determinants: usize,
    pub lagrange: usize,
}

impl AppendixRanges {
    pub const DEFAULT: AppendixRanges = AppendixRanges {
        hat: 8,
        binomial: 7,
        convolution: 7,
        idempotent: 8,
        binomial_families: 6,
        recurrence: 7,
        lambert: 8,
        determinants: 5,
        lagrange: 7,
    };

    /// Every bound capped at `cap`.
    pub fn capped(cap: usize) -> Self {
        let d = Self::DEFAULT;
        AppendixRanges {
            hat: d.hat.min(cap),
            binomial: d.binomial.min(cap),
            convolution: d.convolution.min(cap),
            idempotent: d.idempotent.min(cap),
            binomial_families: d.binomial_families.min(cap),
            recurrence: d.recurrence.min(cap),
            lambert: d.lambert.min(cap),
            determinants: d.determinants.min(cap),
            lagrange: d.lagrange.min(cap),
        }
    }
}

/// The nine Bell polynomial identities derived through alphabets, each at
/// its own range. Where the stated form and a corrected form differ, both
/// are reported.
pub fn appendix_suite(r: AppendixRanges) -> Report {
    let mut rep = Report::new("Bell polynomials through symmetric functions");
    rep.push(hat_identity(r.hat));
    rep.push(binomial_identity(r.binomial));
    rep.push(convolution_literal(r.convolution));
    rep.push(convolution_corrected(r.convolution));
    rep.push(idempotent_identity(r.idempotent));
    rep.push(binomial_family_identity(r.binomial_families));
    rep.push(bell_of_bell_literal(r.binomial_families));
    rep.push(bell_of_bell_corrected(r.binomial_families));
    rep.push(recurrence_literal(r.recurrence));
    rep.push(recurrence_corrected(r.recurrence));
    rep.push(lambert_identity(r.lambert));
    rep.document(determinant_sequence_literal(r.determinants));
    rep.push(determinant_sequence_corrected(r.determinants));
    rep.push(determinant_bell_literal(r.determinants));
    rep.push(determinant_bell_corrected(r.determinants));
    rep.push(lagrange_identity(r.lagrange));
    rep
}

fn hat_identity(max_n: usize) -> Check {
    let a = random::normalized(SEEDS[0], max_n + 1);
    let xh = VirtualAlphabet::hat(&a).expect("a_1 = 1");
    Check::run(
        "B_{n,k}(a) = n!/k! h_{n-k}(kX̂^(a))",
        format!("n <= {max_n}, random a with a_1 = 1"),
        range_nk(max_n, 0).map(|(n, k)| {
            let rhs = fact(n) / fact(k) * xh.scale(&int(k as i64)).h(n - k);
            expect_eq(format!("n = {n}, k = {k}"), &eval_partial_bell(&a, n, k), &rhs)
        }),
    )
}

fn binomial_identity(max_n: usize) -> Check {
    let a = random::normalized(SEEDS[0], max_n);
    let t = bell_table(&a, max_n);
    let b = |n: usize, k: usize| if k <= n { t[n][k].clone() } else { Rational::zero() };
    let cases = (0..=max_n).flat_map(|n| (0..=n).flat_map(move |k1| (0..=n - k1).map(move |k2| (n, k1, k2))));
    Check::run(
        "binom(k1+k2,k1) B_{n,k1+k2} = Σ_i binom(n,i) B_{i,k1} B_{n-i,k2}",
        format!("n <= {max_n}, random a"),
        cases.map(|(n, k1, k2)| {
            let rhs = (0..=n).fold(Rational::zero(), |s, i| s + binom(n, i) * b(i, k1) * b(n - i, k2));
            expect_eq(format!("n = {n}, k1 = {k1}, k2 = {k2}"), &(binom(k1 + k2, k1) * b(n, k1 + k2)), &rhs)
        }),
    )
}

/// `c_m = (1/(m+1)) Σ_{i=1}^{m} binom(m+1,i) a_i b_{m+1-i}`, i.e.
/// `X̂^(c) = X̂^(a) + X̂^(b)`.
fn convolution_sequence(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    (1..=len)
        .map(|m| {
            let s = (1..=m).fold(Rational::zero(), |s, i| s + binom(m + 1, i) * seq(a, i) * seq(b, m + 1 - i));
            s / int(m as i64 + 1)
        })
        .collect()
}

fn convolution_check(max_n: usize, literal: bool) -> Check {
    let a = random::normalized(SEEDS[0], max_n);
    let b = random::normalized(SEEDS[1], max_n);
    let c = convolution_sequence(&a, &b, max_n);
    let (ta, tb, tc) = (bell_table(&a, max_n), bell_table(&b, max_n), bell_table(&c, max_n));
    let get = |t: &Vec<Vec<Rational>>, n: usize, k: usize| if k <= n { t[n][k].clone() } else { Rational::zero() };
    let cases = range_nk(max_n, 0).map(|(n, k)| {
        let lhs = binom(n, k) * get(&tc, n - k, k);
        let rhs = if literal {
            (k..=n.saturating_sub(k)).fold(Rational::zero(), |s, i| s + binom(n, i) * get(&ta, i, k) * get(&tb, i, k))
        } else {
            (0..=n).fold(Rational::zero(), |s, i| s + binom(n, i) * get(&ta, i, k) * get(&tb, n - i, k))
        };
        expect_eq(format!("n = {n}, k = {k}"), &lhs, &rhs)
    });
    let range = format!("n <= {max_n}, random a, b with a_1 = b_1 = 1");
    if literal {
        Check::run("Bell convolution, literal: binom(n,k) B_{n-k,k}(c) = Σ_{i=k}^{n-k} binom(n,i) B_{i,k}(a) B_{i,k}(b)", range, cases)
            .with_note("the second factor must carry index n-i, not i")
    } else {
        Check::run("Bell convolution, corrected: binom(n,k) B_{n-k,k}(c) = Σ_i binom(n,i) B_{i,k}(a) B_{n-i,k}(b)", range, cases)
    }
}

fn convolution_literal(max_n: usize) -> Check {
    convolution_check(max_n, true)
}

fn convolution_corrected(max_n: usize) -> Check {
    convolution_check(max_n, false)
}

fn idempotent_identity(max_n: usize) -> Check {
    let a: Vec<Rational> = (1..=max_n.max(1)).map(|i| int(i as i64)).collect();
    let xh = VirtualAlphabet::hat(&a).expect("a_1 = 1");
    Check::run(
        "B_{n,k}(1,2,3,...) = binom(n,k) k^{n-k} = n!/k! h_{n-k}(kX̂)",
        format!("n <= {max_n}"),
        range_nk(max_n, 0).map(|(n, k)| {
            let closed = binom(n, k) * pow(&int(k as i64), n - k);
            expect_eq(format!("n = {n}, k = {k}"), &eval_partial_bell(&a, n, k), &closed)?;
            expect_eq(format!("n = {n}, k = {k} (alphabet)"), &(fact(n) / fact(k) * xh.scale(&int(k as i64)).h(n - k)), &closed)
        }),
    )
}

/// Binomial families `f_n(x)`: `f_0 = 1`, `f_n(x+y) = Σ binom(n,k) f_k(x) f_{n-k}(y)`.
#[derive(Clone, Debug)]
pub enum BinomialFamily {
    Power,
    Rising,
    /// `x (x + b n)^{n-1}`.
    Abel(Rational),
    /// `F_m(x) = B_{m+x,x}(a) / binom(m+x,x)`, for integer `x`.
    Induced(Vec<Rational>),
}

impl BinomialFamily {
    pub fn eval(&self, n: usize, x: &Rational) -> Rational {
        match self {
            BinomialFamily::Power => pow(x, n),
            BinomialFamily::Rising => (0..n).fold(Rational::one(), |p, i| p * (x + int(i as i64))),
            BinomialFamily::Abel(b) => {
                if n == 0 {
                    Rational::one()
                } else {
                    x * pow(&(x + b * int(n as i64)), n - 1)
                }
            }
            BinomialFamily::Induced(a) => {
                assert!(x.is_integer() && *x >= Rational::zero(), "induced family needs a nonnegative integer");
                let k = x.to_integer().try_into().expect("small");
                if n == 0 {
                    return Rational::one();
                }
                eval_partial_bell(a, n + k, k) / binom(n + k, k)
            }
        }
    }

    fn name(&self) -> &'static str {
        match self {
            BinomialFamily::Power => "x^n",
            BinomialFamily::Rising => "rising factorial",
            BinomialFamily::Abel(_) => "Abel",
            BinomialFamily::Induced(_) => "B_{m+x,x}(a)/binom(m+x,x)",
        }
    }
}

fn binomial_family_identity(max_n: usize) -> Check {
    let a = random::normalized(SEEDS[0], 3 * max_n + 3);
    let families = [
        (BinomialFamily::Power, rat(3, 2)),
        (BinomialFamily::Rising, rat(-2, 3)),
        (BinomialFamily::Abel(rat(5, 4)), rat(7, 3)),
        (BinomialFamily::Induced(a), int(2)),
    ];
    let cases = families.into_iter().flat_map(move |(f, x)| {
        range_nk(max_n, 0).map(move |(n, k)| {
            let args: Vec<Rational> = (1..=n).map(|i| int(i as i64) * f.eval(i - 1, &x)).collect();
            let rhs = binom(n, k) * f.eval(n - k, &(int(k as i64) * &x));
            expect_eq(format!("{}, x = {x}, n = {n}, k = {k}", f.name()), &eval_partial_bell(&args, n, k), &rhs)
        })
    });
    Check::run(
        "B_{n,k}(1, ..., i f_{i-1}(x), ...) = binom(n,k) f_{n-k}(kx) for binomial families",
        format!("n <= {max_n}; x^n, rising factorial, Abel, induced"),
        cases,
    )
}

const BOB_K: usize = 3;

fn bob_cases(max_n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=max_n).flat_map(|n| (1..=BOB_K).flat_map(move |k1| (1..=BOB_K).map(move |k2| (n, k1, k2))))
}

/// `binom(n,k1k2)^{-1} B_{n,k1}(1, ..., i binom(i-1,k2)^{-1} B_{i-1,k2}(a), ...)
/// = binom(n-k1,k1k2)^{-1} B_{n-k1,k1k2}(a)`, with the free `k` of the
/// stated form read as `k2`. Argument `i` with `binom(i-1,k2) = 0` is taken
/// as 0 (its Bell factor vanishes too), and cases with a vanishing outer
/// binomial are skipped.
fn bell_of_bell_literal(max_n: usize) -> Check {
    let a = random::normalized(SEEDS[0], 3 * max_n + 3);
    let t = bell_table(&a, 3 * max_n + 3);
    let cases = bob_cases(max_n).filter_map(move |(n, k1, k2)| {
        let k = k1 * k2;
        if n < k || n < k1 || n - k1 < k {
            return None;
        }
        let args: Vec<Rational> = (1..=n)
            .map(|i| {
                if i == 1 {
                    Rational::one()
                } else if i - 1 < k2 {
                    Rational::zero()
                } else {
                    int(i as i64) * t[i - 1][k2].clone() / binom(i - 1, k2)
                }
            })
            .collect();
        let lhs = eval_partial_bell(&args, n, k1) / binom(n, k);
        let rhs = t[n - k1][k].clone() / binom(n - k1, k);
        Some(expect_eq(format!("n = {n}, k1 = {k1}, k2 = {k2}"), &lhs, &rhs))
    });
    Check::run(
        "Bell of Bell, literal: binom(n,k1k2)^-1 B_{n,k1}(..., i binom(i-1,k2)^-1 B_{i-1,k2}(a), ...) = binom(n-k1,k1k2)^-1 B_{n-k1,k1k2}(a)",
        format!("n <= {max_n}, 1 <= k1, k2 <= {BOB_K}"),
        cases,
    )
    .with_note("the binomial family induced by a is F_m(x) = B_{m+x,x}(a)/binom(m+x,x), not binom(m,x)^-1 B_{m,x}(a)")
}

/// `binom(n,k1)^{-1} B_{n,k1}(i F_{i-1}(k2)) = binom(N,k1k2)^{-1} B_{N,k1k2}(a)`
/// with `N = n - k1 + k1k2` and `F` the family induced by `a`.
fn bell_of_bell_corrected(max_n: usize) -> Check {
    let a = random::normalized(SEEDS[0], 3 * max_n + 3);
    let f = BinomialFamily::Induced(a.clone());
    let t = bell_table(&a, (BOB_K + 1) * max_n + 1);
    let cases = bob_cases(max_n).filter(|&(n, k1, _)| n >= k1).map(move |(n, k1, k2)| {
        let k = k1 * k2;
        let args: Vec<Rational> = (1..=n).map(|i| int(i as i64) * f.eval(i - 1, &int(k2 as i64))).collect();
        let lhs = eval_partial_bell(&args, n, k1) / binom(n, k1);
        let big = n - k1 + k;
        let rhs = t[big][k].clone() / binom(big, k);
        expect_eq(format!("n = {n}, k1 = {k1}, k2 = {k2}"), &lhs, &rhs)
    });
    Check::run(
        "Bell of Bell, corrected: binom(n,k1)^-1 B_{n,k1}(..., i F_{i-1}(k2), ...) = binom(N,k1k2)^-1 B_{N,k1k2}(a), N = n-k1+k1k2",
        format!("k1 <= n <= {max_n}, 1 <= k1, k2 <= {BOB_K}"),
        cases,
    )
}

fn recurrence_check(max_n: usize, literal: bool) -> Check {
    let a = random::normalized(SEEDS[0], max_n + 1);
    let t = bell_table(&a, max_n);
    let cases = (0..=max_n).flat_map(|n| (0..n).map(move |k| (n, k))).map(move |(n, k)| {
        let sum = (1..=n - k).fold(Rational::zero(), |s, i| {
            let w = int(k as i64 + 1) - rat(n as i64 + 1, i as i64 + 1);
            let arg = if literal { int(i as i64 + 1) * seq(&a, i) } else { seq(&a, i + 1) };
            s + binom(n, i) * w * arg * t[n - i][k].clone()
        });
        expect_eq(format!("n = {n}, k = {k}"), &t[n][k], &(sum / int((n - k) as i64)))
    });
    let range = format!("0 <= k < n <= {max_n}, random a with a_1 = 1");
    if literal {
        Check::run("B_{n,k} = 1/(n-k) Σ_i binom(n,i) [(k+1) - (n+1)/(i+1)] (i+1) a_i B_{n-i,k}, literal", range, cases)
            .with_note("h_i(X̂) = a_{i+1}/(i+1)! turns i h_i into a_{i+1} after the factorials cancel")
    } else {
        Check::run("B_{n,k} = 1/(n-k) Σ_i binom(n,i) [(k+1) - (n+1)/(i+1)] a_{i+1} B_{n-i,k}, corrected", range, cases)
    }
}

fn recurrence_literal(max_n: usize) -> Check {
    recurrence_check(max_n, true)
}

fn recurrence_corrected(max_n: usize) -> Check {
    recurrence_check(max_n, false)
}

fn lambert_identity(max_n: usize) -> Check {
    let a: Vec<Rational> = (1..=max_n.max(1)).map(|m| pow(&int(m as i64), m - 1)).collect();
    Check::run(
        "B_{n,k}(1, 2, 3^2, ..., m^{m-1}, ...) = binom(n-1,k-1) n^{n-k}",
        format!("1 <= k <= n <= {max_n}"),
        range_nk(max_n, 1).filter(|&(n, _)| n >= 1).map(|(n, k)| {
            let closed = binom(n - 1, k - 1) * pow(&int(n as i64), n - k);
            expect_eq(format!("n = {n}, k = {k}"), &eval_partial_bell(&a, n, k), &closed)
        }),
    )
}

/// `det |a_{λ_i-i+j+1} / f(λ, i, j)!|` with `a_m = 0` for `m <= 0`.
fn seq_det(lambda: &[usize], a: &[Rational], factorial_index: impl Fn(usize, usize) -> i64) -> Rational {
    let l = lambda.len();
    let m = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = lambda[i] as i64 - (i as i64 + 1) + (j as i64 + 1) + 1;
                    if idx <= 0 {
                        Rational::zero()
                    } else {
                        seq(a, idx as usize) / fact(factorial_index(i + 1, j + 1) as usize)
                    }
                })
                .collect()
        })
        .collect();
    det(m)
}

/// `d_n = n! Σ_{λ ⊢ n-1} det|a_{λ_i-i+j+1}/(…)!| det|b_{λ_i-i+j+1}/(…)!|`
/// with the factorial of the subscript (`corrected`) or of `λ_i+j+1`.
pub fn determinant_sequence(a: &[Rational], b: &[Rational], len: usize, corrected: bool) -> Vec<Rational> {
    (1..=len)
        .map(|n| {
            let s = integer_partitions(n - 1).iter().fold(Rational::zero(), |s, l| {
                let fi = |i: usize, j: usize| {
                    if corrected {
                        l[i - 1] as i64 - i as i64 + j as i64 + 1
                    } else {
                        l[i - 1] as i64 + j as i64 + 1
                    }
                };
                s + seq_det(l, a, fi) * seq_det(l, b, fi)
            });
            fact(n) * s
        })
        .collect()
}

fn determinant_sequence_check(max_n: usize, corrected: bool) -> Check {
    let a = random::normalized(SEEDS[0], max_n);
    let b = random::normalized(SEEDS[1], max_n);
    let d = determinant_sequence(&a, &b, max_n, corrected);
    // d_n / n! = h_{n-1}(X̂^(a) X̂^(b))
    let prod = VirtualAlphabet::hat(&a).unwrap().product(&VirtualAlphabet::hat(&b).unwrap());
    let cases = (1..=max_n).map(move |n| expect_eq(format!("n = {n}"), &d[n - 1], &(fact(n) * prod.h(n - 1))));
    let range = format!("n <= {max_n}, random a, b with a_1 = b_1 = 1");
    if corrected {
        Check::run("d_n = n! Σ_λ det|a_{λ_i-i+j+1}/(λ_i-i+j+1)!| det|b_...| = n! h_{n-1}(X̂^(a) X̂^(b)), corrected factorial", range, cases)
    } else {
        Check::run("d_n = n! Σ_λ det|a_{λ_i-i+j+1}/(λ_i+j+1)!| det|b_...| = n! h_{n-1}(X̂^(a) X̂^(b)), literal factorial", range, cases)
            .with_note("the entries must be h_{λ_i-i+j}(X̂) = a_{λ_i-i+j+1}/(λ_i-i+j+1)!")
    }
}

fn determinant_sequence_literal(max_n: usize) -> Check {
    determinant_sequence_check(max_n, false)
}

fn determinant_sequence_corrected(max_n: usize) -> Check {
    determinant_sequence_check(max_n, true)
}

/// `det |B_{λ_i-i+j+k,k}(a) / (λ_i-i+j+k)!|`.
fn bell_det(lambda: &[usize], table: &[Vec<Rational>], k: usize) -> Rational {
    let l = lambda.len();
    let m = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = lambda[i] as i64 - i as i64 + j as i64 + k as i64;
                    if idx < k as i64 {
                        Rational::zero()
                    } else {
                        let idx = idx as usize;
                        table[idx][k].clone() / fact(idx)
                    }
                })
                .collect()
        })
        .collect();
    det(m)
}

const DET_K: [(usize, usize); 6] = [(1, 1), (1, 2), (2, 1), (1, 4), (2, 2), (4, 1)];

fn determinant_bell_check(max_n: usize, corrected: bool) -> Check {
    let a = random::normalized(SEEDS[0], max_n + 4);
    let b = random::normalized(SEEDS[1], max_n + 4);
    let d = determinant_sequence(&a, &b, max_n, true);
    let (ta, tb) = (bell_table(&a, max_n + 4), bell_table(&b, max_n + 4));
    let cases = (0..=max_n).flat_map(|n| DET_K.iter().map(move |&(k1, k2)| (n, k1, k2))).filter(|&(n, k1, k2)| k1 * k2 <= n).map(
        move |(n, k1, k2)| {
            let k = k1 * k2;
            let second = if corrected { (&tb, k2) } else { (&tb, k1) };
            let s = integer_partitions(n - k).iter().fold(Rational::zero(), |s, l| {
                let w = pow(&(fact(k1) * fact(second.1)), l.len());
                s + w * bell_det(l, &ta, k1) * bell_det(l, second.0, second.1)
            });
            let rhs = fact(n) / fact(k) * s;
            expect_eq(format!("n = {n}, k1 = {k1}, k2 = {k2}"), &eval_partial_bell(&d, n, k), &rhs)
        },
    );
    let range = format!("n <= {max_n}, k = k1k2 in {{1, 2, 4}}");
    if corrected {
        Check::run(
            "B_{n,k}(d) = n!/k! Σ_λ (k1!k2!)^ℓ(λ) det|B_{λ_i-i+j+k1,k1}(a)/(…)!| det|B_{λ_i-i+j+k2,k2}(b)/(…)!|, corrected",
            range,
            cases,
        )
    } else {
        Check::run(
            "B_{n,k}(d) = n!/k! Σ_λ (k1!k2!)^ℓ(λ) det|B_{λ_i-i+j+k1,k1}(a)/(…)!| det|B_{λ_i-i+j+k1,k1}(b)/(…)!|, literal",
            range,
            cases,
        )
        .with_note("the b determinant comes from s_λ(k2 X̂^(b)) and must use k2; the weight is then (k1!)^ℓ (k2!)^ℓ")
    }
}

fn determinant_bell_literal(max_n: usize) -> Check {
    determinant_bell_check(max_n, false)
}

fn determinant_bell_corrected(max_n: usize) -> Check {
    determinant_bell_check(max_n, true)
}

fn lagrange_identity(max_n: usize) -> Check {
    let x = VirtualAlphabet::from_c(random::rationals(SEEDS[0], max_n.max(1)));
    let args: Vec<Rational> = (1..=max_n).map(|m| fact(m - 1) * x.scale(&int(m as i64)).h(m - 1)).collect();
    Check::run(
        "B_{n,k}(1, h_1(2X), ..., (m-1)! h_{m-1}(mX), ...) = (n-1)!/(k-1)! h_{n-k}(nX)",
        format!("1 <= k <= n <= {max_n}, random X"),
        range_nk(max_n, 1).map(|(n, k)| {
            let rhs = fact(n - 1) / fact(k - 1) * x.scale(&int(n as i64)).h(n - k);
            expect_eq(format!("n = {n}, k = {k}"), &eval_partial_bell(&args, n, k), &rhs)
        }),
    )
}

/// Symbolic `B_{n,k}` under `x_i ↦ i! c_i` equals `n! h^{(k)}_n`.
pub fn bell_as_h_k(n: usize, k: usize) -> bool {
    let lhs = partial_bell::<Rational>(n, k).substitute(|i| Poly::var(i).scale(&fact(i)));
    lhs == h_k::<Rational>(n, k).scale(&fact(n))
}
