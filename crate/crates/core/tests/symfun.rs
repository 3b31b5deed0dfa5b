use num_traits::{One, Zero};
use proptest::prelude::*;
use wordbell::bell::eval_partial_bell;
use wordbell::scalar::{int, rat};
use wordbell::symfun::*;
use wordbell::Rational;

/// The alphabet of the given letters: `c_n = p_n / n`.
fn letters(xs: &[Rational], order: usize) -> VirtualAlphabet {
    VirtualAlphabet::from_c(
        (1..=order).map(|n| xs.iter().fold(Rational::zero(), |acc, x| acc + num_traits::pow(x.clone(), n)) / int(n as i64)).collect(),
    )
}

/// Complete homogeneous `h_n` by summing all monomials of degree `n`.
fn h_brute(xs: &[Rational], n: usize) -> Rational {
    fn go(xs: &[Rational], n: usize) -> Rational {
        match (xs.split_first(), n) {
            (_, 0) => Rational::one(),
            (None, _) => Rational::zero(),
            (Some((x, rest)), _) => (0..=n).map(|e| num_traits::pow(x.clone(), e) * go(rest, n - e)).fold(Rational::zero(), |a, b| a + b),
        }
    }
    go(xs, n)
}

fn ratio() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

#[test]
fn finite_alphabet_h_and_schur() {
    let xs = [int(2), rat(-1, 3), int(5)];
    let x = letters(&xs, 8);
    for n in 0..=8 {
        assert_eq!(x.h(n), h_brute(&xs, n), "h_{n}");
    }
    // s_{1,1} = e_2 and s_{2,1} on three letters
    let e2 = &xs[0] * &xs[1] + &xs[0] * &xs[2] + &xs[1] * &xs[2];
    assert_eq!(schur(&[1, 1], &x), e2);
    assert_eq!(x.e_series().coeff(2), e2);
    let s21 = x.h(2) * x.h(1) - x.h(3);
    assert_eq!(schur(&[2, 1], &x), s21);
    // four parts on three letters vanish
    assert!(schur(&[1, 1, 1, 1], &x).is_zero());
}

#[test]
fn c_and_h_are_inverse() {
    for n in 0..=8 {
        let back = c_from_h::<Rational>(n).substitute(h_from_c::<Rational>);
        let want = if n == 0 { wordbell::poly::Poly::zero() } else { wordbell::poly::Poly::var(n) };
        assert_eq!(back, want, "n = {n}");
    }
}

#[test]
fn ones_and_zero_alphabets() {
    let one = VirtualAlphabet::ones(DEFAULT_ORDER);
    let zero = VirtualAlphabet::zero(DEFAULT_ORDER);
    for n in 0..=DEFAULT_ORDER {
        assert_eq!(one.h(n), Rational::one());
        assert_eq!(zero.h(n), if n == 0 { Rational::one() } else { Rational::zero() });
    }
}

#[test]
fn appendix_closed_form_examples() {
    let idem: Vec<Rational> = (1..=4).map(int).collect();
    assert_eq!(eval_partial_bell(&idem, 4, 2), int(24));
    let lambert: Vec<Rational> = [1, 2, 9].into_iter().map(int).collect();
    assert_eq!(eval_partial_bell(&lambert, 3, 2), int(6));
    for n in 0..=8 {
        assert!(bell_as_h_k(n, 0));
    }
}

#[test]
fn binomial_families_are_binomial() {
    let (x, y) = (rat(3, 2), rat(-2, 5));
    for f in [BinomialFamily::Power, BinomialFamily::Rising, BinomialFamily::Abel(rat(5, 4))] {
        for n in 0..=6usize {
            let lhs = f.eval(n, &(&x + &y));
            let rhs = (0..=n)
                .map(|k| int(choose(n, k)) * f.eval(k, &x) * f.eval(n - k, &y))
                .fold(Rational::zero(), |a, b| a + b);
            assert_eq!(lhs, rhs, "{f:?} at n = {n}");
        }
    }
}

fn choose(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

#[test]
fn inverse_closed_form_readings() {
    let x = VirtualAlphabet::of_sequence(&wordbell::random::normalized(4, 8));
    let inv = x.inverse();
    for n in 1..=5 {
        assert_eq!(inverse_closed_form(&x, n), inv.h(n), "n = {n}");
    }
    assert_ne!(inverse_closed_form_uncorrected(&x, 1), inv.h(1));
}

#[test]
fn suites() {
    assert!(alphabet_suite(6).passed());
    let r = appendix_suite(AppendixRanges::capped(5));
    for c in r.checks.iter().filter(|c| !c.identity.contains("literal")) {
        assert!(c.passed(), "{}", c.identity);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sum_and_product_of_alphabets(xs in prop::collection::vec(ratio(), 1..3), ys in prop::collection::vec(ratio(), 1..3)) {
        let (x, y) = (letters(&xs, 6), letters(&ys, 6));
        let both: Vec<Rational> = xs.iter().chain(&ys).cloned().collect();
        let prods: Vec<Rational> = xs.iter().flat_map(|a| ys.iter().map(move |b| a * b)).collect();
        for n in 0..=6 {
            prop_assert_eq!(x.sum(&y).h(n), h_brute(&both, n));
            prop_assert_eq!(x.product(&y).h(n), h_brute(&prods, n));
        }
    }

    #[test]
    fn compose_then_inverse_is_neutral(c in prop::collection::vec(ratio(), 6)) {
        let x = VirtualAlphabet::from_c(c);
        let id = x.compose(&x.inverse());
        for n in 1..=6 {
            prop_assert!(id.h(n).is_zero());
        }
        prop_assert_eq!(x.compose(&VirtualAlphabet::identity(6)), x);
    }

    #[test]
    fn integer_scaling(c in prop::collection::vec(ratio(), 6), k in 0i64..4) {
        let x = VirtualAlphabet::from_c(c);
        let kx = x.scale(&int(k));
        let pow = x.sigma().pow(k as usize);
        for n in 0..=6 {
            prop_assert_eq!(kx.h(n), pow.coeff(n));
        }
    }
}
