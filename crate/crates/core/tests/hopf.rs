use proptest::prelude::*;
use wordbell::combinatorics::{enumerate_colored, enumerate_ordinary, ColorSequence, ColoredSetPartition, SetPartition};
use wordbell::hopf::*;
use wordbell::scalar::int;
use wordbell::{LinComb, Rational};

fn csp(parts: &[(&[usize], usize)]) -> ColoredSetPartition {
    ColoredSetPartition::new(parts.iter().map(|(b, c)| (b.to_vec(), *c)).collect()).unwrap()
}

fn sp(blocks: &[&[usize]]) -> SetPartition {
    SetPartition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
}

fn wide() -> ColorSequence {
    "a=5,5,5 tail:5".parse().unwrap()
}

fn el<B: Basis>(seq: &ColorSequence, parts: &[(&[usize], usize)]) -> Element<B> {
    Element::basis(seq.clone(), csp(parts)).unwrap()
}

fn tensor<B: Basis>(seq: &ColorSequence, terms: &[(ColoredSetPartition, ColoredSetPartition)]) -> Tensor<B> {
    Tensor::from_terms(seq.clone(), terms.iter().map(|k| (k.clone(), int(1))).collect())
}

#[test]
fn phi_product_example() {
    let a = wide();
    let x: Element<Phi> = el(&a, &[(&[1, 3, 5], 3), (&[2, 4], 1)]);
    let y = el(&a, &[(&[1, 2, 5], 4), (&[3], 1), (&[4], 2)]);
    let expected = el(&a, &[(&[1, 3, 5], 3), (&[2, 4], 1), (&[6, 7, 10], 4), (&[8], 1), (&[9], 2)]);
    assert_eq!(x.mul(&y).unwrap(), expected);
    assert_eq!(Element::one(a.clone()).mul(&x).unwrap(), x);
    assert_eq!(x.mul(&y).unwrap().degree(), Some(10));
}

#[test]
fn phi_coproduct_example() {
    let a = wide();
    let x: Element<Phi> = el(&a, &[(&[1, 3], 5), (&[2], 3)]);
    let e = ColoredSetPartition::empty();
    let expected = tensor(
        &a,
        &[
            (csp(&[(&[1, 3], 5), (&[2], 3)]), e.clone()),
            (csp(&[(&[1, 2], 5)]), csp(&[(&[1], 3)])),
            (csp(&[(&[1], 3)]), csp(&[(&[1, 2], 5)])),
            (e.clone(), csp(&[(&[1, 3], 5), (&[2], 3)])),
        ],
    );
    assert_eq!(x.coproduct(), expected);
    let one: Element<Phi> = Element::one(a.clone());
    assert_eq!(one.coproduct(), tensor(&a, &[(e.clone(), e)]));
}

#[test]
fn psi_product_example() {
    let a = wide();
    let x: Element<Psi> = el(&a, &[(&[1, 2], 3)]);
    let y = el(&a, &[(&[1], 4), (&[2], 1)]);
    let expected: LinComb<ColoredSetPartition, Rational> = [
        csp(&[(&[1, 2], 3), (&[3], 4), (&[4], 1)]),
        csp(&[(&[1, 3], 3), (&[2], 4), (&[4], 1)]),
        csp(&[(&[1, 4], 3), (&[2], 4), (&[3], 1)]),
        csp(&[(&[2, 3], 3), (&[1], 4), (&[4], 1)]),
        csp(&[(&[2, 4], 3), (&[1], 4), (&[3], 1)]),
        csp(&[(&[3, 4], 3), (&[1], 4), (&[2], 1)]),
    ]
    .into_iter()
    .map(|k| (k, int(1)))
    .collect();
    assert_eq!(x.mul(&y).unwrap().terms(), &expected);
    assert_eq!(Element::one(a.clone()).mul(&x).unwrap(), x);
}

#[test]
fn psi_product_multiplicity() {
    let one = ColorSequence::ones();
    let x: Element<Psi> = el(&one, &[(&[1], 1)]);
    let sq = x.mul(&x).unwrap();
    assert_eq!(sq.coeff(&csp(&[(&[1], 1), (&[2], 1)])), int(2));
}

#[test]
fn psi_coproduct_example() {
    let a = wide();
    let x: Element<Psi> = el(&a, &[(&[1, 3], 3), (&[2], 4), (&[4], 1)]);
    let e = ColoredSetPartition::empty();
    let full = csp(&[(&[1, 3], 3), (&[2], 4), (&[4], 1)]);
    let expected = tensor(
        &a,
        &[
            (e.clone(), full.clone()),
            (csp(&[(&[1, 3], 3), (&[2], 4)]), csp(&[(&[1], 1)])),
            (full, e.clone()),
        ],
    );
    assert_eq!(x.coproduct(), expected);
}

#[test]
fn sequence_mismatch_is_an_error() {
    let x: Element<Phi> = el(&ColorSequence::ones(), &[(&[1], 1)]);
    let y: Element<Phi> = el(&wide(), &[(&[1], 1)]);
    assert!(matches!(x.mul(&y), Err(wordbell::Error::SequenceMismatch(_, _))));
    assert!(Element::<Phi>::basis(ColorSequence::ones(), csp(&[(&[1], 2)])).is_err());
}

#[test]
fn monomial_expansion_example() {
    let x: Element<Phi> = Element::word(&sp(&[&[1, 4], &[2, 5, 6], &[3, 7]]));
    let m = phi_to_monomial(&x).unwrap();
    let expected: Vec<SetPartition> = vec![
        sp(&[&[1, 4], &[2, 5, 6], &[3, 7]]),
        sp(&[&[1, 2, 4, 5, 6], &[3, 7]]),
        sp(&[&[1, 3, 4, 7], &[2, 5, 6]]),
        sp(&[&[1, 4], &[2, 3, 5, 6, 7]]),
        sp(&[&[1, 2, 3, 4, 5, 6, 7]]),
    ];
    assert_eq!(m.terms().len(), 5);
    for p in &expected {
        assert_eq!(m.coeff(&ColoredSetPartition::from_uncolored(p)), int(1));
    }
    assert_eq!(monomial_to_phi(&m).unwrap(), x);
}

#[test]
fn monomial_of_singletons_is_sum_over_all_partitions() {
    for n in 0..=5 {
        let x: Element<Phi> = Element::word(&SetPartition::singletons(n));
        let m = phi_to_monomial(&x).unwrap();
        assert_eq!(m.terms().len(), enumerate_ordinary(n).len());
    }
}

#[test]
fn basis_changes_round_trip_and_are_unitriangular() {
    for n in 0..=5 {
        for p in enumerate_ordinary(n) {
            let x: Element<Phi> = Element::word(&p);
            let m = phi_to_monomial(&x).unwrap();
            assert_eq!(m.coeff(&ColoredSetPartition::from_uncolored(&p)), int(1));
            for k in m.terms().keys() {
                assert!(p.refines(&k.underlying()));
            }
            assert_eq!(monomial_to_phi(&m).unwrap(), x);
            let s: Element<Complete> = Element::word(&p);
            let psi = complete_to_psi(&s).unwrap();
            assert_eq!(psi_to_complete(&psi).unwrap(), s);
        }
    }
    let s12: Element<Complete> = Element::word(&sp(&[&[1, 2]]));
    let psi = complete_to_psi(&s12).unwrap();
    assert_eq!(psi.terms().len(), 2);
    assert_eq!(psi.coeff(&ColoredSetPartition::from_uncolored(&sp(&[&[1], &[2]]))), int(1));
    let s1: Element<Complete> = Element::word(&SetPartition::singletons(3));
    assert_eq!(complete_to_psi(&s1).unwrap().terms().len(), 1);
}

#[test]
fn colored_input_to_monomial_is_unsupported() {
    let x: Element<Phi> = el(&wide(), &[(&[1], 2)]);
    assert!(matches!(phi_to_monomial(&x), Err(wordbell::Error::UnsupportedBasis(_))));
}

#[test]
fn complete_and_monomial_are_dual() {
    for n in 0..=4 {
        let parts = enumerate_ordinary(n);
        for p1 in &parts {
            let s: Element<Complete> = Element::word(p1);
            // ⟨S, M⟩ computed through Ψ and Φ
            let psi = complete_to_psi(&s).unwrap();
            for p2 in &parts {
                let m: Element<Mono> = Element::word(p2);
                let phi = monomial_to_phi(&m).unwrap();
                let direct = pairing(&s, &m).unwrap();
                let via = pairing(&phi, &psi).unwrap();
                let expected = if p1 == p2 { int(1) } else { int(0) };
                assert_eq!(direct, expected);
                assert_eq!(via, expected, "{p1} {p2}");
            }
        }
    }
}

#[test]
fn phi_psi_pairing_is_kronecker() {
    let a = ColorSequence::idempotent();
    let keys = enumerate_colored(&a, 3);
    for k1 in &keys {
        for k2 in &keys {
            let x: Element<Phi> = Element::basis(a.clone(), k1.clone()).unwrap();
            let y: Element<Psi> = Element::basis(a.clone(), k2.clone()).unwrap();
            assert_eq!(pairing(&x, &y).unwrap(), if k1 == k2 { int(1) } else { int(0) });
        }
    }
}

#[test]
fn antipode_low_degree() {
    let a = ColorSequence::ones();
    let one: Element<Phi> = Element::one(a.clone());
    assert_eq!(one.antipode(), one);
    let x: Element<Phi> = el(&a, &[(&[1], 1)]);
    assert_eq!(x.antipode(), x.scale(&int(-1)));
}

#[test]
fn json_shape() {
    let x: Element<Phi> = el(&wide(), &[(&[1, 2], 3)]);
    let v = x.to_json();
    assert_eq!(v["basis"], "Phi");
    assert_eq!(v["terms"][0]["key"], serde_json::json!([[[1, 2], 3]]));
    assert_eq!(v["terms"][0]["num"], "1");
    let y: Element<Phi> = Element::word(&sp(&[&[1], &[2]]));
    assert_eq!(y.to_json()["terms"][0]["key"], serde_json::json!([[1], [2]]));
}

fn arb_key(seq: ColorSequence, max: usize) -> impl Strategy<Value = ColoredSetPartition> {
    (0..=max, any::<prop::sample::Index>()).prop_map(move |(n, i)| {
        let all = enumerate_colored(&seq, n);
        all[i.index(all.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coproduct_is_multiplicative_in_both_algebras(x in arb_key(ColorSequence::idempotent(), 3), y in arb_key(ColorSequence::idempotent(), 3)) {
        let a = ColorSequence::idempotent();
        let (px, py): (Element<Phi>, Element<Phi>) = (Element::basis(a.clone(), x.clone()).unwrap(), Element::basis(a.clone(), y.clone()).unwrap());
        prop_assert_eq!(px.mul(&py).unwrap().coproduct(), px.coproduct().mul(&py.coproduct()).unwrap());
        let (qx, qy): (Element<Psi>, Element<Psi>) = (Element::basis(a.clone(), x).unwrap(), Element::basis(a, y).unwrap());
        prop_assert_eq!(qx.mul(&qy).unwrap().coproduct(), qx.coproduct().mul(&qy.coproduct()).unwrap());
    }

    #[test]
    fn phi_coproduct_is_cocommutative(x in arb_key(ColorSequence::factorial(), 4)) {
        let e: Element<Phi> = Element::basis(ColorSequence::factorial(), x).unwrap();
        let d = e.coproduct();
        prop_assert_eq!(d.swap(), d);
    }

    #[test]
    fn psi_product_is_commutative(x in arb_key(ColorSequence::shifted_factorial(), 3), y in arb_key(ColorSequence::shifted_factorial(), 3)) {
        let a = ColorSequence::shifted_factorial();
        let (qx, qy): (Element<Psi>, Element<Psi>) = (Element::basis(a.clone(), x).unwrap(), Element::basis(a, y).unwrap());
        prop_assert_eq!(qx.mul(&qy).unwrap(), qy.mul(&qx).unwrap());
    }
}
