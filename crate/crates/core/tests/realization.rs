use std::collections::BTreeSet;

use wordbell::combinatorics::{enumerate_colored, enumerate_ordinary, ColorSequence, ColoredSetPartition, CyclePermutation, SetPartition};
use wordbell::hopf::{phi_to_monomial, Element, Phi, Psi};
use wordbell::realization::*;
use wordbell::scalar::int;
use wordbell::{LinComb, Rational};

fn csp(parts: &[(&[usize], usize)]) -> ColoredSetPartition {
    ColoredSetPartition::new(parts.iter().map(|(b, c)| (b.to_vec(), *c)).collect()).unwrap()
}

fn sp(blocks: &[&[usize]]) -> SetPartition {
    SetPartition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
}

type WP = WordPoly<Rational>;

fn one_word(w: Word) -> WP {
    LinComb::monomial(w)
}

#[test]
fn phi_realization_example() {
    let p = csp(&[(&[1, 3], 3), (&[2], 1), (&[4], 3)]);
    let e: WP = expand_phi(&p, 2);
    assert_eq!(e.len(), 8);
    // pattern a1 b a1 a2 with a1, a2 in 𝔸_3 and b in 𝔸_1
    let mut expected = WP::zero();
    for a1 in 1..=2 {
        for b in 1..=2 {
            for a2 in 1..=2 {
                expected.add_term(
                    vec![Letter::new(3, a1), Letter::new(1, b), Letter::new(3, a1), Letter::new(3, a2)],
                    int(1),
                );
            }
        }
    }
    assert_eq!(e, expected);
    let empty: WP = expand_phi(&ColoredSetPartition::empty(), 3);
    assert_eq!(empty, one_word(vec![]));
}

#[test]
fn concatenation_is_multiplicative() {
    let a = ColorSequence::idempotent();
    for n1 in 0..=2 {
        for n2 in 0..=2 {
            for p in enumerate_colored(&a, n1) {
                for q in enumerate_colored(&a, n2) {
                    let l = n1 + n2;
                    let lhs: WP = concat(&expand_phi(&p, l), &expand_phi(&q, l));
                    assert_eq!(lhs, expand_phi(&p.shifted_union(&q), l));
                }
            }
        }
    }
}

#[test]
fn monomial_realization() {
    let p = sp(&[&[1, 4], &[2, 5, 6], &[3, 7]]);
    let m: WP = expand_monomial(&p, 3);
    assert_eq!(m.len(), 6);
    for w in m.keys() {
        let (x, y, z) = (w[0], w[1], w[2]);
        assert!(x != y && y != z && x != z);
        assert_eq!(w, &vec![x, y, z, x, y, y, z]);
    }
    let none: WP = expand_monomial(&SetPartition::singletons(2), 1);
    assert!(none.is_zero());
    for n in 0..=4 {
        for p in enumerate_ordinary(n) {
            let phi: Element<Phi> = Element::word(&p);
            let m = phi_to_monomial(&phi).unwrap();
            let via_m: WP = m.terms().flat_map(|k| expand_monomial(&k.underlying(), 4));
            assert_eq!(expand_phi::<Rational>(&ColoredSetPartition::from_uncolored(&p), 4), via_m);
        }
    }
}

#[test]
fn shuffle_basics() {
    let ab = word(&[1, 2]);
    let s: WP = shuffle(&one_word(ab.clone()), &one_word(vec![]));
    assert_eq!(s, one_word(ab.clone()));
    let t: WP = shuffle(&one_word(word(&[1])), &one_word(word(&[2])));
    assert_eq!(t, one_word(word(&[1, 2])) + one_word(word(&[2, 1])));
    let u: WP = shuffle_words(&word(&[1]), &word(&[1]));
    assert_eq!(u, LinComb::term(word(&[1, 1]), int(2)));
}

#[test]
fn psi_product_is_shuffle_of_realizations() {
    for a in [ColorSequence::ones(), ColorSequence::idempotent()] {
        for n1 in 0..=2 {
            for n2 in 0..=3 - n1.min(3) {
                let l = n1 + n2;
                for p in enumerate_colored(&a, n1) {
                    for q in enumerate_colored(&a, n2) {
                        let x: Element<Psi> = Element::basis(a.clone(), p.clone()).unwrap();
                        let y: Element<Psi> = Element::basis(a.clone(), q.clone()).unwrap();
                        let prod = x.mul(&y).unwrap();
                        let lhs: WP = shuffle(&expand_psi(&p, l), &expand_psi(&q, l));
                        assert_eq!(lhs, realize_psi(prod.terms(), l));
                    }
                }
            }
        }
    }
}

#[test]
fn scatter_operator() {
    let (x, y, z) = (Letter::new(1, 24), Letter::new(1, 25), Letter::new(1, 26));
    assert_eq!(scatter(&[vec![1, 2]], &[vec![x, y]]), Some(vec![x, y]));
    assert_eq!(scatter(&[vec![1, 3], vec![2]], &[vec![x, y], vec![z]]), Some(vec![x, z, y]));
    assert_eq!(scatter(&[vec![1, 3], vec![2]], &[vec![x], vec![y, z]]), None);
    let zero: WP = shuffle_composite(&[vec![1, 3], vec![2]], &[one_word(vec![x]), one_word(vec![y, z])]);
    assert!(zero.is_zero());
}

fn family() -> Vec<WP> {
    // P_1 = b1, P_2 = b1 b2 + 2 b2 b2, P_3 = b1 b1 b3 - b3 b2 b1
    vec![
        one_word(word(&[1])),
        one_word(word(&[1, 2])) + LinComb::term(word(&[2, 2]), int(2)),
        one_word(word(&[1, 1, 3])) - one_word(word(&[3, 2, 1])),
    ]
}

#[test]
fn specialized_completes() {
    let p = family();
    for n in 1..=3 {
        assert_eq!(specialize_complete(&SetPartition::one_block(n), &p).unwrap(), p[n - 1]);
    }
    let bad = vec![one_word(word(&[1, 1]))];
    assert!(matches!(specialize_complete(&SetPartition::one_block(1), &bad), Err(wordbell::Error::DegreeMismatch(_))));
    for n1 in 0..=3 {
        for n2 in 0..=3 {
            for a in enumerate_ordinary(n1) {
                for b in enumerate_ordinary(n2) {
                    let sa = specialize_complete(&a, &p).unwrap();
                    let sb = specialize_complete(&b, &p).unwrap();
                    let ca = ColoredSetPartition::from_uncolored(&a);
                    let cb = ColoredSetPartition::from_uncolored(&b);
                    assert_eq!(concat(&sa, &sb), specialize_complete(&ca.shifted_union(&cb).underlying(), &p).unwrap());
                    // the sum over a ⋓ b counts each interleaving once per splitting
                    let mut rhs = WP::zero();
                    for c in ca.matching_unions(&cb) {
                        let mult = wordbell::combinatorics::splitting_count(&ca, &cb, &c);
                        rhs.add_scaled(&specialize_complete(&c.underlying(), &p).unwrap(), &int(mult as i64));
                    }
                    assert_eq!(shuffle(&sa, &sb), rhs);
                }
            }
        }
    }
}

#[test]
fn cycle_words() {
    let s = CyclePermutation::from_one_line(&[3, 1, 2, 6, 5, 4]).unwrap();
    assert_eq!(cycle_specialization(&s), word(&[1, 3, 2, 1, 1, 2]));
    let id = CyclePermutation::from_one_line(&[1, 2, 3, 4]).unwrap();
    assert_eq!(cycle_specialization(&id), word(&[1, 1, 1, 1]));

    let b42: WP = cycle_bell(4, 2);
    let expected: WP = [
        (vec![1, 1, 2, 3], 2),
        (vec![1, 1, 3, 2], 2),
        (vec![1, 2, 1, 3], 1),
        (vec![1, 3, 1, 2], 1),
        (vec![1, 2, 3, 1], 1),
        (vec![1, 3, 2, 1], 1),
        (vec![1, 2, 1, 2], 1),
        (vec![1, 1, 2, 2], 2),
    ]
    .into_iter()
    .map(|(w, c)| (word(&w), int(c)))
    .collect();
    assert_eq!(b42, expected);
    assert_eq!(b42.mass(), int(11));
}

#[test]
fn realization_is_faithful_and_comultiplicative() {
    let a = ColorSequence::idempotent();
    for n in 0..=3 {
        let keys = enumerate_colored(&a, n);
        let images: BTreeSet<WP> = keys.iter().map(|k| expand_phi(k, n)).collect();
        assert_eq!(images.len(), keys.len());
        for k in &keys {
            let x: Element<Phi> = Element::basis(a.clone(), k.clone()).unwrap();
            let lhs = split_alphabets(&expand_phi::<Rational>(k, 2 * n), n);
            let rhs = x.coproduct().contract(|l, r| {
                let (el, er): (WP, WP) = (expand_phi(l, n), expand_phi(r, n));
                el.bilinear(&er, |u, v| LinComb::monomial((u.clone(), v.clone())))
            });
            assert_eq!(lhs, rhs, "{k}");
        }
    }
}
