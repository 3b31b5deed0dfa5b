use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use wordbell::combinatorics::*;

fn csp(parts: &[(&[usize], usize)]) -> ColoredSetPartition {
    ColoredSetPartition::new(parts.iter().map(|(b, c)| (b.to_vec(), *c)).collect()).unwrap()
}

fn big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Bell numbers from the recurrence b_{n+1} = Σ binom(n,k) b_k.
fn bell_oracle(n: usize) -> Vec<u64> {
    let mut b = vec![1u64];
    for m in 0..n {
        let mut s = 0u64;
        let mut c = 1u64;
        for k in 0..=m {
            s += c * b[k];
            c = c * (m - k) as u64 / (k + 1) as u64;
        }
        b.push(s);
    }
    b
}

/// Restricted growth strings, decoded to block lists.
fn brute_set_partitions(n: usize) -> BTreeSet<SetPartition> {
    let mut out = BTreeSet::new();
    let total = (0..n).fold(1usize, |acc, _| acc * n.max(1));
    for code in 0..total {
        let mut labels = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            labels.push(c % n);
            c /= n;
        }
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(i + 1);
        }
        blocks.retain(|b| !b.is_empty());
        out.insert(SetPartition::new(blocks).unwrap());
    }
    if n == 0 {
        out.insert(SetPartition::empty());
    }
    out
}

#[test]
fn standardize_renames_by_rank() {
    let a = ColorSequence::explicit(vec![3, 3, 3], ColorRule::Constant(3));
    let raw = vec![(vec![1, 4, 7], 1), (vec![3, 8], 1), (vec![5], 3), (vec![10], 1)];
    let s = standardize(&raw, &a).unwrap();
    assert_eq!(s, csp(&[(&[1, 3, 5], 1), (&[2, 6], 1), (&[4], 3), (&[7], 1)]));
    assert_eq!(standardize(&[(vec![1, 3, 5], 1), (vec![2, 6], 1), (vec![4], 3), (vec![7], 1)], &a).unwrap(), s);

    let a2 = ColorSequence::explicit(vec![2], ColorRule::Constant(2));
    let t = standardize(&[(vec![2], 1), (vec![9], 2)], &a2).unwrap();
    assert_eq!(t, csp(&[(&[1], 1), (&[2], 2)]));
}

#[test]
fn standardize_errors() {
    let a = ColorSequence::ones();
    assert!(matches!(standardize(&[(vec![1, 2], 1), (vec![2], 1)], &a), Err(wordbell::Error::InvalidInput(_))));
    assert!(matches!(standardize(&[(vec![4], 2)], &a), Err(wordbell::Error::InvalidColor(_))));
}

#[test]
fn shifted_union_example() {
    let p = csp(&[(&[1, 3], 5), (&[2], 3)]);
    let q = csp(&[(&[1], 2), (&[2, 3], 4)]);
    assert_eq!(p.shifted_union(&q), csp(&[(&[1, 3], 5), (&[2], 3), (&[4], 2), (&[5, 6], 4)]));
    assert_eq!(ColoredSetPartition::empty().shifted_union(&p), p);
}

#[test]
fn matching_unions_example() {
    let p = csp(&[(&[1], 5), (&[2], 3)]);
    let q = csp(&[(&[1, 2], 2)]);
    let expected: BTreeSet<_> = [
        csp(&[(&[1], 5), (&[2], 3), (&[3, 4], 2)]),
        csp(&[(&[1], 5), (&[3], 3), (&[2, 4], 2)]),
        csp(&[(&[1], 5), (&[4], 3), (&[2, 3], 2)]),
        csp(&[(&[2], 5), (&[3], 3), (&[1, 4], 2)]),
        csp(&[(&[2], 5), (&[4], 3), (&[1, 3], 2)]),
        csp(&[(&[3], 5), (&[4], 3), (&[1, 2], 2)]),
    ]
    .into_iter()
    .collect();
    let got = p.matching_unions(&q);
    assert_eq!(got, expected);
    for r in &got {
        assert_eq!(splitting_count(&p, &q, r), 1);
    }
    assert_eq!(p.matching_unions(&ColoredSetPartition::empty()), [p.clone()].into_iter().collect());
    assert_eq!(splitting_count(&p, &ColoredSetPartition::empty(), &p), 1);
}

#[test]
fn splitting_count_small_cases() {
    let p = csp(&[(&[1], 1)]);
    let q = csp(&[(&[1, 2], 1)]);
    let r = csp(&[(&[1], 1), (&[2, 3], 1)]);
    assert_eq!(splitting_count(&p, &q, &r), 1);
    assert_eq!(splitting_count(&q, &p, &r), 1);
    assert_eq!(splitting_count(&p, &p, &r), 0);
    let s = csp(&[(&[1], 1), (&[2], 1)]);
    let r2 = csp(&[(&[1], 1), (&[2], 1), (&[3], 1)]);
    assert_eq!(splitting_count(&p, &s, &r2), 3);
}

#[test]
fn ordinary_enumeration_counts() {
    assert_eq!(enumerate_ordinary(0), vec![SetPartition::empty()]);
    let bell = bell_oracle(8);
    for n in 0..=8 {
        assert_eq!(enumerate_ordinary(n).len() as u64, bell[n], "n = {n}");
    }
    for n in 0..=5 {
        let e: BTreeSet<_> = enumerate_ordinary(n).into_iter().collect();
        assert_eq!(e, brute_set_partitions(n));
    }
    let v = enumerate_ordinary(5);
    assert!(v.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn colored_enumeration_size_three() {
    let a = ColorSequence::idempotent();
    let all = enumerate_colored(&a, 3);
    let listed = vec![
        csp(&[(&[1, 2, 3], 1)]),
        csp(&[(&[1, 2, 3], 2)]),
        csp(&[(&[1, 2, 3], 3)]),
        csp(&[(&[1, 2], 1), (&[3], 1)]),
        csp(&[(&[1, 2], 2), (&[3], 1)]),
        csp(&[(&[1, 3], 1), (&[2], 1)]),
        csp(&[(&[1, 3], 2), (&[2], 1)]),
        csp(&[(&[2, 3], 1), (&[1], 1)]),
        csp(&[(&[2, 3], 2), (&[1], 1)]),
        csp(&[(&[1], 1), (&[2], 1), (&[3], 1)]),
    ];
    assert_eq!(all.len(), 10);
    assert_eq!(all.iter().cloned().collect::<BTreeSet<_>>(), listed.iter().cloned().collect());
    let two = enumerate_colored_parts(&a, 3, 2);
    assert_eq!(two.len(), 6);
    assert!(two.iter().all(|p| listed[3..9].contains(p)));
    assert_eq!(enumerate_colored(&ColorSequence::ones(), 5).len(), 52);
}

/// Generation by iterated ⋓ of colored one-block partitions; overcounts,
/// so compared as a set.
fn matching_union_oracle(a: &ColorSequence, n: usize) -> BTreeSet<ColoredSetPartition> {
    let mut level: Vec<BTreeSet<ColoredSetPartition>> = vec![[ColoredSetPartition::empty()].into_iter().collect()];
    for m in 1..=n {
        let mut s = BTreeSet::new();
        for first in 1..=m {
            for c in 1..=a.colors(first) {
                let head = ColoredSetPartition::new(vec![((1..=first).collect(), c)]).unwrap();
                for rest in &level[m - first] {
                    s.extend(head.matching_unions(rest));
                }
            }
        }
        level.push(s);
    }
    level.pop().unwrap()
}

#[test]
fn colored_enumeration_matches_union_oracle() {
    let seqs = [
        ColorSequence::idempotent(),
        ColorSequence::explicit(vec![1, 1], ColorRule::Constant(0)),
        ColorSequence::explicit(vec![2, 0, 1], ColorRule::Constant(1)),
    ];
    for a in &seqs {
        for n in 0..=5 {
            let e: BTreeSet<_> = enumerate_colored(a, n).into_iter().collect();
            assert_eq!(e, matching_union_oracle(a, n), "a = {a}, n = {n}");
        }
    }
    // involutions
    let inv = ColorSequence::explicit(vec![1, 1], ColorRule::Constant(0));
    let counts: Vec<usize> = (1..=6).map(|n| enumerate_colored(&inv, n).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 10, 26, 76]);
}

#[test]
fn color_sequence_rules() {
    let expect = |a: ColorSequence, v: &[u64]| assert_eq!(a.values(8), big(v), "{a}");
    expect(ColorSequence::ones(), &[1; 8]);
    expect(ColorSequence::factorial(), &[1, 2, 6, 24, 120, 720, 5040, 40320]);
    expect(ColorSequence::shifted_factorial(), &[1, 1, 2, 6, 24, 120, 720, 5040]);
    expect(ColorSequence::idempotent(), &[1, 2, 3, 4, 5, 6, 7, 8]);
    expect(ColorSequence::bell(), &bell_oracle(8)[1..]);
    expect(ColorSequence::tree(), &[1, 2, 9, 64, 625, 7776, 117649, 2097152]);
    let e = ColorSequence::explicit(vec![1, 2, 9, 64], ColorRule::Tree);
    assert_eq!(e, ColorSequence::tree());
    let f: ColorSequence = "a=1,1 tail:0".parse().unwrap();
    assert_eq!(f.values(4), big(&[1, 1, 0, 0]));
    assert_eq!(f.to_string().parse::<ColorSequence>().unwrap(), f);
    assert_eq!("bell".parse::<ColorSequence>().unwrap(), ColorSequence::bell());
    assert!("nope".parse::<ColorSequence>().is_err());
}

#[test]
fn count_by_type_values() {
    let counts: Vec<BigInt> = (0..=6).map(|n| count_by_type(&ColorSequence::ones(), n)).collect();
    assert_eq!(counts, big(&[1, 1, 2, 3, 5, 7, 11]));
    assert_eq!(count_by_type(&ColorSequence::tree(), 0), BigInt::from(1));
    for a in [ColorSequence::idempotent(), ColorSequence::bell(), "a=2,0,1 tail:1".parse().unwrap()] {
        for n in 0..=5 {
            let types: BTreeSet<_> = enumerate_colored(&a, n).iter().map(|p| p.type_signature()).collect();
            assert_eq!(count_by_type(&a, n), BigInt::from(types.len()), "{a} n={n}");
        }
    }
}

#[test]
fn list_bijection() {
    let a = ColorSequence::factorial();
    let counts: Vec<usize> = (1..=5).map(|n| enumerate_colored(&a, n).len()).collect();
    assert_eq!(counts, vec![1, 3, 13, 73, 501]);
    for n in 0..=4 {
        let mut image = BTreeSet::new();
        for p in enumerate_colored(&a, n) {
            let l = to_lists(&p, &a).unwrap();
            assert_eq!(l.lists().len(), p.len());
            assert_eq!(from_lists(&l), p);
            image.insert(l);
        }
        // direct enumeration: set partitions with every ordering of each block
        let mut direct = BTreeSet::new();
        for sp in enumerate_ordinary(n) {
            let mut acc: Vec<Vec<Vec<usize>>> = vec![vec![]];
            for b in sp.blocks() {
                let mut next = Vec::new();
                for pre in &acc {
                    for perm in all_permutations(b.len()) {
                        let mut v = pre.clone();
                        v.push(perm.iter().map(|&i| b[i - 1]).collect());
                        next.push(v);
                    }
                }
                acc = next;
            }
            direct.extend(acc.into_iter().map(|v| ListPartition::new(v).unwrap()));
        }
        assert_eq!(image, direct);
    }
    let singles = csp(&[(&[1], 1), (&[2], 1)]);
    assert_eq!(to_lists(&singles, &a).unwrap().lists(), &[vec![1], vec![2]]);
    assert_eq!(to_lists(&csp(&[(&[1, 2], 2)]), &a).unwrap().lists(), &[vec![2, 1]]);
    assert!(matches!(to_lists(&singles, &ColorSequence::ones()), Err(wordbell::Error::InvalidSequence(_))));
}

#[test]
fn cycle_bijection() {
    let a = ColorSequence::shifted_factorial();
    let canon = CycleLabeling::canonical();
    for n in 1..=6 {
        let all = enumerate_colored(&a, n);
        assert_eq!(all.len(), (1..=n).product::<usize>());
        let mut image = BTreeSet::new();
        for p in &all {
            let s = to_cycle_permutation(p, &a, &canon).unwrap();
            assert_eq!(s.cycles().len(), p.len());
            assert_eq!(from_cycle_permutation(&s, &canon), *p);
            image.insert(s.to_one_line());
        }
        assert_eq!(image, all_permutations(n).into_iter().collect());
    }
    let id = to_cycle_permutation(&csp(&[(&[1], 1), (&[2], 1), (&[3], 1)]), &a, &canon).unwrap();
    assert_eq!(id.to_one_line(), vec![1, 2, 3]);
}

#[test]
fn cycle_bijection_with_example_labels() {
    let a = ColorSequence::shifted_factorial();
    let labels = CycleLabeling::example();
    let s = CyclePermutation::from_one_line(&[3, 2, 4, 1, 5, 8, 6, 7]).unwrap();
    let p = from_cycle_permutation(&s, &labels);
    assert_eq!(p, csp(&[(&[2], 1), (&[1, 3, 4], 2), (&[5], 1), (&[6, 7, 8], 1)]));
    assert_eq!(to_cycle_permutation(&p, &a, &labels).unwrap(), s);
    // canonical labels put (1 2 3) first, so the colors of the 3-cycles swap
    let q = from_cycle_permutation(&s, &CycleLabeling::canonical());
    assert_eq!(q, csp(&[(&[2], 1), (&[1, 3, 4], 1), (&[5], 1), (&[6, 7, 8], 2)]));
    assert!(CycleLabeling::with_overrides(&[(&[2, 3, 1], 1)]).is_err());
}

#[test]
fn level2_bijection() {
    let a = ColorSequence::bell();
    let counts: Vec<usize> = (1..=5).map(|n| enumerate_colored(&a, n).len()).collect();
    assert_eq!(counts, vec![1, 3, 12, 60, 358]);
    for n in 0..=4 {
        let mut image = BTreeSet::new();
        for p in enumerate_colored(&a, n) {
            let l = to_level2(&p, &a).unwrap();
            assert_eq!(l.groups().len(), p.len());
            assert_eq!(from_level2(&l), p);
            image.insert(l);
        }
        let mut direct = BTreeSet::new();
        for inner in brute_set_partitions(n) {
            for outer in brute_set_partitions(inner.len()) {
                let groups = outer
                    .blocks()
                    .iter()
                    .map(|g| g.iter().map(|&i| inner.blocks()[i - 1].clone()).collect())
                    .collect();
                direct.insert(Level2Partition::new(groups).unwrap());
            }
        }
        assert_eq!(image, direct, "n = {n}");
    }
}

#[test]
fn idempotent_bijection() {
    let a = ColorSequence::idempotent();
    for n in 0..=4usize {
        let mut brute = BTreeSet::new();
        let total = n.pow(n as u32);
        for code in 0..total {
            let mut f = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                f.push(c % n + 1);
                c /= n;
            }
            if let Ok(e) = IdempotentEndofunction::new(f) {
                brute.insert(e);
            }
        }
        let all = enumerate_colored(&a, n);
        assert_eq!(all.len(), brute.len());
        let image: BTreeSet<_> = all
            .iter()
            .map(|p| {
                let f = to_idempotent(p, &a).unwrap();
                assert_eq!(from_idempotent(&f), *p);
                let fixed = (1..=n).filter(|&i| f.images()[i - 1] == i).count();
                assert_eq!(fixed, p.len());
                f
            })
            .collect();
        assert_eq!(image, brute);
    }
    assert_eq!(
        [1usize, 3, 10, 41].to_vec(),
        (1..=4).map(|n| enumerate_colored(&a, n).len()).collect::<Vec<_>>()
    );
    let id = IdempotentEndofunction::new(vec![1, 2, 3]).unwrap();
    assert_eq!(from_idempotent(&id), csp(&[(&[1], 1), (&[2], 1), (&[3], 1)]));
    let c = IdempotentEndofunction::new(vec![1, 1, 1]).unwrap();
    assert_eq!(from_idempotent(&c), csp(&[(&[1, 2, 3], 1)]));
}

#[test]
fn refinement_helpers() {
    let p = SetPartition::new(vec![vec![1, 3], vec![2]]).unwrap();
    assert_eq!(p.refinements().len(), 2);
    assert_eq!(p.coarsenings().len(), 2);
    assert!(SetPartition::singletons(3).refines(&p));
    assert!(!p.refines(&SetPartition::singletons(3)));
    assert_eq!(SetPartition::one_block(4).refinements().len(), 15);
}

fn arb_colored() -> impl Strategy<Value = ColoredSetPartition> {
    (0usize..=5, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let all = enumerate_colored(&ColorSequence::idempotent(), n);
        all[i.index(all.len())].clone()
    })
}

proptest! {
    #[test]
    fn std_is_idempotent(p in arb_colored(), shift in 1usize..5, gap in 1usize..4) {
        let raw: Vec<_> = p.parts().iter().map(|q| (q.block.iter().map(|x| x * gap + shift).collect(), q.color)).collect();
        let a = ColorSequence::idempotent();
        let s = standardize(&raw, &a).unwrap();
        prop_assert_eq!(&s, &p);
        let again: Vec<_> = s.parts().iter().map(|q| (q.block.clone(), q.color)).collect();
        prop_assert_eq!(standardize(&again, &a).unwrap(), s);
    }

    #[test]
    fn shifted_union_is_associative(p in arb_colored(), q in arb_colored(), r in arb_colored()) {
        let left = p.shifted_union(&q).shifted_union(&r);
        prop_assert_eq!(&left, &p.shifted_union(&q.shifted_union(&r)));
        prop_assert_eq!(left.size(), p.size() + q.size() + r.size());
        prop_assert_eq!(left.len(), p.len() + q.len() + r.len());
    }

    #[test]
    fn splitting_counts_sum_to_binomial(p in arb_colored(), q in arb_colored()) {
        let total: u64 = p.matching_unions(&q).iter().map(|r| splitting_count(&p, &q, r)).sum();
        let n = (p.size() + q.size()) as i64;
        prop_assert_eq!(BigInt::from(total), wordbell::scalar::binomial(n, p.size() as i64));
    }
}
