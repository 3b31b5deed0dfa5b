//! Set partitions, colored set partitions and the bijections between colored
//! partitions over special color sequences and classical objects (lists,
//! permutations, level-2 partitions, idempotent endofunctions).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial};
use crate::util::{combinations, complement, permutations};

// ---------------------------------------------------------------------------
// Color sequences

/// Closed-form rule used for a whole sequence or for the tail of an explicit
/// prefix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColorRule {
    /// `a_m = 1`
    Ones,
    /// `a_m = m!`
    Factorial,
    /// `a_m = (m-1)!`
    ShiftedFactorial,
    /// `a_m = m`
    Idempotent,
    /// `a_m` is the m-th Bell number
    Bell,
    /// `a_m = m^(m-1)`
    Tree,
    /// `a_m = c`
    Constant(u64),
}

impl ColorRule {
    pub fn value(&self, m: usize) -> BigInt {
        match self {
            ColorRule::Ones => BigInt::one(),
            ColorRule::Factorial => factorial(m),
            ColorRule::ShiftedFactorial => factorial(m.saturating_sub(1)),
            ColorRule::Idempotent => BigInt::from(m),
            ColorRule::Bell => bell_number(m),
            ColorRule::Tree => {
                if m == 0 {
                    BigInt::one()
                } else {
                    num_traits::pow(BigInt::from(m), m - 1)
                }
            }
            ColorRule::Constant(c) => BigInt::from(*c),
        }
    }

    fn name(&self) -> String {
        match self {
            ColorRule::Ones => "ones".into(),
            ColorRule::Factorial => "factorial".into(),
            ColorRule::ShiftedFactorial => "shifted-factorial".into(),
            ColorRule::Idempotent => "idempotent".into(),
            ColorRule::Bell => "bell".into(),
            ColorRule::Tree => "tree".into(),
            ColorRule::Constant(c) => c.to_string(),
        }
    }
}

impl FromStr for ColorRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "ones" => ColorRule::Ones,
            "factorial" => ColorRule::Factorial,
            "shifted-factorial" => ColorRule::ShiftedFactorial,
            "idempotent" => ColorRule::Idempotent,
            "bell" => ColorRule::Bell,
            "tree" => ColorRule::Tree,
            other => ColorRule::Constant(
                other.parse().map_err(|_| Error::Parse(format!("unknown color rule `{other}`")))?,
            ),
        })
    }
}

/// Bell number `b_m` via the Bell triangle.
pub fn bell_number(m: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for _ in 0..m {
        let mut next = vec![row.last().unwrap().clone()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

/// The sequence `(a_m)_{m>=1}` of color counts: an explicit prefix followed
/// by a rule for every later index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSequence {
    prefix: Vec<u64>,
    tail: ColorRule,
}

impl ColorSequence {
    pub fn named(rule: ColorRule) -> Self {
        ColorSequence { prefix: Vec::new(), tail: rule }
    }
    pub fn ones() -> Self {
        Self::named(ColorRule::Ones)
    }
    pub fn factorial() -> Self {
        Self::named(ColorRule::Factorial)
    }
    pub fn shifted_factorial() -> Self {
        Self::named(ColorRule::ShiftedFactorial)
    }
    pub fn idempotent() -> Self {
        Self::named(ColorRule::Idempotent)
    }
    pub fn bell() -> Self {
        Self::named(ColorRule::Bell)
    }
    pub fn tree() -> Self {
        Self::named(ColorRule::Tree)
    }

    /// `a_1, ..., a_p` given explicitly, `a_m` from `tail` for `m > p`.
    /// Trailing prefix entries that the tail already produces are dropped so
    /// that equal sequences compare equal.
    pub fn explicit(prefix: Vec<u64>, tail: ColorRule) -> Self {
        let mut s = ColorSequence { prefix, tail };
        while let Some(&last) = s.prefix.last() {
            if BigInt::from(last) == s.tail.value(s.prefix.len()) {
                s.prefix.pop();
            } else {
                break;
            }
        }
        s
    }

    /// `a_m` for `m >= 1`.
    pub fn value(&self, m: usize) -> BigInt {
        match self.prefix.get(m.wrapping_sub(1)) {
            Some(&v) if m >= 1 => BigInt::from(v),
            _ => self.tail.value(m),
        }
    }

    /// `a_m` as a machine integer, for enumeration.
    ///
    /// # Panics
    /// If `a_m` does not fit in `usize`.
    pub fn colors(&self, m: usize) -> usize {
        self.value(m).to_usize().expect("color count exceeds usize")
    }

    /// Values `a_1..=a_n`.
    pub fn values(&self, n: usize) -> Vec<BigInt> {
        (1..=n).map(|m| self.value(m)).collect()
    }

    /// Checks that `a_m` agrees with `rule` for `1 <= m <= n`.
    pub fn require(&self, rule: &ColorRule, n: usize) -> Result<()> {
        for m in 1..=n {
            if self.value(m) != rule.value(m) {
                return Err(Error::InvalidSequence(format!(
                    "expected {} sequence, got a_{m} = {}",
                    rule.name(),
                    self.value(m)
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ColorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prefix.is_empty() && !matches!(self.tail, ColorRule::Constant(_)) {
            return write!(f, "{}", self.tail.name());
        }
        let vals: Vec<String> = self.prefix.iter().map(|v| v.to_string()).collect();
        write!(f, "a={} tail:{}", vals.join(","), self.tail.name())
    }
}

impl FromStr for ColorSequence {
    type Err = Error;
    /// Accepts a rule name (`ones`, `bell`, ...) or `a=v1,v2,... [tail:RULE]`
    /// where the default tail is `0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(rest) = s.strip_prefix("a=") else {
            return match s.parse::<ColorRule>()? {
                ColorRule::Constant(_) => Err(Error::Parse(format!("unknown color sequence `{s}`"))),
                rule => Ok(Self::named(rule)),
            };
        };
        let (list, tail) = match rest.split_once("tail:") {
            Some((l, t)) => (l.trim(), t.parse::<ColorRule>()?),
            None => (rest.trim(), ColorRule::Constant(0)),
        };
        let prefix = list
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<u64>().map_err(|_| Error::Parse(format!("bad color count `{x}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::explicit(prefix, tail))
    }
}

// ---------------------------------------------------------------------------
// Set partitions

/// Partition of `{1..n}` into sorted blocks, blocks ordered by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

fn check_cover(blocks: &[Vec<usize>]) -> Result<usize> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut seen = vec![false; n + 1];
    for b in blocks {
        if b.is_empty() {
            return Err(Error::InvalidInput("empty block".into()));
        }
        for &x in b {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidInput(format!("blocks do not partition {{1..{n}}}")));
            }
            seen[x] = true;
        }
    }
    Ok(n)
}

impl SetPartition {
    /// Builds the canonical form; the blocks must partition `{1..n}` where
    /// `n` is their total size.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = check_cover(&blocks)?;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        Ok(SetPartition { n, blocks })
    }

    pub fn empty() -> Self {
        SetPartition { n: 0, blocks: Vec::new() }
    }

    /// The partition into singletons.
    pub fn singletons(n: usize) -> Self {
        SetPartition { n, blocks: (1..=n).map(|i| vec![i]).collect() }
    }

    /// `{1..n}` as one block (empty for `n = 0`).
    pub fn one_block(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        SetPartition { n, blocks: vec![(1..=n).collect()] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Index of the block containing `x` (1-based `x`).
    pub fn block_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&x))
    }

    /// True when every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &SetPartition) -> bool {
        self.n == coarser.n
            && self.blocks.iter().all(|b| {
                let i = coarser.block_of(b[0]);
                b.iter().all(|&x| coarser.block_of(x) == i)
            })
    }

    /// Union of the blocks grouped by `grouping`, a set partition of the
    /// block indices `{1..len}`.
    pub fn merge(&self, grouping: &SetPartition) -> SetPartition {
        let blocks = grouping
            .blocks
            .iter()
            .map(|g| g.iter().flat_map(|&i| self.blocks[i - 1].iter().copied()).collect())
            .collect();
        SetPartition::new(blocks).expect("merging blocks keeps a partition")
    }

    /// All partitions coarser than or equal to `self`.
    pub fn coarsenings(&self) -> Vec<SetPartition> {
        let mut out: Vec<_> = enumerate_ordinary(self.len()).iter().map(|g| self.merge(g)).collect();
        out.sort();
        out
    }

    /// All partitions finer than or equal to `self`.
    pub fn refinements(&self) -> Vec<SetPartition> {
        let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        for b in &self.blocks {
            let parts = enumerate_ordinary(b.len());
            let mut next = Vec::with_capacity(acc.len() * parts.len());
            for prefix in &acc {
                for p in &parts {
                    let mut v = prefix.clone();
                    v.extend(p.blocks.iter().map(|blk| blk.iter().map(|&i| b[i - 1]).collect()));
                    next.push(v);
                }
            }
            acc = next;
        }
        let mut out: Vec<_> = acc.into_iter().map(|v| SetPartition::new(v).unwrap()).collect();
        out.sort();
        out
    }

    /// Block sizes in block order.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn to_json(&self) -> Value {
        json!(self.blocks)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bs: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", bs.join(","))
    }
}

/// All set partitions of `{1..n}` by inserting `n` into each partition of
/// `{1..n-1}`, either as a new singleton or into an existing block; sorted.
pub fn enumerate_ordinary(n: usize) -> Vec<SetPartition> {
    let mut level: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for m in 1..=n {
        let mut next = Vec::new();
        for p in &level {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(m);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![m]);
            next.push(q);
        }
        level = next;
    }
    let mut out: Vec<_> = level.into_iter().map(|blocks| SetPartition { n, blocks }).collect();
    for p in &mut out {
        p.blocks.sort();
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Colored set partitions

/// A block with its color.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Part {
    pub block: Vec<usize>,
    pub color: usize,
}

/// Canonical colored set partition of `{1..n}`.
///
/// The ambient color sequence is not stored; constructors that need it take
/// it as an argument and [`ColoredSetPartition::validate`] checks a value
/// against a sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredSetPartition {
    n: usize,
    parts: Vec<Part>,
}

impl ColoredSetPartition {
    /// Canonical form of `parts`, which must partition `{1..n}`; colors must
    /// be positive.
    pub fn new(parts: Vec<(Vec<usize>, usize)>) -> Result<Self> {
        let blocks: Vec<Vec<usize>> = parts.iter().map(|(b, _)| b.clone()).collect();
        let n = check_cover(&blocks)?;
        if let Some((b, _)) = parts.iter().find(|(_, c)| *c == 0) {
            return Err(Error::InvalidColor(format!("color 0 on block {b:?}")));
        }
        Ok(Self::from_parts_unchecked(n, parts))
    }

    /// As [`ColoredSetPartition::new`], also checking `color <= a_{#block}`.
    pub fn with_sequence(parts: Vec<(Vec<usize>, usize)>, a: &ColorSequence) -> Result<Self> {
        let p = Self::new(parts)?;
        p.validate(a)?;
        Ok(p)
    }

    fn from_parts_unchecked(n: usize, parts: Vec<(Vec<usize>, usize)>) -> Self {
        let mut parts: Vec<Part> = parts
            .into_iter()
            .map(|(mut block, color)| {
                block.sort_unstable();
                Part { block, color }
            })
            .collect();
        parts.sort();
        ColoredSetPartition { n, parts }
    }

    pub fn empty() -> Self {
        ColoredSetPartition { n: 0, parts: Vec::new() }
    }

    /// Every block colored 1.
    pub fn from_uncolored(p: &SetPartition) -> Self {
        ColoredSetPartition {
            n: p.size(),
            parts: p.blocks().iter().map(|b| Part { block: b.clone(), color: 1 }).collect(),
        }
    }

    /// `|Π|`
    pub fn size(&self) -> usize {
        self.n
    }

    /// `#Π`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn underlying(&self) -> SetPartition {
        SetPartition { n: self.n, blocks: self.parts.iter().map(|p| p.block.clone()).collect() }
    }

    pub fn validate(&self, a: &ColorSequence) -> Result<()> {
        for p in &self.parts {
            let m = p.block.len();
            if p.color < 1 || BigInt::from(p.color) > a.value(m) {
                return Err(Error::InvalidColor(format!(
                    "color {} on a block of size {m}, but a_{m} = {}",
                    p.color,
                    a.value(m)
                )));
            }
        }
        Ok(())
    }

    /// Multiset of `(block size, color)` pairs, sorted.
    pub fn type_signature(&self) -> Vec<(usize, usize)> {
        let mut t: Vec<_> = self.parts.iter().map(|p| (p.block.len(), p.color)).collect();
        t.sort_unstable();
        t
    }

    /// `∏ #block!`
    pub fn factorial_weight(&self) -> BigInt {
        self.parts.iter().map(|p| factorial(p.block.len())).product()
    }

    /// Relabels `i -> targets[i-1]` without standardizing.
    fn relabel(&self, targets: &[usize]) -> impl Iterator<Item = (Vec<usize>, usize)> + '_ {
        let targets = targets.to_vec();
        self.parts.iter().map(move |p| (p.block.iter().map(|&i| targets[i - 1]).collect(), p.color))
    }

    /// `Π ⊎ Π'`: the parts of `Π'` shifted by `|Π|`.
    pub fn shifted_union(&self, other: &Self) -> Self {
        let shift: Vec<usize> = (self.n + 1..=self.n + other.n).collect();
        let mut parts: Vec<(Vec<usize>, usize)> = self.parts.iter().map(|p| (p.block.clone(), p.color)).collect();
        parts.extend(other.relabel(&shift));
        Self::from_parts_unchecked(self.n + other.n, parts)
    }

    /// `Π ⋓ Π'`: every way of interleaving the supports.
    pub fn matching_unions(&self, other: &Self) -> BTreeSet<Self> {
        let total = self.n + other.n;
        let mut out = BTreeSet::new();
        for s in combinations(total, self.n) {
            let c = complement(total, &s);
            let mut parts: Vec<_> = self.relabel(&s).collect();
            parts.extend(other.relabel(&c));
            out.insert(Self::from_parts_unchecked(total, parts));
        }
        out
    }

    /// The sub-partition formed by the parts selected by `mask`, standardized.
    pub fn restrict_std(&self, mask: &[bool]) -> Self {
        let raw: Vec<_> = self
            .parts
            .iter()
            .zip(mask)
            .filter(|(_, &m)| m)
            .map(|(p, _)| (p.block.clone(), p.color))
            .collect();
        standardize_unchecked(raw)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.parts.iter().map(|p| json!([p.block, p.color])).collect())
    }
}

impl fmt::Display for ColoredSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                let b: Vec<String> = p.block.iter().map(|x| x.to_string()).collect();
                format!("[{{{}}},{}]", b.join(","), p.color)
            })
            .collect();
        write!(f, "{{{}}}", ps.join(","))
    }
}

fn standardize_unchecked(raw: Vec<(Vec<usize>, usize)>) -> ColoredSetPartition {
    let mut all: Vec<usize> = raw.iter().flat_map(|(b, _)| b.iter().copied()).collect();
    all.sort_unstable();
    let rank: BTreeMap<usize, usize> = all.iter().enumerate().map(|(i, &x)| (x, i + 1)).collect();
    let parts = raw.into_iter().map(|(b, c)| (b.iter().map(|x| rank[x]).collect(), c)).collect();
    ColoredSetPartition::from_parts_unchecked(all.len(), parts)
}

/// `std(Π)`: renames the i-th smallest integer to `i`.
pub fn standardize(raw: &[(Vec<usize>, usize)], a: &ColorSequence) -> Result<ColoredSetPartition> {
    let mut seen = BTreeSet::new();
    for (b, _) in raw {
        if b.is_empty() {
            return Err(Error::InvalidInput("empty block".into()));
        }
        for &x in b {
            if !seen.insert(x) {
                return Err(Error::InvalidInput(format!("element {x} occurs in two blocks")));
            }
        }
    }
    let p = standardize_unchecked(raw.to_vec());
    p.validate(a)?;
    Ok(p)
}

/// `α^Π_{Π',Π''}`: the number of ways to split the parts of `Π` into two
/// sets standardizing to `Π'` and `Π''` respectively.
pub fn splitting_count(p1: &ColoredSetPartition, p2: &ColoredSetPartition, p: &ColoredSetPartition) -> u64 {
    if p1.size() + p2.size() != p.size() || p1.len() + p2.len() != p.len() {
        return 0;
    }
    let k = p.len();
    let mut count = 0;
    for s in combinations(k, p1.len()) {
        let mut mask = vec![false; k];
        for &i in &s {
            mask[i - 1] = true;
        }
        if p.restrict_std(&mask) == *p1 {
            let inv: Vec<bool> = mask.iter().map(|m| !m).collect();
            if p.restrict_std(&inv) == *p2 {
                count += 1;
            }
        }
    }
    count
}

/// `CP_n(a)`, sorted: every ordinary partition with every admissible
/// coloring of its blocks.
pub fn enumerate_colored(a: &ColorSequence, n: usize) -> Vec<ColoredSetPartition> {
    let mut out = Vec::new();
    for sp in enumerate_ordinary(n) {
        let ranges: Vec<usize> = sp.blocks.iter().map(|b| a.colors(b.len())).collect();
        if ranges.contains(&0) {
            continue;
        }
        let mut colors = vec![1usize; ranges.len()];
        loop {
            let parts = sp.blocks.iter().cloned().zip(colors.iter().copied()).collect();
            out.push(ColoredSetPartition::from_parts_unchecked(n, parts));
            // odometer
            let mut i = 0;
            while i < colors.len() && colors[i] == ranges[i] {
                colors[i] = 1;
                i += 1;
            }
            if i == colors.len() {
                break;
            }
            colors[i] += 1;
        }
    }
    out.sort();
    out
}

/// `CP_{n,k}(a)`: colored partitions of `{1..n}` with exactly `k` parts.
pub fn enumerate_colored_parts(a: &ColorSequence, n: usize, k: usize) -> Vec<ColoredSetPartition> {
    enumerate_colored(a, n).into_iter().filter(|p| p.len() == k).collect()
}

/// Number of isomorphism types of colored partitions of size `n`:
/// `[t^n] ∏_{i>0} (1 - t^i)^{-a_i}`.
pub fn count_by_type(a: &ColorSequence, n: usize) -> BigInt {
    let mut series = vec![BigInt::zero(); n + 1];
    series[0] = BigInt::one();
    for i in 1..=n {
        let ai = a.value(i).to_i64().expect("color count fits in i64");
        if ai == 0 {
            continue;
        }
        // (1 - t^i)^{-a_i} = Σ_j binom(a_i + j - 1, j) t^{ij}
        let mut next = vec![BigInt::zero(); n + 1];
        for (d, s) in series.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let mut j = 0;
            while d + i * j <= n {
                next[d + i * j] += s * binomial(ai + j as i64 - 1, j as i64);
                j += 1;
            }
        }
        series = next;
    }
    series[n].clone()
}

// ---------------------------------------------------------------------------
// Bijections

/// `(c-1)`-th permutation of `0..m` in lexicographic order.
fn unrank_permutation(m: usize, c: usize) -> Vec<usize> {
    let mut r = c - 1;
    let mut avail: Vec<usize> = (0..m).collect();
    let mut out = Vec::with_capacity(m);
    for i in (0..m).rev() {
        let f = factorial(i).to_usize().unwrap();
        out.push(avail.remove(r / f));
        r %= f;
    }
    out
}

/// 1-based lexicographic rank of a permutation of `0..m`.
fn rank_permutation(p: &[usize]) -> usize {
    let m = p.len();
    let mut r = 0;
    for i in 0..m {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        r += smaller * factorial(m - 1 - i).to_usize().unwrap();
    }
    r + 1
}

/// Set partition of `{1..n}` into nonempty lists, ordered by list minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ListPartition {
    n: usize,
    lists: Vec<Vec<usize>>,
}

impl ListPartition {
    pub fn new(mut lists: Vec<Vec<usize>>) -> Result<Self> {
        let n = check_cover(&lists)?;
        lists.sort_by_key(|l| *l.iter().min().unwrap());
        Ok(ListPartition { n, lists })
    }
    pub fn size(&self) -> usize {
        self.n
    }
    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }
    pub fn to_json(&self) -> Value {
        json!(self.lists)
    }
}

/// Block `{i_1<...<i_m}` colored `c` becomes `(i_σ(1), ..., i_σ(m))` with `σ`
/// the `c`-th permutation in lexicographic order.
pub fn to_lists(p: &ColoredSetPartition, a: &ColorSequence) -> Result<ListPartition> {
    a.require(&ColorRule::Factorial, p.size())?;
    p.validate(a)?;
    let lists = p
        .parts
        .iter()
        .map(|part| unrank_permutation(part.block.len(), part.color).iter().map(|&j| part.block[j]).collect())
        .collect();
    ListPartition::new(lists)
}

pub fn from_lists(l: &ListPartition) -> ColoredSetPartition {
    let parts = l
        .lists
        .iter()
        .map(|list| {
            let mut block = list.clone();
            block.sort_unstable();
            let perm: Vec<usize> = list.iter().map(|x| block.binary_search(x).unwrap()).collect();
            (block, rank_permutation(&perm))
        })
        .collect();
    ColoredSetPartition::from_parts_unchecked(l.n, parts)
}

/// Permutation of `{1..n}` as disjoint cycles, each starting at its minimum,
/// ordered by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclePermutation {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CyclePermutation {
    pub fn new(cycles: Vec<Vec<usize>>) -> Result<Self> {
        let n = check_cover(&cycles)?;
        let mut cycles: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|mut c| {
                let i = c.iter().enumerate().min_by_key(|(_, &x)| x).unwrap().0;
                c.rotate_left(i);
                c
            })
            .collect();
        cycles.sort();
        Ok(CyclePermutation { n, cycles })
    }

    /// From one-line notation `σ(1), ..., σ(n)`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut sorted = images.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
        }
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = images[x - 1];
            }
            cycles.push(c);
        }
        Self::new(cycles)
    }

    pub fn to_one_line(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for c in &self.cycles {
            for (i, &x) in c.iter().enumerate() {
                out[x - 1] = c[(i + 1) % c.len()];
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.n
    }
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }
    pub fn to_json(&self) -> Value {
        json!(self.cycles)
    }
}

/// The labelings `ι_m` between colors `1..(m-1)!` and the cycles of length
/// `m` on `{1..m}`.
///
/// The canonical choice ranks a cycle `(1, x_2, ..., x_m)` by the
/// lexicographic rank of `(x_2, ..., x_m)`. Overrides replace the labeling
/// for a given `m` entirely; cycles are keyed by one-line notation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleLabeling {
    overrides: BTreeMap<usize, BTreeMap<Vec<usize>, usize>>,
}

impl CycleLabeling {
    pub fn canonical() -> Self {
        Self::default()
    }

    /// Installs `ι_m(σ) = c` for the listed one-line cycles. For each length
    /// present, the entries must cover every cycle and every color exactly once.
    pub fn with_overrides(entries: &[(&[usize], usize)]) -> Result<Self> {
        let mut overrides: BTreeMap<usize, BTreeMap<Vec<usize>, usize>> = BTreeMap::new();
        for (perm, c) in entries {
            let cp = CyclePermutation::from_one_line(perm)?;
            if cp.cycles.len() != 1 {
                return Err(Error::InvalidInput(format!("{perm:?} is not a single cycle")));
            }
            overrides.entry(perm.len()).or_default().insert(perm.to_vec(), *c);
        }
        for (&m, map) in &overrides {
            let total = factorial(m - 1).to_usize().unwrap();
            let colors: BTreeSet<usize> = map.values().copied().collect();
            if map.len() != total || colors != (1..=total).collect() {
                return Err(Error::InvalidInput(format!("labeling of {m}-cycles is not a bijection onto 1..{total}")));
            }
        }
        Ok(CycleLabeling { overrides })
    }

    /// The labeling used in the worked example of the cycle bijection:
    /// `ι_1(1) = 1`, `ι_3(231) = 2`, `ι_3(312) = 1`.
    pub fn example() -> Self {
        Self::with_overrides(&[(&[1], 1), (&[2, 3, 1], 2), (&[3, 1, 2], 1)]).unwrap()
    }

    /// Standard cycle of length `m` with color `c`, in one-line notation.
    pub fn unrank(&self, m: usize, c: usize) -> Vec<usize> {
        if let Some(map) = self.overrides.get(&m) {
            return map.iter().find(|(_, &v)| v == c).expect("color in range").0.clone();
        }
        let rest = unrank_permutation(m - 1, c);
        let mut cycle = vec![1];
        cycle.extend(rest.iter().map(|&x| x + 2));
        CyclePermutation { n: m, cycles: vec![cycle] }.to_one_line()
    }

    pub fn rank(&self, one_line: &[usize]) -> usize {
        let m = one_line.len();
        if let Some(map) = self.overrides.get(&m) {
            return map[one_line];
        }
        let cp = CyclePermutation::from_one_line(one_line).unwrap();
        let rest: Vec<usize> = cp.cycles[0][1..].iter().map(|&x| x - 2).collect();
        rank_permutation(&rest)
    }
}

/// Block of size `m` colored `c` becomes the cycle on that block whose
/// standardization is `ι_m(c)`.
pub fn to_cycle_permutation(
    p: &ColoredSetPartition,
    a: &ColorSequence,
    labels: &CycleLabeling,
) -> Result<CyclePermutation> {
    a.require(&ColorRule::ShiftedFactorial, p.size())?;
    p.validate(a)?;
    let mut images = vec![0; p.size()];
    for part in &p.parts {
        let std = labels.unrank(part.block.len(), part.color);
        for (i, &x) in part.block.iter().enumerate() {
            images[x - 1] = part.block[std[i] - 1];
        }
    }
    CyclePermutation::from_one_line(&images)
}

pub fn from_cycle_permutation(s: &CyclePermutation, labels: &CycleLabeling) -> ColoredSetPartition {
    let images = s.to_one_line();
    let parts = s
        .cycles
        .iter()
        .map(|c| {
            let mut block = c.clone();
            block.sort_unstable();
            let pos = |x: usize| block.binary_search(&x).unwrap() + 1;
            let std: Vec<usize> = block.iter().map(|&x| pos(images[x - 1])).collect();
            let color = labels.rank(&std);
            (block, color)
        })
        .collect();
    ColoredSetPartition::from_parts_unchecked(s.n, parts)
}

/// Partition of a partition: the blocks of an inner set partition of
/// `{1..n}`, grouped. Canonically each group is sorted by block minimum and
/// groups by their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level2Partition {
    n: usize,
    groups: Vec<Vec<Vec<usize>>>,
}

impl Level2Partition {
    pub fn new(groups: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let flat: Vec<Vec<usize>> = groups.iter().flatten().cloned().collect();
        let n = check_cover(&flat)?;
        if groups.iter().any(Vec::is_empty) {
            return Err(Error::InvalidInput("empty group".into()));
        }
        let mut groups: Vec<Vec<Vec<usize>>> = groups
            .into_iter()
            .map(|g| {
                let mut g: Vec<Vec<usize>> = g
                    .into_iter()
                    .map(|mut b| {
                        b.sort_unstable();
                        b
                    })
                    .collect();
                g.sort();
                g
            })
            .collect();
        groups.sort();
        Ok(Level2Partition { n, groups })
    }

    pub fn size(&self) -> usize {
        self.n
    }
    pub fn groups(&self) -> &[Vec<Vec<usize>>] {
        &self.groups
    }
    pub fn inner(&self) -> SetPartition {
        SetPartition::new(self.groups.iter().flatten().cloned().collect()).unwrap()
    }
    pub fn to_json(&self) -> Value {
        json!(self.groups)
    }
}

/// Block of size `m` colored `c` is split by the `c`-th set partition of
/// `{1..m}` in [`enumerate_ordinary`] order.
pub fn to_level2(p: &ColoredSetPartition, a: &ColorSequence) -> Result<Level2Partition> {
    a.require(&ColorRule::Bell, p.size())?;
    p.validate(a)?;
    let groups = p
        .parts
        .iter()
        .map(|part| {
            let sp = &enumerate_ordinary(part.block.len())[part.color - 1];
            sp.blocks.iter().map(|b| b.iter().map(|&i| part.block[i - 1]).collect()).collect()
        })
        .collect();
    Level2Partition::new(groups)
}

pub fn from_level2(l: &Level2Partition) -> ColoredSetPartition {
    let parts = l
        .groups
        .iter()
        .map(|g| {
            let mut block: Vec<usize> = g.iter().flatten().copied().collect();
            block.sort_unstable();
            let local: Vec<Vec<usize>> =
                g.iter().map(|b| b.iter().map(|x| block.binary_search(x).unwrap() + 1).collect()).collect();
            let sp = SetPartition::new(local).unwrap();
            let color = enumerate_ordinary(block.len()).binary_search(&sp).unwrap() + 1;
            (block, color)
        })
        .collect();
    ColoredSetPartition::from_parts_unchecked(l.n, parts)
}

/// Map `f: {1..n} -> {1..n}` with `f ∘ f = f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdempotentEndofunction {
    images: Vec<usize>,
}

impl IdempotentEndofunction {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        for &y in &images {
            if y == 0 || y > n || images[y - 1] != y {
                return Err(Error::InvalidInput(format!("{images:?} is not idempotent")));
            }
        }
        Ok(IdempotentEndofunction { images })
    }
    pub fn size(&self) -> usize {
        self.images.len()
    }
    pub fn images(&self) -> &[usize] {
        &self.images
    }
    pub fn to_json(&self) -> Value {
        json!(self.images)
    }
}

/// Every element of a block colored `c` is sent to the `c`-th smallest
/// element of that block.
pub fn to_idempotent(p: &ColoredSetPartition, a: &ColorSequence) -> Result<IdempotentEndofunction> {
    a.require(&ColorRule::Idempotent, p.size())?;
    p.validate(a)?;
    let mut images = vec![0; p.size()];
    for part in &p.parts {
        for &x in &part.block {
            images[x - 1] = part.block[part.color - 1];
        }
    }
    IdempotentEndofunction::new(images)
}

/// Fibers over fixed points, the fiber of `i` colored by
/// `#{j in f^{-1}(i) : j <= i}`.
pub fn from_idempotent(f: &IdempotentEndofunction) -> ColoredSetPartition {
    let n = f.size();
    let parts = (1..=n)
        .filter(|&i| f.images[i - 1] == i)
        .map(|i| {
            let fiber: Vec<usize> = (1..=n).filter(|&j| f.images[j - 1] == i).collect();
            let color = fiber.iter().filter(|&&j| j <= i).count();
            (fiber, color)
        })
        .collect();
    ColoredSetPartition::from_parts_unchecked(n, parts)
}

/// All permutations of `{1..m}` (1-based one-line notation), lexicographic.
pub fn all_permutations(m: usize) -> Vec<Vec<usize>> {
    permutations(m).into_iter().map(|p| p.into_iter().map(|x| x + 1).collect()).collect()
}
