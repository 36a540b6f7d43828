//! Partitions of an index set into ordered lists, the distinguished-list
//! refinement, their correspondence with flags in standard form, strict
//! partial permutations, and the closed-form counts.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::binomial;

use crate::factorial;
use crate::perm::{min_coset_rep, Perm};
use crate::reps::{DecoratedPerm, FlagEntry, StandardFlag};

/// A partition of a finite index set into nonempty ordered lists.
/// Canonical form sorts the blocks by their least item.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Pil {
    blocks: Vec<Vec<usize>>,
}

impl Pil {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Pil {
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), total, "blocks must have pairwise disjoint supports");
        assert!(blocks.iter().all(|b| !b.is_empty()), "blocks must be nonempty");
        blocks.sort_by_key(|b| *b.iter().min().unwrap());
        Pil { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The underlying index set, ascending.
    pub fn ground(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }
}

/// A partition into lists with one block singled out.  `distinguished` is
/// the index of that block in canonical order; `None` plays the role of a
/// distinguished list of length zero, which identifies these pairs with
/// plain partitions in the boundary case.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PilWithList {
    pil: Pil,
    distinguished: Option<usize>,
}

impl PilWithList {
    pub fn new(pil: Pil, distinguished: Option<usize>) -> PilWithList {
        if let Some(d) = distinguished {
            assert!(d < pil.blocks.len(), "distinguished block index out of range");
        }
        PilWithList { pil, distinguished }
    }

    pub fn pil(&self) -> &Pil {
        &self.pil
    }

    pub fn distinguished(&self) -> Option<usize> {
        self.distinguished
    }

    /// The distinguished list itself; empty in the boundary case.
    pub fn list(&self) -> &[usize] {
        match self.distinguished {
            Some(d) => &self.pil.blocks[d],
            None => &[],
        }
    }
}

fn orderings(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (k, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut tail in orderings(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// All partitions of `ground` into ordered lists, in canonical order.
pub fn enumerate_pil(ground: &[usize]) -> Vec<Pil> {
    let mut sorted = ground.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), ground.len(), "ground set must not repeat indices");

    // Key each partition by the block of the least remaining element.
    fn go(remaining: &[usize]) -> Vec<Vec<Vec<usize>>> {
        if remaining.is_empty() {
            return vec![Vec::new()];
        }
        let least = remaining[0];
        let rest = &remaining[1..];
        let mut out = Vec::new();
        for mask in 0u64..(1 << rest.len()) {
            let mut support = vec![least];
            let mut left = Vec::new();
            for (b, &x) in rest.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    support.push(x);
                } else {
                    left.push(x);
                }
            }
            for block in orderings(&support) {
                for mut tail in go(&left) {
                    tail.insert(0, block.clone());
                    out.push(tail);
                }
            }
        }
        out
    }

    let mut pils: Vec<Pil> = go(&sorted).into_iter().map(Pil::new).collect();
    pils.sort();
    pils
}

/// All pairs (partition, distinguished block of length `k`) over `{1..n}`,
/// in canonical order.  `k = 0` yields every partition once, with no block
/// distinguished.
pub fn enumerate_pil_with_list(n: usize, k: usize) -> Vec<PilWithList> {
    assert!(k <= n, "list length {} out of range 0..={}", k, n);
    let ground: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for pil in enumerate_pil(&ground) {
        if k == 0 {
            out.push(PilWithList {
                pil,
                distinguished: None,
            });
        } else {
            for d in 0..pil.blocks.len() {
                if pil.blocks[d].len() == k {
                    out.push(PilWithList {
                        pil: pil.clone(),
                        distinguished: Some(d),
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// Reads a flag in full standard form (`i = n`) as a partition into lists:
/// the entry word splits into blocks right after each hat.
pub fn flag_to_pil(f: &StandardFlag) -> Pil {
    assert_eq!(f.i(), f.n(), "flag must be in full standard form");
    let mut blocks = Vec::new();
    let mut block = Vec::new();
    for e in f.entries() {
        block.push(e.idx);
        if e.hat {
            blocks.push(core::mem::take(&mut block));
        }
    }
    blocks.push(block);
    Pil::new(blocks)
}

/// Rebuilds the full-standard-form flag from a partition of `{1..m}`: the
/// block holding `m` goes last hat-free, the others precede it in
/// decreasing order of their final item, which carries the hat.
pub fn pil_to_flag(p: &Pil) -> StandardFlag {
    let ground = p.ground();
    let m = ground.len();
    assert!(
        ground.iter().enumerate().all(|(k, &x)| x == k + 1),
        "ground set must be 1..=m"
    );
    let mut rest: Vec<&Vec<usize>> = Vec::new();
    let mut last = None;
    for b in p.blocks() {
        if b.contains(&m) {
            last = Some(b);
        } else {
            rest.push(b);
        }
    }
    rest.sort_by_key(|b| core::cmp::Reverse(*b.last().unwrap()));
    let mut entries = Vec::with_capacity(m);
    for b in rest {
        for (k, &idx) in b.iter().enumerate() {
            entries.push(FlagEntry {
                idx,
                hat: k + 1 == b.len(),
            });
        }
    }
    for &idx in last.expect("ground contains m") {
        entries.push(FlagEntry { idx, hat: false });
    }
    StandardFlag::new(m, entries)
}

/// Encodes a flag in `i`-standard form as a partition of its positions
/// with a distinguished list: the positions of the plain entries
/// `i+1, ..., n` in that order, plus the blocks of the reduced flag carried
/// back through the minimal coset representative.
pub fn flag_to_pil_pair(f: &StandardFlag) -> PilWithList {
    let n = f.n();
    let i = f.i();
    let mut pos_of = vec![0usize; n + 1];
    for (m, e) in f.entries().iter().enumerate() {
        pos_of[e.idx] = m + 1;
    }
    let support: Vec<usize> = (i + 1..=n).map(|l| pos_of[l]).collect();
    let w = min_coset_rep(&support, n, i);
    let sub_entries: Vec<FlagEntry> = f
        .entries()
        .iter()
        .filter(|e| e.idx <= i)
        .copied()
        .collect();
    let sub = StandardFlag::new(i, sub_entries);
    let w_inv = w.inverse();
    let mut blocks: Vec<Vec<usize>> = flag_to_pil(&sub)
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&x| w_inv.apply(x)).collect())
        .collect();
    if i == n {
        return PilWithList::new(Pil::new(blocks), None);
    }
    blocks.push(support.clone());
    let pil = Pil::new(blocks);
    let d = pil.blocks().iter().position(|b| *b == support).unwrap();
    PilWithList::new(pil, Some(d))
}

/// Inverse of [`flag_to_pil_pair`]: the distinguished list gives the
/// positions of the plain entries `i+1, ..., n`; the remaining blocks,
/// relabelled by the minimal coset representative, rebuild the reduced
/// flag, whose entries fill the remaining positions in order.
pub fn pil_pair_to_flag(p: &PilWithList, i: usize) -> StandardFlag {
    let ground = p.pil().ground();
    let n = ground.len();
    assert!(
        ground.iter().enumerate().all(|(k, &x)| x == k + 1),
        "ground set must be 1..=n"
    );
    let support = p.list().to_vec();
    assert_eq!(support.len(), n - i, "distinguished list must have length n - i");
    let w = min_coset_rep(&support, n, i);
    let reduced: Vec<Vec<usize>> = p
        .pil()
        .blocks()
        .iter()
        .enumerate()
        .filter(|&(d, _)| p.distinguished() != Some(d))
        .map(|(_, b)| b.iter().map(|&x| w.apply(x)).collect())
        .collect();
    let sub = pil_to_flag(&Pil::new(reduced));
    let mut entries = vec![FlagEntry { idx: 0, hat: false }; n];
    for (l, &j) in support.iter().enumerate() {
        entries[j - 1] = FlagEntry {
            idx: i + 1 + l,
            hat: false,
        };
    }
    let mut sub_iter = sub.entries().iter();
    for slot in entries.iter_mut() {
        if slot.idx == 0 {
            *slot = *sub_iter.next().unwrap();
        }
    }
    StandardFlag::new(i, entries)
}

/// An injective map between proper subsets of `{1..n}`, stored as sorted
/// (source, target) pairs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartialPerm {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl PartialPerm {
    pub fn new(n: usize, mut pairs: Vec<(usize, usize)>) -> PartialPerm {
        pairs.sort_unstable();
        assert!(pairs.len() < n, "map must miss at least one source");
        let mut src_seen = vec![false; n + 1];
        let mut tgt_seen = vec![false; n + 1];
        for &(s, t) in &pairs {
            assert!(s >= 1 && s <= n && t >= 1 && t <= n, "entry out of range");
            assert!(!src_seen[s], "source {} repeated", s);
            assert!(!tgt_seen[t], "target {} repeated", t);
            src_seen[s] = true;
            tgt_seen[t] = true;
        }
        PartialPerm { n, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

/// Restricts `w` to the sources it does not send into the decoration set.
pub fn decorated_to_partial(d: &DecoratedPerm) -> PartialPerm {
    let n = d.n();
    let pairs = (1..=n)
        .filter(|&j| d.delta().binary_search(&d.w().apply(j)).is_err())
        .map(|j| (j, d.w().apply(j)))
        .collect();
    PartialPerm::new(n, pairs)
}

/// Completes a strict partial permutation to a decorated permutation: the
/// missed targets become the decoration, and the unmapped sources take
/// them in reversed order.
pub fn partial_to_decorated(k: &PartialPerm) -> DecoratedPerm {
    let n = k.n();
    let mut images = vec![0usize; n];
    let mut tgt_used = vec![false; n + 1];
    for &(s, t) in k.pairs() {
        images[s - 1] = t;
        tgt_used[t] = true;
    }
    let delta: Vec<usize> = (1..=n).filter(|&t| !tgt_used[t]).collect();
    let mut missing = delta.iter().rev();
    for slot in images.iter_mut() {
        if *slot == 0 {
            *slot = *missing.next().unwrap();
        }
    }
    DecoratedPerm::new(Perm::from_images(&images), delta)
}

/// All strict partial permutations of `{1..n}`, in canonical order.
pub fn enumerate_partial(n: usize) -> Vec<PartialPerm> {
    fn injections(sources: &[usize], targets: &[usize]) -> Vec<Vec<(usize, usize)>> {
        let Some((&s, rest)) = sources.split_first() else {
            return vec![Vec::new()];
        };
        let mut out = Vec::new();
        for (k, &t) in targets.iter().enumerate() {
            let mut left = targets.to_vec();
            left.remove(k);
            for mut tail in injections(rest, &left) {
                tail.insert(0, (s, t));
                out.push(tail);
            }
        }
        out
    }
    let all: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let sources: Vec<usize> = (1..=n).filter(|s| mask >> (s - 1) & 1 == 1).collect();
        if sources.len() == n {
            continue;
        }
        for pairs in injections(&sources, &all) {
            out.push(PartialPerm::new(n, pairs));
        }
    }
    out.sort();
    out
}

/// Number of partitions of an `n`-element set into ordered lists, by the
/// closed-form sum over the number of blocks.
pub fn count_pil(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    let mut total = BigUint::from(0u32);
    for k in 1..=n {
        total += binomial(BigUint::from(n - 1), BigUint::from(k - 1)) * factorial(n)
            / factorial(k);
    }
    total
}

/// Number of partitions of `{1..n}` into lists with a distinguished block
/// of length `k`: choose and order the block, partition the rest.
pub fn count_pil_with_list(n: usize, k: usize) -> BigUint {
    assert!(k <= n, "list length {} out of range 0..={}", k, n);
    binomial(BigUint::from(n), BigUint::from(k)) * factorial(k) * count_pil(n - k)
}

/// Closed-form orbit count for the line stabilizer of `e_i` acting on the
/// degree-`n` flag variety: `n(n-1)...(i+1) · count_pil(i)`.
pub fn count_orbits(n: usize, i: usize) -> BigUint {
    assert!(i >= 1 && i <= n, "index {} out of range 1..={}", i, n);
    let mut total = count_pil(i);
    for m in i + 1..=n {
        total *= BigUint::from(m);
    }
    total
}
