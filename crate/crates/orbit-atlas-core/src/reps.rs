//! The three equivalent parametrizations of the orbit set: decorated
//! permutations, flags in standard form, and share pairs (plain and
//! standardized), with all conversions between them.

use alloc::vec::Vec;

use crate::perm::{sigma_cycle, tau_from_delta, Perm};

/// A permutation `w` together with a decoration set `delta` whose elements,
/// read in ascending order, occupy strictly decreasing positions in `w`.
///
/// The orbit parameter for the stabilizer of the line through `e_i` has
/// `max(delta) = i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DecoratedPerm {
    w: Perm,
    delta: Vec<usize>,
}

impl DecoratedPerm {
    pub fn new(w: Perm, delta: Vec<usize>) -> DecoratedPerm {
        assert!(
            DecoratedPerm::is_valid(&w, &delta),
            "decoration {:?} is not a decreasing sequence for the inverse of {}",
            delta,
            w
        );
        DecoratedPerm { w, delta }
    }

    /// Checks that `delta` is nonempty, ascending, within range, and that
    /// `w⁻¹` is strictly decreasing along it.
    pub fn is_valid(w: &Perm, delta: &[usize]) -> bool {
        if delta.is_empty() || delta.windows(2).any(|p| p[0] >= p[1]) {
            return false;
        }
        if *delta.last().unwrap() > w.n() || delta[0] < 1 {
            return false;
        }
        let inv = w.inverse();
        delta
            .windows(2)
            .all(|p| inv.apply(p[0]) > inv.apply(p[1]))
    }

    pub fn w(&self) -> &Perm {
        &self.w
    }

    pub fn delta(&self) -> &[usize] {
        &self.delta
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// The index whose line stabilizer this decoration belongs to: `max(delta)`.
    pub fn i(&self) -> usize {
        *self.delta.last().unwrap()
    }

    /// The canonical standard-form flag of the same orbit: apply the
    /// decoration cycle to the coordinate flag of `w`, then hat the
    /// decoration entries below `i`.
    pub fn to_flag(&self) -> StandardFlag {
        let i = self.i();
        let tau = tau_from_delta(&self.delta, i, self.n());
        let p = tau.compose(&self.w);
        let entries = (1..=self.n())
            .map(|m| {
                let idx = p.apply(m);
                FlagEntry {
                    idx,
                    hat: idx != i && self.delta.binary_search(&idx).is_ok(),
                }
            })
            .collect();
        StandardFlag::new(i, entries)
    }

    /// The share pair of the same orbit: `(w, τ_delta · w · σ_i⁻¹)`.
    pub fn to_share_pair(&self) -> SharePair {
        let i = self.i();
        let n = self.n();
        let tau = tau_from_delta(&self.delta, i, n);
        let u_i = tau.compose(&self.w).compose(&sigma_cycle(i, n).inverse());
        SharePair {
            i,
            w: self.w.clone(),
            u_i,
        }
    }
}

/// All decorated permutations of degree `n` with `max(delta) = i`, in
/// lexicographic order of the one-line word with the decoration bitset as
/// tie-break.
pub fn enumerate_decorated(n: usize, i: usize) -> Vec<DecoratedPerm> {
    assert!(i >= 1 && i <= n, "index {} out of range 1..={}", i, n);
    let mut out = Vec::new();
    for w in crate::perm::enumerate_perms(n) {
        for mask in 0u64..(1 << (i - 1)) {
            let mut delta: Vec<usize> = (1..i).filter(|b| mask >> (b - 1) & 1 == 1).collect();
            delta.push(i);
            if DecoratedPerm::is_valid(&w, &delta) {
                out.push(DecoratedPerm { w: w.clone(), delta });
            }
        }
    }
    out
}

/// One entry of a flag in standard form: the basis index `idx`, either
/// plain (`e_idx`) or hatted (`ê_idx = e_idx + e_i`, only for `idx < i`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FlagEntry {
    pub idx: usize,
    pub hat: bool,
}

/// A flag in `i`-standard form: `n` tagged entries whose indices are a
/// permutation of `{1..n}`, with the plain entry `i` present, no hat after
/// it, and hat indices strictly decreasing along the flag.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StandardFlag {
    i: usize,
    entries: Vec<FlagEntry>,
}

impl StandardFlag {
    pub fn new(i: usize, entries: Vec<FlagEntry>) -> StandardFlag {
        assert!(
            StandardFlag::is_valid(i, &entries),
            "entries do not form a flag in {}-standard form",
            i
        );
        StandardFlag { i, entries }
    }

    pub fn is_valid(i: usize, entries: &[FlagEntry]) -> bool {
        let n = entries.len();
        if i < 1 || i > n {
            return false;
        }
        let mut seen = alloc::vec![false; n + 1];
        for e in entries {
            if e.idx < 1 || e.idx > n || seen[e.idx] {
                return false;
            }
            seen[e.idx] = true;
            if e.hat && e.idx >= i {
                return false;
            }
        }
        let Some(pos_i) = entries.iter().position(|e| e.idx == i && !e.hat) else {
            return false;
        };
        if entries[pos_i + 1..].iter().any(|e| e.hat) {
            return false;
        }
        let hats: Vec<usize> = entries.iter().filter(|e| e.hat).map(|e| e.idx).collect();
        hats.windows(2).all(|p| p[0] > p[1])
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[FlagEntry] {
        &self.entries
    }

    /// Decoration set of the flag: the hat indices together with `i`.
    fn delta(&self) -> Vec<usize> {
        let mut delta: Vec<usize> = self.entries.iter().filter(|e| e.hat).map(|e| e.idx).collect();
        delta.push(self.i);
        delta.sort_unstable();
        delta
    }

    /// The permutation reading off the entry indices with hats erased.
    fn unhat_perm(&self) -> Perm {
        let images: Vec<usize> = self.entries.iter().map(|e| e.idx).collect();
        Perm::from_images(&images)
    }

    /// The decorated permutation of the same orbit.
    pub fn to_decorated(&self) -> DecoratedPerm {
        DecoratedPerm::new(self.coordinate_perm(), self.delta())
    }

    /// The permutation presenting the unique coordinate (hat-free) flag in
    /// the same orbit: `τ_delta⁻¹` composed with the unhatted entry word.
    pub fn coordinate_perm(&self) -> Perm {
        let delta = self.delta();
        let tau = tau_from_delta(&delta, self.i, self.n());
        tau.inverse().compose(&self.unhat_perm())
    }

    /// The permutation positioning the hat-erased flag against the re-based
    /// standard flag (the one led by `e_i`): the unhatted entry word
    /// composed with `σ_i⁻¹`.
    pub fn twisted_perm(&self) -> Perm {
        self.unhat_perm().compose(&sigma_cycle(self.i, self.n()).inverse())
    }

    /// The share pair of the same orbit.
    pub fn to_share_pair(&self) -> SharePair {
        SharePair {
            i: self.i,
            w: self.coordinate_perm(),
            u_i: self.twisted_perm(),
        }
    }
}

/// All flags in `i`-standard form of degree `n`, by direct search over
/// entry words and hat placements, in canonical order.  Independent of the
/// decorated-permutation enumeration, so the two can cross-check.
pub fn enumerate_flags(n: usize, i: usize) -> Vec<StandardFlag> {
    assert!(i >= 1 && i <= n, "index {} out of range 1..={}", i, n);
    let mut out = Vec::new();
    for p in crate::perm::enumerate_perms(n) {
        // Hats may only sit on entries with idx < i, before the entry i.
        let slots: Vec<usize> = {
            let pos_i = (1..=n).position(|m| p.apply(m) == i).unwrap();
            (0..pos_i).filter(|&m| p.apply(m + 1) < i).collect()
        };
        for mask in 0u64..(1 << slots.len()) {
            let entries: Vec<FlagEntry> = (1..=n)
                .map(|m| FlagEntry {
                    idx: p.apply(m),
                    hat: slots
                        .iter()
                        .enumerate()
                        .any(|(b, &s)| s == m - 1 && mask >> b & 1 == 1),
                })
                .collect();
            if StandardFlag::is_valid(i, &entries) {
                out.push(StandardFlag { i, entries });
            }
        }
    }
    out.sort();
    out
}

/// A pair of permutations `(w, u_i)` naming the two coordinate orbits that
/// intersect in a given orbit; valid exactly when `u_i · σ_i · w⁻¹` is a
/// decoration cycle whose set is decreasing for `w⁻¹`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SharePair {
    i: usize,
    w: Perm,
    u_i: Perm,
}

impl SharePair {
    pub fn new(i: usize, w: Perm, u_i: Perm) -> SharePair {
        SharePair::try_new(i, w, u_i).expect("not a valid share pair")
    }

    /// Validates the pair by recovering its decoration set; `None` when
    /// `u_i · σ_i · w⁻¹` is not a decoration cycle for `w`.
    pub fn try_new(i: usize, w: Perm, u_i: Perm) -> Option<SharePair> {
        if w.n() != u_i.n() || i < 1 || i > w.n() {
            return None;
        }
        let tau = u_i.compose(&sigma_cycle(i, w.n())).compose(&w.inverse());
        let delta = delta_of_cycle(&tau, i)?;
        if !DecoratedPerm::is_valid(&w, &delta) {
            return None;
        }
        Some(SharePair { i, w, u_i })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    pub fn w(&self) -> &Perm {
        &self.w
    }

    pub fn u_i(&self) -> &Perm {
        &self.u_i
    }

    /// The decorated permutation of the same orbit.
    pub fn to_decorated(&self) -> DecoratedPerm {
        let tau = self
            .u_i
            .compose(&sigma_cycle(self.i, self.n()))
            .compose(&self.w.inverse());
        let delta = delta_of_cycle(&tau, self.i).expect("validated at construction");
        DecoratedPerm::new(self.w.clone(), delta)
    }

    /// Conjugates the second coordinate into standard position:
    /// `u = σ_i⁻¹ · u_i · σ_i`.
    pub fn standardize(&self) -> StdPair {
        let sigma = sigma_cycle(self.i, self.n());
        StdPair {
            i: self.i,
            w: self.w.clone(),
            u: sigma.inverse().compose(&self.u_i).compose(&sigma),
        }
    }
}

/// Recovers the decoration set from a candidate cycle: `tau` must fix
/// everything outside the forward orbit of `i`, and that orbit must step
/// strictly downward below `i` before closing.  `tau = id` gives `{i}`.
fn delta_of_cycle(tau: &Perm, i: usize) -> Option<Vec<usize>> {
    let mut cycle = alloc::vec![i];
    let mut j = tau.apply(i);
    while j != i {
        if j >= *cycle.last().unwrap() {
            return None;
        }
        cycle.push(j);
        j = tau.apply(j);
    }
    for m in 1..=tau.n() {
        if !cycle.contains(&m) && tau.apply(m) != m {
            return None;
        }
    }
    cycle.sort_unstable();
    Some(cycle)
}

/// True when `(w, y)` is a valid share pair for the index `i`.
pub fn is_share_pair(w: &Perm, y: &Perm, i: usize) -> bool {
    SharePair::try_new(i, w.clone(), y.clone()).is_some()
}

/// A share pair with the second coordinate standardized, so that both
/// coordinates live in the same simple system and closure order is the
/// product of plain Bruhat orders.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StdPair {
    i: usize,
    w: Perm,
    u: Perm,
}

impl StdPair {
    pub fn new(i: usize, w: Perm, u: Perm) -> StdPair {
        StdPair::try_new(i, w, u).expect("not a valid standardized pair")
    }

    pub fn try_new(i: usize, w: Perm, u: Perm) -> Option<StdPair> {
        let q = StdPair { i, w, u };
        SharePair::try_new(i, q.w.clone(), q.destandardize().u_i)?;
        Some(q)
    }

    pub(crate) fn new_unchecked(i: usize, w: Perm, u: Perm) -> StdPair {
        StdPair { i, w, u }
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    pub fn w(&self) -> &Perm {
        &self.w
    }

    pub fn u(&self) -> &Perm {
        &self.u
    }

    /// Undoes the conjugation: `u_i = σ_i · u · σ_i⁻¹`.
    pub fn destandardize(&self) -> SharePair {
        let sigma = sigma_cycle(self.i, self.n());
        SharePair {
            i: self.i,
            w: self.w.clone(),
            u_i: sigma.compose(&self.u).compose(&sigma.inverse()),
        }
    }
}

/// All valid standardized pairs for `(n, i)`, in canonical order.
pub fn enumerate_std_pairs(n: usize, i: usize) -> Vec<StdPair> {
    let mut out: Vec<StdPair> = enumerate_decorated(n, i)
        .iter()
        .map(|d| d.to_share_pair().standardize())
        .collect();
    out.sort();
    out
}
