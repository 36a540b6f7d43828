//! Permutations of `{1..n}` in one-line notation, with the Coxeter-side
//! helpers the orbit combinatorics needs: length, Bruhat order, the
//! index-lowering cycles used to re-base flags, minimal coset
//! representatives, and the length-increasing monoid actions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Permutation of `{1..n}`, stored in one-line notation: `images[j-1] = w(j)`.
///
/// Composition is right-to-left: `(u.compose(v))(j) = u(v(j))`.  Acting on
/// the base flag, `w` presents the coordinate flag whose m-th entry is
/// `e_{w(m)}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Identity permutation of degree `n`.
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from one-line notation; the images must be a
    /// bijection of `{1..n}`.
    pub fn from_images(images: &[usize]) -> Perm {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in images {
            assert!(v >= 1 && v <= n, "image {} out of range 1..={}", v, n);
            assert!(!seen[v], "image {} repeated", v);
            seen[v] = true;
        }
        Perm {
            images: images.to_vec(),
        }
    }

    /// The simple transposition `s_k` swapping `k` and `k+1`; `1 <= k < n`.
    pub fn simple(k: usize, n: usize) -> Perm {
        assert!(k >= 1 && k < n, "simple reflection index {} out of range 1..{}", k, n);
        let mut p = Perm::identity(n);
        p.images.swap(k - 1, k);
        p
    }

    /// Degree.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// One-line notation.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Value at the 1-indexed point `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(m, &v)| v == m + 1)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (m, &v) in self.images.iter().enumerate() {
            inv[v - 1] = m + 1;
        }
        Perm { images: inv }
    }

    /// `(self ∘ other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "degree mismatch in composition");
        Perm {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut inv = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// One reduced word for `self`, as simple-reflection indices read in
    /// composition order: `self = s_{word[0]} ∘ s_{word[1]} ∘ ...`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        let mut word = Vec::with_capacity(self.length());
        loop {
            // Strip one descent per pass; each right multiplication by s_k
            // drops the length by exactly one.
            let Some(k) = (0..v.len().saturating_sub(1)).find(|&k| v[k] > v[k + 1]) else {
                break;
            };
            v.swap(k, k + 1);
            word.push(k + 1);
        }
        word.reverse();
        word
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (m, v) in self.images.iter().enumerate() {
            if m > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "]")
    }
}

/// All permutations of degree `n` in lexicographic one-line order.
pub fn enumerate_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn go(n: usize, images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if images.len() == n {
            out.push(Perm {
                images: images.clone(),
            });
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                images.push(v);
                go(n, images, used, out);
                images.pop();
                used[v] = false;
            }
        }
    }
    go(n, &mut images, &mut used, &mut out);
    out
}

/// Bruhat order via the rank-matrix criterion:
/// `u <= w` iff `#{j <= a : u(j) >= b} <= #{j <= a : w(j) >= b}` for all `a, b`.
pub fn bruhat_leq(u: &Perm, w: &Perm) -> bool {
    assert_eq!(u.n(), w.n(), "degree mismatch in Bruhat comparison");
    let n = u.n();
    // rank[a][b] = #{j <= a+1 : v(j) >= b+1}, built by prefix accumulation.
    let rank = |v: &Perm| {
        let mut r = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let here = usize::from(v.images[a] >= b + 1);
                r[a][b] = here + if a > 0 { r[a - 1][b] } else { 0 };
            }
        }
        r
    };
    let ru = rank(u);
    let rw = rank(w);
    (0..n).all(|a| (0..n).all(|b| ru[a][b] <= rw[a][b]))
}

/// Right monoid action of `s_k`: returns `w·s_k` if that is longer, else `w`.
/// Idempotent and never length-decreasing.
pub fn monoid_right(w: &Perm, k: usize) -> Perm {
    assert!(k >= 1 && k < w.n(), "simple reflection index {} out of range", k);
    // l(w·s_k) > l(w) iff w(k) < w(k+1).
    if w.images[k - 1] < w.images[k] {
        let mut v = w.clone();
        v.images.swap(k - 1, k);
        v
    } else {
        w.clone()
    }
}

/// Left monoid action of `s_k`: returns `s_k·w` if that is longer, else `w`.
pub fn monoid_left(w: &Perm, k: usize) -> Perm {
    assert!(k >= 1 && k < w.n(), "simple reflection index {} out of range", k);
    let inv = w.inverse();
    // l(s_k·w) > l(w) iff k appears before k+1 in the one-line word.
    if inv.images[k - 1] < inv.images[k] {
        let mut v = w.clone();
        v.images[inv.images[k - 1] - 1] = k + 1;
        v.images[inv.images[k] - 1] = k;
        v
    } else {
        w.clone()
    }
}

/// The index-lowering cycle `(i, i-1, ..., 2, 1)`: sends `1` to `i` and `m`
/// to `m-1` for `2 <= m <= i`, fixing everything above `i`.  Re-bases the
/// standard flag so that `e_i` comes first.
pub fn sigma_cycle(i: usize, n: usize) -> Perm {
    assert!(i >= 1 && i <= n, "index {} out of range 1..={}", i, n);
    let mut images: Vec<usize> = (1..=n).collect();
    images[0] = i;
    for m in 2..=i {
        images[m - 1] = m - 1;
    }
    Perm { images }
}

/// The cycle `(i, j_{k-1}, ..., j_2, j_1)` attached to a decoration set
/// `delta = {j_1 < ... < j_{k-1} < j_k = i}`: sends `i` to `j_{k-1}`, each
/// `j_m` to `j_{m-1}`, and `j_1` back to `i`.  Identity when `delta = {i}`.
pub fn tau_from_delta(delta: &[usize], i: usize, n: usize) -> Perm {
    assert!(!delta.is_empty(), "decoration set must be nonempty");
    assert!(
        delta.windows(2).all(|p| p[0] < p[1]),
        "decoration set must be strictly ascending"
    );
    assert_eq!(*delta.last().unwrap(), i, "decoration set must have maximum i = {}", i);
    assert!(i <= n, "index {} out of range 1..={}", i, n);
    let mut images: Vec<usize> = (1..=n).collect();
    let k = delta.len();
    if k > 1 {
        images[i - 1] = delta[k - 2];
        for m in (1..k - 1).rev() {
            images[delta[m] - 1] = delta[m - 1];
        }
        images[delta[0] - 1] = i;
    }
    Perm { images }
}

/// Coxeter length of `x` with respect to the simple system obtained by
/// conjugating with the index-lowering cycle: `length(σ_i⁻¹ · x · σ_i)`.
pub fn twisted_length(x: &Perm, i: usize) -> usize {
    let sigma = sigma_cycle(i, x.n());
    sigma.inverse().compose(x).compose(&sigma).length()
}

/// The minimal-length coset representative sending the given positions to
/// `i+1..n` in order.
///
/// `support` lists the `n-i` positions `(j_{i+1}, ..., j_n)` as the flag
/// presents them; the result has `w(j_l) = l` for those, and sends the
/// remaining positions, taken ascending, to `1..i`.  The inverse is then
/// increasing on `{1..i}`, which is the defining property of the minimal
/// representative.
pub fn min_coset_rep(support: &[usize], n: usize, i: usize) -> Perm {
    assert_eq!(support.len(), n - i, "support must have n - i entries");
    let mut images = vec![0usize; n];
    for (l, &j) in support.iter().enumerate() {
        assert!(j >= 1 && j <= n, "position {} out of range 1..={}", j, n);
        assert_eq!(images[j - 1], 0, "position {} repeated in support", j);
        images[j - 1] = i + 1 + l;
    }
    let mut next = 1;
    for slot in images.iter_mut() {
        if *slot == 0 {
            *slot = next;
            next += 1;
        }
    }
    Perm { images }
}
