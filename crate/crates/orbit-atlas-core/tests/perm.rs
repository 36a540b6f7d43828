use std::collections::BTreeSet;

use orbit_atlas_core::perm::{
    bruhat_leq, enumerate_perms, min_coset_rep, monoid_left, monoid_right, sigma_cycle,
    tau_from_delta, twisted_length, Perm,
};

fn p(images: &[usize]) -> Perm {
    Perm::from_images(images)
}

/// Subword criterion: u <= w iff u is a product of some subword of one
/// reduced word of w.  Independent oracle for the rank-matrix test.
fn bruhat_leq_subword(u: &Perm, w: &Perm) -> bool {
    let word = w.reduced_word();
    let n = w.n();
    let mut reachable = BTreeSet::new();
    for mask in 0u32..(1 << word.len()) {
        let mut q = Perm::identity(n);
        for (b, &k) in word.iter().enumerate() {
            if mask >> b & 1 == 1 {
                q = q.compose(&Perm::simple(k, n));
            }
        }
        reachable.insert(q);
    }
    reachable.contains(u)
}

#[test]
fn compose_and_inverse() {
    assert_eq!(p(&[2, 1, 3]).compose(&p(&[1, 3, 2])), p(&[2, 3, 1]));
    for w in enumerate_perms(4) {
        assert_eq!(w.compose(&Perm::identity(4)), w);
        assert_eq!(Perm::identity(4).compose(&w), w);
        assert_eq!(w.compose(&w.inverse()), Perm::identity(4));
        assert_eq!(w.inverse().compose(&w), Perm::identity(4));
    }
}

#[test]
fn length_counts_inversions() {
    assert_eq!(Perm::identity(3).length(), 0);
    assert_eq!(p(&[3, 2, 1]).length(), 3);
    assert_eq!(p(&[2, 3, 1]).length(), 2);
}

#[test]
fn display_one_line() {
    assert_eq!(format!("{}", p(&[2, 1, 3])), "[2,1,3]");
}

#[test]
fn enumerate_is_lexicographic_and_complete() {
    let all = enumerate_perms(4);
    assert_eq!(all.len(), 24);
    let set: BTreeSet<&Perm> = all.iter().collect();
    assert_eq!(set.len(), 24);
    assert!(all.windows(2).all(|q| q[0].images() < q[1].images()));
}

#[test]
fn reduced_words_multiply_back() {
    for n in 1..=5 {
        for w in enumerate_perms(n) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut q = Perm::identity(n);
            for &k in &word {
                q = q.compose(&Perm::simple(k, n));
            }
            assert_eq!(q, w);
        }
    }
}

#[test]
fn bruhat_basic_examples() {
    let e = Perm::identity(3);
    for w in enumerate_perms(3) {
        assert!(bruhat_leq(&e, &w));
        assert!(bruhat_leq(&w, &p(&[3, 2, 1])));
    }
    assert!(bruhat_leq(&p(&[2, 1, 3]), &p(&[3, 2, 1])));
    assert!(!bruhat_leq(&p(&[2, 1, 3]), &p(&[1, 3, 2])));
}

#[test]
fn bruhat_matches_subword_oracle_up_to_degree_4() {
    for n in 1..=4 {
        for u in enumerate_perms(n) {
            for w in enumerate_perms(n) {
                assert_eq!(
                    bruhat_leq(&u, &w),
                    bruhat_leq_subword(&u, &w),
                    "disagreement at u = {}, w = {}",
                    u,
                    w
                );
            }
        }
    }
}

#[test]
fn monoid_right_examples() {
    assert_eq!(monoid_right(&Perm::identity(3), 2), p(&[1, 3, 2]));
    assert_eq!(monoid_right(&p(&[2, 1, 3]), 1), p(&[2, 1, 3]));
    assert_eq!(monoid_right(&p(&[2, 1, 3]), 2), p(&[2, 3, 1]));
}

#[test]
fn monoid_left_examples() {
    assert_eq!(monoid_left(&Perm::identity(3), 1), p(&[2, 1, 3]));
    assert_eq!(monoid_left(&p(&[2, 1, 3]), 1), p(&[2, 1, 3]));
    assert_eq!(monoid_left(&p(&[1, 3, 2]), 1), p(&[2, 3, 1]));
}

#[test]
fn monoid_actions_are_idempotent_and_never_shorten() {
    for n in 2..=5 {
        for w in enumerate_perms(n) {
            for k in 1..n {
                for f in [monoid_right, monoid_left] {
                    let v = f(&w, k);
                    assert_eq!(f(&v, k), v);
                    assert!(v.length() == w.length() || v.length() == w.length() + 1);
                    // The result is the longer of w and w·s_k (resp. s_k·w).
                    let both = if core::ptr::fn_addr_eq(
                        f as fn(&Perm, usize) -> Perm,
                        monoid_right as fn(&Perm, usize) -> Perm,
                    ) {
                        w.compose(&Perm::simple(k, n))
                    } else {
                        Perm::simple(k, n).compose(&w)
                    };
                    assert_eq!(v, if both.length() > w.length() { both } else { w.clone() });
                }
            }
        }
    }
}

#[test]
fn sigma_cycle_examples() {
    assert_eq!(sigma_cycle(1, 4), Perm::identity(4));
    assert_eq!(sigma_cycle(2, 3), p(&[2, 1, 3]));
    assert_eq!(sigma_cycle(3, 3), p(&[3, 1, 2]));
    for n in 1..=5 {
        for i in 1..=n {
            let s = sigma_cycle(i, n);
            assert_eq!(s.apply(1), i);
            for m in 2..=i {
                assert_eq!(s.apply(m), m - 1);
            }
            for m in i + 1..=n {
                assert_eq!(s.apply(m), m);
            }
        }
    }
}

#[test]
fn tau_from_delta_examples() {
    assert_eq!(tau_from_delta(&[2], 2, 3), Perm::identity(3));
    assert_eq!(tau_from_delta(&[1, 2], 2, 3), p(&[2, 1, 3]));
    assert_eq!(tau_from_delta(&[1, 2, 3], 3, 4), p(&[3, 1, 2, 4]));
}

#[test]
fn twisted_length_examples() {
    for i in 1..=3 {
        assert_eq!(twisted_length(&Perm::identity(3), i), 0);
    }
    // σ₂·s₂·σ₂⁻¹ = [3,2,1] is a twisted simple reflection of length 3.
    assert_eq!(p(&[3, 2, 1]).length(), 3);
    assert_eq!(twisted_length(&p(&[3, 2, 1]), 2), 1);
    assert_eq!(twisted_length(&p(&[2, 1, 3]), 2), 1);
    for w in enumerate_perms(4) {
        assert_eq!(twisted_length(&w, 1), w.length());
    }
}

#[test]
fn min_coset_rep_examples() {
    assert_eq!(min_coset_rep(&[], 3, 3), Perm::identity(3));
    assert_eq!(min_coset_rep(&[3], 3, 2), Perm::identity(3));
    assert_eq!(min_coset_rep(&[1], 3, 2), p(&[3, 1, 2]));
}

#[test]
fn min_coset_rep_is_minimal_in_its_coset() {
    // Over every ordered support: prescribed images on the support, the
    // inverse increasing on 1..=i, and minimal length among all
    // permutations with the same support images.
    fn ordered_supports(n: usize, len: usize) -> Vec<Vec<usize>> {
        if len == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for shorter in ordered_supports(n, len - 1) {
            for j in 1..=n {
                if !shorter.contains(&j) {
                    let mut s = shorter.clone();
                    s.push(j);
                    out.push(s);
                }
            }
        }
        out
    }
    for n in 1..=5 {
        for i in 1..=n {
            for support in ordered_supports(n, n - i) {
                let w = min_coset_rep(&support, n, i);
                for (l, &j) in support.iter().enumerate() {
                    assert_eq!(w.apply(j), i + 1 + l);
                }
                let inv = w.inverse();
                assert!((1..i).all(|m| inv.apply(m) < inv.apply(m + 1)));
                let min_len = enumerate_perms(n)
                    .iter()
                    .filter(|v| support.iter().enumerate().all(|(l, &j)| v.apply(j) == i + 1 + l))
                    .map(Perm::length)
                    .min()
                    .unwrap();
                assert_eq!(w.length(), min_len);
            }
        }
    }
}
