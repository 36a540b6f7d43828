use std::collections::BTreeSet;

use orbit_atlas_core::perm::{enumerate_perms, sigma_cycle, tau_from_delta, Perm};
use orbit_atlas_core::reps::{
    enumerate_decorated, enumerate_flags, enumerate_std_pairs, is_share_pair, DecoratedPerm,
    FlagEntry, SharePair, StandardFlag,
};

fn p(images: &[usize]) -> Perm {
    Perm::from_images(images)
}

fn flag(i: usize, entries: &[(usize, bool)]) -> StandardFlag {
    StandardFlag::new(
        i,
        entries
            .iter()
            .map(|&(idx, hat)| FlagEntry { idx, hat })
            .collect(),
    )
}

#[test]
fn decorated_counts() {
    assert_eq!(enumerate_decorated(3, 2).len(), 9);
    for n in 1..=5 {
        let all = enumerate_decorated(n, 1);
        assert_eq!(all.len(), enumerate_perms(n).len());
        assert!(all.iter().all(|d| d.delta() == [1]));
    }
    assert_eq!(enumerate_decorated(6, 4).len(), 2190);
}

#[test]
fn decorated_validity() {
    assert!(DecoratedPerm::is_valid(&p(&[2, 1, 3]), &[1, 2]));
    // Ascending decoration must sit at strictly decreasing positions.
    assert!(!DecoratedPerm::is_valid(&Perm::identity(3), &[1, 2]));
    assert!(!DecoratedPerm::is_valid(&Perm::identity(3), &[]));
}

#[test]
fn decorated_to_flag_examples() {
    let d = DecoratedPerm::new(Perm::identity(3), vec![2]);
    assert_eq!(d.to_flag(), flag(2, &[(1, false), (2, false), (3, false)]));

    let d = DecoratedPerm::new(p(&[2, 1, 3]), vec![1, 2]);
    assert_eq!(d.to_flag(), flag(2, &[(1, true), (2, false), (3, false)]));
}

#[test]
fn flag_to_decorated_examples() {
    let f = flag(2, &[(1, false), (2, false), (3, false)]);
    assert_eq!(f.to_decorated(), DecoratedPerm::new(Perm::identity(3), vec![2]));

    let f = flag(2, &[(1, true), (2, false), (3, false)]);
    assert_eq!(f.to_decorated(), DecoratedPerm::new(p(&[2, 1, 3]), vec![1, 2]));

    let f = flag(3, &[(2, true), (1, false), (3, false)]);
    assert_eq!(f.to_decorated(), DecoratedPerm::new(p(&[3, 1, 2]), vec![2, 3]));
}

#[test]
fn coordinate_perm_examples() {
    let f = flag(2, &[(3, false), (1, false), (2, false)]);
    assert_eq!(f.coordinate_perm(), p(&[3, 1, 2]));
    let f = flag(2, &[(1, true), (2, false), (3, false)]);
    assert_eq!(f.coordinate_perm(), p(&[2, 1, 3]));
}

#[test]
fn twisted_perm_example_and_consistency() {
    let f = flag(2, &[(1, true), (2, false), (3, false)]);
    assert_eq!(f.twisted_perm(), p(&[2, 1, 3]));

    // The twisted coordinate equals the decoration cycle composed with the
    // coordinate permutation, re-based.
    for n in 1..=5 {
        for i in 1..=n {
            for f in enumerate_flags(n, i) {
                let d = f.to_decorated();
                let tau = tau_from_delta(d.delta(), i, n);
                let expect = tau
                    .compose(&f.coordinate_perm())
                    .compose(&sigma_cycle(i, n).inverse());
                assert_eq!(f.twisted_perm(), expect);
                assert_eq!(f.coordinate_perm(), d.w().clone());
            }
        }
    }
}

#[test]
fn share_pair_examples() {
    let d = DecoratedPerm::new(Perm::identity(3), vec![2]);
    let q = d.to_share_pair();
    assert_eq!((q.w().clone(), q.u_i().clone()), (Perm::identity(3), p(&[2, 1, 3])));
    assert_eq!(q.to_decorated(), d);

    let d = DecoratedPerm::new(p(&[2, 1, 3]), vec![1, 2]);
    let q = d.to_share_pair();
    assert_eq!((q.w().clone(), q.u_i().clone()), (p(&[2, 1, 3]), p(&[2, 1, 3])));
    assert_eq!(q.to_decorated(), d);
}

#[test]
fn share_pair_validity() {
    assert!(is_share_pair(&Perm::identity(3), &sigma_cycle(2, 3).inverse(), 2));
    assert!(!is_share_pair(&Perm::identity(3), &Perm::identity(3), 2));
    let brute = |n: usize, i: usize| {
        let mut count = 0;
        for w in enumerate_perms(n) {
            for y in enumerate_perms(n) {
                if is_share_pair(&w, &y, i) {
                    count += 1;
                }
            }
        }
        count
    };
    assert_eq!(brute(3, 2), 9);
    for n in 1..=4 {
        for i in 1..=n {
            assert_eq!(brute(n, i), enumerate_decorated(n, i).len());
        }
    }
}

#[test]
fn standardize_examples() {
    let q = SharePair::new(2, Perm::identity(3), sigma_cycle(2, 3).inverse());
    let s = q.standardize();
    assert_eq!((s.w().clone(), s.u().clone()), (Perm::identity(3), p(&[2, 1, 3])));
    assert_eq!(s.destandardize(), q);

    // At i = 1 the conjugation is trivial and the second coordinate
    // equals the first.
    for d in enumerate_decorated(4, 1) {
        let q = d.to_share_pair();
        assert_eq!(q.u_i(), q.w());
        let s = q.standardize();
        assert_eq!(s.u(), s.w());
    }
}

#[test]
fn round_trips_exhaustive() {
    for n in 1..=5 {
        for i in 1..=n {
            for d in enumerate_decorated(n, i) {
                let f = d.to_flag();
                assert_eq!(f.to_decorated(), d);
                let q = d.to_share_pair();
                assert_eq!(q.to_decorated(), d);
                assert_eq!(q.standardize().destandardize(), q);
                assert_eq!(f.to_share_pair(), q);
            }
        }
    }
}

#[test]
fn flag_enumeration_matches_conversion_images() {
    for n in 1..=5 {
        for i in 1..=n {
            let direct: BTreeSet<StandardFlag> = enumerate_flags(n, i).into_iter().collect();
            let converted: BTreeSet<StandardFlag> = enumerate_decorated(n, i)
                .iter()
                .map(DecoratedPerm::to_flag)
                .collect();
            assert_eq!(direct, converted, "mismatch at (n, i) = ({}, {})", n, i);
            assert_eq!(direct.len(), enumerate_decorated(n, i).len());
        }
    }
}

#[test]
fn share_map_is_injective() {
    for n in 1..=5 {
        for i in 1..=n {
            let pairs: BTreeSet<SharePair> = enumerate_decorated(n, i)
                .iter()
                .map(DecoratedPerm::to_share_pair)
                .collect();
            assert_eq!(pairs.len(), enumerate_decorated(n, i).len());
            assert_eq!(enumerate_std_pairs(n, i).len(), pairs.len());
        }
    }
}

#[test]
fn std_pairs_at_i_1_are_diagonal() {
    for n in 1..=4 {
        let pairs = enumerate_std_pairs(n, 1);
        assert_eq!(pairs.len(), enumerate_perms(n).len());
        assert!(pairs.iter().all(|q| q.w() == q.u()));
    }
}
