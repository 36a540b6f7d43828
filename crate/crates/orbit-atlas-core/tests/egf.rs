use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use orbit_atlas_core::egf::{
    egf_orbit_count, egf_total_count, orbit_count_series, total_count_series, Series,
};
use orbit_atlas_core::factorial;
use orbit_atlas_core::pil::{count_orbits, count_pil};

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[test]
fn arithmetic_basics() {
    let geo = Series::one(8).div_one_minus_x();
    assert!((0..=8).all(|k| *geo.coeff(k) == rat(1, 1)));

    let f = Series::x_over_one_minus_x(8);
    assert_eq!(Series::one(8).mul(&f), f);
    assert_eq!(f.shift_xpow(1).coeff(1), &rat(0, 1));
    assert_eq!(f.shift_xpow(1).coeff(2), &rat(1, 1));

    // Cauchy square of the geometric series counts 1, 2, 3, ...
    let sq = geo.mul(&geo);
    for k in 0..=8 {
        assert_eq!(*sq.coeff(k), rat(k as i64 + 1, 1));
    }

    assert_eq!(f.sub(&f), Series::zero(8));
    assert_eq!(f.add(&f).sub(&f), f);
}

#[test]
fn exp_of_x_gives_reciprocal_factorials() {
    let coeffs: Vec<BigRational> = (0..=8).map(|k| rat(i64::from(k == 1), 1)).collect();
    let e = Series::from_coeffs(coeffs).exp();
    for k in 0..=8 {
        assert_eq!(
            *e.coeff(k),
            BigRational::new(BigInt::from(1), BigInt::from(factorial(k)))
        );
    }
    assert_eq!(Series::zero(8).exp(), Series::one(8));
}

#[test]
fn list_partition_counts_from_exponential() {
    let s = Series::x_over_one_minus_x(8).exp();
    let expect = [1u32, 1, 3, 13, 73, 501, 4051];
    for (k, &e) in expect.iter().enumerate() {
        assert_eq!(s.egf_value(k), BigUint::from(e));
        assert_eq!(s.egf_value(k), count_pil(k));
    }
}

#[test]
fn total_series_counts_all_orbits() {
    let expect = [1u32, 5, 28, 185, 1426, 12607];
    for (k, &e) in expect.iter().enumerate() {
        assert_eq!(egf_total_count(k + 1), BigUint::from(e));
    }
    // Division by 1-x is coefficientwise partial summation.
    let f = Series::x_over_one_minus_x(6).exp();
    let g = f.div_one_minus_x();
    for k in 0..=6 {
        let sum: BigRational = (0..=k).map(|m| f.coeff(m).clone()).sum();
        assert_eq!(*g.coeff(k), sum);
    }
}

#[test]
fn shifted_series_matches_closed_form_counts() {
    assert_eq!(egf_orbit_count(0, 6), BigUint::from(4051u32));
    assert_eq!(egf_orbit_count(1, 6), BigUint::from(3006u32));
    for i in 0..=7usize {
        assert_eq!(egf_orbit_count(i, i), factorial(i));
    }
    for deg in 1..=7 {
        for i in 0..deg {
            assert_eq!(egf_orbit_count(i, deg), count_orbits(deg, deg - i));
        }
    }
}

#[test]
fn exp_satisfies_its_defining_recurrence() {
    let a = Series::x_over_one_minus_x(10);
    let b = a.exp();
    // (exp a)' = a′·(exp a), checked coefficientwise below the truncation.
    for k in 0..10 {
        let lhs = b.coeff(k + 1).clone() * rat(k as i64 + 1, 1);
        let rhs: BigRational = (0..=k)
            .map(|m| a.coeff(m + 1).clone() * rat(m as i64 + 1, 1) * b.coeff(k - m).clone())
            .sum();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn truncation_order_does_not_disturb_low_coefficients() {
    let lo = total_count_series(8);
    let hi = total_count_series(16);
    for k in 0..=8 {
        assert_eq!(lo.coeff(k), hi.coeff(k));
    }
    let lo = orbit_count_series(3, 8);
    let hi = orbit_count_series(3, 16);
    for k in 0..=8 {
        assert_eq!(lo.coeff(k), hi.coeff(k));
    }
}
