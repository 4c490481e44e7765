use num_traits::{One, Zero};
use proptest::prelude::*;
use qsv_core::kernel::{lambert, poch_point, poch_reversed, poch_series, qbinom, weighted_lambert, PochLength};
use qsv_core::rational::{frac, int, pow};
use qsv_core::{LaurentSeries, Monomial, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=7).prop_map(|(n, d)| frac(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn series() -> impl Strategy<Value = LaurentSeries> {
    (-3i64..=3, prop::collection::vec(rational(), 0..7), 4i64..=12)
        .prop_map(|(min, coeffs, v)| LaurentSeries::from_coeffs(min, coeffs, v))
}

fn unit_series() -> impl Strategy<Value = LaurentSeries> {
    (-2i64..=2, nonzero(), prop::collection::vec(rational(), 0..6), 4i64..=12).prop_map(|(min, lead, rest, v)| {
        let mut coeffs = vec![lead];
        coeffs.extend(rest);
        LaurentSeries::from_coeffs(min, coeffs, v)
    })
}

fn agree(a: &LaurentSeries, b: &LaurentSeries) -> bool {
    let hi = a.valid_through().min(b.valid_through());
    let lo = a.min_exp().min(b.min_exp());
    lo > hi || a.window(lo, hi) == b.window(lo, hi)
}

fn divisors(m: i64) -> impl Iterator<Item = i64> {
    (1..=m).filter(move |d| m % d == 0)
}

fn binomial(n: u32, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * int((n - i) as i64) / int((i + 1) as i64))
}

proptest! {
    #[test]
    fn addition_is_associative(f in series(), g in series(), h in series()) {
        prop_assert!(agree(&f.add(&g).add(&h), &f.add(&g.add(&h))));
    }

    #[test]
    fn multiplication_distributes(f in series(), g in series(), h in series()) {
        prop_assert!(agree(&f.mul(&g.add(&h)), &f.mul(&g).add(&f.mul(&h))));
    }

    #[test]
    fn inverse_is_inverse(f in unit_series()) {
        let inv = f.invert().unwrap();
        let one = LaurentSeries::one(f.valid_through());
        prop_assert!(agree(&f.mul(&inv), &one));
    }

    #[test]
    fn pochhammer_splits(c in nonzero(), e in 0i64..=3, m in 0u32..=8, n in 0u32..=8) {
        let k = 30;
        let x = Monomial::new(c, e);
        let whole = poch_series(&x, PochLength::Finite(m + n), k).unwrap();
        let head = poch_series(&x, PochLength::Finite(m), k).unwrap();
        let tail = poch_series(&x.shift(m as i64), PochLength::Finite(n), k).unwrap();
        prop_assert!(agree(&whole, &head.mul(&tail)));
    }

    #[test]
    fn reversed_pochhammer_matches_points(x in nonzero(), n in 0u32..=7, u in 1i64..=4, v in 5i64..=12) {
        let q = frac(u, v);
        let poly = poch_reversed(&x, n, 64);
        let direct = poch_point(&(&q / &x), n, &q) * pow(&x, n as i64);
        prop_assert_eq!(poly.eval_at(&q), direct);
    }

    #[test]
    fn lambert_coefficients_are_divisor_sums(x in nonzero()) {
        let s = lambert(&x, 60);
        for m in 1..=60 {
            let brute = divisors(m).fold(Rational::zero(), |acc, d| acc + pow(&x, d));
            prop_assert_eq!(s.coeff(m), brute);
        }
    }
}

#[test]
fn q_pascal_and_symmetry() {
    for big_n in 1..=10u32 {
        for n in 1..=big_n {
            let lhs = qbinom(big_n, n, 1, 60);
            let rhs = qbinom(big_n - 1, n - 1, 1, 60).add(&qbinom(big_n - 1, n, 1, 60).shift(n as i64));
            assert!(agree(&lhs, &rhs), "[{big_n} {n}]");
        }
        for n in 0..=big_n {
            assert!(agree(&qbinom(big_n, n, 1, 60), &qbinom(big_n, big_n - n, 1, 60)));
        }
    }
}

#[test]
fn gaussian_binomials_at_one_are_binomials() {
    for big_n in 0..=10u32 {
        for n in 0..=big_n {
            assert_eq!(qbinom(big_n, n, 1, 60).coefficient_sum(), binomial(big_n, n), "[{big_n} {n}]");
        }
    }
}

#[test]
fn euler_pentagonal_numbers() {
    let k = 40;
    let euler = poch_series(&Monomial::q_pow(1), PochLength::Infinite, k).unwrap();
    let mut expected = vec![Rational::zero(); k as usize + 1];
    for j in -10i64..=10 {
        let p = j * (3 * j - 1) / 2;
        if p <= k {
            expected[p as usize] = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
        }
    }
    assert_eq!(euler.window(0, k), expected);
}

#[test]
fn fibonacci_from_long_division() {
    let f = LaurentSeries::from_coeffs(0, vec![int(1), int(-1), int(-1)], 20);
    let inv = f.invert().unwrap();
    let mut fib = vec![int(1), int(1)];
    while fib.len() <= 20 {
        let n = fib.len();
        fib.push(&fib[n - 1] + &fib[n - 2]);
    }
    assert_eq!(inv.window(0, 20), fib);
}

#[test]
fn weighted_lambert_at_one_is_sigma() {
    let s = weighted_lambert(&Rational::one(), 30);
    for m in 1..=30 {
        assert_eq!(s.coeff(m), int(divisors(m).sum()));
    }
    assert!(weighted_lambert(&Rational::zero(), 10).is_zero());
}

#[test]
fn product_window_contracts() {
    let f = LaurentSeries::from_coeffs(-2, vec![int(1), int(3)], 10);
    let g = LaurentSeries::from_coeffs(1, vec![int(2)], 6);
    assert_eq!(f.mul(&g).valid_through(), 4);
    assert_eq!(f.invert().unwrap().valid_through(), 14);
}
