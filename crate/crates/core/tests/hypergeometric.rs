use num_traits::{One, Zero};
use proptest::prelude::*;
use qsv_core::hypergeometric::{phi_point, phi_series, PhiSpec};
use qsv_core::kernel::poch_point;
use qsv_core::rational::{abs_upper, frac, pow};
use qsv_core::{Monomial, Rational};

const TOL: f64 = 1e-30;
const MAX_TERMS: usize = 5000;

fn small() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 10i64..=13).prop_map(|(n, d)| frac(n, d)).prop_filter("nonzero", |r| !r.is_zero())
}

fn point_q() -> impl Strategy<Value = Rational> {
    (1i64..=3, 10i64..=12).prop_map(|(u, v)| frac(u, v))
}

fn constant(c: &Rational) -> Monomial {
    Monomial::new(c.clone(), 0)
}

/// `sum_{n=0}^{last} prod (a;q)_n / ((q;q)_n prod (b;q)_n) z^n` term by term.
fn direct_sum(upper: &[Rational], lower: &[Rational], z: &Rational, q: &Rational, last: u32) -> Rational {
    (0..=last).fold(Rational::zero(), |acc, n| {
        let num = upper.iter().fold(pow(z, n as i64), |p, a| p * poch_point(a, n, q));
        let den = lower.iter().fold(poch_point(q, n, q), |p, b| p * poch_point(b, n, q));
        acc + num / den
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn terminating_sums_are_exact(m in 0u32..=6, a in small(), b in small(), z in small(), q in point_q()) {
        let spec = PhiSpec::new(
            vec![Monomial::q_pow(-(m as i64)), constant(&a)],
            vec![constant(&b)],
            constant(&z),
        );
        let (value, tail) = phi_point(&spec, &q, TOL, MAX_TERMS).unwrap();
        prop_assert!(tail.is_zero());
        let top = Rational::one() / pow(&q, m as i64);
        prop_assert_eq!(value, direct_sum(&[top, a], &[b], &z, &q, m));
    }

    #[test]
    fn series_and_point_agree(a in small(), b in small(), c in small(), e in 1i64..=2) {
        let spec = PhiSpec::new(vec![constant(&a), Monomial::new(b, 1)], vec![constant(&c)], Monomial::new(frac(1, 3), e));
        let q = frac(1, 10);
        let formal = phi_series(&spec, 60).unwrap().eval_at(&q);
        let (value, tail) = phi_point(&spec, &q, TOL, MAX_TERMS).unwrap();
        let bound = abs_upper(&tail) + 2.0 * 10f64.powi(-61);
        prop_assert!(abs_upper(&(formal - value)) <= bound);
    }

    #[test]
    fn q_chu_vandermonde(n in 0u32..=6, b in small(), c in small(), q in point_q()) {
        let spec = PhiSpec::new(vec![Monomial::q_pow(-(n as i64)), constant(&b)], vec![constant(&c)], Monomial::q_pow(1));
        let (value, _) = phi_point(&spec, &q, TOL, MAX_TERMS).unwrap();
        let closed = poch_point(&(&c / &b), n, &q) * pow(&b, n as i64) / poch_point(&c, n, &q);
        prop_assert_eq!(value, closed);
    }
}

#[test]
fn q_gauss_sum() {
    let (a, b, c, q) = (frac(1, 2), frac(1, 3), frac(1, 7), frac(1, 5));
    let z = &c / (&a * &b);
    let sum = PhiSpec::new(vec![constant(&a), constant(&b)], vec![constant(&c)], constant(&z));
    let (value, tail) = phi_point(&sum, &q, TOL, MAX_TERMS).unwrap();
    let product = |x: &Rational| poch_point(x, 70, &q);
    let closed = product(&(&c / &a)) * product(&(&c / &b)) / (product(&c) * product(&z));
    assert!(abs_upper(&(value - closed)) <= abs_upper(&tail) + 1e-40);
}

#[test]
fn zero_argument_is_one() {
    let spec = PhiSpec::new(vec![constant(&frac(1, 2)), constant(&frac(1, 3))], vec![constant(&frac(1, 5))], Monomial::zero());
    assert!(phi_series(&spec, 10).unwrap().window(0, 10).iter().enumerate().all(|(i, c)| (i == 0) == !c.is_zero()));
    assert_eq!(phi_point(&spec, &frac(1, 4), TOL, MAX_TERMS).unwrap(), (Rational::one(), Rational::zero()));
}

#[test]
fn nonterminating_formal_sums_need_a_q_power() {
    let spec = PhiSpec::new(vec![constant(&frac(1, 2)), constant(&frac(1, 3))], vec![constant(&frac(1, 5))], constant(&frac(1, 2)));
    assert!(phi_series(&spec, 10).is_err());
}
