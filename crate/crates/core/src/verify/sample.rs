//! Deterministic sampling of parameter bindings.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eval::Args;
use crate::rational::{frac, Rational};
use crate::registry::{Identity, ParamKind};

/// Rejections allowed before a binding request gives up.
pub const MAX_REJECTIONS: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub seed: u64,
    /// Bindings per identity (per `N` for exact entries).
    pub count: usize,
    /// `q = u/v` with `v` at most this.
    pub q_denominator_bound: u64,
    pub param_denominator_bound: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { seed: 1, count: 10, q_denominator_bound: 12, param_denominator_bound: 12 }
    }
}

fn splitmix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of the random stream for one `(seed, id, index, N)` cell.
pub fn stream_seed(seed: u64, id: &str, index: u64, n: i64) -> u64 {
    let mut h = splitmix(seed);
    for b in id.bytes() {
        h = splitmix(h ^ u64::from(b));
    }
    h = splitmix(h ^ index);
    splitmix(h ^ n as u64)
}

/// Draws bindings for one identity. Successive calls continue the same
/// stream, so rejection sampling stays reproducible.
pub struct Sampler<'a> {
    identity: &'a Identity,
    config: &'a SampleConfig,
    rng: ChaCha8Rng,
}

impl<'a> Sampler<'a> {
    pub fn new(identity: &'a Identity, config: &'a SampleConfig, index: u64, n: i64) -> Self {
        let rng = ChaCha8Rng::seed_from_u64(stream_seed(config.seed, identity.id, index, n));
        Sampler { identity, config, rng }
    }

    /// `u/v` with `0 < u/v <= 1/3`.
    pub fn q(&mut self) -> Rational {
        let v = self.rng.gen_range(3..=self.config.q_denominator_bound.max(3)) as i64;
        let u = self.rng.gen_range(1..=v / 3);
        frac(u, v)
    }

    /// Nonzero `±u/v` with `|u/v| <= bound`.
    pub fn bounded(&mut self, bound: &Rational) -> Rational {
        let dmax = self.config.param_denominator_bound.max(2) as i64;
        loop {
            let v = self.rng.gen_range(1..=dmax);
            let top = (bound * Rational::from_integer(v.into())).floor().to_integer();
            let top: i64 = top.try_into().unwrap_or(i64::MAX);
            if top < 1 {
                continue;
            }
            let u = self.rng.gen_range(1..=top);
            let x = frac(u, v);
            return if self.rng.gen_bool(0.5) { -x } else { x };
        }
    }

    /// One binding with `N` set to `n` (ignored when the identity has no
    /// `N`). Parameters listed in `fixed` take the given values. Free
    /// parameters differ from each other and from every fixed value, since
    /// coinciding parameters often make both sides of an identity vanish.
    pub fn binding(&mut self, n: i64, fixed: &[(&str, Rational)]) -> Args {
        let mut args = Args::new();
        let mut taken: Vec<Rational> = Vec::new();
        for (k, v) in fixed {
            args.set(k, v.clone());
            taken.push(v.clone());
        }
        if self.identity.has_n() {
            args.set("N", Rational::from_integer(n.into()));
        }
        let half = frac(1, 2);
        for p in &self.identity.params {
            if args.get(p.name).is_some() {
                continue;
            }
            let v = match p.kind {
                ParamKind::Free => {
                    let mut v = self.bounded(&p.bound);
                    while taken.contains(&v) {
                        v = self.bounded(&p.bound);
                    }
                    taken.push(v.clone());
                    v
                }
                ParamKind::Scaled { .. } => continue,
                ParamKind::N => unreachable!("N is set above"),
                ParamKind::Index => Rational::from_integer(self.rng.gen_range(0..=n).into()),
                ParamKind::Exponent { lo, hi } => Rational::from_integer(self.rng.gen_range(lo..=hi).into()),
            };
            args.set(p.name, v);
        }
        for p in &self.identity.params {
            if let ParamKind::Scaled { by } = p.kind {
                if args.get(p.name).is_none() {
                    let t = self.bounded(&half);
                    let base = by(&args);
                    args.set(p.name, if base.is_zero() { t } else { t * base });
                }
            }
        }
        args
    }

    /// A binding for point evaluation, with `q` drawn as well.
    pub fn point_binding(&mut self, n: i64, fixed: &[(&str, Rational)]) -> Args {
        let q = match fixed.iter().find(|(k, _)| *k == "q") {
            Some((_, q)) => q.clone(),
            None => self.q(),
        };
        debug_assert!(q > Rational::zero() && q < Rational::one());
        let mut with_q: Vec<(&str, Rational)> = fixed.iter().filter(|(k, _)| *k != "q").cloned().collect();
        with_q.push(("q", q));
        self.binding(n, &with_q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use crate::registry::find;

    #[test]
    fn same_cell_same_binding() {
        let id = find("GEN-E1").unwrap();
        let cfg = SampleConfig::default();
        let a = Sampler::new(&id, &cfg, 3, 0).point_binding(0, &[]);
        let b = Sampler::new(&id, &cfg, 3, 0).point_binding(0, &[]);
        assert_eq!(a, b);
        let c = Sampler::new(&id, &cfg, 4, 0).point_binding(0, &[]);
        assert_ne!(a, c);
    }

    #[test]
    fn q_and_parameters_stay_in_the_box() {
        let cfg = SampleConfig::default();
        let third = frac(1, 3);
        for id in crate::registry::registry() {
            for index in 0..20 {
                let args = Sampler::new(&id, &cfg, index, 2).point_binding(2, &[]);
                let q = args.r("q").unwrap();
                assert!(q > &Rational::zero() && q <= &third);
                for p in &id.params {
                    if let ParamKind::Free = p.kind {
                        let v = args.r(p.name).unwrap();
                        assert!(!v.is_zero() && v.abs() <= third, "{} {} = {v}", id.id, p.name);
                    }
                }
            }
        }
    }

    #[test]
    fn scaled_parameters_keep_the_product_small() {
        let id = find("GEN-E1").unwrap();
        let cfg = SampleConfig::default();
        for index in 0..50 {
            let args = Sampler::new(&id, &cfg, index, 0).point_binding(0, &[]);
            let ae = args.r("a").unwrap() * args.r("e").unwrap();
            assert!(ae.abs() < Rational::one());
        }
    }

    #[test]
    fn free_parameters_are_distinct() {
        let id = find("THM-2-5").unwrap();
        let cfg = SampleConfig::default();
        for index in 0..200 {
            let args = Sampler::new(&id, &cfg, index, 2).point_binding(2, &[]);
            let vals: Vec<&Rational> = ["a", "b", "c", "d", "e", "q"].iter().map(|k| args.r(k).unwrap()).collect();
            for i in 0..vals.len() {
                assert!(vals[i + 1..].iter().all(|v| *v != vals[i]), "{args:?}");
            }
        }
    }
}
