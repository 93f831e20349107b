//! Seeded random ideals with minimal Taylor resolution, and the band family
//! `m_i = x_i^2 x_{i+1} ... x_{i+d-1}`.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{minimalize, Monomial};
use crate::taylor::is_taylor_minimal;

/// Deterministic stream of random ideals `I ⊆ m^2` whose Taylor resolution
/// is minimal: `1..=5` variables, `1..=4` generators of degree `2..=4`.
#[derive(Debug, Clone)]
pub struct Corpus {
    rng: SplitMix64,
}

impl Corpus {
    pub fn new(seed: u64) -> Self {
        Corpus {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    fn candidate(&mut self) -> Result<MonomialIdeal> {
        let n = self.rng.gen_range(1u32..=5) as usize;
        let t = self.rng.gen_range(1u32..=4);
        let gens: Vec<Monomial> = (0..t)
            .map(|_| {
                let degree = self.rng.gen_range(2u32..=4);
                let mut exps = vec![0u32; n];
                for _ in 0..degree {
                    exps[self.rng.gen_range(0..n as u32) as usize] += 1;
                }
                Monomial::new(exps)
            })
            .collect();
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        MonomialIdeal::new(names, minimalize(&gens))
    }
}

impl Iterator for Corpus {
    type Item = MonomialIdeal;

    fn next(&mut self) -> Option<MonomialIdeal> {
        loop {
            let Ok(ideal) = self.candidate() else {
                continue;
            };
            if ideal.in_square_of_maximal() && is_taylor_minimal(&ideal).is_ok() {
                return Some(ideal);
            }
        }
    }
}

/// `count` ideals from the stream seeded with `seed`.
pub fn random_minimal_taylor(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    Corpus::new(seed).take(count).collect()
}

/// `(m_1, ..., m_t)` in `t` variables with `m_i = x_i^2 x_{i+1} ... x_{i+d-1}`,
/// the product truncated at `x_t`.
pub fn band_ideal(t: usize, d: usize) -> Result<MonomialIdeal> {
    if t == 0 || d == 0 {
        return Err(Error::InvalidParameter("band ideal needs t, d >= 1".into()));
    }
    let gens = (0..t)
        .map(|i| {
            let mut exps = vec![0u32; t];
            exps[i] = 2;
            for e in exps.iter_mut().take((i + d).min(t)).skip(i + 1) {
                *e = 1;
            }
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new((1..=t).map(|i| format!("x{i}")).collect(), gens)
}
