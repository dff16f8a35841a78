//! Seeded random parameters for the transformation check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zeta4_core::andrews::{check_poles, AndrewsParams};
use zeta4_core::arith::rat;
use zeta4_core::{Error, Rational};

/// Numerators lie in `[-BOUND, BOUND]`, denominators in `[1, BOUND]`.
pub const BOUND: i64 = 10;

/// Draws per accepted parameter set before giving up.
pub const MAX_ATTEMPTS: usize = 10_000;

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.random_range(-BOUND..=BOUND), rng.random_range(1..=BOUND))
}

/// One pole-free parameter set with `s` pairs and `0 <= m <= m_max`.
pub fn random_params<R: Rng>(rng: &mut R, s: usize, m_max: usize) -> Result<AndrewsParams<Rational>, Error> {
    for _ in 0..MAX_ATTEMPTS {
        let m = rng.random_range(0..=m_max);
        let a = random_rational(rng);
        let group = (0..2 * s).map(|_| random_rational(rng)).collect();
        let p = AndrewsParams::from_group(a, group, m)?;
        if check_poles(&p).is_ok() {
            return Ok(p);
        }
    }
    Err(Error::InvalidParameters(format!(
        "no pole-free parameters with s = {s}, m <= {m_max} after {MAX_ATTEMPTS} draws"
    )))
}

/// `trials` parameter sets from a fixed seed.
pub fn parameter_sets(seed: u64, s: usize, m_max: usize, trials: usize) -> Result<Vec<AndrewsParams<Rational>>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| random_params(&mut rng, s, m_max)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn reproducible_from_seed() {
        let a = parameter_sets(42, 3, 6, 20).unwrap();
        let b = parameter_sets(42, 3, 6, 20).unwrap();
        assert_eq!(a, b);
        let c = parameter_sets(43, 3, 6, 20).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn within_bounds_and_pole_free() {
        for p in parameter_sets(1, 2, 6, 200).unwrap() {
            assert!(p.m <= 6);
            assert_eq!(p.s(), 2);
            let mut all = p.group();
            all.push(p.a.clone());
            for x in &all {
                assert!(x.numer().abs() <= BOUND.into());
                assert!(x.denom() <= &BOUND.into());
            }
            assert!(check_poles(&p).is_ok());
        }
    }

    #[test]
    fn m_range_is_covered() {
        let ms: std::collections::BTreeSet<usize> =
            parameter_sets(5, 1, 6, 300).unwrap().iter().map(|p| p.m).collect();
        assert_eq!(ms.into_iter().collect::<Vec<_>>(), (0..=6).collect::<Vec<_>>());
    }
}
