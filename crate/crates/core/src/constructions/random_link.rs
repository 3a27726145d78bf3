//! Random `(d-1)`-dimensional links for even `d`.
//!
//! Face `τ` (by colex rank `r`) is kept iff `U(seed, r) < p(n)`, where
//! `U(seed, r)` is the first draw of ChaCha8 stream `r` under `seed`. The draw
//! for a face does not depend on `n`, so links for growing `n` are nested.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::FaceSet;
use crate::error::{Error, Result};
use crate::simplex::binomial;

/// `p = 1 - n^{-1/(3d-3)}`.
pub fn link_probability(n: usize, d: usize) -> f64 {
    1.0 - (n as f64).powf(-1.0 / (3.0 * d as f64 - 3.0))
}

/// Uniform draw in `[0, 1)` attached to face rank `r`.
pub fn face_draw(seed: u64, r: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(r as u64);
    rng.gen::<f64>()
}

/// A random `(d-1)`-face set on `n - 1` vertices, each face kept with probability `p(n)`.
pub fn random_even_dim_link(n: usize, d: usize, seed: u64) -> Result<FaceSet> {
    if d % 2 == 1 || d < 4 {
        return Err(Error::range(format!("the construction is for even d >= 4, got {d}")));
    }
    if n <= d + 2 {
        return Err(Error::range(format!("need n > d + 2, got n = {n}, d = {d}")));
    }
    let p = link_probability(n, d);
    let total = binomial(n - 1, d);
    Ok(FaceSet::from_ranks(n - 1, d - 1, (0..total).filter(|&r| face_draw(seed, r) < p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_nested() {
        let a = random_even_dim_link(14, 4, 7).unwrap();
        assert_eq!(a, random_even_dim_link(14, 4, 7).unwrap());
        assert_ne!(a, random_even_dim_link(14, 4, 8).unwrap());
        let b = random_even_dim_link(15, 4, 7).unwrap();
        assert!(a.iter().all(|f| b.contains(f)));
    }

    #[test]
    fn odd_d_rejected() {
        assert!(random_even_dim_link(14, 3, 1).is_err());
        assert!(random_even_dim_link(6, 4, 1).is_err());
    }

    #[test]
    fn probability_formula() {
        let p = link_probability(16, 4);
        assert!((p - (1.0 - 16f64.powf(-1.0 / 9.0))).abs() < 1e-15);
        assert!(p > 0.26 && p < 0.27);
    }
}
