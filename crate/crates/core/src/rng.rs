//! Counter-based deterministic random numbers.
//!
//! Noise fixtures must be reproducible bit-for-bit across runs, thread
//! counts, and reimplementations in other languages, so instead of a
//! stateful generator every draw is a pure function of `(seed, counter)`:
//!
//! ```text
//! mix(seed, counter):
//!     z = seed + counter * 0x9E3779B97F4A7C15   (wrapping u64 arithmetic)
//!     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//!     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//!     z = z ^ (z >> 31)
//! ```
//!
//! This is the SplitMix64 finalizer applied to a Weyl sequence. Uniform
//! doubles take the top 53 bits; Gaussian draws use the Box-Muller
//! transform on counters `2i` and `2i + 1`.

use std::f64::consts::PI;

const WEYL: u64 = 0x9E37_79B9_7F4A_7C15;

/// Stateless mix of a seed and a counter into a uniform u64.
#[inline]
pub fn mix(seed: u64, counter: u64) -> u64 {
    let mut z = seed.wrapping_add(counter.wrapping_mul(WEYL));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform double in [0, 1).
#[inline]
pub fn uniform(seed: u64, counter: u64) -> f64 {
    (mix(seed, counter) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform double in (0, 1]; safe as a logarithm argument.
#[inline]
fn uniform_open(seed: u64, counter: u64) -> f64 {
    ((mix(seed, counter) >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Standard normal draw for index `i`, consuming counters `2i` and `2i + 1`.
#[inline]
pub fn gaussian(seed: u64, i: u64) -> f64 {
    let u1 = uniform_open(seed, 2 * i);
    let u2 = uniform(seed, 2 * i + 1);
    (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}

/// Uniform integer in [0, n) for index `i`.
#[inline]
pub fn below(seed: u64, i: u64, n: usize) -> usize {
    debug_assert!(n > 0);
    (uniform(seed, i) * n as f64) as usize % n
}

/// Derive an independent stream seed from a parent seed and a label.
///
/// Used to give each subimage its own counter space so sampling stays
/// identical no matter which thread processes it.
#[inline]
pub fn derive_seed(seed: u64, label: u64) -> u64 {
    mix(seed ^ 0x5851_F42D_4C95_7F2D, label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mix_is_pure() {
        assert_eq!(mix(7, 42), mix(7, 42));
        assert_ne!(mix(7, 42), mix(7, 43));
        assert_ne!(mix(7, 42), mix(8, 42));
    }

    #[test]
    fn uniform_range() {
        for i in 0..10_000 {
            let u = uniform(123, i);
            assert!((0.0..1.0).contains(&u));
        }
    }

    #[test]
    fn gaussian_moments() {
        let n = 200_000u64;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for i in 0..n {
            let g = gaussian(99, i);
            sum += g;
            sum_sq += g * g;
        }
        let mean = sum / n as f64;
        let var = sum_sq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.01, "mean = {mean}");
        assert!((var - 1.0).abs() < 0.02, "var = {var}");
    }

    #[test]
    fn below_in_bounds() {
        for i in 0..1000 {
            assert!(below(5, i, 17) < 17);
        }
    }
}
