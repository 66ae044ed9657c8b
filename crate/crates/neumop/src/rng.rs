//! Seeded random streams for experiments and sampling tests.
//!
//! The generator is ChaCha8 seeded from a single `u64`, and normal variates
//! are produced by the polar Box-Muller transform on top of the raw `u64`
//! stream. Both pieces are pinned here so that a reimplementation in another
//! language can match the stream given the same generator and transform;
//! downstream checks rely on statistics and invariants, not identical
//! samples.

use nalgebra::{DMatrix, DVector};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A seeded stream of uniforms and standard normals.
pub struct StreamRng {
    inner: ChaCha8Rng,
    cached_normal: Option<f64>,
}

impl StreamRng {
    pub fn seed_from_u64(seed: u64) -> Self {
        StreamRng {
            inner: ChaCha8Rng::seed_from_u64(seed),
            cached_normal: None,
        }
    }

    /// Uniform in the open interval ]0, 1[: `(next_u64 >> 11 + 0.5) * 2^-53`.
    pub fn uniform(&mut self) -> f64 {
        ((self.inner.next_u64() >> 11) as f64 + 0.5) * (1.0 / 9007199254740992.0)
    }

    /// Uniform in ]-1, 1[.
    fn uniform_signed(&mut self) -> f64 {
        2.0 * self.uniform() - 1.0
    }

    /// Standard normal via the polar (Marsaglia) Box-Muller method.
    ///
    /// Draws pairs (u, v) uniform in the square until s = u^2 + v^2 lands in
    /// ]0, 1[, then returns u * sqrt(-2 ln s / s), caching the v-companion.
    pub fn normal(&mut self) -> f64 {
        if let Some(z) = self.cached_normal.take() {
            return z;
        }
        loop {
            let u = self.uniform_signed();
            let v = self.uniform_signed();
            let s = u * u + v * v;
            if s > 0.0 && s < 1.0 {
                let factor = (-2.0 * s.ln() / s).sqrt();
                self.cached_normal = Some(v * factor);
                return u * factor;
            }
        }
    }

    pub fn normal_vector(&mut self, n: usize) -> DVector<f64> {
        DVector::from_fn(n, |_, _| self.normal())
    }

    /// Row-major fill, matching the CSV layout of matrices on disk.
    pub fn normal_matrix(&mut self, rows: usize, cols: usize) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self.normal();
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_streams() {
        let mut a = StreamRng::seed_from_u64(7);
        let mut b = StreamRng::seed_from_u64(7);
        for _ in 0..100 {
            assert_eq!(a.normal(), b.normal());
        }
    }

    #[test]
    fn normal_moments_are_sane() {
        let mut rng = StreamRng::seed_from_u64(42);
        let n = 200_000;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in 0..n {
            let z = rng.normal();
            sum += z;
            sumsq += z * z;
        }
        let mean = sum / n as f64;
        let var = sumsq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.02, "var {var}");
    }

    #[test]
    fn uniform_stays_in_open_interval() {
        let mut rng = StreamRng::seed_from_u64(1);
        for _ in 0..10_000 {
            let u = rng.uniform();
            assert!(u > 0.0 && u < 1.0);
        }
    }
}
