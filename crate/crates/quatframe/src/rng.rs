//! Seeded random generation with a fixed, documented algorithm.
//!
//! The generator is xoshiro256** seeded through SplitMix64, both small
//! enough to reimplement in any language so that generated fixtures are
//! reproducible bit for bit:
//!
//! * SplitMix64: `s += 0x9E3779B97F4A7C15; z = s; z = (z ^ (z >> 30)) *
//!   0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
//!   return z ^ (z >> 31)`. The four xoshiro words are the first four
//!   SplitMix64 outputs from the user seed.
//! * xoshiro256**: `result = rotl(s1 * 5, 7) * 9`, then the linear
//!   state transition with shift 17 and rotation 45.
//! * Floats: `u64 >> 11` scaled by `2⁻⁵³` gives `[0, 1)`; symmetric
//!   draws are `2u - 1 ∈ [-1, 1)`.
//!
//! Quaternions draw their four components in order `re, i, j, k`;
//! matrices fill row-major.

use crate::error::{Error, Result};
use crate::frames::{Component, GFusionFrame};
use crate::qmatrix::QMatrix;
use crate::quaternion::Quaternion;
use crate::subspace::Subspace;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// xoshiro256** generator with SplitMix64 seeding.
#[derive(Clone, Debug)]
pub struct SeededRng {
    s: [u64; 4],
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        let mut sm = seed;
        let s = [
            splitmix64(&mut sm),
            splitmix64(&mut sm),
            splitmix64(&mut sm),
            splitmix64(&mut sm),
        ];
        SeededRng { s }
    }

    pub fn next_u64(&mut self) -> u64 {
        let result = self.s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = self.s[1] << 17;
        self.s[2] ^= self.s[0];
        self.s[3] ^= self.s[1];
        self.s[1] ^= self.s[2];
        self.s[0] ^= self.s[3];
        self.s[2] ^= t;
        self.s[3] = self.s[3].rotate_left(45);
        result
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[-1, 1)`.
    pub fn uniform_symmetric(&mut self) -> f64 {
        2.0 * self.next_f64() - 1.0
    }

    /// Quaternion with components uniform in `[-1, 1)`.
    pub fn quaternion(&mut self) -> Quaternion {
        Quaternion::new(
            self.uniform_symmetric(),
            self.uniform_symmetric(),
            self.uniform_symmetric(),
            self.uniform_symmetric(),
        )
    }

    /// Matrix filled row-major with random quaternions.
    pub fn matrix(&mut self, rows: usize, cols: usize) -> QMatrix {
        QMatrix::from_fn(rows, cols, |_, _| self.quaternion())
    }

    /// Column vector of length `n`.
    pub fn vector(&mut self, n: usize) -> QMatrix {
        self.matrix(n, 1)
    }
}

/// Parameters for deterministic random frame generation.
///
/// A fixed spec always produces the same frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    /// Ambient dimension n.
    pub dim: usize,
    /// Number of components.
    pub component_count: usize,
    /// Dimension of every subspace (before orthonormalization).
    pub subspace_dim: usize,
    /// Row count of every component operator.
    pub operator_rows: usize,
    /// Seed for the generator.
    pub seed: u64,
}

impl RandomSpec {
    fn validate(&self) -> Result<()> {
        if self.dim == 0 || self.component_count == 0 || self.subspace_dim == 0 || self.operator_rows == 0 {
            return Err(Error::Invalid("random spec fields must be positive".into()));
        }
        if self.subspace_dim > self.dim {
            return Err(Error::Invalid(format!(
                "subspace_dim {} exceeds dim {}",
                self.subspace_dim, self.dim
            )));
        }
        Ok(())
    }
}

/// Draws a g-fusion frame from a [`RandomSpec`].
///
/// Per component, in order: `subspace_dim · dim` quaternions spanning the
/// subspace (row-major, then orthonormalized), `operator_rows · dim`
/// quaternions for the operator, and one weight `0.5 + u` with
/// `u ∈ [0, 1)`.
pub fn random_frame(spec: &RandomSpec) -> Result<GFusionFrame> {
    spec.validate()?;
    let mut rng = SeededRng::new(spec.seed);
    let mut components = Vec::with_capacity(spec.component_count);
    for _ in 0..spec.component_count {
        let spanning = rng.matrix(spec.dim, spec.subspace_dim);
        let operator = rng.matrix(spec.operator_rows, spec.dim);
        let weight = 0.5 + rng.next_f64();
        let subspace = Subspace::from_spanning(&spanning)?;
        components.push(Component { subspace, operator, weight });
    }
    GFusionFrame::new(spec.dim, components)
}

/// Random frame whose operator annihilates the last coordinate direction,
/// making the frame operator singular: every subspace is drawn inside the
/// span of the first `dim - 1` coordinates.
pub fn random_singular_frame(spec: &RandomSpec) -> Result<GFusionFrame> {
    spec.validate()?;
    if spec.dim < 2 || spec.subspace_dim >= spec.dim {
        return Err(Error::Invalid(
            "singular construction needs dim ≥ 2 and subspace_dim < dim".into(),
        ));
    }
    let mut rng = SeededRng::new(spec.seed);
    let mut components = Vec::with_capacity(spec.component_count);
    for _ in 0..spec.component_count {
        let spanning = QMatrix::from_fn(spec.dim, spec.subspace_dim, |r, _| {
            if r + 1 == spec.dim {
                Quaternion::ZERO
            } else {
                rng.quaternion()
            }
        });
        let operator = rng.matrix(spec.operator_rows, spec.dim);
        let weight = 0.5 + rng.next_f64();
        let subspace = Subspace::from_spanning(&spanning)?;
        components.push(Component { subspace, operator, weight });
    }
    GFusionFrame::new(spec.dim, components)
}

/// Draws square matrices until one is comfortably invertible
/// (smallest singular value above `1e-3` times the largest).
pub fn random_invertible(rng: &mut SeededRng, n: usize) -> QMatrix {
    loop {
        let m = rng.matrix(n, n);
        let gram = m.adjoint().matmul(&m);
        let eigs = crate::spectral::hermitian_eigenvalues(&gram)
            .expect("Gram matrix of a random draw is Hermitian");
        let (min, max) = (eigs[0], eigs[eigs.len() - 1]);
        if min > 1e-6 * max.max(1.0) {
            return m;
        }
    }
}
