//! Dense matrices over the quaternions with the right-module convention:
//! scalars act on vectors from the right, entries multiply in row-by-column
//! order, and the adjoint is the conjugate transpose.

use crate::quaternion::Quaternion;
use std::ops::{Add, Mul, Sub};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Entry count above which matrix products switch to the parallel path.
/// Both paths compute entries independently with a fixed inner-loop order,
/// so results are bit-identical.
#[cfg(feature = "parallel")]
const PAR_MATMUL_WORK: usize = 16_384;

/// Dense row-major matrix of quaternions.
///
/// Column vectors are `n×1` matrices. All operations are pure; values are
/// immutable after construction and safe to share across threads.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        QMatrix { rows, cols, data: vec![Quaternion::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Quaternion::ONE);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMatrix { rows, cols, data }
    }

    /// Builds from nested rows; panics if rows are empty or ragged.
    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let nrows = rows.len();
        let cols = rows[0].len();
        assert!(cols > 0, "matrix needs at least one column");
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        QMatrix { rows: nrows, cols, data }
    }

    /// Column vector from entries.
    pub fn column(entries: Vec<Quaternion>) -> Self {
        assert!(!entries.is_empty(), "vector needs at least one entry");
        QMatrix { rows: entries.len(), cols: 1, data: entries }
    }

    /// `i`-th standard basis column vector of length `n`.
    pub fn basis_vector(n: usize, i: usize) -> Self {
        assert!(i < n);
        let mut v = Self::zeros(n, 1);
        v.set(i, 0, Quaternion::ONE);
        v
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_vector(&self) -> bool {
        self.cols == 1
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Quaternion {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, q: Quaternion) {
        self.data[r * self.cols + c] = q;
    }

    pub fn entries(&self) -> &[Quaternion] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(Quaternion::is_finite)
    }

    /// Conjugate transpose. For all vectors `u, v`:
    /// `⟨v, M·u⟩ = ⟨adjoint(M)·v, u⟩`.
    pub fn adjoint(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conjugate())
    }

    /// Row-by-column product with quaternion factors kept in order
    /// `self[i][k] · other[k][j]`. Panics on dimension mismatch.
    pub fn matmul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matmul dimension mismatch: {}×{} · {}×{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let (rows, inner, cols) = (self.rows, self.cols, other.cols);
        let mut out = QMatrix::zeros(rows, cols);

        let fill_row = |i: usize, row_out: &mut [Quaternion]| {
            for j in 0..cols {
                let mut acc = Quaternion::ZERO;
                for k in 0..inner {
                    acc = acc + self.get(i, k) * other.get(k, j);
                }
                row_out[j] = acc;
            }
        };

        #[cfg(feature = "parallel")]
        {
            if rows * inner * cols >= PAR_MATMUL_WORK && rows > 1 {
                out.data
                    .par_chunks_mut(cols)
                    .enumerate()
                    .for_each(|(i, row_out)| fill_row(i, row_out));
                return out;
            }
        }

        for i in 0..rows {
            let start = i * cols;
            fill_row(i, &mut out.data[start..start + cols]);
        }
        out
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| *a + *b).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| *a - *b).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Real scaling (reals commute with quaternions).
    pub fn scale(&self, s: f64) -> QMatrix {
        let data = self.data.iter().map(|q| q.scale(s)).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Right scalar action: every entry is multiplied by `q` on the right,
    /// so for a column vector `(v·q)_i = v_i·q`.
    pub fn scale_right(&self, q: Quaternion) -> QMatrix {
        let data = self.data.iter().map(|e| *e * q).collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Right quaternionic inner product `⟨u, v⟩ = Σᵢ conjugate(uᵢ)·vᵢ`,
    /// conjugate-symmetric and right-linear in the second slot.
    /// Panics unless both are column vectors of equal length.
    pub fn inner_product(&self, other: &QMatrix) -> Quaternion {
        assert!(self.is_vector() && other.is_vector(), "inner product needs column vectors");
        assert_eq!(self.rows, other.rows, "inner product dimension mismatch");
        let mut acc = Quaternion::ZERO;
        for idx in 0..self.rows {
            acc = acc + self.data[idx].conjugate() * other.data[idx];
        }
        acc
    }

    /// Frobenius norm; for a column vector this is `sqrt(⟨v, v⟩)`.
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|q| q.modulus_sq()).sum::<f64>().sqrt()
    }

    /// Largest componentwise deviation from `other`.
    pub fn max_abs_diff(&self, other: &QMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let d = *a - *b;
                d.re.abs().max(d.i.abs()).max(d.j.abs()).max(d.k.abs())
            })
            .fold(0.0, f64::max)
    }

    /// Componentwise comparison with an absolute tolerance.
    pub fn approx_eq(&self, other: &QMatrix, tol: f64) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols) && self.max_abs_diff(other) <= tol
    }

    /// Horizontal concatenation of blocks with equal row counts.
    pub fn hstack(blocks: &[QMatrix]) -> QMatrix {
        assert!(!blocks.is_empty(), "hstack needs at least one block");
        let rows = blocks[0].rows;
        assert!(blocks.iter().all(|b| b.rows == rows), "hstack row mismatch");
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = QMatrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            for r in 0..rows {
                for c in 0..b.cols {
                    out.set(r, offset + c, b.get(r, c));
                }
            }
            offset += b.cols;
        }
        out
    }

    /// The `j`-th column as a vector.
    pub fn column_at(&self, j: usize) -> QMatrix {
        assert!(j < self.cols);
        QMatrix::from_fn(self.rows, 1, |r, _| self.get(r, j))
    }

    /// Hermitian part `(M + M*)/2`; used to re-symmetrize operators that
    /// are Hermitian up to rounding.
    pub fn symmetrize(&self) -> QMatrix {
        assert!(self.is_square(), "symmetrize needs a square matrix");
        self.add(&self.adjoint()).scale(0.5)
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        QMatrix::add(self, rhs)
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        QMatrix::sub(self, rhs)
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.matmul(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::{I, J, K, ONE, ZERO};
    use crate::rng::SeededRng;

    fn q(re: f64, i: f64, j: f64, k: f64) -> Quaternion {
        Quaternion::new(re, i, j, k)
    }

    #[test]
    fn inner_product_examples() {
        let e1 = QMatrix::basis_vector(2, 0);
        let e2 = QMatrix::basis_vector(2, 1);
        assert!(e1.inner_product(&e2).approx_eq(&ZERO, 1e-15));

        let v = QMatrix::column(vec![ONE, I]);
        assert!(v.inner_product(&v).approx_eq(&Quaternion::real(2.0), 1e-15));

        // ⟨(1,i),(j,k)⟩ expanded termwise: conj(1)·j + conj(i)·k.
        let u = QMatrix::column(vec![ONE, I]);
        let w = QMatrix::column(vec![J, K]);
        let expected = ONE.conjugate() * J + I.conjugate() * K;
        assert!(expected.approx_eq(&J.scale(2.0), 1e-15));
        assert!(u.inner_product(&w).approx_eq(&expected, 1e-15));
    }

    #[test]
    fn inner_product_is_right_linear_and_conjugate_symmetric() {
        let mut rng = SeededRng::new(21);
        for _ in 0..100 {
            let u = rng.vector(4);
            let v = rng.vector(4);
            let a = rng.quaternion();
            // ⟨u, v·a⟩ = ⟨u, v⟩·a
            let lhs = u.inner_product(&v.scale_right(a));
            let rhs = u.inner_product(&v) * a;
            assert!(lhs.approx_eq(&rhs, 1e-12));
            // conj(⟨u, v⟩) = ⟨v, u⟩
            assert!(u.inner_product(&v).conjugate().approx_eq(&v.inner_product(&u), 1e-12));
        }
    }

    #[test]
    fn norm_examples() {
        let v = QMatrix::column(vec![ONE, I, J]);
        assert!((v.norm() - 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(QMatrix::zeros(3, 1).norm(), 0.0);

        // ‖v·q‖ = |q|·‖v‖ with ‖v‖ = 2 and |q| = 2.
        let v = QMatrix::column(vec![q(1.0, 1.0, 0.0, 0.0), q(1.0, 0.0, -1.0, 0.0)]);
        let s = q(1.0, 1.0, 1.0, 1.0);
        assert!((v.scale_right(s).norm() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn matmul_examples() {
        let mut rng = SeededRng::new(5);
        let m = rng.matrix(3, 3);
        assert!(QMatrix::identity(3).matmul(&m).approx_eq(&m, 0.0));

        let a = QMatrix::from_rows(vec![vec![I]]);
        let b = QMatrix::from_rows(vec![vec![J]]);
        assert!(a.matmul(&b).get(0, 0).approx_eq(&K, 1e-15));

        for _ in 0..20 {
            let m = rng.matrix(4, 4);
            let n = rng.matrix(4, 4);
            let v = rng.vector(4);
            let lhs = m.matmul(&n).matmul(&v);
            let rhs = m.matmul(&n.matmul(&v));
            assert!(lhs.approx_eq(&rhs, 1e-12));
        }
    }

    #[test]
    fn matmul_is_right_linear() {
        let mut rng = SeededRng::new(6);
        for _ in 0..50 {
            let m = rng.matrix(4, 4);
            let u = rng.vector(4);
            let v = rng.vector(4);
            let a = rng.quaternion();
            let b = rng.quaternion();
            let lhs = m.matmul(&u.scale_right(a).add(&v.scale_right(b)));
            let rhs = m.matmul(&u).scale_right(a).add(&m.matmul(&v).scale_right(b));
            assert!(lhs.approx_eq(&rhs, 1e-12));
        }
    }

    #[test]
    fn adjoint_examples() {
        assert!(QMatrix::identity(4).adjoint().approx_eq(&QMatrix::identity(4), 0.0));
        let m = QMatrix::from_rows(vec![vec![J]]);
        assert!(m.adjoint().get(0, 0).approx_eq(&-J, 1e-15));

        let mut rng = SeededRng::new(31);
        for _ in 0..20 {
            let m = rng.matrix(5, 5);
            let u = rng.vector(5);
            let v = rng.vector(5);
            // ⟨v, M·u⟩ = ⟨M*·v, u⟩
            let lhs = v.inner_product(&m.matmul(&u));
            let rhs = m.adjoint().matmul(&v).inner_product(&u);
            assert!(lhs.approx_eq(&rhs, 1e-12));
            // (MN)* = N*M*, (M*)* = M
            let n = rng.matrix(5, 5);
            assert!(m.matmul(&n).adjoint().approx_eq(&n.adjoint().matmul(&m.adjoint()), 1e-12));
            assert!(m.adjoint().adjoint().approx_eq(&m, 0.0));
        }
    }

    #[test]
    fn cauchy_schwarz_on_seeded_pairs() {
        let mut rng = SeededRng::new(77);
        for _ in 0..1000 {
            let u = rng.vector(5);
            let v = rng.vector(5);
            let lhs = u.inner_product(&v).modulus_sq();
            let rhs = u.inner_product(&u).re * v.inner_product(&v).re;
            assert!(lhs <= rhs + 1e-10);
        }
    }

    #[test]
    fn hstack_and_columns() {
        let a = QMatrix::identity(2);
        let b = QMatrix::zeros(2, 1);
        let s = QMatrix::hstack(&[a.clone(), b]);
        assert_eq!((s.rows(), s.cols()), (2, 3));
        assert!(s.column_at(0).approx_eq(&QMatrix::basis_vector(2, 0), 0.0));
        assert!(s.column_at(2).approx_eq(&QMatrix::zeros(2, 1), 0.0));
    }

    #[test]
    #[should_panic(expected = "matmul dimension mismatch")]
    fn matmul_rejects_mismatched_shapes() {
        let a = QMatrix::zeros(2, 3);
        let b = QMatrix::zeros(2, 3);
        let _ = a.matmul(&b);
    }

    #[test]
    fn large_product_matches_unthreaded_order() {
        // Entries above the parallel threshold: the split must not change
        // the inner accumulation order, so the results agree exactly.
        let mut rng = SeededRng::new(909);
        let a = rng.matrix(40, 40);
        let b = rng.matrix(40, 40);
        let fast = a.matmul(&b);
        let mut slow = QMatrix::zeros(40, 40);
        for i in 0..40 {
            for j in 0..40 {
                let mut acc = Quaternion::ZERO;
                for k in 0..40 {
                    acc = acc + a.get(i, k) * b.get(k, j);
                }
                slow.set(i, j, acc);
            }
        }
        assert!(fast.approx_eq(&slow, 0.0));
    }
}
