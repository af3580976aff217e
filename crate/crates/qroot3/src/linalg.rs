//! Dense exact linear algebra over any [`Ring`]/[`Field`].
//!
//! Everything here is elementary and exact: Gauss–Jordan reduction for
//! rank/kernel/solve/inverse, Faddeev–LeVerrier for characteristic
//! polynomials, Lagrange congruence for the inertia of symmetric forms over
//! an ordered field, and the realification trick that reduces hermitian
//! inertia over ℚ(√3)(i) to symmetric inertia over ℚ(√3). Matrices in this
//! crate stay small (at most a few hundred rows), so dense storage is the
//! right trade-off.

use crate::scalar::{Cq3, Field, Ring, Rq3};

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<F: Ring> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Ring> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Column vector from a slice.
    pub fn col_vec(v: &[F]) -> Self {
        Mat {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Entrywise conjugation (the ring's distinguished conjugation).
    pub fn conj(&self) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.dagger()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut out: Mat<F> = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Matrix–vector product on a plain slice.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() && !self[(i, j)].is_zero() {
                        acc = acc.add(&self[(i, j)].mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut out = Mat::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn trace(&self) -> F {
        assert!(self.is_square());
        let mut t = F::zero();
        for i in 0..self.rows {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    /// Kronecker product with the left factor major:
    /// `(A⊗B)[(i·rB + k, j·cB + l)] = A[i,j]·B[k,l]`.
    /// This matches the tensor-basis convention `idx = i·dim₂ + j` used for
    /// tensor products of modules throughout the crate.
    pub fn kron(&self, o: &Self) -> Self {
        let mut out = Mat::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = &o[(k, l)];
                        if !b.is_zero() {
                            out[(i * o.rows + k, j * o.cols + l)] = a.mul(b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | o]`.
    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        Mat::from_fn(self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                o[(i, j - self.cols)].clone()
            }
        })
    }

    /// Vertical concatenation `[self; o]`.
    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        Mat::from_fn(self.rows + o.rows, self.cols, |i, j| {
            if i < self.rows {
                self[(i, j)].clone()
            } else {
                o[(i - self.rows, j)].clone()
            }
        })
    }

    /// Entrywise ring change.
    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Flatten row-major into a vector.
    pub fn flatten(&self) -> Vec<F> {
        self.data.clone()
    }
}

impl<F: Ring> std::ops::Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F: Ring> std::ops::IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Ring> std::fmt::Display for Mat<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Outcome of solving `A·X = B`.
pub enum SolveOutcome<F: Ring> {
    Inconsistent,
    Solution {
        /// One particular solution (cols(B) many columns).
        particular: Mat<F>,
        /// Basis of the kernel of `A` as column vectors.
        kernel: Vec<Mat<F>>,
    },
}

impl<F: Field> Mat<F> {
    /// In-place Gauss–Jordan reduction; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // Find a pivot in column c at or below row r.
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    let (a, b) = (self[(r, j)].clone(), self[(p, j)].clone());
                    self[(r, j)] = b;
                    self[(p, j)] = a;
                }
            }
            let inv = self[(r, c)].inv();
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].mul(&inv);
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in c..self.cols {
                        let delta = factor.mul(&self[(r, j)]);
                        self[(i, j)] = self[(i, j)].sub(&delta);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A·x = 0}` as column vectors, one per free column.
    pub fn kernel(&self) -> Vec<Self> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().copied().peekable();
        let mut pivot_rows: Vec<Option<usize>> = vec![None; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            pivot_rows[pc] = Some(row);
        }
        for free in 0..self.cols {
            if piv_iter.peek() == Some(&free) {
                piv_iter.next();
                continue;
            }
            let mut v = Mat::zeros(self.cols, 1);
            v[(free, 0)] = F::one();
            for c in 0..self.cols {
                if let Some(row) = pivot_rows[c] {
                    v[(c, 0)] = r[(row, free)].neg();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `A·X = B` for all columns of `B` at once.
    pub fn solve(&self, b: &Self) -> SolveOutcome<F> {
        assert_eq!(self.rows, b.rows);
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return SolveOutcome::Inconsistent;
        }
        let mut particular = Mat::zeros(self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for k in 0..b.cols {
                particular[(pc, k)] = r[(row, self.cols + k)].clone();
            }
        }
        SolveOutcome::Solution {
            particular,
            kernel: self.kernel(),
        }
    }

    /// Inverse of a square matrix; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Coefficients of the characteristic polynomial `det(λI − A)`,
    /// ascending in λ (index k holds the λ^k coefficient; the top
    /// coefficient is 1). Faddeev–LeVerrier, valid in characteristic 0.
    pub fn char_poly(&self) -> Vec<F> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        let mut m = Mat::zeros(n, n);
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1}·I ;  c_{n−k} = −tr(A·M_k)/k.
            m = self.mul(&m);
            for i in 0..n {
                m[(i, i)] = m[(i, i)].add(&coeffs[n - k + 1]);
            }
            let am = self.mul(&m);
            let k_inv = F::from_int(k as i64).inv();
            coeffs[n - k] = am.trace().neg().mul(&k_inv);
        }
        coeffs
    }
}

/// Field with an exact total order (sign of every element decidable).
pub trait SignedField: Field {
    /// −1, 0 or 1.
    fn sign(&self) -> i32;
}

impl SignedField for Rq3 {
    fn sign(&self) -> i32 {
        Rq3::sign(self)
    }
}

impl<F: SignedField> Mat<F> {
    /// Inertia (p, m, z) of a symmetric matrix over an ordered field, by
    /// Lagrange congruence: p positive, m negative, z zero eigenvalue
    /// counts of the associated quadratic form.
    pub fn symmetric_inertia(&self) -> (usize, usize, usize) {
        assert!(self.is_square());
        assert_eq!(*self, self.transpose(), "matrix is not symmetric");
        let n = self.rows;
        let mut s = self.clone();
        let (mut pos, mut neg) = (0usize, 0usize);
        let mut p = 0usize;
        while p < n {
            // Ensure a nonzero pivot at (p, p), using congruence moves only.
            if s[(p, p)].is_zero() {
                if let Some(k) = (p + 1..n).find(|&k| !s[(k, k)].is_zero()) {
                    s.congruence_swap(p, k);
                } else {
                    // Diagonal of the trailing block is zero; find any
                    // nonzero off-diagonal entry and fold it in: adding row
                    // and column j to i makes the (i,i) entry 2·s[i][j] ≠ 0.
                    let mut found = None;
                    'search: for i in p..n {
                        for j in i + 1..n {
                            if !s[(i, j)].is_zero() {
                                found = Some((i, j));
                                break 'search;
                            }
                        }
                    }
                    let Some((i, j)) = found else {
                        break; // trailing block is identically zero
                    };
                    s.congruence_add(i, j);
                    if i != p {
                        s.congruence_swap(p, i);
                    }
                }
            }
            let d = s[(p, p)].clone();
            if d.sign() > 0 {
                pos += 1;
            } else {
                neg += 1;
            }
            let dinv = d.inv();
            for r in p + 1..n {
                if s[(r, p)].is_zero() {
                    continue;
                }
                let f = s[(r, p)].mul(&dinv);
                for c in p..n {
                    let delta = f.mul(&s[(p, c)]);
                    s[(r, c)] = s[(r, c)].sub(&delta);
                }
                for c in p..n {
                    let delta = f.mul(&s[(c, p)]);
                    s[(c, r)] = s[(c, r)].sub(&delta);
                }
            }
            p += 1;
        }
        (pos, neg, n - pos - neg)
    }

    fn congruence_swap(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            let (a, b) = (self[(i, c)].clone(), self[(j, c)].clone());
            self[(i, c)] = b;
            self[(j, c)] = a;
        }
        for r in 0..self.rows {
            let (a, b) = (self[(r, i)].clone(), self[(r, j)].clone());
            self[(r, i)] = b;
            self[(r, j)] = a;
        }
    }

    fn congruence_add(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self[(i, c)] = self[(i, c)].add(&self[(j, c)].clone());
        }
        for r in 0..self.rows {
            self[(r, i)] = self[(r, i)].add(&self[(r, j)].clone());
        }
    }
}

impl Mat<Cq3> {
    /// Inertia (p, m, z) of a hermitian matrix over ℚ(√3)(i).
    ///
    /// The real part of the hermitian form, as a real symmetric form on the
    /// realification, is `[[Re H, −Im H], [Im H, Re H]]`; its inertia is
    /// exactly double the hermitian inertia.
    pub fn hermitian_inertia(&self) -> (usize, usize, usize) {
        assert!(self.is_hermitian(), "matrix is not hermitian");
        let n = self.rows;
        let real = Mat::from_fn(2 * n, 2 * n, |i, j| {
            let (bi, ii) = (i / n, i % n);
            let (bj, jj) = (j / n, j % n);
            let e = &self[(ii, jj)];
            match (bi, bj) {
                (0, 0) | (1, 1) => e.re.clone(),
                (0, 1) => e.im.neg(),
                _ => e.im.clone(),
            }
        });
        let (p, m, z) = real.symmetric_inertia();
        assert!(p % 2 == 0 && m % 2 == 0 && z % 2 == 0);
        (p / 2, m / 2, z / 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{qq, Scalar};

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn product_and_kron_conventions() {
        let a = Mat::from_rows(vec![vec![s(1), s(2)], vec![s(3), s(4)]]);
        let b = Mat::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(0)]]);
        let ab = a.mul(&b);
        assert_eq!(
            ab,
            Mat::from_rows(vec![vec![s(2), s(1)], vec![s(4), s(3)]])
        );
        // Mixed product rule (A⊗B)(C⊗D) = AC ⊗ BD.
        let c = Mat::from_rows(vec![vec![s(1), s(1)], vec![s(0), s(2)]]);
        let d = Mat::from_rows(vec![vec![s(2), s(0)], vec![s(1), s(1)]]);
        assert_eq!(
            a.kron(&b).mul(&c.kron(&d)),
            a.mul(&c).kron(&b.mul(&d))
        );
        // Left-major indexing: (A⊗B)[0·2+1, 0·2+0] = A[0,0]·B[1,0] = 1.
        assert_eq!(a.kron(&b)[(1, 0)], s(1));
    }

    #[test]
    fn rank_kernel_solve_inverse() {
        // Rank-2 3×3 with kernel spanned by (1, −2, 1).
        let m = Mat::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(4), s(5), s(6)],
            vec![s(7), s(8), s(9)],
        ]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(m.mul(&ker[0]).is_zero());
        assert!(!ker[0].is_zero());

        let b = Mat::col_vec(&[s(6), s(15), s(24)]);
        match m.solve(&b) {
            SolveOutcome::Solution { particular, .. } => {
                assert_eq!(m.mul(&particular), b);
            }
            SolveOutcome::Inconsistent => panic!("consistent system reported inconsistent"),
        }
        let b_bad = Mat::col_vec(&[s(1), s(0), s(0)]);
        assert!(matches!(m.solve(&b_bad), SolveOutcome::Inconsistent));

        let inv = Mat::from_rows(vec![vec![s(2), s(1)], vec![s(1), s(1)]])
            .inverse()
            .unwrap();
        assert_eq!(inv, Mat::from_rows(vec![vec![s(1), s(-1)], vec![s(-1), s(2)]]));
        assert!(m.inverse().is_none());
    }

    #[test]
    fn char_poly_known_values() {
        // [[2,1],[1,2]]: λ² − 4λ + 3.
        let m = Mat::from_rows(vec![vec![s(2), s(1)], vec![s(1), s(2)]]);
        assert_eq!(m.char_poly(), vec![s(3), s(-4), s(1)]);
        // Companion-style nilpotent: λ³.
        let n = Mat::from_rows(vec![
            vec![s(0), s(1), s(0)],
            vec![s(0), s(0), s(1)],
            vec![s(0), s(0), s(0)],
        ]);
        assert_eq!(n.char_poly(), vec![s(0), s(0), s(0), s(1)]);
    }

    #[test]
    fn symmetric_inertia_over_rq3() {
        let e = |a: i64, b: i64| Rq3::new(qq(a, 1), qq(b, 1));
        // diag(1, −2, 0) → (1, 1, 1).
        let d = Mat::from_rows(vec![
            vec![e(1, 0), e(0, 0), e(0, 0)],
            vec![e(0, 0), e(-2, 0), e(0, 0)],
            vec![e(0, 0), e(0, 0), e(0, 0)],
        ]);
        assert_eq!(d.symmetric_inertia(), (1, 1, 1));
        // Hyperbolic plane [[0,1],[1,0]] → (1, 1, 0).
        let h = Mat::from_rows(vec![vec![e(0, 0), e(1, 0)], vec![e(1, 0), e(0, 0)]]);
        assert_eq!(h.symmetric_inertia(), (1, 1, 0));
        // [[√3, 1], [1, √3]] has det 2 > 0 and positive trace → (2, 0, 0).
        let g = Mat::from_rows(vec![vec![e(0, 1), e(1, 0)], vec![e(1, 0), e(0, 1)]]);
        assert_eq!(g.symmetric_inertia(), (2, 0, 0));
    }

    #[test]
    fn hermitian_inertia_over_cq3() {
        let zero = Cq3::zero();
        let i = Cq3::i();
        // [[0, i], [−i, 0]] has eigenvalues ±1 → (1, 1, 0).
        let m = Mat::from_rows(vec![
            vec![zero.clone(), i.clone()],
            vec![i.neg(), zero.clone()],
        ]);
        assert_eq!(m.hermitian_inertia(), (1, 1, 0));
        // [[0, iq], [−iq², 0]] (q a cube root of unity) is hermitian —
        // conj(iq) = −iq² — with eigenvalues ±1 as well.
        let iq = i.mul(&Cq3::from_scalar(&Scalar::q()));
        let m2 = Mat::from_rows(vec![
            vec![zero.clone(), iq.clone()],
            vec![iq.conj(), zero],
        ]);
        assert!(m2.is_hermitian());
        assert_eq!(m2.hermitian_inertia(), (1, 1, 0));
    }

    #[test]
    fn dagger_and_conj() {
        let q = Scalar::q();
        let m = Mat::from_rows(vec![vec![s(1), q.clone()], vec![s(0), s(2)]]);
        let d = m.dagger();
        assert_eq!(d[(1, 0)], q.conj());
        assert_eq!(d[(0, 1)], s(0));
        assert_eq!(m.dagger().dagger(), m);
    }
}
