//! Dense exact matrices and Gaussian elimination.
//!
//! Pivoting is deterministic: columns are scanned left to right and the
//! first unused row with a nonzero entry in the column becomes the pivot row.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub matrix: ExactMatrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        ExactMatrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: row.len() });
            }
            data.extend(row);
        }
        Ok(ExactMatrix { field, rows: n_rows, cols, data })
    }

    /// Builds a matrix from small integer entries (signs, incidence numbers).
    pub fn from_i64(field: F, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, got: entries.len() });
        }
        let data = entries.iter().map(|&v| field.from_i64(v)).collect();
        Ok(ExactMatrix { field, rows, cols, data })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// The submatrix on the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        ExactMatrix { field: self.field.clone(), rows: self.rows, cols: cols.len(), data }
    }

    pub fn mul_vec(&self, x: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: x.len() });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !f.is_zero(a) && !f.is_zero(b))
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `row[target] -= factor * row[source]`, touching columns `from..`.
    fn axpy_rows(&mut self, target: usize, source: usize, factor: &F::Elem, from: usize) {
        for c in from..self.cols {
            let s = &self.data[source * self.cols + c];
            if self.field.is_zero(s) {
                continue;
            }
            let delta = self.field.mul(factor, s);
            let t = &mut self.data[target * self.cols + c];
            *t = self.field.sub(t, &delta);
        }
    }

    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(prow, r);
            let inv = f.inv(m.get(prow, c)).expect("pivot is nonzero");
            for cc in c..m.cols {
                let v = f.mul(m.get(prow, cc), &inv);
                m.set(prow, cc, v);
            }
            for r in 0..m.rows {
                if r != prow && !f.is_zero(m.get(r, c)) {
                    let factor = m.get(r, c).clone();
                    m.axpy_rows(r, prow, &factor, c);
                }
            }
            pivots.push(c);
            prow += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        // Forward elimination only; no need for the reduced form.
        let mut m = self.clone();
        let f = self.field.clone();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(prow, r);
            let inv = f.inv(m.get(prow, c)).expect("pivot is nonzero");
            for r in prow + 1..m.rows {
                if !f.is_zero(m.get(r, c)) {
                    let factor = f.mul(m.get(r, c), &inv);
                    m.axpy_rows(r, prow, &factor, c);
                }
            }
            prow += 1;
        }
        prow
    }

    /// A basis of `{x : Mx = 0}`, one vector per free column, in column order.
    pub fn nullspace_basis(&self) -> Vec<Vec<F::Elem>> {
        let Rref { matrix, pivots } = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![f.zero(); self.cols];
                x[free] = f.one();
                for (row, &p) in pivots.iter().enumerate() {
                    x[p] = f.neg(matrix.get(row, free));
                }
                x
            })
            .collect()
    }

    /// The nonzero rows of the reduced row echelon form.
    pub fn row_space_basis(&self) -> Vec<Vec<F::Elem>> {
        let Rref { matrix, pivots } = self.rref();
        (0..pivots.len()).map(|r| matrix.row(r).to_vec()).collect()
    }

    fn check_vector(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        if let Some(bad) = v.iter().find(|a| !in_field(&self.field, a)) {
            return Err(Error::FieldMismatch(
                format!("{:?}", bad),
                self.field.spec().to_string(),
            ));
        }
        Ok(())
    }

    /// Whether `v` is a linear combination of the rows.
    pub fn in_row_space(&self, v: &[F::Elem]) -> Result<bool> {
        self.check_vector(v)?;
        let mut span = SpanBasis::new(self.field.clone(), self.cols);
        for r in 0..self.rows {
            span.insert(self.row(r));
        }
        Ok(span.contains(v))
    }

    /// Some `x` with `Mx = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let f = &self.field;
        let mut aug = Self::zeros(f.clone(), self.rows, self.cols + 1);
        for (r, br) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, br.clone());
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }
}

/// Residues must be canonical; a value outside `[0, p)` came from another field.
fn in_field<F: Field>(f: &F, a: &F::Elem) -> bool {
    match f.order() {
        Some(_) => f.add(a, &f.zero()) == *a,
        None => true,
    }
}

impl<F: Field> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "ExactMatrix {}x{} over {}", self.rows, self.cols, self.field.spec())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|a| self.field.format(a)).collect();
            writeln!(out, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Incremental echelon basis of a subspace of `F^dim`.
///
/// Vectors are reduced against the basis in insertion order, so removing the
/// most recently inserted vector is a valid undo. Each basis vector remembers
/// its expression in terms of the inserted vectors, which gives the
/// coefficients of a dependency when an inserted vector reduces to zero.
#[derive(Clone, Debug)]
pub struct SpanBasis<F: Field> {
    field: F,
    dim: usize,
    basis: Vec<BasisRow<F>>,
}

#[derive(Clone, Debug)]
struct BasisRow<F: Field> {
    pivot: usize,
    /// Reduced vector, scaled so the pivot entry is one.
    vector: Vec<F::Elem>,
    /// `vector = sum_j combo[j] * inserted[j]`.
    combo: Vec<F::Elem>,
}

/// Outcome of reducing a vector against a [`SpanBasis`].
#[derive(Clone, Debug)]
pub struct Reduction<F: Field> {
    pub remainder: Vec<F::Elem>,
    /// `v - remainder = sum_j coefficients[j] * inserted[j]`.
    pub coefficients: Vec<F::Elem>,
}

impl<F: Field> Reduction<F> {
    pub fn is_dependent(&self, f: &F) -> bool {
        self.remainder.iter().all(|a| f.is_zero(a))
    }
}

impl<F: Field> SpanBasis<F> {
    pub fn new(field: F, dim: usize) -> Self {
        SpanBasis { field, dim, basis: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn reduce(&self, v: &[F::Elem]) -> Reduction<F> {
        let f = &self.field;
        let mut rem = v.to_vec();
        let mut coefficients = vec![f.zero(); self.basis.len()];
        for row in &self.basis {
            let c = rem[row.pivot].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (i, b) in row.vector.iter().enumerate().skip(row.pivot) {
                if !f.is_zero(b) {
                    rem[i] = f.sub(&rem[i], &f.mul(&c, b));
                }
            }
            for (j, b) in row.combo.iter().enumerate() {
                if !f.is_zero(b) {
                    coefficients[j] = f.add(&coefficients[j], &f.mul(&c, b));
                }
            }
        }
        Reduction { remainder: rem, coefficients }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).is_dependent(&self.field)
    }

    /// Inserts `v`; returns `false` (and leaves the basis unchanged) when `v`
    /// is already in the span.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let red = self.reduce(v);
        self.push_reduction(red)
    }

    /// Inserts a vector from an already computed [`Reduction`] against the current basis.
    pub fn push_reduction(&mut self, red: Reduction<F>) -> bool {
        let f = &self.field;
        let Some(pivot) = red.remainder.iter().position(|a| !f.is_zero(a)) else {
            return false;
        };
        let inv = f.inv(&red.remainder[pivot]).expect("nonzero pivot");
        let vector = red.remainder.iter().map(|a| f.mul(a, &inv)).collect();
        // remainder = v - sum coeff_j inserted_j, and v is inserted index len.
        let mut combo: Vec<F::Elem> = red.coefficients.iter().map(|c| f.neg(&f.mul(c, &inv))).collect();
        combo.push(inv);
        self.basis.push(BasisRow { pivot, vector, combo });
        true
    }

    /// Removes the most recently inserted vector.
    pub fn pop(&mut self) {
        self.basis.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn zero_and_identity_ranks() {
        assert_eq!(ExactMatrix::zeros(gf(2), 3, 3).rank(), 0);
        assert_eq!(ExactMatrix::identity(gf(2), 4).rank(), 4);
        assert_eq!(ExactMatrix::identity(Rationals::new(), 3).nullspace_basis().len(), 0);
    }

    #[test]
    fn parity_kernel() {
        let m = ExactMatrix::from_i64(gf(2), 1, 2, &[1, 1]).unwrap();
        assert_eq!(m.nullspace_basis(), vec![vec![1, 1]]);
        assert!(!m.in_row_space(&[1, 0]).unwrap());
        assert!(m.in_row_space(&[0, 0]).unwrap());
        assert!(m.in_row_space(&[1, 1]).unwrap());
    }

    #[test]
    fn full_row_space_over_rationals() {
        let q = Rationals::new();
        let m = ExactMatrix::identity(q, 2);
        assert!(m.in_row_space(&[q.from_i64(3), q.from_i64(5)]).unwrap());
    }

    #[test]
    fn field_mismatch_is_reported() {
        let m = ExactMatrix::identity(gf(2), 2);
        assert!(matches!(m.in_row_space(&[5, 0]), Err(Error::FieldMismatch(..))));
        assert!(matches!(m.in_row_space(&[1]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let q = Rationals::new();
        let m = ExactMatrix::from_i64(q, 2, 2, &[1, 1, 1, 1]).unwrap();
        assert!(m.solve(&[q.from_i64(1), q.from_i64(2)]).unwrap().is_none());
        let x = m.solve(&[q.from_i64(2), q.from_i64(2)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![q.from_i64(2), q.from_i64(2)]);
    }

    #[test]
    fn span_basis_tracks_dependency() {
        let f = gf(5);
        let mut s = SpanBasis::new(f, 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(s.insert(&[0, 1, 1]));
        // 2*(1,2,0) + 3*(0,1,1) = (2, 7, 3) = (2, 2, 3) mod 5
        let red = s.reduce(&[2, 2, 3]);
        assert!(red.is_dependent(&f));
        assert_eq!(red.coefficients, vec![2, 3]);
        assert!(!s.insert(&[2, 2, 3]));
        s.pop();
        assert_eq!(s.rank(), 1);
        assert!(!s.contains(&[0, 1, 1]));
    }

    fn matrix_strategy() -> impl Strategy<Value = (u64, usize, usize, Vec<i64>)> {
        (prop::sample::select(vec![2u64, 3, 5, 0]), 1usize..6, 1usize..7).prop_flat_map(
            |(p, r, c)| (Just(p), Just(r), Just(c), prop::collection::vec(-2i64..3, r * c)),
        )
    }

    fn check_invariants<F: Field>(m: ExactMatrix<F>) -> std::result::Result<(), TestCaseError> {
        let rank = m.rank();
        prop_assert_eq!(rank, m.transpose().rank());
        prop_assert_eq!(rank, m.rref().pivots.len());
        let kernel = m.nullspace_basis();
        prop_assert_eq!(m.cols(), rank + kernel.len());
        for x in &kernel {
            prop_assert!(m.mul_vec(x).unwrap().iter().all(|a| m.field().is_zero(a)));
        }
        for r in 0..m.rows() {
            prop_assert!(m.in_row_space(m.row(r)).unwrap());
        }
        let mut span = SpanBasis::new(m.field().clone(), m.cols());
        for r in 0..m.rows() {
            span.insert(m.row(r));
        }
        prop_assert_eq!(span.rank(), rank);
        Ok(())
    }

    proptest! {
        #[test]
        fn rank_nullity_and_transpose((p, r, c, entries) in matrix_strategy()) {
            if p == 0 {
                check_invariants(ExactMatrix::from_i64(Rationals::new(), r, c, &entries).unwrap())?;
            } else {
                check_invariants(ExactMatrix::from_i64(gf(p), r, c, &entries).unwrap())?;
            }
        }
    }
}
