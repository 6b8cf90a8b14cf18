//! Boundary and coboundary maps in the face bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::complex::HypercliqueComplex;
use crate::error::{Error, Result};
use crate::face::{all_faces, incidence, Face};
use crate::field::Field;
use crate::matrix::ExactMatrix;

/// A finitely supported map from faces to field elements. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainVector<F: Field> {
    field: F,
    coords: BTreeMap<Face, F::Elem>,
}

impl<F: Field> ChainVector<F> {
    pub fn zero(field: F) -> Self {
        ChainVector { field, coords: BTreeMap::new() }
    }

    pub fn from_terms(field: F, terms: impl IntoIterator<Item = (Face, F::Elem)>) -> Self {
        let mut v = Self::zero(field);
        for (f, a) in terms {
            v.add_term(f, &a);
        }
        v
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn get(&self, f: Face) -> F::Elem {
        self.coords.get(&f).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, f: Face, a: F::Elem) {
        if self.field.is_zero(&a) {
            self.coords.remove(&f);
        } else {
            self.coords.insert(f, a);
        }
    }

    /// `self[f] += a`.
    pub fn add_term(&mut self, f: Face, a: &F::Elem) {
        let cur = self.get(f);
        let next = self.field.add(&cur, a);
        self.set(f, next);
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, scale: &F::Elem, other: &ChainVector<F>) {
        for (&f, a) in &other.coords {
            let t = self.field.mul(scale, a);
            self.add_term(f, &t);
        }
    }

    pub fn scaled(&self, scale: &F::Elem) -> Self {
        let mut out = Self::zero(self.field.clone());
        out.add_scaled(scale, self);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Faces with a nonzero coefficient, in lexicographic order.
    pub fn support(&self) -> Vec<Face> {
        self.coords.keys().copied().collect()
    }

    pub fn support_len(&self) -> usize {
        self.coords.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Face, &F::Elem)> {
        self.coords.iter().map(|(&f, a)| (f, a))
    }

    /// Coordinates in the given basis order; faces outside the basis are an error.
    pub fn to_dense(&self, basis: &[Face]) -> Result<Vec<F::Elem>> {
        let index: HashMap<Face, usize> = basis.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut out = vec![self.field.zero(); basis.len()];
        for (&f, a) in &self.coords {
            let &i = index.get(&f).ok_or(Error::NotInGround(f))?;
            out[i] = a.clone();
        }
        Ok(out)
    }

    pub fn from_dense(field: F, basis: &[Face], values: &[F::Elem]) -> Self {
        Self::from_terms(field, basis.iter().copied().zip(values.iter().cloned()))
    }

    /// Applies the boundary map to every face in the support, extended linearly.
    pub fn boundary(&self) -> ChainVector<F> {
        let mut out = Self::zero(self.field.clone());
        for (&f, a) in &self.coords {
            for (sub, sign) in f.boundary_terms() {
                let t = self.field.mul(a, &self.field.from_i64(sign));
                out.add_term(sub, &t);
            }
        }
        out
    }
}

impl<F: Field> fmt::Debug for ChainVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.coords.iter().map(|(face, a)| format!("{}*{}", self.field.format(a), face)).collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `∂F = Σ [F' : F] F'` for a single face, with no membership check.
pub fn face_boundary<F: Field>(field: &F, f: Face) -> ChainVector<F> {
    ChainVector::from_terms(
        field.clone(),
        f.boundary_terms().into_iter().map(|(sub, sign)| (sub, field.from_i64(sign))),
    )
}

/// The boundary of a face of `c` of size at least 2.
pub fn boundary<F: Field>(c: &HypercliqueComplex, f: Face, field: &F) -> Result<ChainVector<F>> {
    if f.len() < 2 {
        return Err(Error::Unsupported(format!("boundary of the vertex {f}")));
    }
    if !c.is_face(f) {
        return Err(Error::NotAFace(f));
    }
    Ok(face_boundary(field, f))
}

/// `δV = Σ_{F ∈ S_k} [V : F] F`. Zero when `v` lies in no generator.
pub fn coboundary<F: Field>(c: &HypercliqueComplex, v: Face, field: &F) -> ChainVector<F> {
    ChainVector::from_terms(
        field.clone(),
        c.generators()
            .iter()
            .filter(|g| v.is_subset_of(**g))
            .map(|&g| (g, field.from_i64(incidence(v, g)))),
    )
}

/// The matrix of `∂_k` with rows indexed by all `(k-1)`-subsets of `[n]` and
/// columns by the generators, both lexicographic.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix<F: Field> {
    row_faces: Vec<Face>,
    col_faces: Vec<Face>,
    row_index: HashMap<Face, usize>,
    matrix: ExactMatrix<F>,
}

impl<F: Field> BoundaryMatrix<F> {
    pub fn new(c: &HypercliqueComplex, field: &F) -> Self {
        let row_faces = all_faces(c.n(), c.k() - 1);
        let col_faces = c.generators().to_vec();
        let row_index: HashMap<Face, usize> = row_faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut matrix = ExactMatrix::zeros(field.clone(), row_faces.len(), col_faces.len());
        for (j, &g) in col_faces.iter().enumerate() {
            for (sub, sign) in g.boundary_terms() {
                matrix.set(row_index[&sub], j, field.from_i64(sign));
            }
        }
        BoundaryMatrix { row_faces, col_faces, row_index, matrix }
    }

    pub fn matrix(&self) -> &ExactMatrix<F> {
        &self.matrix
    }

    pub fn row_faces(&self) -> &[Face] {
        &self.row_faces
    }

    pub fn col_faces(&self) -> &[Face] {
        &self.col_faces
    }

    pub fn row_of(&self, v: Face) -> Option<usize> {
        self.row_index.get(&v).copied()
    }

    /// The row at `v` as a vector on the generators.
    pub fn row_vector(&self, v: Face) -> Option<ChainVector<F>> {
        let r = self.row_of(v)?;
        Some(ChainVector::from_dense(self.matrix.field().clone(), &self.col_faces, self.matrix.row(r)))
    }

    pub fn column_vector(&self, j: usize) -> ChainVector<F> {
        ChainVector::from_dense(self.matrix.field().clone(), &self.row_faces, &self.matrix.column(j))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}
