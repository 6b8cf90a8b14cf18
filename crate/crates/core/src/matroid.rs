//! The simplicial matroid of a k-skeleton: the column matroid of `∂_k`.

use std::collections::HashMap;

use crate::chain::{coboundary, face_boundary, BoundaryMatrix, ChainVector};
use crate::complex::HypercliqueComplex;
use crate::elemset::{ElemSet, MAX_GROUND};
use crate::error::{Error, Result};
use crate::face::{all_faces, Face};
use crate::field::Field;
use crate::linear::LinearMatroid;
use crate::matrix::SpanBasis;

/// Ground sets above this size are refused by [`SimplicialMatroid::circuits_brute`].
pub const DEFAULT_BRUTE_GUARD: usize = 22;

/// Largest `n` accepted by [`verify_full_duality`].
pub const DEFAULT_DUALITY_GUARD: usize = 7;

/// Visit bound for [`SimplicialMatroid::circuits`].
pub const DEFAULT_CIRCUIT_BUDGET: f64 = 2.0e6;

/// The support of `∂X` for a `(k+1)`-face `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallCircuit<F: Field> {
    pub apex: Face,
    pub members: Vec<Face>,
    pub vector: ChainVector<F>,
}

#[derive(Clone, Debug)]
pub struct SimplicialMatroid<F: Field> {
    complex: HypercliqueComplex,
    field: F,
    matrix: BoundaryMatrix<F>,
    index: HashMap<Face, usize>,
    linear: LinearMatroid<F>,
    rank: usize,
}

impl<F: Field> SimplicialMatroid<F> {
    pub fn new(complex: HypercliqueComplex, field: F) -> Result<Self> {
        let m = complex.generators().len();
        if m > MAX_GROUND {
            return Err(Error::MatroidTooLarge(m));
        }
        let matrix = BoundaryMatrix::new(&complex, &field);
        let linear = LinearMatroid::from_matrix(matrix.matrix())?;
        let index = complex.generators().iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let rank = linear.rank();
        Ok(SimplicialMatroid { complex, field, matrix, index, linear, rank })
    }

    pub fn complex(&self) -> &HypercliqueComplex {
        &self.complex
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn boundary_matrix(&self) -> &BoundaryMatrix<F> {
        &self.matrix
    }

    pub fn linear(&self) -> &LinearMatroid<F> {
        &self.linear
    }

    /// The ground set `S_k` in lexicographic order.
    pub fn ground(&self) -> &[Face] {
        self.complex.generators()
    }

    pub fn ground_set(&self) -> ElemSet {
        ElemSet::full(self.ground().len())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn index_of(&self, f: Face) -> Result<usize> {
        self.index.get(&f).copied().ok_or(Error::NotInGround(f))
    }

    pub fn set_of(&self, faces: &[Face]) -> Result<ElemSet> {
        faces.iter().map(|&f| self.index_of(f)).collect::<Result<ElemSet>>()
    }

    pub fn faces_of(&self, s: ElemSet) -> Vec<Face> {
        s.iter().map(|i| self.ground()[i]).collect()
    }

    pub fn rank_set(&self, s: ElemSet) -> usize {
        self.linear.rank_set(s)
    }

    pub fn rank_of(&self, faces: &[Face]) -> Result<usize> {
        Ok(self.rank_set(self.set_of(faces)?))
    }

    pub fn is_independent(&self, faces: &[Face]) -> Result<bool> {
        let s = self.set_of(faces)?;
        Ok(self.rank_set(s) == s.len())
    }

    pub fn closure(&self, s: ElemSet) -> ElemSet {
        self.linear.closure(s)
    }

    pub fn is_hyperplane(&self, s: ElemSet) -> bool {
        self.linear.is_hyperplane(s)
    }

    /// Whether `faces` is a cocircuit: nonempty with a hyperplane as complement.
    pub fn is_cocircuit(&self, faces: &[Face]) -> Result<bool> {
        Ok(self.is_cocircuit_set(self.set_of(faces)?))
    }

    pub fn is_cocircuit_set(&self, s: ElemSet) -> bool {
        self.linear.is_cocircuit(s)
    }

    /// Rank of the restriction to `s` minus one when `s` is removed from `within`,
    /// i.e. whether `s` is a cocircuit of the restriction to `within`.
    pub fn is_cocircuit_within(&self, within: ElemSet, s: ElemSet) -> bool {
        if s.is_empty() || !s.is_subset_of(within) {
            return false;
        }
        let rest = within.difference(s);
        let mut span = SpanBasis::new(self.field.clone(), self.linear_dim());
        for i in rest.iter() {
            span.insert(self.linear.column(i));
        }
        let r_rest = span.rank();
        // The complement is a flat of the restriction ...
        if s.iter().any(|i| span.contains(self.linear.column(i))) {
            return false;
        }
        // ... of corank one.
        r_rest + 1 == self.rank_set(within)
    }

    fn linear_dim(&self) -> usize {
        self.matrix.row_faces().len()
    }

    /// One small circuit per `(k+1)`-face, in lexicographic order of apexes.
    pub fn small_circuits(&self) -> Vec<SmallCircuit<F>> {
        self.complex
            .upper_faces()
            .iter()
            .map(|&apex| SmallCircuit {
                apex,
                members: apex.subsets(self.complex.k()),
                vector: face_boundary(&self.field, apex),
            })
            .collect()
    }

    /// All circuits of size at most `max_size` by exhaustive walk of
    /// independent sets. Refuses ground sets above [`DEFAULT_BRUTE_GUARD`].
    pub fn circuits_brute(&self, max_size: usize) -> Result<Vec<ElemSet>> {
        self.circuits_brute_guarded(max_size, DEFAULT_BRUTE_GUARD)
    }

    pub fn circuits_brute_guarded(&self, max_size: usize, guard: usize) -> Result<Vec<ElemSet>> {
        let m = self.ground().len();
        if m > guard {
            return Err(Error::GuardExceeded { what: "ground set for circuit enumeration", size: m, guard });
        }
        Ok(self.linear.circuits_primal(max_size))
    }

    /// All circuits, through whichever exhaustive route is cheaper.
    pub fn circuits(&self, budget: f64) -> Result<Vec<ElemSet>> {
        self.linear.circuits(self.ground().len(), budget)
    }

    /// All cocircuits, as complements of hyperplanes.
    pub fn cocircuits(&self) -> Vec<ElemSet> {
        self.linear.cocircuits()
    }

    /// The dependency on a circuit as a chain on the ground set, first coefficient one.
    pub fn circuit_vector(&self, c: ElemSet) -> Option<ChainVector<F>> {
        let v = self.linear.circuit_vector(c)?;
        Some(ChainVector::from_dense(self.field.clone(), self.ground(), &v))
    }

    /// A basis of the circuit space (the kernel of `∂_k`).
    pub fn circuit_space_basis(&self) -> Vec<ChainVector<F>> {
        self.linear
            .kernel_basis()
            .into_iter()
            .map(|v| ChainVector::from_dense(self.field.clone(), self.ground(), &v))
            .collect()
    }

    /// Whether a chain on the ground set lies in the circuit space.
    pub fn is_cycle(&self, v: &ChainVector<F>) -> Result<bool> {
        let dense = v.to_dense(self.ground())?;
        let image = self.matrix.matrix().mul_vec(&dense)?;
        Ok(image.iter().all(|a| self.field.is_zero(a)))
    }

    /// A basis of the cocircuit space drawn from the coboundaries `δV`, taking
    /// `V` in lexicographic order and keeping each one that is independent of
    /// those already chosen.
    pub fn cocircuit_space_basis(&self) -> Vec<ChainVector<F>> {
        let mut span = SpanBasis::new(self.field.clone(), self.ground().len());
        let mut out = Vec::new();
        for v in all_faces(self.complex.n(), self.complex.k() - 1) {
            let d = coboundary(&self.complex, v, &self.field);
            if d.is_zero() {
                continue;
            }
            let dense = d.to_dense(self.ground()).expect("coboundary lives on the generators");
            if span.insert(&dense) {
                out.push(d);
            }
            if out.len() == self.rank {
                break;
            }
        }
        out
    }

    /// Whether a chain on the ground set lies in the row space of `∂_k`.
    pub fn in_cocircuit_space(&self, v: &ChainVector<F>) -> Result<bool> {
        self.matrix.matrix().in_row_space(&v.to_dense(self.ground())?)
    }
}

/// Checks that complementation maps the circuits of the full simplicial
/// matroid on `(n-k)`-sets onto the cocircuits of the one on `k`-sets.
pub fn verify_full_duality<F: Field>(n: usize, k: usize, field: &F) -> Result<bool> {
    verify_full_duality_guarded(n, k, field, DEFAULT_DUALITY_GUARD)
}

pub fn verify_full_duality_guarded<F: Field>(n: usize, k: usize, field: &F, guard: usize) -> Result<bool> {
    if n > guard {
        return Err(Error::GuardExceeded { what: "duality check ground size n", size: n, guard });
    }
    if k < 2 || k + 2 > n {
        return Err(Error::Unsupported(format!(
            "duality check needs 2 <= k and 2 <= n - k (got n = {n}, k = {k})"
        )));
    }
    let primal = SimplicialMatroid::new(HypercliqueComplex::full(n, k)?, field.clone())?;
    let dual = SimplicialMatroid::new(HypercliqueComplex::full(n, n - k)?, field.clone())?;
    let full = (1u64 << n) - 1;

    let mut complemented: Vec<Vec<Face>> = dual
        .circuits(f64::INFINITY)?
        .into_iter()
        .map(|c| {
            let mut faces: Vec<Face> = dual
                .faces_of(c)
                .into_iter()
                .map(|x| Face::from_mask(full & !x.mask()).expect("proper subset"))
                .collect();
            faces.sort();
            faces
        })
        .collect();
    complemented.sort();

    // Cocircuits of the primal, enumerated as circuits of its dual representation.
    let mut cocircuits: Vec<Vec<Face>> = primal
        .linear()
        .dual()
        .circuits(primal.ground().len(), f64::INFINITY)?
        .into_iter()
        .map(|c| primal.faces_of(c))
        .collect();
    cocircuits.sort();
    Ok(complemented == cocircuits)
}
