//! Matroids represented by the columns of a matrix over an exact field.
//!
//! Two exhaustive circuit enumerations live here. The primal one walks
//! independent sets in increasing index order and reports each circuit from
//! its largest element; the dual one walks the lattice of flats of the dual
//! matroid and complements its hyperplanes. The first is cheap when the rank
//! is small, the second when the nullity is.

use std::collections::HashSet;

use crate::elemset::{ElemSet, MAX_GROUND};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{ExactMatrix, SpanBasis};

#[derive(Clone, Debug)]
pub struct LinearMatroid<F: Field> {
    field: F,
    dim: usize,
    columns: Vec<Vec<F::Elem>>,
}

/// Which exhaustive enumeration to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Primal,
    Dual,
}

impl<F: Field> LinearMatroid<F> {
    pub fn new(field: F, dim: usize, columns: Vec<Vec<F::Elem>>) -> Result<Self> {
        if columns.len() > MAX_GROUND {
            return Err(Error::MatroidTooLarge(columns.len()));
        }
        if let Some(c) = columns.iter().find(|c| c.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: c.len() });
        }
        Ok(LinearMatroid { field, dim, columns })
    }

    pub fn from_matrix(m: &ExactMatrix<F>) -> Result<Self> {
        let columns = (0..m.cols()).map(|c| m.column(c)).collect();
        Self::new(m.field().clone(), m.rows(), columns)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn column(&self, i: usize) -> &[F::Elem] {
        &self.columns[i]
    }

    pub fn ground(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    fn span_of(&self, s: ElemSet) -> SpanBasis<F> {
        let mut span = SpanBasis::new(self.field.clone(), self.dim);
        for i in s.iter() {
            span.insert(&self.columns[i]);
        }
        span
    }

    pub fn rank_set(&self, s: ElemSet) -> usize {
        self.span_of(s).rank()
    }

    pub fn rank(&self) -> usize {
        self.rank_set(self.ground())
    }

    pub fn nullity(&self) -> usize {
        self.len() - self.rank()
    }

    pub fn closure(&self, s: ElemSet) -> ElemSet {
        let span = self.span_of(s);
        (0..self.len()).filter(|&i| s.contains(i) || span.contains(&self.columns[i])).collect()
    }

    pub fn is_flat(&self, s: ElemSet) -> bool {
        let span = self.span_of(s);
        self.ground().difference(s).iter().all(|i| !span.contains(&self.columns[i]))
    }

    pub fn is_hyperplane(&self, s: ElemSet) -> bool {
        let rank = self.rank();
        rank > 0 && self.rank_set(s) + 1 == rank && self.is_flat(s)
    }

    /// Cocircuits are exactly the complements of hyperplanes.
    pub fn is_cocircuit(&self, s: ElemSet) -> bool {
        !s.is_empty() && s.is_subset_of(self.ground()) && self.is_hyperplane(self.ground().difference(s))
    }

    pub fn is_circuit(&self, s: ElemSet) -> bool {
        !s.is_empty()
            && self.rank_set(s) + 1 == s.len()
            && s.iter().all(|i| self.rank_set(s.without(i)) == s.len() - 1)
    }

    /// The (unique up to scale) dependency supported on a circuit, scaled so
    /// that its first coefficient is one. `None` if `s` is not a circuit.
    pub fn circuit_vector(&self, s: ElemSet) -> Option<Vec<F::Elem>> {
        let idx: Vec<usize> = s.iter().collect();
        let sub = ExactMatrix::from_rows(
            self.field.clone(),
            idx.len(),
            (0..self.dim).map(|r| idx.iter().map(|&c| self.columns[c][r].clone()).collect()).collect(),
        )
        .ok()?;
        let kernel = sub.nullspace_basis();
        if kernel.len() != 1 || kernel[0].iter().any(|a| self.field.is_zero(a)) {
            return None;
        }
        let inv = self.field.inv(&kernel[0][0])?;
        let mut out = vec![self.field.zero(); self.len()];
        for (pos, &c) in idx.iter().enumerate() {
            out[c] = self.field.mul(&kernel[0][pos], &inv);
        }
        Some(out)
    }

    /// A basis of the space of linear dependencies among the columns.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        self.as_matrix().nullspace_basis()
    }

    pub fn as_matrix(&self) -> ExactMatrix<F> {
        let rows = (0..self.dim).map(|r| self.columns.iter().map(|c| c[r].clone()).collect()).collect();
        ExactMatrix::from_rows(self.field.clone(), self.len(), rows).expect("consistent shape")
    }

    /// The dual matroid, represented by a kernel basis of this one.
    pub fn dual(&self) -> LinearMatroid<F> {
        let kernel = self.kernel_basis();
        let d = kernel.len();
        let columns = (0..self.len()).map(|c| kernel.iter().map(|row| row[c].clone()).collect()).collect();
        LinearMatroid { field: self.field.clone(), dim: d, columns }
    }

    /// All circuits with at most `max_size` elements by walking independent
    /// sets, sorted by size then lexicographically.
    pub fn circuits_primal(&self, max_size: usize) -> Vec<ElemSet> {
        let mut out = Vec::new();
        let mut span = SpanBasis::new(self.field.clone(), self.dim);
        let mut chosen: Vec<usize> = Vec::new();
        self.primal_rec(0, max_size, &mut span, &mut chosen, &mut out);
        out.sort_by(ElemSet::size_lex_cmp);
        out
    }

    fn primal_rec(
        &self,
        start: usize,
        max_size: usize,
        span: &mut SpanBasis<F>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<ElemSet>,
    ) {
        for e in start..self.len() {
            let red = span.reduce(&self.columns[e]);
            if red.is_dependent(&self.field) {
                // chosen + e is dependent; it is itself a circuit iff every
                // chosen element takes part in the dependency.
                if chosen.len() < max_size && red.coefficients.iter().all(|a| !self.field.is_zero(a)) {
                    out.push(chosen.iter().copied().chain([e]).collect());
                }
            } else if chosen.len() + 2 <= max_size {
                span.push_reduction(red);
                chosen.push(e);
                self.primal_rec(e + 1, max_size, span, chosen, out);
                chosen.pop();
                span.pop();
            }
        }
    }

    /// All flats of rank exactly `target`, by walking covers upward from the
    /// closure of the empty set.
    pub fn flats_of_rank(&self, target: usize) -> Vec<ElemSet> {
        let ground = self.ground();
        let mut level: Vec<ElemSet> = vec![self.closure(ElemSet::EMPTY)];
        for _ in 0..target {
            let mut next: HashSet<ElemSet> = HashSet::new();
            for &flat in &level {
                let span = self.span_of(flat);
                let mut covered = flat;
                for e in ground.difference(flat).iter() {
                    if covered.contains(e) {
                        continue;
                    }
                    let mut grown = span.clone();
                    grown.insert(&self.columns[e]);
                    let cover: ElemSet = ground
                        .difference(flat)
                        .iter()
                        .filter(|&i| i == e || grown.contains(&self.columns[i]))
                        .collect::<ElemSet>()
                        .union(flat);
                    covered = covered.union(cover);
                    next.insert(cover);
                }
            }
            level = next.into_iter().collect();
            level.sort_by(ElemSet::size_lex_cmp);
        }
        level
    }

    pub fn hyperplanes(&self) -> Vec<ElemSet> {
        match self.rank() {
            0 => Vec::new(),
            r => self.flats_of_rank(r - 1),
        }
    }

    /// Complements of hyperplanes, sorted by size then lexicographically.
    pub fn cocircuits(&self) -> Vec<ElemSet> {
        let ground = self.ground();
        let mut out: Vec<ElemSet> = self.hyperplanes().into_iter().map(|h| ground.difference(h)).collect();
        out.sort_by(ElemSet::size_lex_cmp);
        out
    }

    /// Circuits as complements of the hyperplanes of the dual.
    pub fn circuits_dual(&self, max_size: usize) -> Vec<ElemSet> {
        let mut out: Vec<ElemSet> =
            self.dual().cocircuits().into_iter().filter(|c| c.len() <= max_size).collect();
        out.sort_by(ElemSet::size_lex_cmp);
        out
    }

    /// Upper bounds on the number of sets each route visits.
    pub fn route_costs(&self, max_size: usize) -> (f64, f64) {
        let m = self.len();
        let r = self.rank();
        let primal = binomial_prefix(m, r.min(max_size.saturating_sub(1)));
        let dual = binomial_prefix(m, (m - r).saturating_sub(1));
        (primal, dual)
    }

    /// The cheaper route by [`Self::route_costs`].
    pub fn preferred_route(&self, max_size: usize) -> (Route, f64) {
        let (p, d) = self.route_costs(max_size);
        if p <= d {
            (Route::Primal, p)
        } else {
            (Route::Dual, d)
        }
    }

    /// All circuits up to `max_size`, by whichever route is cheaper. Refuses
    /// when that route's visit bound exceeds `budget`.
    pub fn circuits(&self, max_size: usize, budget: f64) -> Result<Vec<ElemSet>> {
        let (route, cost) = self.preferred_route(max_size);
        if cost > budget {
            return Err(Error::GuardExceeded {
                what: "circuit enumeration work",
                size: cost.min(usize::MAX as f64) as usize,
                guard: budget as usize,
            });
        }
        Ok(match route {
            Route::Primal => self.circuits_primal(max_size),
            Route::Dual => self.circuits_dual(max_size),
        })
    }
}

/// `sum_{i <= top} C(m, i)` as a float.
fn binomial_prefix(m: usize, top: usize) -> f64 {
    let mut term = 1.0f64;
    let mut total = 1.0f64;
    for i in 1..=top.min(m) {
        term = term * (m + 1 - i) as f64 / i as f64;
        total += term;
    }
    total
}
