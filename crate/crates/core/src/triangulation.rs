//! Triangulability and strong triangulability of the circuit space.

use std::collections::BTreeMap;

use crate::chain::{face_boundary, ChainVector};
use crate::complex::HypercliqueComplex;
use crate::dirac::DPerfectCertificate;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::face::{incidence, Face};
use crate::field::Field;
use crate::matrix::ExactMatrix;
use crate::matroid::SimplicialMatroid;

pub use crate::gen::{gen_non_strong, gen_projective_plane};

/// Largest solution space walked point by point over a small prime field.
pub const DEFAULT_POINT_GUARD: u64 = 1 << 20;

/// Whether the small-circuit vectors span the circuit space.
pub fn is_triangulable<F: Field>(m: &SimplicialMatroid<F>) -> bool {
    small_circuit_matrix(m, m.complex().upper_faces()).rank() == m.linear().nullity()
}

/// Columns `∂X` for the given apexes, rows indexed by the ground set.
fn small_circuit_matrix<F: Field>(m: &SimplicialMatroid<F>, apexes: &[Face]) -> ExactMatrix<F> {
    let f = m.field();
    let mut a = ExactMatrix::zeros(f.clone(), m.ground().len(), apexes.len());
    for (j, &x) in apexes.iter().enumerate() {
        for (sub, sign) in x.boundary_terms() {
            let i = m.index_of(sub).expect("k-subsets of an upper face are generators");
            a.set(i, j, f.from_i64(sign));
        }
    }
    a
}

/// Union of the vertex sets of `faces`.
fn vertex_union<'a>(faces: impl IntoIterator<Item = &'a Face>) -> u64 {
    faces.into_iter().fold(0, |acc, f| acc | f.mask())
}

/// `target = Σ a_j ∂X_j` with every `a_j` nonzero and matching vertex unions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationCertificate<F: Field> {
    pub target: ChainVector<F>,
    pub terms: Vec<(F::Elem, Face)>,
    pub residual: ChainVector<F>,
}

impl<F: Field> TriangulationCertificate<F> {
    /// Checks the identity by direct arithmetic, against `c`.
    pub fn verify(&self, c: &HypercliqueComplex) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCertificate(msg));
        let f = self.target.field();
        if self.target.is_zero() {
            return bad("target is zero".into());
        }
        if self.target.support().iter().any(|g| !c.is_generator(*g)) {
            return bad("target is not supported on the generators".into());
        }
        if !self.target.boundary().is_zero() {
            return Err(Error::NotACycle);
        }
        if !self.residual.is_zero() {
            return bad("nonzero residual".into());
        }
        let mut sum = ChainVector::zero(f.clone());
        for (a, x) in &self.terms {
            if f.is_zero(a) {
                return bad(format!("zero coefficient on {x}"));
            }
            if x.len() != c.k() + 1 || !c.is_face(*x) {
                return bad(format!("{x} is not a ({})-face", c.k() + 1));
            }
            sum.add_scaled(a, &face_boundary(f, *x));
        }
        sum.add_scaled(&f.from_i64(-1), &self.target);
        if !sum.is_zero() {
            return bad("terms do not sum to the target".into());
        }
        let lhs = vertex_union(&self.target.support());
        let rhs = vertex_union(self.terms.iter().map(|(_, x)| x));
        if lhs != rhs {
            return bad("vertex unions differ".into());
        }
        Ok(())
    }
}

/// Runs the elimination loop driven by a D-perfect sequence.
pub struct StrongDecomposer<'a, F: Field> {
    m: &'a SimplicialMatroid<F>,
    cert: &'a DPerfectCertificate,
}

impl<'a, F: Field> StrongDecomposer<'a, F> {
    /// Verifies `cert` once for repeated use.
    pub fn new(m: &'a SimplicialMatroid<F>, cert: &'a DPerfectCertificate) -> Result<Self> {
        cert.verify(m.complex(), m.field())?;
        Ok(StrongDecomposer { m, cert })
    }

    pub fn decompose(&self, d: &ChainVector<F>) -> Result<TriangulationCertificate<F>> {
        let m = self.m;
        let f = m.field();
        if d.is_zero() {
            return Err(Error::InvalidCertificate("cannot decompose the zero vector".into()));
        }
        if !m.is_cycle(d)? {
            return Err(Error::NotACycle);
        }
        let seq = &self.cert.sequence;
        let mut terms: BTreeMap<Face, F::Elem> = BTreeMap::new();
        let mut cur = d.clone();
        let mut cleared = 0;
        while !cur.is_zero() {
            let support = cur.support();
            let i = (0..seq.len())
                .find(|&i| support.iter().any(|g| seq[i].is_subset_of(*g)))
                .expect("a nonzero cycle meets the peeled sets");
            assert!(i >= cleared, "an earlier face reappeared in the support");
            let hit: Vec<Face> = support.iter().copied().filter(|g| self.cert.peeled[i].contains(g)).collect();
            assert!(hit.len() >= 2, "a cycle cannot meet a cocircuit once");
            let f1 = hit[0];
            let mut next = cur.clone();
            for &fs in &hit[1..] {
                let x = f1.union(fs);
                assert!(m.complex().is_face(x), "{x} is a face since {} is simplicial", seq[i]);
                let pivot = f.from_i64(incidence(fs, x));
                let b = f.neg(&f.div(&cur.get(fs), &pivot).expect("incidence is a unit"));
                next.add_scaled(&b, &face_boundary(f, x));
                let entry = terms.entry(x).or_insert_with(|| f.zero());
                *entry = f.sub(entry, &b);
            }
            assert!(next.support().iter().all(|g| !self.cert.peeled[i].contains(g)));
            cur = next;
            cleared = i + 1;
            for v in &seq[..cleared] {
                assert!(cur.support().iter().all(|g| !v.is_subset_of(*g)));
            }
        }
        let cert = TriangulationCertificate {
            target: d.clone(),
            terms: terms.into_iter().filter(|(_, a)| !f.is_zero(a)).map(|(x, a)| (a, x)).collect(),
            residual: cur,
        };
        cert.verify(m.complex())?;
        Ok(cert)
    }
}

/// Decomposes a nonzero cycle into small circuits along a D-perfect sequence.
pub fn strong_decompose<F: Field>(
    m: &SimplicialMatroid<F>,
    d: &ChainVector<F>,
    cert: &DPerfectCertificate,
) -> Result<TriangulationCertificate<F>> {
    StrongDecomposer::new(m, cert)?.decompose(d)
}

/// Whether `c` has a small-circuit decomposition with nonzero coefficients
/// whose apexes cover exactly the vertices of `c`. `None` when the solution
/// space over a small field is larger than `point_guard`.
pub fn circuit_has_strong_decomposition<F: Field>(
    m: &SimplicialMatroid<F>,
    c: ElemSet,
    point_guard: u64,
) -> Result<Option<bool>> {
    let target = m.circuit_vector(c).ok_or_else(|| Error::InvalidCertificate("not a circuit".into()))?;
    let faces = m.faces_of(c);
    let verts = vertex_union(&faces);
    let apexes: Vec<Face> =
        m.complex().upper_faces().iter().copied().filter(|x| x.mask() & !verts == 0).collect();
    let a = small_circuit_matrix(m, &apexes);
    let Some(x0) = a.solve(&target.to_dense(m.ground())?)? else {
        return Ok(Some(false));
    };
    let kernel = a.nullspace_basis();
    let f = m.field();
    // Coordinates that do not vanish on the whole solution space.
    let live: Vec<usize> = (0..apexes.len())
        .filter(|&j| !f.is_zero(&x0[j]) || kernel.iter().any(|v| !f.is_zero(&v[j])))
        .collect();
    if vertex_union(live.iter().map(|&j| &apexes[j])) != verts {
        return Ok(Some(false));
    }
    let large = match f.order() {
        None => true,
        Some(q) => q > live.len() as u64,
    };
    if large {
        // A field with more elements than hyperplanes to avoid has a point
        // off all of them.
        return Ok(Some(true));
    }
    let q = f.order().expect("finite");
    match q.checked_pow(kernel.len() as u32) {
        Some(p) if p <= point_guard => {}
        _ => return Ok(None),
    }
    let mut digits = vec![0u64; kernel.len()];
    loop {
        let mut x = x0.clone();
        for (v, &dgt) in kernel.iter().zip(&digits) {
            let s = f.nth(dgt);
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi = f.add(xi, &f.mul(&s, vi));
            }
        }
        let used = (0..apexes.len()).filter(|&j| !f.is_zero(&x[j])).map(|j| &apexes[j]);
        if vertex_union(used) == verts {
            return Ok(Some(true));
        }
        let Some(pos) = digits.iter().position(|&d| d + 1 < q) else {
            return Ok(Some(false));
        };
        digits[pos] += 1;
        for d in &mut digits[..pos] {
            *d = 0;
        }
    }
}

/// Decides strong triangulability by checking every circuit against the full
/// family of small circuits, which suffices since adding generators never
/// destroys a decomposition. `budget` bounds circuit enumeration.
pub fn is_strongly_triangulable_brute<F: Field>(m: &SimplicialMatroid<F>, budget: f64) -> Result<bool> {
    if !is_triangulable(m) {
        return Ok(false);
    }
    for c in m.circuits(budget)? {
        match circuit_has_strong_decomposition(m, c, DEFAULT_POINT_GUARD)? {
            Some(true) => {}
            Some(false) => return Ok(false),
            None => {
                return Err(Error::GuardExceeded {
                    what: "solution space of a circuit decomposition",
                    size: c.len(),
                    guard: DEFAULT_POINT_GUARD as usize,
                })
            }
        }
    }
    Ok(true)
}
