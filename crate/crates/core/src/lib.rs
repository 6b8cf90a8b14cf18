//! Simplicial matroids of k-hyperclique complexes over exact fields.
//!
//! The linear algebra is generic over a [`Field`] context; the aliases below
//! fix the two scalar domains used in practice.

pub mod chain;
pub mod complex;
pub mod dirac;
pub mod elemset;
pub mod error;
pub mod face;
pub mod field;
pub mod gen;
pub mod linear;
pub mod matrix;
pub mod matroid;
pub mod triangulation;

pub use chain::{boundary, coboundary, face_boundary, BoundaryMatrix, ChainVector};
pub use complex::HypercliqueComplex;
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use face::{all_faces, incidence, Face};
pub use dirac::{
    check_basic_linear_sequence, check_chordal_graph, check_superdense, check_supersolvable, find_dperfect_sequence,
    is_dense_hyperplane, is_simplicial_face, DPerfectCertificate, SearchStrategy, SuperdenseCertificate,
};
pub use field::{Field, FieldSpec, PrimeField, PrimeModulus, RationalField, Rationals};
pub use linear::{LinearMatroid, Route};
pub use matrix::{ExactMatrix, SpanBasis};
pub use gen::{gen_dperfect_nine, gen_non_strong, gen_projective_plane};
pub use matroid::{verify_full_duality, SimplicialMatroid, SmallCircuit};
pub use triangulation::{
    is_strongly_triangulable_brute, is_triangulable, strong_decompose, StrongDecomposer, TriangulationCertificate,
};

/// A prime field `GF(p)`.
pub type Gf = PrimeField;
pub type GfMatrix = ExactMatrix<PrimeField>;
pub type RationalMatrix = ExactMatrix<Rationals>;
pub type GfMatroid = SimplicialMatroid<PrimeField>;
pub type RationalMatroid = SimplicialMatroid<Rationals>;
