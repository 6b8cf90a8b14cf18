//! Named instances.

use std::collections::BTreeSet;

use crate::complex::HypercliqueComplex;
use crate::error::{Error, Result};
use crate::face::Face;

fn faces(list: &[&str]) -> Vec<Face> {
    list.iter().map(|s| s.parse().expect("literal face")).collect()
}

/// The ten triangles of the six-vertex real projective plane, `n = 6`, `k = 3`.
pub fn gen_projective_plane() -> HypercliqueComplex {
    let s = faces(&["124", "126", "134", "135", "156", "235", "236", "245", "346", "456"]);
    HypercliqueComplex::new(6, 3, s).expect("valid literal instance")
}

/// A D-perfect 3-hyperclique complex on nine vertices with three tetrahedra.
pub fn gen_dperfect_nine() -> HypercliqueComplex {
    let s = faces(&[
        "123", "124", "125", "145", "245", "136", "137", "167", "367", "238", "239", "289", "389",
    ]);
    HypercliqueComplex::new(9, 3, s).expect("valid literal instance")
}

/// `[a, b]` as a face.
fn interval(a: usize, b: usize) -> Face {
    Face::new(&(a..=b).collect::<Vec<_>>()).expect("interval within range")
}

/// The complex built from two `(k+1)`-simplices on `1..k+1` and `2..k+2`,
/// coned over `n` facet by facet, with the shared `k`-face `2..k+1` removed.
/// Over GF(2) its matroid is triangulable but not strongly triangulable.
/// Requires `2 <= k <= n - 3`.
pub fn gen_non_strong(n: usize, k: usize) -> Result<HypercliqueComplex> {
    if k < 2 || k + 3 > n {
        return Err(Error::BadDimension { n, k });
    }
    let a = interval(1, k + 1);
    let b = interval(2, k + 2);
    let apex = Face::new(&[n])?;
    let mut s: BTreeSet<Face> = BTreeSet::new();
    s.extend(a.subsets(k));
    s.extend(b.subsets(k));
    for side in [a, b] {
        for g in side.subsets(k) {
            s.extend(g.union(apex).subsets(k));
        }
    }
    s.remove(&interval(2, k + 1));
    HypercliqueComplex::new(n, k, s)
}

/// The set `C` of the construction: both simplex boundaries minus the shared face.
pub fn non_strong_circuit(k: usize) -> Vec<Face> {
    let shared = interval(2, k + 1);
    let mut c: BTreeSet<Face> = interval(1, k + 1).subsets(k).into_iter().collect();
    c.extend(interval(2, k + 2).subsets(k));
    c.remove(&shared);
    c.into_iter().collect()
}
