//! k-hyperclique complexes: the largest simplicial complex on `[n]` with a
//! prescribed k-skeleton.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::face::{all_faces, Face, MAX_VERTICES};

/// The complex generated by a family of `k`-subsets of `[n]`.
///
/// A set of size below `k` is always a face; a larger set is a face exactly
/// when all of its `k`-subsets are generators. The `(k+1)`-skeleton and the
/// facets are computed on first use and cached.
#[derive(Clone, Debug)]
pub struct HypercliqueComplex {
    n: usize,
    k: usize,
    generators: Vec<Face>,
    lookup: HashSet<u64>,
    upper: OnceLock<Vec<Face>>,
    facets: OnceLock<Vec<Face>>,
}

impl PartialEq for HypercliqueComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.generators == other.generators
    }
}

impl Eq for HypercliqueComplex {}

impl HypercliqueComplex {
    /// Validates and stores the k-skeleton. Generators are kept in lexicographic order.
    pub fn new(n: usize, k: usize, generators: impl IntoIterator<Item = Face>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GroundTooLarge(n));
        }
        if k < 2 || k > n {
            return Err(Error::BadDimension { n, k });
        }
        let mut faces: Vec<Face> = Vec::new();
        let mut lookup = HashSet::new();
        for f in generators {
            if f.max_vertex() > n {
                let vertex = f.max_vertex();
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if f.len() != k {
                return Err(Error::WrongCardinality { face: f, expected: k, got: f.len() });
            }
            if !lookup.insert(f.mask()) {
                return Err(Error::DuplicateFace(f));
            }
            faces.push(f);
        }
        faces.sort();
        Ok(HypercliqueComplex {
            n,
            k,
            generators: faces,
            lookup,
            upper: OnceLock::new(),
            facets: OnceLock::new(),
        })
    }

    /// The full complex `2^[n]`.
    pub fn full(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, all_faces(n, k))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The k-skeleton `S_k`, lexicographically sorted.
    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    pub fn is_generator(&self, f: Face) -> bool {
        self.lookup.contains(&f.mask())
    }

    pub fn is_face(&self, f: Face) -> bool {
        if f.max_vertex() > self.n {
            return false;
        }
        if f.len() < self.k {
            return true;
        }
        if f.len() == self.k {
            return self.is_generator(f);
        }
        f.subsets(self.k).into_iter().all(|s| self.is_generator(s))
    }

    /// All faces of size `d`.
    pub fn skeleton(&self, d: usize) -> Vec<Face> {
        if d == 0 || d > self.n {
            return Vec::new();
        }
        if d < self.k {
            return all_faces(self.n, d);
        }
        if d == self.k {
            return self.generators.clone();
        }
        if d == self.k + 1 {
            return self.upper_faces().to_vec();
        }
        let mut layer = self.upper_faces().to_vec();
        for _ in self.k + 1..d {
            layer = self.extend_layer(&layer);
        }
        layer
    }

    /// The `(k+1)`-faces, i.e. the apexes of the small circuits.
    pub fn upper_faces(&self) -> &[Face] {
        self.upper.get_or_init(|| self.extend_layer(&self.generators))
    }

    /// Faces one larger than those in `layer`, obtained by appending a vertex
    /// above the current maximum. Lexicographic order is preserved.
    fn extend_layer(&self, layer: &[Face]) -> Vec<Face> {
        let mut out = Vec::new();
        for &f in layer {
            for v in f.max_vertex() + 1..=self.n {
                if self.extends(f, v) {
                    out.push(Face::from_mask(f.mask() | 1 << (v - 1)).expect("nonempty"));
                }
            }
        }
        out.sort();
        out
    }

    /// Whether `f + v` is a face, given that `f` is one.
    fn extends(&self, f: Face, v: usize) -> bool {
        let bit = 1u64 << (v - 1);
        if f.len() + 1 < self.k {
            return true;
        }
        f.subsets(self.k - 1).into_iter().all(|t| self.lookup.contains(&(t.mask() | bit)))
    }

    /// Inclusion-maximal faces, lexicographically sorted.
    pub fn facets(&self) -> &[Face] {
        self.facets.get_or_init(|| self.compute_facets())
    }

    fn compute_facets(&self) -> Vec<Face> {
        let mut out = Vec::new();
        // (k-1)-sets lying in no generator are maximal; smaller sets never are.
        let covered: HashSet<u64> = self
            .generators
            .iter()
            .flat_map(|g| g.subsets(self.k - 1))
            .map(Face::mask)
            .collect();
        out.extend(all_faces(self.n, self.k - 1).into_iter().filter(|f| !covered.contains(&f.mask())));

        // Every face of size >= k is reached exactly once by starting from its
        // smallest k vertices and appending the rest in increasing order.
        let mut stack: Vec<(Face, u64)> = self
            .generators
            .iter()
            .map(|&g| (g, self.candidates(g)))
            .collect();
        while let Some((f, cand)) = stack.pop() {
            if cand == 0 {
                out.push(f);
                continue;
            }
            let above = match f.max_vertex() {
                64 => 0,
                mv => !((1u64 << mv) - 1),
            };
            let mut up = cand & above;
            while up != 0 {
                let bit = up & up.wrapping_neg();
                up &= up - 1;
                let g = Face::from_mask(f.mask() | bit).expect("nonempty");
                let next = self.refine_candidates(f, bit, cand & !bit);
                stack.push((g, next));
            }
        }
        out.sort();
        out
    }

    /// Vertices `u` outside `f` with `f + u` a face.
    fn candidates(&self, f: Face) -> u64 {
        let mut cand = 0u64;
        for u in 1..=self.n {
            if !f.contains_vertex(u) && self.extends(f, u) {
                cand |= 1 << (u - 1);
            }
        }
        cand
    }

    /// Candidates of `f + bit`, given the candidates of `f` other than `bit`.
    fn refine_candidates(&self, f: Face, bit: u64, cand: u64) -> u64 {
        let mut out = 0u64;
        let mut rest = cand;
        let small = if self.k >= 2 { f.subsets(self.k - 2) } else { Vec::new() };
        while rest != 0 {
            let u = rest & rest.wrapping_neg();
            rest &= rest - 1;
            let ok = if self.k == 2 {
                self.lookup.contains(&(u | bit))
            } else {
                small.iter().all(|t| self.lookup.contains(&(t.mask() | u | bit)))
            };
            if ok {
                out |= u;
            }
        }
        out
    }

    /// Facets strictly containing `f`.
    pub fn facets_containing(&self, f: Face) -> Vec<Face> {
        self.facets().iter().copied().filter(|&x| f.is_proper_subset_of(x)).collect()
    }

    /// Generators containing `v`: the support of the coboundary of `v`.
    pub fn star(&self, v: Face) -> Vec<Face> {
        self.generators.iter().copied().filter(|g| v.is_subset_of(*g)).collect()
    }

    /// `self \\ v`: the complex generated by the generators not containing `v`.
    pub fn star_delete(&self, v: Face) -> HypercliqueComplex {
        self.restrict(|g| !v.is_subset_of(g))
    }

    /// The complex generated by the generators satisfying `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(Face) -> bool) -> HypercliqueComplex {
        let kept: Vec<Face> = self.generators.iter().copied().filter(|&g| keep(g)).collect();
        HypercliqueComplex::new(self.n, self.k, kept).expect("subfamily of a valid family")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face;
    use proptest::prelude::*;

    fn faces(list: &[&str]) -> Vec<Face> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn names(list: &[Face]) -> Vec<String> {
        list.iter().map(|f| f.to_string()).collect()
    }

    /// All faces by exhaustive subset enumeration.
    fn brute_faces(c: &HypercliqueComplex) -> Vec<Face> {
        let n = c.n();
        (1u64..1 << n)
            .map(|m| Face::from_mask(m).unwrap())
            .filter(|&f| f.len() < c.k() || f.subsets(c.k()).iter().all(|s| c.generators().contains(s)))
            .collect()
    }

    fn brute_facets(c: &HypercliqueComplex) -> Vec<Face> {
        let all = brute_faces(c);
        let mut out: Vec<Face> =
            all.iter().copied().filter(|f| !all.iter().any(|g| f.is_proper_subset_of(*g))).collect();
        out.sort();
        out
    }

    #[test]
    fn single_edge() {
        let c = HypercliqueComplex::new(4, 2, [face!(1, 2)]).unwrap();
        assert_eq!(names(c.facets()), ["12", "3", "4"]);
        assert!(c.upper_faces().is_empty());
        assert_eq!(c.skeleton(1).len(), 4);
    }

    #[test]
    fn full_complex_is_simplex() {
        let c = HypercliqueComplex::full(5, 3).unwrap();
        assert_eq!(names(c.facets()), ["12345"]);
        assert_eq!(c.skeleton(4).len(), 5);
        assert_eq!(c.skeleton(5).len(), 1);
        assert!((1u64..32).all(|m| c.is_face(Face::from_mask(m).unwrap())));
    }

    #[test]
    fn intersecting_family_facets() {
        // Common vertex 1; the members are facets, plus uncovered (k-1)-sets.
        let c = HypercliqueComplex::new(5, 3, faces(&["123", "145"])).unwrap();
        let expected: Vec<Face> = {
            let mut v = faces(&["123", "145"]);
            let covered = faces(&["12", "13", "23", "14", "15", "45"]);
            v.extend(all_faces(5, 2).into_iter().filter(|f| !covered.contains(f)));
            v.sort();
            v
        };
        assert_eq!(c.facets(), expected.as_slice());
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            HypercliqueComplex::new(4, 2, [face!(1, 2, 3)]),
            Err(Error::WrongCardinality { .. })
        ));
        assert!(matches!(
            HypercliqueComplex::new(4, 2, [face!(1, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 4 })
        ));
        assert!(matches!(HypercliqueComplex::new(4, 1, []), Err(Error::BadDimension { .. })));
        assert!(matches!(HypercliqueComplex::new(3, 4, []), Err(Error::BadDimension { .. })));
        assert!(matches!(
            HypercliqueComplex::new(4, 2, [face!(1, 2), face!(2, 1)]),
            Err(Error::DuplicateFace(_))
        ));
    }

    #[test]
    fn star_delete_examples() {
        let full = HypercliqueComplex::full(3, 2).unwrap();
        assert_eq!(names(full.star_delete(face!(1)).generators()), ["23"]);
        let c = HypercliqueComplex::new(5, 2, faces(&["12", "23"])).unwrap();
        assert_eq!(c.star_delete(face!(4, 5)), c);
    }

    fn instance() -> impl Strategy<Value = HypercliqueComplex> {
        (4usize..=7, 2usize..=4).prop_flat_map(|(n, k)| {
            let k = k.min(n - 1);
            let all = all_faces(n, k);
            let len = all.len();
            prop::collection::vec(any::<bool>(), len).prop_map(move |keep| {
                let gens = all.iter().zip(&keep).filter(|(_, &b)| b).map(|(f, _)| *f);
                HypercliqueComplex::new(n, k, gens.collect::<Vec<_>>()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn faces_and_facets_match_brute_force(c in instance()) {
            let brute = brute_faces(&c);
            for d in 1..=c.n() {
                let mut expected: Vec<Face> = brute.iter().copied().filter(|f| f.len() == d).collect();
                expected.sort();
                prop_assert_eq!(c.skeleton(d), expected);
            }
            prop_assert_eq!(c.facets().to_vec(), brute_facets(&c));
            let cover = c.facets().iter().fold(0u64, |m, f| m | f.mask());
            prop_assert_eq!(cover, (1u64 << c.n()) - 1);
        }

        #[test]
        fn hereditary_and_maximal(c in instance()) {
            let brute = brute_faces(&c);
            for f in &brute {
                for d in 1..f.len() {
                    for s in f.subsets(d) {
                        prop_assert!(c.is_face(s));
                    }
                }
            }
            // Any non-face above k has a missing k-subset, so it cannot be added hereditarily.
            for m in 1u64..1 << c.n() {
                let f = Face::from_mask(m).unwrap();
                if f.len() > c.k() && !c.is_face(f) {
                    prop_assert!(f.subsets(c.k()).iter().any(|s| !c.is_generator(*s)));
                }
            }
        }

        #[test]
        fn star_delete_commutes(c in instance(), a in 1u64..128, b in 1u64..128) {
            let km1 = c.k() - 1;
            let pick = |seed: u64| {
                let all = all_faces(c.n(), km1);
                all[(seed as usize) % all.len()]
            };
            let (v, w) = (pick(a), pick(b));
            let left = c.star_delete(v).star_delete(w);
            let right = c.star_delete(w).star_delete(v);
            prop_assert_eq!(&left, &right);
            let removed: Vec<Face> = c.generators().iter().copied()
                .filter(|g| !left.generators().contains(g)).collect();
            prop_assert!(removed.iter().all(|g| v.is_subset_of(*g) || w.is_subset_of(*g)));
        }
    }
}
