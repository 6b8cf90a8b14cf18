//! Simplicial faces, D-perfect sequences, dense flats and supersolvability.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::chain::{coboundary, ChainVector};
use crate::complex::HypercliqueComplex;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::field::Field;
use crate::matrix::SpanBasis;
use crate::matroid::SimplicialMatroid;

/// Whether exactly one facet of `c` strictly contains the `(k-1)`-face `v`.
pub fn is_simplicial_face(c: &HypercliqueComplex, v: Face) -> bool {
    let star = c.star(v);
    if star.is_empty() {
        return false;
    }
    // Every face strictly above v lies inside the union of its star.
    let x = star.iter().fold(v, |acc, g| acc.union(*g));
    c.is_face(x)
}

/// The definition taken literally: count the facets strictly containing `v`.
pub fn is_simplicial_face_by_facets(c: &HypercliqueComplex, v: Face) -> bool {
    c.facets_containing(v).len() == 1
}

/// `(k-1)`-faces lying in some generator, lexicographic.
fn star_centres(c: &HypercliqueComplex) -> Vec<Face> {
    let set: BTreeSet<Face> = c.generators().iter().flat_map(|g| g.subsets(c.k() - 1)).collect();
    set.into_iter().collect()
}

/// Simplicial `(k-1)`-faces with a nonempty star, lexicographic.
pub fn simplicial_faces(c: &HypercliqueComplex) -> Vec<Face> {
    star_centres(c).into_iter().filter(|&v| is_simplicial_face(c, v)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SearchStrategy {
    /// Always take the lexicographically first eligible face; incomplete.
    Greedy,
    /// Exhaustive search with memoized dead ends.
    #[default]
    Backtracking,
}

impl FromStr for SearchStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" => Ok(SearchStrategy::Greedy),
            "backtrack" | "backtracking" => Ok(SearchStrategy::Backtracking),
            _ => Err(Error::Unsupported(format!("unknown strategy {s:?}"))),
        }
    }
}

impl fmt::Display for SearchStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchStrategy::Greedy => "greedy",
            SearchStrategy::Backtracking => "backtrack",
        })
    }
}

/// A D-perfect sequence together with the sets it peels off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPerfectCertificate {
    pub sequence: Vec<Face>,
    pub peeled: Vec<Vec<Face>>,
}

impl DPerfectCertificate {
    /// Re-checks the certificate against `c` from scratch, rebuilding each
    /// residual complex and its matroid.
    pub fn verify<F: Field>(&self, c: &HypercliqueComplex, field: &F) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCertificate(msg));
        if self.sequence.len() != self.peeled.len() {
            return bad("sequence and peeled sets differ in length".into());
        }
        let start = SimplicialMatroid::new(c.clone(), field.clone())?;
        if self.sequence.len() != start.rank() {
            return bad(format!("length {} but rank {}", self.sequence.len(), start.rank()));
        }
        let mut current = c.clone();
        let mut rank = start.rank();
        let mut seen: HashSet<Face> = HashSet::new();
        for (j, (&v, peeled)) in self.sequence.iter().zip(&self.peeled).enumerate() {
            if v.len() + 1 != c.k() {
                return bad(format!("step {}: {v} has the wrong size", j + 1));
            }
            if !is_simplicial_face_by_facets(&current, v) {
                return bad(format!("step {}: {v} is not simplicial", j + 1));
            }
            let star = current.star(v);
            if star != *peeled {
                return bad(format!("step {}: peeled set is not the star of {v}", j + 1));
            }
            let m = SimplicialMatroid::new(current.clone(), field.clone())?;
            if !m.is_cocircuit(&star)? {
                return bad(format!("step {}: star of {v} is not a cocircuit", j + 1));
            }
            if !star.iter().all(|f| seen.insert(*f)) {
                return bad(format!("step {}: peeled sets overlap", j + 1));
            }
            current = current.star_delete(v);
            let next = SimplicialMatroid::new(current.clone(), field.clone())?.rank();
            if next + 1 != rank {
                return bad(format!("step {}: rank did not drop by one", j + 1));
            }
            rank = next;
        }
        if !current.generators().is_empty() || seen.len() != c.generators().len() {
            return bad("peeled sets do not cover the generators".into());
        }
        Ok(())
    }
}

/// Checks the basic-linear condition: each new coboundary support is a
/// cocircuit of the current restriction, and the sequence has length equal to the rank.
pub fn check_basic_linear_sequence<F: Field>(m: &SimplicialMatroid<F>, seq: &[Face]) -> bool {
    if seq.len() != m.rank() {
        return false;
    }
    let mut alive = m.ground_set();
    for &v in seq {
        if v.len() + 1 != m.complex().k() {
            return false;
        }
        let peel: ElemSet = alive.iter().filter(|&i| v.is_subset_of(m.ground()[i])).collect();
        if !m.is_cocircuit_within(alive, peel) {
            return false;
        }
        alive = alive.difference(peel);
    }
    true
}

/// The coboundaries `δV_j` of a basic linear sequence: a basis of the cocircuit space.
pub fn cocircuit_space_basis_from_sequence<F: Field>(
    m: &SimplicialMatroid<F>,
    seq: &[Face],
) -> Result<Vec<ChainVector<F>>> {
    if !check_basic_linear_sequence(m, seq) {
        return Err(Error::InvalidCertificate("not a basic linear sequence".into()));
    }
    let mut span = SpanBasis::new(m.field().clone(), m.ground().len());
    let mut out = Vec::with_capacity(seq.len());
    for &v in seq {
        let d = coboundary(m.complex(), v, m.field());
        let dense = d.to_dense(m.ground())?;
        assert!(m.boundary_matrix().matrix().in_row_space(&dense)?);
        assert!(span.insert(&dense), "coboundaries of a basic linear sequence are independent");
        out.push(d);
    }
    Ok(out)
}

struct Search<'a, F: Field> {
    m: &'a SimplicialMatroid<F>,
    dead: HashSet<ElemSet>,
    path: Vec<(Face, ElemSet)>,
}

impl<F: Field> Search<'_, F> {
    fn residual(&self, alive: ElemSet) -> HypercliqueComplex {
        let idx = |g: Face| self.m.index_of(g).expect("generator");
        self.m.complex().restrict(|g| alive.contains(idx(g)))
    }

    fn peel(&self, alive: ElemSet, v: Face) -> ElemSet {
        alive.iter().filter(|&i| v.is_subset_of(self.m.ground()[i])).collect()
    }

    /// Eligible moves at `alive`: simplicial faces whose star is a cocircuit.
    fn moves(&self, alive: ElemSet) -> Vec<(Face, ElemSet)> {
        let c = self.residual(alive);
        simplicial_faces(&c)
            .into_iter()
            .map(|v| (v, self.peel(alive, v)))
            .filter(|&(_, p)| self.m.is_cocircuit_within(alive, p))
            .collect()
    }

    fn backtrack(&mut self, alive: ElemSet) -> bool {
        if alive.is_empty() {
            return true;
        }
        if self.dead.contains(&alive) {
            return false;
        }
        for (v, p) in self.moves(alive) {
            self.path.push((v, p));
            if self.backtrack(alive.difference(p)) {
                return true;
            }
            self.path.pop();
        }
        self.dead.insert(alive);
        false
    }

    fn greedy(&mut self) -> bool {
        let mut alive = self.m.ground_set();
        while !alive.is_empty() {
            let Some(&(v, p)) = self.moves(alive).first() else {
                return false;
            };
            self.path.push((v, p));
            alive = alive.difference(p);
        }
        true
    }
}

/// Searches for a D-perfect sequence. `None` from backtracking means none
/// exists; from greedy it is inconclusive. Found certificates are verified.
pub fn find_dperfect_sequence<F: Field>(
    m: &SimplicialMatroid<F>,
    strategy: SearchStrategy,
) -> Result<Option<DPerfectCertificate>> {
    let mut s = Search { m, dead: HashSet::new(), path: Vec::new() };
    let found = match strategy {
        SearchStrategy::Greedy => s.greedy(),
        SearchStrategy::Backtracking => s.backtrack(m.ground_set()),
    };
    if !found {
        return Ok(None);
    }
    let cert = DPerfectCertificate {
        sequence: s.path.iter().map(|&(v, _)| v).collect(),
        peeled: s.path.iter().map(|&(_, p)| m.faces_of(p)).collect(),
    };
    cert.verify(m.complex(), m.field())?;
    Ok(Some(cert))
}

/// Chordality by repeated removal of a vertex whose neighbourhood is a clique.
/// `edges` are 2-faces on `[n]`.
pub fn check_chordal_graph(edges: &[Face], n: usize) -> bool {
    let mut adj = vec![0u64; n + 1];
    for e in edges {
        let mut it = e.vertices();
        let (a, b) = (it.next().expect("edge"), it.next().expect("edge"));
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut left: u64 = (1..=n).fold(0, |m, v| m | 1 << v);
    while left != 0 {
        let simplicial = (1..=n).filter(|&v| left >> v & 1 == 1).find(|&v| {
            let nb = adj[v] & left;
            (1..=n).filter(|&u| nb >> u & 1 == 1).all(|u| nb & !(adj[u] | 1 << u) == 0)
        });
        match simplicial {
            Some(v) => left &= !(1 << v),
            None => return false,
        }
    }
    true
}

/// Whether `h` is a hyperplane of the form `ground \ star(V)` with `V` simplicial.
pub fn is_dense_hyperplane<F: Field>(m: &SimplicialMatroid<F>, h: &[Face]) -> Result<bool> {
    let hs = m.set_of(h)?;
    if !m.is_hyperplane(hs) {
        return Ok(false);
    }
    Ok(dense_witness(m.complex(), m.ground_set().difference(hs), m.ground()).is_some())
}

/// A simplicial `V` whose star within `c` is exactly `rest`, if any.
fn dense_witness(c: &HypercliqueComplex, rest: ElemSet, ground: &[Face]) -> Option<Face> {
    let first = ground[rest.min()?];
    let want: Vec<Face> = rest.iter().map(|i| ground[i]).collect();
    first
        .subsets(c.k() - 1)
        .into_iter()
        .find(|&v| c.star(v) == want && is_simplicial_face(c, v))
}

/// A maximal chain of flats, each a dense hyperplane of the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperdenseCertificate {
    /// `X_0 = ∅ ⊊ X_1 ⊊ ... ⊊ X_r = S_k`.
    pub chain: Vec<Vec<Face>>,
    /// `witnesses[i]` is the simplicial face cutting `X_i` out of `X_{i+1}`.
    pub witnesses: Vec<Face>,
}

impl SuperdenseCertificate {
    pub fn verify<F: Field>(&self, c: &HypercliqueComplex, field: &F) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCertificate(msg));
        let r = self.witnesses.len();
        if self.chain.len() != r + 1 {
            return bad("chain length does not match witness count".into());
        }
        if !self.chain[0].is_empty() || self.chain[r] != c.generators() {
            return bad("chain must run from the empty set to the generators".into());
        }
        for i in 0..r {
            let upper = HypercliqueComplex::new(c.n(), c.k(), self.chain[i + 1].iter().copied())?;
            let m = SimplicialMatroid::new(upper.clone(), field.clone())?;
            let v = self.witnesses[i];
            if v.len() + 1 != c.k() || !is_simplicial_face_by_facets(&upper, v) {
                return bad(format!("witness {v} is not simplicial at step {i}"));
            }
            let cut: Vec<Face> = upper.generators().iter().copied().filter(|g| !v.is_subset_of(*g)).collect();
            if cut != self.chain[i] {
                return bad(format!("flat {i} is not the complement of the star of {v}"));
            }
            if !m.is_hyperplane(m.set_of(&cut)?) {
                return bad(format!("flat {i} is not a hyperplane of flat {}", i + 1));
            }
        }
        if SimplicialMatroid::new(c.clone(), field.clone())?.rank() != r {
            return bad("chain is not maximal".into());
        }
        Ok(())
    }
}

/// Searches for a superdense chain by peeling dense hyperplanes from the top,
/// regenerating the hyperclique complex of each intermediate flat.
pub fn check_superdense<F: Field>(m: &SimplicialMatroid<F>) -> Result<Option<SuperdenseCertificate>> {
    fn go<F: Field>(
        m: &SimplicialMatroid<F>,
        x: ElemSet,
        dead: &mut HashSet<ElemSet>,
        steps: &mut Vec<(Face, ElemSet)>,
    ) -> bool {
        if x.is_empty() {
            return true;
        }
        if dead.contains(&x) {
            return false;
        }
        let c = m.complex().restrict(|g| x.contains(m.index_of(g).expect("generator")));
        let rx = m.rank_set(x);
        for v in star_centres(&c) {
            let star: ElemSet = x.iter().filter(|&i| v.is_subset_of(m.ground()[i])).collect();
            let h = x.difference(star);
            // Hyperplane of the restriction to x: closed within x and of corank one.
            if m.rank_set(h) + 1 != rx || m.closure(h).intersection(x) != h {
                continue;
            }
            if !is_simplicial_face(&c, v) {
                continue;
            }
            steps.push((v, h));
            if go(m, h, dead, steps) {
                return true;
            }
            steps.pop();
        }
        dead.insert(x);
        false
    }

    let mut steps = Vec::new();
    if !go(m, m.ground_set(), &mut HashSet::new(), &mut steps) {
        return Ok(None);
    }
    let mut chain: Vec<Vec<Face>> = steps.iter().rev().map(|&(_, h)| m.faces_of(h)).collect();
    chain.push(m.ground().to_vec());
    let witnesses = steps.iter().rev().map(|&(v, _)| v).collect();
    let cert = SuperdenseCertificate { chain, witnesses };
    cert.verify(m.complex(), m.field())?;
    Ok(Some(cert))
}

/// Supersolvability. For `k > 2` this is freeness; for graphs it is chordality.
pub fn check_supersolvable<F: Field>(m: &SimplicialMatroid<F>) -> bool {
    let c = m.complex();
    if c.k() == 2 {
        check_chordal_graph(c.generators(), c.n())
    } else {
        m.rank() == m.ground().len()
    }
}

/// Searches the lattice of flats for a maximal chain of modular flats.
pub fn check_supersolvable_brute<F: Field>(m: &SimplicialMatroid<F>, guard: usize) -> Result<bool> {
    let size = m.ground().len();
    if size > guard {
        return Err(Error::GuardExceeded { what: "ground set for modular-chain search", size, guard });
    }
    let lin = m.linear();
    let r = m.rank();
    let flats: Vec<Vec<ElemSet>> = (0..=r).map(|i| lin.flats_of_rank(i)).collect();
    let all: Vec<(ElemSet, usize)> =
        flats.iter().enumerate().flat_map(|(i, l)| l.iter().map(move |&f| (f, i))).collect();
    let cache: RefCell<HashMap<ElemSet, usize>> = RefCell::new(all.iter().copied().collect());
    let rank = |s: ElemSet| {
        if let Some(&r) = cache.borrow().get(&s) {
            return r;
        }
        let r = lin.rank_set(s);
        cache.borrow_mut().insert(s, r);
        r
    };
    let modular = |x: ElemSet, rx: usize| {
        all.iter().all(|&(y, ry)| rx + ry == rank(x.union(y)) + rank(x.intersection(y)))
    };
    // Modular flats reachable from the bottom by covers.
    let mut level: Vec<ElemSet> = flats[0].iter().copied().filter(|&x| modular(x, 0)).collect();
    for (i, rank_i) in flats.iter().enumerate().take(r + 1).skip(1) {
        level = rank_i
            .iter()
            .copied()
            .filter(|&x| level.iter().any(|&y| y.is_subset_of(x)) && modular(x, i))
            .collect();
        if level.is_empty() {
            return Ok(false);
        }
    }
    Ok(!level.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face;
    use crate::face::all_faces;
    use crate::field::{PrimeField, Rationals};
    use crate::gen::{gen_dperfect_nine, gen_non_strong, gen_projective_plane};
    use proptest::prelude::*;

    fn gf2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn seq(list: &[&str]) -> Vec<Face> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn nine_sequence() -> Vec<Face> {
        seq(&["45", "67", "89", "15", "14", "16", "17", "28", "29", "12"])
    }

    #[test]
    fn simplicial_examples() {
        let c = gen_dperfect_nine();
        assert!(is_simplicial_face(&c, face!(4, 5)));
        assert!(is_simplicial_face_by_facets(&c, face!(4, 5)));
        let pp = gen_projective_plane();
        assert!(simplicial_faces(&pp).is_empty());
        for v in all_faces(6, 2) {
            assert!(!is_simplicial_face_by_facets(&pp, v));
        }
        let tri = HypercliqueComplex::full(3, 2).unwrap();
        assert!(is_simplicial_face(&tri, face!(1)));
    }

    #[test]
    fn nine_vertex_sequence_is_dperfect() {
        let c = gen_dperfect_nine();
        let m = SimplicialMatroid::new(c.clone(), Rationals::new()).unwrap();
        assert!(check_basic_linear_sequence(&m, &nine_sequence()));
        let basis = cocircuit_space_basis_from_sequence(&m, &nine_sequence()).unwrap();
        assert_eq!(basis.len(), 10);
        let peeled = {
            let mut cur = c.clone();
            nine_sequence()
                .iter()
                .map(|&v| {
                    let s = cur.star(v);
                    cur = cur.star_delete(v);
                    s
                })
                .collect()
        };
        let cert = DPerfectCertificate { sequence: nine_sequence(), peeled };
        cert.verify(&c, &gf2()).unwrap();
        cert.verify(&c, &Rationals::new()).unwrap();
        let found = find_dperfect_sequence(&m, SearchStrategy::Backtracking).unwrap().unwrap();
        assert_eq!(found.sequence.len(), 10);
    }

    #[test]
    fn reordered_sequence_regression() {
        let m = SimplicialMatroid::new(gen_dperfect_nine(), gf2()).unwrap();
        let mut s = nine_sequence();
        let last = s.pop().unwrap();
        s.insert(0, last);
        assert!(!check_basic_linear_sequence(&m, &s));
        assert!(cocircuit_space_basis_from_sequence(&m, &s).is_err());
    }

    #[test]
    fn empty_and_triangle_sequences() {
        let empty = SimplicialMatroid::new(HypercliqueComplex::new(4, 3, []).unwrap(), gf2()).unwrap();
        assert!(check_basic_linear_sequence(&empty, &[]));
        assert!(cocircuit_space_basis_from_sequence(&empty, &[]).unwrap().is_empty());
        let cert = find_dperfect_sequence(&empty, SearchStrategy::Greedy).unwrap().unwrap();
        assert!(cert.sequence.is_empty());
        let sd = check_superdense(&empty).unwrap().unwrap();
        assert_eq!(sd.chain, vec![Vec::<Face>::new()]);

        let tri = SimplicialMatroid::new(HypercliqueComplex::full(3, 2).unwrap(), Rationals::new()).unwrap();
        let b = cocircuit_space_basis_from_sequence(&tri, &[face!(1), face!(2)]).unwrap();
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn negative_instances() {
        let pp = SimplicialMatroid::new(gen_projective_plane(), Rationals::new()).unwrap();
        assert!(find_dperfect_sequence(&pp, SearchStrategy::Backtracking).unwrap().is_none());
        assert!(check_superdense(&pp).unwrap().is_none());
        assert!(!is_dense_hyperplane(&pp, &pp.ground()[1..]).unwrap());
        for (n, k) in [(5, 2), (6, 3)] {
            let c = gen_non_strong(n, k).unwrap();
            assert!(simplicial_faces(&c).is_empty());
            let m = SimplicialMatroid::new(c, gf2()).unwrap();
            assert!(find_dperfect_sequence(&m, SearchStrategy::Backtracking).unwrap().is_none());
        }
    }

    #[test]
    fn dense_hyperplane_examples() {
        let m = SimplicialMatroid::new(gen_dperfect_nine(), Rationals::new()).unwrap();
        let h: Vec<Face> = m.ground().iter().copied().filter(|g| !face!(4, 5).is_subset_of(*g)).collect();
        assert!(is_dense_hyperplane(&m, &h).unwrap());
        assert!(!is_dense_hyperplane(&m, m.ground()).unwrap());
        let cert = check_superdense(&m).unwrap().unwrap();
        assert_eq!(cert.witnesses.len(), 10);
    }

    #[test]
    fn chordality_examples() {
        let c4 = seq(&["12", "23", "34", "14"]);
        assert!(!check_chordal_graph(&c4, 4));
        let mut chord = c4.clone();
        chord.push(face!(1, 3));
        assert!(check_chordal_graph(&chord, 4));
        assert!(check_chordal_graph(&seq(&["12", "13", "14", "45", "46"]), 7));
    }

    #[test]
    fn supersolvable_examples() {
        let pp = SimplicialMatroid::new(gen_projective_plane(), Rationals::new()).unwrap();
        assert!(check_supersolvable(&pp));
        assert!(check_supersolvable_brute(&pp, 22).unwrap());
        let nine = SimplicialMatroid::new(gen_dperfect_nine(), Rationals::new()).unwrap();
        assert!(!check_supersolvable(&nine));
        let tri = SimplicialMatroid::new(HypercliqueComplex::full(3, 2).unwrap(), gf2()).unwrap();
        assert!(check_supersolvable(&tri));
        assert!(check_supersolvable_brute(&tri, 22).unwrap());
        let c4 = HypercliqueComplex::new(4, 2, seq(&["12", "23", "34", "14"])).unwrap();
        let c4 = SimplicialMatroid::new(c4, gf2()).unwrap();
        assert!(!check_supersolvable(&c4));
        assert!(!check_supersolvable_brute(&c4, 22).unwrap());
    }

    fn arb_complex(max_n: usize, k: usize) -> impl Strategy<Value = HypercliqueComplex> {
        (k + 1..=max_n).prop_flat_map(move |n| {
            let all = all_faces(n, k);
            proptest::sample::subsequence(all.clone(), 0..=all.len())
                .prop_map(move |s| HypercliqueComplex::new(n, k, s).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn fast_simplicial_test_matches_facet_count(c in arb_complex(7, 3)) {
            for v in all_faces(c.n(), 2) {
                prop_assert_eq!(is_simplicial_face(&c, v), is_simplicial_face_by_facets(&c, v));
            }
        }

        #[test]
        fn simplicial_star_is_cocircuit(c in arb_complex(7, 3)) {
            let m = SimplicialMatroid::new(c.clone(), Rationals::new()).unwrap();
            for v in simplicial_faces(&c) {
                prop_assert!(m.is_cocircuit(&c.star(v)).unwrap());
            }
        }

        #[test]
        fn graphs_dirac_and_superdense(c in arb_complex(7, 2)) {
            let m = SimplicialMatroid::new(c.clone(), gf2()).unwrap();
            let dp = find_dperfect_sequence(&m, SearchStrategy::Backtracking).unwrap();
            let greedy = find_dperfect_sequence(&m, SearchStrategy::Greedy).unwrap();
            prop_assert_eq!(dp.is_some(), check_chordal_graph(c.generators(), c.n()));
            prop_assert_eq!(dp.is_some(), greedy.is_some());
            prop_assert_eq!(dp.is_some(), check_superdense(&m).unwrap().is_some());
            prop_assert_eq!(check_supersolvable(&m), check_supersolvable_brute(&m, 22).unwrap());
        }

        #[test]
        fn triples_superdense_iff_dperfect(c in arb_complex(6, 3)) {
            let m = SimplicialMatroid::new(c, gf2()).unwrap();
            let dp = find_dperfect_sequence(&m, SearchStrategy::Backtracking).unwrap();
            prop_assert_eq!(dp.is_some(), check_superdense(&m).unwrap().is_some());
            if let Some(cert) = dp {
                let total: usize = cert.peeled.iter().map(Vec::len).sum();
                prop_assert_eq!(total, m.ground().len());
            }
            if m.ground().len() <= 12 {
                prop_assert_eq!(check_supersolvable(&m), check_supersolvable_brute(&m, 22).unwrap());
            }
        }
    }
}
