//! Faces: nonempty subsets of `[n]` with the orientation induced by `[n]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported ground set `[n]`.
pub const MAX_VERTICES: usize = 64;

/// A nonempty subset of `[n]`, stored as a vertex bitmask (vertex `v` is bit `v - 1`).
///
/// Faces order lexicographically by their increasing vertex sequences, so a
/// prefix sorts first: `12 < 123 < 13`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face(u64);

impl Face {
    /// Builds a face from vertices in any order; rejects repeats, zero and
    /// vertices above [`MAX_VERTICES`].
    pub fn new(vertices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
            }
            let bit = 1u64 << (v - 1);
            if mask & bit != 0 {
                return Err(Error::RepeatedVertex(v));
            }
            mask |= bit;
        }
        Face::from_mask(mask)
    }

    pub fn from_mask(mask: u64) -> Result<Self> {
        if mask == 0 {
            Err(Error::EmptyFace)
        } else {
            Ok(Face(mask))
        }
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn max_vertex(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn contains_vertex(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Face) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    /// All subsets of the given size, in lexicographic order.
    pub fn subsets(self, size: usize) -> Vec<Face> {
        let verts: Vec<usize> = self.vertices().collect();
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(size);
        fn rec(verts: &[usize], start: usize, size: usize, pick: &mut Vec<usize>, out: &mut Vec<Face>) {
            if pick.len() == size {
                if let Ok(f) = Face::new(pick) {
                    out.push(f);
                }
                return;
            }
            let need = size - pick.len();
            for i in start..verts.len() {
                if verts.len() - i < need {
                    break;
                }
                pick.push(verts[i]);
                rec(verts, i + 1, size, pick, out);
                pick.pop();
            }
        }
        if size > 0 && size <= verts.len() {
            rec(&verts, 0, size, &mut pick, &mut out);
        }
        out
    }

    /// The codimension-one subfaces with their incidence numbers, in the order
    /// the vertices are removed: `(F without i_j, (-1)^j)` for `j = 1..=m`.
    pub fn boundary_terms(self) -> Vec<(Face, i64)> {
        if self.len() < 2 {
            return Vec::new();
        }
        self.vertices()
            .enumerate()
            .map(|(idx, v)| {
                let sign = if (idx + 1) % 2 == 0 { 1 } else { -1 };
                (Face(self.0 & !(1u64 << (v - 1))), sign)
            })
            .collect()
    }
}

/// Incidence number `[small : big]`: `(-1)^j` when `small` is `big` with its
/// `j`-th vertex (counting from 1) removed, otherwise 0.
pub fn incidence(small: Face, big: Face) -> i64 {
    if small.len() + 1 != big.len() || !small.is_subset_of(big) {
        return 0;
    }
    let removed = big.0 & !small.0;
    let j = (big.0 & (removed - 1)).count_ones() + 1;
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All `d`-subsets of `[n]` in lexicographic order.
pub fn all_faces(n: usize, d: usize) -> Vec<Face> {
    if n == 0 || n > MAX_VERTICES {
        return Vec::new();
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Face(full).subsets(d)
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let above = !(low | (low - 1));
        if self.0 & low != 0 {
            // `self` has the smaller next vertex unless `other` has run out.
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices().map(|v| v.to_string()).collect();
        if self.max_vertex() < 10 {
            f.write_str(&parts.concat())
        } else {
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Face {
    type Err = Error;

    /// Space- or comma-separated vertices (`"1 2 4"`), or packed digits (`"124"`)
    /// when every vertex is a single digit.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let tokens: Vec<&str> = s.split([' ', ',', '\t']).filter(|t| !t.is_empty()).collect();
        let verts: Vec<usize> = if tokens.len() == 1 && tokens[0].len() > 1 {
            tokens[0]
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or(Error::EmptyFace)?
        } else {
            tokens.iter().map(|t| t.parse().map_err(|_| Error::EmptyFace)).collect::<Result<_>>()?
        };
        Face::new(&verts)
    }
}

/// Shorthand for tests and generators: `face!(1, 2, 4)`.
#[macro_export]
macro_rules! face {
    ($($v:expr),+ $(,)?) => {
        $crate::Face::new(&[$($v),+]).expect("valid face")
    };
}
