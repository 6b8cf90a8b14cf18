//! Instance files and the seeded random generator.
//!
//! ```text
//! # comment
//! 9 3
//! field q
//! 1 2 3
//! 1 2 4
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use simatroid::{Face, FieldSpec, HypercliqueComplex};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty instance: missing \"n k\" header")]
    MissingHeader,
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
}

fn at(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line { line, msg: msg.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub n: usize,
    pub k: usize,
    pub faces: Vec<Face>,
    pub field: Option<FieldSpec>,
}

impl Instance {
    pub fn from_complex(c: &HypercliqueComplex, field: Option<FieldSpec>) -> Self {
        Instance { n: c.n(), k: c.k(), faces: c.generators().to_vec(), field }
    }

    pub fn complex(&self) -> simatroid::Result<HypercliqueComplex> {
        HypercliqueComplex::new(self.n, self.k, self.faces.iter().copied())
    }

    /// Canonical text: header, optional field line, sorted faces.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.k);
        if let Some(f) = &self.field {
            let _ = writeln!(out, "field {f}");
        }
        let mut faces = self.faces.clone();
        faces.sort();
        for f in faces {
            out.push_str(&vertex_line(f));
            out.push('\n');
        }
        out
    }
}

/// Vertices separated by single spaces.
pub fn vertex_line(f: Face) -> String {
    f.vertices().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Content lines with their 1-based numbers, skipping blanks and comments.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let [n, k] = nums[..] else {
        return Err(at(hl, format!("expected header \"n k\", got {header:?}")));
    };
    let n: usize = n.parse().map_err(|_| at(hl, format!("bad n {n:?}")))?;
    let k: usize = k.parse().map_err(|_| at(hl, format!("bad k {k:?}")))?;
    if k < 2 || k > n || n > simatroid::face::MAX_VERTICES {
        return Err(at(hl, format!("need 2 <= k <= n <= 64, got n = {n}, k = {k}")));
    }
    let mut field = None;
    let mut seen = BTreeSet::new();
    let mut faces = Vec::new();
    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("field") {
            if field.is_some() {
                return Err(at(ln, "repeated field directive"));
            }
            let spec = FieldSpec::from_str(rest.trim()).map_err(|e| at(ln, e.to_string()))?;
            field = Some(spec);
            continue;
        }
        let mut verts = Vec::new();
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| at(ln, format!("bad vertex {tok:?}")))?;
            if v == 0 || v > n {
                return Err(at(ln, format!("vertex {v} out of range 1..={n}")));
            }
            verts.push(v);
        }
        let mut sorted = verts.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != verts.len() {
            return Err(at(ln, "repeated vertex"));
        }
        if verts.len() != k {
            return Err(at(ln, format!("expected {k} vertices, got {}", verts.len())));
        }
        let f = Face::new(&sorted).map_err(|e| at(ln, e.to_string()))?;
        if !seen.insert(f) {
            return Err(at(ln, format!("duplicate face {}", vertex_line(f))));
        }
        faces.push(f);
    }
    faces.sort();
    Ok(Instance { n, k, faces, field })
}

/// LCG multiplier; the increment is [`LCG_INCREMENT`]. Both are Knuth's MMIX constants.
pub const LCG_MULTIPLIER: u64 = 6364136223846793005;
pub const LCG_INCREMENT: u64 = 1442695040888963407;

/// A density `num/den` in `(0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Density {
    pub num: u64,
    pub den: u64,
}

impl FromStr for Density {
    type Err = String;

    /// Accepts `a/b` or a decimal such as `0.35`.
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("bad density {s:?}: expected a/b or a decimal in (0, 1]");
        let (num, den) = if let Some((a, b)) = s.split_once('/') {
            (a.trim().parse::<u64>().map_err(|_| bad())?, b.trim().parse::<u64>().map_err(|_| bad())?)
        } else {
            let (int, frac) = s.split_once('.').unwrap_or((s, ""));
            if frac.len() > 12 || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let den = 10u64.pow(frac.len() as u32);
            let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
            (int * den + frac, den)
        };
        if den == 0 || num == 0 || num > den {
            return Err(bad());
        }
        Ok(Density { num, den })
    }
}

/// Includes each `k`-subset of `[n]`, in lexicographic order, when the high
/// 32 bits `h` of the next LCG state satisfy `h * den < num * 2^32`. The
/// state starts at `seed` and advances before each draw.
pub fn gen_random(n: usize, k: usize, density: Density, seed: u64) -> simatroid::Result<Instance> {
    let mut state = seed;
    let faces: Vec<Face> = simatroid::all_faces(n, k)
        .into_iter()
        .filter(|_| {
            state = state.wrapping_mul(LCG_MULTIPLIER).wrapping_add(LCG_INCREMENT);
            ((state >> 32) as u128) * (density.den as u128) < (density.num as u128) << 32
        })
        .collect();
    let c = HypercliqueComplex::new(n, k, faces)?;
    Ok(Instance::from_complex(&c, None))
}
