//! Plain-text certificates. Each block carries its own instance and field, so
//! it can be checked with nothing else at hand.
//!
//! ```text
//! certificate dperfect
//! field 2
//! instance 4 2
//! generators 12 13 23 34
//! step 4 : 34
//! step 1 : 12 13
//! step 2 : 23
//! end
//! ```

use std::fmt::Write as _;

use simatroid::{
    with_field, ChainVector, DPerfectCertificate, Face, Field, FieldSpec, SuperdenseCertificate,
    TriangulationCertificate,
};

use crate::instance::{content_lines, Instance, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    DPerfect(DPerfectCertificate),
    Superdense(SuperdenseCertificate),
    /// Scalars are kept in their textual form and parsed in the certificate's field.
    Triangulation { target: Vec<(String, Face)>, terms: Vec<(String, Face)> },
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::DPerfect(_) => "dperfect",
            Body::Superdense(_) => "superdense",
            Body::Triangulation { .. } => "triangulation",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub field: FieldSpec,
    pub instance: Instance,
    pub body: Body,
}

fn join(faces: &[Face]) -> String {
    faces.iter().map(Face::to_string).collect::<Vec<_>>().join(" ")
}

impl Certificate {
    pub fn triangulation<F: Field>(field: &F, instance: Instance, t: &TriangulationCertificate<F>) -> Self {
        let target = t.target.iter().map(|(g, a)| (field.format(a), g)).collect();
        let terms = t.terms.iter().map(|(a, x)| (field.format(a), *x)).collect();
        Certificate { field: field.spec(), instance, body: Body::Triangulation { target, terms } }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let inst = &self.instance;
        let _ = writeln!(out, "certificate {}", self.body.kind());
        let _ = writeln!(out, "field {}", self.field);
        let _ = writeln!(out, "instance {} {}", inst.n, inst.k);
        out.push_str("generators");
        for f in &inst.faces {
            let _ = write!(out, " {f}");
        }
        out.push('\n');
        match &self.body {
            Body::DPerfect(c) => {
                for (v, p) in c.sequence.iter().zip(&c.peeled) {
                    let _ = writeln!(out, "step {v} : {}", join(p));
                }
            }
            Body::Superdense(c) => {
                for v in &c.witnesses {
                    let _ = writeln!(out, "witness {v}");
                }
                for x in &c.chain {
                    out.push_str("flat");
                    for f in x {
                        let _ = write!(out, " {f}");
                    }
                    out.push('\n');
                }
            }
            Body::Triangulation { target, terms } => {
                for (a, g) in target {
                    let _ = writeln!(out, "target {a} {g}");
                }
                for (a, x) in terms {
                    let _ = writeln!(out, "term {a} {x}");
                }
            }
        }
        out.push_str("end\n");
        out
    }

    /// Checks the certificate using only its own contents.
    pub fn verify(&self) -> simatroid::Result<()> {
        let c = self.instance.complex()?;
        with_field!(self.field, |f| match &self.body {
            Body::DPerfect(cert) => cert.verify(&c, &f),
            Body::Superdense(cert) => cert.verify(&c, &f),
            Body::Triangulation { target, terms } => {
                let mut t = ChainVector::zero(f);
                for (a, g) in target {
                    t.add_term(*g, &f.parse(a)?);
                }
                let terms = terms
                    .iter()
                    .map(|(a, x)| Ok((f.parse(a)?, *x)))
                    .collect::<simatroid::Result<Vec<_>>>()?;
                TriangulationCertificate { target: t, terms, residual: ChainVector::zero(f) }.verify(&c)
            }
        })
    }
}

fn faces_after(ln: usize, rest: &str) -> Result<Vec<Face>, ParseError> {
    rest.split_whitespace()
        .map(|t| t.parse::<Face>().map_err(|e| ParseError::Line { line: ln, msg: format!("bad face {t:?}: {e}") }))
        .collect()
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line { line, msg: msg.into() }
}

/// Reads every `certificate ... end` block in `text`; other lines are ignored.
pub fn parse_certificates(text: &str) -> Result<Vec<Certificate>, ParseError> {
    let mut out = Vec::new();
    let mut lines = content_lines(text);
    while let Some((start, line)) = lines.next() {
        let Some(kind) = line.strip_prefix("certificate ") else {
            continue;
        };
        let kind = kind.trim();
        let mut field = None;
        let mut header = None;
        let mut gens = None;
        let mut steps = Vec::new();
        let mut witnesses = Vec::new();
        let mut flats = Vec::new();
        let mut target = Vec::new();
        let mut terms = Vec::new();
        let mut closed = false;
        for (ln, line) in lines.by_ref() {
            let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
            match key {
                "end" => {
                    closed = true;
                    break;
                }
                "field" => field = Some(rest.parse::<FieldSpec>().map_err(|e| err(ln, e.to_string()))?),
                "instance" => {
                    let nk: Vec<usize> = rest
                        .split_whitespace()
                        .map(|t| t.parse().map_err(|_| err(ln, format!("bad number {t:?}"))))
                        .collect::<Result<_, _>>()?;
                    let [n, k] = nk[..] else { return Err(err(ln, "expected \"instance n k\"")) };
                    header = Some((n, k));
                }
                "generators" => gens = Some(faces_after(ln, rest)?),
                "step" => {
                    let (v, p) = rest.split_once(':').ok_or_else(|| err(ln, "expected \"step V : faces\""))?;
                    let v = faces_after(ln, v)?;
                    let [v] = v[..] else { return Err(err(ln, "a step names one face")) };
                    steps.push((v, faces_after(ln, p)?));
                }
                "witness" => {
                    let v = faces_after(ln, rest)?;
                    let [v] = v[..] else { return Err(err(ln, "a witness is one face")) };
                    witnesses.push(v);
                }
                "flat" => flats.push(faces_after(ln, rest)?),
                "target" | "term" => {
                    let (a, f) = rest.split_once(' ').ok_or_else(|| err(ln, "expected \"scalar face\""))?;
                    let f = faces_after(ln, f)?;
                    let [f] = f[..] else { return Err(err(ln, "expected one face")) };
                    let entry = (a.to_string(), f);
                    if key == "target" { target.push(entry) } else { terms.push(entry) }
                }
                _ => return Err(err(ln, format!("unexpected line {line:?}"))),
            }
        }
        if !closed {
            return Err(err(start, "certificate block has no \"end\""));
        }
        let field = field.ok_or_else(|| err(start, "certificate without field"))?;
        let (n, k) = header.ok_or_else(|| err(start, "certificate without instance"))?;
        let mut faces = gens.ok_or_else(|| err(start, "certificate without generators"))?;
        faces.sort();
        let instance = Instance { n, k, faces, field: Some(field) };
        let body = match kind {
            "dperfect" => Body::DPerfect(DPerfectCertificate {
                sequence: steps.iter().map(|s| s.0).collect(),
                peeled: steps.into_iter().map(|s| s.1).collect(),
            }),
            "superdense" => Body::Superdense(SuperdenseCertificate { chain: flats, witnesses }),
            "triangulation" => Body::Triangulation { target, terms },
            _ => return Err(err(start, format!("unknown certificate kind {kind:?}"))),
        };
        out.push(Certificate { field, instance, body });
    }
    Ok(out)
}
