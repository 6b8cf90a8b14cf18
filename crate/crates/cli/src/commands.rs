use std::fmt;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context};
use simatroid::matroid::{verify_full_duality_guarded, DEFAULT_BRUTE_GUARD, DEFAULT_CIRCUIT_BUDGET, DEFAULT_DUALITY_GUARD};
use simatroid::{
    check_superdense, check_supersolvable, dirac, find_dperfect_sequence, gen_dperfect_nine, gen_non_strong,
    gen_projective_plane, is_strongly_triangulable_brute, is_triangulable, with_field, ElemSet, Error, Field,
    FieldSpec, SearchStrategy, SimplicialMatroid, StrongDecomposer,
};

use crate::certificate::{parse_certificates, Body, Certificate};
use crate::instance::{gen_random, parse_instance, Density, Instance};
use crate::report::{Decision, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Perfect,
    Superdense,
    Supersolvable,
    Triangulate,
    Decompose,
    DualCheck,
    Gen,
    Verify,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::Analyze,
        Command::Perfect,
        Command::Superdense,
        Command::Supersolvable,
        Command::Triangulate,
        Command::Decompose,
        Command::DualCheck,
        Command::Gen,
        Command::Verify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Perfect => "perfect",
            Command::Superdense => "superdense",
            Command::Supersolvable => "supersolvable",
            Command::Triangulate => "triangulate",
            Command::Decompose => "decompose",
            Command::DualCheck => "dual-check",
            Command::Gen => "gen",
            Command::Verify => "verify",
        }
    }

    /// Whether the command reads an instance or certificate from input.
    pub fn needs_input(self) -> bool {
        !matches!(self, Command::DualCheck | Command::Gen)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| anyhow!("unknown command {s:?}"))
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    /// Overrides the instance's field directive.
    pub field: Option<FieldSpec>,
    pub strategy: SearchStrategy,
    /// Ground-set bound for exhaustive circuit enumeration by independent sets.
    pub max_brute: usize,
    /// Work bound for the cheaper of the two circuit enumeration routes.
    pub budget: f64,
    /// Largest `n` for `dual-check`.
    pub max_n: usize,
    pub seed: u64,
    pub density: Density,
    pub n: Option<usize>,
    pub k: Option<usize>,
    /// Generator name for `gen`.
    pub generator: Option<String>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            field: None,
            strategy: SearchStrategy::Backtracking,
            max_brute: DEFAULT_BRUTE_GUARD,
            budget: DEFAULT_CIRCUIT_BUDGET,
            max_n: DEFAULT_DUALITY_GUARD,
            seed: 0,
            density: Density { num: 1, den: 2 },
            n: None,
            k: None,
            generator: None,
        }
    }
}

/// What a command prints, and how the process should exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit: i32,
}

impl From<Report> for Output {
    fn from(r: Report) -> Self {
        Output { exit: r.exit_code(), text: r.render() }
    }
}

/// Runs `cmd` on `input` (instance or certificate text). `label` names the input in reports.
pub fn run_command(cmd: Command, input: Option<&str>, label: &str, opts: &Options) -> anyhow::Result<Output> {
    match cmd {
        Command::Gen => return Ok(Output { text: generate(opts)?.to_text(), exit: 0 }),
        Command::DualCheck => return dual_check(opts).map(Output::from),
        Command::Verify => {
            let text = input.ok_or_else(|| anyhow!("verify needs certificate input"))?;
            return verify(text, label).map(Output::from);
        }
        _ => {}
    }
    let text = input.ok_or_else(|| anyhow!("{cmd} needs an instance"))?;
    let inst = parse_instance(text).with_context(|| format!("reading {label}"))?;
    let spec = opts.field.or(inst.field).unwrap_or_else(FieldSpec::gf2);
    let report = with_field!(spec, |f| run_on_instance(cmd, &inst, f, label, opts))?;
    Ok(report.into())
}

fn require_nk(opts: &Options, what: &str) -> anyhow::Result<(usize, usize)> {
    match (opts.n, opts.k) {
        (Some(n), Some(k)) => Ok((n, k)),
        _ => bail!("{what} needs --n and --k"),
    }
}

/// Named instances: `projective-plane`, `dperfect-nine`, `non-strong`, `random`.
pub fn generate(opts: &Options) -> anyhow::Result<Instance> {
    let name = opts.generator.as_deref().unwrap_or("random");
    let c = match name {
        "projective-plane" => gen_projective_plane(),
        "dperfect-nine" => gen_dperfect_nine(),
        "non-strong" => {
            let (n, k) = require_nk(opts, "non-strong")?;
            gen_non_strong(n, k)?
        }
        "random" => {
            let (n, k) = require_nk(opts, "random")?;
            return Ok(Instance { field: opts.field, ..gen_random(n, k, opts.density, opts.seed)? });
        }
        _ => bail!("unknown generator {name:?} (projective-plane, dperfect-nine, non-strong, random)"),
    };
    Ok(Instance::from_complex(&c, opts.field))
}

fn dual_check(opts: &Options) -> anyhow::Result<Report> {
    let (n, k) = require_nk(opts, "dual-check")?;
    let spec = opts.field.unwrap_or_else(FieldSpec::gf2);
    let mut r = Report::new(&format!("full n={n} k={k}"), Some(spec));
    let res = with_field!(spec, |f| verify_full_duality_guarded(n, k, &f, opts.max_n));
    match res {
        Ok(b) => r.flag("duality", b),
        Err(e @ Error::GuardExceeded { .. }) => r.flag("duality", Decision::Inconclusive(e.to_string())),
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

fn verify(text: &str, label: &str) -> anyhow::Result<Report> {
    let certs = parse_certificates(text).with_context(|| format!("reading {label}"))?;
    if certs.is_empty() {
        bail!("no certificates in {label}");
    }
    let mut r = Report::new(label, None);
    r.push("certificates", certs.len());
    let mut failures = Vec::new();
    for (i, c) in certs.iter().enumerate() {
        match c.verify() {
            Ok(()) => r.push(&format!("certificate_{} {}", i + 1, c.body.kind()), "ok"),
            Err(e) => failures.push(format!("certificate {} ({}): {e}", i + 1, c.body.kind())),
        }
    }
    if !failures.is_empty() {
        bail!("verification failed: {}", failures.join("; "));
    }
    Ok(r)
}

/// Circuits by independent-set walk when the ground set is small, otherwise
/// by the cheaper route within the budget. `None` past both bounds.
fn enumerate_circuits<F: Field>(m: &SimplicialMatroid<F>, opts: &Options) -> anyhow::Result<Option<Vec<ElemSet>>> {
    let size = m.ground().len();
    let res = if size <= opts.max_brute {
        m.circuits_brute_guarded(size, opts.max_brute)
    } else {
        m.circuits(opts.budget)
    };
    match res {
        Ok(c) => Ok(Some(c)),
        Err(Error::GuardExceeded { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn run_on_instance<F: Field>(
    cmd: Command,
    inst: &Instance,
    field: F,
    label: &str,
    opts: &Options,
) -> anyhow::Result<Report> {
    let c = inst.complex()?;
    let m = SimplicialMatroid::new(c.clone(), field.clone())?;
    let mut r = Report::new(label, Some(field.spec()));
    r.push("n", c.n());
    r.push("k", c.k());
    r.push("generators", c.generators().len());
    r.push("rank", m.rank());
    let cert_instance = Instance { field: Some(field.spec()), ..inst.clone() };
    let certify = |body: Body| Certificate { field: field.spec(), instance: cert_instance.clone(), body };

    let dperfect = |r: &mut Report, strategy: SearchStrategy| -> anyhow::Result<Option<Certificate>> {
        let found = find_dperfect_sequence(&m, strategy)?;
        match (&found, strategy) {
            (None, SearchStrategy::Greedy) => {
                r.flag("d_perfect", Decision::Inconclusive("greedy search stalled".into()))
            }
            _ => r.flag("d_perfect", found.is_some()),
        }
        Ok(found.map(|c| certify(Body::DPerfect(c))))
    };
    let superdense = |r: &mut Report| -> anyhow::Result<Option<Certificate>> {
        let found = check_superdense(&m)?;
        r.flag("superdense", found.is_some());
        Ok(found.map(|c| certify(Body::Superdense(c))))
    };
    let strong = |r: &mut Report| -> anyhow::Result<()> {
        match is_strongly_triangulable_brute(&m, opts.budget) {
            Ok(b) => r.flag("strongly_triangulable", b),
            Err(e @ Error::GuardExceeded { .. }) => {
                r.flag("strongly_triangulable", Decision::Inconclusive(e.to_string()))
            }
            Err(e) => return Err(e.into()),
        }
        Ok(())
    };

    match cmd {
        Command::Analyze => {
            r.push("facets", c.facets().len());
            r.push("small_circuits", c.upper_faces().len());
            r.push("simplicial_faces", dirac::simplicial_faces(&c).len());
            let d = dperfect(&mut r, SearchStrategy::Backtracking)?;
            let s = superdense(&mut r)?;
            r.flag("supersolvable", check_supersolvable(&m));
            r.flag("triangulable", is_triangulable(&m));
            strong(&mut r)?;
            r.certificates.extend(d.into_iter().chain(s));
        }
        Command::Perfect => {
            r.push("strategy", opts.strategy);
            let d = dperfect(&mut r, opts.strategy)?;
            r.certificates.extend(d);
        }
        Command::Superdense => {
            let s = superdense(&mut r)?;
            r.certificates.extend(s);
        }
        Command::Supersolvable => r.flag("supersolvable", check_supersolvable(&m)),
        Command::Triangulate => {
            r.push("nullity", m.linear().nullity());
            r.push("small_circuits", c.upper_faces().len());
            r.flag("triangulable", is_triangulable(&m));
            strong(&mut r)?;
        }
        Command::Decompose => {
            let Some(cert) = find_dperfect_sequence(&m, SearchStrategy::Backtracking)? else {
                r.flag("d_perfect", false);
                return Ok(r);
            };
            r.flag("d_perfect", true);
            let Some(circuits) = enumerate_circuits(&m, opts)? else {
                r.flag("decomposed", Decision::Inconclusive("circuit enumeration over budget".into()));
                return Ok(r);
            };
            let dec = StrongDecomposer::new(&m, &cert)?;
            r.push("circuits", circuits.len());
            for circ in circuits {
                let d = m.circuit_vector(circ).expect("enumerated circuits are circuits");
                let t = dec.decompose(&d)?;
                r.certificates.push(Certificate::triangulation(&field, cert_instance.clone(), &t));
            }
            r.flag("decomposed", true);
        }
        Command::DualCheck | Command::Gen | Command::Verify => unreachable!("handled before parsing"),
    }
    for cert in &r.certificates {
        cert.verify().context("emitted certificate failed to re-verify")?;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn command_names_round_trip() {
        for c in Command::ALL {
            assert_eq!(c.name().parse::<Command>().unwrap(), c);
        }
        assert!("frobnicate".parse::<Command>().is_err());
    }

    #[test]
    fn greedy_failure_is_inconclusive() {
        let pp = Instance::from_complex(&gen_projective_plane(), None);
        let opts = Options { strategy: SearchStrategy::Greedy, ..Options::default() };
        let out = run_command(Command::Perfect, Some(&pp.to_text()), "pp", &opts).unwrap();
        assert_eq!(out.exit, 2);
        let out = run_command(Command::Perfect, Some(&pp.to_text()), "pp", &Options::default()).unwrap();
        assert_eq!(out.exit, 0);
        assert!(out.text.contains("d_perfect false"));
    }
}
