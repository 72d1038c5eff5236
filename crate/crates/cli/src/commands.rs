use std::fmt::Write as _;
use std::path::Path;

use measring::audit::{audit_space, run_sweep, AuditOptions, AuditReport};
use measring::quotient::{t_quotient, SpaceMorphism};
use measring::sample::{Sample, DEFAULT_RANDOM_COUNT};
use measring::spectrum::{
    audit_ring_isomorphism, rings_isomorphic, spaces_homeomorphic, spectrum as build_spectrum, Homeomorphism,
};
use measring::{MeasurableSpace, Subset};
use serde_json::{json, Value};

use crate::doc::{DocError, SpaceDoc};

#[derive(Debug)]
pub enum CliError {
    Doc(DocError),
    Core(measring::Error),
    Io(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Doc(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Doc(e) if e.resource_cap => 3,
            CliError::Core(measring::Error::ResourceCap { .. }) => 3,
            _ => 2,
        }
    }
}

impl From<DocError> for CliError {
    fn from(e: DocError) -> Self {
        CliError::Doc(e)
    }
}

impl From<measring::Error> for CliError {
    fn from(e: measring::Error) -> Self {
        CliError::Core(e)
    }
}

/// A command result in both renderings.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

impl Output {
    pub fn json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
        s.push('\n');
        s
    }
}

fn labels(space: &MeasurableSpace, s: &Subset) -> Vec<String> {
    s.points().map(|p| space.ground().label(p).to_string()).collect()
}

fn family_json(space: &MeasurableSpace, family: &[Subset]) -> Value {
    family.iter().map(|s| labels(space, s)).collect::<Vec<_>>().into()
}

fn family_text(space: &MeasurableSpace, family: &[Subset]) -> String {
    family.iter().map(|s| space.render(s)).collect::<Vec<_>>().join(", ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn morphism_json(m: &SpaceMorphism) -> Value {
    m.pairs().into_iter().map(|(x, y)| json!([x, y])).collect::<Vec<_>>().into()
}

fn morphism_flags(m: &SpaceMorphism) -> String {
    format!(
        "forward-measurable {}, backward-measurable {}, injective {}, surjective {}",
        yes(m.forward_measurable()),
        yes(m.backward_measurable()),
        yes(m.injective()),
        yes(m.surjective())
    )
}

fn space_text(out: &mut String, space: &MeasurableSpace) {
    let _ = writeln!(out, "points: {}", space.ground().labels().join(", "));
    let _ = writeln!(out, "|A| = {}", space.sets().len());
    let _ = writeln!(out, "algebra: {}", family_text(space, space.sets()));
    let _ = writeln!(out, "atoms: {}", family_text(space, space.atoms()));
}

fn space_json(space: &MeasurableSpace) -> Value {
    json!({
        "points": space.ground().labels(),
        "size": space.sets().len(),
        "algebra": family_json(space, space.sets()),
        "atoms": family_json(space, space.atoms()),
    })
}

pub fn generate(path: &Path) -> Result<Output, CliError> {
    let doc = SpaceDoc::load(path)?;
    let space = &doc.space;
    let primes = space.prime_elements()?;
    let mut text = format!("space {}\n", doc.name);
    space_text(&mut text, space);
    let _ = writeln!(text, "prime elements: {}", family_text(space, &primes));
    let mut json = space_json(space);
    json["name"] = doc.name.clone().into();
    json["prime_elements"] = family_json(space, &primes);
    if !doc.functions.is_empty() {
        text.push_str("functions:\n");
        let mut fs = Vec::new();
        for (name, f) in &doc.functions {
            let z = f.zero_set();
            let _ = writeln!(text, "  {name} = {}  Z({name}) = {}", f.render(), space.render(&z));
            fs.push(json!({ "name": name, "value": f.render(), "zero_set": labels(space, &z) }));
        }
        json["functions"] = fs.into();
    }
    Ok(Output { text, json, passed: true })
}

fn report_output(report: AuditReport) -> Output {
    Output {
        text: report.render_text(),
        json: serde_json::to_value(&report).expect("reports serialize"),
        passed: report.passed(),
    }
}

pub fn audit(path: &Path, options: &AuditOptions) -> Result<Output, CliError> {
    options.validate()?;
    let doc = SpaceDoc::load(path)?;
    Ok(report_output(audit_space(&doc.name, &doc.space, options)?))
}

pub fn sweep(max_points: usize, options: &AuditOptions) -> Result<Output, CliError> {
    Ok(report_output(run_sweep(max_points, options)?))
}

pub fn quotient(path: &Path, seed: u64) -> Result<Output, CliError> {
    let doc = SpaceDoc::load(path)?;
    let sample = Sample::new(&doc.space, seed, DEFAULT_RANDOM_COUNT)?;
    let q = t_quotient(&doc.space, &sample)?;
    let mut text = format!("quotient of {}\n", doc.name);
    space_text(&mut text, &q.space);
    let _ = writeln!(text, "theta: {}", q.theta.render());
    let _ = writeln!(text, "theta is {}", morphism_flags(&q.theta));
    let mut json = space_json(&q.space);
    json["name"] = doc.name.clone().into();
    json["theta"] = morphism_json(&q.theta);
    if !doc.functions.is_empty() {
        text.push_str("lifts:\n");
        let mut fs = Vec::new();
        for (name, f) in &doc.functions {
            let h = q.lift(f)?;
            let _ = writeln!(text, "  h_{name} = {}", h.render());
            fs.push(json!({ "name": name, "lift": h.render() }));
        }
        json["lifts"] = fs.into();
    }
    Ok(Output { text, json, passed: true })
}

pub fn spectrum(path: &Path, seed: u64) -> Result<Output, CliError> {
    let doc = SpaceDoc::load(path)?;
    let sample = Sample::new(&doc.space, seed, DEFAULT_RANDOM_COUNT)?;
    let spec = build_spectrum(&doc.space, &sample)?;
    let mut text = format!("spectrum of {}\n", doc.name);
    let _ = writeln!(text, "maximal ideals: {}", spec.points.len());
    let mut ideals = Vec::new();
    for (i, m) in spec.points.iter().enumerate() {
        let label = spec.space.ground().label(i);
        let kernel = m.kernel();
        let _ = writeln!(text, "  {label} = {}  kernel {}", m.ideal.render(), doc.space.render(&kernel));
        ideals.push(json!({ "label": label, "ideal": m.ideal.render(), "kernel": labels(&doc.space, &kernel) }));
    }
    space_text(&mut text, &spec.space);
    let mut json = space_json(&spec.space);
    json["name"] = doc.name.clone().into();
    json["maximal_ideals"] = ideals.into();
    match (&spec.phi, &spec.skipped) {
        (Some(phi), _) => {
            let _ = writeln!(text, "phi: {}", phi.render());
            let _ = writeln!(text, "phi is {}", morphism_flags(phi));
            json["phi"] = morphism_json(phi);
            json["phi_homeomorphism"] = phi.is_homeomorphism().into();
        }
        (None, reason) => {
            let reason = reason.clone().unwrap_or_default();
            let _ = writeln!(text, "phi: skipped ({reason})");
            json["phi_skipped"] = reason.into();
        }
    }
    Ok(Output { text, json, passed: true })
}

fn t_note(x: &MeasurableSpace, y: &MeasurableSpace) -> Option<&'static str> {
    match (x.is_t_measurable(), y.is_t_measurable()) {
        (true, true) => None,
        (false, true) => Some("first space not T-measurable"),
        (true, false) => Some("second space not T-measurable"),
        (false, false) => Some("neither space T-measurable"),
    }
}

pub fn iso(first: &Path, second: &Path) -> Result<Output, CliError> {
    let (a, b) = (SpaceDoc::load(first)?, SpaceDoc::load(second)?);
    let (x, y) = (&a.space, &b.space);
    let rings = rings_isomorphic(x, y);
    let verdict = audit_ring_isomorphism(x, y)?;
    if let Some(w) = verdict.witness {
        return Err(measring::Error::Inconsistent(w).into());
    }
    let homeo = spaces_homeomorphic(x, y)?;
    let word = |b: bool| if b { "YES" } else { "NO" };
    let mut text = format!("rings: {}, spaces: {}", word(rings), word(homeo.exists()));
    let note = if rings && !homeo.exists() { t_note(x, y) } else { None };
    if let Some(n) = note {
        let _ = write!(text, ", note: {n}");
    }
    text.push('\n');
    let _ = writeln!(text, "{}: {} atoms; {}: {} atoms", a.name, x.atom_count(), b.name, y.atom_count());
    let mut json = json!({
        "first": a.name,
        "second": b.name,
        "rings_isomorphic": rings,
        "spaces_homeomorphic": homeo.exists(),
        "atoms": [x.atom_count(), y.atom_count()],
    });
    if rings {
        let pairs: Vec<(String, String)> =
            x.atoms().iter().zip(y.atoms()).map(|(p, q)| (x.render(p), y.render(q))).collect();
        let shown: Vec<String> = pairs.iter().map(|(p, q)| format!("{p} ~ {q}")).collect();
        let _ = writeln!(text, "ring isomorphism: values carried atomwise, {}", shown.join(", "));
        json["ring_atom_pairs"] = pairs.iter().map(|(p, q)| json!([p, q])).collect::<Vec<_>>().into();
    }
    match &homeo {
        Homeomorphism::Yes(m) => {
            let _ = writeln!(text, "homeomorphism: {}", m.render());
            json["homeomorphism"] = morphism_json(m);
        }
        Homeomorphism::No { certificate } => {
            let _ = writeln!(text, "no homeomorphism: {certificate}");
            json["certificate"] = certificate.clone().into();
        }
    }
    if let Some(n) = note {
        json["note"] = n.into();
    }
    Ok(Output { text, json, passed: true })
}
