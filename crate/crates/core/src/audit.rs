//! Runs every proposition audit on a space, or on all spaces up to a size,
//! and collects the results into a deterministic report.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::check::{Tally, Verdict};
use crate::error::{Error, Result};
use crate::quotient::{
    audit_compact_element_rules, audit_composition_measurability, audit_generated_preimages,
    audit_indistinguishability, audit_members_compact, audit_quotient, audit_quotient_compact_elements,
    audit_weak_sigma_algebra, t_quotient,
};
use crate::ring::RingContext;
use crate::sample::{Sample, DEFAULT_RANDOM_COUNT, DEFAULT_SEED};
use crate::space::{audit_boolean_sigma_frame, set_partitions, MeasurableSpace};
use crate::spectrum::{
    audit_compact_quotient, audit_rings_determine_spaces, audit_spectrum_structure, audit_stone_map, rings_isomorphic,
    spaces_homeomorphic, spectrum,
};
use crate::subset::GroundSet;

/// Proposition ids in report order.
pub const PROPOSITIONS: &[&str] = &[
    "sigma",
    "frame",
    "M15",
    "unit",
    "chi",
    "M30",
    "M35",
    "M40",
    "M45",
    "M45-1",
    "M50",
    "M55",
    "M65",
    "M66",
    "M85",
    "M95",
    "M105",
    "M110",
    "M115",
    "M120",
    "M130",
    "I=J",
    "prime=max",
    "max",
    "fixmax",
    "fixprim",
    "M200",
    "M205",
    "M200-1",
    "M210",
    "M215",
    "M220",
    "M260",
    "M270",
    "M280",
    "M285",
    "M290",
    "X-P=1",
    "M295",
];

/// Largest ground set accepted by [`run_sweep`].
pub const MAX_SWEEP_POINTS: usize = 5;

/// Random maps tried by the preimage and composition audits.
pub const MAP_TRIALS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub id: String,
    pub space: String,
    pub status: Status,
    pub checks: u64,
    /// Failure witness or skip reason.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Replayable description of the space, attached to failures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub space_doc: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub random_functions: usize,
    pub spaces: Vec<String>,
    pub entries: Vec<Entry>,
}

impl AuditReport {
    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| e.status == Status::Fail).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {} audit\n", self.tool, self.version));
        out.push_str(&format!("seed: {}\n", self.seed));
        out.push_str(&format!("random functions per space: {}\n", self.random_functions));
        out.push_str(&format!("spaces: {}\n", self.spaces.len()));
        for e in &self.entries {
            out.push_str(&format!("{:<7} {:<9} {:<14} checks={}", e.status.as_str(), e.id, e.space, e.checks));
            if let Some(ms) = e.millis {
                out.push_str(&format!(" time={ms}ms"));
            }
            out.push('\n');
            if let Some(d) = &e.detail {
                out.push_str(&format!("        {d}\n"));
            }
            if let Some(doc) = &e.space_doc {
                for line in doc.lines() {
                    out.push_str(&format!("        | {line}\n"));
                }
            }
        }
        out.push_str(&format!(
            "summary: {} passed, {} failed, {} skipped\n",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        ));
        out
    }
}

#[derive(Debug, Clone)]
pub struct AuditOptions {
    pub seed: u64,
    pub random_count: usize,
    /// Restrict to these ids; `None` runs everything.
    pub props: Option<Vec<String>>,
    pub timing: bool,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions { seed: DEFAULT_SEED, random_count: DEFAULT_RANDOM_COUNT, props: None, timing: false }
    }
}

impl AuditOptions {
    /// Rejects unknown proposition ids.
    pub fn validate(&self) -> Result<()> {
        for p in self.props.iter().flatten() {
            if !PROPOSITIONS.contains(&p.as_str()) {
                return Err(Error::UnknownProposition(p.clone()));
            }
        }
        Ok(())
    }

    fn wants(&self, id: &str) -> bool {
        self.props.as_ref().is_none_or(|ps| ps.iter().any(|p| p == id))
    }
}

/// TOML description of a space: its points and its atoms as generators.
pub fn space_doc(name: &str, space: &MeasurableSpace) -> String {
    let q = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
    let points: Vec<String> = space.ground().labels().iter().map(|l| q(l)).collect();
    let gens: Vec<String> = space
        .atoms()
        .iter()
        .map(|a| {
            let ls: Vec<String> = a.points().map(|p| q(space.ground().label(p))).collect();
            format!("[{}]", ls.join(", "))
        })
        .collect();
    format!("name = {}\npoints = [{}]\ngenerators = [{}]\n", q(name), points.join(", "), gens.join(", "))
}

enum Outcome {
    Done(Verdict),
    Skip(String),
}

struct Collector<'a> {
    options: &'a AuditOptions,
    entries: Vec<(usize, usize, Entry)>,
}

impl Collector<'_> {
    fn run(
        &mut self,
        id: &str,
        space_index: usize,
        space_name: &str,
        doc: impl FnOnce() -> String,
        audit: impl FnOnce() -> Result<Outcome>,
    ) -> Result<()> {
        if !self.options.wants(id) {
            return Ok(());
        }
        let start = Instant::now();
        let outcome = audit()?;
        let millis = self.options.timing.then(|| start.elapsed().as_millis() as u64);
        let (status, checks, detail) = match outcome {
            Outcome::Done(v) if v.passed() => (Status::Pass, v.checks, None),
            Outcome::Done(v) => (Status::Fail, v.checks, v.witness),
            Outcome::Skip(reason) => (Status::Skipped, 0, Some(reason)),
        };
        let space_doc = (status == Status::Fail).then(doc);
        let order = PROPOSITIONS.iter().position(|p| *p == id).expect("known id");
        self.entries.push((
            order,
            space_index,
            Entry { id: id.to_string(), space: space_name.to_string(), status, checks, detail, space_doc, millis },
        ));
        Ok(())
    }
}

fn done(v: Verdict) -> Result<Outcome> {
    Ok(Outcome::Done(v))
}

fn laws(space: &MeasurableSpace, which: &[&str]) -> Result<Verdict> {
    let mut t = Tally::new();
    let verified = space.algebra().verify();
    t.check(verified.is_ok(), || format!("{:?}", verified.err()));
    for law in audit_boolean_sigma_frame(space)? {
        if which.contains(&law.law) {
            t.absorb(Verdict { checks: law.checks, witness: law.witness.map(|w| format!("{}: {w}", law.law)) });
        }
    }
    Ok(t.finish())
}

fn audit_space_into(
    c: &mut Collector<'_>,
    index: usize,
    name: &str,
    space: &MeasurableSpace,
    single: bool,
) -> Result<()> {
    let opts = c.options;
    let sample = Sample::new(space, opts.seed, opts.random_count)?;
    let doc = || space_doc(name, space);
    let needs_ring = PROPOSITIONS[2..26].iter().any(|id| opts.wants(id)) || opts.wants("X-P=1");
    let ctx = if needs_ring { Some(RingContext::new(space, sample.clone())?) } else { None };
    let ctx = ctx.as_ref();
    let r = || ctx.expect("ring context");

    c.run("sigma", index, name, doc, || done(laws(space, &["distributive", "complemented"])?))?;
    c.run("frame", index, name, doc, || done(laws(space, &["frame-distributive"])?))?;
    c.run("M15", index, name, doc, || done(r().zero_set_image()))?;
    c.run("unit", index, name, doc, || done(r().units()))?;
    c.run("chi", index, name, doc, || done(r().characteristic_functions()?))?;
    c.run("M30", index, name, doc, || done(r().galois_maps()?))?;
    c.run("M35", index, name, doc, || done(r().galois_bijection()?))?;
    c.run("M40", index, name, doc, || done(r().meets_implies_membership()))?;
    c.run("M45", index, name, doc, || done(r().point_ideals()?))?;
    c.run("M45-1", index, name, doc, || done(r().fixed_maximal_via_prime_ideals()))?;
    c.run("M50", index, name, doc, || done(r().maximal_zero_annihilator_orders()))?;
    c.run("M55", index, name, doc, || done(r().annihilator_conditions()))?;
    c.run("M65", index, name, doc, || done(r().z_ideal_conditions()))?;
    c.run("M66", index, name, doc, || done(r().every_ideal_is_z_ideal()?))?;
    c.run("M85", index, name, doc, || done(r().fip_compactness()?))?;
    c.run("M95", index, name, doc, || done(r().compactness_equivalences()?))?;
    c.run("M105", index, name, doc, || done(r().maximal_kernels()))?;
    c.run("M110", index, name, doc, || done(r().prime_conditions()))?;
    c.run("M115", index, name, doc, || done(r().gelfand()))?;
    c.run("M120", index, name, doc, || done(r().prime_kernels()))?;
    c.run("M130", index, name, doc, || done(r().prime_filter_correspondence()))?;
    c.run("I=J", index, name, doc, || done(r().cozero_ideals_injective()))?;
    c.run("prime=max", index, name, doc, || done(r().prime_lattice_ideals_are_maximal()))?;
    c.run("max", index, name, doc, || done(r().maximal_via_prime_lattice_ideals()?))?;
    c.run("fixmax", index, name, doc, || done(r().fixed_maximal_via_prime_elements()?))?;
    c.run("fixprim", index, name, doc, || done(r().fixed_prime_is_fixed_maximal()))?;
    c.run("M200", index, name, doc, || done(audit_members_compact(space)?))?;
    c.run("M205", index, name, doc, || done(audit_compact_element_rules(space)?))?;
    c.run("M200-1", index, name, doc, || done(audit_quotient_compact_elements(space, &sample)?))?;
    c.run("M210", index, name, doc, || done(audit_spectrum_structure(space, &sample)?))?;
    c.run("M215", index, name, doc, || {
        Ok(match audit_stone_map(space, &sample)? {
            Ok(v) => Outcome::Done(v),
            Err(reason) => Outcome::Skip(reason),
        })
    })?;
    if single {
        c.run("M220", index, name, doc, || {
            let q = t_quotient(space, &sample)?;
            let spec = spectrum(space, &sample)?;
            let candidates = [("X", space.clone()), ("X/∼", q.space), ("max(M(X))", spec.space)];
            let mut t = Tally::new();
            let mut pairs = 0;
            for (i, (na, a)) in candidates.iter().enumerate() {
                for (nb, b) in &candidates[i..] {
                    if let Some(v) = audit_rings_determine_spaces(a, b)? {
                        pairs += 1;
                        t.absorb(Verdict {
                            checks: v.checks,
                            witness: v.witness.map(|w| format!("{na} vs {nb}: {w}")),
                        });
                    }
                }
            }
            Ok(if pairs == 0 {
                Outcome::Skip("no compact T-measurable pair".into())
            } else {
                Outcome::Done(t.finish())
            })
        })?;
    }
    c.run("M260", index, name, doc, || done(audit_weak_sigma_algebra(space, &sample)?))?;
    c.run("M270", index, name, doc, || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x270);
        done(audit_generated_preimages(space, MAP_TRIALS, &mut rng)?)
    })?;
    c.run("M280", index, name, doc, || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x280);
        done(audit_composition_measurability(space, MAP_TRIALS, &mut rng)?)
    })?;
    c.run("M285", index, name, doc, || done(audit_indistinguishability(space, &sample)))?;
    c.run("M290", index, name, doc, || done(audit_quotient(space, &sample)?))?;
    c.run("X-P=1", index, name, doc, || {
        Ok(match r().prime_elements_are_coatoms()? {
            Some(v) => Outcome::Done(v),
            None => Outcome::Skip("space is not T-measurable".into()),
        })
    })?;
    c.run("M295", index, name, doc, || done(audit_compact_quotient(space, &sample)?))?;
    Ok(())
}

fn finish(options: &AuditOptions, spaces: Vec<String>, mut entries: Vec<(usize, usize, Entry)>) -> AuditReport {
    entries.sort_by_key(|e| (e.0, e.1));
    AuditReport {
        tool: "measring".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        seed: options.seed,
        random_functions: options.random_count,
        spaces,
        entries: entries.into_iter().map(|(_, _, e)| e).collect(),
    }
}

/// Every selected audit on one space. `M220` compares `X`, `X/∼` and the
/// spectrum pairwise.
pub fn audit_space(name: &str, space: &MeasurableSpace, options: &AuditOptions) -> Result<AuditReport> {
    options.validate()?;
    let mut c = Collector { options, entries: Vec::new() };
    audit_space_into(&mut c, 0, name, space, true)?;
    Ok(finish(options, vec![name.to_string()], c.entries))
}

/// Name of a partition of `{a, b, …}` such as `{a|bc}`.
pub fn partition_name(ground: &GroundSet, blocks: &[crate::subset::Subset]) -> String {
    let parts: Vec<String> =
        blocks.iter().map(|b| b.points().map(|p| ground.label(p)).collect::<Vec<_>>().concat()).collect();
    format!("{{{}}}", parts.join("|"))
}

/// Every sigma-algebra on `1..=max_points` labeled points, one per set partition.
pub fn sweep_spaces(max_points: usize) -> Result<Vec<(String, MeasurableSpace)>> {
    if !(1..=MAX_SWEEP_POINTS).contains(&max_points) {
        return Err(Error::InputShape(format!("max points must lie in 1..={MAX_SWEEP_POINTS}, got {max_points}")));
    }
    let mut out = Vec::new();
    for n in 1..=max_points {
        let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let ground = GroundSet::with_labels(labels)?;
        for blocks in set_partitions(n) {
            let algebra = crate::space::SigmaAlgebra::from_partition(&ground, &blocks)?;
            out.push((partition_name(&ground, &blocks), MeasurableSpace::new(algebra)));
        }
    }
    Ok(out)
}

/// Audits every swept space, then `M220` and `M295` across all pairs.
pub fn run_sweep(max_points: usize, options: &AuditOptions) -> Result<AuditReport> {
    options.validate()?;
    let spaces = sweep_spaces(max_points)?;
    let mut c = Collector { options, entries: Vec::new() };
    for (i, (name, space)) in spaces.iter().enumerate() {
        audit_space_into(&mut c, i, name, space, false)?;
    }
    let pairs_index = spaces.len();
    let doc = String::new;
    c.run("M220", pairs_index, "pairs", doc, || {
        let mut t = Tally::new();
        for (i, (na, a)) in spaces.iter().enumerate() {
            for (nb, b) in &spaces[i..] {
                if let Some(v) = audit_rings_determine_spaces(a, b)? {
                    t.absorb(Verdict { checks: v.checks, witness: v.witness.map(|w| format!("{na} vs {nb}: {w}")) });
                }
            }
        }
        done(t.finish())
    })?;
    c.run("M295", pairs_index, "pairs", doc, || {
        let mut t = Tally::new();
        for (na, a) in &spaces {
            let q = t_quotient(a, &Sample::patterns_only(a)?)?;
            for (nb, b) in spaces.iter().filter(|(_, b)| b.is_t_measurable()) {
                let rings = rings_isomorphic(a, b);
                let homeo = spaces_homeomorphic(&q.space, b)?.exists();
                t.check(rings == homeo, || format!("{na} vs {nb}: M(X) ≅ M(Y) is {rings}, X/∼ ≅ Y is {homeo}"));
            }
        }
        done(t.finish())
    })?;
    Ok(finish(options, spaces.into_iter().map(|(n, _)| n).collect(), c.entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_names() {
        let names: Vec<String> = sweep_spaces(3).unwrap().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names.len(), 1 + 2 + 5);
        assert!(names.contains(&"{a|bc}".to_string()));
        assert!(names.contains(&"{abc}".to_string()));
        assert!(sweep_spaces(6).is_err());
        assert!(sweep_spaces(0).is_err());
    }

    #[test]
    fn unknown_props_rejected() {
        let opts = AuditOptions { props: Some(vec!["M999".into()]), ..Default::default() };
        assert_eq!(opts.validate(), Err(Error::UnknownProposition("M999".into())));
    }

    #[test]
    fn filtered_audit_skips_stone_map() {
        let (name, space) = sweep_spaces(3).unwrap().into_iter().find(|(n, _)| n == "{a|bc}").unwrap();
        let opts = AuditOptions { props: Some(vec!["M215".into()]), ..Default::default() };
        let report = audit_space(&name, &space, &opts).unwrap();
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].status, Status::Skipped);
    }

    #[test]
    fn full_audit_on_small_sweep() {
        let report = run_sweep(2, &AuditOptions { random_count: 20, ..Default::default() }).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.spaces.len(), 3);
    }

    #[test]
    fn space_doc_lists_atoms() {
        let (name, space) = sweep_spaces(3).unwrap().into_iter().find(|(n, _)| n == "{a|bc}").unwrap();
        assert_eq!(
            space_doc(&name, &space),
            "name = \"{a|bc}\"\npoints = [\"a\", \"b\", \"c\"]\ngenerators = [[\"a\"], [\"b\", \"c\"]]\n"
        );
    }
}
