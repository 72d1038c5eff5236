//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use measring::audit::{run_sweep, sweep_spaces, AuditOptions, Status};
use measring::ideal::{maximal_ideals, z_image, z_preimage};
use measring::lattice::{enumerate_filters, is_ultrafilter};
use measring::quotient::{audit_quotient, t_quotient};
use measring::ring::RingContext;
use measring::sample::{Sample, DEFAULT_RANDOM_COUNT, DEFAULT_SEED};
use measring::spectrum::{audit_stone_map, rings_isomorphic, spaces_homeomorphic, spectrum};
use measring::{GroundSet, MeasurableSpace, SigmaAlgebra, Subset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: measring::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn swept() -> Result<Vec<(String, MeasurableSpace)>, String> {
    core(sweep_spaces(4))
}

fn context(space: &MeasurableSpace) -> Result<RingContext, String> {
    core(RingContext::new(space, core(Sample::new(space, DEFAULT_SEED, DEFAULT_RANDOM_COUNT))?))
}

fn sorted_masks(space: &MeasurableSpace) -> Vec<u64> {
    let mut m: Vec<u64> = space.sets().iter().map(Subset::bits).collect();
    m.sort_unstable();
    m
}

fn sweep_audit() -> Outcome {
    let spaces = swept()?;
    for n in 1..=4 {
        let got: BTreeSet<Vec<u64>> =
            spaces.iter().filter(|(_, s)| s.ground().size() == n).map(|(_, s)| sorted_masks(s)).collect();
        let count = spaces.iter().filter(|(_, s)| s.ground().size() == n).count();
        ensure(count == oracle::restricted_growth_strings(n).len(), || format!("{count} spaces on {n} points"))?;
        ensure(got == oracle::partition_algebras(n), || format!("algebras on {n} points differ from the oracle"))?;
    }
    ensure(spaces.len() == 23, || format!("{} spaces", spaces.len()))?;
    let start = Instant::now();
    let report = core(run_sweep(4, &AuditOptions::default()))?;
    let elapsed = start.elapsed();
    ensure(report.passed(), || {
        let e = report.entries.iter().find(|e| e.status == Status::Fail).expect("a failure");
        format!("{} on {}: {}", e.id, e.space, e.detail.clone().unwrap_or_default())
    })?;
    for e in report.entries.iter().filter(|e| e.status == Status::Skipped) {
        let reason = e.detail.clone().unwrap_or_default();
        ensure(reason.contains("not T-measurable"), || format!("{} on {} skipped: {reason}", e.id, e.space))?;
    }
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "23 spaces, {} passed, {} skipped, {:.1}s",
        report.count(Status::Pass),
        report.count(Status::Skipped),
        elapsed.as_secs_f64()
    ))
}

fn galois_bijection() -> Outcome {
    let mut filters = 0;
    for (name, space) in swept()? {
        let ctx = context(&space)?;
        for v in [core(ctx.galois_maps())?, core(ctx.galois_bijection())?] {
            ensure(v.passed(), || format!("{name}: {}", v.witness.clone().unwrap_or_default()))?;
        }
        for f in enumerate_filters(&space) {
            let back = core(z_image(&core(z_preimage(&f))?))?;
            ensure(back == f, || format!("{name}: Z[Z⁻¹[{f:?}]] = {back:?}"))?;
            filters += 1;
        }
        let maximal = core(maximal_ideals(&space))?.len();
        let ultra = enumerate_filters(&space).iter().filter(|f| is_ultrafilter(f)).count();
        ensure(maximal == space.atom_count() && ultra == maximal, || {
            format!("{name}: {maximal} maximal ideals, {ultra} ultrafilters, {} atoms", space.atom_count())
        })?;
    }
    Ok(format!("{filters} filters round-trip"))
}

fn prime_equivalences() -> Outcome {
    let mut filters = 0;
    for (name, space) in swept()? {
        let ctx = context(&space)?;
        for k in 0..ctx.ideals().len() {
            let a = ctx.prime_audit(k);
            ensure(a.agree(), || format!("{name}: conditions disagree on {}: {a:?}", ctx.ideals()[k].render()))?;
            filters += 1;
        }
        for v in [ctx.prime_conditions(), ctx.prime_filter_correspondence()] {
            ensure(v.passed(), || format!("{name}: {}", v.witness.clone().unwrap_or_default()))?;
        }
    }
    Ok(format!("agreement on {filters} of {filters} filters"))
}

fn compactness_equivalences() -> Outcome {
    for (name, space) in swept()? {
        let ctx = context(&space)?;
        let c = core(ctx.compactness_conditions())?;
        ensure(c.all().iter().all(|&b| b), || format!("{name}: {c:?}"))?;
        let v = core(ctx.compactness_equivalences())?;
        ensure(v.passed(), || format!("{name}: {}", v.witness.clone().unwrap_or_default()))?;
    }
    Ok("all five conditions hold on 23 spaces".into())
}

fn quotient_theorem() -> Outcome {
    let mut functions = 0;
    for (name, space) in swept()? {
        let sample = core(Sample::new(&space, DEFAULT_SEED, DEFAULT_RANDOM_COUNT))?;
        ensure(sample.random().len() >= 100, || format!("{name}: {} random functions", sample.random().len()))?;
        let v = core(audit_quotient(&space, &sample))?;
        ensure(v.passed(), || format!("{name}: {}", v.witness.clone().unwrap_or_default()))?;
        let q = core(t_quotient(&space, &sample))?;
        ensure(q.space.is_t_measurable(), || format!("{name}: X/∼ is not T-measurable"))?;
        for f in sample.functions() {
            let back = core(q.theta.pull_back(&core(q.lift(f))?))?;
            ensure(&back == f, || format!("{name}: h_f∘θ ≠ f for {}", f.render()))?;
            functions += 1;
        }
        for a in space.sets() {
            ensure(q.space.contains(&q.theta.image(a)), || format!("{name}: θ({}) not measurable", space.render(a)))?;
        }
        for b in q.space.sets() {
            ensure(space.contains(&q.theta.preimage(b)), || {
                format!("{name}: θ⁻¹({}) not measurable", q.space.render(b))
            })?;
        }
    }
    Ok(format!("h_f∘θ = f on {functions} functions"))
}

fn labeled(labels: &[&str], generators: &[&[&str]]) -> Result<MeasurableSpace, String> {
    let ground = core(GroundSet::with_labels(labels.iter().map(|s| s.to_string()).collect()))?;
    let gens: Vec<Subset> = generators.iter().map(|g| core(ground.subset_of_labels(g))).collect::<Result<_, _>>()?;
    core(MeasurableSpace::generated(&ground, &gens))
}

fn stone_audit() -> Outcome {
    let spaces = swept()?;
    let t: Vec<&(String, MeasurableSpace)> = spaces.iter().filter(|(_, s)| s.is_t_measurable()).collect();
    for (name, space) in &t {
        let spec = core(spectrum(space, &core(Sample::patterns_only(space))?))?;
        ensure(spec.phi.as_ref().is_some_and(|phi| phi.is_homeomorphism()), || {
            format!("{name}: φ is not a homeomorphism")
        })?;
        match core(audit_stone_map(space, &core(Sample::patterns_only(space))?))? {
            Ok(v) => ensure(v.passed(), || format!("{name}: {}", v.witness.clone().unwrap_or_default()))?,
            Err(reason) => return Err(format!("{name}: skipped: {reason}")),
        }
    }
    let mut pairs = 0;
    for (nx, x) in &t {
        for (ny, y) in &t {
            let homeo = core(spaces_homeomorphic(x, y))?.exists();
            ensure(rings_isomorphic(x, y) == homeo, || format!("{nx} vs {ny}"))?;
            pairs += 1;
        }
    }
    let split = labeled(&["a", "b", "c"], &[&["a"]])?;
    let pair = labeled(&["x", "y"], &[&["x"]])?;
    ensure(!split.is_t_measurable(), || "{a|bc} is T-measurable".into())?;
    ensure(rings_isomorphic(&split, &pair), || "rings of {a|bc} and the 2-point power set differ".into())?;
    ensure(!core(spaces_homeomorphic(&split, &pair))?.exists(), || "{a|bc} homeomorphic to 2 points".into())?;
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");
    let out = Command::new(env!("CARGO_BIN_EXE_measring"))
        .args(["iso", &format!("{fixtures}/split.toml"), &format!("{fixtures}/pair.toml")])
        .output()
        .map_err(|e| e.to_string())?;
    let first = String::from_utf8_lossy(&out.stdout).lines().next().unwrap_or_default().to_string();
    ensure(first == "rings: YES, spaces: NO, note: first space not T-measurable", || format!("iso printed '{first}'"))?;
    Ok(format!("{} T-measurable spaces, {pairs} pairs, counterexample confirmed", t.len()))
}

fn oracle_equivalences() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let masks: Vec<u64> = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(0..1u64 << n)).collect();
        let ground = core(GroundSet::new(n))?;
        let gens: Vec<Subset> = masks.iter().map(|&m| core(Subset::from_bits(n, m))).collect::<Result<_, _>>()?;
        let got: BTreeSet<u64> =
            core(SigmaAlgebra::generate(&ground, &gens))?.sets().iter().map(Subset::bits).collect();
        ensure(got == oracle::closure_oracle(n, &masks), || format!("generators {masks:?} on {n} points"))?;
    }
    let spaces = core(sweep_spaces(5))?;
    for (nx, x) in &spaces {
        for (ny, y) in &spaces {
            let decided = core(spaces_homeomorphic(x, y))?.exists();
            ensure(decided == oracle::homeomorphic_by_search(x, y), || format!("{nx} vs {ny}"))?;
        }
    }
    Ok(format!("200 families, {} space pairs", spaces.len() * spaces.len()))
}

fn determinism() -> Outcome {
    let run = |format: &str| {
        Command::new(env!("CARGO_BIN_EXE_measring"))
            .args(["sweep", "--max-points", "4", "--seed", "7", "--format", format])
            .output()
            .map_err(|e| e.to_string())
    };
    for format in ["text", "structured"] {
        let (a, b) = (run(format)?, run(format)?);
        ensure(a.status.success() && b.status.success(), || format!("sweep exited with {:?}", a.status.code()))?;
        ensure(a.stdout == b.stdout, || format!("{format} reports differ"))?;
        ensure(!a.stdout.is_empty(), || "empty report".into())?;
    }
    Ok("text and structured reports byte-identical".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("sweep audit over all 23 spaces on 1-4 points", sweep_audit),
        ("Galois bijection and |max| = |atoms|", galois_bijection),
        ("prime ideal conditions and prime filter correspondence", prime_equivalences),
        ("five-way compactness equivalence", compactness_equivalences),
        ("quotient theorem", quotient_theorem),
        ("Stone map, rings vs spaces, and the counterexample pair", stone_audit),
        ("generation and homeomorphism oracles", oracle_equivalences),
        ("deterministic sweep reports", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
