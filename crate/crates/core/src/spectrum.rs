//! The maximal spectrum with its measurable structure, and the deciders for
//! homeomorphism of spaces and isomorphism of their function rings.

use crate::check::{Tally, Verdict};
use crate::error::{Error, Result};
use crate::function::MeasurableFn;
use crate::ideal::{maximal_ideals, point_ideal, MaxIdealPoint};
use crate::quotient::{t_quotient, SpaceMorphism};
use crate::sample::Sample;
use crate::space::MeasurableSpace;
use crate::subset::{GroundSet, Subset};

/// `max(M(X))` with the sigma-algebra generated by the sets `ℱ(f)`.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub points: Vec<MaxIdealPoint>,
    pub space: MeasurableSpace,
    /// `x ↦ M_x`, present when `X` is T-measurable.
    pub phi: Option<SpaceMorphism>,
    /// Why `phi` is absent.
    pub skipped: Option<String>,
}

impl Spectrum {
    /// `ℱ(f) = {M : f ∈ M}` as a subset of the spectrum's points.
    pub fn fiber(&self, f: &MeasurableFn) -> Subset {
        Subset::from_points(
            self.points.len(),
            self.points.iter().enumerate().filter(|(_, m)| m.ideal.contains(f)).map(|(i, _)| i),
        )
    }
}

fn point_label(space: &MeasurableSpace, kernel: &Subset) -> String {
    let labels: Vec<&str> = kernel.points().map(|p| space.ground().label(p)).collect();
    match labels.as_slice() {
        [one] => format!("M_{one}"),
        _ => format!("M_{{{}}}", labels.join(",")),
    }
}

fn inseparable_reason(space: &MeasurableSpace) -> Option<String> {
    space.inseparable_pair().map(|(x, y)| {
        format!(
            "space is not T-measurable: {} and {} are inseparable",
            space.ground().label(x),
            space.ground().label(y)
        )
    })
}

/// Builds the spectrum from the sampled functions. The map `φ: x ↦ M_x` is
/// built only for T-measurable spaces (finite spaces are always compact).
pub fn spectrum(space: &MeasurableSpace, sample: &Sample) -> Result<Spectrum> {
    let points = maximal_ideals(space)?;
    let labels: Vec<String> = points.iter().map(|m| point_label(space, &m.kernel())).collect();
    let ground = GroundSet::with_labels(labels)?;
    let mut fibers: Vec<Subset> = sample
        .functions()
        .iter()
        .map(|f| {
            Subset::from_points(
                points.len(),
                points.iter().enumerate().filter(|(_, m)| m.ideal.contains(f)).map(|(i, _)| i),
            )
        })
        .collect();
    fibers.sort();
    fibers.dedup();
    let spec_space = MeasurableSpace::generated(&ground, &fibers)?;
    let mut spec = Spectrum { points, space: spec_space, phi: None, skipped: inseparable_reason(space) };
    if spec.skipped.is_none() {
        let mut map = Vec::with_capacity(space.size());
        for x in 0..space.size() {
            let mx = point_ideal(space, x)?;
            let i =
                spec.points.iter().position(|m| m.ideal == mx.ideal).ok_or_else(|| {
                    Error::Inconsistent(format!("M_{} is not in the spectrum", space.ground().label(x)))
                })?;
            map.push(i);
        }
        spec.phi = Some(SpaceMorphism::new(space, &spec.space, map)?);
    }
    Ok(spec)
}

/// `ℱ(1) = ∅`, `ℱ(0)` is everything, complements and unions of fibers are
/// fibers, and the fibers themselves form the spectrum's algebra, which
/// separates points.
pub fn audit_spectrum_structure(space: &MeasurableSpace, sample: &Sample) -> Result<Verdict> {
    let spec = spectrum(space, sample)?;
    let mut t = Tally::new();
    let k = spec.points.len();
    let full = Subset::full(k);
    t.check(spec.fiber(&MeasurableFn::one(space)).is_empty(), || "ℱ(1) ≠ ∅".into());
    t.check(spec.fiber(&MeasurableFn::zero(space)) == full, || "ℱ(0) ≠ max(M(X))".into());
    let fs = sample.patterns();
    let mut fibers = Vec::with_capacity(fs.len());
    for f in fs {
        let ff = spec.fiber(f);
        let chi_z = MeasurableFn::characteristic(space, &f.zero_set())?;
        t.check(ff.complement() == spec.fiber(&chi_z), || format!("ℱ(f)^c ≠ ℱ(χ_Z(f)) for f = {}", f.render()));
        fibers.push(ff);
    }
    for (i, f) in fs.iter().enumerate() {
        for (j, g) in fs.iter().enumerate() {
            let both = f.cozero().intersection(&g.cozero());
            let chi = MeasurableFn::characteristic(space, &both)?;
            t.check(fibers[i].union(&fibers[j]) == spec.fiber(&chi), || {
                format!("ℱ(f) ∪ ℱ(g) ≠ ℱ(χ_(coz f ∩ coz g)) for f = {}, g = {}", f.render(), g.render())
            });
        }
    }
    fibers.sort();
    fibers.dedup();
    t.check(fibers.as_slice() == spec.space.sets(), || "the sets ℱ(f) are not the spectrum's algebra".into());
    t.check(spec.space.is_t_measurable(), || "spectrum is not T-measurable".into());
    Ok(t.finish())
}

/// `φ: x ↦ M_x` is a homeomorphism with `φ[Z(f)] = ℱ(f)`. `None` when `X`
/// is not T-measurable, with the reason.
pub fn audit_stone_map(space: &MeasurableSpace, sample: &Sample) -> Result<std::result::Result<Verdict, String>> {
    let spec = spectrum(space, sample)?;
    let Some(phi) = &spec.phi else {
        return Ok(Err(spec.skipped.unwrap_or_default()));
    };
    let mut t = Tally::new();
    t.check(space.is_compact_space()?, || "space is not compact".into());
    t.check(phi.is_homeomorphism(), || format!("φ is not a homeomorphism: {phi:?}"));
    for f in sample.functions() {
        let fib = spec.fiber(f);
        t.check(phi.image(&f.zero_set()) == fib, || format!("φ[Z(f)] ≠ ℱ(f) for f = {}", f.render()));
        t.check(phi.preimage(&fib) == f.zero_set(), || format!("φ⁻¹(ℱ(f)) ≠ Z(f) for f = {}", f.render()));
    }
    Ok(Ok(t.finish()))
}

/// Sorted multiset of atom sizes.
pub fn atom_sizes(space: &MeasurableSpace) -> Vec<usize> {
    let mut v: Vec<usize> = space.atoms().iter().map(Subset::len).collect();
    v.sort_unstable();
    v
}

#[derive(Clone, Debug)]
pub enum Homeomorphism {
    Yes(SpaceMorphism),
    /// Atom-size multisets differ; the certificate names both.
    No {
        certificate: String,
    },
}

impl Homeomorphism {
    pub fn exists(&self) -> bool {
        matches!(self, Homeomorphism::Yes(_))
    }
}

/// Decides homeomorphism by comparing atom-size multisets; on a match the
/// witness pairs atoms ordered by (size, least point) and points in
/// increasing order, and is verified.
pub fn spaces_homeomorphic(x: &MeasurableSpace, y: &MeasurableSpace) -> Result<Homeomorphism> {
    let (sx, sy) = (atom_sizes(x), atom_sizes(y));
    if sx != sy {
        return Ok(Homeomorphism::No { certificate: format!("atom sizes {sx:?} vs {sy:?}") });
    }
    let order = |s: &MeasurableSpace| {
        let mut atoms = s.atoms().to_vec();
        atoms.sort_by_key(|a| (a.len(), a.first()));
        atoms
    };
    let mut map = vec![0; x.size()];
    for (ax, ay) in order(x).iter().zip(order(y).iter()) {
        for (p, q) in ax.points().zip(ay.points()) {
            map[p] = q;
        }
    }
    let m = SpaceMorphism::new(x, y, map)?;
    if !m.is_homeomorphism() {
        return Err(Error::Inconsistent(format!("atom matching is not a homeomorphism: {m:?}")));
    }
    Ok(Homeomorphism::Yes(m))
}

/// `M(X) ≅ M(Y)`: both rings are `ℝ^k` with `k` the atom count.
pub fn rings_isomorphic(x: &MeasurableSpace, y: &MeasurableSpace) -> bool {
    x.atom_count() == y.atom_count()
}

/// Number of `e` with `e·e = e` among the sign patterns; equals `|𝒜|`.
pub fn idempotent_count(space: &MeasurableSpace) -> Result<usize> {
    let mut count = 0;
    for e in Sample::patterns_only(space)?.functions() {
        if &e.mul(e)? == e {
            count += 1;
        }
    }
    Ok(count)
}

/// Checks the atom-count decision: equal counts yield a ring bijection
/// on sign patterns (atom `i` of `Y` to atom `i` of `X`) that preserves
/// `+`, `·` and `1`; unequal counts give unequal idempotent counts.
pub fn audit_ring_isomorphism(x: &MeasurableSpace, y: &MeasurableSpace) -> Result<Verdict> {
    let mut t = Tally::new();
    let (ix, iy) = (idempotent_count(x)?, idempotent_count(y)?);
    if !rings_isomorphic(x, y) {
        t.check(ix != iy, || format!("different atom counts but {ix} idempotents each"));
        return Ok(t.finish());
    }
    let transport = |g: &MeasurableFn| -> Result<MeasurableFn> {
        let per_atom: Vec<_> = (0..y.atom_count()).map(|i| g.atom_value(i).clone()).collect();
        MeasurableFn::from_atom_values(x, &per_atom)
    };
    let gs = Sample::patterns_only(y)?;
    let images: Vec<MeasurableFn> = gs.functions().iter().map(transport).collect::<Result<_>>()?;
    let mut distinct = images.clone();
    distinct.sort_by_key(|f| f.render());
    distinct.dedup();
    t.check(distinct.len() == images.len(), || "transport is not injective".into());
    let targets = Sample::patterns_only(x)?;
    t.check(targets.functions().iter().all(|f| images.contains(f)), || "transport is not onto".into());
    t.check(transport(&MeasurableFn::one(y))? == MeasurableFn::one(x), || "transport does not fix 1".into());
    for (a, ga) in gs.functions().iter().enumerate() {
        for (b, gb) in gs.functions().iter().enumerate() {
            let sum = transport(&ga.add(gb)?)? == images[a].add(&images[b])?;
            let prod = transport(&ga.mul(gb)?)? == images[a].mul(&images[b])?;
            t.check(sum && prod, || format!("transport fails at {}, {}", ga.render(), gb.render()));
        }
    }
    t.check(ix == iy, || format!("isomorphic rings with {ix} and {iy} idempotents"));
    Ok(t.finish())
}

/// For compact T-measurable `X`, `Y`: homeomorphic iff ring-isomorphic.
/// `None` when either space is not T-measurable.
pub fn audit_rings_determine_spaces(x: &MeasurableSpace, y: &MeasurableSpace) -> Result<Option<Verdict>> {
    if !x.is_t_measurable() || !y.is_t_measurable() || !x.is_compact_space()? || !y.is_compact_space()? {
        return Ok(None);
    }
    let mut t = Tally::new();
    let rings = rings_isomorphic(x, y);
    let spaces = spaces_homeomorphic(x, y)?.exists();
    t.check(rings == spaces, || format!("rings isomorphic = {rings}, spaces homeomorphic = {spaces}"));
    t.absorb(audit_ring_isomorphism(x, y)?);
    Ok(Some(t.finish()))
}

/// `X/∼` is compact and T-measurable with `M(X) ≅ M(X/∼)`.
pub fn audit_compact_quotient(space: &MeasurableSpace, sample: &Sample) -> Result<Verdict> {
    let q = t_quotient(space, sample)?;
    let mut t = Tally::new();
    t.check(q.space.is_compact_space()?, || "X/∼ is not compact".into());
    t.check(q.space.is_t_measurable(), || "X/∼ is not T-measurable".into());
    t.check(rings_isomorphic(space, &q.space), || "M(X) and M(X/∼) differ in atom count".into());
    t.absorb(audit_ring_isomorphism(space, &q.space)?);
    Ok(t.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::DEFAULT_SEED;

    fn a_bc() -> MeasurableSpace {
        let g = GroundSet::with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        MeasurableSpace::generated(&g, &[g.subset_of_labels(&["a"]).unwrap()]).unwrap()
    }

    fn power(n: usize) -> MeasurableSpace {
        MeasurableSpace::discrete(&GroundSet::new(n).unwrap()).unwrap()
    }

    fn sample(s: &MeasurableSpace) -> Sample {
        Sample::new(s, DEFAULT_SEED, 20).unwrap()
    }

    #[test]
    fn spectrum_of_two_point_power_set() {
        let s = power(2);
        let spec = spectrum(&s, &sample(&s)).unwrap();
        assert_eq!(spec.points.len(), 2);
        assert_eq!(spec.space.ground().labels(), ["M_0", "M_1"]);
        assert!(spec.phi.as_ref().unwrap().is_homeomorphism());
        assert!(audit_stone_map(&s, &sample(&s)).unwrap().unwrap().passed());
        assert!(audit_spectrum_structure(&s, &sample(&s)).unwrap().passed());
    }

    #[test]
    fn spectrum_without_separation_skips_phi() {
        let s = a_bc();
        let spec = spectrum(&s, &sample(&s)).unwrap();
        assert_eq!(spec.space.ground().labels(), ["M_a", "M_{b,c}"]);
        assert!(spec.phi.is_none());
        let reason = audit_stone_map(&s, &sample(&s)).unwrap().unwrap_err();
        assert!(reason.contains("b and c"));
        assert!(audit_spectrum_structure(&s, &sample(&s)).unwrap().passed());
    }

    #[test]
    fn counterexample_pair() {
        let (x, y) = (a_bc(), power(2));
        assert!(rings_isomorphic(&x, &y));
        match spaces_homeomorphic(&x, &y).unwrap() {
            Homeomorphism::No { certificate } => assert_eq!(certificate, "atom sizes [1, 2] vs [1, 1]"),
            Homeomorphism::Yes(_) => panic!("not homeomorphic"),
        }
        assert!(audit_ring_isomorphism(&x, &y).unwrap().passed());
        assert!(audit_rings_determine_spaces(&x, &y).unwrap().is_none());
    }

    #[test]
    fn relabeled_power_sets_are_homeomorphic() {
        let g = GroundSet::with_labels(vec!["x".into(), "y".into(), "z".into()]).unwrap();
        let other = MeasurableSpace::discrete(&g).unwrap();
        assert!(spaces_homeomorphic(&power(3), &other).unwrap().exists());
        assert!(!rings_isomorphic(&power(2), &power(3)));
        assert!(audit_ring_isomorphism(&power(2), &power(3)).unwrap().passed());
        assert!(audit_rings_determine_spaces(&power(3), &other).unwrap().unwrap().passed());
        assert_eq!(idempotent_count(&power(3)).unwrap(), 8);
    }

    #[test]
    fn quotient_is_compact_separated_and_isomorphic() {
        let s = a_bc();
        assert!(audit_compact_quotient(&s, &sample(&s)).unwrap().passed());
    }
}
