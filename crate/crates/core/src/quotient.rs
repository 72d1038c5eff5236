//! Maps between spaces, weak sigma-algebras and the T-measurable quotient.

use std::fmt;

use rand::Rng;

use crate::check::{Tally, Verdict};
use crate::error::{Error, Result};
use crate::function::{level_sets, MeasurableFn};
use crate::rational::Rational;
use crate::sample::Sample;
use crate::space::{MeasurableSpace, SigmaAlgebra};
use crate::subset::{GroundSet, Subset};

/// A total map between ground sets with recomputed structural flags.
#[derive(Clone)]
pub struct SpaceMorphism {
    source: MeasurableSpace,
    target: MeasurableSpace,
    map: Vec<usize>,
    forward_measurable: bool,
    backward_measurable: bool,
    injective: bool,
    surjective: bool,
}

impl SpaceMorphism {
    pub fn new(source: &MeasurableSpace, target: &MeasurableSpace, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::InputShape(format!(
                "map has {} entries for {} source points",
                map.len(),
                source.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.size()) {
            return Err(Error::InputShape(format!("map sends a point to index {bad} outside the target")));
        }
        let mut m = SpaceMorphism {
            source: source.clone(),
            target: target.clone(),
            map,
            forward_measurable: false,
            backward_measurable: false,
            injective: false,
            surjective: false,
        };
        m.forward_measurable = source.sets().iter().all(|a| target.contains(&m.image(a)));
        m.backward_measurable = target.sets().iter().all(|b| source.contains(&m.preimage(b)));
        let mut hit = vec![0usize; target.size()];
        for &y in &m.map {
            hit[y] += 1;
        }
        m.injective = hit.iter().all(|&c| c <= 1);
        m.surjective = hit.iter().all(|&c| c >= 1);
        Ok(m)
    }

    pub fn source(&self) -> &MeasurableSpace {
        &self.source
    }

    pub fn target(&self) -> &MeasurableSpace {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn image(&self, a: &Subset) -> Subset {
        Subset::from_points(self.target.size(), a.points().map(|x| self.map[x]))
    }

    pub fn preimage(&self, b: &Subset) -> Subset {
        Subset::from_points(self.source.size(), (0..self.map.len()).filter(|&x| b.contains(self.map[x])))
    }

    /// Images of measurable sets are measurable.
    pub fn forward_measurable(&self) -> bool {
        self.forward_measurable
    }

    /// Preimages of measurable sets are measurable.
    pub fn backward_measurable(&self) -> bool {
        self.backward_measurable
    }

    pub fn injective(&self) -> bool {
        self.injective
    }

    pub fn surjective(&self) -> bool {
        self.surjective
    }

    pub fn is_bijective(&self) -> bool {
        self.injective && self.surjective
    }

    /// Bijective with `A ∈ 𝒜₁ ⇔ f(A) ∈ 𝒜₂`.
    pub fn is_homeomorphism(&self) -> bool {
        self.is_bijective() && self.forward_measurable && self.backward_measurable
    }

    /// `(source label, target label)` for every source point.
    pub fn pairs(&self) -> Vec<(String, String)> {
        self.map
            .iter()
            .enumerate()
            .map(|(x, &y)| (self.source.ground().label(x).to_string(), self.target.ground().label(y).to_string()))
            .collect()
    }

    /// `g ∘ f` for `g` on the target.
    pub fn pull_back(&self, g: &MeasurableFn) -> Result<MeasurableFn> {
        if !g.space().same_as(&self.target) {
            return Err(Error::SpaceMismatch);
        }
        MeasurableFn::new(&self.source, self.map.iter().map(|&y| g.value(y).clone()).collect())
    }

    pub fn render(&self) -> String {
        let body: Vec<String> = self.pairs().into_iter().map(|(a, b)| format!("{a} ↦ {b}")).collect();
        body.join(", ")
    }
}

impl fmt::Debug for SpaceMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SpaceMorphism({}; forward={}, backward={}, injective={}, surjective={})",
            self.render(),
            self.forward_measurable,
            self.backward_measurable,
            self.injective,
            self.surjective
        )
    }
}

/// Smallest sigma-algebra making every function in `functions` measurable.
///
/// Each function takes finitely many values, so preimages of open sets are
/// exactly the unions of its level sets.
pub fn weak_sigma_algebra(ground: &GroundSet, functions: &[Vec<Rational>]) -> Result<SigmaAlgebra> {
    let n = ground.size();
    let mut generators = Vec::new();
    for values in functions {
        if values.len() != n {
            return Err(Error::InputShape(format!(
                "function with {} values on a ground set of {n} points",
                values.len()
            )));
        }
        generators.extend(level_sets(n, values));
    }
    SigmaAlgebra::generate(ground, &generators)
}

/// Every function is measurable for `algebra`, and every atom of `algebra`
/// is an intersection of level sets, so nothing smaller works.
pub fn is_weak_sigma_algebra(algebra: &SigmaAlgebra, functions: &[Vec<Rational>]) -> bool {
    let n = algebra.ground().size();
    let levels: Vec<Vec<Subset>> = functions.iter().map(|v| level_sets(n, v)).collect();
    let measurable = levels.iter().flatten().all(|l| algebra.contains(l));
    let minimal = algebra.atoms().iter().all(|atom| {
        let x = atom.first().expect("atoms are nonempty");
        let cell = levels
            .iter()
            .map(|ls| *ls.iter().find(|l| l.contains(x)).expect("levels cover"))
            .fold(Subset::full(n), |acc, l| acc.intersection(&l));
        cell == *atom
    });
    measurable && minimal
}

/// Classes of `x ∼ y ⇔ f(x) = f(y)` for all `f`, decided on `sample`.
pub fn indistinguishability(space: &MeasurableSpace, sample: &Sample) -> Vec<Subset> {
    let n = space.size();
    let mut classes: Vec<Subset> = Vec::new();
    for x in 0..n {
        match classes.iter_mut().find(|c| {
            let y = c.first().expect("classes are nonempty");
            sample.functions().iter().all(|f| f.value(x) == f.value(y))
        }) {
            Some(c) => *c = c.with(x),
            None => classes.push(Subset::singleton(n, x)),
        }
    }
    classes
}

fn class_label(space: &MeasurableSpace, class: &Subset) -> String {
    let labels: Vec<&str> = class.points().map(|p| space.ground().label(p)).collect();
    format!("[{}]", labels.join(","))
}

/// `X/∼` with the weak sigma-algebra of `{h_f}` and the projection `θ`.
#[derive(Clone, Debug)]
pub struct TQuotient {
    pub space: MeasurableSpace,
    pub theta: SpaceMorphism,
    pub classes: Vec<Subset>,
}

impl TQuotient {
    /// `h_f([x]) = f(x)`.
    pub fn lift(&self, f: &MeasurableFn) -> Result<MeasurableFn> {
        let source = self.theta.source();
        if !f.space().same_as(source) {
            return Err(Error::SpaceMismatch);
        }
        let mut values = Vec::with_capacity(self.classes.len());
        for class in &self.classes {
            let x = class.first().expect("classes are nonempty");
            if class.points().any(|y| f.value(y) != f.value(x)) {
                return Err(Error::Inconsistent(format!(
                    "{} is not constant on {}",
                    f.render(),
                    class_label(source, class)
                )));
            }
            values.push(f.value(x).clone());
        }
        MeasurableFn::new(&self.space, values)
    }
}

/// Builds the quotient by indistinguishability, with the algebra on classes
/// induced by the lifts `h_f` of every sampled function.
pub fn t_quotient(space: &MeasurableSpace, sample: &Sample) -> Result<TQuotient> {
    let classes = indistinguishability(space, sample);
    let labels: Vec<String> = classes.iter().map(|c| class_label(space, c)).collect();
    let ground = GroundSet::with_labels(labels)?;
    let lifts: Vec<Vec<Rational>> = sample
        .functions()
        .iter()
        .map(|f| classes.iter().map(|c| f.value(c.first().expect("nonempty")).clone()).collect())
        .collect();
    let quotient = MeasurableSpace::new(weak_sigma_algebra(&ground, &lifts)?);
    let mut map = vec![0; space.size()];
    for (i, c) in classes.iter().enumerate() {
        for p in c.points() {
            map[p] = i;
        }
    }
    let theta = SpaceMorphism::new(space, &quotient, map)?;
    Ok(TQuotient { space: quotient, theta, classes })
}

/// Indistinguishability classes are the atoms, and every measurable set is
/// the union of the classes of its points.
pub fn audit_indistinguishability(space: &MeasurableSpace, sample: &Sample) -> Verdict {
    let mut t = Tally::new();
    let classes = indistinguishability(space, sample);
    let n = space.size();
    for x in 0..n {
        for y in 0..n {
            let same_class = classes.iter().any(|c| c.contains(x) && c.contains(y));
            let same_atom = space.atom_of(x) == space.atom_of(y);
            t.check(same_class == same_atom, || {
                format!(
                    "{} and {}: ∼ = {same_class}, same atom = {same_atom}",
                    space.ground().label(x),
                    space.ground().label(y)
                )
            });
        }
    }
    for a in space.sets() {
        let union = a
            .points()
            .flat_map(|x| classes.iter().filter(move |c| c.contains(x)))
            .fold(space.empty(), |acc, c| acc.union(c));
        t.check(union == *a, || format!("{} is not a union of classes", space.render(a)));
    }
    t.finish()
}

/// The weak sigma-algebra of the sample regenerates `𝒜`; the empty family
/// gives the trivial algebra.
pub fn audit_weak_sigma_algebra(space: &MeasurableSpace, sample: &Sample) -> Result<Verdict> {
    let mut t = Tally::new();
    let values: Vec<Vec<Rational>> = sample.functions().iter().map(|f| f.values().to_vec()).collect();
    let weak = weak_sigma_algebra(space.ground(), &values)?;
    t.check(&weak == space.algebra(), || "weak sigma-algebra of M(X) differs from 𝒜".into());
    t.check(is_weak_sigma_algebra(&weak, &values), || "weak sigma-algebra is not minimal".into());
    let trivial = weak_sigma_algebra(space.ground(), &[])?;
    t.check(trivial.sets() == [space.empty(), space.full()], || "empty family does not give {∅, X}".into());
    Ok(t.finish())
}

fn random_map<R: Rng>(space: &MeasurableSpace, target_size: usize, rng: &mut R) -> Vec<usize> {
    if rng.gen_bool(0.5) {
        let per_atom: Vec<usize> = (0..space.atom_count()).map(|_| rng.gen_range(0..target_size)).collect();
        (0..space.size()).map(|x| per_atom[space.atom_of(x)]).collect()
    } else {
        (0..space.size()).map(|_| rng.gen_range(0..target_size)).collect()
    }
}

fn random_subset<R: Rng>(width: usize, rng: &mut R) -> Subset {
    Subset::from_points(width, (0..width).filter(|_| rng.gen_bool(0.5)))
}

/// Preimages of a generating family are measurable iff preimages of the
/// whole generated algebra are; checked on `trials` random maps.
pub fn audit_generated_preimages<R: Rng>(space: &MeasurableSpace, trials: usize, rng: &mut R) -> Result<Verdict> {
    let mut t = Tally::new();
    for _ in 0..trials {
        let m = rng.gen_range(1..=4);
        let target = GroundSet::new(m)?;
        let map = random_map(space, m, rng);
        let gens: Vec<Subset> = (0..rng.gen_range(0..=3)).map(|_| random_subset(m, rng)).collect();
        let generated = SigmaAlgebra::generate(&target, &gens)?;
        let pre = |b: &Subset| Subset::from_points(space.size(), (0..space.size()).filter(|&x| b.contains(map[x])));
        let on_gens = gens.iter().all(|g| space.contains(&pre(g)));
        let on_all = generated.sets().iter().all(|b| space.contains(&pre(b)));
        t.check(on_gens == on_all, || format!("map {map:?}: generators {on_gens}, generated algebra {on_all}"));
    }
    Ok(t.finish())
}

/// For `C ⊆ ℝ^Y` with weak algebra `𝒜′`: every `g ∘ f` is measurable iff
/// `f⁻¹(A) ∈ 𝒜` for all `A ∈ 𝒜′`; checked on `trials` random maps.
pub fn audit_composition_measurability<R: Rng>(space: &MeasurableSpace, trials: usize, rng: &mut R) -> Result<Verdict> {
    let mut t = Tally::new();
    for _ in 0..trials {
        let m = rng.gen_range(1..=4);
        let target = GroundSet::new(m)?;
        let map = random_map(space, m, rng);
        let family: Vec<Vec<Rational>> = (0..rng.gen_range(0..=2))
            .map(|_| (0..m).map(|_| Rational::integer(rng.gen_range(-2..=2))).collect())
            .collect();
        let weak = MeasurableSpace::new(weak_sigma_algebra(&target, &family)?);
        let f = SpaceMorphism::new(space, &weak, map.clone())?;
        let compositions =
            family.iter().all(|g| MeasurableFn::new(space, map.iter().map(|&y| g[y].clone()).collect()).is_ok());
        t.check(compositions == f.backward_measurable(), || {
            format!("map {map:?}: g∘f measurable = {compositions}, preimages measurable = {}", f.backward_measurable())
        });
    }
    Ok(t.finish())
}

/// The quotient theorem: `Y` is T-measurable, `θ` is onto, `h_f ∘ θ = f`,
/// `g ↦ g ∘ θ` is a bijective ring homomorphism on the samples, and `θ`
/// maps measurable sets both ways.
pub fn audit_quotient(space: &MeasurableSpace, sample: &Sample) -> Result<Verdict> {
    let q = t_quotient(space, sample)?;
    let theta = &q.theta;
    let mut t = Tally::new();
    t.check(q.space.is_t_measurable(), || {
        let (x, y) = q.space.inseparable_pair().expect("not separated");
        format!("X/∼ does not separate {} and {}", q.space.ground().label(x), q.space.ground().label(y))
    });
    t.check(theta.surjective(), || "θ is not onto".into());
    for f in sample.functions() {
        let h = q.lift(f)?;
        t.check(&theta.pull_back(&h)? == f, || format!("h_f ∘ θ ≠ f for f = {}", f.render()));
    }
    let y_patterns = Sample::patterns_only(&q.space)?;
    let gs = y_patterns.functions();
    for g in gs {
        let eta = theta.pull_back(g)?;
        t.check(!eta.is_zero() || g.is_zero(), || format!("η kills {}", g.render()));
    }
    for g1 in gs {
        let e1 = theta.pull_back(g1)?;
        for g2 in gs {
            let e2 = theta.pull_back(g2)?;
            let sum = theta.pull_back(&g1.add(g2)?)? == e1.add(&e2)?;
            let prod = theta.pull_back(&g1.mul(g2)?)? == e1.mul(&e2)?;
            t.check(sum && prod, || {
                format!("η is not additive and multiplicative at {}, {}", g1.render(), g2.render())
            });
        }
    }
    let one = MeasurableFn::one(&q.space);
    t.check(theta.pull_back(&one)? == MeasurableFn::one(space), || "η(1) ≠ 1".into());
    for a in space.sets() {
        t.check(q.space.contains(&theta.image(a)), || format!("θ({}) is not measurable", space.render(a)));
    }
    for b in q.space.sets() {
        t.check(space.contains(&theta.preimage(b)), || format!("θ⁻¹({}) is not measurable", q.space.render(b)));
    }
    Ok(t.finish())
}

/// `θ` carries compact elements to compact elements in both directions.
pub fn audit_quotient_compact_elements(space: &MeasurableSpace, sample: &Sample) -> Result<Verdict> {
    let q = t_quotient(space, sample)?;
    let mut t = Tally::new();
    for a in space.sets() {
        if space.is_compact_element(a)? {
            let img = q.theta.image(a);
            t.check(q.space.is_compact_element(&img)?, || format!("θ({}) is not compact", space.render(a)));
        }
    }
    for b in q.space.sets() {
        if q.space.is_compact_element(b)? {
            let pre = q.theta.preimage(b);
            t.check(space.is_compact_element(&pre)?, || format!("θ⁻¹({}) is not compact", q.space.render(b)));
        }
    }
    Ok(t.finish())
}

/// On a compact space every member is a compact element.
pub fn audit_members_compact(space: &MeasurableSpace) -> Result<Verdict> {
    let mut t = Tally::new();
    let compact = space.is_compact_space()?;
    t.check(compact, || "space is not compact".into());
    for a in space.sets() {
        t.check(space.is_compact_element(a)?, || format!("{} is not compact", space.render(a)));
    }
    Ok(t.finish())
}

/// Compact elements are closed under meets with anything, finite joins and
/// going down; `A` is compact iff `↑A^c` is a compact lattice.
pub fn audit_compact_element_rules(space: &MeasurableSpace) -> Result<Verdict> {
    let mut t = Tally::new();
    let sets = space.sets();
    let compact: Vec<bool> = sets.iter().map(|a| space.is_compact_element(a)).collect::<Result<_>>()?;
    for (i, a) in sets.iter().enumerate() {
        let up: Vec<Subset> = sets.iter().filter(|s| a.complement().is_subset_of(s)).copied().collect();
        let up_compact =
            crate::space::top_is_compact(&up, a.complement(), space.full(), crate::space::DEFAULT_COVER_CAP)?;
        t.check(compact[i] == up_compact, || {
            format!("{}: compact = {}, ↑A^c compact = {up_compact}", space.render(a), compact[i])
        });
        for (j, b) in sets.iter().enumerate() {
            let idx = |s: Subset| sets.binary_search(&s).expect("closed under ∩ and ∪");
            if compact[i] || compact[j] {
                t.check(compact[idx(a.intersection(b))], || {
                    format!("{} ∩ {} is not compact", space.render(a), space.render(b))
                });
            }
            if compact[i] && compact[j] {
                t.check(compact[idx(a.union(b))], || {
                    format!("{} ∪ {} is not compact", space.render(a), space.render(b))
                });
            }
            if compact[i] && b.is_subset_of(a) {
                t.check(compact[j], || format!("{} ⊆ {} is not compact", space.render(b), space.render(a)));
            }
        }
    }
    Ok(t.finish())
}
