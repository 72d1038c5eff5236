//! Finite measurable spaces: sigma-algebra generation, atoms, and the
//! lattice predicates (prime element, compact element, Boolean and frame laws).

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::subset::{union_all, GroundSet, Subset};

/// Maximum number of atoms; a sigma-algebra is materialized in full, so its
/// size `2^atoms` must stay tractable.
pub const MAX_ATOMS: usize = 20;

/// Default number of subfamilies a cover enumeration may visit.
pub const DEFAULT_COVER_CAP: u64 = 1 << 20;

/// Cap on pairwise/triple sweeps over the algebra.
pub const DEFAULT_SWEEP_CAP: u64 = 1 << 26;

/// A sigma-algebra on a finite ground set, stored in canonical order with its atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaAlgebra {
    ground: GroundSet,
    sets: Vec<Subset>,
    atoms: Vec<Subset>,
}

impl SigmaAlgebra {
    /// Smallest sigma-algebra containing `generators`.
    ///
    /// Points are grouped by which generators contain them; those classes are
    /// the atoms and the algebra is every union of atoms.
    pub fn generate(ground: &GroundSet, generators: &[Subset]) -> Result<Self> {
        let n = ground.size();
        for g in generators {
            if g.width() != n {
                return Err(Error::InputShape(format!(
                    "generator of width {} on a ground set of {n} points",
                    g.width()
                )));
            }
        }
        let mut classes: BTreeMap<Vec<u64>, Subset> = BTreeMap::new();
        for p in 0..n {
            let mut fp = vec![0u64; generators.len().div_ceil(64)];
            for (i, g) in generators.iter().enumerate() {
                if g.contains(p) {
                    fp[i / 64] |= 1 << (i % 64);
                }
            }
            let e = classes.entry(fp).or_insert_with(|| Subset::empty(n));
            *e = e.with(p);
        }
        let mut atoms: Vec<Subset> = classes.into_values().collect();
        atoms.sort_by_key(|a| a.first());
        Self::from_atoms(ground, atoms)
    }

    /// Algebra whose atoms are the blocks of a partition of the ground set.
    pub fn from_partition(ground: &GroundSet, blocks: &[Subset]) -> Result<Self> {
        let mut atoms = blocks.to_vec();
        atoms.sort_by_key(|a| a.first());
        Self::from_atoms(ground, atoms)
    }

    fn from_atoms(ground: &GroundSet, atoms: Vec<Subset>) -> Result<Self> {
        if atoms.len() > MAX_ATOMS {
            return Err(Error::ResourceCap {
                what: format!("sigma-algebra with {} atoms", atoms.len()),
                cap: 1 << MAX_ATOMS,
            });
        }
        let n = ground.size();
        let mut sets: Vec<Subset> = (0u64..1 << atoms.len())
            .map(|mask| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(Subset::empty(n), |acc, (_, a)| acc.union(a))
            })
            .collect();
        sets.sort();
        let alg = SigmaAlgebra { ground: ground.clone(), sets, atoms };
        alg.verify()?;
        Ok(alg)
    }

    /// Accepts an explicit family and checks every sigma-algebra axiom on it.
    pub fn from_family(ground: &GroundSet, family: &[Subset]) -> Result<Self> {
        let n = ground.size();
        let mut sets: Vec<Subset> = family.to_vec();
        sets.sort();
        sets.dedup();
        if let Some(bad) = sets.iter().find(|s| s.width() != n) {
            return Err(Error::InputShape(format!("member of width {} on a ground set of {n} points", bad.width())));
        }
        if sets.len() > 1 << MAX_ATOMS {
            return Err(Error::ResourceCap { what: "explicit family".into(), cap: 1 << MAX_ATOMS });
        }
        let lookup: HashSet<Subset> = sets.iter().copied().collect();
        if !lookup.contains(&ground.full()) {
            return Err(Error::InvalidFamily("does not contain the whole ground set".into()));
        }
        for s in &sets {
            if !lookup.contains(&s.complement()) {
                return Err(Error::InvalidFamily(format!("complement of {} is missing", ground.render(s))));
            }
        }
        let pairs = (sets.len() as u64).saturating_mul(sets.len() as u64);
        if pairs > DEFAULT_SWEEP_CAP {
            return Err(Error::ResourceCap { what: "union closure check".into(), cap: DEFAULT_SWEEP_CAP });
        }
        for a in &sets {
            for b in &sets {
                if !lookup.contains(&a.union(b)) {
                    return Err(Error::InvalidFamily(format!(
                        "union of {} and {} is missing",
                        ground.render(a),
                        ground.render(b)
                    )));
                }
            }
        }
        let mut atoms: Vec<Subset> = sets
            .iter()
            .filter(|s| !s.is_empty())
            .filter(|s| !sets.iter().any(|t| !t.is_empty() && t != *s && t.is_subset_of(s)))
            .copied()
            .collect();
        atoms.sort_by_key(|a| a.first());
        let alg = SigmaAlgebra { ground: ground.clone(), sets, atoms };
        alg.verify()?;
        Ok(alg)
    }

    /// Checks the closure invariants and the atom structure.
    pub fn verify(&self) -> Result<()> {
        let n = self.ground.size();
        let lookup: HashSet<Subset> = self.sets.iter().copied().collect();
        let fail = |m: String| Err(Error::InvalidFamily(m));
        if !lookup.contains(&Subset::empty(n)) || !lookup.contains(&Subset::full(n)) {
            return fail("missing the empty set or the whole ground set".into());
        }
        let mut cover = Subset::empty(n);
        for (i, a) in self.atoms.iter().enumerate() {
            if a.is_empty() {
                return fail("empty atom".into());
            }
            if cover.meets(a) {
                return fail(format!("atom {i} overlaps an earlier atom"));
            }
            cover = cover.union(a);
        }
        if !cover.is_full() {
            return fail("atoms do not cover the ground set".into());
        }
        for s in &self.sets {
            if !lookup.contains(&s.complement()) {
                return fail(format!("complement of {} is missing", self.ground.render(s)));
            }
            let inside = union_all(n, self.atoms.iter().filter(|a| a.is_subset_of(s)));
            if inside != *s {
                return fail(format!("{} is not a union of atoms", self.ground.render(s)));
            }
            // Adding one atom at a time reaches every union, so this gives union closure.
            for a in &self.atoms {
                if !lookup.contains(&s.union(a)) {
                    return fail(format!("{} united with an atom is missing", self.ground.render(s)));
                }
            }
        }
        if self.sets.len() != 1usize << self.atoms.len() {
            return fail("size is not a power of two in the number of atoms".into());
        }
        Ok(())
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Members in canonical order.
    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    /// Atoms ordered by their lowest point.
    pub fn atoms(&self) -> &[Subset] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        s.width() == self.ground.size() && self.atoms.iter().all(|a| a.is_subset_of(s) || !a.meets(s))
    }

    /// Whether every member of `self` is a member of `other` (same ground).
    pub fn is_subalgebra_of(&self, other: &SigmaAlgebra) -> bool {
        self.ground.size() == other.ground.size() && self.sets.iter().all(|s| other.contains(s))
    }
}

struct SpaceInner {
    algebra: SigmaAlgebra,
    atom_of: Vec<usize>,
}

/// A finite measurable space. Cloning is cheap; all clones share one algebra.
#[derive(Clone)]
pub struct MeasurableSpace {
    inner: Arc<SpaceInner>,
}

impl MeasurableSpace {
    pub fn new(algebra: SigmaAlgebra) -> Self {
        let mut atom_of = vec![0; algebra.ground.size()];
        for (i, a) in algebra.atoms.iter().enumerate() {
            for p in a.points() {
                atom_of[p] = i;
            }
        }
        MeasurableSpace { inner: Arc::new(SpaceInner { algebra, atom_of }) }
    }

    pub fn generated(ground: &GroundSet, generators: &[Subset]) -> Result<Self> {
        SigmaAlgebra::generate(ground, generators).map(Self::new)
    }

    /// The power set of `ground`.
    pub fn discrete(ground: &GroundSet) -> Result<Self> {
        let n = ground.size();
        let singletons: Vec<Subset> = (0..n).map(|p| Subset::singleton(n, p)).collect();
        Self::generated(ground, &singletons)
    }

    /// The trivial algebra `{∅, X}`.
    pub fn indiscrete(ground: &GroundSet) -> Result<Self> {
        Self::generated(ground, &[])
    }

    pub fn algebra(&self) -> &SigmaAlgebra {
        &self.inner.algebra
    }

    pub fn ground(&self) -> &GroundSet {
        &self.inner.algebra.ground
    }

    pub fn size(&self) -> usize {
        self.ground().size()
    }

    pub fn sets(&self) -> &[Subset] {
        self.algebra().sets()
    }

    pub fn atoms(&self) -> &[Subset] {
        self.algebra().atoms()
    }

    pub fn atom_count(&self) -> usize {
        self.atoms().len()
    }

    /// Index of the atom containing `point`.
    pub fn atom_of(&self, point: usize) -> usize {
        self.inner.atom_of[point]
    }

    pub fn full(&self) -> Subset {
        self.ground().full()
    }

    pub fn empty(&self) -> Subset {
        self.ground().empty()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.algebra().contains(s)
    }

    pub fn render(&self, s: &Subset) -> String {
        self.ground().render(s)
    }

    pub fn require_member(&self, s: &Subset) -> Result<()> {
        if s.width() != self.size() {
            return Err(Error::InputShape(format!(
                "subset of width {} on a ground set of {} points",
                s.width(),
                self.size()
            )));
        }
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::NotMember { set: self.render(s) })
        }
    }

    pub fn same_as(&self, other: &MeasurableSpace) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.algebra() == other.algebra()
    }

    /// `P < X` and `A ∩ B ⊆ P` implies `A ⊆ P` or `B ⊆ P`, checked over all member pairs.
    pub fn is_prime_element(&self, p: &Subset) -> Result<bool> {
        self.require_member(p)?;
        if p.is_full() {
            return Ok(false);
        }
        charge_pairs(self.sets().len(), "prime element check")?;
        let sets = self.sets();
        Ok(sets
            .iter()
            .all(|a| sets.iter().all(|b| !a.intersection(b).is_subset_of(p) || a.is_subset_of(p) || b.is_subset_of(p))))
    }

    /// All prime elements, in canonical order.
    pub fn prime_elements(&self) -> Result<Vec<Subset>> {
        let mut out = Vec::new();
        for s in self.sets() {
            if self.is_prime_element(s)? {
                out.push(*s);
            }
        }
        Ok(out)
    }

    /// Every `S ⊆ 𝒜` with `A = ⋁S` has a finite `T ⊆ S` with `A = ⋁T`.
    pub fn is_compact_element(&self, a: &Subset) -> Result<bool> {
        self.is_compact_element_with_cap(a, DEFAULT_COVER_CAP)
    }

    pub fn is_compact_element_with_cap(&self, a: &Subset, cap: u64) -> Result<bool> {
        self.require_member(a)?;
        let below: Vec<Subset> = self.sets().iter().filter(|s| s.is_subset_of(a)).copied().collect();
        top_is_compact(&below, self.empty(), *a, cap)
    }

    pub fn is_compact_space(&self) -> Result<bool> {
        self.is_compact_element(&self.full())
    }

    /// The first pair `x < y` that no measurable set separates.
    pub fn inseparable_pair(&self) -> Option<(usize, usize)> {
        let n = self.size();
        (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.sets().iter().all(|a| a.contains(x) == a.contains(y)))
    }

    /// Distinct points are separated by some measurable set.
    pub fn is_t_measurable(&self) -> bool {
        self.inseparable_pair().is_none()
    }
}

impl PartialEq for MeasurableSpace {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for MeasurableSpace {}

impl fmt::Debug for MeasurableSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atoms: Vec<String> = self.atoms().iter().map(|a| self.render(a)).collect();
        write!(f, "MeasurableSpace(atoms: [{}])", atoms.join(", "))
    }
}

fn charge_pairs(n: usize, what: &str) -> Result<()> {
    if (n as u64).saturating_mul(n as u64) > DEFAULT_SWEEP_CAP {
        Err(Error::ResourceCap { what: what.into(), cap: DEFAULT_SWEEP_CAP })
    } else {
        Ok(())
    }
}

/// Compactness of `top` in the finite lattice `members` (bottom `bottom`, join = union).
///
/// Every subfamily whose join is `top` must contain a finite subfamily with
/// the same join; we extract an irredundant one and confirm it. Families of up
/// to `cap` subsets are swept in full. Larger lattices are swept over
/// antichains only: a family and its maximal members have the same join, so
/// a subcover of the latter is a subcover of the former.
pub fn top_is_compact(members: &[Subset], bottom: Subset, top: Subset, cap: u64) -> Result<bool> {
    let join = |family: &mut dyn Iterator<Item = &Subset>| family.fold(bottom, |acc, s| acc.union(s));
    let check = |family: &[Subset]| -> bool {
        if join(&mut family.iter()) != top {
            return true;
        }
        let sub = irredundant_subcover(family, bottom, top);
        join(&mut sub.iter()) == top && sub.len() <= family.len()
    };
    let m = members.len();
    if m < 64 && (1u64 << m) <= cap {
        let mut buf = Vec::with_capacity(m);
        for mask in 0u64..1 << m {
            buf.clear();
            buf.extend((0..m).filter(|i| mask >> i & 1 == 1).map(|i| members[i]));
            if !check(&buf) {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    let mut ok = true;
    for_each_antichain(members, cap, &mut |family| {
        ok = check(family);
        ok
    })?;
    Ok(ok)
}

fn irredundant_subcover(family: &[Subset], bottom: Subset, top: Subset) -> Vec<Subset> {
    let mut keep: Vec<Subset> = family.to_vec();
    let mut i = 0;
    while i < keep.len() {
        let rest = keep.iter().enumerate().filter(|(j, _)| *j != i).fold(bottom, |acc, (_, s)| acc.union(s));
        if rest == top {
            keep.remove(i);
        } else {
            i += 1;
        }
    }
    keep
}

/// Visits every antichain (under inclusion) of `members`, including the empty one.
/// The visitor returns `false` to stop early. Returns the number visited.
pub fn for_each_antichain(members: &[Subset], cap: u64, visit: &mut dyn FnMut(&[Subset]) -> bool) -> Result<u64> {
    fn go(
        members: &[Subset],
        start: usize,
        chosen: &mut Vec<Subset>,
        count: &mut u64,
        cap: u64,
        visit: &mut dyn FnMut(&[Subset]) -> bool,
    ) -> Result<bool> {
        *count += 1;
        if *count > cap {
            return Err(Error::ResourceCap { what: "antichain enumeration".into(), cap });
        }
        if !visit(chosen) {
            return Ok(false);
        }
        for i in start..members.len() {
            let s = members[i];
            if chosen.iter().all(|c| !c.is_subset_of(&s) && !s.is_subset_of(c)) {
                chosen.push(s);
                let cont = go(members, i + 1, chosen, count, cap, visit)?;
                chosen.pop();
                if !cont {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
    let mut count = 0;
    go(members, 0, &mut Vec::new(), &mut count, cap, visit)?;
    Ok(count)
}

/// Outcome of one lattice law in [`audit_boolean_sigma_frame`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: &'static str,
    pub passed: bool,
    pub checks: u64,
    pub witness: Option<String>,
}

/// Checks that `(𝒜, ⊆)` is a distributive, complemented lattice satisfying the
/// frame law `x ∧ ⋁S = ⋁(x ∧ s)`.
pub fn audit_boolean_sigma_frame(space: &MeasurableSpace) -> Result<Vec<LawCheck>> {
    let sets = space.sets();
    let n = sets.len() as u64;
    if n.saturating_pow(3) > DEFAULT_SWEEP_CAP {
        return Err(Error::ResourceCap { what: "distributivity sweep".into(), cap: DEFAULT_SWEEP_CAP });
    }
    let r = |s: &Subset| space.render(s);
    let mut out = Vec::new();

    let mut witness = None;
    let mut checks = 0;
    'outer: for x in sets {
        for y in sets {
            for z in sets {
                checks += 1;
                let l1 = x.union(&y.intersection(z));
                let r1 = x.union(y).intersection(&x.union(z));
                let l2 = x.intersection(&y.union(z));
                let r2 = x.intersection(y).union(&x.intersection(z));
                if l1 != r1 || l2 != r2 {
                    witness = Some(format!("x={} y={} z={}", r(x), r(y), r(z)));
                    break 'outer;
                }
            }
        }
    }
    out.push(LawCheck { law: "distributive", passed: witness.is_none(), checks, witness });

    let top = space.full();
    let bottom = space.empty();
    let mut witness = None;
    let mut checks = 0;
    for x in sets {
        checks += 1;
        let has = sets.iter().any(|y| x.intersection(y) == bottom && x.union(y) == top);
        if !has {
            witness = Some(format!("{} has no complement", r(x)));
            break;
        }
    }
    out.push(LawCheck { law: "complemented", passed: witness.is_none(), checks, witness });

    let mut witness = None;
    let mut checks = 0u64;
    let mut law_holds = |x: &Subset, family: &[Subset]| {
        checks += 1;
        let lhs = x.intersection(&union_all(top.width(), family));
        let rhs = family.iter().fold(bottom, |acc, s| acc.union(&x.intersection(s)));
        lhs == rhs
    };
    let m = sets.len();
    if m < 64 && (1u64 << m).saturating_mul(n) <= DEFAULT_COVER_CAP * 4 {
        let mut buf = Vec::with_capacity(m);
        'frame: for mask in 0u64..1 << m {
            buf.clear();
            buf.extend((0..m).filter(|i| mask >> i & 1 == 1).map(|i| sets[i]));
            for x in sets {
                if !law_holds(x, &buf) {
                    witness = Some(format!("x={} S={:?}", r(x), buf.iter().map(r).collect::<Vec<_>>()));
                    break 'frame;
                }
            }
        }
    } else {
        for_each_antichain(sets, DEFAULT_COVER_CAP, &mut |family| {
            for x in sets {
                if !law_holds(x, family) {
                    witness = Some(format!("x={} S={:?}", r(x), family.iter().map(r).collect::<Vec<_>>()));
                    return false;
                }
            }
            true
        })?;
    }
    out.push(LawCheck { law: "frame-distributive", passed: witness.is_none(), checks, witness });
    Ok(out)
}

/// All partitions of `{0..n}` as block lists, in restricted-growth-string order.
pub fn set_partitions(n: usize) -> Vec<Vec<Subset>> {
    fn go(n: usize, i: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<Subset>>) {
        if i == n {
            let blocks = (0..=max).map(|b| Subset::from_points(n, (0..n).filter(|&p| rgs[p] == b))).collect();
            out.push(blocks);
            return;
        }
        for b in 0..=max + 1 {
            rgs.push(b);
            go(n, i + 1, rgs, max.max(b), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut rgs = vec![0];
    go(n, 1, &mut rgs, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> GroundSet {
        GroundSet::with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap()
    }

    fn a_bc() -> MeasurableSpace {
        let g = abc();
        MeasurableSpace::generated(&g, &[g.subset_of_labels(&["a"]).unwrap()]).unwrap()
    }

    #[test]
    fn single_generator_on_three_points() {
        let s = a_bc();
        let g = s.ground();
        let rendered: Vec<String> = s.sets().iter().map(|x| g.render(x)).collect();
        assert_eq!(rendered, ["{}", "{a}", "{b, c}", "{a, b, c}"]);
        let atoms: Vec<String> = s.atoms().iter().map(|x| g.render(x)).collect();
        assert_eq!(atoms, ["{a}", "{b, c}"]);
    }

    #[test]
    fn empty_generators_give_trivial_algebra() {
        let g = GroundSet::new(2).unwrap();
        let s = MeasurableSpace::generated(&g, &[]).unwrap();
        assert_eq!(s.sets(), &[g.empty(), g.full()]);
        assert_eq!(s.atoms(), &[g.full()]);
    }

    #[test]
    fn nested_generators_give_power_set() {
        let g = abc();
        let gens = [g.subset_of_labels(&["a"]).unwrap(), g.subset_of_labels(&["a", "b"]).unwrap()];
        let s = MeasurableSpace::generated(&g, &gens).unwrap();
        assert_eq!(s.sets().len(), 8);
        assert!(s.atoms().iter().all(|a| a.len() == 1));
    }

    #[test]
    fn atoms_of_pair_generator_on_four_points() {
        let g = GroundSet::with_labels(["a", "b", "c", "d"].map(String::from).to_vec()).unwrap();
        let s = MeasurableSpace::generated(&g, &[g.subset_of_labels(&["a", "b"]).unwrap()]).unwrap();
        let atoms: Vec<String> = s.atoms().iter().map(|x| g.render(x)).collect();
        assert_eq!(atoms, ["{a, b}", "{c, d}"]);
    }

    #[test]
    fn width_mismatch_is_input_shape_error() {
        let g = abc();
        let r = SigmaAlgebra::generate(&g, &[Subset::singleton(2, 0)]);
        assert!(matches!(r, Err(Error::InputShape(_))));
    }

    #[test]
    fn non_closed_family_rejected() {
        let g = GroundSet::with_labels(vec!["a".into(), "b".into()]).unwrap();
        let fam = [g.empty(), g.subset_of_labels(&["a"]).unwrap(), g.full()];
        assert!(matches!(SigmaAlgebra::from_family(&g, &fam), Err(Error::InvalidFamily(_))));
        let ok = [g.empty(), g.full()];
        assert!(SigmaAlgebra::from_family(&g, &ok).is_ok());
    }

    #[test]
    fn prime_elements() {
        let s = a_bc();
        let g = s.ground();
        assert!(s.is_prime_element(&g.subset_of_labels(&["b", "c"]).unwrap()).unwrap());
        assert!(!s.is_prime_element(&g.full()).unwrap());
        let p = MeasurableSpace::discrete(&GroundSet::new(3).unwrap()).unwrap();
        assert!(!p.is_prime_element(&Subset::singleton(3, 0)).unwrap());
        assert!(matches!(s.is_prime_element(&g.subset_of_labels(&["b"]).unwrap()), Err(Error::NotMember { .. })));
    }

    #[test]
    fn compactness_of_small_spaces() {
        let s = a_bc();
        let g = s.ground();
        assert!(s.is_compact_element(&g.full()).unwrap());
        assert!(s.is_compact_element(&g.empty()).unwrap());
        assert!(s.is_compact_element(&g.subset_of_labels(&["b", "c"]).unwrap()).unwrap());
        let p4 = MeasurableSpace::discrete(&GroundSet::new(4).unwrap()).unwrap();
        assert!(p4.is_compact_space().unwrap());
        let triv = MeasurableSpace::indiscrete(&GroundSet::new(5).unwrap()).unwrap();
        assert!(triv.is_compact_space().unwrap());
    }

    #[test]
    fn compactness_switches_to_antichains_on_five_atoms() {
        let p5 = MeasurableSpace::discrete(&GroundSet::new(5).unwrap()).unwrap();
        assert!(p5.is_compact_space().unwrap());
        let r = p5.is_compact_element_with_cap(&p5.full(), 100);
        assert!(matches!(r, Err(Error::ResourceCap { .. })));
    }

    #[test]
    fn antichain_counts_match_dedekind_numbers() {
        // Antichains of the Boolean lattice on k atoms: 2, 3, 6, 20, 168, 7581.
        for (k, expected) in [(0usize, 2u64), (1, 3), (2, 6), (3, 20), (4, 168)] {
            let g = GroundSet::new(k.max(1)).unwrap();
            let s =
                if k == 0 { MeasurableSpace::indiscrete(&g).unwrap() } else { MeasurableSpace::discrete(&g).unwrap() };
            let members: Vec<Subset> = if k == 0 { vec![g.empty()] } else { s.sets().to_vec() };
            let count = for_each_antichain(&members, u64::MAX, &mut |_| true).unwrap();
            assert_eq!(count, expected, "k={k}");
        }
    }

    #[test]
    fn frame_laws_hold() {
        for s in [a_bc(), MeasurableSpace::discrete(&GroundSet::new(2).unwrap()).unwrap()] {
            let laws = audit_boolean_sigma_frame(&s).unwrap();
            assert_eq!(laws.len(), 3);
            assert!(laws.iter().all(|l| l.passed), "{laws:?}");
        }
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (1..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(counts, [1, 2, 5, 15, 52, 203]);
        for blocks in set_partitions(4) {
            assert_eq!(union_all(4, &blocks), Subset::full(4));
        }
    }
}
