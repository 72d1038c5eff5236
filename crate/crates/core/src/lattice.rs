//! Filters and ideals of the lattice `(𝒜, ⊆)`.
//!
//! Proper filters of `𝒜` are exactly the Z-filters of `M(X)`. Every filter and
//! ideal of a finite lattice is principal; both the member list and the
//! generator are kept so that predicates can be evaluated on the members
//! themselves.

use std::fmt;

use crate::error::{Error, Result};
use crate::space::MeasurableSpace;
use crate::subset::{intersection_all, union_all, Subset};

/// An up-closed, meet-closed, nonempty subfamily of `𝒜`.
#[derive(Clone)]
pub struct LatticeFilter {
    space: MeasurableSpace,
    members: Vec<Subset>,
    generator: Subset,
}

impl LatticeFilter {
    /// Validates an explicit family. Rejects improper families.
    pub fn from_members(space: &MeasurableSpace, family: &[Subset]) -> Result<Self> {
        let f = Self::from_members_unchecked_properness(space, family)?;
        if !f.is_proper() {
            return Err(Error::ImproperFilter);
        }
        Ok(f)
    }

    /// Like [`from_members`](Self::from_members) but admits the improper filter `𝒜`.
    pub(crate) fn from_members_unchecked_properness(space: &MeasurableSpace, family: &[Subset]) -> Result<Self> {
        let mut members = family.to_vec();
        members.sort();
        members.dedup();
        if members.is_empty() {
            return Err(Error::InvalidLatticeFamily("a filter is nonempty".into()));
        }
        for m in &members {
            space.require_member(m)?;
        }
        let has = |s: &Subset| members.binary_search(s).is_ok();
        for a in &members {
            for b in &members {
                if !has(&a.intersection(b)) {
                    return Err(Error::InvalidLatticeFamily(format!(
                        "not meet-closed: {} ∩ {}",
                        space.render(a),
                        space.render(b)
                    )));
                }
            }
            for b in space.sets() {
                if a.is_subset_of(b) && !has(b) {
                    return Err(Error::InvalidLatticeFamily(format!(
                        "not up-closed: {} ⊆ {}",
                        space.render(a),
                        space.render(b)
                    )));
                }
            }
        }
        let generator = intersection_all(space.size(), &members);
        Ok(LatticeFilter { space: space.clone(), members, generator })
    }

    /// `↑G`. Requires `G ∈ 𝒜` and `G ≠ ∅`.
    pub fn principal(space: &MeasurableSpace, g: &Subset) -> Result<Self> {
        space.require_member(g)?;
        if g.is_empty() {
            return Err(Error::ImproperFilter);
        }
        Ok(Self::up_set(space, g))
    }

    /// The improper filter `𝒜 = ↑∅`; used for the Z-family of the whole ring.
    pub fn improper(space: &MeasurableSpace) -> Self {
        Self::up_set(space, &space.empty())
    }

    fn up_set(space: &MeasurableSpace, g: &Subset) -> Self {
        let members = space.sets().iter().filter(|b| g.is_subset_of(b)).copied().collect();
        LatticeFilter { space: space.clone(), members, generator: *g }
    }

    pub fn space(&self) -> &MeasurableSpace {
        &self.space
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    /// The least member.
    pub fn generator(&self) -> Subset {
        self.generator
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(&self.space.empty())
    }

    pub fn is_subfilter_of(&self, other: &LatticeFilter) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    /// Intersection of the members.
    pub fn kernel(&self) -> Subset {
        intersection_all(self.space.size(), &self.members)
    }

    /// `↑{a} = [{a}, {a, b, c}]`.
    pub fn render(&self) -> String {
        let ms: Vec<String> = self.members.iter().map(|m| self.space.render(m)).collect();
        format!("↑{} = [{}]", self.space.render(&self.generator), ms.join(", "))
    }
}

impl PartialEq for LatticeFilter {
    fn eq(&self, other: &Self) -> bool {
        self.space.same_as(&other.space) && self.members == other.members
    }
}

impl Eq for LatticeFilter {}

impl fmt::Debug for LatticeFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A down-closed, join-closed, nonempty subfamily of `𝒜`.
#[derive(Clone)]
pub struct LatticeIdeal {
    space: MeasurableSpace,
    members: Vec<Subset>,
    generator: Subset,
}

impl LatticeIdeal {
    pub fn from_members(space: &MeasurableSpace, family: &[Subset]) -> Result<Self> {
        let mut members = family.to_vec();
        members.sort();
        members.dedup();
        if members.is_empty() {
            return Err(Error::InvalidLatticeFamily("an ideal is nonempty".into()));
        }
        for m in &members {
            space.require_member(m)?;
        }
        let has = |s: &Subset| members.binary_search(s).is_ok();
        for a in &members {
            for b in &members {
                if !has(&a.union(b)) {
                    return Err(Error::InvalidLatticeFamily(format!(
                        "not join-closed: {} ∪ {}",
                        space.render(a),
                        space.render(b)
                    )));
                }
            }
            for b in space.sets() {
                if b.is_subset_of(a) && !has(b) {
                    return Err(Error::InvalidLatticeFamily(format!(
                        "not down-closed: {} ⊆ {}",
                        space.render(b),
                        space.render(a)
                    )));
                }
            }
        }
        let generator = union_all(space.size(), &members);
        Ok(LatticeIdeal { space: space.clone(), members, generator })
    }

    /// `↓G`; `↓X` is the improper ideal.
    pub fn principal(space: &MeasurableSpace, g: &Subset) -> Result<Self> {
        space.require_member(g)?;
        let members = space.sets().iter().filter(|b| b.is_subset_of(g)).copied().collect();
        Ok(LatticeIdeal { space: space.clone(), members, generator: *g })
    }

    pub fn space(&self) -> &MeasurableSpace {
        &self.space
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    /// The greatest member, which is also `⋃J`.
    pub fn generator(&self) -> Subset {
        self.generator
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(&self.space.full())
    }

    pub fn is_subideal_of(&self, other: &LatticeIdeal) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    /// `⋃J`.
    pub fn union(&self) -> Subset {
        union_all(self.space.size(), &self.members)
    }

    pub fn render(&self) -> String {
        let ms: Vec<String> = self.members.iter().map(|m| self.space.render(m)).collect();
        format!("↓{} = [{}]", self.space.render(&self.generator), ms.join(", "))
    }
}

impl PartialEq for LatticeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.space.same_as(&other.space) && self.members == other.members
    }
}

impl Eq for LatticeIdeal {}

impl fmt::Debug for LatticeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// All proper filters `↑G`, `G ≠ ∅`, in canonical order of `G`.
pub fn enumerate_filters(space: &MeasurableSpace) -> Vec<LatticeFilter> {
    space.sets().iter().filter(|g| !g.is_empty()).map(|g| LatticeFilter::up_set(space, g)).collect()
}

/// All ideals `↓G`, including the improper `↓X`.
pub fn enumerate_ideals(space: &MeasurableSpace) -> Vec<LatticeIdeal> {
    space.sets().iter().map(|g| LatticeIdeal::principal(space, g).expect("member")).collect()
}

/// No proper filter strictly contains `f`.
pub fn is_ultrafilter(f: &LatticeFilter) -> bool {
    f.is_proper() && enumerate_filters(f.space()).iter().all(|g| !(f.is_subfilter_of(g) && g != f))
}

/// Every `A ∈ 𝒜` that meets all members of `f` already belongs to `f`.
pub fn meets_implies_member(f: &LatticeFilter) -> bool {
    f.space().sets().iter().filter(|a| f.members().iter().all(|b| a.meets(b))).all(|a| f.contains(a))
}

/// Proper, and `A ∪ B ∈ F` implies `A ∈ F` or `B ∈ F`.
pub fn is_prime_filter(f: &LatticeFilter) -> bool {
    let sets = f.space().sets();
    f.is_proper()
        && sets.iter().all(|a| sets.iter().all(|b| !f.contains(&a.union(b)) || f.contains(a) || f.contains(b)))
}

/// Prime element of the ideal lattice `Id(𝒜)`: `J` is proper and
/// `I₁ ∩ I₂ ⊆ J` implies `I₁ ⊆ J` or `I₂ ⊆ J`.
pub fn is_prime_lattice_ideal(j: &LatticeIdeal) -> bool {
    if !j.is_proper() {
        return false;
    }
    let ideals = enumerate_ideals(j.space());
    ideals.iter().all(|i1| {
        ideals.iter().all(|i2| {
            let meet_inside = i1.members().iter().filter(|m| i2.contains(m)).all(|m| j.contains(m));
            !meet_inside || i1.is_subideal_of(j) || i2.is_subideal_of(j)
        })
    })
}

/// Elementwise primeness: `A ∩ B ∈ J` implies `A ∈ J` or `B ∈ J`.
pub fn is_prime_ideal_elementwise(j: &LatticeIdeal) -> bool {
    let sets = j.space().sets();
    j.is_proper()
        && sets.iter().all(|a| sets.iter().all(|b| !j.contains(&a.intersection(b)) || j.contains(a) || j.contains(b)))
}

/// `Σ Id(𝒜)`: the prime elements of `Id(𝒜)`.
pub fn sigma_id(space: &MeasurableSpace) -> Vec<LatticeIdeal> {
    enumerate_ideals(space).into_iter().filter(is_prime_lattice_ideal).collect()
}

/// `Max(Id(𝒜))`: proper ideals with no proper ideal strictly above them.
pub fn max_id(space: &MeasurableSpace) -> Vec<LatticeIdeal> {
    let ideals = enumerate_ideals(space);
    ideals
        .iter()
        .filter(|j| j.is_proper())
        .filter(|j| ideals.iter().filter(|k| k.is_proper() && k != j).all(|k| !j.is_subideal_of(k)))
        .cloned()
        .collect()
}

/// Cap on subfamilies visited by [`has_fip`].
pub const FIP_CAP: u64 = 1 << 16;

/// Every nonempty finite subfamily has nonempty intersection.
pub fn has_fip(family: &[Subset]) -> Result<bool> {
    if family.is_empty() {
        return Err(Error::InputShape("finite intersection property needs a nonempty family".into()));
    }
    let m = family.len();
    if m >= 64 || (1u64 << m) > FIP_CAP {
        return Err(Error::ResourceCap { what: format!("FIP check on {m} sets"), cap: FIP_CAP });
    }
    let width = family[0].width();
    for mask in 1u64..1 << m {
        let meet =
            (0..m).filter(|i| mask >> i & 1 == 1).fold(Subset::full(width), |acc, i| acc.intersection(&family[i]));
        if meet.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An ultrafilter containing every member of `family`.
pub fn fip_extension(space: &MeasurableSpace, family: &[Subset]) -> Result<LatticeFilter> {
    for s in family {
        space.require_member(s)?;
    }
    if !has_fip(family)? {
        return Err(Error::NoExtension);
    }
    enumerate_filters(space)
        .into_iter()
        .filter(is_ultrafilter)
        .find(|u| family.iter().all(|s| u.contains(s)))
        .ok_or(Error::NoExtension)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixedness {
    /// Members have a common point; the lowest one is the witness.
    Fixed {
        witness: usize,
    },
    Free,
}

/// Fixed iff the members have nonempty intersection.
pub fn fixed_or_free(f: &LatticeFilter) -> Fixedness {
    match f.kernel().first() {
        Some(witness) => Fixedness::Fixed { witness },
        None => Fixedness::Free,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::GroundSet;

    fn a_bc() -> MeasurableSpace {
        let g = GroundSet::with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        MeasurableSpace::generated(&g, &[g.subset_of_labels(&["a"]).unwrap()]).unwrap()
    }

    fn sub(s: &MeasurableSpace, l: &[&str]) -> Subset {
        s.ground().subset_of_labels(l).unwrap()
    }

    #[test]
    fn principal_constructors() {
        let s = a_bc();
        let f = LatticeFilter::principal(&s, &sub(&s, &["a"])).unwrap();
        assert_eq!(f.members(), &[sub(&s, &["a"]), s.full()]);
        assert_eq!(f.render(), "↑{a} = [{a}, {a, b, c}]");
        let top = LatticeFilter::principal(&s, &s.full()).unwrap();
        assert_eq!(top.members(), &[s.full()]);
        assert_eq!(LatticeFilter::principal(&s, &s.empty()).unwrap_err(), Error::ImproperFilter);
        let all = LatticeIdeal::principal(&s, &s.full()).unwrap();
        assert_eq!(all.members().len(), 4);
        assert!(!all.is_proper());
    }

    #[test]
    fn explicit_families_are_validated() {
        let s = a_bc();
        assert!(LatticeFilter::from_members(&s, &[sub(&s, &["a"])]).is_err());
        let f = LatticeFilter::from_members(&s, &[s.full(), sub(&s, &["a"])]).unwrap();
        assert_eq!(f.generator(), sub(&s, &["a"]));
        assert_eq!(LatticeFilter::from_members(&s, s.sets()).unwrap_err(), Error::ImproperFilter);
        assert!(LatticeIdeal::from_members(&s, &[sub(&s, &["a"])]).is_err());
        let j = LatticeIdeal::from_members(&s, &[s.empty(), sub(&s, &["a"])]).unwrap();
        assert_eq!(j.generator(), sub(&s, &["a"]));
    }

    #[test]
    fn filter_counts() {
        assert_eq!(enumerate_filters(&a_bc()).len(), 3);
        let t = MeasurableSpace::indiscrete(&GroundSet::new(3).unwrap()).unwrap();
        assert_eq!(enumerate_filters(&t).len(), 1);
        let p3 = MeasurableSpace::discrete(&GroundSet::new(3).unwrap()).unwrap();
        assert_eq!(enumerate_filters(&p3).len(), 7);
        assert_eq!(enumerate_ideals(&p3).len(), 8);
    }

    #[test]
    fn ultrafilters() {
        let s = a_bc();
        assert!(is_ultrafilter(&LatticeFilter::principal(&s, &sub(&s, &["a"])).unwrap()));
        assert!(!is_ultrafilter(&LatticeFilter::principal(&s, &s.full()).unwrap()));
        for f in enumerate_filters(&s) {
            assert_eq!(is_ultrafilter(&f), meets_implies_member(&f));
        }
    }

    #[test]
    fn prime_filters() {
        let g = GroundSet::with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let p = MeasurableSpace::discrete(&g).unwrap();
        let ab = LatticeFilter::principal(&p, &sub(&p, &["a", "b"])).unwrap();
        assert!(!is_prime_filter(&ab));
        let t = MeasurableSpace::indiscrete(&g).unwrap();
        assert!(is_prime_filter(&LatticeFilter::principal(&t, &t.full()).unwrap()));
    }

    #[test]
    fn prime_lattice_ideals() {
        let s = a_bc();
        let j = LatticeIdeal::principal(&s, &sub(&s, &["b", "c"])).unwrap();
        assert!(is_prime_lattice_ideal(&j));
        assert!(max_id(&s).contains(&j));
        let p2 = MeasurableSpace::discrete(&GroundSet::new(2).unwrap()).unwrap();
        let bottom = LatticeIdeal::principal(&p2, &p2.empty()).unwrap();
        assert!(!is_prime_lattice_ideal(&bottom));
        assert!(!is_prime_ideal_elementwise(&bottom));
    }

    #[test]
    fn fip() {
        let g = GroundSet::with_labels(vec!["a".into(), "b".into()]).unwrap();
        let p = MeasurableSpace::discrete(&g).unwrap();
        let fam = [sub(&p, &["a"]), sub(&p, &["a", "b"])];
        assert!(has_fip(&fam).unwrap());
        let u = fip_extension(&p, &fam).unwrap();
        assert_eq!(u.generator(), sub(&p, &["a"]));
        let disjoint = [sub(&p, &["a"]), sub(&p, &["b"])];
        assert!(!has_fip(&disjoint).unwrap());
        assert_eq!(fip_extension(&p, &disjoint).unwrap_err(), Error::NoExtension);
    }

    #[test]
    fn fixedness() {
        let s = a_bc();
        let f = LatticeFilter::principal(&s, &sub(&s, &["a"])).unwrap();
        assert_eq!(fixed_or_free(&f), Fixedness::Fixed { witness: 0 });
        let top = LatticeFilter::principal(&s, &s.full()).unwrap();
        assert!(matches!(fixed_or_free(&top), Fixedness::Fixed { .. }));
    }
}
