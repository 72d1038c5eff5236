//! Ideals of `M(X)`, represented by their Z-filters.
//!
//! Every ideal of `M(X)` is a z-ideal, so an ideal is determined by the
//! family of zero-sets of its members: `f ∈ I ⇔ Z(f) ∈ Z[I]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::function::MeasurableFn;
use crate::lattice::{enumerate_filters, is_ultrafilter, sigma_id, LatticeFilter, LatticeIdeal};
use crate::space::MeasurableSpace;
use crate::subset::Subset;

/// An ideal of `M(X)` given by its zero-set family. The family is a proper
/// filter exactly when the ideal is proper; the whole ring has family `𝒜`.
#[derive(Clone, PartialEq, Eq)]
pub struct RingIdealRep {
    zfilter: LatticeFilter,
}

impl RingIdealRep {
    /// The ideal with the given zero-set family (proper or not).
    pub fn from_zero_family(zfilter: LatticeFilter) -> Self {
        RingIdealRep { zfilter }
    }

    /// `M(X)` itself.
    pub fn whole(space: &MeasurableSpace) -> Self {
        RingIdealRep { zfilter: LatticeFilter::improper(space) }
    }

    pub fn space(&self) -> &MeasurableSpace {
        self.zfilter.space()
    }

    pub fn zero_family(&self) -> &LatticeFilter {
        &self.zfilter
    }

    /// Least zero-set among the members.
    pub fn generator(&self) -> Subset {
        self.zfilter.generator()
    }

    pub fn is_proper(&self) -> bool {
        self.zfilter.is_proper()
    }

    /// Membership test `Z(f) ∈ Z[I]`. Functions on another space are never members.
    pub fn contains(&self, f: &MeasurableFn) -> bool {
        f.space().same_as(self.space()) && self.zfilter.contains(&f.zero_set())
    }

    pub fn is_subideal_of(&self, other: &RingIdealRep) -> bool {
        self.zfilter.is_subfilter_of(&other.zfilter)
    }

    pub fn render(&self) -> String {
        if self.is_proper() {
            format!("Z⁻¹[{}]", self.zfilter.render())
        } else {
            "M(X)".to_string()
        }
    }
}

impl fmt::Debug for RingIdealRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A maximal ideal with its fixed-point witness, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxIdealPoint {
    pub ideal: RingIdealRep,
    /// Lowest point of `⋂_{f∈M} Z(f)`, when that intersection is nonempty.
    pub witness: Option<usize>,
}

impl MaxIdealPoint {
    fn new(ideal: RingIdealRep) -> Self {
        let witness = ideal.zfilter.kernel().first();
        MaxIdealPoint { ideal, witness }
    }

    /// `⋂_{f∈M} Z(f)`, i.e. the intersection of the zero-set family.
    pub fn kernel(&self) -> Subset {
        self.ideal.zfilter.kernel()
    }
}

/// `Ann(f) = {g : fg = 0} = {g : coz(g) ⊆ Z(f)}`.
pub fn annihilator(f: &MeasurableFn) -> RingIdealRep {
    let space = f.space();
    let coz = f.cozero();
    let family: Vec<Subset> =
        space.sets().iter().filter(|z| z.complement().is_subset_of(&f.zero_set())).copied().collect();
    debug_assert!(family.iter().all(|z| coz.is_subset_of(z)));
    let zfilter = LatticeFilter::from_members_unchecked_properness(space, &family)
        .expect("zero-sets containing a fixed member form a filter");
    RingIdealRep { zfilter }
}

/// `Z[I]` of a proper ideal.
pub fn z_image(ideal: &RingIdealRep) -> Result<LatticeFilter> {
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    Ok(ideal.zfilter.clone())
}

/// `Z⁻¹[F] = {f : Z(f) ∈ F}` of a proper filter.
pub fn z_preimage(filter: &LatticeFilter) -> Result<RingIdealRep> {
    if !filter.is_proper() {
        return Err(Error::ImproperFilter);
    }
    Ok(RingIdealRep { zfilter: filter.clone() })
}

/// `M^J = {f : coz(f) ∈ J}` for a lattice ideal `J` of `𝒜`.
pub fn cozero_ideal(j: &LatticeIdeal) -> RingIdealRep {
    let space = j.space();
    let family: Vec<Subset> = space.sets().iter().filter(|z| j.contains(&z.complement())).copied().collect();
    let zfilter = LatticeFilter::from_members_unchecked_properness(space, &family)
        .expect("complements of an ideal form a filter");
    RingIdealRep { zfilter }
}

/// All maximal ideals, computed from the Z-ultrafilters and, independently,
/// as `M^J` over the prime ideals `J` of `𝒜`; the two lists must coincide.
/// Ordered by the lowest point of their zero-set intersection.
pub fn maximal_ideals(space: &MeasurableSpace) -> Result<Vec<MaxIdealPoint>> {
    let mut via_ultrafilters: Vec<RingIdealRep> =
        enumerate_filters(space).into_iter().filter(is_ultrafilter).map(|u| z_preimage(&u)).collect::<Result<_>>()?;
    let mut via_prime_ideals: Vec<RingIdealRep> = sigma_id(space).iter().map(cozero_ideal).collect();
    let key = |i: &RingIdealRep| i.zfilter.members().to_vec();
    via_ultrafilters.sort_by_key(key);
    via_prime_ideals.sort_by_key(key);
    if via_ultrafilters != via_prime_ideals {
        return Err(Error::Inconsistent(format!(
            "{} maximal ideals from ultrafilters but {} from prime lattice ideals",
            via_ultrafilters.len(),
            via_prime_ideals.len()
        )));
    }
    let mut out: Vec<MaxIdealPoint> = via_ultrafilters.into_iter().map(MaxIdealPoint::new).collect();
    out.sort_by_key(|m| m.kernel().first());
    Ok(out)
}

/// `M_p = {f : f(p) = 0}`.
pub fn point_ideal(space: &MeasurableSpace, p: usize) -> Result<MaxIdealPoint> {
    if p >= space.size() {
        return Err(Error::UnknownPoint(p.to_string()));
    }
    let family: Vec<Subset> = space.sets().iter().filter(|a| a.contains(p)).copied().collect();
    let zfilter = LatticeFilter::from_members(space, &family)?;
    if !is_ultrafilter(&zfilter) {
        return Err(Error::Inconsistent(format!("M_{} is not maximal", space.ground().label(p))));
    }
    Ok(MaxIdealPoint::new(RingIdealRep { zfilter }))
}

/// `M_P = {f : coz(f) ⊆ P}` for a prime element `P` of `𝒜`; checked to be a
/// fixed maximal ideal whose cozero-sets cover exactly `P`.
pub fn ideal_from_prime_element(space: &MeasurableSpace, p: &Subset) -> Result<RingIdealRep> {
    if !space.is_prime_element(p)? {
        return Err(Error::NotPrime { set: space.render(p) });
    }
    let family: Vec<Subset> = space.sets().iter().filter(|z| z.complement().is_subset_of(p)).copied().collect();
    let zfilter = LatticeFilter::from_members(space, &family)?;
    let cozero_union = zfilter.kernel().complement();
    if !is_ultrafilter(&zfilter) || cozero_union != *p || zfilter.kernel().is_empty() {
        return Err(Error::Inconsistent(format!(
            "M_P for P = {} is not a fixed maximal ideal covering P",
            space.render(p)
        )));
    }
    Ok(RingIdealRep { zfilter })
}

/// Every proper ideal of `M(X)`, one per proper filter of `𝒜`.
pub fn proper_ideals(space: &MeasurableSpace) -> Vec<RingIdealRep> {
    enumerate_filters(space).into_iter().map(|zfilter| RingIdealRep { zfilter }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use crate::subset::GroundSet;

    fn a_bc() -> MeasurableSpace {
        let g = GroundSet::with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        MeasurableSpace::generated(&g, &[g.subset_of_labels(&["a"]).unwrap()]).unwrap()
    }

    fn sub(s: &MeasurableSpace, l: &[&str]) -> Subset {
        s.ground().subset_of_labels(l).unwrap()
    }

    fn f(space: &MeasurableSpace, v: &[i64]) -> MeasurableFn {
        MeasurableFn::new(space, v.iter().map(|&x| Rational::integer(x)).collect()).unwrap()
    }

    #[test]
    fn annihilators() {
        let s = a_bc();
        let ann = annihilator(&f(&s, &[1, 0, 0]));
        assert!(ann.contains(&f(&s, &[0, 5, 5])));
        assert!(!ann.contains(&f(&s, &[1, 5, 5])));
        assert_eq!(ann.generator(), sub(&s, &["a"]));
        let unit = annihilator(&f(&s, &[2, 1, 1]));
        assert_eq!(unit.zero_family().members(), &[s.full()]);
        assert!(!annihilator(&MeasurableFn::zero(&s)).is_proper());
    }

    #[test]
    fn galois_round_trip() {
        let s = a_bc();
        for filt in enumerate_filters(&s) {
            assert_eq!(z_image(&z_preimage(&filt).unwrap()).unwrap(), filt);
        }
        let zero_ideal = z_preimage(&LatticeFilter::principal(&s, &s.full()).unwrap()).unwrap();
        assert!(zero_ideal.contains(&MeasurableFn::zero(&s)));
        assert!(!zero_ideal.contains(&f(&s, &[0, 1, 1])));
        assert_eq!(z_image(&RingIdealRep::whole(&s)).unwrap_err(), Error::ImproperIdeal);
        assert_eq!(z_preimage(&LatticeFilter::improper(&s)).unwrap_err(), Error::ImproperFilter);
    }

    #[test]
    fn maximal_ideals_per_atom() {
        let s = a_bc();
        let max = maximal_ideals(&s).unwrap();
        assert_eq!(max.len(), 2);
        assert_eq!(max[0].witness, Some(0));
        let t = MeasurableSpace::indiscrete(&GroundSet::new(3).unwrap()).unwrap();
        let tmax = maximal_ideals(&t).unwrap();
        assert_eq!(tmax.len(), 1);
        assert_eq!(tmax[0].ideal.zero_family().members(), &[t.full()]);
    }

    #[test]
    fn point_ideals() {
        let s = a_bc();
        let ma = point_ideal(&s, 0).unwrap();
        assert_eq!(ma.ideal.generator(), sub(&s, &["a"]));
        assert_eq!(point_ideal(&s, 1).unwrap().ideal, point_ideal(&s, 2).unwrap().ideal);
        assert!(matches!(point_ideal(&s, 3), Err(Error::UnknownPoint(_))));
        let max = maximal_ideals(&s).unwrap();
        for p in 0..3 {
            assert!(max.iter().any(|m| m.ideal == point_ideal(&s, p).unwrap().ideal));
        }
    }

    #[test]
    fn prime_element_ideals() {
        let s = a_bc();
        let mp = ideal_from_prime_element(&s, &sub(&s, &["b", "c"])).unwrap();
        assert_eq!(mp, point_ideal(&s, 0).unwrap().ideal);
        assert!(matches!(ideal_from_prime_element(&s, &s.full()), Err(Error::NotPrime { .. })));
    }
}
