//! Ideal-theoretic audits of `M(X)` over a finite function sample.
//!
//! A [`RingContext`] fixes a [`Sample`] and precomputes, by actual exact
//! arithmetic, the zero-set of every product `fᵢ·fⱼ` and every difference
//! `fᵢ − fⱼ`. Ideals are the representable ones, one per proper filter of
//! `𝒜`; their membership sets over the sample are computed with the
//! intensional predicate of [`RingIdealRep`]. Each audit then sweeps the
//! sample literally.

use crate::check::{Tally, Verdict};
use crate::error::{Error, Result};
use crate::function::MeasurableFn;
use crate::ideal::{
    cozero_ideal, ideal_from_prime_element, maximal_ideals, point_ideal, proper_ideals, z_image, z_preimage,
    RingIdealRep,
};
use crate::lattice::{
    enumerate_filters, enumerate_ideals, fip_extension, fixed_or_free, has_fip, is_prime_filter,
    is_prime_ideal_elementwise, is_prime_lattice_ideal, is_ultrafilter, max_id, meets_implies_member, sigma_id,
    Fixedness, LatticeFilter,
};
use crate::sample::Sample;
use crate::space::{MeasurableSpace, DEFAULT_COVER_CAP};
use crate::subset::Subset;

/// Upper bound on `|sample|²`, the size of each pair table.
pub const PAIR_TABLE_CAP: u64 = 1 << 20;

/// A set of sample indices.
#[derive(Clone, PartialEq, Eq, Debug)]
struct FnSet(Vec<u64>);

impl FnSet {
    fn new(n: usize) -> Self {
        FnSet(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_subset_of(&self, other: &FnSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b))
    }
}

/// The four conditions characterizing prime ideals, plus primeness of the Z-filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeAudit {
    /// `fg ∈ I ⇒ f ∈ I or g ∈ I`.
    pub ring_prime: bool,
    /// Some prime ideal is contained in `I`.
    pub contains_prime: bool,
    /// `fg = 0 ⇒ f ∈ I or g ∈ I`.
    pub zero_product: bool,
    /// Every `f` keeps its sign on some member of `Z[I]`.
    pub sign_condition: bool,
    /// `Z[I]` is a prime filter.
    pub filter_prime: bool,
}

impl PrimeAudit {
    pub fn agree(&self) -> bool {
        let v = self.ring_prime;
        self.contains_prime == v && self.zero_product == v && self.sign_condition == v && self.filter_prime == v
    }

    pub fn is_prime(&self) -> bool {
        self.ring_prime
    }
}

/// The five conditions equivalent to compactness, each computed on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompactnessAudit {
    pub compact: bool,
    pub proper_ideals_fixed: bool,
    pub maximal_ideals_fixed: bool,
    pub filters_fixed: bool,
    pub ultrafilters_fixed: bool,
}

impl CompactnessAudit {
    pub fn all(&self) -> [bool; 5] {
        [self.compact, self.proper_ideals_fixed, self.maximal_ideals_fixed, self.filters_fixed, self.ultrafilters_fixed]
    }

    pub fn agree(&self) -> bool {
        self.all().iter().all(|&b| b == self.compact)
    }
}

/// Shared state for the ideal audits of one space.
#[derive(Debug)]
pub struct RingContext {
    space: MeasurableSpace,
    sample: Sample,
    n: usize,
    product_zero: Vec<Subset>,
    difference_zero: Vec<Subset>,
    ideals: Vec<RingIdealRep>,
    members: Vec<FnSet>,
    maximal: Vec<usize>,
    ring_prime: Vec<bool>,
    ann: Vec<FnSet>,
    mason: Vec<FnSet>,
}

impl RingContext {
    pub fn new(space: &MeasurableSpace, sample: Sample) -> Result<Self> {
        let n = sample.len();
        if (n as u64).saturating_mul(n as u64) > PAIR_TABLE_CAP {
            return Err(Error::ResourceCap {
                what: format!("pair tables over {n} sample functions"),
                cap: PAIR_TABLE_CAP,
            });
        }
        let fs = sample.functions();
        let mut product_zero = vec![space.empty(); n * n];
        let mut difference_zero = vec![space.empty(); n * n];
        for i in 0..n {
            for j in i..n {
                let p = fs[i].mul(&fs[j])?.zero_set();
                product_zero[i * n + j] = p;
                product_zero[j * n + i] = p;
                difference_zero[i * n + j] = fs[i].sub(&fs[j])?.zero_set();
                difference_zero[j * n + i] = fs[j].sub(&fs[i])?.zero_set();
            }
        }

        let ideals = proper_ideals(space);
        let members: Vec<FnSet> = ideals
            .iter()
            .map(|ideal| {
                let mut s = FnSet::new(n);
                for (i, f) in fs.iter().enumerate() {
                    if ideal.contains(f) {
                        s.insert(i);
                    }
                }
                s
            })
            .collect();
        let maximal: Vec<usize> = (0..ideals.len())
            .filter(|&k| !(0..ideals.len()).any(|l| members[k] != members[l] && members[k].is_subset_of(&members[l])))
            .collect();
        let ring_prime = ideals
            .iter()
            .zip(&members)
            .map(|(ideal, m)| {
                (0..n).all(|i| {
                    (i..n).all(|j| {
                        !ideal.zero_family().contains(&product_zero[i * n + j]) || m.contains(i) || m.contains(j)
                    })
                })
            })
            .collect();
        let ann = (0..n)
            .map(|i| {
                let mut s = FnSet::new(n);
                for j in 0..n {
                    if product_zero[i * n + j].is_full() {
                        s.insert(j);
                    }
                }
                s
            })
            .collect();
        let mason = (0..n)
            .map(|i| {
                let mut s = FnSet::new(maximal.len());
                for (pos, &k) in maximal.iter().enumerate() {
                    if members[k].contains(i) {
                        s.insert(pos);
                    }
                }
                s
            })
            .collect();
        Ok(RingContext {
            space: space.clone(),
            sample,
            n,
            product_zero,
            difference_zero,
            ideals,
            members,
            maximal,
            ring_prime,
            ann,
            mason,
        })
    }

    pub fn space(&self) -> &MeasurableSpace {
        &self.space
    }

    pub fn sample(&self) -> &Sample {
        &self.sample
    }

    /// Proper ideals, one per proper filter of `𝒜`, in filter order.
    pub fn ideals(&self) -> &[RingIdealRep] {
        &self.ideals
    }

    /// Indices of the ideals maximal under inclusion of their sample members.
    pub fn maximal_indices(&self) -> &[usize] {
        &self.maximal
    }

    pub fn is_ring_prime(&self, k: usize) -> bool {
        self.ring_prime[k]
    }

    pub fn contains(&self, k: usize, i: usize) -> bool {
        self.members[k].contains(i)
    }

    /// Sample members of ideal `k`.
    pub fn members(&self, k: usize) -> Vec<usize> {
        self.members[k].iter().collect()
    }

    fn f(&self, i: usize) -> &MeasurableFn {
        &self.sample.functions()[i]
    }

    fn z(&self, i: usize) -> Subset {
        self.sample.zero_set(i)
    }

    fn product_zero(&self, i: usize, j: usize) -> Subset {
        self.product_zero[i * self.n + j]
    }

    fn r(&self, s: &Subset) -> String {
        self.space.render(s)
    }

    /// `⋂ Z(f)` over the sample members of ideal `k`.
    pub fn kernel(&self, k: usize) -> Subset {
        self.members[k].iter().fold(self.space.full(), |acc, i| acc.intersection(&self.z(i)))
    }

    /// `⋃ coz(f)` over the sample members of ideal `k`.
    pub fn cozero_union(&self, k: usize) -> Subset {
        self.members[k].iter().fold(self.space.empty(), |acc, i| acc.union(&self.z(i).complement()))
    }

    fn index_of_members(&self, set: &FnSet) -> Option<usize> {
        self.members.iter().position(|m| m == set)
    }

    fn members_where(&self, pred: impl Fn(&MeasurableFn) -> bool) -> FnSet {
        let mut s = FnSet::new(self.n);
        for (i, f) in self.sample.functions().iter().enumerate() {
            if pred(f) {
                s.insert(i);
            }
        }
        s
    }

    fn ideal_name(&self, k: usize) -> String {
        self.ideals[k].render()
    }

    /// Zero-sets of sampled functions exhaust `𝒜`.
    pub fn zero_set_image(&self) -> Verdict {
        let mut t = Tally::new();
        let mut image: Vec<Subset> = self.sample.zero_sets().to_vec();
        image.sort();
        image.dedup();
        for z in &image {
            t.check(self.space.contains(z), || format!("Z(f) = {} is not measurable", self.r(z)));
        }
        for a in self.space.sets() {
            t.check(image.binary_search(a).is_ok(), || format!("{} is not a zero-set", self.r(a)));
        }
        t.finish()
    }

    /// `f` is a unit iff `Z(f) = ∅`; units lie in no proper ideal.
    pub fn units(&self) -> Verdict {
        let mut t = Tally::new();
        let one = MeasurableFn::one(&self.space);
        for i in 0..self.n {
            let f = self.f(i);
            let unit = f.is_unit();
            t.check(unit == self.z(i).is_empty(), || format!("{}: unit={unit}", f.render()));
            match f.inverse() {
                Ok(inv) => {
                    t.check(unit && f.mul(&inv).ok().as_ref() == Some(&one), || {
                        format!("{} · {} ≠ 1", f.render(), inv.render())
                    });
                }
                Err(e) => {
                    t.check(!unit && matches!(e, Error::NonUnit { .. }), || format!("{}: {e}", f.render()));
                }
            }
            if unit {
                for k in 0..self.ideals.len() {
                    t.check(!self.contains(k, i), || format!("unit {} in {}", f.render(), self.ideal_name(k)));
                }
            }
        }
        t.finish()
    }

    /// `Z(χ_A) = A^c` for every `A ∈ 𝒜`.
    pub fn characteristic_functions(&self) -> Result<Verdict> {
        let mut t = Tally::new();
        for a in self.space.sets() {
            let chi = MeasurableFn::characteristic(&self.space, a)?;
            let z = chi.zero_set();
            t.check(z == a.complement(), || format!("Z(χ_{}) = {}", self.r(a), self.r(&z)));
            let ok = a.points().all(|p| chi.value(p) == &crate::Rational::one())
                && z.points().all(|p| chi.value(p).is_zero());
            t.check(ok, || format!("χ_{} = {}", self.r(a), chi.render()));
        }
        Ok(t.finish())
    }

    /// `Z[I]` is a proper filter, `Z⁻¹[F]` is an ideal closed under
    /// subtraction and multiplication, and neither contains trivial members.
    pub fn galois_maps(&self) -> Result<Verdict> {
        let mut t = Tally::new();
        let one = MeasurableFn::one(&self.space);
        for (k, ideal) in self.ideals.iter().enumerate() {
            let name = || self.ideal_name(k);
            let zfam = z_image(ideal)?;
            t.check(!zfam.contains(&self.space.empty()), || format!("∅ ∈ Z[{}]", name()));
            let mut image: Vec<Subset> = self.members[k].iter().map(|i| self.z(i)).collect();
            image.sort();
            image.dedup();
            let mut expected = zfam.members().to_vec();
            expected.sort();
            t.check(image == expected, || format!("sampled Z[{}] differs from its zero-set family", name()));
            t.check(LatticeFilter::from_members(&self.space, &image).is_ok(), || {
                format!("sampled Z[{}] is not a proper filter", name())
            });
            t.check(!ideal.contains(&one), || format!("1 ∈ {}", name()));
            for i in self.members[k].iter() {
                for j in self.members[k].iter() {
                    let d = self.difference_zero[i * self.n + j];
                    t.check(zfam.contains(&d), || {
                        format!("{} − {} ∉ {}", self.f(i).render(), self.f(j).render(), name())
                    });
                }
                for j in 0..self.n {
                    t.check(zfam.contains(&self.product_zero(j, i)), || {
                        format!("{} · {} ∉ {}", self.f(j).render(), self.f(i).render(), name())
                    });
                }
            }
        }
        Ok(t.finish())
    }

    /// `Z` and `Z⁻¹` are mutually inverse, order-preserving, and match
    /// maximal ideals with ultrafilters.
    pub fn galois_bijection(&self) -> Result<Verdict> {
        let mut t = Tally::new();
        let filters = enumerate_filters(&self.space);
        t.check(filters.len() == self.ideals.len(), || "filter and ideal counts differ".into());
        for (k, f) in filters.iter().enumerate() {
            let back = z_image(&z_preimage(f)?)?;
            t.check(&back == f, || format!("Z[Z⁻¹[{}]] = {}", f.render(), back.render()));
            let again = z_preimage(&z_image(&self.ideals[k])?)?;
            t.check(again == self.ideals[k], || format!("Z⁻¹[Z[{}]] differs", self.ideal_name(k)));
            for (l, g) in filters.iter().enumerate() {
                if k < l {
                    t.check(self.members[k] != self.members[l], || {
                        format!("{} and {} have the same members", f.render(), g.render())
                    });
                }
                let by_filter = f.is_subfilter_of(g);
                let by_members = self.members[k].is_subset_of(&self.members[l]);
                t.check(by_filter == by_members, || format!("inclusion {} ⊆ {} not preserved", f.render(), g.render()));
            }
            let maximal = self.maximal.contains(&k);
            t.check(maximal == is_ultrafilter(f), || {
                format!("{}: maximal ideal = {maximal}, ultrafilter = {}", f.render(), !maximal)
            });
        }
        t.check(self.maximal.len() == self.space.atom_count(), || {
            format!("{} maximal ideals for {} atoms", self.maximal.len(), self.space.atom_count())
        });
        Ok(t.finish())
    }

    /// If `Z(f)` meets every member of `Z[M]` then `f ∈ M`.
    pub fn meets_implies_membership(&self) -> Verdict {
        let mut t = Tally::new();
        for &k in &self.maximal {
            let zfam = self.ideals[k].zero_family();
            for i in 0..self.n {
                let z = self.z(i);
                if zfam.members().iter().all(|b| z.meets(b)) {
                    t.check(self.contains(k, i), || {
                        format!("{} meets Z[{}] but is not a member", self.f(i).render(), self.ideal_name(k))
                    });
                }
            }
        }
        t.finish()
    }

    /// `M_p = {f : f(p) = 0}` is maximal.
    pub fn point_ideals(&self) -> Result<Verdict> {
        let mut t = Tally::new();
        for p in 0..self.space.size() {
            let label = self.space.ground().label(p);
            let set = self.members_where(|f| f.value(p).is_zero());
            let k = self.index_of_members(&set);
            t.check(k.is_some_and(|k| self.maximal.contains(&k)), || format!("M_{label} is not maximal"));
            let built = point_ideal(&self.space, p)?;
            t.check(k.is_some_and(|k| self.ideals[k] == built.ideal), || {
                format!("M_{label} differs from its zero-set construction")
            });
            t.check(built.witness.is_some_and(|w| built.kernel().contains(p) && built.kernel().contains(w)), || {
                format!("M_{label} has witness {:?}", built.witness)
            });
        }
        Ok(t.finish())
    }

    fn m_j(&self, j: &crate::lattice::LatticeIdeal) -> FnSet {
        self.members_where(|f| j.contains(&f.cozero()))
    }

    /// `M` is fixed maximal iff `M = M^P` for a prime ideal `P` of `𝒜` with `⋃P ⊊ X`.
    pub fn fixed_maximal_via_prime_ideals(&self) -> Verdict {
        let mut t = Tally::new();
        let primes: Vec<_> = enumerate_ideals(&self.space).into_iter().filter(is_prime_lattice_ideal).collect();
        let mut hit = vec![false; self.ideals.len()];
        for p in &primes {
            let set = self.m_j(p);
            let k = self.index_of_members(&set);
            let fixed = k.is_some_and(|k| !self.kernel(k).is_empty());
            let small = p.union() != self.space.full();
            let maximal = k.is_some_and(|k| self.maximal.contains(&k));
            t.check(maximal && fixed == small, || {
                format!("M^P for P = {}: maximal={maximal}, fixed={fixed}, ⋃P ⊊ X = {small}", p.render())
            });
            if let (Some(k), true) = (k, small) {
                hit[k] = true;
            }
        }
        for &k in &self.maximal {
            if !self.kernel(k).is_empty() {
                t.check(hit[k], || format!("fixed maximal {} is no M^P", self.ideal_name(k)));
            }
        }
        t.finish()
    }

    /// `𝔐(f) ⊆ 𝔐(g) ⇔ Z(f) ⊆ Z(g) ⇔ Ann(f) ⊆ Ann(g)`.
    pub fn maximal_zero_annihilator_orders(&self) -> Verdict {
        let mut t = Tally::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let m = self.mason[i].is_subset_of(&self.mason[j]);
                let z = self.z(i).is_subset_of(&self.z(j));
                let a = self.ann[i].is_subset_of(&self.ann[j]);
                t.check(m == z && z == a, || {
                    format!("f = {}, g = {}: 𝔐 ⊆ {m}, Z ⊆ {z}, Ann ⊆ {a}", self.f(i).render(), self.f(j).render())
                });
            }
        }
        t.finish()
    }

    fn closed_under(&self, k: usize, related: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
        for i in self.members[k].iter() {
            for j in 0..self.n {
                if related(i, j) && !self.contains(k, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn pair_witness(&self, k: usize, what: &str, (i, j): (usize, usize)) -> String {
        format!("{}: f = {} ∈ I, g = {} ∉ I, {what}", self.ideal_name(k), self.f(i).render(), self.f(j).render())
    }

    /// `Ann(f) = Ann(g)`, `f ∈ I` implies `g ∈ I`.
    fn annihilator_equality_violation(&self, k: usize) -> Option<(usize, usize)> {
        self.closed_under(k, |i, j| self.ann[i] == self.ann[j])
    }

    /// `f ∈ I` implies `Ann(Ann(f)) ⊆ I`, with the double annihilator computed from products.
    fn double_annihilator_violation(&self, k: usize) -> Option<(usize, usize)> {
        for i in self.members[k].iter() {
            for j in 0..self.n {
                let in_double = self.ann[i].iter().all(|h| self.product_zero(j, h).is_full());
                if in_double && !self.contains(k, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Conditions (3) and (4) on annihilators agree and hold for every ideal.
    pub fn annihilator_conditions(&self) -> Verdict {
        let mut t = Tally::new();
        for k in 0..self.ideals.len() {
            let c3 = self.annihilator_equality_violation(k);
            let c4 = self.double_annihilator_violation(k);
            t.check(c3.is_none(), || self.pair_witness(k, "Ann(f) = Ann(g)", c3.unwrap()));
            t.check(c4.is_none(), || self.pair_witness(k, "g ∈ Ann(Ann(f))", c4.unwrap()));
        }
        t.finish()
    }

    /// Every ideal is a `Z_𝒜`-ideal, a z-ideal à la Mason and a `Z°`-ideal.
    pub fn z_ideal_conditions(&self) -> Verdict {
        let mut t = Tally::new();
        for k in 0..self.ideals.len() {
            let za = self.closed_under(k, |i, j| self.z(i).is_subset_of(&self.z(j)));
            let mason = self.closed_under(k, |i, j| self.mason[i].is_subset_of(&self.mason[j]));
            let zo = self.annihilator_equality_violation(k);
            t.check(za.is_none(), || self.pair_witness(k, "Z(f) ⊆ Z(g)", za.unwrap()));
            t.check(mason.is_none(), || self.pair_witness(k, "𝔐(f) ⊆ 𝔐(g)", mason.unwrap()));
            t.check(zo.is_none(), || self.pair_witness(k, "Ann(f) = Ann(g)", zo.unwrap()));
        }
        t.finish()
    }

    /// `Z(f) ⊆ Z(g)` implies `g = g·h·f` with `h = 1/f` on `coz(f)`, so every
    /// ideal containing `f` contains `g`.
    pub fn every_ideal_is_z_ideal(&self) -> Result<Verdict> {
        let mut t = Tally::new();
        for i in 0..self.n {
            let f = self.f(i);
            let h = f.reciprocal_on_cozero();
            let hf = h.mul(f)?;
            for j in 0..self.n {
                if !self.z(i).is_subset_of(&self.z(j)) {
                    continue;
                }
                let g = self.f(j);
                let ghf = g.mul(&hf)?;
                t.check(&ghf == g, || format!("g·h·f ≠ g for f = {}, g = {}", f.render(), g.render()));
            }
        }
        for k in 0..self.ideals.len() {
            let v = self.closed_under(k, |i, j| self.z(i).is_subset_of(&self.z(j)));
            t.check(v.is_none(), || self.pair_witness(k, "Z(f) ⊆ Z(g)", v.unwrap()));
        }
        Ok(t.finish())
    }

    /// Compactness iff every family with the finite intersection property
    /// has nonempty intersection; families of up to four members.
    pub fn fip_compactness(&self) -> Result<Verdict> {
        let mut t = Tally::new();
        let sets = self.space.sets();
        let m = sets.len() as u64;
        let families = 1
            + m
            + m * m.saturating_sub(1) / 2
            + m * m.saturating_sub(1) * m.saturating_sub(2) / 6
            + m * m.saturating_sub(1) * m.saturating_sub(2) * m.saturating_sub(3) / 24;
        if families > DEFAULT_COVER_CAP {
            return Err(Error::ResourceCap { what: "FIP family sweep".into(), cap: DEFAULT_COVER_CAP });
        }
        let compact = self.space.is_compact_space()?;
        let mut all_fixed = true;
        let mut fam = Vec::with_capacity(4);
        let mut visit = |fam: &[Subset], t: &mut Tally| -> Result<()> {
            if has_fip(fam)? {
                let meet = fam.iter().fold(self.space.full(), |acc, s| acc.intersection(s));
                all_fixed &= !meet.is_empty();
                let ext = fip_extension(&self.space, fam);
                t.check(ext.as_ref().is_ok_and(|u| fam.iter().all(|s| u.contains(s)) && is_ultrafilter(u)), || {
                    format!(
                        "FIP family {:?} has no ultrafilter extension",
                        fam.iter().map(|s| self.r(s)).collect::<Vec<_>>()
                    )
                });
            }
            Ok(())
        };
        let k = sets.len();
        for a in 0..k {
            fam.clear();
            fam.push(sets[a]);
            visit(&fam, &mut t)?;
            for b in a + 1..k {
                fam.truncate(1);
                fam.push(sets[b]);
                visit(&fam, &mut t)?;
                for c in b + 1..k {
                    fam.truncate(2);
                    fam.push(sets[c]);
                    visit(&fam, &mut t)?;
                    for &d in &sets[c + 1..k] {
                        fam.truncate(3);
                        fam.push(d);
                        visit(&fam, &mut t)?;
                    }
                }
            }
        }
        t.check(compact == all_fixed, || format!("compact = {compact}, FIP families have nonempty meet = {all_fixed}"));
        Ok(t.finish())
    }

    /// The five compactness conditions.
    pub fn compactness_conditions(&self) -> Result<CompactnessAudit> {
        let compact = self.space.is_compact_space()?;
        let proper_ideals_fixed = (0..self.ideals.len()).all(|k| !self.kernel(k).is_empty());
        let maximal_ideals_fixed = self.maximal.iter().all(|&k| !self.kernel(k).is_empty());
        let filters = enumerate_filters(&self.space);
        let filters_fixed = filters.iter().all(|f| matches!(fixed_or_free(f), Fixedness::Fixed { .. }));
        let ultrafilters_fixed = filters
            .iter()
            .filter(|f| meets_implies_member(f))
            .all(|u| !u.members().iter().fold(self.space.full(), |acc, s| acc.intersection(s)).is_empty());
        Ok(CompactnessAudit { compact, proper_ideals_fixed, maximal_ideals_fixed, filters_fixed, ultrafilters_fixed })
    }

    pub fn compactness_equivalences(&self) -> Result<Verdict> {
        let c = self.compactness_conditions()?;
        let mut t = Tally::new();
        t.check(c.agree(), || format!("conditions disagree: {:?}", c.all()));
        t.check(c.compact, || "finite space is not compact".into());
        Ok(t.finish())
    }

    pub fn prime_audit(&self, k: usize) -> PrimeAudit {
        let ideal = &self.ideals[k];
        let m = &self.members[k];
        let contains_prime = (0..self.ideals.len()).any(|l| self.ring_prime[l] && self.members[l].is_subset_of(m));
        let zero_product = (0..self.n)
            .all(|i| (i..self.n).all(|j| !self.product_zero(i, j).is_full() || m.contains(i) || m.contains(j)));
        let zfam = ideal.zero_family().members();
        let sign_condition = self.sample.functions().iter().all(|f| zfam.iter().any(|z| f.keeps_sign_on(z)));
        PrimeAudit {
            ring_prime: self.ring_prime[k],
            contains_prime,
            zero_product,
            sign_condition,
            filter_prime: is_prime_filter(ideal.zero_family()),
        }
    }

    /// The prime-ideal conditions agree on every ideal; ideals containing a
    /// prime ideal are prime.
    pub fn prime_conditions(&self) -> Verdict {
        let mut t = Tally::new();
        for k in 0..self.ideals.len() {
            let a = self.prime_audit(k);
            t.check(a.agree(), || format!("{}: {a:?}", self.ideal_name(k)));
            if a.ring_prime {
                for l in 0..self.ideals.len() {
                    if self.members[k].is_subset_of(&self.members[l]) {
                        t.check(self.ring_prime[l], || {
                            format!("{} contains prime {} but is not prime", self.ideal_name(l), self.ideal_name(k))
                        });
                    }
                }
            }
        }
        for &k in &self.maximal {
            t.check(self.ring_prime[k], || format!("maximal {} is not prime", self.ideal_name(k)));
        }
        t.finish()
    }

    /// Each prime ideal lies in exactly one maximal ideal.
    pub fn gelfand(&self) -> Verdict {
        let mut t = Tally::new();
        for k in (0..self.ideals.len()).filter(|&k| self.ring_prime[k]) {
            let above = self.maximal.iter().filter(|&&m| self.members[k].is_subset_of(&self.members[m])).count();
            t.check(above == 1, || format!("prime {} lies in {above} maximal ideals", self.ideal_name(k)));
        }
        t.finish()
    }

    /// T-measurable iff every prime ideal has at most one common zero.
    pub fn prime_kernels(&self) -> Verdict {
        let mut t = Tally::new();
        let separated = self.space.is_t_measurable();
        let bounded = (0..self.ideals.len()).filter(|&k| self.ring_prime[k]).all(|k| self.kernel(k).len() <= 1);
        t.check(separated == bounded, || {
            format!("T-measurable = {separated}, prime kernels have ≤ 1 point = {bounded}")
        });
        t.finish()
    }

    /// Point separation, distinctness of point ideals, and `|⋂Z[M]| ≤ 1`
    /// for maximal `M` are equivalent.
    pub fn maximal_kernels(&self) -> Verdict {
        let mut t = Tally::new();
        let separated = self.space.is_t_measurable();
        let n = self.space.size();
        let point_sets: Vec<FnSet> = (0..n).map(|p| self.members_where(|f| f.value(p).is_zero())).collect();
        let distinct = (0..n).all(|x| (x + 1..n).all(|y| point_sets[x] != point_sets[y]));
        let bounded = self.maximal.iter().all(|&k| self.kernel(k).len() <= 1);
        t.check(separated == distinct && distinct == bounded, || {
            format!("separated = {separated}, M_x distinct = {distinct}, maximal kernels ≤ 1 = {bounded}")
        });
        t.finish()
    }

    /// On a T-measurable space, `P` is prime iff `|X ∖ P| = 1`.
    pub fn prime_elements_are_coatoms(&self) -> Result<Option<Verdict>> {
        if !self.space.is_t_measurable() {
            return Ok(None);
        }
        let mut t = Tally::new();
        for p in self.space.sets() {
            let prime = self.space.is_prime_element(p)?;
            let co = p.complement().len() == 1;
            t.check(prime == co, || format!("P = {}: prime = {prime}, |X∖P| = 1 is {co}", self.r(p)));
        }
        Ok(Some(t.finish()))
    }

    /// `Z` maps prime ideals one-one onto prime filters.
    pub fn prime_filter_correspondence(&self) -> Verdict {
        let mut t = Tally::new();
        let mut images: Vec<&LatticeFilter> = Vec::new();
        for (k, ideal) in self.ideals.iter().enumerate() {
            let fp = is_prime_filter(ideal.zero_family());
            t.check(fp == self.ring_prime[k], || {
                format!("{}: prime ideal = {}, prime filter = {fp}", self.ideal_name(k), self.ring_prime[k])
            });
            if self.ring_prime[k] {
                t.check(!images.contains(&ideal.zero_family()), || {
                    format!("two prime ideals share {}", ideal.zero_family().render())
                });
                images.push(ideal.zero_family());
            }
        }
        for f in enumerate_filters(&self.space).iter().filter(|f| is_prime_filter(f)) {
            t.check(images.contains(&f), || format!("prime filter {} is no Z[P]", f.render()));
        }
        t.finish()
    }

    /// `M^I = M^J ⇔ I = J` over all lattice ideals of `𝒜`.
    pub fn cozero_ideals_injective(&self) -> Verdict {
        let mut t = Tally::new();
        let ideals = enumerate_ideals(&self.space);
        let sets: Vec<FnSet> = ideals.iter().map(|j| self.m_j(j)).collect();
        for a in 0..ideals.len() {
            for b in 0..ideals.len() {
                t.check((sets[a] == sets[b]) == (ideals[a] == ideals[b]), || {
                    format!("M^I = M^J fails to separate {} and {}", ideals[a].render(), ideals[b].render())
                });
            }
        }
        t.finish()
    }

    /// Prime ideals of `𝒜` are its maximal ideals.
    pub fn prime_lattice_ideals_are_maximal(&self) -> Verdict {
        let mut t = Tally::new();
        let sigma = sigma_id(&self.space);
        let max = max_id(&self.space);
        t.check(sigma == max, || format!("{} prime vs {} maximal lattice ideals", sigma.len(), max.len()));
        for j in enumerate_ideals(&self.space) {
            let a = is_prime_lattice_ideal(&j);
            let b = is_prime_ideal_elementwise(&j);
            t.check(a == b, || format!("{}: prime in Id(𝒜) = {a}, elementwise = {b}", j.render()));
        }
        t.finish()
    }

    /// Maximal ideals are exactly `M^J` for a unique prime `J` of `𝒜`.
    pub fn maximal_via_prime_lattice_ideals(&self) -> Result<Verdict> {
        let mut t = Tally::new();
        let sigma = sigma_id(&self.space);
        let sets: Vec<FnSet> = sigma.iter().map(|j| self.m_j(j)).collect();
        for &k in &self.maximal {
            let count = sets.iter().filter(|s| **s == self.members[k]).count();
            t.check(count == 1, || format!("{} equals M^J for {count} prime J", self.ideal_name(k)));
        }
        for (j, s) in sigma.iter().zip(&sets) {
            let k = self.index_of_members(s);
            t.check(k.is_some_and(|k| self.maximal.contains(&k)), || {
                format!("M^J for J = {} is not maximal", j.render())
            });
            t.check(k.is_some_and(|k| self.ideals[k] == cozero_ideal(j)), || {
                format!("M^J for J = {} differs from its zero-set construction", j.render())
            });
        }
        let listed = maximal_ideals(&self.space)?;
        t.check(listed.len() == self.maximal.len(), || {
            format!("{} listed maximal ideals, {} by inclusion", listed.len(), self.maximal.len())
        });
        Ok(t.finish())
    }

    /// `M_P = {f : coz(f) ⊆ P}` for prime elements `P` are exactly the fixed
    /// maximal ideals with `⋃ coz(f) ∈ 𝒜`.
    pub fn fixed_maximal_via_prime_elements(&self) -> Result<Verdict> {
        let mut t = Tally::new();
        for p in self.space.prime_elements()? {
            let set = self.members_where(|f| f.cozero().is_subset_of(&p));
            let k = self.index_of_members(&set);
            let ok = k.is_some_and(|k| self.maximal.contains(&k) && !self.kernel(k).is_empty());
            t.check(ok, || format!("M_P for P = {} is not fixed maximal", self.r(&p)));
            let built = ideal_from_prime_element(&self.space, &p)?;
            t.check(k.is_some_and(|k| self.ideals[k] == built), || {
                format!("M_P for P = {} differs from its zero-set construction", self.r(&p))
            });
        }
        for &k in &self.maximal {
            let u = self.cozero_union(k);
            if self.kernel(k).is_empty() || !self.space.contains(&u) {
                continue;
            }
            let prime = self.space.is_prime_element(&u)?;
            let same = self.members_where(|f| f.cozero().is_subset_of(&u)) == self.members[k];
            t.check(prime && same, || {
                format!("{}: ⋃coz = {} prime = {prime}, M = M_P is {same}", self.ideal_name(k), self.r(&u))
            });
        }
        Ok(t.finish())
    }

    /// With `⋃ coz(f) ∈ 𝒜`, fixed prime ideals are the fixed maximal ideals.
    pub fn fixed_prime_is_fixed_maximal(&self) -> Verdict {
        let mut t = Tally::new();
        for k in 0..self.ideals.len() {
            if !self.space.contains(&self.cozero_union(k)) {
                continue;
            }
            let fixed = !self.kernel(k).is_empty();
            let a = fixed && self.ring_prime[k];
            let b = fixed && self.maximal.contains(&k);
            t.check(a == b, || format!("{}: fixed prime = {a}, fixed maximal = {b}", self.ideal_name(k)));
        }
        t.finish()
    }
}
