//! The ring `M(X)` of measurable functions on a finite measurable space.
//!
//! On a finite space a function is measurable exactly when it is constant on
//! every atom, so values are stored per point and checked against the atoms.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::space::MeasurableSpace;
use crate::subset::Subset;

/// Largest atom count for which the full `{-1, 0, 1}` sign-pattern quotient is built.
pub const MAX_PATTERN_ATOMS: usize = 10;

/// An atom-constant function into the rationals.
#[derive(Clone)]
pub struct MeasurableFn {
    space: MeasurableSpace,
    values: Vec<Rational>,
}

impl MeasurableFn {
    /// One value per point; rejects functions that are not constant on some atom.
    pub fn new(space: &MeasurableSpace, values: Vec<Rational>) -> Result<Self> {
        if values.len() != space.size() {
            return Err(Error::InputShape(format!(
                "{} values for a ground set of {} points",
                values.len(),
                space.size()
            )));
        }
        for atom in space.atoms() {
            let mut pts = atom.points();
            let first = pts.next().expect("atoms are nonempty");
            if pts.any(|p| values[p] != values[first]) {
                return Err(Error::NotMeasurable { atom: space.render(atom) });
            }
        }
        Ok(MeasurableFn { space: space.clone(), values })
    }

    /// One value per atom, in atom order.
    pub fn from_atom_values(space: &MeasurableSpace, per_atom: &[Rational]) -> Result<Self> {
        if per_atom.len() != space.atom_count() {
            return Err(Error::InputShape(format!("{} atom values for {} atoms", per_atom.len(), space.atom_count())));
        }
        let values = (0..space.size()).map(|p| per_atom[space.atom_of(p)].clone()).collect();
        Ok(MeasurableFn { space: space.clone(), values })
    }

    /// The constant function `r`.
    pub fn scalar(space: &MeasurableSpace, r: Rational) -> Self {
        MeasurableFn { space: space.clone(), values: vec![r; space.size()] }
    }

    pub fn zero(space: &MeasurableSpace) -> Self {
        Self::scalar(space, Rational::zero())
    }

    pub fn one(space: &MeasurableSpace) -> Self {
        Self::scalar(space, Rational::one())
    }

    /// `χ_A`, defined for measurable `A`.
    pub fn characteristic(space: &MeasurableSpace, a: &Subset) -> Result<Self> {
        space.require_member(a)?;
        let values =
            (0..space.size()).map(|p| if a.contains(p) { Rational::one() } else { Rational::zero() }).collect();
        Ok(MeasurableFn { space: space.clone(), values })
    }

    pub fn space(&self) -> &MeasurableSpace {
        &self.space
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, point: usize) -> &Rational {
        &self.values[point]
    }

    /// Value on atom `i`.
    pub fn atom_value(&self, i: usize) -> &Rational {
        let p = self.space.atoms()[i].first().expect("atoms are nonempty");
        &self.values[p]
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.space.same_as(&other.space) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    fn zip(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| op(a, b)).collect();
        Ok(MeasurableFn { space: self.space.clone(), values })
    }

    fn map(&self, op: impl Fn(&Rational) -> Rational) -> Self {
        MeasurableFn { space: self.space.clone(), values: self.values.iter().map(op).collect() }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        self.map(|a| -a)
    }

    /// Pointwise maximum.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.max(b).clone())
    }

    /// Pointwise minimum.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.min(b).clone())
    }

    pub fn abs(&self) -> Self {
        self.map(Rational::abs)
    }

    /// `f⁺ = f ∨ 0`.
    pub fn pos_part(&self) -> Self {
        self.map(|a| if a.is_positive() { a.clone() } else { Rational::zero() })
    }

    /// `f⁻ = (−f) ∨ 0`, so that `f = f⁺ − f⁻` and `f ∧ 0 = −f⁻`.
    pub fn neg_part(&self) -> Self {
        self.map(|a| if a.is_negative() { -a } else { Rational::zero() })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|a| a * r)
    }

    pub fn pow(&self, n: u32) -> Self {
        self.map(|a| (0..n).fold(Rational::one(), |acc, _| &acc * a))
    }

    /// `Z(f) = {x : f(x) = 0}`.
    pub fn zero_set(&self) -> Subset {
        Subset::from_points(self.space.size(), (0..self.space.size()).filter(|&p| self.values[p].is_zero()))
    }

    /// `coz(f) = X ∖ Z(f)`.
    pub fn cozero(&self) -> Subset {
        self.zero_set().complement()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Rational::is_zero)
    }

    pub fn is_unit(&self) -> bool {
        self.zero_set().is_empty()
    }

    /// Pointwise reciprocal of a unit.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NonUnit { zero_set: self.space.render(&self.zero_set()) });
        }
        Ok(self.map(|a| a.recip().expect("unit has no zeros")))
    }

    /// `1/f` on `coz(f)` and `0` on `Z(f)`.
    pub fn reciprocal_on_cozero(&self) -> Self {
        self.map(|a| a.recip().unwrap_or_else(Rational::zero))
    }

    /// Whether `f` takes only values `≥ 0`, or only values `≤ 0`, on `set`.
    pub fn keeps_sign_on(&self, set: &Subset) -> bool {
        let mut pos = false;
        let mut neg = false;
        for p in set.points() {
            pos |= self.values[p].is_positive();
            neg |= self.values[p].is_negative();
        }
        !(pos && neg)
    }

    /// Renders as `{a:1, b:0, c:1/2}`.
    pub fn render(&self) -> String {
        let parts: Vec<String> =
            (0..self.space.size()).map(|p| format!("{}:{}", self.space.ground().label(p), self.values[p])).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Parses `{a:1, b:0, c:-1/2}`; every point must be assigned exactly once.
    pub fn parse(space: &MeasurableSpace, text: &str) -> Result<Self> {
        let bad = |m: String| Error::InputShape(m);
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| bad(format!("function literal must be wrapped in braces: '{t}'")))?;
        let ground = space.ground();
        let mut values: Vec<Option<Rational>> = vec![None; ground.size()];
        for entry in inner.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (label, value) =
                entry.split_once(':').ok_or_else(|| bad(format!("expected 'label:value', found '{entry}'")))?;
            let label = label.trim();
            let p = ground.index_of(label).ok_or_else(|| Error::UnknownPoint(label.to_string()))?;
            let v: Rational = value.trim().parse().map_err(|e| bad(format!("{e}")))?;
            if values[p].replace(v).is_some() {
                return Err(bad(format!("point '{label}' assigned twice")));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(p, v)| v.ok_or_else(|| bad(format!("no value for point '{}'", ground.label(p)))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(space, values)
    }
}

impl PartialEq for MeasurableFn {
    fn eq(&self, other: &Self) -> bool {
        self.space.same_as(&other.space) && self.values == other.values
    }
}

impl Eq for MeasurableFn {}

impl fmt::Debug for MeasurableFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Values of an arbitrary (not necessarily measurable) function, grouped into level sets.
pub fn level_sets(width: usize, values: &[Rational]) -> Vec<Subset> {
    let mut levels: Vec<(&Rational, Subset)> = Vec::new();
    for (p, v) in values.iter().enumerate() {
        match levels.iter_mut().find(|(r, _)| *r == v) {
            Some((_, s)) => *s = s.with(p),
            None => levels.push((v, Subset::singleton(width, p))),
        }
    }
    levels.into_iter().map(|(_, s)| s).collect()
}

/// Every function with values in `{-1, 0, 1}` on each atom: `3^atoms` functions.
///
/// Zero-sets, sign data and products of these realize every configuration
/// that the ideal-theoretic predicates depend on.
pub fn sign_patterns(space: &MeasurableSpace) -> Result<Vec<MeasurableFn>> {
    let k = space.atom_count();
    if k > MAX_PATTERN_ATOMS {
        return Err(Error::ResourceCap {
            what: format!("sign-pattern quotient on {k} atoms"),
            cap: 3u64.pow(MAX_PATTERN_ATOMS as u32),
        });
    }
    let digits = [Rational::zero(), Rational::one(), Rational::integer(-1)];
    let mut out = Vec::with_capacity(3usize.pow(k as u32));
    for code in 0..3usize.pow(k as u32) {
        let mut c = code;
        let per_atom: Vec<Rational> = (0..k)
            .map(|_| {
                let d = digits[c % 3].clone();
                c /= 3;
                d
            })
            .collect();
        out.push(MeasurableFn::from_atom_values(space, &per_atom)?);
    }
    Ok(out)
}

/// `count` random measurable functions with small rational values; about a
/// quarter of atom values are zero so that zero-sets vary.
pub fn random_functions<R: Rng>(space: &MeasurableSpace, count: usize, rng: &mut R) -> Vec<MeasurableFn> {
    (0..count)
        .map(|_| {
            let per_atom: Vec<Rational> = (0..space.atom_count()).map(|_| random_value(rng)).collect();
            MeasurableFn::from_atom_values(space, &per_atom).expect("one value per atom")
        })
        .collect()
}

pub(crate) fn random_value<R: Rng>(rng: &mut R) -> Rational {
    if rng.gen_range(0..4) == 0 {
        Rational::zero()
    } else {
        let mut num = rng.gen_range(1..=7i64);
        if rng.gen_bool(0.5) {
            num = -num;
        }
        Rational::new(num, rng.gen_range(1..=5i64))
    }
}
