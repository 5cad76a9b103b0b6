//! The category of partial bijections between finite sets.
//!
//! Objects are [`FinSet`]s, morphisms are [`PBij`]s, and the empty set
//! (named `"0"`) is the zero object. Alongside the generic
//! [`FiniteCategory`] implementation this module carries the closed forms
//! of the structure maps: inverse as pair reversal, annihilator as the
//! complement of the domain, kernels and cokernels as subset inclusions and
//! co-restrictions, and the three transfer maps on subsets.

use std::borrow::Cow;
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::category::{FiniteCategory, ObjectId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbijError {
    #[error("finite sets need a non-empty name")]
    EmptyName,
    #[error("label {label} appears twice in {set}")]
    DuplicateLabel { set: String, label: String },
    #[error("{element} is not an element of {set}")]
    UnknownElement { set: String, element: String },
    #[error("domain element {element} is mapped twice")]
    DuplicateDomainElement { element: String },
    #[error("codomain element {element} is hit twice")]
    DuplicateCodomainElement { element: String },
    #[error("cannot compose {f} after {g}")]
    NotComposable { f: String, g: String },
    #[error("Hom({m}, {n}) has {size} partial bijections, over the budget of {limit}")]
    BudgetExceeded {
        m: usize,
        n: usize,
        size: u128,
        limit: usize,
    },
    #[error("objects {0} are declared twice with different elements")]
    ConflictingObject(String),
}

/// A named finite set. Elements are kept in lexicographic order, and the
/// position of an element in that order is its index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinSet {
    name: Arc<str>,
    elements: Arc<[String]>,
}

impl FinSet {
    pub fn new<I, S>(name: impl Into<String>, elements: I) -> Result<Self, PbijError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let name = name.into();
        if name.is_empty() {
            return Err(PbijError::EmptyName);
        }
        let mut elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        elements.sort();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(PbijError::DuplicateLabel {
                set: name,
                label: w[0].clone(),
            });
        }
        Ok(FinSet {
            name: name.into(),
            elements: elements.into(),
        })
    }

    /// `{1, ..., n}` named `n`.
    pub fn canonical(n: usize) -> Self {
        FinSet::new(n.to_string(), (1..=n).map(|i| i.to_string()))
            .expect("canonical labels are distinct")
    }

    /// The empty set, named `"0"`.
    pub fn zero() -> Self {
        FinSet::canonical(0)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements
            .binary_search_by(|e| e.as_str().cmp(label))
            .ok()
    }

    fn lookup(&self, label: &str) -> Result<u32, PbijError> {
        self.index_of(label)
            .map(|i| i as u32)
            .ok_or_else(|| PbijError::UnknownElement {
                set: self.name.to_string(),
                element: label.to_owned(),
            })
    }

    /// The object carried by a subset: the set itself when the subset is
    /// everything, the zero object when it is empty, otherwise a fresh set
    /// named after its members.
    pub fn restrict(&self, s: &Subset) -> FinSet {
        debug_assert_eq!(&s.set, self);
        if s.members.len() == self.len() {
            self.clone()
        } else if s.members.is_empty() {
            FinSet::zero()
        } else {
            FinSet::new(s.to_string(), s.labels().map(str::to_owned))
                .expect("subset labels are distinct")
        }
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{{}}}", self.name, self.elements.join(","))
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A subset of a [`FinSet`], the model-side view of a projection.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subset {
    set: FinSet,
    members: Vec<u32>,
}

impl Subset {
    pub fn new<S: AsRef<str>>(set: &FinSet, labels: &[S]) -> Result<Self, PbijError> {
        let mut members = labels
            .iter()
            .map(|l| set.lookup(l.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        members.sort_unstable();
        members.dedup();
        Ok(Subset {
            set: set.clone(),
            members,
        })
    }

    fn from_sorted(set: &FinSet, members: Vec<u32>) -> Self {
        Subset {
            set: set.clone(),
            members,
        }
    }

    fn from_mask(set: &FinSet, mask: &[bool]) -> Self {
        let members = (0..set.len() as u32)
            .filter(|&i| mask[i as usize])
            .collect();
        Subset::from_sorted(set, members)
    }

    pub fn all(set: &FinSet) -> Self {
        Subset::from_sorted(set, (0..set.len() as u32).collect())
    }

    pub fn empty(set: &FinSet) -> Self {
        Subset::from_sorted(set, Vec::new())
    }

    /// Every subset of `set`, ordered by bitmask.
    pub fn power_set(set: &FinSet) -> Vec<Subset> {
        let n = set.len();
        assert!(n < 32, "power set of {n} elements is out of reach");
        (0u32..1 << n)
            .map(|mask| {
                Subset::from_sorted(set, (0..n as u32).filter(|i| mask >> i & 1 == 1).collect())
            })
            .collect()
    }

    pub fn set(&self) -> &FinSet {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&(i as u32)).is_ok()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.members
            .iter()
            .map(|&i| self.set.elements[i as usize].as_str())
    }

    fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.set.len()];
        for &i in &self.members {
            m[i as usize] = true;
        }
        m
    }

    pub fn complement(&self) -> Subset {
        let m = self.mask();
        Subset::from_mask(&self.set, &m.iter().map(|b| !b).collect::<Vec<_>>())
    }

    pub fn intersect(&self, other: &Subset) -> Subset {
        let o = other.mask();
        Subset::from_sorted(
            &self.set,
            self.members
                .iter()
                .copied()
                .filter(|&i| o[i as usize])
                .collect(),
        )
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let (a, b) = (self.mask(), other.mask());
        Subset::from_mask(
            &self.set,
            &a.iter().zip(&b).map(|(x, y)| *x || *y).collect::<Vec<_>>(),
        )
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.members.iter().all(|&i| other.contains(i as usize))
    }

    /// The partial identity on this subset.
    pub fn to_projection(&self) -> PBij {
        PBij {
            dom: self.set.clone(),
            cod: self.set.clone(),
            pairs: self.members.iter().map(|&i| (i, i)).collect(),
        }
    }

    /// The subset a partial identity fixes, or `None` for other morphisms.
    pub fn from_projection(p: &PBij) -> Option<Subset> {
        if p.dom != p.cod || p.pairs.iter().any(|(x, y)| x != y) {
            return None;
        }
        Some(Subset::from_sorted(
            &p.dom,
            p.pairs.iter().map(|&(x, _)| x).collect(),
        ))
    }

    /// The inclusion of this subset's object into the ambient set.
    pub fn inclusion(&self) -> PBij {
        let sub = self.set.restrict(self);
        let pairs = self
            .members
            .iter()
            .enumerate()
            .map(|(k, &i)| (k as u32, i))
            .collect();
        PBij {
            dom: sub,
            cod: self.set.clone(),
            pairs,
        }
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().collect::<Vec<_>>().join(","))
    }
}

/// A partial bijection `dom ⇀ cod`, stored as index pairs sorted by domain
/// element. Equality is extensional.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PBij {
    dom: FinSet,
    cod: FinSet,
    pairs: Vec<(u32, u32)>,
}

impl PBij {
    /// Validated construction from element labels.
    pub fn new<S: AsRef<str>>(
        dom: &FinSet,
        cod: &FinSet,
        pairs: &[(S, S)],
    ) -> Result<Self, PbijError> {
        let idx = pairs
            .iter()
            .map(|(x, y)| Ok((dom.lookup(x.as_ref())?, cod.lookup(y.as_ref())?)))
            .collect::<Result<Vec<_>, PbijError>>()?;
        PBij::from_index_pairs(dom, cod, idx)
    }

    pub fn from_index_pairs(
        dom: &FinSet,
        cod: &FinSet,
        mut pairs: Vec<(u32, u32)>,
    ) -> Result<Self, PbijError> {
        if let Some(&(x, _)) = pairs.iter().find(|(x, _)| *x as usize >= dom.len()) {
            return Err(PbijError::UnknownElement {
                set: dom.name().to_owned(),
                element: format!("#{x}"),
            });
        }
        if let Some(&(_, y)) = pairs.iter().find(|(_, y)| *y as usize >= cod.len()) {
            return Err(PbijError::UnknownElement {
                set: cod.name().to_owned(),
                element: format!("#{y}"),
            });
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(PbijError::DuplicateDomainElement {
                element: dom.elements[w[0].0 as usize].clone(),
            });
        }
        let mut targets: Vec<u32> = pairs.iter().map(|p| p.1).collect();
        targets.sort_unstable();
        if let Some(w) = targets.windows(2).find(|w| w[0] == w[1]) {
            return Err(PbijError::DuplicateCodomainElement {
                element: cod.elements[w[0] as usize].clone(),
            });
        }
        Ok(PBij {
            dom: dom.clone(),
            cod: cod.clone(),
            pairs,
        })
    }

    pub fn identity(a: &FinSet) -> Self {
        Subset::all(a).to_projection()
    }

    pub fn zero(a: &FinSet, b: &FinSet) -> Self {
        PBij {
            dom: a.clone(),
            cod: b.clone(),
            pairs: Vec::new(),
        }
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.pairs.iter().map(|&(x, y)| {
            (
                self.dom.elements[x as usize].as_str(),
                self.cod.elements[y as usize].as_str(),
            )
        })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&(x as u32), |p| p.0)
            .ok()
            .map(|k| self.pairs[k].1 as usize)
    }

    /// Pair reversal, the canonical involution.
    pub fn inverse(&self) -> PBij {
        let mut pairs: Vec<(u32, u32)> = self.pairs.iter().map(|&(x, y)| (y, x)).collect();
        pairs.sort_unstable();
        PBij {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            pairs,
        }
    }

    /// `self` after `g`.
    pub fn compose(&self, g: &PBij) -> Result<PBij, PbijError> {
        if g.cod != self.dom {
            return Err(PbijError::NotComposable {
                f: self.to_string(),
                g: g.to_string(),
            });
        }
        Ok(self.compose_unchecked(g))
    }

    pub(crate) fn compose_unchecked(&self, g: &PBij) -> PBij {
        let pairs = g
            .pairs
            .iter()
            .filter_map(|&(x, y)| self.apply(y as usize).map(|z| (x, z as u32)))
            .collect();
        PBij {
            dom: g.dom.clone(),
            cod: self.cod.clone(),
            pairs,
        }
    }

    pub fn domain(&self) -> Subset {
        Subset::from_sorted(&self.dom, self.pairs.iter().map(|p| p.0).collect())
    }

    pub fn image(&self) -> Subset {
        let mut im: Vec<u32> = self.pairs.iter().map(|p| p.1).collect();
        im.sort_unstable();
        Subset::from_sorted(&self.cod, im)
    }

    /// Defined everywhere; the monomorphisms of the category.
    pub fn is_total(&self) -> bool {
        self.pairs.len() == self.dom.len()
    }

    /// Hits every codomain element; the epimorphisms of the category.
    pub fn is_surjective(&self) -> bool {
        self.pairs.len() == self.cod.len()
    }

    /// `f′ = i_{A∖dom f}`.
    pub fn annihilator(&self) -> PBij {
        self.domain().complement().to_projection()
    }

    /// Inclusion of `A∖dom f` into `A`.
    pub fn kernel(&self) -> PBij {
        self.domain().complement().inclusion()
    }

    /// Partial identity `B ⇀ B∖im f`.
    pub fn cokernel(&self) -> PBij {
        self.image().complement().inclusion().inverse()
    }

    /// `(p, q)` with `p` the inclusion of the image and `q` the co-restriction
    /// of `self` onto it. Monomorphisms factor as `(f, id)`.
    pub fn factorize(&self) -> (PBij, PBij) {
        if self.is_total() {
            return (self.clone(), PBij::identity(&self.dom));
        }
        let im = self.image();
        let p = im.inclusion();
        let q = p.inverse().compose_unchecked(self);
        (p, q)
    }

    /// `P(f)(i_S) = i_{f(S ∩ dom f)}`.
    pub fn image_of(&self, s: &Subset) -> Subset {
        let mut out: Vec<u32> = s
            .members
            .iter()
            .filter_map(|&x| self.apply(x as usize).map(|y| y as u32))
            .collect();
        out.sort_unstable();
        Subset::from_sorted(&self.cod, out)
    }

    /// `f⁻¹(T)`, the strict preimage: `P″(f)(i_T)`.
    pub fn preimage(&self, t: &Subset) -> Subset {
        Subset::from_sorted(
            &self.dom,
            self.pairs
                .iter()
                .filter(|(_, y)| t.contains(*y as usize))
                .map(|p| p.0)
                .collect(),
        )
    }

    /// `f⁻¹(T) ∪ (A∖dom f)`: `P′(f)(i_T)`.
    pub fn inverse_image(&self, t: &Subset) -> Subset {
        self.preimage(t).union(&self.domain().complement())
    }
}

impl fmt::Display for PBij {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (x, y)) in self.pairs().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({x},{y})")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PBij {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}: {}→{}", self.dom.name, self.cod.name)
    }
}

/// Closed-form structure maps of a partial bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbijStructure {
    pub inverse: PBij,
    pub annihilator: PBij,
    pub domain_projection: PBij,
    pub image_projection: PBij,
}

pub fn pbij_structure(f: &PBij) -> PbijStructure {
    PbijStructure {
        inverse: f.inverse(),
        annihilator: f.annihilator(),
        domain_projection: f.domain().to_projection(),
        image_projection: f.image().to_projection(),
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_k C(m,k)·C(n,k)·k!`, the number of partial bijections between sets of
/// sizes `m` and `n`. Saturates on overflow.
pub fn hom_count(m: usize, n: usize) -> u128 {
    let (m, n) = (m as u128, n as u128);
    let mut total: u128 = 0;
    let mut fact: u128 = 1;
    for k in 0..=m.min(n) {
        if k > 0 {
            fact = fact.saturating_mul(k);
        }
        let term = binomial(m, k)
            .saturating_mul(binomial(n, k))
            .saturating_mul(fact);
        total = total.saturating_add(term);
    }
    total
}

/// All partial bijections `a ⇀ b` in canonical order.
pub fn enumerate_pbij(a: &FinSet, b: &FinSet, limit: usize) -> Result<Vec<PBij>, PbijError> {
    let size = hom_count(a.len(), b.len());
    if size > limit as u128 {
        return Err(PbijError::BudgetExceeded {
            m: a.len(),
            n: b.len(),
            size,
            limit,
        });
    }
    fn go(
        x: u32,
        m: u32,
        used: &mut [bool],
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        if x == m {
            out.push(cur.clone());
            return;
        }
        go(x + 1, m, used, cur, out);
        for y in 0..used.len() {
            if !used[y] {
                used[y] = true;
                cur.push((x, y as u32));
                go(x + 1, m, used, cur, out);
                cur.pop();
                used[y] = false;
            }
        }
    }
    let mut raw = Vec::with_capacity(size as usize);
    go(
        0,
        a.len() as u32,
        &mut vec![false; b.len()],
        &mut Vec::new(),
        &mut raw,
    );
    raw.sort_unstable();
    Ok(raw
        .into_iter()
        .map(|pairs| PBij {
            dom: a.clone(),
            cod: b.clone(),
            pairs,
        })
        .collect())
}

/// Full subcategory of partial bijections on a list of finite sets, always
/// containing the zero object `"0"`.
#[derive(Debug)]
pub struct PbijCategory {
    name: String,
    objects: Vec<FinSet>,
    homs: Vec<OnceLock<Vec<PBij>>>,
}

impl PbijCategory {
    /// The zero object is prepended when missing. Sets sharing a name must
    /// be identical.
    pub fn new(
        name: impl Into<String>,
        objects: impl IntoIterator<Item = FinSet>,
    ) -> Result<Self, PbijError> {
        let mut list = vec![FinSet::zero()];
        for o in objects {
            match list.iter().find(|x| x.name() == o.name()) {
                Some(x) if *x == o => {}
                Some(_) => return Err(PbijError::ConflictingObject(o.name().to_owned())),
                None => list.push(o),
            }
        }
        let n = list.len();
        Ok(PbijCategory {
            name: name.into(),
            objects: list,
            homs: (0..n * n).map(|_| OnceLock::new()).collect(),
        })
    }

    /// Objects `{1..k}` for each listed size, plus the zero object.
    pub fn canonical(sizes: &[usize]) -> Self {
        let mut sizes = sizes.to_vec();
        sizes.sort_unstable();
        sizes.dedup();
        let name = format!(
            "pbij[{}]",
            sizes
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        );
        PbijCategory::new(name, sizes.into_iter().map(FinSet::canonical))
            .expect("canonical names are distinct")
    }

    pub fn object(&self, name: &str) -> Option<&FinSet> {
        self.objects.iter().find(|o| o.name() == name)
    }

    pub fn max_object_size(&self) -> usize {
        self.objects.iter().map(FinSet::len).max().unwrap_or(0)
    }

    fn position(&self, a: &FinSet) -> Option<usize> {
        self.objects.iter().position(|o| o == a)
    }
}

impl FiniteCategory for PbijCategory {
    type Object = FinSet;
    type Morphism = PBij;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn objects(&self) -> Cow<'_, [FinSet]> {
        Cow::Borrowed(&self.objects)
    }

    fn object_id(&self, a: &FinSet) -> ObjectId {
        ObjectId::new(a.name()).expect("finite sets have non-empty names")
    }

    fn hom(&self, dom: &FinSet, cod: &FinSet) -> Cow<'_, [PBij]> {
        match (self.position(dom), self.position(cod)) {
            (Some(i), Some(j)) => {
                Cow::Borrowed(self.homs[i * self.objects.len() + j].get_or_init(|| {
                    enumerate_pbij(dom, cod, usize::MAX).expect("unbounded enumeration")
                }))
            }
            _ => Cow::Owned(Vec::new()),
        }
    }

    fn hom_size(&self, dom: &FinSet, cod: &FinSet) -> u128 {
        hom_count(dom.len(), cod.len())
    }

    fn dom(&self, f: &PBij) -> FinSet {
        f.dom.clone()
    }

    fn cod(&self, f: &PBij) -> FinSet {
        f.cod.clone()
    }

    fn identity(&self, a: &FinSet) -> PBij {
        PBij::identity(a)
    }

    fn compose_unchecked(&self, f: &PBij, g: &PBij) -> PBij {
        f.compose_unchecked(g)
    }

    fn involution(&self, f: &PBij) -> PBij {
        f.inverse()
    }

    fn zero_object(&self) -> Option<FinSet> {
        Some(FinSet::zero())
    }

    fn render(&self, f: &PBij) -> String {
        format!("{f:?}")
    }

    fn zero(&self, a: &FinSet, b: &FinSet) -> Option<PBij> {
        Some(PBij::zero(a, b))
    }

    fn is_zero(&self, f: &PBij) -> bool {
        f.is_empty()
    }

    fn projections(&self, a: &FinSet) -> Vec<PBij> {
        let mut ps: Vec<PBij> = Subset::power_set(a)
            .iter()
            .map(Subset::to_projection)
            .collect();
        ps.sort();
        ps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> (FinSet, FinSet) {
        (
            FinSet::new("A", ["1", "2", "3"]).unwrap(),
            FinSet::new("B", ["a", "b", "c"]).unwrap(),
        )
    }

    fn fixture() -> PBij {
        let (a, b) = abc();
        PBij::new(&a, &b, &[("1", "a"), ("2", "b")]).unwrap()
    }

    fn sub(set: &FinSet, labels: &[&str]) -> Subset {
        Subset::new(set, labels).unwrap()
    }

    #[test]
    fn make_pbij_validates() {
        let a = FinSet::new("A", ["1", "2"]).unwrap();
        let b = FinSet::new("B", ["a"]).unwrap();
        assert_eq!(
            PBij::new(&a, &b, &[("1", "a"), ("2", "a")]),
            Err(PbijError::DuplicateCodomainElement {
                element: "a".into()
            })
        );
        assert_eq!(
            PBij::new(&a, &b, &[("1", "a"), ("1", "a")]),
            Err(PbijError::DuplicateDomainElement {
                element: "1".into()
            })
        );
        let one = FinSet::new("S", ["1"]).unwrap();
        let t = FinSet::new("T", ["a"]).unwrap();
        assert!(matches!(
            PBij::new(&one, &t, &[("1", "z")]),
            Err(PbijError::UnknownElement { element, .. }) if element == "z"
        ));
        assert!(fixture().len() == 2);
    }

    #[test]
    fn finsets_reject_duplicates_and_sort() {
        assert!(matches!(
            FinSet::new("X", ["b", "a", "b"]),
            Err(PbijError::DuplicateLabel { .. })
        ));
        assert_eq!(FinSet::new("X", ["b", "a"]).unwrap().elements(), ["a", "b"]);
        assert_eq!(FinSet::new("", ["a"]), Err(PbijError::EmptyName));
    }

    #[test]
    fn composition_is_relational() {
        let (a, b) = abc();
        let x = FinSet::new("X", ["x"]).unwrap();
        let g = PBij::new(&x, &a, &[("x", "1")]).unwrap();
        let fg = fixture().compose(&g).unwrap();
        assert_eq!(fg, PBij::new(&x, &b, &[("x", "a")]).unwrap());
        assert_eq!(fixture().compose(&PBij::identity(&a)).unwrap(), fixture());
        let d = FinSet::new("D", ["d"]).unwrap();
        assert!(fixture().compose(&PBij::zero(&x, &d)).is_err());
    }

    #[test]
    fn structure_of_the_fixture() {
        let (a, b) = abc();
        let s = pbij_structure(&fixture());
        assert_eq!(
            s.inverse,
            PBij::new(&b, &a, &[("a", "1"), ("b", "2")]).unwrap()
        );
        assert_eq!(s.annihilator, sub(&a, &["3"]).to_projection());
        assert_eq!(s.domain_projection, sub(&a, &["1", "2"]).to_projection());
        assert_eq!(s.image_projection, sub(&b, &["a", "b"]).to_projection());
    }

    #[test]
    fn structure_of_zero_and_identity() {
        let (a, b) = abc();
        let z = pbij_structure(&PBij::zero(&a, &b));
        assert_eq!(z.inverse, PBij::zero(&b, &a));
        assert_eq!(z.annihilator, PBij::identity(&a));
        assert_eq!(z.domain_projection, PBij::zero(&a, &a));
        assert_eq!(z.image_projection, PBij::zero(&b, &b));
        let i = pbij_structure(&PBij::identity(&a));
        assert_eq!(i.inverse, PBij::identity(&a));
        assert_eq!(i.annihilator, PBij::zero(&a, &a));
        assert_eq!(i.domain_projection, PBij::identity(&a));
        assert_eq!(i.image_projection, PBij::identity(&a));
    }

    #[test]
    fn kernels_cokernels_and_factorizations() {
        let (a, b) = abc();
        let f = fixture();
        let k = f.kernel();
        assert_eq!(k.cod(), &a);
        assert_eq!(k.image(), sub(&a, &["3"]));
        assert!(k.is_total());
        let c = f.cokernel();
        assert_eq!(c.dom(), &b);
        assert_eq!(c.cod().elements(), ["c"]);
        assert_eq!(f.kernel(), f.annihilator().factorize().0);
        assert_eq!(PBij::zero(&a, &b).kernel(), PBij::identity(&a));
        assert_eq!(PBij::zero(&a, &b).cokernel(), PBij::identity(&b));
        assert_eq!(PBij::identity(&a).kernel().dom(), &FinSet::zero());

        let (p, q) = f.factorize();
        assert_eq!(p.dom().elements(), ["a", "b"]);
        assert_eq!(p.compose(&q).unwrap(), f);
        assert!(p.is_total() && q.is_surjective());
        let (p0, _) = PBij::zero(&a, &b).factorize();
        assert_eq!(p0.dom(), &FinSet::zero());
    }

    #[test]
    fn transfer_closed_forms_on_the_fixture() {
        let (a, b) = abc();
        let f = fixture();
        assert_eq!(f.image_of(&sub(&a, &["1", "3"])), sub(&b, &["a"]));
        assert_eq!(f.inverse_image(&sub(&b, &["a", "c"])), sub(&a, &["1", "3"]));
        assert_eq!(f.preimage(&sub(&b, &["a", "c"])), sub(&a, &["1"]));
    }

    #[test]
    fn counts_for_small_sizes() {
        assert_eq!(hom_count(3, 3), 34);
        assert_eq!(hom_count(4, 4), 209);
        assert_eq!(hom_count(5, 0), 1);
        let (a, b) = abc();
        assert_eq!(enumerate_pbij(&a, &b, 1000).unwrap().len(), 34);
        assert_eq!(
            enumerate_pbij(&FinSet::zero(), &b, 1000).unwrap(),
            vec![PBij::zero(&FinSet::zero(), &b)]
        );
        assert!(matches!(
            enumerate_pbij(&a, &b, 10),
            Err(PbijError::BudgetExceeded { size: 34, .. })
        ));
    }

    #[test]
    fn powerset_projection_round_trip() {
        let (a, _) = abc();
        for s in Subset::power_set(&a) {
            assert_eq!(Subset::from_projection(&s.to_projection()), Some(s));
        }
        assert_eq!(Subset::from_projection(&fixture()), None);
    }
}


#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::arb::{pbij, subset};
    use super::*;

    proptest! {
        #[test]
        fn composition_is_pointwise(f in pbij(3, 4), g in pbij(4, 2)) {
            let gf = g.compose(&f).unwrap();
            for x in 0..3 {
                prop_assert_eq!(gf.apply(x), f.apply(x).and_then(|y| g.apply(y)));
            }
        }

        #[test]
        fn composition_is_associative(f in pbij(2, 3), g in pbij(3, 3), h in pbij(3, 2)) {
            let left = h.compose(&g).unwrap().compose(&f).unwrap();
            let right = h.compose(&g.compose(&f).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn inverse_is_moore_penrose(f in pbij(3, 4)) {
            let g = f.inverse();
            prop_assert_eq!(f.compose(&g).unwrap().compose(&f).unwrap(), f.clone());
            prop_assert_eq!(g.compose(&f).unwrap().compose(&g).unwrap(), g.clone());
            prop_assert_eq!(g.compose(&f).unwrap(), f.domain().to_projection());
            prop_assert_eq!(f.compose(&g).unwrap(), f.image().to_projection());
        }

        #[test]
        fn annihilator_is_complement_of_domain(f in pbij(4, 3)) {
            let ann = f.annihilator();
            prop_assert_eq!(Subset::from_projection(&ann), Some(f.domain().complement()));
            prop_assert!(f.compose(&ann).unwrap().is_empty());
        }

        #[test]
        fn preimages_bracket_the_domain(f in pbij(3, 3), t in subset(3)) {
            let strict = f.preimage(&t);
            prop_assert_eq!(f.inverse_image(&t), strict.union(&f.domain().complement()));
            prop_assert!(strict.is_subset_of(&f.domain()));
            prop_assert!(f.image_of(&strict).is_subset_of(&t));
        }
    }
}
