//! Projections, the semilattice `P(A)`, and the Baer*-annihilator.
//!
//! The annihilator `f′` of `f: A → B` is the projection on `A` whose
//! right ideal is exactly the set of morphisms killed by `f`:
//! `{g | f g = 0} = f′ · Hom(-, A)`. It is found here by scanning every
//! projection on `A` against every morphism into `A`, so it works for any
//! [`FiniteCategory`] with a zero object. Partial bijections also have the
//! closed form [`PBij::annihilator`](crate::pbij::PBij::annihilator); the two
//! are cross-checked by the fast-path suite.
//!
//! `(f′)′` is written `f″`. A projection `i` is closed when `i″ = i`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::hash::Hash;
use std::rc::Rc;

use crate::budget::Bound;
use crate::category::{is_projection, FiniteCategory, ObjectId};
use crate::error::{Error, Result};
use crate::report::{ClauseCheck, ReportBuilder, VerificationReport};

/// A morphism known to be a projection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Projection<M>(M);

impl<M: Clone> Projection<M> {
    pub fn new<C: FiniteCategory<Morphism = M>>(cat: &C, m: M) -> Result<Self> {
        if is_projection(cat, &m) {
            Ok(Projection(m))
        } else {
            Err(Error::NotAProjection(cat.render(&m)))
        }
    }

    pub fn morphism(&self) -> &M {
        &self.0
    }

    pub fn into_inner(self) -> M {
        self.0
    }
}

fn same_object<C: FiniteCategory>(cat: &C, i: &C::Morphism, j: &C::Morphism) -> Result<()> {
    if cat.dom(i) != cat.dom(j) {
        return Err(Error::ObjectMismatch(format!(
            "{} and {} live on different objects",
            cat.render(i),
            cat.render(j)
        )));
    }
    Ok(())
}

/// `i ∩ j = i j`.
pub fn meet<C: FiniteCategory>(
    cat: &C,
    i: &Projection<C::Morphism>,
    j: &Projection<C::Morphism>,
) -> Result<Projection<C::Morphism>> {
    same_object(cat, &i.0, &j.0)?;
    Projection::new(cat, cat.compose_unchecked(&i.0, &j.0))
}

/// `i ≤ j ⇔ i = i j`.
pub fn leq<C: FiniteCategory>(
    cat: &C,
    i: &Projection<C::Morphism>,
    j: &Projection<C::Morphism>,
) -> Result<bool> {
    same_object(cat, &i.0, &j.0)?;
    Ok(cat.compose_unchecked(&i.0, &j.0) == i.0)
}

/// `P(A)` with its meet table. Elements are indexed in hom-set order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionLattice<M> {
    object: ObjectId,
    elements: Vec<M>,
    top: usize,
    bottom: usize,
    meet: Vec<Vec<usize>>,
}

impl<M: Clone + Eq> ProjectionLattice<M> {
    pub fn object(&self) -> &ObjectId {
        &self.object
    }

    pub fn elements(&self) -> &[M] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn index_of(&self, m: &M) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }

    pub fn get(&self, i: usize) -> &M {
        &self.elements[i]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.meet[i][j] == i
    }
}

/// All projections on `a`, checked to form a meet semilattice under
/// composition with the identity on top and the zero at the bottom.
pub fn projection_lattice<C: FiniteCategory>(
    cat: &C,
    a: &C::Object,
) -> Result<ProjectionLattice<C::Morphism>> {
    build_lattice(cat, a, cat.projections(a))
}

fn build_lattice<C: FiniteCategory>(
    cat: &C,
    a: &C::Object,
    elements: Vec<C::Morphism>,
) -> Result<ProjectionLattice<C::Morphism>> {
    let object = cat.object_id(a);
    let broken = |witness: String| Error::NotSemilattice {
        object: object.to_string(),
        witness,
    };
    let position = |m: &C::Morphism| elements.iter().position(|e| e == m);
    let id = cat.identity(a);
    let top = position(&id).ok_or_else(|| Error::NotAProjection(cat.render(&id)))?;
    let zero = cat.zero(a, a).ok_or(Error::NoZeroObject)?;
    let bottom = position(&zero).ok_or_else(|| Error::NotAProjection(cat.render(&zero)))?;
    let n = elements.len();
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let c = cat.compose_unchecked(&elements[i], &elements[j]);
            table[i][j] = position(&c).ok_or_else(|| {
                broken(format!(
                    "{} ∘ {} = {} is not a projection",
                    cat.render(&elements[i]),
                    cat.render(&elements[j]),
                    cat.render(&c)
                ))
            })?;
        }
    }
    for i in 0..n {
        if table[i][i] != i {
            return Err(broken(format!(
                "{} is not idempotent",
                cat.render(&elements[i])
            )));
        }
        for j in 0..n {
            if table[i][j] != table[j][i] {
                return Err(broken(format!(
                    "{} and {} do not commute",
                    cat.render(&elements[i]),
                    cat.render(&elements[j])
                )));
            }
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(broken(format!(
                        "meet is not associative on {}, {}, {}",
                        cat.render(&elements[i]),
                        cat.render(&elements[j]),
                        cat.render(&elements[k])
                    )));
                }
            }
        }
    }
    Ok(ProjectionLattice {
        object,
        elements,
        top,
        bottom,
        meet: table,
    })
}

pub(crate) type Memo<K, V> = RefCell<HashMap<K, Rc<V>>>;

/// Memoized annihilator calculus over one category.
///
/// Suites evaluate `f′` for the same morphisms many times; this caches the
/// projection sets, the morphisms into each object and every annihilator
/// computed so far.
pub struct Calculus<'a, C: FiniteCategory> {
    cat: &'a C,
    projections: Memo<C::Object, Vec<C::Morphism>>,
    into: Memo<C::Object, Vec<C::Morphism>>,
    from: Memo<C::Object, Vec<C::Morphism>>,
    lattices: Memo<C::Object, ProjectionLattice<C::Morphism>>,
    annihilators: RefCell<HashMap<C::Morphism, Result<C::Morphism>>>,
}

fn memo<K: Hash + Eq + Clone, V: Clone>(
    cell: &RefCell<HashMap<K, V>>,
    key: &K,
    make: impl FnOnce() -> V,
) -> V {
    if let Some(v) = cell.borrow().get(key) {
        return v.clone();
    }
    let v = make();
    cell.borrow_mut().insert(key.clone(), v.clone());
    v
}

impl<'a, C: FiniteCategory> Calculus<'a, C> {
    pub fn new(cat: &'a C) -> Self {
        Calculus {
            cat,
            projections: RefCell::default(),
            into: RefCell::default(),
            from: RefCell::default(),
            lattices: RefCell::default(),
            annihilators: RefCell::default(),
        }
    }

    pub fn cat(&self) -> &'a C {
        self.cat
    }

    pub fn projections(&self, a: &C::Object) -> Rc<Vec<C::Morphism>> {
        memo(&self.projections, a, || Rc::new(self.cat.projections(a)))
    }

    pub fn morphisms_into(&self, a: &C::Object) -> Rc<Vec<C::Morphism>> {
        memo(&self.into, a, || Rc::new(self.cat.morphisms_into(a)))
    }

    pub fn morphisms_from(&self, a: &C::Object) -> Rc<Vec<C::Morphism>> {
        memo(&self.from, a, || Rc::new(self.cat.morphisms_from(a)))
    }

    pub fn lattice(&self, a: &C::Object) -> Result<Rc<ProjectionLattice<C::Morphism>>> {
        if let Some(l) = self.lattices.borrow().get(a) {
            return Ok(l.clone());
        }
        let l = Rc::new(build_lattice(self.cat, a, self.projections(a).to_vec())?);
        self.lattices.borrow_mut().insert(a.clone(), l.clone());
        Ok(l)
    }

    pub fn zero(&self, a: &C::Object, b: &C::Object) -> Result<C::Morphism> {
        self.cat.zero(a, b).ok_or(Error::NoZeroObject)
    }

    /// `f′`, by exhaustive search over the projections on `dom f`.
    pub fn annihilator(&self, f: &C::Morphism) -> Result<C::Morphism> {
        memo(&self.annihilators, f, || self.search_annihilator(f))
    }

    /// `f″ = (f′)′`.
    pub fn double_annihilator(&self, f: &C::Morphism) -> Result<C::Morphism> {
        self.annihilator(&self.annihilator(f)?)
    }

    fn search_annihilator(&self, f: &C::Morphism) -> Result<C::Morphism> {
        let cat = self.cat;
        if cat.zero_object().is_none() {
            return Err(Error::NoZeroObject);
        }
        let a = cat.dom(f);
        let gs = self.morphisms_into(&a);
        let killed: Vec<bool> = gs
            .iter()
            .map(|g| cat.is_zero(&cat.compose_unchecked(f, g)))
            .collect();
        let mut found = Vec::new();
        let mut first_miss = None;
        for e in self.projections(&a).iter() {
            let miss = gs
                .iter()
                .zip(&killed)
                .find(|(g, &k)| k != (cat.compose_unchecked(e, g) == **g));
            match miss {
                None => found.push(e.clone()),
                Some((g, _)) if first_miss.is_none() => first_miss = Some((e.clone(), g.clone())),
                Some(_) => {}
            }
        }
        match found.len() {
            1 => Ok(found.remove(0)),
            0 => Err(Error::NoAnnihilator {
                morphism: cat.render(f),
                witness: match first_miss {
                    Some((e, g)) => format!(
                        "candidate {} disagrees on {}",
                        cat.render(&e),
                        cat.render(&g)
                    ),
                    None => format!("no projections on {}", cat.object_id(&a)),
                },
            }),
            _ => Err(Error::AmbiguousAnnihilator {
                morphism: cat.render(f),
                candidates: found.iter().map(|e| cat.render(e)).collect(),
            }),
        }
    }

    /// `i″ = i`.
    pub fn is_closed(&self, i: &C::Morphism) -> Result<bool> {
        Ok(self.double_annihilator(i)? == *i)
    }
}

pub fn annihilator<C: FiniteCategory>(cat: &C, f: &C::Morphism) -> Result<Projection<C::Morphism>> {
    Ok(Projection(Calculus::new(cat).annihilator(f)?))
}

pub fn is_closed<C: FiniteCategory>(cat: &C, i: &Projection<C::Morphism>) -> Result<bool> {
    Calculus::new(cat).is_closed(&i.0)
}

/// Zero object, existence and uniqueness of annihilators, closedness of
/// every projection, triple-annihilator stability, and the semilattice
/// structure of each `P(A)`.
pub fn check_baer_star<C: FiniteCategory>(cat: &C, bound: &Bound) -> Result<VerificationReport> {
    bound.admit(cat)?;
    let calc = Calculus::new(cat);
    let mut report = ReportBuilder::new("baer-star", &cat.name(), bound.sample);
    let subjects = bound.subjects(cat);
    report.morphisms(subjects.len());
    let mut checks = baer_clauses(&calc, &subjects);
    let mut semilattice = ClauseCheck::new("projections.semilattice", "2.semilattice");
    for a in cat.objects().iter() {
        match calc.lattice(a) {
            Ok(_) => semilattice.record(true, String::new),
            Err(e) => semilattice.fail(e.to_string()),
        }
    }
    checks.push(semilattice);
    report.extend(checks);
    Ok(report.finish())
}

/// The Baer* clauses shared with the exactness checklist.
pub(crate) fn baer_clauses<C: FiniteCategory>(
    calc: &Calculus<'_, C>,
    subjects: &[C::Morphism],
) -> Vec<ClauseCheck> {
    let cat = calc.cat();
    let show = |f: &C::Morphism| cat.render(f);
    let mut zero = ClauseCheck::new("baer.zero-object", "def.baer");
    let mut exists = ClauseCheck::new("baer.annihilator-exists", "def.baer");
    let mut unique = ClauseCheck::new("baer.annihilator-unique", "def.baer");
    let mut closed = ClauseCheck::new("baer.closed-projections", "def.closed");
    let mut triple = ClauseCheck::new("baer.triple-annihilator", "1.1");

    match cat.zero_object() {
        None => zero.fail("no zero object designated"),
        Some(z) => {
            for a in cat.objects().iter() {
                let (to, from) = (cat.hom_size(a, &z), cat.hom_size(&z, a));
                zero.record(to == 1 && from == 1, || {
                    format!(
                        "{} has {to} morphisms to and {from} from the zero object {}",
                        cat.object_id(a),
                        cat.object_id(&z)
                    )
                });
            }
        }
    }

    for f in subjects {
        match calc.annihilator(f) {
            Ok(fp) => {
                exists.record(true, String::new);
                unique.record(true, String::new);
                match calc.annihilator(&fp).and_then(|fpp| calc.annihilator(&fpp)) {
                    Ok(fppp) => triple.record(fppp == fp, || {
                        format!("{}: f′ = {} but f‴ = {}", show(f), show(&fp), show(&fppp))
                    }),
                    Err(e) => triple.fail(format!("{}: {e}", show(f))),
                }
            }
            Err(e @ Error::AmbiguousAnnihilator { .. }) => {
                exists.record(true, String::new);
                unique.fail(e.to_string());
                triple.skip();
            }
            Err(e) => {
                exists.fail(e.to_string());
                unique.skip();
                triple.skip();
            }
        }
    }

    for a in cat.objects().iter() {
        for i in calc.projections(a).iter() {
            match calc.double_annihilator(i) {
                Ok(ipp) => closed.record(ipp == *i, || format!("{}″ = {}", show(i), show(&ipp))),
                Err(_) => closed.skip(),
            }
        }
    }
    vec![zero, exists, unique, closed, triple]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbij::{FinSet, PBij, PbijCategory, Subset};

    fn setup() -> (PbijCategory, FinSet, FinSet) {
        let a = FinSet::new("A", ["1", "2", "3"]).unwrap();
        let b = FinSet::new("B", ["a", "b", "c"]).unwrap();
        let cat =
            PbijCategory::new("fixture", [FinSet::canonical(1), a.clone(), b.clone()]).unwrap();
        (cat, a, b)
    }

    fn proj(cat: &PbijCategory, set: &FinSet, labels: &[&str]) -> Projection<PBij> {
        Projection::new(cat, Subset::new(set, labels).unwrap().to_projection()).unwrap()
    }

    #[test]
    fn meets_and_order() {
        let (cat, a, _) = setup();
        let i13 = proj(&cat, &a, &["1", "3"]);
        let i23 = proj(&cat, &a, &["2", "3"]);
        let i3 = proj(&cat, &a, &["3"]);
        assert_eq!(meet(&cat, &i13, &i23).unwrap(), i3);
        let top = proj(&cat, &a, &["1", "2", "3"]);
        let bottom = proj(&cat, &a, &[]);
        assert_eq!(meet(&cat, &i13, &top).unwrap(), i13);
        assert_eq!(meet(&cat, &i13, &bottom).unwrap(), bottom);
        assert!(leq(&cat, &i3, &i13).unwrap());
        assert!(leq(&cat, &i13, &i13).unwrap());
        let two = FinSet::canonical(2);
        let cat2 = PbijCategory::new("two", [two.clone()]).unwrap();
        assert!(!leq(
            &cat2,
            &proj(&cat2, &two, &["1"]),
            &proj(&cat2, &two, &["2"])
        )
        .unwrap());
    }

    #[test]
    fn meet_rejects_mixed_objects() {
        let (cat, a, b) = setup();
        let i = proj(&cat, &a, &["1"]);
        let j = proj(&cat, &b, &["a"]);
        assert!(matches!(meet(&cat, &i, &j), Err(Error::ObjectMismatch(_))));
    }

    #[test]
    fn annihilators_by_search() {
        let (cat, a, b) = setup();
        let f = PBij::new(&a, &b, &[("1", "a"), ("2", "b")]).unwrap();
        assert_eq!(annihilator(&cat, &f).unwrap(), proj(&cat, &a, &["3"]));
        assert_eq!(
            annihilator(&cat, &PBij::identity(&a)).unwrap().into_inner(),
            PBij::zero(&a, &a)
        );
        assert_eq!(
            annihilator(&cat, &PBij::zero(&a, &b)).unwrap().into_inner(),
            PBij::identity(&a)
        );
        assert!(is_closed(&cat, &proj(&cat, &a, &["1", "3"])).unwrap());
        assert!(is_closed(&cat, &proj(&cat, &a, &["1", "2", "3"])).unwrap());
        assert!(is_closed(&cat, &proj(&cat, &a, &[])).unwrap());
    }

    #[test]
    fn lattice_sizes() {
        let cat = PbijCategory::canonical(&[0, 2, 3]);
        let two = FinSet::canonical(2);
        let l = projection_lattice(&cat, &two).unwrap();
        assert_eq!(l.len(), 4);
        assert_eq!(
            projection_lattice(&cat, &FinSet::canonical(3))
                .unwrap()
                .len(),
            8
        );
        let z = projection_lattice(&cat, &FinSet::zero()).unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z.top(), z.bottom());
        // order is inclusion
        for i in 0..l.len() {
            for j in 0..l.len() {
                let si = Subset::from_projection(l.get(i)).unwrap();
                let sj = Subset::from_projection(l.get(j)).unwrap();
                assert_eq!(l.leq(i, j), si.is_subset_of(&sj));
            }
        }
    }

    #[test]
    fn baer_star_holds_for_small_partial_bijections() {
        let cat = PbijCategory::canonical(&[0, 1, 2]);
        let r = check_baer_star(&cat, &Bound::exhaustive()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;
    use crate::pbij::arb::{pbij, subset};
    use crate::pbij::PbijCategory;

    fn proj(cat: &PbijCategory, s: &crate::pbij::Subset) -> Projection<crate::pbij::PBij> {
        Projection::new(cat, s.to_projection()).unwrap()
    }

    proptest! {
        #[test]
        fn meet_is_intersection(s in subset(4), t in subset(4), u in subset(4)) {
            let cat = PbijCategory::canonical(&[4]);
            let (i, j, k) = (proj(&cat, &s), proj(&cat, &t), proj(&cat, &u));
            let ij = meet(&cat, &i, &j).unwrap();
            prop_assert_eq!(&ij, &meet(&cat, &j, &i).unwrap());
            prop_assert_eq!(&ij, &proj(&cat, &s.intersect(&t)));
            prop_assert_eq!(meet(&cat, &i, &i).unwrap(), i.clone());
            prop_assert_eq!(
                meet(&cat, &ij, &k).unwrap(),
                meet(&cat, &i, &meet(&cat, &j, &k).unwrap()).unwrap()
            );
            prop_assert_eq!(leq(&cat, &i, &j).unwrap(), s.is_subset_of(&t));
        }

        #[test]
        fn searched_annihilator_matches_closed_form(f in pbij(3, 2)) {
            let cat = PbijCategory::canonical(&[1, 2, 3]);
            let calc = Calculus::new(&cat);
            let ann = calc.annihilator(&f).unwrap();
            prop_assert_eq!(&ann, &f.annihilator());
            prop_assert_eq!(calc.annihilator(&calc.annihilator(&ann).unwrap()).unwrap(), ann.clone());
            prop_assert!(calc.is_closed(&ann).unwrap());
        }
    }
}
