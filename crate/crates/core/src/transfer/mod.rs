//! The transfer functors `P`, `P′` and `P″` from an inverse category into
//! finite sets, taking each object to its projection semilattice.
//!
//! * `P(f)(i) = f i f*`: image, covariant.
//! * `P′(f)(j) = (j′ f)′`: inverse image, contravariant.
//! * `P″(f)(j) = (j f)″`: strict preimage, contravariant.
//!
//! Values are computed definitionally through the annihilator calculus; the
//! partial-bijection closed forms live on [`crate::pbij::PBij`] and are
//! compared against these in [`fast_paths`].

pub mod fast_paths;
pub mod suites;

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::budget::Bound;
use crate::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::exactness::{is_mono, subobject_of};
use crate::projections::{Calculus, Memo, Projection, ProjectionLattice};
use crate::report::{ClauseCheck, ReportBuilder, VerificationReport};

pub use suites::{
    check_connections, check_suite, check_theorems_p, check_theorems_p_double_prime,
    check_theorems_p_prime, Suite,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Functor {
    #[serde(rename = "P")]
    P,
    #[serde(rename = "P'")]
    PPrime,
    #[serde(rename = "P''")]
    PDoublePrime,
}

impl Functor {
    pub const ALL: [Functor; 3] = [Functor::P, Functor::PPrime, Functor::PDoublePrime];

    pub fn is_covariant(self) -> bool {
        self == Functor::P
    }

    /// Prefix used in clause ids.
    pub fn clause_prefix(self) -> &'static str {
        match self {
            Functor::P => "image",
            Functor::PPrime => "inverse-image",
            Functor::PDoublePrime => "strict-preimage",
        }
    }

    pub(crate) fn anchor(self) -> &'static str {
        match self {
            Functor::P => "2.functor",
            Functor::PPrime => "3.functor",
            Functor::PDoublePrime => "4.functor",
        }
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Functor::P => "P",
            Functor::PPrime => "P'",
            Functor::PDoublePrime => "P''",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown functor {0:?}; expected P, P' or P''")]
pub struct UnknownFunctor(pub String);

impl FromStr for Functor {
    type Err = UnknownFunctor;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" => Ok(Functor::P),
            "P'" | "P′" => Ok(Functor::PPrime),
            "P''" | "P″" => Ok(Functor::PDoublePrime),
            _ => Err(UnknownFunctor(s.to_owned())),
        }
    }
}

/// The projection object a functor reads from when applied to `f`.
fn source_object<C: FiniteCategory>(cat: &C, kind: Functor, f: &C::Morphism) -> C::Object {
    if kind.is_covariant() {
        cat.dom(f)
    } else {
        cat.cod(f)
    }
}

fn target_object<C: FiniteCategory>(cat: &C, kind: Functor, f: &C::Morphism) -> C::Object {
    if kind.is_covariant() {
        cat.cod(f)
    } else {
        cat.dom(f)
    }
}

pub(crate) fn evaluate<C: FiniteCategory>(
    calc: &Calculus<'_, C>,
    kind: Functor,
    f: &C::Morphism,
    x: &C::Morphism,
) -> Result<C::Morphism> {
    let cat = calc.cat();
    let expected = source_object(cat, kind, f);
    if cat.cod(x) != expected || cat.dom(x) != expected {
        return Err(Error::ObjectMismatch(format!(
            "{kind}({}) reads projections on {}, got {}",
            cat.render(f),
            cat.object_id(&expected),
            cat.render(x)
        )));
    }
    match kind {
        Functor::P => {
            let fi = cat.compose_unchecked(f, x);
            Ok(cat.compose_unchecked(&fi, &cat.involution(f)))
        }
        Functor::PPrime => calc.annihilator(&cat.compose_unchecked(&calc.annihilator(x)?, f)),
        Functor::PDoublePrime => calc.double_annihilator(&cat.compose_unchecked(x, f)),
    }
}

fn apply<C: FiniteCategory>(
    cat: &C,
    kind: Functor,
    f: &C::Morphism,
    x: &Projection<C::Morphism>,
) -> Result<Projection<C::Morphism>> {
    let calc = Calculus::new(cat);
    Projection::new(cat, evaluate(&calc, kind, f, x.morphism())?)
}

/// `P(f)(i) = f i f*`, a projection on `cod f`.
pub fn apply_p<C: FiniteCategory>(
    cat: &C,
    f: &C::Morphism,
    i: &Projection<C::Morphism>,
) -> Result<Projection<C::Morphism>> {
    apply(cat, Functor::P, f, i)
}

/// `P′(f)(j) = (j′ f)′`, a projection on `dom f`.
pub fn apply_p_prime<C: FiniteCategory>(
    cat: &C,
    f: &C::Morphism,
    j: &Projection<C::Morphism>,
) -> Result<Projection<C::Morphism>> {
    apply(cat, Functor::PPrime, f, j)
}

/// `P″(f)(j) = (j f)″`, a projection on `dom f`.
pub fn apply_p_double_prime<C: FiniteCategory>(
    cat: &C,
    f: &C::Morphism,
    j: &Projection<C::Morphism>,
) -> Result<Projection<C::Morphism>> {
    apply(cat, Functor::PDoublePrime, f, j)
}

/// The mono `p` with `p p* = P(f)(u u*)`: the image of `f u`.
pub fn image_of<C: FiniteCategory>(
    cat: &C,
    f: &C::Morphism,
    u: &C::Morphism,
) -> Result<C::Morphism> {
    if !is_mono(cat, u) {
        return Err(Error::NotMono(cat.render(u)));
    }
    let calc = Calculus::new(cat);
    let uu = cat.compose_unchecked(u, &cat.involution(u));
    subobject_of(cat, &evaluate(&calc, Functor::P, f, &uu)?)
}

/// The mono `u` with `u u* = P′(f)(v v*)`: the inverse image of `v` along `f`.
pub fn inverse_image_of<C: FiniteCategory>(
    cat: &C,
    f: &C::Morphism,
    v: &C::Morphism,
) -> Result<C::Morphism> {
    if !is_mono(cat, v) {
        return Err(Error::NotMono(cat.render(v)));
    }
    let calc = Calculus::new(cat);
    let vv = cat.compose_unchecked(v, &cat.involution(v));
    subobject_of(cat, &evaluate(&calc, Functor::PPrime, f, &vv)?)
}

/// A transfer function tabulated on its source lattice, so that composites
/// and equalities of transfer functions are literal table comparisons.
#[derive(Debug, Clone)]
pub struct TransferMap<M> {
    kind: Functor,
    morphism: M,
    source: Rc<ProjectionLattice<M>>,
    target: Rc<ProjectionLattice<M>>,
    table: Vec<usize>,
}

impl<M: Clone + Eq> TransferMap<M> {
    pub fn kind(&self) -> Functor {
        self.kind
    }

    pub fn morphism(&self) -> &M {
        &self.morphism
    }

    pub fn source(&self) -> &ProjectionLattice<M> {
        &self.source
    }

    pub fn target(&self) -> &ProjectionLattice<M> {
        &self.target
    }

    /// Index in the target lattice of the image of source element `i`.
    pub fn at(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn apply(&self, x: &M) -> Option<&M> {
        self.source
            .index_of(x)
            .map(|i| self.target.get(self.table[i]))
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.table
            .iter()
            .all(|&t| !std::mem::replace(&mut seen[t], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        for &t in &self.table {
            seen[t] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// `next ∘ self` as a table, when the lattices line up.
    pub fn then(&self, next: &TransferMap<M>) -> Option<Vec<usize>> {
        (self.target.object() == next.source.object())
            .then(|| self.table.iter().map(|&t| next.table[t]).collect())
    }

    /// Same source, same target, same values.
    pub fn same_function(&self, other: &TransferMap<M>) -> bool {
        self.source.object() == other.source.object()
            && self.target.object() == other.target.object()
            && self.table == other.table
    }
}

type MapMemo<M> = RefCell<HashMap<(Functor, M), Result<Rc<TransferMap<M>>>>>;

/// Memoizing evaluator for transfer maps over one category.
pub struct Transfer<'a, C: FiniteCategory> {
    calc: Calculus<'a, C>,
    maps: MapMemo<C::Morphism>,
    monos: Memo<C::Object, Vec<C::Morphism>>,
}

impl<'a, C: FiniteCategory> Transfer<'a, C> {
    pub fn new(cat: &'a C) -> Self {
        Transfer {
            calc: Calculus::new(cat),
            maps: RefCell::default(),
            monos: RefCell::default(),
        }
    }

    pub fn cat(&self) -> &'a C {
        self.calc.cat()
    }

    pub fn calculus(&self) -> &Calculus<'a, C> {
        &self.calc
    }

    pub fn evaluate(&self, kind: Functor, f: &C::Morphism, x: &C::Morphism) -> Result<C::Morphism> {
        evaluate(&self.calc, kind, f, x)
    }

    pub fn map(&self, kind: Functor, f: &C::Morphism) -> Result<Rc<TransferMap<C::Morphism>>> {
        let key = (kind, f.clone());
        if let Some(m) = self.maps.borrow().get(&key) {
            return m.clone();
        }
        let m = self.tabulate(kind, f).map(Rc::new);
        self.maps.borrow_mut().insert(key, m.clone());
        m
    }

    fn tabulate(&self, kind: Functor, f: &C::Morphism) -> Result<TransferMap<C::Morphism>> {
        let cat = self.cat();
        let source = self.calc.lattice(&source_object(cat, kind, f))?;
        let target = self.calc.lattice(&target_object(cat, kind, f))?;
        let table = source
            .elements()
            .iter()
            .map(|x| {
                let y = self.evaluate(kind, f, x)?;
                target.index_of(&y).ok_or_else(|| {
                    Error::OutsideLattice(format!(
                        "{kind}({})({}) = {}",
                        cat.render(f),
                        cat.render(x),
                        cat.render(&y)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TransferMap {
            kind,
            morphism: f.clone(),
            source,
            target,
            table,
        })
    }

    /// Monomorphisms into `a`, in enumeration order.
    pub fn monos_into(&self, a: &C::Object) -> Rc<Vec<C::Morphism>> {
        if let Some(m) = self.monos.borrow().get(a) {
            return m.clone();
        }
        let cat = self.cat();
        let m: Rc<Vec<_>> = Rc::new(
            self.calc
                .morphisms_into(a)
                .iter()
                .filter(|u| is_mono(cat, u))
                .cloned()
                .collect(),
        );
        self.monos.borrow_mut().insert(a.clone(), m.clone());
        m
    }
}

/// Identity and composition laws for one functor. Contravariant functors
/// are checked against `F(f g) = F(g) F(f)`.
pub fn check_functoriality<C: FiniteCategory>(
    cat: &C,
    kind: Functor,
    bound: &Bound,
) -> Result<VerificationReport> {
    bound.admit(cat)?;
    let t = Transfer::new(cat);
    let subjects = bound.subjects(cat);
    let mut report =
        ReportBuilder::new(&format!("functoriality:{kind}"), &cat.name(), bound.sample);
    report.morphisms(subjects.len());
    let prefix = kind.clause_prefix();
    let mut defined = ClauseCheck::new(format!("{prefix}.defined"), kind.anchor());
    let mut identity = ClauseCheck::new(format!("{prefix}.functor-identity"), kind.anchor());
    let mut composition = ClauseCheck::new(format!("{prefix}.functor-composition"), kind.anchor());

    for a in cat.objects().iter() {
        match t.map(kind, &cat.identity(a)) {
            Ok(m) => identity.record(m.table().iter().enumerate().all(|(i, &j)| i == j), || {
                format!(
                    "{kind}(id_{}) is not the identity on P({})",
                    cat.object_id(a),
                    cat.object_id(a)
                )
            }),
            Err(e) => defined.fail(format!("{kind}(id_{}): {e}", cat.object_id(a))),
        }
    }
    for f in &subjects {
        let mf = match t.map(kind, f) {
            Ok(m) => m,
            Err(e) => {
                defined.fail(format!("{kind}({}): {e}", cat.render(f)));
                continue;
            }
        };
        defined.record(true, String::new);
        for g in t.calculus().morphisms_into(&cat.dom(f)).iter() {
            let (Ok(mg), Ok(mfg)) = (t.map(kind, g), t.map(kind, &cat.compose_unchecked(f, g)))
            else {
                continue;
            };
            let composed = if kind.is_covariant() {
                mg.then(&mf)
            } else {
                mf.then(&mg)
            };
            composition.record(composed.as_deref() == Some(mfg.table()), || {
                let order = if kind.is_covariant() {
                    "F(f) F(g)"
                } else {
                    "F(g) F(f)"
                };
                format!(
                    "{kind}(f g) ≠ {order} for f = {}, g = {}",
                    cat.render(f),
                    cat.render(g)
                )
            });
        }
    }
    report.extend([defined, identity, composition]);
    Ok(report.finish())
}
