//! Finite categories with an involution, and the inverse-category axioms.
//!
//! Composition follows juxtaposition: `compose(f, g)` is "`g` first, then
//! `f`", so it needs `cod(g) == dom(f)` and returns a morphism
//! `dom(g) -> cod(f)`.

use std::borrow::Cow;
use std::fmt::{self, Debug};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::budget::Bound;
use crate::error::{Error, Result};
use crate::report::{ClauseCheck, ReportBuilder, VerificationReport};

/// Label of an object. Equal labels denote the same object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ObjectId(String);

impl ObjectId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::ObjectMismatch(
                "object labels must be non-empty".into(),
            ));
        }
        Ok(ObjectId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for ObjectId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        ObjectId::new(s)
    }
}

impl From<ObjectId> for String {
    fn from(id: ObjectId) -> String {
        id.0
    }
}

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A category with finitely many objects, enumerable hom-sets and an
/// involution.
///
/// Implementations supply the structure maps; the provided methods derive
/// zero morphisms, projections and whole-category enumerations from them.
/// Hom-sets must be duplicate-free and enumerated in a fixed order, since
/// reports quote the first counterexample found in that order.
pub trait FiniteCategory {
    type Object: Clone + Eq + Hash + Debug;
    type Morphism: Clone + Eq + Ord + Hash + Debug;

    /// Instance label used in reports.
    fn name(&self) -> String;

    fn objects(&self) -> Cow<'_, [Self::Object]>;

    fn object_id(&self, a: &Self::Object) -> ObjectId;

    fn hom(&self, dom: &Self::Object, cod: &Self::Object) -> Cow<'_, [Self::Morphism]>;

    /// Size of a hom-set without necessarily enumerating it.
    fn hom_size(&self, dom: &Self::Object, cod: &Self::Object) -> u128 {
        self.hom(dom, cod).len() as u128
    }

    fn dom(&self, f: &Self::Morphism) -> Self::Object;

    fn cod(&self, f: &Self::Morphism) -> Self::Object;

    fn identity(&self, a: &Self::Object) -> Self::Morphism;

    /// `f` after `g`. Callers guarantee `cod(g) == dom(f)`.
    fn compose_unchecked(&self, f: &Self::Morphism, g: &Self::Morphism) -> Self::Morphism;

    /// The instance's involution `f ↦ f*`.
    fn involution(&self, f: &Self::Morphism) -> Self::Morphism;

    fn zero_object(&self) -> Option<Self::Object>;

    fn render(&self, f: &Self::Morphism) -> String;

    /// `f` after `g`, rejecting non-composable pairs.
    fn compose(&self, f: &Self::Morphism, g: &Self::Morphism) -> Result<Self::Morphism> {
        let (f_dom, g_cod) = (self.dom(f), self.cod(g));
        if f_dom != g_cod {
            return Err(Error::DomainMismatch {
                f: self.render(f),
                g: self.render(g),
                f_dom: self.object_id(&f_dom).to_string(),
                g_cod: self.object_id(&g_cod).to_string(),
            });
        }
        Ok(self.compose_unchecked(f, g))
    }

    /// The composite `a -> 0 -> b`, when the designated zero object really
    /// has exactly one morphism to `b` and one from `a`.
    fn zero(&self, a: &Self::Object, b: &Self::Object) -> Option<Self::Morphism> {
        let z = self.zero_object()?;
        let to = self.hom(a, &z);
        let from = self.hom(&z, b);
        match (&to[..], &from[..]) {
            ([t], [s]) => Some(self.compose_unchecked(s, t)),
            _ => None,
        }
    }

    fn is_zero(&self, f: &Self::Morphism) -> bool {
        self.zero(&self.dom(f), &self.cod(f)).as_ref() == Some(f)
    }

    fn endomorphisms(&self, a: &Self::Object) -> Cow<'_, [Self::Morphism]> {
        self.hom(a, a)
    }

    /// All projections on `a`, in hom-set order.
    fn projections(&self, a: &Self::Object) -> Vec<Self::Morphism> {
        self.endomorphisms(a)
            .iter()
            .filter(|e| is_projection(self, e))
            .cloned()
            .collect()
    }

    fn morphisms_into(&self, a: &Self::Object) -> Vec<Self::Morphism> {
        let objects = self.objects();
        objects
            .iter()
            .flat_map(|w| self.hom(w, a).into_owned())
            .collect()
    }

    fn morphisms_from(&self, a: &Self::Object) -> Vec<Self::Morphism> {
        let objects = self.objects();
        objects
            .iter()
            .flat_map(|w| self.hom(a, w).into_owned())
            .collect()
    }

    fn all_morphisms(&self) -> Vec<Self::Morphism> {
        let objects = self.objects();
        let mut out = Vec::new();
        for a in objects.iter() {
            for b in objects.iter() {
                out.extend(self.hom(a, b).iter().cloned());
            }
        }
        out
    }
}

/// Every `g` with `f g f = f` and `g f g = g`.
pub fn quasi_inverses<C: FiniteCategory>(cat: &C, f: &C::Morphism) -> Vec<C::Morphism> {
    let (a, b) = (cat.dom(f), cat.cod(f));
    cat.hom(&b, &a)
        .iter()
        .filter(|g| {
            let fg = cat.compose_unchecked(f, g);
            let gf = cat.compose_unchecked(g, f);
            cat.compose_unchecked(&fg, f) == *f && cat.compose_unchecked(&gf, g) == **g
        })
        .cloned()
        .collect()
}

/// The unique `g` with `f g f = f` and `g f g = g`, found by search.
pub fn unique_inverse<C: FiniteCategory>(cat: &C, f: &C::Morphism) -> Result<C::Morphism> {
    let mut found = quasi_inverses(cat, f);
    match found.len() {
        0 => Err(Error::NoInverse {
            morphism: cat.render(f),
        }),
        1 => Ok(found.remove(0)),
        _ => Err(Error::AmbiguousInverse {
            morphism: cat.render(f),
            candidates: found.iter().map(|g| cat.render(g)).collect(),
        }),
    }
}

/// Moore-Penrose conditions of `g` for `f` with respect to the instance
/// involution: `fgf = f`, `gfg = g`, `(fg)* = fg`, `(gf)* = gf`.
pub fn is_generalized_inverse<C: FiniteCategory>(
    cat: &C,
    f: &C::Morphism,
    g: &C::Morphism,
) -> Result<bool> {
    if cat.dom(g) != cat.cod(f) || cat.cod(g) != cat.dom(f) {
        return Err(Error::ShapeMismatch(format!(
            "{} cannot be a generalized inverse of {}",
            cat.render(g),
            cat.render(f)
        )));
    }
    let fg = cat.compose_unchecked(f, g);
    let gf = cat.compose_unchecked(g, f);
    Ok(cat.compose_unchecked(&fg, f) == *f
        && cat.compose_unchecked(&gf, g) == *g
        && cat.involution(&fg) == fg
        && cat.involution(&gf) == gf)
}

/// Idempotent, self-adjoint endomorphism.
pub fn is_projection<C: FiniteCategory + ?Sized>(cat: &C, f: &C::Morphism) -> bool {
    cat.dom(f) == cat.cod(f) && cat.compose_unchecked(f, f) == *f && cat.involution(f) == *f
}

/// Category axioms, existence and uniqueness of inverses, and the
/// agreement of the instance involution with the canonical one.
pub fn check_inverse_category<C: FiniteCategory>(
    cat: &C,
    bound: &Bound,
) -> Result<VerificationReport> {
    bound.admit(cat)?;
    let mut report = ReportBuilder::new("inverse-category", &cat.name(), bound.sample);
    let subjects = bound.subjects(cat);
    report.morphisms(subjects.len());
    let show = |f: &C::Morphism| cat.render(f);

    let mut identity = ClauseCheck::new("category.identity", "def.category");
    let mut assoc = ClauseCheck::new("category.associativity", "def.category");
    let mut unique = ClauseCheck::new("inverse.exists-unique", "def.inverse");
    let mut canonical = ClauseCheck::new("involution.canonical", "def.canonical-involution");
    let mut shape = ClauseCheck::new("involution.shape", "def.involution");
    let mut involutory = ClauseCheck::new("involution.involutory", "def.involution");
    let mut contra = ClauseCheck::new("involution.contravariant", "def.involution");
    let mut mp = ClauseCheck::new("moore-penrose.canonical", "def.moore-penrose");
    let mut mp_unique = ClauseCheck::new("moore-penrose.unique", "def.moore-penrose");

    for a in cat.objects().iter() {
        let id = cat.identity(a);
        shape.record(cat.involution(&id) == id, || {
            format!("identity of {} is not self-adjoint", cat.object_id(a))
        });
    }

    for f in &subjects {
        let (a, b) = (cat.dom(f), cat.cod(f));
        let left = cat.compose_unchecked(f, &cat.identity(&a));
        let right = cat.compose_unchecked(&cat.identity(&b), f);
        identity.record(left == *f && right == *f, || {
            format!(
                "{}: f∘id = {}, id∘f = {}",
                show(f),
                show(&left),
                show(&right)
            )
        });

        let into_a = cat.morphisms_into(&a);
        for g in &into_a {
            let fg = cat.compose_unchecked(f, g);
            for h in cat.morphisms_into(&cat.dom(g)) {
                let lhs = cat.compose_unchecked(&fg, &h);
                let rhs = cat.compose_unchecked(f, &cat.compose_unchecked(g, &h));
                assoc.record(lhs == rhs, || {
                    format!(
                        "f = {}, g = {}, h = {}: (fg)h = {} but f(gh) = {}",
                        show(f),
                        show(g),
                        show(&h),
                        show(&lhs),
                        show(&rhs)
                    )
                });
            }
        }

        let inverses = quasi_inverses(cat, f);
        unique.record(inverses.len() == 1, || {
            format!(
                "{} has {} quasi-inverses [{}]",
                show(f),
                inverses.len(),
                inverses.iter().map(show).collect::<Vec<_>>().join(", ")
            )
        });

        let star = cat.involution(f);
        let shaped = cat.dom(&star) == b && cat.cod(&star) == a;
        shape.record(shaped, || {
            format!("{}* = {} does not reverse the arrow", show(f), show(&star))
        });
        if !shaped {
            canonical.skip();
            involutory.skip();
            contra.skip();
            mp.skip();
            continue;
        }
        if inverses.len() == 1 {
            canonical.record(inverses[0] == star, || {
                format!(
                    "{}* = {} but the unique inverse is {}",
                    show(f),
                    show(&star),
                    show(&inverses[0])
                )
            });
        } else {
            canonical.skip();
        }
        let back = cat.involution(&star);
        involutory.record(back == *f, || format!("({})** = {}", show(f), show(&back)));

        for g in &into_a {
            let fg = cat.compose_unchecked(f, g);
            let lhs = cat.involution(&fg);
            let g_star = cat.involution(g);
            if cat.dom(&g_star) != cat.cod(g) || cat.cod(&g_star) != cat.dom(g) {
                contra.skip();
                continue;
            }
            let rhs = cat.compose_unchecked(&g_star, &star);
            contra.record(lhs == rhs, || {
                format!(
                    "f = {}, g = {}: (fg)* = {} but g*f* = {}",
                    show(f),
                    show(g),
                    show(&lhs),
                    show(&rhs)
                )
            });
        }

        let ok = is_generalized_inverse(cat, f, &star).unwrap_or(false);
        mp.record(ok, || {
            format!(
                "{}* = {} fails the Moore-Penrose conditions",
                show(f),
                show(&star)
            )
        });
        let mps: Vec<_> = cat
            .hom(&b, &a)
            .iter()
            .filter(|g| is_generalized_inverse(cat, f, g).unwrap_or(false))
            .cloned()
            .collect();
        mp_unique.record(mps.len() <= 1, || {
            format!(
                "{} has {} generalized inverses [{}]",
                show(f),
                mps.len(),
                mps.iter().map(show).collect::<Vec<_>>().join(", ")
            )
        });
    }

    report.extend([
        identity, assoc, unique, canonical, shape, involutory, contra, mp, mp_unique,
    ]);
    Ok(report.finish())
}
