//! Kernels, cokernels, mono-epi factorizations, pullbacks and the
//! exactness checklist.
//!
//! Everything here is decided by brute force over the enumerated hom-sets:
//! a kernel of `f` is a morphism `u` with `f u = 0` through which every
//! other `g` with `f g = 0` factors uniquely, and so on. The algebraic
//! predicates `is_mono` (`f* f = 1`) and `is_epi` (`f f* = 1`) are checked
//! against the cancellation definitions in [`check_normal_conormal`].

use std::collections::HashMap;

use crate::budget::Bound;
use crate::category::{is_generalized_inverse, FiniteCategory};
use crate::error::{Error, Result};
use crate::projections::{baer_clauses, Calculus};
use crate::report::{ClauseCheck, ReportBuilder, VerificationReport};

/// `f* f = 1`.
pub fn is_mono<C: FiniteCategory + ?Sized>(cat: &C, f: &C::Morphism) -> bool {
    let star = cat.involution(f);
    cat.cod(&star) == cat.dom(f) && cat.compose_unchecked(&star, f) == cat.identity(&cat.dom(f))
}

/// `f f* = 1`.
pub fn is_epi<C: FiniteCategory + ?Sized>(cat: &C, f: &C::Morphism) -> bool {
    let star = cat.involution(f);
    cat.dom(&star) == cat.cod(f) && cat.compose_unchecked(f, &star) == cat.identity(&cat.cod(f))
}

/// Left-cancellable: `f g = f h` implies `g = h`.
pub fn is_mono_by_cancellation<C: FiniteCategory>(cat: &C, f: &C::Morphism) -> bool {
    let a = cat.dom(f);
    cat.objects().iter().all(|w| {
        let hom = cat.hom(w, &a);
        let mut seen = HashMap::new();
        hom.iter()
            .all(|g| seen.insert(cat.compose_unchecked(f, g), ()).is_none())
    })
}

/// Right-cancellable: `g f = h f` implies `g = h`.
pub fn is_epi_by_cancellation<C: FiniteCategory>(cat: &C, f: &C::Morphism) -> bool {
    let b = cat.cod(f);
    cat.objects().iter().all(|w| {
        let hom = cat.hom(&b, w);
        let mut seen = HashMap::new();
        hom.iter()
            .all(|g| seen.insert(cat.compose_unchecked(g, f), ()).is_none())
    })
}

/// Every `h` with `g = u h`.
pub fn mediators<C: FiniteCategory>(cat: &C, g: &C::Morphism, u: &C::Morphism) -> Vec<C::Morphism> {
    if cat.cod(g) != cat.cod(u) {
        return Vec::new();
    }
    cat.hom(&cat.dom(g), &cat.dom(u))
        .iter()
        .filter(|h| cat.compose_unchecked(u, h) == *g)
        .cloned()
        .collect()
}

/// Every `h` with `g = h q`.
pub fn comediators<C: FiniteCategory>(
    cat: &C,
    g: &C::Morphism,
    q: &C::Morphism,
) -> Vec<C::Morphism> {
    if cat.dom(g) != cat.dom(q) {
        return Vec::new();
    }
    cat.hom(&cat.cod(q), &cat.cod(g))
        .iter()
        .filter(|h| cat.compose_unchecked(h, q) == *g)
        .cloned()
        .collect()
}

pub fn factors_through<C: FiniteCategory>(cat: &C, g: &C::Morphism, u: &C::Morphism) -> bool {
    cat.cod(g) == cat.cod(u)
        && cat
            .hom(&cat.dom(g), &cat.dom(u))
            .iter()
            .any(|h| cat.compose_unchecked(u, h) == *g)
}

fn kernel_witness<C: FiniteCategory>(
    calc: &Calculus<'_, C>,
    u: &C::Morphism,
    f: &C::Morphism,
) -> Option<String> {
    let cat = calc.cat();
    if cat.cod(u) != cat.dom(f) {
        return Some(format!(
            "{} does not land in the domain of {}",
            cat.render(u),
            cat.render(f)
        ));
    }
    if !cat.is_zero(&cat.compose_unchecked(f, u)) {
        return Some(format!("{} ∘ {} is not zero", cat.render(f), cat.render(u)));
    }
    for g in calc.morphisms_into(&cat.dom(f)).iter() {
        if cat.is_zero(&cat.compose_unchecked(f, g)) {
            let n = mediators(cat, g, u).len();
            if n != 1 {
                return Some(format!(
                    "{} is killed by {} but factors through {} in {n} ways",
                    cat.render(g),
                    cat.render(f),
                    cat.render(u)
                ));
            }
        }
    }
    None
}

fn cokernel_witness<C: FiniteCategory>(
    calc: &Calculus<'_, C>,
    q: &C::Morphism,
    f: &C::Morphism,
) -> Option<String> {
    let cat = calc.cat();
    if cat.dom(q) != cat.cod(f) {
        return Some(format!(
            "{} does not start at the codomain of {}",
            cat.render(q),
            cat.render(f)
        ));
    }
    if !cat.is_zero(&cat.compose_unchecked(q, f)) {
        return Some(format!("{} ∘ {} is not zero", cat.render(q), cat.render(f)));
    }
    for g in calc.morphisms_from(&cat.cod(f)).iter() {
        if cat.is_zero(&cat.compose_unchecked(g, f)) {
            let n = comediators(cat, g, q).len();
            if n != 1 {
                return Some(format!(
                    "{} kills {} but factors through {} in {n} ways",
                    cat.render(g),
                    cat.render(f),
                    cat.render(q)
                ));
            }
        }
    }
    None
}

/// `u` is a kernel of `f`.
pub fn is_kernel<C: FiniteCategory>(cat: &C, u: &C::Morphism, f: &C::Morphism) -> bool {
    kernel_witness(&Calculus::new(cat), u, f).is_none()
}

/// `q` is a cokernel of `f`.
pub fn is_cokernel<C: FiniteCategory>(cat: &C, q: &C::Morphism, f: &C::Morphism) -> bool {
    cokernel_witness(&Calculus::new(cat), q, f).is_none()
}

pub(crate) fn kernel_in<C: FiniteCategory>(
    calc: &Calculus<'_, C>,
    f: &C::Morphism,
) -> Result<C::Morphism> {
    let cat = calc.cat();
    let (a, b) = (cat.dom(f), cat.cod(f));
    let z = cat.zero_object();
    if z.as_ref() == Some(&b) || z.as_ref() == Some(&a) {
        return Ok(cat.identity(&a));
    }
    for k in cat.objects().iter() {
        for u in cat.hom(k, &a).iter() {
            if kernel_witness(calc, u, f).is_none() {
                return Ok(u.clone());
            }
        }
    }
    Err(Error::NoKernel {
        morphism: cat.render(f),
    })
}

pub(crate) fn cokernel_in<C: FiniteCategory>(
    calc: &Calculus<'_, C>,
    f: &C::Morphism,
) -> Result<C::Morphism> {
    let cat = calc.cat();
    let (a, b) = (cat.dom(f), cat.cod(f));
    let z = cat.zero_object();
    if z.as_ref() == Some(&a) || z.as_ref() == Some(&b) {
        return Ok(cat.identity(&b));
    }
    for k in cat.objects().iter() {
        for q in cat.hom(&b, k).iter() {
            if cokernel_witness(calc, q, f).is_none() {
                return Ok(q.clone());
            }
        }
    }
    Err(Error::NoCokernel {
        morphism: cat.render(f),
    })
}

/// The first kernel of `f` in enumeration order. Morphisms into or out of
/// the zero object get `id_{dom f}` directly.
pub fn kernel<C: FiniteCategory>(cat: &C, f: &C::Morphism) -> Result<C::Morphism> {
    kernel_in(&Calculus::new(cat), f)
}

/// The first cokernel of `f` in enumeration order.
pub fn cokernel<C: FiniteCategory>(cat: &C, f: &C::Morphism) -> Result<C::Morphism> {
    cokernel_in(&Calculus::new(cat), f)
}

/// `f = p q` with `p` mono and `q` epi, through the object `through`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<O, M> {
    pub p: M,
    pub q: M,
    pub through: O,
}

/// First mono-epi factorization found; monomorphisms factor as `(f, id)`.
pub fn mono_epi_factorize<C: FiniteCategory>(
    cat: &C,
    f: &C::Morphism,
) -> Result<Factorization<C::Object, C::Morphism>> {
    let (a, b) = (cat.dom(f), cat.cod(f));
    if is_mono(cat, f) {
        return Ok(Factorization {
            p: f.clone(),
            q: cat.identity(&a),
            through: a,
        });
    }
    for i in cat.objects().iter() {
        let epis: Vec<_> = cat
            .hom(&a, i)
            .iter()
            .filter(|q| is_epi(cat, q))
            .cloned()
            .collect();
        if epis.is_empty() {
            continue;
        }
        for p in cat.hom(i, &b).iter().filter(|p| is_mono(cat, p)) {
            if let Some(q) = epis.iter().find(|q| cat.compose_unchecked(p, q) == *f) {
                return Ok(Factorization {
                    p: p.clone(),
                    q: q.clone(),
                    through: i.clone(),
                });
            }
        }
    }
    Err(Error::NoFactorization {
        morphism: cat.render(f),
    })
}

/// A monomorphism `u` with `u u* = e`, the subobject a projection stands
/// for. First in enumeration order.
pub fn subobject_of<C: FiniteCategory>(cat: &C, e: &C::Morphism) -> Result<C::Morphism> {
    let a = cat.cod(e);
    for i in cat.objects().iter() {
        for u in cat.hom(i, &a).iter() {
            if is_mono(cat, u) && cat.compose_unchecked(u, &cat.involution(u)) == *e {
                return Ok(u.clone());
            }
        }
    }
    Err(Error::NoSubobject {
        projection: cat.render(e),
    })
}

/// An isomorphism `h` with `p = p2 h`, when the monos `p` and `p2` present
/// the same subobject.
pub fn subobject_iso<C: FiniteCategory>(
    cat: &C,
    p: &C::Morphism,
    p2: &C::Morphism,
) -> Option<C::Morphism> {
    if cat.cod(p) != cat.cod(p2) {
        return None;
    }
    cat.hom(&cat.dom(p), &cat.dom(p2))
        .iter()
        .find(|h| is_mono(cat, h) && is_epi(cat, h) && cat.compose_unchecked(p2, h) == *p)
        .cloned()
}

/// `v` is an image of `g`: `g` factors through `v`, and `v` factors through
/// every monomorphism that `g` factors through.
pub fn is_image_of<C: FiniteCategory>(cat: &C, v: &C::Morphism, g: &C::Morphism) -> bool {
    if !is_mono(cat, v) || !factors_through(cat, g, v) {
        return false;
    }
    let b = cat.cod(g);
    cat.morphisms_into(&b)
        .iter()
        .filter(|s| is_mono(cat, s) && factors_through(cat, g, s))
        .all(|s| factors_through(cat, v, s))
}

/// ```text
///   P --top--> Y
///   |          |
///  left      right
///   v          v
///   A -bottom-> B
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingSquare<M> {
    pub top: M,
    pub left: M,
    pub right: M,
    pub bottom: M,
}

impl<M: Clone + Eq> CommutingSquare<M> {
    pub fn new<C: FiniteCategory<Morphism = M>>(
        cat: &C,
        top: M,
        left: M,
        right: M,
        bottom: M,
    ) -> Result<Self> {
        let typed = cat.dom(&top) == cat.dom(&left)
            && cat.cod(&left) == cat.dom(&bottom)
            && cat.cod(&top) == cat.dom(&right)
            && cat.cod(&right) == cat.cod(&bottom);
        if !typed {
            return Err(Error::ShapeMismatch(format!(
                "edges top {}, left {}, right {}, bottom {} do not form a square",
                cat.render(&top),
                cat.render(&left),
                cat.render(&right),
                cat.render(&bottom)
            )));
        }
        let lb = cat.compose_unchecked(&bottom, &left);
        let rt = cat.compose_unchecked(&right, &top);
        if lb != rt {
            return Err(Error::NonCommutingSquare(format!(
                "bottom∘left = {} but right∘top = {}",
                cat.render(&lb),
                cat.render(&rt)
            )));
        }
        Ok(CommutingSquare {
            top,
            left,
            right,
            bottom,
        })
    }
}

/// A cone `(x, y)` over the cospan with no unique mediating morphism, if any.
pub fn pullback_counterexample<C: FiniteCategory>(
    cat: &C,
    sq: &CommutingSquare<C::Morphism>,
) -> Option<String> {
    let p = cat.dom(&sq.left);
    let a = cat.cod(&sq.left);
    let y = cat.dom(&sq.right);
    for w in cat.objects().iter() {
        let mut cones: HashMap<(C::Morphism, C::Morphism), usize> = HashMap::new();
        for m in cat.hom(w, &p).iter() {
            *cones
                .entry((
                    cat.compose_unchecked(&sq.left, m),
                    cat.compose_unchecked(&sq.top, m),
                ))
                .or_default() += 1;
        }
        let ys = cat.hom(w, &y);
        let rys: Vec<_> = ys
            .iter()
            .map(|yy| cat.compose_unchecked(&sq.right, yy))
            .collect();
        for x in cat.hom(w, &a).iter() {
            let bx = cat.compose_unchecked(&sq.bottom, x);
            for (yy, ry) in ys.iter().zip(&rys) {
                if bx != *ry {
                    continue;
                }
                let n = cones.get(&(x.clone(), yy.clone())).copied().unwrap_or(0);
                if n != 1 {
                    return Some(format!(
                        "cone x = {}, y = {} has {n} mediating morphisms",
                        cat.render(x),
                        cat.render(yy)
                    ));
                }
            }
        }
    }
    None
}

pub fn is_pullback<C: FiniteCategory>(cat: &C, sq: &CommutingSquare<C::Morphism>) -> bool {
    pullback_counterexample(cat, sq).is_none()
}

struct NormalClauses {
    mono: ClauseCheck,
    epi: ClauseCheck,
    normal: ClauseCheck,
    conormal: ClauseCheck,
    normal_witness: ClauseCheck,
    conormal_witness: ClauseCheck,
}

fn normal_clauses<C: FiniteCategory>(
    calc: &Calculus<'_, C>,
    subjects: &[C::Morphism],
) -> NormalClauses {
    let cat = calc.cat();
    let show = |f: &C::Morphism| cat.render(f);
    let mut c = NormalClauses {
        mono: ClauseCheck::new("mono.criterion", "def.mono"),
        epi: ClauseCheck::new("epi.criterion", "def.epi"),
        normal: ClauseCheck::new("exact.normal", "def.exact"),
        conormal: ClauseCheck::new("exact.conormal", "def.exact"),
        normal_witness: ClauseCheck::new("coherence.normal-witness", "1.1"),
        conormal_witness: ClauseCheck::new("coherence.conormal-witness", "1.1"),
    };
    for f in subjects {
        let (m, mc) = (is_mono(cat, f), is_mono_by_cancellation(cat, f));
        c.mono.record(m == mc, || {
            format!("{}: f*f = 1 is {m} but cancellation gives {mc}", show(f))
        });
        let (e, ec) = (is_epi(cat, f), is_epi_by_cancellation(cat, f));
        c.epi.record(e == ec, || {
            format!("{}: ff* = 1 is {e} but cancellation gives {ec}", show(f))
        });

        if m {
            let witness = calc.annihilator(&cat.involution(f));
            match &witness {
                Ok(h) => c
                    .normal_witness
                    .record(kernel_witness(calc, f, h).is_none(), || {
                        format!(
                            "{} is not a kernel of (u*)′ = {}: {}",
                            show(f),
                            show(h),
                            kernel_witness(calc, f, h).unwrap_or_default()
                        )
                    }),
                Err(_) => c.normal_witness.skip(),
            }
            let found = witness
                .as_ref()
                .is_ok_and(|h| kernel_witness(calc, f, h).is_none())
                || calc
                    .morphisms_from(&cat.cod(f))
                    .iter()
                    .any(|h| kernel_witness(calc, f, h).is_none());
            c.normal.record(found, || {
                format!("monomorphism {} is not the kernel of any morphism", show(f))
            });
        }
        if e {
            let witness = calc.annihilator(f);
            match &witness {
                Ok(h) => c
                    .conormal_witness
                    .record(cokernel_witness(calc, f, h).is_none(), || {
                        format!(
                            "{} is not a cokernel of v′ = {}: {}",
                            show(f),
                            show(h),
                            cokernel_witness(calc, f, h).unwrap_or_default()
                        )
                    }),
                Err(_) => c.conormal_witness.skip(),
            }
            let found = witness
                .as_ref()
                .is_ok_and(|h| cokernel_witness(calc, f, h).is_none())
                || calc
                    .morphisms_into(&cat.dom(f))
                    .iter()
                    .any(|h| cokernel_witness(calc, f, h).is_none());
            c.conormal.record(found, || {
                format!(
                    "epimorphism {} is not the cokernel of any morphism",
                    show(f)
                )
            });
        }
    }
    c
}

/// Mono/epi criteria against cancellation, normality and conormality, and
/// the specific witnesses `u = ker (u*)′`, `v = coker v′`.
pub fn check_normal_conormal<C: FiniteCategory>(
    cat: &C,
    bound: &Bound,
) -> Result<VerificationReport> {
    bound.admit(cat)?;
    let calc = Calculus::new(cat);
    let subjects = bound.subjects(cat);
    let mut report = ReportBuilder::new("normal-conormal", &cat.name(), bound.sample);
    report.morphisms(subjects.len());
    let c = normal_clauses(&calc, &subjects);
    report.extend([
        c.mono,
        c.epi,
        c.normal,
        c.conormal,
        c.normal_witness,
        c.conormal_witness,
    ]);
    Ok(report.finish())
}

/// Both sides of the exactness characterization, checked independently,
/// plus the coherence identities linking kernels to annihilators.
///
/// Checklist A is the definition of exactness (kernels, cokernels, normal,
/// conormal, factorizations). Checklist B is the Baer* side (annihilators
/// exist and are unique, projections closed and factorizable). The
/// `equivalence` clause passes when both verdicts agree, and is skipped when
/// some morphism lacks a Moore-Penrose inverse, since the characterization
/// then does not apply.
pub fn check_exactness<C: FiniteCategory>(cat: &C, bound: &Bound) -> Result<VerificationReport> {
    bound.admit(cat)?;
    let calc = Calculus::new(cat);
    let subjects = bound.subjects(cat);
    let mut report = ReportBuilder::new("exactness", &cat.name(), bound.sample);
    report.morphisms(subjects.len());
    let show = |f: &C::Morphism| cat.render(f);

    let mut mp = ClauseCheck::new("hypothesis.moore-penrose", "1.1");
    let mut kernels = ClauseCheck::new("exact.kernels", "def.exact");
    let mut cokernels = ClauseCheck::new("exact.cokernels", "def.exact");
    let mut factor = ClauseCheck::new("exact.factorization", "def.exact");
    let mut proj_factor = ClauseCheck::new("baer.projection-factorization", "1.1");
    let mut ker_ann = ClauseCheck::new("coherence.kernel-annihilator", "1.1");
    let mut ann_ker = ClauseCheck::new("coherence.annihilator-factor-kernel", "1.1");
    let mut coann_coker = ClauseCheck::new("coherence.coannihilator-factor-cokernel", "1.1");
    let mut image = ClauseCheck::new("coherence.image-projection", "1.1");

    for f in &subjects {
        let (a, b) = (cat.dom(f), cat.cod(f));
        let has_mp = is_generalized_inverse(cat, f, &cat.involution(f)).unwrap_or(false)
            || cat
                .hom(&b, &a)
                .iter()
                .any(|g| is_generalized_inverse(cat, f, g).unwrap_or(false));
        mp.record(has_mp, || {
            format!("{} has no Moore-Penrose inverse", show(f))
        });

        let ker = kernel_in(&calc, f);
        kernels.record(ker.is_ok(), || format!("{} has no kernel", show(f)));
        let coker = cokernel_in(&calc, f);
        cokernels.record(coker.is_ok(), || format!("{} has no cokernel", show(f)));
        let fact = mono_epi_factorize(cat, f);
        factor.record(fact.is_ok(), || {
            format!("{} has no mono-epi factorization", show(f))
        });

        let fp = calc.annihilator(f);
        match (&ker, &fp) {
            (Ok(u), Ok(fp)) => {
                let uu = cat.compose_unchecked(u, &cat.involution(u));
                ker_ann.record(uu == *fp, || {
                    format!(
                        "{}: ker f = {}, ker f (ker f)* = {} but f′ = {}",
                        show(f),
                        show(u),
                        show(&uu),
                        show(fp)
                    )
                });
            }
            _ => ker_ann.skip(),
        }
        match fp.as_ref().map(|fp| mono_epi_factorize(cat, fp)) {
            Ok(Ok(fa)) => ann_ker.record(kernel_witness(&calc, &fa.p, f).is_none(), || {
                format!(
                    "{}: f′ = p q with p = {} not a kernel of f",
                    show(f),
                    show(&fa.p)
                )
            }),
            _ => ann_ker.skip(),
        }
        match calc
            .annihilator(&cat.involution(f))
            .map(|fsp| mono_epi_factorize(cat, &fsp))
        {
            Ok(Ok(fa)) => coann_coker.record(cokernel_witness(&calc, &fa.q, f).is_none(), || {
                format!(
                    "{}: (f*)′ = p q with q = {} not a cokernel of f",
                    show(f),
                    show(&fa.q)
                )
            }),
            _ => coann_coker.skip(),
        }
        let ffs = cat.compose_unchecked(f, &cat.involution(f));
        match (&fact, mono_epi_factorize(cat, &ffs)) {
            (Ok(ff), Ok(fs)) => image.record(subobject_iso(cat, &fs.p, &ff.p).is_some(), || {
                format!(
                    "{}: mono part {} of ff* is not isomorphic to the image {}",
                    show(f),
                    show(&fs.p),
                    show(&ff.p)
                )
            }),
            _ => image.skip(),
        }
    }
    for a in cat.objects().iter() {
        for i in calc.projections(a).iter() {
            proj_factor.record(mono_epi_factorize(cat, i).is_ok(), || {
                format!("projection {} has no mono-epi factorization", show(i))
            });
        }
    }

    let normal = normal_clauses(&calc, &subjects);
    let baer = baer_clauses(&calc, &subjects);

    let side_a = [
        &kernels,
        &cokernels,
        &normal.normal,
        &normal.conormal,
        &factor,
    ];
    let exact = side_a.iter().all(|c| !c.is_failed());
    let baer_ok = baer.iter().all(|c| !c.is_failed()) && !proj_factor.is_failed();
    let hypothesis = !mp.is_failed();
    report.verdict("exact", exact);
    report.verdict("baer-closed-factorizable", baer_ok);
    report.verdict("moore-penrose", hypothesis);

    let mut equivalence = ClauseCheck::new("equivalence", "1.1");
    if hypothesis {
        equivalence.record(exact == baer_ok, || {
            format!("exactness checklist gives {exact} but the Baer* checklist gives {baer_ok}")
        });
    } else {
        equivalence.skip();
    }

    report.push(mp);
    report.extend([kernels, cokernels, normal.normal, normal.conormal, factor]);
    report.extend(baer);
    report.push(proj_factor);
    report.extend([
        ker_ann,
        ann_ker,
        coann_coker,
        normal.normal_witness,
        normal.conormal_witness,
        image,
        normal.mono,
        normal.epi,
    ]);
    report.push(equivalence);
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbij::{FinSet, PBij, PbijCategory, Subset};

    struct Fx {
        cat: PbijCategory,
        a: FinSet,
        b: FinSet,
        f: PBij,
    }

    fn fx() -> Fx {
        let a = FinSet::new("A", ["1", "2", "3"]).unwrap();
        let b = FinSet::new("B", ["a", "b", "c"]).unwrap();
        let extra = [
            FinSet::canonical(1),
            FinSet::canonical(2),
            FinSet::new("{1,3}", ["1", "3"]).unwrap(),
            FinSet::new("{1}", ["1"]).unwrap(),
            FinSet::new("{a,c}", ["a", "c"]).unwrap(),
            FinSet::new("{3}", ["3"]).unwrap(),
            FinSet::new("{c}", ["c"]).unwrap(),
        ];
        let cat =
            PbijCategory::new("fixture", extra.into_iter().chain([a.clone(), b.clone()])).unwrap();
        let f = PBij::new(&a, &b, &[("1", "a"), ("2", "b")]).unwrap();
        Fx { cat, a, b, f }
    }

    fn incl(set: &FinSet, labels: &[&str]) -> PBij {
        Subset::new(set, labels).unwrap().inclusion()
    }

    #[test]
    fn mono_and_epi_predicates() {
        let Fx { cat, a, b, .. } = fx();
        let i13 = incl(&a, &["1", "3"]);
        assert!(is_mono(&cat, &i13) && !is_epi(&cat, &i13));
        assert!(is_mono_by_cancellation(&cat, &i13) && !is_epi_by_cancellation(&cat, &i13));
        let id = PBij::identity(&a);
        assert!(is_mono(&cat, &id) && is_epi(&cat, &id));
        assert!(!is_mono(&cat, &PBij::zero(&a, &b)));
        assert!(!is_mono_by_cancellation(&cat, &PBij::zero(&a, &b)));
    }

    #[test]
    fn kernel_of_fixture_is_the_missing_point() {
        let Fx { cat, a, b, f } = fx();
        let k = kernel(&cat, &f).unwrap();
        assert_eq!(k.cod(), &a);
        assert_eq!(k.image(), Subset::new(&a, &["3"]).unwrap());
        assert!(is_kernel(&cat, &f.kernel(), &f));
        assert_eq!(
            kernel(&cat, &PBij::identity(&a)).unwrap().dom(),
            &FinSet::zero()
        );
        let k0 = kernel(&cat, &PBij::zero(&a, &b)).unwrap();
        assert!(k0.cod() == &a && is_mono(&cat, &k0) && is_epi(&cat, &k0));
    }

    #[test]
    fn cokernel_of_fixture() {
        let Fx { cat, a, b, f } = fx();
        let q = cokernel(&cat, &f).unwrap();
        assert_eq!(q.dom(), &b);
        assert_eq!(q.domain(), Subset::new(&b, &["c"]).unwrap());
        assert!(is_cokernel(&cat, &f.cokernel(), &f));
        let epi = PBij::identity(&b);
        assert_eq!(cokernel(&cat, &epi).unwrap().cod(), &FinSet::zero());
        let q0 = cokernel(&cat, &PBij::zero(&a, &b)).unwrap();
        assert!(q0.dom() == &b && is_mono(&cat, &q0) && is_epi(&cat, &q0));
    }

    #[test]
    fn factorizations() {
        let Fx { cat, a, b, f } = fx();
        let fa = mono_epi_factorize(&cat, &f).unwrap();
        assert_eq!(cat.compose_unchecked(&fa.p, &fa.q), f);
        assert!(is_mono(&cat, &fa.p) && is_epi(&cat, &fa.q));
        assert_eq!(fa.through.len(), 2);
        let i13 = incl(&a, &["1", "3"]);
        let m = mono_epi_factorize(&cat, &i13).unwrap();
        assert_eq!((m.p, m.q), (i13.clone(), PBij::identity(i13.dom())));
        assert_eq!(
            mono_epi_factorize(&cat, &PBij::zero(&a, &b))
                .unwrap()
                .through,
            FinSet::zero()
        );
    }

    #[test]
    fn pullback_square_of_the_fixture() {
        let Fx { cat, a, b, f } = fx();
        let v = incl(&b, &["a", "c"]);
        let p = incl(&a, &["1", "3"]);
        let top = v.inverse().compose(&f).unwrap().compose(&p).unwrap();
        assert_eq!(top.to_string(), "{(1,a)}");
        let sq = CommutingSquare::new(&cat, top, p, v.clone(), f.clone()).unwrap();
        assert!(is_pullback(&cat, &sq));

        let p1 = incl(&a, &["1"]);
        let top1 = v.inverse().compose(&f).unwrap().compose(&p1).unwrap();
        let bad = CommutingSquare::new(&cat, top1, p1, v, f).unwrap();
        assert!(pullback_counterexample(&cat, &bad).is_some());

        let id = PBij::identity(&a);
        let ids = CommutingSquare::new(&cat, id.clone(), id.clone(), id.clone(), id).unwrap();
        assert!(is_pullback(&cat, &ids));
    }

    #[test]
    fn non_commuting_square_is_rejected() {
        let Fx { cat, a, b, f } = fx();
        let id_a = PBij::identity(&a);
        let id_b = PBij::identity(&b);
        let r = CommutingSquare::new(&cat, PBij::zero(&a, &b), id_a, id_b, f);
        assert!(matches!(r, Err(Error::NonCommutingSquare(_))));
    }

    #[test]
    fn small_partial_bijections_are_exact() {
        let cat = PbijCategory::canonical(&[0, 1, 2]);
        let r = check_exactness(&cat, &Bound::exhaustive()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(r.verdicts["exact"]);
        let r = check_normal_conormal(&cat, &Bound::exhaustive()).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}
