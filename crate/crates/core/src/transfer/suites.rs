//! Verification suites for the properties of `P`, `P′` and `P″`.
//!
//! Each suite quantifies over the (possibly sampled) morphisms of the
//! category and over every projection or subobject involved; the inner
//! quantifiers are always exhaustive. Biconditionals are evaluated in both
//! directions: the two truth values are computed independently and their
//! agreement is the clause.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use crate::budget::Bound;
use crate::category::FiniteCategory;
use crate::error::Result;
use crate::exactness::{
    factors_through, is_epi, is_mono, pullback_counterexample, CommutingSquare,
};
use crate::report::{ClauseCheck, ReportBuilder, VerificationReport};

use super::{check_functoriality, Functor, Transfer, TransferMap};

/// A square declared by the caller as a pullback, with a display name.
pub type NamedSquare<M> = (String, CommutingSquare<M>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// `P(f)(u u*)` presents the image of `f u`.
    Image,
    /// Preservation of monos/epis; values at `0`, `1`, `f* f`.
    ImageBasics,
    /// Meets, order, and the bound `ff*`.
    ImageOrder,
    /// `P′(f)(v v*)` presents a pullback of `v` along `f`.
    Pullback,
    InverseImageBasics,
    InverseImageOrder,
    /// How `P` and `P′` determine each other.
    Adjunction,
    StrictPreimageBasics,
    StrictPreimageOrder,
    /// `P″(f)(j) = (P′(f)(j′))′` and its consequences.
    Connection,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Image,
        Suite::ImageBasics,
        Suite::ImageOrder,
        Suite::Pullback,
        Suite::InverseImageBasics,
        Suite::InverseImageOrder,
        Suite::Adjunction,
        Suite::StrictPreimageBasics,
        Suite::StrictPreimageOrder,
        Suite::Connection,
    ];

    /// Command-line id.
    pub fn id(self) -> &'static str {
        match self {
            Suite::Image => "2.1",
            Suite::ImageBasics => "2.2",
            Suite::ImageOrder => "2.3",
            Suite::Pullback => "3.1",
            Suite::InverseImageBasics => "3.3",
            Suite::InverseImageOrder => "3.4",
            Suite::Adjunction => "3.5",
            Suite::StrictPreimageBasics => "4.1",
            Suite::StrictPreimageOrder => "4.2",
            Suite::Connection => "connection",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error(
    "unknown suite {0:?}; expected one of 2.1, 2.2, 2.3, 3.1, 3.3, 3.4, 3.5, 4.1, 4.2, connection"
)]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| UnknownSuite(s.to_owned()))
    }
}

struct Ctx<'t, 'a, C: FiniteCategory> {
    t: &'t Transfer<'a, C>,
    defined: ClauseCheck,
}

impl<'t, 'a, C: FiniteCategory> Ctx<'t, 'a, C> {
    fn map(&mut self, kind: Functor, f: &C::Morphism) -> Option<Rc<TransferMap<C::Morphism>>> {
        match self.t.map(kind, f) {
            Ok(m) => {
                self.defined.record(true, String::new);
                Some(m)
            }
            Err(e) => {
                let cat = self.t.cat();
                self.defined.fail(format!("{kind}({}): {e}", cat.render(f)));
                None
            }
        }
    }

    fn show(&self, f: &C::Morphism) -> String {
        self.t.cat().render(f)
    }

    fn star(&self, f: &C::Morphism) -> C::Morphism {
        self.t.cat().involution(f)
    }

    fn after(&self, f: &C::Morphism, g: &C::Morphism) -> C::Morphism {
        self.t.cat().compose_unchecked(f, g)
    }

    /// `u u*`.
    fn range(&self, u: &C::Morphism) -> C::Morphism {
        self.after(u, &self.star(u))
    }
}

/// Runs one suite. `squares` are extra squares asserted to be pullbacks;
/// only the pullback suite looks at them.
pub fn check_suite<C: FiniteCategory>(
    cat: &C,
    suite: Suite,
    bound: &Bound,
    squares: &[NamedSquare<C::Morphism>],
) -> Result<VerificationReport> {
    bound.admit(cat)?;
    let t = Transfer::new(cat);
    let subjects = bound.subjects(cat);
    let mut report = ReportBuilder::new(suite.id(), &cat.name(), bound.sample);
    report.morphisms(subjects.len());
    let mut cx = Ctx {
        t: &t,
        defined: ClauseCheck::new("transfer.defined", "def.transfer"),
    };
    let clauses = match suite {
        Suite::Image => image(&mut cx, &subjects),
        Suite::ImageBasics => image_basics(&mut cx, &subjects),
        Suite::ImageOrder => order(&mut cx, &subjects, Functor::P),
        Suite::Pullback => pullback(&mut cx, &subjects, squares),
        Suite::InverseImageBasics => inverse_image_basics(&mut cx, &subjects),
        Suite::InverseImageOrder => order(&mut cx, &subjects, Functor::PPrime),
        Suite::Adjunction => adjunction(&mut cx, &subjects),
        Suite::StrictPreimageBasics => strict_preimage_basics(&mut cx, &subjects),
        Suite::StrictPreimageOrder => order(&mut cx, &subjects, Functor::PDoublePrime),
        Suite::Connection => connection(&mut cx, &subjects),
    };
    report.push(cx.defined);
    report.extend(clauses);
    Ok(report.finish())
}

fn image<C: FiniteCategory>(cx: &mut Ctx<'_, '_, C>, subjects: &[C::Morphism]) -> Vec<ClauseCheck> {
    let cat = cx.t.cat();
    let mut minimal = ClauseCheck::new("image.minimal", "2.1");
    let mut characterization = ClauseCheck::new("image.characterization", "3.2(i)");
    // containment[v][s]: v factors through s, for monos into one object
    let mut orders: HashMap<C::Object, Rc<Vec<Vec<bool>>>> = HashMap::new();

    for f in subjects {
        let Some(pf) = cx.map(Functor::P, f) else {
            continue;
        };
        let b = cat.cod(f);
        let mb = cx.t.monos_into(&b);
        let ranges: Vec<_> = mb.iter().map(|v| cx.range(v)).collect();
        let order = orders
            .entry(b.clone())
            .or_insert_with(|| {
                Rc::new(
                    mb.iter()
                        .map(|v| mb.iter().map(|s| factors_through(cat, v, s)).collect())
                        .collect(),
                )
            })
            .clone();

        for u in cx.t.monos_into(&cat.dom(f)).iter() {
            let fu = cx.after(f, u);
            let Some(e) = pf.apply(&cx.range(u)) else {
                cx.defined
                    .fail(format!("u u* for u = {} is not a projection", cx.show(u)));
                continue;
            };
            let through: Vec<bool> = mb.iter().map(|s| factors_through(cat, &fu, s)).collect();
            let is_image =
                |vi: usize| through[vi] && (0..mb.len()).all(|si| !through[si] || order[vi][si]);

            match ranges.iter().position(|r| r == e) {
                Some(pi) => minimal.record(is_image(pi), || {
                    format!(
                        "f = {}, u = {}: p = {} with pp* = P(f)(uu*) is not the image of fu",
                        cx.show(f),
                        cx.show(u),
                        cx.show(&mb[pi])
                    )
                }),
                None => minimal.fail(format!(
                    "f = {}, u = {}: no mono p with pp* = {}",
                    cx.show(f),
                    cx.show(u),
                    cx.show(e)
                )),
            }
            for (vi, v) in mb.iter().enumerate() {
                let lhs = is_image(vi);
                let rhs = ranges[vi] == *e;
                characterization.record(lhs == rhs, || {
                    format!(
                        "f = {}, u = {}, v = {}: v is the image of fu is {lhs} but P(f)(uu*) = vv* is {rhs}",
                        cx.show(f),
                        cx.show(u),
                        cx.show(v)
                    )
                });
            }
        }
    }
    vec![minimal, characterization]
}

fn image_basics<C: FiniteCategory>(
    cx: &mut Ctx<'_, '_, C>,
    subjects: &[C::Morphism],
) -> Vec<ClauseCheck> {
    let cat = cx.t.cat();
    let mut mono = ClauseCheck::new("image.preserves-mono", "2.2(i)");
    let mut epi = ClauseCheck::new("image.preserves-epi", "2.2(i)");
    let mut zero = ClauseCheck::new("image.zero", "2.2(ii)");
    let mut one = ClauseCheck::new("image.one", "2.2(ii)");
    let mut support = ClauseCheck::new("image.support", "2.2(iii)");
    for f in subjects {
        let Some(m) = cx.map(Functor::P, f) else {
            continue;
        };
        let (src, tgt) = (m.source(), m.target());
        let ffs = cx.range(f);
        if is_mono(cat, f) {
            mono.record(m.is_injective(), || {
                format!("{} is mono but P(f) is not injective", cx.show(f))
            });
        }
        if is_epi(cat, f) {
            epi.record(m.is_surjective(), || {
                format!("{} is epi but P(f) is not surjective", cx.show(f))
            });
        }
        zero.record(m.at(src.bottom()) == tgt.bottom(), || {
            format!(
                "P({})(0) = {}",
                cx.show(f),
                cx.show(tgt.get(m.at(src.bottom())))
            )
        });
        one.record(*tgt.get(m.at(src.top())) == ffs, || {
            format!(
                "P({})(1) = {} but ff* = {}",
                cx.show(f),
                cx.show(tgt.get(m.at(src.top()))),
                cx.show(&ffs)
            )
        });
        let fsf = cx.after(&cx.star(f), f);
        support.record(m.apply(&fsf) == Some(&ffs), || {
            format!("P({})(f*f) ≠ ff* = {}", cx.show(f), cx.show(&ffs))
        });
    }
    vec![mono, epi, zero, one, support]
}

fn inverse_image_basics<C: FiniteCategory>(
    cx: &mut Ctx<'_, '_, C>,
    subjects: &[C::Morphism],
) -> Vec<ClauseCheck> {
    let cat = cx.t.cat();
    let mut injective = ClauseCheck::new("inverse-image.injective-iff-epi", "3.3(i)");
    let mut surjective = ClauseCheck::new("inverse-image.surjective-iff-mono", "3.3(i)");
    let mut zero = ClauseCheck::new("inverse-image.zero", "3.3(ii)");
    let mut one = ClauseCheck::new("inverse-image.one", "3.3(ii)");
    let mut support = ClauseCheck::new("inverse-image.support", "3.3(iii)");
    for f in subjects {
        let Some(m) = cx.map(Functor::PPrime, f) else {
            continue;
        };
        let (src, tgt) = (m.source(), m.target());
        let (inj, e) = (m.is_injective(), is_epi(cat, f));
        injective.record(inj == e, || {
            format!("{}: P′(f) injective is {inj}, f epi is {e}", cx.show(f))
        });
        let (sur, mo) = (m.is_surjective(), is_mono(cat, f));
        surjective.record(sur == mo, || {
            format!("{}: P′(f) surjective is {sur}, f mono is {mo}", cx.show(f))
        });
        match cx.t.calculus().annihilator(f) {
            Ok(fp) => zero.record(*tgt.get(m.at(src.bottom())) == fp, || {
                format!(
                    "P′({})(0) = {} but f′ = {}",
                    cx.show(f),
                    cx.show(tgt.get(m.at(src.bottom()))),
                    cx.show(&fp)
                )
            }),
            Err(err) => zero.fail(format!("{}: {err}", cx.show(f))),
        }
        one.record(m.at(src.top()) == tgt.top(), || {
            format!(
                "P′({})(1) = {}",
                cx.show(f),
                cx.show(tgt.get(m.at(src.top())))
            )
        });
        let ffs = cx.range(f);
        support.record(m.apply(&ffs) == Some(tgt.get(tgt.top())), || {
            format!("P′({})(ff*) ≠ 1", cx.show(f))
        });
    }
    vec![injective, surjective, zero, one, support]
}

fn strict_preimage_basics<C: FiniteCategory>(
    cx: &mut Ctx<'_, '_, C>,
    subjects: &[C::Morphism],
) -> Vec<ClauseCheck> {
    let cat = cx.t.cat();
    let mut injective = ClauseCheck::new("strict-preimage.injective-iff-epi", "4.1(i)");
    let mut surjective = ClauseCheck::new("strict-preimage.surjective-iff-mono", "4.1(i)");
    let mut zero = ClauseCheck::new("strict-preimage.zero", "4.1(ii)");
    let mut one = ClauseCheck::new("strict-preimage.one", "4.1(ii)");
    let mut cosupport = ClauseCheck::new("strict-preimage.cosupport", "4.1(iii)");
    for f in subjects {
        let Some(m) = cx.map(Functor::PDoublePrime, f) else {
            continue;
        };
        let (src, tgt) = (m.source(), m.target());
        let (inj, e) = (m.is_injective(), is_epi(cat, f));
        injective.record(inj == e, || {
            format!("{}: P″(f) injective is {inj}, f epi is {e}", cx.show(f))
        });
        let (sur, mo) = (m.is_surjective(), is_mono(cat, f));
        surjective.record(sur == mo, || {
            format!("{}: P″(f) surjective is {sur}, f mono is {mo}", cx.show(f))
        });
        zero.record(m.at(src.bottom()) == tgt.bottom(), || {
            format!(
                "P″({})(0) = {}",
                cx.show(f),
                cx.show(tgt.get(m.at(src.bottom())))
            )
        });
        match cx.t.calculus().double_annihilator(f) {
            Ok(fpp) => one.record(*tgt.get(m.at(src.top())) == fpp, || {
                format!(
                    "P″({})(1) = {} but f″ = {}",
                    cx.show(f),
                    cx.show(tgt.get(m.at(src.top()))),
                    cx.show(&fpp)
                )
            }),
            Err(err) => one.fail(format!("{}: {err}", cx.show(f))),
        }
        match cx.t.calculus().annihilator(&cx.star(f)) {
            Ok(fsp) => cosupport.record(m.apply(&fsp) == Some(tgt.get(tgt.bottom())), || {
                format!(
                    "P″({})((f*)′) ≠ 0 with (f*)′ = {}",
                    cx.show(f),
                    cx.show(&fsp)
                )
            }),
            Err(err) => cosupport.fail(format!("{}: {err}", cx.show(f))),
        }
    }
    vec![injective, surjective, zero, one, cosupport]
}

/// Meets, order, a bound, and a saturation rule; the last two differ by
/// functor:
///
/// | functor | bound             | saturation                 |
/// |---------|-------------------|----------------------------|
/// | `P`     | `P(f)(i) ≤ ff*`   | `i ≥ f*f ⇒ P(f)(i) = ff*`  |
/// | `P′`    | `P′(f)(j) ≥ f′`   | `j ≥ ff* ⇒ P′(f)(j) = 1`   |
/// | `P″`    | `P″(f)(j) ≤ f″`   | `j ≤ (f*)′ ⇒ P″(f)(j) = 0` |
fn order<C: FiniteCategory>(
    cx: &mut Ctx<'_, '_, C>,
    subjects: &[C::Morphism],
    kind: Functor,
) -> Vec<ClauseCheck> {
    let (thm, ids, anchors) = match kind {
        Functor::P => (
            "2.3",
            ["meets", "monotone", "bounded", "saturates"],
            ["(i)", "(ii)", "(iii)", "(iv)"],
        ),
        Functor::PPrime => (
            "3.4",
            ["meets", "monotone", "bounded", "saturates"],
            ["(i)", "(ii)", "(iii)", "(iv)"],
        ),
        Functor::PDoublePrime => (
            "4.2",
            ["meets", "monotone", "bounded", "vanishes"],
            ["(v)", "(vi)", "(vii)", "(viii)"],
        ),
    };
    let prefix = kind.clause_prefix();
    let mut c: Vec<ClauseCheck> = ids
        .iter()
        .zip(anchors)
        .map(|(id, a)| ClauseCheck::new(format!("{prefix}.{id}"), format!("{thm}{a}")))
        .collect();

    for f in subjects {
        let Some(m) = cx.map(kind, f) else { continue };
        let (src, tgt) = (m.source(), m.target());
        let n = src.len();
        for i in 0..n {
            for j in 0..n {
                let lhs = m.at(src.meet(i, j));
                let rhs = tgt.meet(m.at(i), m.at(j));
                c[0].record(lhs == rhs, || {
                    format!(
                        "{kind}({}) does not preserve the meet of {} and {}",
                        cx.show(f),
                        cx.show(src.get(i)),
                        cx.show(src.get(j))
                    )
                });
                if src.leq(i, j) {
                    c[1].record(tgt.leq(m.at(i), m.at(j)), || {
                        format!(
                            "{kind}({}): {} ≤ {} but images are not ordered",
                            cx.show(f),
                            cx.show(src.get(i)),
                            cx.show(src.get(j))
                        )
                    });
                }
            }
        }

        // (reference projection in the target, reference projection in the source)
        let refs = match kind {
            Functor::P => {
                let fsf = cx.after(&cx.star(f), f);
                (Ok(cx.range(f)), Ok(fsf))
            }
            Functor::PPrime => (cx.t.calculus().annihilator(f), Ok(cx.range(f))),
            Functor::PDoublePrime => (
                cx.t.calculus().double_annihilator(f),
                cx.t.calculus().annihilator(&cx.star(f)),
            ),
        };
        let (bound, trigger) = match refs {
            (Ok(b), Ok(t)) => (tgt.index_of(&b), src.index_of(&t)),
            (Err(e), _) | (_, Err(e)) => {
                c[2].fail(format!("{}: {e}", cx.show(f)));
                continue;
            }
        };
        let (Some(bi), Some(ti)) = (bound, trigger) else {
            c[2].fail(format!(
                "{}: reference projection lies outside the lattice",
                cx.show(f)
            ));
            continue;
        };
        for i in 0..n {
            let v = m.at(i);
            let (bounded, triggered, saturated) = match kind {
                Functor::P => (tgt.leq(v, bi), src.leq(ti, i), v == bi),
                Functor::PPrime => (tgt.leq(bi, v), src.leq(ti, i), v == tgt.top()),
                Functor::PDoublePrime => (tgt.leq(v, bi), src.leq(i, ti), v == tgt.bottom()),
            };
            c[2].record(bounded, || {
                format!(
                    "{kind}({})({}) = {} violates the bound {}",
                    cx.show(f),
                    cx.show(src.get(i)),
                    cx.show(tgt.get(v)),
                    cx.show(tgt.get(bi))
                )
            });
            if triggered {
                c[3].record(saturated, || {
                    format!(
                        "{kind}({})({}) = {}",
                        cx.show(f),
                        cx.show(src.get(i)),
                        cx.show(tgt.get(v))
                    )
                });
            }
        }
    }
    c
}

fn pullback<C: FiniteCategory>(
    cx: &mut Ctx<'_, '_, C>,
    subjects: &[C::Morphism],
    squares: &[NamedSquare<C::Morphism>],
) -> Vec<ClauseCheck> {
    let cat = cx.t.cat();
    let mut pulls = ClauseCheck::new("inverse-image.pullback", "3.1");
    let mut characterization = ClauseCheck::new("inverse-image.characterization", "3.2(ii)");
    let mut declared = ClauseCheck::new("pullback.declared", "3.1");

    for f in subjects {
        let Some(m) = cx.map(Functor::PPrime, f) else {
            continue;
        };
        let ma = cx.t.monos_into(&cat.dom(f));
        let mb = cx.t.monos_into(&cat.cod(f));
        let ranges_a: Vec<_> = ma.iter().map(|u| cx.range(u)).collect();
        let fus: Vec<_> = ma.iter().map(|u| cx.after(f, u)).collect();
        for v in mb.iter() {
            let vs = cx.star(v);
            let Some(e) = m.apply(&cx.range(v)) else {
                cx.defined
                    .fail(format!("v v* for v = {} is not a projection", cx.show(v)));
                continue;
            };
            match ranges_a.iter().position(|r| r == e) {
                Some(pi) => {
                    let p = &ma[pi];
                    let top = cx.after(&vs, &fus[pi]);
                    match CommutingSquare::new(cat, top, p.clone(), v.clone(), f.clone()) {
                        Ok(sq) => match pullback_counterexample(cat, &sq) {
                            None => pulls.record(true, String::new),
                            Some(w) => pulls.fail(format!(
                                "f = {}, v = {}, p = {}: {w}",
                                cx.show(f),
                                cx.show(v),
                                cx.show(p)
                            )),
                        },
                        Err(err) => {
                            pulls.fail(format!("f = {}, v = {}: {err}", cx.show(f), cx.show(v)))
                        }
                    }
                }
                None => pulls.fail(format!(
                    "f = {}, v = {}: no mono p with pp* = {}",
                    cx.show(f),
                    cx.show(v),
                    cx.show(e)
                )),
            }
            for (ui, u) in ma.iter().enumerate() {
                // a mediating t with v t = f u is necessarily v* f u
                let t = cx.after(&vs, &fus[ui]);
                let mitchell = cx.after(v, &t) == fus[ui]
                    && pullback_counterexample(
                        cat,
                        &CommutingSquare {
                            top: t,
                            left: u.clone(),
                            right: v.clone(),
                            bottom: f.clone(),
                        },
                    )
                    .is_none();
                let rhs = ranges_a[ui] == *e;
                characterization.record(mitchell == rhs, || {
                    format!(
                        "f = {}, u = {}, v = {}: u is the inverse image of v is {mitchell} but P′(f)(vv*) = uu* is {rhs}",
                        cx.show(f),
                        cx.show(u),
                        cx.show(v)
                    )
                });
            }
        }
    }
    for (name, sq) in squares {
        match pullback_counterexample(cat, sq) {
            None => declared.record(true, String::new),
            Some(w) => declared.fail(format!("square {name} is not a pullback: {w}")),
        }
    }
    vec![pulls, characterization, declared]
}

fn adjunction<C: FiniteCategory>(
    cx: &mut Ctx<'_, '_, C>,
    subjects: &[C::Morphism],
) -> Vec<ClauseCheck> {
    let cat = cx.t.cat();
    let mut mono = ClauseCheck::new("adjoint.mono", "3.5(i)");
    let mut epi = ClauseCheck::new("adjoint.epi", "3.5(ii)");
    let mut triple_p = ClauseCheck::new("adjoint.triple-image", "3.5(iii)");
    let mut triple_pp = ClauseCheck::new("adjoint.triple-inverse-image", "3.5(iii)");
    for f in subjects {
        let fs = cx.star(f);
        let (Some(p), Some(pp), Some(p_s), Some(pp_s)) = (
            cx.map(Functor::P, f),
            cx.map(Functor::PPrime, f),
            cx.map(Functor::P, &fs),
            cx.map(Functor::PPrime, &fs),
        ) else {
            continue;
        };
        let (lhs, m) = (pp.same_function(&p_s), is_mono(cat, f));
        mono.record(lhs == m, || {
            format!("{}: P′(f) = P(f*) is {lhs}, f mono is {m}", cx.show(f))
        });
        let (lhs, e) = (p.same_function(&pp_s), is_epi(cat, f));
        epi.record(lhs == e, || {
            format!("{}: P(f) = P′(f*) is {lhs}, f epi is {e}", cx.show(f))
        });
        for i in 0..p.source().len() {
            let x = p.at(i);
            triple_p.record(p.at(pp.at(x)) == x, || {
                format!(
                    "P(f)P′(f)P(f) ≠ P(f) at {} for f = {}",
                    cx.show(p.source().get(i)),
                    cx.show(f)
                )
            });
        }
        for j in 0..pp.source().len() {
            let y = pp.at(j);
            triple_pp.record(pp.at(p.at(y)) == y, || {
                format!(
                    "P′(f)P(f)P′(f) ≠ P′(f) at {} for f = {}",
                    cx.show(pp.source().get(j)),
                    cx.show(f)
                )
            });
        }
    }
    vec![mono, epi, triple_p, triple_pp]
}

fn connection<C: FiniteCategory>(
    cx: &mut Ctx<'_, '_, C>,
    subjects: &[C::Morphism],
) -> Vec<ClauseCheck> {
    let calc = cx.t.calculus();
    let mut complement = ClauseCheck::new("connection.complement", "4.conn");
    let mut injective = ClauseCheck::new("connection.injective", "4.equiv(i)");
    let mut surjective = ClauseCheck::new("connection.surjective", "4.equiv(i)");
    let mut top_bottom = ClauseCheck::new("connection.top-bottom", "4.equiv(ii)");
    let mut annihilators = ClauseCheck::new("connection.annihilators", "4.equiv(iii)");
    for f in subjects {
        let (Some(pp), Some(ppp)) = (cx.map(Functor::PPrime, f), cx.map(Functor::PDoublePrime, f))
        else {
            continue;
        };
        let (src, tgt) = (pp.source(), pp.target());
        for (ji, j) in src.elements().iter().enumerate() {
            let rhs = calc
                .annihilator(j)
                .ok()
                .and_then(|jp| pp.apply(&jp).cloned())
                .and_then(|x| calc.annihilator(&x).ok());
            let lhs = tgt.get(ppp.at(ji));
            complement.record(rhs.as_ref() == Some(lhs), || {
                format!(
                    "f = {}, j = {}: P″(f)(j) = {} but (P′(f)(j′))′ = {}",
                    cx.show(f),
                    cx.show(j),
                    cx.show(lhs),
                    rhs.as_ref().map_or("undefined".into(), |r| cx.show(r))
                )
            });
        }
        let (a, b) = (pp.is_injective(), ppp.is_injective());
        injective.record(a == b, || {
            format!(
                "{}: P′(f) injective is {a}, P″(f) injective is {b}",
                cx.show(f)
            )
        });
        let (a, b) = (pp.is_surjective(), ppp.is_surjective());
        surjective.record(a == b, || {
            format!(
                "{}: P′(f) surjective is {a}, P″(f) surjective is {b}",
                cx.show(f)
            )
        });
        let (a, b) = (
            pp.at(src.top()) == tgt.top(),
            ppp.at(src.bottom()) == tgt.bottom(),
        );
        top_bottom.record(a == b, || {
            format!("{}: P′(f)(1) = 1 is {a}, P″(f)(0) = 0 is {b}", cx.show(f))
        });
        match (calc.annihilator(f), calc.double_annihilator(f)) {
            (Ok(fp), Ok(fpp)) => {
                let a = *tgt.get(pp.at(src.bottom())) == fp;
                let b = *tgt.get(ppp.at(src.top())) == fpp;
                annihilators.record(a == b, || {
                    format!("{}: P′(f)(0) = f′ is {a}, P″(f)(1) = f″ is {b}", cx.show(f))
                });
            }
            (Err(e), _) | (_, Err(e)) => annihilators.fail(format!("{}: {e}", cx.show(f))),
        }
    }
    vec![complement, injective, surjective, top_bottom, annihilators]
}

fn grouped<C: FiniteCategory>(
    cat: &C,
    name: &str,
    functor: Option<Functor>,
    suites: &[Suite],
    bound: &Bound,
) -> Result<VerificationReport> {
    let mut reports = Vec::new();
    if let Some(k) = functor {
        reports.push(check_functoriality(cat, k, bound)?);
    }
    for &s in suites {
        reports.push(check_suite(cat, s, bound, &[])?);
    }
    Ok(VerificationReport::merge(name, reports))
}

/// Functoriality of `P` and every image-functor suite.
pub fn check_theorems_p<C: FiniteCategory>(cat: &C, bound: &Bound) -> Result<VerificationReport> {
    grouped(
        cat,
        "image-functor",
        Some(Functor::P),
        &[Suite::Image, Suite::ImageBasics, Suite::ImageOrder],
        bound,
    )
}

/// Functoriality of `P′` and every inverse-image suite.
pub fn check_theorems_p_prime<C: FiniteCategory>(
    cat: &C,
    bound: &Bound,
) -> Result<VerificationReport> {
    grouped(
        cat,
        "inverse-image-functor",
        Some(Functor::PPrime),
        &[
            Suite::Pullback,
            Suite::InverseImageBasics,
            Suite::InverseImageOrder,
        ],
        bound,
    )
}

/// Functoriality of `P″` and every strict-preimage suite.
pub fn check_theorems_p_double_prime<C: FiniteCategory>(
    cat: &C,
    bound: &Bound,
) -> Result<VerificationReport> {
    grouped(
        cat,
        "strict-preimage-functor",
        Some(Functor::PDoublePrime),
        &[Suite::StrictPreimageBasics, Suite::StrictPreimageOrder],
        bound,
    )
}

/// The links between the three functors.
pub fn check_connections<C: FiniteCategory>(cat: &C, bound: &Bound) -> Result<VerificationReport> {
    grouped(
        cat,
        "connections",
        None,
        &[Suite::Adjunction, Suite::Connection],
        bound,
    )
}
