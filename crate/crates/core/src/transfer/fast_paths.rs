//! Agreement of the partial-bijection closed forms with the definitional,
//! brute-force constructions.

use crate::budget::Bound;
use crate::category::FiniteCategory;
use crate::error::Result;
use crate::pbij::{PBij, PbijCategory, Subset};
use crate::projections::Calculus;
use crate::report::{ClauseCheck, ReportBuilder, VerificationReport};

use super::{evaluate, Functor};

/// For every subject `f` and every subset of the relevant object: `f′`,
/// `P(f)`, `P′(f)` and `P″(f)` computed by set operations equal the same
/// quantities computed through annihilator search.
pub fn check_fast_paths(cat: &PbijCategory, bound: &Bound) -> Result<VerificationReport> {
    bound.admit(cat)?;
    let calc = Calculus::new(cat);
    let subjects = bound.subjects(cat);
    let mut report = ReportBuilder::new("fast-paths", &cat.name(), bound.sample);
    report.morphisms(subjects.len());
    let mut ann = ClauseCheck::new("fast-path.annihilator", "def.baer");
    let mut image = ClauseCheck::new("fast-path.image", "2.functor");
    let mut inverse_image = ClauseCheck::new("fast-path.inverse-image", "3.functor");
    let mut preimage = ClauseCheck::new("fast-path.strict-preimage", "4.functor");

    for f in &subjects {
        match calc.annihilator(f) {
            Ok(g) => ann.record(g == f.annihilator(), || {
                format!("{f:?}: search gives {g}, closed form {}", f.annihilator())
            }),
            Err(e) => ann.fail(format!("{f:?}: {e}")),
        }
        for s in Subset::power_set(f.dom()) {
            compare(&calc, &mut image, Functor::P, f, &s, f.image_of(&s));
        }
        for t in Subset::power_set(f.cod()) {
            compare(
                &calc,
                &mut inverse_image,
                Functor::PPrime,
                f,
                &t,
                f.inverse_image(&t),
            );
            compare(
                &calc,
                &mut preimage,
                Functor::PDoublePrime,
                f,
                &t,
                f.preimage(&t),
            );
        }
    }
    report.extend([ann, image, inverse_image, preimage]);
    Ok(report.finish())
}

fn compare(
    calc: &Calculus<'_, PbijCategory>,
    clause: &mut ClauseCheck,
    kind: Functor,
    f: &PBij,
    s: &Subset,
    closed: Subset,
) {
    match evaluate(calc, kind, f, &s.to_projection()) {
        Ok(g) => {
            let got = Subset::from_projection(&g);
            clause.record(got.as_ref() == Some(&closed), || {
                format!("{kind}({f:?})({s}): definition gives {g}, closed form {closed}")
            });
        }
        Err(e) => clause.fail(format!("{kind}({f:?})({s}): {e}")),
    }
}
