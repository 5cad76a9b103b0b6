//! Inverse images along a mono as pullbacks, and a perturbed square that
//! fails the universal property.

use invcat::exactness::{pullback_counterexample, CommutingSquare};
use invcat::pbij::{FinSet, PBij, PbijCategory};
use invcat::transfer::inverse_image_of;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = FinSet::new("A", ["1", "2", "3"])?;
    let b = FinSet::new("B", ["a", "b", "c"])?;
    let y = FinSet::new("Y", ["a", "c"])?;
    let p = FinSet::new("P", ["1", "3"])?;
    let q = FinSet::new("Q", ["1"])?;
    let cat = PbijCategory::new(
        "squares",
        [a.clone(), b.clone(), y.clone(), p.clone(), q.clone()],
    )?;

    let f = PBij::new(&a, &b, &[("1", "a"), ("2", "b")])?;
    let v = PBij::new(&y, &b, &[("a", "a"), ("c", "c")])?;
    println!(
        "inverse image of v along f: {}",
        inverse_image_of(&cat, &f, &v)?
    );

    let left = PBij::new(&p, &a, &[("1", "1"), ("3", "3")])?;
    let top = PBij::new(&p, &y, &[("1", "a")])?;
    let square = CommutingSquare::new(&cat, top, left, v.clone(), f.clone())?;
    println!(
        "P square: {}",
        pullback_counterexample(&cat, &square).unwrap_or_else(|| "pullback".into())
    );

    let shrunk = PBij::new(&q, &a, &[("1", "1")])?;
    let top_q = PBij::new(&q, &y, &[("1", "a")])?;
    let square = CommutingSquare::new(&cat, top_q, shrunk, v, f)?;
    println!(
        "Q square: {}",
        pullback_counterexample(&cat, &square).unwrap_or_else(|| "pullback".into())
    );
    Ok(())
}
