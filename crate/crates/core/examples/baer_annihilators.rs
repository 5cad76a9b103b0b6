//! Annihilators and closed projections, computed both from the universal
//! property and from the set-level formula.

use invcat::category::FiniteCategory;
use invcat::pbij::{FinSet, PBij, PbijCategory, Subset};
use invcat::projections::Calculus;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = FinSet::new("A", ["1", "2", "3"])?;
    let b = FinSet::new("B", ["a", "b"])?;
    let cat = PbijCategory::new("annihilators", [a.clone(), b.clone()])?;
    let calc = Calculus::new(&cat);

    let f = PBij::new(&a, &b, &[("1", "a"), ("3", "b")])?;
    let searched = calc.annihilator(&f)?;
    println!("f                = {f}");
    println!("f' (search)      = {searched}");
    println!("f' (closed form) = {}", f.annihilator());
    println!("f''              = {}", calc.double_annihilator(&f)?);

    let lattice = calc.lattice(&a)?;
    println!("P(A) has {} projections:", lattice.len());
    for e in lattice.elements() {
        let set = Subset::from_projection(e).expect("projection");
        println!("  {set:<8} closed: {}", calc.is_closed(e)?);
    }
    println!("zero A -> B: {}", cat.zero(&a, &b).expect("zero object"));
    Ok(())
}
