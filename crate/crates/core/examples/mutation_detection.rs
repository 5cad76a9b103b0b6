//! Seeded defects in a compiled category and the counterexamples they
//! produce.

use invcat::budget::Bound;
use invcat::category::check_inverse_category;
use invcat::pbij::{PBij, PbijCategory};
use invcat::table::compile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = PbijCategory::canonical(&[0, 1, 2]);
    let two = cat.object("2").expect("object 2").clone();
    let compiled = compile(&cat)?;
    let e1 = compiled
        .mor(&PBij::new(&two, &two, &[("1", "1")])?)
        .expect("e1");
    let s = compiled
        .mor(&PBij::new(&two, &two, &[("1", "2")])?)
        .expect("s");
    let id = compiled.mor(&PBij::identity(&two)).expect("id");
    let zero = compiled.mor(&PBij::zero(&two, &two)).expect("zero");

    let mut swapped = compiled.table.clone();
    swapped.swap_involution(e1, s)?;
    let mut corrupted = compiled.table.clone();
    corrupted.override_composite(s, id, zero)?;

    for (what, table) in [
        ("intact", &compiled.table),
        ("swapped involution", &swapped),
        ("corrupted composite", &corrupted),
    ] {
        let r = check_inverse_category(table, &Bound::exhaustive())?;
        println!("{what}: {}", if r.passed() { "pass" } else { "fail" });
        for c in r.failures() {
            println!("  {} {}", c.id, c.counterexample.as_deref().unwrap_or(""));
        }
    }
    Ok(())
}
