//! A hand-written composition table: the two-element group as a one-object
//! category with an adjoined zero object, checked as an inverse category.

use invcat::budget::Bound;
use invcat::category::{check_inverse_category, ObjectId};
use invcat::exactness::check_exactness;
use invcat::table::TableBuilder;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut b = TableBuilder::new("Z2 with zero");
    let z = b.object(ObjectId::new("Z")?)?;
    let x = b.object(ObjectId::new("X")?)?;
    b.zero_object(z);

    let id_z = b.morphism("id_Z", z, z);
    let to = b.morphism("0_XZ", x, z);
    let from = b.morphism("0_ZX", z, x);
    let one = b.morphism("1", x, x);
    let s = b.morphism("s", x, x);
    let zero = b.morphism("0", x, x);
    b.identity(z, id_z);
    b.identity(x, one);

    // composite(f, g, h): f after g is h
    let xx = [one, s, zero];
    let mul = |f, g| match (f, g) {
        _ if f == zero || g == zero => zero,
        _ if f == one => g,
        _ if g == one => f,
        _ => one,
    };
    for f in xx {
        for g in xx {
            b.composite(f, g, mul(f, g));
        }
        b.composite(f, from, from);
        b.composite(to, f, to);
        b.involution(f, f);
    }
    b.composite(id_z, id_z, id_z);
    b.composite(id_z, to, to);
    b.composite(from, id_z, from);
    b.composite(to, from, id_z);
    b.composite(from, to, zero);
    b.involution(id_z, id_z);
    b.involution(to, from);
    b.involution(from, to);

    let cat = b.build()?;
    let axioms = check_inverse_category(&cat, &Bound::exhaustive())?;
    let exact = check_exactness(&cat, &Bound::exhaustive())?;
    print!("{}", axioms.to_text());
    println!("exact: {}", exact.verdicts["exact"]);
    Ok(())
}
