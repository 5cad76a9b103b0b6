//! The three projection-transfer functors on one morphism, as whole maps
//! between projection lattices.

use invcat::pbij::{FinSet, PBij, PbijCategory, Subset};
use invcat::transfer::{Functor, Transfer};

fn show(set: &FinSet, e: &PBij) -> String {
    Subset::from_projection(e)
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("{e} on {}", set.name()))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = FinSet::new("A", ["1", "2", "3"])?;
    let b = FinSet::new("B", ["a", "b", "c"])?;
    let cat = PbijCategory::new("transfer", [a.clone(), b.clone()])?;
    let f = PBij::new(&a, &b, &[("1", "a"), ("2", "b")])?;
    let engine = Transfer::new(&cat);

    for kind in Functor::ALL {
        let map = engine.map(kind, &f)?;
        let (from, to) = if kind.is_covariant() {
            (&a, &b)
        } else {
            (&b, &a)
        };
        println!(
            "{kind}(f): injective {}, surjective {}",
            map.is_injective(),
            map.is_surjective()
        );
        for (i, x) in map.source().elements().iter().enumerate() {
            println!(
                "  {:<9} -> {}",
                show(from, x),
                show(to, map.target().get(map.at(i)))
            );
        }
    }

    let t = Subset::new(&b, &["a", "c"])?;
    println!(
        "closed forms at {t}: f^-1 T u (A - dom f) = {}, f^-1 T = {}",
        f.inverse_image(&t),
        f.preimage(&t)
    );
    Ok(())
}
