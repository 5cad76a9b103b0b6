//! Partial bijections between finite sets: composition, inverses, and
//! hom-set counts.

use invcat::pbij::{enumerate_pbij, hom_count, FinSet, PBij, Subset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = FinSet::new("A", ["1", "2", "3"])?;
    let b = FinSet::new("B", ["a", "b", "c"])?;

    let f = PBij::new(&a, &b, &[("1", "a"), ("2", "b")])?;
    let g = PBij::new(&b, &a, &[("b", "3"), ("c", "1")])?;

    println!("f      = {f}");
    println!("f*     = {}", f.inverse());
    println!("g . f  = {}", g.compose(&f)?);
    println!("f f* f = {}", f.compose(&f.inverse())?.compose(&f)?);
    println!("dom f  = {}, im f = {}", f.domain(), f.image());

    let s = Subset::new(&a, &["1", "3"])?;
    println!("projection on {s}: {}", s.to_projection());

    for (m, n) in [(2, 2), (3, 3), (3, 4)] {
        let all = enumerate_pbij(&FinSet::canonical(m), &FinSet::canonical(n), usize::MAX)?;
        println!(
            "|Hom({m},{n})| = {} (closed form {})",
            all.len(),
            hom_count(m, n)
        );
    }
    Ok(())
}
