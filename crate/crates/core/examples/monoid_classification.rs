//! Which inverse monoids give exact two-object categories.

use invcat::budget::Bound;
use invcat::monoid::{classify_exactness, InverseMonoid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut corpus = InverseMonoid::corpus();
    corpus.push(InverseMonoid::cyclic(4));
    corpus.push(InverseMonoid::chain(4));

    println!(
        "{:<14} {:>5} {:>6} {:>6}",
        "monoid", "size", "group", "exact"
    );
    for s in &corpus {
        let r = classify_exactness(s, &Bound::exhaustive())?;
        println!(
            "{:<14} {:>5} {:>6} {:>6}",
            s.name(),
            s.len(),
            r.verdicts["group"],
            r.verdicts["exact"]
        );
        for note in r.notes.iter().take(2) {
            println!("    {note}");
        }
    }
    Ok(())
}
