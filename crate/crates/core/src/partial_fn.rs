//! Partial functions on a finite set: a regular category that is *not*
//! inverse, kept as a negative control for the checkers.
//!
//! The involution picks, for every endomorphism, the first quasi-inverse in
//! enumeration order, so the instance satisfies `f f* f = f` but not the
//! uniqueness of inverses.

use crate::category::ObjectId;
use crate::error::Result;
use crate::table::{Mor, TableBuilder, TableCategory};

type Func = Vec<Option<usize>>;

fn label(f: &Func) -> String {
    let parts: Vec<String> = f
        .iter()
        .enumerate()
        .map(|(x, y)| match y {
            Some(y) => format!("{}→{}", x + 1, y + 1),
            None => format!("{}→-", x + 1),
        })
        .collect();
    format!("({})", parts.join(","))
}

fn all_functions(n: usize) -> Vec<Func> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Func| {
                std::iter::once(None).chain((0..n).map(Some)).map(move |y| {
                    let mut p = prefix.clone();
                    p.push(y);
                    p
                })
            })
            .collect();
    }
    out
}

fn after(f: &Func, g: &Func) -> Func {
    g.iter().map(|y| y.and_then(|y| f[y])).collect()
}

/// Objects `0` and `A = {1..n}`; `End(A)` holds all `(n+1)^n` partial
/// functions.
pub fn partial_function_category(n: usize) -> Result<TableCategory> {
    let funcs = all_functions(n);
    let index = |f: &Func| {
        funcs
            .iter()
            .position(|g| g == f)
            .expect("closed under composition")
    };

    let mut b = TableBuilder::new(format!("partial-functions[{n}]"));
    let zero = b.object(ObjectId::new("0")?)?;
    let a = b.object(ObjectId::new("A")?)?;
    b.zero_object(zero);
    let id0 = b.morphism("id_0", zero, zero);
    let za = b.morphism("0→A", zero, a);
    let az = b.morphism("A→0", a, zero);
    let ends: Vec<Mor> = funcs.iter().map(|f| b.morphism(label(f), a, a)).collect();

    b.identity(zero, id0);
    let id_a: Func = (0..n).map(Some).collect();
    b.identity(a, ends[index(&id_a)]);
    let empty = ends[index(&vec![None; n])];

    b.composite(id0, id0, id0);
    b.composite(za, id0, za);
    b.composite(id0, az, az);
    b.composite(az, za, id0);
    b.composite(za, az, empty);
    for (i, f) in funcs.iter().enumerate() {
        b.composite(ends[i], za, za);
        b.composite(az, ends[i], az);
        for (j, g) in funcs.iter().enumerate() {
            b.composite(ends[i], ends[j], ends[index(&after(f, g))]);
        }
    }

    b.involution(id0, id0);
    b.involution(za, az);
    b.involution(az, za);
    for (i, f) in funcs.iter().enumerate() {
        let g = funcs
            .iter()
            .position(|g| after(&after(f, g), f) == *f && after(&after(g, f), g) == *g)
            .expect("partial transformation monoids are regular");
        b.involution(ends[i], ends[g]);
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::FiniteCategory;

    #[test]
    fn sizes() {
        let c = partial_function_category(2).unwrap();
        let a = c.object("A").unwrap();
        assert_eq!(c.hom(&a, &a).len(), 9);
        assert_eq!(c.len(), 12);
    }
}
