//! Finite inverse monoids and the two-object inverse category they induce:
//! a zero object `Z` and an object `X` with `End(X) = S` plus a zero.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::budget::Bound;
use crate::category::{check_inverse_category, ObjectId};
use crate::error::Result;
use crate::exactness::check_exactness;
use crate::pbij::{enumerate_pbij, FinSet, PBij};
use crate::report::{ClauseCheck, ReportBuilder, Status, VerificationReport};
use crate::table::{TableBuilder, TableCategory};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonoidError {
    #[error("monoid has no elements")]
    Empty,
    #[error("duplicate element {0:?}")]
    DuplicateElement(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("Cayley table must be {expected}×{expected}: {found}")]
    TableShape { expected: usize, found: String },
    #[error("not associative: ({x}·{y})·{z} = {left} but {x}·({y}·{z}) = {right}")]
    NonAssociative {
        x: String,
        y: String,
        z: String,
        left: String,
        right: String,
    },
    #[error("{element} is not a two-sided identity: {witness}")]
    NoIdentity { element: String, witness: String },
    #[error("{0} has no generalized inverse")]
    NoInverse(String),
    #[error("{element} has several generalized inverses: {}", candidates.join(", "))]
    NonUniqueInverse {
        element: String,
        candidates: Vec<String>,
    },
    #[error("idempotents {e} and {f} do not commute: {e}·{f} = {ef}, {f}·{e} = {fe}")]
    NonCommutingIdempotents {
        e: String,
        f: String,
        ef: String,
        fe: String,
    },
}

/// A validated finite inverse monoid, elements indexed by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseMonoid {
    name: String,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

/// What to do when `S` already has a zero element.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroPolicy {
    /// Use the existing zero as the zero endomorphism of `X`, unless it is
    /// the identity (the trivial monoid), in which case a fresh one is added.
    #[default]
    #[serde(rename = "reuse")]
    ReuseExisting,
    /// Always adjoin a fresh zero.
    #[serde(rename = "adjoin")]
    AdjoinFresh,
}

impl InverseMonoid {
    /// Checks, in order: shape, associativity, identity, existence of
    /// generalized inverses, commuting idempotents, uniqueness of inverses.
    pub fn validate<S: AsRef<str>>(
        name: impl Into<String>,
        elements: &[S],
        table: &[Vec<S>],
        identity: &str,
    ) -> Result<Self, MonoidError> {
        let elements: Vec<String> = elements.iter().map(|e| e.as_ref().to_owned()).collect();
        let mut index = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.as_str(), i).is_some() {
                return Err(MonoidError::DuplicateElement(e.clone()));
            }
        }
        let n = elements.len();
        if table.len() != n {
            return Err(MonoidError::TableShape {
                expected: n,
                found: format!("{} rows", table.len()),
            });
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| MonoidError::UnknownElement(s.to_owned()))
        };
        let mut rows = Vec::with_capacity(n);
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(MonoidError::TableShape {
                    expected: n,
                    found: format!("row {} has {} entries", elements[r], row.len()),
                });
            }
            rows.push(
                row.iter()
                    .map(|s| lookup(s.as_ref()))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        let identity = lookup(identity)?;
        Self::from_indices(name, elements, rows, identity)
    }

    pub fn from_indices(
        name: impl Into<String>,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
    ) -> Result<Self, MonoidError> {
        let n = elements.len();
        if n == 0 {
            return Err(MonoidError::Empty);
        }
        if table.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
            || identity >= n
        {
            return Err(MonoidError::TableShape {
                expected: n,
                found: "ragged table or out-of-range entry".into(),
            });
        }
        let e = |i: usize| elements[i].clone();
        let mul = |x: usize, y: usize| table[x][y];

        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (left, right) = (mul(mul(x, y), z), mul(x, mul(y, z)));
                    if left != right {
                        return Err(MonoidError::NonAssociative {
                            x: e(x),
                            y: e(y),
                            z: e(z),
                            left: e(left),
                            right: e(right),
                        });
                    }
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| mul(identity, x) != x || mul(x, identity) != x) {
            return Err(MonoidError::NoIdentity {
                element: e(identity),
                witness: format!(
                    "{0}·{1} = {2}, {1}·{0} = {3}",
                    e(identity),
                    e(x),
                    e(mul(identity, x)),
                    e(mul(x, identity))
                ),
            });
        }
        let candidates: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| mul(mul(x, y), x) == x && mul(mul(y, x), y) == y)
                    .collect()
            })
            .collect();
        if let Some(x) = (0..n).find(|&x| candidates[x].is_empty()) {
            return Err(MonoidError::NoInverse(e(x)));
        }
        let idempotents: Vec<usize> = (0..n).filter(|&x| mul(x, x) == x).collect();
        for &p in &idempotents {
            for &q in &idempotents {
                if mul(p, q) != mul(q, p) {
                    return Err(MonoidError::NonCommutingIdempotents {
                        e: e(p),
                        f: e(q),
                        ef: e(mul(p, q)),
                        fe: e(mul(q, p)),
                    });
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| candidates[x].len() > 1) {
            return Err(MonoidError::NonUniqueInverse {
                element: e(x),
                candidates: candidates[x].iter().map(|&y| e(y)).collect(),
            });
        }
        Ok(InverseMonoid {
            name: name.into(),
            inverses: candidates.into_iter().map(|c| c[0]).collect(),
            elements,
            table,
            identity,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.mul(x, x) == x).collect()
    }

    /// An element `z` with `z x = x z = z` for all `x`.
    pub fn zero(&self) -> Option<usize> {
        (0..self.len())
            .find(|&z| (0..self.len()).all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    /// The identity is the only idempotent.
    pub fn is_group(&self) -> bool {
        self.idempotents() == [self.identity]
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).renamed("trivial")
    }

    /// `Z_n` with elements `0..n-1` under addition mod `n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        let elements = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .map(|x| (0..n).map(|y| (x + y) % n).collect())
            .collect();
        Self::from_indices(format!("Z{n}"), elements, table, 0)
            .expect("cyclic groups are inverse monoids")
    }

    /// The chain `1 > e1 > … > e(n-1)` under meet.
    pub fn chain(n: usize) -> Self {
        assert!(n > 0, "chain of length zero");
        let elements = std::iter::once("1".to_owned())
            .chain((1..n).map(|i| format!("e{i}")))
            .collect();
        let table = (0..n).map(|x| (0..n).map(|y| x.max(y)).collect()).collect();
        Self::from_indices(format!("chain{n}"), elements, table, 0)
            .expect("chains are semilattices")
    }

    /// The symmetric inverse monoid `I_n` of all partial bijections of an
    /// `n`-element set.
    pub fn symmetric(n: usize) -> Self {
        let set = FinSet::canonical(n);
        let all = enumerate_pbij(&set, &set, usize::MAX).expect("small symmetric inverse monoid");
        let index: HashMap<&PBij, usize> = all.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let table = all
            .iter()
            .map(|f| all.iter().map(|g| index[&f.compose_unchecked(g)]).collect())
            .collect();
        let identity = index[&PBij::identity(&set)];
        let elements = all.iter().map(|f| f.to_string()).collect();
        Self::from_indices(format!("I{n}"), elements, table, identity)
            .expect("partial bijections form an inverse monoid")
    }

    /// Trivial group, `Z2`, `Z3`, the 2- and 3-element chains, `I1`, `I2`.
    pub fn corpus() -> Vec<Self> {
        vec![
            Self::trivial(),
            Self::cyclic(2),
            Self::cyclic(3),
            Self::chain(2).renamed("semilattice2"),
            Self::chain(3),
            Self::symmetric(1),
            Self::symmetric(2),
        ]
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Objects `Z` (zero) and `X`; `End(X)` is `S` with a zero, `Hom(X, Z)` and
/// `Hom(Z, X)` hold a single zero morphism each.
pub fn two_object_category(s: &InverseMonoid, policy: ZeroPolicy) -> Result<TableCategory> {
    let mut b = TableBuilder::new(format!("two-object[{}]", s.name()));
    let z = b.object(ObjectId::new("Z")?)?;
    let x = b.object(ObjectId::new("X")?)?;
    b.zero_object(z);
    let id_z = b.morphism("id_Z", z, z);
    let zx = b.morphism("0_ZX", z, x);
    let xz = b.morphism("0_XZ", x, z);
    let ends: Vec<_> = s
        .elements()
        .iter()
        .map(|e| b.morphism(e.clone(), x, x))
        .collect();
    let existing = match policy {
        ZeroPolicy::ReuseExisting => s.zero().filter(|&z| z != s.identity()),
        ZeroPolicy::AdjoinFresh => None,
    };
    let zero = match existing {
        Some(z) => ends[z],
        None => {
            let label = ["0", "zero", "0_X"]
                .into_iter()
                .find(|l| s.index_of(l).is_none())
                .unwrap_or("0_XX");
            b.morphism(label, x, x)
        }
    };
    let fresh = existing.is_none();

    b.identity(z, id_z);
    b.identity(x, ends[s.identity()]);
    b.composite(id_z, id_z, id_z);
    b.composite(zx, id_z, zx);
    b.composite(id_z, xz, xz);
    b.composite(xz, zx, id_z);
    b.composite(zx, xz, zero);
    let mut endos = ends.clone();
    if fresh {
        endos.push(zero);
    }
    for &m in &endos {
        b.composite(m, zx, zx);
        b.composite(xz, m, xz);
    }
    for (i, &f) in ends.iter().enumerate() {
        for (j, &g) in ends.iter().enumerate() {
            b.composite(f, g, ends[s.mul(i, j)]);
        }
        b.involution(f, ends[s.inverse(i)]);
    }
    if fresh {
        for &m in &endos {
            b.composite(zero, m, zero);
            b.composite(m, zero, zero);
        }
        b.involution(zero, zero);
    }
    b.involution(id_z, id_z);
    b.involution(zx, xz);
    b.involution(xz, zx);
    b.build()
}

/// Decides exactness of the two-object category of `S` (with a fresh zero
/// adjoined) and compares it with `S` being a group.
///
/// The report passes when the two verdicts agree and the category satisfies
/// the inverse-category axioms. The exactness items that fail are listed in
/// the notes.
pub fn classify_exactness(s: &InverseMonoid, bound: &Bound) -> Result<VerificationReport> {
    let cat = two_object_category(s, ZeroPolicy::AdjoinFresh)?;
    let axioms = check_inverse_category(&cat, bound)?;
    let exactness = check_exactness(&cat, bound)?;
    let exact = exactness.verdicts["exact"];
    let group = s.is_group();

    let mut report = ReportBuilder::new("classify", s.name(), bound.sample);
    report.morphisms(exactness.stats.morphisms_enumerated);
    let mut inverse = ClauseCheck::new("classification.inverse-category", "1.monoid");
    inverse.record(axioms.passed(), || {
        axioms
            .failures()
            .map(|c| format!("{}: {}", c.id, c.counterexample.as_deref().unwrap_or("")))
            .collect::<Vec<_>>()
            .join("; ")
    });
    let mut agreement = ClauseCheck::new("classification.agreement", "1.monoid");
    agreement.record(exact == group, || {
        format!("INCONSISTENT: exactness verdict is {exact} but S is a group is {group}")
    });
    report.extend([inverse, agreement]);
    report.verdict("exact", exact);
    report.verdict("group", group);
    report.verdict(
        "baer-closed-factorizable",
        exactness.verdicts["baer-closed-factorizable"],
    );
    if s.zero().is_some_and(|z| z != s.identity()) {
        let reuse = check_exactness(&two_object_category(s, ZeroPolicy::ReuseExisting)?, bound)?;
        report.verdict("exact-with-existing-zero", reuse.verdicts["exact"]);
    }
    for c in exactness
        .clauses
        .iter()
        .filter(|c| c.status == Status::Fail)
    {
        report.note(format!(
            "failing: {} ({})",
            c.id,
            c.counterexample.as_deref().unwrap_or("")
        ));
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::FiniteCategory;

    #[test]
    fn corpus_validates_and_classifies_groups() {
        let groups: Vec<(String, bool)> = InverseMonoid::corpus()
            .iter()
            .map(|s| (s.name().to_owned(), s.is_group()))
            .collect();
        let expected = [
            ("trivial", true),
            ("Z2", true),
            ("Z3", true),
            ("semilattice2", false),
            ("chain3", false),
            ("I1", false),
            ("I2", false),
        ];
        assert_eq!(groups, expected.map(|(n, g)| (n.to_owned(), g)));
        assert_eq!(InverseMonoid::symmetric(2).idempotents().len(), 4);
        assert_eq!(InverseMonoid::symmetric(3).len(), 34);
    }

    #[test]
    fn axiom_violations_are_reported_in_order() {
        let r = InverseMonoid::validate(
            "bad",
            &["1", "a", "b"],
            &[
                vec!["1", "a", "b"],
                vec!["a", "b", "1"],
                vec!["b", "b", "b"],
            ],
            "1",
        );
        assert!(
            matches!(r, Err(MonoidError::NonAssociative { .. })),
            "{r:?}"
        );

        let r =
            InverseMonoid::validate("noid", &["a", "b"], &[vec!["a", "a"], vec!["b", "b"]], "a");
        assert!(matches!(r, Err(MonoidError::NoIdentity { .. })), "{r:?}");

        // left-zero band {a, b} with identity adjoined
        let band = [
            vec!["1", "a", "b"],
            vec!["a", "a", "a"],
            vec!["b", "b", "b"],
        ];
        let r = InverseMonoid::validate("band", &["1", "a", "b"], &band, "1");
        assert!(
            matches!(r, Err(MonoidError::NonCommutingIdempotents { .. })),
            "{r:?}"
        );

        let r = InverseMonoid::validate("ragged", &["1", "a"], &[vec!["1", "a"], vec!["a"]], "1");
        assert!(matches!(r, Err(MonoidError::TableShape { .. })));
        let r = InverseMonoid::validate("unknown", &["1"], &[vec!["q"]], "1");
        assert_eq!(r, Err(MonoidError::UnknownElement("q".into())));
    }

    #[test]
    fn two_object_sizes() {
        let end_x = |s: &InverseMonoid, p| {
            let c = two_object_category(s, p).unwrap();
            let x = c.object("X").unwrap();
            c.hom(&x, &x).len()
        };
        assert_eq!(
            end_x(&InverseMonoid::cyclic(2), ZeroPolicy::ReuseExisting),
            3
        );
        assert_eq!(
            end_x(&InverseMonoid::trivial(), ZeroPolicy::ReuseExisting),
            2
        );
        assert_eq!(
            end_x(&InverseMonoid::symmetric(2), ZeroPolicy::ReuseExisting),
            7
        );
        assert_eq!(
            end_x(&InverseMonoid::symmetric(2), ZeroPolicy::AdjoinFresh),
            8
        );
    }

    #[test]
    fn two_object_categories_are_inverse() {
        for s in InverseMonoid::corpus() {
            for p in [ZeroPolicy::ReuseExisting, ZeroPolicy::AdjoinFresh] {
                let c = two_object_category(&s, p).unwrap();
                let r = check_inverse_category(&c, &Bound::exhaustive()).unwrap();
                assert!(r.passed(), "{}", r.to_text());
                assert!(c.zero_object().is_some());
            }
        }
    }

    #[test]
    fn small_classifications() {
        let z2 = classify_exactness(&InverseMonoid::cyclic(2), &Bound::exhaustive()).unwrap();
        assert!(z2.passed() && z2.verdicts["exact"] && z2.verdicts["group"]);
        let s2 = classify_exactness(&InverseMonoid::chain(2), &Bound::exhaustive()).unwrap();
        assert!(s2.passed() && !s2.verdicts["exact"] && !s2.verdicts["group"]);
        assert!(!s2.notes.is_empty());
    }
}
