//! The JSON category-spec and monoid file formats, and how a spec becomes a
//! checkable instance.
//!
//! A spec describes either a full subcategory of partial bijections (declared
//! objects, `all-pbij` generators, named morphisms, squares) or the
//! two-object category of an inverse monoid. Mutations corrupt the compiled
//! tables afterwards, for testing that the checkers notice.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::budget::{Bound, Sample};
use crate::exactness::CommutingSquare;
use crate::monoid::{two_object_category, InverseMonoid, ZeroPolicy};
use crate::pbij::{FinSet, PBij, PbijCategory};
use crate::table::{compile, Mor, TableCategory};
use crate::transfer::suites::NamedSquare;

use super::HarnessError;

pub const SPEC_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategorySpec {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<ObjectSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub morphisms: Vec<MorphismSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Generator>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub squares: Vec<SquareSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mutations: Vec<Mutation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSpec {
    pub name: String,
    pub elements: Vec<String>,
}

/// A partial bijection given by its sorted pair list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub name: String,
    pub dom: String,
    pub cod: String,
    pub pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Generator {
    /// Adds the canonical sets `{1..n}`, named `n`, for each size.
    AllPbij { sizes: Vec<usize> },
    /// Replaces the whole instance by the two-object category of a monoid.
    InverseMonoid {
        monoid: MonoidSpec,
        #[serde(default)]
        zero: ZeroPolicy,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidSpec {
    pub name: String,
    pub elements: Vec<String>,
    pub identity: String,
    /// `table[i][j]` is `elements[i] · elements[j]`.
    pub table: Vec<Vec<String>>,
}

/// A standalone Cayley-table file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidFile {
    pub format_version: u32,
    pub name: String,
    pub elements: Vec<String>,
    pub identity: String,
    pub table: Vec<Vec<String>>,
}

/// A square asserted to be a pullback. Edges are morphism names:
/// `left: P → A`, `top: P → Y`, `right: Y → B`, `bottom: A → B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareSpec {
    pub name: String,
    pub top: String,
    pub left: String,
    pub right: String,
    pub bottom: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Mutation {
    /// Exchange the involution images of two morphisms of the same type.
    SwapInvolution { first: String, second: String },
    /// Make `left ∘ right` equal `result`.
    OverrideComposite {
        left: String,
        right: String,
        result: String,
    },
}

impl CategorySpec {
    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        let spec: CategorySpec =
            serde_json::from_str(text).map_err(|e| HarnessError::Parse(e.to_string()))?;
        if spec.format_version != SPEC_FORMAT_VERSION {
            return Err(HarnessError::Invalid(format!(
                "unsupported spec format_version {} (this build reads {SPEC_FORMAT_VERSION})",
                spec.format_version
            )));
        }
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        Self::from_json(&read(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serialization is infallible")
    }
}

impl MonoidSpec {
    pub fn build(&self) -> Result<InverseMonoid, HarnessError> {
        Ok(InverseMonoid::validate(
            &self.name,
            &self.elements,
            &self.table,
            &self.identity,
        )?)
    }
}

impl MonoidFile {
    pub fn load(path: &Path) -> Result<InverseMonoid, HarnessError> {
        let file: MonoidFile =
            serde_json::from_str(&read(path)?).map_err(|e| HarnessError::Parse(e.to_string()))?;
        if file.format_version != SPEC_FORMAT_VERSION {
            return Err(HarnessError::Invalid(format!(
                "unsupported monoid format_version {}",
                file.format_version
            )));
        }
        MonoidSpec {
            name: file.name,
            elements: file.elements,
            identity: file.identity,
            table: file.table,
        }
        .build()
    }

    pub fn from_monoid(s: &InverseMonoid) -> Self {
        let e = s.elements();
        MonoidFile {
            format_version: SPEC_FORMAT_VERSION,
            name: s.name().to_owned(),
            elements: e.to_vec(),
            identity: e[s.identity()].clone(),
            table: s
                .table()
                .iter()
                .map(|r| r.iter().map(|&x| e[x].clone()).collect())
                .collect(),
        }
    }
}

fn read(path: &Path) -> Result<String, HarnessError> {
    std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))
}

/// Size limits turning a spec into an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest object size checked exhaustively.
    pub max_size: usize,
    pub max_hom: usize,
    pub sample: Sample,
}

/// A spec ready to check. Built once per run, so the variant size gap is moot.
#[allow(clippy::large_enum_variant)]
pub enum Instance {
    /// Every suite quantifies over all morphisms of a compiled table.
    Exhaustive {
        table: TableCategory,
        squares: Vec<NamedSquare<Mor>>,
        pbij: Option<PbijModel>,
        bound: Bound,
    },
    /// Objects exceed `max_size`: suites run on a seeded sample of
    /// morphisms of the partial-bijection category itself.
    Sampled {
        pbij: PbijModel,
        squares: Vec<NamedSquare<PBij>>,
        bound: Bound,
    },
}

pub struct PbijModel {
    pub category: PbijCategory,
    pub named: BTreeMap<String, PBij>,
}

impl Instance {
    pub fn bound(&self) -> &Bound {
        match self {
            Instance::Exhaustive { bound, .. } | Instance::Sampled { bound, .. } => bound,
        }
    }

    pub fn pbij(&self) -> Option<&PbijModel> {
        match self {
            Instance::Exhaustive { pbij, .. } => pbij.as_ref(),
            Instance::Sampled { pbij, .. } => Some(pbij),
        }
    }
}

pub fn build_instance(spec: &CategorySpec, budget: &Budget) -> Result<Instance, HarnessError> {
    let exhaustive = Bound::exhaustive().with_max_hom(budget.max_hom);
    let monoids: Vec<_> = spec
        .generators
        .iter()
        .filter_map(|g| match g {
            Generator::InverseMonoid { monoid, zero } => Some((monoid, *zero)),
            Generator::AllPbij { .. } => None,
        })
        .collect();
    if let Some(&(monoid, zero)) = monoids.first() {
        if spec.generators.len() > 1
            || !spec.objects.is_empty()
            || !spec.morphisms.is_empty()
            || !spec.squares.is_empty()
        {
            return Err(HarnessError::Invalid(
                "an inverse-monoid generator must be the only content besides mutations".into(),
            ));
        }
        let mut table = two_object_category(&monoid.build()?, zero)?;
        if let Some(n) = &spec.name {
            table.rename(n.clone());
        }
        apply_mutations(&mut table, &spec.mutations, &BTreeMap::new())?;
        exhaustive.admit(&table)?;
        return Ok(Instance::Exhaustive {
            table,
            squares: Vec::new(),
            pbij: None,
            bound: exhaustive,
        });
    }

    let mut objects = Vec::new();
    for o in &spec.objects {
        objects.push(FinSet::new(o.name.clone(), o.elements.iter().cloned())?);
    }
    for g in &spec.generators {
        if let Generator::AllPbij { sizes } = g {
            objects.extend(sizes.iter().map(|&n| FinSet::canonical(n)));
        }
    }
    let name = spec.name.clone().unwrap_or_else(|| "spec".into());
    let category = PbijCategory::new(name, objects)?;
    let mut named = BTreeMap::new();
    for m in &spec.morphisms {
        let find = |n: &str| {
            category.object(n).cloned().ok_or_else(|| {
                HarnessError::Invalid(format!("morphism {}: unknown object {n:?}", m.name))
            })
        };
        let f = PBij::new(&find(&m.dom)?, &find(&m.cod)?, &m.pairs)?;
        if named.insert(m.name.clone(), f).is_some() {
            return Err(HarnessError::Invalid(format!(
                "morphism name {:?} declared twice",
                m.name
            )));
        }
    }
    let squares = spec
        .squares
        .iter()
        .map(|s| {
            let get = |n: &str| {
                named.get(n).cloned().ok_or_else(|| {
                    HarnessError::Invalid(format!("square {}: unknown morphism {n:?}", s.name))
                })
            };
            let sq = CommutingSquare::new(
                &category,
                get(&s.top)?,
                get(&s.left)?,
                get(&s.right)?,
                get(&s.bottom)?,
            )?;
            Ok((s.name.clone(), sq))
        })
        .collect::<Result<Vec<_>, HarnessError>>()?;

    if category.max_object_size() > budget.max_size {
        if !spec.mutations.is_empty() {
            return Err(HarnessError::Invalid(
                "mutations need an exhaustively compiled instance; raise --max-size".into(),
            ));
        }
        let bound =
            Bound::sampled(budget.sample.seed, budget.sample.count).with_max_hom(budget.max_hom);
        bound.admit(&category)?;
        return Ok(Instance::Sampled {
            pbij: PbijModel { category, named },
            squares,
            bound,
        });
    }

    exhaustive.admit(&category)?;
    let compiled = compile(&category)?;
    let as_mor = |f: &PBij| {
        compiled
            .mor(f)
            .expect("named morphisms live in the compiled category")
    };
    let squares = squares
        .into_iter()
        .map(|(n, sq)| {
            (
                n,
                CommutingSquare {
                    top: as_mor(&sq.top),
                    left: as_mor(&sq.left),
                    right: as_mor(&sq.right),
                    bottom: as_mor(&sq.bottom),
                },
            )
        })
        .collect();
    let handles: BTreeMap<String, Mor> =
        named.iter().map(|(n, f)| (n.clone(), as_mor(f))).collect();
    let mut table = compiled.table;
    apply_mutations(&mut table, &spec.mutations, &handles)?;
    Ok(Instance::Exhaustive {
        table,
        squares,
        pbij: Some(PbijModel { category, named }),
        bound: exhaustive,
    })
}

fn apply_mutations(
    table: &mut TableCategory,
    mutations: &[Mutation],
    named: &BTreeMap<String, Mor>,
) -> Result<(), HarnessError> {
    let resolve = |t: &TableCategory, n: &str| {
        named
            .get(n)
            .copied()
            .or_else(|| t.morphism(n))
            .ok_or_else(|| {
                HarnessError::Invalid(format!("mutation refers to unknown morphism {n:?}"))
            })
    };
    for m in mutations {
        match m {
            Mutation::SwapInvolution { first, second } => {
                let (f, g) = (resolve(table, first)?, resolve(table, second)?);
                table.swap_involution(f, g)?;
            }
            Mutation::OverrideComposite {
                left,
                right,
                result,
            } => {
                let (f, g, h) = (
                    resolve(table, left)?,
                    resolve(table, right)?,
                    resolve(table, result)?,
                );
                table.override_composite(f, g, h)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::FiniteCategory;

    fn budget() -> Budget {
        Budget {
            max_size: 4,
            max_hom: 100_000,
            sample: Sample { seed: 0, count: 16 },
        }
    }

    #[test]
    fn minimal_spec_parses() {
        let s = CategorySpec::from_json(
            r#"{"format_version": 1, "generators": [{"kind": "all-pbij", "sizes": [1, 2]}]}"#,
        )
        .unwrap();
        let Instance::Exhaustive { table, .. } = build_instance(&s, &budget()).unwrap() else {
            panic!()
        };
        assert_eq!(table.objects().len(), 3);
    }

    #[test]
    fn version_and_references_are_checked() {
        assert!(matches!(
            CategorySpec::from_json(r#"{"format_version": 9}"#),
            Err(HarnessError::Invalid(_))
        ));
        assert!(matches!(
            CategorySpec::from_json(r#"{"format_version": 1, "extra": 0}"#),
            Err(HarnessError::Parse(_))
        ));
        let s = CategorySpec::from_json(
            r#"{"format_version": 1, "objects": [{"name": "A", "elements": ["1"]}],
                "morphisms": [{"name": "f", "dom": "A", "cod": "B", "pairs": []}]}"#,
        )
        .unwrap();
        assert!(matches!(
            build_instance(&s, &budget()),
            Err(HarnessError::Invalid(_))
        ));
    }

    #[test]
    fn large_objects_are_sampled() {
        let s = CategorySpec::from_json(
            r#"{"format_version": 1, "generators": [{"kind": "all-pbij", "sizes": [5]}]}"#,
        )
        .unwrap();
        assert!(matches!(
            build_instance(&s, &budget()).unwrap(),
            Instance::Sampled { .. }
        ));
    }
}
