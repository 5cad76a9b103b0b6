use invcat::harness::spec::{
    CategorySpec, Generator, MonoidFile, MonoidSpec, MorphismSpec, Mutation, ObjectSpec,
    SquareSpec, SPEC_FORMAT_VERSION,
};
use invcat::monoid::{InverseMonoid, ZeroPolicy};
use proptest::collection::vec;
use proptest::prelude::*;

fn label() -> impl Strategy<Value = String> {
    "[a-z0-9][a-z0-9_']{0,4}"
}

fn object() -> impl Strategy<Value = ObjectSpec> {
    (label(), vec(label(), 0..4)).prop_map(|(name, elements)| ObjectSpec { name, elements })
}

fn morphism() -> impl Strategy<Value = MorphismSpec> {
    (label(), label(), label(), vec((label(), label()), 0..3)).prop_map(
        |(name, dom, cod, pairs)| MorphismSpec {
            name,
            dom,
            cod,
            pairs,
        },
    )
}

fn generator() -> impl Strategy<Value = Generator> {
    let corpus = InverseMonoid::corpus();
    prop_oneof![
        vec(0usize..5, 0..4).prop_map(|sizes| Generator::AllPbij { sizes }),
        (0..corpus.len(), any::<bool>()).prop_map(move |(i, adjoin)| {
            let file = MonoidFile::from_monoid(&corpus[i]);
            Generator::InverseMonoid {
                monoid: MonoidSpec {
                    name: file.name,
                    elements: file.elements,
                    identity: file.identity,
                    table: file.table,
                },
                zero: if adjoin {
                    ZeroPolicy::AdjoinFresh
                } else {
                    ZeroPolicy::ReuseExisting
                },
            }
        }),
    ]
}

fn mutation() -> impl Strategy<Value = Mutation> {
    prop_oneof![
        (label(), label()).prop_map(|(first, second)| Mutation::SwapInvolution { first, second }),
        (label(), label(), label()).prop_map(|(left, right, result)| Mutation::OverrideComposite {
            left,
            right,
            result
        }),
    ]
}

fn square() -> impl Strategy<Value = SquareSpec> {
    (label(), label(), label(), label(), label()).prop_map(|(name, top, left, right, bottom)| {
        SquareSpec {
            name,
            top,
            left,
            right,
            bottom,
        }
    })
}

fn spec() -> impl Strategy<Value = CategorySpec> {
    (
        proptest::option::of(label()),
        vec(object(), 0..3),
        vec(morphism(), 0..3),
        vec(generator(), 0..2),
        vec(square(), 0..2),
        vec(mutation(), 0..2),
    )
        .prop_map(
            |(name, objects, morphisms, generators, squares, mutations)| CategorySpec {
                format_version: SPEC_FORMAT_VERSION,
                name,
                objects,
                morphisms,
                generators,
                squares,
                mutations,
            },
        )
}

proptest! {
    #[test]
    fn category_spec_round_trips(s in spec()) {
        let back = CategorySpec::from_json(&s.to_json()).unwrap();
        prop_assert_eq!(back, s);
    }
}

#[test]
fn monoid_files_round_trip() {
    for m in InverseMonoid::corpus() {
        let file = MonoidFile::from_monoid(&m);
        let text = serde_json::to_string(&file).unwrap();
        let back: MonoidFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        std::fs::write(&path, text).unwrap();
        let loaded = MonoidFile::load(&path).unwrap();
        assert_eq!(loaded.name(), m.name());
        assert_eq!(loaded.elements(), m.elements());
        assert_eq!(loaded.table(), m.table());
    }
}

#[test]
fn unknown_fields_are_rejected() {
    let text = r#"{ "format_version": 1, "generators": [{ "kind": "all-pbij", "sizes": [1], "extra": 0 }] }"#;
    assert!(CategorySpec::from_json(text).is_err());
}
