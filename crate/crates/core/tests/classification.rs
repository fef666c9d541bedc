use wcw_core::cache::ActionCache;
use wcw_core::classify::{classify, reduce_by_truncation, scenario_character, ClassifyError, ClassifyOptions};
use wcw_core::gf::Field;
use wcw_core::witt::{AlgebraShape, BasisIndex, PChar, ScenarioTag};

fn chi(p: u64, ell: u32, values: &[((i32, u32), u32)]) -> PChar {
    let shape = AlgebraShape::new(Field::prime(p).unwrap(), ell);
    PChar::from_values(&shape, values.iter().map(|&((i, j), c)| (BasisIndex::new(i, j), c))).unwrap()
}

fn options(seed: u64) -> ClassifyOptions {
    ClassifyOptions {
        seed,
        cache: None,
        cross_check: true,
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort();
    v
}

#[test]
fn truncation_examples() {
    for ell in 0..3 {
        let (k, psi) = reduce_by_truncation(&chi(5, ell, &[]));
        assert_eq!(k, 0);
        assert!(psi.values().iter().all(|&c| c == 0));
    }
    let (k, psi) = reduce_by_truncation(&chi(5, 2, &[((0, 1), 2), ((-1, 0), 3)]));
    assert_eq!(k, 1);
    assert_eq!(psi.shape().ell(), 1);
    assert_eq!((psi.get(0, 1), psi.get(-1, 0)), (2, 3));
    let (k, _) = reduce_by_truncation(&chi(5, 2, &[((-1, 2), 1)]));
    assert_eq!(k, 2);
}

#[test]
fn witt_algebra_with_zero_character() {
    let r = classify(&chi(5, 0, &[]), &options(0)).unwrap();
    assert!(r.matches);
    assert_eq!(sorted(r.class_dims.clone()), vec![1, 4, 5, 5, 5]);
    let z0 = r.modules.iter().find(|m| m.label == "Z(0)").unwrap();
    assert_eq!((z0.socle_dim, z0.radical_dim), (Some(4), Some(4)));
    let z4 = r.modules.iter().find(|m| m.label == "Z(4)").unwrap();
    assert_eq!((z4.socle_dim, z4.radical_dim), (Some(1), Some(1)));
}

#[test]
fn takiff_height_zero_has_one_class() {
    let r = classify(&chi(5, 1, &[((-1, 1), 1)]), &options(1)).unwrap();
    assert!(r.matches);
    assert_eq!(r.classes.len(), 1);
    assert_eq!(r.classes[0].len(), 5);
    assert_eq!(r.class_dims, vec![25]);
}

#[test]
fn takiff_height_one_b_has_five_classes() {
    let r = classify(&chi(5, 1, &[((0, 1), 1)]), &options(2)).unwrap();
    assert!(r.matches);
    assert_eq!(r.class_dims, vec![25; 5]);
}

#[test]
fn larger_prime_tables() {
    let r = classify(&chi(7, 0, &[((-1, 0), 3)]), &options(3)).unwrap();
    assert!(r.matches);
    assert_eq!(r.class_dims, vec![7; 6]);
    let r = classify(&chi(7, 1, &[((0, 1), 5), ((-1, 0), 2)]), &options(4)).unwrap();
    assert!(r.matches);
    assert_eq!(r.class_dims, vec![49; 7]);
}

#[test]
fn height_three_module() {
    let r = classify(&chi(5, 1, &[((2, 1), 1)]), &options(5)).unwrap();
    assert!(r.matches, "{}", r.to_text());
    assert_eq!(r.class_dims, vec![625]);
}

#[test]
fn truncated_classification_matches_the_smaller_algebra() {
    let big = classify(&chi(5, 2, &[((-1, 1), 2)]), &options(6)).unwrap();
    let small = classify(&chi(5, 1, &[((-1, 1), 2)]), &options(6)).unwrap();
    assert!(big.matches && small.matches);
    assert_eq!(big.pullback_axioms_ok, Some(true));
    assert_eq!(sorted(big.class_dims), sorted(small.class_dims));
}

#[test]
fn full_height_is_unsupported() {
    assert!(matches!(
        classify(&chi(5, 1, &[((3, 1), 1)]), &options(0)),
        Err(ClassifyError::UnsupportedRegime(_))
    ));
}

#[test]
fn shipped_scenarios_match() {
    for (ell, tag) in [
        (0, ScenarioTag::HeightMinusOne),
        (0, ScenarioTag::Height0),
        (0, ScenarioTag::Height1B),
        (1, ScenarioTag::Height0),
        (1, ScenarioTag::Height1A),
        (1, ScenarioTag::Height1B),
    ] {
        for seed in [7, 8] {
            let c = scenario_character(5, ell, tag, seed).unwrap();
            let r = classify(&c, &options(seed)).unwrap();
            assert!(r.matches, "ℓ={ell} {tag} seed {seed}\n{}", r.to_text());
        }
    }
}

#[test]
fn cache_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let c = chi(5, 1, &[((-1, 1), 1), ((0, 0), 1)]);
    let plain = classify(&c, &options(11)).unwrap();
    let cached = ClassifyOptions {
        cache: Some(ActionCache::new(dir.path())),
        ..options(11)
    };
    let first = classify(&c, &cached).unwrap();
    let second = classify(&c, &cached).unwrap();
    assert_eq!(plain.to_json(), first.to_json());
    assert_eq!(first.to_json(), second.to_json());
}
