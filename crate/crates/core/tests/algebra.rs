use proptest::prelude::*;

use wcw_core::gf::Field;
use wcw_core::witt::{scenario_chi, AlgebraShape, BasisIndex, PChar, ScenarioTag, WittError};

fn shape(p: u64, ell: u32) -> AlgebraShape {
    AlgebraShape::new(Field::prime(p).unwrap(), ell)
}

fn chi(s: &AlgebraShape, values: &[((i32, u32), u32)]) -> PChar {
    PChar::from_values(s, values.iter().map(|&((i, j), c)| (BasisIndex::new(i, j), c))).unwrap()
}

#[test]
fn bracket_examples() {
    let w2 = shape(5, 2);
    let b = w2.element(1, 1).bracket(&w2.element(2, 1)).unwrap();
    assert_eq!(b, w2.element(3, 2));
    let w1 = shape(5, 1);
    assert!(w2.element(-1, 1).bracket(&w2.element(-1, 2)).unwrap().is_zero());
    let w0 = shape(5, 0);
    assert!(w0.element(1, 0).bracket(&w0.element(3, 0)).unwrap().is_zero());
    assert_eq!(
        w1.element(-1, 0).bracket(&w1.element(2, 1)).unwrap(),
        w1.zero().add_scaled(3, &w1.element(1, 1)).unwrap()
    );
}

#[test]
fn p_map_examples() {
    let w1 = shape(5, 1);
    assert_eq!(w1.element(0, 0).p_map().unwrap(), w1.element(0, 0));
    assert!(w1.element(0, 1).p_map().unwrap().is_zero());
    assert!(w1.element(2, 1).p_map().unwrap().is_zero());
    let sum = w1.element(0, 0).add_scaled(1, &w1.element(1, 0)).unwrap();
    assert!(matches!(sum.p_map(), Err(WittError::NotBasisElement)));
}

#[test]
fn filtration_and_gradings() {
    let w1 = shape(5, 1);
    assert_eq!(w1.filtration(-1).unwrap().len(), 10);
    assert_eq!(
        w1.graded(0).unwrap(),
        vec![BasisIndex::new(0, 0), BasisIndex::new(0, 1)]
    );
    let top = w1.tgraded(1).unwrap();
    assert_eq!(top.len(), 5);
    assert!(top.iter().all(|b| b.j == 1));
    assert_eq!(w1.filtration(2).unwrap().len(), 4);
}

#[test]
fn height_examples() {
    let w1 = shape(5, 1);
    assert_eq!(PChar::zero(&w1).height().unwrap(), -1);
    assert_eq!(chi(&w1, &[((-1, 1), 1)]).height().unwrap(), 0);
    // Height is the least i with χ(W_(i)) = 0.
    let c = chi(&w1, &[((1, 1), 1)]);
    let least = (-1..=3)
        .find(|&i| w1.filtration(i).unwrap().iter().all(|b| c.get(b.i, b.j) == 0))
        .unwrap();
    assert_eq!(least, 2);
    assert_eq!(c.height().unwrap(), 2);
    assert!(matches!(chi(&w1, &[((3, 0), 1)]).height(), Err(WittError::NoVanishing)));
}

#[test]
fn scenario_examples() {
    let w1 = shape(5, 1);
    for seed in 0..20 {
        let c = scenario_chi(&w1, ScenarioTag::Height0, seed).unwrap();
        assert!(w1.filtration(0).unwrap().iter().all(|b| c.get(b.i, b.j) == 0));
        assert_ne!(c.get(-1, 1), 0);
        let c = scenario_chi(&w1, ScenarioTag::HeightR(2), seed).unwrap();
        assert_ne!(c.get(1, 1), 0);
        assert!(w1.filtration(2).unwrap().iter().all(|b| c.get(b.i, b.j) == 0));
        let c = scenario_chi(&w1, ScenarioTag::Height1A, seed).unwrap();
        assert_eq!((c.height().unwrap(), c.get(0, 1)), (1, 0));
        assert_ne!(c.get(-1, 1), 0);
        let c = scenario_chi(&w1, ScenarioTag::Height1B, seed).unwrap();
        assert_eq!(c.height().unwrap(), 1);
        assert_ne!(c.get(0, 1), 0);
    }
    assert!(matches!(
        scenario_chi(&w1, ScenarioTag::HeightR(4), 0),
        Err(WittError::Infeasible(_))
    ));
    assert_eq!("heightr(3)".parse::<ScenarioTag>().unwrap(), ScenarioTag::HeightR(3));
    assert!("height9".parse::<ScenarioTag>().is_err());
}

#[test]
fn character_json_rejects_unknown_keys() {
    let f = Field::prime(5).unwrap();
    let bad = serde_json::json!({"p": 5, "ell": 0, "values": {}, "lambda": 1});
    assert!(matches!(PChar::from_json(&f, &bad), Err(WittError::UnknownKey(_))));
    let wrong_p = serde_json::json!({"p": 7, "ell": 0, "values": {}});
    assert!(PChar::from_json(&f, &wrong_p).is_err());
}

fn basis_triple(p: u64, ell: u32) -> impl Strategy<Value = (usize, usize, usize)> {
    let d = (ell as usize + 1) * p as usize;
    (0..d, 0..d, 0..d)
}

proptest! {
    #[test]
    fn jacobi_identity_holds((u, v, w) in basis_triple(7, 2), a in 1u32..7, b in 1u32..7) {
        let s = shape(7, 2);
        let x = s.basis_element(u).add_scaled(a, &s.basis_element(v)).unwrap();
        let y = s.basis_element(v).add_scaled(b, &s.basis_element(w)).unwrap();
        let z = s.basis_element(w);
        let t1 = x.bracket(&y.bracket(&z).unwrap()).unwrap();
        let t2 = y.bracket(&z.bracket(&x).unwrap()).unwrap();
        let t3 = z.bracket(&x.bracket(&y).unwrap()).unwrap();
        prop_assert!(t1.checked_add(&t2).unwrap().checked_add(&t3).unwrap().is_zero());
    }

    #[test]
    fn bracket_is_antisymmetric((u, v, _) in basis_triple(5, 3)) {
        let s = shape(5, 3);
        let (x, y) = (s.basis_element(u), s.basis_element(v));
        prop_assert!(x.bracket(&y).unwrap().checked_add(&y.bracket(&x).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn character_json_round_trips(values in proptest::collection::vec(0u32..5, 10)) {
        let s = shape(5, 1);
        let c = PChar::from_values(&s, values.iter().enumerate().map(|(u, &x)| (s.basis(u), x))).unwrap();
        let back = PChar::from_json(s.field(), &c.to_json()).unwrap();
        prop_assert_eq!(back.values(), c.values());
    }
}
