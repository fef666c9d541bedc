use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wcw_core::gf::Field;
use wcw_core::verma::{
    act, base_scalars, build_height_r, build_verma, lambda_set, lemma_elements, ModuleVector, PbwMonomial,
    VermaError,
};
use wcw_core::witt::{AlgebraShape, BasisIndex, PChar};

fn chi(p: u64, m: u32, ell: u32, values: &[((i32, u32), u32)]) -> PChar {
    let shape = AlgebraShape::new(Field::new(p, m).unwrap(), ell);
    PChar::from_values(&shape, values.iter().map(|&((i, j), c)| (BasisIndex::new(i, j), c))).unwrap()
}

fn power(f: &Field, a: u32, n: u32) -> u32 {
    (0..n).fold(1, |acc, _| f.mul(acc, a))
}

/// μ(x)^p - μ(x^[p]) = χ(x)^p on every basis element at or above `cut`.
fn check_p_condition(c: &PChar, cut: i32, mu: impl Fn(BasisIndex) -> u32) {
    let shape = c.shape();
    let f = shape.field();
    let p = shape.p();
    for b in shape.filtration(cut).unwrap() {
        let mut lhs = power(f, mu(b), p);
        if b.i == 0 && b.j == 0 {
            lhs = f.sub(lhs, mu(b));
        }
        assert_eq!(lhs, power(f, c.get(b.i, b.j), p), "at {b}");
    }
}

#[test]
fn base_scalars_on_the_takiff_algebra() {
    let c = chi(5, 1, 1, &[((0, 1), 3), ((-1, 0), 2)]);
    for l in lambda_set(&c).unwrap() {
        let d = base_scalars(&c, 0, Some(l)).unwrap();
        assert_eq!(d.mu_at(BasisIndex::new(0, 1)), 3);
        assert_eq!(d.mu_at(BasisIndex::new(0, 0)), l);
        check_p_condition(&c, 0, |b| d.mu_at(b));
    }
}

#[test]
fn base_scalars_for_zero_character() {
    let c = chi(5, 1, 0, &[]);
    let d = base_scalars(&c, 0, Some(2)).unwrap();
    for b in c.shape().filtration(0).unwrap() {
        assert_eq!(d.mu_at(b), if b == BasisIndex::new(0, 0) { 2 } else { 0 });
    }
}

#[test]
fn base_scalars_at_the_height_r_cut() {
    let c = chi(5, 1, 1, &[((1, 1), 1), ((0, 0), 4), ((-1, 1), 2)]);
    let d = base_scalars(&c, 1, None).unwrap();
    for b in c.shape().filtration(1).unwrap() {
        assert_eq!(d.mu_at(b), if b == BasisIndex::new(1, 1) { 1 } else { 0 });
    }
    check_p_condition(&c, 1, |b| d.mu_at(b));
}

#[test]
fn weights_outside_lambda_are_rejected() {
    let c = chi(5, 5, 1, &[((0, 0), 1)]);
    assert!(matches!(base_scalars(&c, 0, Some(1)), Err(VermaError::BadLambda(_))));
}

#[test]
fn lambda_sets() {
    assert_eq!(lambda_set(&chi(5, 1, 1, &[])).unwrap(), vec![0, 1, 2, 3, 4]);
    assert!(matches!(
        lambda_set(&chi(5, 1, 1, &[((0, 0), 1)])),
        Err(VermaError::NotSplit { .. })
    ));
    let c = chi(5, 5, 1, &[((0, 0), 1)]);
    let f = c.field().clone();
    let roots = lambda_set(&c).unwrap();
    let scan: Vec<u32> = (0..f.order())
        .filter(|&x| f.sub(power(&f, x, 5), x) == 1)
        .collect();
    let mut sorted = roots.clone();
    sorted.sort();
    assert_eq!(sorted, scan);
}

#[test]
fn e0_is_diagonal_on_pbw_monomials() {
    let c = chi(5, 1, 1, &[((-1, 1), 1), ((-1, 0), 3)]);
    let f = c.field().clone();
    for l in lambda_set(&c).unwrap() {
        let m = build_verma(&c, l).unwrap();
        for j in 0..5 {
            let idx = m.monomial_index(&PbwMonomial {
                exponents: vec![4, j],
            });
            let v = act(BasisIndex::new(0, 0), &ModuleVector::basis(idx), &m).unwrap();
            let expected = f.sub(f.sub(l, 4), j);
            let mut w = ModuleVector::zero();
            w.add_term(&f, idx, expected);
            assert_eq!(v, w);
        }
    }
}

#[test]
fn positive_part_kills_the_generator() {
    let c = chi(5, 1, 1, &[((0, 1), 2)]);
    let m = build_verma(&c, 0).unwrap();
    for j in 0..=1 {
        for i in 1..=3 {
            assert!(act(BasisIndex::new(i, j), &m.generator_vector(), &m).unwrap().is_zero());
        }
    }
}

#[test]
fn top_lowering_operator_reduces_in_one_step() {
    for x in 1..5u32 {
        let c = chi(5, 1, 1, &[((-1, 1), x)]);
        let f = c.field().clone();
        let m = build_verma(&c, 2).unwrap();
        let top = m.monomial_index(&PbwMonomial { exponents: vec![0, 4] });
        let v = act(BasisIndex::new(-1, 1), &ModuleVector::basis(top), &m).unwrap();
        let expected = power(&f, x, 5);
        assert_eq!(v.terms().collect::<Vec<_>>(), vec![(0, expected)]);

        let g = m.rep().generator(c.shape().idx(-1, 1));
        let mut pw = g.clone();
        for _ in 1..5 {
            pw = pw.mul(&f, g);
        }
        let n = m.dim();
        for col in 0..n {
            for row in 0..n {
                assert_eq!(pw.get(row, col), if row == col { expected } else { 0 });
            }
        }
    }
}

#[test]
fn straightening_agrees_with_matrices() {
    let c = chi(5, 1, 1, &[((0, 1), 1), ((-1, 0), 4), ((-1, 1), 2)]);
    let m = build_verma(&c, 3).unwrap();
    let shape = c.shape().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let g = shape.basis(rng.gen_range(0..shape.dim()));
        let dense: Vec<u32> = (0..m.dim()).map(|_| rng.gen_range(0..5)).collect();
        let v = ModuleVector::from_dense(&dense);
        assert_eq!(act(g, &v, &m).unwrap(), m.act_matrix(g, &v).unwrap());
    }
}

#[test]
fn module_dimensions() {
    let c = chi(5, 1, 1, &[((-1, 1), 1)]);
    assert_eq!(build_verma(&c, 0).unwrap().dim(), 25);
    let c = chi(5, 1, 2, &[((0, 2), 1)]);
    assert_eq!(build_verma(&c, 0).unwrap().dim(), 125);
    let c = chi(5, 1, 1, &[((1, 1), 1)]);
    assert_eq!(build_height_r(&c).unwrap().dim(), 625);
    let c = chi(5, 1, 1, &[((3, 1), 1)]);
    assert!(matches!(build_height_r(&c), Err(VermaError::HypothesisViolated(_))));
    let c = chi(5, 1, 1, &[((-1, 1), 1)]);
    assert!(matches!(build_height_r(&c), Err(VermaError::HypothesisViolated(_))));
}

#[test]
fn lemma_elements_for_height_two() {
    let c = chi(5, 1, 1, &[((1, 1), 1)]);
    let shape = c.shape().clone();
    let rec = lemma_elements(&c, 1).unwrap();
    assert_eq!(rec.b[0], "0");
    assert_eq!(rec.y, vec![shape.element(1, 1), shape.element(1, 0)]);
    assert!(rec.condition1 && rec.condition2 && rec.condition3);
}

#[test]
fn lemma_pairing_is_triangular_with_the_stated_diagonal() {
    let c = chi(7, 1, 1, &[((2, 1), 3), ((2, 0), 5), ((1, 0), 1), ((0, 1), 2)]);
    let f = c.field().clone();
    let r = 3i64;
    let shape = c.shape().clone();
    for k in 0..=1u32 {
        let rec = lemma_elements(&c, k).unwrap();
        let expected = f.mul(f.from_int(r + 1 - 2 * k as i64), c.get(2, 1));
        for i in 0..=1usize {
            for j in 0..=1usize {
                // χ([e_{k-1}t^i, y_{k,j}]) from the explicit bracket.
                let x = shape.element(k as i32 - 1, i as u32);
                let value = c.eval(&x.bracket(&rec.y[j]).unwrap());
                assert_eq!(f.format_element(value), rec.pairing[i][j]);
                if i == j {
                    assert_eq!(value, expected);
                }
                if j < i {
                    assert_eq!(value, 0);
                }
            }
        }
    }
}
