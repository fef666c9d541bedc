use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wcw_core::gf::{Field, GfError};

/// Remainder of `a` modulo the monic `f`, coefficients low to high, over F_p.
fn rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let d = f.len() - 1;
    while a.len() > d {
        let c = a.pop().unwrap();
        let shift = a.len() - d;
        for (k, &fk) in f[..d].iter().enumerate() {
            a[shift + k] = (a[shift + k] + p * p - c * fk % p) % p;
        }
    }
    a
}

fn monic(p: u32, deg: usize) -> Vec<Vec<u32>> {
    (0..p.pow(deg as u32))
        .map(|mut code| {
            let mut f: Vec<u32> = (0..deg)
                .map(|_| {
                    let c = code % p;
                    code /= p;
                    c
                })
                .collect();
            f.push(1);
            f
        })
        .collect()
}

fn irreducible_by_trial_division(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    (1..=deg / 2).all(|d| monic(p, d).iter().all(|g| rem(f, g, p).iter().any(|&c| c != 0)))
}

#[test]
fn prime_field_basics() {
    let f = Field::new(5, 1).unwrap();
    assert_eq!(f.order(), 5);
    assert_eq!(f.modulus().len(), 2);
    assert_eq!(f.add(3, 4), 2);
    assert_eq!(f.inv(2).unwrap(), 3);
    for a in 0..5 {
        assert_eq!(f.frobenius(a), a);
    }
    assert!(matches!(f.inv(0), Err(GfError::DivisionByZero)));
}

#[test]
fn composite_characteristic_is_rejected() {
    assert!(matches!(Field::new(4, 1), Err(GfError::NonPrime(4))));
    assert!(matches!(Field::new(3, 1), Err(GfError::NonPrime(3))));
}

#[test]
fn degree_five_modulus_is_the_least_irreducible() {
    let f = Field::new(5, 5).unwrap();
    assert_eq!(f.order(), 3125);
    let modulus = f.modulus().to_vec();
    assert!(irreducible_by_trial_division(&modulus, 5));
    // Lexicographic from the top coefficient down: x^4 coefficient varies slowest.
    let mut least = None;
    'search: for c4 in 0..5 {
        for c3 in 0..5 {
            for c2 in 0..5 {
                for c1 in 0..5 {
                    for c0 in 0..5 {
                        let g = vec![c0, c1, c2, c3, c4, 1];
                        if irreducible_by_trial_division(&g, 5) {
                            least = Some(g);
                            break 'search;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(least, Some(modulus));
}

#[test]
fn multiplicative_group_is_cyclic_of_order_3124() {
    let f = Field::new(5, 5).unwrap();
    let order = |a: u32| {
        let mut x = a;
        let mut n = 1u32;
        while x != 1 {
            x = f.mul(x, a);
            n += 1;
        }
        n
    };
    let mut generator = None;
    for a in 1..f.order() {
        let n = order(a);
        assert_eq!(3124 % n, 0);
        if n == 3124 && generator.is_none() {
            generator = Some(a);
        }
    }
    let g = generator.expect("a generator exists");
    let mut seen = vec![false; 3125];
    let mut x = 1;
    for _ in 0..3124 {
        assert!(!seen[x as usize]);
        seen[x as usize] = true;
        x = f.mul(x, g);
    }
    assert_eq!(seen.iter().filter(|&&s| s).count(), 3124);
    assert!(!seen[0]);
}

#[test]
fn inverses_and_roots_in_degree_five() {
    let f = Field::new(5, 5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..100 {
        let a = rng.gen_range(1..f.order());
        assert_eq!(f.mul(f.inv(a).unwrap(), a), 1);
        let b = f.pth_root(a);
        assert_eq!(f.mul(f.mul(f.mul(b, b), f.mul(b, b)), b), a);
        assert_eq!(b, f.pow(a, 625));
    }
    for a in 0..f.order() {
        assert_eq!(f.pth_root(f.frobenius(a)), a);
    }
}

#[test]
fn artin_schreier_roots_match_a_scan() {
    let f5 = Field::prime(5).unwrap();
    assert_eq!(f5.artin_schreier_roots(0).unwrap(), vec![0, 1, 2, 3, 4]);
    assert!(matches!(f5.artin_schreier_roots(1), Err(GfError::NotSplit { .. })));

    let f = Field::new(5, 5).unwrap();
    let mut scanned: Vec<u32> = (0..f.order())
        .filter(|&x| {
            let x5 = f.mul(f.mul(f.mul(x, x), f.mul(x, x)), x);
            f.sub(x5, x) == 1
        })
        .collect();
    let mut roots = f.artin_schreier_roots(1).unwrap();
    roots.sort();
    scanned.sort();
    assert_eq!(roots, scanned);
    assert_eq!(roots.len(), 5);
    for &a in &roots {
        for &b in &roots {
            assert!(f.in_prime_subfield(f.sub(a, b)));
        }
    }
}

#[test]
fn elements_round_trip_through_text_and_json() {
    let f = Field::new(7, 2).unwrap();
    for a in 0..f.order() {
        assert_eq!(f.parse_element(&f.format_element(a)).unwrap(), a);
        assert_eq!(f.element_from_json(&f.element_to_json(a)).unwrap(), a);
        assert_eq!(f.from_coords(&f.coords(a)).unwrap(), a);
    }
    assert!(f.parse_element("[1,2,3]").is_err());
}
