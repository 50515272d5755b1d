use std::collections::HashMap;

use chevalley::hwmodule::{binomial, fundamental_weight, weights_and_mults, weyl_dimension, WeightModule};
use chevalley::linalg::Matrix;
use chevalley::{RootSystem, Q};
use num_bigint::BigInt;

fn rs(t: &str) -> RootSystem {
    RootSystem::from_str_type(t).unwrap()
}

/// `∏_{β>0} ⟨λ+ρ, β∨⟩ / ⟨ρ, β∨⟩` straight from coroot coordinates.
fn weyl_dim_oracle(r: &RootSystem, lam: &[i64]) -> Q {
    let mut out = Q::one();
    for b in 0..r.num_positive() {
        let c = r.coroot_coords(b);
        let num: i64 = c.iter().zip(lam).map(|(c, l)| c * (l + 1)).sum();
        let den: i64 = c.iter().sum();
        out = &out * &Q::new(num, den);
    }
    out
}

fn module(t: &str, lambdas: &[Vec<i64>]) -> WeightModule {
    WeightModule::new(&rs(t), lambdas).unwrap()
}

#[test]
fn sl2_standard_module() {
    let v = module("A1", &[vec![1]]);
    assert_eq!(v.dim(), 2);
    assert_eq!(v.weights(), vec![vec![1], vec![-1]]);
    assert_eq!(v.e(0).to_dense(), Matrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]));
    assert_eq!(v.f(0).to_dense(), Matrix::from_i64_rows(&[vec![0, 0], vec![1, 0]]));
    assert!(v.divided_power(0, 2).unwrap().is_zero());
    assert_eq!(v.divided_power(0, 0).unwrap().to_dense(), Matrix::identity(2));
    assert_eq!(v.binomial_h_action(0, 0).unwrap().to_dense(), Matrix::identity(2));
    assert_eq!(v.binomial_h_action(0, 1).unwrap().to_dense(), Matrix::from_i64_rows(&[vec![1, 0], vec![0, -1]]));
    let lat = v.build_lattice();
    assert!(lat.is_standard());
    assert_eq!(lat.rows, vec![vec![vec![Q::one()]], vec![vec![Q::one()]]]);
}

#[test]
fn small_weight_tables() {
    let a2 = rs("A2");
    let w = weights_and_mults(&a2, &[1, 0]).unwrap();
    assert_eq!(w.len(), 3);
    assert!(w.iter().all(|(_, m)| *m == 1));
    let adj: HashMap<Vec<i64>, usize> = weights_and_mults(&a2, &[1, 1]).unwrap().into_iter().collect();
    assert_eq!(adj.values().sum::<usize>(), 8);
    assert_eq!(adj[&vec![0, 0]], 2);
    let v = module("A2", &[vec![1, 0], vec![0, 1]]);
    assert_eq!(v.dim(), 6);
    assert_eq!(v.summands().len(), 2);
}

#[test]
fn simple_root_matrices_are_the_generators() {
    let v = module("B2", &[vec![1, 1]]);
    let r = v.root_system();
    for i in 0..2 {
        assert_eq!(v.root_action(r.simple(i)), v.e(i));
        assert_eq!(v.root_action(r.negate(r.simple(i))), v.f(i));
    }
}

#[test]
fn dimensions_match_the_weyl_formula() {
    let cases: &[(&str, &[i64])] = &[
        ("A1", &[3]),
        ("A2", &[2, 1]),
        ("A3", &[1, 0, 1]),
        ("B2", &[1, 1]),
        ("B3", &[0, 0, 1]),
        ("C3", &[0, 1, 0]),
        ("D4", &[0, 0, 0, 1]),
        ("G2", &[1, 0]),
        ("G2", &[0, 1]),
        ("F4", &[0, 0, 0, 1]),
    ];
    for (t, lam) in cases {
        let r = rs(t);
        let expect = weyl_dim_oracle(&r, lam);
        assert_eq!(Q::from_bigint(weyl_dimension(&r, lam)), expect, "{t} {lam:?}");
        let total: usize = weights_and_mults(&r, lam).unwrap().iter().map(|x| x.1).sum();
        assert_eq!(Q::from_int(total as i64), expect, "{t} {lam:?}");
        if total <= 300 {
            assert_eq!(Q::from_int(module(t, &[lam.to_vec()]).dim() as i64), expect, "{t} {lam:?}");
        }
    }
    // familiar values
    assert_eq!(weyl_dimension(&rs("G2"), &[1, 0]), BigInt::from(7));
    assert_eq!(weyl_dimension(&rs("G2"), &[0, 1]), BigInt::from(14));
    assert_eq!(weyl_dimension(&rs("E8"), &[0, 0, 0, 0, 0, 0, 0, 1]), BigInt::from(248));
    assert_eq!(weyl_dimension(&rs("E6"), &[1, 0, 0, 0, 0, 0]), BigInt::from(27));
}

#[test]
fn multiplicities_are_weyl_invariant() {
    for (t, lam) in [("A2", vec![2, 1]), ("B2", vec![1, 2]), ("G2", vec![1, 1]), ("C3", vec![1, 0, 1])] {
        let r = rs(t);
        let m: HashMap<Vec<i64>, usize> = weights_and_mults(&r, &lam).unwrap().into_iter().collect();
        for (mu, k) in &m {
            for i in 0..r.rank() {
                assert_eq!(m.get(&r.reflect_weight(mu, r.simple(i))), Some(k), "{t}: s_{i} {mu:?}");
            }
        }
    }
}

#[test]
fn weights_lie_below_the_highest_weight() {
    for (t, lam) in [("A3", vec![1, 1, 0]), ("B2", vec![2, 1]), ("G2", vec![1, 1])] {
        let r = rs(t);
        let cinv = Matrix::from_i64_rows(r.cartan_matrix()).inverse().unwrap();
        for (mu, _) in weights_and_mults(&r, &lam).unwrap() {
            // λ − μ in simple-root coordinates must be a non-negative integer vector
            let diff: Vec<Q> = lam.iter().zip(&mu).map(|(a, b)| Q::from_int(a - b)).collect();
            let c = cinv.mul_vec(&diff);
            assert!(c.iter().all(|x| x.is_integer() && !x.is_negative()), "{t}: {mu:?}");
            let depth: i64 = c.iter().map(|x| x.to_i64().unwrap()).sum();
            assert_eq!(r.depth(&mu, &lam).unwrap(), depth);
        }
    }
}

#[test]
fn root_matrices_shift_weights() {
    for (t, lams) in [("A2", vec![vec![1, 1]]), ("B2", vec![vec![1, 0], vec![0, 1]]), ("G2", vec![vec![1, 0]])] {
        let v = module(t, &lams);
        let r = v.root_system();
        let wt = |k: usize| v.weight_of(k).to_vec();
        for a in 0..r.num_roots() {
            let shift = r.root_to_weight(&r.root(a));
            for (row, col, _) in v.root_action(a).iter() {
                let expect: Vec<i64> = wt(col).iter().zip(&shift).map(|(x, y)| x + y).collect();
                assert_eq!(wt(row), expect, "{t}");
                assert_ne!(v.space_index_of(row), v.space_index_of(col));
            }
        }
    }
}

#[test]
fn weyl_lifts_preserve_multiplicities_in_modules() {
    let v = module("C3", &[vec![0, 1, 0]]);
    let r = v.root_system();
    for sp in v.spaces() {
        for i in 0..r.rank() {
            assert_eq!(v.multiplicity(&r.reflect_weight(&sp.weight, r.simple(i))), v.multiplicity(&sp.weight));
        }
    }
}

#[test]
fn divided_powers_and_binomials_are_integral() {
    for (t, lams) in [("A2", vec![vec![2, 1]]), ("B2", vec![vec![1, 1]]), ("G2", vec![vec![1, 1]])] {
        let v = module(t, &lams);
        let r = v.root_system();
        for a in 0..r.num_roots() {
            for (m, p) in v.divided_powers(a).iter().enumerate() {
                assert!(p.is_integral(), "{t}: x_{a}^({})", m + 1);
            }
        }
        for i in 0..r.rank() {
            for m in 0..4 {
                assert!(v.binomial_h_action(i, m).unwrap().is_integral());
            }
        }
    }
}

#[test]
fn divided_powers_are_powers_over_factorials() {
    let v = module("G2", &[vec![1, 0]]);
    let r = v.root_system();
    for a in 0..r.num_roots() {
        let x = v.root_action(a);
        let mut pow = x.clone();
        let mut fact = Q::one();
        for m in 1..=4 {
            fact = &fact * &Q::from_int(m);
            let expect = pow.scale(&fact.recip());
            assert_eq!(v.divided_power(a, m).unwrap(), expect, "root {a} m {m}");
            pow = pow.mul(x);
        }
    }
}

#[test]
fn binomial_values() {
    assert_eq!(binomial(5, 2), BigInt::from(10));
    assert_eq!(binomial(-1, 3), BigInt::from(-1));
    assert_eq!(binomial(-2, 2), BigInt::from(3));
    assert_eq!(binomial(3, 0), BigInt::from(1));
    assert_eq!(binomial(2, 3), BigInt::from(0));
}

#[test]
fn lattice_recursion_matches_kostant_monomials() {
    for (t, lam) in [("A2", vec![1, 1]), ("B2", vec![1, 1]), ("G2", vec![1, 0]), ("C3", vec![0, 1, 0]), ("A3", vec![1, 0, 1])] {
        let raw = WeightModule::new_unrebased(&rs(t), std::slice::from_ref(&lam)).unwrap();
        assert_eq!(raw.build_lattice(), raw.kostant_lattice(), "{t} {lam:?}");
        let v = WeightModule::new(&rs(t), &[lam]).unwrap();
        assert!(v.build_lattice().is_standard(), "{t}");
        for sp in v.spaces() {
            assert_eq!(v.build_lattice().rank(v.find_space(sp.summand, &sp.weight).unwrap()), sp.dim);
        }
    }
}

#[test]
fn lattice_membership() {
    let v = module("A1", &[vec![1]]);
    let lat = v.build_lattice();
    assert!(lat.contains(&[Q::zero(), Q::zero()]));
    assert!(lat.contains(&[Q::one(), Q::one()]));
    assert!(!lat.contains(&[Q::new(1, 2), Q::zero()]));
    let adj = module("A2", &[vec![1, 1]]);
    let lat = adj.build_lattice();
    let mut hv = vec![Q::zero(); adj.dim()];
    hv[adj.highest_vectors()[0]] = Q::one();
    let r = adj.root_system();
    let img = adj.root_action(r.negate(r.simple(0))).mul_vec(&hv);
    assert!(lat.contains(&img));
    assert!(!lat.contains(&img.iter().map(|x| x * &Q::new(1, 2)).collect::<Vec<_>>()));
}

#[test]
fn fundamental_weight_presence() {
    assert!(module("A1", &[vec![1]]).missing_fundamental_weights().is_empty());
    let adj = module("A2", &[vec![1, 1]]);
    assert_eq!(adj.missing_fundamental_weights(), vec![0, 1]);
    let full = module("A2", &[vec![1, 1], vec![1, 0], vec![0, 1]]);
    assert!(full.missing_fundamental_weights().is_empty());
    assert!(full.has_regular_summand());
    let l = 3;
    let fund: Vec<Vec<i64>> = (0..l).map(|i| fundamental_weight(l, i)).collect();
    let v = module("B3", &fund);
    assert!(v.missing_fundamental_weights().is_empty());
    assert!(!v.has_regular_summand());
}

#[test]
fn construction_errors() {
    let a2 = rs("A2");
    assert!(WeightModule::new(&a2, &[vec![1, -1]]).is_err());
    assert!(WeightModule::new(&a2, &[vec![1]]).is_err());
    assert!(WeightModule::new(&a2, &[vec![0, 0]]).is_err());
    assert!(weights_and_mults(&a2, &[-1, 0]).is_err());
}
