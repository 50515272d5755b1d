use chevalley::group::{
    chi, commutator_constants, evaluate, sl2_embed, sl2_word, torus, torus_coweight, wtilde, GroupElement, Letter, Word,
};
use chevalley::hwmodule::WeightModule;
use chevalley::integrality::stabilizes;
use chevalley::linalg::Matrix;
use chevalley::rational::q;
use chevalley::{RootSystem, Q};

fn module(t: &str, lambdas: &[Vec<i64>]) -> WeightModule {
    WeightModule::new(&RootSystem::from_str_type(t).unwrap(), lambdas).unwrap()
}

fn int(n: i64) -> Q {
    Q::from_int(n)
}

fn mat(rows: &[[Q; 2]; 2]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
}

#[test]
fn sl2_generator_matrices() {
    let v = module("A1", &[vec![1]]);
    let s = q(2, 7);
    assert_eq!(chi(&v, 0, s.clone()).matrix, mat(&[[int(1), s.clone()], [int(0), int(1)]]));
    assert_eq!(chi(&v, 1, s.clone()).matrix, mat(&[[int(1), int(0)], [s.clone(), int(1)]]));
    assert_eq!(torus(&v, 0, s.clone()).unwrap().matrix, Matrix::diagonal(&[s.clone(), s.recip()]));
    assert_eq!(wtilde(&v, 0, int(1)).unwrap().matrix, Matrix::from_i64_rows(&[vec![0, 1], vec![-1, 0]]));
}

#[test]
fn identities() {
    let v = module("B2", &[vec![1, 1]]);
    let id = Matrix::identity(v.dim());
    for a in 0..v.root_system().num_roots() {
        assert_eq!(chi(&v, a, Q::zero()).matrix, id);
    }
    for i in 0..2 {
        assert_eq!(torus(&v, i, Q::one()).unwrap().matrix, id);
    }
    assert_eq!(evaluate(&v, &Word::new()).unwrap().matrix, id);
}

#[test]
fn golden_sl2_words() {
    let v = module("A1", &[vec![1]]);
    let target = Matrix::from_i64_rows(&[vec![1, 1], vec![1, 2]]);
    let w = Word(vec![Letter::chi(0, q(1, 2)), Letter::torus(0, q(1, 2)), Letter::chi(1, q(1, 2))]);
    assert_eq!(evaluate(&v, &w).unwrap().matrix, target);
    let w = Word(vec![Letter::chi(1, int(1)), Letter::chi(0, int(1))]);
    assert_eq!(evaluate(&v, &w).unwrap().matrix, target);
}

#[test]
fn one_parameter_subgroups() {
    let v = module("A2", &[vec![1, 0]]);
    let samples = [(q(1, 2), q(-3, 5)), (int(4), q(7, 3)), (q(-1, 6), q(1, 6))];
    for a in 0..6 {
        for (s, t) in &samples {
            let lhs = chi(&v, a, s.clone()).mul(&chi(&v, a, t.clone()));
            assert_eq!(lhs.matrix, chi(&v, a, s + t).matrix);
        }
    }
}

#[test]
fn torus_is_multiplicative_and_commutative() {
    let v = module("G2", &[vec![1, 0], vec![0, 1]]);
    let (s, t) = (q(2, 3), q(-5, 2));
    for i in 0..2 {
        let lhs = torus(&v, i, s.clone()).unwrap().mul(&torus(&v, i, t.clone()).unwrap());
        assert_eq!(lhs.matrix, torus(&v, i, &s * &t).unwrap().matrix);
        for j in 0..2 {
            let a = torus(&v, i, s.clone()).unwrap();
            let b = torus(&v, j, t.clone()).unwrap();
            assert_eq!(a.mul(&b).matrix, b.mul(&a).matrix);
        }
    }
}

#[test]
fn coroot_torus_elements_factor_through_simple_ones() {
    for t in ["A2", "B2", "G2"] {
        let v = module(t, &[vec![1, 1]]);
        let r = v.root_system();
        let s = q(3, 2);
        for a in 0..r.num_positive() {
            let c = r.coroot_coords(a);
            let lhs = torus_coweight(&v, c.iter().map(|&x| int(x)).collect(), s.clone()).unwrap();
            let mut rhs = GroupElement::identity(v.dim());
            for (i, &ci) in c.iter().enumerate() {
                rhs = rhs.mul(&torus(&v, i, s.pow(ci)).unwrap());
            }
            assert_eq!(lhs.matrix, rhs.matrix, "{t} root {a}");
            // h_α(s) = w̃_α(s) w̃_α(1)⁻¹
            let w = wtilde(&v, a, s.clone()).unwrap().mul(&wtilde(&v, a, int(1)).unwrap().inverse(&v));
            assert_eq!(w.matrix, lhs.matrix, "{t} root {a}");
        }
    }
}

#[test]
fn weyl_lifts_permute_weight_spaces() {
    let v = module("A2", &[vec![1, 0]]);
    let r = v.root_system();
    for a in 0..r.num_roots() {
        let w = wtilde(&v, a, q(-2, 3)).unwrap();
        for c in 0..v.dim() {
            let image = r.reflect_weight(v.weight_of(c), a);
            for row in 0..v.dim() {
                if !w.matrix.get(row, c).is_zero() {
                    assert_eq!(v.weight_of(row), image.as_slice());
                }
            }
        }
    }
}

#[test]
fn words_times_inverses_are_the_identity() {
    let v = module("B2", &[vec![1, 1], vec![1, 0], vec![0, 1]]);
    let w = Word(vec![
        Letter::chi(3, q(1, 2)),
        Letter::torus(1, q(-3, 4)),
        Letter::wtilde(5, q(2, 5)),
        Letter::chi(6, int(-7)),
        Letter::Coweight { coweight: vec![int(1), int(1)], t: int(3) },
    ]);
    let g = evaluate(&v, &w).unwrap();
    let back = g.mul(&g.inverse(&v));
    assert!(back.matrix.is_identity());
    assert_eq!(g.matrix.inverse().unwrap(), evaluate(&v, &w.inverse()).unwrap().matrix);
    assert_eq!(g.matrix.determinant(), Q::one());
}

#[test]
fn integral_words_stabilize_the_lattice() {
    let v = module("A2", &[vec![1, 1], vec![1, 0], vec![0, 1]]);
    let lat = v.build_lattice();
    let w = Word(vec![
        Letter::chi(0, int(3)),
        Letter::wtilde(2, int(-1)),
        Letter::torus(0, int(-1)),
        Letter::chi(4, int(-2)),
        Letter::chi(5, int(5)),
    ]);
    for word in [w.clone(), w.inverse()] {
        let g = evaluate(&v, &word).unwrap();
        assert!(stabilizes(&v, &lat, &g).is_none());
        assert!(stabilizes(&v, &lat, &GroupElement::from_matrix(g.matrix.clone())).is_none());
        assert!(g.matrix.is_integral());
    }
}

#[test]
fn torus_is_injective_on_a_grid() {
    let v = module("B2", &[vec![1, 0], vec![0, 1]]);
    let vals = [q(1, 2), int(2), int(-1), q(-3, 2), int(1)];
    let mut seen = Vec::new();
    for a in &vals {
        for b in &vals {
            let m = torus(&v, 0, a.clone()).unwrap().mul(&torus(&v, 1, b.clone()).unwrap()).matrix;
            assert!(!seen.contains(&m), "h_1({a}) h_2({b}) repeats");
            seen.push(m);
        }
    }
}

#[test]
fn sl2_homomorphism() {
    let v = module("A2", &[vec![1, 1]]);
    let r = v.root_system();
    let one = Q::one();
    let id = [[one.clone(), Q::zero()], [Q::zero(), one.clone()]];
    assert!(sl2_embed(&v, 0, id).unwrap().matrix.is_identity());
    let s = q(5, 3);
    let up = [[one.clone(), s.clone()], [Q::zero(), one.clone()]];
    assert_eq!(sl2_embed(&v, 1, up).unwrap().matrix, chi(&v, r.simple(1), s).matrix);
    let m = [[int(2), int(1)], [int(3), int(2)]];
    let w = sl2_word(0, r, m.clone()).unwrap();
    assert!(w.is_integral());
    assert!(w.0.iter().all(|l| matches!(l, Letter::Chi { .. })));
    let g = evaluate(&v, &w).unwrap();
    assert!(stabilizes(&v, &v.build_lattice(), &g).is_none());
    assert!(sl2_word(0, r, [[int(2), int(0)], [int(0), int(2)]]).is_err());
}

#[test]
fn sl2_embedding_on_the_standard_module() {
    let v = module("A1", &[vec![1]]);
    for m in [
        [[int(2), int(1)], [int(3), int(2)]],
        [[q(1, 2), Q::zero()], [q(3, 4), int(2)]],
        [[Q::zero(), int(-1)], [int(1), Q::zero()]],
        [[q(3, 2), int(1)], [q(1, 2), int(1)]],
    ] {
        assert_eq!(sl2_embed(&v, 0, m.clone()).unwrap().matrix, mat(&m));
    }
}

#[test]
fn commutators() {
    let a2 = module("A2", &[vec![1, 0]]);
    let samples = [(q(1, 2), int(3)), (int(-2), q(5, 7)), (q(3, 4), q(-1, 3))];
    let c = commutator_constants(&a2, 0, 1, &samples).unwrap();
    assert_eq!(c.constants.len(), 1);
    assert_eq!(c.constants[0].3.abs(), 1);
    let n = chevalley::algebra::ChevalleyAlgebra::new(a2.root_system()).unwrap().structure_constant(0, 1).unwrap();
    assert_eq!(c.constants[0].3, n);

    // α_1 and α_3 in A3 are orthogonal
    let a3 = module("A3", &[vec![1, 0, 0]]);
    let c = commutator_constants(&a3, 0, 2, &samples).unwrap();
    assert!(c.constants.iter().all(|x| x.3 == 0));

    let b2 = module("B2", &[vec![1, 0], vec![0, 1]]);
    let c = commutator_constants(&b2, 0, 1, &samples).unwrap();
    let roots: Vec<&Vec<i64>> = c.constants.iter().map(|x| &x.2).collect();
    assert_eq!(roots, vec![&vec![1, 1], &vec![1, 2]]);
    assert!(c.constants.iter().all(|x| x.3 != 0));
    assert!(commutator_constants(&b2, 0, 0, &samples).is_err());
}
