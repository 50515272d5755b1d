use chevalley::group::{evaluate, sl2_embed, Letter, Word};
use chevalley::hwmodule::WeightModule;
use chevalley::integrality::{height_order, iwasawa_decompose, mul2, sl2_iwasawa, toral_factorize, unipotent_factorize};
use chevalley::linalg::Matrix;
use chevalley::{RootSystem, Q};
use proptest::prelude::*;
use std::sync::LazyLock;

static A2: LazyLock<WeightModule> = LazyLock::new(|| {
    let r = RootSystem::from_str_type("A2").unwrap();
    WeightModule::new(&r, &[vec![1, 1], vec![1, 0], vec![0, 1]]).unwrap()
});

static A1: LazyLock<WeightModule> =
    LazyLock::new(|| WeightModule::new(&RootSystem::from_str_type("A1").unwrap(), &[vec![1]]).unwrap());

fn rational() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Q::new(n, d))
}

fn nonzero() -> impl Strategy<Value = Q> {
    rational().prop_filter("nonzero", |x| !x.is_zero())
}

fn letter(num_roots: usize, rank: usize) -> impl Strategy<Value = Letter> {
    prop_oneof![
        (0..num_roots, rational()).prop_map(|(r, t)| Letter::chi(r, t)),
        (0..rank, nonzero()).prop_map(|(i, t)| Letter::torus(i, t)),
        (0..num_roots, nonzero()).prop_map(|(r, s)| Letter::wtilde(r, s)),
    ]
}

fn simple_letter(rank: usize, num_positive: usize) -> impl Strategy<Value = Letter> {
    prop_oneof![
        (0..rank, rational()).prop_map(|(i, t)| Letter::chi(i, t)),
        (0..rank, rational()).prop_map(move |(i, t)| Letter::chi(num_positive + i, t)),
        (0..rank, nonzero()).prop_map(|(i, t)| Letter::torus(i, t)),
        (0..rank, nonzero()).prop_map(|(i, s)| Letter::wtilde(i, s)),
    ]
}

/// `[[a, b], [c, (1 + bc)/a]]`, which has determinant one.
fn sl2_matrix() -> impl Strategy<Value = [[Q; 2]; 2]> {
    (nonzero(), rational(), rational()).prop_map(|(a, b, c)| {
        let d = &(&Q::one() + &(&b * &c)) / &a;
        [[a, b], [c, d]]
    })
}

fn to_matrix(m: &[[Q; 2]; 2]) -> Matrix {
    Matrix::from_rows(m.iter().map(|r| r.to_vec()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_times_inverse_is_identity(letters in prop::collection::vec(letter(6, 2), 0..8)) {
        let w = Word(letters);
        let mut both = w.clone();
        both.extend(&w.inverse());
        prop_assert!(evaluate(&A2, &both).unwrap().matrix.is_identity());
    }

    #[test]
    fn simplification_preserves_the_element(letters in prop::collection::vec(letter(6, 2), 0..10)) {
        let w = Word(letters);
        let s = w.simplified();
        prop_assert!(s.len() <= w.len());
        prop_assert_eq!(evaluate(&A2, &s).unwrap().matrix, evaluate(&A2, &w).unwrap().matrix);
    }

    #[test]
    fn sl2_split_recomposes(m in sl2_matrix()) {
        let (g, b) = sl2_iwasawa(&m).unwrap();
        prop_assert!(g.iter().flatten().all(Q::is_integer));
        prop_assert!(b[1][0].is_zero());
        prop_assert_eq!(mul2(&g, &b), m);
    }

    #[test]
    fn sl2_embedding_reproduces_the_matrix(m in sl2_matrix()) {
        prop_assert_eq!(sl2_embed(&A1, 0, m.clone()).unwrap().matrix, to_matrix(&m));
    }

    #[test]
    fn iwasawa_recomposes_on_a2(letters in prop::collection::vec(simple_letter(2, 3), 0..8)) {
        let w = Word(letters);
        let d = iwasawa_decompose(&A2, &w).unwrap();
        prop_assert!(d.gamma.is_integral());
        let g = evaluate(&A2, &d.gamma).unwrap().then(&A2, &d.b.word()).unwrap();
        prop_assert_eq!(g.matrix, evaluate(&A2, &w).unwrap().matrix);
    }

    #[test]
    fn unipotent_coordinates_round_trip(ts in prop::collection::vec(rational(), 3)) {
        let rs = A2.root_system();
        let order = height_order(rs);
        let w = Word(order.iter().zip(&ts).map(|(r, t)| Letter::chi(*r, t.clone())).collect());
        let u = evaluate(&A2, &w).unwrap();
        let back = unipotent_factorize(&A2, &u.matrix, &order).unwrap();
        prop_assert_eq!(back.into_iter().map(|(_, t)| t).collect::<Vec<_>>(), ts);
    }

    #[test]
    fn toral_coordinates_round_trip(t1 in nonzero(), t2 in nonzero()) {
        let w = Word(vec![Letter::torus(0, t1.clone()), Letter::torus(1, t2.clone())]);
        let h = evaluate(&A2, &w).unwrap();
        prop_assert_eq!(toral_factorize(&A2, &h.matrix).unwrap(), vec![t1, t2]);
    }
}
