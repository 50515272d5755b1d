use chevalley::algebra::{ChevalleyAlgebra, LieElement};
use chevalley::hwmodule::WeightModule;
use chevalley::{RootSystem, Q};

fn alg(t: &str) -> ChevalleyAlgebra {
    ChevalleyAlgebra::new(&RootSystem::from_str_type(t).unwrap()).unwrap()
}

fn x(g: &ChevalleyAlgebra, alpha: usize) -> LieElement {
    LieElement::x_basis(g.rank(), alpha)
}

fn h(g: &ChevalleyAlgebra, i: usize) -> LieElement {
    LieElement::h_basis(g.rank(), i)
}

#[test]
fn cartan_subalgebra_is_abelian() {
    for t in ["A2", "B3", "G2"] {
        let g = alg(t);
        for i in 0..g.rank() {
            for j in 0..g.rank() {
                assert!(g.bracket(&h(&g, i), &h(&g, j)).is_zero());
            }
        }
    }
}

#[test]
fn a2_brackets() {
    let g = alg("A2");
    let rs = g.root_system();
    let (a1, a2) = (rs.simple(0), rs.simple(1));
    assert_eq!(g.bracket(&x(&g, a1), &x(&g, rs.negate(a1))), h(&g, 0));
    let sum = rs.add(a1, a2).unwrap();
    let b = g.bracket(&x(&g, a1), &x(&g, a2));
    assert_eq!(b.x.len(), 1);
    let n = b.x[&sum].clone();
    assert_eq!(n.abs(), Q::one());
    // the downward α_1-string through α_2 is empty, so |n| = 0 + 1
    assert_eq!(rs.r_chain(0, a2).unwrap(), 0);
}

#[test]
fn constant_counts() {
    assert_eq!(alg("A1").constants().count(), 0);
    let a2 = alg("A2");
    // 6 unordered addable pairs, counted here in both orders
    assert_eq!(a2.constants().count(), 12);
    assert!(a2.constants().all(|(_, n)| n.abs() == 1));
    let g2 = alg("G2");
    assert_eq!(g2.constants().map(|(_, n)| n.abs()).max(), Some(3));
}

#[test]
fn magnitudes_follow_the_downward_string() {
    for t in ["A3", "B2", "C3", "G2", "F4"] {
        let g = alg(t);
        let rs = g.root_system();
        for ((a, b), n) in g.constants() {
            // count β − kα ∈ Δ for k = 1, 2, ...
            let (ra, rb) = (rs.root(a), rs.root(b));
            let mut r = 0;
            loop {
                let c: Vec<i64> = rb.iter().zip(&ra).map(|(y, x)| y - (r + 1) * x).collect();
                if rs.find(&c).is_none() {
                    break;
                }
                r += 1;
            }
            assert_eq!(n.abs(), r + 1, "{t}: n({ra:?}, {rb:?})");
            assert_eq!(g.structure_constant(b, a), Some(-n), "{t}: antisymmetry");
        }
    }
}

#[test]
fn brackets_respect_the_root_grading() {
    for t in ["A3", "B2", "G2"] {
        let g = alg(t);
        let rs = g.root_system();
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                let br = g.bracket(&x(&g, a), &x(&g, b));
                if b == rs.negate(a) {
                    assert!(br.x.is_empty());
                    assert_eq!(br.h, rs.coroot_coords(a).into_iter().map(Q::from_int).collect::<Vec<_>>());
                    continue;
                }
                assert!(br.h.iter().all(Q::is_zero));
                match rs.add(a, b) {
                    Some(c) => assert_eq!(br.x.keys().copied().collect::<Vec<_>>(), vec![c], "{t}"),
                    None => assert!(br.is_zero(), "{t}"),
                }
            }
        }
    }
}

#[test]
fn bracket_is_bilinear_and_antisymmetric() {
    let g = alg("B2");
    let q = |n, d| Q::new(n, d);
    let u = x(&g, 0).scale(&q(3, 2)).add(&h(&g, 1).scale(&q(-1, 3))).add(&x(&g, 5));
    let v = x(&g, 1).add(&x(&g, 4).scale(&q(7, 5))).add(&h(&g, 0));
    let w = x(&g, 2).scale(&q(-2, 1));
    assert_eq!(g.bracket(&u, &v), g.bracket(&v, &u).scale(&q(-1, 1)));
    assert_eq!(g.bracket(&u.add(&w), &v), g.bracket(&u, &v).add(&g.bracket(&w, &v)));
    assert!(g.bracket(&u, &u).is_zero());
}

#[test]
fn involution_examples() {
    let g = alg("A2");
    let rs = g.root_system();
    assert_eq!(g.chevalley_involution(&h(&g, 0)), h(&g, 0).scale(&Q::from_int(-1)));
    // sign convention: θ(x_α) = −x_{−α}
    assert_eq!(g.chevalley_involution(&x(&g, 0)), x(&g, rs.negate(0)).scale(&Q::from_int(-1)));
    let lhs = g.chevalley_involution(&g.bracket(&x(&g, 0), &x(&g, 1)));
    let rhs = g.bracket(&x(&g, rs.negate(0)), &x(&g, rs.negate(1)));
    assert_eq!(lhs, rhs);
}

#[test]
fn involution_is_an_automorphism_of_order_two() {
    for t in ["B3", "G2"] {
        let g = alg(t);
        for i in 0..g.dim() {
            let a = g.basis(i);
            assert_eq!(g.chevalley_involution(&g.chevalley_involution(&a)), a);
            for j in 0..g.dim() {
                let b = g.basis(j);
                let lhs = g.chevalley_involution(&g.bracket(&a, &b));
                let rhs = g.bracket(&g.chevalley_involution(&a), &g.chevalley_involution(&b));
                assert_eq!(lhs, rhs, "{t} ({i}, {j})");
            }
        }
    }
}

#[test]
fn jacobi_on_sampled_f4_triples() {
    use rand::{Rng, SeedableRng};
    let g = alg("F4");
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3000 {
        let [a, b, c] = [0; 3].map(|_| g.basis(rng.gen_range(0..g.dim())));
        let s = g
            .bracket(&a, &g.bracket(&b, &c))
            .add(&g.bracket(&b, &g.bracket(&c, &a)))
            .add(&g.bracket(&c, &g.bracket(&a, &b)));
        assert!(s.is_zero());
    }
}

#[test]
fn module_matrices_reproduce_brackets() {
    let rs = RootSystem::from_str_type("A2").unwrap();
    let g = ChevalleyAlgebra::new(&rs).unwrap();
    let v = WeightModule::new(&rs, &[vec![1, 0]]).unwrap();
    // ρ(x_{α_1+α_2}) is the commutator of the simple root matrices divided by n
    let n = g.structure_constant(0, 1).unwrap();
    let comm = v.e(0).commutator(v.e(1)).scale(&Q::new(1, n));
    assert_eq!(&comm, v.root_action(2));
    let adj = WeightModule::new(&rs, &[vec![1, 1]]).unwrap();
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let (a, b) = (g.basis(i), g.basis(j));
            let lhs = g.represent(&adj, &g.bracket(&a, &b));
            let rhs = g.represent(&adj, &a).commutator(&g.represent(&adj, &b));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn constants_agree_across_faithful_modules() {
    for t in ["B2", "G2", "A3"] {
        let rs = RootSystem::from_str_type(t).unwrap();
        let small = ChevalleyAlgebra::new(&rs).unwrap();
        let theta = rs.root_to_weight(&rs.root(rs.highest_root()));
        let adj = ChevalleyAlgebra::from_module(&WeightModule::new_unrebased(&rs, &[theta]).unwrap()).unwrap();
        assert_eq!(small.constants().collect::<Vec<_>>(), adj.constants().collect::<Vec<_>>(), "{t}");
    }
}
