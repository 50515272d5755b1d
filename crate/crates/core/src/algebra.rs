//! The Lie ring `𝔤_ℤ` on a Chevalley basis.
//!
//! Root vectors are produced from `e_i = x_{α_i}` and `f_i = x_{−α_i}` by
//! extraspecial pairs. For a non-simple positive root `ξ` let `α_i` be the
//! first simple root with `ξ − α_i ∈ Δ⁺`, put `β = ξ − α_i` and let `r` be
//! the length of the `α_i`-string below `β`. Then
//!
//! ```text
//! x_ξ  =  [x_{α_i}, x_β] / (r + 1)
//! x_−ξ = −[x_{−α_i}, x_{−β}] / (r + 1)
//! ```
//!
//! so `n_{α_i, β} = r + 1 > 0` and `θ(x_α) = −x_{−α}`, `θ(h) = −h` is an
//! automorphism. Every other constant is read off from these matrices.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hwmodule::{fundamental_weight, weyl_dimension, WeightModule};
use crate::linalg::SparseMatrix;
use crate::rational::Q;
use crate::rootdata::{RootId, RootSystem};

/// `ρ(x_α)` for every root, indexed by [`RootId`].
pub fn root_matrices(rs: &RootSystem, e: &[SparseMatrix], f: &[SparseMatrix]) -> Result<Vec<SparseMatrix>> {
    let n = rs.num_positive();
    let dim = e.first().map_or(0, SparseMatrix::rows);
    let mut x: Vec<SparseMatrix> = vec![SparseMatrix::zeros(dim, dim); 2 * n];
    let l = rs.rank();
    x[..l].clone_from_slice(&e[..l]);
    x[n..n + l].clone_from_slice(&f[..l]);
    for xi in rs.rank()..n {
        let (i, beta) = extraspecial(rs, xi);
        let r = rs.r_chain(i, beta)?;
        let k = Q::new(1, r + 1);
        x[xi] = x[i].commutator(&x[beta]).scale(&k);
        x[n + xi] = x[n + i].commutator(&x[n + beta]).scale(&-k);
    }
    Ok(x)
}

/// `(i, β)` with `ξ = α_i + β` the extraspecial decomposition.
pub fn extraspecial(rs: &RootSystem, xi: RootId) -> (usize, RootId) {
    let c = rs.root(xi);
    for i in 0..rs.rank() {
        let mut b = c.clone();
        b[i] -= 1;
        if let Some(beta) = rs.find(&b) {
            if rs.is_positive(beta) {
                return (i, beta);
            }
        }
    }
    panic!("root {c:?} has no extraspecial pair")
}

/// Element of `𝔤_ℚ` in the Chevalley basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    pub h: Vec<Q>,
    pub x: BTreeMap<RootId, Q>,
}

impl LieElement {
    pub fn zero(rank: usize) -> LieElement {
        LieElement { h: vec![Q::zero(); rank], x: BTreeMap::new() }
    }

    pub fn h_basis(rank: usize, i: usize) -> LieElement {
        let mut e = LieElement::zero(rank);
        e.h[i] = Q::one();
        e
    }

    pub fn x_basis(rank: usize, alpha: RootId) -> LieElement {
        let mut e = LieElement::zero(rank);
        e.x.insert(alpha, Q::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().all(Q::is_zero) && self.x.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.h.iter().all(Q::is_integer) && self.x.values().all(Q::is_integer)
    }

    pub fn add_x(&mut self, alpha: RootId, c: &Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.x.entry(alpha).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.x.remove(&alpha);
        }
    }

    pub fn scale(&self, c: &Q) -> LieElement {
        let mut out = LieElement::zero(self.h.len());
        out.h = self.h.iter().map(|x| x * c).collect();
        for (a, v) in &self.x {
            out.add_x(*a, &(v * c));
        }
        out
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (a, b) in out.h.iter_mut().zip(&other.h) {
            *a += b;
        }
        for (k, v) in &other.x {
            out.add_x(*k, v);
        }
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        self.add(&other.scale(&Q::from_int(-1)))
    }
}

#[derive(Serialize)]
pub struct ConstantEntry {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub n: i64,
}

/// Structure constants `[x_α, x_β] = n_{αβ} x_{α+β}`.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    n: HashMap<(RootId, RootId), i64>,
}

impl ChevalleyAlgebra {
    pub fn new(rs: &RootSystem) -> Result<ChevalleyAlgebra> {
        let module = WeightModule::new_unrebased(rs, &[smallest_fundamental(rs)])?;
        ChevalleyAlgebra::from_module(&module)
    }

    /// Reads the constants from the root matrices of a faithful module.
    pub fn from_module(module: &WeightModule) -> Result<ChevalleyAlgebra> {
        let rs = module.root_system();
        let mut n = HashMap::new();
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                let Some(c) = rs.add(a, b) else { continue };
                let br = module.root_action(a).commutator(module.root_action(b));
                let k = br
                    .ratio_to(module.root_action(c))
                    .ok_or_else(|| Error::Internal(format!("[x_{a}, x_{b}] is not a multiple of x_{c}")))?;
                let k = k.to_i64().ok_or_else(|| Error::Internal(format!("n({a},{b}) = {k} is not an integer")))?;
                n.insert((a, b), k);
            }
        }
        Ok(ChevalleyAlgebra { rs: rs.clone(), n })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Dimension of `𝔤`.
    pub fn dim(&self) -> usize {
        self.rs.rank() + self.rs.num_roots()
    }

    pub fn structure_constant(&self, a: RootId, b: RootId) -> Option<i64> {
        self.n.get(&(a, b)).copied()
    }

    /// All ordered addable pairs.
    pub fn constants(&self) -> impl Iterator<Item = ((RootId, RootId), i64)> + '_ {
        let mut v: Vec<_> = self.n.iter().map(|(k, v)| (*k, *v)).collect();
        v.sort();
        v.into_iter()
    }

    pub fn export(&self) -> Vec<ConstantEntry> {
        self.constants()
            .map(|((a, b), n)| ConstantEntry { alpha: self.rs.root(a), beta: self.rs.root(b), n })
            .collect()
    }

    /// Basis element `k`: `h_1..h_ℓ` first, then `x_α` by [`RootId`].
    pub fn basis(&self, k: usize) -> LieElement {
        let l = self.rank();
        if k < l {
            LieElement::h_basis(l, k)
        } else {
            LieElement::x_basis(l, k - l)
        }
    }

    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> LieElement {
        let l = self.rank();
        let mut out = LieElement::zero(l);
        for (i, hi) in a.h.iter().enumerate() {
            if hi.is_zero() {
                continue;
            }
            for (beta, c) in &b.x {
                let k = self.rs.pairing(&self.rs.root(*beta), i);
                out.add_x(*beta, &(&(hi * c) * &Q::from_int(k)));
            }
        }
        for (j, hj) in b.h.iter().enumerate() {
            if hj.is_zero() {
                continue;
            }
            for (alpha, c) in &a.x {
                let k = self.rs.pairing(&self.rs.root(*alpha), j);
                out.add_x(*alpha, &(&(hj * c) * &Q::from_int(-k)));
            }
        }
        for (alpha, ca) in &a.x {
            for (beta, cb) in &b.x {
                let c = ca * cb;
                if *beta == self.rs.negate(*alpha) {
                    for (o, k) in out.h.iter_mut().zip(self.rs.coroot_coords(*alpha)) {
                        *o += &(&c * &Q::from_int(k));
                    }
                } else if let Some(g) = self.rs.add(*alpha, *beta) {
                    let n = self.n[&(*alpha, *beta)];
                    out.add_x(g, &(&c * &Q::from_int(n)));
                }
            }
        }
        out
    }

    /// `θ(h) = −h`, `θ(x_α) = −x_{−α}`.
    pub fn chevalley_involution(&self, a: &LieElement) -> LieElement {
        let mut out = LieElement::zero(self.rank());
        out.h = a.h.iter().map(|x| -x.clone()).collect();
        for (alpha, c) in &a.x {
            out.add_x(self.rs.negate(*alpha), &-c.clone());
        }
        out
    }

    /// `ρ(a)` on a module whose root matrices follow the same convention.
    pub fn represent(&self, module: &WeightModule, a: &LieElement) -> SparseMatrix {
        let dim = module.dim();
        let mut m = SparseMatrix::zeros(dim, dim);
        for (i, c) in a.h.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&module.h_action(i).scale(c));
            }
        }
        for (alpha, c) in &a.x {
            m = m.add(&module.root_action(*alpha).scale(c));
        }
        m
    }
}

/// The fundamental weight with the smallest module.
pub fn smallest_fundamental(rs: &RootSystem) -> Vec<i64> {
    let l = rs.rank();
    (0..l).map(|i| fundamental_weight(l, i)).min_by_key(|w| weyl_dimension(rs, w)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(t: &str) -> ChevalleyAlgebra {
        ChevalleyAlgebra::new(&RootSystem::from_str_type(t).unwrap()).unwrap()
    }

    #[test]
    fn a1_has_no_constants() {
        assert_eq!(alg("A1").constants().count(), 0);
    }

    #[test]
    fn a2_constants() {
        let g = alg("A2");
        assert_eq!(g.constants().count(), 12);
        assert_eq!(g.constants().filter(|((a, b), _)| a < b).count(), 6);
        assert!(g.constants().all(|(_, n)| n.abs() == 1));
        assert_eq!(g.structure_constant(0, 1), Some(1));
        let l = 2;
        let h = g.bracket(&LieElement::x_basis(l, 0), &LieElement::x_basis(l, 3));
        assert_eq!(h, LieElement::h_basis(l, 0));
    }

    #[test]
    fn g2_magnitudes() {
        let g = alg("G2");
        let max = g.constants().map(|(_, n)| n.abs()).max().unwrap();
        assert_eq!(max, 3);
        for ((a, b), n) in g.constants() {
            assert_eq!(n.abs(), g.root_system().r_chain(a, b).unwrap() + 1);
            assert_eq!(g.structure_constant(b, a), Some(-n));
        }
    }

    #[test]
    fn involution_is_automorphism_on_b2() {
        let g = alg("B2");
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let (x, y) = (g.basis(i), g.basis(j));
                let lhs = g.chevalley_involution(&g.bracket(&x, &y));
                let rhs = g.bracket(&g.chevalley_involution(&x), &g.chevalley_involution(&y));
                assert_eq!(lhs, rhs);
            }
            assert_eq!(g.chevalley_involution(&g.chevalley_involution(&g.basis(i))), g.basis(i));
        }
    }
}
