//! Finite crystallographic root systems.
//!
//! Simple roots follow Bourbaki numbering, stored 0-based. In particular
//! `α₁` of `G₂` is the short root, `Bₙ` has `αₙ` short and `Cₙ` has `αₙ`
//! long. The Cartan matrix convention is `A[i][j] = ⟨α_j, h_i⟩`.
//!
//! Roots are addressed by a [`RootId`]: indices `0..N` are the positive roots
//! in height order and `N..2N` their negatives in the same order. Roots are
//! written in simple-root coordinates and weights in fundamental-weight
//! coordinates.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::integer::{hnf_rows, smith_invariants};
use crate::linalg::Matrix;
use crate::rational::Q;

pub type RootId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<CartanType> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::InvalidRank { series: series.letter(), rank })
        }
    }
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<CartanType> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(series, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Cartan matrix and symmetrizer `d` (short simple roots have `d = 1`).
pub fn cartan_data(ty: CartanType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = ty.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    let mut d = vec![1i64; n];
    match ty.series {
        Series::A => (1..n).for_each(|i| link(i - 1, i)),
        Series::B => {
            (1..n).for_each(|i| link(i - 1, i));
            a[n - 1][n - 2] = -2;
            d = vec![2; n];
            d[n - 1] = 1;
        }
        Series::C => {
            (1..n).for_each(|i| link(i - 1, i));
            a[n - 2][n - 1] = -2;
            d[n - 1] = 2;
        }
        Series::D => {
            (1..n - 1).for_each(|i| link(i - 1, i));
            link(n - 3, n - 1);
        }
        Series::E => {
            link(0, 2);
            link(1, 3);
            (3..n).for_each(|i| link(i - 1, i));
        }
        Series::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
            a[2][1] = -2;
            d = vec![2, 2, 1, 1];
        }
        Series::G => {
            link(0, 1);
            a[0][1] = -3;
            d = vec![1, 3];
        }
    }
    (a, d)
}

pub fn cartan_matrix(ty: CartanType) -> Vec<Vec<i64>> {
    cartan_data(ty).0
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    cartan: Vec<Vec<i64>>,
    d: Vec<i64>,
    positive: Vec<Vec<i64>>,
    lengths: Vec<i64>,
    index: HashMap<Vec<i64>, RootId>,
    cartan_inv: Matrix,
}

#[derive(Serialize)]
struct RootSystemDoc<'a> {
    #[serde(rename = "type")]
    ty: CartanType,
    cartan_matrix: &'a [Vec<i64>],
    positive_roots: &'a [Vec<i64>],
    root_lengths: &'a [i64],
}

impl Serialize for RootSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RootSystemDoc {
            ty: self.ty,
            cartan_matrix: &self.cartan,
            positive_roots: &self.positive,
            root_lengths: &self.lengths,
        }
        .serialize(s)
    }
}

impl RootSystem {
    pub fn new(ty: CartanType) -> RootSystem {
        let (cartan, d) = cartan_data(ty);
        let l = ty.rank;
        let simple: Vec<Vec<i64>> = (0..l).map(|i| unit(l, i)).collect();

        // Grow positive roots level by level: β + α_i is a root iff the
        // α_i-string through β extends upward, i.e. r − ⟨β, h_i⟩ > 0.
        let mut known: HashMap<Vec<i64>, ()> = simple.iter().map(|s| (s.clone(), ())).collect();
        let mut levels = vec![simple];
        loop {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in levels.last().unwrap() {
                for i in 0..l {
                    if beta == &unit(l, i) {
                        continue;
                    }
                    let mut r = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if known.contains_key(&probe) {
                            r += 1;
                        } else {
                            break;
                        }
                    }
                    let pair: i64 = (0..l).map(|j| cartan[i][j] * beta[j]).sum();
                    if r - pair > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            for r in &next {
                known.insert(r.clone(), ());
            }
            levels.push(next);
        }

        let mut positive: Vec<Vec<i64>> = levels.into_iter().flatten().collect();
        positive.sort_by(|x, y| {
            let hx: i64 = x.iter().sum();
            let hy: i64 = y.iter().sum();
            hx.cmp(&hy).then_with(|| y.cmp(x))
        });
        let n = positive.len();
        let mut index = HashMap::with_capacity(2 * n);
        for (k, r) in positive.iter().enumerate() {
            index.insert(r.clone(), k);
            index.insert(r.iter().map(|x| -x).collect(), n + k);
        }
        let dmin = *d.iter().min().unwrap();
        let lengths = positive
            .iter()
            .map(|b| {
                let mut s = 0;
                for i in 0..l {
                    for j in 0..l {
                        s += b[i] * d[i] * cartan[i][j] * b[j];
                    }
                }
                s / (2 * dmin)
            })
            .collect();
        let cartan_inv = Matrix::from_i64_rows(&cartan).inverse().expect("Cartan matrix is invertible");
        RootSystem { ty, cartan, d, positive, lengths, index, cartan_inv }
    }

    pub fn from_str_type(s: &str) -> Result<RootSystem> {
        Ok(RootSystem::new(s.parse()?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// Squared length of each positive root relative to the short roots.
    pub fn root_lengths(&self) -> &[i64] {
        &self.lengths
    }

    pub fn root_length(&self, id: RootId) -> i64 {
        self.lengths[id % self.num_positive()]
    }

    pub fn root(&self, id: RootId) -> Vec<i64> {
        let n = self.num_positive();
        if id < n {
            self.positive[id].clone()
        } else {
            self.positive[id - n].iter().map(|x| -x).collect()
        }
    }

    pub fn find(&self, coords: &[i64]) -> Option<RootId> {
        self.index.get(coords).copied()
    }

    pub fn root_id(&self, coords: &[i64]) -> Result<RootId> {
        self.find(coords).ok_or_else(|| Error::NotARoot(coords.to_vec()))
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id < self.num_positive()
    }

    pub fn negate(&self, id: RootId) -> RootId {
        let n = self.num_positive();
        if id < n {
            id + n
        } else {
            id - n
        }
    }

    /// Id of the simple root `α_i`.
    pub fn simple(&self, i: usize) -> RootId {
        i
    }

    /// Index `i` when `id` is `α_i`.
    pub fn simple_index(&self, id: RootId) -> Option<usize> {
        (id < self.rank()).then_some(id)
    }

    pub fn height(&self, coords: &[i64]) -> i64 {
        coords.iter().sum()
    }

    pub fn root_height(&self, id: RootId) -> i64 {
        let h: i64 = self.positive[id % self.num_positive()].iter().sum();
        if self.is_positive(id) {
            h
        } else {
            -h
        }
    }

    pub fn highest_root(&self) -> RootId {
        self.num_positive() - 1
    }

    /// `⟨β, h_i⟩` for `β` in simple-root coordinates.
    pub fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        self.cartan[i].iter().zip(beta).map(|(a, b)| a * b).sum()
    }

    /// A root-lattice vector in fundamental-weight coordinates.
    pub fn root_to_weight(&self, beta: &[i64]) -> Vec<i64> {
        (0..self.rank()).map(|i| self.pairing(beta, i)).collect()
    }

    /// Exact simple-root coordinates of a weight.
    pub fn weight_to_root_coords(&self, mu: &[i64]) -> Vec<Q> {
        let v: Vec<Q> = mu.iter().map(|&x| Q::from_int(x)).collect();
        self.cartan_inv.mul_vec(&v)
    }

    /// Symmetric invariant form on simple-root coordinates, `(α_i, α_i) = 2 d_i`.
    pub fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            if x[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += x[i] * self.d[i] * self.cartan[i][j] * y[j];
            }
        }
        s
    }

    /// `h_α` in terms of `h_1, …, h_ℓ`.
    pub fn coroot_coords(&self, id: RootId) -> Vec<i64> {
        let b = self.root(id);
        let norm = self.form(&b, &b);
        b.iter()
            .zip(&self.d)
            .map(|(bi, di)| {
                let num = 2 * di * bi;
                debug_assert_eq!(num % norm, 0);
                num / norm
            })
            .collect()
    }

    /// `⟨μ, h_α⟩` for a weight in fundamental coordinates.
    pub fn weight_pairing(&self, mu: &[i64], id: RootId) -> i64 {
        self.coroot_coords(id).iter().zip(mu).map(|(c, m)| c * m).sum()
    }

    /// `w_α(β)` for `β` in simple-root coordinates.
    pub fn reflect_root(&self, beta: &[i64], alpha: RootId) -> Vec<i64> {
        let w = self.root_to_weight(beta);
        let k = self.weight_pairing(&w, alpha);
        let a = self.root(alpha);
        beta.iter().zip(&a).map(|(b, a)| b - k * a).collect()
    }

    /// `w_α(μ)` for a weight in fundamental coordinates.
    pub fn reflect_weight(&self, mu: &[i64], alpha: RootId) -> Vec<i64> {
        let k = self.weight_pairing(mu, alpha);
        let a = self.root_to_weight(&self.root(alpha));
        mu.iter().zip(&a).map(|(m, a)| m - k * a).collect()
    }

    /// Simple reflection `s_i` on a weight.
    pub fn simple_reflect_weight(&self, mu: &[i64], i: usize) -> Vec<i64> {
        let k = mu[i];
        (0..self.rank()).map(|j| mu[j] - k * self.cartan[j][i]).collect()
    }

    /// Applies a Weyl word to a root; the rightmost letter acts first.
    pub fn apply_word_root(&self, word: &[usize], beta: &[i64]) -> Vec<i64> {
        word.iter().rev().fold(beta.to_vec(), |b, &i| self.reflect_root(&b, i))
    }

    pub fn apply_word_weight(&self, word: &[usize], mu: &[i64]) -> Vec<i64> {
        word.iter().rev().fold(mu.to_vec(), |m, &i| self.simple_reflect_weight(&m, i))
    }

    /// Writes a positive root as `w·α_i` with `w` given by a reduced word.
    pub fn express_root(&self, id: RootId) -> (usize, Vec<usize>) {
        assert!(self.is_positive(id), "express_root needs a positive root");
        let mut beta = self.root(id);
        let mut word = Vec::new();
        while self.height(&beta) > 1 {
            let i = (0..self.rank()).find(|&i| self.pairing(&beta, i) > 0).expect("non-simple root has a descent");
            beta = self.reflect_root(&beta, i);
            word.push(i);
        }
        let i = beta.iter().position(|&x| x == 1).unwrap();
        (i, self.reduce_word(&word))
    }

    /// A reduced word for the element represented by `word`.
    pub fn reduce_word(&self, word: &[usize]) -> Vec<usize> {
        let rho = vec![1i64; self.rank()];
        let mut mu = self.apply_word_weight(word, &rho);
        let mut out = Vec::new();
        while let Some(i) = mu.iter().position(|&x| x < 0) {
            mu = self.simple_reflect_weight(&mu, i);
            out.push(i);
        }
        out
    }

    /// Largest `p` with `β + kα ∈ Δ` for `0 ≤ k ≤ p`.
    pub fn p_chain(&self, alpha: RootId, beta: RootId) -> Result<i64> {
        self.chain(alpha, beta, 1)
    }

    /// Largest `r` with `β − kα ∈ Δ` for `0 ≤ k ≤ r`.
    pub fn r_chain(&self, alpha: RootId, beta: RootId) -> Result<i64> {
        self.chain(alpha, beta, -1)
    }

    fn chain(&self, alpha: RootId, beta: RootId, dir: i64) -> Result<i64> {
        if alpha == beta || alpha == self.negate(beta) {
            return Err(Error::ProportionalRoots);
        }
        let a = self.root(alpha);
        let mut b = self.root(beta);
        let mut k = 0;
        loop {
            for (x, y) in b.iter_mut().zip(&a) {
                *x += dir * y;
            }
            if !self.is_root(&b) {
                return Ok(k);
            }
            k += 1;
        }
    }

    /// `α + β` when it is a root.
    pub fn add(&self, alpha: RootId, beta: RootId) -> Option<RootId> {
        let s: Vec<i64> = self.root(alpha).iter().zip(self.root(beta)).map(|(a, b)| a + b).collect();
        self.find(&s)
    }

    /// Nontrivial invariant factors of `P/Q`.
    pub fn fundamental_group(&self) -> Vec<i64> {
        let m: Vec<Vec<BigInt>> = self.cartan.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        smith_invariants(&m)
            .into_iter()
            .filter(|x| !num_traits::One::is_one(x))
            .map(|x| i64::try_from(x).expect("small invariant"))
            .collect()
    }

    pub fn cartan_determinant(&self) -> i64 {
        Matrix::from_i64_rows(&self.cartan).determinant().to_i64().unwrap()
    }

    /// `dep(μ) = ht(λ − μ)`, defined when `λ − μ ∈ Q⁺`.
    pub fn depth(&self, mu: &[i64], lambda: &[i64]) -> Result<i64> {
        let diff: Vec<i64> = lambda.iter().zip(mu).map(|(l, m)| l - m).collect();
        let coords = self.weight_to_root_coords(&diff);
        let below = || Error::NotBelow { mu: mu.to_vec(), lambda: lambda.to_vec() };
        let mut h = 0;
        for c in coords {
            let v = c.to_i64().ok_or_else(below)?;
            if v < 0 {
                return Err(below());
            }
            h += v;
        }
        Ok(h)
    }

    /// Order of `s_i s_j`, read from `A_ij A_ji`.
    pub fn coxeter_order(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.cartan[i][j] * self.cartan[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => panic!("not a finite type product {p}"),
        }
    }

    /// The lattice `L_V` generated by `Q` and the given dominant weights.
    pub fn weight_lattice(&self, lambdas: &[Vec<i64>]) -> Result<WeightLattice> {
        let l = self.rank();
        for lam in lambdas {
            if lam.len() != l {
                return Err(Error::WrongLength { expected: l, got: lam.len() });
            }
            if lam.iter().any(|&x| x < 0) {
                return Err(Error::NotDominant(lam.clone()));
            }
        }
        let mut gens: Vec<Vec<BigInt>> =
            (0..l).map(|i| (0..l).map(|j| BigInt::from(self.cartan[j][i])).collect()).collect();
        gens.extend(lambdas.iter().map(|lam| lam.iter().map(|&x| BigInt::from(x)).collect()));
        let hnf = hnf_rows(&gens);
        let basis: Vec<Vec<i64>> =
            hnf.iter().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
        let bm = Matrix::from_i64_rows(&basis);
        let index = bm.determinant().abs();
        let inv = bm.inverse().expect("L_V has full rank");
        let dual_basis: Vec<Vec<Q>> = (0..l).map(|c| inv.column(c)).collect();
        let index = index.numer();
        Ok(WeightLattice { basis, dual_basis, index_in_p: i64::try_from(index.abs()).unwrap() })
    }
}

/// `L_V` with its ℤ-basis (rows, fundamental coordinates) and the dual
/// basis of `L_V*` (coweights in `h_i` coordinates).
#[derive(Clone, Debug, Serialize)]
pub struct WeightLattice {
    pub basis: Vec<Vec<i64>>,
    pub dual_basis: Vec<Vec<Q>>,
    pub index_in_p: i64,
}

impl WeightLattice {
    pub fn contains(&self, mu: &[i64]) -> bool {
        self.dual_basis.iter().all(|w| {
            let s: Q = w.iter().zip(mu).map(|(a, &b)| a * &Q::from_int(b)).sum();
            s.is_integer()
        })
    }
}

fn unit(l: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; l];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_str_type(s).unwrap()
    }

    #[test]
    fn parses_types() {
        assert_eq!("g2".parse::<CartanType>().unwrap().to_string(), "G2");
        assert!("E9".parse::<CartanType>().is_err());
        assert!("B1".parse::<CartanType>().is_err());
        assert!("X3".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
    }

    #[test]
    fn small_cartan_matrices() {
        assert_eq!(rs("A1").cartan_matrix(), &[vec![2]]);
        assert_eq!(rs("A2").cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(rs("G2").cartan_matrix(), &[vec![2, -3], vec![-1, 2]]);
    }

    #[test]
    fn cartan_matrices_are_symmetrizable() {
        for t in ["A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(t);
            let a = r.cartan_matrix();
            let d = r.symmetrizer();
            for i in 0..r.rank() {
                assert_eq!(a[i][i], 2);
                for j in 0..r.rank() {
                    assert_eq!(d[i] * a[i][j], d[j] * a[j][i], "{t}");
                    assert_eq!(a[i][j] == 0, a[j][i] == 0);
                }
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        let expect = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ];
        for (t, n) in expect {
            assert_eq!(rs(t).num_positive(), n, "{t}");
        }
        let g2 = rs("G2");
        assert_eq!(g2.height(&g2.root(g2.highest_root())), 5);
    }

    #[test]
    fn order_is_by_height_with_simple_roots_first() {
        let r = rs("A3");
        for i in 0..3 {
            assert_eq!(r.root(i), unit(3, i));
        }
        let hs: Vec<i64> = (0..r.num_positive()).map(|k| r.root_height(k)).collect();
        assert!(hs.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn reflections() {
        let r = rs("A2");
        assert_eq!(r.reflect_root(&[1, 0], 0), vec![-1, 0]);
        assert_eq!(r.reflect_root(&[0, 1], 0), vec![1, 1]);
        assert_eq!(r.reflect_weight(&[0, 1], 0), vec![0, 1]);
    }

    #[test]
    fn express_root_examples() {
        let r = rs("A2");
        assert_eq!(r.express_root(0), (0, vec![]));
        assert_eq!(r.express_root(2), (1, vec![0]));
        let g = rs("G2");
        let top = g.highest_root();
        let (i, w) = g.express_root(top);
        assert_eq!(g.apply_word_root(&w, &unit(2, i)), g.root(top));
    }

    #[test]
    fn coroots() {
        let a2 = rs("A2");
        assert_eq!(a2.coroot_coords(2), vec![1, 1]);
        assert_eq!(a2.coroot_coords(a2.negate(2)), vec![-1, -1]);
        let b2 = rs("B2");
        for k in 0..b2.num_roots() {
            let _ = b2.coroot_coords(k);
        }
        assert_eq!(b2.coroot_coords(b2.find(&[1, 1]).unwrap()), vec![2, 1]);
    }

    #[test]
    fn chains() {
        let a2 = rs("A2");
        assert_eq!(a2.p_chain(0, 1).unwrap(), 1);
        assert_eq!(a2.p_chain(0, 2).unwrap(), 0);
        assert!(a2.p_chain(0, a2.negate(0)).is_err());
        let g2 = rs("G2");
        assert_eq!(g2.p_chain(0, 1).unwrap(), 3);
        assert_eq!(g2.r_chain(0, g2.find(&[2, 1]).unwrap()).unwrap(), 2);
    }

    #[test]
    fn fundamental_groups() {
        assert_eq!(rs("A1").fundamental_group(), vec![2]);
        assert_eq!(rs("A2").fundamental_group(), vec![3]);
        assert_eq!(rs("D4").fundamental_group(), vec![2, 2]);
        assert_eq!(rs("D5").fundamental_group(), vec![4]);
        for t in ["E8", "F4", "G2"] {
            assert!(rs(t).fundamental_group().is_empty());
        }
    }

    #[test]
    fn weight_lattices() {
        let a1 = rs("A1");
        assert_eq!(a1.weight_lattice(&[vec![1]]).unwrap().index_in_p, 1);
        let a2 = rs("A2");
        assert_eq!(a2.weight_lattice(&[vec![1, 0]]).unwrap().index_in_p, 1);
        let adj = a2.weight_lattice(&[vec![1, 1]]).unwrap();
        assert_eq!(adj.index_in_p, 3);
        assert!(!adj.contains(&[1, 0]));
        assert!(adj.contains(&[2, -1]));
        assert!(a2.weight_lattice(&[vec![-1, 0]]).is_err());
    }

    #[test]
    fn depths() {
        let a2 = rs("A2");
        let lam = vec![1, 1];
        assert_eq!(a2.depth(&lam, &lam).unwrap(), 0);
        // λ − α1 − α2 = λ − (1,1) in fundamental coordinates
        assert_eq!(a2.depth(&[0, 0], &lam).unwrap(), 2);
        assert!(a2.depth(&[2, 2], &lam).is_err());
        assert!(a2.depth(&[1, 0], &lam).is_err());
    }

    #[test]
    fn coxeter_relations() {
        for t in ["A3", "B3", "C3", "D4", "F4", "G2"] {
            let r = rs(t);
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    let m = r.coxeter_order(i, j);
                    let word: Vec<usize> = std::iter::repeat_n([i, j], m).flatten().collect();
                    for k in 0..r.num_roots() {
                        assert_eq!(r.apply_word_root(&word, &r.root(k)), r.root(k));
                    }
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(rs("A2")).unwrap();
        assert_eq!(v["type"], "A2");
        assert_eq!(v["positive_roots"].as_array().unwrap().len(), 3);
        assert_eq!(v["root_lengths"], serde_json::json!([1, 1, 1]));
    }
}
