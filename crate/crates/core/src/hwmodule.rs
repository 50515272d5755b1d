//! Highest-weight modules, their weight spaces and admissible lattices.
//!
//! A summand `V^λ` is built depth by depth as a quotient of the Verma module.
//! Candidate vectors of weight `μ` are `f_i·b` for basis vectors `b` of
//! `V_{μ+α_i}`. Two candidates agree in `V^λ` exactly when every `e_j` sends
//! them to the same vector, since `V^λ` has no singular vectors below `λ`.
//! So `V_μ` is identified with the column space of the stacked `e_j`-images.
//!
//! After construction the basis is replaced by a ℤ-basis of the admissible
//! lattice `V_ℤ = 𝒰_ℤ·v_λ`. From then on `V_ℤ = ℤ^dim` in module
//! coordinates and every divided power acts by an integer matrix.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::algebra::root_matrices;
use crate::error::{Error, Result};
use crate::linalg::integer::{hnf_coordinates, hnf_rows};
use crate::linalg::{independent_columns, solve_full_column_rank, Matrix, SparseMatrix};
use crate::rational::Q;
use crate::rootdata::{RootId, RootSystem};

/// One weight space of one summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSpace {
    pub summand: usize,
    pub weight: Vec<i64>,
    pub depth: i64,
    pub offset: usize,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct WeightModule {
    rs: RootSystem,
    summands: Vec<Vec<i64>>,
    spaces: Vec<WeightSpace>,
    space_of: Vec<usize>,
    highest: Vec<usize>,
    e: Vec<SparseMatrix>,
    f: Vec<SparseMatrix>,
    roots: Vec<SparseMatrix>,
    powers: Vec<OnceLock<Vec<SparseMatrix>>>,
    compact: OnceLock<Option<Box<WeightModule>>>,
}

/// Local data for one summand before assembly.
struct Summand {
    spaces: Vec<(Vec<i64>, i64, usize)>,
    index: HashMap<Vec<i64>, usize>,
    /// `(i, s)` maps space `s` to the space of weight `μ_s + α_i`.
    e: HashMap<(usize, usize), Matrix>,
    /// `(i, s)` maps the space of weight `μ_s + α_i` to space `s`.
    f: HashMap<(usize, usize), Matrix>,
}

fn shift(rs: &RootSystem, mu: &[i64], i: usize, k: i64) -> Vec<i64> {
    let a = rs.cartan_matrix();
    (0..mu.len()).map(|j| mu[j] + k * a[j][i]).collect()
}

fn build_summand(rs: &RootSystem, lambda: &[i64]) -> Summand {
    let l = rs.rank();
    let mut s = Summand {
        spaces: vec![(lambda.to_vec(), 0, 1)],
        index: HashMap::from([(lambda.to_vec(), 0)]),
        e: HashMap::new(),
        f: HashMap::new(),
    };
    let mut level = vec![0usize];
    let mut depth = 0;
    while !level.is_empty() {
        depth += 1;
        let mut targets: Vec<Vec<i64>> = Vec::new();
        for &t in &level {
            for i in 0..l {
                let mu = shift(rs, &s.spaces[t].0, i, -1);
                if !targets.contains(&mu) {
                    targets.push(mu);
                }
            }
        }
        targets.sort_by(|a, b| b.cmp(a));
        let mut next = Vec::new();
        for mu in targets {
            let up: Vec<Option<usize>> = (0..l).map(|i| s.index.get(&shift(rs, &mu, i, 1)).copied()).collect();
            let mut row_off = vec![0usize; l];
            let mut nrows = 0;
            for j in 0..l {
                row_off[j] = nrows;
                if let Some(u) = up[j] {
                    nrows += s.spaces[u].2;
                }
            }
            let mut cands: Vec<(usize, usize)> = Vec::new();
            for i in 0..l {
                if let Some(u) = up[i] {
                    cands.extend((0..s.spaces[u].2).map(|k| (i, k)));
                }
            }
            let mut phi = Matrix::zeros(nrows, cands.len());
            for (c, &(i, k)) in cands.iter().enumerate() {
                let ui = up[i].unwrap();
                for j in 0..l {
                    let Some(uj) = up[j] else { continue };
                    // e_j f_i b = f_i (e_j b) + δ_ij ⟨μ+α_i, h_i⟩ b
                    if let (Some(eb), Some(fb)) = (s.e.get(&(j, ui)), s.f.get(&(i, uj))) {
                        let col = eb.column(k);
                        let v = fb.mul_vec(&col);
                        for (r, x) in v.into_iter().enumerate() {
                            phi.set(row_off[j] + r, c, x);
                        }
                    }
                    if i == j {
                        let h = s.spaces[ui].0[i];
                        let cur = phi.get(row_off[j] + k, c) + &Q::from_int(h);
                        phi.set(row_off[j] + k, c, cur);
                    }
                }
            }
            let chosen = independent_columns(&phi);
            if chosen.is_empty() {
                continue;
            }
            let dim = chosen.len();
            let basis = Matrix::from_rows((0..nrows).map(|r| chosen.iter().map(|&c| phi.get(r, c).clone()).collect()).collect());
            let sid = s.spaces.len();
            s.spaces.push((mu.clone(), depth, dim));
            s.index.insert(mu.clone(), sid);
            for j in 0..l {
                if let Some(uj) = up[j] {
                    let dj = s.spaces[uj].2;
                    let blk = Matrix::from_rows((0..dj).map(|r| basis.row(row_off[j] + r).to_vec()).collect());
                    s.e.insert((j, sid), blk);
                }
            }
            for i in 0..l {
                let Some(ui) = up[i] else { continue };
                let di = s.spaces[ui].2;
                let mut blk = Matrix::zeros(dim, di);
                for k in 0..di {
                    let c = cands.iter().position(|&x| x == (i, k)).unwrap();
                    let x = solve_full_column_rank(&basis, &phi.column(c)).expect("candidate lies in the span");
                    for (r, v) in x.into_iter().enumerate() {
                        blk.set(r, k, v);
                    }
                }
                s.f.insert((i, sid), blk);
            }
            next.push(sid);
        }
        level = next;
    }
    s
}

/// Row HNF of a set of rational vectors, returned as rational rows.
pub fn rational_hnf(vectors: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut den = BigInt::one();
    for v in vectors {
        for x in v {
            den = den.lcm(&x.denom());
        }
    }
    let dq = Q::from_bigint(den.clone());
    let ints: Vec<Vec<BigInt>> = vectors.iter().map(|v| v.iter().map(|x| (x * &dq).numer()).collect()).collect();
    hnf_rows(&ints)
        .into_iter()
        .map(|r| r.into_iter().map(|x| &Q::from_bigint(x) / &dq).collect())
        .collect()
}

/// Divided-power recursion `V_{μ,ℤ} = Σ f_i^{(m)} V_{μ+mα_i,ℤ}`, as HNF rows per space.
fn summand_lattice(rs: &RootSystem, s: &Summand) -> Vec<Vec<Vec<Q>>> {
    let l = rs.rank();
    let mut lat: Vec<Vec<Vec<Q>>> = vec![Vec::new(); s.spaces.len()];
    lat[0] = vec![vec![Q::one()]];
    for sid in 1..s.spaces.len() {
        let mu = &s.spaces[sid].0;
        let mut gens: Vec<Vec<Q>> = Vec::new();
        for i in 0..l {
            for m in 1.. {
                let Some(&top) = s.index.get(&shift(rs, mu, i, m)) else { break };
                let mut vs: Vec<Vec<Q>> = lat[top].clone();
                let mut cur_w = shift(rs, mu, i, m);
                let mut fact = Q::one();
                for step in 1..=m {
                    cur_w = shift(rs, &cur_w, i, -1);
                    let tgt = s.index[&cur_w];
                    let blk = &s.f[&(i, tgt)];
                    vs = vs.iter().map(|v| blk.mul_vec(v)).collect();
                    fact = &fact * &Q::from_int(step);
                }
                let inv = fact.recip();
                gens.extend(vs.into_iter().map(|v| v.iter().map(|x| x * &inv).collect::<Vec<_>>()));
            }
        }
        let h = rational_hnf(&gens);
        assert_eq!(h.len(), s.spaces[sid].2, "lattice rank equals multiplicity");
        lat[sid] = h;
    }
    lat
}

fn rebase(rs: &RootSystem, s: &mut Summand, lat: &[Vec<Vec<Q>>]) {
    // columns of P_s are the lattice basis vectors
    let p: Vec<Matrix> = lat.iter().map(|rows| Matrix::from_rows(rows.clone()).transpose()).collect();
    let pinv: Vec<Matrix> = p.iter().map(|m| m.inverse().expect("lattice basis is a basis")).collect();
    let up_of = |s: &Summand, i: usize, sid: usize| s.index[&shift(rs, &s.spaces[sid].0, i, 1)];
    let keys: Vec<(usize, usize)> = s.e.keys().copied().collect();
    for (i, sid) in keys {
        let up = up_of(s, i, sid);
        let nm = pinv[up].mul(&s.e[&(i, sid)]).mul(&p[sid]);
        s.e.insert((i, sid), nm);
    }
    let keys: Vec<(usize, usize)> = s.f.keys().copied().collect();
    for (i, sid) in keys {
        let up = up_of(s, i, sid);
        let nm = pinv[sid].mul(&s.f[&(i, sid)]).mul(&p[up]);
        s.f.insert((i, sid), nm);
    }
}

impl WeightModule {
    /// `V^{λ_1} ⊕ … ⊕ V^{λ_k}` in a ℤ-basis of its admissible lattice.
    pub fn new(rs: &RootSystem, lambdas: &[Vec<i64>]) -> Result<WeightModule> {
        WeightModule::build(rs, lambdas, true)
    }

    /// Same module in the basis produced directly by the construction.
    pub fn new_unrebased(rs: &RootSystem, lambdas: &[Vec<i64>]) -> Result<WeightModule> {
        WeightModule::build(rs, lambdas, false)
    }

    fn build(rs: &RootSystem, lambdas: &[Vec<i64>], rebase_to_lattice: bool) -> Result<WeightModule> {
        let l = rs.rank();
        for lam in lambdas {
            if lam.len() != l {
                return Err(Error::WrongLength { expected: l, got: lam.len() });
            }
            if lam.iter().any(|&x| x < 0) {
                return Err(Error::NotDominant(lam.clone()));
            }
        }
        if lambdas.iter().all(|lam| lam.iter().all(|&x| x == 0)) {
            return Err(Error::TrivialModule);
        }
        let mut spaces = Vec::new();
        let mut highest = Vec::new();
        let mut te: Vec<Vec<(usize, usize, Q)>> = vec![Vec::new(); l];
        let mut tf: Vec<Vec<(usize, usize, Q)>> = vec![Vec::new(); l];
        let mut offset = 0;
        for (k, lam) in lambdas.iter().enumerate() {
            let mut s = build_summand(rs, lam);
            if rebase_to_lattice {
                let lat = summand_lattice(rs, &s);
                rebase(rs, &mut s, &lat);
            }
            let offs: Vec<usize> = s
                .spaces
                .iter()
                .scan(offset, |o, (_, _, d)| {
                    let cur = *o;
                    *o += d;
                    Some(cur)
                })
                .collect();
            highest.push(offset);
            for (sid, (w, dep, dim)) in s.spaces.iter().enumerate() {
                spaces.push(WeightSpace { summand: k, weight: w.clone(), depth: *dep, offset: offs[sid], dim: *dim });
            }
            for (&(i, sid), m) in &s.e {
                let up = s.index[&shift(rs, &s.spaces[sid].0, i, 1)];
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        if !m.get(r, c).is_zero() {
                            te[i].push((offs[up] + r, offs[sid] + c, m.get(r, c).clone()));
                        }
                    }
                }
            }
            for (&(i, sid), m) in &s.f {
                let up = s.index[&shift(rs, &s.spaces[sid].0, i, 1)];
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        if !m.get(r, c).is_zero() {
                            tf[i].push((offs[sid] + r, offs[up] + c, m.get(r, c).clone()));
                        }
                    }
                }
            }
            offset += s.spaces.iter().map(|x| x.2).sum::<usize>();
        }
        let dim = offset;
        let e: Vec<SparseMatrix> = te.into_iter().map(|t| SparseMatrix::from_triplets(dim, dim, t)).collect();
        let f: Vec<SparseMatrix> = tf.into_iter().map(|t| SparseMatrix::from_triplets(dim, dim, t)).collect();
        let roots = root_matrices(rs, &e, &f)?;
        let mut space_of = vec![0; dim];
        for (k, sp) in spaces.iter().enumerate() {
            for x in sp.offset..sp.offset + sp.dim {
                space_of[x] = k;
            }
        }
        let powers = (0..roots.len()).map(|_| OnceLock::new()).collect();
        Ok(WeightModule {
            rs: rs.clone(),
            summands: lambdas.to_vec(),
            spaces,
            space_of,
            highest,
            e,
            f,
            roots,
            powers,
            compact: OnceLock::new(),
        })
    }

    /// A module for the same group `G_V(ℚ)` with the fewest dimensions this
    /// crate knows how to find, or `self` when nothing smaller exists.
    ///
    /// Both modules have the same weight lattice `L_V`, so a word evaluates to
    /// the identity on one exactly when it does on the other.
    pub fn compact(&self) -> &WeightModule {
        let c = self.compact.get_or_init(|| {
            let lambdas = compact_weights(&self.rs, &self.summands);
            let dim: usize = lambdas.iter().map(|l| weyl_dimension(&self.rs, l).try_into().unwrap_or(usize::MAX)).sum();
            if dim >= self.dim() {
                return None;
            }
            let m = WeightModule::new(&self.rs, &lambdas).ok()?;
            same_lattice(&m.weight_lattice(), &self.weight_lattice()).then(|| Box::new(m))
        });
        c.as_deref().unwrap_or(self)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn summands(&self) -> &[Vec<i64>] {
        &self.summands
    }

    pub fn dim(&self) -> usize {
        self.space_of.len()
    }

    pub fn spaces(&self) -> &[WeightSpace] {
        &self.spaces
    }

    pub fn weight_of(&self, k: usize) -> &[i64] {
        &self.spaces[self.space_of[k]].weight
    }

    pub fn space_index_of(&self, k: usize) -> usize {
        self.space_of[k]
    }

    /// Basis index of `v_{λ_j}`.
    pub fn highest_vectors(&self) -> &[usize] {
        &self.highest
    }

    pub fn e(&self, i: usize) -> &SparseMatrix {
        &self.e[i]
    }

    pub fn f(&self, i: usize) -> &SparseMatrix {
        &self.f[i]
    }

    /// `ρ(x_α)`.
    pub fn root_action(&self, alpha: RootId) -> &SparseMatrix {
        &self.roots[alpha]
    }

    /// `[x^{(1)}, x^{(2)}, …]` up to the last nonzero divided power.
    pub fn divided_powers(&self, alpha: RootId) -> &[SparseMatrix] {
        self.powers[alpha].get_or_init(|| {
            let x = &self.roots[alpha];
            let mut out = vec![x.clone()];
            loop {
                let m = out.len() as i64 + 1;
                let next = out.last().unwrap().mul(x).scale(&Q::new(1, m));
                if next.is_zero() {
                    break;
                }
                out.push(next);
            }
            out
        })
    }

    pub fn divided_power(&self, alpha: RootId, m: i64) -> Result<SparseMatrix> {
        if m < 0 {
            return Err(Error::NegativeExponent(m));
        }
        if m == 0 {
            return Ok(SparseMatrix::identity(self.dim()));
        }
        let p = self.divided_powers(alpha);
        Ok(p.get(m as usize - 1).cloned().unwrap_or_else(|| SparseMatrix::zeros(self.dim(), self.dim())))
    }

    /// Diagonal matrix of `binom(⟨μ, h_i⟩, m)`.
    pub fn binomial_h_action(&self, i: usize, m: i64) -> Result<SparseMatrix> {
        if m < 0 {
            return Err(Error::NegativeExponent(m));
        }
        let d = (0..self.dim()).map(|k| Q::from_bigint(binomial(self.weight_of(k)[i], m))).collect();
        Ok(SparseMatrix::diagonal(d))
    }

    /// Diagonal action of `h_i`.
    pub fn h_action(&self, i: usize) -> SparseMatrix {
        SparseMatrix::diagonal((0..self.dim()).map(|k| Q::from_int(self.weight_of(k)[i])).collect())
    }

    /// Distinct weights of the whole module.
    pub fn weights(&self) -> Vec<Vec<i64>> {
        let mut w: Vec<Vec<i64>> = self.spaces.iter().map(|s| s.weight.clone()).collect();
        w.sort_by(|a, b| b.cmp(a));
        w.dedup();
        w
    }

    /// Multiplicity of `μ` summed over summands.
    pub fn multiplicity(&self, mu: &[i64]) -> usize {
        self.spaces.iter().filter(|s| s.weight == mu).map(|s| s.dim).sum()
    }

    /// Indices `i` with `ω_i ∉ wts(V)`.
    pub fn missing_fundamental_weights(&self) -> Vec<usize> {
        let l = self.rs.rank();
        (0..l)
            .filter(|&i| {
                let mut w = vec![0; l];
                w[i] = 1;
                self.multiplicity(&w) == 0
            })
            .collect()
    }

    pub fn has_regular_summand(&self) -> bool {
        self.summands.iter().any(|lam| lam.iter().all(|&x| x > 0))
    }

    /// The lattice `L_V` generated by the weights of this module.
    pub fn weight_lattice(&self) -> crate::rootdata::WeightLattice {
        self.rs.weight_lattice(&self.summands).expect("summands are dominant")
    }

    /// Recomputes `V_ℤ` from the divided-power recursion in the current basis.
    pub fn build_lattice(&self) -> AdmissibleLattice {
        let mut rows: Vec<Vec<Vec<Q>>> = vec![Vec::new(); self.spaces.len()];
        let mut order: Vec<usize> = (0..self.spaces.len()).collect();
        order.sort_by_key(|&s| (self.spaces[s].summand, self.spaces[s].depth));
        let l = self.rs.rank();
        let local_f = |i: usize, m: usize, from: usize, v: &[Q]| -> Vec<Q> {
            let sp = &self.spaces[from];
            let mut full = vec![Q::zero(); self.dim()];
            full[sp.offset..sp.offset + sp.dim].clone_from_slice(v);
            let x = &self.divided_powers(self.rs.negate(self.rs.simple(i)))[m - 1];
            x.mul_vec(&full)
        };
        for &s in &order {
            let sp = &self.spaces[s];
            if sp.depth == 0 {
                rows[s] = vec![vec![Q::one()]];
                continue;
            }
            let mut gens = Vec::new();
            for i in 0..l {
                for m in 1.. {
                    let w = shift(&self.rs, &sp.weight, i, m);
                    let Some(src) = self.find_space(sp.summand, &w) else { break };
                    for v in &rows[src] {
                        let img = local_f(i, m as usize, src, v);
                        gens.push(img[sp.offset..sp.offset + sp.dim].to_vec());
                    }
                }
            }
            rows[s] = rational_hnf(&gens);
        }
        AdmissibleLattice { spaces: self.spaces.clone(), rows }
    }

    pub fn find_space(&self, summand: usize, weight: &[i64]) -> Option<usize> {
        self.spaces.iter().position(|s| s.summand == summand && s.weight == weight)
    }

    /// `V_ℤ` spanned by Kostant monomials `∏_{β>0} x_{−β}^{(m_β)}·v_λ`.
    pub fn kostant_lattice(&self) -> AdmissibleLattice {
        let n = self.rs.num_positive();
        let heights: Vec<i64> = (0..n).map(|k| self.rs.root_height(k)).collect();
        let mut gens: Vec<Vec<Vec<Q>>> = vec![Vec::new(); self.spaces.len()];
        for (j, &hv) in self.highest.iter().enumerate() {
            let max_depth = self.spaces.iter().filter(|s| s.summand == j).map(|s| s.depth).max().unwrap_or(0);
            let mut v = vec![Q::zero(); self.dim()];
            v[hv] = Q::one();
            // apply factors right to left: last root in height order acts first
            self.kostant_rec(n, &heights, max_depth, v, &mut gens);
        }
        let rows = gens.iter().map(|g| rational_hnf(g)).collect();
        AdmissibleLattice { spaces: self.spaces.clone(), rows }
    }

    fn kostant_rec(&self, k: usize, heights: &[i64], budget: i64, v: Vec<Q>, gens: &mut [Vec<Vec<Q>>]) {
        if v.iter().all(Q::is_zero) {
            return;
        }
        if k == 0 {
            let s = self.space_of[v.iter().position(|x| !x.is_zero()).unwrap()];
            let sp = &self.spaces[s];
            gens[s].push(v[sp.offset..sp.offset + sp.dim].to_vec());
            return;
        }
        let beta = k - 1;
        self.kostant_rec(beta, heights, budget, v.clone(), gens);
        let neg = self.rs.negate(beta);
        let powers = self.divided_powers(neg);
        for (m, p) in powers.iter().enumerate() {
            let cost = heights[beta] * (m as i64 + 1);
            if cost > budget {
                break;
            }
            self.kostant_rec(beta, heights, budget - cost, p.mul_vec(&v), gens);
        }
    }

    /// Module summary in the documented JSON layout.
    pub fn summary(&self) -> ModuleSummary {
        let lat = self.build_lattice();
        let weights = self.weights().into_iter().map(|mu| WeightMult { mult: self.multiplicity(&mu), mu }).collect();
        let mut lattice = std::collections::BTreeMap::new();
        for (s, sp) in self.spaces.iter().enumerate() {
            let key = format!("{}:{:?}", sp.summand, sp.weight);
            lattice.insert(key, lat.rows[s].iter().map(|r| r.iter().map(Q::to_string).collect()).collect());
        }
        ModuleSummary {
            ty: self.rs.cartan_type().to_string(),
            summands: self.summands.clone(),
            dim: self.dim(),
            weights,
            lattice,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightMult {
    pub mu: Vec<i64>,
    pub mult: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleSummary {
    #[serde(rename = "type")]
    pub ty: String,
    pub summands: Vec<Vec<i64>>,
    pub dim: usize,
    pub weights: Vec<WeightMult>,
    pub lattice: std::collections::BTreeMap<String, Vec<Vec<String>>>,
}

/// HNF ℤ-bases of each `V_{μ,ℤ}` in local module coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleLattice {
    pub spaces: Vec<WeightSpace>,
    pub rows: Vec<Vec<Vec<Q>>>,
}

impl AdmissibleLattice {
    pub fn rank(&self, s: usize) -> usize {
        self.rows[s].len()
    }

    /// `v ∈ V_ℤ`, decided per weight space.
    pub fn contains(&self, v: &[Q]) -> bool {
        self.spaces.iter().zip(&self.rows).all(|(sp, rows)| {
            let part = &v[sp.offset..sp.offset + sp.dim];
            if part.iter().all(Q::is_zero) {
                return true;
            }
            let scale = common_denominator(rows);
            let sq = Q::from_bigint(scale);
            let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|x| (x * &sq).numer()).collect()).collect();
            let scaled: Vec<Q> = part.iter().map(|x| x * &sq).collect();
            hnf_coordinates(&ints, &scaled).is_some()
        })
    }

    /// Whether every space has the standard basis as its lattice basis.
    pub fn is_standard(&self) -> bool {
        self.rows.iter().all(|rows| {
            rows.iter().enumerate().all(|(r, row)| row.iter().enumerate().all(|(c, x)| if r == c { x.is_one() } else { x.is_zero() }))
        })
    }
}

fn common_denominator(rows: &[Vec<Q>]) -> BigInt {
    rows.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()))
}

/// `binom(n, m)` for any integer `n` and `m ≥ 0`.
pub fn binomial(n: i64, m: i64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..m {
        num *= BigInt::from(n - k);
        den *= BigInt::from(k + 1);
    }
    num / den
}

/// `(μ, β)` for a weight `μ` and a root-lattice vector `β`.
fn weight_root_form(rs: &RootSystem, mu: &[i64], beta: &[i64]) -> i64 {
    mu.iter().zip(beta).zip(rs.symmetrizer()).map(|((m, b), d)| m * b * d).sum()
}

/// Weyl dimension formula.
pub fn weyl_dimension(rs: &RootSystem, lambda: &[i64]) -> BigInt {
    let lr: Vec<i64> = lambda.iter().map(|x| x + 1).collect();
    let rho = vec![1; rs.rank()];
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for b in rs.positive_roots() {
        num *= weight_root_form(rs, &lr, b);
        den *= weight_root_form(rs, &rho, b);
    }
    num / den
}

/// Weight multiplicities of `V^λ` by Freudenthal's formula.
pub fn weights_and_mults(rs: &RootSystem, lambda: &[i64]) -> Result<Vec<(Vec<i64>, usize)>> {
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let l = rs.rank();
    let mut mult: HashMap<Vec<i64>, i64> = HashMap::from([(lambda.to_vec(), 1)]);
    let mut order = vec![lambda.to_vec()];
    let mut level = vec![lambda.to_vec()];
    while !level.is_empty() {
        let mut cands: Vec<Vec<i64>> = Vec::new();
        for nu in &level {
            for i in 0..l {
                let mu = shift(rs, nu, i, -1);
                if !cands.contains(&mu) {
                    cands.push(mu);
                }
            }
        }
        cands.sort_by(|a, b| b.cmp(a));
        let mut next = Vec::new();
        for mu in cands {
            if !dominant_conjugate_below(rs, &mu, lambda) {
                continue;
            }
            // (λ+ρ,λ+ρ) − (μ+ρ,μ+ρ) = (λ−μ, λ+μ+2ρ)
            let diff = rs.weight_to_root_coords(&lambda.iter().zip(&mu).map(|(a, b)| a - b).collect::<Vec<_>>());
            let diff: Vec<i64> = diff.iter().map(|x| x.to_i64().unwrap()).collect();
            let sum: Vec<i64> = lambda.iter().zip(&mu).map(|(a, b)| a + b + 2).collect();
            let denom = weight_root_form(rs, &sum, &diff);
            let mut acc = 0i64;
            for b in rs.positive_roots() {
                let bw = rs.root_to_weight(b);
                for k in 1.. {
                    let nu: Vec<i64> = mu.iter().zip(&bw).map(|(m, x)| m + k * x).collect();
                    let Some(&m) = mult.get(&nu) else { break };
                    acc += m * weight_root_form(rs, &nu, b);
                }
            }
            let m = 2 * acc / denom;
            if m > 0 {
                mult.insert(mu.clone(), m);
                order.push(mu.clone());
                next.push(mu);
            }
        }
        level = next;
    }
    Ok(order.into_iter().map(|mu| (mu.clone(), mult[&mu] as usize)).collect())
}

fn dominant_conjugate_below(rs: &RootSystem, mu: &[i64], lambda: &[i64]) -> bool {
    let mut m = mu.to_vec();
    while let Some(i) = m.iter().position(|&x| x < 0) {
        m = rs.simple_reflect_weight(&m, i);
    }
    rs.depth(&m, lambda).is_ok()
}

/// `ρ = Σ ω_i` and the fundamental weights, as summand lists.
pub fn fundamental_weight(l: usize, i: usize) -> Vec<i64> {
    let mut w = vec![0; l];
    w[i] = 1;
    w
}

/// The minimal dominant weight in `λ + Q`.
///
/// Subtracting a positive root while staying dominant walks down the
/// dominance order inside the coset and ends at its unique minimum.
pub fn minimal_dominant(rs: &RootSystem, lambda: &[i64]) -> Vec<i64> {
    let mut mu = lambda.to_vec();
    'outer: loop {
        for b in 0..rs.num_positive() {
            let w = rs.root_to_weight(&rs.root(b));
            let next: Vec<i64> = mu.iter().zip(&w).map(|(m, x)| m - x).collect();
            if next.iter().all(|&x| x >= 0) {
                mu = next;
                continue 'outer;
            }
        }
        return mu;
    }
}

/// Highest weights of a small module with the same weight lattice as `⊕ V^{λ}`.
pub fn compact_weights(rs: &RootSystem, lambdas: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    for lam in lambdas {
        let m = minimal_dominant(rs, lam);
        if m.iter().any(|&x| x != 0) && !out.contains(&m) {
            out.push(m);
        }
    }
    if out.is_empty() {
        out.push(rs.root_to_weight(&rs.root(rs.highest_root())));
    }
    out
}

fn same_lattice(a: &crate::rootdata::WeightLattice, b: &crate::rootdata::WeightLattice) -> bool {
    a.basis.iter().all(|v| b.contains(v)) && b.basis.iter().all(|v| a.contains(v))
}

/// Named module presets: `sc-default`, `fundamentals`, `adjoint`.
pub fn preset(rs: &RootSystem, name: &str) -> Option<Vec<Vec<i64>>> {
    let l = rs.rank();
    match name {
        "sc-default" => {
            let mut v = vec![vec![1; l]];
            v.extend((0..l).map(|i| fundamental_weight(l, i)));
            Some(v)
        }
        "fundamentals" => Some((0..l).map(|i| fundamental_weight(l, i)).collect()),
        "adjoint" => Some(vec![rs.root_to_weight(&rs.root(rs.highest_root()))]),
        _ => None,
    }
}

/// Parses a preset name or a `w1,…,wℓ;w1,…` summand list.
pub fn parse_module_spec(rs: &RootSystem, spec: &str) -> Result<Vec<Vec<i64>>> {
    if let Some(p) = preset(rs, spec.trim()) {
        return Ok(p);
    }
    spec.split(';')
        .map(|part| {
            let w: Vec<i64> = part
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::MalformedWord(format!("bad module spec `{spec}`")))?;
            if w.len() != rs.rank() {
                return Err(Error::WrongLength { expected: rs.rank(), got: w.len() });
            }
            Ok(w)
        })
        .collect()
}
