//! Lattice stabilizers, factorizations, the Iwasawa decomposition
//! `G(ℚ) = G(ℤ)B(ℚ)` and the integrality decider.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::group::{chi_matrix, evaluate, letter_matrix, sl2_word, wtilde_matrix, GroupElement, Letter, Word};
use crate::hwmodule::{AdmissibleLattice, WeightModule};
use crate::linalg::{Matrix, SparseMatrix};
use crate::rational::Q;
use crate::rootdata::{RootId, RootSystem};

/// Positive roots in height order.
pub fn height_order(rs: &RootSystem) -> Vec<RootId> {
    (0..rs.num_positive()).collect()
}

/// Height order with `α_i` moved to the front.
pub fn simple_first_order(rs: &RootSystem, i: usize) -> Vec<RootId> {
    let s = rs.simple(i);
    std::iter::once(s).chain((0..rs.num_positive()).filter(|&k| k != s)).collect()
}

/// Whether the order lists positive roots so that peeling from the left is sound.
fn order_is_valid(rs: &RootSystem, order: &[RootId]) -> bool {
    let mut seen = vec![false; rs.num_positive()];
    for &k in order {
        if !rs.is_positive(k) || seen[k] {
            return false;
        }
        seen[k] = true;
    }
    if !seen.iter().all(|&x| x) {
        return false;
    }
    // heights must ascend, except that one simple root may lead
    let rest = if order.first().is_some_and(|&k| rs.simple_index(k).is_some()) { &order[1..] } else { order };
    rest.windows(2).all(|w| rs.root_height(w[0]) <= rs.root_height(w[1]))
}

/// Entry of `ρ(x_β)` used to read off the coefficient of `x_β`.
fn probe(module: &WeightModule, beta: RootId) -> (usize, usize, Q) {
    let (r, c, x) = module.root_action(beta).iter().next().expect("faithful module");
    (r, c, x.clone())
}

/// Coefficients `t_β` with `u = ∏ χ_β(t_β)` in the given order.
pub fn unipotent_factorize(module: &WeightModule, u: &Matrix, order: &[RootId]) -> Result<Vec<(RootId, Q)>> {
    let rs = module.root_system();
    if !order_is_valid(rs, order) {
        return Err(Error::Internal("factorization order is not height compatible".into()));
    }
    let mut cur = u.clone();
    let mut out = Vec::with_capacity(order.len());
    for &beta in order {
        let (r, c, x) = probe(module, beta);
        let t = cur.get(r, c) / &x;
        if !t.is_zero() {
            cur = chi_matrix(module, beta, &-t.clone()).mul_dense(&cur);
        }
        out.push((beta, t));
    }
    if !cur.is_identity() {
        return Err(Error::NotUnipotent("residue after peeling every root is not the identity".into()));
    }
    Ok(out)
}

/// Whether every factorization coordinate is an integer.
pub fn unipotent_integrality(module: &WeightModule, u: &Matrix) -> Result<bool> {
    let coords = unipotent_factorize(module, u, &height_order(module.root_system()))?;
    Ok(coords.iter().all(|(_, t)| t.is_integer()))
}

/// A lattice vector that `g` (or `g⁻¹`) moves out of `V_ℤ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub mu: Vec<i64>,
    pub summand: usize,
    pub vector: Vec<Q>,
    pub image: Vec<Q>,
    pub inverse: bool,
}

/// `None` when `g·V_ℤ = V_ℤ`, otherwise an escaping lattice vector.
pub fn stabilizes(module: &WeightModule, lattice: &AdmissibleLattice, g: &GroupElement) -> Option<Witness> {
    debug_assert_eq!(g.matrix.rows(), module.dim());
    if let Some(w) = escape(lattice, &g.matrix, false) {
        return Some(w);
    }
    if g.word.is_some() {
        // words have determinant 1 on V, so g·V_ℤ ⊆ V_ℤ already forces equality
        return None;
    }
    escape(lattice, &g.matrix.inverse().expect("invertible"), true)
}

fn escape(lattice: &AdmissibleLattice, m: &Matrix, inverse: bool) -> Option<Witness> {
    let dim = m.cols();
    if lattice.is_standard() {
        for c in 0..dim {
            if (0..dim).any(|r| !m.get(r, c).is_integer()) {
                let sp = lattice.spaces.iter().find(|s| (s.offset..s.offset + s.dim).contains(&c)).unwrap();
                let mut v = vec![Q::zero(); dim];
                v[c] = Q::one();
                return Some(Witness { mu: sp.weight.clone(), summand: sp.summand, image: m.column(c), vector: v, inverse });
            }
        }
        return None;
    }
    for (sp, rows) in lattice.spaces.iter().zip(&lattice.rows) {
        for row in rows {
            let mut v = vec![Q::zero(); dim];
            v[sp.offset..sp.offset + sp.dim].clone_from_slice(row);
            let img = m.mul_vec(&v);
            if !lattice.contains(&img) {
                return Some(Witness { mu: sp.weight.clone(), summand: sp.summand, vector: v, image: img, inverse });
            }
        }
    }
    None
}

/// `t_1, …, t_ℓ` with `∏ h_i(t_i) = h`.
pub fn toral_factorize(module: &WeightModule, h: &Matrix) -> Result<Vec<Q>> {
    if !h.is_diagonal() {
        return Err(Error::NotToral("matrix is not diagonal".into()));
    }
    let l = module.root_system().rank();
    let mut scalar: HashMap<Vec<i64>, Q> = HashMap::new();
    for k in 0..module.dim() {
        let s = h.get(k, k).clone();
        if s.is_zero() {
            return Err(Error::NotToral("singular".into()));
        }
        match scalar.get(module.weight_of(k)) {
            Some(prev) if *prev != s => return Err(Error::NotToral("not scalar on a weight space".into())),
            Some(_) => {}
            None => {
                scalar.insert(module.weight_of(k).to_vec(), s);
            }
        }
    }
    // choose ℓ independent weights, fundamental weights first
    let mut weights: Vec<Vec<i64>> = scalar.keys().cloned().collect();
    weights.sort_by_key(|w| (w.iter().map(|x| x.abs()).sum::<i64>(), std::cmp::Reverse(w.clone())));
    let rows = Matrix::from_i64_rows(&weights);
    let pick = crate::linalg::independent_columns(&rows.transpose());
    if pick.len() < l {
        return Err(Error::NotToral("weights do not span".into()));
    }
    let chosen: Vec<Vec<i64>> = pick.iter().take(l).map(|&k| weights[k].clone()).collect();
    let w = Matrix::from_i64_rows(&chosen);
    let det = w.determinant();
    let adj = w.inverse().unwrap().scale(&det);
    let mut d = det.to_i64().unwrap();
    let mut powers: Vec<Q> = (0..l)
        .map(|i| {
            (0..l).fold(Q::one(), |acc, m| &acc * &scalar[&chosen[m]].pow(adj.get(i, m).to_i64().unwrap()))
        })
        .collect();
    if d < 0 {
        d = -d;
        powers = powers.iter().map(Q::recip).collect();
    }
    let roots: Vec<Q> = powers
        .iter()
        .map(|p| p.nth_root(d as u32).ok_or_else(|| Error::NotToral(format!("{p} has no {d}-th root"))))
        .collect::<Result<_>>()?;
    let check = |t: &[Q]| {
        scalar.iter().all(|(mu, s)| mu.iter().zip(t).fold(Q::one(), |acc, (m, ti)| &acc * &ti.pow(*m)) == *s)
    };
    let sign_choices = if d % 2 == 0 { 1usize << l } else { 1 };
    for mask in 0..sign_choices {
        let t: Vec<Q> = roots.iter().enumerate().map(|(i, r)| if mask >> i & 1 == 1 { -r.clone() } else { r.clone() }).collect();
        if check(&t) {
            return Ok(t);
        }
    }
    Err(Error::NotToral("no sign choice reproduces the scalars".into()))
}

pub type Mat2 = [[Q; 2]; 2];

pub fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `M = γ·b` with `γ ∈ SL₂(ℤ)` and `b` upper triangular.
pub fn sl2_iwasawa(m: &Mat2) -> Result<(Mat2, Mat2)> {
    let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
    if !det.is_one() {
        return Err(Error::DeterminantNotOne(det.to_string()));
    }
    let id = [[Q::one(), Q::zero()], [Q::zero(), Q::one()]];
    if m.iter().flatten().all(Q::is_integer) {
        return Ok((m.clone(), id));
    }
    let (p, r) = (&m[0][0], &m[1][0]);
    if r.is_zero() {
        return Ok((id, m.clone()));
    }
    // bottom row (c, d) of γ⁻¹ satisfies c·p + d·r = 0 with gcd(c, d) = 1
    let (c, d) = if p.is_zero() {
        (Q::one(), Q::zero())
    } else {
        let ratio = -(r / p);
        let (num, den) = (Q::from_bigint(ratio.numer()), Q::from_bigint(ratio.denom()));
        (num, den)
    };
    // top row (a, b) with a·d − b·c = 1 and 0 ≤ a < |c|
    let (a, b) = if d.is_zero() {
        (Q::zero(), -c.recip())
    } else {
        let a0 = inverse_mod(&d, &c);
        let b0 = &(&(&a0 * &d) - &Q::one()) / &c;
        (a0, b0)
    };
    let ginv = [[a.clone(), b.clone()], [c.clone(), d.clone()]];
    let gamma = [[d, -b], [-c, a]];
    let bmat = mul2(&ginv, m);
    debug_assert!(bmat[1][0].is_zero());
    Ok((gamma, bmat))
}

/// `a ∈ [0, |c|)` with `a·d ≡ 1 (mod c)`.
fn inverse_mod(d: &Q, c: &Q) -> Q {
    use num_integer::Integer;
    let (d, c) = (d.numer(), c.numer());
    let m = num_traits::Signed::abs(&c);
    if num_traits::One::is_one(&m) {
        return Q::zero();
    }
    let e = d.mod_floor(&m).extended_gcd(&m);
    Q::from_bigint(e.x.mod_floor(&m))
}

/// `u·h` with `u ∈ U(ℚ)` given by its coordinates and `h` by torus letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BNormalForm {
    pub u: Vec<(RootId, Q)>,
    pub h: Vec<Letter>,
}

impl BNormalForm {
    pub fn word(&self) -> Word {
        let mut w = Word(self.u.iter().filter(|(_, t)| !t.is_zero()).map(|(r, t)| Letter::chi(*r, t.clone())).collect());
        w.0.extend(self.h.iter().cloned());
        w
    }
}

#[derive(Clone, Debug)]
pub struct IwasawaDecomposition {
    pub gamma: Word,
    pub b: BNormalForm,
}

impl IwasawaDecomposition {
    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        let u: Vec<_> = self.b.u.iter().map(|(r, t)| json!({"root": rs.root(*r), "t": t})).collect();
        let h: Vec<_> = self
            .b
            .h
            .iter()
            .map(|l| match l {
                Letter::Torus { i, t } => json!({"i": i + 1, "t": t}),
                Letter::Coweight { coweight, t } => json!({"coweight": coweight, "t": t}),
                _ => unreachable!("torus part holds torus letters"),
            })
            .collect();
        json!({"gamma": self.gamma.to_json_value(rs), "u": u, "h": h})
    }
}

/// `β(h)` for a product of torus letters.
fn root_character(rs: &RootSystem, beta: &[i64], h: &[Letter]) -> Q {
    let pair = rs.root_to_weight(beta);
    let mut acc = Q::one();
    for l in h {
        match l {
            Letter::Torus { i, t } => acc = &acc * &t.pow(pair[*i]),
            Letter::Coweight { coweight, t } => {
                let e: Q = coweight.iter().zip(&pair).map(|(c, p)| c * &Q::from_int(*p)).sum();
                acc = &acc * &t.pow(e.to_i64().expect("coweight lies in the dual of the root lattice"));
            }
            _ => unreachable!(),
        }
    }
    acc
}

/// `D·u·D⁻¹` for diagonal `D`.
fn conj_diag(u: &Matrix, d: &SparseMatrix) -> Matrix {
    let n = u.rows();
    let diag: Vec<Q> = (0..n).map(|k| d.get(k, k)).collect();
    let inv: Vec<Q> = diag.iter().map(Q::recip).collect();
    let mut out = u.clone();
    for r in 0..n {
        for c in 0..n {
            if !u.get(r, c).is_zero() && r != c {
                out.set(r, c, &(&diag[r] * u.get(r, c)) * &inv[c]);
            }
        }
    }
    out
}

/// `g = γ·u·h` with `γ ∈ G(ℤ)`, computed on [`WeightModule::compact`].
pub fn iwasawa_decompose(module: &WeightModule, word: &Word) -> Result<IwasawaDecomposition> {
    sweep(module.compact(), word)
}

/// Left-to-right sweep keeping `g = γ·u·h` with `γ` integral.
fn sweep(module: &WeightModule, word: &Word) -> Result<IwasawaDecomposition> {
    let rs = module.root_system();
    let mut gamma = Word::new();
    let mut u = Matrix::identity(module.dim());
    let mut h: Vec<Letter> = Vec::new();
    let mut queue: Vec<Letter> = Vec::new();
    for l in &word.0 {
        match l {
            Letter::WeylLift { root, s } if rs.simple_index(*root).is_some() => {
                if s.is_zero() {
                    return Err(Error::ZeroParameter);
                }
                let neg = rs.negate(*root);
                queue.push(Letter::chi(*root, s.clone()));
                queue.push(Letter::chi(neg, -s.recip()));
                queue.push(Letter::chi(*root, s.clone()));
            }
            other => queue.push(other.clone()),
        }
    }
    for l in queue {
        match l {
            Letter::Torus { t, .. } | Letter::Coweight { t, .. } if t.is_zero() => return Err(Error::ZeroParameter),
            Letter::Torus { .. } => h.push(l),
            Letter::Coweight { .. } => {
                letter_matrix(module, &l)?;
                h.push(l);
            }
            Letter::Chi { root, t } => {
                let n = rs.num_positive();
                let i = rs.simple_index(root % n).ok_or(Error::NonSimpleLetter(root))?;
                if t.is_zero() {
                    continue;
                }
                let char_ = root_character(rs, &rs.root(root), &h);
                let s = &t * &char_;
                if rs.is_positive(root) {
                    u = u.mul_sparse(&chi_matrix(module, root, &s));
                    continue;
                }
                // u = χ_{α_i}(a)·u' with u' supported off α_i
                let up = rs.simple(i);
                let (r, c, x) = probe(module, up);
                let a = u.get(r, c) / &x;
                let u1 = chi_matrix(module, up, &-a.clone()).mul_dense(&u);
                let u2 = chi_matrix(module, root, &-s.clone()).mul_dense(&u1).mul_sparse(&chi_matrix(module, root, &s));
                let piece = [[&Q::one() + &(&a * &s), a.clone()], [s.clone(), Q::one()]];
                let (g2, b2) = sl2_iwasawa(&piece)?;
                gamma.extend(&sl2_word(i, rs, g2)?);
                // b2 = [[p, q], [0, 1/p]] = χ_{α_i}(p·q)·h_i(p)
                let p = b2[0][0].clone();
                let pq = &p * &b2[0][1];
                let d = crate::group::torus_matrix(module, i, &p)?;
                let u3 = conj_diag(&u2, &d);
                u = chi_matrix(module, up, &pq).mul_dense(&u3);
                if !p.is_one() {
                    h.push(Letter::torus(i, p));
                }
            }
            Letter::WeylLift { root, .. } => return Err(Error::NonSimpleLetter(root)),
        }
    }
    let coords = unipotent_factorize(module, &u, &height_order(rs))?;
    Ok(IwasawaDecomposition { gamma: gamma.simplified(), b: BNormalForm { u: coords, h: merge_torus(rs, h) } })
}

/// Collapses torus letters to `h_i(t_i)` when every coweight is integral.
fn merge_torus(rs: &RootSystem, h: Vec<Letter>) -> Vec<Letter> {
    let l = rs.rank();
    let all_integral = h.iter().all(|x| match x {
        Letter::Coweight { coweight, .. } => coweight.iter().all(Q::is_integer),
        _ => true,
    });
    if !all_integral {
        return h;
    }
    let mut t = vec![Q::one(); l];
    for x in &h {
        match x {
            Letter::Torus { i, t: s } => t[*i] = &t[*i] * s,
            Letter::Coweight { coweight, t: s } => {
                for (ti, c) in t.iter_mut().zip(coweight) {
                    *ti = &*ti * &s.pow(c.to_i64().unwrap());
                }
            }
            _ => unreachable!(),
        }
    }
    t.into_iter().enumerate().filter(|(_, x)| !x.is_one()).map(|(i, x)| Letter::torus(i, x)).collect()
}

/// `(i, positive, w, ε)` with `χ_β(t) = n_w χ_{±α_i}(εt) n_w⁻¹`.
type Conjugator = (usize, bool, Vec<usize>, Q);

/// Rewrites every letter over the simple-root alphabet `χ_{±α_i}`, `h_i`, `w̃_{α_i}`.
pub struct SimpleRewriter<'a> {
    module: &'a WeightModule,
    cache: Mutex<HashMap<RootId, Conjugator>>,
}

impl<'a> SimpleRewriter<'a> {
    pub fn new(module: &'a WeightModule) -> SimpleRewriter<'a> {
        SimpleRewriter { module, cache: Mutex::new(HashMap::new()) }
    }

    fn conjugator(&self, beta: RootId) -> Conjugator {
        if let Some(v) = self.cache.lock().unwrap().get(&beta) {
            return v.clone();
        }
        let rs = self.module.root_system();
        let pos = rs.is_positive(beta);
        let (i, w) = rs.express_root(if pos { beta } else { rs.negate(beta) });
        let simple = if pos { rs.simple(i) } else { rs.negate(rs.simple(i)) };
        let mut n = SparseMatrix::identity(self.module.dim());
        for &j in &w {
            n = n.mul(&wtilde_matrix(self.module, rs.simple(j), &Q::one()).unwrap());
        }
        let mut ninv = SparseMatrix::identity(self.module.dim());
        for &j in w.iter().rev() {
            ninv = ninv.mul(&wtilde_matrix(self.module, rs.simple(j), &Q::from_int(-1)).unwrap());
        }
        let conj = n.mul(self.module.root_action(simple)).mul(&ninv);
        let eps = self.module.root_action(beta).ratio_to(&conj).expect("Weyl lift maps root spaces onto root spaces");
        let v = (i, pos, w, eps);
        self.cache.lock().unwrap().insert(beta, v.clone());
        v
    }

    pub fn rewrite(&self, word: &Word) -> Word {
        let rs = self.module.root_system();
        let mut out = Word::new();
        for l in &word.0 {
            match l {
                Letter::Chi { root, t } if rs.simple_index(root % rs.num_positive()).is_none() => {
                    let (i, pos, w, eps) = self.conjugator(*root);
                    let simple = if pos { rs.simple(i) } else { rs.negate(rs.simple(i)) };
                    for &j in &w {
                        out.push(Letter::wtilde(rs.simple(j), Q::one()));
                    }
                    out.push(Letter::chi(simple, &eps * t));
                    for &j in w.iter().rev() {
                        out.push(Letter::wtilde(rs.simple(j), Q::from_int(-1)));
                    }
                }
                Letter::WeylLift { root, s } if rs.simple_index(*root).is_none() => {
                    let neg = rs.negate(*root);
                    let expanded =
                        Word(vec![Letter::chi(*root, s.clone()), Letter::chi(neg, -s.recip()), Letter::chi(*root, s.clone())]);
                    out.extend(&self.rewrite(&expanded));
                }
                other => out.push(other.clone()),
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub enum Verdict {
    InGZ { certificate: Word },
    NotIntegral { witness: Witness },
}

impl Verdict {
    pub fn is_integral(&self) -> bool {
        matches!(self, Verdict::InGZ { .. })
    }

    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        match self {
            Verdict::InGZ { certificate } => json!({"verdict": "in_GZ", "certificate": certificate.to_json_value(rs)}),
            Verdict::NotIntegral { witness } => json!({"verdict": "not_integral", "witness": witness}),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub verdict: Verdict,
    pub decomposition: IwasawaDecomposition,
    pub warnings: Vec<String>,
}

/// Decides `g ∈ G(ℤ)` for the element given by `word`.
pub fn integrality_decide(module: &WeightModule, lattice: &AdmissibleLattice, word: &Word) -> Result<Decision> {
    let rs = module.root_system();
    let missing = module.missing_fundamental_weights();
    if !missing.is_empty() {
        return Err(Error::MissingFundamentalWeights(missing.iter().map(|i| i + 1).collect()));
    }
    let mut warnings = Vec::new();
    if !module.has_regular_summand() {
        warnings.push("module has no summand with regular highest weight; the unipotent criterion is unproven here".into());
    }
    let simple = SimpleRewriter::new(module.compact()).rewrite(word);
    let dec = iwasawa_decompose(module, &simple)?;
    let g = evaluate(module, word)?;
    let mut t = vec![Q::one(); rs.rank()];
    for l in &dec.b.h {
        match l {
            Letter::Torus { i, t: s } => t[*i] = &t[*i] * s,
            _ => {
                let d = evaluate(module, &Word(dec.b.h.clone()))?;
                t = toral_factorize(module, &d.matrix)?;
                break;
            }
        }
    }
    let integral = dec.b.u.iter().all(|(_, s)| s.is_integer()) && t.iter().all(|x| x.abs().is_one());
    let lattice_witness = stabilizes(module, lattice, &g);
    let verdict = if integral {
        let mut cert = dec.gamma.clone();
        cert.0.extend(dec.b.u.iter().filter(|(_, s)| !s.is_zero()).map(|(r, s)| Letter::chi(*r, s.clone())));
        cert.0.extend(t.iter().enumerate().filter(|(_, x)| !x.is_one()).map(|(i, x)| Letter::torus(i, x.clone())));
        let cert = cert.simplified();
        if evaluate(module, &cert)?.matrix != g.matrix {
            return Err(Error::Internal("certificate does not reproduce the input".into()));
        }
        if let Some(w) = lattice_witness {
            return Err(Error::Internal(format!("certificate is integral but the element moves {:?}", w.vector)));
        }
        Verdict::InGZ { certificate: cert }
    } else {
        let witness = lattice_witness
            .ok_or_else(|| Error::Internal("decomposition is not integral yet the element stabilizes V_Z".into()))?;
        Verdict::NotIntegral { witness }
    };
    Ok(Decision { verdict, decomposition: dec, warnings })
}
