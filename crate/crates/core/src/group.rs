//! Chevalley group elements over ℚ acting on a [`WeightModule`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hwmodule::WeightModule;
use crate::linalg::{Matrix, SparseMatrix};
use crate::rational::Q;
use crate::rootdata::{RootId, RootSystem};

/// One generator of `G(ℚ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Letter {
    /// `χ_α(t)`.
    Chi { root: RootId, t: Q },
    /// `h_i(t)`.
    Torus { i: usize, t: Q },
    /// `h_ϖ(t)` for a coweight given in `h_i` coordinates.
    Coweight { coweight: Vec<Q>, t: Q },
    /// `w̃_α(s) = χ_α(s) χ_{−α}(−s⁻¹) χ_α(s)`.
    WeylLift { root: RootId, s: Q },
}

impl Letter {
    pub fn chi(root: RootId, t: Q) -> Letter {
        Letter::Chi { root, t }
    }

    pub fn torus(i: usize, t: Q) -> Letter {
        Letter::Torus { i, t }
    }

    pub fn wtilde(root: RootId, s: Q) -> Letter {
        Letter::WeylLift { root, s }
    }

    /// Whether the letter is one of the generators of `G(ℤ)`.
    pub fn is_integral(&self) -> bool {
        let unit = |t: &Q| t.abs().is_one();
        match self {
            Letter::Chi { t, .. } => t.is_integer(),
            Letter::Torus { t, .. } => unit(t),
            Letter::Coweight { coweight, t } => t.is_one() || (unit(t) && coweight.iter().all(Q::is_integer)),
            Letter::WeylLift { s, .. } => unit(s),
        }
    }

    pub fn inverse(&self) -> Letter {
        match self {
            Letter::Chi { root, t } => Letter::Chi { root: *root, t: -t.clone() },
            Letter::Torus { i, t } => Letter::Torus { i: *i, t: t.recip() },
            Letter::Coweight { coweight, t } => Letter::Coweight { coweight: coweight.clone(), t: t.recip() },
            Letter::WeylLift { root, s } => Letter::WeylLift { root: *root, s: -s.clone() },
        }
    }

    fn validate(&self, rs: &RootSystem) -> Result<()> {
        match self {
            Letter::Chi { root, .. } if *root >= rs.num_roots() => Err(Error::MalformedWord(format!("root id {root}"))),
            Letter::WeylLift { root, .. } if *root >= rs.num_roots() => Err(Error::MalformedWord(format!("root id {root}"))),
            Letter::WeylLift { s, .. } if s.is_zero() => Err(Error::ZeroParameter),
            Letter::Torus { t, .. } | Letter::Coweight { t, .. } if t.is_zero() => Err(Error::ZeroParameter),
            Letter::Torus { i, .. } if *i >= rs.rank() => Err(Error::MalformedWord(format!("torus index {}", i + 1))),
            Letter::Coweight { coweight, .. } if coweight.len() != rs.rank() => {
                Err(Error::WrongLength { expected: rs.rank(), got: coweight.len() })
            }
            _ => Ok(()),
        }
    }
}

/// Word of generators; evaluation multiplies left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word(pub Vec<Letter>);

#[derive(Serialize, Deserialize)]
#[serde(tag = "gen", deny_unknown_fields)]
enum LetterDoc {
    #[serde(rename = "chi")]
    Chi { root: Vec<i64>, t: Q },
    #[serde(rename = "h")]
    H {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        i: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coweight: Option<Vec<Q>>,
        t: Q,
    },
    #[serde(rename = "w")]
    W { root: Vec<i64>, s: Q },
}

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn extend(&mut self, other: &Word) {
        self.0.extend(other.0.iter().cloned());
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Letter::is_integral)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverse).collect())
    }

    /// Merges neighbouring `χ_α` letters and drops identity letters.
    pub fn simplified(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for l in &self.0 {
            match (out.last_mut(), l) {
                (Some(Letter::Chi { root: a, t: s }), Letter::Chi { root: b, t }) if a == b => {
                    *s = &*s + t;
                    if s.is_zero() {
                        out.pop();
                    }
                }
                (_, Letter::Chi { t, .. }) if t.is_zero() => {}
                (_, Letter::Torus { t, .. } | Letter::Coweight { t, .. }) if t.is_one() => {}
                _ => out.push(l.clone()),
            }
        }
        Word(out)
    }

    pub fn to_json_value(&self, rs: &RootSystem) -> serde_json::Value {
        let docs: Vec<LetterDoc> = self
            .0
            .iter()
            .map(|l| match l {
                Letter::Chi { root, t } => LetterDoc::Chi { root: rs.root(*root), t: t.clone() },
                Letter::Torus { i, t } => LetterDoc::H { i: Some(i + 1), coweight: None, t: t.clone() },
                Letter::Coweight { coweight, t } => LetterDoc::H { i: None, coweight: Some(coweight.clone()), t: t.clone() },
                Letter::WeylLift { root, s } => LetterDoc::W { root: rs.root(*root), s: s.clone() },
            })
            .collect();
        serde_json::to_value(docs).expect("word serializes")
    }

    pub fn from_json_value(rs: &RootSystem, v: serde_json::Value) -> Result<Word> {
        let docs: Vec<LetterDoc> = serde_json::from_value(v).map_err(|e| Error::MalformedWord(e.to_string()))?;
        let mut out = Word::new();
        for d in docs {
            let letter = match d {
                LetterDoc::Chi { root, t } => Letter::Chi { root: rs.root_id(&root)?, t },
                LetterDoc::W { root, s } => Letter::WeylLift { root: rs.root_id(&root)?, s },
                LetterDoc::H { i: Some(i), coweight: None, t } => {
                    if i == 0 {
                        return Err(Error::MalformedWord("torus index is 1-based".into()));
                    }
                    Letter::Torus { i: i - 1, t }
                }
                LetterDoc::H { i: None, coweight: Some(c), t } => Letter::Coweight { coweight: c, t },
                LetterDoc::H { .. } => return Err(Error::MalformedWord("h needs exactly one of `i`, `coweight`".into())),
            };
            letter.validate(rs)?;
            out.push(letter);
        }
        Ok(out)
    }

    pub fn from_json_str(rs: &RootSystem, s: &str) -> Result<Word> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::MalformedWord(e.to_string()))?;
        Word::from_json_value(rs, v)
    }
}

/// Invertible matrix on a module, optionally with a word producing it.
#[derive(Clone, Debug)]
pub struct GroupElement {
    pub matrix: Matrix,
    pub word: Option<Word>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &GroupElement) -> bool {
        self.matrix == other.matrix
    }
}

impl GroupElement {
    pub fn identity(dim: usize) -> GroupElement {
        GroupElement { matrix: Matrix::identity(dim), word: Some(Word::new()) }
    }

    pub fn from_matrix(matrix: Matrix) -> GroupElement {
        GroupElement { matrix, word: None }
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => {
                let mut w = a.clone();
                w.extend(b);
                Some(w)
            }
            _ => None,
        };
        GroupElement { matrix: self.matrix.mul(&other.matrix), word }
    }

    /// `self · word`, multiplying one sparse letter at a time.
    pub fn then(&self, module: &WeightModule, word: &Word) -> Result<GroupElement> {
        let mut m = self.matrix.clone();
        for l in &word.0 {
            m = m.mul_sparse(&letter_matrix(module, l)?);
        }
        let word = self.word.as_ref().map(|w| {
            let mut w = w.clone();
            w.extend(word);
            w
        });
        Ok(GroupElement { matrix: m, word })
    }

    pub fn inverse(&self, module: &WeightModule) -> GroupElement {
        match &self.word {
            Some(w) => evaluate(module, &w.inverse()).expect("inverse of a valid word is valid"),
            None => GroupElement::from_matrix(self.matrix.inverse().expect("group elements are invertible")),
        }
    }
}

/// `χ_α(t) = Σ_m t^m ρ(x_α^{(m)})`.
pub fn chi_matrix(module: &WeightModule, alpha: RootId, t: &Q) -> SparseMatrix {
    let mut m = SparseMatrix::identity(module.dim());
    if t.is_zero() {
        return m;
    }
    let mut tp = Q::one();
    for p in module.divided_powers(alpha) {
        tp = &tp * t;
        m = m.add(&p.scale(&tp));
    }
    m
}

/// `h_ϖ(t)` with `ϖ` in `h_i` coordinates.
pub fn coweight_matrix(module: &WeightModule, coweight: &[Q], t: &Q) -> Result<SparseMatrix> {
    if t.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let mut d = Vec::with_capacity(module.dim());
    for k in 0..module.dim() {
        let mu = module.weight_of(k);
        let e: Q = coweight.iter().zip(mu).map(|(c, &m)| c * &Q::from_int(m)).sum();
        let e = e.to_i64().ok_or_else(|| Error::NonIntegralExponent(mu.to_vec()))?;
        d.push(t.pow(e));
    }
    Ok(SparseMatrix::diagonal(d))
}

pub fn torus_matrix(module: &WeightModule, i: usize, t: &Q) -> Result<SparseMatrix> {
    if t.is_zero() {
        return Err(Error::ZeroParameter);
    }
    Ok(SparseMatrix::diagonal((0..module.dim()).map(|k| t.pow(module.weight_of(k)[i])).collect()))
}

pub fn wtilde_matrix(module: &WeightModule, alpha: RootId, s: &Q) -> Result<SparseMatrix> {
    if s.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let neg = module.root_system().negate(alpha);
    let a = chi_matrix(module, alpha, s);
    Ok(a.mul(&chi_matrix(module, neg, &-s.recip())).mul(&a))
}

pub fn letter_matrix(module: &WeightModule, l: &Letter) -> Result<SparseMatrix> {
    l.validate(module.root_system())?;
    match l {
        Letter::Chi { root, t } => Ok(chi_matrix(module, *root, t)),
        Letter::Torus { i, t } => torus_matrix(module, *i, t),
        Letter::Coweight { coweight, t } => coweight_matrix(module, coweight, t),
        Letter::WeylLift { root, s } => wtilde_matrix(module, *root, s),
    }
}

pub fn chi(module: &WeightModule, alpha: RootId, t: Q) -> GroupElement {
    evaluate(module, &Word(vec![Letter::chi(alpha, t)])).expect("valid root")
}

pub fn torus(module: &WeightModule, i: usize, t: Q) -> Result<GroupElement> {
    evaluate(module, &Word(vec![Letter::torus(i, t)]))
}

pub fn torus_coweight(module: &WeightModule, coweight: Vec<Q>, t: Q) -> Result<GroupElement> {
    evaluate(module, &Word(vec![Letter::Coweight { coweight, t }]))
}

pub fn wtilde(module: &WeightModule, alpha: RootId, s: Q) -> Result<GroupElement> {
    evaluate(module, &Word(vec![Letter::wtilde(alpha, s)]))
}

/// Exact product of the letters of `word`.
pub fn evaluate(module: &WeightModule, word: &Word) -> Result<GroupElement> {
    GroupElement::identity(module.dim()).then(module, word)
}

/// Image of `M ∈ SL₂(ℚ)` under `φ_i`, with the word from a Euclidean factorization.
pub fn sl2_embed(module: &WeightModule, i: usize, m: [[Q; 2]; 2]) -> Result<GroupElement> {
    let word = sl2_word(i, module.root_system(), m)?;
    evaluate(module, &word)
}

/// Word in `χ_{±α_i}` and `h_i` whose image under `φ_i` is `M`.
///
/// Integral `M` yields an integral word.
pub fn sl2_word(i: usize, rs: &RootSystem, m: [[Q; 2]; 2]) -> Result<Word> {
    let [[a, b], [c, d]] = m;
    let det = &(&a * &d) - &(&b * &c);
    if !det.is_one() {
        return Err(Error::DeterminantNotOne(det.to_string()));
    }
    let up = rs.simple(i);
    let down = rs.negate(up);
    // row operations: U(t) adds t·row2 to row1, L(t) adds t·row1 to row2
    let (mut a, mut b, mut c, mut d) = (a, b, c, d);
    let mut ops: Vec<Letter> = Vec::new();
    while !c.is_zero() {
        if a.is_zero() {
            // U(1/c) makes a = 1, then L(−c) clears c
            let t = c.recip();
            a = Q::one();
            b = &b + &(&t * &d);
            ops.push(Letter::chi(up, t));
            d = &d - &(&c * &b);
            ops.push(Letter::chi(down, -c.clone()));
            c = Q::zero();
            continue;
        }
        let q = Q::from_bigint((&c / &a).floor());
        if q.is_zero() {
            let p = Q::from_bigint((&a / &c).floor());
            a = &a - &(&p * &c);
            b = &b - &(&p * &d);
            ops.push(Letter::chi(up, -p));
        } else {
            c = &c - &(&q * &a);
            d = &d - &(&q * &b);
            ops.push(Letter::chi(down, -q));
        }
    }
    // E_k … E_1 M = [[a, b], [0, 1/a]] = h_i(a) χ_{α_i}(b/a)
    let mut word = Word(ops.iter().map(Letter::inverse).collect());
    if !a.is_one() {
        word.push(Letter::torus(i, a.clone()));
    }
    let x = &b / &a;
    if !x.is_zero() {
        word.push(Letter::chi(up, x));
    }
    Ok(word)
}

/// `(i, j, iα + jβ, c_ij)`.
pub type CommutatorTerm = (i64, i64, Vec<i64>, i64);

/// Commutator constants `c_ij` for `(χ_α(t), χ_β(u)) = ∏ χ_{iα+jβ}(c_ij tⁱ uʲ)`.
#[derive(Clone, Debug, Serialize)]
pub struct CommutatorConstants {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    /// `(i, j, root, c_ij)` in height order.
    pub constants: Vec<CommutatorTerm>,
}

/// Fits `c_ij` from the factorization of `(χ_α(t), χ_β(u))` at each sample.
pub fn commutator_constants(
    module: &WeightModule,
    alpha: RootId,
    beta: RootId,
    samples: &[(Q, Q)],
) -> Result<CommutatorConstants> {
    let rs = module.root_system();
    if !rs.is_positive(alpha) || !rs.is_positive(beta) || alpha == beta {
        return Err(Error::ProportionalRoots);
    }
    let (a, b) = (rs.root(alpha), rs.root(beta));
    let mut result: Option<Vec<CommutatorTerm>> = None;
    for (t, u) in samples {
        if t.is_zero() || u.is_zero() {
            return Err(Error::ZeroParameter);
        }
        let w = Word(vec![
            Letter::chi(alpha, t.clone()),
            Letter::chi(beta, u.clone()),
            Letter::chi(alpha, -t.clone()),
            Letter::chi(beta, -u.clone()),
        ]);
        let g = evaluate(module, &w)?;
        let order: Vec<RootId> = (0..rs.num_positive()).collect();
        let coords = crate::integrality::unipotent_factorize(module, &g.matrix, &order)?;
        let mut cs = Vec::new();
        for (k, s) in coords.iter() {
            let g = rs.root(*k);
            let Some((i, j)) = decompose(&g, &a, &b) else {
                if !s.is_zero() {
                    return Err(Error::Internal(format!("commutator has a component on {g:?}")));
                }
                continue;
            };
            let c = s / &(&t.pow(i) * &u.pow(j));
            let c = c.to_i64().ok_or_else(|| Error::Internal(format!("c_{i}{j} = {c} is not an integer")))?;
            cs.push((i, j, g, c));
        }
        match &result {
            None => result = Some(cs),
            Some(prev) if *prev != cs => return Err(Error::Internal("commutator constants depend on the sample".into())),
            _ => {}
        }
    }
    Ok(CommutatorConstants { alpha: a, beta: b, constants: result.unwrap_or_default() })
}

/// `(i, j)` with `g = iα + jβ` and `i, j > 0`.
fn decompose(g: &[i64], a: &[i64], b: &[i64]) -> Option<(i64, i64)> {
    for i in 1..=6 {
        for j in 1..=6 {
            if g.iter().zip(a).zip(b).all(|((g, a), b)| *g == i * a + j * b) {
                return Some((i, j));
            }
        }
    }
    None
}
