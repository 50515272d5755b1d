//! Seeded verification suites.
//!
//! Every randomized check draws its cases from a ChaCha stream derived from a
//! root seed and the case index, so a report depends only on its inputs and
//! not on how cases are scheduled across threads.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{smallest_fundamental, ChevalleyAlgebra};
use crate::error::Result;
use crate::group::{commutator_constants, evaluate, GroupElement, Letter, Word};
use crate::hwmodule::{fundamental_weight, weights_and_mults, weyl_dimension, AdmissibleLattice, WeightModule};
use crate::integrality::{
    height_order, integrality_decide, iwasawa_decompose, mul2, sl2_iwasawa, stabilizes, toral_factorize,
    unipotent_factorize, Verdict, Witness,
};
use crate::linalg::{Matrix, SparseMatrix};
use crate::rational::Q;
use crate::rootdata::{RootId, RootSystem};

/// How a sweep distributes its cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Falls back to sequential execution without the `parallel` feature.
    Parallel,
}

impl Default for Exec {
    fn default() -> Exec {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// The generator for case `case` of a sweep rooted at `seed`.
pub fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

/// Runs `f` on `cases` seeded cases and returns the results in case order.
pub fn sweep_with<T, F>(exec: Exec, seed: u64, cases: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut ChaCha8Rng) -> T + Sync + Send,
{
    let run = |k: usize| f(k, &mut case_rng(seed, k as u64));
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            (0..cases).into_par_iter().map(run).collect()
        }
        _ => (0..cases).map(run).collect(),
    }
}

pub fn sweep<T, F>(seed: u64, cases: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut ChaCha8Rng) -> T + Sync + Send,
{
    sweep_with(Exec::default(), seed, cases, f)
}

/// Distinct sub-seed per sweep so suites sharing a root seed draw different cases.
fn salted(seed: u64, salt: u64) -> u64 {
    seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    fn counted(name: &str, good: usize, total: usize, failures: &[String]) -> Check {
        let mut detail = format!("{good}/{total}");
        if let Some(f) = failures.first() {
            let _ = write!(detail, "; first failure: {f}");
        }
        Check::new(name, good == total, detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub cartan_type: String,
    pub module: Option<Vec<Vec<i64>>>,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut s = format!("suite {} on {}", self.suite, self.cartan_type);
        if let Some(m) = &self.module {
            let _ = write!(s, " module {m:?}");
        }
        let _ = writeln!(s, " seed {}", self.seed);
        for c in &self.checks {
            let _ = writeln!(s, "  [{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        s
    }
}

/// Which suites [`run`] executes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Algebra,
    Module,
    Group,
    Integrality,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Suite, String> {
        match s {
            "algebra" => Ok(Suite::Algebra),
            "module" => Ok(Suite::Module),
            "group" => Ok(Suite::Group),
            "integrality" => Ok(Suite::Integrality),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite `{s}`")),
        }
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Suite::Algebra => "algebra",
            Suite::Module => "module",
            Suite::Group => "group",
            Suite::Integrality => "integrality",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

/// Runs a suite on `rs` and the module with the given highest weights.
pub fn run(suite: Suite, rs: &RootSystem, lambdas: &[Vec<i64>], seed: u64) -> Result<Report> {
    let mut checks = Vec::new();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let is_a1 = rs.cartan_type().to_string() == "A1";
    if wants(Suite::Algebra) {
        checks.extend(algebra_suite(rs));
    }
    if wants(Suite::Module) {
        for lam in lambdas {
            checks.extend(module_suite(rs, lam)?);
        }
    }
    let needs_module = wants(Suite::Group) || wants(Suite::Integrality);
    let module = if needs_module { Some(WeightModule::new(rs, lambdas)?) } else { None };
    if wants(Suite::Group) {
        let module = module.as_ref().unwrap();
        if is_a1 {
            checks.extend(golden_sl2_matrices());
        }
        checks.extend(factorization_round_trips(module, seed, 100, 50));
        if rs.rank() >= 2 {
            checks.extend(commutator_suite(rs, seed));
        }
    }
    if wants(Suite::Integrality) {
        let module = module.as_ref().unwrap();
        if is_a1 {
            checks.extend(golden_sl2_iwasawa());
        }
        let lattice = module.build_lattice();
        checks.push(unipotent_sweep(module, &lattice, seed, 200));
        checks.push(iwasawa_sweep(module, &lattice, seed, 100, 12));
        checks.extend(decider_sweep(module, &lattice, seed, 50, 8));
    }
    Ok(Report {
        suite: suite.to_string(),
        cartan_type: rs.cartan_type().to_string(),
        module: needs_module.then(|| lambdas.to_vec()).or_else(|| wants(Suite::Module).then(|| lambdas.to_vec())),
        seed,
        checks,
    })
}

// ---------------------------------------------------------------------------
// random inputs

/// A coordinate drawn from the integers and the halves, thirds and fifths.
pub fn random_coordinate(rng: &mut ChaCha8Rng) -> Q {
    let den = [1, 2, 3, 5][rng.gen_range(0..4)];
    Q::new(rng.gen_range(-6..=6), den)
}

fn nonzero_int(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    let k = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        k
    } else {
        -k
    }
}

/// A nonzero rational with denominator at most `max_den`.
pub fn random_nonzero(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Q {
    Q::new(nonzero_int(rng, max_num), rng.gen_range(1..=max_den))
}

/// One `χ_β` letter per positive root, in a shuffled order.
///
/// Half of the elements use integer parameters only.
pub fn random_unipotent(rs: &RootSystem, rng: &mut ChaCha8Rng) -> Word {
    let integral = rng.gen_bool(0.5);
    let mut order: Vec<RootId> = (0..rs.num_positive()).collect();
    order.shuffle(rng);
    Word(
        order
            .into_iter()
            .map(|b| {
                let t = if integral { Q::from_int(rng.gen_range(-4..=4)) } else { random_coordinate(rng) };
                Letter::chi(b, t)
            })
            .collect(),
    )
}

/// A word of length at most `max_len` over `χ_{±α_i}`, `h_i`, `w̃_{α_i}`.
pub fn random_simple_word(rs: &RootSystem, rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    let n = rs.num_positive();
    let mut w = Word::new();
    for _ in 0..len {
        let i = rng.gen_range(0..rs.rank());
        let l = match rng.gen_range(0..6) {
            0 => Letter::torus(i, random_nonzero(rng, 5, 5)),
            1 => Letter::wtilde(rs.simple(i), random_nonzero(rng, 5, 5)),
            k => {
                let root = if k % 2 == 0 { rs.simple(i) } else { n + rs.simple(i) };
                Letter::chi(root, random_nonzero(rng, 6, 5))
            }
        };
        w.push(l);
    }
    w
}

/// A word in generators of `G(ℤ)` using every root.
pub fn random_integral_word(rs: &RootSystem, rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    let mut w = Word::new();
    for _ in 0..len {
        let l = match rng.gen_range(0..5) {
            0 => Letter::torus(rng.gen_range(0..rs.rank()), Q::from_int(nonzero_int(rng, 1))),
            1 => Letter::wtilde(rs.simple(rng.gen_range(0..rs.rank())), Q::from_int(nonzero_int(rng, 1))),
            _ => Letter::chi(rng.gen_range(0..rs.num_roots()), Q::from_int(nonzero_int(rng, 3))),
        };
        w.push(l);
    }
    w
}

/// An integral word with one letter replaced by a non-integral one.
pub fn random_nonintegral_word(rs: &RootSystem, rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let mut w = random_integral_word(rs, rng, max_len);
    let pos = rng.gen_range(0..w.len());
    let den = [2, 3, 5][rng.gen_range(0..3)];
    w.0[pos] = if rng.gen_bool(0.5) {
        let num = loop {
            let k = nonzero_int(rng, 7);
            if k % den != 0 {
                break k;
            }
        };
        Letter::chi(rng.gen_range(0..rs.num_roots()), Q::new(num, den))
    } else {
        let t = if rng.gen_bool(0.5) { Q::from_int(den) } else { Q::new(1, den) };
        Letter::torus(rng.gen_range(0..rs.rank()), t)
    };
    w
}

// ---------------------------------------------------------------------------
// the SL₂ example

fn a1_module() -> WeightModule {
    WeightModule::new(&RootSystem::from_str_type("A1").expect("A1"), &[vec![1]]).expect("A1 standard module")
}

fn m(rows: &[[Q; 2]; 2]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
}

fn qi(n: i64) -> Q {
    Q::from_int(n)
}

/// The standard module of `SL₂`: generator matrices and the `[[1,1],[1,2]]` example.
pub fn golden_sl2_matrices() -> Vec<Check> {
    let v = a1_module();
    let lattice = v.build_lattice();
    let (up, down) = (0, 1);
    let half = Q::new(1, 2);
    let mut out = Vec::new();
    let ev = |w: Vec<Letter>| evaluate(&v, &Word(w)).expect("valid word");
    let s = Q::new(3, 7);
    out.push(Check::new(
        "sl2 generator matrices",
        ev(vec![Letter::chi(up, s.clone())]).matrix == m(&[[qi(1), s.clone()], [qi(0), qi(1)]])
            && ev(vec![Letter::chi(down, s.clone())]).matrix == m(&[[qi(1), qi(0)], [s.clone(), qi(1)]])
            && ev(vec![Letter::torus(0, s.clone())]).matrix == m(&[[s.clone(), qi(0)], [qi(0), s.recip()]])
            && ev(vec![Letter::wtilde(up, qi(1))]).matrix == m(&[[qi(0), qi(1)], [qi(-1), qi(0)]]),
        "chi_a(s), chi_-a(t), h_a(t), w_a(1) on the standard module",
    ));
    let target = m(&[[qi(1), qi(1)], [qi(1), qi(2)]]);
    let rational =
        vec![Letter::chi(up, half.clone()), Letter::torus(0, half.clone()), Letter::chi(down, half.clone())];
    let integral = vec![Letter::chi(down, qi(1)), Letter::chi(up, qi(1))];
    out.push(Check::new(
        "two words for [[1,1],[1,2]]",
        ev(rational.clone()).matrix == target && ev(integral).matrix == target,
        "chi_a(1/2) h_a(1/2) chi_-a(1/2) = chi_-a(1) chi_a(1)",
    ));
    out.push(Check::new(
        "[[1,1],[1,2]] stabilizes Z^2",
        stabilizes(&v, &lattice, &GroupElement::from_matrix(target.clone())).is_none(),
        "matrix-only element",
    ));
    let decided = integrality_decide(&v, &lattice, &Word(rational));
    let ok = match &decided {
        Ok(d) => match &d.verdict {
            Verdict::InGZ { certificate } => {
                certificate.is_integral() && evaluate(&v, certificate).map(|g| g.matrix == target).unwrap_or(false)
            }
            Verdict::NotIntegral { .. } => false,
        },
        Err(_) => false,
    };
    let detail = match &decided {
        Ok(d) => d.verdict.to_json(v.root_system()).to_string(),
        Err(e) => e.to_string(),
    };
    out.push(Check::new("decider certifies [[1,1],[1,2]]", ok, detail));
    out
}

/// The rational `SL₂` split and the library's own decomposition of the same matrix.
pub fn golden_sl2_iwasawa() -> Vec<Check> {
    let input = [[Q::new(1, 2), qi(0)], [Q::new(3, 4), qi(2)]];
    let gamma = [[qi(2), qi(1)], [qi(3), qi(2)]];
    let b = [[Q::new(1, 4), qi(-2)], [qi(0), qi(4)]];
    let det = |x: &[[Q; 2]; 2]| &(&x[0][0] * &x[1][1]) - &(&x[0][1] * &x[1][0]);
    let integral = |x: &[[Q; 2]; 2]| x.iter().flatten().all(Q::is_integer);
    let reference = mul2(&gamma, &b) == input
        && det(&gamma).is_one()
        && integral(&gamma)
        && det(&b).is_one()
        && b[1][0].is_zero();
    let mut out = vec![Check::new(
        "reference split of [[1/2,0],[3/4,2]]",
        reference,
        "[[2,1],[3,2]] . [[1/4,-2],[0,4]]",
    )];
    let ok = match sl2_iwasawa(&input) {
        Ok((g, bb)) => {
            mul2(&g, &bb) == input && integral(&g) && det(&g).is_one() && bb[1][0].is_zero() && det(&bb).is_one()
        }
        Err(_) => false,
    };
    out.push(Check::new("sl2_iwasawa recomposes [[1/2,0],[3/4,2]]", ok, "gamma integral, b upper triangular"));
    let v = a1_module();
    let word = Word(vec![Letter::chi(1, Q::new(1, 2))]);
    let ok = iwasawa_decompose(&v, &word)
        .and_then(|d| {
            let g = evaluate(&v, &d.gamma)?.then(&v, &d.b.word())?;
            Ok(g.matrix == evaluate(&v, &word)?.matrix && d.gamma.is_integral())
        })
        .unwrap_or(false);
    out.push(Check::new("group decomposition of chi_-a(1/2)", ok, "gamma u h recomposes"));
    out
}

// ---------------------------------------------------------------------------
// the Lie algebra

/// Integrality, magnitudes, Jacobi and the Chevalley involution.
pub fn algebra_suite(rs: &RootSystem) -> Vec<Check> {
    let g = match ChevalleyAlgebra::new(rs) {
        Ok(g) => g,
        Err(e) => return vec![Check::new("structure constants integral", false, e.to_string())],
    };
    let mut out = Vec::new();
    let pairs = g.constants().count();
    out.push(Check::new("structure constants integral", true, format!("{pairs} ordered pairs")));

    let adjoint = WeightModule::new_unrebased(rs, &[rs.root_to_weight(&rs.root(rs.highest_root()))])
        .and_then(|m| ChevalleyAlgebra::from_module(&m));
    let same = adjoint.as_ref().map(|a| a.constants().eq(g.constants())).unwrap_or(false);
    out.push(Check::new("constants agree on the adjoint module", same, "read off a second representation"));

    let mut bad = Vec::new();
    for ((a, b), n) in g.constants() {
        let r = rs.r_chain(a, b).unwrap_or(-1);
        if n.abs() != r + 1 || g.structure_constant(b, a) != Some(-n) {
            bad.push(format!("n({a},{b}) = {n}, r = {r}"));
        }
    }
    out.push(Check::counted("|n| = r + 1 and antisymmetry", pairs - bad.len(), pairs, &bad));

    let dim = g.dim();
    let basis: Vec<_> = (0..dim).map(|k| g.basis(k)).collect();
    let brackets: Vec<Vec<_>> = (0..dim).map(|i| (0..dim).map(|j| g.bracket(&basis[i], &basis[j])).collect()).collect();
    let results = sweep(0, dim, |i, _| {
        let mut fails = Vec::new();
        let mut count = 0usize;
        for j in i..dim {
            for k in j..dim {
                count += 1;
                let t1 = g.bracket(&basis[i], &brackets[j][k]);
                let t2 = g.bracket(&basis[j], &brackets[k][i]);
                let t3 = g.bracket(&basis[k], &brackets[i][j]);
                if !t1.add(&t2).add(&t3).is_zero() {
                    fails.push(format!("({i},{j},{k})"));
                }
            }
        }
        (count, fails)
    });
    let total: usize = results.iter().map(|r| r.0).sum();
    let fails: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    out.push(Check::counted("Jacobi identity on basis triples", total - fails.len(), total, &fails));

    let mut bad = Vec::new();
    for i in 0..dim {
        let ti = g.chevalley_involution(&basis[i]);
        if g.chevalley_involution(&ti) != basis[i] {
            bad.push(format!("theta^2 on basis {i}"));
        }
        for j in 0..dim {
            let lhs = g.chevalley_involution(&brackets[i][j]);
            let rhs = g.bracket(&ti, &g.chevalley_involution(&basis[j]));
            if lhs != rhs {
                bad.push(format!("theta[{i},{j}]"));
            }
        }
    }
    out.push(Check::counted("Chevalley involution is an involutive automorphism", dim * dim + dim - bad.len(), dim * dim + dim, &bad));

    let check_rep = || -> Result<(usize, Vec<String>)> {
        let v = WeightModule::new_unrebased(rs, &[smallest_fundamental(rs)])?;
        let mats: Vec<SparseMatrix> = basis.iter().map(|x| g.represent(&v, x)).collect();
        let mut bad = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                if g.represent(&v, &brackets[i][j]) != mats[i].commutator(&mats[j]) {
                    bad.push(format!("rho[{i},{j}]"));
                }
            }
        }
        Ok((dim * dim, bad))
    };
    out.push(match check_rep() {
        Ok((n, bad)) => Check::counted("representation respects the bracket", n - bad.len(), n, &bad),
        Err(e) => Check::new("representation respects the bracket", false, e.to_string()),
    });
    out
}

// ---------------------------------------------------------------------------
// modules and lattices

/// Dimension, multiplicities, the lattice and the divided powers of `V^λ`.
pub fn module_suite(rs: &RootSystem, lambda: &[i64]) -> Result<Vec<Check>> {
    let v = WeightModule::new(rs, &[lambda.to_vec()])?;
    let tag = format!("V{lambda:?}");
    let mut out = Vec::new();
    let weyl = weyl_dimension(rs, lambda);
    out.push(Check::new(format!("{tag} dimension"), weyl == v.dim().into(), format!("{} vs Weyl {weyl}", v.dim())));

    let expected = weights_and_mults(rs, lambda)?;
    let mut bad = Vec::new();
    for (mu, mult) in &expected {
        if v.multiplicity(mu) != *mult {
            bad.push(format!("{mu:?}: {} vs {mult}", v.multiplicity(mu)));
        }
    }
    if v.weights().len() != expected.len() {
        bad.push(format!("{} weights vs {}", v.weights().len(), expected.len()));
    }
    out.push(Check::counted(&format!("{tag} multiplicities"), expected.len() - bad.len().min(expected.len()), expected.len(), &bad));

    let lattice = v.build_lattice();
    let ranks_ok = v.spaces().iter().enumerate().all(|(s, sp)| lattice.rank(s) == sp.dim);
    out.push(Check::new(
        format!("{tag} lattice splits over weight spaces"),
        ranks_ok && lattice.is_standard(),
        format!("{} weight spaces, ranks equal multiplicities", v.spaces().len()),
    ));
    if v.dim() <= 300 {
        let k = v.kostant_lattice();
        out.push(Check::new(format!("{tag} lattice equals the monomial span"), k == lattice, "independent spanning set"));
    }

    let mut count = 0;
    let mut bad = Vec::new();
    for a in 0..rs.num_roots() {
        for (m, p) in v.divided_powers(a).iter().enumerate() {
            count += 1;
            if !p.is_integral() {
                bad.push(format!("x_{a}^({})", m + 1));
            }
        }
    }
    out.push(Check::counted(&format!("{tag} divided powers integral"), count - bad.len(), count, &bad));

    let mut count = 0;
    let mut bad = Vec::new();
    for i in 0..rs.rank() {
        let top = v.spaces().iter().map(|s| s.weight[i].abs()).max().unwrap_or(0) + 1;
        for m in 0..=top {
            count += 1;
            if !v.binomial_h_action(i, m)?.is_integral() {
                bad.push(format!("(h_{i} choose {m})"));
            }
        }
    }
    out.push(Check::counted(&format!("{tag} binomials in h integral"), count - bad.len(), count, &bad));

    let (n, bad) = lowering_raising_identity(&v);
    out.push(Check::counted(&format!("{tag} raising after lowering fixes extremal vectors"), n - bad.len(), n, &bad));
    Ok(out)
}

/// `x_α^{(n)} x_{−α}^{(n)} v = v` for `v ∈ V_μ`, `μ + α ∉ wts(V)`, `n = ⟨μ, h_α⟩ > 0`.
fn lowering_raising_identity(v: &WeightModule) -> (usize, Vec<String>) {
    let rs = v.root_system();
    let present: std::collections::HashSet<(usize, Vec<i64>)> =
        v.spaces().iter().map(|s| (s.summand, s.weight.clone())).collect();
    let mut transposed: HashMap<(RootId, usize), SparseMatrix> = HashMap::new();
    let mut count = 0;
    let mut bad = Vec::new();
    for a in 0..rs.num_roots() {
        let aw = rs.root_to_weight(&rs.root(a));
        let neg = rs.negate(a);
        for sp in v.spaces() {
            let n = rs.weight_pairing(&sp.weight, a);
            if n <= 0 {
                continue;
            }
            let above: Vec<i64> = sp.weight.iter().zip(&aw).map(|(x, y)| x + y).collect();
            if present.contains(&(sp.summand, above)) {
                continue;
            }
            let n = n as usize;
            for key in [(neg, n), (a, n)] {
                transposed.entry(key).or_insert_with(|| {
                    v.divided_powers(key.0).get(key.1 - 1).map(SparseMatrix::transpose).unwrap_or_else(|| {
                        SparseMatrix::zeros(v.dim(), v.dim())
                    })
                });
            }
            let down = &transposed[&(neg, n)];
            let up = &transposed[&(a, n)];
            for c in sp.offset..sp.offset + sp.dim {
                count += 1;
                let mut acc: HashMap<usize, Q> = HashMap::new();
                for (k, x) in down.row(c) {
                    for (j, y) in up.row(*k) {
                        *acc.entry(*j).or_insert_with(Q::zero) += &(x * y);
                    }
                }
                acc.retain(|_, x| !x.is_zero());
                if acc.len() != 1 || acc.get(&c).is_none_or(|x| !x.is_one()) {
                    bad.push(format!("root {a}, weight {:?}, n = {n}", sp.weight));
                }
            }
        }
    }
    (count, bad)
}

// ---------------------------------------------------------------------------
// group elements

/// Round trips through `unipotent_factorize` and `toral_factorize`.
pub fn factorization_round_trips(v: &WeightModule, seed: u64, unipotents: usize, tori: usize) -> Vec<Check> {
    let rs = v.root_system();
    let order = height_order(rs);
    let res = sweep(salted(seed, 6), unipotents, |_, rng| {
        let coords: Vec<(RootId, Q)> = order.iter().map(|&b| (b, random_coordinate(rng))).collect();
        let w = Word(coords.iter().map(|(b, t)| Letter::chi(*b, t.clone())).collect());
        match evaluate(v, &w).and_then(|g| unipotent_factorize(v, &g.matrix, &order)) {
            Ok(back) if back == coords => None,
            Ok(back) => Some(format!("{coords:?} came back as {back:?}")),
            Err(e) => Some(e.to_string()),
        }
    });
    let bad: Vec<String> = res.into_iter().flatten().collect();
    let mut out = vec![Check::counted("unipotent factorization inverts evaluation", unipotents - bad.len(), unipotents, &bad)];
    let res = sweep(salted(seed, 61), tori, |_, rng| {
        let t: Vec<Q> = (0..rs.rank()).map(|_| random_nonzero(rng, 9, 9)).collect();
        let w = Word(t.iter().enumerate().map(|(i, x)| Letter::torus(i, x.clone())).collect());
        match evaluate(v, &w).and_then(|g| toral_factorize(v, &g.matrix)) {
            Ok(back) if back == t => None,
            Ok(back) => Some(format!("{t:?} came back as {back:?}")),
            Err(e) => Some(e.to_string()),
        }
    });
    let bad: Vec<String> = res.into_iter().flatten().collect();
    out.push(Check::counted("toral factorization inverts evaluation", tori - bad.len(), tori, &bad));
    out
}

/// One row of the commutator audit.
#[derive(Clone, Debug, Serialize)]
pub struct CommutatorAudit {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    /// `(i, j, iα + jβ, c_ij)`.
    pub constants: Vec<crate::group::CommutatorTerm>,
    pub structure_constant: i64,
    pub upward_chain: i64,
    pub c11_equals_structure_constant: bool,
    pub c11_equals_upward_chain: bool,
}

/// `c_ij` for every addable pair of positive roots, fitted on two disjoint sample sets.
pub fn commutator_audit(rs: &RootSystem) -> Result<Vec<CommutatorAudit>> {
    let v = WeightModule::new(rs, &[smallest_fundamental(rs)])?;
    let g = ChevalleyAlgebra::from_module(&v)?;
    let first = [(qi(1), qi(1)), (qi(2), qi(-3)), (Q::new(1, 2), qi(5))];
    let second = [(qi(-1), qi(4)), (Q::new(3, 7), Q::new(-2, 5)), (qi(7), Q::new(1, 3))];
    let mut out = Vec::new();
    for a in 0..rs.num_positive() {
        for b in 0..rs.num_positive() {
            if a == b || rs.add(a, b).is_none() {
                continue;
            }
            let c1 = commutator_constants(&v, a, b, &first)?;
            let c2 = commutator_constants(&v, a, b, &second)?;
            if c1.constants != c2.constants {
                return Err(crate::Error::Internal(format!("constants for ({a},{b}) depend on the sample set")));
            }
            let n = g.structure_constant(a, b).unwrap_or(0);
            let p = rs.p_chain(a, b)?;
            let c11 = c1.constants.iter().find(|x| x.0 == 1 && x.1 == 1).map(|x| x.3).unwrap_or(0);
            out.push(CommutatorAudit {
                alpha: c1.alpha,
                beta: c1.beta,
                constants: c1.constants,
                structure_constant: n,
                upward_chain: p,
                c11_equals_structure_constant: c11 == n,
                c11_equals_upward_chain: c11 == p,
            });
        }
    }
    Ok(out)
}

pub fn commutator_suite(rs: &RootSystem, _seed: u64) -> Vec<Check> {
    match commutator_audit(rs) {
        Ok(rows) => {
            let agree_n = rows.iter().filter(|r| r.c11_equals_structure_constant).count();
            let agree_p = rows.iter().filter(|r| r.c11_equals_upward_chain).count();
            vec![
                Check::new(
                    "commutator constants integral and sample independent",
                    true,
                    format!("{} addable ordered pairs", rows.len()),
                ),
                Check::new(
                    "c11 against n and p (informational)",
                    true,
                    format!("c11 = n on {agree_n}/{n}, c11 = p on {agree_p}/{n}", n = rows.len()),
                ),
            ]
        }
        Err(e) => vec![Check::new("commutator constants integral and sample independent", false, e.to_string())],
    }
}

// ---------------------------------------------------------------------------
// integrality

/// `u·V_ℤ ⊆ V_ℤ` exactly when every factorization coordinate of `u` is an integer.
pub fn unipotent_sweep(v: &WeightModule, lattice: &AdmissibleLattice, seed: u64, cases: usize) -> Check {
    let rs = v.root_system();
    let order = height_order(rs);
    let res = sweep(salted(seed, 5), cases, |_, rng| {
        let w = random_unipotent(rs, rng);
        let outcome = evaluate(v, &w).and_then(|g| {
            let stab = stabilizes(v, lattice, &g).is_none();
            let coords = unipotent_factorize(v, &g.matrix, &order)?;
            Ok((stab, coords.iter().all(|(_, t)| t.is_integer())))
        });
        match outcome {
            Ok((s, c)) if s == c => (s, None),
            Ok((s, c)) => (s, Some(format!("stabilizes = {s}, integral coordinates = {c}"))),
            Err(e) => (false, Some(e.to_string())),
        }
    });
    let integral = res.iter().filter(|r| r.0).count();
    let bad: Vec<String> = res.into_iter().filter_map(|r| r.1).collect();
    let mut c = Check::counted("unipotent integrality criterion", cases - bad.len(), cases, &bad);
    let _ = write!(c.detail, " ({integral} integral)");
    c
}

/// Iwasawa decompositions of random simple-alphabet words.
pub fn iwasawa_sweep(v: &WeightModule, lattice: &AdmissibleLattice, seed: u64, cases: usize, max_len: usize) -> Check {
    let rs = v.root_system();
    let res = sweep(salted(seed, 7), cases, |_, rng| {
        let w = random_simple_word(rs, rng, max_len);
        let run = || -> Result<Option<String>> {
            let d = iwasawa_decompose(v, &w)?;
            let gamma = evaluate(v, &d.gamma)?;
            if !d.gamma.is_integral() {
                return Ok(Some("gamma has a non-integral letter".into()));
            }
            if stabilizes(v, lattice, &gamma).is_some() {
                return Ok(Some("gamma moves the lattice".into()));
            }
            if d.b.h.iter().any(|l| !matches!(l, Letter::Torus { .. } | Letter::Coweight { .. })) {
                return Ok(Some("torus part holds a non-torus letter".into()));
            }
            if gamma.then(v, &d.b.word())?.matrix != evaluate(v, &w)?.matrix {
                return Ok(Some("gamma u h differs from the input".into()));
            }
            Ok(None)
        };
        run().unwrap_or_else(|e| Some(e.to_string()))
    });
    let bad: Vec<String> = res.into_iter().flatten().collect();
    Check::counted("Iwasawa decomposition recomposes with integral gamma", cases - bad.len(), cases, &bad)
}

fn witness_is_valid(v: &WeightModule, lattice: &AdmissibleLattice, g: &GroupElement, w: &Witness) -> bool {
    let m = if w.inverse { g.inverse(v).matrix } else { g.matrix.clone() };
    lattice.contains(&w.vector) && m.mul_vec(&w.vector) == w.image && !lattice.contains(&w.image)
}

/// Integral words are certified, non-integral ones are refuted with a witness.
pub fn decider_sweep(v: &WeightModule, lattice: &AdmissibleLattice, seed: u64, cases: usize, max_len: usize) -> Vec<Check> {
    let rs = v.root_system();
    let res = sweep(salted(seed, 8), cases, |_, rng| {
        let w = random_integral_word(rs, rng, max_len);
        let run = || -> Result<(Option<String>, Option<String>)> {
            let d = integrality_decide(v, lattice, &w)?;
            let Verdict::InGZ { certificate } = &d.verdict else {
                return Ok((Some("integral word was refuted".into()), None));
            };
            let g = evaluate(v, &w)?;
            let c = evaluate(v, certificate)?;
            let exact = certificate.is_integral() && c.matrix == g.matrix;
            let stab = stabilizes(v, lattice, &c).is_none();
            Ok(((!exact).then(|| "certificate does not reproduce the word".into()), (!stab).then(|| "certificate moves the lattice".into())))
        };
        run().unwrap_or_else(|e| (Some(e.to_string()), None))
    });
    let bad_a: Vec<String> = res.iter().filter_map(|r| r.0.clone()).collect();
    let bad_c: Vec<String> = res.iter().filter_map(|r| r.1.clone()).collect();
    let res = sweep(salted(seed, 81), cases, |_, rng| {
        let run = |rng: &mut ChaCha8Rng| -> Result<Option<String>> {
            for _ in 0..64 {
                let w = random_nonintegral_word(rs, rng, max_len);
                let g = evaluate(v, &w)?;
                if stabilizes(v, lattice, &g).is_none() {
                    continue;
                }
                let d = integrality_decide(v, lattice, &w)?;
                return Ok(match &d.verdict {
                    Verdict::NotIntegral { witness } if witness_is_valid(v, lattice, &g, witness) => None,
                    Verdict::NotIntegral { .. } => Some("witness does not escape the lattice".into()),
                    Verdict::InGZ { .. } => Some("element moving the lattice was certified".into()),
                });
            }
            Ok(Some("no non-integral sample found".into()))
        };
        run(rng).unwrap_or_else(|e| Some(e.to_string()))
    });
    let bad_b: Vec<String> = res.into_iter().flatten().collect();
    vec![
        Check::counted("integral words certified exactly", cases - bad_a.len(), cases, &bad_a),
        Check::counted("non-integral words refuted with witnesses", cases - bad_b.len(), cases, &bad_b),
        Check::counted("certificates stabilize the lattice", cases - bad_c.len(), cases, &bad_c),
    ]
}

/// The fundamental weights and `ρ`.
pub fn standard_weights(rs: &RootSystem) -> Vec<Vec<i64>> {
    let l = rs.rank();
    let mut v: Vec<Vec<i64>> = (0..l).map(|i| fundamental_weight(l, i)).collect();
    if l > 1 {
        v.push(vec![1; l]);
    }
    v
}
