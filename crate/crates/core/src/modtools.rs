//! Submodules, irreducibility, homomorphisms and quotients of representations.

use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::gf::Field;
use crate::linalg::{poly_eval, DenseMatrix, SparseEchelon, SparseMatrix, Subspace};
use crate::rep::{RepError, Representation};
use crate::rng::seeded;
use crate::verma::{InducedModule, ModuleVector};

/// Default bound on `dim(M) · dim(N)` for [`hom_space`].
pub const HOM_BOUND: usize = 20_000;
/// Largest module handled by the exhaustive submodule methods.
pub const EXHAUSTIVE_DIM: usize = 32;
/// Largest number of projective points scanned by the exhaustive methods.
pub const POINT_LIMIT: u64 = 200_000;
/// Norton kernels are scanned point by point only over fields this small.
pub const NORTON_SCAN_FIELD: u32 = 3125;
const NORTON_POINT_LIMIT: u64 = 4096;
const NORTON_SAMPLES: u32 = 64;
const ROOT_SCAN_LIMIT: u64 = 50_000_000;
const RANDOM_KERNEL_VECTORS: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModError {
    #[error("problem too large: {0}")]
    TooLarge(String),
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("quotient by the whole module is zero")]
    ZeroQuotient,
    #[error("modules have different characters or fields")]
    Incompatible,
    #[error("module axioms fail on the result: {0}")]
    AxiomViolation(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// The smallest subspace containing `seeds` and stable under `gens`.
pub fn spin_with(field: &Field, n: usize, gens: &[SparseMatrix], seeds: &[Vec<u32>]) -> Subspace {
    let mut sub = Subspace::zero(field, n);
    let mut queue: Vec<Vec<u32>> = seeds.to_vec();
    while let Some(v) = queue.pop() {
        if sub.is_full() {
            break;
        }
        if sub.insert(v.clone()) {
            for g in gens {
                let w = g.apply(field, &v);
                if w.iter().any(|&x| x != 0) {
                    queue.push(w);
                }
            }
        }
    }
    sub
}

pub fn spin(rep: &Representation, seeds: &[Vec<u32>]) -> Subspace {
    spin_with(rep.field(), rep.dim(), rep.generators(), seeds)
}

pub fn spin_vectors(module: &InducedModule, seeds: &[ModuleVector]) -> Subspace {
    let dense: Vec<Vec<u32>> = seeds.iter().map(|v| v.to_dense(module.dim())).collect();
    spin(module.rep(), &dense)
}

/// Spin under the transposed generators, i.e. in the dual module.
pub fn spin_dual(rep: &Representation, seeds: &[Vec<u32>]) -> Subspace {
    spin_with(rep.field(), rep.dim(), rep.transposed_generators(), seeds)
}

pub fn is_invariant(rep: &Representation, s: &Subspace) -> bool {
    s.basis()
        .iter()
        .all(|v| rep.generators().iter().all(|g| s.contains(&g.apply(rep.field(), v))))
}

/// `(q^k - 1)/(q - 1)`, saturating.
pub fn projective_count(q: u32, k: usize) -> u64 {
    let mut total: u64 = 0;
    let mut power: u64 = 1;
    for _ in 0..k {
        total = total.saturating_add(power);
        power = power.saturating_mul(q as u64);
    }
    total
}

/// One representative of every one-dimensional subspace of `span(basis)`,
/// normalized so the first nonzero coordinate (in the given basis) is 1.
pub fn projective_points<'a>(field: &'a Field, basis: &'a [Vec<u32>]) -> impl Iterator<Item = Vec<u32>> + 'a {
    let k = basis.len();
    let q = field.order() as u64;
    (0..k).flat_map(move |lead| {
        let tail = k - lead - 1;
        (0..q.pow(tail as u32)).map(move |mut code| {
            let mut v = basis[lead].clone();
            for b in &basis[lead + 1..] {
                let c = (code % q) as u32;
                code /= q;
                if c != 0 {
                    field.axpy(&mut v, c, b);
                }
            }
            v
        })
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Irreducible,
    ReducibleWithWitness(Subspace),
    Inconclusive,
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Irreducible => "irreducible",
            Verdict::ReducibleWithWitness(_) => "reducible",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Outcome of the randomized Norton test with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct IrreducibilityReport {
    pub verdict: Verdict,
    pub samples: u32,
    pub seed: u64,
    pub nullity: Option<usize>,
    pub method: &'static str,
}

impl IrreducibilityReport {
    pub fn to_json(&self, field: &Field) -> Value {
        let witness = match &self.verdict {
            Verdict::ReducibleWithWitness(s) => json!({
                "dim": s.dim(),
                "basis": s.basis().iter()
                    .map(|v| v.iter().map(|&c| field.element_to_json(c)).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            }),
            _ => Value::Null,
        };
        json!({
            "verdict": self.verdict.tag(),
            "witness": witness,
            "samples": self.samples,
            "seed": self.seed,
            "nullity": self.nullity,
            "method": self.method,
        })
    }
}

fn random_combination<R: Rng>(rng: &mut R, rep: &Representation) -> SparseMatrix {
    let field = rep.field();
    let n = rep.dim();
    rep.generators()
        .iter()
        .fold(SparseMatrix::zeros(n, n), |acc, g| {
            let c = rng.gen_range(0..field.order());
            acc.add_scaled(field, c, g)
        })
}

fn random_vector<R: Rng>(rng: &mut R, field: &Field, basis: &[Vec<u32>]) -> Vec<u32> {
    let n = basis.first().map_or(0, Vec::len);
    let mut v = vec![0; n];
    for b in basis {
        field.axpy(&mut v, rng.gen_range(0..field.order()), b);
    }
    v
}

/// A proper nonzero submodule found by spinning `vectors`, if any.
fn first_proper(
    field: &Field,
    n: usize,
    gens: &[SparseMatrix],
    vectors: impl Iterator<Item = Vec<u32>>,
) -> Option<Subspace> {
    for v in vectors {
        let s = spin_with(field, n, gens, &[v]);
        if !s.is_full() && !s.is_zero() {
            return Some(s);
        }
    }
    None
}

/// Randomized Norton criterion. Samples `θ = A + c1 AB + c2 ABC - c` from
/// the action algebra, with `c` an eigenvalue of the first three terms lying
/// in the field, until it is singular; then spins the points of `ker θ` in
/// the module and of `ker θ^T` in the dual.
pub fn is_irreducible(rep: &Representation, seed: u64) -> IrreducibilityReport {
    let field = rep.field();
    let n = rep.dim();
    let q = field.order();
    if n <= 1 {
        return IrreducibilityReport {
            verdict: Verdict::Irreducible,
            samples: 0,
            seed,
            nullity: None,
            method: "dimension",
        };
    }
    let mut rng = seeded(seed);
    let mut last_nullity = None;
    for sample in 1..=NORTON_SAMPLES {
        let a = random_combination(&mut rng, rep);
        let b = random_combination(&mut rng, rep);
        let c = random_combination(&mut rng, rep);
        let c1 = rng.gen_range(0..q);
        let c2 = rng.gen_range(0..q);
        let ab = a.mul(field, &b);
        let abc = ab.mul(field, &c);
        let mut theta = a
            .add_scaled(field, c1, &ab)
            .add_scaled(field, c2, &abc)
            .to_dense();
        // Shift by an eigenvalue in the field so that θ is singular.
        let shift = if (q as u64) * (n as u64) <= ROOT_SCAN_LIMIT {
            let cp = theta.charpoly(field);
            let roots: Vec<u32> = (0..q).filter(|&x| poly_eval(field, &cp, x) == 0).collect();
            if roots.is_empty() {
                continue;
            }
            roots[rng.gen_range(0..roots.len())]
        } else {
            rng.gen_range(0..q)
        };
        theta.add_scalar(field, field.neg(shift));
        let kernel = theta.nullspace(field);
        if kernel.is_empty() {
            continue;
        }
        let k = kernel.len();
        last_nullity = Some(k);
        let dual_kernel = theta.transpose().nullspace(field);
        let points = projective_count(q, k);
        let report = |verdict, method| IrreducibilityReport {
            verdict,
            samples: sample,
            seed,
            nullity: Some(k),
            method,
        };
        if k == 1 || (q <= NORTON_SCAN_FIELD && points <= NORTON_POINT_LIMIT) {
            if let Some(s) = first_proper(field, n, rep.generators(), projective_points(field, &kernel)) {
                return report(Verdict::ReducibleWithWitness(s), "norton-scan");
            }
            if let Some(s) = first_proper(
                field,
                n,
                rep.transposed_generators(),
                projective_points(field, &dual_kernel),
            ) {
                return report(Verdict::ReducibleWithWitness(s.annihilator()), "norton-scan");
            }
            return report(Verdict::Irreducible, "norton-scan");
        }
        if q > NORTON_SCAN_FIELD {
            let mut module_vectors = vec![kernel.clone()];
            let mut dual_vectors = vec![dual_kernel.clone()];
            for _ in 0..RANDOM_KERNEL_VECTORS {
                module_vectors.push(vec![random_vector(&mut rng, field, &kernel)]);
                dual_vectors.push(vec![random_vector(&mut rng, field, &dual_kernel)]);
            }
            for seeds in &module_vectors {
                let s = spin(rep, seeds);
                if !s.is_full() && !s.is_zero() {
                    return report(Verdict::ReducibleWithWitness(s), "norton-kernel-spin");
                }
            }
            for seeds in &dual_vectors {
                let s = spin_dual(rep, seeds);
                if !s.is_full() && !s.is_zero() {
                    return report(Verdict::ReducibleWithWitness(s.annihilator()), "norton-kernel-spin");
                }
            }
            return report(Verdict::Irreducible, "norton-kernel-spin");
        }
    }
    IrreducibilityReport {
        verdict: Verdict::Inconclusive,
        samples: NORTON_SAMPLES,
        seed,
        nullity: last_nullity,
        method: "norton-scan",
    }
}

/// A basis of `Hom(M, N)`: matrices `Φ` (dim N × dim M) with `Φ ρ_M = ρ_N Φ`.
#[derive(Debug, Clone)]
pub struct MorphismSpace {
    pub basis: Vec<DenseMatrix>,
}

impl MorphismSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

fn intertwines(field: &Field, phi: &SparseMatrix, m: &Representation, n: &Representation) -> bool {
    m.generators()
        .iter()
        .zip(n.generators())
        .all(|(gm, gn)| phi.mul(field, gm) == gn.mul(field, phi))
}

fn compatible(m: &Representation, n: &Representation) -> bool {
    m.chi() == n.chi() && m.field() == n.field()
}

pub fn hom_space(m: &Representation, n: &Representation) -> Result<MorphismSpace, ModError> {
    hom_space_bounded(m, n, HOM_BOUND)
}

/// Solves the linear system `Φ ρ_M(g) - ρ_N(g) Φ = 0` generator by generator.
pub fn hom_space_bounded(m: &Representation, n: &Representation, bound: usize) -> Result<MorphismSpace, ModError> {
    if !compatible(m, n) {
        return Err(ModError::Incompatible);
    }
    let (dm, dn) = (m.dim(), n.dim());
    if dm * dn > bound {
        return Err(ModError::TooLarge(format!(
            "hom space needs {dm}·{dn} = {} unknowns, bound is {bound}; use the intertwiner candidate",
            dm * dn
        )));
    }
    let field = m.field();
    let mut ech = SparseEchelon::new(field, dm * dn);
    let nt = n.transposed_generators();
    'outer: for (gm, gnt) in m.generators().iter().zip(nt) {
        for a in 0..dn {
            for c in 0..dm {
                let left = gm.column(c).iter().map(|&(b, v)| (a * dm + b as usize, v));
                let right = gnt
                    .column(a)
                    .iter()
                    .map(|&(b, v)| (b as usize * dm + c, field.neg(v)));
                ech.add_row(left.chain(right));
                if ech.is_full_rank() {
                    break 'outer;
                }
            }
        }
    }
    let basis: Vec<DenseMatrix> = ech
        .kernel()
        .into_iter()
        .map(|x| {
            let rows: Vec<Vec<u32>> = x.chunks(dm).map(<[u32]>::to_vec).collect();
            DenseMatrix::from_rows(dm, &rows)
        })
        .collect();
    for phi in &basis {
        assert!(
            intertwines(field, &SparseMatrix::from_dense(phi), m, n),
            "hom solver produced a non-intertwining map"
        );
    }
    Ok(MorphismSpace { basis })
}

#[derive(Debug, Clone)]
pub enum Intertwiner {
    /// `Φ: Z_χ(μ) → Z_χ(λ)` with `Φ(1 ⊗ v_μ) = w`.
    Map {
        shift: u32,
        w: ModuleVector,
        matrix: SparseMatrix,
        rank: usize,
        isomorphism: bool,
    },
    NotApplicable(String),
}

impl Intertwiner {
    pub fn is_isomorphism(&self) -> bool {
        matches!(self, Intertwiner::Map { isomorphism: true, .. })
    }
}

/// The candidate map `Z_χ(μ) → Z_χ(λ)`, `v_μ ↦ (e_{-1}t^ℓ)^{[λ-μ]} ⊗ v_λ`,
/// extended by equivariance and verified on every generator.
pub fn intertwiner_candidate(m: &InducedModule, n: &InducedModule) -> Intertwiner {
    let (dm, dn) = (m.datum(), n.datum());
    if dm.cut() != 0 || dn.cut() != 0 || !compatible(m.rep(), n.rep()) {
        return Intertwiner::NotApplicable("both modules must be Verma modules for one character".into());
    }
    let field = m.rep().field();
    let shape = dm.shape();
    let ell = shape.ell();
    let (lambda, mu) = (dm.lambda().expect("Verma weight"), dn.lambda().expect("Verma weight"));
    let diff = field.sub(lambda, mu);
    if !field.in_prime_subfield(diff) {
        return Intertwiner::NotApplicable("λ - μ is not in the prime field".into());
    }
    let lower = m.rep().generator(shape.idx(-1, ell));
    let mut w = vec![0u32; m.dim()];
    w[0] = 1;
    for _ in 0..diff {
        w = lower.apply(field, &w);
    }
    for u in shape.filtration_range(0) {
        let image = m.rep().act(u, &w);
        let mut expected = w.clone();
        field.scale_in_place(&mut expected, dn.mu()[u]);
        if image != expected {
            return Intertwiner::NotApplicable(format!(
                "{} does not act on w by its base scalar",
                shape.basis(u)
            ));
        }
    }
    let d = dn.complement_len();
    let columns: Vec<Vec<(usize, u32)>> = (0..n.dim())
        .map(|idx| {
            let mono = n.monomial(idx);
            let mut v = w.clone();
            for k in (0..d).rev() {
                for _ in 0..mono.exponents[k] {
                    v = m.rep().act(k, &v);
                }
            }
            v.into_iter().enumerate().filter(|&(_, c)| c != 0).collect()
        })
        .collect();
    let matrix = SparseMatrix::from_columns(field, m.dim(), columns);
    if !intertwines(field, &matrix, n.rep(), m.rep()) {
        return Intertwiner::NotApplicable("the extended map does not intertwine".into());
    }
    let rank = matrix.to_dense().rank(field);
    Intertwiner::Map {
        shift: diff,
        w: ModuleVector::from_dense(&w),
        matrix,
        rank,
        isomorphism: rank == m.dim() && rank == n.dim(),
    }
}

fn coordinates(s: &Subspace, v: &[u32]) -> Vec<u32> {
    s.pivots().iter().map(|&c| v[c]).collect()
}

fn lift(field: &Field, s: &Subspace, coords: &[u32]) -> Vec<u32> {
    let mut v = vec![0; s.ambient_dim()];
    for (row, &c) in s.basis().iter().zip(coords) {
        field.axpy(&mut v, c, row);
    }
    v
}

/// Matrix of `g` restricted to a `g`-stable subspace, in its echelon coordinates.
fn restricted(field: &Field, g: &SparseMatrix, s: &Subspace) -> DenseMatrix {
    let cols: Vec<Vec<u32>> = s.basis().iter().map(|b| coordinates(s, &g.apply(field, b))).collect();
    DenseMatrix::from_rows(s.dim(), &cols).transpose()
}

fn power(field: &Field, a: &DenseMatrix, mut e: usize) -> DenseMatrix {
    let mut result = DenseMatrix::identity(a.nrows());
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(field, &base);
        }
        base = base.mul(field, &base);
        e >>= 1;
    }
    result
}

/// Subspaces whose points meet every nonzero submodule.
///
/// When `χ(W_{(1)}) = 0` every nonzero submodule has nonzero invariants under
/// `W_{(1)}`, which the commuting elements `e_0 t^j` preserve; each such
/// element with all its eigenvalues in the field then has an eigenvector there.
pub fn candidate_spaces(rep: &Representation) -> Vec<Subspace> {
    let field = rep.field();
    let shape = rep.shape();
    let n = rep.dim();
    let upper = shape.filtration_range(1);
    let start = if rep.chi().vanishes_on(upper.clone()) && !upper.is_empty() {
        let rows: Vec<Vec<u32>> = upper
            .flat_map(|u| rep.generator(u).to_dense().rows().map(<[u32]>::to_vec).collect::<Vec<_>>())
            .collect();
        Subspace::spanned_by(field, n, DenseMatrix::from_rows(n, &rows).nullspace(field))
    } else {
        Subspace::full(field, n)
    };
    let mut spaces = vec![start];
    for u in shape.graded_range(0) {
        let g = rep.generator(u);
        spaces = spaces
            .into_iter()
            .flat_map(|s| {
                let a = restricted(field, g, &s);
                let k = s.dim();
                let mut eigen = Vec::new();
                let mut generalized = 0;
                for c in 0..field.order() {
                    let mut shifted = a.clone();
                    shifted.add_scalar(field, field.neg(c));
                    let kernel = shifted.nullspace(field);
                    if kernel.is_empty() {
                        continue;
                    }
                    generalized += k - power(field, &shifted, k).rank(field);
                    let vectors = kernel.iter().map(|x| lift(field, &s, x));
                    eigen.push(Subspace::spanned_by(field, n, vectors));
                    if generalized == k {
                        break;
                    }
                }
                if generalized == k {
                    eigen
                } else {
                    vec![s]
                }
            })
            .collect();
    }
    spaces
}

fn candidate_points(rep: &Representation) -> Result<Vec<Vec<u32>>, ModError> {
    let field = rep.field();
    let spaces = candidate_spaces(rep);
    let total: u64 = spaces
        .iter()
        .map(|s| projective_count(field.order(), s.dim()))
        .fold(0, u64::saturating_add);
    if total > POINT_LIMIT {
        return Err(ModError::TooLarge(format!(
            "{total} candidate points exceed the limit {POINT_LIMIT}"
        )));
    }
    Ok(spaces
        .iter()
        .flat_map(|s| projective_points(field, s.basis()).collect::<Vec<_>>())
        .collect())
}

/// Result of spinning every candidate point.
#[derive(Debug, Clone)]
pub struct ExhaustiveReport {
    pub points: usize,
    pub proper: Option<Subspace>,
}

impl ExhaustiveReport {
    pub fn is_irreducible(&self) -> bool {
        self.proper.is_none()
    }
}

/// Decides irreducibility by spinning every one-dimensional subspace that can
/// lie in a minimal submodule (see [`candidate_spaces`]).
pub fn exhaustive_submodule_search(rep: &Representation) -> Result<ExhaustiveReport, ModError> {
    if rep.dim() > EXHAUSTIVE_DIM {
        return Err(ModError::TooLarge(format!("dimension {} > {EXHAUSTIVE_DIM}", rep.dim())));
    }
    let points = candidate_points(rep)?;
    let proper = points
        .par_iter()
        .map(|v| spin(rep, std::slice::from_ref(v)))
        .find_first(|s| !s.is_full() && !s.is_zero());
    Ok(ExhaustiveReport {
        points: points.len(),
        proper,
    })
}

/// Sum of all simple submodules.
pub fn socle(rep: &Representation) -> Result<Subspace, ModError> {
    if rep.dim() > EXHAUSTIVE_DIM {
        return Err(ModError::TooLarge(format!("dimension {} > {EXHAUSTIVE_DIM}", rep.dim())));
    }
    let field = rep.field();
    let points = candidate_points(rep)?;
    let spins: Vec<Subspace> = points
        .par_iter()
        .map(|v| spin(rep, std::slice::from_ref(v)))
        .collect();
    let mut result = Subspace::zero(field, rep.dim());
    for s in &spins {
        let simple = points
            .iter()
            .zip(&spins)
            .filter(|(v, _)| s.contains(v))
            .all(|(_, t)| t == s);
        if simple {
            result = result.sum(s);
        }
    }
    Ok(result)
}

/// The socle and the radical (intersection of maximal submodules), the latter
/// as the annihilator of the socle of the dual.
pub fn socle_and_maximal(rep: &Representation) -> Result<(Subspace, Subspace), ModError> {
    let soc = socle(rep)?;
    let rad = socle(&rep.dual())?.annihilator();
    Ok((soc, rad))
}

/// The action on `M / S` in the coordinates of the non-pivot columns of `S`.
pub fn quotient(rep: &Representation, s: &Subspace) -> Result<Representation, ModError> {
    if !is_invariant(rep, s) {
        return Err(ModError::NotInvariant);
    }
    if s.is_full() {
        return Err(ModError::ZeroQuotient);
    }
    let field = rep.field();
    let n = rep.dim();
    let mut is_pivot = vec![false; n];
    for &c in s.pivots() {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut position = vec![usize::MAX; n];
    for (k, &c) in free.iter().enumerate() {
        position[c] = k;
    }
    let gens = rep
        .generators()
        .iter()
        .map(|g| {
            let columns = free
                .iter()
                .map(|&c| {
                    let mut e = vec![0u32; n];
                    e[c] = 1;
                    let mut img = g.apply(field, &e);
                    s.reduce(&mut img);
                    img.iter()
                        .enumerate()
                        .filter(|&(_, &x)| x != 0)
                        .map(|(r, &x)| (position[r], x))
                        .collect()
                })
                .collect();
            SparseMatrix::from_columns(field, free.len(), columns)
        })
        .collect();
    let q = Representation::new(rep.chi().clone(), free.len(), gens)?;
    let axioms = q.check_axioms();
    if !axioms.is_ok() {
        return Err(ModError::AxiomViolation(format!("{axioms:?}")));
    }
    Ok(q)
}

/// The action on an invariant subspace, in its echelon coordinates.
pub fn submodule(rep: &Representation, s: &Subspace) -> Result<Representation, ModError> {
    if !is_invariant(rep, s) {
        return Err(ModError::NotInvariant);
    }
    let field = rep.field();
    let gens = rep
        .generators()
        .iter()
        .map(|g| SparseMatrix::from_dense(&restricted(field, g, s)))
        .collect();
    Ok(Representation::new(rep.chi().clone(), s.dim(), gens)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verma::build_verma;
    use crate::witt::{AlgebraShape, PChar};

    fn w_verma(lambda: u32) -> InducedModule {
        let shape = AlgebraShape::new(Field::prime(5).unwrap(), 0);
        build_verma(&PChar::zero(&shape), lambda).unwrap()
    }

    #[test]
    fn projective_points_are_distinct_lines() {
        let field = Field::prime(5).unwrap();
        let basis = vec![vec![1, 0, 0], vec![0, 1, 0]];
        let pts: Vec<_> = projective_points(&field, &basis).collect();
        assert_eq!(pts.len() as u64, projective_count(5, 2));
        assert_eq!(pts.len(), 6);
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                let s = Subspace::spanned_by(&field, 3, [a.clone()]);
                assert!(!s.contains(b));
            }
        }
    }

    #[test]
    fn spin_basics() {
        let m = w_verma(2);
        assert!(spin(m.rep(), &[vec![0; 5]]).is_zero());
        assert!(spin_vectors(&m, &[m.generator_vector()]).is_full());
    }

    #[test]
    fn quotient_edge_cases() {
        let m = w_verma(1);
        let field = m.rep().field().clone();
        let q = quotient(m.rep(), &Subspace::zero(&field, 5)).unwrap();
        assert_eq!(q.generators(), m.rep().generators());
        assert_eq!(quotient(m.rep(), &Subspace::full(&field, 5)).unwrap_err(), ModError::ZeroQuotient);
        let line = Subspace::spanned_by(&field, 5, [vec![1, 0, 0, 0, 0]]);
        assert_eq!(quotient(m.rep(), &line).unwrap_err(), ModError::NotInvariant);
    }

    #[test]
    fn direct_sum_is_reducible() {
        let m = w_verma(2);
        let sum = m.rep().direct_sum(m.rep());
        let report = is_irreducible(&sum, 11);
        assert!(matches!(report.verdict, Verdict::ReducibleWithWitness(_)));
        assert!(!exhaustive_submodule_search(&sum).unwrap().is_irreducible());
    }
}
