//! Induced `U_χ(W_ℓ)`-modules built by PBW straightening.
//!
//! A module induced from a one-dimensional module of `W_{ℓ,(cut)}` has the
//! ordered monomials in the complement basis `e_i t^j` (`i < cut`) as basis.
//! With the degree-major numbering of `W_ℓ`, the complement is the index
//! range `0..(cut+1)(ℓ+1)`, and a monomial with exponents `a_k` is stored as
//! the integer `Σ a_k p^k`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use serde::Serialize;
use thiserror::Error;

use crate::cache::ActionCache;
use crate::gf::{Field, GfError};
use crate::linalg::{SparseMatrix, Subspace};
use crate::rep::{AxiomReport, Representation};
use crate::witt::{AlgebraShape, BasisIndex, LieElement, PChar, WittError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VermaError {
    #[error("λ = {0} is not in Λ(χ): λ^p - λ differs from χ(e_0)^p")]
    BadLambda(String),
    #[error("base scalars do not define a one-dimensional module: {0}")]
    NotOneDim(String),
    #[error("Λ(χ) is empty over F_{{{p}^{m}}}; extend the field degree by a factor {p}")]
    NotSplit { p: u32, m: u32 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("lemma condition ({0}) failed: {1}")]
    ConditionFailed(u8, String),
    #[error("module axioms fail: {0}")]
    AxiomViolation(String),
    #[error(transparent)]
    Witt(#[from] WittError),
    #[error(transparent)]
    Gf(#[from] GfError),
}

fn map_not_split(e: GfError) -> VermaError {
    match e {
        GfError::NotSplit { p, m } => VermaError::NotSplit { p, m },
        other => other.into(),
    }
}

/// The data of a one-dimensional base module of `W_{ℓ,(cut)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionDatum {
    chi: PChar,
    cut: u32,
    lambda: Option<u32>,
    mu: Vec<u32>,
}

impl InductionDatum {
    pub fn shape(&self) -> &AlgebraShape {
        self.chi.shape()
    }

    pub fn chi(&self) -> &PChar {
        &self.chi
    }

    pub fn field(&self) -> &Field {
        self.chi.field()
    }

    pub fn cut(&self) -> u32 {
        self.cut
    }

    pub fn lambda(&self) -> Option<u32> {
        self.lambda
    }

    /// `μ` on every basis index; zero on the complement.
    pub fn mu(&self) -> &[u32] {
        &self.mu
    }

    pub fn mu_at(&self, b: BasisIndex) -> u32 {
        self.mu[self.shape().idx(b.i, b.j)]
    }

    /// Number of complement generators, `(cut+1)(ℓ+1)`.
    pub fn complement_len(&self) -> usize {
        (self.cut as usize + 1) * (self.shape().ell() as usize + 1)
    }

    pub fn complement(&self) -> Vec<BasisIndex> {
        (0..self.complement_len()).map(|u| self.shape().basis(u)).collect()
    }

    pub fn module_dim(&self) -> usize {
        (self.shape().p() as usize).pow(self.complement_len() as u32)
    }
}

/// Solves for the base scalars and checks that they define a one-dimensional
/// `U_χ(W_{ℓ,(cut)})`-module.
pub fn base_scalars(chi: &PChar, cut: u32, lambda: Option<u32>) -> Result<InductionDatum, VermaError> {
    let shape = chi.shape();
    let field = chi.field();
    let p = shape.p();
    let ell = shape.ell();
    if cut as i32 > p as i32 - 2 {
        return Err(VermaError::HypothesisViolated(format!("cut {cut} exceeds p-2")));
    }
    let mut mu = vec![0u32; shape.dim()];
    if cut == 0 {
        let height = chi.height()?;
        if height > 1 {
            return Err(VermaError::HypothesisViolated(format!(
                "Verma induction needs height at most 1, found {height}"
            )));
        }
        let lambda = lambda.ok_or_else(|| {
            VermaError::HypothesisViolated("Verma induction needs a weight λ".into())
        })?;
        if !field.contains(lambda) {
            return Err(GfError::BadElement(lambda.to_string()).into());
        }
        let lhs = field.sub(field.pow(lambda, p as u64), lambda);
        if lhs != field.pow(chi.get(0, 0), p as u64) {
            return Err(VermaError::BadLambda(field.format_element(lambda)));
        }
        mu[shape.idx(0, 0)] = lambda;
        for i in (1..=ell).rev() {
            let ip = i as u64 * p as u64;
            let chi_ip = if ip <= ell as u64 { mu[shape.idx(0, ip as u32)] } else { 0 };
            let target = field.add(chi_ip, field.pow(chi.get(0, i), p as u64));
            mu[shape.idx(0, i)] = field.pth_root(target);
        }
    } else {
        for u in shape.filtration_range(cut as i32) {
            mu[u] = chi.value(u);
        }
    }
    let range = shape.filtration_range(cut as i32);
    for u in range.clone() {
        for v in range.clone() {
            if let Some((w, c)) = shape.basis_bracket(u, v) {
                if field.mul(c, mu[w]) != 0 {
                    return Err(VermaError::NotOneDim(format!(
                        "μ([{}, {}]) ≠ 0",
                        shape.basis(u),
                        shape.basis(v)
                    )));
                }
            }
        }
        let mut lhs = field.pow(mu[u], p as u64);
        if let Some(w) = shape.p_map_basis(u) {
            lhs = field.sub(lhs, mu[w]);
        }
        if lhs != field.pow(chi.value(u), p as u64) {
            return Err(VermaError::NotOneDim(format!(
                "μ(x)^p - μ(x^[p]) ≠ χ(x)^p at x = {}",
                shape.basis(u)
            )));
        }
    }
    Ok(InductionDatum {
        chi: chi.clone(),
        cut,
        lambda: if cut == 0 { lambda } else { None },
        mu,
    })
}

/// `Λ(χ) = {λ : λ^p - λ = χ(e_0)^p}` in the working field.
pub fn lambda_set(chi: &PChar) -> Result<Vec<u32>, VermaError> {
    let field = chi.field();
    let c = field.pow(chi.get(0, 0), field.p() as u64);
    field.artin_schreier_roots(c).map_err(map_not_split)
}

/// Exponent tuple over the complement basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    pub exponents: Vec<u32>,
}

impl PbwMonomial {
    pub fn from_index(index: usize, p: u32, len: usize) -> Self {
        let mut rest = index;
        let exponents = (0..len)
            .map(|_| {
                let a = (rest % p as usize) as u32;
                rest /= p as usize;
                a
            })
            .collect();
        PbwMonomial { exponents }
    }

    pub fn index(&self, p: u32) -> usize {
        self.exponents
            .iter()
            .rev()
            .fold(0usize, |acc, &a| acc * p as usize + a as usize)
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

/// A vector of an induced module: monomial index to coefficient code.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleVector {
    terms: BTreeMap<usize, u32>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(index: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(index, 1);
        ModuleVector { terms }
    }

    pub fn from_dense(v: &[u32]) -> Self {
        ModuleVector {
            terms: v
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<u32> {
        let mut v = vec![0; dim];
        for (&i, &c) in &self.terms {
            v[i] = c;
        }
        v
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.terms.iter().map(|(&i, &c)| (i, c))
    }

    pub fn coefficient(&self, index: usize) -> u32 {
        self.terms.get(&index).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, field: &Field, index: usize, c: u32) {
        let slot = self.terms.entry(index).or_insert(0);
        *slot = field.add(*slot, c);
        if *slot == 0 {
            self.terms.remove(&index);
        }
    }
}

type Column = Rc<Vec<(usize, u32)>>;

/// Memoized straightening for one induction datum.
pub struct Straightener<'a> {
    datum: &'a InductionDatum,
    d: usize,
    p: u32,
    powers: Vec<usize>,
    chi_p: Vec<u32>,
    memo: HashMap<(usize, usize), Column>,
}

impl<'a> Straightener<'a> {
    pub fn new(datum: &'a InductionDatum) -> Self {
        let d = datum.complement_len();
        let p = datum.shape().p();
        let field = datum.field();
        let powers = (0..=d).map(|k| (p as usize).pow(k as u32)).collect();
        let chi_p = datum
            .chi
            .values()
            .iter()
            .map(|&c| field.pow(c, p as u64))
            .collect();
        Straightener {
            datum,
            d,
            p,
            powers,
            chi_p,
            memo: HashMap::new(),
        }
    }

    fn exponent(&self, w: usize, k: usize) -> u32 {
        ((w / self.powers[k]) % self.p as usize) as u32
    }

    fn leading(&self, w: usize) -> usize {
        (0..self.d).find(|&k| self.exponent(w, k) > 0).expect("nonzero monomial")
    }

    /// `e_g · (monomial w ⊗ v)` as sorted `(monomial, coefficient)` pairs.
    pub fn act_basis(&mut self, g: usize, w: usize) -> Column {
        if let Some(c) = self.memo.get(&(g, w)) {
            return c.clone();
        }
        let col = Rc::new(self.compute(g, w));
        self.memo.insert((g, w), col.clone());
        col
    }

    fn compute(&mut self, g: usize, w: usize) -> Vec<(usize, u32)> {
        let field = self.datum.field().clone();
        let shape = self.datum.shape().clone();
        if w == 0 {
            if g < self.d {
                return vec![(self.powers[g], 1)];
            }
            let c = self.datum.mu[g];
            return if c == 0 { Vec::new() } else { vec![(0, c)] };
        }
        let m = self.leading(w);
        if g < m {
            return vec![(w + self.powers[g], 1)];
        }
        let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
        let add = |acc: &mut BTreeMap<usize, u32>, idx: usize, c: u32| {
            let slot = acc.entry(idx).or_insert(0);
            *slot = field.add(*slot, c);
            if *slot == 0 {
                acc.remove(&idx);
            }
        };
        if g == m {
            let a = self.exponent(w, m);
            if a + 1 < self.p {
                return vec![(w + self.powers[m], 1)];
            }
            // y^p = y^{[p]} + χ(y)^p in U_χ.
            let rest = w - a as usize * self.powers[m];
            if let Some(x) = shape.p_map_basis(m) {
                for &(idx, c) in self.act_basis(x, rest).iter() {
                    add(&mut acc, idx, c);
                }
            }
            add(&mut acc, rest, self.chi_p[m]);
            return acc.into_iter().collect();
        }
        // g·y·w' = y·(g·w') + [g,y]·w'
        let rest = w - self.powers[m];
        let inner = self.act_basis(g, rest);
        for &(idx, c) in inner.iter() {
            debug_assert!(idx == 0 || self.leading(idx) >= m);
            for &(idx2, c2) in self.act_basis(m, idx).iter() {
                add(&mut acc, idx2, field.mul(c, c2));
            }
        }
        if let Some((b, c)) = shape.basis_bracket(g, m) {
            for &(idx, c2) in self.act_basis(b, rest).iter() {
                add(&mut acc, idx, field.mul(c, c2));
            }
        }
        acc.into_iter().collect()
    }

    pub fn act_vector(&mut self, g: usize, v: &ModuleVector) -> ModuleVector {
        let field = self.datum.field().clone();
        let mut out = ModuleVector::zero();
        for (w, c) in v.terms() {
            for &(idx, c2) in self.act_basis(g, w).iter() {
                out.add_term(&field, idx, field.mul(c, c2));
            }
        }
        out
    }

    pub fn generator_matrix(&mut self, g: usize) -> SparseMatrix {
        let dim = self.datum.module_dim();
        let columns = (0..dim)
            .map(|w| self.act_basis(g, w).to_vec())
            .collect();
        SparseMatrix::from_columns(self.datum.field(), dim, columns)
    }
}

/// An induced module with its generator matrices.
#[derive(Clone)]
pub struct InducedModule {
    datum: InductionDatum,
    rep: Representation,
    axioms: AxiomReport,
}

impl fmt::Debug for InducedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "InducedModule(cut={}, dim={}, λ={:?})",
            self.datum.cut,
            self.rep.dim(),
            self.datum.lambda
        )
    }
}

impl InducedModule {
    pub fn datum(&self) -> &InductionDatum {
        &self.datum
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn axioms(&self) -> &AxiomReport {
        &self.axioms
    }

    pub fn monomial(&self, index: usize) -> PbwMonomial {
        PbwMonomial::from_index(index, self.datum.shape().p(), self.datum.complement_len())
    }

    pub fn monomial_index(&self, m: &PbwMonomial) -> usize {
        m.index(self.datum.shape().p())
    }

    /// The generating vector `1 ⊗ v`.
    pub fn generator_vector(&self) -> ModuleVector {
        ModuleVector::basis(0)
    }

    /// Action through the stored matrices.
    pub fn act_matrix(&self, g: BasisIndex, v: &ModuleVector) -> Result<ModuleVector, VermaError> {
        let u = self.datum.shape().index(g)?;
        let out = self.rep.act(u, &v.to_dense(self.dim()));
        Ok(ModuleVector::from_dense(&out))
    }
}

/// The module action computed directly by straightening.
pub fn act(g: BasisIndex, v: &ModuleVector, module: &InducedModule) -> Result<ModuleVector, VermaError> {
    let u = module.datum.shape().index(g)?;
    let mut s = Straightener::new(&module.datum);
    Ok(s.act_vector(u, v))
}

/// Builds the induced module of `datum`, reading or writing the action cache
/// when one is given, and checks the module axioms.
pub fn build_induced(datum: InductionDatum, cache: Option<&ActionCache>) -> Result<InducedModule, VermaError> {
    let dim = datum.module_dim();
    let gens = match cache.and_then(|c| c.load(&datum)) {
        Some(gens) => gens,
        None => {
            let mut s = Straightener::new(&datum);
            let gens: Vec<SparseMatrix> = (0..datum.shape().dim()).map(|g| s.generator_matrix(g)).collect();
            if let Some(c) = cache {
                // A failed write only loses the speedup.
                let _ = c.store(&datum, &gens);
            }
            gens
        }
    };
    let rep = Representation::new(datum.chi.clone(), dim, gens)
        .map_err(|e| VermaError::AxiomViolation(e.to_string()))?;
    let axioms = rep.check_axioms();
    if !axioms.is_ok() {
        return Err(VermaError::AxiomViolation(format!(
            "brackets {:?}, p-powers {:?}",
            axioms.bracket_failures, axioms.p_power_failures
        )));
    }
    Ok(InducedModule { datum, rep, axioms })
}

/// The χ-reduced Verma module `Z_χ(λ)`.
pub fn build_verma(chi: &PChar, lambda: u32) -> Result<InducedModule, VermaError> {
    build_verma_cached(chi, lambda, None)
}

pub fn build_verma_cached(chi: &PChar, lambda: u32, cache: Option<&ActionCache>) -> Result<InducedModule, VermaError> {
    build_induced(base_scalars(chi, 0, Some(lambda))?, cache)
}

/// Checks `1 < r < p-1` and `χ(e_{r-1}t^ℓ) ≠ 0`; returns `(r, s)` with `s = ⌊r/2⌋`.
pub fn height_r_hypotheses(chi: &PChar) -> Result<(u32, u32), VermaError> {
    let shape = chi.shape();
    let p = shape.p();
    let r = match chi.height() {
        Ok(r) => r,
        Err(WittError::NoVanishing) => {
            return Err(VermaError::HypothesisViolated(format!("height p-1 = {} is excluded", p - 1)))
        }
        Err(e) => return Err(e.into()),
    };
    if r <= 1 || r >= p as i32 - 1 {
        return Err(VermaError::HypothesisViolated(format!(
            "height {r} is outside 1 < r < p-1"
        )));
    }
    if chi.get(r - 1, shape.ell()) == 0 {
        return Err(VermaError::HypothesisViolated(format!(
            "χ(e_{}t^{}) = 0",
            r - 1,
            shape.ell()
        )));
    }
    Ok((r as u32, r as u32 / 2))
}

/// The module induced from the one-dimensional module `k_χ` of `W_{ℓ,(s)}`.
pub fn build_height_r(chi: &PChar) -> Result<InducedModule, VermaError> {
    build_height_r_cached(chi, None)
}

pub fn build_height_r_cached(chi: &PChar, cache: Option<&ActionCache>) -> Result<InducedModule, VermaError> {
    let (_, s) = height_r_hypotheses(chi)?;
    build_induced(base_scalars(chi, s, None)?, cache)
}

/// The elements `y_{k,0..ℓ}` together with the checks of their defining properties.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaRecord {
    pub r: u32,
    pub s: u32,
    pub k: u32,
    pub b: Vec<String>,
    pub elements: Vec<String>,
    /// `χ([e_{k-1}t^i, y_{k,j}])` indexed `[i][j]`.
    pub pairing: Vec<Vec<String>>,
    pub expected_diagonal: String,
    pub condition1: bool,
    pub condition2: bool,
    pub condition3: bool,
    pub r_subalgebra_dim: usize,
    #[serde(skip)]
    pub y: Vec<LieElement>,
}

/// Builds `y_{k,j} = e_{r-k}t^{ℓ-j} + Σ_{i<j} b_{ℓ-j+i} y_{k,i}` with
/// `b_i = -χ(e_{r-1}t^i)/χ(e_{r-1}t^ℓ)` and checks conditions (1)–(3).
pub fn lemma_elements(chi: &PChar, k: u32) -> Result<LemmaRecord, VermaError> {
    let (r, s) = height_r_hypotheses(chi)?;
    if k > s {
        return Err(VermaError::HypothesisViolated(format!("k = {k} exceeds s = {s}")));
    }
    let shape = chi.shape();
    let field = chi.field();
    let ell = shape.ell();
    let ri = r as i32;
    let ki = k as i32;
    let top = chi.get(ri - 1, ell);
    let b: Vec<u32> = (0..=ell)
        .map(|i| field.neg(field.div(chi.get(ri - 1, i), top).expect("top value is nonzero")))
        .collect();
    let mut y: Vec<LieElement> = Vec::new();
    for j in 0..=ell {
        let mut e = shape.element(ri - ki, ell - j);
        for i in 0..j {
            e = e.add_scaled(b[(ell - j + i) as usize], &y[i as usize])?;
        }
        y.push(e);
    }
    let lower = |i: u32| shape.element(ki - 1, i);

    let expected = field.mul(field.from_int(r as i64 + 1 - 2 * k as i64), top);
    let mut pairing = Vec::new();
    let mut condition1 = true;
    let mut condition2 = true;
    for i in 0..=ell {
        let mut row = Vec::new();
        for j in 0..=ell {
            let br = lower(i).bracket(&y[j as usize])?;
            let value = chi.eval(&br);
            let want = if i == j { expected } else { 0 };
            if value != want || (i == j && value == 0) {
                condition1 = false;
            }
            row.push(value);
            if !br.in_filtration(ki) {
                condition2 = false;
            }
            for l in 0..=ell {
                if !br.bracket(&lower(l))?.in_filtration(ki) {
                    condition2 = false;
                }
            }
        }
        pairing.push(row);
    }
    if !condition1 {
        return Err(VermaError::ConditionFailed(1, format!("pairing matrix {pairing:?}")));
    }
    if !condition2 {
        return Err(VermaError::ConditionFailed(2, "bracket outside W_(k)".into()));
    }

    // r: the subalgebra generated by W_(r-k) and the brackets [e_{k-1}t^i, y_{k,j}].
    let n = shape.dim();
    let to_vec = |x: &LieElement| {
        let mut v = vec![0u32; n];
        for (u, c) in x.terms() {
            v[u] = c;
        }
        v
    };
    let from_vec = |v: &[u32]| {
        v.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(shape.zero(), |acc, (u, &c)| {
                acc.add_scaled(c, &shape.basis_element(u)).expect("same shape")
            })
    };
    let mut rsub = Subspace::zero(field, n);
    for u in shape.filtration_range(ri - ki) {
        rsub.insert(to_vec(&shape.basis_element(u)));
    }
    for i in 0..=ell {
        for j in 0..=ell {
            rsub.insert(to_vec(&lower(i).bracket(&y[j as usize])?));
        }
    }
    loop {
        let basis: Vec<LieElement> = rsub.basis().iter().map(|v| from_vec(v)).collect();
        let mut grew = false;
        for a in &basis {
            for c in &basis {
                grew |= rsub.insert(to_vec(&a.bracket(c)?));
            }
        }
        if !grew {
            break;
        }
    }
    let mut condition3 = true;
    for u in shape.filtration_range(ki) {
        for v in shape.filtration_range(ri - ki) {
            if let Some((w, c)) = shape.basis_bracket(u, v) {
                condition3 &= field.mul(c, chi.value(w)) == 0;
            }
        }
    }
    let basis: Vec<LieElement> = rsub.basis().iter().map(|v| from_vec(v)).collect();
    for a in &basis {
        for c in &basis {
            condition3 &= chi.eval(&a.bracket(c)?) == 0;
        }
    }
    if !condition3 {
        return Err(VermaError::ConditionFailed(3, "χ does not vanish on the bracket span".into()));
    }
    Ok(LemmaRecord {
        r,
        s,
        k,
        b: b.iter().map(|&c| field.format_element(c)).collect(),
        elements: y.iter().map(ToString::to_string).collect(),
        pairing: pairing
            .iter()
            .map(|row| row.iter().map(|&c| field.format_element(c)).collect())
            .collect(),
        expected_diagonal: field.format_element(expected),
        condition1,
        condition2,
        condition3,
        r_subalgebra_dim: rsub.dim(),
        y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn shape(ell: u32) -> AlgebraShape {
        AlgebraShape::new(Field::prime(5).unwrap(), ell)
    }

    #[test]
    fn monomial_indexing_round_trips() {
        for idx in 0..625 {
            let m = PbwMonomial::from_index(idx, 5, 4);
            assert_eq!(m.index(5), idx);
        }
        assert_eq!(PbwMonomial::from_index(7, 5, 2).exponents, vec![2, 1]);
    }

    #[test]
    fn zero_character_scalars() {
        let s = shape(1);
        let d = base_scalars(&PChar::zero(&s), 0, Some(2)).unwrap();
        assert_eq!(d.mu_at(BasisIndex::new(0, 0)), 2);
        assert!(d.mu().iter().enumerate().all(|(u, &c)| u == s.idx(0, 0) || c == 0));
        assert_eq!(d.complement_len(), 2);
    }

    #[test]
    fn bad_lambda_is_rejected() {
        let s = shape(0);
        let chi = PChar::from_values(&s, [(BasisIndex::new(0, 0), 1)]).unwrap();
        assert!(matches!(base_scalars(&chi, 0, Some(0)), Err(VermaError::BadLambda(_))));
        assert_eq!(lambda_set(&chi), Err(VermaError::NotSplit { p: 5, m: 1 }));
    }

    #[test]
    fn w_verma_has_expected_shape() {
        let s = shape(0);
        let m = build_verma(&PChar::zero(&s), 3).unwrap();
        assert_eq!(m.dim(), 5);
        let e0 = m.rep().generator(s.idx(0, 0));
        for k in 0..5 {
            assert_eq!(e0.get(k, k), (3 + 5 - k as u32) % 5);
        }
    }

    #[test]
    fn height_r_rejections() {
        let s = shape(1);
        let chi = PChar::from_values(&s, [(BasisIndex::new(3, 1), 1)]).unwrap();
        assert!(matches!(build_height_r(&chi), Err(VermaError::HypothesisViolated(_))));
        let chi = PChar::from_values(&s, [(BasisIndex::new(1, 0), 1)]).unwrap();
        assert!(matches!(build_height_r(&chi), Err(VermaError::HypothesisViolated(_))));
    }
}
