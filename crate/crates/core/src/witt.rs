//! The truncated current Witt algebra `W_ℓ = W ⊗ k[t]/(t^{ℓ+1})`.
//!
//! Basis elements `e_i t^j` (`-1 <= i <= p-2`, `0 <= j <= ℓ`) are numbered
//! degree-major: `e_i t^j` has linear index `(i + 1)(ℓ + 1) + j`. With that
//! numbering every filtration piece `W_{ℓ,(i)}` is a suffix of the index
//! range, which the module constructions rely on.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use rand::Rng;
use serde_json::{Map, Value};
use thiserror::Error;

use crate::gf::{Field, GfError};
use crate::rng::seeded;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WittError {
    #[error("operands belong to different algebras")]
    ShapeMismatch,
    #[error("p-map is only available on single basis elements")]
    NotBasisElement,
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("character does not vanish on W_(p-2); its height would be p-1")]
    NoVanishing,
    #[error("scenario infeasible: {0}")]
    Infeasible(String),
    #[error("unknown character key {0:?}")]
    UnknownKey(String),
    #[error("malformed character: {0}")]
    Parse(String),
    #[error(transparent)]
    Gf(#[from] GfError),
}

/// The basis element `e_i t^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub i: i32,
    pub j: u32,
}

impl BasisIndex {
    pub fn new(i: i32, j: u32) -> Self {
        BasisIndex { i, j }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({},{})", self.i, self.j)
    }
}

impl FromStr for BasisIndex {
    type Err = WittError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WittError::UnknownKey(s.to_string());
        let body = s
            .trim()
            .strip_prefix("e(")
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (i, j) = body.split_once(',').ok_or_else(bad)?;
        Ok(BasisIndex {
            i: i.trim().parse().map_err(|_| bad())?,
            j: j.trim().parse().map_err(|_| bad())?,
        })
    }
}

struct ShapeInner {
    p: u32,
    ell: u32,
    field: Field,
    /// `table[u * dim + v]` = `[b_u, b_v]` as (basis index, coefficient).
    brackets: OnceLock<Vec<Option<(usize, u32)>>>,
}

/// `W_ℓ` over a fixed finite field.
#[derive(Clone)]
pub struct AlgebraShape {
    inner: Arc<ShapeInner>,
}

impl fmt::Debug for AlgebraShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W_{} over {:?}", self.ell(), self.field())
    }
}

impl PartialEq for AlgebraShape {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.ell == other.inner.ell && self.inner.field == other.inner.field)
    }
}

impl Eq for AlgebraShape {}

impl AlgebraShape {
    pub fn new(field: Field, ell: u32) -> Self {
        AlgebraShape {
            inner: Arc::new(ShapeInner {
                p: field.p(),
                ell,
                field,
                brackets: OnceLock::new(),
            }),
        }
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn ell(&self) -> u32 {
        self.inner.ell
    }

    pub fn field(&self) -> &Field {
        &self.inner.field
    }

    /// `(ℓ + 1) p`.
    pub fn dim(&self) -> usize {
        (self.inner.ell as usize + 1) * self.inner.p as usize
    }

    fn layer(&self) -> usize {
        self.inner.ell as usize + 1
    }

    pub fn with_field(&self, field: Field) -> AlgebraShape {
        AlgebraShape::new(field, self.ell())
    }

    pub fn contains(&self, b: BasisIndex) -> bool {
        b.i >= -1 && b.i <= self.p() as i32 - 2 && b.j <= self.ell()
    }

    pub fn index(&self, b: BasisIndex) -> Result<usize, WittError> {
        if !self.contains(b) {
            return Err(WittError::OutOfRange(b.to_string()));
        }
        Ok(self.idx(b.i, b.j))
    }

    /// Linear index of `e_i t^j`; panics outside the basis.
    pub fn idx(&self, i: i32, j: u32) -> usize {
        assert!(self.contains(BasisIndex::new(i, j)), "e({i},{j}) not in {self:?}");
        (i + 1) as usize * self.layer() + j as usize
    }

    pub fn basis(&self, idx: usize) -> BasisIndex {
        let l = self.layer();
        BasisIndex {
            i: (idx / l) as i32 - 1,
            j: (idx % l) as u32,
        }
    }

    pub fn basis_iter(&self) -> impl Iterator<Item = BasisIndex> + '_ {
        (0..self.dim()).map(|u| self.basis(u))
    }

    fn check_degree(&self, i: i32) -> Result<(), WittError> {
        if i < -1 || i > self.p() as i32 - 2 {
            return Err(WittError::OutOfRange(format!("degree {i}")));
        }
        Ok(())
    }

    /// Index range of `W_{ℓ,(i)}`; empty for `i > p - 2`.
    pub fn filtration_range(&self, i: i32) -> Range<usize> {
        let start = ((i.max(-1) + 1) as usize * self.layer()).min(self.dim());
        start..self.dim()
    }

    pub fn graded_range(&self, i: i32) -> Range<usize> {
        let start = (i + 1) as usize * self.layer();
        start..start + self.layer()
    }

    pub fn filtration(&self, i: i32) -> Result<Vec<BasisIndex>, WittError> {
        self.check_degree(i)?;
        Ok(self.filtration_range(i).map(|u| self.basis(u)).collect())
    }

    pub fn graded(&self, i: i32) -> Result<Vec<BasisIndex>, WittError> {
        self.check_degree(i)?;
        Ok(self.graded_range(i).map(|u| self.basis(u)).collect())
    }

    /// Basis of `W_ℓ ⊗ t^j`.
    pub fn tgraded(&self, j: u32) -> Result<Vec<BasisIndex>, WittError> {
        if j > self.ell() {
            return Err(WittError::OutOfRange(format!("t-degree {j}")));
        }
        Ok((-1..=self.p() as i32 - 2).map(|i| BasisIndex::new(i, j)).collect())
    }

    fn compute_bracket(&self, u: usize, v: usize) -> Option<(usize, u32)> {
        let (a, b) = (self.basis(u), self.basis(v));
        let i = a.i + b.i;
        let j = a.j + b.j;
        if i < -1 || i > self.p() as i32 - 2 || j > self.ell() {
            return None;
        }
        let c = self.field().from_int((b.i - a.i) as i64);
        if c == 0 {
            return None;
        }
        Some((self.idx(i, j), c))
    }

    /// `[e_u, e_v]` as a multiple of a single basis element, or `None` for zero.
    pub fn basis_bracket(&self, u: usize, v: usize) -> Option<(usize, u32)> {
        let dim = self.dim();
        let table = self.inner.brackets.get_or_init(|| {
            (0..dim * dim)
                .map(|k| self.compute_bracket(k / dim, k % dim))
                .collect()
        });
        table[u * dim + v]
    }

    /// `(e_i t^k)^{[p]}`: `e_0 t^{kp}` when `i = 0` and `kp <= ℓ`, otherwise zero.
    pub fn p_map_basis(&self, u: usize) -> Option<usize> {
        let b = self.basis(u);
        let kp = b.j as u64 * self.p() as u64;
        (b.i == 0 && kp <= self.ell() as u64).then(|| self.idx(0, kp as u32))
    }

    pub fn zero(&self) -> LieElement {
        LieElement {
            shape: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn element(&self, i: i32, j: u32) -> LieElement {
        self.basis_element(self.idx(i, j))
    }

    pub fn basis_element(&self, u: usize) -> LieElement {
        let mut terms = BTreeMap::new();
        terms.insert(u, 1);
        LieElement {
            shape: self.clone(),
            terms,
        }
    }

    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> Result<LieElement, WittError> {
        if &a.shape != self || &b.shape != self {
            return Err(WittError::ShapeMismatch);
        }
        a.bracket(b)
    }

    pub fn p_map(&self, x: &LieElement) -> Result<LieElement, WittError> {
        if &x.shape != self {
            return Err(WittError::ShapeMismatch);
        }
        x.p_map()
    }
}

/// An element of `W_ℓ` as a sparse coefficient map without stored zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct LieElement {
    shape: AlgebraShape,
    terms: BTreeMap<usize, u32>,
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.shape.field();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&u, &c)| format!("{}*{}", field.format_element(c), self.shape.basis(u)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl LieElement {
    pub fn shape(&self) -> &AlgebraShape {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(linear index, coefficient code)` pairs in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.terms.iter().map(|(&u, &c)| (u, c))
    }

    pub fn coefficient(&self, b: BasisIndex) -> u32 {
        self.shape
            .index(b)
            .ok()
            .and_then(|u| self.terms.get(&u).copied())
            .unwrap_or(0)
    }

    fn add_term(&mut self, u: usize, c: u32) {
        let field = self.shape.field().clone();
        let entry = self.terms.entry(u).or_insert(0);
        *entry = field.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&u);
        }
    }

    pub fn checked_add(&self, other: &LieElement) -> Result<LieElement, WittError> {
        if self.shape != other.shape {
            return Err(WittError::ShapeMismatch);
        }
        let mut out = self.clone();
        for (u, c) in other.terms() {
            out.add_term(u, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: u32) -> LieElement {
        let field = self.shape.field();
        let mut out = self.shape.zero();
        for (u, x) in self.terms() {
            out.add_term(u, field.mul(x, c));
        }
        out
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: u32, other: &LieElement) -> Result<LieElement, WittError> {
        self.checked_add(&other.scale(c))
    }

    pub fn bracket(&self, other: &LieElement) -> Result<LieElement, WittError> {
        if self.shape != other.shape {
            return Err(WittError::ShapeMismatch);
        }
        let field = self.shape.field();
        let mut out = self.shape.zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                if let Some((w, c)) = self.shape.basis_bracket(u, v) {
                    out.add_term(w, field.mul(c, field.mul(a, b)));
                }
            }
        }
        Ok(out)
    }

    /// The p-map on a scalar multiple of a basis element.
    pub fn p_map(&self) -> Result<LieElement, WittError> {
        match self.terms.len() {
            0 => Ok(self.clone()),
            1 => {
                let (u, c) = self.terms().next().expect("one term");
                let field = self.shape.field();
                let mut out = self.shape.zero();
                if let Some(v) = self.shape.p_map_basis(u) {
                    out.add_term(v, field.pow(c, field.p() as u64));
                }
                Ok(out)
            }
            _ => Err(WittError::NotBasisElement),
        }
    }

    /// Whether every term lies in `W_{ℓ,(i)}`.
    pub fn in_filtration(&self, i: i32) -> bool {
        let range = self.shape.filtration_range(i);
        self.terms.keys().all(|u| range.contains(u))
    }
}

/// A p-character: a linear functional on `W_ℓ`, stored by its basis values.
#[derive(Clone, PartialEq, Eq)]
pub struct PChar {
    shape: AlgebraShape,
    values: Vec<u32>,
}

impl fmt::Debug for PChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PChar({})", self.to_json())
    }
}

impl PChar {
    pub fn zero(shape: &AlgebraShape) -> Self {
        PChar {
            shape: shape.clone(),
            values: vec![0; shape.dim()],
        }
    }

    pub fn from_values(
        shape: &AlgebraShape,
        values: impl IntoIterator<Item = (BasisIndex, u32)>,
    ) -> Result<Self, WittError> {
        let mut chi = Self::zero(shape);
        for (b, c) in values {
            chi.set(b, c)?;
        }
        Ok(chi)
    }

    pub fn shape(&self) -> &AlgebraShape {
        &self.shape
    }

    pub fn field(&self) -> &Field {
        self.shape.field()
    }

    pub fn set(&mut self, b: BasisIndex, c: u32) -> Result<(), WittError> {
        let u = self.shape.index(b)?;
        if !self.shape.field().contains(c) {
            return Err(GfError::BadElement(c.to_string()).into());
        }
        self.values[u] = c;
        Ok(())
    }

    pub fn value(&self, u: usize) -> u32 {
        self.values[u]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, i: i32, j: u32) -> u32 {
        self.values[self.shape.idx(i, j)]
    }

    pub fn eval(&self, x: &LieElement) -> u32 {
        let field = self.shape.field();
        x.terms()
            .fold(0, |acc, (u, c)| field.add(acc, field.mul(c, self.values[u])))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&c| c == 0)
    }

    pub fn vanishes_on(&self, range: Range<usize>) -> bool {
        self.values[range].iter().all(|&c| c == 0)
    }

    /// The least `i` in `[-1, p-2]` with `χ(W_{ℓ,(i)}) = 0`.
    pub fn height(&self) -> Result<i32, WittError> {
        (-1..=self.shape.p() as i32 - 2)
            .find(|&i| self.vanishes_on(self.shape.filtration_range(i)))
            .ok_or(WittError::NoVanishing)
    }

    /// The same functional over another field; values must lie in the prime
    /// subfield, whose codes agree in every field of the same characteristic.
    pub fn with_field(&self, field: &Field) -> Result<PChar, WittError> {
        if field.p() != self.shape.p() {
            return Err(WittError::ShapeMismatch);
        }
        if let Some(&c) = self
            .values
            .iter()
            .find(|&&c| !self.shape.field().in_prime_subfield(c))
        {
            return Err(WittError::Parse(format!(
                "value {} is outside the prime field and cannot be transported",
                self.shape.field().format_element(c)
            )));
        }
        Ok(PChar {
            shape: self.shape.with_field(field.clone()),
            values: self.values.clone(),
        })
    }

    /// Restriction to `W_k`, viewed as the span of `t`-degrees `0..=k`.
    pub fn restrict(&self, k: u32) -> PChar {
        let shape = AlgebraShape::new(self.field().clone(), k);
        let mut out = PChar::zero(&shape);
        for u in 0..shape.dim() {
            let b = shape.basis(u);
            out.values[u] = self.get(b.i, b.j);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let field = self.shape.field();
        let mut values = Map::new();
        for (u, &c) in self.values.iter().enumerate() {
            if c != 0 {
                values.insert(self.shape.basis(u).to_string(), field.element_to_json(c));
            }
        }
        let mut obj = Map::new();
        obj.insert("p".into(), Value::from(self.shape.p()));
        obj.insert("ell".into(), Value::from(self.shape.ell()));
        obj.insert("values".into(), Value::Object(values));
        Value::Object(obj)
    }

    /// Parses `{"p":..,"ell":..,"values":{"e(i,j)": elt, ..}}` over `field`.
    /// Missing basis keys are zero; unknown keys are rejected.
    pub fn from_json(field: &Field, v: &Value) -> Result<PChar, WittError> {
        let obj = v
            .as_object()
            .ok_or_else(|| WittError::Parse("expected a JSON object".into()))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "p" | "ell" | "values") {
                return Err(WittError::UnknownKey(key.clone()));
            }
        }
        let p = obj
            .get("p")
            .and_then(Value::as_u64)
            .ok_or_else(|| WittError::Parse("missing integer field \"p\"".into()))?;
        if p != field.p() as u64 {
            return Err(WittError::Parse(format!(
                "character is over p={p} but the field has p={}",
                field.p()
            )));
        }
        let ell = obj
            .get("ell")
            .and_then(Value::as_u64)
            .ok_or_else(|| WittError::Parse("missing integer field \"ell\"".into()))?;
        let shape = AlgebraShape::new(field.clone(), ell as u32);
        let mut chi = PChar::zero(&shape);
        if let Some(values) = obj.get("values") {
            let values = values
                .as_object()
                .ok_or_else(|| WittError::Parse("\"values\" must be an object".into()))?;
            for (key, val) in values {
                let b: BasisIndex = key.parse()?;
                if !shape.contains(b) {
                    return Err(WittError::UnknownKey(key.clone()));
                }
                chi.set(b, field.element_from_json(val)?)?;
            }
        }
        Ok(chi)
    }
}

/// Character families matching the hypotheses of each classification case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScenarioTag {
    HeightMinusOne,
    Height0,
    /// Height one with `χ(e_{-1}t^ℓ) ≠ 0 = χ(e_0 t^ℓ)`.
    Height1A,
    /// Height one with `χ(e_0 t^ℓ) ≠ 0`.
    Height1B,
    /// Height `r` with `χ(e_{r-1} t^ℓ) ≠ 0`.
    HeightR(u32),
}

impl fmt::Display for ScenarioTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScenarioTag::HeightMinusOne => write!(f, "height-minus-one"),
            ScenarioTag::Height0 => write!(f, "height0"),
            ScenarioTag::Height1A => write!(f, "height1-a"),
            ScenarioTag::Height1B => write!(f, "height1-b"),
            ScenarioTag::HeightR(r) => write!(f, "heightr({r})"),
        }
    }
}

impl FromStr for ScenarioTag {
    type Err = WittError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t {
            "height-minus-one" => return Ok(ScenarioTag::HeightMinusOne),
            "height0" => return Ok(ScenarioTag::Height0),
            "height1-a" => return Ok(ScenarioTag::Height1A),
            "height1-b" => return Ok(ScenarioTag::Height1B),
            _ => {}
        }
        let r = t
            .strip_prefix("heightr")
            .map(|rest| rest.trim_start_matches(['(', '-', ':']).trim_end_matches(')'))
            .and_then(|r| r.parse::<u32>().ok())
            .ok_or_else(|| WittError::Parse(format!("unknown scenario {s:?}")))?;
        Ok(ScenarioTag::HeightR(r))
    }
}

/// A character satisfying the hypotheses of `tag`, with values in the prime
/// field drawn deterministically from `seed`.
pub fn scenario_chi(shape: &AlgebraShape, tag: ScenarioTag, seed: u64) -> Result<PChar, WittError> {
    let p = shape.p();
    let ell = shape.ell();
    let mut rng = seeded(seed);
    let any = |rng: &mut rand_chacha::ChaCha8Rng| rng.gen_range(0..p);
    let nonzero = |rng: &mut rand_chacha::ChaCha8Rng| rng.gen_range(1..p);
    let mut chi = PChar::zero(shape);
    match tag {
        ScenarioTag::HeightMinusOne => {}
        ScenarioTag::Height0 => {
            for j in 0..ell {
                chi.set(BasisIndex::new(-1, j), any(&mut rng))?;
            }
            chi.set(BasisIndex::new(-1, ell), nonzero(&mut rng))?;
        }
        ScenarioTag::Height1A => {
            if ell == 0 {
                return Err(WittError::Infeasible(
                    "height one with χ(e_0 t^ℓ) = 0 needs ℓ ≥ 1".into(),
                ));
            }
            for j in 0..ell {
                chi.set(BasisIndex::new(-1, j), any(&mut rng))?;
            }
            chi.set(BasisIndex::new(-1, ell), nonzero(&mut rng))?;
            for j in 0..ell - 1 {
                chi.set(BasisIndex::new(0, j), any(&mut rng))?;
            }
            chi.set(BasisIndex::new(0, ell - 1), nonzero(&mut rng))?;
        }
        ScenarioTag::Height1B => {
            for j in 0..=ell {
                chi.set(BasisIndex::new(-1, j), any(&mut rng))?;
            }
            for j in 0..ell {
                chi.set(BasisIndex::new(0, j), any(&mut rng))?;
            }
            chi.set(BasisIndex::new(0, ell), nonzero(&mut rng))?;
        }
        ScenarioTag::HeightR(r) => {
            if r < 2 || r + 1 >= p {
                return Err(WittError::Infeasible(format!(
                    "height r={r} needs 1 < r < p-1 = {}",
                    p - 1
                )));
            }
            let top = r as i32 - 1;
            for i in -1..top {
                for j in 0..=ell {
                    chi.set(BasisIndex::new(i, j), any(&mut rng))?;
                }
            }
            for j in 0..ell {
                chi.set(BasisIndex::new(top, j), any(&mut rng))?;
            }
            chi.set(BasisIndex::new(top, ell), nonzero(&mut rng))?;
        }
    }
    let expected_height = match tag {
        ScenarioTag::HeightMinusOne => -1,
        ScenarioTag::Height0 => 0,
        ScenarioTag::Height1A | ScenarioTag::Height1B => 1,
        ScenarioTag::HeightR(r) => r as i32,
    };
    assert_eq!(chi.height()?, expected_height, "scenario {tag} produced {chi:?}");
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn shape(ell: u32) -> AlgebraShape {
        AlgebraShape::new(Field::prime(5).unwrap(), ell)
    }

    #[test]
    fn dimension_and_indexing() {
        let s = shape(2);
        assert_eq!(s.dim(), 15);
        for u in 0..s.dim() {
            let b = s.basis(u);
            assert_eq!(s.index(b).unwrap(), u);
        }
        assert!(s.index(BasisIndex::new(4, 0)).is_err());
        assert!(s.index(BasisIndex::new(0, 3)).is_err());
    }

    #[test]
    fn bracket_examples() {
        let s = shape(2);
        let x = s.element(1, 1);
        let y = s.element(2, 1);
        assert_eq!(x.bracket(&y).unwrap(), s.element(3, 2));
        let a = s.element(-1, 1);
        let b = s.element(-1, 2);
        assert!(a.bracket(&b).unwrap().is_zero());
        // t^3 = 0 in W_2
        assert!(s.element(0, 2).bracket(&s.element(1, 1)).unwrap().is_zero());

        let w = shape(0);
        assert!(w.element(1, 0).bracket(&w.element(3, 0)).unwrap().is_zero());
        assert_eq!(
            w.element(-1, 0).bracket(&w.element(1, 0)).unwrap(),
            w.element(0, 0).scale(2)
        );
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = shape(1).element(0, 0);
        let b = shape(2).element(0, 0);
        assert_eq!(a.bracket(&b).unwrap_err(), WittError::ShapeMismatch);
    }

    #[test]
    fn p_map_examples() {
        let w = shape(0);
        assert_eq!(w.element(0, 0).p_map().unwrap(), w.element(0, 0));
        let s = shape(1);
        assert!(s.element(0, 1).p_map().unwrap().is_zero());
        assert!(s.element(2, 1).p_map().unwrap().is_zero());
        let sum = s.element(0, 0).checked_add(&s.element(1, 0)).unwrap();
        assert_eq!(sum.p_map().unwrap_err(), WittError::NotBasisElement);
        // ℓ ≥ p: e_0 t has p-th power e_0 t^5.
        let big = shape(6);
        assert_eq!(big.element(0, 1).p_map().unwrap(), big.element(0, 5));
        assert!(big.element(0, 2).p_map().unwrap().is_zero());
    }

    #[test]
    fn filtrations() {
        let s = shape(1);
        assert_eq!(s.filtration(-1).unwrap().len(), 10);
        assert_eq!(
            s.graded(0).unwrap(),
            vec![BasisIndex::new(0, 0), BasisIndex::new(0, 1)]
        );
        let top = s.tgraded(1).unwrap();
        assert_eq!(top.len(), 5);
        assert!(top.iter().all(|b| b.j == 1));
        assert!(s.filtration(4).is_err());
        assert!(s.graded(-2).is_err());
        assert!(s.tgraded(2).is_err());
    }

    #[test]
    fn heights() {
        let s = shape(1);
        assert_eq!(PChar::zero(&s).height().unwrap(), -1);
        let chi = PChar::from_values(&s, [(BasisIndex::new(-1, 1), 1)]).unwrap();
        assert_eq!(chi.height().unwrap(), 0);
        let chi = PChar::from_values(&s, [(BasisIndex::new(1, 1), 1)]).unwrap();
        assert_eq!(chi.height().unwrap(), 2);
        let chi = PChar::from_values(&s, [(BasisIndex::new(3, 1), 1)]).unwrap();
        assert_eq!(chi.height().unwrap_err(), WittError::NoVanishing);
    }

    #[test]
    fn jacobi_and_antisymmetry() {
        for ell in [0, 1, 2] {
            let s = shape(ell);
            let mut rng = ChaCha8Rng::seed_from_u64(ell as u64);
            let random = |rng: &mut ChaCha8Rng| {
                let mut x = s.zero();
                for u in 0..s.dim() {
                    x = x.add_scaled(rng.gen_range(0..5), &s.basis_element(u)).unwrap();
                }
                x
            };
            for _ in 0..200 {
                let (x, y, z) = (random(&mut rng), random(&mut rng), random(&mut rng));
                let xy = x.bracket(&y).unwrap();
                let yx = y.bracket(&x).unwrap();
                assert!(xy.checked_add(&yx).unwrap().is_zero());
                let j = x
                    .bracket(&y.bracket(&z).unwrap())
                    .unwrap()
                    .checked_add(&y.bracket(&z.bracket(&x).unwrap()).unwrap())
                    .unwrap()
                    .checked_add(&z.bracket(&x.bracket(&y).unwrap()).unwrap())
                    .unwrap();
                assert!(j.is_zero());
            }
        }
    }

    #[test]
    fn restrictedness_on_basis() {
        for ell in [0, 1, 2, 5] {
            let s = shape(ell);
            for u in 0..s.dim() {
                let x = s.basis_element(u);
                let xp = x.p_map().unwrap();
                for v in 0..s.dim() {
                    let y = s.basis_element(v);
                    let mut iter = y.clone();
                    for _ in 0..s.p() {
                        iter = x.bracket(&iter).unwrap();
                    }
                    assert_eq!(xp.bracket(&y).unwrap(), iter, "x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn scenarios_meet_their_hypotheses() {
        let s = shape(1);
        let chi = scenario_chi(&s, ScenarioTag::Height0, 7).unwrap();
        assert!(chi.vanishes_on(s.filtration_range(0)));
        assert_ne!(chi.get(-1, 1), 0);
        let chi = scenario_chi(&s, ScenarioTag::HeightR(2), 7).unwrap();
        assert_ne!(chi.get(1, 1), 0);
        assert!(chi.vanishes_on(s.filtration_range(2)));
        let chi = scenario_chi(&s, ScenarioTag::Height1A, 3).unwrap();
        assert_eq!(chi.get(0, 1), 0);
        assert_ne!(chi.get(-1, 1), 0);
        let chi = scenario_chi(&s, ScenarioTag::Height1B, 3).unwrap();
        assert_ne!(chi.get(0, 1), 0);
        assert!(matches!(
            scenario_chi(&s, ScenarioTag::HeightR(4), 1),
            Err(WittError::Infeasible(_))
        ));
        assert!(matches!(
            scenario_chi(&shape(0), ScenarioTag::Height1A, 1),
            Err(WittError::Infeasible(_))
        ));
        assert_eq!(
            scenario_chi(&s, ScenarioTag::Height0, 9).unwrap(),
            scenario_chi(&s, ScenarioTag::Height0, 9).unwrap()
        );
    }

    #[test]
    fn scenario_tags_parse() {
        for tag in [
            ScenarioTag::HeightMinusOne,
            ScenarioTag::Height0,
            ScenarioTag::Height1A,
            ScenarioTag::Height1B,
            ScenarioTag::HeightR(3),
        ] {
            assert_eq!(tag.to_string().parse::<ScenarioTag>().unwrap(), tag);
        }
        assert_eq!("heightr2".parse::<ScenarioTag>().unwrap(), ScenarioTag::HeightR(2));
        assert!("height7".parse::<ScenarioTag>().is_err());
    }

    #[test]
    fn character_json() {
        let f = Field::prime(5).unwrap();
        let v: Value = serde_json::from_str(r#"{"p":5,"ell":1,"values":{"e(-1,1)":"1","e(0,0)":"3"}}"#).unwrap();
        let chi = PChar::from_json(&f, &v).unwrap();
        assert_eq!(chi.get(-1, 1), 1);
        assert_eq!(chi.get(0, 0), 3);
        assert_eq!(PChar::from_json(&f, &chi.to_json()).unwrap(), chi);
        let bad: Value = serde_json::from_str(r#"{"p":5,"ell":1,"values":{"e(4,0)":"1"}}"#).unwrap();
        assert!(matches!(PChar::from_json(&f, &bad), Err(WittError::UnknownKey(_))));
        let bad: Value = serde_json::from_str(r#"{"p":5,"ell":1,"chi":{}}"#).unwrap();
        assert!(matches!(PChar::from_json(&f, &bad), Err(WittError::UnknownKey(_))));
        let bad: Value = serde_json::from_str(r#"{"p":7,"ell":1}"#).unwrap();
        assert!(PChar::from_json(&f, &bad).is_err());
    }
}
