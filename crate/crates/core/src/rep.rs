//! Matrix representations of `W_ℓ` with a fixed p-character.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::gf::Field;
use crate::linalg::SparseMatrix;
use crate::witt::{AlgebraShape, BasisIndex, LieElement, PChar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("expected {expected} generator matrices, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("generator {0} is not a square matrix of the module dimension")]
    BadMatrix(BasisIndex),
}

/// A representation given by one matrix per basis element of `W_ℓ`.
#[derive(Clone)]
pub struct Representation {
    chi: PChar,
    dim: usize,
    gens: Arc<Vec<SparseMatrix>>,
    transposes: Arc<OnceLock<Vec<SparseMatrix>>>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation(dim={}, {:?})", self.dim, self.chi.shape())
    }
}

impl Representation {
    pub fn new(chi: PChar, dim: usize, gens: Vec<SparseMatrix>) -> Result<Self, RepError> {
        let shape = chi.shape();
        if gens.len() != shape.dim() {
            return Err(RepError::GeneratorCount {
                expected: shape.dim(),
                got: gens.len(),
            });
        }
        for (u, g) in gens.iter().enumerate() {
            if g.nrows() != dim || g.ncols() != dim {
                return Err(RepError::BadMatrix(shape.basis(u)));
            }
        }
        Ok(Representation {
            chi,
            dim,
            gens: Arc::new(gens),
            transposes: Arc::new(OnceLock::new()),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn chi(&self) -> &PChar {
        &self.chi
    }

    pub fn shape(&self) -> &AlgebraShape {
        self.chi.shape()
    }

    pub fn field(&self) -> &Field {
        self.chi.field()
    }

    pub fn generator(&self, u: usize) -> &SparseMatrix {
        &self.gens[u]
    }

    pub fn generators(&self) -> &[SparseMatrix] {
        &self.gens
    }

    pub fn transposed_generators(&self) -> &[SparseMatrix] {
        self.transposes
            .get_or_init(|| self.gens.iter().map(SparseMatrix::transpose).collect())
    }

    pub fn act(&self, u: usize, v: &[u32]) -> Vec<u32> {
        self.gens[u].apply(self.field(), v)
    }

    /// Matrix of an arbitrary element of `W_ℓ`.
    pub fn element_matrix(&self, x: &LieElement) -> SparseMatrix {
        let field = self.field();
        x.terms().fold(SparseMatrix::zeros(self.dim, self.dim), |acc, (u, c)| {
            acc.add_scaled(field, c, &self.gens[u])
        })
    }

    /// The contragredient representation `x ↦ -ρ(x)^T`, with character `-χ`.
    pub fn dual(&self) -> Representation {
        let field = self.field();
        let minus = field.neg(1);
        let mut chi = self.chi.clone();
        for u in 0..self.shape().dim() {
            let b = self.shape().basis(u);
            chi.set(b, field.neg(self.chi.value(u))).expect("negated value lies in the field");
        }
        let gens = self
            .transposed_generators()
            .iter()
            .map(|t| t.scale(field, minus))
            .collect();
        Representation::new(chi, self.dim, gens).expect("dual has matching shape")
    }

    /// Pullback along `W_n → W_k` (`n ≥ k`), letting `t`-degrees above `k` act as zero.
    pub fn pullback(&self, chi: &PChar) -> Result<Representation, RepError> {
        let big = chi.shape();
        let small = self.shape();
        let gens = big
            .basis_iter()
            .map(|b| {
                if small.contains(b) {
                    self.gens[small.idx(b.i, b.j)].clone()
                } else {
                    SparseMatrix::zeros(self.dim, self.dim)
                }
            })
            .collect();
        Representation::new(chi.clone(), self.dim, gens)
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert_eq!(self.chi, other.chi, "direct sum needs a common character");
        let gens = self
            .gens
            .iter()
            .zip(other.gens.iter())
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Representation::new(self.chi.clone(), self.dim + other.dim, gens)
            .expect("direct sum has matching shape")
    }

    /// `ρ(u)ρ(v) - ρ(v)ρ(u) = ρ([u,v])` for all pairs and
    /// `ρ(x)^p - ρ(x^{[p]}) = χ(x)^p` for all basis elements.
    pub fn check_axioms(&self) -> AxiomReport {
        let shape = self.shape();
        let field = self.field();
        let n = shape.dim();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let bracket_failures: Vec<(BasisIndex, BasisIndex)> = {
            use rayon::prelude::*;
            pairs
                .par_iter()
                .filter(|&&(u, v)| {
                    let comm = self.gens[u]
                        .mul(field, &self.gens[v])
                        .sub(field, &self.gens[v].mul(field, &self.gens[u]));
                    let expected = match shape.basis_bracket(u, v) {
                        Some((w, c)) => self.gens[w].scale(field, c),
                        None => SparseMatrix::zeros(self.dim, self.dim),
                    };
                    comm != expected
                })
                .map(|&(u, v)| (shape.basis(u), shape.basis(v)))
                .collect()
        };
        let p_power_failures: Vec<BasisIndex> = {
            use rayon::prelude::*;
            (0..n)
                .into_par_iter()
                .filter(|&u| {
                    let g = &self.gens[u];
                    let mut power = g.clone();
                    for _ in 1..shape.p() {
                        power = power.mul(field, g);
                    }
                    if let Some(w) = shape.p_map_basis(u) {
                        power = power.sub(field, &self.gens[w]);
                    }
                    let c = field.pow(self.chi.value(u), field.p() as u64);
                    power != SparseMatrix::scalar(self.dim, c)
                })
                .map(|u| shape.basis(u))
                .collect()
        };
        AxiomReport {
            pairs_checked: pairs.len(),
            generators_checked: n,
            bracket_failures: bracket_failures.iter().map(|(a, b)| format!("[{a},{b}]")).collect(),
            p_power_failures: p_power_failures.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub pairs_checked: usize,
    pub generators_checked: usize,
    pub bracket_failures: Vec<String>,
    pub p_power_failures: Vec<String>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.bracket_failures.is_empty() && self.p_power_failures.is_empty()
    }
}
