//! End-to-end classification of simple `U_χ(W_ℓ)`-modules for one character.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::cache::ActionCache;
use crate::gf::{Field, FieldDescription, GfError};
use crate::modtools::{
    exhaustive_submodule_search, hom_space, intertwiner_candidate, is_irreducible, quotient,
    socle_and_maximal, IrreducibilityReport, Intertwiner, ModError, Verdict,
};
use crate::rep::Representation;
use crate::rng::derive_seed;
use crate::verma::{build_height_r_cached, build_verma_cached, lambda_set, InducedModule, VermaError};
use crate::witt::{AlgebraShape, PChar, ScenarioTag, WittError};

pub const SCHEMA_VERSION: u32 = 1;
/// Modules up to this dimension are also checked by exhaustive submodule search.
pub const CROSS_CHECK_DIM: usize = 25;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),
    #[error("no expectation for scenario {0}")]
    UnknownScenario(String),
    #[error(transparent)]
    Verma(#[from] VermaError),
    #[error(transparent)]
    Mod(#[from] ModError),
    #[error(transparent)]
    Witt(#[from] WittError),
    #[error(transparent)]
    Gf(#[from] GfError),
}

/// The least `k` with `χ(W_ℓ^{(k+1)}) = 0`, and `ψ = χ|_{W_k}`.
pub fn reduce_by_truncation(chi: &PChar) -> (u32, PChar) {
    let shape = chi.shape();
    let k = (0..=shape.ell())
        .rev()
        .find(|&j| (-1..=shape.p() as i32 - 2).any(|i| chi.get(i, j) != 0))
        .unwrap_or(0);
    (k, chi.restrict(k))
}

/// Predicted classification, taken from the known classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub scenario: String,
    pub classes: usize,
    pub dims: Vec<usize>,
    pub anchor: String,
}

pub fn expectation_for(p: u32, ell: u32, scenario: ScenarioTag) -> Result<Expectation, ClassifyError> {
    let pu = p as usize;
    let verma_dim = pu.pow(ell + 1);
    let (classes, mut dims, anchor) = match scenario {
        ScenarioTag::HeightMinusOne => {
            let mut dims = vec![1, pu - 1];
            dims.extend(std::iter::repeat_n(pu, pu - 2));
            (pu, dims, "zero character: trivial module, Z(p-1)/soc, and Z(λ) for 0<λ<p-1")
        }
        ScenarioTag::Height0 if ell == 0 => (pu - 1, vec![pu; pu - 1], "height 0 over W: p-1 classes of dimension p"),
        ScenarioTag::Height0 => (1, vec![verma_dim], "height 0: all Z(λ) simple and isomorphic"),
        ScenarioTag::Height1A if ell >= 1 => (1, vec![verma_dim], "height 1, χ(e_0 t^ℓ) = 0: all Z(λ) simple and isomorphic"),
        ScenarioTag::Height1B => (pu, vec![verma_dim; pu], "height 1, χ(e_0 t^ℓ) ≠ 0: Z(λ) simple, pairwise non-isomorphic"),
        ScenarioTag::HeightR(r) if r > 1 && r + 1 < p => {
            let s = r / 2;
            (1, vec![pu.pow((ell + 1) * (s + 1))], "height r: unique simple module of dimension p^((ℓ+1)(s+1))")
        }
        other => return Err(ClassifyError::UnknownScenario(format!("{other} with ℓ = {ell}"))),
    };
    dims.sort_unstable();
    Ok(Expectation {
        scenario: scenario.to_string(),
        classes,
        dims,
        anchor: anchor.to_string(),
    })
}

/// The scenario a (truncated) character belongs to.
pub fn regime_of(psi: &PChar) -> Result<ScenarioTag, ClassifyError> {
    let shape = psi.shape();
    let ell = shape.ell();
    let r = match psi.height() {
        Ok(r) => r,
        Err(WittError::NoVanishing) => {
            return Err(ClassifyError::UnsupportedRegime(format!(
                "height p-1 = {} is not classified",
                shape.p() - 1
            )))
        }
        Err(e) => return Err(e.into()),
    };
    Ok(match r {
        -1 => ScenarioTag::HeightMinusOne,
        0 => ScenarioTag::Height0,
        1 if psi.get(0, ell) != 0 => ScenarioTag::Height1B,
        1 => ScenarioTag::Height1A,
        r if psi.get(r - 1, ell) != 0 => ScenarioTag::HeightR(r as u32),
        r => {
            return Err(ClassifyError::UnsupportedRegime(format!(
                "height {r} with χ(e_{}t^{ell}) = 0 after truncation",
                r - 1
            )))
        }
    })
}

#[derive(Debug, Clone, Default)]
pub struct ClassifyOptions {
    pub seed: u64,
    pub cache: Option<ActionCache>,
    /// Run exhaustive submodule search on modules of dimension at most
    /// [`CROSS_CHECK_DIM`].
    pub cross_check: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Truncation {
    pub from_ell: u32,
    pub to_ell: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExhaustiveSummary {
    pub points: usize,
    pub irreducible: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuleSummary {
    pub label: String,
    pub kind: String,
    pub lambda: Option<Value>,
    pub dim: usize,
    pub verdict: Value,
    pub axioms_ok: bool,
    pub socle_dim: Option<usize>,
    pub radical_dim: Option<usize>,
    pub schur_hom_dim: Option<usize>,
    pub exhaustive: Option<ExhaustiveSummary>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Evidence {
    pub from: String,
    pub to: String,
    pub hom_dim: Option<usize>,
    pub intertwiner: Option<String>,
    pub isomorphic: Option<bool>,
    pub kind: String,
    pub consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub p: u32,
    pub ell: u32,
    pub chi: Value,
    pub field: FieldDescription,
    pub field_extended: bool,
    pub height: i32,
    pub truncation: Truncation,
    pub regime: String,
    pub notes: Vec<String>,
    pub modules: Vec<ModuleSummary>,
    pub classes: Vec<Vec<String>>,
    pub class_dims: Vec<usize>,
    pub evidence: Vec<Evidence>,
    pub pullback_axioms_ok: Option<bool>,
    pub expectation: Expectation,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl Report {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p = {}, ℓ = {}, field F_{}^{}", self.p, self.ell, self.field.p, self.field.m);
        let _ = writeln!(
            out,
            "height {}, truncated ℓ {} -> {}, regime {}",
            self.height, self.truncation.from_ell, self.truncation.to_ell, self.regime
        );
        let _ = writeln!(out, "{:<16} {:>6} {:<14} {:>8} {:>6}", "module", "dim", "verdict", "samples", "seed");
        for m in &self.modules {
            let _ = writeln!(
                out,
                "{:<16} {:>6} {:<14} {:>8} {:>6}",
                m.label,
                m.dim,
                m.verdict["verdict"].as_str().unwrap_or("?"),
                m.verdict["samples"],
                m.verdict["seed"]
            );
        }
        for (class, dim) in self.classes.iter().zip(&self.class_dims) {
            let _ = writeln!(out, "class dim {dim}: {}", class.join(", "));
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        let _ = writeln!(
            out,
            "expected {} classes, dims {:?}; computed {} classes, dims {:?}",
            self.expectation.classes,
            self.expectation.dims,
            self.classes.len(),
            sorted(&self.class_dims)
        );
        let _ = writeln!(out, "match: {}", self.matches);
        out
    }
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// A module taking part in the classification.
struct Candidate {
    label: String,
    kind: &'static str,
    verma: Option<InducedModule>,
    rep: Representation,
    lambda: Option<u32>,
    norton: IrreducibilityReport,
    exhaustive: Option<ExhaustiveSummary>,
    socle_dim: Option<usize>,
    radical_dim: Option<usize>,
}

fn examine(
    label: String,
    kind: &'static str,
    verma: Option<InducedModule>,
    rep: Representation,
    lambda: Option<u32>,
    seed: u64,
    cross_check: bool,
) -> Result<Candidate, ClassifyError> {
    let norton = is_irreducible(&rep, seed);
    let exhaustive = if cross_check && rep.dim() <= CROSS_CHECK_DIM {
        let e = exhaustive_submodule_search(&rep)?;
        let agrees = match norton.verdict {
            Verdict::Irreducible => e.is_irreducible(),
            Verdict::ReducibleWithWitness(_) => !e.is_irreducible(),
            Verdict::Inconclusive => false,
        };
        Some(ExhaustiveSummary {
            points: e.points,
            irreducible: e.is_irreducible(),
            agrees,
        })
    } else {
        None
    };
    Ok(Candidate {
        label,
        kind,
        verma,
        rep,
        lambda,
        norton,
        exhaustive,
        socle_dim: None,
        radical_dim: None,
    })
}

fn working_field_chi(chi: &PChar, needs_extension: bool) -> Result<PChar, ClassifyError> {
    if !needs_extension {
        return Ok(chi.clone());
    }
    let field = chi.field();
    if field.m() != 1 {
        return Err(VermaError::NotSplit {
            p: field.p(),
            m: field.m(),
        }
        .into());
    }
    let big = Field::new(field.p() as u64, field.p())?;
    Ok(chi.with_field(&big)?)
}

/// Classifies the simple `U_χ(W_ℓ)`-modules and compares with the known classification.
pub fn classify(chi: &PChar, options: &ClassifyOptions) -> Result<Report, ClassifyError> {
    let shape = chi.shape();
    let (p, ell) = (shape.p(), shape.ell());
    let height = match chi.height() {
        Ok(h) => h,
        Err(WittError::NoVanishing) => {
            return Err(ClassifyError::UnsupportedRegime(format!("height p-1 = {} is not classified", p - 1)))
        }
        Err(e) => return Err(e.into()),
    };
    let (k, psi) = reduce_by_truncation(chi);
    let regime = regime_of(&psi)?;
    let expectation = expectation_for(p, k, regime)?;
    let mut notes = Vec::new();
    if k < ell {
        notes.push(format!("χ vanishes on t-degrees above {k}; classified over W_{k}"));
    }

    let extend = matches!(regime, ScenarioTag::HeightMinusOne | ScenarioTag::Height0 | ScenarioTag::Height1A | ScenarioTag::Height1B)
        && matches!(lambda_set(&psi), Err(VermaError::NotSplit { .. }));
    let psi = working_field_chi(&psi, extend)?;
    let chi_work = working_field_chi(chi, extend)?;
    if extend {
        notes.push(format!("Λ(χ) does not split over F_{p}; extended to F_{p}^{p}"));
    }
    let cache = options.cache.as_ref();

    let mut candidates: Vec<Candidate> = match regime {
        ScenarioTag::HeightR(_) => {
            notes.push(
                "base character χ|W_(s) checked to vanish on the derived subalgebra of W_(s)".into(),
            );
            let m = build_height_r_cached(&psi, cache)?;
            let rep = m.rep().clone();
            vec![examine("S".into(), "induced", Some(m), rep, None, derive_seed(options.seed, 0), options.cross_check)?]
        }
        _ => {
            let lambdas = lambda_set(&psi)?;
            let field = psi.field();
            lambdas
                .par_iter()
                .enumerate()
                .map(|(idx, &lambda)| {
                    let m = build_verma_cached(&psi, lambda, cache)?;
                    let rep = m.rep().clone();
                    examine(
                        format!("Z({})", field.format_element(lambda)),
                        "verma",
                        Some(m),
                        rep,
                        Some(lambda),
                        derive_seed(options.seed, idx as u64),
                        options.cross_check,
                    )
                })
                .collect::<Result<Vec<_>, ClassifyError>>()?
        }
    };

    // Reducible Verma modules contribute their simple tops.
    let mut extra = Vec::new();
    for c in candidates.iter_mut() {
        if !matches!(c.norton.verdict, Verdict::ReducibleWithWitness(_)) {
            continue;
        }
        let (soc, rad) = socle_and_maximal(&c.rep)?;
        c.socle_dim = Some(soc.dim());
        c.radical_dim = Some(rad.dim());
        let mut tops = vec![("rad", rad.clone())];
        if soc != rad {
            tops.push(("soc", soc));
        }
        for (name, sub) in tops {
            if sub.is_zero() || sub.is_full() {
                continue;
            }
            let q = quotient(&c.rep, &sub)?;
            let label = format!("{}/{}", c.label, name);
            let seed = derive_seed(options.seed, 1000 + extra.len() as u64);
            extra.push(examine(label, "quotient", None, q, c.lambda, seed, options.cross_check)?);
        }
    }
    candidates.extend(extra);

    let simple: Vec<usize> = (0..candidates.len())
        .filter(|&i| candidates[i].norton.verdict == Verdict::Irreducible)
        .collect();
    let inconclusive = candidates
        .iter()
        .any(|c| c.norton.verdict == Verdict::Inconclusive);
    if inconclusive {
        notes.push("an irreducibility test was inconclusive".into());
    }

    // Schur check on every simple module small enough for the hom solver.
    let schur: Vec<Option<usize>> = candidates
        .par_iter()
        .map(|c| {
            if c.norton.verdict != Verdict::Irreducible {
                return None;
            }
            hom_space(&c.rep, &c.rep).ok().map(|h| h.dimension())
        })
        .collect();

    // Pairwise evidence between simple modules of equal dimension.
    let pairs: Vec<(usize, usize)> = simple
        .iter()
        .flat_map(|&i| simple.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| candidates[i].rep.dim() == candidates[j].rep.dim())
        .collect();
    let evidence: Vec<(usize, usize, Evidence)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&candidates[i], &candidates[j]);
            // Maps from b to a.
            let hom = hom_space(&b.rep, &a.rep).ok().map(|h| h.dimension());
            let inter = match (&a.verma, &b.verma) {
                (Some(ma), Some(mb)) if ma.datum().cut() == 0 && mb.datum().cut() == 0 => {
                    Some(intertwiner_candidate(ma, mb))
                }
                _ => None,
            };
            let inter_iso = inter.as_ref().map(Intertwiner::is_isomorphism);
            let isomorphic = match (inter_iso, hom) {
                (Some(true), _) => Some(true),
                (_, Some(h)) => Some(h > 0),
                (Some(false), None) => None,
                (None, None) => None,
            };
            let kind = match (inter_iso, hom) {
                (Some(true), _) => "intertwiner",
                (_, Some(_)) => "hom",
                _ => "none",
            };
            let consistent = match (&inter, hom) {
                (Some(Intertwiner::Map { .. }), Some(h)) => h == 1,
                (Some(Intertwiner::NotApplicable(_)), Some(h)) => h == 0 || ell_of(&a.rep) == 0,
                _ => true,
            };
            let description = inter.map(|x| match x {
                Intertwiner::Map { rank, isomorphism: true, shift, .. } => {
                    format!("isomorphism, shift {shift}, rank {rank}")
                }
                Intertwiner::Map { rank, shift, .. } => format!("map of rank {rank}, shift {shift}"),
                Intertwiner::NotApplicable(why) => format!("not applicable: {why}"),
            });
            (
                i,
                j,
                Evidence {
                    from: b.label.clone(),
                    to: a.label.clone(),
                    hom_dim: hom,
                    intertwiner: description,
                    isomorphic,
                    kind: kind.into(),
                    consistent,
                },
            )
        })
        .collect();

    // Union-find over simple modules.
    let mut parent: Vec<usize> = (0..candidates.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut undetermined = false;
    for (i, j, e) in &evidence {
        match e.isomorphic {
            Some(true) => {
                let (ri, rj) = (find(&mut parent, *i), find(&mut parent, *j));
                parent[ri.max(rj)] = ri.min(rj);
            }
            Some(false) => {}
            None => undetermined |= i != j,
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &i in &simple {
        let root = find(&mut parent, i);
        match classes.iter_mut().find(|c| find(&mut parent, c[0]) == root) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    if undetermined {
        notes.push("some isomorphism questions could not be decided".into());
    }

    let pullback_axioms_ok = if k < ell {
        Some(candidates.iter().all(|c| {
            c.rep
                .pullback(&chi_work)
                .map(|r| r.check_axioms().is_ok())
                .unwrap_or(false)
        }))
    } else {
        None
    };

    let class_dims: Vec<usize> = classes.iter().map(|c| candidates[c[0]].rep.dim()).collect();
    let schur_ok = simple.iter().all(|&i| schur[i].is_none_or(|d| d == 1));
    let cross_ok = candidates
        .iter()
        .all(|c| c.exhaustive.as_ref().is_none_or(|e| e.agrees));
    let evidence_ok = evidence.iter().all(|(_, _, e)| e.consistent);
    let matches = classes.len() == expectation.classes
        && sorted(&class_dims) == expectation.dims
        && !inconclusive
        && !undetermined
        && schur_ok
        && cross_ok
        && evidence_ok
        && pullback_axioms_ok.unwrap_or(true);

    let field = psi.field().clone();
    let modules = candidates
        .iter()
        .zip(&schur)
        .map(|(c, s)| ModuleSummary {
            label: c.label.clone(),
            kind: c.kind.into(),
            lambda: c.lambda.map(|l| field.element_to_json(l)),
            dim: c.rep.dim(),
            verdict: c.norton.to_json(&field),
            axioms_ok: c.rep.check_axioms().is_ok(),
            socle_dim: c.socle_dim,
            radical_dim: c.radical_dim,
            schur_hom_dim: *s,
            exhaustive: c.exhaustive.clone(),
        })
        .collect();
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        p,
        ell,
        chi: chi.to_json(),
        field: field.describe(),
        field_extended: extend,
        height,
        truncation: Truncation { from_ell: ell, to_ell: k },
        regime: regime.to_string(),
        notes,
        modules,
        classes: classes
            .iter()
            .map(|c| c.iter().map(|&i| candidates[i].label.clone()).collect())
            .collect(),
        class_dims,
        evidence: evidence.into_iter().map(|(_, _, e)| e).collect(),
        pullback_axioms_ok,
        expectation,
        matches,
    })
}

fn ell_of(rep: &Representation) -> u32 {
    rep.shape().ell()
}

/// Builds the character of a shipped scenario over `F_p`.
pub fn scenario_character(p: u32, ell: u32, tag: ScenarioTag, seed: u64) -> Result<PChar, ClassifyError> {
    let shape = AlgebraShape::new(Field::prime(p as u64)?, ell);
    Ok(crate::witt::scenario_chi(&shape, tag, seed)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witt::BasisIndex;

    fn shape(ell: u32) -> AlgebraShape {
        AlgebraShape::new(Field::prime(5).unwrap(), ell)
    }

    #[test]
    fn truncation_examples() {
        let (k, psi) = reduce_by_truncation(&PChar::zero(&shape(3)));
        assert_eq!((k, psi.shape().ell()), (0, 0));
        assert!(psi.is_zero());
        let chi = PChar::from_values(&shape(2), [(BasisIndex::new(0, 1), 2), (BasisIndex::new(-1, 0), 1)]).unwrap();
        let (k, psi) = reduce_by_truncation(&chi);
        assert_eq!(k, 1);
        assert_eq!(psi.get(0, 1), 2);
        let chi = PChar::from_values(&shape(2), [(BasisIndex::new(-1, 2), 1)]).unwrap();
        assert_eq!(reduce_by_truncation(&chi).0, 2);
    }

    #[test]
    fn expectation_table() {
        let e = expectation_for(5, 0, ScenarioTag::Height0).unwrap();
        assert_eq!((e.classes, e.dims), (4, vec![5; 4]));
        let e = expectation_for(5, 1, ScenarioTag::Height1B).unwrap();
        assert_eq!((e.classes, e.dims), (5, vec![25; 5]));
        let e = expectation_for(5, 1, ScenarioTag::HeightR(3)).unwrap();
        assert_eq!((e.classes, e.dims), (1, vec![625]));
        let e = expectation_for(5, 0, ScenarioTag::HeightMinusOne).unwrap();
        assert_eq!(e.dims, vec![1, 4, 5, 5, 5]);
        assert!(matches!(
            expectation_for(5, 0, ScenarioTag::Height1A),
            Err(ClassifyError::UnknownScenario(_))
        ));
        assert!(matches!(
            expectation_for(5, 1, ScenarioTag::HeightR(4)),
            Err(ClassifyError::UnknownScenario(_))
        ));
    }

    #[test]
    fn unsupported_regimes() {
        let chi = PChar::from_values(&shape(1), [(BasisIndex::new(3, 0), 1)]).unwrap();
        assert!(matches!(classify(&chi, &ClassifyOptions::default()), Err(ClassifyError::UnsupportedRegime(_))));
        let chi = PChar::from_values(&shape(1), [(BasisIndex::new(1, 0), 1), (BasisIndex::new(0, 1), 1)]).unwrap();
        assert!(matches!(regime_of(&chi), Err(ClassifyError::UnsupportedRegime(_))));
    }
}
