//! The `wcw` command line: argument parsing, character sources and output.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wcw_core::cache::ActionCache;
use wcw_core::classify::{classify, ClassifyError, ClassifyOptions};
use wcw_core::gf::{Field, GfError};
use wcw_core::modtools::{hom_space, intertwiner_candidate, is_irreducible, Intertwiner, Verdict};
use wcw_core::verma::{
    build_height_r_cached, build_verma_cached, height_r_hypotheses, lambda_set, lemma_elements, VermaError,
};
use wcw_core::witt::{scenario_chi, AlgebraShape, PChar, ScenarioTag, WittError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "wcw", version, about = "Simple modules of truncated current Witt algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the simple modules for one character and compare with the known classification.
    Classify(Common),
    /// Build one reduced Verma module and test it for irreducibility.
    Verma {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Build the module induced from W_(s) for a character of height r > 1.
    Induce(Common),
    /// Compare two Verma modules by hom space and intertwiner candidate.
    Hom {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Check the conditions on the elements y_{k,j} for k = 0..=s.
    CheckLemma(Common),
    /// Run field, algebra and module property checks.
    Selftest {
        #[arg(long, default_value_t = 5)]
        p: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["chi", "scenario"]))]
struct Common {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 0)]
    ell: u32,
    /// Character as inline JSON (starting with '{') or a path to a JSON file.
    #[arg(long)]
    chi: Option<String>,
    /// Scenario tag: height-minus-one, height0, height1-a, height1-b, heightr(r).
    #[arg(long)]
    scenario: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    field_degree: Option<u32>,
    #[arg(long, env = "WCW_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A failure with its exit status.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<GfError> for Failure {
    fn from(e: GfError) -> Self {
        let code = match e {
            GfError::NonPrime(_) | GfError::BadDegree | GfError::TooLarge { .. } | GfError::BadElement(_) => EXIT_USAGE,
            _ => EXIT_MISMATCH,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<WittError> for Failure {
    fn from(e: WittError) -> Self {
        match e {
            WittError::Gf(g) => g.into(),
            WittError::NoVanishing => Failure {
                code: EXIT_UNSUPPORTED,
                message: e.to_string(),
            },
            other => Failure::usage(other.to_string()),
        }
    }
}

impl From<VermaError> for Failure {
    fn from(e: VermaError) -> Self {
        match e {
            VermaError::Gf(g) => g.into(),
            VermaError::Witt(w) => w.into(),
            VermaError::HypothesisViolated(_) => Failure {
                code: EXIT_UNSUPPORTED,
                message: e.to_string(),
            },
            VermaError::BadLambda(_) => Failure::usage(e.to_string()),
            other => Failure {
                code: EXIT_MISMATCH,
                message: other.to_string(),
            },
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::UnsupportedRegime(_) | ClassifyError::UnknownScenario(_) => Failure {
                code: EXIT_UNSUPPORTED,
                message: e.to_string(),
            },
            ClassifyError::Verma(v) => v.into(),
            ClassifyError::Witt(w) => w.into(),
            ClassifyError::Gf(g) => g.into(),
            other => Failure {
                code: EXIT_MISMATCH,
                message: other.to_string(),
            },
        }
    }
}

fn configure_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        // Only the first configuration in a process takes effect.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

impl Common {
    fn field(&self) -> Result<Field, Failure> {
        Ok(Field::new(self.p, self.field_degree.unwrap_or(1))?)
    }

    fn chi(&self) -> Result<PChar, Failure> {
        let field = self.field()?;
        let shape = AlgebraShape::new(field.clone(), self.ell);
        match (&self.chi, &self.scenario) {
            (Some(src), None) => {
                let text = if src.trim_start().starts_with('{') {
                    src.clone()
                } else {
                    std::fs::read_to_string(src)
                        .map_err(|e| Failure::usage(format!("cannot read {src}: {e}")))?
                };
                let v: Value = serde_json::from_str(&text)
                    .map_err(|e| Failure::usage(format!("malformed character JSON: {e}")))?;
                let chi = PChar::from_json(&field, &v)?;
                if chi.shape().ell() != self.ell {
                    return Err(Failure::usage(format!(
                        "character has ell={} but --ell is {}",
                        chi.shape().ell(),
                        self.ell
                    )));
                }
                Ok(chi)
            }
            (None, Some(tag)) => {
                let tag: ScenarioTag = tag.parse()?;
                Ok(scenario_chi(&shape, tag, self.seed)?)
            }
            _ => Err(Failure::usage("exactly one of --chi and --scenario is required")),
        }
    }

    fn cache(&self) -> Option<ActionCache> {
        self.cache_dir.as_ref().map(ActionCache::new)
    }
}

/// `χ` moved to `F_{p^p}` when `Λ(χ)` does not split over the prime field.
fn split_chi(chi: PChar) -> Result<PChar, Failure> {
    match lambda_set(&chi) {
        Err(VermaError::NotSplit { .. }) if chi.field().m() == 1 => {
            let p = chi.field().p();
            let big = Field::new(p as u64, p)?;
            Ok(chi.with_field(&big)?)
        }
        _ => Ok(chi),
    }
}

struct Outcome {
    value: Value,
    text: String,
    matches: bool,
}

fn cmd_classify(c: &Common) -> Result<Outcome, Failure> {
    let chi = c.chi()?;
    let options = ClassifyOptions {
        seed: c.seed,
        cache: c.cache(),
        cross_check: true,
    };
    let report = classify(&chi, &options)?;
    Ok(Outcome {
        value: report.to_json(),
        text: report.to_text(),
        matches: report.matches,
    })
}

fn cmd_verma(c: &Common, lambda: Option<&str>) -> Result<Outcome, Failure> {
    let chi = split_chi(c.chi()?)?;
    let field = chi.field().clone();
    let lambda = match lambda {
        Some(s) => field.parse_element(s)?,
        None => lambda_set(&chi)?[0],
    };
    let m = build_verma_cached(&chi, lambda, c.cache().as_ref())?;
    let report = is_irreducible(m.rep(), c.seed);
    let matches = m.axioms().is_ok() && report.verdict != Verdict::Inconclusive;
    let text = format!(
        "Z({}) over F_{}^{}: dim {}, {}, axioms {}\n",
        field.format_element(lambda),
        field.p(),
        field.m(),
        m.dim(),
        report.verdict.tag(),
        if m.axioms().is_ok() { "ok" } else { "FAILED" }
    );
    Ok(Outcome {
        value: json!({
            "command": "verma",
            "field": field.describe(),
            "lambda": field.element_to_json(lambda),
            "dim": m.dim(),
            "irreducibility": report.to_json(&field),
            "axioms": m.axioms(),
            "match": matches,
        }),
        text,
        matches,
    })
}

fn cmd_induce(c: &Common) -> Result<Outcome, Failure> {
    let chi = c.chi()?;
    let (r, s) = height_r_hypotheses(&chi)?;
    let m = build_height_r_cached(&chi, c.cache().as_ref())?;
    let field = chi.field().clone();
    let report = is_irreducible(m.rep(), c.seed);
    let expected = (c.p as usize).pow((c.ell + 1) * (s + 1));
    let matches = m.axioms().is_ok() && report.verdict == Verdict::Irreducible && m.dim() == expected;
    let text = format!(
        "height r = {r}, s = {s}: dim {} (expected {expected}), {}, axioms {}\n",
        m.dim(),
        report.verdict.tag(),
        if m.axioms().is_ok() { "ok" } else { "FAILED" }
    );
    Ok(Outcome {
        value: json!({
            "command": "induce",
            "r": r,
            "s": s,
            "dim": m.dim(),
            "expected_dim": expected,
            "irreducibility": report.to_json(&field),
            "axioms": m.axioms(),
            "match": matches,
        }),
        text,
        matches,
    })
}

fn cmd_hom(c: &Common, lambda: &str, mu: &str) -> Result<Outcome, Failure> {
    let chi = split_chi(c.chi()?)?;
    let field = chi.field().clone();
    let (l, m) = (field.parse_element(lambda)?, field.parse_element(mu)?);
    let cache = c.cache();
    let zl = build_verma_cached(&chi, l, cache.as_ref())?;
    let zm = build_verma_cached(&chi, m, cache.as_ref())?;
    let hom = hom_space(zm.rep(), zl.rep()).ok().map(|h| h.dimension());
    let inter = intertwiner_candidate(&zl, &zm);
    let (inter_text, consistent) = match &inter {
        Intertwiner::Map { rank, isomorphism, .. } => (
            format!("map of rank {rank}{}", if *isomorphism { " (isomorphism)" } else { "" }),
            hom.is_none_or(|h| h == 1),
        ),
        Intertwiner::NotApplicable(why) => (
            format!("not applicable: {why}"),
            hom.is_none_or(|h| h == 0 || c.ell == 0),
        ),
    };
    let text = format!(
        "Hom(Z({mu}), Z({lambda})): dim {}; intertwiner candidate: {inter_text}; consistent: {consistent}\n",
        hom.map_or("too large".to_string(), |h| h.to_string())
    );
    Ok(Outcome {
        value: json!({
            "command": "hom",
            "lambda": field.element_to_json(l),
            "mu": field.element_to_json(m),
            "hom_dim": hom,
            "intertwiner": inter_text,
            "match": consistent,
        }),
        text,
        matches: consistent,
    })
}

fn cmd_check_lemma(c: &Common) -> Result<Outcome, Failure> {
    let chi = c.chi()?;
    let (r, s) = height_r_hypotheses(&chi)?;
    let mut records = Vec::new();
    let mut text = format!("height r = {r}, s = {s}\n");
    for k in 0..=s {
        let rec = lemma_elements(&chi, k)?;
        text.push_str(&format!(
            "k = {k}: y = [{}], diagonal {} (expected {}), conditions (1) {} (2) {} (3) {}\n",
            rec.elements.join("; "),
            rec.pairing
                .iter()
                .enumerate()
                .map(|(i, row)| row[i].clone())
                .collect::<Vec<_>>()
                .join(","),
            rec.expected_diagonal,
            rec.condition1,
            rec.condition2,
            rec.condition3
        ));
        records.push(rec);
    }
    let matches = records.iter().all(|r| r.condition1 && r.condition2 && r.condition3);
    Ok(Outcome {
        value: json!({"command": "check-lemma", "r": r, "s": s, "records": records, "match": matches}),
        text,
        matches,
    })
}

fn cmd_selftest(p: u64, seed: u64) -> Result<Outcome, Failure> {
    let results = selftest::run(p, seed)?;
    let matches = results.iter().all(|(_, ok)| *ok);
    let text = results
        .iter()
        .map(|(name, ok)| format!("{} {name}\n", if *ok { "pass" } else { "FAIL" }))
        .collect();
    Ok(Outcome {
        value: json!({
            "command": "selftest",
            "checks": results.iter().map(|(n, ok)| json!({"name": n, "pass": ok})).collect::<Vec<_>>(),
            "match": matches,
        }),
        text,
        matches,
    })
}

mod selftest {
    use rand::Rng;

    use super::Failure;
    use wcw_core::classify::scenario_character;
    use wcw_core::gf::Field;
    use wcw_core::modtools::{exhaustive_submodule_search, is_irreducible, Verdict};
    use wcw_core::rng::seeded;
    use wcw_core::verma::{build_verma, lambda_set};
    use wcw_core::witt::{AlgebraShape, ScenarioTag};

    pub fn run(p: u64, seed: u64) -> Result<Vec<(String, bool)>, Failure> {
        let mut out = Vec::new();
        let small = Field::prime(p)?;
        let big = Field::new(p, 3)?;
        let mut rng = seeded(seed);

        let inverses = (0..200).all(|_| {
            let a = rng.gen_range(1..big.order());
            big.mul(a, big.inv(a).expect("nonzero")) == 1
        });
        out.push((format!("inverses in F_{p}^3"), inverses));
        let roots = (0..big.order()).all(|a| big.pth_root(big.frobenius(a)) == a);
        out.push((format!("p-th root inverts Frobenius on F_{p}^3"), roots));
        let artin = (0..50).all(|_| {
            let c = rng.gen_range(0..big.order());
            match big.artin_schreier_roots(c) {
                Ok(r) => r.len() == p as usize && r.iter().all(|&x| big.sub(big.frobenius(x), x) == c),
                Err(_) => (0..big.order()).all(|x| big.sub(big.frobenius(x), x) != c),
            }
        });
        out.push(("Artin-Schreier roots".into(), artin));

        for ell in 0..=2u32 {
            let shape = AlgebraShape::new(small.clone(), ell);
            let mut jacobi = true;
            for _ in 0..50 {
                let mut pick = || shape.basis_element(rng.gen_range(0..shape.dim()));
                let (x, y, z) = (pick(), pick(), pick());
                let a = x.bracket(&y.bracket(&z).unwrap()).unwrap();
                let b = y.bracket(&z.bracket(&x).unwrap()).unwrap();
                let c = z.bracket(&x.bracket(&y).unwrap()).unwrap();
                jacobi &= a.checked_add(&b).unwrap().checked_add(&c).unwrap().is_zero();
            }
            out.push((format!("Jacobi identity on W_{ell}"), jacobi));
        }

        let cases = [
            (0, ScenarioTag::HeightMinusOne),
            (0, ScenarioTag::Height0),
            (0, ScenarioTag::Height1B),
            (1, ScenarioTag::Height0),
            (1, ScenarioTag::Height1B),
        ];
        for (ell, tag) in cases {
            let chi = scenario_character(p as u32, ell, tag, seed).map_err(|e| Failure {
                code: super::EXIT_MISMATCH,
                message: e.to_string(),
            })?;
            let chi = super::split_chi(chi)?;
            let lambdas = lambda_set(&chi)?;
            for (idx, &lambda) in lambdas.iter().enumerate() {
                let m = build_verma(&chi, lambda)?;
                out.push((format!("axioms for Z({}), ℓ={ell}, {tag}", chi.field().format_element(lambda)), m.axioms().is_ok()));
                if m.dim() <= 25 {
                    let norton = is_irreducible(m.rep(), seed.wrapping_add(idx as u64));
                    let exact = exhaustive_submodule_search(m.rep())
                        .map(|e| e.is_irreducible())
                        .ok();
                    let agree = matches!(
                        (norton.verdict, exact),
                        (Verdict::Irreducible, Some(true)) | (Verdict::ReducibleWithWitness(_), Some(false))
                    );
                    out.push((format!("Norton vs exhaustive for Z({}), ℓ={ell}, {tag}", chi.field().format_element(lambda)), agree));
                }
            }
        }
        Ok(out)
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output; returns the process exit status.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let (format, result) = match &cli.command {
        Command::Classify(c) => {
            configure_threads(c.threads);
            (c.format, cmd_classify(c))
        }
        Command::Verma { common, lambda } => {
            configure_threads(common.threads);
            (common.format, cmd_verma(common, lambda.as_deref()))
        }
        Command::Induce(c) => {
            configure_threads(c.threads);
            (c.format, cmd_induce(c))
        }
        Command::Hom { common, lambda, mu } => {
            configure_threads(common.threads);
            (common.format, cmd_hom(common, lambda, mu))
        }
        Command::CheckLemma(c) => {
            configure_threads(c.threads);
            (c.format, cmd_check_lemma(c))
        }
        Command::Selftest { p, seed, format, threads } => {
            configure_threads(*threads);
            (*format, cmd_selftest(*p, *seed))
        }
    };
    match result {
        Ok(outcome) => {
            let _ = match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&outcome.value).expect("serializable")
                ),
                Format::Text => write!(out, "{}", outcome.text),
            };
            if outcome.matches {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
