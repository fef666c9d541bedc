//! On-disk cache of generator action matrices.
//!
//! Entries are JSON files named by a SHA-256 key over `(p, ℓ, modulus,
//! χ values, cut, λ)`; each file repeats the key in its header and stores one
//! triplet list `[row, col, element]` per generator.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::linalg::SparseMatrix;
use crate::verma::InductionDatum;

const FORMAT: &str = "wcw-action-cache";
const VERSION: u64 = 1;

#[derive(Debug, Clone)]
pub struct ActionCache {
    dir: PathBuf,
}

impl ActionCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ActionCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(datum: &InductionDatum) -> String {
        let field = datum.field();
        let mut h = Sha256::new();
        let mut put = |label: &str, xs: &[u32]| {
            h.update(label.as_bytes());
            h.update((xs.len() as u64).to_le_bytes());
            for x in xs {
                h.update(x.to_le_bytes());
            }
        };
        put("p", &[field.p()]);
        put("ell", &[datum.shape().ell()]);
        put("modulus", field.modulus());
        put("chi", datum.chi().values());
        put("cut", &[datum.cut()]);
        match datum.lambda() {
            Some(l) => put("lambda", &[l]),
            None => put("lambda", &[]),
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Cached matrices for `datum`, or `None` when absent or unreadable.
    pub fn load(&self, datum: &InductionDatum) -> Option<Vec<SparseMatrix>> {
        let key = Self::key(datum);
        let text = fs::read_to_string(self.path(&key)).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        let header = v.get("header")?;
        if header.get("format")?.as_str()? != FORMAT
            || header.get("version")?.as_u64()? != VERSION
            || header.get("key")?.as_str()? != key
        {
            return None;
        }
        let dim = datum.module_dim();
        if header.get("dim")?.as_u64()? != dim as u64 {
            return None;
        }
        let field = datum.field();
        let gens = v.get("generators")?.as_array()?;
        if gens.len() != datum.shape().dim() {
            return None;
        }
        gens.iter()
            .map(|g| {
                let mut columns = vec![Vec::new(); dim];
                for t in g.as_array()? {
                    let t = t.as_array()?;
                    let (row, col) = (t.first()?.as_u64()? as usize, t.get(1)?.as_u64()? as usize);
                    let c = field.element_from_json(t.get(2)?).ok()?;
                    if row >= dim || col >= dim {
                        return None;
                    }
                    columns[col].push((row, c));
                }
                Some(SparseMatrix::from_columns(field, dim, columns))
            })
            .collect()
    }

    pub fn store(&self, datum: &InductionDatum, gens: &[SparseMatrix]) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let key = Self::key(datum);
        let field = datum.field();
        let generators: Vec<Value> = gens
            .iter()
            .map(|g| {
                Value::Array(
                    g.triplets()
                        .map(|(r, c, x)| json!([r, c, field.element_to_json(x)]))
                        .collect(),
                )
            })
            .collect();
        let doc = json!({
            "header": {
                "format": FORMAT,
                "version": VERSION,
                "key": key,
                "p": field.p(),
                "ell": datum.shape().ell(),
                "modulus": field.modulus(),
                "cut": datum.cut(),
                "dim": datum.module_dim(),
            },
            "generators": generators,
        });
        let tmp = self.dir.join(format!("{key}.json.tmp"));
        fs::write(&tmp, serde_json::to_vec(&doc)?)?;
        fs::rename(tmp, self.path(&key))
    }
}
