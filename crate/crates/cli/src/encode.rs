//! Text encodings accepted on the command line and the JSON shapes printed.

use clap::ValueEnum;
use serde_json::{json, Value};
use shi_core::bijection::Kind;
use shi_core::geometry::{self, Wall};
use shi_core::parking::parking_function;
use shi_core::{AffinePerm, NSet, NVector, Partition, ShiRegionRecord};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Encoding {
    /// Parts, e.g. `[5,3,1,1]`.
    Partition,
    /// Bead positions (first-column hook lengths).
    Abacus,
    Nvector,
    /// Integers listed in any order, e.g. `[0,7,-4]`.
    Nset,
    /// n-window; for affine elements the window of the inverse.
    Window,
    /// Generator indices separated by spaces, e.g. `"0 1"`.
    Word,
}

impl Encoding {
    pub fn name(self) -> &'static str {
        match self {
            Encoding::Partition => "partition",
            Encoding::Abacus => "abacus",
            Encoding::Nvector => "nvector",
            Encoding::Nset => "nset",
            Encoding::Window => "window",
            Encoding::Word => "word",
        }
    }
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>, CliError> {
    let cleaned = s.trim().replace(['{', '('], "[").replace(['}', ')'], "]");
    let text = if cleaned.starts_with('[') {
        cleaned
    } else {
        format!("[{cleaned}]")
    };
    serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("expected a list of integers: {e}")))
}

pub fn parse_word(s: &str, n: usize) -> Result<Vec<usize>, CliError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let i: usize = t
                .parse()
                .map_err(|_| CliError::Invalid(format!("bad generator index {t:?}")))?;
            if i >= n {
                return Err(CliError::Invalid(format!("generator s_{i} does not exist for n={n}")));
            }
            Ok(i)
        })
        .collect()
}

fn nonnegative(v: &[i64], what: &str) -> Result<Vec<usize>, CliError> {
    v.iter()
        .map(|&x| usize::try_from(x).map_err(|_| CliError::Invalid(format!("{what} entries must be nonnegative"))))
        .collect()
}

/// Partition with the given first-column hook lengths.
fn partition_from_beads(beads: &[usize]) -> Result<Partition, CliError> {
    let mut h = beads.to_vec();
    h.sort_unstable_by(|a, b| b.cmp(a));
    if h.windows(2).any(|p| p[0] == p[1]) {
        return Err(CliError::Invalid("bead positions must be distinct".into()));
    }
    let len = h.len();
    let parts = h.iter().enumerate().map(|(i, &x)| x + i + 1 - len).collect();
    Ok(Partition::new(parts)?)
}

enum Object {
    Partition(Partition),
    Core(NSet),
    Alcove(AffinePerm),
}

fn read(n: usize, from: Encoding, input: &str) -> Result<Object, CliError> {
    Ok(match from {
        Encoding::Partition => Object::Partition(Partition::new(nonnegative(&parse_ints(input)?, "partition")?)?),
        Encoding::Abacus => Object::Partition(partition_from_beads(&nonnegative(&parse_ints(input)?, "abacus")?)?),
        Encoding::Nvector => Object::Core(NVector::new(parse_ints(input)?)?.to_nset()),
        Encoding::Nset => Object::Core(NSet::new(&parse_ints(input)?)?),
        Encoding::Window => Object::Alcove(AffinePerm::from_window(parse_ints(input)?)?.inverse()),
        Encoding::Word => Object::Alcove(AffinePerm::from_word(&parse_word(input, n)?, n)?),
    })
}

fn check_rank(n: usize, got: usize) -> Result<(), CliError> {
    if n != got {
        return Err(shi_core::Error::RankMismatch(n, got).into());
    }
    Ok(())
}

pub fn convert(n: usize, from: Encoding, to: Encoding, input: &str) -> Result<Value, CliError> {
    let object = read(n, from, input)?;
    let core = |object: &Object| -> Result<NSet, CliError> {
        match object {
            Object::Partition(p) => Ok(p.n_set(n)?),
            Object::Core(s) => Ok(s.clone()),
            Object::Alcove(w) => Ok(NSet::new(w.inverse().window())?),
        }
    };
    let value = match to {
        Encoding::Partition => match &object {
            Object::Partition(p) => json!(p.parts()),
            other => json!(core(other)?.to_partition().parts()),
        },
        Encoding::Abacus => match &object {
            Object::Partition(p) => json!(p.first_column_hooks()),
            other => json!(core(other)?.to_partition().first_column_hooks()),
        },
        Encoding::Nvector => json!(core(&object)?.to_nvector().entries()),
        Encoding::Nset => json!(core(&object)?.by_residue()),
        Encoding::Window => match &object {
            Object::Alcove(w) => json!(w.inverse().window()),
            other => json!(core(other)?.sorted()),
        },
        Encoding::Word => match &object {
            Object::Alcove(w) => json!(w.reduced_word()),
            _ => {
                return Err(CliError::Invalid(format!(
                    "cannot convert {} to word; use --from window",
                    from.name()
                )))
            }
        },
    };
    let rank = match &object {
        Object::Partition(_) => n,
        Object::Core(s) => s.n(),
        Object::Alcove(w) => w.n(),
    };
    check_rank(n, rank)?;
    Ok(json!({ to.name(): value }))
}

fn walls_json(walls: &[Wall]) -> Value {
    walls
        .iter()
        .map(|w| {
            let (i, j) = w.hyperplane.root();
            json!({ "root": [i, j], "level": w.hyperplane.level(), "label": w.label })
        })
        .collect()
}

pub fn record_json(r: &ShiRegionRecord, m: usize) -> Value {
    let n = r.w.n();
    let t = m * n;
    let t = match r.kind {
        Kind::Minimal => t + 1,
        Kind::Maximal => t - 1,
    };
    json!({
        "kind": r.kind.to_string(),
        "n": n,
        "m": m,
        "t": t,
        "word": r.w.reduced_word(),
        "window": r.w.window(),
        "inverse_window": r.w.inverse().window(),
        "g": r.g.oneline(),
        "y": { "window": r.y.window(), "word": r.y.reduced_word() },
        "sigma": r.sigma.oneline(),
        "core": r.core.by_residue(),
        "partition": r.core.to_partition().parts(),
        "floors": walls_json(&geometry::floors(&r.w)),
        "ceilings": walls_json(&geometry::ceilings(&r.w)),
        "parking": parking_function(&r.w, m).values(),
    })
}
