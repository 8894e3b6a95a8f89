use std::fs;
use std::path::Path;
use std::sync::Arc;

use bicrossed::products::MatchedPair;
use bicrossed::{FieldSpec, FiniteGroupTable, HopfAlgebra};
use serde_json::Value as Json;

use crate::report::{CliError, CliResult};

pub fn read_json(path: &Path) -> CliResult<Json> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("malformed JSON in {}: {e}", path.display())))
}

pub fn write_json(path: &Path, v: &Json) -> CliResult<()> {
    let mut s = serde_json::to_string_pretty(v).expect("values serialise");
    s.push('\n');
    fs::write(path, s).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn in_file(path: &Path) -> impl FnOnce(bicrossed::Error) -> CliError + '_ {
    move |e| CliError::Usage(format!("{}: {e}", path.display()))
}

pub fn read_hopf(path: &Path) -> CliResult<Arc<HopfAlgebra>> {
    let v = read_json(path)?;
    Ok(Arc::new(HopfAlgebra::from_json(&v).map_err(in_file(path))?))
}

pub fn read_pair(path: &Path) -> CliResult<MatchedPair> {
    let v = read_json(path)?;
    MatchedPair::from_json(&v).map_err(in_file(path))
}

pub fn same_field(a: FieldSpec, b: FieldSpec) -> CliResult<()> {
    if a != b {
        return Err(CliError::Usage(format!("field mismatch between inputs: {a} vs {b}")));
    }
    Ok(())
}

pub fn parse_field(s: &str) -> CliResult<FieldSpec> {
    FieldSpec::parse(s).map_err(|e| CliError::Usage(e.to_string()))
}

/// `cyclic:N` (or `cN`), `klein`, `s3`, or a path to a group table file
/// `{order, table, labels}`.
pub fn parse_group(s: &str) -> CliResult<FiniteGroupTable> {
    let t = s.trim().to_ascii_lowercase();
    let cyclic = t
        .strip_prefix("cyclic:")
        .or_else(|| t.strip_prefix('c').filter(|r| !r.is_empty() && r.bytes().all(|b| b.is_ascii_digit())));
    if let Some(n) = cyclic {
        let n: usize = n
            .parse()
            .map_err(|_| CliError::Usage(format!("bad cyclic group order in {s:?}")))?;
        if n == 0 {
            return Err(CliError::Usage("a cyclic group needs positive order".into()));
        }
        return Ok(FiniteGroupTable::cyclic(n));
    }
    match t.as_str() {
        "klein" | "c2xc2" => Ok(FiniteGroupTable::klein()),
        "s3" => Ok(FiniteGroupTable::symmetric3()),
        _ => {
            let path = Path::new(s);
            let v = read_json(path)?;
            FiniteGroupTable::from_json(&v).map_err(in_file(path))
        }
    }
}
