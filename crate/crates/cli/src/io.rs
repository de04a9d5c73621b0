//! JSON file formats for groups, braces and solutions.
//!
//! Every table uses index 0 for the identity.
//!
//! * group: `{"order": n, "table": [[...]]}`
//! * brace: `{"order": n, "add": [[...]], "mul": [[...]], "labels": [...]}`
//!   with `labels` optional; `λ` is recomputed on load.
//! * solution: `{"size": n, "lambda": [[...]], "rho": [[...]]}` where
//!   `lambda[x][y] = λ_x(y)` and `rho[y][x] = ρ_y(x)`.

use crate::error::CliError;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use skewbrace::{FiniteGroup, SetSolution, SkewBrace};
use std::fs;
use std::path::Path;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraceFile {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub size: usize,
    pub lambda: Vec<Vec<usize>>,
    pub rho: Vec<Vec<usize>>,
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| {
        if e.is_data() {
            CliError::schema(path, missing_field(&e).unwrap_or("(document)"), e.to_string())
        } else {
            CliError::Json {
                path: path.to_path_buf(),
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            }
        }
    })
}

/// Pulls the field name out of serde's "missing field `x`" messages.
fn missing_field(e: &serde_json::Error) -> Option<&'static str> {
    let message = e.to_string();
    ["order", "table", "add", "mul", "labels", "size", "lambda", "rho"]
        .into_iter()
        .find(|f| message.contains(&format!("`{f}`")))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("file formats serialize");
    text.push('\n');
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn check_square(path: &Path, field: &str, n: usize, rows: &[Vec<usize>]) -> Result<(), CliError> {
    if rows.len() != n {
        return Err(CliError::schema(
            path,
            field,
            format!("{} rows, expected {n}", rows.len()),
        ));
    }
    if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(CliError::schema(
            path,
            field,
            format!("row {i} has {} entries, expected {n}", row.len()),
        ));
    }
    if let Some(v) = rows.iter().flatten().find(|&&v| v >= n) {
        return Err(CliError::schema(path, field, format!("entry {v} is outside 0..{n}")));
    }
    Ok(())
}

pub fn load_group(path: &Path) -> Result<FiniteGroup, CliError> {
    let file: GroupFile = read_json(path)?;
    check_square(path, "table", file.order, &file.table)?;
    Ok(FiniteGroup::from_rows(&file.table)?)
}

pub fn group_file(group: &FiniteGroup) -> GroupFile {
    GroupFile {
        order: group.order(),
        table: group.rows(),
    }
}

/// A brace with the labels stored alongside it, if any.
#[derive(Debug)]
pub struct LoadedBrace {
    pub brace: SkewBrace,
    pub labels: Option<Vec<String>>,
}

pub fn load_brace(path: &Path) -> Result<LoadedBrace, CliError> {
    let file: BraceFile = read_json(path)?;
    check_square(path, "add", file.order, &file.add)?;
    check_square(path, "mul", file.order, &file.mul)?;
    if let Some(labels) = &file.labels {
        if labels.len() != file.order {
            return Err(CliError::schema(
                path,
                "labels",
                format!("{} labels for {} elements", labels.len(), file.order),
            ));
        }
    }
    Ok(LoadedBrace {
        brace: SkewBrace::from_tables(&file.add, &file.mul)?,
        labels: file.labels,
    })
}

pub fn brace_file(brace: &SkewBrace, labels: Option<Vec<String>>) -> BraceFile {
    BraceFile {
        order: brace.order(),
        add: brace.additive().rows(),
        mul: brace.multiplicative().rows(),
        labels,
    }
}

pub fn load_solution(path: &Path) -> Result<SetSolution, CliError> {
    let file: SolutionFile = read_json(path)?;
    check_square(path, "lambda", file.size, &file.lambda)?;
    check_square(path, "rho", file.size, &file.rho)?;
    Ok(SetSolution::new(&file.lambda, &file.rho)?)
}

pub fn solution_file(solution: &SetSolution) -> SolutionFile {
    SolutionFile {
        size: solution.size(),
        lambda: solution.lambda_rows(),
        rho: solution.rho_rows(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use skewbrace::constructions::{nonabelian_labels, odd_p_cyclic_brace, odd_p_nonabelian_brace};

    #[test]
    fn brace_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("b9.json");
        let b9 = odd_p_cyclic_brace(3, 2).unwrap();
        write_json(&path, &brace_file(&b9, None)).unwrap();
        assert_eq!(load_brace(&path).unwrap().brace, b9);

        let b27 = odd_p_nonabelian_brace(3, 2).unwrap();
        let labels = nonabelian_labels(3, 2);
        write_json(&path, &brace_file(&b27, Some(labels.clone()))).unwrap();
        let loaded = load_brace(&path).unwrap();
        assert_eq!(loaded.brace, b27);
        assert_eq!(loaded.labels, Some(labels));
    }

    #[test]
    fn solution_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.json");
        let s = SetSolution::from_brace(&odd_p_cyclic_brace(3, 2).unwrap());
        write_json(&path, &solution_file(&s)).unwrap();
        assert_eq!(load_solution(&path).unwrap(), s);
    }

    #[test]
    fn schema_errors_name_the_field() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        fs::write(&path, r#"{"order": 2, "add": [[0,1],[1,0]]}"#).unwrap();
        match load_brace(&path) {
            Err(CliError::Schema { field, .. }) => assert_eq!(field, "mul"),
            other => panic!("unexpected {other:?}"),
        }
        fs::write(&path, r#"{"size": 2, "lambda": [[0,1],[0]], "rho": [[0,1],[0,1]]}"#).unwrap();
        match load_solution(&path) {
            Err(CliError::Schema { field, reason, .. }) => {
                assert_eq!(field, "lambda");
                assert!(reason.contains("row 1"));
            }
            other => panic!("unexpected {other:?}"),
        }
        fs::write(&path, "{\"order\": 2,\n \"table\": [[0,1],[1,0]").unwrap();
        match load_group(&path) {
            Err(e @ CliError::Json { line: 2, .. }) => assert_eq!(e.exit_code(), 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
