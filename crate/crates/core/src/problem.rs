//! Problem files: a field, a generator list and optional idempotents, as JSON.
//!
//! ```json
//! {
//!   "field": {"p": 2, "m": 2, "modulus": [1, 1, 1]},
//!   "n": 3,
//!   "generators": [[[0, 0, 1], [1, 0, 0], [0, 1, 0]]],
//!   "idempotents": [[{"coeff": 1, "word": []}, {"coeff": 1, "word": [0]}]],
//!   "options": {"seed": 7, "cap": 1000000}
//! }
//! ```
//!
//! Field entries are integers in `[0, q)`; over extension fields a
//! coefficient list (low degree first) is accepted as well.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::linalg::Matrix;

/// One term `coeff * word` of an algebra element.
pub type Term = (FieldElement, Vec<usize>);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProblemOptions {
    pub seed: Option<u64>,
    pub cap: Option<u128>,
    pub max_order: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ProblemSpec {
    pub field: FieldCtx,
    pub n: usize,
    pub generators: Vec<Matrix>,
    pub idempotents: Vec<Vec<Term>>,
    pub options: ProblemOptions,
}

fn err(location: &str, message: impl Into<String>) -> Error {
    Error::input(location, message)
}

fn get_u64(v: &Value, location: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| err(location, "expected a non-negative integer"))
}

fn get_array<'a>(v: &'a Value, location: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(location, "expected an array"))
}

/// A field element given as an integer or as a coefficient list.
pub fn parse_element(ctx: &FieldCtx, v: &Value, location: &str) -> Result<FieldElement> {
    let located = |e: Error| match e {
        Error::Input { .. } => e,
        other => err(location, other.to_string()),
    };
    if let Some(x) = v.as_u64() {
        let x = u32::try_from(x).map_err(|_| err(location, "entry out of range"))?;
        return ctx.elem(x).map_err(|_| err(location, format!("entry {x} is not in [0, {})", ctx.q())));
    }
    if let Some(list) = v.as_array() {
        if ctx.is_prime_field() {
            return Err(err(location, "coefficient lists are only allowed over extension fields"));
        }
        let coeffs = list
            .iter()
            .map(|c| {
                get_u64(c, location).and_then(|c| u32::try_from(c).map_err(|_| err(location, "entry out of range")))
            })
            .collect::<Result<Vec<u32>>>()?;
        return ctx.from_coeffs(&coeffs).map_err(located);
    }
    Err(err(location, "expected an integer or a coefficient list"))
}

/// A square matrix as a list of rows.
pub fn parse_matrix(ctx: &FieldCtx, v: &Value, n: usize, location: &str) -> Result<Matrix> {
    let rows = get_array(v, location)?;
    if rows.len() != n {
        return Err(err(location, format!("expected {n} rows, found {}", rows.len())));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let loc = format!("{location}[{i}]");
        let entries = get_array(row, &loc)?;
        if entries.len() != n {
            return Err(err(&loc, format!("expected {n} entries, found {}", entries.len())));
        }
        out.push(
            entries
                .iter()
                .enumerate()
                .map(|(j, x)| parse_element(ctx, x, &format!("{loc}[{j}]")))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Matrix::from_rows(out, n)
}

fn parse_field(v: &Value) -> Result<FieldCtx> {
    let obj = v.as_object().ok_or_else(|| err("field", "expected an object"))?;
    let p = get_u64(obj.get("p").ok_or_else(|| err("field.p", "missing"))?, "field.p")?;
    let m = match obj.get("m") {
        Some(m) => get_u64(m, "field.m")?,
        None => 1,
    };
    let p = u32::try_from(p).map_err(|_| err("field.p", "too large"))?;
    let m = u32::try_from(m).map_err(|_| err("field.m", "too large"))?;
    let modulus = match obj.get("modulus") {
        Some(list) => Some(
            get_array(list, "field.modulus")?
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let loc = format!("field.modulus[{i}]");
                    get_u64(c, &loc).and_then(|c| u32::try_from(c).map_err(|_| err(&loc, "too large")))
                })
                .collect::<Result<Vec<u32>>>()?,
        ),
        None => None,
    };
    if m > 1 && modulus.is_none() {
        return Err(err("field.modulus", "required when m > 1"));
    }
    if m == 1 && modulus.is_some() {
        return Err(err("field.modulus", "only allowed when m > 1"));
    }
    FieldCtx::new(p, m, modulus.as_deref()).map_err(|e| err("field", e.to_string()))
}

/// A list of `{"coeff": c, "word": [...]}` terms.
pub fn parse_terms(ctx: &FieldCtx, v: &Value, num_gens: usize, location: &str) -> Result<Vec<Term>> {
    let mut out = Vec::new();
    for (k, term) in get_array(v, location)?.iter().enumerate() {
        let loc = format!("{location}[{k}]");
        let coeff =
            parse_element(ctx, term.get("coeff").ok_or_else(|| err(&loc, "missing coeff"))?, &format!("{loc}.coeff"))?;
        let word_loc = format!("{loc}.word");
        let word = get_array(term.get("word").ok_or_else(|| err(&loc, "missing word"))?, &word_loc)?
            .iter()
            .map(|s| {
                let s = get_u64(s, &word_loc)? as usize;
                if s >= num_gens {
                    return Err(err(&word_loc, format!("generator index {s} out of range")));
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        out.push((coeff, word));
    }
    Ok(out)
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<ProblemSpec> {
        let root: Value = serde_json::from_str(text).map_err(|e| err("problem", e.to_string()))?;
        let field = parse_field(root.get("field").ok_or_else(|| err("field", "missing"))?)?;
        let n = get_u64(root.get("n").ok_or_else(|| err("n", "missing"))?, "n")? as usize;
        if n == 0 {
            return Err(err("n", "must be positive"));
        }
        let gens = get_array(root.get("generators").ok_or_else(|| err("generators", "missing"))?, "generators")?;
        if gens.is_empty() {
            return Err(err("generators", "at least one generator is required"));
        }
        let generators = gens
            .iter()
            .enumerate()
            .map(|(i, g)| parse_matrix(&field, g, n, &format!("generators[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let idempotents = match root.get("idempotents") {
            None | Some(Value::Null) => Vec::new(),
            Some(list) => get_array(list, "idempotents")?
                .iter()
                .enumerate()
                .map(|(i, e)| parse_terms(&field, e, generators.len(), &format!("idempotents[{i}]")))
                .collect::<Result<Vec<_>>>()?,
        };
        let mut options = ProblemOptions::default();
        if let Some(opts) = root.get("options") {
            if let Some(s) = opts.get("seed") {
                options.seed = Some(get_u64(s, "options.seed")?);
            }
            if let Some(c) = opts.get("cap") {
                options.cap = Some(get_u64(c, "options.cap")? as u128);
            }
            if let Some(c) = opts.get("max_order") {
                options.max_order = Some(get_u64(c, "options.max_order")? as usize);
            }
        }
        Ok(ProblemSpec { field, n, generators, idempotents, options })
    }

    pub fn from_path(path: impl AsRef<std::path::Path>) -> Result<ProblemSpec> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| err(&path.display().to_string(), e.to_string()))?;
        Self::from_json(&text)
    }
}

/// A candidate matrix file: either a bare list of rows or `{"matrix": rows}`.
pub fn parse_matrix_file(ctx: &FieldCtx, text: &str, n: usize) -> Result<Matrix> {
    let root: Value = serde_json::from_str(text).map_err(|e| err("matrix", e.to_string()))?;
    match root.get("matrix") {
        Some(m) => parse_matrix(ctx, m, n, "matrix"),
        None => parse_matrix(ctx, &root, n, "matrix"),
    }
}
