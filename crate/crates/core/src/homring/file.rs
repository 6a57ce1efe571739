//! Line-oriented algebra definition files.
//!
//! ```text
//! algebra <name>
//! dim <d>
//! basis <name_0> ... <name_{d-1}>
//! unit <index>
//! mul <i> <j> = <rat>*<k> [+ <rat>*<k> ...]
//! alpha <j> = <rat>*<k> [+ ...]
//! end
//! ```
//!
//! `#` starts a comment. Omitted products and α columns are zero.

use std::fmt::Write as _;

use crate::exactnum::Rational;
use crate::linalg::Matrix;

use super::{Algebra, AlgebraError, AlgebraSpec};

fn err(line: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_index(tok: &str, dim: usize, line: usize) -> Result<usize, AlgebraError> {
    let i: usize = tok
        .parse()
        .map_err(|_| err(line, format!("expected an index, found `{tok}`")))?;
    if i >= dim {
        return Err(err(line, format!("index {i} out of range for dimension {dim}")));
    }
    Ok(i)
}

/// Parses `r*k + s*l - ...` into a coordinate vector.
pub(crate) fn parse_combination(
    text: &str,
    dim: usize,
    line: usize,
) -> Result<Vec<Rational>, AlgebraError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = vec![Rational::zero(); dim];
    if compact.is_empty() || compact == "0" {
        return Ok(out);
    }
    let chars: Vec<char> = compact.chars().collect();
    let mut pieces = Vec::new();
    let mut start = 0;
    for idx in 1..chars.len() {
        if (chars[idx] == '+' || chars[idx] == '-') && !matches!(chars[idx - 1], '*' | '/' | '+' | '-') {
            pieces.push(chars[start..idx].iter().collect::<String>());
            start = idx;
        }
    }
    pieces.push(chars[start..].iter().collect());
    for piece in pieces {
        let (negative, body) = match piece.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, piece.strip_prefix('+').unwrap_or(&piece)),
        };
        let (coeff, index) = match body.split_once('*') {
            Some((c, k)) => (
                c.parse::<Rational>()
                    .map_err(|_| err(line, format!("bad coefficient `{c}`")))?,
                k,
            ),
            None => (Rational::one(), body),
        };
        let k = parse_index(index, dim, line)?;
        let coeff = if negative { -coeff } else { coeff };
        out[k] += coeff;
    }
    Ok(out)
}

pub(crate) fn render_combination(coords: &[Rational]) -> String {
    let parts: Vec<String> = coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("{c}*{k}"))
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Parses an algebra file into an unvalidated spec.
pub fn parse_algebra(text: &str) -> Result<AlgebraSpec, AlgebraError> {
    let mut name = None;
    let mut dim: Option<usize> = None;
    let mut basis_names = None;
    let mut unital = None;
    let mut cs: Option<Vec<Vec<Vec<Rational>>>> = None;
    let mut alpha: Option<Matrix> = None;
    let mut ended = false;
    let mut last_line = 0;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if ended {
            return Err(err(line, "content after `end`"));
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        let need_dim = || dim.ok_or_else(|| err(line, "`dim` must come first"));
        match keyword {
            "algebra" => {
                if rest.is_empty() {
                    return Err(err(line, "missing algebra name"));
                }
                name = Some(rest.to_string());
            }
            "dim" => {
                let d: usize = rest
                    .parse()
                    .map_err(|_| err(line, format!("bad dimension `{rest}`")))?;
                if d == 0 {
                    return Err(err(line, "dimension must be positive"));
                }
                dim = Some(d);
                cs = Some(vec![vec![vec![Rational::zero(); d]; d]; d]);
                alpha = Some(Matrix::zeros(d, d));
            }
            "basis" => {
                let d = need_dim()?;
                let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if names.len() != d {
                    return Err(err(line, format!("expected {d} basis names, found {}", names.len())));
                }
                basis_names = Some(names);
            }
            "unit" => {
                unital = Some(parse_index(rest, need_dim()?, line)?);
            }
            "mul" => {
                let d = need_dim()?;
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| err(line, "missing `=`"))?;
                let idx: Vec<&str> = lhs.split_whitespace().collect();
                if idx.len() != 2 {
                    return Err(err(line, "`mul` needs two indices"));
                }
                let (i, j) = (parse_index(idx[0], d, line)?, parse_index(idx[1], d, line)?);
                let table = cs.as_mut().expect("set with dim");
                table[i][j] = parse_combination(rhs, d, line)?;
            }
            "alpha" => {
                let d = need_dim()?;
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| err(line, "missing `=`"))?;
                let j = parse_index(lhs.trim(), d, line)?;
                let col = parse_combination(rhs, d, line)?;
                let m = alpha.as_mut().expect("set with dim");
                for (k, v) in col.into_iter().enumerate() {
                    m.set(k, j, v);
                }
            }
            "end" => ended = true,
            other => return Err(err(line, format!("unknown keyword `{other}`"))),
        }
    }
    if !ended {
        return Err(err(last_line, "missing `end`"));
    }
    let dim = dim.ok_or_else(|| err(last_line, "missing `dim`"))?;
    Ok(AlgebraSpec {
        name: name.ok_or_else(|| err(1, "missing `algebra <name>` header"))?,
        dim,
        basis_names: basis_names.unwrap_or_else(|| (0..dim).map(|i| format!("e{i}")).collect()),
        structure_constants: cs.expect("set with dim"),
        alpha_matrix: alpha.expect("set with dim"),
        unital,
    })
}

/// Inverse of [`parse_algebra`] for a loaded algebra.
pub fn render_algebra(alg: &Algebra) -> String {
    let spec = alg.spec();
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", spec.name);
    let _ = writeln!(out, "dim {}", spec.dim);
    let _ = writeln!(out, "basis {}", spec.basis_names.join(" "));
    if let Some(u) = spec.unital {
        let _ = writeln!(out, "unit {u}");
    }
    for (i, plane) in spec.structure_constants.iter().enumerate() {
        for (j, row) in plane.iter().enumerate() {
            if row.iter().any(|c| !c.is_zero()) {
                let _ = writeln!(out, "mul {i} {j} = {}", render_combination(row));
            }
        }
    }
    for j in 0..spec.dim {
        let col = spec.alpha_matrix.column(j);
        if col.iter().any(|c| !c.is_zero()) {
            let _ = writeln!(out, "alpha {j} = {}", render_combination(&col));
        }
    }
    out.push_str("end\n");
    out
}
