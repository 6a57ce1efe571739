//! Line-oriented module definition files.
//!
//! ```text
//! module <name> over <algebra>
//! dim <n>
//! side right|left
//! alpha = <row>; <row>; ...
//! act <j> = <row>; <row>; ...
//! end
//! ```
//!
//! `#` starts a comment. The side defaults to `right`; omitted matrices are
//! zero.

use std::fmt::Write as _;

use crate::homring::Algebra;
use crate::linalg::{parse_rows, Matrix};

use super::{HomModule, ModuleError, ModuleSide};

fn err(line: usize, message: impl Into<String>) -> ModuleError {
    ModuleError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_matrix(text: &str, n: usize, line: usize) -> Result<Matrix, ModuleError> {
    let rows = parse_rows(text).map_err(|e| err(line, e.to_string()))?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(err(line, format!("expected a {n}x{n} matrix")));
    }
    Ok(Matrix::from_rows(rows))
}

/// Parses a module file; `resolve` maps the algebra name to an algebra.
pub fn parse_module(
    text: &str,
    resolve: impl Fn(&str) -> Option<Algebra>,
) -> Result<HomModule, ModuleError> {
    let mut header: Option<(String, Algebra)> = None;
    let mut dim = None;
    let mut side = ModuleSide::Right;
    let mut alpha = None;
    let mut action: Vec<Matrix> = Vec::new();
    let mut ended = false;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
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
            "module" => {
                let (name, alg) = rest
                    .split_once(" over ")
                    .ok_or_else(|| err(line, "expected `module <name> over <algebra>`"))?;
                let alg = alg.trim();
                let ring = resolve(alg).ok_or_else(|| err(line, format!("unknown algebra `{alg}`")))?;
                action = vec![Matrix::zeros(0, 0); ring.dim()];
                header = Some((name.trim().to_string(), ring));
            }
            "dim" => {
                let Some((_, ring)) = &header else {
                    return Err(err(line, "`module` must come first"));
                };
                let n: usize = rest
                    .parse()
                    .map_err(|_| err(line, format!("bad dimension `{rest}`")))?;
                dim = Some(n);
                alpha = Some(Matrix::zeros(n, n));
                action = vec![Matrix::zeros(n, n); ring.dim()];
            }
            "side" => {
                side = match rest {
                    "right" => ModuleSide::Right,
                    "left" => ModuleSide::Left,
                    other => return Err(err(line, format!("unknown side `{other}`"))),
                };
            }
            "alpha" => {
                let n = need_dim()?;
                let body = rest
                    .strip_prefix('=')
                    .ok_or_else(|| err(line, "expected `alpha = <rows>`"))?;
                alpha = Some(parse_matrix(body, n, line)?);
            }
            "act" => {
                let n = need_dim()?;
                let (j, body) = rest
                    .split_once('=')
                    .ok_or_else(|| err(line, "expected `act <j> = <rows>`"))?;
                let j = j.trim();
                let j: usize = j
                    .parse()
                    .ok()
                    .filter(|&j| j < action.len())
                    .ok_or_else(|| err(line, format!("bad ring basis index `{j}`")))?;
                action[j] = parse_matrix(body, n, line)?;
            }
            "end" => ended = true,
            other => return Err(err(line, format!("unknown keyword `{other}`"))),
        }
    }
    if !ended {
        return Err(err(last_line, "missing `end`"));
    }
    let (name, ring) = header.ok_or_else(|| err(last_line, "missing `module` line"))?;
    let alpha = alpha.ok_or_else(|| err(last_line, "missing `dim`"))?;
    HomModule::new(name, &ring, action, alpha, side)
}

fn render_matrix(m: &Matrix) -> String {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Inverse of [`parse_module`]; zero action matrices are omitted.
pub fn render_module(m: &HomModule) -> String {
    let mut out = String::new();
    let side = match m.side() {
        ModuleSide::Right => "right",
        ModuleSide::Left => "left",
    };
    let _ = writeln!(out, "module {} over {}", m.name(), m.ring().name());
    let _ = writeln!(out, "dim {}", m.dim());
    let _ = writeln!(out, "side {side}");
    if m.dim() > 0 {
        let _ = writeln!(out, "alpha = {}", render_matrix(m.alpha()));
        for (j, a) in m.actions().iter().enumerate() {
            if !a.is_zero() {
                let _ = writeln!(out, "act {j} = {}", render_matrix(a));
            }
        }
    }
    out.push_str("end\n");
    out
}
