//! Shared helpers for canonical text output.

/// A single signed summand: `negative` carries the sign, `body` the rendering
/// of the absolute value.
pub(crate) struct Term {
    pub negative: bool,
    pub body: String,
}

/// Joins summands as `a + b - c`; an empty list renders as `0`.
pub(crate) fn join_terms(terms: impl IntoIterator<Item = Term>) -> String {
    let mut out = String::new();
    for (idx, term) in terms.into_iter().enumerate() {
        match (idx, term.negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&term.body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `X^k` style power suffix: empty for 0, `name` for 1.
pub(crate) fn power(name: &str, exp: usize) -> String {
    match exp {
        0 => String::new(),
        1 => name.to_string(),
        k => format!("{name}^{k}"),
    }
}
