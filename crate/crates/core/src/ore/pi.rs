//! The π functions. `π_i^m(a)` is computed row by row with
//! `π_l^{m+1} = σ∘π_{l−1}^m + δ∘π_l^m`, which costs O(m²) map applications;
//! the word enumerator is kept as an independent oracle.

use crate::ring::{MapKind, Ring};

use super::{OreContext, OreError};

/// Largest `m` accepted by the word enumerator.
pub const PI_WORD_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Sigma,
    Delta,
}

impl Letter {
    pub fn name(self) -> &'static str {
        match self {
            Letter::Sigma => "sigma",
            Letter::Delta => "delta",
        }
    }
}

/// Renders a sum of words as `sigma∘delta + delta∘sigma`.
pub fn render_words(words: &[Vec<Letter>]) -> String {
    if words.is_empty() {
        return "0".to_string();
    }
    words
        .iter()
        .map(|w| {
            if w.is_empty() {
                "id".to_string()
            } else {
                w.iter().map(|l| l.name()).collect::<Vec<_>>().join("∘")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl<R: Ring> OreContext<R> {
    /// From `[π_0^m(a), …, π_m^m(a)]` to the row for `m + 1`.
    pub(crate) fn next_pi_row(&self, row: &[R::Elem]) -> Vec<R::Elem> {
        let ring = self.ring();
        let (sigma, delta) = (self.sigma(), self.delta());
        let m = row.len() - 1;
        (0..=m + 1)
            .map(|l| {
                let s = (l >= 1).then(|| sigma.apply(&row[l - 1]));
                let d = (l <= m && delta.kind() != MapKind::Zero).then(|| delta.apply(&row[l]));
                match (s, d) {
                    (Some(s), Some(d)) => ring.add(&s, &d),
                    (Some(s), None) => s,
                    (None, Some(d)) => d,
                    (None, None) => ring.zero(),
                }
            })
            .collect()
    }

    /// `[π_0^m(a), …, π_m^m(a)]`.
    pub fn pi_row(&self, m: usize, a: &R::Elem) -> Vec<R::Elem> {
        let mut row = vec![a.clone()];
        for _ in 0..m {
            row = self.next_pi_row(&row);
        }
        row
    }

    /// `π_i^m(a)`; zero outside `0 ≤ i ≤ m`.
    pub fn pi(&self, i: i64, m: usize, a: &R::Elem) -> R::Elem {
        if i < 0 || i as usize > m {
            return self.ring().zero();
        }
        self.pi_row(m, a).swap_remove(i as usize)
    }

    /// `π_i^m(a)` by the recursion with σ and δ applied first:
    /// `π_l^{m+1}(a) = π_{l−1}^m(σ(a)) + π_l^m(δ(a))`. Exponential in `m`.
    pub fn pi_inner(&self, i: i64, m: usize, a: &R::Elem) -> R::Elem {
        let ring = self.ring();
        if i < 0 || i as usize > m {
            return ring.zero();
        }
        if m == 0 {
            return a.clone();
        }
        let s = self.pi_inner(i - 1, m - 1, &self.sigma().apply(a));
        let d = self.pi_inner(i, m - 1, &self.delta().apply(a));
        ring.add(&s, &d)
    }

    /// All `C(m, i)` words with `i` σ's and `m − i` δ's, ordered
    /// lexicographically by the positions of the σ's. Letters are listed
    /// outermost first, so `[Sigma, Delta]` is `σ∘δ`.
    pub fn pi_words(i: usize, m: usize) -> Result<Vec<Vec<Letter>>, OreError> {
        if m > PI_WORD_LIMIT {
            return Err(OreError::WordLimit {
                m,
                limit: PI_WORD_LIMIT,
            });
        }
        let mut out = Vec::new();
        if i > m {
            return Ok(out);
        }
        let mut word = vec![Letter::Delta; m];
        fn place(start: usize, left: usize, word: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
            if left == 0 {
                out.push(word.clone());
                return;
            }
            for p in start..=word.len() - left {
                word[p] = Letter::Sigma;
                place(p + 1, left - 1, word, out);
                word[p] = Letter::Delta;
            }
        }
        place(0, i, &mut word, &mut out);
        Ok(out)
    }

    /// Applies one word to `a`, innermost (last) letter first.
    pub fn apply_word(&self, word: &[Letter], a: &R::Elem) -> R::Elem {
        word.iter().rev().fold(a.clone(), |acc, l| match l {
            Letter::Sigma => self.sigma().apply(&acc),
            Letter::Delta => self.delta().apply(&acc),
        })
    }

    /// `π_i^m(a)` as the explicit sum over all words.
    pub fn pi_bruteforce(&self, i: usize, m: usize, a: &R::Elem) -> Result<R::Elem, OreError> {
        let ring = self.ring();
        let words = Self::pi_words(i, m)?;
        Ok(words
            .iter()
            .fold(ring.zero(), |acc, w| ring.add(&acc, &self.apply_word(w, a))))
    }
}
