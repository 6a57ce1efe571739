//! Left form `Σ X^i a_i` versus the standard form `Σ b_i X^i`, and the
//! isomorphism `R^op[X;σ⁻¹,−δ∘σ⁻¹] → R[X;σ,δ]^op` built on it.

use crate::ring::{Opposite, Ring};

use super::{OreContext, OreError, OrePoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormDirection {
    /// `Σ X^i a_i` to `Σ b_i X^i`.
    LeftToRight,
    /// `Σ b_i X^i` to `Σ X^i a_i`.
    RightToLeft,
}

impl<R: Ring> OreContext<R> {
    /// `Σ X^i a_i = Σ_i Σ_j π_j^i(a_i) X^j`.
    pub fn from_left_form<'a, I>(&self, terms: I) -> OrePoly<R>
    where
        I: IntoIterator<Item = (usize, &'a R::Elem)>,
    {
        let mut out = Vec::new();
        for (i, a) in terms {
            out.extend(self.pi_row(i, a).into_iter().enumerate());
        }
        OrePoly::from_terms(self, out)
    }

    /// Writes `p` as `Σ X^i a_i`, eliminating from the top degree down with
    /// `a_m = σ^{−m}(b_m)`.
    pub fn to_left_form(&self, p: &OrePoly<R>) -> Result<Vec<(usize, R::Elem)>, OreError> {
        let inv = self.sigma_inverse().ok_or(OreError::MissingSigmaInverse)?;
        let mut rest = p.clone();
        let mut out = Vec::new();
        while let Ok((m, b)) = rest.leading() {
            let a = (0..m).fold(b.clone(), |acc, _| inv.apply(&acc));
            rest = rest.try_sub(&self.from_left_form([(m, &a)]))?;
            out.push((m, a));
        }
        out.reverse();
        Ok(out)
    }
}

/// Converts a coefficient sequence between the two forms. The result is in
/// ascending degree with zero coefficients dropped.
pub fn convert_form<R: Ring>(
    ctx: &OreContext<R>,
    terms: &[(usize, R::Elem)],
    direction: FormDirection,
) -> Result<Vec<(usize, R::Elem)>, OreError> {
    match direction {
        FormDirection::LeftToRight => Ok(ctx
            .from_left_form(terms.iter().map(|(i, a)| (*i, a)))
            .terms()
            .map(|(k, c)| (k, c.clone()))
            .collect()),
        FormDirection::RightToLeft => {
            ctx.to_left_form(&OrePoly::from_terms(ctx, terms.iter().cloned()))
        }
    }
}

/// `f(Σ r_i X^i) = Σ X^i·r_i`, read in `target` and returned in standard
/// form. For the opposite extension `p`'s context must be `target.opposite()`.
pub fn opposite_iso<R: Ring>(
    p: &OrePoly<Opposite<R>>,
    target: &OreContext<R>,
) -> Result<OrePoly<R>, OreError> {
    if target.sigma_inverse().is_none() {
        return Err(OreError::MissingSigmaInverse);
    }
    Ok(target.from_left_form(p.terms()))
}
