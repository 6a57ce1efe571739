//! Leading-term reduction against a list of generators.
//!
//! Each step cancels the top Y-term `c·Y^t` of the current leading
//! coefficient. A generator `g` with leading data `(d, u·Y^s)`, `u ≠ 0`,
//! `s ≤ t`, `d ≤ m` applies with cofactor `w = u⁻¹·c·Y^{t−s}`: the product
//! `(g·w)·X^{m−d}` has leading term `(u·(u⁻¹·c))·Y^t·X^m = c·Y^t·X^m` by the
//! inverse property of alternative algebras.
//!
//! A zero remainder certifies membership in the right ideal generated by the
//! generators; a nonzero or incomplete remainder certifies nothing.

use crate::exactnum::CdElement;
use crate::ore::{OreError, OrePoly};

use super::{leading_data, CdPoly, WeylElement, WeylError};

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionStep {
    pub generator: usize,
    /// Left-nested right factors: the step subtracts
    /// `((g·c_1)·c_2)⋯·X^shift`.
    pub cofactors: Vec<CdPoly>,
    pub shift: usize,
    pub subtracted: WeylElement,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionTrace {
    pub input: WeylElement,
    pub generators: Vec<WeylElement>,
    pub steps: Vec<ReductionStep>,
    pub remainder: WeylElement,
    /// False when the remainder still has X-degree at least the smallest
    /// generator degree but no generator's leading coefficient applied.
    pub complete: bool,
}

impl ReductionTrace {
    /// Recomputes every subtracted term from its generator and cofactors,
    /// then checks `input = Σ subtracted + remainder`.
    pub fn verify(&self) -> bool {
        let ctx = self.input.context();
        let mut total = self.remainder.clone();
        for step in &self.steps {
            let mut q = self.generators[step.generator].clone();
            for c in &step.cofactors {
                q = &q * &OrePoly::constant(ctx, c.clone());
            }
            let x = OrePoly::x_power(ctx, step.shift).expect("Weyl coefficients are unital");
            q = &q * &x;
            if q != step.subtracted {
                return false;
            }
            total = &total + &q;
        }
        total == self.input
    }

    /// `(xdeg + 1)·(max Y-degree + 1)·#generators` for the input. Not an
    /// upper bound in general: cofactors can raise the Y-degree of lower
    /// X-coefficients.
    pub fn naive_step_bound(&self) -> usize {
        let xdeg = self.input.degree().finite().map_or(0, |d| d + 1);
        xdeg * (max_ydeg(&self.input) + 1) * self.generators.len()
    }

    /// Upper bound on the number of steps. Each step removes the top term of
    /// the level-`m` coefficient and adds nothing at level `m`; below it, the
    /// Y-degree grows by at most `e = max(ydeg g − ydeg lc g)` over usable
    /// generators. So level `xdeg − k` has at most `D + e·k + 1` terms when
    /// reached, `D` the input's Y-degree.
    pub fn step_bound(&self) -> usize {
        let Some(xdeg) = self.input.degree().finite() else {
            return 0;
        };
        let d = max_ydeg(&self.input);
        let e = self
            .generators
            .iter()
            .filter_map(|g| {
                let (_, lc) = g.leading().ok()?;
                let (s, _) = lc.as_monomial()?;
                Some(max_ydeg(g).saturating_sub(s))
            })
            .max()
            .unwrap_or(0);
        (xdeg + 1) * (d + 1) + e * xdeg * (xdeg + 1) / 2
    }
}

fn max_ydeg(p: &WeylElement) -> usize {
    p.terms().filter_map(|(_, c)| c.degree()).max().unwrap_or(0)
}

fn validate_generators(generators: &[WeylElement]) -> Result<(), WeylError> {
    if generators.is_empty() {
        return Err(WeylError::NoGenerators);
    }
    if let Some(i) = generators.iter().position(OrePoly::is_zero) {
        return Err(WeylError::ZeroGenerator(i));
    }
    Ok(())
}

/// Cofactor `w` cancelling `top` (a single term `c·Y^t`) against a generator
/// whose leading coefficient is the monomial `u·Y^s`.
fn cofactor(lc: &CdPoly, top: (usize, &CdElement)) -> Option<CdPoly> {
    let (s, u) = lc.as_monomial()?;
    let (t, c) = top;
    if s > t {
        return None;
    }
    let w = &u.inverse().ok()? * c;
    Some(CdPoly::monomial(w, t - s))
}

pub fn reduce(p: &WeylElement, generators: &[WeylElement]) -> Result<ReductionTrace, WeylError> {
    validate_generators(generators)?;
    let ctx = p.context();
    if generators.iter().any(|g| g.context() != ctx) {
        return Err(OreError::ContextMismatch.into());
    }
    let leads: Vec<_> = generators
        .iter()
        .map(|g| leading_data(g).expect("nonzero"))
        .collect();
    let min_deg = leads.iter().map(|l| l.xdeg).min().expect("nonempty");
    let mut current = p.clone();
    let mut steps = Vec::new();
    let mut complete = true;
    while let Ok((m, lc)) = current.leading() {
        if m < min_deg {
            break;
        }
        let top = lc.leading().expect("stored coefficients are nonzero");
        let choice = leads.iter().enumerate().find_map(|(i, l)| {
            if l.xdeg > m {
                return None;
            }
            cofactor(&l.lc, top).map(|w| (i, w))
        });
        let Some((i, w)) = choice else {
            complete = false;
            break;
        };
        let shift = m - leads[i].xdeg;
        let gw = &generators[i] * &OrePoly::constant(ctx, w.clone());
        let x = OrePoly::x_power(ctx, shift).expect("Weyl coefficients are unital");
        let q = &gw * &x;
        current = &current - &q;
        steps.push(ReductionStep {
            generator: i,
            cofactors: vec![w],
            shift,
            subtracted: q,
        });
    }
    Ok(ReductionTrace {
        input: p.clone(),
        generators: generators.to_vec(),
        steps,
        remainder: current,
        complete,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeEntry {
    pub xdeg: usize,
    pub lc: CdPoly,
    /// `p_i·X^{n−n_i}`.
    pub aligned: WeylElement,
    /// Whether the aligned leading coefficient is a nonzero `u·Y^s`.
    pub invertible_monomial: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LeadingIdealProbe {
    /// Common degree `n = max n_i`.
    pub n: usize,
    pub entries: Vec<ProbeEntry>,
}

pub fn leading_ideal_probe(generators: &[WeylElement]) -> Result<LeadingIdealProbe, WeylError> {
    validate_generators(generators)?;
    let leads: Vec<_> = generators
        .iter()
        .map(|g| leading_data(g).expect("nonzero"))
        .collect();
    let n = leads.iter().map(|l| l.xdeg).max().expect("nonempty");
    let entries = generators
        .iter()
        .zip(leads)
        .map(|(g, l)| {
            let x = OrePoly::x_power(g.context(), n - l.xdeg).expect("Weyl coefficients are unital");
            let aligned = g * &x;
            let lc = leading_data(&aligned).expect("nonzero").lc;
            ProbeEntry {
                xdeg: l.xdeg,
                invertible_monomial: lc.as_monomial().is_some(),
                lc: l.lc,
                aligned,
            }
        })
        .collect();
    Ok(LeadingIdealProbe { n, entries })
}
