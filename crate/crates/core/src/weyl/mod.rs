//! The octonionic Weyl algebra `A(𝕆) = 𝕆[Y][X; id, d/dY]` and a leading-term
//! reduction engine for right ideals in it.

mod poly;
mod reduce;

pub use poly::{octo_delta, CdPoly, CdPolyRing, OctoPoly};
pub use reduce::{
    leading_ideal_probe, reduce, LeadingIdealProbe, ProbeEntry, ReductionStep, ReductionTrace,
};

use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::exactnum::MAX_LEVEL;
use crate::ore::{random_poly, OreContext, OreError, OreMaps, OrePoly};
use crate::ring::{RingMap, SampleBound};

pub type WeylContext = OreContext<CdPolyRing>;
pub type WeylElement = OrePoly<CdPolyRing>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error(transparent)]
    Ore(#[from] OreError),
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AlphaMode {
    #[default]
    Zero,
    Identity,
}

/// `A(𝕆)` with the chosen α.
pub fn build_weyl(alpha_mode: AlphaMode) -> Result<WeylContext, OreError> {
    build_weyl_over(MAX_LEVEL, alpha_mode)
}

/// `CD_level[Y][X; id, d/dY]`; level 2 gives the associative quaternionic
/// Weyl algebra.
pub fn build_weyl_over(level: u8, alpha_mode: AlphaMode) -> Result<WeylContext, OreError> {
    let ring = Arc::new(CdPolyRing::new(level));
    let alpha = match alpha_mode {
        AlphaMode::Zero => RingMap::zero(Arc::clone(&ring)),
        AlphaMode::Identity => RingMap::identity(),
    };
    let maps = OreMaps {
        sigma: RingMap::identity(),
        delta: RingMap::new("delta", octo_delta),
        alpha,
        sigma_inverse: Some(RingMap::identity()),
    };
    OreContext::new(ring, maps)
}

/// The generators `X` and `Y` of a Weyl context.
pub fn weyl_generators(ctx: &WeylContext) -> (WeylElement, WeylElement) {
    let level = ctx.ring().level;
    (
        OrePoly::monomial(ctx, CdPoly::one(level), 1),
        OrePoly::constant(ctx, CdPoly::y(level)),
    )
}

/// Which associator placement failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    Left,
    Middle,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NucleusReport {
    pub k: usize,
    pub samples: usize,
    /// `(placement, p, q)` rendered, for every nonzero associator.
    pub failures: Vec<(Placement, String, String)>,
}

impl NucleusReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `(X^k,p,q) = (p,X^k,q) = (p,q,X^k) = 0` on random pairs of
/// X-degree at most `degree`.
pub fn x_nucleus_check<G: Rng + ?Sized>(
    ctx: &WeylContext,
    k: usize,
    samples: usize,
    degree: usize,
    bound: &SampleBound,
    rng: &mut G,
) -> NucleusReport {
    let xk = OrePoly::x_power(ctx, k).expect("Weyl coefficients are unital");
    let assoc = |a: &WeylElement, b: &WeylElement, c: &WeylElement| &(a * b) * c - a * &(b * c);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let p = random_poly(ctx, rng, degree, bound);
        let q = random_poly(ctx, rng, degree, bound);
        for (placement, value) in [
            (Placement::Left, assoc(&xk, &p, &q)),
            (Placement::Middle, assoc(&p, &xk, &q)),
            (Placement::Right, assoc(&p, &q, &xk)),
        ] {
            if !value.is_zero() {
                failures.push((placement, p.to_string(), q.to_string()));
            }
        }
    }
    NucleusReport {
        k,
        samples,
        failures,
    }
}

/// Leading X-degree and coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData {
    pub xdeg: usize,
    pub lc: CdPoly,
}

pub fn leading_data(p: &WeylElement) -> Result<LeadingData, WeylError> {
    let (xdeg, lc) = p.leading()?;
    Ok(LeadingData {
        xdeg,
        lc: lc.clone(),
    })
}
