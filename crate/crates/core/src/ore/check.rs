use rand::Rng;

use crate::ring::{Ring, SampleBound};

use super::{OreContext, OrePoly};

/// Sampled verification of `α(p)·(q·r) = (p·q)·α(r)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomAssocReport {
    pub samples: usize,
    /// Rendered `(p, q, r)` for each failing triple.
    pub failures: Vec<[String; 3]>,
}

impl HomAssocReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Random polynomial of X-degree at most `degree`.
pub fn random_poly<R: Ring, G: Rng + ?Sized>(
    ctx: &OreContext<R>,
    rng: &mut G,
    degree: usize,
    bound: &SampleBound,
) -> OrePoly<R> {
    let ring = ctx.ring();
    OrePoly::from_terms(ctx, (0..=degree).map(|k| (k, ring.sample(rng, bound))))
}

pub fn check_ore_hom_associativity<R: Ring, G: Rng + ?Sized>(
    ctx: &OreContext<R>,
    samples: usize,
    degree: usize,
    bound: &SampleBound,
    rng: &mut G,
) -> HomAssocReport {
    let mut report = HomAssocReport {
        samples,
        failures: Vec::new(),
    };
    for _ in 0..samples {
        let p = random_poly(ctx, rng, degree, bound);
        let q = random_poly(ctx, rng, degree, bound);
        let r = random_poly(ctx, rng, degree, bound);
        let lhs = &p.alpha_extend() * &(&q * &r);
        let rhs = &(&p * &q) * &r.alpha_extend();
        if lhs != rhs {
            report.failures.push([p.to_string(), q.to_string(), r.to_string()]);
        }
    }
    report
}
