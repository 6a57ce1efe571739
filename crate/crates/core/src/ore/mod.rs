//! Ore extensions `R[X;σ,δ]` over (hom-associative, possibly non-associative)
//! coefficient rings.
//!
//! Multiplication follows the monomial rule `aX^m · bX^n = Σ (a·π_i^m(b))X^{i+n}`
//! where `π_i^m` is the sum of all compositions of `i` copies of σ and `m−i`
//! copies of δ.

mod check;
mod form;
mod pi;
mod poly;

pub use check::{check_ore_hom_associativity, random_poly, HomAssocReport};
pub use form::{convert_form, opposite_iso, FormDirection};
pub use pi::{render_words, Letter, PI_WORD_LIMIT};
pub use poly::{Degree, OrePoly};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::ring::{MapKind, Opposite, Ring, RingMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OreError {
    #[error("context validation failed: {0}")]
    Validation(String),
    #[error("polynomials belong to different Ore contexts")]
    ContextMismatch,
    #[error("operation needs σ⁻¹, which this context does not provide")]
    MissingSigmaInverse,
    #[error("word enumeration is limited to m ≤ {limit}, got m = {m}")]
    WordLimit { m: usize, limit: usize },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
}

/// σ, δ, α and optionally σ⁻¹, as maps on the coefficient ring.
pub struct OreMaps<E> {
    pub sigma: RingMap<E>,
    pub delta: RingMap<E>,
    pub alpha: RingMap<E>,
    pub sigma_inverse: Option<RingMap<E>>,
}

impl<E> Clone for OreMaps<E> {
    fn clone(&self) -> Self {
        OreMaps {
            sigma: self.sigma.clone(),
            delta: self.delta.clone(),
            alpha: self.alpha.clone(),
            sigma_inverse: self.sigma_inverse.clone(),
        }
    }
}

struct OreInner<R: Ring> {
    ring: Arc<R>,
    maps: OreMaps<R::Elem>,
}

/// A validated Ore extension. Cloning shares the context; polynomials from
/// different contexts never mix, even when the contexts were built alike.
pub struct OreContext<R: Ring> {
    inner: Arc<OreInner<R>>,
}

impl<R: Ring> Clone for OreContext<R> {
    fn clone(&self) -> Self {
        OreContext {
            inner: Arc::clone(&self.inner),
        }
    }
}

impl<R: Ring> PartialEq for OreContext<R> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }
}

impl<R: Ring> fmt::Debug for OreContext<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.inner.maps;
        write!(
            f,
            "OreContext(σ={}, δ={}, α={})",
            m.sigma.label(),
            m.delta.label(),
            m.alpha.label()
        )
    }
}

impl<R: Ring> OreContext<R> {
    /// Builds a context after checking, on the ring's spanning set, that σ is
    /// a unital endomorphism, δ a σ-derivation with δ(1) = 0, that α commutes
    /// with σ and δ, and that σ⁻¹ (if given) inverts σ.
    pub fn new(ring: Arc<R>, maps: OreMaps<R::Elem>) -> Result<Self, OreError> {
        validate(&*ring, &maps)?;
        Ok(Self::new_unchecked(ring, maps))
    }

    /// Skips validation; products may then violate the extension's laws.
    pub fn new_unchecked(ring: Arc<R>, maps: OreMaps<R::Elem>) -> Self {
        OreContext {
            inner: Arc::new(OreInner { ring, maps }),
        }
    }

    pub fn ring(&self) -> &Arc<R> {
        &self.inner.ring
    }

    pub fn sigma(&self) -> &RingMap<R::Elem> {
        &self.inner.maps.sigma
    }

    pub fn delta(&self) -> &RingMap<R::Elem> {
        &self.inner.maps.delta
    }

    pub fn alpha(&self) -> &RingMap<R::Elem> {
        &self.inner.maps.alpha
    }

    pub fn sigma_inverse(&self) -> Option<&RingMap<R::Elem>> {
        self.inner.maps.sigma_inverse.as_ref()
    }

    pub fn maps(&self) -> &OreMaps<R::Elem> {
        &self.inner.maps
    }

    /// `R^op[X; σ⁻¹, −δ∘σ⁻¹]`, with the same α and σ as its inverse.
    pub fn opposite(&self) -> Result<OreContext<Opposite<R>>, OreError> {
        let sigma_inv = self.sigma_inverse().ok_or(OreError::MissingSigmaInverse)?;
        let op = Arc::new(Opposite::new(Arc::clone(self.ring())));
        let delta = self
            .delta()
            .compose(sigma_inv)
            .negated(Arc::clone(&op))
            .with_label(format!("-{}∘{}", self.delta().label(), sigma_inv.label()));
        let delta = if self.delta().kind() == MapKind::Zero {
            self.delta().clone()
        } else {
            delta
        };
        let maps = OreMaps {
            sigma: sigma_inv.clone(),
            delta,
            alpha: self.alpha().clone(),
            sigma_inverse: Some(self.sigma().clone()),
        };
        OreContext::new(op, maps)
    }
}

fn validate<R: Ring>(ring: &R, maps: &OreMaps<R::Elem>) -> Result<(), OreError> {
    let fail = |msg: String| Err(OreError::Validation(msg));
    let show = |a: &R::Elem| ring.render(a);
    let span = ring.spanning_set();
    let (sigma, delta, alpha) = (&maps.sigma, &maps.delta, &maps.alpha);
    if let Some(one) = ring.one() {
        if sigma.apply(&one) != one {
            return fail("σ(1) ≠ 1".into());
        }
        if !ring.is_zero(&delta.apply(&one)) {
            return fail("δ(1) ≠ 0".into());
        }
    }
    for a in &span {
        for b in &span {
            let ab = ring.mul(a, b);
            if sigma.kind() != MapKind::Identity
                && sigma.apply(&ab) != ring.mul(&sigma.apply(a), &sigma.apply(b))
            {
                return fail(format!("σ is not multiplicative at ({}, {})", show(a), show(b)));
            }
            if delta.kind() != MapKind::Zero {
                let rhs = ring.add(
                    &ring.mul(&sigma.apply(a), &delta.apply(b)),
                    &ring.mul(&delta.apply(a), b),
                );
                if delta.apply(&ab) != rhs {
                    return fail(format!(
                        "δ is not a σ-derivation at ({}, {})",
                        show(a),
                        show(b)
                    ));
                }
            }
        }
    }
    for a in &span {
        if alpha.kind() == MapKind::General {
            if alpha.apply(&sigma.apply(a)) != sigma.apply(&alpha.apply(a)) {
                return fail(format!("α and σ do not commute at {}", show(a)));
            }
            if alpha.apply(&delta.apply(a)) != delta.apply(&alpha.apply(a)) {
                return fail(format!("α and δ do not commute at {}", show(a)));
            }
        }
        if let Some(inv) = &maps.sigma_inverse {
            if sigma.apply(&inv.apply(a)) != *a || inv.apply(&sigma.apply(a)) != *a {
                return fail(format!("σ⁻¹ does not invert σ at {}", show(a)));
            }
        }
    }
    Ok(())
}

pub mod instances {
    //! Small concrete extensions.

    use super::*;
    use crate::exactnum::Rational;
    use crate::homring::{alg_mul, scaling_endomorphism, yau_twist, Algebra, AlgebraElement, AlphaChoice};

    /// Yau twist of `ℚ[t]/(t⁴)` along `t ↦ 2t`, with σ = α and δ = 0.
    pub fn quantum_plane() -> OreContext<Algebra> {
        let base = Algebra::truncated_polynomial(4);
        let endo = scaling_endomorphism(4, &Rational::from(2));
        let tw = yau_twist(&base, &endo).expect("t ↦ 2t is an endomorphism");
        let inv = scaling_endomorphism(4, &Rational::new(1, 2).expect("nonzero denominator"));
        let sigma = tw.linear_map("sigma", endo);
        let maps = OreMaps {
            sigma: sigma.clone(),
            delta: RingMap::zero(Arc::new(tw.clone())),
            alpha: sigma,
            sigma_inverse: Some(tw.linear_map("sigma⁻¹", inv)),
        };
        OreContext::new(Arc::new(tw), maps).expect("valid by construction")
    }

    fn mul(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        alg_mul(x, y).expect("same algebra")
    }

    /// Conjugation `x ↦ u·x·u⁻¹` by `u = 1 + e1` on ℍ, and its inverse.
    fn quaternion_conjugation(h: &Algebra) -> (RingMap<AlgebraElement>, RingMap<AlgebraElement>) {
        let u = &h.basis(0) + &h.basis(1);
        let half = Rational::new(1, 2).expect("nonzero denominator");
        let u_inv = (&h.basis(0) - &h.basis(1)).scale(&half);
        let (u1, ui1) = (u.clone(), u_inv.clone());
        let sigma = RingMap::new("sigma", move |x: &AlgebraElement| mul(&mul(&u1, x), &ui1));
        let sigma_inv = RingMap::new("sigma⁻¹", move |x: &AlgebraElement| mul(&mul(&u_inv, x), &u));
        (sigma, sigma_inv)
    }

    /// `ℍ[X; σ, 0]` with σ conjugation by `1 + e1` and α = id.
    pub fn twisted_quaternions() -> OreContext<Algebra> {
        let h = Algebra::quaternions(AlphaChoice::Identity);
        let (sigma, sigma_inv) = quaternion_conjugation(&h);
        let maps = OreMaps {
            sigma,
            delta: RingMap::zero(Arc::new(h.clone())),
            alpha: RingMap::identity(),
            sigma_inverse: Some(sigma_inv),
        };
        OreContext::new(Arc::new(h), maps).expect("valid by construction")
    }

    /// `ℍ[X; σ, δ]` with σ as in [`twisted_quaternions`] and the inner
    /// σ-derivation `δ(a) = e2·a − σ(a)·e2`.
    pub fn inner_derivation_quaternions() -> OreContext<Algebra> {
        let h = Algebra::quaternions(AlphaChoice::Identity);
        let (sigma, sigma_inv) = quaternion_conjugation(&h);
        let (s, q) = (sigma.clone(), h.basis(2));
        let delta = RingMap::new("delta", move |a: &AlgebraElement| &mul(&q, a) - &mul(&s.apply(a), &q));
        let maps = OreMaps {
            sigma,
            delta,
            alpha: RingMap::identity(),
            sigma_inverse: Some(sigma_inv),
        };
        OreContext::new(Arc::new(h), maps).expect("valid by construction")
    }
}
