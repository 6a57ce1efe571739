//! Coefficient rings for Ore extensions and the additive maps (σ, δ, α) that
//! act on them.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::exactnum::{CdElement, Rational};
use crate::render::join_terms;

/// Bounds for random element generation.
#[derive(Clone, Debug)]
pub struct SampleBound {
    /// Largest absolute numerator of a random rational.
    pub height: i64,
    /// Largest denominator of a random rational.
    pub denominator: i64,
    /// Largest polynomial degree (for polynomial coefficient rings).
    pub degree: usize,
    /// Probability that a given coordinate is left at zero.
    pub sparsity: f64,
}

impl Default for SampleBound {
    fn default() -> Self {
        SampleBound {
            height: 5,
            denominator: 3,
            degree: 3,
            sparsity: 0.5,
        }
    }
}

impl SampleBound {
    pub fn with_degree(mut self, degree: usize) -> Self {
        self.degree = degree;
        self
    }

    pub fn rational<G: Rng + ?Sized>(&self, rng: &mut G) -> Rational {
        let n = rng.gen_range(-self.height..=self.height);
        let d = rng.gen_range(1..=self.denominator.max(1));
        Rational::new(n, d).expect("denominator is positive")
    }

    pub fn nonzero_rational<G: Rng + ?Sized>(&self, rng: &mut G) -> Rational {
        loop {
            let r = self.rational(rng);
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// Random coordinate vector, respecting `sparsity`.
    pub fn vector<G: Rng + ?Sized>(&self, rng: &mut G, len: usize) -> Vec<Rational> {
        (0..len)
            .map(|_| {
                if rng.gen_bool(self.sparsity.clamp(0.0, 1.0)) {
                    Rational::zero()
                } else {
                    self.rational(rng)
                }
            })
            .collect()
    }

    pub fn cd_element<G: Rng + ?Sized>(&self, rng: &mut G, level: u8) -> CdElement {
        CdElement::new(level, self.vector(rng, 1 << level)).expect("valid level")
    }

    pub fn nonzero_cd_element<G: Rng + ?Sized>(&self, rng: &mut G, level: u8) -> CdElement {
        loop {
            let x = self.cd_element(rng, level);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

/// A (not necessarily associative, not necessarily unital) ring whose
/// elements can be added, multiplied, compared and rendered exactly.
pub trait Ring: Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;

    /// Distinguished element `1`. For Yau twists this is the base algebra's
    /// unit, which is only a weak unit of the twisted product.
    fn one(&self) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Canonical text form.
    fn render(&self, a: &Self::Elem) -> String;

    /// A finite additive spanning set (or, for infinite-dimensional rings, a
    /// spanning set of a bounded-degree truncation) used to validate maps.
    fn spanning_set(&self) -> Vec<Self::Elem>;

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, bound: &SampleBound) -> Self::Elem;

    /// `(ab)c - a(bc)`.
    fn associator(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        let left = self.mul(&self.mul(a, b), c);
        let right = self.mul(a, &self.mul(b, c));
        self.sub(&left, &right)
    }

    /// `Σ items`.
    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// The Cayley–Dickson algebra of a fixed level as a coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CdRing {
    pub level: u8,
}

impl CdRing {
    pub fn octonions() -> Self {
        CdRing { level: 3 }
    }
}

impl Ring for CdRing {
    type Elem = CdElement;

    fn zero(&self) -> CdElement {
        CdElement::zero(self.level)
    }

    fn one(&self) -> Option<CdElement> {
        Some(CdElement::one(self.level))
    }

    fn is_zero(&self, a: &CdElement) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &CdElement, b: &CdElement) -> CdElement {
        a + b
    }

    fn neg(&self, a: &CdElement) -> CdElement {
        -a
    }

    fn sub(&self, a: &CdElement, b: &CdElement) -> CdElement {
        a - b
    }

    fn mul(&self, a: &CdElement, b: &CdElement) -> CdElement {
        a * b
    }

    fn render(&self, a: &CdElement) -> String {
        join_terms(a.render_terms())
    }

    fn spanning_set(&self) -> Vec<CdElement> {
        (0..1usize << self.level)
            .map(|i| CdElement::basis(self.level, i))
            .collect()
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, bound: &SampleBound) -> CdElement {
        bound.cd_element(rng, self.level)
    }
}

/// The opposite ring: same elements, product `a ∘ b := b · a`.
#[derive(Clone, Debug)]
pub struct Opposite<R> {
    inner: Arc<R>,
}

impl<R: Ring> Opposite<R> {
    pub fn new(inner: Arc<R>) -> Self {
        Opposite { inner }
    }

    pub fn inner(&self) -> &Arc<R> {
        &self.inner
    }
}

impl<R: Ring> Ring for Opposite<R> {
    type Elem = R::Elem;

    fn zero(&self) -> R::Elem {
        self.inner.zero()
    }

    fn one(&self) -> Option<R::Elem> {
        self.inner.one()
    }

    fn is_zero(&self, a: &R::Elem) -> bool {
        self.inner.is_zero(a)
    }

    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.inner.add(a, b)
    }

    fn neg(&self, a: &R::Elem) -> R::Elem {
        self.inner.neg(a)
    }

    fn sub(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.inner.sub(a, b)
    }

    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.inner.mul(b, a)
    }

    fn render(&self, a: &R::Elem) -> String {
        self.inner.render(a)
    }

    fn spanning_set(&self) -> Vec<R::Elem> {
        self.inner.spanning_set()
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, bound: &SampleBound) -> R::Elem {
        self.inner.sample(rng, bound)
    }
}

/// Structural tag of a [`RingMap`], used for fast paths and for skipping
/// checks that are vacuous for the identity or zero map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Identity,
    Zero,
    General,
}

type MapFn<E> = dyn Fn(&E) -> E + Send + Sync;

/// An additive map on a ring's elements, given as a callable.
pub struct RingMap<E> {
    f: Arc<MapFn<E>>,
    kind: MapKind,
    label: String,
}

impl<E> Clone for RingMap<E> {
    fn clone(&self) -> Self {
        RingMap {
            f: Arc::clone(&self.f),
            kind: self.kind,
            label: self.label.clone(),
        }
    }
}

impl<E> fmt::Debug for RingMap<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingMap({})", self.label)
    }
}

impl<E: Clone + Send + Sync + 'static> RingMap<E> {
    pub fn new<F>(label: impl Into<String>, f: F) -> Self
    where
        F: Fn(&E) -> E + Send + Sync + 'static,
    {
        RingMap {
            f: Arc::new(f),
            kind: MapKind::General,
            label: label.into(),
        }
    }

    pub fn identity() -> Self {
        RingMap {
            f: Arc::new(|a: &E| a.clone()),
            kind: MapKind::Identity,
            label: "id".into(),
        }
    }

    pub fn zero<R: Ring<Elem = E>>(ring: Arc<R>) -> Self {
        RingMap {
            f: Arc::new(move |_: &E| ring.zero()),
            kind: MapKind::Zero,
            label: "0".into(),
        }
    }

    pub fn apply(&self, a: &E) -> E {
        (self.f)(a)
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &RingMap<E>) -> RingMap<E> {
        match (self.kind, inner.kind) {
            (MapKind::Identity, _) => return inner.clone(),
            (_, MapKind::Identity) => return self.clone(),
            (MapKind::Zero, _) => return self.clone(),
            _ => {}
        }
        let (outer_f, inner_f) = (Arc::clone(&self.f), Arc::clone(&inner.f));
        RingMap {
            f: Arc::new(move |a: &E| outer_f(&inner_f(a))),
            kind: MapKind::General,
            label: format!("{}∘{}", self.label, inner.label),
        }
    }

    pub fn plus<R: Ring<Elem = E>>(&self, other: &RingMap<E>, ring: Arc<R>) -> RingMap<E> {
        if self.kind == MapKind::Zero {
            return other.clone();
        }
        if other.kind == MapKind::Zero {
            return self.clone();
        }
        let (f, g) = (Arc::clone(&self.f), Arc::clone(&other.f));
        RingMap {
            f: Arc::new(move |a: &E| ring.add(&f(a), &g(a))),
            kind: MapKind::General,
            label: format!("{} + {}", self.label, other.label),
        }
    }

    pub fn negated<R: Ring<Elem = E>>(&self, ring: Arc<R>) -> RingMap<E> {
        if self.kind == MapKind::Zero {
            return self.clone();
        }
        let f = Arc::clone(&self.f);
        RingMap {
            f: Arc::new(move |a: &E| ring.neg(&f(a))),
            kind: MapKind::General,
            label: format!("-{}", self.label),
        }
    }
}
