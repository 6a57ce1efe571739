use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::exactnum::{scaled_symbol, CdElement, Rational};
use crate::render::{join_terms, power, Term};
use crate::ring::{Ring, SampleBound};

/// Polynomial in a central variable `Y` with Cayley–Dickson coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct CdPoly {
    level: u8,
    terms: BTreeMap<usize, CdElement>,
}

/// Octonion polynomials `𝕆[Y]`.
pub type OctoPoly = CdPoly;

impl CdPoly {
    pub fn zero(level: u8) -> Self {
        CdPoly {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: CdElement) -> Self {
        Self::monomial(c, 0)
    }

    pub fn scalar(level: u8, r: Rational) -> Self {
        Self::constant(CdElement::scalar(level, r))
    }

    pub fn one(level: u8) -> Self {
        Self::constant(CdElement::one(level))
    }

    /// `c·Y^k`.
    pub fn monomial(c: CdElement, k: usize) -> Self {
        let mut p = Self::zero(c.level());
        if !c.is_zero() {
            p.terms.insert(k, c);
        }
        p
    }

    pub fn y(level: u8) -> Self {
        Self::monomial(CdElement::one(level), 1)
    }

    /// Panics if a coefficient has the wrong level.
    pub fn from_terms<I: IntoIterator<Item = (usize, CdElement)>>(level: u8, terms: I) -> Self {
        let mut p = Self::zero(level);
        for (k, c) in terms {
            assert_eq!(c.level(), level, "coefficient level mismatch");
            p.add_term(k, &c);
        }
        p
    }

    fn add_term(&mut self, k: usize, c: &CdElement) {
        let sum = match self.terms.get(&k) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, sum);
        }
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// Highest Y-power and its coefficient.
    pub fn leading(&self) -> Option<(usize, &CdElement)> {
        self.terms.iter().next_back().map(|(&k, c)| (k, c))
    }

    pub fn coefficient(&self, k: usize) -> CdElement {
        self.terms
            .get(&k)
            .cloned()
            .unwrap_or_else(|| CdElement::zero(self.level))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &CdElement)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// `Some((k, c))` when the polynomial is a single term `c·Y^k`.
    pub fn as_monomial(&self) -> Option<(usize, &CdElement)> {
        if self.terms.len() == 1 {
            self.leading()
        } else {
            None
        }
    }

    /// Whether every coefficient is a rational multiple of `e0`.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(CdElement::is_scalar)
    }

    pub fn add(&self, other: &CdPoly) -> CdPoly {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn neg(&self) -> CdPoly {
        CdPoly {
            level: self.level,
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &CdPoly) -> CdPoly {
        self.add(&other.neg())
    }

    /// `Σ (a_i·b_j) Y^{i+j}`; `Y` is central.
    pub fn mul(&self, other: &CdPoly) -> CdPoly {
        assert_eq!(self.level, other.level, "coefficient level mismatch");
        let mut out = CdPoly::zero(self.level);
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> CdPoly {
        CdPoly::from_terms(self.level, self.terms.iter().map(|(&k, c)| (k, c.scale(r))))
    }

    /// Formal derivative `d/dY`.
    pub fn derivative(&self) -> CdPoly {
        CdPoly::from_terms(
            self.level,
            self.terms
                .iter()
                .filter(|(&k, _)| k > 0)
                .map(|(&k, c)| (k - 1, c.scale(&Rational::from(k)))),
        )
    }

    pub(crate) fn render_terms(&self) -> Vec<Term> {
        let mut out = Vec::new();
        for (&k, c) in self.terms.iter().rev() {
            let y = power("Y", k);
            for (i, x) in c.coords().iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let mut body = scaled_symbol(&x.abs(), &format!("e{i}"), i == 0);
                if !y.is_empty() {
                    body.push('*');
                    body.push_str(&y);
                }
                out.push(Term {
                    negative: x.is_negative(),
                    body,
                });
            }
        }
        out
    }
}

/// Descending Y-degree, then basis order: `2*e3*Y^2 + e1*Y - 1/2*e0`.
impl fmt::Display for CdPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(self.render_terms()))
    }
}

impl fmt::Debug for CdPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CdPoly{}[{self}]", self.level)
    }
}

/// `δ(aY^m) = m·a·Y^{m−1}`.
pub fn octo_delta(p: &OctoPoly) -> OctoPoly {
    p.derivative()
}

/// `CD_level[Y]` as a coefficient ring. Maps on it are validated on the
/// monomials `e_i·Y^k` with `k ≤ validation_degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CdPolyRing {
    pub level: u8,
    pub validation_degree: usize,
}

impl CdPolyRing {
    pub const DEFAULT_VALIDATION_DEGREE: usize = 8;

    pub fn new(level: u8) -> Self {
        CdPolyRing {
            level,
            validation_degree: Self::DEFAULT_VALIDATION_DEGREE,
        }
    }

    pub fn octonions() -> Self {
        Self::new(3)
    }
}

impl Ring for CdPolyRing {
    type Elem = CdPoly;

    fn zero(&self) -> CdPoly {
        CdPoly::zero(self.level)
    }

    fn one(&self) -> Option<CdPoly> {
        Some(CdPoly::one(self.level))
    }

    fn is_zero(&self, a: &CdPoly) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &CdPoly, b: &CdPoly) -> CdPoly {
        a.add(b)
    }

    fn neg(&self, a: &CdPoly) -> CdPoly {
        a.neg()
    }

    fn sub(&self, a: &CdPoly, b: &CdPoly) -> CdPoly {
        a.sub(b)
    }

    fn mul(&self, a: &CdPoly, b: &CdPoly) -> CdPoly {
        a.mul(b)
    }

    fn render(&self, a: &CdPoly) -> String {
        a.to_string()
    }

    fn spanning_set(&self) -> Vec<CdPoly> {
        let dim = 1usize << self.level;
        (0..=self.validation_degree)
            .flat_map(|k| (0..dim).map(move |i| (k, i)))
            .map(|(k, i)| CdPoly::monomial(CdElement::basis(self.level, i), k))
            .collect()
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, bound: &SampleBound) -> CdPoly {
        CdPoly::from_terms(
            self.level,
            (0..=bound.degree).map(|k| (k, bound.cd_element(rng, self.level))),
        )
    }
}
