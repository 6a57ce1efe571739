use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ring::{MapKind, Ring};

use super::{OreContext, OreError};

/// Polynomial degree; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInfinity, Degree::NegInfinity) => Ordering::Equal,
            (Degree::NegInfinity, _) => Ordering::Less,
            (_, Degree::NegInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// `Σ a_i X^i` in standard (coefficients on the left) form.
pub struct OrePoly<R: Ring> {
    ctx: OreContext<R>,
    terms: BTreeMap<usize, R::Elem>,
}

impl<R: Ring> Clone for OrePoly<R> {
    fn clone(&self) -> Self {
        OrePoly {
            ctx: self.ctx.clone(),
            terms: self.terms.clone(),
        }
    }
}

impl<R: Ring> PartialEq for OrePoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.terms == other.terms
    }
}

impl<R: Ring> fmt::Debug for OrePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrePoly[{self}]")
    }
}

/// Descending X-degree, each coefficient in parentheses, e.g.
/// `(e1 + 2*e3)*X^2 + (e7)`. A lone constant renders without parentheses.
impl<R: Ring> fmt::Display for OrePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.ctx.ring();
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&0) {
                return f.write_str(&ring.render(c));
            }
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&k, c)| {
                let coeff = format!("({})", ring.render(c));
                match k {
                    0 => coeff,
                    1 => format!("{coeff}*X"),
                    k => format!("{coeff}*X^{k}"),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<R: Ring> OrePoly<R> {
    /// Builds a polynomial, dropping zero coefficients and summing repeats.
    pub fn from_terms<I>(ctx: &OreContext<R>, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, R::Elem)>,
    {
        let mut p = OrePoly::zero(ctx);
        for (k, c) in terms {
            p.add_term(k, &c);
        }
        p
    }

    pub fn zero(ctx: &OreContext<R>) -> Self {
        OrePoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &OreContext<R>, a: R::Elem) -> Self {
        Self::monomial(ctx, a, 0)
    }

    pub fn monomial(ctx: &OreContext<R>, a: R::Elem, k: usize) -> Self {
        Self::from_terms(ctx, [(k, a)])
    }

    /// `1`, if the coefficient ring has a distinguished unit.
    pub fn one(ctx: &OreContext<R>) -> Option<Self> {
        ctx.ring().one().map(|u| Self::constant(ctx, u))
    }

    /// `1·X^k`.
    pub fn x_power(ctx: &OreContext<R>, k: usize) -> Option<Self> {
        ctx.ring().one().map(|u| Self::monomial(ctx, u, k))
    }

    pub fn context(&self) -> &OreContext<R> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::NegInfinity, |&d| Degree::Finite(d))
    }

    /// Leading degree and coefficient.
    pub fn leading(&self) -> Result<(usize, &R::Elem), OreError> {
        self.terms
            .iter()
            .next_back()
            .map(|(&k, c)| (k, c))
            .ok_or(OreError::ZeroPolynomial)
    }

    pub fn coefficient(&self, k: usize) -> R::Elem {
        self.terms
            .get(&k)
            .cloned()
            .unwrap_or_else(|| self.ctx.ring().zero())
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &R::Elem)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, k: usize, c: &R::Elem) {
        let ring = self.ctx.ring();
        let sum = match self.terms.get(&k) {
            Some(old) => ring.add(old, c),
            None => c.clone(),
        };
        if ring.is_zero(&sum) {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, sum);
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), OreError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(OreError::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, OreError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, OreError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let ring = self.ctx.ring();
        OrePoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(&k, c)| (k, ring.neg(c))).collect(),
        }
    }

    /// Bilinear extension of `aX^m · bX^n = Σ_i (a·π_i^m(b)) X^{i+n}`.
    pub fn try_mul(&self, other: &Self) -> Result<Self, OreError> {
        self.check_same(other)?;
        let ring = self.ctx.ring();
        let mut out = OrePoly::zero(&self.ctx);
        let Some(max_m) = self.degree().finite() else {
            return Ok(out);
        };
        let trivial = self.ctx.sigma().kind() == MapKind::Identity
            && self.ctx.delta().kind() == MapKind::Zero;
        for (&n, b) in &other.terms {
            if trivial {
                for (&m, a) in &self.terms {
                    out.add_term(m + n, &ring.mul(a, b));
                }
                continue;
            }
            let mut row = vec![b.clone()];
            for m in 0..=max_m {
                if m > 0 {
                    row = self.ctx.next_pi_row(&row);
                }
                if let Some(a) = self.terms.get(&m) {
                    for (i, pib) in row.iter().enumerate() {
                        if !ring.is_zero(pib) {
                            out.add_term(i + n, &ring.mul(a, pib));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `p·X^k`, which equals the shift `Σ a_i X^{i+k}`.
    pub fn shift(&self, k: usize) -> Self {
        OrePoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(&d, c)| (d + k, c.clone())).collect(),
        }
    }

    /// Homogeneous extension of α: `Σ α(a_i) X^i`.
    pub fn alpha_extend(&self) -> Self {
        self.map_coefficients(|c| self.ctx.alpha().apply(c))
    }

    pub fn map_coefficients<F: Fn(&R::Elem) -> R::Elem>(&self, f: F) -> Self {
        OrePoly::from_terms(&self.ctx, self.terms.iter().map(|(&k, c)| (k, f(c))))
    }

    /// Multiplies every coefficient on the right by `c`, i.e. `Σ (a_i·c) X^i`.
    pub fn scale_right(&self, c: &R::Elem) -> Self {
        let ring = self.ctx.ring();
        self.map_coefficients(|a| ring.mul(a, c))
    }

    /// Same coefficients, reinterpreted in another context over the same ring.
    pub fn with_context(&self, ctx: &OreContext<R>) -> Self {
        OrePoly::from_terms(ctx, self.terms.iter().map(|(&k, c)| (k, c.clone())))
    }
}

macro_rules! ref_op {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<R: Ring> $trait for &OrePoly<R> {
            type Output = OrePoly<R>;

            /// Panics on context mismatch; use the `try_` form to handle it.
            fn $method(self, rhs: &OrePoly<R>) -> OrePoly<R> {
                self.$try(rhs).expect("Ore context mismatch")
            }
        }

        impl<R: Ring> $trait for OrePoly<R> {
            type Output = OrePoly<R>;

            fn $method(self, rhs: OrePoly<R>) -> OrePoly<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

ref_op!(Add, add, try_add);
ref_op!(Sub, sub, try_sub);
ref_op!(Mul, mul, try_mul);

impl<R: Ring> Neg for &OrePoly<R> {
    type Output = OrePoly<R>;

    fn neg(self) -> OrePoly<R> {
        OrePoly::neg(self)
    }
}

impl<R: Ring> Neg for OrePoly<R> {
    type Output = OrePoly<R>;

    fn neg(self) -> OrePoly<R> {
        OrePoly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::instances::*;
    use super::super::{OreContext, OreMaps};
    use super::*;
    use crate::exactnum::Rational;
    use crate::homring::{alg_mul, Algebra};
    use crate::ring::RingMap;

    #[test]
    fn degree_ordering() {
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert!(Degree::Finite(2) > Degree::Finite(1));
    }

    #[test]
    fn x_times_b() {
        let ctx = twisted_quaternions();
        let ring = ctx.ring().clone();
        let b = ring.element(vec![1, 2, -1, 3].into_iter().map(Rational::from).collect()).unwrap();
        let x = OrePoly::x_power(&ctx, 1).unwrap();
        let xb = &x * &OrePoly::constant(&ctx, b.clone());
        let expected = OrePoly::monomial(&ctx, ctx.sigma().apply(&b), 1)
            + OrePoly::constant(&ctx, ctx.delta().apply(&b));
        assert_eq!(xb, expected);
    }

    #[test]
    fn unit_and_shift_laws() {
        let ctx = twisted_quaternions();
        let ring = ctx.ring().clone();
        let one = OrePoly::one(&ctx).unwrap();
        let x = OrePoly::x_power(&ctx, 1).unwrap();
        let p = OrePoly::from_terms(&ctx, [(0, ring.basis(1)), (2, ring.basis(3)), (3, ring.basis(2))]);
        assert_eq!(&p * &one, p);
        assert_eq!(&one * &p, p);
        assert_eq!(&p * &x, p.shift(1));
        assert_eq!(p.degree(), Degree::Finite(3));
        assert_eq!(OrePoly::zero(&ctx).degree(), Degree::NegInfinity);
    }

    #[test]
    fn additive_structure() {
        let ctx = quantum_plane();
        let ring = ctx.ring().clone();
        let p = OrePoly::from_terms(&ctx, [(2, ring.basis(1)), (0, ring.basis(0))]);
        assert_eq!(&p + &OrePoly::zero(&ctx), p);
        assert!((&p + &(-&p)).is_zero());
        let q = OrePoly::monomial(&ctx, ring.basis(2), 2);
        assert_eq!((&p + &q).coefficient(2), ring.basis(1).try_add(&ring.basis(2)).unwrap());
    }

    #[test]
    fn alpha_extension() {
        let ctx = quantum_plane();
        let ring = ctx.ring().clone();
        let p = OrePoly::from_terms(&ctx, [(2, ring.basis(1)), (1, ring.basis(3))]);
        let a = p.alpha_extend();
        assert_eq!(a.coefficient(2), ring.basis(1).scale(&Rational::from(2)));
        assert_eq!(a.coefficient(1), ring.basis(3).scale(&Rational::from(8)));
    }

    #[test]
    fn context_mismatch() {
        let (c1, c2) = (quantum_plane(), quantum_plane());
        let p = OrePoly::constant(&c1, c1.ring().basis(1));
        let q = OrePoly::constant(&c2, c2.ring().basis(1));
        assert_eq!(p.try_mul(&q), Err(OreError::ContextMismatch));
        assert_eq!(p.try_add(&q), Err(OreError::ContextMismatch));
    }

    #[test]
    fn degree_is_additive_for_injective_sigma() {
        let ctx = twisted_quaternions();
        let ring = ctx.ring().clone();
        let p = OrePoly::from_terms(&ctx, [(3, ring.basis(1)), (1, ring.basis(2))]);
        let q = OrePoly::from_terms(&ctx, [(2, ring.basis(3)), (0, ring.basis(0))]);
        assert_eq!((&p * &q).degree(), Degree::Finite(5));
    }

    #[test]
    fn classical_operator_oracle() {
        // ℚ[t]/(t^4) with σ = id, δ = 0 is commutative: p·q = q·p.
        let base = Arc::new(Algebra::truncated_polynomial(4));
        let maps = OreMaps {
            sigma: RingMap::identity(),
            delta: RingMap::zero(Arc::clone(&base)),
            alpha: RingMap::identity(),
            sigma_inverse: Some(RingMap::identity()),
        };
        let ctx = OreContext::new(Arc::clone(&base), maps).unwrap();
        let p = OrePoly::from_terms(&ctx, [(1, base.basis(1)), (0, base.basis(2))]);
        let q = OrePoly::from_terms(&ctx, [(2, base.basis(1)), (1, base.basis(0))]);
        assert_eq!(&p * &q, &q * &p);
        assert_eq!((&p * &q).coefficient(3), alg_mul(&base.basis(1), &base.basis(1)).unwrap());
    }

    #[test]
    fn rendering() {
        let ctx = quantum_plane();
        let ring = ctx.ring().clone();
        let p = OrePoly::from_terms(&ctx, [(2, ring.basis(1)), (0, ring.basis(0).scale(&Rational::from(3)))]);
        assert_eq!(p.to_string(), "(t)*X^2 + (3*one)");
        assert_eq!(OrePoly::constant(&ctx, ring.basis(0)).to_string(), "1*one");
        assert_eq!(OrePoly::zero(&ctx).to_string(), "0");
    }
}
