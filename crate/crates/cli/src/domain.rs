//! Evaluation domains for the expression grammar.

use homore::exactnum::Rational;
use homore::homring::{associativity_check, nucleus_membership, Algebra, AlgebraElement};
use homore::ore::{OreContext, OrePoly};
use homore::ring::{Opposite, Ring};
use homore::weyl::{CdPoly, CdPolyRing};

use crate::expr::Domain;

/// A structure-constant algebra; symbols are its basis names.
pub struct AlgebraDomain {
    alg: Algebra,
    associative: bool,
}

impl AlgebraDomain {
    pub fn new(alg: &Algebra) -> Self {
        AlgebraDomain {
            associative: associativity_check(alg).passed(),
            alg: alg.clone(),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }
}

impl Domain for AlgebraDomain {
    type Elem = AlgebraElement;

    fn symbol(&self, name: &str) -> Option<AlgebraElement> {
        self.alg.basis_index(name).map(|i| self.alg.basis(i))
    }

    fn embed(&self, r: &Rational) -> Result<AlgebraElement, String> {
        if r.is_zero() {
            return Ok(self.alg.zero_element());
        }
        let u = self
            .alg
            .one_index()
            .ok_or_else(|| format!("algebra `{}` has no unit for the scalar {r}", self.alg.name()))?;
        Ok(self.scale(&self.alg.basis(u), r))
    }

    fn scale(&self, e: &AlgebraElement, r: &Rational) -> AlgebraElement {
        let coords = e.coords().iter().map(|c| c * r).collect();
        self.alg.element(coords).expect("same dimension")
    }

    fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        Ring::add(&self.alg, a, b)
    }

    fn neg(&self, a: &AlgebraElement) -> AlgebraElement {
        Ring::neg(&self.alg, a)
    }

    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        Ring::mul(&self.alg, a, b)
    }

    fn is_associative(&self) -> bool {
        self.associative
    }

    fn is_nuclear(&self, e: &AlgebraElement) -> bool {
        nucleus_membership(&self.alg, e).is_ok_and(|f| f.full())
    }

    fn render(&self, e: &AlgebraElement) -> String {
        e.to_string()
    }
}

/// Coefficient rings whose elements can be named in expressions.
pub trait CoefficientRing: Ring {
    fn coefficient_symbol(&self, name: &str) -> Option<Self::Elem>;

    fn scalar(&self, r: &Rational) -> Self::Elem;

    /// Real coefficients associate with everything.
    fn is_real(&self, e: &Self::Elem) -> bool;

    fn is_associative(&self) -> bool;
}

impl CoefficientRing for CdPolyRing {
    fn coefficient_symbol(&self, name: &str) -> Option<CdPoly> {
        if name == "Y" {
            return Some(CdPoly::y(self.level));
        }
        let i: usize = name.strip_prefix('e')?.parse().ok()?;
        (i < 1 << self.level).then(|| CdPoly::constant(homore::exactnum::CdElement::basis(self.level, i)))
    }

    fn scalar(&self, r: &Rational) -> CdPoly {
        CdPoly::scalar(self.level, r.clone())
    }

    fn is_real(&self, e: &CdPoly) -> bool {
        e.is_real()
    }

    fn is_associative(&self) -> bool {
        self.level <= 2
    }
}

impl<R: CoefficientRing> CoefficientRing for Opposite<R> {
    fn coefficient_symbol(&self, name: &str) -> Option<R::Elem> {
        self.inner().coefficient_symbol(name)
    }

    fn scalar(&self, r: &Rational) -> R::Elem {
        self.inner().scalar(r)
    }

    fn is_real(&self, e: &R::Elem) -> bool {
        self.inner().is_real(e)
    }

    fn is_associative(&self) -> bool {
        self.inner().is_associative()
    }
}

/// An Ore extension; symbols are `X` and the coefficient ring's names.
pub struct OreDomain<R: Ring> {
    ctx: OreContext<R>,
}

impl<R: CoefficientRing> OreDomain<R> {
    pub fn new(ctx: &OreContext<R>) -> Self {
        OreDomain { ctx: ctx.clone() }
    }

    pub fn context(&self) -> &OreContext<R> {
        &self.ctx
    }
}

impl<R: CoefficientRing> Domain for OreDomain<R> {
    type Elem = OrePoly<R>;

    fn symbol(&self, name: &str) -> Option<OrePoly<R>> {
        if name == "X" {
            return OrePoly::x_power(&self.ctx, 1);
        }
        let c = self.ctx.ring().coefficient_symbol(name)?;
        Some(OrePoly::constant(&self.ctx, c))
    }

    fn embed(&self, r: &Rational) -> Result<OrePoly<R>, String> {
        Ok(OrePoly::constant(&self.ctx, self.ctx.ring().scalar(r)))
    }

    fn scale(&self, e: &OrePoly<R>, r: &Rational) -> OrePoly<R> {
        let ring = self.ctx.ring();
        let s = ring.scalar(r);
        e.map_coefficients(|c| ring.mul(&s, c))
    }

    fn add(&self, a: &OrePoly<R>, b: &OrePoly<R>) -> OrePoly<R> {
        a + b
    }

    fn neg(&self, a: &OrePoly<R>) -> OrePoly<R> {
        a.neg()
    }

    fn mul(&self, a: &OrePoly<R>, b: &OrePoly<R>) -> OrePoly<R> {
        a * b
    }

    fn is_associative(&self) -> bool {
        self.ctx.ring().is_associative() && self.ctx.alpha().kind() == homore::ring::MapKind::Identity
    }

    fn is_nuclear(&self, e: &OrePoly<R>) -> bool {
        let ring = self.ctx.ring();
        e.terms().all(|(_, c)| ring.is_real(c))
    }

    fn render(&self, e: &OrePoly<R>) -> String {
        e.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expression;
    use homore::homring::AlphaChoice;
    use homore::weyl::{build_weyl, AlphaMode};

    #[test]
    fn weyl_examples() {
        let d = OreDomain::new(&build_weyl(AlphaMode::Zero).unwrap());
        let p = parse_expression("X*Y - Y*X", &d).unwrap();
        assert_eq!(p.value.to_string(), "1*e0");
        let unit = parse_expression("X^0", &d).unwrap().value;
        assert_eq!(unit, OrePoly::one(d.context()).unwrap());
        let chain = parse_expression("e1*e2*e4", &d).unwrap();
        assert_eq!(chain.warnings.len(), 1);
        assert!(parse_expression("e1*Y*X*e2", &d).unwrap().warnings.is_empty());
        assert!(parse_expression("e8", &d).is_err());
    }

    #[test]
    fn octonion_associator_is_nonzero() {
        let d = AlgebraDomain::new(&Algebra::octonions(AlphaChoice::Identity));
        let v = parse_expression("(e1*e2)*e4 - e1*(e2*e4)", &d).unwrap();
        assert!(!v.value.is_zero());
        assert!(v.warnings.is_empty());
        assert_eq!(parse_expression("2 - e3", &d).unwrap().value.to_string(), "2*e0 - e3");
    }

    #[test]
    fn scalars_need_a_unit() {
        let d = AlgebraDomain::new(&Algebra::diagonal(&[Rational::one(), Rational::one()]));
        assert!(parse_expression("2*f0", &d).is_ok());
        assert!(parse_expression("1 + f0", &d).is_err());
    }
}
