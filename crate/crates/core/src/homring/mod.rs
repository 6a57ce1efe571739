//! Finite-dimensional algebras over the rationals given by structure
//! constants together with a linear twisting map α.
//!
//! An [`Algebra`] is a cheap-to-clone handle. Elements carry their algebra so
//! that mixing elements of different algebras is reported instead of silently
//! producing garbage.

mod builtin;
mod file;

pub use builtin::{scaling_endomorphism, AlphaChoice};
pub use file::{parse_algebra, render_algebra};

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::exactnum::{scaled_symbol, Rational};
use crate::linalg::{Matrix, SubspaceBasis};
use crate::render::{join_terms, Term};
use crate::ring::{Ring, RingMap, SampleBound};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("declared unit e{index} fails the unit law at basis element {witness}")]
    UnitLaw { index: usize, witness: usize },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("algebra `{0}` is not associative")]
    NotAssociative(String),
    #[error("matrix is not a unital algebra endomorphism: {0}")]
    NotEndomorphism(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Plain-data description of an algebra, as read from an algebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub name: String,
    pub dim: usize,
    pub basis_names: Vec<String>,
    /// `structure_constants[i][j][k]`: coefficient of `e_k` in `e_i e_j`.
    pub structure_constants: Vec<Vec<Vec<Rational>>>,
    /// Column `j` holds `α(e_j)`.
    pub alpha_matrix: Matrix,
    pub unital: Option<usize>,
}

struct AlgebraData {
    spec: AlgebraSpec,
    /// Sparse products: `table[i * dim + j]` lists `(k, c)` with `c ≠ 0`.
    table: Vec<Vec<(usize, Rational)>>,
    /// Distinguished `1` that is not a two-sided unit (Yau twists keep the
    /// base unit here).
    weak_unit: Option<usize>,
}

/// A loaded, validated algebra. Cloning shares the underlying data.
#[derive(Clone)]
pub struct Algebra(Arc<AlgebraData>);

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {})", self.name(), self.dim())
    }
}

/// Validates a spec and builds the algebra. Hom-associativity is not
/// required; see [`hom_associativity_check`].
pub fn load_algebra(spec: AlgebraSpec) -> Result<Algebra, AlgebraError> {
    Algebra::load(spec, None)
}

impl Algebra {
    fn load(spec: AlgebraSpec, weak_unit: Option<usize>) -> Result<Algebra, AlgebraError> {
        let d = spec.dim;
        if d == 0 {
            return Err(AlgebraError::Dimension("dimension must be positive".into()));
        }
        if spec.basis_names.len() != d {
            return Err(AlgebraError::Dimension(format!(
                "{} basis names for dimension {d}",
                spec.basis_names.len()
            )));
        }
        let shape_ok = spec.structure_constants.len() == d
            && spec
                .structure_constants
                .iter()
                .all(|plane| plane.len() == d && plane.iter().all(|row| row.len() == d));
        if !shape_ok {
            return Err(AlgebraError::Dimension(format!(
                "structure constants must be {d}x{d}x{d}"
            )));
        }
        if spec.alpha_matrix.rows() != d || spec.alpha_matrix.cols() != d {
            return Err(AlgebraError::Dimension(format!("alpha matrix must be {d}x{d}")));
        }
        let table = (0..d * d)
            .map(|idx| {
                let (i, j) = (idx / d, idx % d);
                spec.structure_constants[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect()
            })
            .collect();
        let alg = Algebra(Arc::new(AlgebraData {
            spec,
            table,
            weak_unit,
        }));
        if let Some(u) = alg.0.spec.unital {
            if u >= d {
                return Err(AlgebraError::Dimension(format!("unit index {u} out of range")));
            }
            for j in 0..d {
                let ej = alg.basis(j);
                let ue = alg.mul(&alg.basis(u), &ej);
                let eu = alg.mul(&ej, &alg.basis(u));
                if ue != ej || eu != ej {
                    return Err(AlgebraError::UnitLaw { index: u, witness: j });
                }
            }
        }
        Ok(alg)
    }

    pub fn name(&self) -> &str {
        &self.0.spec.name
    }

    pub fn dim(&self) -> usize {
        self.0.spec.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.0.spec.basis_names
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.0.spec
    }

    pub fn alpha_matrix(&self) -> &Matrix {
        &self.0.spec.alpha_matrix
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.0.spec.unital
    }

    /// The two-sided unit if declared, else the weak unit of a Yau twist.
    pub fn one_index(&self) -> Option<usize> {
        self.0.spec.unital.or(self.0.weak_unit)
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.0.spec.basis_names.iter().position(|n| n == name)
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<AlgebraElement, AlgebraError> {
        if coords.len() != self.dim() {
            return Err(AlgebraError::Dimension(format!(
                "{} coordinates for dimension {}",
                coords.len(),
                self.dim()
            )));
        }
        Ok(AlgebraElement {
            algebra: self.clone(),
            coords,
        })
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            coords: vec![Rational::zero(); self.dim()],
        }
    }

    pub fn basis(&self, i: usize) -> AlgebraElement {
        let mut e = self.zero_element();
        e.coords[i] = Rational::one();
        e
    }

    pub fn basis_elements(&self) -> Vec<AlgebraElement> {
        (0..self.dim()).map(|i| self.basis(i)).collect()
    }

    /// `(x·y)_k = Σ x_i y_j c[i][j][k]`, without the algebra check.
    fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let entries = &self.0.table[i * d + j];
                if entries.is_empty() {
                    continue;
                }
                let xy = xi * yj;
                for (k, c) in entries {
                    out[*k] += &xy * c;
                }
            }
        }
        AlgebraElement {
            algebra: self.clone(),
            coords: out,
        }
    }

    pub fn alpha(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            coords: self.alpha_matrix().mul_vec(&x.coords),
        }
    }

    /// The twisting map as a [`RingMap`].
    pub fn alpha_map(&self) -> RingMap<AlgebraElement> {
        let m = self.alpha_matrix();
        if m.is_identity() {
            RingMap::identity()
        } else if m.is_zero() {
            RingMap::zero(Arc::new(self.clone()))
        } else {
            self.linear_map("alpha", m.clone())
        }
    }

    /// A linear map given by its matrix (column `j` = image of `e_j`).
    pub fn linear_map(&self, label: &str, matrix: Matrix) -> RingMap<AlgebraElement> {
        assert_eq!((matrix.rows(), matrix.cols()), (self.dim(), self.dim()));
        RingMap::new(label, move |x: &AlgebraElement| AlgebraElement {
            algebra: x.algebra.clone(),
            coords: matrix.mul_vec(&x.coords),
        })
    }

    /// Matrix of `x ↦ x·e_j` (`right = true`) or `x ↦ e_j·x`.
    pub fn multiplication_matrix(&self, j: usize, right: bool) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        let cs = &self.0.spec.structure_constants;
        for i in 0..d {
            for k in 0..d {
                let c = if right { &cs[i][j][k] } else { &cs[j][i][k] };
                m.set(k, i, c.clone());
            }
        }
        m
    }

    /// Same algebra with α replaced.
    pub fn with_alpha(&self, alpha: Matrix) -> Result<Algebra, AlgebraError> {
        let mut spec = self.0.spec.clone();
        spec.alpha_matrix = alpha;
        Algebra::load(spec, self.0.weak_unit)
    }

    pub fn with_name(&self, name: &str) -> Algebra {
        let mut spec = self.0.spec.clone();
        spec.name = name.to_string();
        Algebra::load(spec, self.0.weak_unit).expect("renaming keeps a valid spec")
    }

    fn check_same(&self, x: &AlgebraElement) -> Result<(), AlgebraError> {
        if x.algebra == *self {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }
}

/// Element of an [`Algebra`], in coordinates of its basis.
#[derive(Clone)]
pub struct AlgebraElement {
    algebra: Algebra,
    coords: Vec<Rational>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.algebra == other.algebra
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.algebra.name(), self)
    }
}

impl fmt::Display for AlgebraElement {
    /// Ascending basis order; the unit keeps an explicit coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = self.algebra.one_index();
        let names = self.algebra.basis_names();
        let terms = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| Term {
                negative: c.is_negative(),
                body: scaled_symbol(&c.abs(), &names[i], Some(i) == unit),
            });
        f.write_str(&join_terms(terms))
    }
}

impl AlgebraElement {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> AlgebraElement {
        AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    pub fn try_add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.algebra.check_same(other)?;
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.algebra.check_same(other)?;
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("algebra mismatch")
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_sub(rhs).expect("algebra mismatch")
    }
}

impl std::ops::Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        alg_mul(self, rhs).expect("algebra mismatch")
    }
}

/// Bilinear product of two elements of the same algebra.
pub fn alg_mul(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
    x.algebra.check_same(y)?;
    Ok(x.algebra.mul(x, y))
}

/// `(x·y)·z − x·(y·z)`.
pub fn associator(
    x: &AlgebraElement,
    y: &AlgebraElement,
    z: &AlgebraElement,
) -> Result<AlgebraElement, AlgebraError> {
    x.algebra.check_same(y)?;
    x.algebra.check_same(z)?;
    let alg = &x.algebra;
    let left = alg.mul(&alg.mul(x, y), z);
    let right = alg.mul(x, &alg.mul(y, z));
    left.try_sub(&right)
}

/// Basis triples `(i, j, k)` on which a trilinear identity fails.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TripleReport {
    pub failures: Vec<(usize, usize, usize)>,
}

impl TripleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `α(e_i)·(e_j·e_k) = (e_i·e_j)·α(e_k)` on every basis triple, which
/// suffices by trilinearity.
pub fn hom_associativity_check(alg: &Algebra) -> TripleReport {
    let d = alg.dim();
    let basis = alg.basis_elements();
    let alphas: Vec<_> = basis.iter().map(|e| alg.alpha(e)).collect();
    let mut failures = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let eij = alg.mul(&basis[i], &basis[j]);
            for k in 0..d {
                let lhs = alg.mul(&alphas[i], &alg.mul(&basis[j], &basis[k]));
                let rhs = alg.mul(&eij, &alphas[k]);
                if lhs != rhs {
                    failures.push((i, j, k));
                }
            }
        }
    }
    TripleReport { failures }
}

/// Exhaustive associativity check (the hom identity with α = id).
pub fn associativity_check(alg: &Algebra) -> TripleReport {
    let d = alg.dim();
    let basis = alg.basis_elements();
    let mut failures = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if !alg.associator(&basis[i], &basis[j], &basis[k]).is_zero() {
                    failures.push((i, j, k));
                }
            }
        }
    }
    TripleReport { failures }
}

/// Which nuclei an element lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NucleusFlags {
    pub left: bool,
    pub middle: bool,
    pub right: bool,
}

impl NucleusFlags {
    pub fn full(&self) -> bool {
        self.left && self.middle && self.right
    }
}

/// Tests the three associator slots against all basis pairs.
pub fn nucleus_membership(alg: &Algebra, x: &AlgebraElement) -> Result<NucleusFlags, AlgebraError> {
    alg.check_same(x)?;
    let basis = alg.basis_elements();
    let vanishes = |f: &dyn Fn(&AlgebraElement, &AlgebraElement) -> AlgebraElement| {
        basis
            .iter()
            .all(|a| basis.iter().all(|b| f(a, b).is_zero()))
    };
    Ok(NucleusFlags {
        left: vanishes(&|a, b| alg.associator(x, a, b)),
        middle: vanishes(&|a, b| alg.associator(a, x, b)),
        right: vanishes(&|a, b| alg.associator(a, b, x)),
    })
}

/// Left, middle and right nucleus as subspaces, plus their intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nuclei {
    pub left: SubspaceBasis,
    pub middle: SubspaceBasis,
    pub right: SubspaceBasis,
    pub full: SubspaceBasis,
}

/// Solves the linear conditions defining each nucleus.
pub fn nuclei(alg: &Algebra) -> Nuclei {
    let d = alg.dim();
    let basis = alg.basis_elements();
    // Column i of each matrix: the associators with e_i in the given slot,
    // stacked over all basis pairs.
    let slot_matrix = |slot: usize| {
        let columns: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                let mut col = Vec::with_capacity(d * d * d);
                for a in &basis {
                    for b in &basis {
                        let x = &basis[i];
                        let assoc = match slot {
                            0 => alg.associator(x, a, b),
                            1 => alg.associator(a, x, b),
                            _ => alg.associator(a, b, x),
                        };
                        col.extend(assoc.coords);
                    }
                }
                col
            })
            .collect();
        let m = Matrix::from_columns(d * d * d, &columns);
        SubspaceBasis::span(d, m.nullspace())
    };
    let left = slot_matrix(0);
    let middle = slot_matrix(1);
    let right = slot_matrix(2);
    let full = left.intersection(&middle).intersection(&right);
    Nuclei {
        left,
        middle,
        right,
        full,
    }
}

/// Yau twist of an associative algebra along a unital endomorphism `endo`:
/// the product becomes `x∗y = endo(x·y)` and the twisting map becomes `endo`.
pub fn yau_twist(assoc: &Algebra, endo: &Matrix) -> Result<Algebra, AlgebraError> {
    let d = assoc.dim();
    if (endo.rows(), endo.cols()) != (d, d) {
        return Err(AlgebraError::Dimension(format!("endomorphism must be {d}x{d}")));
    }
    if !associativity_check(assoc).passed() {
        return Err(AlgebraError::NotAssociative(assoc.name().to_string()));
    }
    let apply = |x: &AlgebraElement| AlgebraElement {
        algebra: assoc.clone(),
        coords: endo.mul_vec(&x.coords),
    };
    let basis = assoc.basis_elements();
    for i in 0..d {
        for j in 0..d {
            let lhs = apply(&assoc.mul(&basis[i], &basis[j]));
            let rhs = assoc.mul(&apply(&basis[i]), &apply(&basis[j]));
            if lhs != rhs {
                return Err(AlgebraError::NotEndomorphism(format!(
                    "f(e{i} e{j}) != f(e{i}) f(e{j})"
                )));
            }
        }
    }
    if let Some(u) = assoc.unit_index() {
        if apply(&basis[u]) != basis[u] {
            return Err(AlgebraError::NotEndomorphism("f(1) != 1".into()));
        }
    }
    if endo.is_identity() {
        return Ok(assoc.clone());
    }
    let structure_constants = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| apply(&assoc.mul(&basis[i], &basis[j])).coords)
                .collect()
        })
        .collect();
    let spec = AlgebraSpec {
        name: format!("{}_yau", assoc.name()),
        dim: d,
        basis_names: assoc.basis_names().to_vec(),
        structure_constants,
        alpha_matrix: endo.clone(),
        unital: None,
    };
    Algebra::load(spec, assoc.one_index())
}

/// Transposes the first two indices of the structure constants; α is kept.
pub fn opposite_algebra(alg: &Algebra) -> Algebra {
    let d = alg.dim();
    let cs = &alg.spec().structure_constants;
    let mut spec = alg.spec().clone();
    spec.structure_constants = (0..d)
        .map(|i| (0..d).map(|j| cs[j][i].clone()).collect())
        .collect();
    spec.name = match alg.name().strip_suffix("_op") {
        Some(base) => base.to_string(),
        None => format!("{}_op", alg.name()),
    };
    Algebra::load(spec, alg.0.weak_unit).expect("opposite of a valid algebra is valid")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// Whether `span(basis)` is closed under the requested multiplications by
/// every algebra basis element and under α.
pub fn is_hom_ideal(alg: &Algebra, basis: &SubspaceBasis, side: Side) -> bool {
    assert_eq!(basis.ambient_dim(), alg.dim());
    let gens = alg.basis_elements();
    basis.rows().iter().all(|row| {
        let v = AlgebraElement {
            algebra: alg.clone(),
            coords: row.clone(),
        };
        let left_ok = || gens.iter().all(|g| basis.contains(&alg.mul(g, &v).coords));
        let right_ok = || gens.iter().all(|g| basis.contains(&alg.mul(&v, g).coords));
        let sides_ok = match side {
            Side::Left => left_ok(),
            Side::Right => right_ok(),
            Side::TwoSided => left_ok() && right_ok(),
        };
        sides_ok && basis.contains(&alg.alpha(&v).coords)
    })
}

impl Ring for Algebra {
    type Elem = AlgebraElement;

    fn zero(&self) -> AlgebraElement {
        self.zero_element()
    }

    fn one(&self) -> Option<AlgebraElement> {
        self.one_index().map(|u| self.basis(u))
    }

    fn is_zero(&self, a: &AlgebraElement) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a.try_add(b).expect("algebra mismatch")
    }

    fn neg(&self, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::neg(a)
    }

    fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a.try_sub(b).expect("algebra mismatch")
    }

    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        Algebra::mul(self, a, b)
    }

    fn render(&self, a: &AlgebraElement) -> String {
        a.to_string()
    }

    fn spanning_set(&self) -> Vec<AlgebraElement> {
        self.basis_elements()
    }

    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, bound: &SampleBound) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            coords: bound.vector(rng, self.dim()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::CdElement;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn octonion_table_matches_cd_product() {
        let o = Algebra::octonions(builtin::AlphaChoice::Identity);
        for i in 0..8 {
            for j in 0..8 {
                let p = alg_mul(&o.basis(i), &o.basis(j)).unwrap();
                let c = &CdElement::basis(3, i) * &CdElement::basis(3, j);
                assert_eq!(p.coords(), c.coords());
            }
        }
        let m = alg_mul(&o.basis(1), &o.basis(1)).unwrap();
        assert_eq!(m, o.basis(0).neg());
    }

    #[test]
    fn zero_alpha_and_bad_unit() {
        let o = Algebra::octonions(builtin::AlphaChoice::Zero);
        assert!(o.alpha_matrix().is_zero());
        let mut spec = Algebra::quaternions(builtin::AlphaChoice::Identity).spec().clone();
        spec.unital = Some(1);
        assert!(matches!(load_algebra(spec), Err(AlgebraError::UnitLaw { index: 1, .. })));
    }

    #[test]
    fn mismatch_is_reported() {
        let o = Algebra::octonions(builtin::AlphaChoice::Zero);
        let h = Algebra::quaternions(builtin::AlphaChoice::Identity);
        assert_eq!(alg_mul(&o.basis(1), &h.basis(1)), Err(AlgebraError::AlgebraMismatch));
    }

    #[test]
    fn multiplication_by_zero() {
        let o = Algebra::octonions(builtin::AlphaChoice::Zero);
        assert!(alg_mul(&o.basis(3), &o.zero_element()).unwrap().is_zero());
    }

    #[test]
    fn hom_checks() {
        let o0 = Algebra::octonions(builtin::AlphaChoice::Zero);
        assert!(hom_associativity_check(&o0).passed());
        let h = Algebra::quaternions(builtin::AlphaChoice::Identity);
        assert!(hom_associativity_check(&h).passed());
        let o1 = Algebra::octonions(builtin::AlphaChoice::Identity);
        let report = hom_associativity_check(&o1);
        assert!(!report.passed());
        for &(i, j, k) in &report.failures {
            assert!(!associator(&o1.basis(i), &o1.basis(j), &o1.basis(k)).unwrap().is_zero());
        }
        assert!(!associator(&o1.basis(1), &o1.basis(2), &o1.basis(4)).unwrap().is_zero());
    }

    #[test]
    fn nucleus_of_unit_and_e1() {
        let o = Algebra::octonions(builtin::AlphaChoice::Identity);
        assert!(nucleus_membership(&o, &o.basis(0)).unwrap().full());
        assert!(!nucleus_membership(&o, &o.basis(1)).unwrap().full());
        let h = Algebra::quaternions(builtin::AlphaChoice::Identity);
        let x = h.element(vec![q(1), q(-2), q(3), q(5)]).unwrap();
        assert!(nucleus_membership(&h, &x).unwrap().full());
        let n = nuclei(&o);
        assert_eq!(n.full, SubspaceBasis::span(8, [o.basis(0).coords().to_vec()]));
    }

    #[test]
    fn yau_twist_of_truncated_polynomials() {
        let base = Algebra::truncated_polynomial(4);
        assert_eq!(yau_twist(&base, &Matrix::identity(4)).unwrap(), base);
        let endo = builtin::scaling_endomorphism(4, &q(2));
        let tw = yau_twist(&base, &endo).unwrap();
        assert!(hom_associativity_check(&tw).passed());
        assert!(!associativity_check(&tw).passed());
        assert_eq!(tw.alpha(&tw.basis(0)), tw.basis(0));
        // α is multiplicative for the twisted product.
        for i in 0..4 {
            for j in 0..4 {
                let lhs = tw.alpha(&alg_mul(&tw.basis(i), &tw.basis(j)).unwrap());
                let rhs = alg_mul(&tw.alpha(&tw.basis(i)), &tw.alpha(&tw.basis(j))).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        // Augmentation t ↦ 0 is an endomorphism too.
        let aug = builtin::scaling_endomorphism(4, &q(0));
        assert!(hom_associativity_check(&yau_twist(&base, &aug).unwrap()).passed());
    }

    #[test]
    fn yau_twist_rejects_bad_input() {
        let base = Algebra::truncated_polynomial(3);
        let mut not_endo = Matrix::identity(3);
        not_endo.set(1, 1, q(2));
        not_endo.set(2, 2, q(3));
        assert!(matches!(yau_twist(&base, &not_endo), Err(AlgebraError::NotEndomorphism(_))));
        let o = Algebra::octonions(builtin::AlphaChoice::Identity);
        assert!(matches!(
            yau_twist(&o, &Matrix::identity(8)),
            Err(AlgebraError::NotAssociative(_))
        ));
    }

    #[test]
    fn opposite_algebras() {
        let comm = Algebra::truncated_polynomial(3);
        assert_eq!(opposite_algebra(&comm).spec().structure_constants, comm.spec().structure_constants);
        let o = Algebra::octonions(builtin::AlphaChoice::Zero);
        assert_eq!(opposite_algebra(&opposite_algebra(&o)), o);
        assert!(hom_associativity_check(&opposite_algebra(&o)).passed());
        let tw = yau_twist(&Algebra::truncated_polynomial(4), &builtin::scaling_endomorphism(4, &q(2)))
            .unwrap();
        assert!(hom_associativity_check(&opposite_algebra(&tw)).passed());
    }

    #[test]
    fn hom_ideals() {
        let tw = yau_twist(&Algebra::truncated_polynomial(4), &builtin::scaling_endomorphism(4, &q(2)))
            .unwrap();
        for side in [Side::Left, Side::Right, Side::TwoSided] {
            assert!(is_hom_ideal(&tw, &SubspaceBasis::zero(4), side));
            assert!(is_hom_ideal(&tw, &SubspaceBasis::full(4), side));
        }
        let tail = SubspaceBasis::span(4, [tw.basis(1), tw.basis(2), tw.basis(3)].map(|e| e.coords().to_vec()));
        assert!(is_hom_ideal(&tw, &tail, Side::TwoSided));
        let head = SubspaceBasis::span(4, [tw.basis(0).coords().to_vec()]);
        assert!(!is_hom_ideal(&tw, &head, Side::Right));
    }
}
