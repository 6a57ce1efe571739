//! Finite-dimensional hom-modules over structure-constant algebras.
//!
//! A module of dimension `n` over an algebra with basis `e_0, …, e_{d−1}` is
//! given by `d` action matrices `A_j` (`m·e_j = A_j m` for a right module,
//! `e_j·m = A_j m` for a left one) and a twisting matrix `α_M`. Hom-submodules
//! are subspaces stable under every `A_j` and `α_M`, kept in reduced row
//! echelon form.

mod enumerate;
mod file;
mod iso;

pub use enumerate::{characteristic_polynomial, enumerate_submodules, rational_eigenvalues};
pub use file::{parse_module, render_module};
pub use iso::{
    first_iso_witness, image, kernel, morphism_check, preimage, second_iso_witness,
    third_iso_witness, FirstIsoWitness, IsoWitness, ModuleMorphism, MorphismReport,
    MorphismViolation,
};

use thiserror::Error;

use crate::exactnum::Rational;
use crate::homring::{Algebra, AlgebraElement};
use crate::linalg::{Matrix, SubspaceBasis};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("modules are over different rings")]
    RingMismatch,
    #[error("modules act on different sides")]
    SideMismatch,
    #[error("not a hom-submodule: {0}")]
    NotSubmodule(String),
    #[error("not a hom-module morphism: {0}")]
    NotMorphism(String),
    #[error("the family of submodules is empty")]
    EmptyFamily,
    #[error("chain is not ascending at position {0}")]
    NotAscending(usize),
    #[error("submodule lattice is not enumerable: {0}")]
    NotEnumerable(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleSide {
    Right,
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomModule {
    name: String,
    ring: Algebra,
    action: Vec<Matrix>,
    alpha: Matrix,
    side: ModuleSide,
}

impl HomModule {
    pub fn new(
        name: impl Into<String>,
        ring: &Algebra,
        action: Vec<Matrix>,
        alpha: Matrix,
        side: ModuleSide,
    ) -> Result<Self, ModuleError> {
        let n = alpha.rows();
        if !alpha.is_square() {
            return Err(ModuleError::Dimension("α_M must be square".into()));
        }
        if action.len() != ring.dim() {
            return Err(ModuleError::Dimension(format!(
                "{} action matrices for a ring of dimension {}",
                action.len(),
                ring.dim()
            )));
        }
        if let Some(j) = action.iter().position(|a| a.rows() != n || a.cols() != n) {
            return Err(ModuleError::Dimension(format!("action matrix {j} must be {n}x{n}")));
        }
        Ok(HomModule {
            name: name.into(),
            ring: ring.clone(),
            action,
            alpha,
            side,
        })
    }

    /// The ring acting on itself by multiplication, with `α_M = α_R`.
    pub fn regular(ring: &Algebra, side: ModuleSide) -> Self {
        let right = side == ModuleSide::Right;
        let action = (0..ring.dim())
            .map(|j| ring.multiplication_matrix(j, right))
            .collect();
        let name = format!("{}_{}", ring.name(), if right { "right" } else { "left" });
        HomModule::new(name, ring, action, ring.alpha_matrix().clone(), side)
            .expect("regular module shapes agree")
    }

    /// `ℚⁿ` with every action matrix zero.
    pub fn trivial(ring: &Algebra, alpha: Matrix, side: ModuleSide) -> Result<Self, ModuleError> {
        let n = alpha.rows();
        let action = vec![Matrix::zeros(n, n); ring.dim()];
        HomModule::new("trivial", ring, action, alpha, side)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn ring(&self) -> &Algebra {
        &self.ring
    }

    pub fn action(&self, j: usize) -> &Matrix {
        &self.action[j]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn side(&self) -> ModuleSide {
        self.side
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `m·r` (or `r·m` for a left module).
    pub fn act(&self, m: &[Rational], r: &AlgebraElement) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (a, rj) in self.action.iter().zip(r.coords()) {
            if rj.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(a.mul_vec(m)) {
                *o += rj * &v;
            }
        }
        out
    }

    pub fn apply_alpha(&self, m: &[Rational]) -> Vec<Rational> {
        self.alpha.mul_vec(m)
    }

    fn unit_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    fn check_vector(&self, v: &[Rational]) -> Result<(), ModuleError> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(ModuleError::Dimension(format!(
                "vector of length {} in a module of dimension {}",
                v.len(),
                self.dim()
            )))
        }
    }

    fn check_subspace(&self, n: &SubspaceBasis) -> Result<(), ModuleError> {
        if n.ambient_dim() != self.dim() {
            return Err(ModuleError::Dimension(format!(
                "subspace of Q^{} in a module of dimension {}",
                n.ambient_dim(),
                self.dim()
            )));
        }
        Ok(())
    }

    fn require_submodule(&self, n: &SubspaceBasis) -> Result<(), ModuleError> {
        self.check_subspace(n)?;
        if is_hom_submodule(self, n) {
            Ok(())
        } else {
            Err(ModuleError::NotSubmodule(n.render()))
        }
    }
}

/// Module basis index and ring basis pair `(m, i, j)` violating the
/// hom-associativity axiom.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub failures: Vec<(usize, usize, usize)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustive check of the hom-associativity axiom on basis triples:
/// `α_M(m)·(e_i e_j) = (m·e_i)·α_R(e_j)` for right modules and
/// `(e_i e_j)·α_M(m) = α_R(e_i)·(e_j·m)` for left modules. Additivity and
/// bilinearity hold by construction.
pub fn module_axioms_check(m: &HomModule) -> AxiomReport {
    let ring = &m.ring;
    let d = ring.dim();
    let basis = ring.basis_elements();
    let products: Vec<Vec<AlgebraElement>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| crate::homring::alg_mul(&basis[i], &basis[j]).expect("same algebra"))
                .collect()
        })
        .collect();
    let alphas: Vec<AlgebraElement> = basis.iter().map(|e| ring.alpha(e)).collect();
    let mut failures = Vec::new();
    for k in 0..m.dim() {
        let v = m.unit_vector(k);
        let av = m.apply_alpha(&v);
        for i in 0..d {
            for j in 0..d {
                let (lhs, rhs) = match m.side {
                    ModuleSide::Right => (
                        m.act(&av, &products[i][j]),
                        m.act(&m.act(&v, &basis[i]), &alphas[j]),
                    ),
                    ModuleSide::Left => (
                        m.act(&av, &products[i][j]),
                        m.act(&m.act(&v, &basis[j]), &alphas[i]),
                    ),
                };
                if lhs != rhs {
                    failures.push((k, i, j));
                }
            }
        }
    }
    AxiomReport { failures }
}

/// Whether `n` is stable under every action matrix and under `α_M`.
pub fn is_hom_submodule(m: &HomModule, n: &SubspaceBasis) -> bool {
    if n.ambient_dim() != m.dim() {
        return false;
    }
    n.rows().iter().all(|row| {
        m.action.iter().all(|a| n.contains(&a.mul_vec(row))) && n.contains(&m.alpha.mul_vec(row))
    })
}

/// Least hom-submodule containing `vectors`, by saturation: repeatedly add the
/// images of the current basis under every `A_j` and `α_M` until the
/// dimension stops growing.
pub fn generated_submodule(
    m: &HomModule,
    vectors: &[Vec<Rational>],
) -> Result<SubspaceBasis, ModuleError> {
    for v in vectors {
        m.check_vector(v)?;
    }
    let mut current = SubspaceBasis::span(m.dim(), vectors.iter().cloned());
    loop {
        let images = current.rows().iter().flat_map(|row| {
            m.action
                .iter()
                .chain(std::iter::once(&m.alpha))
                .map(move |a| a.mul_vec(row))
        });
        let next = SubspaceBasis::span(m.dim(), current.rows().iter().cloned().chain(images));
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
}

pub fn submodule_sum(
    m: &HomModule,
    a: &SubspaceBasis,
    b: &SubspaceBasis,
) -> Result<SubspaceBasis, ModuleError> {
    m.require_submodule(a)?;
    m.require_submodule(b)?;
    Ok(a.sum(b))
}

pub fn submodule_intersection(
    m: &HomModule,
    a: &SubspaceBasis,
    b: &SubspaceBasis,
) -> Result<SubspaceBasis, ModuleError> {
    m.require_submodule(a)?;
    m.require_submodule(b)?;
    Ok(a.intersection(b))
}

/// `M/N` with the induced action and α, plus the natural projection.
///
/// Quotient coordinates are the free (non-pivot) columns of `N`'s echelon
/// form: `x + N` is represented by the free entries of `x` reduced modulo `N`.
pub fn quotient_module(
    m: &HomModule,
    n: &SubspaceBasis,
) -> Result<(HomModule, ModuleMorphism), ModuleError> {
    m.require_submodule(n)?;
    let free = n.free_columns();
    let q = free.len();
    let proj = projection_matrix(n);
    let mut lift = Matrix::zeros(m.dim(), q);
    for (k, &c) in free.iter().enumerate() {
        lift.set(c, k, Rational::one());
    }
    let induce = |a: &Matrix| proj.mul(a).mul(&lift);
    let quotient = HomModule::new(
        format!("{}/N", m.name),
        &m.ring,
        m.action.iter().map(induce).collect(),
        induce(&m.alpha),
        m.side,
    )?;
    let projection = ModuleMorphism::new(m, &quotient, proj)?;
    Ok((quotient, projection))
}

/// Matrix of `x ↦ (reduce_N(x))[free columns]`.
pub(crate) fn projection_matrix(n: &SubspaceBasis) -> Matrix {
    let free = n.free_columns();
    let d = n.ambient_dim();
    let mut p = Matrix::zeros(free.len(), d);
    for i in 0..d {
        let mut e = vec![Rational::zero(); d];
        e[i] = Rational::one();
        let r = n.reduce(&e);
        for (k, &c) in free.iter().enumerate() {
            p.set(k, i, r[c].clone());
        }
    }
    p
}

/// A hom-submodule as a module in its own right, in the coordinates of its
/// echelon basis, together with the inclusion morphism.
pub fn submodule_as_module(
    m: &HomModule,
    n: &SubspaceBasis,
) -> Result<(HomModule, ModuleMorphism), ModuleError> {
    m.require_submodule(n)?;
    let restrict = |a: &Matrix| {
        let cols: Vec<Vec<Rational>> = n
            .rows()
            .iter()
            .map(|row| n.coordinates(&a.mul_vec(row)).expect("submodule is stable"))
            .collect();
        Matrix::from_columns(n.dim(), &cols)
    };
    let sub = HomModule::new(
        format!("{}|N", m.name),
        &m.ring,
        m.action.iter().map(restrict).collect(),
        restrict(&m.alpha),
        m.side,
    )?;
    let inclusion = Matrix::from_columns(m.dim(), n.rows());
    let inc = ModuleMorphism::new(&sub, m, inclusion)?;
    Ok((sub, inc))
}

/// External direct sum with block-diagonal action and α.
pub fn direct_sum(parts: &[HomModule]) -> Result<HomModule, ModuleError> {
    let first = parts
        .first()
        .ok_or_else(|| ModuleError::Dimension("direct sum of no modules".into()))?;
    if parts.len() == 1 {
        return Ok(first.clone());
    }
    for p in &parts[1..] {
        if p.ring != first.ring {
            return Err(ModuleError::RingMismatch);
        }
        if p.side != first.side {
            return Err(ModuleError::SideMismatch);
        }
    }
    let block = |f: &dyn Fn(&HomModule) -> &Matrix| {
        let blocks: Vec<&Matrix> = parts.iter().map(f).collect();
        Matrix::block_diagonal(&blocks)
    };
    let action = (0..first.ring.dim())
        .map(|j| block(&|p: &HomModule| &p.action[j]))
        .collect();
    let name = parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join("+");
    HomModule::new(name, &first.ring, action, block(&|p: &HomModule| &p.alpha), first.side)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    /// Least index after which the chain is constant.
    pub index: usize,
    /// Number of positions where the chain grows strictly.
    pub strict_increases: usize,
    pub submodules: Vec<SubspaceBasis>,
}

/// Generates a submodule from each set and checks that the resulting finite
/// chain ascends. The strict increases are at most `dim M`.
pub fn chain_stabilization(
    m: &HomModule,
    generators: &[Vec<Vec<Rational>>],
) -> Result<ChainReport, ModuleError> {
    let submodules = generators
        .iter()
        .map(|g| generated_submodule(m, g))
        .collect::<Result<Vec<_>, _>>()?;
    let mut strict_increases = 0;
    let mut index = 0;
    for i in 1..submodules.len() {
        if !submodules[i - 1].is_subspace_of(&submodules[i]) {
            return Err(ModuleError::NotAscending(i));
        }
        if submodules[i].dim() > submodules[i - 1].dim() {
            strict_increases += 1;
            index = i;
        }
    }
    Ok(ChainReport {
        index,
        strict_increases,
        submodules,
    })
}

/// Inclusion-maximal members of a family, without duplicates, in first
/// occurrence order.
pub fn maximal_elements(family: &[SubspaceBasis]) -> Result<Vec<SubspaceBasis>, ModuleError> {
    if family.is_empty() {
        return Err(ModuleError::EmptyFamily);
    }
    let mut out: Vec<SubspaceBasis> = Vec::new();
    for a in family {
        let dominated = family
            .iter()
            .any(|b| b.dim() > a.dim() && a.is_subspace_of(b));
        if !dominated && !out.contains(a) {
            out.push(a.clone());
        }
    }
    Ok(out)
}
