//! Morphisms of hom-modules and explicit witnesses for the three isomorphism
//! theorems.

use crate::exactnum::Rational;
use crate::linalg::{Matrix, SubspaceBasis};

use super::{quotient_module, submodule_as_module, HomModule, ModuleError};

/// A linear map `source → target`, as a `target.dim × source.dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    source: HomModule,
    target: HomModule,
    matrix: Matrix,
}

impl ModuleMorphism {
    /// Checks shapes only; use [`morphism_check`] for the module laws.
    pub fn new(source: &HomModule, target: &HomModule, matrix: Matrix) -> Result<Self, ModuleError> {
        if source.ring() != target.ring() {
            return Err(ModuleError::RingMismatch);
        }
        if source.side() != target.side() {
            return Err(ModuleError::SideMismatch);
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(ModuleError::Dimension(format!(
                "morphism matrix must be {}x{}",
                target.dim(),
                source.dim()
            )));
        }
        Ok(ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn identity(m: &HomModule) -> Self {
        ModuleMorphism::new(m, m, Matrix::identity(m.dim())).expect("shapes agree")
    }

    pub fn source(&self) -> &HomModule {
        &self.source
    }

    pub fn target(&self) -> &HomModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ModuleMorphism) -> Result<ModuleMorphism, ModuleError> {
        if inner.target.dim() != self.source.dim() {
            return Err(ModuleError::Dimension("morphisms do not compose".into()));
        }
        ModuleMorphism::new(&inner.source, &self.target, self.matrix.mul(&inner.matrix))
    }

    /// Square and invertible.
    pub fn is_bijective(&self) -> bool {
        self.matrix.is_square() && self.matrix.rank() == self.matrix.rows()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismViolation {
    /// `f(α_M(e_i)) ≠ α_{M'}(f(e_i))`.
    Alpha { basis: usize },
    /// `f(e_i·r_j) ≠ f(e_i)·r_j`.
    Action { basis: usize, ring_basis: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorphismReport {
    pub violations: Vec<MorphismViolation>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `f∘α_M = α_{M'}∘f` and compatibility with every ring basis action,
/// column by column.
pub fn morphism_check(f: &ModuleMorphism) -> MorphismReport {
    let (s, t, m) = (&f.source, &f.target, &f.matrix);
    let mut violations = Vec::new();
    let lhs_alpha = m.mul(s.alpha());
    let rhs_alpha = t.alpha().mul(m);
    for i in 0..s.dim() {
        if lhs_alpha.column(i) != rhs_alpha.column(i) {
            violations.push(MorphismViolation::Alpha { basis: i });
        }
    }
    for j in 0..s.ring().dim() {
        let lhs = m.mul(s.action(j));
        let rhs = t.action(j).mul(m);
        for i in 0..s.dim() {
            if lhs.column(i) != rhs.column(i) {
                violations.push(MorphismViolation::Action {
                    basis: i,
                    ring_basis: j,
                });
            }
        }
    }
    MorphismReport { violations }
}

fn require_morphism(f: &ModuleMorphism) -> Result<(), ModuleError> {
    match morphism_check(f).violations.first() {
        None => Ok(()),
        Some(v) => Err(ModuleError::NotMorphism(format!("{v:?}"))),
    }
}

pub fn kernel(f: &ModuleMorphism) -> SubspaceBasis {
    SubspaceBasis::span(f.source.dim(), f.matrix.nullspace())
}

pub fn image(f: &ModuleMorphism) -> SubspaceBasis {
    let cols = (0..f.matrix.cols()).map(|j| f.matrix.column(j));
    SubspaceBasis::span(f.target.dim(), cols)
}

/// `f⁻¹(N') = {x : f(x) ∈ N'}`.
pub fn preimage(f: &ModuleMorphism, n: &SubspaceBasis) -> SubspaceBasis {
    let ann = n.annihilator();
    if ann.is_empty() {
        return SubspaceBasis::full(f.source.dim());
    }
    let conditions = Matrix::from_rows(ann).mul(&f.matrix);
    SubspaceBasis::span(f.source.dim(), conditions.nullspace())
}

/// A claimed isomorphism with its endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub iso: ModuleMorphism,
}

impl IsoWitness {
    /// The witness is a bijective morphism.
    pub fn verify(&self) -> bool {
        self.iso.is_bijective() && morphism_check(&self.iso).passed()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstIsoWitness {
    pub kernel: SubspaceBasis,
    pub image: SubspaceBasis,
    /// `M/ker f → im f`, the image taken in its echelon coordinates.
    pub iso: IsoWitness,
}

/// `M/ker f ≅ im f`.
pub fn first_iso_witness(f: &ModuleMorphism) -> Result<FirstIsoWitness, ModuleError> {
    require_morphism(f)?;
    let ker = kernel(f);
    let im = image(f);
    let (quotient, _) = quotient_module(&f.source, &ker)?;
    let (im_module, _) = submodule_as_module(&f.target, &im)?;
    let cols: Vec<Vec<Rational>> = ker
        .free_columns()
        .into_iter()
        .map(|c| {
            let fx = f.matrix.column(c);
            im.coordinates(&fx).expect("f(x) lies in the image")
        })
        .collect();
    let matrix = Matrix::from_columns(im.dim(), &cols);
    let iso = ModuleMorphism::new(&quotient, &im_module, matrix)?;
    Ok(FirstIsoWitness {
        kernel: ker,
        image: im,
        iso: IsoWitness { iso },
    })
}

fn lift_matrix(n: &SubspaceBasis) -> Matrix {
    let free = n.free_columns();
    let mut lift = Matrix::zeros(n.ambient_dim(), free.len());
    for (k, &c) in free.iter().enumerate() {
        lift.set(c, k, Rational::one());
    }
    lift
}

/// Coordinates of the subspace `inner ⊆ outer` in `outer`'s echelon basis.
fn relative(outer: &SubspaceBasis, inner: &SubspaceBasis) -> SubspaceBasis {
    SubspaceBasis::span(
        outer.dim(),
        inner
            .rows()
            .iter()
            .map(|r| outer.coordinates(r).expect("inner ⊆ outer")),
    )
}

/// `N/(N∩L) ≅ (N+L)/L` via `n + N∩L ↦ n + L`.
pub fn second_iso_witness(
    m: &HomModule,
    n: &SubspaceBasis,
    l: &SubspaceBasis,
) -> Result<IsoWitness, ModuleError> {
    m.require_submodule(n)?;
    m.require_submodule(l)?;
    let cap = n.intersection(l);
    let sum = n.sum(l);
    let (n_mod, _) = submodule_as_module(m, n)?;
    let (s_mod, _) = submodule_as_module(m, &sum)?;
    let cap_in_n = relative(n, &cap);
    let l_in_s = relative(&sum, l);
    let (source, _) = quotient_module(&n_mod, &cap_in_n)?;
    let (target, proj) = quotient_module(&s_mod, &l_in_s)?;
    // Quotient basis → N-coordinates → M → (N+L)-coordinates → (N+L)/L.
    let lift = lift_matrix(&cap_in_n);
    let cols: Vec<Vec<Rational>> = (0..lift.cols())
        .map(|k| {
            let in_m = n.combine(&lift.column(k));
            proj.apply(&sum.coordinates(&in_m).expect("N ⊆ N+L"))
        })
        .collect();
    let matrix = Matrix::from_columns(target.dim(), &cols);
    Ok(IsoWitness {
        iso: ModuleMorphism::new(&source, &target, matrix)?,
    })
}

/// `(M/L)/(N/L) ≅ M/N` for `L ≤ N ≤ M`.
pub fn third_iso_witness(
    m: &HomModule,
    n: &SubspaceBasis,
    l: &SubspaceBasis,
) -> Result<IsoWitness, ModuleError> {
    m.require_submodule(n)?;
    m.require_submodule(l)?;
    if !l.is_subspace_of(n) {
        return Err(ModuleError::NotSubmodule("L is not contained in N".into()));
    }
    let (m_l, p_l) = quotient_module(m, l)?;
    let n_l = SubspaceBasis::span(m_l.dim(), n.rows().iter().map(|r| p_l.apply(r)));
    let (source, _) = quotient_module(&m_l, &n_l)?;
    let (target, p_n) = quotient_module(m, n)?;
    let matrix = p_n
        .matrix()
        .mul(&lift_matrix(l))
        .mul(&lift_matrix(&n_l));
    Ok(IsoWitness {
        iso: ModuleMorphism::new(&source, &target, matrix)?,
    })
}
