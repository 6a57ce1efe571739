//! Shipped algebra instances.

use crate::exactnum::{CdElement, Rational, MAX_LEVEL};
use crate::linalg::Matrix;

use super::{Algebra, AlgebraSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaChoice {
    Identity,
    Zero,
}

impl AlphaChoice {
    fn matrix(self, dim: usize) -> Matrix {
        match self {
            AlphaChoice::Identity => Matrix::identity(dim),
            AlphaChoice::Zero => Matrix::zeros(dim, dim),
        }
    }
}

/// `diag(1, q, q², …)`: the endomorphism `t ↦ q·t` of `ℚ[t]/(tⁿ)`.
pub fn scaling_endomorphism(n: usize, q: &Rational) -> Matrix {
    let entries: Vec<Rational> = (0..n).map(|k| q.pow(k as u32)).collect();
    Matrix::diagonal(&entries)
}

impl Algebra {
    /// Cayley–Dickson algebra of the given level with basis `e0, e1, …`.
    pub fn cayley_dickson(level: u8, alpha: AlphaChoice) -> Algebra {
        assert!(level <= MAX_LEVEL, "unsupported level {level}");
        let dim = 1usize << level;
        let name = match level {
            0 => "rationals",
            1 => "complex",
            2 => "quaternions",
            _ => "octonions",
        };
        let spec = AlgebraSpec {
            name: name.to_string(),
            dim,
            basis_names: (0..dim).map(|i| format!("e{i}")).collect(),
            structure_constants: CdElement::structure_constants(level),
            alpha_matrix: alpha.matrix(dim),
            unital: Some(0),
        };
        super::load_algebra(spec).expect("Cayley-Dickson tables are valid")
    }

    pub fn octonions(alpha: AlphaChoice) -> Algebra {
        Self::cayley_dickson(3, alpha)
    }

    pub fn quaternions(alpha: AlphaChoice) -> Algebra {
        Self::cayley_dickson(2, alpha)
    }

    /// `ℚ[t]/(tⁿ)` with basis `one, t, t2, …` and α = id.
    pub fn truncated_polynomial(n: usize) -> Algebra {
        assert!(n >= 1);
        let mut cs = vec![vec![vec![Rational::zero(); n]; n]; n];
        for (i, plane) in cs.iter_mut().enumerate() {
            for (j, row) in plane.iter_mut().enumerate() {
                if i + j < n {
                    row[i + j] = Rational::one();
                }
            }
        }
        let basis_names = (0..n)
            .map(|k| match k {
                0 => "one".to_string(),
                1 => "t".to_string(),
                k => format!("t{k}"),
            })
            .collect();
        let spec = AlgebraSpec {
            name: format!("trunc{n}"),
            dim: n,
            basis_names,
            structure_constants: cs,
            alpha_matrix: Matrix::identity(n),
            unital: Some(0),
        };
        super::load_algebra(spec).expect("truncated polynomial table is valid")
    }

    /// `ℚⁿ` with componentwise product (basis of orthogonal idempotents
    /// `f0, f1, …`) and the given diagonal α.
    pub fn diagonal(alpha: &[Rational]) -> Algebra {
        let n = alpha.len();
        let mut cs = vec![vec![vec![Rational::zero(); n]; n]; n];
        for (i, plane) in cs.iter_mut().enumerate() {
            plane[i][i] = Rational::one();
        }
        let spec = AlgebraSpec {
            name: format!("diag{n}"),
            dim: n,
            basis_names: (0..n).map(|i| format!("f{i}")).collect(),
            structure_constants: cs,
            alpha_matrix: Matrix::diagonal(alpha),
            unital: None,
        };
        super::load_algebra(spec).expect("diagonal algebra is valid")
    }

    /// Looks up a shipped algebra by name.
    pub fn builtin(name: &str, alpha: AlphaChoice) -> Option<Algebra> {
        let level = match name {
            "rationals" => 0,
            "complex" => 1,
            "quaternions" => 2,
            "octonions" => 3,
            _ => return None,
        };
        Some(Self::cayley_dickson(level, alpha))
    }
}
