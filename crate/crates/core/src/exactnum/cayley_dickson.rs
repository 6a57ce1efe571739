//! The Cayley–Dickson tower over the rationals: levels 0..=3 give the
//! rationals, Gaussian rationals, rational quaternions and rational octonions.
//!
//! Products are defined by the doubling rule
//! `(a, b)(c, d) = (ac - conj(d) b, da + b conj(c))` with `e_{2^k + i} = (0, e_i)`.
//! The recursion is evaluated once per level on basis pairs and cached as a
//! signed permutation table; [`cd_mul_recursive`] keeps the direct recursion
//! around as a reference.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use super::{ExactError, Rational};
use crate::render::{join_terms, Term};

pub const MAX_LEVEL: u8 = 3;

/// Element of the Cayley–Dickson algebra of the given level, stored as
/// `2^level` coordinates in the basis `e0, e1, ...` with `e0` the unit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CdElement {
    level: u8,
    coords: Vec<Rational>,
}

/// `basis_product(level)[i * n + j] = (k, negative)` means `e_i e_j = ±e_k`.
fn basis_table(level: u8) -> &'static [(usize, bool)] {
    static TABLES: [OnceLock<Vec<(usize, bool)>>; 4] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    TABLES[level as usize].get_or_init(|| {
        let n = 1usize << level;
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let prod = cd_mul_recursive(&unit_vec(n, i), &unit_vec(n, j));
                let (k, coeff) = prod
                    .iter()
                    .enumerate()
                    .find(|(_, c)| !c.is_zero())
                    .expect("product of basis elements is nonzero");
                debug_assert!(coeff.abs().is_one());
                table.push((k, coeff.is_negative()));
            }
        }
        table
    })
}

fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn conj_slice(x: &[Rational]) -> Vec<Rational> {
    x.iter()
        .enumerate()
        .map(|(i, c)| if i == 0 { c.clone() } else { -c })
        .collect()
}

fn add_slices(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub_slices(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Direct evaluation of the doubling rule on coordinate slices of equal
/// power-of-two length.
pub fn cd_mul_recursive(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    assert_eq!(x.len(), y.len());
    let n = x.len();
    if n == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let first = sub_slices(&cd_mul_recursive(a, c), &cd_mul_recursive(&conj_slice(d), b));
    let second = add_slices(&cd_mul_recursive(d, a), &cd_mul_recursive(b, &conj_slice(c)));
    let mut out = first;
    out.extend(second);
    out
}

impl CdElement {
    pub fn new(level: u8, coords: Vec<Rational>) -> Result<Self, ExactError> {
        check_level(level)?;
        let expected = 1usize << level;
        if coords.len() != expected {
            return Err(ExactError::CoordinateCount {
                expected,
                got: coords.len(),
            });
        }
        Ok(CdElement { level, coords })
    }

    pub fn zero(level: u8) -> Self {
        CdElement {
            level,
            coords: vec![Rational::zero(); 1 << level],
        }
    }

    pub fn one(level: u8) -> Self {
        Self::basis(level, 0)
    }

    pub fn basis(level: u8, index: usize) -> Self {
        let n = 1usize << level;
        assert!(index < n, "basis index {index} out of range for level {level}");
        CdElement {
            level,
            coords: unit_vec(n, index),
        }
    }

    pub fn scalar(level: u8, value: Rational) -> Self {
        let mut out = Self::zero(level);
        out.coords[0] = value;
        out
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// Real (`e0`) multiples of the unit.
    pub fn is_scalar(&self) -> bool {
        self.coords[1..].iter().all(Rational::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CdElement {
            level: self.level,
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_level(other)?;
        Ok(CdElement {
            level: self.level,
            coords: add_slices(&self.coords, &other.coords),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_level(other)?;
        Ok(CdElement {
            level: self.level,
            coords: sub_slices(&self.coords, &other.coords),
        })
    }

    /// Cayley–Dickson product; fails on a level mismatch.
    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_level(other)?;
        let n = self.coords.len();
        let table = basis_table(self.level);
        let mut out = vec![Rational::zero(); n];
        for (i, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (k, negative) = table[i * n + j];
                let prod = x * y;
                if negative {
                    out[k] -= prod;
                } else {
                    out[k] += prod;
                }
            }
        }
        Ok(CdElement {
            level: self.level,
            coords: out,
        })
    }

    pub fn conjugate(&self) -> Self {
        CdElement {
            level: self.level,
            coords: conj_slice(&self.coords),
        }
    }

    /// Sum of squared coordinates; equals `x conj(x)`.
    pub fn norm(&self) -> Rational {
        self.coords.iter().map(|c| c * c).sum()
    }

    /// `conj(x) / N(x)`.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ExactError::ZeroInverse);
        }
        Ok(self.conjugate().scale(&n.recip()?))
    }

    /// `(x y) z - x (y z)`.
    pub fn associator(x: &Self, y: &Self, z: &Self) -> Result<Self, ExactError> {
        let left = x.try_mul(y)?.try_mul(z)?;
        let right = x.try_mul(&y.try_mul(z)?)?;
        left.try_sub(&right)
    }

    /// Structure constants `c[i][j][k]` of this level, for loading as a
    /// generic algebra.
    pub fn structure_constants(level: u8) -> Vec<Vec<Vec<Rational>>> {
        let n = 1usize << level;
        let table = basis_table(level);
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let (k, negative) = table[i * n + j];
                        let mut row = vec![Rational::zero(); n];
                        row[k] = if negative { -Rational::one() } else { Rational::one() };
                        row
                    })
                    .collect()
            })
            .collect()
    }

    fn same_level(&self, other: &Self) -> Result<(), ExactError> {
        if self.level != other.level {
            return Err(ExactError::LevelMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(())
    }

    pub(crate) fn render_terms(&self) -> Vec<Term> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| Term {
                negative: c.is_negative(),
                body: scaled_symbol(&c.abs(), &format!("e{i}"), i == 0),
            })
            .collect()
    }
}

/// `c*name`, dropping a unit coefficient unless `keep_one` is set.
pub(crate) fn scaled_symbol(abs_coeff: &Rational, name: &str, keep_one: bool) -> String {
    if abs_coeff.is_one() && !keep_one {
        name.to_string()
    } else {
        format!("{abs_coeff}*{name}")
    }
}

fn check_level(level: u8) -> Result<(), ExactError> {
    if level > MAX_LEVEL {
        return Err(ExactError::InvalidLevel(level));
    }
    Ok(())
}

/// Canonical text: ascending basis order, `e0` always with its coefficient,
/// unit coefficients elided elsewhere, e.g. `1/2*e0 - 3*e5`.
impl fmt::Display for CdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(self.render_terms()))
    }
}

impl fmt::Debug for CdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CD{}[{}]", self.level, self)
    }
}

impl Add for &CdElement {
    type Output = CdElement;
    fn add(self, rhs: &CdElement) -> CdElement {
        self.try_add(rhs).expect("Cayley-Dickson level mismatch")
    }
}

impl Sub for &CdElement {
    type Output = CdElement;
    fn sub(self, rhs: &CdElement) -> CdElement {
        self.try_sub(rhs).expect("Cayley-Dickson level mismatch")
    }
}

impl Mul for &CdElement {
    type Output = CdElement;
    fn mul(self, rhs: &CdElement) -> CdElement {
        self.try_mul(rhs).expect("Cayley-Dickson level mismatch")
    }
}

impl Neg for &CdElement {
    type Output = CdElement;
    fn neg(self) -> CdElement {
        CdElement {
            level: self.level,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}
