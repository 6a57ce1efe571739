//! Exhaustive listing of hom-submodules when some structure operator has
//! `dim M` distinct rational eigenvalues. Every submodule is invariant under
//! that operator, hence spanned by a subset of its eigenvectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactnum::Rational;
use crate::linalg::{Matrix, SubspaceBasis};

use super::{is_hom_submodule, HomModule, ModuleError};

/// Largest module dimension for which all `2^dim` eigenvector subsets are
/// tried.
const MAX_ENUMERATION_DIM: usize = 12;

/// Largest absolute constant or leading coefficient whose divisors are
/// searched for rational roots.
const MAX_ROOT_SEARCH: u64 = 1_000_000_000_000;

/// Coefficients `[c_0, …, c_n]` of `det(xI − A)` (Faddeev–LeVerrier).
pub fn characteristic_polynomial(a: &Matrix) -> Vec<Rational> {
    assert!(a.is_square());
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&Matrix::identity(n).scale(&coeffs[n - k + 1]));
        let am = a.mul(&m);
        let trace: Rational = (0..n).map(|i| am.get(i, i).clone()).sum();
        coeffs[n - k] = -(trace * Rational::new(1, k as i64).expect("k > 0"));
    }
    coeffs
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > MAX_ROOT_SEARCH {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

fn eval(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Distinct rational eigenvalues of `a`, ascending, or `None` if the
/// coefficients are too large to search.
pub fn rational_eigenvalues(a: &Matrix) -> Option<Vec<Rational>> {
    let coeffs = characteristic_polynomial(a);
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut roots = Vec::new();
    if ints.first().is_some_and(Zero::is_zero) {
        roots.push(Rational::zero());
        while ints.first().is_some_and(Zero::is_zero) {
            ints.remove(0);
        }
    }
    if ints.len() > 1 {
        let ps = divisors(&ints[0])?;
        let qs = divisors(ints.last().expect("nonempty"))?;
        let poly: Vec<Rational> = ints.iter().cloned().map(Rational::from).collect();
        for &p in &ps {
            for &q in &qs {
                for sign in [1i64, -1] {
                    let cand = Rational::new(BigInt::from(p) * sign, BigInt::from(q)).expect("q > 0");
                    if !roots.contains(&cand) && eval(&poly, &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

/// All hom-submodules of `m`, when enumerable. Fails unless `α_M` or some
/// action matrix has `dim M` distinct rational eigenvalues.
pub fn enumerate_submodules(m: &HomModule) -> Result<Vec<SubspaceBasis>, ModuleError> {
    let n = m.dim();
    if n > MAX_ENUMERATION_DIM {
        return Err(ModuleError::NotEnumerable(format!("dimension {n} is too large")));
    }
    let operators = std::iter::once(m.alpha()).chain(m.actions());
    let eigenvectors = operators
        .filter_map(|op| {
            let values = rational_eigenvalues(op)?;
            (values.len() == n).then(|| {
                values
                    .iter()
                    .map(|lambda| {
                        let shifted = op.sub(&Matrix::identity(n).scale(lambda));
                        shifted.nullspace().swap_remove(0)
                    })
                    .collect::<Vec<_>>()
            })
        })
        .next()
        .ok_or_else(|| {
            ModuleError::NotEnumerable("no structure operator has distinct rational eigenvalues".into())
        })?;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let chosen = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| eigenvectors[i].clone());
        let s = SubspaceBasis::span(n, chosen);
        if is_hom_submodule(m, &s) {
            out.push(s);
        }
    }
    out.sort_by_key(SubspaceBasis::dim);
    Ok(out)
}
