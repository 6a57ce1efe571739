//! Random instances shared by the integration tests.

#![allow(dead_code)]

use rand::Rng;

use homore::exactnum::Rational;
use homore::hommodule::{direct_sum, generated_submodule, quotient_module, HomModule, ModuleSide};
use homore::homring::{scaling_endomorphism, yau_twist, Algebra, AlphaChoice};
use homore::linalg::SubspaceBasis;

pub fn q(n: i64) -> Rational {
    Rational::from(n)
}

pub fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| q(x)).collect()
}

pub fn random_side<G: Rng>(rng: &mut G) -> ModuleSide {
    if rng.gen_bool(0.5) {
        ModuleSide::Right
    } else {
        ModuleSide::Left
    }
}

/// `ℚ[t]/(tⁿ)` twisted along `t ↦ c·t`.
pub fn twisted_truncated(n: usize, c: &Rational) -> Algebra {
    yau_twist(&Algebra::truncated_polynomial(n), &scaling_endomorphism(n, c)).expect("endomorphism")
}

/// A small algebra from one of several families.
pub fn random_algebra<G: Rng>(rng: &mut G) -> Algebra {
    match rng.gen_range(0..4) {
        0 => {
            let n = rng.gen_range(2..=4);
            let c = [q(2), q(3), q(-1), Rational::new(1, 2).unwrap()][rng.gen_range(0..4)].clone();
            twisted_truncated(n, &c)
        }
        1 => {
            let n = rng.gen_range(2..=4);
            let alpha: Vec<Rational> = (0..n).map(|_| q(rng.gen_range(-2..=3))).collect();
            Algebra::diagonal(&alpha)
        }
        2 => Algebra::quaternions(AlphaChoice::Identity),
        _ => Algebra::truncated_polynomial(rng.gen_range(2..=4)),
    }
}

pub fn random_vector<G: Rng>(rng: &mut G, n: usize) -> Vec<Rational> {
    (0..n).map(|_| q(rng.gen_range(-2..=2))).collect()
}

/// Submodule generated by one or two random vectors.
pub fn random_submodule<G: Rng>(rng: &mut G, m: &HomModule) -> SubspaceBasis {
    let count = rng.gen_range(1..=2);
    let vs: Vec<_> = (0..count).map(|_| random_vector(rng, m.dim())).collect();
    generated_submodule(m, &vs).expect("vectors have the module's dimension")
}

/// Submodule generated by random elements of `n`.
pub fn random_submodule_inside<G: Rng>(rng: &mut G, m: &HomModule, n: &SubspaceBasis) -> SubspaceBasis {
    if n.is_zero() {
        return n.clone();
    }
    let coords = random_vector(rng, n.dim());
    generated_submodule(m, &[n.combine(&coords)]).expect("dimension")
}

/// Regular, direct-sum or quotient module over a random algebra.
pub fn random_module<G: Rng>(rng: &mut G) -> HomModule {
    let ring = random_algebra(rng);
    let side = random_side(rng);
    let regular = HomModule::regular(&ring, side);
    match rng.gen_range(0..3) {
        0 => regular,
        1 => direct_sum(&[regular.clone(), regular]).expect("same ring and side"),
        _ => {
            let n = random_submodule(rng, &regular);
            quotient_module(&regular, &n).expect("submodule").0
        }
    }
}
