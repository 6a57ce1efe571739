use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use homore::linalg::Matrix;
use homore::ore::instances::{inner_derivation_quaternions, quantum_plane, twisted_quaternions};
use homore::ore::{
    check_ore_hom_associativity, convert_form, opposite_iso, random_poly, FormDirection, OreContext, OrePoly,
};
use homore::ring::{Ring, SampleBound};
use homore::weyl::{build_weyl, AlphaMode};

/// Both one-step recursions for `π_l^{m+1}` agree with each other and with `π`.
fn recursions_agree<R: Ring>(ctx: &OreContext<R>, l: usize, m: usize, a: &R::Elem) -> bool {
    let ring = ctx.ring();
    let (sigma, delta) = (ctx.sigma(), ctx.delta());
    let pi = |i: i64, a: &R::Elem| ctx.pi(i, m, a);
    let l = l as i64;
    let inner = ring.add(&pi(l - 1, &sigma.apply(a)), &pi(l, &delta.apply(a)));
    let outer = ring.add(&sigma.apply(&pi(l - 1, a)), &delta.apply(&pi(l, a)));
    inner == outer && inner == ctx.pi(l, m + 1, a)
}

fn finite_contexts() -> Vec<OreContext<homore::homring::Algebra>> {
    vec![quantum_plane(), twisted_quaternions(), inner_derivation_quaternions()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pi_recursions(seed in any::<u64>(), l in 0usize..=5, m in 0usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bound = SampleBound::default();
        let weyl = build_weyl(AlphaMode::Zero).unwrap();
        let a = weyl.ring().sample(&mut rng, &bound);
        prop_assert!(recursions_agree(&weyl, l, m, &a));
        for ctx in finite_contexts() {
            let a = ctx.ring().sample(&mut rng, &bound);
            prop_assert!(recursions_agree(&ctx, l, m, &a));
        }
    }

    #[test]
    fn degree_bound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bound = SampleBound::default().with_degree(2);
        let weyl = build_weyl(AlphaMode::Identity).unwrap();
        let p = random_poly(&weyl, &mut rng, 3, &bound);
        let q = random_poly(&weyl, &mut rng, 3, &bound);
        let pq = &p * &q;
        if let (Some(dp), Some(dq)) = (p.degree().finite(), q.degree().finite()) {
            // σ = id and the octonions have no zero divisors.
            prop_assert_eq!(pq.degree().finite(), Some(dp + dq));
        } else {
            prop_assert!(pq.is_zero());
        }
        for ctx in finite_contexts() {
            let p = random_poly(&ctx, &mut rng, 3, &bound);
            let q = random_poly(&ctx, &mut rng, 3, &bound);
            let bound_deg = p.degree().finite().unwrap_or(0) + q.degree().finite().unwrap_or(0);
            prop_assert!((&p * &q).degree().finite().is_none_or(|d| d <= bound_deg));
        }
    }

    #[test]
    fn alpha_extension_is_additive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bound = SampleBound::default();
        for ctx in finite_contexts() {
            let p = random_poly(&ctx, &mut rng, 4, &bound);
            let q = random_poly(&ctx, &mut rng, 4, &bound);
            prop_assert_eq!((&p + &q).alpha_extend(), &p.alpha_extend() + &q.alpha_extend());
        }
    }

    #[test]
    fn form_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bound = SampleBound::default();
        for ctx in finite_contexts() {
            let p = random_poly(&ctx, &mut rng, 6, &bound);
            let terms: Vec<_> = p.terms().map(|(k, c)| (k, c.clone())).collect();
            let left = convert_form(&ctx, &terms, FormDirection::RightToLeft).unwrap();
            let back = convert_form(&ctx, &left, FormDirection::LeftToRight).unwrap();
            prop_assert_eq!(back, terms);
        }
    }

    #[test]
    fn hom_associative_instances(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bound = SampleBound::default();
        for ctx in finite_contexts() {
            let report = check_ore_hom_associativity(&ctx, 5, 3, &bound, &mut rng);
            prop_assert!(report.passed());
        }
    }
}

#[test]
fn opposite_iso_is_bijective_to_degree_six() {
    for ctx in [quantum_plane(), twisted_quaternions(), inner_derivation_quaternions()] {
        let op = ctx.opposite().unwrap();
        let dim = ctx.ring().dim();
        let mut rows = Vec::new();
        for k in 0..=6 {
            for i in 0..dim {
                let image = opposite_iso(&OrePoly::monomial(&op, ctx.ring().basis(i), k), &ctx).unwrap();
                assert!(image.degree().finite().unwrap() <= 6);
                rows.push((0..=6).flat_map(|j| image.coefficient(j).coords().to_vec()).collect());
            }
        }
        assert_eq!(Matrix::from_rows(rows).rank(), 7 * dim);
    }
}

#[test]
fn opposite_iso_fixes_constants() {
    let ctx = quantum_plane();
    let op = ctx.opposite().unwrap();
    let a = ctx.ring().basis(2);
    assert_eq!(opposite_iso(&OrePoly::constant(&op, a.clone()), &ctx).unwrap(), OrePoly::constant(&ctx, a));
}
