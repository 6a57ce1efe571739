mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use homore::homring::Algebra;
use homore::hommodule::{
    enumerate_submodules, generated_submodule, is_hom_submodule, maximal_elements, module_axioms_check,
    morphism_check, parse_module, preimage, quotient_module, render_module, third_iso_witness, HomModule,
    ModuleSide,
};
use homore::linalg::SubspaceBasis;

fn enumerable_modules() -> Vec<HomModule> {
    let mut out = Vec::new();
    for side in [ModuleSide::Right, ModuleSide::Left] {
        out.push(HomModule::regular(&Algebra::diagonal(&v(&[1, 2, 3])), side));
        out.push(HomModule::regular(&Algebra::diagonal(&v(&[-1, 1])), side));
        for n in 2..=3 {
            out.push(HomModule::regular(&twisted_truncated(n, &q(3)), side));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn closure_is_a_submodule(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&mut rng);
        let s: Vec<_> = (0..rng.gen_range(1..=3)).map(|_| random_vector(&mut rng, m.dim())).collect();
        let n = generated_submodule(&m, &s).unwrap();
        prop_assert!(is_hom_submodule(&m, &n));
        prop_assert!(s.iter().all(|x| n.contains(x)));
    }

    #[test]
    fn third_isomorphism(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&mut rng);
        let n = random_submodule(&mut rng, &m);
        let l = random_submodule_inside(&mut rng, &m, &n);
        let w = third_iso_witness(&m, &n, &l).unwrap();
        prop_assert!(w.verify());
        prop_assert_eq!(w.iso.source().dim(), m.dim() - n.dim());
    }

    #[test]
    fn quotients_satisfy_the_axioms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&mut rng);
        let n = random_submodule(&mut rng, &m);
        let (quot, proj) = quotient_module(&m, &n).unwrap();
        prop_assert!(module_axioms_check(&quot).passed());
        prop_assert!(morphism_check(&proj).passed());
    }

    #[test]
    fn module_file_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&mut rng);
        let ring = m.ring().clone();
        let text = render_module(&m);
        let back = parse_module(&text, |name| (name == ring.name()).then(|| ring.clone())).unwrap();
        prop_assert_eq!(back.alpha(), m.alpha());
        prop_assert_eq!(back.actions(), m.actions());
        prop_assert_eq!(back.side(), m.side());
    }
}

/// Every validated submodule containing `S` contains its closure.
#[test]
fn closure_is_least() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut containers = 0;
    for m in enumerable_modules() {
        let lattice = enumerate_submodules(&m).unwrap();
        for _ in 0..5 {
            let s = vec![random_vector(&mut rng, m.dim())];
            let closure = generated_submodule(&m, &s).unwrap();
            for k in lattice.iter().filter(|k| k.contains(&s[0])) {
                assert!(is_hom_submodule(&m, k));
                assert!(closure.is_subspace_of(k));
                containers += 1;
            }
            assert!(lattice.contains(&closure));
        }
    }
    assert!(containers >= 20, "only {containers} containers");
}

/// Maximal members of a family in `M/N` pull back to the maximal members of
/// the pulled-back family.
#[test]
fn surjections_preserve_maximal_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for m in enumerable_modules() {
        for n in enumerate_submodules(&m).unwrap() {
            let (quot, proj) = quotient_module(&m, &n).unwrap();
            let lattice = enumerate_submodules(&quot).unwrap();
            for _ in 0..4 {
                let family: Vec<SubspaceBasis> =
                    lattice.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
                if family.is_empty() {
                    continue;
                }
                let pulled: Vec<_> = family.iter().map(|s| preimage(&proj, s)).collect();
                let mut expected: Vec<_> =
                    maximal_elements(&family).unwrap().iter().map(|s| preimage(&proj, s)).collect();
                let mut got = maximal_elements(&pulled).unwrap();
                expected.sort_by_key(|s| s.render());
                got.sort_by_key(|s| s.render());
                assert_eq!(got, expected, "in {}", m.name());
            }
        }
    }
}

#[test]
fn correspondence_through_pullback() {
    for m in enumerable_modules() {
        let lattice = enumerate_submodules(&m).unwrap();
        for n in &lattice {
            let (quot, proj) = quotient_module(&m, n).unwrap();
            for s in enumerate_submodules(&quot).unwrap() {
                let k = preimage(&proj, &s);
                assert!(n.is_subspace_of(&k));
                assert!(lattice.contains(&k));
                let image = SubspaceBasis::span(quot.dim(), k.rows().iter().map(|r| proj.apply(r)));
                assert_eq!(image, s);
            }
        }
    }
}

#[test]
fn enumerated_lattice_is_exactly_the_submodules() {
    for m in enumerable_modules() {
        let lattice = enumerate_submodules(&m).unwrap();
        assert!(lattice.iter().all(|s| is_hom_submodule(&m, s)));
        for s in &lattice {
            for t in &lattice {
                assert!(lattice.contains(&s.sum(t)));
                assert!(lattice.contains(&s.intersection(t)));
            }
        }
    }
}
