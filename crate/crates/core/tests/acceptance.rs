//! Acceptance suite: every criterion at its stated size, one line each.
//!
//! Run with `cargo test -p homore --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use homore::exactnum::{cd_mul_recursive, CdElement, Rational};
use homore::hommodule::{
    enumerate_submodules, first_iso_witness, module_axioms_check, preimage,
    quotient_module, second_iso_witness, submodule_as_module, third_iso_witness, chain_stabilization,
    HomModule, ModuleMorphism, ModuleSide,
};
use homore::homring::{Algebra, AlphaChoice};
use homore::linalg::{Matrix, SubspaceBasis};
use homore::ore::instances::{inner_derivation_quaternions, quantum_plane};
use homore::ore::{check_ore_hom_associativity, opposite_iso, random_poly, OreContext, OrePoly};
use homore::ring::{Opposite, Ring, SampleBound};
use homore::weyl::{
    build_weyl, build_weyl_over, octo_delta, reduce, weyl_generators, x_nucleus_check, AlphaMode,
    CdPoly, WeylContext, WeylElement,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pi_oracle<R: Ring>(ctx: &OreContext<R>, rng: &mut ChaCha8Rng, bound: &SampleBound) -> Result<usize, String> {
    let mut checked = 0;
    for m in 0..=6 {
        for i in 0..=m {
            for _ in 0..50 {
                let a = ctx.ring().sample(rng, bound);
                let fast = ctx.pi(i as i64, m, &a);
                let slow = ctx.pi_bruteforce(i, m, &a).map_err(|e| e.to_string())?;
                ensure(fast == slow, || format!("π_{i}^{m} differs from the word sum"))?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let weyl = build_weyl(AlphaMode::Zero).map_err(|e| e.to_string())?;
    let n = pi_oracle(&weyl, &mut rng, &SampleBound::default())?;
    let n2 = pi_oracle(&quantum_plane(), &mut rng, &SampleBound::default())?;
    Ok(format!("{n} coefficients in O[Y], {n2} in the twisted quantum plane"))
}

/// `Σ_i π_i^m(a·π_{l−i}^n(b))` and `Σ_i π_i^m(a)·π_l^{i+n}(b)`.
fn pi_sum_sides<R: Ring>(ctx: &OreContext<R>, l: usize, m: usize, n: usize, a: &R::Elem, b: &R::Elem) -> (R::Elem, R::Elem) {
    let ring = ctx.ring();
    let mut lhs = ring.zero();
    let mut rhs = ring.zero();
    for i in 0..=m {
        let inner = ctx.pi(l as i64 - i as i64, n, b);
        lhs = ring.add(&lhs, &ctx.pi(i as i64, m, &ring.mul(a, &inner)));
        rhs = ring.add(&rhs, &ring.mul(&ctx.pi(i as i64, m, a), &ctx.pi(l as i64, i + n, b)));
    }
    (lhs, rhs)
}

fn pi_sum_check<R: Ring>(ctx: &OreContext<R>, rng: &mut ChaCha8Rng, bound: &SampleBound) -> Result<usize, String> {
    let mut checked = 0;
    for l in 0..=4 {
        for m in 0..=4 {
            for n in 0..=4 {
                for _ in 0..25 {
                    let a = ctx.ring().sample(rng, bound);
                    let b = ctx.ring().sample(rng, bound);
                    let (lhs, rhs) = pi_sum_sides(ctx, l, m, n, &a, &b);
                    ensure(lhs == rhs, || format!("identity fails at (l, m, n) = ({l}, {m}, {n})"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let weyl = build_weyl(AlphaMode::Zero).map_err(|e| e.to_string())?;
    let bound = SampleBound::default().with_degree(2);
    let n1 = pi_sum_check(&weyl, &mut rng, &bound)?;
    let n2 = pi_sum_check(&inner_derivation_quaternions(), &mut rng, &bound)?;
    Ok(format!("{n1} pairs in O[Y] (σ = id, δ = d/dY), {n2} in H with inner σ and δ"))
}

fn hom_assoc<R: Ring>(name: &str, ctx: &OreContext<R>, rng: &mut ChaCha8Rng, bound: &SampleBound) -> Result<(), String> {
    let report = check_ore_hom_associativity(ctx, 200, 4, bound, rng);
    ensure(report.passed(), || format!("{name}: {} failing triples", report.failures.len()))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let bound = SampleBound::default().with_degree(2);
    let octo = build_weyl(AlphaMode::Zero).map_err(|e| e.to_string())?;
    hom_assoc("A(O), α = 0", &octo, &mut rng, &bound)?;
    let quat = build_weyl_over(2, AlphaMode::Identity).map_err(|e| e.to_string())?;
    hom_assoc("A(H), α = id", &quat, &mut rng, &bound)?;
    let qp = quantum_plane();
    let probe = random_poly(&qp, &mut rng, 2, &bound);
    ensure(probe.alpha_extend() != probe || probe.is_zero(), || "α acts trivially".into())?;
    hom_assoc("quantum plane, α = σ", &qp, &mut rng, &bound)?;
    Ok("200 triples of degree ≤ 4 in each of A(O), A(H), the quantum plane".into())
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let ctx = build_weyl(AlphaMode::Zero).map_err(|e| e.to_string())?;
    let bound = SampleBound::default().with_degree(2);
    for k in 0..=4 {
        let report = x_nucleus_check(&ctx, k, 50, 4, &bound, &mut rng);
        ensure(report.passed(), || format!("X^{k}: {} nonzero associators", report.failures.len()))?;
    }
    Ok("k = 0..4, 50 pairs of degree ≤ 4, three placements".into())
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let ctx = quantum_plane();
    let op = ctx.opposite().map_err(|e| e.to_string())?;
    let f = |p: &OrePoly<_>| opposite_iso(p, &ctx).map_err(|e| e.to_string());
    // Oracle: Σ_i Σ_j π_j^i(r_i) X^j with π summed over words. The weak unit
    // rules out multiplying by X^i directly, which would add a factor α.
    let oracle = |p: &OrePoly<Opposite<Algebra>>| -> Result<OrePoly<Algebra>, String> {
        let mut terms = Vec::new();
        for (i, r) in p.terms() {
            for j in 0..=i {
                terms.push((j, ctx.pi_bruteforce(j, i, r).map_err(|e| e.to_string())?));
            }
        }
        Ok(OrePoly::from_terms(&ctx, terms))
    };
    let bound = SampleBound::default();
    let dim = ctx.ring().dim();
    let monomials: Vec<_> = (0..=5)
        .flat_map(|k| (0..dim).map(move |i| (k, i)))
        .map(|(k, i)| OrePoly::monomial(&op, ctx.ring().basis(i), k))
        .collect();
    let mut randoms: Vec<_> = (0..50).map(|_| random_poly(&op, &mut rng, 5, &bound)).collect();
    randoms.extend(monomials.iter().cloned());
    for p in &randoms {
        let fp = f(p)?;
        ensure(fp == oracle(p)?, || format!("f({p}) disagrees with the word-sum expansion"))?;
        ensure(f(&p.alpha_extend())? == fp.alpha_extend(), || format!("f∘α ≠ α∘f at {p}"))?;
    }
    for w in randoms.windows(2) {
        let (p, q) = (&w[0], &w[1]);
        ensure(f(&(p + q))? == &f(p)? + &f(q)?, || format!("not additive at {p}, {q}"))?;
        ensure(f(&(p * q))? == &f(q)? * &f(p)?, || format!("not multiplicative at {p}, {q}"))?;
    }
    for p in &monomials {
        for q in &monomials {
            ensure(f(&(p * q))? == &f(q)? * &f(p)?, || format!("not multiplicative at {p}, {q}"))?;
        }
    }
    // Coordinates of the images in the basis e_i X^k, k ≤ 5.
    let rows: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|p| {
            let fp = f(p)?;
            ensure(fp.degree().finite().unwrap_or(0) <= 5, || "degree grew".into())?;
            Ok((0..=5)
                .flat_map(|k| fp.coefficient(k).coords().to_vec())
                .collect())
        })
        .collect::<Result<_, String>>()?;
    let rank = Matrix::from_rows(rows).rank();
    ensure(rank == monomials.len(), || format!("image rank {rank} of {}", monomials.len()))?;
    Ok(format!(
        "{} polynomials, {} monomial pairs, images of {} monomials independent",
        randoms.len(),
        monomials.len() * monomials.len(),
        monomials.len()
    ))
}

fn octonion_laws(x: &CdElement, y: &CdElement, z: &CdElement) -> Result<(), String> {
    let assoc = |a: &CdElement, b: &CdElement, c: &CdElement| CdElement::associator(a, b, c).expect("level 3");
    let tag = || format!("x = {x}, y = {y}, z = {z}");
    ensure((x * y).coords() == cd_mul_recursive(x.coords(), y.coords()).as_slice(), || {
        format!("table product differs from the doubling formula: {}", tag())
    })?;
    ensure(assoc(x, x, y).is_zero() && assoc(x, y, y).is_zero() && assoc(x, y, x).is_zero(), || {
        format!("not alternative: {}", tag())
    })?;
    ensure(z * &(x * &(z * y)) == &(&(z * x) * z) * y, || format!("left Moufang: {}", tag()))?;
    ensure(x * &(z * &(y * z)) == &(&(x * z) * y) * z, || format!("right Moufang: {}", tag()))?;
    ensure(&(z * x) * &(y * z) == &(z * &(x * y)) * z, || format!("middle Moufang: {}", tag()))?;
    ensure((x * y).norm() == x.norm() * y.norm(), || format!("norm: {}", tag()))?;
    if !x.is_zero() {
        let inv = x.inverse().map_err(|e| e.to_string())?;
        ensure(&inv * &(x * y) == *y, || format!("x⁻¹(xy) ≠ y: {}", tag()))?;
        ensure(&(y * x) * &inv == *y, || format!("(yx)x⁻¹ ≠ y: {}", tag()))?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let bound = SampleBound::default();
    for _ in 0..500 {
        let x = bound.cd_element(&mut rng, 3);
        let y = bound.cd_element(&mut rng, 3);
        let z = bound.cd_element(&mut rng, 3);
        octonion_laws(&x, &y, &z)?;
    }
    let mut nonzero = 0;
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let (x, y, z) = (CdElement::basis(3, i), CdElement::basis(3, j), CdElement::basis(3, k));
                octonion_laws(&x, &y, &z)?;
                if !CdElement::associator(&x, &y, &z).expect("level 3").is_zero() {
                    nonzero += 1;
                }
            }
        }
    }
    ensure(nonzero > 0, || "every basis triple associates".into())?;
    Ok(format!("500 random triples, 512 basis triples, {nonzero} with nonzero associator"))
}

/// Derivative from the coordinates, written independently of `CdPoly`.
fn derivative_oracle(p: &CdPoly) -> CdPoly {
    let mut terms = Vec::new();
    for k in 1..=p.degree().unwrap_or(0) {
        let c = p.coefficient(k);
        let scaled: Vec<Rational> = c.coords().iter().map(|x| x * &Rational::from(k)).collect();
        terms.push((k - 1, CdElement::new(3, scaled).expect("level 3")));
    }
    CdPoly::from_terms(3, terms)
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let ctx = build_weyl(AlphaMode::Zero).map_err(|e| e.to_string())?;
    let (x, y) = weyl_generators(&ctx);
    let comm = &(&x * &y) - &(&y * &x);
    ensure(comm == OrePoly::one(&ctx).expect("unital"), || format!("XY − YX = {comm}"))?;
    let ring = ctx.ring();
    let bound = SampleBound::default();
    for _ in 0..100 {
        let a = ring.sample(&mut rng, &bound);
        let b = ring.sample(&mut rng, &bound);
        let lhs = octo_delta(&a.mul(&b));
        let rhs = a.mul(&octo_delta(&b)).add(&octo_delta(&a).mul(&b));
        ensure(lhs == rhs, || format!("δ(ab) ≠ aδ(b) + δ(a)b for a = {a}, b = {b}"))?;
        ensure(octo_delta(&a) == derivative_oracle(&a), || format!("δ({a}) is not d/dY"))?;
        let ka = OrePoly::constant(&ctx, a.clone());
        let inner = &(&x * &ka) - &(&ka * &x);
        ensure(inner == OrePoly::constant(&ctx, derivative_oracle(&a)), || format!("[X, {a}] ≠ δ(a)"))?;
    }
    Ok("XY − YX = 1; 100 pairs".into())
}

/// Real Weyl element, monic in X.
fn real_generator(ctx: &WeylContext, rng: &mut ChaCha8Rng, xdeg: usize) -> WeylElement {
    let mut terms = Vec::new();
    for k in 0..xdeg {
        let c: Vec<_> = (0..=rng.gen_range(0..=1)).map(|_| (rng.gen_range(0..=2), q(rng.gen_range(-2..=2)))).collect();
        let poly = CdPoly::from_terms(3, c.into_iter().map(|(d, r)| (d, CdElement::scalar(3, r))));
        terms.push((k, poly));
    }
    let lead = CdPoly::one(3);
    terms.push((xdeg, lead));
    OrePoly::from_terms(ctx, terms)
}

fn octonion_unit(rng: &mut ChaCha8Rng) -> CdElement {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    CdElement::basis(3, rng.gen_range(0..8)).scale(&q(sign))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let ctx = build_weyl(AlphaMode::Zero).map_err(|e| e.to_string())?;
    let bound = SampleBound {
        sparsity: 0.6,
        ..SampleBound::default().with_degree(1)
    };
    let konst = |c: CdPoly| OrePoly::constant(&ctx, c);
    let mut built = 0;
    let mut steps = 0;
    let mut over_bound = 0;
    while built < 100 {
        // p·q_j ⊗ u_j with q_0 = 1, all inside p·A_1(Q) ⊗ O.
        let xdeg = rng.gen_range(1..=2);
        let p = real_generator(&ctx, &mut rng, xdeg);
        let mut gens = vec![&p * &konst(CdPoly::constant(octonion_unit(&mut rng)))];
        for _ in 0..rng.gen_range(1..=2) {
            let xdeg = rng.gen_range(0..=1);
            let qj = real_generator(&ctx, &mut rng, xdeg);
            gens.push(&(&p * &qj) * &konst(CdPoly::constant(octonion_unit(&mut rng))));
        }
        for _ in 0..5 {
            let mut f = OrePoly::zero(&ctx);
            for _ in 0..rng.gen_range(1..=3) {
                let g = &gens[rng.gen_range(0..gens.len())];
                let mut t = g.clone();
                for _ in 0..rng.gen_range(1..=2) {
                    t = &t * &konst(ring_sample(&ctx, &mut rng, &bound));
                }
                let shift = OrePoly::x_power(&ctx, rng.gen_range(0..=2)).expect("unital");
                f = &f + &(&t * &shift);
            }
            if f.is_zero() {
                continue;
            }
            let trace = reduce(&f, &gens).map_err(|e| e.to_string())?;
            ensure(trace.remainder.is_zero(), || format!("remainder {} for input {f}", trace.remainder))?;
            ensure(trace.complete && trace.verify(), || format!("trace does not reconstruct {f}"))?;
            ensure(trace.steps.len() <= trace.step_bound(), || format!("{} steps for {f}", trace.steps.len()))?;
            steps += trace.steps.len();
            over_bound += usize::from(trace.steps.len() > trace.naive_step_bound());
            built += 1;
        }
    }
    Ok(format!("{built} elements reduced to 0 in {steps} steps, {over_bound} above the naive step bound"))
}

fn ring_sample(ctx: &WeylContext, rng: &mut ChaCha8Rng, bound: &SampleBound) -> CdPoly {
    loop {
        let c = ctx.ring().sample(rng, bound);
        if !c.is_zero() {
            return c;
        }
    }
}

fn modular_law(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..50 {
        let m = random_module(rng);
        let m1 = random_submodule(rng, &m);
        let m2 = random_submodule(rng, &m);
        let m3 = random_submodule_inside(rng, &m, &m1);
        ensure(m3.is_subspace_of(&m1), || "M3 escaped M1".into())?;
        let lhs = m1.intersection(&m2.sum(&m3));
        let rhs = m1.intersection(&m2).sum(&m3);
        ensure(lhs == rhs, || format!("modular law fails in {}", m.name()))?;
    }
    Ok(())
}

fn iso_theorems(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..25 {
        // f = projection ∘ inclusion : N1 → M → M/N2.
        let m = random_module(rng);
        let n1 = random_submodule(rng, &m);
        let n2 = random_submodule(rng, &m);
        let (sub, incl) = submodule_as_module(&m, &n1).map_err(|e| e.to_string())?;
        let (_, proj) = quotient_module(&m, &n2).map_err(|e| e.to_string())?;
        let f = proj.compose(&incl).map_err(|e| e.to_string())?;
        let w = first_iso_witness(&f).map_err(|e| e.to_string())?;
        ensure(w.iso.verify(), || "first isomorphism witness fails".into())?;
        ensure(w.kernel.dim() == n1.intersection(&n2).dim(), || "kernel is not N1 ∩ N2".into())?;
        ensure(sub.dim() - w.kernel.dim() == w.image.dim(), || "rank-nullity".into())?;
    }
    for _ in 0..25 {
        let m = random_module(rng);
        let n = random_submodule(rng, &m);
        let l = random_submodule(rng, &m);
        let w = second_iso_witness(&m, &n, &l).map_err(|e| e.to_string())?;
        ensure(w.verify(), || "second isomorphism witness fails".into())?;
        ensure(n.dim() - n.intersection(&l).dim() == n.sum(&l).dim() - l.dim(), || "dimension count".into())?;
    }
    for _ in 0..25 {
        let m = random_module(rng);
        let n = random_submodule(rng, &m);
        let l = random_submodule_inside(rng, &m, &n);
        let w = third_iso_witness(&m, &n, &l).map_err(|e| e.to_string())?;
        ensure(w.verify(), || "third isomorphism witness fails".into())?;
    }
    Ok(())
}

/// Small modules whose lattices are enumerable.
fn small_modules() -> Vec<HomModule> {
    let mut out = Vec::new();
    for side in [ModuleSide::Right, ModuleSide::Left] {
        out.push(HomModule::regular(&Algebra::diagonal(&v(&[1, 2, 3])), side));
        out.push(HomModule::regular(&Algebra::diagonal(&v(&[1, -1])), side));
        for n in 2..=3 {
            out.push(HomModule::regular(&twisted_truncated(n, &q(2)), side));
        }
    }
    let t3 = HomModule::regular(&twisted_truncated(3, &q(2)), ModuleSide::Right);
    out.push(quotient_module(&t3, &SubspaceBasis::span(3, [v(&[0, 0, 1])])).expect("ideal").0);
    out
}

fn correspondence() -> Result<usize, String> {
    let mut checked = 0;
    for m in small_modules() {
        let lattice = enumerate_submodules(&m).map_err(|e| format!("{}: {e}", m.name()))?;
        for n in &lattice {
            let (quot, proj) = quotient_module(&m, n).map_err(|e| e.to_string())?;
            let upstairs: Vec<&SubspaceBasis> = lattice.iter().filter(|s| n.is_subspace_of(s)).collect();
            let downstairs = enumerate_submodules(&quot).map_err(|e| format!("{}: {e}", quot.name()))?;
            ensure(upstairs.len() == downstairs.len(), || {
                format!("{}: {} submodules over N, {} in M/N", m.name(), upstairs.len(), downstairs.len())
            })?;
            for s in &downstairs {
                let pre = preimage(&proj, s);
                ensure(upstairs.contains(&&pre), || "preimage is not a submodule over N".into())?;
                let back = SubspaceBasis::span(quot.dim(), pre.rows().iter().map(|r| proj.apply(r)));
                ensure(back == *s, || "image of preimage differs".into())?;
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn chains(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..25 {
        let m = random_module(rng);
        let mut sets = Vec::new();
        let mut acc = Vec::new();
        for _ in 0..(m.dim() + 3) {
            acc.push(random_vector(rng, m.dim()));
            sets.push(acc.clone());
        }
        let report = chain_stabilization(&m, &sets).map_err(|e| e.to_string())?;
        ensure(report.strict_increases <= m.dim(), || {
            format!("{} strict increases in dimension {}", report.strict_increases, m.dim())
        })?;
        let last = report.submodules.last().expect("nonempty");
        ensure(report.submodules[report.index..].iter().all(|s| s == last), || "chain moves after its index".into())?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..30 {
        let m = random_module(&mut rng);
        let report = module_axioms_check(&m);
        ensure(report.passed(), || format!("axioms fail for {}", m.name()))?;
    }
    modular_law(&mut rng)?;
    iso_theorems(&mut rng)?;
    let n = correspondence()?;
    chains(&mut rng)?;
    let _ = ModuleMorphism::identity;
    let _ = AlphaChoice::Identity;
    Ok(format!("axioms on 30 modules, 50 modular triples, 3×25 witnesses, {n} quotients, 25 chains"))
}

struct Criterion {
    id: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: "1 pi oracle equivalence", limit: Duration::from_secs(10), run: criterion_1 },
        Criterion { id: "2 pi sum identity", limit: Duration::from_secs(30), run: criterion_2 },
        Criterion { id: "3 hom-associativity of Ore extensions", limit: Duration::from_secs(60), run: criterion_3 },
        Criterion { id: "4 X^k is nuclear", limit: Duration::from_secs(60), run: criterion_4 },
        Criterion { id: "5 opposite isomorphism", limit: Duration::from_secs(30), run: criterion_5 },
        Criterion { id: "6 octonion laws", limit: Duration::from_secs(10), run: criterion_6 },
        Criterion { id: "7 Weyl relation and derivation law", limit: Duration::from_secs(5), run: criterion_7 },
        Criterion { id: "8 reduction soundness", limit: Duration::from_secs(60), run: criterion_8 },
        Criterion { id: "9 hom-module suite", limit: Duration::from_secs(120), run: criterion_9 },
    ];
    let mut passed = std::collections::BTreeMap::new();
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let ok = match &result {
            Ok(detail) if elapsed <= c.limit => {
                println!("PASS criterion {} ({:.2?} of {:?}): {detail}", c.id, elapsed, c.limit);
                true
            }
            Ok(_) => {
                println!("FAIL criterion {}: took {:.2?}, limit {:?}", c.id, elapsed, c.limit);
                false
            }
            Err(e) => {
                println!("FAIL criterion {} ({:.2?}): {e}", c.id, elapsed);
                false
            }
        };
        passed.insert(c.id.split(' ').next().expect("id").to_string(), ok);
    }
    let covered = ["3", "4", "5", "8"].iter().all(|k| passed[*k]);
    if covered {
        println!("PASS criterion 10 noetherianness: not a runtime property; its ingredients 3, 4, 5, 8 pass");
    } else {
        println!("FAIL criterion 10 noetherianness: an ingredient among 3, 4, 5, 8 failed");
    }
    if !covered || passed.values().any(|ok| !ok) {
        std::process::exit(1);
    }
}
