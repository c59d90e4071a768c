//! Acceptance suite: one test per release criterion, exact tolerances.
//!
//! Run with `cargo test -p diamond-core --test acceptance -- --nocapture`
//! to see one PASS line per criterion.

use diamond_core::classify::{classify_with_seed, verify_witness};
use diamond_core::env::{supercentralizing_chain, EnvAlgebra, EnvElement};
use diamond_core::exactmath::{rat, RationalMatrix};
use diamond_core::factors::{
    clifford_center_dim, heisenberg_to_weyl, stafford_alpha, WeylElement,
};
use diamond_core::indexcalc::{has_diamond_with_seed, index_with_seed};
use diamond_core::liealg::{
    catalog, parse_catalog_spec, test_catalog, LieSuperAlgebra, Vector,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

fn named(name: &str) -> LieSuperAlgebra {
    catalog(&parse_catalog_spec(name).unwrap()).unwrap()
}

fn index_of(g: &LieSuperAlgebra) -> usize {
    index_with_seed(&g.even_part(), 0).unwrap().index
}

fn random_invertible_graded(
    rng: &mut ChaCha8Rng,
    g: &LieSuperAlgebra,
    height: i64,
) -> RationalMatrix {
    let n = g.dim();
    loop {
        let mut p = RationalMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                if (i < g.dim_even()) == (j < g.dim_even()) {
                    *p.at_mut(i, j) = rat(rng.gen_range(-height..=height));
                }
            }
        }
        if p.inverse().is_some() {
            return p;
        }
    }
}

fn random_element(env: &Arc<EnvAlgebra>, rng: &mut ChaCha8Rng, max_degree: u32) -> EnvElement {
    let monomials = env.monomials_up_to(max_degree);
    let mut acc = env.zero();
    for _ in 0..rng.gen_range(1..=4usize) {
        let m = &monomials[rng.gen_range(0..monomials.len())];
        let c = rat(rng.gen_range(-9..=9i64));
        if c == rat(0) {
            continue;
        }
        let mut term = env.scalar(c);
        for (pos, &e) in m.0.iter().enumerate() {
            for _ in 0..e {
                term = term.mul(&env.generator(pos)).unwrap();
            }
        }
        acc = acc.add(&term);
    }
    acc
}

#[test]
fn criterion_01_index_table() {
    assert_eq!(index_of(&named("h5")), 3, "index(h5)");
    assert_eq!(index_of(&named("h6")), 4, "index(h6)");
    for n in 1..=4usize {
        assert_eq!(index_of(&named(&format!("heis:{n}"))), 1, "index(H_{})", 2 * n + 1);
    }
    for n in 3..=8usize {
        assert_eq!(index_of(&named(&format!("filiform:{n}"))), n - 2, "index(L_{n})");
    }
    println!("[PASS] criterion 1: index table (h5=3, h6=4, Heisenberg=1, filiform=n-2), exact");
}

#[test]
fn criterion_02_diamond_decisions() {
    let diamond = |g: &LieSuperAlgebra| has_diamond_with_seed(g, 0).unwrap();
    // positives
    assert!(diamond(&named("h5")));
    assert!(diamond(&named("h6")));
    for n in 3..=8usize {
        assert!(diamond(&named(&format!("filiform:{n}"))), "L_{n}");
    }
    assert!(diamond(&named("heis:1")), "H_3");
    for k in 0..=3usize {
        let g = named("h5").direct_product(&LieSuperAlgebra::abelian(k, 0));
        assert!(diamond(&g), "h5 x C^{k}");
    }
    for m in 1..=4usize {
        assert!(diamond(&named(&format!("heis_super:odd,{m}"))), "odd form m={m}");
    }
    // negatives
    for n in 2..=4usize {
        assert!(!diamond(&named(&format!("heis:{n}"))), "H_{}", 2 * n + 1);
    }
    for (p, q) in [(2usize, 1usize), (2, 2), (3, 1)] {
        let g = named(&format!("heis_super:even,{p},{q}"));
        assert!(g.dim_even() >= 5);
        assert!(!diamond(&g), "even form p={p} q={q}");
    }
    println!("[PASS] criterion 2: diamond decisions on the catalog, exact booleans");
}

#[test]
fn criterion_03_equivalence_cross_validation() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3ade);
    let mut checked = 0usize;
    for (label, g) in test_catalog() {
        if g.dim() == 0 {
            continue;
        }
        let mut conjugates: Vec<LieSuperAlgebra> = vec![g.clone()];
        for _ in 0..50 {
            let p = random_invertible_graded(&mut rng, &g, 5);
            conjugates.push(g.change_basis(&p).unwrap());
        }
        for (round, h) in conjugates.iter().enumerate() {
            let diamond = has_diamond_with_seed(h, round as u64).unwrap();
            let result = classify_with_seed(&h.even_part(), round as u64).unwrap();
            assert_eq!(
                diamond,
                result.has_diamond(),
                "{label} conjugate {round}: criterion (c) disagrees with classification (d)"
            );
            assert!(
                verify_witness(&h.even_part(), &result),
                "{label} conjugate {round}: witness failed verification"
            );
            checked += 1;
        }
    }
    println!(
        "[PASS] criterion 3: diamond criterion and classification agree with verified \
         witnesses on {checked} algebras (catalog + 50 conjugates each), zero mismatches"
    );
}

#[test]
fn criterion_04_index_additivity() {
    let catalog_list = test_catalog();
    let mut checked = 0usize;
    for (la, a) in &catalog_list {
        let ia = index_of(a);
        for (lb, b) in &catalog_list {
            let ib = index_of(b);
            let product = a.direct_product(b);
            assert_eq!(
                index_of(&product),
                ia + ib,
                "index additivity fails for {la} x {lb}"
            );
            checked += 1;
        }
    }
    println!("[PASS] criterion 4: index additivity on all {checked} catalog pairs, exact");
}

#[test]
fn criterion_05_parity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a81);
    let catalog_list = test_catalog();
    let mut tested = 0usize;
    for (label, g) in &catalog_list {
        let even = g.even_part();
        assert_eq!((even.dim() - index_of(g)) % 2, 0, "{label}");
        tested += 1;
    }
    // 200 random conjugates spread over the catalog
    let mut conjugates = 0usize;
    'outer: loop {
        for (label, g) in &catalog_list {
            if g.dim() == 0 {
                continue;
            }
            let p = random_invertible_graded(&mut rng, g, 5);
            let h = g.change_basis(&p).unwrap();
            let even = h.even_part();
            assert_eq!((even.dim() - index_of(&h)) % 2, 0, "{label} conjugate");
            conjugates += 1;
            tested += 1;
            if conjugates == 200 {
                break 'outer;
            }
        }
    }
    println!("[PASS] criterion 5: dim - index is even on {tested} algebras (incl. 200 conjugates)");
}

#[test]
fn criterion_06_enveloping_property_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e5);
    let mut associativity = 0usize;
    for (label, g) in test_catalog() {
        if g.dim() == 0 {
            continue;
        }
        let env = EnvAlgebra::new(g.clone()).unwrap();
        // associativity on 200 random triples of degree <= 3
        for _ in 0..200 {
            let a = random_element(&env, &mut rng, 3);
            let b = random_element(&env, &mut rng, 3);
            let c = random_element(&env, &mut rng, 3);
            let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{label}: associativity");
            associativity += 1;
        }
        let n = g.dim();
        // graded commutation of adjoint derivations on all basis pairs
        for i in 0..n {
            for j in 0..n {
                let x = Vector::basis(n, i);
                let y = Vector::basis(n, j);
                let u = random_element(&env, &mut rng, 3);
                let xy = env.ad(&x, &env.ad(&y, &u).unwrap()).unwrap();
                let yx = env.ad(&y, &env.ad(&x, &u).unwrap()).unwrap();
                let sign = if i >= g.dim_even() && j >= g.dim_even() { rat(-1) } else { rat(1) };
                let lhs = xy.sub(&yx.scale(&sign));
                let bracket = g.bracket(&x, &y).unwrap();
                let rhs = env.embed_vector(&bracket).unwrap().supercommutator(&u).unwrap();
                assert_eq!(lhs, rhs, "{label}: derivation commutation at ({i},{j})");
            }
        }
        // super-Leibniz on random homogeneous pairs
        for i in 0..n {
            let x = Vector::basis(n, i);
            let x_odd = i >= g.dim_even();
            for _ in 0..5 {
                let (u0, u1) = random_element(&env, &mut rng, 2).graded_parts();
                for (u, u_odd) in [(u0, false), (u1, true)] {
                    if u.is_zero() {
                        continue;
                    }
                    let v = random_element(&env, &mut rng, 2);
                    let lhs = env.ad(&x, &u.mul(&v).unwrap()).unwrap();
                    let sign = if x_odd && u_odd { rat(-1) } else { rat(1) };
                    let rhs = env
                        .ad(&x, &u)
                        .unwrap()
                        .mul(&v)
                        .unwrap()
                        .add(&u.mul(&env.ad(&x, &v).unwrap()).unwrap().scale(&sign));
                    assert_eq!(lhs, rhs, "{label}: super-Leibniz at {i}");
                }
            }
        }
        // odd adjoints square to zero on g
        for i in g.dim_even()..n {
            let y = Vector::basis(n, i);
            for j in 0..n {
                let u = env.embed_vector(&Vector::basis(n, j)).unwrap();
                assert!(
                    env.ad(&y, &env.ad(&y, &u).unwrap()).unwrap().is_zero(),
                    "{label}: ad odd squared on g"
                );
            }
        }
        // sigma: automorphism, fixes the even part, negates the odd part
        let a = random_element(&env, &mut rng, 3);
        let b = random_element(&env, &mut rng, 3);
        assert_eq!(a.sigma().sigma(), a, "{label}: sigma involutive");
        assert_eq!(
            a.mul(&b).unwrap().sigma(),
            a.sigma().mul(&b.sigma()).unwrap(),
            "{label}: sigma multiplicative"
        );
        let (a0, a1) = a.graded_parts();
        assert_eq!(a.sigma(), a0.sub(&a1), "{label}: sigma grading");
    }
    println!(
        "[PASS] criterion 6: enveloping-algebra property suite ({associativity} associativity \
         triples, derivation commutation, super-Leibniz, odd squares, sigma), zero violations"
    );
}

#[test]
fn criterion_07_supercentral_extraction() {
    // the three worked examples over U(H_3)
    let env = EnvAlgebra::new(named("heis:1")).unwrap();
    let h = env.basis_element("h").unwrap();
    assert_eq!(env.extract_supercentral(&env.basis_element("y1").unwrap()).unwrap(), h);
    assert_eq!(env.extract_supercentral(&h).unwrap(), h);
    let xy = env.parse_element("x1*y1").unwrap();
    assert_eq!(
        env.extract_supercentral(&xy).unwrap(),
        env.parse_element("-h^2").unwrap()
    );

    // 100 seeded random nonzero inputs of degree <= 3 per catalog algebra
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ac7);
    let mut extracted = 0usize;
    for (label, g) in test_catalog() {
        if g.dim() == 0 {
            continue;
        }
        let env = EnvAlgebra::new(g).unwrap();
        let mut done = 0;
        while done < 100 {
            let a = random_element(&env, &mut rng, 3);
            if a.is_zero() {
                continue;
            }
            let s = env.extract_supercentral(&a).unwrap();
            assert!(!s.is_zero(), "{label}: extraction returned zero");
            assert!(env.is_supercentral(&s), "{label}: extraction not supercentral");
            done += 1;
            extracted += 1;
        }
    }
    println!(
        "[PASS] criterion 7: supercentral extraction exact on the three worked examples \
         and nonzero supercentral on {extracted} random inputs"
    );
}

#[test]
fn criterion_08_supercentralizing_chain() {
    let env = EnvAlgebra::new(named("heis:1")).unwrap();
    let x = env.basis_element("x1").unwrap();
    let result = supercentralizing_chain(&env, std::slice::from_ref(&x), 4).unwrap();
    assert!(result.complete, "chain on {{x}} must complete at degree 4");
    assert_eq!(result.elements.len(), 2);
    assert!(env.is_supercentral(&result.elements[0]), "first chain element supercentral");
    assert!(
        result.ideal.span().contains(&result.elements[0]),
        "first chain element lies in the truncated span"
    );

    let gens = vec![
        env.basis_element("x1").unwrap(),
        env.basis_element("y1").unwrap(),
        env.basis_element("h").unwrap(),
    ];
    let result = supercentralizing_chain(&env, &gens, 4).unwrap();
    assert!(result.complete, "chain on {{x, y, h}} must complete at degree 4");
    assert_eq!(result.elements.len(), 3);
    println!("[PASS] criterion 8: supercentralizing chains complete with lengths 2 and 3");
}

#[test]
fn criterion_09_factors() {
    // Weyl relation, exactly
    let y1 = WeylElement::y(1, 1);
    let x1 = WeylElement::x(1, 1);
    assert_eq!(y1.mul(&x1).unwrap(), WeylElement::parse(1, "x1*y1 - 1").unwrap());

    // Clifford center dimensions for q = 1..5
    assert_eq!(
        (1..=5).map(clifford_center_dim).collect::<Vec<_>>(),
        vec![2, 1, 2, 1, 2]
    );

    // quotient map is a homomorphism on 100 random pairs
    let env = EnvAlgebra::new(named("heis:2")).unwrap();
    let scale = rat(1);
    let mut rng = ChaCha8Rng::seed_from_u64(0x90a);
    for _ in 0..100 {
        let a = random_element(&env, &mut rng, 3);
        let b = random_element(&env, &mut rng, 3);
        let lhs = heisenberg_to_weyl(&a.mul(&b).unwrap(), &scale).unwrap();
        let rhs = heisenberg_to_weyl(&a, &scale)
            .unwrap()
            .mul(&heisenberg_to_weyl(&b, &scale).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs, "quotient map homomorphism");
    }

    // Stafford element for n = 2, term for term
    let alpha = stafford_alpha(2, &[rat(1)]).unwrap();
    let expected = WeylElement::parse(2, "x1 + x2*y1*y2 + x2 + y2").unwrap();
    assert_eq!(alpha, expected);
    println!(
        "[PASS] criterion 9: factor algebras (Weyl relation, Clifford centers 2,1,2,1,2, \
         100 quotient-map pairs, Stafford element), exact"
    );
}

#[test]
fn criterion_10_scope_documentation() {
    // out-of-scope claims carry no quantitative test; the documentation must
    // acknowledge them
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md"))
        .expect("README.md present at the workspace root");
    for needle in [
        "maximality",
        "Krull",
        "injective hull",
        "not verified",
    ] {
        assert!(
            readme.contains(needle),
            "README must document the out-of-scope claim ({needle})"
        );
    }
    println!("[PASS] criterion 10: out-of-scope claims documented, no quantitative test");
}
