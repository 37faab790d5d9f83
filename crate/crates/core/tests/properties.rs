use std::sync::Arc;

use proptest::prelude::*;

use charp_core::ffpoly::{Characteristic, Monomial, MonomialOrder, PolyRing, Polynomial};
use charp_core::frobpure::{special_ideal_lattice, star_closure, RingPresentation};
use charp_core::groebner::{groebner_basis, normal_form};
use charp_core::idealkit::{
    frobenius_power, intersect, minimal_primes_monomial, prime_avoidance_element, pth_root, sum,
    Ideal,
};
use charp_core::skewmod::build_truncation;
use charp_core::stight::{realize_as_s_test_ideal, s_test_ideal, MultSet};

const NAMES: [&str; 4] = ["X", "Y", "Z", "W"];

fn ring(p: u64, n: usize) -> Arc<PolyRing> {
    PolyRing::new(Characteristic::new(p).unwrap(), &NAMES[..n]).unwrap()
}

/// (exponents, coefficient) lists; coefficients are reduced by the ring.
fn raw_poly(n: usize, max_exp: u32, terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, u32)>> {
    proptest::collection::vec((proptest::collection::vec(0..=max_exp, n), 1u32..7), 1..=terms)
}

fn build(r: &Arc<PolyRing>, raw: &[(Vec<u32>, u32)]) -> Polynomial {
    let terms = raw
        .iter()
        .map(|(e, c)| (Monomial::from_exponents(e.clone()), *c))
        .collect();
    Polynomial::from_terms(r, terms)
}

fn ideal(r: &Arc<PolyRing>, raws: &[Vec<(Vec<u32>, u32)>]) -> Ideal {
    Ideal::new(r, raws.iter().map(|t| build(r, t)).collect())
}

fn monomial_ideal(r: &Arc<PolyRing>, exps: &[Vec<u32>]) -> Ideal {
    Ideal::new(
        r,
        exps.iter()
            .map(|e| Polynomial::monomial(r, Monomial::from_exponents(e.clone())))
            .collect(),
    )
}

fn squarefree(n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    proptest::collection::vec(proptest::collection::vec(0u32..=1, n), 1..=4)
        .prop_filter("needs a proper nonzero generator", |v| {
            v.iter().all(|e| e.iter().any(|&x| x > 0))
        })
}

fn all_monomials(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let used: u32 = v.iter().sum();
                (0..=d - used).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::from_exponents).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent(
        p in prop::sample::select(vec![2u64, 3, 5]),
        gens in proptest::collection::vec(raw_poly(3, 3, 3), 1..=3),
        f in raw_poly(3, 4, 5),
    ) {
        let r = ring(p, 3);
        let i = ideal(&r, &gens);
        let gb = i.basis().unwrap();
        let f = build(&r, &f);
        let nf = normal_form(&f, gb);
        prop_assert_eq!(normal_form(&nf, gb), nf.clone());
        prop_assert!(i.contains(&(&f - &nf)).unwrap());
    }

    #[test]
    fn basis_ignores_generator_order(
        gens in proptest::collection::vec(raw_poly(3, 2, 3), 2..=4),
        rot in 0usize..4,
    ) {
        let r = ring(3, 3);
        let mut polys: Vec<Polynomial> = gens.iter().map(|t| build(&r, t)).collect();
        let a = groebner_basis(&polys, MonomialOrder::GrevLex).unwrap();
        polys.reverse();
        let k = rot % polys.len();
        polys.rotate_left(k);
        let b = groebner_basis(&polys, MonomialOrder::GrevLex).unwrap();
        prop_assert_eq!(a.generators(), b.generators());
    }

    #[test]
    fn monomial_membership_is_divisibility(
        n in 1usize..=4,
        seed in proptest::collection::vec(proptest::collection::vec(0u32..=3, 4), 1..=4),
    ) {
        let r = ring(2, n);
        let exps: Vec<Vec<u32>> = seed.iter().map(|e| e[..n].to_vec()).collect();
        let i = monomial_ideal(&r, &exps);
        let gens: Vec<Monomial> = exps.iter().cloned().map(Monomial::from_exponents).collect();
        for m in all_monomials(n, 6) {
            let oracle = gens.iter().any(|g| g.divides(&m));
            prop_assert_eq!(i.contains(&Polynomial::monomial(&r, m.clone())).unwrap(), oracle, "{}", m.degree());
        }
    }

    #[test]
    fn frobenius_distributes_over_sums(
        p in prop::sample::select(vec![2u64, 3]),
        a in proptest::collection::vec(raw_poly(3, 2, 3), 1..=2),
        b in proptest::collection::vec(raw_poly(3, 2, 3), 1..=2),
    ) {
        let r = ring(p, 3);
        let (i, j) = (ideal(&r, &a), ideal(&r, &b));
        let lhs = frobenius_power(&sum(&i, &j).unwrap(), 1).unwrap();
        let rhs = sum(&frobenius_power(&i, 1).unwrap(), &frobenius_power(&j, 1).unwrap()).unwrap();
        prop_assert!(lhs.same_ideal(&rhs).unwrap());
    }

    #[test]
    fn frobenius_distributes_over_monomial_intersections(
        p in prop::sample::select(vec![2u64, 3]),
        a in proptest::collection::vec(proptest::collection::vec(0u32..=3, 3), 1..=3),
        b in proptest::collection::vec(proptest::collection::vec(0u32..=3, 3), 1..=3),
    ) {
        let r = ring(p, 3);
        let (i, j) = (monomial_ideal(&r, &a), monomial_ideal(&r, &b));
        let lhs = frobenius_power(&intersect(&i, &j).unwrap(), 1).unwrap();
        let rhs = intersect(&frobenius_power(&i, 1).unwrap(), &frobenius_power(&j, 1).unwrap()).unwrap();
        prop_assert!(lhs.same_ideal(&rhs).unwrap());
    }

    #[test]
    fn minimal_primes_intersect_to_squarefree_ideal(n in 2usize..=4, seed in squarefree(4)) {
        let r = ring(2, n);
        let exps: Vec<Vec<u32>> = seed.iter().map(|e| e[..n].to_vec()).filter(|e| e.iter().any(|&x| x > 0)).collect();
        prop_assume!(!exps.is_empty());
        let i = monomial_ideal(&r, &exps);
        let primes = minimal_primes_monomial(&i).unwrap();
        let mut acc = Ideal::unit(&r);
        for q in primes.iter() {
            prop_assert!(q.contains_ideal(&i).unwrap());
            acc = intersect(&acc, q).unwrap();
        }
        prop_assert!(acc.same_ideal(&i).unwrap());
    }

    #[test]
    fn avoidance_element_avoids(seed in squarefree(3), avoid_mask in 0u32..8) {
        let r = ring(2, 3);
        let i = monomial_ideal(&r, &seed);
        let avoid: Vec<Ideal> = (0..3)
            .filter(|k| avoid_mask & (1 << k) != 0)
            .map(|k| Ideal::from_variables(&r, &[k]))
            .filter(|q| !q.contains_ideal(&i).unwrap())
            .collect();
        let g = prime_avoidance_element(&i, &avoid).unwrap();
        prop_assert!(i.contains(&g).unwrap());
        for q in &avoid {
            prop_assert!(!q.contains(&g).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pth_root_is_left_adjoint(
        p in prop::sample::select(vec![2u64, 3]),
        j in proptest::collection::vec(raw_poly(3, 4, 3), 1..=3),
        k in proptest::collection::vec(raw_poly(3, 2, 2), 1..=3),
        widen in any::<bool>(),
    ) {
        let r = ring(p, 3);
        let j = ideal(&r, &j);
        let root = pth_root(&j);
        let k = if widen { sum(&root, &ideal(&r, &k)).unwrap() } else { ideal(&r, &k) };
        let left = k.contains_ideal(&root).unwrap();
        let right = frobenius_power(&k, 1).unwrap().contains_ideal(&j).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(frobenius_power(&root, 1).unwrap().contains_ideal(&j).unwrap());
    }

    #[test]
    fn x_is_frobenius_semilinear(
        p in prop::sample::select(vec![2u64, 3]),
        rr in raw_poly(3, 2, 3),
        h in raw_poly(3, 3, 4),
        g in raw_poly(3, 3, 4),
        c in 0u32..3,
        level in 0u32..2,
    ) {
        let ring = ring(p, 3);
        let pres = RingPresentation::new(Ideal::parse(&ring, "X*Y, X*Z, Y*Z").unwrap()).unwrap();
        let t = build_truncation(&pres, &Ideal::parse(&ring, "X + Y").unwrap(), 2, 4).unwrap();
        let (rr, h, g) = (build(&ring, &rr), build(&ring, &h), build(&ring, &g));
        let c = c % p as u32;
        let lhs = t.x_map(level, &(&rr * &h).add_scaled(&g, c)).unwrap();
        let rhs = (&rr.frobenius(1).unwrap() * &t.x_map(level, &h).unwrap())
            .add_scaled(&t.x_map(level, &g).unwrap(), c);
        prop_assert!(t.reduce(level + 1, &(&lhs - &rhs)).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn stanley_reisner_lattice_invariants(
        p in prop::sample::select(vec![2u64, 3]),
        n in 2usize..=4,
        seed in squarefree(4),
    ) {
        let r = ring(p, n);
        let exps: Vec<Vec<u32>> = seed.iter().map(|e| e[..n].to_vec()).filter(|e| e.iter().any(|&x| x > 0)).collect();
        prop_assume!(!exps.is_empty());
        let a = monomial_ideal(&r, &exps);
        let pres = RingPresentation::new(a).unwrap();
        prop_assert!(pres.is_f_pure());
        let l = special_ideal_lattice(&pres).unwrap();
        let s = l.verify_structure().unwrap();
        prop_assert!(s.ok(), "{:?}", s.failures);
        for b in l.members() {
            let m = realize_as_s_test_ideal(&l, b, &pres).unwrap();
            prop_assert!(s_test_ideal(&l, &m, &pres).unwrap().same_ideal(b).unwrap());
            prop_assert!(star_closure(b, &pres).unwrap().same_ideal(b).unwrap());
        }
        // smaller S meets fewer primes, so its test ideal is larger
        let primes = l.primes().to_vec();
        for (i, q1) in primes.iter().enumerate() {
            for q2 in &primes[i..] {
                let small = MultSet::ComplementOfPrimes(vec![q1.clone(), q2.clone()]);
                let big = MultSet::ComplementOfPrimes(vec![q1.clone()]);
                let t_small = s_test_ideal(&l, &small, &pres).unwrap();
                let t_big = s_test_ideal(&l, &big, &pres).unwrap();
                prop_assert!(t_small.contains_ideal(&t_big).unwrap());
            }
        }
    }

    #[test]
    fn star_closure_is_monotone(
        a in squarefree(3),
        b in proptest::collection::vec(proptest::collection::vec(0u32..=2, 3), 1..=2),
        c in proptest::collection::vec(proptest::collection::vec(0u32..=2, 3), 1..=2),
    ) {
        let r = ring(2, 3);
        let pres = RingPresentation::new(monomial_ideal(&r, &a)).unwrap();
        let small = monomial_ideal(&r, &b);
        let large = sum(&small, &monomial_ideal(&r, &c)).unwrap();
        let s = star_closure(&small, &pres).unwrap();
        let l = star_closure(&large, &pres).unwrap();
        prop_assert!(l.contains_ideal(&s).unwrap());
        prop_assert!(s.contains_ideal(&small).unwrap());
    }
}
