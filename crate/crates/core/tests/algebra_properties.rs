//! Property tests for the exact kernels: ring axioms, the bar involution,
//! conjugate-transpose anti-multiplicativity, and the two evaluation
//! homomorphisms (reduction mod m and unit specialization).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use artcong_core::graph::{classify, CoxeterGraph, Label};
use artcong_core::laurent::LaurentPoly;
use artcong_core::matrix::{IntMatrix, LaurentMatrix};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i32..=3), (-3i32..=3), (-5i64..=5)), 0..4).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (a, b, c) in terms {
            p = p + LaurentPoly::term(BigInt::from(c), a, b);
        }
        p
    })
}

fn laurent_matrix(n: usize) -> impl Strategy<Value = LaurentMatrix> {
    prop::collection::vec(laurent(), n * n).prop_map(move |entries| {
        let mut m = LaurentMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, entries[i * n + j].clone());
            }
        }
        m
    })
}

fn int_matrix(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-9i64..=9, n * n).prop_map(move |entries| {
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, BigInt::from(entries[i * n + j]));
            }
        }
        m
    })
}

fn graph() -> impl Strategy<Value = CoxeterGraph> {
    (1usize..=6)
        .prop_flat_map(|n| {
            let pairs = n * (n.saturating_sub(1)) / 2;
            (
                Just(n),
                prop::collection::vec(prop_oneof![
                    3 => Just(Label::Finite(2)),
                    2 => Just(Label::Finite(3)),
                    1 => Just(Label::Finite(4)),
                    1 => Just(Label::Finite(6)),
                    1 => Just(Label::Infinity),
                ], pairs),
            )
        })
        .prop_map(|(n, labels)| {
            let mut g = CoxeterGraph::discrete(n);
            let mut idx = 0;
            for i in 1..=n {
                for j in i + 1..=n {
                    g.set_label(i, j, labels[idx]).expect("valid");
                    idx += 1;
                }
            }
            g
        })
}

proptest! {
    #[test]
    fn laurent_ring_axioms(p in laurent(), q in laurent(), r in laurent()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p + &LaurentPoly::zero(), p.clone());
        prop_assert_eq!(&p * &LaurentPoly::one(), p.clone());
        prop_assert_eq!(&p + &(-&p), LaurentPoly::zero());
    }

    #[test]
    fn bar_is_a_ring_involution(p in laurent(), q in laurent()) {
        prop_assert_eq!(p.bar().bar(), p.clone());
        prop_assert_eq!((&p + &q).bar(), &p.bar() + &q.bar());
        prop_assert_eq!((&p * &q).bar(), &p.bar() * &q.bar());
        prop_assert_eq!(LaurentPoly::s().bar(), LaurentPoly::term(BigInt::from(1), -1, 0));
        prop_assert_eq!(LaurentPoly::t().bar(), LaurentPoly::term(BigInt::from(1), 0, -1));
    }

    #[test]
    fn star_reverses_products(a in laurent_matrix(3), b in laurent_matrix(3)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.star(), b.star().mul(&a.star()).unwrap());
        prop_assert_eq!(a.star().star(), a);
    }

    #[test]
    fn reduction_mod_m_is_multiplicative(a in int_matrix(3), b in int_matrix(3), m in 2u64..=12) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(
            ab.reduce_mod(m).unwrap(),
            a.reduce_mod(m).unwrap().mul(&b.reduce_mod(m).unwrap()).unwrap()
        );
    }

    #[test]
    fn unit_specialization_is_multiplicative(
        a in laurent_matrix(2),
        b in laurent_matrix(2),
        s in prop_oneof![Just(1i64), Just(-1i64)],
        t in prop_oneof![Just(1i64), Just(-1i64)],
    ) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(
            ab.specialize(s, t).unwrap(),
            a.specialize(s, t).unwrap().mul(&b.specialize(s, t).unwrap()).unwrap()
        );
    }

    #[test]
    fn graph_dsl_and_json_round_trip(g in graph()) {
        prop_assert_eq!(&CoxeterGraph::parse(&g.to_dsl()).unwrap(), &g);
        prop_assert_eq!(&CoxeterGraph::from_json(&g.to_json()).unwrap(), &g);
    }

    #[test]
    fn classification_of_unions_concatenates(g1 in graph(), g2 in graph()) {
        let union = g1.disjoint_union(&g2);
        let mut expected = classify(&g1).components;
        let offset = g1.n();
        for (verts, name) in classify(&g2).components {
            expected.push((verts.into_iter().map(|v| v + offset).collect(), name));
        }
        prop_assert_eq!(classify(&union).components, expected);
    }

    #[test]
    fn unimodular_inverse_is_exact(a in int_matrix(3)) {
        // the unipotent part of any sample is always unimodular
        let mut u = IntMatrix::identity(3);
        for i in 0..3 {
            for j in i + 1..3 {
                u.set(i, j, a.at(i, j).clone());
            }
        }
        let inv = u.inverse().unwrap();
        prop_assert!(u.mul(&inv).unwrap().is_identity());
        // and if the sample itself happens to be unimodular, so is it
        let det = a.det();
        if det == BigInt::from(1) || det == BigInt::from(-1) {
            let inv = a.inverse().unwrap();
            prop_assert!(a.mul(&inv).unwrap().is_identity());
        }
    }
}
