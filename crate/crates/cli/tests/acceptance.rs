//! Acceptance suite: one test per criterion, each printing a pass line with
//! its elapsed time (visible with `cargo test --test acceptance --
//! --nocapture`). Exact checks compare with zero tolerance; numeric checks
//! use 1e-9. The expensive rank-7 exceptional level-2 check is opt-in via
//! `ARTCONG_BIG=1`.

use std::time::Instant;

use artcong_cli::suites::{inf_cycle, inf_path, inf_star};
use artcong_core::congruence::{
    center_image_check, commutator_matrix, divisor_containment,
    level2_conjecture_probe, member, oddk_quotient_check, verify_direct_sum,
    verify_level2_spherical, verify_level4_raag, verify_normal_closure, CenterSign,
    CongruenceQuery, GroupKind, Level4Status,
};
use artcong_core::engine::{Word, WordMode};
use artcong_core::graph::{catalog, CoxeterGraph};
use artcong_core::matrix::int_matrix;
use artcong_core::rep::{
    braid_zi, burau_generator, check_hecke, check_relations, k_star_holds, tits_generator,
    RepKind, RepSpec,
};
use artcong_core::roots::{
    a1_tilde_level, central_element_check, enumerate_roots, s_theta_word, translation_order_check,
    CentralType,
};
use artcong_core::{DEFAULT_CAP, DEFAULT_SEED};

const TOL: f64 = 1e-9;

fn done(criterion: &str, start: Instant) {
    println!("criterion {}: pass ({:.2}s)", criterion, start.elapsed().as_secs_f64());
}

fn rank8_catalog() -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for n in 1..=8 {
        names.push(format!("A{}", n));
    }
    for n in 2..=8 {
        names.push(format!("B{}", n));
    }
    for n in 4..=8 {
        names.push(format!("D{}", n));
    }
    names.extend(["E6", "E7", "E8", "F4", "H3", "H4"].map(String::from));
    for p in 5..=8 {
        names.push(format!("I2({})", p));
    }
    names.push("~A1".into());
    for n in 2..=7 {
        names.push(format!("~A{}", n));
    }
    for n in 4..=7 {
        names.push(format!("~D{}", n));
    }
    names.push("~E6".into());
    names.push("~E7".into());
    names
}

fn small_rank8_catalog() -> Vec<String> {
    rank8_catalog()
        .into_iter()
        .filter(|n| catalog(n).unwrap().is_small())
        .collect()
}

#[test]
fn c01_relations() {
    let start = Instant::now();
    for name in rank8_catalog() {
        let g = catalog(&name).unwrap();
        for kind in [RepKind::Tits, RepKind::Burau] {
            let spec = if g.is_small() {
                RepSpec::exact(g.clone(), kind).unwrap()
            } else {
                RepSpec::numeric(g.clone(), kind, TOL)
            };
            let r = check_relations(&spec).unwrap();
            assert!(r.passed, "{:?} relations fail on {}", kind, name);
        }
    }
    done("1 (defining relations, all rank <= 8 catalog graphs)", start);
}

#[test]
fn c02_k_star_and_hecke() {
    let start = Instant::now();
    for name in small_rank8_catalog() {
        let g = catalog(&name).unwrap();
        assert!(k_star_holds(&g).unwrap(), "K* identity fails on {}", name);
        assert!(check_hecke(&g).unwrap().passed, "Hecke identity fails on {}", name);
    }
    done("2 (K* and Hecke identities, exact)", start);
}

#[test]
fn c03_braid_cross_checks() {
    let start = Instant::now();
    for n in 2..=9usize {
        let a = catalog(&format!("A{}", n - 1)).unwrap();
        for i in 1..n {
            assert_eq!(
                braid_zi(n, i).unwrap(),
                burau_generator(&a, i, false).unwrap(),
                "braid matrix mismatch at n={}, i={}",
                n,
                i
            );
        }
    }
    for name in small_rank8_catalog() {
        let g = catalog(&name).unwrap();
        for i in 1..=g.n() {
            assert_eq!(
                burau_generator(&g, i, false).unwrap().specialize(1, 1).unwrap(),
                tits_generator(&g, i).unwrap(),
                "s=t=1 specialization mismatch on {} generator {}",
                name,
                i
            );
        }
    }
    done("3 (braid matrices and s=t=1 specialization)", start);
}

#[test]
fn c04_level2_spherical() {
    let start = Instant::now();
    let mut cases = vec![
        ("A2", 6u64),
        ("A3", 24),
        ("A4", 120),
        ("A5", 720),
        ("D4", 96),
        ("D5", 1920),
        ("E6", 51840),
    ];
    if std::env::var("ARTCONG_BIG").is_ok() {
        cases.push(("E7", 1_451_520));
    }
    for (name, expected) in cases {
        let r = verify_level2_spherical(&catalog(name).unwrap(), DEFAULT_CAP).unwrap();
        assert!(r.passed, "level-2 identification fails on {}: {:?}", name, r);
        assert_eq!(r.image_order, expected, "unexpected image order on {}", name);
        assert_eq!(
            r.expected_image_order, expected,
            "enumerated |W|/|Z| disagrees with the known value on {}",
            name
        );
    }
    done("4 (level-2 spherical image orders)", start);
}

#[test]
fn c05_level4_right_angled() {
    let start = Instant::now();
    let mut graphs: Vec<CoxeterGraph> = (2..=6).map(inf_path).collect();
    graphs.extend((3..=6).map(inf_cycle));
    graphs.push(inf_star(4));
    for g in graphs {
        let n = g.n();
        let r = verify_level4_raag(&g, DEFAULT_CAP).unwrap();
        assert_eq!(r.status, Level4Status::Pass, "{:?}", r);
        assert_eq!(r.image_order_mod4, Some(1 << n));
        assert_eq!(r.abelian, Some(true));
        assert_eq!(r.level2_trivial, Some(true));
    }
    done("5 (level-4 right-angled image orders)", start);
}

#[test]
fn c06_commutator_lemma() {
    let start = Instant::now();
    let c = commutator_matrix(&CoxeterGraph::discrete(2), 1, 2).unwrap();
    assert!(c.matches && c.direct.is_identity());
    let c = commutator_matrix(&catalog("A2").unwrap(), 1, 2).unwrap();
    assert!(c.matches);
    let c = commutator_matrix(&catalog("~A1").unwrap(), 1, 2).unwrap();
    assert!(c.matches);
    assert_eq!(c.direct, int_matrix(&[&[13, 8], &[8, 5]]));
    assert!(c.identity_mod_4);
    for name in ["A3", "D4", "~A2"] {
        let g = catalog(name).unwrap();
        for k in 1..=g.n() {
            for l in 1..=g.n() {
                if k != l {
                    assert!(commutator_matrix(&g, k, l).unwrap().matches, "{} {} {}", name, k, l);
                }
            }
        }
    }
    done("6 (closed-form commutator matrices)", start);
}

#[test]
fn c07_affine_central_displays() {
    let start = Instant::now();
    for family in [CentralType::DTilde(6), CentralType::E7Tilde, CentralType::E8Tilde] {
        let r = central_element_check(family, DEFAULT_CAP).unwrap();
        assert!(r.finite_image_is_minus_identity, "{:?}", r);
        assert_eq!(r.display_matches, Some(true), "{:?}", r);
        assert!(r.congruent_only_at_two, "{:?}", r);
        assert!(r.passed);
    }
    // the rank-4 finite case acts as -I as well
    let r = central_element_check(CentralType::DTilde(4), DEFAULT_CAP).unwrap();
    assert!(r.finite_image_is_minus_identity && r.passed);
    done("7 (explicit affine central-element matrices)", start);
}

#[test]
fn c08_translation_orders() {
    let start = Instant::now();
    for name in ["~A2", "~A3", "~D4", "~D5", "~E6"] {
        let g = catalog(name).unwrap();
        for m in 2..=8u64 {
            let r = translation_order_check(&g, m).unwrap();
            assert!(r.passed, "{} m={} -> {:?}", name, m, r);
            assert_eq!(r.minimal, Some(m));
        }
    }
    let aa1 = catalog("~A1").unwrap();
    for m in 3..=12u64 {
        let r = translation_order_check(&aa1, m).unwrap();
        let expected = if m % 2 == 0 { m / 2 } else { m };
        assert_eq!(r.minimal, Some(expected), "rank-2 minimal power at m={}", m);
        assert!(r.passed);
        // the closed-form word generates: member at level m, smaller powers not
        let w = a1_tilde_level(m).unwrap();
        let q = CongruenceQuery::new(aa1.clone(), GroupKind::CoxeterTits, m).unwrap();
        assert!(member(&q, &w).unwrap());
        let pair = Word::parse("0 1", 2, WordMode::Coxeter).unwrap();
        for j in 1..w.len() / 2 {
            assert!(!member(&q, &pair.repeat(j)).unwrap(), "m={} power {}", m, j);
        }
    }
    done("8 (translation congruence orders)", start);
}

#[test]
fn c09_highest_root_words_and_counts() {
    let start = Instant::now();
    let cases: Vec<(String, usize)> = (1..=7)
        .map(|n| (format!("A{}", n), n * (n + 1)))
        .chain((4..=6).map(|n| (format!("D{}", n), 2 * n * (n - 1))))
        .chain([
            ("E6".to_string(), 72),
            ("E7".to_string(), 126),
            ("E8".to_string(), 240),
        ])
        .collect();
    for (name, count) in cases {
        let g = catalog(&name).unwrap();
        s_theta_word(&g).unwrap_or_else(|e| panic!("{} highest-root word invalid: {}", name, e));
        assert_eq!(enumerate_roots(&g).unwrap().count(), count, "{}", name);
    }
    done("9 (highest-root words and root counts)", start);
}

#[test]
fn c10_sampling_probes() {
    let start = Instant::now();
    let graphs: Vec<CoxeterGraph> = vec![
        catalog("A3").unwrap(),
        catalog("D4").unwrap(),
        inf_path(3),
        catalog("A2").unwrap().disjoint_union(&catalog("~A1").unwrap()),
    ];
    for g in &graphs {
        for m in 2..=6u64 {
            let r = verify_normal_closure(g, m, 100, DEFAULT_SEED).unwrap();
            assert_eq!(r.counterexamples, 0, "{:?}", r);
        }
    }
    for m in 2..=6u64 {
        let r = verify_direct_sum(
            &catalog("A2").unwrap(),
            &catalog("~A1").unwrap(),
            m,
            100,
            DEFAULT_SEED,
        )
        .unwrap();
        assert_eq!(r.counterexamples, 0, "{:?}", r);
    }
    for g in &graphs {
        for m in [4u64, 6] {
            for i in 1..=g.n() {
                let w = Word::artin(vec![i as i32; m as usize]).unwrap();
                let r = divisor_containment(g, &w, m).unwrap();
                assert!(r.member_at_level && r.passed, "{:?}", r);
            }
        }
    }
    done("10 (sampled normal-closure, direct-sum, divisor probes)", start);
}

#[test]
fn c11_odd_level_indices() {
    let start = Instant::now();
    for k in [3u64, 5] {
        let r = oddk_quotient_check(&catalog("A2").unwrap(), k, DEFAULT_CAP).unwrap();
        assert!(r.passed, "{:?}", r);
        assert_eq!(r.order_mod_2, 6);
        assert_eq!(r.order_mod_2k / r.order_mod_k, 6);
    }
    done("11 (odd-level quotient indices)", start);
}

#[test]
fn c12_center_images() {
    let start = Instant::now();
    for name in ["A3", "A5", "E6"] {
        let r = center_image_check(&catalog(name).unwrap(), DEFAULT_CAP, TOL).unwrap();
        assert_eq!(r.sign, CenterSign::Identity, "{}", name);
        assert!(r.passed);
    }
    let r = center_image_check(&catalog("A2").unwrap(), DEFAULT_CAP, TOL).unwrap();
    assert_eq!(r.sign, CenterSign::MinusIdentity);
    let r = center_image_check(&catalog("F4").unwrap(), DEFAULT_CAP, TOL).unwrap();
    assert!(r.numeric);
    assert_eq!(r.sign, CenterSign::MinusIdentity);
    done("12 (central generator images)", start);
}

#[test]
fn c13_conjecture_probe() {
    let start = Instant::now();
    for name in ["~A1", "~A2", "~A3", "~D4"] {
        // evidence only: record both orders, assert nothing about equality
        let r = level2_conjecture_probe(&catalog(name).unwrap(), DEFAULT_CAP).unwrap();
        println!(
            "  probe {}: braid-side {} vs reflection-side {}",
            name, r.artin_image_order, r.coxeter_image_order
        );
    }
    done("13 (level-2 conjecture probes, evidence only)", start);
}

// appears in criterion 4 text: the expensive check stays opt-in
#[test]
#[ignore = "opt-in: rank-7 exceptional level-2 check (about a minute)"]
fn c04_big_e7() {
    let start = Instant::now();
    let r = verify_level2_spherical(&catalog("E7").unwrap(), DEFAULT_CAP).unwrap();
    assert!(r.passed, "{:?}", r);
    assert_eq!(r.image_order, 1_451_520);
    assert_eq!(r.group_order, 2_903_040);
    done("4-big (rank-7 exceptional level-2 image order)", start);
}
