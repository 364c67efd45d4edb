//! Structural invariants of the integral representations across the small
//! catalog: generator shape, determinants, enumeration orders, and
//! independence of the fundamental element's image from the chosen reduced
//! word.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use artcong_core::engine::{
    enumerate_group, eval_sigma, eval_tits, longest_element, Word, WordMode,
};
use artcong_core::graph::catalog;
use artcong_core::matrix::IntMatrix;
use artcong_core::rep::{sigma_generator, tits_generator};
use artcong_core::{DEFAULT_CAP, DEFAULT_SEED};

fn small_catalog_rank8() -> Vec<String> {
    let mut names: Vec<String> = (1..=8).map(|n| format!("A{}", n)).collect();
    names.extend((4..=8).map(|n| format!("D{}", n)));
    names.extend(["E6", "E7", "E8", "~A1"].map(String::from));
    names.extend((2..=7).map(|n| format!("~A{}", n)));
    names.extend((4..=7).map(|n| format!("~D{}", n)));
    names.extend(["~E6", "~E7"].map(String::from));
    names
}

#[test]
fn generator_entries_bounded_by_two() {
    use num_traits::Signed;
    for name in small_catalog_rank8() {
        let g = catalog(&name).unwrap();
        for i in 1..=g.n() {
            for m in [tits_generator(&g, i).unwrap(), sigma_generator(&g, i, false).unwrap()] {
                for row in m.rows() {
                    for v in row {
                        assert!(v.abs() <= BigInt::from(2), "{}", name);
                    }
                }
            }
        }
    }
}

#[test]
fn sigma_generators_are_unipotent_with_nilpotent_row() {
    for name in ["A3", "D4", "~A2", "~D4"] {
        let g = catalog(name).unwrap();
        let n = g.n();
        for i in 1..=n {
            let m = sigma_generator(&g, i, false).unwrap();
            let nil = m.sub(&IntMatrix::identity(n)).unwrap();
            // support in one row, zero diagonal there, square zero
            for r in 0..n {
                for c in 0..n {
                    if r != i - 1 {
                        assert_eq!(nil.at(r, c), &BigInt::from(0));
                    }
                }
            }
            assert_eq!(nil.at(i - 1, i - 1), &BigInt::from(0));
            assert_eq!(nil.mul(&nil).unwrap(), IntMatrix::zero(n));
            // inverse is I - N
            let inv = sigma_generator(&g, i, true).unwrap();
            assert_eq!(inv, IntMatrix::identity(n).sub(&nil).unwrap());
            assert!(m.mul(&inv).unwrap().is_identity());
            // determinant of I + N is 1
            assert_eq!(m.det(), BigInt::from(1));
        }
    }
}

#[test]
fn random_word_images_have_determinant_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for name in ["A3", "~A2"] {
        let g = catalog(name).unwrap();
        for _ in 0..25 {
            let len = rng.gen_range(0..=15);
            let letters: Vec<i32> = (0..len)
                .map(|_| {
                    let i = rng.gen_range(1..=g.n()) as i32;
                    if rng.gen_bool(0.5) {
                        i
                    } else {
                        -i
                    }
                })
                .collect();
            let w = Word::artin(letters).unwrap();
            assert_eq!(eval_sigma(&g, &w).unwrap().det(), BigInt::from(1), "{}", name);
        }
    }
}

#[test]
fn enumeration_orders_match_closed_forms() {
    for n in 1..=7usize {
        let order = enumerate_group(&catalog(&format!("A{}", n)).unwrap(), DEFAULT_CAP)
            .unwrap()
            .order();
        let factorial: u64 = (1..=(n as u64 + 1)).product();
        assert_eq!(order, factorial, "A{}", n);
    }
    for n in 4..=6usize {
        let order = enumerate_group(&catalog(&format!("D{}", n)).unwrap(), DEFAULT_CAP)
            .unwrap()
            .order();
        let factorial: u64 = (1..=(n as u64)).product();
        assert_eq!(order, (1 << (n - 1)) * factorial, "D{}", n);
    }
    let e6 = enumerate_group(&catalog("E6").unwrap(), DEFAULT_CAP).unwrap();
    assert_eq!(e6.order(), 51840);
    assert_eq!(e6.longest_word().len(), 36);
}

#[test]
fn longest_word_length_is_positive_root_count() {
    for name in ["A2", "A3", "A4", "D4", "D5"] {
        let g = catalog(name).unwrap();
        let roots = artcong_core::roots::enumerate_roots(&g).unwrap().count();
        let w0 = longest_element(&g, DEFAULT_CAP).unwrap();
        assert_eq!(w0.len(), roots / 2, "{}", name);
    }
}

/// The fundamental element's image must not depend on which reduced word
/// the lift picks. The reverse of a reduced word for the longest element is
/// again one, and for the chain types so is its diagram flip.
#[test]
fn delta_image_is_word_choice_independent() {
    for name in ["A1", "A2", "A3", "A4", "D4"] {
        let g = catalog(name).unwrap();
        let w0 = longest_element(&g, DEFAULT_CAP).unwrap();
        let image = eval_sigma(&g, &w0.lift()).unwrap();

        let reversed = Word::parse(
            &w0.letters()
                .iter()
                .rev()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            g.n(),
            WordMode::Artin,
        )
        .unwrap();
        assert_eq!(eval_tits(&g, &w0).unwrap(), {
            let rev_cox = Word::coxeter(reversed.letters().to_vec()).unwrap();
            eval_tits(&g, &rev_cox).unwrap()
        });
        assert_eq!(image, eval_sigma(&g, &reversed).unwrap(), "{} reversed", name);

        if name.starts_with('A') {
            let n = g.n() as i32;
            let flipped = Word::artin(w0.letters().iter().map(|l| n + 1 - l).collect()).unwrap();
            assert_eq!(image, eval_sigma(&g, &flipped).unwrap(), "{} flipped", name);
        }
    }
}
