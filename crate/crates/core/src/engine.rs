//! Words in the generators, their evaluation in any representation, and
//! breadth-first enumeration of finite Coxeter groups over exact integer
//! matrices.

use num_bigint::BigInt;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::graph::{classify, CoxeterGraph};
use crate::matrix::{GenRow, IntMatrix, Mat, Scalar, SmallIntMatrix};
use crate::rep;

/// Coxeter words use positive letters only (the generators are
/// involutions); Artin words allow signed letters.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum WordMode {
    Coxeter,
    Artin,
}

/// A word in the generators: letter `+i` is generator `i`, `-i` its
/// inverse. The affine vertex (stored at index `n`) renders as `0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    letters: Vec<i32>,
    mode: WordMode,
}

impl Word {
    pub fn coxeter(letters: Vec<i32>) -> Result<Word> {
        for &l in &letters {
            if l == 0 {
                return Err(Error::BadIndex(0));
            }
            if l < 0 {
                return Err(Error::InverseInCoxeterMode(l as i64));
            }
        }
        Ok(Word {
            letters,
            mode: WordMode::Coxeter,
        })
    }

    pub fn artin(letters: Vec<i32>) -> Result<Word> {
        if letters.iter().any(|&l| l == 0) {
            return Err(Error::BadIndex(0));
        }
        Ok(Word {
            letters,
            mode: WordMode::Artin,
        })
    }

    pub fn empty(mode: WordMode) -> Word {
        Word {
            letters: Vec::new(),
            mode,
        }
    }

    /// Parse whitespace-separated signed letters. `0` (and `-0`) name the
    /// affine vertex, which lives at index `rank`.
    pub fn parse(text: &str, rank: usize, mode: WordMode) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (neg, digits) = match tok.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, tok),
            };
            let v: i64 = digits
                .parse()
                .map_err(|_| Error::BadWord(format!("bad letter {:?}", tok)))?;
            let idx = if v == 0 { rank as i64 } else { v };
            if idx < 1 || idx > rank as i64 {
                return Err(Error::BadIndex(if neg { -v } else { v }));
            }
            letters.push(if neg { -(idx as i32) } else { idx as i32 });
        }
        match mode {
            WordMode::Coxeter => Word::coxeter(letters),
            WordMode::Artin => Word::artin(letters),
        }
    }

    /// Render; when `affine` is set, index `rank` prints as `0`.
    pub fn render(&self, rank: usize, affine: bool) -> String {
        self.letters
            .iter()
            .map(|&l| {
                let a = l.unsigned_abs() as usize;
                let shown = if affine && a == rank {
                    "0".to_string()
                } else {
                    a.to_string()
                };
                if l < 0 {
                    format!("-{}", shown)
                } else {
                    shown
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn mode(&self) -> WordMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        match (self.mode, other.mode) {
            (WordMode::Coxeter, WordMode::Coxeter) => Word::coxeter(letters),
            _ => Word::artin(letters),
        }
    }

    pub fn repeat(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word {
            letters,
            mode: self.mode,
        }
    }

    /// Formal inverse: reversed letters, negated in Artin mode.
    pub fn inverse(&self) -> Word {
        let letters = match self.mode {
            WordMode::Coxeter => self.letters.iter().rev().copied().collect(),
            WordMode::Artin => self.letters.iter().rev().map(|&l| -l).collect(),
        };
        Word {
            letters,
            mode: self.mode,
        }
    }

    /// The same letters as an Artin word (the set-theoretic lift of a
    /// reduced Coxeter expression).
    pub fn lift(&self) -> Word {
        Word {
            letters: self.letters.clone(),
            mode: WordMode::Artin,
        }
    }
}

/// Evaluate a word against generator rows. The first letter acts first, so
/// the result is `G_last ... G_first`; an empty word gives the identity.
pub fn eval_rows<R: Scalar>(
    n: usize,
    gens: &[GenRow<R>],
    inverses: Option<&[GenRow<R>]>,
    word: &Word,
) -> Result<Mat<R>> {
    let mut m = Mat::identity(n);
    for &l in &word.letters {
        let idx = l.unsigned_abs() as usize;
        if idx < 1 || idx > n {
            return Err(Error::BadIndex(l as i64));
        }
        let row = if l > 0 {
            &gens[idx - 1]
        } else {
            match inverses {
                Some(inv) => &inv[idx - 1],
                None => return Err(Error::InverseInCoxeterMode(l as i64)),
            }
        };
        m = row.apply_left(&m);
    }
    Ok(m)
}

/// Exact integral Tits evaluation of a Coxeter word.
pub fn eval_tits(g: &CoxeterGraph, word: &Word) -> Result<IntMatrix> {
    if word.mode() != WordMode::Coxeter {
        return Err(Error::ModeMismatch);
    }
    let n = g.n();
    let gens: Vec<GenRow<BigInt>> = (1..=n).map(|j| rep::tits_gen_row(g, j)).collect::<Result<_>>()?;
    eval_rows(n, &gens, None, word)
}

/// Integral `s=1, t=-1` evaluation of an Artin (or lifted Coxeter) word.
pub fn eval_sigma(g: &CoxeterGraph, word: &Word) -> Result<IntMatrix> {
    let n = g.n();
    let gens: Vec<GenRow<BigInt>> = (1..=n)
        .map(|i| rep::sigma_gen_row(g, i, false))
        .collect::<Result<_>>()?;
    let invs: Vec<GenRow<BigInt>> = (1..=n)
        .map(|i| rep::sigma_gen_row(g, i, true))
        .collect::<Result<_>>()?;
    eval_rows(n, &gens, Some(&invs), word)
}

/// Exact Laurent evaluation of an Artin word.
pub fn eval_burau(g: &CoxeterGraph, word: &Word) -> Result<crate::matrix::LaurentMatrix> {
    let n = g.n();
    let gens = (1..=n)
        .map(|i| rep::burau_gen_row(g, i, false))
        .collect::<Result<Vec<_>>>()?;
    let invs = (1..=n)
        .map(|i| rep::burau_gen_row(g, i, true))
        .collect::<Result<Vec<_>>>()?;
    eval_rows(n, &gens, Some(&invs), word)
}

/// Floating-point Tits evaluation for non-small labels.
pub fn eval_tits_numeric(g: &CoxeterGraph, word: &Word) -> Result<crate::matrix::NumMatrix> {
    if word.mode() != WordMode::Coxeter {
        return Err(Error::ModeMismatch);
    }
    let n = g.n();
    let gens = (1..=n)
        .map(|j| rep::tits_gen_row_numeric(g, j))
        .collect::<Result<Vec<_>>>()?;
    eval_rows(n, &gens, None, word)
}

/// Floating-point `s=1, t=-1` evaluation for non-small labels.
pub fn eval_sigma_numeric(g: &CoxeterGraph, word: &Word) -> Result<crate::matrix::NumMatrix> {
    let n = g.n();
    let gens = (1..=n)
        .map(|i| rep::sigma_gen_row_numeric(g, i, false))
        .collect::<Result<Vec<_>>>()?;
    let invs = (1..=n)
        .map(|i| rep::sigma_gen_row_numeric(g, i, true))
        .collect::<Result<Vec<_>>>()?;
    eval_rows(n, &gens, Some(&invs), word)
}

/// Default enumeration cap: ten million elements.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Entries of Tits images of finite-group elements are root coordinates and
/// stay tiny; this guard catches runaway growth on infinite groups long
/// before an `i64` could wrap.
const ENTRY_GUARD: i64 = 1 << 55;

/// Frontier slice handed out per expansion step; bounds candidate memory.
const EXPAND_CHUNK: usize = 4096;
/// Below this frontier-chunk size the parallel fan-out is not worth it.
const PARALLEL_THRESHOLD: usize = 512;

/// The deterministic merge is serial either way; with only two workers the
/// fan-out overhead eats the gain, so stay inline there.
pub(crate) fn use_parallel(chunk_len: usize) -> bool {
    chunk_len >= PARALLEL_THRESHOLD && rayon::current_num_threads() > 2
}

/// Result of closing a small graph's Tits image under multiplication.
pub struct GroupEnumeration {
    graph: CoxeterGraph,
    order: u64,
    parents: Vec<(u32, u8)>,
    index: FxHashMap<Box<[u8]>, u32>,
    longest: Word,
    central_ids: Vec<u32>,
}

impl GroupEnumeration {
    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Lexicographically least reduced word of the longest element.
    pub fn longest_word(&self) -> &Word {
        &self.longest
    }

    /// Reduced words of the nontrivial central elements.
    pub fn center_words(&self) -> Vec<Word> {
        self.central_ids.iter().map(|&id| self.word_of(id)).collect()
    }

    pub fn center_order(&self) -> u64 {
        self.central_ids.len() as u64 + 1
    }

    /// Shortest (lex-least) word reaching the element with this BFS id.
    pub fn word_of(&self, id: u32) -> Word {
        let mut letters = Vec::new();
        let mut cur = id;
        while cur != 0 {
            let (parent, gen) = self.parents[cur as usize];
            letters.push(gen as i32);
            cur = parent;
        }
        letters.reverse();
        Word::coxeter(letters).expect("BFS letters are positive")
    }

    pub fn id_of(&self, m: &SmallIntMatrix) -> Option<u32> {
        self.index.get(&m.byte_key()).copied()
    }
}

/// Close the exact Tits image of a small graph under multiplication by
/// generators, breadth first. Each element is visited once; the first word
/// reaching it is its lex-least reduced word because parents are expanded
/// in discovery order and generators in index order.
pub fn enumerate_group(g: &CoxeterGraph, cap: u64) -> Result<GroupEnumeration> {
    if cap < 1 {
        return Err(Error::CapExceeded { cap });
    }
    let n = g.n();
    let big_rows: Vec<GenRow<BigInt>> = (1..=n).map(|j| rep::tits_gen_row(g, j)).collect::<Result<_>>()?;
    let rows: Vec<GenRow<i64>> = big_rows
        .iter()
        .map(|r| GenRow {
            row: r.row,
            entries: r
                .entries
                .iter()
                .map(|(k, v)| (*k, i64::try_from(v).expect("generator entries are small")))
                .collect(),
        })
        .collect();

    let identity = SmallIntMatrix::identity(n);
    let mut index: FxHashMap<Box<[u8]>, u32> = FxHashMap::default();
    index.insert(identity.byte_key(), 0);
    let mut parents: Vec<(u32, u8)> = vec![(0, 0)];
    let mut central_ids: Vec<u32> = Vec::new();
    let mut frontier: Vec<(u32, SmallIntMatrix)> = vec![(0, identity)];
    let mut last_id = 0u32;

    // Frontiers expand chunk by chunk; chunks may fan out across worker
    // threads, but candidates are merged back in frontier order, so ids,
    // words and results never depend on scheduling.
    let mut insert = |parent: u32,
                      gen: u8,
                      prod: SmallIntMatrix,
                      key: Box<[u8]>,
                      parents: &mut Vec<(u32, u8)>,
                      next: &mut Vec<(u32, SmallIntMatrix)>|
     -> Result<()> {
        let new_id = parents.len() as u32;
        match index.entry(key) {
            std::collections::hash_map::Entry::Occupied(_) => return Ok(()),
            std::collections::hash_map::Entry::Vacant(slot) => {
                if new_id as u64 >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                slot.insert(new_id);
            }
        }
        parents.push((parent, gen));
        last_id = new_id;
        if is_central(&prod, &rows) {
            central_ids.push(new_id);
        }
        next.push((new_id, prod));
        Ok(())
    };

    while !frontier.is_empty() {
        let mut next: Vec<(u32, SmallIntMatrix)> = Vec::new();
        for chunk in frontier.chunks(EXPAND_CHUNK) {
            if use_parallel(chunk.len()) {
                let produced: Result<Vec<Vec<_>>> = chunk
                    .par_iter()
                    .map(|(id, m)| {
                        let mut out = Vec::with_capacity(rows.len());
                        for (gidx, row) in rows.iter().enumerate() {
                            let prod = row.apply_left(m);
                            if prod.entries().iter().any(|&v| v.abs() > ENTRY_GUARD) {
                                return Err(Error::Internal(
                                    "entry growth guard tripped during enumeration".into(),
                                ));
                            }
                            let key = prod.byte_key();
                            out.push((*id, (gidx + 1) as u8, prod, key));
                        }
                        Ok(out)
                    })
                    .collect();
                for (parent, gen, prod, key) in produced?.into_iter().flatten() {
                    insert(parent, gen, prod, key, &mut parents, &mut next)?;
                }
            } else {
                for (id, m) in chunk {
                    for (gidx, row) in rows.iter().enumerate() {
                        let prod = row.apply_left(m);
                        if prod.entries().iter().any(|&v| v.abs() > ENTRY_GUARD) {
                            return Err(Error::Internal(
                                "entry growth guard tripped during enumeration".into(),
                            ));
                        }
                        let key = prod.byte_key();
                        insert(*id, (gidx + 1) as u8, prod, key, &mut parents, &mut next)?;
                    }
                }
            }
        }
        frontier = next;
    }

    let order = parents.len() as u64;
    let mut e = GroupEnumeration {
        graph: g.clone(),
        order,
        parents,
        index,
        longest: Word::empty(WordMode::Coxeter),
        central_ids,
    };
    e.longest = e.word_of(last_id);
    Ok(e)
}

/// Commutation test against one-row generators without building products:
/// with `G` the generator supported on row `j`,
/// `(G M)(r, c) = M(r, c)` off row `j`, while
/// `(M G)(r, c) = [c != j] M(r, c) + M(r, j) g_c`.
fn is_central(m: &SmallIntMatrix, rows: &[GenRow<i64>]) -> bool {
    let n = m.n();
    for row in rows {
        let j = row.row;
        let mut g = vec![0i64; n];
        for &(k, v) in &row.entries {
            g[k] = v;
        }
        for r in 0..n {
            if r == j {
                continue;
            }
            let mrj = *m.at(r, j);
            for c in 0..n {
                let rhs = if c == j { mrj * g[c] } else { *m.at(r, c) + mrj * g[c] };
                if *m.at(r, c) != rhs {
                    return false;
                }
            }
        }
        for c in 0..n {
            let lhs: i64 = (0..n).map(|k| g[k] * m.at(k, c)).sum();
            let rhs = if c == j {
                m.at(j, j) * g[c]
            } else {
                m.at(j, c) + m.at(j, j) * g[c]
            };
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// A reduced word for the longest element of a small spherical graph.
pub fn longest_element(g: &CoxeterGraph, cap: u64) -> Result<Word> {
    let report = classify(g);
    if !report.is_spherical {
        return Err(Error::NotSpherical(format!("{:?}", g)));
    }
    Ok(enumerate_group(g, cap)?.longest_word().clone())
}

/// Whether the center of the Artin group is generated by the fundamental
/// element or by its square.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum DeltaPower {
    Delta,
    DeltaSquared,
}

/// The fundamental element as an Artin word, together with which power of
/// it generates the center: the square for `A_n` (n >= 2), odd `D_n` and
/// `E_6`, the element itself otherwise.
pub fn garside_delta(g: &CoxeterGraph, cap: u64) -> Result<(Word, DeltaPower)> {
    if !g.is_connected() {
        return Err(Error::NotConnected(format!("{:?}", g)));
    }
    let report = classify(g);
    if !report.is_spherical {
        return Err(Error::NotSpherical(format!("{:?}", g)));
    }
    let delta = longest_element(g, cap)?.lift();
    let type_name = &report.components[0].1;
    Ok((delta, delta_power_for(type_name)))
}

/// Center convention by irreducible spherical type name.
pub fn delta_power_for(type_name: &str) -> DeltaPower {
    if let Some(rest) = type_name.strip_prefix('A') {
        if rest.parse::<usize>().map(|n| n >= 2).unwrap_or(false) {
            return DeltaPower::DeltaSquared;
        }
    }
    if let Some(rest) = type_name.strip_prefix('D') {
        if rest.parse::<usize>().map(|n| n % 2 == 1).unwrap_or(false) {
            return DeltaPower::DeltaSquared;
        }
    }
    if type_name == "E6" {
        return DeltaPower::DeltaSquared;
    }
    if let Some(rest) = type_name.strip_prefix("I2(") {
        if let Some(p) = rest.strip_suffix(')').and_then(|s| s.parse::<usize>().ok()) {
            if p % 2 == 1 {
                return DeltaPower::DeltaSquared;
            }
        }
    }
    DeltaPower::Delta
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;
    use crate::matrix::int_matrix;

    #[test]
    fn eval_word_first_letter_acts_first() {
        let g = catalog("~A1").unwrap();
        let w = Word::parse("0 1", 2, WordMode::Coxeter).unwrap();
        let m = eval_tits(&g, &w).unwrap();
        assert_eq!(m, int_matrix(&[&[3, -2], &[2, -1]]));
    }

    #[test]
    fn empty_word_is_identity() {
        let g = catalog("A2").unwrap();
        let w = Word::empty(WordMode::Coxeter);
        assert!(eval_tits(&g, &w).unwrap().is_identity());
    }

    #[test]
    fn braid_relation_evaluates_to_identity() {
        let g = catalog("A2").unwrap();
        let w = Word::parse("1 2 1 -2 -1 -2", 2, WordMode::Artin).unwrap();
        assert!(eval_sigma(&g, &w).unwrap().is_identity());
        assert!(eval_burau(&g, &w).unwrap().is_identity());
    }

    #[test]
    fn coxeter_words_reject_inverses() {
        assert!(matches!(
            Word::parse("1 -2", 2, WordMode::Coxeter),
            Err(Error::InverseInCoxeterMode(_))
        ));
        let g = catalog("A2").unwrap();
        let w = Word::parse("1 2", 2, WordMode::Artin).unwrap();
        assert!(matches!(eval_tits(&g, &w), Err(Error::ModeMismatch)));
    }

    #[test]
    fn word_rendering_round_trips_affine_zero() {
        let w = Word::parse("0 1 0", 3, WordMode::Coxeter).unwrap();
        assert_eq!(w.letters(), &[3, 1, 3]);
        assert_eq!(w.render(3, true), "0 1 0");
        assert_eq!(w.render(3, false), "3 1 3");
    }

    #[test]
    fn enumerate_small_groups() {
        let a2 = enumerate_group(&catalog("A2").unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(a2.order(), 6);
        assert_eq!(a2.longest_word().len(), 3);
        assert_eq!(a2.center_order(), 1);

        let a3 = enumerate_group(&catalog("A3").unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(a3.order(), 24);
        assert_eq!(a3.longest_word().len(), 6);

        let d4 = enumerate_group(&catalog("D4").unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(d4.order(), 192);
        assert_eq!(d4.center_order(), 2);
        let central = d4.center_words();
        assert_eq!(central.len(), 1);
        assert_eq!(central[0].len(), 12);
        // same element as (s1 s2 s3 s4)^3, which acts as -I
        let g = catalog("D4").unwrap();
        let power = Word::coxeter(vec![1, 2, 3, 4]).unwrap().repeat(3);
        let expected = eval_tits(&g, &power).unwrap();
        assert_eq!(expected, IntMatrix::identity(4).neg());
        assert_eq!(eval_tits(&g, &central[0]).unwrap(), expected);
    }

    #[test]
    fn infinite_group_exceeds_cap() {
        let g = catalog("~A1").unwrap();
        assert!(matches!(
            enumerate_group(&g, 1000),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn longest_element_requires_spherical() {
        assert!(matches!(
            longest_element(&catalog("~A2").unwrap(), DEFAULT_CAP),
            Err(Error::NotSpherical(_))
        ));
        let w = longest_element(&catalog("A1").unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(w.letters(), &[1]);
    }

    #[test]
    fn longest_element_image_is_involution_normalizing_generators() {
        for name in ["A3", "D4"] {
            let g = catalog(name).unwrap();
            let w = longest_element(&g, DEFAULT_CAP).unwrap();
            let m = eval_tits(&g, &w).unwrap();
            assert!(m.mul(&m).unwrap().is_identity(), "{}", name);
            // conjugation by w0 permutes the generator set
            let gens: Vec<IntMatrix> = (1..=g.n())
                .map(|j| rep::tits_generator(&g, j).unwrap())
                .collect();
            let minv = m.inverse().unwrap();
            for gi in &gens {
                let conj = m.mul(gi).unwrap().mul(&minv).unwrap();
                assert!(gens.iter().any(|h| h == &conj), "{}", name);
            }
        }
    }

    #[test]
    fn garside_delta_choices() {
        let (d, p) = garside_delta(&catalog("A2").unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(p, DeltaPower::DeltaSquared);
        let (_, p) = garside_delta(&catalog("D4").unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(p, DeltaPower::Delta);
        let (_, p) = garside_delta(&catalog("D5").unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(p, DeltaPower::DeltaSquared);
        let (d, p) = garside_delta(&catalog("A1").unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(p, DeltaPower::Delta);
        assert!(garside_delta(
            &catalog("A2").unwrap().disjoint_union(&catalog("A1").unwrap()),
            DEFAULT_CAP
        )
        .is_err());
    }

    #[test]
    #[ignore = "large enumeration; run in release"]
    fn e7_enumeration() {
        let e = enumerate_group(&catalog("E7").unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(e.order(), 2_903_040);
        assert_eq!(e.longest_word().len(), 63);
        assert_eq!(e.center_order(), 2);
    }

    #[test]
    fn delta_image_for_a2() {
        // sigma(Delta) = [[0,1],[-1,0]], sigma(Delta^2) = -I
        let g = catalog("A2").unwrap();
        let (delta, _) = garside_delta(&g, DEFAULT_CAP).unwrap();
        let m = eval_sigma(&g, &delta).unwrap();
        assert_eq!(m, int_matrix(&[&[0, 1], &[-1, 0]]));
        let m2 = m.mul(&m).unwrap();
        assert_eq!(m2, int_matrix(&[&[-1, 0], &[0, -1]]));
    }
}
