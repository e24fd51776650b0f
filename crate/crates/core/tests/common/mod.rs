//! Shared helpers for the integration suites.

#![allow(dead_code)]

use platsq::{
    good_involutions, BraidSystem, BraidSystemEntry, BraidWord, FiniteSymQuandle, Letter,
    SlideDirection,
};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The coloring test battery: dihedral quandles `R_p` for `p <= 7` and the
/// trivial quandles of size `<= 4` with each of their good involutions.
pub fn battery() -> Vec<(String, FiniteSymQuandle)> {
    let mut quandles = Vec::new();
    for p in 1..=7 {
        quandles.push((format!("R_{p}"), FiniteSymQuandle::dihedral(p).unwrap()));
    }
    for n in 1..=4 {
        let op: Vec<Vec<usize>> = (0..n).map(|x| vec![x; n]).collect();
        for (i, rho) in good_involutions(&op).unwrap().into_iter().enumerate() {
            quandles.push((
                format!("T_{n}.{i}"),
                FiniteSymQuandle::trivial(n, rho).unwrap(),
            ));
        }
    }
    quandles
}

/// The conjugation quandle of S_3 with inversion as the good involution:
/// non-kei, with a non-identity rho.
pub fn conj_s3() -> FiniteSymQuandle {
    let elems: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let compose = |f: [usize; 3], g: [usize; 3]| [f[g[0]], f[g[1]], f[g[2]]];
    let invert = |f: [usize; 3]| {
        let mut inv = [0; 3];
        for (i, &v) in f.iter().enumerate() {
            inv[v] = i;
        }
        inv
    };
    let index_of = |f: [usize; 3]| elems.iter().position(|&e| e == f).unwrap();
    let op = elems
        .iter()
        .map(|&x| {
            elems
                .iter()
                .map(|&y| index_of(compose(invert(y), compose(x, y))))
                .collect()
        })
        .collect();
    let rho = elems.iter().map(|&x| index_of(invert(x))).collect();
    FiniteSymQuandle::from_tables(op, rho).unwrap()
}

pub fn random_braid_word(rng: &mut ChaCha8Rng, degree: usize, max_len: usize) -> BraidWord {
    let len = rng.random_range(0..=max_len);
    let letters = (0..len).map(|_| {
        let i = rng.random_range(1..degree);
        let e = if rng.random_bool(0.5) { 1 } else { -1 };
        Letter::new(i, e)
    });
    BraidWord::new(degree, letters).unwrap()
}

/// A random genuine braid system of degree `2..=2*max_m` with up to
/// `2*max_pairs` entries: cancelling `(+ , -)` pairs over a shared
/// conjugator, mixed by a few slides (which preserve genuineness).
pub fn random_genuine_system(
    rng: &mut ChaCha8Rng,
    max_m: usize,
    max_pairs: usize,
) -> BraidSystem {
    let m = rng.random_range(1..=max_m);
    let degree = 2 * m;
    let pairs = rng.random_range(1..=max_pairs);
    let mut entries = Vec::new();
    for _ in 0..pairs {
        let conjugator = random_braid_word(rng, degree, 3);
        let band = rng.random_range(1..degree);
        entries.push(BraidSystemEntry::new(conjugator.clone(), band, 1).unwrap());
        entries.push(BraidSystemEntry::new(conjugator, band, -1).unwrap());
    }
    let mut system = BraidSystem::new(degree, entries).unwrap();
    for _ in 0..rng.random_range(0..=3) {
        let j = rng.random_range(1..system.entries().len());
        let direction = if rng.random_bool(0.5) {
            SlideDirection::Forward
        } else {
            SlideDirection::Backward
        };
        system = system.slide(j, direction).unwrap();
    }
    system
}

pub fn random_slide_sequence(
    rng: &mut ChaCha8Rng,
    entries: usize,
    max_moves: usize,
) -> Vec<(usize, SlideDirection)> {
    let count = rng.random_range(1..=max_moves);
    (0..count)
        .map(|_| {
            let j = rng.random_range(1..entries);
            let direction = if rng.random_bool(0.5) {
                SlideDirection::Forward
            } else {
                SlideDirection::Backward
            };
            (j, direction)
        })
        .collect()
}
