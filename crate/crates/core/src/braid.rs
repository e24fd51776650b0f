//! Braid words in `B_n`, their strand permutations, the faithful Artin
//! representation on the free group, and the wicket-compatible (Hilden)
//! generator vocabulary.
//!
//! A braid word is read left to right, stacking top to bottom; the induced
//! endomorphism composes so that `artin_endo(uv)` acts as "`u` first". Braid
//! equality is decided through the Artin representation, which is exact and
//! adequate at desk scale (words up to a few hundred letters).

use std::fmt;

use crate::error::{Error, Result};
use crate::free_group::{FreeGroupEndo, FreeWord, Letter};

/// A word in the Artin generators `σ_1, ..., σ_{n-1}` of the braid group
/// `B_n`. Structural equality is equality of words; use
/// [`BraidWord::equivalent`] for equality in the group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    degree: usize,
    letters: Vec<Letter>,
}

fn push_reduced(letters: &mut Vec<Letter>, letter: Letter) {
    match letters.last() {
        Some(top) if *top == letter.inverse() => {
            letters.pop();
        }
        _ => letters.push(letter),
    }
}

impl BraidWord {
    /// The trivial braid on `degree` strands.
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "braid degree must be at least 1");
        BraidWord {
            degree,
            letters: Vec::new(),
        }
    }

    /// Builds a braid word, checking that every letter index lies in
    /// `1..=degree-1`. Adjacent `σ σ^-1` pairs are cancelled.
    pub fn new(degree: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidDegree);
        }
        let mut reduced = Vec::new();
        for letter in letters {
            if letter.index + 1 > degree {
                return Err(Error::BraidLetterOutOfRange {
                    index: letter.index,
                    max: degree - 1,
                    degree,
                });
            }
            push_reduced(&mut reduced, letter);
        }
        Ok(BraidWord {
            degree,
            letters: reduced,
        })
    }

    /// The generator `σ_index` in `B_degree`.
    pub fn generator(degree: usize, index: usize) -> Result<Self> {
        BraidWord::new(degree, [Letter::new(index, 1)])
    }

    /// Decodes the signed-integer encoding, e.g. `[2, 1, 3, 2]` for
    /// `σ2 σ1 σ3 σ2` (negative entries are inverses).
    pub fn from_ints(degree: usize, values: &[i64]) -> Result<Self> {
        let letters = values
            .iter()
            .map(|&v| Letter::from_int(v))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(degree, letters)
    }

    pub fn to_ints(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_int()).collect()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other` (self on top).
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut letters = self.letters.clone();
        for &letter in &other.letters {
            push_reduced(&mut letters, letter);
        }
        Ok(BraidWord {
            degree: self.degree,
            letters,
        })
    }

    /// The inverse word.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            degree: self.degree,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self` concatenated with itself `times` times.
    pub fn repeat(&self, times: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord {
            degree: self.degree,
            letters,
        }
    }

    /// The Artin endomorphism of the free group of rank `degree`:
    /// `σ_i` maps `x_i ↦ x_i x_{i+1} x_i^-1`, `x_{i+1} ↦ x_i`, fixing the
    /// rest. Homomorphic in the word, with the left factor acting first.
    pub fn artin_endo(&self) -> FreeGroupEndo {
        let mut endo = FreeGroupEndo::identity(self.degree);
        for &letter in &self.letters {
            let gen = artin_generator_endo(self.degree, letter.index, letter.exponent);
            endo = gen
                .compose(&endo)
                .expect("generator endo has matching rank");
        }
        endo
    }

    /// The underlying permutation of strands; `σ_i^{±1}` acts as the
    /// transposition `(i, i+1)`, with the left factor acting first.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.degree).collect();
        for &letter in &self.letters {
            let (a, b) = (letter.index, letter.index + 1);
            for v in &mut images {
                if *v == a {
                    *v = b;
                } else if *v == b {
                    *v = a;
                }
            }
        }
        Permutation { images }
    }

    /// True iff this word represents the identity braid. Decided via the
    /// Artin representation, which is faithful.
    pub fn is_trivial(&self) -> bool {
        self.artin_endo().is_identity()
    }

    /// Equality in the braid group: `self · other^-1` is trivial.
    pub fn equivalent(&self, other: &BraidWord) -> Result<bool> {
        Ok(self.concat(&other.inverse())?.is_trivial())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", letter.to_int())?;
            first = false;
        }
        Ok(())
    }
}

/// The Artin endomorphism of a single generator `σ_i^{exponent}`.
pub(crate) fn artin_generator_endo(degree: usize, i: usize, exponent: i8) -> FreeGroupEndo {
    debug_assert!(i < degree);
    let mut images: Vec<FreeWord> = (1..=degree).map(FreeWord::generator).collect();
    if exponent == 1 {
        // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        images[i - 1] = FreeWord::reduce([
            Letter::new(i, 1),
            Letter::new(i + 1, 1),
            Letter::new(i, -1),
        ]);
        images[i] = FreeWord::generator(i);
    } else {
        // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        images[i - 1] = FreeWord::generator(i + 1);
        images[i] = FreeWord::reduce([
            Letter::new(i + 1, -1),
            Letter::new(i, 1),
            Letter::new(i + 1, 1),
        ]);
    }
    FreeGroupEndo::new(images).expect("generator images stay in range")
}

/// A permutation of the strands `1..=n`, stored as the sequence of images.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity permutation on `1..=n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from the image sequence (`images[i-1]` is the
    /// image of `i`), checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation { degree: n });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// True iff every wicket pair `{2i-1, 2i}` maps onto a wicket pair.
    /// Requires an even degree. This is the necessary condition used in
    /// place of a full wicket-subgroup membership decision.
    pub fn preserves_pairing(&self) -> Result<bool> {
        let n = self.degree();
        if !n.is_multiple_of(2) {
            return Err(Error::OddDegree { degree: n });
        }
        for i in 1..=n / 2 {
            let a = self.apply(2 * i - 1);
            let b = self.apply(2 * i);
            let (lo, hi) = (a.min(b), a.max(b));
            if hi != lo + 1 || lo % 2 != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The three kinds of generators of the wicket-motion (Hilden) subgroup of
/// `B_{2m}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HildenKind {
    /// `σ_{2j-1}`, `1 <= j <= m`.
    SigmaOdd,
    /// `τ_j = σ_{2j} σ_{2j-1} σ_{2j+1} σ_{2j}`, `1 <= j <= m-1`.
    Tau,
    /// `υ_j = σ_{2j} σ_{2j-1} σ_{2j+1}^-1 σ_{2j}^-1`, `1 <= j <= m-1`.
    Upsilon,
}

/// One generator of the wicket-motion subgroup of `B_{2m}`.
pub fn hilden_generator(m: usize, kind: HildenKind, j: usize) -> Result<BraidWord> {
    let degree = 2 * m;
    let in_range = match kind {
        HildenKind::SigmaOdd => j >= 1 && j <= m,
        HildenKind::Tau | HildenKind::Upsilon => j >= 1 && j < m,
    };
    if !in_range {
        return Err(Error::HildenIndexOutOfRange { j, m2: degree });
    }
    let ints: Vec<i64> = match kind {
        HildenKind::SigmaOdd => vec![2 * j as i64 - 1],
        HildenKind::Tau => {
            let j = j as i64;
            vec![2 * j, 2 * j - 1, 2 * j + 1, 2 * j]
        }
        HildenKind::Upsilon => {
            let j = j as i64;
            vec![2 * j, 2 * j - 1, -(2 * j + 1), -(2 * j)]
        }
    };
    BraidWord::from_ints(degree, &ints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn braid(degree: usize, ints: &[i64]) -> BraidWord {
        BraidWord::from_ints(degree, ints).unwrap()
    }

    fn word(ints: &[i64]) -> FreeWord {
        FreeWord::from_ints(ints).unwrap()
    }

    #[test]
    fn artin_endo_of_sigma1() {
        let e = braid(2, &[1]).artin_endo();
        assert_eq!(e.image(1), &word(&[1, 2, -1]));
        assert_eq!(e.image(2), &word(&[1]));
    }

    #[test]
    fn artin_endo_of_empty_word() {
        assert!(BraidWord::identity(3).artin_endo().is_identity());
    }

    #[test]
    fn artin_endo_of_sigma1_inverse() {
        let e = braid(2, &[-1]).artin_endo();
        assert_eq!(e.image(1), &word(&[2]));
        assert_eq!(e.image(2), &word(&[-2, 1, 2]));
        // oracle: composing with the σ1 endo gives the identity
        let s1 = braid(2, &[1]).artin_endo();
        assert!(e.compose(&s1).unwrap().is_identity());
        assert!(s1.compose(&e).unwrap().is_identity());
    }

    #[test]
    fn artin_endo_is_homomorphic_left_factor_first() {
        // artin_endo(uv) = artin_endo(v) ∘ artin_endo(u)
        let u = braid(3, &[1, 2]);
        let v = braid(3, &[2, -1]);
        let uv = u.concat(&v).unwrap();
        let composed = v.artin_endo().compose(&u.artin_endo()).unwrap();
        assert_eq!(uv.artin_endo(), composed);
    }

    #[test]
    fn artin_satisfies_braid_relations_small() {
        for n in 2..=4 {
            for i in 1..n - 1 {
                let (i, n) = (i as i64, n);
                let lhs = braid(n, &[i, i + 1, i]).artin_endo();
                let rhs = braid(n, &[i + 1, i, i + 1]).artin_endo();
                assert_eq!(lhs, rhs, "braid relation at i={i}, n={n}");
            }
            for i in 1..n - 1 {
                for j in i + 2..n {
                    let (i, j) = (i as i64, j as i64);
                    let lhs = braid(n, &[i, j]).artin_endo();
                    let rhs = braid(n, &[j, i]).artin_endo();
                    assert_eq!(lhs, rhs, "far commutation at i={i}, j={j}, n={n}");
                }
            }
        }
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(braid(4, &[1]).permutation().images(), &[2, 1, 3, 4]);
        assert_eq!(braid(4, &[2, 2, 2]).permutation().images(), &[1, 3, 2, 4]);
        // τ_1 = σ2 σ1 σ3 σ2 acts as (1 3)(2 4); frozen from composing the
        // four transpositions by hand
        assert_eq!(braid(4, &[2, 1, 3, 2]).permutation().images(), &[3, 4, 1, 2]);
    }

    #[test]
    fn permutation_of_word_matches_abelianized_endo_base() {
        // the Artin image of x_j is a conjugate of exactly one generator;
        // abelianizing picks that generator out
        let b = braid(4, &[1, 2, -3, 2, 1]);
        let endo = b.artin_endo();
        let perm = b.permutation();
        for j in 1..=4 {
            let mut sums = [0i64; 4];
            for l in endo.image(j).letters() {
                sums[l.index - 1] += i64::from(l.exponent);
            }
            let base = (1..=4).find(|&k| sums[k - 1] == 1).unwrap();
            assert!(sums.iter().filter(|&&s| s != 0).count() == 1);
            assert_eq!(base, perm.apply(j));
        }
    }

    #[test]
    fn is_trivial_examples() {
        assert!(braid(2, &[1, -1]).is_trivial());
        assert!(!braid(2, &[1]).is_trivial());
        assert!(braid(3, &[1, 2, 1, -2, -1, -2]).is_trivial());
    }

    #[test]
    fn equivalence_examples() {
        let a = braid(3, &[1, 2, 1]);
        let b = braid(3, &[2, 1, 2]);
        assert!(a.equivalent(&b).unwrap());
        assert!(braid(4, &[1, 3]).equivalent(&braid(4, &[3, 1])).unwrap());
        assert!(!braid(3, &[1]).equivalent(&braid(3, &[2])).unwrap());
        assert!(matches!(
            braid(3, &[1]).equivalent(&braid(4, &[1])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn hilden_generators() {
        assert_eq!(
            hilden_generator(2, HildenKind::Tau, 1).unwrap(),
            braid(4, &[2, 1, 3, 2])
        );
        assert_eq!(
            hilden_generator(2, HildenKind::SigmaOdd, 1).unwrap(),
            braid(4, &[1])
        );
        assert_eq!(
            hilden_generator(2, HildenKind::Upsilon, 1).unwrap(),
            braid(4, &[2, 1, -3, -2])
        );
        assert!(hilden_generator(2, HildenKind::Tau, 2).is_err());
        assert!(hilden_generator(2, HildenKind::SigmaOdd, 3).is_err());
    }

    #[test]
    fn hilden_generators_preserve_pairing() {
        for m in 1..=4 {
            for j in 1..=m {
                let g = hilden_generator(m, HildenKind::SigmaOdd, j).unwrap();
                assert!(g.permutation().preserves_pairing().unwrap());
            }
            for j in 1..m {
                for kind in [HildenKind::Tau, HildenKind::Upsilon] {
                    let g = hilden_generator(m, kind, j).unwrap();
                    assert!(g.permutation().preserves_pairing().unwrap());
                }
            }
        }
    }

    #[test]
    fn pairing_preservation_examples() {
        assert!(Permutation::identity(4).preserves_pairing().unwrap());
        assert!(braid(4, &[1]).permutation().preserves_pairing().unwrap());
        assert!(!braid(4, &[2]).permutation().preserves_pairing().unwrap());
        assert!(Permutation::identity(3).preserves_pairing().is_err());
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![2, 3, 1]).is_ok());
        assert!(Permutation::new(vec![2, 2, 1]).is_err());
        assert!(Permutation::new(vec![0, 1, 2]).is_err());
    }

    #[test]
    fn word_construction_checks_range() {
        assert!(BraidWord::from_ints(3, &[1, 2]).is_ok());
        assert!(matches!(
            BraidWord::from_ints(3, &[3]),
            Err(Error::BraidLetterOutOfRange { .. })
        ));
        assert!(BraidWord::from_ints(0, &[]).is_err());
    }

    fn braid_word(degree: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec((1..degree, prop::bool::ANY), 0..12).prop_map(move |raw| {
            BraidWord::new(
                degree,
                raw.into_iter()
                    .map(|(i, pos)| Letter::new(i, if pos { 1 } else { -1 })),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn word_times_inverse_is_trivial(b in braid_word(4)) {
            prop_assert!(b.concat(&b.inverse()).unwrap().is_trivial());
        }

        #[test]
        fn permutation_is_homomorphic(u in braid_word(4), v in braid_word(4)) {
            let uv = u.concat(&v).unwrap().permutation();
            let (pu, pv) = (u.permutation(), v.permutation());
            for i in 1..=4 {
                // left factor acts first
                prop_assert_eq!(uv.apply(i), pv.apply(pu.apply(i)));
            }
        }
    }
}
