//! Reduced words in finitely generated free groups and their endomorphisms.
//!
//! Words are kept freely reduced at all times, so group-element equality is
//! plain structural equality. Generators are indexed from 1, matching the
//! `x_1, ..., x_n` labelling used everywhere else in the crate. The text
//! encoding of a word is a whitespace-separated list of signed integers:
//! `"1 -2 3"` stands for `x1 x2^-1 x3`, and the empty string is the identity.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single letter `x_i^{±1}` of a word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    /// 1-based generator index.
    pub index: usize,
    /// Always `+1` or `-1`.
    pub exponent: i8,
}

impl Letter {
    /// Builds a letter; panics on a non-positive index or an exponent
    /// outside `{-1, +1}`.
    pub fn new(index: usize, exponent: i8) -> Self {
        assert!(index >= 1, "generator index must be positive");
        assert!(
            exponent == 1 || exponent == -1,
            "letter exponent must be +1 or -1"
        );
        Letter { index, exponent }
    }

    /// The inverse letter.
    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            exponent: -self.exponent,
        }
    }

    /// Decodes a signed integer: `3` is `x3`, `-3` is `x3^-1`. Zero is invalid.
    pub fn from_int(value: i64) -> Result<Self> {
        if value == 0 {
            return Err(Error::BadWordEncoding(
                "letter 0 is not a generator".to_string(),
            ));
        }
        Ok(Letter::new(
            value.unsigned_abs() as usize,
            if value > 0 { 1 } else { -1 },
        ))
    }

    /// The signed-integer encoding of this letter.
    pub fn to_int(self) -> i64 {
        self.index as i64 * i64::from(self.exponent)
    }
}

/// A freely reduced word in a free group on indexed generators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct FreeWord {
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

impl FreeWord {
    /// The empty word.
    pub fn identity() -> Self {
        FreeWord::default()
    }

    /// The single-letter word `x_index`.
    pub fn generator(index: usize) -> Self {
        FreeWord {
            letters: vec![Letter::new(index, 1)],
        }
    }

    /// Freely reduces an arbitrary letter sequence. Idempotent.
    pub fn reduce(raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut letters = Vec::new();
        for letter in raw {
            push_reduced(&mut letters, letter);
        }
        FreeWord { letters }
    }

    /// Decodes a word from its signed-integer encoding.
    pub fn from_ints(values: &[i64]) -> Result<Self> {
        let letters = values
            .iter()
            .map(|&v| Letter::from_int(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeWord::reduce(letters))
    }

    /// The signed-integer encoding of this word.
    pub fn to_ints(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_int()).collect()
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

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced concatenation `self · other`.
    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        for &letter in &other.letters {
            push_reduced(&mut letters, letter);
        }
        FreeWord { letters }
    }

    /// The group inverse (reverse the word and flip every exponent).
    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Largest generator index appearing in the word (0 for the identity).
    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.index).max().unwrap_or(0)
    }
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        self.multiply(rhs)
    }
}

impl fmt::Display for FreeWord {
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

impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::BadWordEncoding(format!("bad letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FreeWord::from_ints(&values)
    }
}

/// An endomorphism of the free group of a fixed rank, given by the images of
/// the generators. Composition order follows the convention documented on
/// [`FreeGroupEndo::compose`]: in `e1.compose(&e2)`, `e2` acts first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeGroupEndo {
    images: Vec<FreeWord>,
}

impl FreeGroupEndo {
    /// Builds an endomorphism from generator images. Every letter index in
    /// every image must stay within the rank `images.len()`.
    pub fn new(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        for image in &images {
            let max = image.max_index();
            if max > rank {
                return Err(Error::GeneratorOutOfRange { index: max, rank });
            }
        }
        Ok(FreeGroupEndo { images })
    }

    /// The identity endomorphism of the given rank.
    pub fn identity(rank: usize) -> Self {
        FreeGroupEndo {
            images: (1..=rank).map(FreeWord::generator).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of the 1-based generator `index`.
    pub fn image(&self, index: usize) -> &FreeWord {
        &self.images[index - 1]
    }

    /// Substitutes generator images into `word` and reduces. A homomorphism:
    /// `apply(a·b) = apply(a)·apply(b)`.
    pub fn apply(&self, word: &FreeWord) -> Result<FreeWord> {
        let rank = self.rank();
        let mut letters = Vec::new();
        for letter in word.letters() {
            if letter.index > rank {
                return Err(Error::GeneratorOutOfRange {
                    index: letter.index,
                    rank,
                });
            }
            let image = &self.images[letter.index - 1];
            if letter.exponent == 1 {
                for &l in image.letters() {
                    push_reduced(&mut letters, l);
                }
            } else {
                for l in image.letters().iter().rev() {
                    push_reduced(&mut letters, l.inverse());
                }
            }
        }
        Ok(FreeWord { letters })
    }

    /// Composition `self ∘ other`: `other` acts first, then `self`.
    pub fn compose(&self, other: &FreeGroupEndo) -> Result<FreeGroupEndo> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeGroupEndo { images })
    }

    /// True iff every generator maps to itself.
    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters() == [Letter::new(i + 1, 1)])
    }
}
