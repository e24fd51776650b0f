//! Symmetric quandle presentations: generation from braid systems, Tietze
//! generator elimination, and emission of the associated group presentation.
//!
//! A presentation is a generator count plus a list of relators, each relator
//! a pair of free-symmetric-quandle elements asserted equal. For a braid
//! system of degree `n` the branch relators are
//! `Artin(β_j)(x_{k_j}) = Artin(β_j)(x_{k_j + 1})`, one per entry (the
//! entry's sign does not enter); the plat-form presentation adds the wicket
//! relators `x_{2j-1} = ρ(x_{2j})`.
//!
//! Only the generator-elimination fragment of the Tietze calculus is
//! implemented: substituting a defining relator into the rest and dropping
//! the generator. That move keeps the set of colorings into any finite
//! symmetric quandle in natural bijection, which is all the coloring search
//! needs; general consequence search is out of scope.

use std::collections::HashSet;
use std::fmt;

use crate::braided_surface::BraidSystem;
use crate::error::{Error, Result};
use crate::free_group::{FreeWord, Letter};
use crate::symmetric_quandle::{braid_fsq_images, FsqElement};

/// A finite symmetric quandle presentation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymQuandlePresentation {
    num_generators: usize,
    relators: Vec<(FsqElement, FsqElement)>,
    labels: Option<Vec<String>>,
}

impl SymQuandlePresentation {
    /// Builds a presentation, checking that every generator index stays
    /// within `num_generators` and that labels, when given, match.
    pub fn new(
        num_generators: usize,
        relators: Vec<(FsqElement, FsqElement)>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        for (lhs, rhs) in &relators {
            for side in [lhs, rhs] {
                let max = side.max_index();
                if max > num_generators {
                    return Err(Error::GeneratorOutOfRange {
                        index: max,
                        rank: num_generators,
                    });
                }
            }
        }
        if let Some(labels) = &labels {
            if labels.len() != num_generators {
                return Err(Error::InvalidInput(format!(
                    "{} labels for {} generators",
                    labels.len(),
                    num_generators
                )));
            }
        }
        Ok(SymQuandlePresentation {
            num_generators,
            relators,
            labels,
        })
    }

    /// The free presentation on `n` generators.
    pub fn free(n: usize) -> Self {
        SymQuandlePresentation {
            num_generators: n,
            relators: Vec::new(),
            labels: None,
        }
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn relators(&self) -> &[(FsqElement, FsqElement)] {
        &self.relators
    }

    /// Display name of the 1-based generator `i`.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(labels) => labels[i - 1].clone(),
            None => format!("x{i}"),
        }
    }

    /// Branch relators of a braided surface: `n` generators and one relator
    /// per entry, both sides produced by the Artin images of the entry's
    /// conjugating braid.
    pub fn braided_surface(bs: &BraidSystem) -> Self {
        let mut relators = Vec::with_capacity(bs.entries().len());
        for entry in bs.entries() {
            let images = braid_fsq_images(entry.conjugator());
            let k = entry.band();
            relators.push((images[k - 1].clone(), images[k].clone()));
        }
        SymQuandlePresentation {
            num_generators: bs.degree(),
            relators,
            labels: None,
        }
    }

    /// The plat-form presentation: the branch relators plus one wicket
    /// relator `x_{2j-1} = ρ(x_{2j})` per strand pair. Requires an even
    /// degree.
    pub fn plat(bs: &BraidSystem) -> Result<Self> {
        if !bs.degree().is_multiple_of(2) {
            return Err(Error::OddDegree {
                degree: bs.degree(),
            });
        }
        let mut p = SymQuandlePresentation::braided_surface(bs);
        for j in 1..=bs.degree() / 2 {
            p.relators.push((
                FsqElement::generator(2 * j - 1),
                FsqElement::generator(2 * j).rho(),
            ));
        }
        Ok(p)
    }

    /// Eliminates generator `g` using relator `r`, which must have one side
    /// equal to the bare generator (either sign, empty conjugator) and the
    /// other side free of `g`. The defining expression is substituted into
    /// every other relator — in bases and in conjugator letters — indices
    /// above `g` are compacted, and the relator list is deduplicated (as
    /// unordered pairs, dropping relators whose sides became equal). The
    /// colorings into any finite symmetric quandle are in natural bijection
    /// before and after.
    pub fn eliminate_generator(&self, g: usize, r: usize) -> Result<Self> {
        if r >= self.relators.len() {
            return Err(Error::RelatorOutOfRange {
                index: r,
                count: self.relators.len(),
            });
        }
        if g < 1 || g > self.num_generators {
            return Err(Error::GeneratorOutOfRange {
                index: g,
                rank: self.num_generators,
            });
        }
        let (lhs, rhs) = &self.relators[r];
        let defining = Self::defining_expression(g, lhs, rhs)
            .or_else(|| Self::defining_expression(g, rhs, lhs))
            .ok_or_else(|| Error::NotEliminable {
                generator: g,
                reason: format!(
                    "relator {} does not define x{} (bare generator on one side, \
                     the other side free of it)",
                    r, g
                ),
            })?;

        // group-level image of x_g, used to substitute conjugator letters
        let group_image = defining.group_word();

        let substitute_word = |w: &FreeWord| -> FreeWord {
            let mut out = FreeWord::identity();
            for &letter in w.letters() {
                if letter.index == g {
                    let piece = if letter.exponent == 1 {
                        group_image.clone()
                    } else {
                        group_image.inverse()
                    };
                    out = out.multiply(&piece);
                } else {
                    out = out.multiply(&FreeWord::reduce([letter]));
                }
            }
            out
        };
        let substitute_side = |side: &FsqElement| -> FsqElement {
            let w = substitute_word(side.conjugator());
            if side.base() == g {
                let flipped = if side.sign() == 1 {
                    defining.clone()
                } else {
                    defining.rho()
                };
                FsqElement::new(
                    flipped.sign(),
                    flipped.base(),
                    flipped.conjugator().multiply(&w),
                )
            } else {
                FsqElement::new(side.sign(), side.base(), w)
            }
        };
        let compact_word = |w: &FreeWord| -> FreeWord {
            FreeWord::reduce(w.letters().iter().map(|l| {
                debug_assert!(l.index != g);
                if l.index > g {
                    Letter::new(l.index - 1, l.exponent)
                } else {
                    *l
                }
            }))
        };
        let compact_side = |side: &FsqElement| -> FsqElement {
            let base = if side.base() > g {
                side.base() - 1
            } else {
                side.base()
            };
            FsqElement::new(side.sign(), base, compact_word(side.conjugator()))
        };

        let mut seen: HashSet<(FsqElement, FsqElement)> = HashSet::new();
        let mut relators = Vec::new();
        for (i, (lhs, rhs)) in self.relators.iter().enumerate() {
            if i == r {
                continue;
            }
            let l = compact_side(&substitute_side(lhs));
            let rt = compact_side(&substitute_side(rhs));
            if l == rt {
                continue;
            }
            let key = if l <= rt {
                (l.clone(), rt.clone())
            } else {
                (rt.clone(), l.clone())
            };
            if seen.insert(key) {
                relators.push((l, rt));
            }
        }

        let labels = self.labels.as_ref().map(|labels| {
            let mut labels = labels.clone();
            labels.remove(g - 1);
            labels
        });
        Ok(SymQuandlePresentation {
            num_generators: self.num_generators - 1,
            relators,
            labels,
        })
    }

    /// If `bare` is the bare generator `g` and `other` does not mention `g`,
    /// returns the expression defining `x_g`.
    fn defining_expression(g: usize, bare: &FsqElement, other: &FsqElement) -> Option<FsqElement> {
        if bare.base() != g || !bare.conjugator().is_identity() {
            return None;
        }
        if other.mentions(g) {
            return None;
        }
        // bare = (s, g, e); x_g = other resp. rho(other)
        Some(if bare.sign() == 1 {
            other.clone()
        } else {
            other.rho()
        })
    }

    /// Repeatedly eliminates generators that some relator defines outright
    /// (one side a bare generator, the other side free of it). This is the
    /// reduction used by the coloring search; for a plat presentation the
    /// wicket relators alone already cut the generator count in half.
    pub fn eliminate_definitions(&self) -> Self {
        let mut current = self.clone();
        loop {
            let next = current.relators.iter().enumerate().find_map(|(r, (lhs, rhs))| {
                [(lhs, rhs), (rhs, lhs)].into_iter().find_map(|(bare, other)| {
                    let g = bare.base();
                    Self::defining_expression(g, bare, other).map(|_| (g, r))
                })
            });
            match next {
                Some((g, r)) => {
                    current = current
                        .eliminate_generator(g, r)
                        .expect("defining shape was just checked");
                }
                None => return current,
            }
        }
    }

    /// Emits the associated group presentation as text: one generator `g_i`
    /// per quandle generator, a relator
    /// `w^-1 g_a^s w (z^-1 g_b^t z)^-1` per quandle relator
    /// `(s,a,w) = (t,b,z)`, with the involution becoming group inversion.
    pub fn to_group_presentation(&self) -> String {
        let mut out = String::from("< ");
        for i in 1..=self.num_generators {
            if i > 1 {
                out.push_str(", ");
            }
            out.push_str(&format!("g{i}"));
        }
        out.push_str(" | ");
        let mut first = true;
        for (lhs, rhs) in &self.relators {
            let word = lhs.group_word().multiply(&rhs.group_word().inverse());
            if word.is_identity() {
                continue;
            }
            if !first {
                out.push_str(", ");
            }
            let text: Vec<String> = word
                .letters()
                .iter()
                .map(|l| {
                    if l.exponent == 1 {
                        format!("g{}", l.index)
                    } else {
                        format!("g{}^-1", l.index)
                    }
                })
                .collect();
            out.push_str(&text.join("*"));
            first = false;
        }
        out.push_str(" >");
        out
    }
}

impl fmt::Display for SymQuandlePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "generators:")?;
        for i in 1..=self.num_generators {
            write!(f, " {}", self.label(i))?;
        }
        for (lhs, rhs) in &self.relators {
            write!(f, "\n{lhs} = {rhs}")?;
        }
        Ok(())
    }
}
