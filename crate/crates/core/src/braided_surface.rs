//! Braid systems of braided surfaces: construction, the slide (Hurwitz)
//! action, the twisted `b(m,p)` / `b(m,p,g)` families, and combinatorial
//! invariants of plat closures.
//!
//! A braid system entry `(β, k, ε)` stands for the monodromy braid
//! `β^-1 σ_k^ε β`; a system is the ordered tuple of entries around the
//! branch points, all of one degree. The boundary braid is the left-to-right
//! product of the entry braids; a system is *genuine* when that product is
//! trivial (the boundary is the trivial closed braid, so the surface is a
//! 2-dimensional braid). Slide moves replace adjacent entries
//! `(g_j, g_{j+1})` by `(g_j g_{j+1} g_j^-1, g_j)` and generate Hurwitz
//! equivalence; every invariant computed here is slide-invariant.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free_group::Letter;

/// One branch-point monodromy `β^-1 σ_band^sign β`, stored in conjugated
/// form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidSystemEntry {
    conjugator: BraidWord,
    band: usize,
    sign: i8,
}

impl BraidSystemEntry {
    /// Builds an entry; the band must satisfy `1 <= band <= degree - 1` and
    /// the sign must be `±1`.
    pub fn new(conjugator: BraidWord, band: usize, sign: i8) -> Result<Self> {
        let degree = conjugator.degree();
        if band < 1 || band + 1 > degree {
            return Err(Error::BandOutOfRange {
                band,
                max: degree.saturating_sub(1),
                degree,
            });
        }
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidInput(format!(
                "entry sign must be 1 or -1, got {sign}"
            )));
        }
        Ok(BraidSystemEntry {
            conjugator,
            band,
            sign,
        })
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn band(&self) -> usize {
        self.band
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// The monodromy braid `β^-1 σ_band^sign β`.
    pub fn braid(&self) -> BraidWord {
        let degree = self.conjugator.degree();
        let middle = BraidWord::new(degree, [Letter::new(self.band, self.sign)])
            .expect("band is in range");
        self.conjugator
            .inverse()
            .concat(&middle)
            .expect("degrees match")
            .concat(&self.conjugator)
            .expect("degrees match")
    }
}

/// Direction of a slide move.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SlideDirection {
    /// `(g_j, g_{j+1}) -> (g_j g_{j+1} g_j^-1, g_j)`.
    Forward,
    /// The inverse move, `(g_j, g_{j+1}) -> (g_{j+1}, g_{j+1}^-1 g_j g_{j+1})`.
    Backward,
}

#[derive(Serialize, Deserialize)]
struct SystemFile {
    degree: usize,
    entries: Vec<EntryFile>,
}

#[derive(Serialize, Deserialize)]
struct EntryFile {
    conjugator: Vec<i64>,
    band: usize,
    sign: i8,
}

/// A braid system: the degree plus the ordered entry list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidSystem {
    degree: usize,
    entries: Vec<BraidSystemEntry>,
}

impl BraidSystem {
    /// Builds a system, checking that every entry has the stated degree.
    pub fn new(degree: usize, entries: Vec<BraidSystemEntry>) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidDegree);
        }
        for entry in &entries {
            if entry.conjugator.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: entry.conjugator.degree(),
                });
            }
        }
        Ok(BraidSystem { degree, entries })
    }

    /// Parses the JSON file format
    /// `{ "degree": n, "entries": [ { "conjugator": [..], "band": k, "sign": ±1 } ] }`.
    pub fn from_json(json: &str) -> Result<Self> {
        let file: SystemFile = serde_json::from_str(json)?;
        let entries = file
            .entries
            .into_iter()
            .map(|e| {
                BraidSystemEntry::new(
                    BraidWord::from_ints(file.degree, &e.conjugator)?,
                    e.band,
                    e.sign,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        BraidSystem::new(file.degree, entries)
    }

    pub fn to_json(&self) -> String {
        let file = SystemFile {
            degree: self.degree,
            entries: self
                .entries
                .iter()
                .map(|e| EntryFile {
                    conjugator: e.conjugator.to_ints(),
                    band: e.band,
                    sign: e.sign,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("system serializes")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &[BraidSystemEntry] {
        &self.entries
    }

    /// Left-to-right product of the entry braids.
    pub fn boundary_braid(&self) -> BraidWord {
        let mut product = BraidWord::identity(self.degree);
        for entry in &self.entries {
            product = product.concat(&entry.braid()).expect("degrees match");
        }
        product
    }

    /// True iff the boundary braid is trivial, i.e. the system presents a
    /// 2-dimensional braid.
    pub fn is_genuine(&self) -> bool {
        self.boundary_braid().is_trivial()
    }

    /// Necessary condition for the plat closure to exist: the boundary
    /// braid's permutation must carry wicket pairs to wicket pairs. (The
    /// full wicket-subgroup membership decision is out of scope, so a
    /// `true` here is not sufficient.)
    pub fn adequacy_necessary(&self) -> Result<bool> {
        self.boundary_braid().permutation().preserves_pairing()
    }

    /// Applies one slide move at position `j` (`1 <= j <= entries - 1`),
    /// re-expressing the moved entry in conjugated form. The boundary braid,
    /// the entry count, and the multiset of signs are preserved.
    pub fn slide(&self, j: usize, direction: SlideDirection) -> Result<BraidSystem> {
        if j < 1 || j >= self.entries.len() {
            return Err(Error::SlidePositionOutOfRange {
                j,
                entries: self.entries.len(),
            });
        }
        let left = &self.entries[j - 1];
        let right = &self.entries[j];
        let (new_left, new_right) = match direction {
            SlideDirection::Forward => {
                // g_j g_{j+1} g_j^-1 = (β_{j+1} g_j^-1)^-1 σ^ε (β_{j+1} g_j^-1)
                let conj = right
                    .conjugator
                    .concat(&left.braid().inverse())
                    .expect("degrees match");
                (
                    BraidSystemEntry::new(conj, right.band, right.sign)?,
                    left.clone(),
                )
            }
            SlideDirection::Backward => {
                // g_{j+1}^-1 g_j g_{j+1} = (β_j g_{j+1})^-1 σ^ε (β_j g_{j+1})
                let conj = left
                    .conjugator
                    .concat(&right.braid())
                    .expect("degrees match");
                (
                    right.clone(),
                    BraidSystemEntry::new(conj, left.band, left.sign)?,
                )
            }
        };
        let mut entries = self.entries.clone();
        entries[j - 1] = new_left;
        entries[j] = new_right;
        Ok(BraidSystem {
            degree: self.degree,
            entries,
        })
    }

    /// The twisted sphere family: degree `2m`, entries
    /// `(β, 2i-1, +), (β, 2i-1, -)` for `i = 1..m-1` with
    /// `β = (σ_2 σ_4 ⋯ σ_{2m-2})^p`. Its plat closure is a 2-knot.
    pub fn family_bmp(m: usize, p: usize) -> Result<BraidSystem> {
        if m < 2 || p < 1 {
            return Err(Error::BadFamilyParameters { m, p });
        }
        let degree = 2 * m;
        let step: Vec<i64> = (1..m).map(|i| 2 * i as i64).collect();
        let beta = BraidWord::from_ints(degree, &step)?.repeat(p);
        let mut entries = Vec::with_capacity(2 * m - 2);
        for i in 1..m {
            entries.push(BraidSystemEntry::new(beta.clone(), 2 * i - 1, 1)?);
            entries.push(BraidSystemEntry::new(beta.clone(), 2 * i - 1, -1)?);
        }
        BraidSystem::new(degree, entries)
    }

    /// The genus-`g` variant: `family_bmp(m, p)` followed by `g` entries
    /// `(β, 1, +)` and then `g` entries `(β, 1, -)`. Its plat closure is a
    /// connected orientable surface of genus `g`.
    pub fn family_bmpg(m: usize, p: usize, g: usize) -> Result<BraidSystem> {
        let mut system = BraidSystem::family_bmp(m, p)?;
        let beta = system.entries[0].conjugator.clone();
        for _ in 0..g {
            system
                .entries
                .push(BraidSystemEntry::new(beta.clone(), 1, 1)?);
        }
        for _ in 0..g {
            system
                .entries
                .push(BraidSystemEntry::new(beta.clone(), 1, -1)?);
        }
        Ok(system)
    }

    /// Euler characteristic of the plat closure: `degree - entries`
    /// (`m` caps on each side, one saddle per branch point). Requires an
    /// even degree.
    pub fn euler_characteristic(&self) -> Result<i64> {
        if !self.degree.is_multiple_of(2) {
            return Err(Error::OddDegree {
                degree: self.degree,
            });
        }
        Ok(self.degree as i64 - self.entries.len() as i64)
    }

    /// Number of connected components of the plat closure, computed as the
    /// orbit count of the strand set under the branch transpositions
    /// together with the wicket pairings `(2i-1, 2i)`. Only defined here
    /// for genuine systems, where the wicket pairing at the boundary is the
    /// standard one.
    pub fn component_count(&self) -> Result<usize> {
        if !self.degree.is_multiple_of(2) {
            return Err(Error::OddDegree {
                degree: self.degree,
            });
        }
        if !self.is_genuine() {
            return Err(Error::NotGenuine);
        }
        let mut uf = UnionFind::new(self.degree);
        for entry in &self.entries {
            let perm = entry.braid().permutation();
            for x in 1..=self.degree {
                let y = perm.apply(x);
                if y != x {
                    uf.union(x - 1, y - 1);
                }
            }
        }
        for i in 1..=self.degree / 2 {
            uf.union(2 * i - 2, 2 * i - 1);
        }
        Ok(uf.count())
    }
}

/// Smallest exponent bound certified by a coloring count: the least `k`
/// with `order^k >= count`, i.e. `ceil(log_order(count))`. Requires
/// `count >= 1` and `order >= 2`.
pub fn plat_lower_bound(count: u64, order: u64) -> Result<u32> {
    if count < 1 || order < 2 {
        return Err(Error::BadBoundArguments { count, order });
    }
    let mut power: u128 = 1;
    let mut k = 0u32;
    while power < u128::from(count) {
        power *= u128::from(order);
        k += 1;
    }
    Ok(k)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[ry] = rx;
        }
    }

    fn count(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x) == x)
            .count()
    }
}
