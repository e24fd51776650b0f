//! Brute-force enumeration and counting of symmetric quandle homomorphisms
//! from a presented symmetric quandle to a finite symmetric quandle.
//!
//! A coloring assigns a quandle element to every presentation generator so
//! that each relator evaluates equal on both sides. Counting first
//! eliminates generators that a relator defines outright — for a plat
//! presentation the wicket relators `x_{2j-1} = ρ(x_{2j})` cut the search
//! space to `(#X)^m` — then sweeps the remaining assignments, partitioned by
//! the first generator's value across worker threads. The count is a pure
//! fold, so the result is deterministic regardless of scheduling.

use rayon::prelude::*;

use crate::braided_surface::BraidSystem;
use crate::error::{Error, Result};
use crate::presentation::SymQuandlePresentation;
use crate::symmetric_quandle::{FiniteSymQuandle, FsqElement};

/// Default ceiling on the number of candidate assignments.
pub const DEFAULT_CEILING: u64 = 1_000_000_000;

/// Options for the coloring search.
#[derive(Clone, Copy, Debug)]
pub struct ColoringOptions {
    /// Refuse searches with more candidate assignments than this.
    pub ceiling: u64,
    /// Eliminate defined generators before searching.
    pub eliminate: bool,
}

impl Default for ColoringOptions {
    fn default() -> Self {
        ColoringOptions {
            ceiling: DEFAULT_CEILING,
            eliminate: true,
        }
    }
}

/// A satisfying assignment: `values[i]` colors generator `x_{i+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    pub values: Vec<usize>,
}

/// A relator side compiled to table lookups: start from the color of
/// `base`, apply `rho` if the sign is negative, then fold the conjugator
/// letters (`invert` marks letters acting through `rho`).
struct CompiledSide {
    base: usize,
    rho_first: bool,
    ops: Vec<(usize, bool)>,
}

impl CompiledSide {
    fn compile(side: &FsqElement) -> Self {
        CompiledSide {
            base: side.base() - 1,
            rho_first: side.sign() == -1,
            ops: side
                .conjugator()
                .letters()
                .iter()
                .map(|l| (l.index - 1, l.exponent == -1))
                .collect(),
        }
    }

    fn eval(&self, quandle: &FiniteSymQuandle, assignment: &[usize]) -> usize {
        let mut value = assignment[self.base];
        if self.rho_first {
            value = quandle.rho(value);
        }
        for &(idx, invert) in &self.ops {
            let mut y = assignment[idx];
            if invert {
                y = quandle.rho(y);
            }
            value = quandle.op(value, y);
        }
        value
    }
}

fn compile(p: &SymQuandlePresentation) -> Vec<(CompiledSide, CompiledSide)> {
    p.relators()
        .iter()
        .map(|(l, r)| (CompiledSide::compile(l), CompiledSide::compile(r)))
        .collect()
}

fn check_ceiling(size: usize, generators: usize, ceiling: u64) -> Result<()> {
    let space = (size as u128)
        .checked_pow(generators as u32)
        .unwrap_or(u128::MAX);
    if space > u128::from(ceiling) {
        return Err(Error::CeilingExceeded {
            required: space,
            ceiling,
        });
    }
    Ok(())
}

fn satisfied(
    relators: &[(CompiledSide, CompiledSide)],
    quandle: &FiniteSymQuandle,
    assignment: &[usize],
) -> bool {
    relators
        .iter()
        .all(|(l, r)| l.eval(quandle, assignment) == r.eval(quandle, assignment))
}

/// Counts all assignments of the last `free` positions of `assignment`
/// (earlier positions are fixed) that satisfy every relator.
fn count_tail(
    relators: &[(CompiledSide, CompiledSide)],
    quandle: &FiniteSymQuandle,
    assignment: &mut [usize],
    from: usize,
) -> u64 {
    if from == assignment.len() {
        return u64::from(satisfied(relators, quandle, assignment));
    }
    let mut total = 0;
    for v in 0..quandle.size() {
        assignment[from] = v;
        total += count_tail(relators, quandle, assignment, from + 1);
    }
    total
}

/// Exact number of colorings of the presented symmetric quandle in `X`,
/// with default options (generator elimination on, ceiling
/// [`DEFAULT_CEILING`]).
pub fn count_colorings(p: &SymQuandlePresentation, x: &FiniteSymQuandle) -> Result<u64> {
    count_colorings_with(p, x, &ColoringOptions::default())
}

/// Exact coloring count with explicit options. Refuses — never truncates —
/// searches whose assignment space exceeds the ceiling.
pub fn count_colorings_with(
    p: &SymQuandlePresentation,
    x: &FiniteSymQuandle,
    options: &ColoringOptions,
) -> Result<u64> {
    let reduced;
    let p = if options.eliminate {
        reduced = p.eliminate_definitions();
        &reduced
    } else {
        p
    };
    let k = p.num_generators();
    check_ceiling(x.size(), k, options.ceiling)?;
    let relators = compile(p);
    if k == 0 {
        return Ok(u64::from(satisfied(&relators, x, &[])));
    }
    let total = (0..x.size())
        .into_par_iter()
        .map(|first| {
            let mut assignment = vec![0usize; k];
            assignment[0] = first;
            count_tail(&relators, x, &mut assignment, 1)
        })
        .sum();
    Ok(total)
}

/// Lists up to `limit` colorings of the full presentation (no generator
/// elimination), in lexicographic order of the value vectors.
pub fn enumerate_colorings(
    p: &SymQuandlePresentation,
    x: &FiniteSymQuandle,
    limit: usize,
) -> Result<Vec<Coloring>> {
    enumerate_colorings_with_ceiling(p, x, limit, DEFAULT_CEILING)
}

/// As [`enumerate_colorings`], with an explicit search ceiling.
pub fn enumerate_colorings_with_ceiling(
    p: &SymQuandlePresentation,
    x: &FiniteSymQuandle,
    limit: usize,
    ceiling: u64,
) -> Result<Vec<Coloring>> {
    let k = p.num_generators();
    check_ceiling(x.size(), k, ceiling)?;
    let relators = compile(p);
    let mut found = Vec::new();
    if limit == 0 {
        return Ok(found);
    }
    if k == 0 {
        if satisfied(&relators, x, &[]) {
            found.push(Coloring { values: Vec::new() });
        }
        return Ok(found);
    }
    let mut assignment = vec![0usize; k];
    loop {
        if satisfied(&relators, x, &assignment) {
            found.push(Coloring {
                values: assignment.clone(),
            });
            if found.len() == limit {
                return Ok(found);
            }
        }
        // lexicographic odometer, least significant digit last
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(found);
            }
            pos -= 1;
            assignment[pos] += 1;
            if assignment[pos] < x.size() {
                break;
            }
            assignment[pos] = 0;
        }
    }
}

/// Coloring count of the plat closure of a braid system: the count of its
/// plat presentation. Requires an even degree.
pub fn coloring_count_for_system(bs: &BraidSystem, x: &FiniteSymQuandle) -> Result<u64> {
    coloring_count_for_system_with(bs, x, &ColoringOptions::default())
}

/// As [`coloring_count_for_system`], with explicit options.
pub fn coloring_count_for_system_with(
    bs: &BraidSystem,
    x: &FiniteSymQuandle,
    options: &ColoringOptions,
) -> Result<u64> {
    let p = SymQuandlePresentation::plat(bs)?;
    count_colorings_with(&p, x, options)
}
