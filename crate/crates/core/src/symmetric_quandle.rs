//! Free symmetric quandle elements with the braid action, and finite
//! symmetric quandles given by validated operation tables.
//!
//! An element of the free symmetric quandle on generators `x_1, x_2, ...` is
//! a triple `(sign, base, conjugator)`: the generator `x_base` (or its
//! involution image when the sign is negative) conjugated by a free-group
//! word. The quandle operation is
//! `(a, w)^(b, z) = (a, w z^-1 b z)`,
//! and the good involution flips the sign while fixing base and conjugator.
//! Elements are kept in canonical form: the conjugator never starts with a
//! letter of the base generator, since `(a, w)` and `(a, a w)` name the same
//! element.
//!
//! Finite symmetric quandles are operation tables over `0..n` together with
//! an involution table, accepted only after an exhaustive check of the
//! quandle axioms Q1-Q3 and the good-involution axioms SQ1-SQ2.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{artin_generator_endo, BraidWord};
use crate::error::{Error, Result};
use crate::free_group::{FreeGroupEndo, FreeWord, Letter};

/// An element of the free symmetric quandle: `x_base` conjugated by
/// `conjugator`, with the involution applied iff `sign` is `-1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FsqElement {
    sign: i8,
    base: usize,
    conjugator: FreeWord,
}

impl FsqElement {
    /// Builds an element in canonical form: leading letters of the base
    /// generator are stripped from the (already reduced) conjugator.
    pub fn new(sign: i8, base: usize, conjugator: FreeWord) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        assert!(base >= 1, "generator index must be positive");
        let letters = conjugator.letters();
        let skip = letters.iter().take_while(|l| l.index == base).count();
        let conjugator = if skip == 0 {
            conjugator
        } else {
            FreeWord::reduce(letters[skip..].iter().copied())
        };
        FsqElement {
            sign,
            base,
            conjugator,
        }
    }

    /// The plain generator `x_base`.
    pub fn generator(base: usize) -> Self {
        FsqElement::new(1, base, FreeWord::identity())
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn conjugator(&self) -> &FreeWord {
        &self.conjugator
    }

    /// The quandle operation `self ^ other`.
    pub fn op(&self, other: &FsqElement) -> FsqElement {
        let mut conj = self.conjugator.multiply(&other.conjugator.inverse());
        conj = conj.multiply(&FreeWord::reduce([Letter::new(other.base, other.sign)]));
        conj = conj.multiply(&other.conjugator);
        FsqElement::new(self.sign, self.base, conj)
    }

    /// The good involution: flips the sign.
    pub fn rho(&self) -> FsqElement {
        FsqElement {
            sign: -self.sign,
            base: self.base,
            conjugator: self.conjugator.clone(),
        }
    }

    /// The image in the associated group: `conjugator^-1 · x_base^sign ·
    /// conjugator` (the involution becomes group inversion).
    pub fn group_word(&self) -> FreeWord {
        let mid = FreeWord::reduce([Letter::new(self.base, self.sign)]);
        self.conjugator.inverse().multiply(&mid).multiply(&self.conjugator)
    }

    /// Largest generator index appearing in the element.
    pub fn max_index(&self) -> usize {
        self.base.max(self.conjugator.max_index())
    }

    /// True iff generator `g` occurs, as the base or inside the conjugator.
    pub fn mentions(&self, g: usize) -> bool {
        self.base == g || self.conjugator.letters().iter().any(|l| l.index == g)
    }
}

impl fmt::Display for FsqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x{} ^ [{}]",
            if self.sign == 1 { '+' } else { '-' },
            self.base,
            self.conjugator
        )
    }
}

/// Images of the free-symmetric-quandle generators `x_1..x_n` under the
/// Artin action of a braid word, the left factor acting first. For `σ_i`
/// the images are `x_i ↦ x_{i+1}^(x_i^-1)`, `x_{i+1} ↦ x_i`, rest fixed;
/// conjugators are transported through the group-level Artin endomorphism.
pub fn braid_fsq_images(b: &BraidWord) -> Vec<FsqElement> {
    let n = b.degree();
    let mut images: Vec<FsqElement> = (1..=n).map(FsqElement::generator).collect();
    for &letter in b.letters() {
        let gen_endo = artin_generator_endo(n, letter.index, letter.exponent);
        for image in &mut images {
            *image = apply_artin_generator(letter, image, &gen_endo);
        }
    }
    images
}

fn apply_artin_generator(letter: Letter, x: &FsqElement, gen_endo: &FreeGroupEndo) -> FsqElement {
    let i = letter.index;
    let (base, prefix) = if letter.exponent == 1 {
        if x.base == i {
            (i + 1, FreeWord::reduce([Letter::new(i, -1)]))
        } else if x.base == i + 1 {
            (i, FreeWord::identity())
        } else {
            (x.base, FreeWord::identity())
        }
    } else if x.base == i {
        (i + 1, FreeWord::identity())
    } else if x.base == i + 1 {
        (i, FreeWord::generator(i + 1))
    } else {
        (x.base, FreeWord::identity())
    };
    let transported = gen_endo
        .apply(&x.conjugator)
        .expect("generator endo covers every index");
    FsqElement::new(x.sign, base, prefix.multiply(&transported))
}

/// One violated axiom with its witness, in 0-based table coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Violation {
    /// `op[x][x] != x`.
    Q1 { x: usize },
    /// Column `y` is not a bijection: `op[a][y] == op[b][y]` with `a != b`.
    Q2 { y: usize, a: usize, b: usize },
    /// `(x^y)^z != (x^z)^(y^z)`.
    Q3 { x: usize, y: usize, z: usize },
    /// `rho[rho[x]] != x`.
    RhoNotInvolution { x: usize },
    /// `rho[x^y] != rho[x]^y`.
    Sq1 { x: usize, y: usize },
    /// `x^rho[y] != x^(y^-1)`.
    Sq2 { x: usize, y: usize },
}

impl Violation {
    /// Short name of the violated axiom.
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::Q1 { .. } => "Q1",
            Violation::Q2 { .. } => "Q2",
            Violation::Q3 { .. } => "Q3",
            Violation::RhoNotInvolution { .. } => "involution",
            Violation::Sq1 { .. } => "SQ1",
            Violation::Sq2 { .. } => "SQ2",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Q1 { x } => write!(f, "Q1 violated at x={x}: op[{x}][{x}] != {x}"),
            Violation::Q2 { y, a, b } => write!(
                f,
                "Q2 violated in column y={y}: op[{a}][{y}] == op[{b}][{y}]"
            ),
            Violation::Q3 { x, y, z } => write!(
                f,
                "Q3 violated at (x,y,z)=({x},{y},{z}): (x^y)^z != (x^z)^(y^z)"
            ),
            Violation::RhoNotInvolution { x } => {
                write!(f, "rho is not an involution at x={x}")
            }
            Violation::Sq1 { x, y } => write!(
                f,
                "SQ1 violated at (x,y)=({x},{y}): rho(x^y) != rho(x)^y"
            ),
            Violation::Sq2 { x, y } => write!(
                f,
                "SQ2 violated at (x,y)=({x},{y}): x^rho(y) != x^(y^-1)"
            ),
        }
    }
}

/// Exhaustive validation result; clean iff no violation was found.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// First witness for the named axiom, if that axiom is violated.
    pub fn first_for(&self, axiom: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom() == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "all axioms hold");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Serializable table form of a finite symmetric quandle, with 0-based
/// entries: `op[x][y] = x^y` and `rho` the involution.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuandleTables {
    pub size: usize,
    pub op: Vec<Vec<usize>>,
    pub rho: Vec<usize>,
}

fn check_shape(op: &[Vec<usize>], rho: &[usize]) -> Result<()> {
    let n = op.len();
    if n == 0 {
        return Err(Error::MalformedTables("a quandle is non-empty".to_string()));
    }
    for (x, row) in op.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTables(format!(
                "op row {x} has length {} but the table has {n} rows",
                row.len()
            )));
        }
        for (y, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::MalformedTables(format!(
                    "op[{x}][{y}] = {v} is out of range 0..{n}"
                )));
            }
        }
    }
    if rho.len() != n {
        return Err(Error::MalformedTables(format!(
            "rho has length {} but the table has {n} rows",
            rho.len()
        )));
    }
    if let Some((x, &v)) = rho.iter().enumerate().find(|(_, &v)| v >= n) {
        return Err(Error::MalformedTables(format!(
            "rho[{x}] = {v} is out of range 0..{n}"
        )));
    }
    Ok(())
}

fn check_op_shape(op: &[Vec<usize>]) -> Result<()> {
    let identity: Vec<usize> = (0..op.len()).collect();
    check_shape(op, &identity)
}

#[allow(clippy::needless_range_loop)]
fn op_violations(op: &[Vec<usize>]) -> Vec<Violation> {
    let n = op.len();
    let mut violations = Vec::new();
    for x in 0..n {
        if op[x][x] != x {
            violations.push(Violation::Q1 { x });
        }
    }
    for y in 0..n {
        let mut source = vec![usize::MAX; n];
        for x in 0..n {
            let v = op[x][y];
            if source[v] != usize::MAX {
                violations.push(Violation::Q2 {
                    y,
                    a: source[v],
                    b: x,
                });
            } else {
                source[v] = x;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op[op[x][y]][z] != op[op[x][z]][op[y][z]] {
                    violations.push(Violation::Q3 { x, y, z });
                }
            }
        }
    }
    violations
}

/// Inverse operation table: `inv_op[x][y] = x^(y^-1)`. Only well defined for
/// columns that are bijections; returns `None` if any column fails Q2.
#[allow(clippy::needless_range_loop)]
fn derive_inv_op(op: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = op.len();
    let mut inv = vec![vec![usize::MAX; n]; n];
    for y in 0..n {
        for x in 0..n {
            let v = op[x][y];
            if inv[v][y] != usize::MAX {
                return None;
            }
            inv[v][y] = x;
        }
    }
    Some(inv)
}

/// Exhaustively checks the quandle axioms Q1-Q3 and the good-involution
/// axioms (involutivity, SQ1, SQ2), returning every violation with a
/// witness. Errors only on ragged or out-of-range tables.
#[allow(clippy::needless_range_loop)]
pub fn validate(op: &[Vec<usize>], rho: &[usize]) -> Result<ValidationReport> {
    check_shape(op, rho)?;
    let n = op.len();
    let mut violations = op_violations(op);
    for x in 0..n {
        if rho[rho[x]] != x {
            violations.push(Violation::RhoNotInvolution { x });
        }
    }
    for x in 0..n {
        for y in 0..n {
            if rho[op[x][y]] != op[rho[x]][y] {
                violations.push(Violation::Sq1 { x, y });
            }
        }
    }
    if let Some(inv_op) = derive_inv_op(op) {
        for x in 0..n {
            for y in 0..n {
                if op[x][rho[y]] != inv_op[x][y] {
                    violations.push(Violation::Sq2 { x, y });
                }
            }
        }
    }
    Ok(ValidationReport { violations })
}

/// True iff the operation table is a kei: `(x^y)^y = x` for all `x, y`.
/// Requires a Q1-Q3-valid table. The identity map is a good involution of a
/// quandle exactly when the quandle is a kei.
pub fn is_kei_table(op: &[Vec<usize>]) -> Result<bool> {
    check_op_shape(op)?;
    let report = ValidationReport {
        violations: op_violations(op),
    };
    if !report.is_clean() {
        return Err(Error::InvalidQuandle(report));
    }
    let n = op.len();
    Ok((0..n).all(|x| (0..n).all(|y| op[op[x][y]][y] == x)))
}

const GOOD_INVOLUTION_SIZE_LIMIT: usize = 12;

/// Enumerates every good involution of a Q1-Q3-valid operation table, by
/// exhaustive search over involutions filtered through SQ1 and SQ2. The
/// result is sorted lexicographically. Sizes above 12 are refused.
pub fn good_involutions(op: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    check_op_shape(op)?;
    let n = op.len();
    if n > GOOD_INVOLUTION_SIZE_LIMIT {
        return Err(Error::QuandleTooLarge {
            size: n,
            max: GOOD_INVOLUTION_SIZE_LIMIT,
        });
    }
    let report = ValidationReport {
        violations: op_violations(op),
    };
    if !report.is_clean() {
        return Err(Error::InvalidQuandle(report));
    }
    let inv_op = derive_inv_op(op).expect("Q2 holds");

    let mut found = Vec::new();
    let mut rho = vec![usize::MAX; n];
    search_involutions(op, &inv_op, &mut rho, 0, &mut found);
    found.sort();
    Ok(found)
}

fn search_involutions(
    op: &[Vec<usize>],
    inv_op: &[Vec<usize>],
    rho: &mut Vec<usize>,
    from: usize,
    found: &mut Vec<Vec<usize>>,
) {
    let n = op.len();
    let next = (from..n).find(|&x| rho[x] == usize::MAX);
    let Some(x) = next else {
        if is_good(op, inv_op, rho) {
            found.push(rho.clone());
        }
        return;
    };
    rho[x] = x;
    search_involutions(op, inv_op, rho, x + 1, found);
    rho[x] = usize::MAX;
    for y in x + 1..n {
        if rho[y] == usize::MAX {
            rho[x] = y;
            rho[y] = x;
            search_involutions(op, inv_op, rho, x + 1, found);
            rho[x] = usize::MAX;
            rho[y] = usize::MAX;
        }
    }
}

fn is_good(op: &[Vec<usize>], inv_op: &[Vec<usize>], rho: &[usize]) -> bool {
    let n = op.len();
    for x in 0..n {
        for y in 0..n {
            if rho[op[x][y]] != op[rho[x]][y] || op[x][rho[y]] != inv_op[x][y] {
                return false;
            }
        }
    }
    true
}

/// A finite symmetric quandle: a fully validated operation table with a good
/// involution. Elements are `0..size`. Immutable after construction, so a
/// single instance can be shared freely across threads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteSymQuandle {
    op: Vec<Vec<usize>>,
    rho: Vec<usize>,
    inv_op: Vec<Vec<usize>>,
}

impl FiniteSymQuandle {
    /// Validates the tables and builds the quandle; the only constructor.
    pub fn from_tables(op: Vec<Vec<usize>>, rho: Vec<usize>) -> Result<Self> {
        let report = validate(&op, &rho)?;
        if !report.is_clean() {
            return Err(Error::InvalidQuandle(report));
        }
        let inv_op = derive_inv_op(&op).expect("Q2 holds");
        Ok(FiniteSymQuandle { op, rho, inv_op })
    }

    /// Parses and validates the JSON table format
    /// `{ "size": n, "op": [[...]], "rho": [...] }` (0-based entries).
    pub fn from_json(json: &str) -> Result<Self> {
        let tables: QuandleTables = serde_json::from_str(json)?;
        if tables.size != tables.op.len() {
            return Err(Error::MalformedTables(format!(
                "declared size {} but op has {} rows",
                tables.size,
                tables.op.len()
            )));
        }
        FiniteSymQuandle::from_tables(tables.op, tables.rho)
    }

    /// The dihedral quandle `R_p` on `0..p` with `a^b = 2b - a (mod p)` and
    /// the identity involution.
    pub fn dihedral(p: usize) -> Result<Self> {
        if p < 1 {
            return Err(Error::BadDihedralOrder);
        }
        let op = (0..p)
            .map(|a| (0..p).map(|b| (2 * b + p - a) % p).collect())
            .collect();
        FiniteSymQuandle::from_tables(op, (0..p).collect())
    }

    /// The trivial quandle (`x^y = x`) of size `n` with the given
    /// involution; every involution is good here.
    pub fn trivial(n: usize, rho: Vec<usize>) -> Result<Self> {
        let op = (0..n).map(|x| vec![x; n]).collect();
        FiniteSymQuandle::from_tables(op, rho)
    }

    pub fn size(&self) -> usize {
        self.op.len()
    }

    /// `x^y`.
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x][y]
    }

    /// `x^(y^-1)`.
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.inv_op[x][y]
    }

    /// The good involution.
    pub fn rho(&self, x: usize) -> usize {
        self.rho[x]
    }

    pub fn tables(&self) -> QuandleTables {
        QuandleTables {
            size: self.size(),
            op: self.op.clone(),
            rho: self.rho.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.tables()).expect("tables serialize")
    }

    /// True iff `(x^y)^y = x` for all `x, y`.
    pub fn is_kei(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..n).all(|y| self.op[self.op[x][y]][y] == x))
    }

    /// Evaluates a free-symmetric-quandle element under an assignment of
    /// quandle elements to the generators (`assignment[i-1]` colors `x_i`).
    /// Starts from the base color, applies `rho` for a negative sign, then
    /// folds the conjugator letters: `x_j` acts by `^assignment[j]` and
    /// `x_j^-1` by `^rho(assignment[j])`.
    pub fn evaluate(&self, x: &FsqElement, assignment: &[usize]) -> Result<usize> {
        let n = self.size();
        let color_of = |index: usize| -> Result<usize> {
            if index > assignment.len() {
                return Err(Error::AssignmentTooShort {
                    index,
                    len: assignment.len(),
                });
            }
            let v = assignment[index - 1];
            if v >= n {
                return Err(Error::ElementOutOfRange { value: v, size: n });
            }
            Ok(v)
        };
        let mut value = color_of(x.base())?;
        if x.sign() == -1 {
            value = self.rho[value];
        }
        for letter in x.conjugator().letters() {
            let mut y = color_of(letter.index)?;
            if letter.exponent == -1 {
                y = self.rho[y];
            }
            value = self.op[value][y];
        }
        Ok(value)
    }
}
