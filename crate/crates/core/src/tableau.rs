//! Young tableaux with an explicit alphabet, and the hook-arm shapes `(m, n^b)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};

/// A filling of a left-justified Young diagram with entries from `1..=alphabet`.
///
/// Values built through [`Tableau::new`] or deserialization are semistandard.
/// [`Tableau::from_rows`] only checks the diagram, which lets callers ask
/// [`Tableau::is_semistandard`] about arbitrary fillings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct Tableau {
    alphabet: u32,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    alphabet: u32,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        Tableau::new(raw.rows, raw.alphabet)
    }
}

impl From<Tableau> for RawTableau {
    fn from(t: Tableau) -> Self {
        RawTableau { alphabet: t.alphabet, rows: t.rows }
    }
}

fn check_diagram(rows: &[Vec<u32>]) -> Result<()> {
    for (r, w) in rows.windows(2).enumerate() {
        if w[1].len() > w[0].len() {
            return Err(Error::MalformedShape { row: r + 1, len: w[1].len(), above: w[0].len() });
        }
    }
    Ok(())
}

/// First violation of the semistandard conditions, if any.
fn semistandard_violation(rows: &[Vec<u32>], alphabet: u32) -> Option<String> {
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v == 0 || v > alphabet {
                return Some(format!("entry {v} at ({}, {}) outside 1..={alphabet}", r + 1, c + 1));
            }
            if c > 0 && row[c - 1] > v {
                return Some(format!("row {} decreases at column {}", r + 1, c + 1));
            }
            if r > 0 && rows[r - 1][c] >= v {
                return Some(format!("column {} not strictly increasing at row {}", c + 1, r + 1));
            }
        }
    }
    None
}

/// Whether `rows` form a semistandard tableau over `1..=alphabet`.
///
/// Ragged input (a row longer than the one above) is an error rather than `false`.
pub fn validate_ssyt(rows: &[Vec<u32>], alphabet: u32) -> Result<bool> {
    check_diagram(rows)?;
    Ok(alphabet >= 1 && semistandard_violation(rows, alphabet).is_none())
}

impl Tableau {
    /// Builds a semistandard tableau, rejecting ragged rows and invalid fillings.
    pub fn new(rows: Vec<Vec<u32>>, alphabet: u32) -> Result<Self> {
        let t = Self::from_rows(rows, alphabet)?;
        if let Some(why) = semistandard_violation(&t.rows, alphabet) {
            return Err(Error::NotSemistandard(why));
        }
        Ok(t)
    }

    /// Builds a filling of a Young diagram without checking the entries.
    pub fn from_rows(mut rows: Vec<Vec<u32>>, alphabet: u32) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::EmptyAlphabet);
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        check_diagram(&rows)?;
        Ok(Self { alphabet, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>, alphabet: u32) -> Self {
        debug_assert!(validate_ssyt(&rows, alphabet).unwrap_or(false));
        Self { alphabet, rows }
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Option<u32> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    pub fn is_semistandard(&self) -> bool {
        semistandard_violation(&self.rows, self.alphabet).is_none()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("rows form a Young diagram")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Length-`alphabet` vector of letter multiplicities.
    pub fn content(&self) -> Composition {
        let mut counts = vec![0u32; self.alphabet as usize];
        for &v in self.rows.iter().flatten() {
            if let Some(slot) = counts.get_mut(v as usize - 1) {
                *slot += 1;
            }
        }
        Composition::new(counts)
    }

    /// Rows read left to right, starting with the bottom row.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Entries of column `c`, top to bottom.
    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.alphabet.to_string().len();
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v:>width$}")?;
            }
        }
        Ok(())
    }
}

/// The shape `(m, n^b)`: a first row of `m` cells over a rectangle of `b`
/// rows of `n` cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HookArmShape {
    m: u32,
    n: u32,
    b: u32,
}

impl HookArmShape {
    pub fn new(m: u32, n: u32, b: u32) -> Result<Self> {
        if n == 0 || b == 0 || m < n {
            return Err(Error::InvalidHookArm { m, n, b });
        }
        Ok(Self { m, n, b })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Alphabet size `b + 2` of the families studied on this shape.
    pub fn alphabet(&self) -> u32 {
        self.b + 2
    }

    pub fn cells(&self) -> u32 {
        self.m + self.n * self.b
    }

    pub fn partition(&self) -> Partition {
        let mut parts = vec![self.m];
        parts.extend(std::iter::repeat(self.n).take(self.b as usize));
        Partition::new(parts).expect("m >= n")
    }

    /// Recovers `(m, n, b)` from a partition of the form `(m, n^b)`.
    pub fn from_partition(shape: &Partition) -> Option<Self> {
        let parts = shape.parts();
        let (&m, body) = parts.split_first()?;
        let &n = body.first()?;
        if body.iter().any(|&p| p != n) {
            return None;
        }
        Self::new(m, n, body.len() as u32).ok()
    }

    pub fn contains(&self, t: &Tableau) -> bool {
        t.shape() == self.partition()
    }
}

impl fmt::Display for HookArmShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}^{})", self.m, self.n, self.b)
    }
}
