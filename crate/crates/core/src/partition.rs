//! Integer partitions and compositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing tuple of positive integers. Trailing zeros are
/// dropped on construction, so equality compares normalized parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "{parts:?} is not weakly decreasing at index {i}"
            )));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The conjugate partition: part `j` counts the parts that are `> j`.
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..first)
                .map(|j| self.0.iter().filter(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    /// `sum_i (i - 1) * parts[i]` with 1-indexed `i`.
    pub fn kappa(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A tuple of nonnegative integers in no particular order, used for the
/// content of a tableau. Zero parts are kept: the length is the alphabet size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Multiplicity of letter `i` (1-indexed); zero outside the alphabet.
    pub fn count(&self, letter: u32) -> u32 {
        if letter == 0 {
            return 0;
        }
        self.0.get(letter as usize - 1).copied().unwrap_or(0)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// The parts sorted into weakly decreasing order.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted parts are weakly decreasing")
    }

    /// `(mu_k, mu_1, ..., mu_{k-1})`, the content of a promoted tableau.
    pub fn rotate_right(&self) -> Composition {
        let mut parts = self.0.clone();
        if !parts.is_empty() {
            parts.rotate_right(1);
        }
        Composition(parts)
    }

    pub fn kappa(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }
}

impl From<Vec<u32>> for Composition {
    fn from(parts: Vec<u32>) -> Self {
        Self(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All compositions of `total` into exactly `len` parts, each at least
/// `min_part`, in lexicographic order.
pub fn compositions(total: u32, len: usize, min_part: u32) -> Vec<Composition> {
    fn go(remaining: u32, slots: usize, min_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 1 {
            if remaining >= min_part {
                cur.push(remaining);
                out.push(Composition(cur.clone()));
                cur.pop();
            }
            return;
        }
        let reserve = min_part * (slots as u32 - 1);
        if remaining < reserve {
            return;
        }
        for part in min_part..=remaining - reserve {
            cur.push(part);
            go(remaining - part, slots - 1, min_part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    go(total, len, min_part, &mut Vec::with_capacity(len), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_normalize() {
        let p = Partition::new(vec![3, 1, 0, 0]).unwrap();
        assert_eq!(p, Partition::new(vec![3, 1]).unwrap());
        assert_eq!(p.weight(), 4);
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn conjugate_of_4433() {
        let p = Partition::new(vec![4, 4, 3, 3]).unwrap();
        assert_eq!(p.conjugate().parts(), &[4, 4, 4, 2]);
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn kappa_matches_definition() {
        // 0*4 + 1*4 + 2*3 + 3*3
        assert_eq!(Partition::new(vec![4, 4, 3, 3]).unwrap().kappa(), 19);
    }

    #[test]
    fn rotation_moves_last_part_first() {
        let mu = Composition::new(vec![2, 2, 2, 1, 3]);
        assert_eq!(mu.rotate_right().parts(), &[3, 2, 2, 2, 1]);
    }

    #[test]
    fn composition_counts() {
        // C(total - 1, len - 1) positive compositions
        assert_eq!(compositions(7, 3, 1).len(), 15);
        // C(total + len - 1, len - 1) weak compositions
        assert_eq!(compositions(4, 3, 0).len(), 15);
        assert!(compositions(2, 3, 1).is_empty());
        let all = compositions(5, 3, 1);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|c| c.total() == 5));
    }
}
