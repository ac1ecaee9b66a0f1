//! Charge and cocharge, Kostka-Foulkes polynomials, and the plane-partition
//! weight of hook-arm tableaux.

use serde::{Deserialize, Serialize};

use crate::bijection::phi;
use crate::enumeration::{enumerate_generic, SsytFamily};
use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};
use crate::poly::IntPolynomial;
use crate::tableau::{HookArmShape, Tableau};

fn binomial2(l: usize) -> u32 {
    (l * l.saturating_sub(1) / 2) as u32
}

fn check_permutation(w: &[u32]) -> Result<()> {
    let mut seen = vec![false; w.len()];
    for &v in w {
        match seen.get_mut((v as usize).wrapping_sub(1)) {
            Some(slot) if !*slot => *slot = true,
            _ => return Err(Error::Domain(format!("{w:?} is not a permutation of 1..={}", w.len()))),
        }
    }
    Ok(())
}

/// Sum over `j` of `cc(w, j)`, where `cc(w, 1) = 0` and `cc(w, j)` exceeds
/// `cc(w, j - 1)` by one exactly when `j` appears before `j - 1`.
pub fn cocharge_permutation(w: &[u32]) -> Result<u32> {
    check_permutation(w)?;
    let mut pos = vec![0usize; w.len() + 1];
    for (i, &v) in w.iter().enumerate() {
        pos[v as usize] = i;
    }
    let mut level = 0;
    let mut total = 0;
    for j in 2..=w.len() {
        if pos[j] < pos[j - 1] {
            level += 1;
        }
        total += level;
    }
    Ok(total)
}

/// `C(l, 2) - cocharge` for a permutation of length `l`.
pub fn charge_permutation(w: &[u32]) -> Result<u32> {
    Ok(binomial2(w.len()) - cocharge_permutation(w)?)
}

/// Letter multiplicities of a word over `1..=max`.
pub fn word_content(w: &[u32]) -> Result<Composition> {
    let max = w.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0u32; max as usize];
    for &v in w {
        if v == 0 {
            return Err(Error::Domain("words use letters starting at 1".into()));
        }
        counts[v as usize - 1] += 1;
    }
    Ok(Composition::new(counts))
}

/// The standard subwords of a word, in extraction order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubwordDecomposition {
    pub subwords: Vec<Vec<u32>>,
    /// Indices into the original word, increasing within each subword.
    pub positions: Vec<Vec<usize>>,
}

impl SubwordDecomposition {
    pub fn lengths(&self) -> Vec<u32> {
        self.subwords.iter().map(|s| s.len() as u32).collect()
    }
}

/// Splits a word whose content is a partition into standard subwords.
///
/// Each round selects the rightmost remaining `1`, then for `j = 2, 3, ...`
/// the rightmost remaining `j` to the left of the previous selection,
/// wrapping around to the rightmost `j` overall when none lies to the left.
/// The selected letters, in word order, form one subword and are removed.
pub fn standard_subwords(w: &[u32]) -> Result<SubwordDecomposition> {
    let content = word_content(w)?;
    if !content.is_partition() {
        return Err(Error::Domain(format!("word content {content} is not a partition")));
    }
    let mut alive = vec![true; w.len()];
    let mut left = w.len();
    let mut out = SubwordDecomposition { subwords: Vec::new(), positions: Vec::new() };
    while left > 0 {
        let mut picked = Vec::new();
        let mut cursor = w.len();
        for j in 1.. {
            let candidates = || (0..w.len()).rev().filter(|&i| alive[i] && w[i] == j);
            let Some(i) = candidates().find(|&i| i < cursor).or_else(|| candidates().next()) else {
                break;
            };
            picked.push(i);
            cursor = i;
        }
        picked.sort_unstable();
        for &i in &picked {
            alive[i] = false;
        }
        left -= picked.len();
        out.subwords.push(picked.iter().map(|&i| w[i]).collect());
        out.positions.push(picked);
    }
    Ok(out)
}

/// Sum of the cocharges of the standard subwords.
pub fn cocharge_word(w: &[u32]) -> Result<u32> {
    standard_subwords(w)?
        .subwords
        .iter()
        .map(|s| cocharge_permutation(s))
        .sum()
}

/// Sum of the charges of the standard subwords.
pub fn charge_word(w: &[u32]) -> Result<u32> {
    standard_subwords(w)?
        .subwords
        .iter()
        .map(|s| charge_permutation(s))
        .sum()
}

/// Cocharge of the reading word. The content must be a partition.
pub fn cocharge_tableau(t: &Tableau) -> Result<u32> {
    cocharge_word(&t.reading_word())
}

pub fn charge_tableau(t: &Tableau) -> Result<u32> {
    charge_word(&t.reading_word())
}

/// The same family with its content sorted into a partition. Both
/// Kostka-Foulkes variants are taken from this family, since the modified
/// polynomial does not depend on the order of the content.
fn sorted_family(family: &SsytFamily) -> SsytFamily {
    let sorted = family.content.sorted();
    let mut parts: Vec<u32> = sorted.parts().to_vec();
    parts.resize(family.content.len(), 0);
    SsytFamily::new(family.shape.clone(), Composition::new(parts))
}

fn statistic_sum(family: &SsytFamily, stat: fn(&Tableau) -> Result<u32>) -> IntPolynomial {
    enumerate_generic(&sorted_family(family))
        .iter()
        .map(|t| {
            let s = stat(t).expect("sorted content is a partition");
            IntPolynomial::monomial(1, s as usize)
        })
        .sum()
}

/// `K_{shape, content}(q)`: the sum of `q^charge(T)` over the family.
///
/// Contents that are not partitions are sorted first.
pub fn kostka_foulkes(family: &SsytFamily) -> IntPolynomial {
    statistic_sum(family, charge_tableau)
}

/// `K~_{shape, content}(q)`: the sum of `q^cocharge(T)` over the family,
/// equal to `q^kappa(mu) K(1/q)` with `mu` the sorted content.
pub fn modified_kostka_foulkes(family: &SsytFamily) -> IntPolynomial {
    statistic_sum(family, cocharge_tableau)
}

/// A weakly decreasing row of integers, each at most `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanePartitionRow {
    pub parts: Vec<u32>,
    pub weight: u32,
}

/// The free entries of a hook-arm tableau lowered by two and listed in
/// decreasing order.
pub fn plane_partition_of(t: &Tableau) -> Result<PlanePartitionRow> {
    let a = phi(t)?;
    let parts: Vec<u32> = a.elements().iter().rev().map(|&e| e - 2).collect();
    let weight = parts.iter().sum();
    Ok(PlanePartitionRow { parts, weight })
}

/// `n * C(b + 1, 2)`, the cocharge shared by every tableau of a hook-arm family
/// beyond its plane-partition weight.
pub fn hook_arm_cocharge_offset(shape: HookArmShape) -> u32 {
    shape.n() * binomial2(shape.b() as usize + 1)
}

/// `kappa` of the sorted content, the degree bound relating `K` and `K~`.
pub fn kappa_sorted(content: &Composition) -> u32 {
    let p: Partition = content.sorted();
    p.kappa()
}
