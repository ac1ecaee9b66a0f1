//! Free entries of tableaux of shape `(m, n^b)` and their encoding as multisets.
//!
//! For content `mu = (mu_1, ..., mu_{b+2})` put `gamma_i = max(mu_i - n, 0)`.
//! Every tableau in the family carries `gamma_i` forced copies of `i` in the
//! arm (the last `m - n` cells of row 1); the remaining `beta` arm entries are
//! free. The free entries, as a multiset of `{2, ..., b+2}`, determine the
//! tableau, and promotion rotates them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Composition;
use crate::tableau::{HookArmShape, Tableau};

/// A sorted bag of integers drawn from the interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multiset {
    lo: u32,
    hi: u32,
    elements: Vec<u32>,
}

impl Multiset {
    pub fn new(mut elements: Vec<u32>, lo: u32, hi: u32) -> Result<Self> {
        if lo > hi {
            return Err(Error::Domain(format!("empty support [{lo}, {hi}]")));
        }
        if let Some(&e) = elements.iter().find(|&&e| e < lo || e > hi) {
            return Err(Error::Domain(format!("element {e} outside [{lo}, {hi}]")));
        }
        elements.sort_unstable();
        Ok(Self { lo, hi, elements })
    }

    pub fn empty(lo: u32, hi: u32) -> Self {
        Self { lo, hi, elements: Vec::new() }
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lo(&self) -> u32 {
        self.lo
    }

    pub fn hi(&self) -> u32 {
        self.hi
    }

    pub fn multiplicity(&self, e: u32) -> usize {
        self.elements.iter().filter(|&&x| x == e).count()
    }

    /// All `k`-element multisets of `[lo, hi]` in lexicographic order.
    pub fn all(k: usize, lo: u32, hi: u32) -> Vec<Multiset> {
        fn go(start: u32, hi: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for e in start..=hi {
                cur.push(e);
                go(e, hi, k, cur, out);
                cur.pop();
            }
        }
        if lo > hi {
            return Vec::new();
        }
        let mut out = Vec::new();
        go(lo, hi, k, &mut Vec::with_capacity(k), &mut out);
        out.into_iter().map(|elements| Multiset { lo, hi, elements }).collect()
    }

    /// Applies the cyclic value rotation `e -> e + 1`, `hi -> lo`, `steps` times.
    pub fn rotate(&self, steps: u32) -> Multiset {
        let span = self.hi - self.lo + 1;
        let shift = steps % span;
        let elements = self
            .elements
            .iter()
            .map(|&e| self.lo + (e - self.lo + shift) % span)
            .collect();
        Multiset::new(elements, self.lo, self.hi).expect("rotation stays in range")
    }

    /// Subtracts `by` from every element and from the support bounds.
    pub fn shift_down(&self, by: u32) -> Multiset {
        Multiset {
            lo: self.lo - by,
            hi: self.hi - by,
            elements: self.elements.iter().map(|&e| e - by).collect(),
        }
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// `beta` and the forced counts `gamma` of a hook-arm family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeEntryProfile {
    /// Number of free arm entries. Negative when the family is empty.
    pub beta: i64,
    /// `gamma[i - 1] = max(mu_i - n, 0)`.
    pub gamma: Vec<u32>,
    /// `deficit[i - 1] = max(n - mu_i, 0)`: how many of the first `n` columns must miss `i`.
    pub deficit: Vec<u32>,
    pub free: Multiset,
}

impl FreeEntryProfile {
    pub fn is_feasible(&self) -> bool {
        self.beta >= 0
    }
}

fn check_content(shape: HookArmShape, content: &Composition) -> Result<()> {
    if content.len() != shape.alphabet() as usize {
        return Err(Error::ContentMismatch {
            content: content.parts().to_vec(),
            reason: format!("expected {} parts, found {}", shape.alphabet(), content.len()),
        });
    }
    if content.total() != shape.cells() {
        return Err(Error::ContentMismatch {
            content: content.parts().to_vec(),
            reason: format!("parts sum to {}, shape {shape} has {} cells", content.total(), shape.cells()),
        });
    }
    Ok(())
}

/// Computes `beta` from the forced entries and, independently, from the
/// column deficits, and checks that the two agree.
pub fn beta_profile(shape: HookArmShape, content: &Composition) -> Result<FreeEntryProfile> {
    check_content(shape, content)?;
    let n = shape.n();
    let gamma: Vec<u32> = content.parts().iter().map(|&mu| mu.saturating_sub(n)).collect();
    let deficit: Vec<u32> = content.parts().iter().map(|&mu| n.saturating_sub(mu)).collect();
    let from_forced =
        i64::from(shape.m()) - i64::from(n) - gamma.iter().map(|&g| i64::from(g)).sum::<i64>();
    let from_deficit = i64::from(n) - deficit.iter().map(|&d| i64::from(d)).sum::<i64>();
    if from_forced != from_deficit {
        return Err(Error::Inconsistency(format!(
            "beta from forced entries is {from_forced}, from column deficits {from_deficit}"
        )));
    }
    Ok(FreeEntryProfile {
        beta: from_forced,
        gamma,
        deficit,
        free: Multiset::empty(2, shape.b() + 2),
    })
}

fn hook_arm_of(t: &Tableau) -> Result<HookArmShape> {
    let shape = HookArmShape::from_partition(&t.shape())
        .ok_or_else(|| Error::Domain(format!("shape {} is not of the form (m, n^b)", t.shape())))?;
    if t.alphabet() != shape.alphabet() {
        return Err(Error::Domain(format!(
            "alphabet {} does not match b + 2 = {}",
            t.alphabet(),
            shape.alphabet()
        )));
    }
    Ok(shape)
}

/// Removes `remove[i - 1]` copies of each letter `i` from a letter-count vector.
fn subtract_counts(counts: &mut [u32], remove: &[u32], what: &str) -> Result<()> {
    for (i, (c, &r)) in counts.iter_mut().zip(remove).enumerate() {
        *c = c.checked_sub(r).ok_or_else(|| {
            Error::Inconsistency(format!("{what}: cannot remove {r} copies of {}", i + 1))
        })?;
    }
    Ok(())
}

fn counts_to_multiset(counts: &[u32], lo: u32, hi: u32) -> Result<Multiset> {
    let elements = counts
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat(i as u32 + 1).take(c as usize))
        .collect();
    Multiset::new(elements, lo, hi)
}

/// The free entries read off the first `n` columns: each column misses one
/// letter of `{1, ..., b+2}`; of these letters, `n - mu_i` copies of each
/// deficient `i` are discarded.
pub fn phi(t: &Tableau) -> Result<Multiset> {
    let shape = hook_arm_of(t)?;
    let profile = beta_profile(shape, &t.content())?;
    let k = shape.alphabet();
    let mut missing = vec![0u32; k as usize];
    for c in 0..shape.n() as usize {
        let column = t.column(c);
        let absent: Vec<u32> = (1..=k).filter(|v| !column.contains(v)).collect();
        let [letter] = absent[..] else {
            return Err(Error::Domain(format!("column {} misses {absent:?}, not a single letter", c + 1)));
        };
        missing[letter as usize - 1] += 1;
    }
    subtract_counts(&mut missing, &profile.deficit, "column deficits")?;
    let a = counts_to_multiset(&missing, 2, k)?;
    debug_assert_eq!(Ok(&a), free_arm_entries(t).as_ref());
    Ok(a)
}

/// The free entries read off the arm: its entries minus `gamma_i` forced copies of each `i`.
pub fn free_arm_entries(t: &Tableau) -> Result<Multiset> {
    let shape = hook_arm_of(t)?;
    let profile = beta_profile(shape, &t.content())?;
    let k = shape.alphabet();
    let mut arm = vec![0u32; k as usize];
    for &v in &t.row(0)[shape.n() as usize..] {
        arm[v as usize - 1] += 1;
    }
    subtract_counts(&mut arm, &profile.gamma, "forced entries")?;
    counts_to_multiset(&arm, 2, k)
}

/// The unique tableau of the family whose free entries are `a`.
///
/// `a` is padded with `n - mu_i` copies of each deficient letter; sorted in
/// decreasing order this lists the letter each of the first `n` columns
/// misses. The leftover content fills the arm in increasing order.
pub fn phi_inverse(shape: HookArmShape, content: &Composition, a: &Multiset) -> Result<Tableau> {
    let profile = beta_profile(shape, content)?;
    if profile.beta < 0 {
        return Err(Error::InfeasibleFamily { beta: profile.beta });
    }
    let k = shape.alphabet();
    if a.len() as i64 != profile.beta || a.elements().iter().any(|&e| e < 2 || e > k) {
        return Err(Error::Domain(format!(
            "expected a {}-element multiset of {{2..{k}}}, got {a}",
            profile.beta
        )));
    }
    let mut missing: Vec<u32> = a.elements().to_vec();
    for (i, &d) in profile.deficit.iter().enumerate() {
        missing.extend(std::iter::repeat(i as u32 + 1).take(d as usize));
    }
    missing.sort_unstable_by(|x, y| y.cmp(x));

    let body_rows = shape.b() as usize + 1;
    let mut rows: Vec<Vec<u32>> = vec![Vec::with_capacity(shape.n() as usize); body_rows];
    let mut remaining = content.parts().to_vec();
    for &skip in &missing {
        for (r, v) in (1..=k).filter(|&v| v != skip).enumerate() {
            rows[r].push(v);
            let slot = &mut remaining[v as usize - 1];
            *slot = slot
                .checked_sub(1)
                .ok_or_else(|| Error::InfeasibleMultiset(a.elements().to_vec()))?;
        }
    }
    for (i, &count) in remaining.iter().enumerate() {
        rows[0].extend(std::iter::repeat(i as u32 + 1).take(count as usize));
    }
    if rows[0].len() != shape.m() as usize {
        return Err(Error::InfeasibleMultiset(a.elements().to_vec()));
    }
    Tableau::new(rows, k).map_err(|_| Error::InfeasibleMultiset(a.elements().to_vec()))
}

/// [`phi`] with every element lowered by one, a multiset of `{1, ..., b+1}`.
pub fn psi(t: &Tableau) -> Result<Multiset> {
    Ok(phi(t)?.shift_down(1))
}
