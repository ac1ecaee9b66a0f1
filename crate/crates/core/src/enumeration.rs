//! Exhaustive generation of `SSYT(shape, content)`.

use serde::{Deserialize, Serialize};

use crate::bijection::{beta_profile, phi_inverse, Multiset};
use crate::error::Result;
use crate::partition::{Composition, Partition};
use crate::tableau::{HookArmShape, Tableau};

/// The set `SSYT(shape, content)`; the alphabet is the length of `content`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SsytFamily {
    pub shape: Partition,
    pub content: Composition,
}

impl SsytFamily {
    pub fn new(shape: Partition, content: Composition) -> Self {
        Self { shape, content }
    }

    pub fn hook_arm(shape: HookArmShape, content: Composition) -> Self {
        Self { shape: shape.partition(), content }
    }

    pub fn alphabet(&self) -> u32 {
        self.content.len() as u32
    }

    /// False when the cell count and content total disagree, which makes the family empty.
    pub fn sizes_agree(&self) -> bool {
        self.shape.weight() == self.content.total()
    }

    pub fn hook_arm_shape(&self) -> Option<HookArmShape> {
        HookArmShape::from_partition(&self.shape)
    }
}

/// Every semistandard tableau of the family, ordered lexicographically by reading word.
///
/// Cells are filled row by row, left to right. A value is admissible when it
/// respects the row and column orders, still has copies left in the content,
/// and leaves room for the strictly increasing entries below it in its column.
pub fn enumerate_generic(family: &SsytFamily) -> Vec<Tableau> {
    let k = family.alphabet();
    if k == 0 || !family.sizes_agree() {
        return Vec::new();
    }
    let shape: Vec<usize> = family.shape.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let column_height: Vec<usize> = (0..shape.first().copied().unwrap_or(0))
        .map(|c| shape.iter().take_while(|&&len| len > c).count())
        .collect();

    struct Search<'a> {
        k: u32,
        cells: &'a [(usize, usize)],
        column_height: &'a [usize],
        remaining: Vec<u32>,
        grid: Vec<Vec<u32>>,
        out: Vec<Tableau>,
    }

    impl Search<'_> {
        fn fill(&mut self, idx: usize) {
            let Some(&(r, c)) = self.cells.get(idx) else {
                self.out.push(Tableau::from_rows_unchecked(self.grid.clone(), self.k));
                return;
            };
            let left = if c > 0 { self.grid[r][c - 1] } else { 1 };
            let above = if r > 0 { self.grid[r - 1][c] + 1 } else { 1 };
            let below = (self.column_height[c] - r - 1) as u32;
            let lo = left.max(above);
            if lo + below > self.k {
                return;
            }
            for v in lo..=self.k - below {
                if self.remaining[v as usize - 1] == 0 {
                    continue;
                }
                self.remaining[v as usize - 1] -= 1;
                self.grid[r][c] = v;
                self.fill(idx + 1);
                self.remaining[v as usize - 1] += 1;
            }
        }
    }

    let mut search = Search {
        k,
        cells: &cells,
        column_height: &column_height,
        remaining: family.content.parts().to_vec(),
        grid: shape.iter().map(|&len| vec![0; len]).collect(),
        out: Vec::new(),
    };
    search.fill(0);
    let mut out = search.out;
    out.sort_by_cached_key(Tableau::reading_word);
    out
}

/// The family `SSYT((m, n^b), content)` built from its free-entry multisets.
///
/// Each `beta`-element multiset of `{2, ..., b+2}`, taken in lexicographic
/// order, is mapped through [`phi_inverse`]. A negative `beta` yields an
/// empty list.
pub fn enumerate_hook_arm(shape: HookArmShape, content: &Composition) -> Result<Vec<Tableau>> {
    let profile = beta_profile(shape, content)?;
    let Ok(size) = usize::try_from(profile.beta) else {
        return Ok(Vec::new());
    };
    Multiset::all(size, 2, shape.b() + 2)
        .into_iter()
        .map(|a| phi_inverse(shape, content, &a))
        .collect()
}
