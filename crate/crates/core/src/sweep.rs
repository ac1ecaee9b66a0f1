//! Families `SSYT((m, n^b), mu)` swept over bounded parameter ranges.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::partition::{compositions, Composition};
use crate::tableau::HookArmShape;

/// Bounds on the families of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusBounds {
    pub max_cells: u32,
    pub m: RangeInclusive<u32>,
    pub n: RangeInclusive<u32>,
    pub b: RangeInclusive<u32>,
    /// Smallest allowed part of the content; 1 keeps every letter present.
    pub min_part: u32,
}

impl CorpusBounds {
    /// Every `m >= n >= 1`, `b >= 1` with at most `max_cells` cells, positive contents.
    pub fn up_to(max_cells: u32) -> Self {
        Self { max_cells, m: 1..=max_cells, n: 1..=max_cells, b: 1..=max_cells, min_part: 1 }
    }
}

/// Shapes in increasing `(b, n, m)` order, each followed by its contents in
/// lexicographic order. Infeasible families (`beta < 0`) are included.
pub fn hook_arm_corpus(bounds: &CorpusBounds) -> Vec<(HookArmShape, Composition)> {
    let mut out = Vec::new();
    for b in bounds.b.clone() {
        for n in bounds.n.clone() {
            for m in bounds.m.clone() {
                let Ok(shape) = HookArmShape::new(m, n, b) else {
                    continue;
                };
                if shape.cells() > bounds.max_cells {
                    continue;
                }
                for mu in compositions(shape.cells(), shape.alphabet() as usize, bounds.min_part) {
                    out.push((shape, mu));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus() {
        let corpus = hook_arm_corpus(&CorpusBounds::up_to(3));
        // (1,1^1): compositions of 2 into 3 positive parts: none
        // (2,1^1): 3 = 1+1+1; (1,1^2): 3 into 4 parts: none
        assert_eq!(corpus.len(), 1);
        assert_eq!(corpus[0].0, HookArmShape::new(2, 1, 1).unwrap());
        assert_eq!(corpus[0].1.parts(), &[1, 1, 1]);
    }

    #[test]
    fn every_family_respects_bounds() {
        let bounds = CorpusBounds { min_part: 0, ..CorpusBounds::up_to(7) };
        let corpus = hook_arm_corpus(&bounds);
        assert!(!corpus.is_empty());
        for (shape, mu) in &corpus {
            assert!(shape.cells() <= 7);
            assert_eq!(mu.total(), shape.cells());
            assert_eq!(mu.len(), shape.alphabet() as usize);
        }
    }
}
