//! Jeu-de-taquin promotion.
//!
//! Every entry equal to the largest letter `k` becomes a dot. While some dot
//! lies outside the northwest cluster of dots, the westernmost such dot
//! (northernmost on ties) slides north or west:
//!
//! * with only a cell above it, it swaps with that cell;
//! * with only a cell to its left, it swaps with that cell;
//! * with cells above (`b`) and to the left (`c`), it swaps with `b` when
//!   `c <= b` and with `c` otherwise.
//!
//! Dots already in the cluster count as missing neighbors. Finally dots turn
//! into `1` and every other entry is incremented.

use serde::{Deserialize, Serialize};

use crate::enumeration::{enumerate_generic, SsytFamily};
use crate::error::{Error, Result};
use crate::tableau::Tableau;

const DOT: u32 = 0;

/// Default cap on orbit length before [`orbit`] gives up.
pub const DEFAULT_ORBIT_BOUND: usize = 1_000_000;

/// Cells `(r, c)` with `c < settled[r]` form the largest Young diagram inside
/// the dotted cells.
fn settled_widths(grid: &[Vec<u32>]) -> Vec<usize> {
    let mut widths = Vec::with_capacity(grid.len());
    let mut cap = usize::MAX;
    for row in grid {
        let prefix = row.iter().take_while(|&&v| v == DOT).count();
        cap = cap.min(prefix);
        widths.push(cap);
    }
    widths
}

fn first_unsettled_dot(grid: &[Vec<u32>]) -> Option<(usize, usize)> {
    let settled = settled_widths(grid);
    let width = grid.first().map_or(0, Vec::len);
    (0..width).find_map(|c| {
        grid.iter()
            .enumerate()
            .take_while(|(_, row)| row.len() > c)
            .find(|&(r, row)| row[c] == DOT && c >= settled[r])
            .map(|(r, _)| (r, c))
    })
}

/// Slides the dot at `(r, c)` until neither neighbor holds a letter,
/// returning the number of swaps.
fn slide(grid: &mut [Vec<u32>], mut r: usize, mut c: usize) -> usize {
    let mut moves = 0;
    loop {
        let above = (r > 0).then(|| grid[r - 1][c]).filter(|&v| v != DOT);
        let left = (c > 0).then(|| grid[r][c - 1]).filter(|&v| v != DOT);
        let (nr, nc) = match (above, left) {
            (None, None) => return moves,
            (Some(_), None) => (r - 1, c),
            (None, Some(_)) => (r, c - 1),
            (Some(b), Some(c_left)) if c_left <= b => (r - 1, c),
            (Some(_), Some(_)) => (r, c - 1),
        };
        grid[r][c] = grid[nr][nc];
        grid[nr][nc] = DOT;
        r = nr;
        c = nc;
        moves += 1;
    }
}

/// One application of promotion. The result has the same shape and its
/// content is the right cyclic shift of the input content.
pub fn promote(t: &Tableau) -> Result<Tableau> {
    let k = t.alphabet();
    if let Some(&entry) = t.rows().iter().flatten().find(|&&v| v == 0 || v > k) {
        return Err(Error::EntryOutOfRange { entry, alphabet: k });
    }
    let mut grid: Vec<Vec<u32>> = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|&v| if v == k { DOT } else { v }).collect())
        .collect();
    while let Some((r, c)) = first_unsettled_dot(&grid) {
        if slide(&mut grid, r, c) == 0 {
            return Err(Error::Inconsistency(format!("dot at ({r}, {c}) is stuck outside the corner")));
        }
    }
    for v in grid.iter_mut().flatten() {
        *v += 1;
    }
    Ok(Tableau::from_rows_unchecked(grid, k))
}

/// `promote` applied `power` times.
pub fn promote_power(t: &Tableau, power: u64) -> Result<Tableau> {
    let mut cur = t.clone();
    for _ in 0..power {
        cur = promote(&cur)?;
    }
    Ok(cur)
}

/// The cycle of a tableau under `promote^step`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PromotionOrbit {
    pub step: u64,
    pub members: Vec<Tableau>,
}

impl PromotionOrbit {
    pub fn base(&self) -> &Tableau {
        &self.members[0]
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }
}

/// Follows `t` under `promote^step` until it returns, failing after `bound` members.
pub fn orbit_bounded(t: &Tableau, step: u64, bound: usize) -> Result<PromotionOrbit> {
    if step == 0 {
        return Err(Error::Domain("orbit step must be positive".into()));
    }
    let mut members = vec![t.clone()];
    loop {
        let next = promote_power(members.last().expect("nonempty"), step)?;
        if &next == t {
            return Ok(PromotionOrbit { step, members });
        }
        if members.len() >= bound {
            return Err(Error::OrbitBound { bound });
        }
        members.push(next);
    }
}

pub fn orbit(t: &Tableau, step: u64) -> Result<PromotionOrbit> {
    orbit_bounded(t, step, DEFAULT_ORBIT_BOUND)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Least `r >= 1` with `promote^(step * r)` fixing every tableau of `members`.
pub fn promotion_order_of(members: &[Tableau], step: u64) -> Result<u64> {
    if members.is_empty() {
        return Err(Error::Domain("order of promotion on an empty family".into()));
    }
    members
        .iter()
        .try_fold(1, |acc, t| Ok(lcm(acc, orbit(t, step)?.order() as u64)))
}

/// Order of `promote^step` on the family; an empty family is a domain error.
pub fn promotion_order_on_family(family: &SsytFamily, step: u64) -> Result<u64> {
    promotion_order_of(&enumerate_generic(family), step)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{Composition, Partition};
    use crate::tableau::HookArmShape;

    fn tab(rows: &[&[u32]], k: u32) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect(), k).unwrap()
    }

    #[test]
    fn worked_promotion() {
        let t = tab(&[&[1, 1, 2, 3], &[2, 3, 4, 5], &[5, 5]], 5);
        let p = promote(&t).unwrap();
        assert_eq!(p, tab(&[&[1, 1, 1, 4], &[2, 2, 3, 5], &[3, 4]], 5));
    }

    #[test]
    fn single_letter_row_is_fixed() {
        let t = tab(&[&[1, 1, 1]], 1);
        assert_eq!(promote(&t).unwrap(), t);
    }

    #[test]
    fn lone_largest_letter_slides_to_corner() {
        // the lone 5 slides along row 1 to the corner
        let t = tab(&[&[1, 1, 2, 3, 5], &[2, 3, 4], &[3]], 5);
        let p = promote(&t).unwrap();
        assert_eq!(p, tab(&[&[1, 2, 2, 3, 4], &[3, 4, 5], &[4]], 5));
        assert_eq!(p.content().parts(), &[1, 2, 2, 3, 1]);
    }

    #[test]
    fn no_largest_letter_just_increments() {
        let t = tab(&[&[1, 2], &[2]], 4);
        assert_eq!(promote(&t).unwrap(), tab(&[&[2, 3], &[3]], 4));
    }

    #[test]
    fn out_of_range_entry_is_rejected() {
        let t = Tableau::from_rows(vec![vec![1, 7]], 5).unwrap();
        assert!(matches!(promote(&t), Err(Error::EntryOutOfRange { entry: 7, alphabet: 5 })));
    }

    #[test]
    fn power_zero_is_identity() {
        let t = tab(&[&[1, 1, 2, 3], &[2, 3, 4, 5], &[5, 5]], 5);
        assert_eq!(promote_power(&t, 0).unwrap(), t);
    }

    #[test]
    fn worked_tableau_returns_after_its_orbit() {
        let t = tab(&[&[1, 1, 2, 3], &[2, 3, 4, 5], &[5, 5]], 5);
        let o = orbit(&t, 1).unwrap();
        assert_eq!(promote_power(&t, o.order() as u64).unwrap(), t);
        // content must come back too
        assert_eq!(o.order() % 5, 0);
        for (i, m) in o.members.iter().enumerate() {
            assert_eq!(&promote(m).unwrap(), &o.members[(i + 1) % o.order()]);
        }
    }

    #[test]
    fn hook_arm_order_identity() {
        let shape = HookArmShape::new(4, 2, 2).unwrap();
        let family = SsytFamily::hook_arm(shape, Composition::new(vec![2, 2, 2, 2]));
        assert_eq!(promotion_order_on_family(&family, 4).unwrap(), 3);
        for t in enumerate_generic(&family) {
            assert_eq!(promote_power(&t, 12).unwrap(), t);
        }
    }

    #[test]
    fn small_orbit_under_b_plus_two() {
        // (3, 2^1) with content (2,2,1): beta = 1, two tableaux
        let shape = HookArmShape::new(3, 2, 1).unwrap();
        let family = SsytFamily::hook_arm(shape, Composition::new(vec![2, 2, 1]));
        let all = enumerate_generic(&family);
        assert_eq!(all.len(), 2);
        for t in &all {
            let o = orbit(t, 3).unwrap();
            assert!(o.order() <= 2);
            assert_eq!(2 % o.order(), 0);
        }
    }

    #[test]
    fn fixed_tableau_has_order_one() {
        let t = tab(&[&[1, 1], &[2, 2]], 2);
        assert_eq!(orbit(&t, 2).unwrap().order(), 1);
        let family = SsytFamily::new(Partition::new(vec![2, 2]).unwrap(), Composition::new(vec![2, 2]));
        assert_eq!(promotion_order_on_family(&family, 2).unwrap(), 1);
    }

    #[test]
    fn empty_family_is_a_domain_error() {
        let family = SsytFamily::new(Partition::new(vec![2, 1]).unwrap(), Composition::new(vec![1, 1]));
        assert!(matches!(promotion_order_on_family(&family, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn orbit_bound_is_enforced() {
        let t = tab(&[&[1, 1, 2, 3], &[2, 3, 4, 5], &[5, 5]], 5);
        assert_eq!(orbit_bounded(&t, 1, 2), Err(Error::OrbitBound { bound: 2 }));
        assert!(orbit(&t, 0).is_err());
    }
}
