use std::collections::BTreeSet;

use hookcsp::bijection::{free_arm_entries, Multiset};
use hookcsp::csp::orbit_polynomial;
use hookcsp::partition::compositions;
use hookcsp::statistics::{charge_word, hook_arm_cocharge_offset, kappa_sorted};
use hookcsp::*;
use num_complex::Complex64;
use proptest::prelude::*;
use rayon::prelude::*;

fn corpus(max_cells: u32) -> Vec<(HookArmShape, Composition)> {
    hook_arm_corpus(&CorpusBounds::up_to(max_cells))
}

fn feasible_families(max_cells: u32) -> Vec<(HookArmShape, Composition, Vec<Tableau>)> {
    corpus(max_cells)
        .into_par_iter()
        .filter_map(|(shape, mu)| {
            let members = enumerate_hook_arm(shape, &mu).unwrap();
            (!members.is_empty()).then_some((shape, mu, members))
        })
        .collect()
}

fn lcm(a: usize, b: usize) -> usize {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn all_partitions(n: u32, max_part: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max_part)).rev() {
        for mut rest in all_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn permutations(l: u32) -> Vec<Vec<u32>> {
    if l == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(l - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, l);
            out.push(q);
        }
    }
    out
}

/// A random tableau of a random hook-arm family with at most `max_cells` cells.
fn hook_arm_tableau(max_cells: u32) -> impl Strategy<Value = Tableau> {
    let families: Vec<_> = corpus(max_cells)
        .into_iter()
        .filter(|(shape, mu)| beta_profile(*shape, mu).unwrap().beta >= 0)
        .collect();
    (0..families.len(), any::<prop::sample::Index>()).prop_map(move |(i, pick)| {
        let (shape, mu) = &families[i];
        let members = enumerate_hook_arm(*shape, mu).unwrap();
        members[pick.index(members.len())].clone()
    })
}

/// A random semistandard tableau of arbitrary shape, alphabet up to 5.
fn generic_tableau() -> impl Strategy<Value = Tableau> {
    (1u32..=8, 1u32..=5, any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_filter_map(
        "empty family",
        |(size, k, shape_pick, pick)| {
            let shapes = all_partitions(size, size);
            let shape = Partition::new(shapes[shape_pick.index(shapes.len())].clone()).unwrap();
            let contents = compositions(size, k as usize, 0);
            let mu = contents[pick.index(contents.len())].clone();
            let members = enumerate_generic(&SsytFamily::new(shape, mu));
            (!members.is_empty()).then(|| members[pick.index(members.len())].clone())
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn promotion_preserves_shape_and_rotates_content(t in generic_tableau()) {
        let p = promote(&t).unwrap();
        prop_assert!(p.is_semistandard());
        prop_assert_eq!(p.shape(), t.shape());
        prop_assert_eq!(p.content(), t.content().rotate_right());
    }

    #[test]
    fn reading_word_matches_content(t in generic_tableau()) {
        let w = t.reading_word();
        prop_assert_eq!(w.len(), t.size());
        prop_assert_eq!(t.content().total() as usize, t.shape().weight() as usize);
        let mut counts = vec![0u32; t.alphabet() as usize];
        for v in w {
            counts[v as usize - 1] += 1;
        }
        prop_assert_eq!(counts, t.content().parts().to_vec());
    }

    #[test]
    fn hook_arm_rows_hold_two_letters(t in hook_arm_tableau(16)) {
        for (r, row) in t.rows().iter().enumerate().skip(1) {
            let i = r as u32 + 1;
            prop_assert!(row.iter().all(|&v| v == i || v == i + 1), "row {} of\n{}", i, t);
        }
    }

    #[test]
    fn lowering_a_minimal_body_entry_breaks_the_tableau(t in hook_arm_tableau(14), cell in any::<prop::sample::Index>()) {
        // entries equal to their row index sit directly under a strictly smaller column
        let cells: Vec<(usize, usize)> = t.rows().iter().enumerate().skip(1)
            .flat_map(|(r, row)| row.iter().enumerate().filter(move |&(_, &v)| v == r as u32 + 1).map(move |(c, _)| (r, c)))
            .collect();
        prop_assume!(!cells.is_empty());
        let (r, c) = cells[cell.index(cells.len())];
        let mut rows = t.rows().to_vec();
        rows[r][c] -= 1;
        prop_assert_eq!(validate_ssyt(&rows, t.alphabet()), Ok(false));
    }

    #[test]
    fn subword_lengths_are_the_conjugate(shape_pick in any::<prop::sample::Index>(), seed in any::<u64>(), size in 1u32..=12) {
        let parts = all_partitions(size, size);
        let mu = Partition::new(parts[shape_pick.index(parts.len())].clone()).unwrap();
        let mut word: Vec<u32> = mu.parts().iter().enumerate()
            .flat_map(|(i, &p)| std::iter::repeat(i as u32 + 1).take(p as usize))
            .collect();
        // deterministic shuffle from the seed
        let mut state = seed | 1;
        for i in (1..word.len()).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            word.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let d = standard_subwords(&word).unwrap();
        prop_assert_eq!(d.lengths(), mu.conjugate().parts().to_vec());
        let mut seen: Vec<usize> = d.positions.iter().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..word.len()).collect::<Vec<_>>());
        for s in &d.subwords {
            let mut sorted = s.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (1..=s.len() as u32).collect::<Vec<_>>());
        }
    }

    #[test]
    fn exact_evaluation_agrees_with_floating_point(
        coeffs in prop::collection::vec(-50i64..=50, 0..=41),
        order in 1u32..=12,
        d in 0u32..24,
    ) {
        let p = IntPolynomial::new(coeffs);
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * f64::from(d) / f64::from(order));
        let approx = p.coeffs().iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * w + c as f64);
        match eval_at_root_of_unity(&p, order, d) {
            Some(v) => prop_assert!((approx - Complex64::new(v as f64, 0.0)).norm() < 1e-6, "{} vs {}", v, approx),
            None => prop_assert!(approx.im.abs() > 1e-6 || (approx.re - approx.re.round()).abs() > 1e-6, "{}", approx),
        }
    }

    #[test]
    fn multiset_rotation_is_a_group_action(k in 0usize..5, hi in 2u32..7, pick in any::<prop::sample::Index>(), s in 0u32..10, t in 0u32..10) {
        let all = Multiset::all(k, 2, hi);
        let a = &all[pick.index(all.len())];
        prop_assert_eq!(a.rotate(s).rotate(t), a.rotate(s + t));
        prop_assert_eq!(a.rotate(hi - 1), a.clone());
    }
}

#[test]
fn charge_plus_cocharge_is_binomial() {
    for l in 0..=7u32 {
        for w in permutations(l) {
            let sum = charge_permutation(&w).unwrap() + cocharge_permutation(&w).unwrap();
            assert_eq!(sum, l * l.saturating_sub(1) / 2, "{w:?}");
        }
    }
}

#[test]
fn hook_arm_enumeration_matches_generic_up_to_18_cells() {
    // exhaustive through 14 cells, then every family whose shape has b <= 2
    let families: Vec<_> = corpus(18)
        .into_iter()
        .filter(|(shape, _)| shape.cells() <= 14 || shape.b() <= 2)
        .collect();
    families.par_iter().for_each(|(shape, mu)| {
        let mut fast = enumerate_hook_arm(*shape, mu).unwrap();
        let slow = enumerate_generic(&SsytFamily::hook_arm(*shape, mu.clone()));
        let beta = beta_profile(*shape, mu).unwrap().beta;
        if beta >= 0 {
            assert_eq!(fast.len() as u64, binomial(u64::from(shape.b()) + beta as u64, beta as u64));
        }
        for t in &fast {
            assert!(t.is_semistandard());
            assert_eq!(&t.content(), mu);
        }
        fast.sort_by_cached_key(Tableau::reading_word);
        assert_eq!(fast, slow, "{shape} {mu}");
    });
}

#[test]
fn phi_characterizations_and_equivariance_up_to_16_cells() {
    feasible_families(16).par_iter().for_each(|(shape, mu, members)| {
        let profile = beta_profile(*shape, mu).unwrap();
        assert!(profile.beta <= i64::from(shape.n()));
        let mut images = BTreeSet::new();
        for t in members {
            let a = phi(t).unwrap();
            assert_eq!(a.len() as i64, profile.beta);
            assert_eq!(free_arm_entries(t).unwrap(), a);
            assert_eq!(&phi_inverse(*shape, mu, &a).unwrap(), t);
            let p = promote(t).unwrap();
            assert_eq!(phi(&p).unwrap(), a.rotate(1), "{shape} {mu}\n{t}");
            let step = promote_power(t, u64::from(shape.alphabet())).unwrap();
            assert_eq!(psi(&step).unwrap(), psi(t).unwrap().rotate(1));
            images.insert(a);
        }
        assert_eq!(images.len(), members.len());
    });
}

#[test]
fn cocharge_identity_and_kostka_link_up_to_16_cells() {
    feasible_families(16).par_iter().for_each(|(shape, mu, members)| {
        let offset = hook_arm_cocharge_offset(*shape);
        if mu.is_partition() {
            for t in members {
                let pp = plane_partition_of(t).unwrap();
                assert!(pp.parts.windows(2).all(|w| w[0] >= w[1]));
                assert!(pp.parts.iter().all(|&p| p <= shape.b()));
                assert_eq!(cocharge_tableau(t).unwrap(), pp.weight + offset, "{shape} {mu}\n{t}");
            }
        }
        let weights: IntPolynomial = members
            .iter()
            .map(|t| IntPolynomial::monomial(1, plane_partition_of(t).unwrap().weight as usize))
            .sum();
        let beta = beta_profile(*shape, mu).unwrap().beta as u32;
        assert_eq!(weights, q_binomial(shape.b() + beta, beta).unwrap());
        assert!(verify_kostka_link(*shape, mu).unwrap(), "{shape} {mu}");
    });
}

#[test]
fn cyclic_sieving_up_to_16_cells() {
    corpus(16).par_iter().for_each(|(shape, mu)| {
        match verify_csp(*shape, mu) {
            Ok(report) => {
                assert!(report.verdict, "{}", report.table());
                let n = report.group_order as usize;
                assert!(report.orbit_sizes.iter().all(|s| n % s == 0));
                assert_eq!(report.orbit_sizes.iter().sum::<usize>(), report.family_size);
                assert_eq!(report.polynomial.eval_at_one(), report.family_size as i64);
                assert_eq!(report.per_exponent[0].fixed_count, report.family_size as u64);
                assert_eq!(
                    orbit_polynomial(&report.orbit_sizes, report.group_order).unwrap(),
                    report.polynomial.fold_mod(n)
                );
                // orbit sizes divide b + 1, so promote^((b+2)(b+1)) fixes every member;
                // the order of promote^(b+2) is b + 1 unless the family is a single tableau
                let order = report.orbit_sizes.iter().fold(1usize, |acc, &s| lcm(acc, s));
                assert_eq!(order, if report.beta == 0 { 1 } else { n }, "{shape} {mu}");
            }
            Err(Error::InfeasibleFamily { .. }) => {
                assert!(enumerate_generic(&SsytFamily::hook_arm(*shape, mu.clone())).is_empty());
            }
            Err(e) => panic!("{shape} {mu}: {e}"),
        }
    });
}

#[test]
fn kostka_foulkes_duality_and_counts() {
    // all shapes and partition contents of weight <= 8, plus reordered contents
    for size in 1..=8u32 {
        for shape in all_partitions(size, size) {
            let shape = Partition::new(shape).unwrap();
            for mu in all_partitions(size, size) {
                let family = SsytFamily::new(shape.clone(), Composition::new(mu.clone()));
                let count = enumerate_generic(&family).len() as i64;
                let k = kostka_foulkes(&family);
                let kt = modified_kostka_foulkes(&family);
                assert_eq!(k.eval_at_one(), count);
                assert!(k.has_nonnegative_coeffs() && kt.has_nonnegative_coeffs());
                let kappa = kappa_sorted(&family.content) as usize;
                assert_eq!(kt, k.reverse_within(kappa).unwrap(), "{shape} {mu:?}");

                let mut reversed = mu.clone();
                reversed.reverse();
                let permuted = SsytFamily::new(shape.clone(), Composition::new(reversed));
                assert_eq!(enumerate_generic(&permuted).len() as i64, count);
                assert_eq!(modified_kostka_foulkes(&permuted), kt);
            }
        }
    }
}

#[test]
fn word_charge_sums_subword_charges() {
    let w = [3, 4, 4, 2, 2, 3, 1, 1, 1, 1, 2, 2, 3, 4];
    // n(4,4,3,3) = 19 = 12 + 7
    assert_eq!(charge_word(&w).unwrap(), 7);
}
