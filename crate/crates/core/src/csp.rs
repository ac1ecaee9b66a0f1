//! Cyclic sieving on `SSYT((m, n^b), mu)` under `promote^(b+2)`.
//!
//! A report is assembled from three routes that must agree:
//! fixed points counted by iterating promotion, the sieving polynomial
//! evaluated exactly at roots of unity, and the orbit decomposition compared
//! with the polynomial reduced modulo `q^(b+1) - 1`. The multiset count of
//! [`multiset_fixed_oracle`] is checked against the evaluations as well.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bijection::{beta_profile, Multiset};
use crate::enumeration::{enumerate_hook_arm, SsytFamily};
use crate::error::{Error, Result};
use crate::partition::Composition;
use crate::poly::{cyclotomic, q_binomial, q_integer, IntPolynomial};
use crate::promotion::{orbit, promote};
use crate::statistics::{hook_arm_cocharge_offset, modified_kostka_foulkes};
use crate::tableau::{HookArmShape, Tableau};

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact value of `p(w^d)` for a primitive `order`-th root of unity `w`, or
/// `None` when the value is not an integer.
///
/// With `g = gcd(d, order)`, `w^d` is a primitive `e`-th root for
/// `e = order / g`, namely `z^t` with `t = d / g` for a primitive `e`-th root `z`.
/// Exponents are folded modulo `e` after multiplying by `t`, and the result
/// is reduced modulo the `e`-th cyclotomic polynomial; a constant remainder is
/// the value.
pub fn eval_at_root_of_unity(p: &IntPolynomial, order: u32, d: u32) -> Option<i64> {
    assert!(order >= 1, "root of unity order must be positive");
    let d = d % order;
    let g = gcd(d, order);
    let e = order / g;
    let t = (d / g) as usize;
    let mut folded = vec![0i64; e as usize];
    for (k, &c) in p.coeffs().iter().enumerate() {
        folded[(k * t) % e as usize] += c;
    }
    let (_, rem) = IntPolynomial::new(folded)
        .div_rem_monic(&cyclotomic(e))
        .expect("cyclotomic polynomials are monic");
    match rem.degree() {
        None => Some(0),
        Some(0) => Some(rem.coeff(0)),
        Some(_) => None,
    }
}

/// Number of `k`-element multisets of `{1, ..., order}` left unchanged by
/// the value rotation applied `d` times, by direct enumeration.
pub fn multiset_fixed_oracle(order: u32, k: u32, d: u32) -> u64 {
    if order == 0 {
        return u64::from(k == 0);
    }
    Multiset::all(k as usize, 1, order)
        .iter()
        .filter(|m| &m.rotate(d) == *m)
        .count() as u64
}

/// Fixed points of `promote^((b+2) d)` on the family, found by iterating
/// promotion on each member.
pub fn count_fixed_points(shape: HookArmShape, members: &[Tableau], d: u32) -> Result<u64> {
    let steps = u64::from(shape.alphabet()) * u64::from(d);
    let mut count = 0;
    for t in members {
        let mut cur = t.clone();
        for _ in 0..steps {
            cur = promote(&cur)?;
        }
        if &cur == t {
            count += 1;
        }
    }
    Ok(count)
}

/// Comparison at one power `d` of the generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentRecord {
    pub d: u32,
    pub fixed_count: u64,
    /// `None` when `f(w^d)` is not an integer.
    pub f_at_omega_d: Option<i64>,
    pub multiset_oracle: u64,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CspReport {
    pub shape: HookArmShape,
    pub content: Composition,
    pub beta: i64,
    /// Order `b + 1` of the cyclic group generated by `promote^(b+2)`.
    pub group_order: u32,
    pub family_size: usize,
    pub polynomial: IntPolynomial,
    pub per_exponent: Vec<ExponentRecord>,
    /// Orbit lengths, sorted ascending.
    pub orbit_sizes: Vec<usize>,
    pub orbit_polynomial_matches: bool,
    pub verdict: bool,
}

impl CspReport {
    /// Aligned table with columns `d`, `|X^{g^d}|`, `f(w^d)`, `match`.
    pub fn table(&self) -> String {
        let mut out = format!(
            "shape {} content {} beta {} |X| {} f(q) = {}\n",
            self.shape, self.content, self.beta, self.family_size, self.polynomial
        );
        out.push_str(&format!("{:>4}  {:>10}  {:>10}  {:>5}\n", "d", "|X^{g^d}|", "f(w^d)", "match"));
        for r in &self.per_exponent {
            let value = r.f_at_omega_d.map_or_else(|| "non-int".to_string(), |v| v.to_string());
            out.push_str(&format!(
                "{:>4}  {:>10}  {:>10}  {:>5}\n",
                r.d,
                r.fixed_count,
                value,
                if r.matches { "yes" } else { "NO" }
            ));
        }
        out.push_str(&format!("orbits {:?} verdict {}", self.orbit_sizes, self.verdict));
        out
    }
}

impl fmt::Display for CspReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.table())
    }
}

/// Orbits of `promote^step` as a list of lengths, ascending.
pub fn orbit_sizes(members: &[Tableau], step: u64) -> Result<Vec<usize>> {
    let mut seen: HashSet<Tableau> = HashSet::with_capacity(members.len());
    let mut sizes = Vec::new();
    for t in members {
        if seen.contains(t) {
            continue;
        }
        let o = orbit(t, step)?;
        sizes.push(o.order());
        seen.extend(o.members);
    }
    if seen.len() != members.len() {
        return Err(Error::Inconsistency(format!(
            "orbits cover {} tableaux, family has {}",
            seen.len(),
            members.len()
        )));
    }
    sizes.sort_unstable();
    Ok(sizes)
}

/// `sum over orbits O of sum_{i < |O|} q^(i * order / |O|)`.
pub fn orbit_polynomial(sizes: &[usize], order: u32) -> Result<IntPolynomial> {
    sizes
        .iter()
        .map(|&s| {
            if s == 0 || order as usize % s != 0 {
                return Err(Error::Inconsistency(format!("orbit size {s} does not divide {order}")));
            }
            let stride = order as usize / s;
            Ok((0..s).map(|i| IntPolynomial::monomial(1, i * stride)).sum())
        })
        .sum()
}

/// The sieving polynomial `[b + beta, beta]_q` of a feasible family.
pub fn sieving_polynomial(shape: HookArmShape, content: &Composition) -> Result<IntPolynomial> {
    let profile = beta_profile(shape, content)?;
    let beta = u32::try_from(profile.beta).map_err(|_| Error::InfeasibleFamily { beta: profile.beta })?;
    q_binomial(shape.b() + beta, beta)
}

/// Builds the full report for one family.
///
/// Returns an error when the family is infeasible or when routes that must
/// agree regardless of the sieving claim disagree (fixed points against orbit
/// sizes, root-of-unity values against the multiset oracle, pointwise matches
/// against the orbit polynomial).
pub fn verify_csp(shape: HookArmShape, content: &Composition) -> Result<CspReport> {
    let profile = beta_profile(shape, content)?;
    let beta = u32::try_from(profile.beta).map_err(|_| Error::InfeasibleFamily { beta: profile.beta })?;
    let order = shape.b() + 1;
    let f = q_binomial(shape.b() + beta, beta)?;
    let members = enumerate_hook_arm(shape, content)?;
    let step = u64::from(shape.alphabet());
    let sizes = orbit_sizes(&members, step)?;

    // fixed[d] for d in 0..order, iterating promote^(b+2) once per member
    let mut fixed = vec![0u64; order as usize];
    for t in &members {
        let mut cur = t.clone();
        for slot in fixed.iter_mut() {
            if &cur == t {
                *slot += 1;
            }
            for _ in 0..step {
                cur = promote(&cur)?;
            }
        }
    }

    let mut per_exponent = Vec::with_capacity(order as usize);
    for d in 0..order {
        let from_orbits: u64 = sizes
            .iter()
            .filter(|&&s| d as usize % s == 0)
            .map(|&s| s as u64)
            .sum();
        let fixed_count = fixed[d as usize];
        if from_orbits != fixed_count {
            return Err(Error::Inconsistency(format!(
                "d={d}: {fixed_count} fixed points by iteration, {from_orbits} from orbit sizes"
            )));
        }
        let value = eval_at_root_of_unity(&f, order, d);
        let oracle = multiset_fixed_oracle(order, beta, d);
        if value != Some(oracle as i64) {
            return Err(Error::Inconsistency(format!(
                "d={d}: f(w^d) = {value:?} but {oracle} multisets are fixed"
            )));
        }
        per_exponent.push(ExponentRecord {
            d,
            fixed_count,
            f_at_omega_d: value,
            multiset_oracle: oracle,
            matches: value == Some(fixed_count as i64),
        });
    }

    let orbit_polynomial_matches = orbit_polynomial(&sizes, order)? == f.fold_mod(order as usize);
    let pointwise = per_exponent.iter().all(|r| r.matches);
    if pointwise != orbit_polynomial_matches {
        return Err(Error::Inconsistency(format!(
            "pointwise comparison says {pointwise}, orbit polynomial says {orbit_polynomial_matches}"
        )));
    }

    Ok(CspReport {
        shape,
        content: content.clone(),
        beta: profile.beta,
        group_order: order,
        family_size: members.len(),
        polynomial: f,
        per_exponent,
        orbit_sizes: sizes,
        orbit_polynomial_matches,
        verdict: pointwise && orbit_polynomial_matches,
    })
}

/// Whether `K~_{shape, content}(q) = q^(n C(b+1, 2)) [b + beta, beta]_q`.
pub fn verify_kostka_link(shape: HookArmShape, content: &Composition) -> Result<bool> {
    let f = sieving_polynomial(shape, content)?;
    let family = SsytFamily::hook_arm(shape, content.clone());
    Ok(modified_kostka_foulkes(&family) == f.shift(hook_arm_cocharge_offset(shape) as usize))
}

/// `prod_{1<=i<=a} prod_{1<=j<=b} [i+j+n-1]_q / [i+j-1]_q`, divided exactly.
pub fn stretched_hook_product(n: u32, a: u32, b: u32) -> Result<IntPolynomial> {
    let mut num = IntPolynomial::one();
    let mut dens = Vec::new();
    for i in 1..=a {
        for j in 1..=b {
            num = &num * &q_integer((i + j + n - 1) as usize);
            dens.push(q_integer((i + j - 1) as usize));
        }
    }
    dens.iter().try_fold(num, |acc, d| acc.div_exact_monic(d))
}
