//! Dense univariate polynomials in `q` with integer coefficients.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `q^i`. No trailing zeros; the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawPolynomial", into = "RawPolynomial")]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawPolynomial {
    coeffs: Vec<i64>,
}

impl From<RawPolynomial> for IntPolynomial {
    fn from(raw: RawPolynomial) -> Self {
        IntPolynomial::new(raw.coeffs)
    }
}

impl From<IntPolynomial> for RawPolynomial {
    fn from(p: IntPolynomial) -> Self {
        RawPolynomial { coeffs: p.coeffs }
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    /// `coeff * q^exp`.
    pub fn monomial(coeff: i64, exp: usize) -> Self {
        let mut coeffs = vec![0; exp + 1];
        coeffs[exp] = coeff;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> i64 {
        self.coeffs.get(exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`: the sum of the coefficients.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// Multiplies by `q^exp`.
    pub fn shift(&self, exp: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; exp];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// `q^exp * p(1/q)`; requires `exp >= deg p`.
    pub fn reverse_within(&self, exp: usize) -> Result<Self> {
        match self.degree() {
            Some(d) if d > exp => Err(Error::Domain(format!(
                "cannot reflect a degree-{d} polynomial inside degree {exp}"
            ))),
            None => Ok(Self::zero()),
            Some(_) => {
                let mut coeffs = vec![0; exp + 1];
                for (i, &c) in self.coeffs.iter().enumerate() {
                    coeffs[exp - i] = c;
                }
                Ok(Self::new(coeffs))
            }
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Divides by a monic polynomial, returning `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Domain("division by the zero polynomial".into()));
        };
        if divisor.coeffs[dd] != 1 {
            return Err(Error::Domain(format!("divisor {divisor} is not monic")));
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![0; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let lead = rem[i + dd];
            if lead == 0 {
                continue;
            }
            quot[i] = lead;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= lead * d;
            }
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact division by a monic polynomial; a nonzero remainder is an error.
    pub fn div_exact_monic(&self, divisor: &IntPolynomial) -> Result<Self> {
        let (quot, rem) = self.div_rem_monic(divisor)?;
        if !rem.is_zero() {
            return Err(Error::Domain(format!("{divisor} does not divide {self}")));
        }
        Ok(quot)
    }

    /// Reduces modulo `q^period - 1` by folding exponent `i` onto `i mod period`.
    pub fn fold_mod(&self, period: usize) -> Self {
        assert!(period > 0, "period must be positive");
        let mut coeffs = vec![0; period.min(self.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i % period] += c;
        }
        Self::new(coeffs)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for IntPolynomial {
    /// Human-readable form such as `1 + q + 2q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{mag}q")?,
                (_, 1) => write!(f, "q^{i}")?,
                _ => write!(f, "{mag}q^{i}")?,
            }
        }
        Ok(())
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: usize) -> IntPolynomial {
    IntPolynomial::new(vec![1; n])
}

/// The Gaussian binomial coefficient, built with
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn q_binomial(n: u32, k: u32) -> Result<IntPolynomial> {
    if k > n {
        return Err(Error::Domain(format!("q-binomial with k = {k} > n = {n}")));
    }
    // row[j] holds [i, j] for the current i
    let mut row: Vec<IntPolynomial> = vec![IntPolynomial::one()];
    for i in 1..=n as usize {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let with = if j > 0 { row[j - 1].clone() } else { IntPolynomial::zero() };
            let without = row.get(j).map(|p| p.shift(j)).unwrap_or_default();
            next.push(&with + &without);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

/// The `e`-th cyclotomic polynomial, obtained by dividing `q^e - 1` by
/// `Phi_j` for every proper divisor `j` of `e`. Results are memoized.
pub fn cyclotomic(e: u32) -> IntPolynomial {
    static CACHE: OnceLock<Mutex<HashMap<u32, IntPolynomial>>> = OnceLock::new();
    assert!(e > 0, "cyclotomic order must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache poisoned").get(&e) {
        return p.clone();
    }
    let mut p = &IntPolynomial::monomial(1, e as usize) - &IntPolynomial::one();
    for j in (1..e).filter(|j| e % j == 0) {
        p = p.div_exact_monic(&cyclotomic(j)).expect("Phi_j divides q^e - 1");
    }
    cache.lock().expect("cache poisoned").insert(e, p.clone());
    p
}
