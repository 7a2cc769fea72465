//! Exact truncated power series in `q` and the sum and product sides of
//! every catalogued identity.
//!
//! Each sum side is assembled term by term in its signed form
//!
//! ```text
//!   q^staircase(n) * prod_i (1 + q^{e_i}) / (q^2; q^2)_m
//! ```
//!
//! where some `e_i` are negative. Each `1 + q^{e}` with `e < 0` is rewritten
//! as `q^{e} (1 + q^{-e})` and the `q^{e}` folded into the staircase, so the
//! term is built directly as a truncated series. [`LaurentTerm`] gives the
//! same product without truncation and serves as its cross-check.

use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::identity::IdentityId;

/// Coefficients `c[0..=N]` of a formal power series, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    /// `q^exponent`, or zero if the exponent lies beyond the order.
    pub fn monomial(exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = BigInt::one();
        }
        s
    }

    /// Takes `coeffs[0..=order]`; missing entries are zero.
    pub fn from_coefficients(coeffs: impl IntoIterator<Item = BigInt>, order: usize) -> Self {
        let mut c: Vec<BigInt> = coeffs.into_iter().take(order + 1).collect();
        c.resize(order + 1, BigInt::zero());
        Self { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    /// Same series at a lower order. Panics if `order` exceeds the current one.
    pub fn restrict(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Multiplies in place by `1 / (1 - q^k)`, `k >= 1`.
    pub fn divide_by_one_minus_q_pow(&mut self, k: usize) {
        assert!(k >= 1);
        for i in k..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - k];
        }
    }

    /// Multiplies in place by `1 + q^k`, `k >= 1`.
    pub fn times_one_plus_q_pow(&mut self, k: usize) {
        assert!(k >= 1);
        for i in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - k];
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| c.sign() != num_bigint::Sign::Minus)
    }

    /// `n,coefficient` rows under a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,coefficient\n");
        for (n, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{n},{c}\n"));
        }
        out
    }

    /// JSON array of decimal strings.
    pub fn to_json(&self) -> String {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        serde_json::to_string(&strings).expect("strings serialize")
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::TruncationMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        self.try_add(rhs).expect("truncation orders must match")
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.try_sub(rhs).expect("truncation orders must match")
    }
}

/// Cauchy product truncated at the common order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.check_order(b)?;
    let order = a.order();
    let mut out = TruncatedSeries::zero(order);
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs[..=order - i].iter().enumerate() {
            if !y.is_zero() {
                out.coeffs[i + j] += x * y;
            }
        }
    }
    Ok(out)
}

/// A finite Laurent polynomial `sum_k c_k q^{min_exponent + k}`, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentTerm {
    min_exponent: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentTerm {
    pub fn one() -> Self {
        Self {
            min_exponent: 0,
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn min_exponent(&self) -> i64 {
        self.min_exponent
    }

    pub fn max_exponent(&self) -> i64 {
        self.min_exponent + self.coeffs.len() as i64 - 1
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        let idx = exponent - self.min_exponent;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> Vec<(i64, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.min_exponent + i as i64, c.clone()))
            .collect()
    }

    /// Multiplies by `q^k`.
    pub fn shift(mut self, k: i64) -> Self {
        self.min_exponent += k;
        self
    }

    /// Multiplies by `(1 + sign * q^exponent)`.
    pub fn times_binomial(&self, exponent: i64, sign: Sign) -> Self {
        let lo = self.min_exponent.min(self.min_exponent + exponent);
        let hi = self.max_exponent().max(self.max_exponent() + exponent);
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = self.min_exponent + i as i64;
            coeffs[(e - lo) as usize] += c;
            let shifted = &mut coeffs[(e + exponent - lo) as usize];
            match sign {
                Sign::Plus => *shifted += c,
                Sign::Minus => *shifted -= c,
            }
        }
        let mut t = Self {
            min_exponent: lo,
            coeffs,
        };
        t.trim();
        t
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs = vec![BigInt::zero()];
            return;
        }
        self.coeffs.drain(..lead);
        self.min_exponent += lead as i64;
    }

    /// Truncates at `order`. Returns `None` if a nonzero coefficient sits at
    /// a negative exponent.
    pub fn to_truncated(&self, order: usize) -> Option<TruncatedSeries> {
        let mut out = TruncatedSeries::zero(order);
        for (e, c) in self.terms() {
            if e < 0 {
                return None;
            }
            if e as usize <= order {
                out.coeffs[e as usize] = c;
            }
        }
        Some(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Result of [`pochhammer_series`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    Series(TruncatedSeries),
    Laurent(LaurentTerm),
}

/// Exact `prod_{i<count} (1 + sign * q^{first + i*step})`.
pub fn pochhammer_laurent(first_exponent: i64, step: i64, count: usize, sign: Sign) -> LaurentTerm {
    (0..count as i64).fold(LaurentTerm::one(), |acc, i| {
        acc.times_binomial(first_exponent + i * step, sign)
    })
}

/// `prod_{i<count} (1 + sign * q^{first + i*step})`: a truncated series when
/// every exponent is nonnegative, otherwise the exact Laurent expansion.
pub fn pochhammer_series(first_exponent: i64, step: i64, count: usize, sign: Sign, order: usize) -> Expansion {
    let laurent = pochhammer_laurent(first_exponent, step, count, sign);
    let any_negative = (0..count as i64).any(|i| first_exponent + i * step < 0);
    if any_negative {
        Expansion::Laurent(laurent)
    } else {
        Expansion::Series(laurent.to_truncated(order).expect("nonnegative exponents"))
    }
}

/// `1 / (q^2; q^2)_count`: partitions into even parts of size at most `2*count`.
pub fn inverse_even_pochhammer(count: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for i in 1..=count {
        s.divide_by_one_minus_q_pow(2 * i);
    }
    s
}

/// Shape of the `n`-th sum-side term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TermShape {
    pub staircase: i64,
    /// `(first exponent, step, count)` of the `(1 + q^e)` product.
    pub negatives: (i64, i64, usize),
    /// `m` in `1 / (q^2; q^2)_m`.
    pub even_count: usize,
}

impl TermShape {
    /// Lowest exponent that can occur in the term.
    pub fn min_exponent(&self) -> i64 {
        let (first, step, count) = self.negatives;
        self.staircase
            + (0..count as i64)
                .map(|i| first + i * step)
                .filter(|&e| e < 0)
                .sum::<i64>()
    }
}

/// Shape of term `n` for an identity, `None` when the term is absent.
pub fn term_shape(id: IdentityId, n: usize) -> Option<TermShape> {
    use IdentityId::*;
    let k = n as i64;
    let shape = |staircase, negatives, even_count| {
        Some(TermShape {
            staircase,
            negatives,
            even_count,
        })
    };
    let descending = (-1, -1, n);
    let odd_descending = (-1, -2, n);
    match id {
        PSigned => shape(k * (k + 3) / 2, descending, n),
        DSigned => shape(k * (k + 1), descending, n),
        Rr1Signed => shape(k * (3 * k + 1) / 2, descending, n),
        Rr2Signed => shape(3 * k * (k + 1) / 2, descending, n),
        Gg1Andrews | Gg1Prime => shape(2 * k * k, odd_descending, n),
        Gg2ThreeWay => shape(2 * k * k + 2 * k, odd_descending, n),
        GgDiff if n == 0 => None,
        GgDiff => shape(2 * k * k, odd_descending, n - 1),
        Lg1E => shape(k * k + k, (-1, 2, n), n),
        Lg2T => shape(k * k + k, (1, 2, n), n),
        Lg1Shift => shape(2 * k * k + 3 * k + 1, (-1, -2, n + 1), n),
        Lg1Prime => shape(4 * k * k - 2 * k, (-1, -4, n), 2 * n),
        Lg2ThreeWay => shape(2 * k * k + k, odd_descending, n),
        Lg2H => shape(2 * k * k + k, (-1, 4, n), 2 * n),
    }
}

/// Exponent of the staircase monomial in term `n`.
pub fn staircase_exponent(id: IdentityId, n: usize) -> i64 {
    term_shape(id, n).map_or(0, |s| s.staircase)
}

/// Term `n` of the sum side truncated at `order`.
pub fn term_series(id: IdentityId, n: usize, order: usize) -> TruncatedSeries {
    let Some(shape) = term_shape(id, n) else {
        return TruncatedSeries::zero(order);
    };
    let (first, step, count) = shape.negatives;
    // 1 + q^-e = q^-e (1 + q^e): pull every negative power into the
    // leading monomial, so only nonnegative exponents are ever stored.
    let lowest = shape.min_exponent();
    assert!(lowest >= 0, "staircase dominates the negative exponents");
    if lowest as usize > order {
        return TruncatedSeries::zero(order);
    }
    let mut term = TruncatedSeries::monomial(lowest as usize, order);
    for i in 0..count as i64 {
        match first + i * step {
            0 => term = &term + &term,
            e => term.times_one_plus_q_pow(e.unsigned_abs() as usize),
        }
    }
    for i in 1..=shape.even_count {
        term.divide_by_one_minus_q_pow(2 * i);
    }
    term
}

/// The sum side as a truncated series.
pub fn sum_side(id: IdentityId, order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order);
    for n in 0.. {
        match term_shape(id, n) {
            None => continue,
            Some(shape) if shape.min_exponent() > order as i64 => break,
            Some(_) => total = &total + &term_series(id, n, order),
        }
    }
    total
}

/// Moduli and residues of the product side.
pub fn product_residues(id: IdentityId) -> Result<(u32, &'static [u32])> {
    use IdentityId::*;
    match id {
        Rr1Signed => Ok((5, &[1, 4])),
        Gg1Andrews | Gg1Prime => Ok((8, &[1, 4, 7])),
        Gg2ThreeWay => Ok((8, &[3, 4, 5])),
        other => Err(Error::ProductNotStated(other.name())),
    }
}

/// `prod 1/(1 - q^k)` over the identity's residue classes.
pub fn product_side(id: IdentityId, order: usize) -> Result<TruncatedSeries> {
    let (modulus, residues) = product_residues(id)?;
    let mut s = TruncatedSeries::one(order);
    for k in 1..=order {
        if residues.contains(&((k as u32) % modulus)) {
            s.divide_by_one_minus_q_pow(k);
        }
    }
    Ok(s)
}
