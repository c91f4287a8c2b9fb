//! Bernoulli numbers, power-sum polynomials and Faulhaber forms.
//!
//! Two independent routes lead to the polynomial `S(n) = 1^e + ... + n^e`
//! for odd `e = 2m+1`:
//!
//! - the Bernoulli route, [`power_sum_poly_n`], which reads the coefficients
//!   off the Bernoulli numbers;
//! - the triangular route, [`power_sum_tform`], which never touches a
//!   Bernoulli number. It peels odd power sums one at a time out of the
//!   identities
//!
//!   ```text
//!   2^(M-1) * T^M = sum_j C(M, j) * S_{M+j}(n),   T = n(n+1)/2
//!   ```
//!
//!   (`j` runs over `0, 2, .., M-1` for odd `M` and `1, 3, .., M-1` for even
//!   `M`) and ends up with `S_{2m+1} = P(T) * T^2`.
//!
//! Equating the two routes and reading off the coefficient of `n` shows that
//! every odd Bernoulli number past `B_1` is zero: `P(T) * T^2` has no linear
//! term in `n`. [`infer_odd_bernoulli`] performs exactly that comparison.

use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{require_at_least, Result};
use crate::exact_arith::{binomial_u64, Rational};
use crate::polynomial::{Polynomial, Var};

/// Memoised `B_0, B_1, ..` with `B_1 = -1/2`, defined by `B_0 = 1` and
/// `sum_{k=0}^{n} C(n+1, k) * B_k = 0` for `n >= 1`.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable {
            values: vec![Rational::one()],
        }
    }

    /// Number of populated entries.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Populates the table through index `k`.
    pub fn extend_to(&mut self, k: usize) {
        while self.values.len() <= k {
            let n = self.values.len();
            // C(n+1, j) for j = 0..n, built along the row
            let mut row = BigInt::one();
            let mut sum = Rational::zero();
            for (j, b) in self.values.iter().enumerate() {
                if !b.is_zero() {
                    sum += &(b * &Rational::from_integer(row.clone()));
                }
                row = row * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
            }
            // row now holds C(n+1, n) = n+1
            let next = (-sum)
                .checked_div(&Rational::from_integer(row))
                .expect("n + 1 > 0");
            self.values.push(next);
        }
    }

    pub fn get(&mut self, k: usize) -> Rational {
        self.extend_to(k);
        self.values[k].clone()
    }

    /// `sum_{k=0}^{n} C(n+1, k) * B_k`, which must vanish for every populated
    /// `n >= 1`. `None` if `B_n` has not been computed yet.
    pub fn recurrence_residual(&self, n: usize) -> Option<Rational> {
        if n >= self.values.len() {
            return None;
        }
        let mut acc = Rational::zero();
        for (k, b) in self.values[..=n].iter().enumerate() {
            acc += &(b * &Rational::from_integer(binomial_u64(n as u64 + 1, k as u64)));
        }
        Some(acc)
    }
}

static SHARED_TABLE: LazyLock<Mutex<BernoulliTable>> =
    LazyLock::new(|| Mutex::new(BernoulliTable::new()));

/// `B_k` from the process-wide table, extending it under the lock.
pub fn bernoulli(k: usize) -> Rational {
    let mut table = SHARED_TABLE.lock().unwrap_or_else(|e| e.into_inner());
    table.get(k)
}

/// `B_0 ..= B_k` from the process-wide table.
pub fn bernoulli_range(k: usize) -> Vec<Rational> {
    let mut table = SHARED_TABLE.lock().unwrap_or_else(|e| e.into_inner());
    table.extend_to(k);
    table.values()[..=k].to_vec()
}

/// `S_m(n) = sum_{k=1}^{n} k^m` as a degree `m+1` polynomial in `n`, via
/// `[n^(m+1-j)] S_m = (-1)^j * C(m+1, j) * B_j / (m+1)`.
pub fn power_sum_poly_n(m: usize) -> Result<Polynomial> {
    require_at_least("power_sum_poly_n", "m", m, 1)?;
    let bs = bernoulli_range(m);
    let denom = Rational::from_integer(m as u64 + 1);
    let mut coeffs = vec![Rational::zero(); m + 2];
    for (j, b) in bs.iter().enumerate() {
        let mut c = b * &Rational::from_integer(binomial_u64(m as u64 + 1, j as u64));
        if j % 2 == 1 {
            c = -c;
        }
        coeffs[m + 1 - j] = c.checked_div(&denom)?;
    }
    Ok(Polynomial::from_coeffs(coeffs, Var::N))
}

/// Literal `sum_{k=1}^{n} k^m`.
pub fn power_sum_direct(m: u32, n: u64) -> BigInt {
    (1..=n)
        .map(|k| num_traits::pow(BigInt::from(k), m as usize))
        .sum()
}

/// Outcome of comparing two polynomials that an identity claims are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub label: String,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub holds: bool,
}

impl VerificationReport {
    pub fn new(label: impl Into<String>, lhs: Polynomial, rhs: Polynomial) -> Self {
        let holds = lhs == rhs;
        VerificationReport {
            label: label.into(),
            lhs,
            rhs,
            holds,
        }
    }
}

/// Indices `j` in `2^(M-1) T^M = sum_j C(M, j) S_{M+j}`: even for odd `M`,
/// odd for even `M`, always ending at `M - 1`.
fn ladder_indices(big_m: usize) -> impl Iterator<Item = usize> {
    let start = if big_m % 2 == 1 { 0 } else { 1 };
    (start..big_m).step_by(2)
}

fn pow2(e: usize) -> Rational {
    Rational::from_integer(num_traits::pow(BigInt::from(2), e))
}

/// Checks `2^(m-1) * (n(n+1)/2)^m = sum_j C(m, j) * S_{m+j}(n)` symbolically,
/// with each `S` taken from the Bernoulli route.
pub fn verify_pascal_identity(m: usize) -> Result<VerificationReport> {
    require_at_least("verify_pascal_identity", "m", m, 2)?;
    let lhs = Polynomial::triangular().pow(m as u32).scale(&pow2(m - 1));
    let mut rhs = Polynomial::zero(Var::N);
    for j in ladder_indices(m) {
        let s = power_sum_poly_n(m + j)?;
        rhs = rhs.add(&s.scale(&Rational::from_integer(binomial_u64(m as u64, j as u64))))?;
    }
    Ok(VerificationReport::new(format!("pascal m={m}"), lhs, rhs))
}

fn triangular_number(k: &BigInt) -> BigInt {
    k * (k + 1u32) / 2u32
}

/// Checks `(N(N+1)/2)^m = sum_{k=1}^{N} [(k(k+1)/2)^m - ((k-1)k/2)^m]` by
/// exact evaluation, with each bracket computed in the rewritten form
/// `(k/2)^m * ((k+1)^m - (k-1)^m)`. Both sides are reported as constants.
pub fn telescoping_check(m: usize, n: usize) -> Result<VerificationReport> {
    require_at_least("telescoping_check", "m", m, 1)?;
    require_at_least("telescoping_check", "N", n, 1)?;
    let e = m as u32;
    let lhs = Rational::from_integer(num_traits::pow(triangular_number(&BigInt::from(n)), m));
    let half = Rational::new(1, 2)?;
    let mut rhs = Rational::zero();
    for k in 1..=n as u64 {
        let k = Rational::from_integer(k);
        let up = (&k + &Rational::one()).pow(e);
        let down = (&k - &Rational::one()).pow(e);
        rhs += &((&k * &half).pow(e) * (up - down));
    }
    Ok(VerificationReport::new(
        format!("telescoping m={m} N={n}"),
        Polynomial::constant(lhs, Var::N),
        Polynomial::constant(rhs, Var::N),
    ))
}

/// `S_{2m+1}(n) = p(T) * T^2` with `T = n(n+1)/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaulhaberForm {
    pub m: usize,
    pub p: Polynomial,
}

impl FaulhaberForm {
    pub fn exponent(&self) -> usize {
        2 * self.m + 1
    }

    /// `p(T) * T^2`, still in the `T`-basis.
    pub fn full_t_poly(&self) -> Polynomial {
        self.p.shift_up(2)
    }

    /// The power sum in the `n`-basis.
    pub fn to_n_basis(&self) -> Polynomial {
        self.full_t_poly().t_to_n().expect("p is a T-polynomial")
    }

    /// Coefficients of `p`, highest degree first.
    pub fn descending_coeffs(&self) -> Vec<Rational> {
        self.p.coeffs().iter().rev().cloned().collect()
    }

    /// Describes the first broken shape constraint, if any: `deg p = m - 1`,
    /// leading coefficient `2^m / (m+1)`, and `c1 = -4 * c0` once `m >= 2`.
    pub fn structural_violation(&self) -> Option<String> {
        let m = self.m;
        if self.p.var() != Var::T {
            return Some(format!("m={m}: p is written in {}", self.p.var()));
        }
        if self.p.degree() != Some(m - 1) {
            return Some(format!(
                "m={m}: degree {:?}, expected {}",
                self.p.degree(),
                m - 1
            ));
        }
        let lead = pow2(m)
            .checked_div(&Rational::from_integer(m as u64 + 1))
            .expect("m + 1 > 0");
        if self.p.leading_coeff() != Some(&lead) {
            return Some(format!(
                "m={m}: leading coefficient {:?}, expected {lead}",
                self.p.leading_coeff()
            ));
        }
        if m >= 2 {
            let (c0, c1) = (self.p.coeff(0), self.p.coeff(1));
            if c1 != -(&c0 * &Rational::from(4)) {
                return Some(format!("m={m}: tail c1 = {c1}, c0 = {c0}"));
            }
        }
        None
    }
}

/// Extends `forms` so that it holds `p_1, .., p_m`, each derived from the
/// previous ones. Index `i` holds `p_{i+1}`.
fn extend_ladder(forms: &mut Vec<Polynomial>, m: usize) {
    while forms.len() < m {
        let target = forms.len() + 1;
        // highest ladder term is C(M, M-1) * S_{2M-1} = M * S_{2 target + 1}
        let big_m = target + 1;
        let mut rest = Polynomial::monomial(pow2(big_m - 1), big_m, Var::T);
        for j in ladder_indices(big_m).filter(|&j| j < big_m - 1) {
            let lower = &forms[(big_m + j - 1) / 2 - 1];
            let weight = Rational::from_integer(binomial_u64(big_m as u64, j as u64));
            rest = rest
                .sub(&lower.shift_up(2).scale(&weight))
                .expect("T-basis throughout");
        }
        let top = rest.scale(&Rational::from_integer(big_m as u64).recip().expect("M > 0"));
        let p = top.shift_down(2).unwrap_or_else(|| {
            panic!(
                "T^2 does not divide the T-form of S_{}: {top}",
                2 * target + 1
            )
        });
        forms.push(p);
    }
}

static SHARED_LADDER: LazyLock<Mutex<Vec<Polynomial>>> = LazyLock::new(|| Mutex::new(Vec::new()));

/// The Faulhaber form of `S_{2m+1}`, derived without Bernoulli numbers.
///
/// Panics if the derived form breaks its structural invariants; that would be
/// a bug in the derivation, not a bad input.
pub fn power_sum_tform(m: usize) -> Result<FaulhaberForm> {
    require_at_least("power_sum_tform", "m", m, 1)?;
    let p = {
        let mut forms = SHARED_LADDER.lock().unwrap_or_else(|e| e.into_inner());
        extend_ladder(&mut forms, m);
        forms[m - 1].clone()
    };
    let form = FaulhaberForm { m, p };
    if let Some(violation) = form.structural_violation() {
        panic!("Faulhaber form invariant violated: {violation}");
    }
    Ok(form)
}

/// Coefficients of [`power_sum_tform`]`(m).p`, highest degree first.
pub fn faulhaber_coefficients(m: usize) -> Result<Vec<Rational>> {
    Ok(power_sum_tform(m)?.descending_coeffs())
}

/// Compares the triangular route against the Bernoulli route for
/// `S_{2m+1}`, both in the `n`-basis.
pub fn verify_faulhaber(m: usize) -> Result<VerificationReport> {
    let form = power_sum_tform(m)?;
    let lhs = form.to_n_basis();
    let rhs = power_sum_poly_n(2 * m + 1)?;
    Ok(VerificationReport::new(
        format!("faulhaber m={m}"),
        lhs,
        rhs,
    ))
}

/// `B_{2m+1}` recovered from the triangular route alone.
///
/// In the Bernoulli route the linear coefficient of `S_{2m+1}` is
/// `-C(2m+2, 2m+1) * B_{2m+1} / (2m+2) = -B_{2m+1}`, so negating the linear
/// coefficient of `p(T) * T^2` in the `n`-basis yields `B_{2m+1}`.
pub fn infer_odd_bernoulli(m: usize) -> Result<Rational> {
    let form = power_sum_tform(m)?;
    Ok(-form.to_n_basis().coeff(1))
}
