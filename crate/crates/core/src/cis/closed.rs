//! Closed-form CIS counts for paths, cliques and brooms.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::cis::stats::CisReport;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::rational::Rational;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn big(v: usize) -> BigUint {
    BigUint::from(v)
}

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidParameter(format!(
            "{name} must be at least 1"
        )))
    } else {
        Ok(())
    }
}

/// `N = C(n+1, 2)`, `W = C(n+2, 3)` for the path `P_n`.
pub fn path_stats(n: usize) -> Result<CisReport> {
    positive("n", n)?;
    let n = n as u64;
    Ok(CisReport::from_counts(
        binomial(n + 1, 2),
        binomial(n + 2, 3),
    ))
}

/// `M_{P_n} = (n + 2) / 3`.
pub fn path_mean(n: usize) -> Result<Rational> {
    positive("n", n)?;
    Ok(Rational::new(n as i64 + 2, 3))
}

/// `N = 2^n - 1`, `W = n·2^(n-1)` for `K_n`.
pub fn complete_stats(n: usize) -> Result<CisReport> {
    positive("n", n)?;
    let two_n = BigUint::one() << n;
    Ok(CisReport::from_counts(
        &two_n - BigUint::one(),
        big(n) * (BigUint::one() << (n - 1)),
    ))
}

/// `M_{K_n} = n·2^(n-1) / (2^n - 1)`.
pub fn complete_mean(n: usize) -> Result<Rational> {
    let r = complete_stats(n)?;
    Ok(Rational::ratio(&r.total, &r.count))
}

/// Counts at the `s`-th vertex of `P_n` (1-based):
/// `N = s(n-s+1)`, `W = s(n-s+1)(n+1)/2`.
pub fn path_local_stats(n: usize, s: usize) -> Result<CisReport> {
    if s == 0 || s > n {
        return Err(Error::InvalidParameter(format!(
            "path position s={s} outside 1..={n}"
        )));
    }
    let count = big(s * (n - s + 1));
    let total = big(s * (n - s + 1) * (n + 1) / 2);
    Ok(CisReport::from_counts(count, total))
}

/// `Φ_{P_m} = Σ_{i=1}^{m} (m - i + 1) x^i`; zero for `m = 0`.
pub fn path_poly(m: usize) -> IntPolynomial {
    let mut c = vec![0u64; m + 1];
    for (i, slot) in c.iter_mut().enumerate().skip(1) {
        *slot = (m - i + 1) as u64;
    }
    IntPolynomial::from_u64s(&c)
}

fn geometric(t: usize) -> IntPolynomial {
    IntPolynomial::from_u64s(&vec![1; t + 1])
}

fn broom_range(s: usize, n: usize) -> Result<()> {
    if s == 0 || s + 1 > n {
        return Err(Error::InvalidParameter(format!(
            "broom F_(s,n-s) needs 1 <= s <= n-1, got s={s}, n={n}"
        )));
    }
    Ok(())
}

/// `Φ_{F_s,v} = x(1+x)^(s-1) Σ_{i=0}^{n-s} x^i` at a clique vertex `v`
/// of the broom with `s` clique vertices and order `n`.
pub fn broom_local_poly(s: usize, n: usize) -> Result<IntPolynomial> {
    broom_range(s, n)?;
    let one_x = IntPolynomial::from_u64s(&[1, 1]);
    Ok((&IntPolynomial::x() * &one_x.pow(s as u32 - 1)) * geometric(n - s))
}

/// `Φ_{F_s - v} = (1+x)^(s-1) Σ_{i=0}^{n-s} x^i + Φ_{P_{n-s-1}} - 1`.
pub fn broom_minus_anchor_poly(s: usize, n: usize) -> Result<IntPolynomial> {
    broom_range(s, n)?;
    let one_x = IntPolynomial::from_u64s(&[1, 1]);
    let main = &one_x.pow(s as u32 - 1) * &geometric(n - s);
    Ok(&(&main + &path_poly(n - s - 1)) - &IntPolynomial::one())
}

/// `Φ_{F_s}` as the sum of the two pieces above.
pub fn broom_poly(s: usize, n: usize) -> Result<IntPolynomial> {
    Ok(broom_local_poly(s, n)? + broom_minus_anchor_poly(s, n)?)
}

/// Selector for [`closed_form_stats`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFamily {
    Path { n: usize },
    Complete { n: usize },
    PathLocal { n: usize, s: usize },
    Broom { s: usize, n: usize },
    BroomLocal { s: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ClosedFormValue {
    Report(CisReport),
    Poly(IntPolynomial),
}

pub fn closed_form_stats(family: ClosedFamily) -> Result<ClosedFormValue> {
    Ok(match family {
        ClosedFamily::Path { n } => ClosedFormValue::Report(path_stats(n)?),
        ClosedFamily::Complete { n } => ClosedFormValue::Report(complete_stats(n)?),
        ClosedFamily::PathLocal { n, s } => ClosedFormValue::Report(path_local_stats(n, s)?),
        ClosedFamily::Broom { s, n } => ClosedFormValue::Poly(broom_poly(s, n)?),
        ClosedFamily::BroomLocal { s, n } => ClosedFormValue::Poly(broom_local_poly(s, n)?),
    })
}
