use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;

/// Polynomial with nonnegative big-integer coefficients, dense by degree.
///
/// Used for CIS generating polynomials, where coefficient `i` counts the
/// subgraphs of order `i`. Trailing zeros are trimmed, so equality is
/// coefficientwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigUint>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::monomial(0, 1u32)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        IntPolynomial::monomial(1, 1u32)
    }

    pub fn monomial(degree: usize, c: impl Into<BigUint>) -> Self {
        let mut coeffs = vec![BigUint::zero(); degree + 1];
        coeffs[degree] = c.into();
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_u64s(c: &[u64]) -> Self {
        IntPolynomial::from_coeffs(c.iter().map(|&x| BigUint::from(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at `x = 1`: the number of counted subgraphs.
    pub fn eval_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Derivative at `x = 1`: the total order of counted subgraphs.
    pub fn derivative_at_one(&self) -> BigUint {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigUint::from(i))
            .sum()
    }

    /// `W / N`; `None` for the zero polynomial.
    pub fn mean(&self) -> Option<Rational> {
        let n = self.eval_one();
        (!n.is_zero()).then(|| Rational::ratio(&self.derivative_at_one(), &n))
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Exact division by `x^k`; panics if a low coefficient is nonzero.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(
            self.coeffs.iter().take(k).all(Zero::is_zero),
            "polynomial not divisible by x^{k}"
        );
        IntPolynomial::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// `None` if any coefficient would go negative.
    pub fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i).cloned().unwrap_or_default();
            let b = rhs.coeffs.get(i).cloned().unwrap_or_default();
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(IntPolynomial::from_coeffs(out))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(IntPolynomial::one(), |acc, _| &acc * self)
    }

    /// Coefficients as decimal strings, index = order.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigUint::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.checked_sub(rhs)
            .expect("IntPolynomial subtraction produced a negative coefficient")
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// JSON form is an array of decimal strings indexed by order, starting at 0.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigUint>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arithmetic() {
        let p = IntPolynomial::from_u64s(&[0, 1, 1]); // x + x^2
        let sq = &p * &p;
        assert_eq!(sq, IntPolynomial::from_u64s(&[0, 0, 1, 2, 1]));
        assert_eq!(sq.shift_down(1), IntPolynomial::from_u64s(&[0, 1, 2, 1]));
        assert_eq!(sq.to_string(), "x^2 + 2x^3 + x^4");
        assert_eq!(p.eval_one(), BigUint::from(2u32));
        assert_eq!(p.derivative_at_one(), BigUint::from(3u32));
        assert_eq!(p.mean().unwrap(), Rational::new(3, 2));
        assert!(IntPolynomial::zero().mean().is_none());
        assert!(IntPolynomial::x().checked_sub(&p).is_none());
    }

    #[test]
    fn json_is_decimal_strings() {
        let p = IntPolynomial::from_u64s(&[0, 3, 2, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["0","3","2","1"]"#);
        let back: IntPolynomial = serde_json::from_str(r#"["0","3","2","1"]"#).unwrap();
        assert_eq!(back, p);
    }

    proptest! {
        #[test]
        fn product_evaluates_multiplicatively(
            a in prop::collection::vec(0u64..1000, 0..8),
            b in prop::collection::vec(0u64..1000, 0..8),
        ) {
            let (pa, pb) = (IntPolynomial::from_u64s(&a), IntPolynomial::from_u64s(&b));
            let prod = &pa * &pb;
            prop_assert_eq!(prod.eval_one(), pa.eval_one() * pb.eval_one());
            // (fg)' = f'g + fg'
            prop_assert_eq!(
                prod.derivative_at_one(),
                pa.derivative_at_one() * pb.eval_one() + pa.eval_one() * pb.derivative_at_one()
            );
            let sum = &pa + &pb;
            prop_assert_eq!(sum.checked_sub(&pb).unwrap(), pa);
        }
    }
}
