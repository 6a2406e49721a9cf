//! Exact polynomial arithmetic in `q`, and in `t` over `q`-polynomial
//! coefficients.
//!
//! [`QPoly`] is the value type of every q-Stirling number in this crate;
//! [`TPoly`] carries the generating-function identities. Coefficients are
//! signed 64-bit integers with checked arithmetic: a result that would
//! overflow is rejected with [`Error::Overflow`], never wrapped.

use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// Largest degree a substitution is allowed to produce. Degrees here stay
/// in the low hundreds; anything past this bound is a caller bug.
const MAX_DEGREE: usize = 1 << 20;

/// Polynomial in `q` with integer coefficients, stored densely in
/// ascending degree order (`coeffs[d]` is the coefficient of `q^d`).
/// The zero polynomial is the empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// `c * q^d`.
    pub fn monomial(c: i64, d: usize) -> Self {
        if c == 0 {
            return QPoly::zero();
        }
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        QPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros so the representation stays canonical.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// The q-bracket `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q` is zero.
    pub fn q_bracket(n: usize) -> Self {
        QPoly { coeffs: vec![1; n] }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `q^d`, zero beyond the stored degree.
    pub fn coeff(&self, d: usize) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &QPoly) -> Result<QPoly> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for d in 0..len {
            out.push(
                self.coeff(d)
                    .checked_add(other.coeff(d))
                    .ok_or(Error::Overflow { op: "add" })?,
            );
        }
        Ok(QPoly::from_coeffs(out))
    }

    pub fn sub(&self, other: &QPoly) -> Result<QPoly> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for d in 0..len {
            out.push(
                self.coeff(d)
                    .checked_sub(other.coeff(d))
                    .ok_or(Error::Overflow { op: "sub" })?,
            );
        }
        Ok(QPoly::from_coeffs(out))
    }

    pub fn mul(&self, other: &QPoly) -> Result<QPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(QPoly::zero());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let prod = a.checked_mul(b).ok_or(Error::Overflow { op: "mul" })?;
                out[i + j] = out[i + j]
                    .checked_add(prod)
                    .ok_or(Error::Overflow { op: "mul" })?;
            }
        }
        Ok(QPoly::from_coeffs(out))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: i64) -> Result<QPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            out.push(a.checked_mul(c).ok_or(Error::Overflow { op: "scale" })?);
        }
        Ok(QPoly::from_coeffs(out))
    }

    pub fn pow(&self, exp: u32) -> Result<QPoly> {
        let mut out = QPoly::one();
        for _ in 0..exp {
            out = out.mul(self).map_err(|_| Error::Overflow { op: "pow" })?;
        }
        Ok(out)
    }

    /// Substitutes `q -> q^e`: the coefficient of `q^d` moves to `q^(d*e)`.
    pub fn substitute_q_power(&self, e: usize) -> Result<QPoly> {
        if e < 1 {
            return Err(Error::Domain("substitute_q_power requires e >= 1".into()));
        }
        if self.is_zero() || e == 1 {
            return Ok(self.clone());
        }
        let top = (self.coeffs.len() - 1)
            .checked_mul(e)
            .filter(|&d| d <= MAX_DEGREE)
            .ok_or(Error::Overflow { op: "substitute_q_power" })?;
        let mut out = vec![0i64; top + 1];
        for (d, &c) in self.coeffs.iter().enumerate() {
            out[d * e] = c;
        }
        Ok(QPoly::from_coeffs(out))
    }

    /// Value at `q = 1`, i.e. the checked sum of the coefficients.
    pub fn eval_at_one(&self) -> Result<i64> {
        let mut total = 0i64;
        for &c in &self.coeffs {
            total = total
                .checked_add(c)
                .ok_or(Error::Overflow { op: "eval_at_one" })?;
        }
        Ok(total)
    }
}

impl fmt::Display for QPoly {
    /// Canonical text form: `"2+q+q^2"`, `"3*q^2-q^4"`, `"0"` for zero.
    /// Zero terms are omitted; unit coefficients drop the `1*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
                first = false;
            } else if c < 0 {
                f.write_str("-")?;
            } else {
                f.write_str("+")?;
            }
            let mag = c.unsigned_abs();
            if d == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                if d == 1 {
                    f.write_str("q")?;
                } else {
                    write!(f, "q^{d}")?;
                }
            }
        }
        Ok(())
    }
}

/// Polynomial in `t` whose coefficients are [`QPoly`] values, stored in
/// ascending degree of `t` with no trailing zero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TPoly {
    #[serde(rename = "t_coeffs")]
    coeffs: Vec<QPoly>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly { coeffs: vec![QPoly::one()] }
    }

    /// `c * t^k`.
    pub fn monomial(c: QPoly, k: usize) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![QPoly::zero(); k + 1];
        coeffs[k] = c;
        TPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<QPoly>) -> Self {
        while coeffs.last().map(QPoly::is_zero) == Some(true) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> QPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &TPoly) -> Result<TPoly> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k).add(&other.coeff(k))?);
        }
        Ok(TPoly::from_coeffs(out))
    }

    /// Multiplies every coefficient by the q-polynomial `c`.
    pub fn scale(&self, c: &QPoly) -> Result<TPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.mul(c)?);
        }
        Ok(TPoly::from_coeffs(out))
    }

    /// Multiplies by the linear factor `(t + c)`.
    pub fn mul_linear(&self, c: &QPoly) -> Result<TPoly> {
        if self.is_zero() {
            return Ok(TPoly::zero());
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        for k in 0..=self.coeffs.len() {
            let shifted = if k > 0 { self.coeff(k - 1) } else { QPoly::zero() };
            out.push(shifted.add(&self.coeff(k).mul(c)?)?);
        }
        Ok(TPoly::from_coeffs(out))
    }

    /// Value at `q = 1` of every coefficient, as plain integers.
    pub fn eval_coeffs_at_one(&self) -> Result<Vec<i64>> {
        self.coeffs.iter().map(QPoly::eval_at_one).collect()
    }
}

/// Expands the product of linear factors `prod_i (t + c_i)` exactly.
/// The empty product is the constant 1.
pub fn expand_linear_factors(constants: &[QPoly]) -> Result<TPoly> {
    let mut out = TPoly::one();
    for c in constants {
        out = out.mul_linear(c)?;
    }
    Ok(out)
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if k == 0 {
                write!(f, "({c})")?;
            } else {
                if *c != QPoly::one() {
                    write!(f, "({c})*")?;
                }
                if k == 1 {
                    f.write_str("t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}
