//! Elementary, complete homogeneous, and power-sum symmetric polynomials
//! specialized at the odd q-brackets `[1]_q, [3]_q, ..., [2n-1]_q`.
//!
//! At this specialization the elementary polynomials reproduce the
//! shifted first-kind numbers, `e_k = ss_q^B(n, n-k)`, and the complete
//! homogeneous polynomials reproduce the second-kind numbers in the
//! shifted form `h_k` over `n` variables `= S_q^B(n-1+k, n-1)`. Note the
//! index shift: the unshifted relation `h_k = S_q^B(n+k, n)` fails
//! already at `n = k = 1`, where `h_1([1]_q) = 1` while `S_q^B(2,1) =
//! 2+q+q^2`; [`h_unshifted_residual`] pins that discrepancy. The
//! orthogonality and power-sum residuals below use the shifted form,
//! which is exactly the specialization of the classical convolution
//! identities between `e`, `h`, and `p`.

use crate::qpoly::QPoly;
use crate::rg2::stirling2_q;
use crate::rg1::sstirling_b1_q;
use crate::{Error, Result};

/// The specialization values `[1]_q, [3]_q, ..., [2n-1]_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddSpecialization {
    values: Vec<QPoly>,
}

impl OddSpecialization {
    pub fn new(n: usize) -> Self {
        OddSpecialization {
            values: (0..n).map(|i| QPoly::q_bracket(2 * i + 1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[QPoly] {
        &self.values
    }
}

/// `e_k` at the odd specialization in `n` variables, via the recurrence
/// `e_k(x_1..x_m) = e_k(x_1..x_{m-1}) + x_m e_{k-1}(x_1..x_{m-1})`.
/// Zero for `k > n`.
pub fn elementary_spec(n: usize, k: usize) -> Result<QPoly> {
    if k > n {
        return Ok(QPoly::zero());
    }
    let odd = OddSpecialization::new(n);
    // row[j] = e_j over the first m variables.
    let mut row = vec![QPoly::one()];
    for (m, x) in odd.values().iter().enumerate() {
        let mut next = Vec::with_capacity(m + 2);
        for j in 0..=m + 1 {
            let keep = row.get(j).cloned().unwrap_or_else(QPoly::zero);
            let take = if j >= 1 {
                row.get(j - 1).map(|p| p.mul(x)).transpose()?.unwrap_or_else(QPoly::zero)
            } else {
                QPoly::zero()
            };
            next.push(keep.add(&take)?);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// `h_k` at the odd specialization in `n` variables, via the recurrence
/// `h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m)`.
/// With zero variables, `h_k` is 1 for `k = 0` and zero otherwise.
pub fn homogeneous_spec(n: usize, k: usize) -> Result<QPoly> {
    let odd = OddSpecialization::new(n);
    // row[j] = h_j over the current variable set.
    let mut row = vec![QPoly::one()];
    row.extend((0..k).map(|_| QPoly::zero()));
    for x in odd.values() {
        let mut next = vec![QPoly::one()];
        for j in 1..=k {
            let keep = row[j].clone();
            let take = next[j - 1].mul(x)?;
            next.push(keep.add(&take)?);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// `p_m` at the odd specialization: the checked sum of `[2i-1]_q^m`.
pub fn power_spec(n: usize, m: usize) -> Result<QPoly> {
    if m == 0 {
        return Err(Error::Domain("power_spec requires m >= 1".into()));
    }
    let mut total = QPoly::zero();
    for x in OddSpecialization::new(n).values() {
        total = total.add(&x.pow(m as u32)?)?;
    }
    Ok(total)
}

/// Orthogonality residual in the shifted form:
/// `sum_{j=0}^m (-1)^j ss_q^B(n, n-j) S_q^B(n-1+m-j, n-1)`.
/// Zero whenever the orthogonality identity holds.
pub fn orthogonality_residual(n: usize, m: usize) -> Result<QPoly> {
    if n == 0 || m == 0 {
        return Err(Error::Domain("orthogonality_residual requires n, m >= 1".into()));
    }
    let mut total = QPoly::zero();
    for j in 0..=m {
        if j > n {
            break;
        }
        let term = sstirling_b1_q(n, n - j)?.mul(&stirling2_q(n - 1 + m - j, n - 1)?)?;
        total = if j % 2 == 0 { total.add(&term)? } else { total.sub(&term)? };
    }
    Ok(total)
}

/// Power-sum residual in the shifted form:
/// `sum_{j=1}^m (-1)^(j-1) j ss_q^B(n, n-j) S_q^B(n-1+m-j, n-1) - p_m`.
/// Zero whenever the power-sum identity holds.
pub fn power_sum_residual(n: usize, m: usize) -> Result<QPoly> {
    if n == 0 || m == 0 {
        return Err(Error::Domain("power_sum_residual requires n, m >= 1".into()));
    }
    let mut total = QPoly::zero();
    for j in 1..=m {
        if j > n {
            break;
        }
        let term = sstirling_b1_q(n, n - j)?
            .mul(&stirling2_q(n - 1 + m - j, n - 1)?)?
            .scale(j as i64)?;
        total = if j % 2 == 1 { total.add(&term)? } else { total.sub(&term)? };
    }
    total.sub(&power_spec(n, m)?)
}

/// Residual of the unshifted relation `h_k = S_q^B(n+k, n)`:
/// `S_q^B(n+k, n) - h_k(n vars)`. Nonzero in general; at `n = k = 1` it
/// equals `1+q+q^2`, which is pinned by the verification suite.
pub fn h_unshifted_residual(n: usize, k: usize) -> Result<QPoly> {
    stirling2_q(n + k, n)?.sub(&homogeneous_spec(n, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specialization_values() {
        let odd = OddSpecialization::new(3);
        assert_eq!(odd.values()[0], QPoly::one());
        assert_eq!(odd.values()[1].coeffs(), &[1, 1, 1]);
        assert_eq!(odd.values()[2].coeffs(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn elementary_examples() {
        for n in 0..=5 {
            assert_eq!(elementary_spec(n, 0).unwrap(), QPoly::one());
        }
        // e_1 = [1]+[3], e_2 = [1]*[3].
        assert_eq!(elementary_spec(2, 1).unwrap().coeffs(), &[2, 1, 1]);
        assert_eq!(elementary_spec(2, 2).unwrap().coeffs(), &[1, 1, 1]);
        assert_eq!(elementary_spec(2, 3).unwrap(), QPoly::zero());
    }

    #[test]
    fn homogeneous_examples() {
        for n in 0..=5 {
            assert_eq!(homogeneous_spec(n, 0).unwrap(), QPoly::one());
        }
        // h_2(x_1) = x_1^2 with x_1 = [1]_q = 1.
        assert_eq!(homogeneous_spec(1, 2).unwrap(), QPoly::one());
        assert_eq!(homogeneous_spec(2, 1).unwrap().coeffs(), &[2, 1, 1]);
        assert_eq!(homogeneous_spec(0, 1).unwrap(), QPoly::zero());
    }

    #[test]
    fn power_examples() {
        for m in 1..=4 {
            assert_eq!(power_spec(1, m).unwrap(), QPoly::one());
        }
        assert_eq!(power_spec(2, 1).unwrap().coeffs(), &[2, 1, 1]);
        // 1 + (1+q+q^2)^2, expanded by an independent route.
        let oracle = QPoly::one()
            .add(&QPoly::q_bracket(3).mul(&QPoly::q_bracket(3)).unwrap())
            .unwrap();
        assert_eq!(oracle.coeffs(), &[2, 2, 3, 2, 1]);
        assert_eq!(power_spec(2, 2).unwrap(), oracle);
        assert!(power_spec(2, 0).is_err());
    }

    #[test]
    fn elementary_matches_shifted_first_kind() {
        for n in 0..=5 {
            for k in 0..=n {
                assert_eq!(
                    elementary_spec(n, k).unwrap(),
                    sstirling_b1_q(n, n - k).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn homogeneous_matches_shifted_second_kind() {
        for n in 1..=5 {
            for k in 0..=4 {
                assert_eq!(
                    homogeneous_spec(n, k).unwrap(),
                    stirling2_q(n - 1 + k, n - 1).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn convolutions_specialize() {
        for n in 1..=6usize {
            for m in 1..=6usize {
                let mut alternating = QPoly::zero();
                for j in 0..=m {
                    let term =
                        elementary_spec(n, j).unwrap().mul(&homogeneous_spec(n, m - j).unwrap()).unwrap();
                    alternating = if j % 2 == 0 {
                        alternating.add(&term).unwrap()
                    } else {
                        alternating.sub(&term).unwrap()
                    };
                }
                assert_eq!(alternating, QPoly::zero(), "convolution n={n} m={m}");

                let mut weighted = QPoly::zero();
                for j in 1..=m {
                    let term = elementary_spec(n, j)
                        .unwrap()
                        .mul(&homogeneous_spec(n, m - j).unwrap())
                        .unwrap()
                        .scale(j as i64)
                        .unwrap();
                    weighted = if j % 2 == 1 {
                        weighted.add(&term).unwrap()
                    } else {
                        weighted.sub(&term).unwrap()
                    };
                }
                assert_eq!(weighted, power_spec(n, m).unwrap(), "weighted n={n} m={m}");
            }
        }
    }

    #[test]
    fn residuals_vanish() {
        for n in 1..=4 {
            for m in 1..=4 {
                assert_eq!(orthogonality_residual(n, m).unwrap(), QPoly::zero(), "orth n={n} m={m}");
                assert_eq!(power_sum_residual(n, m).unwrap(), QPoly::zero(), "power n={n} m={m}");
            }
        }
        // Hand-checked smallest cases.
        assert_eq!(orthogonality_residual(1, 1).unwrap(), QPoly::zero());
        assert_eq!(power_sum_residual(1, 1).unwrap(), QPoly::zero());
    }

    #[test]
    fn unshifted_h_relation_fails_at_one_one() {
        // S_q^B(2,1) - h_1([1]_q) = (2+q+q^2) - 1.
        assert_eq!(h_unshifted_residual(1, 1).unwrap().coeffs(), &[1, 1, 1]);
        // The shifted relation holds there.
        assert_eq!(
            homogeneous_spec(1, 1).unwrap(),
            stirling2_q(1, 0).unwrap()
        );
    }

    #[test]
    fn domain_errors() {
        assert!(orthogonality_residual(0, 1).is_err());
        assert!(orthogonality_residual(1, 0).is_err());
        assert!(power_sum_residual(0, 1).is_err());
    }
}
