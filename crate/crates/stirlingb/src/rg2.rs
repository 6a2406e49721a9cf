//! Restricted-growth words of type B of the second kind.
//!
//! A word `w_1 ... w_n` over `{0, +-1, ..., +-n}` is valid when `w_1` is
//! `0` or `1` and every later letter is drawn from `{0, +-1, ..., +-M,
//! M+1}` where `M` is the largest absolute value of the prefix; a letter
//! reaching a new maximum must be positive. These words are in bijection
//! with type-B set partitions: the letter at position `j` is the signed
//! index of the representative block holding `j`, or `0` for the zero
//! block.
//!
//! The weight of a word is `q` raised to the sum of its per-letter
//! exponents: a first occurrence or a `0` contributes nothing, a repeated
//! letter `-m` contributes `2m-1`, a repeated `+m` contributes `2m`.
//! Summing weights over all words with maximal letter `k` gives the
//! q-Stirling number of the second kind of type B, which equally obeys
//! the recursion with coefficient `[2k+1]_q`; both routes are exposed so
//! they can be checked against each other.

use std::fmt;
use std::str::FromStr;

use crate::combinat::{self, GuardKind, SignedSetPartition};
use crate::qpoly::QPoly;
use crate::{Condition, Error, Result, Violation};

/// Validated restricted-growth word of type B of the second kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RgWord2 {
    letters: Vec<i32>,
}

impl RgWord2 {
    pub fn new(letters: Vec<i32>) -> Result<Self> {
        validate(&letters).map_err(Error::InvalidWord)?;
        Ok(RgWord2 { letters })
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    /// Largest letter; equals the number of non-zero blocks of the
    /// corresponding partition.
    pub fn max_letter(&self) -> usize {
        self.letters.iter().map(|x| x.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Exponent `e` such that the weight of the word is `q^e`.
    pub fn weight_exponent(&self) -> u64 {
        let mut max_abs = 0u64;
        let mut total = 0u64;
        for &x in &self.letters {
            let a = u64::from(x.unsigned_abs());
            if a == 0 {
                continue;
            }
            if a > max_abs {
                max_abs = a;
            } else if x < 0 {
                total += 2 * a - 1;
            } else {
                total += 2 * a;
            }
        }
        total
    }
}

impl fmt::Display for RgWord2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for RgWord2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut letters = Vec::new();
        if !s.is_empty() {
            for part in s.split(',') {
                letters.push(
                    part.trim()
                        .parse::<i32>()
                        .map_err(|e| Error::Parse(format!("bad letter {part:?}: {e}")))?,
                );
            }
        }
        RgWord2::new(letters)
    }
}

/// Checks the three defining conditions. Violations name the failed
/// condition (`(1)`, `(2)`, or `(2b)`) and the 1-based letter position.
pub fn validate(letters: &[i32]) -> std::result::Result<(), Violation> {
    let mut max_abs = 0i64;
    for (idx, &x) in letters.iter().enumerate() {
        let position = idx + 1;
        if position == 1 {
            if x != 0 && x != 1 {
                return Err(Violation { condition: Condition::First, position });
            }
            max_abs = i64::from(x.abs());
            continue;
        }
        let a = i64::from(x).abs();
        if a > max_abs + 1 {
            return Err(Violation { condition: Condition::Growth, position });
        }
        if a == max_abs + 1 && x < 0 {
            return Err(Violation { condition: Condition::NewMaxSign, position });
        }
        max_abs = max_abs.max(a);
    }
    Ok(())
}

/// Encodes a partition: the letter at position `j` is the block number
/// holding `j`, negated when `-j` is the element in the representative
/// block, and `0` for the zero block.
pub fn partition_to_rg2(p: &SignedSetPartition) -> RgWord2 {
    let mut letters = vec![0i32; p.n()];
    for (b, block) in p.blocks().iter().enumerate() {
        let number = b as i32 + 1;
        for &e in block {
            if e > 0 {
                letters[e as usize - 1] = number;
            } else {
                letters[(-e) as usize - 1] = -number;
            }
        }
    }
    RgWord2 { letters }
}

/// Decodes a word back to the partition in standard presentation.
pub fn rg2_to_partition(w: &RgWord2) -> SignedSetPartition {
    let mut zero_support = Vec::new();
    let mut blocks = vec![Vec::new(); w.max_letter()];
    for (idx, &x) in w.letters.iter().enumerate() {
        let j = idx as i32 + 1;
        if x == 0 {
            zero_support.push(j as u32);
        } else if x > 0 {
            blocks[x as usize - 1].push(j);
        } else {
            blocks[(-x) as usize - 1].push(-j);
        }
    }
    SignedSetPartition::new(zero_support, blocks)
        .expect("a valid word decodes to a standard-presentation partition")
}

/// Second-kind q-Stirling number of type B by its recursion.
pub fn stirling2_q(n: usize, k: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::Domain(format!("stirling2_q requires k <= n, got n={n} k={k}")));
    }
    Ok(stirling2_q_table(n)?.swap_remove(n).swap_remove(k))
}

/// Triangle of second-kind values for `n = 0..=max_n`, `k = 0..=n`.
pub fn stirling2_q_table(max_n: usize) -> Result<Vec<Vec<QPoly>>> {
    let mut rows: Vec<Vec<QPoly>> = vec![vec![QPoly::one()]];
    for m in 1..=max_n {
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let up = if k >= 1 { prev.get(k - 1).cloned() } else { None };
            let stay = match prev.get(k) {
                Some(p) => p.mul(&QPoly::q_bracket(2 * k + 1))?,
                None => QPoly::zero(),
            };
            row.push(match up {
                Some(u) => u.add(&stay)?,
                None => stay,
            });
        }
        rows.push(row);
    }
    Ok(rows)
}

/// q,r-variant by the same recursion with the r-boundaries: zero when
/// `k < r`, `k > n`, or `n < r`, and value 1 at `(r, r, r)`.
pub fn stirling2_q_r(n: usize, k: usize, r: usize) -> Result<QPoly> {
    if k > n || n < r || k < r {
        return Ok(QPoly::zero());
    }
    Ok(stirling2_q_r_table(n, r)?.swap_remove(n).swap_remove(k))
}

/// Triangle of the q,r-variant for `n = 0..=max_n`, `k = 0..=n`.
pub fn stirling2_q_r_table(max_n: usize, r: usize) -> Result<Vec<Vec<QPoly>>> {
    let mut rows: Vec<Vec<QPoly>> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        if n < r {
            rows.push(vec![QPoly::zero(); n + 1]);
            continue;
        }
        if n == r {
            let mut row = vec![QPoly::zero(); n + 1];
            row[r] = QPoly::one();
            rows.push(row);
            continue;
        }
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let up = if k >= 1 { prev.get(k - 1).cloned() } else { None };
            let stay = match prev.get(k) {
                Some(p) if !p.is_zero() => p.mul(&QPoly::q_bracket(2 * k + 1))?,
                _ => QPoly::zero(),
            };
            row.push(match up {
                Some(u) => u.add(&stay)?,
                None => stay,
            });
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Second-kind q-Stirling number by brute-force enumeration of the words
/// with maximal letter `k`, summing their weights.
pub fn stirling2_q_enum(n: usize, k: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::Domain(format!(
            "stirling2_q_enum requires k <= n, got n={n} k={k}"
        )));
    }
    Ok(enum_weight_rows(n)?.swap_remove(k))
}

/// Weight sums of all words of length `n`, indexed by maximal letter.
pub fn enum_weight_rows(n: usize) -> Result<Vec<QPoly>> {
    combinat::check_guard(GuardKind::SecondKindEnum, n)?;
    let mut rows = vec![vec![0i64; n * n + 1]; n + 1];
    descend(n, 0, 0, 0, &mut rows)?;
    Ok(rows.into_iter().map(QPoly::from_coeffs).collect())
}

/// q,r-variant by enumeration: only words whose first `r` letters are
/// exactly `1, 2, ..., r` are counted.
pub fn stirling2_q_r_enum(n: usize, k: usize, r: usize) -> Result<QPoly> {
    if k > n || n < r || k < r {
        return Ok(QPoly::zero());
    }
    combinat::check_guard(GuardKind::SecondKindEnum, n)?;
    let mut rows = vec![vec![0i64; n * n + 1]; n + 1];
    // The forced prefix consists of first occurrences only, weight 0.
    descend(n, r, r, 0, &mut rows)?;
    Ok(rows.into_iter().map(QPoly::from_coeffs).collect::<Vec<_>>().swap_remove(k))
}

/// Depth-first generation by the allowed-letter rule: at each position the
/// choices are `0`, `+-1 ..= +-M`, and `M+1`, so only valid words are ever
/// built.
fn descend(n: usize, pos: usize, max_abs: usize, exp: usize, rows: &mut Vec<Vec<i64>>) -> Result<()> {
    if pos == n {
        let cell = &mut rows[max_abs][exp];
        *cell = cell.checked_add(1).ok_or(Error::Overflow { op: "enum_weight_rows" })?;
        return Ok(());
    }
    // Letter 0 contributes nothing.
    descend(n, pos + 1, max_abs, exp, rows)?;
    // Repeated letters +-m for m <= M.
    for m in 1..=max_abs {
        descend(n, pos + 1, max_abs, exp + 2 * m - 1, rows)?;
        descend(n, pos + 1, max_abs, exp + 2 * m, rows)?;
    }
    // New maximum, necessarily positive, contributes nothing.
    descend(n, pos + 1, max_abs + 1, exp, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::signed_partitions;

    fn word(letters: &[i32]) -> RgWord2 {
        RgWord2::new(letters.to_vec()).unwrap()
    }

    #[test]
    fn validation_accepts_paper_words() {
        assert!(validate(&[1, 0, 2, -2, 0, 2, -1]).is_ok());
        assert!(validate(&[0, 0, 0]).is_ok());
        assert!(validate(&[]).is_ok());
    }

    #[test]
    fn validation_names_condition_and_position() {
        assert_eq!(
            validate(&[1, 0, -2, 2, 0, -2, -1]),
            Err(Violation { condition: Condition::NewMaxSign, position: 3 })
        );
        assert_eq!(
            validate(&[2, 1]),
            Err(Violation { condition: Condition::First, position: 1 })
        );
        assert_eq!(
            validate(&[-1]),
            Err(Violation { condition: Condition::First, position: 1 })
        );
        assert_eq!(
            validate(&[1, 3]),
            Err(Violation { condition: Condition::Growth, position: 2 })
        );
    }

    #[test]
    fn bijection_matches_paper_example() {
        let p = SignedSetPartition::new(vec![2, 5], vec![vec![1, -7], vec![3, -4, 6]]).unwrap();
        let w = partition_to_rg2(&p);
        assert_eq!(w.letters(), &[1, 0, 2, -2, 0, 2, -1]);
        assert_eq!(rg2_to_partition(&w), p);
    }

    #[test]
    fn zero_block_only_partition_maps_to_zero_word() {
        let p = SignedSetPartition::new(vec![1, 2, 3], vec![]).unwrap();
        assert_eq!(partition_to_rg2(&p).letters(), &[0, 0, 0]);
    }

    #[test]
    fn bijection_round_trips_exhaustively() {
        for n in 0..=4 {
            for p in signed_partitions(n).unwrap() {
                let w = partition_to_rg2(&p);
                assert_eq!(w.max_letter(), p.num_blocks());
                assert_eq!(rg2_to_partition(&w), p, "round trip failed for {p}");
            }
        }
    }

    #[test]
    fn weight_exponent_examples() {
        assert_eq!(word(&[1, 0, -1, 2, -2, 2]).weight_exponent(), 8);
        assert_eq!(word(&[0, 0, 0, 0]).weight_exponent(), 0);
        assert_eq!(word(&[1, 1]).weight_exponent(), 2);
        assert_eq!(word(&[1, -1]).weight_exponent(), 1);
    }

    #[test]
    fn recursion_boundaries_are_one() {
        for n in 0..=6 {
            assert_eq!(stirling2_q(n, 0).unwrap(), QPoly::one());
            assert_eq!(stirling2_q(n, n).unwrap(), QPoly::one());
        }
    }

    #[test]
    fn small_cell_matches_word_list() {
        // All four words of length 2 with maximal letter 1:
        // (0,1), (1,0), (1,1), (1,-1) with exponents 0, 0, 2, 1.
        let words: [&[i32]; 4] = [&[0, 1], &[1, 0], &[1, 1], &[1, -1]];
        let mut coeffs = vec![0i64; 3];
        for w in words {
            coeffs[word(w).weight_exponent() as usize] += 1;
        }
        let brute = QPoly::from_coeffs(coeffs);
        assert_eq!(brute.coeffs(), &[2, 1, 1]);
        assert_eq!(stirling2_q(2, 1).unwrap(), brute);
        assert_eq!(stirling2_q_enum(2, 1).unwrap(), brute);
    }

    #[test]
    fn enum_examples() {
        assert_eq!(stirling2_q_enum(1, 1).unwrap(), QPoly::one());
        // Recursion oracle computed by hand: 1 + [3]_q * (2+q+q^2).
        let oracle = QPoly::one()
            .add(&QPoly::q_bracket(3).mul(&QPoly::from_coeffs(vec![2, 1, 1])).unwrap())
            .unwrap();
        assert_eq!(oracle.coeffs(), &[3, 3, 4, 2, 1]);
        assert_eq!(stirling2_q_enum(3, 1).unwrap(), oracle);
    }

    #[test]
    fn dual_routes_agree() {
        for n in 0..=5 {
            let rows = enum_weight_rows(n).unwrap();
            for k in 0..=n {
                assert_eq!(rows[k], stirling2_q(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn r_variant_boundaries_and_consistency() {
        for r in 0..=4 {
            assert_eq!(stirling2_q_r(r, r, r).unwrap(), QPoly::one());
        }
        for n in 0..=5 {
            for k in 0..=n {
                assert_eq!(stirling2_q_r(n, k, 0).unwrap(), stirling2_q(n, k).unwrap());
            }
        }
        assert_eq!(stirling2_q_r(2, 3, 1).unwrap(), QPoly::zero());
        assert_eq!(stirling2_q_r(3, 1, 2).unwrap(), QPoly::zero());
        assert_eq!(stirling2_q_r(1, 1, 2).unwrap(), QPoly::zero());
    }

    #[test]
    fn r_variant_routes_agree() {
        for n in 0..=5 {
            for r in 0..=n {
                for k in 0..=n {
                    assert_eq!(
                        stirling2_q_r_enum(n, k, r).unwrap(),
                        stirling2_q_r(n, k, r).unwrap(),
                        "n={n} k={k} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn q1_values_satisfy_integer_recursion() {
        // S^B(n,k) = S^B(n-1,k-1) + (2k+1) S^B(n-1,k) at q=1.
        let table = stirling2_q_table(6).unwrap();
        for n in 1..=6usize {
            for k in 1..n {
                let v = table[n][k].eval_at_one().unwrap();
                let up = table[n - 1][k - 1].eval_at_one().unwrap();
                let stay = table[n - 1][k].eval_at_one().unwrap();
                assert_eq!(v, up + (2 * k as i64 + 1) * stay);
            }
        }
        let row2: Vec<i64> =
            table[2].iter().map(|p| p.eval_at_one().unwrap()).collect();
        assert_eq!(row2, vec![1, 4, 1]);
    }

    #[test]
    fn word_parse_and_render() {
        let w: RgWord2 = "1,0,-1,2,-2,2".parse().unwrap();
        assert_eq!(w.to_string(), "1,0,-1,2,-2,2");
        assert!(matches!(
            "1,0,-2".parse::<RgWord2>(),
            Err(Error::InvalidWord(Violation { condition: Condition::NewMaxSign, position: 3 }))
        ));
        assert!("1,x".parse::<RgWord2>().is_err());
        assert_eq!("".parse::<RgWord2>().unwrap().n(), 0);
    }
}
