//! Full-presentation standard form of a signed permutation and the
//! inversion statistic on its 2n-letter word.
//!
//! Every cycle unit is written out in full: a split pair contributes two
//! pieces (the one containing `-m` first, each ending in its `+-m`), and
//! a non-split cycle contributes one piece of doubled length ending in
//! `-m`. Removing the parentheses yields a word `w` of length `2n`; its
//! inversions are the index pairs `i < j` with `w_i > |w_j|`. Taking only
//! the first half of each unit yields the shortened form `sigma`, over
//! which the inversion count decomposes as `2(p_A + p_B) + (p_C + p_D)`.

use std::fmt;

use serde::Serialize;

use crate::combinat::{self, CycleKind, SignedPermutation};
use crate::{Error, Result};

/// One unit of the standard form. For split units the two halves are the
/// two written pieces (negations of each other); for non-split units they
/// are the two halves of the single written piece, the second being the
/// negation of the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsUnit {
    pub first_half: Vec<i32>,
    pub second_half: Vec<i32>,
    pub kind: CycleKind,
}

/// Standard form as an ordered list of cycle units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsForm {
    units: Vec<SsUnit>,
}

impl SsForm {
    pub fn units(&self) -> &[SsUnit] {
        &self.units
    }

    pub fn n(&self) -> usize {
        self.units.iter().map(|u| u.first_half.len()).sum()
    }

    /// The 2n-letter word obtained by removing the parentheses.
    pub fn word(&self) -> Vec<i32> {
        let mut w = Vec::with_capacity(2 * self.n());
        for unit in &self.units {
            w.extend_from_slice(&unit.first_half);
            w.extend_from_slice(&unit.second_half);
        }
        w
    }

    /// The shortened form: the first half of each unit, with the unit
    /// index recorded for every position.
    pub fn shortened_with_units(&self) -> Vec<(i32, usize)> {
        let mut sigma = Vec::with_capacity(self.n());
        for (u, unit) in self.units.iter().enumerate() {
            sigma.extend(unit.first_half.iter().map(|&v| (v, u)));
        }
        sigma
    }

    /// Rebuilds the permutation the form was derived from.
    pub fn to_permutation(&self) -> Result<SignedPermutation> {
        let n = self.n();
        let mut window = vec![0i32; n];
        let mut taken = vec![false; n];
        let mut set = |a: i32, b: i32| -> Result<()> {
            let idx = a.unsigned_abs() as usize;
            if idx == 0 || idx > n {
                return Err(Error::Malformed(format!("element {a} out of range 1..={n}")));
            }
            if a > 0 {
                window[idx - 1] = b;
            } else {
                window[idx - 1] = -b;
            }
            Ok(())
        };
        let mut claim = |piece: &[i32]| -> Result<()> {
            for &v in piece {
                let idx = v.unsigned_abs() as usize;
                if idx == 0 || idx > n || taken[idx - 1] {
                    return Err(Error::Malformed(format!(
                        "absolute value {} repeated or out of range",
                        v.abs()
                    )));
                }
                taken[idx - 1] = true;
            }
            Ok(())
        };
        for unit in &self.units {
            claim(&unit.first_half)?;
            match unit.kind {
                CycleKind::Split => {
                    let piece = &unit.first_half;
                    for i in 0..piece.len() {
                        set(piece[i], piece[(i + 1) % piece.len()])?;
                    }
                }
                CycleKind::NonSplit => {
                    let mut full = unit.first_half.clone();
                    full.extend_from_slice(&unit.second_half);
                    for i in 0..full.len() {
                        set(full[i], full[(i + 1) % full.len()])?;
                    }
                }
            }
        }
        SignedPermutation::new(window)
    }
}

impl fmt::Display for SsForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let piece = |f: &mut fmt::Formatter<'_>, p: &[i32]| -> fmt::Result {
            let parts: Vec<String> = p.iter().map(i32::to_string).collect();
            write!(f, "({})", parts.join(","))
        };
        for unit in &self.units {
            match unit.kind {
                CycleKind::Split => {
                    piece(f, &unit.first_half)?;
                    piece(f, &unit.second_half)?;
                }
                CycleKind::NonSplit => {
                    let mut full = unit.first_half.clone();
                    full.extend_from_slice(&unit.second_half);
                    piece(f, &full)?;
                }
            }
        }
        Ok(())
    }
}

/// Standard form of a signed permutation: units ordered by increasing
/// minimal absolute value, each piece ending in `+-m`, the `-m` piece
/// first within a split pair, non-split pieces ending in `-m`.
pub fn ss_standard_form(p: &SignedPermutation) -> SsForm {
    let mut units = Vec::new();
    for cycle in combinat::cycle_decompose(p).cycles() {
        let elems = &cycle.elements;
        // elems = (m, e_2, ..., e_l) with m positive minimal.
        let tail_negated: Vec<i32> = elems[1..].iter().map(|&e| -e).collect();
        match cycle.kind {
            CycleKind::Split => {
                // The piece containing -m comes first and ends in -m.
                let mut first = tail_negated;
                first.push(-elems[0]);
                let second: Vec<i32> = first.iter().map(|&e| -e).collect();
                units.push(SsUnit { first_half: first, second_half: second, kind: CycleKind::Split });
            }
            CycleKind::NonSplit => {
                // One doubled piece ending in -m; its first half ends in +m.
                let mut first = tail_negated;
                first.push(elems[0]);
                let second: Vec<i32> = first.iter().map(|&e| -e).collect();
                units.push(SsUnit {
                    first_half: first,
                    second_half: second,
                    kind: CycleKind::NonSplit,
                });
            }
        }
    }
    SsForm { units }
}

/// The 2n-letter word of the standard form.
pub fn ss_word(p: &SignedPermutation) -> Vec<i32> {
    ss_standard_form(p).word()
}

/// Number of pairs `i < j` with `w_i > |w_j|` over the 2n-letter word.
pub fn ss_inv(p: &SignedPermutation) -> u64 {
    let w = ss_word(p);
    let mut count = 0u64;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j].abs() {
                count += 1;
            }
        }
    }
    count
}

/// The shortened form `sigma` (first half of each unit, in order).
pub fn shortened_form(p: &SignedPermutation) -> Vec<i32> {
    ss_standard_form(p).shortened_with_units().into_iter().map(|(v, _)| v).collect()
}

/// Counts of the four index-pair classes over the shortened form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FlagParts {
    #[serde(rename = "p_A")]
    pub p_a: u64,
    #[serde(rename = "p_B")]
    pub p_b: u64,
    #[serde(rename = "p_C")]
    pub p_c: u64,
    #[serde(rename = "p_D")]
    pub p_d: u64,
}

impl FlagParts {
    /// The combination that reproduces the word inversion count.
    pub fn flag_total(&self) -> u64 {
        2 * (self.p_a + self.p_b) + self.p_c + self.p_d
    }
}

/// Classifies the index pairs `i < j` of the shortened form: `A` holds
/// abs-descents across different units; `B` and `C` split the abs-descents
/// within a unit by the sign of the earlier entry; `D` holds the signed
/// ascents within a unit whose absolute values also ascend. The four sets
/// are disjoint, and each inversion of the 2n-letter word is witnessed by
/// exactly one of them (twice for `A` and `B`).
pub fn flag_parts(p: &SignedPermutation) -> FlagParts {
    let sigma = ss_standard_form(p).shortened_with_units();
    let mut parts = FlagParts::default();
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            let (vi, ui) = sigma[i];
            let (vj, uj) = sigma[j];
            let same_unit = ui == uj;
            if vi.abs() > vj.abs() {
                if !same_unit {
                    parts.p_a += 1;
                } else if vi > 0 {
                    parts.p_b += 1;
                } else {
                    parts.p_c += 1;
                }
            } else if same_unit && vi < vj {
                parts.p_d += 1;
            }
        }
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::signed_permutations;

    fn example_permutation() -> SignedPermutation {
        // (1,-7)(-1,7)(2,-5,4,-9,-2,5,-4,9)(3,8,-3,-8)(6,-6) as a window.
        "[-7,-5,8,-9,-4,-6,-1,-3,2]".parse().unwrap()
    }

    #[test]
    fn standard_form_matches_paper_presentation() {
        let form = ss_standard_form(&example_permutation());
        assert_eq!(
            form.to_string(),
            "(7,-1)(-7,1)(5,-4,9,2,-5,4,-9,-2)(-8,3,8,-3)(6,-6)"
        );
        assert_eq!(
            form.word(),
            vec![7, -1, -7, 1, 5, -4, 9, 2, -5, 4, -9, -2, -8, 3, 8, -3, 6, -6]
        );
    }

    #[test]
    fn singleton_split_pair_puts_negative_piece_first() {
        // The -m piece precedes the +m piece within a split pair, so the
        // identity of size 1 reads (-1)(1).
        let form = ss_standard_form(&SignedPermutation::identity(1));
        assert_eq!(form.to_string(), "(-1)(1)");
        assert_eq!(form.word(), vec![-1, 1]);
        assert_eq!(ss_inv(&SignedPermutation::identity(1)), 0);
    }

    #[test]
    fn identity_has_no_inversions() {
        for n in 0..=5 {
            assert_eq!(ss_inv(&SignedPermutation::identity(n)), 0, "n={n}");
        }
    }

    #[test]
    fn paper_golden_inversion_count() {
        assert_eq!(ss_inv(&example_permutation()), 34);
    }

    #[test]
    fn shortened_form_matches_paper() {
        assert_eq!(shortened_form(&example_permutation()), vec![7, -1, 5, -4, 9, 2, -8, 3, 6]);
        assert_eq!(shortened_form(&SignedPermutation::identity(2)), vec![-1, -2]);
    }

    #[test]
    fn word_structure_is_exhaustive() {
        for p in signed_permutations(4).unwrap() {
            let w = ss_word(&p);
            assert_eq!(w.len(), 8);
            let mut values: Vec<i32> = w.clone();
            values.sort_unstable();
            assert_eq!(values, vec![-4, -3, -2, -1, 1, 2, 3, 4], "word of {p}");
            let sigma = shortened_form(&p);
            let mut abs: Vec<i32> = sigma.iter().map(|v| v.abs()).collect();
            abs.sort_unstable();
            assert_eq!(abs, vec![1, 2, 3, 4], "shortened form of {p}");
        }
    }

    #[test]
    fn reconstruction_round_trips() {
        for p in signed_permutations(3).unwrap() {
            let form = ss_standard_form(&p);
            assert_eq!(form.to_permutation().unwrap(), p, "round trip failed for {p}");
        }
    }

    #[test]
    fn flag_decomposition_on_example() {
        let p = example_permutation();
        let parts = flag_parts(&p);
        assert_eq!(parts.flag_total(), 34);
    }

    #[test]
    fn flag_decomposition_is_exhaustive_small() {
        for n in 0..=4 {
            for p in signed_permutations(n).unwrap() {
                let parts = flag_parts(&p);
                assert_eq!(parts.flag_total(), ss_inv(&p), "decomposition failed for {p}");
            }
        }
        let id = SignedPermutation::identity(3);
        assert_eq!(flag_parts(&id), FlagParts::default());
    }

    #[test]
    fn inversion_histogram_over_b2() {
        // Computed by the pair-scan oracle over all eight elements.
        let mut values: Vec<u64> =
            signed_permutations(2).unwrap().map(|p| ss_inv(&p)).collect();
        values.sort_unstable();
        assert_eq!(values, vec![0, 0, 0, 0, 1, 1, 2, 2]);
    }

    #[test]
    fn inversion_distribution_matches_shifted_triangle() {
        // Grouped by non-split cycle count, the statistic generates the
        // same triangle as sfinv does, through an entirely different
        // route (2n-letter word scan vs first-kind word statistics).
        use crate::qpoly::QPoly;
        use crate::rg1::sstirling_b1_q;
        for n in 0..=4usize {
            let mut rows = vec![vec![0i64; n * n + n + 1]; n + 1];
            for p in signed_permutations(n).unwrap() {
                let k = crate::combinat::cycle_decompose(&p).nonsplit_count();
                rows[k][ss_inv(&p) as usize] += 1;
            }
            for (k, row) in rows.into_iter().enumerate() {
                assert_eq!(
                    QPoly::from_coeffs(row),
                    sstirling_b1_q(n, k).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn hand_checked_two_cycle() {
        // [2,1] has the split unit (-2,-1)(2,1): w = -2,-1,2,1 with the
        // single inversion (3,4); sigma = -2,-1 puts the pair in C.
        let p = SignedPermutation::new(vec![2, 1]).unwrap();
        assert_eq!(ss_word(&p), vec![-2, -1, 2, 1]);
        assert_eq!(ss_inv(&p), 1);
        let parts = flag_parts(&p);
        assert_eq!((parts.p_a, parts.p_b, parts.p_c, parts.p_d), (0, 0, 1, 0));
    }

    #[test]
    fn flag_parts_json_field_names() {
        let parts = flag_parts(&example_permutation());
        let json = serde_json::to_string(&parts).unwrap();
        assert!(json.starts_with(r#"{"p_A":"#), "{json}");
    }
}
