//! First-kind restricted-growth words for types A and B.
//!
//! A type-A word is a sequence of pairs `(i_t, j_t)` recording, for each
//! `t`, the cycle (in standard form) holding `t` and the location of `t`
//! inside it. The type-B alphabet carries signs: the `i`-component is
//! negated for every element of a non-split cycle, and the `j`-component
//! takes the sign of the element at that location. The statistics
//! defined on these words (`inv_A`, and `inv_B`/`neg`/`nl`/`finv`/`sfinv`
//! for type B) generate the first-kind q-Stirling numbers; their
//! recursions and product formulas are implemented side by side with the
//! brute-force enumeration so each route can be verified against the
//! other.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::combinat::{
    self, Cycle, CycleDecomposition, CycleKind, PlainPermutation, SignedPermutation,
};
use crate::qpoly::{expand_linear_factors, QPoly, TPoly};
use crate::{Condition, Error, Result, Violation};

/// Restricted-growth word of type A of the first kind: pairs of positive
/// cycle index and location.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RgWordA1 {
    pairs: Vec<(u32, u32)>,
}

impl RgWordA1 {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        let n = pairs.len() as u32;
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i == 0 || j == 0) {
            return Err(Error::Domain(format!("pair ({i},{j}) has a zero component")));
        }
        validate_a(&pairs).map_err(Error::InvalidWord)?;
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i > n || j > n) {
            return Err(Error::Domain(format!(
                "pair ({i},{j}) lies outside the alphabet for n={n}"
            )));
        }
        Ok(RgWordA1 { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    /// Largest cycle index; the number of cycles of the permutation.
    pub fn max_cycle_index(&self) -> usize {
        self.pairs.iter().map(|&(i, _)| i as usize).max().unwrap_or(0)
    }
}

impl fmt::Display for RgWordA1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(i, j) in &self.pairs {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

/// Restricted-growth word of type B of the first kind: pairs of nonzero
/// signed cycle index and signed location.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RgWordB1 {
    pairs: Vec<(i32, i32)>,
}

impl RgWordB1 {
    pub fn new(pairs: Vec<(i32, i32)>) -> Result<Self> {
        let n = pairs.len() as i64;
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i == 0 || j == 0) {
            return Err(Error::Domain(format!("pair ({i},{j}) has a zero component")));
        }
        validate_b(&pairs).map_err(Error::InvalidWord)?;
        if let Some(&(i, j)) = pairs
            .iter()
            .find(|&&(i, j)| i64::from(i).abs() > n || i64::from(j).abs() > n)
        {
            return Err(Error::Domain(format!(
                "pair ({i},{j}) lies outside the alphabet for n={n}"
            )));
        }
        Ok(RgWordB1 { pairs })
    }

    pub fn pairs(&self) -> &[(i32, i32)] {
        &self.pairs
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    /// Length of the longest prefix of the form `(-1,1)(-2,1)...(-r,1)`.
    pub fn forced_prefix_len(&self) -> usize {
        self.pairs
            .iter()
            .enumerate()
            .take_while(|&(t, &(i, j))| i == -(t as i32 + 1) && j == 1)
            .count()
    }
}

impl fmt::Display for RgWordB1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(i, j) in &self.pairs {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

impl FromStr for RgWordB1 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut pairs = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
            let (inner, tail) = body
                .split_once(')')
                .ok_or_else(|| Error::Parse(format!("missing ')' in {rest:?}")))?;
            let (i, j) = inner
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected (i,j), got ({inner})")))?;
            let i = i
                .trim()
                .parse::<i32>()
                .map_err(|e| Error::Parse(format!("bad pair component {i:?}: {e}")))?;
            let j = j
                .trim()
                .parse::<i32>()
                .map_err(|e| Error::Parse(format!("bad pair component {j:?}: {e}")))?;
            pairs.push((i, j));
            rest = tail;
        }
        RgWordB1::new(pairs)
    }
}

/// Checks the type-A conditions: the word opens with `(1,1)`, cycle
/// indices grow by at most one, a new index sits at location 1, and a
/// reused index requires the preceding location to occur somewhere in
/// the word.
pub fn validate_a(pairs: &[(u32, u32)]) -> std::result::Result<(), Violation> {
    let mut max_i = 0u32;
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        let position = idx + 1;
        if position == 1 {
            if (i, j) != (1, 1) {
                return Err(Violation { condition: Condition::First, position });
            }
            max_i = 1;
            continue;
        }
        if i > max_i + 1 {
            return Err(Violation { condition: Condition::Growth, position });
        }
        if i == max_i + 1 {
            if j != 1 {
                return Err(Violation { condition: Condition::OpenerLoc, position });
            }
            max_i = i;
        } else if j == 1 || !pairs.contains(&(i, j - 1)) {
            return Err(Violation { condition: Condition::Predecessor, position });
        }
    }
    Ok(())
}

/// Checks the type-B conditions. The predecessor rule compares locations
/// by absolute value: a pair `(i, j)` with reused `|i|` requires some
/// pair `(i, +-( |j|-1 ))` in the word, with the same signed `i`.
pub fn validate_b(pairs: &[(i32, i32)]) -> std::result::Result<(), Violation> {
    let mut max_abs_i = 0i32;
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        let position = idx + 1;
        if position == 1 {
            if (i != 1 && i != -1) || j != 1 {
                return Err(Violation { condition: Condition::First, position });
            }
            max_abs_i = 1;
            continue;
        }
        let a = i.abs();
        if a > max_abs_i + 1 {
            return Err(Violation { condition: Condition::Growth, position });
        }
        if a == max_abs_i + 1 {
            if j != 1 {
                return Err(Violation { condition: Condition::OpenerLoc, position });
            }
            max_abs_i = a;
        } else {
            let prev_loc = j.abs() - 1;
            if prev_loc == 0
                || !(pairs.contains(&(i, prev_loc)) || pairs.contains(&(i, -prev_loc)))
            {
                return Err(Violation { condition: Condition::Predecessor, position });
            }
        }
    }
    Ok(())
}

/// Encodes a permutation through its standard cycle form: element `t` maps
/// to (cycle index, location of `t` in that cycle).
pub fn phi_a(p: &PlainPermutation) -> RgWordA1 {
    let mut pairs = vec![(0u32, 0u32); p.n()];
    for (t, cycle) in p.cycles().iter().enumerate() {
        for (loc, &v) in cycle.iter().enumerate() {
            pairs[v as usize - 1] = (t as u32 + 1, loc as u32 + 1);
        }
    }
    RgWordA1 { pairs }
}

/// Rebuilds the permutation: each pair `(i, j)` places its element at
/// location `j` of cycle `i`. Words whose locations do not tile
/// `1..=len` for every cycle are rejected.
pub fn phi_a_inverse(w: &RgWordA1) -> Result<PlainPermutation> {
    let k = w.max_cycle_index();
    let mut cycles: Vec<Vec<(u32, u32)>> = vec![Vec::new(); k];
    for (idx, &(i, j)) in w.pairs.iter().enumerate() {
        cycles[i as usize - 1].push((j, idx as u32 + 1));
    }
    let mut window = vec![0u32; w.n()];
    for (c, members) in cycles.iter_mut().enumerate() {
        members.sort_unstable();
        for (expected, &(j, _)) in members.iter().enumerate() {
            if j as usize != expected + 1 {
                return Err(Error::Malformed(format!(
                    "word: cycle {} locations do not form 1..={}",
                    c + 1,
                    members.len()
                )));
            }
        }
        for m in 0..members.len() {
            let from = members[m].1;
            let to = members[(m + 1) % members.len()].1;
            window[from as usize - 1] = to;
        }
    }
    PlainPermutation::new(window)
}

/// Number of index pairs `s < t` whose letters are strictly decreasing in
/// lexicographic order.
pub fn inv_a(w: &RgWordA1) -> u64 {
    let mut count = 0u64;
    for s in 0..w.pairs.len() {
        for t in s + 1..w.pairs.len() {
            if w.pairs[t] < w.pairs[s] {
                count += 1;
            }
        }
    }
    count
}

/// Encodes a signed permutation through its standard cycle form. All
/// pairs of a non-split cycle carry a negative cycle index; the location
/// component takes the sign of the element at that spot.
pub fn phi_b(p: &SignedPermutation) -> RgWordB1 {
    let d = combinat::cycle_decompose(p);
    let mut pairs = vec![(0i32, 0i32); p.n()];
    for (t, cycle) in d.cycles().iter().enumerate() {
        let index = match cycle.kind {
            CycleKind::Split => t as i32 + 1,
            CycleKind::NonSplit => -(t as i32 + 1),
        };
        for (loc, &e) in cycle.elements.iter().enumerate() {
            let location = if e > 0 { loc as i32 + 1 } else { -(loc as i32 + 1) };
            pairs[e.unsigned_abs() as usize - 1] = (index, location);
        }
    }
    RgWordB1 { pairs }
}

/// Rebuilds the signed permutation from a word. Fails when the word is
/// not the image of any signed permutation: mixed index signs within one
/// cycle, location multisets that do not tile `1..=len`, or an opener
/// whose location sign is negative.
pub fn phi_b_inverse(w: &RgWordB1) -> Result<SignedPermutation> {
    let k = w.pairs.iter().map(|&(i, _)| i.unsigned_abs() as usize).max().unwrap_or(0);
    let mut groups: Vec<Vec<(i32, i32)>> = vec![Vec::new(); k];
    let mut negative: Vec<Option<bool>> = vec![None; k];
    for (idx, &(i, j)) in w.pairs.iter().enumerate() {
        let c = i.unsigned_abs() as usize - 1;
        match negative[c] {
            None => negative[c] = Some(i < 0),
            Some(neg) if neg != (i < 0) => {
                return Err(Error::Malformed(format!(
                    "word: cycle {} mixes split and non-split index signs",
                    c + 1
                )));
            }
            _ => {}
        }
        groups[c].push((j, idx as i32 + 1));
    }
    let mut cycles = Vec::with_capacity(k);
    for (c, mut members) in groups.into_iter().enumerate() {
        members.sort_unstable_by_key(|&(j, _)| j.abs());
        let mut elements = Vec::with_capacity(members.len());
        for (expected, &(j, value)) in members.iter().enumerate() {
            if j.unsigned_abs() as usize != expected + 1 {
                return Err(Error::Malformed(format!(
                    "word: cycle {} locations do not form 1..={}",
                    c + 1,
                    members.len()
                )));
            }
            if expected == 0 && j != 1 {
                return Err(Error::Malformed(format!(
                    "word: cycle {} opener must have location 1",
                    c + 1
                )));
            }
            elements.push(if j > 0 { value } else { -value });
        }
        let kind = if negative[c] == Some(true) { CycleKind::NonSplit } else { CycleKind::Split };
        cycles.push(Cycle { elements, kind });
    }
    CycleDecomposition::new(cycles)?.to_permutation()
}

/// The statistics of a first-kind type-B word, as rendered by the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FirstKindStats {
    #[serde(rename = "inv_B")]
    pub inv_b: u64,
    pub neg: u64,
    pub nl: u64,
    pub finv: u64,
    pub sfinv: u64,
    /// Number of non-split cycle openings: pairs with location 1 and
    /// negative cycle index.
    pub k: u64,
}

/// Computes all statistics in one pass. Inversions compare the pairs
/// `(|i|, |j|)` by strict tuple order; distinct letters of one word never
/// share that tuple.
pub fn first_kind_stats(w: &RgWordB1) -> FirstKindStats {
    let abs: Vec<(i32, i32)> = w.pairs.iter().map(|&(i, j)| (i.abs(), j.abs())).collect();
    let mut inv_b = 0u64;
    for s in 0..abs.len() {
        for t in s + 1..abs.len() {
            if abs[t] < abs[s] {
                inv_b += 1;
            }
        }
    }
    let mut neg = 0u64;
    let mut nl = 0u64;
    let mut k = 0u64;
    for &(i, j) in &w.pairs {
        if j < 0 {
            neg += 1;
        }
        if j != 1 {
            nl += 1;
        }
        if j == 1 && i < 0 {
            k += 1;
        }
    }
    let finv = 2 * inv_b + neg;
    FirstKindStats { inv_b, neg, nl, finv, sfinv: finv + nl, k }
}

/// Type-A q-Stirling number of the first kind by the recursion with
/// coefficient `[n-1]_q`.
pub fn stirling_a_q(n: usize, k: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::Domain(format!("stirling_a_q requires k <= n, got n={n} k={k}")));
    }
    Ok(stirling_a_q_r_table(n, 0)?.swap_remove(n).swap_remove(k))
}

/// q,r-variant of the type-A number; zero outside the r-domain.
pub fn stirling_a_q_r(n: usize, k: usize, r: usize) -> Result<QPoly> {
    if k > n || n < r || k < r {
        return Ok(QPoly::zero());
    }
    Ok(stirling_a_q_r_table(n, r)?.swap_remove(n).swap_remove(k))
}

/// Triangle of type-A values for `n = 0..=max_n`; `r = 0` is the plain
/// q-analogue.
pub fn stirling_a_q_r_table(max_n: usize, r: usize) -> Result<Vec<Vec<QPoly>>> {
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
        let bracket = QPoly::q_bracket(n - 1);
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let up = if k >= 1 { prev.get(k - 1).cloned() } else { None };
            let stay = match prev.get(k) {
                Some(p) if !p.is_zero() => p.mul(&bracket)?,
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

/// Generating function of split-cycle-only signed permutations:
/// `sum_l s_{q^2}^A(n,l) (1+q)^(n-l)`. This is the `k = 0` boundary of
/// the first-kind type-B recursion.
pub fn split_only_boundary(n: usize) -> Result<QPoly> {
    let a_rows = stirling_a_q_r_table(n, 0)?;
    split_only_boundary_from(&a_rows, n)
}

fn split_only_boundary_from(a_rows: &[Vec<QPoly>], n: usize) -> Result<QPoly> {
    if n == 0 {
        return Ok(QPoly::one());
    }
    let one_plus_q = QPoly::from_coeffs(vec![1, 1]);
    let mut total = QPoly::zero();
    for (l, cell) in a_rows[n].iter().enumerate().skip(1) {
        let term = cell.substitute_q_power(2)?.mul(&one_plus_q.pow((n - l) as u32)?)?;
        total = total.add(&term)?;
    }
    Ok(total)
}

/// First-kind type-B q-Stirling number by the recursion with coefficient
/// `1 + [2n-2]_q` and the split-only boundary at `k = 0`.
pub fn stirling_b1_q(n: usize, k: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::Domain(format!("stirling_b1_q requires k <= n, got n={n} k={k}")));
    }
    Ok(stirling_b1_q_table(n)?.swap_remove(n).swap_remove(k))
}

/// Triangle of first-kind type-B values for `n = 0..=max_n`.
pub fn stirling_b1_q_table(max_n: usize) -> Result<Vec<Vec<QPoly>>> {
    let a_rows = stirling_a_q_r_table(max_n, 0)?;
    let mut rows: Vec<Vec<QPoly>> = vec![vec![QPoly::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let coefficient = QPoly::one().add(&QPoly::q_bracket(2 * n - 2))?;
        let mut row = Vec::with_capacity(n + 1);
        row.push(split_only_boundary_from(&a_rows, n)?);
        for k in 1..=n {
            let up = prev[k - 1].clone();
            let stay = match prev.get(k) {
                Some(p) => p.mul(&coefficient)?,
                None => QPoly::zero(),
            };
            row.push(up.add(&stay)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// q,r-variant of the first-kind type-B number: elements `1..=r` open
/// distinct non-split cycles. Zero when `k < r` or `n < r`.
pub fn stirling_b1_q_r(n: usize, k: usize, r: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::Domain(format!(
            "stirling_b1_q_r requires k <= n, got n={n} k={k}"
        )));
    }
    if r == 0 {
        return stirling_b1_q(n, k);
    }
    if n < r || k < r {
        return Ok(QPoly::zero());
    }
    Ok(stirling_b1_q_r_table(n, r)?.swap_remove(n).swap_remove(k))
}

/// Triangle of the q,r-variant for `r >= 1`.
pub fn stirling_b1_q_r_table(max_n: usize, r: usize) -> Result<Vec<Vec<QPoly>>> {
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
        let coefficient = QPoly::one().add(&QPoly::q_bracket(2 * n - 2))?;
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let up = if k >= 1 { prev.get(k - 1).cloned() } else { None };
            let stay = match prev.get(k) {
                Some(p) if !p.is_zero() => p.mul(&coefficient)?,
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

/// Shifted first-kind type-B number by the recursion with coefficient
/// `[2n-1]_q` and boundary `[1]_q [3]_q ... [2n-1]_q` at `k = 0`.
pub fn sstirling_b1_q(n: usize, k: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::Domain(format!(
            "sstirling_b1_q requires k <= n, got n={n} k={k}"
        )));
    }
    Ok(sstirling_b1_q_table(n)?.swap_remove(n).swap_remove(k))
}

/// Triangle of shifted first-kind values for `n = 0..=max_n`.
pub fn sstirling_b1_q_table(max_n: usize) -> Result<Vec<Vec<QPoly>>> {
    let mut rows: Vec<Vec<QPoly>> = vec![vec![QPoly::one()]];
    let mut odd_product = QPoly::one();
    for n in 1..=max_n {
        odd_product = odd_product.mul(&QPoly::q_bracket(2 * n - 1))?;
        let prev = &rows[n - 1];
        let bracket = QPoly::q_bracket(2 * n - 1);
        let mut row = Vec::with_capacity(n + 1);
        row.push(odd_product.clone());
        for k in 1..=n {
            let up = prev[k - 1].clone();
            let stay = match prev.get(k) {
                Some(p) => p.mul(&bracket)?,
                None => QPoly::zero(),
            };
            row.push(up.add(&stay)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Distribution rows gathered in one sweep of `S_n`: `inv[k]` sums
/// `q^inv_A` over words with `k` cycles, and `inv_by_r[r][k]` restricts
/// to words opening with `(1,1)(2,1)...(r,1)`.
pub struct TypeARows {
    pub inv: Vec<QPoly>,
    pub inv_by_r: Vec<Vec<QPoly>>,
}

pub fn type_a_rows(n: usize) -> Result<TypeARows> {
    type_a_rows_shard(n, 0, 1)
}

/// Positional shard: only every `shards`-th permutation starting at
/// `shard` is visited, so partial rows from disjoint shards sum to the
/// full rows.
pub fn type_a_rows_shard(n: usize, shard: usize, shards: usize) -> Result<TypeARows> {
    let mut acc = ExpAccum::new(n);
    let mut acc_by_r: Vec<ExpAccum> = (0..=n).map(|_| ExpAccum::new(n)).collect();
    for p in shard_iter(combinat::plain_permutations(n)?, shard, shards) {
        let w = phi_a(&p);
        let k = w.max_cycle_index();
        let exp = inv_a(&w);
        acc.bump(k, exp)?;
        let r_max = w
            .pairs
            .iter()
            .enumerate()
            .take_while(|&(t, &(i, j))| i == t as u32 + 1 && j == 1)
            .count();
        for r in 0..=r_max {
            acc_by_r[r].bump(k, exp)?;
        }
    }
    Ok(TypeARows {
        inv: acc.into_polys(),
        inv_by_r: acc_by_r.into_iter().map(ExpAccum::into_polys).collect(),
    })
}

/// Distribution rows gathered in one sweep of `B_n`: `finv[k]` and
/// `sfinv[k]` sum the respective weights over words with `k` non-split
/// cycle openings; `finv_by_r[r][k]` restricts to words opening with
/// `(-1,1)...(-r,1)`.
pub struct FirstKindRows {
    pub finv: Vec<QPoly>,
    pub sfinv: Vec<QPoly>,
    pub finv_by_r: Vec<Vec<QPoly>>,
}

impl FirstKindRows {
    /// Sums two shards cell by cell.
    pub fn merge(self, other: FirstKindRows) -> Result<FirstKindRows> {
        Ok(FirstKindRows {
            finv: merge_rows(self.finv, &other.finv)?,
            sfinv: merge_rows(self.sfinv, &other.sfinv)?,
            finv_by_r: self
                .finv_by_r
                .into_iter()
                .zip(&other.finv_by_r)
                .map(|(a, b)| merge_rows(a, b))
                .collect::<Result<_>>()?,
        })
    }
}

fn merge_rows(a: Vec<QPoly>, b: &[QPoly]) -> Result<Vec<QPoly>> {
    a.into_iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn first_kind_rows(n: usize) -> Result<FirstKindRows> {
    first_kind_rows_shard(n, 0, 1)
}

pub fn first_kind_rows_shard(n: usize, shard: usize, shards: usize) -> Result<FirstKindRows> {
    let mut finv = ExpAccum::new(n);
    let mut sfinv = ExpAccum::new(n);
    let mut finv_by_r: Vec<ExpAccum> = (0..=n).map(|_| ExpAccum::new(n)).collect();
    for p in shard_iter(combinat::signed_permutations_first_kind(n)?, shard, shards) {
        let w = phi_b(&p);
        let stats = first_kind_stats(&w);
        let k = stats.k as usize;
        finv.bump(k, stats.finv)?;
        sfinv.bump(k, stats.sfinv)?;
        for r in 0..=w.forced_prefix_len() {
            finv_by_r[r].bump(k, stats.finv)?;
        }
    }
    Ok(FirstKindRows {
        finv: finv.into_polys(),
        sfinv: sfinv.into_polys(),
        finv_by_r: finv_by_r.into_iter().map(ExpAccum::into_polys).collect(),
    })
}

fn shard_iter<I: Iterator>(iter: I, shard: usize, shards: usize) -> impl Iterator<Item = I::Item> {
    iter.enumerate()
        .filter(move |(idx, _)| idx % shards.max(1) == shard)
        .map(|(_, item)| item)
}

/// Exponent histogram per `k`, converted to polynomials at the end.
struct ExpAccum {
    rows: Vec<Vec<i64>>,
}

impl ExpAccum {
    fn new(n: usize) -> Self {
        ExpAccum { rows: vec![vec![0i64; n * n + n + 1]; n + 1] }
    }

    fn bump(&mut self, k: usize, exp: u64) -> Result<()> {
        let cell = &mut self.rows[k][exp as usize];
        *cell = cell.checked_add(1).ok_or(Error::Overflow { op: "enumeration rows" })?;
        Ok(())
    }

    fn into_polys(self) -> Vec<QPoly> {
        self.rows.into_iter().map(QPoly::from_coeffs).collect()
    }
}

/// Type-A number by brute force: sum of `q^inv_A` over images of `S_n`.
pub fn stirling_a_q_enum(n: usize, k: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::Domain(format!(
            "stirling_a_q_enum requires k <= n, got n={n} k={k}"
        )));
    }
    Ok(type_a_rows(n)?.inv.swap_remove(k))
}

pub fn stirling_a_q_r_enum(n: usize, k: usize, r: usize) -> Result<QPoly> {
    if k > n || n < r || k < r {
        return Ok(QPoly::zero());
    }
    Ok(type_a_rows(n)?.inv_by_r.swap_remove(r).swap_remove(k))
}

/// First-kind type-B number by brute force: sum of `q^finv` over images
/// of `B_n` with `k` non-split cycles.
pub fn stirling_b1_q_enum(n: usize, k: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::Domain(format!(
            "stirling_b1_q_enum requires k <= n, got n={n} k={k}"
        )));
    }
    Ok(first_kind_rows(n)?.finv.swap_remove(k))
}

pub fn stirling_b1_q_r_enum(n: usize, k: usize, r: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::Domain(format!(
            "stirling_b1_q_r_enum requires k <= n, got n={n} k={k}"
        )));
    }
    if n < r || k < r {
        return Ok(QPoly::zero());
    }
    Ok(first_kind_rows(n)?.finv_by_r.swap_remove(r).swap_remove(k))
}

/// Shifted number by brute force: sum of `q^sfinv`.
pub fn sstirling_b1_q_enum(n: usize, k: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::Domain(format!(
            "sstirling_b1_q_enum requires k <= n, got n={n} k={k}"
        )));
    }
    Ok(first_kind_rows(n)?.sfinv.swap_remove(k))
}

/// `(t+1)(t+1+[2]_q)(t+1+[4]_q)...(t+1+[2n-2]_q)`; coefficient of `t^k`
/// is the first-kind type-B number at `(n, k)`.
pub fn product_first_kind(n: usize) -> Result<TPoly> {
    let factors = one_plus_even_brackets(0, n)?;
    expand_linear_factors(&factors)
}

/// `(t+1+[2r]_q)...(t+1+[2n-2]_q)`; coefficient of `t^k` is the
/// q,r-variant at `(n, r+k, r)`.
pub fn product_first_kind_qr(n: usize, r: usize) -> Result<TPoly> {
    if r > n {
        return Err(Error::Domain(format!(
            "product_first_kind_qr requires r <= n, got n={n} r={r}"
        )));
    }
    let factors = one_plus_even_brackets(r, n)?;
    expand_linear_factors(&factors)
}

fn one_plus_even_brackets(from: usize, to: usize) -> Result<Vec<QPoly>> {
    (from..to)
        .map(|i| QPoly::one().add(&QPoly::q_bracket(2 * i)))
        .collect()
}

/// `(t+1)(t+[3]_q)(t+[5]_q)...(t+[2n-1]_q)`; coefficient of `t^k` is the
/// shifted number at `(n, k)`.
pub fn product_shifted(n: usize) -> Result<TPoly> {
    let factors: Vec<QPoly> = (0..n).map(|i| QPoly::q_bracket(2 * i + 1)).collect();
    expand_linear_factors(&factors)
}
