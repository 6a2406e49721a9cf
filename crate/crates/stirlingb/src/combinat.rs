//! Generation and canonicalization of the three object families: plain
//! permutations, signed permutations with their standard cycle form, and
//! set partitions of type B in standard presentation.
//!
//! Enumeration order is deterministic: windows are produced in
//! lexicographic order over the alphabet `-n < ... < -1 < 1 < ... < n`,
//! and partitions by recursive insertion of the largest element (zero
//! block first, then each existing block with positive and negative sign,
//! then a new block). Streams are restartable and positionally shardable.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Families protected by a size guard. Default bounds keep accidental
/// huge sweeps off desk machines; `STIRLINGB_MAX_OBJECTS` replaces the
/// `n`-based bound with a cap on the estimated object count.
#[derive(Clone, Copy, Debug)]
pub(crate) enum GuardKind {
    SignedPerms,
    PlainPerms,
    Partitions,
    FirstKindEnum,
    SecondKindEnum,
}

impl GuardKind {
    fn default_max_n(self) -> usize {
        match self {
            GuardKind::SignedPerms => 12,
            GuardKind::PlainPerms => 10,
            GuardKind::Partitions => 10,
            GuardKind::FirstKindEnum => 8,
            GuardKind::SecondKindEnum => 10,
        }
    }

    fn what(self) -> &'static str {
        match self {
            GuardKind::SignedPerms => "signed permutations",
            GuardKind::PlainPerms => "plain permutations",
            GuardKind::Partitions => "signed set partitions",
            GuardKind::FirstKindEnum => "first-kind words",
            GuardKind::SecondKindEnum => "second-kind words",
        }
    }

    fn estimated_count(self, n: usize) -> u128 {
        match self {
            GuardKind::SignedPerms | GuardKind::FirstKindEnum => signed_perm_count(n),
            GuardKind::PlainPerms => factorial(n),
            GuardKind::Partitions | GuardKind::SecondKindEnum => type_b_bell(n),
        }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).try_fold(1u128, u128::checked_mul).unwrap_or(u128::MAX)
}

fn signed_perm_count(n: usize) -> u128 {
    if n >= 100 {
        return u128::MAX;
    }
    factorial(n).saturating_mul(1u128.checked_shl(n as u32).unwrap_or(u128::MAX))
}

/// Total number of type-B set partitions of `[n]`, by the saturating
/// integer recursion of the second-kind triangle.
fn type_b_bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = vec![0u128; m + 1];
        for (k, cell) in next.iter_mut().enumerate() {
            let stay = if k < row.len() {
                row[k].saturating_mul(2 * k as u128 + 1)
            } else {
                0
            };
            let up = if k >= 1 { row[k - 1] } else { 0 };
            *cell = stay.saturating_add(up);
        }
        row = next;
    }
    row.iter().fold(0u128, |a, &b| a.saturating_add(b))
}

pub(crate) fn check_guard(kind: GuardKind, n: usize) -> Result<()> {
    let env_limit = std::env::var("STIRLINGB_MAX_OBJECTS")
        .ok()
        .and_then(|v| v.trim().parse::<u128>().ok());
    guard_with(kind, n, env_limit)
}

fn guard_with(kind: GuardKind, n: usize, env_limit: Option<u128>) -> Result<()> {
    let allowed = match env_limit {
        Some(limit) => kind.estimated_count(n) <= limit,
        None => n <= kind.default_max_n(),
    };
    if allowed {
        Ok(())
    } else {
        Err(Error::SizeLimit { what: kind.what(), n, max: kind.default_max_n() })
    }
}

/// Permutation of `{1..n}` in window (one-line) form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlainPermutation {
    window: Vec<u32>,
}

impl PlainPermutation {
    pub fn new(window: Vec<u32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::Malformed(format!(
                    "window {window:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(PlainPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        PlainPermutation { window: (1..=n as u32).collect() }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[u32] {
        &self.window
    }

    /// Image of `i` (1-based).
    pub fn image(&self, i: u32) -> u32 {
        self.window[i as usize - 1]
    }

    /// Disjoint cycles in standard form: each cycle starts with its
    /// minimum and the cycles are ordered by increasing minimum.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for m in 1..=n as u32 {
            if seen[m as usize] {
                continue;
            }
            let mut cycle = vec![m];
            seen[m as usize] = true;
            let mut x = self.image(m);
            while x != m {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.image(x);
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl fmt::Display for PlainPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(&self.window))
    }
}

/// Element of the hyperoctahedral group `B_n` in window form: the values
/// `pi(1), ..., pi(n)`, with `pi(-i) = -pi(i)` implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Malformed(format!(
                    "window {window:?} is not a signed permutation of 1..={n}"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { window: (1..=n as i32).collect() }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Image of `i`, for `i` in `{-n..-1, 1..n}`.
    pub fn image(&self, i: i32) -> i32 {
        if i > 0 {
            self.window[i as usize - 1]
        } else {
            -self.window[(-i) as usize - 1]
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(&self.window))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [v1,v2,...], got {s:?}")))?;
        let inner = inner.trim();
        let mut window = Vec::new();
        if !inner.is_empty() {
            for part in inner.split(',') {
                window.push(
                    part.trim()
                        .parse::<i32>()
                        .map_err(|e| Error::Parse(format!("bad window entry {part:?}: {e}")))?,
                );
            }
        }
        SignedPermutation::new(window).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Split cycles pair two disjoint orbits `C` and `-C` into one unit;
/// non-split cycles are a single orbit closed under negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CycleKind {
    Split,
    NonSplit,
}

/// One representative cycle of the standard form. For a split cycle the
/// elements are the orbit containing the minimal positive value; for a
/// non-split cycle they are the first half of the doubled orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub elements: Vec<i32>,
    pub kind: CycleKind,
}

/// Representative cycles in standard form: ordered by increasing minimal
/// absolute value, each starting with that minimum, positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    cycles: Vec<Cycle>,
}

impl CycleDecomposition {
    pub fn new(cycles: Vec<Cycle>) -> Result<Self> {
        Self::validate(&cycles)?;
        Ok(CycleDecomposition { cycles })
    }

    fn validate(cycles: &[Cycle]) -> Result<()> {
        let n: usize = cycles.iter().map(|c| c.elements.len()).sum();
        let mut seen = vec![false; n + 1];
        let mut prev_min = 0i32;
        for cycle in cycles {
            let first = *cycle
                .elements
                .first()
                .ok_or_else(|| Error::Malformed("empty cycle".into()))?;
            if first <= 0 {
                return Err(Error::Malformed(format!(
                    "cycle {:?} must open with its positive minimum",
                    cycle.elements
                )));
            }
            for &e in &cycle.elements {
                let a = e.unsigned_abs() as usize;
                if a == 0 || a > n || seen[a] {
                    return Err(Error::Malformed(format!(
                        "repeated or out-of-range absolute value {a} in cycles"
                    )));
                }
                seen[a] = true;
                if e.abs() < first {
                    return Err(Error::Malformed(format!(
                        "cycle {:?} does not open with its minimal absolute value",
                        cycle.elements
                    )));
                }
            }
            if first <= prev_min {
                return Err(Error::Malformed(
                    "cycles are not ordered by increasing minimal absolute value".into(),
                ));
            }
            prev_min = first;
        }
        Ok(())
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn n(&self) -> usize {
        self.cycles.iter().map(|c| c.elements.len()).sum()
    }

    pub fn nonsplit_count(&self) -> usize {
        self.cycles.iter().filter(|c| c.kind == CycleKind::NonSplit).count()
    }

    /// Rebuilds the window form. Inverse of [`cycle_decompose`].
    pub fn to_permutation(&self) -> Result<SignedPermutation> {
        let n = self.n();
        let mut window = vec![0i32; n];
        let mut set = |a: i32, b: i32| {
            if a > 0 {
                window[a as usize - 1] = b;
            } else {
                window[(-a) as usize - 1] = -b;
            }
        };
        for cycle in &self.cycles {
            let elems = &cycle.elements;
            let l = elems.len();
            for i in 0..l - 1 {
                set(elems[i], elems[i + 1]);
            }
            match cycle.kind {
                CycleKind::Split => set(elems[l - 1], elems[0]),
                CycleKind::NonSplit => set(elems[l - 1], -elems[0]),
            }
        }
        SignedPermutation::new(window)
    }
}

impl fmt::Display for CycleDecomposition {
    /// Text form `(1,-3)(2)(4,5)*` with `*` marking non-split cycles.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "({})", join(&cycle.elements))?;
            if cycle.kind == CycleKind::NonSplit {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

/// Standard cycle form of a signed permutation. A cycle is non-split
/// exactly when its full orbit contains `i` and `-i` together; only the
/// first half of such an orbit is stored.
pub fn cycle_decompose(p: &SignedPermutation) -> CycleDecomposition {
    let n = p.n();
    let mut seen = vec![false; n + 1];
    let mut cycles = Vec::new();
    for m in 1..=n as i32 {
        if seen[m as usize] {
            continue;
        }
        seen[m as usize] = true;
        let mut elements = vec![m];
        let mut kind = CycleKind::Split;
        let mut x = p.image(m);
        while x != m {
            if x == -m {
                kind = CycleKind::NonSplit;
                break;
            }
            seen[x.unsigned_abs() as usize] = true;
            elements.push(x);
            x = p.image(x);
        }
        cycles.push(Cycle { elements, kind });
    }
    CycleDecomposition { cycles }
}

/// Set partition of `[n]` of type B in standard presentation: an optional
/// zero block (stored by its positive support) and representative blocks
/// ordered by increasing minimal absolute value, each containing that
/// minimum with positive sign. Block elements are kept sorted by
/// absolute value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedSetPartition {
    zero_support: Vec<u32>,
    blocks: Vec<Vec<i32>>,
}

impl SignedSetPartition {
    pub fn new(zero_support: Vec<u32>, blocks: Vec<Vec<i32>>) -> Result<Self> {
        let n = zero_support.len() + blocks.iter().map(Vec::len).sum::<usize>();
        let mut seen = vec![false; n + 1];
        let mut mark = |a: usize| -> Result<()> {
            if a == 0 || a > n || seen[a] {
                return Err(Error::Malformed(format!(
                    "absolute values must cover 1..={n} exactly once"
                )));
            }
            seen[a] = true;
            Ok(())
        };
        let mut prev_support = 0u32;
        for &v in &zero_support {
            if v <= prev_support {
                return Err(Error::Malformed("zero support must be strictly increasing".into()));
            }
            prev_support = v;
            mark(v as usize)?;
        }
        let mut prev_min = 0i32;
        for block in &blocks {
            let first = *block
                .first()
                .ok_or_else(|| Error::Malformed("empty block".into()))?;
            if first <= 0 {
                return Err(Error::Malformed(format!(
                    "block {block:?} must contain its minimal absolute value with positive sign"
                )));
            }
            if first <= prev_min {
                return Err(Error::Malformed(
                    "blocks are not ordered by increasing minimal absolute value".into(),
                ));
            }
            prev_min = first;
            let mut prev_abs = 0i32;
            for &e in block {
                if e.abs() <= prev_abs {
                    return Err(Error::Malformed(format!(
                        "block {block:?} is not sorted by absolute value"
                    )));
                }
                prev_abs = e.abs();
                mark(e.unsigned_abs() as usize)?;
            }
        }
        Ok(SignedSetPartition { zero_support, blocks })
    }

    pub fn n(&self) -> usize {
        self.zero_support.len() + self.blocks.iter().map(Vec::len).sum::<usize>()
    }

    pub fn zero_support(&self) -> &[u32] {
        &self.zero_support
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    /// Number of non-zero representative blocks.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

impl fmt::Display for SignedSetPartition {
    /// Text form `{2,-2}|{1,-3}|{4,-5,6}`, zero block first when present.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.zero_support.is_empty() {
            let doubled: Vec<i32> = self
                .zero_support
                .iter()
                .flat_map(|&v| [v as i32, -(v as i32)])
                .collect();
            write!(f, "{{{}}}", join(&doubled))?;
            first = false;
        }
        for block in &self.blocks {
            if !first {
                f.write_str("|")?;
            }
            first = false;
            write!(f, "{{{}}}", join(block))?;
        }
        if first {
            f.write_str("{}")?;
        }
        Ok(())
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// All plain permutations of `{1..n}` in lexicographic window order.
pub fn plain_permutations(n: usize) -> Result<PlainPermIter> {
    check_guard(GuardKind::PlainPerms, n)?;
    Ok(PlainPermIter { state: Some((1..=n as u32).collect()) })
}

pub struct PlainPermIter {
    state: Option<Vec<u32>>,
}

impl Iterator for PlainPermIter {
    type Item = PlainPermutation;

    fn next(&mut self) -> Option<PlainPermutation> {
        let current = self.state.take()?;
        let mut next = current.clone();
        if next_lex_permutation(&mut next) {
            self.state = Some(next);
        }
        Some(PlainPermutation { window: current })
    }
}

fn next_lex_permutation(w: &mut [u32]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// All of `B_n` in lexicographic order on windows over the alphabet
/// `-n < ... < -1 < 1 < ... < n`.
pub fn signed_permutations(n: usize) -> Result<SignedPermIter> {
    check_guard(GuardKind::SignedPerms, n)?;
    Ok(SignedPermIter::new(n))
}

/// The same stream, guarded by the looser bound used for first-kind word
/// enumeration.
pub(crate) fn signed_permutations_first_kind(n: usize) -> Result<SignedPermIter> {
    check_guard(GuardKind::FirstKindEnum, n)?;
    Ok(SignedPermIter::new(n))
}

pub struct SignedPermIter {
    n: usize,
    prefix: Vec<i32>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl SignedPermIter {
    fn new(n: usize) -> Self {
        SignedPermIter { n, prefix: Vec::new(), used: vec![false; n + 1], started: false, done: false }
    }

    /// Smallest available value strictly greater than `above` (or the
    /// overall smallest when `above` is `None`).
    fn next_value(&self, above: Option<i32>) -> Option<i32> {
        let start = match above {
            Some(v) => v + 1,
            None => -(self.n as i32),
        };
        let mut v = start;
        while v <= self.n as i32 {
            if v != 0 && !self.used[v.unsigned_abs() as usize] {
                return Some(v);
            }
            v += 1;
        }
        None
    }

    fn push(&mut self, v: i32) {
        self.used[v.unsigned_abs() as usize] = true;
        self.prefix.push(v);
    }

    fn pop(&mut self) -> i32 {
        let v = self.prefix.pop().expect("pop on empty prefix");
        self.used[v.unsigned_abs() as usize] = false;
        v
    }

    fn descend(&mut self) {
        while self.prefix.len() < self.n {
            let v = self.next_value(None).expect("free value must exist");
            self.push(v);
        }
    }
}

impl Iterator for SignedPermIter {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(SignedPermutation { window: self.prefix.clone() });
        }
        loop {
            if self.prefix.is_empty() {
                self.done = true;
                return None;
            }
            let v = self.pop();
            if let Some(next) = self.next_value(Some(v)) {
                self.push(next);
                self.descend();
                return Some(SignedPermutation { window: self.prefix.clone() });
            }
        }
    }
}

/// All type-B set partitions of `[n]`, each exactly once, in standard
/// presentation; element `m` is inserted into the zero block, then each
/// existing block as `+m` and `-m`, then a new block.
pub fn signed_partitions(n: usize) -> Result<SignedPartitionIter> {
    check_guard(GuardKind::Partitions, n)?;
    Ok(SignedPartitionIter {
        n,
        ops: Vec::new(),
        choices: Vec::new(),
        zero_support: Vec::new(),
        blocks: Vec::new(),
        started: false,
        done: false,
    })
}

#[derive(Clone, Copy)]
enum Applied {
    Zero,
    Block(usize),
    NewBlock,
}

pub struct SignedPartitionIter {
    n: usize,
    ops: Vec<Applied>,
    choices: Vec<usize>,
    zero_support: Vec<u32>,
    blocks: Vec<Vec<i32>>,
    started: bool,
    done: bool,
}

impl SignedPartitionIter {
    /// Applies insertion choice `c` for element `m`; choices are numbered
    /// `0` (zero block), `1..=2k` (block `(c-1)/2`, sign by parity), and
    /// `2k+1` (new block).
    fn apply(&mut self, m: u32, c: usize) {
        let op = if c == 0 {
            self.zero_support.push(m);
            Applied::Zero
        } else if c <= 2 * self.blocks.len() {
            let b = (c - 1) / 2;
            let signed = if (c - 1) % 2 == 0 { m as i32 } else { -(m as i32) };
            self.blocks[b].push(signed);
            Applied::Block(b)
        } else {
            self.blocks.push(vec![m as i32]);
            Applied::NewBlock
        };
        self.ops.push(op);
        self.choices.push(c);
    }

    fn undo(&mut self) -> usize {
        let c = self.choices.pop().expect("undo on empty stack");
        match self.ops.pop().expect("undo on empty stack") {
            Applied::Zero => {
                self.zero_support.pop();
            }
            Applied::Block(b) => {
                self.blocks[b].pop();
            }
            Applied::NewBlock => {
                self.blocks.pop();
            }
        }
        c
    }

    fn descend(&mut self) {
        while self.choices.len() < self.n {
            let m = self.choices.len() as u32 + 1;
            self.apply(m, 0);
        }
    }

    fn snapshot(&self) -> SignedSetPartition {
        SignedSetPartition {
            zero_support: self.zero_support.clone(),
            blocks: self.blocks.clone(),
        }
    }
}

impl Iterator for SignedPartitionIter {
    type Item = SignedSetPartition;

    fn next(&mut self) -> Option<SignedSetPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(self.snapshot());
        }
        loop {
            if self.choices.is_empty() {
                self.done = true;
                return None;
            }
            let m = self.choices.len() as u32;
            let c = self.undo();
            let max_choice = 2 * self.blocks.len() + 1;
            if c < max_choice {
                self.apply(m, c + 1);
                self.descend();
                return Some(self.snapshot());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Integer oracle for the second-kind triangle at q = 1.
    fn stirling2_b_int(n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        if k == 0 || k == n {
            return 1;
        }
        stirling2_b_int(n - 1, k - 1) + (2 * k as u64 + 1) * stirling2_b_int(n - 1, k)
    }

    #[test]
    fn signed_perm_counts_match_group_order() {
        for n in 0..=8 {
            let count = signed_permutations(n).unwrap().count() as u128;
            assert_eq!(count, signed_perm_count(n), "n={n}");
        }
        assert_eq!(signed_permutations(2).unwrap().count(), 8);
    }

    #[test]
    fn signed_perm_order_is_lexicographic_and_distinct() {
        for n in 0..=4 {
            let windows: Vec<Vec<i32>> =
                signed_permutations(n).unwrap().map(|p| p.window().to_vec()).collect();
            let mut sorted = windows.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(windows, sorted, "n={n}");
        }
        let first: Vec<Vec<i32>> =
            signed_permutations(2).unwrap().take(3).map(|p| p.window().to_vec()).collect();
        assert_eq!(first, vec![vec![-2, -1], vec![-2, 1], vec![-1, -2]]);
    }

    #[test]
    fn plain_perm_counts() {
        assert_eq!(plain_permutations(0).unwrap().count(), 1);
        assert_eq!(plain_permutations(3).unwrap().count(), 6);
        assert_eq!(plain_permutations(5).unwrap().count(), 120);
    }

    #[test]
    fn guards_reject_oversized_requests() {
        assert!(matches!(
            signed_permutations(13),
            Err(Error::SizeLimit { n: 13, .. })
        ));
        assert!(matches!(plain_permutations(11), Err(Error::SizeLimit { .. })));
        assert!(matches!(signed_partitions(11), Err(Error::SizeLimit { .. })));
        // An object-count limit replaces the n-based bound in both directions.
        assert!(guard_with(GuardKind::SignedPerms, 3, Some(48)).is_ok());
        assert!(guard_with(GuardKind::SignedPerms, 3, Some(47)).is_err());
        assert!(guard_with(GuardKind::SignedPerms, 13, Some(u128::MAX)).is_ok());
    }

    #[test]
    fn cycle_decompose_paper_window() {
        let p: SignedPermutation = "[-3,2,-1,5,-4]".parse().unwrap();
        let d = cycle_decompose(&p);
        assert_eq!(d.to_string(), "(1,-3)(2)(4,5)*");
        assert_eq!(d.nonsplit_count(), 1);
        assert_eq!(d.cycles()[0].kind, CycleKind::Split);
        assert_eq!(d.cycles()[1].kind, CycleKind::Split);
        assert_eq!(d.cycles()[2].kind, CycleKind::NonSplit);
        assert_eq!(d.cycles()[2].elements, vec![4, 5]);
    }

    #[test]
    fn identity_decomposes_into_split_singletons() {
        let d = cycle_decompose(&SignedPermutation::identity(4));
        assert_eq!(d.cycles().len(), 4);
        assert!(d.cycles().iter().all(|c| c.kind == CycleKind::Split && c.elements.len() == 1));
    }

    #[test]
    fn negated_fixed_point_is_nonsplit() {
        // Orbit of 1 under [-1] is {1,-1}, closed under negation.
        let d = cycle_decompose(&SignedPermutation::new(vec![-1]).unwrap());
        assert_eq!(d.cycles().len(), 1);
        assert_eq!(d.cycles()[0].kind, CycleKind::NonSplit);
        assert_eq!(d.cycles()[0].elements, vec![1]);
        assert_eq!(d.to_string(), "(1)*");
    }

    #[test]
    fn cycles_to_perm_inverts_decompose() {
        let p: SignedPermutation = "[-3,2,-1,5,-4]".parse().unwrap();
        let d = cycle_decompose(&p);
        assert_eq!(d.to_permutation().unwrap(), p);

        let d = cycle_decompose(&SignedPermutation::identity(3));
        assert_eq!(d.to_permutation().unwrap(), SignedPermutation::identity(3));

        for p in signed_permutations(3).unwrap() {
            let d = cycle_decompose(&p);
            assert_eq!(d.to_permutation().unwrap(), p, "round trip failed for {p}");
        }
    }

    #[test]
    fn decomposition_invariants_hold_exhaustively() {
        for n in 0..=4 {
            for p in signed_permutations(n).unwrap() {
                let d = cycle_decompose(&p);
                let mut prev_min = 0;
                for c in d.cycles() {
                    assert!(c.elements[0] > prev_min);
                    assert!(c.elements.iter().all(|e| e.abs() >= c.elements[0]));
                    prev_min = c.elements[0];
                }
            }
        }
    }

    #[test]
    fn malformed_cycles_are_rejected() {
        // Repeated absolute value.
        assert!(CycleDecomposition::new(vec![
            Cycle { elements: vec![1, -1], kind: CycleKind::Split },
        ])
        .is_err());
        // Bad ordering.
        assert!(CycleDecomposition::new(vec![
            Cycle { elements: vec![2], kind: CycleKind::Split },
            Cycle { elements: vec![1], kind: CycleKind::Split },
        ])
        .is_err());
        // Negative opener.
        assert!(CycleDecomposition::new(vec![
            Cycle { elements: vec![-1, 2], kind: CycleKind::Split },
        ])
        .is_err());
    }

    #[test]
    fn partition_counts_match_second_kind_triangle() {
        let totals: Vec<usize> =
            (0..=6).map(|n| signed_partitions(n).unwrap().count()).collect();
        assert_eq!(totals, vec![1, 2, 6, 24, 116, 648, 4088]);
        for n in 0..=6 {
            for k in 0..=n {
                let count = signed_partitions(n)
                    .unwrap()
                    .filter(|p| p.num_blocks() == k)
                    .count() as u64;
                assert_eq!(count, stirling2_b_int(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn partition_enumeration_for_n1() {
        let all: Vec<String> =
            signed_partitions(1).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(all, vec!["{1,-1}", "{1}"]);
    }

    #[test]
    fn partitions_are_distinct_and_standard() {
        for n in 0..=4 {
            let mut seen = std::collections::HashSet::new();
            for p in signed_partitions(n).unwrap() {
                assert_eq!(p.n(), n);
                // Re-validating exercises the standard-presentation checks.
                let rebuilt =
                    SignedSetPartition::new(p.zero_support().to_vec(), p.blocks().to_vec())
                        .unwrap();
                assert_eq!(rebuilt, p);
                assert!(seen.insert(p.to_string()), "duplicate partition {p}");
            }
        }
    }

    #[test]
    fn partition_rendering() {
        let p = SignedSetPartition::new(vec![2], vec![vec![1, -3], vec![4, -5, 6]]).unwrap();
        assert_eq!(p.to_string(), "{2,-2}|{1,-3}|{4,-5,6}");
        let empty = SignedSetPartition::new(vec![], vec![]).unwrap();
        assert_eq!(empty.to_string(), "{}");
    }

    #[test]
    fn window_parse_rejects_junk() {
        assert!("[1,1]".parse::<SignedPermutation>().is_err());
        assert!("[0]".parse::<SignedPermutation>().is_err());
        assert!("1,2".parse::<SignedPermutation>().is_err());
        assert!("[3,x]".parse::<SignedPermutation>().is_err());
        assert_eq!("[]".parse::<SignedPermutation>().unwrap().n(), 0);
    }
}
