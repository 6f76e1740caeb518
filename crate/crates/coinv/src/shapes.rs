//! Partitions, bipartitions, Young tableaux, and the bijections that encode
//! reverse semistandard tableaux as (standard tableau, difference sequence)
//! pairs.
//!
//! Conventions:
//!
//! - partitions are stored without trailing zeros and padded on demand;
//! - `Des(T)` of a standard tableau is the set of entries `i` whose successor
//!   `i+1` lies strictly south of `i`; for a pair `(T^1, T^2)` the second
//!   component is regarded as lying strictly south of the first;
//! - a reverse semistandard tableau weakly decreases along rows and strictly
//!   decreases down columns; in the signed variant the two components carry
//!   odd and even entries respectively.
//!
//! The bijections [`phi_a`] and [`phi_b`] map a reverse tableau to the
//! standard tableau recording the order of its entries plus a nonnegative
//! difference sequence; [`phi_a_inverse`] and [`phi_b_inverse`] reconstruct
//! the reverse tableau from `T_hat_i = 1 + d_i + sum_{j >= i} delta_j`
//! (type A) and `T_hat_i = 1 + f_i + 2 sum_{j >= i} delta_j` (type B).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{check_capacity, Error, Result};

/// Largest tableau size for standard tableau enumeration (`|shape| <= 12`).
pub const SYT_MAX_SIZE: usize = 12;

/// Largest total size for standard bitableau enumeration.
pub const SYT_BI_MAX_TOTAL: usize = 9;

/// Outcome of comparing two elements of a partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetCmp {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// An integer partition: weakly decreasing positive parts.
///
/// The derived `Ord` is the lexicographic storage order used for
/// deterministic container iteration; it is unrelated to dominance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates weak decrease; trailing zeros are stripped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidShape(format!(
                    "parts must weakly decrease, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative values into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// The parts, weakly decreasing, without zeros.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (positive) parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-based; zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<usize>> {
        if self.num_parts() > n {
            return Err(Error::Domain(format!(
                "partition has {} parts, cannot pad to length {n}",
                self.num_parts()
            )));
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// Conjugate partition: `conj_j = |{ i : part_i >= j }|`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Dominance comparison between partitions of the same size.
    /// `Less` means `self` is strictly dominated by `other`.
    pub fn dominance_cmp(&self, other: &Partition) -> Result<PosetCmp> {
        if self.size() != other.size() {
            return Err(Error::Domain(format!(
                "dominance compares partitions of equal size, got {} and {}",
                self.size(),
                other.size()
            )));
        }
        let len = self.num_parts().max(other.num_parts());
        let mut self_below = true;
        let mut self_above = true;
        let (mut sum_a, mut sum_b) = (0usize, 0usize);
        for i in 1..=len {
            sum_a += self.part(i);
            sum_b += other.part(i);
            if sum_a > sum_b {
                self_below = false;
            }
            if sum_a < sum_b {
                self_above = false;
            }
        }
        Ok(match (self_below, self_above) {
            (true, true) => PosetCmp::Equal,
            (true, false) => PosetCmp::Less,
            (false, true) => PosetCmp::Greater,
            (false, false) => PosetCmp::Incomparable,
        })
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts the empty string, `"0"`, and trailing zeros.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = trimmed
            .split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {piece:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

/// An ordered pair of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn total_size(&self) -> usize {
        self.first.size() + self.second.size()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once('|').ok_or_else(|| {
            Error::Parse("bipartition needs two components separated by '|'".into())
        })?;
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

/// `lambda_S` for `S` a subset of `{1, ..., n}`: the partition with
/// `lambda_i = |S ∩ {i, ..., n}|` for `i = 1..n`.
pub fn lambda_s(s: &BTreeSet<usize>, n: usize) -> Result<Partition> {
    if let Some(&bad) = s.iter().find(|&&x| x == 0 || x > n) {
        return Err(Error::Domain(format!("set element {bad} is outside 1..={n}")));
    }
    let parts: Vec<usize> = (1..=n)
        .map(|i| s.iter().filter(|&&x| x >= i).count())
        .collect();
    Partition::new(parts)
}

/// `2 lambda_{S1} + indicator(S2)` as a length-`n` vector, with a flag
/// telling whether the vector is weakly decreasing (hence a partition).
/// Requires `S1 ⊆ [n-1]` and `S2 ⊆ [n]`.
pub fn lambda_s1s2(
    s1: &BTreeSet<usize>,
    s2: &BTreeSet<usize>,
    n: usize,
) -> Result<(Vec<usize>, bool)> {
    if n == 0 {
        return Err(Error::Domain("lambda_{S1,S2} needs n >= 1".into()));
    }
    if let Some(&bad) = s1.iter().find(|&&x| x == 0 || x >= n) {
        return Err(Error::Domain(format!(
            "first set element {bad} is outside 1..={}",
            n - 1
        )));
    }
    if let Some(&bad) = s2.iter().find(|&&x| x == 0 || x > n) {
        return Err(Error::Domain(format!(
            "second set element {bad} is outside 1..={n}"
        )));
    }
    let vector: Vec<usize> = (1..=n)
        .map(|i| 2 * s1.iter().filter(|&&x| x >= i).count() + usize::from(s2.contains(&i)))
        .collect();
    let is_partition = vector.windows(2).all(|w| w[0] >= w[1]);
    Ok((vector, is_partition))
}

/// A standard Young tableau: entries `1..n`, rows and columns strictly
/// increasing.  The empty tableau (`n = 0`) is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        validate_increasing_rows(&rows)?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for row in &rows {
            for &e in row {
                if e == 0 || e > n {
                    return Err(Error::InvalidShape(format!(
                        "entry {e} is outside 1..={n}"
                    )));
                }
                if seen[e - 1] {
                    return Err(Error::InvalidShape(format!("entry {e} occurs twice")));
                }
                seen[e - 1] = true;
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("row lengths weakly decrease")
    }

    /// Row index (0-based) of each entry; index `e - 1` holds the row of `e`.
    fn row_index(&self) -> Vec<usize> {
        let mut idx = vec![0usize; self.n()];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                idx[e - 1] = r;
            }
        }
        idx
    }

    /// Entries `i` with `i + 1` strictly south of `i`, increasing.
    pub fn des_set(&self) -> Vec<usize> {
        let rows = self.row_index();
        (1..self.n()).filter(|&i| rows[i] > rows[i - 1]).collect()
    }

    pub fn des(&self) -> usize {
        self.des_set().len()
    }

    pub fn maj(&self) -> usize {
        self.des_set().iter().sum()
    }

    /// `d_i = |{ j in Des : j >= i }|`, indexed by `i - 1`.
    pub fn d_vector(&self) -> Vec<usize> {
        suffix_counts(&self.des_set(), self.n())
    }
}

impl fmt::Display for StandardTableau {
    /// Rows joined by `;`, entries by `,`: `1,3,4;2,6;5,7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardTableau::new(parse_rows(s)?)
    }
}

/// A standard Young bitableau: entries `1..n` distributed over two shapes,
/// each component with strictly increasing rows and columns.  The second
/// component is regarded as lying strictly south of the first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiTableau {
    first: Vec<Vec<usize>>,
    second: Vec<Vec<usize>>,
}

impl BiTableau {
    pub fn new(first: Vec<Vec<usize>>, second: Vec<Vec<usize>>) -> Result<Self> {
        validate_increasing_rows(&first)?;
        validate_increasing_rows(&second)?;
        let n: usize =
            first.iter().map(Vec::len).sum::<usize>() + second.iter().map(Vec::len).sum::<usize>();
        let mut seen = vec![false; n];
        for row in first.iter().chain(second.iter()) {
            for &e in row {
                if e == 0 || e > n {
                    return Err(Error::InvalidShape(format!(
                        "entry {e} is outside 1..={n}"
                    )));
                }
                if seen[e - 1] {
                    return Err(Error::InvalidShape(format!("entry {e} occurs twice")));
                }
                seen[e - 1] = true;
            }
        }
        Ok(BiTableau { first, second })
    }

    pub fn first_rows(&self) -> &[Vec<usize>] {
        &self.first
    }

    pub fn second_rows(&self) -> &[Vec<usize>] {
        &self.second
    }

    pub fn n(&self) -> usize {
        self.first.iter().map(Vec::len).sum::<usize>()
            + self.second.iter().map(Vec::len).sum::<usize>()
    }

    pub fn shape(&self) -> Bipartition {
        Bipartition::new(
            Partition::new(self.first.iter().map(Vec::len).collect())
                .expect("row lengths weakly decrease"),
            Partition::new(self.second.iter().map(Vec::len).collect())
                .expect("row lengths weakly decrease"),
        )
    }

    /// Global row index of each entry, the second component sitting below
    /// every row of the first.
    fn row_index(&self) -> Vec<usize> {
        let mut idx = vec![0usize; self.n()];
        let offset = self.first.len();
        for (r, row) in self.first.iter().enumerate() {
            for &e in row {
                idx[e - 1] = r;
            }
        }
        for (r, row) in self.second.iter().enumerate() {
            for &e in row {
                idx[e - 1] = offset + r;
            }
        }
        idx
    }

    pub fn des_set(&self) -> Vec<usize> {
        let rows = self.row_index();
        (1..self.n()).filter(|&i| rows[i] > rows[i - 1]).collect()
    }

    pub fn maj(&self) -> usize {
        self.des_set().iter().sum()
    }

    /// Entries of the second component, increasing.
    pub fn neg_set(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.second.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    pub fn d_vector(&self) -> Vec<usize> {
        suffix_counts(&self.des_set(), self.n())
    }

    /// `f_i = 2 d_i + eps_i` with `eps_i = [i in Neg]`, indexed by `i - 1`.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.d_vector();
        let neg: BTreeSet<usize> = self.neg_set().into_iter().collect();
        (1..=self.n())
            .map(|i| 2 * d[i - 1] + usize::from(neg.contains(&i)))
            .collect()
    }

    /// `fmaj = 2 maj + |Neg|`; equals the sum of the `f_i`.
    pub fn fmaj(&self) -> usize {
        2 * self.maj() + self.neg_set().len()
    }
}

impl fmt::Display for BiTableau {
    /// The two components joined by `|`: `1,3,4;2,6|5;7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.first)?;
        write!(f, "|")?;
        write_rows(f, &self.second)
    }
}

impl FromStr for BiTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once('|').ok_or_else(|| {
            Error::Parse("bitableau needs two components separated by '|'".into())
        })?;
        BiTableau::new(parse_rows_allow_empty(a)?, parse_rows_allow_empty(b)?)
    }
}

/// All standard Young tableaux of the given shape, in the deterministic
/// order produced by placing `1, 2, ...` into the topmost admissible row.
pub fn enumerate_syt(shape: &Partition) -> Result<Vec<StandardTableau>> {
    check_capacity("|shape|", shape.size(), SYT_MAX_SIZE)?;
    let parts = shape.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut out = Vec::new();
    fn rec(
        entry: usize,
        n: usize,
        parts: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if entry > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..parts.len() {
            let filled = rows[r].len();
            if filled < parts[r] && (r == 0 || filled < rows[r - 1].len()) {
                rows[r].push(entry);
                rec(entry + 1, n, parts, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(1, shape.size(), &parts, &mut rows, &mut out);
    Ok(out)
}

/// All standard Young bitableaux of the given pair of shapes, entries
/// `1..n` jointly; deterministic order tries the first component's rows,
/// then the second's.
pub fn enumerate_syt_bi(first: &Partition, second: &Partition) -> Result<Vec<BiTableau>> {
    check_capacity("|shape|", first.size() + second.size(), SYT_BI_MAX_TOTAL)?;
    let parts1 = first.parts().to_vec();
    let parts2 = second.parts().to_vec();
    let n = first.size() + second.size();
    let mut rows1: Vec<Vec<usize>> = parts1.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut rows2: Vec<Vec<usize>> = parts2.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        entry: usize,
        n: usize,
        parts1: &[usize],
        parts2: &[usize],
        rows1: &mut Vec<Vec<usize>>,
        rows2: &mut Vec<Vec<usize>>,
        out: &mut Vec<BiTableau>,
    ) {
        if entry > n {
            out.push(BiTableau {
                first: rows1.clone(),
                second: rows2.clone(),
            });
            return;
        }
        for r in 0..parts1.len() {
            let filled = rows1[r].len();
            if filled < parts1[r] && (r == 0 || filled < rows1[r - 1].len()) {
                rows1[r].push(entry);
                rec(entry + 1, n, parts1, parts2, rows1, rows2, out);
                rows1[r].pop();
            }
        }
        for r in 0..parts2.len() {
            let filled = rows2[r].len();
            if filled < parts2[r] && (r == 0 || filled < rows2[r - 1].len()) {
                rows2[r].push(entry);
                rec(entry + 1, n, parts1, parts2, rows1, rows2, out);
                rows2[r].pop();
            }
        }
    }
    rec(1, n, &parts1, &parts2, &mut rows1, &mut rows2, &mut out);
    Ok(out)
}

/// A reverse semistandard Young tableau: positive entries, rows weakly
/// decreasing, columns strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReverseSsyt {
    rows: Vec<Vec<usize>>,
}

impl ReverseSsyt {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        validate_reverse_rows(&rows)?;
        Ok(ReverseSsyt { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("row lengths weakly decrease")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Sum of `entry - 1` over all cells: the degree of the associated
    /// monomial under the specialization sending entry `t` to a product of
    /// `t - 1` variables.
    pub fn weight(&self) -> usize {
        self.rows.iter().flatten().map(|&e| e - 1).sum()
    }

    /// All entries, weakly decreasing.
    pub fn sorted_entries(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.rows.iter().flatten().copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// The partition whose `i`-th part counts cells with entry `> i`.
    pub fn counts_above(&self) -> Partition {
        let entries = self.sorted_entries();
        let max = entries.first().copied().unwrap_or(1);
        let parts: Vec<usize> = (1..max)
            .map(|i| entries.iter().filter(|&&e| e > i).count())
            .collect();
        Partition::new(parts).expect("counts weakly decrease")
    }
}

impl fmt::Display for ReverseSsyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

impl FromStr for ReverseSsyt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReverseSsyt::new(parse_rows(s)?)
    }
}

/// A pair of reverse semistandard tableaux with odd entries in the first
/// component and even entries in the second.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReverseSsytB {
    first: ReverseSsyt,
    second: ReverseSsyt,
}

impl ReverseSsytB {
    pub fn new(first: ReverseSsyt, second: ReverseSsyt) -> Result<Self> {
        if let Some(&e) = first.rows.iter().flatten().find(|&&e| e % 2 == 0) {
            return Err(Error::InvalidShape(format!(
                "first component entries must be odd, got {e}"
            )));
        }
        if let Some(&e) = second.rows.iter().flatten().find(|&&e| e % 2 == 1) {
            return Err(Error::InvalidShape(format!(
                "second component entries must be even, got {e}"
            )));
        }
        Ok(ReverseSsytB { first, second })
    }

    pub fn first(&self) -> &ReverseSsyt {
        &self.first
    }

    pub fn second(&self) -> &ReverseSsyt {
        &self.second
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn weight(&self) -> usize {
        self.first.weight() + self.second.weight()
    }

    /// All entries of both components, weakly decreasing.
    pub fn sorted_entries(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .first
            .rows
            .iter()
            .chain(self.second.rows.iter())
            .flatten()
            .copied()
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// The partition whose `i`-th part counts cells (of both components)
    /// with entry `> i`.
    pub fn counts_above(&self) -> Partition {
        let entries = self.sorted_entries();
        let max = entries.first().copied().unwrap_or(1);
        let parts: Vec<usize> = (1..max)
            .map(|i| entries.iter().filter(|&&e| e > i).count())
            .collect();
        Partition::new(parts).expect("counts weakly decrease")
    }
}

impl fmt::Display for ReverseSsytB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl FromStr for ReverseSsytB {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once('|').ok_or_else(|| {
            Error::Parse("signed reverse tableau needs two components separated by '|'".into())
        })?;
        ReverseSsytB::new(
            ReverseSsyt::new(parse_rows_allow_empty(a)?)?,
            ReverseSsyt::new(parse_rows_allow_empty(b)?)?,
        )
    }
}

/// All reverse semistandard tableaux of the given shape with entries at most
/// `max_entry` and, if given, weight at most `max_weight`.
pub fn enumerate_rssyt(
    shape: &Partition,
    max_entry: usize,
    max_weight: Option<usize>,
) -> Result<Vec<ReverseSsyt>> {
    check_capacity("|shape|", shape.size(), SYT_MAX_SIZE)?;
    let mut out = Vec::new();
    fill_reverse(shape, max_entry, max_weight, &mut |rows| {
        out.push(ReverseSsyt {
            rows: rows.to_vec(),
        });
    });
    Ok(out)
}

/// All signed reverse semistandard tableau pairs: odd entries in the first
/// shape, even entries in the second, entries at most `max_entry`, total
/// weight at most `max_weight` if given.
pub fn enumerate_rssyt_b(
    first: &Partition,
    second: &Partition,
    max_entry: usize,
    max_weight: Option<usize>,
) -> Result<Vec<ReverseSsytB>> {
    check_capacity("|shape|", first.size() + second.size(), SYT_MAX_SIZE)?;
    let mut out = Vec::new();
    let mut firsts = Vec::new();
    fill_reverse_parity(first, max_entry, max_weight, 1, &mut |rows| {
        firsts.push(ReverseSsyt {
            rows: rows.to_vec(),
        });
    });
    for f in firsts {
        let budget = max_weight.map(|w| w - f.weight());
        fill_reverse_parity(second, max_entry, budget, 2, &mut |rows| {
            out.push(ReverseSsytB {
                first: f.clone(),
                second: ReverseSsyt {
                    rows: rows.to_vec(),
                },
            });
        });
    }
    Ok(out)
}

/// Backtracking fill in row-major order over all positive values.
fn fill_reverse(
    shape: &Partition,
    max_entry: usize,
    max_weight: Option<usize>,
    emit: &mut impl FnMut(&[Vec<usize>]),
) {
    fill_reverse_general(shape, max_entry, max_weight, None, emit);
}

/// Parity-constrained fill: values congruent to `parity` modulo 2.
fn fill_reverse_parity(
    shape: &Partition,
    max_entry: usize,
    max_weight: Option<usize>,
    parity: usize,
    emit: &mut impl FnMut(&[Vec<usize>]),
) {
    fill_reverse_general(shape, max_entry, max_weight, Some(parity % 2), emit);
}

fn fill_reverse_general(
    shape: &Partition,
    max_entry: usize,
    max_weight: Option<usize>,
    parity: Option<usize>,
    emit: &mut impl FnMut(&[Vec<usize>]),
) {
    let parts = shape.parts().to_vec();
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&l| vec![0; l]).collect();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<usize>>,
        max_entry: usize,
        budget: Option<usize>,
        parity: Option<usize>,
        emit: &mut impl FnMut(&[Vec<usize>]),
    ) {
        if k == cells.len() {
            emit(rows);
            return;
        }
        let (r, c) = cells[k];
        let mut hi = max_entry;
        if c > 0 {
            hi = hi.min(rows[r][c - 1]);
        }
        if r > 0 {
            let above = rows[r - 1][c];
            if above <= 1 {
                return;
            }
            hi = hi.min(above - 1);
        }
        if let Some(b) = budget {
            hi = hi.min(b + 1);
        }
        let lo = match parity {
            None => 1,
            Some(1) => 1,
            Some(_) => 2,
        };
        let step = if parity.is_some() { 2 } else { 1 };
        let mut v = lo;
        while v <= hi {
            rows[r][c] = v;
            let next_budget = budget.map(|b| b - (v - 1));
            rec(k + 1, cells, rows, max_entry, next_budget, parity, emit);
            v += step;
        }
        rows[r][c] = 0;
    }
    rec(0, &cells, &mut rows, max_entry, max_weight, parity, emit);
}

/// Encodes a reverse semistandard tableau as the standard tableau recording
/// the weakly decreasing order of its entries (ties resolved left to right
/// by column) together with the nonnegative difference sequence
/// `delta_i = (e_i - d_i) - (e_{i+1} - d_{i+1})`, where `e` is the sorted
/// entry sequence extended by `e_{n+1} = 1` and `d` the descent suffix count
/// of the output tableau extended by `d_{n+1} = 0`.
pub fn phi_a(input: &ReverseSsyt) -> (StandardTableau, Vec<usize>) {
    let mut cells: Vec<(usize, usize, usize)> = input
        .rows
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &e)| (e, r, c)))
        .collect();
    cells.sort_by(|a, b| b.0.cmp(&a.0).then(a.2.cmp(&b.2)));
    let n = cells.len();
    let mut rows: Vec<Vec<usize>> = input.rows.iter().map(|row| vec![0; row.len()]).collect();
    let mut entries = Vec::with_capacity(n);
    for (label, &(e, r, c)) in cells.iter().enumerate() {
        rows[r][c] = label + 1;
        entries.push(e);
    }
    let tableau = StandardTableau::new(rows).expect("sorted labels form a standard tableau");
    let delta = delta_from(&entries, &tableau.d_vector(), 1);
    (tableau, delta)
}

/// Inverse of [`phi_a`]: rebuilds the reverse tableau with entries
/// `1 + d_i + sum_{j >= i} delta_j` placed at the cells of the standard
/// tableau.  Requires `delta` of length `n`.
pub fn phi_a_inverse(tableau: &StandardTableau, delta: &[usize]) -> Result<ReverseSsyt> {
    let n = tableau.n();
    if delta.len() != n {
        return Err(Error::DimensionMismatch(delta.len(), n));
    }
    let d = tableau.d_vector();
    let entries = entries_from_delta(&d, delta, 1);
    let rows = tableau
        .rows
        .iter()
        .map(|row| row.iter().map(|&label| entries[label - 1]).collect())
        .collect();
    ReverseSsyt::new(rows)
}

/// Type B analogue of [`phi_a`] on a signed reverse tableau pair; the
/// difference sequence is `delta_i = ((e_i - f_i) - (e_{i+1} - f_{i+1})) / 2`
/// with the same tail convention, `f` the flag suffix statistic of the
/// output bitableau.
pub fn phi_b(input: &ReverseSsytB) -> (BiTableau, Vec<usize>) {
    let mut cells: Vec<(usize, usize, usize, usize)> = Vec::new();
    for (comp, part) in [(0usize, &input.first), (1usize, &input.second)] {
        for (r, row) in part.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                cells.push((e, comp, r, c));
            }
        }
    }
    // Equal entries share a component (parity), so ordering by column alone
    // resolves ties exactly as in the unsigned case.
    cells.sort_by(|a, b| b.0.cmp(&a.0).then(a.3.cmp(&b.3)));
    let mut first: Vec<Vec<usize>> = input.first.rows.iter().map(|r| vec![0; r.len()]).collect();
    let mut second: Vec<Vec<usize>> = input.second.rows.iter().map(|r| vec![0; r.len()]).collect();
    let mut entries = Vec::with_capacity(cells.len());
    for (label, &(e, comp, r, c)) in cells.iter().enumerate() {
        if comp == 0 {
            first[r][c] = label + 1;
        } else {
            second[r][c] = label + 1;
        }
        entries.push(e);
    }
    let tableau = BiTableau::new(first, second).expect("sorted labels form a standard bitableau");
    let delta = delta_from(&entries, &tableau.f_vector(), 2);
    (tableau, delta)
}

/// Inverse of [`phi_b`]: entries `1 + f_i + 2 sum_{j >= i} delta_j` placed
/// at the cells of the bitableau.
pub fn phi_b_inverse(tableau: &BiTableau, delta: &[usize]) -> Result<ReverseSsytB> {
    let n = tableau.n();
    if delta.len() != n {
        return Err(Error::DimensionMismatch(delta.len(), n));
    }
    let f = tableau.f_vector();
    let entries = entries_from_delta(&f, delta, 2);
    let place = |rows: &[Vec<usize>]| -> Vec<Vec<usize>> {
        rows.iter()
            .map(|row| row.iter().map(|&label| entries[label - 1]).collect())
            .collect()
    };
    ReverseSsytB::new(
        ReverseSsyt::new(place(&tableau.first))?,
        ReverseSsyt::new(place(&tableau.second))?,
    )
}

/// `delta_i = ((e_i - s_i) - (e_{i+1} - s_{i+1})) / scale` with
/// `e_{n+1} = 1`, `s_{n+1} = 0`; panics if any difference is negative or
/// not divisible by `scale`, which valid inputs never produce.
fn delta_from(entries: &[usize], stat: &[usize], scale: usize) -> Vec<usize> {
    let n = entries.len();
    let gap = |i: usize| -> i64 {
        if i < n {
            entries[i] as i64 - stat[i] as i64
        } else {
            1
        }
    };
    (0..n)
        .map(|i| {
            let diff = gap(i) - gap(i + 1);
            assert!(diff >= 0, "gap sequence must weakly decrease");
            assert!(diff % scale as i64 == 0, "gap steps must be multiples of {scale}");
            (diff / scale as i64) as usize
        })
        .collect()
}

/// `e_i = 1 + s_i + scale * sum_{j >= i} delta_j`.
fn entries_from_delta(stat: &[usize], delta: &[usize], scale: usize) -> Vec<usize> {
    let n = stat.len();
    let mut suffix = 0usize;
    let mut entries = vec![0usize; n];
    for i in (0..n).rev() {
        suffix += delta[i];
        entries[i] = 1 + stat[i] + scale * suffix;
    }
    entries
}

/// `|{ j in set : j >= i }|` for `i = 1..n`.
fn suffix_counts(set: &[usize], n: usize) -> Vec<usize> {
    (1..=n)
        .map(|i| set.iter().filter(|&&j| j >= i).count())
        .collect()
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        let mut p = remaining.min(max_part);
        while p >= 1 {
            stack.push(p);
            rec(remaining - p, p, stack, out);
            stack.pop();
            p -= 1;
        }
    }
    rec(n, n, &mut stack, &mut out);
    out
}

/// All partitions with at most `max_parts` parts and size at most
/// `max_total`, in descending lexicographic order (empty partition first is
/// not guaranteed; order is deterministic).
pub fn partitions_bounded(max_parts: usize, max_total: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(
        budget: usize,
        max_part: usize,
        slots: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        out.push(Partition {
            parts: stack.clone(),
        });
        if slots == 0 {
            return;
        }
        let mut p = budget.min(max_part);
        while p >= 1 {
            stack.push(p);
            rec(budget - p, p, slots - 1, stack, out);
            stack.pop();
            p -= 1;
        }
    }
    rec(max_total, max_total, max_parts, &mut stack, &mut out);
    out
}

/// All ordered pairs of partitions with total size `n`.
pub fn bipartitions_of(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in 0..=n {
        for first in partitions_of(a) {
            for second in partitions_of(n - a) {
                out.push(Bipartition::new(first.clone(), second));
            }
        }
    }
    out
}

/// All subsets of `{1, ..., m}` in binary counting order.
pub fn subsets_of_interval(m: usize) -> Vec<BTreeSet<usize>> {
    (0u64..(1 << m))
        .map(|mask| {
            (1..=m)
                .filter(|i| mask >> (i - 1) & 1 == 1)
                .collect::<BTreeSet<usize>>()
        })
        .collect()
}

fn validate_increasing_rows(rows: &[Vec<usize>]) -> Result<()> {
    for w in rows.windows(2) {
        if w[0].len() < w[1].len() {
            return Err(Error::InvalidShape(
                "row lengths must weakly decrease".into(),
            ));
        }
    }
    for row in rows {
        if row.is_empty() {
            return Err(Error::InvalidShape("empty row".into()));
        }
        for w in row.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidShape(format!(
                    "row entries must strictly increase, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
    }
    for r in 1..rows.len() {
        for c in 0..rows[r].len() {
            if rows[r - 1][c] >= rows[r][c] {
                return Err(Error::InvalidShape(format!(
                    "column entries must strictly increase, got {} above {}",
                    rows[r - 1][c],
                    rows[r][c]
                )));
            }
        }
    }
    Ok(())
}

fn validate_reverse_rows(rows: &[Vec<usize>]) -> Result<()> {
    for w in rows.windows(2) {
        if w[0].len() < w[1].len() {
            return Err(Error::InvalidShape(
                "row lengths must weakly decrease".into(),
            ));
        }
    }
    for row in rows {
        if row.is_empty() {
            return Err(Error::InvalidShape("empty row".into()));
        }
        for &e in row {
            if e == 0 {
                return Err(Error::InvalidShape("entries must be positive".into()));
            }
        }
        for w in row.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidShape(format!(
                    "row entries must weakly decrease, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
    }
    for r in 1..rows.len() {
        for c in 0..rows[r].len() {
            if rows[r - 1][c] <= rows[r][c] {
                return Err(Error::InvalidShape(format!(
                    "column entries must strictly decrease, got {} above {}",
                    rows[r - 1][c],
                    rows[r][c]
                )));
            }
        }
    }
    Ok(())
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<usize>]) -> fmt::Result {
    let mut first_row = true;
    for row in rows {
        if !first_row {
            write!(f, ";")?;
        }
        let mut first = true;
        for e in row {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        first_row = false;
    }
    Ok(())
}

fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty tableau".into()));
    }
    parse_rows_allow_empty(trimmed)
}

fn parse_rows_allow_empty(s: &str) -> Result<Vec<Vec<usize>>> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|piece| {
                    piece
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad tableau entry {piece:?}")))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Independent count of standard tableaux via the hook length formula.
    fn hook_count(shape: &Partition) -> usize {
        let conj = shape.conjugate();
        let n = shape.size();
        let mut product = 1u128;
        for (r, &len) in shape.parts().iter().enumerate() {
            for c in 0..len {
                let hook = (len - c) + (conj.part(c + 1) - (r + 1));
                product *= hook as u128;
            }
        }
        let factorial: u128 = (1..=n as u128).product();
        (factorial / product) as usize
    }

    #[test]
    fn partition_basics() {
        let p = shape("4,3,2,2,1");
        assert_eq!(p.size(), 12);
        assert_eq!(p.num_parts(), 5);
        assert_eq!(p.conjugate(), shape("5,4,2,1"));
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!("3,2,0,0".parse::<Partition>().unwrap(), shape("3,2"));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!(p.to_string(), "4,3,2,2,1");
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn dominance_cases() {
        let cmp = |a: &str, b: &str| shape(a).dominance_cmp(&shape(b)).unwrap();
        assert_eq!(cmp("2,2", "3,1"), PosetCmp::Less);
        assert_eq!(cmp("3,1", "2,2"), PosetCmp::Greater);
        assert_eq!(cmp("3,1", "3,1"), PosetCmp::Equal);
        assert_eq!(cmp("3,1,1,1", "2,2,2"), PosetCmp::Incomparable);
        assert!(shape("2,1").dominance_cmp(&shape("2,2")).is_err());
    }

    #[test]
    fn lambda_s_matches_descent_suffix_counts() {
        let s: BTreeSet<usize> = [2usize, 5].into_iter().collect();
        assert_eq!(lambda_s(&s, 7).unwrap(), shape("2,2,1,1,1"));
        assert!(lambda_s(&[8usize].into_iter().collect(), 7).is_err());
        // lambda_{Des(w)} equals the d-vector of w.
        for p in crate::groups::enumerate_sn(5).unwrap() {
            let st = p.stats();
            let des: BTreeSet<usize> = st.des_set.iter().copied().collect();
            assert_eq!(
                lambda_s(&des, 5).unwrap().padded(5).unwrap(),
                st.d_vector
            );
        }
    }

    #[test]
    fn lambda_s1s2_flag() {
        let s1: BTreeSet<usize> = [1usize].into_iter().collect();
        let s2: BTreeSet<usize> = [1usize, 2].into_iter().collect();
        assert_eq!(lambda_s1s2(&s1, &s2, 2).unwrap(), (vec![3, 1], true));
        let s1: BTreeSet<usize> = BTreeSet::new();
        let s2: BTreeSet<usize> = [2usize].into_iter().collect();
        assert_eq!(lambda_s1s2(&s1, &s2, 2).unwrap(), (vec![0, 1], false));
        assert!(lambda_s1s2(&[2usize].into_iter().collect(), &BTreeSet::new(), 2).is_err());
    }

    #[test]
    fn standard_tableau_statistics() {
        let t: StandardTableau = "1,3,4,6,9;2,7,8,11;5,10".parse().unwrap();
        assert_eq!(t.shape(), shape("5,4,2"));
        assert_eq!(t.des_set(), vec![1, 4, 6, 9]);
        assert_eq!(t.des(), 4);
        assert_eq!(t.maj(), 20);
        assert_eq!(t.to_string(), "1,3,4,6,9;2,7,8,11;5,10");
    }

    #[test]
    fn tableau_validation() {
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4], vec![5]]).is_ok());
        // Column condition.
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1, 4]]).is_err());
    }

    #[test]
    fn bitableau_statistics() {
        let t: BiTableau = "2,5,6;3|1,7;4,8".parse().unwrap();
        assert_eq!(t.n(), 8);
        assert_eq!(t.des_set(), vec![2, 3, 6, 7]);
        assert_eq!(t.maj(), 18);
        assert_eq!(t.neg_set(), vec![1, 4, 7, 8]);
        assert_eq!(t.fmaj(), 40);
        assert_eq!(t.fmaj(), t.f_vector().iter().sum::<usize>());
        assert_eq!(t.to_string(), "2,5,6;3|1,7;4,8");
    }

    #[test]
    fn bitableau_empty_component() {
        let t: BiTableau = "|1,2".parse().unwrap();
        assert_eq!(t.neg_set(), vec![1, 2]);
        assert_eq!(t.des_set(), Vec::<usize>::new());
        assert_eq!(t.fmaj(), 2);
        let u: BiTableau = "1,2|".parse().unwrap();
        assert_eq!(u.fmaj(), 0);
        assert_eq!(u.to_string(), "1,2|");
    }

    #[test]
    fn syt_counts_match_hook_lengths() {
        for n in 1..=7 {
            for p in partitions_of(n) {
                assert_eq!(enumerate_syt(&p).unwrap().len(), hook_count(&p), "shape {p}");
            }
        }
    }

    #[test]
    fn syt_of_single_row_and_column() {
        let row = enumerate_syt(&shape("4")).unwrap();
        assert_eq!(row.len(), 1);
        assert_eq!(row[0].maj(), 0);
        let col = enumerate_syt(&shape("1,1,1,1")).unwrap();
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].des_set(), vec![1, 2, 3]);
    }

    #[test]
    fn syt_capacity() {
        assert!(enumerate_syt(&shape("13")).is_err());
        assert!(enumerate_syt_bi(&shape("5"), &shape("5")).is_err());
    }

    #[test]
    fn bitableau_enumeration_counts() {
        // |SYT(l1, l2)| = C(n, |l1|) * |SYT(l1)| * |SYT(l2)|.
        for n in 1..=5 {
            for bp in bipartitions_of(n) {
                let a = bp.first.size();
                let binom = (1..=n).product::<usize>()
                    / ((1..=a).product::<usize>() * (1..=(n - a)).product::<usize>());
                let expected =
                    binom * hook_count(&bp.first) * hook_count(&bp.second);
                assert_eq!(
                    enumerate_syt_bi(&bp.first, &bp.second).unwrap().len(),
                    expected,
                    "shape {bp}"
                );
            }
        }
    }

    #[test]
    fn bitableau_fmaj_values_for_two_singletons() {
        let ts = enumerate_syt_bi(&shape("1"), &shape("1")).unwrap();
        let mut fmaj: Vec<usize> = ts.iter().map(BiTableau::fmaj).collect();
        fmaj.sort_unstable();
        assert_eq!(fmaj, vec![1, 3]);
    }

    #[test]
    fn stembridge_aggregation_over_b2_irreducibles() {
        // sum over bipartitions of n of |SYT| weighted by q^fmaj, times the
        // dimension, equals the fmaj generating function of B_n.
        use std::collections::BTreeMap;
        let n = 2;
        let mut lhs: BTreeMap<usize, usize> = BTreeMap::new();
        for bp in bipartitions_of(n) {
            let tableaux = enumerate_syt_bi(&bp.first, &bp.second).unwrap();
            let dim = tableaux.len();
            for t in &tableaux {
                *lhs.entry(t.fmaj()).or_default() += dim;
            }
        }
        let mut rhs: BTreeMap<usize, usize> = BTreeMap::new();
        for s in crate::groups::enumerate_bn(n).unwrap() {
            *rhs.entry(s.stats().fmaj).or_default() += 1;
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rssyt_validation_and_weight() {
        let t: ReverseSsyt = "7,4,4;4,2;3,1".parse().unwrap();
        assert_eq!(t.shape(), shape("3,2,2"));
        assert_eq!(t.weight(), 7 + 4 + 4 + 4 + 2 + 3 + 1 - 7);
        assert_eq!(t.sorted_entries(), vec![7, 4, 4, 4, 3, 2, 1]);
        assert!(ReverseSsyt::new(vec![vec![2, 3]]).is_err());
        assert!(ReverseSsyt::new(vec![vec![2], vec![2]]).is_err());
        assert!(ReverseSsyt::new(vec![vec![0]]).is_err());
    }

    #[test]
    fn counts_above_is_conjugate_of_entry_excess() {
        let t: ReverseSsyt = "7,4,4;4,2;3,1".parse().unwrap();
        let excess = Partition::from_unsorted(t.sorted_entries().iter().map(|e| e - 1).collect());
        assert_eq!(t.counts_above(), excess.conjugate());
    }

    #[test]
    fn phi_a_worked_example() {
        let input: ReverseSsyt = "7,4,4;4,2;3,1".parse().unwrap();
        let (t, delta) = phi_a(&input);
        assert_eq!(t.to_string(), "1,3,4;2,6;5,7");
        assert_eq!(t.des_set(), vec![1, 4, 6]);
        assert_eq!(delta, vec![2, 0, 0, 0, 1, 0, 0]);
        assert_eq!(phi_a_inverse(&t, &delta).unwrap(), input);
    }

    #[test]
    fn phi_b_worked_example() {
        let input: ReverseSsytB = "11,7,3;3|10,8;2".parse().unwrap();
        let (t, delta) = phi_b(&input);
        assert_eq!(t.to_string(), "1,4,6;5|2,3;7");
        assert_eq!(t.des_set(), vec![1, 4, 6]);
        assert_eq!(t.neg_set(), vec![2, 3, 7]);
        assert_eq!(t.f_vector(), vec![6, 5, 5, 4, 2, 2, 1]);
        assert_eq!(delta, vec![0, 1, 0, 1, 0, 0, 0]);
        assert_eq!(phi_b_inverse(&t, &delta).unwrap(), input);
    }

    #[test]
    fn phi_a_round_trip_small_shapes() {
        for n in 1..=4 {
            for p in partitions_of(n) {
                for t in enumerate_rssyt(&p, 5, None).unwrap() {
                    let (st, delta) = phi_a(&t);
                    assert_eq!(phi_a_inverse(&st, &delta).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn rssyt_enumeration_respects_caps() {
        let all = enumerate_rssyt(&shape("2,1"), 4, None).unwrap();
        assert!(all
            .iter()
            .all(|t| t.rows().iter().flatten().all(|&e| e <= 4)));
        let light = enumerate_rssyt(&shape("2,1"), 4, Some(2)).unwrap();
        assert!(light.iter().all(|t| t.weight() <= 2));
        assert!(light.len() < all.len());
        // Entry parity split.
        let b = enumerate_rssyt_b(&shape("1"), &shape("1"), 4, None).unwrap();
        assert_eq!(b.len(), 4); // first in {1,3}, second in {2,4}
    }

    #[test]
    fn partition_generators() {
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(0).len(), 1);
        let bounded = partitions_bounded(2, 3);
        // (), (3), (2), (2,1), (1), (1,1)
        assert!(bounded.contains(&Partition::empty()));
        assert!(bounded.contains(&shape("2,1")));
        assert!(!bounded.iter().any(|p| p.num_parts() > 2 || p.size() > 3));
        assert_eq!(bounded.len(), 6);
        assert_eq!(bipartitions_of(2).len(), 5);
        assert_eq!(subsets_of_interval(3).len(), 8);
    }
}
