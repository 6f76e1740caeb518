//! Elements of the symmetric group `S_n` and the hyperoctahedral group `B_n`
//! in window notation, together with their descent statistics.
//!
//! A window is the value sequence `w(1), ..., w(n)`.  For `S_n` the entries
//! are `1..n`; for `B_n` they are signed, with every absolute value from
//! `1..n` occurring exactly once.  Statistics are always taken with respect
//! to the natural linear order on the integers, so the same descent scan
//! serves plain windows, signed windows, and arbitrary integer sequences.
//!
//! Conventions, for `w` a window of length `n`:
//!
//! - `Des(w) = { i in [n-1] : w(i) > w(i+1) }`, `des = |Des|`,
//!   `maj = sum of Des`;
//! - `d_i(w) = |{ j in Des(w) : j >= i }|`, so `d_1 = des` and
//!   `sum_i d_i = maj`;
//! - for signed `w`: `Neg(w) = { i : w(i) < 0 }`,
//!   `n_i(w) = |{ j in Neg(w) : j >= i }|`, `eps_i = [i in Neg(w)]`,
//!   `f_i = 2 d_i + eps_i`, `fmaj = 2 maj + neg`, `fdes = 2 des + eps_1`;
//! - `NDes(w) = Des(w) ⊎ Neg(w^{-1})` as a multiset, `ndes = |NDes|`,
//!   `nmaj = sum of NDes`.

use std::fmt;
use std::str::FromStr;

use crate::error::{check_capacity, Error, Result};

/// Largest `n` for which `S_n` is enumerated (8! = 40320 elements).
pub const ENUMERATE_A_MAX_N: usize = 8;

/// Largest `n` for which `B_n` is enumerated (2^6 * 6! = 46080 elements).
pub const ENUMERATE_B_MAX_N: usize = 6;

/// Descent statistics of a window over a linearly ordered alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStats {
    /// Descent positions, increasing, each in `[1, n-1]`.
    pub des_set: Vec<usize>,
    /// `d_i`, indexed by `i - 1`; weakly decreasing with steps in `{0, 1}`
    /// and `d_n = 0`.
    pub d_vector: Vec<usize>,
    /// Number of descents.
    pub des: usize,
    /// Major index: sum of the descent positions.
    pub maj: usize,
    /// Number of inversions.
    pub inv: usize,
}

/// Statistics of a signed window, extending [`DescentStats`] of the window
/// itself by the negative-entry data and the flag and negative statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedStats {
    /// Statistics of the window under the natural integer order.
    pub window: DescentStats,
    /// Positions carrying negative values, increasing, each in `[1, n]`.
    pub neg_set: Vec<usize>,
    /// `n_i`, indexed by `i - 1`.
    pub n_vector: Vec<usize>,
    /// `eps_i in {0, 1}`, indexed by `i - 1`.
    pub eps_vector: Vec<u8>,
    /// `f_i = 2 d_i + eps_i`, indexed by `i - 1`.
    pub f_vector: Vec<usize>,
    /// Flag descent number `2 des + eps_1`.
    pub fdes: usize,
    /// Flag major index `2 maj + neg`; equals the sum of the `f_i`.
    pub fmaj: usize,
    /// The multiset `Des(w) ⊎ Neg(w^{-1})`, sorted, duplicates kept.
    pub ndes_multiset: Vec<usize>,
    /// `|NDes|`.
    pub ndes: usize,
    /// Sum of `NDes` with multiplicity.
    pub nmaj: usize,
}

/// Descent statistics of an arbitrary nonempty integer sequence.
pub fn sequence_stats(window: &[i64]) -> Result<DescentStats> {
    if window.is_empty() {
        return Err(Error::Domain(
            "descent statistics are defined for nonempty sequences only".into(),
        ));
    }
    let n = window.len();
    let des_set: Vec<usize> = (1..n).filter(|&i| window[i - 1] > window[i]).collect();
    let mut d_vector = vec![0usize; n];
    for i in 1..=n {
        d_vector[i - 1] = des_set.iter().filter(|&&j| j >= i).count();
    }
    let mut inv = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            if window[i] > window[j] {
                inv += 1;
            }
        }
    }
    Ok(DescentStats {
        des: des_set.len(),
        maj: des_set.iter().sum(),
        des_set,
        d_vector,
        inv,
    })
}

/// A permutation of `{1, ..., n}` in window notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    /// The identity of `S_n`.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "S_n needs n >= 1");
        Permutation {
            window: (1..=n).collect(),
        }
    }

    /// Validates a window: nonempty, each value of `1..n` exactly once.
    pub fn from_window(window: Vec<usize>) -> Result<Self> {
        if window.is_empty() {
            return Err(Error::InvalidWindow("window is empty".into()));
        }
        let n = window.len();
        let mut seen = vec![false; n];
        for &v in &window {
            if v == 0 || v > n {
                return Err(Error::InvalidWindow(format!(
                    "value {v} is outside 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidWindow(format!("value {v} occurs twice")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { window })
    }

    /// Degree `n`.
    pub fn n(&self) -> usize {
        self.window.len()
    }

    /// The window as a slice of values `w(1), ..., w(n)`.
    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// Image of `i` (1-based).
    ///
    /// # Panics
    ///
    /// Panics unless `1 <= i <= n`.
    pub fn image(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    /// Group inverse.
    pub fn invert(&self) -> Self {
        let n = self.n();
        let mut window = vec![0usize; n];
        for i in 1..=n {
            window[self.image(i) - 1] = i;
        }
        Permutation { window }
    }

    /// Composition `self * other`, acting as `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(self.n(), other.n()));
        }
        let window = (1..=self.n()).map(|i| self.image(other.image(i))).collect();
        Ok(Permutation { window })
    }

    /// Descent statistics of the window.
    pub fn stats(&self) -> DescentStats {
        let ints: Vec<i64> = self.window.iter().map(|&v| v as i64).collect();
        sequence_stats(&ints).expect("window is nonempty")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.window.iter())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = parse_window_entries(s)?;
        let mut window = Vec::with_capacity(entries.len());
        for v in entries {
            if v <= 0 {
                return Err(Error::Parse(format!(
                    "permutation entries must be positive, got {v}"
                )));
            }
            window.push(v as usize);
        }
        Permutation::from_window(window)
    }
}

/// A signed permutation: a window with every absolute value of `1..n`
/// occurring exactly once, each with a sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i64>,
}

impl SignedPermutation {
    /// The identity of `B_n`.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "B_n needs n >= 1");
        SignedPermutation {
            window: (1..=n as i64).collect(),
        }
    }

    /// Validates a signed window: nonzero entries whose absolute values are
    /// exactly `1..n`.
    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        if window.is_empty() {
            return Err(Error::InvalidWindow("window is empty".into()));
        }
        let n = window.len();
        let mut seen = vec![false; n];
        for &v in &window {
            if v == 0 {
                return Err(Error::InvalidWindow("value 0 is not allowed".into()));
            }
            let a = v.unsigned_abs() as usize;
            if a > n {
                return Err(Error::InvalidWindow(format!(
                    "absolute value {a} is outside 1..={n}"
                )));
            }
            if seen[a - 1] {
                return Err(Error::InvalidWindow(format!(
                    "absolute value {a} occurs twice"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { window })
    }

    /// Embeds a plain permutation as an all-positive signed permutation.
    pub fn from_permutation(p: &Permutation) -> Self {
        SignedPermutation {
            window: p.window().iter().map(|&v| v as i64).collect(),
        }
    }

    /// Degree `n`.
    pub fn n(&self) -> usize {
        self.window.len()
    }

    /// The window as a slice of signed values.
    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// Image of `i` (1-based).
    ///
    /// # Panics
    ///
    /// Panics unless `1 <= i <= n`.
    pub fn image(&self, i: usize) -> i64 {
        self.window[i - 1]
    }

    /// The underlying unsigned permutation `i -> |w(i)|`.
    pub fn abs(&self) -> Permutation {
        Permutation::from_window(self.window.iter().map(|&v| v.unsigned_abs() as usize).collect())
            .expect("absolute values form a permutation")
    }

    /// Group inverse, using `w^{-1}(-a) = -w^{-1}(a)`.
    pub fn invert(&self) -> Self {
        let n = self.n();
        let mut window = vec![0i64; n];
        for i in 1..=n {
            let v = self.image(i);
            let a = v.unsigned_abs() as usize;
            window[a - 1] = if v > 0 { i as i64 } else { -(i as i64) };
        }
        SignedPermutation { window }
    }

    /// Composition `self * other`, acting as `(self * other)(i) = self(other(i))`
    /// with `self(-a) = -self(a)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(self.n(), other.n()));
        }
        let window = (1..=self.n())
            .map(|i| {
                let t = other.image(i);
                let s = self.image(t.unsigned_abs() as usize);
                if t > 0 {
                    s
                } else {
                    -s
                }
            })
            .collect();
        Ok(SignedPermutation { window })
    }

    /// Positions of the negative entries, increasing.
    pub fn neg_set(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.image(i) < 0).collect()
    }

    /// Full statistics of the signed window, including the statistics of the
    /// inverse needed for the negative-descent multiset.
    pub fn stats(&self) -> SignedStats {
        let n = self.n();
        let window = sequence_stats(&self.window).expect("window is nonempty");
        let neg_set = self.neg_set();
        let mut n_vector = vec![0usize; n];
        for i in 1..=n {
            n_vector[i - 1] = neg_set.iter().filter(|&&j| j >= i).count();
        }
        let eps_vector: Vec<u8> = (1..=n)
            .map(|i| u8::from(self.image(i) < 0))
            .collect();
        let f_vector: Vec<usize> = (0..n)
            .map(|i| 2 * window.d_vector[i] + eps_vector[i] as usize)
            .collect();
        let fdes = 2 * window.des + eps_vector[0] as usize;
        let fmaj = 2 * window.maj + neg_set.len();
        let mut ndes_multiset = window.des_set.clone();
        ndes_multiset.extend(self.invert().neg_set());
        ndes_multiset.sort_unstable();
        let ndes = ndes_multiset.len();
        let nmaj = ndes_multiset.iter().sum();
        SignedStats {
            window,
            neg_set,
            n_vector,
            eps_vector,
            f_vector,
            fdes,
            fmaj,
            ndes_multiset,
            ndes,
            nmaj,
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.window.iter())
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SignedPermutation::from_window(parse_window_entries(s)?)
    }
}

/// All of `S_n` in lexicographic window order.
pub fn enumerate_sn(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::Domain("S_n enumeration needs n >= 1".into()));
    }
    check_capacity("n", n, ENUMERATE_A_MAX_N)?;
    let mut out = Vec::new();
    let mut window: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation {
            window: window.clone(),
        });
        if !next_lex(&mut window) {
            break;
        }
    }
    Ok(out)
}

/// All of `B_n` in lexicographic window order (natural integer order on
/// entries, so `-n, ..., -1, 1, ..., n` ascending).
pub fn enumerate_bn(n: usize) -> Result<Vec<SignedPermutation>> {
    if n == 0 {
        return Err(Error::Domain("B_n enumeration needs n >= 1".into()));
    }
    check_capacity("n", n, ENUMERATE_B_MAX_N)?;
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut window = Vec::with_capacity(n);
    fill_signed(n, &mut used, &mut window, &mut out);
    Ok(out)
}

fn fill_signed(
    n: usize,
    used: &mut Vec<bool>,
    window: &mut Vec<i64>,
    out: &mut Vec<SignedPermutation>,
) {
    if window.len() == n {
        out.push(SignedPermutation {
            window: window.clone(),
        });
        return;
    }
    for v in (-(n as i64)..=n as i64).filter(|&v| v != 0) {
        let a = v.unsigned_abs() as usize;
        if used[a - 1] {
            continue;
        }
        used[a - 1] = true;
        window.push(v);
        fill_signed(n, used, window, out);
        window.pop();
        used[a - 1] = false;
    }
}

/// Advances `window` to its lexicographic successor; false at the maximum.
fn next_lex(window: &mut [usize]) -> bool {
    let n = window.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && window[i - 1] >= window[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while window[j] <= window[i - 1] {
        j -= 1;
    }
    window.swap(i - 1, j);
    window[i..].reverse();
    true
}

fn write_joined<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    values: impl Iterator<Item = T>,
) -> fmt::Result {
    let mut first = true;
    for v in values {
        if !first {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
        first = false;
    }
    Ok(())
}

/// Splits a comma-separated window; accepts U+2212 as a minus sign.
fn parse_window_entries(s: &str) -> Result<Vec<i64>> {
    let normalized = s.replace('\u{2212}', "-");
    let trimmed = normalized.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty window".into()));
    }
    trimmed
        .split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad window entry {piece:?}")))
        })
        .collect()
}
