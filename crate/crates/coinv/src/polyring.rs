//! Sparse multivariate polynomials over an exact coefficient ring, together
//! with the monomial bookkeeping the straightening algorithms rely on:
//!
//! - [`analyze_a`]: the index permutation obtained by sorting variables by
//!   exponent (decreasing) then index (increasing), the exponent partition,
//!   and the complementary partition conjugate to the gaps
//!   `exponent - d_i`;
//! - [`analyze_b`]: the signed analogue, sorting by exponent then signed
//!   value, with gaps `(exponent - f_i) / 2`;
//! - the partial orders [`cmp_a`] and [`cmp_b`] on monomials of equal total
//!   degree (dominance on exponent partitions, inversion-number tie-break,
//!   and, in type B, agreement of exponents modulo 2 variable by variable);
//! - elementary, power-sum, and Schur symmetric polynomials;
//! - the variable-permuting (and sign-flipping) group action.
//!
//! Coefficients are any exact ring implementing [`Coeff`]; the crate root
//! exposes `BigInt` and `BigRational` aliases.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Neg, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groups::{Permutation, SignedPermutation};
use crate::shapes::{Partition, PosetCmp};

/// Exponent of a single variable.
pub type Exp = u32;

/// Coefficient ring contract: an exact commutative ring with negation.
pub trait Coeff:
    Clone + Eq + Zero + One + Neg<Output = Self> + AddAssign + SubAssign
{
}

impl<T> Coeff for T where
    T: Clone + Eq + Zero + One + Neg<Output = T> + AddAssign + SubAssign
{
}

/// A monomial in a fixed number of variables, stored as its full exponent
/// vector.  The derived `Ord` (lexicographic on the vector) fixes the
/// deterministic storage order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<Exp>,
}

impl Monomial {
    pub fn new(exps: Vec<Exp>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial in `n` variables.
    pub fn unit(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The single variable `x_i`, 1-based.
    pub fn variable(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable index {i} out of 1..={n}");
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn total_degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.n(), other.n(), "variable count mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    /// Componentwise quotient, if `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.n(), other.n(), "variable count mismatch");
        let mut exps = Vec::with_capacity(self.n());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    /// Doubles every exponent: the image under `x_i -> x_i^2`.
    pub fn squared(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| 2 * e).collect(),
        }
    }

    /// The exponent partition: exponents sorted decreasingly.
    pub fn exponent_partition(&self) -> Partition {
        Partition::from_unsorted(self.exps.iter().map(|&e| e as usize).collect())
    }
}

impl fmt::Display for Monomial {
    /// Comma-separated exponent vector: `2,3,2,0,1,3,0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.exps {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let exps: Vec<Exp> = s
            .trim()
            .split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse::<Exp>()
                    .map_err(|_| Error::Parse(format!("bad exponent {piece:?}")))
            })
            .collect::<Result<_>>()?;
        if exps.is_empty() {
            return Err(Error::Parse("empty exponent vector".into()));
        }
        Ok(Monomial { exps })
    }
}

/// Monomial data driving the type A straightening step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialAnalysis {
    /// Variables sorted by exponent (decreasing), index (increasing).
    pub index_perm: Permutation,
    /// Exponents sorted decreasingly.
    pub exponent_partition: Partition,
    /// Conjugate of the gap vector `exponent_i - d_i(index_perm)`.
    pub complementary: Partition,
}

/// Monomial data driving the type B straightening step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMonomialAnalysis {
    /// Variables sorted by exponent (decreasing) then signed value
    /// (increasing), where variable `i` carries value `-i` when its
    /// exponent is odd and `+i` when even.
    pub signed_index_perm: SignedPermutation,
    pub exponent_partition: Partition,
    /// Conjugate of the halved gap vector `(exponent_i - f_i) / 2`.
    pub complementary: Partition,
}

/// Sorts the variables of `m` by exponent (decreasing), breaking ties by
/// index (increasing), and extracts the partitions controlling the
/// straightening of `m`.
pub fn analyze_a(m: &Monomial) -> MonomialAnalysis {
    let n = m.n();
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by(|&a, &b| m.exps[b - 1].cmp(&m.exps[a - 1]).then(a.cmp(&b)));
    let index_perm = Permutation::from_window(order).expect("sorted indices form a window");
    let d = index_perm.stats().d_vector;
    let gaps: Vec<usize> = index_perm
        .window()
        .iter()
        .zip(&d)
        .map(|(&var, &di)| {
            let p = m.exps[var - 1] as usize;
            debug_assert!(p >= di, "gap must be nonnegative");
            p - di
        })
        .collect();
    let complementary = Partition::new(gaps)
        .expect("gaps weakly decrease")
        .conjugate();
    MonomialAnalysis {
        index_perm,
        exponent_partition: m.exponent_partition(),
        complementary,
    }
}

/// Signed analogue of [`analyze_a`]: variable `i` carries the signed value
/// `-i` when its exponent is odd and `+i` when even; sorting is by exponent
/// (decreasing) then signed value (increasing).
pub fn analyze_b(m: &Monomial) -> SignedMonomialAnalysis {
    let n = m.n();
    let mut values: Vec<i64> = (1..=n as i64)
        .map(|i| if m.exps[i as usize - 1] % 2 == 1 { -i } else { i })
        .collect();
    values.sort_by(|&a, &b| {
        let pa = m.exps[a.unsigned_abs() as usize - 1];
        let pb = m.exps[b.unsigned_abs() as usize - 1];
        pb.cmp(&pa).then(a.cmp(&b))
    });
    let signed_index_perm =
        SignedPermutation::from_window(values).expect("sorted signed values form a window");
    let f = signed_index_perm.stats().f_vector;
    let gaps: Vec<usize> = signed_index_perm
        .window()
        .iter()
        .zip(&f)
        .map(|(&val, &fi)| {
            let p = m.exps[val.unsigned_abs() as usize - 1] as usize;
            debug_assert!(p >= fi && (p - fi) % 2 == 0, "halved gap must be integral");
            (p - fi) / 2
        })
        .collect();
    let complementary = Partition::new(gaps)
        .expect("halved gaps weakly decrease")
        .conjugate();
    SignedMonomialAnalysis {
        signed_index_perm,
        exponent_partition: m.exponent_partition(),
        complementary,
    }
}

/// The descent basis monomial of a permutation: variable `w(i)` carries
/// exponent `d_i(w)`.
pub fn descent_monomial(w: &Permutation) -> Monomial {
    let d = w.stats().d_vector;
    let mut exps = vec![0 as Exp; w.n()];
    for (i, &var) in w.window().iter().enumerate() {
        exps[var - 1] = d[i] as Exp;
    }
    Monomial { exps }
}

/// The signed descent basis monomial: variable `|w(i)|` carries exponent
/// `f_i(w) = 2 d_i + eps_i`.
pub fn signed_descent_monomial(w: &SignedPermutation) -> Monomial {
    let f = w.stats().f_vector;
    let mut exps = vec![0 as Exp; w.n()];
    for (i, &val) in w.window().iter().enumerate() {
        exps[val.unsigned_abs() as usize - 1] = f[i] as Exp;
    }
    Monomial { exps }
}

/// Partial order on monomials of equal total degree: `Less` when the
/// exponent partition of `a` is strictly dominated by that of `b`, or the
/// partitions coincide and the index permutation of `a` has strictly more
/// inversions.  Distinct monomials tie on both criteria as `Incomparable`.
pub fn cmp_a(a: &Monomial, b: &Monomial) -> Result<PosetCmp> {
    if a.total_degree() != b.total_degree() {
        return Err(Error::DegreeMismatch(a.total_degree(), b.total_degree()));
    }
    if a == b {
        return Ok(PosetCmp::Equal);
    }
    let la = a.exponent_partition();
    let lb = b.exponent_partition();
    match la.dominance_cmp(&lb)? {
        PosetCmp::Less => Ok(PosetCmp::Less),
        PosetCmp::Greater => Ok(PosetCmp::Greater),
        PosetCmp::Incomparable => Ok(PosetCmp::Incomparable),
        PosetCmp::Equal => {
            let ia = analyze_a(a).index_perm.stats().inv;
            let ib = analyze_a(b).index_perm.stats().inv;
            Ok(if ia > ib {
                PosetCmp::Less
            } else if ia < ib {
                PosetCmp::Greater
            } else {
                PosetCmp::Incomparable
            })
        }
    }
}

/// Type B refinement of [`cmp_a`]: comparable only when the exponents agree
/// variable by variable modulo 2; the tie-break counts inversions of the
/// signed index permutation's window.  Parity agreement fixes the set of
/// negative window entries, so this tie-break coincides with comparing
/// hyperoctahedral lengths.
pub fn cmp_b(a: &Monomial, b: &Monomial) -> Result<PosetCmp> {
    if a.total_degree() != b.total_degree() {
        return Err(Error::DegreeMismatch(a.total_degree(), b.total_degree()));
    }
    if a == b {
        return Ok(PosetCmp::Equal);
    }
    assert_eq!(a.n(), b.n(), "variable count mismatch");
    if a.exps.iter().zip(&b.exps).any(|(&x, &y)| x % 2 != y % 2) {
        return Ok(PosetCmp::Incomparable);
    }
    let la = a.exponent_partition();
    let lb = b.exponent_partition();
    match la.dominance_cmp(&lb)? {
        PosetCmp::Less => Ok(PosetCmp::Less),
        PosetCmp::Greater => Ok(PosetCmp::Greater),
        PosetCmp::Incomparable => Ok(PosetCmp::Incomparable),
        PosetCmp::Equal => {
            let ia = analyze_b(a).signed_index_perm.stats().window.inv;
            let ib = analyze_b(b).signed_index_perm.stats().window.inv;
            Ok(if ia > ib {
                PosetCmp::Less
            } else if ia < ib {
                PosetCmp::Greater
            } else {
                PosetCmp::Incomparable
            })
        }
    }
}

/// A sparse polynomial: a map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly<C> {
    n: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(n: usize) -> Self {
        MPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Monomial::unit(n), c);
        p
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut p = Self::zero(m.n());
        p.add_term(m, c);
        p
    }

    /// The single variable `x_i` (1-based) in `n` variables.
    pub fn variable(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::variable(n, i), C::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the deterministic monomial storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, C)> {
        self.terms.into_iter()
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c * m`, dropping the term if the sum cancels.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        assert_eq!(m.n(), self.n, "variable count mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MPoly<C>) {
        assert_eq!(self.n, other.n, "variable count mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &MPoly<C>) {
        assert_eq!(self.n, other.n, "variable count mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    pub fn add(&self, other: &MPoly<C>) -> MPoly<C> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &MPoly<C>) -> MPoly<C> {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn neg(&self) -> MPoly<C> {
        let mut out = MPoly::zero(self.n);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MPoly<C>) -> MPoly<C> {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut out = MPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> MPoly<C> {
        let mut out = MPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            out.add_term(ma.mul(m), ca.clone() * c.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> MPoly<C> {
        let mut out = MPoly::zero(self.n);
        for (m, ca) in &self.terms {
            out.add_term(m.clone(), ca.clone() * c.clone());
        }
        out
    }

    /// The image under `x_i -> x_i^2`.
    pub fn squared_variables(&self) -> MPoly<C> {
        let mut out = MPoly::zero(self.n);
        for (m, c) in &self.terms {
            out.terms.insert(m.squared(), c.clone());
        }
        out
    }

    /// Total degree if every term shares it; the zero polynomial reports
    /// degree zero.
    pub fn degree_if_homogeneous(&self) -> Option<usize> {
        let mut degree = None;
        for m in self.terms.keys() {
            let d = m.total_degree();
            match degree {
                None => degree = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        Some(degree.unwrap_or(0))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut out = MPoly::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for MPoly<C> {
    /// Terms in storage order as `coeff:exponents`, joined by `;`; the zero
    /// polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "{c}:{m}")?;
            first = false;
        }
        Ok(())
    }
}

/// The elementary symmetric polynomial `e_k` in `n` variables (`e_0 = 1`,
/// zero for `k > n`).
pub fn elementary<C: Coeff>(n: usize, k: usize) -> MPoly<C> {
    let mut out = MPoly::zero(n);
    if k > n {
        return out;
    }
    let mut subset: Vec<usize> = Vec::with_capacity(k);
    fn rec<C: Coeff>(start: usize, k: usize, n: usize, subset: &mut Vec<usize>, out: &mut MPoly<C>) {
        if subset.len() == k {
            let mut exps = vec![0 as Exp; n];
            for &i in subset.iter() {
                exps[i - 1] = 1;
            }
            out.add_term(Monomial::new(exps), C::one());
            return;
        }
        for i in start..=n {
            subset.push(i);
            rec(i + 1, k, n, subset, out);
            subset.pop();
        }
    }
    rec(1, k, n, &mut subset, &mut out);
    out
}

/// The power sum `p_k = x_1^k + ... + x_n^k` for `k >= 1`; `p_0 = n`.
pub fn power_sum<C: Coeff>(n: usize, k: usize) -> MPoly<C> {
    let mut out = MPoly::zero(n);
    if k == 0 {
        for _ in 0..n {
            out.add_term(Monomial::unit(n), C::one());
        }
        return out;
    }
    for i in 1..=n {
        let mut exps = vec![0 as Exp; n];
        exps[i - 1] = k as Exp;
        out.add_term(Monomial::new(exps), C::one());
    }
    out
}

/// The Schur polynomial of the given shape in `n` variables, as a sum over
/// semistandard tableaux with entries at most `n`; zero when the shape has
/// more than `n` rows.
pub fn schur<C: Coeff>(shape: &Partition, n: usize) -> Result<MPoly<C>> {
    let mut out = MPoly::zero(n);
    if shape.is_empty() {
        out.add_term(Monomial::unit(n), C::one());
        return Ok(out);
    }
    if shape.num_parts() > n {
        return Ok(out);
    }
    // Reverse tableaux with entries <= n map to semistandard tableaux by
    // t -> n + 1 - t, so either enumeration yields the same polynomial.
    for t in crate::shapes::enumerate_rssyt(shape, n, None)? {
        let mut exps = vec![0 as Exp; n];
        for row in t.rows() {
            for &e in row {
                exps[n - e] += 1;
            }
        }
        out.add_term(Monomial::new(exps), C::one());
    }
    Ok(out)
}

/// Product of elementary symmetric polynomials indexed by the parts of
/// `shape`, optionally in the squared variables.
pub fn elementary_product<C: Coeff>(shape: &Partition, n: usize, squared: bool) -> MPoly<C> {
    let mut out = MPoly::one(n);
    for &part in shape.parts() {
        let factor: MPoly<C> = elementary(n, part);
        let factor = if squared {
            factor.squared_variables()
        } else {
            factor
        };
        out = out.mul(&factor);
    }
    out
}

/// All monomials in `n` variables of total degree exactly `d`, first
/// variable's exponent decreasing.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0 as Exp; n];
    fn rec(pos: usize, remaining: usize, exps: &mut Vec<Exp>, out: &mut Vec<Monomial>) {
        if pos + 1 == exps.len() {
            exps[pos] = remaining as Exp;
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in (0..=remaining).rev() {
            exps[pos] = e as Exp;
            rec(pos + 1, remaining - e, exps, out);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out
}

/// All monomials in `n` variables of total degree at most `d`, by degree.
pub fn monomials_up_to(n: usize, d: usize) -> Vec<Monomial> {
    (0..=d).flat_map(|k| monomials_of_degree(n, k)).collect()
}

/// How a group element moves variables: variable `i` (1-based) is sent to
/// `x_target`, negated when `flip` is set.
pub trait VariableAction {
    fn n(&self) -> usize;
    /// `(target, flip)` for variable `i`.
    fn image_var(&self, i: usize) -> (usize, bool);
}

impl VariableAction for Permutation {
    fn n(&self) -> usize {
        Permutation::n(self)
    }

    fn image_var(&self, i: usize) -> (usize, bool) {
        (self.image(i), false)
    }
}

impl VariableAction for SignedPermutation {
    fn n(&self) -> usize {
        SignedPermutation::n(self)
    }

    fn image_var(&self, i: usize) -> (usize, bool) {
        let v = self.image(i);
        (v.unsigned_abs() as usize, v < 0)
    }
}

/// Applies `g` to a monomial: exponent `a_i` moves to variable `g(i)`; the
/// sign is negative when an odd exponent lands on a negated variable an odd
/// number of times in total.
pub fn act_monomial<G: VariableAction>(g: &G, m: &Monomial) -> (Monomial, bool) {
    assert_eq!(g.n(), m.n(), "variable count mismatch");
    let mut exps = vec![0 as Exp; m.n()];
    let mut negative = false;
    for (i, &a) in m.exps().iter().enumerate() {
        let (target, flip) = g.image_var(i + 1);
        exps[target - 1] += a;
        if flip && a % 2 == 1 {
            negative = !negative;
        }
    }
    (Monomial::new(exps), negative)
}

/// Applies `g` to every term of `p`.
pub fn act<G: VariableAction, C: Coeff>(g: &G, p: &MPoly<C>) -> MPoly<C> {
    let mut out = MPoly::zero(p.n());
    for (m, c) in p.terms() {
        let (image, negative) = act_monomial(g, m);
        let coeff = if negative { -c.clone() } else { c.clone() };
        out.add_term(image, coeff);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{enumerate_bn, enumerate_sn};
    use crate::Int;

    fn mono(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn shape(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_basics() {
        let m = mono("2,3,2,0,1,3,0");
        assert_eq!(m.n(), 7);
        assert_eq!(m.total_degree(), 11);
        assert_eq!(m.to_string(), "2,3,2,0,1,3,0");
        assert_eq!(m.exponent_partition(), shape("3,3,2,2,1"));
        let v = Monomial::variable(3, 2);
        assert_eq!(v.to_string(), "0,1,0");
        assert_eq!(v.mul(&v).to_string(), "0,2,0");
        assert_eq!(m.try_div(&mono("1,1,1,0,0,1,0")).unwrap().to_string(), "1,2,1,0,1,2,0");
        assert_eq!(m.try_div(&mono("3,0,0,0,0,0,0")), None);
        assert!("".parse::<Monomial>().is_err());
        assert!("1,x".parse::<Monomial>().is_err());
    }

    #[test]
    fn index_permutation_and_complement() {
        let m = mono("2,3,2,0,1,3,0");
        let a = analyze_a(&m);
        assert_eq!(a.index_perm.to_string(), "2,6,1,3,5,4,7");
        assert_eq!(a.exponent_partition, shape("3,3,2,2,1"));
        assert_eq!(a.complementary, shape("4"));
        // The monomial splits as its descent monomial times one monomial of
        // the complementary elementary product.
        let lead = descent_monomial(&a.index_perm);
        assert_eq!(lead.to_string(), "1,2,1,0,1,2,0");
        let quotient = m.try_div(&lead).unwrap();
        assert_eq!(quotient.total_degree(), 4);
        assert_eq!(quotient.to_string(), "1,1,1,0,0,1,0");
    }

    #[test]
    fn signed_index_permutation_and_complement() {
        let m = mono("2,3,2,0,1,3,0");
        let a = analyze_b(&m);
        assert_eq!(a.signed_index_perm.to_string(), "-6,-2,1,3,-5,4,7");
        assert_eq!(a.complementary, Partition::empty());
        // With empty complement the monomial is its own signed descent
        // monomial.
        assert_eq!(signed_descent_monomial(&a.signed_index_perm), m);
    }

    #[test]
    fn descent_monomial_degree_is_maj() {
        for w in enumerate_sn(5).unwrap() {
            let m = descent_monomial(&w);
            assert_eq!(m.total_degree(), w.stats().maj);
            // Round trip: the index permutation of a descent monomial with
            // distinct-exponent blocks recovers w.
            assert_eq!(analyze_a(&m).index_perm, w);
            assert_eq!(analyze_a(&m).complementary, Partition::empty());
        }
    }

    #[test]
    fn signed_descent_monomial_degree_is_fmaj() {
        for w in enumerate_bn(3).unwrap() {
            let m = signed_descent_monomial(&w);
            assert_eq!(m.total_degree(), w.stats().fmaj);
            assert_eq!(analyze_b(&m).signed_index_perm, w);
            assert_eq!(analyze_b(&m).complementary, Partition::empty());
        }
    }

    #[test]
    fn order_a_cases() {
        // Dominance separates first.
        assert_eq!(
            cmp_a(&mono("1,1"), &mono("0,2")).unwrap(),
            PosetCmp::Less
        );
        // Equal partitions fall back to inversion count: more inversions is
        // smaller.
        assert_eq!(cmp_a(&mono("0,1"), &mono("1,0")).unwrap(), PosetCmp::Less);
        assert_eq!(cmp_a(&mono("1,0"), &mono("0,1")).unwrap(), PosetCmp::Greater);
        // Equal partition and inversion number: incomparable.
        assert_eq!(
            cmp_a(&mono("1,0,0,1"), &mono("0,1,1,0")).unwrap(),
            PosetCmp::Incomparable
        );
        assert_eq!(cmp_a(&mono("1,1"), &mono("1,1")).unwrap(), PosetCmp::Equal);
        assert!(cmp_a(&mono("1,1"), &mono("1,0")).is_err());
    }

    #[test]
    fn order_b_requires_parity_agreement() {
        assert_eq!(cmp_b(&mono("1,0"), &mono("0,1")).unwrap(), PosetCmp::Incomparable);
        assert_eq!(cmp_b(&mono("0,2"), &mono("2,0")).unwrap(), PosetCmp::Less);
        assert_eq!(
            cmp_b(&mono("1,1,0"), &mono("1,0,1")).unwrap(),
            PosetCmp::Incomparable
        );
        assert_eq!(
            cmp_b(&mono("2,1,1"), &mono("0,1,3")).unwrap(),
            PosetCmp::Less
        );
        // Equal partitions of odd exponents: x1^3 x2 has signed index
        // window [-1,-2] with one inversion, x1 x2^3 has [-2,-1] with
        // none, so the former is strictly smaller.  The unsigned windows
        // would order these the other way around.
        assert_eq!(cmp_b(&mono("3,1"), &mono("1,3")).unwrap(), PosetCmp::Less);
        assert_eq!(cmp_b(&mono("1,3"), &mono("3,1")).unwrap(), PosetCmp::Greater);
    }

    #[test]
    fn polynomial_arithmetic() {
        let x1: MPoly<Int> = MPoly::variable(2, 1);
        let x2: MPoly<Int> = MPoly::variable(2, 2);
        let s = x1.add(&x2);
        let sq = s.mul(&s);
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.coeff(&mono("1,1")), Int::from(2));
        assert_eq!(sq.coeff(&mono("2,0")), Int::from(1));
        let cancel = sq.sub(&sq);
        assert!(cancel.is_zero());
        assert_eq!(sq.degree_if_homogeneous(), Some(2));
        assert_eq!(s.add(&MPoly::one(2)).degree_if_homogeneous(), None);
        assert_eq!(sq.to_string(), "1:0,2;2:1,1;1:2,0");
        assert_eq!(MPoly::<Int>::zero(2).to_string(), "0");
    }

    #[test]
    fn symmetric_generators() {
        let e2: MPoly<Int> = elementary(3, 2);
        assert_eq!(e2.num_terms(), 3);
        assert_eq!(e2.coeff(&mono("1,0,1")), Int::from(1));
        assert!(elementary::<Int>(3, 4).is_zero());
        assert_eq!(elementary::<Int>(3, 0), MPoly::one(3));
        let p2: MPoly<Int> = power_sum(2, 2);
        assert_eq!(p2.coeff(&mono("2,0")), Int::from(1));
        assert_eq!(p2.num_terms(), 2);
        assert_eq!(power_sum::<Int>(3, 0), MPoly::constant(3, Int::from(3)));
        // e_1(x^2) doubles exponents.
        let e1sq: MPoly<Int> = elementary::<Int>(2, 1).squared_variables();
        assert_eq!(e1sq, power_sum(2, 2));
        let prod: MPoly<Int> = elementary_product(&shape("2,1"), 3, false);
        assert_eq!(prod, elementary::<Int>(3, 2).mul(&elementary(3, 1)));
    }

    #[test]
    fn schur_polynomials() {
        // s_{2,1} = e_2 e_1 - e_3.
        let s21: MPoly<Int> = schur(&shape("2,1"), 3).unwrap();
        let expected = elementary::<Int>(3, 2)
            .mul(&elementary(3, 1))
            .sub(&elementary(3, 3));
        assert_eq!(s21, expected);
        assert_eq!(s21.num_terms(), 7);
        assert_eq!(s21.coeff(&mono("1,1,1")), Int::from(2));
        // Single column: e_k.  Single row with 2 variables: complete sum.
        assert_eq!(schur::<Int>(&shape("1,1"), 3).unwrap(), elementary(3, 2));
        assert_eq!(schur::<Int>(&shape("2"), 2).unwrap().num_terms(), 3);
        // Too many rows: zero.
        assert!(schur::<Int>(&shape("1,1,1"), 2).unwrap().is_zero());
        assert_eq!(schur::<Int>(&Partition::empty(), 2).unwrap(), MPoly::one(2));
    }

    #[test]
    fn schur_matches_direct_ssyt_enumeration() {
        // Independent oracle: fill cells with weakly increasing rows and
        // strictly increasing columns directly.
        fn direct(shape: &Partition, n: usize) -> MPoly<Int> {
            let parts = shape.parts().to_vec();
            let cells: Vec<(usize, usize)> = parts
                .iter()
                .enumerate()
                .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
                .collect();
            let mut rows: Vec<Vec<usize>> = parts.iter().map(|&l| vec![0; l]).collect();
            let mut out = MPoly::zero(n);
            fn rec(
                k: usize,
                cells: &[(usize, usize)],
                rows: &mut Vec<Vec<usize>>,
                n: usize,
                out: &mut MPoly<Int>,
            ) {
                if k == cells.len() {
                    let mut exps = vec![0 as Exp; n];
                    for row in rows.iter() {
                        for &e in row.iter().filter(|&&e| e > 0) {
                            exps[e - 1] += 1;
                        }
                    }
                    out.add_term(Monomial::new(exps), Int::from(1));
                    return;
                }
                let (r, c) = cells[k];
                let lo = {
                    let mut lo = 1;
                    if c > 0 {
                        lo = lo.max(rows[r][c - 1]);
                    }
                    if r > 0 {
                        lo = lo.max(rows[r - 1][c] + 1);
                    }
                    lo
                };
                for v in lo..=n {
                    rows[r][c] = v;
                    rec(k + 1, cells, rows, n, out);
                }
                rows[r][c] = 0;
            }
            rec(0, &cells, &mut rows, n, &mut out);
            out
        }
        for n in 1..=3 {
            for size in 1..=4 {
                for p in crate::shapes::partitions_of(size) {
                    assert_eq!(schur::<Int>(&p, n).unwrap(), direct(&p, n), "shape {p}, n {n}");
                }
            }
        }
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(2, 2).len(), 3);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_up_to(2, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 4)[0].to_string(), "4");
        // Deterministic order: leading exponent decreasing.
        let ms = monomials_of_degree(2, 2);
        assert_eq!(ms[0].to_string(), "2,0");
        assert_eq!(ms[2].to_string(), "0,2");
    }

    #[test]
    fn permutation_action() {
        let g: Permutation = "2,1".parse().unwrap();
        let x1: MPoly<Int> = MPoly::variable(2, 1);
        assert_eq!(act(&g, &x1), MPoly::variable(2, 2));
        let e2: MPoly<Int> = elementary(4, 2);
        for w in enumerate_sn(4).unwrap() {
            assert_eq!(act(&w, &e2), e2, "e_2 is symmetric");
        }
    }

    #[test]
    fn signed_action_tracks_parity() {
        let flip: SignedPermutation = "-1".parse().unwrap();
        let x: MPoly<Int> = MPoly::variable(1, 1);
        assert_eq!(act(&flip, &x), x.neg());
        let xsq = x.mul(&x);
        assert_eq!(act(&flip, &xsq), xsq);
        // e_2 in squared variables is invariant under all of B_3.
        let inv: MPoly<Int> = elementary::<Int>(3, 2).squared_variables();
        for w in enumerate_bn(3).unwrap() {
            assert_eq!(act(&w, &inv), inv);
        }
    }

    #[test]
    fn action_composes() {
        let p: MPoly<Int> = MPoly::variable(3, 1)
            .add(&MPoly::variable(3, 2).mul(&MPoly::variable(3, 3)))
            .add(&MPoly::variable(3, 2));
        let bs = enumerate_bn(3).unwrap();
        for g in &bs {
            for h in &bs {
                assert_eq!(act(&g.compose(h).unwrap(), &p), act(g, &act(h, &p)));
            }
        }
    }

    #[test]
    fn gap_invariants_hold_on_random_monomials() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let exps: Vec<Exp> = (0..n).map(|_| rng.gen_range(0..=6)).collect();
            let m = Monomial::new(exps);
            let a = analyze_a(&m);
            // lambda = exponent partition; complement conjugate has parts
            // bounded by n and size |m| - maj(pi).
            assert_eq!(
                a.complementary.size(),
                m.total_degree() - a.index_perm.stats().maj
            );
            let b = analyze_b(&m);
            assert_eq!(
                2 * b.complementary.size(),
                m.total_degree() - b.signed_index_perm.stats().fmaj
            );
        }
    }
}
