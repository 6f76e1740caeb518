//! Total-degree-truncated power series, the conjugation specialization
//! `iota`, and the verification drivers for the generating function
//! identities.
//!
//! Each driver compares two independently computed sides of one identity
//! with exact coefficients and returns a self-contained [`VerifyReport`].
//! Identities with an infinite product denominator are checked by cross
//! multiplication: the truncated series is multiplied by the polynomial
//! `prod (1 - (q_1 ... q_i)^s)` and compared against the truncated
//! numerator, which avoids series inversion entirely.  Truncation at total
//! degree `D` commutes with these products, so the comparison is exact on
//! every coefficient up to `D`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{check_capacity, Error, Result};
use crate::groups::{enumerate_bn, enumerate_sn};
use crate::polyring::{act_monomial, descent_monomial, signed_descent_monomial};
use crate::polyring::{monomials_up_to, Coeff, Exp, MPoly, Monomial};
use crate::reptheory::{
    bn_character, bn_class_representative, class_table_a, class_table_b,
    descent_character_table_a, descent_character_table_b, inner_product, sn_character,
    sn_class_representative, ClassFunction,
};
use crate::shapes::{
    bipartitions_of, enumerate_rssyt, enumerate_rssyt_b, enumerate_syt, enumerate_syt_bi,
    lambda_s1s2, partitions_bounded, partitions_of, phi_a, phi_a_inverse, phi_b, phi_b_inverse,
    subsets_of_interval, Bipartition, Partition,
};
use crate::straighten::{DescentFamily, Straightener, TypeA, TypeB};
use crate::{int_poly_to_rat, int_to_rat, Int, Rat};

/// Exact polynomial identity over the signed group; per-side term counts
/// grow like `2^n n!`.
pub const VERIFY_EXACT_B_MAX_N: usize = 5;
/// Hilbert series comparisons (the three monomial census identities).
pub const VERIFY_CENSUS_MAX_N: usize = 4;
/// Truncation cutoff for the census and tableau series drivers.
pub const VERIFY_SERIES_MAX_CUTOFF: usize = 8;
/// Largest `r` for the principal specialization driver.
pub const VERIFY_GESSEL_MAX_R: usize = 6;
/// Symmetric group size cap for the principal specialization driver.
pub const VERIFY_GESSEL_MAX_N: usize = 5;
/// Shape size cap for the tableau series driver.
pub const VERIFY_TAU_MAX_SIZE: usize = 6;
/// Total shape size cap for the signed tableau series driver.
pub const VERIFY_TAU_B_MAX_TOTAL: usize = 4;
/// Rank cap for the trace drivers.
pub const VERIFY_TRACE_MAX_N: usize = 3;
/// Cutoff cap for the trace drivers.
pub const VERIFY_TRACE_MAX_CUTOFF: usize = 6;
/// Rank cap for the descent basis census driver, type A.
pub const VERIFY_BASIS_A_MAX_N: usize = 7;
/// Rank cap for the descent basis census driver, type B.
pub const VERIFY_BASIS_B_MAX_N: usize = 5;
/// Shape size cap for the bijection drivers.
pub const VERIFY_PHI_MAX_SIZE: usize = 5;
/// Entry cap for the bijection drivers.
pub const VERIFY_PHI_MAX_ENTRY: usize = 7;

/// A formal power series in `n` variables truncated at total degree
/// `cutoff`; every stored exponent vector has total degree at most the
/// cutoff, and arithmetic discards anything above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    n: usize,
    cutoff: usize,
    terms: BTreeMap<Vec<Exp>, C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(n: usize, cutoff: usize) -> Self {
        TruncatedSeries {
            n,
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, cutoff: usize) -> Self {
        let mut s = TruncatedSeries::zero(n, cutoff);
        s.add_term(vec![0; n], C::one());
        s
    }

    /// The polynomial viewed as a series, dropping terms above the cutoff.
    pub fn from_poly(p: &MPoly<C>, cutoff: usize) -> Self {
        let mut s = TruncatedSeries::zero(p.n(), cutoff);
        for (m, c) in p.terms() {
            s.add_term(m.exps().to_vec(), c.clone());
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Exp>, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[Exp]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Adds one term, silently truncating above the cutoff and dropping
    /// cancelled coefficients.
    pub fn add_term(&mut self, exps: Vec<Exp>, c: C) {
        assert_eq!(exps.len(), self.n, "exponent vector length mismatch");
        if c.is_zero() || exps.iter().map(|&e| e as usize).sum::<usize>() > self.cutoff {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        self.combine(other, true)
    }

    fn combine(&self, other: &TruncatedSeries<C>, negate: bool) -> TruncatedSeries<C> {
        assert_eq!(self.n, other.n, "variable count mismatch");
        assert_eq!(self.cutoff, other.cutoff, "cutoff mismatch");
        let mut out = self.clone();
        for (exps, c) in other.terms() {
            let c = if negate { -c.clone() } else { c.clone() };
            out.add_term(exps.clone(), c);
        }
        out
    }

    pub fn mul(&self, other: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        assert_eq!(self.n, other.n, "variable count mismatch");
        assert_eq!(self.cutoff, other.cutoff, "cutoff mismatch");
        let mut out = TruncatedSeries::zero(self.n, self.cutoff);
        for (ea, ca) in self.terms() {
            let da: usize = ea.iter().map(|&e| e as usize).sum();
            for (eb, cb) in other.terms() {
                let db: usize = eb.iter().map(|&e| e as usize).sum();
                if da + db > self.cutoff {
                    continue;
                }
                let exps: Vec<Exp> = ea.iter().zip(eb).map(|(&a, &b)| a + b).collect();
                out.add_term(exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Multiplies by a polynomial, truncating at the cutoff.
    pub fn mul_poly(&self, p: &MPoly<C>) -> TruncatedSeries<C> {
        assert_eq!(self.n, p.n(), "variable count mismatch");
        let mut out = TruncatedSeries::zero(self.n, self.cutoff);
        for (ea, ca) in self.terms() {
            for (m, cb) in p.terms() {
                let exps: Vec<Exp> = ea.iter().zip(m.exps()).map(|(&a, &b)| a + b).collect();
                out.add_term(exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> TruncatedSeries<C> {
        let mut out = TruncatedSeries::zero(self.n, self.cutoff);
        for (exps, v) in self.terms() {
            out.add_term(exps.clone(), v.clone() * c.clone());
        }
        out
    }

    /// The smallest exponent vector on which the two series differ,
    /// together with both coefficients.
    pub fn first_discrepancy(&self, other: &TruncatedSeries<C>) -> Option<(Vec<Exp>, C, C)> {
        let keys: BTreeSet<&Vec<Exp>> = self.terms.keys().chain(other.terms.keys()).collect();
        for key in keys {
            let a = self.coeff(key);
            let b = other.coeff(key);
            if a != b {
                return Some((key.clone(), a, b));
            }
        }
        None
    }
}

/// `1 / (1 - m)` as the geometric series `sum m^k`, truncated; `m` must
/// have positive degree, since otherwise the constant term of `1 - m` is
/// not a unit.
pub fn geometric_inverse<C: Coeff>(m: &Monomial, cutoff: usize) -> Result<TruncatedSeries<C>> {
    let d = m.total_degree();
    if d == 0 {
        return Err(Error::Domain(
            "geometric inverse needs a monomial of positive degree".into(),
        ));
    }
    let mut out = TruncatedSeries::zero(m.n(), cutoff);
    let mut k = 0usize;
    while k * d <= cutoff {
        let exps: Vec<Exp> = m.exps().iter().map(|&e| e * k as Exp).collect();
        out.add_term(exps, C::one());
        k += 1;
    }
    Ok(out)
}

/// A formal sum of `coefficient * q^lambda` over partitions with at most
/// `num_parts` parts and size at most `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSeries<C> {
    num_parts: usize,
    cutoff: usize,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coeff> PartitionSeries<C> {
    pub fn zero(num_parts: usize, cutoff: usize) -> Self {
        PartitionSeries {
            num_parts,
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn num_parts(&self) -> usize {
        self.num_parts
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lambda: Partition, c: C) -> Result<()> {
        if lambda.num_parts() > self.num_parts {
            return Err(Error::Domain(format!(
                "partition {lambda} has more than {} parts",
                self.num_parts
            )));
        }
        if lambda.size() > self.cutoff {
            return Err(Error::Domain(format!(
                "partition {lambda} exceeds the cutoff {}",
                self.cutoff
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
        Ok(())
    }

    /// Embeds into a truncated series over `num_parts` variables, sending
    /// `q^lambda` to the exponent vector `scale * lambda` (padded) and
    /// dropping terms pushed above the cutoff by the scale.
    pub fn embed(&self, scale: Exp) -> TruncatedSeries<C> {
        let mut out = TruncatedSeries::zero(self.num_parts, self.cutoff);
        for (lambda, c) in self.terms() {
            let padded = lambda
                .padded(self.num_parts)
                .expect("part count bounded on insertion");
            let exps: Vec<Exp> = padded.iter().map(|&p| scale * p as Exp).collect();
            out.add_term(exps, c.clone());
        }
        out
    }
}

/// `sum over partitions (at most num_parts parts, size at most cutoff) of
/// q^lambda`, each with coefficient one.
pub fn partition_sum<C: Coeff>(num_parts: usize, cutoff: usize) -> PartitionSeries<C> {
    let mut out = PartitionSeries::zero(num_parts, cutoff);
    for lambda in partitions_bounded(num_parts, cutoff) {
        out.add_term(lambda, C::one())
            .expect("enumeration respects the bounds");
    }
    out
}

/// The exponent partition census of all monomials in `n` variables:
/// `sum multinomial(n, lambda) q^lambda` over partitions with at most `n`
/// parts and size at most `cutoff`.
pub fn monomial_census(n: usize, cutoff: usize) -> PartitionSeries<Rat> {
    let mut out = PartitionSeries::zero(n, cutoff);
    for lambda in partitions_bounded(n, cutoff) {
        let weight = int_to_rat(&multinomial(n, &lambda));
        out.add_term(lambda, weight)
            .expect("enumeration respects the bounds");
    }
    out
}

/// The number of monomials in `n` variables whose exponent partition is
/// `lambda`: the multinomial coefficient of the part multiplicities
/// (including the zero exponents); zero when `lambda` has more than `n`
/// parts.
pub fn multinomial(n: usize, lambda: &Partition) -> Int {
    if lambda.num_parts() > n {
        return Int::zero();
    }
    let mut mult: BTreeMap<usize, u64> = BTreeMap::new();
    for &p in lambda.parts() {
        *mult.entry(p).or_default() += 1;
    }
    *mult.entry(0).or_default() += (n - lambda.num_parts()) as u64;
    let mut value: Int = (1..=n as u64).map(Int::from).product();
    for (_, m) in mult {
        let m_factorial: Int = (1..=m).map(Int::from).product();
        value /= m_factorial;
    }
    value
}

/// The `q`-integer `1 + q + ... + q^(i-1)` as a univariate polynomial.
pub fn q_int(i: usize) -> MPoly<Int> {
    let mut out = MPoly::zero(1);
    for k in 0..i {
        out.add_term(Monomial::new(vec![k as Exp]), Int::one());
    }
    out
}

/// `prod over i = 1..=n of (1 - (q_1 ... q_i)^scale)`.
pub fn denominator_poly<C: Coeff>(n: usize, scale: Exp) -> MPoly<C> {
    let mut out = MPoly::one(n);
    for i in 1..=n {
        let mut factor = MPoly::one(n);
        factor.add_term(prefix_monomial(n, i, scale), -C::one());
        out = out.mul(&factor);
    }
    out
}

/// The monomial `(q_1 ... q_i)^scale` in `n` variables.
fn prefix_monomial(n: usize, i: usize, scale: Exp) -> Monomial {
    let mut exps = vec![0; n];
    for e in exps.iter_mut().take(i) {
        *e = scale;
    }
    Monomial::new(exps)
}

/// The specialization sending `z^lambda` to `q^(conjugate of lambda)` on a
/// partition-supported series; errors when a term's exponent vector is not
/// weakly decreasing or its conjugate needs more than `out_n` variables.
pub fn iota<C: Coeff>(series: &TruncatedSeries<C>, out_n: usize) -> Result<TruncatedSeries<C>> {
    let mut out = TruncatedSeries::zero(out_n, series.cutoff());
    for (exps, c) in series.terms() {
        if exps.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "exponent vector {exps:?} is not weakly decreasing"
            )));
        }
        let parts: Vec<usize> = exps
            .iter()
            .take_while(|&&e| e > 0)
            .map(|&e| e as usize)
            .collect();
        let conj = Partition::new(parts)
            .expect("checked weakly decreasing")
            .conjugate();
        let padded = conj.padded(out_n)?;
        out.add_term(padded.iter().map(|&p| p as Exp).collect(), c.clone());
    }
    Ok(out)
}

/// Witness for a failed comparison: the first differing exponent vector
/// with both coefficients, or a textual witness for aggregate drivers.
#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub exponents: Vec<Exp>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verification driver; `status` is `pass` or `fail`, and a
/// failure carries its witness.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub status: String,
    /// Objects enumerated while building both sides (group elements,
    /// tableaux, classes, or pairs, depending on the driver).
    pub elements: usize,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<Discrepancy>,
    pub wall_time_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

fn finish_report(
    name: &str,
    params: &[(&str, String)],
    elements: usize,
    lhs_terms: usize,
    rhs_terms: usize,
    discrepancy: Option<Discrepancy>,
    start: Instant,
) -> VerifyReport {
    VerifyReport {
        name: name.to_string(),
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        status: if discrepancy.is_none() { "pass" } else { "fail" }.to_string(),
        elements,
        lhs_terms,
        rhs_terms,
        first_discrepancy: discrepancy,
        wall_time_ms: start.elapsed().as_millis(),
    }
}

fn poly_discrepancy<C: Coeff + fmt::Display>(a: &MPoly<C>, b: &MPoly<C>) -> Option<Discrepancy> {
    let keys: BTreeSet<Monomial> = a
        .terms()
        .map(|(m, _)| m.clone())
        .chain(b.terms().map(|(m, _)| m.clone()))
        .collect();
    for key in keys {
        let ca = a.coeff(&key);
        let cb = b.coeff(&key);
        if ca != cb {
            return Some(Discrepancy {
                exponents: key.exps().to_vec(),
                lhs: ca.to_string(),
                rhs: cb.to_string(),
            });
        }
    }
    None
}

fn series_discrepancy<C: Coeff + fmt::Display>(
    a: &TruncatedSeries<C>,
    b: &TruncatedSeries<C>,
) -> Option<Discrepancy> {
    a.first_discrepancy(b).map(|(exps, ca, cb)| Discrepancy {
        exponents: exps,
        lhs: ca.to_string(),
        rhs: cb.to_string(),
    })
}

fn exps_of(stat: &[usize]) -> Vec<Exp> {
    stat.iter().map(|&s| s as Exp).collect()
}

fn monomial_of(stat: &[usize]) -> Monomial {
    Monomial::new(exps_of(stat))
}

/// Equality of the two signed-statistic generating polynomials: the
/// descent-plus-negativity exponents of the inverse against the flag
/// exponents, summed over the whole signed group.  Exact, no truncation.
pub fn verify_thm_7_1(n: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("n", n, VERIFY_EXACT_B_MAX_N)?;
    let elements = enumerate_bn(n)?;
    let mut lhs = MPoly::<Int>::zero(n);
    let mut rhs = MPoly::<Int>::zero(n);
    for w in &elements {
        let st = w.stats();
        let inv_st = w.invert().stats();
        let combined: Vec<usize> = st
            .window
            .d_vector
            .iter()
            .zip(&inv_st.n_vector)
            .map(|(&d, &m)| d + m)
            .collect();
        lhs.add_term(monomial_of(&combined), Int::one());
        rhs.add_term(monomial_of(&st.f_vector), Int::one());
    }
    let disc = poly_discrepancy(&lhs, &rhs);
    Ok(finish_report(
        "thm7.1",
        &[("n", n.to_string())],
        2 * elements.len(),
        lhs.num_terms(),
        rhs.num_terms(),
        disc,
        start,
    ))
}

fn census_report(
    name: &str,
    n: usize,
    cutoff: usize,
    numerator: MPoly<Rat>,
    scale: Exp,
    elements: usize,
    start: Instant,
) -> VerifyReport {
    let census = monomial_census(n, cutoff).embed(1);
    let lhs = census.mul_poly(&denominator_poly::<Rat>(n, scale));
    let rhs = TruncatedSeries::from_poly(&numerator, cutoff);
    let disc = series_discrepancy(&lhs, &rhs);
    finish_report(
        name,
        &[("n", n.to_string()), ("cutoff", cutoff.to_string())],
        elements,
        lhs.num_terms(),
        rhs.num_terms(),
        disc,
        start,
    )
}

/// The monomial census equals the descent statistic sum over the symmetric
/// group divided by `prod (1 - q_1 ... q_i)`, compared by cross
/// multiplication at the cutoff.
pub fn verify_thm_7_2(n: usize, cutoff: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("n", n, VERIFY_CENSUS_MAX_N)?;
    check_capacity("cutoff", cutoff, VERIFY_SERIES_MAX_CUTOFF)?;
    let perms = enumerate_sn(n)?;
    let mut numerator = MPoly::<Rat>::zero(n);
    for w in &perms {
        numerator.add_term(monomial_of(&w.stats().d_vector), Rat::one());
    }
    Ok(census_report(
        "thm7.2",
        n,
        cutoff,
        numerator,
        1,
        perms.len(),
        start,
    ))
}

/// The monomial census equals the flag statistic sum over the signed group
/// divided by `prod (1 - (q_1 ... q_i)^2)`.
pub fn verify_thm_7_3(n: usize, cutoff: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("n", n, VERIFY_CENSUS_MAX_N)?;
    check_capacity("cutoff", cutoff, VERIFY_SERIES_MAX_CUTOFF)?;
    let elements = enumerate_bn(n)?;
    let mut numerator = MPoly::<Rat>::zero(n);
    for w in &elements {
        numerator.add_term(monomial_of(&w.stats().f_vector), Rat::one());
    }
    Ok(census_report(
        "thm7.3",
        n,
        cutoff,
        numerator,
        2,
        elements.len(),
        start,
    ))
}

/// The monomial census equals the descent-plus-negativity sum over the
/// signed group divided by `prod (1 - (q_1 ... q_i)^2)`.
pub fn verify_thm_7_4(n: usize, cutoff: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("n", n, VERIFY_CENSUS_MAX_N)?;
    check_capacity("cutoff", cutoff, VERIFY_SERIES_MAX_CUTOFF)?;
    let elements = enumerate_bn(n)?;
    let mut numerator = MPoly::<Rat>::zero(n);
    for w in &elements {
        let st = w.stats();
        let inv_st = w.invert().stats();
        let combined: Vec<usize> = st
            .window
            .d_vector
            .iter()
            .zip(&inv_st.n_vector)
            .map(|(&d, &m)| d + m)
            .collect();
        numerator.add_term(monomial_of(&combined), Rat::one());
    }
    Ok(census_report(
        "thm7.4",
        n,
        cutoff,
        numerator,
        2,
        elements.len(),
        start,
    ))
}

/// Principal specialization: after substituting `q_1 = qt` and the other
/// variables to `q`, the coefficient of `t^r` in the descent statistic sum
/// over `prod (1 - t q^i)` is the `n`-th power of the `q`-integer
/// `[r + 1]`.
pub fn verify_cor_gessel(n: usize, r_max: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("n", n, VERIFY_GESSEL_MAX_N)?;
    check_capacity("r", r_max, VERIFY_GESSEL_MAX_R)?;
    let perms = enumerate_sn(n)?;
    // Coefficients of t^j, each a polynomial in q.
    let mut numerator: Vec<MPoly<Int>> = vec![MPoly::zero(1); n.max(1)];
    for w in &perms {
        let st = w.stats();
        numerator[st.des].add_term(Monomial::new(vec![st.maj as Exp]), Int::one());
    }
    let mut denominator: Vec<MPoly<Int>> = vec![MPoly::one(1)];
    for i in 0..=n {
        let q_i = MPoly::from_terms(1, [(Monomial::new(vec![i as Exp]), Int::one())]);
        let mut next = vec![MPoly::zero(1); denominator.len() + 1];
        for (j, c) in denominator.iter().enumerate() {
            next[j] = next[j].add(c);
            next[j + 1] = next[j + 1].sub(&c.mul(&q_i));
        }
        denominator = next;
    }
    let mut quotient: Vec<MPoly<Int>> = Vec::new();
    let mut disc = None;
    let mut compared = 0usize;
    for r in 0..=r_max {
        let mut coeff = numerator.get(r).cloned().unwrap_or_else(|| MPoly::zero(1));
        for j in 1..=r.min(denominator.len() - 1) {
            coeff = coeff.sub(&denominator[j].mul(&quotient[r - j]));
        }
        let mut expected = MPoly::one(1);
        for _ in 0..n {
            expected = expected.mul(&q_int(r + 1));
        }
        compared += 1;
        if disc.is_none() && coeff != expected {
            disc = Some(Discrepancy {
                exponents: vec![r as Exp],
                lhs: coeff.to_string(),
                rhs: expected.to_string(),
            });
        }
        quotient.push(coeff);
    }
    Ok(finish_report(
        "cor-gessel",
        &[("n", n.to_string()), ("r", r_max.to_string())],
        perms.len(),
        compared,
        compared,
        disc,
        start,
    ))
}

/// Equidistribution of the negative statistics with the flag statistics
/// over the signed group, as exact bivariate polynomials in `(t, q)`.
pub fn verify_cor_abr(n: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("n", n, VERIFY_EXACT_B_MAX_N)?;
    let elements = enumerate_bn(n)?;
    let mut lhs = MPoly::<Int>::zero(2);
    let mut rhs = MPoly::<Int>::zero(2);
    for w in &elements {
        let st = w.stats();
        lhs.add_term(
            Monomial::new(vec![st.ndes as Exp, st.nmaj as Exp]),
            Int::one(),
        );
        rhs.add_term(
            Monomial::new(vec![st.fdes as Exp, st.fmaj as Exp]),
            Int::one(),
        );
    }
    let disc = poly_discrepancy(&lhs, &rhs);
    Ok(finish_report(
        "cor-abr",
        &[("n", n.to_string())],
        elements.len(),
        lhs.num_terms(),
        rhs.num_terms(),
        disc,
        start,
    ))
}

/// Tableau generating series: the `iota` image of the shape's reverse
/// semistandard series equals the standard tableau descent sum over
/// `prod (1 - q_1 ... q_i)`, cross multiplied at the cutoff.
pub fn verify_lemma_tau(shape: &Partition, cutoff: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("|shape|", shape.size(), VERIFY_TAU_MAX_SIZE)?;
    check_capacity("cutoff", cutoff, VERIFY_SERIES_MAX_CUTOFF)?;
    let n = shape.size();
    let reverse = enumerate_rssyt(shape, cutoff + 1, Some(cutoff))?;
    let mut z_series = TruncatedSeries::<Rat>::zero(cutoff, cutoff);
    for t in &reverse {
        let counts = t.counts_above();
        let padded = counts.padded(cutoff).expect("entry bound caps the parts");
        z_series.add_term(exps_of(&padded), Rat::one());
    }
    let lhs = iota(&z_series, n)?.mul_poly(&denominator_poly::<Rat>(n, 1));
    let standard = enumerate_syt(shape)?;
    let mut numerator = MPoly::<Rat>::zero(n);
    for t in &standard {
        numerator.add_term(monomial_of(&t.d_vector()), Rat::one());
    }
    let rhs = TruncatedSeries::from_poly(&numerator, cutoff);
    let disc = series_discrepancy(&lhs, &rhs);
    Ok(finish_report(
        "lemma-tau",
        &[
            ("shape", shape.to_string()),
            ("cutoff", cutoff.to_string()),
        ],
        reverse.len() + standard.len(),
        lhs.num_terms(),
        rhs.num_terms(),
        disc,
        start,
    ))
}

/// Signed tableau generating series: the `iota` image of the parity
/// constrained reverse series equals the bitableau flag sum over
/// `prod (1 - (q_1 ... q_i)^2)`.
pub fn verify_lemma_tau_b(shape: &Bipartition, cutoff: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("|shape|", shape.total_size(), VERIFY_TAU_B_MAX_TOTAL)?;
    check_capacity("cutoff", cutoff, VERIFY_SERIES_MAX_CUTOFF)?;
    let n = shape.total_size();
    let reverse = enumerate_rssyt_b(&shape.first, &shape.second, cutoff + 1, Some(cutoff))?;
    let mut z_series = TruncatedSeries::<Rat>::zero(cutoff, cutoff);
    for t in &reverse {
        let counts = t.counts_above();
        let padded = counts.padded(cutoff).expect("entry bound caps the parts");
        z_series.add_term(exps_of(&padded), Rat::one());
    }
    let lhs = iota(&z_series, n)?.mul_poly(&denominator_poly::<Rat>(n, 2));
    let standard = enumerate_syt_bi(&shape.first, &shape.second)?;
    let mut numerator = MPoly::<Rat>::zero(n);
    for t in &standard {
        numerator.add_term(monomial_of(&t.f_vector()), Rat::one());
    }
    let rhs = TruncatedSeries::from_poly(&numerator, cutoff);
    let disc = series_discrepancy(&lhs, &rhs);
    Ok(finish_report(
        "lemma-tau-b",
        &[
            ("shape", shape.to_string()),
            ("cutoff", cutoff.to_string()),
        ],
        reverse.len() + standard.len(),
        lhs.num_terms(),
        rhs.num_terms(),
        disc,
        start,
    ))
}

/// Power sum of one alphabet of variable prefixes: the sum over prefix
/// lengths of the allowed parity of `(z_1 ... z_len)^k`, truncated.
fn prefix_power_sum(nz: usize, cutoff: usize, k: usize, parity: Option<usize>) -> TruncatedSeries<Rat> {
    let mut out = TruncatedSeries::zero(nz, cutoff);
    for len in 0..=nz {
        if len * k > cutoff {
            break;
        }
        if let Some(p) = parity {
            if len % 2 != p {
                continue;
            }
        }
        let mut exps = vec![0 as Exp; nz];
        for e in exps.iter_mut().take(len) {
            *e = k as Exp;
        }
        out.add_term(exps, Rat::one());
    }
    out
}

/// The three-way trace identity on the polynomial ring, per conjugacy
/// class of both groups: the direct fixed-monomial sum graded by exponent
/// partition, the `iota` image of the class power sum over the prefix
/// alphabets, and the quotient trace times the invariant denominator must
/// all agree up to the cutoff.
pub fn verify_trace_claims(n: usize, cutoff: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("n", n, VERIFY_TRACE_MAX_N)?;
    check_capacity("cutoff", cutoff, VERIFY_TRACE_MAX_CUTOFF)?;
    if n == 0 {
        return Err(Error::Domain("traces need n >= 1".into()));
    }
    let monomials = monomials_up_to(n, cutoff);
    let mut disc: Option<Discrepancy> = None;
    let mut classes = 0usize;
    let mut lhs_terms = 0usize;
    let mut rhs_terms = 0usize;
    let note_failure = |d: Discrepancy, disc: &mut Option<Discrepancy>| {
        if disc.is_none() {
            *disc = Some(d);
        }
    };

    let mut straightener_a = Straightener::<TypeA>::new(n)?;
    for mu in partitions_of(n) {
        classes += 1;
        let tau = sn_class_representative(&mu);
        let mut direct = TruncatedSeries::<Rat>::zero(n, cutoff);
        for m in &monomials {
            let (image, _sign) = act_monomial(&tau, m);
            if image == *m {
                let padded = m.exponent_partition().padded(n).expect("n parts at most");
                direct.add_term(exps_of(&padded), Rat::one());
            }
        }
        let mut sym = TruncatedSeries::<Rat>::one(cutoff, cutoff);
        for &k in mu.parts() {
            sym = sym.mul(&prefix_power_sum(cutoff, cutoff, k, None));
        }
        let sym_q = iota(&sym, n)?;
        if let Some(d) = series_discrepancy(&direct, &sym_q) {
            note_failure(
                Discrepancy {
                    lhs: format!("class {mu}: direct {}", d.lhs),
                    rhs: format!("power sum image {}", d.rhs),
                    ..d
                },
                &mut disc,
            );
        }
        let graded = straightener_a.graded_trace(&tau)?;
        let product = direct.mul_poly(&denominator_poly::<Rat>(n, 1));
        let quotient_side = TruncatedSeries::from_poly(&int_poly_to_rat(&graded), cutoff);
        if let Some(d) = series_discrepancy(&product, &quotient_side) {
            note_failure(
                Discrepancy {
                    lhs: format!("class {mu}: direct times denominator {}", d.lhs),
                    rhs: format!("quotient trace {}", d.rhs),
                    ..d
                },
                &mut disc,
            );
        }
        lhs_terms += direct.num_terms();
        rhs_terms += sym_q.num_terms();
    }

    let mut straightener_b = Straightener::<TypeB>::new(n)?;
    for bp in bipartitions_of(n) {
        classes += 1;
        let tau = bn_class_representative(&bp);
        let mut direct = TruncatedSeries::<Rat>::zero(n, cutoff);
        for m in &monomials {
            let (image, negative) = act_monomial(&tau, m);
            if image == *m {
                let padded = m.exponent_partition().padded(n).expect("n parts at most");
                let c = if negative { -Rat::one() } else { Rat::one() };
                direct.add_term(exps_of(&padded), c);
            }
        }
        let mut sym = TruncatedSeries::<Rat>::one(cutoff, cutoff);
        for &k in bp.first.parts() {
            let even = prefix_power_sum(cutoff, cutoff, k, Some(0));
            let odd = prefix_power_sum(cutoff, cutoff, k, Some(1));
            sym = sym.mul(&even.add(&odd));
        }
        for &k in bp.second.parts() {
            let even = prefix_power_sum(cutoff, cutoff, k, Some(0));
            let odd = prefix_power_sum(cutoff, cutoff, k, Some(1));
            sym = sym.mul(&even.sub(&odd));
        }
        let sym_q = iota(&sym, n)?;
        if let Some(d) = series_discrepancy(&direct, &sym_q) {
            note_failure(
                Discrepancy {
                    lhs: format!("class {bp}: direct {}", d.lhs),
                    rhs: format!("power sum image {}", d.rhs),
                    ..d
                },
                &mut disc,
            );
        }
        let graded = straightener_b.graded_trace(&tau)?;
        let product = direct.mul_poly(&denominator_poly::<Rat>(n, 2));
        let quotient_side = TruncatedSeries::from_poly(&int_poly_to_rat(&graded), cutoff);
        if let Some(d) = series_discrepancy(&product, &quotient_side) {
            note_failure(
                Discrepancy {
                    lhs: format!("class {bp}: direct times denominator {}", d.lhs),
                    rhs: format!("quotient trace {}", d.rhs),
                    ..d
                },
                &mut disc,
            );
        }
        lhs_terms += direct.num_terms();
        rhs_terms += sym_q.num_terms();
    }

    Ok(finish_report(
        "traces",
        &[("n", n.to_string()), ("cutoff", cutoff.to_string())],
        classes,
        lhs_terms,
        rhs_terms,
        disc,
        start,
    ))
}

/// Multiplicity agreement for every descent set and shape: the character
/// inner product of each type A descent representation with each
/// irreducible equals the count of standard tableaux with that descent
/// set.
pub fn verify_thm_4_1(n: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    let reps = descent_character_table_a(n)?;
    let table = class_table_a(n)?;
    let mut disc: Option<Discrepancy> = None;
    let mut pairs = 0usize;
    for mu in partitions_of(n) {
        let chi = sn_character(&mu)?;
        let tableaux = enumerate_syt(&mu)?;
        for s in subsets_of_interval(n.saturating_sub(1)) {
            let s_vec: Vec<usize> = s.iter().copied().collect();
            let rep = reps
                .get(&s_vec)
                .ok_or_else(|| Error::Domain("missing descent set bucket".into()))?;
            let ip = inner_product(&table, rep, &chi)?;
            let count = tableaux
                .iter()
                .filter(|t| t.des_set() == s_vec)
                .count();
            pairs += 1;
            if disc.is_none() && ip != int_to_rat(&Int::from(count as u64)) {
                disc = Some(Discrepancy {
                    exponents: Vec::new(),
                    lhs: format!("inner product {ip} for S = {s_vec:?}, shape {mu}"),
                    rhs: format!("{count} tableaux"),
                });
            }
        }
    }
    Ok(finish_report(
        "thm4.1",
        &[("n", n.to_string())],
        pairs,
        pairs,
        pairs,
        disc,
        start,
    ))
}

/// Multiplicity agreement for every valid descent pair and bipartition
/// shape in type B; pairs never realized by a group element carry the zero
/// character.
pub fn verify_thm_5_2(n: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    let reps = descent_character_table_b(n)?;
    let table = class_table_b(n)?;
    let zero_function = ClassFunction::from_values(
        n,
        table
            .entries()
            .iter()
            .map(|(l, _)| (l.clone(), Rat::zero()))
            .collect(),
    );
    let shapes: Vec<(Bipartition, Vec<crate::shapes::BiTableau>)> = bipartitions_of(n)
        .into_iter()
        .map(|bp| {
            let tableaux = enumerate_syt_bi(&bp.first, &bp.second)?;
            Ok((bp, tableaux))
        })
        .collect::<Result<_>>()?;
    let mut disc: Option<Discrepancy> = None;
    let mut pairs = 0usize;
    for s1 in subsets_of_interval(n.saturating_sub(1)) {
        for s2 in subsets_of_interval(n) {
            if !lambda_s1s2(&s1, &s2, n)?.1 {
                continue;
            }
            let key = (
                s1.iter().copied().collect::<Vec<usize>>(),
                s2.iter().copied().collect::<Vec<usize>>(),
            );
            let rep = reps.get(&key).unwrap_or(&zero_function);
            for (bp, tableaux) in &shapes {
                let chi = bn_character(bp)?;
                let ip = inner_product(&table, rep, &chi)?;
                let count = tableaux
                    .iter()
                    .filter(|t| t.des_set() == key.0 && t.neg_set() == key.1)
                    .count();
                pairs += 1;
                if disc.is_none() && ip != int_to_rat(&Int::from(count as u64)) {
                    disc = Some(Discrepancy {
                        exponents: Vec::new(),
                        lhs: format!(
                            "inner product {ip} for S1 = {:?}, S2 = {:?}, shape {bp}",
                            key.0, key.1
                        ),
                        rhs: format!("{count} tableaux"),
                    });
                }
            }
        }
    }
    Ok(finish_report(
        "thm5.2",
        &[("n", n.to_string())],
        pairs,
        pairs,
        pairs,
        disc,
        start,
    ))
}

/// Census of the type A descent basis: one monomial per permutation, all
/// exponent vectors distinct, and (within straightening capacity) each
/// basis monomial reduces to its own unit vector in the quotient.
pub fn verify_basis_a(n: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("n", n, VERIFY_BASIS_A_MAX_N)?;
    let perms = enumerate_sn(n)?;
    let mut seen = BTreeSet::new();
    let mut disc: Option<Discrepancy> = None;
    for w in &perms {
        let m = descent_monomial(w);
        if !seen.insert(m.clone()) && disc.is_none() {
            disc = Some(Discrepancy {
                exponents: m.exps().to_vec(),
                lhs: format!("duplicate basis monomial {m}"),
                rhs: "distinct exponent vectors".into(),
            });
        }
    }
    if n <= TypeA::MAX_N {
        let mut straightener = Straightener::<TypeA>::new(n)?;
        for w in &perms {
            let m = descent_monomial(w);
            let nf = straightener
                .normal_form_unchecked(&MPoly::monomial(m, Int::one()), w.stats().maj);
            if disc.is_none() && (nf.num_terms() != 1 || nf.coeff(w) != Int::one()) {
                disc = Some(Discrepancy {
                    exponents: Vec::new(),
                    lhs: format!("normal form of the basis monomial of {w}"),
                    rhs: "a unit vector".into(),
                });
            }
        }
    }
    Ok(finish_report(
        "basis-a",
        &[("n", n.to_string())],
        perms.len(),
        seen.len(),
        perms.len(),
        disc,
        start,
    ))
}

/// Census of the type B descent basis: `2^n n!` monomials, all distinct,
/// each a unit vector in the quotient.
pub fn verify_basis_b(n: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("n", n, VERIFY_BASIS_B_MAX_N)?;
    let elements = enumerate_bn(n)?;
    let mut seen = BTreeSet::new();
    let mut disc: Option<Discrepancy> = None;
    for w in &elements {
        let m = signed_descent_monomial(w);
        if !seen.insert(m.clone()) && disc.is_none() {
            disc = Some(Discrepancy {
                exponents: m.exps().to_vec(),
                lhs: format!("duplicate basis monomial {m}"),
                rhs: "distinct exponent vectors".into(),
            });
        }
    }
    if n <= TypeB::MAX_N {
        let mut straightener = Straightener::<TypeB>::new(n)?;
        for w in &elements {
            let m = signed_descent_monomial(w);
            let nf = straightener
                .normal_form_unchecked(&MPoly::monomial(m, Int::one()), w.stats().fmaj);
            if disc.is_none() && (nf.num_terms() != 1 || nf.coeff(w) != Int::one()) {
                disc = Some(Discrepancy {
                    exponents: Vec::new(),
                    lhs: format!("normal form of the basis monomial of {w}"),
                    rhs: "a unit vector".into(),
                });
            }
        }
    }
    Ok(finish_report(
        "basis-b",
        &[("n", n.to_string())],
        elements.len(),
        seen.len(),
        elements.len(),
        disc,
        start,
    ))
}

/// Round trip of the tableau encoding: for every shape up to the size cap
/// and every reverse semistandard filling with bounded entries, splitting
/// into (standard tableau, difference vector) and reassembling returns the
/// original, and the weight decomposes as the major index plus the
/// weighted differences.
pub fn verify_phi_a(max_size: usize, max_entry: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("|shape|", max_size, VERIFY_PHI_MAX_SIZE)?;
    check_capacity("entries", max_entry, VERIFY_PHI_MAX_ENTRY)?;
    let mut disc: Option<Discrepancy> = None;
    let mut total = 0usize;
    for size in 1..=max_size {
        for shape in partitions_of(size) {
            for t in enumerate_rssyt(&shape, max_entry, None)? {
                total += 1;
                let (standard, delta) = phi_a(&t);
                let back = phi_a_inverse(&standard, &delta)?;
                let weighted: usize = delta.iter().enumerate().map(|(i, &d)| (i + 1) * d).sum();
                let weight_ok = t.weight() == standard.maj() + weighted;
                if disc.is_none() && (back != t || !weight_ok) {
                    disc = Some(Discrepancy {
                        exponents: Vec::new(),
                        lhs: format!("filling {t}"),
                        rhs: format!("round trip {back}, weight split {weight_ok}"),
                    });
                }
            }
        }
    }
    Ok(finish_report(
        "phi-a",
        &[
            ("max_size", max_size.to_string()),
            ("max_entry", max_entry.to_string()),
        ],
        total,
        total,
        total,
        disc,
        start,
    ))
}

/// Signed round trip: analogous to the unsigned driver, with the weight
/// splitting as the flag major index plus twice the weighted differences.
pub fn verify_phi_b(max_size: usize, max_entry: usize) -> Result<VerifyReport> {
    let start = Instant::now();
    check_capacity("|shape|", max_size, VERIFY_PHI_MAX_SIZE)?;
    check_capacity("entries", max_entry, VERIFY_PHI_MAX_ENTRY)?;
    let mut disc: Option<Discrepancy> = None;
    let mut total = 0usize;
    for size in 1..=max_size {
        for shape in bipartitions_of(size) {
            for t in enumerate_rssyt_b(&shape.first, &shape.second, max_entry, None)? {
                total += 1;
                let (standard, delta) = phi_b(&t);
                let back = phi_b_inverse(&standard, &delta)?;
                let weighted: usize = delta.iter().enumerate().map(|(i, &d)| (i + 1) * d).sum();
                let weight_ok = t.weight() == standard.fmaj() + 2 * weighted;
                if disc.is_none() && (back != t || !weight_ok) {
                    disc = Some(Discrepancy {
                        exponents: Vec::new(),
                        lhs: format!("filling {t}"),
                        rhs: format!("round trip {back}, weight split {weight_ok}"),
                    });
                }
            }
        }
    }
    Ok(finish_report(
        "phi-b",
        &[
            ("max_size", max_size.to_string()),
            ("max_entry", max_entry.to_string()),
        ],
        total,
        total,
        total,
        disc,
        start,
    ))
}
