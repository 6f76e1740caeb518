//! Straightening of monomials over the descent bases, normal forms modulo
//! the invariant ideals, and graded traces of the group actions on the
//! quotients.
//!
//! Both types share one algorithm, abstracted over [`DescentFamily`]:
//!
//! - type A: a monomial `m` equals `a_pi(m) * e_mu(m)` plus strictly
//!   smaller monomials, where `a_pi` is the descent monomial of the index
//!   permutation and `e_mu` the elementary product of the complementary
//!   partition; recursing on the smaller monomials yields an exact integer
//!   expansion of `m` over pairs `(mu, pi)`;
//! - type B: identical with the signed descent monomial `b_sigma` and
//!   elementary products in the squared variables.
//!
//! Modulo the ideal generated by the symmetric (type A) or even-symmetric
//! (type B) polynomials without constant term, every `e_mu` with `mu`
//! nonempty vanishes, so the terms with empty `mu` give the normal form in
//! the descent basis.  Traces of group elements on the quotient are read
//! off the diagonal coefficients of normal forms of permuted basis
//! elements.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::error::{check_capacity, Error, Result};
use crate::groups::{enumerate_bn, enumerate_sn, Permutation, SignedPermutation};
use crate::polyring::{
    act_monomial, analyze_a, analyze_b, cmp_a, cmp_b, descent_monomial, elementary_product,
    signed_descent_monomial, Exp, MPoly, Monomial, VariableAction,
};
use crate::shapes::{Partition, PosetCmp};
use crate::Int;

/// Largest total degree accepted by the public straightening entry points.
pub const STRAIGHTEN_MAX_DEGREE: usize = 10;

/// The two descent-basis families.  Implementations carry the family's
/// monomial analysis, basis monomials, ideal generators, and partial order.
pub trait DescentFamily {
    /// Group element labelling a basis vector.
    type Elem: Clone + Eq + Ord + Hash + fmt::Display + VariableAction;

    /// Short family tag for diagnostics.
    const NAME: &'static str;
    /// Desk bound on `n` for straightening and normal forms.
    const MAX_N: usize;
    /// Desk bound on `n` for graded traces.
    const TRACE_MAX_N: usize;

    /// `(complementary partition, group element)` of a monomial.
    fn analyze(m: &Monomial) -> (Partition, Self::Elem);
    /// The basis monomial of a group element.
    fn basis_monomial(w: &Self::Elem) -> Monomial;
    /// The ideal-generator product `e_mu` (type A) or `e_mu` in squared
    /// variables (type B).
    fn multiplier(mu: &Partition, n: usize) -> MPoly<Int>;
    /// All group elements for the given rank.
    fn enumerate(n: usize) -> Result<Vec<Self::Elem>>;
    /// The family's partial order on monomials of equal degree.
    fn cmp(a: &Monomial, b: &Monomial) -> Result<PosetCmp>;
    /// Variables in the family's sorting order for `m`, unsigned, 1-based.
    fn variable_order(m: &Monomial) -> Vec<usize>;
    /// Exponent contributed per step: 1 (type A) or 2 (type B).
    const STEP_SCALE: Exp;
}

/// Type A marker: symmetric group, descent basis `a_pi`.
pub enum TypeA {}

impl DescentFamily for TypeA {
    type Elem = Permutation;

    const NAME: &'static str = "A";
    const MAX_N: usize = 6;
    const TRACE_MAX_N: usize = 6;
    const STEP_SCALE: Exp = 1;

    fn analyze(m: &Monomial) -> (Partition, Permutation) {
        let a = analyze_a(m);
        (a.complementary, a.index_perm)
    }

    fn basis_monomial(w: &Permutation) -> Monomial {
        descent_monomial(w)
    }

    fn multiplier(mu: &Partition, n: usize) -> MPoly<Int> {
        elementary_product(mu, n, false)
    }

    fn enumerate(n: usize) -> Result<Vec<Permutation>> {
        enumerate_sn(n)
    }

    fn cmp(a: &Monomial, b: &Monomial) -> Result<PosetCmp> {
        cmp_a(a, b)
    }

    fn variable_order(m: &Monomial) -> Vec<usize> {
        analyze_a(m).index_perm.window().to_vec()
    }
}

/// Type B marker: hyperoctahedral group, signed descent basis `b_sigma`.
pub enum TypeB {}

impl DescentFamily for TypeB {
    type Elem = SignedPermutation;

    const NAME: &'static str = "B";
    const MAX_N: usize = 5;
    const TRACE_MAX_N: usize = 4;
    const STEP_SCALE: Exp = 2;

    fn analyze(m: &Monomial) -> (Partition, SignedPermutation) {
        let a = analyze_b(m);
        (a.complementary, a.signed_index_perm)
    }

    fn basis_monomial(w: &SignedPermutation) -> Monomial {
        signed_descent_monomial(w)
    }

    fn multiplier(mu: &Partition, n: usize) -> MPoly<Int> {
        elementary_product(mu, n, true)
    }

    fn enumerate(n: usize) -> Result<Vec<SignedPermutation>> {
        enumerate_bn(n)
    }

    fn cmp(a: &Monomial, b: &Monomial) -> Result<PosetCmp> {
        cmp_b(a, b)
    }

    fn variable_order(m: &Monomial) -> Vec<usize> {
        analyze_b(m)
            .signed_index_perm
            .window()
            .iter()
            .map(|v| v.unsigned_abs() as usize)
            .collect()
    }
}

/// One term of a straightening expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm<E> {
    pub coeff: Int,
    pub mu: Partition,
    pub elem: E,
}

/// The exact expansion of a monomial over `(mu, group element)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraighteningExpansion<E> {
    pub target: Monomial,
    /// Terms in the deterministic `(mu, elem)` storage order.
    pub terms: Vec<ExpansionTerm<E>>,
}

impl<E> StraighteningExpansion<E> {
    /// Reconstructs the target by multiplying every term back out; the
    /// exactness oracle for tests and `verify`-style checks.
    pub fn expand<F: DescentFamily<Elem = E>>(&self, n: usize) -> MPoly<Int> {
        let mut out = MPoly::zero(n);
        for term in &self.terms {
            let product = F::multiplier(&term.mu, n)
                .mul_monomial(&F::basis_monomial(&term.elem), &term.coeff);
            out.add_assign(&product);
        }
        out
    }
}

/// A homogeneous class in the quotient, written in the descent basis.
#[derive(Clone, Debug)]
pub struct QuotientVector<E> {
    degree: usize,
    coeffs: BTreeMap<E, Int>,
}

/// Zero vectors are equal across degrees; the zero class lives in every
/// graded piece.
impl<E: Ord> PartialEq for QuotientVector<E> {
    fn eq(&self, other: &Self) -> bool {
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return true;
        }
        self.degree == other.degree && self.coeffs == other.coeffs
    }
}

impl<E: Ord> Eq for QuotientVector<E> {}

impl<E: Clone + Ord> QuotientVector<E> {
    pub fn zero(degree: usize) -> Self {
        QuotientVector {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: &E) -> Int {
        self.coeffs.get(w).cloned().unwrap_or_else(Int::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&E, &Int)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    fn add_term(&mut self, w: E, c: Int) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(w) {
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

    /// The represented polynomial `sum coeff * basis monomial`.
    pub fn to_polynomial<F: DescentFamily<Elem = E>>(&self, n: usize) -> MPoly<Int> {
        let mut out = MPoly::zero(n);
        for (w, c) in &self.coeffs {
            out.add_term(F::basis_monomial(w), c.clone());
        }
        out
    }
}

type ExpansionMap<F> = BTreeMap<(Partition, <F as DescentFamily>::Elem), Int>;

/// Straightening engine for one family at one rank; memoizes monomial
/// expansions across calls on the same instance.
///
/// Two memo tables are kept: full expansions over `(mu, w)` pairs for
/// [`Straightener::straighten`], and the cheaper normal-form-only maps over
/// `w` for quotient computations, where the lead product term vanishes
/// whenever `mu` is nonempty.
pub struct Straightener<F: DescentFamily> {
    n: usize,
    memo: HashMap<Monomial, Rc<ExpansionMap<F>>>,
    nf_memo: HashMap<Monomial, Rc<BTreeMap<F::Elem, Int>>>,
}

impl<F: DescentFamily> Straightener<F> {
    pub fn new(n: usize) -> Result<Self> {
        check_capacity("n", n, F::MAX_N)?;
        if n == 0 {
            return Err(Error::Domain("straightening needs n >= 1".into()));
        }
        Ok(Straightener {
            n,
            memo: HashMap::new(),
            nf_memo: HashMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Exact expansion of a monomial; public entry with desk degree bound.
    pub fn straighten(&mut self, m: &Monomial) -> Result<StraighteningExpansion<F::Elem>> {
        if m.n() != self.n {
            return Err(Error::DimensionMismatch(m.n(), self.n));
        }
        check_capacity("degree", m.total_degree(), STRAIGHTEN_MAX_DEGREE)?;
        let map = self.expansion(m);
        Ok(StraighteningExpansion {
            target: m.clone(),
            terms: map
                .iter()
                .map(|((mu, w), c)| ExpansionTerm {
                    coeff: c.clone(),
                    mu: mu.clone(),
                    elem: w.clone(),
                })
                .collect(),
        })
    }

    /// Normal form of a homogeneous polynomial in the quotient; public
    /// entry with desk degree bound.
    pub fn normal_form(&mut self, p: &MPoly<Int>) -> Result<QuotientVector<F::Elem>> {
        let degree = p
            .degree_if_homogeneous()
            .ok_or_else(|| Error::Domain("normal form requires a homogeneous polynomial".into()))?;
        check_capacity("degree", degree, STRAIGHTEN_MAX_DEGREE)?;
        Ok(self.normal_form_unchecked(p, degree))
    }

    /// Internal normal form without the degree cap; used by traces and the
    /// character tables, whose basis monomials legitimately exceed it.
    pub(crate) fn normal_form_unchecked(
        &mut self,
        p: &MPoly<Int>,
        degree: usize,
    ) -> QuotientVector<F::Elem> {
        assert_eq!(p.n(), self.n, "variable count mismatch");
        let mut out = QuotientVector::zero(degree);
        for (m, c) in p.terms() {
            let map = self.nf_expansion(m);
            for (w, coeff) in map.iter() {
                out.add_term(w.clone(), coeff.clone() * c.clone());
            }
        }
        out
    }

    /// Memoized normal-form recursion over basis elements only.  When the
    /// complementary partition of `m` is nonempty, the lead product term
    /// lies in the ideal and drops out, leaving `-sum c' NF(m')` over the
    /// strictly smaller product terms; otherwise `m` is itself a basis
    /// monomial.
    fn nf_expansion(&mut self, m: &Monomial) -> Rc<BTreeMap<F::Elem, Int>> {
        if let Some(hit) = self.nf_memo.get(m) {
            return hit.clone();
        }
        let (mu, w) = F::analyze(m);
        let mut result: BTreeMap<F::Elem, Int> = BTreeMap::new();
        if mu.is_empty() {
            result.insert(w, Int::one());
        } else {
            let lead = F::basis_monomial(&w);
            let product = F::multiplier(&mu, self.n).mul_monomial(&lead, &Int::one());
            let mut others: Vec<(Monomial, Int)> = product
                .terms()
                .filter(|(m2, _)| *m2 != m)
                .map(|(m2, c2)| (m2.clone(), c2.clone()))
                .collect();
            others.reverse();
            for (m2, c2) in others {
                let sub = self.nf_expansion(&m2);
                for (key, c) in sub.iter() {
                    let delta = c.clone() * c2.clone();
                    let entry = result.entry(key.clone()).or_insert_with(Int::zero);
                    *entry -= delta;
                    if entry.is_zero() {
                        result.remove(key);
                    }
                }
            }
        }
        let rc = Rc::new(result);
        self.nf_memo.insert(m.clone(), rc.clone());
        rc
    }

    /// Memoized core recursion: `m = e_mu * basis(w) - (smaller terms)`.
    fn expansion(&mut self, m: &Monomial) -> Rc<ExpansionMap<F>> {
        if let Some(hit) = self.memo.get(m) {
            return hit.clone();
        }
        let (mu, w) = F::analyze(m);
        let lead = F::basis_monomial(&w);
        let product = F::multiplier(&mu, self.n).mul_monomial(&lead, &Int::one());
        debug_assert!(
            product.coeff(m).is_one(),
            "type {} lead product must contain the target exactly once",
            F::NAME
        );
        let mut result: ExpansionMap<F> = BTreeMap::new();
        result.insert((mu, w), Int::one());
        // Decreasing storage order; the expansion is unique, so order only
        // affects memo hit patterns.
        let mut others: Vec<(Monomial, Int)> = product
            .terms()
            .filter(|(m2, _)| *m2 != m)
            .map(|(m2, c2)| (m2.clone(), c2.clone()))
            .collect();
        others.reverse();
        for (m2, c2) in others {
            debug_assert_eq!(
                F::cmp(&m2, m).expect("product terms share the target degree"),
                PosetCmp::Less,
                "type {} product term {m2} must lie strictly below {m}",
                F::NAME
            );
            let sub = self.expansion(&m2);
            for (key, c) in sub.iter() {
                let delta = c.clone() * c2.clone();
                let entry = result.entry(key.clone()).or_insert_with(Int::zero);
                *entry -= delta;
                if entry.is_zero() {
                    result.remove(key);
                }
            }
        }
        let rc = Rc::new(result);
        self.memo.insert(m.clone(), rc.clone());
        rc
    }

    /// Graded trace of `tau` on the quotient: the diagonal coefficient of
    /// the normal form of `tau` applied to each basis monomial, weighted by
    /// `q` to the exponent partition of that monomial.
    pub fn graded_trace(&mut self, tau: &F::Elem) -> Result<MPoly<Int>> {
        check_capacity("n", self.n, F::TRACE_MAX_N)?;
        let mut out = MPoly::zero(self.n);
        for w in F::enumerate(self.n)? {
            let basis = F::basis_monomial(&w);
            let (image, negative) = act_monomial(tau, &basis);
            let nf =
                self.normal_form_unchecked(&MPoly::monomial(image, Int::one()), basis.total_degree());
            let mut diag = nf.coeff(&w);
            if negative {
                diag = -diag;
            }
            let q_exps: Vec<Exp> = basis
                .exponent_partition()
                .padded(self.n)?
                .into_iter()
                .map(|e| e as Exp)
                .collect();
            out.add_term(Monomial::new(q_exps), diag);
        }
        Ok(out)
    }

    /// Whether the normal form of `tau` applied to the basis element of `w`
    /// is supported on elements whose exponent partition is dominated by
    /// that of `w`.
    pub fn triangularity_check(&mut self, tau: &F::Elem, w: &F::Elem) -> Result<bool> {
        let basis = F::basis_monomial(w);
        let lambda = basis.exponent_partition();
        let (image, _sign) = act_monomial(tau, &basis);
        let nf = self.normal_form_unchecked(&MPoly::monomial(image, Int::one()), basis.total_degree());
        for (w2, _) in nf.terms() {
            let lambda2 = F::basis_monomial(w2).exponent_partition();
            match lambda2.dominance_cmp(&lambda)? {
                PosetCmp::Less | PosetCmp::Equal => {}
                PosetCmp::Greater | PosetCmp::Incomparable => return Ok(false),
            }
        }
        Ok(true)
    }
}

/// One multiplication step: `m` times the product of the first `k`
/// variables in the family's sorting order (squared in type B), together
/// with the other monomials of `m * e_k` (all carrying coefficient 1),
/// each strictly below the stepped monomial, listed largest first.
pub fn straighten_step<F: DescentFamily>(
    m: &Monomial,
    k: usize,
) -> Result<(Monomial, Vec<Monomial>)> {
    let n = m.n();
    if k < 1 || k > n {
        return Err(Error::Domain(format!("step index {k} is outside 1..={n}")));
    }
    let order = F::variable_order(m);
    let mut step_exps = vec![0 as Exp; n];
    for &var in order.iter().take(k) {
        step_exps[var - 1] += F::STEP_SCALE;
    }
    let stepped = m.mul(&Monomial::new(step_exps));
    let product =
        F::multiplier(&Partition::new(vec![k])?, n).mul_monomial(m, &Int::one());
    debug_assert!(product.coeff(&stepped).is_one());
    let mut remainder: Vec<Monomial> = product
        .terms()
        .filter(|(m2, _)| *m2 != &stepped)
        .map(|(m2, _)| m2.clone())
        .collect();
    remainder.reverse();
    for m2 in &remainder {
        debug_assert_eq!(
            F::cmp(m2, &stepped).expect("equal degrees"),
            PosetCmp::Less,
            "step remainder {m2} must lie strictly below {stepped}"
        );
    }
    Ok((stepped, remainder))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn shape(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn signed(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn step_examples() {
        let unit = Monomial::unit(3);
        let (m3, rem) = straighten_step::<TypeA>(&unit, 3).unwrap();
        assert_eq!(m3, mono("1,1,1"));
        assert!(rem.is_empty());
        let (m1, rem) = straighten_step::<TypeA>(&unit, 1).unwrap();
        assert_eq!(m1, mono("1,0,0"));
        assert_eq!(rem, vec![mono("0,1,0"), mono("0,0,1")]);
        let (mk, rem) = straighten_step::<TypeA>(&mono("0,1,0"), 1).unwrap();
        assert_eq!(mk, mono("0,2,0"));
        assert_eq!(rem, vec![mono("1,1,0"), mono("0,1,1")]);
        assert!(straighten_step::<TypeA>(&unit, 4).is_err());
        assert!(straighten_step::<TypeA>(&unit, 0).is_err());
        // Type B steps contribute squares along the signed order.
        let (mb, rem) = straighten_step::<TypeB>(&mono("1,0"), 1).unwrap();
        assert_eq!(mb, mono("3,0"));
        assert_eq!(rem, vec![mono("1,2")]);
    }

    #[test]
    fn straighten_worked_example() {
        let mut s = Straightener::<TypeA>::new(3).unwrap();
        let e = s.straighten(&mono("2,1,1")).unwrap();
        let got: Vec<(String, String, String)> = e
            .terms
            .iter()
            .map(|t| (t.coeff.to_string(), t.mu.to_string(), t.elem.to_string()))
            .collect();
        assert_eq!(got.len(), 3);
        assert!(got.contains(&("1".into(), "3,1".into(), "1,2,3".into())));
        assert!(got.contains(&("-1".into(), "3".into(), "2,1,3".into())));
        assert!(got.contains(&("-1".into(), "3".into(), "3,1,2".into())));
        assert_eq!(e.expand::<TypeA>(3), MPoly::monomial(mono("2,1,1"), Int::one()));
    }

    #[test]
    fn straighten_descent_monomial_is_single_term() {
        let mut s = Straightener::<TypeA>::new(4).unwrap();
        for w in enumerate_sn(4).unwrap() {
            let e = s.straighten(&descent_monomial(&w)).unwrap();
            assert_eq!(e.terms.len(), 1);
            assert_eq!(e.terms[0].coeff, Int::one());
            assert!(e.terms[0].mu.is_empty());
            assert_eq!(e.terms[0].elem, w);
        }
        let mut sb = Straightener::<TypeB>::new(2).unwrap();
        for w in enumerate_bn(2).unwrap() {
            let e = sb.straighten(&signed_descent_monomial(&w)).unwrap();
            assert_eq!(e.terms.len(), 1);
            assert!(e.terms[0].mu.is_empty());
            assert_eq!(e.terms[0].elem, w);
        }
    }

    #[test]
    fn straighten_b_square_example() {
        let mut s = Straightener::<TypeB>::new(1).unwrap();
        let e = s.straighten(&mono("2")).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].coeff, Int::one());
        assert_eq!(e.terms[0].mu, shape("1"));
        assert_eq!(e.terms[0].elem, signed("1"));
    }

    #[test]
    fn expansion_is_exact_for_all_small_monomials() {
        let mut s = Straightener::<TypeA>::new(3).unwrap();
        for d in 0..=5 {
            for m in crate::polyring::monomials_of_degree(3, d) {
                let e = s.straighten(&m).unwrap();
                assert_eq!(
                    e.expand::<TypeA>(3),
                    MPoly::monomial(m.clone(), Int::one()),
                    "monomial {m}"
                );
            }
        }
        let mut sb = Straightener::<TypeB>::new(2).unwrap();
        for d in 0..=6 {
            for m in crate::polyring::monomials_of_degree(2, d) {
                let e = sb.straighten(&m).unwrap();
                assert_eq!(
                    e.expand::<TypeB>(2),
                    MPoly::monomial(m.clone(), Int::one()),
                    "monomial {m}"
                );
            }
        }
    }

    #[test]
    fn normal_form_examples() {
        let mut s = Straightener::<TypeA>::new(2).unwrap();
        let e1 = crate::polyring::elementary::<Int>(2, 1);
        assert!(s.normal_form(&e1).unwrap().is_zero());
        let mut s3 = Straightener::<TypeA>::new(3).unwrap();
        let nf = s3
            .normal_form(&MPoly::monomial(mono("2,1,1"), Int::one()))
            .unwrap();
        assert!(nf.is_zero());
        // Unit vectors on basis elements.
        for w in enumerate_sn(3).unwrap() {
            let nf = s3
                .normal_form(&MPoly::monomial(descent_monomial(&w), Int::one()))
                .unwrap();
            assert_eq!(nf.num_terms(), 1);
            assert_eq!(nf.coeff(&w), Int::one());
        }
        // Non-homogeneous input is rejected.
        let mixed = MPoly::<Int>::one(2).add(&MPoly::variable(2, 1));
        assert!(s.normal_form(&mixed).is_err());
    }

    #[test]
    fn normal_form_agrees_with_full_expansion() {
        // The dedicated normal-form recursion must match the empty-mu slice
        // of the full expansion on every monomial.
        let mut sa = Straightener::<TypeA>::new(3).unwrap();
        for d in 0..=4 {
            for m in crate::polyring::monomials_of_degree(3, d) {
                let full = sa.straighten(&m).unwrap();
                let nf = sa.normal_form(&MPoly::monomial(m, Int::one())).unwrap();
                for term in &full.terms {
                    if term.mu.is_empty() {
                        assert_eq!(nf.coeff(&term.elem), term.coeff);
                    }
                }
                let kept = full.terms.iter().filter(|t| t.mu.is_empty()).count();
                assert_eq!(nf.num_terms(), kept);
            }
        }
        let mut sb = Straightener::<TypeB>::new(2).unwrap();
        for d in 0..=5 {
            for m in crate::polyring::monomials_of_degree(2, d) {
                let full = sb.straighten(&m).unwrap();
                let nf = sb.normal_form(&MPoly::monomial(m, Int::one())).unwrap();
                for term in &full.terms {
                    if term.mu.is_empty() {
                        assert_eq!(nf.coeff(&term.elem), term.coeff);
                    }
                }
                let kept = full.terms.iter().filter(|t| t.mu.is_empty()).count();
                assert_eq!(nf.num_terms(), kept);
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent() {
        let mut s = Straightener::<TypeA>::new(3).unwrap();
        for d in 0..=4 {
            for m in crate::polyring::monomials_of_degree(3, d) {
                let nf = s.normal_form(&MPoly::monomial(m, Int::one())).unwrap();
                let back = s.normal_form(&nf.to_polynomial::<TypeA>(3)).unwrap();
                assert_eq!(nf, back);
            }
        }
    }

    #[test]
    fn normal_form_parity_preserved_in_type_b() {
        let mut s = Straightener::<TypeB>::new(3).unwrap();
        for d in 0..=5 {
            for m in crate::polyring::monomials_of_degree(3, d) {
                let e = s.straighten(&m).unwrap();
                for term in &e.terms {
                    let b = signed_descent_monomial(&term.elem);
                    let same = b
                        .exps()
                        .iter()
                        .zip(m.exps())
                        .all(|(&x, &y)| x % 2 == y % 2);
                    assert!(same, "parity of {b} differs from {m}");
                }
            }
        }
    }

    #[test]
    fn graded_trace_examples() {
        let mut s = Straightener::<TypeA>::new(2).unwrap();
        let id = s.graded_trace(&perm("1,2")).unwrap();
        let mut expected = MPoly::<Int>::one(2);
        expected.add_term(mono("1,0"), Int::one());
        assert_eq!(id, expected);
        let flip = s.graded_trace(&perm("2,1")).unwrap();
        let mut expected = MPoly::<Int>::one(2);
        expected.add_term(mono("1,0"), -Int::one());
        assert_eq!(flip, expected);
        let mut sb = Straightener::<TypeB>::new(1).unwrap();
        let idb = sb.graded_trace(&signed("1")).unwrap();
        let mut expected = MPoly::<Int>::one(1);
        expected.add_term(mono("1"), Int::one());
        assert_eq!(idb, expected);
    }

    #[test]
    fn graded_trace_at_one_counts_by_exponent_partition() {
        // Setting q_i = 1 in the identity trace gives the group order.
        let mut s = Straightener::<TypeA>::new(4).unwrap();
        let t = s.graded_trace(&Permutation::identity(4)).unwrap();
        let total: Int = t.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, Int::from(24));
        let mut sb = Straightener::<TypeB>::new(2).unwrap();
        let tb = sb.graded_trace(&SignedPermutation::identity(2)).unwrap();
        let total: Int = tb.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, Int::from(8));
    }

    #[test]
    fn triangularity_small_ranks() {
        let mut s = Straightener::<TypeA>::new(3).unwrap();
        for tau in enumerate_sn(3).unwrap() {
            for w in enumerate_sn(3).unwrap() {
                assert!(s.triangularity_check(&tau, &w).unwrap(), "{tau} on {w}");
            }
        }
        let mut sb = Straightener::<TypeB>::new(2).unwrap();
        for tau in enumerate_bn(2).unwrap() {
            for w in enumerate_bn(2).unwrap() {
                assert!(sb.triangularity_check(&tau, &w).unwrap(), "{tau} on {w}");
            }
        }
    }

    #[test]
    fn capacity_bounds() {
        assert!(Straightener::<TypeA>::new(7).is_err());
        assert!(Straightener::<TypeB>::new(6).is_err());
        let mut s = Straightener::<TypeA>::new(2).unwrap();
        let too_big = Monomial::new(vec![11, 0]);
        assert!(s.straighten(&too_big).is_err());
        let mut s5 = Straightener::<TypeA>::new(5).unwrap();
        assert!(s5.graded_trace(&Permutation::identity(5)).is_ok());
        let mut sb5 = Straightener::<TypeB>::new(5).unwrap();
        assert!(sb5.graded_trace(&SignedPermutation::identity(5)).is_err());
    }
}
