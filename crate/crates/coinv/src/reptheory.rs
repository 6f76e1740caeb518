//! Characters of the symmetric and hyperoctahedral groups, conjugacy-class
//! data, characters of the descent representations, and the multiplicity
//! computations that tie them to tableau counts.
//!
//! Conjugacy classes are labelled by cycle type (a partition of `n`) and,
//! in the signed case, by the pair (positive cycle lengths, negative cycle
//! lengths).  Irreducible characters come from the Murnaghan-Nakayama
//! recursion; the signed-group characters expand the two-alphabet power
//! sums by distributing each cycle over the alphabets with a sign.
//!
//! The descent representation attached to a descent set `S` (or a pair
//! `(S1, S2)`) is the span of the descent basis elements carrying those
//! statistics, viewed as a subquotient of its homogeneous component; its
//! character at `tau` is the sum of diagonal normal-form coefficients over
//! exactly those basis elements.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};

use crate::error::{check_capacity, Error, Result};
use crate::groups::{enumerate_bn, enumerate_sn, Permutation, SignedPermutation};
use crate::polyring::{act_monomial, descent_monomial, signed_descent_monomial, MPoly};
use crate::shapes::{
    enumerate_syt, enumerate_syt_bi, lambda_s1s2, partitions_of, Bipartition, Partition,
};
use crate::straighten::{Straightener, TypeA, TypeB};
use crate::{int_to_rat, Int, Rat};

/// Class tables of the symmetric group by formula.
pub const CLASS_TABLE_A_MAX_N: usize = 8;
/// Class tables of the signed permutation group by exhaustive grouping.
pub const CLASS_TABLE_B_MAX_N: usize = 6;
/// Largest shape size for [`sn_character`].
pub const SN_CHARACTER_MAX_SIZE: usize = 8;
/// Largest total shape size for [`bn_character`].
pub const BN_CHARACTER_MAX_TOTAL: usize = 5;
/// Desk bound for descent representation characters, type A.
pub const DESCENT_CHAR_A_MAX_N: usize = 5;
/// Desk bound for descent representation characters, type B.
pub const DESCENT_CHAR_B_MAX_N: usize = 3;

/// Conjugacy classes with their sizes, in label storage order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTable<L> {
    n: usize,
    entries: Vec<(L, Int)>,
}

impl<L: Clone + Ord> ClassTable<L> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(L, Int)] {
        &self.entries
    }

    pub fn num_classes(&self) -> usize {
        self.entries.len()
    }

    /// Sum of the class sizes: the group order.
    pub fn order(&self) -> Int {
        self.entries.iter().map(|(_, s)| s.clone()).sum()
    }

    pub fn size_of(&self, label: &L) -> Option<&Int> {
        self.entries
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, s)| s)
    }
}

/// A class function with exact rational values, one per class label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction<L> {
    n: usize,
    values: BTreeMap<L, Rat>,
}

impl<L: Clone + Ord> ClassFunction<L> {
    pub fn from_values(n: usize, values: BTreeMap<L, Rat>) -> Self {
        ClassFunction { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, label: &L) -> Option<&Rat> {
        self.values.get(label)
    }

    pub fn values(&self) -> impl Iterator<Item = (&L, &Rat)> {
        self.values.iter()
    }

    pub fn num_classes(&self) -> usize {
        self.values.len()
    }
}

/// `(1/|G|) * sum over classes of size * f * g` for real-valued characters.
pub fn inner_product<L: Clone + Ord>(
    table: &ClassTable<L>,
    f: &ClassFunction<L>,
    g: &ClassFunction<L>,
) -> Result<Rat> {
    let mut total = Rat::zero();
    for (label, size) in table.entries() {
        let fv = f
            .value(label)
            .ok_or_else(|| Error::Domain("class function misses a class label".into()))?;
        let gv = g
            .value(label)
            .ok_or_else(|| Error::Domain("class function misses a class label".into()))?;
        total += int_to_rat(size) * fv * gv;
    }
    Ok(total / int_to_rat(&table.order()))
}

/// The cycle type of a permutation.
pub fn cycle_type(w: &Permutation) -> Partition {
    let n = w.n();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 1..=n {
        if seen[start - 1] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i - 1] {
            seen[i - 1] = true;
            len += 1;
            i = w.image(i);
        }
        lengths.push(len);
    }
    Partition::from_unsorted(lengths)
}

/// The signed cycle type: positive-cycle lengths in the first component,
/// negative-cycle lengths (cycles whose sign product is negative) in the
/// second.
pub fn signed_cycle_type(w: &SignedPermutation) -> Bipartition {
    let n = w.n();
    let mut seen = vec![false; n];
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    for start in 1..=n {
        if seen[start - 1] {
            continue;
        }
        let mut len = 0;
        let mut sign_negative = false;
        let mut i = start;
        while !seen[i - 1] {
            seen[i - 1] = true;
            len += 1;
            let v = w.image(i);
            if v < 0 {
                sign_negative = !sign_negative;
            }
            i = v.unsigned_abs() as usize;
        }
        if sign_negative {
            negative.push(len);
        } else {
            positive.push(len);
        }
    }
    Bipartition::new(
        Partition::from_unsorted(positive),
        Partition::from_unsorted(negative),
    )
}

/// A permutation with the given cycle type, built from consecutive blocks.
pub fn sn_class_representative(mu: &Partition) -> Permutation {
    let n = mu.size();
    let mut window = Vec::with_capacity(n);
    let mut start = 1usize;
    for &part in mu.parts() {
        for off in 0..part {
            window.push(if off + 1 < part { start + off + 1 } else { start });
        }
        start += part;
    }
    Permutation::from_window(window).expect("consecutive cycles form a permutation")
}

/// A signed permutation with the given signed cycle type: consecutive
/// blocks, one sign flip closing each negative cycle.
pub fn bn_class_representative(bp: &Bipartition) -> SignedPermutation {
    let n = bp.total_size();
    let mut window: Vec<i64> = Vec::with_capacity(n);
    let mut start = 1i64;
    for (parts, negative) in [(&bp.first, false), (&bp.second, true)] {
        for &part in parts.parts() {
            let part = part as i64;
            for off in 0..part {
                if off + 1 < part {
                    window.push(start + off + 1);
                } else {
                    window.push(if negative { -start } else { start });
                }
            }
            start += part;
        }
    }
    SignedPermutation::from_window(window).expect("consecutive cycles form a signed window")
}

/// Conjugacy classes of the symmetric group with sizes
/// `n! / prod(j^{m_j} m_j!)`.
pub fn class_table_a(n: usize) -> Result<ClassTable<Partition>> {
    check_capacity("n", n, CLASS_TABLE_A_MAX_N)?;
    let factorial: Int = (1..=n as u64).map(Int::from).product();
    let mut entries = Vec::new();
    let mut labels = partitions_of(n);
    labels.sort();
    for mu in labels {
        let mut z = Int::one();
        let mut mult: BTreeMap<usize, u32> = BTreeMap::new();
        for &p in mu.parts() {
            *mult.entry(p).or_default() += 1;
        }
        for (&j, &m) in &mult {
            for _ in 0..m {
                z *= Int::from(j as u64);
            }
            let m_factorial: Int = (1..=m as u64).map(Int::from).product();
            z *= m_factorial;
        }
        entries.push((mu, factorial.clone() / z));
    }
    Ok(ClassTable { n, entries })
}

/// Conjugacy classes of the signed permutation group, sizes obtained by
/// grouping all elements by signed cycle type.
pub fn class_table_b(n: usize) -> Result<ClassTable<Bipartition>> {
    check_capacity("n", n, CLASS_TABLE_B_MAX_N)?;
    let mut counts: BTreeMap<Bipartition, Int> = BTreeMap::new();
    for w in enumerate_bn(n)? {
        *counts.entry(signed_cycle_type(&w)).or_insert_with(Int::zero) += Int::one();
    }
    Ok(ClassTable {
        n,
        entries: counts.into_iter().collect(),
    })
}

/// Murnaghan-Nakayama value of the irreducible character of shape `lambda`
/// at cycle type `mu`; shapes and cycle types must have equal size.
pub fn sn_character_value(lambda: &Partition, mu: &Partition) -> Result<Int> {
    if lambda.size() != mu.size() {
        return Err(Error::Domain(format!(
            "character shape has size {}, class has size {}",
            lambda.size(),
            mu.size()
        )));
    }
    check_capacity("|shape|", lambda.size(), SN_CHARACTER_MAX_SIZE)?;
    let mut memo = HashMap::new();
    Ok(Int::from(mn_value(
        lambda.parts(),
        mu.parts(),
        0,
        &mut memo,
    )))
}

/// Removes one border strip of size `strip` from the shape in all possible
/// ways via beta numbers, recursing on the remaining cycle lengths.
fn mn_value(
    lambda: &[usize],
    mu: &[usize],
    idx: usize,
    memo: &mut HashMap<(Vec<usize>, usize), i64>,
) -> i64 {
    if idx == mu.len() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), idx);
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let strip = mu[idx] as i64;
    let len = lambda.len();
    let betas: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (len - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for i in 0..len {
        let target = betas[i] - strip;
        if target < 0 || betas.contains(&target) {
            continue;
        }
        let height = betas
            .iter()
            .filter(|&&b| b > target && b < betas[i])
            .count();
        let mut next: Vec<i64> = betas.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let reduced: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (len - 1 - j) as i64) as usize)
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_value(&reduced, mu, idx + 1, memo);
    }
    memo.insert(key, total);
    total
}

/// The irreducible character of the symmetric group indexed by `lambda`,
/// tabulated on every cycle type.
pub fn sn_character(lambda: &Partition) -> Result<ClassFunction<Partition>> {
    check_capacity("|shape|", lambda.size(), SN_CHARACTER_MAX_SIZE)?;
    let n = lambda.size();
    let mut values = BTreeMap::new();
    for mu in partitions_of(n) {
        let v = sn_character_value(lambda, &mu)?;
        values.insert(mu, int_to_rat(&v));
    }
    Ok(ClassFunction { n, values })
}

/// Character of the signed permutation group indexed by a pair of shapes at
/// a signed class: each positive cycle is distributed over the two
/// alphabets with sign `+`, each negative cycle with sign `-` on the second
/// alphabet; distributions whose first-alphabet sizes match `|lambda^1|`
/// contribute a product of symmetric group characters.
pub fn bn_character_value(shape: &Bipartition, class: &Bipartition) -> Result<Int> {
    if shape.total_size() != class.total_size() {
        return Err(Error::Domain(format!(
            "character shape has size {}, class has size {}",
            shape.total_size(),
            class.total_size()
        )));
    }
    check_capacity("|shape|", shape.total_size(), BN_CHARACTER_MAX_TOTAL)?;
    let pos = class.first.parts();
    let neg = class.second.parts();
    let want = shape.first.size();
    let mut total = Int::zero();
    for mask1 in 0u32..(1 << pos.len()) {
        for mask2 in 0u32..(1 << neg.len()) {
            let mut first_parts = Vec::new();
            let mut second_parts = Vec::new();
            let mut sign_negative = false;
            for (i, &p) in pos.iter().enumerate() {
                if mask1 >> i & 1 == 0 {
                    first_parts.push(p);
                } else {
                    second_parts.push(p);
                }
            }
            for (j, &p) in neg.iter().enumerate() {
                if mask2 >> j & 1 == 0 {
                    first_parts.push(p);
                } else {
                    second_parts.push(p);
                    sign_negative = !sign_negative;
                }
            }
            if first_parts.iter().sum::<usize>() != want {
                continue;
            }
            let rho1 = Partition::from_unsorted(first_parts);
            let rho2 = Partition::from_unsorted(second_parts);
            let product =
                sn_character_value(&shape.first, &rho1)? * sn_character_value(&shape.second, &rho2)?;
            if sign_negative {
                total -= product;
            } else {
                total += product;
            }
        }
    }
    Ok(total)
}

/// The irreducible character of the signed permutation group indexed by a
/// pair of shapes, tabulated on every signed class.
pub fn bn_character(shape: &Bipartition) -> Result<ClassFunction<Bipartition>> {
    check_capacity("|shape|", shape.total_size(), BN_CHARACTER_MAX_TOTAL)?;
    let n = shape.total_size();
    let table = class_table_b(n)?;
    let mut values = BTreeMap::new();
    for (class, _) in table.entries() {
        let v = bn_character_value(shape, class)?;
        values.insert(class.clone(), int_to_rat(&v));
    }
    Ok(ClassFunction { n, values })
}

fn validate_subset(s: &BTreeSet<usize>, lo: usize, hi: usize, what: &str) -> Result<()> {
    if let Some(&bad) = s.iter().find(|&&x| x < lo || x > hi) {
        return Err(Error::Domain(format!(
            "{what} element {bad} is outside {lo}..={hi}"
        )));
    }
    Ok(())
}

/// Characters of every type A descent representation at once, keyed by
/// descent set; one straightening memo is shared across all classes.
pub fn descent_character_table_a(
    n: usize,
) -> Result<BTreeMap<Vec<usize>, ClassFunction<Partition>>> {
    check_capacity("n", n, DESCENT_CHAR_A_MAX_N)?;
    let table = class_table_a(n)?;
    let mut straightener = Straightener::<TypeA>::new(n)?;
    let perms = enumerate_sn(n)?;
    let mut buckets: BTreeMap<Vec<usize>, BTreeMap<Partition, Rat>> = BTreeMap::new();
    for w in &perms {
        buckets.entry(w.stats().des_set).or_default();
    }
    for (label, _) in table.entries() {
        let tau = sn_class_representative(label);
        for w in &perms {
            let basis = descent_monomial(w);
            let (image, _sign) = act_monomial(&tau, &basis);
            let nf = straightener
                .normal_form_unchecked(&MPoly::monomial(image, Int::one()), basis.total_degree());
            let diag = nf.coeff(w);
            let slot = buckets
                .get_mut(&w.stats().des_set)
                .expect("bucket preallocated")
                .entry(label.clone())
                .or_insert_with(Rat::zero);
            *slot += int_to_rat(&diag);
        }
    }
    Ok(buckets
        .into_iter()
        .map(|(s, values)| (s, ClassFunction { n, values }))
        .collect())
}

/// Character of the type A descent representation of one descent set
/// `S` inside `{1, ..., n-1}`.
pub fn descent_rep_character_a(
    n: usize,
    s: &BTreeSet<usize>,
) -> Result<ClassFunction<Partition>> {
    check_capacity("n", n, DESCENT_CHAR_A_MAX_N)?;
    if n == 0 {
        return Err(Error::Domain("descent representations need n >= 1".into()));
    }
    validate_subset(s, 1, n.saturating_sub(1), "descent set")?;
    let table = class_table_a(n)?;
    let mut straightener = Straightener::<TypeA>::new(n)?;
    let members: Vec<Permutation> = enumerate_sn(n)?
        .into_iter()
        .filter(|w| w.stats().des_set.iter().copied().collect::<BTreeSet<_>>() == *s)
        .collect();
    let mut values = BTreeMap::new();
    for (label, _) in table.entries() {
        let tau = sn_class_representative(label);
        let mut total = Int::zero();
        for w in &members {
            let basis = descent_monomial(w);
            let (image, _sign) = act_monomial(&tau, &basis);
            let nf = straightener
                .normal_form_unchecked(&MPoly::monomial(image, Int::one()), basis.total_degree());
            total += nf.coeff(w);
        }
        values.insert(label.clone(), int_to_rat(&total));
    }
    Ok(ClassFunction { n, values })
}

/// Characters of every type B descent representation at once, keyed by the
/// pair (descent set, negative-position set).
#[allow(clippy::type_complexity)]
pub fn descent_character_table_b(
    n: usize,
) -> Result<BTreeMap<(Vec<usize>, Vec<usize>), ClassFunction<Bipartition>>> {
    check_capacity("n", n, DESCENT_CHAR_B_MAX_N)?;
    let table = class_table_b(n)?;
    let mut straightener = Straightener::<TypeB>::new(n)?;
    let elements = enumerate_bn(n)?;
    let mut buckets: BTreeMap<(Vec<usize>, Vec<usize>), BTreeMap<Bipartition, Rat>> =
        BTreeMap::new();
    for w in &elements {
        let st = w.stats();
        buckets.entry((st.window.des_set, st.neg_set)).or_default();
    }
    for (label, _) in table.entries() {
        let tau = bn_class_representative(label);
        for w in &elements {
            let basis = signed_descent_monomial(w);
            let (image, negative) = act_monomial(&tau, &basis);
            let nf = straightener
                .normal_form_unchecked(&MPoly::monomial(image, Int::one()), basis.total_degree());
            let mut diag = nf.coeff(w);
            if negative {
                diag = -diag;
            }
            let st = w.stats();
            let slot = buckets
                .get_mut(&(st.window.des_set, st.neg_set))
                .expect("bucket preallocated")
                .entry(label.clone())
                .or_insert_with(Rat::zero);
            *slot += int_to_rat(&diag);
        }
    }
    Ok(buckets
        .into_iter()
        .map(|(s, values)| (s, ClassFunction { n, values }))
        .collect())
}

/// Character of the type B descent representation of the pair
/// `(S1 inside {1..n-1}, S2 inside {1..n})`; errors when the associated
/// degree vector fails to be a partition (the representation is zero
/// there).
pub fn descent_rep_character_b(
    n: usize,
    s1: &BTreeSet<usize>,
    s2: &BTreeSet<usize>,
) -> Result<ClassFunction<Bipartition>> {
    check_capacity("n", n, DESCENT_CHAR_B_MAX_N)?;
    if n == 0 {
        return Err(Error::Domain("descent representations need n >= 1".into()));
    }
    let (_, is_partition) = lambda_s1s2(s1, s2, n)?;
    if !is_partition {
        return Err(Error::Domain(
            "the degree vector of (S1, S2) is not a partition; the representation is zero".into(),
        ));
    }
    let table = class_table_b(n)?;
    let mut straightener = Straightener::<TypeB>::new(n)?;
    let s1_vec: Vec<usize> = s1.iter().copied().collect();
    let s2_vec: Vec<usize> = s2.iter().copied().collect();
    let members: Vec<SignedPermutation> = enumerate_bn(n)?
        .into_iter()
        .filter(|w| {
            let st = w.stats();
            st.window.des_set == s1_vec && st.neg_set == s2_vec
        })
        .collect();
    let mut values = BTreeMap::new();
    for (label, _) in table.entries() {
        let tau = bn_class_representative(label);
        let mut total = Int::zero();
        for w in &members {
            let basis = signed_descent_monomial(w);
            let (image, negative) = act_monomial(&tau, &basis);
            let nf = straightener
                .normal_form_unchecked(&MPoly::monomial(image, Int::one()), basis.total_degree());
            let diag = nf.coeff(w);
            total += if negative { -diag } else { diag };
        }
        values.insert(label.clone(), int_to_rat(&total));
    }
    Ok(ClassFunction { n, values })
}

/// A multiplicity computed two independent ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicity {
    /// Number of standard tableaux with the prescribed descent data.
    pub tableau_count: usize,
    /// Character inner product of the descent representation with the
    /// irreducible.
    pub inner_product: Rat,
}

impl Multiplicity {
    /// Whether both computations agree (the multiplicity contract).
    pub fn agrees(&self) -> bool {
        self.inner_product == int_to_rat(&Int::from(self.tableau_count as u64))
    }
}

/// Multiplicity of the irreducible `mu` in the type A descent
/// representation of `S`, by tableau count and by inner product.
pub fn multiplicity_a(s: &BTreeSet<usize>, mu: &Partition) -> Result<Multiplicity> {
    let n = mu.size();
    let tableau_count = enumerate_syt(mu)?
        .iter()
        .filter(|t| t.des_set().iter().copied().collect::<BTreeSet<_>>() == *s)
        .count();
    let rep = descent_rep_character_a(n, s)?;
    let chi = sn_character(mu)?;
    let table = class_table_a(n)?;
    let inner = inner_product(&table, &rep, &chi)?;
    Ok(Multiplicity {
        tableau_count,
        inner_product: inner,
    })
}

/// Multiplicity of the irreducible pair `shape` in the type B descent
/// representation of `(S1, S2)`.
pub fn multiplicity_b(
    s1: &BTreeSet<usize>,
    s2: &BTreeSet<usize>,
    shape: &Bipartition,
) -> Result<Multiplicity> {
    let n = shape.total_size();
    let tableau_count = enumerate_syt_bi(&shape.first, &shape.second)?
        .iter()
        .filter(|t| {
            t.des_set().iter().copied().collect::<BTreeSet<_>>() == *s1
                && t.neg_set().iter().copied().collect::<BTreeSet<_>>() == *s2
        })
        .count();
    let rep = descent_rep_character_b(n, s1, s2)?;
    let chi = bn_character(shape)?;
    let table = class_table_b(n)?;
    let inner = inner_product(&table, &rep, &chi)?;
    Ok(Multiplicity {
        tableau_count,
        inner_product: inner,
    })
}
