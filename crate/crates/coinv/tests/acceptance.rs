//! Acceptance suite: one test per release criterion, exact arithmetic
//! throughout, zero tolerance.  Run with `--nocapture` to see one
//! `ACCEPTANCE <k> <name>: PASS` line per criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coinv::groups::{enumerate_bn, enumerate_sn};
use coinv::polyring::{monomials_of_degree, Exp, MPoly, Monomial};
use coinv::reptheory::{
    bn_character, class_table_a, class_table_b, descent_character_table_a,
    descent_character_table_b, inner_product, sn_character,
};
use coinv::series::{
    verify_basis_a, verify_basis_b, verify_cor_abr, verify_cor_gessel, verify_lemma_tau,
    verify_lemma_tau_b, verify_phi_a, verify_phi_b, verify_thm_4_1, verify_thm_5_2,
    verify_thm_7_1, verify_thm_7_2, verify_thm_7_3, verify_thm_7_4, verify_trace_claims,
};
use coinv::shapes::{
    bipartitions_of, enumerate_syt, enumerate_syt_bi, partitions_of, phi_a, phi_a_inverse,
    phi_b, phi_b_inverse, Bipartition, Partition, ReverseSsyt, ReverseSsytB,
};
use coinv::straighten::{Straightener, TypeA, TypeB};
use coinv::{Int, Rat};

fn unit_poly(m: &Monomial) -> MPoly<Int> {
    MPoly::monomial(m.clone(), Int::from(1))
}

fn rat(v: usize) -> Rat {
    Rat::from_integer(Int::from(v))
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_degree: usize) -> Monomial {
    let degree = rng.gen_range(0..=max_degree);
    let mut exps = vec![0 as Exp; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

#[test]
fn criterion_01_straightening_exactness_a() {
    let start = Instant::now();
    for n in 1..=4 {
        let mut s = Straightener::<TypeA>::new(n).unwrap();
        for d in 0..=6 {
            for m in monomials_of_degree(n, d) {
                let e = s.straighten(&m).unwrap();
                assert_eq!(e.expand::<TypeA>(n), unit_poly(&m), "monomial {m}");
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20_260_822);
    let mut s = Straightener::<TypeA>::new(5).unwrap();
    for _ in 0..200 {
        let m = random_monomial(&mut rng, 5, 8);
        let e = s.straighten(&m).unwrap();
        assert_eq!(e.expand::<TypeA>(5), unit_poly(&m), "monomial {m}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("ACCEPTANCE 1 straightening-exactness-a: PASS ({elapsed:?})");
}

#[test]
fn criterion_02_straightening_exactness_b() {
    let start = Instant::now();
    let check = |n: usize, m: &Monomial, s: &mut Straightener<TypeB>| {
        let e = s.straighten(m).unwrap();
        assert_eq!(e.expand::<TypeB>(n), unit_poly(m), "monomial {m}");
        for term in &e.terms {
            let b = coinv::polyring::signed_descent_monomial(&term.elem);
            let parity_ok = b
                .exps()
                .iter()
                .zip(m.exps())
                .all(|(&x, &y)| x % 2 == y % 2);
            assert!(parity_ok, "parity of {b} differs from {m}");
        }
    };
    for n in 1..=3 {
        let mut s = Straightener::<TypeB>::new(n).unwrap();
        for d in 0..=6 {
            for m in monomials_of_degree(n, d) {
                check(n, &m, &mut s);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20_260_823);
    let mut s = Straightener::<TypeB>::new(4).unwrap();
    for _ in 0..200 {
        let m = random_monomial(&mut rng, 4, 8);
        check(4, &m, &mut s);
    }
    println!(
        "ACCEPTANCE 2 straightening-exactness-b: PASS ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_03_worked_example() {
    let mut s = Straightener::<TypeA>::new(3).unwrap();
    let m: Monomial = "2,1,1".parse().unwrap();
    let e = s.straighten(&m).unwrap();
    let got: BTreeSet<(String, String, String)> = e
        .terms
        .iter()
        .map(|t| (t.coeff.to_string(), t.mu.to_string(), t.elem.to_string()))
        .collect();
    let expected: BTreeSet<(String, String, String)> = [
        ("1", "3,1", "1,2,3"),
        ("-1", "3", "2,1,3"),
        ("-1", "3", "3,1,2"),
    ]
    .iter()
    .map(|(c, mu, w)| (c.to_string(), mu.to_string(), w.to_string()))
    .collect();
    assert_eq!(got, expected);
    println!("ACCEPTANCE 3 worked-example: PASS");
}

#[test]
fn criterion_04_basis_counts() {
    let a = verify_basis_a(7).unwrap();
    assert!(a.passed(), "{:?}", a.first_discrepancy);
    assert_eq!(a.elements, 5040);
    let b = verify_basis_b(5).unwrap();
    assert!(b.passed(), "{:?}", b.first_discrepancy);
    assert_eq!(b.elements, 3840);
    println!("ACCEPTANCE 4 basis-counts: PASS");
}

#[test]
fn criterion_05_exact_identity_b() {
    let start = Instant::now();
    for n in 1..=5 {
        let r = verify_thm_7_1(n).unwrap();
        assert!(r.passed(), "n = {n}: {:?}", r.first_discrepancy);
        if n == 5 {
            // Both sides over the full group.
            assert_eq!(r.elements, 2 * 3840);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("ACCEPTANCE 5 exact-identity-b: PASS ({elapsed:?})");
}

#[test]
fn criterion_06_census_series() {
    let start = Instant::now();
    for n in 1..=4 {
        let r2 = verify_thm_7_2(n, 8).unwrap();
        assert!(r2.passed(), "7.2 n = {n}: {:?}", r2.first_discrepancy);
        let r3 = verify_thm_7_3(n, 8).unwrap();
        assert!(r3.passed(), "7.3 n = {n}: {:?}", r3.first_discrepancy);
        let r4 = verify_thm_7_4(n, 8).unwrap();
        assert!(r4.passed(), "7.4 n = {n}: {:?}", r4.first_discrepancy);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!("ACCEPTANCE 6 census-series: PASS ({elapsed:?})");
}

#[test]
fn criterion_07_principal_specialization() {
    for n in 1..=5 {
        let r = verify_cor_gessel(n, 5).unwrap();
        assert!(r.passed(), "n = {n}: {:?}", r.first_discrepancy);
    }
    println!("ACCEPTANCE 7 principal-specialization: PASS");
}

#[test]
fn criterion_08_negative_statistics() {
    for n in 1..=5 {
        let r = verify_cor_abr(n).unwrap();
        assert!(r.passed(), "n = {n}: {:?}", r.first_discrepancy);
    }
    println!("ACCEPTANCE 8 negative-statistics: PASS");
}

#[test]
fn criterion_09_tableau_series() {
    for size in 1..=5 {
        for shape in partitions_of(size) {
            let r = verify_lemma_tau(&shape, 6).unwrap();
            assert!(r.passed(), "shape {shape}: {:?}", r.first_discrepancy);
        }
    }
    for total in 1..=4 {
        for shape in bipartitions_of(total) {
            let r = verify_lemma_tau_b(&shape, 6).unwrap();
            assert!(r.passed(), "shape {shape}: {:?}", r.first_discrepancy);
        }
    }
    println!("ACCEPTANCE 9 tableau-series: PASS");
}

#[test]
fn criterion_10_descent_multiplicities() {
    let start = Instant::now();
    for n in 1..=5 {
        let r = verify_thm_4_1(n).unwrap();
        assert!(r.passed(), "type A n = {n}: {:?}", r.first_discrepancy);
    }
    for n in 1..=3 {
        let r = verify_thm_5_2(n).unwrap();
        assert!(r.passed(), "type B n = {n}: {:?}", r.first_discrepancy);
    }
    println!(
        "ACCEPTANCE 10 descent-multiplicities: PASS ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_11_graded_aggregation() {
    let start = Instant::now();
    // Summing descent multiplicities over sets with a fixed element sum
    // recovers the major-index distribution over standard tableaux.
    for n in 1..=5 {
        let reps = descent_character_table_a(n).unwrap();
        let table = class_table_a(n).unwrap();
        for mu in partitions_of(n) {
            let chi = sn_character(&mu).unwrap();
            let tableaux = enumerate_syt(&mu).unwrap();
            for k in 0..=(n * (n - 1) / 2) {
                let mut total = rat(0);
                for (s, rep) in &reps {
                    if s.iter().sum::<usize>() == k {
                        total += inner_product(&table, rep, &chi).unwrap();
                    }
                }
                let count = tableaux.iter().filter(|t| t.maj() == k).count();
                assert_eq!(total, rat(count), "n = {n}, mu = {mu}, degree {k}");
            }
        }
    }
    // The flag analogue: grade by twice the first-set sum plus the size
    // of the sign set, matching the flag-major distribution.
    for n in 1..=3 {
        let reps = descent_character_table_b(n).unwrap();
        let table = class_table_b(n).unwrap();
        for shape in bipartitions_of(n) {
            let chi = bn_character(&shape).unwrap();
            let tableaux = enumerate_syt_bi(&shape.first, &shape.second).unwrap();
            for k in 0..=(n * n) {
                let mut total = rat(0);
                for ((s1, s2), rep) in &reps {
                    if 2 * s1.iter().sum::<usize>() + s2.len() == k {
                        total += inner_product(&table, rep, &chi).unwrap();
                    }
                }
                let count = tableaux.iter().filter(|t| t.fmaj() == k).count();
                assert_eq!(total, rat(count), "n = {n}, shape {shape}, degree {k}");
            }
        }
    }
    println!(
        "ACCEPTANCE 11 graded-aggregation: PASS ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_12_tableau_bijections() {
    let a = verify_phi_a(5, 7).unwrap();
    assert!(a.passed(), "{:?}", a.first_discrepancy);
    let b = verify_phi_b(5, 7).unwrap();
    assert!(b.passed(), "{:?}", b.first_discrepancy);
    // The two frozen worked examples, difference sequences included.
    let input: ReverseSsyt = "7,4,4;4,2;3,1".parse().unwrap();
    let (t, delta) = phi_a(&input);
    assert_eq!(t.to_string(), "1,3,4;2,6;5,7");
    assert_eq!(delta, vec![2, 0, 0, 0, 1, 0, 0]);
    assert_eq!(phi_a_inverse(&t, &delta).unwrap(), input);
    let input_b: ReverseSsytB = "11,7,3;3|10,8;2".parse().unwrap();
    let (tb, delta_b) = phi_b(&input_b);
    assert_eq!(tb.to_string(), "1,4,6;5|2,3;7");
    assert_eq!(delta_b, vec![0, 1, 0, 1, 0, 0, 0]);
    assert_eq!(phi_b_inverse(&tb, &delta_b).unwrap(), input_b);
    println!("ACCEPTANCE 12 tableau-bijections: PASS");
}

#[test]
fn criterion_13_graded_traces() {
    let start = Instant::now();
    for n in 1..=3 {
        let r = verify_trace_claims(n, 6).unwrap();
        assert!(r.passed(), "n = {n}: {:?}", r.first_discrepancy);
    }
    println!("ACCEPTANCE 13 graded-traces: PASS ({:?})", start.elapsed());
}

#[test]
fn criterion_14_character_sanity() {
    for n in 1..=6 {
        let table = class_table_a(n).unwrap();
        let shapes = partitions_of(n);
        let chars: Vec<_> = shapes
            .iter()
            .map(|l| sn_character(l).unwrap())
            .collect();
        for (i, ci) in chars.iter().enumerate() {
            for (j, cj) in chars.iter().enumerate() {
                let ip = inner_product(&table, ci, cj).unwrap();
                let expected = if i == j { rat(1) } else { rat(0) };
                assert_eq!(ip, expected, "shapes {} and {}", shapes[i], shapes[j]);
            }
            let identity = Partition::new(vec![1; n]).unwrap();
            let dim = enumerate_syt(&shapes[i]).unwrap().len();
            assert_eq!(ci.value(&identity).unwrap(), &rat(dim));
        }
    }
    for n in 1..=4 {
        let table = class_table_b(n).unwrap();
        let shapes = bipartitions_of(n);
        let chars: Vec<_> = shapes
            .iter()
            .map(|bp| bn_character(bp).unwrap())
            .collect();
        let identity = Bipartition {
            first: Partition::new(vec![1; n]).unwrap(),
            second: Partition::empty(),
        };
        for (i, ci) in chars.iter().enumerate() {
            for (j, cj) in chars.iter().enumerate() {
                let ip = inner_product(&table, ci, cj).unwrap();
                let expected = if i == j { rat(1) } else { rat(0) };
                assert_eq!(ip, expected, "shapes {} and {}", shapes[i], shapes[j]);
            }
            let dim = enumerate_syt_bi(&shapes[i].first, &shapes[i].second)
                .unwrap()
                .len();
            assert_eq!(ci.value(&identity).unwrap(), &rat(dim));
        }
    }
    // Regular-representation dimension count.
    for n in 1..=4 {
        let total: usize = bipartitions_of(n)
            .iter()
            .map(|bp| {
                enumerate_syt_bi(&bp.first, &bp.second)
                    .unwrap()
                    .len()
                    .pow(2)
            })
            .sum();
        assert_eq!(total, enumerate_bn(n).unwrap().len());
    }
    for n in 1..=6 {
        let total: usize = partitions_of(n)
            .iter()
            .map(|l| enumerate_syt(l).unwrap().len().pow(2))
            .sum();
        assert_eq!(total, enumerate_sn(n).unwrap().len());
    }
    println!("ACCEPTANCE 14 character-sanity: PASS");
}
