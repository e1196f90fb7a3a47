//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its elapsed time. Every expected value is pinned here or in the bundled
//! fixtures; nothing is deferred to later calibration.

use std::collections::HashSet;
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use gmet::counting::{self, B1Class};
use gmet::group::{Group, Limits};
use gmet::io::{expected_rows, identification_candidates, resolve_spec, run_tables, TablesOptions};
use gmet::metrics::{
    add_weights, chain_weight, extended_lee_weight, hamming_weight, homogeneous_weight_zn,
    induced_partition, lee_weight, level_sets, p_equivalent, poset_weight, product_hamming_weight,
    verify_weight_axioms, weight_from_partition, WeightFunction,
};
use gmet::partitions::{
    bell, enumerate_conjugate_partitions, enumerate_unitary_symmetric_partitions,
    finest_conjugate_partition, k_bi_invariant, k_invariant, lee_partition, BlockPartition,
};
use gmet::symmetry::{identify_group, symmetry_group, PermGroup};

fn build(spec: &str) -> Group {
    resolve_spec(spec, &Limits::default()).unwrap_or_else(|e| panic!("build {spec}: {e}"))
}

fn order_usize(p: &PermGroup) -> usize {
    p.order().to_string().parse().unwrap()
}

/// Criterion 1: the 42 groups of order up to 16 reproduce the expected
/// (k, k*) Bell indices exactly, in under 60 seconds.
#[test]
fn criterion_01_table_reproduction_up_to_16() {
    let start = Instant::now();
    let report = run_tables(
        &TablesOptions {
            max_order: Some(16),
            ..Default::default()
        },
        &expected_rows(),
    );
    assert_eq!(report.rows.len(), 42, "42 groups of order <= 16");
    assert_eq!(report.skipped, 0, "all rows constructible from built-ins");
    assert_eq!(report.errors, 0);
    let mismatched: Vec<usize> = report
        .rows
        .iter()
        .filter(|r| r.matched != Some(true))
        .map(|r| r.row)
        .collect();
    assert!(mismatched.is_empty(), "mismatched rows: {mismatched:?}");
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "criterion 1 exceeded 60 s: {elapsed:?}"
    );
    println!("criterion 1 PASS: 42/42 rows of order <= 16 match ({elapsed:?})");
}

/// Criterion 2: for every group of order up to 8 the number of enumerated
/// unitary symmetric partitions equals B_k and the number of conjugate ones
/// equals B_k*, in under 30 seconds.
#[test]
fn criterion_02_enumeration_equals_bell() {
    let start = Instant::now();
    let mut groups = 0;
    for row in expected_rows().iter().filter(|r| r.order <= 8) {
        let spec = row
            .spec
            .as_deref()
            .expect("all groups of order <= 8 are built in");
        let g = build(spec);
        let count = enumerate_unitary_symmetric_partitions(&g).unwrap().count();
        assert_eq!(
            BigUint::from(count),
            bell(k_invariant(&g)),
            "unitary symmetric count for {spec}"
        );
        let conj_count = enumerate_conjugate_partitions(&g).unwrap().count();
        assert_eq!(
            BigUint::from(conj_count),
            bell(k_bi_invariant(&g)),
            "conjugate count for {spec}"
        );
        groups += 1;
    }
    assert_eq!(groups, 14);
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 30,
        "criterion 2 exceeded 30 s: {elapsed:?}"
    );
    println!(
        "criterion 2 PASS: enumeration counts equal Bell numbers for {groups} groups ({elapsed:?})"
    );
}

fn partition_set(g: &Group) -> HashSet<Vec<Vec<usize>>> {
    enumerate_unitary_symmetric_partitions(g)
        .unwrap()
        .map(|p| p.blocks().to_vec())
        .collect()
}

fn named_partition(g: &Group, blocks: &[&[&str]]) -> BlockPartition {
    let index = |name: &str| {
        g.index_of_name(name)
            .unwrap_or_else(|| panic!("no element named {name}"))
    };
    let mut all: Vec<Vec<usize>> = vec![vec![0]];
    all.extend(
        blocks
            .iter()
            .map(|b| b.iter().map(|n| index(n)).collect::<Vec<usize>>()),
    );
    BlockPartition::new(g.order(), all).unwrap()
}

/// Criterion 3: the enumerated partitions of Z4, Z2^2, Z6, S3, Z7 match the
/// explicit reference lists as canonical sets.
#[test]
fn criterion_03_small_group_partition_listings() {
    let start = Instant::now();
    // Z4: two partitions
    let z4 = build("C4");
    let got = partition_set(&z4);
    let want: HashSet<Vec<Vec<usize>>> = [
        vec![vec![0], vec![1, 2, 3]],
        vec![vec![0], vec![1, 3], vec![2]],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want, "Z4 partitions");

    // Z2^2: five partitions; indices 1=(0,1), 2=(1,0), 3=(1,1)
    let klein = build("C2^2");
    let got = partition_set(&klein);
    let want: HashSet<Vec<Vec<usize>>> = [
        vec![vec![0], vec![1, 2, 3]],
        vec![vec![0], vec![1, 2], vec![3]],
        vec![vec![0], vec![1, 3], vec![2]],
        vec![vec![0], vec![1], vec![2, 3]],
        vec![vec![0], vec![1], vec![2], vec![3]],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want, "Z2^2 partitions");

    // Z6: five partitions
    let z6 = build("C6");
    let got = partition_set(&z6);
    let want: HashSet<Vec<Vec<usize>>> = [
        vec![vec![0], vec![1, 2, 3, 4, 5]],
        vec![vec![0], vec![1, 2, 4, 5], vec![3]],
        vec![vec![0], vec![1, 3, 5], vec![2, 4]],
        vec![vec![0], vec![1, 5], vec![2, 3, 4]],
        vec![vec![0], vec![1, 5], vec![2, 4], vec![3]],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want, "Z6 partitions");

    // S3: fifteen partitions, written with the transposition/cycle names
    let s3 = build("S3");
    let got = partition_set(&s3);
    let want: HashSet<Vec<Vec<usize>>> = s3_reference_partitions(&s3)
        .into_iter()
        .map(|(p, _)| p.blocks().to_vec())
        .collect();
    assert_eq!(got.len(), 15);
    assert_eq!(got, want, "S3 partitions");

    // Z7: five partitions
    let z7 = build("C7");
    let got = partition_set(&z7);
    let want: HashSet<Vec<Vec<usize>>> = [
        vec![vec![0], vec![1, 2, 3, 4, 5, 6]],
        vec![vec![0], vec![1, 6], vec![2, 3, 4, 5]],
        vec![vec![0], vec![2, 5], vec![1, 3, 4, 6]],
        vec![vec![0], vec![3, 4], vec![1, 2, 5, 6]],
        vec![vec![0], vec![1, 6], vec![2, 5], vec![3, 4]],
    ]
    .into_iter()
    .map(|blocks| BlockPartition::new(7, blocks).unwrap().blocks().to_vec())
    .collect();
    assert_eq!(got, want, "Z7 partitions");

    println!(
        "criterion 3 PASS: reference partition listings match ({:?})",
        start.elapsed()
    );
}

/// The 15 reference metric classes of S3 with their symmetry-group orders.
fn s3_reference_partitions(s3: &Group) -> Vec<(BlockPartition, usize)> {
    let t12 = "(1 2)";
    let t13 = "(1 3)";
    let t23 = "(2 3)";
    let c1 = "(1 2 3)";
    let c2 = "(1 3 2)";
    vec![
        (named_partition(s3, &[&[t12, t13, t23, c1, c2]]), 720),
        (named_partition(s3, &[&[t12, t13, t23], &[c1, c2]]), 72),
        (named_partition(s3, &[&[t12], &[t13, t23, c1, c2]]), 48),
        (named_partition(s3, &[&[t13], &[t12, t23, c1, c2]]), 48),
        (named_partition(s3, &[&[t23], &[t12, t13, c1, c2]]), 48),
        (named_partition(s3, &[&[t12, t13], &[t23, c1, c2]]), 12),
        (named_partition(s3, &[&[t12, t23], &[t13, c1, c2]]), 12),
        (named_partition(s3, &[&[t13, t23], &[t12, c1, c2]]), 12),
        (named_partition(s3, &[&[t12], &[t13, t23], &[c1, c2]]), 12),
        (named_partition(s3, &[&[t13], &[t12, t23], &[c1, c2]]), 12),
        (named_partition(s3, &[&[t23], &[t12, t13], &[c1, c2]]), 12),
        (named_partition(s3, &[&[t12], &[t13], &[t23, c1, c2]]), 6),
        (named_partition(s3, &[&[t12], &[t23], &[t13, c1, c2]]), 6),
        (named_partition(s3, &[&[t13], &[t23], &[t12, c1, c2]]), 6),
        (named_partition(s3, &[&[t12], &[t13], &[t23], &[c1, c2]]), 6),
    ]
}

/// Criterion 4: symmetry-group orders match the reference values, with the
/// order-64 conjugate-Lee groups of Q8 and D4 identified as C2 wr (C2 x C2).
#[test]
fn criterion_04_symmetry_group_orders() {
    let start = Instant::now();

    let expect_orders = |spec: &str, want: &[usize]| {
        let g = build(spec);
        let got: Vec<usize> = enumerate_unitary_symmetric_partitions(&g)
            .unwrap()
            .map(|p| order_usize(&symmetry_group(&g, &p).unwrap()))
            .collect();
        assert_eq!(got, want, "symmetry orders for {spec}");
    };
    expect_orders("C4", &[24, 8]);
    expect_orders("C2^2", &[24, 8, 8, 8, 4]);
    expect_orders("C6", &[720, 48, 72, 12, 12]);
    expect_orders("C7", &[5040, 14, 14, 14, 14]);

    // S3: look each enumerated partition up in the reference list
    let s3 = build("S3");
    let reference = s3_reference_partitions(&s3);
    let mut seen = 0;
    for p in enumerate_unitary_symmetric_partitions(&s3).unwrap() {
        let want = reference
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, o)| *o)
            .expect("every enumerated partition is in the reference list");
        let gamma = symmetry_group(&s3, &p).unwrap();
        assert_eq!(order_usize(&gamma), want, "S3 partition {:?}", p.blocks());
        seen += 1;
    }
    assert_eq!(seen, 15);

    // conjugate-Lee classes of Q8 and D4: order 64, identified by
    // isomorphism as the wreath product C2 wr (C2 x C2)
    for spec in ["Q8", "D4"] {
        let g = build(spec);
        let p = finest_conjugate_partition(&g);
        let gamma = symmetry_group(&g, &p).unwrap();
        assert_eq!(order_usize(&gamma), 64, "conjugate-Lee symmetry of {spec}");
        let name = identify_group(&gamma, &identification_candidates(64)).unwrap();
        assert_eq!(
            name.as_deref(),
            Some("C2wr(C2xC2)"),
            "identification for {spec}"
        );
    }

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 300,
        "criterion 4 exceeded 5 min: {elapsed:?}"
    );
    println!("criterion 4 PASS: symmetry orders and identifications match ({elapsed:?})");
}

/// All color-preserving permutations by brute force over S_n.
fn brute_force_symmetries(g: &Group, p: &BlockPartition) -> Vec<Vec<usize>> {
    let n = g.order();
    let color = |x: usize, y: usize| p.block_of(g.mul(x, g.inv(y)));
    let mut result = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut check = |perm: &[usize]| {
        let ok = (0..n).all(|x| (x + 1..n).all(|y| color(perm[x], perm[y]) == color(x, y)));
        if ok {
            result.push(perm.to_vec());
        }
    };
    check(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            check(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    result
}

/// Criterion 5: for every group of order up to 7 and every partition, the
/// refinement search agrees with the factorial brute force on order and on
/// full membership.
#[test]
fn criterion_05_brute_force_oracle() {
    let start = Instant::now();
    let mut checked = 0;
    for row in expected_rows().iter().filter(|r| r.order <= 7) {
        let spec = row.spec.as_deref().unwrap();
        let g = build(spec);
        for p in enumerate_unitary_symmetric_partitions(&g).unwrap() {
            let gamma = symmetry_group(&g, &p).unwrap();
            let brute = brute_force_symmetries(&g, &p);
            assert_eq!(
                BigUint::from(brute.len()),
                gamma.order(),
                "order mismatch for {spec} partition {:?}",
                p.blocks()
            );
            for sigma in &brute {
                assert!(gamma.contains(sigma), "missing element for {spec}");
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 1 + 1 + 2 + 5 + 2 + 5 + 15 + 5);
    println!(
        "criterion 5 PASS: {checked} partition searches match the brute force ({:?})",
        start.elapsed()
    );
}

/// Criterion 6: closed-form family formulas equal direct computation.
#[test]
fn criterion_06_closed_forms_vs_direct() {
    let start = Instant::now();
    for n in 3..=10 {
        let g = Group::dihedral(n).unwrap();
        assert_eq!(
            counting::dihedral_k(n).unwrap(),
            k_invariant(&g),
            "dihedral_k({n})"
        );
        assert_eq!(
            counting::dihedral_kstar(n).unwrap(),
            k_bi_invariant(&g),
            "dihedral_kstar({n})"
        );
    }
    for n in 2..=6 {
        let g = Group::dicyclic(n).unwrap();
        assert_eq!(
            counting::dicyclic_k(n).unwrap(),
            k_invariant(&g),
            "dicyclic_k({n})"
        );
        assert_eq!(
            counting::dicyclic_kstar(n).unwrap(),
            k_bi_invariant(&g),
            "dicyclic_kstar({n})"
        );
    }
    for n in 4..=5u32 {
        for sign in [gmet::group::Sign::Plus, gmet::group::Sign::Minus] {
            let g = Group::quasidihedral(n, sign).unwrap();
            assert_eq!(
                counting::quasidihedral_k(n, sign).unwrap(),
                k_invariant(&g),
                "quasidihedral_k({n},{sign})"
            );
            assert_eq!(
                counting::quasidihedral_kstar(n, sign).unwrap(),
                k_bi_invariant(&g),
                "quasidihedral_kstar({n},{sign})"
            );
        }
    }
    for n in 3..=6 {
        let g = Group::symmetric(n).unwrap();
        assert_eq!(
            counting::symmetric_k(n).unwrap(),
            k_invariant(&g),
            "symmetric_k({n})"
        );
        assert_eq!(
            counting::symmetric_kstar(n).unwrap(),
            k_bi_invariant(&g),
            "symmetric_kstar({n})"
        );
    }
    for n in 4..=6 {
        let g = Group::alternating(n).unwrap();
        assert_eq!(
            counting::alternating_k(n).unwrap(),
            k_invariant(&g),
            "alternating_k({n})"
        );
        assert_eq!(
            counting::alternating_class_count(n),
            BigUint::from(g.class_count()),
            "alternating class count ({n})"
        );
        assert_eq!(
            counting::alternating_is_ambivalent(n),
            g.is_ambivalent(),
            "alternating ambivalence ({n})"
        );
    }
    println!(
        "criterion 6 PASS: closed forms equal direct computation ({:?})",
        start.elapsed()
    );
}

/// Criterion 7: among all constructed groups of order up to 32, k = k*
/// holds exactly for the abelian ones and Q8, Q8xC2, Q8xC2^2.
#[test]
fn criterion_07_bi_invariance_classification() {
    let start = Instant::now();
    let quaternionic: HashSet<&str> = ["Q8", "Q8xC2", "Q8xC2^2"].into_iter().collect();
    let mut constructed = 0;
    for row in expected_rows() {
        let Some(spec) = row.spec.as_deref() else {
            continue;
        };
        let g = build(spec);
        let equal = k_invariant(&g) == k_bi_invariant(&g);
        let expected = g.is_abelian() || quaternionic.contains(spec);
        assert_eq!(equal, expected, "k = k* classification for {spec}");
        assert_eq!(counting::all_invariant_are_bi(&g), equal);
        // the structural classifier agrees with the numeric test
        let class = counting::classify_b1(&g).unwrap();
        assert_eq!(
            class != B1Class::Neither,
            equal,
            "structural classifier for {spec}"
        );
        constructed += 1;
    }
    assert_eq!(constructed, 128);
    println!(
        "criterion 7 PASS: k = k* exactly for abelian and Q8 x Z2^k among {constructed} groups ({:?})",
        start.elapsed()
    );
}

/// Criterion 8: 1000 randomized partitions across groups of order up to 12;
/// the canonical integral weight passes the exhaustive axiom checks and
/// round-trips to its partition.
#[test]
fn criterion_08_randomized_weight_round_trip() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let start = Instant::now();
    let groups: Vec<Group> = expected_rows()
        .iter()
        .filter(|r| r.order <= 12)
        .map(|r| build(r.spec.as_deref().unwrap()))
        .collect();
    let mut rng = StdRng::seed_from_u64(0x6d65_7472);
    for trial in 0..1000 {
        let g = &groups[rng.random_range(0..groups.len())];
        let lee = lee_partition(g);
        let base = &lee.blocks()[1..];
        // random restricted-growth string over the Lee blocks
        let mut rgs: Vec<usize> = Vec::with_capacity(base.len());
        let mut max = 0;
        for i in 0..base.len() {
            let v = rng.random_range(0..=max + 1);
            rgs.push(v);
            if i == 0 {
                rgs[0] = 0;
            }
            max = max.max(rgs[i]);
        }
        let mut blocks: Vec<Vec<usize>> = vec![vec![0]];
        let groups_count = rgs.iter().max().map_or(0, |m| m + 1);
        let mut merged = vec![Vec::new(); groups_count];
        for (i, &v) in rgs.iter().enumerate() {
            merged[v].extend_from_slice(&base[i]);
        }
        blocks.extend(merged.into_iter().filter(|b| !b.is_empty()));
        let p = BlockPartition::new(g.order(), blocks).unwrap();

        let w = weight_from_partition(g, &p)
            .unwrap_or_else(|e| panic!("trial {trial}: weight construction failed: {e}"));
        let report = verify_weight_axioms(g, &w);
        assert!(report.all_ok(), "trial {trial}: axioms failed: {report:?}");
        let back = induced_partition(g, &w).unwrap();
        assert_eq!(back, p, "trial {trial}: round trip failed");
    }
    println!(
        "criterion 8 PASS: 1000 randomized canonical weights verified ({:?})",
        start.elapsed()
    );
}

/// Criterion 9: the named weight families reproduce the reference value
/// rows for Z4, Z2^2 and Z6 (exact rationals; P-equivalence where the
/// reference equates metrics rather than values).
#[test]
fn criterion_09_named_metric_fixtures() {
    let start = Instant::now();
    let rats = |v: &[i64]| -> Vec<BigRational> {
        v.iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect()
    };
    let values = |w: &WeightFunction| w.values().to_vec();

    // ---- Z4 ----
    let z4 = build("C4");
    assert_eq!(values(&hamming_weight(&z4)), rats(&[0, 1, 1, 1]));
    let lee4 = lee_weight(4);
    assert_eq!(values(&lee4), rats(&[0, 1, 2, 1]));
    assert_eq!(extended_lee_weight(4, 2).unwrap(), lee4);
    let chain4 = chain_weight(&z4, &[vec![0], vec![0, 2], vec![0, 1, 2, 3]]).unwrap();
    assert_eq!(values(&chain4), rats(&[0, 2, 1, 2]));
    assert!(p_equivalent(&z4, &chain4, &lee4).unwrap());
    let hom4 = homogeneous_weight_zn(4, &BigRational::one());
    assert_eq!(hom4, lee4); // with λ = 1 the homogeneous weight IS the Lee weight

    // ---- Z2^2 ---- (indices: 1 = (0,1), 2 = (1,0), 3 = (1,1))
    let klein = build("C2^2");
    let z2 = build("C2");
    assert_eq!(values(&hamming_weight(&klein)), rats(&[0, 1, 1, 1]));
    let leq12 = vec![vec![true, true], vec![false, true]];
    let (prod, w12) = poset_weight(&[&z2, &z2], &leq12).unwrap();
    assert_eq!(prod.order(), 4);
    assert_eq!(values(&w12), rats(&[0, 2, 1, 2])); // w(1,0)=1, w(1,1)=2, w(0,1)=2
    let leq21 = vec![vec![true, false], vec![true, true]];
    let (_, w21) = poset_weight(&[&z2, &z2], &leq21).unwrap();
    assert_eq!(values(&w21), rats(&[0, 1, 2, 2])); // w(1,0)=2, w(1,1)=2, w(0,1)=1
                                                   // chains along the three embedded Z2 subgroups
    let full: Vec<usize> = (0..4).collect();
    let chain_i1 = chain_weight(&klein, &[vec![0], vec![0, 2], full.clone()]).unwrap();
    assert_eq!(chain_i1, w12); // same values, not just equivalent
    let chain_i2 = chain_weight(&klein, &[vec![0], vec![0, 1], full.clone()]).unwrap();
    assert_eq!(chain_i2, w21);
    let chain_diag = chain_weight(&klein, &[vec![0], vec![0, 3], full.clone()]).unwrap();
    assert_eq!(values(&chain_diag), rats(&[0, 2, 2, 1])); // w(1,0)=2, w(1,1)=1, w(0,1)=2
    let (_, ham2) = product_hamming_weight(&[&z2, &z2]).unwrap();
    assert_eq!(values(&ham2), rats(&[0, 1, 1, 2]));
    assert!(p_equivalent(&klein, &ham2, &chain_diag).unwrap());
    // the finest class: the canonical weight induces the all-singleton partition
    let w5 = weight_from_partition(&klein, &lee_partition(&klein)).unwrap();
    let printed_w5 = WeightFunction::from_values(rats(&[0, 3, 1, 2]));
    assert!(p_equivalent(&klein, &w5, &printed_w5).unwrap());

    // ---- Z6 ----
    let z6 = build("C6");
    assert_eq!(values(&hamming_weight(&z6)), rats(&[0, 1, 1, 1, 1, 1]));
    let lee6 = lee_weight(6);
    assert_eq!(values(&lee6), rats(&[0, 1, 2, 3, 2, 1]));
    let w62 = extended_lee_weight(6, 2).unwrap();
    assert_eq!(values(&w62), rats(&[0, 1, 2, 2, 2, 1]));
    assert_eq!(extended_lee_weight(6, 3).unwrap(), lee6);
    // homogeneous weight with λ = 2: values (0,1,3,4,3,1), same class as Lee
    let hom6 = homogeneous_weight_zn(6, &BigRational::from_integer(2.into()));
    assert_eq!(values(&hom6), rats(&[0, 1, 3, 4, 3, 1]));
    assert_eq!(level_sets(&z6, &hom6), level_sets(&z6, &lee6));
    // chains: {0,3} ≅ Z2 gives the singleton-{3} class, {0,2,4} ≅ Z3 the other
    let all6: Vec<usize> = (0..6).collect();
    let chain_z2 = chain_weight(&z6, &[vec![0], vec![0, 3], all6.clone()]).unwrap();
    let printed_w2 = WeightFunction::from_values(rats(&[0, 1, 1, 2, 1, 1]));
    assert!(p_equivalent(&z6, &chain_z2, &printed_w2).unwrap());
    let chain_z3 = chain_weight(&z6, &[vec![0], vec![0, 2, 4], all6.clone()]).unwrap();
    let printed_w3 = WeightFunction::from_values(rats(&[0, 1, 2, 1, 2, 1]));
    assert!(p_equivalent(&z6, &chain_z3, &printed_w3).unwrap());
    // posets on Z2 x Z3 pulled back along x -> (x mod 2, x mod 3)
    let z3 = build("C3");
    let pull = |w: &WeightFunction| -> WeightFunction {
        let vals = (0..6)
            .map(|x| w.value((x % 2) * 3 + (x % 3)).clone())
            .collect();
        WeightFunction::from_values(vals)
    };
    let (_, p12) = poset_weight(&[&z2, &z3], &leq12).unwrap();
    assert!(p_equivalent(&z6, &pull(&p12), &printed_w2).unwrap());
    let (_, p21) = poset_weight(&[&z2, &z3], &leq21).unwrap();
    assert!(p_equivalent(&z6, &pull(&p21), &printed_w3).unwrap());
    let (_, ham23) = product_hamming_weight(&[&z2, &z3]).unwrap();
    assert!(p_equivalent(&z6, &pull(&ham23), &w62).unwrap());
    // the reference prints the Lee+Hamming mix 3·d_Ham = d_Lee + d' on Z4
    let w_prime = WeightFunction::from_values(rats(&[0, 2, 1, 2]));
    let sum = add_weights(&z4, &lee4, &w_prime).unwrap();
    assert_eq!(values(&sum), rats(&[0, 3, 3, 3]));

    println!(
        "criterion 9 PASS: named metric families match the value rows ({:?})",
        start.elapsed()
    );
}

/// Criterion 10: Bell numbers B1..B32 digit for digit, p(1..6), and
/// c(S_n) = p(n) for n up to 6.
#[test]
fn criterion_10_bell_and_partition_utilities() {
    let start = Instant::now();
    let fixture = gmet::io::bell_fixture();
    assert_eq!(fixture.len(), 32);
    for (i, want) in fixture.iter().enumerate() {
        assert_eq!(&bell(i + 1).to_string(), want, "B_{}", i + 1);
    }
    let p: Vec<String> = (1..=6)
        .map(|n| counting::partition_number(n).to_string())
        .collect();
    assert_eq!(p, vec!["1", "2", "3", "5", "7", "11"]);
    for n in 1..=6 {
        let g = Group::symmetric(n).unwrap();
        assert_eq!(
            BigUint::from(g.class_count()),
            counting::partition_number(n),
            "c(S_{n}) = p({n})"
        );
        assert!(g.is_ambivalent(), "S_{n} is ambivalent");
    }
    println!(
        "criterion 10 PASS: Bell and partition utilities match ({:?})",
        start.elapsed()
    );
}
