//! Acceptance suite: one test per criterion, each printing a single
//! `criterion NN (<name>): PASS|FAIL` line. All checks are exact; there are
//! no tolerances anywhere. Run with
//! `cargo test -p rrca-cli --test acceptance -- --nocapture`.

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rrca::blocks::{
    baby_verma_eigenvalues, block_invariant, block_partition_gm1n, block_partition_gmdn,
    eigenvalue_route_agrees, predicted_eigenvalue_multiset, BlockError, BlockPartition,
    ModuleLabel,
};
use rrca::cherednik::CherednikAlgebra;
use rrca::combin::{
    enumerate_multipartitions, enumerate_standard_tableaux, Multipartition, Partition,
};
use rrca::exactnum::{CycloField, Cyclotomic, Rational};
use rrca::params::{h_to_c, NumericParams, ParamSpec};

fn report(number: u32, name: &str, ok: bool) {
    println!("criterion {number:02} ({name}): {}", if ok { "PASS" } else { "FAIL" });
}

fn random_cyclo(rng: &mut ChaCha8Rng, field: &CycloField) -> Cyclotomic {
    let coeffs: Vec<Rational> = (0..field.degree())
        .map(|_| Rational::new(rng.gen_range(-4i64..=4).into(), rng.gen_range(1i64..=3).into()))
        .collect();
    field.from_coeffs(coeffs)
}

fn random_nonzero_cyclo(rng: &mut ChaCha8Rng, field: &CycloField) -> Cyclotomic {
    loop {
        let v = random_cyclo(rng, field);
        if !v.is_zero() {
            return v;
        }
    }
}

fn random_params(rng: &mut ChaCha8Rng, m: usize) -> NumericParams {
    let field = CycloField::new(m as u32);
    let kappa = random_cyclo(rng, &field);
    let c: Vec<Cyclotomic> = (1..m).map(|_| random_cyclo(rng, &field)).collect();
    NumericParams::new(m, kappa, c).unwrap()
}

fn mp(raw: &[&[u32]]) -> Multipartition {
    Multipartition::new(raw.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect())
}

fn classes_as_sets(p: &BlockPartition) -> Vec<Vec<ModuleLabel>> {
    let mut classes = p.classes.clone();
    for c in &mut classes {
        c.sort();
    }
    classes.sort();
    classes
}

#[test]
fn criterion_01_centrality() {
    let mut ok = true;
    for (m, n) in [(1usize, 2usize), (1, 3), (2, 2), (3, 2), (2, 3)] {
        let alg = CherednikAlgebra::new(m, n).unwrap();
        for r in 1..=n {
            let pass = alg.check_centrality(r).unwrap();
            if !pass {
                eprintln!("  centrality failed at (m,n,r)=({m},{n},{r})");
                ok = false;
            }
        }
    }
    // negative control: the perturbed family must fail the check
    let alg = CherednikAlgebra::new(1, 2).unwrap();
    for r in 1..=2 {
        if alg.check_centrality_perturbed(r).unwrap() {
            eprintln!("  perturbed control unexpectedly passed at (1,2), r={r}");
            ok = false;
        }
    }
    let alg = CherednikAlgebra::new(2, 3).unwrap();
    if alg.check_centrality_perturbed(1).unwrap() {
        eprintln!("  perturbed control unexpectedly passed at (2,3), r=1");
        ok = false;
    }
    report(1, "centrality of symmetric Dunkl-Opdam polynomials", ok);
    assert!(ok);
}

#[test]
fn criterion_02_relation_suite() {
    let mut ok = true;
    for (m, n) in [(1usize, 3usize), (2, 2), (3, 2), (2, 3)] {
        let alg = CherednikAlgebra::new(m, n).unwrap();
        let rep = alg.relation_suite().unwrap();
        for case in rep.cases.iter().filter(|c| !c.pass) {
            eprintln!("  relation failed at (m,n)=({m},{n}): {}", case.id);
            ok = false;
        }
    }
    report(2, "commutation relation suite", ok);
    assert!(ok);
}

#[test]
fn criterion_03_p_lemma_suite() {
    let mut ok = true;
    for (m, n) in [(1usize, 3usize), (1, 4), (2, 3)] {
        let alg = CherednikAlgebra::new(m, n).unwrap();
        let rep = alg.p_lemma_suite(None, None).unwrap();
        for case in rep.cases.iter().filter(|c| !c.pass) {
            eprintln!("  P-lemma failed at (m,n)=({m},{n}): {}", case.id);
            ok = false;
        }
    }
    report(3, "P-sum bookkeeping, commutation lemma, telescoped P-sum recursion", ok);
    assert!(ok);
}

#[test]
fn criterion_04_euler_identity() {
    let mut ok = true;
    for (m, n) in [(1usize, 2usize), (2, 2), (3, 2)] {
        let alg = CherednikAlgebra::new(m, n).unwrap();
        if alg.sym_poly(1).unwrap() != alg.euler_element().unwrap() {
            eprintln!("  Euler identity failed at (m,n)=({m},{n})");
            ok = false;
        }
    }
    report(4, "sum of z_i equals the Euler element", ok);
    assert!(ok);
}

#[test]
fn criterion_05_involution() {
    let alg = CherednikAlgebra::new(2, 3).unwrap();
    let rep = alg.psi_suite().unwrap();
    let ok = rep.all_pass();
    for case in rep.cases.iter().filter(|c| !c.pass) {
        eprintln!("  involution case failed: {}", case.id);
    }
    report(5, "involution squares to identity and swaps the z_i", ok);
    assert!(ok);
}

#[test]
fn criterion_06_parameter_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(600);
    let mut ok = true;
    for _ in 0..100 {
        let m = rng.gen_range(1usize..=6);
        let params = random_params(&mut rng, m);
        for beta in 0..m {
            if !params.check_beta_identity(beta) {
                eprintln!("  parameter identity failed at m={m}, beta={beta}");
                ok = false;
            }
        }
        let derived = params.derive();
        let c_back = h_to_c(m, &derived.big_h).unwrap();
        if c_back != params.c() {
            eprintln!("  c <-> H roundtrip failed at m={m}");
            ok = false;
        }
    }
    report(6, "parameter identity and exact c <-> H roundtrip", ok);
    assert!(ok);
}

#[test]
fn criterion_07_block_partition_golden_case() {
    let field = CycloField::new(2);
    let params = ParamSpec::Numeric(
        NumericParams::new(2, field.integer(1), vec![field.integer(1)]).unwrap(),
    );
    let partition = block_partition_gm1n(2, 2, &params).unwrap();
    let mut expected = vec![
        vec![ModuleLabel::Wreath(mp(&[&[2], &[]]))],
        vec![ModuleLabel::Wreath(mp(&[&[], &[1, 1]]))],
        vec![
            ModuleLabel::Wreath(mp(&[&[], &[2]])),
            ModuleLabel::Wreath(mp(&[&[1], &[1]])),
            ModuleLabel::Wreath(mp(&[&[1, 1], &[]])),
        ],
    ];
    for c in &mut expected {
        c.sort();
    }
    expected.sort();
    let ok = classes_as_sets(&partition) == expected;
    report(7, "golden 3-class partition at m=2, n=2, kappa=1, c=1", ok);
    assert!(ok);
}

#[test]
fn criterion_08_wreath_block_consequences() {
    let mut ok = true;
    // generic partitions are all singletons
    for m in 1..=3usize {
        for n in 0..=5usize {
            let partition = block_partition_gm1n(m, n, &ParamSpec::Generic { m }).unwrap();
            let expected = enumerate_multipartitions(m, n).len();
            if partition.class_count() != expected
                || !partition.classes.iter().all(|c| c.len() == 1)
            {
                eprintln!("  generic partition not all-singleton at m={m} n={n}");
                ok = false;
            }
        }
    }
    // kappa = 0 with distinct a-values groups by component size vectors
    let field = CycloField::new(3);
    let kappa0 = NumericParams::new(3, field.zero(), vec![field.integer(1), field.integer(2)])
        .unwrap();
    let derived = kappa0.derive();
    assert!(derived.a[0] != derived.a[1] && derived.a[0] != derived.a[2] && derived.a[1] != derived.a[2]);
    for n in 0..=4usize {
        let partition = block_partition_gm1n(3, n, &ParamSpec::Numeric(kappa0.clone())).unwrap();
        for class in &partition.classes {
            let sizes: Vec<Vec<usize>> = class
                .iter()
                .map(|l| match l {
                    ModuleLabel::Wreath(lam) => {
                        lam.components().iter().map(|p| p.size()).collect()
                    }
                    _ => unreachable!(),
                })
                .collect();
            if !sizes.windows(2).all(|w| w[0] == w[1]) {
                eprintln!("  kappa=0 class mixes size vectors at n={n}");
                ok = false;
            }
        }
        // and distinct size vectors never share a class
        let mut by_sizes = std::collections::BTreeMap::new();
        for lam in enumerate_multipartitions(3, n) {
            let sizes: Vec<usize> = lam.components().iter().map(|p| p.size()).collect();
            let class = partition.class_of(&ModuleLabel::Wreath(lam)).unwrap();
            if *by_sizes.entry(sizes).or_insert(class) != class {
                eprintln!("  kappa=0 size-vector fiber split at n={n}");
                ok = false;
            }
        }
    }
    // m = 1 with kappa nonzero: all singletons up to n = 8
    let field1 = CycloField::new(1);
    let m1 = ParamSpec::Numeric(NumericParams::new(1, field1.integer(1), vec![]).unwrap());
    for n in 0..=8usize {
        let partition = block_partition_gm1n(1, n, &m1).unwrap();
        if partition.class_count() != enumerate_multipartitions(1, n).len() {
            eprintln!("  m=1 partition not all-singleton at n={n}");
            ok = false;
        }
    }
    // scaling invariance under 20 random nonzero scalars
    let mut rng = ChaCha8Rng::seed_from_u64(800);
    for m in 1..=3usize {
        let base = random_params(&mut rng, m);
        let n = 3;
        let reference =
            classes_as_sets(&block_partition_gm1n(m, n, &ParamSpec::Numeric(base.clone())).unwrap());
        for _ in 0..20 {
            let a = random_nonzero_cyclo(&mut rng, base.field());
            let scaled = base.scale(&a).unwrap();
            let scaled_classes =
                classes_as_sets(&block_partition_gm1n(m, n, &ParamSpec::Numeric(scaled)).unwrap());
            if scaled_classes != reference {
                eprintln!("  scaling changed the partition at m={m}, scalar {a}");
                ok = false;
            }
        }
    }
    report(8, "generic/kappa=0/m=1/scaling consequences of the block criterion", ok);
    assert!(ok);
}

#[test]
fn criterion_09_eigenvalue_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(900);
    let mut ok = true;
    for m in 1..=3usize {
        for n in 0..=4usize {
            let params = random_params(&mut rng, m);
            let lambdas = enumerate_multipartitions(m, n);
            // tableau independence and the box-wise formula
            let mut multisets = Vec::with_capacity(lambdas.len());
            for lambda in &lambdas {
                let predicted = predicted_eigenvalue_multiset(lambda, &params).unwrap();
                for t in enumerate_standard_tableaux(lambda) {
                    let mut ev = baby_verma_eigenvalues(lambda, &t, &params).unwrap();
                    ev.sort();
                    if ev != predicted {
                        eprintln!("  eigenvalue mismatch at m={m} n={n} lambda={lambda}");
                        ok = false;
                    }
                }
                multisets.push(predicted);
            }
            // eigenvalue classes coincide with invariant classes
            let spec = ParamSpec::Numeric(params.clone());
            let invariants: Vec<_> = lambdas
                .iter()
                .map(|l| block_invariant(l, &spec).unwrap())
                .collect();
            for i in 0..lambdas.len() {
                for j in (i + 1)..lambdas.len() {
                    if (multisets[i] == multisets[j]) != (invariants[i] == invariants[j]) {
                        eprintln!(
                            "  class mismatch at m={m} n={n}: {} vs {}",
                            lambdas[i], lambdas[j]
                        );
                        ok = false;
                    }
                }
            }
            // the public cross-check agrees on a sample of pairs
            if !lambdas.is_empty() {
                for _ in 0..20 {
                    let a = &lambdas[rng.gen_range(0..lambdas.len())];
                    let b = &lambdas[rng.gen_range(0..lambdas.len())];
                    if !eigenvalue_route_agrees(a, b, &params).unwrap() {
                        eprintln!("  eigenvalue_route_agrees failed: {a} vs {b}");
                        ok = false;
                    }
                }
            }
        }
    }
    report(9, "baby Verma eigenvalue multisets match the block invariants", ok);
    assert!(ok);
}

#[test]
fn criterion_10_normal_subgroup_blocks() {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    let mut ok = true;
    // d = 1 reduction is literally the wreath partition
    for m in 1..=3usize {
        let params = ParamSpec::Numeric(random_params(&mut rng, m));
        let a = block_partition_gmdn(m, 1, 3, &params).unwrap();
        let b = block_partition_gm1n(m, 3, &params).unwrap();
        if a != b {
            eprintln!("  d=1 reduction differs at m={m}");
            ok = false;
        }
    }
    // the stuttering split at m=2, d=2, n=4 with generic kappa
    let generic = ParamSpec::Generic { m: 2 };
    let partition = block_partition_gmdn(2, 2, 4, &generic).unwrap();
    let rep = mp(&[&[1, 1], &[1, 1]]);
    let l0 = ModuleLabel::Orbit { rep: rep.clone(), epsilon: 0 };
    let l1 = ModuleLabel::Orbit { rep, epsilon: 1 };
    if partition.same_class(&l0, &l1) || partition.class_of(&l0).is_none() {
        eprintln!("  stuttering split missing at m=2 d=2 n=4 (generic)");
        ok = false;
    }
    // kappa = 0 collapses everything into a single block
    let field = CycloField::new(2);
    let kappa0 = ParamSpec::Numeric(
        NumericParams::new(2, field.zero(), vec![field.zero()]).unwrap(),
    );
    let collapsed = block_partition_gmdn(2, 2, 4, &kappa0).unwrap();
    if collapsed.class_count() != 1 {
        eprintln!("  kappa=0 collapse failed: {} classes", collapsed.class_count());
        ok = false;
    }
    // orbit-invariance of invariants for m <= 8, every d | m, admissible params
    for m in 1..=8usize {
        for d in 1..=m {
            if m % d != 0 {
                continue;
            }
            let field = CycloField::new(m as u32);
            let mut c = Vec::new();
            for l in 1..m {
                if l % d == 0 {
                    c.push(random_cyclo(&mut rng, &field));
                } else {
                    c.push(field.zero());
                }
            }
            let params = ParamSpec::Numeric(
                NumericParams::new(m, random_cyclo(&mut rng, &field), c).unwrap(),
            );
            for lambda in enumerate_multipartitions(m, 3) {
                let rotated = lambda.delta(d).unwrap();
                if block_invariant(&lambda, &params).unwrap()
                    != block_invariant(&rotated, &params).unwrap()
                {
                    eprintln!("  orbit invariance failed at m={m} d={d} lambda={lambda}");
                    ok = false;
                }
            }
        }
    }
    // excluded (n, d) combinations are rejected, with exit code 2 at the CLI
    for (n, d) in [(2usize, 2usize), (1, 2), (0, 2)] {
        match block_partition_gmdn(2, d, n, &generic) {
            Err(BlockError::ExcludedGroup { .. }) => {}
            other => {
                eprintln!("  (n,d)=({n},{d}) not rejected: {other:?}");
                ok = false;
            }
        }
    }
    let out = Command::new(env!("CARGO_BIN_EXE_rrca"))
        .args(["blocks", "--m", "2", "--d", "2", "--n", "2", "--generic"])
        .output()
        .unwrap();
    if out.status.code() != Some(2) {
        eprintln!("  CLI exit code for excluded (n,d) was {:?}", out.status.code());
        ok = false;
    }
    report(10, "normal-subgroup block partition (d=1 reduction, splits, exclusions)", ok);
    assert!(ok);
}

#[test]
fn criterion_11_combinatorial_counts() {
    let mut ok = true;
    for m in 1..=3usize {
        for n in 0..=5usize {
            let total: usize = enumerate_multipartitions(m, n)
                .iter()
                .map(|l| enumerate_standard_tableaux(l).len().pow(2))
                .sum();
            let order = m.pow(n as u32) * (1..=n).product::<usize>();
            if total != order {
                eprintln!("  tableau count square sum failed at m={m} n={n}");
                ok = false;
            }
        }
    }
    // generating function oracle: coefficient of x^n in prod (1-x^k)^{-m}
    for m in 1..=4usize {
        let mut ways = vec![0usize; 9];
        ways[0] = 1;
        for k in 1..=8 {
            for _ in 0..m {
                for total in k..=8 {
                    ways[total] += ways[total - k];
                }
            }
        }
        for n in 0..=8usize {
            if enumerate_multipartitions(m, n).len() != ways[n] {
                eprintln!("  multipartition count failed at m={m} n={n}");
                ok = false;
            }
        }
    }
    report(11, "tableau and multipartition counting identities", ok);
    assert!(ok);
}
