//! End-to-end acceptance run: ten exhaustive checks, one PASS/FAIL line each.
//!
//! Runs as a plain binary (`harness = false`) so that the summary lines are
//! always printed, in order.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use srk_core::arith::{gcd, is_prime, prime_divisors};
use srk_core::group::{
    abelian_groups_of_order, automorphism_group, AbelianGroup, Endomorphism, Subset,
};
use srk_core::harness::{
    build_counterexample, enumerate_all_srings, prop23_pair, verify_corollary_42, verify_counterexample,
    verify_duality, verify_lemma_power, verify_prop13, verify_schur_multiplier, verify_separating, verify_theorem1,
    verify_theorem3, verify_theorem4, verify_wielandt,
};
use srk_core::report::VerificationReport;
use srk_core::ring::{
    enumerate_local_pairs, is_cyclotomic, is_local_pair, make_dual_numbers, make_gf, make_product, make_zn, CommRing,
};
use srk_core::separating::check_separating_theorem;
use srk_core::sring::SRing;

const BUDGET: Duration = Duration::from_secs(60);

fn grp(f: &[usize]) -> AbelianGroup {
    AbelianGroup::new(f).unwrap()
}

fn expect_pass(r: &VerificationReport, what: &str) {
    assert!(r.passed(), "{what}: {r}");
}

fn groups_up_to(n: usize) -> Vec<AbelianGroup> {
    (1..=n).flat_map(abelian_groups_of_order).collect()
}

/// Direct check that each unit multiplication maps basic sets onto basic sets.
fn unit_invariant(a: &SRing, r: &CommRing) -> bool {
    let blocks: HashSet<&Subset> = a.basic_sets().iter().collect();
    (0..r.order())
        .filter(|&u| (0..r.order()).any(|v| r.mul(u, v) == r.one()))
        .all(|u| {
            a.basic_sets()
                .iter()
                .all(|x| blocks.contains(&Subset::from(x.iter().map(|&y| r.mul(u, y)).collect::<Vec<_>>())))
        })
}

fn criterion_1() -> String {
    for p in [3, 5] {
        let (r, a) = build_counterexample(p).unwrap();
        assert_eq!(r.order(), p * p);
        assert_eq!(SRing::new(r.additive(), a.basic_sets().to_vec()).unwrap(), a);
        let sizes: Vec<usize> = a.basic_sets().iter().map(|x| x.len()).collect();
        assert_eq!(sizes, vec![1, 2 * (p - 1), (p - 1) * (p - 1)]);
        assert_eq!(a.rank(), 3);
        assert!(unit_invariant(&a, &r));
        assert!(is_cyclotomic(&a, &r).unwrap().is_none());
        // Quasiprimitive: the axes are the only candidates, and neither is an
        // A-subgroup.
        let axis: Vec<usize> = (0..p).map(|x| x * p).collect();
        assert!(!a.in_star(&Subset::from(axis)));
        assert!(a.a_subgroups().unwrap().iter().all(|h| h.order() == 1 || h.order() == p * p));
        expect_pass(&verify_counterexample(p).unwrap(), "product ring example");
    }
    "Z_3xZ_3 sizes 1,4,4; Z_5xZ_5 sizes 1,8,16; rank 3, not cyclotomic".into()
}

fn criterion_2() -> String {
    let z3 = make_zn(3).unwrap();
    let rings = vec![
        make_zn(4).unwrap(),
        make_zn(8).unwrap(),
        make_zn(9).unwrap(),
        make_zn(6).unwrap(),
        make_zn(12).unwrap(),
        make_gf(2, 2).unwrap(),
        make_gf(2, 3).unwrap(),
        make_gf(3, 2).unwrap(),
        make_dual_numbers(2).unwrap(),
        make_dual_numbers(3).unwrap(),
        make_product(&make_gf(2, 2).unwrap(), &z3).unwrap(),
    ];
    let mut higher = Vec::new();
    for r in &rings {
        let rep = verify_theorem3(r).unwrap();
        expect_pass(&rep, r.label());
        assert!(!rep.vacuous, "{} should satisfy the locality hypothesis", r.label());
        let n = rep.details["cyclotomic_higher_rank"].as_u64().unwrap();
        if n > 0 {
            assert!(r.is_field(), "{} is not a field", r.label());
            higher.push(format!("{}:{n}", r.label()));
        }
    }
    format!("11 rings, zero violations; cyclotomic rank>2 only over {}", higher.join(" "))
}

/// Every local pair on `P` found by testing every abelian subgroup of
/// `Aut(P)` against every base point; returns the distinct groups `K` and
/// their number of `Aut(P)`-conjugacy classes.
fn local_pair_oracle(p: &AbelianGroup) -> (BTreeSet<Vec<Endomorphism>>, usize) {
    let aut = automorphism_group(p).unwrap();
    let mut ks = BTreeSet::new();
    for k in aut.all_subgroups().unwrap().iter().filter(|k| k.is_abelian()) {
        if p.elements().any(|e| is_local_pair(p, k, e).unwrap().is_some()) {
            ks.insert(k.elements().to_vec());
        }
    }
    let list: Vec<&Vec<Endomorphism>> = ks.iter().collect();
    let index: HashMap<&Vec<Endomorphism>, usize> = list.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let mut class = vec![usize::MAX; list.len()];
    let mut classes = 0;
    for i in 0..list.len() {
        if class[i] != usize::MAX {
            continue;
        }
        for s in aut.elements() {
            let sinv = s.inverse().unwrap();
            let mut conj: Vec<Endomorphism> = list[i].iter().map(|t| s.compose(t).compose(&sinv)).collect();
            conj.sort();
            class[index[&conj]] = classes;
        }
        classes += 1;
    }
    (ks, classes)
}

fn criterion_3() -> String {
    let mut out = Vec::new();
    for (f, expected) in [
        (&[2][..], None),
        (&[4], Some(1)),
        (&[8], None),
        (&[2, 2], Some(2)),
        (&[2, 4], None),
        (&[9], None),
        (&[3, 3], Some(2)),
    ] {
        let p = grp(f);
        let rep = verify_theorem4(&p).unwrap();
        expect_pass(&rep, &p.to_string());
        let census = enumerate_local_pairs(&p).unwrap();
        let (oracle, oracle_classes) = local_pair_oracle(&p);
        let found: BTreeSet<Vec<Endomorphism>> = census.subgroups.iter().map(|(k, _)| k.elements().to_vec()).collect();
        assert_eq!(found, oracle, "{p}: local pair groups differ from the oracle");
        assert_eq!(census.classes.len(), oracle_classes, "{p}: class counts differ");
        if let Some(e) = expected {
            assert_eq!(oracle_classes, e, "{p}");
        }
        out.push(format!("{p}:{oracle_classes}"));
    }
    format!("classes {}", out.join(" "))
}

fn criterion_4() -> String {
    let mut counts = Vec::new();
    for n in 1..=10 {
        let rep = verify_schur_multiplier(&AbelianGroup::cyclic(n)).unwrap();
        expect_pass(&rep, &format!("Z_{n}"));
        assert_eq!(rep.details["srings"], rep.details["orbit_block_srings"]);
        counts.push(rep.details["srings"].to_string());
    }
    format!("S-ring counts Z_1..Z_10: {}", counts.join(","))
}

fn criterion_5() -> String {
    for n in (4..=16).filter(|&n| !is_prime(n)) {
        let g = AbelianGroup::cyclic(n);
        let rep = verify_wielandt(&g).unwrap();
        expect_pass(&rep, &g.to_string());
        assert!(!rep.vacuous);
        for a in enumerate_all_srings(&g).unwrap() {
            if a.is_primitive().unwrap() {
                assert_eq!(a.rank(), 2, "{g}");
            }
        }
    }
    for p in [2, 3, 5, 7, 11, 13] {
        let g = AbelianGroup::cyclic(p);
        expect_pass(&verify_theorem1(&make_zn(p).unwrap()).unwrap(), &g.to_string());
        for a in enumerate_all_srings(&g).unwrap() {
            if a.rank() <= 2 || !a.is_primitive().unwrap() {
                continue;
            }
            let fixing: Vec<usize> = (1..p)
                .filter(|&m| a.basic_sets().iter().all(|x| x.iter().all(|&y| a.basic_set_of(y * m % p) == x)))
                .collect();
            let mut orbits: BTreeSet<Vec<usize>> = BTreeSet::new();
            for y in 0..p {
                let mut o: Vec<usize> = fixing.iter().map(|m| y * m % p).collect();
                o.sort_unstable();
                o.dedup();
                orbits.insert(o);
            }
            let blocks: BTreeSet<Vec<usize>> = a.basic_sets().iter().map(|x| x.as_slice().to_vec()).collect();
            assert_eq!(orbits, blocks, "{g}: primitive S-ring of rank > 2 is not cyclotomic");
        }
    }
    for g in [grp(&[2, 2, 3]), AbelianGroup::cyclic(15)] {
        let rep = verify_wielandt(&g).unwrap();
        expect_pass(&rep, &g.to_string());
        assert!(!rep.vacuous);
    }
    "composite n <= 16 rank 2; primes <= 13 cyclotomic; Z_2xZ_2xZ_3, Z_15 pass".into()
}

/// `X^{[p]}` computed coset by coset of the `p`-torsion subgroup.
fn power_map_oracle(g: &AbelianGroup, x: &Subset, p: usize) -> BTreeSet<usize> {
    let torsion: Vec<usize> = g.elements().filter(|&y| g.scale(p, y) == 0).collect();
    let mut out = BTreeSet::new();
    let mut seen = HashSet::new();
    for y in g.elements() {
        let coset: BTreeSet<usize> = torsion.iter().map(|&t| g.add(y, t)).collect();
        if !seen.insert(coset.clone()) {
            continue;
        }
        let hits = coset.iter().filter(|c| x.contains(**c)).count();
        if hits % p != 0 {
            out.insert(g.scale(p, y));
        }
    }
    out
}

fn criterion_6() -> String {
    let mut groups = 0;
    for g in groups_up_to(12).into_iter().filter(|g| g.order() > 1) {
        for a in enumerate_all_srings(&g).unwrap() {
            for x in a.basic_sets() {
                for p in prime_divisors(g.order()) {
                    let got: BTreeSet<usize> = a.power_map(x, p).unwrap().iter().copied().collect();
                    assert_eq!(got, power_map_oracle(&g, x, p), "{g} {:?} p={p}", x.as_slice());
                }
            }
        }
        expect_pass(&verify_lemma_power(&g).unwrap(), &g.to_string());
        groups += 1;
    }
    format!("{groups} groups of order 2..12, every S-ring, basic set, prime and K")
}

fn criterion_7() -> String {
    let mut checked = 0;
    for g in groups_up_to(12) {
        let rep = verify_duality(&g).unwrap();
        expect_pass(&rep, &g.to_string());
        checked += rep.instances_checked;
    }
    format!("{checked} (S-ring, K) instances over groups of order <= 12")
}

fn criterion_8() -> String {
    let z8 = AbelianGroup::cyclic(8);
    let rep = check_separating_theorem(&SRing::rank2(&z8)).unwrap();
    let hs: BTreeSet<Vec<usize>> = rep.witnesses.iter().map(|w| w.h.as_slice().to_vec()).collect();
    assert_eq!(hs, BTreeSet::from([vec![0, 4], vec![0, 2, 4, 6]]));
    assert!(rep.passed());

    let mut witnesses = 0;
    let mut coset_witnesses = 0;
    let mut failing = Vec::new();
    let mut clauses: BTreeMap<&str, usize> = BTreeMap::new();
    for g in groups_up_to(16) {
        let rep = verify_separating(&g).unwrap();
        witnesses += rep.details["witnesses"].as_u64().unwrap();
        coset_witnesses += rep.details["cosets"]["witnesses"].as_u64().unwrap();
        assert_eq!(rep.details["cosets"]["violations"], 0, "{g}: coset form fails");
        for v in &rep.violations {
            let clause = [
                ("H <= <X>", "H <= <X>"),
                ("rad(X) <= H", "rad(X) <= H"),
                ("rad(X) != H", "strictness"),
                ("basic sets", "uniqueness"),
                ("A-subgroup", "H_sep meets H(A)"),
                ("minus rad", "X = <X> - rad(X)"),
            ]
            .into_iter()
            .find(|(needle, _)| v.message.contains(needle))
            .map_or("other", |(_, label)| label);
            *clauses.entry(clause).or_default() += 1;
        }
        if !rep.passed() {
            failing.push(format!("{g}:{}", rep.violations.len()));
        }
    }
    let summary = format!(
        "{witnesses} literal witnesses, {coset_witnesses} coset-form witnesses (all hold) over groups of order <= 16"
    );
    assert!(
        failing.is_empty(),
        "literal hypothesis <X cap H> <= rad(X minus H) admits pairs where the conclusion fails: \
         by clause {clauses:?}; by group {}; {summary}",
        failing.join(" ")
    );
    summary
}

fn criterion_9() -> String {
    let mut pairs = 0;
    let mut groups = 0;
    for g in groups_up_to(16).into_iter().filter(|g| g.p_group_prime().is_some()) {
        let rep = verify_corollary_42(&g).unwrap();
        expect_pass(&rep, &g.to_string());
        pairs += rep.details["pairs"].as_u64().unwrap();
        groups += 1;
    }
    format!("{pairs} local pairs on {groups} p-groups")
}

fn criterion_10() -> String {
    let mut out = Vec::new();
    for f in [&[4][..], &[8], &[9], &[2, 2], &[2, 4]] {
        let p = grp(f);
        let pair = prop23_pair(&p).unwrap();
        assert!(pair.k.is_abelian());
        assert!(!pair.complement.is_trivial());
        // Independent recount of the affine group size: units mod p^m times |P'|.
        let q = p.exponent();
        let units = (1..q).filter(|&a| gcd(a, q) == 1).count();
        assert_eq!(pair.k.order(), units * p.order() / q);
        let rep = verify_prop13(&p).unwrap();
        expect_pass(&rep, &p.to_string());
        for a in enumerate_all_srings(&p).unwrap() {
            if a.is_k_invariant(&pair.k) && a.is_k_primitive(&pair.k).unwrap() {
                assert_eq!(a.rank(), 2, "{p}");
            }
        }
        out.push(format!("{p}:|K|={}", pair.k.order()));
    }
    out.join(" ")
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> String); 10] = [
        ("1 product ring example", criterion_1),
        ("2 one local component", criterion_2),
        ("3 local pair correspondence", criterion_3),
        ("4 multiplier invariance", criterion_4),
        ("5 primitive rings over cyclic groups", criterion_5),
        ("6 power map", criterion_6),
        ("7 duality", criterion_7),
        ("8 separating subgroups", criterion_8),
        ("9 local pair orbits", criterion_9),
        ("10 affine local pairs", criterion_10),
    ];
    let total = Instant::now();
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        match outcome {
            Ok(summary) if elapsed <= BUDGET => println!("PASS criterion {name} ({:.2?}): {summary}", elapsed),
            Ok(summary) => {
                failed += 1;
                println!("FAIL criterion {name} ({:.2?}): over the time budget; {summary}", elapsed);
            }
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL criterion {name} ({:.2?}): {msg}", elapsed);
            }
        }
    }
    println!("acceptance: {} of 10 passed in {:.2?}", 10 - failed, total.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
