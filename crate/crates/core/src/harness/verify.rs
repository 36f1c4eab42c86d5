//! Exhaustive checkers, one per statement, each returning a
//! [`VerificationReport`].

use std::time::Instant;

use serde_json::{json, Value};

use super::enumerate::{enumerate_all_srings, enumerate_k_invariant_srings, enumerate_k_permuted_srings};
use crate::arith::{gcd, is_prime, prime_divisors};
use crate::duality::{annihilator, dual_group_action, verify_duality_theorem};
use crate::group::{automorphism_group, multiplier_group, AbelianGroup, AutSubgroup, Endomorphism, Subgroup, Subset};
use crate::limits::check_cap;
use crate::report::{StatementId, VerificationReport};
use crate::ring::{
    enumerate_local_pairs, find_ring_isomorphism, is_cyclotomic, is_local_pair, is_quasiprimitive, local_pair_from_ring,
    make_dual_numbers, make_gf, make_product, make_zn, ring_from_local_pair, CommRing, LocalPair,
};
use crate::separating::{check_separating_theorem, check_separating_theorem_under, separating_subgroups, Hypothesis};
use crate::sring::{power_map_of, SRing};
use crate::{Error, Result};

/// Largest group for the scans that run over every S-ring and every `K`.
pub const SCAN_CAP: usize = 12;

/// Largest odd prime accepted by [`build_counterexample`].
pub const COUNTEREXAMPLE_PRIME_CAP: usize = 7;

fn sets(v: &[Subset]) -> Vec<Vec<usize>> {
    v.iter().map(|s| s.as_slice().to_vec()).collect()
}

fn instance(a: &SRing) -> String {
    format!("{} {:?}", a.group(), sets(a.basic_sets()))
}

fn absorb(into: &mut VerificationReport, part: VerificationReport) {
    into.instances_checked += part.instances_checked;
    into.violations.extend(part.violations);
}

fn finish(mut report: VerificationReport, start: Instant) -> VerificationReport {
    report.elapsed = start.elapsed();
    report
}

/// Every S-ring over `G` is invariant under the multiplier group `K_G`.
///
/// Also cross-checks the direct enumerator against the orbit-block one.
pub fn verify_schur_multiplier(g: &AbelianGroup) -> Result<VerificationReport> {
    check_cap("group for the multiplier scan", g.order(), SCAN_CAP)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(StatementId::Multiplier);
    let k = multiplier_group(g);
    let direct = enumerate_all_srings(g)?;
    let blocks = enumerate_k_invariant_srings(g, &AutSubgroup::trivial(g.order()))?;
    report.check(
        direct == blocks,
        g.to_string(),
        "the two enumerators disagree",
        json!({"direct": direct.len(), "orbit_blocks": blocks.len()}),
    );
    for a in &direct {
        report.instances_checked += 1;
        report.check(a.is_k_invariant(&k), instance(a), "not invariant under K_G", json!(sets(a.basic_sets())));
    }
    report.vacuous = k.is_trivial();
    report.detail("srings", direct.len());
    report.detail("orbit_block_srings", blocks.len());
    report.detail("k_order", k.order());
    Ok(finish(report, start))
}

/// Every quasiprimitive S-ring over `R` with all primary components local
/// has rank 2 or is cyclotomic over a field.
pub fn verify_theorem1(r: &CommRing) -> Result<VerificationReport> {
    verify_ring_statement(r, StatementId::Thm1)
}

/// As [`verify_theorem1`], assuming only one local primary component.
pub fn verify_theorem3(r: &CommRing) -> Result<VerificationReport> {
    verify_ring_statement(r, StatementId::Thm3)
}

fn verify_ring_statement(r: &CommRing, id: StatementId) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(id);
    let components = r.primary_components()?;
    let local: Vec<bool> = components.iter().map(|c| c.ring.is_local()).collect();
    let hypothesis = match id {
        StatementId::Thm1 => local.iter().all(|&l| l),
        _ => local.iter().any(|&l| l),
    };
    let kr = r.k_r();
    let field = r.is_field();
    let srings = enumerate_k_permuted_srings(r.additive(), &kr)?;
    let mut quasi = 0;
    let mut cyclotomic_higher = 0;
    let mut exceptions = Vec::new();
    for a in &srings {
        if !is_quasiprimitive(a, r)? {
            continue;
        }
        quasi += 1;
        report.instances_checked += 1;
        if a.rank() == 2 {
            continue;
        }
        let cyclotomic = is_cyclotomic(a, r)?.is_some();
        cyclotomic_higher += usize::from(cyclotomic);
        let ok = cyclotomic && field;
        if !ok {
            exceptions.push(json!({
                "basic_sets": sets(a.basic_sets()),
                "rank": a.rank(),
                "cyclotomic": cyclotomic,
            }));
        }
        if hypothesis {
            report.check(
                ok,
                instance(a),
                "quasiprimitive S-ring of rank > 2 that is not cyclotomic over a field",
                json!({"rank": a.rank(), "cyclotomic": cyclotomic, "field": field}),
            );
        }
    }
    report.vacuous = !hypothesis;
    report.detail("ring", r.label());
    report.detail(
        "primary_components",
        components
            .iter()
            .zip(&local)
            .map(|(c, l)| json!({"prime": c.prime, "order": c.ring.order(), "local": l}))
            .collect::<Vec<_>>(),
    );
    report.detail("field", field);
    report.detail("srings", srings.len());
    report.detail("quasiprimitive", quasi);
    report.detail("cyclotomic_higher_rank", cyclotomic_higher);
    report.detail("conclusion_failures", exceptions);
    Ok(finish(report, start))
}

/// The hypotheses of the primitivity statement for `(G, K, p)`: the part
/// `K_0` of `K` acting on the Sylow `p`-subgroup alone is abelian, and some
/// `K_0`-orbit has a `K`-invariant subgroup as complement in `P`.
///
/// Returns `(P, e, P ∖ e^{K_0})` when both hold.
fn theorem2_hypotheses(g: &AbelianGroup, k: &AutSubgroup, p: usize) -> Result<Option<(Subgroup, usize, Subgroup)>> {
    let sylow = g.sylow_subgroup(p)?;
    let hall = g.hall_complement(p);
    let k0 = k.pointwise_stabilizer(&hall);
    if !k0.is_abelian() {
        return Ok(None);
    }
    for e in sylow.iter().copied().filter(|&e| e != 0) {
        let rest = sylow.difference(&k0.orbit(e));
        if let Some(h) = Subgroup::from_subset(g, rest) {
            if k.stabilizes(&h) {
                return Ok(Some((sylow, e, h)));
            }
        }
    }
    Ok(None)
}

/// Every `K`-primitive `K`-invariant S-ring has rank 2, or is the orbit
/// ring of a subgroup `L ≤ K` acting on the field built from `(K, e)`.
pub fn verify_theorem2(g: &AbelianGroup, k: &AutSubgroup, p: usize) -> Result<VerificationReport> {
    if !is_prime(p) || !g.order().is_multiple_of(p) {
        return Err(Error::invalid(format!("{p} is not a prime dividing |G| = {}", g.order())));
    }
    if k.degree() != g.order() {
        return Err(Error::invalid("K does not act on G"));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new(StatementId::Thm2);
    report.detail("k_order", k.order());
    let Some((sylow, e, rest)) = theorem2_hypotheses(g, k, p)? else {
        report.vacuous = true;
        return Ok(finish(report, start));
    };
    report.detail("base_point", e);
    report.detail("orbit_complement", rest.as_slice());
    let field_case = sylow.order() == g.order() && rest.is_trivial();
    let field = if field_case {
        let pair = is_local_pair(g, k, e)?.ok_or_else(|| Error::internal("hypotheses hold but (K, e) is not local"))?;
        let f = ring_from_local_pair(&pair)?;
        report.check(f.is_field(), g.to_string(), "the ring of (K, e) is not a field", json!({"e": e}));
        Some(f)
    } else {
        None
    };
    let mut primitive = 0;
    let mut reconstructed = 0;
    for a in enumerate_k_permuted_srings(g, k)? {
        if !a.is_k_primitive(k)? {
            continue;
        }
        primitive += 1;
        report.instances_checked += 1;
        if a.rank() == 2 {
            continue;
        }
        let Some(f) = &field else {
            report.check(
                false,
                instance(&a),
                "K-primitive S-ring of rank > 2 outside the field case",
                json!({"rank": a.rank()}),
            );
            continue;
        };
        let l = k.setwise_stabilizer(a.basic_set_of(f.one()));
        let ok = l.orbits() == a.basic_sets() && l.is_subgroup_of(&f.k_r());
        reconstructed += usize::from(ok);
        report.check(
            ok,
            instance(&a),
            "basic sets are not the orbits of the stabilizer of the class of 1",
            json!({"l_order": l.order(), "l_orbits": sets(&l.orbits())}),
        );
    }
    report.detail("field_case", field_case);
    report.detail("k_primitive", primitive);
    report.detail("reconstructed", reconstructed);
    Ok(finish(report, start))
}

fn known_local_rings(p: &AbelianGroup) -> Vec<CommRing> {
    let Some(q) = p.p_group_prime() else { return Vec::new() };
    let n = p.order();
    let mut k = 0;
    while q.pow(k) < n {
        k += 1;
    }
    let mut out = Vec::new();
    out.extend(make_zn(n));
    out.extend(make_gf(q, k as usize));
    if n == q * q {
        out.extend(make_dual_numbers(q));
    }
    out.retain(|r| r.additive() == p);
    out
}

/// The pair/ring correspondence on `P`: round trips, injectivity, and
/// isomorphism of rings matching `Aut(P)`-conjugacy of the groups `K`.
pub fn verify_theorem4(p: &AbelianGroup) -> Result<VerificationReport> {
    check_cap("group for the local ring census", p.order(), crate::limits::limits().sring_enum_cap)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(StatementId::Thm4);
    let census = enumerate_local_pairs(p)?;
    let name = p.to_string();
    let mut tables = std::collections::HashSet::new();
    let pairs = census.pairs();
    for pair in &pairs {
        report.instances_checked += 1;
        let r = ring_from_local_pair(pair)?;
        let back = local_pair_from_ring(&r)?;
        report.check(
            back.k == pair.k && back.e == pair.e,
            &name,
            "pair -> ring -> pair does not round trip",
            json!({"e": pair.e, "k_order": pair.k.order()}),
        );
        tables.insert((r.mul_table().to_vec(), r.one()));
    }
    report.check(
        tables.len() == pairs.len(),
        &name,
        "distinct pairs give the same ring",
        json!({"pairs": pairs.len(), "rings": tables.len()}),
    );

    let reps: Vec<CommRing> = census.representatives().iter().map(ring_from_local_pair).collect::<Result<_>>()?;
    for (i, cls) in census.classes.iter().enumerate() {
        for &m in &cls[1..] {
            let (k, c) = &census.subgroups[m];
            let e = c.as_subset().complement(p.order()).least().expect("orbit is nonempty");
            let pair = LocalPair {
                group: p.clone(),
                k: k.clone(),
                e,
                complement: c.clone(),
            };
            let r = ring_from_local_pair(&pair)?;
            report.check(
                find_ring_isomorphism(&r, &reps[i])?.is_some(),
                &name,
                "conjugate groups give non-isomorphic rings",
                json!({"class": i, "member": m}),
            );
        }
        for j in 0..i {
            report.check(
                find_ring_isomorphism(&reps[i], &reps[j])?.is_none(),
                &name,
                "non-conjugate groups give isomorphic rings",
                json!({"classes": [j, i]}),
            );
        }
    }
    for pair in census.subgroups.iter().map(|(k, c)| (k, c.as_subset().complement(p.order()))) {
        let (k, orbit) = pair;
        if orbit.len() < 2 {
            continue;
        }
        let base = |e| {
            is_local_pair(p, k, e)?
                .ok_or_else(|| Error::internal("orbit point is not a base point"))
                .and_then(|lp| ring_from_local_pair(&lp))
        };
        let r0 = base(orbit.as_slice()[0])?;
        let r1 = base(orbit.as_slice()[1])?;
        report.check(
            find_ring_isomorphism(&r0, &r1)?.is_some(),
            &name,
            "moving the base point inside the orbit changes the ring",
            json!({"k_order": k.order()}),
        );
    }

    let mut known = Vec::new();
    for r in known_local_rings(p) {
        let pair = local_pair_from_ring(&r)?;
        let again = ring_from_local_pair(&pair)?;
        report.check(
            again.mul_table() == r.mul_table() && again.one() == r.one(),
            r.label(),
            "ring -> pair -> ring does not round trip",
            json!(null),
        );
        let listed = census.subgroups.iter().any(|(k, _)| *k == pair.k);
        report.check(listed, r.label(), "the pair of a known local ring is missing from the census", json!(null));
        known.push(r.label().to_string());
    }

    let classes: Vec<Value> = census
        .classes
        .iter()
        .zip(&reps)
        .map(|(cls, r)| {
            json!({
                "members": cls.len(),
                "k_order": r.units().len(),
                "radical": census.subgroups[cls[0]].1.as_slice(),
                "field": r.is_field(),
            })
        })
        .collect();
    report.detail("pairs", pairs.len());
    report.detail("subgroups", census.subgroups.len());
    report.detail("classes", classes);
    report.detail("known_rings", known);
    Ok(finish(report, start))
}

fn has_cyclic_sylow(g: &AbelianGroup) -> Result<bool> {
    for p in prime_divisors(g.order()) {
        let sylow = g.sylow_subgroup(p)?;
        if sylow.iter().any(|&x| g.order_of(x) == sylow.order()) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// For `|G|` composite with a cyclic Sylow subgroup, every primitive S-ring
/// over `G` has rank 2.
pub fn verify_wielandt(g: &AbelianGroup) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(StatementId::Wielandt);
    let n = g.order();
    if n < 4 || is_prime(n) || !has_cyclic_sylow(g)? {
        report.vacuous = true;
        return Ok(finish(report, start));
    }
    let srings = enumerate_all_srings(g)?;
    let mut primitive = 0;
    for a in &srings {
        if !a.is_primitive()? {
            continue;
        }
        primitive += 1;
        report.instances_checked += 1;
        report.check(a.rank() == 2, instance(a), "primitive S-ring of rank > 2", json!({"rank": a.rank()}));
    }
    report.detail("srings", srings.len());
    report.detail("primitive", primitive);
    Ok(finish(report, start))
}

/// The power-map statements: `X^{[p]}` lies in `S*(A)` for every S-ring,
/// and is contained in `{0}` whenever `A` is `K`-invariant and
/// `K`-primitive for some `K ≤ Aut(G)`.
///
/// Statement (2) is checked as `X^{[p]} ⊆ {0}` together with
/// `|(x + E) ∩ X| ≡ 0 (mod p)` for `x ∉ E`; the set is empty exactly when
/// `p` divides `|X ∩ E|`, and those cases are counted in the details.
pub fn verify_lemma_power(g: &AbelianGroup) -> Result<VerificationReport> {
    check_cap("group for the power map scan", g.order(), SCAN_CAP)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(StatementId::Lemma22);
    let srings = enumerate_all_srings(g)?;
    let primes = prime_divisors(g.order());
    for a in &srings {
        for x in a.basic_sets() {
            for &p in &primes {
                report.instances_checked += 1;
                let img = a.power_map(x, p)?;
                report.check(a.in_star(&img), instance(a), "X^[p] is not in S*(A)", json!({"X": x.as_slice(), "p": p, "image": img.as_slice()}));
            }
        }
    }
    let aut = automorphism_group(g)?;
    let mut primitive_cases = 0;
    let mut empty_images = 0;
    let subgroups = aut.all_subgroups()?;
    for k in &subgroups {
        for a in srings.iter().filter(|a| a.is_k_invariant(k)) {
            if !a.is_k_primitive(k)? {
                continue;
            }
            primitive_cases += 1;
            for x in a.basic_sets() {
                for &p in &primes {
                    report.instances_checked += 1;
                    let img = power_map_of(g, x, p);
                    empty_images += usize::from(img.is_empty());
                    report.check(
                        img.iter().all(|&y| y == 0),
                        instance(a),
                        "X^[p] is not contained in {0} for a K-primitive S-ring",
                        json!({"X": x.as_slice(), "p": p, "k_order": k.order(), "image": img.as_slice()}),
                    );
                    let e = g.torsion(p);
                    for y in g.elements().filter(|&y| !e.contains(y)) {
                        let hits = e.iter().filter(|&&t| x.contains(g.add(y, t))).count();
                        report.check(
                            hits % p == 0,
                            instance(a),
                            "|(x + E) ∩ X| is not divisible by p",
                            json!({"X": x.as_slice(), "p": p, "x": y, "count": hits}),
                        );
                    }
                }
            }
        }
    }
    report.detail("srings", srings.len());
    report.detail("aut_subgroups", subgroups.len());
    report.detail("k_primitive_cases", primitive_cases);
    report.detail("empty_images", empty_images);
    Ok(finish(report, start))
}

/// For every local pair `(K, e)` on `P` with `P_0 = P ∖ e^K`: the Sylow
/// `p`-subgroup `K_0` of `K` has the cosets of `P_0` outside `P_0` as
/// orbits; on the dual, every nonzero orbit of `K̂` is `S ∖ M` for a
/// `K̂`-invariant `S` and its largest proper `K̂`-invariant subgroup `M`,
/// and `P_0^⊥` is the least nontrivial `K̂`-invariant subgroup.
pub fn verify_corollary_42(p: &AbelianGroup) -> Result<VerificationReport> {
    check_cap("group for the local pair scan", p.order(), crate::limits::limits().sring_enum_cap)?;
    let start = Instant::now();
    let mut report = VerificationReport::new(StatementId::Cor42);
    let prime = p.p_group_prime().ok_or_else(|| Error::invalid(format!("{p} is not a nontrivial p-group")))?;
    let census = enumerate_local_pairs(p)?;
    let n = p.order();
    let subgroups = p.all_subgroups()?;
    for (k, p0) in &census.subgroups {
        let inst = format!("{p} |K|={} P0={:?}", k.order(), p0.as_slice());
        report.instances_checked += n - p0.order();
        let k0 = k.sylow(prime)?;
        for x in p0.as_subset().complement(n).into_vec() {
            let coset = p.translate(x, p0);
            report.check(k0.orbit(x) == coset, &inst, "K_0-orbit is not a coset of P_0", json!({"x": x}));
        }

        let khat = dual_group_action(p, k)?;
        let invariant: Vec<&Subgroup> = subgroups.iter().filter(|h| khat.stabilizes(h)).collect();
        for orbit in khat.orbits().iter().filter(|o| o.least() != Some(0)) {
            let s = p.generated_subgroup(orbit.as_slice());
            let m = s.difference(orbit);
            let ok = match Subgroup::from_subset(p, m.clone()) {
                Some(m) => {
                    khat.stabilizes(&m)
                        && khat.stabilizes(&s)
                        && invariant.iter().all(|h| !h.is_subset(&s) || h.order() == s.order() || h.is_subset(&m))
                }
                None => false,
            };
            report.check(
                ok,
                &inst,
                "dual orbit is not S minus its largest proper invariant subgroup",
                json!({"orbit": orbit.as_slice(), "S": s.as_slice()}),
            );
        }
        let perp = annihilator(p, p0);
        let least = !perp.is_trivial()
            && khat.stabilizes(&perp)
            && invariant.iter().all(|h| h.is_trivial() || perp.is_subset(h));
        report.check(least, &inst, "P_0^perp is not the least nontrivial invariant subgroup", json!({"perp": perp.as_slice()}));
    }
    report.detail("pairs", census.pairs().len());
    report.detail("subgroups", census.subgroups.len());
    Ok(finish(report, start))
}

/// The rank-3 S-ring `{0}, (Z_p^× × 0) ∪ (0 × Z_p^×), Z_p^× × Z_p^×` over
/// the product ring `Z_p × Z_p`, for an odd prime `p ≤ 7`.
pub fn build_counterexample(p: usize) -> Result<(CommRing, SRing)> {
    if p == 2 || !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not an odd prime")));
    }
    check_cap("prime for the product ring example", p, COUNTEREXAMPLE_PRIME_CAP)?;
    let zp = make_zn(p)?;
    let r = make_product(&zp, &zp)?;
    let at = |x: usize, y: usize| x * p + y;
    let axes: Vec<usize> = (1..p).flat_map(|t| [at(t, 0), at(0, t)]).collect();
    let inner: Vec<usize> = (1..p).flat_map(|x| (1..p).map(move |y| at(x, y))).collect();
    let a = SRing::new(r.additive(), vec![Subset::singleton(0), Subset::from(axes), Subset::from(inner)])?;
    let kr = r.k_r();
    if !a.is_k_invariant(&kr) || !is_quasiprimitive(&a, &r)? || a.rank() != 3 || is_cyclotomic(&a, &r)?.is_some() {
        return Err(Error::internal("the product ring example lost one of its defining properties"));
    }
    Ok((r, a))
}

/// Checks the product ring example: a quasiprimitive rank-3 S-ring that is
/// not cyclotomic, over a ring with no local primary component.
pub fn verify_counterexample(p: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(StatementId::Counterexample);
    let (r, a) = build_counterexample(p)?;
    let inst = instance(&a);
    report.instances_checked = 1;
    let sizes: Vec<usize> = a.basic_sets().iter().map(|x| x.len()).collect();
    let mut want = vec![1, 2 * (p - 1), (p - 1) * (p - 1)];
    let mut got = sizes.clone();
    want.sort_unstable();
    got.sort_unstable();
    report.check(got == want, &inst, "basic set sizes", json!(sizes));
    report.check(a.is_k_invariant(&r.k_r()), &inst, "not invariant under K_R", json!(null));
    report.check(is_quasiprimitive(&a, &r)?, &inst, "not quasiprimitive", json!(null));
    report.check(a.rank() == 3, &inst, "rank is not 3", json!(a.rank()));
    report.check(is_cyclotomic(&a, &r)?.is_none(), &inst, "cyclotomic", json!(null));
    let local_components = r.primary_components()?.iter().filter(|c| c.ring.is_local()).count();
    report.check(local_components == 0, &inst, "the ring has a local primary component", json!(local_components));
    report.detail("ring", r.label());
    report.detail("basic_sets", sets(a.basic_sets()));
    report.detail("sizes", sizes);
    report.detail("rank", a.rank());
    Ok(finish(report, start))
}

/// The local pair `K = {x ↦ a·x + x_j·b}` on `P = Z_{p^m} × P'`, where
/// factor `j` has order the exponent `p^m`, `a` runs over units mod `p^m`,
/// `b` over `P'`, and `e` is the generator of factor `j`.
pub fn prop23_pair(p: &AbelianGroup) -> Result<LocalPair> {
    let prime = p.p_group_prime().ok_or_else(|| Error::invalid(format!("{p} is not a nontrivial p-group")))?;
    if p.order() == prime {
        return Err(Error::precondition(format!("{p} has prime order, so the orbit complement would be trivial")));
    }
    let q = p.exponent();
    let j = p.factors().iter().position(|&d| d == q).expect("some factor has the exponent as order");
    let e = p.generator(j);
    let rest: Vec<usize> = p.elements().filter(|&x| p.decode(x)[j] == 0).collect();
    let mut maps = Vec::new();
    for a in (1..q).filter(|&a| gcd(a, q) == 1) {
        for &b in &rest {
            let images = p.elements().map(|x| p.add(p.scale(a, x), p.scale(p.decode(x)[j], b))).collect();
            maps.push(Endomorphism::from_table(p, images)?);
        }
    }
    let count = maps.len();
    let k = AutSubgroup::generate(p.order(), maps)?;
    if k.order() != count || !k.is_abelian() {
        return Err(Error::internal("the affine maps do not form an abelian group"));
    }
    is_local_pair(p, &k, e)?
        .filter(|pair| !pair.complement.is_trivial())
        .ok_or_else(|| Error::internal("the affine maps do not give a local pair with nontrivial complement"))
}

/// Builds [`prop23_pair`] and checks that every `K`-primitive
/// `K`-invariant S-ring over `P` has rank 2.
pub fn verify_prop13(p: &AbelianGroup) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(StatementId::Prop13);
    let pair = prop23_pair(p)?;
    let srings = enumerate_k_permuted_srings(p, &pair.k)?;
    let mut primitive = 0;
    for a in &srings {
        if !a.is_k_primitive(&pair.k)? {
            continue;
        }
        primitive += 1;
        report.instances_checked += 1;
        report.check(a.rank() == 2, instance(a), "K-primitive S-ring of rank > 2", json!({"rank": a.rank()}));
    }
    report.detail("k_order", pair.k.order());
    report.detail("base_point", pair.e);
    report.detail("orbit_complement", pair.complement.as_slice());
    report.detail("srings", srings.len());
    report.detail("k_primitive", primitive);
    Ok(finish(report, start))
}

/// The separating-subgroup statement on every S-ring over `G`, and
/// disjointness of separating subgroups from the `A`-subgroups.
///
/// Violations come from the literal hypothesis `⟨X ∩ H⟩ ⊆ rad(X ∖ H)`.
/// The coset form `H ⊆ rad(X ∖ H)` is checked as well; its failures are
/// violations too, and its counts go to the `cosets` detail.
pub fn verify_separating(g: &AbelianGroup) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(StatementId::Separating);
    let srings = enumerate_all_srings(g)?;
    let mut witnesses = 0;
    let mut coset_witnesses = 0;
    let mut coset_violations = 0;
    for a in &srings {
        let inst = instance(a);
        let part = check_separating_theorem(a)?;
        report.instances_checked += part.checked;
        witnesses += part.witnesses.len();
        for v in part.violations {
            report.check(false, &inst, v, json!(null));
        }
        let part = check_separating_theorem_under(a, Hypothesis::Cosets)?;
        coset_witnesses += part.witnesses.len();
        coset_violations += part.violations.len();
        for v in part.violations {
            report.check(false, &inst, format!("coset form: {v}"), json!(null));
        }
        match separating_subgroups(a) {
            Ok(_) => {}
            Err(Error::Internal(msg)) => report.check(false, &inst, msg, json!(null)),
            Err(e) => return Err(e),
        }
    }
    report.detail("srings", srings.len());
    report.detail("witnesses", witnesses);
    report.detail("cosets", json!({"witnesses": coset_witnesses, "violations": coset_violations}));
    Ok(finish(report, start))
}

/// The duality statements on every S-ring over `G`, for both the trivial
/// group and the multiplier group.
pub fn verify_duality(g: &AbelianGroup) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::new(StatementId::Duality);
    let srings = enumerate_all_srings(g)?;
    let groups = [AutSubgroup::trivial(g.order()), multiplier_group(g)];
    for a in &srings {
        for k in &groups {
            absorb(&mut report, verify_duality_theorem(a, k)?);
        }
    }
    report.detail("srings", srings.len());
    Ok(finish(report, start))
}
