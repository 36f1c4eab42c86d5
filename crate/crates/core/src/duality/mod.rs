//! Characters of finite abelian groups, dual S-rings and the dual action of
//! automorphisms.
//!
//! The dual group is identified with `G` itself: the label `a` names the
//! character `χ_a(x) = ζ_m^{⟨a, x⟩}` with `⟨a, x⟩ = Σ (m/d_i)·a_i·x_i`,
//! where `m` is the exponent of `G` and `d_i` its cyclic factors. The
//! pairing is symmetric, so the double dual is `G` again, literally.

mod cyclotomic;

use std::collections::HashMap;

use serde_json::json;

pub use cyclotomic::{cyclotomic_poly, CyclotomicInteger};

use crate::group::{AbelianGroup, AutSubgroup, Endomorphism, Subgroup, Subset};
use crate::report::{StatementId, VerificationReport};
use crate::sring::SRing;
use crate::{Error, Result};

/// A character, named by its label in `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    pub label: usize,
}

/// `⟨a, x⟩ mod m`.
pub fn pairing(g: &AbelianGroup, a: usize, x: usize) -> usize {
    let m = g.exponent();
    let (ra, rx) = (g.decode(a), g.decode(x));
    g.factors()
        .iter()
        .zip(ra.iter().zip(&rx))
        .map(|(&d, (&ai, &xi))| (m / d) * ai % m * xi % m)
        .sum::<usize>()
        % m
}

fn pairing_table(g: &AbelianGroup) -> Vec<usize> {
    let n = g.order();
    let mut t = vec![0; n * n];
    for a in 0..n {
        for x in a..n {
            let v = pairing(g, a, x);
            t[a * n + x] = v;
            t[x * n + a] = v;
        }
    }
    t
}

/// `Σ_{x ∈ X} χ(x)`.
pub fn char_sum(g: &AbelianGroup, chi: Character, x: &Subset) -> CyclotomicInteger {
    let m = g.exponent();
    let mut counts = vec![0i64; m];
    for &y in x.iter() {
        counts[pairing(g, chi.label, y)] += 1;
    }
    CyclotomicInteger::from_power_counts(m, &counts)
}

/// `H^⊥`: the labels whose characters are trivial on `H`.
pub fn annihilator(g: &AbelianGroup, h: &Subgroup) -> Subgroup {
    let elems: Vec<usize> = g
        .elements()
        .filter(|&a| h.iter().all(|&x| pairing(g, a, x) == 0))
        .collect();
    Subgroup::from_subset(g, Subset::from(elems)).expect("an annihilator is a subgroup")
}

/// The dual S-ring: labels grouped by their evaluation vectors on the basic
/// sets of `a`.
pub fn dual_sring(a: &SRing) -> Result<SRing> {
    let g = a.group();
    let n = g.order();
    let m = g.exponent();
    let table = pairing_table(g);
    let mut classes: HashMap<Vec<CyclotomicInteger>, Vec<usize>> = HashMap::new();
    let mut order: Vec<Vec<CyclotomicInteger>> = Vec::new();
    for label in 0..n {
        let key: Vec<CyclotomicInteger> = a
            .basic_sets()
            .iter()
            .map(|x| {
                let mut counts = vec![0i64; m];
                for &y in x.iter() {
                    counts[table[label * n + y]] += 1;
                }
                CyclotomicInteger::from_power_counts(m, &counts)
            })
            .collect();
        let entry = classes.entry(key.clone()).or_default();
        if entry.is_empty() {
            order.push(key);
        }
        entry.push(label);
    }
    let parts = order.into_iter().map(|k| Subset::from(classes.remove(&k).unwrap_or_default())).collect();
    SRing::new(g, parts).map_err(|e| Error::internal(format!("dual partition is not an S-ring: {e}")))
}

/// `σ̂`, acting on labels by `χ_{σ̂(a)} = χ_a ∘ σ^{-1}`.
pub fn dual_automorphism(g: &AbelianGroup, sigma: &Endomorphism) -> Result<Endomorphism> {
    let inv = sigma
        .inverse()
        .ok_or_else(|| Error::invalid("dual action requires a bijective map"))?;
    if sigma.degree() != g.order() {
        return Err(Error::invalid("map does not act on this group"));
    }
    let m = g.exponent();
    let n = g.order();
    let pre: Vec<usize> = (0..g.factors().len()).map(|j| inv.apply(g.generator(j))).collect();
    let mut images = Vec::with_capacity(n);
    for a in 0..n {
        let mut res = Vec::with_capacity(pre.len());
        for (j, &d) in g.factors().iter().enumerate() {
            let v = pairing(g, a, pre[j]);
            let step = m / d;
            if !v.is_multiple_of(step) {
                return Err(Error::internal("dual label equation has no solution"));
            }
            res.push(v / step);
        }
        images.push(g.encode(&res));
    }
    let hat = Endomorphism::from_table(g, images)?;
    for a in 0..n {
        for x in 0..n {
            if pairing(g, hat.apply(a), x) != pairing(g, a, inv.apply(x)) {
                return Err(Error::internal("dual automorphism fails the pairing identity"));
            }
        }
    }
    Ok(hat)
}

/// `K̂ = {σ̂ : σ ∈ K}`.
pub fn dual_group_action(g: &AbelianGroup, k: &AutSubgroup) -> Result<AutSubgroup> {
    let gens = k
        .generators()
        .iter()
        .map(|s| dual_automorphism(g, s))
        .collect::<Result<Vec<_>>>()?;
    AutSubgroup::generate(g.order(), gens)
}

fn sets(v: &[Subset]) -> Vec<Vec<usize>> {
    v.iter().map(|s| s.as_slice().to_vec()).collect()
}

/// Checks, for one S-ring and one `K`: the double dual and rank identities,
/// both directions of invariance and of the `H ↔ H^⊥` correspondence,
/// primitivity equivalence, and that `σ ↦ σ̂` is a homomorphism on `K`.
pub fn verify_duality_theorem(a: &SRing, k: &AutSubgroup) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(StatementId::Duality);
    let g = a.group();
    let inst = format!("{g} {:?}", sets(a.basic_sets()));
    let dual = dual_sring(a)?;
    let khat = dual_group_action(g, k)?;
    report.instances_checked = 1;

    let double = dual_sring(&dual)?;
    report.check(double == *a, &inst, "double dual differs", json!(sets(double.basic_sets())));
    report.check(
        dual.rank() == a.rank(),
        &inst,
        "rank not preserved",
        json!({"rank": a.rank(), "dual_rank": dual.rank()}),
    );
    let inv = a.is_k_invariant(k);
    let dual_inv = dual.is_k_invariant(&khat);
    report.check(inv == dual_inv, &inst, "invariance differs from the dual", json!({"a": inv, "dual": dual_inv}));

    let mut hk = 0;
    for h in g.all_subgroups()?.iter() {
        let perp = annihilator(g, h);
        let lhs = a.in_star(h) && k.stabilizes(h);
        let rhs = dual.in_star(&perp) && khat.stabilizes(&perp);
        hk += usize::from(lhs);
        report.check(
            lhs == rhs,
            &inst,
            "H in H_K(A) disagrees with its annihilator in H_K(dual)",
            json!({"H": h.as_slice(), "perp": perp.as_slice(), "lhs": lhs, "rhs": rhs}),
        );
    }
    let prim = a.is_k_primitive(k)?;
    let dual_prim = dual.is_k_primitive(&khat)?;
    report.check(prim == dual_prim, &inst, "primitivity differs from the dual", json!({"a": prim, "dual": dual_prim}));

    for s in k.generators() {
        let sh = dual_automorphism(g, s)?;
        for t in k.elements() {
            let th = dual_automorphism(g, t)?;
            let st = dual_automorphism(g, &s.compose(t))?;
            report.check(st == sh.compose(&th), &inst, "sigma -> sigma-hat is not multiplicative", json!(null));
        }
    }
    report.detail("dual_basic_sets", sets(dual.basic_sets()));
    report.detail("h_k_size", hk);
    report.detail("k_invariant", inv);
    report.detail("k_primitive", prim);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::multiplier_group;

    fn s(v: &[usize]) -> Subset {
        Subset::from(v.to_vec())
    }

    #[test]
    fn char_sum_examples() {
        let z4 = AbelianGroup::cyclic(4);
        let x = s(&[0, 1, 3]);
        assert_eq!(char_sum(&z4, Character { label: 0 }, &x).as_integer(), Some(3));
        assert_eq!(char_sum(&z4, Character { label: 1 }, &s(&[1, 3])).as_integer(), Some(0));
        assert_eq!(char_sum(&z4, Character { label: 1 }, &s(&[0, 2])).as_integer(), Some(0));
        assert_eq!(char_sum(&z4, Character { label: 1 }, &s(&[1])).as_integer(), None);
    }

    #[test]
    fn annihilator_examples() {
        let z4 = AbelianGroup::cyclic(4);
        assert_eq!(annihilator(&z4, &Subgroup::trivial()).order(), 4);
        assert_eq!(annihilator(&z4, &z4.whole()).as_slice(), &[0]);
        let h = z4.generated_subgroup(&[2]);
        assert_eq!(annihilator(&z4, &h).as_slice(), &[0, 2]);
        let g = AbelianGroup::new(&[2, 4, 3]).unwrap();
        for h in g.all_subgroups().unwrap().iter() {
            let perp = annihilator(&g, h);
            assert_eq!(h.order() * perp.order(), g.order());
            assert_eq!(&annihilator(&g, &perp), h);
        }
    }

    #[test]
    fn dual_examples() {
        let z4 = AbelianGroup::cyclic(4);
        assert_eq!(dual_sring(&SRing::discrete(&z4)).unwrap().rank(), 4);
        assert_eq!(dual_sring(&SRing::rank2(&z4)).unwrap().rank(), 2);
        let a = SRing::new(&z4, vec![s(&[0]), s(&[2]), s(&[1, 3])]).unwrap();
        assert_eq!(dual_sring(&a).unwrap(), a);
    }

    #[test]
    fn dual_automorphism_examples() {
        let z4 = AbelianGroup::cyclic(4);
        assert!(dual_automorphism(&z4, &Endomorphism::identity(4)).unwrap().is_identity());
        assert_eq!(dual_automorphism(&z4, &Endomorphism::scalar(&z4, 3)).unwrap(), Endomorphism::scalar(&z4, 3));
        let z8 = AbelianGroup::cyclic(8);
        assert_eq!(dual_automorphism(&z8, &Endomorphism::scalar(&z8, 3)).unwrap(), Endomorphism::scalar(&z8, 3));
        assert!(dual_automorphism(&z4, &Endomorphism::scalar(&z4, 2)).is_err());
    }

    #[test]
    fn duality_theorem_examples() {
        let z6 = AbelianGroup::cyclic(6);
        assert!(verify_duality_theorem(&SRing::rank2(&z6), &multiplier_group(&z6)).unwrap().passed());
        let z4 = AbelianGroup::cyclic(4);
        let a = SRing::new(&z4, vec![s(&[0]), s(&[2]), s(&[1, 3])]).unwrap();
        assert!(verify_duality_theorem(&a, &multiplier_group(&z4)).unwrap().passed());
        let z8 = AbelianGroup::cyclic(8);
        let k = multiplier_group(&z8);
        let cyc = SRing::from_orbits(&z8, &k).unwrap();
        let r = verify_duality_theorem(&cyc, &k).unwrap();
        assert!(r.passed());
        assert_eq!(r.details["h_k_size"], 4);
        let v = AbelianGroup::new(&[2, 4]).unwrap();
        let aut = crate::group::automorphism_group(&v).unwrap();
        for k in aut.all_subgroups().unwrap() {
            assert!(verify_duality_theorem(&SRing::discrete(&v), &k).unwrap().passed());
        }
    }
}
