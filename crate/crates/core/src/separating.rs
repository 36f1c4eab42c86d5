//! Separating subgroups: the predicate, the set `H_sep(A)`, and checkers for
//! the separating-subgroup theorem and its consequences.

use serde::Serialize;
use serde_json::json;

use crate::group::{AutSubgroup, Subgroup, Subset};
use crate::sring::{triple_product, SRing};
use crate::{Error, Result};

/// A separated pair `(H, X)` with the computed `⟨X⟩` and `rad(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationWitness {
    #[serde(rename = "H")]
    pub h: Subgroup,
    #[serde(rename = "X")]
    pub x: Subset,
    pub span: Subgroup,
    pub radical: Subgroup,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SeparationReport {
    pub checked: usize,
    pub witnesses: Vec<SeparationWitness>,
    pub violations: Vec<String>,
}

impl SeparationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The form of the separation hypothesis a check uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Hypothesis {
    /// `⟨X ∩ H⟩ ⊆ rad(X ∖ H)`, the predicate of [`separates`].
    #[default]
    Generated,
    /// `H ⊆ rad(X ∖ H)`: `X ∖ H` is a union of cosets of `H`. This is the
    /// condition established wherever the theorem is applied, and the one
    /// its counting argument needs.
    Cosets,
}

/// `H` separates `X` when `X ∩ H` and `X ∖ H` are nonempty and
/// `⟨X ∩ H⟩ ⊆ rad(X ∖ H)`.
pub fn separates(a: &SRing, h: &Subgroup, x: &Subset) -> Result<bool> {
    if !a.is_basic_set(x) {
        return Err(Error::invalid(format!("{:?} is not a basic set", x.as_slice())));
    }
    Ok(separates_unchecked(a, h, x))
}

fn separates_unchecked(a: &SRing, h: &Subgroup, x: &Subset) -> bool {
    satisfies(a, h, x, Hypothesis::Generated)
}

fn satisfies(a: &SRing, h: &Subgroup, x: &Subset, hyp: Hypothesis) -> bool {
    let g = a.group();
    let inside = x.intersection(h);
    let outside = x.difference(h);
    if inside.is_empty() || outside.is_empty() {
        return false;
    }
    let rad = g.subset_radical(&outside).expect("nonempty");
    match hyp {
        Hypothesis::Generated => g.generated_subgroup(inside.as_slice()).is_subset(&rad),
        Hypothesis::Cosets => h.is_subset(&rad),
    }
}

/// `H_sep(A)`: subgroups separating at least one basic set.
pub fn separating_subgroups(a: &SRing) -> Result<Vec<Subgroup>> {
    let subs = a.group().all_subgroups()?;
    let out: Vec<Subgroup> = subs
        .iter()
        .filter(|h| a.basic_sets().iter().any(|x| separates_unchecked(a, h, x)))
        .cloned()
        .collect();
    if out.iter().any(|h| a.in_star(h)) {
        return Err(Error::internal("a separating subgroup is an A-subgroup"));
    }
    Ok(out)
}

/// For every separated pair `(H, X)`: `X = ⟨X⟩ ∖ rad(X)` with
/// `rad(X) < H < ⟨X⟩`, and `X` is the only basic set `H` separates. The
/// constants `a_X` from `ξ_{X,-X,X} = a_X ξ_X` are recomputed from the
/// group ring and compared with the cached structure constants.
///
/// Uses the [`separates`] predicate. Under it the clause `H ⊆ ⟨X⟩` and
/// uniqueness do fail, the smallest case being `Z_2 × Z_4`; see
/// [`check_separating_theorem_under`] for the coset form.
pub fn check_separating_theorem(a: &SRing) -> Result<SeparationReport> {
    check_separating_theorem_under(a, Hypothesis::Generated)
}

/// [`check_separating_theorem`] with a chosen form of the hypothesis.
pub fn check_separating_theorem_under(a: &SRing, hyp: Hypothesis) -> Result<SeparationReport> {
    let g = a.group();
    let mut report = SeparationReport::default();
    for (i, x) in a.basic_sets().iter().enumerate() {
        let neg = g.negate_subset(x);
        let t = triple_product(g, x, &neg, x);
        let expected = a.structure_constant(i, a.inverse_class(i), i) as i64;
        if t.multiple_of(x) != Some(expected) {
            report
                .violations
                .push(format!("triple product of {:?} is not {expected} times its indicator", x.as_slice()));
        }
    }
    for h in a.group().all_subgroups()?.iter() {
        let mut separated = Vec::new();
        for x in a.basic_sets() {
            report.checked += 1;
            if !satisfies(a, h, x, hyp) {
                continue;
            }
            separated.push(x.clone());
            let span = g.generated_subgroup(x.as_slice());
            let radical = g.subset_radical(x)?;
            let expected = span.as_subset().difference(&radical);
            if *x != expected {
                report.violations.push(format!(
                    "H = {:?} separates X = {:?} but X is not <X> minus rad(X)",
                    h.as_slice(),
                    x.as_slice()
                ));
            }
            for (ok, clause) in [
                (radical.is_subset(h), "rad(X) <= H"),
                (h.is_subset(&span), "H <= <X>"),
                (radical != *h && *h != span, "rad(X) != H != <X>"),
            ] {
                if !ok {
                    report.violations.push(format!(
                        "H = {:?} separates X = {:?} but {clause} fails",
                        h.as_slice(),
                        x.as_slice()
                    ));
                }
            }
            if a.in_star(h) {
                report
                    .violations
                    .push(format!("separating subgroup {:?} is an A-subgroup", h.as_slice()));
            }
            report.witnesses.push(SeparationWitness {
                h: h.clone(),
                x: x.clone(),
                span,
                radical,
            });
        }
        if separated.len() > 1 {
            report
                .violations
                .push(format!("H = {:?} separates {} basic sets", h.as_slice(), separated.len()));
        }
    }
    Ok(report)
}

fn check_primitive_invariant(a: &SRing, k: &AutSubgroup) -> Result<()> {
    if !a.is_k_invariant(k) {
        return Err(Error::precondition("the S-ring is not K-invariant"));
    }
    if !a.is_k_primitive(k)? {
        return Err(Error::precondition("the S-ring is not K-primitive"));
    }
    Ok(())
}

/// If some `K`-invariant subgroup separates a basic set, the rank is 2.
pub fn check_corollary_32(a: &SRing, k: &AutSubgroup) -> Result<SeparationReport> {
    check_primitive_invariant(a, k)?;
    let mut report = SeparationReport::default();
    let sep = separating_subgroups(a)?;
    report.checked = sep.len();
    for h in sep.iter().filter(|h| k.stabilizes(h)) {
        if a.rank() != 2 {
            report.violations.push(format!(
                "K-invariant separating subgroup {:?} in an S-ring of rank {}",
                h.as_slice(),
                a.rank()
            ));
        }
        for x in a.basic_sets().iter().filter(|x| separates_unchecked(a, h, x)) {
            let g = a.group();
            report.witnesses.push(SeparationWitness {
                h: h.clone(),
                x: x.clone(),
                span: g.generated_subgroup(x.as_slice()),
                radical: g.subset_radical(x)?,
            });
        }
    }
    Ok(report)
}

/// For a nontrivial proper `K`-invariant `H`: every `A`-subgroup inside `H`
/// is trivial and every `A`-subgroup containing `H` is `G`.
pub fn check_lemma_33(a: &SRing, k: &AutSubgroup, h: &Subgroup) -> Result<SeparationReport> {
    check_primitive_invariant(a, k)?;
    let n = a.group().order();
    if h.order() == 1 || h.order() == n || !k.stabilizes(h) {
        return Err(Error::precondition("H must be a nontrivial proper K-invariant subgroup"));
    }
    let mut report = SeparationReport::default();
    for hp in a.a_subgroups()? {
        report.checked += 1;
        if hp.is_subset(h) && hp.order() != 1 {
            report
                .violations
                .push(format!("A-subgroup {:?} lies in H but is not trivial", hp.as_slice()));
        }
        if h.is_subset(&hp) && hp.order() != n {
            report
                .violations
                .push(format!("A-subgroup {:?} contains H but is not G", hp.as_slice()));
        }
    }
    Ok(report)
}

/// Report JSON in the shape `{"checked", "witnesses", "violations"}`.
pub fn report_json(r: &SeparationReport) -> serde_json::Value {
    json!(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{multiplier_group, AbelianGroup};

    fn s(v: &[usize]) -> Subset {
        Subset::from(v.to_vec())
    }

    #[test]
    fn separates_examples() {
        let z8 = AbelianGroup::cyclic(8);
        let r2 = SRing::rank2(&z8);
        let h = z8.generated_subgroup(&[4]);
        assert!(separates(&r2, &h, &s(&[1, 2, 3, 4, 5, 6, 7])).unwrap());
        let cyc = SRing::from_orbits(&z8, &multiplier_group(&z8)).unwrap();
        assert!(!separates(&cyc, &h, &s(&[1, 3, 5, 7])).unwrap());
        for x in cyc.basic_sets() {
            assert!(!separates(&cyc, &z8.whole(), x).unwrap());
        }
        assert!(separates(&cyc, &h, &s(&[1, 3])).is_err());
    }

    #[test]
    fn separating_subgroup_examples() {
        let z8 = AbelianGroup::cyclic(8);
        let sep: Vec<Vec<usize>> = separating_subgroups(&SRing::rank2(&z8))
            .unwrap()
            .iter()
            .map(|h| h.as_slice().to_vec())
            .collect();
        assert_eq!(sep, vec![vec![0, 4], vec![0, 2, 4, 6]]);
        assert!(separating_subgroups(&SRing::discrete(&AbelianGroup::cyclic(4))).unwrap().is_empty());
        let cyc = SRing::from_orbits(&z8, &multiplier_group(&z8)).unwrap();
        assert!(separating_subgroups(&cyc).unwrap().is_empty());
    }

    #[test]
    fn theorem_examples() {
        let z8 = AbelianGroup::cyclic(8);
        let r = check_separating_theorem(&SRing::rank2(&z8)).unwrap();
        assert!(r.passed());
        assert_eq!(r.witnesses.len(), 2);
        let z4 = AbelianGroup::cyclic(4);
        let a = SRing::new(&z4, vec![s(&[0]), s(&[2]), s(&[1, 3])]).unwrap();
        let r = check_separating_theorem(&a).unwrap();
        assert!(r.passed() && r.witnesses.is_empty());
        let json = report_json(&check_separating_theorem(&SRing::rank2(&z8)).unwrap());
        assert_eq!(json["witnesses"][0]["H"], serde_json::json!([0, 4]));
        assert_eq!(json["witnesses"][0]["radical"], serde_json::json!([0]));
    }

    #[test]
    fn corollary_and_lemma_examples() {
        let z8 = AbelianGroup::cyclic(8);
        let k = multiplier_group(&z8);
        let r = check_corollary_32(&SRing::rank2(&z8), &k).unwrap();
        assert!(r.passed() && !r.witnesses.is_empty());
        let z5 = AbelianGroup::cyclic(5);
        let pm = crate::group::AutSubgroup::generate(5, vec![crate::group::Endomorphism::scalar(&z5, 4)]).unwrap();
        let a = SRing::new(&z5, vec![s(&[0]), s(&[1, 4]), s(&[2, 3])]).unwrap();
        let r = check_corollary_32(&a, &pm).unwrap();
        assert!(r.passed() && r.witnesses.is_empty());

        let z12 = AbelianGroup::cyclic(12);
        let k12 = multiplier_group(&z12);
        let h = z12.generated_subgroup(&[6]);
        assert!(check_lemma_33(&SRing::rank2(&z12), &k12, &h).unwrap().passed());
        let cyc = SRing::from_orbits(&z8, &k).unwrap();
        let h = z8.generated_subgroup(&[4]);
        assert!(matches!(check_lemma_33(&cyc, &k, &h), Err(Error::Precondition(_))));
    }
}
