//! Local pairs `(K, e)` on a finite abelian `p`-group and their
//! correspondence with local commutative rings.

use std::collections::{HashMap, HashSet};

use super::{ring_from_tables, CommRing};
use crate::group::{automorphism_group, AbelianGroup, AutSubgroup, Endomorphism, Subgroup, Subset};
use crate::limits::{check_cap, limits};
use crate::{Error, Result};

/// An abelian `K ≤ Aut(P)` and a point `e` whose orbit has a subgroup as
/// complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalPair {
    pub group: AbelianGroup,
    pub k: AutSubgroup,
    pub e: usize,
    pub complement: Subgroup,
}

impl LocalPair {
    pub fn orbit(&self) -> Subset {
        self.k.orbit(self.e)
    }
}

fn check_p_group(p: &AbelianGroup) -> Result<usize> {
    p.p_group_prime()
        .ok_or_else(|| Error::invalid(format!("{p} is not a nontrivial p-group")))
}

/// The local pair `(K, e)` when `P ∖ e^K` is a subgroup of `P`.
pub fn is_local_pair(p: &AbelianGroup, k: &AutSubgroup, e: usize) -> Result<Option<LocalPair>> {
    check_p_group(p)?;
    if k.degree() != p.order() || e >= p.order() {
        return Err(Error::invalid("automorphisms or base point do not match the group"));
    }
    if !k.is_abelian() {
        return Err(Error::invalid("K is not abelian"));
    }
    let orbit = k.orbit(e);
    let Some(complement) = Subgroup::from_subset(p, orbit.complement(p.order())) else {
        return Ok(None);
    };
    if k.order() != orbit.len() {
        return Err(Error::internal(format!(
            "K of order {} is not regular on the orbit of size {}",
            k.order(),
            orbit.len()
        )));
    }
    Ok(Some(LocalPair {
        group: p.clone(),
        k: k.clone(),
        e,
        complement,
    }))
}

/// The local ring on `P` with `K_R = K` and `1_R = e`.
///
/// The additive closure `E` of `K` inside `End(P)` is a ring, and
/// `T ↦ T(e)` identifies it with `P`; multiplication is transported along
/// this bijection: `x·y = T_x(y)` where `T_x(e) = x`.
pub fn ring_from_local_pair(pair: &LocalPair) -> Result<CommRing> {
    let p = &pair.group;
    let n = p.order();
    let k = pair.k.elements();
    let mut seen: HashSet<Endomorphism> = k.iter().cloned().collect();
    let mut span: Vec<Endomorphism> = k.to_vec();
    let zero = Endomorphism::zero(n);
    if seen.insert(zero.clone()) {
        span.push(zero);
    }
    let mut i = 0;
    while i < span.len() {
        for g in k {
            let t = span[i].add(p, g);
            if seen.insert(t.clone()) {
                span.push(t);
                if span.len() > n {
                    return Err(Error::internal("additive closure of K is larger than P"));
                }
            }
        }
        i += 1;
    }
    let mut by_value: Vec<Option<&Endomorphism>> = vec![None; n];
    for t in &span {
        let v = t.apply(pair.e);
        if by_value[v].replace(t).is_some() {
            return Err(Error::internal("T -> T(e) is not injective on the closure of K"));
        }
    }
    let mut mul = vec![0; n * n];
    for x in 0..n {
        let t = by_value[x].ok_or_else(|| Error::internal("T -> T(e) is not surjective"))?;
        for y in 0..n {
            mul[x * n + y] = t.apply(y);
        }
    }
    let ring = ring_from_tables(p, mul, pair.e)
        .map_err(|err| Error::internal(format!("transported multiplication is not a ring: {err}")))?
        .with_label(format!("local ring on {p}"));
    if !ring.is_local()
        || ring.units().units() != &pair.orbit()
        || ring.radical()?.as_subset() != pair.complement.as_subset()
        || ring.k_r() != pair.k
    {
        return Err(Error::internal("ring built from a local pair fails its postconditions"));
    }
    Ok(ring)
}

/// `(K_R, 1_R)` for a local ring `R`.
pub fn local_pair_from_ring(r: &CommRing) -> Result<LocalPair> {
    if !r.is_local() {
        return Err(Error::NotLocal);
    }
    is_local_pair(r.additive(), &r.k_r(), r.one())?
        .ok_or_else(|| Error::internal("the pair of a local ring is not a local pair"))
}

/// Every local pair on `P`, with the distinct groups `K` grouped into
/// `Aut(P)`-conjugacy classes.
#[derive(Clone, Debug)]
pub struct LocalPairCensus {
    pub group: AbelianGroup,
    /// The distinct first components, each with its orbit complement.
    pub subgroups: Vec<(AutSubgroup, Subgroup)>,
    /// Indices into `subgroups`, one list per conjugacy class.
    pub classes: Vec<Vec<usize>>,
}

impl LocalPairCensus {
    /// Every pair `(K, e)`: each `K` paired with every point of its orbit.
    pub fn pairs(&self) -> Vec<LocalPair> {
        self.subgroups
            .iter()
            .flat_map(|(k, c)| {
                c.as_subset().complement(self.group.order()).into_vec().into_iter().map(move |e| LocalPair {
                    group: self.group.clone(),
                    k: k.clone(),
                    e,
                    complement: c.clone(),
                })
            })
            .collect()
    }

    /// One pair per conjugacy class, based at the least point of its orbit.
    pub fn representatives(&self) -> Vec<LocalPair> {
        self.classes
            .iter()
            .map(|cls| {
                let (k, c) = &self.subgroups[cls[0]];
                let e = c.as_subset().complement(self.group.order()).least().expect("orbit is nonempty");
                LocalPair {
                    group: self.group.clone(),
                    k: k.clone(),
                    e,
                    complement: c.clone(),
                }
            })
            .collect()
    }
}

/// Finds every abelian `K ≤ Aut(P)` acting regularly on `P ∖ P_0` for some
/// proper subgroup `P_0`.
///
/// For fixed `P_0` with `e` the least point outside it, `K` is built by
/// repeatedly adding the unique element sending `e` to the least point not
/// yet reached. Each `K` is therefore produced exactly once.
pub fn enumerate_local_pairs(p: &AbelianGroup) -> Result<LocalPairCensus> {
    check_p_group(p)?;
    check_cap("group for local pair enumeration", p.order(), limits().group_cap)?;
    let aut = automorphism_group(p)?;
    let n = p.order();
    let mut found: Vec<(AutSubgroup, Subgroup)> = Vec::new();
    for p0 in p.all_subgroups()?.iter().filter(|h| h.order() < n) {
        let outside = p0.as_subset().complement(n);
        let e = outside.least().expect("proper subgroup");
        let stab: Vec<&Endomorphism> = aut.elements().iter().filter(|s| s.image_of(p0) == *p0.as_subset()).collect();
        let mut by_target: HashMap<usize, Vec<&Endomorphism>> = HashMap::new();
        for s in stab {
            by_target.entry(s.apply(e)).or_default().push(s);
        }
        let start = AutSubgroup::trivial(n);
        grow(&start, e, &outside, &by_target, &mut |k| found.push((k, p0.clone())))?;
    }
    found.sort_by(|a, b| {
        a.1.order()
            .cmp(&b.1.order())
            .then_with(|| a.1.cmp(&b.1))
            .then_with(|| a.0.elements().cmp(b.0.elements()))
    });
    let index: HashMap<&[Endomorphism], usize> = found.iter().enumerate().map(|(i, (k, _))| (k.elements(), i)).collect();
    let mut class_of = vec![usize::MAX; found.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..found.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        for sigma in aut.elements() {
            let conj = found[i].0.conjugate(sigma);
            let j = *index
                .get(conj.elements())
                .ok_or_else(|| Error::internal("conjugate of a local pair group was not enumerated"))?;
            if class_of[j] == usize::MAX {
                class_of[j] = classes.len();
                members.push(j);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    Ok(LocalPairCensus {
        group: p.clone(),
        subgroups: found,
        classes,
    })
}

fn grow(
    k: &AutSubgroup,
    e: usize,
    target: &Subset,
    by_target: &HashMap<usize, Vec<&Endomorphism>>,
    emit: &mut dyn FnMut(AutSubgroup),
) -> Result<()> {
    let orbit = k.orbit(e);
    if orbit == *target {
        emit(k.clone());
        return Ok(());
    }
    let o = target.difference(&orbit).least().expect("orbit is a proper subset");
    for &sigma in by_target.get(&o).map(Vec::as_slice).unwrap_or_default() {
        if !k.generators().iter().all(|g| g.commutes_with(sigma)) {
            continue;
        }
        let mut gens = k.generators().to_vec();
        gens.push(sigma.clone());
        let next = AutSubgroup::generate(k.degree(), gens)?;
        if next.order() > target.len() {
            continue;
        }
        let reach = next.orbit(e);
        if next.order() == reach.len() && reach.is_subset(target) {
            grow(&next, e, target, by_target, emit)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::multiplier_group;
    use crate::ring::{make_dual_numbers, make_gf, make_zn, ring_isomorphic};

    #[test]
    fn local_pair_examples() {
        let z4 = AbelianGroup::cyclic(4);
        let pair = is_local_pair(&z4, &multiplier_group(&z4), 1).unwrap().unwrap();
        assert_eq!(pair.complement.as_slice(), &[0, 2]);
        let z2 = AbelianGroup::cyclic(2);
        let pair = is_local_pair(&z2, &AutSubgroup::trivial(2), 1).unwrap().unwrap();
        assert_eq!(pair.complement.as_slice(), &[0]);
        let z8 = AbelianGroup::cyclic(8);
        let k = AutSubgroup::generate(8, vec![Endomorphism::scalar(&z8, 3)]).unwrap();
        assert!(is_local_pair(&z8, &k, 1).unwrap().is_none());
        assert!(is_local_pair(&AbelianGroup::cyclic(6), &AutSubgroup::trivial(6), 1).is_err());
        let v = AbelianGroup::new(&[2, 2]).unwrap();
        let aut = automorphism_group(&v).unwrap();
        assert!(is_local_pair(&v, &aut, 1).is_err());
    }

    #[test]
    fn ring_from_pair_examples() {
        let v = AbelianGroup::new(&[2, 2]).unwrap();
        // (1,0) = 2; cycle 2 -> 1 -> 3 -> 2 permutes the involutions
        let c3 = Endomorphism::from_table(&v, vec![0, 3, 1, 2]).unwrap();
        let k = AutSubgroup::generate(4, vec![c3]).unwrap();
        let pair = is_local_pair(&v, &k, 2).unwrap().unwrap();
        let r = ring_from_local_pair(&pair).unwrap();
        assert!(r.is_field());
        assert!(ring_isomorphic(&r, &make_gf(2, 2).unwrap()).unwrap());

        let z4 = AbelianGroup::cyclic(4);
        let r = ring_from_local_pair(&is_local_pair(&z4, &multiplier_group(&z4), 1).unwrap().unwrap()).unwrap();
        assert_eq!(r, make_zn(4).unwrap().with_label(r.label()));

        // (x1, x2) -> (x1, x1 + x2) with (1,0) = 2, (0,1) = 1
        let shear = Endomorphism::from_table(&v, vec![0, 1, 3, 2]).unwrap();
        let k = AutSubgroup::generate(4, vec![shear]).unwrap();
        let pair = is_local_pair(&v, &k, 2).unwrap().unwrap();
        let r = ring_from_local_pair(&pair).unwrap();
        assert!(!r.is_field());
        assert!(ring_isomorphic(&r, &make_dual_numbers(2).unwrap()).unwrap());
    }

    #[test]
    fn pair_from_ring_examples() {
        let z4 = make_zn(4).unwrap();
        let pair = local_pair_from_ring(&z4).unwrap();
        assert_eq!((pair.k.order(), pair.e, pair.complement.as_slice()), (2, 1, &[0, 2][..]));
        let f4 = make_gf(2, 2).unwrap();
        let pair = local_pair_from_ring(&f4).unwrap();
        assert_eq!((pair.k.order(), pair.e, pair.complement.as_slice()), (3, 1, &[0][..]));
        let d2 = make_dual_numbers(2).unwrap();
        let pair = local_pair_from_ring(&d2).unwrap();
        // t has index 2
        assert_eq!((pair.k.order(), pair.e, pair.complement.as_slice()), (2, 1, &[0, 2][..]));
        assert_eq!(local_pair_from_ring(&make_zn(6).unwrap()), Err(Error::NotLocal));
    }

    #[test]
    fn census_examples() {
        let v = AbelianGroup::new(&[2, 2]).unwrap();
        assert_eq!(enumerate_local_pairs(&v).unwrap().classes.len(), 2);
        assert_eq!(enumerate_local_pairs(&AbelianGroup::cyclic(4)).unwrap().classes.len(), 1);
        let w = AbelianGroup::new(&[3, 3]).unwrap();
        assert_eq!(enumerate_local_pairs(&w).unwrap().classes.len(), 2);
    }

    #[test]
    fn census_roundtrip() {
        for factors in [vec![2], vec![4], vec![8], vec![2, 2], vec![2, 4], vec![3, 3], vec![2, 2, 2]] {
            let p = AbelianGroup::new(&factors).unwrap();
            let census = enumerate_local_pairs(&p).unwrap();
            for pair in census.pairs() {
                let r = ring_from_local_pair(&pair).unwrap();
                let back = local_pair_from_ring(&r).unwrap();
                assert_eq!((back.k, back.e), (pair.k, pair.e));
            }
        }
    }
}
