//! S-rings over finite abelian groups.

mod iso;
mod schurian;

use std::fmt;

pub use iso::cayley_isomorphic;
pub use schurian::{schurian_sring, PermutationSet};

use crate::arith::is_prime;
use crate::group::{AbelianGroup, AutSubgroup, Subgroup, Subset};
use crate::{Error, Result};

/// An element of the integral group ring `Z[G]`, stored as a coefficient
/// per group element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    coeffs: Vec<i64>,
}

impl GroupRingElement {
    pub fn zero(n: usize) -> Self {
        GroupRingElement { coeffs: vec![0; n] }
    }

    /// `ξ(X)`, the sum of the elements of `X`.
    pub fn indicator(g: &AbelianGroup, x: &Subset) -> Self {
        let mut e = Self::zero(g.order());
        for &a in x.iter() {
            e.coeffs[a] = 1;
        }
        e
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        GroupRingElement { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, x: usize) -> i64 {
        self.coeffs[x]
    }

    pub fn support(&self) -> Subset {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        GroupRingElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        GroupRingElement {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Convolution product in `Z[G]`.
    pub fn mul(&self, g: &AbelianGroup, other: &Self) -> Self {
        let mut out = vec![0i64; g.order()];
        for (a, &ca) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (b, &cb) in other.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
                out[g.add(a, b)] += ca * cb;
            }
        }
        GroupRingElement { coeffs: out }
    }

    /// Componentwise product of coefficient vectors.
    pub fn hadamard(&self, other: &Self) -> Self {
        GroupRingElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).collect(),
        }
    }

    /// Returns `k` when `self = k·ξ(X)`; `None` when it is not such a multiple.
    pub fn multiple_of(&self, x: &Subset) -> Option<i64> {
        let k = x.least().map_or(0, |m| self.coeffs[m]);
        let ok = self
            .coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| if x.contains(i) { c == k } else { c == 0 });
        ok.then_some(k)
    }
}

/// `(ξ(A)ξ(B)) ∘ ξ(C)` with `∘` the componentwise product.
pub fn triple_product(g: &AbelianGroup, a: &Subset, b: &Subset, c: &Subset) -> GroupRingElement {
    let ab = GroupRingElement::indicator(g, a).mul(g, &GroupRingElement::indicator(g, b));
    ab.hadamard(&GroupRingElement::indicator(g, c))
}

/// A validated S-ring: a partition of `G` into basic sets whose indicators
/// span a subring of `Z[G]`.
///
/// Basic sets are sorted by their least element, so class 0 is `{0}`.
#[derive(Clone)]
pub struct SRing {
    group: AbelianGroup,
    basic_sets: Vec<Subset>,
    class_of: Vec<usize>,
    /// `constants[(i * r + j) * r + k]` is the coefficient of any element of
    /// class `k` in `ξ(X_i)ξ(X_j)`.
    constants: Vec<u32>,
}

impl PartialEq for SRing {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.basic_sets == other.basic_sets
    }
}

impl Eq for SRing {}

impl std::hash::Hash for SRing {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.basic_sets.hash(state);
    }
}

impl fmt::Debug for SRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SRing")
            .field("group", &self.group.factors())
            .field("basic_sets", &self.basic_sets)
            .finish()
    }
}

impl SRing {
    /// Validates `partition` as an S-ring over `g`.
    pub fn new(g: &AbelianGroup, partition: Vec<Subset>) -> Result<SRing> {
        let n = g.order();
        let mut class_of = vec![usize::MAX; n];
        let mut sets: Vec<Subset> = partition;
        if let Some(pos) = sets.iter().position(|s| s.is_empty()) {
            return Err(Error::NotAPartition(format!("basic set {pos} is empty")));
        }
        sets.sort_by_key(|s| s.least());
        for (i, s) in sets.iter().enumerate() {
            for &x in s.iter() {
                if x >= n {
                    return Err(Error::NotAPartition(format!("{x} is not an element of {g}")));
                }
                if class_of[x] != usize::MAX {
                    return Err(Error::NotAPartition(format!("element {x} lies in two basic sets")));
                }
                class_of[x] = i;
            }
        }
        if let Some(x) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::NotAPartition(format!("element {x} lies in no basic set")));
        }
        if sets[0].len() != 1 {
            return Err(Error::IdentityClassNotSingleton {
                class: sets[0].clone().into_vec(),
            });
        }
        for s in &sets {
            let inv = g.negate_subset(s);
            let c = class_of[inv.as_slice()[0]];
            if sets[c] != inv {
                return Err(Error::NotInverseClosed {
                    class: s.clone().into_vec(),
                    inverse: inv.into_vec(),
                });
            }
        }
        let r = sets.len();
        let mut constants = vec![0u32; r * r * r];
        let mut prod = vec![0u32; n];
        for i in 0..r {
            for j in 0..r {
                prod.iter_mut().for_each(|c| *c = 0);
                for &a in sets[i].iter() {
                    for &b in sets[j].iter() {
                        prod[g.add(a, b)] += 1;
                    }
                }
                for (k, s) in sets.iter().enumerate() {
                    let a = s.as_slice()[0];
                    if let Some(&b) = s.iter().find(|&&b| prod[b] != prod[a]) {
                        return Err(Error::ProductNotInSpan {
                            x: sets[i].clone().into_vec(),
                            y: sets[j].clone().into_vec(),
                            a,
                            b,
                            coeff_a: prod[a] as i64,
                            coeff_b: prod[b] as i64,
                        });
                    }
                    constants[(i * r + j) * r + k] = prod[a];
                }
            }
        }
        Ok(SRing {
            group: g.clone(),
            basic_sets: sets,
            class_of,
            constants,
        })
    }

    /// Validates the partition given by a class label per element.
    pub fn from_labels(g: &AbelianGroup, labels: &[usize]) -> Result<SRing> {
        let mut by_label: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (x, &l) in labels.iter().enumerate() {
            by_label.entry(l).or_default().push(x);
        }
        SRing::new(g, by_label.into_values().map(Subset::from).collect())
    }

    /// `{0}` and `G ∖ {0}`.
    pub fn rank2(g: &AbelianGroup) -> SRing {
        let mut parts = vec![Subset::singleton(0)];
        if g.order() > 1 {
            parts.push((1..g.order()).collect());
        }
        SRing::new(g, parts).expect("the rank-2 partition is an S-ring")
    }

    /// All singletons: the group ring itself.
    pub fn discrete(g: &AbelianGroup) -> SRing {
        SRing::new(g, g.elements().map(Subset::singleton).collect()).expect("the discrete partition is an S-ring")
    }

    /// The orbit partition of `K ≤ Aut(G)`, which is always an S-ring.
    pub fn from_orbits(g: &AbelianGroup, k: &AutSubgroup) -> Result<SRing> {
        if k.degree() != g.order() {
            return Err(Error::invalid("automorphism group acts on a set of the wrong size"));
        }
        SRing::new(g, k.orbits())
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn basic_sets(&self) -> &[Subset] {
        &self.basic_sets
    }

    pub fn rank(&self) -> usize {
        self.basic_sets.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_labels(&self) -> &[usize] {
        &self.class_of
    }

    /// `[x]`, the basic set containing `x`.
    pub fn basic_set_of(&self, x: usize) -> &Subset {
        &self.basic_sets[self.class_of[x]]
    }

    /// Coefficient of `ξ(X_k)` in `ξ(X_i)ξ(X_j)`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u32 {
        let r = self.rank();
        self.constants[(i * r + j) * r + k]
    }

    /// Index of the class `-X_i`.
    pub fn inverse_class(&self, i: usize) -> usize {
        let x = self.basic_sets[i].as_slice()[0];
        self.class_of[self.group.neg(x)]
    }

    pub fn is_basic_set(&self, x: &Subset) -> bool {
        x.least().is_some_and(|m| self.basic_sets[self.class_of[m]] == *x)
    }

    /// Membership in `S*(A)`: `x` is a union of basic sets. The empty set
    /// counts as the empty union.
    pub fn in_star(&self, x: &Subset) -> bool {
        if x.iter().any(|&a| a >= self.group.order()) {
            return false;
        }
        let mut counts = vec![0usize; self.rank()];
        for &a in x.iter() {
            counts[self.class_of[a]] += 1;
        }
        counts
            .iter()
            .zip(&self.basic_sets)
            .all(|(&c, s)| c == 0 || c == s.len())
    }

    /// Classes meeting `x`, i.e. the smallest element of `S*(A)` containing it.
    pub fn closure_in_star(&self, x: &Subset) -> Subset {
        let mut hit = vec![false; self.rank()];
        for &a in x.iter() {
            hit[self.class_of[a]] = true;
        }
        self.basic_sets
            .iter()
            .zip(hit)
            .filter(|(_, h)| *h)
            .flat_map(|(s, _)| s.iter().copied())
            .collect()
    }

    /// `H(A)`: the subgroups of `G` lying in `S*(A)`.
    pub fn a_subgroups(&self) -> Result<Vec<Subgroup>> {
        Ok(self
            .group
            .all_subgroups()?
            .iter()
            .filter(|h| self.in_star(h))
            .cloned()
            .collect())
    }

    /// True when every element of `K` maps each basic set onto some basic set.
    pub fn is_k_invariant(&self, k: &AutSubgroup) -> bool {
        partition_is_k_invariant(&self.basic_sets, k)
    }

    /// True when every element of `K` maps each basic set onto itself, i.e.
    /// every basic set is a union of `K`-orbits.
    pub fn is_k_stable(&self, k: &AutSubgroup) -> bool {
        k.degree() == self.group.order() && self.basic_sets.iter().all(|x| k.stabilizes(x))
    }

    /// `H_K(A)`: the `A`-subgroups mapped onto themselves by `K`.
    pub fn h_k(&self, k: &AutSubgroup) -> Result<Vec<Subgroup>> {
        Ok(self.a_subgroups()?.into_iter().filter(|h| k.stabilizes(h)).collect())
    }

    /// True when `H_K(A)` contains only the trivial subgroup and `G`.
    pub fn is_k_primitive(&self, k: &AutSubgroup) -> Result<bool> {
        let n = self.group.order();
        Ok(self.h_k(k)?.iter().all(|h| h.order() == 1 || h.order() == n))
    }

    pub fn is_primitive(&self) -> Result<bool> {
        self.is_k_primitive(&AutSubgroup::trivial(self.group.order()))
    }

    /// `X^{[p]}`: the elements `p·x` for `x ∈ X` with `|(x + E) ∩ X|` not
    /// divisible by `p`, where `E` is the `p`-torsion subgroup.
    pub fn power_map(&self, x: &Subset, p: usize) -> Result<Subset> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if !self.is_basic_set(x) {
            return Err(Error::invalid(format!("{:?} is not a basic set", x.as_slice())));
        }
        Ok(power_map_of(&self.group, x, p))
    }

    /// The image partition under a bijection of the underlying set.
    pub fn image(&self, sigma: &crate::group::Endomorphism) -> Result<SRing> {
        SRing::new(&self.group, self.basic_sets.iter().map(|s| sigma.image_of(s)).collect())
    }
}

/// True when every element of `K` permutes the blocks of `partition`.
/// Works on any partition, validated or not.
pub fn partition_is_k_invariant(partition: &[Subset], k: &AutSubgroup) -> bool {
    let mut block = vec![usize::MAX; k.degree()];
    for (i, s) in partition.iter().enumerate() {
        for &x in s.iter() {
            match block.get_mut(x) {
                Some(b) => *b = i,
                None => return false,
            }
        }
    }
    if block.contains(&usize::MAX) {
        return false;
    }
    k.generators().iter().all(|sigma| {
        partition.iter().all(|x| {
            let image = sigma.image_of(x);
            let target = image.least().map(|m| block[m]);
            target.is_some_and(|t| partition[t] == image)
        })
    })
}

/// `X^{[p]}` evaluated directly from its definition, for any subset.
pub fn power_map_of(g: &AbelianGroup, x: &Subset, p: usize) -> Subset {
    let e = g.torsion(p);
    x.iter()
        .filter(|&&a| e.iter().filter(|&&t| x.contains(g.add(a, t))).count() % p != 0)
        .map(|&a| g.scale(p, a))
        .collect()
}
