//! Finite abelian groups given as products of cyclic factors.
//!
//! Groups are written additively: the identity is the all-zero tuple, which
//! always has element index `0`. Elements are addressed by their mixed-radix
//! index, with the first cyclic factor most significant.

mod endo;
mod subset;

pub(crate) use endo::for_each_isomorphism_filtered;
pub use endo::{automorphism_group, for_each_isomorphism, multiplier_group, AutSubgroup, Endomorphism};
pub use subset::{Subgroup, Subset};

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd, is_prime, lcm};
use crate::limits::{check_cap, limits};
use crate::{Error, Result};

/// Largest order for which the addition table is precomputed.
const ADD_TABLE_MAX: usize = 1024;

/// An element given by its residues, one per cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub Vec<usize>);

#[derive(Clone)]
pub struct AbelianGroup {
    inner: Arc<GroupData>,
}

struct GroupData {
    factors: Vec<usize>,
    order: usize,
    exponent: usize,
    strides: Vec<usize>,
    neg: Vec<usize>,
    add: Option<Vec<u32>>,
}

impl PartialEq for AbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.inner.factors == other.inner.factors
    }
}

impl Eq for AbelianGroup {}

impl Hash for AbelianGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.factors.hash(state);
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbelianGroup({:?})", self.inner.factors)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.inner.factors.iter().map(|d| format!("Z_{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl AbelianGroup {
    /// The direct product of cyclic groups of the given orders.
    pub fn new(factors: &[usize]) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|&&d| d == 0) {
            return Err(Error::invalid(format!("cyclic factor must be >= 1, got {bad}")));
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::invalid("group order overflows"))?;
        let exponent = factors.iter().fold(1, |acc, &d| lcm(acc, d));
        let mut strides = vec![1; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1];
        }
        let mut data = GroupData {
            factors: factors.to_vec(),
            order,
            exponent,
            strides,
            neg: Vec::new(),
            add: None,
        };
        data.neg = (0..order).map(|x| data.neg_slow(x)).collect();
        if order <= ADD_TABLE_MAX {
            let mut table = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    table.push(data.add_slow(a, b) as u32);
                }
            }
            data.add = Some(table);
        }
        Ok(AbelianGroup { inner: Arc::new(data) })
    }

    /// The cyclic group of order `n`.
    ///
    /// Panics when `n == 0`.
    pub fn cyclic(n: usize) -> Self {
        Self::new(&[n]).expect("cyclic group order must be positive")
    }

    pub fn trivial() -> Self {
        Self::new(&[]).expect("trivial group")
    }

    pub fn factors(&self) -> &[usize] {
        &self.inner.factors
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn exponent(&self) -> usize {
        self.inner.exponent
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.inner.order
    }

    pub fn decode(&self, x: usize) -> Vec<usize> {
        self.inner.decode(x)
    }

    /// Index of the element with the given residues, reduced modulo each factor.
    pub fn encode(&self, residues: &[usize]) -> usize {
        self.inner.encode(residues)
    }

    pub fn element(&self, x: usize) -> GroupElement {
        GroupElement(self.decode(x))
    }

    /// Index of a residue tuple; the tuple length must match the number of factors.
    pub fn index_of(&self, e: &GroupElement) -> Result<usize> {
        if e.0.len() != self.inner.factors.len() {
            return Err(Error::invalid(format!(
                "element {:?} has {} residues, group has {} factors",
                e.0,
                e.0.len(),
                self.inner.factors.len()
            )));
        }
        Ok(self.encode(&e.0))
    }

    /// The unit vector of the `i`-th cyclic factor.
    pub fn generator(&self, i: usize) -> usize {
        self.inner.strides[i] % self.inner.order.max(1)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.inner.add {
            Some(t) => t[a * self.inner.order + b] as usize,
            None => self.inner.add_slow(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.inner.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k·a`.
    pub fn scale(&self, k: usize, a: usize) -> usize {
        let k = k % self.inner.exponent.max(1);
        let r: Vec<usize> = self
            .decode(a)
            .iter()
            .zip(&self.inner.factors)
            .map(|(&x, &d)| (x * k) % d)
            .collect();
        self.encode(&r)
    }

    pub fn order_of(&self, a: usize) -> usize {
        self.decode(a)
            .iter()
            .zip(&self.inner.factors)
            .fold(1, |acc, (&r, &d)| lcm(acc, d / gcd(r, d)))
    }

    pub fn negate_subset(&self, s: &Subset) -> Subset {
        s.iter().map(|&x| self.neg(x)).collect()
    }

    pub fn translate(&self, g: usize, s: &Subset) -> Subset {
        s.iter().map(|&x| self.add(g, x)).collect()
    }

    /// The isomorphism invariant: the sorted multiset of prime-power orders
    /// of the cyclic factors in a primary decomposition.
    pub fn canonical_form(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .inner
            .factors
            .iter()
            .flat_map(|&d| factorize(d).into_iter().map(|(p, e)| p.pow(e)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_isomorphic(&self, other: &AbelianGroup) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// The prime `p` when the group is a nontrivial `p`-group.
    pub fn p_group_prime(&self) -> Option<usize> {
        crate::arith::prime_power_base(self.order())
    }

    pub fn is_cyclic(&self) -> bool {
        self.exponent() == self.order()
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::trivial()
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.elements().collect())
    }

    /// The smallest subgroup containing `generators`; the empty set generates `{0}`.
    pub fn generated_subgroup(&self, generators: &[usize]) -> Subgroup {
        let n = self.order();
        let gens: Vec<usize> = generators.iter().copied().filter(|&x| x != 0).collect();
        let mut mark = vec![false; n];
        mark[0] = true;
        let mut list = vec![0];
        let mut i = 0;
        while i < list.len() {
            let s = list[i];
            for &g in &gens {
                let t = self.add(s, g);
                if !mark[t] {
                    mark[t] = true;
                    list.push(t);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        Subgroup::from_sorted_unchecked(list)
    }

    /// `S + ⟨g⟩` for a subgroup `S`.
    pub(crate) fn join_element(&self, s: &Subgroup, g: usize) -> Subgroup {
        let mut mark = vec![false; self.order()];
        let mut out = Vec::with_capacity(s.len());
        let mut shift = 0;
        loop {
            let mut fresh = false;
            for &x in s.iter() {
                let y = self.add(x, shift);
                if !mark[y] {
                    mark[y] = true;
                    out.push(y);
                    fresh = true;
                }
            }
            if !fresh {
                break;
            }
            shift = self.add(shift, g);
        }
        out.sort_unstable();
        Subgroup::from_sorted_unchecked(out)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens: Vec<usize> = a.iter().copied().collect();
        gens.extend(b.iter().copied());
        self.generated_subgroup(&gens)
    }

    /// `rad(X) = {g : g + X = X}`, the largest subgroup whose cosets tile `X`.
    pub fn subset_radical(&self, x: &Subset) -> Result<Subgroup> {
        let Some(&x0) = x.as_slice().first() else {
            return Err(Error::invalid("the radical of the empty set is undefined"));
        };
        let mut member = vec![false; self.order()];
        for &y in x.iter() {
            member[y] = true;
        }
        let mut rad: Vec<usize> = x
            .iter()
            .map(|&y| self.sub(y, x0))
            .filter(|&g| x.iter().all(|&y| member[self.add(g, y)]))
            .collect();
        rad.sort_unstable();
        Ok(Subgroup::from_sorted_unchecked(rad))
    }

    /// `{g : p·g = 0}`.
    pub fn torsion(&self, p: usize) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.elements().filter(|&g| self.scale(p, g) == 0).collect())
    }

    /// The unique Sylow `p`-subgroup: all elements of `p`-power order.
    pub fn sylow_subgroup(&self, p: usize) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        Ok(Subgroup::from_sorted_unchecked(
            self.elements()
                .filter(|&g| crate::arith::prime_power_base(self.order_of(g)).map_or(g == 0, |q| q == p))
                .collect(),
        ))
    }

    /// The product of the Sylow subgroups for all primes other than `p`.
    pub fn hall_complement(&self, p: usize) -> Subgroup {
        Subgroup::from_sorted_unchecked(self.elements().filter(|&g| !self.order_of(g).is_multiple_of(p)).collect())
    }

    /// Every subgroup exactly once, sorted by order and then by element list.
    pub fn all_subgroups(&self) -> Result<Arc<Vec<Subgroup>>> {
        check_cap("group for subgroup enumeration", self.order(), limits().group_cap)?;
        static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Arc<Vec<Subgroup>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(hit) = cache.lock().ok().and_then(|c| c.get(self.factors()).cloned()) {
            return Ok(hit);
        }
        let result = Arc::new(self.compute_subgroups());
        if let Ok(mut c) = cache.lock() {
            c.insert(self.factors().to_vec(), result.clone());
        }
        Ok(result)
    }

    fn compute_subgroups(&self) -> Vec<Subgroup> {
        let mut cyclic: Vec<(usize, Subgroup)> = Vec::new();
        let mut seen: HashSet<Subgroup> = HashSet::new();
        for g in self.elements() {
            let c = self.generated_subgroup(&[g]);
            if seen.insert(c.clone()) {
                cyclic.push((g, c));
            }
        }
        let mut all: Vec<Subgroup> = cyclic.iter().map(|(_, c)| c.clone()).collect();
        let mut i = 0;
        while i < all.len() {
            let s = all[i].clone();
            for (g, c) in &cyclic {
                if c.is_subset(&s) {
                    continue;
                }
                let j = self.join_element(&s, *g);
                if seen.insert(j.clone()) {
                    all.push(j);
                }
            }
            i += 1;
        }
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }
}

impl GroupData {
    fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut r = vec![0; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            r[i] = x % self.factors[i];
            x /= self.factors[i];
        }
        r
    }

    fn encode(&self, residues: &[usize]) -> usize {
        residues
            .iter()
            .zip(&self.factors)
            .zip(&self.strides)
            .map(|((&r, &d), &s)| (r % d) * s)
            .sum()
    }

    fn add_slow(&self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.decode(a), self.decode(b));
        let r: Vec<usize> = ra
            .iter()
            .zip(&rb)
            .zip(&self.factors)
            .map(|((x, y), d)| (x + y) % d)
            .collect();
        self.encode(&r)
    }

    fn neg_slow(&self, a: usize) -> usize {
        let r: Vec<usize> = self
            .decode(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| (d - x) % d)
            .collect();
        self.encode(&r)
    }
}

/// One representative of every isomorphism class of abelian groups of order
/// `n`, in invariant-factor form (each factor divides the next).
pub fn abelian_groups_of_order(n: usize) -> Vec<AbelianGroup> {
    fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    if n == 0 {
        return Vec::new();
    }
    // per prime: list of descending exponent partitions
    let mut shapes: Vec<Vec<usize>> = vec![vec![]];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for shape in &shapes {
            for part in partitions(e, e) {
                let len = shape.len().max(part.len());
                let mut combined = vec![1usize; len];
                for (i, v) in shape.iter().enumerate() {
                    combined[i] *= v;
                }
                for (i, &k) in part.iter().enumerate() {
                    combined[i] *= p.pow(k);
                }
                next.push(combined);
            }
        }
        shapes = next;
    }
    let mut groups: Vec<AbelianGroup> = shapes
        .into_iter()
        .map(|mut s| {
            s.sort_unstable();
            AbelianGroup::new(&s).expect("positive factors")
        })
        .collect();
    groups.sort_by(|a, b| {
        a.factors()
            .len()
            .cmp(&b.factors().len())
            .then_with(|| a.factors().cmp(b.factors()))
    });
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(v: &[usize]) -> Subset {
        Subset::from(v.to_vec())
    }

    #[test]
    fn make_group_examples() {
        let g = AbelianGroup::new(&[4]).unwrap();
        assert_eq!((g.order(), g.exponent()), (4, 4));
        let g = AbelianGroup::new(&[2, 4]).unwrap();
        assert_eq!((g.order(), g.exponent()), (8, 4));
        let g = AbelianGroup::new(&[]).unwrap();
        assert_eq!((g.order(), g.exponent()), (1, 1));
        assert!(matches!(AbelianGroup::new(&[3, 0]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn encode_decode_roundtrip() {
        let g = AbelianGroup::new(&[2, 3, 4]).unwrap();
        for x in g.elements() {
            assert_eq!(g.encode(&g.decode(x)), x);
        }
        assert_eq!(g.decode(0), vec![0, 0, 0]);
        let z22 = AbelianGroup::new(&[2, 2]).unwrap();
        assert_eq!(z22.decode(2), vec![1, 0]);
    }

    #[test]
    fn generated_subgroup_examples() {
        let z8 = AbelianGroup::cyclic(8);
        assert_eq!(z8.generated_subgroup(&[2]).as_slice(), &[0, 2, 4, 6]);
        assert_eq!(z8.generated_subgroup(&[]).as_slice(), &[0]);
        let v = AbelianGroup::new(&[2, 2]).unwrap();
        let a = v.encode(&[1, 0]);
        let b = v.encode(&[0, 1]);
        assert_eq!(v.generated_subgroup(&[a, b]), v.whole());
    }

    #[test]
    fn radical_examples() {
        let z8 = AbelianGroup::cyclic(8);
        assert_eq!(z8.subset_radical(&z8.whole()).unwrap(), z8.whole());
        assert_eq!(z8.subset_radical(&subset(&[1, 3, 5, 7])).unwrap().as_slice(), &[0, 2, 4, 6]);
        let z5 = AbelianGroup::cyclic(5);
        // brute force: g + {1,2} = {1,2} only for g = 0
        let brute: Vec<usize> = z5
            .elements()
            .filter(|&g| z5.translate(g, &subset(&[1, 2])) == subset(&[1, 2]))
            .collect();
        assert_eq!(brute, vec![0]);
        assert_eq!(z5.subset_radical(&subset(&[1, 2])).unwrap().as_slice(), &brute[..]);
        assert!(z5.subset_radical(&Subset::empty()).is_err());
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(AbelianGroup::cyclic(4).all_subgroups().unwrap().len(), 3);
        assert_eq!(AbelianGroup::new(&[2, 2]).unwrap().all_subgroups().unwrap().len(), 5);
        assert_eq!(AbelianGroup::cyclic(6).all_subgroups().unwrap().len(), 4);
        // Z_2^4 has 1 + 15 + 35 + 15 + 1 subgroups
        assert_eq!(AbelianGroup::new(&[2, 2, 2, 2]).unwrap().all_subgroups().unwrap().len(), 67);
        let subs = AbelianGroup::cyclic(12).all_subgroups().unwrap();
        let orders: Vec<usize> = subs.iter().map(|s| s.len()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn subgroup_cap() {
        let big = AbelianGroup::cyclic(65);
        assert!(matches!(big.all_subgroups(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn sylow_examples() {
        let z12 = AbelianGroup::cyclic(12);
        assert_eq!(z12.sylow_subgroup(2).unwrap().as_slice(), &[0, 3, 6, 9]);
        assert_eq!(z12.sylow_subgroup(3).unwrap().as_slice(), &[0, 4, 8]);
        assert_eq!(z12.sylow_subgroup(5).unwrap().as_slice(), &[0]);
        assert!(z12.sylow_subgroup(4).is_err());
    }

    #[test]
    fn canonical_forms() {
        let a = AbelianGroup::new(&[2, 6]).unwrap();
        let b = AbelianGroup::new(&[3, 2, 2]).unwrap();
        assert_eq!(a.canonical_form(), vec![2, 2, 3]);
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&AbelianGroup::cyclic(12)));
    }

    #[test]
    fn groups_of_order() {
        let f = |n| -> Vec<Vec<usize>> {
            abelian_groups_of_order(n).iter().map(|g| g.factors().to_vec()).collect()
        };
        assert_eq!(f(12), vec![vec![12], vec![2, 6]]);
        assert_eq!(f(16).len(), 5);
        assert_eq!(f(1), vec![Vec::<usize>::new()]);
        assert_eq!(f(8), vec![vec![8], vec![2, 4], vec![2, 2, 2]]);
    }
}
