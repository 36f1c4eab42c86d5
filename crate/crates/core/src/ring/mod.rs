//! Finite commutative rings with identity, stored as multiplication tables
//! over an abelian additive group.

mod iso;
mod local;
mod poly;

use std::fmt;

pub use iso::{find_ring_isomorphism, ring_isomorphic, units_conjugate};
pub use local::{
    enumerate_local_pairs, is_local_pair, local_pair_from_ring, ring_from_local_pair, LocalPair, LocalPairCensus,
};

use crate::arith::{factorize, is_prime, mod_inverse};
use crate::group::{AbelianGroup, AutSubgroup, Endomorphism, Subgroup, Subset};
use crate::sring::SRing;
use crate::{Error, Result};

/// A finite commutative ring with identity.
#[derive(Clone)]
pub struct CommRing {
    additive: AbelianGroup,
    mul: Vec<usize>,
    one: usize,
    label: String,
}

impl PartialEq for CommRing {
    fn eq(&self, other: &Self) -> bool {
        self.additive == other.additive && self.one == other.one && self.mul == other.mul
    }
}

impl Eq for CommRing {}

impl fmt::Debug for CommRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CommRing({}, on {})", self.label, self.additive)
    }
}

impl fmt::Display for CommRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// `Z_n`.
pub fn make_zn(n: usize) -> Result<CommRing> {
    if n == 0 {
        return Err(Error::invalid("Z_n needs n >= 1"));
    }
    let g = AbelianGroup::cyclic(n);
    let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
    Ok(CommRing {
        additive: g,
        mul,
        one: 1 % n,
        label: format!("Z_{n}"),
    })
}

/// `GF(p^k)` built from the least monic irreducible polynomial of degree `k`,
/// where polynomials are ordered by their coefficient vectors read as base-`p`
/// numbers. The element `Σ c_i x^i` has index `Σ c_i p^i`.
pub fn make_gf(p: usize, k: usize) -> Result<CommRing> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::invalid("field degree must be at least 1"));
    }
    let n = p.checked_pow(k as u32).filter(|&n| n <= 1 << 16).ok_or_else(|| Error::invalid("field too large"))?;
    let modulus = poly::least_irreducible(p, k).ok_or_else(|| Error::internal("no irreducible polynomial found"))?;
    let g = AbelianGroup::new(&vec![p; k])?;
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in a..n {
            let c = poly::mul_mod(&poly::digits(a, p, k), &poly::digits(b, p, k), &modulus, p);
            let idx = poly::from_digits(&c, p);
            mul[a * n + b] = idx;
            mul[b * n + a] = idx;
        }
    }
    let label = if k == 1 { format!("GF({p})") } else { format!("GF({n})") };
    Ok(CommRing {
        additive: g,
        mul,
        one: 1,
        label,
    })
}

/// `Z_p[t]/(t²)`. The element `a + b·t` has index `b·p + a`.
pub fn make_dual_numbers(p: usize) -> Result<CommRing> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    let g = AbelianGroup::new(&[p, p])?;
    let n = p * p;
    let mut mul = vec![0; n * n];
    for x in 0..n {
        let (b, a) = (x / p, x % p);
        for y in 0..n {
            let (d, c) = (y / p, y % p);
            mul[x * n + y] = ((a * d + b * c) % p) * p + (a * c) % p;
        }
    }
    Ok(CommRing {
        additive: g,
        mul,
        one: 1,
        label: format!("Z_{p}[t]/(t^2)"),
    })
}

/// `R1 × R2`; the pair `(x, y)` has index `x·|R2| + y`.
pub fn make_product(r1: &CommRing, r2: &CommRing) -> Result<CommRing> {
    let factors: Vec<usize> = r1.additive.factors().iter().chain(r2.additive.factors()).copied().collect();
    let g = AbelianGroup::new(&factors)?;
    let (n1, n2) = (r1.order(), r2.order());
    let n = n1 * n2;
    let mut mul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            mul[x * n + y] = r1.mul(x / n2, y / n2) * n2 + r2.mul(x % n2, y % n2);
        }
    }
    Ok(CommRing {
        additive: g,
        mul,
        one: r1.one * n2 + r2.one,
        label: format!("{} x {}", r1.label, r2.label),
    })
}

/// Validates an explicit multiplication table (row-major over element
/// indices) against every ring axiom.
pub fn ring_from_tables(additive: &AbelianGroup, mul: Vec<usize>, one: usize) -> Result<CommRing> {
    let n = additive.order();
    if mul.len() != n * n {
        return Err(Error::invalid(format!("multiplication table has {} entries, expected {}", mul.len(), n * n)));
    }
    if one >= n {
        return Err(Error::invalid(format!("identity {one} is not an element")));
    }
    if let Some(&bad) = mul.iter().find(|&&v| v >= n) {
        return Err(Error::invalid(format!("table entry {bad} is not an element")));
    }
    let m = |a: usize, b: usize| mul[a * n + b];
    for a in 0..n {
        if m(one, a) != a {
            return Err(Error::RingAxiom {
                axiom: "identity",
                witness: (one, a, a),
            });
        }
        for b in 0..n {
            if m(a, b) != m(b, a) {
                return Err(Error::RingAxiom {
                    axiom: "commutativity",
                    witness: (a, b, b),
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = m(a, b);
            for c in 0..n {
                if m(ab, c) != m(a, m(b, c)) {
                    return Err(Error::RingAxiom {
                        axiom: "associativity",
                        witness: (a, b, c),
                    });
                }
                if m(a, additive.add(b, c)) != additive.add(ab, m(a, c)) {
                    return Err(Error::RingAxiom {
                        axiom: "distributivity",
                        witness: (a, b, c),
                    });
                }
            }
        }
    }
    Ok(CommRing {
        additive: additive.clone(),
        mul,
        one,
        label: "ring".to_string(),
    })
}

/// The invertible elements with their inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    units: Subset,
    inverses: Vec<usize>,
}

impl UnitGroup {
    pub fn units(&self) -> &Subset {
        &self.units
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    pub fn inverse_of(&self, u: usize) -> Option<usize> {
        self.units.as_slice().binary_search(&u).ok().map(|i| self.inverses[i])
    }
}

/// A primary component: the subring carried by one Sylow subgroup, with
/// `embedding[i]` the element of the parent ring for component element `i`.
#[derive(Clone, Debug)]
pub struct PrimaryComponent {
    pub prime: usize,
    pub ring: CommRing,
    pub embedding: Vec<usize>,
}

impl CommRing {
    pub fn additive(&self) -> &AbelianGroup {
        &self.additive
    }

    pub fn order(&self) -> usize {
        self.additive.order()
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.additive.add(a, b)
    }

    /// Multiplication by `r` as an additive endomorphism.
    pub fn multiplication_map(&self, r: usize) -> Endomorphism {
        Endomorphism::from_table_unchecked((0..self.order()).map(|x| self.mul(r, x)).collect())
    }

    pub fn units(&self) -> UnitGroup {
        let n = self.order();
        let mut units = Vec::new();
        let mut inverses = Vec::new();
        for u in 0..n {
            if let Some(v) = (0..n).find(|&v| self.mul(u, v) == self.one) {
                units.push(u);
                inverses.push(v);
            }
        }
        UnitGroup {
            units: Subset::from(units),
            inverses,
        }
    }

    /// `K_R`: the multiplications by units, as automorphisms of `R^+`.
    pub fn k_r(&self) -> AutSubgroup {
        let maps = self.units().units.iter().map(|&u| self.multiplication_map(u)).collect();
        AutSubgroup::from_closed_elements(self.order(), maps)
    }

    /// The nilpotent elements, which form the radical of a finite
    /// commutative ring.
    pub fn radical(&self) -> Result<Subgroup> {
        let n = self.order();
        let nil: Vec<usize> = (0..n)
            .filter(|&x| {
                let mut y = x;
                for _ in 0..=n {
                    if y == 0 {
                        return true;
                    }
                    y = self.mul(y, x);
                }
                y == 0
            })
            .collect();
        let set = Subset::from(nil);
        let ideal = set.iter().all(|&a| (0..n).all(|r| set.contains(self.mul(a, r))));
        match Subgroup::from_subset(&self.additive, set) {
            Some(h) if ideal => Ok(h),
            _ => Err(Error::internal("nilpotent elements do not form an ideal")),
        }
    }

    /// True when the non-units are closed under addition. The zero ring is
    /// not local.
    pub fn is_local(&self) -> bool {
        if self.order() == 1 {
            return false;
        }
        let units = self.units();
        let non_units: Vec<usize> = (0..self.order()).filter(|x| !units.units.contains(*x)).collect();
        non_units
            .iter()
            .all(|&a| non_units.iter().all(|&b| !units.units.contains(self.add(a, b))))
    }

    pub fn is_field(&self) -> bool {
        self.order() > 1 && self.units().len() == self.order() - 1
    }

    /// Whether the units generate `R^+` as an additive group.
    pub fn generated_by_units(&self) -> bool {
        let units = self.units();
        self.additive.generated_subgroup(units.units.as_slice()).order() == self.order()
    }

    /// The idempotent `e_p`: the component of `1` in the Sylow `p`-subgroup.
    pub fn primary_idempotent(&self, p: usize) -> usize {
        let n = self.order();
        let q = crate::arith::p_part(n, p);
        let rest = n / q;
        // m ≡ 1 (mod q), m ≡ 0 (mod n/q)
        let m = if q == 1 { 0 } else { rest * mod_inverse(rest % q, q).unwrap_or(0) % n };
        self.additive.scale(m, self.one)
    }

    /// `R = ∏_p R_p`, one component per prime divisor of `|R|`, each on the
    /// Sylow subgroup of `R^+` with identity `e_p`. The decomposition is
    /// checked to be a ring isomorphism.
    pub fn primary_components(&self) -> Result<Vec<PrimaryComponent>> {
        let n = self.order();
        let mut out = Vec::new();
        for (p, _) in factorize(n) {
            let g = &self.additive;
            let sub_factors: Vec<usize> = g.factors().iter().map(|&d| crate::arith::p_part(d, p)).collect();
            let keep: Vec<usize> = (0..sub_factors.len()).filter(|&i| sub_factors[i] > 1).collect();
            let comp = AbelianGroup::new(&keep.iter().map(|&i| sub_factors[i]).collect::<Vec<_>>())?;
            let embedding: Vec<usize> = comp
                .elements()
                .map(|x| {
                    let r = comp.decode(x);
                    let mut full = vec![0; g.factors().len()];
                    for (j, &i) in keep.iter().enumerate() {
                        full[i] = r[j] * (g.factors()[i] / sub_factors[i]);
                    }
                    g.encode(&full)
                })
                .collect();
            let mut back = vec![usize::MAX; n];
            for (i, &x) in embedding.iter().enumerate() {
                back[x] = i;
            }
            let m = comp.order();
            let mut mul = vec![0; m * m];
            for a in 0..m {
                for b in 0..m {
                    let c = back[self.mul(embedding[a], embedding[b])];
                    if c == usize::MAX {
                        return Err(Error::internal("Sylow subgroup not closed under multiplication"));
                    }
                    mul[a * m + b] = c;
                }
            }
            let one = back[self.primary_idempotent(p)];
            let ring = ring_from_tables(&comp, mul, one)
                .map_err(|e| Error::internal(format!("primary component for {p} is not a ring: {e}")))?
                .with_label(format!("{}_({p})", self.label));
            out.push(PrimaryComponent {
                prime: p,
                ring,
                embedding,
            });
        }
        // x ↦ (e_p·x)_p is multiplicative and additive, with x = Σ e_p·x.
        let idem: Vec<usize> = out.iter().map(|c| self.primary_idempotent(c.prime)).collect();
        for a in 0..n {
            let parts: Vec<usize> = idem.iter().map(|&e| self.mul(e, a)).collect();
            if parts.iter().fold(0, |s, &x| self.add(s, x)) != a {
                return Err(Error::internal("element is not the sum of its primary parts"));
            }
            for b in 0..n {
                for (&e, &pa) in idem.iter().zip(&parts) {
                    if self.mul(e, self.mul(a, b)) != self.mul(pa, self.mul(e, b)) {
                        return Err(Error::internal("primary projection is not multiplicative"));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// The S-ring whose basic sets are the orbits of `K ≤ K_R` on `R`.
pub fn cyclotomic_sring(r: &CommRing, k: &AutSubgroup) -> Result<SRing> {
    let kr = r.k_r();
    if k.degree() != r.order() || !k.is_subgroup_of(&kr) {
        return Err(Error::precondition("K is not a subgroup of the unit multiplications K_R"));
    }
    SRing::from_orbits(r.additive(), k)
}

/// The group of unit multiplications fixing every basic set, when its
/// orbits are exactly the basic sets of `a`.
pub fn is_cyclotomic(a: &SRing, r: &CommRing) -> Result<Option<AutSubgroup>> {
    if a.group() != r.additive() {
        return Err(Error::invalid("the S-ring and the ring live on different groups"));
    }
    let maps = r
        .units()
        .units
        .iter()
        .map(|&u| r.multiplication_map(u))
        .filter(|m| a.basic_sets().iter().all(|x| m.image_of(x) == *x))
        .collect();
    let k = AutSubgroup::from_closed_elements(r.order(), maps);
    Ok((k.orbits() == a.basic_sets()).then_some(k))
}

/// `K_R`-primitivity of an S-ring over the ring `R`.
pub fn is_quasiprimitive(a: &SRing, r: &CommRing) -> Result<bool> {
    if a.group() != r.additive() {
        return Err(Error::invalid("the S-ring and the ring live on different groups"));
    }
    let kr = r.k_r();
    if !a.is_k_invariant(&kr) {
        return Err(Error::NotAnSRingOverRing);
    }
    a.is_k_primitive(&kr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from(v.to_vec())
    }

    fn validated(r: &CommRing) -> CommRing {
        ring_from_tables(r.additive(), r.mul_table().to_vec(), r.one()).unwrap()
    }

    #[test]
    fn constructors_satisfy_axioms() {
        for r in [
            make_zn(1).unwrap(),
            make_zn(12).unwrap(),
            make_gf(2, 2).unwrap(),
            make_gf(2, 3).unwrap(),
            make_gf(3, 2).unwrap(),
            make_gf(7, 1).unwrap(),
            make_dual_numbers(2).unwrap(),
            make_dual_numbers(3).unwrap(),
            make_product(&make_zn(4).unwrap(), &make_zn(3).unwrap()).unwrap(),
        ] {
            assert_eq!(validated(&r), r);
        }
        assert_eq!(make_zn(12).unwrap().one(), 1);
        assert_eq!(make_product(&make_zn(4).unwrap(), &make_zn(3).unwrap()).unwrap().order(), 12);
    }

    #[test]
    fn gf4_uses_x2_x_1() {
        let f = make_gf(2, 2).unwrap();
        // x = 2, x² = x + 1 = 3
        assert_eq!(f.mul(2, 2), 3);
        assert!(f.is_field());
        // GF(8) from x³+x+1: x·x² = x³ = x + 1
        let f8 = make_gf(2, 3).unwrap();
        assert_eq!(f8.mul(2, 4), 3);
        // GF(9) from x²+1: x² = -1 = 2
        let f9 = make_gf(3, 2).unwrap();
        assert_eq!(f9.mul(3, 3), 2);
        assert!(f8.is_field() && f9.is_field());
    }

    #[test]
    fn rejects_bad_tables() {
        let g = AbelianGroup::cyclic(2);
        let err = ring_from_tables(&g, vec![0, 1, 1, 0], 1).unwrap_err();
        assert!(matches!(err, Error::RingAxiom { .. }));
        assert!(ring_from_tables(&g, vec![0, 0, 0], 1).is_err());
        let err = ring_from_tables(&g, vec![0, 0, 1, 1], 1).unwrap_err();
        assert!(matches!(err, Error::RingAxiom { axiom: "identity", .. } | Error::RingAxiom { axiom: "commutativity", .. }));
    }

    #[test]
    fn unit_examples() {
        assert_eq!(make_zn(12).unwrap().units().units(), &s(&[1, 5, 7, 11]));
        assert_eq!(make_gf(2, 2).unwrap().units().len(), 3);
        // 1 and 1 + t
        assert_eq!(make_dual_numbers(2).unwrap().units().units(), &s(&[1, 3]));
        let z12 = make_zn(12).unwrap().units();
        assert_eq!(z12.inverse_of(5), Some(5));
        assert_eq!(z12.inverse_of(2), None);
    }

    #[test]
    fn k_r_examples() {
        assert_eq!(make_zn(12).unwrap().k_r().order(), 4);
        let f4 = make_gf(2, 2).unwrap().k_r();
        assert_eq!(f4.order(), 3);
        assert_eq!(f4.orbit(1), s(&[1, 2, 3]));
        let z2 = make_zn(2).unwrap();
        assert!(make_product(&z2, &z2).unwrap().k_r().is_trivial());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(make_zn(4).unwrap().radical().unwrap().as_slice(), &[0, 2]);
        assert_eq!(make_gf(3, 2).unwrap().radical().unwrap().as_slice(), &[0]);
        assert_eq!(make_zn(6).unwrap().radical().unwrap().as_slice(), &[0]);
    }

    #[test]
    fn locality_examples() {
        assert!(make_zn(4).unwrap().is_local());
        assert!(!make_zn(6).unwrap().is_local());
        assert!(make_gf(2, 2).unwrap().is_local());
        assert!(!make_zn(1).unwrap().is_local());
    }

    #[test]
    fn primary_component_examples() {
        let z12 = make_zn(12).unwrap();
        let comps = z12.primary_components().unwrap();
        assert_eq!(comps.len(), 2);
        let mut two = comps[0].embedding.clone();
        two.sort_unstable();
        assert_eq!(two, vec![0, 3, 6, 9]);
        assert_eq!(comps[0].embedding[comps[0].ring.one()], 9);
        let mut three = comps[1].embedding.clone();
        three.sort_unstable();
        assert_eq!(three, vec![0, 4, 8]);
        assert_eq!(comps[1].embedding[comps[1].ring.one()], 4);
        let f8 = make_gf(2, 3).unwrap();
        let c = f8.primary_components().unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].ring.mul_table(), f8.mul_table());
        let orders: Vec<usize> = make_zn(6).unwrap().primary_components().unwrap().iter().map(|c| c.ring.order()).collect();
        assert_eq!(orders, vec![2, 3]);
    }

    #[test]
    fn generated_by_units_examples() {
        assert!(make_zn(12).unwrap().generated_by_units());
        assert!(make_gf(2, 2).unwrap().generated_by_units());
        let z2 = make_zn(2).unwrap();
        assert!(!make_product(&z2, &z2).unwrap().generated_by_units());
    }

    #[test]
    fn cyclotomic_examples() {
        let f5 = make_gf(5, 1).unwrap();
        let kr = f5.k_r();
        let pm = AutSubgroup::from_closed_elements(5, vec![f5.multiplication_map(1), f5.multiplication_map(4)]);
        let a = cyclotomic_sring(&f5, &pm).unwrap();
        assert_eq!(a.basic_sets(), &[s(&[0]), s(&[1, 4]), s(&[2, 3])]);
        assert_eq!(cyclotomic_sring(&f5, &kr).unwrap().rank(), 2);
        assert_eq!(cyclotomic_sring(&f5, &AutSubgroup::trivial(5)).unwrap().rank(), 5);
        let witness = is_cyclotomic(&SRing::rank2(f5.additive()), &f5).unwrap().unwrap();
        assert_eq!(witness, kr);
        let z6 = make_zn(6).unwrap();
        assert!(is_cyclotomic(&SRing::rank2(z6.additive()), &z6).unwrap().is_none());
        let z4 = make_zn(4).unwrap();
        let aut_not_units = AutSubgroup::generate(4, vec![Endomorphism::scalar(z4.additive(), 3)]).unwrap();
        assert!(cyclotomic_sring(&z4, &aut_not_units).is_ok());
        let v = make_product(&make_zn(2).unwrap(), &make_zn(2).unwrap()).unwrap();
        let swap = Endomorphism::from_table(v.additive(), vec![0, 2, 1, 3]).unwrap();
        let k = AutSubgroup::generate(4, vec![swap]).unwrap();
        assert!(matches!(cyclotomic_sring(&v, &k), Err(Error::Precondition(_))));
    }

    #[test]
    fn quasiprimitive_examples() {
        let z8 = make_zn(8).unwrap();
        let kr = z8.k_r();
        let cyc = cyclotomic_sring(&z8, &kr).unwrap();
        assert!(!is_quasiprimitive(&cyc, &z8).unwrap());
        assert!(is_quasiprimitive(&SRing::rank2(z8.additive()), &z8).unwrap());
        let f4 = make_gf(2, 2).unwrap();
        let not_over_f4 = SRing::new(f4.additive(), vec![s(&[0]), s(&[1]), s(&[2, 3])]).unwrap();
        assert_eq!(is_quasiprimitive(&not_over_f4, &f4), Err(Error::NotAnSRingOverRing));
        let z5 = make_zn(5).unwrap();
        let a = SRing::discrete(z5.additive());
        assert!(is_quasiprimitive(&a, &z5).unwrap());
    }
}
