use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;
use std::sync::{Arc, Mutex, OnceLock};

use super::{AbelianGroup, Subset};
use crate::arith::gcd;
use crate::limits::{check_cap, limits};
use crate::{Error, Result};

/// A group homomorphism stored as its table of images, indexed by element.
///
/// Automorphisms, isomorphisms between two presentations of one group and
/// general endomorphisms all share this representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endomorphism {
    images: Vec<usize>,
}

impl Endomorphism {
    pub fn identity(n: usize) -> Self {
        Endomorphism { images: (0..n).collect() }
    }

    pub fn zero(n: usize) -> Self {
        Endomorphism { images: vec![0; n] }
    }

    /// Checks that `images` is an additive map `g -> g`.
    pub fn from_table(g: &AbelianGroup, images: Vec<usize>) -> Result<Self> {
        Self::hom_from_table(g, g, images)
    }

    /// Checks that `images` is an additive map `src -> dst`.
    pub fn hom_from_table(src: &AbelianGroup, dst: &AbelianGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != src.order() {
            return Err(Error::invalid(format!(
                "table has {} entries, expected {}",
                images.len(),
                src.order()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= dst.order()) {
            return Err(Error::invalid(format!("image {bad} is not an element of {dst}")));
        }
        for a in src.elements() {
            for b in src.elements() {
                if images[src.add(a, b)] != dst.add(images[a], images[b]) {
                    return Err(Error::invalid(format!("table is not additive at ({a}, {b})")));
                }
            }
        }
        Ok(Endomorphism { images })
    }

    /// The homomorphism sending the `i`-th factor generator of `src` to `images[i]`.
    pub fn from_generator_images(src: &AbelianGroup, dst: &AbelianGroup, images: &[usize]) -> Result<Self> {
        if images.len() != src.factors().len() {
            return Err(Error::invalid("need one image per cyclic factor"));
        }
        for (i, (&y, &d)) in images.iter().zip(src.factors()).enumerate() {
            if y >= dst.order() || dst.scale(d, y) != 0 {
                return Err(Error::invalid(format!(
                    "image {y} of generator {i} does not have order dividing {d}"
                )));
            }
        }
        Ok(Self::from_images_of_generators(src, dst, images))
    }

    fn from_images_of_generators(src: &AbelianGroup, dst: &AbelianGroup, images: &[usize]) -> Self {
        let table = src
            .elements()
            .map(|x| {
                src.decode(x)
                    .iter()
                    .zip(images)
                    .fold(0, |acc, (&r, &y)| dst.add(acc, dst.scale(r, y)))
            })
            .collect();
        Endomorphism { images: table }
    }

    pub(crate) fn from_table_unchecked(images: Vec<usize>) -> Self {
        Endomorphism { images }
    }

    /// `x ↦ m·x`.
    pub fn scalar(g: &AbelianGroup, m: usize) -> Self {
        Endomorphism {
            images: g.elements().map(|x| g.scale(m, x)).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &Endomorphism) -> Endomorphism {
        Endomorphism {
            images: inner.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    /// Pointwise sum in `g`.
    pub fn add(&self, g: &AbelianGroup, other: &Endomorphism) -> Endomorphism {
        Endomorphism {
            images: self.images.iter().zip(&other.images).map(|(&a, &b)| g.add(a, b)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        for &y in &self.images {
            if y >= seen.len() || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    pub fn inverse(&self) -> Option<Endomorphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Some(Endomorphism { images: inv })
    }

    pub fn image_of(&self, s: &Subset) -> Subset {
        s.iter().map(|&x| self.images[x]).collect()
    }

    pub fn commutes_with(&self, other: &Endomorphism) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| other.images[a] == self.images[b])
    }

    /// Order as a permutation; only meaningful for bijections.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut ord = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            ord = crate::arith::lcm(ord, len);
        }
        ord
    }
}

/// A subgroup of `Aut(G)`, stored as its full sorted element list together
/// with a generating set.
#[derive(Clone, Debug)]
pub struct AutSubgroup {
    degree: usize,
    elements: Vec<Endomorphism>,
    generators: Vec<Endomorphism>,
}

impl PartialEq for AutSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for AutSubgroup {}

impl std::hash::Hash for AutSubgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

impl AutSubgroup {
    pub fn trivial(degree: usize) -> Self {
        let id = Endomorphism::identity(degree);
        AutSubgroup {
            degree,
            elements: vec![id],
            generators: Vec::new(),
        }
    }

    /// The closure of `generators` under composition.
    pub fn generate(degree: usize, generators: Vec<Endomorphism>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree || !g.is_bijective() {
                return Err(Error::invalid("automorphism generators must be bijective tables of the group order"));
            }
        }
        let cap = limits().aut_cap;
        let id = Endomorphism::identity(degree);
        let mut seen: HashSet<Endomorphism> = HashSet::new();
        seen.insert(id.clone());
        let mut list = vec![id];
        let mut i = 0;
        while i < list.len() {
            for g in &generators {
                let h = g.compose(&list[i]);
                if !seen.contains(&h) {
                    seen.insert(h.clone());
                    list.push(h);
                    check_cap("automorphism subgroup", list.len(), cap)?;
                }
            }
            i += 1;
        }
        list.sort_unstable();
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(AutSubgroup {
            degree,
            elements: list,
            generators,
        })
    }

    /// Builds from a list already closed under composition; a generating set
    /// is extracted greedily.
    pub(crate) fn from_closed_elements(degree: usize, mut elements: Vec<Endomorphism>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let mut generators = Vec::new();
        let mut span: HashSet<Endomorphism> = HashSet::new();
        span.insert(Endomorphism::identity(degree));
        for e in &elements {
            if span.contains(e) {
                continue;
            }
            generators.push(e.clone());
            let mut list: Vec<Endomorphism> = span.iter().cloned().collect();
            let mut i = 0;
            while i < list.len() {
                for g in &generators {
                    let h = g.compose(&list[i]);
                    if span.insert(h.clone()) {
                        list.push(h);
                    }
                }
                i += 1;
            }
        }
        AutSubgroup {
            degree,
            elements,
            generators,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Endomorphism] {
        &self.elements
    }

    /// A generating set; empty for the trivial group.
    pub fn generators(&self) -> &[Endomorphism] {
        &self.generators
    }

    pub fn contains(&self, e: &Endomorphism) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &AutSubgroup) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Orbits on `0..degree`, sorted by minimal element.
    pub fn orbits(&self) -> Vec<Subset> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let orbit = self.orbit(x);
                for &y in orbit.iter() {
                    seen[y] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    pub fn orbit(&self, x: usize) -> Subset {
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut list = vec![x];
        let mut i = 0;
        while i < list.len() {
            for g in &self.generators {
                let y = g.apply(list[i]);
                if !seen[y] {
                    seen[y] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
        Subset::from(list)
    }

    /// True when every element maps `s` onto itself.
    pub fn stabilizes(&self, s: &Subset) -> bool {
        self.generators.iter().all(|g| g.image_of(s) == *s)
    }

    pub fn setwise_stabilizer(&self, s: &Subset) -> AutSubgroup {
        let elems = self.elements.iter().filter(|e| e.image_of(s) == *s).cloned().collect();
        AutSubgroup::from_closed_elements(self.degree, elems)
    }

    pub fn pointwise_stabilizer(&self, s: &Subset) -> AutSubgroup {
        let elems = self
            .elements
            .iter()
            .filter(|e| s.iter().all(|&x| e.apply(x) == x))
            .cloned()
            .collect();
        AutSubgroup::from_closed_elements(self.degree, elems)
    }

    /// `{σ k σ⁻¹ : k ∈ K}`.
    pub fn conjugate(&self, sigma: &Endomorphism) -> AutSubgroup {
        let inv = sigma.inverse().expect("conjugating element must be bijective");
        let conj = |k: &Endomorphism| sigma.compose(&k.compose(&inv));
        let mut elements: Vec<Endomorphism> = self.elements.iter().map(conj).collect();
        elements.sort_unstable();
        AutSubgroup {
            degree: self.degree,
            elements,
            generators: self.generators.iter().map(conj).collect(),
        }
    }

    /// Elements of `p`-power order. For an abelian group this is its Sylow
    /// `p`-subgroup.
    pub fn sylow(&self, p: usize) -> Result<AutSubgroup> {
        if !self.is_abelian() {
            return Err(Error::invalid("Sylow subgroup requested for a nonabelian automorphism group"));
        }
        let elems = self
            .elements
            .iter()
            .filter(|e| crate::arith::prime_power_base(e.order()).map_or(e.is_identity(), |q| q == p))
            .cloned()
            .collect();
        Ok(AutSubgroup::from_closed_elements(self.degree, elems))
    }

    /// Every subgroup, found as joins of cyclic subgroups; sorted by order
    /// and then by element list.
    pub fn all_subgroups(&self) -> Result<Vec<AutSubgroup>> {
        check_cap("automorphism group for subgroup lattice", self.order(), 5_000)?;
        let index: HashMap<&Endomorphism, usize> = self.elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let n = self.order();
        let closure = |gens: &[usize]| -> Vec<usize> {
            let mut mark = vec![false; n];
            let id = index[&Endomorphism::identity(self.degree)];
            mark[id] = true;
            let mut list = vec![id];
            let mut i = 0;
            while i < list.len() {
                for &g in gens {
                    let h = index[&self.elements[g].compose(&self.elements[list[i]])];
                    if !mark[h] {
                        mark[h] = true;
                        list.push(h);
                    }
                }
                i += 1;
            }
            list.sort_unstable();
            list
        };
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut cyclic: Vec<(usize, Vec<usize>)> = Vec::new();
        for g in 0..n {
            let c = closure(&[g]);
            if seen.insert(c.clone()) {
                cyclic.push((g, c));
            }
        }
        let mut all: Vec<(Vec<usize>, Vec<usize>)> = cyclic.iter().map(|(g, c)| (vec![*g], c.clone())).collect();
        let mut i = 0;
        while i < all.len() {
            let (gens, elems) = all[i].clone();
            for (g, c) in &cyclic {
                if c.iter().all(|x| elems.binary_search(x).is_ok()) {
                    continue;
                }
                let mut ng = gens.clone();
                ng.push(*g);
                let j = closure(&ng);
                if seen.insert(j.clone()) {
                    all.push((ng, j));
                }
            }
            i += 1;
        }
        let mut out: Vec<AutSubgroup> = all
            .into_iter()
            .map(|(gens, elems)| AutSubgroup {
                degree: self.degree,
                elements: elems.iter().map(|&i| self.elements[i].clone()).collect(),
                generators: gens
                    .iter()
                    .map(|&i| self.elements[i].clone())
                    .filter(|e| !e.is_identity())
                    .collect(),
            })
            .collect();
        for k in &mut out {
            k.elements.sort_unstable();
        }
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
        Ok(out)
    }
}

/// Visits every group isomorphism `src -> dst`. Returns `false` when the
/// visitor stopped early.
///
/// Images of the factor generators are chosen one at a time; a partial
/// choice survives only while the generated subgroup has the full size.
pub fn for_each_isomorphism<F>(src: &AbelianGroup, dst: &AbelianGroup, visit: F) -> bool
where
    F: FnMut(Endomorphism) -> ControlFlow<()>,
{
    for_each_isomorphism_filtered(src, dst, |_, _| true, visit)
}

/// As [`for_each_isomorphism`], restricted to maps sending the `i`-th factor
/// generator to some `y` with `allowed(i, y)`.
pub(crate) fn for_each_isomorphism_filtered<A, F>(src: &AbelianGroup, dst: &AbelianGroup, allowed: A, mut visit: F) -> bool
where
    A: Fn(usize, usize) -> bool,
    F: FnMut(Endomorphism) -> ControlFlow<()>,
{
    if src.canonical_form() != dst.canonical_form() {
        return true;
    }
    let factors = src.factors();
    let candidates: Vec<Vec<usize>> = factors
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            dst.elements()
                .filter(|&y| dst.order_of(y) == d && allowed(i, y))
                .collect()
        })
        .collect();
    let mut images = vec![0; factors.len()];
    let start = vec![0usize];
    struct Search<'a, F> {
        src: &'a AbelianGroup,
        dst: &'a AbelianGroup,
        candidates: &'a [Vec<usize>],
        visit: F,
    }
    impl<F: FnMut(Endomorphism) -> ControlFlow<()>> Search<'_, F> {
        fn go(&mut self, i: usize, images: &mut Vec<usize>, span: &[usize]) -> ControlFlow<()> {
            if i == images.len() {
                let e = Endomorphism::from_images_of_generators(self.src, self.dst, images);
                return (self.visit)(e);
            }
            let d = self.src.factors()[i];
            if d == 1 {
                images[i] = 0;
                return self.go(i + 1, images, span);
            }
            for &y in &self.candidates[i] {
                let mut mark = vec![false; self.dst.order()];
                for &s in span {
                    mark[s] = true;
                }
                let mut next = span.to_vec();
                let mut shift = y;
                let mut ok = true;
                for _ in 1..d {
                    for &s in span {
                        let t = self.dst.add(s, shift);
                        if mark[t] {
                            ok = false;
                            break;
                        }
                        mark[t] = true;
                        next.push(t);
                    }
                    if !ok {
                        break;
                    }
                    shift = self.dst.add(shift, y);
                }
                if !ok {
                    continue;
                }
                images[i] = y;
                self.go(i + 1, images, &next)?;
            }
            ControlFlow::Continue(())
        }
    }
    let mut search = Search {
        src,
        dst,
        candidates: &candidates,
        visit: &mut visit,
    };
    search.go(0, &mut images, &start).is_continue()
}

/// The full automorphism group, enumerated by generator images.
pub fn automorphism_group(g: &AbelianGroup) -> Result<AutSubgroup> {
    check_cap("group for automorphism enumeration", g.order(), limits().group_cap)?;
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Arc<AutSubgroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().ok().and_then(|c| c.get(g.factors()).cloned()) {
        return Ok((*hit).clone());
    }
    let cap = limits().aut_cap;
    let mut elements = Vec::new();
    let mut overflow = false;
    for_each_isomorphism(g, g, |e| {
        elements.push(e);
        if elements.len() > cap {
            overflow = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if overflow {
        return Err(Error::CapExceeded {
            what: "automorphism group",
            size: elements.len(),
            cap,
        });
    }
    let aut = AutSubgroup::from_closed_elements(g.order(), elements);
    if let Ok(mut c) = cache.lock() {
        c.insert(g.factors().to_vec(), Arc::new(aut.clone()));
    }
    Ok(aut)
}

/// `K_G`: the maps `x ↦ m·x` with `m` coprime to `|G|`.
pub fn multiplier_group(g: &AbelianGroup) -> AutSubgroup {
    let e = g.exponent().max(1);
    let maps: Vec<Endomorphism> = (1..=e)
        .filter(|&m| gcd(m, g.order()) == 1)
        .map(|m| Endomorphism::scalar(g, m))
        .collect();
    AutSubgroup::from_closed_elements(g.order(), maps)
}
