//! Exhaustive enumeration of S-rings.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;

use crate::group::{AbelianGroup, AutSubgroup, Subset};
use crate::limits::{check_cap, limits};
use crate::sring::SRing;
use crate::{Error, Result};

fn sort_canonically(v: &mut [SRing]) {
    v.sort_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| a.basic_sets().cmp(b.basic_sets())));
}

/// Partial state of the direct search: completed classes, the class of each
/// assigned element, and a color per element summarizing every product
/// coefficient seen so far. A future class must be monochromatic.
#[derive(Clone)]
struct State {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    color: Vec<u64>,
    unassigned: usize,
}

const FREE: usize = usize::MAX;

fn mix(color: u64, pair: (usize, usize), coeff: u32) -> u64 {
    let mut h = DefaultHasher::new();
    (color, pair, coeff).hash(&mut h);
    h.finish()
}

impl State {
    fn start(g: &AbelianGroup) -> State {
        let n = g.order();
        let mut class_of = vec![FREE; n];
        class_of[0] = 0;
        State {
            class_of,
            classes: vec![vec![0]],
            color: vec![0; n],
            unassigned: n - 1,
        }
    }

    /// Adds the classes in `new`, checks every product involving them, and
    /// refines the colors. Returns false on a closure violation.
    fn extend(&mut self, g: &AbelianGroup, new: &[Vec<usize>]) -> bool {
        let n = g.order();
        let first_new = self.classes.len();
        for c in new {
            for &x in c {
                self.class_of[x] = self.classes.len();
            }
            self.unassigned -= c.len();
            self.classes.push(c.clone());
        }
        let mut prod = vec![0u32; n];
        for i in first_new..self.classes.len() {
            for j in 0..self.classes.len() {
                if j >= first_new && j < i {
                    continue;
                }
                prod.iter_mut().for_each(|c| *c = 0);
                for &a in &self.classes[i] {
                    for &b in &self.classes[j] {
                        prod[g.add(a, b)] += 1;
                    }
                }
                for cls in &self.classes {
                    let v = prod[cls[0]];
                    if cls.iter().any(|&z| prod[z] != v) {
                        return false;
                    }
                }
                for z in 0..n {
                    if self.class_of[z] == FREE {
                        self.color[z] = mix(self.color[z], (i, j), prod[z]);
                    }
                }
            }
        }
        true
    }

    /// Candidate extensions: a class through the least free element, plus
    /// its negation when that is a different set.
    fn choices(&self, g: &AbelianGroup) -> Vec<Vec<Vec<usize>>> {
        let n = g.order();
        let u0 = (0..n).find(|&x| self.class_of[x] == FREE).expect("free element");
        let cands: Vec<usize> = (u0 + 1..n)
            .filter(|&x| self.class_of[x] == FREE && self.color[x] == self.color[u0])
            .collect();
        let mut out = Vec::new();
        let mut member = vec![false; n];
        for mask in 0u64..(1u64 << cands.len()) {
            let mut c = vec![u0];
            c.extend(cands.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &x)| x));
            for &x in &c {
                member[x] = true;
            }
            let mut neg: Vec<usize> = c.iter().map(|&x| g.neg(x)).collect();
            neg.sort_unstable();
            let accepted = if neg == c {
                Some(vec![c.clone()])
            } else if neg.iter().all(|&x| !member[x] && self.class_of[x] == FREE && self.color[x] == self.color[neg[0]]) {
                Some(vec![c.clone(), neg])
            } else {
                None
            };
            for &x in &c {
                member[x] = false;
            }
            out.extend(accepted);
        }
        out
    }
}

fn search(g: &AbelianGroup, state: State, out: &mut Vec<SRing>) -> Result<()> {
    if state.unassigned == 0 {
        let parts = state.classes.into_iter().map(Subset::from).collect();
        out.push(SRing::new(g, parts).map_err(|e| Error::internal(format!("enumerated partition failed validation: {e}")))?);
        return Ok(());
    }
    for choice in state.choices(g) {
        let mut next = state.clone();
        if next.extend(g, &choice) {
            search(g, next, out)?;
        }
    }
    Ok(())
}

/// Every S-ring over `g`, sorted by rank and then by basic sets.
///
/// Classes are built one at a time through the least unassigned element.
/// Each new class is checked against all products of completed classes,
/// and every product coefficient refines a coloring of the unassigned
/// elements that later classes must respect.
pub fn enumerate_all_srings(g: &AbelianGroup) -> Result<Vec<SRing>> {
    check_cap("group for S-ring enumeration", g.order(), limits().sring_enum_cap)?;
    let mut root = State::start(g);
    root.extend(g, &[]);
    if root.unassigned == 0 {
        return Ok(vec![SRing::discrete(g)]);
    }
    let branches: Vec<Result<Vec<SRing>>> = root
        .choices(g)
        .into_par_iter()
        .map(|choice| {
            let mut out = Vec::new();
            let mut next = root.clone();
            if next.extend(g, &choice) {
                search(g, next, &mut out)?;
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for b in branches {
        all.extend(b?);
    }
    sort_canonically(&mut all);
    Ok(all)
}

/// Every S-ring whose basic sets are unions of `K`-orbits, found by
/// assigning orbits to classes in restricted-growth order and validating
/// each complete assignment.
pub fn enumerate_k_invariant_srings(g: &AbelianGroup, k: &AutSubgroup) -> Result<Vec<SRing>> {
    if k.degree() != g.order() {
        return Err(Error::invalid("automorphism group acts on a set of the wrong size"));
    }
    let blocks = k.orbits();
    check_cap("number of orbit blocks", blocks.len(), limits().orbit_block_cap)?;
    let mut block_of = vec![0; g.order()];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b.iter() {
            block_of[x] = i;
        }
    }
    let neg_block: Vec<usize> = blocks.iter().map(|b| block_of[g.neg(b.as_slice()[0])]).collect();
    let mut search = BlockSearch {
        g,
        blocks: &blocks,
        neg_block: &neg_block,
        label: vec![usize::MAX; blocks.len()],
        partner: Vec::new(),
        out: Vec::new(),
    };
    search.label[0] = 0;
    search.partner.push(Some(0));
    search.go(1)?;
    let mut out = search.out;
    sort_canonically(&mut out);
    Ok(out)
}

struct BlockSearch<'a> {
    g: &'a AbelianGroup,
    blocks: &'a [Subset],
    neg_block: &'a [usize],
    label: Vec<usize>,
    /// `partner[c]` is the class holding the negatives of class `c`, once known.
    partner: Vec<Option<usize>>,
    out: Vec<SRing>,
}

impl BlockSearch<'_> {
    fn go(&mut self, b: usize) -> Result<()> {
        if b == self.blocks.len() {
            let mut parts = vec![Vec::new(); self.partner.len()];
            for (i, blk) in self.blocks.iter().enumerate() {
                parts[self.label[i]].extend(blk.iter().copied());
            }
            if let Ok(a) = SRing::new(self.g, parts.into_iter().map(Subset::from).collect()) {
                self.out.push(a);
            }
            return Ok(());
        }
        let classes = self.partner.len();
        // class 0 holds only the identity
        for c in 1..=classes {
            let saved = self.partner.clone();
            if c == classes {
                self.partner.push(None);
            }
            self.label[b] = c;
            if self.link(b, c) {
                self.go(b + 1)?;
            }
            self.label[b] = usize::MAX;
            self.partner = saved;
        }
        Ok(())
    }

    /// Records that the negation of block `b` determines the partner class
    /// of `c`; false when this contradicts earlier assignments.
    fn link(&mut self, b: usize, c: usize) -> bool {
        let nb = self.neg_block[b];
        let target = if nb == b {
            Some(c)
        } else if nb < b {
            Some(self.label[nb])
        } else {
            None
        };
        let Some(t) = target else {
            return true;
        };
        match (self.partner[c], self.partner[t]) {
            (Some(x), _) if x != t => false,
            (_, Some(y)) if y != c => false,
            _ => {
                self.partner[c] = Some(t);
                self.partner[t] = Some(c);
                true
            }
        }
    }
}

/// The S-rings mapped onto themselves by `K` as a permutation of basic sets.
pub fn enumerate_k_permuted_srings(g: &AbelianGroup, k: &AutSubgroup) -> Result<Vec<SRing>> {
    Ok(enumerate_all_srings(g)?.into_iter().filter(|a| a.is_k_invariant(k)).collect())
}
