use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::SRing;
use crate::group::{AbelianGroup, Subset};
use crate::limits::{check_cap, limits};
use crate::{Error, Result};

/// Generators of a permutation group on the element indices of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationSet {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl PermutationSet {
    /// The translations by the factor generators, which generate the
    /// regular representation of `g`.
    pub fn regular(g: &AbelianGroup) -> Self {
        let generators = (0..g.factors().len())
            .filter(|&i| g.factors()[i] > 1)
            .map(|i| translation(g, g.generator(i)))
            .collect();
        PermutationSet {
            degree: g.order(),
            generators,
        }
    }

    pub fn with(mut self, generator: Vec<usize>) -> Self {
        self.generators.push(generator);
        self
    }

    fn validate(&self) -> Result<()> {
        for (i, p) in self.generators.iter().enumerate() {
            let mut seen = vec![false; self.degree];
            if p.len() != self.degree {
                return Err(Error::invalid(format!("generator {i} has length {}, expected {}", p.len(), self.degree)));
            }
            for &y in p {
                if y >= self.degree || seen[y] {
                    return Err(Error::invalid(format!("generator {i} is not a permutation")));
                }
                seen[y] = true;
            }
        }
        Ok(())
    }

    /// Every element of the generated group, by breadth-first closure.
    pub fn closure(&self) -> Result<Vec<Vec<usize>>> {
        self.validate()?;
        let cap = limits().closure_cap;
        let id: Vec<usize> = (0..self.degree).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(id.clone());
        let mut list = vec![id];
        let mut i = 0;
        while i < list.len() {
            for g in &self.generators {
                let h: Vec<usize> = list[i].iter().map(|&x| g[x]).collect();
                if !seen.contains(&h) {
                    seen.insert(h.clone());
                    list.push(h);
                    check_cap("generated permutation group", list.len(), cap)?;
                }
            }
            i += 1;
        }
        Ok(list)
    }
}

fn translation(g: &AbelianGroup, t: usize) -> Vec<usize> {
    g.elements().map(|x| g.add(x, t)).collect()
}

/// `A(Γ)`: the S-ring spanned by the orbits of the stabilizer of `0` in the
/// permutation group generated by `gamma`, which must contain the
/// translations of `g`.
pub fn schurian_sring(g: &AbelianGroup, gamma: &PermutationSet) -> Result<SRing> {
    if gamma.degree != g.order() {
        return Err(Error::invalid(format!(
            "permutations have degree {}, group has order {}",
            gamma.degree,
            g.order()
        )));
    }
    let elements = gamma.closure()?;
    let members: HashSet<&Vec<usize>> = elements.iter().collect();
    for i in 0..g.factors().len() {
        if !members.contains(&translation(g, g.generator(i))) {
            return Err(Error::precondition(
                "the permutation group does not contain the regular representation of the group",
            ));
        }
    }
    let mut block = vec![usize::MAX; g.order()];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for p in elements.iter().filter(|p| p[0] == 0) {
        for x in g.elements() {
            let y = p[x];
            match (block[x], block[y]) {
                (usize::MAX, usize::MAX) => {
                    block[x] = parts.len();
                    block[y] = parts.len();
                    parts.push(if x == y { vec![x] } else { vec![x, y] });
                }
                (b, usize::MAX) => {
                    block[y] = b;
                    parts[b].push(y);
                }
                (usize::MAX, b) => {
                    block[x] = b;
                    parts[b].push(x);
                }
                (a, b) if a != b => {
                    let (keep, drop) = (a.min(b), a.max(b));
                    let moved = std::mem::take(&mut parts[drop]);
                    for &z in &moved {
                        block[z] = keep;
                    }
                    parts[keep].extend(moved);
                }
                _ => {}
            }
        }
    }
    let partition = parts
        .into_iter()
        .filter(|p| !p.is_empty())
        .map(Subset::from)
        .collect();
    SRing::new(g, partition).map_err(|e| Error::internal(format!("orbit partition of a point stabilizer failed validation: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_gives_discrete() {
        let g = AbelianGroup::cyclic(4);
        let a = schurian_sring(&g, &PermutationSet::regular(&g)).unwrap();
        assert_eq!(a.rank(), 4);
        let v = AbelianGroup::new(&[2, 2]).unwrap();
        assert_eq!(schurian_sring(&v, &PermutationSet::regular(&v)).unwrap().rank(), 4);
    }

    #[test]
    fn symmetric_gives_rank_two() {
        let g = AbelianGroup::cyclic(4);
        let gamma = PermutationSet::regular(&g).with(vec![1, 0, 2, 3]);
        let a = schurian_sring(&g, &gamma).unwrap();
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn negation_gives_rank_three() {
        let g = AbelianGroup::cyclic(4);
        let gamma = PermutationSet::regular(&g).with(vec![0, 3, 2, 1]);
        let a = schurian_sring(&g, &gamma).unwrap();
        let sets: Vec<Vec<usize>> = a.basic_sets().iter().map(|s| s.as_slice().to_vec()).collect();
        assert_eq!(sets, vec![vec![0], vec![1, 3], vec![2]]);
    }

    #[test]
    fn missing_translations_rejected() {
        let g = AbelianGroup::cyclic(4);
        let gamma = PermutationSet {
            degree: 4,
            generators: vec![vec![0, 3, 2, 1]],
        };
        assert!(matches!(schurian_sring(&g, &gamma), Err(Error::Precondition(_))));
        let bad = PermutationSet {
            degree: 4,
            generators: vec![vec![0, 0, 2, 1]],
        };
        assert!(matches!(schurian_sring(&g, &bad), Err(Error::InvalidInput(_))));
    }
}
