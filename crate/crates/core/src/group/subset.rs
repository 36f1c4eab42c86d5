use std::ops::Deref;

use serde::{Deserialize, Serialize};

use super::AbelianGroup;

/// A set of element indices, kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(Vec<usize>);

impl Subset {
    pub fn empty() -> Self {
        Subset(Vec::new())
    }

    pub fn singleton(x: usize) -> Self {
        Subset(vec![x])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn least(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.0.iter().all(|&x| !other.contains(x))
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.0.iter().chain(other.0.iter()).copied().collect()
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset(self.0.iter().copied().filter(|&x| other.contains(x)).collect())
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        Subset(self.0.iter().copied().filter(|&x| !other.contains(x)).collect())
    }

    /// Complement inside `0..n`.
    pub fn complement(&self, n: usize) -> Subset {
        Subset((0..n).filter(|&x| !self.contains(x)).collect())
    }
}

impl From<Vec<usize>> for Subset {
    fn from(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        Subset(v)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl<'a> IntoIterator for &'a Subset {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A subset known to be a subgroup of its ambient group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Subgroup(Subset);

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup(Subset::singleton(0))
    }

    pub(crate) fn from_sorted_unchecked(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Subgroup(Subset(v))
    }

    /// Checks that `s` contains `0` and is closed under subtraction.
    pub fn from_subset(g: &AbelianGroup, s: Subset) -> Option<Subgroup> {
        if !s.contains(0) || s.iter().any(|&x| x >= g.order()) {
            return None;
        }
        let closed = s.iter().all(|&a| s.iter().all(|&b| s.contains(g.sub(a, b))));
        closed.then_some(Subgroup(s))
    }

    pub fn as_subset(&self) -> &Subset {
        &self.0
    }

    pub fn into_subset(self) -> Subset {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }
}

impl Deref for Subgroup {
    type Target = Subset;

    fn deref(&self) -> &Subset {
        &self.0
    }
}
