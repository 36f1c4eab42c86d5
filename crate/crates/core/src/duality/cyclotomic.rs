//! Exact arithmetic in `Z[ζ_m]`, represented modulo the cyclotomic
//! polynomial `Φ_m`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::divisors;

/// `Φ_m` as integer coefficients, constant term first.
pub fn cyclotomic_poly(m: usize) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().ok().and_then(|c| c.get(&m).cloned()) {
        return hit;
    }
    assert!(m >= 1, "cyclotomic polynomial index must be positive");
    // x^m - 1
    let mut num = vec![0i64; m + 1];
    num[0] = -1;
    num[m] = 1;
    for d in divisors(m).into_iter().filter(|&d| d < m) {
        num = exact_div(&num, &cyclotomic_poly(d));
    }
    let phi = Arc::new(num);
    if let Ok(mut c) = cache.lock() {
        c.insert(m, phi.clone());
    }
    phi
}

/// Quotient of `a` by the monic polynomial `b`; panics if the division is
/// not exact.
fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    assert!(r.iter().all(|&c| c == 0), "inexact cyclotomic division");
    q
}

/// Reduces `Σ c_k x^k` modulo the monic `phi`.
fn reduce(mut c: Vec<i64>, phi: &[i64]) -> Vec<i64> {
    let d = phi.len() - 1;
    for i in (d..c.len()).rev() {
        let lead = c[i];
        if lead != 0 {
            for (j, &pj) in phi.iter().enumerate() {
                c[i - d + j] -= lead * pj;
            }
        }
    }
    c.resize(d, 0);
    c
}

/// An element of `Z[ζ_m]` in canonical reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicInteger {
    m: usize,
    coeffs: Vec<i64>,
}

impl CyclotomicInteger {
    pub fn zero(m: usize) -> Self {
        let d = cyclotomic_poly(m).len() - 1;
        CyclotomicInteger { m, coeffs: vec![0; d] }
    }

    pub fn from_int(m: usize, k: i64) -> Self {
        Self::from_power_counts(m, &[k])
    }

    /// `Σ counts[k]·ζ^k`.
    pub fn from_power_counts(m: usize, counts: &[i64]) -> Self {
        let mut c = vec![0i64; m.max(counts.len())];
        for (k, &v) in counts.iter().enumerate() {
            c[k % m] += v;
        }
        CyclotomicInteger {
            m,
            coeffs: reduce(c, &cyclotomic_poly(m)),
        }
    }

    pub fn conductor(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The rational integer this element equals, if any.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then(|| self.coeffs[0])
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "conductor mismatch");
        CyclotomicInteger {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "conductor mismatch");
        let mut c = vec![0i64; self.coeffs.len() + other.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        CyclotomicInteger {
            m: self.m,
            coeffs: reduce(c, &cyclotomic_poly(self.m)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(16).len() - 1, 8);
        assert_eq!(cyclotomic_poly(60).len() - 1, 16);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for m in 2..=36 {
            let all = CyclotomicInteger::from_power_counts(m, &vec![1; m]);
            assert_eq!(all.as_integer(), Some(0), "m = {m}");
            let z = CyclotomicInteger::from_power_counts(m, &[0, 1]);
            let mut p = CyclotomicInteger::from_int(m, 1);
            for _ in 0..m {
                p = p.mul(&z);
            }
            assert_eq!(p.as_integer(), Some(1));
        }
    }
}
