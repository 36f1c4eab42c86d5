//! Dense polynomials over `Z_p`, coefficients stored lowest degree first.

pub(super) fn digits(mut x: usize, p: usize, k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(x % p);
        x /= p;
    }
    out
}

pub(super) fn from_digits(c: &[usize], p: usize) -> usize {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn trim(mut a: Vec<usize>) -> Vec<usize> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
        }
        r = trim(r);
    }
    r
}

/// `a·b mod m`, padded to `deg m` coefficients.
pub(super) fn mul_mod(a: &[usize], b: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut prod = vec![0; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = rem(&prod, m, p);
    r.resize(m.len() - 1, 0);
    r
}

fn monic(lower: usize, p: usize, d: usize) -> Vec<usize> {
    let mut f = digits(lower, p, d);
    f.push(1);
    f
}

fn is_irreducible(f: &[usize], p: usize) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        for lower in 0..p.pow(d as u32) {
            if rem(f, &monic(lower, p, d), p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible of degree `k` whose lower coefficients, read as a
/// base-`p` number (constant term least significant), are smallest.
pub(super) fn least_irreducible(p: usize, k: usize) -> Option<Vec<usize>> {
    (0..p.pow(k as u32))
        .map(|lower| monic(lower, p, k))
        .find(|f| is_irreducible(f, p))
}
