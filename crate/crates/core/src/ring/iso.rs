use std::ops::ControlFlow;

use super::CommRing;
use crate::group::{automorphism_group, for_each_isomorphism_filtered, Endomorphism};
use crate::limits::{check_cap, limits};
use crate::Result;

/// Per-element data preserved by every ring isomorphism, used to prune the
/// generator images tried by the brute-force search.
fn signature(r: &CommRing, x: usize, units: &crate::group::Subset) -> (usize, bool, usize, usize) {
    let g = r.additive();
    let is_unit = units.contains(x);
    // multiplicative order for units, nilpotency-style walk length otherwise
    let mut y = x;
    let mut steps = 1;
    let target = if is_unit { r.one() } else { 0 };
    while y != target && steps <= r.order() {
        y = r.mul(y, x);
        steps += 1;
    }
    (g.order_of(x), is_unit, steps, g.order_of(r.mul(x, x)))
}

/// A ring isomorphism `r1 -> r2`, found by searching additive isomorphisms.
pub fn find_ring_isomorphism(r1: &CommRing, r2: &CommRing) -> Result<Option<Endomorphism>> {
    let cap = limits().group_cap;
    check_cap("ring for isomorphism search", r1.order(), cap)?;
    check_cap("ring for isomorphism search", r2.order(), cap)?;
    let (g1, g2) = (r1.additive(), r2.additive());
    if r1.order() != r2.order() || !g1.is_isomorphic(g2) {
        return Ok(None);
    }
    let (u1, u2) = (r1.units(), r2.units());
    if u1.len() != u2.len() {
        return Ok(None);
    }
    let sig1: Vec<_> = (0..g1.factors().len())
        .map(|i| signature(r1, g1.generator(i), u1.units()))
        .collect();
    let sig2: Vec<_> = (0..r2.order()).map(|y| signature(r2, y, u2.units())).collect();
    let n = r1.order();
    let mut found = None;
    for_each_isomorphism_filtered(
        g1,
        g2,
        |i, y| sig1[i] == sig2[y],
        |f| {
            let ok = f.apply(r1.one()) == r2.one()
                && (0..n).all(|a| (0..n).all(|b| f.apply(r1.mul(a, b)) == r2.mul(f.apply(a), f.apply(b))));
            if ok {
                found = Some(f);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
    );
    Ok(found)
}

/// Ring isomorphism test. Two local rings on the same `p`-group are compared
/// through `Aut(P)`-conjugacy of their unit multiplication groups; every other
/// case uses the brute-force search.
pub fn ring_isomorphic(r1: &CommRing, r2: &CommRing) -> Result<bool> {
    if r1.additive() == r2.additive()
        && r1.additive().p_group_prime().is_some()
        && r1.is_local()
        && r2.is_local()
    {
        return units_conjugate(r1, r2);
    }
    Ok(find_ring_isomorphism(r1, r2)?.is_some())
}

/// Whether `K_{R1}` and `K_{R2}` are conjugate in `Aut(R^+)`.
pub fn units_conjugate(r1: &CommRing, r2: &CommRing) -> Result<bool> {
    let (k1, k2) = (r1.k_r(), r2.k_r());
    if k1.order() != k2.order() {
        return Ok(false);
    }
    let aut = automorphism_group(r1.additive())?;
    Ok(aut.elements().iter().any(|s| k1.conjugate(s) == k2))
}
