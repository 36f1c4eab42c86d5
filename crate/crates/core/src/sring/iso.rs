use std::ops::ControlFlow;

use super::SRing;
use crate::group::{for_each_isomorphism_filtered, Endomorphism};
use crate::limits::{check_cap, limits};
use crate::Result;

fn size_profile(a: &SRing) -> Vec<usize> {
    let mut v: Vec<usize> = a.basic_sets().iter().map(|s| s.len()).collect();
    v.sort_unstable();
    v
}

/// A group isomorphism carrying the basic sets of `a` onto those of `b`, if
/// one exists.
///
/// Generator images are restricted to classes of `b` with the same size as
/// the class of the generator in `a`; every surviving isomorphism is then
/// checked on all basic sets.
pub fn cayley_isomorphic(a: &SRing, b: &SRing) -> Result<Option<Endomorphism>> {
    let cap = limits().group_cap;
    check_cap("group for Cayley isomorphism search", a.group().order(), cap)?;
    check_cap("group for Cayley isomorphism search", b.group().order(), cap)?;
    if a.rank() != b.rank() || size_profile(a) != size_profile(b) || !a.group().is_isomorphic(b.group()) {
        return Ok(None);
    }
    let (ga, gb) = (a.group(), b.group());
    let gen_sizes: Vec<usize> = (0..ga.factors().len())
        .map(|i| a.basic_set_of(ga.generator(i)).len())
        .collect();
    let mut found = None;
    for_each_isomorphism_filtered(
        ga,
        gb,
        |i, y| b.basic_set_of(y).len() == gen_sizes[i],
        |f| {
            if a.basic_sets().iter().all(|x| b.is_basic_set(&f.image_of(x))) {
                found = Some(f);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
    );
    Ok(found)
}
