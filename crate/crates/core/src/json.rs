//! JSON forms of groups, subsets, S-rings, rings, local pairs and
//! verification instances.
//!
//! Elements are written as residue arrays `[r1, ..., rk]`; subsets as arrays
//! of elements. Automorphisms and permutations are written as image tables
//! over element indices.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::group::{automorphism_group, multiplier_group, AbelianGroup, AutSubgroup, Endomorphism, Subset};
use crate::harness;
use crate::report::{StatementId, VerificationReport};
use crate::ring::{
    is_local_pair, make_dual_numbers, make_gf, make_product, make_zn, ring_from_local_pair, ring_from_tables, CommRing,
    LocalPair,
};
use crate::sring::SRing;
use crate::{Error, Result};

fn parse<T: for<'de> Deserialize<'de>>(v: &Value, what: &str) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::InvalidInput(format!("malformed {what} JSON: {e}")))
}

/// Parses a JSON document from text.
pub fn parse_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("not valid JSON: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupForm {
    cyclic_factors: Vec<usize>,
}

pub fn group_to_json(g: &AbelianGroup) -> Value {
    json!({ "cyclic_factors": g.factors() })
}

pub fn group_from_json(v: &Value) -> Result<AbelianGroup> {
    let form: GroupForm = parse(v, "group")?;
    AbelianGroup::new(&form.cyclic_factors)
}

pub fn element_to_json(g: &AbelianGroup, x: usize) -> Value {
    json!(g.decode(x))
}

/// Reads a residue array; each residue must lie in `0..d_i`.
pub fn element_from_json(g: &AbelianGroup, v: &Value) -> Result<usize> {
    let residues: Vec<usize> = parse(v, "element")?;
    if residues.len() != g.factors().len() || residues.iter().zip(g.factors()).any(|(&r, &d)| r >= d) {
        return Err(Error::InvalidInput(format!("{residues:?} is not an element of {g}")));
    }
    Ok(g.encode(&residues))
}

pub fn subset_to_json(g: &AbelianGroup, s: &Subset) -> Value {
    Value::Array(s.iter().map(|&x| element_to_json(g, x)).collect())
}

/// Reads an array of elements; repeated elements are rejected.
pub fn subset_from_json(g: &AbelianGroup, v: &Value) -> Result<Subset> {
    let items: Vec<Value> = parse(v, "subset")?;
    let elems = items.iter().map(|e| element_from_json(g, e)).collect::<Result<Vec<_>>>()?;
    let set = Subset::from(elems.clone());
    if set.len() != elems.len() {
        return Err(Error::InvalidInput("an element is listed twice".into()));
    }
    Ok(set)
}

fn subsets_to_json(g: &AbelianGroup, v: &[Subset]) -> Value {
    Value::Array(v.iter().map(|s| subset_to_json(g, s)).collect())
}

pub fn sring_to_json(a: &SRing) -> Value {
    json!({
        "group": group_to_json(a.group()),
        "basic_sets": subsets_to_json(a.group(), a.basic_sets()),
    })
}

/// The dual S-ring, tagged with the S-ring it was computed from.
pub fn dual_to_json(dual: &SRing, of: &SRing) -> Value {
    let mut v = sring_to_json(dual);
    v["dual_of"] = sring_to_json(of);
    v
}

/// Reads `{"group", "basic_sets"}` without validating the S-ring axioms.
pub fn partition_from_json(v: &Value) -> Result<(AbelianGroup, Vec<Subset>)> {
    let g = group_from_json(v.get("group").ok_or_else(|| Error::InvalidInput("missing `group`".into()))?)?;
    let sets: Vec<Value> = parse(
        v.get("basic_sets").ok_or_else(|| Error::InvalidInput("missing `basic_sets`".into()))?,
        "basic_sets",
    )?;
    let parts = sets.iter().map(|s| subset_from_json(&g, s)).collect::<Result<_>>()?;
    Ok((g, parts))
}

pub fn sring_from_json(v: &Value) -> Result<SRing> {
    let (g, parts) = partition_from_json(v)?;
    SRing::new(&g, parts)
}

pub fn automorphism_to_json(e: &Endomorphism) -> Value {
    json!(e.images())
}

pub fn aut_subgroup_to_json(k: &AutSubgroup) -> Value {
    json!({
        "order": k.order(),
        "generators": k.generators().iter().map(automorphism_to_json).collect::<Vec<_>>(),
    })
}

/// Reads `"trivial"`, `"multiplier"`, `"aut"` or `{"generators": [[images]]}`.
pub fn aut_subgroup_from_json(g: &AbelianGroup, v: &Value) -> Result<AutSubgroup> {
    match v {
        Value::String(s) => match s.as_str() {
            "trivial" => Ok(AutSubgroup::trivial(g.order())),
            "multiplier" => Ok(multiplier_group(g)),
            "aut" => automorphism_group(g),
            other => Err(Error::InvalidInput(format!("unknown automorphism group `{other}`"))),
        },
        _ => {
            let gens = v
                .get("generators")
                .ok_or_else(|| Error::InvalidInput("automorphism group needs `generators`".into()))?;
            let tables: Vec<Vec<usize>> = parse(gens, "generators")?;
            let gens = tables
                .into_iter()
                .map(|t| Endomorphism::from_table(g, t))
                .collect::<Result<Vec<_>>>()?;
            AutSubgroup::generate(g.order(), gens)
        }
    }
}

/// A ring as explicit tables; [`ring_from_json`] reads it back unchanged.
pub fn ring_to_json(r: &CommRing) -> Value {
    json!({
        "kind": "tables",
        "cyclic_factors": r.additive().factors(),
        "one": r.one(),
        "mul": r.mul_table(),
    })
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum RingForm {
    Zn {
        n: usize,
    },
    Gf {
        p: usize,
        k: usize,
    },
    Dual {
        p: usize,
    },
    Product {
        factors: Vec<Value>,
    },
    Tables {
        cyclic_factors: Vec<usize>,
        one: usize,
        mul: Vec<usize>,
    },
    LocalPair {
        group: Value,
        generators: Vec<Vec<usize>>,
        e: Value,
    },
}

pub fn ring_from_json(v: &Value) -> Result<CommRing> {
    match parse::<RingForm>(v, "ring")? {
        RingForm::Zn { n } => make_zn(n),
        RingForm::Gf { p, k } => make_gf(p, k),
        RingForm::Dual { p } => make_dual_numbers(p),
        RingForm::Product { factors } => {
            let mut rings = factors.iter().map(ring_from_json);
            let first = rings
                .next()
                .ok_or_else(|| Error::InvalidInput("a product needs at least one factor".into()))??;
            rings.try_fold(first, |acc, r| make_product(&acc, &r?))
        }
        RingForm::Tables {
            cyclic_factors,
            one,
            mul,
        } => ring_from_tables(&AbelianGroup::new(&cyclic_factors)?, mul, one),
        RingForm::LocalPair { group, generators, e } => {
            let pair = local_pair_from_parts(&group, generators, &e)?
                .ok_or_else(|| Error::InvalidInput("the given automorphisms and point are not a local pair".into()))?;
            ring_from_local_pair(&pair)
        }
    }
}

fn local_pair_from_parts(group: &Value, generators: Vec<Vec<usize>>, e: &Value) -> Result<Option<LocalPair>> {
    let g = group_from_json(group)?;
    let gens = generators
        .into_iter()
        .map(|t| Endomorphism::from_table(&g, t))
        .collect::<Result<Vec<_>>>()?;
    let k = AutSubgroup::generate(g.order(), gens)?;
    let e = element_from_json(&g, e)?;
    is_local_pair(&g, &k, e)
}

/// Reads `{"group", "generators", "e"}`; `None` when the data is well formed
/// but not a local pair.
pub fn local_pair_from_json(v: &Value) -> Result<Option<LocalPair>> {
    #[derive(Deserialize)]
    struct Form {
        group: Value,
        generators: Vec<Vec<usize>>,
        e: Value,
        #[serde(default, rename = "kind")]
        _kind: Option<String>,
    }
    let f: Form = parse(v, "local pair")?;
    local_pair_from_parts(&f.group, f.generators, &f.e)
}

pub fn local_pair_to_json(pair: &LocalPair) -> Value {
    let g = &pair.group;
    json!({
        "kind": "local_pair",
        "group": group_to_json(g),
        "generators": pair.k.generators().iter().map(automorphism_to_json).collect::<Vec<_>>(),
        "e": element_to_json(g, pair.e),
        "k_order": pair.k.order(),
        "complement": subset_to_json(g, &pair.complement),
    })
}

/// Error description with a machine-readable witness where there is one.
/// Index-valued witnesses are turned into elements when `g` is given.
pub fn error_to_json(e: &Error, g: Option<&AbelianGroup>) -> Value {
    let set = |v: &[usize]| match g {
        Some(g) if v.iter().all(|&x| x < g.order()) => subset_to_json(g, &Subset::from(v.to_vec())),
        _ => json!(v),
    };
    let elem = |x: usize| match g {
        Some(g) if x < g.order() => element_to_json(g, x),
        _ => json!(x),
    };
    let (kind, witness) = match e {
        Error::InvalidInput(_) => ("invalid_input", Value::Null),
        Error::CapExceeded { what, size, cap } => ("cap_exceeded", json!({"what": what, "size": size, "cap": cap})),
        Error::NotAPartition(_) => ("not_a_partition", Value::Null),
        Error::IdentityClassNotSingleton { class } => ("identity_class", json!({"class": set(class)})),
        Error::NotInverseClosed { class, inverse } => {
            ("not_inverse_closed", json!({"class": set(class), "inverse": set(inverse)}))
        }
        Error::ProductNotInSpan {
            x,
            y,
            a,
            b,
            coeff_a,
            coeff_b,
        } => (
            "product_not_in_span",
            json!({"x": set(x), "y": set(y), "a": elem(*a), "b": elem(*b), "coeff_a": coeff_a, "coeff_b": coeff_b}),
        ),
        Error::RingAxiom { axiom, witness } => ("ring_axiom", json!({"axiom": axiom, "at": [witness.0, witness.1, witness.2]})),
        Error::NotLocal => ("not_local", Value::Null),
        Error::NotAnSRingOverRing => ("not_an_sring_over_ring", Value::Null),
        Error::Precondition(_) => ("precondition", Value::Null),
        Error::Internal(_) => ("internal", Value::Null),
    };
    json!({"error": kind, "message": e.to_string(), "witness": witness})
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Theorem2Form {
    group: Value,
    k: Value,
    p: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PrimeForm {
    p: usize,
}

/// Runs the verifier for `id` on a JSON instance.
///
/// `thm1`/`thm3` take a ring; `thm2` takes `{"group", "k", "p"}`;
/// `counterexample` takes `{"p"}`; every other statement takes a group.
pub fn verify_instance(id: StatementId, instance: &Value) -> Result<VerificationReport> {
    match id {
        StatementId::Thm1 => harness::verify_theorem1(&ring_from_json(instance)?),
        StatementId::Thm3 => harness::verify_theorem3(&ring_from_json(instance)?),
        StatementId::Thm2 => {
            let f: Theorem2Form = parse(instance, "thm2 instance")?;
            let g = group_from_json(&f.group)?;
            let k = aut_subgroup_from_json(&g, &f.k)?;
            harness::verify_theorem2(&g, &k, f.p)
        }
        StatementId::Counterexample => {
            let f: PrimeForm = parse(instance, "prime")?;
            harness::verify_counterexample(f.p)
        }
        _ => {
            let g = group_from_json(instance)?;
            match id {
                StatementId::Thm4 => harness::verify_theorem4(&g),
                StatementId::Wielandt => harness::verify_wielandt(&g),
                StatementId::Multiplier => harness::verify_schur_multiplier(&g),
                StatementId::Lemma22 => harness::verify_lemma_power(&g),
                StatementId::Cor42 => harness::verify_corollary_42(&g),
                StatementId::Prop13 => harness::verify_prop13(&g),
                StatementId::Separating => harness::verify_separating(&g),
                StatementId::Duality => harness::verify_duality(&g),
                _ => unreachable!("handled above"),
            }
        }
    }
}
