//! `srk`: command-line front end for srk-core.
//!
//! Exit codes: 0 success, 1 violation or negative answer, 2 bad input,
//! 3 cap exceeded.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use srk_core::group::{automorphism_group, multiplier_group, AbelianGroup, Subset};
use srk_core::harness::{
    build_counterexample, enumerate_all_srings, enumerate_k_invariant_srings, enumerate_k_permuted_srings,
    verify_counterexample,
};
use srk_core::json::{
    aut_subgroup_from_json, aut_subgroup_to_json, dual_to_json, error_to_json, group_from_json,
    group_to_json, local_pair_from_json, local_pair_to_json, parse_text, partition_from_json, ring_from_json,
    ring_to_json, sring_to_json, subset_to_json, verify_instance,
};
use srk_core::limits::{limits, set_limits};
use srk_core::report::StatementId;
use srk_core::ring::{enumerate_local_pairs, ring_from_local_pair, CommRing};
use srk_core::sring::SRing;
use srk_core::{duality, Error};

#[derive(Parser)]
#[command(name = "srk", version, about = "Schur rings over finite abelian groups and finite commutative rings")]
struct Cli {
    /// Print JSON instead of a text summary.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order for subgroup and automorphism enumeration.
    #[arg(long, global = true, env = "SRK_CAP_GROUP", value_parser = clap::value_parser!(u64).range(1..))]
    cap_group: Option<u64>,
    /// Largest group order for enumerating every S-ring.
    #[arg(long, global = true, env = "SRK_CAP_ENUM", value_parser = clap::value_parser!(u64).range(1..))]
    cap_enum: Option<u64>,
    /// Largest number of orbits for the orbit-block enumeration.
    #[arg(long, global = true, env = "SRK_CAP_ORBITS", value_parser = clap::value_parser!(u64).range(1..))]
    cap_orbits: Option<u64>,
    /// Largest permutation group built by closure.
    #[arg(long, global = true, env = "SRK_CAP_CLOSURE", value_parser = clap::value_parser!(u64).range(1..))]
    cap_closure: Option<u64>,
    /// Accepted for compatibility; every computation is deterministic.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

/// JSON arguments may be given inline or as `@path`.
#[derive(Subcommand)]
enum Command {
    /// Abelian groups given as {"cyclic_factors": [...]}.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// S-rings given as {"group": ..., "basic_sets": [...]}.
    Sring {
        #[command(subcommand)]
        cmd: SringCmd,
    },
    /// Finite commutative rings and local pairs.
    Ring {
        #[command(subcommand)]
        cmd: RingCmd,
    },
    /// Run one statement checker on an instance.
    Verify {
        /// One of thm1 thm2 thm3 thm4 wielandt multiplier lemma22 cor42 prop13 counterexample separating duality.
        statement: String,
        #[arg(long)]
        instance: String,
    },
    /// The rank-3 S-ring over the product ring Z_p x Z_p.
    Counterexample {
        #[arg(long)]
        p: usize,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    Info { group: String },
    Subgroups { group: String },
    Aut { group: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Every basic set is a union of K-orbits.
    Stable,
    /// K maps basic sets onto basic sets.
    Permuted,
}

#[derive(Subcommand)]
enum SringCmd {
    Validate {
        sring: String,
    },
    Dual {
        sring: String,
    },
    /// Radical and span of every basic set.
    Radical {
        sring: String,
    },
    /// X^[p] for every basic set.
    PowerMap {
        sring: String,
        #[arg(long)]
        p: usize,
    },
    Enumerate {
        group: String,
        /// "trivial", "multiplier", "aut" or {"generators": [[images]]}.
        #[arg(long, default_value = "trivial")]
        k: String,
        #[arg(long, value_enum, default_value = "stable")]
        mode: Mode,
    },
}

#[derive(Subcommand)]
enum RingCmd {
    /// Build a ring: {"kind": "zn" | "gf" | "dual" | "product" | "tables" | "local_pair", ...}.
    Make { ring: String },
    Units { ring: String },
    Primary { ring: String },
    LocalPairs { group: String },
    /// Ring of a local pair {"group", "generators", "e"}.
    FromPair { pair: String },
}

/// What a command produced: its JSON form, a text summary, and whether the
/// answer was positive.
struct Outcome {
    value: Value,
    text: String,
    positive: bool,
}

impl Outcome {
    fn ok(value: Value, text: String) -> Self {
        Outcome {
            value,
            text,
            positive: true,
        }
    }
}

/// A failure together with the group used to render its witness.
struct Failure {
    error: Error,
    group: Option<AbelianGroup>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, group: None }
    }
}

type Run = std::result::Result<Outcome, Failure>;

fn read_json(arg: &str) -> Result<Value, Error> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?,
        None => arg.to_string(),
    };
    parse_text(&text)
}

fn group_arg(arg: &str) -> Result<AbelianGroup, Error> {
    group_from_json(&read_json(arg)?)
}

fn ring_arg(arg: &str) -> Result<CommRing, Error> {
    ring_from_json(&read_json(arg)?)
}

fn sring_arg(arg: &str) -> Result<SRing, Failure> {
    let (g, parts) = partition_from_json(&read_json(arg)?)?;
    SRing::new(&g, parts).map_err(|error| Failure { error, group: Some(g) })
}

fn show(g: &AbelianGroup, s: &Subset) -> String {
    subset_to_json(g, s).to_string()
}

fn group_cmd(cmd: &GroupCmd) -> Run {
    match cmd {
        GroupCmd::Info { group } => {
            let g = group_arg(group)?;
            let value = json!({
                "group": group_to_json(&g),
                "order": g.order(),
                "exponent": g.exponent(),
                "invariant_factors": g.canonical_form(),
                "cyclic": g.is_cyclic(),
                "p_group_prime": g.p_group_prime(),
            });
            let text = format!(
                "{g}: order {}, exponent {}, invariant factors {:?}{}",
                g.order(),
                g.exponent(),
                g.canonical_form(),
                if g.is_cyclic() { ", cyclic" } else { "" }
            );
            Ok(Outcome::ok(value, text))
        }
        GroupCmd::Subgroups { group } => {
            let g = group_arg(group)?;
            let subs = g.all_subgroups()?;
            let list: Vec<Value> = subs
                .iter()
                .map(|h| json!({"order": h.order(), "elements": subset_to_json(&g, h)}))
                .collect();
            let mut text = format!("{g}: {} subgroups\n", subs.len());
            for h in subs.iter() {
                let _ = writeln!(text, "  order {:>3}: {}", h.order(), show(&g, h));
            }
            Ok(Outcome::ok(json!({"group": group_to_json(&g), "subgroups": list}), text.trim_end().into()))
        }
        GroupCmd::Aut { group } => {
            let g = group_arg(group)?;
            let aut = automorphism_group(&g)?;
            let mult = multiplier_group(&g);
            let value = json!({
                "group": group_to_json(&g),
                "automorphisms": aut_subgroup_to_json(&aut),
                "multipliers": aut_subgroup_to_json(&mult),
                "abelian": aut.is_abelian(),
            });
            let text = format!(
                "{g}: |Aut| = {}, {} generators, multiplier group of order {}{}",
                aut.order(),
                aut.generators().len(),
                mult.order(),
                if aut.is_abelian() { ", Aut abelian" } else { "" }
            );
            Ok(Outcome::ok(value, text))
        }
    }
}

fn sring_cmd(cmd: &SringCmd) -> Run {
    match cmd {
        SringCmd::Validate { sring } => {
            let a = sring_arg(sring)?;
            let text = format!("valid S-ring over {} of rank {}", a.group(), a.rank());
            let mut value = sring_to_json(&a);
            value["rank"] = json!(a.rank());
            Ok(Outcome::ok(value, text))
        }
        SringCmd::Dual { sring } => {
            let a = sring_arg(sring)?;
            let d = duality::dual_sring(&a)?;
            let g = d.group();
            let mut text = format!("dual S-ring of rank {}:\n", d.rank());
            for x in d.basic_sets() {
                let _ = writeln!(text, "  {}", show(g, x));
            }
            Ok(Outcome::ok(dual_to_json(&d, &a), text.trim_end().into()))
        }
        SringCmd::Radical { sring } => {
            let a = sring_arg(sring)?;
            let g = a.group();
            let mut rows = Vec::new();
            let mut text = String::new();
            for x in a.basic_sets() {
                let rad = g.subset_radical(x)?;
                let span = g.generated_subgroup(x.as_slice());
                let _ = writeln!(text, "{}: radical {}, span {}", show(g, x), show(g, &rad), show(g, &span));
                rows.push(json!({
                    "X": subset_to_json(g, x),
                    "radical": subset_to_json(g, &rad),
                    "span": subset_to_json(g, &span),
                }));
            }
            Ok(Outcome::ok(json!({"sring": sring_to_json(&a), "radicals": rows}), text.trim_end().into()))
        }
        SringCmd::PowerMap { sring, p } => {
            let a = sring_arg(sring)?;
            let g = a.group();
            let mut rows = Vec::new();
            let mut text = String::new();
            for x in a.basic_sets() {
                let img = a.power_map(x, *p)?;
                let star = a.in_star(&img);
                let _ = writeln!(text, "{} -> {} (in S*: {star})", show(g, x), show(g, &img));
                rows.push(json!({"X": subset_to_json(g, x), "image": subset_to_json(g, &img), "in_star": star}));
            }
            Ok(Outcome::ok(json!({"sring": sring_to_json(&a), "p": p, "power_maps": rows}), text.trim_end().into()))
        }
        SringCmd::Enumerate { group, k, mode } => {
            let g = group_arg(group)?;
            let k_value = read_json(k).or_else(|_| Ok::<_, Error>(Value::String(k.clone())))?;
            let kk = aut_subgroup_from_json(&g, &k_value)?;
            let list = match (mode, kk.is_trivial()) {
                (_, true) => enumerate_all_srings(&g)?,
                (Mode::Stable, false) => enumerate_k_invariant_srings(&g, &kk)?,
                (Mode::Permuted, false) => enumerate_k_permuted_srings(&g, &kk)?,
            };
            let mut text = format!("{} S-rings over {g}\n", list.len());
            for a in &list {
                let sets: Vec<String> = a.basic_sets().iter().map(|x| show(&g, x)).collect();
                let _ = writeln!(text, "  rank {:>2}: {}", a.rank(), sets.join(" "));
            }
            let value = json!({
                "group": group_to_json(&g),
                "k_order": kk.order(),
                "count": list.len(),
                "srings": list.iter().map(|a| json!({"rank": a.rank(), "basic_sets": sring_to_json(a)["basic_sets"]})).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(value, text.trim_end().into()))
        }
    }
}

fn ring_summary(r: &CommRing) -> Value {
    json!({
        "order": r.order(),
        "local": r.is_local(),
        "field": r.is_field(),
        "units": r.units().len(),
        "generated_by_units": r.generated_by_units(),
    })
}

fn ring_cmd(cmd: &RingCmd) -> Run {
    match cmd {
        RingCmd::Make { ring } => {
            let r = ring_arg(ring)?;
            let mut value = ring_to_json(&r);
            value["summary"] = ring_summary(&r);
            let text = format!(
                "{}: order {}, {} units{}{}",
                r.label(),
                r.order(),
                r.units().len(),
                if r.is_local() { ", local" } else { "" },
                if r.is_field() { ", field" } else { "" }
            );
            Ok(Outcome::ok(value, text))
        }
        RingCmd::Units { ring } => {
            let r = ring_arg(ring)?;
            let g = r.additive();
            let units = r.units();
            let radical = r.radical().ok();
            let value = json!({
                "units": subset_to_json(g, units.units()),
                "k_r_order": r.k_r().order(),
                "radical": radical.as_ref().map(|h| subset_to_json(g, h)),
            });
            let text = format!("{}: {} units {}", r.label(), units.len(), show(g, units.units()));
            Ok(Outcome::ok(value, text))
        }
        RingCmd::Primary { ring } => {
            let r = ring_arg(ring)?;
            let comps = r.primary_components()?;
            let mut text = format!("{}: {} primary components\n", r.label(), comps.len());
            let mut rows = Vec::new();
            for c in &comps {
                let _ = writeln!(
                    text,
                    "  p = {}: order {}{}",
                    c.prime,
                    c.ring.order(),
                    if c.ring.is_local() { ", local" } else { "" }
                );
                rows.push(json!({
                    "prime": c.prime,
                    "ring": ring_to_json(&c.ring),
                    "local": c.ring.is_local(),
                    "embedding": c.embedding,
                }));
            }
            Ok(Outcome::ok(json!({"components": rows}), text.trim_end().into()))
        }
        RingCmd::LocalPairs { group } => {
            let g = group_arg(group)?;
            let census = enumerate_local_pairs(&g)?;
            let reps = census.representatives();
            let mut text = format!(
                "{g}: {} local pair groups in {} conjugacy classes\n",
                census.subgroups.len(),
                census.classes.len()
            );
            let mut rows = Vec::new();
            for (cls, pair) in census.classes.iter().zip(&reps) {
                let r = ring_from_local_pair(pair)?;
                let _ = writeln!(
                    text,
                    "  |K| = {}, complement {}, {} conjugates{}",
                    pair.k.order(),
                    show(&g, &pair.complement),
                    cls.len(),
                    if r.is_field() { ", field" } else { "" }
                );
                rows.push(json!({"representative": local_pair_to_json(pair), "members": cls.len(), "field": r.is_field()}));
            }
            let value = json!({"group": group_to_json(&g), "groups": census.subgroups.len(), "classes": rows});
            Ok(Outcome::ok(value, text.trim_end().into()))
        }
        RingCmd::FromPair { pair } => {
            let v = read_json(pair)?;
            match local_pair_from_json(&v)? {
                Some(lp) => {
                    let r = ring_from_local_pair(&lp)?;
                    let mut value = ring_to_json(&r);
                    value["summary"] = ring_summary(&r);
                    let text = format!(
                        "local ring of order {} with {} units{}",
                        r.order(),
                        r.units().len(),
                        if r.is_field() { ", a field" } else { "" }
                    );
                    Ok(Outcome::ok(value, text))
                }
                None => Ok(Outcome {
                    value: json!({"local_pair": false}),
                    text: "not a local pair: the orbit complement is not a subgroup".into(),
                    positive: false,
                }),
            }
        }
    }
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Group { cmd } => group_cmd(cmd),
        Command::Sring { cmd } => sring_cmd(cmd),
        Command::Ring { cmd } => ring_cmd(cmd),
        Command::Verify { statement, instance } => {
            let id: StatementId = statement.parse()?;
            let report = verify_instance(id, &read_json(instance)?)?;
            let value = serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?;
            Ok(Outcome {
                value,
                text: report.to_string().trim_end().into(),
                positive: report.passed(),
            })
        }
        Command::Counterexample { p } => {
            let (r, a) = build_counterexample(*p)?;
            let report = verify_counterexample(*p)?;
            let g = a.group();
            let mut text = format!(
                "rank-{} S-ring over Z_{p} x Z_{p}, K_R-invariant and quasiprimitive, not cyclotomic\n",
                a.rank()
            );
            for x in a.basic_sets() {
                let _ = writeln!(text, "  size {:>2}: {}", x.len(), show(g, x));
            }
            let value = json!({
                "ring": ring_to_json(&r),
                "sring": sring_to_json(&a),
                "sizes": a.basic_sets().iter().map(|x| x.len()).collect::<Vec<_>>(),
                "report": serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?,
            });
            Ok(Outcome {
                value,
                text: text.trim_end().into(),
                positive: report.passed(),
            })
        }
    }
}

fn apply_caps(cli: &Cli) {
    let mut l = limits();
    let to = |v: u64| usize::try_from(v).unwrap_or(usize::MAX);
    if let Some(v) = cli.cap_group {
        l.group_cap = to(v);
    }
    if let Some(v) = cli.cap_enum {
        l.sring_enum_cap = to(v);
    }
    if let Some(v) = cli.cap_orbits {
        l.orbit_block_cap = to(v);
    }
    if let Some(v) = cli.cap_closure {
        l.closure_cap = to(v);
    }
    set_limits(l);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    apply_caps(&cli);
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.value).expect("JSON values serialize")
            } else {
                out.text
            };
            // A closed pipe is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(if out.positive { 0 } else { 1 })
        }
        Err(Failure { error, group }) => {
            let value = error_to_json(&error, group.as_ref());
            if cli.json {
                let body = serde_json::to_string_pretty(&value).expect("JSON values serialize");
                let _ = writeln!(std::io::stdout().lock(), "{body}");
            } else {
                eprintln!("error: {error}");
                if !value["witness"].is_null() {
                    eprintln!("witness: {}", value["witness"]);
                }
            }
            ExitCode::from(match error {
                Error::CapExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}
