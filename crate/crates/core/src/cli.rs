//! Command line front end. Every command prints either readable text or a
//! JSON envelope `{tool, version, command, payload, warnings}`.
//!
//! Exit status: 0 on success, 1 on a domain error (unknown space, invalid
//! descriptor, failed validation, nonempty reference diff), 2 on a usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use crate::actions::{
    canonical_extend, extension_composition_check, extension_orbit_equivalence,
    foliation_moduli, intermediate_subsets, nilpotent_candidates, point_inner, ActionDescriptor,
    OrbitData,
};
use crate::classify::{self, ClassificationReport, ClassifyOptions, ReferenceDiff};
use crate::error::{Error, Result};
use crate::parabolic::{self, enumerate_parabolics, gradation, langlands, ParabolicData};
use crate::rootsys::Phi;
use crate::spacedb::{Database, SymmetricSpaceRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "cohomo",
    version,
    about = "Parabolic subalgebras and cohomogeneity one actions on symmetric spaces of noncompact type"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Space {
    /// Space name, e.g. `G2_2/SO4`, `RH5` or `SOo(2,5)/SO2SO5`.
    name: String,
    /// Value of the family parameter for template names such as `RH{n}`.
    #[arg(long)]
    param: Option<i64>,
}

#[derive(Args)]
struct SpacePhi {
    #[command(flatten)]
    space: Space,
    /// Subset of simple roots, 1-based, e.g. `1,3` (use `{}` for the empty set).
    #[arg(long, value_parser = parse_phi_list)]
    phi: PhiArg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Browse the space database.
    #[command(subcommand)]
    Space(SpaceCmd),
    /// Langlands/Chevalley dimensions of q_phi (all subsets when --phi is omitted).
    Parabolic {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_parser = parse_phi_list)]
        phi: Option<PhiArg>,
    },
    /// Level dimensions of the H^phi gradation of n_phi.
    Gradation(SpacePhi),
    /// Boundary component B_phi.
    Boundary(SpacePhi),
    /// Foliation moduli and congruence classes of H_i.
    Foliations(Space),
    /// Canonical extension of an action on B_phi.
    Extend {
        #[command(flatten)]
        target: SpacePhi,
        /// `point`, a JSON object `{"descriptor": ..., "orbit": ...}`, or `@file`.
        #[arg(long)]
        inner: String,
    },
    /// Orbit equivalence of two canonical extensions from the same B_phi.
    Equivalence {
        #[command(flatten)]
        target: SpacePhi,
        #[arg(long)]
        inner_a: String,
        #[arg(long)]
        inner_b: String,
        /// The inner actions are conjugate by the identity component.
        #[arg(long)]
        via_identity: bool,
    },
    /// Candidates for the nilpotent construction (|phi| = r - 1).
    Nilpotent(SpacePhi),
    /// Full classification report.
    Classify {
        #[command(flatten)]
        space: Space,
        /// Compare with the bundled reference list.
        #[arg(long, alias = "diff-paper")]
        diff_reference: bool,
        /// Keep items congruent under diagram symmetries.
        #[arg(long)]
        no_dedup: bool,
    },
    /// Database maintenance.
    #[command(subcommand)]
    Db(DbCmd),
}

#[derive(Subcommand)]
enum SpaceCmd {
    /// List all records and templates.
    List,
    /// Show one space with its multiplicities and labeling.
    Info(Space),
}

#[derive(Subcommand)]
enum DbCmd {
    /// Parse and check a database file.
    Validate { path: PathBuf },
}

/// 1-based simple root indices as typed on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
struct PhiArg(Vec<usize>);

fn parse_phi_list(s: &str) -> std::result::Result<PhiArg, String> {
    let body = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if body.is_empty() || body == "none" {
        return Ok(PhiArg(Vec::new()));
    }
    body.split(',')
        .map(|x| match x.trim().parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i),
            _ => Err(format!("`{}` is not a 1-based simple root index", x.trim())),
        })
        .collect::<std::result::Result<_, _>>()
        .map(PhiArg)
}

struct Output {
    payload: Value,
    text: String,
    warnings: Vec<String>,
    /// Domain-level failure after producing output (exit status 1).
    failed: bool,
}

impl Output {
    fn new(payload: impl Serialize, text: String) -> Self {
        Output {
            payload: serde_json::to_value(payload).expect("payload serializes"),
            text,
            warnings: Vec::new(),
            failed: false,
        }
    }
}

/// Entry point used by the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let command = args.iter().skip(1).map(|a| a.to_string_lossy()).join(" ");
    match dispatch(&cli.cmd) {
        Ok(o) => {
            match cli.format {
                Format::Json => {
                    let env = json!({
                        "tool": "cohomo",
                        "version": env!("CARGO_PKG_VERSION"),
                        "command": command,
                        "payload": o.payload,
                        "warnings": o.warnings,
                    });
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&env).expect("json"));
                }
                Format::Text => {
                    let _ = out.write_all(o.text.as_bytes());
                    for w in &o.warnings {
                        let _ = writeln!(err, "warning: {w}");
                    }
                }
            }
            i32::from(o.failed)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::IndexOutOfRange { .. } => 2,
                _ => 1,
            }
        }
    }
}

fn load(s: &Space) -> Result<(Database, SymmetricSpaceRecord)> {
    let db = Database::bundled()?;
    let rec = db.lookup(&s.name, s.param)?;
    Ok((db, rec))
}

fn phi_of(rec: &SymmetricSpaceRecord, idx: &PhiArg) -> Result<Phi> {
    Phi::from_one_based(rec.rank(), &idx.0)
}

fn dispatch(cmd: &Cmd) -> Result<Output> {
    match cmd {
        Cmd::Space(SpaceCmd::List) => {
            let list = Database::bundled()?.list();
            let mut t = String::new();
            for e in &list {
                let _ = writeln!(
                    t,
                    "{:<26} {:<5} dim {:<4} {}",
                    e.name,
                    // G2, F4, E6.. already carry the rank.
                    if e.family.ends_with(|c: char| c.is_ascii_digit()) {
                        e.family.clone()
                    } else {
                        format!("{}{}", e.family, e.rank)
                    },
                    e.dim_at_min_param.map(|d| d.to_string()).unwrap_or_else(|| "?".into()),
                    e.param.as_ref().map(|p| format!("n in {p}")).unwrap_or_default()
                );
            }
            Ok(Output::new(&list, t))
        }
        Cmd::Space(SpaceCmd::Info(s)) => {
            let (_, rec) = load(s)?;
            let info = rec.info();
            let mut t = String::new();
            let _ = writeln!(t, "{}  = {}/{}", info.name, info.group, info.isotropy);
            let _ = writeln!(t, "restricted roots  {}{} ({})", info.family, info.rank, info.signature);
            let _ = writeln!(t, "labeling          {}", info.labeling);
            let _ = writeln!(t, "dim M             {}", info.dim);
            let _ = writeln!(t, "dim k0            {}", info.dim_k0);
            let _ = writeln!(t, "dim K             {}", info.dim_isotropy);
            let _ = writeln!(t, "split             {}", info.split);
            let _ = writeln!(t, "positive roots:");
            for m in &info.multiplicities {
                let _ = writeln!(t, "  {:<14} {:<16} m = {}", m.root.to_string(), m.root.pretty(), m.mult);
            }
            if !info.notes.is_empty() {
                let _ = writeln!(t, "notes: {}", info.notes);
            }
            Ok(Output::new(&info, t))
        }
        Cmd::Parabolic { space, phi } => {
            let (_, rec) = load(space)?;
            match phi {
                Some(idx) => {
                    let d = langlands(&rec, &phi_of(&rec, idx)?)?;
                    let t = parabolic_text(&d);
                    let mut o = Output::new(&d, t);
                    if d.dim_z_phi.is_none() {
                        o.warnings.push("dim z_phi is not recorded for this space and phi".into());
                    }
                    Ok(o)
                }
                None => {
                    let all = enumerate_parabolics(&rec)?;
                    let mut t = String::from("phi          class  dim_n  dim_a  dim_l  dim_m  dim_k  dim_b  dim_z\n");
                    for e in &all {
                        let d = &e.data;
                        let _ = writeln!(
                            t,
                            "{:<12} {:>5}  {:>5}  {:>5}  {:>5}  {:>5}  {:>5}  {:>5}  {:>5}",
                            e.phi.to_string(),
                            e.class_id,
                            d.dim_n_phi,
                            d.dim_a_phi,
                            d.dim_l_phi,
                            d.dim_m_phi,
                            d.dim_k_phi,
                            d.dim_b_phi,
                            d.dim_z_phi.map(|z| z.to_string()).unwrap_or_else(|| "?".into())
                        );
                    }
                    Ok(Output::new(&all, t))
                }
            }
        }
        Cmd::Gradation(a) => {
            let (_, rec) = load(&a.space)?;
            let g = gradation(&rec, &phi_of(&rec, &a.phi)?)?;
            let t = format!(
                "level dims  {}\ndepth       {}\n",
                g.level_dims.iter().join(" "),
                g.depth
            );
            Ok(Output::new(&g, t))
        }
        Cmd::Boundary(a) => {
            let (db, rec) = load(&a.space)?;
            let b = parabolic::boundary_component_in(&db, &rec, &phi_of(&rec, &a.phi)?)?;
            let t = format!(
                "phi          {}\nsignature    {}\nrank         {}\ndim B_phi    {}\ndim F_phi    {}\nmatches      {}\n",
                b.phi,
                b.signature_text,
                b.rank,
                b.dim,
                b.dim_f,
                if b.name_candidates.is_empty() { "-".to_string() } else { b.name_candidates.join(", ") }
            );
            let mut o = Output::new(&b, t);
            if b.signature.components.len() > 1 {
                o.warnings.push("boundary component is reducible".into());
            }
            Ok(o)
        }
        Cmd::Foliations(s) => {
            let (_, rec) = load(s)?;
            let m = foliation_moduli(&rec);
            let t = format!(
                "H_l family     {}\nsymmetries     {}\nH_i classes    {}\n",
                m.a_family,
                m.automorphisms.join(", "),
                m.n_classes
                    .iter()
                    .map(|c| format!("{{{}}}", c.iter().join(",")))
                    .join(" ")
            );
            Ok(Output::new(&m, t))
        }
        Cmd::Extend { target, inner } => {
            let (_, rec) = load(&target.space)?;
            let phi = phi_of(&rec, &target.phi)?;
            let (desc, orbit) = parse_inner(&rec, &phi, inner)?;
            let orbit = orbit.ok_or_else(|| {
                Error::Descriptor("inner needs an `orbit` object with `singular_codim`".into())
            })?;
            let (ext, data) = canonical_extend(&rec, &phi, &desc, &orbit)?;
            let checks = intermediate_subsets(&phi)
                .iter()
                .map(|psi| extension_composition_check(&rec, &phi, psi, &desc.support))
                .collect::<Result<Vec<_>>>()?;
            let payload = json!({
                "descriptor": ext,
                "orbit": data,
                "composition_checks": checks,
            });
            let mut t = format!(
                "extension    {}\ncodim        {}\n",
                ext.support.tags().join(" + "),
                data.singular_codim
            );
            if checks.is_empty() {
                t.push_str("composition  inapplicable (no intermediate subset)\n");
            }
            for c in &checks {
                let _ = writeln!(
                    t,
                    "composition  {}: {}",
                    c.reason,
                    if c.holds == Some(true) { "equal" } else { "DIFFERENT" }
                );
            }
            let mut o = Output::new(payload, t);
            o.failed = checks.iter().any(|c| c.holds == Some(false));
            Ok(o)
        }
        Cmd::Equivalence {
            target,
            inner_a,
            inner_b,
            via_identity,
        } => {
            let (_, rec) = load(&target.space)?;
            let phi = phi_of(&rec, &target.phi)?;
            let (a, _) = parse_inner(&rec, &phi, inner_a)?;
            let (b, _) = parse_inner(&rec, &phi, inner_b)?;
            let v = extension_orbit_equivalence(&rec, &phi, &a.support, &b.support, *via_identity)?;
            let t = format!("{}\n  {}\n", v.result, v.reason);
            Ok(Output::new(&v, t))
        }
        Cmd::Nilpotent(a) => {
            let (_, rec) = load(&a.space)?;
            let c = nilpotent_candidates(&rec, &phi_of(&rec, &a.phi)?)?;
            let mut t = String::new();
            if c.is_empty() {
                t.push_str("no candidates (dim n1 < 2)\n");
            }
            for x in &c {
                let _ = writeln!(
                    t,
                    "{:<40} (i) {:<12} (ii) {:<12} => {}{}",
                    x.descriptor.key(),
                    x.condition_i.to_string(),
                    x.condition_ii.to_string(),
                    x.verdict,
                    x.duplicate_of
                        .as_ref()
                        .map(|d| format!("  [duplicate of {d}]"))
                        .unwrap_or_default()
                );
                let _ = writeln!(t, "    (i)  {}", x.reason_i);
                let _ = writeln!(t, "    (ii) {}", x.reason_ii);
            }
            Ok(Output::new(&c, t))
        }
        Cmd::Classify {
            space,
            diff_reference,
            no_dedup,
        } => {
            let (db, rec) = load(space)?;
            let rep = classify::classify_in(&db, &rec, &ClassifyOptions { dedup: !no_dedup })?;
            let mut t = report_text(&rep);
            let warnings = rep.warnings.clone();
            if *diff_reference {
                let corpus = classify::corpus_for(&rec.name)?;
                let d = classify::diff_against_reference(&rec, &rep, &corpus)?;
                t.push_str(&diff_text(&d));
                let failed = !d.is_empty();
                let mut o = Output::new(json!({ "report": rep, "diff": d }), t);
                o.warnings = warnings;
                o.failed = failed;
                return Ok(o);
            }
            let mut o = Output::new(&rep, t);
            o.warnings = warnings;
            Ok(o)
        }
        Cmd::Db(DbCmd::Validate { path }) => {
            let db = Database::load(path)?;
            let problems = db.validate();
            let count = db.templates().count();
            let mut t = format!("{} records\n", count);
            for p in &problems {
                let _ = writeln!(t, "problem: {p}");
            }
            if problems.is_empty() {
                t.push_str("ok\n");
            }
            let mut o = Output::new(json!({ "records": count, "problems": problems }), t);
            o.failed = !problems.is_empty();
            Ok(o)
        }
    }
}

fn parse_inner(rec: &SymmetricSpaceRecord, phi: &Phi, arg: &str) -> Result<(ActionDescriptor, Option<OrbitData>)> {
    if arg.trim() == "point" {
        let (d, o) = point_inner(rec, phi);
        return Ok((d, Some(o)));
    }
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?,
        None => arg.to_string(),
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Descriptor(format!("inner is not valid JSON: {e}")))?;
    let desc_v = v.get("descriptor").unwrap_or(&v);
    let desc = ActionDescriptor::from_json(rec.rank(), desc_v)?;
    let orbit = v
        .get("orbit")
        .map(|o| {
            serde_json::from_value::<OrbitData>(o.clone())
                .map_err(|e| Error::Descriptor(format!("bad orbit data: {e}")))
        })
        .transpose()?;
    Ok((desc, orbit))
}

fn parabolic_text(d: &ParabolicData) -> String {
    let mut t = String::new();
    let z = d.dim_z_phi.map(|z| z.to_string()).unwrap_or_else(|| "unknown".into());
    for (k, v) in [
        ("phi", d.phi.to_string()),
        ("dim n_phi", d.dim_n_phi.to_string()),
        ("dim a_phi", d.dim_a_phi.to_string()),
        ("dim a^phi", d.dim_a_upper_phi.to_string()),
        ("dim l_phi", d.dim_l_phi.to_string()),
        ("dim m_phi", d.dim_m_phi.to_string()),
        ("dim k_phi", d.dim_k_phi.to_string()),
        ("dim b_phi", d.dim_b_phi.to_string()),
        ("dim p_phi", d.dim_p_phi.to_string()),
        ("dim q_phi", d.dim_q_phi.to_string()),
        ("dim z_phi", z),
        ("minimal", d.is_minimal.to_string()),
        ("maximal", d.is_maximal.to_string()),
        ("Sigma_phi+", d.sigma_phi_positive.iter().map(|r| r.pretty()).join(", ")),
    ] {
        let _ = writeln!(t, "{k:<12} {v}");
    }
    t
}

fn report_text(r: &ClassificationReport) -> String {
    let mut t = format!(
        "{} (rank {}){}\n",
        r.space,
        r.rank,
        if r.complete { "" } else { "  [incomplete]" }
    );
    for (i, it) in r.items.iter().enumerate() {
        let _ = writeln!(
            t,
            "{:>3}. {:<11} {:<52} codim {}{}",
            i + 1,
            it.case,
            it.key,
            it.orbit.singular_codim,
            it.orbit
                .orbit
                .as_ref()
                .map(|o| format!("  orbit {o}"))
                .unwrap_or_default()
        );
        let _ = writeln!(t, "       h = {}", it.descriptor.support);
        if let Some(m) = &it.moduli {
            let _ = writeln!(t, "       moduli {m}");
        }
    }
    if !r.dedup_log.is_empty() {
        t.push_str("merged:\n");
        for d in &r.dedup_log {
            let _ = writeln!(t, "  {} -> {} ({})", d.removed, d.kept, d.via);
        }
    }
    if !r.advisory.is_empty() {
        t.push_str("undecided:\n");
        for a in &r.advisory {
            let _ = writeln!(t, "  {}  (i) {}  (ii) {}", a.key, a.condition_i, a.condition_ii);
        }
    }
    t
}

fn diff_text(d: &ReferenceDiff) -> String {
    let mut t = format!(
        "reference: {}\n  matched {} item(s), {} of {} group(s)\n",
        d.theorem, d.matched, d.groups_found, d.groups_expected
    );
    if d.is_empty() {
        t.push_str("  diff empty\n");
        return t;
    }
    for m in &d.missing {
        let _ = writeln!(t, "  missing        {} {}|{}", m.label, m.key, m.codim);
    }
    for e in &d.extra {
        let _ = writeln!(t, "  extra          {e}");
    }
    for e in &d.extra_congruent {
        let _ = writeln!(t, "  extra (congruent) {e}");
    }
    for p in &d.param_mismatch {
        let _ = writeln!(t, "  codim mismatch {}: expected {}, found {}", p.key, p.expected_codim, p.found_codim);
    }
    t
}
