//! Database of symmetric spaces of noncompact type.
//!
//! Records live in a stanza text file (see `docs/database-format.md`). A record
//! whose name contains `{…}` placeholders is a template over an integer
//! parameter `n` and is instantiated on lookup.

pub mod expr;
pub mod format;
pub mod signature;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, Family, Multiplicities, Phi, RootSystem, RootVector};

pub use expr::Expr;
pub use format::{Block, Line};
pub use signature::{
    decompose, signature, ComponentEmbedding, SignatureComponent, StructuralSignature,
};

pub const BUNDLED_DB: &str = include_str!("../../data/spaces.db");

/// Environment variable overriding the bundled database path.
pub const DB_ENV: &str = "COHOMO_DB";

/// Largest parameter tried when resolving instance names of templates.
const INSTANCE_SEARCH: i64 = 128;

/// Multiplicities `m_α` for every positive root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityMap {
    /// Per length class, longest first.
    pub per_class: Vec<u32>,
    values: BTreeMap<RootVector, u32>,
}

impl MultiplicityMap {
    pub fn uniform(sys: &RootSystem, m: u32) -> Self {
        let n = sys.length_classes().len();
        Self::from_classes(sys, &vec![m; n], &[])
    }

    pub fn from_classes(sys: &RootSystem, per_class: &[u32], overrides: &[(RootVector, u32)]) -> Self {
        let mut values: BTreeMap<RootVector, u32> = sys
            .positive_roots
            .iter()
            .map(|r| (r.clone(), per_class[sys.length_class(r)]))
            .collect();
        for (r, v) in overrides {
            values.insert(r.clone(), *v);
        }
        MultiplicityMap {
            per_class: per_class.to_vec(),
            values,
        }
    }

    pub fn get(&self, root: &RootVector) -> Option<u32> {
        self.values.get(&root.abs()).copied()
    }

    pub fn total(&self) -> u64 {
        self.values.values().map(|&v| v as u64).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RootVector, u32)> {
        self.values.iter().map(|(r, v)| (r, *v))
    }
}

impl Multiplicities for MultiplicityMap {
    fn mult(&self, root: &RootVector) -> u32 {
        self.get(root).unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamRange {
    pub lo: i64,
    pub hi: Option<i64>,
}

impl ParamRange {
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("bad parameter range `{s}`"),
        };
        let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = match hi.trim() {
            "" => None,
            h => Some(h.parse().map_err(|_| bad())?),
        };
        Ok(ParamRange { lo, hi })
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= self.lo && self.hi.is_none_or(|h| n <= h)
    }

    fn search_values(&self) -> impl Iterator<Item = i64> {
        let top = self.hi.unwrap_or(i64::MAX).min(self.lo + INSTANCE_SEARCH);
        self.lo..=top
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(h) => write!(f, "{}..{}", self.lo, h),
            None => write!(f, "{}..", self.lo),
        }
    }
}

/// A database stanza: either a single space or a template over `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceTemplate {
    pub comments: Vec<String>,
    pub name: String,
    pub group: String,
    pub isotropy: String,
    pub family: Family,
    pub rank: usize,
    pub mult: Vec<Expr>,
    pub mult_override: Vec<(RootVector, Expr)>,
    pub dim_k0: Expr,
    pub dim_isotropy: Option<Expr>,
    /// `dim 𝔷_Φ` for selected `Φ` (1-based indices).
    pub center: Vec<(Vec<usize>, Expr)>,
    pub param: Option<ParamRange>,
    pub notes: Option<String>,
}

const KNOWN_KEYS: [&str; 12] = [
    "name",
    "group",
    "isotropy",
    "family",
    "rank",
    "mult",
    "mult_override",
    "dim_k0",
    "dim_isotropy",
    "center",
    "param",
    "notes",
];

impl SpaceTemplate {
    pub fn from_block(b: &Block) -> Result<Self> {
        let at = |e: Error| match e {
            Error::Parse { msg, .. } => Error::Parse {
                line: b.line_no,
                msg,
            },
            other => other,
        };
        for (k, _) in b.fields() {
            if !KNOWN_KEYS.contains(&k) {
                return Err(at(Error::Parse {
                    line: 0,
                    msg: format!("unknown field `{k}`"),
                }));
            }
            if b.get_all(k).len() > 1 {
                return Err(at(Error::Parse {
                    line: 0,
                    msg: format!("duplicate field `{k}`"),
                }));
            }
        }
        let name = b.require("name")?.to_string();
        let family: Family = b.require("family")?.parse().map_err(|_| Error::Parse {
            line: b.line_no,
            msg: format!("unknown family `{}`", b.get("family").unwrap_or("")),
        })?;
        let rank = b.require("rank")?.parse::<usize>().map_err(|_| Error::Parse {
            line: b.line_no,
            msg: "rank must be a positive integer".into(),
        })?;
        let mult = b
            .require("mult")?
            .split(',')
            .map(Expr::parse)
            .collect::<Result<Vec<_>>>()
            .map_err(at)?;
        let mult_override = match b.get("mult_override") {
            None => Vec::new(),
            Some(s) => s
                .split(';')
                .map(|entry| parse_override(entry.trim()))
                .collect::<Result<Vec<_>>>()
                .map_err(at)?,
        };
        let center = match b.get("center") {
            None => Vec::new(),
            Some(s) => s
                .split(';')
                .map(|entry| parse_center(entry.trim()))
                .collect::<Result<Vec<_>>>()
                .map_err(at)?,
        };
        Ok(SpaceTemplate {
            comments: b.comments(),
            group: b.get("group").unwrap_or("").to_string(),
            isotropy: b.get("isotropy").unwrap_or("").to_string(),
            family,
            rank,
            mult,
            mult_override,
            dim_k0: Expr::parse(b.require("dim_k0")?).map_err(at)?,
            dim_isotropy: b.get("dim_isotropy").map(Expr::parse).transpose().map_err(at)?,
            center,
            param: b.get("param").map(ParamRange::parse).transpose().map_err(at)?,
            notes: b.get("notes").map(str::to_string),
            name,
        })
    }

    pub fn to_block(&self) -> Block {
        let mut b = Block::new();
        for c in &self.comments {
            b.comment(c);
        }
        b.field("name", &self.name);
        if !self.group.is_empty() {
            b.field("group", &self.group);
        }
        if !self.isotropy.is_empty() {
            b.field("isotropy", &self.isotropy);
        }
        b.field("family", self.family.to_string());
        b.field("rank", self.rank.to_string());
        b.field(
            "mult",
            self.mult.iter().map(|e| e.source()).collect::<Vec<_>>().join(","),
        );
        if !self.mult_override.is_empty() {
            let s = self
                .mult_override
                .iter()
                .map(|(r, e)| format!("{r}:{e}"))
                .collect::<Vec<_>>()
                .join(";");
            b.field("mult_override", s);
        }
        b.field("dim_k0", self.dim_k0.source());
        if let Some(d) = &self.dim_isotropy {
            b.field("dim_isotropy", d.source());
        }
        if !self.center.is_empty() {
            let s = self
                .center
                .iter()
                .map(|(phi, e)| {
                    let p = phi.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("+");
                    format!("{p}:{e}")
                })
                .collect::<Vec<_>>()
                .join(";");
            b.field("center", s);
        }
        if let Some(p) = &self.param {
            b.field("param", p.to_string());
        }
        if let Some(n) = &self.notes {
            b.field("notes", n);
        }
        b
    }

    pub fn is_parametric(&self) -> bool {
        self.param.is_some()
    }

    /// Instantiated display names: the canonical name and the `group/isotropy` alias.
    fn names_at(&self, n: Option<i64>) -> Result<(String, Option<String>)> {
        let name = expr::instantiate(&self.name, n)?;
        let alias = if self.group.is_empty() || self.isotropy.is_empty() {
            None
        } else {
            Some(format!(
                "{}/{}",
                expr::instantiate(&self.group, n)?,
                expr::instantiate(&self.isotropy, n)?
            ))
        };
        Ok((name, alias))
    }

    pub fn instantiate(&self, n: Option<i64>) -> Result<SymmetricSpaceRecord> {
        let invalid = |msg: String| Error::InvalidRecord {
            name: self.name.clone(),
            msg,
        };
        let n = match (&self.param, n) {
            (None, _) => None,
            (Some(r), Some(v)) if r.contains(v) => Some(v),
            (Some(r), Some(v)) => {
                return Err(Error::Parameter {
                    name: self.name.clone(),
                    msg: format!("n = {v} is outside the range {r}"),
                })
            }
            (Some(r), None) => {
                return Err(Error::Parameter {
                    name: self.name.clone(),
                    msg: format!("a parameter n in {r} is required"),
                })
            }
        };
        let system = build_root_system(self.family, self.rank)?;
        let classes = system.length_classes().len();
        if self.mult.len() != classes {
            return Err(invalid(format!(
                "{} has {} length class(es) but mult lists {}",
                self.family,
                classes,
                self.mult.len()
            )));
        }
        let positive = |e: &Expr, what: &str| -> Result<u32> {
            let v = e.eval(n)?;
            if v < 1 {
                return Err(invalid(format!("{what} `{e}` evaluates to {v} < 1")));
            }
            u32::try_from(v).map_err(|_| invalid(format!("{what} too large")))
        };
        let per_class = self
            .mult
            .iter()
            .map(|e| positive(e, "multiplicity"))
            .collect::<Result<Vec<_>>>()?;
        let mut overrides = Vec::new();
        for (r, e) in &self.mult_override {
            if r.rank() != self.rank || system.position(r).is_none() {
                return Err(invalid(format!("override root {r} is not a positive root")));
            }
            overrides.push((r.clone(), positive(e, "override")?));
        }
        let mult = MultiplicityMap::from_classes(&system, &per_class, &overrides);
        let dim_k0 = self.dim_k0.eval(n)?;
        if dim_k0 < 0 {
            return Err(invalid(format!("dim_k0 evaluates to {dim_k0}")));
        }
        let dim_k0 = dim_k0 as u64;
        let dim_isotropy = match &self.dim_isotropy {
            None => None,
            Some(e) => {
                let d = e.eval(n)?;
                let want = dim_k0 + mult.total();
                if d < 0 || d as u64 != want {
                    return Err(invalid(format!(
                        "dim_isotropy {d} disagrees with dim_k0 + Σ m_α = {want}"
                    )));
                }
                Some(d as u64)
            }
        };
        let mut center = Vec::new();
        for (idx, e) in &self.center {
            let phi = Phi::from_one_based(self.rank, idx)?;
            let v = e.eval(n)?;
            if v < 0 {
                return Err(invalid(format!("center dimension {v} < 0")));
            }
            center.push((phi, v as u64));
        }
        let (name, alias) = self.names_at(n)?;
        Ok(SymmetricSpaceRecord {
            name,
            group_name: alias
                .as_ref()
                .map(|_| expr::instantiate(&self.group, n))
                .transpose()?
                .unwrap_or_default(),
            isotropy_name: alias
                .as_ref()
                .map(|_| expr::instantiate(&self.isotropy, n))
                .transpose()?
                .unwrap_or_default(),
            template: self.name.clone(),
            param: n,
            system,
            mult,
            dim_k0,
            dim_isotropy,
            center,
            notes: self.notes.clone().unwrap_or_default(),
        })
    }

    /// Signature of the whole space at parameter `n`, without building the
    /// full record when there are no overrides.
    fn signature_at(&self, n: Option<i64>, shape: &RootSystem) -> Option<StructuralSignature> {
        if !self.mult_override.is_empty() {
            let rec = self.instantiate(n).ok()?;
            return Some(rec.signature());
        }
        let per_class: Vec<u32> = self
            .mult
            .iter()
            .map(|e| e.eval(n).ok().and_then(|v| u32::try_from(v).ok()).filter(|&v| v >= 1))
            .collect::<Option<_>>()?;
        if per_class.len() != shape.length_classes().len() {
            return None;
        }
        let mult = MultiplicityMap::from_classes(shape, &per_class, &[]);
        Some(signature(shape, &mult, &Phi::full(shape.rank)))
    }
}

fn parse_override(s: &str) -> Result<(RootVector, Expr)> {
    let bad = || Error::Parse {
        line: 0,
        msg: format!("bad mult_override entry `{s}` (expected `[c1,…,cr]:m`)"),
    };
    let (root, val) = s.rsplit_once(':').ok_or_else(bad)?;
    let inner = root
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(bad)?;
    let coeffs = inner
        .split(',')
        .map(|c| c.trim().parse::<i32>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    Ok((RootVector(coeffs), Expr::parse(val)?))
}

fn parse_center(s: &str) -> Result<(Vec<usize>, Expr)> {
    let bad = || Error::Parse {
        line: 0,
        msg: format!("bad center entry `{s}` (expected `i+j:d`)"),
    };
    let (phi, val) = s.split_once(':').ok_or_else(bad)?;
    let idx = phi
        .split('+')
        .map(|i| i.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    Ok((idx, Expr::parse(val)?))
}

/// A fully instantiated symmetric space.
#[derive(Clone, Debug)]
pub struct SymmetricSpaceRecord {
    pub name: String,
    pub group_name: String,
    pub isotropy_name: String,
    /// Name of the stanza the record came from.
    pub template: String,
    pub param: Option<i64>,
    pub system: RootSystem,
    pub mult: MultiplicityMap,
    pub dim_k0: u64,
    pub dim_isotropy: Option<u64>,
    pub center: Vec<(Phi, u64)>,
    pub notes: String,
}

impl SymmetricSpaceRecord {
    pub fn rank(&self) -> usize {
        self.system.rank
    }

    /// `𝔨₀ = 0` exactly for split real forms.
    pub fn is_split(&self) -> bool {
        self.dim_k0 == 0
    }

    pub fn dim_k(&self) -> u64 {
        self.dim_k0 + self.mult.total()
    }

    pub fn signature(&self) -> StructuralSignature {
        signature(&self.system, &self.mult, &Phi::full(self.rank()))
    }

    /// Recorded `dim 𝔷_Φ`, if any.
    pub fn recorded_center(&self, phi: &Phi) -> Option<u64> {
        self.center.iter().find(|(p, _)| p == phi).map(|(_, d)| *d)
    }
}

/// `dim M = r + Σ_{α∈Σ⁺} m_α`.
pub fn dim_space(rec: &SymmetricSpaceRecord) -> u64 {
    rec.rank() as u64 + rec.mult.total()
}

#[derive(Serialize)]
pub struct RecordInfo {
    pub name: String,
    pub group: String,
    pub isotropy: String,
    pub family: String,
    pub rank: usize,
    pub param: Option<i64>,
    pub dim: u64,
    pub dim_k0: u64,
    pub dim_isotropy: u64,
    pub split: bool,
    pub mult_per_class: Vec<u32>,
    pub multiplicities: Vec<RootMult>,
    pub signature: String,
    pub labeling: String,
    pub notes: String,
}

#[derive(Serialize)]
pub struct RootMult {
    pub root: RootVector,
    pub mult: u32,
}

/// Text describing the simple-root labels used for each family.
pub fn labeling_note(f: Family) -> &'static str {
    match f {
        Family::B => "alpha_r is short; in B2, alpha_1 is long and the highest root is alpha_1+2alpha_2",
        Family::C => "alpha_r is long",
        Family::G2 => "alpha_1 is short; highest root 3alpha_1+2alpha_2",
        Family::F4 => "alpha_1, alpha_2 long; alpha_3, alpha_4 short",
        Family::BC => "B_r labels (alpha_r short) plus 2alpha for each short alpha",
        Family::D => "alpha_(r-2) branches to alpha_(r-1) and alpha_r",
        Family::E6 | Family::E7 | Family::E8 => "alpha_2 attached to alpha_4; chain alpha_1-alpha_3-alpha_4-...",
        Family::A => "chain alpha_1-...-alpha_r",
    }
}

impl SymmetricSpaceRecord {
    pub fn info(&self) -> RecordInfo {
        RecordInfo {
            name: self.name.clone(),
            group: self.group_name.clone(),
            isotropy: self.isotropy_name.clone(),
            family: self.system.family.to_string(),
            rank: self.rank(),
            param: self.param,
            dim: dim_space(self),
            dim_k0: self.dim_k0,
            dim_isotropy: self.dim_k(),
            split: self.is_split(),
            mult_per_class: self.mult.per_class.clone(),
            multiplicities: self
                .system
                .positive_roots
                .iter()
                .map(|r| RootMult {
                    root: r.clone(),
                    mult: self.mult.mult(r),
                })
                .collect(),
            signature: self.signature().to_string(),
            labeling: labeling_note(self.system.family).to_string(),
            notes: self.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Comment(Vec<String>),
    Space(SpaceTemplate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Database {
    pub entries: Vec<Entry>,
}

pub(crate) fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| !c.is_whitespace())
        .flat_map(|c| c.to_lowercase())
        .collect::<String>()
        .replace('ᵒ', "o")
        .replace("soo(", "so(")
}

impl Database {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut seen = BTreeSet::new();
        for b in format::parse(text)? {
            if b.is_comment_only() {
                entries.push(Entry::Comment(b.comments()));
                continue;
            }
            let t = SpaceTemplate::from_block(&b)?;
            if !seen.insert(normalize(&t.name)) {
                return Err(Error::Parse {
                    line: b.line_no,
                    msg: format!("duplicate record name `{}`", t.name),
                });
            }
            entries.push(Entry::Space(t));
        }
        Ok(Database { entries })
    }

    pub fn serialize(&self) -> String {
        let blocks: Vec<Block> = self
            .entries
            .iter()
            .map(|e| match e {
                Entry::Comment(lines) => {
                    let mut b = Block::new();
                    for l in lines {
                        b.comment(l);
                    }
                    b
                }
                Entry::Space(t) => t.to_block(),
            })
            .collect();
        format::serialize(&blocks)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The bundled database, or the file named by `COHOMO_DB`.
    pub fn bundled() -> Result<Self> {
        match std::env::var_os(DB_ENV) {
            Some(p) if !p.is_empty() => Self::load(Path::new(&p)),
            _ => Self::parse(BUNDLED_DB),
        }
    }

    pub fn templates(&self) -> impl Iterator<Item = &SpaceTemplate> {
        self.entries.iter().filter_map(|e| match e {
            Entry::Space(t) => Some(t),
            _ => None,
        })
    }

    pub fn lookup(&self, name: &str, param: Option<i64>) -> Result<SymmetricSpaceRecord> {
        let key = normalize(name);
        // Exact names and aliases of fixed records take precedence.
        for t in self.templates().filter(|t| !t.is_parametric()) {
            let (n, alias) = t.names_at(None)?;
            if normalize(&n) == key
                || alias.as_deref().map(normalize).as_deref() == Some(key.as_str())
                || normalize(&t.group) == key
            {
                return t.instantiate(None);
            }
        }
        for t in self.templates().filter(|t| t.is_parametric()) {
            if normalize(&t.name) == key {
                return t.instantiate(param);
            }
        }
        for t in self.templates().filter(|t| t.is_parametric()) {
            let range = t.param.as_ref().expect("parametric");
            for n in range.search_values() {
                let (inst, alias) = t.names_at(Some(n))?;
                if normalize(&inst) == key
                    || alias.as_deref().map(normalize).as_deref() == Some(key.as_str())
                {
                    if let Some(p) = param.filter(|&p| p != n) {
                        return Err(Error::Parameter {
                            name: name.to_string(),
                            msg: format!("name fixes n = {n} but --param gave {p}"),
                        });
                    }
                    return t.instantiate(Some(n));
                }
            }
        }
        Err(Error::SpaceNotFound {
            name: name.to_string(),
            near: self.near_matches(name),
        })
    }

    fn near_matches(&self, name: &str) -> Vec<String> {
        let key = normalize(name);
        let mut scored: Vec<(f64, String)> = Vec::new();
        for t in self.templates() {
            let lo = t.param.as_ref().map(|r| r.lo);
            let mut cands = vec![t.name.clone()];
            if let Ok((inst, alias)) = t.names_at(lo) {
                cands.push(inst);
                cands.extend(alias);
            }
            let best = cands
                .iter()
                .map(|c| {
                    let c = normalize(c);
                    let s = strsim::normalized_levenshtein(&key, &c);
                    if !key.is_empty() && (c.contains(&key) || key.contains(&c)) {
                        s.max(0.75)
                    } else {
                        s
                    }
                })
                .fold(0.0, f64::max);
            if best >= 0.4 {
                scored.push((best, t.name.clone()));
            }
        }
        scored.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        scored.into_iter().take(3).map(|(_, n)| n).collect()
    }

    /// All record names (fixed records and template instances) whose whole-space
    /// signature equals `sig`, sorted and deduplicated.
    pub fn match_signature(&self, sig: &StructuralSignature) -> Vec<String> {
        let mut out = BTreeSet::new();
        if !sig.is_irreducible() {
            return Vec::new();
        }
        let c = &sig.components[0];
        for t in self.templates() {
            if t.family != c.family || t.rank != c.rank {
                continue;
            }
            let Ok(shape) = build_root_system(t.family, t.rank) else {
                continue;
            };
            let values: Vec<Option<i64>> = match &t.param {
                None => vec![None],
                Some(r) => r.search_values().map(Some).collect(),
            };
            for n in values {
                if t.signature_at(n, &shape).as_ref() == Some(sig) {
                    if let Ok((inst, _)) = t.names_at(n) {
                        out.insert(inst);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Structural checks on every record; returns human readable problems.
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        for t in self.templates() {
            let values: Vec<Option<i64>> = match &t.param {
                None => vec![None],
                Some(r) => {
                    let top = r.hi.unwrap_or(r.lo + 4).min(r.lo + 4);
                    (r.lo..=top).map(Some).collect()
                }
            };
            if t.param.is_none() && t.name.contains('{') {
                problems.push(format!("{}: placeholders without param=", t.name));
                continue;
            }
            for n in values {
                match t.instantiate(n) {
                    Err(e) => problems.push(format!("{}: {e}", t.name)),
                    Ok(rec) => {
                        if dim_space(&rec) == 0 {
                            problems.push(format!("{}: dimension is zero", rec.name));
                        }
                    }
                }
            }
        }
        problems
    }

    /// One line per record: name, family/rank, dimension (at the lowest parameter).
    pub fn list(&self) -> Vec<ListEntry> {
        self.templates()
            .map(|t| {
                let lo = t.param.as_ref().map(|r| r.lo);
                let dim = t.instantiate(lo).ok().map(|r| dim_space(&r));
                ListEntry {
                    name: t.name.clone(),
                    group: t.group.clone(),
                    isotropy: t.isotropy.clone(),
                    family: t.family.to_string(),
                    rank: t.rank,
                    param: t.param.as_ref().map(|p| p.to_string()),
                    dim_at_min_param: dim,
                }
            })
            .collect()
    }
}

#[derive(Serialize)]
pub struct ListEntry {
    pub name: String,
    pub group: String,
    pub isotropy: String,
    pub family: String,
    pub rank: usize,
    pub param: Option<String>,
    pub dim_at_min_param: Option<u64>,
}

pub fn lookup(name: &str) -> Result<SymmetricSpaceRecord> {
    Database::bundled()?.lookup(name, None)
}

pub fn match_signature(sig: &StructuralSignature) -> Vec<String> {
    Database::parse(BUNDLED_DB)
        .map(|db| db.match_signature(sig))
        .unwrap_or_default()
}
