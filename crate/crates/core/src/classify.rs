//! Assemble the full list of cohomogeneity one actions for a space and compare
//! it with a shipped reference list.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::actions::{
    canonical_extend, foliation_a_family, foliation_descriptor, foliation_moduli, identify,
    nilpotent_candidates, reductive_catalog, APart, ActionDescriptor, Check, Foliation, OrbitData,
    Part, SpaceKind, Support,
};
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Q};
use crate::rootsys::{diagram_automorphisms, DiagramAutomorphism, Phi};
use crate::spacedb::{self, decompose, format, ComponentEmbedding, Database, SymmetricSpaceRecord};

pub const BUNDLED_REFERENCE: &str = include_str!("../data/reference.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mechanism {
    FoliationA,
    FoliationN,
    Reductive,
    Extension,
    Nilpotent,
}

impl Mechanism {
    /// Position in the case tree of the structure theorem.
    pub fn case(self) -> &'static str {
        match self {
            Mechanism::FoliationA => "(1)(i)",
            Mechanism::FoliationN => "(1)(ii)",
            Mechanism::Reductive => "(2)(i)",
            Mechanism::Extension => "(2)(ii)(a)",
            Mechanism::Nilpotent => "(2)(ii)(b)",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifiedItem {
    pub key: String,
    pub mechanism: Mechanism,
    pub case: &'static str,
    pub descriptor: ActionDescriptor,
    pub orbit: OrbitData,
    /// Parameter space, for items standing for a family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub moduli: Option<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DedupEntry {
    pub removed: String,
    pub kept: String,
    pub via: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdvisoryEntry {
    pub key: String,
    pub condition_i: Check,
    pub reason_i: String,
    pub condition_ii: Check,
    pub reason_ii: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RejectedEntry {
    pub key: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub space: String,
    pub kind: String,
    pub rank: usize,
    /// False when some catalogue or boundary classification is missing or a
    /// candidate could not be decided.
    pub complete: bool,
    pub items: Vec<ClassifiedItem>,
    pub dedup_log: Vec<DedupEntry>,
    /// Nilpotent candidates whose conditions could not be decided.
    pub advisory: Vec<AdvisoryEntry>,
    pub rejected: Vec<RejectedEntry>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub dedup: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { dedup: true }
    }
}

pub fn classify(rec: &SymmetricSpaceRecord) -> Result<ClassificationReport> {
    classify_in(&Database::bundled()?, rec, &ClassifyOptions::default())
}

pub fn classify_in(
    db: &Database,
    rec: &SymmetricSpaceRecord,
    opts: &ClassifyOptions,
) -> Result<ClassificationReport> {
    let mut memo = HashMap::new();
    run(db, rec, opts, &mut memo)
}

pub fn classify_rank_one(rec: &SymmetricSpaceRecord) -> Result<ClassificationReport> {
    if rec.rank() != 1 {
        return Err(Error::Parameter {
            name: rec.name.clone(),
            msg: format!("rank-one classification needs rank 1, got {}", rec.rank()),
        });
    }
    classify(rec)
}

fn item(mechanism: Mechanism, descriptor: ActionDescriptor, orbit: OrbitData) -> ClassifiedItem {
    ClassifiedItem {
        key: descriptor.key(),
        mechanism,
        case: mechanism.case(),
        descriptor,
        orbit,
        moduli: None,
        note: String::new(),
    }
}

fn run(
    db: &Database,
    rec: &SymmetricSpaceRecord,
    opts: &ClassifyOptions,
    memo: &mut HashMap<String, ClassificationReport>,
) -> Result<ClassificationReport> {
    let r = rec.rank();
    let kind = identify(rec);
    let mut items = Vec::new();
    let mut warnings = Vec::new();
    let mut complete = true;
    let mut dedup_log = Vec::new();
    let mut advisory = Vec::new();
    let mut rejected = Vec::new();

    let moduli = foliation_moduli(rec);
    let mut fam = item(Mechanism::FoliationA, foliation_a_family(rec), OrbitData::foliation());
    fam.moduli = Some(moduli.a_family.clone());
    fam.note = "all orbits are congruent".into();
    items.push(fam);
    for i in 0..r {
        let mut it = item(
            Mechanism::FoliationN,
            foliation_descriptor(rec, &Foliation::N(i))?,
            OrbitData::foliation(),
        );
        it.note = "exactly one minimal orbit".into();
        items.push(it);
    }

    let (catalog, catalog_complete) = reductive_catalog(rec);
    if !catalog_complete {
        complete = false;
        warnings.push(format!(
            "no complete catalogue of reductive actions with a totally geodesic singular orbit on {}",
            rec.name
        ));
    }
    for e in catalog {
        let mut it = item(Mechanism::Reductive, e.descriptor, e.orbit);
        it.note = e.source;
        items.push(it);
    }

    let maximal: Vec<Phi> = if r == 1 {
        vec![Phi::empty(1)]
    } else {
        (0..r).map(|j| Phi::maximal(r, j)).collect()
    };

    if r >= 2 {
        for phi in &maximal {
            extensions(db, rec, phi, opts, memo, &mut items, &mut warnings, &mut complete)?;
        }
    }

    for phi in &maximal {
        for c in nilpotent_candidates(rec, phi)? {
            let key = c.descriptor.key();
            match c.verdict {
                Check::Pass => match (&c.duplicate_of, opts.dedup) {
                    (Some(d), true) => dedup_log.push(DedupEntry {
                        removed: key,
                        kept: d.clone(),
                        via: "orbit equivalence recorded by the nilpotent checker".into(),
                    }),
                    _ => {
                        let mut it = item(Mechanism::Nilpotent, c.descriptor, c.orbit);
                        it.note = c.note;
                        if let Some(d) = c.duplicate_of {
                            it.note = format!("orbit equivalent to {d}");
                        }
                        items.push(it);
                    }
                },
                Check::Undetermined => advisory.push(AdvisoryEntry {
                    key,
                    condition_i: c.condition_i,
                    reason_i: c.reason_i,
                    condition_ii: c.condition_ii,
                    reason_ii: c.reason_ii,
                }),
                Check::Fail => rejected.push(RejectedEntry {
                    key,
                    reason: if c.condition_i == Check::Fail { c.reason_i } else { c.reason_ii },
                }),
            }
        }
    }
    if !advisory.is_empty() {
        complete = false;
        warnings.push(format!(
            "{} nilpotent candidate(s) could not be decided; see the advisory section",
            advisory.len()
        ));
    }

    if opts.dedup {
        let auts = diagram_automorphisms(&rec.system, &rec.mult);
        items = dedup(items, &auts, &mut dedup_log);
    }

    Ok(ClassificationReport {
        space: rec.name.clone(),
        kind: kind.to_string(),
        rank: r,
        complete,
        items,
        dedup_log,
        advisory,
        rejected,
        warnings,
    })
}

#[allow(clippy::too_many_arguments)]
fn extensions(
    db: &Database,
    rec: &SymmetricSpaceRecord,
    phi: &Phi,
    opts: &ClassifyOptions,
    memo: &mut HashMap<String, ClassificationReport>,
    items: &mut Vec<ClassifiedItem>,
    warnings: &mut Vec<String>,
    complete: &mut bool,
) -> Result<()> {
    let comps = decompose(&rec.system, &rec.mult, phi);
    let sig = spacedb::signature(&rec.system, &rec.mult, phi);
    if comps.len() != 1 {
        *complete = false;
        warnings.push(format!(
            "boundary component for phi = {phi} is reducible ({sig}); actions on it are not classified"
        ));
        return Ok(());
    }
    let Some(bname) = db.match_signature(&sig).into_iter().next() else {
        *complete = false;
        warnings.push(format!("no database space matches the boundary component {sig} for phi = {phi}"));
        return Ok(());
    };
    let sub = match memo.get(&bname) {
        Some(s) => s.clone(),
        None => {
            let brec = db.lookup(&bname, None)?;
            let s = run(db, &brec, opts, memo)?;
            memo.insert(bname.clone(), s.clone());
            s
        }
    };
    if !sub.complete {
        *complete = false;
        warnings.push(format!("classification of the boundary component {bname} (phi = {phi}) is incomplete"));
    }
    let k0_part = match db.lookup(&bname, None) {
        Ok(b) if b.dim_k0 == rec.dim_k0 => Part::Full,
        _ => Part::Partial,
    };
    for it in sub.items.iter().filter(|it| it.orbit.singular_codim > 0) {
        let inner = ActionDescriptor {
            kind: it.descriptor.kind.clone(),
            support: embed_support(&comps[0], &it.descriptor.support, rec.rank(), k0_part),
        };
        let (desc, mut orbit) = canonical_extend(rec, phi, &inner, &it.orbit)?;
        let mut ext = item(Mechanism::Extension, desc, OrbitData::foliation());
        orbit.orbit = None;
        ext.orbit = orbit;
        ext.note = format!(
            "canonical extension from B_phi = {bname} of {}{}",
            it.key,
            it.orbit
                .orbit
                .as_ref()
                .map(|o| format!(" (singular orbit {o})"))
                .unwrap_or_default()
        );
        items.push(ext);
    }
    Ok(())
}

/// Carry a support written in the labels of a boundary component into `Σ`.
pub fn embed_support(emb: &ComponentEmbedding, local: &Support, rank: usize, k0_part: Part) -> Support {
    let mut s = Support::empty(rank);
    match &local.a {
        APart::Sub(sub) => {
            let rows = sub
                .rows()
                .iter()
                .map(|row| {
                    let mut v = vec![Q::zero(); rank];
                    for (k, x) in row.iter().enumerate() {
                        v[emb.indices[k]] = *x;
                    }
                    v
                })
                .collect();
            s.add_a(&Subspace::from_rows(rank, rows));
        }
        APart::MinusGenericLine => s.a = APart::MinusGenericLine,
    }
    if let Some(p) = local.k0 {
        s.add_k0(if p == Part::Full { k0_part } else { Part::Partial });
    }
    for r in &local.k {
        s.add_k(emb.to_ambient(r, rank));
    }
    for (r, p) in &local.g {
        s.add_g(emb.to_ambient(r, rank), *p);
    }
    s.opaque = local.opaque.clone();
    s
}

/// Drop items congruent to an earlier one under a diagram automorphism.
fn dedup(items: Vec<ClassifiedItem>, auts: &[DiagramAutomorphism], log: &mut Vec<DedupEntry>) -> Vec<ClassifiedItem> {
    let mut kept: Vec<ClassifiedItem> = Vec::new();
    for it in items {
        let hit = kept.iter().find_map(|k| {
            if k.orbit.singular_codim != it.orbit.singular_codim {
                return None;
            }
            auts.iter()
                .find(|s| it.descriptor.support.permute(s) == k.descriptor.support)
                .map(|s| (k.key.clone(), s.to_string()))
        });
        match hit {
            Some((kept_key, via)) => log.push(DedupEntry {
                removed: it.key,
                kept: kept_key,
                via,
            }),
            None => kept.push(it),
        }
    }
    kept
}

// ---------------------------------------------------------------------------
// Reference corpora

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceItem {
    pub label: String,
    pub key: String,
    pub codim: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReferenceCorpus {
    pub space: String,
    pub theorem: String,
    pub groups: usize,
    pub items: Vec<ReferenceItem>,
}

pub fn parse_corpora(text: &str) -> Result<Vec<ReferenceCorpus>> {
    let mut out = Vec::new();
    for b in format::parse(text)? {
        if b.is_comment_only() {
            continue;
        }
        let bad = |msg: String| Error::Parse { line: b.line_no, msg };
        let groups: usize = b
            .require("groups")?
            .parse()
            .map_err(|_| bad("groups= must be a number".into()))?;
        let mut items = Vec::new();
        for v in b.get_all("item") {
            let parts: Vec<&str> = v.split('|').map(str::trim).collect();
            let [label, key, codim] = parts.as_slice() else {
                return Err(bad(format!("item `{v}` must be label|key|codim")));
            };
            items.push(ReferenceItem {
                label: label.to_string(),
                key: key.to_string(),
                codim: codim.parse().map_err(|_| bad(format!("bad codim in `{v}`")))?,
            });
        }
        let labels: BTreeSet<&str> = items.iter().map(|i| i.label.as_str()).collect();
        if labels.len() != groups {
            return Err(bad(format!("groups={groups} but {} distinct labels", labels.len())));
        }
        out.push(ReferenceCorpus {
            space: b.require("space")?.to_string(),
            theorem: b.get("theorem").unwrap_or_default().to_string(),
            groups,
            items,
        });
    }
    Ok(out)
}

pub fn reference_corpora() -> Vec<ReferenceCorpus> {
    parse_corpora(BUNDLED_REFERENCE).expect("bundled reference corpora parse")
}

pub fn corpus_for(name: &str) -> Result<ReferenceCorpus> {
    let key = spacedb::normalize(name);
    reference_corpora()
        .into_iter()
        .find(|c| spacedb::normalize(&c.space) == key)
        .ok_or_else(|| Error::NoCorpus(name.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct ParamMismatch {
    pub key: String,
    pub expected_codim: u32,
    pub found_codim: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReferenceDiff {
    pub space: String,
    pub theorem: String,
    pub matched: usize,
    /// Report keys matched to a reference item only after a diagram symmetry.
    pub matched_up_to_congruence: Vec<String>,
    pub missing: Vec<ReferenceItem>,
    pub extra: Vec<String>,
    /// Report items congruent to a reference item that is already matched.
    pub extra_congruent: Vec<String>,
    pub param_mismatch: Vec<ParamMismatch>,
    pub groups_expected: usize,
    pub groups_found: usize,
}

impl ReferenceDiff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty()
            && self.extra.is_empty()
            && self.extra_congruent.is_empty()
            && self.param_mismatch.is_empty()
    }
}

fn parse_phi_set(s: &str, rank: usize) -> Option<Phi> {
    let body = s.strip_prefix('{')?.strip_suffix('}')?;
    let idx: Vec<usize> = if body.is_empty() {
        Vec::new()
    } else {
        body.split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>()?
    };
    Phi::from_one_based(rank, &idx).ok()
}

/// Smallest image of a key under the diagram automorphisms (only the parts
/// of a key that name simple roots are moved).
pub fn canonical_key(rec: &SymmetricSpaceRecord, key: &str) -> String {
    let auts = diagram_automorphisms(&rec.system, &rec.mult);
    let r = rec.rank();
    if let Some(i) = key.strip_prefix("foliation-n:").and_then(|i| i.parse::<usize>().ok()) {
        if (1..=r).contains(&i) {
            let m = auts.iter().map(|s| s.apply_index(i - 1)).min().unwrap_or(i - 1);
            return format!("foliation-n:{}", m + 1);
        }
    }
    for prefix in ["extension:", "nilpotent:"] {
        if let Some(rest) = key.strip_prefix(prefix) {
            if let Some(close) = rest.find('}') {
                if let Some(phi) = parse_phi_set(&rest[..=close], r) {
                    let m = auts.iter().map(|s| s.apply_phi(&phi)).min().unwrap_or(phi);
                    return format!("{prefix}{m}{}", &rest[close + 1..]);
                }
            }
        }
    }
    key.to_string()
}

pub fn diff_against_reference(
    rec: &SymmetricSpaceRecord,
    report: &ClassificationReport,
    corpus: &ReferenceCorpus,
) -> Result<ReferenceDiff> {
    if spacedb::normalize(&report.space) != spacedb::normalize(&corpus.space) {
        return Err(Error::SpaceMismatch {
            report: report.space.clone(),
            corpus: corpus.space.clone(),
        });
    }
    let mut used = vec![false; corpus.items.len()];
    let mut rest = Vec::new();
    for it in &report.items {
        let hit = corpus
            .items
            .iter()
            .enumerate()
            .position(|(i, c)| !used[i] && c.key == it.key && c.codim == it.orbit.singular_codim);
        match hit {
            Some(i) => used[i] = true,
            None => rest.push(it),
        }
    }
    let mut diff = ReferenceDiff {
        space: report.space.clone(),
        theorem: corpus.theorem.clone(),
        matched: used.iter().filter(|&&u| u).count(),
        matched_up_to_congruence: Vec::new(),
        missing: Vec::new(),
        extra: Vec::new(),
        extra_congruent: Vec::new(),
        param_mismatch: Vec::new(),
        groups_expected: corpus.groups,
        groups_found: 0,
    };
    for it in rest {
        let codim = it.orbit.singular_codim;
        let canon = canonical_key(rec, &it.key);
        let open = |i: usize, c: &ReferenceItem, used: &[bool]| !used[i] && c.key == it.key;
        if let Some(i) = corpus.items.iter().enumerate().position(|(i, c)| open(i, c, &used)) {
            used[i] = true;
            diff.param_mismatch.push(ParamMismatch {
                key: it.key.clone(),
                expected_codim: corpus.items[i].codim,
                found_codim: codim,
            });
            continue;
        }
        let congruent = |c: &ReferenceItem| c.codim == codim && canonical_key(rec, &c.key) == canon;
        if let Some(i) = corpus.items.iter().enumerate().position(|(i, c)| !used[i] && congruent(c)) {
            used[i] = true;
            diff.matched += 1;
            diff.matched_up_to_congruence.push(it.key.clone());
        } else if corpus.items.iter().any(congruent) {
            diff.extra_congruent.push(format!("{}|{codim}", it.key));
        } else {
            diff.extra.push(format!("{}|{codim}", it.key));
        }
    }
    diff.missing = corpus
        .items
        .iter()
        .zip(&used)
        .filter(|(_, u)| !**u)
        .map(|(c, _)| c.clone())
        .collect();
    diff.groups_found = corpus
        .items
        .iter()
        .zip(&used)
        .filter(|(_, u)| **u)
        .map(|(c, _)| c.label.as_str())
        .collect::<BTreeSet<_>>()
        .len();
    Ok(diff)
}

/// Spaces whose classification is expected to be complete.
pub fn fully_supported(kind: SpaceKind) -> bool {
    matches!(
        kind,
        SpaceKind::RealHyperbolic(_) | SpaceKind::SplitA2 | SpaceKind::SplitB2(1) | SpaceKind::SplitG2
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spacedb::BUNDLED_DB;

    fn db() -> Database {
        Database::parse(BUNDLED_DB).unwrap()
    }

    fn report(name: &str, dedup: bool) -> (SymmetricSpaceRecord, ClassificationReport) {
        let db = db();
        let rec = db.lookup(name, None).unwrap();
        let rep = classify_in(&db, &rec, &ClassifyOptions { dedup }).unwrap();
        (rec, rep)
    }

    #[test]
    fn corpora_parse() {
        let c = reference_corpora();
        assert_eq!(c.len(), 8);
        assert!(parse_corpora("space=X\ngroups=2\nitem=(1)|a|0\n").is_err());
    }

    #[test]
    fn sl3_matches_reference() {
        let (rec, rep) = report("SL3(R)/SO3", true);
        assert!(rep.complete, "{:?}", rep.warnings);
        let d = diff_against_reference(&rec, &rep, &corpus_for("SL3(R)/SO3").unwrap()).unwrap();
        assert!(d.is_empty(), "{d:?}");
        assert_eq!(d.groups_found, 4);
    }

    #[test]
    fn sl3_without_dedup_has_congruent_extra() {
        let (rec, rep) = report("SL3(R)/SO3", false);
        let d = diff_against_reference(&rec, &rep, &corpus_for("SL3(R)/SO3").unwrap()).unwrap();
        assert!(d.extra_congruent.iter().any(|k| k.starts_with("foliation-n:2")), "{d:?}");
    }

    #[test]
    fn missing_item_is_reported() {
        let (rec, mut rep) = report("SL3(R)/SO3", true);
        rep.items.retain(|i| i.mechanism != Mechanism::Extension);
        let d = diff_against_reference(&rec, &rep, &corpus_for("SL3(R)/SO3").unwrap()).unwrap();
        assert_eq!(d.missing.len(), 1);
        assert_eq!(d.missing[0].label, "(4)");
    }

    #[test]
    fn space_mismatch() {
        let (rec, rep) = report("SL3(R)/SO3", true);
        let err = diff_against_reference(&rec, &rep, &corpus_for("G2_2/SO4").unwrap()).unwrap_err();
        assert!(matches!(err, Error::SpaceMismatch { .. }));
    }

    #[test]
    fn rank_one_only() {
        let rec = db().lookup("SL3(R)/SO3", None).unwrap();
        assert!(classify_rank_one(&rec).is_err());
    }

    #[test]
    fn cayley_plane_items() {
        let rec = db().lookup("OH2", None).unwrap();
        let rep = classify_rank_one(&rec).unwrap();
        let dims: Vec<u32> = rep
            .items
            .iter()
            .filter(|i| i.mechanism == Mechanism::Nilpotent)
            .map(|i| i.orbit.singular_codim)
            .collect();
        assert_eq!(dims, vec![2, 3, 4, 6, 7]);
        assert!(!rep.complete);
    }

    #[test]
    fn g2_complex_is_incomplete_with_advisory() {
        let (_, rep) = report("G2_C/G2", true);
        assert!(!rep.complete);
        assert!(!rep.advisory.is_empty());
        assert!(rep.items.iter().any(|i| i.key == "nilpotent:{2}:full-n1:4"));
    }

    #[test]
    fn sl4_is_incomplete() {
        let (_, rep) = report("SL4(R)/SO4", true);
        assert!(!rep.complete);
        assert!(rep.warnings.iter().any(|w| w.contains("reducible")));
    }
}
