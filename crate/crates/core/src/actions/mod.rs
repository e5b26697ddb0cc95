//! Cohomogeneity one actions built from parabolic data: the two foliation
//! families, canonical extensions from boundary components and the nilpotent
//! construction.

pub mod catalog;
pub mod support;

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{proportional, Subspace, Q};
use crate::parabolic::check_phi;
use crate::rootsys::{
    diagram_automorphisms, sub_diagram_automorphisms, Multiplicities, Phi,
    RootVector,
};
use crate::spacedb::SymmetricSpaceRecord;

pub use catalog::{
    identify, nilpotent_candidates, reductive_catalog, sphere_catalog, Check, NilpotentCandidate,
    ReductiveEntry, SpaceKind, SphereEntry,
};
pub use support::{APart, Part, Support};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    #[default]
    Unknown,
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitData {
    /// Codimension of the singular orbit; 0 for foliations.
    pub singular_codim: u32,
    #[serde(default)]
    pub totally_geodesic: Tri,
    #[serde(default)]
    pub minimal: Tri,
    #[serde(default)]
    pub contains_f_phi: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit: Option<String>,
}

impl OrbitData {
    pub fn foliation() -> Self {
        OrbitData {
            singular_codim: 0,
            totally_geodesic: Tri::Unknown,
            minimal: Tri::Unknown,
            contains_f_phi: false,
            orbit: None,
        }
    }

    pub fn singular(codim: u32, tg: Tri, minimal: Tri) -> Self {
        OrbitData {
            singular_codim: codim,
            totally_geodesic: tg,
            minimal: if tg == Tri::Yes { Tri::Yes } else { minimal },
            contains_f_phi: false,
            orbit: None,
        }
    }

    pub fn named(mut self, orbit: impl Into<String>) -> Self {
        self.orbit = Some(orbit.into());
        self
    }
}

/// The subspace `𝔳 ⊂ 𝔫_Φ¹` of a nilpotent construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubspaceDescriptor {
    pub phi: Phi,
    pub dim: u32,
    /// Short family label, e.g. `full-n1` or `kaehler-angle(phi)`.
    pub family: String,
    /// Root spaces meeting `𝔳`.
    pub roots: Vec<RootVector>,
    /// `𝔳` is exactly the sum of the root spaces in `roots`.
    pub aligned: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionKind {
    /// `H_ℓ`; `line = None` stands for the whole family.
    FoliationA { line: Option<Vec<i64>> },
    /// `H_i`, 0-based simple root index.
    FoliationN { index: usize },
    ReductiveTG { key: String },
    CanonicalExtension { phi: Phi, inner: Box<ActionDescriptor> },
    NilpotentConstruction { v: SubspaceDescriptor },
    /// Given by its support only.
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionDescriptor {
    pub kind: ActionKind,
    pub support: Support,
}

impl ActionDescriptor {
    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            ActionKind::FoliationA { .. } => "foliation-a",
            ActionKind::FoliationN { .. } => "foliation-n",
            ActionKind::ReductiveTG { .. } => "reductive-tg",
            ActionKind::CanonicalExtension { .. } => "canonical-extension",
            ActionKind::NilpotentConstruction { .. } => "nilpotent-construction",
            ActionKind::Custom => "custom",
        }
    }

    /// Readable key; reference corpora are written in terms of these.
    pub fn key(&self) -> String {
        match &self.kind {
            ActionKind::FoliationA { line: None } => "foliation-a".into(),
            ActionKind::FoliationA { line: Some(l) } => format!("foliation-a:[{}]", l.iter().join(",")),
            ActionKind::FoliationN { index } => format!("foliation-n:{}", index + 1),
            ActionKind::ReductiveTG { key } => format!("reductive:{key}"),
            ActionKind::CanonicalExtension { phi, inner } => format!("extension:{phi}:{}", inner.key()),
            ActionKind::NilpotentConstruction { v } => {
                format!("nilpotent:{}:{}:{}", v.phi, v.family, v.dim)
            }
            ActionKind::Custom => "custom".into(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "kind": self.kind_name(),
            "key": self.key(),
            "support": self.support.tags(),
        });
        let m = obj.as_object_mut().expect("object");
        match &self.kind {
            ActionKind::FoliationA { line } => {
                m.insert("line".into(), json!(line));
            }
            ActionKind::FoliationN { index } => {
                m.insert("index".into(), json!(index + 1));
            }
            ActionKind::ReductiveTG { key } => {
                m.insert("catalog_key".into(), json!(key));
            }
            ActionKind::CanonicalExtension { phi, inner } => {
                m.insert("phi".into(), json!(phi));
                m.insert("inner".into(), inner.to_json());
            }
            ActionKind::NilpotentConstruction { v } => {
                m.insert("v".into(), json!(v));
            }
            ActionKind::Custom => {}
        }
        obj
    }

    /// Read a descriptor written by [`ActionDescriptor::to_json`] (or a hand
    /// written one with at least `support`). Kinds other than the simple ones
    /// are read back as [`ActionKind::Custom`] with the same support.
    pub fn from_json(rank: usize, v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Descriptor(m.to_string());
        let tags: Vec<String> = match v.get("support") {
            Some(Value::Array(a)) => a
                .iter()
                .map(|t| t.as_str().map(str::to_string).ok_or_else(|| bad("support tags must be strings")))
                .collect::<Result<_>>()?,
            _ => return Err(bad("missing `support` array")),
        };
        let support = Support::from_tags(rank, &tags)?;
        let kind = match v.get("kind").and_then(Value::as_str).unwrap_or("custom") {
            "reductive-tg" => ActionKind::ReductiveTG {
                key: v
                    .get("catalog_key")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad("reductive-tg needs `catalog_key`"))?
                    .to_string(),
            },
            "foliation-n" => {
                let i = v
                    .get("index")
                    .and_then(Value::as_u64)
                    .filter(|&i| i >= 1 && (i as usize) <= rank)
                    .ok_or_else(|| bad("foliation-n needs a 1-based `index`"))?;
                ActionKind::FoliationN { index: i as usize - 1 }
            }
            _ => ActionKind::Custom,
        };
        Ok(ActionDescriptor { kind, support })
    }
}

impl Serialize for ActionDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

pub(crate) fn gram(rec: &SymmetricSpaceRecord) -> Vec<Vec<Q>> {
    let r = rec.rank();
    (0..r)
        .map(|i| (0..r).map(|j| Q::from_integer(rec.system.gram(i, j))).collect())
        .collect()
}

/// `𝔞^Φ = span{H_α : α ∈ Φ}`.
pub fn a_upper(rec: &SymmetricSpaceRecord, phi: &Phi) -> Subspace {
    Subspace::coordinate(rec.rank(), phi.iter())
}

/// `𝔞_Φ = (𝔞^Φ)^⊥`.
pub fn a_lower(rec: &SymmetricSpaceRecord, phi: &Phi) -> Subspace {
    a_upper(rec, phi).orthogonal_complement(&gram(rec))
}

// ---------------------------------------------------------------------------
// Foliations

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Foliation {
    /// `H_ℓ` for the line spanned by the given `𝔞` vector.
    A(Vec<Q>),
    /// `H_i` (0-based).
    N(usize),
}

impl Foliation {
    pub fn a_int(line: &[i64]) -> Self {
        Foliation::A(line.iter().map(|&x| Q::from_integer(x)).collect())
    }
}

impl fmt::Display for Foliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Foliation::A(l) => write!(f, "H_l, l = [{}]", l.iter().join(",")),
            Foliation::N(i) => write!(f, "H_{}", i + 1),
        }
    }
}

/// Two foliations are congruent iff a multiplicity-preserving diagram
/// automorphism carries one to the other.
pub fn foliation_congruent(rec: &SymmetricSpaceRecord, a: &Foliation, b: &Foliation) -> bool {
    let auts = diagram_automorphisms(&rec.system, &rec.mult);
    match (a, b) {
        (Foliation::A(x), Foliation::A(y)) => auts.iter().any(|s| {
            let mut img = vec![Q::from_integer(0); x.len()];
            for (i, &c) in x.iter().enumerate() {
                img[s.perm[i]] = c;
            }
            proportional(&img, y)
        }),
        (Foliation::N(i), Foliation::N(j)) => auts.iter().any(|s| s.apply_index(*i) == *j),
        _ => false,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FoliationModuli {
    pub rank: usize,
    pub automorphisms: Vec<String>,
    /// `RP^{r−1}` modulo the automorphism group.
    pub a_family: String,
    /// Congruence classes of `H_i`, 1-based.
    pub n_classes: Vec<Vec<usize>>,
}

pub fn foliation_moduli(rec: &SymmetricSpaceRecord) -> FoliationModuli {
    let auts = diagram_automorphisms(&rec.system, &rec.mult);
    let r = rec.rank();
    let mut seen = vec![false; r];
    let mut n_classes = Vec::new();
    for i in 0..r {
        if seen[i] {
            continue;
        }
        let mut orbit: Vec<usize> = auts.iter().map(|s| s.apply_index(i)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &j in &orbit {
            seen[j] = true;
        }
        n_classes.push(orbit.into_iter().map(|j| j + 1).collect());
    }
    let a_family = if r == 1 {
        "single point".to_string()
    } else if auts.len() == 1 {
        format!("RP^{}", r - 1)
    } else {
        format!("RP^{} / (order {})", r - 1, auts.len())
    };
    FoliationModuli {
        rank: r,
        automorphisms: auts.iter().map(|s| s.to_string()).collect(),
        a_family,
        n_classes,
    }
}

fn all_positive(rec: &SymmetricSpaceRecord) -> Support {
    let mut s = Support::empty(rec.rank());
    for r in &rec.system.positive_roots {
        s.add_g(r.clone(), Part::Full);
    }
    s
}

pub fn foliation_support(rec: &SymmetricSpaceRecord, f: &Foliation) -> Result<Support> {
    let r = rec.rank();
    match f {
        Foliation::A(line) => {
            if line.len() != r || !crate::linalg::is_nonzero(line) {
                return Err(Error::Descriptor(format!("line must be a nonzero vector of length {r}")));
            }
            let l = Subspace::from_rows(r, vec![line.clone()]);
            Ok(all_positive(rec).with_a(l.orthogonal_complement(&gram(rec))))
        }
        Foliation::N(i) => {
            if *i >= r {
                return Err(Error::IndexOutOfRange { index: i + 1, rank: r });
            }
            let mut s = all_positive(rec).with_a(Subspace::full(r));
            let a = RootVector::simple(r, *i);
            if rec.mult.mult(&a) > 1 {
                s.g.insert(a, Part::Partial);
            } else {
                s.g.remove(&a);
            }
            Ok(s)
        }
    }
}

/// The generic `H_ℓ` family as a single item.
pub fn foliation_a_family(rec: &SymmetricSpaceRecord) -> ActionDescriptor {
    let mut s = all_positive(rec);
    s.a = APart::MinusGenericLine;
    ActionDescriptor {
        kind: ActionKind::FoliationA { line: None },
        support: s,
    }
}

pub fn foliation_descriptor(rec: &SymmetricSpaceRecord, f: &Foliation) -> Result<ActionDescriptor> {
    let support = foliation_support(rec, f)?;
    let kind = match f {
        Foliation::A(l) => {
            let s = Subspace::from_rows(rec.rank(), vec![l.clone()]);
            ActionKind::FoliationA {
                line: s.integer_rows().into_iter().next(),
            }
        }
        Foliation::N(i) => ActionKind::FoliationN { index: *i },
    };
    Ok(ActionDescriptor { kind, support })
}

/// Recognize `H_ℓ` or `H_i` from a support, if it has exactly that form.
pub fn recognize_foliation(rec: &SymmetricSpaceRecord, s: &Support) -> Option<Foliation> {
    if s.k0.is_some() || !s.k.is_empty() || !s.opaque.is_empty() || s.g.keys().any(|r| r.is_negative()) {
        return None;
    }
    let a = s.a_subspace()?;
    let r = rec.rank();
    let missing: Vec<&RootVector> = rec
        .system
        .positive_roots
        .iter()
        .filter(|root| s.g.get(*root) != Some(&Part::Full))
        .collect();
    if missing.is_empty() && a.dim() + 1 == r {
        let line = a.orthogonal_complement(&gram(rec));
        return Some(Foliation::A(line.rows()[0].clone()));
    }
    if a.is_full() && missing.len() == 1 && missing[0].height() == 1 {
        let root = missing[0];
        let i = root.0.iter().position(|&c| c == 1)?;
        let partial = s.g.get(root) == Some(&Part::Partial);
        if partial == (rec.mult.mult(root) > 1) {
            return Some(Foliation::N(i));
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Canonical extension

fn check_proper(rec: &SymmetricSpaceRecord, phi: &Phi) -> Result<()> {
    check_phi(rec, phi)?;
    if phi.is_empty() || phi.is_full() {
        return Err(Error::Descriptor(format!(
            "canonical extension needs a nonempty proper phi (got {phi})"
        )));
    }
    Ok(())
}

/// Check that `inner` lives on the boundary component `B_Φ`.
pub fn check_inner(rec: &SymmetricSpaceRecord, phi: &Phi, inner: &Support) -> Result<()> {
    if inner.rank != rec.rank() {
        return Err(Error::InnerOutsideBoundary(format!(
            "support has rank {}, space has rank {}",
            inner.rank,
            rec.rank()
        )));
    }
    for root in inner.root_mentions() {
        if !rec.system.contains(&root) {
            return Err(Error::InnerOutsideBoundary(format!("{root} is not a root")));
        }
        if !root.supported_on(phi) {
            return Err(Error::InnerOutsideBoundary(format!(
                "{} = {root} is not in the span of phi = {phi}",
                root.pretty()
            )));
        }
    }
    match &inner.a {
        APart::MinusGenericLine => Err(Error::InnerOutsideBoundary(
            "a generic family has no single extension; give a concrete line".into(),
        )),
        APart::Sub(a) if !a_upper(rec, phi).contains_subspace(a) => Err(Error::InnerOutsideBoundary(
            format!("a-part {a} is not contained in a^phi"),
        )),
        _ => Ok(()),
    }
}

/// Extend a subalgebra of `𝔤_Φ` to one of `𝔤_Ψ` (`Φ ⊂ Ψ`): add the root spaces
/// of `Σ_Ψ⁺ ∖ Σ_Φ⁺` and the part of `𝔞^Ψ` orthogonal to `𝔞^Φ`.
pub fn extend_between(rec: &SymmetricSpaceRecord, phi: &Phi, psi: &Phi, inner: &Support) -> Result<Support> {
    check_phi(rec, psi)?;
    if !phi.is_subset(psi) {
        return Err(Error::Descriptor(format!("{phi} is not contained in {psi}")));
    }
    check_inner(rec, phi, inner)?;
    let mut out = inner.clone();
    for root in rec.system.sub_positive(psi) {
        if !root.supported_on(phi) {
            out.add_g(root.clone(), Part::Full);
        }
    }
    out.add_a(&a_upper(rec, psi).intersect(&a_lower(rec, phi)));
    Ok(out)
}

/// `𝔥^Λ_Φ = 𝔥_Φ ⊕ 𝔞_Φ ⊕ 𝔫_Φ`. The singular orbit codimension is preserved.
pub fn canonical_extend(
    rec: &SymmetricSpaceRecord,
    phi: &Phi,
    inner: &ActionDescriptor,
    orbit: &OrbitData,
) -> Result<(ActionDescriptor, OrbitData)> {
    check_proper(rec, phi)?;
    let support = extend_between(rec, phi, &Phi::full(rec.rank()), &inner.support)?;
    let data = OrbitData {
        singular_codim: orbit.singular_codim,
        totally_geodesic: Tri::Unknown,
        minimal: Tri::Unknown,
        contains_f_phi: false,
        orbit: None,
    };
    Ok((
        ActionDescriptor {
            kind: ActionKind::CanonicalExtension {
                phi: phi.clone(),
                inner: Box::new(inner.clone()),
            },
            support,
        },
        data,
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct CompositionCheck {
    pub applicable: bool,
    pub reason: String,
    /// `Some(true)` when both routes give the same subalgebra.
    pub holds: Option<bool>,
    pub direct: Vec<String>,
    pub two_step: Vec<String>,
}

/// Compare `Λ ← Φ` with `Λ ← Ψ ← Φ` for an intermediate `Φ ⊊ Ψ ⊊ Λ`.
pub fn extension_composition_check(
    rec: &SymmetricSpaceRecord,
    phi: &Phi,
    psi: &Phi,
    inner: &Support,
) -> Result<CompositionCheck> {
    check_proper(rec, phi)?;
    check_phi(rec, psi)?;
    if !(phi.is_subset(psi) && phi != psi && !psi.is_full()) {
        let reason = if rec.rank() <= 2 {
            format!(
                "no intermediate subset exists in rank {}; the check is inapplicable",
                rec.rank()
            )
        } else {
            format!("psi = {psi} is not strictly between phi = {phi} and the full set")
        };
        return Ok(CompositionCheck {
            applicable: false,
            reason,
            holds: None,
            direct: Vec::new(),
            two_step: Vec::new(),
        });
    }
    let full = Phi::full(rec.rank());
    let direct = extend_between(rec, phi, &full, inner)?;
    let mid = extend_between(rec, phi, psi, inner)?;
    let two = extend_between(rec, psi, &full, &mid)?;
    Ok(CompositionCheck {
        applicable: true,
        reason: format!("{{1..{}}} <- {psi} <- {phi}", rec.rank()),
        holds: Some(direct == two),
        direct: direct.tags(),
        two_step: two.tags(),
    })
}

/// All intermediate `Ψ` for `phi` (empty in rank ≤ 2 for `|Φ| = r − 1`).
pub fn intermediate_subsets(phi: &Phi) -> Vec<Phi> {
    Phi::all(phi.rank())
        .into_iter()
        .filter(|p| phi.is_subset(p) && p != phi && !p.is_full())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Equivalence {
    Equivalent,
    NotEquivalent,
    Unknown,
}

impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Equivalence::Equivalent => "equivalent",
            Equivalence::NotEquivalent => "not-equivalent",
            Equivalence::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceVerdict {
    pub result: Equivalence,
    pub reason: String,
}

fn verdict(result: Equivalence, reason: impl Into<String>) -> Result<EquivalenceVerdict> {
    Ok(EquivalenceVerdict {
        result,
        reason: reason.into(),
    })
}

/// Decide orbit equivalence of the canonical extensions of two inner actions
/// on the same `B_Φ`.
///
/// Equivalent inner actions (through the identity component, or through a
/// symmetry of `Σ_Φ` that extends to `Σ`) give equivalent extensions. If a
/// symmetry is needed that does not extend, the extensions may differ; this
/// is decided exactly only when both are foliations of a recognizable form.
pub fn extension_orbit_equivalence(
    rec: &SymmetricSpaceRecord,
    phi: &Phi,
    a: &Support,
    b: &Support,
    via_identity_component: bool,
) -> Result<EquivalenceVerdict> {
    check_proper(rec, phi)?;
    let full = Phi::full(rec.rank());
    let ea = extend_between(rec, phi, &full, a)?;
    let eb = extend_between(rec, phi, &full, b)?;
    if a == b || ea == eb {
        return verdict(Equivalence::Equivalent, "identical subalgebras");
    }
    if via_identity_component {
        return verdict(
            Equivalence::Equivalent,
            "inner actions are conjugate by the identity component of the boundary isometry group",
        );
    }
    let auts = diagram_automorphisms(&rec.system, &rec.mult);
    if let Some(s) = auts.iter().find(|s| s.apply_phi(phi) == *phi && a.permute(s) == *b) {
        return verdict(
            Equivalence::Equivalent,
            format!("inner actions are congruent by {s}, which extends to a symmetry of the whole diagram"),
        );
    }
    if let Some(s) = auts.iter().find(|s| ea.permute(s) == eb) {
        return verdict(Equivalence::Equivalent, format!("extensions are congruent by {s}"));
    }
    if let (Some(fa), Some(fb)) = (recognize_foliation(rec, &ea), recognize_foliation(rec, &eb)) {
        return if foliation_congruent(rec, &fa, &fb) {
            verdict(Equivalence::Equivalent, format!("extensions are congruent foliations {fa} and {fb}"))
        } else {
            verdict(
                Equivalence::NotEquivalent,
                format!("extensions are the foliations {fa} and {fb}, which are not congruent"),
            )
        };
    }
    let subs = sub_diagram_automorphisms(&rec.system, phi, &rec.mult);
    let reason = match subs.iter().find(|s| a.permute(s) == *b) {
        Some(t) => format!("inner actions are congruent only by {t}, which does not extend"),
        None => "no diagram symmetry relates the inner actions".to_string(),
    };
    verdict(Equivalence::Unknown, reason)
}

/// Stabilizer of a point of `B_Φ`: `𝔨_Φ ∩ 𝔤_Φ`, with codimension `dim B_Φ`.
pub fn point_inner(rec: &SymmetricSpaceRecord, phi: &Phi) -> (ActionDescriptor, OrbitData) {
    let mut s = Support::empty(rec.rank());
    let mut dim_b = phi.len() as u32;
    for root in rec.system.sub_positive(phi) {
        s.add_k(root.clone());
        dim_b += rec.mult.mult(root);
    }
    (
        ActionDescriptor {
            kind: ActionKind::Custom,
            support: s,
        },
        OrbitData::singular(dim_b, Tri::Yes, Tri::Yes).named("point"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spacedb::{Database, BUNDLED_DB};

    fn rec(name: &str) -> SymmetricSpaceRecord {
        Database::parse(BUNDLED_DB).unwrap().lookup(name, None).unwrap()
    }

    fn phi(r: &SymmetricSpaceRecord, idx: &[usize]) -> Phi {
        Phi::from_one_based(r.rank(), idx).unwrap()
    }

    fn sup(r: &SymmetricSpaceRecord, tags: &[&str]) -> Support {
        Support::from_tags(r.rank(), tags).unwrap()
    }

    #[test]
    fn sl3_point_extension() {
        let r = rec("SL3(R)/SO3");
        let p = phi(&r, &[1]);
        let (inner, orbit) = point_inner(&r, &p);
        assert_eq!(orbit.singular_codim, 2);
        let (ext, data) = canonical_extend(&r, &p, &inner, &orbit).unwrap();
        // 𝔨_{α1} ⊕ (𝔞 ⊖ ℝH_{α1}) ⊕ 𝔤_{α2} ⊕ 𝔤_{α1+α2}
        assert_eq!(ext.support.tags(), vec!["a[1,2]", "k[1,0]", "g[0,1]", "g[1,1]"]);
        assert_eq!(data.singular_codim, 2);
    }

    #[test]
    fn inner_outside_boundary() {
        let r = rec("SL3(R)/SO3");
        let (inner, orbit) = point_inner(&r, &phi(&r, &[2]));
        let err = canonical_extend(&r, &phi(&r, &[1]), &inner, &orbit).unwrap_err();
        assert!(matches!(err, Error::InnerOutsideBoundary(_)));
        let bad = ActionDescriptor {
            kind: ActionKind::Custom,
            support: sup(&r, &["a[0,1]"]),
        };
        assert!(canonical_extend(&r, &phi(&r, &[1]), &bad, &orbit).is_err());
    }

    #[test]
    fn sl4_extensions_not_equivalent() {
        let r = rec("SL4(R)/SO4");
        let p = phi(&r, &[1, 2]);
        let a = sup(&r, &["a[1,0,0|0,1,0]", "g[0,1,0]", "g[1,1,0]"]);
        let b = sup(&r, &["a[1,0,0|0,1,0]", "g[1,0,0]", "g[1,1,0]"]);
        let v = extension_orbit_equivalence(&r, &p, &a, &b, false).unwrap();
        assert_eq!(v.result, Equivalence::NotEquivalent, "{}", v.reason);
        let v = extension_orbit_equivalence(&r, &p, &a, &b, true).unwrap();
        assert_eq!(v.result, Equivalence::Equivalent);
    }

    #[test]
    fn sl4_extensions_equivalent_by_outer_symmetry() {
        let r = rec("SL4(R)/SO4");
        let p = phi(&r, &[1, 3]);
        let a = sup(&r, &["a[1,0,0|0,0,1]", "g[0,0,1]"]);
        let b = sup(&r, &["a[1,0,0|0,0,1]", "g[1,0,0]"]);
        let v = extension_orbit_equivalence(&r, &p, &a, &b, false).unwrap();
        assert_eq!(v.result, Equivalence::Equivalent, "{}", v.reason);
    }

    #[test]
    fn composition_in_sl4() {
        let r = rec("SL4(R)/SO4");
        let (inner, _) = point_inner(&r, &phi(&r, &[1]));
        let c = extension_composition_check(&r, &phi(&r, &[1]), &phi(&r, &[1, 2]), &inner.support).unwrap();
        assert!(c.applicable);
        assert_eq!(c.holds, Some(true));
        let sl3 = rec("SL3(R)/SO3");
        let (inner, _) = point_inner(&sl3, &phi(&sl3, &[1]));
        let c = extension_composition_check(&sl3, &phi(&sl3, &[1]), &phi(&sl3, &[1]), &inner.support).unwrap();
        assert!(!c.applicable);
        assert!(c.reason.contains("inapplicable"));
    }

    #[test]
    fn foliation_recognition() {
        let r = rec("SL4(R)/SO4");
        for i in 0..3 {
            let s = foliation_support(&r, &Foliation::N(i)).unwrap();
            assert_eq!(recognize_foliation(&r, &s), Some(Foliation::N(i)));
        }
        let l = Foliation::a_int(&[1, 0, 2]);
        let s = foliation_support(&r, &l).unwrap();
        let got = recognize_foliation(&r, &s).unwrap();
        assert!(foliation_congruent(&r, &got, &l));
    }

    #[test]
    fn foliation_congruence_sl3() {
        let r = rec("SL3(R)/SO3");
        assert!(foliation_congruent(&r, &Foliation::N(0), &Foliation::N(1)));
        assert!(foliation_congruent(&r, &Foliation::a_int(&[1, 2]), &Foliation::a_int(&[4, 2])));
        assert!(!foliation_congruent(&r, &Foliation::a_int(&[1, 2]), &Foliation::a_int(&[1, 1])));
        let so = rec("SOo(2,3)/SO2SO3");
        assert!(!foliation_congruent(&so, &Foliation::N(0), &Foliation::N(1)));
        assert_eq!(foliation_moduli(&so).n_classes, vec![vec![1], vec![2]]);
        assert_eq!(foliation_moduli(&r).n_classes, vec![vec![1, 2]]);
    }

    #[test]
    fn descriptor_json_round_trip() {
        let r = rec("SL3(R)/SO3");
        let d = foliation_descriptor(&r, &Foliation::N(1)).unwrap();
        let back = ActionDescriptor::from_json(2, &d.to_json()).unwrap();
        assert_eq!(back, d);
        assert_eq!(d.key(), "foliation-n:2");
    }
}
