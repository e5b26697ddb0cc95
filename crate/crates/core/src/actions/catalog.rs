//! Hand-maintained tables: which spaces are covered, groups acting
//! transitively on spheres, reductive actions with a totally geodesic singular
//! orbit, and the `𝔫_Φ¹` module data behind the nilpotent construction.

use std::fmt;

use serde::Serialize;

use super::{a_lower, ActionDescriptor, ActionKind, OrbitData, Part, SubspaceDescriptor, Support, Tri};
use crate::error::{Error, Result};
use crate::parabolic::{check_phi, langlands, level_roots};
use crate::rootsys::{Family, Multiplicities, Phi, RootVector};
use crate::spacedb::SymmetricSpaceRecord;

/// Spaces the catalogues know about, recognized by structure rather than name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "n", rename_all = "kebab-case")]
pub enum SpaceKind {
    RealHyperbolic(u32),
    ComplexHyperbolic(u32),
    QuaternionicHyperbolic(u32),
    CayleyPlane,
    SplitA2,
    /// `SOᵒ(2, n+2)/SO₂SO_{n+2}`.
    SplitB2(u32),
    SplitG2,
    ComplexG2,
    Other,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceKind::RealHyperbolic(n) => write!(f, "RH{n}"),
            SpaceKind::ComplexHyperbolic(n) => write!(f, "CH{n}"),
            SpaceKind::QuaternionicHyperbolic(n) => write!(f, "HH{n}"),
            SpaceKind::CayleyPlane => f.write_str("OH2"),
            SpaceKind::SplitA2 => f.write_str("SL3(R)/SO3"),
            SpaceKind::SplitB2(n) => write!(f, "SOo(2,{})/SO2SO{}", n + 2, n + 2),
            SpaceKind::SplitG2 => f.write_str("G2_2/SO4"),
            SpaceKind::ComplexG2 => f.write_str("G2_C/G2"),
            SpaceKind::Other => f.write_str("other"),
        }
    }
}

pub fn identify(rec: &SymmetricSpaceRecord) -> SpaceKind {
    let sig = rec.signature();
    if !sig.is_irreducible() {
        return SpaceKind::Other;
    }
    let c = &sig.components[0];
    let all = |m: u32| c.mults.iter().flatten().all(|&x| x == m);
    match (c.family, c.rank, c.mults.as_slice()) {
        (Family::A, 1, [m]) => SpaceKind::RealHyperbolic(m[0] + 1),
        (Family::BC, 1, [long, short]) => match (long[0], short[0]) {
            (1, s) if s % 2 == 0 => SpaceKind::ComplexHyperbolic(s / 2 + 1),
            (3, s) if s % 4 == 0 => SpaceKind::QuaternionicHyperbolic(s / 4 + 1),
            (7, 8) => SpaceKind::CayleyPlane,
            _ => SpaceKind::Other,
        },
        (Family::A, 2, _) if all(1) => SpaceKind::SplitA2,
        (Family::B, 2, [long, short]) if long.iter().all(|&x| x == 1) && short[0] == short[1] => {
            SpaceKind::SplitB2(short[0])
        }
        (Family::G2, 2, _) if all(1) => SpaceKind::SplitG2,
        (Family::G2, 2, _) if all(2) => SpaceKind::ComplexG2,
        _ => SpaceKind::Other,
    }
}

// ---------------------------------------------------------------------------
// Transitive actions on spheres

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphereEntry {
    /// Group, with `k` standing for the size parameter.
    pub group: &'static str,
    pub module: &'static str,
    /// Real dimension of the module, `None` when it depends on `k`.
    pub dim: Option<u32>,
    pub provenance: &'static str,
}

const CLASSICAL: &str = "classical list of compact groups acting transitively on spheres";

pub fn sphere_catalog() -> Vec<SphereEntry> {
    vec![
        SphereEntry { group: "SO(k)", module: "R^k", dim: None, provenance: CLASSICAL },
        SphereEntry { group: "U(k)", module: "C^k", dim: None, provenance: CLASSICAL },
        SphereEntry { group: "Sp(1)", module: "H", dim: Some(4), provenance: CLASSICAL },
        SphereEntry { group: "SU(3)", module: "C^3", dim: Some(6), provenance: CLASSICAL },
        SphereEntry { group: "G2", module: "R^7", dim: Some(7), provenance: CLASSICAL },
        SphereEntry { group: "Spin(7)", module: "R^8", dim: Some(8), provenance: CLASSICAL },
    ]
}

/// Catalogue entry witnessing that `group` is transitive on `S^{dim−1}`.
pub fn sphere_transitive(group: &str, dim: u32) -> Option<SphereEntry> {
    let param = |prefix: &str| -> Option<u32> {
        group.strip_prefix(prefix)?.strip_suffix(')')?.parse().ok()
    };
    sphere_catalog().into_iter().find(|e| match (e.group, e.dim) {
        ("SO(k)", None) => param("SO(") == Some(dim) && dim >= 2,
        ("U(k)", None) => param("U(").map(|k| 2 * k) == Some(dim),
        (g, Some(d)) => g == group && d == dim,
        _ => false,
    })
}

// ---------------------------------------------------------------------------
// Reductive actions with a totally geodesic singular orbit

#[derive(Clone, Debug, Serialize)]
pub struct ReductiveEntry {
    pub key: String,
    pub descriptor: ActionDescriptor,
    pub orbit: OrbitData,
    pub source: String,
}

fn reductive(rec: &SymmetricSpaceRecord, key: String, tags: &[&str], orbit: OrbitData, source: &str) -> ReductiveEntry {
    let support = Support::from_tags(rec.rank(), tags).expect("catalogue tags are well formed");
    ReductiveEntry {
        descriptor: ActionDescriptor {
            kind: ActionKind::ReductiveTG { key: key.clone() },
            support,
        },
        key,
        orbit,
        source: source.to_string(),
    }
}

/// Entries for `rec` and whether the list is known to be complete.
pub fn reductive_catalog(rec: &SymmetricSpaceRecord) -> (Vec<ReductiveEntry>, bool) {
    let tg = |codim: u32, orbit: &str| OrbitData::singular(codim, Tri::Yes, Tri::Yes).named(orbit);
    match identify(rec) {
        SpaceKind::RealHyperbolic(n) => {
            let k0 = rec.dim_k0 > 0;
            let out = (0..=n.saturating_sub(2))
                .map(|k| {
                    let mut tags: Vec<&str> = Vec::new();
                    match k {
                        0 => {
                            if k0 {
                                tags.push("k0");
                            }
                            tags.push("k[1]");
                        }
                        1 => {
                            tags.push("a");
                            if k0 {
                                tags.push("k0");
                            }
                        }
                        _ => tags.extend(["a", "k0-part", "g[1]-v", "g[-1]-v"]),
                    }
                    let orbit = if k == 0 { "point".to_string() } else { format!("RH{k}") };
                    reductive(
                        rec,
                        format!("SOo(1,{k})xSO({})", n - k),
                        &tags,
                        tg(n - k, &orbit),
                        "stabilizer of a totally geodesic RH^k",
                    )
                })
                .collect();
            (out, true)
        }
        SpaceKind::SplitA2 => {
            let mut l = tg(2, "RH2 x E");
            l.contains_f_phi = true;
            (
                vec![reductive(rec, "SL2(R)xR+".into(), &["a", "g[1,0]", "g[-1,0]"], l, "Levi factor of a maximal parabolic")],
                true,
            )
        }
        SpaceKind::SplitB2(1) => (
            vec![
                reductive(rec, "SOo(1,3)".into(), &["h:so(1,3)"], tg(3, "RH3"), "stabilizer of a spacelike line"),
                reductive(
                    rec,
                    "SOo(2,2)".into(),
                    &["a", "g[1,0]", "g[-1,0]", "g[1,2]", "g[-1,2]"],
                    tg(2, "RH2 x RH2"),
                    "long root subalgebra",
                ),
            ],
            true,
        ),
        SpaceKind::SplitB2(n) => (
            vec![reductive(
                rec,
                format!("SOo(1,2)xSOo(1,{})", n + 1),
                &["a", "k0-part", "g[0,1]", "g[-0,1]", "g[1,1]-v", "g[-1,1]-v"],
                tg(n + 1, &format!("RH2 x RH{}", n + 1)),
                "product of hyperbolic factors",
            )],
            false,
        ),
        SpaceKind::SplitG2 => (
            vec![
                reductive(rec, "SU(1,2)".into(), &["h:su(1,2)"], tg(4, "CH2"), "subalgebra of type su(1,2)"),
                reductive(
                    rec,
                    "SL3(R)".into(),
                    &["a", "g[0,1]", "g[-0,1]", "g[3,1]", "g[-3,1]", "g[3,2]", "g[-3,2]"],
                    tg(3, "SL3(R)/SO3"),
                    "long root subalgebra",
                ),
            ],
            true,
        ),
        _ => (Vec::new(), false),
    }
}

// ---------------------------------------------------------------------------
// Nilpotent construction

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Pass,
    Fail,
    Undetermined,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Pass => "pass",
            Check::Fail => "fail",
            Check::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NilpotentCandidate {
    pub v: SubspaceDescriptor,
    /// `N_{L_Φ}(𝔫_Φ ⊖ 𝔳)` acts transitively on `F_Φ`.
    pub condition_i: Check,
    pub reason_i: String,
    /// `N_{K_Φ}(𝔫_Φ ⊖ 𝔳)` acts transitively on the unit sphere of `𝔳`.
    pub condition_ii: Check,
    pub reason_ii: String,
    pub verdict: Check,
    pub descriptor: ActionDescriptor,
    pub orbit: OrbitData,
    /// Key of an action this one is orbit equivalent to, if known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duplicate_of: Option<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

enum Normalizer {
    /// Group claimed to act on `𝔳`; checked against the sphere catalogue.
    Sphere(String),
    /// Transitivity established by a structural argument.
    Known(&'static str),
    NotTransitive(String),
    Open(&'static str),
}

struct Shape {
    family: String,
    dim: u32,
    roots: Vec<RootVector>,
    aligned: bool,
    /// `𝔪_Φ` acts irreducibly on `𝔫_Φ¹`.
    irreducible: bool,
    normalizer: Normalizer,
    /// Tags of a subalgebra of the normalizer transitive on `F_Φ`.
    transitive: Option<Vec<&'static str>>,
    tg: Tri,
    minimal: Tri,
    orbit: Option<String>,
    duplicate_of: Option<String>,
    note: String,
}

impl Shape {
    fn new(family: impl Into<String>, dim: u32, roots: Vec<RootVector>, aligned: bool, normalizer: Normalizer) -> Self {
        Shape {
            family: family.into(),
            dim,
            roots,
            aligned,
            irreducible: false,
            normalizer,
            transitive: None,
            tg: Tri::Unknown,
            minimal: Tri::Unknown,
            orbit: None,
            duplicate_of: None,
            note: String::new(),
        }
    }

    fn irreducible(mut self) -> Self {
        self.irreducible = true;
        self
    }

    fn transitive(mut self, tags: &[&'static str]) -> Self {
        self.transitive = Some(tags.to_vec());
        self
    }

    fn tg(mut self, orbit: impl Into<String>) -> Self {
        self.tg = Tri::Yes;
        self.minimal = Tri::Yes;
        self.orbit = Some(orbit.into());
        self
    }

    fn dup(mut self, key: impl Into<String>) -> Self {
        self.duplicate_of = Some(key.into());
        self
    }

    fn note(mut self, n: impl Into<String>) -> Self {
        self.note = n.into();
        self
    }
}

fn rv(c: &[i32]) -> RootVector {
    RootVector(c.to_vec())
}

fn sphere(g: impl Into<String>) -> Normalizer {
    Normalizer::Sphere(g.into())
}

/// Candidate subspaces `𝔳 ⊂ 𝔫_Φ¹` for a maximal proper `Φ`, each with the
/// outcome of the two conditions of the nilpotent construction.
///
/// Returns `NotMaximal` unless `|Φ| = r − 1`, and nothing when
/// `dim 𝔫_Φ¹ < 2`.
pub fn nilpotent_candidates(rec: &SymmetricSpaceRecord, phi: &Phi) -> Result<Vec<NilpotentCandidate>> {
    check_phi(rec, phi)?;
    if phi.len() + 1 != rec.rank() {
        return Err(Error::NotMaximal {
            phi_len: phi.len(),
            rank: rec.rank(),
        });
    }
    let n1 = level_roots(rec, phi, 1);
    let dim_n1: u32 = n1.iter().map(|r| rec.mult.mult(r)).sum();
    if dim_n1 < 2 {
        return Ok(Vec::new());
    }
    let shapes = module_shapes(rec, phi, &n1, dim_n1);
    let data = langlands(rec, phi)?;
    let levi_sl2r = data.dim_m_phi == 3 && data.sigma_phi_positive.len() == 1 && data.dim_z_phi == Some(0);
    Ok(shapes
        .into_iter()
        .map(|s| evaluate(rec, phi, &n1, dim_n1, levi_sl2r, s))
        .collect())
}

fn evaluate(
    rec: &SymmetricSpaceRecord,
    phi: &Phi,
    n1: &[RootVector],
    dim_n1: u32,
    levi_sl2r: bool,
    s: Shape,
) -> NilpotentCandidate {
    let full = s.dim == dim_n1;
    let (condition_i, reason_i) = if phi.is_empty() {
        (Check::Pass, "F_phi is a geodesic and A normalizes n minus v".to_string())
    } else if levi_sl2r && s.irreducible && !full {
        (
            Check::Fail,
            "m_phi = sl2(R) acts irreducibly on n1, so the normalizer of a proper v is not transitive on F_phi".to_string(),
        )
    } else if full {
        (Check::Pass, "v = n1 is normalized by all of l_phi".to_string())
    } else if let Some(t) = &s.transitive {
        (Check::Pass, format!("normalizer contains {}, which is transitive on F_phi", t.join(" + ")))
    } else {
        (Check::Undetermined, "no transitive subalgebra of the normalizer is recorded".to_string())
    };
    let (condition_ii, reason_ii) = match &s.normalizer {
        Normalizer::Sphere(g) => match super::catalog::sphere_transitive(g, s.dim) {
            Some(e) => (Check::Pass, format!("{g} on {} ({})", e.module.replace('k', &sphere_k(e.module, s.dim)), e.provenance)),
            None => (Check::Fail, format!("{g} is not transitive on S^{}", s.dim - 1)),
        },
        Normalizer::Known(why) => (Check::Pass, why.to_string()),
        Normalizer::NotTransitive(why) => (Check::Fail, why.clone()),
        Normalizer::Open(why) => (Check::Undetermined, why.to_string()),
    };
    let verdict = if condition_i == Check::Fail || condition_ii == Check::Fail {
        Check::Fail
    } else if condition_i == Check::Pass && condition_ii == Check::Pass {
        Check::Pass
    } else {
        Check::Undetermined
    };

    let r = rec.rank();
    let mut support = Support::empty(r);
    if full {
        support.add_a(&crate::linalg::Subspace::full(r));
        if rec.dim_k0 > 0 {
            support.add_k0(Part::Full);
        }
        for a in rec.system.sub_positive(phi) {
            support.add_g(a.clone(), Part::Full);
            support.add_g(a.neg(), Part::Full);
        }
    } else {
        if let Some(t) = &s.transitive {
            support = support.union(&Support::from_tags(r, t).expect("catalogue tags are well formed"));
        }
        support.add_a(&a_lower(rec, phi));
        if rec.dim_k0 > 0 {
            support.add_k0(Part::Partial);
        }
    }
    for root in &rec.system.positive_roots {
        if root.supported_on(phi) {
            continue;
        }
        if n1.contains(root) && s.roots.contains(root) {
            if !s.aligned {
                support.add_g(root.clone(), Part::Partial);
            }
        } else {
            support.add_g(root.clone(), Part::Full);
        }
    }
    let v = SubspaceDescriptor {
        phi: phi.clone(),
        dim: s.dim,
        family: s.family,
        roots: s.roots,
        aligned: s.aligned,
    };
    let mut orbit = OrbitData::singular(s.dim, s.tg, s.minimal);
    orbit.contains_f_phi = verdict == Check::Pass;
    orbit.orbit = s.orbit;
    NilpotentCandidate {
        descriptor: ActionDescriptor {
            kind: ActionKind::NilpotentConstruction { v: v.clone() },
            support,
        },
        v,
        condition_i,
        reason_i,
        condition_ii,
        reason_ii,
        verdict,
        orbit,
        duplicate_of: s.duplicate_of,
        note: s.note,
    }
}

fn sphere_k(module: &str, dim: u32) -> String {
    if module.starts_with('C') {
        (dim / 2).to_string()
    } else {
        dim.to_string()
    }
}

fn module_shapes(rec: &SymmetricSpaceRecord, phi: &Phi, n1: &[RootVector], dim_n1: u32) -> Vec<Shape> {
    let j = phi.complement().iter().next().expect("phi is proper");
    let all = n1.to_vec();
    match identify(rec) {
        SpaceKind::RealHyperbolic(n) => (2..=dim_n1)
            .map(|d| {
                Shape::new("subspace", d, all.clone(), d == dim_n1, sphere(format!("SO({d})")))
                    .irreducible()
                    .tg(format!("RH{}", n - d))
                    .dup(format!("reductive:SOo(1,{})xSO({d})", n - d))
            })
            .collect(),
        SpaceKind::ComplexHyperbolic(n) => {
            let mut out = Vec::new();
            for k in 1..n {
                out.push(
                    Shape::new("kaehler-angle(0)", 2 * k, all.clone(), 2 * k == dim_n1, sphere(format!("U({k})")))
                        .note("complex subspace"),
                );
            }
            for d in 2..n {
                out.push(
                    Shape::new("kaehler-angle(pi/2)", d, all.clone(), false, sphere(format!("SO({d})")))
                        .note("totally real subspace"),
                );
            }
            for k in (1..n).filter(|k| 2 * k < n) {
                let mut s = Shape::new(
                    "kaehler-angle(phi)",
                    2 * k,
                    all.clone(),
                    false,
                    Normalizer::Known("normalizer is transitive on the unit sphere of a subspace of constant Kaehler angle"),
                )
                .note("one family for each angle 0 < phi < pi/2; singular orbit not totally geodesic");
                s.tg = Tri::No;
                out.push(s);
            }
            out
        }
        SpaceKind::QuaternionicHyperbolic(_) => (2..=dim_n1)
            .map(|d| {
                Shape::new(
                    "quaternionic-kaehler-angle",
                    d,
                    all.clone(),
                    d == dim_n1,
                    Normalizer::Open("depends on the quaternionic Kaehler angle of v; not settled"),
                )
            })
            .collect(),
        SpaceKind::CayleyPlane => (2..=dim_n1)
            .map(|k| {
                let norm = match k {
                    2 => sphere("SO(2)"),
                    3 => sphere("SO(3)"),
                    4 => sphere("Sp(1)"),
                    6 => sphere("SU(3)"),
                    7 => sphere("G2"),
                    8 => sphere("Spin(7)"),
                    _ => Normalizer::NotTransitive(format!(
                        "no subgroup of Spin(7) normalizing a {k}-dimensional subspace of R^8 is transitive on S^{}",
                        k - 1
                    )),
                };
                let s = Shape::new("subspace", k, all.clone(), k == dim_n1, norm).irreducible();
                if k == 8 {
                    s.tg("RH8").dup("totally geodesic RH8 (not catalogued)")
                } else {
                    s
                }
            })
            .collect(),
        SpaceKind::SplitA2 => vec![Shape::new("full-n1", 2, all, true, sphere("SO(2)"))
            .tg("RH2 x E")
            .dup("reductive:SL2(R)xR+")],
        SpaceKind::SplitB2(n) if j == 0 => {
            // Φ = {α2}: 𝔫¹ = ℝ ⊕ ℝ^{n+1} under K_Φ = SO(n+1).
            let mut irr = Shape::new("irreducible-module", n + 1, all.clone(), false, sphere(format!("SO({})", n + 1)))
                .irreducible()
                .transitive(&["a", "g[0,1]", "g[-0,1]"])
                .tg(format!("RH2 x RH{}", n + 1));
            if n >= 2 {
                irr = irr.dup(format!("reductive:SOo(1,2)xSOo(1,{})", n + 1));
            }
            vec![
                irr,
                Shape::new(
                    "full-n1",
                    n + 2,
                    all,
                    true,
                    Normalizer::NotTransitive(format!("SO({}) fixes the trivial summand of n1", n + 1)),
                ),
            ]
        }
        SpaceKind::SplitB2(1) => vec![Shape::new("full-n1", 2, all, true, sphere("SO(2)"))
            .tg("RH2 x RH2")
            .dup("reductive:SOo(2,2)")],
        SpaceKind::SplitB2(n) => {
            let mut out: Vec<Shape> = (2..=n)
                .map(|k| {
                    Shape::new("root-subspace", k, vec![rv(&[0, 1])], k == n, sphere(format!("SO({k})")))
                        .transitive(&["a", "g[1,0]"])
                        .dup(format!("extension:{{2}}:reductive:SOo(1,{})xSO({k})", n + 1 - k))
                        .note("k-dimensional subspace of the alpha2 root space")
                })
                .collect();
            out.push(Shape::new(
                "full-n1",
                2 * n,
                all,
                true,
                Normalizer::NotTransitive(format!("SO(2)SO({n}) is not transitive on the unit sphere of R^2 (x) R^{n}")),
            ));
            out
        }
        SpaceKind::SplitG2 if j == 0 => {
            let mut s = Shape::new("full-n1", 2, all, true, sphere("SO(2)"))
                .irreducible()
                .note("singular orbit contains a maximal flat");
            s.tg = Tri::No;
            s.minimal = Tri::Yes;
            vec![s]
        }
        SpaceKind::SplitG2 => {
            let one_dim = || Normalizer::NotTransitive("K_phi is one-dimensional".into());
            vec![
                Shape::new("k-invariant-plane", 2, all.clone(), false, sphere("SO(2)")).irreducible(),
                Shape::new("subspace", 3, all.clone(), false, one_dim()).irreducible(),
                Shape::new("full-n1", 4, all, true, one_dim()).irreducible(),
            ]
        }
        SpaceKind::ComplexG2 if j == 0 => vec![
            Shape::new("full-n1", 4, all.clone(), true, sphere("U(2)")),
            Shape::new("complex-line", 2, all.clone(), false, sphere("U(1)")),
            Shape::new("totally-real-plane", 2, all, false, sphere("SO(2)")),
        ],
        SpaceKind::ComplexG2 => {
            let mut out: Vec<Shape> = all
                .iter()
                .map(|b| {
                    Shape::new(format!("root-space{b}"), 2, vec![b.clone()], true, sphere("U(1)"))
                })
                .collect();
            out.push(Shape::new(
                "full-n1",
                dim_n1,
                all,
                true,
                Normalizer::NotTransitive("U(2) on the 4-dimensional complex module is not transitive on S^7".into()),
            ));
            out
        }
        SpaceKind::Other => Vec::new(),
    }
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

    #[test]
    fn kinds() {
        assert_eq!(identify(&rec("RH4")), SpaceKind::RealHyperbolic(4));
        assert_eq!(identify(&rec("SL2(R)/SO2")), SpaceKind::RealHyperbolic(2));
        assert_eq!(identify(&rec("CH3")), SpaceKind::ComplexHyperbolic(3));
        assert_eq!(identify(&rec("HH2")), SpaceKind::QuaternionicHyperbolic(2));
        assert_eq!(identify(&rec("OH2")), SpaceKind::CayleyPlane);
        assert_eq!(identify(&rec("SOo(2,3)/SO2SO3")), SpaceKind::SplitB2(1));
        assert_eq!(identify(&rec("SOo(2,5)/SO2SO5")), SpaceKind::SplitB2(3));
        assert_eq!(identify(&rec("G2_2/SO4")), SpaceKind::SplitG2);
        assert_eq!(identify(&rec("G2_C/G2")), SpaceKind::ComplexG2);
        assert_eq!(identify(&rec("SL4(R)/SO4")), SpaceKind::Other);
    }

    #[test]
    fn spheres() {
        assert!(sphere_transitive("SO(3)", 3).is_some());
        assert!(sphere_transitive("SO(3)", 4).is_none());
        assert!(sphere_transitive("U(2)", 4).is_some());
        assert!(sphere_transitive("G2", 7).is_some());
        assert!(sphere_transitive("SO(1)", 1).is_none());
    }

    #[test]
    fn not_maximal() {
        let r = rec("SL4(R)/SO4");
        assert!(matches!(
            nilpotent_candidates(&r, &phi(&r, &[1])),
            Err(Error::NotMaximal { phi_len: 1, rank: 3 })
        ));
        // dim 𝔫¹ = 1
        let r = rec("RH2");
        assert!(nilpotent_candidates(&r, &Phi::empty(1)).unwrap().is_empty());
    }

    #[test]
    fn g2_split_new_item() {
        let r = rec("G2_2/SO4");
        let c = nilpotent_candidates(&r, &phi(&r, &[2])).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].verdict, Check::Pass);
        assert!(c[0].duplicate_of.is_none());
        assert_eq!(c[0].descriptor.key(), "nilpotent:{2}:full-n1:2");
        assert_eq!(
            c[0].descriptor.support.tags(),
            vec!["a", "g[0,1]", "g[-0,1]", "g[2,1]", "g[3,1]", "g[3,2]"]
        );
        let c = nilpotent_candidates(&r, &phi(&r, &[1])).unwrap();
        assert!(c.iter().all(|x| x.verdict == Check::Fail));
        assert_eq!(c[0].condition_i, Check::Fail);
        assert_eq!(c[0].condition_ii, Check::Pass);
    }

    #[test]
    fn so23_candidates() {
        let r = rec("SOo(2,3)/SO2SO3");
        let c = nilpotent_candidates(&r, &phi(&r, &[2])).unwrap();
        assert_eq!(c.iter().map(|x| x.v.dim).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!((c[0].condition_i, c[0].condition_ii), (Check::Fail, Check::Pass));
        assert_eq!((c[1].condition_i, c[1].condition_ii), (Check::Pass, Check::Fail));
        let c = nilpotent_candidates(&r, &phi(&r, &[1])).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].verdict, Check::Pass);
        assert_eq!(c[0].duplicate_of.as_deref(), Some("reductive:SOo(2,2)"));
    }

    #[test]
    fn g2_complex_advisory() {
        let r = rec("G2_C/G2");
        let c = nilpotent_candidates(&r, &phi(&r, &[2])).unwrap();
        assert_eq!(c[0].verdict, Check::Pass);
        assert!(c[1..].iter().all(|x| x.verdict == Check::Undetermined));
        let c = nilpotent_candidates(&r, &phi(&r, &[1])).unwrap();
        assert_eq!(c.last().unwrap().verdict, Check::Fail);
        assert_eq!(c.iter().filter(|x| x.verdict == Check::Undetermined).count(), 4);
    }

    #[test]
    fn cayley_plane_dimensions() {
        let r = rec("OH2");
        let c = nilpotent_candidates(&r, &Phi::empty(1)).unwrap();
        let new: Vec<u32> = c
            .iter()
            .filter(|x| x.verdict == Check::Pass && x.duplicate_of.is_none())
            .map(|x| x.v.dim)
            .collect();
        assert_eq!(new, vec![2, 3, 4, 6, 7]);
    }

    #[test]
    fn reductive_counts() {
        assert_eq!(reductive_catalog(&rec("RH5")).0.len(), 4);
        assert_eq!(reductive_catalog(&rec("G2_2/SO4")).0.len(), 2);
        assert!(!reductive_catalog(&rec("CH2")).1);
    }
}
