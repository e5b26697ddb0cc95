//! Parabolic subalgebras `𝔮_Φ`: Chevalley/Langlands dimensions, boundary
//! components and the `H^Φ` gradation of the nilradical.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{diagram_automorphisms, level, Multiplicities, Phi, RootVector};
use crate::spacedb::{self, dim_space, Database, StructuralSignature, SymmetricSpaceRecord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicData {
    pub phi: Phi,
    pub dim_n_phi: u64,
    pub dim_a_phi: u64,
    pub dim_a_upper_phi: u64,
    pub dim_l_phi: u64,
    pub dim_m_phi: u64,
    pub dim_k_phi: u64,
    pub dim_b_phi: u64,
    pub dim_p_phi: u64,
    pub dim_q_phi: u64,
    /// `dim 𝔷_Φ` when known (`None` is reported as unknown).
    pub dim_z_phi: Option<u64>,
    pub is_minimal: bool,
    pub is_maximal: bool,
    /// `Σ_Φ⁺`.
    pub sigma_phi_positive: Vec<RootVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gradation {
    pub level_dims: Vec<u64>,
    pub depth: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryDescriptor {
    pub phi: Phi,
    pub signature: StructuralSignature,
    pub signature_text: String,
    pub rank: usize,
    pub dim: u64,
    /// `dim F_Φ = dim B_Φ + r − |Φ|`.
    pub dim_f: u64,
    pub name_candidates: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicEntry {
    pub phi: Phi,
    pub data: ParabolicData,
    pub class_id: usize,
}

pub(crate) fn check_phi(rec: &SymmetricSpaceRecord, phi: &Phi) -> Result<()> {
    if phi.rank() != rec.rank() {
        return Err(Error::IndexOutOfRange {
            index: phi.rank(),
            rank: rec.rank(),
        });
    }
    Ok(())
}

/// Sum of `m_α` over positive roots supported on `phi`.
fn sub_mult(rec: &SymmetricSpaceRecord, phi: &Phi) -> u64 {
    rec.system
        .sub_positive(phi)
        .into_iter()
        .map(|r| rec.mult.mult(r) as u64)
        .sum()
}

pub fn langlands(rec: &SymmetricSpaceRecord, phi: &Phi) -> Result<ParabolicData> {
    check_phi(rec, phi)?;
    let r = rec.rank() as u64;
    let k = phi.len() as u64;
    let inside = sub_mult(rec, phi);
    let dim_n = rec.mult.total() - inside;
    let dim_a = r - k;
    let dim_k = rec.dim_k0 + inside;
    let dim_b = k + inside;
    let dim_m = dim_k + dim_b;
    let dim_l = dim_m + dim_a;
    let dim_z = if phi.is_empty() || rec.dim_k0 == 0 {
        // 𝔪_∅ = 𝔨₀; for split forms 𝔪_Φ is semisimple.
        Some(if phi.is_empty() { rec.dim_k0 } else { 0 })
    } else {
        rec.recorded_center(phi)
    };
    Ok(ParabolicData {
        phi: phi.clone(),
        dim_n_phi: dim_n,
        dim_a_phi: dim_a,
        dim_a_upper_phi: k,
        dim_l_phi: dim_l,
        dim_m_phi: dim_m,
        dim_k_phi: dim_k,
        dim_b_phi: dim_b,
        dim_p_phi: dim_b + dim_a,
        dim_q_phi: dim_l + dim_n,
        dim_z_phi: dim_z,
        is_minimal: phi.is_empty(),
        is_maximal: phi.len() + 1 == rec.rank(),
        sigma_phi_positive: rec.system.sub_positive(phi).into_iter().cloned().collect(),
    })
}

/// Positive roots of level `nu` with respect to `phi`.
pub fn level_roots(rec: &SymmetricSpaceRecord, phi: &Phi, nu: i32) -> Vec<RootVector> {
    rec.system
        .positive_roots
        .iter()
        .filter(|r| level(r, phi).ok() == Some(nu))
        .cloned()
        .collect()
}

/// `m_Φ = α̃(H^Φ)`.
pub fn depth(rec: &SymmetricSpaceRecord, phi: &Phi) -> Result<u32> {
    check_phi(rec, phi)?;
    Ok(level(&rec.system.highest, phi)? as u32)
}

pub fn gradation(rec: &SymmetricSpaceRecord, phi: &Phi) -> Result<Gradation> {
    check_phi(rec, phi)?;
    if phi.is_full() {
        return Err(Error::EmptyGradation);
    }
    let depth = depth(rec, phi)?;
    let mut level_dims = vec![0u64; depth as usize];
    for root in &rec.system.positive_roots {
        let nu = level(root, phi)?;
        if nu > 0 {
            level_dims[nu as usize - 1] += rec.mult.mult(root) as u64;
        }
    }
    debug_assert!(level_dims.iter().all(|&d| d > 0), "empty gradation level");
    Ok(Gradation { level_dims, depth })
}

pub fn boundary_component_in(
    db: &Database,
    rec: &SymmetricSpaceRecord,
    phi: &Phi,
) -> Result<BoundaryDescriptor> {
    check_phi(rec, phi)?;
    let data = langlands(rec, phi)?;
    let signature = spacedb::signature(&rec.system, &rec.mult, phi);
    let name_candidates = if signature.components.is_empty() {
        Vec::new()
    } else {
        db.match_signature(&signature)
    };
    Ok(BoundaryDescriptor {
        phi: phi.clone(),
        signature_text: signature.to_string(),
        signature,
        rank: phi.len(),
        dim: data.dim_b_phi,
        dim_f: data.dim_b_phi + data.dim_a_phi,
        name_candidates,
    })
}

pub fn boundary_component(rec: &SymmetricSpaceRecord, phi: &Phi) -> Result<BoundaryDescriptor> {
    boundary_component_in(&Database::bundled()?, rec, phi)
}

/// All `2^r` subsets with their data and a conjugacy class id; two subsets
/// share an id iff a multiplicity-preserving diagram automorphism maps one to
/// the other.
pub fn enumerate_parabolics(rec: &SymmetricSpaceRecord) -> Result<Vec<ParabolicEntry>> {
    let auts = diagram_automorphisms(&rec.system, &rec.mult);
    let mut ids: BTreeMap<Phi, usize> = BTreeMap::new();
    let mut out = Vec::new();
    for phi in Phi::all(rec.rank()) {
        let canon = auts
            .iter()
            .map(|s| s.apply_phi(&phi))
            .min()
            .expect("identity is present");
        let next = ids.len();
        let class_id = *ids.entry(canon).or_insert(next);
        out.push(ParabolicEntry {
            data: langlands(rec, &phi)?,
            phi,
            class_id,
        });
    }
    Ok(out)
}

/// Sanity identity used by tests: `dim M = dim 𝔟_Φ + dim 𝔞_Φ + dim 𝔫_Φ`.
pub fn horospherical_holds(rec: &SymmetricSpaceRecord, d: &ParabolicData) -> bool {
    dim_space(rec) == d.dim_b_phi + d.dim_a_phi + d.dim_n_phi
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(name: &str) -> SymmetricSpaceRecord {
        Database::parse(spacedb::BUNDLED_DB)
            .unwrap()
            .lookup(name, None)
            .unwrap()
    }

    fn phi(r: &SymmetricSpaceRecord, idx: &[usize]) -> Phi {
        Phi::from_one_based(r.rank(), idx).unwrap()
    }

    #[test]
    fn sl3_alpha1() {
        let r = rec("SL3(R)/SO3");
        let d = langlands(&r, &phi(&r, &[1])).unwrap();
        assert_eq!((d.dim_l_phi, d.dim_m_phi, d.dim_k_phi, d.dim_n_phi, d.dim_a_phi), (4, 3, 1, 2, 1));
        assert_eq!(d.dim_z_phi, Some(0));
    }

    #[test]
    fn g2c_alpha2() {
        let r = rec("G2_C/G2");
        let d = langlands(&r, &phi(&r, &[2])).unwrap();
        assert_eq!((d.dim_k_phi, d.dim_m_phi, d.dim_l_phi), (4, 7, 8));
        assert_eq!(d.dim_z_phi, Some(1));
        let g = gradation(&r, &phi(&r, &[2])).unwrap();
        assert_eq!(g.level_dims, vec![4, 2, 4]);
        assert_eq!(g.depth, 3);
        let b = boundary_component(&r, &phi(&r, &[2])).unwrap();
        assert_eq!(b.dim, 3);
        assert!(b.name_candidates.contains(&"RH3".to_string()));
    }

    #[test]
    fn full_phi() {
        let r = rec("G2_2/SO4");
        let d = langlands(&r, &Phi::full(2)).unwrap();
        assert_eq!(d.dim_n_phi, 0);
        assert_eq!(d.dim_a_phi, 0);
        // dim 𝔤 = dim 𝔨 + dim M = 6 + 8
        assert_eq!(d.dim_q_phi, 14);
        assert!(matches!(gradation(&r, &Phi::full(2)), Err(Error::EmptyGradation)));
    }

    #[test]
    fn g2_split_gradation() {
        let r = rec("G2_2/SO4");
        let g = gradation(&r, &phi(&r, &[2])).unwrap();
        assert_eq!((g.level_dims, g.depth), (vec![2, 1, 2], 3));
    }

    #[test]
    fn sl4_boundary() {
        let r = rec("SL4(R)/SO4");
        let b = boundary_component(&r, &phi(&r, &[1, 2])).unwrap();
        assert_eq!((b.rank, b.dim), (2, 5));
        assert_eq!(b.name_candidates, vec!["SL3(R)/SO3"]);
        let e = boundary_component(&r, &Phi::empty(3)).unwrap();
        assert_eq!(e.dim, 0);
        assert!(e.name_candidates.is_empty());
    }

    #[test]
    fn conjugacy_classes() {
        let sl3 = rec("SL3(R)/SO3");
        let e = enumerate_parabolics(&sl3).unwrap();
        assert_eq!(e.len(), 4);
        let id = |p: &[usize]| e.iter().find(|x| x.phi.one_based() == p).unwrap().class_id;
        assert_eq!(id(&[1]), id(&[2]));
        let so = rec("SOo(2,3)/SO2SO3");
        let e = enumerate_parabolics(&so).unwrap();
        let id = |p: &[usize]| e.iter().find(|x| x.phi.one_based() == p).unwrap().class_id;
        assert_ne!(id(&[1]), id(&[2]));
    }

    #[test]
    fn out_of_range_phi() {
        let r = rec("SL3(R)/SO3");
        assert!(langlands(&r, &Phi::full(3)).is_err());
    }
}
