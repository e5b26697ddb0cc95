//! Structural signatures: irreducible components of a root subsystem with
//! their multiplicities, independent of how the subsystem sits inside `Σ`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::rootsys::{build_root_system, Family, Multiplicities, Phi, RootSystem, RootVector};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignatureComponent {
    pub family: Family,
    pub rank: usize,
    /// Sorted multiplicities per length class, longest class first.
    pub mults: Vec<Vec<u32>>,
}

impl fmt::Display for SignatureComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes = self.mults.iter().map(|c| c.iter().join(",")).join("|");
        write!(f, "{}{}[{}]", self.family, self.rank, classes)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct StructuralSignature {
    pub components: Vec<SignatureComponent>,
}

impl StructuralSignature {
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }
}

impl fmt::Display for StructuralSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("point");
        }
        f.write_str(&self.components.iter().join(" x "))
    }
}

/// One irreducible piece of `Σ_Φ` and how its standard labels sit in `Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentEmbedding {
    pub component: SignatureComponent,
    /// `indices[k]` is the ambient simple root playing the role of `α_{k+1}`.
    pub indices: Vec<usize>,
}

impl ComponentEmbedding {
    /// Carry a root written in the component's own labels into `Σ`.
    pub fn to_ambient(&self, local: &RootVector, rank: usize) -> RootVector {
        let mut out = vec![0; rank];
        for (k, &c) in local.0.iter().enumerate() {
            out[self.indices[k]] = c;
        }
        RootVector(out)
    }

    /// Inverse of [`ComponentEmbedding::to_ambient`]; `None` if the root
    /// leaves the component.
    pub fn to_local(&self, ambient: &RootVector) -> Option<RootVector> {
        let inside: BTreeSet<usize> = self.indices.iter().copied().collect();
        if ambient
            .0
            .iter()
            .enumerate()
            .any(|(i, &c)| c != 0 && !inside.contains(&i))
        {
            return None;
        }
        Some(RootVector(self.indices.iter().map(|&i| ambient.0[i]).collect()))
    }
}

/// Connected components of the Dynkin diagram restricted to `phi`.
pub fn connected_components(sys: &RootSystem, phi: &Phi) -> Vec<Vec<usize>> {
    let mut left: BTreeSet<usize> = phi.iter().collect();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        left.remove(&start);
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            let nbrs: Vec<usize> = left
                .iter()
                .copied()
                .filter(|&j| sys.cartan[i][j] != 0)
                .collect();
            for j in nbrs {
                left.remove(&j);
                comp.push(j);
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Decompose `Σ_Φ` into irreducible components with standard labelings.
pub fn decompose<M: Multiplicities + ?Sized>(
    sys: &RootSystem,
    mult: &M,
    phi: &Phi,
) -> Vec<ComponentEmbedding> {
    let mut out: Vec<ComponentEmbedding> = connected_components(sys, phi)
        .into_iter()
        .map(|comp| embed_component(sys, mult, &comp))
        .collect();
    out.sort_by(|a, b| a.component.cmp(&b.component).then(a.indices.cmp(&b.indices)));
    out
}

pub fn signature<M: Multiplicities + ?Sized>(
    sys: &RootSystem,
    mult: &M,
    phi: &Phi,
) -> StructuralSignature {
    StructuralSignature {
        components: decompose(sys, mult, phi)
            .into_iter()
            .map(|e| e.component)
            .collect(),
    }
}

fn embed_component<M: Multiplicities + ?Sized>(
    sys: &RootSystem,
    mult: &M,
    comp: &[usize],
) -> ComponentEmbedding {
    let k = comp.len();
    let sub = Phi::from_zero_based(sys.rank, comp.iter().copied()).expect("indices in range");
    let roots = sys.sub_positive(&sub);
    let doubled = roots
        .iter()
        .any(|r| r.0.iter().all(|c| c % 2 == 0) && roots.contains(&&RootVector(r.0.iter().map(|c| c / 2).collect())));
    let candidates: Vec<Family> = if doubled {
        vec![Family::BC]
    } else {
        Family::ALL
            .iter()
            .copied()
            .filter(|f| *f != Family::BC && f.supports(k) && f.positive_count(k) == roots.len())
            .collect()
    };
    let (family, indices) = candidates
        .into_iter()
        .find_map(|f| {
            let model = build_root_system(f, k).ok()?;
            comp.iter()
                .copied()
                .permutations(k)
                .find(|p| {
                    (0..k).all(|a| (0..k).all(|b| model.cartan[a][b] == sys.cartan[p[a]][p[b]]))
                })
                .map(|p| (f, p))
        })
        .expect("every connected subdiagram of a supported system is supported");

    let mut classes: BTreeMap<std::cmp::Reverse<i64>, Vec<u32>> = BTreeMap::new();
    for r in &roots {
        classes
            .entry(std::cmp::Reverse(sys.squared_norm(r)))
            .or_default()
            .push(mult.mult(r));
    }
    let mults = classes
        .into_values()
        .map(|mut v| {
            v.sort_unstable();
            v
        })
        .collect();
    ComponentEmbedding {
        component: SignatureComponent {
            family,
            rank: k,
            mults,
        },
        indices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_sub_a2() {
        let s = build_root_system(Family::A, 3).unwrap();
        let one = |_: &RootVector| 1u32;
        let phi = Phi::from_one_based(3, &[1, 2]).unwrap();
        let sig = signature(&s, &one, &phi);
        assert_eq!(sig.to_string(), "A2[1,1,1]");
        let phi = Phi::from_one_based(3, &[1, 3]).unwrap();
        assert_eq!(signature(&s, &one, &phi).to_string(), "A1[1] x A1[1]");
    }

    #[test]
    fn bc_component() {
        let s = build_root_system(Family::BC, 2).unwrap();
        let one = |_: &RootVector| 1u32;
        let phi = Phi::from_one_based(2, &[2]).unwrap();
        let e = decompose(&s, &one, &phi);
        assert_eq!(e[0].component.family, Family::BC);
        assert_eq!(e[0].indices, vec![1]);
    }

    #[test]
    fn b2_labels_recovered() {
        let s = build_root_system(Family::B, 3).unwrap();
        let one = |_: &RootVector| 1u32;
        let phi = Phi::from_one_based(3, &[2, 3]).unwrap();
        let e = decompose(&s, &one, &phi);
        assert_eq!(e[0].component.family, Family::B);
        assert_eq!(e[0].indices, vec![1, 2]);
        let local = RootVector(vec![1, 2]);
        assert_eq!(e[0].to_ambient(&local, 3), RootVector(vec![0, 1, 2]));
        assert_eq!(e[0].to_local(&RootVector(vec![0, 1, 2])), Some(local));
        assert_eq!(e[0].to_local(&RootVector(vec![1, 1, 2])), None);
    }
}
