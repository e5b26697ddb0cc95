use std::sync::OnceLock;

use cohomo::actions::{
    canonical_extend, foliation_congruent, nilpotent_candidates, point_inner,
    Check, Foliation, Part, Tri,
};
use cohomo::classify::{classify_in, ClassifyOptions};
use cohomo::parabolic::{gradation, langlands, level_roots};
use cohomo::rootsys::{build_root_system, diagram_automorphisms, level, Family, Phi, RootSystem};
use cohomo::spacedb::{dim_space, Database, SymmetricSpaceRecord, BUNDLED_DB};
use proptest::prelude::*;

fn db() -> &'static Database {
    static DB: OnceLock<Database> = OnceLock::new();
    DB.get_or_init(|| Database::parse(BUNDLED_DB).unwrap())
}

fn spaces() -> &'static [SymmetricSpaceRecord] {
    static S: OnceLock<Vec<SymmetricSpaceRecord>> = OnceLock::new();
    S.get_or_init(|| {
        let mut out = Vec::new();
        for t in db().templates() {
            if t.is_parametric() {
                out.extend((1..=7).filter_map(|n| t.instantiate(Some(n)).ok()));
            } else {
                out.push(t.instantiate(None).unwrap());
            }
        }
        out
    })
}

fn higher_rank() -> Vec<&'static SymmetricSpaceRecord> {
    spaces().iter().filter(|r| r.rank() >= 2).collect()
}

fn systems() -> &'static [RootSystem] {
    static S: OnceLock<Vec<RootSystem>> = OnceLock::new();
    S.get_or_init(|| {
        [
            (Family::A, 1),
            (Family::A, 2),
            (Family::A, 3),
            (Family::A, 4),
            (Family::B, 2),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::BC, 2),
            (Family::BC, 3),
            (Family::F4, 4),
            (Family::G2, 2),
        ]
        .into_iter()
        .map(|(f, r)| build_root_system(f, r).unwrap())
        .collect()
    })
}

fn phi_from_mask(rank: usize, mask: u32) -> Phi {
    Phi::from_zero_based(rank, (0..rank).filter(|i| mask >> i & 1 == 1)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn level_is_additive(si in 0..12usize, mask in any::<u32>(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let sys = &systems()[si];
        let phi = phi_from_mask(sys.rank, mask);
        let x = a.get(&sys.positive_roots);
        let y = b.get(&sys.positive_roots);
        let lv = |r| level(r, &phi).unwrap();
        prop_assert!(lv(x) >= 0);
        let s = x.add(y);
        if sys.contains(&s) {
            prop_assert_eq!(lv(&s), lv(x) + lv(y));
        }
        let d = x.add(&y.neg());
        if sys.contains(&d) || sys.contains(&d.neg()) {
            prop_assert_eq!(lv(&d), lv(x) - lv(y));
        }
    }

    #[test]
    fn dimension_identities(i in any::<prop::sample::Index>(), mask in any::<u32>()) {
        let r = i.get(spaces());
        let phi = phi_from_mask(r.rank(), mask);
        let d = langlands(r, &phi).unwrap();
        let dim_g = r.dim_isotropy.unwrap() + dim_space(r);
        prop_assert_eq!(2 * d.dim_n_phi + d.dim_l_phi, dim_g);
        prop_assert_eq!(d.dim_b_phi + d.dim_a_phi + d.dim_n_phi, dim_space(r));
        prop_assert_eq!(d.dim_q_phi, d.dim_k_phi + dim_space(r));
        if !phi.is_full() {
            let g = gradation(r, &phi).unwrap();
            prop_assert_eq!(g.level_dims.iter().sum::<u64>(), d.dim_n_phi);
            prop_assert_eq!(g.depth as usize, g.level_dims.len());
            prop_assert!(level_roots(r, &phi, g.depth as i32 + 1).is_empty());
        }
    }

    #[test]
    fn foliation_congruence_is_an_equivalence(
        i in any::<prop::sample::Index>(),
        xs in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 3),
        flags in prop::collection::vec(0usize..8, 3),
    ) {
        let r = i.get(spaces());
        let rank = r.rank();
        let fs: Vec<Foliation> = xs
            .iter()
            .zip(&flags)
            .map(|(x, &f)| {
                if f < 2 {
                    Foliation::N(f % rank)
                } else if x[..rank].iter().all(|&c| c == 0) {
                    Foliation::a_int(&vec![1; rank])
                } else {
                    Foliation::a_int(&x[..rank])
                }
            })
            .collect();
        let c = |a, b| foliation_congruent(r, a, b);
        for a in &fs {
            prop_assert!(c(a, a));
            for b in &fs {
                prop_assert_eq!(c(a, b), c(b, a));
                for d in &fs {
                    prop_assert!(!(c(a, b) && c(b, d)) || c(a, d));
                }
            }
        }
    }

    #[test]
    fn canonical_extension_keeps_codim(i in any::<prop::sample::Index>(), mask in any::<u32>(), codim in 1u32..12) {
        let r = *i.get(&higher_rank());
        let phi = phi_from_mask(r.rank(), mask);
        prop_assume!(!phi.is_full() && !phi.is_empty());
        let (inner, mut orbit) = point_inner(r, &phi);
        orbit.singular_codim = codim;
        let (ext, data) = canonical_extend(r, &phi, &inner, &orbit).unwrap();
        prop_assert_eq!(data.singular_codim, codim);
        // The nilradical n_phi is contained in the extension.
        for root in &r.system.positive_roots {
            if level(root, &phi).unwrap() > 0 {
                prop_assert_eq!(ext.support.g.get(root), Some(&Part::Full), "{} missing", root);
            }
        }
    }

    #[test]
    fn accepted_nilpotent_items(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let r = *i.get(&higher_rank());
        let removed = j.index(r.rank());
        let phi = Phi::maximal(r.rank(), removed);
        for c in nilpotent_candidates(r, &phi).unwrap() {
            if c.verdict == Check::Pass {
                prop_assert_eq!(c.orbit.singular_codim, c.v.dim, "{}", c.descriptor.key());
                prop_assert!(c.orbit.contains_f_phi, "{}", c.descriptor.key());
                prop_assert!(c.orbit.totally_geodesic != Tri::No || c.orbit.minimal != Tri::No);
            }
        }
    }
}

/// The undeduplicated classification is closed under diagram symmetries.
#[test]
fn classification_is_relabel_invariant() {
    for name in ["SL3(R)/SO3", "SOo(2,3)/SO2SO3", "G2_2/SO4", "G2_C/G2", "SL4(R)/SO4"] {
        let r = db().lookup(name, None).unwrap();
        let rep = classify_in(db(), &r, &ClassifyOptions { dedup: false }).unwrap();
        for s in diagram_automorphisms(&r.system, &r.mult) {
            for it in &rep.items {
                let img = it.descriptor.support.permute(&s);
                assert!(
                    rep.items
                        .iter()
                        .any(|o| o.descriptor.support == img && o.orbit.singular_codim == it.orbit.singular_codim),
                    "{name}: image of {} under {s} is not in the list",
                    it.key
                );
            }
        }
    }
}
