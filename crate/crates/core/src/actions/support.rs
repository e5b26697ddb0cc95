//! Symbolic description of a subalgebra `𝔥 ⊂ 𝔤` by the pieces of the
//! restricted root space decomposition it is made of.
//!
//! Tags (rank-`r` coefficient lists, 1-based roots in the usual order):
//!
//! | tag            | meaning                                             |
//! |----------------|-----------------------------------------------------|
//! | `a`            | all of `𝔞`                                          |
//! | `a[2,1|0,1]`   | the subspace of `𝔞` spanned by the listed rows      |
//! | `a-minus-line` | `𝔞 ⊖ ℓ` for a generic line `ℓ` (foliation family)   |
//! | `k0`, `k0-part`| `𝔨₀`, or a proper subalgebra of it                  |
//! | `k[1,1]`       | `𝔨_α = (1 + θ)𝔤_α`                                  |
//! | `g[1,1]`       | the root space `𝔤_α`                                |
//! | `g[-1,1]`      | `𝔤_{−α}` (sign in front, coefficients of `α`)        |
//! | `g[0,1]-v`     | a proper nonzero subspace of `𝔤_α`                  |
//! | `h:NAME`       | a catalogue subalgebra not aligned with root spaces |
//!
//! `𝔞` coordinates are taken in the basis `H_{α_1}, …, H_{α_r}`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Subspace, Q};
use crate::rootsys::{DiagramAutomorphism, RootVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Full,
    Partial,
}

impl Part {
    fn join(self, other: Part) -> Part {
        if self == Part::Full || other == Part::Full {
            Part::Full
        } else {
            Part::Partial
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum APart {
    Sub(Subspace),
    MinusGenericLine,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Support {
    pub rank: usize,
    pub a: APart,
    pub k0: Option<Part>,
    /// Positive roots `α` with `𝔨_α ⊂ 𝔥`.
    pub k: BTreeSet<RootVector>,
    pub g: BTreeMap<RootVector, Part>,
    pub opaque: BTreeSet<String>,
}

/// Tag order: by height of `|α|`, positive before negative, then
/// lexicographically descending (simple roots first).
fn root_order(a: &RootVector, b: &RootVector) -> Ordering {
    let (pa, pb) = (a.abs(), b.abs());
    pa.height()
        .cmp(&pb.height())
        .then(a.is_negative().cmp(&b.is_negative()))
        .then(pb.0.cmp(&pa.0))
}

impl Support {
    pub fn empty(rank: usize) -> Self {
        Support {
            rank,
            a: APart::Sub(Subspace::zero(rank)),
            k0: None,
            k: BTreeSet::new(),
            g: BTreeMap::new(),
            opaque: BTreeSet::new(),
        }
    }

    pub fn with_a(mut self, a: Subspace) -> Self {
        self.add_a(&a);
        self
    }

    pub fn add_a(&mut self, sub: &Subspace) {
        if let APart::Sub(cur) = &self.a {
            self.a = APart::Sub(cur.sum(sub));
        }
    }

    pub fn a_subspace(&self) -> Option<&Subspace> {
        match &self.a {
            APart::Sub(s) => Some(s),
            APart::MinusGenericLine => None,
        }
    }

    pub fn add_g(&mut self, root: RootVector, part: Part) {
        let e = self.g.entry(root).or_insert(part);
        *e = e.join(part);
    }

    pub fn add_k(&mut self, root: RootVector) {
        self.k.insert(root.abs());
    }

    pub fn add_k0(&mut self, part: Part) {
        self.k0 = Some(match self.k0 {
            Some(p) => p.join(part),
            None => part,
        });
    }

    pub fn union(&self, other: &Support) -> Support {
        let mut out = self.clone();
        match (&self.a, &other.a) {
            (APart::Sub(x), APart::Sub(y)) => out.a = APart::Sub(x.sum(y)),
            _ => out.a = APart::MinusGenericLine,
        }
        if let Some(p) = other.k0 {
            out.add_k0(p);
        }
        out.k.extend(other.k.iter().cloned());
        for (r, p) in &other.g {
            out.add_g(r.clone(), *p);
        }
        out.opaque.extend(other.opaque.iter().cloned());
        out
    }

    /// Every root (of either kind of tag), as positive representatives.
    pub fn root_mentions(&self) -> impl Iterator<Item = RootVector> + '_ {
        self.k.iter().cloned().chain(self.g.keys().map(|r| r.abs()))
    }

    pub fn permute(&self, s: &DiagramAutomorphism) -> Support {
        Support {
            rank: self.rank,
            a: match &self.a {
                APart::Sub(x) => APart::Sub(x.permute(&s.perm)),
                APart::MinusGenericLine => APart::MinusGenericLine,
            },
            k0: self.k0,
            k: self.k.iter().map(|r| s.apply_root(r)).collect(),
            g: self.g.iter().map(|(r, p)| (s.apply_root(r), *p)).collect(),
            opaque: self.opaque.clone(),
        }
    }

    pub fn tags(&self) -> Vec<String> {
        let mut out = Vec::new();
        match &self.a {
            APart::MinusGenericLine => out.push("a-minus-line".to_string()),
            APart::Sub(s) if s.is_zero() => {}
            APart::Sub(s) if s.is_full() => out.push("a".to_string()),
            APart::Sub(s) => out.push(format!(
                "a[{}]",
                s.integer_rows().iter().map(|r| r.iter().join(",")).join("|")
            )),
        }
        match self.k0 {
            Some(Part::Full) => out.push("k0".to_string()),
            Some(Part::Partial) => out.push("k0-part".to_string()),
            None => {}
        }
        let mut ks: Vec<&RootVector> = self.k.iter().collect();
        ks.sort_by(|a, b| root_order(a, b));
        out.extend(ks.into_iter().map(|r| format!("k{r}")));
        let mut gs: Vec<(&RootVector, &Part)> = self.g.iter().collect();
        gs.sort_by(|a, b| root_order(a.0, b.0));
        for (r, p) in gs {
            let body = if r.is_negative() {
                format!("g[-{}]", r.neg().0.iter().join(","))
            } else {
                format!("g{r}")
            };
            out.push(match p {
                Part::Full => body,
                Part::Partial => format!("{body}-v"),
            });
        }
        out.extend(self.opaque.iter().map(|n| format!("h:{n}")));
        out
    }

    pub fn from_tags<S: AsRef<str>>(rank: usize, tags: &[S]) -> Result<Support> {
        let mut s = Support::empty(rank);
        for t in tags {
            s.add_tag(t.as_ref().trim())?;
        }
        Ok(s)
    }

    fn add_tag(&mut self, tag: &str) -> Result<()> {
        let bad = |msg: &str| Error::Descriptor(format!("support tag `{tag}`: {msg}"));
        match tag {
            "a" => self.add_a(&Subspace::full(self.rank)),
            "a-minus-line" => self.a = APart::MinusGenericLine,
            "k0" => self.add_k0(Part::Full),
            "k0-part" => self.add_k0(Part::Partial),
            _ if tag.starts_with("h:") && tag.len() > 2 => {
                self.opaque.insert(tag[2..].to_string());
            }
            _ if tag.starts_with("a[") && tag.ends_with(']') => {
                let body = &tag[2..tag.len() - 1];
                let mut rows = Vec::new();
                for row in body.split('|') {
                    let v = parse_ints(row).ok_or_else(|| bad("expected integer rows"))?;
                    if v.len() != self.rank {
                        return Err(bad("row length differs from the rank"));
                    }
                    rows.push(v);
                }
                self.add_a(&Subspace::span(self.rank, rows));
            }
            _ if tag.starts_with("k[") && tag.ends_with(']') => {
                let v = parse_ints(&tag[2..tag.len() - 1]).ok_or_else(|| bad("expected coefficients"))?;
                let r = self.root_of(v).ok_or_else(|| bad("expected a nonzero coefficient list of the right length"))?;
                self.add_k(r);
            }
            _ if tag.starts_with("g[") => {
                let (body, part) = match tag.strip_suffix("-v") {
                    Some(b) => (b, Part::Partial),
                    None => (tag, Part::Full),
                };
                let inner = body
                    .strip_prefix("g[")
                    .and_then(|b| b.strip_suffix(']'))
                    .ok_or_else(|| bad("unbalanced brackets"))?;
                let (neg, inner) = match inner.strip_prefix('-') {
                    Some(i) => (true, i),
                    None => (false, inner),
                };
                let v = parse_ints(inner).ok_or_else(|| bad("expected coefficients"))?;
                if v.iter().any(|&c| c < 0) {
                    return Err(bad("write negative roots as g[-c1,c2,...]"));
                }
                let r = self.root_of(v).ok_or_else(|| bad("expected a nonzero coefficient list of the right length"))?;
                self.add_g(if neg { r.neg() } else { r }, part);
            }
            _ => return Err(bad("unknown tag")),
        }
        Ok(())
    }

    fn root_of(&self, v: Vec<i64>) -> Option<RootVector> {
        if v.len() != self.rank || v.iter().all(|c| c.is_zero()) {
            return None;
        }
        Some(RootVector(v.into_iter().map(|c| c as i32).collect()))
    }

    /// `𝔞`-part as rational vectors, or `None` for the generic family.
    pub fn a_rows(&self) -> Option<Vec<Vec<Q>>> {
        self.a_subspace().map(|s| s.rows().to_vec())
    }
}

fn parse_ints(s: &str) -> Option<Vec<i64>> {
    s.split(',').map(|c| c.trim().parse::<i64>().ok()).collect()
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.tags();
        if t.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&t.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        let tags = ["a[1,0]", "k0-part", "k[1,0]", "g[0,1]", "g[-0,1]", "g[1,1]-v", "h:SU(1,2)"];
        let s = Support::from_tags(2, &tags).unwrap();
        assert_eq!(s.tags(), tags);
        assert_eq!(Support::from_tags(2, &s.tags()).unwrap(), s);
    }

    #[test]
    fn a_rows_are_canonical() {
        let s = Support::from_tags(2, &["a[2,4]"]).unwrap();
        assert_eq!(s.tags(), vec!["a[1,2]"]);
        let full = Support::from_tags(2, &["a[1,0|0,3]"]).unwrap();
        assert_eq!(full.tags(), vec!["a"]);
    }

    #[test]
    fn full_beats_partial() {
        let s = Support::from_tags(2, &["g[1,0]-v", "g[1,0]"]).unwrap();
        assert_eq!(s.tags(), vec!["g[1,0]"]);
    }

    #[test]
    fn bad_tags() {
        for t in ["x", "g[1]", "g[0,0]", "g[1,-1]", "a[1,x]", "k[]"] {
            assert!(Support::from_tags(2, &[t]).is_err(), "{t}");
        }
    }

    #[test]
    fn permutation_moves_roots_and_a() {
        let s = Support::from_tags(2, &["a[1,0]", "g[1,1]", "k[1,0]"]).unwrap();
        let sw = DiagramAutomorphism { perm: vec![1, 0] };
        assert_eq!(s.permute(&sw).tags(), vec!["a[0,1]", "k[0,1]", "g[1,1]"]);
    }
}
