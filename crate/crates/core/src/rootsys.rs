//! Restricted root systems in simple-root coordinates.
//!
//! A root is stored as its integer coefficient vector over the simple roots
//! `α_1, …, α_r`. Positive roots are produced by closing the simple roots
//! under root strings computed from the Cartan matrix, so everything is exact.
//!
//! Labeling conventions (Bourbaki unless noted):
//!
//! * `B_r`: `α_r` is the short root; in `B_2`, `α_1` is long and the highest
//!   root is `α_1 + 2α_2`.
//! * `C_r`: `α_r` is the long root.
//! * `G_2`: `α_1` is short, highest root `3α_1 + 2α_2`.
//! * `F_4`: `α_1, α_2` long, `α_3, α_4` short.
//! * `E_r`: `α_2` is attached to `α_4`, chain `α_1 − α_3 − α_4 − …`.
//! * `BC_r`: the roots of `B_r` together with `2α` for every short root `α`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank the enumerator accepts.
pub const MAX_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    BC,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
        Family::BC,
    ];

    /// Whether `(self, rank)` names a supported root system.
    pub fn supports(self, rank: usize) -> bool {
        match self {
            Family::A => (1..=MAX_RANK).contains(&rank),
            Family::B => (2..=MAX_RANK).contains(&rank),
            Family::C => (3..=MAX_RANK).contains(&rank),
            Family::D => (4..=MAX_RANK).contains(&rank),
            Family::BC => (1..=MAX_RANK).contains(&rank),
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
            Family::F4 => rank == 4,
            Family::G2 => rank == 2,
        }
    }

    /// Number of positive roots of the system of this family and rank.
    pub fn positive_count(self, rank: usize) -> usize {
        match self {
            Family::A => rank * (rank + 1) / 2,
            Family::B | Family::C => rank * rank,
            Family::D => rank * (rank - 1),
            Family::BC => rank * rank + rank,
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
            Family::F4 => 24,
            Family::G2 => 6,
        }
    }

    /// Families whose rank is implied by the name.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
            Family::BC => "BC",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnsupportedFamily {
                family: s.to_string(),
                rank: 0,
            })
    }
}

/// Coefficients of a root over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i32>);

impl RootVector {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        RootVector(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn neg(&self) -> Self {
        RootVector(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &RootVector) -> Self {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i32) -> Self {
        RootVector(self.0.iter().map(|c| c * k).collect())
    }

    /// Positive representative of `±self`.
    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Support is contained in `phi` (i.e. the root lies in the span of `phi`).
    pub fn supported_on(&self, phi: &Phi) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || phi.contains(i))
    }

    /// Human readable form such as `α1+2α2` (or `-α2`).
    pub fn pretty(&self) -> String {
        let sign = if self.is_negative() { "-" } else { "" };
        let body = self
            .abs()
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    format!("α{}", i + 1)
                } else {
                    format!("{}α{}", c, i + 1)
                }
            })
            .join("+");
        if self.is_negative() && body.contains('+') {
            format!("-({body})")
        } else {
            format!("{sign}{body}")
        }
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

/// A subset of the simple roots, held as 0-based indices together with the rank.
///
/// Displayed and serialized 1-based, matching the `α_1, …, α_r` labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phi {
    rank: usize,
    set: BTreeSet<usize>,
}

impl Phi {
    pub fn empty(rank: usize) -> Self {
        Phi {
            rank,
            set: BTreeSet::new(),
        }
    }

    pub fn full(rank: usize) -> Self {
        Phi {
            rank,
            set: (0..rank).collect(),
        }
    }

    pub fn from_zero_based<I: IntoIterator<Item = usize>>(rank: usize, idx: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for i in idx {
            if i >= rank {
                return Err(Error::IndexOutOfRange { index: i + 1, rank });
            }
            set.insert(i);
        }
        Ok(Phi { rank, set })
    }

    pub fn from_one_based(rank: usize, idx: &[usize]) -> Result<Self> {
        let mut zero = Vec::with_capacity(idx.len());
        for &i in idx {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            zero.push(i - 1);
        }
        Self::from_zero_based(rank, zero)
    }

    /// `Λ \ {α_j}` for 0-based `j`.
    pub fn maximal(rank: usize, j: usize) -> Self {
        Phi {
            rank,
            set: (0..rank).filter(|&i| i != j).collect(),
        }
    }

    /// All `2^r` subsets, ordered by size then lexicographically.
    pub fn all(rank: usize) -> Vec<Phi> {
        let mut out: Vec<Phi> = (0u32..(1u32 << rank))
            .map(|mask| Phi {
                rank,
                set: (0..rank).filter(|i| mask & (1 << i) != 0).collect(),
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.set.cmp(&b.set)));
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.set.len() == self.rank
    }

    pub fn contains(&self, i: usize) -> bool {
        self.set.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.set.iter().copied()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.set.iter().copied().collect()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.set.iter().map(|i| i + 1).collect()
    }

    pub fn complement(&self) -> Phi {
        Phi {
            rank: self.rank,
            set: (0..self.rank).filter(|i| !self.set.contains(i)).collect(),
        }
    }

    pub fn is_subset(&self, other: &Phi) -> bool {
        self.set.is_subset(&other.set)
    }

    /// The single removed index when `|Φ| = r − 1`.
    pub fn removed_index(&self) -> Option<usize> {
        let c = self.complement();
        (c.len() == 1).then(|| c.set.iter().copied().next().unwrap())
    }
}

impl fmt::Display for Phi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.set.iter().map(|i| i + 1).join(","))
    }
}

impl Serialize for Phi {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

/// Source of root multiplicities `m_α`.
pub trait Multiplicities {
    fn mult(&self, root: &RootVector) -> u32;
}

impl<F: Fn(&RootVector) -> u32> Multiplicities for F {
    fn mult(&self, root: &RootVector) -> u32 {
        self(root)
    }
}

/// Permutation `σ` of the simple roots, `perm[i] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DiagramAutomorphism {
    pub perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(rank: usize) -> Self {
        DiagramAutomorphism {
            perm: (0..rank).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Image of a root: the coefficient of `α_i` moves to `α_{σ(i)}`.
    pub fn apply_root(&self, root: &RootVector) -> RootVector {
        let mut out = vec![0; root.rank()];
        for (i, &c) in root.0.iter().enumerate() {
            out[self.perm[i]] = c;
        }
        RootVector(out)
    }

    pub fn apply_phi(&self, phi: &Phi) -> Phi {
        Phi {
            rank: phi.rank,
            set: phi.iter().map(|i| self.perm[i]).collect(),
        }
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.perm[i]
    }
}

impl fmt::Display for DiagramAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("id");
        }
        let moved = self
            .perm
            .iter()
            .enumerate()
            .filter(|(i, &p)| *i != p)
            .map(|(i, &p)| format!("{}->{}", i + 1, p + 1))
            .join(",");
        write!(f, "σ({moved})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// `cartan[i][j] = <α_i^∨, α_j> = 2(α_i, α_j) / (α_i, α_i)`.
    pub cartan: Vec<Vec<i32>>,
    /// Squared lengths `(α_i, α_i)` with the shortest simple root at 2.
    pub norms: Vec<i64>,
    pub positive_roots: Vec<RootVector>,
    pub highest: RootVector,
    index: HashMap<RootVector, usize>,
}

impl Serialize for RootSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            family: String,
            rank: usize,
            positive_roots: &'a [RootVector],
            highest: &'a RootVector,
        }
        View {
            family: self.family.to_string(),
            rank: self.rank,
            positive_roots: &self.positive_roots,
            highest: &self.highest,
        }
        .serialize(s)
    }
}

/// Build the positive roots of `family` at `rank`.
///
/// Roots are ordered by height, then by descending coefficient vector, so the
/// simple roots come first as `α_1, …, α_r`.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    if !family.supports(rank) {
        return Err(Error::UnsupportedFamily {
            family: family.to_string(),
            rank,
        });
    }
    let (cartan, norms) = cartan_data(family, rank);
    let mut roots = string_closure(&cartan);
    if family == Family::BC {
        let shortest = norms.iter().copied().min().unwrap_or(2);
        let doubled: Vec<_> = roots
            .iter()
            .filter(|r| squared_norm(&cartan, &norms, r) == shortest)
            .map(|r| r.scale(2))
            .collect();
        roots.extend(doubled);
    }
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
    let highest = roots
        .iter()
        .find(|h| roots.iter().all(|r| dominates(h, r)))
        .cloned()
        .expect("positive roots have a unique maximal element");
    let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    Ok(RootSystem {
        family,
        rank,
        cartan,
        norms,
        positive_roots: roots,
        highest,
        index,
    })
}

fn dominates(a: &RootVector, b: &RootVector) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| x >= y)
}

fn cartan_data(family: Family, rank: usize) -> (Vec<Vec<i32>>, Vec<i64>) {
    let r = rank;
    let mut a = vec![vec![0i32; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, a_ij: i32, a_ji: i32| {
        a[i][j] = a_ij;
        a[j][i] = a_ji;
    };
    let mut norms = vec![2i64; r];
    match family {
        Family::A => {
            for i in 0..r.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B | Family::BC => {
            for i in 0..r.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
            if r >= 2 {
                link(r - 2, r - 1, -1, -2);
                norms = vec![4; r];
                norms[r - 1] = 2;
            }
        }
        Family::C => {
            for i in 0..r - 1 {
                link(i, i + 1, -1, -1);
            }
            link(r - 2, r - 1, -2, -1);
            norms[r - 1] = 4;
        }
        Family::D => {
            for i in 0..r - 2 {
                link(i, i + 1, -1, -1);
            }
            link(r - 3, r - 1, -1, -1);
        }
        Family::E6 | Family::E7 | Family::E8 => {
            for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)] {
                if i < r && j < r {
                    link(i, j, -1, -1);
                }
            }
        }
        Family::F4 => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
            norms = vec![4, 4, 2, 2];
        }
        Family::G2 => {
            link(0, 1, -3, -1);
            norms = vec![2, 6];
        }
    }
    (a, norms)
}

/// `<β, α_i^∨>` for a root given in simple-root coordinates.
fn pairing(cartan: &[Vec<i32>], root: &RootVector, i: usize) -> i32 {
    root.0.iter().enumerate().map(|(j, &c)| c * cartan[i][j]).sum()
}

fn squared_norm(cartan: &[Vec<i32>], norms: &[i64], root: &RootVector) -> i64 {
    let r = root.rank();
    let mut total = 0i64;
    for i in 0..r {
        for j in 0..r {
            total += root.0[i] as i64 * root.0[j] as i64 * cartan[i][j] as i64 * norms[i] / 2;
        }
    }
    total
}

/// Breadth-first closure of the simple roots under `α_i`-strings.
fn string_closure(cartan: &[Vec<i32>]) -> Vec<RootVector> {
    let r = cartan.len();
    let mut seen: HashSet<RootVector> = HashSet::new();
    let mut order = Vec::new();
    let mut queue: VecDeque<RootVector> = (0..r).map(|i| RootVector::simple(r, i)).collect();
    for s in &queue {
        seen.insert(s.clone());
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..r {
            // p = largest k with β − kα_i a root.
            let mut p = 0;
            let mut down = beta.clone();
            loop {
                down.0[i] -= 1;
                if down.0[i] >= 0 && seen.contains(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            let q = p - pairing(cartan, &beta, i);
            if q > 0 {
                let mut up = beta.clone();
                up.0[i] += 1;
                if seen.insert(up.clone()) {
                    queue.push_back(up);
                }
            }
        }
        order.push(beta);
    }
    order
}

impl RootSystem {
    pub fn contains(&self, root: &RootVector) -> bool {
        self.index.contains_key(&root.abs())
    }

    pub fn position(&self, root: &RootVector) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// `(α, α)` in the normalization of [`RootSystem::norms`].
    pub fn squared_norm(&self, root: &RootVector) -> i64 {
        squared_norm(&self.cartan, &self.norms, root)
    }

    /// Inner product `(α_i, α_j)` of simple roots.
    pub fn gram(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j] as i64 * self.norms[i] / 2
    }

    /// Distinct squared root lengths, longest first.
    pub fn length_classes(&self) -> Vec<i64> {
        let mut ls: Vec<i64> = self
            .positive_roots
            .iter()
            .map(|r| self.squared_norm(r))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        ls.reverse();
        ls
    }

    /// Index into [`RootSystem::length_classes`] for `root`.
    pub fn length_class(&self, root: &RootVector) -> usize {
        let n = self.squared_norm(root);
        self.length_classes()
            .iter()
            .position(|&l| l == n)
            .expect("root length is one of the classes")
    }

    /// Positive roots lying in the span of `phi`, i.e. `Σ_Φ⁺`.
    pub fn sub_positive(&self, phi: &Phi) -> Vec<&RootVector> {
        self.positive_roots
            .iter()
            .filter(|r| r.supported_on(phi))
            .collect()
    }
}

/// The unique positive root dominating every other positive root.
pub fn highest_root(sys: &RootSystem) -> &RootVector {
    &sys.highest
}

/// `α(H^Φ)`: sum of the coefficients of `root` at indices outside `phi`.
pub fn level(root: &RootVector, phi: &Phi) -> Result<i32> {
    if phi.rank() != root.rank() {
        return Err(Error::IndexOutOfRange {
            index: phi.rank().max(root.rank()),
            rank: root.rank().min(phi.rank()),
        });
    }
    Ok(root
        .0
        .iter()
        .enumerate()
        .filter(|(i, _)| !phi.contains(*i))
        .map(|(_, c)| c)
        .sum())
}

/// Simple-root permutations preserving both the Cartan matrix and `mult`.
///
/// The identity always comes first.
pub fn diagram_automorphisms<M: Multiplicities + ?Sized>(
    sys: &RootSystem,
    mult: &M,
) -> Vec<DiagramAutomorphism> {
    let r = sys.rank;
    let mut out: Vec<DiagramAutomorphism> = (0..r)
        .permutations(r)
        .map(|perm| DiagramAutomorphism { perm })
        .filter(|s| {
            (0..r).all(|i| (0..r).all(|j| sys.cartan[s.perm[i]][s.perm[j]] == sys.cartan[i][j]))
        })
        .filter(|s| {
            sys.positive_roots.iter().all(|root| {
                let img = s.apply_root(root);
                sys.position(&img).is_some() && mult.mult(&img) == mult.mult(root)
            })
        })
        .collect();
    out.sort_by_key(|s| !s.is_identity());
    out
}

/// Diagram automorphisms of the subsystem `Σ_Φ`, as permutations of all `r`
/// indices that move only indices inside `phi`.
pub fn sub_diagram_automorphisms<M: Multiplicities + ?Sized>(
    sys: &RootSystem,
    phi: &Phi,
    mult: &M,
) -> Vec<DiagramAutomorphism> {
    let idx = phi.indices();
    let sub = sys.sub_positive(phi);
    let mut out: Vec<DiagramAutomorphism> = idx
        .iter()
        .copied()
        .permutations(idx.len())
        .map(|img| {
            let mut perm: Vec<usize> = (0..sys.rank).collect();
            for (k, &i) in idx.iter().enumerate() {
                perm[i] = img[k];
            }
            DiagramAutomorphism { perm }
        })
        .filter(|s| {
            idx.iter().all(|&i| {
                idx.iter()
                    .all(|&j| sys.cartan[s.perm[i]][s.perm[j]] == sys.cartan[i][j])
            })
        })
        .filter(|s| {
            sub.iter().all(|root| {
                let img = s.apply_root(root);
                sys.position(&img).is_some() && mult.mult(&img) == mult.mult(root)
            })
        })
        .collect();
    out.sort_by_key(|s| !s.is_identity());
    out
}
