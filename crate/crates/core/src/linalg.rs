//! Exact rational subspaces of `𝔞`, written in simple-root coordinates.

use std::fmt;

use itertools::Itertools;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i64>;

/// A subspace of `Q^n`, stored as a basis in reduced row echelon form.
///
/// RREF is canonical, so equality of subspaces is equality of the structs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    dim_ambient: usize,
    rows: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            dim_ambient: n,
            rows: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self::coordinate(n, 0..n)
    }

    /// Span of integer vectors.
    pub fn span<I, V>(n: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[i64]>,
    {
        let rows = vectors
            .into_iter()
            .map(|v| v.as_ref().iter().map(|&x| Q::from_integer(x)).collect())
            .collect();
        Self::from_rows(n, rows)
    }

    pub fn from_rows(n: usize, rows: Vec<Vec<Q>>) -> Self {
        Subspace {
            dim_ambient: n,
            rows: rref(rows, n),
        }
    }

    /// Span of the coordinate vectors `e_i`, `i ∈ idx`.
    pub fn coordinate<I: IntoIterator<Item = usize>>(n: usize, idx: I) -> Self {
        Self::span(
            n,
            idx.into_iter()
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect::<Vec<_>>()),
        )
    }

    pub fn ambient(&self) -> usize {
        self.dim_ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim_ambient
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Self::from_rows(self.dim_ambient, rows)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.sum(other).dim() == self.dim()
    }

    pub fn contains_vector(&self, v: &[Q]) -> bool {
        self.contains_subspace(&Self::from_rows(self.dim_ambient, vec![v.to_vec()]))
    }

    /// `{x : x^T G y = 0 for all y in self}`.
    pub fn orthogonal_complement(&self, gram: &[Vec<Q>]) -> Subspace {
        let n = self.dim_ambient;
        // Constraints: (row^T G) x = 0.
        let cons: Vec<Vec<Q>> = self
            .rows
            .iter()
            .map(|row| {
                (0..n)
                    .map(|j| (0..n).fold(Q::zero(), |acc, i| acc + row[i] * gram[i][j]))
                    .collect()
            })
            .collect();
        Self::from_rows(n, kernel(cons, n))
    }

    /// Intersection via complements with respect to the standard pairing.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let n = self.dim_ambient;
        let id = identity(n);
        let a = self.orthogonal_complement(&id);
        let b = other.orthogonal_complement(&id);
        a.sum(&b).orthogonal_complement(&id)
    }

    /// Image under the coordinate permutation `e_i ↦ e_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Subspace {
        let n = self.dim_ambient;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = vec![Q::zero(); n];
                for (i, &x) in row.iter().enumerate() {
                    out[perm[i]] = x;
                }
                out
            })
            .collect();
        Self::from_rows(n, rows)
    }

    /// Rows scaled to primitive integer vectors, for display and tags.
    pub fn integer_rows(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|row| {
                let l = row
                    .iter()
                    .fold(1i64, |acc, q| acc.lcm(q.denom()));
                let ints: Vec<i64> = row.iter().map(|q| (q * Q::from_integer(l)).to_integer()).collect();
                let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
                ints.into_iter().map(|x| if g > 1 { x / g } else { x }).collect()
            })
            .collect()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .integer_rows()
            .iter()
            .map(|r| r.iter().join(","))
            .join("|");
        write!(f, "[{body}]")
    }
}

pub fn identity(n: usize) -> Vec<Vec<Q>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form with zero rows dropped.
fn rref(mut m: Vec<Vec<Q>>, n: usize) -> Vec<Vec<Q>> {
    let mut lead = 0;
    let mut r = 0;
    while r < m.len() && lead < n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][lead].is_zero()) else {
            lead += 1;
            continue;
        };
        m.swap(r, p);
        let inv = m[r][lead].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][lead].is_zero() {
                let f = m[i][lead];
                for j in 0..n {
                    let d = m[r][j] * f;
                    m[i][j] -= d;
                }
            }
        }
        r += 1;
        lead += 1;
    }
    m.truncate(r);
    m
}

/// Basis of `{x : M x = 0}`.
fn kernel(m: Vec<Vec<Q>>, n: usize) -> Vec<Vec<Q>> {
    let red = rref(m, n);
    let pivots: Vec<usize> = red
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Q::zero(); n];
            v[free] = Q::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[free];
            }
            v
        })
        .collect()
}

/// Whether two vectors are proportional with a nonzero factor.
pub fn proportional(a: &[Q], b: &[Q]) -> bool {
    let ia = a.iter().position(|x| !x.is_zero());
    let ib = b.iter().position(|x| !x.is_zero());
    match (ia, ib) {
        (Some(i), Some(j)) if i == j => {
            let f = b[i] / a[i];
            a.iter().zip(b).all(|(x, y)| *x * f == *y)
        }
        _ => false,
    }
}

pub fn is_nonzero(v: &[Q]) -> bool {
    v.iter().any(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gram_a2() -> Vec<Vec<Q>> {
        vec![
            vec![Q::from_integer(2), Q::from_integer(-1)],
            vec![Q::from_integer(-1), Q::from_integer(2)],
        ]
    }

    #[test]
    fn complement_in_a2() {
        let l = Subspace::coordinate(2, [0]);
        let perp = l.orthogonal_complement(&gram_a2());
        assert_eq!(perp.dim(), 1);
        // (α1, xα1 + yα2) = 2x − y = 0 → (1, 2)
        assert_eq!(perp.integer_rows(), vec![vec![1, 2]]);
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::span(3, [[1, 1, 0], [0, 1, 1]]);
        let b = Subspace::span(3, [[1, 2, 1], [1, 0, -1]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::coordinate(3, [0, 1]);
        let b = Subspace::coordinate(3, [1, 2]);
        assert!(a.sum(&b).is_full());
        assert_eq!(a.intersect(&b), Subspace::coordinate(3, [1]));
    }

    #[test]
    fn permute_swaps_coordinates() {
        let a = Subspace::span(2, [[1, 2]]);
        assert_eq!(a.permute(&[1, 0]), Subspace::span(2, [[2, 1]]));
    }

    #[test]
    fn proportionality() {
        let a = [Q::from_integer(1), Q::from_integer(2)];
        let b = [Q::from_integer(-2), Q::from_integer(-4)];
        assert!(proportional(&a, &b));
        assert!(!proportional(&a, &[Q::from_integer(1), Q::from_integer(1)]));
    }
}
