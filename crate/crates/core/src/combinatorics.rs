//! Spanning-tree counts of `J(n, m)` from cyclic gap signatures.
//!
//! A spanning tree keeps a non-empty set of `k` spokes and deletes exactly one
//! rim edge on each arc between cyclically consecutive kept spokes. For a
//! choice of spokes with gap vector `(g_1, …, g_k)` (unchosen spokes between
//! neighbours) the arcs hold `(g_j + 1) * n` rim edges, so that choice
//! contributes `n^k * ∏ (g_j + 1)` trees. Choices are grouped by sorted gap
//! vector and each group is weighted by its size.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A strictly increasing choice of `k` spokes out of `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpokeCombination {
    m: usize,
    indices: Vec<usize>,
}

impl SpokeCombination {
    pub fn new(m: usize, indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() || indices.len() > m {
            return Err(Error::ParameterDomain {
                name: "k",
                value: indices.len() as i64,
                bound: "1 <= k <= m",
            });
        }
        let in_range = indices.iter().all(|&i| (1..=m).contains(&i));
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        if !in_range || !increasing {
            return Err(Error::InvalidGraph(format!(
                "spoke indices {indices:?} are not strictly increasing within 1..={m}"
            )));
        }
        Ok(Self { m, indices })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }
}

/// Sorted vector of cyclic gaps; sums to `m - k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GapSignature(Vec<usize>);

impl GapSignature {
    pub fn from_gaps(mut gaps: Vec<usize>) -> Self {
        gaps.sort_unstable();
        Self(gaps)
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn gaps(&self) -> &[usize] {
        &self.0
    }

    /// `∏ (gap + 1)`, the number of ways to cut one rim edge per arc when each
    /// arc segment between spokes has a single edge.
    pub fn arc_product(&self) -> BigUint {
        self.0.iter().fold(BigUint::one(), |acc, &g| acc * (g + 1))
    }
}

impl fmt::Display for GapSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// Lexicographic stream of k-subsets of `1..=m`, reusing one buffer.
#[derive(Debug, Clone)]
pub struct Combinations {
    m: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    pub fn new(m: usize, k: usize) -> Self {
        Self {
            m,
            current: (1..=k).collect(),
            started: false,
            done: k > m,
        }
    }

    /// Advances to the next combination, returning it, or `None` when the
    /// stream is exhausted.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let k = self.current.len();
        let mut i = k;
        while i > 0 && self.current[i - 1] == self.m - k + i {
            i -= 1;
        }
        if i == 0 {
            self.done = true;
            return None;
        }
        self.current[i - 1] += 1;
        for j in i..k {
            self.current[j] = self.current[j - 1] + 1;
        }
        Some(&self.current)
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().map(<[usize]>::to_vec)
    }
}

fn raw_gaps(m: usize, indices: &[usize], out: &mut Vec<usize>) {
    out.clear();
    let k = indices.len();
    out.extend(indices.windows(2).map(|w| w[1] - w[0] - 1));
    out.push(indices[0] + m - indices[k - 1] - 1);
}

/// Gaps between cyclically consecutive chosen spokes, sorted ascending.
pub fn gap_transform(b: &SpokeCombination) -> GapSignature {
    let mut gaps = Vec::with_capacity(b.k());
    raw_gaps(b.m, &b.indices, &mut gaps);
    GapSignature::from_gaps(gaps)
}

fn check_m(m: usize) -> Result<()> {
    crate::error::check_at_least("m", m as i64, 3, "m >= 3")
}

fn check_n(n: usize) -> Result<()> {
    crate::error::check_at_least("n", n as i64, 2, "n >= 2")
}

fn check_k(m: usize, k: usize) -> Result<()> {
    if k == 0 || k > m {
        return Err(Error::ParameterDomain {
            name: "k",
            value: k as i64,
            bound: "1 <= k <= m",
        });
    }
    Ok(())
}

/// Distinct gap signatures among all `C(m, k)` spoke choices, with how often
/// each occurs, ordered by signature.
///
/// Equal signatures do not imply the choices are rotations of one another
/// (e.g. `m = 6`, `{1,2,4}` and `{1,3,4}` are mirror images), so the number of
/// entries is not a count of rotation classes.
pub fn class_census(m: usize, k: usize) -> Result<Vec<(GapSignature, u64)>> {
    check_k(m, k)?;
    let mut census: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut combos = Combinations::new(m, k);
    let mut gaps = Vec::with_capacity(k);
    while let Some(c) = combos.advance() {
        raw_gaps(m, c, &mut gaps);
        gaps.sort_unstable();
        match census.get_mut(gaps.as_slice()) {
            Some(count) => *count += 1,
            None => {
                census.insert(gaps.clone(), 1);
            }
        }
    }
    Ok(census.into_iter().map(|(g, c)| (GapSignature(g), c)).collect())
}

/// Trees contributed by one spoke choice with signature `sig`:
/// `n^k * ∏ (gap + 1)`.
pub fn class_contribution(n: usize, sig: &GapSignature) -> BigUint {
    BigUint::from(n).pow(sig.k() as u32) * sig.arc_product()
}

/// `Σ multiplicity * ∏ (gap + 1)` over the k-census: the coefficient of `n^k`.
fn census_weight(m: usize, k: usize) -> Result<BigUint> {
    Ok(class_census(m, k)?
        .iter()
        .fold(BigUint::zero(), |acc, (sig, mult)| acc + sig.arc_product() * *mult))
}

/// Spanning trees of `J(n, m)` keeping exactly `k` spokes.
pub fn sigma_k(n: usize, m: usize, k: usize) -> Result<BigUint> {
    check_n(n)?;
    check_m(m)?;
    check_k(m, k)?;
    let census = class_census(m, k)?;
    Ok(census
        .iter()
        .fold(BigUint::zero(), |acc, (sig, mult)| acc + class_contribution(n, sig) * *mult))
}

/// Per-k tree counts of `J(n, m)` and their total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCountBreakdown {
    pub n: usize,
    pub m: usize,
    /// `per_k[k - 1]` is the number of trees keeping `k` spokes.
    pub per_k: Vec<BigUint>,
    pub total: BigUint,
}

impl Serialize for TreeCountBreakdown {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("TreeCountBreakdown", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("m", &self.m)?;
        let per_k: Vec<String> = self.per_k.iter().map(ToString::to_string).collect();
        st.serialize_field("per_k", &per_k)?;
        st.serialize_field("total", &self.total.to_string())?;
        st.end()
    }
}

/// All `σ_k` for `k = 1..=m` and `σ(J(n, m))`. The k-censuses are built in
/// parallel; the result is identical to summing [`sigma_k`] sequentially.
pub fn sigma(n: usize, m: usize) -> Result<TreeCountBreakdown> {
    check_n(n)?;
    check_m(m)?;
    let per_k = (1..=m)
        .into_par_iter()
        .map(|k| sigma_k(n, m, k))
        .collect::<Result<Vec<_>>>()?;
    let total = per_k.iter().sum();
    Ok(TreeCountBreakdown { n, m, per_k, total })
}

/// Coefficients `A_{m,1..=m}` with `σ(J(n, m)) = Σ_k A_{m,k} n^k`.
pub fn polynomial_coefficients(m: usize) -> Result<Vec<BigUint>> {
    check_m(m)?;
    (1..=m).into_par_iter().map(|k| census_weight(m, k)).collect()
}

/// Evaluates `Σ_k coeffs[k-1] * n^k`.
pub fn evaluate_polynomial(coeffs: &[BigUint], n: usize) -> BigUint {
    let n = BigUint::from(n);
    // Horner on n * (A_1 + n * (A_2 + ...)).
    coeffs.iter().rev().fold(BigUint::zero(), |acc, a| (acc + a) * &n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn combo(m: usize, idx: &[usize]) -> SpokeCombination {
        SpokeCombination::new(m, idx.to_vec()).unwrap()
    }

    fn sig(g: &[usize]) -> GapSignature {
        GapSignature::from_gaps(g.to_vec())
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
        assert_eq!(Combinations::new(5, 5).count(), 1);
        assert_eq!(Combinations::new(10, 4).count(), 210);
        assert_eq!(Combinations::new(3, 4).count(), 0);
    }

    #[test]
    fn spoke_combination_validation() {
        assert!(SpokeCombination::new(4, vec![]).is_err());
        assert!(SpokeCombination::new(4, vec![2, 2]).is_err());
        assert!(SpokeCombination::new(4, vec![3, 1]).is_err());
        assert!(SpokeCombination::new(4, vec![0, 1]).is_err());
        assert!(SpokeCombination::new(4, vec![1, 5]).is_err());
    }

    #[test]
    fn gap_transform_examples() {
        assert_eq!(gap_transform(&combo(4, &[1, 3])), sig(&[1, 1]));
        assert_eq!(gap_transform(&combo(4, &[1, 2])), sig(&[0, 2]));
        assert_eq!(gap_transform(&combo(7, &[1, 2, 3, 4, 5, 6, 7])), sig(&[0; 7]));
        assert_eq!(gap_transform(&combo(4, &[2])), sig(&[3]));
    }

    #[test]
    fn census_examples() {
        assert_eq!(class_census(4, 2).unwrap(), vec![(sig(&[0, 2]), 4), (sig(&[1, 1]), 2)]);
        assert_eq!(class_census(4, 3).unwrap(), vec![(sig(&[0, 0, 1]), 4)]);
        assert_eq!(class_census(3, 1).unwrap(), vec![(sig(&[2]), 3)]);
        assert!(class_census(4, 0).is_err());
        assert!(class_census(4, 5).is_err());
    }

    #[test]
    fn census_merges_mirror_images() {
        // {1,2,4} and {1,3,4} in a 6-cycle have gaps (0,1,2) and (1,0,2):
        // same sorted signature, yet no rotation maps one onto the other.
        let a = gap_transform(&combo(6, &[1, 2, 4]));
        let b = gap_transform(&combo(6, &[1, 3, 4]));
        assert_eq!(a, b);
        let census = class_census(6, 3).unwrap();
        let (_, mult) = census.iter().find(|(s, _)| *s == a).unwrap();
        assert_eq!(*mult, 12);
    }

    #[test]
    fn contribution_examples() {
        assert_eq!(class_contribution(2, &sig(&[0, 2])), big(12));
        assert_eq!(class_contribution(2, &sig(&[1, 1])), big(16));
        assert_eq!(class_contribution(2, &sig(&[0, 0, 0, 0])), big(16));
    }

    #[test]
    fn sigma_k_examples() {
        assert_eq!(sigma_k(2, 4, 2).unwrap(), big(80));
        assert_eq!(sigma_k(2, 4, 3).unwrap(), big(64));
        assert_eq!(sigma_k(2, 4, 1).unwrap(), big(32));
        assert_eq!(sigma_k(5, 3, 1).unwrap(), big(45));
        assert!(sigma_k(1, 4, 1).is_err());
        assert!(sigma_k(2, 2, 1).is_err());
        assert!(sigma_k(2, 4, 0).is_err());
    }

    #[test]
    fn sigma_examples() {
        let b = sigma(2, 4).unwrap();
        assert_eq!(b.per_k, vec![big(32), big(80), big(64), big(16)]);
        assert_eq!(b.total, big(192));
        assert_eq!(sigma(2, 16).unwrap().total, big(1_416_317_952));
        assert_eq!(sigma(3, 10).unwrap().total, big(6_375_621));
        assert_eq!(sigma(7, 3).unwrap().total, big(700));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(polynomial_coefficients(3).unwrap(), vec![big(9), big(6), big(1)]);
        assert_eq!(polynomial_coefficients(4).unwrap(), vec![big(16), big(20), big(8), big(1)]);
        assert_eq!(polynomial_coefficients(5).unwrap(), vec![big(25), big(50), big(35), big(10), big(1)]);
        assert!(polynomial_coefficients(2).is_err());
        assert_eq!(evaluate_polynomial(&polynomial_coefficients(4).unwrap(), 3), big(525));
        assert_eq!(evaluate_polynomial(&polynomial_coefficients(5).unwrap(), 2), big(722));
    }

    #[test]
    fn breakdown_serializes_big_integers_as_strings() {
        let json = serde_json::to_string(&sigma(2, 4).unwrap()).unwrap();
        assert_eq!(json, r#"{"n":2,"m":4,"per_k":["32","80","64","16"],"total":"192"}"#);
    }
}
