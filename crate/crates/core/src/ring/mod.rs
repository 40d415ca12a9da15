//! Fusion ring data model and its combinatorial operations.

mod iso;
mod ops;
mod validate;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use iso::{canonical_form, canonical_key, isomorphism, CanonicalKey};
pub use ops::{
    fusion_matrix, induced_unit_image, invertibles, multiply, subrings, tensor_product,
};
pub use validate::{validate, AxiomStatus, ValidationReport, Violation};
pub(crate) use validate::reciprocity_images;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("structural error: {0}")]
    Structure(String),
    #[error("basis index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("parameter constraint violated: {relation} ({detail})")]
    Constraint { relation: String, detail: String },
    #[error("missing parameter `{0}`")]
    MissingParameter(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

/// A based ring with basis `0..rank`, where index 0 is the unit.
///
/// `tensor[i][j][k]` is the multiplicity `N_{ij}^k` of basis element `k` in
/// `i ⊗ j`. Values are immutable once constructed; structural well-formedness
/// (shape, duality permutation) is checked at construction, while the ring
/// axioms are checked by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FusionRing {
    labels: Vec<String>,
    dual: Vec<usize>,
    tensor: Vec<u64>,
}

impl FusionRing {
    pub fn new(
        labels: Vec<String>,
        dual: Vec<usize>,
        tensor: Vec<Vec<Vec<u64>>>,
    ) -> Result<Self, RingError> {
        let rank = labels.len();
        if tensor.len() != rank {
            return Err(RingError::Structure(format!(
                "tensor has {} slices, expected rank {}",
                tensor.len(),
                rank
            )));
        }
        let mut flat = Vec::with_capacity(rank * rank * rank);
        for (i, slice) in tensor.iter().enumerate() {
            if slice.len() != rank {
                return Err(RingError::Structure(format!(
                    "tensor[{i}] has {} rows, expected {rank}",
                    slice.len()
                )));
            }
            for (j, row) in slice.iter().enumerate() {
                if row.len() != rank {
                    return Err(RingError::Structure(format!(
                        "tensor[{i}][{j}] has {} entries, expected {rank}",
                        row.len()
                    )));
                }
                flat.extend_from_slice(row);
            }
        }
        Self::from_flat(labels, dual, flat)
    }

    /// Builds a ring from a flat tensor laid out as `[(i * rank + j) * rank + k]`.
    pub fn from_flat(
        labels: Vec<String>,
        dual: Vec<usize>,
        tensor: Vec<u64>,
    ) -> Result<Self, RingError> {
        let rank = labels.len();
        if rank == 0 {
            return Err(RingError::Structure("rank must be positive".into()));
        }
        if dual.len() != rank {
            return Err(RingError::Structure(format!(
                "dual has {} entries, expected rank {rank}",
                dual.len()
            )));
        }
        if tensor.len() != rank * rank * rank {
            return Err(RingError::Structure(format!(
                "tensor has {} entries, expected {}",
                tensor.len(),
                rank * rank * rank
            )));
        }
        check_dual(&dual)?;
        for (a, la) in labels.iter().enumerate() {
            if labels[..a].contains(la) {
                return Err(RingError::Structure(format!("duplicate label `{la}`")));
            }
        }
        Ok(FusionRing {
            labels,
            dual,
            tensor,
        })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual.iter().enumerate().all(|(i, &d)| i == d)
    }

    /// Fusion coefficient `N_{ij}^k`.
    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u64 {
        let r = self.rank();
        self.tensor[(i * r + j) * r + k]
    }

    pub fn flat_tensor(&self) -> &[u64] {
        &self.tensor
    }

    pub fn tensor(&self) -> Vec<Vec<Vec<u64>>> {
        let r = self.rank();
        (0..r)
            .map(|i| (0..r).map(|j| (0..r).map(|k| self.n(i, j, k)).collect()).collect())
            .collect()
    }

    /// The product `i ⊗ j` as a combination of basis elements.
    pub fn product(&self, i: usize, j: usize) -> ObjectCombination {
        let r = self.rank();
        ObjectCombination::from_pairs((0..r).map(|k| (k, self.n(i, j, k))))
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<(), RingError> {
        if index < self.rank() {
            Ok(())
        } else {
            Err(RingError::IndexOutOfRange {
                index,
                rank: self.rank(),
            })
        }
    }

    /// Renames basis elements; the structure is unchanged.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self, RingError> {
        if labels.len() != self.rank() {
            return Err(RingError::Structure(format!(
                "{} labels supplied for rank {}",
                labels.len(),
                self.rank()
            )));
        }
        Self::from_flat(labels, self.dual.clone(), self.tensor.clone())
    }

    /// Relabels basis element `i` as `perm[i]`: the result satisfies
    /// `result.n(perm[i], perm[j], perm[k]) == self.n(i, j, k)`.
    pub fn permuted(&self, perm: &[usize]) -> FusionRing {
        let r = self.rank();
        let mut labels = vec![String::new(); r];
        let mut dual = vec![0; r];
        let mut tensor = vec![0; r * r * r];
        for i in 0..r {
            labels[perm[i]] = self.labels[i].clone();
            dual[perm[i]] = perm[self.dual[i]];
            for j in 0..r {
                for k in 0..r {
                    tensor[(perm[i] * r + perm[j]) * r + perm[k]] = self.n(i, j, k);
                }
            }
        }
        FusionRing {
            labels,
            dual,
            tensor,
        }
    }

    /// Formats a combination using this ring's labels, e.g. `4·1 ⊕ 2X ⊕ Y`.
    pub fn format_combination(&self, c: &ObjectCombination) -> String {
        if c.is_zero() {
            return "0".into();
        }
        c.iter()
            .map(|(k, m)| {
                let l = self.labels.get(k).map_or("?", String::as_str);
                match m {
                    1 => l.to_string(),
                    _ if l.starts_with(|ch: char| ch.is_ascii_digit() || ch == '(') => format!("{m}·{l}"),
                    _ => format!("{m}{l}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" ⊕ ")
    }
}

fn check_dual(dual: &[usize]) -> Result<(), RingError> {
    let rank = dual.len();
    if dual[0] != 0 {
        return Err(RingError::Structure("dual of the unit must be the unit".into()));
    }
    let mut seen = vec![false; rank];
    for (i, &d) in dual.iter().enumerate() {
        if d >= rank {
            return Err(RingError::Structure(format!(
                "dual[{i}] = {d} out of range for rank {rank}"
            )));
        }
        if seen[d] {
            return Err(RingError::Structure(format!(
                "dual is not a permutation: {d} appears twice"
            )));
        }
        seen[d] = true;
    }
    for (i, &d) in dual.iter().enumerate() {
        if dual[d] != i {
            return Err(RingError::Structure(format!(
                "dual is not an involution: dual[dual[{i}]] = {}",
                dual[d]
            )));
        }
    }
    Ok(())
}

impl fmt::Display for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.rank();
        for i in 1..r {
            for j in 1..r {
                if j < i && self.product(i, j) == self.product(j, i) {
                    continue;
                }
                writeln!(
                    f,
                    "{} ⊗ {} = {}",
                    self.labels[i],
                    self.labels[j],
                    self.format_combination(&self.product(i, j))
                )?;
            }
        }
        Ok(())
    }
}

/// Finitely supported non-negative integer combination of basis elements.
///
/// Zero coefficients are never stored, so the empty combination is the zero
/// element and structural equality is equality of combinations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectCombination {
    coefficients: BTreeMap<usize, u64>,
}

impl ObjectCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        Self::from_pairs([(i, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, u64)>>(pairs: I) -> Self {
        let mut c = Self::zero();
        for (k, m) in pairs {
            c.add_term(k, m);
        }
        c
    }

    pub fn add_term(&mut self, index: usize, mult: u64) {
        if mult > 0 {
            *self.coefficients.entry(index).or_insert(0) += mult;
        }
    }

    pub fn coefficient(&self, index: usize) -> u64 {
        self.coefficients.get(&index).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coefficients.iter().map(|(&k, &m)| (k, m))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coefficients.keys().copied()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.coefficients.keys().next_back().copied()
    }
}

/// Incremental construction of rings from fusion rules.
///
/// Unit rows are filled in automatically; [`RingBuilder::fuse`] records a
/// product in both orders, which suits the commutative families used here.
#[derive(Clone, Debug)]
pub struct RingBuilder {
    labels: Vec<String>,
    dual: Vec<usize>,
    tensor: Vec<u64>,
}

impl RingBuilder {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>, dual: Vec<usize>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let r = labels.len();
        let mut tensor = vec![0; r * r * r];
        for j in 0..r {
            tensor[j * r + j] = 1;
            tensor[(j * r) * r + j] = 1;
        }
        RingBuilder {
            labels,
            dual,
            tensor,
        }
    }

    pub fn self_dual<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let dual = (0..labels.len()).collect();
        Self::new(labels, dual)
    }

    /// Sets `i ⊗ j = j ⊗ i = Σ mult·k`, replacing any earlier entries.
    pub fn fuse(mut self, i: usize, j: usize, terms: &[(usize, u64)]) -> Self {
        let r = self.labels.len();
        for (a, b) in [(i, j), (j, i)] {
            for k in 0..r {
                self.tensor[(a * r + b) * r + k] = 0;
            }
            for &(k, m) in terms {
                self.tensor[(a * r + b) * r + k] += m;
            }
        }
        self
    }

    pub fn build(self) -> Result<FusionRing, RingError> {
        FusionRing::from_flat(self.labels, self.dual, self.tensor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> FusionRing {
        RingBuilder::self_dual(["1", "t"])
            .fuse(1, 1, &[(0, 1), (1, 1)])
            .build()
            .unwrap()
    }

    #[test]
    fn builder_fills_unit() {
        let r = fib();
        assert_eq!(r.tensor(), vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]]);
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            FusionRing::from_flat(vec!["1".into(), "a".into()], vec![0], vec![0; 8]),
            Err(RingError::Structure(_))
        ));
        assert!(matches!(
            FusionRing::from_flat(vec!["1".into(), "a".into()], vec![1, 0], vec![0; 8]),
            Err(RingError::Structure(_))
        ));
        assert!(matches!(
            FusionRing::from_flat(vec!["1".into(), "a".into()], vec![0, 1], vec![0; 7]),
            Err(RingError::Structure(_))
        ));
        assert!(matches!(
            FusionRing::from_flat(vec!["1".into(), "1".into()], vec![0, 1], vec![0; 8]),
            Err(RingError::Structure(_))
        ));
        // a 3-cycle is a permutation but not an involution
        let labels: Vec<String> = ["1", "a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert!(FusionRing::from_flat(labels, vec![0, 2, 3, 1], vec![0; 64]).is_err());
    }

    #[test]
    fn zero_combination() {
        let z = ObjectCombination::from_pairs([(2, 0), (1, 0)]);
        assert!(z.is_zero());
        assert_eq!(z, ObjectCombination::zero());
        assert_eq!(fib().format_combination(&fib().product(1, 1)), "1 ⊕ t");
    }

    #[test]
    fn permuted_relabels_consistently() {
        let r = RingBuilder::self_dual(["1", "a", "b"])
            .fuse(1, 1, &[(0, 1), (2, 1)])
            .fuse(1, 2, &[(1, 1), (2, 1)])
            .fuse(2, 2, &[(0, 1), (1, 1), (2, 1)])
            .build()
            .unwrap();
        let p = r.permuted(&[0, 2, 1]);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let s = [0, 2, 1];
                    assert_eq!(p.n(s[i], s[j], s[k]), r.n(i, j, k));
                }
            }
        }
        assert_eq!(p.label(2), "a");
    }
}
