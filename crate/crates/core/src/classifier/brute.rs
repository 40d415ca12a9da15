use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use super::{merge_classes, ClassifierError, SearchMode, SearchParams, SearchResult};
use crate::ring::{invertibles, subrings, validate, FusionRing, ObjectCombination};
use crate::ring::reciprocity_images;

pub const DEFAULT_MAX_CANDIDATES: u64 = 20_000_000;

/// Filters applied to validated candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    /// Every basis element is invertible.
    Pointed,
    /// Some subring other than `{1}` and the whole basis.
    NontrivialProperSubring,
    /// Exactly `k` invertible basis elements.
    PointedRank(usize),
    /// A non-unit invertible `g` with `g⊗x ≠ x` for every non-invertible `x`.
    FixedPointFree,
    /// A non-unit invertible `g` with `g⊗x = x` for every non-invertible `x`,
    /// and at least one non-invertible.
    FixedPoint,
    /// A basis element `z` with `z⊗z = 1 ⊕ z`.
    FibonacciSubring,
    Commutative,
}

impl Predicate {
    pub fn parse(s: &str) -> Option<Predicate> {
        Some(match s {
            "pointed" => Predicate::Pointed,
            "proper-subring" => Predicate::NontrivialProperSubring,
            "fixed-point-free" => Predicate::FixedPointFree,
            "fixed-point" => Predicate::FixedPoint,
            "fib-subring" => Predicate::FibonacciSubring,
            "commutative" => Predicate::Commutative,
            _ => {
                let k = s.strip_prefix("pointed-rank=")?.parse().ok()?;
                Predicate::PointedRank(k)
            }
        })
    }

    pub fn holds(self, ring: &FusionRing) -> bool {
        let inv = invertibles(ring);
        let non_inv: Vec<usize> = (0..ring.rank()).filter(|x| !inv.contains(x)).collect();
        let acts = |g: usize, fixes: bool| {
            non_inv
                .iter()
                .all(|&x| (ring.product(g, x) == ObjectCombination::basis(x)) == fixes)
        };
        match self {
            Predicate::Pointed => non_inv.is_empty(),
            Predicate::NontrivialProperSubring => subrings(ring)
                .iter()
                .any(|s| s.len() > 1 && s.len() < ring.rank()),
            Predicate::PointedRank(k) => inv.len() == k,
            Predicate::FixedPointFree => inv.iter().any(|&g| g != 0 && acts(g, false)),
            Predicate::FixedPoint => {
                !non_inv.is_empty() && inv.iter().any(|&g| g != 0 && acts(g, true))
            }
            Predicate::FibonacciSubring => (1..ring.rank()).any(|z| {
                ring.product(z, z)
                    == ObjectCombination::from_pairs([(0, 1), (z, 1)])
            }),
            Predicate::Commutative => validate(ring).is_commutative(),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Pointed => f.write_str("pointed"),
            Predicate::NontrivialProperSubring => f.write_str("proper-subring"),
            Predicate::PointedRank(k) => write!(f, "pointed-rank={k}"),
            Predicate::FixedPointFree => f.write_str("fixed-point-free"),
            Predicate::FixedPoint => f.write_str("fixed-point"),
            Predicate::FibonacciSubring => f.write_str("fib-subring"),
            Predicate::Commutative => f.write_str("commutative"),
        }
    }
}

/// Orbits of non-unit index triples `(i, j, k)` under the rigidity
/// symmetries. Each orbit is sorted; the orbits are sorted by their minimum,
/// which serves as the orbit representative.
pub fn free_orbits(dual: &[usize]) -> Vec<Vec<(usize, usize, usize)>> {
    let r = dual.len();
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for i in 1..r {
        for j in 1..r {
            for k in 1..r {
                if seen.contains(&(i, j, k)) {
                    continue;
                }
                let mut orbit = BTreeSet::from([(i, j, k)]);
                let mut frontier = vec![(i, j, k)];
                while let Some(t) = frontier.pop() {
                    for img in reciprocity_images(dual, t) {
                        if orbit.insert(img) {
                            frontier.push(img);
                        }
                    }
                }
                seen.extend(orbit.iter().copied());
                orbits.push(orbit.into_iter().collect());
            }
        }
    }
    orbits
}

fn check_dual(dual: &[usize]) -> Result<(), ClassifierError> {
    let r = dual.len();
    let ok = r > 0
        && dual[0] == 0
        && dual.iter().all(|&d| d < r)
        && (0..r).all(|i| dual[dual[i]] == i);
    if ok {
        Ok(())
    } else {
        Err(ClassifierError::InvalidParameters(format!(
            "dual {dual:?} is not an involution fixing 0"
        )))
    }
}

fn associative(t: &[u64], r: usize) -> bool {
    let n = |i: usize, j: usize, k: usize| t[(i * r + j) * r + k];
    // triples involving the unit hold automatically
    for i in 1..r {
        for j in 1..r {
            for k in 1..r {
                for v in 0..r {
                    let lhs: u64 = (0..r).map(|w| n(i, j, w) * n(w, k, v)).sum();
                    let rhs: u64 = (0..r).map(|w| n(j, k, w) * n(i, w, v)).sum();
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every fusion ring of the given rank and duality whose free structure
/// constants are at most `bound`, filtered by `predicates` and reduced to
/// isomorphism classes. Provenance tuples list the free entries in orbit
/// order. Fails if `(bound + 1)^orbits` exceeds `max_candidates`.
pub fn brute_force(
    rank: usize,
    dual: &[usize],
    bound: u64,
    predicates: &[Predicate],
    max_candidates: u64,
) -> Result<SearchResult, ClassifierError> {
    if dual.len() != rank {
        return Err(ClassifierError::InvalidParameters(format!(
            "dual has length {} but rank is {rank}",
            dual.len()
        )));
    }
    check_dual(dual)?;
    let orbits = free_orbits(dual);
    let base = bound as u128 + 1;
    let projected = base
        .checked_pow(orbits.len() as u32)
        .unwrap_or(u128::MAX);
    if projected > max_candidates as u128 {
        return Err(ClassifierError::TooManyCandidates {
            projected,
            ceiling: max_candidates,
        });
    }

    let r = rank;
    let idx = |i: usize, j: usize, k: usize| (i * r + j) * r + k;
    let mut template = vec![0u64; r * r * r];
    for x in 0..r {
        template[idx(0, x, x)] = 1;
        template[idx(x, 0, x)] = 1;
        template[idx(x, dual[x], 0)] = 1;
    }
    let slots: Vec<Vec<usize>> = orbits
        .iter()
        .map(|o| o.iter().map(|&(i, j, k)| idx(i, j, k)).collect())
        .collect();
    let labels: Vec<String> = (0..r)
        .map(|i| if i == 0 { "1".to_string() } else { format!("x{i}") })
        .collect();

    let hits: Vec<(Vec<u64>, FusionRing)> = (0..projected as u64)
        .into_par_iter()
        .map_init(
            || template.clone(),
            |tensor, mut code| {
                let mut digits = Vec::with_capacity(slots.len());
                for slot in &slots {
                    let d = code % (bound + 1);
                    code /= bound + 1;
                    for &s in slot {
                        tensor[s] = d;
                    }
                    digits.push(d);
                }
                if !associative(tensor, r) {
                    return None;
                }
                let ring = FusionRing::from_flat(labels.clone(), dual.to_vec(), tensor.clone())
                    .expect("template is structurally valid");
                if !validate(&ring).is_fusion_ring() || !predicates.iter().all(|p| p.holds(&ring)) {
                    return None;
                }
                Some((digits, ring))
            },
        )
        .flatten()
        .collect();

    Ok(SearchResult {
        params: SearchParams {
            mode: SearchMode::Brute,
            bound,
            rank,
            dual: dual.to_vec(),
            coordinates: orbits
                .iter()
                .map(|o| format!("N_{}{}^{}", o[0].0, o[0].1, o[0].2))
                .collect(),
        },
        classes: merge_classes(hits),
        stages: Vec::new(),
        checks: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::families::{klein_four, rank_two, trivial_ring};

    #[test]
    fn orbit_counts() {
        assert_eq!(free_orbits(&[0, 1, 2, 3]).len(), 10);
        assert_eq!(free_orbits(&[0, 1]).len(), 1);
        assert!(free_orbits(&[0]).is_empty());
        let total: usize = free_orbits(&[0, 2, 1, 3]).iter().map(Vec::len).sum();
        assert_eq!(total, 27);
    }

    #[test]
    fn rank_two_census() {
        let res = brute_force(2, &[0, 1], 3, &[], DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(res.classes.len(), 4);
        for k in 0..=3 {
            assert!(res.find_class(&rank_two(k)).is_some());
        }
    }

    #[test]
    fn rank_one_is_trivial() {
        let res = brute_force(1, &[0], 2, &[], DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(res.classes.len(), 1);
        assert!(res.find_class(&trivial_ring()).is_some());
    }

    #[test]
    fn pointed_rank_four_is_klein_four() {
        let res = brute_force(4, &[0, 1, 2, 3], 1, &[Predicate::Pointed], DEFAULT_MAX_CANDIDATES)
            .unwrap();
        assert_eq!(res.classes.len(), 1);
        assert!(res.find_class(&klein_four()).is_some());
    }

    #[test]
    fn guard_and_bad_dual() {
        assert!(matches!(
            brute_force(4, &[0, 1, 2, 3], 4, &[], 1000),
            Err(ClassifierError::TooManyCandidates { projected: 9_765_625, ceiling: 1000 })
        ));
        assert!(brute_force(3, &[0, 2, 2], 1, &[], 1000).is_err());
        assert!(brute_force(3, &[0, 1], 1, &[], 1000).is_err());
    }

    #[test]
    fn predicate_names_round_trip() {
        for p in [
            Predicate::Pointed,
            Predicate::NontrivialProperSubring,
            Predicate::PointedRank(2),
            Predicate::FixedPointFree,
            Predicate::FixedPoint,
            Predicate::FibonacciSubring,
            Predicate::Commutative,
        ] {
            assert_eq!(Predicate::parse(&p.to_string()), Some(p));
        }
        assert_eq!(Predicate::parse("bogus"), None);
    }
}
