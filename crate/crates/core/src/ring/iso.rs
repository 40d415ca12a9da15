use itertools::Itertools;

use super::FusionRing;

/// Label-free structural key: the duality vector followed by the flat tensor.
/// Two rings are isomorphic iff their canonical keys are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub dual: Vec<usize>,
    pub tensor: Vec<u64>,
}

fn unit_fixing_permutations(rank: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..rank).permutations(rank - 1).map(move |tail| {
        let mut p = Vec::with_capacity(rank);
        p.push(0);
        p.extend(tail);
        p
    })
}

fn maps_onto(a: &FusionRing, b: &FusionRing, sigma: &[usize]) -> bool {
    let r = a.rank();
    if (0..r).any(|i| sigma[a.dual(i)] != b.dual(sigma[i])) {
        return false;
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                if a.n(i, j, k) != b.n(sigma[i], sigma[j], sigma[k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Finds `σ` with `σ(0) = 0`, `σ ∘ dual_a = dual_b ∘ σ` and
/// `a.n(i, j, k) == b.n(σi, σj, σk)`, by trying every unit-fixing permutation.
pub fn isomorphism(a: &FusionRing, b: &FusionRing) -> Option<Vec<usize>> {
    if a.rank() != b.rank() {
        return None;
    }
    let r = a.rank();
    if r == 1 {
        return maps_onto(a, b, &[0]).then(|| vec![0]);
    }
    // cheap invariant: multiset of coefficient multisets, one per basis element
    let profile = |x: &FusionRing| -> Vec<Vec<u64>> {
        let mut v: Vec<Vec<u64>> = (0..r)
            .map(|i| {
                let mut row: Vec<u64> = (0..r).flat_map(|j| (0..r).map(move |k| (j, k)))
                    .map(|(j, k)| x.n(i, j, k))
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        v.sort();
        v
    };
    if profile(a) != profile(b) {
        return None;
    }
    unit_fixing_permutations(r).find(|sigma| maps_onto(a, b, sigma))
}

/// Lexicographically minimal `(dual, tensor)` over all unit-fixing
/// relabelings, with the ring relabeled to attain it.
pub fn canonical_form(ring: &FusionRing) -> (FusionRing, Vec<usize>) {
    let r = ring.rank();
    if r == 1 {
        return (ring.clone(), vec![0]);
    }
    let mut best: Option<(CanonicalKey, Vec<usize>)> = None;
    for sigma in unit_fixing_permutations(r) {
        let key = permuted_key(ring, &sigma);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, sigma));
        }
    }
    let (_, sigma) = best.expect("at least the identity permutation");
    (ring.permuted(&sigma), sigma)
}

pub fn canonical_key(ring: &FusionRing) -> CanonicalKey {
    let r = ring.rank();
    if r == 1 {
        return permuted_key(ring, &[0]);
    }
    unit_fixing_permutations(r)
        .map(|sigma| permuted_key(ring, &sigma))
        .min()
        .expect("at least the identity permutation")
}

fn permuted_key(ring: &FusionRing, sigma: &[usize]) -> CanonicalKey {
    let r = ring.rank();
    let mut dual = vec![0; r];
    let mut tensor = vec![0; r * r * r];
    for i in 0..r {
        dual[sigma[i]] = sigma[ring.dual(i)];
        for j in 0..r {
            for k in 0..r {
                tensor[(sigma[i] * r + sigma[j]) * r + sigma[k]] = ring.n(i, j, k);
            }
        }
    }
    CanonicalKey { dual, tensor }
}
