use super::{FusionRing, ObjectCombination, RingError};
use crate::matrix::IntMatrix;

/// Left-multiplication matrix of `x`: entry `(z, y)` is `N_{xy}^z`.
pub fn fusion_matrix(ring: &FusionRing, x: usize) -> Result<IntMatrix, RingError> {
    ring.check_index(x)?;
    let r = ring.rank();
    let mut m = IntMatrix::zeros(r, r);
    for y in 0..r {
        for z in 0..r {
            m.set(z, y, ring.n(x, y, z) as i64);
        }
    }
    Ok(m)
}

/// Bilinear extension of the fusion product.
pub fn multiply(
    ring: &FusionRing,
    a: &ObjectCombination,
    b: &ObjectCombination,
) -> Result<ObjectCombination, RingError> {
    for idx in a.max_index().into_iter().chain(b.max_index()) {
        ring.check_index(idx)?;
    }
    let r = ring.rank();
    let mut out = ObjectCombination::zero();
    for (i, mi) in a.iter() {
        for (j, mj) in b.iter() {
            for k in 0..r {
                out.add_term(k, mi * mj * ring.n(i, j, k));
            }
        }
    }
    Ok(out)
}

fn is_subring(ring: &FusionRing, members: &[bool]) -> bool {
    let r = ring.rank();
    (0..r).filter(|&i| members[i]).all(|i| {
        members[ring.dual(i)]
            && (0..r).filter(|&j| members[j]).all(|j| {
                (0..r).all(|k| members[k] || ring.n(i, j, k) == 0)
            })
    })
}

/// All based subrings: subsets containing the unit, closed under duality and
/// with no fusion leakage. Sorted by size, then lexicographically.
pub fn subrings(ring: &FusionRing) -> Vec<Vec<usize>> {
    let r = ring.rank();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << (r - 1)) {
        let members: Vec<bool> = (0..r).map(|i| i == 0 || mask >> (i - 1) & 1 == 1).collect();
        if is_subring(ring, &members) {
            out.push((0..r).filter(|&i| members[i]).collect::<Vec<_>>());
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Basis elements `x` with `x ⊗ x* = 1`.
pub fn invertibles(ring: &FusionRing) -> Vec<usize> {
    (0..ring.rank())
        .filter(|&x| ring.product(x, ring.dual(x)) == ObjectCombination::basis(0))
        .collect()
}

/// `⊕_t t ⊗ t*`: coefficient of `w` is `Σ_t N_{t,t*}^w`.
pub fn induced_unit_image(ring: &FusionRing) -> ObjectCombination {
    let r = ring.rank();
    let mut out = ObjectCombination::zero();
    for t in 0..r {
        for w in 0..r {
            out.add_term(w, ring.n(t, ring.dual(t), w));
        }
    }
    out
}

/// Componentwise product ring on index pairs `(i, i')`, ordered row-major,
/// so `(0, 0)` is the unit.
pub fn tensor_product(a: &FusionRing, b: &FusionRing) -> FusionRing {
    let (ra, rb) = (a.rank(), b.rank());
    let r = ra * rb;
    let pair = |p: usize| (p / rb, p % rb);
    let mut labels: Vec<String> = (0..r)
        .map(|p| {
            let (i, ii) = pair(p);
            match (i, ii) {
                (0, 0) => a.label(0).to_string(),
                (_, 0) => a.label(i).to_string(),
                (0, _) => b.label(ii).to_string(),
                _ => format!("{}.{}", a.label(i), b.label(ii)),
            }
        })
        .collect();
    let distinct = labels
        .iter()
        .enumerate()
        .all(|(idx, l)| !labels[..idx].contains(l));
    if !distinct {
        labels = (0..r)
            .map(|p| {
                let (i, ii) = pair(p);
                format!("({},{})", a.label(i), b.label(ii))
            })
            .collect();
    }
    let dual = (0..r)
        .map(|p| {
            let (i, ii) = pair(p);
            a.dual(i) * rb + b.dual(ii)
        })
        .collect();
    let mut tensor = vec![0; r * r * r];
    for p in 0..r {
        let (i, ii) = pair(p);
        for q in 0..r {
            let (j, jj) = pair(q);
            for s in 0..r {
                let (k, kk) = pair(s);
                tensor[(p * r + q) * r + s] = a.n(i, j, k) * b.n(ii, jj, kk);
            }
        }
    }
    FusionRing::from_flat(labels, dual, tensor).expect("product of well-formed rings is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::families;
    use crate::ring::validate;

    fn rows(m: &IntMatrix) -> Vec<Vec<i64>> {
        (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
    }

    #[test]
    fn fusion_matrix_of_g_in_fixed_point_free_family() {
        let r = families::family_prop31(1, 1).unwrap();
        let mg = fusion_matrix(&r, 1).unwrap();
        assert_eq!(
            rows(&mg),
            vec![vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0]]
        );
    }

    #[test]
    fn fusion_matrices_match_displayed_layout() {
        let (m, n) = (3, 1);
        let r = families::family_prop31(m, n).unwrap();
        assert_eq!(
            rows(&fusion_matrix(&r, 2).unwrap()),
            vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![1, 0, m as i64, n as i64], vec![0, 1, n as i64, m as i64]]
        );
        assert_eq!(
            rows(&fusion_matrix(&r, 3).unwrap()),
            vec![vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, 1, n as i64, m as i64], vec![1, 0, m as i64, n as i64]]
        );
    }

    #[test]
    fn fib_fusion_matrix_and_unit_matrix() {
        let fib = families::fibonacci();
        assert_eq!(rows(&fusion_matrix(&fib, 1).unwrap()), vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(fusion_matrix(&fib, 0).unwrap(), IntMatrix::identity(2));
        assert_eq!(
            fusion_matrix(&fib, 2),
            Err(RingError::IndexOutOfRange { index: 2, rank: 2 })
        );
    }

    #[test]
    fn multiply_examples() {
        let r = families::family_prop31(1, 1).unwrap();
        let x = ObjectCombination::basis(2);
        assert_eq!(
            multiply(&r, &x, &x).unwrap(),
            ObjectCombination::from_pairs([(0, 1), (2, 1), (3, 1)])
        );
        let a = ObjectCombination::from_pairs([(1, 2), (3, 1)]);
        assert_eq!(multiply(&r, &ObjectCombination::basis(0), &a).unwrap(), a);
        assert!(multiply(&r, &ObjectCombination::zero(), &a).unwrap().is_zero());
        assert!(multiply(&r, &ObjectCombination::basis(4), &a).is_err());

        for (a, b) in [(0, 0), (2, 1), (1, 3)] {
            let e7 = families::family_eq7(a, b);
            let y = ObjectCombination::basis(2);
            assert_eq!(
                multiply(&e7, &y, &y).unwrap(),
                ObjectCombination::from_pairs([(0, 1), (1, a + b), (2, a + 2 * b), (3, 1)])
            );
        }
    }

    #[test]
    fn subring_enumeration() {
        let r = families::family_prop31(1, 0).unwrap();
        assert_eq!(
            subrings(&r),
            vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 1, 2, 3]]
        );
        assert_eq!(subrings(&families::fibonacci()), vec![vec![0], vec![0, 1]]);
        for (a, b) in [(0, 0), (1, 0), (2, 3)] {
            assert!(subrings(&families::family_eq7(a, b)).contains(&vec![0, 3]));
        }
        assert_eq!(subrings(&families::trivial_ring()), vec![vec![0]]);
    }

    #[test]
    fn invertible_elements() {
        for (m, n) in [(1, 0), (1, 1), (2, 2), (3, 1)] {
            assert_eq!(invertibles(&families::family_prop31(m, n).unwrap()), vec![0, 1]);
        }
        assert_eq!(invertibles(&families::fibonacci()), vec![0]);
        assert_eq!(invertibles(&families::klein_four()), vec![0, 1, 2, 3]);
        assert_eq!(invertibles(&families::family_neargroup_z3(0)), vec![0, 1, 2]);
    }

    #[test]
    fn induced_unit() {
        for m in 0..=3 {
            for n in 0..=m {
                let r = families::family_prop31(m, n).unwrap();
                assert_eq!(
                    induced_unit_image(&r),
                    ObjectCombination::from_pairs([(0, 4), (2, 2 * m), (3, 2 * n)])
                );
            }
        }
        assert_eq!(
            induced_unit_image(&families::fibonacci()),
            ObjectCombination::from_pairs([(0, 2), (1, 1)])
        );
        assert_eq!(
            induced_unit_image(&families::klein_four()),
            ObjectCombination::from_pairs([(0, 4)])
        );
        assert_eq!(
            induced_unit_image(&families::cyclic_group_ring(5)),
            ObjectCombination::from_pairs([(0, 5)])
        );
    }

    #[test]
    fn tensor_product_is_valid_and_unit_is_neutral() {
        let fib = families::fibonacci();
        let z2 = families::cyclic_group_ring(2);
        let p = tensor_product(&fib, &z2);
        assert!(validate(&p).is_fusion_ring());
        assert_eq!(p.rank(), 4);
        let t = tensor_product(&fib, &families::trivial_ring());
        assert_eq!(t.flat_tensor(), fib.flat_tensor());
        let ff = tensor_product(&fib, &fib);
        assert_eq!(ff.labels(), &["(1,1)", "(1,t)", "(t,1)", "(t,t)"].map(String::from)[..]);
        assert!(ff.labels().iter().enumerate().all(|(i, l)| !ff.labels()[..i].contains(l)));
    }
}
