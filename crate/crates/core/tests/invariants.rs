mod common;

use num_bigint::BigInt;
use num_rational::BigRational;

use fusring::ring::validate;
use fusring::spectral::{formal_codegrees, fpdim_within, global_fpdim};

fn precision() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(10u64.pow(12)))
}

#[test]
fn fpdim_is_a_ring_homomorphism() {
    for (name, ring) in common::corpus() {
        let dims: Vec<f64> = (0..ring.rank())
            .map(|x| fpdim_within(&ring, x, &precision()).unwrap().to_f64())
            .collect();
        for x in 0..ring.rank() {
            for y in 0..ring.rank() {
                let rhs: f64 = (0..ring.rank()).map(|z| ring.n(x, y, z) as f64 * dims[z]).sum();
                assert!((dims[x] * dims[y] - rhs).abs() < 1e-9, "{name}: {x}⊗{y}");
            }
        }
    }
}

#[test]
fn largest_codegree_is_the_global_dimension() {
    for (name, ring) in common::corpus() {
        let global = global_fpdim(&ring, &precision()).unwrap();
        assert!(global.width() <= precision(), "{name}");
        let (_, roots) = formal_codegrees(&ring, &precision()).unwrap();
        let top = roots.last().unwrap().to_f64();
        assert!((top - global.to_f64()).abs() < 1e-9, "{name}: {top} vs {}", global.to_f64());
    }
}

#[test]
fn reciprocal_codegrees_sum_to_one() {
    for (name, ring) in common::corpus() {
        if !validate(&ring).is_commutative() {
            continue;
        }
        let (_, roots) = formal_codegrees(&ring, &precision()).unwrap();
        let sum: f64 = roots.iter().map(|r| r.multiplicity() as f64 / r.to_f64()).sum();
        assert!((sum - 1.0).abs() < 1e-9, "{name}: {sum}");
    }
}

#[test]
fn trace_of_codegree_matrix_counts_pairs() {
    // tr Σ_z N_z N_{z*} = Σ_{z,y} (z⊗z*⊗y)_y, and equals the sum of codegrees
    for (name, ring) in common::corpus() {
        let (cp, roots) = formal_codegrees(&ring, &precision()).unwrap();
        let r = ring.rank();
        let trace: u64 = (0..r)
            .map(|z| {
                (0..r)
                    .map(|y| (0..r).map(|w| ring.n(z, w, y) * ring.n(ring.dual(z), y, w)).sum::<u64>())
                    .sum::<u64>()
            })
            .sum();
        let degree = cp.degree().unwrap();
        assert_eq!(-cp.coeff(degree - 1), BigInt::from(trace), "{name}");
        let root_sum: f64 = roots.iter().map(|x| x.multiplicity() as f64 * x.to_f64()).sum();
        assert!((root_sum - trace as f64).abs() < 1e-6, "{name}");
    }
}
