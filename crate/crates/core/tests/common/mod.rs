#![allow(dead_code)]

use fusring::classifier::families::*;
use fusring::FusionRing;

/// Named rings shared by the integration tests.
pub fn corpus() -> Vec<(&'static str, FusionRing)> {
    vec![
        ("trivial", trivial_ring()),
        ("fib", fibonacci()),
        ("z2", cyclic_group_ring(2)),
        ("z3", cyclic_group_ring(3)),
        ("klein4", klein_four()),
        ("s3", group_ring_s3()),
        ("prop31(1,1)", family_prop31(1, 1).unwrap()),
        ("prop31(2,2)", family_prop31(2, 2).unwrap()),
        ("prop31(1,0)", family_prop31(1, 0).unwrap()),
        ("eq6(0,1,1,0)", family_eq6(0, 1, 1, 0).unwrap()),
        ("eq7(0,0)", family_eq7(0, 0)),
        ("eq7(1,0)", family_eq7(1, 0)),
        ("eq7(1,1)", family_eq7(1, 1)),
        ("neargroup(0)", family_neargroup_z3(0)),
        ("neargroup(2)", family_neargroup_z3(2)),
    ]
}

/// Unit-fixing permutation of `0..rank` from an arbitrary seed.
pub fn seeded_permutation(rank: usize, mut seed: u64) -> Vec<usize> {
    let mut tail: Vec<usize> = (1..rank).collect();
    for i in (1..tail.len()).rev() {
        let j = (seed % (i as u64 + 1)) as usize;
        seed /= i as u64 + 1;
        tail.swap(i, j);
    }
    let mut p = vec![0];
    p.extend(tail);
    p
}
