use std::fmt;

use super::FusionRing;
use crate::ring::ops::fusion_matrix;

/// A failed axiom instance: the offending index tuple and both sides' values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub indices: Vec<usize>,
    pub lhs: u64,
    pub rhs: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomStatus {
    Pass,
    Fail(Violation),
}

impl AxiomStatus {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomStatus::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            AxiomStatus::Pass => None,
            AxiomStatus::Fail(v) => Some(v),
        }
    }
}

/// Independent verdicts for each ring axiom plus the commutativity flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub unit: AxiomStatus,
    pub duality: AxiomStatus,
    pub frobenius: AxiomStatus,
    pub associativity: AxiomStatus,
    /// Whether all fusion matrices pairwise commute. Not a ring axiom.
    pub commutativity: AxiomStatus,
}

impl ValidationReport {
    /// True iff the unit, duality, Frobenius and associativity axioms hold.
    pub fn is_fusion_ring(&self) -> bool {
        self.unit.passed()
            && self.duality.passed()
            && self.frobenius.passed()
            && self.associativity.passed()
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity.passed()
    }

    pub fn axioms(&self) -> [(&'static str, &AxiomStatus); 5] {
        [
            ("unit", &self.unit),
            ("duality", &self.duality),
            ("frobenius", &self.frobenius),
            ("associativity", &self.associativity),
            ("commutativity", &self.commutativity),
        ]
    }

    /// Name and violation of the first failing ring axiom.
    pub fn first_failure(&self) -> Option<(&'static str, &Violation)> {
        self.axioms()
            .into_iter()
            .take(4)
            .find_map(|(name, s)| s.violation().map(|v| (name, v)))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, status) in self.axioms().into_iter().take(4) {
            match status {
                AxiomStatus::Pass => writeln!(f, "{name:<14} pass")?,
                AxiomStatus::Fail(v) => writeln!(
                    f,
                    "{name:<14} FAIL at {:?}: {} (lhs {} != rhs {})",
                    v.indices, v.detail, v.lhs, v.rhs
                )?,
            }
        }
        let commutes = if self.is_commutative() { "yes" } else { "no" };
        writeln!(f, "{:<14} {commutes}", "commutative")?;
        if self.is_fusion_ring() {
            write!(f, "all axioms pass")
        } else {
            write!(f, "not a fusion ring")
        }
    }
}

pub fn validate(ring: &FusionRing) -> ValidationReport {
    ValidationReport {
        unit: check_unit(ring),
        duality: check_duality(ring),
        frobenius: check_frobenius(ring),
        associativity: check_associativity(ring),
        commutativity: check_matrix_commutativity(ring),
    }
}

fn fail(indices: Vec<usize>, lhs: u64, rhs: u64, detail: impl Into<String>) -> AxiomStatus {
    AxiomStatus::Fail(Violation {
        indices,
        lhs,
        rhs,
        detail: detail.into(),
    })
}

pub(crate) fn check_unit(ring: &FusionRing) -> AxiomStatus {
    let r = ring.rank();
    for j in 0..r {
        for k in 0..r {
            let expected = u64::from(j == k);
            if ring.n(0, j, k) != expected {
                return fail(vec![0, j, k], ring.n(0, j, k), expected, "N_{1j}^k = δ_jk");
            }
            if ring.n(j, 0, k) != expected {
                return fail(vec![j, 0, k], ring.n(j, 0, k), expected, "N_{i1}^k = δ_ik");
            }
        }
    }
    AxiomStatus::Pass
}

pub(crate) fn check_duality(ring: &FusionRing) -> AxiomStatus {
    let r = ring.rank();
    for i in 0..r {
        for j in 0..r {
            let expected = u64::from(j == ring.dual(i));
            if ring.n(i, j, 0) != expected {
                return fail(vec![i, j, 0], ring.n(i, j, 0), expected, "N_{ij}^1 = δ_{j,i*}");
            }
        }
    }
    AxiomStatus::Pass
}

/// The five non-trivial index maps of the rigidity symmetries:
/// `N_{ij}^k = N_{i*k}^j = N_{kj*}^i = N_{j*i*}^{k*} = N_{k*i}^{j*} = N_{jk*}^{i*}`.
pub(crate) fn reciprocity_images(
    dual: &[usize],
    (i, j, k): (usize, usize, usize),
) -> [(usize, usize, usize); 5] {
    let d = |x: usize| dual[x];
    [
        (d(i), k, j),
        (k, d(j), i),
        (d(j), d(i), d(k)),
        (d(k), i, d(j)),
        (j, d(k), d(i)),
    ]
}

const RECIPROCITY_NAMES: [&str; 5] = [
    "N_{ij}^k = N_{i*k}^j",
    "N_{ij}^k = N_{kj*}^i",
    "N_{ij}^k = N_{j*i*}^{k*}",
    "N_{ij}^k = N_{k*i}^{j*}",
    "N_{ij}^k = N_{jk*}^{i*}",
];

pub(crate) fn check_frobenius(ring: &FusionRing) -> AxiomStatus {
    let r = ring.rank();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let v = ring.n(i, j, k);
                for (img, name) in reciprocity_images(ring.duals(), (i, j, k))
                    .into_iter()
                    .zip(RECIPROCITY_NAMES)
                {
                    let w = ring.n(img.0, img.1, img.2);
                    if v != w {
                        return fail(vec![i, j, k, img.0, img.1, img.2], v, w, name);
                    }
                }
            }
        }
    }
    AxiomStatus::Pass
}

/// `Σ_w N_{ij}^w N_{wk}^v = Σ_w N_{jk}^w N_{iw}^v` for all `i, j, k, v`.
pub(crate) fn check_associativity(ring: &FusionRing) -> AxiomStatus {
    let r = ring.rank();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for v in 0..r {
                    let lhs: u64 = (0..r).map(|w| ring.n(i, j, w) * ring.n(w, k, v)).sum();
                    let rhs: u64 = (0..r).map(|w| ring.n(j, k, w) * ring.n(i, w, v)).sum();
                    if lhs != rhs {
                        return fail(vec![i, j, k, v], lhs, rhs, "((i⊗j)⊗k)_v = (i⊗(j⊗k))_v");
                    }
                }
            }
        }
    }
    AxiomStatus::Pass
}

fn check_matrix_commutativity(ring: &FusionRing) -> AxiomStatus {
    let r = ring.rank();
    let mats: Vec<_> = (0..r)
        .map(|x| fusion_matrix(ring, x).expect("index in range"))
        .collect();
    for x in 0..r {
        for y in x + 1..r {
            let xy = &mats[x] * &mats[y];
            let yx = &mats[y] * &mats[x];
            if xy != yx {
                for row in 0..r {
                    for col in 0..r {
                        if xy.get(row, col) != yx.get(row, col) {
                            return fail(
                                vec![x, y, row, col],
                                xy.get(row, col) as u64,
                                yx.get(row, col) as u64,
                                "(N_x N_y)[row][col] = (N_y N_x)[row][col]",
                            );
                        }
                    }
                }
            }
        }
    }
    AxiomStatus::Pass
}
