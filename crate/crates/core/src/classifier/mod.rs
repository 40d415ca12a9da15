//! Family generators, the proposition-specific searches and the brute-force
//! enumerator that cross-checks them.

mod brute;
pub mod families;
mod search;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::ring::{canonical_form, canonical_key, CanonicalKey, FusionRing, RingError};

pub use brute::{brute_force, free_orbits, Predicate, DEFAULT_MAX_CANDIDATES};
pub use families::{FamilyParams, Family, FibShape};
pub use search::{
    prop33_branch_solutions, prop33_stage1, prop33_stage2, search_prop31, search_prop32,
    search_prop33, PerronTriple,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifierError {
    #[error("projected candidate count {projected} exceeds the ceiling {ceiling}")]
    TooManyCandidates { projected: u128, ceiling: u64 },
    #[error("invalid search parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SearchMode {
    Prop31,
    Prop32,
    Prop33,
    Brute,
}

impl SearchMode {
    pub fn name(self) -> &'static str {
        match self {
            SearchMode::Prop31 => "prop31",
            SearchMode::Prop32 => "prop32",
            SearchMode::Prop33 => "prop33",
            SearchMode::Brute => "brute",
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchParams {
    pub mode: SearchMode,
    pub bound: u64,
    pub rank: usize,
    pub dual: Vec<usize>,
    /// Names of the coordinates in each provenance tuple.
    pub coordinates: Vec<String>,
}

impl SearchParams {
    pub fn is_self_dual(&self) -> bool {
        self.dual.iter().enumerate().all(|(i, &d)| i == d)
    }
}

/// One isomorphism class: its canonical representative and every raw
/// parameter tuple that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub representative: FusionRing,
    pub provenance: Vec<Vec<u64>>,
}

/// A row of a staged search's audit trail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageRecord {
    pub stage: String,
    pub item: String,
    pub verdict: String,
    pub detail: String,
}

/// A claim checked during the search. Failures are reported, not raised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub params: SearchParams,
    /// Sorted by canonical key; pairwise non-isomorphic.
    pub classes: Vec<ClassRecord>,
    pub stages: Vec<StageRecord>,
    pub checks: Vec<Check>,
}

impl SearchResult {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn canonical_keys(&self) -> Vec<CanonicalKey> {
        self.classes.iter().map(|c| canonical_key(&c.representative)).collect()
    }

    /// The class isomorphic to `ring`, if any.
    pub fn find_class(&self, ring: &FusionRing) -> Option<&ClassRecord> {
        let key = canonical_key(ring);
        self.classes.iter().find(|c| canonical_key(&c.representative) == key)
    }
}

/// Deterministic merge of `(tuple, ring)` hits into canonical classes.
/// Input order does not matter: classes are keyed and sorted by canonical
/// key, provenance tuples are sorted.
pub(crate) fn merge_classes<I>(hits: I) -> Vec<ClassRecord>
where
    I: IntoIterator<Item = (Vec<u64>, FusionRing)>,
{
    let mut classes: BTreeMap<CanonicalKey, ClassRecord> = BTreeMap::new();
    for (tuple, ring) in hits {
        let key = canonical_key(&ring);
        classes
            .entry(key)
            .or_insert_with(|| ClassRecord {
                representative: canonical_form(&ring).0,
                provenance: Vec::new(),
            })
            .provenance
            .push(tuple);
    }
    classes
        .into_values()
        .map(|mut c| {
            c.provenance.sort();
            c
        })
        .collect()
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn fmt_tuple(t: &[u64]) -> String {
    let parts: Vec<String> = t.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}
