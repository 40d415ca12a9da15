use itertools::Itertools;
use rayon::prelude::*;

use super::families::{eq6_shape, family_eq7, fib_shape, prop31_shape, FibShape};
use super::{check, fmt_tuple, merge_classes, SearchMode, SearchParams, SearchResult, StageRecord};
use crate::matrix::IntMatrix;
use crate::ring::{canonical_key, fusion_matrix, validate, FusionRing};
use crate::spectral::{eval_quadratic, perron_dominant, IntPolynomial, QuadraticNumber};

fn grid(dim: usize, bound: u64) -> Vec<Vec<u64>> {
    (0..dim).map(|_| 0..=bound).multi_cartesian_product().collect()
}

fn params(mode: SearchMode, bound: u64, coordinates: &[&str]) -> SearchParams {
    SearchParams {
        mode,
        bound,
        rank: 4,
        dual: vec![0, 1, 2, 3],
        coordinates: coordinates.iter().map(|s| s.to_string()).collect(),
    }
}

fn stage(stage: &str, item: String, verdict: &str, detail: String) -> StageRecord {
    StageRecord {
        stage: stage.to_string(),
        item,
        verdict: verdict.to_string(),
        detail,
    }
}

fn matrices_commute(ring: &FusionRing) -> bool {
    let mats: Vec<IntMatrix> = (0..ring.rank())
        .map(|x| fusion_matrix(ring, x).expect("index in range"))
        .collect();
    mats.iter().tuple_combinations().all(|(a, b)| a.commutes_with(b))
}

/// Fixed-point-free shape over `(m, n, s, t) ≤ bound`: keep what validates,
/// then confirm every survivor has `m = s`, `n = t`.
pub fn search_prop31(bound: u64) -> SearchResult {
    let hits: Vec<(Vec<u64>, FusionRing)> = grid(4, bound)
        .into_par_iter()
        .filter_map(|t| {
            let ring = prop31_shape(t[0], t[1], t[2], t[3]).ok()?;
            validate(&ring).is_fusion_ring().then_some((t, ring))
        })
        .collect();

    let stages = hits
        .iter()
        .map(|(t, _)| stage("validate", fmt_tuple(t), "survives", String::new()))
        .collect();
    let off_diagonal: Vec<String> = hits
        .iter()
        .filter(|(t, _)| t[0] != t[2] || t[1] != t[3])
        .map(|(t, _)| fmt_tuple(t))
        .collect();
    let classes = merge_classes(hits);
    let unnormalized: Vec<String> = classes
        .iter()
        .filter(|c| !c.provenance.iter().any(|t| t[0] >= t[1]))
        .map(|c| fmt_tuple(&c.provenance[0]))
        .collect();

    SearchResult {
        params: params(SearchMode::Prop31, bound, &["m", "n", "s", "t"]),
        checks: vec![
            check(
                "every survivor has m = s and n = t",
                off_diagonal.is_empty(),
                if off_diagonal.is_empty() {
                    "no counterexample".to_string()
                } else {
                    format!("counterexamples: {}", off_diagonal.join(" "))
                },
            ),
            check(
                "every class has a representative tuple with m ≥ n",
                unnormalized.is_empty(),
                unnormalized.join(" "),
            ),
        ],
        classes,
        stages,
    }
}

/// Outcome for one tuple of the fixed-point shape.
struct Prop32Row {
    tuple: Vec<u64>,
    commuting: bool,
    relation: bool,
    ring: Option<FusionRing>,
}

/// Fixed-point shape over `(m, n, s, t) ≤ bound`, reporting the commuting
/// stratum and the associative stratum separately.
pub fn search_prop32(bound: u64) -> SearchResult {
    let rows: Vec<Prop32Row> = grid(4, bound)
        .into_par_iter()
        .map(|t| {
            let (m, n, s, u) = (t[0], t[1], t[2], t[3]);
            let ring = eq6_shape(m, n, s, u).expect("shape is structurally well-formed");
            let commuting = matrices_commute(&ring);
            let valid = validate(&ring).is_fusion_ring();
            Prop32Row {
                relation: n * n + s * s == 2 + m * s + n * u,
                commuting,
                ring: valid.then_some(ring),
                tuple: t,
            }
        })
        .collect();

    let mut stages = Vec::new();
    let mut counterexamples = Vec::new();
    let mut noncommuting_valid = Vec::new();
    let mut degenerate = Vec::new();
    for row in &rows {
        let item = fmt_tuple(&row.tuple);
        if row.commuting {
            if !row.relation {
                counterexamples.push(item.clone());
            }
            if row.tuple[1] == 0 && row.tuple[2] == 0 {
                degenerate.push(item.clone());
            }
            let verdict = if row.ring.is_some() { "associative" } else { "not associative" };
            stages.push(stage("commute", item, verdict, String::new()));
        } else if row.ring.is_some() {
            noncommuting_valid.push(item);
        }
    }
    let n_commuting = stages.len();
    let hits = rows.into_iter().filter_map(|r| r.ring.map(|ring| (r.tuple, ring)));

    SearchResult {
        params: params(SearchMode::Prop32, bound, &["m", "n", "s", "t"]),
        classes: merge_classes(hits),
        stages,
        checks: vec![
            check(
                "pairwise commutation implies n^2 + s^2 = 2 + ms + nt",
                counterexamples.is_empty(),
                format!(
                    "{n_commuting} commuting tuples, {} counterexamples {}",
                    counterexamples.len(),
                    counterexamples.join(" ")
                ),
            ),
            check(
                "associative tuples are a subset of commuting tuples",
                noncommuting_valid.is_empty(),
                noncommuting_valid.join(" "),
            ),
            check(
                "no commuting tuple has n = s = 0",
                degenerate.is_empty(),
                degenerate.join(" "),
            ),
        ],
    }
}

/// Evaluation of one `(c, e, f)` triple for the Fibonacci-subring shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PerronTriple {
    pub c: u64,
    pub e: u64,
    pub f: u64,
    /// The golden ratio is the largest eigenvalue of `M_Z`.
    pub perron: bool,
    /// `c² + e² ≠ 0` and `e² + f² ≠ 0`.
    pub nonvanishing: bool,
    /// `e = e(c + f)`
    pub linear: bool,
    /// `c² + e² = 1 + c`
    pub xx_relation: bool,
    /// `1 + f = e² + f²`
    pub yy_relation: bool,
}

impl PerronTriple {
    pub fn kept(&self) -> bool {
        self.perron && self.nonvanishing && self.linear
    }

    pub fn triple(&self) -> (u64, u64, u64) {
        (self.c, self.e, self.f)
    }
}

fn z_matrix(c: u64, e: u64, f: u64) -> IntMatrix {
    let (c, e, f) = (c as i64, e as i64, f as i64);
    IntMatrix::from_rows(&[[0, 0, 0, 1], [0, c, e, 0], [0, e, f, 0], [1, 0, 0, 1]])
        .expect("4x4 rows")
}

/// All Perron-dominant triples `(c, e, f) ≤ bound`, with the remaining
/// stage-one conditions evaluated. Use [`PerronTriple::kept`] to filter.
pub fn prop33_stage1(bound: u64) -> Vec<PerronTriple> {
    let phi = QuadraticNumber::golden_ratio();
    grid(3, bound)
        .into_par_iter()
        .filter_map(|t| {
            let (c, e, f) = (t[0], t[1], t[2]);
            let perron = perron_dominant(&z_matrix(c, e, f), &phi).expect("positive, non-negative");
            perron.then_some(PerronTriple {
                c,
                e,
                f,
                perron,
                nonvanishing: c * c + e * e != 0 && e * e + f * f != 0,
                linear: e == e * (c + f),
                xx_relation: c * c + e * e == 1 + c,
                yy_relation: 1 + f == e * e + f * f,
            })
        })
        .collect()
}

/// Reason the triple is impossible in a fusion ring with `FPdim(Z) = φ`, if
/// it is. With `e = 0`, `Z⊗X = cX`, so the FPdim homomorphism forces
/// `FPdim(Z) = c`, a rational number.
pub fn prop33_stage2(c: u64, e: u64, _f: u64) -> Option<String> {
    if e != 0 {
        return None;
    }
    let phi = QuadraticNumber::golden_ratio();
    let linear = IntPolynomial::linear_root(c as i64);
    if eval_quadratic(&linear, &phi).is_zero() {
        return None;
    }
    let z_x = if c == 1 { "X".to_string() } else { format!("{c}X") };
    Some(format!(
        "Z⊗X = {z_x} forces FPdim(Z) = {c}, but FPdim(Z) = {phi}; Z is not invertible"
    ))
}

/// Solutions `(a, b, d, g) ≤ bound` of the three commutation equations
/// involving `a, b, d, g` for fixed `(c, e, f)`.
fn offenders(total: usize, off: &[String]) -> String {
    if off.is_empty() {
        format!("{total} solutions")
    } else {
        format!("{total} solutions, failing: {}", off.join(" "))
    }
}

pub fn prop33_branch_solutions(c: u64, e: u64, f: u64, bound: u64) -> Vec<FibShape> {
    grid(4, bound)
        .into_iter()
        .map(|t| FibShape {
            a: t[0],
            b: t[1],
            c,
            d: t[2],
            e,
            f,
            g: t[3],
        })
        .filter(|s| {
            1 + s.a * s.d + s.b * s.g + s.c * s.f == s.b * s.b + s.d * s.d + s.e * s.e
                && s.a * s.e + s.b * s.f == s.b * s.c + s.d * s.e
                && s.b * s.e + s.d * s.f == s.c * s.d + s.e * s.g
        })
        .collect()
}

fn shape_tuple(s: &FibShape) -> Vec<u64> {
    vec![s.a, s.b, s.c, s.d, s.e, s.f, s.g]
}

/// `family_eq7(a, b)` isomorphic to `ring`, searching `a, b` up to the
/// largest structure constant of `ring`.
fn matching_eq7(ring: &FusionRing) -> Option<(u64, u64)> {
    let key = canonical_key(ring);
    let top = ring.flat_tensor().iter().copied().max().unwrap_or(0);
    (0..=top)
        .cartesian_product(0..=top)
        .find(|&(a, b)| canonical_key(&family_eq7(a, b)) == key)
}

const EXPECTED_TRIPLES: [(u64, u64, u64); 3] = [(0, 1, 1), (1, 0, 1), (1, 1, 0)];

/// Three-stage search for rank-4 self-dual rings with a Fibonacci subring
/// `{1, Z}`: Perron filter on `(c, e, f)`, FPdim contradiction, then the
/// remaining commutation equations for `(a, b, d, g)`.
pub fn search_prop33(bound: u64) -> SearchResult {
    let evaluated = prop33_stage1(bound);
    let mut kept: Vec<(u64, u64, u64)> =
        evaluated.iter().filter(|t| t.kept()).map(PerronTriple::triple).collect();
    kept.sort();
    let dropped: Vec<String> = evaluated
        .iter()
        .filter(|t| !t.kept())
        .map(|t| fmt_tuple(&[t.c, t.e, t.f]))
        .sorted()
        .collect();
    let expected: Vec<(u64, u64, u64)> = if bound == 0 { vec![] } else { EXPECTED_TRIPLES.to_vec() };

    let mut checks = vec![check(
        "stage 1 keeps exactly (1,0,1), (0,1,1), (1,1,0)",
        kept == expected,
        format!(
            "kept {}; Perron-dominant but dropped {}",
            kept.iter().map(|&(c, e, f)| fmt_tuple(&[c, e, f])).join(" "),
            dropped.join(" ")
        ),
    )];
    let mut stages = Vec::new();
    let mut hits = Vec::new();
    let mut survivors = Vec::new();

    for &(c, e, f) in &kept {
        let item = format!("(c,e,f)={}", fmt_tuple(&[c, e, f]));
        match prop33_stage2(c, e, f) {
            Some(reason) => stages.push(stage("2", item, "rejected", reason)),
            None => {
                stages.push(stage("2", item, "survives", String::new()));
                survivors.push((c, e, f));
            }
        }
    }
    checks.push(check(
        "stage 2 rejects exactly (1,0,1)",
        bound == 0 || survivors == vec![(0, 1, 1), (1, 1, 0)],
        survivors.iter().map(|&(c, e, f)| fmt_tuple(&[c, e, f])).join(" "),
    ));

    for &(c, e, f) in &survivors {
        let item = format!("(c,e,f)={}", fmt_tuple(&[c, e, f]));
        let solutions = prop33_branch_solutions(c, e, f, bound);
        let rings: Vec<(FibShape, FusionRing)> =
            solutions.par_iter().map(|s| (*s, fib_shape(*s))).collect();
        let n_valid = rings.iter().filter(|(_, r)| validate(r).is_fusion_ring()).count();

        if (c, e, f) == (0, 1, 1) {
            let off: Vec<String> = solutions
                .iter()
                .filter(|s| s.d != s.a + s.b || s.g != s.a + 2 * s.b)
                .map(|s| fmt_tuple(&shape_tuple(s)))
                .collect();
            checks.push(check(
                "every (0,1,1) solution has d = a+b and g = a+2b",
                off.is_empty(),
                offenders(solutions.len(), &off),
            ));
            stages.push(stage(
                "3",
                item,
                "solved",
                format!("{} solutions, {n_valid} associative", solutions.len()),
            ));
        } else {
            let matches: Vec<Option<(u64, u64)>> =
                rings.par_iter().map(|(_, r)| matching_eq7(r)).collect();
            let unmatched: Vec<String> = solutions
                .iter()
                .zip(&matches)
                .filter(|(_, m)| m.is_none())
                .map(|(s, _)| fmt_tuple(&shape_tuple(s)))
                .collect();
            checks.push(check(
                format!("every {} solution is isomorphic to a family_eq7 ring", fmt_tuple(&[c, e, f])),
                unmatched.is_empty(),
                offenders(solutions.len(), &unmatched),
            ));
            let verdict = if unmatched.is_empty() { "isomorphic" } else { "not isomorphic" };
            stages.push(stage(
                "3",
                item,
                verdict,
                format!("{} solutions, {n_valid} associative", solutions.len()),
            ));
        }
        hits.extend(
            rings
                .into_iter()
                .filter(|(_, r)| validate(r).is_fusion_ring())
                .map(|(s, r)| (shape_tuple(&s), r)),
        );
    }

    SearchResult {
        params: params(SearchMode::Prop33, bound, &["a", "b", "c", "d", "e", "f", "g"]),
        classes: merge_classes(hits),
        stages,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::families::{family_eq6, family_prop31};

    #[test]
    fn prop31_bound_two() {
        let res = search_prop31(2);
        assert!(res.all_checks_pass(), "{:?}", res.checks);
        for (m, n) in [(1, 1), (2, 2), (1, 0)] {
            assert!(res.find_class(&family_prop31(m, n).unwrap()).is_some(), "({m},{n})");
        }
        let provenance = &res.find_class(&family_prop31(1, 0).unwrap()).unwrap().provenance;
        assert_eq!(provenance, &vec![vec![0, 1, 0, 1], vec![1, 0, 1, 0]]);
    }

    #[test]
    fn prop31_bound_zero_is_pointed() {
        let res = search_prop31(0);
        assert_eq!(res.classes.len(), 1);
        assert!(res.find_class(&crate::classifier::families::klein_four()).is_some());
    }

    #[test]
    fn prop32_relation_and_dihedral_member() {
        let res = search_prop32(3);
        assert!(res.all_checks_pass(), "{:?}", res.checks);
        assert!(res.find_class(&family_eq6(0, 1, 1, 0).unwrap()).is_some());
    }

    #[test]
    fn prop33_stages() {
        let kept: Vec<_> = prop33_stage1(5).into_iter().filter(|t| t.kept()).map(|t| t.triple()).sorted().collect();
        assert_eq!(kept, vec![(0, 1, 1), (1, 0, 1), (1, 1, 0)]);
        assert!(prop33_stage2(1, 0, 1).unwrap().contains("not invertible"));
        assert!(prop33_stage2(0, 1, 1).is_none());
        let res = search_prop33(3);
        assert!(res.all_checks_pass(), "{:?}", res.checks);
        assert!(res.find_class(&family_eq7(1, 0)).is_some());
    }

    #[test]
    fn literal_relations_reject_the_first_triple() {
        let t = prop33_stage1(5).into_iter().find(|t| t.triple() == (1, 0, 1)).unwrap();
        assert!(t.kept());
        assert!(!t.xx_relation && !t.yy_relation);
    }
}
