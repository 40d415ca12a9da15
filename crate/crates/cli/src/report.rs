//! Analysis and search reports. Each report is a plain record; the machine
//! (JSON) and human (table) forms are both rendered from it.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use fusring::classifier::{SearchMode, SearchResult, StageRecord};
use fusring::ring::{induced_unit_image, invertibles, subrings, validate, AxiomStatus};
use fusring::spectral::{formal_codegrees, fpdim_within, global_fpdim, Enclosure, SpectralError};
use fusring::{FusionRing, RealAlgebraicRoot};

/// Number of decimal places needed to show an interval of width `precision`.
pub fn decimal_places(precision: &BigRational) -> usize {
    let mut digits = 0;
    let mut scale = BigRational::one();
    while scale > *precision && digits < 40 {
        scale /= BigRational::from_integer(BigInt::from(10));
        digits += 1;
    }
    digits
}

/// `x` rounded toward `-∞` (`ceil = false`) or `+∞` to `digits` places.
pub fn decimal(x: &BigRational, digits: usize, ceil: bool) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = x * BigRational::from_integer(scale.clone());
    let n = if ceil { scaled.ceil() } else { scaled.floor() }.to_integer();
    let (int, frac) = n.abs().div_rem(&scale);
    let sign = if n.is_negative() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: String,
    pub hi: String,
}

impl Interval {
    fn new(lo: &BigRational, hi: &BigRational, digits: usize) -> Self {
        Interval {
            lo: decimal(lo, digits, false),
            hi: decimal(hi, digits, true),
        }
    }

    fn of(e: &Enclosure, digits: usize) -> Self {
        Interval::new(&e.lo, &e.hi, digits)
    }
}

fn root_text(root: &RealAlgebraicRoot, digits: usize) -> String {
    match root.exact() {
        Some(v) => v.to_string(),
        None => format!("≈{}", decimal(&root.midpoint(), digits, false)),
    }
}

/// Roots with multiplicity, grouped by square-free piece. Groups are ordered
/// by their largest root, descending; a piece of multiplicity `k` repeats
/// its block `k` times.
pub fn ordered_roots(roots: &[RealAlgebraicRoot], digits: usize) -> Vec<String> {
    let mut groups: Vec<Vec<&RealAlgebraicRoot>> = Vec::new();
    for r in roots {
        match groups
            .iter_mut()
            .find(|g| g[0].polynomial() == r.polynomial() && g[0].multiplicity() == r.multiplicity())
        {
            Some(g) => g.push(r),
            None => groups.push(vec![r]),
        }
    }
    for g in &mut groups {
        g.sort_by_key(|r| std::cmp::Reverse(r.midpoint()));
    }
    groups.sort_by_key(|g| std::cmp::Reverse(g[0].midpoint()));
    let mut out = Vec::new();
    for g in groups {
        for _ in 0..g[0].multiplicity() {
            out.extend(g.iter().map(|r| root_text(r, digits)));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomLine {
    pub axiom: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionLine {
    pub label: String,
    pub exact: Option<String>,
    pub enclosure: Interval,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingReport {
    pub rank: usize,
    pub labels: Vec<String>,
    pub duals: Vec<String>,
    pub fusion_ring: bool,
    pub commutative: bool,
    pub axioms: Vec<AxiomLine>,
    pub fpdims: Vec<DimensionLine>,
    pub global_fpdim: Interval,
    pub codegree_polynomial: String,
    pub codegrees: Vec<String>,
    pub subrings: Vec<Vec<String>>,
    pub invertibles: Vec<String>,
    pub induced_unit: String,
}

impl RingReport {
    pub fn build(ring: &FusionRing, precision: &BigRational) -> Result<Self, SpectralError> {
        let digits = decimal_places(precision);
        let names = |xs: &[usize]| xs.iter().map(|&x| ring.label(x).to_string()).collect::<Vec<_>>();
        let report = validate(ring);
        let axioms = report
            .axioms()
            .into_iter()
            .take(4)
            .map(|(name, status)| AxiomLine {
                axiom: name.to_string(),
                passed: status.passed(),
                detail: match status {
                    AxiomStatus::Pass => String::new(),
                    AxiomStatus::Fail(v) => {
                        format!("{} at {:?}: {} != {}", v.detail, v.indices, v.lhs, v.rhs)
                    }
                },
            })
            .collect();
        let fpdims = (0..ring.rank())
            .map(|x| {
                let root = fpdim_within(ring, x, precision)?;
                Ok(DimensionLine {
                    label: ring.label(x).to_string(),
                    exact: root.exact().map(|v| v.to_string()),
                    enclosure: Interval::new(root.lo(), root.hi(), digits),
                })
            })
            .collect::<Result<Vec<_>, SpectralError>>()?;
        let (cp, roots) = formal_codegrees(ring, precision)?;
        let duals: Vec<usize> = (0..ring.rank()).map(|x| ring.dual(x)).collect();
        Ok(RingReport {
            rank: ring.rank(),
            labels: ring.labels().to_vec(),
            duals: names(&duals),
            fusion_ring: report.is_fusion_ring(),
            commutative: report.is_commutative(),
            axioms,
            fpdims,
            global_fpdim: Interval::of(&global_fpdim(ring, precision)?, digits),
            codegree_polynomial: cp.to_string(),
            codegrees: ordered_roots(&roots, digits),
            subrings: subrings(ring).iter().map(|s| names(s)).collect(),
            invertibles: names(&invertibles(ring)),
            induced_unit: ring.format_combination(&induced_unit_image(ring)),
        })
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut rows: Vec<(String, String)> = Vec::new();
        let mut push = |k: &str, v: String| rows.push((k.to_string(), v));
        push("rank", self.rank.to_string());
        push("labels", self.labels.join(" "));
        push("duals", self.duals.join(" "));
        for a in &self.axioms {
            let v = if a.passed { "pass".to_string() } else { format!("FAIL {}", a.detail) };
            push(&a.axiom, v);
        }
        push("verdict", if self.fusion_ring { "all axioms pass" } else { "not a fusion ring" }.into());
        push("commutative", if self.commutative { "yes" } else { "no" }.into());
        for d in &self.fpdims {
            let exact = d.exact.clone().unwrap_or_default();
            push(
                &format!("FPdim({})", d.label),
                format!("{exact:<12} [{}, {}]", d.enclosure.lo, d.enclosure.hi),
            );
        }
        push("global FPdim", format!("[{}, {}]", self.global_fpdim.lo, self.global_fpdim.hi));
        push("codegree poly", self.codegree_polynomial.clone());
        push("codegrees", self.codegrees.join(", "));
        let subs: Vec<String> = self.subrings.iter().map(|s| format!("{{{}}}", s.join(","))).collect();
        push("subrings", subs.join(" "));
        push("invertibles", self.invertibles.join(" "));
        push("I(1)", self.induced_unit.clone());
        render_pairs(&rows)
    }
}

fn render_pairs(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let pad = width - k.chars().count();
        let _ = writeln!(out, "{k}:{} {v}", " ".repeat(pad));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassLine {
    pub class_id: String,
    pub mode: String,
    pub params: String,
    pub provenance: Vec<String>,
    pub fpdim_lo: String,
    pub fpdim_hi: String,
    pub codegrees: String,
    pub n_subrings: usize,
    pub pointed_rank: usize,
    pub fusion_ring: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageLine {
    pub stage: String,
    pub item: String,
    pub verdict: String,
    pub detail: String,
}

impl From<&StageRecord> for StageLine {
    fn from(s: &StageRecord) -> Self {
        StageLine {
            stage: s.stage.clone(),
            item: s.item.clone(),
            verdict: s.verdict.clone(),
            detail: s.detail.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub mode: String,
    pub bound: u64,
    pub rank: usize,
    pub dual: Vec<usize>,
    pub coordinates: Vec<String>,
    pub classes: Vec<ClassLine>,
    pub stages: Vec<StageLine>,
    pub checks: Vec<CheckLine>,
}

pub fn class_id(index: usize) -> String {
    format!("c{:03}", index + 1)
}

impl SearchReport {
    pub fn build(result: &SearchResult, precision: &BigRational) -> Result<Self, SpectralError> {
        let digits = decimal_places(precision);
        let names = &result.params.coordinates;
        let classes = result
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let ring = &c.representative;
                let global = global_fpdim(ring, precision)?;
                let (_, roots) = formal_codegrees(ring, precision)?;
                let params: Vec<String> = c
                    .provenance
                    .iter()
                    .map(|t| {
                        names
                            .iter()
                            .zip(t)
                            .filter(|(_, v)| result.params.mode != SearchMode::Brute || **v != 0)
                            .map(|(n, v)| format!("{n}={v}"))
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                let shown = match params.len() {
                    0..=4 => params.join("; "),
                    n => format!("{} (+{} more)", params[0], n - 1),
                };
                Ok(ClassLine {
                    class_id: class_id(i),
                    mode: result.params.mode.to_string(),
                    params: shown,
                    provenance: params,
                    fpdim_lo: decimal(&global.lo, digits, false),
                    fpdim_hi: decimal(&global.hi, digits, true),
                    codegrees: ordered_roots(&roots, digits).join("; "),
                    n_subrings: subrings(ring).len(),
                    pointed_rank: invertibles(ring).len(),
                    fusion_ring: validate(ring).is_fusion_ring(),
                })
            })
            .collect::<Result<Vec<_>, SpectralError>>()?;
        Ok(SearchReport {
            mode: result.params.mode.to_string(),
            bound: result.params.bound,
            rank: result.params.rank,
            dual: result.params.dual.clone(),
            coordinates: names.clone(),
            classes,
            stages: result.stages.iter().map(StageLine::from).collect(),
            checks: result
                .checks
                .iter()
                .map(|c| CheckLine {
                    check: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
        })
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Class table, then (when present) the stage table and the check table,
    /// separated by blank lines. Each table has its own header row.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut write = |rec: &[String]| w.write_record(rec).expect("in-memory write");
        write(&[
            "class_id", "mode", "params", "fpdim_lo", "fpdim_hi", "codegrees", "n_subrings", "pointed_rank",
        ]
        .map(String::from));
        for c in &self.classes {
            write(&[
                c.class_id.clone(),
                c.mode.clone(),
                c.params.clone(),
                c.fpdim_lo.clone(),
                c.fpdim_hi.clone(),
                c.codegrees.clone(),
                c.n_subrings.to_string(),
                c.pointed_rank.to_string(),
            ]);
        }
        let mut out = String::from_utf8(w.into_inner().expect("flush")).expect("utf-8");
        if !self.stages.is_empty() {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["stage", "item", "verdict", "detail"]).expect("write");
            for s in &self.stages {
                w.write_record([&s.stage, &s.item, &s.verdict, &s.detail]).expect("write");
            }
            out.push('\n');
            out.push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf-8"));
        }
        if !self.checks.is_empty() {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["check", "passed", "detail"]).expect("write");
            for c in &self.checks {
                w.write_record([&c.check, &c.passed.to_string(), &c.detail]).expect("write");
            }
            out.push('\n');
            out.push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf-8"));
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "mode {} bound {} rank {} dual {:?}: {} classes\n\n",
            self.mode,
            self.bound,
            self.rank,
            self.dual,
            self.classes.len()
        );
        let header = ["class", "global FPdim", "codegrees", "subrings", "pointed", "params"].map(String::from);
        let rows: Vec<[String; 6]> = self
            .classes
            .iter()
            .map(|c| {
                [
                    c.class_id.clone(),
                    format!("[{}, {}]", c.fpdim_lo, c.fpdim_hi),
                    c.codegrees.clone(),
                    c.n_subrings.to_string(),
                    c.pointed_rank.to_string(),
                    c.params.clone(),
                ]
            })
            .collect();
        out.push_str(&render_table(&header, &rows));
        if !self.stages.is_empty() {
            out.push('\n');
            let header = ["stage", "item", "verdict", "detail"].map(String::from);
            let rows: Vec<[String; 4]> = self
                .stages
                .iter()
                .map(|s| [s.stage.clone(), s.item.clone(), s.verdict.clone(), s.detail.clone()])
                .collect();
            out.push_str(&render_table(&header, &rows));
        }
        if !self.checks.is_empty() {
            out.push('\n');
            for c in &self.checks {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                let _ = writeln!(out, "{mark} {}  {}", c.check, c.detail);
            }
        }
        out
    }
}

fn render_table<const N: usize>(header: &[String; N], rows: &[[String; N]]) -> String {
    let mut widths = [0usize; N];
    for row in std::iter::once(header).chain(rows) {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(header).chain(rows) {
        let cells: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fusring::classifier::families::{family_prop31, fibonacci};
    use fusring::spectral::default_precision;

    #[test]
    fn decimals_round_outward() {
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(decimal(&third, 4, false), "0.3333");
        assert_eq!(decimal(&third, 4, true), "0.3334");
        assert_eq!(decimal(&-third.clone(), 2, false), "-0.34");
        assert_eq!(decimal(&BigRational::from_integer(BigInt::from(5)), 0, true), "5");
        assert_eq!(decimal_places(&default_precision()), 12);
    }

    #[test]
    fn codegree_display_order() {
        let p = default_precision();
        let r = RingReport::build(&family_prop31(1, 1).unwrap(), &p).unwrap();
        assert_eq!(r.codegrees.join(", "), "8+4√2, 8−4√2, 4, 4");
        let r = RingReport::build(&family_prop31(1, 0).unwrap(), &p).unwrap();
        assert_eq!(r.codegrees.join(", "), "5+√5, 5−√5, 5+√5, 5−√5");
    }

    #[test]
    fn table_and_machine_share_the_record() {
        let r = RingReport::build(&fibonacci(), &default_precision()).unwrap();
        let table = r.to_table();
        assert!(table.contains("verdict:       all axioms pass"));
        assert!(table.contains("FPdim(t):      (1+√5)/2"));
        let machine: serde_json::Value = serde_json::from_str(&r.to_machine()).unwrap();
        assert_eq!(machine["fpdims"][1]["exact"], "(1+√5)/2");
        assert_eq!(machine["codegrees"][0], r.codegrees[0]);
    }
}
