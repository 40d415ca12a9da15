use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::RatPoly;
use super::{IntPolynomial, QuadraticNumber, SpectralError};

/// Exact closed form of a root, when one is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactValue {
    Rational(BigRational),
    Quadratic(QuadraticNumber),
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Rational(r) => write!(f, "{}", QuadraticNumber::from_rational(r.clone())),
            ExactValue::Quadratic(q) => write!(f, "{q}"),
        }
    }
}

/// A real root of `polynomial` certified to be the only one in `[lo, hi]`.
///
/// `polynomial` is the square-free piece the root was isolated against (a
/// linear factor, a quadratic or a higher cofactor); `multiplicity` is the
/// root's multiplicity in the polynomial originally passed to [`real_roots`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealAlgebraicRoot {
    polynomial: IntPolynomial,
    lo: BigRational,
    hi: BigRational,
    precision: BigRational,
    multiplicity: usize,
    exact: Option<ExactValue>,
}

impl RealAlgebraicRoot {
    pub fn polynomial(&self) -> &IntPolynomial {
        &self.polynomial
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn precision(&self) -> &BigRational {
        &self.precision
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn exact(&self) -> Option<&ExactValue> {
        self.exact.as_ref()
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn to_f64(&self) -> f64 {
        match &self.exact {
            Some(ExactValue::Quadratic(q)) => q.to_f64(),
            _ => self.midpoint().to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn is_exact_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Shrinks the isolating interval until its width is at most `width`.
    pub fn refine(&mut self, width: &BigRational) {
        if self.width() <= *width {
            if *width < self.precision {
                self.precision = width.clone();
            }
            return;
        }
        let f = self.polynomial.to_rat();
        let (lo, hi) = refine_interval(&f, self.lo.clone(), self.hi.clone(), width);
        self.lo = lo;
        self.hi = hi;
        self.precision = width.clone();
        if self.lo == self.hi && self.exact.is_none() {
            self.exact = Some(ExactValue::Rational(self.lo.clone()));
        }
    }

    /// Exact certificate: the number of distinct roots of `polynomial` in
    /// `[lo, hi]`, computed with a Sturm sequence.
    pub fn roots_in_interval(&self) -> usize {
        let seq = SturmSequence::new(&self.polynomial.to_rat());
        let at_lo = usize::from(self.polynomial.eval(&self.lo).is_zero());
        seq.count(&self.lo, &self.hi) + at_lo
    }

    /// Exact comparison against a rational, when the interval decides it.
    pub fn cmp_rational(&self, x: &BigRational) -> Option<Ordering> {
        if self.lo == self.hi {
            return Some(self.lo.cmp(x));
        }
        if *x < self.lo {
            Some(Ordering::Greater)
        } else if *x > self.hi {
            Some(Ordering::Less)
        } else {
            None
        }
    }
}

impl fmt::Display for RealAlgebraicRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(e) => write!(f, "{e}"),
            None => write!(f, "{:.10}", self.to_f64()),
        }
    }
}

/// Canonical Sturm sequence `p, p', -rem(p, p'), …` over ℚ.
pub(crate) struct SturmSequence {
    polys: Vec<RatPoly>,
}

fn sign_changes<I: IntoIterator<Item = Ordering>>(signs: I) -> usize {
    let mut last = Ordering::Equal;
    let mut changes = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

impl SturmSequence {
    pub(crate) fn new(p: &RatPoly) -> Self {
        let mut polys = vec![p.clone()];
        let mut prev = p.clone();
        let mut cur = p.derivative();
        while !cur.is_zero() {
            polys.push(cur.clone());
            let rem = prev.div_rem(&cur).1.neg();
            prev = cur;
            cur = rem;
        }
        SturmSequence { polys }
    }

    pub(crate) fn changes_at(&self, x: &BigRational) -> usize {
        let zero = BigRational::zero();
        sign_changes(self.polys.iter().map(|p| p.eval(x).cmp(&zero)))
    }

    pub(crate) fn changes_at_quadratic(&self, x: &QuadraticNumber) -> usize {
        sign_changes(self.polys.iter().map(|p| {
            let mut acc = QuadraticNumber::from_integer(0);
            for c in p.coeffs.iter().rev() {
                acc = &(&acc * x) + &QuadraticNumber::from_rational(c.clone());
            }
            acc.signum()
        }))
    }

    pub(crate) fn changes_at_pos_inf(&self) -> usize {
        let zero = BigRational::zero();
        sign_changes(self.polys.iter().map(|p| p.leading().cmp(&zero)))
    }

    /// Distinct roots in the half-open interval `(lo, hi]`.
    pub(crate) fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.changes_at(lo).saturating_sub(self.changes_at(hi))
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// `1 + max |a_i / a_n|`: every root lies strictly inside `(-B, B)`.
fn cauchy_bound(p: &RatPoly) -> BigRational {
    let lead = p.leading().abs();
    let max = p.coeffs[..p.coeffs.len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    max + BigRational::one()
}

/// Isolating intervals `(lo, hi]` for the distinct real roots of a
/// square-free `p`, ascending.
fn isolate(p: &RatPoly) -> Vec<(BigRational, BigRational)> {
    let seq = SturmSequence::new(p);
    let b = cauchy_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        match seq.count(&lo, &hi) {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) * half();
                // push right first so the left half is processed first
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out
}

/// Given `(lo, hi]` holding exactly one root of the square-free `f`, returns a
/// closed interval of width at most `width` holding exactly that root, with
/// `f` non-zero at both ends unless the interval is a single point.
fn refine_interval(
    f: &RatPoly,
    mut lo: BigRational,
    mut hi: BigRational,
    width: &BigRational,
) -> (BigRational, BigRational) {
    let zero = BigRational::zero();
    if f.eval(&hi).is_zero() {
        return (hi.clone(), hi);
    }
    if lo == hi {
        return (lo, hi);
    }
    if f.eval(&lo).is_zero() {
        let seq = SturmSequence::new(f);
        loop {
            let mid = (&lo + &hi) * half();
            if f.eval(&mid).is_zero() {
                return (mid.clone(), mid);
            }
            if seq.count(&mid, &hi) == 1 {
                lo = mid;
                break;
            }
            hi = mid;
        }
    }
    let lo_sign = f.eval(&lo).cmp(&zero);
    while &hi - &lo > *width {
        let mid = (&lo + &hi) * half();
        let s = f.eval(&mid).cmp(&zero);
        if s == Ordering::Equal {
            return (mid.clone(), mid);
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

struct Piece {
    poly: IntPolynomial,
    multiplicity: usize,
    roots: Vec<(BigRational, BigRational, Option<ExactValue>)>,
}

/// Splits one square-free factor into its rational linear factors and the
/// remaining cofactor, with isolating intervals for every real root.
fn split_factor(f: &IntPolynomial, multiplicity: usize) -> Vec<Piece> {
    let fr = f.to_rat();
    let lead = BigRational::from_integer(f.leading().abs());
    let lattice = BigRational::one() / &lead;
    let mut rational = Vec::new();
    let mut irrational = Vec::new();
    for (lo, hi) in isolate(&fr) {
        // any rational root has the form k / lead
        let (lo, hi) = refine_interval(&fr, lo, hi, &(&lattice * half()));
        if lo == hi {
            rational.push(lo);
            continue;
        }
        let k = (&lo * &lead).ceil();
        let cand = &k / &lead;
        if cand <= hi && fr.eval(&cand).is_zero() {
            rational.push(cand);
        } else {
            irrational.push((lo, hi));
        }
    }
    let mut pieces = Vec::new();
    let mut cofactor = fr.clone();
    for r in &rational {
        let lin = RatPoly::new(vec![-r.clone(), BigRational::one()]);
        cofactor = cofactor.div_rem(&lin).0;
        pieces.push(Piece {
            poly: IntPolynomial::from_rat(&lin),
            multiplicity,
            roots: vec![(r.clone(), r.clone(), Some(ExactValue::Rational(r.clone())))],
        });
    }
    if cofactor.degree().unwrap_or(0) > 0 {
        let poly = IntPolynomial::from_rat(&cofactor);
        let mut roots: Vec<_> = irrational.into_iter().map(|(lo, hi)| (lo, hi, None)).collect();
        if poly.degree() == Some(2) && roots.len() == 2 {
            let (a, b, c) = (poly.coeff(2), poly.coeff(1), poly.coeff(0));
            let disc = &b * &b - BigInt::from(4) * &a * &c;
            let two_a = BigInt::from(2) * &a;
            let p = BigRational::new(-b, two_a.clone());
            let q = BigRational::new(BigInt::one(), two_a.abs());
            if let (Ok(plus), Ok(minus)) = (
                QuadraticNumber::new(p.clone(), q.clone(), disc.clone()),
                QuadraticNumber::new(p, -q, disc),
            ) {
                // roots are ascending; the conjugate with negative surd is smaller
                roots[0].2 = Some(ExactValue::Quadratic(minus));
                roots[1].2 = Some(ExactValue::Quadratic(plus));
            }
        }
        pieces.push(Piece {
            poly,
            multiplicity,
            roots,
        });
    }
    pieces
}

/// All real roots of `poly`, ascending, each in a certified isolating
/// interval of width at most `precision`, with multiplicities.
pub fn real_roots(
    poly: &IntPolynomial,
    precision: &BigRational,
) -> Result<Vec<RealAlgebraicRoot>, SpectralError> {
    if poly.is_zero() {
        return Err(SpectralError::ZeroPolynomial);
    }
    if !precision.is_positive() {
        return Err(SpectralError::InvalidPrecision(precision.to_string()));
    }
    let mut roots: Vec<RealAlgebraicRoot> = Vec::new();
    for (factor, mult) in poly.square_free_decomposition() {
        for piece in split_factor(&factor, mult) {
            for (lo, hi, exact) in piece.roots {
                let mut root = RealAlgebraicRoot {
                    polynomial: piece.poly.clone(),
                    lo,
                    hi,
                    precision: precision.clone(),
                    multiplicity: piece.multiplicity,
                    exact,
                };
                root.refine(precision);
                root.precision = precision.clone();
                roots.push(root);
            }
        }
    }
    separate(&mut roots);
    Ok(roots)
}

/// Refines overlapping intervals (distinct roots from different pieces)
/// until all are pairwise disjoint, then sorts ascending.
fn separate(roots: &mut [RealAlgebraicRoot]) {
    loop {
        roots.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
        let mut clash = None;
        for i in 1..roots.len() {
            if roots[i].lo <= roots[i - 1].hi {
                clash = Some(i);
                break;
            }
        }
        let Some(i) = clash else { return };
        for j in [i - 1, i] {
            if !roots[j].is_exact_point() {
                let w = roots[j].width() * half();
                let keep = roots[j].precision.clone();
                roots[j].refine(&w);
                roots[j].precision = keep;
            }
        }
    }
}

/// Number of distinct real roots of `poly` strictly greater than `v`.
pub(crate) fn roots_above_quadratic(poly: &IntPolynomial, v: &QuadraticNumber) -> usize {
    let f = poly.to_rat();
    let sf = f.div_rem(&f.gcd(&f.derivative())).0;
    let seq = SturmSequence::new(&sf);
    seq.changes_at_quadratic(v)
        .saturating_sub(seq.changes_at_pos_inf())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12))
    }

    #[test]
    fn golden_polynomial() {
        let p = IntPolynomial::from_i64(&[-1, -1, 1]);
        let roots = real_roots(&p, &prec()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].to_f64() + 0.618_033_988_75).abs() < 1e-9);
        assert!((roots[1].to_f64() - 1.618_033_988_75).abs() < 1e-9);
        assert_eq!(
            roots[1].exact(),
            Some(&ExactValue::Quadratic(QuadraticNumber::golden_ratio()))
        );
        for r in &roots {
            assert!(r.width() <= prec());
            assert_eq!(r.roots_in_interval(), 1);
        }
    }

    #[test]
    fn repeated_root() {
        let p = IntPolynomial::linear_root(1).pow(4);
        let roots = real_roots(&p, &prec()).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity(), 4);
        assert!(roots[0].is_exact_point());
        assert_eq!(roots[0].lo(), &BigRational::one());
    }

    #[test]
    fn codegree_quadratic_factor() {
        let p = IntPolynomial::from_i64(&[32, -16, 1]);
        let roots = real_roots(&p, &prec()).unwrap();
        assert!((roots[1].to_f64() - 13.656_854_249_49).abs() < 1e-9);
        assert_eq!(
            roots[1].exact(),
            Some(&ExactValue::Quadratic(QuadraticNumber::from_parts((8, 1), (4, 1), 2).unwrap()))
        );
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            real_roots(&IntPolynomial::zero(), &prec()),
            Err(SpectralError::ZeroPolynomial)
        );
        assert!(real_roots(&IntPolynomial::one(), &prec()).unwrap().is_empty());
    }

    #[test]
    fn non_monic_rational_roots() {
        // (2x - 1)(3x + 2)(x^2 - 2)
        let p = IntPolynomial::from_i64(&[-1, 2])
            .mul(&IntPolynomial::from_i64(&[2, 3]))
            .mul(&IntPolynomial::from_i64(&[-2, 0, 1]));
        let roots = real_roots(&p, &prec()).unwrap();
        let vals: Vec<f64> = roots.iter().map(|r| r.to_f64()).collect();
        let expect = [-std::f64::consts::SQRT_2, -2.0 / 3.0, 0.5, std::f64::consts::SQRT_2];
        for (v, e) in vals.iter().zip(expect) {
            assert!((v - e).abs() < 1e-9, "{vals:?}");
        }
        assert_eq!(
            roots[1].exact(),
            Some(&ExactValue::Rational(BigRational::new((-2).into(), 3.into())))
        );
    }

    #[test]
    fn overlapping_pieces_are_separated() {
        // roots 1 (multiplicity 2) and 1 ± tiny irrational offset
        let close = IntPolynomial::from_i64(&[999_999, -2_000_000, 1_000_000]);
        let p = IntPolynomial::linear_root(1).pow(2).mul(&close);
        let roots = real_roots(&p, &BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(roots.len(), 3);
        for w in roots.windows(2) {
            assert!(w[0].hi() < w[1].lo());
        }
    }

    #[test]
    fn sturm_counts_above_quadratic() {
        let p = IntPolynomial::from_i64(&[-1, -1, 1]).mul(&IntPolynomial::from_i64(&[-1, 1]));
        let phi = QuadraticNumber::golden_ratio();
        assert_eq!(roots_above_quadratic(&p, &phi), 0);
        assert_eq!(roots_above_quadratic(&p, &QuadraticNumber::from_integer(0)), 2);
        assert_eq!(roots_above_quadratic(&p, &phi.conjugate()), 2);
    }
}
