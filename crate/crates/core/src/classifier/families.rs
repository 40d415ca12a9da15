//! Generators for the rank-4 self-dual families and the small fixtures
//! they are compared against.

use std::collections::BTreeMap;
use std::fmt;

use crate::ring::{FusionRing, RingBuilder, RingError};

const UNIT: usize = 0;

/// Named non-negative integer parameters of a family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams(BTreeMap<String, u64>);

impl FamilyParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: u64) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn insert(&mut self, name: &str, value: u64) {
        self.0.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Result<u64, RingError> {
        self.0
            .get(name)
            .copied()
            .ok_or_else(|| RingError::MissingParameter(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.0.iter().map(|(k, &v)| (k.as_str(), v))
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Every family the CLI can build by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Prop31,
    Eq6,
    Eq7,
    NearGroupZ3,
    Fibonacci,
    Cyclic,
    KleinFour,
    Trivial,
    Eq1AsPrinted,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Prop31,
        Family::Eq6,
        Family::Eq7,
        Family::NearGroupZ3,
        Family::Fibonacci,
        Family::Cyclic,
        Family::KleinFour,
        Family::Trivial,
        Family::Eq1AsPrinted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Prop31 => "prop31",
            Family::Eq6 => "eq6",
            Family::Eq7 => "eq7",
            Family::NearGroupZ3 => "neargroup-z3",
            Family::Fibonacci => "fib",
            Family::Cyclic => "cyclic",
            Family::KleinFour => "klein4",
            Family::Trivial => "trivial",
            Family::Eq1AsPrinted => "eq1-printed",
        }
    }

    pub fn from_name(name: &str) -> Result<Family, RingError> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| RingError::UnknownFamily(name.to_string()))
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::Prop31 => &["m", "n"],
            Family::Eq6 => &["m", "n", "s", "t"],
            Family::Eq7 => &["a", "b"],
            Family::NearGroupZ3 => &["k"],
            Family::Cyclic => &["n"],
            Family::Eq1AsPrinted => &["m"],
            Family::Fibonacci | Family::KleinFour | Family::Trivial => &[],
        }
    }

    /// Categorification constraints cited from outside; recorded, never enforced.
    pub fn external_note(self) -> Option<&'static str> {
        match self {
            Family::Prop31 => Some(
                "categorifiable members with m = n are cited to require m ∈ {1, 2}; \
                 the n = 0 branch to require m = 1 (rank-2 classification)",
            ),
            Family::NearGroupZ3 => Some("categorifiable near-group C(Z3,k) cited for k ∈ {0, 2, 3, 6}"),
            Family::Eq1AsPrinted => Some("display variant with g⊗X = X; fails Frobenius reciprocity"),
            _ => None,
        }
    }

    pub fn build(self, params: &FamilyParams) -> Result<FusionRing, RingError> {
        let p = |name: &str| params.get(name);
        match self {
            Family::Prop31 => family_prop31(p("m")?, p("n")?),
            Family::Eq6 => family_eq6(p("m")?, p("n")?, p("s")?, p("t")?),
            Family::Eq7 => Ok(family_eq7(p("a")?, p("b")?)),
            Family::NearGroupZ3 => Ok(family_neargroup_z3(p("k")?)),
            Family::Fibonacci => Ok(fibonacci()),
            Family::Cyclic => {
                let n = p("n")?;
                if n == 0 {
                    return Err(RingError::Constraint {
                        relation: "n >= 1".into(),
                        detail: "cyclic group order must be positive".into(),
                    });
                }
                Ok(cyclic_group_ring(n as usize))
            }
            Family::KleinFour => Ok(klein_four()),
            Family::Trivial => Ok(trivial_ring()),
            Family::Eq1AsPrinted => Ok(eq1_as_printed(p("m")?)),
        }
    }
}

/// Fixed-point-free family on `(1, g, X, Y)`: `g⊗X = Y`,
/// `X⊗X = Y⊗Y = 1 ⊕ mX ⊕ nY`, `Y⊗X = g ⊕ nX ⊕ mY`. Requires `m ≥ n`.
pub fn family_prop31(m: u64, n: u64) -> Result<FusionRing, RingError> {
    if m < n {
        return Err(RingError::Constraint {
            relation: "m >= n".into(),
            detail: format!("m = {m}, n = {n}"),
        });
    }
    prop31_shape(m, n, m, n)
}

/// The unnormalized fixed-point-free shape:
/// `X⊗X = 1 ⊕ mX ⊕ nY`, `Y⊗X = g ⊕ nX ⊕ sY`, `Y⊗Y = 1 ⊕ sX ⊕ tY`.
pub fn prop31_shape(m: u64, n: u64, s: u64, t: u64) -> Result<FusionRing, RingError> {
    let (g, x, y) = (1, 2, 3);
    RingBuilder::self_dual(["1", "g", "X", "Y"])
        .fuse(g, g, &[(UNIT, 1)])
        .fuse(g, x, &[(y, 1)])
        .fuse(g, y, &[(x, 1)])
        .fuse(x, x, &[(UNIT, 1), (x, m), (y, n)])
        .fuse(x, y, &[(g, 1), (x, n), (y, s)])
        .fuse(y, y, &[(UNIT, 1), (x, s), (y, t)])
        .build()
}

/// The fixed-point family on `(1, g, X, Y)` with the relation
/// `n² + s² = 2 + ms + nt` enforced. Associativity is left to `validate`.
pub fn family_eq6(m: u64, n: u64, s: u64, t: u64) -> Result<FusionRing, RingError> {
    if n * n + s * s != 2 + m * s + n * t {
        return Err(RingError::Constraint {
            relation: "n^2 + s^2 = 2 + ms + nt".into(),
            detail: format!(
                "(m,n,s,t) = ({m},{n},{s},{t}): {} != {}",
                n * n + s * s,
                2 + m * s + n * t
            ),
        });
    }
    eq6_shape(m, n, s, t)
}

/// `g⊗X = X`, `g⊗Y = Y`, `X⊗X = 1 ⊕ g ⊕ mX ⊕ nY`, `Y⊗X = nX ⊕ sY`,
/// `Y⊗Y = 1 ⊕ g ⊕ sX ⊕ tY`, with no relation imposed.
pub fn eq6_shape(m: u64, n: u64, s: u64, t: u64) -> Result<FusionRing, RingError> {
    let (g, x, y) = (1, 2, 3);
    RingBuilder::self_dual(["1", "g", "X", "Y"])
        .fuse(g, g, &[(UNIT, 1)])
        .fuse(g, x, &[(x, 1)])
        .fuse(g, y, &[(y, 1)])
        .fuse(x, x, &[(UNIT, 1), (g, 1), (x, m), (y, n)])
        .fuse(x, y, &[(x, n), (y, s)])
        .fuse(y, y, &[(UNIT, 1), (g, 1), (x, s), (y, t)])
        .build()
}

/// Parameters of the general shape with a Fibonacci subring `{1, Z}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FibShape {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub e: u64,
    pub f: u64,
    pub g: u64,
}

impl fmt::Display for FibShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={} b={} c={} d={} e={} f={} g={}",
            self.a, self.b, self.c, self.d, self.e, self.f, self.g
        )
    }
}

/// `X⊗X = 1 ⊕ aX ⊕ bY ⊕ cZ`, `Y⊗X = bX ⊕ dY ⊕ eZ`, `Y⊗Y = 1 ⊕ dX ⊕ gY ⊕ fZ`,
/// `Z⊗X = cX ⊕ eY`, `Z⊗Y = eX ⊕ fY`, `Z⊗Z = 1 ⊕ Z` on `(1, X, Y, Z)`.
pub fn fib_shape(s: FibShape) -> FusionRing {
    let (x, y, z) = (1, 2, 3);
    RingBuilder::self_dual(["1", "X", "Y", "Z"])
        .fuse(x, x, &[(UNIT, 1), (x, s.a), (y, s.b), (z, s.c)])
        .fuse(x, y, &[(x, s.b), (y, s.d), (z, s.e)])
        .fuse(y, y, &[(UNIT, 1), (x, s.d), (y, s.g), (z, s.f)])
        .fuse(z, x, &[(x, s.c), (y, s.e)])
        .fuse(z, y, &[(x, s.e), (y, s.f)])
        .fuse(z, z, &[(UNIT, 1), (z, 1)])
        .build()
        .expect("shape is structurally well-formed")
}

/// The Fibonacci-subring family: `fib_shape` at `(c, e, f) = (0, 1, 1)`,
/// `d = a + b`, `g = a + 2b`.
pub fn family_eq7(a: u64, b: u64) -> FusionRing {
    fib_shape(FibShape {
        a,
        b,
        c: 0,
        d: a + b,
        e: 1,
        f: 1,
        g: a + 2 * b,
    })
}

/// Near-group ring on `(1, g, g², X)` with `X⊗X = 1 ⊕ g ⊕ g² ⊕ kX`.
pub fn family_neargroup_z3(k: u64) -> FusionRing {
    let (g, g2, x) = (1, 2, 3);
    RingBuilder::new(["1", "g", "g2", "X"], vec![0, 2, 1, 3])
        .fuse(g, g, &[(g2, 1)])
        .fuse(g, g2, &[(UNIT, 1)])
        .fuse(g2, g2, &[(g, 1)])
        .fuse(g, x, &[(x, 1)])
        .fuse(g2, x, &[(x, 1)])
        .fuse(x, x, &[(UNIT, 1), (g, 1), (g2, 1), (x, k)])
        .build()
        .expect("shape is structurally well-formed")
}

/// The fixed-point-free display variant with `g⊗X = X`, `g⊗Y = Y`, kept as a
/// fixture that validation must reject.
pub fn eq1_as_printed(m: u64) -> FusionRing {
    let (g, x, y) = (1, 2, 3);
    RingBuilder::self_dual(["1", "g", "X", "Y"])
        .fuse(g, g, &[(UNIT, 1)])
        .fuse(g, x, &[(x, 1)])
        .fuse(g, y, &[(y, 1)])
        .fuse(x, x, &[(UNIT, 1), (x, m), (y, m)])
        .fuse(x, y, &[(g, 1), (x, m), (y, m)])
        .fuse(y, y, &[(UNIT, 1), (x, m), (y, m)])
        .build()
        .expect("shape is structurally well-formed")
}

/// Rank-2 ring `X⊗X = 1 ⊕ kX`.
pub fn rank_two(k: u64) -> FusionRing {
    RingBuilder::self_dual(["1", "X"])
        .fuse(1, 1, &[(UNIT, 1), (1, k)])
        .build()
        .expect("shape is structurally well-formed")
}

pub fn fibonacci() -> FusionRing {
    RingBuilder::self_dual(["1", "t"])
        .fuse(1, 1, &[(UNIT, 1), (1, 1)])
        .build()
        .expect("shape is structurally well-formed")
}

pub fn trivial_ring() -> FusionRing {
    RingBuilder::self_dual(["1"]).build().expect("rank 1")
}

/// Group ring from a multiplication table over elements `0..n` with identity 0.
pub fn group_ring(labels: &[&str], table: &[Vec<usize>]) -> Result<FusionRing, RingError> {
    let n = labels.len();
    let dual: Vec<usize> = (0..n)
        .map(|i| {
            (0..n)
                .find(|&j| table[i][j] == 0)
                .ok_or_else(|| RingError::Structure(format!("element {i} has no inverse")))
        })
        .collect::<Result<_, _>>()?;
    let mut tensor = vec![0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            tensor[(i * n + j) * n + table[i][j]] = 1;
        }
    }
    FusionRing::from_flat(labels.iter().map(|s| s.to_string()).collect(), dual, tensor)
}

/// `ℤ[ℤ_n]` on `(1, g, g², …)`.
pub fn cyclic_group_ring(n: usize) -> FusionRing {
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    group_ring(&refs, &table).expect("cyclic group table")
}

/// `ℤ[ℤ₂ × ℤ₂]` on `(1, a, b, ab)`.
pub fn klein_four() -> FusionRing {
    let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    group_ring(&["1", "a", "b", "ab"], &table).expect("Klein four table")
}

/// `ℤ[S₃]` with elements `1, r, r², s, sr, sr²`; non-commutative fixture.
pub fn group_ring_s3() -> FusionRing {
    // element (k, e) = s^k r^e, encoded as 3k + e
    let mul = |a: usize, b: usize| -> usize {
        let (ka, ea) = (a / 3, a % 3);
        let (kb, eb) = (b / 3, b % 3);
        // r^ea s^kb = s^kb r^{±ea}
        let e = if kb == 0 { (ea + eb) % 3 } else { (3 - ea + eb) % 3 };
        ((ka + kb) % 2) * 3 + e
    };
    let table: Vec<Vec<usize>> = (0..6).map(|i| (0..6).map(|j| mul(i, j)).collect()).collect();
    group_ring(&["1", "r", "r2", "s", "sr", "sr2"], &table).expect("S3 table")
}
