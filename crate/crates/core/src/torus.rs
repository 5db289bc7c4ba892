//! Torus knots and the U/L cabling sequence that produces the middle tunnel
//! of a torus knot from its associated matrix.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tunnel::{
    AssociatedKnot, CablingStep, Disk, StepKind, TunnelDescriptor, TunnelInvariants,
};

/// The torus knot `T(a,b)`, a curve representing `a` longitudes plus `b`
/// meridians on the standard Heegaard torus. Knots are unoriented, so
/// `T(a,b)` and `T(-a,-b)` are the same knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorusKnot {
    a: i64,
    b: i64,
}

impl TorusKnot {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        for x in [a, b] {
            if x == i64::MIN {
                return Err(Error::ParameterOutOfRange(x));
            }
        }
        if a.gcd(&b) != 1 {
            return Err(Error::NotCoprime { a, b });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `T(a,b)` is unknotted iff `|a| <= 1` or `|b| <= 1`.
    pub fn is_trivial(&self) -> bool {
        self.a.abs() <= 1 || self.b.abs() <= 1
    }

    /// `a > b >= 2`, or one of the normalized trivial knots `T(n,1)`, `n >= 1`,
    /// and `T(1,0)`.
    pub fn is_normalized(&self) -> bool {
        (self.a > self.b && self.b >= 2)
            || (self.a >= 1 && self.b == 1)
            || (self.a, self.b) == (1, 0)
    }

    pub fn mirror(&self) -> Self {
        Self {
            a: self.a,
            b: -self.b,
        }
    }

    /// True when the two knots are isotopic in the 3-sphere. Every trivial knot
    /// is isotopic to every other; otherwise `T(a,b) = T(b,a) = T(-a,-b)`.
    pub fn is_isotopic_to(&self, other: &TorusKnot) -> bool {
        if self.is_trivial() || other.is_trivial() {
            return self.is_trivial() && other.is_trivial();
        }
        let (x, y) = (normalize(self), normalize(other));
        (x.knot, x.mirrored) == (y.knot, y.mirrored)
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.a, self.b)
    }
}

/// The normalized form of a torus knot together with the moves used to reach it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Normalization {
    pub knot: TorusKnot,
    /// The longitude and meridian were interchanged.
    pub swapped: bool,
    /// A reflection was applied; every slope invariant of the input is the
    /// negative of the corresponding invariant of `knot`.
    pub mirrored: bool,
}

pub fn normalize(knot: &TorusKnot) -> Normalization {
    let (mut a, mut b) = (knot.a, knot.b);
    let swapped = a.abs() < b.abs();
    if swapped {
        std::mem::swap(&mut a, &mut b);
    }
    if a < 0 {
        a = -a;
        b = -b;
    }
    let mirrored = b < 0;
    if mirrored {
        b = -b;
    }
    Normalization {
        knot: TorusKnot { a, b },
        swapped,
        mirrored,
    }
}

/// A continued fraction `a/b = ±[n_1, ..., n_k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContinuedFraction {
    pub terms: Vec<i64>,
    /// `a/b = -[n_1, ..., n_k]`.
    pub negative: bool,
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        let sign = if self.negative { "-" } else { "" };
        write!(f, "{sign}[{}]", terms.join(","))
    }
}

/// Expansion of `a/b` for `a > 0`, `b != 0` coprime. All terms are positive
/// except that `n_1 = 0` when `a < |b|`; the last term is at least 2 unless
/// the expansion has a single term.
pub fn continued_fraction(a: i64, b: i64) -> Result<ContinuedFraction> {
    let knot = TorusKnot::new(a, b)?;
    if a <= 0 || b == 0 {
        return Err(Error::NoAssociatedMatrix { knot });
    }
    let (mut num, mut den) = (a, b.abs());
    let mut terms = Vec::new();
    while den != 0 {
        let (quot, rem) = num.div_rem(&den);
        terms.push(quot);
        num = den;
        den = rem;
    }
    Ok(ContinuedFraction {
        terms,
        negative: b < 0,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Letter {
    U,
    L,
}

impl Letter {
    /// U-constructions replace rho, L-constructions replace lambda.
    pub fn replaces(self) -> Disk {
        match self {
            Letter::U => Disk::Rho,
            Letter::L => Disk::Lambda,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::U => "U",
            Letter::L => "L",
        })
    }
}

/// A word in U and L stored in application order: the first letter is the
/// first matrix multiplied onto the seed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ULWord(pub Vec<Letter>);

impl ULWord {
    /// `L^{n_1}`, then `U^{n_2}`, then `L^{n_3}`, ..., with the final exponent `n_k - 1`.
    pub fn from_continued_fraction(cf: &ContinuedFraction) -> Self {
        let mut letters = Vec::new();
        let last = cf.terms.len().saturating_sub(1);
        for (i, &n) in cf.terms.iter().enumerate() {
            let letter = if i % 2 == 0 { Letter::L } else { Letter::U };
            let count = if i == last { n - 1 } else { n };
            letters.extend(std::iter::repeat_n(letter, count.max(0) as usize));
        }
        ULWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Matrix-product notation, rightmost factor applied first, e.g. `U^2 L`.
    pub fn factored(&self) -> String {
        let mut runs: Vec<(Letter, usize)> = Vec::new();
        for &letter in &self.0 {
            match runs.last_mut() {
                Some((l, count)) if *l == letter => *count += 1,
                _ => runs.push((letter, 1)),
            }
        }
        if runs.is_empty() {
            return "I".to_string();
        }
        runs.iter()
            .rev()
            .map(|(l, c)| {
                if *c == 1 {
                    l.to_string()
                } else {
                    format!("{l}^{c}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for ULWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&letters.join(" "))
    }
}

/// The 2x2 integer matrix `(p q; r s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Matrix2 {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl Matrix2 {
    pub const IDENTITY: Matrix2 = Matrix2 {
        p: 1,
        q: 0,
        r: 0,
        s: 1,
    };
    /// Seed for torus knots `T(a,b)` with `b < 0`; associated to `T(1,-1)`.
    pub const NEGATIVE_SEED: Matrix2 = Matrix2 {
        p: 1,
        q: 0,
        r: 0,
        s: -1,
    };
    pub const U: Matrix2 = Matrix2 {
        p: 1,
        q: 1,
        r: 0,
        s: 1,
    };
    pub const L: Matrix2 = Matrix2 {
        p: 1,
        q: 0,
        r: 1,
        s: 1,
    };

    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Self {
        Self { p, q, r, s }
    }

    /// `U * self`.
    pub fn apply_u(&self) -> Self {
        Self {
            p: self.p + self.r,
            q: self.q + self.s,
            r: self.r,
            s: self.s,
        }
    }

    /// `L * self`.
    pub fn apply_l(&self) -> Self {
        Self {
            p: self.p,
            q: self.q,
            r: self.p + self.r,
            s: self.q + self.s,
        }
    }

    pub fn apply(&self, letter: Letter) -> Self {
        match letter {
            Letter::U => self.apply_u(),
            Letter::L => self.apply_l(),
        }
    }

    pub fn mul(&self, rhs: &Matrix2) -> Self {
        Self {
            p: self.p * rhs.p + self.q * rhs.r,
            q: self.p * rhs.q + self.q * rhs.s,
            r: self.r * rhs.p + self.s * rhs.r,
            s: self.r * rhs.q + self.s * rhs.s,
        }
    }

    pub fn det(&self) -> i128 {
        self.p as i128 * self.s as i128 - self.q as i128 * self.r as i128
    }

    /// `(p+r, q+s)`.
    pub fn row_sums(&self) -> (i64, i64) {
        (self.p + self.r, self.q + self.s)
    }

    /// The knot `T(p,q)` carried by the first row.
    pub fn rho_knot(&self) -> Result<TorusKnot> {
        TorusKnot::new(self.p, self.q)
    }

    /// The knot `T(r,s)` carried by the second row.
    pub fn lambda_knot(&self) -> Result<TorusKnot> {
        TorusKnot::new(self.r, self.s)
    }
}

/// The diagonal sum `ad + bc` of `(a b; c d)`.
pub fn diag(m: &Matrix2) -> BigInt {
    BigInt::from(m.p) * m.s + BigInt::from(m.q) * m.r
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.p, self.q, self.r, self.s)
    }
}

/// The matrix associated to a torus knot, with the U/L word that builds it
/// from the seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssociatedMatrix {
    pub matrix: Matrix2,
    pub word: ULWord,
    pub continued_fraction: ContinuedFraction,
    /// Built on the seed `M(1,-1)` rather than the identity.
    pub negative_branch: bool,
}

impl AssociatedMatrix {
    pub fn seed(&self) -> Matrix2 {
        if self.negative_branch {
            Matrix2::NEGATIVE_SEED
        } else {
            Matrix2::IDENTITY
        }
    }
}

/// The associated matrix of `T(a,b)`, `a > 0`, `b != 0`.
pub fn associated_matrix(knot: &TorusKnot) -> Result<AssociatedMatrix> {
    let cf = continued_fraction(knot.a, knot.b)?;
    let word = ULWord::from_continued_fraction(&cf);
    let seed = if cf.negative {
        Matrix2::NEGATIVE_SEED
    } else {
        Matrix2::IDENTITY
    };
    let matrix = word.letters().iter().fold(seed, |m, &l| m.apply(l));
    debug_assert_eq!(matrix.row_sums(), (knot.a, knot.b));
    Ok(AssociatedMatrix {
        matrix,
        word,
        negative_branch: cf.negative,
        continued_fraction: cf,
    })
}

/// The cabling sequence producing the middle tunnel of a torus knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MiddleTunnel {
    pub knot: TorusKnot,
    pub associated: AssociatedMatrix,
    pub steps: Vec<CablingStep>,
}

impl MiddleTunnel {
    pub fn invariants(&self) -> Result<TunnelInvariants> {
        TunnelInvariants::from_steps(&self.steps)
    }

    pub fn descriptor(&self) -> Result<TunnelDescriptor> {
        let invariants = self.invariants()?;
        Ok(TunnelDescriptor {
            steps: self.steps.clone(),
            classification: invariants.classification(),
            invariants,
            knot: AssociatedKnot::Torus(self.knot),
            sigma_slope: None,
            gamma_pair: None,
        })
    }

    pub fn nontrivial_steps(&self) -> impl Iterator<Item = &CablingStep> {
        self.steps.iter().filter(|s| !s.is_trivial())
    }
}

/// Replays the U/L word of `knot` from its seed. Each step that produces a
/// nontrivial knot carries the slope `diag` of the matrix it produces.
pub fn middle_tunnel_sequence(knot: &TorusKnot) -> Result<MiddleTunnel> {
    let associated = associated_matrix(knot)?;
    let mut matrix = associated.seed();
    let mut steps = Vec::with_capacity(associated.word.0.len());
    for &letter in associated.word.letters() {
        matrix = matrix.apply(letter);
        let (a, b) = matrix.row_sums();
        let resulting = TorusKnot::new(a, b)?;
        let slope = (!resulting.is_trivial()).then(|| diag(&matrix).into());
        steps.push(CablingStep {
            kind: match letter {
                Letter::U => StepKind::U,
                Letter::L => StepKind::L,
            },
            replaces: letter.replaces(),
            slope,
            knot: Some(resulting),
            matrix: Some(matrix),
        });
    }
    Ok(MiddleTunnel {
        knot: *knot,
        associated,
        steps,
    })
}
