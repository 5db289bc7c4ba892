//! The four splitting constructions on the middle tunnel of a torus knot.
//!
//! A splitting separates a copy of `K_rho = T(p,q)` or `K_lambda = T(r,s)`
//! from `K_tau = T(p+r,q+s)` onto a second torus level (below for drop, above
//! for lift) and rejoins the two levels by a band with `n` half-twists. The
//! new tunnel disk `gamma_n` is a cabling of the middle tunnel of `K_tau`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::slopes::{Rational, SlopePair};
use crate::torus::{associated_matrix, middle_tunnel_sequence, Matrix2, TorusKnot};
use crate::tunnel::{
    AssociatedKnot, CablingStep, Disk, StepKind, TunnelDescriptor, TunnelInvariants,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplittingKind {
    DropLambda,
    LiftLambda,
    DropRho,
    LiftRho,
}

impl SplittingKind {
    pub const ALL: [SplittingKind; 4] = [
        SplittingKind::DropLambda,
        SplittingKind::LiftLambda,
        SplittingKind::DropRho,
        SplittingKind::LiftRho,
    ];

    /// Lambda splittings replace rho; rho splittings replace lambda.
    pub fn replaces(self) -> Disk {
        match self {
            SplittingKind::DropLambda | SplittingKind::LiftLambda => Disk::Rho,
            SplittingKind::DropRho | SplittingKind::LiftRho => Disk::Lambda,
        }
    }

    pub fn is_drop(self) -> bool {
        matches!(self, SplittingKind::DropLambda | SplittingKind::DropRho)
    }

    /// The principal-pair disk whose knot is split off.
    pub fn split_disk(self) -> Disk {
        match self {
            SplittingKind::DropLambda | SplittingKind::LiftLambda => Disk::Lambda,
            SplittingKind::DropRho | SplittingKind::LiftRho => Disk::Rho,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SplittingKind::DropLambda => "drop-lambda",
            SplittingKind::LiftLambda => "lift-lambda",
            SplittingKind::DropRho => "drop-rho",
            SplittingKind::LiftRho => "lift-rho",
        }
    }
}

impl fmt::Display for SplittingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SplittingKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        Ok(match key.as_str() {
            "drop-lambda" | "drop-λ" | "droplambda" => SplittingKind::DropLambda,
            "lift-lambda" | "lift-λ" | "liftlambda" => SplittingKind::LiftLambda,
            "drop-rho" | "drop-ρ" | "droprho" => SplittingKind::DropRho,
            "lift-rho" | "lift-ρ" | "liftrho" => SplittingKind::LiftRho,
            _ => {
                return Err(format!(
                    "unknown splitting kind `{s}` (expected drop-lambda, lift-lambda, drop-rho or lift-rho)"
                ))
            }
        })
    }
}

impl Serialize for SplittingKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// A splitting of kind `kind` on the middle tunnel of `base`, using `gamma_n`.
/// Positive `n` counts right-handed half-twists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SplittingSpec {
    pub base: TorusKnot,
    pub kind: SplittingKind,
    pub n: i64,
}

impl SplittingSpec {
    pub fn new(base: TorusKnot, kind: SplittingKind, n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroTwist);
        }
        Ok(Self { base, kind, n })
    }
}

impl fmt::Display for SplittingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} n={}", self.base, self.kind, self.n)
    }
}

/// A class `(l, m)` in `H_1(T x I)` with respect to the basis {longitude, meridian}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyClass {
    pub longitude: i64,
    pub meridian: i64,
}

impl From<&TorusKnot> for HomologyClass {
    fn from(k: &TorusKnot) -> Self {
        Self {
            longitude: k.a(),
            meridian: k.b(),
        }
    }
}

/// `Lk(K_U, K_L) = m_U * l_L` for a knot `K_U` above `K_L` in `T x I`.
pub fn linking_number(upper: &HomologyClass, lower: &HomologyClass) -> BigInt {
    BigInt::from(upper.meridian) * lower.longitude
}

/// Two torus knots on concentric levels joined by a band with `half_twists`
/// half-twists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BandSum {
    pub upper: TorusKnot,
    pub lower: TorusKnot,
    pub half_twists: i64,
}

impl fmt::Display for BandSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "band sum of {} (upper) and {} (lower) with {} half-twist(s)",
            self.upper, self.lower, self.half_twists
        )
    }
}

/// The associated knot of the splitting, with knots read from the rows of
/// the base's associated matrix so that their homology classes keep sign.
pub fn band_sum(spec: &SplittingSpec, matrix: &Matrix2) -> Result<BandSum> {
    let (a, b) = matrix.row_sums();
    let tau = TorusKnot::new(a, b)?;
    let split_off = match spec.kind.split_disk() {
        Disk::Rho => matrix.rho_knot()?,
        Disk::Lambda => matrix.lambda_knot()?,
    };
    let (upper, lower) = if spec.kind.is_drop() {
        (tau, split_off)
    } else {
        (split_off, tau)
    };
    Ok(BandSum {
        upper,
        lower,
        half_twists: spec.n,
    })
}

fn sigma_slope_from_matrix(kind: SplittingKind, m: &Matrix2) -> BigInt {
    let (pr, qs) = m.row_sums();
    let two = BigInt::from(2);
    match kind {
        SplittingKind::DropLambda => two * m.r * qs,
        SplittingKind::LiftLambda => two * m.s * pr,
        SplittingKind::DropRho => two * m.p * qs,
        SplittingKind::LiftRho => two * m.q * pr,
    }
}

/// Slope of the drop or lift disk sigma: `2r(q+s)`, `2s(p+r)`, `2p(q+s)` or
/// `2q(p+r)` for drop-lambda, lift-lambda, drop-rho and lift-rho.
pub fn sigma_slope(spec: &SplittingSpec) -> Result<BigInt> {
    let m = associated_matrix(&spec.base)?;
    Ok(sigma_slope_from_matrix(spec.kind, &m.matrix))
}

/// Slope `m_sigma + 1/n` and slope pair `[n, 1 + n m_sigma]` of `gamma_n`.
pub fn gamma_slope(m_sigma: &BigInt, n: i64) -> Result<(Rational, SlopePair)> {
    if n == 0 {
        return Err(Error::ZeroTwist);
    }
    let pair = SlopePair::new(n, BigInt::from(1) + m_sigma * n);
    let slope = Rational::integer(m_sigma.clone()) + Rational::new(1, n)?;
    Ok((slope, pair))
}

/// Full cabling sequence and invariants of the tunnel produced by `spec`.
///
/// The steps are those of the base's middle tunnel followed by one splitting
/// step. Normalization is not applied: the caller decides, since reflecting
/// the base negates every slope.
pub fn split(spec: &SplittingSpec) -> Result<TunnelDescriptor> {
    if spec.n == 0 {
        return Err(Error::ZeroTwist);
    }
    let middle = middle_tunnel_sequence(&spec.base)?;
    let matrix = middle.associated.matrix;
    let m_sigma = sigma_slope_from_matrix(spec.kind, &matrix);
    let (slope, pair) = gamma_slope(&m_sigma, spec.n)?;

    let mut steps = middle.steps;
    steps.push(CablingStep {
        kind: StepKind::Split(*spec),
        replaces: spec.kind.replaces(),
        slope: Some(slope),
        knot: None,
        matrix: None,
    });
    let invariants = TunnelInvariants::from_steps(&steps)?;
    Ok(TunnelDescriptor {
        classification: invariants.classification(),
        invariants,
        knot: AssociatedKnot::BandSum(band_sum(spec, &matrix)?),
        sigma_slope: Some(m_sigma),
        gamma_pair: Some(pair),
        steps,
    })
}
