//! Cabling steps and the invariants of the tunnel they build.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::slopes::{simple_slope, Rational, SlopeClass, SlopePair};
use crate::splitting::{BandSum, SplittingSpec};
use crate::torus::{Matrix2, TorusKnot};

/// The disk of the principal pair that a cabling construction replaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Disk {
    #[serde(rename = "rho")]
    Rho,
    #[serde(rename = "lambda")]
    Lambda,
}

impl fmt::Display for Disk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Disk::Rho => "rho",
            Disk::Lambda => "lambda",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum StepKind {
    U,
    L,
    Split(SplittingSpec),
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::U => f.write_str("U"),
            StepKind::L => f.write_str("L"),
            StepKind::Split(spec) => write!(f, "{}(n={})", spec.kind, spec.n),
        }
    }
}

/// One cabling construction. `slope` is `None` exactly for trivial steps,
/// which produce an unknot and carry no invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CablingStep {
    pub kind: StepKind,
    pub replaces: Disk,
    pub slope: Option<Rational>,
    /// The torus knot produced; absent for splittings, which produce band sums.
    pub knot: Option<TorusKnot>,
    pub matrix: Option<Matrix2>,
}

impl CablingStep {
    pub fn is_trivial(&self) -> bool {
        self.slope.is_none()
    }
}

/// The slope invariants of a tunnel: the simple slope of the first nontrivial
/// cabling followed by the slopes of the rest.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SlopeInvariants {
    pub simple: Option<SlopeClass>,
    pub rest: Vec<Rational>,
}

impl SlopeInvariants {
    pub fn from_slopes(slopes: &[Rational]) -> Result<Self> {
        match slopes.split_first() {
            None => Ok(Self::default()),
            Some((first, rest)) => Ok(Self {
                simple: Some(simple_slope(first)?),
                rest: rest.to_vec(),
            }),
        }
    }

    pub fn len(&self) -> usize {
        self.simple.iter().count() + self.rest.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simple.is_none()
    }

    /// Rendered entries, e.g. `["[1/3]", "5", "19"]`.
    pub fn entries(&self) -> Vec<String> {
        self.simple
            .iter()
            .map(|c| c.to_string())
            .chain(self.rest.iter().map(|r| r.to_string()))
            .collect()
    }
}

impl fmt::Display for SlopeInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.entries().join(", "))
    }
}

impl FromStr for SlopeInvariants {
    type Err = Error;

    /// Parses `[1/3], 5, 19`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(',').map(str::trim).filter(|p| !p.is_empty());
        let Some(first) = parts.next() else {
            return Ok(Self::default());
        };
        Ok(Self {
            simple: Some(first.parse()?),
            rest: parts.map(str::parse).collect::<Result<_>>()?,
        })
    }
}

impl Serialize for SlopeInvariants {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries())
    }
}

/// Binary invariants, one bit per nontrivial cabling after the second.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BinaryInvariants(pub Vec<bool>);

impl BinaryInvariants {
    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|b| !b)
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }
}

impl fmt::Display for BinaryInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &bit in &self.0 {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for BinaryInvariants {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Simple,
    Semisimple,
    Regular,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Simple => "simple",
            Classification::Semisimple => "semisimple",
            Classification::Regular => "regular",
        })
    }
}

/// The invariants of a tunnel read off its cabling sequence.
///
/// With nontrivial cablings `c_1, ..., c_N`, bit `i` (for `i = 2..N-1`) is 1
/// iff `c_{i+1}` replaces a different disk than `c_i`. The first cabling's
/// label carries no direction and never contributes. Depth counts the runs of
/// equal labels among `c_2, ..., c_N`, which is one more than the number of
/// 1 bits.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct TunnelInvariants {
    pub slopes: SlopeInvariants,
    pub binary: BinaryInvariants,
    pub depth: u32,
}

impl TunnelInvariants {
    pub fn from_steps(steps: &[CablingStep]) -> Result<Self> {
        let (slopes, labels): (Vec<Rational>, Vec<Disk>) = steps
            .iter()
            .filter_map(|s| s.slope.clone().map(|m| (m, s.replaces)))
            .unzip();
        let bits = labels
            .iter()
            .skip(1)
            .zip(labels.iter().skip(2))
            .map(|(prev, next)| prev != next)
            .collect();
        let binary = BinaryInvariants(bits);
        let depth = if labels.is_empty() {
            0
        } else {
            1 + binary.ones() as u32
        };
        Ok(Self {
            slopes: SlopeInvariants::from_slopes(&slopes)?,
            binary,
            depth,
        })
    }

    /// `None` for the empty sequence (no nontrivial cabling at all).
    pub fn classification(&self) -> Option<Classification> {
        match self.slopes.len() {
            0 => None,
            1 => Some(Classification::Simple),
            _ if self.binary.is_trivial() => Some(Classification::Semisimple),
            _ => Some(Classification::Regular),
        }
    }
}

/// The knot carrying a tunnel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AssociatedKnot {
    Torus(TorusKnot),
    BandSum(BandSum),
}

impl fmt::Display for AssociatedKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AssociatedKnot::Torus(k) => write!(f, "torus knot {k}"),
            AssociatedKnot::BandSum(b) => b.fmt(f),
        }
    }
}

/// A tunnel together with the knot it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TunnelDescriptor {
    pub steps: Vec<CablingStep>,
    pub invariants: TunnelInvariants,
    pub classification: Option<Classification>,
    pub knot: AssociatedKnot,
    /// Slope of the drop or lift disk, for splittings.
    #[serde(serialize_with = "ser_opt_bigint")]
    pub sigma_slope: Option<BigInt>,
    /// Slope pair `[n, 1 + n m_sigma]` of the final disk, for splittings.
    pub gamma_pair: Option<SlopePair>,
}

fn ser_opt_bigint<S: Serializer>(n: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.collect_str(n),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn step(replaces: Disk, slope: Option<i64>) -> CablingStep {
        CablingStep {
            kind: StepKind::U,
            replaces,
            slope: slope.map(Rational::integer),
            knot: None,
            matrix: None,
        }
    }

    #[test]
    fn first_label_is_ignored() {
        use Disk::*;
        let a = TunnelInvariants::from_steps(&[step(Rho, Some(3)), step(Rho, Some(7))]).unwrap();
        let b = TunnelInvariants::from_steps(&[step(Lambda, Some(3)), step(Rho, Some(7))]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.depth, 1);
        assert_eq!(a.classification(), Some(Classification::Semisimple));
    }

    #[test]
    fn one_turn_gives_depth_two() {
        use Disk::*;
        let inv = TunnelInvariants::from_steps(&[
            step(Rho, None),
            step(Lambda, Some(-3)),
            step(Lambda, Some(-5)),
            step(Rho, Some(-19)),
        ])
        .unwrap();
        assert_eq!(inv.slopes.to_string(), "[2/3], -5, -19");
        assert_eq!(inv.binary.to_string(), "1");
        assert_eq!(inv.depth, 2);
        assert_eq!(inv.classification(), Some(Classification::Regular));
    }

    #[test]
    fn empty_and_single() {
        let inv = TunnelInvariants::from_steps(&[step(Disk::Rho, None)]).unwrap();
        assert_eq!((inv.depth, inv.classification()), (0, None));
        let inv = TunnelInvariants::from_steps(&[step(Disk::Rho, Some(3))]).unwrap();
        assert_eq!(
            (inv.depth, inv.classification()),
            (1, Some(Classification::Simple))
        );
        assert_eq!(inv.binary.to_string(), "");
    }

    #[test]
    fn parse_slope_sequence() {
        let s: SlopeInvariants = "[1/3], 5, 19".parse().unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_string(), "[1/3], 5, 19");
        assert!("".parse::<SlopeInvariants>().unwrap().is_empty());
        assert!("1/3, 5".parse::<SlopeInvariants>().is_err());
    }
}
