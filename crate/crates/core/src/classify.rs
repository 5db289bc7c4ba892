//! When two splittings produce the same tunnel, the families of splittings
//! that coincide on a given base, and a brute-force identifier for middle
//! tunnels of torus knots.
//!
//! Two splittings on a nontrivial normalized torus knot `T(p+r,q+s)` with
//! associated matrix `(p q; r s)` give the same tunnel only if
//!
//! * (a) drop-lambda with `n = 1` and lift-lambda with `n = -1`: the middle
//!   tunnel of `T(p+2r,q+2s)`;
//! * (b) drop-rho with `n = -1` and lift-rho with `n = 1`: the middle tunnel
//!   of `T(2p+r,2q+s)`;
//! * (c) the base is `T(2r+1,2)` and the pair is (i) lift-lambda and lift-rho
//!   with the same `n`, (ii) lift-lambda `n = 1` and drop-rho `n = -1`, or
//!   (iii) drop-lambda `n = 1` and lift-rho `n = -1`.
//!
//! Splittings on distinct bases never coincide.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::splitting::{split, SplittingKind, SplittingSpec};
use crate::torus::{associated_matrix, middle_tunnel_sequence, Matrix2, TorusKnot};
use crate::tunnel::SlopeInvariants;

/// Default bound on the first parameter for [`identify_torus_middle`].
pub const DEFAULT_SEARCH_BOUND: i64 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoincidenceCase {
    A,
    B,
    C1,
    C2,
    C3,
}

impl fmt::Display for CoincidenceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoincidenceCase::A => "(a)",
            CoincidenceCase::B => "(b)",
            CoincidenceCase::C1 => "(c)(i)",
            CoincidenceCase::C2 => "(c)(ii)",
            CoincidenceCase::C3 => "(c)(iii)",
        })
    }
}

impl Serialize for CoincidenceCase {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// What a coinciding pair of splittings produces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentifiedTunnel {
    /// The middle tunnel of a torus knot.
    TorusMiddle(TorusKnot),
    /// A semisimple tunnel of a non-torus 3-bridge knot, given by its slopes.
    SemisimpleThreeBridge(SlopeInvariants),
}

impl fmt::Display for IdentifiedTunnel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentifiedTunnel::TorusMiddle(k) => write!(f, "middle tunnel of {k}"),
            IdentifiedTunnel::SemisimpleThreeBridge(s) => {
                write!(f, "semisimple tunnel of a 3-bridge knot with slopes {s}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Distinct,
    /// Both arguments are the same splitting.
    Identical,
    Same {
        case: CoincidenceCase,
        tunnel: IdentifiedTunnel,
    },
}

impl Verdict {
    pub fn same_tunnel(&self) -> bool {
        !matches!(self, Verdict::Distinct)
    }

    pub fn case(&self) -> Option<CoincidenceCase> {
        match self {
            Verdict::Same { case, .. } => Some(*case),
            _ => None,
        }
    }
}

fn check_base(knot: &TorusKnot) -> Result<()> {
    if !knot.is_normalized() {
        return Err(Error::NotNormalized { knot: *knot });
    }
    if knot.is_trivial() {
        return Err(Error::TrivialBase { knot: *knot });
    }
    Ok(())
}

/// Decides whether two splittings produce the same tunnel. Both bases must be
/// normalized and nontrivial.
pub fn coincident(first: &SplittingSpec, second: &SplittingSpec) -> Result<Verdict> {
    check_base(&first.base)?;
    check_base(&second.base)?;
    if first.n == 0 || second.n == 0 {
        return Err(Error::ZeroTwist);
    }
    if first == second {
        return Ok(Verdict::Identical);
    }
    if first.base != second.base {
        return Ok(Verdict::Distinct);
    }
    let m = associated_matrix(&first.base)?.matrix;
    let x = (first.kind, first.n);
    let y = (second.kind, second.n);
    let Some(case) = match_case(&first.base, x, y).or_else(|| match_case(&first.base, y, x)) else {
        return Ok(Verdict::Distinct);
    };
    let tunnel = identify_case(&first.base, &m, case, first)?;
    Ok(Verdict::Same { case, tunnel })
}

fn match_case(
    base: &TorusKnot,
    x: (SplittingKind, i64),
    y: (SplittingKind, i64),
) -> Option<CoincidenceCase> {
    use SplittingKind::*;
    let two_bridge_base = base.b() == 2;
    match (x, y) {
        ((DropLambda, 1), (LiftLambda, -1)) => Some(CoincidenceCase::A),
        ((DropRho, -1), (LiftRho, 1)) => Some(CoincidenceCase::B),
        ((LiftLambda, m), (LiftRho, n)) if two_bridge_base && m == n => Some(CoincidenceCase::C1),
        ((LiftLambda, 1), (DropRho, -1)) if two_bridge_base => Some(CoincidenceCase::C2),
        ((DropLambda, 1), (LiftRho, -1)) if two_bridge_base => Some(CoincidenceCase::C3),
        _ => None,
    }
}

/// On `T(2r+1,2)` the slope `4r+1` belongs to `T(3r+1,3)` and `4r+3` to
/// `T(3r+2,3)`.
fn identify_case(
    base: &TorusKnot,
    m: &Matrix2,
    case: CoincidenceCase,
    member: &SplittingSpec,
) -> Result<IdentifiedTunnel> {
    let r = (base.a() - 1) / 2;
    let knot = match case {
        CoincidenceCase::A => TorusKnot::new(m.p + 2 * m.r, m.q + 2 * m.s)?,
        CoincidenceCase::B => TorusKnot::new(2 * m.p + m.r, 2 * m.q + m.s)?,
        CoincidenceCase::C1 if member.n == 1 => TorusKnot::new(3 * r + 2, 3)?,
        CoincidenceCase::C1 if member.n == -1 => TorusKnot::new(3 * r + 1, 3)?,
        CoincidenceCase::C1 => {
            let slopes = split(member)?.invariants.slopes;
            return Ok(IdentifiedTunnel::SemisimpleThreeBridge(slopes));
        }
        CoincidenceCase::C2 => TorusKnot::new(3 * r + 2, 3)?,
        CoincidenceCase::C3 => TorusKnot::new(3 * r + 1, 3)?,
    };
    Ok(IdentifiedTunnel::TorusMiddle(knot))
}

/// The shape of a family of coinciding splittings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// Drop-lambda `n = 1` and lift-lambda `n = -1`: a U-construction.
    UConstruction,
    /// Drop-rho `n = -1` and lift-rho `n = 1`: an L-construction.
    LConstruction,
    /// Lift-lambda and lift-rho with the same `|n| >= 2` on `T(2r+1,2)`.
    ThreeBridgePair,
    /// Three splittings on `T(2r+1,2)` giving the middle tunnel of `T(3r+1,3)`
    /// or `T(3r+2,3)`.
    TorusTriple,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::UConstruction => "U-construction pair",
            FamilyKind::LConstruction => "L-construction pair",
            FamilyKind::ThreeBridgePair => "3-bridge pair",
            FamilyKind::TorusTriple => "torus triple",
        })
    }
}

/// A maximal set of distinct splittings on one base that produce the same tunnel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingFamily {
    pub kind: FamilyKind,
    pub cases: Vec<CoincidenceCase>,
    pub members: Vec<SplittingSpec>,
    pub slopes: SlopeInvariants,
    pub identification: IdentifiedTunnel,
}

/// All families of coinciding splittings on `base` whose twist counts lie in
/// `twists`. A trivial normalized base yields no families.
pub fn multiple_splittings(
    base: &TorusKnot,
    twists: RangeInclusive<i64>,
) -> Result<Vec<SplittingFamily>> {
    if !base.is_normalized() {
        return Err(Error::NotNormalized { knot: *base });
    }
    if base.is_trivial() {
        return Ok(Vec::new());
    }
    let specs: Vec<SplittingSpec> = SplittingKind::ALL
        .iter()
        .flat_map(|&kind| {
            twists
                .clone()
                .filter(|&n| n != 0)
                .map(move |n| SplittingSpec {
                    base: *base,
                    kind,
                    n,
                })
        })
        .collect();

    // Union the coinciding pairs, remembering the witness verdicts.
    let mut parent: Vec<usize> = (0..specs.len()).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut witnesses = Vec::new();
    for i in 0..specs.len() {
        for j in i + 1..specs.len() {
            if let Verdict::Same { case, tunnel } = coincident(&specs[i], &specs[j])? {
                let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
                witnesses.push((i, case, tunnel));
            }
        }
    }

    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..specs.len() {
        let r = root(&mut parent, i);
        classes.entry(r).or_default().push(i);
    }
    let mut families = Vec::new();
    for (r, members) in classes.into_iter().filter(|(_, m)| m.len() > 1) {
        let mut cases: Vec<CoincidenceCase> = Vec::new();
        let mut identification = None;
        for (i, case, tunnel) in &witnesses {
            if root(&mut parent, *i) == r {
                if !cases.contains(case) {
                    cases.push(*case);
                }
                identification.get_or_insert_with(|| tunnel.clone());
            }
        }
        cases.sort();
        let kind = if members.len() > 2 {
            FamilyKind::TorusTriple
        } else {
            match cases[0] {
                CoincidenceCase::A => FamilyKind::UConstruction,
                CoincidenceCase::B => FamilyKind::LConstruction,
                CoincidenceCase::C1 => FamilyKind::ThreeBridgePair,
                CoincidenceCase::C2 | CoincidenceCase::C3 => FamilyKind::TorusTriple,
            }
        };
        let members: Vec<SplittingSpec> = members.iter().map(|&i| specs[i]).collect();
        families.push(SplittingFamily {
            kind,
            cases,
            slopes: split(&members[0])?.invariants.slopes,
            members,
            identification: identification.expect("a class of size > 1 has a witness"),
        });
    }
    Ok(families)
}

/// Every nontrivial `T(a,b)` with `2 <= |b| < a <= bound` whose middle tunnel
/// has exactly the slope invariants `slopes`.
pub fn torus_middle_matches(slopes: &SlopeInvariants, bound: i64) -> Vec<TorusKnot> {
    if slopes.is_empty() {
        return Vec::new();
    }
    let mut found = Vec::new();
    for a in 3..=bound {
        for b in (1 - a..=a - 1).filter(|b| b.abs() >= 2) {
            let Ok(knot) = TorusKnot::new(a, b) else {
                continue;
            };
            let matches = middle_tunnel_sequence(&knot)
                .and_then(|mt| mt.invariants())
                .is_ok_and(|inv| &inv.slopes == slopes);
            if matches {
                found.push(knot);
            }
        }
    }
    found
}

/// The torus knot whose middle tunnel has slope invariants `slopes`, found by
/// exhaustive search over `2 <= |b| < a <= bound`. Knots are reported with
/// `a > |b|`; the sign of `b` records the mirror image. Returns `None` when no
/// knot, or more than one, matches.
pub fn identify_torus_middle(slopes: &SlopeInvariants, bound: i64) -> Option<TorusKnot> {
    match torus_middle_matches(slopes, bound).as_slice() {
        [only] => Some(*only),
        _ => None,
    }
}
