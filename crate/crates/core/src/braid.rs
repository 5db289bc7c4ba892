//! Braid words over the generators `l`, `m`, `s` describing (1,1)-positions.
//!
//! The text format is a single line of space-separated `generator exponent`
//! pairs, e.g. `l -1 m 1 l -2 m 1`. Words are kept freely reduced: adjacent
//! powers of the same generator are merged and zero powers dropped. No braid
//! relations are applied.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::splitting::{band_sum, SplittingKind, SplittingSpec};
use crate::torus::{associated_matrix, TorusKnot};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    L,
    M,
    S,
}

impl Generator {
    fn symbol(self) -> &'static str {
        match self {
            Generator::L => "l",
            Generator::M => "m",
            Generator::S => "s",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Token {
    pub generator: Generator,
    pub exponent: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    tokens: Vec<Token>,
}

impl BraidWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_tokens(tokens: impl IntoIterator<Item = (Generator, i64)>) -> Self {
        let mut w = Self::new();
        for (generator, exponent) in tokens {
            w.push(generator, exponent);
        }
        w
    }

    /// Appends `generator^exponent`, merging with the last token.
    pub fn push(&mut self, generator: Generator, exponent: i64) {
        if exponent == 0 {
            return;
        }
        match self.tokens.last_mut() {
            Some(last) if last.generator == generator => {
                last.exponent += exponent;
                if last.exponent == 0 {
                    self.tokens.pop();
                }
            }
            _ => self.tokens.push(Token {
                generator,
                exponent,
            }),
        }
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut w = self.clone();
        for t in &other.tokens {
            w.push(t.generator, t.exponent);
        }
        w
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            tokens: self
                .tokens
                .iter()
                .rev()
                .map(|t| Token {
                    generator: t.generator,
                    exponent: -t.exponent,
                })
                .collect(),
        }
    }

    /// `s^n`; empty for `n = 0`.
    pub fn twist(n: i64) -> BraidWord {
        BraidWord::from_tokens([(Generator::S, n)])
    }

    pub fn exponent_sum(&self, generator: Generator) -> i64 {
        self.tokens
            .iter()
            .filter(|t| t.generator == generator)
            .map(|t| t.exponent)
            .sum()
    }

    fn write_tokens(&self, out: &mut Vec<String>) {
        for t in &self.tokens {
            out.push(format!("{} {}", t.generator, t.exponent));
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        self.write_tokens(&mut parts);
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.split(' ').collect();
        if s.is_empty() {
            return Ok(BraidWord::new());
        }
        if !fields.len().is_multiple_of(2) {
            return Err(Error::BraidParse {
                position: fields.len(),
                reason: "generator without exponent".into(),
            });
        }
        let mut word = BraidWord::new();
        for (i, pair) in fields.chunks(2).enumerate() {
            let generator = match pair[0] {
                "l" => Generator::L,
                "m" => Generator::M,
                "s" => Generator::S,
                other => {
                    return Err(Error::BraidParse {
                        position: 2 * i,
                        reason: format!("expected l, m or s, found `{other}`"),
                    })
                }
            };
            let exponent: i64 = pair[1].parse().map_err(|_| Error::BraidParse {
                position: 2 * i + 1,
                reason: format!("expected an integer exponent, found `{}`", pair[1]),
            })?;
            word.push(generator, exponent);
        }
        Ok(word)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `omega(a,b)` for the torus knot `T(a,b)`, `a >= b >= 1` coprime: the
/// blocks `l^{-c_i} m` for `i = 1..b`, where `c_i = floor(i a/b) - floor((i-1) a/b)`.
pub fn torus_braid_word(a: i64, b: i64) -> Result<BraidWord> {
    if b < 1 || a < b {
        return Err(Error::BraidParameters { a, b });
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    let mut w = BraidWord::new();
    for i in 1..=b {
        let c = Integer::div_floor(&(i * a), &b) - Integer::div_floor(&((i - 1) * a), &b);
        w.push(Generator::L, -c);
        w.push(Generator::M, 1);
    }
    Ok(w)
}

fn knot_word(k: &TorusKnot) -> Result<BraidWord> {
    torus_braid_word(k.a(), k.b())
}

/// The (1,1)-position of a splitting: the upper knot's word, the twist
/// generator `s^n`, and the lower knot's word.
///
/// As a group element the position is `omega(K_U) s^n omega(K_L)^{-1}`
/// ([`PositionWord::word`], rendered by [`PositionWord::formula_text`]). The
/// `Display` form is the input string taken by external (1,1)-position software, which
/// lists `omega(K_L)` itself after the twist token, e.g.
/// `l -1 m 1 l -1 m 1 l -2 m 1 s 1 l -1 m 1 l -2 m 1`. Both forms always
/// print the twist token, including `s 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositionWord {
    pub upper: BraidWord,
    pub twist: i64,
    pub lower: BraidWord,
    /// Only the drop-rho template has been checked against reference output.
    pub unverified: bool,
}

impl PositionWord {
    /// The freely reduced product `omega(K_U) s^n omega(K_L)^{-1}`.
    pub fn word(&self) -> BraidWord {
        self.upper
            .concat(&BraidWord::twist(self.twist))
            .concat(&self.lower.inverse())
    }

    /// `omega(K_U) s^n omega(K_L)^{-1}` token by token, without reduction.
    pub fn formula_text(&self) -> String {
        self.render(&self.lower.inverse())
    }

    fn render(&self, tail: &BraidWord) -> String {
        let mut parts = Vec::new();
        self.upper.write_tokens(&mut parts);
        parts.push(format!("s {}", self.twist));
        tail.write_tokens(&mut parts);
        parts.join(" ")
    }
}

impl fmt::Display for PositionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&self.lower))
    }
}

/// Position word for a splitting on a nontrivial normalized base. `n = 0`
/// is allowed and describes the untwisted band.
pub fn position_word(spec: &SplittingSpec) -> Result<PositionWord> {
    let base = spec.base;
    if !base.is_normalized() {
        return Err(Error::NotNormalized { knot: base });
    }
    if base.is_trivial() {
        return Err(Error::TrivialBase { knot: base });
    }
    let matrix = associated_matrix(&base)?.matrix;
    let band = band_sum(spec, &matrix)?;
    Ok(PositionWord {
        upper: knot_word(&band.upper)?,
        twist: spec.n,
        lower: knot_word(&band.lower)?,
        unverified: spec.kind != SplittingKind::DropRho,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn torus_words() {
        assert_eq!(
            torus_braid_word(4, 3).unwrap().to_string(),
            "l -1 m 1 l -1 m 1 l -2 m 1"
        );
        assert_eq!(
            torus_braid_word(3, 2).unwrap().to_string(),
            "l -1 m 1 l -2 m 1"
        );
        assert_eq!(torus_braid_word(1, 1).unwrap().to_string(), "l -1 m 1");
        assert!(matches!(
            torus_braid_word(4, 2),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            torus_braid_word(2, 3),
            Err(Error::BraidParameters { .. })
        ));
    }

    #[test]
    fn word_algebra() {
        let w32 = torus_braid_word(3, 2).unwrap();
        let w43 = torus_braid_word(4, 3).unwrap();
        assert_eq!(w32.inverse().to_string(), "m -1 l 2 m -1 l 1");
        assert_eq!(
            w43.concat(&w32).to_string(),
            "l -1 m 1 l -1 m 1 l -2 m 1 l -1 m 1 l -2 m 1"
        );
        assert!(w43.concat(&w43.inverse()).is_empty());
        assert!(BraidWord::twist(0).is_empty());
        assert_eq!(BraidWord::twist(-2).to_string(), "s -2");
    }

    #[test]
    fn seam_merging() {
        let a = w("l -1 m 1");
        let b = w("m 2 l 1");
        assert_eq!(a.concat(&b).to_string(), "l -1 m 3 l 1");
        assert_eq!(w("m 1").concat(&w("m -1")), BraidWord::new());
    }

    #[test]
    fn parsing() {
        assert_eq!(w("l -2 m 1").tokens().len(), 2);
        assert_eq!(w("l 0 m 1").to_string(), "m 1");
        assert!(w("").is_empty());
        let err = "l -1 x 1".parse::<BraidWord>().unwrap_err();
        assert_eq!(
            err,
            Error::BraidParse {
                position: 2,
                reason: "expected l, m or s, found `x`".into()
            }
        );
        assert!(matches!(
            "l -1 m".parse::<BraidWord>(),
            Err(Error::BraidParse { .. })
        ));
        assert!(matches!(
            "l one".parse::<BraidWord>(),
            Err(Error::BraidParse { position: 1, .. })
        ));
        assert!("l  -1".parse::<BraidWord>().is_err());
    }

    #[test]
    fn drop_rho_position() {
        let base = TorusKnot::new(4, 3).unwrap();
        let spec = |n| SplittingSpec {
            base,
            kind: SplittingKind::DropRho,
            n,
        };
        let pw = position_word(&spec(1)).unwrap();
        assert!(!pw.unverified);
        assert_eq!(
            pw.to_string(),
            "l -1 m 1 l -1 m 1 l -2 m 1 s 1 l -1 m 1 l -2 m 1"
        );
        let untwisted = position_word(&spec(0)).unwrap();
        assert_eq!(
            untwisted.to_string(),
            "l -1 m 1 l -1 m 1 l -2 m 1 s 0 l -1 m 1 l -2 m 1"
        );
        assert_eq!(
            untwisted.formula_text(),
            "l -1 m 1 l -1 m 1 l -2 m 1 s 0 m -1 l 2 m -1 l 1"
        );
        // untwisted, the position reduces to a word for K_lambda = T(1,1)
        assert_eq!(untwisted.word().exponent_sum(Generator::L), -1);
        assert_eq!(untwisted.word().exponent_sum(Generator::M), 1);
        assert_eq!(
            position_word(&spec(-1)).unwrap().to_string(),
            "l -1 m 1 l -1 m 1 l -2 m 1 s -1 l -1 m 1 l -2 m 1"
        );
    }

    #[test]
    fn other_kinds_are_flagged() {
        let base = TorusKnot::new(5, 3).unwrap();
        for kind in [
            SplittingKind::DropLambda,
            SplittingKind::LiftLambda,
            SplittingKind::LiftRho,
        ] {
            let pw = position_word(&SplittingSpec { base, kind, n: 2 }).unwrap();
            assert!(pw.unverified);
        }
        let bad = SplittingSpec {
            base: TorusKnot::new(3, 4).unwrap(),
            kind: SplittingKind::DropRho,
            n: 1,
        };
        assert!(matches!(
            position_word(&bad),
            Err(Error::NotNormalized { .. })
        ));
    }

    fn word() -> impl Strategy<Value = BraidWord> {
        let g = prop_oneof![Just(Generator::L), Just(Generator::M), Just(Generator::S)];
        prop::collection::vec((g, -5i64..=5), 0..20).prop_map(BraidWord::from_tokens)
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(x in word()) {
            let text = x.to_string();
            prop_assert_eq!(text.parse::<BraidWord>().unwrap(), x.clone());
            for pair in x.tokens().windows(2) {
                prop_assert_ne!(pair[0].generator, pair[1].generator);
            }
            prop_assert!(x.tokens().iter().all(|t| t.exponent != 0));
        }

        #[test]
        fn exponent_sums_are_homomorphic(x in word(), y in word()) {
            for g in [Generator::L, Generator::M, Generator::S] {
                prop_assert_eq!(x.concat(&y).exponent_sum(g), x.exponent_sum(g) + y.exponent_sum(g));
                prop_assert_eq!(x.inverse().exponent_sum(g), -x.exponent_sum(g));
            }
        }
    }
}
