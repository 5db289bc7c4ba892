//! Text reports.

use std::fmt::Write;

use tunnelcalc::{
    simple_slope, BinaryInvariants, CablingStep, MiddleTunnel, Normalization, SlopeInvariants,
    SplittingFamily, SplittingSpec, TorusKnot, TunnelDescriptor, Verdict,
};

fn steps_table(out: &mut String, steps: &[CablingStep]) {
    let _ = writeln!(
        out,
        "{:>3}  {:<22} {:<8} {:<9} {:<16} {:<10} invariant",
        "#", "step", "replaces", "knot", "matrix", "slope"
    );
    let mut first = true;
    for (i, step) in steps.iter().enumerate() {
        let knot = step
            .knot
            .map(|k| k.to_string())
            .unwrap_or_else(|| "band sum".into());
        let matrix = step
            .matrix
            .map(|m| m.to_string())
            .unwrap_or_else(|| "-".into());
        let (slope, invariant) = match &step.slope {
            None => ("-".to_string(), "trivial".to_string()),
            Some(m) if first => {
                first = false;
                let class = simple_slope(m)
                    .map(|c| c.to_string())
                    .unwrap_or_else(|e| e.to_string());
                (m.to_string(), class)
            }
            Some(m) => (m.to_string(), m.to_string()),
        };
        let _ = writeln!(
            out,
            "{:>3}  {:<22} {:<8} {:<9} {:<16} {:<10} {}",
            i + 1,
            step.kind.to_string(),
            step.replaces.to_string(),
            knot,
            matrix,
            slope,
            invariant
        );
    }
}

fn binary_text(b: &BinaryInvariants) -> String {
    if b.0.is_empty() {
        "(empty)".into()
    } else {
        b.to_string()
    }
}

fn summary(d: &TunnelDescriptor) -> String {
    let class = d
        .classification
        .map(|c| c.to_string())
        .unwrap_or_else(|| "trivial".into());
    format!(
        "slopes {}; binary {}; depth {}; {}",
        d.invariants.slopes,
        binary_text(&d.invariants.binary),
        d.invariants.depth,
        class
    )
}

pub fn middle(mt: &MiddleTunnel, d: &TunnelDescriptor) -> String {
    let am = &mt.associated;
    let mut out = String::new();
    let _ = writeln!(out, "knot: {}", mt.knot);
    let _ = writeln!(out, "continued fraction: {}", am.continued_fraction);
    let seed = if am.negative_branch { "M(1,-1)" } else { "I" };
    let _ = writeln!(
        out,
        "word: {} (seed {seed}; {})",
        am.word.factored(),
        am.word
    );
    let _ = writeln!(out, "associated matrix: {}", am.matrix);
    steps_table(&mut out, &d.steps);
    if d.invariants.slopes.is_empty() {
        out.push_str("trivial knot: no nontrivial cablings");
    } else {
        out.push_str(&summary(d));
    }
    out
}

pub fn split(spec: &SplittingSpec, d: &TunnelDescriptor) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "splitting: {} with n = {} on {}",
        spec.kind, spec.n, spec.base
    );
    if let Some(m) = &d.sigma_slope {
        let _ = writeln!(out, "sigma slope: {m}");
    }
    if let Some(pair) = &d.gamma_pair {
        let _ = writeln!(out, "gamma_n slope pair: {pair}");
    }
    let _ = writeln!(out, "associated knot: {}", d.knot);
    steps_table(&mut out, &d.steps);
    out.push_str(&summary(d));
    out
}

pub fn verdict(v: &Verdict) -> String {
    match v {
        Verdict::Distinct => "DISTINCT".into(),
        Verdict::Identical => "IDENTICAL: both arguments are the same splitting".into(),
        Verdict::Same { case, tunnel } => format!("SAME: case {case}; {}", tunnel),
    }
}

pub fn family(base: &TorusKnot, f: &SplittingFamily) -> String {
    let cases: Vec<String> = f.cases.iter().map(|c| c.to_string()).collect();
    let members: Vec<String> = f
        .members
        .iter()
        .map(|m| format!("{} {}", m.kind, m.n))
        .collect();
    format!(
        "{base}: {} {} {{{}}}; slopes {}; {}",
        f.kind,
        cases.join(","),
        members.join(", "),
        f.slopes,
        f.identification
    )
}

pub fn identify(target: &SlopeInvariants, bound: i64, matches: &[TorusKnot]) -> String {
    match matches {
        [] => format!("no torus knot T(a,b) with a <= {bound} has middle tunnel slopes {target}"),
        [k] => format!("middle tunnel of {k}"),
        many => {
            let list: Vec<String> = many.iter().map(|k| k.to_string()).collect();
            format!("ambiguous: {} knots match: {}", many.len(), list.join(", "))
        }
    }
}

pub fn normalization(input: &TorusKnot, nf: &Normalization) -> String {
    let mut notes = Vec::new();
    if nf.swapped {
        notes.push("parameters swapped");
    }
    if nf.mirrored {
        notes.push("mirror image: every slope invariant of the input is negated");
    }
    if notes.is_empty() {
        format!("{input} (already normalized)")
    } else {
        format!("{} ({})", nf.knot, notes.join("; "))
    }
}
