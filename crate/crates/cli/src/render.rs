//! Text and JSON emission. Both formats carry the same numbers: rationals as
//! canonical `"p/q"` strings, polynomials as ascending coefficient lists.

use std::fmt::Write;

use clap::ValueEnum;
use koornwinder::diffeq::{CoeffSet, FiniteOrder};
use koornwinder::rational::{self, Rational};
use koornwinder::{Poly, VerifyReport};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn r(v: &Rational) -> String {
    rational::format(v)
}

fn list(p: &Poly) -> String {
    format!("[{}]", p.to_strings().join(", "))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn coeffs(set: &CoeffSet, a0: &[Rational], format: Format) -> String {
    let rows: Vec<(usize, Poly, Poly, Poly)> = (1..=set.max_i())
        .map(|i| {
            (
                i,
                set.b(i).cloned().unwrap_or_default(),
                set.c(i).cloned().unwrap_or_default(),
                set.a(i).unwrap_or_default(),
            )
        })
        .collect();
    match format {
        Format::Json => pretty(&json!({
            "alpha": r(set.alpha()),
            "a01": r(set.a0_1()),
            "a0": a0.iter().enumerate()
                .map(|(n, v)| json!({"n": n, "value": r(v)}))
                .collect::<Vec<_>>(),
            "coeffs": rows.iter()
                .map(|(i, b, c, a)| json!({
                    "i": i,
                    "b": b.to_strings(),
                    "c": c.to_strings(),
                    "a": a.to_strings(),
                }))
                .collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "alpha = {}", r(set.alpha()));
            let _ = writeln!(out, "a01 = {}", r(set.a0_1()));
            for (n, v) in a0.iter().enumerate() {
                let _ = writeln!(out, "a0[{n}] = {}", r(v));
            }
            for (i, b, c, a) in &rows {
                let _ = writeln!(out, "b[{i}] = {}", list(b));
                let _ = writeln!(out, "c[{i}] = {}", list(c));
                let _ = writeln!(out, "a[{i}] = {}", list(a));
            }
            out
        }
    }
}

pub fn reports(reports: &[VerifyReport], format: Format) -> String {
    let passed = reports.iter().all(VerifyReport::passed);
    match format {
        Format::Json => pretty(&json!({
            "passed": passed,
            "suites": reports.iter().map(|rep| json!({
                "suite": rep.suite,
                "checks": rep.checks,
                "failures": rep.failures.len(),
                "first_failure": rep.first_failure().map(|f| json!({
                    "case": f.case,
                    "residual": f.residual.to_strings(),
                })),
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            let mut total = 0;
            let mut failed = 0;
            for rep in reports {
                total += rep.checks;
                failed += rep.failures.len();
                let status = if rep.passed() { "ok" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{status:4} {}: {}/{} passed",
                    rep.suite,
                    rep.checks - rep.failures.len(),
                    rep.checks
                );
                if let Some(f) = rep.first_failure() {
                    let _ = writeln!(out, "     first counterexample: {}", f.case);
                    let _ = writeln!(out, "     residual = {}", list(&f.residual));
                }
            }
            let _ = writeln!(out, "total: {}/{} passed", total - failed, total);
            out
        }
    }
}

pub fn ode(alpha: &Rational, m: &Rational, n: usize, a01: &Rational, residual: &Poly, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "alpha": r(alpha),
            "m": r(m),
            "n": n,
            "a01": r(a01),
            "passed": residual.is_zero(),
            "residual": residual.to_strings(),
        })),
        Format::Text => {
            if residual.is_zero() {
                "residual = 0\n".to_string()
            } else {
                format!("residual = {}\n", list(residual))
            }
        }
    }
}

pub fn order(alpha: &Rational, fo: &FiniteOrder, probe: usize, format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "alpha": r(alpha),
            "order": fo.order,
            "probe": probe,
            "leading": fo.leading.to_strings(),
        })),
        Format::Text => format!(
            "order {}\nleading = {}\nleading(x) = {}\n",
            fo.order,
            list(&fo.leading),
            fo.leading
        ),
    }
}

pub struct EvalDoc<'a> {
    pub alpha: &'a Rational,
    pub m: &'a Rational,
    pub n: usize,
    pub c0: &'a Rational,
    pub c1: &'a Rational,
    pub classical: &'a Poly,
    pub general: &'a Poly,
    pub x: Option<&'a Rational>,
}

pub fn eval(doc: &EvalDoc<'_>, format: Format) -> String {
    let at = doc.x.map(|x| (r(x), r(&doc.classical.eval(x)), r(&doc.general.eval(x))));
    match format {
        Format::Json => pretty(&json!({
            "alpha": r(doc.alpha),
            "m": r(doc.m),
            "n": doc.n,
            "c0": r(doc.c0),
            "c1": r(doc.c1),
            "classical": doc.classical.to_strings(),
            "generalized": doc.general.to_strings(),
            "at": at.as_ref().map(|(x, p, g)| json!({"x": x, "classical": p, "generalized": g})),
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "c0 = {}", r(doc.c0));
            let _ = writeln!(out, "c1 = {}", r(doc.c1));
            let _ = writeln!(out, "classical = {}", list(doc.classical));
            let _ = writeln!(out, "generalized = {}", list(doc.general));
            if let Some((x, p, g)) = at {
                let _ = writeln!(out, "classical({x}) = {p}");
                let _ = writeln!(out, "generalized({x}) = {g}");
            }
            out
        }
    }
}
