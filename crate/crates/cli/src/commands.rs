use std::fs::File;
use std::io::BufWriter;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use msl_core::arith::SurdSum;
use msl_core::checks::{check_names, find_check, format_line, registry, CheckConfig, CheckOutcome};
use msl_core::constants::{compute_constant, ConstantName};
use msl_core::dimension::{bounds_from_scales, interval_scales, write_scales_csv, GaussCantorSpec};
use msl_core::lemmas::{forced_window_search, SearchOptions, WindowConstraint};
use msl_core::spectra::{lagrange_value, lambda_expression, markov_value, SpectrumValue};
use msl_core::words::{parse_compact, BiInfiniteSequence};

use crate::report::Outcome;
use crate::{ConstantsCmd, DimensionCmd, GlobalArgs, SpectraCmd, VerifyCmd};

/// Surviving windows listed in full before the report truncates.
const SURVIVOR_LISTING: usize = 50;

fn terms(x: &SurdSum) -> Value {
    x.terms()
        .iter()
        .map(|t| {
            json!({
                "p": t.p().to_string(),
                "q": t.q().to_string(),
                "d": t.radicand().to_string(),
                "r": t.r().to_string(),
            })
        })
        .collect()
}

fn value_json(v: &SpectrumValue, digits: usize) -> Value {
    json!({
        "value_decimal": v.decimal(digits),
        "exact": { "terms": terms(&v.value), "display": v.value.to_string() },
    })
}

pub fn constants(cmd: ConstantsCmd, g: &GlobalArgs) -> Result<Outcome> {
    let ConstantsCmd::Show { name } = cmd;
    let ids: Vec<&str> = if name == "all" {
        ConstantName::ALL.iter().map(|c| c.id()).collect()
    } else {
        vec![name.as_str()]
    };
    let mut lines = Vec::new();
    let mut results = Vec::new();
    for id in ids {
        let c = compute_constant(id, g.digits)?;
        lines.push(format!("{} = {}", c.name.id(), c.decimal));
        lines.push(format!("  {}", c.definition));
        results.push(json!({
            "name": c.name.id(),
            "value_decimal": c.decimal,
            "definition": c.definition,
            "exact": { "terms": terms(&c.value) },
        }));
    }
    Ok(Outcome {
        inputs: json!({ "name": name, "digits": g.digits }),
        results: Value::Array(results),
        lines,
        pass: None,
        certified: true,
    })
}

pub fn spectra(cmd: SpectraCmd, g: &GlobalArgs) -> Result<Outcome> {
    let d = g.digits;
    match cmd {
        SpectraCmd::Lambda { seq, pos } => {
            let s = BiInfiniteSequence::parse(&seq)?;
            let e = lambda_expression(&s, pos);
            let v = SpectrumValue::new(e.value.clone());
            let mut results = value_json(&v, d);
            results["position"] = json!(pos);
            results["expression"] = json!(e.to_string());
            Ok(Outcome {
                inputs: json!({ "seq": seq, "pos": pos, "digits": d }),
                lines: vec![format!("λ_{pos} = {}", v.decimal(d)), format!("  = {e}")],
                results,
                pass: None,
                certified: true,
            })
        }
        SpectraCmd::Markov { seq } => {
            let s = BiInfiniteSequence::parse(&seq)?;
            let m = markov_value(&s);
            let c = &m.certificate;
            let verified = c.verify(&s, &m.value.value);
            let at = match (c.attaining_position, c.attained_in_limit) {
                (Some(p), _) => format!("attained at position {p}"),
                (None, true) => "approached in the limit, not attained".to_string(),
                (None, false) => "not attained".to_string(),
            };
            let mut results = value_json(&m.value, d);
            results["certificate"] = json!({
                "attaining_position": c.attaining_position,
                "attained_in_limit": c.attained_in_limit,
                "core_window": [c.core_window.0, c.core_window.1],
                "tail_bound": msl_core::arith::truncate_decimal(&c.tail_bound, 30),
                "periodic_phase_values": c.periodic_phase_values.iter().map(|v| v.to_decimal(d)).collect::<Vec<_>>(),
                "tail_classes": c.classes.len(),
                "verified": verified,
            });
            Ok(Outcome {
                inputs: json!({ "seq": seq, "digits": d }),
                lines: vec![
                    format!("m = {}", m.value.decimal(d)),
                    format!("  {at}; scanned [{}, {}]", c.core_window.0, c.core_window.1),
                    format!("{} certificate replay", if verified { "PASS" } else { "FAIL" }),
                ],
                results,
                pass: Some(verified),
                certified: verified,
            })
        }
        SpectraCmd::Lagrange { word } => {
            let w = parse_compact(&word)?;
            let (v, phase) = lagrange_value(&w)?;
            let mut results = value_json(&v, d);
            results["phase"] = json!(phase);
            Ok(Outcome {
                inputs: json!({ "word": word, "digits": d }),
                lines: vec![format!("ℓ = {}", v.decimal(d)), format!("  attained at phase {phase}")],
                results,
                pass: None,
                certified: true,
            })
        }
    }
}

fn config(g: &GlobalArgs) -> CheckConfig {
    CheckConfig {
        digits: g.digits,
        closed_form_digits: g.digits.max(40),
        ..CheckConfig::default()
    }
}

fn outcome_json(o: &CheckOutcome) -> Value {
    json!({
        "name": o.name,
        "pass": o.pass,
        "lines": o.lines.iter().map(|l| json!({"label": l.label, "pass": l.pass, "detail": l.detail})).collect::<Vec<_>>(),
        "data": o.data,
    })
}

fn run_checks(names: &[&str], cfg: &CheckConfig, inputs: Value) -> Result<Outcome> {
    let mut lines = Vec::new();
    let mut results = Vec::new();
    let mut pass = true;
    for name in names {
        let o = find_check(name)?.run(cfg)?;
        if names.len() > 1 {
            lines.push(format!("== {name}"));
        }
        lines.extend(o.lines.iter().map(format_line));
        pass &= o.pass;
        results.push(outcome_json(&o));
    }
    Ok(Outcome {
        inputs,
        results: json!({ "checks": results }),
        lines,
        pass: Some(pass),
        certified: true,
    })
}

/// Parses an inclusive range `lo..hi`.
fn parse_range(text: &str) -> Result<std::ops::Range<i64>> {
    let (lo, hi) = text.split_once("..").context("range must look like lo..hi")?;
    let lo: i64 = lo.trim().parse().context("range start")?;
    let hi: i64 = hi.trim().parse().context("range end")?;
    if hi < lo {
        bail!("empty range {text}");
    }
    Ok(lo..hi + 1)
}

pub fn verify(cmd: VerifyCmd, g: &GlobalArgs) -> Result<Outcome> {
    let mut cfg = config(g);
    match cmd {
        VerifyCmd::Lemmas { table } => {
            let names: Vec<&str> = match table.as_str() {
                "all" => vec!["f1", "f2"],
                t => vec![t],
            };
            run_checks(&names, &cfg, json!({ "table": table }))
        }
        VerifyCmd::Window {
            preset,
            constraints,
            range,
            node_guard,
            allow_large,
            trace,
        } => {
            cfg.search = SearchOptions {
                node_guard: node_guard.unwrap_or(cfg.search.node_guard),
                allow_large,
                trace,
                ..cfg.search
            };
            let inputs = json!({
                "preset": preset,
                "constraints": constraints.as_ref().map(|p| p.display().to_string()),
                "range": range,
                "node_guard": cfg.search.node_guard,
            });
            match (preset, constraints) {
                (Some(p), None) => run_checks(&[p.as_str()], &cfg, inputs),
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    let c = WindowConstraint::from_json(&text)?;
                    let range = parse_range(range.as_deref().context("--range is required with --constraints")?)?;
                    let out = forced_window_search(&c, range.clone(), &cfg.search)?;
                    let n = out.surviving_windows.len();
                    let mut lines = vec![
                        format!("constraint {c}"),
                        format!("{n} survivors over [{}, {}], {} nodes", range.start, range.end - 1, out.nodes_explored),
                    ];
                    lines.extend(out.surviving_windows.iter().take(SURVIVOR_LISTING).map(|w| format!("  {w}")));
                    let log: Option<Vec<Value>> = out
                        .prune_log
                        .as_ref()
                        .map(|l| l.iter().map(|r| json!({"window": r.window, "violated": r.violated})).collect());
                    Ok(Outcome {
                        inputs,
                        results: json!({
                            "survivors": n,
                            "nodes_explored": out.nodes_explored,
                            "windows": out.surviving_windows.iter().take(SURVIVOR_LISTING).map(|w| w.to_string()).collect::<Vec<_>>(),
                            "prune_log": log,
                        }),
                        lines,
                        pass: None,
                        certified: true,
                    })
                }
                _ => bail!("give exactly one of --preset or --constraints"),
            }
        }
        VerifyCmd::Chain => run_checks(&["chain"], &cfg, json!({})),
        VerifyCmd::Appendix { a } => {
            if let Some(a) = a {
                cfg.appendix_range = a..=a;
            }
            run_checks(&["appendix"], &cfg, json!({ "a": a }))
        }
        VerifyCmd::ClosedForm => run_checks(&["closed-form"], &cfg, json!({ "digits": cfg.closed_form_digits })),
        VerifyCmd::RecursiveBound => run_checks(&["recursive-bound"], &cfg, json!({})),
        VerifyCmd::Check { name: Some(name) } => run_checks(&[name.as_str()], &cfg, json!({ "name": name })),
        VerifyCmd::Check { name: None } => {
            let lines = registry().iter().map(|c| format!("{:16} {}", c.name(), c.summary())).collect();
            Ok(Outcome {
                inputs: json!({}),
                results: json!({ "checks": check_names() }),
                lines,
                pass: None,
                certified: true,
            })
        }
    }
}

pub fn dimension(cmd: DimensionCmd, g: &GlobalArgs) -> Result<Outcome> {
    let DimensionCmd::Bounds { alphabet, depth, csv } = cmd;
    let spec = GaussCantorSpec::parse(&alphabet)?;
    let scales = interval_scales(&spec, depth)?;
    if let Some(path) = &csv {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_scales_csv(&scales, BufWriter::new(file))?;
    }
    let b = bounds_from_scales(&scales, depth, g.tol)?;
    let d = g.digits.min(12);
    let certified = b.alpha.certificate_holds() && b.beta.certificate_holds();
    let bracket = |e: &msl_core::dimension::ExponentBracket| {
        json!({
            "value": e.decimal(d),
            "lo": e.lower_decimal(d),
            "hi": e.upper_decimal(d),
            "sum_at_lo": [format!("{:e}", e.sum_at_lo.lo), format!("{:e}", e.sum_at_lo.hi)],
            "sum_at_hi": [format!("{:e}", e.sum_at_hi.lo), format!("{:e}", e.sum_at_hi.hi)],
            "certificate_holds": e.certificate_holds(),
        })
    };
    Ok(Outcome {
        inputs: json!({
            "alphabet": spec.to_string(),
            "depth": depth,
            "tol": format!("{:e}", g.tol),
            "csv": csv.as_ref().map(|p| p.display().to_string()),
        }),
        results: json!({
            "intervals": b.intervals,
            "alpha": bracket(&b.alpha),
            "beta": bracket(&b.beta),
        }),
        lines: vec![
            format!(
                "alpha_{depth} = {}  in [{}, {}]",
                b.alpha.decimal(d),
                b.alpha.lower_decimal(d),
                b.alpha.upper_decimal(d)
            ),
            format!(
                "beta_{depth}  = {}  in [{}, {}]",
                b.beta.decimal(d),
                b.beta.lower_decimal(d),
                b.beta.upper_decimal(d)
            ),
            format!(
                "{} <= HD(K({})) <= {}  ({} intervals)",
                b.alpha.decimal(d),
                spec,
                b.beta.decimal(d),
                b.intervals
            ),
        ],
        pass: None,
        certified,
    })
}
