//! Named verification checks behind one interface, looked up by name.

use std::ops::RangeInclusive;

use serde_json::{json, Value};

use crate::arith::{truncate_decimal, SurdSum};
use crate::constants::{verify_f_closed_form, verify_ordering};
use crate::error::{Error, Result};
use crate::lemmas::{
    run_preset, verify_appendix, verify_minimality_chain, verify_recursive_bound, verify_table, LimitCheck, Preset,
    SearchOptions, Table,
};

#[derive(Clone, Debug)]
pub struct CheckConfig {
    /// Decimal places shown for values.
    pub digits: usize,
    pub search: SearchOptions,
    pub appendix_range: RangeInclusive<usize>,
    pub closed_form_digits: usize,
    pub recursive_depth: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            digits: 14,
            search: SearchOptions::default(),
            appendix_range: 2..=10,
            closed_form_digits: 40,
            recursive_depth: 10,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckLine {
    fn new(label: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckLine {
            label: label.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub lines: Vec<CheckLine>,
    /// Machine-readable results; numbers are decimal strings.
    pub data: Value,
}

impl CheckOutcome {
    fn from_lines(name: &'static str, lines: Vec<CheckLine>, data: Value) -> Self {
        CheckOutcome {
            name,
            pass: lines.iter().all(|l| l.pass),
            lines,
            data,
        }
    }
}

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn run(&self, config: &CheckConfig) -> Result<CheckOutcome>;
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn dec(x: &SurdSum, digits: usize) -> String {
    x.to_decimal(digits)
}

struct TableCheck(Table);

impl Check for TableCheck {
    fn name(&self) -> &'static str {
        self.0.name()
    }

    fn summary(&self) -> &'static str {
        match self.0 {
            Table::Forbidden => "lower bounds on λ_j for the 13 forbidden words",
            Table::Allowed => "upper bounds on λ_j for the 7 allowed words",
        }
    }

    fn run(&self, config: &CheckConfig) -> Result<CheckOutcome> {
        let reports = verify_table(self.0)?;
        let rel = match self.0 {
            Table::Forbidden => ">",
            Table::Allowed => "<",
        };
        let d = config.digits;
        let mut lines = Vec::new();
        let mut rows = Vec::new();
        for r in &reports {
            let threshold = truncate_decimal(&r.threshold, 12).trim_end_matches('0').to_string();
            let mut detail = format!("{}: λ_j = {} {rel} {threshold}", r.word, dec(&r.bound.value, d));
            if let Some((offset, cap)) = &r.hypothesis {
                detail.push_str(&format!(" given λ_{{j{offset:+}}} ≤ {}", truncate_decimal(cap, 2)));
            }
            if !r.printed_is_valid {
                detail.push_str("; printed bound is not extremal");
            }
            lines.push(CheckLine::new(format!("({})", r.label), r.pass, detail));
            rows.push(json!({
                "label": r.label,
                "word": r.word,
                "threshold": threshold,
                "bound": dec(&r.bound.value, d),
                "bound_expression": r.bound.to_string(),
                "printed": dec(&r.printed.value, d),
                "printed_expression": r.printed.to_string(),
                "printed_is_valid": r.printed_is_valid,
                "printed_meets_threshold": r.printed_meets_threshold,
                "hypothesis": r.hypothesis.as_ref().map(|(o, c)| json!({"offset": o, "cap": truncate_decimal(c, 2)})),
                "pass": r.pass,
            }));
        }
        Ok(CheckOutcome::from_lines(self.name(), lines, json!({ "entries": rows })))
    }
}

struct PresetCheck(Preset);

impl Check for PresetCheck {
    fn name(&self) -> &'static str {
        self.0.name()
    }

    fn summary(&self) -> &'static str {
        match self.0 {
            Preset::TwoSided => "forced 31-digit window from a floor on λ_0 and two-sided caps",
            Preset::OneSided => "forced 31-digit window from an assigned block and one-sided caps",
        }
    }

    fn run(&self, config: &CheckConfig) -> Result<CheckOutcome> {
        let r = run_preset(self.0, &config.search)?;
        let words = |v: &[crate::words::FiniteWord]| v.iter().map(|w| w.to_string()).collect::<Vec<_>>();
        let detail = format!(
            "{} survivors over [{}, {}], {} nodes; {} forward, {} mirrored, {} unexplained",
            r.outcome.surviving_windows.len(),
            r.outcome.range.start,
            r.outcome.range.end - 1,
            r.outcome.nodes_explored,
            r.forward_forms.len(),
            r.mirrored_forms.len(),
            r.unexplained.len(),
        );
        let lines = vec![CheckLine::new(self.0.name(), r.pass, detail)];
        let data = json!({
            "constraint": self.0.constraint().to_string(),
            "range": [r.outcome.range.start, r.outcome.range.end - 1],
            "survivors": r.outcome.surviving_windows.len(),
            "nodes_explored": r.outcome.nodes_explored,
            "forward_forms": words(&r.forward_forms),
            "mirrored_forms": words(&r.mirrored_forms),
            "unexplained_sample": words(&r.unexplained[..r.unexplained.len().min(10)]),
            "pass": r.pass,
        });
        Ok(CheckOutcome::from_lines(self.name(), lines, data))
    }
}

struct ChainCheck;

impl Check for ChainCheck {
    fn name(&self) -> &'static str {
        "chain"
    }

    fn summary(&self) -> &'static str {
        "lower bounds climbing to f as backward digits are fixed"
    }

    fn run(&self, config: &CheckConfig) -> Result<CheckOutcome> {
        let r = verify_minimality_chain();
        let d = config.digits;
        let mut lines: Vec<CheckLine> = r
            .steps
            .iter()
            .map(|s| {
                let below = s.bound.value < r.target.value;
                let forced = s.forced_digit.map_or(String::new(), |x| format!(" (digit {x})"));
                CheckLine::new(
                    format!("fixed {}", s.fixed),
                    below,
                    format!("{}{forced} < f", dec(&s.bound.value, d)),
                )
            })
            .collect();
        lines.push(CheckLine::new("increasing", r.strictly_increasing, "bounds strictly increase"));
        lines.push(CheckLine::new("target", r.target_is_f, format!("target {} = f", dec(&r.target.value, d))));
        let steps: Vec<_> = r
            .steps
            .iter()
            .map(|s| json!({"fixed": s.fixed, "forced_digit": s.forced_digit, "bound": dec(&s.bound.value, d), "expression": s.bound.to_string()}))
            .collect();
        let data = json!({"steps": steps, "target": dec(&r.target.value, d), "pass": r.pass});
        Ok(CheckOutcome::from_lines(self.name(), lines, data))
    }
}

struct RecursiveBoundCheck;

impl Check for RecursiveBoundCheck {
    fn name(&self) -> &'static str {
        "recursive-bound"
    }

    fn summary(&self) -> &'static str {
        "recursive lower bounds increasing toward C∞"
    }

    fn run(&self, config: &CheckConfig) -> Result<CheckOutcome> {
        let r = verify_recursive_bound(config.recursive_depth);
        let d = config.digits;
        let lines = vec![
            CheckLine::new("increasing", r.increasing, "value(a+1) > value(a)"),
            CheckLine::new("below C∞", r.below_upper_end, "value(a) < C∞"),
            CheckLine::new("converging", r.gaps_decreasing, "C∞ − value(a) decreasing"),
        ];
        let values: Vec<_> = r
            .values
            .iter()
            .map(|(a, v)| json!({"a": a, "value": v.decimal(d + 6)}))
            .collect();
        Ok(CheckOutcome::from_lines(self.name(), lines, json!({"values": values, "pass": r.pass})))
    }
}

struct AppendixCheck;

fn limit_json(l: &LimitCheck, d: usize) -> Value {
    json!({
        "limit": l.limit.decimal(d + 4),
        "printed_decimal": l.printed_decimal,
        "decimal_matches": l.decimal_matches,
        "printed_expression": l.printed_expression.to_string(),
        "expression_matches": l.expression_matches,
        "converging": l.converging,
    })
}

impl Check for AppendixCheck {
    fn name(&self) -> &'static str {
        "appendix"
    }

    fn summary(&self) -> &'static str {
        "periodic family P_a near C∞"
    }

    fn run(&self, config: &CheckConfig) -> Result<CheckOutcome> {
        let r = verify_appendix(config.appendix_range.clone())?;
        let d = config.digits;
        let mut lines = vec![
            CheckLine::new("ℓ increasing", r.lagrange_increasing, "ℓ(P_{a+1}) > ℓ(P_a)"),
            CheckLine::new("ℓ below C∞", r.below_upper_end, "ℓ(P_a) < C∞"),
            CheckLine::new("ℓ = λ_0", r.attained_at_origin, "Lagrange value attained at the marked digit"),
        ];
        for (tag, l) in [("λ_-9", &r.minus9), ("λ_9", &r.plus9)] {
            lines.push(CheckLine::new(
                format!("{tag} limit"),
                l.decimal_matches,
                format!("{} starts {}", l.limit.decimal(d + 4), l.printed_decimal),
            ));
            lines.push(CheckLine::new(
                format!("{tag} converging"),
                l.converging,
                "|λ − limit| strictly decreasing",
            ));
        }
        let rows: Vec<_> = r
            .rows
            .iter()
            .map(|row| {
                json!({
                    "a": row.a,
                    "lagrange": row.lagrange.decimal(d + 6),
                    "lambda_minus9": row.lambda_minus9.decimal(d + 6),
                    "lambda_plus9": row.lambda_plus9.decimal(d + 6),
                })
            })
            .collect();
        let data = json!({
            "rows": rows,
            "upper_end": r.upper_end.decimal(d + 6),
            "lagrange_converging": r.lagrange_converging,
            "minus9": limit_json(&r.minus9, d),
            "plus9": limit_json(&r.plus9, d),
            "pass": r.pass,
        });
        Ok(CheckOutcome::from_lines(self.name(), lines, data))
    }
}

struct ClosedFormCheck;

impl Check for ClosedFormCheck {
    fn name(&self) -> &'static str {
        "closed-form"
    }

    fn summary(&self) -> &'static str {
        "λ_0(ρ) against the closed form of f"
    }

    fn run(&self, config: &CheckConfig) -> Result<CheckOutcome> {
        let r = verify_f_closed_form(config.closed_form_digits)?;
        let mut lines: Vec<CheckLine> = r
            .quadratics
            .iter()
            .map(|q| {
                let [a, b, c] = &q.coefficients;
                CheckLine::new(
                    format!("over({})", q.period),
                    q.satisfied,
                    format!("{} solves {a}x² + {b}x + {c} = 0", q.tail),
                )
            })
            .collect();
        lines.push(CheckLine::new(
            "decimals",
            r.lambda_decimal == r.closed_form_decimal,
            format!("{} digits agree: {}", r.digits, r.lambda_decimal),
        ));
        lines.push(CheckLine::new(
            "exact",
            r.exact_equal != Some(false),
            match r.exact_equal {
                Some(true) => "equal as surd sums",
                Some(false) => "differ as surd sums",
                None => "different radicands, compared by enclosure",
            },
        ));
        let data = json!({
            "lambda": r.lambda_decimal,
            "closed_form": r.closed_form_decimal,
            "closed_form_expression": r.closed_form.to_string(),
            "exact_equal": r.exact_equal,
            "pass": r.pass,
        });
        Ok(CheckOutcome::from_lines(self.name(), lines, data))
    }
}

struct OrderingCheck;

impl Check for OrderingCheck {
    fn name(&self) -> &'static str {
        "ordering"
    }

    fn summary(&self) -> &'static str {
        "3.118117 < c∞ < f < σ < C∞ < 3.1181201786"
    }

    fn run(&self, _config: &CheckConfig) -> Result<CheckOutcome> {
        let r = verify_ordering();
        let lines = r
            .chain
            .iter()
            .map(|(a, b, ok)| CheckLine::new(format!("{a} < {b}"), *ok, ""))
            .collect();
        Ok(CheckOutcome::from_lines(self.name(), lines, json!({"pass": r.pass})))
    }
}

/// Every check, in the order `verify all` runs them.
pub fn registry() -> Vec<Box<dyn Check>> {
    vec![
        Box::new(TableCheck(Table::Forbidden)),
        Box::new(TableCheck(Table::Allowed)),
        Box::new(PresetCheck(Preset::TwoSided)),
        Box::new(PresetCheck(Preset::OneSided)),
        Box::new(ChainCheck),
        Box::new(RecursiveBoundCheck),
        Box::new(AppendixCheck),
        Box::new(ClosedFormCheck),
        Box::new(OrderingCheck),
    ]
}

pub fn find_check(name: &str) -> Result<Box<dyn Check>> {
    registry()
        .into_iter()
        .find(|c| c.name() == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

pub fn check_names() -> Vec<&'static str> {
    registry().iter().map(|c| c.name()).collect()
}

pub fn format_line(line: &CheckLine) -> String {
    if line.detail.is_empty() {
        format!("{} {}", verdict(line.pass), line.label)
    } else {
        format!("{} {} {}", verdict(line.pass), line.label, line.detail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_resolvable() {
        let names = check_names();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        for n in names {
            assert_eq!(find_check(n).unwrap().name(), n);
        }
        assert!(matches!(find_check("nope"), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn forbidden_table_lines() {
        let out = find_check("f1").unwrap().run(&CheckConfig::default()).unwrap();
        assert_eq!(out.lines.len(), 13);
        assert!(out.pass);
        assert!(format_line(&out.lines[0]).starts_with("PASS (1) "));
    }

    #[test]
    fn closed_form_and_ordering_pass() {
        let cfg = CheckConfig::default();
        assert!(find_check("closed-form").unwrap().run(&cfg).unwrap().pass);
        assert!(find_check("ordering").unwrap().run(&cfg).unwrap().pass);
    }
}
