use std::ops::Range;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_traits::ToPrimitive;

use crate::arith::Rational;
use crate::cf::{approx_lambda_bounds, bound_lambda_window, Window};
use crate::error::{Error, Result};
use crate::words::FiniteWord;

use super::constraint::{render_bound, WindowConstraint};

pub const DEFAULT_NODE_GUARD: u64 = 100_000_000;
pub const DEFAULT_RANGE_LIMIT: usize = 40;
pub const NODE_GUARD_ENV: &str = "MSL_NODE_GUARD";

/// Absolute margin inside which the floating filter defers to exact arithmetic.
const FLOAT_GUARD: f64 = 1e-11;
/// Subtrees above this depth are explored in parallel.
const PARALLEL_DEPTH: usize = 10;
const TRACE_LIMIT: usize = 10_000;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub node_guard: u64,
    pub range_limit: usize,
    pub allow_large: bool,
    pub trace: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        let node_guard = std::env::var(NODE_GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_NODE_GUARD);
        SearchOptions {
            node_guard,
            range_limit: DEFAULT_RANGE_LIMIT,
            allow_large: false,
            trace: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PruneRecord {
    pub window: String,
    pub violated: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub range: Range<i64>,
    pub surviving_windows: Vec<FiniteWord>,
    pub nodes_explored: u64,
    pub prune_log: Option<Vec<PruneRecord>>,
}

impl SearchOutcome {
    /// Distinct restrictions of the survivors to `sub`, in first-seen order.
    pub fn restricted(&self, sub: Range<i64>) -> Vec<FiniteWord> {
        let mut out: Vec<FiniteWord> = Vec::new();
        for w in &self.surviving_windows {
            let from = (sub.start - self.range.start) as usize;
            let to = (sub.end - self.range.start) as usize;
            let piece = FiniteWord::new(w.digits()[from..to].to_vec()).expect("positive digits");
            if !out.contains(&piece) {
                out.push(piece);
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Cap,
    Floor,
}

#[derive(Clone, Debug)]
struct Test {
    position: i64,
    bound: Rational,
    approx: f64,
    kind: Kind,
}

impl Test {
    fn describe(&self) -> String {
        let rel = match self.kind {
            Kind::Cap => "<",
            Kind::Floor => ">",
        };
        format!("λ_{} {rel} {}", self.position, render_bound(&self.bound))
    }

    /// True when no completion of `window` can satisfy the test.
    fn refuted(&self, window: &Window) -> bool {
        let (lo, hi) = approx_lambda_bounds(window, self.position);
        let (value, decided) = match self.kind {
            Kind::Cap if lo - FLOAT_GUARD >= self.approx => (true, true),
            Kind::Cap if lo + FLOAT_GUARD < self.approx => (false, true),
            Kind::Floor if hi + FLOAT_GUARD <= self.approx => (true, true),
            Kind::Floor if hi - FLOAT_GUARD > self.approx => (false, true),
            _ => (false, false),
        };
        if decided {
            return value;
        }
        let Ok(b) = bound_lambda_window(window, self.position) else {
            return false;
        };
        match self.kind {
            Kind::Cap => b.lower.value.cmp_rational(&self.bound) != std::cmp::Ordering::Less,
            Kind::Floor => b.upper.value.cmp_rational(&self.bound) != std::cmp::Ordering::Greater,
        }
    }
}

struct Search<'a> {
    tests: Vec<Test>,
    order: Vec<i64>,
    range: Range<i64>,
    options: &'a SearchOptions,
    counter: AtomicU64,
}

#[derive(Default)]
struct Branch {
    survivors: Vec<FiniteWord>,
    nodes: u64,
    log: Vec<PruneRecord>,
}

impl Branch {
    fn merge(mut self, other: Branch) -> Branch {
        self.survivors.extend(other.survivors);
        self.nodes += other.nodes;
        self.log.extend(other.log);
        self.log.truncate(TRACE_LIMIT);
        self
    }
}

impl Search<'_> {
    fn explore(&self, window: &mut Window, depth: usize) -> Result<Branch> {
        let seen = self.counter.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        if seen > self.options.node_guard {
            return Err(Error::NodeGuard(self.options.node_guard));
        }
        if window.assigned_count() > 0 {
            if let Some(t) = self.tests.iter().find(|t| t.refuted(window)) {
                let mut log = Vec::new();
                if self.options.trace {
                    log.push(PruneRecord {
                        window: window.to_string(),
                        violated: t.describe(),
                    });
                }
                return Ok(Branch {
                    survivors: Vec::new(),
                    nodes: 1,
                    log,
                });
            }
        }
        let Some(&pos) = self.order.get(depth) else {
            let digits = self
                .range
                .clone()
                .map(|p| window.get(p).expect("complete assignment"))
                .collect();
            return Ok(Branch {
                survivors: vec![FiniteWord::new(digits).expect("binary digits")],
                nodes: 1,
                log: Vec::new(),
            });
        };
        let children = if depth < PARALLEL_DEPTH {
            let mut w2 = window.clone();
            let mut w1 = window.clone();
            w2.set(pos, Some(2))?;
            w1.set(pos, Some(1))?;
            let (a, b) = rayon::join(
                || self.explore(&mut w2, depth + 1),
                || self.explore(&mut w1, depth + 1),
            );
            a?.merge(b?)
        } else {
            let mut acc = Branch::default();
            for d in [2, 1] {
                window.set(pos, Some(d))?;
                acc = acc.merge(self.explore(window, depth + 1)?);
            }
            window.set(pos, None)?;
            acc
        };
        Ok(Branch {
            nodes: children.nodes + 1,
            ..children
        })
    }
}

/// Depth-first enumeration of all {1,2} assignments on `range` compatible
/// with the constraint, pruning a branch as soon as the certified bounds of
/// some constrained `λ_n` rule it out.
///
/// Positions are assigned by increasing distance from 0 (positive side
/// first), trying 2 before 1. The survivor list and node count do not depend
/// on thread scheduling.
pub fn forced_window_search(
    constraint: &WindowConstraint,
    range: Range<i64>,
    options: &SearchOptions,
) -> Result<SearchOutcome> {
    if range.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let len = (range.end - range.start) as usize;
    if len > options.range_limit && !options.allow_large {
        return Err(Error::RangeTooLarge {
            len,
            limit: options.range_limit,
        });
    }
    let lo = constraint.assigned.keys().next().map_or(range.start, |&p| p.min(range.start));
    let hi = constraint.assigned.keys().last().map_or(range.end, |&p| (p + 1).max(range.end));
    let mut window = Window::new(lo, (hi - lo) as usize);
    for (&p, &d) in &constraint.assigned {
        window.set(p, Some(d))?;
    }
    let mut order: Vec<i64> = range.clone().filter(|p| window.get(*p).is_none()).collect();
    order.sort_by_key(|&p| (p.abs(), p < 0));
    let tests = constraint
        .lambda_caps
        .iter()
        .map(|(p, b)| (p, b, Kind::Cap))
        .chain(constraint.lambda_floors.iter().map(|(p, b)| (p, b, Kind::Floor)))
        .map(|(&position, bound, kind)| Test {
            position,
            bound: bound.clone(),
            approx: bound.to_f64().unwrap_or(f64::NAN),
            kind,
        })
        .collect();
    let search = Search {
        tests,
        order,
        range: range.clone(),
        options,
        counter: AtomicU64::new(0),
    };
    let branch = search.explore(&mut window, 0)?;
    Ok(SearchOutcome {
        range,
        surviving_windows: branch.survivors,
        nodes_explored: branch.nodes,
        prune_log: options.trace.then_some(branch.log),
    })
}
