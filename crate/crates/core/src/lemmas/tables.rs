use std::cmp::Ordering;

use crate::arith::{parse_decimal, surd_compare, Rational};
use crate::cf::{approx_lambda_bounds, bound_lambda_window, Direction, LambdaExpression, Window};
use crate::error::Result;
use crate::words::{parse_compact, FiniteWord, OneSidedWord};

/// Which side of the threshold the entry's `λ_j` must land on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    /// `λ_j` bounded below: the word is forbidden under a cap.
    Forbidden,
    /// `λ_j` bounded above: the word keeps `λ_j` small.
    Allowed,
}

impl Table {
    pub fn direction(self) -> Direction {
        match self {
            Table::Forbidden => Direction::Min,
            Table::Allowed => Direction::Max,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Table::Forbidden => "f1",
            Table::Allowed => "f2",
        }
    }
}

/// `center + [0; fwd_pre, over(fwd_per)] + [0; bwd_pre, over(bwd_per)]` as printed.
#[derive(Clone, Copy, Debug)]
pub struct PrintedBound {
    pub forward: (&'static str, &'static str),
    pub backward: (&'static str, &'static str),
}

impl PrintedBound {
    pub fn expression(&self) -> Result<LambdaExpression> {
        let side = |(pre, per): (&str, &str)| -> Result<OneSidedWord> {
            let pre = if pre.is_empty() {
                FiniteWord::empty()
            } else {
                parse_compact(pre)?
            };
            OneSidedWord::new(pre, parse_compact(per)?)
        };
        Ok(LambdaExpression::new(2, side(self.forward)?, side(self.backward)?))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TableEntry {
    pub label: u32,
    /// The word with `*` on position `j`.
    pub word: &'static str,
    pub threshold: &'static str,
    /// Side condition `λ_{j+offset} ≤ bound` used for this entry.
    pub hypothesis: Option<(i64, &'static str)>,
    pub printed: PrintedBound,
}

const fn entry(
    label: u32,
    word: &'static str,
    threshold: &'static str,
    forward: (&'static str, &'static str),
    backward: (&'static str, &'static str),
) -> TableEntry {
    TableEntry {
        label,
        word,
        threshold,
        hypothesis: None,
        printed: PrintedBound { forward, backward },
    }
}

const fn with_hypothesis(mut e: TableEntry, offset: i64, bound: &'static str) -> TableEntry {
    e.hypothesis = Some((offset, bound));
    e
}

pub const FORBIDDEN_TABLE: [TableEntry; 13] = [
    entry(1, "1 2* 1", "3.15", ("1", "1 2"), ("1", "1 2")),
    entry(2, "2_2 1 2* 2_2 1", "3.12", ("2_2 1", "1 2"), ("1 2_2", "2 1")),
    entry(3, "2_3 1 2* 2_2", "3.119", ("2_2", "2 1"), ("1 2_3", "2 1")),
    entry(4, "2_4 2* 1 2_2 1_2", "3.1182", ("1 2_2 1_2", "1 2"), ("2_4", "2 1")),
    entry(
        5,
        "2_3 1_2 2_3 2* 1 2_2 1_2 2_3",
        "3.118125",
        ("1 2_2 1_2 2_3", "2 1"),
        ("2_3 1_2 2_3", "2 1"),
    ),
    entry(
        6,
        "2_2 1_2 2_3 2* 1 2_2 1_2 2_3 1",
        "3.118121",
        ("1 2_2 1_2 2_3 1", "1 2"),
        ("2_3 1_2 2_2", "1 2"),
    ),
    entry(
        7,
        "1_2 2_2 1_2 2_3 2* 1 2_2 1_2 2_3",
        "3.118121",
        ("1 2_2 1_2 2_3", "2 1"),
        ("2_3 1_2 2_2 1_2", "1 2"),
    ),
    entry(
        8,
        "2_2 1 2_2 1_2 2_3 2* 1 2_2 1_2 2_5",
        "3.1181206",
        ("1 2_2 1_2 2_5", "2 1"),
        ("2_3 1_2 2_2 1 2_2", "2 1"),
    ),
    with_hypothesis(
        entry(
            9,
            "1 2_2 1 2_2 1_2 2_3 2* 1 2_2 1_2 2_4 1",
            "3.1181202",
            ("1 2_2 1_2 2_4 1 2 2", "2 1"),
            ("2_3 1_2 2_2 1 2_2 1", "1 2"),
        ),
        11,
        "3.15",
    ),
    entry(
        10,
        "2_4 1 2_2 1_2 2_3 2* 1 2_2 1_2 2_4 1_2",
        "3.1181202",
        ("1 2_2 1_2 2_4 1_2", "1 2"),
        ("2_3 1_2 2_2 1 2_4", "2 1"),
    ),
    entry(
        11,
        "2_4 1 2_2 1_2 2_3 2* 1 2_2 1_2 2_4 1 2_2 1 2",
        "3.1181201787",
        ("1 2_2 1_2 2_4 1 2_2 1 2", "2 1"),
        ("2_3 1_2 2_2 1 2_4", "2 1"),
    ),
    entry(
        12,
        "1 2_4 1 2_2 1_2 2_3 2* 1 2_2 1_2 2_4 1 2_2 1_3",
        "3.1181201786",
        ("1 2_2 1_2 2_4 1 2_2 1_3", "1 2"),
        ("2_3 1_2 2_2 1 2_4 1", "1 2"),
    ),
    entry(
        13,
        "2 1 2_4 1 2_2 1_2 2_3 2* 1 2_2 1_2 2_4 1 2_2 1_2 2_2",
        "3.1181201789",
        ("1 2_2 1_2 2_4 1 2_2 1_2 2_2", "2 1"),
        ("2_3 1_2 2_2 1 2_4 1 2", "2 1"),
    ),
];

pub const ALLOWED_TABLE: [TableEntry; 7] = [
    entry(15, "1_2 2* 2", "3.05", ("2", "2 1"), ("1_2", "1 2")),
    entry(16, "2_2 1 2* 2 1", "3.09", ("2 1", "1 2"), ("1 2_2", "2 1")),
    entry(17, "2_3 2* 1 2_2 1 2", "3.118", ("1 2_2 1 2", "2 1"), ("2_3", "2 1")),
    entry(18, "1 2_3 2* 1 2_2 1_3", "3.118", ("1 2_2 1_3", "1 2"), ("2_3 1", "1 2")),
    with_hypothesis(
        entry(
            19,
            "1 2_3 2* 1 2_2 1_2 2_2 1",
            "3.118117",
            ("1 2_2 1_2 2_2 1", "1 2"),
            ("2_3 1 1 2 2", "2 1"),
        ),
        -6,
        "3.15",
    ),
    entry(20, "2 1 2_3 2* 1 2_2 1_2 2_3", "3.118", ("1 2_2 1_2 2_3", "1 2"), ("2_3 1 2", "2 1")),
    entry(21, "1_3 2_3 2* 1 2_2 1_2 2_3", "3.11801", ("1 2_2 1_2 2_3", "1 2"), ("2_3 1_3", "1 2")),
];

pub fn table_entries(table: Table) -> &'static [TableEntry] {
    match table {
        Table::Forbidden => &FORBIDDEN_TABLE,
        Table::Allowed => &ALLOWED_TABLE,
    }
}

#[derive(Clone, Debug)]
pub struct EntryReport {
    pub table: Table,
    pub label: u32,
    pub word: &'static str,
    pub threshold: Rational,
    pub hypothesis: Option<(i64, Rational)>,
    /// Certified extreme of `λ_j` over all admissible completions.
    pub bound: LambdaExpression,
    pub printed: LambdaExpression,
    /// The threshold holds for the certified extreme.
    pub pass: bool,
    /// The printed expression is itself a valid bound (no tighter than `bound`).
    pub printed_is_valid: bool,
    /// The printed expression is on the right side of the threshold.
    pub printed_meets_threshold: bool,
}

/// Positions around a hypothesis position that the constrained search assigns.
pub const HYPOTHESIS_RADIUS: i64 = 4;

fn beats(dir: Direction, a: &LambdaExpression, b: &LambdaExpression) -> bool {
    let ord = surd_compare(&a.value, &b.value);
    match dir {
        Direction::Min => ord == Ordering::Less,
        Direction::Max => ord == Ordering::Greater,
    }
}

fn extreme(dir: Direction, bounds: &crate::cf::LambdaBounds) -> &LambdaExpression {
    match dir {
        Direction::Min => &bounds.lower,
        Direction::Max => &bounds.upper,
    }
}

/// Extreme of `λ_j` over completions of `window` with `λ_h ≤ cap`, found by
/// branch and bound over the digits near `h`.
fn constrained_extreme(
    window: &Window,
    j: i64,
    dir: Direction,
    h: i64,
    cap: &Rational,
) -> Result<LambdaExpression> {
    let mut w = window.clone();
    w.extend_to(h - HYPOTHESIS_RADIUS);
    w.extend_to(h + HYPOTHESIS_RADIUS);
    let mut order: Vec<i64> = w.free_positions().collect();
    order.sort_by_key(|&p| ((p - h).abs(), p < h));
    let cap_f = num_traits::ToPrimitive::to_f64(cap).unwrap_or(f64::NAN);
    let infeasible = |w: &Window| -> Result<bool> {
        let (lo, _) = approx_lambda_bounds(w, h);
        if lo + 1e-11 < cap_f {
            return Ok(false);
        }
        let b = bound_lambda_window(w, h)?;
        Ok(b.lower.value.cmp_rational(cap) == Ordering::Greater)
    };
    fn walk(
        w: &mut Window,
        depth: usize,
        order: &[i64],
        j: i64,
        dir: Direction,
        infeasible: &dyn Fn(&Window) -> Result<bool>,
        best: &mut Option<LambdaExpression>,
    ) -> Result<()> {
        if infeasible(w)? {
            return Ok(());
        }
        let b = bound_lambda_window(w, j)?;
        let candidate = extreme(dir, &b);
        if let Some(current) = best.as_ref() {
            if !beats(dir, candidate, current) {
                return Ok(());
            }
        }
        let Some(&pos) = order.get(depth) else {
            *best = Some(candidate.clone());
            return Ok(());
        };
        for d in [2, 1] {
            w.set(pos, Some(d))?;
            walk(w, depth + 1, order, j, dir, infeasible, best)?;
        }
        w.set(pos, None)?;
        Ok(())
    }
    let mut best = None;
    walk(&mut w, 0, &order, j, dir, &infeasible, &mut best)?;
    // every completion violating the hypothesis would leave `best` empty
    best.ok_or_else(|| crate::Error::Invalid("hypothesis admits no completion".into()))
}

pub fn verify_entry(table: Table, e: &TableEntry) -> Result<EntryReport> {
    let window = Window::from_marked(e.word)?;
    let dir = table.direction();
    let threshold = parse_decimal(e.threshold)?;
    let hypothesis = match e.hypothesis {
        Some((offset, b)) => Some((offset, parse_decimal(b)?)),
        None => None,
    };
    let bound = match &hypothesis {
        Some((offset, cap)) => constrained_extreme(&window, 0, dir, *offset, cap)?,
        None => extreme(dir, &bound_lambda_window(&window, 0)?).clone(),
    };
    let printed = e.printed.expression()?;
    let side = |x: &LambdaExpression| {
        let ord = x.value.cmp_rational(&threshold);
        match table {
            Table::Forbidden => ord == Ordering::Greater,
            Table::Allowed => ord == Ordering::Less,
        }
    };
    let pass = side(&bound);
    let printed_meets_threshold = side(&printed);
    let printed_is_valid = !beats(dir.opposite(), &printed, &bound);
    Ok(EntryReport {
        table,
        label: e.label,
        word: e.word,
        threshold,
        hypothesis,
        bound,
        printed,
        pass,
        printed_is_valid,
        printed_meets_threshold,
    })
}

pub fn verify_table(table: Table) -> Result<Vec<EntryReport>> {
    table_entries(table).iter().map(|e| verify_entry(table, e)).collect()
}

pub fn verify_forbidden_table() -> Result<Vec<EntryReport>> {
    verify_table(Table::Forbidden)
}

pub fn verify_allowed_table() -> Result<Vec<EntryReport>> {
    verify_table(Table::Allowed)
}
