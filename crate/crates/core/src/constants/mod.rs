//! The named constants near the gap, their defining expansions, and the
//! closed form of the smallest known isolated value.

use std::cmp::Ordering;
use std::fmt;

use crate::arith::{parse_decimal, surd_compare, QuadraticSurd, SurdSum};
use crate::cf::{LambdaExpression, Mobius};
use crate::error::{Error, Result};
use crate::spectra::{lagrange_value, lambda_at, markov_value};
use crate::words::{parse_compact, BiInfiniteSequence, FiniteWord, OneSidedWord};

pub const MAX_DIGITS: usize = 200;

/// Sequence whose `λ_0` and Markov value is `f`.
pub const RHO_LITERAL: &str = "over(1 2_2 1_2 2_4) ; 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1_2 ; over(2_3 1_3)";
/// Sequence whose `λ_0` is `σ`.
pub const SIGMA_LITERAL: &str =
    "over(1 2_2 1_2 2_4) ; 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1 1 ; over(2_2 1_2 2_2 1 2_2)";
/// Period whose Lagrange value is `c∞`.
pub const LOWER_PERIOD: &str = "2_4 1_2 2_2 1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstantName {
    LowerEnd,
    UpperEnd,
    F,
    Sigma,
}

impl ConstantName {
    pub const ALL: [ConstantName; 4] = [
        ConstantName::LowerEnd,
        ConstantName::F,
        ConstantName::Sigma,
        ConstantName::UpperEnd,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ConstantName::LowerEnd => "c_inf",
            ConstantName::UpperEnd => "C_inf",
            ConstantName::F => "f",
            ConstantName::Sigma => "sigma",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.id() == id)
            .ok_or_else(|| Error::UnknownConstant(id.to_string()))
    }
}

impl fmt::Display for ConstantName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

fn side(pre: &str, per: &str) -> OneSidedWord {
    let pre = if pre.is_empty() {
        FiniteWord::empty()
    } else {
        parse_compact(pre).expect("valid literal")
    };
    OneSidedWord::new(pre, parse_compact(per).expect("valid literal")).expect("nonempty period")
}

/// `[over(2_4, 1_2, 2_2, 1)]` split as `2 + [0; over(2_3 1_2 2_2 1 2)]`.
fn lower_forward() -> OneSidedWord {
    side("", "2_3 1_2 2_2 1 2")
}

pub fn definition(name: ConstantName) -> LambdaExpression {
    match name {
        ConstantName::LowerEnd => LambdaExpression::new(2, lower_forward(), side("", "1 2_2 1_2 2_4")),
        ConstantName::UpperEnd => LambdaExpression::new(
            2,
            side("1 2_2 1_2 2_4 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1 2_4 1_2", "2_3 1_3"),
            side("2_3 1_2 2_2 1 2_4 1", "1_3 2_3"),
        ),
        ConstantName::F => LambdaExpression::new(
            2,
            lower_forward(),
            side("1 2_2 1_2 2_4 1 2_2 1_2 2_2 1_2", "2_3 1_3"),
        ),
        ConstantName::Sigma => {
            let s = BiInfiniteSequence::parse(SIGMA_LITERAL).expect("valid literal");
            crate::spectra::lambda_expression(&s, 0)
        }
    }
}

pub fn constant_value(name: ConstantName) -> SurdSum {
    definition(name).value
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedConstant {
    pub name: ConstantName,
    pub definition: String,
    pub value: SurdSum,
    pub decimal: String,
}

/// Exact value and `digits` certified decimals of a named constant.
pub fn compute_constant(id: &str, digits: usize) -> Result<NamedConstant> {
    let name = ConstantName::from_id(id)?;
    if digits > MAX_DIGITS {
        return Err(Error::Invalid(format!("at most {MAX_DIGITS} digits")));
    }
    let def = definition(name);
    Ok(NamedConstant {
        name,
        definition: def.to_string(),
        decimal: def.value.to_decimal(digits),
        value: def.value,
    })
}

/// `(71788723850 + 2√210)/101867079581 + (217 + √156817)/254`.
pub fn f_closed_form() -> SurdSum {
    let a = QuadraticSurd::new(71788723850i64.into(), 2.into(), 210.into(), 101867079581i64.into())
        .expect("valid surd");
    let b = QuadraticSurd::new(217.into(), 1.into(), 156817.into(), 254.into()).expect("valid surd");
    SurdSum::pair(a, b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticCheck {
    pub period: String,
    /// `(c, d − a, −b)` of the period map, so the tail solves `c x² + (d − a) x − b = 0`.
    pub coefficients: [String; 3],
    pub tail: QuadraticSurd,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormReport {
    pub digits: usize,
    pub quadratics: Vec<QuadraticCheck>,
    pub lambda_value: SurdSum,
    pub closed_form: SurdSum,
    /// `Some` when both sides live over the same two radicands.
    pub exact_equal: Option<bool>,
    pub lambda_decimal: String,
    pub closed_form_decimal: String,
    pub pass: bool,
}

fn same_fields(x: &SurdSum, y: &SurdSum) -> bool {
    let mut rx: Vec<_> = x.terms().iter().map(|t| t.radicand().clone()).collect();
    let mut ry: Vec<_> = y.terms().iter().map(|t| t.radicand().clone()).collect();
    rx.sort();
    ry.sort();
    rx == ry
}

fn quadratic_check(period: &[u32]) -> QuadraticCheck {
    let m = Mobius::of_digits(period);
    let (qa, qb, qc) = (m.c.clone(), &m.d - &m.a, -m.b.clone());
    let tail = m.periodic_fixed_point();
    let satisfied = tail.eval_quadratic(&qa, &qb, &qc).is_zero();
    QuadraticCheck {
        period: FiniteWord::new(period.to_vec()).expect("positive digits").to_string(),
        coefficients: [qa.to_string(), qb.to_string(), qc.to_string()],
        tail,
        satisfied,
    }
}

/// Checks `λ_0(ρ)` against the closed form, to at least `digits` decimals.
pub fn verify_f_closed_form(digits: usize) -> Result<ClosedFormReport> {
    if digits < 40 {
        return Err(Error::Invalid("closed-form check needs at least 40 digits".into()));
    }
    if digits > MAX_DIGITS {
        return Err(Error::Invalid(format!("at most {MAX_DIGITS} digits")));
    }
    let rho = BiInfiniteSequence::parse(RHO_LITERAL)?;
    let lambda_value = lambda_at(&rho, 0).value;
    let def = definition(ConstantName::F);
    let quadratics = vec![
        quadratic_check(def.forward.period()),
        quadratic_check(def.backward.period()),
    ];
    let closed_form = f_closed_form();
    let exact_equal = same_fields(&lambda_value, &closed_form)
        .then(|| surd_compare(&lambda_value, &closed_form) == Ordering::Equal);
    let lambda_decimal = lambda_value.to_decimal(digits);
    let closed_form_decimal = closed_form.to_decimal(digits);
    let pass = quadratics.iter().all(|q| q.satisfied)
        && lambda_decimal == closed_form_decimal
        && exact_equal != Some(false);
    Ok(ClosedFormReport {
        digits,
        quadratics,
        lambda_value,
        closed_form,
        exact_equal,
        lambda_decimal,
        closed_form_decimal,
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingReport {
    pub chain: Vec<(String, String, bool)>,
    pub pass: bool,
}

/// `3.118117 < c∞ < f < σ < C∞ < 3.1181201786`, each link decided exactly.
pub fn verify_ordering() -> OrderingReport {
    let floor = SurdSum::from_rational(&parse_decimal("3.118117").expect("valid literal"));
    let cap = SurdSum::from_rational(&parse_decimal("3.1181201786").expect("valid literal"));
    let mut items = vec![("3.118117".to_string(), floor)];
    for c in ConstantName::ALL {
        items.push((c.id().to_string(), constant_value(c)));
    }
    items.push(("3.1181201786".to_string(), cap));
    let chain: Vec<_> = items
        .windows(2)
        .map(|w| (w[0].0.clone(), w[1].0.clone(), surd_compare(&w[0].1, &w[1].1) == Ordering::Less))
        .collect();
    let pass = chain.iter().all(|c| c.2);
    OrderingReport { chain, pass }
}

/// Re-derives `f` and `c∞` as Markov and Lagrange values of their sequences.
pub fn cross_check_spectra() -> Result<bool> {
    let rho = BiInfiniteSequence::parse(RHO_LITERAL)?;
    let m = markov_value(&rho);
    let f_ok = m.certificate.attaining_position == Some(0)
        && surd_compare(&m.value.value, &constant_value(ConstantName::F)) == Ordering::Equal;
    let (l, _) = lagrange_value(&parse_compact(LOWER_PERIOD)?)?;
    let c_ok = surd_compare(&l.value, &constant_value(ConstantName::LowerEnd)) == Ordering::Equal;
    Ok(f_ok && c_ok)
}
