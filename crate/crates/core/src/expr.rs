//! The `con`/`div` expression language and its direct evaluator.

use std::fmt;

use thiserror::Error;

/// An arithmetic expression: a numeric constant, or the division of two
/// subexpressions. `1/2` is written `div(con 1, con 2)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Con(f64),
    Div(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn con(value: f64) -> Expr {
        Expr::Con(value)
    }

    // named after the language's surface form, not arithmetic division
    #[allow(clippy::should_implement_trait)]
    pub fn div(left: Expr, right: Expr) -> Expr {
        Expr::Div(Box::new(left), Box::new(right))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Con(v) => write!(f, "con {v}"),
            Expr::Div(l, r) => write!(f, "div({l}, {r})"),
        }
    }
}

/// A division whose divisor was exactly zero.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("dividing {numerator} by zero")]
pub struct DivideByZero {
    pub numerator: f64,
}

/// Divides, reporting a zero divisor as an error carrying the numerator.
pub(crate) fn checked_div(numerator: f64, divisor: f64) -> Result<f64, DivideByZero> {
    if divisor == 0.0 {
        Err(DivideByZero { numerator })
    } else {
        Ok(numerator / divisor)
    }
}

/// Evaluates an expression directly to a number, with no effect tracking.
/// The left operand is evaluated before the right, and the divisor is
/// checked before dividing.
pub fn eval_simple(e: &Expr) -> Result<f64, DivideByZero> {
    match e {
        Expr::Con(v) => Ok(*v),
        Expr::Div(l, r) => {
            let a = eval_simple(l)?;
            let b = eval_simple(r)?;
            checked_div(a, b)
        }
    }
}
