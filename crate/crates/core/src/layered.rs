//! Four evaluation strategies for expressions, each a small delta over a
//! shared skeleton.
//!
//! The skeleton walks the tree once, left child before right, and delegates
//! the per-node work to a pluggable [`EvalStrategy`]. The built-in variants
//! differ only in how values enter and flow through their monad: plain
//! lifting, exceptions as values, division counting, and trace output.

use crate::expr::{checked_div, eval_simple, DivideByZero, Expr};
use crate::monad::{CountState, Done, Fallible, Output, Pure, Response, State};

/// Per-node actions an evaluation variant plugs into the shared skeleton.
pub trait EvalStrategy {
    /// The wrapped result this variant produces.
    type Wrapped;

    /// Evaluates a constant node.
    fn constant(&self, node: &Expr, value: f64) -> Self::Wrapped;

    /// Combines the already-evaluated children of a division node.
    fn division(&self, node: &Expr, left: Self::Wrapped, right: Self::Wrapped) -> Self::Wrapped;
}

/// The shared evaluation skeleton: children are evaluated left to right,
/// then handed to the variant's node action.
pub fn eval_with<S: EvalStrategy>(strategy: &S, e: &Expr) -> S::Wrapped {
    match e {
        Expr::Con(v) => strategy.constant(e, *v),
        Expr::Div(l, r) => {
            let left = eval_with(strategy, l);
            let right = eval_with(strategy, r);
            strategy.division(e, left, right)
        }
    }
}

struct Monadic;

impl EvalStrategy for Monadic {
    type Wrapped = Result<Pure<f64>, DivideByZero>;

    fn constant(&self, _node: &Expr, value: f64) -> Self::Wrapped {
        Ok(Pure::unit(value))
    }

    fn division(&self, _node: &Expr, left: Self::Wrapped, right: Self::Wrapped) -> Self::Wrapped {
        let lm = left?;
        let rm = right?;
        lm.bind(|a| rm.bind(|b| checked_div(a, b).map(Pure::unit)))
    }
}

/// Evaluates by lifting every value into the pure monad. A zero divisor is
/// not caught here and propagates as an error.
pub fn eval_monadic(e: &Expr) -> Result<Pure<f64>, DivideByZero> {
    eval_with(&Monadic, e)
}

struct Excepting;

impl EvalStrategy for Excepting {
    type Wrapped = Fallible<f64>;

    fn constant(&self, _node: &Expr, value: f64) -> Self::Wrapped {
        Fallible::unit(value)
    }

    fn division(&self, _node: &Expr, left: Self::Wrapped, right: Self::Wrapped) -> Self::Wrapped {
        left.bind(|a| {
            right.bind(move |b| match checked_div(a, b) {
                Ok(v) => Fallible::unit(v),
                Err(err) => Fallible::raise(err.to_string()),
            })
        })
    }
}

/// Evaluates with division by zero surfaced as a raise value. The first
/// zero division encountered wins and absorbs the rest of the evaluation.
pub fn eval_with_exceptions(e: &Expr) -> Fallible<f64> {
    eval_with(&Excepting, e)
}

/// Increments the division count and answers the unit value.
pub fn tally() -> State<Done> {
    State::new(|s| Response::new(Done, CountState(s.0 + 1)))
}

struct Counting;

impl EvalStrategy for Counting {
    type Wrapped = State<f64>;

    fn constant(&self, _node: &Expr, value: f64) -> Self::Wrapped {
        State::unit(value)
    }

    fn division(&self, _node: &Expr, left: Self::Wrapped, right: Self::Wrapped) -> Self::Wrapped {
        let divide = left.bind(move |a| right.bind(move |b| State::unit(a / b)));
        tally().bind(move |_| divide.clone())
    }
}

/// Evaluates while counting divisions in threaded state. The divisor check
/// runs up front; the returned computation itself is total, so executing it
/// in any state is safe.
pub fn eval_counting(e: &Expr) -> Result<State<f64>, DivideByZero> {
    eval_simple(e)?;
    Ok(eval_with(&Counting, e))
}

/// One line of evaluation trace: the expression and the value it produced.
pub fn trace_line(e: &Expr, value: f64) -> String {
    format!("eval({e}) => {value}\n")
}

struct Tracing;

impl EvalStrategy for Tracing {
    type Wrapped = Output<f64>;

    fn constant(&self, node: &Expr, value: f64) -> Self::Wrapped {
        Output::new(value, trace_line(node, value))
    }

    fn division(&self, node: &Expr, left: Self::Wrapped, right: Self::Wrapped) -> Self::Wrapped {
        left.bind(|a| {
            right.bind(|b| {
                let v = a / b;
                Output::new(v, trace_line(node, v))
            })
        })
    }
}

/// Evaluates while emitting one trace line per node, children first. As
/// with [`eval_counting`], the divisor check runs up front.
pub fn eval_tracing(e: &Expr) -> Result<Output<f64>, DivideByZero> {
    eval_simple(e)?;
    Ok(eval_with(&Tracing, e))
}
