//! Wrapped computations with a bind operation.
//!
//! Four kinds share the same shape: `Pure` holds an answer with no effect,
//! `Raise` is a stopped computation carrying the reason, `State` threads a
//! division count, and `Output` accumulates a trace. The kinds form an open
//! family rather than a closed sum: each evaluator commits to one kind, and
//! a continuation passed to [`Pure::bind`] chooses the kind of its result.

use std::fmt;
use std::sync::Arc;

/// A result paired with the state it was produced in.
#[derive(Debug, Clone, PartialEq)]
pub struct Response<T, S> {
    pub result: T,
    pub state: S,
}

impl<T, S> Response<T, S> {
    pub fn new(result: T, state: S) -> Self {
        Response { result, state }
    }
}

/// The number of divisions performed so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountState(pub u64);

impl fmt::Display for CountState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The distinguished unit value, answered by computations that are run for
/// their effect alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Done;

impl fmt::Display for Done {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("done")
    }
}

/// An effect-free computation holding its answer.
#[derive(Debug, Clone, PartialEq)]
pub struct Pure<T> {
    pub contents: T,
}

impl<T> Pure<T> {
    /// Lifts a value with no effect.
    pub fn unit(contents: T) -> Self {
        Pure { contents }
    }

    /// Pipes the contents into `k`. The continuation chooses the kind of
    /// the resulting computation.
    pub fn bind<M>(self, k: impl FnOnce(T) -> M) -> M {
        k(self.contents)
    }
}

impl<T: fmt::Display> fmt::Display for Pure<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pure({})", self.contents)
    }
}

/// A computation stopped by an exception.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raise {
    reason: String,
}

impl Raise {
    pub fn new(reason: impl Into<String>) -> Self {
        let reason = reason.into();
        debug_assert!(!reason.is_empty(), "a raise needs a reason");
        Raise { reason }
    }

    pub fn reason(&self) -> &str {
        &self.reason
    }

    /// Discards the continuation: everything bound after an exception is
    /// absorbed by it, and `k` is never invoked.
    pub fn bind<T, M>(self, _k: impl FnOnce(T) -> M) -> Raise {
        self
    }
}

impl fmt::Display for Raise {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "raise({})", self.reason)
    }
}

/// A stateful computation: a function that, applied to a count, answers a
/// [`Response`]. Computations are immutable and shareable across threads.
pub struct State<T> {
    computation: Arc<dyn Fn(CountState) -> Response<T, CountState> + Send + Sync>,
}

impl<T> Clone for State<T> {
    fn clone(&self) -> Self {
        State {
            computation: Arc::clone(&self.computation),
        }
    }
}

impl<T: 'static> State<T> {
    /// Wraps a state-threading function.
    pub fn new(
        computation: impl Fn(CountState) -> Response<T, CountState> + Send + Sync + 'static,
    ) -> Self {
        State {
            computation: Arc::new(computation),
        }
    }

    /// Lifts a value, leaving the state untouched.
    pub fn unit(contents: T) -> Self
    where
        T: Clone + Send + Sync,
    {
        State::new(move |s| Response::new(contents.clone(), s))
    }

    /// Answers a computation that runs `self` in the given state, feeds the
    /// result to `k`, and runs the computation `k` answers in the threaded
    /// state.
    pub fn bind<U: 'static>(&self, k: impl Fn(T) -> State<U> + Send + Sync + 'static) -> State<U> {
        let m = self.clone();
        State::new(move |s| {
            let first = m.execute_in(s);
            k(first.result).execute_in(first.state)
        })
    }

    /// Applies the wrapped computation to a concrete state.
    pub fn execute_in(&self, s: CountState) -> Response<T, CountState> {
        (self.computation)(s)
    }
}

impl<T: fmt::Display + 'static> fmt::Display for State<T> {
    /// Runs the computation in the zero count and shows the response.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.execute_in(CountState(0));
        write!(f, "result({}) count({})", r.result, r.state)
    }
}

impl<T> fmt::Debug for State<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("State(..)")
    }
}

/// A computation that accumulates output alongside its answer.
#[derive(Debug, Clone, PartialEq)]
pub struct Output<T> {
    pub contents: T,
    pub output: String,
}

impl<T> Output<T> {
    pub fn new(contents: T, output: impl Into<String>) -> Self {
        Output {
            contents,
            output: output.into(),
        }
    }

    /// Lifts a value with empty output.
    pub fn unit(contents: T) -> Self {
        Output::new(contents, "")
    }

    /// Runs `k` on the contents and concatenates the outputs in order.
    pub fn bind<U>(self, k: impl FnOnce(T) -> Output<U>) -> Output<U> {
        let next = k(self.contents);
        Output {
            contents: next.contents,
            output: self.output + &next.output,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Output<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}value: {}", self.output, self.contents)
    }
}

/// Either a pure answer or a raised exception; binds dispatch on the kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Fallible<T> {
    Pure(Pure<T>),
    Raise(Raise),
}

impl<T> Fallible<T> {
    pub fn unit(contents: T) -> Self {
        Fallible::Pure(Pure::unit(contents))
    }

    pub fn raise(reason: impl Into<String>) -> Self {
        Fallible::Raise(Raise::new(reason))
    }

    /// Pipes a pure answer into `k`; a raise discards `k` unheard.
    pub fn bind<U>(self, k: impl FnOnce(T) -> Fallible<U>) -> Fallible<U> {
        match self {
            Fallible::Pure(p) => p.bind(k),
            Fallible::Raise(r) => Fallible::Raise(r.bind(k)),
        }
    }
}

impl<T> From<Pure<T>> for Fallible<T> {
    fn from(p: Pure<T>) -> Self {
        Fallible::Pure(p)
    }
}

impl<T> From<Raise> for Fallible<T> {
    fn from(r: Raise) -> Self {
        Fallible::Raise(r)
    }
}

impl<T: fmt::Display> fmt::Display for Fallible<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fallible::Pure(p) => p.fmt(f),
            Fallible::Raise(r) => r.fmt(f),
        }
    }
}
