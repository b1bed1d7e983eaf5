//! A tiny division language evaluated under pluggable effect strategies,
//! plus a generic request server with transactions and hot callback
//! swapping.
//!
//! The expression side ([`expr`], [`parse`], [`monad`], [`layered`])
//! evaluates `con`/`div` trees four ways: lifted into a pure monad, with
//! exceptions as values, with a threaded division count, and with an
//! accumulated trace. All variants share one evaluation skeleton and agree
//! with the direct evaluator on the numeric result.
//!
//! The server side ([`server`], [`callbacks`]) runs named request handlers
//! against explicitly threaded state. Because handlers answer new state
//! instead of mutating, the transactional server rolls back failed
//! requests for free, and the hot-swap server can replace the installed
//! callback mid-run.

pub mod callbacks;
pub mod expr;
pub mod layered;
pub mod monad;
pub mod parse;
pub mod server;

pub use expr::{eval_simple, DivideByZero, Expr};
pub use layered::{
    eval_counting, eval_monadic, eval_tracing, eval_with, eval_with_exceptions, tally, trace_line,
    EvalStrategy,
};
pub use monad::{CountState, Done, Fallible, Output, Pure, Raise, Response, State};
pub use parse::{parse_expr, ParseError};
pub use server::{
    dispatch, load_callback, CallbackInstance, Handler, Request, Server, ServerError, ServerKind,
    ServerState, UnknownCallback, Value, CRASH_RESULT, HOTSWAP_OP,
};
