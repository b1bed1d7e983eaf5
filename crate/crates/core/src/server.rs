//! Request dispatch over a pluggable callback with explicitly threaded
//! state, in three behavioural kinds.
//!
//! A basic server commits the state a handler answers and crashes on any
//! failure. A transactional server catches the failure, answers the
//! `!CRASH!` sentinel, and continues with the state exactly as it was
//! before the request. A hot-swap server additionally intercepts the
//! special `!HOTSWAP!` request to install a different callback at runtime.
//!
//! Handlers never mutate the state they are given; every change travels in
//! the returned [`Response`]. That is what makes rollback a no-op: a failed
//! request simply never commits.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::callbacks;
use crate::monad::Response;

/// Sentinel result a transactional server answers for a failed request.
pub const CRASH_RESULT: &str = "!CRASH!";

/// The special operation a hot-swap server intercepts itself.
pub const HOTSWAP_OP: &str = "!HOTSWAP!";

/// An argument or result value carried by requests and responses.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Text(String),
}

impl Value {
    pub fn num(n: f64) -> Value {
        Value::Num(n)
    }

    pub fn text(s: impl Into<String>) -> Value {
        Value::Text(s.into())
    }

    pub fn as_num(&self) -> Option<f64> {
        match self {
            Value::Num(n) => Some(*n),
            Value::Text(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Num(n) => write!(f, "{n}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

impl From<f64> for Value {
    fn from(n: f64) -> Value {
        Value::Num(n)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Value {
        Value::text(s)
    }
}

impl From<String> for Value {
    fn from(s: String) -> Value {
        Value::Text(s)
    }
}

/// A named operation plus its arguments.
#[derive(Debug, Clone, PartialEq)]
pub struct Request {
    pub op: String,
    pub args: Vec<Value>,
}

impl Request {
    pub fn new(op: impl Into<String>, args: Vec<Value>) -> Request {
        let op = op.into();
        debug_assert!(!op.is_empty(), "a request needs an operation name");
        Request { op, args }
    }
}

/// State owned by the currently installed callback.
#[derive(Debug, Clone, PartialEq)]
pub enum ServerState {
    /// A name-to-location map.
    Map(BTreeMap<String, Value>),
    /// A single numeric memory.
    Number(f64),
}

/// A state-threading operation handler: arguments and the current state
/// in, a result and the next state out. A failure is reported as a message
/// and must leave no other trace.
pub type Handler = fn(&[Value], &ServerState) -> Result<Response<Value, ServerState>, String>;

/// A named behaviour module: an initial state plus a table of handlers,
/// every one of them named with the `state` suffix that dispatch appends
/// to request operations.
#[derive(Debug, Clone)]
pub struct CallbackInstance {
    name: String,
    initial_state: ServerState,
    handlers: BTreeMap<String, Handler>,
}

impl CallbackInstance {
    pub fn new(name: impl Into<String>, initial_state: ServerState) -> Self {
        CallbackInstance {
            name: name.into(),
            initial_state,
            handlers: BTreeMap::new(),
        }
    }

    /// Registers a handler under its full, `state`-suffixed name.
    pub fn with_handler(mut self, handler_name: &str, handler: Handler) -> Self {
        assert!(
            handler_name.ends_with("state"),
            "handler names must end with \"state\": {handler_name}"
        );
        self.handlers.insert(handler_name.to_string(), handler);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn initial_state(&self) -> &ServerState {
        &self.initial_state
    }

    pub fn handler(&self, handler_name: &str) -> Option<&Handler> {
        self.handlers.get(handler_name)
    }

    pub fn handler_names(&self) -> impl Iterator<Item = &str> {
        self.handlers.keys().map(String::as_str)
    }
}

/// A failure while serving one request.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ServerError {
    /// The callback has no handler for the requested operation.
    #[error("NoSuchMethod: no method {0} in mirror for a callback")]
    NoSuchMethod(String),
    /// The handler itself failed.
    #[error("{0}")]
    HandlerFailure(String),
}

/// A callback name with no registered factory.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("UnknownCallback: {name}")]
pub struct UnknownCallback {
    pub name: String,
}

/// Returns a fresh instance of a registered callback. The registry is a
/// fixed table: `nameServer` and `calculator`.
pub fn load_callback(name: &str) -> Result<CallbackInstance, UnknownCallback> {
    match name {
        "nameServer" => Ok(callbacks::name_server()),
        "calculator" => Ok(callbacks::calculator()),
        _ => Err(UnknownCallback {
            name: name.to_string(),
        }),
    }
}

/// Looks up the handler for a request (operation name plus the `state`
/// suffix) and runs it in the given state.
pub fn dispatch(
    callback: &CallbackInstance,
    request: &Request,
    state: &ServerState,
) -> Result<Response<Value, ServerState>, ServerError> {
    let handler_name = format!("{}state", request.op);
    match callback.handler(&handler_name) {
        Some(handler) => handler(&request.args, state).map_err(ServerError::HandlerFailure),
        None => Err(ServerError::NoSuchMethod(handler_name)),
    }
}

/// The server behaviour installed at startup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ServerKind {
    Basic,
    Transactional,
    HotSwap,
}

impl ServerKind {
    /// The name used in the startup log line.
    pub fn name(self) -> &'static str {
        match self {
            ServerKind::Basic => "basicServer",
            ServerKind::Transactional => "transactionServer",
            ServerKind::HotSwap => "hotSwapServer",
        }
    }
}

/// A request-processing server: a callback, its threaded state, and an
/// append-only log.
#[derive(Debug, Clone)]
pub struct Server {
    kind: ServerKind,
    callback: CallbackInstance,
    state: ServerState,
    log: Vec<String>,
}

impl Server {
    /// Loads the named callback and starts a server around its initial
    /// state, logging the startup line.
    pub fn start_up(kind: ServerKind, callback_name: &str) -> Result<Server, UnknownCallback> {
        let callback = load_callback(callback_name)?;
        let state = callback.initial_state().clone();
        Ok(Server {
            kind,
            callback,
            state,
            log: vec![format!("starting {}", kind.name())],
        })
    }

    pub fn kind(&self) -> ServerKind {
        self.kind
    }

    pub fn state(&self) -> &ServerState {
        &self.state
    }

    pub fn log(&self) -> &[String] {
        &self.log
    }

    pub fn callback_name(&self) -> &str {
        self.callback.name()
    }

    /// Processes one request according to this server's kind. Only a basic
    /// server can answer an error; the other kinds absorb failures.
    pub fn handle(&mut self, request: &Request) -> Result<Value, ServerError> {
        match self.kind {
            ServerKind::Basic => self.handle_basic(request),
            ServerKind::Transactional => Ok(self.handle_transactional(request)),
            ServerKind::HotSwap => Ok(self.handle_hot_swap(request)),
        }
    }

    /// Dispatches to the callback, commits the answered state, and logs
    /// the request and its result. On failure nothing is committed or
    /// logged and the error propagates.
    pub fn handle_basic(&mut self, request: &Request) -> Result<Value, ServerError> {
        let response = dispatch(&self.callback, request, &self.state)?;
        self.state = response.state;
        self.log_outcome(request, &response.result);
        Ok(response.result)
    }

    /// Like the basic step, but a failing request is caught: the error and
    /// a `!CRASH!` result are logged, and the state is left exactly as it
    /// was before the request.
    pub fn handle_transactional(&mut self, request: &Request) -> Value {
        match self.handle_basic(request) {
            Ok(result) => result,
            Err(err) => self.crash(request, &err),
        }
    }

    /// Intercepts `!HOTSWAP!` requests to install a different callback and
    /// reset the state to its initial value; every other request is
    /// handled transactionally.
    pub fn handle_hot_swap(&mut self, request: &Request) -> Value {
        if request.op != HOTSWAP_OP {
            return self.handle_transactional(request);
        }
        match Self::swap_target(&request.args) {
            Ok(callback) => {
                let result = Value::text(format!("{} started.", callback.name()));
                self.state = callback.initial_state().clone();
                self.callback = callback;
                self.log_outcome(request, &result);
                result
            }
            Err(err) => self.crash(request, &err),
        }
    }

    /// Runs a sequence of requests in order, closing the log with "done".
    /// A basic server answers the first error and leaves the remaining
    /// requests unprocessed; the other kinds always complete.
    pub fn server_loop<'a, I>(&mut self, requests: I) -> Result<(), ServerError>
    where
        I: IntoIterator<Item = &'a Request>,
    {
        for request in requests {
            self.handle(request)?;
        }
        self.finish();
        Ok(())
    }

    /// Marks the normal end of a request sequence.
    pub fn finish(&mut self) {
        self.log.push("done".to_string());
    }

    fn swap_target(args: &[Value]) -> Result<CallbackInstance, ServerError> {
        let name = args.first().ok_or_else(|| {
            ServerError::HandlerFailure("!HOTSWAP! expects a callback name".into())
        })?;
        load_callback(&name.to_string()).map_err(|err| ServerError::HandlerFailure(err.to_string()))
    }

    fn crash(&mut self, request: &Request, err: &ServerError) -> Value {
        self.log
            .push(format!("Error --- server crashed with {err}"));
        self.log_outcome(request, &Value::text(CRASH_RESULT));
        Value::text(CRASH_RESULT)
    }

    fn log_outcome(&mut self, request: &Request, result: &Value) {
        self.log.push(format!(
            "handle: {} args: [{}]",
            request.op,
            join_args(&request.args)
        ));
        self.log.push(format!("    result: {result}"));
    }
}

fn join_args(args: &[Value]) -> String {
    args.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
