//! Deterministic input builders shared by the benchmarks.

use evalserve_core::{Expr, Request, Value};

/// A balanced division tree of the given depth. Leaves are nonzero, so
/// every evaluator accepts the result.
pub fn balanced_expr(depth: u32) -> Expr {
    if depth == 0 {
        Expr::con(3.0)
    } else {
        Expr::div(balanced_expr(depth - 1), balanced_expr(depth - 1))
    }
}

/// A failure-free name-server scenario: `n` adds followed by `n` lookups.
pub fn name_server_requests(n: usize) -> Vec<Request> {
    let mut requests = Vec::with_capacity(2 * n);
    for i in 0..n {
        requests.push(Request::new(
            "add()place()",
            vec![
                Value::text(format!("name{i}")),
                Value::text(format!("place{i}")),
            ],
        ));
    }
    for i in 0..n {
        requests.push(Request::new(
            "whereIs()",
            vec![Value::text(format!("name{i}"))],
        ));
    }
    requests
}
