//! Scenario line format: `<op> :: <arg1> | <arg2> | ...`.
//!
//! Tokens are trimmed individually; `<op> ::` alone means no arguments.
//! A token that looks like a numeric literal (optional minus, digits,
//! optional fraction, matching the expression grammar) becomes a number,
//! anything else stays text. Empty lines and `#` comments are skipped by
//! the caller, which also knows the line number to report on errors.

use evalserve_core::{Request, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScenarioError {
    #[error("missing \"::\" separator")]
    MissingSeparator,
    #[error("missing operation name")]
    MissingOp,
}

pub fn parse_scenario_line(line: &str) -> Result<Request, ScenarioError> {
    let (op_part, args_part) = line
        .split_once("::")
        .ok_or(ScenarioError::MissingSeparator)?;
    let op = op_part.trim();
    if op.is_empty() {
        return Err(ScenarioError::MissingOp);
    }
    let rest = args_part.trim();
    let args = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split('|').map(parse_token).collect()
    };
    Ok(Request::new(op, args))
}

fn parse_token(token: &str) -> Value {
    let token = token.trim();
    if is_numeric_literal(token) {
        Value::Num(token.parse().expect("checked numeric literal"))
    } else {
        Value::text(token)
    }
}

fn is_numeric_literal(token: &str) -> bool {
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let unsigned = token.strip_prefix('-').unwrap_or(token);
    match unsigned.split_once('.') {
        Some((int, frac)) => digits(int) && digits(frac),
        None => digits(unsigned),
    }
}
