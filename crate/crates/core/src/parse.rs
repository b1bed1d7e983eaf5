//! Recursive-descent parser for the textual expression syntax.
//!
//! Grammar, LL(1), with arbitrary whitespace between tokens:
//!
//! ```text
//! expr   := "con" number | "div" "(" expr "," expr ")"
//! number := ["-"] digits ["." digits]
//! ```

use thiserror::Error;

use crate::expr::Expr;

/// A parse failure at a 1-based character position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {position}: expected {expected}")]
pub struct ParseError {
    /// 1-based character position of the offending input.
    pub position: usize,
    /// Description of the token the parser was looking for.
    pub expected: String,
}

/// Parses `con <number>` / `div(<expr>, <expr>)` text into an expression.
/// Trailing input after a complete expression is an error.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser::new(src);
    parser.skip_ws();
    let expr = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.error("end of input"));
    }
    Ok(expr)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.pos + 1,
            expected: expected.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        if self.eat_keyword("con") {
            self.skip_ws();
            let value = self.number()?;
            Ok(Expr::Con(value))
        } else if self.eat_keyword("div") {
            self.skip_ws();
            self.expect('(')?;
            self.skip_ws();
            let left = self.expr()?;
            self.skip_ws();
            self.expect(',')?;
            self.skip_ws();
            let right = self.expr()?;
            self.skip_ws();
            self.expect(')')?;
            Ok(Expr::div(left, right))
        } else {
            Err(self.error("\"con\" or \"div\""))
        }
    }

    fn eat_keyword(&mut self, keyword: &str) -> bool {
        let mut end = self.pos;
        for expected in keyword.chars() {
            if self.chars.get(end) != Some(&expected) {
                return false;
            }
            end += 1;
        }
        self.pos = end;
        true
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("\"{c}\"")))
        }
    }

    fn number(&mut self) -> Result<f64, ParseError> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let expected = if self.pos == start {
                "a number"
            } else {
                "a digit"
            };
            return Err(self.error(expected));
        }
        self.eat_digits();
        if self.peek() == Some('.') {
            self.pos += 1;
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.error("a digit"));
            }
            self.eat_digits();
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        Ok(text.parse().expect("matched digits form a valid number"))
    }

    fn eat_digits(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
    }
}
