//! S-expression text form:
//!
//! ```text
//! (port COLOUR NAME)
//! (union E1 E2)
//! (recolour FROM TO E)
//! (connect FROM TO E)
//! ```
//!
//! Colours and names are atoms: any run of characters other than whitespace
//! and parentheses. `Display` pretty-prints one operator per line, children
//! indented by two spaces; the output is stable and parses back.

use std::fmt::{self, Write};

use super::{CwError, CwExpr};

impl fmt::Display for CwExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        write_expr(self, 0, &mut out);
        f.write_str(&out)
    }
}

fn write_expr(e: &CwExpr, indent: usize, out: &mut String) {
    let pad = |out: &mut String, depth: usize| {
        out.push('\n');
        out.extend(std::iter::repeat_n(' ', depth));
    };
    match e {
        CwExpr::Port { colour, name } => {
            let _ = write!(out, "(port {colour} {name})");
        }
        CwExpr::Union(l, r) => {
            out.push_str("(union");
            pad(out, indent + 2);
            write_expr(l, indent + 2, out);
            pad(out, indent + 2);
            write_expr(r, indent + 2, out);
            out.push(')');
        }
        CwExpr::Recolour { from, to, child } | CwExpr::Connect { from, to, child } => {
            let op = if matches!(e, CwExpr::Recolour { .. }) { "recolour" } else { "connect" };
            let _ = write!(out, "({op} {from} {to}");
            pad(out, indent + 2);
            write_expr(child, indent + 2, out);
            out.push(')');
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(text: &str) -> Vec<(usize, Token<'_>)> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        match ch {
            '(' => {
                tokens.push((i, Token::Open));
                chars.next();
            }
            ')' => {
                tokens.push((i, Token::Close));
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            _ => {
                let mut end = i;
                while let Some(&(j, c)) = chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' {
                        break;
                    }
                    end = j + c.len_utf8();
                    chars.next();
                }
                tokens.push((i, Token::Atom(&text[i..end])));
            }
        }
    }
    tokens
}

struct Parser<'a> {
    tokens: Vec<(usize, Token<'a>)>,
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> CwError {
        let offset = self.tokens.get(self.pos).map_or(self.len, |t| t.0);
        CwError::Parse {
            offset,
            message: message.into(),
        }
    }

    fn next(&mut self) -> Option<Token<'a>> {
        let t = self.tokens.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    fn atom(&mut self, what: &str) -> Result<&'a str, CwError> {
        match self.tokens.get(self.pos) {
            Some((_, Token::Atom(a))) => {
                self.pos += 1;
                Ok(a)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn close(&mut self) -> Result<(), CwError> {
        match self.tokens.get(self.pos) {
            Some((_, Token::Close)) => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error("expected ')'")),
        }
    }

    fn expr(&mut self) -> Result<CwExpr, CwError> {
        if self.tokens.get(self.pos).map(|t| &t.1) != Some(&Token::Open) {
            return Err(self.error("expected '('"));
        }
        self.next();
        let op = self.atom("operator")?;
        let e = match op {
            "port" => {
                let colour = self.atom("colour")?;
                let name = self.atom("name")?;
                CwExpr::port(colour, name)
            }
            "union" => {
                let l = self.expr()?;
                let r = self.expr()?;
                CwExpr::union(l, r)
            }
            "recolour" | "connect" => {
                let from = self.atom("colour")?;
                let to = self.atom("colour")?;
                let child = self.expr()?;
                if op == "recolour" {
                    CwExpr::recolour(from, to, child)
                } else {
                    CwExpr::connect(from, to, child)
                }
            }
            other => {
                self.pos -= 1;
                return Err(self.error(format!("unknown operator {other:?}")));
            }
        };
        self.close()?;
        Ok(e)
    }
}

/// Parses one expression; trailing input other than whitespace is an error.
pub fn parse_expr(text: &str) -> Result<CwExpr, CwError> {
    let mut p = Parser {
        tokens: tokenize(text),
        pos: 0,
        len: text.len(),
    };
    let e = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}
