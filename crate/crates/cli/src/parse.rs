//! Text syntax for Q̄-monomials and bracket expressions.
//!
//! ```text
//! monomial := ( "Q" digits )*        separated by whitespace
//! expr     := "x" digits | "[" expr "," expr "]" | "Q" digits expr
//! ```
//!
//! Leading zeros are accepted (`Q07` is `Q7`). Positions in errors are
//! 0-based byte offsets.

use derivlie::hall::{BracketExpr, Letter};
use derivlie::QbarMonomial;

use crate::CliError;

fn error(pos: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        pos,
        msg: msg.into(),
    }
}

fn digits_at(text: &str, start: usize) -> Result<(u32, usize), CliError> {
    let end = text[start..]
        .find(|c: char| !c.is_ascii_digit())
        .map_or(text.len(), |i| start + i);
    if end == start {
        return Err(error(start, "expected digits"));
    }
    let value = text[start..end]
        .parse::<u32>()
        .map_err(|_| error(start, "number too large"))?;
    Ok((value, end))
}

pub fn parse_monomial(text: &str) -> Result<QbarMonomial, CliError> {
    let mut entries = Vec::new();
    let mut pos = 0;
    for token in text.split_whitespace() {
        let start = pos + text[pos..].find(token).expect("token comes from text");
        if !token.starts_with('Q') {
            return Err(error(start, format!("expected Q<digits>, found {token:?}")));
        }
        let (j, end) = digits_at(text, start + 1)?;
        if end != start + token.len() {
            return Err(error(end, format!("unexpected character in {token:?}")));
        }
        entries.push(j);
        pos = end;
    }
    Ok(QbarMonomial::new(entries))
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    letters: &'a [Letter],
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..]
                .chars()
                .next()
                .map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(error(self.pos, format!("expected {c:?}, found {d:?}"))),
            None => Err(error(
                self.pos,
                format!("expected {c:?}, found end of input"),
            )),
        }
    }

    fn expr(&mut self) -> Result<BracketExpr, CliError> {
        match self.peek() {
            Some('x') => {
                let at = self.pos;
                let (i, end) = digits_at(self.text, self.pos + 1)?;
                self.pos = end;
                let letter = (i as usize)
                    .checked_sub(1)
                    .and_then(|k| self.letters.get(k))
                    .ok_or_else(|| {
                        error(
                            at,
                            format!(
                                "x{i} is not declared ({} degrees given)",
                                self.letters.len()
                            ),
                        )
                    })?;
                Ok(BracketExpr::Letter(*letter))
            }
            Some('[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(BracketExpr::bracket(a, b))
            }
            Some('Q') => {
                let (j, end) = digits_at(self.text, self.pos + 1)?;
                self.pos = end;
                Ok(BracketExpr::apply(j, self.expr()?))
            }
            Some(c) => Err(error(self.pos, format!("unexpected {c:?}"))),
            None => Err(error(self.pos, "unexpected end of input")),
        }
    }
}

/// Parses an expression whose letter `x<i>` has degree `letters[i-1]`.
pub fn parse_bracket(text: &str, letters: &[Letter]) -> Result<BracketExpr, CliError> {
    let mut p = Parser {
        text,
        pos: 0,
        letters,
    };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(error(p.pos, format!("trailing {c:?}")));
    }
    Ok(e)
}
