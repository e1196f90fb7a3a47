//! Text syntax for group specs.
//!
//! ```text
//! atom   := "C"int | "D"int | "QD"int("+"|"-") | "Q"int | "S"int | "A"int
//!         | "SL2("int")" | "file:"path
//! factor := atom | "GD(" expr ")" | "W(" expr "," int "," atom ")"
//!         | "SD(" expr "," expr "," "file:"path ")" | "(" expr ")"
//! term   := factor [ "^" int ]
//! expr   := term { "x" term }
//! ```
//!
//! Whitespace is ignored everywhere. `Q`n is the dicyclic group OF ORDER n
//! (so `Q8` is the quaternion group), `D`n the dihedral group of order 2n.
//! `^` repeats a factor in a direct product and `x` is the direct product.
//! Semidirect products take their phi table from a JSON sidecar
//! `{"phi": [[...], ...]}` mapping each acting-element index to a
//! permutation of the normal subgroup's indices.

use std::path::PathBuf;

use thiserror::Error;

use crate::group::{GroupSpec, PhiTable, Sign};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: expected {expected}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err(&format!("'{token}'")))
        }
    }

    fn err(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.pos,
            expected: expected.to_string(),
        }
    }

    fn integer(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("an integer"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError {
                position: start,
                expected: "a smaller integer".into(),
            })
    }

    fn path(&mut self) -> Result<PathBuf, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len()
            && !matches!(self.text[self.pos], b',' | b')' | b' ' | b'\t' | b'\n')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("a file path"));
        }
        Ok(PathBuf::from(
            std::str::from_utf8(&self.text[start..self.pos]).unwrap(),
        ))
    }

    fn expr(&mut self) -> Result<GroupSpec, ParseError> {
        let mut parts = vec![self.term()?];
        while self.peek() == Some(b'x') {
            self.pos += 1;
            parts.push(self.term()?);
        }
        if parts.len() == 1 {
            return Ok(parts.pop().unwrap());
        }
        // flatten nested direct products so Q8xC2^2 has three flat factors
        let flat: Vec<GroupSpec> = parts
            .into_iter()
            .flat_map(|p| match p {
                GroupSpec::DirectProduct(inner) => inner,
                other => vec![other],
            })
            .collect();
        Ok(GroupSpec::DirectProduct(flat))
    }

    fn term(&mut self) -> Result<GroupSpec, ParseError> {
        let base = self.factor()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            if e == 0 {
                return Err(self.err("a positive exponent"));
            }
            if e > 1 {
                return Ok(GroupSpec::DirectProduct(vec![base; e]));
            }
        }
        Ok(base)
    }

    fn factor(&mut self) -> Result<GroupSpec, ParseError> {
        self.skip_ws();
        if self.eat("GD(") {
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(GroupSpec::GeneralizedDihedral(Box::new(inner)));
        }
        if self.eat("W(") {
            let base = self.expr()?;
            self.expect(",")?;
            let copies = self.integer()?;
            self.expect(",")?;
            let action = self.atom()?;
            self.expect(")")?;
            return Ok(GroupSpec::WreathProduct {
                base: Box::new(base),
                copies,
                action: Box::new(action),
            });
        }
        if self.eat("SD(") {
            let normal = self.expr()?;
            self.expect(",")?;
            let acting = self.expr()?;
            self.expect(",")?;
            self.expect("file:")?;
            let path = self.path()?;
            self.expect(")")?;
            return Ok(GroupSpec::SemidirectProduct {
                normal: Box::new(normal),
                acting: Box::new(acting),
                phi: PhiTable::File(path),
            });
        }
        if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(inner);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<GroupSpec, ParseError> {
        self.skip_ws();
        if self.eat("file:") {
            return Ok(GroupSpec::FromFile(self.path()?));
        }
        if self.eat("SL2(") {
            let q = self.integer()?;
            self.expect(")")?;
            return Ok(GroupSpec::Sl2(q as u64));
        }
        // QD before Q, SL2 before S (handled above)
        if self.eat("QD") {
            let n = self.integer()?;
            let sign = match self.text.get(self.pos) {
                Some(b'+') => Sign::Plus,
                Some(b'-') => Sign::Minus,
                _ => return Err(self.err("'+' or '-'")),
            };
            self.pos += 1;
            return Ok(GroupSpec::Quasidihedral(n as u32, sign));
        }
        match self.peek() {
            Some(b'C') => {
                self.pos += 1;
                Ok(GroupSpec::Cyclic(self.integer()?))
            }
            Some(b'D') => {
                self.pos += 1;
                Ok(GroupSpec::Dihedral(self.integer()?))
            }
            Some(b'Q') => {
                self.pos += 1;
                let order = self.integer()?;
                if order % 4 != 0 || order < 8 {
                    Err(ParseError {
                        position: self.pos,
                        expected: "a dicyclic order divisible by 4 (at least 8)".into(),
                    })
                } else {
                    Ok(GroupSpec::Dicyclic(order / 4))
                }
            }
            Some(b'S') => {
                self.pos += 1;
                Ok(GroupSpec::Symmetric(self.integer()?))
            }
            Some(b'A') => {
                self.pos += 1;
                Ok(GroupSpec::Alternating(self.integer()?))
            }
            _ => Err(self
                .err("'C', 'D', 'Q', 'QD', 'S', 'A', 'SL2(', 'file:', 'GD(', 'W(', 'SD(' or '('")),
        }
    }
}

/// Parse the group-spec syntax.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut parser = Parser::new(text);
    let spec = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.text.len() {
        return Err(ParseError {
            position: parser.pos,
            expected: "end of input".into(),
        });
    }
    Ok(spec)
}
