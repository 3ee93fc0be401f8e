//! Parser for the composition DSL.
//!
//! ```text
//! composition := term ("+" term)*
//! term        := ["*"] kind "(" int ")" ["^" int]
//! kind        := "P" | "C" | "K"
//! ```
//!
//! `K(n)` is sugar for `P(n)^(n-1)` and takes no exponent. Whitespace is
//! ignored everywhere.

use super::composition::{ComponentSpec, Composition, Kind};
use crate::error::{Error, Result};

pub fn parse_composition(text: &str) -> Result<Composition> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let mut components = Vec::new();
    let mut starred: Option<(usize, usize)> = None;

    loop {
        p.skip_ws();
        let term_start = p.pos;
        if p.eat(b'*') {
            if let Some((_, first)) = starred {
                return Err(Error::Semantic(format!(
                    "second '*' at byte {term_start}; the first was at byte {first}"
                )));
            }
            starred = Some((components.len(), term_start));
        }
        components.push(p.term()?);
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'+') => p.pos += 1,
            Some(c) => return Err(p.error(format!("expected '+' or end of input, found {:?}", c as char))),
        }
    }

    let distinguished = starred.map_or(0, |(i, _)| i);
    Composition::new(components, distinguished)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected {:?}", c as char)))
        }
    }

    fn error(&self, message: String) -> Error {
        Error::Syntax { offset: self.pos, message }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer".into()));
        }
        // digits only, so utf8 and parse can fail only on overflow
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(Error::Syntax { offset: start, message: "integer too large".into() })
    }

    fn term(&mut self) -> Result<ComponentSpec> {
        self.skip_ws();
        let kind = match self.peek() {
            Some(b'P') => Some(Kind::Path),
            Some(b'C') => Some(Kind::Cycle),
            Some(b'K') => None,
            Some(c) => return Err(self.error(format!("expected 'P', 'C' or 'K', found {:?}", c as char))),
            None => return Err(self.error("expected a component".into())),
        };
        self.pos += 1;
        self.expect(b'(')?;
        let size = self.int()?;
        self.expect(b')')?;
        let spec = match kind {
            Some(kind) => {
                let power = if self.eat(b'^') { self.int()? } else { 1 };
                ComponentSpec { kind, size, power }
            }
            None => {
                if self.eat(b'^') {
                    return Err(self.error("K(n) takes no exponent".into()));
                }
                if size < 1 {
                    return Err(Error::Semantic("K(0) has no vertices".into()));
                }
                ComponentSpec::complete(size)
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}
