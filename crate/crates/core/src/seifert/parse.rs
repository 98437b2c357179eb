use super::SeifertData;
use crate::error::{Error, Result};

/// Parses `(b,g;(a1,b1),...,(ak,bk))`. Whitespace is allowed between tokens;
/// the pair list may be empty, written `(b,g;)` or `(b,g)`. The result is not
/// normalized.
pub fn parse_seifert(text: &str) -> Result<SeifertData> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.expect(b'(')?;
    let b = p.integer()?;
    p.expect(b',')?;
    let genus = p.integer()?;
    if genus < 0 {
        return Err(Error::NegativeGenus(genus));
    }
    let mut pairs = Vec::new();
    if p.peek() == Some(b';') {
        p.pos += 1;
        if p.peek() == Some(b'(') {
            loop {
                p.expect(b'(')?;
                let alpha = p.integer()?;
                p.expect(b',')?;
                let beta = p.integer()?;
                p.expect(b')')?;
                if alpha <= 0 {
                    return Err(Error::NonPositiveAlpha(alpha));
                }
                pairs.push((alpha, beta));
                if p.peek() == Some(b',') {
                    p.pos += 1;
                    continue;
                }
                break;
            }
        }
    }
    p.expect(b')')?;
    if p.skip_ws() != text.len() {
        return Err(p.error("trailing characters"));
    }
    SeifertData::new(b, genus, pairs)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) -> usize {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        self.pos
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(self.error(&format!("expected '{}', found '{}'", c as char, x as char))),
            None => Err(self.error(&format!("expected '{}', found end of input", c as char))),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        s.parse().map_err(|_| Error::Syntax { pos: start, msg: format!("integer '{s}' out of range") })
    }
}
