//! Walk text format: `h,x,c` vertices joined by `;`, no whitespace.
//! The empty string is the empty walk.

use alloc::vec::Vec;
use core::fmt;

use super::{Color, Vertex, Walk};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseWalkError {
    pub kind: ParseWalkErrorKind,
    /// Byte offset of the offending character (or end of input).
    pub position: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseWalkErrorKind {
    ExpectedDigit,
    ExpectedComma,
    ExpectedColor,
    ExpectedSeparator,
    IntegerOutOfRange,
}

impl fmt::Display for ParseWalkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ParseWalkErrorKind::ExpectedDigit => "expected digit",
            ParseWalkErrorKind::ExpectedComma => "expected ','",
            ParseWalkErrorKind::ExpectedColor => "expected color b|r|g|w",
            ParseWalkErrorKind::ExpectedSeparator => "expected ';' or end of input",
            ParseWalkErrorKind::IntegerOutOfRange => "integer out of range",
        };
        write!(f, "{} at byte {}", what, self.position)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, kind: ParseWalkErrorKind) -> ParseWalkError {
        ParseWalkError { kind, position: self.pos }
    }

    fn uint(&mut self) -> Result<i32, ParseWalkError> {
        let start = self.pos;
        let mut value: i64 = 0;
        while let Some(b @ b'0'..=b'9') = self.peek() {
            value = value * 10 + i64::from(b - b'0');
            if value > i64::from(i32::MAX) {
                return Err(ParseWalkError { kind: ParseWalkErrorKind::IntegerOutOfRange, position: start });
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err(ParseWalkErrorKind::ExpectedDigit));
        }
        Ok(value as i32)
    }

    fn comma(&mut self) -> Result<(), ParseWalkError> {
        if self.peek() == Some(b',') {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(ParseWalkErrorKind::ExpectedComma))
        }
    }

    fn color(&mut self) -> Result<Color, ParseWalkError> {
        let c = self
            .peek()
            .and_then(|b| Color::from_char(b as char))
            .ok_or_else(|| self.err(ParseWalkErrorKind::ExpectedColor))?;
        self.pos += 1;
        Ok(c)
    }

    fn vertex(&mut self) -> Result<Vertex, ParseWalkError> {
        let h = self.uint()?;
        self.comma()?;
        let x = self.uint()?;
        self.comma()?;
        let c = self.color()?;
        Ok(Vertex::new(h, x, c))
    }
}

pub(super) fn parse(input: &str) -> Result<Walk, ParseWalkError> {
    if input.is_empty() {
        return Ok(Walk::empty());
    }
    let mut cur = Cursor { bytes: input.as_bytes(), pos: 0 };
    let mut vertices = Vec::new();
    loop {
        vertices.push(cur.vertex()?);
        match cur.peek() {
            None => break,
            Some(b';') => cur.pos += 1,
            Some(_) => return Err(cur.err(ParseWalkErrorKind::ExpectedSeparator)),
        }
    }
    Ok(Walk::new(vertices))
}
