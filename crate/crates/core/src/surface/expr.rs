//! Surgery expressions and their text syntax.
//!
//! ```text
//! expr   := base | expr "#2" closed | expr "+" nat "[" kind "]"
//! base   := "S2a" | "S21" | "S22" | "T1rot" | "T1anti" | "X(" nat ")"
//! closed := "T(" nat ")" | "N(" nat ")"
//! kind   := "S10-AT" | "S11-AT" | "FM"
//! ```
//! Operators associate to the left and whitespace is ignored.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {position}: {message}")]
pub struct ParseError {
    /// Zero-based character offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    /// Antipodal sphere.
    S2a,
    /// Sphere with reflection across the equator.
    S21,
    /// Sphere with a half-turn.
    S22,
    /// Torus with a free rotation.
    T1rot,
    /// Torus with a free orientation-reversing involution.
    T1anti,
    /// Two mapping cylinders of degree-`k` circle maps joined along a
    /// circle with reflection; a surface only for `k = 2`.
    X(u32),
}

/// Closed surface glued in by a double connected sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Closed {
    T(u32),
    N(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AttachKind {
    /// Tube carrying a fixed circle.
    S10At,
    /// Tube carrying two isolated fixed points.
    S11At,
    /// Replaces an isolated fixed point by a one-sided fixed circle.
    Fm,
}

impl AttachKind {
    pub const ALL: [AttachKind; 3] = [AttachKind::S10At, AttachKind::S11At, AttachKind::Fm];

    pub fn name(self) -> &'static str {
        match self {
            AttachKind::S10At => "S10-AT",
            AttachKind::S11At => "S11-AT",
            AttachKind::Fm => "FM",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SurfaceExpr {
    Base(Base),
    ConnSum2(Box<SurfaceExpr>, Closed),
    Attach(Box<SurfaceExpr>, u32, AttachKind),
}

impl SurfaceExpr {
    pub fn base(b: Base) -> Self {
        SurfaceExpr::Base(b)
    }

    pub fn conn_sum2(self, y: Closed) -> Self {
        SurfaceExpr::ConnSum2(Box::new(self), y)
    }

    pub fn attach(self, count: u32, kind: AttachKind) -> Self {
        SurfaceExpr::Attach(Box::new(self), count, kind)
    }

    pub fn root(&self) -> Base {
        match self {
            SurfaceExpr::Base(b) => *b,
            SurfaceExpr::ConnSum2(e, _) | SurfaceExpr::Attach(e, _, _) => e.root(),
        }
    }

    /// Number of surgery steps applied to the base.
    pub fn depth(&self) -> usize {
        match self {
            SurfaceExpr::Base(_) => 0,
            SurfaceExpr::ConnSum2(e, _) | SurfaceExpr::Attach(e, _, _) => 1 + e.depth(),
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::S2a => f.write_str("S2a"),
            Base::S21 => f.write_str("S21"),
            Base::S22 => f.write_str("S22"),
            Base::T1rot => f.write_str("T1rot"),
            Base::T1anti => f.write_str("T1anti"),
            Base::X(k) => write!(f, "X({k})"),
        }
    }
}

impl fmt::Display for Closed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Closed::T(g) => write!(f, "T({g})"),
            Closed::N(r) => write!(f, "N({r})"),
        }
    }
}

impl fmt::Display for SurfaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceExpr::Base(b) => write!(f, "{b}"),
            SurfaceExpr::ConnSum2(e, y) => write!(f, "{e} #2 {y}"),
            SurfaceExpr::Attach(e, n, k) => write!(f, "{e} + {n}[{}]", k.name()),
        }
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |c| c.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|c| c.1)
    }

    fn eat(&mut self, word: &str) -> bool {
        let n = word.chars().count();
        let matches = self.chars.len() >= self.at + n
            && self.chars[self.at..self.at + n]
                .iter()
                .map(|c| c.1)
                .eq(word.chars());
        if matches {
            self.at += n;
        }
        matches
    }

    fn expect(&mut self, word: &str) -> Result<(), ParseError> {
        if self.eat(word) {
            Ok(())
        } else {
            self.err(format!("expected {word:?}"))
        }
    }

    fn nat(&mut self) -> Result<u32, ParseError> {
        let start = self.at;
        let mut v: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            v = v * 10 + d as u64;
            if v > u32::MAX as u64 {
                return self.err("number too large");
            }
            self.at += 1;
        }
        if self.at == start {
            return self.err("expected a natural number");
        }
        Ok(v as u32)
    }

    fn positive(&mut self, min: u32, what: &str) -> Result<u32, ParseError> {
        let pos = self.pos();
        let v = self.nat()?;
        if v < min {
            return Err(ParseError {
                position: pos,
                message: format!("{what} must be at least {min}, got {v}"),
            });
        }
        Ok(v)
    }

    fn base(&mut self) -> Result<Base, ParseError> {
        for (word, b) in [
            ("S2a", Base::S2a),
            ("S21", Base::S21),
            ("S22", Base::S22),
            ("T1rot", Base::T1rot),
            ("T1anti", Base::T1anti),
        ] {
            if self.eat(word) {
                return Ok(b);
            }
        }
        if self.eat("X(") {
            let k = self.positive(2, "X(k) parameter")?;
            self.expect(")")?;
            return Ok(Base::X(k));
        }
        self.err("expected a base surface (S2a, S21, S22, T1rot, T1anti, X(k))")
    }

    fn closed(&mut self) -> Result<Closed, ParseError> {
        if self.eat("T(") {
            let g = self.positive(1, "genus")?;
            self.expect(")")?;
            Ok(Closed::T(g))
        } else if self.eat("N(") {
            let r = self.positive(1, "crosscap count")?;
            self.expect(")")?;
            Ok(Closed::N(r))
        } else {
            self.err("expected T(g) or N(r)")
        }
    }

    fn kind(&mut self) -> Result<AttachKind, ParseError> {
        for k in AttachKind::ALL {
            if self.eat(k.name()) {
                return Ok(k);
            }
        }
        self.err("expected S10-AT, S11-AT or FM")
    }

    fn expr(&mut self) -> Result<SurfaceExpr, ParseError> {
        let mut e = SurfaceExpr::Base(self.base()?);
        loop {
            if self.eat("#2") {
                e = e.conn_sum2(self.closed()?);
            } else if self.eat("+") {
                let n = self.positive(1, "attachment count")?;
                self.expect("[")?;
                let k = self.kind()?;
                self.expect("]")?;
                e = e.attach(n, k);
            } else if self.peek().is_none() {
                return Ok(e);
            } else {
                return self.err("expected \"#2\", \"+\" or end of input");
            }
        }
    }
}

/// Parses an expression; whitespace anywhere is ignored.
pub fn parse(text: &str) -> Result<SurfaceExpr, ParseError> {
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser {
        chars,
        at: 0,
        end: text.chars().count(),
    };
    p.expr()
}

impl std::str::FromStr for SurfaceExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        assert_eq!(
            parse("S2a #2 N(1)").unwrap(),
            SurfaceExpr::base(Base::S2a).conn_sum2(Closed::N(1))
        );
        assert_eq!(
            parse("S22 + 2[S11-AT]").unwrap(),
            SurfaceExpr::base(Base::S22).attach(2, AttachKind::S11At)
        );
        let e = parse("S22 + 1[FM] + 1[FM]").unwrap();
        assert_eq!(e.depth(), 2);
        assert_eq!(parse(" X ( 4 ) ").unwrap(), SurfaceExpr::base(Base::X(4)));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "T1anti #2 T(2) + 1[S10-AT]",
            "S21 + 3[S10-AT] + 1[FM] #2 N(2)",
            "X(3)",
        ] {
            let e = parse(s).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("S22 + 0[FM]").unwrap_err();
        assert_eq!(e.position, 6);
        let e = parse("S22 #2 K(1)").unwrap_err();
        assert_eq!(e.position, 7);
        assert!(parse("X(1)").is_err());
        assert!(parse("").is_err());
        assert!(parse("S22 S22").is_err());
    }
}
