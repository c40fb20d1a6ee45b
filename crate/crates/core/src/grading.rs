//! Bidegrees and finite rectangular windows of them.

use std::fmt;
use thiserror::Error;

/// A bidegree `(p, q)`: topological degree `p`, weight `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bidegree {
    pub p: i64,
    pub q: i64,
}

impl Bidegree {
    pub const fn new(p: i64, q: i64) -> Self {
        Bidegree { p, q }
    }

    pub const fn shifted(self, a: i64, b: i64) -> Self {
        Bidegree {
            p: self.p + a,
            q: self.q + b,
        }
    }

    /// Offset `q - p` of the ρ-diagonal through this bidegree.
    pub const fn diagonal(self) -> i64 {
        self.q - self.p
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("empty window: p in [{p0},{p1}], q in [{q0},{q1}]")]
pub struct EmptyWindow {
    pub p0: i64,
    pub p1: i64,
    pub q0: i64,
    pub q1: i64,
}

/// Closed rectangle `[p0, p1] x [q0, q1]`, both ranges nonempty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    p0: i64,
    p1: i64,
    q0: i64,
    q1: i64,
}

impl Window {
    pub fn new(p0: i64, p1: i64, q0: i64, q1: i64) -> Result<Self, EmptyWindow> {
        if p0 > p1 || q0 > q1 {
            return Err(EmptyWindow { p0, p1, q0, q1 });
        }
        Ok(Window { p0, p1, q0, q1 })
    }

    /// Square window `[lo, hi]^2`.
    pub fn square(lo: i64, hi: i64) -> Result<Self, EmptyWindow> {
        Window::new(lo, hi, lo, hi)
    }

    pub fn p_range(&self) -> std::ops::RangeInclusive<i64> {
        self.p0..=self.p1
    }

    pub fn q_range(&self) -> std::ops::RangeInclusive<i64> {
        self.q0..=self.q1
    }

    pub fn contains(&self, at: Bidegree) -> bool {
        self.p_range().contains(&at.p) && self.q_range().contains(&at.q)
    }

    /// All bidegrees, `p` outer and `q` inner, ascending.
    pub fn iter(&self) -> impl Iterator<Item = Bidegree> + '_ {
        self.p_range()
            .flat_map(move |p| self.q_range().map(move |q| Bidegree::new(p, q)))
    }

    pub fn bounds(&self) -> (i64, i64, i64, i64) {
        (self.p0, self.p1, self.q0, self.q1)
    }
}

impl Default for Window {
    fn default() -> Self {
        Window {
            p0: -5,
            p1: 7,
            q0: -8,
            q1: 8,
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]x[{},{}]", self.p0, self.p1, self.q0, self.q1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_iteration_covers_rectangle() {
        let w = Window::new(0, 1, -1, 1).unwrap();
        assert_eq!(w.iter().count(), 6);
        assert!(w.contains(Bidegree::new(1, -1)));
        assert!(!w.contains(Bidegree::new(2, 0)));
    }

    #[test]
    fn empty_ranges_rejected() {
        assert!(Window::new(1, 0, 0, 0).is_err());
        assert!(Window::new(0, 0, 2, 1).is_err());
    }
}
