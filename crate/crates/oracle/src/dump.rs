//! Plain-text listing of an equivariant complex.

use crate::complex::EquivariantComplex;
use std::fmt::Write;

/// Cell counts, face lists and the involution, one cell per line.
pub fn dump(c: &EquivariantComplex) -> String {
    let x = c.complex();
    let mut out = String::new();
    let [n0, n1, n2] = x.cell_counts();
    writeln!(out, "cells {n0} {n1} {n2}").unwrap();
    for v in 0..n0 {
        writeln!(out, "v{v} sigma v{}", c.sigma(0)[v]).unwrap();
    }
    for (e, [d0, d1]) in x.edges().iter().enumerate() {
        writeln!(out, "e{e} d0 v{d0} d1 v{d1} sigma e{}", c.sigma(1)[e]).unwrap();
    }
    for (t, [d0, d1, d2]) in x.triangles().iter().enumerate() {
        writeln!(
            out,
            "t{t} d0 e{d0} d1 e{d1} d2 e{d2} sigma t{}",
            c.sigma(2)[t]
        )
        .unwrap();
    }
    out
}
