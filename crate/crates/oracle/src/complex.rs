//! Two-dimensional Δ-complexes, involutions on them, and their integral
//! cohomology.

use eqsurf_core::snf::{smith_form_sparse, SparseMatrix};
use eqsurf_core::FinAbGroup;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("{dim}-cell {cell} has a face index out of range")]
    FaceOutOfRange { dim: usize, cell: usize },
    #[error("boundary of triangle {0} is not a cycle")]
    BoundaryNotClosed(usize),
    #[error("involution table for dimension {dim} has length {got}, expected {expected}")]
    LengthMismatch {
        dim: usize,
        got: usize,
        expected: usize,
    },
    #[error("involution does not square to the identity on {dim}-cell {cell}")]
    NotInvolution { dim: usize, cell: usize },
    #[error("involution does not commute with the faces of {dim}-cell {cell}")]
    NotCellular { dim: usize, cell: usize },
    #[error("{dim}-cell {cell} is fixed setwise but moves one of its faces")]
    Irregular { dim: usize, cell: usize },
}

/// A Δ-complex of dimension at most two.
///
/// `edges[e] = [d0, d1]` lists end then start vertex; `triangles[t]` lists
/// the faces `d0, d1, d2` opposite the vertices in order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DeltaComplex {
    vertices: usize,
    edges: Vec<[usize; 2]>,
    triangles: Vec<[usize; 3]>,
}

impl DeltaComplex {
    pub fn new(
        vertices: usize,
        edges: Vec<[usize; 2]>,
        triangles: Vec<[usize; 3]>,
    ) -> Result<Self, ComplexError> {
        for (i, e) in edges.iter().enumerate() {
            if e.iter().any(|&v| v >= vertices) {
                return Err(ComplexError::FaceOutOfRange { dim: 1, cell: i });
            }
        }
        for (i, t) in triangles.iter().enumerate() {
            if t.iter().any(|&e| e >= edges.len()) {
                return Err(ComplexError::FaceOutOfRange { dim: 2, cell: i });
            }
        }
        let c = DeltaComplex {
            vertices,
            edges,
            triangles,
        };
        for i in 0..c.triangles.len() {
            if !c.triangle_boundary_closes(i) {
                return Err(ComplexError::BoundaryNotClosed(i));
            }
        }
        Ok(c)
    }

    /// Simplicial identities: `d_i d_j = d_{j-1} d_i` for `i < j`.
    fn triangle_boundary_closes(&self, t: usize) -> bool {
        let [e0, e1, e2] = self.triangles[t];
        let (a, b, c) = (self.edges[e0], self.edges[e1], self.edges[e2]);
        // vertex 2 = d0 e0 = d0 e1, vertex 1 = d1 e0 = d0 e2, vertex 0 = d1 e1 = d1 e2
        a[0] == b[0] && a[1] == c[0] && b[1] == c[1]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn cell_counts(&self) -> [usize; 3] {
        [self.vertices, self.edges.len(), self.triangles.len()]
    }

    /// Ordered vertices `v0, v1, v2` of a triangle.
    pub fn triangle_vertices(&self, t: usize) -> [usize; 3] {
        let [_, e1, e2] = self.triangles[t];
        [self.edges[e1][1], self.edges[e2][0], self.edges[e1][0]]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// Boundary matrix from `dim`-chains to `(dim-1)`-chains.
    pub fn boundary(&self, dim: usize) -> SparseMatrix {
        let counts = self.cell_counts();
        match dim {
            1 => {
                let mut m = SparseMatrix::new(counts[0], counts[1]);
                for (i, &[end, start]) in self.edges.iter().enumerate() {
                    m.add(end, i, 1);
                    m.add(start, i, -1);
                }
                m
            }
            2 => {
                let mut m = SparseMatrix::new(counts[1], counts[2]);
                for (i, t) in self.triangles.iter().enumerate() {
                    for (k, &e) in t.iter().enumerate() {
                        m.add(e, i, if k % 2 == 0 { 1 } else { -1 });
                    }
                }
                m
            }
            _ => panic!("no boundary in dimension {dim}"),
        }
    }

    /// Integral cohomology in degrees 0, 1, 2.
    pub fn integral_cohomology(&self) -> CohomologyTable {
        let [n0, n1, n2] = self.cell_counts();
        let d1 = smith_form_sparse(&self.boundary(1));
        let d2 = smith_form_sparse(&self.boundary(2));
        let h0 = FinAbGroup::free(n0 - d1.rank);
        let h1 = FinAbGroup::from_cyclic_orders(
            &std::iter::repeat_n(0, n1 - d1.rank - d2.rank)
                .chain(d1.factors.iter().copied())
                .collect::<Vec<_>>(),
        );
        let h2 = FinAbGroup::from_cyclic_orders(
            &std::iter::repeat_n(0, n2 - d2.rank)
                .chain(d2.factors.iter().copied())
                .collect::<Vec<_>>(),
        );
        CohomologyTable {
            degrees: [h0, h1, h2],
        }
    }

    /// Dimension of `H^1(-; ℤ/2)`.
    pub fn mod2_first_betti(&self) -> usize {
        let n1 = self.edges.len();
        n1 - mod2_rank(&self.boundary(1)) - mod2_rank(&self.boundary(2))
    }
}

/// Integral cohomology of a complex of dimension at most two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    pub degrees: [FinAbGroup; 3],
}

impl CohomologyTable {
    pub fn degree(&self, n: i64) -> FinAbGroup {
        usize::try_from(n)
            .ok()
            .and_then(|i| self.degrees.get(i))
            .cloned()
            .unwrap_or_else(FinAbGroup::zero)
    }

    pub fn ranks(&self) -> [usize; 3] {
        [
            self.degrees[0].rank(),
            self.degrees[1].rank(),
            self.degrees[2].rank(),
        ]
    }

    pub fn euler_characteristic(&self) -> i64 {
        let r = self.ranks();
        r[0] as i64 - r[1] as i64 + r[2] as i64
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}, {}, {}",
            self.degrees[0], self.degrees[1], self.degrees[2]
        )
    }
}

/// Rank over ℤ/2 by elimination on packed rows.
pub fn mod2_rank(m: &SparseMatrix) -> usize {
    let words = m.cols().div_ceil(64);
    let mut rows = vec![vec![0u64; words]; m.rows()];
    for (r, c, v) in m.nonzeros() {
        if v.rem_euclid(2) == 1 {
            rows[r][c / 64] ^= 1 << (c % 64);
        }
    }
    let mut rank = 0;
    for c in 0..m.cols() {
        let (w, bit) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}

/// A Δ-complex with a cellular involution that preserves vertex order on
/// every cell, so all orientation signs are `+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantComplex {
    complex: DeltaComplex,
    sigma: [Vec<usize>; 3],
}

impl EquivariantComplex {
    /// Checks that `sigma` is an involution commuting with all face maps and
    /// that every setwise fixed cell is fixed pointwise.
    pub fn new(complex: DeltaComplex, sigma: [Vec<usize>; 3]) -> Result<Self, ComplexError> {
        let counts = complex.cell_counts();
        for dim in 0..3 {
            if sigma[dim].len() != counts[dim] {
                return Err(ComplexError::LengthMismatch {
                    dim,
                    got: sigma[dim].len(),
                    expected: counts[dim],
                });
            }
            for (cell, &s) in sigma[dim].iter().enumerate() {
                if s >= counts[dim] || sigma[dim][s] != cell {
                    return Err(ComplexError::NotInvolution { dim, cell });
                }
            }
        }
        for (cell, e) in complex.edges.iter().enumerate() {
            let image = complex.edges[sigma[1][cell]];
            if image != [sigma[0][e[0]], sigma[0][e[1]]] {
                return Err(ComplexError::NotCellular { dim: 1, cell });
            }
            if sigma[1][cell] == cell && e.iter().any(|&v| sigma[0][v] != v) {
                return Err(ComplexError::Irregular { dim: 1, cell });
            }
        }
        for (cell, t) in complex.triangles.iter().enumerate() {
            let image = complex.triangles[sigma[2][cell]];
            if image != [sigma[1][t[0]], sigma[1][t[1]], sigma[1][t[2]]] {
                return Err(ComplexError::NotCellular { dim: 2, cell });
            }
            if sigma[2][cell] == cell && t.iter().any(|&e| sigma[1][e] != e) {
                return Err(ComplexError::Irregular { dim: 2, cell });
            }
        }
        Ok(EquivariantComplex { complex, sigma })
    }

    pub fn complex(&self) -> &DeltaComplex {
        &self.complex
    }

    pub fn sigma(&self, dim: usize) -> &[usize] {
        &self.sigma[dim]
    }

    pub fn is_fixed(&self, dim: usize, cell: usize) -> bool {
        self.sigma[dim][cell] == cell
    }

    /// Pointwise fixed cells, as a complex with trivial action.
    pub fn fixed_subcomplex(&self) -> DeltaComplex {
        let c = &self.complex;
        let index = |dim: usize, n: usize| -> Vec<Option<usize>> {
            let mut next = 0;
            (0..n)
                .map(|i| {
                    self.is_fixed(dim, i).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        };
        let vi = index(0, c.vertices);
        let ei = index(1, c.edges.len());
        let ti = index(2, c.triangles.len());
        let edges = (0..c.edges.len())
            .filter(|&e| ei[e].is_some())
            .map(|e| c.edges[e].map(|v| vi[v].expect("faces of fixed cells are fixed")))
            .collect();
        let triangles = (0..c.triangles.len())
            .filter(|&t| ti[t].is_some())
            .map(|t| c.triangles[t].map(|e| ei[e].expect("faces of fixed cells are fixed")))
            .collect();
        DeltaComplex::new(vi.iter().flatten().count(), edges, triangles)
            .expect("subcomplex of a valid complex")
    }

    /// One cell per orbit, faces induced.
    pub fn quotient(&self) -> DeltaComplex {
        let c = &self.complex;
        let orbits = |dim: usize, n: usize| -> Vec<usize> {
            let mut id = vec![usize::MAX; n];
            let mut next = 0;
            for i in 0..n {
                if id[i] == usize::MAX {
                    id[i] = next;
                    id[self.sigma[dim][i]] = next;
                    next += 1;
                }
            }
            id
        };
        let vo = orbits(0, c.vertices);
        let eo = orbits(1, c.edges.len());
        let to = orbits(2, c.triangles.len());
        let count = |o: &[usize]| o.iter().max().map_or(0, |m| m + 1);
        let mut edges = vec![[0; 2]; count(&eo)];
        for (e, f) in c.edges.iter().enumerate() {
            edges[eo[e]] = f.map(|v| vo[v]);
        }
        let mut triangles = vec![[0; 3]; count(&to)];
        for (t, f) in c.triangles.iter().enumerate() {
            triangles[to[t]] = f.map(|e| eo[e]);
        }
        DeltaComplex::new(count(&vo), edges, triangles)
            .expect("quotient of a regular action is a Δ-complex")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two triangles glued into a square boundary-identified as a torus:
    /// one vertex, three edges, two triangles.
    fn minimal_torus() -> DeltaComplex {
        // edges: a (horizontal), b (vertical), c (diagonal), all loops at v
        DeltaComplex::new(1, vec![[0, 0]; 3], vec![[0, 2, 1], [1, 2, 0]]).unwrap()
    }

    #[test]
    fn torus_cohomology() {
        let h = minimal_torus().integral_cohomology();
        assert_eq!(
            h.degrees,
            [
                FinAbGroup::integers(),
                FinAbGroup::free(2),
                FinAbGroup::integers()
            ]
        );
        assert_eq!(minimal_torus().mod2_first_betti(), 2);
    }

    #[test]
    fn rejects_non_closing_boundary() {
        let e = DeltaComplex::new(2, vec![[1, 0], [0, 1], [0, 0]], vec![[0, 1, 2]]);
        assert_eq!(e, Err(ComplexError::BoundaryNotClosed(0)));
    }

    #[test]
    fn mod2_rank_of_small_matrix() {
        let mut m = SparseMatrix::new(2, 3);
        m.add(0, 0, 1);
        m.add(0, 1, 1);
        m.add(1, 0, 1);
        m.add(1, 1, 3);
        assert_eq!(mod2_rank(&m), 1);
    }
}
