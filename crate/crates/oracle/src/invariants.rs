//! Reading the classifying invariants off a regular equivariant complex.

use crate::complex::{DeltaComplex, EquivariantComplex};
use eqsurf_core::surface::{Character, Descriptor, FreeType};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("fixed vertex {0} has {1} fixed edges, so the fixed set is not a 1-manifold")]
    FixedSetBranches(usize, usize),
    #[error("triangle {0} is fixed, so the action is trivial near it")]
    FixedTriangle(usize),
}

/// A connected component of the fixed set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedComponent {
    Point { vertex: usize },
    Circle { vertices: usize, two_sided: bool },
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn edge_triangles(c: &DeltaComplex) -> Vec<Vec<(usize, i64)>> {
    let mut out = vec![Vec::new(); c.edges().len()];
    for (t, faces) in c.triangles().iter().enumerate() {
        for (k, &e) in faces.iter().enumerate() {
            out[e].push((t, if k % 2 == 0 { 1 } else { -1 }));
        }
    }
    out
}

/// Components of the fixed set, each circle classified by whether a
/// punctured neighbourhood of it has two components.
pub fn fixed_components(c: &EquivariantComplex) -> Result<Vec<FixedComponent>, InvariantError> {
    let x = c.complex();
    if let Some(t) = (0..x.triangles().len()).find(|&t| c.is_fixed(2, t)) {
        return Err(InvariantError::FixedTriangle(t));
    }
    let n = x.vertex_count();
    let mut uf = UnionFind::new(n);
    let mut degree = vec![0usize; n];
    let fixed_edges: Vec<usize> = (0..x.edges().len()).filter(|&e| c.is_fixed(1, e)).collect();
    for &e in &fixed_edges {
        let [a, b] = x.edges()[e];
        uf.union(a, b);
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in (0..n).filter(|&v| c.is_fixed(0, v)) {
        groups.entry(uf.find(v)).or_default().push(v);
    }
    let by_edge = edge_triangles(x);
    let mut out = Vec::new();
    for vs in groups.values() {
        if vs.len() == 1 && degree[vs[0]] == 0 {
            out.push(FixedComponent::Point { vertex: vs[0] });
            continue;
        }
        if let Some(&v) = vs.iter().find(|&&v| degree[v] != 2) {
            return Err(InvariantError::FixedSetBranches(v, degree[v]));
        }
        out.push(FixedComponent::Circle {
            vertices: vs.len(),
            two_sided: sides(c, vs, &by_edge) == 2,
        });
    }
    Ok(out)
}

/// Components of the star of a fixed circle with the circle removed:
/// triangles touching the circle, joined across moved edges that touch it.
fn sides(c: &EquivariantComplex, circle: &[usize], by_edge: &[Vec<(usize, i64)>]) -> usize {
    let x = c.complex();
    let on = |v: usize| circle.binary_search(&v).is_ok();
    let touching: Vec<usize> = (0..x.triangles().len())
        .filter(|&t| x.triangle_vertices(t).iter().any(|&v| on(v)))
        .collect();
    let index: BTreeMap<usize, usize> = touching.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut uf = UnionFind::new(touching.len());
    for (e, ends) in x.edges().iter().enumerate() {
        if c.is_fixed(1, e) || !ends.iter().any(|&v| on(v)) {
            continue;
        }
        let ts: Vec<usize> = by_edge[e]
            .iter()
            .filter_map(|(t, _)| index.get(t).copied())
            .collect();
        for w in ts.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    (0..touching.len()).filter(|&i| uf.find(i) == i).count()
}

/// Signs `ε_t` making `Σ ε_t t` a cycle, if the complex is an orientable
/// closed surface.
pub fn orientation(x: &DeltaComplex) -> Option<Vec<i64>> {
    let by_edge = edge_triangles(x);
    if by_edge.iter().any(|v| v.len() != 2) {
        return None;
    }
    let mut eps = vec![0i64; x.triangles().len()];
    for root in 0..eps.len() {
        if eps[root] != 0 {
            continue;
        }
        eps[root] = 1;
        let mut stack = vec![root];
        while let Some(t) = stack.pop() {
            for &e in &x.triangles()[t] {
                let [(a, sa), (b, sb)] = [by_edge[e][0], by_edge[e][1]];
                let (other, s_self, s_other) = if a == t { (b, sa, sb) } else { (a, sb, sa) };
                // the edge must cancel: ε_t s_self + ε_other s_other = 0
                let want = -eps[t] * s_self * s_other;
                if eps[other] == 0 {
                    eps[other] = want;
                    stack.push(other);
                } else if eps[other] != want {
                    return None;
                }
            }
        }
    }
    Some(eps)
}

/// Evaluates the square of the double-cover class on the quotient's mod 2
/// fundamental class. Needs a free action.
pub fn cover_class_square(c: &EquivariantComplex) -> bool {
    let x = c.complex();
    let rep = |v: usize| v < c.sigma(0)[v];
    let a = |e: usize| {
        let [end, start] = x.edges()[e];
        rep(end) != rep(start)
    };
    let odd = (0..x.triangles().len())
        .filter(|&t| t < c.sigma(2)[t])
        .filter(|&t| {
            let [d0, _, d2] = x.triangles()[t];
            a(d2) && a(d0)
        })
        .count();
    odd % 2 == 1
}

/// Invariants of the surface a regular equivariant complex models.
pub fn mesh_invariants(c: &EquivariantComplex) -> Result<Descriptor, InvariantError> {
    let fixed = fixed_components(c)?;
    let x = c.complex();
    let orient = orientation(x);
    let beta = x.mod2_first_betti() as u32;
    let mut d = Descriptor::nonfree(orient.is_some(), beta, 0, 0, 0);
    for comp in &fixed {
        match comp {
            FixedComponent::Point { .. } => d.f += 1,
            FixedComponent::Circle {
                two_sided: true, ..
            } => d.c_plus += 1,
            FixedComponent::Circle {
                two_sided: false, ..
            } => d.c_minus += 1,
        }
    }
    if fixed.is_empty() {
        d.free = true;
        match &orient {
            Some(eps) => {
                let keeps = (0..eps.len()).all(|t| eps[c.sigma(2)[t]] == eps[t]);
                d.character = Some(if keeps {
                    Character::Preserving
                } else {
                    Character::Reversing
                });
            }
            None => {
                d.free_type = Some(if cover_class_square(c) {
                    FreeType::Sphere
                } else {
                    FreeType::Torus
                });
            }
        }
    }
    Ok(d)
}
