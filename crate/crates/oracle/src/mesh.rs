//! Simplicial 2-complexes with a simplicial involution, and the surgeries
//! that build every surface expression from the base models.

use crate::complex::{DeltaComplex, EquivariantComplex};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeshError {
    #[error("involution table has length {got} for {expected} vertices")]
    SigmaLength { got: usize, expected: usize },
    #[error("vertex map is not an involution at vertex {0}")]
    NotInvolution(usize),
    #[error("triangle {0:?} is degenerate or out of range")]
    BadTriangle([usize; 3]),
    #[error("triangle {0:?} appears twice")]
    DuplicateTriangle([usize; 3]),
    #[error("the involution sends triangle {0:?} outside the mesh")]
    NotSimplicial([usize; 3]),
    #[error("gluing sends piece vertex {piece} and its conjugate to non-conjugate host vertices")]
    GluingNotEquivariant { piece: usize },
    #[error("no isolated fixed vertex with an antipodal link is available")]
    NoIsolatedFixedVertex,
    #[error("no triangle is disjoint from its conjugate, even after subdivision")]
    NoFreeTriangle,
}

/// Triangles as sorted vertex triples, with a vertex involution mapping
/// the triangle set to itself. Unused vertices are dropped on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mesh {
    vertex_count: usize,
    triangles: Vec<[usize; 3]>,
    sigma: Vec<usize>,
}

fn sorted(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

/// How a cylinder of annulus is attached across two conjugate disks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Antitube {
    /// `(θ, s) ↦ (θ, -s)`: the middle circle is fixed.
    Reflection,
    /// `(θ, s) ↦ (-θ, -s)`: two fixed points on the middle circle.
    HalfTurn,
}

impl Mesh {
    pub fn new(
        vertex_count: usize,
        triangles: Vec<[usize; 3]>,
        sigma: Vec<usize>,
    ) -> Result<Self, MeshError> {
        if sigma.len() != vertex_count {
            return Err(MeshError::SigmaLength {
                got: sigma.len(),
                expected: vertex_count,
            });
        }
        for (v, &s) in sigma.iter().enumerate() {
            if s >= vertex_count || sigma[s] != v {
                return Err(MeshError::NotInvolution(v));
            }
        }
        let mut set = BTreeSet::new();
        for &t in &triangles {
            let t = sorted(t);
            if t[0] == t[1] || t[1] == t[2] || t[2] >= vertex_count {
                return Err(MeshError::BadTriangle(t));
            }
            if !set.insert(t) {
                return Err(MeshError::DuplicateTriangle(t));
            }
        }
        for &t in &set {
            if !set.contains(&sorted(t.map(|v| sigma[v]))) {
                return Err(MeshError::NotSimplicial(t));
            }
        }
        // compact away unused vertices; the used set is σ-invariant
        let mut used = vec![false; vertex_count];
        set.iter().flatten().for_each(|&v| used[v] = true);
        let mut index = vec![usize::MAX; vertex_count];
        let mut next = 0;
        for v in 0..vertex_count {
            if used[v] {
                index[v] = next;
                next += 1;
            }
        }
        let sigma = (0..vertex_count)
            .filter(|&v| used[v])
            .map(|v| index[sigma[v]])
            .collect();
        let mut triangles: Vec<[usize; 3]> = set
            .into_iter()
            .map(|t| sorted(t.map(|v| index[v])))
            .collect();
        triangles.sort_unstable();
        Ok(Mesh {
            vertex_count: next,
            triangles,
            sigma,
        })
    }

    /// Same triangles with the trivial action.
    pub fn without_action(
        vertex_count: usize,
        triangles: Vec<[usize; 3]>,
    ) -> Result<Self, MeshError> {
        Mesh::new(vertex_count, triangles, (0..vertex_count).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn edges(&self) -> Vec<[usize; 2]> {
        let mut set = BTreeSet::new();
        for t in &self.triangles {
            set.insert([t[0], t[1]]);
            set.insert([t[0], t[2]]);
            set.insert([t[1], t[2]]);
        }
        set.into_iter().collect()
    }

    /// Every edge lies on exactly two triangles and every vertex link is a
    /// single cycle.
    pub fn is_closed_surface(&self) -> bool {
        let mut edge_count: HashMap<[usize; 2], usize> = HashMap::new();
        for t in &self.triangles {
            for e in [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]] {
                *edge_count.entry(e).or_default() += 1;
            }
        }
        edge_count.values().all(|&n| n == 2)
            && (0..self.vertex_count).all(|v| self.link_cycle(v).is_some())
    }

    /// Link of `v` as a cyclically ordered vertex list, if it is one cycle.
    pub fn link_cycle(&self, v: usize) -> Option<Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for t in self.triangles.iter().filter(|t| t.contains(&v)) {
            let others: Vec<usize> = t.iter().copied().filter(|&w| w != v).collect();
            adj.entry(others[0]).or_default().push(others[1]);
            adj.entry(others[1]).or_default().push(others[0]);
        }
        if adj.is_empty() || adj.values().any(|n| n.len() != 2) {
            return None;
        }
        let start = *adj.keys().next().expect("nonempty");
        let mut cycle = vec![start];
        let (mut prev, mut cur) = (start, adj[&start][0]);
        while cur != start {
            cycle.push(cur);
            let n = &adj[&cur];
            let next = if n[0] == prev { n[1] } else { n[0] };
            prev = cur;
            cur = next;
        }
        (cycle.len() == adj.len()).then_some(cycle)
    }

    fn fixed(&self, v: usize) -> bool {
        self.sigma[v] == v
    }

    /// Barycentric subdivision. Each new vertex carries the dimension of the
    /// simplex it is the barycenter of.
    pub fn subdivide(&self) -> (Mesh, Vec<u8>) {
        let edges = self.edges();
        let edge_id: HashMap<[usize; 2], usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let tri_id: HashMap<[usize; 3], usize> = self
            .triangles
            .iter()
            .enumerate()
            .map(|(i, &t)| (t, i))
            .collect();
        let (n0, n1) = (self.vertex_count, edges.len());
        let n = n0 + n1 + self.triangles.len();
        let mut rank = vec![0u8; n0];
        rank.extend(std::iter::repeat_n(1, n1));
        rank.extend(std::iter::repeat_n(2, self.triangles.len()));
        let mut sigma: Vec<usize> = self.sigma.clone();
        for e in &edges {
            let mut s = e.map(|v| self.sigma[v]);
            s.sort_unstable();
            sigma.push(n0 + edge_id[&s]);
        }
        for t in &self.triangles {
            sigma.push(n0 + n1 + tri_id[&sorted(t.map(|v| self.sigma[v]))]);
        }
        let mut triangles = Vec::with_capacity(6 * self.triangles.len());
        for (ti, t) in self.triangles.iter().enumerate() {
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                let e = n0 + edge_id[&[t[a], t[b]]];
                triangles.push([t[a], e, n0 + n1 + ti]);
                triangles.push([t[b], e, n0 + n1 + ti]);
            }
        }
        let mesh = Mesh::new(n, triangles, sigma).expect("subdivision of a valid mesh is valid");
        (mesh, rank)
    }

    /// Subdivides once and orders every simplex by barycenter dimension.
    /// The action on the result is regular and order preserving.
    pub fn regularize(&self) -> EquivariantComplex {
        let (sd, rank) = self.subdivide();
        let key = |v: usize| (rank[v], v);
        let ordered = |mut s: Vec<usize>| {
            s.sort_by_key(|&v| key(v));
            s
        };
        let mut edge_index: HashMap<[usize; 2], usize> = HashMap::new();
        let mut edges: Vec<[usize; 2]> = Vec::new();
        let mut edge_sigma_src: Vec<[usize; 2]> = Vec::new();
        for e in sd.edges() {
            let o = ordered(e.to_vec());
            edge_index.insert([o[0], o[1]], edges.len());
            edges.push([o[1], o[0]]);
            edge_sigma_src.push([o[0], o[1]]);
        }
        let mut triangles = Vec::new();
        for t in &sd.triangles {
            let o = ordered(t.to_vec());
            triangles.push([
                edge_index[&[o[1], o[2]]],
                edge_index[&[o[0], o[2]]],
                edge_index[&[o[0], o[1]]],
            ]);
        }
        let tri_index: HashMap<[usize; 3], usize> =
            triangles.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let s0 = sd.sigma.clone();
        let s1: Vec<usize> = edge_sigma_src
            .iter()
            .map(|&[a, b]| edge_index[&[s0[a], s0[b]]])
            .collect();
        let s2: Vec<usize> = triangles
            .iter()
            .map(|t| tri_index[&t.map(|e| s1[e])])
            .collect();
        let complex = DeltaComplex::new(sd.vertex_count, edges, triangles)
            .expect("ordered simplicial complex");
        EquivariantComplex::new(complex, [s0, s1, s2])
            .expect("barycentric subdivision regularizes the action")
    }

    /// Disjoint union with `piece`, identifying piece vertex `p` with host
    /// vertex `h` for each `(p, h)` in `glue`.
    fn attach_piece(
        &self,
        removed: &[[usize; 3]],
        piece: &Mesh,
        glue: &[(usize, usize)],
    ) -> Result<Mesh, MeshError> {
        let host_n = self.vertex_count;
        let mut map: Vec<Option<usize>> = vec![None; piece.vertex_count];
        for &(p, h) in glue {
            map[p] = Some(h);
        }
        for &(p, h) in glue {
            if map[piece.sigma[p]] != Some(self.sigma[h]) {
                return Err(MeshError::GluingNotEquivariant { piece: p });
            }
        }
        let mut next = host_n;
        let image: Vec<usize> = map
            .iter()
            .map(|m| {
                m.unwrap_or_else(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        let mut sigma = self.sigma.clone();
        sigma.resize(next, usize::MAX);
        for p in 0..piece.vertex_count {
            if map[p].is_none() {
                sigma[image[p]] = image[piece.sigma[p]];
            }
        }
        let removed: BTreeSet<[usize; 3]> = removed.iter().map(|&t| sorted(t)).collect();
        let mut triangles: Vec<[usize; 3]> = self
            .triangles
            .iter()
            .copied()
            .filter(|t| !removed.contains(t))
            .collect();
        triangles.extend(piece.triangles.iter().map(|t| t.map(|v| image[v])));
        Mesh::new(next, triangles, sigma)
    }

    /// First triangle with no fixed vertex and no vertex in common with its
    /// conjugate.
    pub fn free_triangle(&self) -> Option<[usize; 3]> {
        self.triangles.iter().copied().find(|t| {
            let s = t.map(|v| self.sigma[v]);
            t.iter().all(|v| !s.contains(v))
        })
    }

    fn with_free_triangle(&self) -> Result<(Mesh, [usize; 3]), MeshError> {
        let mut m = self.clone();
        for _ in 0..3 {
            if let Some(t) = m.free_triangle() {
                return Ok((m, t));
            }
            m = m.subdivide().0;
        }
        Err(MeshError::NoFreeTriangle)
    }

    /// `X # Y # σY`: removes a free triangle and its conjugate and glues in
    /// two swapped copies of `y` punctured at its first triangle.
    pub fn conn_sum2(&self, y: &Mesh) -> Result<Mesh, MeshError> {
        let (host, t) = self.with_free_triangle()?;
        let st = t.map(|v| host.sigma[v]);
        let m = y.vertex_count;
        let hole = y.triangles[0];
        let mut tris = Vec::new();
        for tri in y.triangles.iter().skip(1) {
            tris.push(*tri);
            tris.push(tri.map(|v| v + m));
        }
        let sigma = (0..2 * m)
            .map(|v| if v < m { v + m } else { v - m })
            .collect();
        let piece = Mesh::new(2 * m, tris, sigma)?;
        let mut glue = Vec::new();
        for i in 0..3 {
            glue.push((hole[i], t[i]));
            glue.push((hole[i] + m, st[i]));
        }
        host.attach_piece(&[t, st], &piece, &glue)
    }

    /// Glues an equivariant annulus across a free triangle and its conjugate.
    pub fn antitube(&self, kind: Antitube) -> Result<Mesh, MeshError> {
        let (host, t) = self.with_free_triangle()?;
        let st = t.map(|v| host.sigma[v]);
        let top = |j: usize| j % 3;
        let bottom = |j: usize| 3 + j % 3;
        let mid = |i: usize| 6 + i % 6;
        let mut tris = Vec::new();
        for j in 0..3 {
            for row in [top, bottom] {
                tris.push([row(j), mid(2 * j), mid(2 * j + 1)]);
                tris.push([row(j), mid(2 * j + 1), row(j + 1)]);
                tris.push([row(j + 1), mid(2 * j + 1), mid(2 * j + 2)]);
            }
        }
        let neg3 = |j: usize| (3 - j % 3) % 3;
        let sigma: Vec<usize> = match kind {
            Antitube::Reflection => (0..12)
                .map(|v| {
                    if v < 3 {
                        v + 3
                    } else if v < 6 {
                        v - 3
                    } else {
                        v
                    }
                })
                .collect(),
            Antitube::HalfTurn => (0..12)
                .map(|v| {
                    if v < 3 {
                        bottom(neg3(v))
                    } else if v < 6 {
                        top(neg3(v - 3))
                    } else {
                        mid(6 - (v - 6))
                    }
                })
                .collect(),
        };
        let piece = Mesh::new(12, tris, sigma)?;
        let mut glue = Vec::new();
        for j in 0..3 {
            glue.push((top(j), t[j]));
            let b = match kind {
                Antitube::Reflection => bottom(j),
                Antitube::HalfTurn => bottom(neg3(j)),
            };
            glue.push((b, st[j]));
        }
        host.attach_piece(&[t, st], &piece, &glue)
    }

    /// An isolated fixed vertex whose link has length at least six with the
    /// involution acting as the half rotation.
    fn isolated_fixed_vertex(&self) -> Option<(usize, Vec<usize>)> {
        (0..self.vertex_count)
            .filter(|&v| self.fixed(v))
            .find_map(|v| {
                let link = self.link_cycle(v)?;
                let n = link.len() / 2;
                let antipodal = link.len() % 2 == 0
                    && n >= 3
                    && (0..link.len()).all(|i| self.sigma[link[i]] == link[(i + n) % link.len()]);
                antipodal.then_some((v, link))
            })
    }

    /// Replaces the open star of an isolated fixed vertex by a Möbius band
    /// whose core circle is fixed.
    pub fn fm(&self) -> Result<Mesh, MeshError> {
        let mut host = self.clone();
        let mut found = None;
        for _ in 0..3 {
            found = host.isolated_fixed_vertex();
            if found.is_some() {
                break;
            }
            host = host.subdivide().0;
        }
        let (v, link) = found.ok_or(MeshError::NoIsolatedFixedVertex)?;
        let n = link.len() / 2;
        // boundary b_k = k for k < 2n, core c_i = 2n + i
        let b = |k: usize| k % (2 * n);
        let c = |i: usize| 2 * n + i % n;
        let u = |i: usize| b(i);
        let w = |i: usize| b(i + n);
        let mut tris = Vec::new();
        for i in 0..n {
            tris.push([u(i), u(i + 1), c(i + 1)]);
            tris.push([u(i), c(i), c(i + 1)]);
            tris.push([w(i), w(i + 1), c(i + 1)]);
            tris.push([w(i), c(i), c(i + 1)]);
        }
        let sigma = (0..3 * n)
            .map(|k| if k < 2 * n { b(k + n) } else { k })
            .collect();
        let piece = Mesh::new(3 * n, tris, sigma)?;
        let glue: Vec<(usize, usize)> = (0..2 * n).map(|k| (b(k), link[k])).collect();
        let star: Vec<[usize; 3]> = host
            .triangles
            .iter()
            .copied()
            .filter(|t| t.contains(&v))
            .collect();
        host.attach_piece(&star, &piece, &glue)
    }

    /// Non-equivariant connected sum along the first triangle of each.
    pub fn connected_sum(&self, other: &Mesh) -> Result<Mesh, MeshError> {
        let host = Mesh::without_action(self.vertex_count, self.triangles.clone())?;
        let t = host.triangles[0];
        let hole = other.triangles[0];
        // every vertex of a closed surface lies on several triangles, so
        // dropping one keeps the vertex numbering
        let piece = Mesh::without_action(other.vertex_count, other.triangles[1..].to_vec())?;
        debug_assert_eq!(piece.vertex_count, other.vertex_count);
        let glue: Vec<(usize, usize)> = (0..3).map(|i| (hole[i], t[i])).collect();
        host.attach_piece(&[t], &piece, &glue)
    }
}

/// Octahedron on `±e1 = 0, 1`, `±e2 = 2, 3`, `±e3 = 4, 5`.
fn octahedron(sigma: [usize; 6]) -> Mesh {
    let mut tris = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                tris.push([a, b, c]);
            }
        }
    }
    Mesh::new(6, tris, sigma.to_vec()).expect("octahedron")
}

/// Antipodal sphere.
pub fn sphere_antipodal() -> Mesh {
    octahedron([1, 0, 3, 2, 5, 4])
}

/// Sphere reflected in the equator.
pub fn sphere_reflection() -> Mesh {
    octahedron([0, 1, 2, 3, 5, 4])
}

/// Sphere rotated by a half turn about the `e3` axis.
pub fn sphere_half_turn() -> Mesh {
    octahedron([1, 0, 3, 2, 4, 5])
}

pub fn sphere() -> Mesh {
    octahedron([0, 1, 2, 3, 4, 5])
}

/// 4×4 square grid torus with a center vertex in each square, acted on by
/// `(x, y) ↦ (flip·x, y + 2)`.
fn grid_torus(flip: bool) -> Mesh {
    const N: usize = 4;
    let corner = |i: usize, j: usize| (i % N) * N + j % N;
    let center = |i: usize, j: usize| N * N + (i % N) * N + j % N;
    let mut tris = Vec::new();
    for i in 0..N {
        for j in 0..N {
            let (a, b, c, d, z) = (
                corner(i, j),
                corner(i + 1, j),
                corner(i + 1, j + 1),
                corner(i, j + 1),
                center(i, j),
            );
            tris.extend([[a, b, z], [b, c, z], [c, d, z], [d, a, z]]);
        }
    }
    let neg = |i: usize| (N - i % N) % N;
    let mut sigma = vec![0; 2 * N * N];
    for i in 0..N {
        for j in 0..N {
            let (ci, zi) = if flip { (neg(i), neg(i + 1)) } else { (i, i) };
            sigma[corner(i, j)] = corner(ci, j + 2);
            sigma[center(i, j)] = center(zi, j + 2);
        }
    }
    Mesh::new(2 * N * N, tris, sigma).expect("grid torus")
}

/// Torus with the free half-translation.
pub fn torus_rotation() -> Mesh {
    grid_torus(false)
}

/// Torus with the free glide reflection.
pub fn torus_glide() -> Mesh {
    grid_torus(true)
}

/// Seven-vertex torus.
pub fn torus7() -> Mesh {
    let mut tris = Vec::new();
    for i in 0..7 {
        tris.push([i, (i + 1) % 7, (i + 3) % 7]);
        tris.push([i, (i + 2) % 7, (i + 3) % 7]);
    }
    Mesh::without_action(7, tris).expect("seven-vertex torus")
}

/// Six-vertex projective plane.
pub fn projective_plane6() -> Mesh {
    let tris = vec![
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ];
    Mesh::without_action(6, tris).expect("six-vertex projective plane")
}

/// Closed surface with trivial action: orientable of genus `g`, or the
/// connected sum of `g` projective planes.
pub fn closed_surface(orientable: bool, g: u32) -> Mesh {
    let piece = if orientable {
        torus7()
    } else {
        projective_plane6()
    };
    if g == 0 {
        return sphere();
    }
    let mut m = piece.clone();
    for _ in 1..g {
        m = m
            .connected_sum(&piece)
            .expect("connected sum of closed meshes");
    }
    m
}

/// Cylinder `S^{1,1} × D(ℝ^{1,1})` with both ends wrapped onto a circle by
/// the degree-`k` map. The action is `(θ, s) ↦ (-θ, -s)`.
pub fn xk(k: u32) -> Mesh {
    const M: usize = 4;
    let n = k as usize * M;
    let bottom = |i: usize| i % M;
    let top = |i: usize| M + i % M;
    let mid = |i: usize| 2 * M + i % n;
    let lower = |i: usize| 2 * M + n + i % n;
    let upper = |i: usize| 2 * M + 2 * n + i % n;
    let mut tris = Vec::new();
    for i in 0..n {
        for (r0, r1, z) in [
            (bottom(i), bottom(i + 1), lower(i)),
            (top(i), top(i + 1), upper(i)),
        ] {
            tris.extend([
                [r0, r1, z],
                [r1, mid(i + 1), z],
                [mid(i + 1), mid(i), z],
                [mid(i), r0, z],
            ]);
        }
    }
    let negm = |i: usize| (M - i % M) % M;
    let negn = |i: usize| (n - i % n) % n;
    let total = 2 * M + 3 * n;
    let mut sigma = vec![0; total];
    for i in 0..M {
        sigma[bottom(i)] = top(negm(i));
        sigma[top(i)] = bottom(negm(i));
    }
    for i in 0..n {
        sigma[mid(i)] = mid(negn(i));
        sigma[lower(i)] = upper(negn(i + 1));
        sigma[upper(i)] = lower(negn(i + 1));
    }
    Mesh::new(total, tris, sigma).expect("X(k) cylinder")
}

#[cfg(test)]
mod tests {
    use super::*;
    use eqsurf_core::FinAbGroup;

    fn h(m: &Mesh) -> [FinAbGroup; 3] {
        m.regularize().complex().integral_cohomology().degrees
    }

    #[test]
    fn base_models_are_closed_surfaces() {
        for m in [
            sphere_antipodal(),
            sphere_reflection(),
            sphere_half_turn(),
            torus_rotation(),
            torus_glide(),
            torus7(),
            projective_plane6(),
            xk(2),
        ] {
            assert!(m.is_closed_surface());
        }
        assert!(!xk(3).is_closed_surface());
    }

    #[test]
    fn octahedron_counts() {
        let m = sphere_antipodal();
        assert_eq!(
            (m.vertex_count(), m.edges().len(), m.triangles().len()),
            (6, 12, 8)
        );
        let s22 = sphere_half_turn();
        assert_eq!((0..6).filter(|&v| s22.sigma()[v] == v).count(), 2);
    }

    #[test]
    fn small_models_have_known_cohomology() {
        let z = FinAbGroup::integers;
        assert_eq!(h(&sphere()), [z(), FinAbGroup::zero(), z()]);
        assert_eq!(h(&torus7()), [z(), FinAbGroup::free(2), z()]);
        assert_eq!(
            h(&projective_plane6()),
            [z(), FinAbGroup::zero(), FinAbGroup::cyclic(2)]
        );
        assert_eq!(h(&xk(2)), [z(), z(), FinAbGroup::cyclic(2)]);
        assert_eq!(h(&xk(3)), [z(), z(), FinAbGroup::cyclic(3)]);
    }

    #[test]
    fn subdivision_multiplies_triangles() {
        let (sd, rank) = sphere_antipodal().subdivide();
        assert_eq!(sd.triangles().len(), 48);
        assert_eq!(rank.iter().filter(|&&r| r == 0).count(), 6);
        assert!(sd.is_closed_surface());
    }

    #[test]
    fn surgeries_keep_surfaces_closed() {
        let t = sphere_antipodal().conn_sum2(&torus7()).unwrap();
        assert!(t.is_closed_surface());
        let a = sphere_reflection().antitube(Antitube::Reflection).unwrap();
        assert!(a.is_closed_surface());
        let b = sphere_half_turn().antitube(Antitube::HalfTurn).unwrap();
        assert!(b.is_closed_surface());
        let f = sphere_half_turn().fm().unwrap();
        assert!(f.is_closed_surface());
        assert_eq!(
            sphere_antipodal().fm(),
            Err(MeshError::NoIsolatedFixedVertex)
        );
    }
}
