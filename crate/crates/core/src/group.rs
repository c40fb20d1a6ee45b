//! Finitely generated abelian groups and homomorphisms between direct sums
//! of cyclic groups.
//!
//! Cyclic orders are written as `u64` with the convention that order `0`
//! stands for the infinite cyclic group (ℤ/0 = ℤ).

use crate::exact::{Checked, Exact};
use crate::snf::{smith, IntMatrix, Mat};
use num_bigint::BigInt;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("torsion list {0:?} is not a chain of invariant factors >= 2")]
    NotCanonical(Vec<u64>),
    #[error("matrix is {rows}x{cols} but generator counts are {targets} (target) and {sources} (source)")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        targets: usize,
        sources: usize,
    },
    #[error("column {column} does not respect the order {order} of its source generator")]
    IllDefined { column: usize, order: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SesError {
    #[error("middle group {0} mixes free and torsion parts")]
    MixedMiddle(FinAbGroup),
    #[error("p-primary part of order {0} exceeds the exhaustive search bound")]
    TooLarge(u64),
}

/// A finitely generated abelian group `ℤ^rank ⊕ ℤ/t1 ⊕ … ⊕ ℤ/tk` with
/// `t1 | t2 | … | tk`, each `ti >= 2`. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FinAbGroup {
    rank: usize,
    torsion: Vec<u64>,
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl FinAbGroup {
    /// Validated constructor from an already canonical description.
    pub fn new(rank: usize, torsion: Vec<u64>) -> Result<Self, GroupError> {
        let ok = torsion.iter().all(|&t| t >= 2) && torsion.windows(2).all(|w| w[1] % w[0] == 0);
        if !ok {
            return Err(GroupError::NotCanonical(torsion));
        }
        Ok(FinAbGroup { rank, torsion })
    }

    pub fn zero() -> Self {
        FinAbGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn integers() -> Self {
        FinAbGroup::free(1)
    }

    /// ℤ/n; `n = 0` gives ℤ and `n = 1` the trivial group.
    pub fn cyclic(n: u64) -> Self {
        FinAbGroup::from_cyclic_orders(&[n])
    }

    /// Canonical form of a direct sum of cyclic groups.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let rank = orders.iter().filter(|&&n| n == 0).count();
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in orders.iter().filter(|&&n| n > 1) {
            for (p, e) in prime_factors(n) {
                by_prime.entry(p).or_default().push(e);
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![1u64; len];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (i, e) in exps.into_iter().enumerate() {
                torsion[i] *= p.pow(e);
            }
        }
        torsion.reverse();
        FinAbGroup { rank, torsion }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> u64 {
        self.torsion.iter().product()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion_order())
    }

    /// Cyclic orders of the canonical generators: free first, then torsion.
    pub fn generator_orders(&self) -> Vec<u64> {
        std::iter::repeat_n(0, self.rank)
            .chain(self.torsion.iter().copied())
            .collect()
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut orders = self.generator_orders();
        orders.extend(other.generator_orders());
        FinAbGroup::from_cyclic_orders(&orders)
    }

    /// Canonical form; the identity on values built through this API.
    pub fn canonical(&self) -> FinAbGroup {
        FinAbGroup::from_cyclic_orders(&self.generator_orders())
    }

    /// Exponents of the p-primary part, largest first.
    pub fn primary_exponents(&self, p: u64) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .torsion
            .iter()
            .filter_map(|&t| {
                prime_factors(t)
                    .into_iter()
                    .find(|&(q, _)| q == p)
                    .map(|(_, e)| e)
            })
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self
            .torsion
            .iter()
            .flat_map(|&t| prime_factors(t))
            .map(|(p, _)| p)
            .collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// Plain-ASCII rendering, e.g. `Z^2+Z/2+Z/4`.
    pub fn ascii(&self) -> String {
        self.render("Z", "+")
    }

    fn render(&self, z: &str, plus: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push(z.to_string()),
            r => parts.push(format!("{z}^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|&&u| u == t).count();
            if run == 1 {
                parts.push(format!("{z}/{t}"));
            } else {
                parts.push(format!("({z}/{t})^{run}"));
            }
            i += run;
        }
        parts.join(plus)
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("ℤ", " ⊕ "))
    }
}

/// Isomorphism-invariant description of a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomSignature {
    pub image: FinAbGroup,
    pub kernel: FinAbGroup,
    pub cokernel: FinAbGroup,
}

/// Homomorphism `⊕ ℤ/s_j → ⊕ ℤ/t_i` between direct sums of cyclic groups,
/// given by an integer matrix (rows = target generators, columns = source
/// generators). Entries in torsion rows are reduced into `[0, t_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: Vec<u64>,
    target: Vec<u64>,
    matrix: IntMatrix,
}

impl GroupHom {
    pub fn new(source: Vec<u64>, target: Vec<u64>, matrix: IntMatrix) -> Result<Self, GroupError> {
        if matrix.rows() != target.len() || matrix.cols() != source.len() {
            return Err(GroupError::DimensionMismatch {
                rows: matrix.rows(),
                cols: matrix.cols(),
                targets: target.len(),
                sources: source.len(),
            });
        }
        let mut m = matrix;
        for (i, &t) in target.iter().enumerate() {
            if t > 0 {
                for j in 0..m.cols() {
                    m.set(i, j, m.get(i, j).rem_euclid(t as i64));
                }
            }
        }
        for (j, &s) in source.iter().enumerate() {
            if s == 0 {
                continue;
            }
            for (i, &t) in target.iter().enumerate() {
                let v = m.get(i, j) as i128 * s as i128;
                let ok = if t == 0 { v == 0 } else { v % t as i128 == 0 };
                if !ok {
                    return Err(GroupError::IllDefined {
                        column: j,
                        order: s,
                    });
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            matrix: m,
        })
    }

    pub fn zero(source: Vec<u64>, target: Vec<u64>) -> Self {
        let matrix = IntMatrix::zeros(target.len(), source.len());
        GroupHom {
            source,
            target,
            matrix,
        }
    }

    pub fn source_orders(&self) -> &[u64] {
        &self.source
    }

    pub fn target_orders(&self) -> &[u64] {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn source_group(&self) -> FinAbGroup {
        FinAbGroup::from_cyclic_orders(&self.source)
    }

    pub fn target_group(&self) -> FinAbGroup {
        FinAbGroup::from_cyclic_orders(&self.target)
    }

    pub fn is_zero(&self) -> bool {
        (0..self.matrix.rows()).all(|r| self.matrix.row(r).iter().all(|&v| v == 0))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> GroupHom {
        assert_eq!(
            inner.target, self.source,
            "composition of incompatible homomorphisms"
        );
        let prod = self
            .matrix
            .checked_mul(&inner.matrix)
            .expect("composition entries overflow i64");
        GroupHom::new(inner.source.clone(), self.target.clone(), prod)
            .expect("composite of well-defined maps is well-defined")
    }

    /// Block-diagonal sum of homomorphisms.
    pub fn block_sum(parts: &[GroupHom]) -> GroupHom {
        let source: Vec<u64> = parts
            .iter()
            .flat_map(|h| h.source.iter().copied())
            .collect();
        let target: Vec<u64> = parts
            .iter()
            .flat_map(|h| h.target.iter().copied())
            .collect();
        let mut m = IntMatrix::zeros(target.len(), source.len());
        let (mut r0, mut c0) = (0, 0);
        for h in parts {
            for r in 0..h.matrix.rows() {
                for c in 0..h.matrix.cols() {
                    m.set(r0 + r, c0 + c, h.matrix.get(r, c));
                }
            }
            r0 += h.matrix.rows();
            c0 += h.matrix.cols();
        }
        GroupHom {
            source,
            target,
            matrix: m,
        }
    }

    /// Image, kernel and cokernel up to isomorphism.
    pub fn signature(&self) -> HomSignature {
        match hom_structure::<i64>(self) {
            Ok(s) => s,
            Err(_) => hom_structure::<BigInt>(self).expect("bigint arithmetic cannot overflow"),
        }
    }

    pub fn image(&self) -> FinAbGroup {
        self.signature().image
    }

    pub fn kernel(&self) -> FinAbGroup {
        self.signature().kernel
    }

    pub fn cokernel(&self) -> FinAbGroup {
        self.signature().cokernel
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_zero()
    }

    pub fn is_iso(&self) -> bool {
        let s = self.signature();
        s.kernel.is_zero() && s.cokernel.is_zero()
    }
}

fn group_from_diag<T: Exact>(generators: usize, d: &[T]) -> FinAbGroup {
    let mut orders = vec![0u64; generators - d.len()];
    orders.extend(
        d.iter()
            .map(|x| x.to_u64().expect("invariant factor exceeds u64 range")),
    );
    FinAbGroup::from_cyclic_orders(&orders)
}

fn hom_structure<T: Exact>(h: &GroupHom) -> Checked<HomSignature> {
    let n = h.source.len();
    let m = h.target.len();
    let target_rel: Vec<usize> = (0..m).filter(|&i| h.target[i] > 0).collect();
    // B = [A | R_target]
    let width = n + target_rel.len();
    let mut b = vec![vec![T::zero(); width]; m];
    for (i, row) in b.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate().take(n) {
            *x = T::from_i64(h.matrix.get(i, j));
        }
    }
    for (k, &i) in target_rel.iter().enumerate() {
        b[i][n + k] = T::from_i64(h.target[i] as i64);
    }
    let sb = smith(
        Mat {
            rows: m,
            cols: width,
            a: b,
        },
        true,
    )?;
    let cokernel = group_from_diag(m, &sb.d);

    // preimage lattice of the target relations, projected to source coordinates
    let rb = sb.d.len();
    let kgens: Vec<Vec<T>> = (rb..width).map(|c| sb.v.column(c)[..n].to_vec()).collect();
    let k = kgens.len();
    let mut kmat = vec![vec![T::zero(); k]; n];
    for (c, g) in kgens.iter().enumerate() {
        for (r, x) in g.iter().enumerate() {
            kmat[r][c] = x.clone();
        }
    }
    let sk = smith(
        Mat {
            rows: n,
            cols: k,
            a: kmat,
        },
        true,
    )?;
    let image = group_from_diag(n, &sk.d);

    // kernel = lattice / source relations, in the lattice basis d_i U^{-1} e_i
    let rk = sk.d.len();
    let source_rel: Vec<usize> = (0..n).filter(|&j| h.source[j] > 0).collect();
    let mut y = vec![vec![T::zero(); source_rel.len()]; rk];
    for (col, &j) in source_rel.iter().enumerate() {
        let mut r = vec![T::zero(); n];
        r[j] = T::from_i64(h.source[j] as i64);
        let w = sk.u.apply(&r)?;
        for i in 0..rk {
            y[i][col] = w[i].div_floor(&sk.d[i])?;
        }
    }
    let sy = smith(
        Mat {
            rows: rk,
            cols: source_rel.len(),
            a: y,
        },
        false,
    )?;
    let kernel = group_from_diag(rk, &sy.d);
    Ok(HomSignature {
        image,
        kernel,
        cokernel,
    })
}

/// Largest p-primary order searched exhaustively by [`ses_exists`].
pub const MAX_BRUTE_FORCE_ORDER: u64 = 64;

/// Decides whether a short exact sequence `0 → a → b → c → 0` exists.
///
/// Free middle groups are decided by rank count and the number of torsion
/// invariant factors of `c`; finite middle groups by exhaustive subgroup
/// search prime by prime.
pub fn ses_exists(a: &FinAbGroup, b: &FinAbGroup, c: &FinAbGroup) -> Result<bool, SesError> {
    if b.rank != a.rank + c.rank {
        return Ok(false);
    }
    if b.is_torsion_free() {
        // 0 → L → ℤ^n → ℤ^n / L with L free of rank a: at most a torsion factors
        return Ok(a.is_torsion_free() && c.torsion.len() <= a.rank);
    }
    if !b.is_finite() {
        return Err(SesError::MixedMiddle(b.clone()));
    }
    if b.torsion_order() != a.torsion_order() * c.torsion_order() {
        return Ok(false);
    }
    let mut primes = b.primes();
    primes.extend(a.primes());
    primes.extend(c.primes());
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        let (ea, eb, ec) = (
            a.primary_exponents(p),
            b.primary_exponents(p),
            c.primary_exponents(p),
        );
        let order: u64 = eb.iter().map(|&e| p.pow(e)).product();
        if order > MAX_BRUTE_FORCE_ORDER {
            return Err(SesError::TooLarge(order));
        }
        if !primary_ses_exists(p, &ea, &eb, &ec) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// |G[p^k]| for G = ⊕ ℤ/p^{e_i}, k = 0..=kmax.
fn socle_profile(p: u64, exps: &[u32], kmax: u32) -> Vec<u64> {
    (0..=kmax)
        .map(|k| exps.iter().map(|&e| p.pow(e.min(k))).product())
        .collect()
}

fn primary_ses_exists(p: u64, ea: &[u32], eb: &[u32], ec: &[u32]) -> bool {
    let moduli: Vec<u64> = eb.iter().map(|&e| p.pow(e)).collect();
    let order: u64 = moduli.iter().product();
    let kmax = eb.first().copied().unwrap_or(0);
    let want_a = socle_profile(p, ea, kmax);
    let want_c = socle_profile(p, ec, kmax);
    let size = order as usize;
    let decode = |mut x: usize| -> Vec<u64> {
        moduli
            .iter()
            .map(|&m| {
                let d = x as u64 % m;
                x /= m as usize;
                d
            })
            .collect()
    };
    let encode = |v: &[u64]| -> usize {
        let mut x = 0usize;
        for (d, &m) in v.iter().zip(&moduli).rev() {
            x = x * m as usize + *d as usize;
        }
        x
    };
    let elems: Vec<Vec<u64>> = (0..size).map(decode).collect();
    let add = |a: usize, b: usize| -> usize {
        let s: Vec<u64> = elems[a]
            .iter()
            .zip(&elems[b])
            .zip(&moduli)
            .map(|((x, y), m)| (x + y) % m)
            .collect();
        encode(&s)
    };
    let scale = |a: usize, k: u64| -> usize {
        let s: Vec<u64> = elems[a]
            .iter()
            .zip(&moduli)
            .map(|(x, m)| (x * (k % m)) % m)
            .collect();
        encode(&s)
    };
    let close = |mut members: Vec<bool>| -> Vec<bool> {
        loop {
            let current: Vec<usize> = (0..size).filter(|&i| members[i]).collect();
            let mut grew = false;
            for &x in &current {
                for &y in &current {
                    let s = add(x, y);
                    if !members[s] {
                        members[s] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                return members;
            }
        }
    };
    let mut trivial = vec![false; size];
    trivial[0] = true;
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut frontier = vec![trivial.clone()];
    seen.insert(trivial);
    while let Some(h) = frontier.pop() {
        let h_order = h.iter().filter(|&&x| x).count() as u64;
        let profile_h: Vec<u64> = (0..=kmax)
            .map(|k| {
                (0..size)
                    .filter(|&x| h[x] && scale(x, p.pow(k)) == 0)
                    .count() as u64
            })
            .collect();
        if profile_h == want_a {
            let profile_q: Vec<u64> = (0..=kmax)
                .map(|k| (0..size).filter(|&x| h[scale(x, p.pow(k))]).count() as u64 / h_order)
                .collect();
            if profile_q == want_c {
                return true;
            }
        }
        for g in 0..size {
            if !h[g] {
                let mut next = h.clone();
                next[g] = true;
                let next = close(next);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(rank: usize, t: &[u64]) -> FinAbGroup {
        FinAbGroup::new(rank, t.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form_merges_coprime_orders() {
        assert_eq!(FinAbGroup::from_cyclic_orders(&[2, 3]), g(0, &[6]));
        assert_eq!(
            FinAbGroup::from_cyclic_orders(&[2, 2, 3, 0, 1]),
            g(1, &[2, 6])
        );
        assert_eq!(FinAbGroup::from_cyclic_orders(&[4, 6]), g(0, &[2, 12]));
    }

    #[test]
    fn rejects_non_chain() {
        assert!(FinAbGroup::new(0, vec![4, 6]).is_err());
        assert!(FinAbGroup::new(0, vec![1]).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(0, &[]).to_string(), "0");
        assert_eq!(g(2, &[2, 2, 4]).to_string(), "ℤ^2 ⊕ (ℤ/2)^2 ⊕ ℤ/4");
        assert_eq!(g(1, &[3]).ascii(), "Z+Z/3");
    }

    #[test]
    fn reduction_map_signature() {
        let h = GroupHom::new(vec![0], vec![2], IntMatrix::from_rows(&[vec![1]])).unwrap();
        let s = h.signature();
        assert_eq!(s.image, g(0, &[2]));
        assert_eq!(s.kernel, g(1, &[]));
        assert_eq!(s.cokernel, g(0, &[]));
    }

    #[test]
    fn inclusion_z2_into_z4() {
        let h = GroupHom::new(vec![2], vec![4], IntMatrix::from_rows(&[vec![2]])).unwrap();
        assert!(h.is_injective());
        assert_eq!(h.cokernel(), g(0, &[2]));
    }

    #[test]
    fn ill_defined_map_rejected() {
        let r = GroupHom::new(vec![2], vec![0], IntMatrix::from_rows(&[vec![1]]));
        assert!(matches!(r, Err(GroupError::IllDefined { .. })));
        let r = GroupHom::new(vec![2], vec![4], IntMatrix::from_rows(&[vec![1]]));
        assert!(r.is_err());
    }

    #[test]
    fn ses_cases() {
        let z = g(1, &[]);
        let z2 = g(0, &[2]);
        let z4 = g(0, &[4]);
        let zero = g(0, &[]);
        assert_eq!(ses_exists(&z, &z, &z2), Ok(true));
        assert_eq!(ses_exists(&z2, &z4, &z2), Ok(true));
        assert_eq!(ses_exists(&z2, &g(0, &[2, 2]), &z2), Ok(true));
        assert_eq!(ses_exists(&z4, &g(0, &[2, 2]), &zero), Ok(false));
        assert_eq!(ses_exists(&zero, &z, &z), Ok(true));
        assert_eq!(ses_exists(&zero, &z, &z2), Ok(false));
        assert_eq!(ses_exists(&z, &g(2, &[]), &g(1, &[3])), Ok(true));
        assert_eq!(ses_exists(&z, &g(2, &[]), &g(1, &[3, 3])), Ok(false));
    }
}
