//! Smith normal form over the integers.
//!
//! Two entry points: a dense routine that can also record the unimodular
//! transforms (used for homomorphism images and kernels), and a sparse
//! routine that eliminates unit pivots first and hands the small remainder
//! to the dense one (used for boundary matrices of meshes). Pivots are
//! chosen by least absolute value.

use crate::exact::{Checked, Exact};
use num_bigint::BigInt;
use std::collections::{BTreeMap, BTreeSet};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds from row vectors. Panics if rows have unequal lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Matrix product; `None` on i64 overflow.
    pub fn checked_mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i64 = 0;
                for k in 0..self.cols {
                    acc = acc.checked_add(self.get(i, k).checked_mul(other.get(k, j))?)?;
                }
                out.set(i, j, acc);
            }
        }
        Some(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hcat");
        let mut out = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    pub(crate) fn to_mat<T: Exact>(&self) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            a: (0..self.rows)
                .map(|r| self.row(r).iter().map(|&v| T::from_i64(v)).collect())
                .collect(),
        }
    }
}

/// Nonzero diagonal of a Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Number of nonzero diagonal entries.
    pub rank: usize,
    /// Diagonal entries greater than one, in divisibility order.
    pub factors: Vec<u64>,
}

/// Generic dense matrix used inside the elimination routines.
#[derive(Debug, Clone)]
pub(crate) struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Vec<T>>,
}

impl<T: Exact> Mat<T> {
    pub fn identity(n: usize) -> Self {
        let mut a = vec![vec![T::zero(); n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = T::from_i64(1);
        }
        Mat {
            rows: n,
            cols: n,
            a,
        }
    }

    /// `self * v` for a column vector.
    pub fn apply(&self, v: &[T]) -> Checked<Vec<T>> {
        let mut out = Vec::with_capacity(self.rows);
        for row in &self.a {
            let mut acc = T::zero();
            for (x, y) in row.iter().zip(v) {
                acc = acc.add(&x.mul(y)?)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        self.a.iter().map(|r| r[c].clone()).collect()
    }
}

/// Result of a dense Smith reduction: `u * a * v = diag(d)`.
#[derive(Debug, Clone)]
pub(crate) struct Smith<T> {
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub d: Vec<T>,
    pub u: Mat<T>,
    pub v: Mat<T>,
}

fn row_axpy<T: Exact>(a: &mut [Vec<T>], target: usize, src: usize, q: &T) -> Checked<()> {
    if q.is_zero() {
        return Ok(());
    }
    let (t, s) = if target < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x = x.sub(&q.mul(y)?)?;
        }
    }
    Ok(())
}

fn col_axpy<T: Exact>(a: &mut [Vec<T>], target: usize, src: usize, q: &T) -> Checked<()> {
    if q.is_zero() {
        return Ok(());
    }
    for row in a.iter_mut() {
        if !row[src].is_zero() {
            let delta = q.mul(&row[src])?;
            row[target] = row[target].sub(&delta)?;
        }
    }
    Ok(())
}

fn swap_cols<T>(a: &mut [Vec<T>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// Dense Smith normal form with optional transform tracking.
pub(crate) fn smith<T: Exact>(mut m: Mat<T>, track: bool) -> Checked<Smith<T>> {
    let (rows, cols) = (m.rows, m.cols);
    let mut u = Mat::identity(if track { rows } else { 0 });
    let mut v = Mat::identity(if track { cols } else { 0 });
    let mut d = Vec::new();
    let a = &mut m.a;
    for t in 0..rows.min(cols) {
        // least absolute value pivot in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs_lt(&a[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        swap_cols(a, t, pj);
        if track {
            u.a.swap(t, pi);
            swap_cols(&mut v.a, t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t])?;
                row_axpy(a, i, t, &q)?;
                if track {
                    row_axpy(&mut u.a, i, t, &q)?;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                    if a[i][t].abs_lt(&a[t][t]) {
                        a.swap(t, i);
                        if track {
                            u.a.swap(t, i);
                        }
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t])?;
                col_axpy(a, j, t, &q)?;
                if track {
                    col_axpy(&mut v.a, j, t, &q)?;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                    if a[t][j].abs_lt(&a[t][t]) {
                        swap_cols(a, t, j);
                        if track {
                            swap_cols(&mut v.a, t, j);
                        }
                    }
                }
            }
            if dirty {
                continue;
            }
            // divisibility: fold a row with an offending entry into the pivot row
            let mut offender = None;
            'scan: for (i, row) in a.iter().enumerate().skip(t + 1) {
                for x in row.iter().skip(t + 1) {
                    if !x.is_zero() {
                        let q = x.div_floor(&a[t][t])?;
                        if !x.sub(&q.mul(&a[t][t])?)?.is_zero() {
                            offender = Some(i);
                            break 'scan;
                        }
                    }
                }
            }
            match offender {
                Some(i) => {
                    let minus_one = T::from_i64(-1);
                    row_axpy(a, t, i, &minus_one)?;
                    if track {
                        row_axpy(&mut u.a, t, i, &minus_one)?;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = x.neg()?;
            }
            if track {
                for x in u.a[t].iter_mut() {
                    *x = x.neg()?;
                }
            }
        }
        d.push(a[t][t].clone());
    }
    Ok(Smith { d, u, v })
}

fn factors_of<T: Exact>(d: &[T]) -> SmithForm {
    let factors = d
        .iter()
        .filter(|x| !x.is_unit())
        .map(|x| x.to_u64().expect("invariant factor exceeds u64 range"))
        .collect();
    SmithForm {
        rank: d.len(),
        factors,
    }
}

/// Smith normal form diagonal of a dense matrix.
pub fn smith_form(m: &IntMatrix) -> SmithForm {
    match smith::<i64>(m.to_mat(), false) {
        Ok(s) => factors_of(&s.d),
        Err(_) => {
            let s = smith::<BigInt>(m.to_mat(), false).expect("bigint arithmetic cannot overflow");
            factors_of(&s.d)
        }
    }
}

/// Sparse integer matrix given as triplets; duplicate entries are summed.
#[derive(Debug, Clone, Default)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), i64>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        assert!(
            r < self.rows && c < self.cols,
            "entry ({r},{c}) out of bounds"
        );
        let e = self.entries.entry((r, c)).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries.remove(&(r, c));
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries.get(&(r, c)).copied().unwrap_or(0)
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (r, c, v) in self.nonzeros() {
            m.set(r, c, v);
        }
        m
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut by_row: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
        for (r, c, v) in other.nonzeros() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = SparseMatrix::new(self.rows, other.cols);
        for (r, k, v) in self.nonzeros() {
            if let Some(row) = by_row.get(&k) {
                for &(c, w) in row {
                    out.add(r, c, v * w);
                }
            }
        }
        out
    }
}

struct SparseState<T> {
    rows: Vec<BTreeMap<usize, T>>,
    cols: Vec<BTreeSet<usize>>,
    alive_rows: BTreeSet<usize>,
}

fn sparse_reduce<T: Exact>(m: &SparseMatrix) -> Checked<Vec<T>> {
    let mut st = SparseState {
        rows: vec![BTreeMap::new(); m.rows],
        cols: vec![BTreeSet::new(); m.cols],
        alive_rows: (0..m.rows).collect(),
    };
    for (r, c, v) in m.nonzeros() {
        st.rows[r].insert(c, T::from_i64(v));
        st.cols[c].insert(r);
    }
    let mut diag: Vec<T> = Vec::new();
    loop {
        // unit pivot of least Markowitz cost
        let mut best: Option<(usize, usize, usize)> = None;
        for &r in &st.alive_rows {
            if matches!(best, Some((_, _, 0))) {
                break;
            }
            let rl = st.rows[r].len();
            if rl == 0 {
                continue;
            }
            for (&c, x) in &st.rows[r] {
                if x.is_unit() {
                    let cost = (rl - 1) * (st.cols[c].len() - 1);
                    if best.is_none_or(|(_, _, b)| cost < b) {
                        best = Some((r, c, cost));
                    }
                }
            }
        }
        let Some((pr, pc, _)) = best else { break };
        let pivot = st.rows[pr][&pc].clone();
        let prow: Vec<(usize, T)> = st.rows[pr].iter().map(|(&c, x)| (c, x.clone())).collect();
        let others: Vec<usize> = st.cols[pc].iter().copied().filter(|&r| r != pr).collect();
        for r in others {
            // pivot is a unit, so its inverse is itself
            let f = st.rows[r][&pc].mul(&pivot)?;
            for (c, x) in &prow {
                let delta = f.mul(x)?;
                let cur = st.rows[r].get(c).cloned().unwrap_or_else(T::zero);
                let nv = cur.sub(&delta)?;
                if nv.is_zero() {
                    st.rows[r].remove(c);
                    st.cols[*c].remove(&r);
                } else {
                    st.rows[r].insert(*c, nv);
                    st.cols[*c].insert(r);
                }
            }
        }
        for (c, _) in &prow {
            st.cols[*c].remove(&pr);
        }
        st.rows[pr].clear();
        st.alive_rows.remove(&pr);
        diag.push(T::from_i64(1));
    }
    // dense remainder
    let rem_rows: Vec<usize> = st
        .alive_rows
        .iter()
        .copied()
        .filter(|&r| !st.rows[r].is_empty())
        .collect();
    let rem_cols: Vec<usize> = (0..m.cols).filter(|&c| !st.cols[c].is_empty()).collect();
    if !rem_rows.is_empty() {
        let col_pos: BTreeMap<usize, usize> =
            rem_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut a = vec![vec![T::zero(); rem_cols.len()]; rem_rows.len()];
        for (i, &r) in rem_rows.iter().enumerate() {
            for (c, x) in &st.rows[r] {
                a[i][col_pos[c]] = x.clone();
            }
        }
        let s = smith(
            Mat {
                rows: rem_rows.len(),
                cols: rem_cols.len(),
                a,
            },
            false,
        )?;
        diag.extend(s.d);
    }
    Ok(diag)
}

/// Smith normal form diagonal of a sparse matrix.
pub fn smith_form_sparse(m: &SparseMatrix) -> SmithForm {
    let mut form = match sparse_reduce::<i64>(m) {
        Ok(d) => factors_of(&d),
        Err(_) => {
            factors_of(&sparse_reduce::<BigInt>(m).expect("bigint arithmetic cannot overflow"))
        }
    };
    // units from the sparse phase come first; remainder factors are already ordered
    form.factors.sort_unstable();
    form
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonalizes_small_example() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith_form(&m);
        assert_eq!(s.rank, 3);
        assert_eq!(s.factors, vec![2, 6, 12]);
    }

    #[test]
    fn transforms_reconstruct_diagonal() {
        let m = IntMatrix::from_rows(&[vec![4, 6], vec![6, 9], vec![2, 3]]);
        let s = smith::<i64>(m.to_mat(), true).unwrap();
        assert_eq!(s.d, vec![1]);
        let mut prod = vec![vec![0i64; 2]; 3];
        for (i, row) in prod.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..3 {
                    for l in 0..2 {
                        *cell += s.u.a[i][k] * m.get(k, l) * s.v.a[l][j];
                    }
                }
            }
        }
        assert_eq!(prod, vec![vec![1, 0], vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn sparse_matches_dense() {
        let rows = vec![
            vec![1, 0, 2, 0],
            vec![0, 3, 0, 3],
            vec![1, 3, 2, 3],
            vec![0, 0, 4, 2],
        ];
        let dense = IntMatrix::from_rows(&rows);
        let mut sp = SparseMatrix::new(4, 4);
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    sp.add(r, c, v);
                }
            }
        }
        assert_eq!(smith_form(&dense), smith_form_sparse(&sp));
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 3;
        let m = IntMatrix::from_rows(&[vec![big, big - 1], vec![big - 1, big - 2]]);
        // det = big*(big-2) - (big-1)^2 = -1, so the form is the identity
        let s = smith_form(&m);
        assert_eq!(
            s,
            SmithForm {
                rank: 2,
                factors: vec![]
            }
        );
    }
}
