//! Exact sparse linear algebra over the rationals.
//!
//! Kernel computation is the backbone of every singular-vector check:
//! rows are sparse, columns are indexed by canonical basis monomials, and
//! pivoting is deterministic (first nonzero entry in canonical column
//! order), so results are reproducible across runs.

use num_traits::Zero;

use crate::num::Q;

/// A sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, Q)>;

fn scale_add(dst: &SparseRow, src: &SparseRow, factor: &Q) -> SparseRow {
    // dst - factor * src, merging sorted entry lists
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let mut i = 0;
    let mut j = 0;
    while i < dst.len() || j < src.len() {
        match (dst.get(i), src.get(j)) {
            (Some((ci, vi)), Some((cj, vj))) => {
                if ci < cj {
                    out.push((*ci, vi.clone()));
                    i += 1;
                } else if cj < ci {
                    out.push((*cj, -(factor * vj)));
                    j += 1;
                } else {
                    let v = vi - factor * vj;
                    if !v.is_zero() {
                        out.push((*ci, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((ci, vi)), None) => {
                out.push((*ci, vi.clone()));
                i += 1;
            }
            (None, Some((cj, vj))) => {
                out.push((*cj, -(factor * vj)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Row echelon structure with unit pivots, kept fully reduced.
#[derive(Default)]
pub struct Echelon {
    /// Rows sorted by pivot column; each row's pivot entry is 1 and the
    /// pivot column is zero in every other stored row.
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `row` against the stored rows.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some((first_col, _)) = row.first().cloned() else {
                return row;
            };
            match self.pivots.binary_search(&first_col) {
                Ok(k) => {
                    let factor = row[0].1.clone();
                    row = scale_add(&row, &self.rows[k], &factor);
                }
                Err(_) => return row,
            }
        }
    }

    /// Inserts a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row);
        // Clear any non-leading entries sitting on existing pivot columns.
        loop {
            let mut changed = false;
            for (k, p) in self.pivots.iter().enumerate() {
                if let Some(pos) = row.iter().position(|(c, _)| c == p) {
                    if pos > 0 {
                        let factor = row[pos].1.clone();
                        row = scale_add(&row, &self.rows[k], &factor);
                        changed = true;
                        break;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let Some((pivot_col, lead)) = row.first().cloned() else {
            return false;
        };
        let inv = lead.recip();
        for (_, v) in row.iter_mut() {
            *v = &*v * &inv;
        }
        // Back-substitute the new pivot into older rows.
        for k in 0..self.rows.len() {
            if let Some(pos) = self.rows[k].iter().position(|(c, _)| *c == pivot_col) {
                let factor = self.rows[k][pos].1.clone();
                self.rows[k] = scale_add(&self.rows[k], &row, &factor);
            }
        }
        let at = self.pivots.binary_search(&pivot_col).unwrap_err();
        self.pivots.insert(at, pivot_col);
        self.rows.insert(at, row);
        true
    }
}

/// Basis of the right kernel of the matrix given by `rows` over `ncols`
/// columns. Each kernel vector is a sparse column vector; the basis is
/// deterministic: one vector per free column, in increasing column order,
/// with a unit entry at its free column.
pub fn kernel_basis(rows: &[SparseRow], ncols: usize) -> Vec<SparseRow> {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r.clone());
    }
    let mut is_pivot = vec![false; ncols];
    for &p in ech.pivots() {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut vec: SparseRow = vec![(free, Q::from_integer(1.into()))];
        // Solve pivot variables: for each echelon row, pivot value is
        // minus the row's entry at the free column.
        for (k, row) in ech.rows.iter().enumerate() {
            if let Some((_, v)) = row.iter().find(|(c, _)| *c == free) {
                vec.push((ech.pivots[k], -v.clone()));
            }
        }
        vec.sort_by_key(|(c, _)| *c);
        basis.push(vec);
    }
    basis
}

/// Solves the dense square system `a x = b` exactly. Panics if singular;
/// callers only use it on Gram/Cartan matrices, which are invertible.
pub fn solve_dense(a: &[Vec<Q>], b: &[Q]) -> Vec<Q> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("singular matrix in solve_dense");
        m.swap(col, piv);
        let inv = m[col][col].clone().recip();
        for c in col..=n {
            m[col][c] = &m[col][c] * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let delta = &f * &m[col][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
    }
    (0..n).map(|r| m[r][n].clone()).collect()
}
