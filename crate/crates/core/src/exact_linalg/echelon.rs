//! Reduced row echelon machinery: `rref`, kernels, linear solves and the
//! canonical [`Subspace`].

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact_linalg::ExactMatrix;
use crate::gaussian::Q;

pub type SparseVec = Vec<(usize, Q)>;

fn sparse_lookup(v: &SparseVec, col: usize) -> Option<&Q> {
    v.binary_search_by_key(&col, |(j, _)| *j).ok().map(|k| &v[k].1)
}

/// `a - c·b` for sorted sparse vectors.
fn sparse_axpy(a: &SparseVec, c: &Q, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ka = a.get(i).map(|(k, _)| *k);
        let kb = b.get(j).map(|(k, _)| *k);
        match (ka, kb) {
            (Some(x), Some(y)) if x == y => {
                let v = &a[i].1 - &(c * &b[j].1);
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            _ => {
                let (y, bv) = &b[j];
                out.push((*y, -(c * bv)));
                j += 1;
            }
        }
    }
    out
}

/// Incrementally maintained reduced row echelon basis of a row space.
///
/// Every stored row has a leading 1 at its pivot and zeros at every other
/// row's pivot, so reduction of a new vector needs a single pass.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    len: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    by_pivot: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            ..Default::default()
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn reduce_dense(&self, v: &mut [Q]) {
        debug_assert_eq!(v.len(), self.len);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, x) in row {
                v[*j] -= &(&c * x);
            }
        }
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut w = v.to_vec();
        self.reduce_dense(&mut w);
        w.iter().all(Q::is_zero)
    }

    /// Returns `true` when `v` was independent of the stored rows.
    pub fn insert(&mut self, v: Vec<Q>) -> bool {
        self.insert_reduced(v).is_some()
    }

    /// Inserts `v` and returns its normalized residual (leading 1, zero at
    /// every earlier pivot), or `None` when `v` was dependent.
    pub fn insert_reduced(&mut self, mut v: Vec<Q>) -> Option<Vec<Q>> {
        self.reduce_dense(&mut v);
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = v[p].inv().expect("nonzero pivot");
        let new_row: SparseVec = v
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, &x * &inv))
            .collect();
        for row in &mut self.rows {
            if let Some(c) = sparse_lookup(row, p).cloned() {
                *row = sparse_axpy(row, &c, &new_row);
            }
        }
        let mut dense = vec![Q::ZERO; self.len];
        for (j, x) in &new_row {
            dense[*j] = x.clone();
        }
        self.by_pivot.insert(p, self.rows.len());
        self.rows.push(new_row);
        self.pivots.push(p);
        Some(dense)
    }

    /// Rows sorted by pivot column (the canonical RREF order).
    pub fn sorted_rows(&self) -> Vec<(usize, &SparseVec)> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&k| self.pivots[k]);
        idx.into_iter().map(|k| (self.pivots[k], &self.rows[k])).collect()
    }

    pub fn dense_rows(&self) -> Vec<Vec<Q>> {
        self.sorted_rows()
            .into_iter()
            .map(|(_, r)| {
                let mut d = vec![Q::ZERO; self.len];
                for (j, x) in r {
                    d[*j] = x.clone();
                }
                d
            })
            .collect()
    }

    /// Row with the given pivot column, if any.
    pub fn row_with_pivot(&self, p: usize) -> Option<&SparseVec> {
        self.by_pivot.get(&p).map(|&k| &self.rows[k])
    }
}

/// Reduced row echelon form and rank.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, usize) {
    let mut ech = Echelon::new(m.cols());
    for i in 0..m.rows() {
        ech.insert(m.row(i).to_vec());
    }
    let rank = ech.rank();
    let mut rows = ech.dense_rows();
    rows.resize(m.rows(), vec![Q::ZERO; m.cols()]);
    let out = if m.rows() == 0 {
        ExactMatrix::zeros(0, m.cols())
    } else {
        ExactMatrix::from_rows(rows)
    };
    (out, rank)
}

pub fn rank(m: &ExactMatrix) -> usize {
    let mut ech = Echelon::new(m.cols());
    for i in 0..m.rows() {
        ech.insert(m.row(i).to_vec());
    }
    ech.rank()
}

/// Canonical kernel basis: one vector per free column, with a 1 there.
pub fn nullspace(m: &ExactMatrix) -> Vec<Vec<Q>> {
    let mut ech = Echelon::new(m.cols());
    for i in 0..m.rows() {
        ech.insert(m.row(i).to_vec());
    }
    let rows = ech.sorted_rows();
    let pivot_set: std::collections::HashSet<usize> = rows.iter().map(|(p, _)| *p).collect();
    (0..m.cols())
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut v = vec![Q::ZERO; m.cols()];
            v[free] = Q::ONE;
            for (p, row) in &rows {
                if let Some(x) = sparse_lookup(row, free) {
                    v[*p] = -x;
                }
            }
            v
        })
        .collect()
}

/// Solves `basis · X = targets` where `basis` holds independent column
/// vectors. Fails with `NotInvariant` if some target leaves the span.
pub fn solve_in_span(basis: &[Vec<Q>], targets: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
    let k = basis.len();
    let m = targets.len();
    let n = basis.first().or(targets.first()).map_or(0, Vec::len);
    let mut ech = Echelon::new(k + m);
    for i in 0..n {
        let mut row = Vec::with_capacity(k + m);
        row.extend(basis.iter().map(|b| b[i].clone()));
        row.extend(targets.iter().map(|t| t[i].clone()));
        ech.insert(row);
    }
    let rows = ech.sorted_rows();
    if rows.iter().any(|(p, _)| *p >= k) {
        return Err(Error::NotInvariant("target outside span".into()));
    }
    if rows.len() < k {
        return Err(Error::Singular);
    }
    // coefficient of basis j in target t: row with pivot j, column k + t
    let mut coeffs = vec![vec![Q::ZERO; m]; k];
    for (p, row) in rows {
        for (j, x) in row {
            if *j >= k {
                coeffs[p][*j - k] = x.clone();
            }
        }
    }
    // transpose so that result[t] lists coordinates of target t
    Ok((0..m).map(|t| (0..k).map(|j| coeffs[j][t].clone()).collect()).collect())
}

pub fn inverse(m: &ExactMatrix) -> Result<ExactMatrix> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
    }
    let n = m.rows();
    let cols: Vec<Vec<Q>> = (0..n).map(|j| m.column(j)).collect();
    let units: Vec<Vec<Q>> = (0..n)
        .map(|j| {
            let mut e = vec![Q::ZERO; n];
            e[j] = Q::ONE;
            e
        })
        .collect();
    let sol = solve_in_span(&cols, &units).map_err(|_| Error::Singular)?;
    // sol[t] = coordinates of e_t in terms of columns of m, i.e. column t of m^{-1}
    Ok(ExactMatrix::from_columns(&sol))
}

/// A subspace of `Q^ambient` stored as its canonical RREF row basis, so two
/// equal subspaces compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors(ambient_dim: usize, vectors: impl IntoIterator<Item = Vec<Q>>) -> Self {
        let mut ech = Echelon::new(ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length mismatch");
            ech.insert(v);
        }
        Self::from_echelon(&ech)
    }

    pub fn from_echelon(ech: &Echelon) -> Self {
        let sorted = ech.sorted_rows();
        let pivots = sorted.iter().map(|(p, _)| *p).collect();
        Self {
            ambient_dim: ech.len(),
            basis: ech.dense_rows(),
            pivots,
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_vectors(
            ambient_dim,
            (0..ambient_dim).map(|j| {
                let mut e = vec![Q::ZERO; ambient_dim];
                e[j] = Q::ONE;
                e
            }),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&c * r);
                }
            }
        }
        w.iter().all(Q::is_zero)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Self::from_vectors(self.ambient_dim, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn is_invariant_under(&self, m: &ExactMatrix) -> bool {
        self.basis.iter().all(|v| self.contains(&m.apply(v)))
    }
}

/// Serialized as its ambient dimension and canonical basis rows.
impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<Vec<String>> = self
            .basis
            .iter()
            .map(|v| v.iter().map(ToString::to_string).collect())
            .collect();
        let mut st = s.serialize_struct("Subspace", 2)?;
        st.serialize_field("ambient_dim", &self.ambient_dim)?;
        st.serialize_field("basis", &rows)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::q;
    use crate::mat;

    #[test]
    fn rref_examples() {
        let (r, k) = rref(&ExactMatrix::identity(3));
        assert_eq!((r, k), (ExactMatrix::identity(3), 3));
        let (r, k) = rref(&ExactMatrix::zeros(2, 2));
        assert_eq!((r, k), (ExactMatrix::zeros(2, 2), 0));
        // second row is i times the first
        let m = ExactMatrix::from_rows(vec![vec![Q::ONE, Q::I], vec![Q::I, -Q::ONE]]);
        assert_eq!(rref(&m).1, 1);
    }

    #[test]
    fn rref_is_idempotent_on_sample() {
        let m = mat![[2, 4, 1], [1, 2, 0], [3, 6, 1]];
        let (r, _) = rref(&m);
        assert_eq!(rref(&r).0, r);
    }

    #[test]
    fn kernel_and_inverse() {
        let m = mat![[1, 2], [2, 4]];
        let ker = nullspace(&m);
        assert_eq!(ker, vec![vec![q(-2, 1), Q::ONE]]);
        let a = mat![[2, 1], [1, 1]];
        let inv = inverse(&a).unwrap();
        assert_eq!(&a * &inv, ExactMatrix::identity(2));
        assert_eq!(inverse(&m), Err(Error::Singular));
    }

    #[test]
    fn subspace_canonical_equality() {
        let s1 = Subspace::from_vectors(3, vec![vec![q(1, 1), q(1, 1), Q::ZERO], vec![Q::ZERO, Q::ONE, Q::ONE]]);
        let s2 = Subspace::from_vectors(3, vec![vec![q(1, 1), q(2, 1), Q::ONE], vec![q(2, 1), q(2, 1), Q::ZERO]]);
        assert_eq!(s1, s2);
        assert!(s1.contains(&[q(1, 1), Q::ZERO, q(-1, 1)]));
        assert!(!s1.contains(&[Q::ZERO, Q::ZERO, Q::ONE]));
    }

    #[test]
    fn solve_reports_coordinates() {
        let basis = vec![vec![Q::ONE, Q::ONE, Q::ZERO], vec![Q::ZERO, Q::ONE, Q::ONE]];
        let t = vec![vec![q(2, 1), q(5, 1), q(3, 1)]];
        let c = solve_in_span(&basis, &t).unwrap();
        assert_eq!(c, vec![vec![q(2, 1), q(3, 1)]]);
        let outside = vec![vec![Q::ONE, Q::ZERO, Q::ZERO]];
        assert!(solve_in_span(&basis, &outside).is_err());
    }
}
