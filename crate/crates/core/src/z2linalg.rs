//! Sparse linear algebra over Z₂.
//!
//! Columns are stored as strictly increasing lists of row indices, which is the
//! canonical representation of a Z₂ vector. Column addition is a symmetric
//! difference of two sorted lists.

use std::fmt;

use crate::error::{Error, Result};

/// Symmetric difference of two sorted index lists.
pub fn add_columns(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Row index of the lowest non-zero entry, `None` for the zero column.
#[inline]
pub fn low(column: &[usize]) -> Option<usize> {
    column.last().copied()
}

/// Sorts an index list and cancels repeated entries in pairs.
pub fn canonicalize(mut indices: Vec<usize>) -> Vec<usize> {
    indices.sort_unstable();
    let mut out: Vec<usize> = Vec::with_capacity(indices.len());
    for i in indices {
        if out.last() == Some(&i) {
            out.pop();
        } else {
            out.push(i);
        }
    }
    out
}

fn check_canonical(column: &[usize], n_rows: usize) -> Result<()> {
    if column.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonCanonical(format!("{column:?}")));
    }
    if let Some(&last) = column.last() {
        if last >= n_rows {
            return Err(Error::IndexOutOfRange { index: last, bound: n_rows });
        }
    }
    Ok(())
}

/// A Z₂ vector in a fixed ambient space, stored by its support.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ChainVector {
    ambient_size: usize,
    support: Vec<usize>,
}

impl ChainVector {
    pub fn new(ambient_size: usize, support: Vec<usize>) -> Result<Self> {
        check_canonical(&support, ambient_size)?;
        Ok(Self { ambient_size, support })
    }

    /// Builds a vector from indices in any order; repeated indices cancel mod 2.
    pub fn from_indices(ambient_size: usize, indices: Vec<usize>) -> Result<Self> {
        Self::new(ambient_size, canonicalize(indices))
    }

    pub fn zero(ambient_size: usize) -> Self {
        Self { ambient_size, support: Vec::new() }
    }

    pub(crate) fn from_sorted_unchecked(ambient_size: usize, support: Vec<usize>) -> Self {
        debug_assert!(check_canonical(&support, ambient_size).is_ok());
        Self { ambient_size, support }
    }

    pub fn ambient_size(&self) -> usize {
        self.ambient_size
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn into_support(self) -> Vec<usize> {
        self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Number of non-zero entries.
    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.support.binary_search(&index).is_ok()
    }

    pub fn add_assign(&mut self, other: &ChainVector) {
        debug_assert_eq!(self.ambient_size, other.ambient_size);
        self.support = add_columns(&self.support, &other.support);
    }

    pub fn sum(&self, other: &ChainVector) -> ChainVector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
}

impl fmt::Debug for ChainVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainVector[{}]{:?}", self.ambient_size, self.support)
    }
}

/// Sparse column matrix over Z₂.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Z2Matrix {
    n_rows: usize,
    columns: Vec<Vec<usize>>,
}

impl Z2Matrix {
    /// An `n_rows × 0` matrix.
    pub fn new(n_rows: usize) -> Self {
        Self { n_rows, columns: Vec::new() }
    }

    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self { n_rows, columns: vec![Vec::new(); n_cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self { n_rows: n, columns: (0..n).map(|j| vec![j]).collect() }
    }

    pub fn from_columns(n_rows: usize, columns: Vec<Vec<usize>>) -> Result<Self> {
        for c in &columns {
            check_canonical(c, n_rows)?;
        }
        Ok(Self { n_rows, columns })
    }

    pub(crate) fn from_columns_unchecked(n_rows: usize, columns: Vec<Vec<usize>>) -> Self {
        debug_assert!(columns.iter().all(|c| check_canonical(c, n_rows).is_ok()));
        Self { n_rows, columns }
    }

    pub fn from_chains<'a>(n_rows: usize, chains: impl IntoIterator<Item = &'a ChainVector>) -> Self {
        let columns = chains
            .into_iter()
            .map(|c| {
                debug_assert_eq!(c.ambient_size, n_rows);
                c.support.clone()
            })
            .collect();
        Self { n_rows, columns }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[usize] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn column_vector(&self, j: usize) -> ChainVector {
        ChainVector::from_sorted_unchecked(self.n_rows, self.columns[j].clone())
    }

    pub fn push_column(&mut self, column: Vec<usize>) -> Result<()> {
        check_canonical(&column, self.n_rows)?;
        self.columns.push(column);
        Ok(())
    }

    pub fn push_chain(&mut self, chain: &ChainVector) {
        debug_assert_eq!(chain.ambient_size, self.n_rows);
        self.columns.push(chain.support.clone());
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Z2Matrix) -> Result<Z2Matrix> {
        if self.n_rows != other.n_rows {
            return Err(Error::DimensionMismatch { expected: self.n_rows, found: other.n_rows });
        }
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        Ok(Z2Matrix { n_rows: self.n_rows, columns })
    }

    /// `self · x` for a selection vector `x` over the columns.
    pub fn apply(&self, x: &ChainVector) -> ChainVector {
        debug_assert_eq!(x.ambient_size, self.n_cols());
        let mut acc = Vec::new();
        for &j in &x.support {
            acc = add_columns(&acc, &self.columns[j]);
        }
        ChainVector::from_sorted_unchecked(self.n_rows, acc)
    }

    /// Matrix product over Z₂.
    pub fn mul(&self, rhs: &Z2Matrix) -> Result<Z2Matrix> {
        if self.n_cols() != rhs.n_rows {
            return Err(Error::DimensionMismatch { expected: self.n_cols(), found: rhs.n_rows });
        }
        let columns = rhs
            .columns
            .iter()
            .map(|c| {
                c.iter().fold(Vec::new(), |acc, &j| add_columns(&acc, &self.columns[j]))
            })
            .collect();
        Ok(Z2Matrix { n_rows: self.n_rows, columns })
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn rank(&self) -> usize {
        let mut reducer = Reducer::new(self.n_rows, false);
        self.columns.iter().filter(|c| reducer.push(c).is_some()).count()
    }
}

impl fmt::Debug for Z2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Z2Matrix")
            .field("n_rows", &self.n_rows)
            .field("columns", &self.columns)
            .finish()
    }
}

/// Incremental left-to-right column reduction.
///
/// Pushing columns one at a time produces exactly the state the standard
/// reduction reaches after processing the same prefix, so a reduced prefix can
/// be cloned and extended with different suffixes.
#[derive(Clone, Debug)]
pub struct Reducer {
    n_rows: usize,
    reduced: Vec<Vec<usize>>,
    basis_change: Option<Vec<Vec<usize>>>,
    pivot_column: Vec<Option<usize>>,
}

impl Reducer {
    pub fn new(n_rows: usize, track_basis_change: bool) -> Self {
        Self {
            n_rows,
            reduced: Vec::new(),
            basis_change: track_basis_change.then(Vec::new),
            pivot_column: vec![None; n_rows],
        }
    }

    pub fn n_cols(&self) -> usize {
        self.reduced.len()
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    /// Reduces and stores the next column. Returns its low after reduction.
    pub fn push(&mut self, column: &[usize]) -> Option<usize> {
        debug_assert!(check_canonical(column, self.n_rows).is_ok());
        let j = self.reduced.len();
        let mut col = column.to_vec();
        let mut v = self.basis_change.as_ref().map(|_| vec![j]);
        while let Some(l) = low(&col) {
            let Some(j0) = self.pivot_column[l] else { break };
            col = add_columns(&col, &self.reduced[j0]);
            if let (Some(v), Some(bc)) = (v.as_mut(), self.basis_change.as_ref()) {
                *v = add_columns(v, &bc[j0]);
            }
        }
        let l = low(&col);
        if let Some(l) = l {
            self.pivot_column[l] = Some(j);
        }
        self.reduced.push(col);
        if let (Some(v), Some(bc)) = (v, self.basis_change.as_mut()) {
            bc.push(v);
        }
        l
    }

    pub fn reduced_column(&self, j: usize) -> &[usize] {
        &self.reduced[j]
    }

    /// Column `j` of the basis change `V`; `None` when not tracked.
    pub fn basis_change_column(&self, j: usize) -> Option<&[usize]> {
        self.basis_change.as_ref().map(|bc| bc[j].as_slice())
    }

    /// Column whose reduced low is `row`, if any.
    pub fn pivot_column(&self, row: usize) -> Option<usize> {
        self.pivot_column[row]
    }

    /// Whether `v` lies in the span of the columns pushed so far.
    pub fn contains(&self, v: &[usize]) -> bool {
        let mut col = v.to_vec();
        while let Some(l) = low(&col) {
            match self.pivot_column[l] {
                Some(j0) => col = add_columns(&col, &self.reduced[j0]),
                None => return false,
            }
        }
        true
    }

    /// Reduces `v` against the stored columns, returning the residual and the
    /// set of original columns whose sum equals `v − residual`.
    pub fn reduce_vector(&self, v: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let bc = self
            .basis_change
            .as_ref()
            .expect("reduce_vector requires basis change tracking");
        let mut col = v.to_vec();
        let mut combo = Vec::new();
        while let Some(l) = low(&col) {
            let Some(j0) = self.pivot_column[l] else { break };
            col = add_columns(&col, &self.reduced[j0]);
            combo = add_columns(&combo, &bc[j0]);
        }
        (col, combo)
    }

    pub fn finish(self) -> ReductionResult {
        let n_cols = self.reduced.len();
        let basis_change = match self.basis_change {
            Some(bc) => Z2Matrix::from_columns_unchecked(n_cols, bc),
            None => Z2Matrix::identity(n_cols),
        };
        let reduced = Z2Matrix::from_columns_unchecked(self.n_rows, self.reduced);
        let mut pairs = Vec::new();
        let mut is_low = vec![false; n_cols.max(self.n_rows)];
        for (j, col) in reduced.columns().iter().enumerate() {
            if let Some(l) = low(col) {
                pairs.push((l, j));
                is_low[l] = true;
            }
        }
        let unpaired = (0..n_cols)
            .filter(|&j| reduced.column(j).is_empty() && !is_low[j])
            .collect();
        ReductionResult { reduced, basis_change, pairs, unpaired }
    }
}

/// Output of the standard reduction: `reduced = M · basis_change`.
#[derive(Clone, Debug)]
pub struct ReductionResult {
    pub reduced: Z2Matrix,
    pub basis_change: Z2Matrix,
    /// `(low row, column)` for every non-zero reduced column.
    pub pairs: Vec<(usize, usize)>,
    /// Zero reduced columns whose index is not the low of another column.
    pub unpaired: Vec<usize>,
}

/// Standard left-to-right reduction with basis-change tracking.
pub fn standard_reduction(m: &Z2Matrix) -> ReductionResult {
    let mut reducer = Reducer::new(m.n_rows(), true);
    for c in m.columns() {
        reducer.push(c);
    }
    reducer.finish()
}

/// Solution of `A·x = b` as the set of selected columns of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Feasible(Vec<usize>),
    Infeasible,
}

impl Solution {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Solution::Feasible(_))
    }

    pub fn indices(&self) -> Option<&[usize]> {
        match self {
            Solution::Feasible(s) => Some(s),
            Solution::Infeasible => None,
        }
    }
}

/// Solves `A·x = b` by reducing `[A | b]`.
///
/// When the appended column reduces to zero, its basis-change column minus the
/// column itself lists the columns of `A` summing to `b`.
pub fn solve_by_reduction(a: &Z2Matrix, b: &ChainVector) -> Result<Solution> {
    if b.ambient_size() != a.n_rows() {
        return Err(Error::DimensionMismatch { expected: a.n_rows(), found: b.ambient_size() });
    }
    let mut reducer = Reducer::new(a.n_rows(), true);
    for c in a.columns() {
        reducer.push(c);
    }
    Ok(solve_with(&mut reducer, b.support()))
}

/// Appends `b` to an already reduced prefix and reads off the solution.
pub(crate) fn solve_with(reducer: &mut Reducer, b: &[usize]) -> Solution {
    let s = reducer.n_cols();
    if reducer.push(b).is_some() {
        return Solution::Infeasible;
    }
    let v = reducer.basis_change_column(s).expect("basis change tracked");
    debug_assert_eq!(v.last(), Some(&s));
    Solution::Feasible(v[..v.len() - 1].to_vec())
}

/// Whether `v` lies in the column span of `basis`.
pub fn in_span(basis: &Z2Matrix, v: &ChainVector) -> Result<bool> {
    Ok(solve_by_reduction(basis, v)?.is_feasible())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n_rows: usize, cols: &[&[usize]]) -> Z2Matrix {
        Z2Matrix::from_columns(n_rows, cols.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn low_examples() {
        assert_eq!(low(&[0, 2, 5]), Some(5));
        assert_eq!(low(&[]), None);
        let id = Z2Matrix::identity(4);
        for j in 0..4 {
            assert_eq!(low(id.column(j)), Some(j));
        }
    }

    #[test]
    fn canonical_form_is_enforced() {
        assert!(ChainVector::new(3, vec![2, 1]).is_err());
        assert!(ChainVector::new(3, vec![1, 1]).is_err());
        assert!(ChainVector::new(3, vec![3]).is_err());
        assert_eq!(ChainVector::from_indices(5, vec![3, 1, 3, 4, 1, 1]).unwrap().support(), &[1, 4]);
    }

    #[test]
    fn zero_matrix_reduction() {
        let r = standard_reduction(&Z2Matrix::zeros(3, 4));
        assert!(r.reduced.is_zero());
        assert_eq!(r.basis_change, Z2Matrix::identity(4));
        assert_eq!(r.unpaired, vec![0, 1, 2, 3]);
        assert!(r.pairs.is_empty());
    }

    #[test]
    fn hollow_triangle_boundary() {
        // vertices 0,1,2; edges e01, e02, e12 (simplexwise order: v v v e e e)
        // full square boundary matrix, indices 0..6
        let d = m(6, &[&[], &[], &[], &[0, 1], &[0, 2], &[1, 2]]);
        let r = standard_reduction(&d);
        assert_eq!(r.unpaired, vec![0, 5]);
        assert_eq!(r.basis_change.column(5), &[3, 4, 5]);
        assert_eq!(r.reduced, r.reduced.clone());
        assert_eq!(d.mul(&r.basis_change).unwrap(), r.reduced);
    }

    #[test]
    fn solve_examples() {
        let a = Z2Matrix::identity(4);
        let b = ChainVector::new(4, vec![1, 3]).unwrap();
        assert_eq!(solve_by_reduction(&a, &b).unwrap(), Solution::Feasible(vec![1, 3]));

        let a = Z2Matrix::zeros(3, 1);
        let b = ChainVector::new(3, vec![0]).unwrap();
        assert_eq!(solve_by_reduction(&a, &b).unwrap(), Solution::Infeasible);

        // boundary of the filled triangle: one column over the three edges
        let a = m(3, &[&[0, 1, 2]]);
        let b = ChainVector::new(3, vec![0, 1, 2]).unwrap();
        assert_eq!(solve_by_reduction(&a, &b).unwrap(), Solution::Feasible(vec![0]));
    }

    #[test]
    fn solve_rejects_mismatched_rhs() {
        let a = Z2Matrix::identity(3);
        assert!(solve_by_reduction(&a, &ChainVector::zero(4)).is_err());
    }

    #[test]
    fn span_examples() {
        let empty = Z2Matrix::new(3);
        assert!(in_span(&empty, &ChainVector::zero(3)).unwrap());
        assert!(!in_span(&empty, &ChainVector::new(3, vec![1]).unwrap()).unwrap());
        let cycle = ChainVector::new(3, vec![0, 1, 2]).unwrap();
        let basis = Z2Matrix::from_chains(3, [&cycle]);
        assert!(in_span(&basis, &cycle).unwrap());
    }

    #[test]
    fn reducer_prefix_clone_matches_full_reduction() {
        let a = m(5, &[&[0, 1], &[1, 2], &[0, 2], &[3, 4]]);
        let mut prefix = Reducer::new(5, true);
        prefix.push(a.column(0));
        prefix.push(a.column(1));
        let mut ext = prefix.clone();
        ext.push(a.column(2));
        ext.push(a.column(3));
        let full = standard_reduction(&a);
        let ext = ext.finish();
        assert_eq!(full.reduced, ext.reduced);
        assert_eq!(full.basis_change, ext.basis_change);
    }

    #[test]
    fn reduce_vector_reports_combination() {
        let a = m(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let mut r = Reducer::new(4, true);
        for c in a.columns() {
            r.push(c);
        }
        let (res, combo) = r.reduce_vector(&[0, 3]);
        assert!(res.is_empty());
        assert_eq!(combo, vec![0, 1, 2]);
        assert!(r.contains(&[0, 2]));
        assert!(!r.contains(&[0]));
    }
}
