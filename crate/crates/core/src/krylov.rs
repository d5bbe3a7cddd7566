//! Sparse matrices, threshold ILU and unrestarted GMRES.
//!
//! The default protocol factors with drop tolerance `1e-4`, then runs
//! left-preconditioned GMRES from a zero initial guess until the true
//! (unpreconditioned) relative residual is at most `1e-9`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const DEFAULT_DROP_TOL: f64 = 1e-4;
pub const DEFAULT_RTOL: f64 = 1e-9;
pub const DEFAULT_MAX_ITER: usize = 500;

/// Pivots below this fraction of the row norm fail the factorization.
const PIVOT_TOL: f64 = 1e-14;

#[derive(Debug, thiserror::Error)]
pub enum KrylovError {
    #[error("zero pivot in row {row} during incomplete factorization")]
    ZeroPivot { row: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("max_iter must be at least 1")]
    ZeroIterations,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Square matrix in compressed sparse row form with sorted column indices.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    dim: usize,
    row_offsets: Vec<usize>,
    col_indices: Vec<usize>,
    values: Vec<f64>,
}

impl SparseMatrix {
    /// Builds from `(row, col, value)` triplets. Duplicates are summed; entries
    /// that sum to exactly zero are dropped unless they sit on the diagonal.
    pub fn from_triplets(dim: usize, triplets: &[(usize, usize, f64)]) -> Self {
        let mut counts = vec![0usize; dim + 1];
        for &(r, _, _) in triplets {
            counts[r + 1] += 1;
        }
        for i in 0..dim {
            counts[i + 1] += counts[i];
        }
        let mut cols = vec![0usize; triplets.len()];
        let mut vals = vec![0.0; triplets.len()];
        let mut next = counts.clone();
        for &(r, c, v) in triplets {
            cols[next[r]] = c;
            vals[next[r]] = v;
            next[r] += 1;
        }

        let mut row_offsets = Vec::with_capacity(dim + 1);
        let mut col_indices = Vec::with_capacity(triplets.len());
        let mut values = Vec::with_capacity(triplets.len());
        row_offsets.push(0);
        let mut order: Vec<usize> = Vec::new();
        for r in 0..dim {
            let (s, e) = (counts[r], counts[r + 1]);
            order.clear();
            order.extend(s..e);
            // stable: duplicates are summed in insertion order
            order.sort_by_key(|&k| cols[k]);
            let mut k = 0;
            while k < order.len() {
                let c = cols[order[k]];
                let mut sum = 0.0;
                while k < order.len() && cols[order[k]] == c {
                    sum += vals[order[k]];
                    k += 1;
                }
                if sum != 0.0 || c == r {
                    col_indices.push(c);
                    values.push(sum);
                }
            }
            row_offsets.push(col_indices.len());
        }
        Self {
            dim,
            row_offsets,
            col_indices,
            values,
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            row_offsets: (0..=dim).collect(),
            col_indices: (0..dim).collect(),
            values: vec![1.0; dim],
        }
    }

    pub fn from_dense(rows: &[Vec<f64>]) -> Self {
        let dim = rows.len();
        let triplets: Vec<_> = rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &v)| (i, j, v)))
            .filter(|&(i, j, v)| v != 0.0 || i == j)
            .collect();
        Self::from_triplets(dim, &triplets)
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut out = vec![vec![0.0; self.dim]; self.dim];
        for (i, row) in out.iter_mut().enumerate() {
            for (c, v) in self.row(i) {
                row[c] = v;
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.row_offsets
    }

    pub fn col_indices(&self) -> &[usize] {
        &self.col_indices
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.row_offsets[i]..self.row_offsets[i + 1];
        self.col_indices[range.clone()]
            .iter()
            .copied()
            .zip(self.values[range].iter().copied())
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let range = self.row_offsets[i]..self.row_offsets[i + 1];
        match self.col_indices[range.clone()].binary_search(&j) {
            Ok(k) => self.values[range.start + k],
            Err(_) => 0.0,
        }
    }

    /// `y = A x`. Rows are independent, each summed left to right.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.dim];
        self.mul_vec_into(x, &mut y);
        y
    }

    pub fn mul_vec_into(&self, x: &[f64], y: &mut [f64]) {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        y.par_iter_mut().with_min_len(1024).enumerate().for_each(|(i, yi)| {
            *yi = self.row(i).map(|(c, v)| v * x[c]).sum();
        });
    }

    /// Largest `|A_ij - A_ji|`.
    pub fn max_asymmetry(&self) -> f64 {
        (0..self.dim)
            .flat_map(|i| self.row(i).map(move |(j, v)| (i, j, v)))
            .map(|(i, j, v)| (v - self.get(j, i)).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Coordinate text format: `dim nnz`, then `row col value` lines (0-based).
    pub fn write_coo<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{} {}", self.dim, self.nnz())?;
        for i in 0..self.dim {
            for (j, v) in self.row(i) {
                writeln!(w, "{i} {j} {v:.16e}")?;
            }
        }
        Ok(())
    }

    pub fn read_coo<R: BufRead>(reader: R) -> Result<Self, KrylovError> {
        let mut dim = None;
        let mut triplets = Vec::new();
        for (n, line) in reader.lines().enumerate() {
            let line = line?;
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.is_empty() || fields[0].starts_with('#') {
                continue;
            }
            let parse_err = |m: &str| KrylovError::Parse {
                line: n + 1,
                message: m.to_string(),
            };
            match dim {
                None => {
                    if fields.len() != 2 {
                        return Err(parse_err("expected `dim nnz` header"));
                    }
                    dim = Some(fields[0].parse::<usize>().map_err(|_| parse_err("bad dim"))?);
                }
                Some(d) => {
                    if fields.len() != 3 {
                        return Err(parse_err("expected `row col value`"));
                    }
                    let i: usize = fields[0].parse().map_err(|_| parse_err("bad row"))?;
                    let j: usize = fields[1].parse().map_err(|_| parse_err("bad col"))?;
                    let v: f64 = fields[2].parse().map_err(|_| parse_err("bad value"))?;
                    if i >= d || j >= d {
                        return Err(parse_err("index out of range"));
                    }
                    triplets.push((i, j, v));
                }
            }
        }
        let dim = dim.ok_or(KrylovError::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        Ok(Self::from_triplets(dim, &triplets))
    }
}

pub fn write_vector<W: Write>(mut w: W, v: &[f64]) -> std::io::Result<()> {
    for x in v {
        writeln!(w, "{x:.16e}")?;
    }
    Ok(())
}

pub fn read_vector<R: BufRead>(reader: R) -> Result<Vec<f64>, KrylovError> {
    let mut out = Vec::new();
    for (n, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        out.push(t.parse().map_err(|_| KrylovError::Parse {
            line: n + 1,
            message: format!("cannot parse `{t}`"),
        })?);
    }
    Ok(out)
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Incomplete LU factors: `lower` holds the strict lower part of a unit lower
/// triangular matrix, `upper` the upper part with the diagonal first in
/// each row.
#[derive(Debug, Clone)]
pub struct IluFactors {
    pub lower: SparseMatrix,
    pub upper: SparseMatrix,
    pub drop_tol: f64,
}

/// Threshold ILU without pivoting. While eliminating row `i`, multipliers and
/// fill entries with magnitude below `drop_tol * ||a_i||_2` are discarded; the
/// diagonal is always kept.
pub fn ilu_factorize(a: &SparseMatrix, drop_tol: f64) -> Result<IluFactors, KrylovError> {
    let n = a.dim();
    let mut l_off = vec![0usize];
    let mut l_col = Vec::new();
    let mut l_val = Vec::new();
    let mut u_off = vec![0usize];
    let mut u_col: Vec<usize> = Vec::new();
    let mut u_val: Vec<f64> = Vec::new();

    let mut work = vec![0.0; n];
    let mut in_row = vec![false; n];
    let mut nz: Vec<usize> = Vec::new();
    let mut heap: BinaryHeap<Reverse<usize>> = BinaryHeap::new();

    for i in 0..n {
        let row_norm = a.row(i).map(|(_, v)| v * v).sum::<f64>().sqrt();
        let threshold = drop_tol * row_norm;

        for (j, v) in a.row(i) {
            work[j] = v;
            in_row[j] = true;
            nz.push(j);
            if j < i {
                heap.push(Reverse(j));
            }
        }
        if !in_row[i] {
            in_row[i] = true;
            nz.push(i);
        }

        while let Some(Reverse(k)) = heap.pop() {
            let pivot = u_val[u_off[k]];
            let mult = work[k] / pivot;
            if mult.abs() < threshold {
                work[k] = 0.0;
                continue;
            }
            work[k] = mult;
            for idx in u_off[k] + 1..u_off[k + 1] {
                let j = u_col[idx];
                if !in_row[j] {
                    in_row[j] = true;
                    nz.push(j);
                    if j < i {
                        heap.push(Reverse(j));
                    }
                }
                work[j] -= mult * u_val[idx];
            }
        }

        nz.sort_unstable();
        let diag = work[i];
        if !(diag.abs() > PIVOT_TOL * row_norm) {
            return Err(KrylovError::ZeroPivot { row: i });
        }
        u_col.push(i);
        u_val.push(diag);
        for &j in &nz {
            let v = work[j];
            if j != i && v != 0.0 && v.abs() >= threshold {
                if j < i {
                    l_col.push(j);
                    l_val.push(v);
                } else {
                    u_col.push(j);
                    u_val.push(v);
                }
            }
            work[j] = 0.0;
            in_row[j] = false;
        }
        nz.clear();
        l_off.push(l_col.len());
        u_off.push(u_col.len());
    }

    Ok(IluFactors {
        lower: SparseMatrix {
            dim: n,
            row_offsets: l_off,
            col_indices: l_col,
            values: l_val,
        },
        upper: SparseMatrix {
            dim: n,
            row_offsets: u_off,
            col_indices: u_col,
            values: u_val,
        },
        drop_tol,
    })
}

impl IluFactors {
    /// `z = U^{-1} L^{-1} r` by forward then backward substitution.
    pub fn apply(&self, r: &[f64]) -> Vec<f64> {
        let n = self.lower.dim;
        let mut z = r.to_vec();
        for i in 0..n {
            let s: f64 = self.lower.row(i).map(|(j, v)| v * z[j]).sum();
            z[i] -= s;
        }
        for i in (0..n).rev() {
            let (s, e) = (self.upper.row_offsets[i], self.upper.row_offsets[i + 1]);
            let mut acc = z[i];
            for k in s + 1..e {
                acc -= self.upper.values[k] * z[self.upper.col_indices[k]];
            }
            z[i] = acc / self.upper.values[s];
        }
        z
    }

    pub fn fill(&self) -> usize {
        self.lower.nnz() + self.upper.nnz()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveStats {
    pub iterations: usize,
    /// `||b - A x|| / ||b||` recomputed from the returned iterate.
    pub relative_residual: f64,
    pub converged: bool,
    pub preconditioned: bool,
    /// Preconditioned residual estimates relative to `||M^{-1} b||`, one per iteration.
    pub residual_history: Vec<f64>,
}

/// Unrestarted left-preconditioned GMRES from `x0 = 0`.
///
/// Convergence is declared only when the recomputed unpreconditioned relative
/// residual is at most `rtol`. A happy breakdown ends the iteration.
pub fn gmres(
    a: &SparseMatrix,
    b: &[f64],
    precond: Option<&IluFactors>,
    rtol: f64,
    max_iter: usize,
) -> Result<(Vec<f64>, SolveStats), KrylovError> {
    let n = a.dim();
    if b.len() != n {
        return Err(KrylovError::DimensionMismatch {
            expected: n,
            found: b.len(),
        });
    }
    if max_iter == 0 {
        return Err(KrylovError::ZeroIterations);
    }
    let apply_m = |v: &[f64]| match precond {
        Some(m) => m.apply(v),
        None => v.to_vec(),
    };
    let b_norm = norm2(b);
    let mut stats = SolveStats {
        iterations: 0,
        relative_residual: 0.0,
        converged: true,
        preconditioned: precond.is_some(),
        residual_history: Vec::new(),
    };
    if b_norm == 0.0 {
        return Ok((vec![0.0; n], stats));
    }

    let r0 = apply_m(b);
    let beta = norm2(&r0);
    let mut basis: Vec<Vec<f64>> = vec![r0.iter().map(|v| v / beta).collect()];
    // Columns of the Hessenberg matrix after Givens rotations (upper triangular).
    let mut r_cols: Vec<Vec<f64>> = Vec::new();
    let mut cs: Vec<f64> = Vec::new();
    let mut sn: Vec<f64> = Vec::new();
    let mut g = vec![beta];
    let mut target = rtol * beta;
    let mut av = vec![0.0; n];

    let solution = |r_cols: &[Vec<f64>], g: &[f64], basis: &[Vec<f64>]| {
        let k = r_cols.len();
        let mut y = vec![0.0; k];
        for i in (0..k).rev() {
            let mut acc = g[i];
            for j in i + 1..k {
                acc -= r_cols[j][i] * y[j];
            }
            y[i] = acc / r_cols[i][i];
        }
        let mut x = vec![0.0; n];
        for (yj, v) in y.iter().zip(basis) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += yj * vi;
            }
        }
        x
    };
    let true_residual = |x: &[f64], av: &mut Vec<f64>| {
        a.mul_vec_into(x, av);
        let r: f64 = b.iter().zip(av.iter()).map(|(bi, ai)| (bi - ai).powi(2)).sum();
        r.sqrt() / b_norm
    };

    for j in 0..max_iter {
        a.mul_vec_into(&basis[j], &mut av);
        let mut w = apply_m(&av);
        let w_norm0 = norm2(&w);
        let mut h = vec![0.0; j + 2];
        for (i, v) in basis.iter().enumerate() {
            let hij = dot(&w, v);
            h[i] = hij;
            for (wk, vk) in w.iter_mut().zip(v) {
                *wk -= hij * vk;
            }
        }
        let h_next = norm2(&w);
        h[j + 1] = h_next;

        for i in 0..j {
            let t = cs[i] * h[i] + sn[i] * h[i + 1];
            h[i + 1] = -sn[i] * h[i] + cs[i] * h[i + 1];
            h[i] = t;
        }
        let denom = h[j].hypot(h[j + 1]);
        let (c, s) = if denom == 0.0 { (1.0, 0.0) } else { (h[j] / denom, h[j + 1] / denom) };
        cs.push(c);
        sn.push(s);
        h[j] = denom;
        h[j + 1] = 0.0;
        g.push(-s * g[j]);
        g[j] *= c;
        h.truncate(j + 1);
        r_cols.push(h);

        let estimate = g[j + 1].abs();
        stats.iterations = j + 1;
        stats.residual_history.push(estimate / beta);

        let breakdown = h_next <= 1e-14 * w_norm0;
        if estimate <= target || breakdown {
            let x = solution(&r_cols, &g, &basis);
            let rel = true_residual(&x, &mut av);
            if rel <= rtol {
                stats.relative_residual = rel;
                return Ok((x, stats));
            }
            if breakdown {
                stats.relative_residual = rel;
                stats.converged = false;
                return Ok((x, stats));
            }
            // The preconditioned estimate was optimistic; tighten it.
            target = estimate * (rtol / rel) * 0.5;
        }
        if j + 1 < max_iter {
            basis.push(w.iter().map(|v| v / h_next).collect());
        }
    }

    let x = solution(&r_cols, &g, &basis);
    stats.relative_residual = true_residual(&x, &mut av);
    stats.converged = stats.relative_residual <= rtol;
    Ok((x, stats))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverParams {
    pub drop_tol: f64,
    pub rtol: f64,
    pub max_iter: usize,
}

impl Default for SolverParams {
    fn default() -> Self {
        Self {
            drop_tol: DEFAULT_DROP_TOL,
            rtol: DEFAULT_RTOL,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

/// ILU-preconditioned GMRES. A failed factorization is logged and the solve
/// continues without preconditioning.
pub fn solve(
    a: &SparseMatrix,
    b: &[f64],
    params: &SolverParams,
) -> Result<(Vec<f64>, SolveStats), KrylovError> {
    let factors = match ilu_factorize(a, params.drop_tol) {
        Ok(f) => Some(f),
        Err(KrylovError::ZeroPivot { row }) => {
            log::warn!("ILU failed at row {row}; running GMRES unpreconditioned");
            None
        }
        Err(e) => return Err(e),
    };
    gmres(a, b, factors.as_ref(), params.rtol, params.max_iter)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tridiagonal(n: usize) -> SparseMatrix {
        let mut t = Vec::new();
        for i in 0..n {
            t.push((i, i, 4.0));
            if i > 0 {
                t.push((i, i - 1, -1.0));
                t.push((i - 1, i, -1.0));
            }
        }
        SparseMatrix::from_triplets(n, &t)
    }

    fn dense_product(l: &SparseMatrix, u: &SparseMatrix) -> Vec<Vec<f64>> {
        let n = l.dim();
        let mut ld = l.to_dense();
        for (i, row) in ld.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        let ud = u.to_dense();
        let mut out = vec![vec![0.0; n]; n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    out[i][j] += ld[i][k] * ud[k][j];
                }
            }
        }
        out
    }

    #[test]
    fn triplets_are_summed_and_sorted() {
        let m = SparseMatrix::from_triplets(2, &[(0, 1, 1.0), (0, 0, 2.0), (0, 1, 3.0), (1, 0, 1.0), (1, 0, -1.0)]);
        assert_eq!(m.get(0, 1), 4.0);
        assert_eq!(m.col_indices(), &[0, 1]);
        assert_eq!(m.row_offsets(), &[0, 2, 2]);
        assert_eq!(m.get(1, 0), 0.0);
        assert_eq!(m.get(1, 1), 0.0);
    }

    #[test]
    fn diagonal_factorization_is_trivial() {
        let a = SparseMatrix::from_dense(&[vec![2.0, 0.0, 0.0], vec![0.0, 5.0, 0.0], vec![0.0, 0.0, -3.0]]);
        let f = ilu_factorize(&a, DEFAULT_DROP_TOL).unwrap();
        assert_eq!(f.lower.nnz(), 0);
        assert_eq!(f.upper.to_dense(), a.to_dense());
    }

    #[test]
    fn zero_drop_tol_gives_exact_lu() {
        let dense = vec![
            vec![4.0, 1.0, 2.0, 0.5],
            vec![1.0, 5.0, 0.3, 1.0],
            vec![2.0, 0.2, 6.0, 1.5],
            vec![0.1, 1.0, 1.5, 3.0],
        ];
        let a = SparseMatrix::from_dense(&dense);
        let f = ilu_factorize(&a, 0.0).unwrap();
        let lu = dense_product(&f.lower, &f.upper);
        for i in 0..4 {
            for j in 0..4 {
                assert!((lu[i][j] - dense[i][j]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn tridiagonal_has_no_fill() {
        let a = tridiagonal(20);
        let f = ilu_factorize(&a, DEFAULT_DROP_TOL).unwrap();
        assert_eq!(f.lower.nnz(), 19);
        assert_eq!(f.upper.nnz(), 39);
        let lu = dense_product(&f.lower, &f.upper);
        let ad = a.to_dense();
        for i in 0..20 {
            for j in 0..20 {
                assert!((lu[i][j] - ad[i][j]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn zero_pivot_is_reported() {
        let a = SparseMatrix::from_dense(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert!(matches!(ilu_factorize(&a, 0.0), Err(KrylovError::ZeroPivot { row: 0 })));
        // the protocol falls back to plain GMRES
        let (x, stats) = solve(&a, &[1.0, 2.0], &SolverParams::default()).unwrap();
        assert!(!stats.preconditioned && stats.converged);
        assert!((x[0] - 2.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn identity_converges_in_one_iteration() {
        let a = SparseMatrix::identity(5);
        let b = [1.0, -2.0, 3.0, 0.5, 0.0];
        let (x, stats) = gmres(&a, &b, None, 1e-9, 10).unwrap();
        assert!(stats.converged);
        assert_eq!(stats.iterations, 1);
        for (xi, bi) in x.iter().zip(&b) {
            assert!((xi - bi).abs() < 1e-15);
        }
    }

    #[test]
    fn two_by_two_direct() {
        let a = SparseMatrix::from_dense(&[vec![2.0, 0.0], vec![0.0, 3.0]]);
        let (x, stats) = gmres(&a, &[2.0, 3.0], None, 1e-9, 10).unwrap();
        assert!(stats.converged);
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_rhs_gives_zero() {
        let a = tridiagonal(4);
        let (x, stats) = gmres(&a, &[0.0; 4], None, 1e-9, 10).unwrap();
        assert_eq!(x, vec![0.0; 4]);
        assert!(stats.converged && stats.iterations == 0);
    }

    #[test]
    fn non_convergence_is_flagged() {
        let a = tridiagonal(50);
        let b: Vec<f64> = (0..50).map(|i| (i as f64).sin() + 1.0).collect();
        let (_, stats) = gmres(&a, &b, None, 1e-14, 2).unwrap();
        assert!(!stats.converged);
        assert_eq!(stats.iterations, 2);
        assert!(stats.relative_residual > 1e-14);
    }

    #[test]
    fn rejects_bad_inputs() {
        let a = tridiagonal(3);
        assert!(matches!(gmres(&a, &[1.0; 2], None, 1e-9, 5), Err(KrylovError::DimensionMismatch { .. })));
        assert!(matches!(gmres(&a, &[1.0; 3], None, 1e-9, 0), Err(KrylovError::ZeroIterations)));
    }

    #[test]
    fn coo_and_vector_round_trip() {
        let a = tridiagonal(6);
        let mut buf = Vec::new();
        a.write_coo(&mut buf).unwrap();
        assert_eq!(SparseMatrix::read_coo(buf.as_slice()).unwrap(), a);
        let v = vec![1.0, -1e-300, std::f64::consts::PI];
        let mut buf = Vec::new();
        write_vector(&mut buf, &v).unwrap();
        assert_eq!(read_vector(buf.as_slice()).unwrap(), v);
    }
}
