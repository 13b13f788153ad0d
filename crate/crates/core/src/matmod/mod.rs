//! Polynomial matrices, Jacobians, maximal minors, and finite-length
//! computations for finitely presented modules.

mod module;

pub use module::{module_colength, tensor_presentation, ModulePresentation};

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyalg::{same_ring, PolyRing, Polynomial};
use crate::scalar::Scalar;

/// A matrix of polynomials over a single ring.
#[derive(Debug, Clone)]
pub struct PolyMatrix<C: Scalar> {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<C>>, // row-major
}

impl<C: Scalar> PolyMatrix<C> {
    pub fn new(
        ring: &Arc<PolyRing>,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial<C>>,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if !same_ring(e.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial<C> {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Polynomial<C>] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Append covector rows below this matrix.
    pub fn augment(&self, forms: &[Vec<Polynomial<C>>]) -> Result<PolyMatrix<C>> {
        let mut entries = self.entries.clone();
        for f in forms {
            if f.len() != self.cols {
                return Err(Error::Shape(format!(
                    "covector length {} does not match {} columns",
                    f.len(),
                    self.cols
                )));
            }
            for e in f {
                if !same_ring(e.ring(), &self.ring) {
                    return Err(Error::RingMismatch);
                }
            }
            entries.extend(f.iter().cloned());
        }
        PolyMatrix::new(&self.ring, self.rows + forms.len(), self.cols, entries)
    }

    /// Determinant of the square submatrix given by `rows`/`cols` index
    /// lists, by cofactor expansion with memoization on column subsets.
    fn subdet(
        &self,
        rows: &[usize],
        cols: &[usize],
        memo: &mut HashMap<(u64, u64), Polynomial<C>>,
    ) -> Polynomial<C> {
        debug_assert_eq!(rows.len(), cols.len());
        if rows.len() == 1 {
            return self.entry(rows[0], cols[0]).clone();
        }
        let key = (mask(rows), mask(cols));
        if let Some(d) = memo.get(&key) {
            return d.clone();
        }
        // Expand along the first listed row.
        let mut det = Polynomial::zero(&self.ring);
        let sub_rows = &rows[1..];
        for (j, &c) in cols.iter().enumerate() {
            let e = self.entry(rows[0], c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter_map(|(k, &cc)| if k != j { Some(cc) } else { None })
                .collect();
            let minor = self.subdet(sub_rows, &sub_cols, memo);
            let signed = if j % 2 == 0 { minor } else { -minor };
            det = &det + &(e * &signed);
        }
        memo.insert(key, det.clone());
        det
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<Polynomial<C>> {
        if self.rows != self.cols {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        let mut memo = HashMap::new();
        Ok(self.subdet(&idx, &idx, &mut memo))
    }

    /// All `k x k` minors, zero minors omitted.
    pub fn minors(&self, k: usize) -> Vec<Polynomial<C>> {
        if k == 0 || k > self.rows || k > self.cols {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut memo = HashMap::new();
        for rows in combinations(self.rows, k) {
            for cols in combinations(self.cols, k) {
                let d = self.subdet(&rows, &cols, &mut memo);
                if !d.is_zero() {
                    out.push(d);
                }
            }
        }
        out
    }

    /// Ideal generated by all maximal (`min(rows, cols)`-size) minors.
    pub fn maximal_minors(&self) -> Ideal<C> {
        let k = self.rows.min(self.cols);
        Ideal::new(&self.ring, self.minors(k)).expect("same ring")
    }
}

fn mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// The `p x n` Jacobian matrix of a nonempty family of polynomials.
pub fn jacobian_matrix<C: Scalar>(fs: &[Polynomial<C>]) -> Result<PolyMatrix<C>> {
    let first = fs
        .first()
        .ok_or_else(|| Error::Shape("jacobian of an empty family".into()))?;
    let ring = first.ring().clone();
    let n = ring.nvars();
    let mut entries = Vec::with_capacity(fs.len() * n);
    for f in fs {
        if !same_ring(f.ring(), &ring) {
            return Err(Error::RingMismatch);
        }
        for v in 0..n {
            entries.push(f.derivative(v));
        }
    }
    PolyMatrix::new(&ring, fs.len(), n, entries)
}
