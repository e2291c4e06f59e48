use crate::{MultiPoly, PolyError};

/// Dense matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            rows,
            cols,
            entries: vec![MultiPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, MultiPoly::one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<PolyMatrix, PolyError> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(PolyError::Usage("ragged matrix rows".into()));
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MultiPoly) {
        self.entries[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        for j in 0..self.cols {
            self.entries.swap(i * self.cols + j, k * self.cols + j);
        }
    }

    /// Matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> PolyMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != i) {
            for c in (0..self.cols).filter(|&c| c != j) {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Every intermediate division is exact; a failed division means the input
/// was not a polynomial matrix over an integral domain and is reported.
pub fn det_bareiss(m: &PolyMatrix) -> Result<MultiPoly, PolyError> {
    if m.rows != m.cols {
        return Err(PolyError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let mut a = m.clone();
    let mut sign_flip = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            // Prefer the sparsest nonzero pivot below.
            let pivot = (k + 1..n)
                .filter(|&i| !a.get(i, k).is_zero())
                .min_by_key(|&i| a.get(i, k).len());
            match pivot {
                Some(i) => {
                    a.swap_rows(i, k);
                    sign_flip = !sign_flip;
                }
                None => return Ok(MultiPoly::zero()),
            }
        }
        let akk = a.get(k, k).clone();
        for i in k + 1..n {
            let aik = a.get(i, k).clone();
            for j in k + 1..n {
                let num = &(&akk * a.get(i, j)) - &(&aik * a.get(k, j));
                a.set(i, j, num.div_exact(&prev)?);
            }
            a.set(i, k, MultiPoly::zero());
        }
        prev = akk;
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if sign_flip { -d } else { d })
}
