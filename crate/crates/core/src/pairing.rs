//! The bimoment table and the biadditive pairing R[x] × R[y] → R.
//!
//! A finite table stores `I_{a,b} = <x^a, y^b>` for `a < rows`, `b < cols`;
//! the pairing of two polynomials is `Σ_{i,j} a_i · I_{i,j} · b_j` with the
//! left coefficient multiplied on the left and the right coefficient on the
//! right, exactly as written. Tables are finite: any access past the stored
//! extent reports exactly which bimoment is missing rather than guessing.

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::poly::{LeftPoly, RightPoly};
use crate::ring::DivisionRing;

/// Finite 2-D table of bimoments, row index `a`, column index `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BimomentTable<R: DivisionRing> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: DivisionRing> BimomentTable<R> {
    pub fn from_rows(entries: Vec<Vec<R>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        for r in &entries {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    left_rows: rows,
                    left_cols: cols,
                    right_rows: 1,
                    right_cols: r.len(),
                });
            }
        }
        Ok(BimomentTable {
            rows,
            cols,
            data: entries.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for a in 0..rows {
            for b in 0..cols {
                data.push(f(a, b));
            }
        }
        BimomentTable { rows, cols, data }
    }

    /// Hankel table `I_{a,b} = S_{a+b}` identifying a moment sequence with
    /// bimoments. Defined for the commutative ring only, where
    /// `<a x^i, b x^j> = a b S_{i+j}` makes sense.
    pub fn hankel(moments: &[R], n: usize) -> Result<Self> {
        if !R::COMMUTATIVE {
            return Err(Error::UnsupportedRing {
                op: "hankel_table",
                ring: R::TAG,
            });
        }
        let needed = if n == 0 { 0 } else { 2 * n - 1 };
        if moments.len() < needed {
            return Err(Error::MomentSequenceTooShort {
                needed,
                got: moments.len(),
            });
        }
        Ok(Self::from_fn(n, n, |a, b| moments[a + b].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `I_{a,b}`, or a missing-bimoment error naming `(a,b)`.
    pub fn get(&self, a: usize, b: usize) -> Result<&R> {
        if a >= self.rows || b >= self.cols {
            return Err(Error::MissingBimoment {
                a,
                b,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(&self.data[a * self.cols + b])
    }

    pub fn set(&mut self, a: usize, b: usize, v: R) -> Result<()> {
        if a >= self.rows || b >= self.cols {
            return Err(Error::MissingBimoment {
                a,
                b,
                rows: self.rows,
                cols: self.cols,
            });
        }
        self.data[a * self.cols + b] = v;
        Ok(())
    }

    pub fn entry_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows)
            .map(|a| (0..self.cols).map(|b| self.data[a * self.cols + b].clone()).collect())
            .collect()
    }

    /// Leading `rows × cols` block as a dense matrix (ascending indices).
    pub fn block(&self, rows: usize, cols: usize) -> Result<DenseMatrix<R>> {
        if rows > self.rows || cols > self.cols {
            return Err(Error::MissingBimoment {
                a: rows.saturating_sub(1),
                b: cols.saturating_sub(1),
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(DenseMatrix::from_fn(rows, cols, |a, b| {
            self.data[a * self.cols + b].clone()
        }))
    }
}

/// `<p, q> = Σ_{i,j} a_i · I_{i,j} · b_j`.
pub fn pair<R: DivisionRing>(
    p: &LeftPoly<R>,
    q: &RightPoly<R>,
    table: &BimomentTable<R>,
) -> Result<R> {
    let mut acc = R::zero();
    for (i, ai) in p.coeffs().iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in q.coeffs().iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let m = table.get(i, j)?;
            acc = acc.add(&ai.mul(m).mul(bj));
        }
    }
    Ok(acc)
}

/// Componentwise pairing of a vector of left polynomials against one right
/// polynomial: `<B, g> = [<b_1,g> … <b_n,g>]`.
pub fn pair_vec<R: DivisionRing>(
    ps: &[LeftPoly<R>],
    q: &RightPoly<R>,
    table: &BimomentTable<R>,
) -> Result<Vec<R>> {
    ps.iter().map(|p| pair(p, q, table)).collect()
}

/// Symmetric vector extension in the right slot.
pub fn pair_vec_right<R: DivisionRing>(
    p: &LeftPoly<R>,
    qs: &[RightPoly<R>],
    table: &BimomentTable<R>,
) -> Result<Vec<R>> {
    qs.iter().map(|q| pair(p, q, table)).collect()
}
