//! Quasideterminant construction of biorthogonal systems from bimoments.
//!
//! From a generic bimoment table the monic pair is
//!
//! ```text
//! p_n(x) = | I_{n,0} … I_{n,n-1}  [x^n] |      q_n(y) = | 1  y  …  [y^n]        |
//!          | …                  …       |               | I_{n-1,0} … I_{n-1,n} |
//!          | I_{0,0} … I_{0,n-1}  1     |               | I_{0,0}   … I_{0,n}   |
//! ```
//!
//! (boxed corner quasideterminants, rows in descending moment index). The
//! symbolic column/row is never inverted through: the expansion isolates the
//! boxed monomial and only the scalar submatrix is inverted, exactly as the
//! defining Schur-complement formula does. Every required invertibility is a
//! checked genericity contract; failures name the offending degree.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::pairing::{pair, BimomentTable};
use crate::poly::{LeftPoly, RightPoly};
use crate::ring::DivisionRing;

/// Normalization state of a constructed system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Leading coefficients of every `p_n` and `q_n` equal 1.
    Monic,
    /// `p_n` left-scaled so that `<p_n, q_n> = 1`; `q_n` stays monic.
    Biorthonormal,
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Normalization::Monic => write!(f, "monic"),
            Normalization::Biorthonormal => write!(f, "biorthonormal"),
        }
    }
}

/// One cell of a displayed quasideterminant matrix: a bimoment or a
/// symbolic monomial marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MomentCell<R: DivisionRing> {
    Value(R),
    XPow(usize),
    YPow(usize),
}

impl<R: DivisionRing> fmt::Display for MomentCell<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentCell::Value(v) => write!(f, "{v}"),
            MomentCell::XPow(e) => write!(f, "x^{e}"),
            MomentCell::YPow(e) => write!(f, "y^{e}"),
        }
    }
}

/// The displayed (n+1)×(n+1) matrix view behind `p_n` or `q_n`, with the
/// symbolic entries kept as exponent markers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentView<R: DivisionRing> {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<MomentCell<R>>,
}

impl<R: DivisionRing> MomentView<R> {
    pub fn at(&self, r: usize, c: usize) -> &MomentCell<R> {
        &self.cells[r * self.cols + c]
    }
}

impl<R: DivisionRing> fmt::Display for MomentView<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "| {} |", row.join("  "))?;
        }
        Ok(())
    }
}

/// The matrix displayed for `p_n`: rows in descending moment index, last
/// column the monomials `x^n … x^0`.
pub fn p_matrix<R: DivisionRing>(table: &BimomentTable<R>, n: usize) -> Result<MomentView<R>> {
    let mut cells = Vec::with_capacity((n + 1) * (n + 1));
    for r in 0..=n {
        let a = n - r;
        for b in 0..n {
            cells.push(MomentCell::Value(table.get(a, b)?.clone()));
        }
        cells.push(MomentCell::XPow(a));
    }
    Ok(MomentView {
        rows: n + 1,
        cols: n + 1,
        cells,
    })
}

/// The matrix displayed for `q_n`: first row the monomials `y^0 … y^n`,
/// then moment rows in descending index.
pub fn q_matrix<R: DivisionRing>(table: &BimomentTable<R>, n: usize) -> Result<MomentView<R>> {
    let mut cells = Vec::with_capacity((n + 1) * (n + 1));
    for b in 0..=n {
        cells.push(MomentCell::YPow(b));
    }
    for r in 1..=n {
        let a = n - r;
        for b in 0..=n {
            cells.push(MomentCell::Value(table.get(a, b)?.clone()));
        }
    }
    Ok(MomentView {
        rows: n + 1,
        cols: n + 1,
        cells,
    })
}

/// Scalar submatrix struck from both displays: rows `I_{n-1} … I_0`,
/// columns `0 … n-1`.
fn struck_block<R: DivisionRing>(table: &BimomentTable<R>, n: usize) -> Result<DenseMatrix<R>> {
    let mut rows = Vec::with_capacity(n);
    for t in 0..n {
        let a = n - 1 - t;
        let mut row = Vec::with_capacity(n);
        for b in 0..n {
            row.push(table.get(a, b)?.clone());
        }
        rows.push(row);
    }
    DenseMatrix::from_rows(rows)
}

/// Monic `p_n = x^n − [I_{n,0} … I_{n,n-1}] · (I^{1,n+1})^{-1} · [x^{n-1} … 1]^T`.
pub fn build_p<R: DivisionRing>(table: &BimomentTable<R>, n: usize) -> Result<LeftPoly<R>> {
    if n == 0 {
        return Ok(LeftPoly::one());
    }
    let block = struck_block(table, n)?;
    let minv = block.invert().map_err(|e| match e {
        Error::Singular { .. } => Error::GenericityViolation { n },
        other => other,
    })?;
    let mut top = Vec::with_capacity(n);
    for b in 0..n {
        top.push(table.get(n, b)?.clone());
    }
    // w = top · M⁻¹ as a row vector; w_s multiplies x^{n-1-s} on the left.
    let mut coeffs = vec![R::zero(); n + 1];
    coeffs[n] = R::one();
    for s in 0..n {
        let mut w = R::zero();
        for (t, top_t) in top.iter().enumerate() {
            w = w.add(&top_t.mul(minv.at(t, s)));
        }
        coeffs[n - 1 - s] = w.neg();
    }
    Ok(LeftPoly::from_coeffs(coeffs))
}

/// Monic `q_n = y^n − [1 y … y^{n-1}] · (I^{1,n+1})^{-1} · [I_{n-1,n} … I_{0,n}]^T`
/// with the resulting scalars attached on the right of the powers.
pub fn build_q<R: DivisionRing>(table: &BimomentTable<R>, n: usize) -> Result<RightPoly<R>> {
    if n == 0 {
        return Ok(RightPoly::one());
    }
    let block = struck_block(table, n)?;
    let minv = block.invert().map_err(|e| match e {
        Error::Singular { .. } => Error::GenericityViolation { n },
        other => other,
    })?;
    let mut right = Vec::with_capacity(n);
    for t in 0..n {
        right.push(table.get(n - 1 - t, n)?.clone());
    }
    let u = minv.mul_vec(&right)?;
    let mut coeffs = vec![R::zero(); n + 1];
    coeffs[n] = R::one();
    for (s, u_s) in u.iter().enumerate() {
        coeffs[s] = u_s.neg();
    }
    Ok(RightPoly::from_coeffs(coeffs))
}

/// Boxed-corner quasideterminant of the full `(n+1)×(n+1)` moment block
/// (rows descending, boxed at the `I_{n,n}` position). This is the
/// biorthonormal normalizer of `p_n`.
pub fn normalizer<R: DivisionRing>(table: &BimomentTable<R>, n: usize) -> Result<R> {
    table.get(n, n)?;
    let block = DenseMatrix::from_fn(n + 1, n + 1, |r, b| table.get(n - r, b).unwrap().clone());
    let h = block.quasidet(0, n).map_err(|e| match e {
        Error::QuasidetUndefined { .. } => Error::GenericityViolation { n },
        other => other,
    })?;
    if h.is_zero() {
        return Err(Error::GenericityViolation { n });
    }
    Ok(h)
}

/// Left-scale the monic `p_n` by the inverse normalizer so that
/// `<p_n, q_n> = 1` with `q_n` unchanged.
pub fn build_p_normalized<R: DivisionRing>(
    table: &BimomentTable<R>,
    n: usize,
) -> Result<LeftPoly<R>> {
    let h_inv = normalizer(table, n)?.inv()?;
    Ok(build_p(table, n)?.scale_left(&h_inv))
}

/// Paired sequences `{p_n}, {q_n}` with their normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiorthoSystem<R: DivisionRing> {
    pub ps: Vec<LeftPoly<R>>,
    pub qs: Vec<RightPoly<R>>,
    pub normalization: Normalization,
}

impl<R: DivisionRing> BiorthoSystem<R> {
    /// Construct `p_0 … p_{upto-1}` and `q_0 … q_{upto-1}` from the table.
    pub fn build(
        table: &BimomentTable<R>,
        upto: usize,
        normalization: Normalization,
    ) -> Result<Self> {
        let mut ps = Vec::with_capacity(upto);
        let mut qs = Vec::with_capacity(upto);
        for n in 0..upto {
            let p = match normalization {
                Normalization::Monic => build_p(table, n)?,
                Normalization::Biorthonormal => build_p_normalized(table, n)?,
            };
            ps.push(p);
            qs.push(build_q(table, n)?);
        }
        Ok(BiorthoSystem {
            ps,
            qs,
            normalization,
        })
    }

    pub fn len(&self) -> usize {
        self.ps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ps.is_empty()
    }
}

/// What a Gram entry must look like.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GramExpectation {
    Zero,
    One,
    Nonzero,
}

impl fmt::Display for GramExpectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GramExpectation::Zero => write!(f, "0"),
            GramExpectation::One => write!(f, "1"),
            GramExpectation::Nonzero => write!(f, "nonzero"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramViolation<R: DivisionRing> {
    pub n: usize,
    pub m: usize,
    pub got: R,
    pub expected: GramExpectation,
}

/// Full N×N Gram array `G_{n,m} = <p_n, q_m>` with its pass/fail verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramReport<R: DivisionRing> {
    pub normalization: Normalization,
    pub gram: Vec<Vec<R>>,
    pub violations: Vec<GramViolation<R>>,
}

impl<R: DivisionRing> GramReport<R> {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.pass() {
            format!(
                "PASS: {0}x{0} Gram array is zero off the diagonal and {1} on it",
                self.gram.len(),
                match self.normalization {
                    Normalization::Monic => GramExpectation::Nonzero,
                    Normalization::Biorthonormal => GramExpectation::One,
                }
            )
        } else {
            let mut s = format!("FAIL: {} violation(s)", self.violations.len());
            for v in &self.violations {
                s.push_str(&format!(
                    "\n  G_({},{}) = {} (expected {})",
                    v.n, v.m, v.got, v.expected
                ));
            }
            s
        }
    }
}

/// Compute the Gram array of the system against a table and judge it:
/// off-diagonal entries must vanish, diagonal entries must be nonzero
/// (monic) or exactly 1 (biorthonormal).
pub fn verify_biortho<R: DivisionRing>(
    sys: &BiorthoSystem<R>,
    table: &BimomentTable<R>,
) -> Result<GramReport<R>> {
    let n_sys = sys.len();
    let mut gram = Vec::with_capacity(n_sys);
    let mut violations = Vec::new();
    for n in 0..n_sys {
        let mut row = Vec::with_capacity(n_sys);
        for m in 0..n_sys {
            let g = pair(&sys.ps[n], &sys.qs[m], table)?;
            if n != m {
                if !g.is_zero() {
                    violations.push(GramViolation {
                        n,
                        m,
                        got: g.clone(),
                        expected: GramExpectation::Zero,
                    });
                }
            } else {
                match sys.normalization {
                    Normalization::Monic => {
                        if g.is_zero() {
                            violations.push(GramViolation {
                                n,
                                m,
                                got: g.clone(),
                                expected: GramExpectation::Nonzero,
                            });
                        }
                    }
                    Normalization::Biorthonormal => {
                        if !g.is_one() {
                            violations.push(GramViolation {
                                n,
                                m,
                                got: g.clone(),
                                expected: GramExpectation::One,
                            });
                        }
                    }
                }
            }
            row.push(g);
        }
        gram.push(row);
    }
    Ok(GramReport {
        normalization: sys.normalization,
        gram,
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaViolation<R: DivisionRing> {
    /// Which side failed: "x^i vs q_n" or "p_n vs y^i".
    pub side: &'static str,
    pub i: usize,
    pub n: usize,
    pub got: R,
}

/// The per-vector orthogonality conditions `<x^i, q_n> = 0` and
/// `<p_n, y^i> = 0` for all `i < n`; strictly stronger per vector than the
/// Gram statement and checked independently of it.
pub fn verify_lemma<R: DivisionRing>(
    sys: &BiorthoSystem<R>,
    table: &BimomentTable<R>,
) -> Result<Vec<LemmaViolation<R>>> {
    let mut violations = Vec::new();
    for n in 0..sys.len() {
        for i in 0..n {
            let left = pair(&LeftPoly::x_pow(i), &sys.qs[n], table)?;
            if !left.is_zero() {
                violations.push(LemmaViolation {
                    side: "x^i vs q_n",
                    i,
                    n,
                    got: left,
                });
            }
            let right = pair(&sys.ps[n], &RightPoly::y_pow(i), table)?;
            if !right.is_zero() {
                violations.push(LemmaViolation {
                    side: "p_n vs y^i",
                    i,
                    n,
                    got: right,
                });
            }
        }
    }
    Ok(violations)
}
