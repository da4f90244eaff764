//! Noncommutative polynomials in the two one-sided conventions.
//!
//! `LeftPoly` models R[x] with coefficients on the left (`Σ a_i x^i`);
//! `RightPoly` models R[y] with coefficients on the right (`Σ y^j b_j`).
//! There is deliberately no general product between them: the only
//! multiplications exposed are scalar action on the coefficient side and
//! multiplication by a polynomial with central coefficients, which commutes
//! past powers of the variable. Everything else is formal, coefficientwise
//! arithmetic.
//!
//! Representation: coefficients ascending by exponent, canonical (empty for
//! the zero polynomial, last entry nonzero otherwise).

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::DivisionRing;

fn strip_zeros<R: DivisionRing>(coeffs: &mut Vec<R>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

fn add_coeffs<R: DivisionRing>(a: &[R], b: &[R]) -> Vec<R> {
    let len = a.len().max(b.len());
    let zero = R::zero();
    let mut out = Vec::with_capacity(len);
    for t in 0..len {
        let x = a.get(t).unwrap_or(&zero);
        let y = b.get(t).unwrap_or(&zero);
        out.push(x.add(y));
    }
    strip_zeros(&mut out);
    out
}

/// Convolution `out_t = Σ_{i+s=t} mul(a_i, b_s)`; valid in a noncommutative
/// ring only when one side has central coefficients.
fn convolve<R: DivisionRing>(a: &[R], b: &[R]) -> Vec<R> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (s, bs) in b.iter().enumerate() {
            if bs.is_zero() {
                continue;
            }
            out[i + s] = out[i + s].add(&ai.mul(bs));
        }
    }
    let mut out = out;
    strip_zeros(&mut out);
    out
}

fn fmt_terms<R: DivisionRing>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[R],
    var: &str,
    coeff_left: bool,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (e, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        let pow = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        match (pow.is_empty(), c.is_one()) {
            (true, _) => write!(f, "({c})")?,
            (false, true) => write!(f, "{pow}")?,
            (false, false) if coeff_left => write!(f, "({c})·{pow}")?,
            (false, false) => write!(f, "{pow}·({c})")?,
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// LeftPoly
// ---------------------------------------------------------------------------

/// Polynomial `Σ a_i x^i` with coefficients acting on the left.
#[derive(Clone, PartialEq, Eq)]
pub struct LeftPoly<R: DivisionRing> {
    coeffs: Vec<R>,
}

impl<R: DivisionRing> LeftPoly<R> {
    pub fn zero() -> Self {
        LeftPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LeftPoly {
            coeffs: vec![R::one()],
        }
    }

    /// The monic monomial `x^e`.
    pub fn x_pow(e: usize) -> Self {
        Self::monomial(R::one(), e)
    }

    /// `c · x^e`; the zero polynomial when `c = 0`.
    pub fn monomial(c: R, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); e + 1];
        coeffs[e] = c;
        LeftPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        strip_zeros(&mut coeffs);
        LeftPoly { coeffs }
    }

    /// Coefficients ascending by exponent, canonical form.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> R {
        self.coeffs.get(e).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the highest nonzero coefficient; errors on zero.
    pub fn degree(&self) -> Result<usize> {
        if self.coeffs.is_empty() {
            Err(Error::ZeroPolynomial)
        } else {
            Ok(self.coeffs.len() - 1)
        }
    }

    pub fn degree_opt(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Result<R> {
        self.coeffs.last().cloned().ok_or(Error::ZeroPolynomial)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        LeftPoly {
            coeffs: add_coeffs(&self.coeffs, &rhs.coeffs),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        LeftPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Left scalar action: `c · (Σ a_i x^i) = Σ (c·a_i) x^i`.
    pub fn scale_left(&self, c: &R) -> Self {
        let mut coeffs: Vec<R> = self.coeffs.iter().map(|a| c.mul(a)).collect();
        strip_zeros(&mut coeffs);
        LeftPoly { coeffs }
    }

    /// Right multiplication `p · f` by a central-coefficient polynomial.
    ///
    /// Central coefficients commute past powers of x and past scalars, so
    /// this is plain coefficient convolution with the written order
    /// `a_i · f_s` preserved.
    pub fn mul_central(&self, f: &CentralPoly<R>) -> Self {
        LeftPoly {
            coeffs: convolve(&self.coeffs, f.coeffs()),
        }
    }
}

impl<R: DivisionRing> fmt::Display for LeftPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, "x", true)
    }
}

impl<R: DivisionRing> fmt::Debug for LeftPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeftPoly({})", self)
    }
}

// ---------------------------------------------------------------------------
// RightPoly
// ---------------------------------------------------------------------------

/// Polynomial `Σ y^j b_j` with coefficients acting on the right.
#[derive(Clone, PartialEq, Eq)]
pub struct RightPoly<R: DivisionRing> {
    coeffs: Vec<R>,
}

impl<R: DivisionRing> RightPoly<R> {
    pub fn zero() -> Self {
        RightPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RightPoly {
            coeffs: vec![R::one()],
        }
    }

    pub fn y_pow(e: usize) -> Self {
        Self::monomial(R::one(), e)
    }

    /// `y^e · c`; the zero polynomial when `c = 0`.
    pub fn monomial(c: R, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); e + 1];
        coeffs[e] = c;
        RightPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        strip_zeros(&mut coeffs);
        RightPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> R {
        self.coeffs.get(e).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Result<usize> {
        if self.coeffs.is_empty() {
            Err(Error::ZeroPolynomial)
        } else {
            Ok(self.coeffs.len() - 1)
        }
    }

    pub fn degree_opt(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Result<R> {
        self.coeffs.last().cloned().ok_or(Error::ZeroPolynomial)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RightPoly {
            coeffs: add_coeffs(&self.coeffs, &rhs.coeffs),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RightPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Right scalar action: `(Σ y^j b_j) · c = Σ y^j (b_j·c)`.
    pub fn scale_right(&self, c: &R) -> Self {
        let mut coeffs: Vec<R> = self.coeffs.iter().map(|b| b.mul(c)).collect();
        strip_zeros(&mut coeffs);
        RightPoly { coeffs }
    }

    /// Left multiplication `g · q` by a central-coefficient polynomial:
    /// `g(y)·(Σ y^j b_j) = Σ y^{s+j} (g_s·b_j)`.
    pub fn mul_central(&self, g: &CentralPoly<R>) -> Self {
        RightPoly {
            coeffs: convolve(g.coeffs(), &self.coeffs),
        }
    }
}

impl<R: DivisionRing> fmt::Display for RightPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, "y", false)
    }
}

impl<R: DivisionRing> fmt::Debug for RightPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RightPoly({})", self)
    }
}

// ---------------------------------------------------------------------------
// CentralPoly
// ---------------------------------------------------------------------------

/// Polynomial whose coefficients all lie in the center of the ring.
///
/// These are the kernel polynomials f(x), g(y): because their coefficients
/// commute with everything, multiplication by them is well defined on both
/// one-sided polynomial modules.
#[derive(Clone, PartialEq, Eq)]
pub struct CentralPoly<R: DivisionRing> {
    coeffs: Vec<R>,
}

impl<R: DivisionRing> CentralPoly<R> {
    /// Validates centrality of every coefficient.
    pub fn new(mut coeffs: Vec<R>) -> Result<Self> {
        for (index, c) in coeffs.iter().enumerate() {
            if !c.is_central() {
                return Err(Error::NonCentralCoefficient { index });
            }
        }
        strip_zeros(&mut coeffs);
        Ok(CentralPoly { coeffs })
    }

    pub fn one() -> Self {
        CentralPoly {
            coeffs: vec![R::one()],
        }
    }

    /// The monic monomial of exponent `e` (e.g. `x` for the Cauchy kernel).
    pub fn var_pow(e: usize) -> Self {
        let mut coeffs = vec![R::zero(); e + 1];
        coeffs[e] = R::one();
        CentralPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        let mut coeffs: Vec<R> = coeffs.iter().map(|&n| R::from_int(n)).collect();
        strip_zeros(&mut coeffs);
        CentralPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> R {
        self.coeffs.get(e).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Result<usize> {
        if self.coeffs.is_empty() {
            Err(Error::ZeroPolynomial)
        } else {
            Ok(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Result<R> {
        self.coeffs.last().cloned().ok_or(Error::ZeroPolynomial)
    }

    /// Product of two central polynomials (again central).
    pub fn mul(&self, rhs: &Self) -> Self {
        CentralPoly {
            coeffs: convolve(&self.coeffs, &rhs.coeffs),
        }
    }
}

impl<R: DivisionRing> fmt::Debug for CentralPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CentralPoly{:?}", self.coeffs)
    }
}
