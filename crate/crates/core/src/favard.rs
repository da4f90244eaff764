//! Inverse construction: bimoments from prescribed polynomial sequences.
//!
//! Given any degree-graded sequences `{p_n}`, `{q_n}` over a division ring
//! and any target diagonal pairings `{c_k}`, there is exactly one bimoment
//! table making the pair biorthogonal with `<p_k, q_k> = c_k`. The table is
//! built by induction on `a + b`: each anti-diagonal cell is the single
//! unknown of one linear equation over earlier cells, so the construction
//! has no choices — which is the uniqueness. In a noncommutative ring the
//! side on which the unknown's coefficient is inverted is forced by where
//! the unknown sits:
//!
//! - `a < b`:  `<x^a, q_b> = 0`   solves `I_{a,b} = −(Σ_{t<b} I_{a,t}·d_t)·d_b⁻¹`
//! - `a > b`:  `<p_a, y^b> = 0`   solves `I_{a,b} = −c_a⁻¹·(Σ_{t<a} c_t·I_{t,b})`
//! - `a = b`:  `<p_a, q_a> = c_a` solves the middle cell with both leading
//!   coefficients inverted, one on each side.
//!
//! (`c_t`, `d_t` are the coefficients of `p_a`, `q_b`; the base case is
//! `I_{0,0} = p_0⁻¹·c_0·q_0⁻¹`.)

use std::fmt;

use crate::error::{Error, Result};
use crate::pairing::{pair, BimomentTable};
use crate::poly::{LeftPoly, RightPoly};
use crate::ring::DivisionRing;

/// Degree-graded input sequences with target diagonal pairings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FavardInput<R: DivisionRing> {
    pub ps: Vec<LeftPoly<R>>,
    pub qs: Vec<RightPoly<R>>,
    pub cs: Vec<R>,
}

impl<R: DivisionRing> FavardInput<R> {
    /// Validate degree-gradedness (`deg p_n = deg q_n = n`) up to `upto`.
    pub fn validate(&self, upto: usize) -> Result<()> {
        if self.ps.len() < upto {
            return Err(Error::SequenceTooShort {
                name: "ps",
                needed: upto,
                got: self.ps.len(),
            });
        }
        if self.qs.len() < upto {
            return Err(Error::SequenceTooShort {
                name: "qs",
                needed: upto,
                got: self.qs.len(),
            });
        }
        if self.cs.len() < upto {
            return Err(Error::SequenceTooShort {
                name: "cs",
                needed: upto,
                got: self.cs.len(),
            });
        }
        for n in 0..upto {
            if self.ps[n].degree_opt() != Some(n) {
                return Err(Error::DegreeMismatch {
                    which: "p",
                    n,
                    got: self.ps[n].degree_opt(),
                });
            }
            if self.qs[n].degree_opt() != Some(n) {
                return Err(Error::DegreeMismatch {
                    which: "q",
                    n,
                    got: self.qs[n].degree_opt(),
                });
            }
        }
        Ok(())
    }
}

/// Construct the unique `N×N` bimoment table for the input sequences.
///
/// Cells are filled along anti-diagonals `a + b = 0, 1, 2, …`, each cell in
/// increasing row index; every equation touches only earlier cells, so the
/// fixed order is purely for determinism. The constructed table is
/// re-verified exactly before being returned.
pub fn favard_bimoments<R: DivisionRing>(
    input: &FavardInput<R>,
    size: usize,
) -> Result<BimomentTable<R>> {
    input.validate(size)?;
    if size == 0 {
        return BimomentTable::from_rows(Vec::new());
    }
    let mut grid: Vec<Vec<Option<R>>> = vec![vec![None; size]; size];
    let p0 = input.ps[0].coeff(0);
    let q0 = input.qs[0].coeff(0);
    grid[0][0] = Some(p0.inv()?.mul(&input.cs[0]).mul(&q0.inv()?));
    for diag in 1..=(2 * size - 2) {
        for a in 0..=diag.min(size - 1) {
            let b = diag - a;
            if b >= size {
                continue;
            }
            let cell = if a < b {
                // <x^a, q_b> = Σ_t I_{a,t}·d_t = 0 with only I_{a,b} unknown.
                let d = input.qs[b].coeffs();
                let mut acc = R::zero();
                for (t, d_t) in d.iter().enumerate().take(b) {
                    if d_t.is_zero() {
                        continue;
                    }
                    let known = grid[a][t].as_ref().expect("earlier anti-diagonal");
                    acc = acc.add(&known.mul(d_t));
                }
                acc.neg().mul(&d[b].inv()?)
            } else if a > b {
                // <p_a, y^b> = Σ_t c_t·I_{t,b} = 0 with only I_{a,b} unknown.
                let c = input.ps[a].coeffs();
                let mut acc = R::zero();
                for (t, c_t) in c.iter().enumerate().take(a) {
                    if c_t.is_zero() {
                        continue;
                    }
                    let known = grid[t][b].as_ref().expect("earlier anti-diagonal");
                    acc = acc.add(&c_t.mul(known));
                }
                c[a].inv()?.mul(&acc.neg())
            } else {
                // <p_a, q_a> = c_a with only the middle cell unknown.
                let c = input.ps[a].coeffs();
                let d = input.qs[a].coeffs();
                let mut acc = R::zero();
                for (t, c_t) in c.iter().enumerate() {
                    if c_t.is_zero() {
                        continue;
                    }
                    for (u, d_u) in d.iter().enumerate() {
                        if (t, u) == (a, a) || d_u.is_zero() {
                            continue;
                        }
                        let known = grid[t][u].as_ref().expect("earlier anti-diagonal");
                        acc = acc.add(&c_t.mul(known).mul(d_u));
                    }
                }
                c[a].inv()?.mul(&input.cs[a].sub(&acc)).mul(&d[a].inv()?)
            };
            grid[a][b] = Some(cell);
        }
    }
    let table = BimomentTable::from_fn(size, size, |a, b| {
        grid[a][b].clone().expect("every cell filled")
    });
    let report = favard_verify(input, &table, size)?;
    if !report.pass() {
        return Err(Error::InternalInconsistency(format!(
            "favard construction failed its own conditions:\n{}",
            report.summary()
        )));
    }
    Ok(table)
}

/// Which defining condition a violation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FavardCondition {
    /// `<x^a, q_b> = 0` for `a < b`.
    UpperOrthogonality,
    /// `<p_a, y^b> = 0` for `a > b`.
    LowerOrthogonality,
    /// `<p_a, q_a> = c_a`.
    Diagonal,
}

impl fmt::Display for FavardCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FavardCondition::UpperOrthogonality => write!(f, "<x^a, q_b> = 0 (a < b)"),
            FavardCondition::LowerOrthogonality => write!(f, "<p_a, y^b> = 0 (a > b)"),
            FavardCondition::Diagonal => write!(f, "<p_a, q_a> = c_a"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FavardViolation<R: DivisionRing> {
    pub condition: FavardCondition,
    pub a: usize,
    pub b: usize,
    pub got: R,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FavardReport<R: DivisionRing> {
    pub size: usize,
    pub violations: Vec<FavardViolation<R>>,
}

impl<R: DivisionRing> FavardReport<R> {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.pass() {
            format!("PASS: all three condition families hold on {0}x{0}", self.size)
        } else {
            let mut s = format!("FAIL: {} violation(s)", self.violations.len());
            for v in &self.violations {
                s.push_str(&format!(
                    "\n  {} at (a,b) = ({},{}): got {}",
                    v.condition, v.a, v.b, v.got
                ));
            }
            s
        }
    }
}

/// Exact check of all three condition families on a `size × size` range.
pub fn favard_verify<R: DivisionRing>(
    input: &FavardInput<R>,
    table: &BimomentTable<R>,
    size: usize,
) -> Result<FavardReport<R>> {
    input.validate(size)?;
    let mut violations = Vec::new();
    for a in 0..size {
        for b in 0..size {
            if a < b {
                let got = pair(&LeftPoly::x_pow(a), &input.qs[b], table)?;
                if !got.is_zero() {
                    violations.push(FavardViolation {
                        condition: FavardCondition::UpperOrthogonality,
                        a,
                        b,
                        got,
                    });
                }
            } else if a > b {
                let got = pair(&input.ps[a], &RightPoly::y_pow(b), table)?;
                if !got.is_zero() {
                    violations.push(FavardViolation {
                        condition: FavardCondition::LowerOrthogonality,
                        a,
                        b,
                        got,
                    });
                }
            } else {
                let got = pair(&input.ps[a], &input.qs[a], table)?;
                if got != input.cs[a] {
                    violations.push(FavardViolation {
                        condition: FavardCondition::Diagonal,
                        a,
                        b,
                        got,
                    });
                }
            }
        }
    }
    Ok(FavardReport { size, violations })
}
