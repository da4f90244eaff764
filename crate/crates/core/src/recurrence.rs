//! Kernel-conditioned recurrence operators for biorthonormal systems.
//!
//! Given central kernel polynomials f (degree n) and g (degree m) and
//! scalars α, β satisfying the rank-1 condition
//!
//! ```text
//! Σ_i a_i·I_{r+i,s} + Σ_j I_{r,s+j}·b_j = α_r·β_s        for all r, s,
//! ```
//!
//! a biorthonormal system acquires banded multiplication operators
//!
//! ```text
//! X_{k,l} = <p_k f, q_l>,        Y^T_{k,l} = <p_k, g q_l>,
//! ```
//!
//! whose sum is the rank-1 matrix π·ηᵀ with π_k = Σ c_i α_i and
//! η_l = Σ β_i d_i. The derived operators
//!
//! ```text
//! A  = (Λ − Id)·D_π⁻¹·X  = −(Λ − Id)·D_π⁻¹·Yᵀ,
//! Bᵀ = Yᵀ·D_η⁻¹·(Λᵀ − Id) = −X·D_η⁻¹·(Λᵀ − Id)
//! ```
//!
//! are banded with A ∈ M_[−(n+1), m] and Bᵀ ∈ M_[−n, m+1] (row-minus-column
//! orientation), and row k−1 of `A·p = (Λ−Id)D_π⁻¹·p·f` gives the
//! (n+m+2)-term recurrence
//!
//! ```text
//! (π_k⁻¹ p_k − π_{k−1}⁻¹ p_{k−1})·f(x) = Σ_{i=k−1−m}^{k+n} A_{k−1,i}·p_i,
//! ```
//!
//! with the symmetric q-side recurrence carrying its scalars on the right:
//!
//! ```text
//! g(y)·(q_k·η_k⁻¹ − q_{k−1}·η_{k−1}⁻¹) = Σ_{i=k−1−n}^{k+m} q_i·(Bᵀ)_{i,k−1}.
//! ```
//!
//! Both defining forms of A and Bᵀ are computed and must agree on the
//! truncation-exact region; X is additionally cross-checked against an
//! independent basis-expansion route. Everything is verified exactly.

use rand::Rng;

use crate::banded::{Band, BandLimit, BandedMatrix};
use crate::biortho::{verify_biortho, BiorthoSystem, Normalization};
use crate::error::{Error, Result};
use crate::gen::RandomScalar;
use crate::pairing::{pair, BimomentTable};
use crate::poly::{CentralPoly, LeftPoly, RightPoly};
use crate::ring::DivisionRing;

/// The kernel hypothesis data: central f and g plus the rank-1 scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelData<R: DivisionRing> {
    pub f: CentralPoly<R>,
    pub g: CentralPoly<R>,
    pub alpha: Vec<R>,
    pub beta: Vec<R>,
}

impl<R: DivisionRing> KernelData<R> {
    pub fn new(f: CentralPoly<R>, g: CentralPoly<R>, alpha: Vec<R>, beta: Vec<R>) -> Result<Self> {
        f.degree()?;
        g.degree()?;
        Ok(KernelData { f, g, alpha, beta })
    }

    pub fn deg_f(&self) -> usize {
        self.f.degree().expect("f is nonzero by construction")
    }

    pub fn deg_g(&self) -> usize {
        self.g.degree().expect("g is nonzero by construction")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelViolation<R: DivisionRing> {
    pub r: usize,
    pub s: usize,
    pub lhs: R,
    pub rhs: R,
}

/// Exact check of the kernel condition on a rectangle of (r, s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport<R: DivisionRing> {
    pub r_range: usize,
    pub s_range: usize,
    pub violations: Vec<KernelViolation<R>>,
}

impl<R: DivisionRing> KernelReport<R> {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verify `Σ a_i I_{r+i,s} + Σ I_{r,s+j} b_j = α_r β_s` for all
/// `r < r_range`, `s < s_range`.
pub fn check_kernel<R: DivisionRing>(
    table: &BimomentTable<R>,
    kd: &KernelData<R>,
    r_range: usize,
    s_range: usize,
) -> Result<KernelReport<R>> {
    let n = kd.deg_f();
    let m = kd.deg_g();
    if table.rows() < r_range + n || table.cols() < s_range + m {
        return Err(Error::InsufficientTable {
            needed_rows: r_range + n,
            needed_cols: s_range + m,
            rows: table.rows(),
            cols: table.cols(),
        });
    }
    if kd.alpha.len() < r_range {
        return Err(Error::SequenceTooShort {
            name: "alpha",
            needed: r_range,
            got: kd.alpha.len(),
        });
    }
    if kd.beta.len() < s_range {
        return Err(Error::SequenceTooShort {
            name: "beta",
            needed: s_range,
            got: kd.beta.len(),
        });
    }
    let mut violations = Vec::new();
    for r in 0..r_range {
        for s in 0..s_range {
            let mut lhs = R::zero();
            for (i, a_i) in kd.f.coeffs().iter().enumerate() {
                lhs = lhs.add(&a_i.mul(table.get(r + i, s)?));
            }
            for (j, b_j) in kd.g.coeffs().iter().enumerate() {
                lhs = lhs.add(&table.get(r, s + j)?.mul(b_j));
            }
            let rhs = kd.alpha[r].mul(&kd.beta[s]);
            if lhs != rhs {
                violations.push(KernelViolation { r, s, lhs, rhs });
            }
        }
    }
    Ok(KernelReport {
        r_range,
        s_range,
        violations,
    })
}

/// Seed width needed so that solving the condition row-band by row-band
/// can fill a `rows × cols` table: each application of the band recursion
/// costs `deg g` columns.
pub fn synth_seed_width(n: usize, m: usize, rows: usize, cols: usize) -> usize {
    if rows <= n {
        cols
    } else {
        cols + m * ((rows - 1) / n)
    }
}

/// Solve the kernel condition for the unknown top row:
/// `I_{r+n,s} = a_n⁻¹·(α_r β_s − Σ_{i<n} a_i I_{r+i,s} − Σ_j I_{r,s+j} b_j)`.
///
/// `seed_rows` supplies rows `0 … n−1`; widths shrink by `deg g` per band of
/// `deg f` rows, so the seed must be `synth_seed_width` wide. The returned
/// table satisfies `check_kernel` on `(rows−n) × (cols−m)` by construction.
pub fn synth_kernel<R: DivisionRing>(
    kd: &KernelData<R>,
    seed_rows: &[Vec<R>],
    rows: usize,
    cols: usize,
) -> Result<BimomentTable<R>> {
    let n = kd.deg_f();
    let m = kd.deg_g();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "synth_kernel needs deg f ≥ 1 to have an unknown top row to solve for".into(),
        ));
    }
    let seed_width = synth_seed_width(n, m, rows, cols);
    if seed_rows.len() < n.min(rows) || seed_rows.iter().take(n.min(rows)).any(|r| r.len() < seed_width) {
        return Err(Error::InsufficientSeed {
            needed_rows: n.min(rows),
            needed_cols: seed_width,
        });
    }
    if rows > n {
        if kd.alpha.len() < rows - n {
            return Err(Error::SequenceTooShort {
                name: "alpha",
                needed: rows - n,
                got: kd.alpha.len(),
            });
        }
        if kd.beta.len() + m < seed_width {
            return Err(Error::SequenceTooShort {
                name: "beta",
                needed: seed_width - m,
                got: kd.beta.len(),
            });
        }
    }
    let a_n_inv = kd.f.leading()?.inv()?;
    let mut grid: Vec<Vec<R>> = seed_rows
        .iter()
        .take(n.min(rows))
        .map(|r| r[..seed_width].to_vec())
        .collect();
    for t in n..rows {
        let r = t - n;
        let width = grid[r].len().saturating_sub(m);
        let mut row = Vec::with_capacity(width);
        for s in 0..width {
            let mut acc = kd.alpha[r].mul(&kd.beta[s]);
            for (i, a_i) in kd.f.coeffs().iter().enumerate().take(n) {
                acc = acc.sub(&a_i.mul(&grid[r + i][s]));
            }
            for (j, b_j) in kd.g.coeffs().iter().enumerate() {
                acc = acc.sub(&grid[r][s + j].mul(b_j));
            }
            row.push(a_n_inv.mul(&acc));
        }
        grid.push(row);
    }
    let table = BimomentTable::from_fn(rows, cols, |a, b| grid[a][b].clone());
    debug_assert!(check_kernel(
        &table,
        kd,
        rows.saturating_sub(n),
        cols.saturating_sub(m)
    )
    .map(|rep| rep.pass())
    .unwrap_or(false));
    Ok(table)
}

/// `synth_kernel` with random seed rows, retried until the resulting table
/// is generic enough to build the biorthonormal system up to
/// `generic_upto` with nonzero normalizations π, η.
pub fn synth_kernel_random<R: RandomScalar, G: Rng + ?Sized>(
    kd: &KernelData<R>,
    rows: usize,
    cols: usize,
    generic_upto: usize,
    rng: &mut G,
    max_retries: usize,
) -> Result<BimomentTable<R>> {
    let n = kd.deg_f();
    let m = kd.deg_g();
    let seed_width = synth_seed_width(n, m, rows, cols);
    let mut last = 0;
    for _ in 0..max_retries {
        let seeds: Vec<Vec<R>> = (0..n)
            .map(|_| (0..seed_width).map(|_| R::sample_small(rng)).collect())
            .collect();
        let table = synth_kernel(kd, &seeds, rows, cols)?;
        match BiorthoSystem::build(&table, generic_upto, Normalization::Biorthonormal) {
            Ok(sys) => match compute_pi_eta(&sys, kd) {
                Ok(_) => return Ok(table),
                Err(Error::DegenerateNormalization { index, .. }) => last = index,
                Err(other) => return Err(other),
            },
            Err(Error::GenericityViolation { n }) => last = n,
            Err(other) => return Err(other),
        }
    }
    Err(Error::GenericityRetriesExhausted {
        attempts: max_retries,
        last,
    })
}

fn require_biorthonormal<R: DivisionRing>(sys: &BiorthoSystem<R>, op: &'static str) -> Result<()> {
    if sys.normalization != Normalization::Biorthonormal {
        return Err(Error::NotBiorthonormal(op));
    }
    Ok(())
}

/// Expand a left polynomial in the degree-graded basis `{p_i}` by
/// triangular leading-coefficient elimination; coefficients attach on the
/// left. Independent of the pairing route.
pub fn expand_in_p_basis<R: DivisionRing>(
    t: &LeftPoly<R>,
    ps: &[LeftPoly<R>],
) -> Result<Vec<R>> {
    let Some(deg) = t.degree_opt() else {
        return Ok(Vec::new());
    };
    if ps.len() <= deg {
        return Err(Error::SequenceTooShort {
            name: "ps",
            needed: deg + 1,
            got: ps.len(),
        });
    }
    let mut coeffs = vec![R::zero(); deg + 1];
    let mut residual = t.clone();
    for d in (0..=deg).rev() {
        let c = residual.coeff(d);
        if c.is_zero() {
            continue;
        }
        let gamma = c.mul(&ps[d].leading()?.inv()?);
        residual = residual.sub(&ps[d].scale_left(&gamma));
        coeffs[d] = gamma;
    }
    if !residual.is_zero() {
        return Err(Error::InternalInconsistency(
            "basis expansion left a nonzero residual".into(),
        ));
    }
    Ok(coeffs)
}

/// Expand a right polynomial in `{q_i}`; coefficients attach on the right.
pub fn expand_in_q_basis<R: DivisionRing>(
    t: &RightPoly<R>,
    qs: &[RightPoly<R>],
) -> Result<Vec<R>> {
    let Some(deg) = t.degree_opt() else {
        return Ok(Vec::new());
    };
    if qs.len() <= deg {
        return Err(Error::SequenceTooShort {
            name: "qs",
            needed: deg + 1,
            got: qs.len(),
        });
    }
    let mut coeffs = vec![R::zero(); deg + 1];
    let mut residual = t.clone();
    for d in (0..=deg).rev() {
        let c = residual.coeff(d);
        if c.is_zero() {
            continue;
        }
        let delta = qs[d].leading()?.inv()?.mul(&c);
        residual = residual.sub(&qs[d].scale_right(&delta));
        coeffs[d] = delta;
    }
    if !residual.is_zero() {
        return Err(Error::InternalInconsistency(
            "basis expansion left a nonzero residual".into(),
        ));
    }
    Ok(coeffs)
}

/// `X_{k,l} = <p_k·f, q_l>` for `l ≤ k + deg f`, structural zeros above;
/// certificate `[−deg f, +∞]`. Cross-checked against the basis-expansion
/// route wherever the basis reaches.
pub fn compute_x<R: DivisionRing>(
    sys: &BiorthoSystem<R>,
    kd: &KernelData<R>,
    table: &BimomentTable<R>,
) -> Result<BandedMatrix<R>> {
    require_biorthonormal(sys, "compute_x")?;
    let n_sys = sys.len();
    let n = kd.deg_f();
    if table.rows() < n_sys + n || table.cols() < n_sys {
        return Err(Error::InsufficientTable {
            needed_rows: n_sys + n,
            needed_cols: n_sys,
            rows: table.rows(),
            cols: table.cols(),
        });
    }
    let mut x = BandedMatrix::zero(
        n_sys,
        Band::new(BandLimit::Fin(-(n as i64)), BandLimit::PosInf),
    );
    for k in 0..n_sys {
        let pf = sys.ps[k].mul_central(&kd.f);
        for l in 0..=(k + n).min(n_sys - 1) {
            x.set(k, l, pair(&pf, &sys.qs[l], table)?)?;
        }
        // Independent route: expand p_k·f in the p-basis; the biorthonormal
        // Gram identity forces the two to agree entrywise.
        if k + n < n_sys {
            let gamma = expand_in_p_basis(&pf, &sys.ps)?;
            for l in 0..n_sys {
                let expect = gamma.get(l).cloned().unwrap_or_else(R::zero);
                if *x.get(k, l) != expect {
                    return Err(Error::InternalInconsistency(format!(
                        "X_({k},{l}): pairing route {} vs basis-expansion route {}",
                        x.get(k, l),
                        expect
                    )));
                }
            }
        }
    }
    Ok(x)
}

/// `Yᵀ_{k,l} = <p_k, g·q_l>` for `k ≤ l + deg g`, structural zeros below;
/// certificate `[−∞, deg g]`. Cross-checked against the q-basis expansion.
pub fn compute_y_t<R: DivisionRing>(
    sys: &BiorthoSystem<R>,
    kd: &KernelData<R>,
    table: &BimomentTable<R>,
) -> Result<BandedMatrix<R>> {
    require_biorthonormal(sys, "compute_y_t")?;
    let n_sys = sys.len();
    let m = kd.deg_g();
    if table.rows() < n_sys || table.cols() < n_sys + m {
        return Err(Error::InsufficientTable {
            needed_rows: n_sys,
            needed_cols: n_sys + m,
            rows: table.rows(),
            cols: table.cols(),
        });
    }
    let mut y_t = BandedMatrix::zero(
        n_sys,
        Band::new(BandLimit::NegInf, BandLimit::Fin(m as i64)),
    );
    for l in 0..n_sys {
        let gq = sys.qs[l].mul_central(&kd.g);
        for k in 0..=(l + m).min(n_sys - 1) {
            y_t.set(k, l, pair(&sys.ps[k], &gq, table)?)?;
        }
        if l + m < n_sys {
            let delta = expand_in_q_basis(&gq, &sys.qs)?;
            for k in 0..n_sys {
                let expect = delta.get(k).cloned().unwrap_or_else(R::zero);
                if *y_t.get(k, l) != expect {
                    return Err(Error::InternalInconsistency(format!(
                        "Yᵀ_({k},{l}): pairing route {} vs basis-expansion route {}",
                        y_t.get(k, l),
                        expect
                    )));
                }
            }
        }
    }
    Ok(y_t)
}

/// `π_k = Σ c_i α_i` and `η_l = Σ β_i d_i` from the coefficients of the
/// biorthonormal system. A zero value is a hard degenerate-normalization
/// error naming the index: `D_π⁻¹` would not exist.
pub fn compute_pi_eta<R: DivisionRing>(
    sys: &BiorthoSystem<R>,
    kd: &KernelData<R>,
) -> Result<(Vec<R>, Vec<R>)> {
    let n_sys = sys.len();
    if kd.alpha.len() < n_sys {
        return Err(Error::SequenceTooShort {
            name: "alpha",
            needed: n_sys,
            got: kd.alpha.len(),
        });
    }
    if kd.beta.len() < n_sys {
        return Err(Error::SequenceTooShort {
            name: "beta",
            needed: n_sys,
            got: kd.beta.len(),
        });
    }
    let mut pi = Vec::with_capacity(n_sys);
    for (k, p) in sys.ps.iter().enumerate() {
        let mut acc = R::zero();
        for (i, c_i) in p.coeffs().iter().enumerate() {
            acc = acc.add(&c_i.mul(&kd.alpha[i]));
        }
        if acc.is_zero() {
            return Err(Error::DegenerateNormalization {
                kind: "pi",
                index: k,
            });
        }
        pi.push(acc);
    }
    let mut eta = Vec::with_capacity(n_sys);
    for (l, q) in sys.qs.iter().enumerate() {
        let mut acc = R::zero();
        for (i, d_i) in q.coeffs().iter().enumerate() {
            acc = acc.add(&kd.beta[i].mul(d_i));
        }
        if acc.is_zero() {
            return Err(Error::DegenerateNormalization {
                kind: "eta",
                index: l,
            });
        }
        eta.push(acc);
    }
    Ok((pi, eta))
}

/// Exact rank-1 violations of `(X + Yᵀ)_{k,l} = π_k·η_l`.
pub fn rank1_violations<R: DivisionRing>(
    x: &BandedMatrix<R>,
    y_t: &BandedMatrix<R>,
    pi: &[R],
    eta: &[R],
) -> Result<Vec<(usize, usize)>> {
    let sum = x.add(y_t)?;
    let n = sum.trunc();
    let mut out = Vec::new();
    for (k, pi_k) in pi.iter().enumerate().take(n) {
        for (l, eta_l) in eta.iter().enumerate().take(n) {
            if *sum.get(k, l) != pi_k.mul(eta_l) {
                out.push((k, l));
            }
        }
    }
    Ok(out)
}

/// Both defining forms of A and Bᵀ, merged with exact agreement checking.
///
/// The merge intersects the two product certificates, which is precisely
/// the bandedness argument: A ∈ M_[−(n+1), m], Bᵀ ∈ M_[−n, m+1].
pub fn compute_a_b<R: DivisionRing>(
    x: &BandedMatrix<R>,
    y_t: &BandedMatrix<R>,
    pi: &[R],
    eta: &[R],
) -> Result<(BandedMatrix<R>, BandedMatrix<R>)> {
    let n_sys = x.trunc();
    let d_pi_inv = {
        let mut ds = Vec::with_capacity(n_sys);
        for v in pi.iter().take(n_sys) {
            ds.push(v.inv()?);
        }
        BandedMatrix::diagonal(ds)
    };
    let d_eta_inv = {
        let mut ds = Vec::with_capacity(n_sys);
        for v in eta.iter().take(n_sys) {
            ds.push(v.inv()?);
        }
        BandedMatrix::diagonal(ds)
    };
    let lam = BandedMatrix::<R>::shift(n_sys);
    let id = BandedMatrix::<R>::identity(n_sys);
    let lam_minus_id = lam.sub(&id)?;
    let lam_t_minus_id = lam.transpose().sub(&id)?;

    let u = lam_minus_id.mul(&d_pi_inv)?;
    let a_form1 = u.mul(x)?;
    let a_form2 = u.mul(y_t)?.neg();
    let a = a_form1.merge_checked(&a_form2, "A = (Λ−Id)Dπ⁻¹X vs −(Λ−Id)Dπ⁻¹Yᵀ")?;

    let w = d_eta_inv.mul(&lam_t_minus_id)?;
    let b_form1 = y_t.mul(&w)?;
    let b_form2 = x.mul(&w)?.neg();
    let b_t = b_form1.merge_checked(&b_form2, "Bᵀ = YᵀDη⁻¹(Λᵀ−Id) vs −XDη⁻¹(Λᵀ−Id)")?;
    Ok((a, b_t))
}

/// The recurrence operators of one conforming instance.
#[derive(Debug, Clone)]
pub struct RecurrenceOps<R: DivisionRing> {
    pub x: BandedMatrix<R>,
    pub y_t: BandedMatrix<R>,
    pub pi: Vec<R>,
    pub eta: Vec<R>,
    pub a: BandedMatrix<R>,
    pub b_t: BandedMatrix<R>,
}

/// Exact verification result for one recurrence row k.
#[derive(Debug, Clone)]
pub struct RowCheck<R: DivisionRing> {
    pub k: usize,
    pub p_pass: bool,
    pub q_pass: bool,
    /// Nonzero coefficients consumed on each side; at most n+m+2.
    pub p_terms: usize,
    pub q_terms: usize,
    pub p_residual: LeftPoly<R>,
    pub q_residual: RightPoly<R>,
}

/// Verify the two displayed recurrences at row k as exact polynomial
/// identities. Sum indices below zero are dropped; the index window is the
/// band-certified one, `[k−1−m, k+n]` on the p side and `[k−1−n, k+m]` on
/// the q side.
pub fn verify_recurrence<R: DivisionRing>(
    sys: &BiorthoSystem<R>,
    kd: &KernelData<R>,
    ops: &RecurrenceOps<R>,
    k: usize,
) -> Result<RowCheck<R>> {
    let n_sys = sys.len();
    let n = kd.deg_f();
    let m = kd.deg_g();
    if k < 1 || k + n >= n_sys || k + m >= n_sys {
        return Err(Error::InvalidArgument(format!(
            "row k = {k} needs 1 ≤ k and k + max(deg f, deg g) < {n_sys}"
        )));
    }
    if k > ops.a.exact_rows() {
        return Err(Error::InvalidArgument(format!(
            "row {} of A is not truncation-exact (exact rows: {})",
            k - 1,
            ops.a.exact_rows()
        )));
    }
    if k > ops.b_t.exact_cols() {
        return Err(Error::InvalidArgument(format!(
            "column {} of Bᵀ is not truncation-exact (exact cols: {})",
            k - 1,
            ops.b_t.exact_cols()
        )));
    }

    // p side: (π_k⁻¹ p_k − π_{k-1}⁻¹ p_{k-1})·f = Σ A_{k-1,i}·p_i.
    let lhs_p = sys.ps[k]
        .scale_left(&ops.pi[k].inv()?)
        .sub(&sys.ps[k - 1].scale_left(&ops.pi[k - 1].inv()?))
        .mul_central(&kd.f);
    let mut rhs_p = LeftPoly::zero();
    let mut p_terms = 0;
    for i in (k - 1).saturating_sub(m)..=(k + n) {
        let coeff = ops.a.get(k - 1, i);
        if coeff.is_zero() {
            continue;
        }
        p_terms += 1;
        rhs_p = rhs_p.add(&sys.ps[i].scale_left(coeff));
    }
    let p_residual = lhs_p.sub(&rhs_p);

    // q side: g·(q_k η_k⁻¹ − q_{k-1} η_{k-1}⁻¹) = Σ q_i·(Bᵀ)_{i,k-1}.
    let lhs_q = sys.qs[k]
        .scale_right(&ops.eta[k].inv()?)
        .sub(&sys.qs[k - 1].scale_right(&ops.eta[k - 1].inv()?))
        .mul_central(&kd.g);
    let mut rhs_q = RightPoly::zero();
    let mut q_terms = 0;
    for i in (k - 1).saturating_sub(n)..=(k + m) {
        let coeff = ops.b_t.get(i, k - 1);
        if coeff.is_zero() {
            continue;
        }
        q_terms += 1;
        rhs_q = rhs_q.add(&sys.qs[i].scale_right(coeff));
    }
    let q_residual = lhs_q.sub(&rhs_q);

    Ok(RowCheck {
        k,
        p_pass: p_residual.is_zero(),
        q_pass: q_residual.is_zero(),
        p_terms,
        q_terms,
        p_residual,
        q_residual,
    })
}

/// Full pipeline report.
#[derive(Debug, Clone)]
pub struct RecurrenceReport<R: DivisionRing> {
    pub kernel: KernelReport<R>,
    pub gram_pass: bool,
    pub rank1_violations: Vec<(usize, usize)>,
    pub a_band: Band,
    pub a_inferred: Band,
    pub b_t_band: Band,
    pub b_t_inferred: Band,
    pub rows: Vec<RowCheck<R>>,
    pub max_terms: usize,
}

impl<R: DivisionRing> RecurrenceReport<R> {
    pub fn pass(&self) -> bool {
        self.kernel.pass()
            && self.gram_pass
            && self.rank1_violations.is_empty()
            && self
                .rows
                .iter()
                .all(|r| r.p_pass && r.q_pass && r.p_terms <= self.max_terms && r.q_terms <= self.max_terms)
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!(
            "kernel condition: {} on {}x{}\n",
            if self.kernel.pass() { "PASS" } else { "FAIL" },
            self.kernel.r_range,
            self.kernel.s_range
        ));
        s.push_str(&format!(
            "biorthonormal Gram = Id: {}\n",
            if self.gram_pass { "PASS" } else { "FAIL" }
        ));
        s.push_str(&format!(
            "rank-1 identity X + Yᵀ = π·ηᵀ: {}\n",
            if self.rank1_violations.is_empty() { "PASS" } else { "FAIL" }
        ));
        s.push_str(&format!(
            "A certified {} (inferred {}), Bᵀ certified {} (inferred {})\n",
            self.a_band, self.a_inferred, self.b_t_band, self.b_t_inferred
        ));
        for r in &self.rows {
            s.push_str(&format!(
                "k = {}: p-side {} ({} terms), q-side {} ({} terms)\n",
                r.k,
                if r.p_pass { "PASS" } else { "FAIL" },
                r.p_terms,
                if r.q_pass { "PASS" } else { "FAIL" },
                r.q_terms
            ));
        }
        s.push_str(&format!(
            "overall: {}\n",
            if self.pass() { "PASS" } else { "FAIL" }
        ));
        s
    }
}

/// Truncation the pipeline needs to verify recurrence rows `1 ..= upto_k`:
/// the system must reach degree `upto_k + max(n, m)` and the table must
/// cover the pairings behind X and Yᵀ.
pub fn required_extent(upto_k: usize, n: usize, m: usize) -> (usize, usize, usize) {
    let n_sys = upto_k + n.max(m) + 1;
    (n_sys, n_sys + n, n_sys + m)
}

/// Run the whole pipeline: kernel check, biorthonormal build, X/Yᵀ,
/// π/η, A/Bᵀ, and exact verification of rows `1 ..= upto_k`.
pub fn run_pipeline<R: DivisionRing>(
    table: &BimomentTable<R>,
    kd: &KernelData<R>,
    upto_k: usize,
) -> Result<(RecurrenceOps<R>, RecurrenceReport<R>)> {
    let n = kd.deg_f();
    let m = kd.deg_g();
    let (n_sys, need_rows, need_cols) = required_extent(upto_k, n, m);
    if table.rows() < need_rows || table.cols() < need_cols {
        return Err(Error::InsufficientTable {
            needed_rows: need_rows,
            needed_cols: need_cols,
            rows: table.rows(),
            cols: table.cols(),
        });
    }
    let kernel = check_kernel(
        table,
        kd,
        (table.rows() - n).min(kd.alpha.len()),
        (table.cols() - m).min(kd.beta.len()),
    )?;
    let sys = BiorthoSystem::build(table, n_sys, Normalization::Biorthonormal)?;
    let gram_pass = verify_biortho(&sys, table)?.pass();
    let x = compute_x(&sys, kd, table)?;
    let y_t = compute_y_t(&sys, kd, table)?;
    let (pi, eta) = compute_pi_eta(&sys, kd)?;
    let rank1 = rank1_violations(&x, &y_t, &pi, &eta)?;
    let (a, b_t) = compute_a_b(&x, &y_t, &pi, &eta)?;
    let ops = RecurrenceOps {
        x,
        y_t,
        pi,
        eta,
        a,
        b_t,
    };
    let mut rows = Vec::with_capacity(upto_k);
    for k in 1..=upto_k {
        rows.push(verify_recurrence(&sys, kd, &ops, k)?);
    }
    let report = RecurrenceReport {
        kernel,
        gram_pass,
        rank1_violations: rank1,
        a_band: ops.a.band(),
        a_inferred: ops.a.inferred_band(),
        b_t_band: ops.b_t.band(),
        b_t_inferred: ops.b_t.inferred_band(),
        rows,
        max_terms: n + m + 2,
    };
    Ok((ops, report))
}
