//! Truncated infinite matrices with certified band intervals.
//!
//! `M_{[lo,hi]}` is the set of infinite matrices whose `(u,v)` entry
//! vanishes unless `lo ≤ u − v ≤ hi` (row minus column throughout). A
//! `BandedMatrix` stores the leading `N×N` corner of such a matrix together
//! with its band certificate, one unbounded side being allowed on each end.
//!
//! Band arithmetic follows the sum/hull rules: `X + Y ∈ M_{[min,max]}` and
//! `X·Y ∈ M_{[lo+lo, hi+hi]}`. Because the corner is a truncation, a product
//! entry can silently miss contributions from indices ≥ N; every operation
//! therefore tracks which leading rows and columns of its result are
//! truncation-exact, i.e. provably equal to the corresponding entries of the
//! untruncated product. An entry `(u,v)` is certified exact iff
//! `u < exact_rows` or `v < exact_cols`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::ring::DivisionRing;

/// One end of a band interval: an integer or an unbounded sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BandLimit {
    NegInf,
    Fin(i64),
    PosInf,
}

impl fmt::Display for BandLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BandLimit::NegInf => write!(f, "-inf"),
            BandLimit::Fin(x) => write!(f, "{x}"),
            BandLimit::PosInf => write!(f, "+inf"),
        }
    }
}

/// `u − limit` as an extended integer.
fn sub_limit(u: i64, l: BandLimit) -> BandLimit {
    match l {
        BandLimit::NegInf => BandLimit::PosInf,
        BandLimit::Fin(a) => BandLimit::Fin(u - a),
        BandLimit::PosInf => BandLimit::NegInf,
    }
}

/// `v + limit` as an extended integer.
fn add_limit(v: i64, l: BandLimit) -> BandLimit {
    match l {
        BandLimit::NegInf => BandLimit::NegInf,
        BandLimit::Fin(a) => BandLimit::Fin(v + a),
        BandLimit::PosInf => BandLimit::PosInf,
    }
}

/// Certified band interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Band {
    pub lo: BandLimit,
    pub hi: BandLimit,
}

impl Band {
    pub fn new(lo: BandLimit, hi: BandLimit) -> Self {
        assert!(lo <= hi, "band interval must satisfy lo ≤ hi");
        Band { lo, hi }
    }

    pub fn fin(lo: i64, hi: i64) -> Self {
        Self::new(BandLimit::Fin(lo), BandLimit::Fin(hi))
    }

    pub fn all() -> Self {
        Self::new(BandLimit::NegInf, BandLimit::PosInf)
    }

    pub fn contains(&self, d: i64) -> bool {
        self.lo <= BandLimit::Fin(d) && BandLimit::Fin(d) <= self.hi
    }

    /// Interval-sum rule for products.
    pub fn sum(&self, rhs: &Band) -> Band {
        let lo = match (self.lo, rhs.lo) {
            (BandLimit::NegInf, _) | (_, BandLimit::NegInf) => BandLimit::NegInf,
            (BandLimit::Fin(a), BandLimit::Fin(b)) => BandLimit::Fin(a + b),
            _ => unreachable!("lo side is never +inf"),
        };
        let hi = match (self.hi, rhs.hi) {
            (BandLimit::PosInf, _) | (_, BandLimit::PosInf) => BandLimit::PosInf,
            (BandLimit::Fin(a), BandLimit::Fin(b)) => BandLimit::Fin(a + b),
            _ => unreachable!("hi side is never -inf"),
        };
        Band::new(lo, hi)
    }

    /// Min/max rule for sums.
    pub fn hull(&self, rhs: &Band) -> Band {
        Band::new(self.lo.min(rhs.lo), self.hi.max(rhs.hi))
    }

    pub fn intersect(&self, rhs: &Band) -> Option<Band> {
        let lo = self.lo.max(rhs.lo);
        let hi = self.hi.min(rhs.hi);
        (lo <= hi).then(|| Band::new(lo, hi))
    }

    pub fn is_subset_of(&self, outer: &Band) -> bool {
        outer.lo <= self.lo && self.hi <= outer.hi
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// Tightest band holding every nonzero of a dense square matrix; the zero
/// matrix gets `[0,0]` by convention.
pub fn band_infer<R: DivisionRing>(m: &DenseMatrix<R>) -> Band {
    let mut lo: Option<i64> = None;
    let mut hi: Option<i64> = None;
    for u in 0..m.rows() {
        for v in 0..m.cols() {
            if m.at(u, v).is_zero() {
                continue;
            }
            let d = u as i64 - v as i64;
            lo = Some(lo.map_or(d, |x| x.min(d)));
            hi = Some(hi.map_or(d, |x| x.max(d)));
        }
    }
    match (lo, hi) {
        (Some(a), Some(b)) => Band::fin(a, b),
        _ => Band::fin(0, 0),
    }
}

/// Leading corner of an infinite banded matrix, with truncation-exactness
/// bookkeeping.
#[derive(Clone, PartialEq, Eq)]
pub struct BandedMatrix<R: DivisionRing> {
    trunc: usize,
    band: Band,
    data: Vec<R>,
    exact_rows: usize,
    exact_cols: usize,
}

impl<R: DivisionRing> BandedMatrix<R> {
    /// All-zero corner with the given certificate; claimed fully exact.
    pub fn zero(trunc: usize, band: Band) -> Self {
        BandedMatrix {
            trunc,
            band,
            data: vec![R::zero(); trunc * trunc],
            exact_rows: trunc,
            exact_cols: trunc,
        }
    }

    /// `E_{i,j}`: single 1 at `(i,j)`, band `[i−j, i−j]`.
    pub fn unit(i: usize, j: usize, trunc: usize) -> Result<Self> {
        if i >= trunc || j >= trunc {
            return Err(Error::IndexOutOfRange {
                row: i,
                col: j,
                rows: trunc,
                cols: trunc,
            });
        }
        let d = i as i64 - j as i64;
        let mut m = Self::zero(trunc, Band::fin(d, d));
        m.data[i * trunc + j] = R::one();
        Ok(m)
    }

    pub fn identity(trunc: usize) -> Self {
        let mut m = Self::zero(trunc, Band::fin(0, 0));
        for i in 0..trunc {
            m.data[i * trunc + i] = R::one();
        }
        m
    }

    /// The up-shift Λ with ones on the first superdiagonal, band `[−1,−1]`.
    pub fn shift(trunc: usize) -> Self {
        let mut m = Self::zero(trunc, Band::fin(-1, -1));
        for i in 0..trunc.saturating_sub(1) {
            m.data[i * trunc + (i + 1)] = R::one();
        }
        m
    }

    pub fn diagonal(ds: Vec<R>) -> Self {
        let trunc = ds.len();
        let mut m = Self::zero(trunc, Band::fin(0, 0));
        for (i, d) in ds.into_iter().enumerate() {
            m.data[i * trunc + i] = d;
        }
        m
    }

    /// Fill in-band entries from a function; out-of-band entries are zero.
    pub fn from_fn_banded(
        trunc: usize,
        band: Band,
        mut f: impl FnMut(usize, usize) -> R,
    ) -> Self {
        let mut m = Self::zero(trunc, band);
        for u in 0..trunc {
            for v in 0..trunc {
                if band.contains(u as i64 - v as i64) {
                    m.data[u * trunc + v] = f(u, v);
                }
            }
        }
        m
    }

    /// Adopt a dense corner under a declared certificate, verifying it.
    pub fn from_dense(m: &DenseMatrix<R>, band: Band) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let trunc = m.rows();
        let mut out = Self::zero(trunc, band);
        for u in 0..trunc {
            for v in 0..trunc {
                let x = m.at(u, v);
                if !x.is_zero() && !band.contains(u as i64 - v as i64) {
                    return Err(Error::BandViolation {
                        row: u,
                        col: v,
                        lo: band.lo.to_string(),
                        hi: band.hi.to_string(),
                    });
                }
                out.data[u * trunc + v] = x.clone();
            }
        }
        Ok(out)
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn band(&self) -> Band {
        self.band
    }

    pub fn exact_rows(&self) -> usize {
        self.exact_rows
    }

    pub fn exact_cols(&self) -> usize {
        self.exact_cols
    }

    /// Largest k such that the leading k×k sub-square is truncation-exact.
    pub fn exact_square(&self) -> usize {
        self.exact_rows.max(self.exact_cols)
    }

    pub fn entry_is_exact(&self, u: usize, v: usize) -> bool {
        u < self.exact_rows || v < self.exact_cols
    }

    pub fn get(&self, u: usize, v: usize) -> &R {
        debug_assert!(u < self.trunc && v < self.trunc);
        &self.data[u * self.trunc + v]
    }

    pub fn set(&mut self, u: usize, v: usize, x: R) -> Result<()> {
        if u >= self.trunc || v >= self.trunc {
            return Err(Error::IndexOutOfRange {
                row: u,
                col: v,
                rows: self.trunc,
                cols: self.trunc,
            });
        }
        if !x.is_zero() && !self.band.contains(u as i64 - v as i64) {
            return Err(Error::BandViolation {
                row: u,
                col: v,
                lo: self.band.lo.to_string(),
                hi: self.band.hi.to_string(),
            });
        }
        self.data[u * self.trunc + v] = x;
        Ok(())
    }

    pub fn to_dense(&self) -> DenseMatrix<R> {
        DenseMatrix::from_fn(self.trunc, self.trunc, |u, v| self.get(u, v).clone())
    }

    /// Tightest band actually inhabited by the stored corner.
    pub fn inferred_band(&self) -> Band {
        band_infer(&self.to_dense())
    }

    pub fn transpose(&self) -> Self {
        let band = Band::new(
            match self.band.hi {
                BandLimit::PosInf => BandLimit::NegInf,
                BandLimit::Fin(x) => BandLimit::Fin(-x),
                BandLimit::NegInf => BandLimit::PosInf,
            },
            match self.band.lo {
                BandLimit::NegInf => BandLimit::PosInf,
                BandLimit::Fin(x) => BandLimit::Fin(-x),
                BandLimit::PosInf => BandLimit::NegInf,
            },
        );
        let mut out = Self::zero(self.trunc, band);
        for u in 0..self.trunc {
            for v in 0..self.trunc {
                out.data[v * self.trunc + u] = self.get(u, v).clone();
            }
        }
        out.exact_rows = self.exact_cols;
        out.exact_cols = self.exact_rows;
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for x in &mut out.data {
            *x = x.neg();
        }
        out
    }

    fn check_trunc(&self, rhs: &Self) -> Result<()> {
        if self.trunc != rhs.trunc {
            return Err(Error::TruncMismatch {
                left: self.trunc,
                right: rhs.trunc,
            });
        }
        Ok(())
    }

    /// Entrywise sum; certificate by the min/max rule, exactness by
    /// intersection.
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_trunc(rhs)?;
        let mut out = Self::zero(self.trunc, self.band.hull(&rhs.band));
        for t in 0..self.data.len() {
            out.data[t] = self.data[t].add(&rhs.data[t]);
        }
        out.exact_rows = self.exact_rows.min(rhs.exact_rows);
        out.exact_cols = self.exact_cols.min(rhs.exact_cols);
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    /// Truncated product with the interval-sum certificate.
    ///
    /// The inner index w is restricted to what both bands permit, so every
    /// stored nonzero of the result automatically satisfies the certificate.
    /// A result row u is exact when all band-permitted w (which is at most
    /// `min(u − lo_L, N−1 + hi_R)`) lie below N, the corresponding row of
    /// the left factor is exact and the touched rows of the right factor are
    /// exact; columns symmetrically.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_trunc(rhs)?;
        let n = self.trunc;
        let mut out = Self::zero(n, self.band.sum(&rhs.band));
        for u in 0..n {
            for v in 0..n {
                let upper = BandLimit::Fin(n as i64 - 1)
                    .min(sub_limit(u as i64, self.band.lo))
                    .min(add_limit(v as i64, rhs.band.hi));
                let lower = BandLimit::Fin(0)
                    .max(sub_limit(u as i64, self.band.hi))
                    .max(add_limit(v as i64, rhs.band.lo));
                let (BandLimit::Fin(lower), BandLimit::Fin(upper)) = (lower, upper) else {
                    continue;
                };
                if lower > upper {
                    continue;
                }
                let mut acc = R::zero();
                for w in lower as usize..=upper as usize {
                    let a = self.get(u, w);
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.get(w, v);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                out.data[u * n + v] = acc;
            }
        }
        out.exact_rows = {
            let mut k = 0;
            while k < n {
                let reach = sub_limit(k as i64, self.band.lo)
                    .min(add_limit(n as i64 - 1, rhs.band.hi));
                let ok = k < self.exact_rows
                    && reach < BandLimit::Fin(n as i64)
                    && reach < BandLimit::Fin(rhs.exact_rows as i64);
                if !ok {
                    break;
                }
                k += 1;
            }
            k
        };
        out.exact_cols = {
            let mut k = 0;
            while k < n {
                let reach = sub_limit(n as i64 - 1, self.band.lo)
                    .min(add_limit(k as i64, rhs.band.hi));
                let ok = k < rhs.exact_cols
                    && reach < BandLimit::Fin(n as i64)
                    && reach < BandLimit::Fin(self.exact_cols as i64);
                if !ok {
                    break;
                }
                k += 1;
            }
            k
        };
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.trunc {
            return Err(Error::DimensionMismatch {
                left_rows: self.trunc,
                left_cols: self.trunc,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        Ok((0..self.trunc)
            .map(|u| {
                let mut acc = R::zero();
                for (w, v_w) in v.iter().enumerate() {
                    let a = self.get(u, w);
                    if !a.is_zero() {
                        acc = acc.add(&a.mul(v_w));
                    }
                }
                acc
            })
            .collect())
    }

    /// Merge two computations of the same infinite matrix.
    ///
    /// Jointly certified entries must agree exactly; the merged corner takes
    /// each entry from a computation that certifies it, carries the union of
    /// the exactness regions and the intersection of the certificates, and
    /// zeroes uncertified leftovers outside the intersected band. A
    /// certified nonzero outside the intersected band is a broken hypothesis
    /// and fails loudly.
    pub fn merge_checked(&self, other: &Self, context: &str) -> Result<Self> {
        self.check_trunc(other)?;
        let n = self.trunc;
        let band = self.band.intersect(&other.band).ok_or_else(|| {
            Error::InternalInconsistency(format!(
                "{context}: certificates {} and {} are disjoint",
                self.band, other.band
            ))
        })?;
        let mut out = Self::zero(n, band);
        for u in 0..n {
            for v in 0..n {
                let in_self = self.entry_is_exact(u, v);
                let in_other = other.entry_is_exact(u, v);
                if in_self && in_other && self.get(u, v) != other.get(u, v) {
                    return Err(Error::InternalInconsistency(format!(
                        "{context}: certified entries disagree at ({u},{v}): {} vs {}",
                        self.get(u, v),
                        other.get(u, v)
                    )));
                }
                let x = if in_self {
                    self.get(u, v).clone()
                } else if in_other {
                    other.get(u, v).clone()
                } else {
                    self.get(u, v).clone()
                };
                let in_band = band.contains(u as i64 - v as i64);
                if !in_band && !x.is_zero() {
                    if in_self || in_other {
                        return Err(Error::InternalInconsistency(format!(
                            "{context}: certified entry ({u},{v}) = {x} violates band {band}"
                        )));
                    }
                    continue; // uncertified truncation garbage; drop it
                }
                out.data[u * n + v] = x;
            }
        }
        out.exact_rows = self.exact_rows.max(other.exact_rows);
        out.exact_cols = self.exact_cols.max(other.exact_cols);
        Ok(out)
    }
}

impl<R: DivisionRing> fmt::Debug for BandedMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "BandedMatrix N={} band={} exact_rows={} exact_cols={} [",
            self.trunc, self.band, self.exact_rows, self.exact_cols
        )?;
        for u in 0..self.trunc {
            let row: Vec<String> = (0..self.trunc).map(|v| self.get(u, v).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rat;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    /// Deterministic "infinite matrix" whose corner of any size can be
    /// materialized: the honest oracle for truncation-exactness.
    fn infinite_entry(seed: u64, u: usize, v: usize) -> Rat {
        let mut rng = StdRng::seed_from_u64(seed ^ (u as u64 * 1_000_003 + v as u64));
        rat(rng.gen_range(-9..=9), rng.gen_range(1..=3))
    }

    fn corner(seed: u64, band: Band, n: usize) -> BandedMatrix<Rat> {
        BandedMatrix::from_fn_banded(n, band, |u, v| infinite_entry(seed, u, v))
    }

    #[test]
    fn unit_products() {
        let e01 = BandedMatrix::<Rat>::unit(0, 1, 3).unwrap();
        let e10 = BandedMatrix::<Rat>::unit(1, 0, 3).unwrap();
        let e00 = BandedMatrix::<Rat>::unit(0, 0, 3).unwrap();
        let prod = e01.mul(&e10).unwrap();
        assert_eq!(prod.to_dense(), e00.to_dense());
        assert_eq!(prod.band(), Band::fin(-1, -1).sum(&Band::fin(1, 1)));
    }

    #[test]
    fn shift_acts_as_up_shift() {
        let lam = BandedMatrix::<Rat>::shift(4);
        assert_eq!(lam.band(), Band::fin(-1, -1));
        let v: Vec<Rat> = (0..4).map(|n| Rat::from(n + 10)).collect();
        let got = lam.mul_vec(&v).unwrap();
        assert_eq!(
            got,
            vec![Rat::from(11), Rat::from(12), Rat::from(13), Rat::zero()]
        );
    }

    #[test]
    fn identity_and_diagonal_bands() {
        assert_eq!(BandedMatrix::<Rat>::identity(5).band(), Band::fin(0, 0));
        let d = BandedMatrix::diagonal(vec![rat(1, 2), rat(3, 1)]);
        assert_eq!(d.band(), Band::fin(0, 0));
        assert_eq!(d.inferred_band(), Band::fin(0, 0));
    }

    #[test]
    fn certificate_rules() {
        let x = corner(1, Band::fin(-1, -1), 8);
        let y = corner(2, Band::fin(0, 1), 8);
        assert_eq!(x.mul(&y).unwrap().band(), Band::fin(-1, 0));

        let id = BandedMatrix::<Rat>::identity(8);
        let lam = BandedMatrix::<Rat>::shift(8);
        assert_eq!(id.add(&lam).unwrap().band(), Band::fin(-1, 0));
    }

    #[test]
    fn band_infer_examples() {
        assert_eq!(
            band_infer(&BandedMatrix::<Rat>::identity(4).to_dense()),
            Band::fin(0, 0)
        );
        assert_eq!(
            band_infer(&BandedMatrix::<Rat>::shift(4).to_dense()),
            Band::fin(-1, -1)
        );
        assert_eq!(
            band_infer(&DenseMatrix::<Rat>::zero(3, 3)),
            Band::fin(0, 0)
        );
    }

    #[test]
    fn product_nonzeros_respect_lemma_interval() {
        let n = 12;
        let x = corner(3, Band::fin(-2, 1), n);
        let y = corner(4, Band::fin(0, 3), n);
        let z = x.mul(&y).unwrap();
        assert_eq!(z.band(), Band::fin(-2, 4));
        assert!(z.inferred_band().is_subset_of(&Band::fin(-2, 4)));
    }

    #[test]
    fn random_lemma_conformance() {
        let mut rng = StdRng::seed_from_u64(55);
        for round in 0..40 {
            let n = 10;
            let a1 = rng.gen_range(-4..=4);
            let b1 = rng.gen_range(a1..=4);
            let a2 = rng.gen_range(-4..=4);
            let b2 = rng.gen_range(a2..=4);
            let x = corner(100 + round, Band::fin(a1, b1), n);
            let y = corner(200 + round, Band::fin(a2, b2), n);
            let sum = x.add(&y).unwrap();
            assert!(sum
                .inferred_band()
                .is_subset_of(&x.band().hull(&y.band())));
            let prod = x.mul(&y).unwrap();
            assert!(prod
                .inferred_band()
                .is_subset_of(&x.band().sum(&y.band())));
        }
    }

    #[test]
    fn truncated_product_matches_dense_everywhere() {
        let n = 9;
        let x = corner(7, Band::fin(-2, 1), n);
        let y = corner(8, Band::fin(-1, 2), n);
        let banded = x.mul(&y).unwrap().to_dense();
        let dense = x.to_dense().mul(&y.to_dense()).unwrap();
        assert_eq!(banded, dense);
    }

    #[test]
    fn exactness_region_agrees_with_larger_truncation() {
        // The oracle: materialize the same infinite matrices at 2N and
        // compare the certified region of the N-truncated product.
        let n = 8;
        let cases = [
            (Band::fin(-2, 1), Band::fin(0, 3)),
            (Band::fin(-1, 0), Band::new(BandLimit::Fin(-1), BandLimit::PosInf)),
            (Band::new(BandLimit::NegInf, BandLimit::Fin(2)), Band::fin(0, 1)),
        ];
        for (round, (bx, by)) in cases.into_iter().enumerate() {
            let seed_x = 300 + round as u64;
            let seed_y = 400 + round as u64;
            let small = corner(seed_x, bx, n).mul(&corner(seed_y, by, n)).unwrap();
            let big = corner(seed_x, bx, 2 * n)
                .mul(&corner(seed_y, by, 2 * n))
                .unwrap();
            let mut certified = 0;
            for u in 0..n {
                for v in 0..n {
                    if small.entry_is_exact(u, v) {
                        assert_eq!(
                            small.get(u, v),
                            big.get(u, v),
                            "certified entry ({u},{v}) differs from untruncated value"
                        );
                        certified += 1;
                    }
                }
            }
            assert!(certified > 0, "exactness region should not be empty here");
            // And the reported sub-square is certified by construction.
            let k = small.exact_square();
            for u in 0..k {
                for v in 0..k {
                    assert!(small.entry_is_exact(u, v));
                }
            }
        }
    }

    #[test]
    fn set_rejects_out_of_band_nonzeros() {
        let mut m = BandedMatrix::<Rat>::zero(4, Band::fin(0, 1));
        assert!(m.set(0, 1, Rat::from(3)).is_err());
        assert!(m.set(1, 0, Rat::from(3)).is_ok());
        assert!(m.set(0, 1, Rat::zero()).is_ok());
        let err = m.set(3, 0, Rat::from(1)).unwrap_err();
        assert!(matches!(err, Error::BandViolation { row: 3, col: 0, .. }));
    }

    #[test]
    fn trunc_mismatch_rejected() {
        let a = BandedMatrix::<Rat>::identity(3);
        let b = BandedMatrix::<Rat>::identity(4);
        assert_eq!(
            a.add(&b).unwrap_err(),
            Error::TruncMismatch { left: 3, right: 4 }
        );
    }

    #[test]
    fn transpose_mirrors_band_and_exactness() {
        let m = corner(9, Band::fin(-2, 1), 6);
        let t = m.transpose();
        assert_eq!(t.band(), Band::fin(-1, 2));
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(t.get(u, v), m.get(v, u));
            }
        }
        assert_eq!(t.transpose().to_dense(), m.to_dense());
    }

    #[test]
    fn unbounded_sides_absorb_in_arithmetic() {
        let half_open = Band::new(BandLimit::NegInf, BandLimit::Fin(2));
        let fin = Band::fin(-1, 1);
        assert_eq!(
            half_open.sum(&fin),
            Band::new(BandLimit::NegInf, BandLimit::Fin(3))
        );
        assert_eq!(
            half_open.hull(&fin),
            Band::new(BandLimit::NegInf, BandLimit::Fin(2))
        );
        assert_eq!(half_open.intersect(&fin), Some(Band::fin(-1, 1)));
        assert!(fin.is_subset_of(&Band::all()));
    }
}
