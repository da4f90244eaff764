//! Seeded random generators for generic test data.
//!
//! Genericity (every required quasideterminant invertible) holds for almost
//! all tables but not for every random draw with small entries, so all
//! generators retry a bounded number of times and then abort with the last
//! offending degree. Everything is driven by a caller-supplied RNG; the CLI
//! derives one from its `--seed` so runs are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::biortho::{BiorthoSystem, Normalization};
use crate::error::{Error, Result};
use crate::pairing::BimomentTable;
use crate::poly::{LeftPoly, RightPoly};
use crate::ring::{DivisionRing, Quat, Rat};

/// Default retry budget for genericity loops.
pub const DEFAULT_MAX_RETRIES: usize = 200;

/// All library randomness flows through this seeded, portable RNG.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Scalars that can be sampled with small entries for generic tables.
pub trait RandomScalar: DivisionRing {
    fn sample_small<G: Rng + ?Sized>(rng: &mut G) -> Self;
}

impl RandomScalar for Rat {
    fn sample_small<G: Rng + ?Sized>(rng: &mut G) -> Self {
        Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=3)).unwrap()
    }
}

impl RandomScalar for Quat {
    fn sample_small<G: Rng + ?Sized>(rng: &mut G) -> Self {
        Quat::from_ints(
            rng.gen_range(-4..=4),
            rng.gen_range(-4..=4),
            rng.gen_range(-4..=4),
            rng.gen_range(-4..=4),
        )
    }
}

pub fn sample_nonzero<R: RandomScalar, G: Rng + ?Sized>(rng: &mut G) -> R {
    loop {
        let x = R::sample_small(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Nonzero central element (rational scalar embedded in the ring).
pub fn sample_central_nonzero<R: RandomScalar, G: Rng + ?Sized>(rng: &mut G) -> R {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        if n != 0 {
            return R::from_int(n);
        }
    }
}

/// Random `rows × cols` table in generic position: the biorthonormal system
/// up to `generic_upto` must build. Retries with fresh entries and aborts
/// with the last failing degree after `max_retries` attempts.
pub fn random_generic_table<R: RandomScalar, G: Rng + ?Sized>(
    rng: &mut G,
    rows: usize,
    cols: usize,
    generic_upto: usize,
    max_retries: usize,
) -> Result<BimomentTable<R>> {
    let mut last = 0;
    for _ in 0..max_retries {
        let t = BimomentTable::from_fn(rows, cols, |_, _| R::sample_small(rng));
        match BiorthoSystem::build(&t, generic_upto, Normalization::Biorthonormal) {
            Ok(_) => return Ok(t),
            Err(Error::GenericityViolation { n }) => last = n,
            Err(other) => return Err(other),
        }
    }
    Err(Error::GenericityRetriesExhausted {
        attempts: max_retries,
        last,
    })
}

/// Random degree-graded sequences `deg p_n = deg q_n = n` for `n < upto`,
/// with invertible (nonzero) leading coefficients.
pub fn random_degree_graded<R: RandomScalar, G: Rng + ?Sized>(
    rng: &mut G,
    upto: usize,
) -> (Vec<LeftPoly<R>>, Vec<RightPoly<R>>) {
    let mut ps = Vec::with_capacity(upto);
    let mut qs = Vec::with_capacity(upto);
    for n in 0..upto {
        let mut pc: Vec<R> = (0..n).map(|_| R::sample_small(rng)).collect();
        pc.push(sample_nonzero(rng));
        ps.push(LeftPoly::from_coeffs(pc));
        let mut qc: Vec<R> = (0..n).map(|_| R::sample_small(rng)).collect();
        qc.push(sample_nonzero(rng));
        qs.push(RightPoly::from_coeffs(qc));
    }
    (ps, qs)
}
