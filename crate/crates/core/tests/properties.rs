//! Property tests for the algebraic identities the library is built on.
//! All assertions are exact equalities.

use ncbiortho::banded::{Band, BandedMatrix};
use ncbiortho::pairing::{pair, BimomentTable};
use ncbiortho::poly::{CentralPoly, LeftPoly, RightPoly};
use ncbiortho::ring::{DivisionRing, Quat, Rat};
use ncbiortho::DenseMatrix;

use proptest::collection::vec;
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn arb_quat() -> impl Strategy<Value = Quat> {
    (arb_rat(), arb_rat(), arb_rat(), arb_rat()).prop_map(|(a, b, c, d)| Quat::new(a, b, c, d))
}

proptest! {
    #[test]
    fn rational_json_round_trip_is_exact(x in arb_rat()) {
        let v = serde_json::to_value(&x).unwrap();
        prop_assert_eq!(serde_json::from_value::<Rat>(v).unwrap(), x);
    }

    #[test]
    fn quaternion_json_round_trip_is_exact(x in arb_quat()) {
        let v = serde_json::to_value(&x).unwrap();
        prop_assert_eq!(serde_json::from_value::<Quat>(v).unwrap(), x);
    }

    #[test]
    fn quaternion_inverses_are_two_sided(x in arb_quat()) {
        prop_assume!(!x.is_zero());
        let xi = x.inv().unwrap();
        prop_assert_eq!(x.mul(&xi), Quat::one());
        prop_assert_eq!(xi.mul(&x), Quat::one());
    }

    #[test]
    fn pairing_is_biadditive(
        p1 in vec(arb_quat(), 1..5),
        p2 in vec(arb_quat(), 1..5),
        q in vec(arb_quat(), 1..5),
        entries in vec(arb_quat(), 25),
    ) {
        let table = BimomentTable::from_fn(5, 5, |a, b| entries[a * 5 + b].clone());
        let p1 = LeftPoly::from_coeffs(p1);
        let p2 = LeftPoly::from_coeffs(p2);
        let q = RightPoly::from_coeffs(q);
        let lhs = pair(&p1.add(&p2), &q, &table).unwrap();
        let rhs = pair(&p1, &q, &table).unwrap().add(&pair(&p2, &q, &table).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_respects_the_bimodule_sides(
        c in arb_quat(),
        p in vec(arb_quat(), 1..5),
        q in vec(arb_quat(), 1..5),
        entries in vec(arb_quat(), 25),
    ) {
        let table = BimomentTable::from_fn(5, 5, |a, b| entries[a * 5 + b].clone());
        let p = LeftPoly::from_coeffs(p);
        let q = RightPoly::from_coeffs(q);
        let base = pair(&p, &q, &table).unwrap();
        prop_assert_eq!(pair(&p.scale_left(&c), &q, &table).unwrap(), c.mul(&base));
        prop_assert_eq!(pair(&p, &q.scale_right(&c), &table).unwrap(), base.mul(&c));
    }

    #[test]
    fn central_multiplication_associates(
        p in vec(arb_quat(), 1..5),
        f in vec(-5i64..=5, 1..4),
        g in vec(-5i64..=5, 1..4),
    ) {
        let p = LeftPoly::from_coeffs(p);
        let f = CentralPoly::<Quat>::from_ints(&f);
        let g = CentralPoly::<Quat>::from_ints(&g);
        prop_assert_eq!(
            p.mul_central(&f).mul_central(&g),
            p.mul_central(&f.mul(&g))
        );
    }

    #[test]
    fn band_certificates_survive_arithmetic(
        lo1 in -4i64..=4, w1 in 0i64..=4,
        lo2 in -4i64..=4, w2 in 0i64..=4,
        entries in vec(arb_rat(), 64),
    ) {
        fn nonzeros_within(m: &BandedMatrix<Rat>, band: &Band) -> bool {
            (0..m.trunc()).all(|u| {
                (0..m.trunc())
                    .all(|v| m.get(u, v).is_zero() || band.contains(u as i64 - v as i64))
            })
        }
        let b1 = Band::fin(lo1, lo1 + w1);
        let b2 = Band::fin(lo2, lo2 + w2);
        let mut it = entries.into_iter().cycle();
        let x = BandedMatrix::from_fn_banded(8, b1, |_, _| it.next().unwrap());
        let y = BandedMatrix::from_fn_banded(8, b2, |_, _| it.next().unwrap());
        prop_assert!(nonzeros_within(&x.add(&y).unwrap(), &b1.hull(&b2)));
        prop_assert!(nonzeros_within(&x.mul(&y).unwrap(), &b1.sum(&b2)));
    }

    #[test]
    fn quasidet_matches_det_ratio(
        entries in vec(-6i64..=6, 16),
        i in 0usize..4,
        j in 0usize..4,
    ) {
        let m = DenseMatrix::from_fn(4, 4, |r, c| Rat::from(entries[r * 4 + c]));
        let minor_det = m.minor_matrix(i, j).det().unwrap();
        match m.quasidet(i, j) {
            Ok(qd) => {
                prop_assume!(!minor_det.is_zero());
                let ratio = m.det().unwrap().mul(&minor_det.inv().unwrap());
                let expect = if (i + j) % 2 == 0 { ratio } else { ratio.neg() };
                prop_assert_eq!(qd, expect);
            }
            Err(_) => prop_assert!(minor_det.is_zero()),
        }
    }
}
