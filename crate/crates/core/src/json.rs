//! Exact JSON encodings shared with the CLI.
//!
//! Scalars are never binary floats: a rational serializes as the string
//! `"num/den"` (bare `"num"` when the denominator is 1) and a quaternion as
//! a 4-array of rational strings `["a","b","c","d"]`. When the surrounding
//! ring is quaternion, a bare rational string is accepted and lifted into
//! the center. Containers carry an explicit `"ring"` tag; a file whose tag
//! disagrees with the expected ring is rejected with a ring-mismatch error,
//! never coerced.

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;

use crate::banded::{BandLimit, BandedMatrix};
use crate::biortho::{BiorthoSystem, GramReport, Normalization};
use crate::error::{Error, Result};
use crate::favard::FavardReport;
use crate::linalg::DenseMatrix;
use crate::pairing::BimomentTable;
use crate::poly::{CentralPoly, LeftPoly, RightPoly};
use crate::recurrence::RecurrenceReport;
use crate::ring::{DivisionRing, Quat, Rat, RingTag};

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct RatVisitor;
        impl Visitor<'_> for RatVisitor {
            type Value = Rat;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a rational scalar string like \"-3/2\"")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<Rat, E> {
                Rat::parse(s).map_err(|e| E::custom(e.to_string()))
            }
        }
        deserializer.deserialize_str(RatVisitor)
    }
}

impl Serialize for Quat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(4))?;
        for comp in [&self.a, &self.b, &self.c, &self.d] {
            seq.serialize_element(&comp.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Quat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct QuatVisitor;
        impl<'de> Visitor<'de> for QuatVisitor {
            type Value = Quat;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(
                    f,
                    "a quaternion 4-array [\"a\",\"b\",\"c\",\"d\"] or a central rational string"
                )
            }
            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<Quat, E> {
                // Central lift of a bare rational.
                Rat::parse(s)
                    .map(Quat::from_rat)
                    .map_err(|e| E::custom(e.to_string()))
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Quat, A::Error> {
                let mut comps = Vec::with_capacity(4);
                while let Some(s) = seq.next_element::<String>()? {
                    comps.push(Rat::parse(&s).map_err(|e| de::Error::custom(e.to_string()))?);
                }
                if comps.len() != 4 {
                    return Err(de::Error::custom(format!(
                        "quaternion needs exactly 4 components, got {}",
                        comps.len()
                    )));
                }
                let mut it = comps.into_iter();
                Ok(Quat::new(
                    it.next().unwrap(),
                    it.next().unwrap(),
                    it.next().unwrap(),
                    it.next().unwrap(),
                ))
            }
        }
        deserializer.deserialize_any(QuatVisitor)
    }
}

impl Serialize for RingTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RingTag {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        RingTag::from_str(&s).map_err(|e| de::Error::custom(e.to_string()))
    }
}

fn bad_json(e: impl fmt::Display) -> Error {
    Error::Json(e.to_string())
}

/// Read the `"ring"` tag of a container value.
pub fn value_ring_tag(v: &Value) -> Result<RingTag> {
    let s = v
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| bad_json("missing \"ring\" field"))?;
    RingTag::from_str(s)
}

/// Infer the ring of a bare value (scalar array, polynomial object or
/// list of them): an array in a scalar position means quaternion,
/// otherwise rational. Only scalar positions are inspected, so a
/// 4-coefficient rational polynomial is not mistaken for a quaternion.
pub fn infer_ring(v: &Value) -> RingTag {
    fn scan(v: &Value) -> bool {
        match v {
            // A polynomial object: its "coeffs" entries are scalars.
            Value::Object(map) => map
                .get("coeffs")
                .and_then(Value::as_array)
                .is_some_and(|cs| cs.iter().any(Value::is_array)),
            // A list of polynomials or a bare list of scalars.
            Value::Array(items) => items.iter().any(|item| match item {
                Value::Object(_) => scan(item),
                other => other.is_array(),
            }),
            _ => false,
        }
    }
    if scan(v) {
        RingTag::Quaternion
    } else {
        RingTag::Rational
    }
}

fn check_tag<R: DivisionRing>(found: RingTag) -> Result<()> {
    if found != R::TAG {
        return Err(Error::RingMismatch {
            expected: R::TAG,
            found,
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Bimoment tables
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TableJson<R> {
    ring: RingTag,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<R>>,
}

pub fn table_to_value<R>(table: &BimomentTable<R>) -> Value
where
    R: DivisionRing + Serialize,
{
    serde_json::to_value(TableJson {
        ring: R::TAG,
        rows: table.rows(),
        cols: table.cols(),
        entries: table.entry_rows(),
    })
    .expect("table serialization cannot fail")
}

pub fn table_from_value<R>(v: &Value) -> Result<BimomentTable<R>>
where
    R: DivisionRing + serde::de::DeserializeOwned,
{
    check_tag::<R>(value_ring_tag(v)?)?;
    let parsed: TableJson<R> = serde_json::from_value(v.clone()).map_err(bad_json)?;
    let table = BimomentTable::from_rows(parsed.entries)?;
    if table.rows() != parsed.rows || table.cols() != parsed.cols {
        return Err(bad_json(format!(
            "declared {}x{} but entries are {}x{}",
            parsed.rows,
            parsed.cols,
            table.rows(),
            table.cols()
        )));
    }
    Ok(table)
}

// ---------------------------------------------------------------------------
// Dense matrices
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct MatrixJson<R> {
    ring: RingTag,
    entries: Vec<Vec<R>>,
}

pub fn matrix_to_value<R>(m: &DenseMatrix<R>) -> Value
where
    R: DivisionRing + Serialize,
{
    let entries: Vec<Vec<R>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    serde_json::to_value(MatrixJson {
        ring: R::TAG,
        entries,
    })
    .expect("matrix serialization cannot fail")
}

pub fn matrix_from_value<R>(v: &Value) -> Result<DenseMatrix<R>>
where
    R: DivisionRing + serde::de::DeserializeOwned,
{
    check_tag::<R>(value_ring_tag(v)?)?;
    let parsed: MatrixJson<R> = serde_json::from_value(v.clone()).map_err(bad_json)?;
    DenseMatrix::from_rows(parsed.entries)
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct PolyJson<R> {
    var: String,
    coeffs: Vec<R>,
}

pub fn left_poly_to_value<R>(p: &LeftPoly<R>) -> Value
where
    R: DivisionRing + Serialize,
{
    serde_json::to_value(PolyJson {
        var: "x".into(),
        coeffs: p.coeffs().to_vec(),
    })
    .expect("poly serialization cannot fail")
}

pub fn right_poly_to_value<R>(q: &RightPoly<R>) -> Value
where
    R: DivisionRing + Serialize,
{
    serde_json::to_value(PolyJson {
        var: "y".into(),
        coeffs: q.coeffs().to_vec(),
    })
    .expect("poly serialization cannot fail")
}

fn poly_coeffs_from_value<R>(v: &Value, var: &str) -> Result<Vec<R>>
where
    R: DivisionRing + serde::de::DeserializeOwned,
{
    let parsed: PolyJson<R> = serde_json::from_value(v.clone()).map_err(bad_json)?;
    if parsed.var != var {
        return Err(bad_json(format!(
            "expected a polynomial in {var:?}, got {:?}",
            parsed.var
        )));
    }
    Ok(parsed.coeffs)
}

pub fn left_poly_from_value<R>(v: &Value) -> Result<LeftPoly<R>>
where
    R: DivisionRing + serde::de::DeserializeOwned,
{
    Ok(LeftPoly::from_coeffs(poly_coeffs_from_value(v, "x")?))
}

pub fn right_poly_from_value<R>(v: &Value) -> Result<RightPoly<R>>
where
    R: DivisionRing + serde::de::DeserializeOwned,
{
    Ok(RightPoly::from_coeffs(poly_coeffs_from_value(v, "y")?))
}

/// Central polynomial in the stated variable; centrality is validated.
pub fn central_poly_from_value<R>(v: &Value, var: &str) -> Result<CentralPoly<R>>
where
    R: DivisionRing + serde::de::DeserializeOwned,
{
    CentralPoly::new(poly_coeffs_from_value(v, var)?)
}

pub fn left_polys_from_value<R>(v: &Value) -> Result<Vec<LeftPoly<R>>>
where
    R: DivisionRing + serde::de::DeserializeOwned,
{
    let items = v
        .as_array()
        .ok_or_else(|| bad_json("expected a JSON array of polynomials"))?;
    items.iter().map(left_poly_from_value).collect()
}

pub fn right_polys_from_value<R>(v: &Value) -> Result<Vec<RightPoly<R>>>
where
    R: DivisionRing + serde::de::DeserializeOwned,
{
    let items = v
        .as_array()
        .ok_or_else(|| bad_json("expected a JSON array of polynomials"))?;
    items.iter().map(right_poly_from_value).collect()
}

/// Bare array of scalars (α, β, c sequences).
pub fn scalars_from_value<R>(v: &Value) -> Result<Vec<R>>
where
    R: DivisionRing + serde::de::DeserializeOwned,
{
    serde_json::from_value(v.clone()).map_err(bad_json)
}

pub fn scalars_to_value<R>(xs: &[R]) -> Value
where
    R: DivisionRing + Serialize,
{
    serde_json::to_value(xs).expect("scalar serialization cannot fail")
}

// ---------------------------------------------------------------------------
// Systems
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct SystemJson<R> {
    ring: RingTag,
    normalization: String,
    ps: Vec<PolyJson<R>>,
    qs: Vec<PolyJson<R>>,
}

pub fn system_to_value<R>(sys: &BiorthoSystem<R>) -> Value
where
    R: DivisionRing + Serialize,
{
    serde_json::to_value(SystemJson {
        ring: R::TAG,
        normalization: sys.normalization.to_string(),
        ps: sys
            .ps
            .iter()
            .map(|p| PolyJson {
                var: "x".into(),
                coeffs: p.coeffs().to_vec(),
            })
            .collect(),
        qs: sys
            .qs
            .iter()
            .map(|q| PolyJson {
                var: "y".into(),
                coeffs: q.coeffs().to_vec(),
            })
            .collect(),
    })
    .expect("system serialization cannot fail")
}

pub fn system_from_value<R>(v: &Value) -> Result<BiorthoSystem<R>>
where
    R: DivisionRing + serde::de::DeserializeOwned,
{
    check_tag::<R>(value_ring_tag(v)?)?;
    let parsed: SystemJson<R> = serde_json::from_value(v.clone()).map_err(bad_json)?;
    let normalization = match parsed.normalization.as_str() {
        "monic" => Normalization::Monic,
        "biorthonormal" => Normalization::Biorthonormal,
        other => return Err(bad_json(format!("unknown normalization {other:?}"))),
    };
    if parsed.ps.len() != parsed.qs.len() {
        return Err(bad_json(format!(
            "system has {} p's but {} q's",
            parsed.ps.len(),
            parsed.qs.len()
        )));
    }
    for p in &parsed.ps {
        if p.var != "x" {
            return Err(bad_json("every p must be a polynomial in \"x\""));
        }
    }
    for q in &parsed.qs {
        if q.var != "y" {
            return Err(bad_json("every q must be a polynomial in \"y\""));
        }
    }
    Ok(BiorthoSystem {
        ps: parsed.ps.into_iter().map(|p| LeftPoly::from_coeffs(p.coeffs)).collect(),
        qs: parsed
            .qs
            .into_iter()
            .map(|q| RightPoly::from_coeffs(q.coeffs))
            .collect(),
        normalization,
    })
}

// ---------------------------------------------------------------------------
// Banded matrices and reports (emit-only)
// ---------------------------------------------------------------------------

fn band_limit_to_value(l: BandLimit) -> Value {
    match l {
        BandLimit::NegInf => json!("-inf"),
        BandLimit::Fin(x) => json!(x),
        BandLimit::PosInf => json!("+inf"),
    }
}

pub fn banded_to_value<R>(m: &BandedMatrix<R>) -> Value
where
    R: DivisionRing + Serialize,
{
    let mut entries = Vec::new();
    for u in 0..m.trunc() {
        for v in 0..m.trunc() {
            if !m.get(u, v).is_zero() {
                entries.push(json!([
                    u,
                    v,
                    serde_json::to_value(m.get(u, v)).expect("scalar serialization cannot fail")
                ]));
            }
        }
    }
    json!({
        "ring": R::TAG.to_string(),
        "trunc": m.trunc(),
        "lo": band_limit_to_value(m.band().lo),
        "hi": band_limit_to_value(m.band().hi),
        "entries": entries,
    })
}

pub fn gram_report_to_value<R>(report: &GramReport<R>) -> Value
where
    R: DivisionRing + Serialize,
{
    json!({
        "normalization": report.normalization.to_string(),
        "pass": report.pass(),
        "gram": report
            .gram
            .iter()
            .map(|row| scalars_to_value(row))
            .collect::<Vec<_>>(),
        "violations": report
            .violations
            .iter()
            .map(|v| json!({
                "n": v.n,
                "m": v.m,
                "got": serde_json::to_value(&v.got).expect("scalar serialization cannot fail"),
                "expected": v.expected.to_string(),
            }))
            .collect::<Vec<_>>(),
    })
}

pub fn favard_report_to_value<R>(report: &FavardReport<R>) -> Value
where
    R: DivisionRing + Serialize,
{
    json!({
        "size": report.size,
        "pass": report.pass(),
        "violations": report
            .violations
            .iter()
            .map(|v| json!({
                "condition": v.condition.to_string(),
                "a": v.a,
                "b": v.b,
                "got": serde_json::to_value(&v.got).expect("scalar serialization cannot fail"),
            }))
            .collect::<Vec<_>>(),
    })
}

pub fn recurrence_report_to_value<R>(report: &RecurrenceReport<R>) -> Value
where
    R: DivisionRing + Serialize,
{
    json!({
        "pass": report.pass(),
        "kernel": {
            "r_range": report.kernel.r_range,
            "s_range": report.kernel.s_range,
            "pass": report.kernel.pass(),
            "violations": report.kernel.violations.iter().map(|v| json!({
                "r": v.r,
                "s": v.s,
                "lhs": serde_json::to_value(&v.lhs).expect("scalar serialization cannot fail"),
                "rhs": serde_json::to_value(&v.rhs).expect("scalar serialization cannot fail"),
            })).collect::<Vec<_>>(),
        },
        "gram_pass": report.gram_pass,
        "rank1_pass": report.rank1_violations.is_empty(),
        "rank1_violations": report.rank1_violations,
        "bands": {
            "a_certified": report.a_band.to_string(),
            "a_inferred": report.a_inferred.to_string(),
            "b_t_certified": report.b_t_band.to_string(),
            "b_t_inferred": report.b_t_inferred.to_string(),
        },
        "max_terms": report.max_terms,
        "rows": report.rows.iter().map(|r| json!({
            "k": r.k,
            "p_pass": r.p_pass,
            "q_pass": r.q_pass,
            "p_terms": r.p_terms,
            "q_terms": r.q_terms,
        })).collect::<Vec<_>>(),
    })
}
