//! JSON encodings. Integers travel as decimal strings; plain JSON numbers are
//! accepted on input.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use polyk0::algebra::{CommMonoid, Coords, FgAbelianGroup, IntMatrix, MonoidElement};
use polyk0::characters::SymmetricPolynomial;
use polyk0::k0::StableCatSpec;
use polyk0::monoid_ring::CoefficientRing;
use polyk0::polymap::{DegreeBound, Domain, Mahler, PolyMap};
use polyk0::simplicial::{ChainComplex, SimplicialModule};
use polyk0::{Error, Result};

fn bad(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {}, found {}", what, v))
}

pub fn int_to_json(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| bad("a decimal integer", v)),
        Value::Number(n) => n.to_string().parse().map_err(|_| bad("an integer", v)),
        _ => Err(bad("an integer", v)),
    }
}

pub fn usize_from_json(v: &Value) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| bad("a natural number", v))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field `{}`", key)))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(what, v))
}

pub fn coords_to_json(c: &[BigInt]) -> Value {
    Value::Array(c.iter().map(int_to_json).collect())
}

pub fn coords_from_json(v: &Value) -> Result<Coords> {
    array(v, "an array of integers")?.iter().map(int_from_json).collect()
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| coords_to_json(m.row(i))).collect())
}

/// Reads an array of rows. `cols` fixes the width when there are no rows.
pub fn matrix_from_json(v: &Value, cols: Option<usize>) -> Result<IntMatrix> {
    let rows: Vec<Vec<BigInt>> = array(v, "a matrix")?.iter().map(coords_from_json).collect::<Result<_>>()?;
    let width = rows.first().map(|r| r.len()).or(cols).unwrap_or(0);
    if let Some(c) = cols {
        if c != width {
            return Err(Error::Dimension(format!("matrix has {} columns, expected {}", width, c)));
        }
    }
    IntMatrix::from_rows(&rows, width)
}

/// `{"type":"free","rank":k}` or `{"type":"finite","table":[[...]]}`.
pub fn monoid_from_json(v: &Value, cap: usize) -> Result<CommMonoid> {
    match field(v, "type")?.as_str() {
        Some("free") => Ok(CommMonoid::free(usize_from_json(field(v, "rank")?)?)),
        Some("finite") => {
            let table = array(field(v, "table")?, "a table")?
                .iter()
                .map(|row| array(row, "a table row")?.iter().map(usize_from_json).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(CommMonoid::Finite(polyk0::algebra::FiniteMonoid::with_cap(table, cap)?))
        }
        _ => Err(bad("monoid type `free` or `finite`", v)),
    }
}

pub fn monoid_to_json(m: &CommMonoid) -> Value {
    match m {
        CommMonoid::Free { rank } => json!({"type": "free", "rank": rank}),
        CommMonoid::Finite(fm) => json!({"type": "finite", "table": fm.table()}),
    }
}

/// Free elements are arrays of naturals, finite ones are indices.
pub fn element_from_json(v: &Value) -> Result<MonoidElement> {
    match v {
        Value::Number(n) => n.as_u64().map(|x| MonoidElement::Finite(x as usize)).ok_or_else(|| bad("an element index", v)),
        Value::Array(a) => {
            a.iter().map(|x| x.as_u64().ok_or_else(|| bad("a natural number", x))).collect::<Result<_>>().map(MonoidElement::Free)
        }
        _ => Err(bad("a monoid element", v)),
    }
}

pub fn element_to_json(e: &MonoidElement) -> Value {
    match e {
        MonoidElement::Finite(i) => json!(i),
        MonoidElement::Free(v) => json!(v),
    }
}

pub fn group_to_json(g: &FgAbelianGroup) -> Value {
    json!({
        "free_rank": g.free_rank(),
        "torsion": g.torsion().iter().map(int_to_json).collect::<Vec<_>>(),
        "description": g.describe(),
    })
}

/// `{"free_rank":r,"torsion":[...]}` or a string such as `"Z^2 + Z/4"`.
pub fn group_from_json(v: &Value) -> Result<FgAbelianGroup> {
    if let Some(s) = v.as_str() {
        return parse_group(s);
    }
    let free = v.get("free_rank").map(usize_from_json).transpose()?.unwrap_or(0);
    let torsion = match v.get("torsion") {
        Some(t) => coords_from_json(t)?,
        None => Vec::new(),
    };
    FgAbelianGroup::from_invariants(free, torsion)
}

pub fn parse_group(s: &str) -> Result<FgAbelianGroup> {
    let s = s.trim();
    if s == "0" {
        return Ok(FgAbelianGroup::trivial());
    }
    let mut free = 0;
    let mut torsion = Vec::new();
    for part in s.split('+').map(str::trim) {
        if part == "Z" {
            free += 1;
        } else if let Some(r) = part.strip_prefix("Z^") {
            free += r.parse::<usize>().map_err(|_| Error::Parse(format!("bad group summand `{}`", part)))?;
        } else if let Some(n) = part.strip_prefix("Z/") {
            torsion.push(n.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad group summand `{}`", part)))?);
        } else {
            return Err(Error::Parse(format!("bad group summand `{}`", part)));
        }
    }
    FgAbelianGroup::from_invariants(free, torsion)
}

/// A monoid, or `{"type":"group",...}` for a finitely generated group.
pub fn domain_from_json(v: &Value, cap: usize) -> Result<Domain> {
    match field(v, "type")?.as_str() {
        Some("group") => Ok(Domain::Group(group_from_json(v)?)),
        _ => Ok(Domain::Monoid(monoid_from_json(v, cap)?)),
    }
}

pub fn domain_to_json(d: &Domain) -> Value {
    match d {
        Domain::Monoid(m) => monoid_to_json(m),
        Domain::Group(g) => {
            let mut o = group_to_json(g);
            o["type"] = json!("group");
            o
        }
    }
}

fn index_key(j: &[usize]) -> String {
    j.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn value_to_json(c: &Coords) -> Value {
    if c.len() == 1 {
        int_to_json(&c[0])
    } else {
        coords_to_json(c)
    }
}

fn value_from_json(v: &Value) -> Result<Coords> {
    match v {
        Value::Array(_) => coords_from_json(v),
        _ => Ok(vec![int_from_json(v)?]),
    }
}

pub fn mahler_to_json(m: &Mahler) -> Value {
    let mut o = Map::new();
    for (j, c) in m {
        o.insert(index_key(j), value_to_json(c));
    }
    Value::Object(o)
}

pub fn mahler_from_json(v: &Value) -> Result<Mahler> {
    let o = v.as_object().ok_or_else(|| bad("a Mahler table", v))?;
    let mut m = BTreeMap::new();
    for (k, c) in o {
        let j = if k.trim().is_empty() {
            Vec::new()
        } else {
            k.split(',').map(|x| x.trim().parse::<usize>()).collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Parse(format!("bad multi-index `{}`", k)))?
        };
        m.insert(j, value_from_json(c)?);
    }
    Ok(m)
}

/// `{"domain":…, "codomain":…, "degree":n, "mahler":{…}}`, with `"slices"`
/// for groups with torsion and `"values"` for finite monoids.
pub fn map_from_json(v: &Value, cap: usize) -> Result<PolyMap> {
    let domain = domain_from_json(field(v, "domain")?, cap)?;
    let codomain = match v.get("codomain") {
        Some(c) => group_from_json(c)?,
        None => FgAbelianGroup::integers(),
    };
    let degree = DegreeBound::from_i64(field(v, "degree")?.as_i64().ok_or_else(|| bad("an integer degree", v))?)?;
    if let Some(m) = v.get("mahler") {
        PolyMap::from_mahler(domain, codomain, degree, mahler_from_json(m)?)
    } else if let Some(s) = v.get("slices") {
        let slices = array(s, "a list of Mahler tables")?.iter().map(mahler_from_json).collect::<Result<_>>()?;
        PolyMap::from_slices(domain, codomain, degree, slices)
    } else if let Some(t) = v.get("values") {
        let values = array(t, "a list of values")?.iter().map(value_from_json).collect::<Result<_>>()?;
        PolyMap::from_table(domain, codomain, degree, values)
    } else {
        Err(Error::Parse("map needs `mahler`, `slices` or `values`".into()))
    }
}

pub fn map_to_json(f: &PolyMap) -> Value {
    let mut o = json!({
        "domain": domain_to_json(f.domain()),
        "codomain": group_to_json(f.codomain()),
        "degree": f.degree().as_i64(),
    });
    match f.mahler() {
        Some(m) => o["mahler"] = mahler_to_json(m),
        None => o["slices"] = Value::Array(f.slices().iter().map(mahler_to_json).collect()),
    }
    o
}

pub fn ring_from_json(v: &Value) -> Result<CoefficientRing> {
    match v.as_str().map(str::trim) {
        Some("Z") => Ok(CoefficientRing::Integers),
        Some(s) => match s.strip_prefix("Z/").or_else(|| s.strip_prefix("F_")).map(str::parse::<u64>) {
            Some(Ok(m)) => CoefficientRing::modulo(m),
            _ => Err(bad("`Z`, `Z/m` or `F_p`", v)),
        },
        None => Err(bad("a ring name", v)),
    }
}

/// `{"ring":"Z","ranks":[...],"differentials":[d₁, d₂, …]}`.
pub fn complex_from_json(v: &Value) -> Result<ChainComplex> {
    let ring = match v.get("ring") {
        Some(r) => ring_from_json(r)?,
        None => CoefficientRing::Integers,
    };
    let ranks: Vec<usize> = array(field(v, "ranks")?, "a list of ranks")?.iter().map(usize_from_json).collect::<Result<_>>()?;
    let diffs = array(field(v, "differentials")?, "a list of matrices")?
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let cols = ranks.get(k + 1).copied();
            let m = matrix_from_json(d, cols)?;
            if m.rows() == 0 {
                Ok(IntMatrix::zeros(ranks.get(k).copied().unwrap_or(0), cols.unwrap_or(0)))
            } else {
                Ok(m)
            }
        })
        .collect::<Result<_>>()?;
    ChainComplex::new(ring, ranks, diffs)
}

pub fn complex_to_json(c: &ChainComplex) -> Value {
    json!({
        "ring": c.ring().to_string(),
        "ranks": c.ranks(),
        "differentials": c.differentials().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

pub fn simplicial_to_json(x: &SimplicialModule) -> Value {
    let faces: Vec<Value> = (0..=x.top())
        .map(|k| Value::Array((0..if k == 0 { 0 } else { k + 1 }).map(|i| matrix_to_json(x.face(k, i))).collect()))
        .collect();
    let degeneracies: Vec<Value> =
        (0..x.top()).map(|k| Value::Array((0..=k).map(|j| matrix_to_json(x.degeneracy(k, j))).collect())).collect();
    json!({
        "ring": x.ring().to_string(),
        "ranks": x.ranks(),
        "faces": faces,
        "degeneracies": degeneracies,
        "degenerate_above": x.degenerate_above(),
    })
}

pub fn simplicial_from_json(v: &Value) -> Result<SimplicialModule> {
    let ring = ring_from_json(field(v, "ring")?)?;
    let ranks: Vec<usize> = array(field(v, "ranks")?, "a list of ranks")?.iter().map(usize_from_json).collect::<Result<_>>()?;
    let shaped = |m: &Value, rows: usize, cols: usize| -> Result<IntMatrix> {
        let m = matrix_from_json(m, if rows == 0 { None } else { Some(cols) })?;
        Ok(if rows == 0 { IntMatrix::zeros(0, cols) } else { m })
    };
    let faces = array(field(v, "faces")?, "faces")?
        .iter()
        .enumerate()
        .map(|(k, level)| {
            array(level, "faces of a level")?
                .iter()
                .map(|m| shaped(m, ranks[k.saturating_sub(1)], ranks[k]))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let degeneracies = array(field(v, "degeneracies")?, "degeneracies")?
        .iter()
        .enumerate()
        .map(|(k, level)| {
            array(level, "degeneracies of a level")?
                .iter()
                .map(|m| shaped(m, *ranks.get(k + 1).unwrap_or(&0), ranks[k]))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let attested = v.get("degenerate_above").and_then(Value::as_bool).unwrap_or(true);
    SimplicialModule::new(ring, ranks, faces, degeneracies, attested)
}

pub fn symmetric_to_json(s: &SymmetricPolynomial) -> Value {
    let terms: Vec<Value> = s
        .coefficients()
        .iter()
        .rev()
        .map(|(l, c)| json!({"partition": l, "coefficient": int_to_json(c)}))
        .collect();
    json!({"nvars": s.nvars(), "degree": s.degree(), "terms": terms, "display": s.to_string()})
}

/// `{"pi0": monoid, "cofiber": [[x', x, x''], ...]}`.
pub fn cat_spec_from_json(v: &Value, cap: usize) -> Result<StableCatSpec> {
    let pi0 = monoid_from_json(field(v, "pi0")?, cap)?;
    let mut spec = StableCatSpec::split(pi0);
    if let Some(rels) = v.get("cofiber") {
        spec.cofiber_rels = rels_from_json(rels)?;
    }
    spec.check()?;
    Ok(spec)
}

pub fn rels_from_json(v: &Value) -> Result<Vec<(MonoidElement, MonoidElement, MonoidElement)>> {
    array(v, "a list of cofiber triples")?
        .iter()
        .map(|t| match array(t, "a triple")?.as_slice() {
            [a, b, c] => Ok((element_from_json(a)?, element_from_json(b)?, element_from_json(c)?)),
            _ => Err(bad("a triple [x', x, x'']", t)),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_roundtrip_as_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(int_to_json(&big), json!("123456789012345678901234567890"));
        assert_eq!(int_from_json(&int_to_json(&big)).unwrap(), big);
        assert_eq!(int_from_json(&json!(-7)).unwrap(), BigInt::from(-7));
    }

    #[test]
    fn matrices_roundtrip() {
        let m = IntMatrix::from_i64(&[&[1, -2], &[0, 3]]);
        assert_eq!(matrix_from_json(&matrix_to_json(&m), Some(2)).unwrap(), m);
        assert_eq!(matrix_from_json(&json!([]), Some(3)).unwrap().shape(), (0, 3));
    }

    #[test]
    fn groups_parse() {
        assert_eq!(parse_group("Z^2 + Z/4").unwrap().describe(), "Z^2 + Z/4");
        assert!(parse_group("Q").is_err());
        assert_eq!(group_from_json(&json!({"free_rank": 1, "torsion": ["2"]})).unwrap().describe(), "Z + Z/2");
    }

    #[test]
    fn maps_roundtrip() {
        let f = PolyMap::binomial_map(Domain::naturals(), 2).unwrap();
        let g = map_from_json(&map_to_json(&f), 64).unwrap();
        assert!(g.agrees_with(&f).unwrap());
    }

    #[test]
    fn complexes_roundtrip() {
        let c = ChainComplex::two_term(CoefficientRing::Integers, IntMatrix::from_i64(&[&[2]])).unwrap();
        assert_eq!(complex_from_json(&complex_to_json(&c)).unwrap(), c);
        let x = polyk0::simplicial::cech_nerve(&IntMatrix::from_i64(&[&[1], &[0]]), CoefficientRing::Mod(2), 2).unwrap();
        assert_eq!(simplicial_from_json(&simplicial_to_json(&x)).unwrap(), x);
    }
}
