//! JSON formats for structures, points, geodesics and reports.
//!
//! Structures: `{"kind":"poset","elements":[..],"covers":[["0","a"],..]}`,
//! `{"kind":"graph","vertices":[..],"edges":[..]}` and
//! `{"kind":"pip","vertices":[..],"edges":[..],"order":[["u","v"],..]}`.
//! Points: `{"coeffs":{"a":"3/10",..}}` or `{"b_coords":{"b1":"1",..}}`.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::geodesic::Geodesic;
use crate::metric::{from_bcoords, to_bcoords, BPoint, ChainPoint, IdealCoding, PolyPath};
use crate::poset::{boolean_gated_sets, Birkhoff, GradedPoset, IdealLattice, Pip};
use crate::rational::{format_q, parse_q, to_f64, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Poset,
    Graph,
    Pip,
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "poset" => Ok(Kind::Poset),
            "graph" => Ok(Kind::Graph),
            "pip" => Ok(Kind::Pip),
            other => Err(Error::InvalidInput(format!(
                "unknown structure kind `{other}`"
            ))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Poset => "poset",
            Kind::Graph => "graph",
            Kind::Pip => "pip",
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStructure {
    kind: Option<String>,
    elements: Option<Vec<String>>,
    covers: Option<Vec<(String, String)>>,
    vertices: Option<Vec<String>>,
    edges: Option<Vec<(String, String)>>,
    order: Option<Vec<(String, String)>>,
}

/// b-coordinates available on a host.
#[derive(Clone, Debug)]
pub enum Coding {
    /// The host is the stable-ideal lattice of this PIP.
    Ideals(Pip, IdealLattice),
    /// The host is a median semilattice with this representation.
    Birkhoff(Birkhoff),
}

impl IdealCoding for Coding {
    fn pip(&self) -> &Pip {
        match self {
            Coding::Ideals(p, _) => p,
            Coding::Birkhoff(b) => &b.pip,
        }
    }
    fn ideal(&self, elem: usize) -> Option<&FixedBitSet> {
        match self {
            Coding::Ideals(_, l) => l.ideals.get(elem),
            Coding::Birkhoff(b) => b.ideal_of.get(&elem),
        }
    }
    fn elem(&self, ideal: &FixedBitSet) -> Option<usize> {
        match self {
            Coding::Ideals(_, l) => l.element_of(ideal),
            Coding::Birkhoff(b) => b.element_of(ideal),
        }
    }
}

/// A loaded structure: the poset whose orthoscheme complex is the space,
/// plus b-coordinates when the poset is median.
#[derive(Clone, Debug)]
pub struct Host {
    pub kind: Kind,
    pub poset: GradedPoset,
    pub coding: Option<Coding>,
}

impl Host {
    pub fn from_poset(kind: Kind, poset: GradedPoset) -> Self {
        let coding = if poset.classification().median {
            Birkhoff::of_poset(&poset).ok().map(Coding::Birkhoff)
        } else {
            None
        };
        Self {
            kind,
            poset,
            coding,
        }
    }

    pub fn from_pip(pip: Pip) -> Result<Self> {
        let lattice = pip.stable_ideals()?;
        Ok(Self {
            kind: Kind::Pip,
            poset: lattice.poset.clone(),
            coding: Some(Coding::Ideals(pip, lattice)),
        })
    }

    pub fn pip(&self) -> Option<&Pip> {
        self.coding.as_ref().map(IdealCoding::pip)
    }
}

fn need<T>(v: Option<T>, field: &str, kind: Kind) -> Result<T> {
    v.ok_or_else(|| Error::InvalidInput(format!("{kind} structure needs `{field}`")))
}

/// Parses a structure; `force` overrides the `kind` field.
pub fn parse_host(text: &str, force: Option<Kind>) -> Result<Host> {
    let raw: RawStructure = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("structure JSON: {e}")))?;
    let kind = match (force, &raw.kind) {
        (Some(k), _) => k,
        (None, Some(s)) => s.parse()?,
        (None, None) => {
            return Err(Error::InvalidInput(
                "structure has no `kind`; use --as".into(),
            ))
        }
    };
    match kind {
        Kind::Poset => {
            let elements = need(raw.elements, "elements", kind)?;
            let covers = raw.covers.unwrap_or_default();
            Ok(Host::from_poset(
                kind,
                GradedPoset::new(&elements, &covers)?,
            ))
        }
        Kind::Graph => {
            let vertices = need(raw.vertices, "vertices", kind)?;
            let edges = raw.edges.unwrap_or_default();
            Ok(Host::from_poset(
                kind,
                boolean_gated_sets(&vertices, &edges)?,
            ))
        }
        Kind::Pip => {
            let vertices = need(raw.vertices, "vertices", kind)?;
            let edges = raw.edges.unwrap_or_default();
            let order = raw.order.unwrap_or_default();
            Host::from_pip(Pip::new(&vertices, &edges, &order)?)
        }
    }
}

/// A rational from a `"num/den"` or decimal string, or a JSON integer.
pub fn json_rational(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => parse_q(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_q(&n.to_string()),
        other => Err(Error::InvalidInput(format!(
            "expected a rational as a string or an integer, got {other}"
        ))),
    }
}

fn rational_map(v: &Value, what: &str) -> Result<Vec<(String, Q)>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput(format!("`{what}` must be an object")))?;
    obj.iter()
        .map(|(k, v)| Ok((k.clone(), json_rational(v)?)))
        .collect()
}

/// Parses a point in either coefficient or b-coordinate form.
pub fn parse_point(host: &Host, text: &str) -> Result<ChainPoint> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("point JSON: {e}")))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput("point must be a JSON object".into()))?;
    match (obj.get("coeffs"), obj.get("b_coords")) {
        (Some(c), None) => {
            let pairs = rational_map(c, "coeffs")?;
            let coeffs = pairs
                .into_iter()
                .map(|(k, q)| Ok((host.poset.index_of(&k)?, q)))
                .collect::<Result<Vec<_>>>()?;
            let p = ChainPoint::new(coeffs)?;
            p.check(&host.poset)?;
            Ok(p)
        }
        (None, Some(b)) => {
            let coding = host
                .coding
                .as_ref()
                .ok_or_else(|| Error::InvalidInput("b_coords need a PIP or median host".into()))?;
            let pairs = rational_map(b, "b_coords")?;
            let bp = BPoint::from_pairs(coding.pip(), &pairs)?;
            bp.check(coding.pip())?;
            from_bcoords(coding, &bp)
        }
        _ => Err(Error::InvalidInput(
            "point needs exactly one of `coeffs` and `b_coords`".into(),
        )),
    }
}

/// `x` rounded to 12 significant digits.
pub fn float12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn float_json(x: f64) -> Value {
    serde_json::Number::from_f64(float12(x)).map_or(Value::Null, Value::Number)
}

fn bcoords_json(host: &Host, p: &ChainPoint) -> Option<Value> {
    let coding = host.coding.as_ref()?;
    let b = to_bcoords(coding, &host.poset, p).ok()?;
    let pip = coding.pip();
    let mut m = Map::new();
    for v in 0..pip.len() {
        if !num_traits::Zero::is_zero(b.get(v)) {
            m.insert(pip.name(v).to_string(), Value::String(format_q(b.get(v))));
        }
    }
    Some(Value::Object(m))
}

pub fn point_json(host: &Host, p: &ChainPoint) -> Value {
    let mut coeffs = Map::new();
    for (u, c) in p.iter() {
        coeffs.insert(host.poset.name(u).to_string(), Value::String(format_q(c)));
    }
    let mut out = Map::new();
    out.insert("coeffs".into(), Value::Object(coeffs));
    if let Some(b) = bcoords_json(host, p) {
        out.insert("b_coords".into(), b);
    }
    Value::Object(out)
}

pub fn path_json(host: &Host, path: &PolyPath<ChainPoint>) -> Value {
    Value::Array(
        path.breakpoints()
            .iter()
            .map(|bp| json!({"t": format_q(&bp.t), "point": point_json(host, &bp.point)}))
            .collect(),
    )
}

pub fn geodesic_json(host: &Host, g: &Geodesic) -> Value {
    let arch = g.arch.as_ref().map(|a| {
        a.iter()
            .map(|&u| Value::String(host.poset.name(u).to_string()))
            .collect::<Vec<_>>()
    });
    json!({
        "length": float_json(g.length),
        "length2": g.length2.to_string(),
        "breakpoints": path_json(host, &g.path),
        "arch": arch,
        "case": g.case.to_string(),
    })
}

/// Reads the breakpoints of a geodesic JSON document back into a path.
pub fn parse_path(host: &Host, v: &Value) -> Result<PolyPath<ChainPoint>> {
    let bad = |m: &str| Error::InvalidInput(format!("path JSON: {m}"));
    let bps = v
        .get("breakpoints")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing `breakpoints`"))?;
    let mut out = Vec::with_capacity(bps.len());
    for bp in bps {
        let t = json_rational(bp.get("t").ok_or_else(|| bad("missing `t`"))?)?;
        let point = bp.get("point").ok_or_else(|| bad("missing `point`"))?;
        let coeffs = point.get("coeffs").ok_or_else(|| bad("missing `coeffs`"))?;
        let text = json!({ "coeffs": coeffs }).to_string();
        out.push(crate::metric::Breakpoint {
            t,
            point: parse_point(host, &text)?,
        });
    }
    PolyPath::new(out)
}

/// CSV of `k` evenly spaced points of a path: the time, then every element
/// coefficient, then b-coordinates when the host has them.
pub fn samples_csv(host: &Host, path: &PolyPath<ChainPoint>, k: usize) -> String {
    let poset = &host.poset;
    let mut header: Vec<String> = vec!["t".into()];
    header.extend(poset.names().iter().cloned());
    let pip = host.pip();
    if let Some(pip) = pip {
        header.extend(pip.names().iter().map(|v| format!("b:{v}")));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("writing to memory");
    for (t, p) in path.samples(k, poset) {
        let mut row = vec![format_q(&t)];
        row.extend((0..poset.len()).map(|u| fmt12(to_f64(&p.coeff(u)))));
        if let (Some(coding), Some(pip)) = (host.coding.as_ref(), pip) {
            match to_bcoords(coding, poset, &p) {
                Ok(b) => row.extend((0..pip.len()).map(|v| fmt12(to_f64(b.get(v))))),
                Err(_) => row.extend((0..pip.len()).map(|_| String::new())),
            }
        }
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("CSV of UTF-8 fields")
}

fn fmt12(x: f64) -> String {
    let v = float12(x);
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{v:.1}")
    } else {
        format!("{v}")
    }
}

pub fn poset_json(poset: &GradedPoset) -> Value {
    let covers: Vec<Value> = poset
        .covers()
        .map(|(a, b)| json!([poset.name(a), poset.name(b)]))
        .collect();
    json!({"kind": "poset", "elements": poset.names(), "covers": covers})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::geodesic;
    use crate::metric::path_length;

    const QUADRANT: &str =
        r#"{"kind":"pip","vertices":["b1","b2","c1","c2"],"edges":[["b1","c2"],["b2","c1"]]}"#;

    #[test]
    fn quadrant_round_trip() {
        let host = parse_host(QUADRANT, None).unwrap();
        let x = parse_point(&host, r#"{"b_coords":{"b1":"1","b2":"2/5"}}"#).unwrap();
        let y = parse_point(&host, r#"{"b_coords":{"c1":"0.5","c2":1}}"#).unwrap();
        let g = geodesic(&host.poset, &x, &y).unwrap();
        let v = geodesic_json(&host, &g);
        assert_eq!(v["length"].as_f64().unwrap(), 2.19317121995);
        assert_eq!(v["breakpoints"][1]["t"], "4/9");
        assert_eq!(v["arch"], json!(["{b1,b2}", "{b1,c1}", "{c1,c2}"]));
        assert_eq!(v["case"], "P2");
        let back = parse_path(&host, &serde_json::from_str(&v.to_string()).unwrap()).unwrap();
        assert!((path_length(&host.poset, &back).unwrap() - g.length).abs() < 1e-10);
        let csv = samples_csv(&host, &g.path, 3);
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.lines().next().unwrap().ends_with("b:b1,b:b2,b:c1,b:c2"));
    }

    #[test]
    fn kinds_and_errors() {
        let m3 = r#"{"kind":"poset","elements":["0","a","b","c","1"],
            "covers":[["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]}"#;
        let host = parse_host(m3, None).unwrap();
        assert!(host.coding.is_none());
        assert!(parse_point(&host, r#"{"b_coords":{"a":"1"}}"#).is_err());
        assert!(parse_point(&host, r#"{"coeffs":{"a":0.5}}"#).is_err());
        let p = parse_point(&host, r#"{"coeffs":{"a":"1/2","1":"1/2"}}"#).unwrap();
        assert_eq!(
            point_json(&host, &p),
            json!({"coeffs": {"1": "1/2", "a": "1/2"}})
        );
        let g = parse_host(
            r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#,
            Some(Kind::Graph),
        )
        .unwrap();
        assert_eq!(g.poset.len(), 5);
        assert!(matches!(
            parse_host(r#"{"elements":[]}"#, None),
            Err(Error::InvalidInput(_))
        ));
        assert_eq!(float12(2.0f64.sqrt()), 1.41421356237);
    }
}
