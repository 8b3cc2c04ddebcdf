//! JSON input schemas and their conversion into core types.

use std::collections::HashMap;

use arithmat::arith::Layers;
use arithmat::exact_lattice::Presentation;
use arithmat::{
    Error, FgAbGroup, FinitePoset, IntMatrix, LocallyRankedTriple, PeriodicArrangement, QuotientData, SquareDiagram,
    Subset,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralEntry {
    pub set: Vec<String>,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerElement {
    pub id: String,
    pub rank: usize,
    pub support: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaEntry {
    pub set: Vec<String>,
    pub layer: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayersJson {
    pub elements: Vec<LayerElement>,
    pub covers: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub kappa: Vec<KappaEntry>,
}

/// Semimatroid, or quotient data when every central entry carries `mult`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemimatroidJson {
    pub ground: Vec<String>,
    pub central: Vec<CentralEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub layers: Option<LayersJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetElement {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<PosetElement>,
    pub covers: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementJson {
    pub d: usize,
    pub columns: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offsets: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub free: usize,
    #[serde(default)]
    pub torsion: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapJson {
    Matrix(Vec<Vec<i64>>),
    Unknown(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub tl: GroupJson,
    pub tr: GroupJson,
    pub bl: GroupJson,
    pub br: GroupJson,
    pub top: MapJson,
    pub left: MapJson,
    pub right: MapJson,
    pub bottom: MapJson,
}

pub enum Input {
    Semimatroid(SemimatroidJson),
    Quotient(SemimatroidJson),
    Poset(PosetJson),
    Arrangement(ArrangementJson),
    Diagram(DiagramJson),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Semimatroid(_) => "semimatroid",
            Input::Quotient(_) => "quotient",
            Input::Poset(_) => "poset",
            Input::Arrangement(_) => "arrangement",
            Input::Diagram(_) => "diagram",
        }
    }
}

fn syntax(e: serde_json::Error) -> String {
    format!("malformed JSON at line {}, column {}: {e}", e.line(), e.column())
}

/// Parses `text` and picks the schema from the top-level keys.
pub fn parse(text: &str) -> Result<Input, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(syntax)?;
    let obj = value.as_object().ok_or("input must be a JSON object")?;
    // typed re-parse of the same text so schema errors keep their position
    if obj.contains_key("columns") {
        serde_json::from_str(text).map(Input::Arrangement).map_err(syntax)
    } else if obj.contains_key("tl") {
        serde_json::from_str(text).map(Input::Diagram).map_err(syntax)
    } else if obj.contains_key("ground") {
        let s: SemimatroidJson = serde_json::from_str(text).map_err(syntax)?;
        let with_mult = s.central.iter().filter(|c| c.mult.is_some()).count();
        if with_mult == 0 && s.layers.is_none() {
            Ok(Input::Semimatroid(s))
        } else if with_mult == s.central.len() {
            Ok(Input::Quotient(s))
        } else {
            Err("either every central entry or none carries \"mult\"".into())
        }
    } else if obj.contains_key("elements") {
        serde_json::from_str(text).map(Input::Poset).map_err(syntax)
    } else {
        Err("unrecognized input: expected a semimatroid, quotient, poset, arrangement or diagram".into())
    }
}

pub fn check_ground_cap(n: usize, cap: usize) -> Result<(), String> {
    if n > cap {
        return Err(format!("ground set has {n} elements, above the cap of {cap} (TT_MAX_GROUND)"));
    }
    Ok(())
}

fn subset(t: &LocallyRankedTriple, set: &[String]) -> Result<Subset, Error> {
    t.subset_of(set)
}

pub fn triple(s: &SemimatroidJson) -> Result<LocallyRankedTriple, Error> {
    let probe = LocallyRankedTriple::matroid(s.ground.clone(), |_| 0)?;
    let central: Vec<(Subset, usize)> = s
        .central
        .iter()
        .map(|c| Ok((subset(&probe, &c.set)?, c.rank)))
        .collect::<Result<_, Error>>()?;
    LocallyRankedTriple::new(s.ground.clone(), &central)
}

pub fn poset_from(
    ids: &[String],
    ranks: Option<Vec<usize>>,
    covers: &[[String; 2]],
) -> Result<FinitePoset, Error> {
    let index: HashMap<&str, usize> = ids.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    if index.len() != ids.len() {
        return Err(Error::InvalidInput("duplicate element id".into()));
    }
    let lookup = |s: &str| {
        index
            .get(s)
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("unknown element {s:?} in covers")))
    };
    let rel: Vec<(usize, usize)> = covers
        .iter()
        .map(|[a, b]| Ok((lookup(a)?, lookup(b)?)))
        .collect::<Result<_, Error>>()?;
    FinitePoset::from_relations(ids.to_vec(), &rel, ranks)
}

pub fn poset(p: &PosetJson) -> Result<FinitePoset, Error> {
    let ids: Vec<String> = p.elements.iter().map(|e| e.id.clone()).collect();
    let ranks: Option<Vec<usize>> = p.elements.iter().map(|e| e.rank).collect();
    poset_from(&ids, ranks, &p.covers)
}

pub fn quotient(s: &SemimatroidJson) -> Result<QuotientData, Error> {
    let t = triple(s)?;
    let mult: Vec<(Subset, BigInt)> = s
        .central
        .iter()
        .map(|c| Ok((subset(&t, &c.set)?, BigInt::from(c.mult.unwrap_or(1)))))
        .collect::<Result<_, Error>>()?;
    let q = QuotientData::new(t.clone(), &mult)?;
    let Some(l) = &s.layers else { return Ok(q) };
    let ids: Vec<String> = l.elements.iter().map(|e| e.id.clone()).collect();
    let poset = poset_from(&ids, Some(l.elements.iter().map(|e| e.rank).collect()), &l.covers)?;
    let support = l
        .elements
        .iter()
        .map(|e| subset(&t, &e.support))
        .collect::<Result<Vec<_>, Error>>()?;
    let mut kappa: HashMap<Subset, Vec<usize>> = HashMap::new();
    for k in &l.kappa {
        let layer = poset
            .index_of(&k.layer)
            .ok_or_else(|| Error::InvalidInput(format!("kappa names unknown layer {:?}", k.layer)))?;
        kappa.entry(subset(&t, &k.set)?).or_default().push(layer);
    }
    q.with_layers(Layers { poset, support, kappa })
}

pub fn arrangement(a: &ArrangementJson) -> Result<PeriodicArrangement, Error> {
    let m = arrangement_matrix(a)?;
    let offsets = match &a.offsets {
        None => None,
        Some(os) => Some(
            os.iter()
                .map(|o| {
                    o.trim()
                        .parse::<BigRational>()
                        .map_err(|_| Error::InvalidInput(format!("offset {o:?} is not a rational p/q")))
                })
                .collect::<Result<Vec<_>, Error>>()?,
        ),
    };
    PeriodicArrangement::new(m, offsets)
}

/// The `d × n` matrix whose columns are the given normal vectors.
pub fn arrangement_matrix(a: &ArrangementJson) -> Result<IntMatrix, Error> {
    if let Some(c) = a.columns.iter().find(|c| c.len() != a.d) {
        return Err(Error::DimensionMismatch {
            expected: a.d,
            found: c.len(),
        });
    }
    let cols: Vec<Vec<BigInt>> = a.columns.iter().map(|c| c.iter().map(|&v| BigInt::from(v)).collect()).collect();
    Ok(IntMatrix::from_columns(a.d, &cols))
}

fn group(g: &GroupJson) -> FgAbGroup {
    FgAbGroup::new(g.free, g.torsion.iter().map(|&t| BigInt::from(t)).collect())
}

fn map(m: &MapJson, source: &Presentation, target: &Presentation, name: &str) -> Result<Option<IntMatrix>, Error> {
    match m {
        MapJson::Unknown(s) if s == "unknown" => Ok(None),
        MapJson::Unknown(s) => Err(Error::InvalidInput(format!("map {name}: expected a matrix or \"unknown\", got {s:?}"))),
        MapJson::Matrix(rows) => {
            if rows.len() != target.gens() || rows.iter().any(|r| r.len() != source.gens()) {
                return Err(Error::InvalidInput(format!(
                    "map {name} needs a {} x {} matrix of generator images",
                    target.gens(),
                    source.gens()
                )));
            }
            if rows.is_empty() {
                return Ok(Some(IntMatrix::zeros(0, source.gens())));
            }
            Ok(Some(IntMatrix::from_rows(rows)))
        }
    }
}

/// Groups use their standard presentation: free generators first, then one
/// generator per invariant factor.
pub fn diagram(d: &DiagramJson) -> Result<SquareDiagram, Error> {
    let [tl, tr, bl, br] = [&d.tl, &d.tr, &d.bl, &d.br].map(group);
    let mut sq = SquareDiagram::from_groups([&tl, &tr, &bl, &br], [None, None, None, None]);
    sq.top = map(&d.top, &sq.tl, &sq.tr, "top")?;
    sq.left = map(&d.left, &sq.tl, &sq.bl, "left")?;
    sq.right = map(&d.right, &sq.tr, &sq.br, "right")?;
    sq.bottom = map(&d.bottom, &sq.bl, &sq.br, "bottom")?;
    Ok(sq)
}
