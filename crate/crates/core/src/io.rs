//! JSON graph files and ideal literals.
//!
//! Graph file:
//! `{"header":{"field":"Q"},"vertices":["v","w"],"edges":[{"src":"v","dst":"w","mult":1}]}`
//! with `"field":"Fp","p":5` for prime fields and `"mult":"omega"` for
//! infinitely many parallel edges.
//!
//! Ideal literal:
//! `{"H":["w"],"S":[],"components":[{"cycle":["v"],"poly":"1+x"}]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph, Multiplicity};
use crate::ideals::IdealRep;
use crate::lattice::AdmissiblePair;
use crate::laurent::{FieldTag, LaurentPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Header {
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MultSpec {
    Count(u64),
    Named(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub src: String,
    pub dst: String,
    pub mult: MultSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub header: Header,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeEntry>,
}

impl Header {
    pub fn field(&self) -> Result<FieldTag> {
        match (self.field.as_str(), self.p) {
            ("Q", None) => Ok(FieldTag::Rationals),
            ("Fp", Some(p)) => FieldTag::prime(p),
            ("Fp", None) => Err(Error::Parse("field Fp needs a modulus `p`".into())),
            ("Q", Some(_)) => Err(Error::Parse("field Q takes no modulus".into())),
            (other, _) => Err(Error::Parse(format!("unknown field `{other}`"))),
        }
    }

    pub fn for_field(field: FieldTag) -> Header {
        match field {
            FieldTag::Rationals => Header { field: "Q".into(), p: None },
            FieldTag::Prime(p) => Header { field: "Fp".into(), p: Some(p) },
        }
    }
}

impl MultSpec {
    fn multiplicity(&self) -> Result<Multiplicity> {
        match self {
            MultSpec::Count(n) => Ok(Multiplicity::Finite(*n)),
            MultSpec::Named(s) if s == "omega" || s == "ω" => Ok(Multiplicity::Omega),
            MultSpec::Named(s) => Err(Error::Parse(format!("bad multiplicity `{s}`"))),
        }
    }
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<GraphFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The graph and its field, `field_override` replacing the header.
    pub fn build(&self, field_override: Option<FieldTag>) -> Result<(Graph, FieldTag)> {
        let field = match field_override {
            Some(f) => f,
            None => self.header.field()?,
        };
        let edges = self
            .edges
            .iter()
            .map(|e| Ok((e.src.as_str(), e.dst.as_str(), e.mult.multiplicity()?)))
            .collect::<Result<Vec<_>>>()?;
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        Ok((Graph::new(&vertices, &edges)?, field))
    }

    pub fn from_graph(g: &Graph, field: FieldTag) -> GraphFile {
        GraphFile {
            header: Header::for_field(field),
            vertices: g.names().to_vec(),
            edges: g
                .bundles()
                .iter()
                .map(|(&(s, t), &m)| EdgeEntry {
                    src: g.name(s).to_string(),
                    dst: g.name(t).to_string(),
                    mult: match m {
                        Multiplicity::Finite(n) => MultSpec::Count(n),
                        Multiplicity::Omega => MultSpec::Named("omega".into()),
                    },
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph files serialize")
    }
}

pub fn load_graph(text: &str, field_override: Option<FieldTag>) -> Result<(Graph, FieldTag)> {
    GraphFile::parse(text)?.build(field_override)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentLiteral {
    pub cycle: Vec<String>,
    pub poly: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealLiteral {
    #[serde(rename = "H")]
    pub h: Vec<String>,
    #[serde(rename = "S", default)]
    pub s: Vec<String>,
    #[serde(default)]
    pub components: Vec<ComponentLiteral>,
}

impl IdealLiteral {
    pub fn parse(text: &str) -> Result<IdealLiteral> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(&self, g: &Graph, field: FieldTag) -> Result<IdealRep> {
        let pair = AdmissiblePair::new(g, g.vertex_set(&self.h)?, g.vertex_set(&self.s)?)?;
        let comps = self
            .components
            .iter()
            .map(|c| {
                let vertices = c.cycle.iter().map(|v| g.vertex(v)).collect::<Result<Vec<_>>>()?;
                Ok((Cycle::through(g, &vertices)?, LaurentPoly::parse(field, &c.poly)?))
            })
            .collect::<Result<Vec<_>>>()?;
        IdealRep::make(g, pair, comps)
    }

    /// Canonical literal: sorted vertex names, cycles from their least
    /// vertex, components in cycle order.
    pub fn of(g: &Graph, ideal: &IdealRep) -> IdealLiteral {
        let pair = ideal.graded_part();
        IdealLiteral {
            h: g.set_names(pair.h),
            s: g.set_names(pair.s),
            components: ideal
                .components()
                .iter()
                .map(|(c, p)| ComponentLiteral {
                    cycle: c.vertices().map(|v| g.name(v).to_string()).collect(),
                    poly: p.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal literals serialize")
    }
}

pub fn parse_ideal(g: &Graph, field: FieldTag, text: &str) -> Result<IdealRep> {
    IdealLiteral::parse(text)?.build(g, field)
}

pub fn emit_ideal(g: &Graph, ideal: &IdealRep) -> String {
    IdealLiteral::of(g, ideal).to_json()
}
