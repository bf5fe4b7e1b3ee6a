//! JSON interchange formats.
//!
//! A cycle is written as
//! `{"variety": {"factors": [n1, ...]}, "terms": [{"exps": [e1, ...], "coeff": "p/q"}]}`
//! with terms in lexicographic order of `exps` and coefficients in lowest
//! terms (integers are written without a denominator). The compact form
//! produced by [`Interchange::to_json_string`] is canonical.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::calculus::GradedCorrespondence;
use crate::classes::BundleClass;
use crate::error::{Error, Result};
use crate::kshadow::{KClass, KKernel};
use crate::motive::{motive_of, Motive, OrbitMorphism};
use crate::rational::{format_rational, parse_rational};
use crate::ring::{make_variety, Cycle, Variety};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietyJson {
    pub factors: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleJson {
    pub variety: VarietyJson,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorrespondenceJson {
    pub source: VarietyJson,
    pub target: VarietyJson,
    pub cycle: CycleJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleJson {
    pub variety: VarietyJson,
    pub rank: i64,
    pub total_chern: CycleJson,
    #[serde(default, rename = "virtual", skip_serializing_if = "std::ops::Not::not")]
    pub is_virtual: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KClassJson {
    pub variety: VarietyJson,
    pub ch: CycleJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KKernelJson {
    pub source: VarietyJson,
    pub target: VarietyJson,
    pub ch: CycleJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MotiveJson {
    pub variety: VarietyJson,
    pub twist: i64,
    pub idempotent: CycleJson,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitMorphismJson {
    #[serde(default)]
    pub source: Option<MotiveJson>,
    #[serde(default)]
    pub target: Option<MotiveJson>,
    pub components: BTreeMap<String, CorrespondenceJson>,
}

// Components are written in numeric order of their index.
struct OrbitOut<'a> {
    source: MotiveJson,
    target: MotiveJson,
    components: Vec<(i64, CorrespondenceJson)>,
    _marker: std::marker::PhantomData<&'a ()>,
}

struct ComponentsOut<'a>(&'a [(i64, CorrespondenceJson)]);

impl Serialize for ComponentsOut<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (i, c) in self.0 {
            map.serialize_entry(&i.to_string(), c)?;
        }
        map.end()
    }
}

impl Serialize for OrbitOut<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("source", &self.source)?;
        map.serialize_entry("target", &self.target)?;
        map.serialize_entry("components", &ComponentsOut(&self.components))?;
        map.end()
    }
}

/// Conversion to and from the JSON interchange format.
pub trait Interchange: Sized {
    fn to_value(&self) -> Value;
    fn from_value(v: Value) -> Result<Self>;

    fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_value()).expect("serializable")
    }

    fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("serializable")
    }

    fn from_json_str(s: &str) -> Result<Self> {
        Self::from_value(parse_value(s)?)
    }
}

/// Parses JSON text, reporting syntax errors with their location.
pub fn parse_value(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| {
        Error::Parse(format!(
            "line {} column {}: {}",
            e.line(),
            e.column(),
            e
        ))
    })
}

fn decode<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

fn encode<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

pub fn variety_json(v: &Variety) -> VarietyJson {
    VarietyJson {
        factors: v.factors().iter().map(|&n| n as i64).collect(),
    }
}

pub fn variety_from(j: &VarietyJson) -> Result<Variety> {
    make_variety(&j.factors)
}

pub fn cycle_json(c: &Cycle) -> CycleJson {
    CycleJson {
        variety: variety_json(c.variety()),
        terms: c
            .terms()
            .map(|(e, q)| TermJson {
                exps: e.clone(),
                coeff: format_rational(q),
            })
            .collect(),
    }
}

pub fn cycle_from(j: &CycleJson) -> Result<Cycle> {
    let v = variety_from(&j.variety)?;
    let terms = j
        .terms
        .iter()
        .map(|t| Ok((t.exps.clone(), parse_rational(&t.coeff)?)))
        .collect::<Result<Vec<_>>>()?;
    Cycle::from_terms(&v, terms)
}

fn correspondence_json(c: &GradedCorrespondence) -> CorrespondenceJson {
    CorrespondenceJson {
        source: variety_json(c.source()),
        target: variety_json(c.target()),
        cycle: cycle_json(c.cycle()),
    }
}

fn correspondence_from(j: &CorrespondenceJson) -> Result<GradedCorrespondence> {
    GradedCorrespondence::new(
        &variety_from(&j.source)?,
        &variety_from(&j.target)?,
        cycle_from(&j.cycle)?,
    )
}

fn motive_json(m: &Motive) -> MotiveJson {
    MotiveJson {
        variety: variety_json(m.variety()),
        twist: m.twist(),
        idempotent: cycle_json(m.idempotent().cycle()),
    }
}

fn motive_from(j: &MotiveJson) -> Result<Motive> {
    Motive::from_cycle(&variety_from(&j.variety)?, j.twist, cycle_from(&j.idempotent)?)
}

impl Interchange for Variety {
    fn to_value(&self) -> Value {
        encode(&variety_json(self))
    }
    fn from_value(v: Value) -> Result<Self> {
        variety_from(&decode(v)?)
    }
}

impl Interchange for Cycle {
    fn to_value(&self) -> Value {
        encode(&cycle_json(self))
    }
    fn from_value(v: Value) -> Result<Self> {
        cycle_from(&decode(v)?)
    }
}

impl Interchange for GradedCorrespondence {
    fn to_value(&self) -> Value {
        encode(&correspondence_json(self))
    }
    fn from_value(v: Value) -> Result<Self> {
        correspondence_from(&decode(v)?)
    }
}

impl Interchange for BundleClass {
    fn to_value(&self) -> Value {
        encode(&BundleJson {
            variety: variety_json(self.variety()),
            rank: self.rank(),
            total_chern: cycle_json(self.total_chern()),
            is_virtual: self.is_virtual(),
        })
    }
    fn from_value(v: Value) -> Result<Self> {
        let j: BundleJson = decode(v)?;
        let var = variety_from(&j.variety)?;
        let c = cycle_from(&j.total_chern)?;
        if j.is_virtual {
            BundleClass::virtual_class(&var, j.rank, c)
        } else {
            BundleClass::new(&var, j.rank, c)
        }
    }
}

impl Interchange for KClass {
    fn to_value(&self) -> Value {
        encode(&KClassJson {
            variety: variety_json(self.variety()),
            ch: cycle_json(self.ch()),
        })
    }
    fn from_value(v: Value) -> Result<Self> {
        let j: KClassJson = decode(v)?;
        let ch = cycle_from(&j.ch)?;
        let var = variety_from(&j.variety)?;
        if ch.variety() != &var {
            return Err(Error::VarietyMismatch {
                expected: var,
                found: ch.variety().clone(),
            });
        }
        Ok(KClass::from_ch(ch))
    }
}

impl Interchange for KKernel {
    fn to_value(&self) -> Value {
        encode(&KKernelJson {
            source: variety_json(self.source()),
            target: variety_json(self.target()),
            ch: cycle_json(self.ch()),
        })
    }
    fn from_value(v: Value) -> Result<Self> {
        let j: KKernelJson = decode(v)?;
        KKernel::new(
            &variety_from(&j.source)?,
            &variety_from(&j.target)?,
            KClass::from_ch(cycle_from(&j.ch)?),
        )
    }
}

impl Interchange for Motive {
    fn to_value(&self) -> Value {
        encode(&motive_json(self))
    }
    fn from_value(v: Value) -> Result<Self> {
        motive_from(&decode(v)?)
    }
}

impl Interchange for OrbitMorphism {
    fn to_value(&self) -> Value {
        encode(&OrbitOut {
            source: motive_json(self.source()),
            target: motive_json(self.target()),
            components: self
                .components()
                .iter()
                .map(|(i, c)| (*i, correspondence_json(c)))
                .collect(),
            _marker: std::marker::PhantomData,
        })
    }

    /// Missing `source`/`target` default to the motives of the component varieties.
    fn from_value(v: Value) -> Result<Self> {
        let j: OrbitMorphismJson = decode(v)?;
        let mut components = BTreeMap::new();
        for (k, c) in &j.components {
            let i: i64 = k
                .parse()
                .map_err(|_| Error::Parse(format!("component index {k:?} is not an integer")))?;
            components.insert(i, correspondence_from(c)?);
        }
        let first = components.values().next();
        let source = match (&j.source, first) {
            (Some(m), _) => motive_from(m)?,
            (None, Some(c)) => motive_of(c.source()),
            (None, None) => {
                return Err(Error::InvalidInput(
                    "orbit morphism without components needs source and target".into(),
                ))
            }
        };
        let target = match (&j.target, first) {
            (Some(m), _) => motive_from(m)?,
            (None, Some(c)) => motive_of(c.target()),
            (None, None) => unreachable!("handled above"),
        };
        OrbitMorphism::new(&source, &target, components)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    #[test]
    fn cycle_format() {
        let v = Variety::new(vec![1, 2]);
        let c = Cycle::from_terms(&v, [(vec![1, 2], frac(6, 4)), (vec![0, 0], rat(-2))]).unwrap();
        assert_eq!(
            c.to_json_string(),
            r#"{"terms":[{"coeff":"-2","exps":[0,0]},{"coeff":"3/2","exps":[1,2]}],"variety":{"factors":[1,2]}}"#
        );
        assert_eq!(Cycle::from_json_str(&c.to_json_string()).unwrap(), c);
    }

    #[test]
    fn parse_errors() {
        let e = Cycle::from_json_str("{\"variety\": ").unwrap_err();
        assert!(matches!(e, Error::Parse(ref m) if m.contains("line 1")));
        let bad = r#"{"variety":{"factors":[1]},"terms":[{"exps":[2],"coeff":"1"}]}"#;
        assert!(matches!(Cycle::from_json_str(bad), Err(Error::InvalidInput(_))));
        let neg = r#"{"variety":{"factors":[-1]},"terms":[]}"#;
        assert!(matches!(Cycle::from_json_str(neg), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn orbit_components_in_numeric_order() {
        let p1 = Variety::projective(1);
        let m = motive_of(&p1);
        let q = p1.square();
        let c = GradedCorrespondence::new(
            &p1,
            &p1,
            &(&Cycle::one(&q) + &Cycle::hyperplane(&q, 0)) + &Cycle::point_class(&q),
        )
        .unwrap();
        let o = OrbitMorphism::from_graded(&m, &m, &c).unwrap();
        let s = o.to_json_string();
        let pos = |k: &str| s.find(&format!("\"{k}\":{{")).unwrap();
        assert!(pos("-1") < pos("0") && pos("0") < pos("1"));
        assert_eq!(OrbitMorphism::from_json_str(&s).unwrap(), o);
        let bare = r#"{"components":{"0":{"source":{"factors":[1]},"target":{"factors":[1]},"cycle":{"variety":{"factors":[1,1]},"terms":[{"exps":[0,1],"coeff":"1"},{"exps":[1,0],"coeff":"1"}]}}}}"#;
        assert_eq!(
            OrbitMorphism::from_json_str(bare).unwrap(),
            OrbitMorphism::identity(&m)
        );
    }
}
