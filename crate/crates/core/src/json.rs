//! JSON documents for polytopes, Laurent polynomials, supports, weights,
//! forms and algebra reports. Rationals travel as strings `"p/q"` (or integer
//! strings); bare JSON integers are accepted on input.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{GradedPDAlgebra, HomogeneousForm, SymmetricForm};
use crate::bkk::{LaurentPolynomial, SupportSystem};
use crate::error::{Error, Result};
use crate::flag::DominantWeight;
use crate::geometry::{hrep_to_vrep, HPolytope, Inequality, VPolytope};
use crate::rational::{format_rational, parse_rational, Rational, RationalVector};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalDoc {
    Text(String),
    Int(i64),
}

impl RationalDoc {
    pub fn parse(&self) -> Result<Rational> {
        match self {
            RationalDoc::Text(s) => parse_rational(s),
            RationalDoc::Int(i) => Ok(Rational::from_integer((*i).into())),
        }
    }
}

impl From<&Rational> for RationalDoc {
    fn from(q: &Rational) -> Self {
        RationalDoc::Text(format_rational(q))
    }
}

fn parse_vector(v: &[RationalDoc], dim: usize) -> Result<RationalVector> {
    if v.len() != dim {
        return Err(Error::invalid(format!(
            "expected {dim} coordinates, got {}",
            v.len()
        )));
    }
    RationalVector::new(v.iter().map(RationalDoc::parse).collect::<Result<_>>()?)
}

pub fn rational_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

pub fn matrix_json(m: &[Vec<Rational>]) -> Value {
    Value::Array(m.iter().map(|r| vector_json(r)).collect())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InequalityDoc {
    pub normal: Vec<RationalDoc>,
    pub rhs: RationalDoc,
}

/// `{"dim": n, "vertices": [...]}` or `{"dim": n, "inequalities": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolytopeDoc {
    V {
        dim: usize,
        vertices: Vec<Vec<RationalDoc>>,
    },
    H {
        dim: usize,
        inequalities: Vec<InequalityDoc>,
    },
}

/// A parsed polytope document, keeping the representation it arrived in.
pub enum ParsedPolytope {
    V(VPolytope),
    H(HPolytope),
}

impl ParsedPolytope {
    pub fn to_vrep(&self) -> VPolytope {
        match self {
            ParsedPolytope::V(v) => v.clone(),
            ParsedPolytope::H(h) => hrep_to_vrep(h),
        }
    }
}

impl PolytopeDoc {
    pub fn parse(&self) -> Result<ParsedPolytope> {
        match self {
            PolytopeDoc::V { dim, vertices } => {
                if *dim == 0 {
                    return Err(Error::invalid("dim must be positive"));
                }
                let pts = vertices
                    .iter()
                    .map(|v| parse_vector(v, *dim))
                    .collect::<Result<Vec<_>>>()?;
                Ok(ParsedPolytope::V(VPolytope::from_points(&pts)?))
            }
            PolytopeDoc::H { dim, inequalities } => {
                let ineqs = inequalities
                    .iter()
                    .map(|i| {
                        Ok(Inequality {
                            normal: parse_vector(&i.normal, *dim)?,
                            rhs: i.rhs.parse()?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(ParsedPolytope::H(HPolytope::new(*dim, ineqs)?))
            }
        }
    }

    pub fn parse_vrep(&self) -> Result<VPolytope> {
        Ok(self.parse()?.to_vrep())
    }
}

pub fn vrep_json(p: &VPolytope) -> Value {
    json!({
        "dim": p.ambient_dim(),
        "vertices": p.vertices().iter().map(|v| vector_json(v.coords())).collect::<Vec<_>>(),
    })
}

pub fn hrep_json(h: &HPolytope) -> Value {
    json!({
        "dim": h.ambient_dim(),
        "inequalities": h.inequalities().iter().map(|i| json!({
            "normal": vector_json(i.normal.coords()),
            "rhs": rational_json(&i.rhs),
        })).collect::<Vec<_>>(),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub exponent: Vec<i64>,
    pub coefficient: RationalDoc,
}

/// `{"dim": n, "terms": [...]}` or a bare support `{"dim": n, "points": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LaurentDoc {
    Terms { dim: usize, terms: Vec<TermDoc> },
    Support { dim: usize, points: Vec<Vec<i64>> },
}

impl LaurentDoc {
    pub fn dim(&self) -> usize {
        match self {
            LaurentDoc::Terms { dim, .. } | LaurentDoc::Support { dim, .. } => *dim,
        }
    }

    /// The polynomial; bare supports get unit coefficients.
    pub fn parse(&self) -> Result<LaurentPolynomial> {
        match self {
            LaurentDoc::Terms { dim, terms } => LaurentPolynomial::new(
                *dim,
                terms
                    .iter()
                    .map(|t| Ok((t.exponent.clone(), t.coefficient.parse()?)))
                    .collect::<Result<Vec<_>>>()?,
            ),
            LaurentDoc::Support { dim, points } => {
                if points.is_empty() {
                    return Err(Error::invalid("empty support"));
                }
                LaurentPolynomial::from_support(*dim, points)
            }
        }
    }

    pub fn support(&self) -> Result<Vec<Vec<i64>>> {
        Ok(self.parse()?.support())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDoc {
    pub system: Vec<LaurentDoc>,
}

impl SystemDoc {
    pub fn parse(&self) -> Result<SupportSystem> {
        let dim = self
            .system
            .first()
            .ok_or_else(|| Error::invalid("empty system"))?
            .dim();
        let supports = self
            .system
            .iter()
            .map(|d| {
                if d.dim() != dim {
                    return Err(Error::invalid("system members have different dimensions"));
                }
                d.support()
            })
            .collect::<Result<Vec<_>>>()?;
        SupportSystem::new(dim, supports)
    }
}

fn default_group() -> String {
    "GL".to_string()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightDoc {
    #[serde(default = "default_group")]
    pub group: String,
    pub m: usize,
    pub lambda: Vec<i64>,
}

impl WeightDoc {
    pub fn parse(&self) -> Result<DominantWeight> {
        if self.group != "GL" {
            return Err(Error::invalid(format!(
                "unsupported group {:?}",
                self.group
            )));
        }
        if self.lambda.len() != self.m {
            return Err(Error::invalid(format!(
                "lambda has {} entries but m = {}",
                self.lambda.len(),
                self.m
            )));
        }
        DominantWeight::new(self.lambda.clone())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialTermDoc {
    pub exponent: Vec<u32>,
    pub coefficient: RationalDoc,
}

/// Homogeneous polynomial `{"vars": s, "degree": n, "terms": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomogeneousDoc {
    pub vars: usize,
    pub degree: usize,
    pub terms: Vec<MonomialTermDoc>,
}

impl HomogeneousDoc {
    pub fn parse(&self) -> Result<HomogeneousForm> {
        HomogeneousForm::new(
            self.vars,
            self.degree,
            self.terms
                .iter()
                .map(|t| Ok((t.exponent.clone(), t.coefficient.parse()?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

pub fn homogeneous_json(p: &HomogeneousForm) -> Value {
    json!({
        "vars": p.vars(),
        "degree": p.degree(),
        "terms": p.terms().iter().map(|(m, c)| json!({
            "exponent": m,
            "coefficient": rational_json(c),
        })).collect::<Vec<_>>(),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormValueDoc {
    pub index: Vec<u32>,
    pub value: RationalDoc,
}

/// Symmetric form `{"generators": s, "degree": n, "values": [...]}`; omitted
/// multi-indices are zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormDoc {
    pub generators: usize,
    pub degree: usize,
    pub values: Vec<FormValueDoc>,
}

impl FormDoc {
    pub fn parse(&self) -> Result<SymmetricForm> {
        SymmetricForm::new(
            self.generators,
            self.degree,
            self.values
                .iter()
                .map(|v| Ok((v.index.clone(), v.value.parse()?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

pub fn form_json(f: &SymmetricForm) -> Value {
    json!({
        "generators": f.generators(),
        "degree": f.degree(),
        "values": f.values().iter().map(|(m, v)| json!({
            "index": m,
            "value": rational_json(v),
        })).collect::<Vec<_>>(),
    })
}

/// Full algebra report: Hilbert function, bases, pairings, sparse structure
/// constants and the top form on the degree-`n` basis.
pub fn algebra_json(alg: &GradedPDAlgebra) -> Value {
    let n = alg.top_degree();
    let structure: Vec<Value> = alg
        .structure_constants()
        .iter()
        .filter(|((k, _, l, _), _)| k <= l)
        .filter_map(|(&(k, i, l, j), coords)| {
            let nonzero: Vec<Value> = coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(r, c)| json!([r, rational_json(c)]))
                .collect();
            (!nonzero.is_empty()).then(|| {
                json!({
                    "left": [k, i],
                    "right": [l, j],
                    "product": nonzero,
                })
            })
        })
        .collect();
    json!({
        "construction": alg.construction().name(),
        "generators": alg.generators(),
        "top_degree": n,
        "hilbert": alg.hilbert(),
        "bases": (0..=n).map(|k| alg.basis(k)).collect::<Vec<_>>(),
        "pairings": (0..=n).map(|k| matrix_json(alg.pairing(k))).collect::<Vec<_>>(),
        "structure_constants": structure,
        "top_form": vector_json(&alg.top_form_values()),
        "poincare_duality": alg.verify().is_ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn polytope_documents() {
        let v: PolytopeDoc =
            serde_json::from_str(r#"{"dim": 2, "vertices": [["0","0"],["1/2","0"],[0,1]]}"#)
                .unwrap();
        let p = v.parse_vrep().unwrap();
        assert_eq!(p.vertices().len(), 3);
        let out = vrep_json(&p);
        assert_eq!(out["vertices"][2], json!(["1/2", "0"]));

        let h: PolytopeDoc = serde_json::from_str(
            r#"{"dim": 1, "inequalities": [{"normal": ["1"], "rhs": "3/2"}, {"normal": ["-2"], "rhs": "0"}]}"#,
        )
        .unwrap();
        let p = h.parse_vrep().unwrap();
        assert_eq!(p.vertices()[1][0], ratio(3, 2));

        let bad: PolytopeDoc =
            serde_json::from_str(r#"{"dim": 2, "vertices": [["1/0","0"]]}"#).unwrap();
        assert!(bad.parse().is_err());
        let bad: PolytopeDoc = serde_json::from_str(r#"{"dim": 2, "vertices": [["1"]]}"#).unwrap();
        assert!(bad.parse().is_err());
    }

    #[test]
    fn laurent_documents() {
        let d: LaurentDoc = serde_json::from_str(
            r#"{"dim": 2, "terms": [{"exponent": [1,-2], "coefficient": "3/4"}]}"#,
        )
        .unwrap();
        assert_eq!(d.support().unwrap(), vec![vec![1, -2]]);
        let d: LaurentDoc = serde_json::from_str(r#"{"dim": 1, "points": [[0],[3]]}"#).unwrap();
        assert_eq!(d.parse().unwrap().terms().len(), 2);
        let zero: LaurentDoc =
            serde_json::from_str(r#"{"dim": 1, "terms": [{"exponent": [1], "coefficient": "0"}]}"#)
                .unwrap();
        assert!(zero.parse().is_err());
    }

    #[test]
    fn weight_documents() {
        let w: WeightDoc =
            serde_json::from_str(r#"{"group": "GL", "m": 3, "lambda": [2,1,0]}"#).unwrap();
        assert_eq!(w.parse().unwrap().lambda(), &[2, 1, 0]);
        let w: WeightDoc = serde_json::from_str(r#"{"m": 2, "lambda": [0,1]}"#).unwrap();
        assert!(matches!(w.parse(), Err(Error::NotDominant(_))));
        let w: WeightDoc =
            serde_json::from_str(r#"{"group": "SO", "m": 2, "lambda": [1,0]}"#).unwrap();
        assert!(w.parse().is_err());
    }
}
