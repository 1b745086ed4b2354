//! JSON encodings of partitions, tableaux, polynomials, points and
//! certificates, with conversions to and from the core types.

use std::collections::BTreeMap;

use hwv_core::occurrence::{Block, BlockKind, Certificate, PlannedBlock, Refusal, Split};
use hwv_core::symtensor::{format_rational, parse_rational, Exponent, Summand};
use hwv_core::{BigRational, Partition, PowerSumPoint, SymPoly, Tableau};
use serde::{Deserialize, Serialize};

use crate::error::{format_err, Result};

fn rational(s: &str) -> Result<BigRational> {
    parse_rational(s).map_or_else(|| format_err(format!("not a rational: {s:?}")), Ok)
}

fn var_index(s: &str) -> Result<u32> {
    match s.parse::<u32>() {
        Ok(i) if i >= 1 => Ok(i),
        _ => format_err(format!("variable index must be a positive integer, got {s:?}")),
    }
}

pub fn partition_from(parts: &[u64]) -> Result<Partition> {
    Ok(Partition::new(parts.to_vec())?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: Vec<u64>,
    pub d: u32,
    pub n: u64,
    pub rows: Vec<Vec<u32>>,
}

impl From<&Tableau> for TableauJson {
    fn from(t: &Tableau) -> Self {
        Self { shape: t.shape().parts().to_vec(), d: t.d(), n: t.n(), rows: t.rows().to_vec() }
    }
}

impl TableauJson {
    pub fn to_tableau(&self) -> Result<Tableau> {
        let t = Tableau::from_rows(self.d, self.n, self.rows.clone())?;
        if t.shape().parts() != self.shape.as_slice() {
            return format_err(format!("shape {:?} does not match the rows (shape {})", self.shape, t.shape()));
        }
        Ok(t)
    }
}

/// One term `{"exp": {"1": 2, "3": 1}, "coef": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: BTreeMap<String, u64>,
    pub coef: String,
}

pub fn poly_to_json(p: &SymPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(alpha, c)| TermJson {
            exp: alpha.entries().iter().map(|&(i, e)| (i.to_string(), e)).collect(),
            coef: format_rational(c),
        })
        .collect()
}

/// Parses a polynomial; all terms must share one degree. The empty list is
/// the zero polynomial of degree `empty_degree`.
pub fn poly_from_json(terms: &[TermJson], empty_degree: u64) -> Result<SymPoly> {
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        let pairs = t.exp.iter().map(|(k, &e)| Ok((var_index(k)?, e))).collect::<Result<Vec<_>>>()?;
        parsed.push((Exponent::new(pairs), rational(&t.coef)?));
    }
    let degree = parsed.first().map_or(empty_degree, |(a, _)| a.degree());
    Ok(SymPoly::from_terms(degree, parsed)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub coef: String,
    pub vec: BTreeMap<String, String>,
}

/// `{"pad": e, "s": s, "summands": [...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSumJson {
    pub pad: u64,
    pub s: u64,
    pub summands: Vec<SummandJson>,
}

impl From<&PowerSumPoint> for PowerSumJson {
    fn from(p: &PowerSumPoint) -> Self {
        Self {
            pad: p.pad,
            s: p.s,
            summands: p
                .summands
                .iter()
                .map(|sm| SummandJson {
                    coef: format_rational(&sm.coef),
                    vec: sm.vec.iter().map(|(i, c)| (i.to_string(), format_rational(c))).collect(),
                })
                .collect(),
        }
    }
}

impl PowerSumJson {
    pub fn to_point(&self) -> Result<PowerSumPoint> {
        let summands = self
            .summands
            .iter()
            .map(|sm| {
                let vec = sm.vec.iter().map(|(k, c)| Ok((var_index(k)?, rational(c)?))).collect::<Result<_>>()?;
                Ok(Summand { coef: rational(&sm.coef)?, vec })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PowerSumPoint::new(self.pad, self.s, summands))
    }
}

/// A point given either as a polynomial or as a padded power sum.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointJson {
    Poly(Vec<TermJson>),
    PowerSum(PowerSumJson),
}

impl PointJson {
    pub fn to_poly(&self, degree_if_empty: u64) -> Result<SymPoly> {
        match self {
            Self::Poly(terms) => poly_from_json(terms, degree_if_empty),
            Self::PowerSum(p) => Ok(p.to_point()?.expand()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BlockJson {
    pub kind: String,
    /// base tableau
    pub tableau: TableauJson,
    pub lift_to: u64,
    pub degree: u32,
    pub weight: Vec<u64>,
    pub witness: PowerSumJson,
    pub value: String,
    pub seed_offset: u64,
}

impl From<&Block> for BlockJson {
    fn from(b: &Block) -> Self {
        Self {
            kind: b.kind.name().to_string(),
            tableau: (&b.base).into(),
            lift_to: b.lift_to,
            degree: b.degree,
            weight: b.weight.parts().to_vec(),
            witness: (&b.witness).into(),
            value: format_rational(&b.value),
            seed_offset: b.seed_offset,
        }
    }
}

impl BlockJson {
    pub fn to_block(&self) -> Result<Block> {
        let Some(kind) = BlockKind::from_name(&self.kind) else {
            return format_err(format!("unknown block kind {:?}", self.kind));
        };
        Ok(Block {
            kind,
            base: self.tableau.to_tableau()?,
            lift_to: self.lift_to,
            degree: self.degree,
            weight: partition_from(&self.weight)?,
            witness: self.witness.to_point()?,
            value: rational(&self.value)?,
            seed_offset: self.seed_offset,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CertificateJson {
    pub target: Vec<u64>,
    pub n: u64,
    pub d: u64,
    pub m: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    pub blocks: Vec<BlockJson>,
    pub first_row_fill: u64,
    #[serde(default)]
    pub assumed_lemmas: Vec<String>,
}

impl CertificateJson {
    pub fn new(cert: &Certificate, branch: Option<&str>) -> Self {
        Self {
            target: cert.target.parts().to_vec(),
            n: cert.n,
            d: cert.d,
            m: cert.m,
            branch: branch.map(str::to_string),
            blocks: cert.blocks.iter().map(BlockJson::from).collect(),
            first_row_fill: cert.first_row_fill,
            assumed_lemmas: cert.assumed_lemmas.clone(),
        }
    }

    pub fn to_certificate(&self) -> Result<Certificate> {
        Ok(Certificate {
            target: partition_from(&self.target)?,
            n: self.n,
            d: self.d,
            m: self.m,
            blocks: self.blocks.iter().map(BlockJson::to_block).collect::<Result<_>>()?,
            first_row_fill: self.first_row_fill,
            assumed_lemmas: self.assumed_lemmas.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PlannedBlockJson {
    pub kind: String,
    pub count: u64,
    pub base_shape: Vec<u64>,
    pub degree: u64,
    pub inner_degree: u64,
    pub weight: Vec<u64>,
}

impl From<&PlannedBlock> for PlannedBlockJson {
    fn from(b: &PlannedBlock) -> Self {
        Self {
            kind: b.kind.name().to_string(),
            count: b.count,
            base_shape: b.base_shape.parts().to_vec(),
            degree: b.degree,
            inner_degree: b.inner_degree,
            weight: b.weight.parts().to_vec(),
        }
    }
}

/// Report of a refused `certify` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RefusalJson {
    pub refusal: bool,
    pub branch: String,
    pub reason: String,
    pub plan: Vec<PlannedBlockJson>,
}

impl From<&Refusal> for RefusalJson {
    fn from(r: &Refusal) -> Self {
        Self {
            refusal: true,
            branch: r.branch.name().to_string(),
            reason: r.reason.clone(),
            plan: r.plan.iter().map(PlannedBlockJson::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OmegaJson {
    pub k: usize,
    pub i: u64,
    pub shape: Vec<u64>,
}

/// The splitting decomposition; map keys are column lengths `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SplitJson {
    pub c: BTreeMap<usize, u64>,
    pub big_k: Option<usize>,
    pub odd: Vec<usize>,
    pub omega: Vec<OmegaJson>,
    pub d_k: BTreeMap<usize, i64>,
    pub width: BTreeMap<usize, u64>,
    pub q_k: BTreeMap<usize, u64>,
    pub r_k: BTreeMap<usize, u64>,
    pub mu: Option<Vec<u64>>,
    pub mu_size: Option<u64>,
}

impl From<&Split> for SplitJson {
    fn from(s: &Split) -> Self {
        Self {
            c: s.c.clone(),
            big_k: s.big_k,
            odd: s.odd.clone(),
            omega: s.omega.iter().map(|(k, i, w)| OmegaJson { k: *k, i: *i, shape: w.parts().to_vec() }).collect(),
            d_k: s.d_k.clone(),
            width: s.width.clone(),
            q_k: s.q_k.clone(),
            r_k: s.r_k.clone(),
            mu: s.mu.as_ref().map(|m| m.parts().to_vec()),
            mu_size: s.mu.as_ref().map(Partition::size),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hwv_core::occurrence::{certify, Outcome, SearchOptions};

    #[test]
    fn tableau_round_trip() {
        let text = r#"{"shape":[3,1],"d":2,"n":2,"rows":[[1,1,2],[2]]}"#;
        let j: TableauJson = serde_json::from_str(text).unwrap();
        let t = j.to_tableau().unwrap();
        assert_eq!(serde_json::to_string(&TableauJson::from(&t)).unwrap(), text);
        let bad: TableauJson = serde_json::from_str(r#"{"shape":[2,2],"d":2,"n":2,"rows":[[1,1,2],[2]]}"#).unwrap();
        assert!(bad.to_tableau().is_err());
    }

    #[test]
    fn poly_round_trip() {
        let text = r#"[{"exp":{"1":2},"coef":"1"},{"exp":{"2":2},"coef":"-3/2"}]"#;
        let terms: Vec<TermJson> = serde_json::from_str(text).unwrap();
        let p = poly_from_json(&terms, 0).unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(serde_json::to_string(&poly_to_json(&p)).unwrap(), text);
        let mixed: Vec<TermJson> = serde_json::from_str(r#"[{"exp":{"1":2},"coef":"1"},{"exp":{"2":1},"coef":"1"}]"#).unwrap();
        assert!(poly_from_json(&mixed, 0).is_err());
    }

    #[test]
    fn point_formats() {
        let ps: PointJson =
            serde_json::from_str(r#"{"pad":1,"s":1,"summands":[{"coef":"2","vec":{"1":"1","2":"1/2"}}]}"#).unwrap();
        let p = ps.to_poly(0).unwrap();
        assert_eq!(p.degree(), 2);
        assert!(matches!(serde_json::from_str::<PointJson>("[]").unwrap(), PointJson::Poly(_)));
    }

    #[test]
    fn certificate_round_trip() {
        let lambda = Partition::new(vec![14, 2]).unwrap();
        let Outcome::Certified { certificate, .. } = certify(&lambda, 8, 2, 2, &SearchOptions::default()).unwrap()
        else {
            panic!()
        };
        let j = CertificateJson::new(&certificate, Some("smallDegree"));
        let text = serde_json::to_string(&j).unwrap();
        let back: CertificateJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_certificate().unwrap(), certificate);
    }
}
