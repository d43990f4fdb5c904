//! JSON documents describing a finite-dimensional Hopf algebra and named
//! calculus ideals.
//!
//! Scalars are `[numerator, denominator]` pairs of decimal strings. `mult`
//! entries `[i, j, k, num, den]` mean `e_i e_j ∋ (num/den) e_k`; `comult`
//! entries `[i, j, k, num, den]` mean `Δ(e_i) ∋ (num/den) e_j⊗e_k`. Entries
//! are written sorted and only when nonzero, so export is deterministic.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::calculus::{check_ideal, CalculusIdeal};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{validate_hopf, FinHopfAlgebra, HopfData};
use crate::linalg::Mat;

pub const SCHEMA_VERSION: &str = "1";

pub type Frac = (String, String);
pub type Entry = (usize, usize, usize, String, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealBlock {
    pub name: String,
    /// Spanning vectors in the basis of `P`.
    pub vectors: Vec<Vec<Frac>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub schema_version: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    pub mult: Vec<Entry>,
    pub comult: Vec<Entry>,
    pub unit: Vec<Frac>,
    pub counit: Vec<Frac>,
    pub antipode: Vec<Vec<Frac>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<IdealBlock>,
}

fn frac(s: &Scalar) -> Frac {
    s.to_pair()
}

/// Nonzero entries of `m` as `(row, col, value)`, sorted.
fn entries(m: &Mat) -> Vec<(usize, usize, Scalar)> {
    let mut out: Vec<(usize, usize, Scalar)> =
        (0..m.cols()).flat_map(|j| m.col(j).iter().map(move |(i, c)| (*i, j, c.clone()))).collect();
    out.sort_by_key(|&(i, j, _)| (i, j));
    out
}

impl AlgebraDocument {
    pub fn from_hopf(p: &FinHopfAlgebra) -> AlgebraDocument {
        let n = p.dim();
        let mut mult: Vec<Entry> = entries(p.mult())
            .into_iter()
            .map(|(k, c, s)| {
                let (a, b) = frac(&s);
                (c / n, c % n, k, a, b)
            })
            .collect();
        mult.sort();
        let mut comult: Vec<Entry> = entries(p.comult())
            .into_iter()
            .map(|(r, i, s)| {
                let (a, b) = frac(&s);
                (i, r / n, r % n, a, b)
            })
            .collect();
        comult.sort();
        let column = |m: &Mat| (0..m.rows()).map(|i| frac(&m.get(i, 0))).collect();
        let antipode = (0..n).map(|i| (0..n).map(|j| frac(&p.antipode().get(i, j))).collect()).collect();
        AlgebraDocument {
            schema_version: SCHEMA_VERSION.into(),
            field: p.field(),
            dim: n,
            labels: p.labels().to_vec(),
            mult,
            comult,
            unit: column(p.unit()),
            counit: column(&p.counit().transpose()),
            antipode,
            ideals: Vec::new(),
        }
    }

    /// Add a named ideal spanned by the columns of `vectors`.
    pub fn with_ideal(mut self, name: &str, vectors: &Mat) -> AlgebraDocument {
        let vs = (0..vectors.cols()).map(|j| (0..vectors.rows()).map(|i| frac(&vectors.get(i, j))).collect()).collect();
        self.ideals.push(IdealBlock { name: name.into(), vectors: vs });
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<AlgebraDocument> {
        let doc: AlgebraDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!("schema_version {:?} is not supported", doc.schema_version)));
        }
        if let FieldSpec::PrimeField(p) = doc.field {
            FieldSpec::prime(p)?;
        }
        Ok(doc)
    }

    pub fn read(path: &Path) -> Result<AlgebraDocument> {
        let text = std::fs::read_to_string(path)?;
        AlgebraDocument::from_json(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    fn scalar(&self, at: &str, x: &Frac) -> Result<Scalar> {
        self.field.parse(&x.0, &x.1).map_err(|e| Error::Parse(format!("{at}: {e}")))
    }

    fn vector(&self, at: &str, v: &[Frac]) -> Result<Mat> {
        if v.len() != self.dim {
            return Err(Error::Parse(format!("{at}: length {} but dim is {}", v.len(), self.dim)));
        }
        let mut trip = Vec::new();
        for (i, x) in v.iter().enumerate() {
            trip.push((i, 0, self.scalar(&format!("{at}[{i}]"), x)?));
        }
        Ok(Mat::from_triplets(self.field, self.dim, 1, trip))
    }

    fn tensor(&self, name: &str, list: &[Entry], rows: usize, cols: usize, place: impl Fn(usize, usize, usize) -> (usize, usize)) -> Result<Mat> {
        let n = self.dim;
        let mut trip = Vec::with_capacity(list.len());
        for (t, (i, j, k, a, b)) in list.iter().enumerate() {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::Parse(format!("{name}[{t}]: index out of range for dim {n}")));
            }
            let (r, c) = place(*i, *j, *k);
            trip.push((r, c, self.scalar(&format!("{name}[{t}]"), &(a.clone(), b.clone()))?));
        }
        // repeated entries add up
        Ok(Mat::from_triplets(self.field, rows, cols, trip))
    }

    /// Structure tensors without checking the axioms.
    pub fn hopf_data(&self) -> Result<HopfData> {
        let n = self.dim;
        if self.labels.len() != n {
            return Err(Error::Parse(format!("labels: {} given but dim is {n}", self.labels.len())));
        }
        let mult = self.tensor("mult", &self.mult, n, n * n, |i, j, k| (k, i * n + j))?;
        let comult = self.tensor("comult", &self.comult, n * n, n, |i, j, k| (j * n + k, i))?;
        let unit = self.vector("unit", &self.unit)?;
        let counit = self.vector("counit", &self.counit)?.transpose();
        if self.antipode.len() != n {
            return Err(Error::Parse(format!("antipode: {} rows but dim is {n}", self.antipode.len())));
        }
        let rows: Vec<Mat> = self
            .antipode
            .iter()
            .enumerate()
            .map(|(i, r)| self.vector(&format!("antipode[{i}]"), r).map(|v| v.transpose()))
            .collect::<Result<_>>()?;
        let antipode = Mat::vstack(self.field, n, &rows.iter().collect::<Vec<_>>());
        Ok(HopfData { field: self.field, labels: self.labels.clone(), mult, unit, comult, counit, antipode })
    }

    pub fn hopf(&self) -> Result<FinHopfAlgebra> {
        validate_hopf(self.hopf_data()?)
    }

    pub fn ideal_names(&self) -> Vec<&str> {
        self.ideals.iter().map(|b| b.name.as_str()).collect()
    }

    /// Spanning vectors of a named ideal as columns.
    pub fn ideal_vectors(&self, name: &str) -> Result<Mat> {
        let block = self
            .ideals
            .iter()
            .find(|b| b.name == name)
            .ok_or_else(|| Error::Parse(format!("no ideal named {name:?} (have {:?})", self.ideal_names())))?;
        let cols: Vec<Mat> = block
            .vectors
            .iter()
            .enumerate()
            .map(|(j, v)| self.vector(&format!("ideals[{name}].vectors[{j}]"), v))
            .collect::<Result<_>>()?;
        Ok(Mat::hstack(self.field, self.dim, &cols.iter().collect::<Vec<_>>()))
    }

    /// A named ideal, validated against `p`.
    pub fn ideal(&self, p: &FinHopfAlgebra, name: &str) -> Result<CalculusIdeal> {
        check_ideal(p, &self.ideal_vectors(name)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn sweedler_round_trip() {
        let p = sweedler(Q).unwrap();
        let doc = AlgebraDocument::from_hopf(&p).with_ideal("r", &Mat::from_ints(Q, &[vec![0], vec![1], vec![0], vec![1]]));
        let text = doc.to_json();
        let back = AlgebraDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        let q = back.hopf().unwrap();
        assert_eq!(q.mult(), p.mult());
        assert_eq!(q.comult(), p.comult());
        assert_eq!(q.antipode(), p.antipode());
        assert_eq!(AlgebraDocument::from_hopf(&q).with_ideal("r", &back.ideal_vectors("r").unwrap()).to_json(), text);
        back.ideal(&q, "r").unwrap();
    }

    #[test]
    fn prime_field_scalars() {
        let p = taft_auto(3, FieldSpec::prime(7).unwrap()).unwrap();
        let doc = AlgebraDocument::from_hopf(&p);
        assert_eq!(doc.hopf().unwrap().mult(), p.mult());
    }

    #[test]
    fn corrupted_counit_is_named() {
        let p = group_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        let mut doc = AlgebraDocument::from_hopf(&p);
        doc.counit[1] = ("0".into(), "1".into());
        match doc.hopf() {
            Err(Error::HopfAxioms(v)) => assert!(v.iter().any(|x| x.check.contains("counit"))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_context() {
        let p = group_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        let mut doc = AlgebraDocument::from_hopf(&p);
        doc.mult[0].2 = 7;
        assert!(matches!(doc.hopf_data(), Err(Error::Parse(m)) if m.starts_with("mult[0]")));
        let err = AlgebraDocument::from_json("{\"schema_version\": \"1\"}").unwrap_err();
        assert!(err.to_string().contains("missing field"));
        let mut doc = AlgebraDocument::from_hopf(&p);
        doc.unit[0] = ("1".into(), "0".into());
        assert!(matches!(doc.hopf_data(), Err(Error::Parse(m)) if m.starts_with("unit[0]")));
    }
}
