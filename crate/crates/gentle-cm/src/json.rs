//! JSON document mirrors for presentations, matrices, and polynomials.
//!
//! Arbitrary-precision integers are serialized as decimal strings so the
//! round trip is exact. Relations appear in word order `[beta, alpha]`,
//! matching the text format's `rel beta alpha`.

use num::bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, IntPolynomial};
use crate::quiver::{GentlePresentation, Quiver};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub id: String,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    pub relations: Vec<[String; 2]>,
}

impl From<&GentlePresentation> for PresentationDoc {
    fn from(p: &GentlePresentation) -> Self {
        let q = p.quiver();
        PresentationDoc {
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowDoc {
                    id: a.id.clone(),
                    source: q.vertex_id(a.source).to_string(),
                    target: q.vertex_id(a.target).to_string(),
                })
                .collect(),
            relations: p
                .relation_word_pairs()
                .into_iter()
                .map(|(b, a)| [b, a])
                .collect(),
        }
    }
}

impl TryFrom<&PresentationDoc> for GentlePresentation {
    type Error = Error;
    fn try_from(doc: &PresentationDoc) -> Result<Self> {
        let quiver = Quiver::new(
            doc.vertices.clone(),
            doc.arrows
                .iter()
                .map(|a| (a.id.clone(), a.source.clone(), a.target.clone()))
                .collect(),
        )?;
        GentlePresentation::new(
            quiver,
            doc.relations
                .iter()
                .map(|[b, a]| (b.clone(), a.clone()))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub labels: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl MatrixDoc {
    pub fn from_int_matrix(labels: &[String], m: &IntMatrix) -> Self {
        let rows = (0..m.rows)
            .map(|i| (0..m.cols).map(|j| m[(i, j)].to_string()).collect())
            .collect();
        MatrixDoc {
            labels: labels.to_vec(),
            rows,
        }
    }

    pub fn to_int_matrix(&self) -> Result<IntMatrix> {
        let rows = self.rows.len();
        let cols = self.rows.first().map_or(0, |r| r.len());
        let mut m = IntMatrix::zero(rows, cols);
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch);
            }
            for (j, entry) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from_str(entry)
                    .map_err(|e| Error::Domain(format!("bad integer `{entry}`: {e}")))?;
            }
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDoc {
    /// Ascending coefficients as decimal strings.
    pub coefficients: Vec<String>,
    pub display: String,
}

impl From<&IntPolynomial> for PolynomialDoc {
    fn from(p: &IntPolynomial) -> Self {
        PolynomialDoc {
            coefficients: p.coeffs().iter().map(|c| c.to_string()).collect(),
            display: p.to_string(),
        }
    }
}

impl TryFrom<&PolynomialDoc> for IntPolynomial {
    type Error = Error;
    fn try_from(doc: &PolynomialDoc) -> Result<Self> {
        let coeffs = doc
            .coefficients
            .iter()
            .map(|c| {
                BigInt::from_str(c).map_err(|e| Error::Domain(format!("bad integer `{c}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_round_trip() {
        let p =
            GentlePresentation::parse("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrel b a\n")
                .unwrap();
        let doc = PresentationDoc::from(&p);
        let json = serde_json::to_string(&doc).unwrap();
        let back: PresentationDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(GentlePresentation::try_from(&back).unwrap(), p);
    }

    #[test]
    fn matrix_round_trip() {
        let m = IntMatrix::from_rows(vec![vec![1, -2], vec![0, 7]]);
        let labels = vec!["1".to_string(), "2".to_string()];
        let doc = MatrixDoc::from_int_matrix(&labels, &m);
        let json = serde_json::to_string(&doc).unwrap();
        let back: MatrixDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_int_matrix().unwrap(), m);
    }

    #[test]
    fn polynomial_round_trip() {
        let p = IntPolynomial::from_i64(vec![1, 0, -3, 1]);
        let doc = PolynomialDoc::from(&p);
        let json = serde_json::to_string(&doc).unwrap();
        let back: PolynomialDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(IntPolynomial::try_from(&back).unwrap(), p);
    }
}
