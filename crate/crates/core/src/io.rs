//! JSON file formats: presentations, Leibniz algebras, multiplication
//! tables, and symmetric forms. Diwords use an explicit center index here;
//! the `^` text notation is for the command line.

use crate::constructions::{LeibnizAlgebra, MultiplicationTable, SymmetricForm};
use crate::diword::{Alphabet, Gen, NormalDiword};
use crate::error::{Error, Result};
use crate::poly::DiPolynomial;
use crate::rewrite::Presentation;
use crate::scalar::{Field, Scalar};
use serde::{Deserialize, Deserializer, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldSpec {
    #[default]
    Rational,
    Prime {
        p: u64,
    },
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field> {
        match self {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Prime { p } => Field::prime(p),
        }
    }

    pub fn from_field(field: Field) -> FieldSpec {
        match field {
            Field::Rational => FieldSpec::Rational,
            Field::Prime(p) => FieldSpec::Prime { p },
        }
    }
}

/// Accepts either a JSON string or an integer for coefficient positions.
fn coeff_text<'de, D>(de: D) -> std::result::Result<String, D::Error>
where
    D: Deserializer<'de>,
{
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(i64),
        Text(String),
    }
    Ok(match Raw::deserialize(de)? {
        Raw::Int(n) => n.to_string(),
        Raw::Text(s) => s,
    })
}

fn coeff_matrix<'de, D>(de: D) -> std::result::Result<Vec<Vec<String>>, D::Error>
where
    D: Deserializer<'de>,
{
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(i64),
        Text(String),
    }
    let raw: Vec<Vec<Raw>> = Deserialize::deserialize(de)?;
    Ok(raw
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| match e {
                    Raw::Int(n) => n.to_string(),
                    Raw::Text(s) => s,
                })
                .collect()
        })
        .collect())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermFile {
    #[serde(deserialize_with = "coeff_text")]
    pub coeff: String,
    pub word: Vec<String>,
    pub center: usize,
}

/// One presentation per file: ordered generators, a field, and relations as
/// term lists.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationFile {
    pub generators: Vec<String>,
    #[serde(default)]
    pub field: FieldSpec,
    pub relations: Vec<Vec<TermFile>>,
}

impl PresentationFile {
    pub fn from_json(text: &str) -> Result<PresentationFile> {
        serde_json::from_str(text).map_err(|e| Error::parse(format!("presentation file: {e}")))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    fn parse_relations(&self) -> Result<(Alphabet, Field, Vec<DiPolynomial>)> {
        let alphabet = Alphabet::new(self.generators.clone())?;
        let field = self.field.to_field()?;
        let mut relations = Vec::with_capacity(self.relations.len());
        for (i, terms) in self.relations.iter().enumerate() {
            let mut poly = DiPolynomial::zero(field);
            for term in terms {
                let coeff = field.parse_scalar(&term.coeff)?;
                let word: Vec<Gen> = term
                    .word
                    .iter()
                    .map(|n| alphabet.resolve(n))
                    .collect::<Result<_>>()?;
                if word.is_empty() {
                    return Err(Error::invalid(format!("relation {i} has an empty word")));
                }
                if term.center >= word.len() {
                    return Err(Error::invalid(format!(
                        "relation {i} has center {} out of range",
                        term.center
                    )));
                }
                poly.add_term(NormalDiword::new(word, term.center), coeff);
            }
            relations.push(poly);
        }
        Ok((alphabet, field, relations))
    }

    /// Canonical form: terms merged and reordered descending, coefficients
    /// re-rendered. Rendering after parsing reproduces a canonical file
    /// bit-exactly.
    pub fn canonical(&self) -> Result<PresentationFile> {
        let (alphabet, field, relations) = self.parse_relations()?;
        Ok(render_file(&alphabet, field, &relations))
    }

    /// Builds the presentation. Relations are normalized to monic here (the
    /// composition theory assumes monic sets; scaling does not change the
    /// ideal); zero or duplicate relations are rejected.
    pub fn to_presentation(&self) -> Result<Presentation> {
        let (alphabet, field, relations) = self.parse_relations()?;
        let mut monic = Vec::with_capacity(relations.len());
        for (i, r) in relations.into_iter().enumerate() {
            if r.is_zero() {
                return Err(Error::invalid(format!("relation {i} is zero")));
            }
            monic.push(r.monic());
        }
        Presentation::new(alphabet, field, monic)
    }

    pub fn from_presentation(pres: &Presentation) -> PresentationFile {
        render_file(pres.alphabet(), pres.field(), pres.relations())
    }
}

fn render_file(alphabet: &Alphabet, field: Field, relations: &[DiPolynomial]) -> PresentationFile {
    let relations = relations
        .iter()
        .map(|poly| {
            poly.terms()
                .rev()
                .map(|(u, c)| TermFile {
                    coeff: c.to_string(),
                    word: u.word().iter().map(|&g| alphabet.name(g).to_string()).collect(),
                    center: u.center(),
                })
                .collect()
        })
        .collect();
    PresentationFile {
        generators: alphabet.names().to_vec(),
        field: FieldSpec::from_field(field),
        relations,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductEntry {
    pub k: String,
    #[serde(deserialize_with = "coeff_text")]
    pub coeff: String,
}

/// Sparse product map keyed by `"left,right"` generator-name pairs; omitted
/// products are zero.
type ProductMap = BTreeMap<String, Vec<ProductEntry>>;

fn dense_products(
    map: &ProductMap,
    alphabet: &Alphabet,
    field: Field,
    what: &str,
) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let n = alphabet.len();
    let mut out = vec![vec![vec![field.zero(); n]; n]; n];
    for (key, entries) in map {
        let (left, right) = key
            .split_once(',')
            .ok_or_else(|| Error::parse(format!("{what} key `{key}` is not `i,j`")))?;
        let i = alphabet.resolve(left.trim())? as usize;
        let j = alphabet.resolve(right.trim())? as usize;
        for e in entries {
            let k = alphabet.resolve(&e.k)? as usize;
            let c = field.parse_scalar(&e.coeff)?;
            out[i][j][k] = &out[i][j][k] + &c;
        }
    }
    Ok(out)
}

/// A Leibniz algebra: generators, the `I₀` markers, and the bracket table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LeibnizFile {
    pub generators: Vec<String>,
    #[serde(default)]
    pub i0: Vec<String>,
    #[serde(default)]
    pub bracket: ProductMap,
    #[serde(default)]
    pub field: FieldSpec,
}

impl LeibnizFile {
    pub fn from_json(text: &str) -> Result<LeibnizFile> {
        serde_json::from_str(text).map_err(|e| Error::parse(format!("Leibniz file: {e}")))
    }

    pub fn to_algebra(&self) -> Result<LeibnizAlgebra> {
        let alphabet = Alphabet::new(self.generators.clone())?;
        let field = self.field.to_field()?;
        let bracket = dense_products(&self.bracket, &alphabet, field, "bracket")?;
        let i0: Vec<usize> = self
            .i0
            .iter()
            .map(|n| alphabet.resolve(n).map(|g| g as usize))
            .collect::<Result<_>>()?;
        LeibnizAlgebra::new(self.generators.clone(), field, &i0, bracket)
    }
}

/// A dialgebra by multiplication table: structure constants for both
/// products.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableFile {
    pub generators: Vec<String>,
    #[serde(default)]
    pub vdash: ProductMap,
    #[serde(default)]
    pub dashv: ProductMap,
    #[serde(default)]
    pub field: FieldSpec,
}

impl TableFile {
    pub fn from_json(text: &str) -> Result<TableFile> {
        serde_json::from_str(text).map_err(|e| Error::parse(format!("table file: {e}")))
    }

    pub fn to_table(&self) -> Result<MultiplicationTable> {
        let alphabet = Alphabet::new(self.generators.clone())?;
        let field = self.field.to_field()?;
        let vdash = dense_products(&self.vdash, &alphabet, field, "vdash")?;
        let dashv = dense_products(&self.dashv, &alphabet, field, "dashv")?;
        MultiplicationTable::new(self.generators.clone(), field, vdash, dashv)
    }
}

/// A symmetric form for the Clifford construction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CliffordFile {
    pub n: usize,
    #[serde(deserialize_with = "coeff_matrix")]
    pub matrix: Vec<Vec<String>>,
    #[serde(default)]
    pub field: FieldSpec,
}

impl CliffordFile {
    pub fn from_json(text: &str) -> Result<CliffordFile> {
        serde_json::from_str(text).map_err(|e| Error::parse(format!("Clifford file: {e}")))
    }

    pub fn to_form(&self) -> Result<SymmetricForm> {
        let field = self.field.to_field()?;
        if self.matrix.len() != self.n || self.matrix.iter().any(|r| r.len() != self.n) {
            return Err(Error::invalid("matrix must be n x n"));
        }
        let matrix = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|c| field.parse_scalar(c)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        SymmetricForm::new(field, matrix)
    }
}
