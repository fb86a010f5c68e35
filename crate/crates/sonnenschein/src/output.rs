//! Structured output documents for the CLI: JSON with lossless tagged value
//! strings, and CSV with the same values as plain text cells.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact::{ComplexRational, PiGradedValue, Rational};

/// A single payload value, tagged with its representation. Exact values are
/// their canonical text forms and round-trip losslessly; floats use the
/// shortest decimal that parses back to the same double.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum TaggedValue {
    #[serde(rename = "exact-rational")]
    ExactRational(String),
    #[serde(rename = "exact-complex-rational")]
    ExactComplexRational(String),
    #[serde(rename = "pi-graded")]
    PiGraded(String),
    #[serde(rename = "float")]
    Float(String),
}

impl TaggedValue {
    pub fn rational(v: &Rational) -> Self {
        TaggedValue::ExactRational(v.to_string())
    }

    pub fn complex_rational(v: &ComplexRational) -> Self {
        TaggedValue::ExactComplexRational(v.to_string())
    }

    pub fn pi_graded(v: &PiGradedValue) -> Self {
        TaggedValue::PiGraded(v.to_string())
    }

    pub fn float(v: f64) -> Self {
        TaggedValue::Float(v.to_string())
    }

    pub fn complex_float(v: Complex64) -> Self {
        TaggedValue::Float(format_complex_f64(v))
    }

    /// The bare value text, as written into CSV cells.
    pub fn text(&self) -> &str {
        match self {
            TaggedValue::ExactRational(s)
            | TaggedValue::ExactComplexRational(s)
            | TaggedValue::PiGraded(s)
            | TaggedValue::Float(s) => s,
        }
    }

    pub fn as_rational(&self) -> Result<Rational, Error> {
        match self {
            TaggedValue::ExactRational(s) => s.parse(),
            _ => Err(Error::parse("exact-rational tag", self.text())),
        }
    }

    pub fn as_complex_rational(&self) -> Result<ComplexRational, Error> {
        match self {
            TaggedValue::ExactComplexRational(s) => s.parse(),
            _ => Err(Error::parse("exact-complex-rational tag", self.text())),
        }
    }

    pub fn as_pi_graded(&self) -> Result<PiGradedValue, Error> {
        match self {
            TaggedValue::PiGraded(s) => s.parse(),
            _ => Err(Error::parse("pi-graded tag", self.text())),
        }
    }
}

impl fmt::Display for TaggedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text())
    }
}

/// "re+imi" with shortest-round-trip doubles; a real value prints as a bare
/// double.
pub fn format_complex_f64(v: Complex64) -> String {
    if v.im == 0.0 {
        v.re.to_string()
    } else if v.im.is_sign_negative() {
        format!("{}-{}i", v.re, -v.im)
    } else {
        format!("{}+{}i", v.re, v.im)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocumentKind {
    Matrix,
    ColumnSums,
    Bernoulli,
    Verification,
}

/// Document metadata: what generated the payload and under which parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub generator: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cols: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    /// "exact" or "float", matching the payload value tags.
    pub mode: String,
    /// "analytic" when |f(0)| < 1, "formal" otherwise; set where the
    /// distinction matters (column sums, verification).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
}

impl Metadata {
    pub fn new(generator: &str, mode: &str) -> Self {
        Metadata {
            generator: generator.to_owned(),
            parameters: BTreeMap::new(),
            rows: None,
            cols: None,
            tolerance: None,
            mode: mode.to_owned(),
            regime: None,
        }
    }
}

/// One verified column in a verification payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ColumnRecord {
    pub column: usize,
    pub predicted: TaggedValue,
    pub partial_sum: TaggedValue,
    pub deviation: TaggedValue,
    pub converged: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    /// Matrix payload: an array of row arrays of tagged value strings.
    Matrix(Vec<Vec<TaggedValue>>),
    Verification {
        columns: Vec<ColumnRecord>,
        all_converged: bool,
    },
    Bernoulli {
        values: Vec<TaggedValue>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        recurrence: Option<Vec<TaggedValue>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        agreement: Option<Vec<bool>>,
    },
    // Keep last: with every field optional this matches any object during
    // untagged deserialization.
    ColumnSums {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        closed: Option<Vec<TaggedValue>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        series: Option<Vec<TaggedValue>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        equal: Option<Vec<bool>>,
    },
}

/// Top-level output object: {"kind", "metadata", "payload"}.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub kind: DocumentKind,
    pub metadata: Metadata,
    pub payload: Payload,
}

impl OutputDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// CSV rendering of the payload. Values are the same text forms as in
    /// JSON; value cells never contain commas or quotes.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::Matrix(rows) => {
                for row in rows {
                    push_row(&mut out, row.iter().map(TaggedValue::text));
                }
            }
            Payload::ColumnSums {
                closed,
                series,
                equal,
            } => {
                let mut header = vec!["column"];
                if closed.is_some() {
                    header.push("closed");
                }
                if series.is_some() {
                    header.push("series");
                }
                if equal.is_some() {
                    header.push("equal");
                }
                push_row(&mut out, header.into_iter());
                let n = closed
                    .as_ref()
                    .or(series.as_ref())
                    .map_or(0, |v| v.len());
                for k in 0..n {
                    let mut cells = vec![k.to_string()];
                    if let Some(c) = closed {
                        cells.push(c[k].text().to_owned());
                    }
                    if let Some(s) = series {
                        cells.push(s[k].text().to_owned());
                    }
                    if let Some(e) = equal {
                        cells.push(e[k].to_string());
                    }
                    push_row(&mut out, cells.iter().map(String::as_str));
                }
            }
            Payload::Bernoulli {
                values,
                recurrence,
                agreement,
            } => {
                let mut header = vec!["n", "value"];
                if recurrence.is_some() {
                    header.push("recurrence");
                }
                if agreement.is_some() {
                    header.push("agree");
                }
                push_row(&mut out, header.into_iter());
                for (n, v) in values.iter().enumerate() {
                    let mut cells = vec![n.to_string(), v.text().to_owned()];
                    if let Some(r) = recurrence {
                        cells.push(r[n].text().to_owned());
                    }
                    if let Some(a) = agreement {
                        cells.push(a[n].to_string());
                    }
                    push_row(&mut out, cells.iter().map(String::as_str));
                }
            }
            Payload::Verification {
                columns,
                all_converged: _,
            } => {
                push_row(
                    &mut out,
                    ["column", "predicted", "partial_sum", "deviation", "converged"].into_iter(),
                );
                for c in columns {
                    let cells = [
                        c.column.to_string(),
                        c.predicted.text().to_owned(),
                        c.partial_sum.text().to_owned(),
                        c.deviation.text().to_owned(),
                        c.converged.to_string(),
                    ];
                    push_row(&mut out, cells.iter().map(String::as_str));
                }
            }
        }
        out
    }
}

fn push_row<'a>(out: &mut String, cells: impl Iterator<Item = &'a str>) {
    let mut first = true;
    for cell in cells {
        if !first {
            out.push(',');
        }
        out.push_str(cell);
        first = false;
    }
    out.push('\n');
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_serialize_as_expected() {
        let v = TaggedValue::ExactRational("5/6".into());
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"exact-rational":"5/6"}"#
        );
        let v = TaggedValue::PiGraded("1/4*pi^2".into());
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"pi-graded":"1/4*pi^2"}"#
        );
    }

    #[test]
    fn matrix_document_round_trips() {
        let doc = OutputDocument {
            kind: DocumentKind::Matrix,
            metadata: Metadata::new("karamata", "exact"),
            payload: Payload::Matrix(vec![
                vec![
                    TaggedValue::ExactComplexRational("1+0i".into()),
                    TaggedValue::ExactComplexRational("0+0i".into()),
                ],
                vec![
                    TaggedValue::ExactComplexRational("1/2+0i".into()),
                    TaggedValue::ExactComplexRational("1/3+0i".into()),
                ],
            ]),
        };
        let parsed = OutputDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(parsed, doc);
    }

    #[test]
    fn column_sums_payload_round_trips() {
        let doc = OutputDocument {
            kind: DocumentKind::ColumnSums,
            metadata: Metadata::new("karamata", "exact"),
            payload: Payload::ColumnSums {
                closed: Some(vec![TaggedValue::ExactComplexRational("2+0i".into())]),
                series: Some(vec![TaggedValue::ExactComplexRational("2+0i".into())]),
                equal: Some(vec![true]),
            },
        };
        let parsed = OutputDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(parsed, doc);
    }

    #[test]
    fn verification_payload_is_not_mistaken_for_column_sums() {
        let doc = OutputDocument {
            kind: DocumentKind::Verification,
            metadata: Metadata::new("karamata", "float"),
            payload: Payload::Verification {
                columns: vec![ColumnRecord {
                    column: 0,
                    predicted: TaggedValue::ExactComplexRational("2+0i".into()),
                    partial_sum: TaggedValue::float(2.0),
                    deviation: TaggedValue::float(0.0),
                    converged: true,
                }],
                all_converged: true,
            },
        };
        let parsed = OutputDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(parsed, doc);
        assert!(matches!(parsed.payload, Payload::Verification { .. }));
    }

    #[test]
    fn csv_matrix_has_no_header() {
        let doc = OutputDocument {
            kind: DocumentKind::Matrix,
            metadata: Metadata::new("custom", "exact"),
            payload: Payload::Matrix(vec![
                vec![
                    TaggedValue::ExactRational("1".into()),
                    TaggedValue::ExactRational("0".into()),
                ],
                vec![
                    TaggedValue::ExactRational("1/2".into()),
                    TaggedValue::ExactRational("-5/6".into()),
                ],
            ]),
        };
        assert_eq!(doc.to_csv(), "1,0\n1/2,-5/6\n");
    }

    #[test]
    fn float_formatting_round_trips() {
        for x in [0.1, 1.0 / 3.0, -2.5e-17, 12345.6789] {
            let s = TaggedValue::float(x);
            assert_eq!(s.text().parse::<f64>().unwrap(), x);
        }
        assert_eq!(
            format_complex_f64(Complex64::new(0.5, -0.25)),
            "0.5-0.25i"
        );
        assert_eq!(format_complex_f64(Complex64::new(1.5, 0.0)), "1.5");
    }
}
