//! Serialized records. Field order is part of the output format.

use closed_chroma_core::closedforms::TheoremVerdict;
use closed_chroma_core::engine::Verdict;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
}

/// Result of `compute` or `classify` for one `(graph, n, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub family: String,
    pub params: String,
    pub n: u64,
    pub k: i64,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conditions: Option<Vec<Condition>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn from_verdict(family: &str, params: &str, n: u64, k: i64, v: &Verdict) -> Self {
        Report {
            family: family.to_string(),
            params: params.to_string(),
            n,
            k,
            verdict: v.kind().to_string(),
            value: v.value(),
            witness: v.witness().map(|w| w.values().to_vec()),
            source: v.source().to_string(),
            theorem: None,
            conditions: None,
            note: None,
            timing_ms: None,
        }
    }

    pub fn from_theorem(family: &str, params: &str, n: u64, k: i64, tv: &TheoremVerdict) -> Self {
        Report {
            theorem: Some(tv.theorem_id.to_string()),
            conditions: Some(tv.conditions_evaluated.iter().map(|(name, holds)| Condition { name: name.clone(), holds: *holds }).collect()),
            note: tv.note.clone(),
            ..Report::from_verdict(family, params, n, k, &tv.verdict)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub family: String,
    pub params: String,
    pub n: u64,
    pub k: i64,
    /// False when there was no witness to check.
    pub checked: bool,
    pub valid: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub proper: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_ok: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_value: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub family: String,
    pub params: String,
    pub n: u64,
    pub k: i64,
    pub theorem: String,
    pub classifier: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classifier_value: Option<usize>,
    pub oracle: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_value: Option<usize>,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontierRow {
    pub m: usize,
    pub j: usize,
    pub n: u64,
    pub k: i64,
    pub theorem: String,
    pub classifier: String,
    pub oracle: String,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditivityRow {
    pub family: String,
    pub params: String,
    pub n: u64,
    pub k1: i64,
    pub k2: i64,
    pub sum: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sum_value: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k1_value: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k2_value: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs_sum: Option<usize>,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IedsRow {
    pub family: String,
    pub params: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ieds: Option<Vec<usize>>,
    pub chi: usize,
    pub n: u64,
    pub k: i64,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IedsReport {
    pub family: String,
    pub params: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ieds: Option<Vec<usize>>,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRow {
    pub index: usize,
    pub alpha: String,
    pub k: String,
    pub form: String,
}

/// Flat rendering for CSV and text output.
pub trait Tabular {
    const HEADER: &'static [&'static str];

    fn cells(&self) -> Vec<String>;

    fn text(&self) -> String {
        Self::HEADER
            .iter()
            .zip(self.cells())
            .filter(|(_, c)| !c.is_empty())
            .map(|(h, c)| format!("{h}={c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn join<T: ToString>(xs: &Option<Vec<T>>) -> String {
    xs.as_ref().map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).unwrap_or_default()
}

impl Tabular for Report {
    const HEADER: &'static [&'static str] =
        &["family", "params", "n", "k", "verdict", "value", "witness", "source", "theorem", "conditions", "note", "timing_ms"];

    fn cells(&self) -> Vec<String> {
        let conditions = self
            .conditions
            .as_ref()
            .map(|cs| cs.iter().map(|c| format!("{}={}", c.name, c.holds)).collect::<Vec<_>>().join(";"))
            .unwrap_or_default();
        vec![
            self.family.clone(),
            self.params.clone(),
            self.n.to_string(),
            self.k.to_string(),
            self.verdict.clone(),
            opt(&self.value),
            join(&self.witness),
            self.source.clone(),
            opt(&self.theorem),
            conditions,
            opt(&self.note),
            opt(&self.timing_ms),
        ]
    }
}

impl Tabular for VerifyOutput {
    const HEADER: &'static [&'static str] =
        &["family", "params", "n", "k", "checked", "valid", "proper", "closed_ok", "order", "claimed_value", "violation"];

    fn cells(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.params.clone(),
            self.n.to_string(),
            self.k.to_string(),
            self.checked.to_string(),
            self.valid.to_string(),
            opt(&self.proper),
            opt(&self.closed_ok),
            opt(&self.order),
            opt(&self.claimed_value),
            opt(&self.violation),
        ]
    }
}

impl Tabular for SurveyRow {
    const HEADER: &'static [&'static str] =
        &["family", "params", "n", "k", "theorem", "classifier", "classifier_value", "oracle", "oracle_value", "status"];

    fn cells(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.params.clone(),
            self.n.to_string(),
            self.k.to_string(),
            self.theorem.clone(),
            self.classifier.clone(),
            opt(&self.classifier_value),
            self.oracle.clone(),
            opt(&self.oracle_value),
            self.status.clone(),
        ]
    }
}

impl Tabular for FrontierRow {
    const HEADER: &'static [&'static str] = &["m", "j", "n", "k", "theorem", "classifier", "oracle", "status"];

    fn cells(&self) -> Vec<String> {
        vec![
            self.m.to_string(),
            self.j.to_string(),
            self.n.to_string(),
            self.k.to_string(),
            self.theorem.clone(),
            self.classifier.clone(),
            self.oracle.clone(),
            self.status.clone(),
        ]
    }
}

impl Tabular for AdditivityRow {
    const HEADER: &'static [&'static str] =
        &["family", "params", "n", "k1", "k2", "sum", "sum_value", "k1_value", "k2_value", "rhs_sum", "status"];

    fn cells(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.params.clone(),
            self.n.to_string(),
            self.k1.to_string(),
            self.k2.to_string(),
            self.sum.clone(),
            opt(&self.sum_value),
            opt(&self.k1_value),
            opt(&self.k2_value),
            opt(&self.rhs_sum),
            self.status.clone(),
        ]
    }
}

impl Tabular for IedsRow {
    const HEADER: &'static [&'static str] = &["family", "params", "ieds", "chi", "n", "k", "verdict", "value", "status"];

    fn cells(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.params.clone(),
            join(&self.ieds),
            self.chi.to_string(),
            self.n.to_string(),
            self.k.to_string(),
            self.verdict.clone(),
            opt(&self.value),
            self.status.clone(),
        ]
    }
}

impl Tabular for IedsReport {
    const HEADER: &'static [&'static str] = &["family", "params", "ieds", "source", "n", "k", "coloring", "order", "valid"];

    fn cells(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.params.clone(),
            join(&self.ieds),
            self.source.clone(),
            opt(&self.n),
            opt(&self.k),
            join(&self.coloring),
            opt(&self.order),
            opt(&self.valid),
        ]
    }
}

impl Tabular for SeriesRow {
    const HEADER: &'static [&'static str] = &["index", "alpha", "k", "form"];

    fn cells(&self) -> Vec<String> {
        vec![self.index.to_string(), self.alpha.clone(), self.k.clone(), self.form.clone()]
    }

    fn text(&self) -> String {
        format!("{}, {}", self.index, self.form)
    }
}

/// Renders one record (`single`) or a list of records.
pub fn render<T: Serialize + Tabular>(items: &[T], single: bool, format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Json if single && items.len() == 1 => serde_json::to_string_pretty(&items[0])? + "\n",
        Format::Json => serde_json::to_string_pretty(items)? + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(T::HEADER)?;
            for item in items {
                w.write_record(item.cells())?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => items.iter().map(|i| i.text() + "\n").collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use closed_chroma_core::engine::Labeling;

    fn sample() -> Report {
        let v = Verdict::exists(Some(2), Some(Labeling::new(vec![1, 0, 1, 0, 1, 0])), "oracle");
        Report::from_verdict("cycle", "6", 2, 1, &v)
    }

    #[test]
    fn json_field_order_is_fixed() {
        let text = render(&[sample()], true, Format::Json).unwrap();
        let keys: Vec<usize> = ["\"family\"", "\"params\"", "\"n\"", "\"k\"", "\"verdict\"", "\"value\"", "\"witness\"", "\"source\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(!text.contains("timing_ms"));
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, sample());
    }

    #[test]
    fn csv_and_text() {
        let csv = render(&[sample()], true, Format::Csv).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), Report::HEADER.join(","));
        assert_eq!(lines.next().unwrap(), "cycle,6,2,1,exists,2,1 0 1 0 1 0,oracle,,,,");
        let text = render(&[sample()], true, Format::Text).unwrap();
        assert_eq!(text, "family=cycle params=6 n=2 k=1 verdict=exists value=2 witness=1 0 1 0 1 0 source=oracle\n");
    }
}
