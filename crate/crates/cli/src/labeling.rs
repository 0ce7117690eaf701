//! Labeling files: one integer per line, in vertex index order.

use closed_chroma_core::engine::Labeling;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LabelingError {
    #[error("line {line}: expected an integer label, found `{found}`")]
    Malformed { line: usize, found: String },
}

/// Blank lines and `#` comments are skipped.
pub fn read_labeling(text: &str) -> Result<Labeling, LabelingError> {
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v = line.parse::<i64>().map_err(|_| LabelingError::Malformed { line: i + 1, found: line.to_string() })?;
        values.push(v);
    }
    Ok(Labeling::new(values))
}

pub fn write_labeling(l: &Labeling) -> String {
    l.values().iter().map(|v| format!("{v}\n")).collect()
}
