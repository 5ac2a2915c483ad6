//! Corpus files: one `label a1 a2 a3 a4` entry per line, `#` starts a comment.

use monogen_core::QuarticGenerator;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub line: usize,
    pub label: String,
    pub generator: QuarticGenerator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejected {
    pub line: usize,
    pub label: String,
    pub reason: String,
}

pub fn parse_corpus(text: &str) -> Vec<Result<CorpusEntry, Rejected>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("").trim();
            (!content.is_empty()).then(|| parse_line(i + 1, content))
        })
        .collect()
}

fn parse_line(line: usize, content: &str) -> Result<CorpusEntry, Rejected> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    let label = fields[0].to_string();
    let reject = |reason: String| Rejected { line, label: label.clone(), reason };
    if fields.len() != 5 {
        return Err(reject(format!("expected a label and 4 coefficients, found {} fields", fields.len())));
    }
    let mut coeffs = Vec::with_capacity(4);
    for f in &fields[1..] {
        let c: BigInt = f.parse().map_err(|_| reject(format!("not an integer: {f}")))?;
        coeffs.push(c);
    }
    let [a1, a2, a3, a4]: [BigInt; 4] = coeffs.try_into().unwrap();
    let generator = QuarticGenerator::new(a1, a2, a3, a4).map_err(|e| reject(e.to_string()))?;
    Ok(CorpusEntry { line, label, generator })
}

/// File-name safe version of a label.
pub fn file_stem(label: &str) -> String {
    label
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}
