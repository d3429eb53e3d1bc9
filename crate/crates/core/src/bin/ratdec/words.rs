//! Word files: whitespace-separated element encodings, one word per line.

use anyhow::{bail, Context, Result};
use ratdec::{Elem, Field};
use std::path::Path;

pub fn read_words(path: &Path, field: &Field) -> Result<Vec<Vec<Elem>>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, line)| {
            line.split_whitespace()
                .map(|tok| {
                    let v: u32 = tok
                        .parse()
                        .with_context(|| format!("{}:{}: bad integer {tok:?}", path.display(), i + 1))?;
                    field
                        .elem(v)
                        .with_context(|| format!("{}:{}", path.display(), i + 1))
                })
                .collect()
        })
        .collect()
}

/// The single word in `path`.
pub fn read_word(path: &Path, field: &Field, len: usize) -> Result<Vec<Elem>> {
    let mut words = read_words(path, field)?;
    if words.len() != 1 {
        bail!("{}: expected one word, found {}", path.display(), words.len());
    }
    let w = words.pop().expect("one word");
    if w.len() != len {
        bail!("{}: word has {} symbols, expected {len}", path.display(), w.len());
    }
    Ok(w)
}

pub fn format_word(w: &[Elem]) -> String {
    let mut s = w.iter().map(|e| e.value().to_string()).collect::<Vec<_>>().join(" ");
    s.push('\n');
    s
}
