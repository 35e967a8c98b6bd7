//! Text formats: array records (`.arr`), matrix files (`.hm`), and
//! checkpoint files (`.ckpt`).
//!
//! An array record is one line of three whitespace-separated fields: a
//! group spec (`Z57`, `Z3xZ19`, `Z2xZ5^2`), an alphabet tag (`pm1` or
//! `zo`), and the values in flat-index order (`+`/`-` for `pm1`, `1`/`0`
//! for `zo`). Blank lines and lines starting with `#` are ignored; a pair
//! file holds two records on one group.

use anyhow::{bail, Context, Result};
use lpair_core::{Alphabet, FiniteAbelianGroup, GArray, PairRecord};
use std::path::Path;

pub fn parse_array_line(line: &str) -> Result<GArray> {
    let mut fields = line.split_whitespace();
    let (Some(spec), Some(tag), Some(payload), None) =
        (fields.next(), fields.next(), fields.next(), fields.next())
    else {
        bail!("expected '<group> <alphabet> <payload>', got '{line}'");
    };
    let group = FiniteAbelianGroup::parse_spec(spec)?;
    let alphabet = Alphabet::parse(tag)?;
    let mut values = Vec::with_capacity(payload.len());
    for c in payload.chars() {
        values.push(match (alphabet, c) {
            (Alphabet::PlusMinus, '+') => 1,
            (Alphabet::PlusMinus, '-') => -1,
            (Alphabet::ZeroOne, '1') => 1,
            (Alphabet::ZeroOne, '0') => 0,
            _ => bail!("character '{c}' is not in the {} alphabet", alphabet.name()),
        });
    }
    Ok(GArray::new(group, alphabet, values)?)
}

pub fn array_line(a: &GArray) -> String {
    let payload: String = a
        .values()
        .iter()
        .map(|&v| match (a.alphabet(), v) {
            (Alphabet::PlusMinus, 1) => '+',
            (Alphabet::PlusMinus, _) => '-',
            (Alphabet::ZeroOne, 1) => '1',
            (Alphabet::ZeroOne, _) => '0',
        })
        .collect();
    format!(
        "{} {} {}",
        a.group().spec_string(),
        a.alphabet().name(),
        payload
    )
}

pub fn read_arrays(path: &Path) -> Result<Vec<GArray>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut arrays = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        arrays
            .push(parse_array_line(line).with_context(|| format!("{}:{}", path.display(), i + 1))?);
    }
    if arrays.is_empty() {
        bail!("{} contains no array records", path.display());
    }
    Ok(arrays)
}

pub fn read_pair(path: &Path) -> Result<PairRecord> {
    let arrays = read_arrays(path)?;
    let [a, b] = <[GArray; 2]>::try_from(arrays).map_err(|v| {
        anyhow::anyhow!(
            "{} holds {} arrays, expected a pair",
            path.display(),
            v.len()
        )
    })?;
    Ok(PairRecord::new(a, b)?)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
