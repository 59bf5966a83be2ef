//! Interchange formats.
//!
//! Spectrum JSON: `{"n": int, "coefficients": [{"subset": [..], "value": f}]}`
//! with unique subsets given as ascending 1-based coordinate lists.
//! Truth-table text: a header line `n=<int>` followed by 2^n
//! whitespace-separated values in row-index order.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cube::{BooleanFunction, FourierSpectrum};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct SpectrumJson {
    n: u32,
    coefficients: Vec<CoefficientJson>,
}

#[derive(Serialize, Deserialize)]
struct CoefficientJson {
    subset: Vec<u32>,
    value: f64,
}

/// Bit mask → ascending 1-based subset.
pub fn mask_to_subset(mask: u64) -> Vec<u32> {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

/// Ascending 1-based subset → bit mask; rejects out-of-range, unsorted, and
/// repeated coordinates.
pub fn subset_to_mask(subset: &[u32], n: u32) -> Result<u64> {
    let mut mask = 0u64;
    let mut prev = 0u32;
    for &i in subset {
        if i == 0 || i > n {
            return Err(Error::invalid(format!(
                "subset element {i} out of range 1..={n}"
            )));
        }
        if i <= prev {
            return Err(Error::invalid(
                "subset must be strictly ascending".to_string(),
            ));
        }
        prev = i;
        mask |= 1u64 << (i - 1);
    }
    Ok(mask)
}

impl Serialize for FourierSpectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coefficients = self
            .coefficients()
            .iter()
            .map(|(&mask, &value)| CoefficientJson {
                subset: mask_to_subset(mask),
                value,
            })
            .collect();
        SpectrumJson {
            n: self.n(),
            coefficients,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FourierSpectrum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SpectrumJson::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(raw.coefficients.len());
        for c in &raw.coefficients {
            let mask = subset_to_mask(&c.subset, raw.n).map_err(D::Error::custom)?;
            coeffs.push((mask, c.value));
        }
        FourierSpectrum::new(raw.n, coeffs).map_err(D::Error::custom)
    }
}

pub fn spectrum_to_json(s: &FourierSpectrum) -> Result<String> {
    Ok(serde_json::to_string_pretty(s)?)
}

pub fn spectrum_from_json(text: &str) -> Result<FourierSpectrum> {
    Ok(serde_json::from_str(text)?)
}

/// Renders the truth-table text format, 8 values per line.
pub fn write_truth_table(f: &BooleanFunction) -> String {
    let mut out = format!("n={}\n", f.n());
    for chunk in f.values().chunks(8) {
        let line: Vec<String> = chunk.iter().map(|v| crate::report::fmt_float(*v)).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the truth-table text format; errors carry 1-based line numbers.
pub fn read_truth_table(text: &str) -> Result<BooleanFunction> {
    let mut lines = text.lines().enumerate();
    let (header_line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| Error::Parse {
            line: 1,
            msg: "empty input, expected header n=<int>".to_string(),
        })?;
    let n: u32 = header
        .trim()
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::Parse {
            line: header_line + 1,
            msg: format!("expected header n=<int>, got '{}'", header.trim()),
        })?;
    if n == 0 || n > crate::cube::MAX_DENSE_N {
        return Err(Error::Parse {
            line: header_line + 1,
            msg: format!("dimension {n} outside 1..={}", crate::cube::MAX_DENSE_N),
        });
    }
    let expected = 1usize << n;
    let mut values = Vec::with_capacity(expected);
    for (idx, line) in lines {
        for token in line.split_whitespace() {
            let v: f64 = token.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("invalid value '{token}'"),
            })?;
            values.push(v);
            if values.len() > expected {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("more than 2^{n} = {expected} values"),
                });
            }
        }
    }
    if values.len() != expected {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("expected 2^{n} = {expected} values, got {}", values.len()),
        });
    }
    BooleanFunction::new(n, values)
}
