//! Input resolution: truth-table files, spectrum JSON files, stdin, and
//! inline generator specs.
//!
//! Generator specs:
//!
//! ```text
//! maj:<d>                majority on d (odd) coordinates
//! dict:<n>:<i>           the dictator x_i on n coordinates
//! const:<n>:<c>          the constant c
//! random:<n>:<d>:<seed>  seeded normal coefficients on levels 0..=d
//! ```

use std::io::Read;

use bspec_core::cube::{BooleanFunction, FourierSpectrum};
use bspec_core::error::{Error, Result};
use bspec_core::io::{read_truth_table, spectrum_from_json};
use bspec_core::witness::{majority, RandomSpectrum};

pub enum LoadedInput {
    Table(BooleanFunction),
    Spectrum(FourierSpectrum),
}

impl LoadedInput {
    pub fn into_spectrum(self) -> FourierSpectrum {
        match self {
            LoadedInput::Table(f) => f.walsh_transform(),
            LoadedInput::Spectrum(s) => s,
        }
    }
}

pub fn load_input(raw: &str) -> Result<LoadedInput> {
    if let Some(generated) = try_generator(raw)? {
        return Ok(generated);
    }
    let text = if raw == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(raw)?
    };
    if text.trim_start().starts_with('{') {
        Ok(LoadedInput::Spectrum(spectrum_from_json(&text)?))
    } else {
        Ok(LoadedInput::Table(read_truth_table(&text)?))
    }
}

fn try_generator(raw: &str) -> Result<Option<LoadedInput>> {
    let Some((kind, rest)) = raw.split_once(':') else {
        return Ok(None);
    };
    let parts: Vec<&str> = rest.split(':').collect();
    let parsed = match kind {
        "maj" => {
            let d = parse_num::<u32>(raw, parts.first())?;
            LoadedInput::Table(majority(d)?)
        }
        "dict" => {
            let n = parse_num::<u32>(raw, parts.first())?;
            let i = parse_num::<usize>(raw, parts.get(1))?;
            if i == 0 || i > n as usize {
                return Err(Error::InvalidArgument(format!(
                    "dictator coordinate {i} out of range 1..={n}"
                )));
            }
            LoadedInput::Table(BooleanFunction::from_point_fn(n, |x| x[i - 1])?)
        }
        "const" => {
            let n = parse_num::<u32>(raw, parts.first())?;
            let c = parse_num::<f64>(raw, parts.get(1))?;
            LoadedInput::Table(BooleanFunction::constant(n, c)?)
        }
        "random" => {
            let n = parse_num::<u32>(raw, parts.first())?;
            let d = parse_num::<u32>(raw, parts.get(1))?;
            let seed = parse_num::<u64>(raw, parts.get(2))?;
            LoadedInput::Spectrum(RandomSpectrum::new(n, d).generate(seed, 0)?)
        }
        _ => return Ok(None),
    };
    Ok(Some(parsed))
}

fn parse_num<T: std::str::FromStr>(spec: &str, part: Option<&&str>) -> Result<T> {
    part.and_then(|p| p.parse().ok())
        .ok_or_else(|| Error::InvalidArgument(format!("malformed generator spec '{spec}'")))
}
