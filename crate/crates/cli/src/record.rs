//! Machine-readable output records and their JSON Lines / CSV emitters.

use std::io::{self, Write};

use clap::ValueEnum;
use frusta::{DerivedQuantities, Frustum, FrustumError};
use serde::{Deserialize, Serialize};

/// One frustum per record; identical field set in both output formats.
///
/// The volume is serialized as an exact numerator/denominator pair, never a
/// float. `volume_den` is 1 whenever `is_integral` is true.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    #[serde(rename = "H")]
    pub h: i64,
    pub t: i64,
    pub x: i64,
    pub y: i64,
    pub volume_num: i64,
    pub volume_den: i64,
    #[serde(rename = "N")]
    pub base_gcd: i64,
    #[serde(rename = "M")]
    pub top_gcd: i64,
    pub k1: i64,
    pub k2: i64,
    pub is_square: bool,
    pub is_integral: bool,
}

impl OutputRecord {
    pub fn from_parts(frustum: &Frustum, derived: &DerivedQuantities) -> Result<Self, FrustumError> {
        let dec = frustum.decomposition()?;
        Ok(OutputRecord {
            a: frustum.a(),
            b: frustum.b(),
            c: frustum.c(),
            d: frustum.d(),
            h: frustum.height(),
            t: frustum.edge(),
            x: derived.x,
            y: derived.y,
            volume_num: derived.volume.numerator(),
            volume_den: derived.volume.denominator(),
            base_gcd: dec.base_gcd,
            top_gcd: dec.top_gcd,
            k1: dec.k1,
            k2: dec.k2,
            is_square: derived.is_square,
            is_integral: derived.is_integral,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    #[default]
    Jsonl,
    /// Header row plus one row per record.
    Csv,
}

pub fn emit(records: &[OutputRecord], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Jsonl => {
            for record in records {
                serde_json::to_writer(&mut *out, record)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            for record in records {
                writer.serialize(record)?;
            }
            writer.flush()?;
        }
    }
    Ok(())
}
