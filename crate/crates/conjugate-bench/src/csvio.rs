//! Shared CSV layout for sampled data: `index,coordinate,re,im`.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub(crate) const HEADER: &str = "index,coordinate,re,im";

/// Writes rows in the common layout. Coordinates and values are printed with
/// 17 significant digits so a read-back reproduces the exact f64 bits.
pub(crate) fn write_rows(coords: impl Iterator<Item = f64>, values: &[Complex64]) -> String {
    let mut out = String::with_capacity(64 * (values.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for (i, (u, v)) in coords.zip(values.iter()).enumerate() {
        out.push_str(&format!("{i},{:.16e},{:.16e},{:.16e}\n", u, v.re, v.im));
    }
    out
}

/// Parses the common layout back into coordinates and complex values.
pub(crate) fn read_rows(text: &str) -> Result<(Vec<f64>, Vec<Complex64>)> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == HEADER => {}
        Some(h) => {
            return Err(Error::InvalidParameter(format!(
                "csv header must be `{HEADER}`, got `{}`",
                h.trim()
            )))
        }
        None => return Err(Error::EmptyInput("csv text has no header".into())),
    }

    let mut coords = Vec::new();
    let mut values = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let mut next = |name: &str| {
            fields
                .next()
                .ok_or_else(|| {
                    Error::InvalidParameter(format!("row {lineno}: missing field `{name}`"))
                })
                .and_then(|s| {
                    s.trim().parse::<f64>().map_err(|_| {
                        Error::InvalidParameter(format!(
                            "row {lineno}: field `{name}` is not a number: `{}`",
                            s.trim()
                        ))
                    })
                })
        };
        let index = next("index")?;
        if index != values.len() as f64 {
            return Err(Error::InvalidParameter(format!(
                "row {lineno}: index {index} out of order (expected {})",
                values.len()
            )));
        }
        coords.push(next("coordinate")?);
        values.push(Complex64::new(next("re")?, next("im")?));
    }
    Ok((coords, values))
}
