//! Key-value surface configuration files.
//!
//! Line-oriented, `#` comments, one `key: value` pair per line. Keys:
//!
//! ```text
//! name: p2-double-blowup
//! basis: L F̄ F′                  # whitespace-separated labels
//! alias: Fb = F̄                  # repeatable
//! gram: 1 0 0                    # one row per line, rational entries
//! curve: M = L - F̄ - 2F′        # repeatable, label = class expression
//! mori: F̄                       # repeatable, class expression
//! polarization: 6L - 2F̄ - 3F′
//! ```
//!
//! Aliases apply to the class expressions in the same file.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::lattice::{LatticeSpec, SurfaceLattice};
use crate::parse::parse_coefficients;
use crate::rat::Rat;

pub fn parse_surface_config(text: &str) -> Result<SurfaceLattice, Error> {
    let mut name = String::new();
    let mut basis: Vec<String> = Vec::new();
    let mut aliases: Vec<(String, String)> = Vec::new();
    let mut gram_rows: Vec<Vec<Rat>> = Vec::new();
    let mut curve_lines: Vec<String> = Vec::new();
    let mut mori_lines: Vec<String> = Vec::new();
    let mut polarization_line: Option<String> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| {
            Error::domain(format!("line {}: expected `key: value`", lineno + 1))
        })?;
        let value = value.trim();
        match key.trim() {
            "name" => name = value.to_string(),
            "basis" => {
                basis = value.split_whitespace().map(str::to_string).collect();
            }
            "alias" => {
                let (from, to) = value.split_once('=').ok_or_else(|| {
                    Error::domain(format!("line {}: expected `alias: A = B`", lineno + 1))
                })?;
                aliases.push((from.trim().to_string(), to.trim().to_string()));
            }
            "gram" => {
                let row = value
                    .split_whitespace()
                    .map(|entry| {
                        entry.parse::<Rat>().map_err(|_| {
                            Error::domain(format!(
                                "line {}: invalid rational `{entry}`",
                                lineno + 1
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                gram_rows.push(row);
            }
            "curve" => curve_lines.push(value.to_string()),
            "mori" => mori_lines.push(value.to_string()),
            "polarization" => polarization_line = Some(value.to_string()),
            other => {
                return Err(Error::domain(format!(
                    "line {}: unknown key `{other}`",
                    lineno + 1
                )))
            }
        }
    }

    if basis.is_empty() {
        return Err(Error::domain("missing `basis` line"));
    }

    let alias_map: BTreeMap<String, String> = aliases.iter().cloned().collect();

    let mut curves = Vec::new();
    for line in curve_lines {
        let (label, expr) = line
            .split_once('=')
            .ok_or_else(|| Error::domain(format!("curve line `{line}`: expected `label = class`")))?;
        let coeffs = parse_coefficients(&basis, &alias_map, expr.trim())?;
        curves.push((label.trim().to_string(), coeffs));
    }

    let mut mori = Vec::new();
    for line in mori_lines {
        mori.push(parse_coefficients(&basis, &alias_map, &line)?);
    }

    let polarization_line =
        polarization_line.ok_or_else(|| Error::domain("missing `polarization` line"))?;
    let polarization = parse_coefficients(&basis, &alias_map, &polarization_line)?;

    LatticeSpec {
        name,
        basis_labels: basis,
        gram: gram_rows,
        curves,
        mori,
        polarization,
        aliases,
    }
    .build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::presets;

    #[test]
    fn parses_a_minimal_plane() {
        let text = "\
name: p2
basis: L
alias: H = L
gram: 1
curve: L = L
mori: L
polarization: L
";
        let lat = parse_surface_config(text).unwrap();
        assert_eq!(lat, presets::p2());
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(parse_surface_config("nonsense").is_err());
        assert!(parse_surface_config("basis: a b\n").is_err()); // no polarization
        let bad_gram = "\
name: x
basis: a
gram: nope
polarization: a
";
        assert!(parse_surface_config(bad_gram).is_err());
    }

    #[test]
    fn rational_gram_entries() {
        let text = "\
name: scaled
basis: A B
gram: 1/2 0
gram: 0 -3/2
curve: B = B
mori: B
mori: A
polarization: 3A - B
";
        let lat = parse_surface_config(text).unwrap();
        assert_eq!(lat.gram()[0][0], crate::rat::ratio(1, 2));
        assert_eq!(lat.gram()[1][1], crate::rat::ratio(-3, 2));
    }
}
