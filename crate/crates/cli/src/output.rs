use serde::Serialize;

use spex::search::{ExtremalResult, TheoremReport};

use super::EnumerationRow;

#[derive(Debug, Clone, Copy)]
pub enum Format {
    Json,
    Csv,
}

/// A report held both as JSON and, where a table makes sense, as CSV rows.
pub struct Rendered {
    json: serde_json::Value,
    table: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
}

impl Rendered {
    pub fn json<T: Serialize>(value: &T) -> Self {
        Rendered {
            json: serde_json::to_value(value).expect("reports serialize"),
            table: None,
        }
    }

    pub fn enumeration(rows: Vec<EnumerationRow>) -> Self {
        let table = rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.beta.map(|b| b.to_string()).unwrap_or_default(),
                    r.count.to_string(),
                ]
            })
            .collect();
        Rendered {
            table: Some((vec!["n", "beta", "count"], table)),
            ..Self::json(&rows)
        }
    }

    pub fn argmin(results: Vec<ExtremalResult>) -> Self {
        let table = results
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.beta.to_string(),
                    r.tree_count.to_string(),
                    r.min_rho.enclosure.lo.to_decimal_string(),
                    r.min_rho.enclosure.hi.to_decimal_string(),
                    r.min_rho.enclosure.width().to_decimal_string(),
                    families_cell(
                        r.argmin
                            .iter()
                            .map(|m| m.families.iter().map(|f| f.to_string()).collect()),
                    ),
                    r.argmin
                        .iter()
                        .map(|m| m.canonical.to_string())
                        .collect::<Vec<_>>()
                        .join(";"),
                    r.ties_certified.to_string(),
                ]
            })
            .collect();
        let header = vec![
            "n",
            "beta",
            "tree_count",
            "rho_lo",
            "rho_hi",
            "width",
            "argmin_families",
            "argmin_codes",
            "ties_certified",
        ];
        Rendered {
            table: Some((header, table)),
            ..Self::json(&results)
        }
    }

    pub fn verify(report: TheoremReport) -> Self {
        let (header, rows) = if let Some(check) = &report.graph_check {
            (
                vec!["theorem", "seed", "samples", "n_min", "n_max", "failures"],
                vec![vec![
                    report.theorem.to_string(),
                    check.seed.to_string(),
                    check.samples.to_string(),
                    check.n_min.to_string(),
                    check.n_max.to_string(),
                    check.failures.len().to_string(),
                ]],
            )
        } else {
            let rows = report
                .entries
                .iter()
                .map(|e| {
                    let enc = e.min_rho_enclosure.as_ref();
                    vec![
                        report.theorem.to_string(),
                        e.n.to_string(),
                        e.beta.to_string(),
                        e.tree_count.to_string(),
                        enc.map(|x| x.lo.to_decimal_string()).unwrap_or_default(),
                        enc.map(|x| x.hi.to_decimal_string()).unwrap_or_default(),
                        families_cell(e.family_matches.iter().cloned()),
                        e.prediction
                            .as_ref()
                            .map(|p| p.join(";"))
                            .unwrap_or_default(),
                        e.asserted.to_string(),
                        e.agrees.map(|a| a.to_string()).unwrap_or_default(),
                        e.note.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            (
                vec![
                    "theorem",
                    "n",
                    "beta",
                    "tree_count",
                    "rho_lo",
                    "rho_hi",
                    "argmin_families",
                    "prediction",
                    "asserted",
                    "agrees",
                    "note",
                ],
                rows,
            )
        };
        Rendered {
            table: Some((header, rows)),
            ..Self::json(&report)
        }
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => {
                Ok(serde_json::to_string_pretty(&self.json).expect("values serialize") + "\n")
            }
            Format::Csv => {
                let (header, rows) = self
                    .table
                    .as_ref()
                    .ok_or("CSV output is available for enumerate, argmin and verify")?;
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(header).map_err(|e| e.to_string())?;
                for row in rows {
                    w.write_record(row).map_err(|e| e.to_string())?;
                }
                String::from_utf8(w.into_inner().map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())
            }
        }
    }
}

/// Family names per minimizer, `|` between minimizers and `;` between aliases.
fn families_cell(groups: impl Iterator<Item = Vec<String>>) -> String {
    groups.map(|g| g.join(";")).collect::<Vec<_>>().join("|")
}
