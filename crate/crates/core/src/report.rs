//! Rendering of reports as TSV (stable column order) and human-readable
//! text.

use crate::chartab::CharTable;
use crate::group::Group;
use crate::smith::SmithReport;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Text,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "tsv" => Some(Format::Tsv),
            "text" => Some(Format::Text),
            _ => None,
        }
    }
}

/// Character table export: header rows with class representative orders and
/// sizes, then one row per irreducible with exact values and a decimal
/// approximation column appended.
pub fn render_chartab(g: &Group, table: &CharTable, format: Format) -> String {
    let cls = g.classes();
    let mut out = String::new();
    match format {
        Format::Tsv => {
            out.push_str("order");
            for i in 0..cls.len() {
                out.push_str(&format!("\t{}", cls.orders[i]));
            }
            out.push('\n');
            out.push_str("size");
            for i in 0..cls.len() {
                out.push_str(&format!("\t{}", cls.sizes[i]));
            }
            out.push('\n');
            for (r, chi) in table.chars.iter().enumerate() {
                out.push_str(&format!("X{}", r + 1));
                for v in &chi.values {
                    out.push_str(&format!("\t{}", v.fmt_exact()));
                }
                // Decimal approximation of the whole row.
                let approx: Vec<String> = chi
                    .values
                    .iter()
                    .map(|v| {
                        let (re, im) = v.to_f64();
                        if im.abs() < 1e-9 {
                            format!("{re:.4}")
                        } else {
                            format!("{re:.4}{im:+.4}i")
                        }
                    })
                    .collect();
                out.push_str(&format!("\t{}\n", approx.join(",")));
            }
        }
        Format::Text => {
            out.push_str(&format!(
                "character table: {} classes, group order {}\n",
                cls.len(),
                g.order()
            ));
            out.push_str("class orders: ");
            out.push_str(
                &cls.orders
                    .iter()
                    .map(|o| o.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push('\n');
            for (r, chi) in table.chars.iter().enumerate() {
                let vals: Vec<String> = chi.values.iter().map(|v| v.fmt_exact()).collect();
                out.push_str(&format!("X{}: {}\n", r + 1, vals.join("  ")));
            }
        }
    }
    out
}

pub fn render_smith_report(
    report: &SmithReport,
    waive_orientability: bool,
    format: Format,
) -> String {
    let names = [
        "reduced-primary-difference",
        "weak-gap",
        "dimension-floors",
        "isotropy-occurrence",
        "large-vanishing",
        "equal-dimension>=6",
    ];
    let mut rows: Vec<(String, bool, String)> = Vec::new();
    for (name, cond) in names.iter().zip(&report.conditions) {
        rows.push((
            name.to_string(),
            cond.pass,
            cond.witness.clone().unwrap_or_default(),
        ));
    }
    rows.push((
        "p-oriented-u".into(),
        report.oriented_u.pass,
        report.oriented_u.witness.clone().unwrap_or_default(),
    ));
    rows.push((
        "p-oriented-v".into(),
        report.oriented_v.pass,
        report.oriented_v.witness.clone().unwrap_or_default(),
    ));
    rows.push((
        "overall".into(),
        report.overall(waive_orientability),
        if report.isomorphic_pair {
            "note: U and V are isomorphic".into()
        } else {
            String::new()
        },
    ));
    match format {
        Format::Tsv => {
            let mut out = String::from("condition\tverdict\twitness\n");
            for (name, pass, witness) in rows {
                out.push_str(&format!(
                    "{name}\t{}\t{witness}\n",
                    if pass { "pass" } else { "FAIL" }
                ));
            }
            out
        }
        Format::Text => {
            let mut out = format!("dim U = {}, dim V = {}\n", report.dim_u, report.dim_v);
            for (name, pass, witness) in rows {
                if witness.is_empty() {
                    out.push_str(&format!(
                        "{:28} {}\n",
                        name,
                        if pass { "pass" } else { "FAIL" }
                    ));
                } else {
                    out.push_str(&format!(
                        "{:28} {}  ({witness})\n",
                        name,
                        if pass { "pass" } else { "FAIL" }
                    ));
                }
            }
            out
        }
    }
}
