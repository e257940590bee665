//! Self-contained report records and their serialization.
//!
//! A record carries the canonical model source, all property booleans, and
//! witness summaries; re-parsing the model and re-evaluating reproduces the
//! booleans. Output is byte-deterministic: keys are sorted, sets are named
//! by point lists, masses print as `p`, `p/q`, or `inf`.

use std::io::{self, Write};

use serde_json::{json, Map, Value};

use crate::enumerate::canonical_form;
use crate::labeled::LabeledPartition;
use crate::parse::serialize_model;
use crate::report::{evaluate_report, Property, PropertyReport};
use crate::space::Space;
use crate::subset::Subset;
use crate::verdict::Witness;

#[derive(Clone, Debug)]
pub struct ReportRecord {
    /// Canonical model source text.
    pub model: String,
    /// Sort key, invariant under point relabeling.
    pub canonical_key: String,
    /// Property flags in `Property::ALL` order.
    pub properties: Vec<(&'static str, bool)>,
    /// Witness summaries keyed by property name.
    pub witnesses: Map<String, Value>,
}

fn set_json(space: &Space, s: Subset) -> Value {
    Value::Array(
        s.iter()
            .map(|p| Value::String(space.points()[p].clone()))
            .collect(),
    )
}

fn partition_json(space: &Space, u: &LabeledPartition) -> Value {
    Value::Array(u.blocks().iter().map(|b| set_json(space, *b)).collect())
}

fn witness_json(space: &Space, witness: &Witness) -> Value {
    match witness {
        Witness::Approximation {
            set,
            approx,
            set_mass,
            approx_mass,
        } => json!({
            "kind": "approximation",
            "set": set_json(space, *set),
            "approx": set_json(space, *approx),
            "set_mass": set_mass.to_string(),
            "approx_mass": approx_mass.to_string(),
        }),
        Witness::Sandwich {
            set,
            kernel,
            hull,
            excess,
        } => json!({
            "kind": "sandwich",
            "set": set_json(space, *set),
            "kernel": set_json(space, *kernel),
            "hull": set_json(space, *hull),
            "excess": excess.to_string(),
        }),
        Witness::InfiniteAtom { atom } => json!({
            "kind": "infinite_atom",
            "atom": set_json(space, *atom),
        }),
        Witness::Point { point } => json!({
            "kind": "point",
            "point": space.points()[*point].clone(),
        }),
        Witness::OpenGap { open, kernel, gap } => json!({
            "kind": "open_gap",
            "open": set_json(space, *open),
            "kernel": set_json(space, *kernel),
            "gap": gap.to_string(),
        }),
        Witness::ClosedPair { first, second } => json!({
            "kind": "closed_pair",
            "first": set_json(space, *first),
            "second": set_json(space, *second),
        }),
        Witness::Restriction { closed, function } => json!({
            "kind": "restriction",
            "closed": set_json(space, *closed),
            "function": partition_json(space, function),
        }),
        Witness::Function { function } => json!({
            "kind": "function",
            "function": partition_json(space, function),
        }),
        Witness::Lusin(w) => {
            let mut obj = json!({
                "kind": "lusin_witness",
                "variant": w.kind.name(),
                "set": set_json(space, w.set),
            });
            if let Some(g) = &w.extension {
                obj["extension"] = partition_json(space, g);
            }
            obj
        }
        Witness::Rep(w) => json!({
            "kind": "representative",
            "null_set": set_json(space, w.null_set),
            "representative": partition_json(space, &w.representative),
        }),
    }
}

/// Builds the record for a space from an already computed report.
pub fn record_from_report(space: &Space, report: &PropertyReport) -> ReportRecord {
    let mut witnesses = Map::new();
    for p in Property::ALL {
        if let Some(w) = &report.verdict(p).witness {
            witnesses.insert(p.name().to_string(), witness_json(space, w));
        }
    }
    ReportRecord {
        model: serialize_model(space),
        canonical_key: canonical_form(space).to_string(),
        properties: Property::ALL
            .into_iter()
            .map(|p| (p.name(), report.holds(p)))
            .collect(),
        witnesses,
    }
}

/// Evaluates the space and builds its record.
pub fn record_for(space: &Space) -> ReportRecord {
    record_from_report(space, &evaluate_report(space))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Human,
    Jsonl,
}

impl ReportRecord {
    pub fn to_json(&self) -> Value {
        let mut properties = Map::new();
        for (name, holds) in &self.properties {
            properties.insert(name.to_string(), Value::Bool(*holds));
        }
        json!({
            "model": self.model,
            "properties": Value::Object(properties),
            "witnesses": Value::Object(self.witnesses.clone()),
        })
    }
}

/// Writes records: `Jsonl` emits one self-contained object per line,
/// `Human` an aligned `name=value` table with the condensed model source in
/// the first column.
pub fn write_report(
    records: &[ReportRecord],
    format: ReportFormat,
    sink: &mut dyn Write,
) -> io::Result<()> {
    match format {
        ReportFormat::Jsonl => {
            for r in records {
                serde_json::to_writer(&mut *sink, &r.to_json())?;
                sink.write_all(b"\n")?;
            }
        }
        ReportFormat::Human => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    let mut row = vec![r.model.trim_end().replace('\n', "; ")];
                    row.extend(
                        r.properties
                            .iter()
                            .map(|(name, holds)| format!("{name}={holds}")),
                    );
                    row
                })
                .collect();
            let columns = rows.first().map_or(0, Vec::len);
            let widths: Vec<usize> = (0..columns)
                .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            for row in &rows {
                let mut line = String::new();
                for (c, cell) in row.iter().enumerate() {
                    if c > 0 {
                        line.push_str("  ");
                    }
                    line.push_str(cell);
                    if c + 1 < row.len() {
                        line.push_str(&" ".repeat(widths[c].saturating_sub(cell.len())));
                    }
                }
                writeln!(sink, "{}", line.trim_end())?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::parse::parse_model;

    #[test]
    fn jsonl_is_one_line_per_record() {
        let record = record_for(&builtin("dirac"));
        let mut buf = Vec::new();
        write_report(&[record], ReportFormat::Jsonl, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn human_row_spells_out_flags() {
        let record = record_for(&builtin("dirac"));
        let mut buf = Vec::new();
        write_report(&[record], ReportFormat::Human, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("strong_lusin=true"), "{text}");
        assert!(text.contains("normal=false"));
    }

    #[test]
    fn empty_record_list_writes_nothing() {
        let mut buf = Vec::new();
        write_report(&[], ReportFormat::Jsonl, &mut buf).unwrap();
        write_report(&[], ReportFormat::Human, &mut buf).unwrap();
        assert!(buf.is_empty());
    }

    #[test]
    fn records_are_self_contained() {
        for name in ["outer-not-inner", "weak-lusin-only", "counting"] {
            let record = record_for(&builtin(name));
            let reparsed = parse_model(&record.model).unwrap();
            let fresh = record_for(&reparsed);
            assert_eq!(record.properties, fresh.properties, "{name}");
            assert_eq!(record.canonical_key, fresh.canonical_key, "{name}");
        }
    }

    #[test]
    fn witness_sets_are_named_by_points() {
        let record = record_for(&builtin("outer-not-inner"));
        let inner = record.witnesses.get("inner").unwrap();
        assert_eq!(inner["kind"], "approximation");
        assert_eq!(inner["set"], serde_json::json!(["a"]));
    }
}
