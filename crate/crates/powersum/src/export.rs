//! Text formats: CSV tables, JSON sidecars, and DOT graphs.
//!
//! Everything here is deterministic string assembly so callers can write
//! files byte-identically across reruns. Floats are printed with 17
//! significant digits, which round-trips `f64` exactly.

use serde_json::{json, Value};

use crate::characters::CharacterTable;
use crate::kernel::{ClassKernelTable, Gram};
use crate::perm::Permutation;
use crate::scalar::Scalar;

/// 17 significant digits: round-trip safe for `f64`.
pub fn format_scalar<S: Scalar>(v: S) -> String {
    format!("{:.16e}", v.to_double())
}

/// RFC 4180 quoting: fields containing commas, quotes or newlines get
/// wrapped, with inner quotes doubled.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Dense Gram CSV: header row of permutation strings, then one row of
/// kernel values per point.
pub fn gram_csv<S: Scalar>(gram: &Gram<S>) -> String {
    let mut out = String::new();
    let header: Vec<String> = gram.points().iter().map(|p| csv_field(&p.to_string())).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for i in 0..gram.dim() {
        let row: Vec<String> = gram.row(i).iter().map(|&v| format_scalar(v)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Metadata sidecar for a Gram export.
pub fn gram_sidecar<S: Scalar>(
    gram: &Gram<S>,
    seed: Option<u64>,
    version: &str,
    min_eigenvalue: Option<f64>,
) -> Value {
    json!({
        "n": gram.params().degree(),
        "m": gram.params().m(),
        "z": gram.params().z().iter().map(|v| v.to_double()).collect::<Vec<_>>(),
        "normalized": gram.params().is_normalized(),
        "seed": seed,
        "points": gram.dim(),
        "min_eigenvalue": min_eigenvalue,
        "version": version,
    })
}

/// Sample matrix CSV: header row of points, one row per draw.
pub fn samples_csv<S: Scalar>(points: &[Permutation], draws: &[Vec<S>]) -> String {
    let mut out = String::new();
    let header: Vec<String> = points.iter().map(|p| csv_field(&p.to_string())).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for draw in draws {
        let row: Vec<String> = draw.iter().map(|&v| format_scalar(v)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Metadata sidecar for a sample export.
pub fn samples_sidecar<S: Scalar>(
    n: usize,
    z: &[S],
    seed: u64,
    method: &str,
    draws: usize,
    version: &str,
) -> Value {
    json!({
        "n": n,
        "m": z.len(),
        "z": z.iter().map(|v| v.to_double()).collect::<Vec<_>>(),
        "seed": seed,
        "method": method,
        "draws": draws,
        "version": version,
    })
}

/// Per-class kernel values: `partition,kernel_value` rows.
pub fn class_table_csv<S: Scalar>(table: &ClassKernelTable<S>) -> String {
    let mut out = String::from("partition,kernel_value\n");
    for (partition, value) in &table.classes {
        out.push_str(&csv_field(&partition.to_string()));
        out.push(',');
        out.push_str(&format_scalar(*value));
        out.push('\n');
    }
    out
}

/// Quotient graph in DOT: one vertex per conjugacy class labeled by its
/// cycle type, one edge per split/merge adjacency.
pub fn class_graph_dot<S: Scalar>(table: &ClassKernelTable<S>) -> String {
    let mut out = String::from("graph conjugacy_classes {\n");
    for (i, (partition, value)) in table.classes.iter().enumerate() {
        out.push_str(&format!(
            "  c{} [label=\"{}\", kernel=\"{}\"];\n",
            i,
            partition,
            format_scalar(*value)
        ));
    }
    for &(i, j) in &table.edges {
        out.push_str(&format!("  c{} -- c{};\n", i, j));
    }
    out.push_str("}\n");
    out
}

/// Character table CSV: first column the representation, remaining columns
/// one conjugacy class each, integer entries.
pub fn character_table_csv(table: &CharacterTable) -> String {
    let mut out = String::from("lambda");
    for mu in table.partitions() {
        out.push(',');
        out.push_str(&csv_field(&format!("({})", mu)));
    }
    out.push('\n');
    for (i, lambda) in table.partitions().iter().enumerate() {
        out.push_str(&csv_field(&format!("({})", lambda)));
        for j in 0..table.partitions().len() {
            out.push(',');
            out.push_str(&table.value(i, j).to_string());
        }
        out.push('\n');
    }
    out
}
