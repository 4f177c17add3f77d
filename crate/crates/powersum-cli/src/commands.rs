//! Implementations of the non-verify subcommands.

use std::fs;

use powersum::characters::{character_table, Characters};
use powersum::export;
use powersum::kernel::{class_kernel_table, gram as build_gram, KernelParams};
use powersum::perm::{enumerate_group_with_cap, Permutation};
use powersum::sampler::exact::factorize;
use powersum::sampler::features::{build_feature_basis, build_truncated_basis, full_rank_count};
use powersum::{Error, KernelParams64};

use crate::{CliError, CliResult, VERSION};

/// Default degree caps: enumeration-backed commands refuse larger groups.
const EXACT_SAMPLING_CAP: usize = 7;
const ENUMERATION_CAP: usize = 7;
const CHAR_TABLE_CAP: usize = 8;

/// Parses one z component: a decimal or a fraction `a/b`.
fn parse_z_component(tok: &str) -> Result<f64, CliError> {
    let tok = tok.trim();
    if let Some((num, den)) = tok.split_once('/') {
        let a: f64 = num
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("--z: bad fraction numerator {:?}", num)))?;
        let b: f64 = den
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("--z: bad fraction denominator {:?}", den)))?;
        if b == 0.0 {
            return Err(CliError::Usage("--z: zero denominator".into()));
        }
        Ok(a / b)
    } else {
        tok.parse()
            .map_err(|_| CliError::Usage(format!("--z: bad value {:?}", tok)))
    }
}

pub fn parse_z(spec: &str) -> Result<Vec<f64>, CliError> {
    spec.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_z_component)
        .collect()
}

pub fn make_params(n: usize, z_spec: &str, normalize: bool) -> Result<KernelParams64, CliError> {
    let z = parse_z(z_spec)?;
    let params = if normalize {
        KernelParams::normalized(z, n)
    } else {
        KernelParams::new(z, n)
    }?;
    Ok(params)
}

fn parse_perm(s: &str, n: usize) -> Result<Permutation, CliError> {
    let p: Permutation = s.parse().map_err(CliError::Lib)?;
    if p.degree() != n {
        return Err(CliError::Lib(Error::DegreeMismatch {
            left: p.degree(),
            right: n,
        }));
    }
    Ok(p)
}

/// Point list: one permutation per line, blank lines and `#` comments
/// skipped; defaults to the whole group when no file is given.
fn load_points(path: Option<&str>, n: usize, cap: usize) -> Result<Vec<Permutation>, CliError> {
    match path {
        Some(path) => {
            let text =
                fs::read_to_string(path).map_err(|e| CliError::Io(path.to_string(), e))?;
            let mut out = Vec::new();
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                out.push(parse_perm(line, n)?);
            }
            if out.is_empty() {
                return Err(CliError::Usage(format!("{}: no points", path)));
            }
            Ok(out)
        }
        None => Ok(enumerate_group_with_cap(n, cap)?),
    }
}

fn write_file(path: &str, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Io(path.to_string(), e))
}

pub fn kernel(
    n: usize,
    z_spec: &str,
    g_spec: &str,
    h_spec: Option<&str>,
    normalize: bool,
) -> CliResult {
    let params = make_params(n, z_spec, normalize)?;
    let g = parse_perm(g_spec, n)?;
    let h = match h_spec {
        Some(s) => parse_perm(s, n)?,
        None => Permutation::identity(n),
    };
    let value = params.kernel_eval(&g, &h)?;
    let quotient = g.compose(&h.inverse())?;
    println!("{}", export::format_scalar(value));
    println!("cycle_type(g h^-1) = {}", quotient.cycle_type());
    Ok(true)
}

pub fn gram(
    n: usize,
    z_spec: &str,
    out: &str,
    points_path: Option<&str>,
    normalize: bool,
    seed: Option<u64>,
) -> CliResult {
    let params = make_params(n, z_spec, normalize)?;
    let points = load_points(points_path, n, ENUMERATION_CAP)?;
    let gm = build_gram(&params, &points)?;
    let min_eig = gm.min_eigenvalue()?;
    let psd = min_eig >= -1e-9 * gm.dim() as f64;
    write_file(out, &export::gram_csv(&gm))?;
    let sidecar = export::gram_sidecar(&gm, seed, VERSION, Some(min_eig));
    write_file(&format!("{}.json", out), &format!("{:#}\n", sidecar))?;
    println!(
        "gram: {} points, min eigenvalue {:e}, psd {}",
        gm.dim(),
        min_eig,
        if psd { "pass" } else { "FAIL" }
    );
    Ok(psd)
}

/// Mixes a draw index into a base seed (splitmix-style) so that per-draw
/// feature bases are independent but reproducible.
fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut x = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

#[allow(clippy::too_many_arguments)]
pub fn sample(
    mode: &str,
    n: usize,
    z_spec: &str,
    count: usize,
    l: usize,
    r: Option<usize>,
    seed: u64,
    out: &str,
    points_path: Option<&str>,
    normalize: bool,
) -> CliResult {
    let params = make_params(n, z_spec, normalize)?;
    let chars = Characters::new();
    let (points, draws): (Vec<Permutation>, Vec<Vec<f64>>) = match mode {
        "exact" => {
            if n > EXACT_SAMPLING_CAP && points_path.is_none() {
                return Err(CliError::Lib(Error::CapExceeded {
                    what: "exact sampling",
                    requested: n,
                    cap: EXACT_SAMPLING_CAP,
                }));
            }
            let points = load_points(points_path, n, EXACT_SAMPLING_CAP)?;
            let gm = build_gram(&params, &points)?;
            let f = factorize(gm)?;
            let samples = f.sample(count, seed);
            (points, samples.draws)
        }
        "features" => {
            let points = load_points(points_path, n, ENUMERATION_CAP)?;
            let mut draws = Vec::with_capacity(count);
            for d in 0..count {
                let basis = build_feature_basis(&params, l, derive_seed(seed, d as u64), &chars)?;
                let row: Vec<f64> = points
                    .iter()
                    .map(|p| basis.evaluate(p, &chars))
                    .collect::<Result<_, _>>()?;
                draws.push(row);
            }
            (points, draws)
        }
        "truncated" => {
            let points = load_points(points_path, n, ENUMERATION_CAP)?;
            let rank = match r {
                Some(r) => r,
                None => full_rank_count(&params, &chars)?,
            };
            let mut draws = Vec::with_capacity(count);
            for d in 0..count {
                let basis =
                    build_truncated_basis(&params, rank, l, derive_seed(seed, d as u64), &chars)?;
                let row: Vec<f64> = points
                    .iter()
                    .map(|p| basis.evaluate(p, &chars))
                    .collect::<Result<_, _>>()?;
                draws.push(row);
            }
            (points, draws)
        }
        other => {
            return Err(CliError::Usage(format!(
                "--mode must be exact, features or truncated, got {:?}",
                other
            )))
        }
    };
    write_file(out, &export::samples_csv(&points, &draws))?;
    let sidecar = export::samples_sidecar(n, params.z(), seed, mode, count, VERSION);
    write_file(&format!("{}.json", out), &format!("{:#}\n", sidecar))?;
    println!("sample: {} draws at {} points ({})", draws.len(), points.len(), mode);
    Ok(true)
}

/// The four kernel vectors shown in the per-class illustration.
const DEFAULT_FIGURE_Z: [&str; 4] = ["1/2,1/2", "2/3,1/3", "3/4,1/4", "4/5,1/5"];

pub fn figure_data(n: usize, z_specs: &[String], out_prefix: &str) -> CliResult {
    let specs: Vec<String> = if z_specs.is_empty() {
        DEFAULT_FIGURE_Z.iter().map(|s| s.to_string()).collect()
    } else {
        z_specs.to_vec()
    };
    let mut sidecar_entries = Vec::new();
    let mut dot = None;
    for (i, spec) in specs.iter().enumerate() {
        let params = make_params(n, spec, false)?;
        let table = class_kernel_table(&params)?;
        let path = format!("{}_{}.csv", out_prefix, i + 1);
        write_file(&path, &export::class_table_csv(&table))?;
        sidecar_entries.push(serde_json::json!({
            "file": path,
            "n": n,
            "m": params.m(),
            "z": params.z(),
        }));
        if dot.is_none() {
            dot = Some(export::class_graph_dot(&table));
        }
    }
    let dot_path = format!("{}.dot", out_prefix);
    write_file(&dot_path, &dot.expect("at least one z"))?;
    let sidecar = serde_json::json!({
        "n": n,
        "tables": sidecar_entries,
        "graph": dot_path,
        "seed": serde_json::Value::Null,
        "version": VERSION,
    });
    write_file(&format!("{}.json", out_prefix), &format!("{:#}\n", sidecar))?;
    println!("figure-data: {} tables, {} classes each", specs.len(),
        powersum::partition::partition_count(n));
    Ok(true)
}

pub fn char_table(n: usize, out: &str) -> CliResult {
    if n > CHAR_TABLE_CAP {
        return Err(CliError::Lib(Error::CapExceeded {
            what: "character table dump",
            requested: n,
            cap: CHAR_TABLE_CAP,
        }));
    }
    let chars = Characters::new();
    let table = character_table(n, &chars)?;
    write_file(out, &export::character_table_csv(&table))?;
    println!("char-table: degree {}, {} classes", n, table.partitions().len());
    Ok(true)
}
