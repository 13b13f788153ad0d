//! Input-file parsing, command execution, and report formatting for the
//! command-line tool.

use std::sync::Arc;

use crate::chern::{
    chern_icis, chern_surface, geometry_checks, ind_point, imult_plane, ChernReport,
    FormCollection, GeometryReport, NormalizationMap, Route, SubCollection, VarietyInput,
};
use crate::error::{Error, Result};
use crate::groebner::{colength, krull_dimension, standard_basis, Colength, Ideal, Mode};
use crate::polyalg::{parse_poly, PolyRing};
use crate::{QPoly, Rat};

/// A fully validated problem instance read from an input file.
pub struct ProblemSpec {
    pub variety: VarietyInput<Rat>,
    pub collection: FormCollection<Rat>,
}

/// Exit-code contract: 0 success; 2 hypothesis violation; 3 parse error;
/// 4 cap exceeded / not stabilized; 5 route disagreement.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::InputFile { .. } => 3,
        Error::CapExceeded { .. } | Error::NotStabilized { .. } => 4,
        Error::RouteDisagreement { .. } => 5,
        _ => 2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::InputFile {
                line: 0,
                msg: format!("unknown format '{other}' (expected text or json)"),
            }),
        }
    }
}

pub fn parse_route(s: &str) -> Result<Route> {
    match s {
        "colength" => Ok(Route::Colength),
        "normalization" => Ok(Route::Normalization),
        "both" => Ok(Route::Both),
        other => Err(Error::InputFile {
            line: 0,
            msg: format!("unknown route '{other}' (expected colength, normalization, or both)"),
        }),
    }
}

// ---------------------------------------------------------------------------
// Input-file grammar.

fn err_at(line: usize, msg: impl Into<String>) -> Error {
    Error::InputFile {
        line,
        msg: msg.into(),
    }
}

/// Split the file into ';'-terminated statements with their starting line
/// numbers.  '#' starts a comment to end of line.
fn statements(text: &str) -> Result<Vec<(usize, String)>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = 1usize;
    let mut last = 1usize;
    for (i, raw) in text.lines().enumerate() {
        last = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        for ch in line.chars() {
            if ch == ';' {
                let s = cur.trim();
                if s.is_empty() {
                    return Err(err_at(i + 1, "empty statement"));
                }
                out.push((start, s.to_string()));
                cur.clear();
            } else {
                if cur.trim().is_empty() && !ch.is_whitespace() {
                    start = i + 1;
                }
                cur.push(ch);
            }
        }
        cur.push(' ');
    }
    if !cur.trim().is_empty() {
        return Err(err_at(last, "statement missing terminating ';'"));
    }
    Ok(out)
}

/// Split on `sep` at parenthesis depth zero.
fn split_top(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch == sep && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    out.push(cur.trim().to_string());
    out
}

fn strip_parens(s: &str, line: usize) -> Result<&str> {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        Ok(&t[1..t.len() - 1])
    } else {
        Err(err_at(line, format!("expected a parenthesized list, got '{t}'")))
    }
}

fn parse_tuple(s: &str, ring: &Arc<PolyRing>, line: usize) -> Result<Vec<QPoly>> {
    split_top(strip_parens(s, line)?, ',')
        .iter()
        .map(|e| parse_poly(e, ring).map_err(|pe| err_at(line, pe.to_string())))
        .collect()
}

pub fn parse_input_file(text: &str) -> Result<ProblemSpec> {
    let mut ring: Option<Arc<PolyRing>> = None;
    let mut variety_gens: Vec<QPoly> = Vec::new();
    let mut dim: Option<u64> = None;
    let mut normalization: Option<(usize, NormalizationMap<Rat>)> = None;
    let mut collections: Vec<(usize, u64, Vec<Vec<QPoly>>)> = Vec::new();

    for (line, stmt) in statements(text)? {
        let head = stmt
            .split(|c: char| c.is_whitespace() || c == ':')
            .next()
            .unwrap_or("");
        let body = stmt[head.len()..].trim();
        match head {
            "ring" => {
                if ring.is_some() {
                    return Err(err_at(line, "duplicate ring declaration"));
                }
                let names: Vec<String> = split_top(body, ',')
                    .into_iter()
                    .map(|s| s.trim().to_string())
                    .collect();
                if names.iter().any(|n| n.is_empty()) {
                    return Err(err_at(line, "empty variable name in ring declaration"));
                }
                ring = Some(
                    PolyRing::new(&names).map_err(|e| err_at(line, e.to_string()))?,
                );
            }
            "variety" => {
                let r = ring
                    .as_ref()
                    .ok_or_else(|| err_at(line, "variety before ring declaration"))?;
                let body = body.trim_start_matches(':').trim();
                let g = parse_poly(body, r).map_err(|e| err_at(line, e.to_string()))?;
                variety_gens.push(g);
            }
            "dim" => {
                if dim.is_some() {
                    return Err(err_at(line, "duplicate dim declaration"));
                }
                dim = Some(
                    body.parse::<u64>()
                        .map_err(|_| err_at(line, format!("invalid dimension '{body}'")))?,
                );
            }
            "normalization" => {
                if normalization.is_some() {
                    return Err(err_at(line, "duplicate normalization declaration"));
                }
                let (lhs, rhs) = body
                    .split_once("->")
                    .ok_or_else(|| err_at(line, "normalization needs '(vars) -> (images)'"))?;
                let src_vars: Vec<String> = split_top(strip_parens(lhs, line)?, ',')
                    .into_iter()
                    .map(|s| s.trim().to_string())
                    .collect();
                let src = PolyRing::new(&src_vars).map_err(|e| err_at(line, e.to_string()))?;
                let images = parse_tuple(rhs, &src, line)?;
                normalization = Some((
                    line,
                    NormalizationMap {
                        source_ring: src,
                        images,
                    },
                ));
            }
            "collection" => {
                let r = ring
                    .as_ref()
                    .ok_or_else(|| err_at(line, "collection before ring declaration"))?;
                let body = body.trim();
                let (kpart, forms_part) = body
                    .split_once(':')
                    .ok_or_else(|| err_at(line, "collection needs 'k=<int>: (forms)'"))?;
                let k = kpart
                    .trim()
                    .strip_prefix("k=")
                    .and_then(|v| v.trim().parse::<u64>().ok())
                    .ok_or_else(|| err_at(line, format!("invalid collection head '{kpart}'")))?;
                let forms = split_top(forms_part, ',')
                    .iter()
                    .map(|f| parse_tuple(f, r, line))
                    .collect::<Result<Vec<_>>>()?;
                collections.push((line, k, forms));
            }
            other => {
                return Err(err_at(line, format!("unknown statement '{other}'")));
            }
        }
    }

    let ring = ring.ok_or_else(|| err_at(1, "missing ring declaration"))?;
    let dim = dim.ok_or_else(|| err_at(1, "missing dim declaration"))?;
    let mut variety = VarietyInput::new(&ring, variety_gens, dim)
        .map_err(|e| err_at(1, e.to_string()))?;
    if let Some((line, map)) = normalization {
        variety = variety
            .with_normalization(map)
            .map_err(|e| err_at(line, e.to_string()))?;
    }
    if collections.is_empty() {
        return Err(err_at(1, "missing collection declarations"));
    }
    let first_line = collections[0].0;
    let parts: Vec<SubCollection<Rat>> = collections
        .into_iter()
        .map(|(_, k, forms)| SubCollection { k, forms })
        .collect();
    let collection =
        FormCollection::new(parts, &variety).map_err(|e| err_at(first_line, e.to_string()))?;
    Ok(ProblemSpec {
        variety,
        collection,
    })
}

// ---------------------------------------------------------------------------
// Report rendering.

fn geometry_text(g: &GeometryReport) -> String {
    format!(
        "geometry: prefix_dims={:?} expected_dims={:?} isolated={}",
        g.prefix_dims, g.expected_dims, g.isolated
    )
}

fn chern_text(r: &ChernReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("method: {}\n", r.method));
    out.push_str(&geometry_text(&r.geometry));
    out.push('\n');
    for t in &r.terms {
        out.push_str(&format!("term {} = {} (seed {})\n", t.label, t.value, t.seed));
    }
    out.push_str(&format!("final = {}\n", r.final_value));
    let seeds: Vec<String> = r.seeds.iter().map(|s| s.to_string()).collect();
    out.push_str(&format!("seeds: {}\n", seeds.join(", ")));
    if r.warnings.is_empty() {
        out.push_str("warnings: none\n");
    } else {
        for w in &r.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
    }
    out
}

fn chern_render(r: &ChernReport, format: Format) -> String {
    match format {
        Format::Text => chern_text(r),
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
    }
}

fn colength_text(c: &Colength) -> String {
    match c {
        Colength::Finite(v) => v.to_string(),
        Colength::Infinite => "infinite".into(),
    }
}

// ---------------------------------------------------------------------------
// Command execution.  Every function returns the report text; callers map
// errors to the exit-code contract.

pub struct ComputeOptions {
    pub seed: u64,
    pub trials: u32,
    pub bound: i64,
    pub route: Route,
    pub method: Option<String>,
    pub format: Format,
}

pub fn cmd_compute(text: &str, opt: &ComputeOptions) -> Result<String> {
    let spec = parse_input_file(text)?;
    let x = &spec.variety;
    let c = &spec.collection;
    let n = x.ring.nvars() as u64;
    let method = match opt.method.as_deref() {
        Some("icis") => "icis",
        Some("surface") => "surface",
        Some(other) => {
            return Err(Error::InputFile {
                line: 0,
                msg: format!("unknown method '{other}' (expected icis or surface)"),
            })
        }
        None => {
            let ci = x.gens.len() as u64 == n - x.dim;
            let sing_isolated = {
                let s = crate::chern::singular_locus_ideal(x)?;
                krull_dimension(&s, Mode::Local)? <= 0
            };
            if ci && sing_isolated {
                "icis"
            } else if n == 3 && x.dim == 2 && x.gens.len() == 1 {
                "surface"
            } else {
                return Err(Error::Shape(
                    "no applicable pipeline: presentation is neither an isolated complete \
                     intersection nor a surface hypersurface in three variables"
                        .into(),
                ));
            }
        }
    };
    let report = match method {
        "icis" => chern_icis(x, c, opt.seed, opt.trials, opt.bound)?,
        _ => chern_surface(x, c, opt.seed, opt.trials, opt.bound, opt.route)?,
    };
    Ok(chern_render(&report, opt.format))
}

pub fn cmd_ind(text: &str, format: Format) -> Result<String> {
    let spec = parse_input_file(text)?;
    let g = geometry_checks(&spec.variety, &spec.collection)?;
    let ind = ind_point(&spec.variety, &spec.collection)?;
    Ok(match format {
        Format::Text => format!("{}\nind = {}\n", geometry_text(&g), colength_text(&ind)),
        Format::Json => {
            let v = serde_json::json!({
                "geometry": g,
                "ind": match ind {
                    Colength::Finite(v) => serde_json::json!(v),
                    Colength::Infinite => serde_json::json!("infinite"),
                },
            });
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
    })
}

fn parse_ring_arg(vars: &str) -> Result<Arc<PolyRing>> {
    let names: Vec<String> = vars.split(',').map(|s| s.trim().to_string()).collect();
    PolyRing::new(&names)
}

pub fn cmd_imult(vars: &str, f: &str, g: &str, format: Format) -> Result<String> {
    let ring = parse_ring_arg(vars)?;
    let fp: QPoly = parse_poly(f, &ring)?;
    let gp: QPoly = parse_poly(g, &ring)?;
    let v = imult_plane(&fp, &gp)?;
    Ok(match format {
        Format::Text => format!("imult = {}\n", colength_text(&v)),
        Format::Json => {
            serde_json::to_string_pretty(&serde_json::json!({
                "imult": match v {
                    Colength::Finite(v) => serde_json::json!(v),
                    Colength::Infinite => serde_json::json!("infinite"),
                }
            }))
            .expect("serializes")
                + "\n"
        }
    })
}

fn parse_ideal_args(vars: &str, polys: &[String]) -> Result<Ideal<Rat>> {
    let ring = parse_ring_arg(vars)?;
    let gens = polys
        .iter()
        .map(|p| parse_poly(p, &ring))
        .collect::<Result<Vec<QPoly>>>()?;
    Ideal::new(&ring, gens)
}

pub fn cmd_colength(vars: &str, polys: &[String], mode: Mode) -> Result<String> {
    let i = parse_ideal_args(vars, polys)?;
    Ok(format!("colength = {}\n", colength_text(&colength(&i, mode)?)))
}

pub fn cmd_dim(vars: &str, polys: &[String], mode: Mode) -> Result<String> {
    let i = parse_ideal_args(vars, polys)?;
    Ok(format!("dim = {}\n", krull_dimension(&i, mode)?))
}

pub fn cmd_gb(vars: &str, polys: &[String], mode: Mode) -> Result<String> {
    let i = parse_ideal_args(vars, polys)?;
    let sb = standard_basis(&i, mode.order(), None)?;
    let mut out = String::new();
    for b in &sb.basis {
        out.push_str(&format!("{b}\n"));
    }
    if sb.basis.is_empty() {
        out.push_str("0\n");
    }
    Ok(out)
}

pub fn cmd_check(text: &str, format: Format) -> Result<String> {
    let spec = parse_input_file(text)?;
    let g = geometry_checks(&spec.variety, &spec.collection)?;
    Ok(match format {
        Format::Text => format!("{}\n", geometry_text(&g)),
        Format::Json => serde_json::to_string_pretty(&g).expect("serializes") + "\n",
    })
}

/// Cross-check the main engines against the independent oracles on a small
/// built-in corpus.
pub fn cmd_selftest() -> Result<String> {
    let mut out = String::new();
    let r2 = PolyRing::new(&["x", "y"])?;
    let corpora: Vec<Vec<&str>> = vec![
        vec!["x^2", "y^2"],
        vec!["x^2 - y^3", "x y"],
        vec!["x^3 + y^3", "x^2 y^2"],
        vec!["x + y^2", "y^5"],
    ];
    for gens in &corpora {
        let i = Ideal::new(
            &r2,
            gens.iter()
                .map(|g| parse_poly(g, &r2))
                .collect::<Result<Vec<QPoly>>>()?,
        )?;
        let a = colength(&i, Mode::Local)?
            .finite()
            .ok_or_else(|| Error::InfiniteColength("selftest instance".into()))?;
        let b = crate::oracle::colength_truncation(&i, 40)?.value;
        if a != b {
            return Err(Error::OracleDisagreement(a, b));
        }
        out.push_str(&format!("colength {:?}: engine {a} == oracle {b}\n", gens));
    }
    let rt = PolyRing::new(&["t", "z"])?;
    let pairs: Vec<(&str, &str)> = vec![
        ("t", "z"),
        ("z^2 - t^3", "z"),
        ("z^2 (2t^5 + 3z^3)", "-3t^11 + 2z^5"),
    ];
    for (f, g) in &pairs {
        let fp: QPoly = parse_poly(f, &rt)?;
        let gp: QPoly = parse_poly(g, &rt)?;
        let a = imult_plane(&fp, &gp)?
            .finite()
            .ok_or_else(|| Error::InfiniteColength("selftest pair".into()))?;
        let b = crate::oracle::imult_resultant(&fp, &gp, 17)?;
        if a != b {
            return Err(Error::OracleDisagreement(a, b));
        }
        out.push_str(&format!("imult ({f}, {g}): engine {a} == oracle {b}\n"));
    }
    out.push_str("selftest: all checks passed\n");
    Ok(out)
}
