//! The `rescube` command line.
//!
//! Exit codes: 0 ok, 1 usage or I/O, 2 a checked property is false, 3 the
//! matching cap was hit.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::coding::{label_weakly_elementary, labelling, Scheme};
use crate::cube_kit::{is_proper_labelling, MetricGraph};
use crate::decomposition::{auto_rfd, find_reducible_faces, full_report, rfd_from_face_order, RfdSequence};
use crate::error::{Error, Result};
use crate::matchings::{m0_hat, m1_hat, MatchingFamily, DEFAULT_CAP};
use crate::plane_graph::{parse_benzenoid, FaceId, PlaneGraph};
use crate::resonance::build_resonance;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FALSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "rescube", version, about = "Resonance graphs and binary codings of perfect matchings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Elementary, weakly elementary and peripheral 2-colourability verdicts.
    Check(Common),
    /// Resonance graph as JSON, optionally DOT.
    Resonance {
        #[command(flatten)]
        common: Common,
        /// Also write the graph in DOT form to this file.
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// Validate a face order, or peel one automatically.
    Rfd {
        #[command(flatten)]
        common: Common,
        /// `auto` or a comma separated face list such as `s1,s2,s3`.
        #[arg(long, default_value = "auto")]
        rfd: String,
    },
    /// Binary labels of every perfect matching.
    Label {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SchemeArg::Daisy)]
        scheme: SchemeArg,
        #[arg(long, default_value = "auto")]
        rfd: String,
        /// Write the labelled resonance graph in DOT form to this file.
        #[arg(long)]
        emit_dot: Option<PathBuf>,
        /// Run every structural check and attach the report.
        #[arg(long)]
        verify: bool,
    },
    /// Structural checks for every face and decomposition step.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "auto")]
        rfd: String,
    },
    /// Convert a hexagon list (`q r` per line) into a JSON graph.
    ImportBenzenoid {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// JSON graph or hexagon list.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputKind::Auto)]
    kind: InputKind,
    /// Write the JSON result here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputKind {
    Auto,
    Json,
    Benzenoid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Daisy,
    Fdl,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Scheme {
        match s {
            SchemeArg::Daisy => Scheme::Daisy,
            SchemeArg::Fdl => Scheme::Fdl,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::InvalidInput(_)
        | Error::Io(_)
        | Error::Json(_)
        | Error::EmbeddingInconsistent(_)
        | Error::NotBipartite { .. }
        | Error::BadSelector(_)
        | Error::InternalInvariantBroken(_) => EXIT_USAGE,
        _ => EXIT_FALSE,
    }
}

/// Matching cap from `RESCUBE_CAP`, else the default.
pub fn cap_from_env() -> Result<usize> {
    match std::env::var("RESCUBE_CAP") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("RESCUBE_CAP={s:?} is not a count"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn load(common: &Common) -> Result<PlaneGraph> {
    let text = std::fs::read_to_string(&common.input)?;
    let kind = match common.kind {
        InputKind::Auto if text.trim_start().starts_with('{') => InputKind::Json,
        InputKind::Auto => InputKind::Benzenoid,
        k => k,
    };
    match kind {
        InputKind::Json => PlaneGraph::from_json(&text),
        _ => Ok(parse_benzenoid(&text)?.graph),
    }
}

fn parse_order(g: &PlaneGraph, spec: &str) -> Result<Option<Vec<FaceId>>> {
    if spec == "auto" {
        return Ok(None);
    }
    let n = g.finite_face_count();
    spec.split(',')
        .map(|t| {
            let t = t.trim();
            t.strip_prefix('s')
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| (1..=n).contains(&k))
                .map(|k| FaceId(k - 1))
                .ok_or_else(|| Error::InvalidInput(format!("bad face {t:?} (faces are s1..s{n})")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

fn rfd_for(g: &PlaneGraph, spec: &str) -> Result<RfdSequence> {
    match parse_order(g, spec)? {
        Some(order) => rfd_from_face_order(g, &order),
        None => auto_rfd(g),
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, value: &Value) -> Result<()> {
    let text = crate::to_sorted_json(value)? + "\n";
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn edge_ids(g: &PlaneGraph, set: &crate::plane_graph::EdgeSet) -> Vec<[i64; 2]> {
    set.ones()
        .map(|e| {
            let (u, v) = g.edge(e);
            [g.id(u), g.id(v)]
        })
        .collect()
}

fn cmd_check(common: &Common, out: &mut dyn Write) -> Result<i32> {
    let g = load(common)?;
    let p2c = g.is_peripherally_two_colorable();
    let analysis = g.elementary_analysis()?;
    let report = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "finite_faces": g.finite_face_count(),
        "elementary": analysis.is_elementary,
        "weakly_elementary": analysis.is_weakly_elementary,
        "forbidden_edges": edge_ids(&g, &analysis.forbidden()),
        "peripherally_two_colorable": p2c.peripherally_two_colorable,
        "violation": p2c.violation,
    });
    emit(out, common.output.as_deref(), &report)?;
    let all = analysis.is_elementary && analysis.is_weakly_elementary && p2c.peripherally_two_colorable;
    Ok(if all { EXIT_OK } else { EXIT_FALSE })
}

fn cmd_resonance(common: &Common, dot: Option<&Path>, cap: usize, out: &mut dyn Write) -> Result<i32> {
    let g = load(common)?;
    let family = MatchingFamily::enumerate(&g, cap)?;
    let r = build_resonance(&g, &family);
    let mut doc = r.to_json_value(None);
    doc["matchings"] = family.to_json_value(&g);
    emit(out, common.output.as_deref(), &doc)?;
    if let Some(p) = dot {
        std::fs::write(p, r.to_dot(None))?;
    }
    Ok(EXIT_OK)
}

fn rfd_json(rfd: &RfdSequence) -> Value {
    let g = &rfd.graph;
    json!({
        "order": rfd.order_names(),
        "alpha": rfd.alpha.as_ref().map(|a| a.iter().map(|(i, k)| (format!("s{i}"), format!("s{k}"))).collect::<std::collections::BTreeMap<_, _>>()),
        "ears": rfd.ears.iter().skip(1).map(|p| p.iter().map(|&v| g.id(v)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "notes": rfd.notes,
    })
}

fn cmd_rfd(common: &Common, spec: &str, out: &mut dyn Write) -> Result<i32> {
    let g = load(common)?;
    let reducible: Vec<String> = find_reducible_faces(&g).iter().map(|f| f.to_string()).collect();
    let mut doc = match rfd_for(&g, spec) {
        Ok(rfd) => rfd_json(&rfd),
        Err(e) if exit_code(&e) == EXIT_FALSE => {
            let mut d = json!({ "error": e.to_string() });
            d["reducible_faces"] = json!(reducible);
            emit(out, common.output.as_deref(), &d)?;
            return Ok(EXIT_FALSE);
        }
        Err(e) => return Err(e),
    };
    doc["reducible_faces"] = json!(reducible);
    emit(out, common.output.as_deref(), &doc)?;
    Ok(EXIT_OK)
}

struct LabelArgs<'a> {
    scheme: Scheme,
    rfd: &'a str,
    dot: Option<&'a Path>,
    verify: bool,
}

fn cmd_label(common: &Common, args: LabelArgs, cap: usize, out: &mut dyn Write) -> Result<i32> {
    let g = load(common)?;
    let family = MatchingFamily::enumerate(&g, cap)?;
    let analysis = g.elementary_analysis()?;
    let mut code = EXIT_OK;
    let (labels, rfd, resonance) = if analysis.is_elementary {
        let rfd = rfd_for(&g, args.rfd)?;
        let l = labelling(&rfd, &family, args.scheme)?;
        (l, Some(rfd), build_resonance(&g, &family))
    } else {
        if args.rfd != "auto" {
            return Err(Error::InvalidInput(
                "an explicit face order needs an elementary graph; use --rfd auto".into(),
            ));
        }
        let c = label_weakly_elementary(&g, &family, args.scheme)?;
        (c.labelling, None, c.resonance)
    };
    let mut doc = labels.to_json_value();
    if args.scheme == Scheme::Fdl {
        if let (Ok(lo), Ok(hi)) = (m0_hat(&g, &family), m1_hat(&g, &family)) {
            doc["minimum"] = json!(lo);
            doc["maximum"] = json!(hi);
        }
    }
    if args.verify {
        let mg = MetricGraph::from_resonance(&resonance);
        let mut checks = Vec::new();
        if args.scheme == Scheme::Daisy {
            checks.push(json!({
                "clause": "labelling.proper",
                "status": if is_proper_labelling(&mg, &labels.labels) { "pass" } else { "fail" },
            }));
        } else {
            let ok = resonance
                .edges
                .iter()
                .all(|e| labels.labels[e.a].hamming(&labels.labels[e.b]) == 1);
            checks.push(json!({
                "clause": "labelling.edges_flip_one_bit",
                "status": if ok { "pass" } else { "fail" },
            }));
        }
        if let Some(rfd) = &rfd {
            if rfd.alpha.is_some() {
                for c in full_report(rfd)? {
                    checks.push(serde_json::to_value(c)?);
                }
            }
        }
        if checks.iter().any(|c| c["status"] != "pass") {
            code = EXIT_FALSE;
        }
        doc["verification"] = json!(checks);
    }
    emit(out, common.output.as_deref(), &doc)?;
    if let Some(p) = args.dot {
        std::fs::write(p, resonance.to_dot(Some(&labels.strings())))?;
    }
    Ok(code)
}

fn cmd_verify(common: &Common, spec: &str, cap: usize, out: &mut dyn Write) -> Result<i32> {
    let g = load(common)?;
    // the cap guards the enumeration inside the report as well
    MatchingFamily::enumerate(&g, cap)?;
    let rfd = rfd_for(&g, spec)?;
    if rfd.alpha.is_none() {
        return Err(Error::PropertyViolated("graph is not peripherally 2-colourable".into()));
    }
    let checks = full_report(&rfd)?;
    let passed = checks.iter().all(|c| c.passed());
    let doc = json!({
        "order": rfd.order_names(),
        "checks": checks,
        "passed": passed,
    });
    emit(out, common.output.as_deref(), &doc)?;
    Ok(if passed { EXIT_OK } else { EXIT_FALSE })
}

fn cmd_import(input: &Path, output: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let b = parse_benzenoid(&std::fs::read_to_string(input)?)?;
    let text = b.graph.to_graph_file().to_json()? + "\n";
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let cap = cap_from_env()?;
    match &cli.command {
        Command::Check(c) => cmd_check(c, out),
        Command::Resonance { common, emit_dot } => cmd_resonance(common, emit_dot.as_deref(), cap, out),
        Command::Rfd { common, rfd } => cmd_rfd(common, rfd, out),
        Command::Label {
            common,
            scheme,
            rfd,
            emit_dot,
            verify,
        } => cmd_label(
            common,
            LabelArgs {
                scheme: (*scheme).into(),
                rfd,
                dot: emit_dot.as_deref(),
                verify: *verify,
            },
            cap,
            out,
        ),
        Command::Verify { common, rfd } => cmd_verify(common, rfd, cap, out),
        Command::ImportBenzenoid { input, output } => cmd_import(input, output.as_deref(), out),
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "rescube: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(args.iter().copied(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn help_and_usage() {
        assert_eq!(run_str(&["rescube", "--help"]).0, 0);
        assert_eq!(run_str(&["rescube", "--version"]).0, 0);
        assert_eq!(run_str(&["rescube"]).0, 1);
        assert_eq!(run_str(&["rescube", "check"]).0, 1);
        assert_eq!(run_str(&["rescube", "check", "/nonexistent/file"]).0, 1);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::CapExceeded { cap: 1 }), 3);
        assert_eq!(exit_code(&Error::PeelingStuck { remaining: 2 }), 2);
        assert_eq!(exit_code(&Error::InvalidInput(String::new())), 1);
    }
}
