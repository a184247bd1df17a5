//! Subcommand implementations. Each returns the process exit code.

use std::error::Error as StdError;
use std::fs;
use std::hint::black_box;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use transreach::gen::{generate, GenSpec, RadiusLaw};
use transreach::graph::{all_pairs_reach, bfs, brute_geo_reach};
use transreach::instance::{emit_instance, parse_instance};
use transreach::planar::{plane_dot, sparse_dot, sparsify};
use transreach::{Error, PointSet, VertexId};

use crate::oracles::{self, Built};
use crate::report::{digest, median, quantile, round_floats, SCHEMA};
use crate::OracleArgs;

type CliResult<T> = std::result::Result<T, Box<dyn StdError>>;

/// Instances at most this large are verified on every ordered pair.
const EXHAUSTIVE_LIMIT: usize = 300;
const MISMATCHES_LISTED: usize = 50;
const QUERY_BATCH: usize = 256;

fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_report(mut v: Value, out: Option<&Path>) -> CliResult<()> {
    round_floats(&mut v);
    let mut text = serde_json::to_string_pretty(&v)?;
    text.push('\n');
    write_output(out, &text)
}

struct Loaded {
    ps: PointSet,
    digest: String,
}

fn load(path: &Path) -> CliResult<Loaded> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let ps = parse_instance(&text)?;
    let digest = digest(&emit_instance(&ps));
    Ok(Loaded { ps, digest })
}

fn header(command: &str, args: &OracleArgs, inst: &Loaded) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "instance": {
            "path": args.input.display().to_string(),
            "digest": inst.digest,
            "n": inst.ps.len(),
            "dim": inst.ps.dim(),
            "psi": inst.ps.psi(),
        },
        "oracle": args.oracle.name(),
        "seed": args.seed,
    })
}

fn timed_build(ps: &PointSet, args: &OracleArgs) -> CliResult<(Built, f64)> {
    let start = Instant::now();
    let built = oracles::build(ps, args)?;
    Ok((built, start.elapsed().as_secs_f64()))
}

pub fn gen(
    dim: usize,
    n: usize,
    box_side: f64,
    law: &str,
    clusters: Option<&str>,
    seed: u64,
    out: Option<&Path>,
) -> CliResult<u8> {
    let law: RadiusLaw = law.parse()?;
    let mut spec = GenSpec::new(dim, n, box_side, law, seed);
    if let Some(c) = clusters {
        let bad = || Error::InvalidSpec(format!("bad clusters `{c}`, expected K:SPREAD"));
        let (k, spread) = c.split_once(':').ok_or_else(bad)?;
        spec.clusters = Some((
            k.parse().map_err(|_| bad())?,
            spread.parse().map_err(|_| bad())?,
        ));
    }
    let ps = generate(&spec)?;
    write_output(out, &emit_instance(&ps))?;
    Ok(0)
}

pub fn build(
    args: &OracleArgs,
    emit_dot: Option<&Path>,
    emit_tree: Option<&Path>,
    out: Option<&Path>,
) -> CliResult<u8> {
    let inst = load(&args.input)?;
    let (built, secs) = timed_build(&inst.ps, args)?;
    if let Some(path) = emit_dot {
        let Built::Planar(o) = &built else {
            return Err("--emit-dot needs --oracle planar".into());
        };
        let h = sparsify(&inst.ps)?;
        fs::write(path, sparse_dot(&inst.ps, &h) + &plane_dot(o.plane()))?;
    }
    if let Some(path) = emit_tree {
        let Built::Separator(o) = &built else {
            return Err("--emit-tree needs --oracle separator".into());
        };
        let mut tree = json!({ "schema": SCHEMA, "nodes": o.summary() });
        round_floats(&mut tree);
        fs::write(path, serde_json::to_string_pretty(&tree)? + "\n")?;
    }
    let mut report = header("build", args, &inst);
    report["build_seconds"] = json!(secs);
    report["memory_bytes"] = json!(built.oracle().heap_bytes());
    report["metrics"] = built.metrics();
    emit_report(report, out)?;
    Ok(0)
}

fn parse_point(s: &str) -> CliResult<Vec<f64>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad point `{s}`: {e}").into())
        })
        .collect()
}

pub fn query(
    args: &OracleArgs,
    s: VertexId,
    t: Option<VertexId>,
    point: Option<&str>,
) -> CliResult<u8> {
    let inst = load(&args.input)?;
    let built = oracles::build(&inst.ps, args)?;
    let mut report = header("query", args, &inst);
    report["s"] = json!(s);
    match (t, point) {
        (Some(t), None) => {
            report["t"] = json!(t);
            report["reaches"] = json!(built.oracle().reaches(s, t)?);
            if let Built::Sample(o) = &built {
                report["witness"] = serde_json::to_value(o.witness(s, t)?)?;
            }
            if let Built::Separator(o) = &built {
                report["witness"] = json!(o
                    .witness(s, t)?
                    .map(|(node, rep)| json!({ "node": node, "rep": rep })));
            }
        }
        (None, Some(p)) => {
            let q = parse_point(p)?;
            let ans = match &built {
                Built::Oned(o) => {
                    if q.len() != 1 {
                        return Err(Error::DimensionMismatch {
                            expected: 1,
                            found: q.len(),
                        }
                        .into());
                    }
                    o.query(s, q[0])?
                }
                Built::Brute(o) => brute_geo_reach(&inst.ps, o.graph(), s, &q)?,
                _ => return Err("geometric queries need --oracle oned or brute".into()),
            };
            report["point"] = json!(q);
            report["reaches"] = json!(ans);
        }
        _ => return Err("give either a target vertex or --point".into()),
    }
    emit_report(report, None)?;
    Ok(0)
}

fn random_pairs(n: usize, count: usize, seed: u64) -> Vec<(VertexId, VertexId)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (
                rng.gen_range(0..n) as VertexId,
                rng.gen_range(0..n) as VertexId,
            )
        })
        .collect()
}

pub fn verify(args: &OracleArgs, budget: usize, out: Option<&Path>) -> CliResult<u8> {
    let inst = load(&args.input)?;
    let ps = &inst.ps;
    let n = ps.len();
    let (built, secs) = timed_build(ps, args)?;
    let oracle = built.oracle();
    let g = transreach::enumerate_edges(ps);

    let exhaustive = n <= EXHAUSTIVE_LIMIT;
    let (pairs, truth): (Vec<(VertexId, VertexId)>, Vec<bool>) = if exhaustive {
        let reach = all_pairs_reach(&g);
        (0..n as VertexId)
            .flat_map(|s| (0..n as VertexId).map(move |t| (s, t)))
            .map(|(s, t)| ((s, t), reach[s as usize].contains(t as usize)))
            .unzip()
    } else {
        let mut pairs = random_pairs(n, budget, args.seed);
        pairs.sort_unstable();
        let mut sources: Vec<VertexId> = pairs.iter().map(|p| p.0).collect();
        sources.dedup();
        let rows: Vec<_> = sources
            .par_iter()
            .map(|&s| bfs(g.adjacency(), s, None))
            .collect();
        let truth = pairs
            .iter()
            .map(|&(s, t)| {
                let k = sources.binary_search(&s).unwrap();
                rows[k].contains(t as usize)
            })
            .collect();
        (pairs, truth)
    };

    let answers: Vec<bool> = pairs
        .par_iter()
        .map(|&(s, t)| oracle.reaches(s, t))
        .collect::<transreach::Result<_>>()?;
    let mut mismatches = Vec::new();
    let (mut false_pos, mut false_neg) = (0usize, 0usize);
    for ((&(s, t), &want), &got) in pairs.iter().zip(&truth).zip(&answers) {
        if want != got {
            if got {
                false_pos += 1;
            } else {
                false_neg += 1;
            }
            if mismatches.len() < MISMATCHES_LISTED {
                mismatches.push(json!({ "s": s, "t": t, "expected": want, "got": got }));
            }
        }
    }
    let mut report = header("verify", args, &inst);
    report["build_seconds"] = json!(secs);
    report["memory_bytes"] = json!(oracle.heap_bytes());
    report["metrics"] = built.metrics();
    report["verification"] = json!({
        "exhaustive": exhaustive,
        "pairs_checked": pairs.len(),
        "reachable_pairs": truth.iter().filter(|&&x| x).count(),
        "mismatch_count": false_pos + false_neg,
        "false_positives": false_pos,
        "false_negatives": false_neg,
        "mismatches": mismatches,
    });
    emit_report(report, out)?;
    Ok(if false_pos + false_neg == 0 { 0 } else { 2 })
}

pub fn bench(
    args: &OracleArgs,
    repetitions: usize,
    budget: usize,
    out: Option<&Path>,
) -> CliResult<u8> {
    let inst = load(&args.input)?;
    let reps = repetitions.max(1);
    let mut build_times = Vec::with_capacity(reps);
    let mut built = None;
    for _ in 0..reps {
        let (b, secs) = timed_build(&inst.ps, args)?;
        build_times.push(secs);
        built = Some(b);
    }
    let built = built.unwrap();
    let oracle = built.oracle();
    let pairs = random_pairs(inst.ps.len(), budget.max(QUERY_BATCH), args.seed);
    let mut per_query = Vec::new();
    for _ in 0..reps {
        for batch in pairs.chunks_exact(QUERY_BATCH) {
            let start = Instant::now();
            for &(s, t) in batch {
                black_box(oracle.reaches(black_box(s), black_box(t))?);
            }
            per_query.push(start.elapsed().as_secs_f64() * 1e9 / QUERY_BATCH as f64);
        }
    }
    per_query.sort_by(f64::total_cmp);
    let mut report = header("bench", args, &inst);
    report["repetitions"] = json!(reps);
    report["low_confidence"] = json!(reps == 1);
    report["build_seconds"] = json!({
        "median": median(&mut build_times.clone()),
        "all": build_times,
    });
    report["query_ns"] = json!({
        "p50": quantile(&per_query, 0.5),
        "p99": quantile(&per_query, 0.99),
        "batches": per_query.len(),
        "batch_size": QUERY_BATCH,
    });
    report["memory_bytes"] = json!(oracle.heap_bytes());
    report["metrics"] = built.metrics();
    emit_report(report, out)?;
    Ok(0)
}
