use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};

use serde::Serialize;

use harary::connectivity::{blocks, edge_connectivity, vertex_connectivity};
use harary::constructions::ConstructionSpec;
use harary::enumeration::{
    classify_and_rank, ClassKind, SweepOptions, TopTableReport, MAX_ENUMERATION_ORDER,
};
use harary::graph::{emit_graph6, parse_graph6};
use harary::metrics::{distance_counts, harary_from_gamma, wiener_index};
use harary::transforms::{build_per1, build_per2, path_shift};
use harary::verify::{
    verify_connectivity_theorems, verify_cut_vertex_theorem, verify_lemma_properties,
    verify_ordering_chain, verify_second_max, VerificationReport,
};
use harary::{ExactRational, Graph};

use crate::args::{
    Classify, Cli, Command, Construct, Format, InputArgs, SweepArgs, Transform, Verify,
};
use crate::Failure;

const MAX_N_VAR: &str = "HARARY_MAX_N";

pub fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Compute(input) => compute(cli, input),
        Command::Connectivity(input) => connectivity(cli, input),
        Command::Construct(c) => construct(cli, c),
        Command::Transform(t) => transform(cli, t),
        Command::Enumerate(e) => {
            let kind = match e.classify {
                Classify::Cut => ClassKind::CutVertexCount,
                Classify::Kappa => ClassKind::VertexConnectivity,
                Classify::Lambda => ClassKind::EdgeConnectivity,
            };
            let table = classify_and_rank(e.n, kind, &sweep_options(&e.sweep)?)?;
            let report = table.report()?;
            match cli.format {
                Format::Json => write_json(cli, &report),
                Format::Csv => write_csv(cli, top_table_rows(&report)),
            }
        }
        Command::Verify(v) => verify(cli, v),
    }
}

fn sweep_options(args: &SweepArgs) -> Result<SweepOptions, Failure> {
    if args.workers == 0 {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    let max_order = match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| {
                Failure::Usage(format!(
                    "{MAX_N_VAR} must be a nonnegative integer, got {v:?}"
                ))
            })?
            .min(MAX_ENUMERATION_ORDER),
        Err(_) => MAX_ENUMERATION_ORDER,
    };
    Ok(SweepOptions {
        workers: args.workers,
        allow_large: args.allow_large,
        max_order,
    })
}

fn sink(cli: &Cli) -> Result<Box<dyn Write>, Failure> {
    Ok(match &cli.out {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).map_err(|e| {
                Failure::Usage(format!("{}: {e}", path.display()))
            })?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: Serialize>(cli: &Cli, value: &T) -> Result<(), Failure> {
    let mut out = sink(cli)?;
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

/// One compact JSON object per line.
fn write_json_lines<T: Serialize>(cli: &Cli, records: &[T]) -> Result<(), Failure> {
    let mut out = sink(cli)?;
    for r in records {
        serde_json::to_writer(&mut out, r).map_err(|e| Failure::Usage(e.to_string()))?;
        writeln!(out)?;
    }
    out.flush()?;
    Ok(())
}

fn write_csv(cli: &Cli, rows: Vec<Vec<String>>) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(sink(cli)?);
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn read_graphs(input: &InputArgs) -> Result<Vec<Graph>, Failure> {
    let reader: Box<dyn BufRead> = match &input.input {
        Some(path) => {
            Box::new(BufReader::new(File::open(path).map_err(|e| {
                Failure::Usage(format!("{}: {e}", path.display()))
            })?))
        }
        None => Box::new(BufReader::new(io::stdin().lock())),
    };
    let mut graphs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        graphs
            .push(parse_graph6(&line).map_err(|e| Failure::Usage(format!("line {}: {e}", i + 1)))?);
    }
    Ok(graphs)
}

#[derive(Serialize)]
struct ComputeRecord {
    graph6: String,
    n: usize,
    edges: usize,
    harary: ExactRational,
    harary_decimal: f64,
    wiener: Option<u64>,
    gamma: BTreeMap<u32, u64>,
    connected: bool,
}

fn compute(cli: &Cli, input: &InputArgs) -> Result<(), Failure> {
    let records: Vec<ComputeRecord> = read_graphs(input)?
        .iter()
        .map(|g| {
            let counts = distance_counts(g);
            let h = harary_from_gamma(&counts.gamma);
            ComputeRecord {
                graph6: emit_graph6(g),
                n: g.order(),
                edges: g.size(),
                harary_decimal: h.to_f64(),
                harary: h,
                wiener: wiener_index(g).ok(),
                gamma: counts.gamma,
                connected: g.is_connected(),
            }
        })
        .collect();
    match cli.format {
        Format::Json => write_json_lines(cli, &records),
        Format::Csv => {
            let mut rows = vec![strings(&[
                "graph6",
                "n",
                "edges",
                "harary",
                "harary_decimal",
                "wiener",
                "gamma",
                "connected",
            ])];
            for r in &records {
                rows.push(vec![
                    r.graph6.clone(),
                    r.n.to_string(),
                    r.edges.to_string(),
                    r.harary.to_string(),
                    r.harary_decimal.to_string(),
                    r.wiener.map(|w| w.to_string()).unwrap_or_default(),
                    r.gamma
                        .iter()
                        .map(|(k, c)| format!("{k}:{c}"))
                        .collect::<Vec<_>>()
                        .join(" "),
                    r.connected.to_string(),
                ]);
            }
            write_csv(cli, rows)
        }
    }
}

#[derive(Serialize)]
struct ConnectivityRecord {
    graph6: String,
    kappa: usize,
    lambda: usize,
    cut_vertices: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

fn connectivity(cli: &Cli, input: &InputArgs) -> Result<(), Failure> {
    let records: Vec<ConnectivityRecord> = read_graphs(input)?
        .iter()
        .map(|g| {
            let b = blocks(g);
            ConnectivityRecord {
                graph6: emit_graph6(g),
                kappa: vertex_connectivity(g),
                lambda: edge_connectivity(g),
                cut_vertices: b.cut_vertices,
                blocks: b.blocks,
            }
        })
        .collect();
    match cli.format {
        Format::Json => write_json_lines(cli, &records),
        Format::Csv => {
            let mut rows = vec![strings(&[
                "graph6",
                "kappa",
                "lambda",
                "cut_vertices",
                "blocks",
            ])];
            for r in &records {
                rows.push(vec![
                    r.graph6.clone(),
                    r.kappa.to_string(),
                    r.lambda.to_string(),
                    join_numbers(&r.cut_vertices),
                    r.blocks
                        .iter()
                        .map(|b| join_numbers(b))
                        .collect::<Vec<_>>()
                        .join("|"),
                ]);
            }
            write_csv(cli, rows)
        }
    }
}

#[derive(Serialize)]
struct GraphRecord {
    graph6: String,
    n: usize,
    edges: usize,
    harary: ExactRational,
    harary_decimal: f64,
}

impl GraphRecord {
    fn new(g: &Graph) -> Self {
        let h = harary::metrics::harary_index(g);
        GraphRecord {
            graph6: emit_graph6(g),
            n: g.order(),
            edges: g.size(),
            harary_decimal: h.to_f64(),
            harary: h,
        }
    }
}

#[derive(Serialize)]
struct ConstructRecord {
    #[serde(flatten)]
    spec: ConstructionSpec,
    graph: GraphRecord,
}

fn construct(cli: &Cli, c: &Construct) -> Result<(), Failure> {
    let spec = match *c {
        Construct::Gnk { n, k } => ConstructionSpec::Gnk { n, k },
        Construct::Knr { n, r } => ConstructionSpec::Knr { n, r },
        Construct::Join { n1, n2, n3 } => ConstructionSpec::Join { n1, n2, n3 },
        Construct::SecondMax { n, r } => ConstructionSpec::SecondMax { n, r },
    };
    let records: Vec<ConstructRecord> = spec
        .build()?
        .iter()
        .map(|g| ConstructRecord {
            spec,
            graph: GraphRecord::new(g),
        })
        .collect();
    match cli.format {
        Format::Json => write_json_lines(cli, &records),
        Format::Csv => {
            let mut rows = vec![strings(&[
                "graph6",
                "n",
                "edges",
                "harary",
                "harary_decimal",
            ])];
            rows.extend(records.iter().map(|r| graph_row(&r.graph)));
            write_csv(cli, rows)
        }
    }
}

fn graph_row(g: &GraphRecord) -> Vec<String> {
    vec![
        g.graph6.clone(),
        g.n.to_string(),
        g.edges.to_string(),
        g.harary.to_string(),
        g.harary_decimal.to_string(),
    ]
}

#[derive(Serialize)]
struct TransformRecord {
    transform: &'static str,
    before: GraphRecord,
    after: GraphRecord,
    increase: ExactRational,
}

fn transform(cli: &Cli, t: &Transform) -> Result<(), Failure> {
    let (name, before, after) = match t {
        Transform::AddEdge { graph, u, v } => {
            let g = parse_graph6(graph)?;
            let h = g.add_edge(*u, *v)?;
            ("add-edge", g, h)
        }
        Transform::Per1 {
            g1,
            u,
            v,
            g2,
            path,
            s,
        } => {
            let inst = build_per1(&parse_graph6(g1)?, (*u, *v), &parse_graph6(g2)?, path, *s)?;
            ("per1", inst.assembled, inst.transformed)
        }
        Transform::Per2 { p, q, t, s } => {
            let inst = build_per2(*p, *q, *t, *s, &[])?;
            ("per2", inst.assembled, inst.transformed)
        }
        Transform::Shift { graph, u, v, t, s } => {
            let (a, b) = path_shift(&parse_graph6(graph)?, *u, *v, *t, *s)?;
            ("shift", a, b)
        }
    };
    let before = GraphRecord::new(&before);
    let after = GraphRecord::new(&after);
    let record = TransformRecord {
        transform: name,
        increase: after.harary.clone() - before.harary.clone(),
        before,
        after,
    };
    match cli.format {
        Format::Json => write_json(cli, &record),
        Format::Csv => {
            let mut rows = vec![strings(&[
                "side",
                "graph6",
                "n",
                "edges",
                "harary",
                "harary_decimal",
            ])];
            for (side, g) in [("before", &record.before), ("after", &record.after)] {
                let mut row = vec![side.to_string()];
                row.extend(graph_row(g));
                rows.push(row);
            }
            write_csv(cli, rows)
        }
    }
}

fn top_table_rows(report: &TopTableReport) -> Vec<Vec<String>> {
    let mut rows = vec![strings(&[
        "class",
        "tier",
        "harary",
        "harary_decimal",
        "tier_labeled_count",
        "graph6",
        "labeled_count",
    ])];
    for c in &report.classes {
        for (tier_name, tier) in [("best", Some(&c.best)), ("second", c.second.as_ref())] {
            let Some(tier) = tier else { continue };
            for w in &tier.isomorphism_classes {
                rows.push(vec![
                    c.value.to_string(),
                    tier_name.to_string(),
                    tier.harary.to_string(),
                    tier.harary_decimal.to_string(),
                    tier.labeled_count.to_string(),
                    w.graph6.clone(),
                    w.labeled_count.to_string(),
                ]);
            }
        }
    }
    rows
}

fn verify(cli: &Cli, v: &Verify) -> Result<(), Failure> {
    let report = match v {
        Verify::Cut { n, sweep } => verify_cut_vertex_theorem(*n, &sweep_options(sweep)?)?,
        Verify::Ordering { n } => verify_ordering_chain(*n)?,
        Verify::Connectivity { n, sweep } => {
            verify_connectivity_theorems(*n, &sweep_options(sweep)?)?
        }
        Verify::SecondMax { n, sweep } => verify_second_max(*n, &sweep_options(sweep)?)?,
        Verify::Lemmas { trials, seed } => verify_lemma_properties(*trials, *seed)?,
    };
    match cli.format {
        Format::Json => write_json(cli, &report)?,
        Format::Csv => write_csv(cli, report_rows(&report))?,
    }
    eprintln!(
        "{}: {} in {:.2?}",
        report.theorem,
        if report.passed() { "pass" } else { "FAIL" },
        report.elapsed
    );
    for claim in report.failed_claims() {
        eprintln!("  {} failed: {}", claim.id, claim.failures.join("; "));
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Refuted)
    }
}

fn report_rows(report: &VerificationReport) -> Vec<Vec<String>> {
    let mut rows = vec![strings(&[
        "theorem", "claim", "status", "role", "graph6", "harary", "class",
    ])];
    let status = |s| {
        serde_json::to_value(s)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default()
    };
    for c in &report.claims {
        if c.witnesses.is_empty() {
            rows.push(vec![
                report.theorem.clone(),
                c.id.clone(),
                status(c.status),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
            ]);
        }
        for w in &c.witnesses {
            rows.push(vec![
                report.theorem.clone(),
                c.id.clone(),
                status(c.status),
                w.role.clone(),
                w.graph6.clone(),
                w.harary.to_string(),
                w.class.map(|k| k.to_string()).unwrap_or_default(),
            ]);
        }
    }
    rows
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn join_numbers(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
