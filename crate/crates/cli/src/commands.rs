use std::io::Write;

use gspec_core::bounds::{
    classify_region, detect_maximal_crossover, eigenvalue_bound_set, gap_bound_set, pair_spectra,
    weyl_check, BoundSet, GapBoundSet, Pair, RegionClassification,
};
use gspec_core::clustering::{cluster, compare_labelings, ClusterComparison};
use gspec_core::generators::{bipartite_b, complete, graph_c, star};
use gspec_core::graph::{connected_components, ClassTag};
use gspec_core::io::write_edge_list;
use gspec_core::polymap::polynomial_spectrum_map;
use gspec_core::spectra::spectrum;
use gspec_core::{datasets, DegreeSummary, Error as CoreError, Graph, RepresentationKind};
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::input::{load_graph, load_truth, Input};
use crate::plot::plot_dataset;
use crate::sweep::sweep;
use crate::table;
use crate::{Command, DataFormat, GraphArg, Model, ReportFormat, TableFormat};

pub(crate) fn execute(cmd: Command, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Info { graph } => info(&load(&graph)?, out),
        Command::Gen {
            model,
            size,
            output,
        } => {
            let text = write_edge_list(&generate(model, size)?);
            match output {
                Some(path) => std::fs::write(&path, text).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                }),
                None => out.write_all(text.as_bytes()).map_err(CliError::stdout),
            }
        }
        Command::Spectra {
            graph,
            kind,
            format,
        } => spectra(&load(&graph)?, kind, format, out),
        Command::Bounds { graph, format } => bounds(&load(&graph)?, format, out),
        Command::Gaps { graph } => gaps(&load(&graph)?, out),
        Command::Table {
            dmin_max,
            dmax_max,
            format,
        } => table(dmin_max, dmax_max, format, out),
        Command::Region { dmin, dmax } => {
            if !(dmin >= 0.0 && dmin <= dmax && dmax.is_finite()) {
                return Err(CliError::Usage(format!(
                    "need 0 <= dmin <= dmax, got dmin={dmin} dmax={dmax}"
                )));
            }
            let ds = DegreeSummary::from_extremes(dmin, dmax);
            json(
                out,
                &RegionReport {
                    d_min: dmin,
                    d_max: dmax,
                    region: classify_region(&ds),
                    bounds: eigenvalue_bound_set(&ds),
                },
            )
        }
        Command::Cluster {
            graph,
            kind,
            k,
            seed,
            restarts,
            truth,
        } => {
            let input = load(&graph)?;
            let g = &input.loaded.graph;
            let r = cluster(g, kind, k, restarts, seed)?;
            let comparison = match truth {
                Some(spec) => Some(TruthComparison::new(
                    &compare_labelings(&r.labels, &load_truth(&spec, g.n())?)?,
                    &spec,
                )),
                None => None,
            };
            json(
                out,
                &ClusterReport {
                    kind,
                    k,
                    seed,
                    restarts,
                    cluster_sizes: r.cluster_sizes(),
                    labels: r.labels,
                    inertia: r.inertia,
                    empty_clusters: r.empty_clusters,
                    comparison,
                },
            )
        }
        Command::Crossover { graph, pair, tol } => {
            crossover(&load(&graph)?.loaded.graph, pair, tol, out)
        }
        Command::Polymap {
            graph,
            pair,
            merge_tol,
        } => {
            let ps = pair_spectra(pair, &load(&graph)?.loaded.graph)?;
            json(
                out,
                &polynomial_spectrum_map(&ps.source, &ps.target, merge_tol)?,
            )
        }
        Command::Weyl { graph } => json(out, &weyl_check(&load(&graph)?.loaded.graph)?),
        Command::Plotdata {
            graph,
            figure,
            pair,
            format,
        } => {
            let input = load(&graph)?;
            let p = plot_dataset(&input.id, &input.loaded.graph, figure, pair)?;
            match format {
                DataFormat::Json => json(out, &p),
                DataFormat::Csv => csv_rows(out, &p.rows),
            }
        }
        Command::Sweep { graphc, format } => {
            let entries = sweep(graphc.0, graphc.1)?;
            match format {
                DataFormat::Json => json(out, &entries),
                DataFormat::Csv => {
                    let rows: Vec<SweepRow> = entries
                        .iter()
                        .flat_map(|e| {
                            e.gaps.iter().enumerate().map(move |(i, &gap)| SweepRow {
                                k: e.k,
                                kind: e.kind.tag(),
                                index: i + 1,
                                normalized_gap: gap,
                                rank: e.notable.iter().position(|&j| j == i + 1).map(|r| r + 1),
                            })
                        })
                        .collect();
                    csv_rows(out, &rows)
                }
            }
        }
    }
}

fn load(arg: &GraphArg) -> Result<Input> {
    load_graph(&arg.file, arg.input_format, arg.drop_isolated)
}

fn json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out).map_err(CliError::stdout)
}

fn csv_rows<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(CliError::stdout)
}

fn generate(model: Model, size: Option<usize>) -> Result<Graph> {
    let need = |what: &str| {
        size.ok_or_else(|| CliError::Usage(format!("`gen {what}` needs a size argument")))
    };
    let refuse = |what: &str| match size {
        Some(_) => Err(CliError::Usage(format!(
            "`gen {what}` takes no size argument"
        ))),
        None => Ok(()),
    };
    Ok(match model {
        Model::Star => star(need("star")?)?,
        Model::Complete => complete(need("complete")?)?,
        Model::Graphc => graph_c(need("graphc")?)?,
        Model::Bipartiteb => {
            refuse("bipartiteb")?;
            bipartite_b()
        }
        Model::Karate => {
            refuse("karate")?;
            datasets::karate()
        }
    })
}

#[derive(Serialize)]
struct InfoReport {
    graph: String,
    n: usize,
    edges: usize,
    weighted: bool,
    rescaled: bool,
    d_min: f64,
    d_max: f64,
    components: usize,
    isolated_vertices: usize,
    dropped_vertices: usize,
    class_tag: Option<ClassTag>,
    region: RegionClassification,
}

fn info(input: &Input, out: &mut dyn Write) -> Result<()> {
    let g = &input.loaded.graph;
    let ds = g.degree_summary();
    let report = InfoReport {
        graph: input.id.clone(),
        n: g.n(),
        edges: g.edge_count(),
        weighted: !g.is_unweighted(),
        rescaled: input.loaded.rescaled,
        d_min: ds.d_min,
        d_max: ds.d_max,
        components: connected_components(g).component_count,
        isolated_vertices: ds.degrees.iter().filter(|&&d| d <= 0.0).count(),
        dropped_vertices: input.original_n - g.n(),
        class_tag: ds.class_tag(),
        region: classify_region(&ds),
    };
    json(out, &report)
}

#[derive(Serialize)]
struct SpectrumRow {
    index: usize,
    value: f64,
}

fn spectra(
    input: &Input,
    kind: RepresentationKind,
    format: DataFormat,
    out: &mut dyn Write,
) -> Result<()> {
    let s = spectrum(&input.loaded.graph, kind)?;
    match format {
        DataFormat::Json => json(out, &s),
        DataFormat::Csv => {
            let rows: Vec<SpectrumRow> = s
                .values
                .iter()
                .enumerate()
                .map(|(i, &value)| SpectrumRow {
                    index: i + 1,
                    value,
                })
                .collect();
            csv_rows(out, &rows)
        }
    }
}

#[derive(Serialize)]
struct PairCheck {
    pair: Pair,
    bound: f64,
    max_abs: f64,
    verified: bool,
}

#[derive(Serialize)]
struct BoundsReport {
    graph: String,
    d_min: f64,
    d_max: f64,
    region: RegionClassification,
    bounds: BoundSet,
    /// Per-pair largest observed difference; pairs involving `L_rw` are
    /// omitted when the graph has isolated vertices.
    pairs: Vec<PairCheck>,
}

/// Pairs computable on `g`: an isolated vertex rules out those with `L_rw`.
fn computable_pairs(g: &Graph) -> Result<Vec<gspec_core::bounds::PairSpectra>> {
    let mut out = Vec::new();
    for pair in Pair::ALL {
        match pair_spectra(pair, g) {
            Ok(ps) => out.push(ps),
            Err(CoreError::IsolatedVertex | CoreError::DegenerateDegrees) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(out)
}

fn bounds(input: &Input, format: ReportFormat, out: &mut dyn Write) -> Result<()> {
    let g = &input.loaded.graph;
    let ds = g.degree_summary();
    let b = eigenvalue_bound_set(&ds);
    let pairs: Vec<PairCheck> = computable_pairs(g)?
        .iter()
        .map(|ps| {
            let d = ps.differences();
            PairCheck {
                pair: d.pair,
                bound: d.bound,
                max_abs: d.max_abs,
                verified: d.verified,
            }
        })
        .collect();
    let report = BoundsReport {
        graph: input.id.clone(),
        d_min: ds.d_min,
        d_max: ds.d_max,
        region: classify_region(&ds),
        bounds: b,
        pairs,
    };
    match format {
        ReportFormat::Json => json(out, &report),
        ReportFormat::Text => {
            let f = |x: Option<f64>| {
                x.map_or_else(|| table::UNDEFINED.to_string(), |v| format!("{v:.2}"))
            };
            let mut s = format!(
                "{}: d_min {} d_max {}, region {} ({})\n",
                report.graph, ds.d_min, ds.d_max, report.region.label, report.region.ordering
            );
            s += &format!("e_AL    {}\n", f(Some(b.e_al)));
            s += &format!("e_LLrw  {}\n", f(b.e_llrw));
            s += &format!("e_ALrw  {}\n", f(b.e_alrw));
            s += &format!("e'_ALrw {} (inner interval)\n", f(b.e_prime_alrw));
            for p in &report.pairs {
                s += &format!(
                    "{:<6} max |delta| {:.4} <= {:.4}: {}\n",
                    p.pair.tag(),
                    p.max_abs,
                    p.bound,
                    if p.verified { "ok" } else { "VIOLATED" }
                );
            }
            out.write_all(s.as_bytes()).map_err(CliError::stdout)
        }
    }
}

#[derive(Serialize)]
struct GapCheck {
    pair: Pair,
    bound: f64,
    max_abs: f64,
    verified: bool,
    primed_bound: Option<f64>,
    primed_max_abs: Option<f64>,
    primed_verified: Option<bool>,
}

#[derive(Serialize)]
struct GapsReport {
    graph: String,
    d_min: f64,
    d_max: f64,
    bounds: GapBoundSet,
    pairs: Vec<GapCheck>,
}

fn gaps(input: &Input, out: &mut dyn Write) -> Result<()> {
    let g = &input.loaded.graph;
    let ds = g.degree_summary();
    let bounds = gap_bound_set(&ds)?;
    let pairs = computable_pairs(g)?
        .iter()
        .map(|ps| {
            let d = ps.gap_differences();
            GapCheck {
                pair: d.pair,
                bound: d.bound,
                max_abs: d.max_abs,
                verified: d.verified,
                primed_bound: d.primed.as_ref().map(|p| p.bound),
                primed_max_abs: d.primed.as_ref().map(|p| p.max_abs),
                primed_verified: d.primed.as_ref().map(|p| p.verified),
            }
        })
        .collect();
    json(
        out,
        &GapsReport {
            graph: input.id.clone(),
            d_min: ds.d_min,
            d_max: ds.d_max,
            bounds,
            pairs,
        },
    )
}

#[derive(Serialize)]
struct TableRow {
    d_max: u32,
    d_min: u32,
    e_al: Option<f64>,
    e_llrw: Option<f64>,
    e_alrw: Option<f64>,
    e_prime_alrw: Option<f64>,
    region: Option<String>,
    rendered: String,
}

fn table(dmin_max: u32, dmax_max: u32, format: TableFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        TableFormat::Text => out
            .write_all(table::render_text(dmin_max, dmax_max).as_bytes())
            .map_err(CliError::stdout),
        TableFormat::Json => json(out, &table::cells(dmin_max, dmax_max)),
        TableFormat::Csv => {
            let rows: Vec<TableRow> = table::cells(dmin_max, dmax_max)
                .into_iter()
                .map(|c| TableRow {
                    d_max: c.d_max,
                    d_min: c.d_min,
                    e_al: c.bounds.map(|b| b.e_al),
                    e_llrw: c.bounds.and_then(|b| b.e_llrw),
                    e_alrw: c.bounds.and_then(|b| b.e_alrw),
                    e_prime_alrw: c.bounds.and_then(|b| b.e_prime_alrw),
                    region: c.region.map(|r| r.to_string()),
                    rendered: c.rendered,
                })
                .collect();
            csv_rows(out, &rows)
        }
    }
}

#[derive(Serialize)]
struct RegionReport {
    d_min: f64,
    d_max: f64,
    region: RegionClassification,
    bounds: BoundSet,
}

#[derive(Serialize)]
struct TruthComparison {
    truth: String,
    misplaced: usize,
    /// 1-based vertex numbers.
    misplaced_vertices: Vec<usize>,
}

impl TruthComparison {
    fn new(c: &ClusterComparison, truth: &str) -> Self {
        TruthComparison {
            truth: truth.to_string(),
            misplaced: c.misplaced,
            misplaced_vertices: c.misplaced_ids.iter().map(|i| i + 1).collect(),
        }
    }
}

#[derive(Serialize)]
struct ClusterReport {
    kind: RepresentationKind,
    k: usize,
    seed: u64,
    restarts: usize,
    labels: Vec<usize>,
    cluster_sizes: Vec<usize>,
    inertia: f64,
    empty_clusters: Vec<usize>,
    comparison: Option<TruthComparison>,
}

#[derive(Serialize)]
struct CrossoverOut {
    pair: Pair,
    bound: f64,
    tolerance: f64,
    /// 1-based `i` such that `delta_i` and `delta_{i+1}` sit at opposite
    /// ends of `[-bound, bound]`.
    indices: Vec<usize>,
    /// `(delta_i, delta_{i+1})` for each reported index.
    deltas: Vec<(f64, f64)>,
    /// Normalised eigengap difference at gap `i` for each reported index.
    gap_differences: Vec<f64>,
    gap_bound: f64,
}

fn crossover(g: &Graph, pair: Pair, tol: f64, out: &mut dyn Write) -> Result<()> {
    let ps = pair_spectra(pair, g)?;
    let d = ps.differences();
    let gd = ps.gap_differences();
    let report = detect_maximal_crossover(&d.deltas, d.bound, tol)?;
    json(
        out,
        &CrossoverOut {
            pair,
            bound: d.bound,
            tolerance: report.tolerance,
            deltas: report
                .indices
                .iter()
                .map(|&i| (d.deltas[i - 1], d.deltas[i]))
                .collect(),
            gap_differences: report.indices.iter().map(|&i| gd.diffs[i - 1]).collect(),
            indices: report.indices,
            gap_bound: gd.bound,
        },
    )
}

#[derive(Serialize)]
struct SweepRow {
    k: usize,
    kind: &'static str,
    index: usize,
    normalized_gap: f64,
    /// 1 or 2 for the two largest notable gaps.
    rank: Option<usize>,
}
