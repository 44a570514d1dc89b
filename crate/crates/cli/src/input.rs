//! Loading graphs and label files named on the command line.

use std::path::Path;

use clap::ValueEnum;
use gspec_core::datasets;
use gspec_core::io::{load_edge_list, load_labels, load_pajek, Loaded};

use crate::error::{CliError, Result};

/// Name of the bundled karate network (and, for `--truth`, its factions).
pub const KARATE: &str = "@karate";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// `.net` is Pajek, everything else an edge list
    Auto,
    Edgelist,
    Pajek,
}

#[derive(Debug, Clone)]
pub struct Input {
    /// Short identifier used in plot metadata (file stem).
    pub id: String,
    pub loaded: Loaded,
    /// Vertex count in the file, before any isolated vertices were dropped.
    pub original_n: usize,
    /// Original ids (0-based positions in the file) of the kept vertices
    /// when isolated vertices were dropped.
    pub kept: Option<Vec<usize>>,
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

pub fn load_graph(file: &str, format: InputFormat, drop_isolated: bool) -> Result<Input> {
    let (id, loaded) = if file == KARATE {
        ("karate".to_string(), load_pajek(datasets::KARATE_PAJEK)?)
    } else {
        let path = Path::new(file);
        let pajek = match format {
            InputFormat::Pajek => true,
            InputFormat::Edgelist => false,
            InputFormat::Auto => path
                .extension()
                .is_some_and(|e| e.eq_ignore_ascii_case("net")),
        };
        let text = read(file)?;
        let loaded = if pajek {
            load_pajek(&text)?
        } else {
            load_edge_list(&text)?
        };
        let id = path
            .file_stem()
            .map_or_else(|| file.to_string(), |s| s.to_string_lossy().into_owned());
        (id, loaded)
    };
    let mut input = Input {
        id,
        original_n: loaded.graph.n(),
        loaded,
        kept: None,
    };
    if drop_isolated {
        let (g, kept) = input.loaded.graph.without_isolated();
        input.loaded.graph = g;
        input.kept = Some(kept);
    }
    Ok(input)
}

/// Labels for the `n` vertices of a graph, from a file or the bundled
/// karate factions.
pub fn load_truth(spec: &str, n: usize) -> Result<Vec<usize>> {
    if spec == KARATE {
        let labels = datasets::karate_factions();
        if labels.len() != n {
            return Err(CliError::Usage(format!(
                "{KARATE} labels cover {} vertices but the graph has {n}",
                labels.len()
            )));
        }
        return Ok(labels);
    }
    Ok(load_labels(&read(spec)?, n)?)
}
