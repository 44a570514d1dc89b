//! Bundled data sets.

use crate::graph::Graph;
use crate::io::{load_labels, load_pajek};

/// Zachary's karate club friendship network (34 vertices, 78 edges) as a
/// Pajek file with the conventional 1-based member numbering.
pub const KARATE_PAJEK: &str = include_str!("../data/karate.net");

pub fn karate() -> Graph {
    load_pajek(KARATE_PAJEK)
        .expect("bundled karate file parses")
        .graph
}

/// Faction of each karate member after the split (`hi` / `officer`),
/// in the label-file format.
pub const KARATE_FACTIONS: &str = include_str!("../data/karate_factions.txt");

/// Faction labels, 0 for Mr. Hi's side and 1 for the officer's.
pub fn karate_factions() -> Vec<usize> {
    load_labels(KARATE_FACTIONS, 34).expect("bundled faction file parses")
}
