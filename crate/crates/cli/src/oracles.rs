//! Oracle construction from command-line options.

use serde_json::{json, Value};
use transreach::planar::{build_planar_oracle_with, PlanarOptions, PlanarOracle};
use transreach::sample::{build_sample_oracle_with, SampleOptions, SampleOracle};
use transreach::separator::{RepChoice, SeparatorOracle};
use transreach::{
    build_oracle_1d, build_separator_oracle, BruteOracle, Oracle1D, PointSet, ReachabilityOracle,
    Result, SeparatorConfig,
};

use crate::{OracleArgs, OracleKind};

pub enum Built {
    Oned(Oracle1D),
    Planar(PlanarOracle),
    Separator(SeparatorOracle),
    Sample(SampleOracle),
    Brute(BruteOracle),
}

pub fn build(ps: &PointSet, args: &OracleArgs) -> Result<Built> {
    Ok(match args.oracle {
        OracleKind::Oned => Built::Oned(build_oracle_1d(ps)?),
        OracleKind::Planar => Built::Planar(build_planar_oracle_with(
            ps,
            PlanarOptions {
                allow_psi_up_to_two: args.allow_psi_two,
            },
        )?),
        OracleKind::Separator => {
            let cfg = SeparatorConfig {
                representative: if args.largest_rep {
                    RepChoice::Largest
                } else {
                    RepChoice::Smallest
                },
                ..SeparatorConfig::default()
            };
            Built::Separator(build_separator_oracle(ps, cfg)?)
        }
        OracleKind::Sample => Built::Sample(build_sample_oracle_with(
            ps,
            SampleOptions {
                seed: args.seed,
                alpha: args.alpha,
                force_empty_sample: args.empty_sample,
            },
        )?),
        OracleKind::Brute => Built::Brute(BruteOracle::new(ps)),
    })
}

impl Built {
    pub fn oracle(&self) -> &dyn ReachabilityOracle {
        match self {
            Built::Oned(o) => o,
            Built::Planar(o) => o,
            Built::Separator(o) => o,
            Built::Sample(o) => o,
            Built::Brute(o) => o,
        }
    }

    /// Oracle-specific measurements for the report.
    pub fn metrics(&self) -> Value {
        match self {
            Built::Oned(o) => json!({ "components": o.num_components() }),
            Built::Planar(o) => {
                let s = o.stats();
                json!({
                    "nonempty_cells": s.nonempty_cells,
                    "sparse_edges": s.sparse_edges,
                    "emst_edges": s.emst_edges,
                    "crossings": s.crossing_pairs,
                    "plane_vertices": s.plane_vertices,
                    "plane_edges": s.plane_edges,
                    "components": s.components,
                    "crossings_per_point": s.crossing_pairs as f64 / s.n as f64,
                })
            }
            Built::Separator(o) => serde_json::to_value(o.stats()).unwrap(),
            Built::Sample(o) => serde_json::to_value(o.stats()).unwrap(),
            Built::Brute(o) => json!({ "edges": o.graph().m() }),
        }
    }
}
