use socnet_core::io::write_snap_edgelist;
use socnet_core::sampling::{run_repeated, SamplerConfig};
use socnet_core::{Error, Result};

use super::{format_name, load_input};
use crate::args::SampleArgs;
use crate::manifest::{OutDir, RunManifest};

pub fn run(a: &SampleArgs, out: &mut OutDir) -> Result<()> {
    let loaded = load_input(&a.input)?;
    let cfg = SamplerConfig {
        method: a.method.into(),
        target_size: a.size as usize,
        rng_seed: a.seed,
        on_exhaustion: a.on_exhaustion.into(),
    };
    let run = run_repeated(&loaded.graph, &cfg, a.count as usize)?;

    let mut details = Vec::with_capacity(run.samples.len());
    for (i, s) in run.samples.iter().enumerate() {
        let name = format!("sample_{i:03}.txt");
        let mut bytes = Vec::new();
        write_snap_edgelist(&s.graph, &mut bytes)?;
        out.write(&name, &bytes)?;
        let nodes = s.graph.node_count();
        let edges = s.graph.edge_count();
        let mut line = format!(
            "{name}  seed={}  nodes={nodes}  edges={edges}",
            s.seed
        );
        for e in &s.exhaustion {
            match e.reseeded_at {
                Some(v) => line.push_str(&format!(
                    "  [supply ran out at {} nodes; reseeded from node {v}]",
                    e.collected
                )),
                None => line.push_str(&format!(
                    "  [supply ran out at {} nodes; kept partial sample]",
                    e.collected
                )),
            }
        }
        println!("{line}");
        details.push(serde_json::json!({
            "file": name,
            "seed": s.seed,
            "nodes": nodes,
            "edges": edges,
            "exhaustion": to_value(&s.exhaustion)?,
        }));
    }

    let mut m = RunManifest::new("sample");
    m.seed = Some(a.seed);
    m.flag("input", a.input.input.display());
    m.flag("format", format_name(loaded.format));
    m.flag("lcc", a.input.lcc);
    m.flag("method", a.method);
    m.flag("size", a.size);
    m.flag("count", a.count);
    m.flag("seed", a.seed);
    m.flag("on-exhaustion", a.on_exhaustion);
    m.flag("out-dir", a.out_dir.display());
    m.inputs = vec![loaded.digest];
    m.details = serde_json::json!({ "samples": details });
    m.write(out)
}

fn to_value<T: serde::Serialize>(v: &T) -> Result<serde_json::Value> {
    serde_json::to_value(v).map_err(|e| Error::Io(std::io::Error::other(e)))
}
