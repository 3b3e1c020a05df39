use socnet_core::stats::global_stats;
use socnet_core::Result;

use super::{csv_bytes, format_name, load_input, print_stats_table, stats_display_fields, stats_fields, STATS_COLUMNS};
use crate::args::StatsArgs;
use crate::manifest::{to_json_bytes, OutDir, RunManifest};

pub fn run(a: &StatsArgs, out: &mut OutDir) -> Result<()> {
    let loaded = load_input(&a.input)?;
    let stats = global_stats(&loaded.graph, a.ccg_mode.into())?;

    print_stats_table(&[(None, stats_display_fields(&stats))]);

    let csv = csv_bytes(|w| {
        w.write_record(STATS_COLUMNS)?;
        w.write_record(stats_fields(&stats))
    })?;
    out.write("stats.csv", &csv)?;
    out.write("stats.json", &to_json_bytes(&stats)?)?;

    let mut m = RunManifest::new("stats");
    m.flag("input", a.input.input.display());
    m.flag("format", format_name(loaded.format));
    m.flag("lcc", a.input.lcc);
    m.flag("ccg-mode", a.ccg_mode);
    m.flag("out-dir", a.out_dir.display());
    m.inputs = vec![loaded.digest];
    m.write(out)
}
