use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use vlc_ris::harness::export::{export_area_summary, export_outage_curve, export_trace, export_yaw};
use vlc_ris::harness::{
    build_eve_grid, evaluate_scenario, export_report, known_eve_map, load_scenario, run_sweep, unknown_eve_map,
    ExportFormat, Mode, Scenario,
};
use vlc_ris::optimizer::{optimize_known_eve, PsoResult};
use vlc_ris::Error;

const EXIT_IO: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_UNCONVERGED: u8 = 3;

#[derive(Parser)]
#[command(version, about = "RIS-steered jamming and secrecy capacity for indoor VLC")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the scenario's RIS yaw over the Eve grid.
    Simulate(Common),
    /// Optimize RIS yaw for a known Eve location or an area of candidates.
    Optimize {
        #[arg(long, value_parser = ["known", "unknown"])]
        mode: String,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep RIS size and jamming power, recording maps and outage curves.
    Sweep {
        #[arg(long, value_parser = ["known", "unknown"], default_value = "unknown")]
        mode: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Scenario JSON; omitted keys take the built-in defaults.
    #[arg(long)]
    scenario: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Points per axis of the Eve grid.
    #[arg(long)]
    grid_res: Option<usize>,
    #[arg(long)]
    ris_size: Option<usize>,
    /// Jammed share M/N of each message.
    #[arg(long)]
    jam_fraction: Option<f64>,
    /// Exit with status 3 when more than this share of solver runs fails to converge.
    #[arg(long, default_value_t = 1.0)]
    max_unconverged: f64,
}

struct Prepared {
    scenario: Scenario,
    grid_res: usize,
}

fn prepare(c: &Common) -> vlc_ris::Result<Prepared> {
    let mut s = match &c.scenario {
        Some(p) => load_scenario(p)?,
        None => Scenario::default(),
    };
    if let Some(seed) = c.seed {
        s.optimizer.seed = seed;
    }
    if let Some(k) = c.ris_size {
        s = s.with_ris_size(k)?;
        s.sweep.ris_sizes = vec![k];
    }
    if let Some(f) = c.jam_fraction {
        s = s.with_jam_fraction(f)?;
        s.sweep.jam_fractions = vec![f];
    }
    if let Some(r) = c.grid_res {
        s.sweep.grid_resolution = r;
    }
    if !(0.0..=1.0).contains(&c.max_unconverged) {
        return Err(Error::invalid("max-unconverged", "must lie in [0, 1]"));
    }
    std::fs::create_dir_all(&c.out).map_err(|e| Error::io(&c.out, e))?;
    let grid_res = s.sweep.grid_resolution;
    Ok(Prepared { scenario: s, grid_res })
}

fn simulate(c: &Common) -> vlc_ris::Result<f64> {
    let Prepared { scenario: s, grid_res } = prepare(c)?;
    let grid = build_eve_grid(&s, grid_res)?;
    let report = evaluate_scenario(&s, &s.ris.yaw, &grid)?;
    write_maps(&s, &report, &s.sweep.thresholds, &c.out)?;
    println!(
        "K={} P_j={} points={} area_c_s={:.6} mean_c_s={:.6}",
        s.ris_size(),
        s.p_j(),
        grid.len(),
        report.area_c_s,
        report.mean_c_s()
    );
    Ok(0.0)
}

fn optimize(mode: Mode, c: &Common) -> vlc_ris::Result<f64> {
    let Prepared { scenario: s, grid_res } = prepare(c)?;
    let grid = build_eve_grid(&s, grid_res)?;
    let (report, runs): (_, Vec<PsoResult>) = match (mode, s.eve_location) {
        (Mode::Known, Some(p)) => {
            let run = optimize_known_eve(&s, &s.eve_pose(p))?;
            let report = evaluate_scenario(&s, &run.best_yaw, &grid)?;
            (report, vec![run])
        }
        (Mode::Known, None) => {
            let map = known_eve_map(&s, &grid)?;
            (map.report, map.runs)
        }
        (Mode::Unknown, _) => {
            let (report, run) = unknown_eve_map(&s, &grid)?;
            (report, vec![run])
        }
    };
    write_maps(&s, &report, &s.sweep.thresholds, &c.out)?;
    if let [run] = runs.as_slice() {
        export_trace(run, c.out.join("trace.csv"))?;
        export_yaw(&run.best_yaw, c.out.join("yaw.csv"))?;
        println!(
            "best objective {:.9e} after {} iterations ({} evaluations, converged: {})",
            run.best_value,
            run.iterations(),
            run.evaluations,
            run.converged
        );
    }
    println!("area_c_s={:.6} mean_c_s={:.6}", report.area_c_s, report.mean_c_s());
    Ok(unconverged_share(&runs))
}

fn sweep(mode: Mode, c: &Common) -> vlc_ris::Result<f64> {
    let Prepared { scenario: s, .. } = prepare(c)?;
    let table = run_sweep(&s, &s.sweep, mode)?;
    export_report(&table, c.out.join("outage.csv"), ExportFormat::Csv)?;
    export_report(&table, c.out.join("secrecy_map.csv"), ExportFormat::HeatmapCsv)?;
    export_area_summary(&table, c.out.join("area.csv"))?;
    for cell in &table.cells {
        println!(
            "K={:>2} P_j={:.3} area_c_s={:.6} unconverged={}/{}",
            cell.ris_size, cell.p_j, cell.report.area_c_s, cell.unconverged_runs, cell.solver_runs
        );
    }
    Ok(table.unconverged_fraction())
}

fn write_maps(
    s: &Scenario,
    report: &vlc_ris::secrecy::SecrecyReport,
    thresholds: &[f64],
    out: &Path,
) -> vlc_ris::Result<()> {
    export_report(report, out.join("secrecy_map.csv"), ExportFormat::HeatmapCsv)?;
    export_outage_curve(report, s.ris_size(), s.p_j(), thresholds, out.join("outage.csv"))
}

fn unconverged_share(runs: &[PsoResult]) -> f64 {
    if runs.is_empty() {
        return 0.0;
    }
    runs.iter().filter(|r| !r.converged).count() as f64 / runs.len() as f64
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, outcome) = match &cli.command {
        Command::Simulate(c) => (c, simulate(c)),
        Command::Optimize { mode, common } => (common, mode.parse().and_then(|m| optimize(m, common))),
        Command::Sweep { mode, common } => (common, mode.parse().and_then(|m| sweep(m, common))),
    };
    match outcome {
        Ok(share) if share > common.max_unconverged => {
            eprintln!(
                "warning: {:.1}% of solver runs did not converge (limit {:.1}%)",
                100.0 * share,
                100.0 * common.max_unconverged
            );
            ExitCode::from(EXIT_UNCONVERGED)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_validation() { EXIT_VALIDATION } else { EXIT_IO })
        }
    }
}
