//! Scenario loading, Eve grids, evaluation, sweeps and CSV export.

pub mod evaluate;
pub mod export;
pub mod grid;
pub mod scenario;
pub mod sweep;

pub use evaluate::{bob_snr_cancelled, evaluate_baseline, evaluate_scenario};
pub use export::{export_report, CsvExport, ExportFormat};
pub use grid::build_eve_grid;
pub use scenario::{load_scenario, parse_scenario, Scenario, ScenarioFile};
pub use sweep::{known_eve_map, run_sweep, unknown_eve_map, Mode, SweepSpec, SweepTable};
