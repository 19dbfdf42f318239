//! Sweep harness: a grid of (user count, sector layout, panel on/off) cells,
//! each replicated across seeds, reduced to per-cell means and standard
//! deviations, and exported as tidy CSV or JSON.
//!
//! Cell seeds derive from the base seed and the cell's own coordinates
//! (user count, sector count, replication index), never from the cell's
//! position in the grid, so a cell's numbers do not move when the grid
//! around it changes. The panel flag is deliberately left out of the seed:
//! the on and off runs of a pair then see the same user population, which
//! makes their comparison free of sampling noise.

use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::admission::{run_admission_control, AdmissionResult};
use crate::error::{Error, Result};
use crate::rng::mix_coordinates;
use crate::workload::{generate_scenario, Scenario, ScenarioConfig, ServiceKind};

/// One grid axis entry: a sector layout with the panel on or off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellConfiguration {
    pub sector_count: usize,
    pub ris_enabled: bool,
}

/// The sweep grid and the scenario template every cell starts from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepConfig {
    /// Population sizes, strictly increasing.
    pub user_counts: Vec<usize>,
    pub configurations: Vec<CellConfiguration>,
    /// Seeded repetitions per cell.
    pub replications: usize,
    pub base_seed: u64,
    /// Template for every cell; the per-cell user count, sector count, panel
    /// flag, and seed overwrite the matching fields.
    pub scenario: ScenarioConfig,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            user_counts: (1..=10).map(|k| k * 50).collect(),
            configurations: vec![
                CellConfiguration { sector_count: 2, ris_enabled: true },
                CellConfiguration { sector_count: 2, ris_enabled: false },
                CellConfiguration { sector_count: 3, ris_enabled: true },
                CellConfiguration { sector_count: 3, ris_enabled: false },
            ],
            replications: 20,
            base_seed: 0x5eed,
            scenario: ScenarioConfig::default(),
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.user_counts.is_empty() {
            return Err(Error::InvalidConfig("user_counts must not be empty".into()));
        }
        let increasing = self
            .user_counts
            .windows(2)
            .all(|w| w[0] < w[1]);
        if !increasing || self.user_counts[0] == 0 {
            return Err(Error::InvalidConfig(
                "user_counts must be positive and strictly increasing".into(),
            ));
        }
        if self.configurations.is_empty() {
            return Err(Error::InvalidConfig("configurations must not be empty".into()));
        }
        for c in &self.configurations {
            if !(c.sector_count == 2 || c.sector_count == 3) {
                return Err(Error::InvalidConfig(format!(
                    "sector_count must be 2 or 3, got {}",
                    c.sector_count
                )));
            }
        }
        if self.replications == 0 {
            return Err(Error::InvalidConfig("replications must be at least 1".into()));
        }
        Ok(())
    }
}

/// Admission rate per service class; `None` where the class has no users.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassRates {
    pub eurllc: Option<f64>,
    pub fembb: Option<f64>,
    pub ummtc: Option<f64>,
}

impl ClassRates {
    pub fn get(&self, kind: ServiceKind) -> Option<f64> {
        match kind {
            ServiceKind::Eurllc => self.eurllc,
            ServiceKind::Fembb => self.fembb,
            ServiceKind::Ummtc => self.ummtc,
        }
    }

    fn set(&mut self, kind: ServiceKind, value: Option<f64>) {
        match kind {
            ServiceKind::Eurllc => self.eurllc = value,
            ServiceKind::Fembb => self.fembb = value,
            ServiceKind::Ummtc => self.ummtc = value,
        }
    }
}

/// Headline numbers of one admission run. Slice rates are `None` when the
/// slice holds no users, never zero by convention.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub overall_admission_rate: Option<f64>,
    pub per_class_admission_rate: ClassRates,
    /// Indexed by sector.
    pub per_sector_admission_rate: Vec<Option<f64>>,
    /// Bandwidth claimed by admitted users over the cell cap.
    pub bandwidth_utilization: f64,
    /// Mean end-to-end delay over admitted users only.
    pub mean_latency: Option<f64>,
    pub objective_value: f64,
}

/// Reduces one scenario plus its admission outcome to metrics. The outcome
/// must hold exactly the scenario's users in order.
pub fn compute_metrics(scenario: &Scenario, result: &AdmissionResult) -> Result<Metrics> {
    let users = &scenario.users;
    if result.outcomes.len() != users.len() {
        return Err(Error::MismatchedInputs(format!(
            "{} outcomes for {} users",
            result.outcomes.len(),
            users.len()
        )));
    }
    for (u, o) in users.iter().zip(&result.outcomes) {
        if u.id != o.user_id {
            return Err(Error::MismatchedInputs(format!(
                "outcome id {} does not match user id {}",
                o.user_id, u.id
            )));
        }
    }

    let rate = |admitted: usize, total: usize| -> Option<f64> {
        (total > 0).then(|| admitted as f64 / total as f64)
    };

    let sectors = usize::from(scenario.sector_count);
    let admitted_total = result.admitted_count();
    let mut class_admitted = [0usize; 3];
    let mut class_total = [0usize; 3];
    let mut sector_admitted = vec![0usize; sectors];
    let mut sector_total = vec![0usize; sectors];
    let mut bandwidth = 0.0;
    let mut latency = 0.0;
    for (u, o) in users.iter().zip(&result.outcomes) {
        class_total[u.class.index()] += 1;
        sector_total[usize::from(u.sector)] += 1;
        if o.admitted {
            class_admitted[u.class.index()] += 1;
            sector_admitted[usize::from(u.sector)] += 1;
            bandwidth += u.bandwidth_hz;
            latency += o.delay_s;
        }
    }

    let mut per_class = ClassRates { eurllc: None, fembb: None, ummtc: None };
    for kind in ServiceKind::ALL {
        per_class.set(kind, rate(class_admitted[kind.index()], class_total[kind.index()]));
    }
    Ok(Metrics {
        overall_admission_rate: rate(admitted_total, users.len()),
        per_class_admission_rate: per_class,
        per_sector_admission_rate: (0..sectors)
            .map(|s| rate(sector_admitted[s], sector_total[s]))
            .collect(),
        bandwidth_utilization: bandwidth / scenario.bandwidth_capacity,
        mean_latency: (admitted_total > 0).then(|| latency / admitted_total as f64),
        objective_value: result.objective_value,
    })
}

/// Mean and standard deviation of one grid cell across its replications.
/// The `std_dev` side reuses the metric layout; every present field holds
/// the sample standard deviation of that metric.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    pub user_count: usize,
    pub sector_count: usize,
    pub ris_enabled: bool,
    pub replications: usize,
    pub mean: Metrics,
    pub std_dev: Metrics,
}

/// The whole sweep, cells ordered by user count then configuration order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub base_seed: u64,
    pub cells: Vec<CellSummary>,
}

impl ExperimentReport {
    pub fn cell(&self, user_count: usize, sector_count: usize, ris: bool) -> Option<&CellSummary> {
        self.cells.iter().find(|c| {
            c.user_count == user_count && c.sector_count == sector_count && c.ris_enabled == ris
        })
    }
}

/// Mean and sample standard deviation over the present values; `None` when
/// nothing is present. A single sample has deviation zero.
fn reduce(samples: &[Option<f64>]) -> (Option<f64>, Option<f64>) {
    let values: Vec<f64> = samples.iter().flatten().copied().collect();
    if values.is_empty() {
        return (None, None);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let std = if values.len() < 2 {
        0.0
    } else {
        let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
        (ss / (n - 1.0)).sqrt()
    };
    (Some(mean), Some(std))
}

fn summarize(
    user_count: usize,
    configuration: &CellConfiguration,
    replications: usize,
    runs: &[Metrics],
) -> CellSummary {
    let sectors = configuration.sector_count;
    let pick = |f: &dyn Fn(&Metrics) -> Option<f64>| -> Vec<Option<f64>> {
        runs.iter().map(f).collect()
    };
    let (overall_m, overall_s) = reduce(&pick(&|m| m.overall_admission_rate));
    let (bw_m, bw_s) = reduce(&pick(&|m| Some(m.bandwidth_utilization)));
    let (lat_m, lat_s) = reduce(&pick(&|m| m.mean_latency));
    let (obj_m, obj_s) = reduce(&pick(&|m| Some(m.objective_value)));

    let mut class_mean = ClassRates { eurllc: None, fembb: None, ummtc: None };
    let mut class_std = class_mean;
    for kind in ServiceKind::ALL {
        let (m, s) = reduce(&pick(&|mt| mt.per_class_admission_rate.get(kind)));
        class_mean.set(kind, m);
        class_std.set(kind, s);
    }

    let mut sector_mean = Vec::with_capacity(sectors);
    let mut sector_std = Vec::with_capacity(sectors);
    for s in 0..sectors {
        let (m, sd) = reduce(&pick(&|mt| mt.per_sector_admission_rate[s]));
        sector_mean.push(m);
        sector_std.push(sd);
    }

    CellSummary {
        user_count,
        sector_count: sectors,
        ris_enabled: configuration.ris_enabled,
        replications,
        mean: Metrics {
            overall_admission_rate: overall_m,
            per_class_admission_rate: class_mean,
            per_sector_admission_rate: sector_mean,
            bandwidth_utilization: bw_m.unwrap_or(0.0),
            mean_latency: lat_m,
            objective_value: obj_m.unwrap_or(0.0),
        },
        std_dev: Metrics {
            overall_admission_rate: overall_s,
            per_class_admission_rate: class_std,
            per_sector_admission_rate: sector_std,
            bandwidth_utilization: bw_s.unwrap_or(0.0),
            mean_latency: lat_s,
            objective_value: obj_s.unwrap_or(0.0),
        },
    }
}

fn run_cell(
    cfg: &SweepConfig,
    user_count: usize,
    configuration: &CellConfiguration,
) -> Result<CellSummary> {
    let mut runs = Vec::with_capacity(cfg.replications);
    for replication in 0..cfg.replications {
        let seed = cfg.base_seed
            ^ mix_coordinates(&[
                user_count as u64,
                configuration.sector_count as u64,
                replication as u64,
            ]);
        let mut scenario_cfg = cfg.scenario.clone();
        scenario_cfg.n_users = user_count;
        scenario_cfg.sector_count = configuration.sector_count as u8;
        scenario_cfg.ris.enabled = configuration.ris_enabled;
        scenario_cfg.seed = seed;
        let cell = |e: Error| {
            Error::InvalidConfig(format!(
                "cell users={user_count} sectors={} ris={}: {e}",
                configuration.sector_count,
                if configuration.ris_enabled { "on" } else { "off" }
            ))
        };
        let scenario = generate_scenario(&scenario_cfg, seed).map_err(cell)?;
        let result = run_admission_control(
            &scenario,
            &scenario_cfg.weights,
            &scenario_cfg.thresholds,
            &scenario_cfg.channel,
        )
        .map_err(cell)?;
        runs.push(compute_metrics(&scenario, &result).map_err(cell)?);
    }
    Ok(summarize(user_count, configuration, cfg.replications, &runs))
}

/// Runs every cell of the grid, replicated and reduced. Cells run in
/// parallel; the report order is the deterministic grid order regardless.
pub fn run_sweep(cfg: &SweepConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let grid: Vec<(usize, CellConfiguration)> = cfg
        .user_counts
        .iter()
        .flat_map(|&count| cfg.configurations.iter().map(move |c| (count, *c)))
        .collect();
    let cells: Result<Vec<CellSummary>> = grid
        .par_iter()
        .map(|(count, configuration)| run_cell(cfg, *count, configuration))
        .collect();
    Ok(ExperimentReport { base_seed: cfg.base_seed, cells: cells? })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

fn format_value(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{x}"),
        None => String::new(),
    }
}

/// Serializes a report as tidy CSV: one row per (cell, statistic, metric).
pub fn report_to_csv(report: &ExperimentReport) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["user_count", "sectors", "ris", "replication_stat", "metric", "value"])?;
    for cell in &report.cells {
        let mut metrics: Vec<(String, Option<f64>, Option<f64>)> = vec![(
            "overall_admission_rate".into(),
            cell.mean.overall_admission_rate,
            cell.std_dev.overall_admission_rate,
        )];
        for kind in ServiceKind::ALL {
            metrics.push((
                format!("admission_rate_{}", kind.name()),
                cell.mean.per_class_admission_rate.get(kind),
                cell.std_dev.per_class_admission_rate.get(kind),
            ));
        }
        for s in 0..cell.sector_count {
            metrics.push((
                format!("admission_rate_sector{s}"),
                cell.mean.per_sector_admission_rate[s],
                cell.std_dev.per_sector_admission_rate[s],
            ));
        }
        metrics.push((
            "bandwidth_utilization".into(),
            Some(cell.mean.bandwidth_utilization),
            Some(cell.std_dev.bandwidth_utilization),
        ));
        metrics.push(("mean_latency".into(), cell.mean.mean_latency, cell.std_dev.mean_latency));
        metrics.push((
            "objective_value".into(),
            Some(cell.mean.objective_value),
            Some(cell.std_dev.objective_value),
        ));

        let ris = if cell.ris_enabled { "on" } else { "off" };
        for (name, mean, std) in metrics {
            for (stat, value) in [("mean", mean), ("std", std)] {
                writer.write_record([
                    cell.user_count.to_string(),
                    cell.sector_count.to_string(),
                    ris.to_string(),
                    stat.to_string(),
                    name.clone(),
                    format_value(value),
                ])?;
            }
        }
    }
    let bytes = writer.into_inner().map_err(|e| Error::InvalidConfig(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Writes a report to `path` in the given format. JSON round-trips through
/// [`import_report_json`] without loss.
pub fn export_report(report: &ExperimentReport, path: &Path, format: ReportFormat) -> Result<()> {
    let payload = match format {
        ReportFormat::Csv => report_to_csv(report)?,
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            s
        }
    };
    fs::write(path, payload)?;
    Ok(())
}

/// Reads back a JSON report written by [`export_report`].
pub fn import_report_json(path: &Path) -> Result<ExperimentReport> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admission::UserOutcome;
    use crate::geometry::Point3;
    use crate::workload::UserRequest;

    fn toy_scenario(n: usize, sectors: usize) -> Scenario {
        let users = (0..n)
            .map(|id| {
                let class = match id % 9 {
                    0 | 1 => ServiceKind::Eurllc,
                    8 => ServiceKind::Ummtc,
                    _ => ServiceKind::Fembb,
                };
                UserRequest {
                    id,
                    class,
                    priority: class.index() as u32 + 1,
                    sector: (id % sectors) as u8,
                    position: Point3::new(40.0 + id as f64 * 7.0, -35.0 + id as f64 * 9.0, 1.5),
                    arrival_s: id as f64 * 0.01,
                    deadline_s: 0.5,
                    compute_cycles: 5e8,
                    data_bits: 1e6,
                    bandwidth_hz: 1e7,
                }
            })
            .collect();
        Scenario {
            seed: 3,
            sector_count: sectors as u8,
            bs_position: Point3::new(0.0, 0.0, 25.0),
            ris_position: Point3::new(80.0, 0.0, 10.0),
            ris_elements: 128,
            ris_enabled: true,
            mec_capacity: 1e13,
            bandwidth_capacity: 2.5e9,
            users,
        }
    }

    fn outcome_for(scenario: &Scenario, admit: &dyn Fn(usize) -> bool) -> AdmissionResult {
        let outcomes: Vec<UserOutcome> = scenario
            .users
            .iter()
            .map(|u| UserOutcome {
                user_id: u.id,
                admitted: admit(u.id),
                ris_assigned: false,
                ris_elements: 0,
                compute_share: if admit(u.id) { 1e9 } else { 0.0 },
                rate_bps: if admit(u.id) { 1e8 } else { 0.0 },
                delay_s: if admit(u.id) { 0.05 + u.id as f64 * 0.01 } else { 0.0 },
                utility: if admit(u.id) { 0.5 } else { 0.0 },
            })
            .collect();
        AdmissionResult {
            outcomes,
            objective_value: 4.2,
            ris_utility: 0.0,
            rejection_penalty: 0.1,
            residual_compute: 0.0,
            residual_bandwidth: 0.0,
            residual_elements: 128,
        }
    }

    #[test]
    fn test_metrics_overall_rate() {
        let scenario = toy_scenario(10, 2);
        let result = outcome_for(&scenario, &|id| id < 7);
        let m = compute_metrics(&scenario, &result).unwrap();
        assert_eq!(m.overall_admission_rate, Some(0.7));
        assert_eq!(m.objective_value, 4.2);
        assert!(m.bandwidth_utilization > 0.0 && m.bandwidth_utilization <= 1.0);
    }

    #[test]
    fn test_metrics_all_admitted_is_one_everywhere() {
        let scenario = toy_scenario(18, 3);
        let result = outcome_for(&scenario, &|_| true);
        let m = compute_metrics(&scenario, &result).unwrap();
        assert_eq!(m.overall_admission_rate, Some(1.0));
        for kind in ServiceKind::ALL {
            assert_eq!(m.per_class_admission_rate.get(kind), Some(1.0));
        }
        for s in &m.per_sector_admission_rate {
            assert_eq!(*s, Some(1.0));
        }
    }

    // Class counts weight the class rates back into the overall rate.
    #[test]
    fn test_metrics_class_rates_aggregate_to_overall() {
        let scenario = toy_scenario(27, 3);
        let result = outcome_for(&scenario, &|id| id % 3 != 1);
        let m = compute_metrics(&scenario, &result).unwrap();
        let mut class_total = [0usize; 3];
        for u in &scenario.users {
            class_total[u.class.index()] += 1;
        }
        let weighted: f64 = ServiceKind::ALL
            .into_iter()
            .map(|k| {
                m.per_class_admission_rate.get(k).unwrap_or(0.0) * class_total[k.index()] as f64
            })
            .sum();
        let overall = m.overall_admission_rate.unwrap() * scenario.users.len() as f64;
        assert!((weighted - overall).abs() < 1e-9);
    }

    #[test]
    fn test_metrics_empty_class_is_null() {
        let mut scenario = toy_scenario(7, 2);
        for u in &mut scenario.users {
            u.class = ServiceKind::Fembb;
        }
        let result = outcome_for(&scenario, &|id| id < 3);
        let m = compute_metrics(&scenario, &result).unwrap();
        assert_eq!(m.per_class_admission_rate.eurllc, None);
        assert_eq!(m.per_class_admission_rate.ummtc, None);
        assert!(m.per_class_admission_rate.fembb.is_some());
    }

    #[test]
    fn test_metrics_no_admissions_has_null_latency() {
        let scenario = toy_scenario(5, 2);
        let result = outcome_for(&scenario, &|_| false);
        let m = compute_metrics(&scenario, &result).unwrap();
        assert_eq!(m.mean_latency, None);
        assert_eq!(m.overall_admission_rate, Some(0.0));
        assert_eq!(m.bandwidth_utilization, 0.0);
    }

    #[test]
    fn test_metrics_reject_mismatched_result() {
        let scenario = toy_scenario(5, 2);
        let other = toy_scenario(4, 2);
        let result = outcome_for(&other, &|_| true);
        assert!(compute_metrics(&scenario, &result).is_err());
    }

    fn small_sweep() -> SweepConfig {
        let mut cfg = SweepConfig {
            user_counts: vec![9, 18],
            configurations: vec![
                CellConfiguration { sector_count: 2, ris_enabled: true },
                CellConfiguration { sector_count: 2, ris_enabled: false },
            ],
            replications: 2,
            base_seed: 42,
            scenario: ScenarioConfig::default(),
        };
        cfg.scenario.n_users = 9;
        cfg
    }

    #[test]
    fn test_sweep_shape_and_determinism() {
        let cfg = small_sweep();
        let a = run_sweep(&cfg).unwrap();
        let b = run_sweep(&cfg).unwrap();
        assert_eq!(a.cells.len(), 4);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        // Grid order: user counts outer, configurations inner.
        let keys: Vec<(usize, bool)> = a.cells.iter().map(|c| (c.user_count, c.ris_enabled)).collect();
        assert_eq!(keys, vec![(9, true), (9, false), (18, true), (18, false)]);
        for cell in &a.cells {
            for v in [
                cell.mean.overall_admission_rate,
                cell.mean.per_class_admission_rate.fembb,
            ]
            .into_iter()
            .flatten()
            {
                assert!((0.0..=1.0).contains(&v));
            }
        }
    }

    // A cell's numbers depend only on its own coordinates, not on the rest
    // of the grid.
    #[test]
    fn test_sweep_cells_do_not_depend_on_grid() {
        let cfg = small_sweep();
        let full = run_sweep(&cfg).unwrap();
        let mut narrow_cfg = cfg.clone();
        narrow_cfg.user_counts = vec![18];
        let narrow = run_sweep(&narrow_cfg).unwrap();
        let a = full.cell(18, 2, true).unwrap();
        let b = narrow.cell(18, 2, true).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn test_sweep_validation() {
        let mut cfg = small_sweep();
        cfg.user_counts = vec![10, 10];
        assert!(run_sweep(&cfg).is_err());
        let mut cfg = small_sweep();
        cfg.replications = 0;
        assert!(run_sweep(&cfg).is_err());
        let mut cfg = small_sweep();
        cfg.configurations[0].sector_count = 4;
        assert!(run_sweep(&cfg).is_err());
        let mut cfg = small_sweep();
        cfg.user_counts = vec![0];
        assert!(run_sweep(&cfg).is_err());
    }

    #[test]
    fn test_csv_layout() {
        let cfg = SweepConfig {
            user_counts: vec![9],
            configurations: vec![CellConfiguration { sector_count: 2, ris_enabled: true }],
            replications: 1,
            ..small_sweep()
        };
        let report = run_sweep(&cfg).unwrap();
        let csv = report_to_csv(&report).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "user_count,sectors,ris,replication_stat,metric,value");
        // 9 metrics for a two-sector cell, each a mean row and a std row.
        assert_eq!(lines.len(), 1 + 18);
        assert!(lines[1].starts_with("9,2,on,mean,overall_admission_rate,"));
        assert!(lines[2].starts_with("9,2,on,std,overall_admission_rate,"));
    }

    #[test]
    fn test_csv_empty_report_is_header_only() {
        let report = ExperimentReport { base_seed: 0, cells: vec![] };
        let csv = report_to_csv(&report).unwrap();
        assert_eq!(csv, "user_count,sectors,ris,replication_stat,metric,value\n");
    }

    #[test]
    fn test_json_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("report.json");
        let report = run_sweep(&small_sweep()).unwrap();
        export_report(&report, &path, ReportFormat::Json).unwrap();
        let back = import_report_json(&path).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn test_exports_are_byte_stable() {
        let dir = tempfile::tempdir().unwrap();
        let report = run_sweep(&small_sweep()).unwrap();
        let a_path = dir.path().join("a.csv");
        let b_path = dir.path().join("b.csv");
        export_report(&report, &a_path, ReportFormat::Csv).unwrap();
        export_report(&report, &b_path, ReportFormat::Csv).unwrap();
        assert_eq!(fs::read(&a_path).unwrap(), fs::read(&b_path).unwrap());
    }
}
