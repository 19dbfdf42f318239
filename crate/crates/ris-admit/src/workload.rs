//! Service classes, scenario configuration, and deterministic workload
//! generation.
//!
//! A scenario is a snapshot of one cell: a base station with an edge compute
//! pool, an optional reflecting panel, and a population of users split across
//! angular sectors with one sector deliberately crowded. Generation is a pure
//! function of `(config, seed)`; the draw order is fixed (class counts, then
//! the sector shuffle, then per-user fields in id order) so outputs can be
//! pinned in tests.

use serde::{Deserialize, Serialize};

use crate::channel::ChannelConfig;
use crate::error::{Error, Result};
use crate::geometry::Point3;
use crate::rng::SampleStream;

/// The three service classes, in fixed priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ServiceKind {
    /// Ultra-reliable low latency: tiny payloads, millisecond deadlines.
    Eurllc,
    /// Enhanced broadband: bulk payloads, wide bandwidth demands.
    Fembb,
    /// Massive machine type: narrowband uplinks, relaxed deadlines.
    Ummtc,
}

impl ServiceKind {
    pub const ALL: [ServiceKind; 3] = [ServiceKind::Eurllc, ServiceKind::Fembb, ServiceKind::Ummtc];

    /// Position in the fixed class order.
    pub fn index(&self) -> usize {
        match self {
            ServiceKind::Eurllc => 0,
            ServiceKind::Fembb => 1,
            ServiceKind::Ummtc => 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ServiceKind::Eurllc => "eurllc",
            ServiceKind::Fembb => "fembb",
            ServiceKind::Ummtc => "ummtc",
        }
    }
}

/// Demand ranges for one service class. All ranges are closed-open `[lo, hi)`
/// and sampled uniformly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ClassSpec {
    /// Scheduling weight; higher is served first.
    pub priority: u32,
    /// End-to-end deadline range in seconds.
    pub deadline_s: (f64, f64),
    /// Compute demand range in CPU cycles.
    pub compute_cycles: (f64, f64),
    /// Payload size range in bits.
    pub data_bits: (f64, f64),
    /// Radio bandwidth demand range in Hz.
    pub bandwidth_hz: (f64, f64),
}

impl Default for ClassSpec {
    fn default() -> Self {
        CLASS_DEFAULTS[0].clone()
    }
}

const CLASS_DEFAULTS: [ClassSpec; 3] = [
    ClassSpec {
        priority: 3,
        deadline_s: (3e-3, 1e-2),
        compute_cycles: (1e8, 5e8),
        data_bits: (2e3, 2e4),
        bandwidth_hz: (2e6, 6e6),
    },
    ClassSpec {
        priority: 2,
        deadline_s: (5e-2, 1.1),
        compute_cycles: (1e8, 4e8),
        data_bits: (2e7, 3.8e8),
        bandwidth_hz: (2e7, 1e8),
    },
    ClassSpec {
        priority: 1,
        deadline_s: (1.5e-1, 6e-1),
        compute_cycles: (1e7, 1e8),
        data_bits: (4e5, 1.2e6),
        bandwidth_hz: (2e4, 1e5),
    },
];

/// Demand ranges for all three classes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ClassCatalog {
    pub eurllc: ClassSpec,
    pub fembb: ClassSpec,
    pub ummtc: ClassSpec,
}

impl Default for ClassCatalog {
    fn default() -> Self {
        ClassCatalog {
            eurllc: CLASS_DEFAULTS[0].clone(),
            fembb: CLASS_DEFAULTS[1].clone(),
            ummtc: CLASS_DEFAULTS[2].clone(),
        }
    }
}

impl ClassCatalog {
    pub fn spec(&self, kind: ServiceKind) -> &ClassSpec {
        match kind {
            ServiceKind::Eurllc => &self.eurllc,
            ServiceKind::Fembb => &self.fembb,
            ServiceKind::Ummtc => &self.ummtc,
        }
    }
}

/// Cell geometry. Users are placed in an annulus around the base station,
/// partitioned into equal angular wedges, one wedge per sector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CellConfig {
    /// Inner placement radius in meters.
    pub inner_radius_m: f64,
    /// Outer placement radius in meters.
    pub outer_radius_m: f64,
    /// Base station antenna height in meters.
    pub bs_height_m: f64,
    /// User terminal height in meters.
    pub user_height_m: f64,
}

impl Default for CellConfig {
    fn default() -> Self {
        CellConfig {
            inner_radius_m: 10.0,
            outer_radius_m: 250.0,
            bs_height_m: 25.0,
            user_height_m: 1.5,
        }
    }
}

/// Reflecting panel deployment.
///
/// The panel sits at the center azimuth of Sector 0's wedge. Its useful cone
/// opens back through the base station, so it serves the far side of the
/// cell: mostly the uncrowded sectors, which is where reflected capacity is
/// worth adding.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RisConfig {
    /// Whether the panel participates in admission at all.
    pub enabled: bool,
    /// Number of passive elements on the panel.
    pub elements: u32,
    /// Ground distance from the base station in meters.
    pub distance_m: f64,
    /// Mounting height in meters.
    pub height_m: f64,
}

impl Default for RisConfig {
    fn default() -> Self {
        RisConfig {
            enabled: true,
            elements: 1024,
            distance_m: 80.0,
            height_m: 10.0,
        }
    }
}

/// Objective weights: `alpha` terms mix rate and delay inside a user's
/// utility, `gamma` terms mix served utility, reflected-resource usage, and
/// the rejection penalty in the objective.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct UtilityWeights {
    pub alpha1: f64,
    pub alpha2: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    pub gamma3: f64,
}

impl Default for UtilityWeights {
    fn default() -> Self {
        UtilityWeights {
            alpha1: 0.5,
            alpha2: 0.5,
            gamma1: 1.0,
            gamma2: 0.5,
            gamma3: 0.5,
        }
    }
}

/// Angular filter and grouping knobs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Thresholds {
    /// Maximum angular deviation, in degrees, for a user to be reachable by
    /// the panel at all. Inclusive.
    pub theta_range_deg: f64,
    /// Maximum angular spread, in degrees, between a group leader and a
    /// member. Inclusive.
    pub theta_max_deg: f64,
    /// Maximum number of users sharing one panel partition.
    pub group_max_size: usize,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            theta_range_deg: 85.0,
            theta_max_deg: 15.0,
            group_max_size: 16,
        }
    }
}

/// Full scenario configuration; the schema of the JSON config file. Every
/// field is optional and defaults to the calibrated baseline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioConfig {
    /// Total number of users to place.
    pub n_users: usize,
    /// Number of angular sectors, 2 or 3.
    pub sector_count: u8,
    /// Crowding of Sector 0. With two sectors this is the ratio of Sector 0
    /// users to Sector 1 users; with three sectors, half of it is the ratio
    /// of Sector 0 users to all other users combined.
    pub congestion_ratio: f64,
    /// Generation seed. The CLI `--seed` flag overrides it.
    pub seed: u64,
    /// Window in seconds over which request arrival times are drawn.
    pub arrival_horizon_s: f64,
    /// Edge compute pool in cycles per second.
    pub mec_capacity: f64,
    /// Shared radio bandwidth in Hz.
    pub bandwidth_capacity: f64,
    pub cell: CellConfig,
    pub ris: RisConfig,
    pub classes: ClassCatalog,
    pub channel: ChannelConfig,
    pub weights: UtilityWeights,
    pub thresholds: Thresholds,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            n_users: 100,
            sector_count: 3,
            congestion_ratio: 3.0,
            seed: 0,
            arrival_horizon_s: 1.0,
            mec_capacity: 5e13,
            bandwidth_capacity: 2.5e10,
            cell: CellConfig::default(),
            ris: RisConfig::default(),
            classes: ClassCatalog::default(),
            channel: ChannelConfig::default(),
            weights: UtilityWeights::default(),
            thresholds: Thresholds::default(),
        }
    }
}

impl ScenarioConfig {
    /// Checks every field against its documented range.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n_users == 0 {
            return bad("n_users must be at least 1".into());
        }
        if !(self.sector_count == 2 || self.sector_count == 3) {
            return bad(format!("sector_count must be 2 or 3, got {}", self.sector_count));
        }
        if !(self.congestion_ratio.is_finite() && self.congestion_ratio > 0.0) {
            return bad("congestion_ratio must be positive".into());
        }
        if !(self.arrival_horizon_s.is_finite() && self.arrival_horizon_s > 0.0) {
            return bad("arrival_horizon_s must be positive".into());
        }
        if !(self.mec_capacity.is_finite() && self.mec_capacity > 0.0) {
            return bad("mec_capacity must be positive".into());
        }
        if !(self.bandwidth_capacity.is_finite() && self.bandwidth_capacity > 0.0) {
            return bad("bandwidth_capacity must be positive".into());
        }
        let c = &self.cell;
        if !(c.inner_radius_m > 0.0 && c.outer_radius_m > c.inner_radius_m) {
            return bad("cell radii must satisfy 0 < inner < outer".into());
        }
        if c.bs_height_m < 0.0 || c.user_height_m < 0.0 {
            return bad("heights must be nonnegative".into());
        }
        if !(self.ris.distance_m.is_finite() && self.ris.distance_m > 0.0) || self.ris.height_m < 0.0 {
            return bad("panel placement must have positive distance and nonnegative height".into());
        }
        if !(self.thresholds.theta_range_deg >= 0.0 && self.thresholds.theta_range_deg <= 180.0) {
            return bad("theta_range_deg must lie in [0, 180]".into());
        }
        if !(self.thresholds.theta_max_deg >= 0.0 && self.thresholds.theta_max_deg <= 180.0) {
            return bad("theta_max_deg must lie in [0, 180]".into());
        }
        if self.thresholds.group_max_size == 0 {
            return bad("group_max_size must be at least 1".into());
        }
        for w in [
            self.weights.alpha1,
            self.weights.alpha2,
            self.weights.gamma1,
            self.weights.gamma2,
            self.weights.gamma3,
        ] {
            if !(w.is_finite() && w >= 0.0) {
                return bad("weights must be finite and nonnegative".into());
            }
        }
        for kind in ServiceKind::ALL {
            let spec = self.classes.spec(kind);
            if spec.priority == 0 {
                return bad(format!("{} priority must be at least 1", kind.name()));
            }
            for (label, (lo, hi)) in [
                ("deadline_s", spec.deadline_s),
                ("compute_cycles", spec.compute_cycles),
                ("data_bits", spec.data_bits),
                ("bandwidth_hz", spec.bandwidth_hz),
            ] {
                if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && hi >= lo) {
                    return bad(format!("{} {label} must satisfy 0 < lo <= hi", kind.name()));
                }
            }
        }
        self.channel.validate()?;
        Ok(())
    }
}

/// One user request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UserRequest {
    /// Dense id, also the index into every per-user slice.
    pub id: usize,
    pub class: ServiceKind,
    /// Scheduling weight copied from the class spec.
    pub priority: u32,
    /// Sector the user was placed in.
    pub sector: u8,
    pub position: Point3,
    /// Arrival time in seconds; earlier arrivals win ties.
    pub arrival_s: f64,
    /// End-to-end deadline in seconds.
    pub deadline_s: f64,
    /// Compute demand in cycles.
    pub compute_cycles: f64,
    /// Payload in bits.
    pub data_bits: f64,
    /// Radio bandwidth demand in Hz.
    pub bandwidth_hz: f64,
}

/// A generated cell snapshot, ready for admission control.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub seed: u64,
    pub sector_count: u8,
    pub bs_position: Point3,
    pub ris_position: Point3,
    /// Panel element count; zero means the panel is absent.
    pub ris_elements: u32,
    /// False disables the panel regardless of element count.
    pub ris_enabled: bool,
    /// Edge compute pool in cycles per second.
    pub mec_capacity: f64,
    /// Shared radio bandwidth in Hz.
    pub bandwidth_capacity: f64,
    pub users: Vec<UserRequest>,
}

impl Scenario {
    /// Sum of all users' priorities; the rejection penalty normalizer.
    pub fn priority_mass(&self) -> f64 {
        self.users.iter().map(|u| u.priority as f64).sum()
    }
}

/// Splits `n` users into class counts at the fixed 2:6:1 service mix using
/// largest-remainder rounding. Remainder ties resolve in class order.
pub fn service_mix_counts(n: usize) -> (usize, usize, usize) {
    const WEIGHTS: [usize; 3] = [2, 6, 1];
    const TOTAL: usize = 9;
    let mut counts = [0usize; 3];
    let mut rems = [0usize; 3];
    let mut assigned = 0;
    for i in 0..3 {
        let num = n * WEIGHTS[i];
        counts[i] = num / TOTAL;
        rems[i] = num % TOTAL;
        assigned += counts[i];
    }
    let mut order = [0usize, 1, 2];
    order.sort_by(|&a, &b| rems[b].cmp(&rems[a]).then(a.cmp(&b)));
    for &i in order.iter().take(n - assigned) {
        counts[i] += 1;
    }
    (counts[0], counts[1], counts[2])
}

/// Splits `n` users across sectors. Sector 0 is the crowded one; remaining
/// users divide equally among the other sectors. Largest-remainder rounding,
/// with remainder ties resolving toward the lowest sector index.
pub fn sector_counts(n: usize, sector_count: u8, congestion_ratio: f64) -> Result<Vec<usize>> {
    if !(sector_count == 2 || sector_count == 3) {
        return Err(Error::InvalidConfig(format!(
            "sector_count must be 2 or 3, got {sector_count}"
        )));
    }
    if !(congestion_ratio.is_finite() && congestion_ratio > 0.0) {
        return Err(Error::InvalidConfig("congestion_ratio must be positive".into()));
    }
    let k = sector_count as usize;
    // Crowding factor: ratio of Sector 0 users to all remaining users.
    let factor = match k {
        2 => congestion_ratio,
        _ => congestion_ratio / 2.0,
    };
    let s0 = factor / (factor + 1.0);
    let rest = (1.0 - s0) / (k as f64 - 1.0);
    let shares: Vec<f64> = (0..k).map(|i| if i == 0 { s0 } else { rest }).collect();

    let mut counts = vec![0usize; k];
    let mut rems = vec![0.0f64; k];
    let mut assigned = 0;
    for i in 0..k {
        let quota = n as f64 * shares[i];
        counts[i] = quota.floor() as usize;
        rems[i] = quota - quota.floor();
        assigned += counts[i];
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| rems[b].partial_cmp(&rems[a]).unwrap().then(a.cmp(&b)));
    let mut leftover = n - assigned;
    let mut cursor = 0;
    while leftover > 0 {
        counts[order[cursor % k]] += 1;
        cursor += 1;
        leftover -= 1;
    }
    Ok(counts)
}

/// Generates a scenario from a config and a seed. Pure and deterministic:
/// the same inputs always produce the same scenario, byte for byte.
pub fn generate_scenario(config: &ScenarioConfig, seed: u64) -> Result<Scenario> {
    config.validate()?;
    let n = config.n_users;
    let k = config.sector_count as usize;

    let (n_e, n_f, n_u) = service_mix_counts(n);
    let per_sector = sector_counts(n, config.sector_count, config.congestion_ratio)?;

    // Class labels in id order: the class blocks follow the fixed class order.
    let mut classes = Vec::with_capacity(n);
    classes.extend(std::iter::repeat_n(ServiceKind::Eurllc, n_e));
    classes.extend(std::iter::repeat_n(ServiceKind::Fembb, n_f));
    classes.extend(std::iter::repeat_n(ServiceKind::Ummtc, n_u));

    // Sector labels: counts expanded in sector order, then shuffled so class
    // mix is unbiased within each sector.
    let mut sectors = Vec::with_capacity(n);
    for (s, &count) in per_sector.iter().enumerate() {
        sectors.extend(std::iter::repeat_n(s as u8, count));
    }
    let mut stream = SampleStream::new(seed);
    stream.shuffle(&mut sectors);

    let wedge = std::f64::consts::TAU / k as f64;
    let ris_azimuth = wedge / 2.0;
    let bs_position = Point3::new(0.0, 0.0, config.cell.bs_height_m);
    let ris_position = Point3::new(
        config.ris.distance_m * ris_azimuth.cos(),
        config.ris.distance_m * ris_azimuth.sin(),
        config.ris.height_m,
    );

    let inner_sq = config.cell.inner_radius_m * config.cell.inner_radius_m;
    let outer_sq = config.cell.outer_radius_m * config.cell.outer_radius_m;

    let mut users = Vec::with_capacity(n);
    for id in 0..n {
        let class = classes[id];
        let spec = config.classes.spec(class);
        let sector = sectors[id];

        let azimuth = stream.range(sector as f64 * wedge, (sector as f64 + 1.0) * wedge);
        // Area-uniform radius in the annulus.
        let radius = stream.range(inner_sq, outer_sq).sqrt();
        let position = Point3::new(
            radius * azimuth.cos(),
            radius * azimuth.sin(),
            config.cell.user_height_m,
        );
        let arrival_s = stream.range(0.0, config.arrival_horizon_s);
        let deadline_s = stream.range(spec.deadline_s.0, spec.deadline_s.1);
        let compute_cycles = stream.range(spec.compute_cycles.0, spec.compute_cycles.1);
        let data_bits = stream.range(spec.data_bits.0, spec.data_bits.1);
        let bandwidth_hz = stream.range(spec.bandwidth_hz.0, spec.bandwidth_hz.1);

        users.push(UserRequest {
            id,
            class,
            priority: spec.priority,
            sector,
            position,
            arrival_s,
            deadline_s,
            compute_cycles,
            data_bits,
            bandwidth_hz,
        });
    }

    Ok(Scenario {
        seed,
        sector_count: config.sector_count,
        bs_position,
        ris_position,
        ris_elements: config.ris.elements,
        ris_enabled: config.ris.enabled,
        mec_capacity: config.mec_capacity,
        bandwidth_capacity: config.bandwidth_capacity,
        users,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_mix_exact_multiple() {
        assert_eq!(service_mix_counts(9), (2, 6, 1));
        assert_eq!(service_mix_counts(90), (20, 60, 10));
    }

    // n = 10: quotas are 20/9, 60/9, 10/9 with remainders 2/9, 6/9, 1/9, so
    // the one leftover user goes to the middle class.
    #[test]
    fn test_mix_largest_remainder() {
        assert_eq!(service_mix_counts(10), (2, 7, 1));
    }

    #[test]
    fn test_mix_tiny_populations() {
        assert_eq!(service_mix_counts(1), (0, 1, 0));
        // n = 2: floors (0, 1, 0), remainders (4/9, 3/9, 2/9); the single
        // leftover goes to the largest remainder.
        assert_eq!(service_mix_counts(2), (1, 1, 0));
    }

    #[test]
    fn test_mix_conserves_total() {
        for n in 1..=10_000 {
            let (a, b, c) = service_mix_counts(n);
            assert_eq!(a + b + c, n, "mix lost users at n={n}");
        }
    }

    #[test]
    fn test_sector_counts_two_sectors() {
        assert_eq!(sector_counts(400, 2, 3.0).unwrap(), vec![300, 100]);
        assert_eq!(sector_counts(4, 2, 1.0).unwrap(), vec![2, 2]);
    }

    #[test]
    fn test_sector_counts_three_sectors() {
        assert_eq!(sector_counts(500, 3, 3.0).unwrap(), vec![300, 100, 100]);
    }

    #[test]
    fn test_sector_counts_conserve_total() {
        for n in 1..=3000 {
            for k in [2u8, 3] {
                let counts = sector_counts(n, k, 3.0).unwrap();
                assert_eq!(counts.iter().sum::<usize>(), n);
            }
        }
    }

    #[test]
    fn test_sector_counts_rejects_bad_inputs() {
        assert!(sector_counts(10, 4, 3.0).is_err());
        assert!(sector_counts(10, 2, 0.0).is_err());
    }

    #[test]
    fn test_generation_is_deterministic() {
        let config = ScenarioConfig { n_users: 64, ..ScenarioConfig::default() };
        let a = generate_scenario(&config, 7).unwrap();
        let b = generate_scenario(&config, 7).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        let c = generate_scenario(&config, 8).unwrap();
        assert_ne!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&c).unwrap()
        );
    }

    #[test]
    fn test_generation_honors_counts() {
        let config = ScenarioConfig { n_users: 123, sector_count: 3, ..ScenarioConfig::default() };
        let scenario = generate_scenario(&config, 99).unwrap();
        let (n_e, n_f, n_u) = service_mix_counts(123);
        let by_class = |k: ServiceKind| scenario.users.iter().filter(|u| u.class == k).count();
        assert_eq!(by_class(ServiceKind::Eurllc), n_e);
        assert_eq!(by_class(ServiceKind::Fembb), n_f);
        assert_eq!(by_class(ServiceKind::Ummtc), n_u);

        let per_sector = sector_counts(123, 3, 3.0).unwrap();
        for (s, &expect) in per_sector.iter().enumerate() {
            let got = scenario.users.iter().filter(|u| u.sector == s as u8).count();
            assert_eq!(got, expect, "sector {s}");
        }
    }

    #[test]
    fn test_generation_respects_ranges_and_wedges() {
        let config = ScenarioConfig { n_users: 300, sector_count: 2, ..ScenarioConfig::default() };
        let scenario = generate_scenario(&config, 5).unwrap();
        let wedge = std::f64::consts::TAU / 2.0;
        for u in &scenario.users {
            let spec = config.classes.spec(u.class);
            assert!(u.deadline_s >= spec.deadline_s.0 && u.deadline_s < spec.deadline_s.1);
            assert!(u.compute_cycles >= spec.compute_cycles.0 && u.compute_cycles < spec.compute_cycles.1);
            assert!(u.data_bits >= spec.data_bits.0 && u.data_bits < spec.data_bits.1);
            assert!(u.bandwidth_hz >= spec.bandwidth_hz.0 && u.bandwidth_hz < spec.bandwidth_hz.1);
            assert!(u.arrival_s >= 0.0 && u.arrival_s < config.arrival_horizon_s);
            assert_eq!(u.priority, spec.priority);

            let rho = (u.position.x * u.position.x + u.position.y * u.position.y).sqrt();
            assert!(rho >= config.cell.inner_radius_m && rho <= config.cell.outer_radius_m);
            let mut az = u.position.y.atan2(u.position.x);
            if az < 0.0 {
                az += std::f64::consts::TAU;
            }
            let lo = u.sector as f64 * wedge;
            let hi = (u.sector as f64 + 1.0) * wedge;
            assert!(az >= lo - 1e-9 && az <= hi + 1e-9, "user {} outside its wedge", u.id);
        }
    }

    #[test]
    fn test_generation_rejects_invalid_config() {
        let config = ScenarioConfig { n_users: 0, ..ScenarioConfig::default() };
        assert!(generate_scenario(&config, 0).is_err());

        let mut config = ScenarioConfig::default();
        config.cell.inner_radius_m = 300.0;
        assert!(generate_scenario(&config, 0).is_err());

        let mut config = ScenarioConfig::default();
        config.classes.fembb.deadline_s = (0.2, 0.1);
        assert!(generate_scenario(&config, 0).is_err());
    }

    #[test]
    fn test_config_json_round_trip_and_unknown_fields() {
        let config = ScenarioConfig::default();
        let text = serde_json::to_string_pretty(&config).unwrap();
        let back: ScenarioConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(config, back);

        let partial: ScenarioConfig = serde_json::from_str(r#"{"n_users": 12}"#).unwrap();
        assert_eq!(partial.n_users, 12);
        assert_eq!(partial.sector_count, 3);

        let unknown = serde_json::from_str::<ScenarioConfig>(r#"{"n_userz": 12}"#);
        assert!(unknown.is_err());
    }
}
