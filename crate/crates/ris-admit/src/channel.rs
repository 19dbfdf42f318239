//! Link rates and delays.
//!
//! Two paths exist between the base station and a user: a direct path with a
//! fixed blockage penalty, and a reflected path through the panel whose
//! received power scales with the square of the element count assigned to the
//! user. Reflected power adds on top of the direct path, so a reflected link
//! is never worse than the direct one and zero assigned elements reduce it to
//! exactly the direct rate.
//!
//! Rates follow the log-distance form `B * log2(1 + SNR)` with
//!
//! ```text
//! SNR_direct = tx * d_bu^-a_d * blockage / (N0 * B)
//! SNR_panel  = tx * (r * g)^2 * d_br^-a_r * d_ru^-a_r / (N0 * B)
//! ```
//!
//! All constants are calibration knobs, not measurements.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Radio constants shared by every link in a scenario.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ChannelConfig {
    /// Carrier frequency in Hz. Descriptive of the deployment; the rate
    /// formulas above do not consume it.
    pub carrier_frequency_hz: f64,
    /// One-sided noise power spectral density in W/Hz.
    pub noise_power_density: f64,
    /// Transmit power in W.
    pub tx_power_w: f64,
    /// Path loss exponent of the direct base-station-to-user path.
    pub pathloss_exponent_direct: f64,
    /// Path loss exponent of each reflected hop.
    pub pathloss_exponent_ris: f64,
    /// Penalty in dB applied to the direct path, modeling non-line-of-sight.
    pub direct_blockage_penalty_db: f64,
    /// Lumped per-element amplitude factor of the panel, dimensionless.
    pub ris_element_gain: f64,
}

impl Default for ChannelConfig {
    fn default() -> Self {
        ChannelConfig {
            carrier_frequency_hz: 28e9,
            noise_power_density: 4e-21,
            tx_power_w: 1.0,
            pathloss_exponent_direct: 3.2,
            pathloss_exponent_ris: 2.1,
            direct_blockage_penalty_db: 37.0,
            ris_element_gain: 100.0,
        }
    }
}

impl ChannelConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("carrier_frequency_hz", self.carrier_frequency_hz),
            ("noise_power_density", self.noise_power_density),
            ("tx_power_w", self.tx_power_w),
            ("ris_element_gain", self.ris_element_gain),
        ];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidConfig(format!("channel.{name} must be positive")));
            }
        }
        for (name, v) in [
            ("pathloss_exponent_direct", self.pathloss_exponent_direct),
            ("pathloss_exponent_ris", self.pathloss_exponent_ris),
        ] {
            if !(2.0..=6.0).contains(&v) {
                return Err(Error::InvalidConfig(format!(
                    "channel.{name} must lie in [2, 6], got {v}"
                )));
            }
        }
        if !(self.direct_blockage_penalty_db.is_finite() && self.direct_blockage_penalty_db >= 0.0)
        {
            return Err(Error::InvalidConfig(
                "channel.direct_blockage_penalty_db must be nonnegative".into(),
            ));
        }
        Ok(())
    }

    /// Linear attenuation factor of the blockage penalty.
    fn blockage_factor(&self) -> f64 {
        10f64.powf(-self.direct_blockage_penalty_db / 10.0)
    }
}

/// An achievable link rate in bits per second. Nonnegative and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct LinkRate(f64);

impl LinkRate {
    pub fn from_bps(bps: f64) -> LinkRate {
        debug_assert!(bps.is_finite() && bps >= 0.0);
        LinkRate(bps)
    }

    pub fn bps(&self) -> f64 {
        self.0
    }
}

pub(crate) fn shannon_bps(bandwidth_hz: f64, snr: f64) -> f64 {
    bandwidth_hz * (1.0 + snr).log2()
}

pub(crate) fn direct_snr(cfg: &ChannelConfig, bs_user_distance_m: f64, bandwidth_hz: f64) -> f64 {
    debug_assert!(bs_user_distance_m > 0.0 && bandwidth_hz > 0.0);
    cfg.tx_power_w
        * bs_user_distance_m.powf(-cfg.pathloss_exponent_direct)
        * cfg.blockage_factor()
        / (cfg.noise_power_density * bandwidth_hz)
}

/// Reflected SNR contributed by a single element; scales with the square of
/// the element count.
pub(crate) fn reflected_unit_snr(
    cfg: &ChannelConfig,
    bs_ris_distance_m: f64,
    ris_user_distance_m: f64,
    bandwidth_hz: f64,
) -> f64 {
    debug_assert!(bs_ris_distance_m > 0.0 && ris_user_distance_m > 0.0 && bandwidth_hz > 0.0);
    cfg.tx_power_w
        * cfg.ris_element_gain
        * cfg.ris_element_gain
        * bs_ris_distance_m.powf(-cfg.pathloss_exponent_ris)
        * ris_user_distance_m.powf(-cfg.pathloss_exponent_ris)
        / (cfg.noise_power_density * bandwidth_hz)
}

/// Rate of the direct path alone.
pub fn direct_rate(cfg: &ChannelConfig, bs_user_distance_m: f64, bandwidth_hz: f64) -> LinkRate {
    LinkRate(shannon_bps(
        bandwidth_hz,
        direct_snr(cfg, bs_user_distance_m, bandwidth_hz),
    ))
}

/// Rate with `elements` panel elements assigned on top of the direct path.
/// `elements = 0` reduces to exactly the direct rate.
pub fn ris_rate(
    cfg: &ChannelConfig,
    elements: u32,
    bs_user_distance_m: f64,
    bs_ris_distance_m: f64,
    ris_user_distance_m: f64,
    bandwidth_hz: f64,
) -> LinkRate {
    let r = elements as f64;
    let snr = direct_snr(cfg, bs_user_distance_m, bandwidth_hz)
        + reflected_unit_snr(cfg, bs_ris_distance_m, ris_user_distance_m, bandwidth_hz) * r * r;
    LinkRate(shannon_bps(bandwidth_hz, snr))
}

/// Time to move `data_bits` over a link.
pub fn transmission_delay(data_bits: f64, rate: LinkRate) -> Result<f64> {
    if rate.bps() == 0.0 {
        return Err(Error::ZeroRate);
    }
    Ok(data_bits / rate.bps())
}

/// Time to run `compute_cycles` on an allocation of `cycles_per_s`.
pub fn processing_delay(compute_cycles: f64, cycles_per_s: f64) -> Result<f64> {
    if cycles_per_s == 0.0 {
        return Err(Error::ZeroAllocation);
    }
    Ok(compute_cycles / cycles_per_s)
}

/// End-to-end delay: transmission followed by processing.
pub fn total_delay(
    data_bits: f64,
    rate: LinkRate,
    compute_cycles: f64,
    cycles_per_s: f64,
) -> Result<f64> {
    Ok(transmission_delay(data_bits, rate)? + processing_delay(compute_cycles, cycles_per_s)?)
}
