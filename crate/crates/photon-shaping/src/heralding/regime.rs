//! Validity-regime checks for a shaping configuration.
//!
//! Every "much less than" condition is scored as a plain ratio: below 0.05
//! it passes cleanly, up to 0.2 it passes at the boundary, above 0.2 it is
//! violated. The 0.2 boundary admits the t_c/t_m = 0.2 design point.

/// Ratio at or below which a condition is still satisfied.
pub const REGIME_WARN_RATIO: f64 = 0.2;
/// Ratio at or below which a condition passes cleanly.
pub const REGIME_CLEAN_RATIO: f64 = 0.05;

/// Parameters of a shaping configuration. Optional fields only generate
/// their conditions when supplied; all times share one unit.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RegimeParams {
    /// Pair correlation time t_c.
    pub correlation_time: f64,
    /// Filter response time t_m.
    pub response_time: f64,
    /// Pair window duration t_u (finite-window resource).
    pub window: Option<f64>,
    /// Heralding-detector time resolution t_d.
    pub detector_resolution: Option<f64>,
    /// Filter central-frequency drift ω_d.
    pub filter_drift: Option<f64>,
    /// Mean pair flux n̄ (stationary resource).
    pub pair_flux: Option<f64>,
    /// Pump-laser coherence time t_coh.
    pub pump_coherence_time: Option<f64>,
}

/// How decisively a single condition holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeStatus {
    Clean,
    Boundary,
    Violated,
}

/// One evaluated regime condition.
#[derive(Debug, Clone, PartialEq)]
pub struct RegimeCondition {
    /// The inequality, e.g. `t_c ≪ t_m`.
    pub condition: &'static str,
    /// The evaluated ratio; small is good.
    pub margin: f64,
    pub satisfied: bool,
    pub status: RegimeStatus,
}

fn grade(condition: &'static str, margin: f64) -> RegimeCondition {
    let status = if margin <= REGIME_CLEAN_RATIO {
        RegimeStatus::Clean
    } else if margin <= REGIME_WARN_RATIO {
        RegimeStatus::Boundary
    } else {
        RegimeStatus::Violated
    };
    RegimeCondition {
        condition,
        margin,
        satisfied: status != RegimeStatus::Violated,
        status,
    }
}

/// Evaluate every applicable regime condition.
pub fn validate_regime(params: &RegimeParams) -> Vec<RegimeCondition> {
    let t_c = params.correlation_time;
    let t_m = params.response_time;
    let mut out = vec![grade("t_c ≪ t_m", t_c / t_m)];
    if let Some(t_u) = params.window {
        out.push(grade("t_m ≪ t_u", t_m / t_u));
    }
    if let Some(t_d) = params.detector_resolution {
        out.push(grade("t_d ≪ t_m", t_d / t_m));
    }
    if let Some(drift) = params.filter_drift {
        out.push(grade("ω_d ≪ 1/t_m", drift.abs() * t_m));
    }
    if let Some(flux) = params.pair_flux {
        out.push(grade("n̄ ≪ 1/t_m", flux * t_m));
    }
    if let Some(t_coh) = params.pump_coherence_time {
        out.push(grade("t_m ≪ t_coh", t_m / t_coh));
    }
    out
}
