//! Plain-text scenario reports with the regime table up front.

use photon_shaping::{RegimeCondition, RegimeStatus};

pub fn status_word(c: &RegimeCondition) -> &'static str {
    match c.status {
        RegimeStatus::Clean => "pass",
        RegimeStatus::Boundary => "boundary-pass",
        RegimeStatus::Violated => "VIOLATED",
    }
}

/// One "REGIME WARNING" line per violated condition; empty when clean.
pub fn leading_warnings(conditions: &[RegimeCondition]) -> String {
    let mut out = String::new();
    for c in conditions.iter().filter(|c| !c.satisfied) {
        out.push_str(&format!(
            "REGIME WARNING: {} violated (ratio {:.3})\n",
            c.condition, c.margin
        ));
    }
    out
}

/// Aligned regime table.
pub fn regime_table(conditions: &[RegimeCondition]) -> String {
    let mut out = String::from("regime conditions:\n");
    for c in conditions {
        out.push_str(&format!(
            "  {:<12}  ratio {:>8.4}  {}\n",
            c.condition,
            c.margin,
            status_word(c)
        ));
    }
    out
}
