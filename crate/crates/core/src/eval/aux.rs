use std::fmt;

use crate::error::{HornError, Result};

/// Auxiliary boundary functions used in convergence regions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxKind {
    Phi1,
    Phi2,
    Psi1,
    Psi2,
    Theta1,
    Theta2,
}

impl AuxKind {
    pub const ALL: [AuxKind; 6] = [
        AuxKind::Phi1,
        AuxKind::Phi2,
        AuxKind::Psi1,
        AuxKind::Psi2,
        AuxKind::Theta1,
        AuxKind::Theta2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AuxKind::Phi1 => "phi1",
            AuxKind::Phi2 => "phi2",
            AuxKind::Psi1 => "psi1",
            AuxKind::Psi2 => "psi2",
            AuxKind::Theta1 => "theta1",
            AuxKind::Theta2 => "theta2",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        AuxKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl fmt::Display for AuxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn root(kind: AuxKind, radicand: f64) -> Result<f64> {
    if radicand.is_nan() || radicand < 0.0 {
        return Err(HornError::Domain(format!("{kind}: negative radicand {radicand}")));
    }
    Ok(radicand.sqrt())
}

fn quotient(kind: AuxKind, num: f64, den: f64) -> Result<f64> {
    if den == 0.0 {
        return Err(HornError::Domain(format!("{kind}: zero denominator")));
    }
    Ok(num / den)
}

pub fn aux_function(kind: AuxKind, xi: f64) -> Result<f64> {
    match kind {
        AuxKind::Phi1 => {
            let a = root(kind, 1.0 + 3.0 * xi)?;
            quotient(kind, 2.0 * a + 1.0, 3.0 * (a + 1.0).powi(2))
        }
        AuxKind::Phi2 => {
            let b = root(kind, 1.0 - 3.0 * xi)?;
            quotient(kind, 2.0 * b - 1.0, 3.0 * (b - 1.0).powi(2))
        }
        AuxKind::Psi1 => {
            let a = root(kind, 1.0 + 12.0 * xi)?;
            quotient(kind, 2.0 * (2.0 - a).powi(2), 9.0 * (a - 1.0))
        }
        AuxKind::Psi2 => {
            let b = root(kind, 1.0 - 12.0 * xi)?;
            quotient(kind, 2.0 * (2.0 + b).powi(2), 9.0 * (b + 1.0))
        }
        AuxKind::Theta1 | AuxKind::Theta2 => {
            if xi == 0.0 {
                return Err(HornError::Domain(format!("{kind}: argument 0")));
            }
            let w = 8.0 / (9.0 * xi);
            if kind == AuxKind::Theta1 {
                let al = root(kind, 1.0 + w)?;
                quotient(kind, (1.0 + 3.0 * al) * (al - 1.0), 12.0 * (al + 1.0).powi(2))
            } else {
                let be = root(kind, 1.0 - w)?;
                quotient(kind, (1.0 - 3.0 * be) * (be + 1.0), 12.0 * (be - 1.0).powi(2))
            }
        }
    }
}
