use std::collections::BTreeSet;
use std::fmt;

use crate::pde::{derivative_name, normalize_equation, DiffOperator, PdeSystem};
use crate::symbolic::rational::fmt_rational;
use crate::symbolic::{CoordPoly, Exp3, RationalNumber};

const COORDS: [&str; 3] = ["x", "y", "z"];

#[derive(Clone, Debug, PartialEq)]
pub struct TermDiff {
    pub derivative: Exp3,
    pub derived: CoordPoly,
    pub transcribed: CoordPoly,
}

impl fmt::Display for TermDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: derived {} vs transcribed {}",
            derivative_name(&self.derivative),
            self.derived.to_expanded_string(&COORDS),
            self.transcribed.to_expanded_string(&COORDS)
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum EquationStatus {
    Match,
    /// transcribed = k · derived
    ScaledMatch(RationalNumber),
    Discrepancy(Vec<TermDiff>),
}

impl EquationStatus {
    pub fn agrees(&self) -> bool {
        !matches!(self, EquationStatus::Discrepancy(_))
    }
}

impl fmt::Display for EquationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquationStatus::Match => f.write_str("match"),
            EquationStatus::ScaledMatch(k) => write!(f, "scaled-match ({})", fmt_rational(k)),
            EquationStatus::Discrepancy(d) => write!(f, "discrepancy ({} term{})", d.len(), if d.len() == 1 { "" } else { "s" }),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub equations: Vec<EquationStatus>,
}

impl ComparisonReport {
    pub fn all_agree(&self) -> bool {
        self.equations.iter().all(|e| e.agrees())
    }

    pub fn all_match(&self) -> bool {
        self.equations.iter().all(|e| *e == EquationStatus::Match)
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = (usize, &TermDiff)> {
        self.equations.iter().enumerate().flat_map(|(k, e)| match e {
            EquationStatus::Discrepancy(d) => d.iter().map(move |t| (k, t)).collect::<Vec<_>>(),
            _ => Vec::new(),
        })
    }
}

fn compare_equation(d: &DiffOperator, t: &DiffOperator, axis: usize) -> EquationStatus {
    if d == t {
        return EquationStatus::Match;
    }
    let (nd, kd) = normalize_equation(d, axis);
    let (nt, kt) = normalize_equation(t, axis);
    if nd == nt {
        return EquationStatus::ScaledMatch(kt / kd);
    }
    let keys: BTreeSet<Exp3> = nd.terms().chain(nt.terms()).map(|(e, _)| *e).collect();
    let diffs = keys
        .into_iter()
        .filter(|e| nd.coeff(*e) != nt.coeff(*e))
        .map(|e| TermDiff { derivative: e, derived: nd.coeff(e), transcribed: nt.coeff(e) })
        .collect();
    EquationStatus::Discrepancy(diffs)
}

/// Equation-by-equation comparison after normalization.
pub fn compare_systems(derived: &PdeSystem, transcribed: &PdeSystem) -> ComparisonReport {
    let n = derived.equations.len().max(transcribed.equations.len());
    let empty = DiffOperator::zero();
    let equations = (0..n)
        .map(|k| {
            let d = derived.equations.get(k).unwrap_or(&empty);
            let t = transcribed.equations.get(k).unwrap_or(&empty);
            compare_equation(d, t, k)
        })
        .collect();
    ComparisonReport { equations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pde::derive_system;
    use crate::pde::format::coord_poly;
    use crate::shipped::shipped_series;
    use crate::symbolic::rational::rat;

    #[test]
    fn reflexive_and_scaled() {
        let p = derive_system(&shipped_series("F_10a").unwrap()).unwrap();
        assert!(compare_systems(&p, &p).all_match());
        let mut q = p.clone();
        q.equations[1] = q.equations[1].map_coeffs(|c| c.scale_rational(&rat(-3, 2)));
        let r = compare_systems(&p, &q);
        assert_eq!(r.equations[1], EquationStatus::ScaledMatch(rat(-3, 2)));
        assert!(r.all_agree() && !r.all_match());
    }

    #[test]
    fn injected_typo_is_located() {
        let p = derive_system(&shipped_series("E_1").unwrap()).unwrap();
        let mut q = p.clone();
        q.equations[2].set_term([0, 0, 0], coord_poly("-a4").unwrap());
        let r = compare_systems(&p, &q);
        assert!(r.equations[0].agrees() && r.equations[1].agrees());
        let d: Vec<_> = r.discrepancies().collect();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].0, 2);
        assert_eq!(d[0].1.to_string(), "u: derived -a5 vs transcribed -a4");
    }
}
