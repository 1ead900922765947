//! Brute-force ground truth: pair the state with the catalyst, sort the
//! products, and test majorization directly.

use rayon::prelude::*;

use crate::catalysis::FeasibilityReport;
use crate::error::Result;
use crate::majorization::is_majorized_by;
use crate::number::Rational;
use crate::spectra::{check_catalyst_weight, CatalystSpectrum, Spectrum4};

/// The `4n` Schmidt coefficients of `state ⊗ catalyst`, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AugmentedSpectrum(Vec<Rational>);

impl AugmentedSpectrum {
    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.0
    }
}

pub fn augment(state: &Spectrum4, catalyst: &CatalystSpectrum) -> AugmentedSpectrum {
    let mut beta: Vec<Rational> = state
        .coefficients()
        .iter()
        .flat_map(|a| catalyst.components().iter().map(move |k| a * k))
        .collect();
    beta.sort_by(|a, b| b.cmp(a));
    AugmentedSpectrum(beta)
}

/// Whether `catalyst` enables `source -> target`, decided by majorization of
/// the augmented spectra.
pub fn oracle_valid_catalyst(source: &Spectrum4, target: &Spectrum4, catalyst: &CatalystSpectrum) -> bool {
    let beta = augment(source, catalyst);
    let beta_prime = augment(target, catalyst);
    is_majorized_by(beta.components(), beta_prime.components()).expect("augmented spectra share length and total")
}

/// Oracle verdicts for the two-qubit catalysts `(p, 1 - p)` over `grid`, in grid order.
pub fn sweep(source: &Spectrum4, target: &Spectrum4, grid: &[Rational]) -> Result<Vec<(Rational, bool)>> {
    grid.iter().try_for_each(check_catalyst_weight)?;
    Ok(grid
        .par_iter()
        .map(|p| {
            let catalyst = CatalystSpectrum::two_qubit(p).expect("validated");
            (p.clone(), oracle_valid_catalyst(source, target, &catalyst))
        })
        .collect())
}

/// All `k / denominator` in `[1/2, 1]` together with `1/2` itself, plus the
/// exact endpoints of the report's feasible weight interval when there is one.
/// Sorted ascending.
pub fn default_grid(denominator: u32, report: Option<&FeasibilityReport>) -> Vec<Rational> {
    let d = i64::from(denominator.max(1));
    let first = (d + 1) / 2;
    let mut grid: Vec<Rational> = (first..=d).map(|k| Rational::frac(k, d)).collect();
    grid.push(Rational::half());
    if let Some((lo, hi)) = report.and_then(|r| r.weight_interval()) {
        grid.push(lo.clone());
        grid.push(hi.clone());
    }
    grid.sort();
    grid.dedup();
    grid
}
