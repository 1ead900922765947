//! Builds a (source, target) pair whose catalyst bounds equal prescribed
//! values `m0 > 0` and `0 < M0 < 1`.
//!
//! With `s = min(m0, 1)` the target is `a * (1, s/2, s/2, s^2/4)` where
//! `a = (2 / (s + 2))^2` normalizes it, and the source is
//!
//! ```text
//! a * (1 - mu, s/2 + (m0 + 1) mu, s/2 - (M0 + 1) m0 mu, s^2/4 + M0 m0 mu)
//! ```
//!
//! which gives `eps = (mu a, m0 mu a, M0 m0 mu a)`. A small enough `mu > 0`
//! makes every ordering constraint and both bound identities hold.

use serde::Serialize;

use crate::catalysis::{lower_bound, upper_bound};
use crate::error::{Error, Result};
use crate::number::{ExtendedRational, Rational};
use crate::spectra::{epsilon_decompose, EpsilonTriple, Spectrum4};

/// Halvings attempted by [`choose_mu`] before giving up.
const MAX_HALVINGS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    #[serde(rename = "m0_le_1")]
    AtMostOne,
    #[serde(rename = "m0_gt_1")]
    AboveOne,
}

impl Branch {
    pub fn of(m0: &Rational) -> Self {
        if *m0 <= Rational::one() {
            Branch::AtMostOne
        } else {
            Branch::AboveOne
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Branch::AtMostOne => "m0_le_1",
            Branch::AboveOne => "m0_gt_1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionResult {
    pub source: Spectrum4,
    pub target: Spectrum4,
    pub epsilon: EpsilonTriple,
    pub mu: Rational,
    pub a: Rational,
    pub branch: Branch,
}

fn check_domain(m0: &Rational, big_m0: &Rational) -> Result<()> {
    if !m0.is_positive() {
        return Err(Error::ConstructionDomain("m0 must be positive"));
    }
    if !big_m0.is_positive() || *big_m0 >= Rational::one() {
        return Err(Error::ConstructionDomain("M0 must lie strictly between 0 and 1"));
    }
    Ok(())
}

/// The published upper bound on `mu` for the branch selected by `m0`.
///
/// It is not sufficient on its own (for `m0 = 1, M0 = 1/10` it admits
/// `mu = 1/5`, which breaks `alpha1 >= alpha2`); [`choose_mu`] tightens it.
pub fn mu_bound(m0: &Rational, big_m0: &Rational) -> Result<Rational> {
    check_domain(m0, big_m0)?;
    let one = Rational::one();
    let half = Rational::half();
    let two = Rational::from(2);
    let first = &half * (&one - big_m0) / (&one + big_m0);
    let numerator = match Branch::of(m0) {
        Branch::AtMostOne => &one - m0 / &two,
        Branch::AboveOne => half.clone(),
    };
    let second = &half * numerator / (&one + &two * big_m0);
    Ok(first.min(second))
}

/// Half the published bound, halved again until the construction verifies.
pub fn choose_mu(m0: &Rational, big_m0: &Rational) -> Result<Rational> {
    let mut mu = mu_bound(m0, big_m0)? / Rational::from(2);
    let two = Rational::from(2);
    for _ in 0..MAX_HALVINGS {
        if construct_with_mu(m0, big_m0, &mu).is_ok() {
            return Ok(mu);
        }
        mu = mu / &two;
    }
    Err(Error::InadmissibleMu {
        mu,
        reason: "no admissible mu found",
    })
}

/// Runs the construction with an automatically chosen `mu`.
pub fn construct_states(m0: &Rational, big_m0: &Rational) -> Result<ConstructionResult> {
    let mu = choose_mu(m0, big_m0)?;
    construct_with_mu(m0, big_m0, &mu)
}

/// Runs the construction with a caller-supplied `mu`, verifying every
/// invariant of the result.
pub fn construct_with_mu(m0: &Rational, big_m0: &Rational, mu: &Rational) -> Result<ConstructionResult> {
    check_domain(m0, big_m0)?;
    let inadmissible = |reason| Error::InadmissibleMu { mu: mu.clone(), reason };
    if !mu.is_positive() {
        return Err(inadmissible("mu must be positive"));
    }

    let branch = Branch::of(m0);
    let one = Rational::one();
    let two = Rational::from(2);
    let four = Rational::from(4);
    let shape = match branch {
        Branch::AtMostOne => m0.clone(),
        Branch::AboveOne => one.clone(),
    };
    let half_shape = &shape / &two;
    let quarter_shape_sq = &shape * &shape / &four;
    let a = {
        let base = &two / (&shape + &two);
        &base * &base
    };

    let raw_source = [
        &a * (&one - mu),
        &a * (&half_shape + (m0 + &one) * mu),
        &a * (&half_shape - (big_m0 + &one) * m0 * mu),
        &a * (&quarter_shape_sq + big_m0 * m0 * mu),
    ];
    let raw_target = [a.clone(), &a * &half_shape, &a * &half_shape, &a * &quarter_shape_sq];

    let descending = |v: &[Rational; 4]| v.windows(2).all(|w| w[0] >= w[1]) && !v[3].is_negative();
    if !descending(&raw_source) {
        return Err(inadmissible("source coefficients are not in decreasing order"));
    }
    debug_assert!(descending(&raw_target));

    let source = Spectrum4::new(raw_source)?;
    let target = Spectrum4::new(raw_target)?;
    let epsilon = epsilon_decompose(&source, &target).map_err(|_| inadmissible("no epsilon decomposition"))?;

    let expected = EpsilonTriple {
        eps1: mu * &a,
        eps2: m0 * mu * &a,
        eps3: big_m0 * m0 * mu * &a,
    };
    if epsilon != expected {
        return Err(inadmissible("epsilons differ from mu a, m0 mu a, M0 m0 mu a"));
    }
    if lower_bound(&source, &epsilon)? != ExtendedRational::Finite(m0.clone()) {
        return Err(inadmissible("lower bound differs from m0"));
    }
    if upper_bound(&source, &epsilon)? != *big_m0 {
        return Err(inadmissible("upper bound differs from M0"));
    }

    Ok(ConstructionResult {
        source,
        target,
        epsilon,
        mu: mu.clone(),
        a,
        branch,
    })
}
