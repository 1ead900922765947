//! Two-qubit catalysis of four-level transformations.
//!
//! For a pair satisfying the catalysis precondition with decomposition
//! `(eps1, eps2, eps3)`, the catalyst `sqrt(p)|00> + sqrt(1-p)|11>` works
//! exactly when `r = (1 - p) / p` lies in `[m, M]` where
//!
//! ```text
//! m = max((a2 - eps1) / (a1 + eps1), (a4 - eps3) / (a3 + eps3), eps2 / eps1)
//! M = min((a3 + eps3) / (a2 - eps1), eps3 / eps2)
//! ```
//!
//! with `m = +inf` when `eps1 = 0`. Both bounds satisfy `m > 0` and `M <= 1`,
//! so every admissible `p` falls in `[1/2, 1]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::majorization::locc_possible;
use crate::number::{ExtendedRational, Rational};
use crate::spectra::{check_catalyst_weight, epsilon_decompose, EpsilonTriple, Spectrum4, StarViolation};

/// `m`: the smallest admissible catalyst ratio `r = (1 - p) / p`.
pub fn lower_bound(alpha: &Spectrum4, eps: &EpsilonTriple) -> Result<ExtendedRational> {
    if eps.eps1.is_zero() {
        return Ok(ExtendedRational::PosInfinity);
    }
    let [a1, a2, a3, a4] = alpha.coefficients();
    let first = (a2 - &eps.eps1)
        .checked_div(&(a1 + &eps.eps1))
        .ok_or(Error::DegenerateRatio("(alpha2 - eps1) / (alpha1 + eps1)"))?;
    let second = (a4 - &eps.eps3)
        .checked_div(&(a3 + &eps.eps3))
        .ok_or(Error::DegenerateRatio("(alpha4 - eps3) / (alpha3 + eps3)"))?;
    let third = &eps.eps2 / &eps.eps1;
    Ok(ExtendedRational::Finite(first.max(second).max(third)))
}

/// `M`: the largest admissible catalyst ratio `r = (1 - p) / p`.
pub fn upper_bound(alpha: &Spectrum4, eps: &EpsilonTriple) -> Result<Rational> {
    let [_, a2, a3, _] = alpha.coefficients();
    let first = (a3 + &eps.eps3)
        .checked_div(&(a2 - &eps.eps1))
        .ok_or(Error::DegenerateRatio("(alpha3 + eps3) / (alpha2 - eps1)"))?;
    let second = eps
        .eps3
        .checked_div(&eps.eps2)
        .ok_or(Error::DegenerateRatio("eps3 / eps2"))?;
    Ok(first.min(second))
}

/// Maps `r = (1 - p) / p` back to `p = 1 / (1 + r)`.
pub fn weight_from_ratio(r: &Rational) -> Rational {
    (Rational::one() + r).recip().expect("r >= 0")
}

/// Maps a catalyst weight `p > 0` to `r = (1 - p) / p`.
pub fn ratio_from_weight(p: &Rational) -> Rational {
    (Rational::one() - p) / p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The source is already majorized by the target.
    LoccAlreadyPossible,
    /// Some two-qubit catalyst enables the transformation.
    Catalyzable,
    /// No two-qubit catalyst helps.
    Infeasible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "violation")]
pub enum InfeasibleReason {
    StarViolated(StarViolation),
    /// The decomposition exists but `m > M`.
    EmptyInterval,
    /// The source has only two nonzero coefficients and `eps3 = 0`, so the
    /// ratio `(a4 - eps3) / (a3 + eps3)` is `0/0` and `m` is undefined.
    /// `M = 0` here, so no catalyst works whatever `m` would be.
    UndefinedLowerBound,
}

/// Outcome of [`analyze`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    verdict: Verdict,
    epsilon: Option<EpsilonTriple>,
    lower: Option<ExtendedRational>,
    upper: Option<Rational>,
    ratio_interval: Option<(Rational, Rational)>,
    weight_interval: Option<(Rational, Rational)>,
    reason: Option<InfeasibleReason>,
}

impl FeasibilityReport {
    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn epsilon(&self) -> Option<&EpsilonTriple> {
        self.epsilon.as_ref()
    }

    /// `m`, present whenever the pair admits an epsilon decomposition (except
    /// for [`InfeasibleReason::UndefinedLowerBound`]).
    pub fn lower(&self) -> Option<&ExtendedRational> {
        self.lower.as_ref()
    }

    /// `M`, present whenever the pair admits an epsilon decomposition.
    pub fn upper(&self) -> Option<&Rational> {
        self.upper.as_ref()
    }

    /// `[m, M]` in terms of `r = (1 - p) / p`.
    pub fn ratio_interval(&self) -> Option<&(Rational, Rational)> {
        self.ratio_interval.as_ref()
    }

    /// `[1 / (1 + M), 1 / (1 + m)]` in terms of the catalyst weight `p`.
    pub fn weight_interval(&self) -> Option<&(Rational, Rational)> {
        self.weight_interval.as_ref()
    }

    pub fn reason(&self) -> Option<&InfeasibleReason> {
        self.reason.as_ref()
    }

    /// Whether the two-qubit catalyst with weight `p` enables the transformation.
    pub fn admits(&self, p: &Rational) -> Result<bool> {
        check_catalyst_weight(p)?;
        match self.verdict {
            Verdict::LoccAlreadyPossible => Err(Error::LoccAlreadyPossible),
            Verdict::Infeasible => Ok(false),
            Verdict::Catalyzable => {
                let (m, big_m) = self.ratio_interval.as_ref().expect("catalyzable");
                let r = ratio_from_weight(p);
                Ok(*m <= r && r <= *big_m)
            }
        }
    }
}

/// Full decision procedure for `source -> target`.
pub fn analyze(source: &Spectrum4, target: &Spectrum4) -> FeasibilityReport {
    let mut report = FeasibilityReport {
        verdict: Verdict::Infeasible,
        epsilon: None,
        lower: None,
        upper: None,
        ratio_interval: None,
        weight_interval: None,
        reason: None,
    };
    if locc_possible(source, target) {
        report.verdict = Verdict::LoccAlreadyPossible;
        return report;
    }
    let eps = match epsilon_decompose(source, target) {
        Ok(eps) => eps,
        Err(violation) => {
            report.reason = Some(InfeasibleReason::StarViolated(violation));
            return report;
        }
    };

    // a2 - eps1 = target2 + eps2 > 0, so M is always defined.
    let big_m = upper_bound(source, &eps).expect("eps2 > 0");
    // a1 + eps1 = target1 > 0; a3 + eps3 vanishes only when a3 = a4 = eps3 = 0.
    let m = match lower_bound(source, &eps) {
        Ok(m) => m,
        Err(Error::DegenerateRatio(_)) => {
            debug_assert!(big_m.is_zero());
            report.reason = Some(InfeasibleReason::UndefinedLowerBound);
            report.epsilon = Some(eps);
            report.upper = Some(big_m);
            return report;
        }
        Err(other) => unreachable!("{other}"),
    };

    if m <= big_m {
        let m_finite = m.finite().expect("m <= M < inf").clone();
        report.verdict = Verdict::Catalyzable;
        report.weight_interval = Some((weight_from_ratio(&big_m), weight_from_ratio(&m_finite)));
        report.ratio_interval = Some((m_finite, big_m.clone()));
    } else {
        report.reason = Some(InfeasibleReason::EmptyInterval);
    }
    report.epsilon = Some(eps);
    report.lower = Some(m);
    report.upper = Some(big_m);
    report
}

/// Whether `sqrt(p)|00> + sqrt(1-p)|11>` catalyzes `source -> target`.
///
/// Requires `1/2 <= p <= 1` and a pair that is not already LOCC-convertible.
pub fn is_valid_catalyst(source: &Spectrum4, target: &Spectrum4, p: &Rational) -> Result<bool> {
    analyze(source, target).admits(p)
}

/// Closed-form descending partial sums of the target paired with the catalyst
/// `(p, 1 - p)`, valid only while `m <= (1 - p) / p <= M`.
pub fn closed_form_lambda_prime(target: &Spectrum4, eps: &EpsilonTriple, p: &Rational) -> Result<[Rational; 8]> {
    check_catalyst_weight(p)?;
    let raw = eps.invert(target);
    let alpha = Spectrum4::new(raw.clone())?;
    if alpha.coefficients() != &raw {
        return Err(Error::InconsistentEpsilon);
    }
    match epsilon_decompose(&alpha, target) {
        Ok(check) if &check == eps => {}
        Ok(_) => return Err(Error::InconsistentEpsilon),
        Err(violation) => return Err(Error::NotCatalysisCandidate(violation)),
    }

    let r = ratio_from_weight(p);
    let m = lower_bound(&alpha, eps)?;
    let big_m = upper_bound(&alpha, eps)?;
    if !(m <= r && r <= big_m) {
        return Err(Error::OutsideInterval { r });
    }

    let [a1, a2, a3, a4] = alpha.coefficients();
    let EpsilonTriple { eps1, eps2, eps3 } = eps;
    let q = Rational::one() - p;
    let a12 = a1 + a2;
    let a123 = &a12 + a3;
    Ok([
        a1 * p + eps1 * p,
        a1 + eps1,
        a1 + a2 * p + eps1 * &q - eps2 * p,
        a1 + a2 * p + a3 * p + eps1 * &q + eps3 * p,
        &a12 + a3 * p - eps2 * &q + eps3 * p,
        &a123 + eps3,
        &a123 + a4 * p + eps3 * &q,
        &a123 + a4,
    ])
}
