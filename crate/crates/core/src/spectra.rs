//! Schmidt-coefficient spectra and the epsilon decomposition of a
//! (source, target) pair.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::number::Rational;

/// Four Schmidt coefficients, sorted descending and summing to one.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Spectrum4([Rational; 4]);

impl Spectrum4 {
    /// Validates and sorts four coefficients given in any order.
    pub fn new(values: [Rational; 4]) -> Result<Self> {
        let sorted = normalized_descending(values.to_vec())?;
        let coefficients: [Rational; 4] = sorted.try_into().expect("length preserved");
        Ok(Spectrum4(coefficients))
    }

    /// Parses four rational strings.
    pub fn parse<S: AsRef<str>>(values: &[S]) -> Result<Self> {
        if values.len() != 4 {
            return Err(Error::WrongLength {
                expected: 4,
                actual: values.len(),
            });
        }
        let parsed = values
            .iter()
            .map(|v| v.as_ref().parse::<Rational>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(parsed.try_into().expect("checked length"))
    }

    pub fn coefficients(&self) -> &[Rational; 4] {
        &self.0
    }

    /// The `i`-th largest coefficient, 1-based.
    pub fn alpha(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }
}

impl fmt::Debug for Spectrum4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Sorts descending after checking nonnegativity and unit total.
fn normalized_descending(mut values: Vec<Rational>) -> Result<Vec<Rational>> {
    if let Some((index, value)) = values.iter().enumerate().find(|(_, v)| v.is_negative()) {
        return Err(Error::NegativeComponent {
            index,
            value: value.clone(),
        });
    }
    let sum: Rational = values.iter().sum();
    if sum != Rational::one() {
        return Err(Error::NotNormalized { sum });
    }
    values.sort_by(|a, b| b.cmp(a));
    Ok(values)
}

/// Convenience wrapper for [`Spectrum4::new`].
pub fn make_spectrum(values: [Rational; 4]) -> Result<Spectrum4> {
    Spectrum4::new(values)
}

/// Schmidt coefficients of a catalyst with any number of components.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CatalystSpectrum(Vec<Rational>);

impl CatalystSpectrum {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyCatalyst);
        }
        normalized_descending(values).map(CatalystSpectrum)
    }

    pub fn parse<S: AsRef<str>>(values: &[S]) -> Result<Self> {
        let parsed = values
            .iter()
            .map(|v| v.as_ref().parse::<Rational>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(parsed)
    }

    /// The two-qubit catalyst `sqrt(p)|00> + sqrt(1-p)|11>` with `1/2 <= p <= 1`.
    pub fn two_qubit(p: &Rational) -> Result<Self> {
        check_catalyst_weight(p)?;
        Ok(CatalystSpectrum(vec![p.clone(), Rational::one() - p]))
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for CatalystSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

pub(crate) fn check_catalyst_weight(p: &Rational) -> Result<()> {
    if *p < Rational::half() || *p > Rational::one() {
        return Err(Error::ProbabilityOutOfRange { p: p.clone() });
    }
    Ok(())
}

/// Differences between source and target coefficients:
///
/// ```text
/// target1 = source1 + eps1
/// target2 = source2 - eps1 - eps2
/// target3 = source3 + eps2 + eps3
/// target4 = source4 - eps3
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EpsilonTriple {
    pub eps1: Rational,
    pub eps2: Rational,
    pub eps3: Rational,
}

impl EpsilonTriple {
    /// Applies the decomposition to `source`, returning the raw target
    /// coefficients in source order.
    pub fn apply(&self, source: &Spectrum4) -> [Rational; 4] {
        let [a1, a2, a3, a4] = source.coefficients();
        [
            a1 + &self.eps1,
            a2 - &self.eps1 - &self.eps2,
            a3 + &self.eps2 + &self.eps3,
            a4 - &self.eps3,
        ]
    }

    /// Inverts [`EpsilonTriple::apply`]: recovers source coefficients from the target.
    pub fn invert(&self, target: &Spectrum4) -> [Rational; 4] {
        let [b1, b2, b3, b4] = target.coefficients();
        [
            b1 - &self.eps1,
            b2 + &self.eps1 + &self.eps2,
            b3 - &self.eps2 - &self.eps3,
            b4 + &self.eps3,
        ]
    }
}

/// Which inequality of the catalysis precondition a pair violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StarViolation {
    /// The largest coefficient would have to shrink (eps1 < 0).
    LargestDecreases,
    /// The two largest coefficients do not lose weight (eps2 <= 0), so
    /// the second partial sum is not the obstruction.
    NoSecondSumViolation,
    /// The smallest coefficient would have to grow (eps3 < 0).
    SmallestIncreases,
}

impl StarViolation {
    /// 1-based index of the failed inequality.
    pub fn inequality(&self) -> usize {
        match self {
            StarViolation::LargestDecreases => 1,
            StarViolation::NoSecondSumViolation => 2,
            StarViolation::SmallestIncreases => 3,
        }
    }
}

impl fmt::Display for StarViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StarViolation::LargestDecreases => "largest coefficient decreases (alpha1 > alpha1')",
            StarViolation::NoSecondSumViolation => {
                "second partial sum not violated (alpha1 + alpha2 <= alpha1' + alpha2')"
            }
            StarViolation::SmallestIncreases => "smallest coefficient increases (alpha4 < alpha4')",
        })
    }
}

/// Computes `(eps1, eps2, eps3)` and checks `eps1 >= 0`, `eps2 > 0`,
/// `eps3 >= 0`, reporting the first sign condition that fails.
pub fn epsilon_decompose(source: &Spectrum4, target: &Spectrum4) -> std::result::Result<EpsilonTriple, StarViolation> {
    let [a1, a2, _, a4] = source.coefficients();
    let [b1, b2, _, b4] = target.coefficients();
    let eps1 = b1 - a1;
    let eps2 = (a1 + a2) - (b1 + b2);
    let eps3 = a4 - b4;
    if eps1.is_negative() {
        Err(StarViolation::LargestDecreases)
    } else if !eps2.is_positive() {
        Err(StarViolation::NoSecondSumViolation)
    } else if eps3.is_negative() {
        Err(StarViolation::SmallestIncreases)
    } else {
        Ok(EpsilonTriple { eps1, eps2, eps3 })
    }
}

/// `alpha1 <= alpha1'`, `alpha1 + alpha2 > alpha1' + alpha2'`, `alpha4 >= alpha4'`.
pub fn satisfies_star(source: &Spectrum4, target: &Spectrum4) -> bool {
    let [a1, a2, _, a4] = source.coefficients();
    let [b1, b2, _, b4] = target.coefficients();
    a1 <= b1 && a1 + a2 > b1 + b2 && a4 >= b4
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majorization::is_majorized_by;
    use proptest::prelude::*;

    fn spectrum4(values: [&str; 4]) -> Spectrum4 {
        Spectrum4::parse(&values).unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn sorts_into_canonical_order() {
        let s = spectrum4(["0.1", "0.4", "0.4", "0.1"]);
        assert_eq!(s, spectrum4(["0.4", "0.4", "0.1", "0.1"]));
        assert_eq!(s.alpha(1), &r("0.4"));
        assert_eq!(s.alpha(4), &r("0.1"));

        let s = spectrum4(["0.5", "0.25", "0.25", "0"]);
        assert_eq!(s.coefficients(), &[r("0.5"), r("0.25"), r("0.25"), r("0")]);
    }

    #[test]
    fn rejects_invalid_spectra() {
        assert_eq!(
            Spectrum4::parse(&["0.3", "0.3", "0.3", "0.3"]),
            Err(Error::NotNormalized { sum: r("1.2") })
        );
        assert!(matches!(
            Spectrum4::parse(&["1.1", "-0.1", "0", "0"]),
            Err(Error::NegativeComponent { index: 1, .. })
        ));
        assert!(matches!(
            Spectrum4::parse(&["1", "0", "0"]),
            Err(Error::WrongLength { expected: 4, actual: 3 })
        ));
        assert!(matches!(
            Spectrum4::parse(&["x", "0", "0", "1"]),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn catalyst_validation() {
        assert_eq!(CatalystSpectrum::new(vec![]), Err(Error::EmptyCatalyst));
        let c = CatalystSpectrum::parse(&["0.4", "0.6"]).unwrap();
        assert_eq!(c.components(), &[r("0.6"), r("0.4")]);
        assert!(CatalystSpectrum::two_qubit(&r("0.4")).is_err());
        assert!(CatalystSpectrum::two_qubit(&r("1.01")).is_err());
        assert_eq!(
            CatalystSpectrum::two_qubit(&Rational::one()).unwrap().components(),
            &[Rational::one(), Rational::zero()]
        );
    }

    #[test]
    fn decomposes_worked_examples() {
        let eps = epsilon_decompose(
            &spectrum4(["0.4", "0.4", "0.1", "0.1"]),
            &spectrum4(["0.5", "0.25", "0.25", "0"]),
        )
        .unwrap();
        assert_eq!(
            eps,
            EpsilonTriple {
                eps1: r("0.1"),
                eps2: r("0.05"),
                eps3: r("0.1")
            }
        );

        let eps = epsilon_decompose(
            &spectrum4(["0.45", "0.45", "0.05", "0.05"]),
            &spectrum4(["0.5", "0.35", "0.15", "0"]),
        )
        .unwrap();
        assert_eq!(
            eps,
            EpsilonTriple {
                eps1: r("0.05"),
                eps2: r("0.05"),
                eps3: r("0.05")
            }
        );
    }

    #[test]
    fn decomposition_failures_name_the_inequality() {
        let s = spectrum4(["0.4", "0.4", "0.1", "0.1"]);
        assert_eq!(epsilon_decompose(&s, &s), Err(StarViolation::NoSecondSumViolation));
        assert_eq!(
            epsilon_decompose(&spectrum4(["0.5", "0.25", "0.25", "0"]), &s),
            Err(StarViolation::LargestDecreases)
        );
        assert_eq!(
            epsilon_decompose(
                &spectrum4(["0.4", "0.4", "0.2", "0"]),
                &spectrum4(["0.5", "0.25", "0.15", "0.1"])
            ),
            Err(StarViolation::SmallestIncreases)
        );
    }

    #[test]
    fn star_condition_examples() {
        assert!(satisfies_star(
            &spectrum4(["0.4", "0.4", "0.1", "0.1"]),
            &spectrum4(["0.5", "0.25", "0.25", "0"])
        ));
        assert!(satisfies_star(
            &spectrum4(["0.45", "0.45", "0.05", "0.05"]),
            &spectrum4(["0.5", "0.35", "0.15", "0"])
        ));
        assert!(!satisfies_star(
            &spectrum4(["0.5", "0.25", "0.25", "0"]),
            &spectrum4(["0.4", "0.4", "0.1", "0.1"])
        ));
    }

    /// Random canonical spectrum with denominator `den`.
    fn spectrum_strategy() -> impl Strategy<Value = Spectrum4> {
        (4i64..40)
            .prop_flat_map(|den| (Just(den), proptest::collection::vec(0..=den, 3)))
            .prop_map(|(den, mut cuts)| {
                cuts.sort();
                let parts = [cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], den - cuts[2]];
                Spectrum4::new(parts.map(|k| Rational::frac(k, den))).unwrap()
            })
    }

    proptest! {
        #[test]
        fn star_iff_decomposition(source in spectrum_strategy(), target in spectrum_strategy()) {
            prop_assert_eq!(satisfies_star(&source, &target), epsilon_decompose(&source, &target).is_ok());
        }

        #[test]
        fn decomposition_reconstructs_target(source in spectrum_strategy(), target in spectrum_strategy()) {
            if let Ok(eps) = epsilon_decompose(&source, &target) {
                prop_assert_eq!(&eps.apply(&source), target.coefficients());
                prop_assert_eq!(&eps.invert(&target), source.coefficients());
                // the obstruction is real: the source is not majorized by the target
                prop_assert!(!is_majorized_by(source.coefficients(), target.coefficients()).unwrap());
            }
        }
    }
}
