//! Partial sums, majorization and the LOCC criterion for shared-basis pure states.

use crate::error::{Error, Result};
use crate::number::Rational;
use crate::spectra::Spectrum4;

/// Cumulative sums of a vector sorted descending; the last entry is the total.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialSums(Vec<Rational>);

impl PartialSums {
    pub fn sums(&self) -> &[Rational] {
        &self.0
    }

    /// Sum of the `k` largest components (`k` is 1-based; `k = 0` gives zero).
    pub fn get(&self, k: usize) -> Rational {
        if k == 0 {
            Rational::zero()
        } else {
            self.0[k - 1].clone()
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.0
    }
}

/// Sorts descending and accumulates.
pub fn partial_sums(values: &[Rational]) -> Result<PartialSums> {
    if let Some((index, value)) = values.iter().enumerate().find(|(_, v)| v.is_negative()) {
        return Err(Error::NegativeComponent {
            index,
            value: value.clone(),
        });
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let mut acc = Rational::zero();
    let sums = sorted
        .into_iter()
        .map(|v| {
            acc = &acc + v;
            acc.clone()
        })
        .collect();
    Ok(PartialSums(sums))
}

/// The smallest `k` (1-based) with `sum_k(a) > sum_k(b)`, if any.
///
/// Errors when the vectors differ in length or total.
pub fn first_majorization_violation(a: &[Rational], b: &[Rational]) -> Result<Option<usize>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let lhs = partial_sums(a)?;
    let rhs = partial_sums(b)?;
    if lhs.total() != rhs.total() {
        return Err(Error::TotalMismatch {
            left: Box::new(lhs.total()),
            right: Box::new(rhs.total()),
        });
    }
    Ok(lhs
        .sums()
        .iter()
        .zip(rhs.sums())
        .position(|(x, y)| x > y)
        .map(|i| i + 1))
}

/// `a ≺ b`: every descending partial sum of `a` is at most that of `b`.
pub fn is_majorized_by(a: &[Rational], b: &[Rational]) -> Result<bool> {
    first_majorization_violation(a, b).map(|v| v.is_none())
}

/// Nielsen's criterion: `source -> target` is possible by LOCC iff source ≺ target.
pub fn locc_possible(source: &Spectrum4, target: &Spectrum4) -> bool {
    is_majorized_by(source.coefficients(), target.coefficients())
        .expect("canonical spectra have equal length and unit total")
}

/// Vertices `(k/n, sum of the k largest)` of the Lorenz curve, starting at `(0, 0)`.
pub fn lorenz_points(values: &[Rational]) -> Result<Vec<(Rational, Rational)>> {
    let sums = partial_sums(values)?;
    if sums.total() != Rational::one() {
        return Err(Error::NotNormalized { sum: sums.total() });
    }
    let n = values.len() as i64;
    let mut points = vec![(Rational::zero(), Rational::zero())];
    points.extend(
        sums.into_vec()
            .into_iter()
            .enumerate()
            .map(|(k, s)| (Rational::frac(k as i64 + 1, n), s)),
    );
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(values: &[&str]) -> Vec<Rational> {
        values.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn partial_sum_examples() {
        assert_eq!(
            partial_sums(&v(&["0.4", "0.4", "0.1", "0.1"])).unwrap().sums(),
            v(&["0.4", "0.8", "0.9", "1"]).as_slice()
        );
        assert_eq!(
            partial_sums(&v(&["0", "1", "0", "0"])).unwrap().sums(),
            v(&["1", "1", "1", "1"]).as_slice()
        );
        assert_eq!(
            partial_sums(&v(&["0.25", "0.25", "0.25", "0.25"])).unwrap().sums(),
            v(&["0.25", "0.5", "0.75", "1"]).as_slice()
        );
        assert!(matches!(
            partial_sums(&v(&["0.5", "-0.5"])),
            Err(Error::NegativeComponent { index: 1, .. })
        ));
    }

    #[test]
    fn majorization_examples() {
        let uniform = v(&["0.25", "0.25", "0.25", "0.25"]);
        let point = v(&["1", "0", "0", "0"]);
        assert!(is_majorized_by(&uniform, &point).unwrap());
        assert!(!is_majorized_by(&point, &uniform).unwrap());

        let source = v(&["0.4", "0.4", "0.1", "0.1"]);
        let target = v(&["0.5", "0.25", "0.25", "0"]);
        assert!(!is_majorized_by(&source, &target).unwrap());
        assert_eq!(first_majorization_violation(&source, &target).unwrap(), Some(2));
        assert!(is_majorized_by(&source, &source).unwrap());
    }

    #[test]
    fn majorization_input_errors() {
        assert_eq!(
            is_majorized_by(&v(&["1"]), &v(&["1", "0"])),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        );
        assert!(matches!(
            is_majorized_by(&v(&["0.5", "0.5"]), &v(&["0.5", "0.4"])),
            Err(Error::TotalMismatch { .. })
        ));
    }

    #[test]
    fn locc_examples() {
        let s = |x: [&str; 4]| Spectrum4::parse(&x).unwrap();
        assert!(!locc_possible(
            &s(["0.4", "0.4", "0.1", "0.1"]),
            &s(["0.5", "0.25", "0.25", "0"])
        ));
        assert!(locc_possible(
            &s(["0.25", "0.25", "0.25", "0.25"]),
            &s(["0.5", "0.25", "0.25", "0"])
        ));
        let x = s(["0.7", "0.1", "0.1", "0.1"]);
        assert!(locc_possible(&x, &x));
    }

    #[test]
    fn lorenz_examples() {
        let pts = lorenz_points(&v(&["1", "0", "0", "0"])).unwrap();
        let expected: Vec<_> = [("0", "0"), ("1/4", "1"), ("1/2", "1"), ("3/4", "1"), ("1", "1")]
            .iter()
            .map(|(x, y)| (x.parse().unwrap(), y.parse().unwrap()))
            .collect();
        assert_eq!(pts, expected);

        let pts = lorenz_points(&v(&["0.4", "0.4", "0.1", "0.1"])).unwrap();
        assert_eq!(pts[2], ("1/2".parse().unwrap(), "0.8".parse().unwrap()));
        assert_eq!(pts[3], ("3/4".parse().unwrap(), "0.9".parse().unwrap()));

        for (x, y) in lorenz_points(&v(&["0.25", "0.25", "0.25", "0.25"])).unwrap() {
            assert_eq!(x, y);
        }
        assert!(matches!(
            lorenz_points(&v(&["0.5", "0.4"])),
            Err(Error::NotNormalized { .. })
        ));
    }

    /// Nonnegative integer weights over a common denominator, so every vector
    /// of length `n` sums to one.
    fn distribution(n: usize) -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec(0i64..20, n).prop_filter_map("nonzero total", |w| {
            let total: i64 = w.iter().sum();
            (total > 0).then(|| w.iter().map(|&x| Rational::frac(x, total)).collect())
        })
    }

    proptest! {
        #[test]
        fn preorder(a in distribution(5), b in distribution(5), c in distribution(5)) {
            prop_assert!(is_majorized_by(&a, &a).unwrap());
            if is_majorized_by(&a, &b).unwrap() && is_majorized_by(&b, &c).unwrap() {
                prop_assert!(is_majorized_by(&a, &c).unwrap());
            }
        }

        #[test]
        fn uniform_and_point_mass_are_extremes(a in distribution(6)) {
            let uniform = vec![Rational::frac(1, 6); 6];
            let mut point = vec![Rational::zero(); 6];
            point[3] = Rational::one();
            prop_assert!(is_majorized_by(&uniform, &a).unwrap());
            prop_assert!(is_majorized_by(&a, &point).unwrap());
        }

        #[test]
        fn permutation_invariant(a in distribution(5), b in distribution(5), rot in 0usize..5) {
            let mut shuffled = a.clone();
            shuffled.rotate_left(rot);
            shuffled.swap(0, 4);
            prop_assert_eq!(is_majorized_by(&a, &b).unwrap(), is_majorized_by(&shuffled, &b).unwrap());
            prop_assert_eq!(is_majorized_by(&b, &a).unwrap(), is_majorized_by(&b, &shuffled).unwrap());
        }

        #[test]
        fn lorenz_is_nondecreasing_and_concave(a in distribution(7)) {
            let pts = lorenz_points(&a).unwrap();
            let steps: Vec<Rational> = pts.windows(2).map(|w| &w[1].1 - &w[0].1).collect();
            prop_assert!(steps.iter().all(|s| !s.is_negative()));
            prop_assert!(steps.windows(2).all(|w| w[0] >= w[1]));
        }
    }
}
