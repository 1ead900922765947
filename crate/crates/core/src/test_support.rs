//! Proptest strategies shared by the unit tests.

use proptest::prelude::*;

use crate::number::Rational;
use crate::spectra::Spectrum4;

/// Any canonical spectrum with a denominator below 40.
pub fn spectrum() -> impl Strategy<Value = Spectrum4> {
    (4i64..40)
        .prop_flat_map(|den| (Just(den), proptest::collection::vec(0..=den, 3)))
        .prop_map(|(den, mut cuts)| {
            cuts.sort();
            let parts = [cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], den - cuts[2]];
            Spectrum4::new(parts.map(|k| Rational::frac(k, den))).unwrap()
        })
}

/// A (source, target) pair admitting an epsilon decomposition.
///
/// The target is built from its successive gaps `g1..g4` (so `t4 = g4`,
/// `t3 = t4 + g3`, ...), and the epsilons are drawn inside the ranges that
/// keep the source sorted: `2 eps1 + eps2 <= g1` and `eps2 + 2 eps3 <= g3`.
pub fn star_pair() -> impl Strategy<Value = (Spectrum4, Spectrum4)> {
    (1i64..24, 0i64..12, 1i64..24, 0i64..8)
        .prop_flat_map(|(g1, g2, g3, g4)| (Just([g1, g2, g3, g4]), 1..=g1.min(g3)))
        .prop_flat_map(|(g, e2)| (Just(g), Just(e2), 0..=(g[0] - e2) / 2, 0..=(g[2] - e2) / 2))
        .prop_map(|([g1, g2, g3, g4], e2, e1, e3)| {
            let t4 = g4;
            let t3 = t4 + g3;
            let t2 = t3 + g2;
            let t1 = t2 + g1;
            let den = t1 + t2 + t3 + t4;
            let source = [t1 - e1, t2 + e1 + e2, t3 - e2 - e3, t4 + e3];
            let frac = |k: i64| Rational::frac(k, den);
            (
                Spectrum4::new(source.map(frac)).unwrap(),
                Spectrum4::new([t1, t2, t3, t4].map(frac)).unwrap(),
            )
        })
}
