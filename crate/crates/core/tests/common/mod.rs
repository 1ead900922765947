//! Random instance generators shared by the integration tests.

#![allow(dead_code)]

use entcat::{ExtendedRational, FeasibilityReport, Rational, Spectrum4};
use rand::Rng;

/// Which slack parameter, if any, is pinned to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slack {
    Free,
    ZeroEps1,
    ZeroEps3,
}

/// A random (source, target) pair admitting an epsilon decomposition.
///
/// The target is assembled from its successive gaps `g1..g4` over the common
/// denominator `t1 + t2 + t3 + t4`; the epsilons are drawn from the ranges
/// that keep the source sorted (`2 eps1 + eps2 <= g1`, `eps2 + 2 eps3 <= g3`).
pub fn star_pair<R: Rng>(rng: &mut R, max_gap: i64, slack: Slack) -> (Spectrum4, Spectrum4) {
    let g1 = rng.gen_range(1..=max_gap);
    let g2 = rng.gen_range(0..=max_gap);
    let g3 = rng.gen_range(1..=max_gap);
    let g4 = rng.gen_range(0..=max_gap / 2);
    let e2 = rng.gen_range(1..=g1.min(g3));
    let e1 = match slack {
        Slack::ZeroEps1 => 0,
        _ => rng.gen_range(0..=(g1 - e2) / 2),
    };
    let e3 = match slack {
        Slack::ZeroEps3 => 0,
        _ => rng.gen_range(0..=(g3 - e2) / 2),
    };

    let t4 = g4;
    let t3 = t4 + g3;
    let t2 = t3 + g2;
    let t1 = t2 + g1;
    let den = t1 + t2 + t3 + t4;
    let frac = |k: i64| Rational::frac(k, den);
    let source = [t1 - e1, t2 + e1 + e2, t3 - e2 - e3, t4 + e3];
    (
        Spectrum4::new(source.map(frac)).unwrap(),
        Spectrum4::new([t1, t2, t3, t4].map(frac)).unwrap(),
    )
}

/// `k / d` with `k / d < x <= (k + 1) / d`, i.e. the grid point strictly below `x`.
pub fn grid_point_below(x: &Rational, d: i64) -> Rational {
    let mut k = (x.to_f64() * d as f64).floor() as i64 + 1;
    while Rational::frac(k, d) >= *x {
        k -= 1;
    }
    Rational::frac(k, d)
}

/// The grid point strictly above `x`.
pub fn grid_point_above(x: &Rational, d: i64) -> Rational {
    let mut k = (x.to_f64() * d as f64).ceil() as i64 - 1;
    while Rational::frac(k, d) <= *x {
        k += 1;
    }
    Rational::frac(k, d)
}

/// Catalyst weights worth probing for a pair: a coarse grid over `[1/2, 1]`,
/// the weights where `r` equals `m` or `M`, the neighbouring points of a
/// fine grid, points a hair inside and outside each, and a few random weights.
pub fn probe_weights<R: Rng>(rng: &mut R, report: &FeasibilityReport) -> Vec<Rational> {
    let half = Rational::half();
    let one = Rational::one();
    let mut weights = entcat::default_grid(36, Some(report));

    let mut edges = Vec::new();
    if let Some(ExtendedRational::Finite(m)) = report.lower() {
        edges.push(weight(m));
    }
    if let Some(big_m) = report.upper() {
        edges.push(weight(big_m));
    }
    let hair = Rational::frac(1, 1_000_000_000);
    for e in edges {
        weights.push(grid_point_below(&e, 1000));
        weights.push(grid_point_above(&e, 1000));
        weights.push(&e - &hair);
        weights.push(&e + &hair);
        weights.push(e);
    }
    for _ in 0..3 {
        let d = rng.gen_range(2..500i64);
        let k = rng.gen_range((d + 1) / 2..=d);
        weights.push(Rational::frac(k, d));
    }

    weights.retain(|p| *p >= half && *p <= one);
    weights.sort();
    weights.dedup();
    weights
}

fn weight(r: &Rational) -> Rational {
    (Rational::one() + r).recip().unwrap()
}

/// A pair with prescribed bounds `m0 <= M0`, hence catalyzable.
pub fn catalyzable_pair<R: Rng>(rng: &mut R) -> (Spectrum4, Spectrum4) {
    let d = rng.gen_range(2..=40i64);
    let big_m0 = Rational::frac(rng.gen_range(1..d), d);
    let e = rng.gen_range(1..=20i64);
    let m0 = &big_m0 * Rational::frac(rng.gen_range(1..=e), e);
    let built = entcat::construct_states(&m0, &big_m0).unwrap();
    (built.source, built.target)
}
