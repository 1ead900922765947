//! Exact decision procedures for entanglement catalysis of four-level
//! bipartite pure states sharing a Schmidt basis.
//!
//! * [`majorization`] decides plain LOCC convertibility (Nielsen's criterion).
//! * [`catalysis`] decides whether a two-qubit catalyst
//!   `sqrt(p)|00> + sqrt(1-p)|11>` can enable a conversion and returns the
//!   exact interval of admissible `p`.
//! * [`oracle`] re-derives every catalysis verdict by brute-force
//!   majorization of the augmented spectra.
//! * [`constructor`] manufactures pairs with prescribed catalyst bounds.
//!
//! All arithmetic is exact; see [`number::Rational`].
//!
//! ```
//! use entcat::{analyze, Rational, Spectrum4, Verdict};
//!
//! let source = Spectrum4::parse(&["0.4", "0.4", "0.1", "0.1"]).unwrap();
//! let target = Spectrum4::parse(&["0.5", "0.25", "0.25", "0"]).unwrap();
//! let report = analyze(&source, &target);
//! assert_eq!(report.verdict(), Verdict::Catalyzable);
//! assert_eq!(
//!     report.weight_interval(),
//!     Some(&(Rational::frac(3, 5), Rational::frac(5, 8)))
//! );
//! ```

pub mod catalysis;
pub mod constructor;
pub mod error;
pub mod majorization;
pub mod number;
pub mod oracle;
pub mod spectra;

#[cfg(test)]
mod test_support;

pub use catalysis::{
    analyze, closed_form_lambda_prime, is_valid_catalyst, lower_bound, upper_bound, FeasibilityReport,
    InfeasibleReason, Verdict,
};
pub use constructor::{choose_mu, construct_states, construct_with_mu, Branch, ConstructionResult};
pub use error::{Error, Result};
pub use majorization::{first_majorization_violation, is_majorized_by, locc_possible, lorenz_points, partial_sums};
pub use number::{mediant, parse_rational, ExtendedRational, Rational};
pub use oracle::{augment, default_grid, oracle_valid_catalyst, sweep, AugmentedSpectrum};
pub use spectra::{
    epsilon_decompose, make_spectrum, satisfies_star, CatalystSpectrum, EpsilonTriple, Spectrum4, StarViolation,
};
