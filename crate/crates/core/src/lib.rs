//! Finite trigonometric series identities, evaluated two ways and checked
//! against each other.
//!
//! The crate houses a small catalog of identities — De Moivre binomial
//! expansions of (x+iy)^n, the alternating binomial sums behind tan(nπ/4),
//! integer-valued Gaussian products, the Dirichlet-style cosine sums, a
//! telescoping half-angle tangent sum, and two tangent-product sums — and,
//! for each, both a naive direct-summation oracle and a closed form:
//!
//! * [`exact`] — arbitrary-precision integers, Gaussian integers, binomial
//!   coefficients, extended rationals; every identity's exact side.
//! * [`closed_form`] — floating-point right-hand sides, with principal
//!   arguments, cancellation-safe kernels, and log-space magnitudes.
//! * [`oracle`] — plain left-to-right summation of every left-hand side.
//! * [`verify`] — seeded, pole-guarded sweeps comparing the two routes,
//!   aggregated into serializable reports.
//! * [`bench`] — median-of-reps wall-time comparison of the two routes.
//!
//! All evaluation functions are pure; values can be shared and the
//! functions called freely across threads. Sweeps and benchmarks are
//! deterministic given the plan (benchmark *timings* are, of course, not).

pub mod bench;
pub mod closed_form;
pub mod exact;
pub mod oracle;
pub mod verify;

pub use closed_form::{Angle, CosSinPair, EvalError, DEFAULT_POLE_GUARD, DEFAULT_TOLERANCE};
pub use exact::{ExtendedRational, FactorList, GaussianInt};
pub use verify::{IdentityReport, SamplePlan, TheoremId};
