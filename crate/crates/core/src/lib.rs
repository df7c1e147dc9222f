//! Certified double-sided polynomial bounds for Wilker and Shafer–Fink type
//! inequalities.
//!
//! The crate generates the exact coefficient sequences of the bounded
//! functions, assembles lower/upper odd polynomials with exact `Σ q·π^e`
//! coefficients, and checks them numerically against a multiprecision
//! reference evaluation.
//!
//! Numeric code is generic over [`Real`], implemented for `f32`, `f64` and
//! [`BigFloat`]; polynomial evaluation additionally works over the exact
//! carriers [`Rational`] and [`PiConstant`].

pub mod bounds;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod scalar;
pub mod series;
pub mod verify;

pub use bounds::{
    eval_bound, sf_d_bounds, sf_e_bounds, wd_bound_pair, wilker_bounds, wilker_gap_constant,
    BoundPair, Denominator, Endpoint, OddPoly, OddPolyBound, Side, Target, WdBounds,
};
pub use error::{Error, Result};
pub use exact::{bernoulli, pi_eval, pi_sign, PiConstant};
pub use oracle::{eval_target, taylor_head, TargetFn};
pub use scalar::{BigFloat, Real};
pub use series::{sf_d, sf_e, split_nonneg, wilker_c, CoeffSeq, Kappa, SeqId, SplitSeries};
pub use verify::{
    max_gap, verify_pair, verify_pair_escalating, wilker_error_table, ErrorTableRow, Status,
    VerificationReport,
};

/// Exact rational number in lowest terms.
pub type Rational = num_rational::BigRational;

/// Bound polynomial with exact coefficients.
pub type ExactPoly = OddPoly<PiConstant>;

/// Bound polynomial materialized in double precision.
pub type PolyF64 = OddPoly<f64>;

/// Bound polynomial materialized in single precision.
pub type PolyF32 = OddPoly<f32>;

/// Bound polynomial materialized at multiprecision.
pub type PolyBig = OddPoly<BigFloat>;
