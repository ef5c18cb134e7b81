//! Numerical toolkit for truncated weight-basis representations of the
//! q-deformed enveloping algebra U_q(so(2,1)) and of the Euclidean plane
//! algebra E(2), together with the anti-deformation construction that
//! expresses the E(2) translation generators as functions of the deformed
//! generators.
//!
//! Modules:
//! - [`qnum`]: q-number arithmetic at the two levels q and sqrt(q),
//!   parametrized through the quarter power s = q^(1/4)
//! - [`opalg`]: banded operators on truncated weight windows, with
//!   truncation-margin accounting so identities are only asserted where
//!   truncation cannot pollute them
//! - [`uqso21`]: builders for the principal, discrete and root-of-unity
//!   series, the Casimir element, the real form, and unitarizing weights
//! - [`e2`]: unitary E(2) representations and the forward deformation that
//!   produces deformed-algebra generator candidates from E(2) data
//! - [`antideform`]: the inverse construction (the scalar Y, the diagonal
//!   operator D, translations P1/P2), an independent per-weight solve
//!   oracle, and the representation trichotomy classifier
//! - [`tensor`]: the coproduct on tensor products and the witness that the
//!   forward deformation does not intertwine the two coproducts
//! - [`verify`]: named residual checks shared by tests and the CLI

pub mod antideform;
pub mod e2;
pub mod opalg;
pub mod qnum;
pub mod tensor;
pub mod uqso21;
pub mod verify;

pub use antideform::{AntideformBundle, Branch, TheoremReport, Verdict};
pub use e2::{E2GeneratorSet, E2Spec};
pub use opalg::{BandedOp, DiagWeight, Epsilon, WeightWindow};
pub use qnum::{QLevel, QParam};
pub use uqso21::{GeneratorSet, RepSpec, Side};
