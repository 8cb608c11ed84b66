//! Numerical library for approximation theory in weighted Orlicz spaces on
//! the circle: quasiconvex Young functions, Muckenhoupt weights, Luxemburg
//! and Amemiya norms, Steklov-based fractional moduli of smoothness,
//! Fourier multiplier operators, best and near-best trigonometric
//! approximation, K- and realization functionals, and a verification
//! harness that sweeps Jackson/Marchaud/realization-type inequalities over
//! a corpus of test functions and contexts.

pub mod approximation;
pub mod error;
pub mod norms;
pub mod numerics;
pub mod operators;
pub mod periodic;
pub mod verify;
pub mod weights;
pub mod youngfn;

pub use error::{Error, Result};
pub use norms::OrliczContext;
pub use periodic::{Grid, PeriodicFunction, TrigPolynomial};
pub use weights::Weight;
pub use youngfn::YoungFunction;
