//! Estimators for dynamic and static panel probit models with large
//! individual effects.
//!
//! For a short panel of binary outcomes `d_{it}` generated by the latent model
//! `d_{it} = I(tau_i + gamma * d_{i,t-1} + x_{it}'beta + eps_{it} > 0)` with
//! per-individual intercepts `tau_i`, this crate provides:
//!
//! * [`ratio`] — the closed-form estimator `gamma_hat = G^{-1}(n10/n01)` for
//!   T=2 panels without covariates, with its asymptotic standard error;
//! * [`cglm`] — conditional-likelihood estimation of `beta` (static model) and
//!   `(gamma, beta)` (dynamic model) from switchers, fitted by Fisher scoring
//!   with the bounded link `K(t) = G(t) / (G(t) + G(-t))`;
//! * [`heckman`] — the random-effects (normal prior) maximum-likelihood
//!   baseline for T=2 and T=3 panels;
//! * [`runs3`] — the conditional multinomial estimator for T=3 runs-pattern
//!   counts;
//! * [`sim`] — seeded data-generating processes and a Monte Carlo RMSE
//!   harness for simulation studies.
//!
//! The numerical foundations live in [`special`] (normal CDF via a
//! complementary-error-function kernel), [`quad`] (Gauss–Legendre rules and
//! prior-weighted integrals of normal-CDF products), and [`glink`] (the `G`
//! function, its inverse and derivatives, and the `K` link).

pub mod cglm;
pub mod error;
pub mod glink;
pub mod heckman;
pub mod optim;
pub mod panel;
pub mod quad;
pub mod ratio;
pub mod runs3;
pub mod sim;
pub mod special;

pub use error::Error;
pub use panel::PanelData;
pub use quad::{PhiProductSpec, TauDistribution};
