//! Exact arithmetic for Frobenius-Euler numbers and polynomials.
//!
//! Everything is computed over the field `Q(λ)` of rational functions in the
//! formal parameter `λ` with rational coefficients; there is no floating point
//! anywhere. The crate provides
//!
//! * [`rat`], [`lpoly`], [`lrat`], [`series`]: the arithmetic tower — exact
//!   rationals, polynomials in `λ`, the field `Q(λ)` in canonical form, and
//!   truncated formal power series over it;
//! * [`xpoly`]: polynomials in `x` with `Q(λ)` coefficients;
//! * [`frobenius`]: Frobenius-Euler numbers `H_n(λ)` and polynomials
//!   `H_n(x|λ)` of every order, plus the `Δ_λ` difference operator,
//!   derivatives, shifts and the unit-interval integral;
//! * [`basis`]: expansion of arbitrary polynomials in the (order-`r`)
//!   Frobenius-Euler basis and the inverse reconstruction;
//! * [`lab`]: a registry of identities with a decidable symbolic verifier, a
//!   seeded randomized screen, and report generation.
//!
//! The `parallel` feature (on by default) runs grid verification on a rayon
//! pool; without it the same code runs sequentially. Output ordering is fixed
//! by `(id, n, r)` either way.
//!
//! Library-wide convention: `0^0 = 1`, so `0^{n-k}` encodes the Kronecker
//! delta `δ_{n,k}`.

pub mod basis;
pub mod error;
pub mod frobenius;
pub mod lab;
pub mod lpoly;
pub mod lrat;
pub mod parse;
pub mod rat;
pub mod render;
pub mod series;
pub mod xpoly;

pub use error::ArithError;
pub use lpoly::LPoly;
pub use lrat::LRat;
pub use rat::BigRat;
pub use series::LSeries;
pub use xpoly::XPoly;
