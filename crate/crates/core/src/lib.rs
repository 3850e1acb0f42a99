//! Exact arithmetic for q-deformed rational numbers and q-continued
//! fractions: the convergent recurrences, matrices of convergents,
//! q-continuants, the weighted Farey graph, closure counting on path
//! quivers, q-Fibonacci and q-Pell polynomials, and Jones polynomials of
//! rational knots computed by independent routes.

pub mod cli;
pub mod closures;
pub mod contfrac;
pub mod deform;
pub mod farey;
pub mod jones;
pub mod poly;
pub mod ptolemy;
pub mod sequences;
pub mod verify;

pub use contfrac::{CFNegative, CFRegular, Rational};
pub use deform::{qdeform, QRational};
pub use poly::{IntPoly, LaurentPoly};
