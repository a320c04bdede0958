//! Finite-stage computations for synthetic Stone duality: finitely presented
//! Boolean algebras, towers of finite spectra, the dyadic interval, and Čech
//! cohomology over the integers.

pub mod boolalg;
pub mod cap;
pub mod syntax;
pub mod profinite;
pub mod interval;
pub mod zhomology;
