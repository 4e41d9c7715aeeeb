//! Explicit solution operators and boundary-control synthesis for the
//! Korteweg-de Vries equation posed on half-lines.
//!
//! The crate provides four layers:
//!
//! * shared numerics: grids, sampled functions, trapezoid quadrature,
//!   fractional Sobolev norms over `(0, T)`, and a smooth cutoff window
//!   ([`grid`], [`norms`], [`cutoff`]);
//! * the operator calculus behind the explicit solution formulas: Gamma,
//!   the Airy kernel, Riemann-Liouville fractional integrals, the free
//!   propagator, Duhamel operators, and the boundary forcing class
//!   ([`special`], [`fractional`], [`ops`]);
//! * spectral solution representations: the contour-integral operator over
//!   the dispersion boundary and the oscillatory boundary-integral operator
//!   ([`spectral`]);
//! * Crank-Nicolson solvers with exact discrete adjoints, HUM conjugate
//!   gradient control synthesis, and the nonlinear fixed-point control loop
//!   ([`solver`], [`hum`], [`nonlinear`]), plus an experiment harness
//!   ([`harness`]).
//!
//! The mdbook under `book/` walks through the same material chapter by
//! chapter; its code snippets compile as doc-tests of this crate.

pub mod cutoff;
pub mod error;
pub mod fractional;
pub mod grid;
pub mod harness;
pub mod hum;
pub mod nonlinear;
pub mod norms;
pub mod ops;
pub mod solver;
pub mod special;
pub mod spectral;

pub use error::{KdvError, Result};
pub use grid::{Field, Grid1D, SpaceTimeField, TimeGrid, TimeSeries};

#[cfg(doctest)]
pub mod book_doctests {
    //! Runs every code snippet in the book as a doc-test so the guide cannot
    //! drift out of sync with the library.
    macro_rules! book_chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    book_chapter!(Introduction, "../../../book/src/introduction.md");
    book_chapter!(GridsAndNorms, "../../../book/src/grids-and-norms.md");
    book_chapter!(AiryAndFractional, "../../../book/src/airy-and-fractional.md");
    book_chapter!(ForcingOperators, "../../../book/src/forcing-operators.md");
    book_chapter!(SpectralRepresentations, "../../../book/src/spectral-representations.md");
    book_chapter!(FdSolver, "../../../book/src/fd-solver.md");
    book_chapter!(Control, "../../../book/src/control.md");
    book_chapter!(Harness, "../../../book/src/harness.md");
}
