//! Fourier analysis of real-valued functions on the Boolean cube {±1}^n.
//!
//! The crate provides the Fourier–Walsh transform and its inverse, norms and
//! influence/variance functionals, exact Chebyshev/Markov machinery and the
//! ψ-basis expansion, two-block evaluation of the symmetric d-affine form of
//! a tetrahedral polynomial, numerically certified polynomial inequalities
//! (Bohnenblust–Hille ratios, Blei's mixed-norm formula, hypercontractivity,
//! Lorentz-norm dominance, Aaronson–Ambainis quantities), and seeded searches
//! for extremal witnesses.

pub mod cheb;
pub mod cube;
pub mod error;
pub mod inequalities;
pub mod io;
pub mod polarization;
pub mod report;
pub mod suites;
pub mod util;
pub mod witness;

pub use cheb::{PsiExpansion, TwoBlockConstant, UnivariatePoly};
pub use cube::{BooleanFunction, FourierSpectrum};
pub use error::{Error, Result};
pub use inequalities::Tensor;
pub use polarization::{TetrahedralPoly, TwoBlockForm};
pub use report::{InequalityReport, SuiteResult, DEFAULT_TOL};
pub use witness::{SearchConfig, Strategy, Witness};
