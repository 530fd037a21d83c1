//! Finite digraphs (loops and parallel edges allowed), the six
//! Morita-equivalence moves (S), (R), (O), (I), (C), (P), and the full zoo of
//! digraph spectra: Laplace, adjacency, binary adjacency, symmetric and
//! symmetric binary adjacency, line adjacency, Hermitian, skew and binary
//! skew adjacency, skew and binary skew Laplace, and — for strongly connected
//! digraphs — normalized and combinatorial Laplace spectra in plain and
//! binary flavors.
//!
//! Spectra are represented canonically by exact characteristic polynomials
//! over arbitrary-precision rationals (Gaussian rationals for the Hermitian
//! matrix), so the question "do two digraphs have the same multiset of
//! nonzero eigenvalues?" is decided exactly, with floating point confined to
//! the two normalized-Laplacian kinds where square roots are unavoidable.
//!
//! The [`verifier`] module carries a transcription of the reference examples
//! and reproduces both the example spectra and the move/spectrum
//! preservation tables end to end.

pub mod cycles;
pub mod digraph;
pub mod matrices;
pub mod moves;
pub mod spectra;
pub mod verifier;

pub use cycles::{bowen_lanford_residual, count_cycles, CycleCountVector};
pub use digraph::{DegreeQuad, Digraph, DigraphError, ParseError, VertexClassification};
pub use matrices::{ExactMatrix, FloatMatrix, MatrixError, MatrixKind, Rational};
pub use moves::{apply_move, check_precondition, MoveApplication, MoveError, MoveKind};
pub use spectra::{nonzero_spectra_equal, spectrum, CharPoly, SpectrumError, SpectrumReport};
pub use verifier::{preservation_check, PreservationResult, Verdict};
