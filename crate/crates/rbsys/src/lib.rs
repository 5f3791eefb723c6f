//! Exact-arithmetic workbench for Rota-Baxter systems, associative
//! Yang-Baxter pairs, covariant bialgebras and q-calculus.
//!
//! The crate represents finite-dimensional associative algebras by sparse
//! structure constants over one of three exact coefficient fields (the
//! rationals, rational functions in `q`, prime fields), and provides
//! verifiers and constructors for the algebraic structures built on top of
//! them: Rota-Baxter operators and systems, dendriform algebras, weak
//! pseudotwistors, Yang-Baxter pairs, covariant bialgebras and modules,
//! twisted Rota-Baxter operators and the Jackson q-integral.
//!
//! All checks are exact: a verifier either passes or returns a
//! counterexample in terms of basis indices. Identities are bilinear or
//! trilinear in their arguments, so checking them on basis tuples is
//! complete.

pub mod algebra;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod rbsystem;
pub mod ybpair;
