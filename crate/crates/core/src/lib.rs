//! Binomial ideals of finite lattices.
//!
//! For a finite lattice `L` the ideal `I_L` in the polynomial ring whose
//! variables are the elements of `L` is generated by the basic binomials
//! `ab − (a∨b)(a∧b)`. This crate builds lattices, computes reduced Gröbner
//! bases of `I_L` under lex, grlex and grevlex orders, identifies `I_L` with
//! a toric edge ideal for planar distributive lattices, and sweeps orders and
//! small lattices looking for squarefree and quadratic initial ideals.

pub mod birkhoff;
pub mod canonical;
pub mod catalog;
pub mod enumerate;
pub mod explorer;
pub mod groebner;
pub mod io;
pub mod lattice;
pub mod monomial;
pub mod order;
pub mod report;
pub mod toric;

pub use birkhoff::{join_irreducibles, planar_embedding, PlanarEmbedding, Poset};
pub use catalog::catalog;
pub use groebner::{
    buchberger, buchberger_with, normal_form, orient, s_binomial, Certificate, GroebnerError,
    GroebnerOptions, MonomialIdeal, NormalForm, OrientedBinomial, PairStrategy, ReducedGroebnerBasis,
};
pub use lattice::{CoverPolicy, Lattice, LatticeError};
pub use monomial::{Binomial, Monomial};
pub use order::{enumerate_order_specs, rank_revlex, MonomialOrder, OrderError, OrderFamily, SweepMode};
pub use report::{lattice_ideal_report, LatticeIdealReport};
