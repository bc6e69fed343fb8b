//! Exact analysis of finitely presented algebras with weighted degree
//! functions: Golod-Shafarevich series and their certification, truncated
//! Hilbert series, growth, and direct limits of quotient sequences.

pub mod algebra;
pub mod automaton;
pub mod certify;
pub mod corpus;
pub mod format;
pub mod gbasis;
pub mod genpoly;
pub mod growth;
pub mod limits;
pub mod report;

pub use algebra::{
    poly_degree, word_degree, AlgebraError, Degree, DegreeFunction, GeneratorSet, NcPolynomial,
    Presentation, Word,
};
pub use certify::{
    certify, certify_series, gs_series, verify_scalar, verify_vinberg, GsCertificate, GsStatus,
    Verdict, VinbergReport, Witness,
};
pub use format::{parse, AlgebraFile, ParseError};
pub use gbasis::{
    free_subalgebra_check, hilbert_truncation, truncated_groebner, GbError, GroebnerOptions,
    HilbertTruncation, TruncatedGroebner,
};
pub use genpoly::{
    negativity_set, AlgebraicNumber, GenPoly, GenPolyError, IntPoly, IntervalSet, Point,
};
pub use growth::{classify_growth, standard_hilbert, verify_degree_rescaling, Growth};
pub use limits::{
    certify_limit, find_gs_weight, gn_remainder, instantiate, limit_closed_eval, nested_sets,
    truncate_relations, LimitCertificate, LimitSpec, LimitVerdict, RelationFamily,
};
pub use report::{Report, RunError};

pub use num::{BigInt, BigRational, BigUint};
