//! Workloads shared by the benchmarks.

use gsforge_core::{parse, AlgebraFile, GenPoly, Presentation};

pub const EXTENDED: &str =
    "generators x=1 y=1 v=3\nrelations\n v - x*y\n v^2*x\n v^2*y\n x*v^2\nend\n";
pub const A1: &str = "generators x=1 y=1\nrelations\n x^2\n x*y*x\nend\n";
pub const COMMUTATOR: &str =
    "generators x=1 y=1 z=1\nrelations\n x*y - y*x\n y*z - z*y\n x*z - z*x\nend\n";
pub const D_FAMILY: &str = "generators x=1 y=1\nrelations\nfamily t from 0\n x*y^t*x^4\nend\n";

pub fn file(text: &str) -> AlgebraFile {
    parse(text).expect("workload parses")
}

pub fn presentation(text: &str) -> Presentation {
    file(text).finite_presentation().expect("finite workload")
}

/// `1 - 3z + z^(3/2) + sum_{k=4}^{n} z^k`: many terms, half-integer exponent.
pub fn long_series(n: i64) -> GenPoly {
    let mut terms = vec![(0, 1, 1), (1, 1, -3), (3, 2, 1)];
    terms.extend((4..=n).map(|k| (k, 1, 1)));
    GenPoly::from_terms(terms.into_iter().map(|(p, q, c)| {
        (
            gsforge_core::BigRational::new(p.into(), q.into()),
            gsforge_core::BigRational::from_integer(c.into()),
        )
    }))
}
