//! Exact polynomial and numerical knot invariants.
//!
//! Everything here is computed over the integers; no floating point. The
//! Kauffman bracket and Jones polynomial use a full 2^n state sum, the
//! Alexander polynomial comes from Fox calculus on the Wirtinger presentation,
//! determinant and signature from the Goeritz matrix with the
//! Gordon–Litherland correction, and the two-variable disambiguator from a
//! memoized skein recursion.

mod alexander;
mod bracket;
mod goeritz;
mod homfly;

pub use alexander::alexander;
pub use bracket::{jones, kauffman_bracket};
pub use goeritz::{determinant_goeritz, signature};
pub use homfly::{disambiguator, TwoVariablePolynomial};

use thiserror::Error;

use crate::diagram::PlanarDiagram;
use crate::laurent::LaurentPolynomial;

/// State sums and the skein recursion are exponential in crossings; corpus
/// diagrams stay at or below 13.
pub const STATE_SUM_LIMIT: usize = 16;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("diagram with {0} crossings exceeds the {1}-crossing state-sum limit")]
    TooLarge(usize, usize),
    #[error("Jones exponents not divisible by 4; input is not a single knot")]
    NonIntegerExponent,
}

/// Knot determinant |Δ(−1)|.
pub fn determinant(d: &PlanarDiagram) -> u64 {
    alexander(d).eval(-1).unsigned_abs()
}

/// The three alternative determinant computations: |Δ(−1)|, |V(−1)|,
/// |det(Goeritz)|. Agreement is a strong internal consistency check.
pub fn determinant_three_ways(d: &PlanarDiagram) -> Result<(u64, u64, u64), InvariantError> {
    let from_alexander = determinant(d);
    let from_jones = jones(d)?.eval(-1).unsigned_abs();
    let from_goeritz = determinant_goeritz(d);
    Ok((from_alexander, from_jones, from_goeritz))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::test_diagrams::*;

    #[test]
    fn determinants_agree_three_ways() {
        for d in [
            trefoil_neg(),
            trefoil_pos(),
            positive_kink(),
            clasp_unknot(),
        ] {
            let (a, b, c) = determinant_three_ways(&d).unwrap();
            assert_eq!(a, b, "{d:?}");
            assert_eq!(a, c, "{d:?}");
        }
        assert_eq!(determinant(&trefoil_neg()), 3);
        assert_eq!(determinant(&PlanarDiagram::unknot()), 1);
    }
}
