//! Kauffman bracket by full state sum, and the Jones polynomial.

use super::{InvariantError, STATE_SUM_LIMIT};
use crate::diagram::PlanarDiagram;
use crate::laurent::LaurentPolynomial;

/// Kauffman bracket in the variable A, normalized to ⟨unknot⟩ = 1.
///
/// Each crossing is resolved two ways; for a crossing with ccw slots
/// (0,1,2,3) and the under-strand on slots 0/2, the A-smoothing joins slots
/// 0–1 and 2–3, the B-smoothing slots 0–3 and 1–2. A state with `a`
/// A-smoothings, `b` B-smoothings and `c` loops contributes
/// `A^(a−b) · δ^(c−1)` with δ = −A² − A⁻².
pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    let n = d.crossing_count();
    if n > STATE_SUM_LIMIT {
        return Err(InvariantError::TooLarge(n, STATE_SUM_LIMIT));
    }
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }

    // Ports: (crossing, slot) flattened to 4n entries. Edges pair ports
    // across crossings; smoothings pair ports within a crossing.
    let mut edge_mate = vec![usize::MAX; 4 * n];
    {
        let mut seen: std::collections::HashMap<usize, usize> = Default::default();
        for (ci, cr) in d.crossings().iter().enumerate() {
            for (si, &e) in cr.slots.iter().enumerate() {
                let port = 4 * ci + si;
                if let Some(&other) = seen.get(&e) {
                    edge_mate[port] = other;
                    edge_mate[other] = port;
                } else {
                    seen.insert(e, port);
                }
            }
        }
    }

    let delta = LaurentPolynomial::from_terms([(2, -1), (-2, -1)]);
    // δ^k table up to n loops.
    let mut delta_pow = vec![LaurentPolynomial::one()];
    for k in 1..=n {
        delta_pow.push(&delta_pow[k - 1] * &delta);
    }

    let mut bracket = LaurentPolynomial::zero();
    let mut mate = vec![0usize; 4 * n];
    for state in 0u32..(1 << n) {
        // Smoothing mates per crossing.
        for ci in 0..n {
            let base = 4 * ci;
            if state >> ci & 1 == 0 {
                // A: 0-1, 2-3
                mate[base] = base + 1;
                mate[base + 1] = base;
                mate[base + 2] = base + 3;
                mate[base + 3] = base + 2;
            } else {
                // B: 0-3, 1-2
                mate[base] = base + 3;
                mate[base + 3] = base;
                mate[base + 1] = base + 2;
                mate[base + 2] = base + 1;
            }
        }
        // Loops: cycles alternating edge_mate and smoothing mate.
        let mut visited = vec![false; 4 * n];
        let mut loops = 0usize;
        for start in 0..4 * n {
            if visited[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            loop {
                visited[p] = true;
                let q = mate[p];
                visited[q] = true;
                p = edge_mate[q];
                if p == start {
                    break;
                }
            }
        }
        let b_count = state.count_ones() as i64;
        let a_count = n as i64 - b_count;
        let weight = LaurentPolynomial::monomial(a_count - b_count, 1);
        bracket += &(&weight * &delta_pow[loops - 1]);
    }
    Ok(bracket)
}

/// Jones polynomial V(t) = (−A)^(−3w) · ⟨D⟩ with t = A⁻⁴.
pub fn jones(d: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    let bracket = kauffman_bracket(d)?;
    let w = d.writhe();
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let normalized = &bracket * &LaurentPolynomial::monomial(-3 * w, sign);
    normalized
        .compress_exponents(-4)
        .ok_or(InvariantError::NonIntegerExponent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::test_diagrams::*;

    #[test]
    fn bracket_base_cases() {
        assert!(kauffman_bracket(&PlanarDiagram::unknot()).unwrap().is_one());
        // One positive kink: two states, Aδ + A⁻¹ = −A³.
        assert_eq!(
            kauffman_bracket(&positive_kink()).unwrap(),
            LaurentPolynomial::monomial(3, -1)
        );
        assert_eq!(
            kauffman_bracket(&negative_kink()).unwrap(),
            LaurentPolynomial::monomial(-3, -1)
        );
    }

    #[test]
    fn jones_of_kinked_unknots_is_one() {
        assert!(jones(&positive_kink()).unwrap().is_one());
        assert!(jones(&negative_kink()).unwrap().is_one());
        assert!(jones(&clasp_unknot()).unwrap().is_one());
    }

    #[test]
    fn jones_of_trefoils() {
        // Writhe +3 trefoil: −t⁴ + t³ + t.
        let pos = jones(&trefoil_pos()).unwrap();
        assert_eq!(
            pos,
            LaurentPolynomial::from_terms([(4, -1), (3, 1), (1, 1)])
        );
        // Mirror law: V_mirror(t) = V(1/t).
        let neg = jones(&trefoil_neg()).unwrap();
        assert_eq!(neg, pos.inverted());
    }

    #[test]
    fn bracket_is_r2_invariant_on_the_clasp() {
        // The clasp unknot reduces by R2; its bracket equals the unknot's.
        assert!(kauffman_bracket(&clasp_unknot()).unwrap().is_one());
    }
}
