//! Alexander polynomial via Fox calculus on the Wirtinger presentation.

use crate::diagram::PlanarDiagram;
use crate::laurent::LaurentPolynomial;

/// Alexander polynomial, normalized so that Δ(t) = Δ(1/t) and Δ(1) = 1.
pub fn alexander(d: &PlanarDiagram) -> LaurentPolynomial {
    let n = d.crossing_count();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let arcs = arc_of_edge(d);
    // Wirtinger relation at each crossing, Fox-differentiated and
    // abelianized. For a positive crossing (x_out = x_o x_in x_o⁻¹):
    //   ∂/∂x_in = t, ∂/∂x_o = 1 − t, ∂/∂x_out = −1,
    // and for a negative crossing the row (t, 1 − t, −1) is replaced by
    // (1, t − 1, −t) after clearing a unit.
    let t = LaurentPolynomial::monomial(1, 1);
    let one = LaurentPolynomial::one();
    let mut matrix = vec![vec![LaurentPolynomial::zero(); n]; n];
    for (row, cr) in d.crossings().iter().enumerate() {
        let under_in_arc = arcs[cr.slots[0]];
        let under_out_arc = arcs[cr.slots[2]];
        let over_arc = arcs[cr.slots[1]];
        debug_assert_eq!(over_arc, arcs[cr.slots[3]]);
        let (c_in, c_over, c_out) = if cr.sign() > 0 {
            (t.clone(), &one - &t, LaurentPolynomial::monomial(0, -1))
        } else {
            (one.clone(), &t - &one, LaurentPolynomial::monomial(1, -1))
        };
        matrix[row][under_in_arc] += &c_in;
        matrix[row][over_arc] += &c_over;
        matrix[row][under_out_arc] += &c_out;
    }
    // Any maximal minor: drop the last column.
    let det = poly_det(&matrix, n - 1);
    normalize(det)
}

/// Arc index for each edge label (1-based edges; arcs are maximal edge runs
/// between under-passages, one arc per crossing).
fn arc_of_edge(d: &PlanarDiagram) -> Vec<usize> {
    let n2 = d.edge_count();
    // passage j sits between edge j (incoming) and edge j·next (outgoing);
    // arcs break exactly at under passages.
    let types = d.passage_types();
    let mut arc = vec![usize::MAX; n2 + 1];
    let mut id = 0usize;
    for j in 1..=n2 {
        if types[j - 1].1 {
            continue; // over passage: no arc starts here
        }
        // Passage j is under: edge j+1 starts an arc.
        let mut e = j % n2 + 1;
        loop {
            arc[e] = id;
            if !types[e - 1].1 {
                break; // passage e is under: the arc ends with edge e
            }
            e = e % n2 + 1;
        }
        id += 1;
    }
    arc
}

/// Determinant of the leading k×k (by columns) polynomial matrix via
/// memoized cofactor expansion along rows.
fn poly_det(m: &[Vec<LaurentPolynomial>], k: usize) -> LaurentPolynomial {
    if k == 0 {
        return LaurentPolynomial::one();
    }
    let mut memo: std::collections::HashMap<u32, LaurentPolynomial> = Default::default();
    let full: u32 = (1 << k) - 1;
    det_rec(m, k, full, 0, &mut memo)
}

fn det_rec(
    m: &[Vec<LaurentPolynomial>],
    k: usize,
    cols: u32,
    row: usize,
    memo: &mut std::collections::HashMap<u32, LaurentPolynomial>,
) -> LaurentPolynomial {
    if cols == 0 {
        return LaurentPolynomial::one();
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = LaurentPolynomial::zero();
    let mut sign = 1i64;
    for j in 0..k {
        if cols >> j & 1 == 0 {
            continue;
        }
        let entry = &m[row][j];
        if !entry.is_zero() {
            let sub = det_rec(m, k, cols & !(1 << j), row + 1, memo);
            acc += &(&entry.scaled(sign) * &sub);
        }
        sign = -sign;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Strip units so Δ(1) = 1 and Δ is centered (palindromic in t ↔ 1/t).
fn normalize(det: LaurentPolynomial) -> LaurentPolynomial {
    assert!(!det.is_zero(), "Alexander determinant vanished");
    let lo = det.min_exp().unwrap();
    let hi = det.max_exp().unwrap();
    debug_assert_eq!((hi - lo) % 2, 0, "Alexander span must be even");
    let centered = det.shifted(-(lo + hi) / 2);
    let at_one = centered.eval(1);
    debug_assert!(at_one == 1 || at_one == -1, "Δ(1) = ±1 for knots");
    let out = if at_one < 0 { centered.scaled(-1) } else { centered };
    debug_assert!(out.is_palindromic(), "Δ(t) = Δ(1/t) after centering");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::test_diagrams::*;

    #[test]
    fn unknots_have_trivial_alexander() {
        assert!(alexander(&PlanarDiagram::unknot()).is_one());
        assert!(alexander(&positive_kink()).is_one());
        assert!(alexander(&clasp_unknot()).is_one());
    }

    #[test]
    fn trefoil_alexander() {
        let expected = LaurentPolynomial::from_terms([(-1, 1), (0, -1), (1, 1)]);
        assert_eq!(alexander(&trefoil_neg()), expected);
        // Mirror invariance.
        assert_eq!(alexander(&trefoil_pos()), expected);
    }

    #[test]
    fn alexander_at_one_is_one() {
        for d in [trefoil_neg(), trefoil_pos(), clasp_unknot()] {
            assert_eq!(alexander(&d).eval(1), 1);
        }
    }
}
