//! Goeritz matrix of a checkerboard coloring; knot determinant and the
//! signature via the Gordon–Litherland correction term.

use std::collections::HashMap;

use crate::diagram::PlanarDiagram;

/// Checkerboard data: face color classes and, per crossing, which color the
/// quadrant pair {NE, SW} carries (in crossing-local coordinates with the
/// incoming under-strand at South).
struct Checkerboard {
    /// Color (0/1) per face index.
    face_color: Vec<u8>,
    /// Face index per dart (crossing, slot).
    face_of_dart: HashMap<(usize, usize), usize>,
    faces: usize,
}

fn checkerboard(d: &PlanarDiagram) -> Checkerboard {
    let faces = d.faces();
    let mut face_of_dart = HashMap::new();
    for (fi, face) in faces.iter().enumerate() {
        for &dart in face {
            face_of_dart.insert(dart, fi);
        }
    }
    // Two faces are adjacent when they contain the two darts of one edge; a
    // 4-valent diagram is always 2-face-colorable.
    let mut edge_darts: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (ci, cr) in d.crossings().iter().enumerate() {
        for (si, &e) in cr.slots.iter().enumerate() {
            edge_darts.entry(e).or_default().push((ci, si));
        }
    }
    let mut face_color = vec![u8::MAX; faces.len()];
    let mut queue = std::collections::VecDeque::new();
    face_color[0] = 0;
    queue.push_back(0);
    while let Some(f) = queue.pop_front() {
        for darts in edge_darts.values() {
            let (f1, f2) = (face_of_dart[&darts[0]], face_of_dart[&darts[1]]);
            for (a, b) in [(f1, f2), (f2, f1)] {
                if a == f && face_color[b] == u8::MAX {
                    face_color[b] = 1 - face_color[f];
                    queue.push_back(b);
                }
            }
        }
    }
    assert!(
        face_color.iter().all(|&c| c != u8::MAX),
        "checkerboard coloring must reach every face"
    );
    Checkerboard {
        face_color,
        face_of_dart,
        faces: faces.len(),
    }
}

/// Quadrant between slots `i` and `i+1` of a crossing is the face containing
/// dart `(c, i+1)` (the face turned into when arriving at slot `i`).
fn quadrant_face(cb: &Checkerboard, c: usize, i: usize) -> usize {
    cb.face_of_dart[&(c, (i + 1) % 4)]
}

struct GoeritzData {
    /// Full (unreduced) Goeritz matrix over the white regions.
    matrix: Vec<Vec<i64>>,
    /// Gordon–Litherland correction term.
    correction: i64,
}

fn goeritz_data(d: &PlanarDiagram) -> GoeritzData {
    let cb = checkerboard(d);
    // White = color 0 (either class works; the correction term is computed
    // for the same class).
    let white_faces: Vec<usize> = (0..cb.faces).filter(|&f| cb.face_color[f] == 0).collect();
    let white_index: HashMap<usize, usize> =
        white_faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let m = white_faces.len();
    let mut matrix = vec![vec![0i64; m]; m];
    let mut correction = 0i64;
    for (ci, cr) in d.crossings().iter().enumerate() {
        // Quadrants in local ccw order: Q0 = SE (slots 0-1), Q1 = NE,
        // Q2 = NW, Q3 = SW. Q1/Q3 vs Q0/Q2 are the two color pairs.
        let q: Vec<usize> = (0..4).map(|i| quadrant_face(&cb, ci, i)).collect();
        debug_assert_eq!(cb.face_color[q[0]], cb.face_color[q[2]]);
        debug_assert_eq!(cb.face_color[q[1]], cb.face_color[q[3]]);
        let white_is_ne_sw = cb.face_color[q[1]] == 0;
        // Goeritz sign: η = +1 when the white quadrants are SE/NW, −1 when
        // NE/SW (the pair swept by rotating the over-strand onto the
        // under-strand counterclockwise).
        let eta: i64 = if white_is_ne_sw { -1 } else { 1 };
        let (wa, wb) = if white_is_ne_sw {
            (q[1], q[3])
        } else {
            (q[0], q[2])
        };
        let (ia, ib) = (white_index[&wa], white_index[&wb]);
        if ia != ib {
            matrix[ia][ib] -= eta;
            matrix[ib][ia] -= eta;
            matrix[ia][ia] += eta;
            matrix[ib][ib] += eta;
        }
        // Crossing type for the correction: with the under-strand entering at
        // South, the over-strand enters at East (over_in = 1) or West
        // (over_in = 3). The crossing is type II exactly when the over-strand
        // runs between the two white quadrants; η of type II crossings sums
        // to the correction. Calibrated so the writhe-positive trefoil has
        // signature −2.
        let over_in_west = cr.sign() > 0;
        let type_ii = over_in_west != white_is_ne_sw;
        if type_ii {
            correction += eta;
        }
    }
    GoeritzData { matrix, correction }
}

/// |det(Goeritz)| of the reduced matrix (one white region removed).
pub fn determinant_goeritz(d: &PlanarDiagram) -> u64 {
    if d.crossing_count() == 0 {
        return 1;
    }
    let data = goeritz_data(d);
    let m = data.matrix.len();
    if m <= 1 {
        // All-one-white-region diagram: every crossing was nugatory for this
        // coloring; the reduced matrix is empty with determinant 1.
        return 1;
    }
    let reduced: Vec<Vec<i128>> = (1..m)
        .map(|i| (1..m).map(|j| data.matrix[i][j] as i128).collect())
        .collect();
    int_det(reduced).unsigned_abs() as u64
}

/// Knot signature via sig(Goeritz) − correction; the writhe-positive trefoil
/// gets −2.
pub fn signature(d: &PlanarDiagram) -> i64 {
    if d.crossing_count() == 0 {
        return 0;
    }
    let data = goeritz_data(d);
    let m = data.matrix.len();
    let reduced: Vec<Vec<i64>> = (1..m)
        .map(|i| (1..m).map(|j| data.matrix[i][j]).collect())
        .collect();
    symmetric_signature(reduced) - data.correction
}

/// Fraction-free Gaussian elimination (Bareiss) determinant.
fn int_det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Signature of a symmetric integer matrix by exact congruence
/// diagonalization over the rationals.
fn symmetric_signature(a: Vec<Vec<i64>>) -> i64 {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .map(|row| row.iter().map(|&x| Rat::from(x)).collect())
        .collect();
    let mut sig = 0i64;
    let mut active: Vec<usize> = (0..n).collect();
    while let Some(&_first) = active.first() {
        // Prefer a nonzero diagonal pivot.
        if let Some(pos) = active.iter().position(|&i| !m[i][i].is_zero()) {
            let p = active[pos];
            let pivot = m[p][p];
            sig += pivot.signum();
            active.remove(pos);
            for &i in &active {
                let factor = m[i][p].div(pivot);
                for &j in &active {
                    let sub = factor.mul(m[p][j]);
                    m[i][j] = m[i][j].sub(sub);
                }
            }
            continue;
        }
        // Zero diagonal: find a nonzero off-diagonal entry m[i][j] and apply
        // the congruence "add row j and column j onto i", which makes
        // m[i][i] = 2·m[i][j] ≠ 0 while preserving the signature.
        let mut found = None;
        'outer: for &i in &active {
            for &j in &active {
                if i != j && !m[i][j].is_zero() {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = found else {
            break; // remaining block is zero
        };
        for &c in &active {
            let v = m[i][c].add(m[j][c]);
            m[i][c] = v;
        }
        for &r in &active {
            let v = m[r][i].add(m[r][j]);
            m[r][i] = v;
        }
    }
    sig
}

/// Minimal exact rational arithmetic for the signature computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Rat {
    num: i128,
    den: i128, // > 0
}

impl From<i64> for Rat {
    fn from(x: i64) -> Self {
        Rat {
            num: x as i128,
            den: 1,
        }
    }
}

impl Rat {
    fn normalize(num: i128, den: i128) -> Self {
        assert!(den != 0);
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let s = if den < 0 { -1 } else { 1 };
        Rat {
            num: s * num / g,
            den: s * den / g,
        }
    }
    fn is_zero(self) -> bool {
        self.num == 0
    }
    fn signum(self) -> i64 {
        self.num.signum() as i64
    }
    fn add(self, o: Rat) -> Rat {
        Rat::normalize(self.num * o.den + o.num * self.den, self.den * o.den)
    }
    fn sub(self, o: Rat) -> Rat {
        Rat::normalize(self.num * o.den - o.num * self.den, self.den * o.den)
    }
    fn mul(self, o: Rat) -> Rat {
        Rat::normalize(self.num * o.num, self.den * o.den)
    }
    fn div(self, o: Rat) -> Rat {
        assert!(!o.is_zero());
        Rat::normalize(self.num * o.den, self.den * o.num)
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b.max(1);
    }
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::test_diagrams::*;

    #[test]
    fn goeritz_determinants() {
        assert_eq!(determinant_goeritz(&trefoil_neg()), 3);
        assert_eq!(determinant_goeritz(&trefoil_pos()), 3);
        assert_eq!(determinant_goeritz(&positive_kink()), 1);
        assert_eq!(determinant_goeritz(&clasp_unknot()), 1);
    }

    #[test]
    fn trefoil_signatures() {
        assert_eq!(signature(&trefoil_pos()), -2);
        assert_eq!(signature(&trefoil_neg()), 2);
    }

    #[test]
    fn unknot_diagrams_have_zero_signature() {
        assert_eq!(signature(&PlanarDiagram::unknot()), 0);
        assert_eq!(signature(&positive_kink()), 0);
        assert_eq!(signature(&negative_kink()), 0);
        assert_eq!(signature(&clasp_unknot()), 0);
    }

    #[test]
    fn bareiss_determinant() {
        let m = vec![vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]];
        let m: Vec<Vec<i128>> = m
            .into_iter()
            .map(|r| r.into_iter().map(|x| x as i128).collect())
            .collect();
        assert_eq!(int_det(m), 4);
    }

    #[test]
    fn signature_of_definite_matrices() {
        assert_eq!(symmetric_signature(vec![vec![2, 1], vec![1, 2]]), 2);
        assert_eq!(symmetric_signature(vec![vec![-2, 1], vec![1, -2]]), -2);
        assert_eq!(symmetric_signature(vec![vec![0, 3], vec![3, 0]]), 0);
        assert_eq!(symmetric_signature(vec![vec![0; 2]; 2]), 0);
    }
}
