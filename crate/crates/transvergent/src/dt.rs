//! Gauss and Dowker–Thistlethwaite codes: deterministic transcoding from
//! diagrams and diagram reconstruction from DT codes.

use thiserror::Error;

use crate::diagram::{DiagramError, PlanarDiagram, RawDiagram};

/// Signed crossing visits along the knot: `+c` over, `−c` under; crossings
/// numbered 1.. in order of first visit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussCode(pub Vec<i64>);

/// Dowker–Thistlethwaite code: the even passage numbers paired with odd
/// passages 1, 3, 5, …; an entry is positive when its even passage goes over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DTCode(pub Vec<i64>);

#[derive(Debug, Error)]
pub enum DtError {
    #[error("DT entries must be a permutation of ±{{2,4,…,2n}}; {0:?} is not")]
    BadEntries(Vec<i64>),
    #[error("DT code is not realizable as a planar knot diagram")]
    NotRealizable,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

impl DTCode {
    pub fn parse(text: &str) -> Result<Self, DtError> {
        let entries: Result<Vec<i64>, _> = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>())
            .collect();
        let entries = entries.map_err(|_| DtError::BadEntries(Vec::new()))?;
        let code = DTCode(entries);
        code.check()?;
        Ok(code)
    }

    pub fn check(&self) -> Result<(), DtError> {
        let n = self.0.len();
        let mut seen = vec![false; n + 1];
        for &e in &self.0 {
            let a = e.unsigned_abs() as usize;
            if a == 0 || a % 2 != 0 || a > 2 * n || seen[a / 2] {
                return Err(DtError::BadEntries(self.0.clone()));
            }
            seen[a / 2] = true;
        }
        Ok(())
    }

    pub fn to_string_plain(&self) -> String {
        self.0
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Gauss and DT codes of a diagram under the deterministic traversal
/// starting at edge 1.
pub fn transcode(d: &PlanarDiagram) -> (GaussCode, DTCode) {
    let types = d.passage_types();
    let n = d.crossing_count();
    if n == 0 {
        return (GaussCode(Vec::new()), DTCode(Vec::new()));
    }
    // Crossing ids by first visit.
    let mut id = vec![usize::MAX; n];
    let mut next_id = 0usize;
    let mut gauss = Vec::with_capacity(2 * n);
    for &(ci, over) in &types {
        if id[ci] == usize::MAX {
            id[ci] = next_id;
            next_id += 1;
        }
        let signed = (id[ci] + 1) as i64;
        gauss.push(if over { signed } else { -signed });
    }
    // Passage pairs per crossing.
    let mut passages_at = vec![Vec::with_capacity(2); n];
    for (k, &(ci, over)) in types.iter().enumerate() {
        passages_at[ci].push((k + 1, over));
    }
    let mut dt = vec![0i64; n];
    for pair in &passages_at {
        let [(p, _), (q, q_over)] = pair[..] else {
            unreachable!("each crossing is passed exactly twice");
        };
        let (odd, (even, even_over)) = if p % 2 == 1 {
            (p, (q, q_over))
        } else {
            (q, (p, pair[0].1))
        };
        debug_assert_eq!(even % 2, 0, "odd-even pairing at every crossing");
        dt[(odd - 1) / 2] = if even_over { even as i64 } else { -(even as i64) };
    }
    (GaussCode(gauss), DTCode(dt))
}

/// Reconstruct a planar diagram from a DT code by searching crossing
/// rotations for a planar embedding. For prime codes the embedding is unique
/// up to reflection, so the resulting knot is well-defined up to mirror.
pub fn diagram_from_dt(code: &DTCode) -> Result<PlanarDiagram, DtError> {
    code.check()?;
    let n = code.0.len();
    if n == 0 {
        return Ok(PlanarDiagram::unknot());
    }
    if n > 20 {
        return Err(DtError::NotRealizable);
    }
    let n2 = 2 * n;
    // partner[p] = q for the two passages at each crossing; under[p] flags.
    let mut partner = vec![0usize; n2 + 1];
    let mut under = vec![false; n2 + 1];
    for (i, &e) in code.0.iter().enumerate() {
        let odd = 2 * i + 1;
        let even = e.unsigned_abs() as usize;
        partner[odd] = even;
        partner[even] = odd;
        // Positive entry: the even passage goes over, the odd one under.
        under[odd] = e > 0;
        under[even] = e <= 0;
    }
    // Passage p consumes edge p and emits edge p % 2n + 1.
    let out_edge = |p: usize| p % n2 + 1;
    for bits in 0u32..(1 << n) {
        let mut raw = RawDiagram::new();
        for i in 0..n {
            let odd = 2 * i + 1;
            let (u, o) = if under[odd] {
                (odd, partner[odd])
            } else {
                (partner[odd], odd)
            };
            // Under strand at slots 0/2; the over in-edge sits at slot 1 or 3.
            let slots = if bits >> i & 1 == 0 {
                [u, o, out_edge(u), out_edge(o)]
            } else {
                [u, out_edge(o), out_edge(u), o]
            };
            raw.push(slots);
        }
        if let Ok(d) = PlanarDiagram::from_raw(&raw) {
            return Ok(d);
        }
    }
    Err(DtError::NotRealizable)
}

/// DT comparison up to cyclic relabeling and reflection (and mirror image):
/// both codes are reconstructed and compared as diagrams.
pub fn dt_equivalent(a: &DTCode, b: &DTCode) -> Result<bool, DtError> {
    let da = diagram_from_dt(a)?;
    let db = diagram_from_dt(b)?;
    let key_b = db.canonical_key();
    Ok(da.canonical_key() == key_b || da.mirror().canonical_key() == key_b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::test_diagrams::*;
    use crate::invariants;

    #[test]
    fn trefoil_transcodes_to_standard_dt() {
        let (gauss, dt) = transcode(&trefoil_neg());
        assert_eq!(dt.0, vec![4, 6, 2]);
        assert_eq!(gauss.0.len(), 6);
        // Each crossing appears once over, once under.
        for c in 1..=3i64 {
            assert!(gauss.0.contains(&c) && gauss.0.contains(&-c));
        }
    }

    #[test]
    fn unknot_transcodes_to_empty() {
        let (gauss, dt) = transcode(&PlanarDiagram::unknot());
        assert!(gauss.0.is_empty());
        assert!(dt.0.is_empty());
        assert_eq!(
            diagram_from_dt(&DTCode(Vec::new())).unwrap().crossing_count(),
            0
        );
    }

    #[test]
    fn dt_round_trip_on_trefoil() {
        let dt = DTCode(vec![4, 6, 2]);
        let d = diagram_from_dt(&dt).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert!(d.is_alternating());
        assert_eq!(invariants::determinant(&d), 3);
        let (_, dt2) = transcode(&d);
        assert!(dt_equivalent(&dt, &dt2).unwrap());
    }

    #[test]
    fn figure_eight_from_dt() {
        let dt = DTCode(vec![4, 6, 8, 2]);
        let d = diagram_from_dt(&dt).unwrap();
        assert_eq!(d.crossing_count(), 4);
        assert!(d.is_alternating());
        assert_eq!(invariants::determinant(&d), 5);
        assert_eq!(invariants::signature(&d), 0);
        // 4_1 is amphicheiral: Jones is palindromic.
        assert!(invariants::jones(&d).unwrap().is_palindromic());
        // Alexander of the figure-eight is −t + 3 − 1/t.
        assert_eq!(
            invariants::alexander(&d),
            crate::laurent::LaurentPolynomial::from_terms([(1, -1), (0, 3), (-1, -1)])
        );
    }

    #[test]
    fn bad_dt_entries_rejected() {
        assert!(DTCode(vec![4, 6, 3]).check().is_err());
        assert!(DTCode(vec![4, 6, 4]).check().is_err());
        assert!(DTCode(vec![4, 6, 8]).check().is_err());
        // Entries valid but the pairing cannot close up in the plane.
        let bad = DTCode(vec![8, 6, 2, 10, 4]);
        assert!(bad.check().is_ok());
        assert!(matches!(diagram_from_dt(&bad), Err(DtError::NotRealizable)));
        // Successive kinks are a legitimate (reducible) unknot diagram.
        let kinks = diagram_from_dt(&DTCode(vec![2, 4, 6])).unwrap();
        assert_eq!(kinks.simplify().crossing_count(), 0);
    }
}
