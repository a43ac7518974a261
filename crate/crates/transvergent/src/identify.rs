//! Identification of knot diagrams against a reference table of the prime
//! knots with at most 10 crossings.
//!
//! The fingerprint core is (mirror-canonical Jones, Alexander, determinant,
//! |signature|). Injectivity over the table is verified at load; any
//! colliding bucket is split by the two-variable skein polynomial. A
//! diagram matches up to mirror image by default.

use std::collections::HashMap;
use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use crate::diagram::PlanarDiagram;
use crate::dt::{diagram_from_dt, transcode, DTCode, DtError};
use crate::invariants::{self, InvariantError, TwoVariablePolynomial};
use crate::laurent::LaurentPolynomial;

/// Chirality reading of a fingerprint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChiralityTag {
    /// V(t) is the lexicographically smaller of V(t), V(1/t).
    Plain,
    /// V(1/t) is smaller; the canonical form is the mirror's.
    Mirrored,
    /// V is palindromic and the signature vanishes.
    Neutral,
}

/// Invariant tuple used for identification; everything except `chirality`
/// is unchanged by taking mirror images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub jones_canonical: LaurentPolynomial,
    pub alexander: LaurentPolynomial,
    pub determinant: u64,
    pub abs_signature: u64,
    pub chirality: ChiralityTag,
}

impl Fingerprint {
    /// The mirror-insensitive part, used as the table index key.
    pub fn core(&self) -> FingerprintCore {
        FingerprintCore {
            jones_canonical: self.jones_canonical.clone(),
            alexander: self.alexander.clone(),
            determinant: self.determinant,
            abs_signature: self.abs_signature,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FingerprintCore {
    pub jones_canonical: LaurentPolynomial,
    pub alexander: LaurentPolynomial,
    pub determinant: u64,
    pub abs_signature: u64,
}

/// Compute the fingerprint of a valid diagram.
pub fn fingerprint(d: &PlanarDiagram) -> Result<Fingerprint, InvariantError> {
    let jones = invariants::jones(d)?;
    let inverted = jones.inverted();
    let signature = invariants::signature(d);
    let (jones_canonical, chirality) = if jones == inverted {
        let tag = if signature == 0 {
            ChiralityTag::Neutral
        } else if signature < 0 {
            ChiralityTag::Plain
        } else {
            ChiralityTag::Mirrored
        };
        (jones.clone(), tag)
    } else if jones <= inverted {
        (jones, ChiralityTag::Plain)
    } else {
        (inverted, ChiralityTag::Mirrored)
    };
    let alexander = invariants::alexander(d);
    let determinant = alexander.eval(-1).unsigned_abs();
    Ok(Fingerprint {
        jones_canonical,
        alexander,
        determinant,
        abs_signature: signature.unsigned_abs(),
        chirality,
    })
}

/// One table entry.
#[derive(Clone, Debug)]
pub struct KnotRecord {
    pub name: String,
    pub dt: DTCode,
    pub crossing_number: u64,
    pub alternating: bool,
    pub fingerprint: Fingerprint,
    /// Best known transvergent crossing count, when established.
    pub ct_upper: Option<u64>,
    /// Skein disambiguator, computed only for records in colliding buckets.
    pub disambiguator: Option<TwoVariablePolynomial>,
}

/// Identification result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchResult {
    Unique { name: String, mirror: MirrorFlag },
    Ambiguous(Vec<String>),
    Unidentified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MirrorFlag {
    /// Matches the tabulated chirality.
    Same,
    /// Matches the mirror of the tabulated diagram.
    Mirrored,
    /// Amphicheiral as far as the fingerprint can tell.
    Amphicheiral,
}

impl MatchResult {
    pub fn to_json(&self, input: &str) -> String {
        match self {
            MatchResult::Unique { name, mirror } => {
                let m = match mirror {
                    MirrorFlag::Same => "no",
                    MirrorFlag::Mirrored => "yes",
                    MirrorFlag::Amphicheiral => "amphi",
                };
                format!(r#"{{"input":"{input}","match":"{name}","mirror":"{m}"}}"#)
            }
            MatchResult::Ambiguous(names) => {
                let list = names
                    .iter()
                    .map(|n| format!(r#""{n}""#))
                    .collect::<Vec<_>>()
                    .join(",");
                format!(r#"{{"input":"{input}","match":null,"candidates":[{list}]}}"#)
            }
            MatchResult::Unidentified => {
                format!(r#"{{"input":"{input}","match":null}}"#)
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("table parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("duplicate knot name {0}")]
    DuplicateName(String),
    #[error("record {name}: DT code failed to reconstruct: {source}")]
    BadRecord {
        name: String,
        #[source]
        source: DtError,
    },
    #[error("record {name}: {msg}")]
    Inconsistent { name: String, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// Report of the injectivity analysis run at load time.
#[derive(Clone, Debug, Default)]
pub struct InjectivityReport {
    /// Buckets of names sharing a fingerprint core, before refinement.
    pub core_collisions: Vec<Vec<String>>,
    /// Buckets that remain indistinguishable after the disambiguator.
    pub unresolved: Vec<Vec<String>>,
}

/// The ingested reference table.
pub struct ReferenceTable {
    records: Vec<KnotRecord>,
    by_name: HashMap<String, usize>,
    by_core: HashMap<FingerprintCore, Vec<usize>>,
    report: InjectivityReport,
}

impl ReferenceTable {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.by_name.get(name).map(|&i| &self.records[i])
    }

    pub fn injectivity_report(&self) -> &InjectivityReport {
        &self.report
    }

    /// Load from the CSV format `name,dt_code,crossing_number,alternating`
    /// (DT entries space-separated inside the field).
    pub fn load(path: &Path) -> Result<ReferenceTable, TableError> {
        let text = std::fs::read_to_string(path)?;
        Self::from_csv(&text)
    }

    pub fn from_csv(text: &str) -> Result<ReferenceTable, TableError> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with("name,") {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(|f| f.trim()).collect();
            if fields.len() != 4 {
                return Err(TableError::Parse {
                    line: lineno + 1,
                    msg: format!("expected 4 fields, found {}", fields.len()),
                });
            }
            let name = fields[0].to_string();
            let dt = DTCode::parse(fields[1]).map_err(|e| TableError::Parse {
                line: lineno + 1,
                msg: format!("bad DT code: {e}"),
            })?;
            let crossing_number: u64 = fields[2].parse().map_err(|_| TableError::Parse {
                line: lineno + 1,
                msg: "bad crossing number".into(),
            })?;
            let alternating = match fields[3] {
                "a" | "alt" | "true" | "1" => true,
                "n" | "nonalt" | "false" | "0" => false,
                other => {
                    return Err(TableError::Parse {
                        line: lineno + 1,
                        msg: format!("bad alternating flag `{other}`"),
                    })
                }
            };
            rows.push((lineno + 1, name, dt, crossing_number, alternating));
        }
        // Reconstruct and fingerprint in parallel.
        let built: Result<Vec<KnotRecord>, TableError> = rows
            .par_iter()
            .map(|(_, name, dt, crossing_number, alternating)| {
                let diagram = diagram_from_dt(dt).map_err(|e| TableError::BadRecord {
                    name: name.clone(),
                    source: e,
                })?;
                check_record_consistency(name, &diagram, *crossing_number, *alternating)?;
                let fingerprint = fingerprint(&diagram)?;
                Ok(KnotRecord {
                    name: name.clone(),
                    dt: dt.clone(),
                    crossing_number: *crossing_number,
                    alternating: *alternating,
                    fingerprint,
                    ct_upper: None,
                    disambiguator: None,
                })
            })
            .collect();
        let mut records = built?;
        let mut by_name = HashMap::new();
        for (i, r) in records.iter().enumerate() {
            if by_name.insert(r.name.clone(), i).is_some() {
                return Err(TableError::DuplicateName(r.name.clone()));
            }
        }
        // Index by core; compute disambiguators for colliding buckets.
        let mut by_core: HashMap<FingerprintCore, Vec<usize>> = HashMap::new();
        for (i, r) in records.iter().enumerate() {
            by_core.entry(r.fingerprint.core()).or_default().push(i);
        }
        let mut report = InjectivityReport::default();
        let collision_indices: Vec<usize> = by_core
            .values()
            .filter(|v| v.len() > 1)
            .flatten()
            .copied()
            .collect();
        let disambiguators: HashMap<usize, TwoVariablePolynomial> = collision_indices
            .par_iter()
            .map(|&i| {
                let d = diagram_from_dt(&records[i].dt).expect("validated above");
                let p = invariants::disambiguator(&d)
                    .expect("within size limit")
                    .mirror_canonical();
                (i, p)
            })
            .collect();
        for (&i, p) in &disambiguators {
            records[i].disambiguator = Some(p.clone());
        }
        for bucket in by_core.values() {
            if bucket.len() <= 1 {
                continue;
            }
            let names: Vec<String> = bucket.iter().map(|&i| records[i].name.clone()).collect();
            report.core_collisions.push(names.clone());
            // Does the disambiguator split the bucket completely?
            let mut seen: HashMap<&TwoVariablePolynomial, Vec<usize>> = HashMap::new();
            for &i in bucket {
                seen.entry(records[i].disambiguator.as_ref().unwrap())
                    .or_default()
                    .push(i);
            }
            for group in seen.values() {
                if group.len() > 1 {
                    report
                        .unresolved
                        .push(group.iter().map(|&i| records[i].name.clone()).collect());
                }
            }
        }
        report.core_collisions.sort();
        report.unresolved.sort();
        Ok(ReferenceTable {
            records,
            by_name,
            by_core,
            report,
        })
    }

    /// Identify a diagram up to mirror image.
    pub fn identify(&self, d: &PlanarDiagram) -> Result<MatchResult, InvariantError> {
        if d.crossing_count() == 0 || d.simplify().crossing_count() == 0 {
            return Ok(MatchResult::Unique {
                name: "0_1".into(),
                mirror: MirrorFlag::Amphicheiral,
            });
        }
        let fp = fingerprint(d)?;
        let Some(bucket) = self.by_core.get(&fp.core()) else {
            return Ok(MatchResult::Unidentified);
        };
        let candidates: Vec<usize> = if bucket.len() == 1 {
            bucket.clone()
        } else {
            let p = invariants::disambiguator(d)?.mirror_canonical();
            let matched: Vec<usize> = bucket
                .iter()
                .copied()
                .filter(|&i| self.records[i].disambiguator.as_ref() == Some(&p))
                .collect();
            if matched.is_empty() {
                return Ok(MatchResult::Unidentified);
            }
            matched
        };
        if candidates.len() > 1 {
            return Ok(MatchResult::Ambiguous(
                candidates
                    .iter()
                    .map(|&i| self.records[i].name.clone())
                    .collect(),
            ));
        }
        let record = &self.records[candidates[0]];
        let mirror = match (fp.chirality, record.fingerprint.chirality) {
            (ChiralityTag::Neutral, _) | (_, ChiralityTag::Neutral) => MirrorFlag::Amphicheiral,
            (a, b) if a == b => MirrorFlag::Same,
            _ => MirrorFlag::Mirrored,
        };
        Ok(MatchResult::Unique {
            name: record.name.clone(),
            mirror,
        })
    }
}

/// Structural checks applied to every table row at ingest: the DT code must
/// reconstruct to a reduced diagram with the stated crossing number and
/// alternance, with odd determinant and even signature; alternating rows must
/// exhibit the full Jones span and nonalternating rows a strictly smaller one.
fn check_record_consistency(
    name: &str,
    d: &PlanarDiagram,
    crossing_number: u64,
    alternating: bool,
) -> Result<(), TableError> {
    let fail = |msg: String| {
        Err(TableError::Inconsistent {
            name: name.to_string(),
            msg,
        })
    };
    if d.crossing_count() as u64 != crossing_number {
        return fail(format!(
            "diagram has {} crossings, row says {crossing_number}",
            d.crossing_count()
        ));
    }
    if d.simplify().crossing_count() != d.crossing_count() {
        return fail("tabulated diagram should be reduced".into());
    }
    if d.is_alternating() != alternating {
        return fail(format!(
            "diagram alternance {} contradicts flag {alternating}",
            d.is_alternating()
        ));
    }
    let jones = invariants::jones(d).map_err(TableError::Invariant)?;
    let span = jones.span();
    if alternating && span != crossing_number as i64 {
        return fail(format!(
            "alternating knot must have Jones span = crossing number; span {span}"
        ));
    }
    if !alternating && span >= crossing_number as i64 {
        return fail(format!(
            "nonalternating prime knot must have Jones span < crossing number; span {span}"
        ));
    }
    let det = invariants::determinant(d);
    if det % 2 == 0 {
        return fail(format!("knot determinant must be odd, found {det}"));
    }
    if invariants::signature(d) % 2 != 0 {
        return fail("knot signature must be even".into());
    }
    Ok(())
}

/// Serialize a diagram's DT code in the reference CSV field format.
pub fn dt_field(d: &PlanarDiagram) -> String {
    transcode(d).1.to_string_plain()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::test_diagrams::*;

    #[test]
    fn fingerprint_of_unknot_diagrams() {
        let fp = fingerprint(&clasp_unknot()).unwrap();
        assert!(fp.jones_canonical.is_one());
        assert!(fp.alexander.is_one());
        assert_eq!(fp.determinant, 1);
        assert_eq!(fp.abs_signature, 0);
        assert_eq!(fp.chirality, ChiralityTag::Neutral);
    }

    #[test]
    fn trefoil_mirror_pair_share_core() {
        let a = fingerprint(&trefoil_pos()).unwrap();
        let b = fingerprint(&trefoil_neg()).unwrap();
        assert_eq!(a.core(), b.core());
        assert_ne!(a.chirality, b.chirality);
        assert_ne!(a.chirality, ChiralityTag::Neutral);
    }

    #[test]
    fn small_table_identifies_up_to_mirror() {
        let csv = "3_1,4 6 2,3,a\n4_1,4 6 8 2,4,a\n";
        let table = ReferenceTable::from_csv(csv).unwrap();
        assert_eq!(table.len(), 2);
        assert!(table.injectivity_report().unresolved.is_empty());
        let r = table.identify(&trefoil_pos()).unwrap();
        let MatchResult::Unique { name, .. } = &r else {
            panic!("expected unique match, got {r:?}");
        };
        assert_eq!(name, "3_1");
        // Mirror coherence: same name, flags differ.
        let r1 = table.identify(&trefoil_pos()).unwrap();
        let r2 = table.identify(&trefoil_neg()).unwrap();
        match (r1, r2) {
            (
                MatchResult::Unique { name: n1, mirror: m1 },
                MatchResult::Unique { name: n2, mirror: m2 },
            ) => {
                assert_eq!(n1, n2);
                assert_ne!(m1, m2);
            }
            other => panic!("expected unique matches: {other:?}"),
        }
        // The unknot is recognized structurally.
        assert_eq!(
            table.identify(&clasp_unknot()).unwrap(),
            MatchResult::Unique {
                name: "0_1".into(),
                mirror: MirrorFlag::Amphicheiral
            }
        );
    }

    #[test]
    fn missing_record_gives_unidentified() {
        let csv = "4_1,4 6 8 2,4,a\n";
        let table = ReferenceTable::from_csv(csv).unwrap();
        assert_eq!(table.identify(&trefoil_pos()).unwrap(), MatchResult::Unidentified);
    }

    #[test]
    fn inconsistent_rows_rejected() {
        // Wrong crossing count.
        assert!(ReferenceTable::from_csv("3_1,4 6 2,4,a\n").is_err());
        // Wrong alternance flag.
        assert!(ReferenceTable::from_csv("3_1,4 6 2,3,n\n").is_err());
        // Duplicate name.
        assert!(ReferenceTable::from_csv("3_1,4 6 2,3,a\n3_1,4 6 2,3,a\n").is_err());
    }
}
