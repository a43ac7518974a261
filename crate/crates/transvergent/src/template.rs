//! Half-diagram templates: the upper half of a transvergent diagram plus
//! ordered axis items (through-strands and twist slots). Filling the slots
//! with signed half-twist counts synthesizes a full symmetric diagram.

use std::fmt;

use thiserror::Error;

use crate::diagram::{DiagramError, Edge, PlanarDiagram, RawDiagram};

/// One position on the horizontal axis, read left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxisItem {
    /// A strand crossing the axis transversally.
    Through(Edge),
    /// A marked slot receiving an inserted twist region.
    Slot { index: usize, left: Edge, right: Edge },
}

/// Sign constraint on one twist entry (Table-style alternating conditions).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignConstraint {
    /// t ≤ 0 (`le0`)
    NonPositive,
    /// t ≥ 0 (`ge0`)
    NonNegative,
}

impl SignConstraint {
    pub fn satisfied_by(self, t: i64) -> bool {
        match self {
            SignConstraint::NonPositive => t <= 0,
            SignConstraint::NonNegative => t >= 0,
        }
    }
}

/// Signed half-twist counts, one per slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistVector(pub Vec<i64>);

impl TwistVector {
    pub fn parse(text: &str) -> Result<Self, TemplateError> {
        let entries: Result<Vec<i64>, _> = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>())
            .collect();
        Ok(TwistVector(entries.map_err(|_| TemplateError::BadTwistVector)?))
    }

    pub fn sum_abs(&self) -> u64 {
        self.0.iter().map(|t| t.unsigned_abs()).sum()
    }
}

impl fmt::Display for TwistVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// How the lower half is produced from the upper half.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SynthesisMode {
    /// Rotation by π about the axis: lower-half crossings switched.
    StronglyInvertible,
    /// Reflection across the axis: lower-half crossings as drawn.
    SymmetricUnion,
}

/// A half-diagram template.
#[derive(Clone, Debug, PartialEq)]
pub struct Template {
    pub name: String,
    pub family: char,
    /// Tangle crossings: ccw edge labels with the under-strand at slots 0/2.
    pub crossings: Vec<[Edge; 4]>,
    pub axis: Vec<AxisItem>,
    pub alt_condition: Option<Vec<SignConstraint>>,
}

#[derive(Debug, Error)]
pub enum TemplateError {
    #[error("syntax error on line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("slot numbering gap: expected slot {expected}, found {found}")]
    SlotNumbering { expected: usize, found: usize },
    #[error("edge {0} appears {1} times across crossings and axis, expected 2")]
    UnpairedEdge(Edge, usize),
    #[error("template tangle is not planar in the half-plane: {0}")]
    NonPlanar(String),
    #[error("twist vector has {found} entries, template has {expected} slots")]
    TwistLength { expected: usize, found: usize },
    #[error("template has no alternating condition")]
    ConditionAbsent,
    #[error("synthesized diagram is a {0}-component link, not a knot")]
    NotAKnot(usize),
    #[error("invalid twist vector")]
    BadTwistVector,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Where a crossing of a synthesized diagram came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingOrigin {
    Upper(usize),
    Lower(usize),
    /// (slot index 0-based, position within the twist band from the top)
    Twist(usize, usize),
}

/// A synthesized symmetric diagram: the planar diagram plus the symmetry
/// bookkeeping (crossing provenance and, in strongly invertible mode, the
/// rotation involution as a crossing permutation).
#[derive(Clone, Debug)]
pub struct SymmetricDiagram {
    pub diagram: PlanarDiagram,
    pub origins: Vec<CrossingOrigin>,
    /// involution[i] = image of crossing i under the π-rotation
    /// (strongly invertible mode only).
    pub involution: Option<Vec<usize>>,
}

impl Template {
    pub fn slot_count(&self) -> usize {
        self.axis
            .iter()
            .filter(|i| matches!(i, AxisItem::Slot { .. }))
            .count()
    }

    pub fn crossing_count_template(&self) -> usize {
        self.crossings.len()
    }

    /// Number of clasp singularities in the symmetric spanning disk of any
    /// diagram synthesized from this template: one per template crossing.
    pub fn clasp_count(&self) -> usize {
        self.crossings.len()
    }

    /// Crossing count of any synthesis: 2·c_T + Σ|t_i|.
    pub fn crossing_count(&self, t: &TwistVector) -> Result<u64, TemplateError> {
        self.check_twist_len(t)?;
        Ok(2 * self.crossings.len() as u64 + t.sum_abs())
    }

    fn check_twist_len(&self, t: &TwistVector) -> Result<(), TemplateError> {
        let s = self.slot_count();
        if t.0.len() != s {
            return Err(TemplateError::TwistLength {
                expected: s,
                found: t.0.len(),
            });
        }
        Ok(())
    }

    /// True iff every t_i satisfies the template's sign constraint.
    pub fn check_alternating_condition(&self, t: &TwistVector) -> Result<bool, TemplateError> {
        self.check_twist_len(t)?;
        let cond = self
            .alt_condition
            .as_ref()
            .ok_or(TemplateError::ConditionAbsent)?;
        Ok(cond
            .iter()
            .zip(&t.0)
            .all(|(c, &ti)| c.satisfied_by(ti)))
    }

    /// Slots whose entry violates the sign constraint.
    pub fn violating_slots(&self, t: &TwistVector) -> Result<Vec<usize>, TemplateError> {
        self.check_twist_len(t)?;
        let cond = self
            .alt_condition
            .as_ref()
            .ok_or(TemplateError::ConditionAbsent)?;
        Ok(cond
            .iter()
            .zip(&t.0)
            .enumerate()
            .filter(|(_, (c, &ti))| !c.satisfied_by(ti))
            .map(|(i, _)| i)
            .collect())
    }

    /// Structural validation: slot numbering, edge pairing, and planarity of
    /// the trivial closure (all twists zero, symmetric-union mode).
    pub fn validate(&self) -> Result<(), TemplateError> {
        let mut expected = 1usize;
        for item in &self.axis {
            if let AxisItem::Slot { index, .. } = item {
                if *index != expected {
                    return Err(TemplateError::SlotNumbering {
                        expected,
                        found: *index,
                    });
                }
                expected += 1;
            }
        }
        // Edge pairing over crossings + axis references.
        let mut count: std::collections::HashMap<Edge, usize> = Default::default();
        for cr in &self.crossings {
            for &e in cr {
                *count.entry(e).or_insert(0) += 1;
            }
        }
        for item in &self.axis {
            match item {
                AxisItem::Through(e) => *count.entry(*e).or_insert(0) += 1,
                AxisItem::Slot { left, right, .. } => {
                    *count.entry(*left).or_insert(0) += 1;
                    *count.entry(*right).or_insert(0) += 1;
                }
            }
        }
        for (&e, &c) in &count {
            if c != 2 {
                return Err(TemplateError::UnpairedEdge(e, c));
            }
        }
        // Planarity via the trivial closure; connectivity is not required
        // for a bare template (it depends on twist parities).
        let zeros = TwistVector(vec![0; self.slot_count()]);
        let raw = self.synthesize_raw(&zeros, SynthesisMode::SymmetricUnion)?.0;
        raw.check_planarity_components()
            .map_err(|e| TemplateError::NonPlanar(e.to_string()))?;
        Ok(())
    }

    /// Build the raw closed diagram plus crossing origins (upper half first,
    /// then lower half, then twist bands slot by slot).
    fn synthesize_raw(
        &self,
        t: &TwistVector,
        mode: SynthesisMode,
    ) -> Result<(RawDiagram, Vec<CrossingOrigin>), TemplateError> {
        self.check_twist_len(t)?;
        let upper = |e: Edge| 2 * e;
        let lower = |e: Edge| 2 * e + 1;
        let mut raw = RawDiagram::new();
        let mut origins = Vec::new();
        for (i, &[a, b, c, d]) in self.crossings.iter().enumerate() {
            raw.push([upper(a), upper(b), upper(c), upper(d)]);
            origins.push(CrossingOrigin::Upper(i));
        }
        for (i, &[a, b, c, d]) in self.crossings.iter().enumerate() {
            // Reflection reverses the cyclic order; rotation additionally
            // switches over and under.
            let slots = match mode {
                SynthesisMode::SymmetricUnion => [lower(a), lower(d), lower(c), lower(b)],
                SynthesisMode::StronglyInvertible => [lower(d), lower(c), lower(b), lower(a)],
            };
            raw.push(slots);
            origins.push(CrossingOrigin::Lower(i));
        }
        // Axis joins. Fresh labels for twist-band internals start above the
        // doubled range.
        let mut next_edge = self
            .crossings
            .iter()
            .flatten()
            .chain(self.axis.iter().flat_map(|i| match i {
                AxisItem::Through(e) => vec![e].into_iter(),
                AxisItem::Slot { left, right, .. } => vec![left, right].into_iter(),
            }))
            .map(|&e| lower(e))
            .max()
            .unwrap_or(1)
            + 1;
        let mut fresh = || {
            let e = next_edge;
            next_edge += 1;
            e
        };
        let mut joins: Vec<(Edge, Edge)> = Vec::new();
        let mut slot_no = 0usize;
        for item in &self.axis {
            match *item {
                AxisItem::Through(e) => joins.push((upper(e), lower(e))),
                AxisItem::Slot { left, right, .. } => {
                    // The twist region is a horizontal braid along the axis:
                    // crossings sit on the axis (each fixed by the rotation),
                    // with the slot's upper/lower edges entering from the
                    // left and leaving to the right.
                    let tw = t.0[slot_no];
                    if tw == 0 {
                        joins.push((upper(left), lower(left)));
                        joins.push((upper(right), lower(right)));
                    } else {
                        let mut cur_top = upper(left);
                        let mut cur_bot = lower(left);
                        for j in 0..tw.unsigned_abs() {
                            let nt = fresh();
                            let nb = fresh();
                            // Positive twists put the NW–SE strand on top.
                            let slots = if tw > 0 {
                                [nt, cur_top, cur_bot, nb]
                            } else {
                                [cur_top, cur_bot, nb, nt]
                            };
                            raw.push(slots);
                            origins.push(CrossingOrigin::Twist(slot_no, j as usize));
                            cur_top = nt;
                            cur_bot = nb;
                        }
                        joins.push((cur_top, upper(right)));
                        joins.push((cur_bot, lower(right)));
                    }
                    slot_no += 1;
                }
            }
        }
        // Resolve joins by renaming.
        let mut rename: std::collections::HashMap<Edge, Edge> = Default::default();
        fn resolve(rn: &std::collections::HashMap<Edge, Edge>, mut e: Edge) -> Edge {
            while let Some(&t) = rn.get(&e) {
                e = t;
            }
            e
        }
        for (x, y) in joins {
            let (rx, ry) = (resolve(&rename, x), resolve(&rename, y));
            if rx != ry {
                rename.insert(rx.max(ry), rx.min(ry));
            }
        }
        for cr in &mut raw.crossings {
            for e in cr.iter_mut() {
                *e = resolve(&rename, *e);
            }
        }
        Ok((raw, origins))
    }

    /// Synthesize the full symmetric diagram.
    pub fn synthesize(
        &self,
        t: &TwistVector,
        mode: SynthesisMode,
    ) -> Result<SymmetricDiagram, TemplateError> {
        let (raw, origins) = self.synthesize_raw(t, mode)?;
        let components = raw.component_count()?;
        if components != 1 {
            return Err(TemplateError::NotAKnot(components));
        }
        let diagram = PlanarDiagram::from_raw(&raw)?;
        debug_assert_eq!(
            diagram.crossing_count() as u64,
            self.crossing_count(t).expect("length checked")
        );
        let involution = match mode {
            SynthesisMode::SymmetricUnion => None,
            SynthesisMode::StronglyInvertible => {
                let n_t = self.crossings.len();
                let mut inv = vec![0usize; origins.len()];
                for (i, origin) in origins.iter().enumerate() {
                    inv[i] = match *origin {
                        CrossingOrigin::Upper(k) => n_t + k,
                        CrossingOrigin::Lower(k) => k,
                        // Axis crossings sit on the rotation axis: fixed.
                        CrossingOrigin::Twist(..) => i,
                    };
                }
                Some(inv)
            }
        };
        Ok(SymmetricDiagram {
            diagram,
            origins,
            involution,
        })
    }

    /// Report on whether flips at ±2-violating slots reach an alternating
    /// minimal diagram.
    pub fn nearly_alternating_report(
        &self,
        t: &TwistVector,
        ck: u64,
    ) -> Result<FlipReport, TemplateError> {
        let violations = self.violating_slots(t)?;
        let count = self.crossing_count(t)?;
        let all_two = violations.iter().all(|&i| t.0[i].abs() == 2);
        let nearly = !violations.is_empty()
            && all_two
            && count - violations.len() as u64 == ck;
        Ok(FlipReport {
            violations,
            crossing_count: count,
            reference_count: ck,
            nearly_alternating: nearly,
        })
    }

    /// Serialize in the template DSL.
    pub fn to_text(&self) -> String {
        let mut s = format!("template {} family {}\n", self.name, self.family);
        for &[a, b, c, d] in &self.crossings {
            s.push_str(&format!("x {a} {b} {c} {d}\n"));
        }
        s.push_str("axis:");
        for item in &self.axis {
            match item {
                AxisItem::Through(e) => s.push_str(&format!(" T({e})")),
                AxisItem::Slot { index, left, right } => {
                    s.push_str(&format!(" S{index}({left},{right})"))
                }
            }
        }
        s.push('\n');
        if let Some(cond) = &self.alt_condition {
            s.push_str("altcond");
            for c in cond {
                s.push_str(match c {
                    SignConstraint::NonPositive => " le0",
                    SignConstraint::NonNegative => " ge0",
                });
            }
            s.push('\n');
        }
        s
    }

    /// Parse the template DSL; validates the result.
    pub fn parse(text: &str) -> Result<Template, TemplateError> {
        let mut name = None;
        let mut family = None;
        let mut crossings = Vec::new();
        let mut axis = Vec::new();
        let mut alt_condition = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| TemplateError::Syntax {
                line: lineno + 1,
                msg,
            };
            if let Some(rest) = line.strip_prefix("template ") {
                let mut it = rest.split_whitespace();
                name = Some(
                    it.next()
                        .ok_or_else(|| err("missing template name".into()))?
                        .to_string(),
                );
                match (it.next(), it.next()) {
                    (Some("family"), Some(f)) if f.len() == 1 => {
                        family = f.chars().next();
                    }
                    _ => return Err(err("expected `template <name> family <letter>`".into())),
                }
            } else if let Some(rest) = line.strip_prefix("x ") {
                let vals: Result<Vec<Edge>, _> =
                    rest.split_whitespace().map(|t| t.parse()).collect();
                let vals = vals.map_err(|_| err("crossing needs four edge labels".into()))?;
                if vals.len() != 4 {
                    return Err(err("crossing needs four edge labels".into()));
                }
                crossings.push([vals[0], vals[1], vals[2], vals[3]]);
            } else if let Some(rest) = line.strip_prefix("axis:") {
                for tok in rest.split_whitespace() {
                    axis.push(parse_axis_item(tok).map_err(|m| err(m))?);
                }
            } else if let Some(rest) = line.strip_prefix("altcond") {
                let mut cond = Vec::new();
                for tok in rest.split_whitespace() {
                    cond.push(match tok {
                        "le0" => SignConstraint::NonPositive,
                        "ge0" => SignConstraint::NonNegative,
                        other => return Err(err(format!("unknown constraint `{other}`"))),
                    });
                }
                alt_condition = Some(cond);
            } else {
                return Err(err(format!("unrecognized line `{line}`")));
            }
        }
        let template = Template {
            name: name.ok_or(TemplateError::Syntax {
                line: 0,
                msg: "missing `template` header".into(),
            })?,
            family: family.unwrap_or('A'),
            crossings,
            axis,
            alt_condition,
        };
        if let Some(cond) = &template.alt_condition {
            if cond.len() != template.slot_count() {
                return Err(TemplateError::Syntax {
                    line: 0,
                    msg: format!(
                        "altcond has {} entries for {} slots",
                        cond.len(),
                        template.slot_count()
                    ),
                });
            }
        }
        template.validate()?;
        Ok(template)
    }
}

fn parse_axis_item(tok: &str) -> Result<AxisItem, String> {
    if let Some(rest) = tok.strip_prefix("T(") {
        let e = rest
            .strip_suffix(')')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| format!("bad through item `{tok}`"))?;
        return Ok(AxisItem::Through(e));
    }
    if let Some(rest) = tok.strip_prefix('S') {
        let (idx, pair) = rest
            .split_once('(')
            .ok_or_else(|| format!("bad slot item `{tok}`"))?;
        let index: usize = idx.parse().map_err(|_| format!("bad slot index `{tok}`"))?;
        let (l, r) = pair
            .strip_suffix(')')
            .and_then(|s| s.split_once(','))
            .ok_or_else(|| format!("bad slot edges `{tok}`"))?;
        let left: Edge = l.trim().parse().map_err(|_| format!("bad slot edge `{tok}`"))?;
        let right: Edge = r.trim().parse().map_err(|_| format!("bad slot edge `{tok}`"))?;
        return Ok(AxisItem::Slot { index, left, right });
    }
    Err(format!("unknown axis item `{tok}`"))
}

/// Outcome of the nearly-alternating check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipReport {
    /// 0-based indices of slots violating the sign condition.
    pub violations: Vec<usize>,
    pub crossing_count: u64,
    pub reference_count: u64,
    /// True iff every violation is a ±2 twist and flips reach the reference
    /// crossing number.
    pub nearly_alternating: bool,
}

/// The trivial one-slot template: a single arc over the axis. Its syntheses
/// are the (2, t) torus closures.
pub fn trivial_template() -> Template {
    Template {
        name: "A_0".into(),
        family: 'A',
        crossings: Vec::new(),
        axis: vec![AxisItem::Slot {
            index: 1,
            left: 1,
            right: 1,
        }],
        alt_condition: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants;

    #[test]
    fn trivial_template_synthesizes_torus_knots() {
        let a0 = trivial_template();
        assert!(a0.validate().is_ok());
        assert_eq!(a0.clasp_count(), 0);
        assert_eq!(a0.crossing_count(&TwistVector(vec![0])).unwrap(), 0);
        // Three positive half-twists close to a trefoil.
        let d = a0
            .synthesize(&TwistVector(vec![3]), SynthesisMode::StronglyInvertible)
            .unwrap();
        assert_eq!(d.diagram.crossing_count(), 3);
        assert!(d.diagram.is_alternating());
        assert_eq!(invariants::determinant(&d.diagram), 3);
        // Even twists close to two components.
        assert!(matches!(
            a0.synthesize(&TwistVector(vec![2]), SynthesisMode::StronglyInvertible),
            Err(TemplateError::NotAKnot(2))
        ));
        // Zero twists close to the unknot.
        let u = a0
            .synthesize(&TwistVector(vec![0]), SynthesisMode::StronglyInvertible)
            .unwrap();
        assert_eq!(u.diagram.crossing_count(), 0);
    }

    #[test]
    fn twist_vector_length_enforced() {
        let a0 = trivial_template();
        assert!(matches!(
            a0.synthesize(&TwistVector(vec![1, 2]), SynthesisMode::StronglyInvertible),
            Err(TemplateError::TwistLength { .. })
        ));
    }

    #[test]
    fn dsl_round_trip() {
        let a0 = trivial_template();
        let text = a0.to_text();
        let back = Template::parse(&text).unwrap();
        assert_eq!(back, a0);
    }

    #[test]
    fn slot_numbering_gap_rejected() {
        let text = "template X family A\naxis: S1(1,1) S3(2,2)\n";
        assert!(matches!(
            Template::parse(text),
            Err(TemplateError::SlotNumbering { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn unpaired_edge_rejected() {
        let text = "template X family A\nx 1 2 3 4\naxis: S1(1,2)\n";
        assert!(matches!(
            Template::parse(text),
            Err(TemplateError::UnpairedEdge(..))
        ));
    }

    #[test]
    fn involution_fixes_axis_crossings() {
        let a0 = trivial_template();
        let d = a0
            .synthesize(&TwistVector(vec![3]), SynthesisMode::StronglyInvertible)
            .unwrap();
        let inv = d.involution.unwrap();
        // Every axis crossing lies on the rotation axis.
        assert_eq!(inv, vec![0, 1, 2]);
    }
}
