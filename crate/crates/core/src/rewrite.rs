//! Placements of relation leading words inside diwords, elimination of
//! leading diwords, normal-form reduction, and enumeration of the
//! irreducible diwords Irr(S).

use crate::diword::{enumerate_diwords, Alphabet, Gen, NormalDiword, Normedness};
use crate::error::{Error, Result};
use crate::poly::DiPolynomial;
use crate::scalar::{Field, Scalar};
use std::collections::HashSet;

/// A monic relation set over a fixed alphabet and field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    field: Field,
    relations: Vec<DiPolynomial>,
    rules: Vec<RuleInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct RuleInfo {
    leading: NormalDiword,
    normedness: Normedness,
}

impl Presentation {
    /// Relations must be nonzero, monic, pairwise distinct, and read over the
    /// given alphabet and field.
    pub fn new(
        alphabet: Alphabet,
        field: Field,
        relations: Vec<DiPolynomial>,
    ) -> Result<Presentation> {
        for (i, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(Error::invalid(format!("relation {i} is zero")));
            }
            if !r.is_monic() {
                return Err(Error::invalid(format!(
                    "relation {i} is not monic (leading coefficient must be 1)"
                )));
            }
            if r.field() != field {
                return Err(Error::invalid(format!(
                    "relation {i} uses a different coefficient field"
                )));
            }
            for (u, _) in r.terms() {
                if u.word().iter().any(|&g| g as usize >= alphabet.len()) {
                    return Err(Error::invalid(format!(
                        "relation {i} mentions a generator outside the alphabet"
                    )));
                }
            }
            if relations[..i].contains(r) {
                return Err(Error::invalid(format!("relation {i} is a duplicate")));
            }
        }
        Ok(Presentation::trusted(alphabet, field, relations))
    }

    /// Internal constructor for relation sets whose invariants hold by
    /// construction (completion rounds, generated presentations).
    pub(crate) fn trusted(
        alphabet: Alphabet,
        field: Field,
        relations: Vec<DiPolynomial>,
    ) -> Presentation {
        let rules = relations
            .iter()
            .map(|r| {
                let (lead, _) = r.leading().expect("nonzero relation");
                RuleInfo {
                    leading: lead.clone(),
                    normedness: r.normedness().expect("nonzero relation"),
                }
            })
            .collect();
        Presentation { alphabet, field, relations, rules }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn relations(&self) -> &[DiPolynomial] {
        &self.relations
    }

    pub fn relation(&self, i: usize) -> &DiPolynomial {
        &self.relations[i]
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn rule_leading(&self, i: usize) -> &NormalDiword {
        &self.rules[i].leading
    }

    pub fn rule_normedness(&self, i: usize) -> Normedness {
        self.rules[i].normedness
    }
}

/// Where a relation's leading diword sits inside a target diword relative to
/// the target's center: on it, strictly left of it, or strictly right of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlacementKind {
    Center,
    Left,
    Right,
}

/// One admissible occurrence of a rule's leading word in a target diword.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Placement {
    pub rule: usize,
    /// Letters of the target strictly left of the occurrence.
    pub offset: usize,
    pub kind: PlacementKind,
}

/// Which placements a reduction may use. The normed-only modes realize the
/// side conditions in the triviality definition: every elimination step must
/// itself be a right (left) normed rule applied in a right (left) normed
/// position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    Any,
    RightNormedOnly,
    LeftNormedOnly,
}

/// Classifies an occurrence of `lead` at `offset` inside a word whose center
/// is `target_center`. Returns the placement kind when the occurrence can
/// carry a normal substitution, i.e. the centers align (center kind) or the
/// rule has the normedness the off-center position demands.
pub(crate) fn admissible_kind(
    target_center: usize,
    offset: usize,
    lead: &NormalDiword,
    rule_normedness: Normedness,
) -> Option<PlacementKind> {
    let end = offset + lead.len();
    if target_center >= offset && target_center < end {
        (target_center == offset + lead.center()).then_some(PlacementKind::Center)
    } else if target_center >= end {
        rule_normedness.is_left().then_some(PlacementKind::Left)
    } else {
        rule_normedness.is_right().then_some(PlacementKind::Right)
    }
}

fn constraint_admits(constraint: Constraint, u: &NormalDiword, rule: Normedness) -> bool {
    match constraint {
        Constraint::Any => true,
        // A right normed rule eliminated at a right normed position keeps the
        // ambient center on the first letter.
        Constraint::RightNormedOnly => u.center() == 0 && rule.is_right(),
        Constraint::LeftNormedOnly => u.center() == u.len() - 1 && rule.is_left(),
    }
}

/// All admissible placements of the presentation's rules in `u`, ordered by
/// `(rule, offset)`.
pub fn find_placements(
    u: &NormalDiword,
    pres: &Presentation,
    constraint: Constraint,
) -> Vec<Placement> {
    let mut out = Vec::new();
    for (rule, info) in pres.rules.iter().enumerate() {
        if !constraint_admits(constraint, u, info.normedness) {
            continue;
        }
        let lw = info.leading.word();
        if lw.len() > u.len() {
            continue;
        }
        for offset in 0..=(u.len() - lw.len()) {
            if &u.word()[offset..offset + lw.len()] != lw {
                continue;
            }
            if let Some(kind) = admissible_kind(u.center(), offset, &info.leading, info.normedness)
            {
                out.push(Placement { rule, offset, kind });
            }
        }
    }
    out
}

/// Whether `u` admits no placement at all (membership test for Irr(S)).
pub fn is_irreducible(u: &NormalDiword, pres: &Presentation) -> bool {
    for info in pres.rules.iter() {
        let lw = info.leading.word();
        if lw.len() > u.len() {
            continue;
        }
        for offset in 0..=(u.len() - lw.len()) {
            if &u.word()[offset..offset + lw.len()] == lw
                && admissible_kind(u.center(), offset, &info.leading, info.normedness).is_some()
            {
                return false;
            }
        }
    }
    true
}

/// Builds the substituted polynomial `[a s b]`: every monomial `t` of `s`
/// maps to the diword `a·t·b`, with the center at the copy of `t`'s center
/// (center kind) or at the ambient dotted letter located by
/// `ambient_center_offset` inside `b` (left kind) or inside `a` (right kind).
///
/// Panics when the normedness precondition of the kind is violated.
pub fn substitute(
    s: &DiPolynomial,
    a: &[Gen],
    b: &[Gen],
    kind: PlacementKind,
    ambient_center_offset: usize,
) -> DiPolynomial {
    match kind {
        PlacementKind::Center => {}
        PlacementKind::Left => {
            assert!(
                s.normedness().is_some_and(Normedness::is_left),
                "left-kind substitution requires a left normed polynomial"
            );
            assert!(ambient_center_offset < b.len(), "dotted letter must lie in b");
        }
        PlacementKind::Right => {
            assert!(
                s.normedness().is_some_and(Normedness::is_right),
                "right-kind substitution requires a right normed polynomial"
            );
            assert!(ambient_center_offset < a.len(), "dotted letter must lie in a");
        }
    }
    let mut out = DiPolynomial::zero(s.field());
    for (t, c) in s.terms() {
        let mut word = Vec::with_capacity(a.len() + t.len() + b.len());
        word.extend_from_slice(a);
        word.extend_from_slice(t.word());
        word.extend_from_slice(b);
        let center = match kind {
            PlacementKind::Center => a.len() + t.center(),
            PlacementKind::Left => a.len() + t.len() + ambient_center_offset,
            PlacementKind::Right => ambient_center_offset,
        };
        out.add_term(NormalDiword::new(word, center), c.clone());
    }
    out
}

/// Recovers the `(a, b, ambient offset)` context of a placement applied to a
/// concrete target diword.
pub fn placement_context(
    target: &NormalDiword,
    lead_len: usize,
    placement: &Placement,
) -> (Vec<Gen>, Vec<Gen>, usize) {
    let p = placement.offset;
    let a = target.word()[..p].to_vec();
    let b = target.word()[p + lead_len..].to_vec();
    let off = match placement.kind {
        PlacementKind::Center => 0,
        PlacementKind::Left => target.center() - (p + lead_len),
        PlacementKind::Right => target.center(),
    };
    (a, b, off)
}

/// One elimination-of-leading-diword step.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub placement: Placement,
    pub eliminated: NormalDiword,
    pub coefficient: Scalar,
}

/// The full elimination history of a reduction; replaying it against the
/// input reproduces the remainder.
#[derive(Clone, Debug, Default)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    /// Applies every recorded step to `input` and returns the result, which
    /// equals the reduction's remainder. The subtracted polynomials witness
    /// that `input − remainder` lies in the ideal generated by the relations.
    pub fn replay(&self, input: &DiPolynomial, pres: &Presentation) -> DiPolynomial {
        let mut acc = input.clone();
        for step in &self.steps {
            let lead_len = pres.rule_leading(step.placement.rule).len();
            let (a, b, off) = placement_context(&step.eliminated, lead_len, &step.placement);
            let sub = substitute(
                pres.relation(step.placement.rule),
                &a,
                &b,
                step.placement.kind,
                off,
            );
            acc = &acc - &sub.scaled(&step.coefficient);
        }
        acc
    }
}

/// Why a reduction stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionOutcome {
    /// No admissible placement remains in the remainder.
    Reduced,
    /// The greatest reducible diword is not strictly below the floor; used by
    /// the triviality checks, which only accept eliminations below `[w]`.
    StuckAboveFloor,
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub remainder: DiPolynomial,
    pub trace: ReductionTrace,
    pub outcome: ReductionOutcome,
}

impl Reduction {
    pub fn reduced_to_zero(&self) -> bool {
        self.outcome == ReductionOutcome::Reduced && self.remainder.is_zero()
    }
}

/// Repeatedly eliminates the greatest reducible diword of the working
/// polynomial using the first admissible placement. Every step strictly
/// decreases the eliminated diword, so the loop terminates; the remainder
/// contains no admissible placement (under the constraint) and is supported
/// on diwords no greater than the input's leading diword.
pub fn normal_form(
    f: &DiPolynomial,
    pres: &Presentation,
    constraint: Constraint,
    floor: Option<&NormalDiword>,
) -> Reduction {
    let mut work = f.clone();
    let mut trace = ReductionTrace::default();
    let mut irreducible: HashSet<NormalDiword> = HashSet::new();
    loop {
        let mut next: Option<(NormalDiword, Scalar, Placement)> = None;
        for (u, c) in work.terms().rev() {
            if irreducible.contains(u) {
                continue;
            }
            match find_placements(u, pres, constraint).first() {
                Some(&p) => {
                    next = Some((u.clone(), c.clone(), p));
                    break;
                }
                None => {
                    irreducible.insert(u.clone());
                }
            }
        }
        let Some((u, c, placement)) = next else {
            return Reduction { remainder: work, trace, outcome: ReductionOutcome::Reduced };
        };
        if let Some(floor) = floor {
            if &u >= floor {
                return Reduction {
                    remainder: work,
                    trace,
                    outcome: ReductionOutcome::StuckAboveFloor,
                };
            }
        }
        let lead_len = pres.rule_leading(placement.rule).len();
        let (a, b, off) = placement_context(&u, lead_len, &placement);
        let sub = substitute(pres.relation(placement.rule), &a, &b, placement.kind, off);
        debug_assert_eq!(sub.leading().map(|(w, _)| w), Some(&u));
        work = &work - &sub.scaled(&c);
        trace.steps.push(TraceStep { placement, eliminated: u, coefficient: c });
    }
}

/// All normal diwords of length at most `max_deg` with no admissible
/// placement, in ascending weight order.
pub fn irr_enumerate(pres: &Presentation, max_deg: usize) -> Vec<NormalDiword> {
    enumerate_diwords(pres.alphabet().len(), max_deg)
        .into_iter()
        .filter(|u| is_irreducible(u, pres))
        .collect()
}
