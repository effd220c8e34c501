//! The four composition types, triviality checks, the Gröbner–Shirshov
//! property, and completion.

use crate::diword::{DiOp, Gen, NormalDiword, Normedness};
use crate::poly::DiPolynomial;
use crate::rewrite::{
    admissible_kind, normal_form, placement_context, substitute, Constraint,
    Placement, Presentation,
};
use rayon::prelude::*;
use std::time::{Duration, Instant};

/// Overlap type of an ambiguity `[w]` between two relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmbiguityKind {
    /// The second rule's leading word occurs inside the first rule's leading
    /// diword, which is `[w]` itself.
    Inclusion,
    /// A proper suffix of the first leading word equals a prefix of the
    /// second's; `[w]` is the glued word with a compatible center.
    Intersection,
}

/// An overlap of two relations' leading diwords, with the offsets locating
/// each occurrence inside `[w]`. Both occurrences satisfy the placement
/// invariants against `[w]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    /// Index of `f`, whose occurrence starts at `first_offset` (always 0).
    pub first: usize,
    /// Index of `g`.
    pub second: usize,
    pub word: NormalDiword,
    pub first_offset: usize,
    pub second_offset: usize,
}

/// Every ambiguity of inclusion between relations `i` (as `f`) and `j`
/// (as `g`): occurrences of `g`'s leading word inside `f`'s leading diword
/// whose kind invariant is satisfiable. The identity occurrence of a rule in
/// itself is excluded.
pub fn inclusion_ambiguities(pres: &Presentation, i: usize, j: usize) -> Vec<Ambiguity> {
    let lead_f = pres.rule_leading(i);
    let lead_g = pres.rule_leading(j);
    let norm_g = pres.rule_normedness(j);
    let mut out = Vec::new();
    if lead_g.len() > lead_f.len() {
        return out;
    }
    for offset in 0..=(lead_f.len() - lead_g.len()) {
        if &lead_f.word()[offset..offset + lead_g.len()] != lead_g.word() {
            continue;
        }
        if i == j && lead_g.len() == lead_f.len() {
            continue; // the identity occurrence of f in itself
        }
        if admissible_kind(lead_f.center(), offset, lead_g, norm_g).is_some() {
            out.push(Ambiguity {
                kind: AmbiguityKind::Inclusion,
                first: i,
                second: j,
                word: lead_f.clone(),
                first_offset: 0,
                second_offset: offset,
            });
        }
    }
    out
}

/// Every ambiguity of intersection between relations `i` and `j`: for each
/// proper overlap of `f`'s leading word with `g`'s, and each center position
/// of the glued word admitting both occurrences, one ambiguity.
pub fn intersection_ambiguities(pres: &Presentation, i: usize, j: usize) -> Vec<Ambiguity> {
    let lead_f = pres.rule_leading(i);
    let lead_g = pres.rule_leading(j);
    let norm_f = pres.rule_normedness(i);
    let norm_g = pres.rule_normedness(j);
    let mut out = Vec::new();
    let max_overlap = lead_f.len().min(lead_g.len());
    for o in 1..max_overlap {
        if lead_f.word()[lead_f.len() - o..] != lead_g.word()[..o] {
            continue;
        }
        let mut glued = lead_f.word().to_vec();
        glued.extend_from_slice(&lead_g.word()[o..]);
        let g_offset = lead_f.len() - o;
        for center in 0..glued.len() {
            if admissible_kind(center, 0, lead_f, norm_f).is_none() {
                continue;
            }
            if admissible_kind(center, g_offset, lead_g, norm_g).is_none() {
                continue;
            }
            out.push(Ambiguity {
                kind: AmbiguityKind::Intersection,
                first: i,
                second: j,
                word: NormalDiword::new(glued.clone(), center),
                first_offset: 0,
                second_offset: g_offset,
            });
        }
    }
    out
}

/// The two substituted polynomials whose difference is the composition:
/// `(f, [agb])` for inclusion, `([fb], [ag])` for intersection.
pub fn composition_sides(amb: &Ambiguity, pres: &Presentation) -> (DiPolynomial, DiPolynomial) {
    let w = &amb.word;
    let g_side = {
        let lead_g = pres.rule_leading(amb.second);
        let kind = admissible_kind(
            w.center(),
            amb.second_offset,
            lead_g,
            pres.rule_normedness(amb.second),
        )
        .expect("ambiguity invariant");
        let placement = Placement { rule: amb.second, offset: amb.second_offset, kind };
        let (a, b, off) = placement_context(w, lead_g.len(), &placement);
        substitute(pres.relation(amb.second), &a, &b, kind, off)
    };
    let f_side = match amb.kind {
        AmbiguityKind::Inclusion => pres.relation(amb.first).clone(),
        AmbiguityKind::Intersection => {
            let lead_f = pres.rule_leading(amb.first);
            let kind = admissible_kind(w.center(), 0, lead_f, pres.rule_normedness(amb.first))
                .expect("ambiguity invariant");
            let placement = Placement { rule: amb.first, offset: 0, kind };
            let (a, b, off) = placement_context(w, lead_f.len(), &placement);
            substitute(pres.relation(amb.first), &a, &b, kind, off)
        }
    };
    (f_side, g_side)
}

/// The composition polynomial of an ambiguity; its leading diword is
/// strictly below `[w]` whenever it is nonzero.
pub fn composition_poly(amb: &Ambiguity, pres: &Presentation) -> DiPolynomial {
    let (f_side, g_side) = composition_sides(amb, pres);
    &f_side - &g_side
}

/// A composition of left multiplication (`x ⊣ f`, for `f` not right normed)
/// or right multiplication (`f ⊢ x`, for `f` not left normed).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultKind {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct MultComposition {
    pub rule: usize,
    pub letter: Gen,
    pub kind: MultKind,
    pub poly: DiPolynomial,
}

/// The multiplication compositions a relation gives rise to. Results may be
/// zero; those are trivially trivial.
pub fn mult_compositions(pres: &Presentation, rule: usize) -> Vec<MultComposition> {
    let f = pres.relation(rule);
    let norm = pres.rule_normedness(rule);
    let field = pres.field();
    let mut out = Vec::new();
    if !norm.is_right() {
        for letter in pres.alphabet().gens() {
            let x = DiPolynomial::generator(field, letter);
            out.push(MultComposition {
                rule,
                letter,
                kind: MultKind::Left,
                poly: x.product(DiOp::Dashv, f),
            });
        }
    }
    if !norm.is_left() {
        for letter in pres.alphabet().gens() {
            let x = DiPolynomial::generator(field, letter);
            out.push(MultComposition {
                rule,
                letter,
                kind: MultKind::Right,
                poly: f.product(DiOp::Vdash, &x),
            });
        }
    }
    out
}

/// Outcome of a single triviality check.
#[derive(Clone, Debug)]
pub enum Triviality {
    Trivial,
    NonzeroRemainder(DiPolynomial),
}

impl Triviality {
    pub fn is_trivial(&self) -> bool {
        matches!(self, Triviality::Trivial)
    }
}

/// Triviality of a multiplication composition: the reduction runs entirely
/// through right (left) normed eliminations. No explicit degree bound is
/// needed — the ordering is degree-first, so no elimination step can exceed
/// the composition's degree.
pub fn mult_composition_trivial(comp: &MultComposition, pres: &Presentation) -> Triviality {
    let constraint = match comp.kind {
        MultKind::Left => Constraint::RightNormedOnly,
        MultKind::Right => Constraint::LeftNormedOnly,
    };
    let red = normal_form(&comp.poly, pres, constraint, None);
    if red.reduced_to_zero() {
        Triviality::Trivial
    } else {
        Triviality::NonzeroRemainder(red.remainder)
    }
}

fn ambiguity_constraint(amb: &Ambiguity, pres: &Presentation, sides: (&DiPolynomial, &DiPolynomial)) -> Constraint {
    let f_norm = pres.rule_normedness(amb.first);
    let g_norm = pres.rule_normedness(amb.second);
    let s0 = sides.0.normedness().expect("nonzero side");
    let s1 = sides.1.normedness().expect("nonzero side");
    // "whenever either both f and [agb] or both [fb] and [ag] are right
    // (left) normed S-diwords": an S-diword is right normed when the rule and
    // the substituted polynomial both are.
    if f_norm.is_right() && s0.is_right() && g_norm.is_right() && s1.is_right() {
        Constraint::RightNormedOnly
    } else if f_norm.is_left() && s0.is_left() && g_norm.is_left() && s1.is_left() {
        Constraint::LeftNormedOnly
    } else {
        Constraint::Any
    }
}

/// Triviality of an inclusion or intersection composition: reduction to zero
/// touching only diwords strictly below `[w]`, under the normed-only
/// constraint exactly when the definition's side condition fires.
pub fn ambiguity_trivial(amb: &Ambiguity, pres: &Presentation) -> Triviality {
    let (reduction, _) = ambiguity_reduction(amb, pres);
    reduction
}

pub(crate) fn ambiguity_reduction(
    amb: &Ambiguity,
    pres: &Presentation,
) -> (Triviality, Constraint) {
    let (f_side, g_side) = composition_sides(amb, pres);
    let comp = &f_side - &g_side;
    if comp.is_zero() {
        return (Triviality::Trivial, Constraint::Any);
    }
    let constraint = ambiguity_constraint(amb, pres, (&f_side, &g_side));
    let red = normal_form(&comp, pres, constraint, Some(&amb.word));
    let status = if red.reduced_to_zero() {
        Triviality::Trivial
    } else {
        Triviality::NonzeroRemainder(red.remainder)
    };
    (status, constraint)
}

/// One item of a full composition check.
#[derive(Clone, Debug)]
pub enum CompositionItem {
    Mult(MultComposition),
    Overlap(Ambiguity),
}

impl CompositionItem {
    pub fn describe(&self, pres: &Presentation) -> String {
        match self {
            CompositionItem::Mult(m) => {
                let x = pres.alphabet().name(m.letter);
                match m.kind {
                    MultKind::Left => format!("left multiplication {x} -| r{}", m.rule),
                    MultKind::Right => format!("right multiplication r{} |- {x}", m.rule),
                }
            }
            CompositionItem::Overlap(a) => {
                let kind = match a.kind {
                    AmbiguityKind::Inclusion => "inclusion",
                    AmbiguityKind::Intersection => "intersection",
                };
                format!(
                    "{kind} (r{}, r{}) at [{}]",
                    a.first,
                    a.second,
                    a.word.render(pres.alphabet())
                )
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct CompositionOutcome {
    pub item: CompositionItem,
    pub status: Triviality,
    pub constraint: Constraint,
    pub elapsed: Duration,
}

/// Per-item results of checking every composition of a presentation.
#[derive(Clone, Debug)]
pub struct CompositionReport {
    pub outcomes: Vec<CompositionOutcome>,
    pub elapsed: Duration,
}

impl CompositionReport {
    pub fn pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.status.is_trivial())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CompositionOutcome> {
        self.outcomes.iter().filter(|o| !o.status.is_trivial())
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }
}

fn all_items(pres: &Presentation) -> Vec<CompositionItem> {
    let mut items = Vec::new();
    for rule in 0..pres.len() {
        items.extend(mult_compositions(pres, rule).into_iter().map(CompositionItem::Mult));
    }
    for i in 0..pres.len() {
        for j in 0..pres.len() {
            items.extend(
                inclusion_ambiguities(pres, i, j)
                    .into_iter()
                    .map(CompositionItem::Overlap),
            );
            items.extend(
                intersection_ambiguities(pres, i, j)
                    .into_iter()
                    .map(CompositionItem::Overlap),
            );
        }
    }
    items
}

/// Evaluates triviality of every composition of `S`: all multiplication
/// compositions and all ordered-pair ambiguities, self-pairs included. The
/// report passes exactly when all of them are trivial. Items are evaluated
/// concurrently; the report order is deterministic.
pub fn check_gsb(pres: &Presentation) -> CompositionReport {
    let start = Instant::now();
    let items = all_items(pres);
    let outcomes: Vec<CompositionOutcome> = items
        .into_par_iter()
        .map(|item| {
            let t0 = Instant::now();
            let (status, constraint) = match &item {
                CompositionItem::Mult(m) => {
                    let c = match m.kind {
                        MultKind::Left => Constraint::RightNormedOnly,
                        MultKind::Right => Constraint::LeftNormedOnly,
                    };
                    (mult_composition_trivial(m, pres), c)
                }
                CompositionItem::Overlap(a) => ambiguity_reduction(a, pres),
            };
            CompositionOutcome { item, status, constraint, elapsed: t0.elapsed() }
        })
        .collect();
    CompositionReport { outcomes, elapsed: start.elapsed() }
}

/// Status of a completion run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    /// A round produced no new relations and every composition is trivial.
    Complete,
    /// Some composition remainder exceeded the degree cap and was dropped.
    DegreeCapped,
    /// The round budget ran out first.
    RoundCapped,
}

#[derive(Clone, Debug)]
pub struct Completion {
    pub presentation: Presentation,
    pub status: CompletionStatus,
    pub rounds: usize,
}

/// The constraint under which a relation may be rewritten without losing
/// information: a strictly right (left) normed relation is only ever usable
/// in right (left) normed eliminations, so a derivation of it through such
/// eliminations substitutes for every use of it. Reducing a relation under a
/// weaker constraint than this can drop rules the normed side conditions
/// still need.
fn self_reduction_constraint(rel: &DiPolynomial) -> Constraint {
    match rel.normedness().expect("nonzero relation") {
        // All monomials of length one: the three constraints coincide.
        Normedness::Right | Normedness::Both => Constraint::RightNormedOnly,
        Normedness::Left => Constraint::LeftNormedOnly,
        Normedness::Neither => Constraint::Any,
    }
}

/// Reduces every relation modulo the others until stable, each under its own
/// normedness-matched constraint: relations that reduce to zero are dropped,
/// others are replaced by their monic normal form.
fn inter_reduce(pres: &Presentation) -> Vec<DiPolynomial> {
    let mut rels: Vec<DiPolynomial> = Vec::new();
    for r in pres.relations() {
        let m = r.monic();
        if !rels.contains(&m) {
            rels.push(m);
        }
    }
    'outer: loop {
        for i in 0..rels.len() {
            let others: Vec<DiPolynomial> = rels
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, r)| r.clone())
                .collect();
            if others.is_empty() {
                continue;
            }
            let sub = Presentation::trusted(pres.alphabet().clone(), pres.field(), others);
            let constraint = self_reduction_constraint(&rels[i]);
            let red = normal_form(&rels[i], &sub, constraint, None).remainder;
            if red == rels[i] {
                continue;
            }
            if red.is_zero() {
                rels.remove(i);
            } else {
                let m = red.monic();
                if rels.contains(&m) {
                    rels.remove(i);
                } else {
                    rels[i] = m;
                }
            }
            continue 'outer;
        }
        return rels;
    }
}

/// Shirshov-style completion: monic-normalize and inter-reduce, evaluate all
/// compositions, append every nonzero remainder whose leading degree fits
/// under `max_deg` (queued in ascending leading-diword order), and repeat.
/// Terminates with `Complete` when a full check passes; remainders beyond the
/// degree cap yield `DegreeCapped`, and exhausting `max_rounds` yields
/// `RoundCapped`.
pub fn complete(pres: &Presentation, max_deg: usize, max_rounds: usize) -> Completion {
    let alphabet = pres.alphabet().clone();
    let field = pres.field();
    let mut rels: Vec<DiPolynomial> =
        pres.relations().iter().map(DiPolynomial::monic).collect();
    let mut rounds = 0;
    while rounds < max_rounds {
        rounds += 1;
        let current = Presentation::trusted(alphabet.clone(), field, rels);
        rels = inter_reduce(&current);
        let current = Presentation::trusted(alphabet.clone(), field, rels.clone());
        let report = check_gsb(&current);
        if report.pass() {
            return Completion {
                presentation: current,
                status: CompletionStatus::Complete,
                rounds,
            };
        }
        // Pending remainders in ascending leading-diword order; smaller rules
        // maximize inter-reduction early.
        let mut pending: Vec<(Constraint, DiPolynomial)> = report
            .outcomes
            .iter()
            .filter_map(|o| match &o.status {
                Triviality::NonzeroRemainder(r) => Some((o.constraint, r.clone())),
                Triviality::Trivial => None,
            })
            .collect();
        pending.sort_by(|(ca, a), (cb, b)| {
            let la = a.leading().expect("nonzero remainder").0;
            let lb = b.leading().expect("nonzero remainder").0;
            la.cmp(lb).then_with(|| constraint_rank(*ca).cmp(&constraint_rank(*cb)))
        });
        pending.dedup_by(|(ca, a), (cb, b)| ca == cb && a == b);

        let mut added = 0;
        let mut capped = false;
        for (constraint, r) in pending {
            let cur = Presentation::trusted(alphabet.clone(), field, rels.clone());
            let red = normal_form(&r, &cur, constraint, None).remainder;
            if red.is_zero() {
                continue;
            }
            if red.degree().unwrap() > max_deg {
                capped = true;
                continue;
            }
            let m = red.monic();
            if !rels.contains(&m) {
                rels.push(m);
                added += 1;
            }
        }
        if added == 0 {
            // Nothing addable: every failing remainder overflowed the cap
            // (anything else would have been appended verbatim).
            debug_assert!(capped);
            return Completion {
                presentation: Presentation::trusted(alphabet, field, rels),
                status: CompletionStatus::DegreeCapped,
                rounds,
            };
        }
    }
    Completion {
        presentation: Presentation::trusted(alphabet, field, rels),
        status: CompletionStatus::RoundCapped,
        rounds,
    }
}

fn constraint_rank(c: Constraint) -> u8 {
    match c {
        Constraint::Any => 0,
        Constraint::RightNormedOnly => 1,
        Constraint::LeftNormedOnly => 2,
    }
}
