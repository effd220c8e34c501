//! Brute-force verification of basis claims: exhaustive enumeration of
//! normal S-diword substitutions and exact rank computation over the diword
//! columns, independent of the rewriting path.

use crate::diword::{self, Alphabet, NormalDiword};
use crate::poly::DiPolynomial;
use crate::rewrite::{irr_enumerate, substitute, PlacementKind, Presentation};
use crate::scalar::{Field, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::collections::HashMap;

/// All normal diwords of length at most `max_deg`, ascending.
pub fn enumerate_diwords(alphabet: &Alphabet, max_deg: usize) -> Vec<NormalDiword> {
    diword::enumerate_diwords(alphabet.len(), max_deg)
}

/// One substituted normal S-diword as a sparse row over the diword columns,
/// entries sorted by descending column so the leading term comes first.
#[derive(Clone, Debug)]
pub struct Row {
    pub lead_len: usize,
    pub entries: Vec<(usize, Scalar)>,
}

/// The degree-`max_deg` truncation of the span of normal S-diwords: all
/// diwords of length at most `max_deg` as columns, and every substitution
/// `[asb]` with leading length at most `max_deg` as a row. Substitution
/// never increases a monomial beyond the leading length, so every row is
/// supported on the columns.
pub struct DegreeSlice {
    max_deg: usize,
    field: Field,
    alphabet_size: usize,
    diwords: Vec<NormalDiword>,
    rows: Vec<Row>,
}

impl DegreeSlice {
    pub fn build(pres: &Presentation, max_deg: usize) -> DegreeSlice {
        let diwords = enumerate_diwords(pres.alphabet(), max_deg);
        let index: HashMap<NormalDiword, usize> = diwords
            .iter()
            .enumerate()
            .map(|(i, u)| (u.clone(), i))
            .collect();
        let q = pres.alphabet().len();
        let rows: Vec<Row> = (0..pres.len())
            .into_par_iter()
            .map(|rule| rule_rows(pres, rule, q, max_deg, &index))
            .flatten()
            .collect();
        DegreeSlice {
            max_deg,
            field: pres.field(),
            alphabet_size: q,
            diwords,
            rows,
        }
    }

    pub fn max_deg(&self) -> usize {
        self.max_deg
    }

    pub fn diwords(&self) -> &[NormalDiword] {
        &self.diwords
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    fn columns_up_to(&self, degree: usize) -> usize {
        (1..=degree).map(|n| n * self.alphabet_size.pow(n as u32)).sum()
    }

    /// Cumulative quotient dimensions per degree bound `1..=max_deg`:
    /// `(columns of length ≤ n) − rank(rows with leading length ≤ n)`.
    /// Rows are eliminated incrementally in ascending leading length; the
    /// pivot set of a span does not depend on insertion order, so one pass
    /// yields every truncation's rank.
    pub fn quotient_dims(&self) -> Vec<usize> {
        let mut by_len: Vec<Vec<&Row>> = vec![Vec::new(); self.max_deg + 1];
        for row in &self.rows {
            by_len[row.lead_len].push(row);
        }
        let mut dims = Vec::with_capacity(self.max_deg);
        let mut elim = Eliminator::new(self.field);
        for n in 1..=self.max_deg {
            for row in &by_len[n] {
                elim.insert(&row.entries);
            }
            dims.push(self.columns_up_to(n) - elim.rank());
        }
        dims
    }
}

fn rule_rows(
    pres: &Presentation,
    rule: usize,
    q: usize,
    max_deg: usize,
    index: &HashMap<NormalDiword, usize>,
) -> Vec<Row> {
    let lead = pres.rule_leading(rule);
    let norm = pres.rule_normedness(rule);
    let ll = lead.len();
    let mut rows = Vec::new();
    if ll > max_deg {
        return rows;
    }
    let budget = max_deg - ll;
    for la in 0..=budget {
        for lb in 0..=(budget - la) {
            for a in Words::new(q, la) {
                for b in Words::new(q, lb) {
                    rows.push(make_row(pres, rule, &a, &b, PlacementKind::Center, 0, index));
                    if norm.is_left() {
                        for off in 0..lb {
                            rows.push(make_row(
                                pres,
                                rule,
                                &a,
                                &b,
                                PlacementKind::Left,
                                off,
                                index,
                            ));
                        }
                    }
                    if norm.is_right() {
                        for off in 0..la {
                            rows.push(make_row(
                                pres,
                                rule,
                                &a,
                                &b,
                                PlacementKind::Right,
                                off,
                                index,
                            ));
                        }
                    }
                }
            }
        }
    }
    rows
}

fn make_row(
    pres: &Presentation,
    rule: usize,
    a: &[u32],
    b: &[u32],
    kind: PlacementKind,
    off: usize,
    index: &HashMap<NormalDiword, usize>,
) -> Row {
    let poly = substitute(pres.relation(rule), a, b, kind, off);
    row_of_poly(&poly, index)
}

fn row_of_poly(poly: &DiPolynomial, index: &HashMap<NormalDiword, usize>) -> Row {
    let entries: Vec<(usize, Scalar)> = poly
        .terms()
        .rev()
        .map(|(u, c)| (index[u], c.clone()))
        .collect();
    let lead_len = poly.leading().map(|(u, _)| u.len()).unwrap_or(0);
    Row { lead_len, entries }
}

/// Fixed-length words over `q` letters in lexicographic order.
struct Words {
    q: u32,
    current: Option<Vec<u32>>,
}

impl Words {
    fn new(q: usize, len: usize) -> Words {
        Words { q: q as u32, current: Some(vec![0; len]) }
    }
}

impl Iterator for Words {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let word = self.current.take()?;
        let mut next = word.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            next[i] += 1;
            if next[i] < self.q {
                self.current = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(word)
    }
}

/// Exact incremental elimination keyed by leading column. Rationals run
/// through fraction-free integer rows (cross-multiply, then strip the
/// content); prime fields reduce directly.
enum Eliminator {
    Rational(IntEliminator),
    Prime(ModEliminator),
}

impl Eliminator {
    fn new(field: Field) -> Eliminator {
        match field {
            Field::Rational => Eliminator::Rational(IntEliminator::default()),
            Field::Prime(p) => Eliminator::Prime(ModEliminator { p, pivots: HashMap::new() }),
        }
    }

    fn insert(&mut self, entries: &[(usize, Scalar)]) {
        match self {
            Eliminator::Rational(e) => e.insert(to_int_row(entries)),
            Eliminator::Prime(e) => e.insert(
                entries
                    .iter()
                    .map(|(col, c)| match c {
                        Scalar::Residue { value, .. } => (*col, *value),
                        Scalar::Rational(_) => unreachable!("field mismatch"),
                    })
                    .collect(),
            ),
        }
    }

    fn rank(&self) -> usize {
        match self {
            Eliminator::Rational(e) => e.pivots.len(),
            Eliminator::Prime(e) => e.pivots.len(),
        }
    }
}

fn to_int_row(entries: &[(usize, Scalar)]) -> Vec<(usize, BigInt)> {
    // Clear denominators with their lcm; the row spans the same line.
    let mut lcm = BigInt::one();
    for (_, c) in entries {
        let r = c.as_rational().expect("rational row");
        lcm = lcm.lcm(r.denom());
    }
    entries
        .iter()
        .map(|(col, c)| {
            let r = c.as_rational().unwrap();
            (*col, r.numer() * (&lcm / r.denom()))
        })
        .collect()
}

#[derive(Default)]
struct IntEliminator {
    /// Leading column -> content-free row with positive leading entry,
    /// entries sorted by descending column.
    pivots: HashMap<usize, Vec<(usize, BigInt)>>,
}

impl IntEliminator {
    fn insert(&mut self, mut row: Vec<(usize, BigInt)>) {
        normalize_int(&mut row);
        loop {
            let Some((lead, lead_coeff)) = row.first().map(|(c, v)| (*c, v.clone())) else {
                return;
            };
            match self.pivots.get(&lead) {
                None => {
                    self.pivots.insert(lead, row);
                    return;
                }
                Some(pivot) => {
                    let pivot_coeff = pivot[0].1.clone();
                    let g = lead_coeff.gcd(&pivot_coeff);
                    let row_scale = &pivot_coeff / &g;
                    let pivot_scale = &lead_coeff / &g;
                    row = merge_scaled(&row, &row_scale, pivot, &-&pivot_scale);
                    normalize_int(&mut row);
                }
            }
        }
    }
}

fn normalize_int(row: &mut Vec<(usize, BigInt)>) {
    row.retain(|(_, v)| !v.is_zero());
    if row.is_empty() {
        return;
    }
    let mut content = BigInt::zero();
    for (_, v) in row.iter() {
        content = content.gcd(v);
    }
    if row[0].1.is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &content;
        }
    }
}

/// `x·a + y·b` for sparse rows sorted by descending column.
fn merge_scaled(
    a: &[(usize, BigInt)],
    x: &BigInt,
    b: &[(usize, BigInt)],
    y: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 > b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 > a[i].0);
        let (col, v) = if take_a {
            let e = (a[i].0, &a[i].1 * x);
            i += 1;
            e
        } else if take_b {
            let e = (b[j].0, &b[j].1 * y);
            j += 1;
            e
        } else {
            let e = (a[i].0, &a[i].1 * x + &b[j].1 * y);
            i += 1;
            j += 1;
            e
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

struct ModEliminator {
    p: u64,
    /// Leading column -> monic row, entries sorted by descending column.
    pivots: HashMap<usize, Vec<(usize, u64)>>,
}

impl ModEliminator {
    fn insert(&mut self, mut row: Vec<(usize, u64)>) {
        let p = self.p;
        loop {
            row.retain(|(_, v)| *v != 0);
            let Some(&(lead, lead_coeff)) = row.first() else { return };
            match self.pivots.get(&lead) {
                None => {
                    let inv = Field::Prime(p)
                        .integer(lead_coeff as i64)
                        .inv();
                    let inv = match inv {
                        Scalar::Residue { value, .. } => value,
                        Scalar::Rational(_) => unreachable!(),
                    };
                    for (_, v) in row.iter_mut() {
                        *v = ((*v as u128 * inv as u128) % p as u128) as u64;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
                Some(pivot) => {
                    // row -= lead_coeff * pivot (pivot is monic)
                    let mut out = Vec::with_capacity(row.len() + pivot.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < pivot.len() {
                        let take_r = j >= pivot.len()
                            || (i < row.len() && row[i].0 > pivot[j].0);
                        let take_p = i >= row.len()
                            || (j < pivot.len() && pivot[j].0 > row[i].0);
                        let (col, v) = if take_r {
                            let e = row[i];
                            i += 1;
                            e
                        } else if take_p {
                            let scaled =
                                ((lead_coeff as u128 * pivot[j].1 as u128) % p as u128) as u64;
                            let e = (pivot[j].0, (p - scaled) % p);
                            j += 1;
                            e
                        } else {
                            let scaled =
                                ((lead_coeff as u128 * pivot[j].1 as u128) % p as u128) as u64;
                            let e = (row[i].0, (row[i].1 + p - scaled) % p);
                            i += 1;
                            j += 1;
                            e
                        };
                        if v != 0 {
                            out.push((col, v));
                        }
                    }
                    row = out;
                }
            }
        }
    }
}

/// Dimension of the degree-`d` truncation of `D(X|S)`: the diword count
/// minus the rank of all normal S-diword substitutions of leading length at
/// most `d`.
pub fn quotient_dim(pres: &Presentation, d: usize) -> usize {
    *DegreeSlice::build(pres, d).quotient_dims().last().expect("d >= 1")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeAgreement {
    pub degree: usize,
    /// Irreducible diwords of exactly this length.
    pub irr_count: usize,
    /// Quotient dimension contributed by exactly this length.
    pub quotient_dim: usize,
}

impl DegreeAgreement {
    pub fn agrees(&self) -> bool {
        self.irr_count == self.quotient_dim
    }
}

#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub per_degree: Vec<DegreeAgreement>,
    pub agree: bool,
}

/// Compares the rewriting count `|Irr(S)|` with the rank-based quotient
/// dimension at every exact degree up to `d`.
pub fn cross_check(pres: &Presentation, d: usize) -> CrossCheck {
    let dims = DegreeSlice::build(pres, d).quotient_dims();
    let irr = irr_enumerate(pres, d);
    let mut per_degree = Vec::with_capacity(d);
    let mut prev = 0usize;
    for n in 1..=d {
        let irr_count = irr.iter().filter(|u| u.len() == n).count();
        let qd = dims[n - 1] - prev;
        prev = dims[n - 1];
        per_degree.push(DegreeAgreement { degree: n, irr_count, quotient_dim: qd });
    }
    let agree = per_degree.iter().all(DegreeAgreement::agrees);
    CrossCheck { per_degree, agree }
}
