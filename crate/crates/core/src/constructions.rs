//! Builders for the four application presentations: enveloping dialgebras of
//! Leibniz algebras, bar unit extensions, free products of dialgebras given
//! by multiplication tables, and Clifford dialgebras.

use crate::diword::{Alphabet, DiOp, Gen, NormalDiword};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::DiPolynomial;
use crate::rewrite::Presentation;
use crate::scalar::{Field, Scalar};

/// Outcome of an exact structure check; `problems` lists every violated
/// identity or invariant.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub problems: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }

    fn push(&mut self, msg: String) {
        self.problems.push(msg);
    }
}

/// The sum `Σ v_k · x_{offset+k}` as a dipolynomial of length-one diwords.
fn vector_poly(field: Field, v: &[Scalar], offset: usize) -> DiPolynomial {
    let mut p = DiPolynomial::zero(field);
    for (k, c) in v.iter().enumerate() {
        p.add_term(NormalDiword::single((offset + k) as Gen), c.clone());
    }
    p
}

fn unit_vector(field: Field, n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[k] = field.one();
    v
}

// ---------------------------------------------------------------------------
// Leibniz algebras and their enveloping dialgebras

/// A finite-dimensional Leibniz algebra given by structure constants over an
/// ordered basis, together with the marked subset `I₀` whose span must equal
/// the subspace generated by squares and symmetrized brackets.
#[derive(Clone, Debug)]
pub struct LeibnizAlgebra {
    alphabet: Alphabet,
    field: Field,
    i0: Vec<bool>,
    /// `bracket[i][j]` holds the coordinates of `{x_i, x_j}`.
    bracket: Vec<Vec<Vec<Scalar>>>,
}

impl LeibnizAlgebra {
    pub fn new(
        names: Vec<String>,
        field: Field,
        i0: &[usize],
        bracket: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<LeibnizAlgebra> {
        let alphabet = Alphabet::new(names)?;
        let n = alphabet.len();
        if bracket.len() != n || bracket.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("bracket table must be n x n"));
        }
        for row in &bracket {
            for v in row {
                if v.len() != n {
                    return Err(Error::invalid("bracket values must have n coordinates"));
                }
            }
        }
        let mut flags = vec![false; n];
        for &k in i0 {
            if k >= n {
                return Err(Error::invalid("I0 index out of range"));
            }
            flags[k] = true;
        }
        Ok(LeibnizAlgebra { alphabet, field, i0: flags, bracket })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.alphabet.len()
    }

    pub fn i0_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.i0[k]).collect()
    }

    /// `{v, w}` for coordinate vectors, by bilinearity.
    pub fn bracket_vec(&self, v: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if w[j].is_zero() {
                    continue;
                }
                let c = &v[i] * &w[j];
                for k in 0..n {
                    out[k] = &out[k] + &(&self.bracket[i][j][k] * &c);
                }
            }
        }
        out
    }

    /// The spanning set of `L₀`: all squares `{x_i,x_i}` and symmetrized
    /// brackets `{x_i,x_j} + {x_j,x_i}`.
    fn l0_generators(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        let mut gens = Vec::new();
        for i in 0..n {
            gens.push(self.bracket[i][i].clone());
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut v = self.bracket[i][j].clone();
                for (a, b) in v.iter_mut().zip(&self.bracket[j][i]) {
                    *a = &*a + b;
                }
                gens.push(v);
            }
        }
        gens
    }

    /// Marker suggestion: the pivot coordinates of the echelonized spanning
    /// set of `L₀`. Valid markers exist only when that span is spanned by
    /// basis vectors, which `check` verifies.
    pub fn suggest_i0(&self) -> Vec<usize> {
        linalg::rref(&self.l0_generators(), self.field)
            .iter()
            .map(|r| r.iter().position(|c| !c.is_zero()).unwrap())
            .collect()
    }

    /// Verifies the Leibniz identity on all basis triples, the span condition
    /// for the `I₀` markers, and the two consequences `{x_j, x_{i0}} = 0` and
    /// `{x_{i0}, x_j} ∈ L₀`.
    pub fn check(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.dim();
        let basis: Vec<Vec<Scalar>> = (0..n).map(|k| unit_vector(self.field, n, k)).collect();
        'triples: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    // {{a,b},c} = {a,{b,c}} + {{a,c},b}
                    let lhs = self.bracket_vec(&self.bracket[i][j], &basis[k]);
                    let r1 = self.bracket_vec(&basis[i], &self.bracket[j][k]);
                    let r2 = self.bracket_vec(&self.bracket[i][k], &basis[j]);
                    let sum: Vec<Scalar> =
                        r1.iter().zip(&r2).map(|(a, b)| a + b).collect();
                    if lhs != sum {
                        report.push(format!(
                            "Leibniz identity fails on basis triple ({}, {}, {})",
                            self.alphabet.name(i as Gen),
                            self.alphabet.name(j as Gen),
                            self.alphabet.name(k as Gen)
                        ));
                        break 'triples;
                    }
                }
            }
        }
        // span{ {a,a}, {a,b}+{b,a} } must equal the span of the marked basis
        // vectors: every generator supported on I0, and full rank there.
        let gens = self.l0_generators();
        let marked: Vec<usize> = self.i0_indices();
        for g in &gens {
            for (k, c) in g.iter().enumerate() {
                if !c.is_zero() && !self.i0[k] {
                    report.push(format!(
                        "L0 spans the unmarked basis vector {}",
                        self.alphabet.name(k as Gen)
                    ));
                }
            }
        }
        let rank = linalg::rank(&gens, self.field);
        if rank != marked.len() {
            report.push(format!(
                "L0 has rank {rank} but {} basis vectors are marked",
                marked.len()
            ));
        }
        if report.is_valid() {
            for j in 0..n {
                for &i0 in &marked {
                    if !linalg::vec_is_zero(&self.bracket[j][i0]) {
                        report.push(format!(
                            "{{{}, {}}} is nonzero",
                            self.alphabet.name(j as Gen),
                            self.alphabet.name(i0 as Gen)
                        ));
                    }
                    if self.bracket[i0][j].iter().enumerate().any(|(k, c)| !c.is_zero() && !self.i0[k]) {
                        report.push(format!(
                            "{{{}, {}}} leaves L0",
                            self.alphabet.name(i0 as Gen),
                            self.alphabet.name(j as Gen)
                        ));
                    }
                }
            }
        }
        report
    }

    fn bracket_poly(&self, i: usize, j: usize) -> DiPolynomial {
        vector_poly(self.field, &self.bracket[i][j], 0)
    }

    /// The enveloping presentation of the algebra: relation families (a)-(e).
    /// With `reduced`, family (a) is restricted to `j ∉ I₀` and families
    /// (b), (d) to `i, j ∉ I₀`, which yields the reduced basis.
    pub fn enveloping(&self, reduced: bool) -> Result<Presentation> {
        let report = self.check();
        if !report.is_valid() {
            return Err(Error::invalid(format!(
                "not a valid Leibniz algebra: {}",
                report.problems.join("; ")
            )));
        }
        let n = self.dim();
        let field = self.field;
        let gen = |k: usize| DiPolynomial::generator(field, k as Gen);
        let free = |k: usize| !self.i0[k]; // k in I \ I0
        let mut relations = Vec::new();
        // (a) f_{ji} = x_j |- x_i - x_i -| x_j + {x_i,x_j}
        for j in 0..n {
            if reduced && !free(j) {
                continue;
            }
            for i in 0..n {
                let f = gen(j).product(DiOp::Vdash, &gen(i))
                    - gen(i).product(DiOp::Dashv, &gen(j))
                    + self.bracket_poly(i, j);
                relations.push(f);
            }
        }
        // (b) f_{ji|-t} = x_j |- x_i |- x_t - x_i |- x_j |- x_t + {x_i,x_j} |- x_t
        for j in 0..n {
            for i in 0..j {
                if reduced && !(free(i) && free(j)) {
                    continue;
                }
                for t in 0..n {
                    let f = gen(j)
                        .product(DiOp::Vdash, &gen(i))
                        .product(DiOp::Vdash, &gen(t))
                        - gen(i)
                            .product(DiOp::Vdash, &gen(j))
                            .product(DiOp::Vdash, &gen(t))
                        + self.bracket_poly(i, j).product(DiOp::Vdash, &gen(t));
                    relations.push(f);
                }
            }
        }
        // (c) h_{i0|-t} = x_{i0} |- x_t
        for i0 in 0..n {
            if free(i0) {
                continue;
            }
            for t in 0..n {
                relations.push(gen(i0).product(DiOp::Vdash, &gen(t)));
            }
        }
        // (d) f_{t-|ji} = x_t -| x_j -| x_i - x_t -| x_i -| x_j + x_t -| {x_i,x_j}
        for j in 0..n {
            for i in 0..j {
                if reduced && !(free(i) && free(j)) {
                    continue;
                }
                for t in 0..n {
                    let f = gen(t)
                        .product(DiOp::Dashv, &gen(j))
                        .product(DiOp::Dashv, &gen(i))
                        - gen(t)
                            .product(DiOp::Dashv, &gen(i))
                            .product(DiOp::Dashv, &gen(j))
                        + gen(t).product(DiOp::Dashv, &self.bracket_poly(i, j));
                    relations.push(f);
                }
            }
        }
        // (e) h_{t-|i0} = x_t -| x_{i0}
        for i0 in 0..n {
            if free(i0) {
                continue;
            }
            for t in 0..n {
                relations.push(gen(t).product(DiOp::Dashv, &gen(i0)));
            }
        }
        Presentation::new(self.alphabet.clone(), field, relations)
    }

    /// Number of enveloping basis elements of length exactly `d`:
    /// `|I| · C(d-2+r, d-1)` with `r = |I \ I₀|` — a dotted head letter times
    /// a nondecreasing tail over the unmarked generators.
    pub fn pbw_dimension(&self, d: usize) -> u64 {
        assert!(d >= 1);
        let r = (0..self.dim()).filter(|&k| !self.i0[k]).count() as u64;
        self.dim() as u64 * multiset_count(r, (d - 1) as u64)
    }
}

/// Number of nondecreasing sequences of length `k` over `r` symbols.
fn multiset_count(r: u64, k: u64) -> u64 {
    if k == 0 {
        return 1;
    }
    if r == 0 {
        return 0;
    }
    // C(k + r - 1, k)
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (r + i) / (i + 1);
    }
    acc
}

// ---------------------------------------------------------------------------
// Multiplication tables, bar extensions, free products

/// A finite-dimensional dialgebra given by structure constants for both
/// products over an ordered basis.
#[derive(Clone, Debug)]
pub struct MultiplicationTable {
    alphabet: Alphabet,
    field: Field,
    vdash: Vec<Vec<Vec<Scalar>>>,
    dashv: Vec<Vec<Vec<Scalar>>>,
}

impl MultiplicationTable {
    pub fn new(
        names: Vec<String>,
        field: Field,
        vdash: Vec<Vec<Vec<Scalar>>>,
        dashv: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<MultiplicationTable> {
        let alphabet = Alphabet::new(names)?;
        let n = alphabet.len();
        for table in [&vdash, &dashv] {
            if table.len() != n
                || table.iter().any(|r| r.len() != n)
                || table.iter().flatten().any(|v| v.len() != n)
            {
                return Err(Error::invalid("product tables must be n x n with n coordinates"));
            }
        }
        Ok(MultiplicationTable { alphabet, field, vdash, dashv })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.alphabet.len()
    }

    fn table(&self, op: DiOp) -> &Vec<Vec<Vec<Scalar>>> {
        match op {
            DiOp::Vdash => &self.vdash,
            DiOp::Dashv => &self.dashv,
        }
    }

    /// Bilinear extension of a product to coordinate vectors.
    pub fn product_vec(&self, op: DiOp, v: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let table = self.table(op);
        let mut out = vec![self.field.zero(); n];
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if w[j].is_zero() {
                    continue;
                }
                let c = &v[i] * &w[j];
                for k in 0..n {
                    out[k] = &out[k] + &(&table[i][j][k] * &c);
                }
            }
        }
        out
    }

    /// Verifies the five dialgebra identities on all basis triples.
    pub fn check(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.dim();
        let basis: Vec<Vec<Scalar>> = (0..n).map(|k| unit_vector(self.field, n, k)).collect();
        let name = |k: usize| self.alphabet.name(k as Gen);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let checks: [(&str, Vec<Scalar>, Vec<Scalar>); 5] = [
                        (
                            "|- is associative",
                            self.product_vec(DiOp::Vdash, &self.vdash[i][j], &basis[k]),
                            self.product_vec(DiOp::Vdash, &basis[i], &self.vdash[j][k]),
                        ),
                        (
                            "-| is associative",
                            self.product_vec(DiOp::Dashv, &self.dashv[i][j], &basis[k]),
                            self.product_vec(DiOp::Dashv, &basis[i], &self.dashv[j][k]),
                        ),
                        (
                            "a -| (b |- c) = a -| b -| c",
                            self.product_vec(DiOp::Dashv, &basis[i], &self.vdash[j][k]),
                            self.product_vec(DiOp::Dashv, &self.dashv[i][j], &basis[k]),
                        ),
                        (
                            "(a -| b) |- c = a |- b |- c",
                            self.product_vec(DiOp::Vdash, &self.dashv[i][j], &basis[k]),
                            self.product_vec(DiOp::Vdash, &basis[i], &self.vdash[j][k]),
                        ),
                        (
                            "a |- (b -| c) = (a |- b) -| c",
                            self.product_vec(DiOp::Vdash, &basis[i], &self.dashv[j][k]),
                            self.product_vec(DiOp::Dashv, &self.vdash[i][j], &basis[k]),
                        ),
                    ];
                    for (label, lhs, rhs) in checks {
                        if lhs != rhs {
                            report.push(format!(
                                "{label} fails on ({}, {}, {})",
                                name(i),
                                name(j),
                                name(k)
                            ));
                        }
                    }
                }
            }
        }
        report.problems.dedup();
        report
    }

    /// The default ideal generators `e_i -| e_j − e_i |- e_j`.
    pub fn bar_generators(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v: Vec<Scalar> = self.dashv[i][j]
                    .iter()
                    .zip(&self.vdash[i][j])
                    .map(|(a, b)| a - b)
                    .collect();
                out.push(v);
            }
        }
        out
    }

    /// Echelonized basis of the smallest subspace containing `generators`
    /// that is stable under left and right multiplication by basis elements
    /// with both products.
    pub fn ideal_closure(&self, generators: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        let basis: Vec<Vec<Scalar>> = (0..n).map(|k| unit_vector(self.field, n, k)).collect();
        let mut span = linalg::rref(generators, self.field);
        loop {
            let mut fresh = Vec::new();
            for v in &span {
                for b in &basis {
                    for op in DiOp::BOTH {
                        for w in [self.product_vec(op, b, v), self.product_vec(op, v, b)] {
                            if !linalg::in_span(&w, &span) {
                                fresh.push(w);
                            }
                        }
                    }
                }
            }
            if fresh.is_empty() {
                return span;
            }
            let mut rows = span;
            rows.extend(fresh);
            span = linalg::rref(&rows, self.field);
        }
    }

    /// Changes to the adapted basis: the echelon basis of `A` first, then the
    /// complementary unit vectors, with the table re-expressed and the
    /// consequences `{x_t -| x_{i0}} = 0`, `{x_{i0} |- x_t} = 0` verified.
    fn adapted(&self) -> Result<(MultiplicationTable, usize)> {
        let n = self.dim();
        let field = self.field;
        let a_basis = self.ideal_closure(&self.bar_generators());
        let a_dim = a_basis.len();
        let pivots: Vec<usize> = a_basis
            .iter()
            .map(|r| r.iter().position(|c| !c.is_zero()).unwrap())
            .collect();
        let mut new_basis = a_basis.clone();
        for k in 0..n {
            if !pivots.contains(&k) {
                new_basis.push(unit_vector(field, n, k));
            }
        }
        // Names: keep the original name when the adapted vector is a unit
        // vector, otherwise synthesize one.
        let mut names: Vec<String> = Vec::with_capacity(n);
        for (idx, v) in new_basis.iter().enumerate() {
            let unit = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect::<Vec<_>>();
            let name = match unit.as_slice() {
                [(k, c)] if c.is_one() => self.alphabet.name(*k as Gen).to_string(),
                _ => format!("a{}", idx + 1),
            };
            let mut name = name;
            while names.contains(&name) {
                name.push('_');
            }
            names.push(name);
        }
        // Matrix with the new basis vectors as columns; its inverse maps old
        // coordinates to new ones.
        let z: Vec<Vec<Scalar>> = (0..n)
            .map(|row| (0..n).map(|col| new_basis[col][row].clone()).collect())
            .collect();
        let z_inv = linalg::invert(&z, field)
            .ok_or_else(|| Error::invalid("adapted basis is singular"))?;
        let recompute = |op: DiOp| -> Vec<Vec<Vec<Scalar>>> {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let old = self.product_vec(op, &new_basis[i], &new_basis[j]);
                            linalg::mat_apply(&z_inv, &old)
                        })
                        .collect()
                })
                .collect()
        };
        let vdash = recompute(DiOp::Vdash);
        let dashv = recompute(DiOp::Dashv);
        let adapted = MultiplicationTable::new(names, field, vdash, dashv)?;
        // The bar-extension relations assume these vanish in the adapted
        // basis; any violation is an inconsistent input table.
        for t in 0..n {
            for i0 in 0..a_dim {
                if !linalg::vec_is_zero(&adapted.dashv[t][i0]) {
                    return Err(Error::invalid(format!(
                        "inconsistent table: {} -| {} is nonzero in the adapted basis",
                        adapted.alphabet.name(t as Gen),
                        adapted.alphabet.name(i0 as Gen)
                    )));
                }
                if !linalg::vec_is_zero(&adapted.vdash[i0][t]) {
                    return Err(Error::invalid(format!(
                        "inconsistent table: {} |- {} is nonzero in the adapted basis",
                        adapted.alphabet.name(i0 as Gen),
                        adapted.alphabet.name(t as Gen)
                    )));
                }
            }
        }
        Ok((adapted, a_dim))
    }

    /// Table relations `x_i ∘ x_j − {x_i ∘ x_j}` for both products, over an
    /// alphabet whose generator indices start at `offset`.
    fn table_relations(&self, offset: usize) -> Vec<DiPolynomial> {
        let n = self.dim();
        let field = self.field;
        let gen = |k: usize| DiPolynomial::generator(field, (offset + k) as Gen);
        let mut out = Vec::new();
        for op in DiOp::BOTH {
            for i in 0..n {
                for j in 0..n {
                    let val = vector_poly(field, &self.table(op)[i][j], offset);
                    out.push(gen(i).product(op, &gen(j)) - val);
                }
            }
        }
        out
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.check();
        if !report.is_valid() {
            return Err(Error::invalid(format!(
                "not a dialgebra: {}",
                report.problems.join("; ")
            )));
        }
        Ok(())
    }

    /// The bar unit extension: the adapted table relations together with
    /// `e |- y − y`, `y -| e − y` for all `y`, and `e -| x₀`, `x₀ |- e` for
    /// the `A`-part generators; `e` is the greatest generator.
    pub fn bar_extension(&self) -> Result<Presentation> {
        self.require_valid()?;
        let (adapted, a_dim) = self.adapted()?;
        let n = adapted.dim();
        let field = adapted.field;
        let mut names = adapted.alphabet.names().to_vec();
        if names.iter().any(|n| n == "e") {
            return Err(Error::invalid("generator name `e` is reserved for the bar unit"));
        }
        names.push("e".to_string());
        let alphabet = Alphabet::new(names)?;
        let e = n as Gen;
        let gen_e = DiPolynomial::generator(field, e);
        let mut relations = adapted.table_relations(0);
        for y in 0..=n {
            let gen_y = DiPolynomial::generator(field, y as Gen);
            relations.push(gen_e.product(DiOp::Vdash, &gen_y) - gen_y.clone());
            relations.push(gen_y.product(DiOp::Dashv, &gen_e) - gen_y);
        }
        for i0 in 0..a_dim {
            let x0 = DiPolynomial::generator(field, i0 as Gen);
            relations.push(gen_e.product(DiOp::Dashv, &x0));
            relations.push(x0.product(DiOp::Vdash, &gen_e));
        }
        Presentation::new(alphabet, field, relations)
    }
}

/// The free product presentation of two dialgebras given by multiplication
/// tables, over the adapted bases with every `X` generator below every `Y`
/// generator.
pub fn free_product(
    t1: &MultiplicationTable,
    t2: &MultiplicationTable,
) -> Result<Presentation> {
    if t1.field != t2.field {
        return Err(Error::invalid("free product factors must share a field"));
    }
    t1.require_valid()?;
    t2.require_valid()?;
    let (x, a1_dim) = t1.adapted()?;
    let (y, a2_dim) = t2.adapted()?;
    let nx = x.dim();
    let ny = y.dim();
    let field = x.field;
    let mut names = x.alphabet.names().to_vec();
    for n in y.alphabet.names() {
        if names.contains(n) {
            return Err(Error::invalid(format!(
                "generator name `{n}` appears in both factors"
            )));
        }
        names.push(n.clone());
    }
    let alphabet = Alphabet::new(names)?;
    let gen = |k: usize| DiPolynomial::generator(field, k as Gen);
    // 1-4: both multiplication tables.
    let mut relations = x.table_relations(0);
    relations.extend(y.table_relations(nx));
    // 5: x_{i0} |- y_l and 6: y_l -| x_{i0}
    for i0 in 0..a1_dim {
        for l in 0..ny {
            relations.push(gen(i0).product(DiOp::Vdash, &gen(nx + l)));
        }
    }
    for l in 0..ny {
        for i0 in 0..a1_dim {
            relations.push(gen(nx + l).product(DiOp::Dashv, &gen(i0)));
        }
    }
    // 7: y_{l0} |- x_i and 8: x_i -| y_{l0}
    for l0 in 0..a2_dim {
        for i in 0..nx {
            relations.push(gen(nx + l0).product(DiOp::Vdash, &gen(i)));
        }
    }
    for i in 0..nx {
        for l0 in 0..a2_dim {
            relations.push(gen(i).product(DiOp::Dashv, &gen(nx + l0)));
        }
    }
    Presentation::new(alphabet, field, relations)
}

// ---------------------------------------------------------------------------
// Clifford dialgebras

/// A symmetric bilinear form over a field of characteristic other than two.
#[derive(Clone, Debug)]
pub struct SymmetricForm {
    field: Field,
    matrix: Vec<Vec<Scalar>>,
}

impl SymmetricForm {
    pub fn new(field: Field, matrix: Vec<Vec<Scalar>>) -> Result<SymmetricForm> {
        if field.characteristic() == 2 {
            return Err(Error::invalid(
                "Clifford dialgebras require characteristic != 2",
            ));
        }
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("form matrix must be square and nonempty"));
        }
        for i in 0..n {
            for j in 0..n {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::invalid("form matrix must be symmetric"));
                }
            }
        }
        Ok(SymmetricForm { field, matrix })
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Scalar::is_zero)
    }

    /// The Clifford dialgebra presentation on `x_1 < … < x_n < e`. For the
    /// zero form the bar-unit coupling relation `x_i |- e − e -| x_i` is left
    /// out (relations 1-7 only).
    pub fn clifford(&self) -> Result<Presentation> {
        let n = self.n();
        let field = self.field;
        let names: Vec<String> = (1..=n)
            .map(|i| format!("x{i}"))
            .chain(std::iter::once("e".to_string()))
            .collect();
        let alphabet = Alphabet::new(names)?;
        let e = n;
        let gen = |k: usize| DiPolynomial::generator(field, k as Gen);
        let two = field.integer(2);
        let a = |i: usize, j: usize| &self.matrix[i][j];
        let mut relations = Vec::new();
        // 1. x_i |- x_j + x_j -| x_i - 2 a_ij e
        for i in 0..n {
            for j in 0..n {
                let f = gen(i).product(DiOp::Vdash, &gen(j))
                    + gen(j).product(DiOp::Dashv, &gen(i))
                    - gen(e).scaled(&(&two * a(i, j)));
                relations.push(f);
            }
        }
        // 2. e |- y - y and 3. y -| e - y
        for y in 0..=n {
            relations.push(gen(e).product(DiOp::Vdash, &gen(y)) - gen(y));
        }
        for y in 0..=n {
            relations.push(gen(y).product(DiOp::Dashv, &gen(e)) - gen(y));
        }
        // 4./5. y -| x_i -| x_j + y -| x_j -| x_i - 2 a_ij y   (i > j)
        //       y -| x_i -| x_i - a_ii y
        for y in 0..=n {
            for i in 0..n {
                for j in 0..i {
                    let f = gen(y)
                        .product(DiOp::Dashv, &gen(i))
                        .product(DiOp::Dashv, &gen(j))
                        + gen(y)
                            .product(DiOp::Dashv, &gen(j))
                            .product(DiOp::Dashv, &gen(i))
                        - gen(y).scaled(&(&two * a(i, j)));
                    relations.push(f);
                }
                let f = gen(y)
                    .product(DiOp::Dashv, &gen(i))
                    .product(DiOp::Dashv, &gen(i))
                    - gen(y).scaled(a(i, i));
                relations.push(f);
            }
        }
        // 6./7. the left normed mirrors
        for y in 0..=n {
            for i in 0..n {
                for j in 0..i {
                    let f = gen(i)
                        .product(DiOp::Vdash, &gen(j))
                        .product(DiOp::Vdash, &gen(y))
                        + gen(j)
                            .product(DiOp::Vdash, &gen(i))
                            .product(DiOp::Vdash, &gen(y))
                        - gen(y).scaled(&(&two * a(i, j)));
                    relations.push(f);
                }
                let f = gen(i)
                    .product(DiOp::Vdash, &gen(i))
                    .product(DiOp::Vdash, &gen(y))
                    - gen(y).scaled(a(i, i));
                relations.push(f);
            }
        }
        // 8. x_i |- e - e -| x_i, only for a nonzero form
        if !self.is_zero() {
            for i in 0..n {
                relations.push(
                    gen(i).product(DiOp::Vdash, &gen(e)) - gen(e).product(DiOp::Dashv, &gen(i)),
                );
            }
        }
        Presentation::new(alphabet, field, relations)
    }
}
