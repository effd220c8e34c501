//! Polynomials of the free dialgebra: finite linear combinations of normal
//! diwords over an exact field.

use crate::diword::{Alphabet, DiOp, Gen, NormalDiword, Normedness};
use crate::scalar::{is_negative, Field, Scalar};
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

/// A dipolynomial. Terms are kept in a map ordered by the weight ordering,
/// with no zero coefficient stored, so the leading term is the last entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiPolynomial {
    field: Field,
    terms: BTreeMap<NormalDiword, Scalar>,
}

impl DiPolynomial {
    pub fn zero(field: Field) -> DiPolynomial {
        DiPolynomial { field, terms: BTreeMap::new() }
    }

    pub fn monomial(field: Field, diword: NormalDiword, coeff: Scalar) -> DiPolynomial {
        let mut p = DiPolynomial::zero(field);
        p.add_term(diword, coeff);
        p
    }

    /// The generator `g` as a polynomial (a single length-one diword).
    pub fn generator(field: Field, g: Gen) -> DiPolynomial {
        DiPolynomial::monomial(field, NormalDiword::single(g), field.one())
    }

    pub fn from_terms<I>(field: Field, terms: I) -> DiPolynomial
    where
        I: IntoIterator<Item = (NormalDiword, Scalar)>,
    {
        let mut p = DiPolynomial::zero(field);
        for (u, c) in terms {
            p.add_term(u, c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending weight order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NormalDiword, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: &NormalDiword) -> Option<&Scalar> {
        self.terms.get(u)
    }

    /// Adds `coeff·diword`, dropping the term if the total cancels.
    pub fn add_term(&mut self, diword: NormalDiword, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(diword) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// The maximal diword of the support with its coefficient; `None` for the
    /// zero polynomial, which has no leading term.
    pub fn leading(&self) -> Option<(&NormalDiword, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Length of the leading diword.
    pub fn degree(&self) -> Option<usize> {
        self.leading().map(|(u, _)| u.len())
    }

    /// Normedness across all monomials; `None` for the zero polynomial.
    pub fn normedness(&self) -> Option<Normedness> {
        if self.is_zero() {
            return None;
        }
        let mut left = true;
        let mut right = true;
        for u in self.terms.keys() {
            left &= u.center() == u.len() - 1;
            right &= u.center() == 0;
        }
        Some(Normedness::from_flags(left, right))
    }

    /// Bilinear extension of the diword product; coefficients of colliding
    /// result diwords accumulate.
    pub fn product(&self, op: DiOp, rhs: &DiPolynomial) -> DiPolynomial {
        assert!(self.field == rhs.field, "field mismatch in product");
        let mut out = DiPolynomial::zero(self.field);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.product(op, v), a * b);
            }
        }
        out
    }

    /// The Leibniz bracket induced by the two products: `self ⊣ rhs − rhs ⊢ self`.
    pub fn leibniz_bracket(&self, rhs: &DiPolynomial) -> DiPolynomial {
        self.product(DiOp::Dashv, rhs) - rhs.product(DiOp::Vdash, self)
    }

    pub fn scaled(&self, c: &Scalar) -> DiPolynomial {
        if c.is_zero() {
            return DiPolynomial::zero(self.field);
        }
        DiPolynomial {
            field: self.field,
            terms: self.terms.iter().map(|(u, a)| (u.clone(), a * c)).collect(),
        }
    }

    /// Rescales so the leading coefficient is one. Panics on zero.
    pub fn monic(&self) -> DiPolynomial {
        let (_, c) = self.leading().expect("monic of zero polynomial");
        if c.is_one() {
            self.clone()
        } else {
            self.scaled(&c.inv())
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_one())
    }

    /// Renders terms in descending order, e.g. `a ^a - ^a a + ^b`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (u, c)) in self.terms.iter().rev().enumerate() {
            let neg = is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push_str("- ");
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs} "));
            }
            out.push_str(&u.render(alphabet));
        }
        out
    }
}

impl Add for &DiPolynomial {
    type Output = DiPolynomial;
    fn add(self, rhs: &DiPolynomial) -> DiPolynomial {
        assert!(self.field == rhs.field, "field mismatch in sum");
        let mut out = self.clone();
        for (u, c) in &rhs.terms {
            out.add_term(u.clone(), c.clone());
        }
        out
    }
}

impl Sub for &DiPolynomial {
    type Output = DiPolynomial;
    fn sub(self, rhs: &DiPolynomial) -> DiPolynomial {
        assert!(self.field == rhs.field, "field mismatch in difference");
        let mut out = self.clone();
        for (u, c) in &rhs.terms {
            out.add_term(u.clone(), -c);
        }
        out
    }
}

impl Add for DiPolynomial {
    type Output = DiPolynomial;
    fn add(self, rhs: DiPolynomial) -> DiPolynomial {
        &self + &rhs
    }
}

impl Sub for DiPolynomial {
    type Output = DiPolynomial;
    fn sub(self, rhs: DiPolynomial) -> DiPolynomial {
        &self - &rhs
    }
}

impl Neg for &DiPolynomial {
    type Output = DiPolynomial;
    fn neg(self) -> DiPolynomial {
        DiPolynomial {
            field: self.field,
            terms: self.terms.iter().map(|(u, c)| (u.clone(), -c)).collect(),
        }
    }
}
