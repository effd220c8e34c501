//! Small dense exact linear algebra over a coefficient field: echelon
//! bases, rank, and inversion. Used by the presentation builders.

use crate::scalar::{Field, Scalar};

pub(crate) fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub(crate) fn vec_sub_scaled(v: &mut [Scalar], w: &[Scalar], c: &Scalar) {
    for (a, b) in v.iter_mut().zip(w) {
        *a = &*a - &(b * c);
    }
}

fn first_nonzero(v: &[Scalar]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

/// Reduced row echelon basis of the span of `rows`: pivot columns strictly
/// increasing and preferring earlier coordinates, pivot entries one, pivot
/// columns cleared in all other rows.
pub(crate) fn rref(rows: &[Vec<Scalar>], _field: Field) -> Vec<Vec<Scalar>> {
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for row in rows {
        let mut row = row.clone();
        reduce_mut(&mut row, &basis);
        if let Some(pivot) = first_nonzero(&row) {
            let inv = row[pivot].inv();
            for c in row.iter_mut() {
                *c = &*c * &inv;
            }
            for b in basis.iter_mut() {
                if !b[pivot].is_zero() {
                    let c = b[pivot].clone();
                    vec_sub_scaled(b, &row, &c);
                }
            }
            basis.push(row);
        }
    }
    basis.sort_by_key(|r| first_nonzero(r).unwrap());
    basis
}

/// Fully reduces `v` against an echelonized basis in place.
pub(crate) fn reduce_mut(v: &mut [Scalar], basis: &[Vec<Scalar>]) {
    for b in basis {
        let pivot = first_nonzero(b).expect("echelon rows are nonzero");
        if !v[pivot].is_zero() {
            let c = (&v[pivot]).div(&b[pivot]);
            vec_sub_scaled(v, b, &c);
        }
    }
}

/// Whether `v` lies in the span of an echelonized basis.
pub(crate) fn in_span(v: &[Scalar], basis: &[Vec<Scalar>]) -> bool {
    let mut v = v.to_vec();
    reduce_mut(&mut v, basis);
    vec_is_zero(&v)
}

pub(crate) fn rank(rows: &[Vec<Scalar>], field: Field) -> usize {
    rref(rows, field).len()
}

/// Inverse of a square matrix given by rows, or `None` when singular.
pub(crate) fn invert(rows: &[Vec<Scalar>], field: Field) -> Option<Vec<Vec<Scalar>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r.len(), n, "matrix must be square");
        let mut row = r.clone();
        for j in 0..n {
            row.push(if i == j { field.one() } else { field.zero() });
        }
        aug.push(row);
    }
    let ech = rref(&aug, field);
    if ech.len() < n {
        return None;
    }
    // Left block must be reducible to the identity.
    let mut inv = vec![vec![field.zero(); n]; n];
    for row in &ech {
        let pivot = first_nonzero(row)?;
        if pivot >= n {
            return None;
        }
        for j in 0..n {
            inv[pivot][j] = row[n + j].clone();
        }
    }
    Some(inv)
}

/// Applies a matrix (rows) to a column vector.
pub(crate) fn mat_apply(m: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            let mut acc = row[0].field().zero();
            for (a, b) in row.iter().zip(v) {
                acc = &acc + &(a * b);
            }
            acc
        })
        .collect()
}
