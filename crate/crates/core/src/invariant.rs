//! Common invariant subspaces of a pair of 4×4 matrices.
//!
//! One of the two matrices must be diagonalizable with every eigenspace of
//! dimension at most 2. Any subspace invariant under both then contains an
//! eigenvector of that matrix, and the smallest invariant subspace containing
//! a vector `v` is spanned by the words of length at most 3 in the two
//! matrices applied to `v`. On a 2-dimensional eigenspace we write
//! `v = u1 + t·u2` and a proper span forces a 4×4 minor of that word matrix,
//! a polynomial of degree at most 4 in `t`, to vanish. Its roots in the field
//! are the only candidates besides `u2` itself, so the search is exact and
//! finite over any field.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::{add_vectors, eigen_data, poly_det, scale_vector, Matrix, Subspace, Vector};
use crate::poly::Poly;

/// Smallest subspace containing `v` and invariant under every matrix in `ops`.
pub fn spin(v: &[FieldElement], ops: &[&Matrix]) -> Subspace {
    let field = ops[0].field();
    let n = v.len();
    let mut basis = vec![v.to_vec()];
    let mut span = Subspace::span(field, n, &basis);
    let mut next = 0;
    while next < basis.len() && span.dim() < n {
        let w = basis[next].clone();
        next += 1;
        for op in ops {
            let image = op.mul_vec(&w);
            if !span.contains_vector(&image) {
                basis.push(image);
                span = Subspace::span(field, n, &basis);
            }
        }
    }
    span
}

/// Returns a nonzero proper subspace invariant under both matrices, or
/// `None` when the pair acts irreducibly. A common eigenvector is always
/// preferred, so the witness is 1-dimensional whenever such a vector exists.
pub fn common_invariant_subspace(a: &Matrix, b: &Matrix) -> Result<Option<Subspace>> {
    if !a.is_square() || a.rows() != b.rows() || !b.is_square() {
        return Err(Error::Dimension("common invariant subspace needs two square matrices of one size".into()));
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field(), b.field()));
    }
    let (pivot, other, spaces) = pick_pivot(a, b)?;
    let ops = [pivot, other];

    for space in &spaces {
        if let Some(v) = common_eigenvector(space, other) {
            return Ok(Some(Subspace::span(a.field(), a.rows(), &[v])));
        }
    }
    for space in &spaces {
        if let Some(w) = proper_spin(space, &ops) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

pub fn is_irreducible(a: &Matrix, b: &Matrix) -> Result<bool> {
    Ok(common_invariant_subspace(a, b)?.is_none())
}

fn pick_pivot<'m>(a: &'m Matrix, b: &'m Matrix) -> Result<(&'m Matrix, &'m Matrix, Vec<Subspace>)> {
    let mut largest = 0;
    let mut any_diagonalizable = false;
    for (pivot, other) in [(a, b), (b, a)] {
        let ed = eigen_data(pivot)?;
        if !ed.diagonalizable {
            continue;
        }
        any_diagonalizable = true;
        let max_dim = ed.eigenspaces.iter().map(Subspace::dim).max().unwrap_or(0);
        if max_dim <= 2 {
            return Ok((pivot, other, ed.eigenspaces));
        }
        largest = largest.max(max_dim);
    }
    if any_diagonalizable {
        Err(Error::UnsupportedEigenspace(largest))
    } else {
        Err(Error::NotDiagonalizable)
    }
}

/// Points of a (at most 2-dimensional) space worth testing: `u1 + t·u2` for
/// each root `t` of `constraint`, plus `u2`. A constraint that vanishes
/// identically means every point qualifies, so `u1` alone is returned.
fn line_candidates(u1: &Vector, u2: &Vector, constraint: &Poly) -> Vec<Vector> {
    if constraint.is_zero() {
        return vec![u1.clone()];
    }
    let mut out: Vec<Vector> = constraint
        .roots()
        .into_iter()
        .map(|(t, _)| add_vectors(u1, &scale_vector(u2, &t)))
        .collect();
    out.push(u2.clone());
    out
}

/// Entries `base + t·dir` as degree-1 polynomials.
fn linear_entries(base: &[FieldElement], dir: &[FieldElement]) -> Vec<Poly> {
    base.iter()
        .zip(dir)
        .map(|(c0, c1)| Poly::new(c0.field(), vec![c0.clone(), c1.clone()]))
        .collect()
}

fn common_eigenvector(space: &Subspace, other: &Matrix) -> Option<Vector> {
    let is_eigen = |v: &Vector| Subspace::span(other.field(), v.len(), &[v.clone(), other.mul_vec(v)]).dim() == 1;
    let vs = space.vectors();
    match vs.as_slice() {
        [v] => is_eigen(v).then(|| v.clone()),
        [u1, u2] => {
            let col_v = linear_entries(u1, u2);
            let col_bv = linear_entries(&other.mul_vec(u1), &other.mul_vec(u2));
            let n = u1.len();
            let minor = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| &(&col_v[i] * &col_bv[j]) - &(&col_v[j] * &col_bv[i]))
                .find(|m| !m.is_zero())
                .unwrap_or_else(|| Poly::zero(other.field()));
            line_candidates(u1, u2, &minor).into_iter().find(is_eigen)
        }
        _ => None,
    }
}

/// Every word of length at most 3 in `ops`, applied to `v`.
fn word_images(v: &Vector, ops: &[&Matrix]) -> Vec<Vector> {
    let mut all = vec![v.clone()];
    let mut layer = vec![v.clone()];
    for _ in 0..3 {
        layer = layer
            .iter()
            .flat_map(|w| ops.iter().map(move |op| op.mul_vec(w)))
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn proper_spin(space: &Subspace, ops: &[&Matrix]) -> Option<Subspace> {
    let n = space.ambient();
    let try_vector = |v: &Vector| {
        let s = spin(v, ops);
        (s.dim() < n).then_some(s)
    };
    let vs = space.vectors();
    match vs.as_slice() {
        [v] => try_vector(v),
        [u1, u2] => {
            if let Some(s) = try_vector(u1) {
                return Some(s);
            }
            // u1 spins to everything, so the minor on its pivot columns is a
            // nonzero polynomial (its value at t = 0 is nonzero).
            let field = space.field();
            let base = word_images(u1, ops);
            let dir = word_images(u2, ops);
            let (_, pivots) = Matrix::from_columns(field, n, &base).rref();
            let cols: Vec<Vec<Poly>> = pivots.iter().map(|&c| linear_entries(&base[c], &dir[c])).collect();
            let rows: Vec<Vec<Poly>> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
            let minor = poly_det(field, &rows);
            line_candidates(u1, u2, &minor).iter().find_map(try_vector)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn diagonal_pair_is_reducible() {
        let q = Field::Rationals;
        let a = Matrix::from_i64(q, &[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 3]]);
        let w = common_invariant_subspace(&a, &a).unwrap().unwrap();
        assert_eq!(w.dim(), 1);
    }

    #[test]
    fn two_dimensional_block_without_eigenvector() {
        // A = diag(1,1,2,2); B rotates within each block by x -> [[0,-1],[1,0]]
        // x over Q has no eigenvector, but span{e1,e2} is invariant.
        let q = Field::Rationals;
        let a = Matrix::from_i64(q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]]);
        let b = Matrix::from_i64(q, &[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        let w = common_invariant_subspace(&a, &b).unwrap().unwrap();
        assert_eq!(w.dim(), 2);
        assert!(w.is_invariant(&a) && w.is_invariant(&b));
    }

    #[test]
    fn irreducible_pair_over_q() {
        let q = Field::Rationals;
        let a = Matrix::from_i64(q, &[&[1, 0, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 1, 1, -1]]);
        let b = Matrix::from_i64(q, &[&[1, 1, 2, 0], &[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, -1]]);
        assert!(is_irreducible(&a, &b).unwrap());
    }

    #[test]
    fn scalar_pivot_is_unsupported() {
        let q = Field::Rationals;
        let i = Matrix::identity(q, 4);
        assert!(matches!(common_invariant_subspace(&i, &i), Err(Error::UnsupportedEigenspace(4))));
    }
}
