//! Dense exact matrices, canonical subspaces and eigen-data.
//!
//! Vectors are plain `Vec<FieldElement>` columns. A [`Subspace`] stores its
//! basis in reduced column echelon form, so two subspaces are equal exactly
//! when their stored bases are equal.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Poly;

pub type Vector = Vec<FieldElement>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn diag(field: Field, entries: &[FieldElement]) -> Self {
        let mut m = Matrix::zeros(field, entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length and field.
    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data: Vec<FieldElement> = rows.into_iter().flatten().collect();
        if let Some(bad) = data.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix { field, rows: data.len().checked_div(cols).unwrap_or(0), cols, data })
    }

    /// Small integer literals, mainly for tests and examples.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, rows).expect("rectangular literal")
    }

    pub fn from_columns(field: Field, n: usize, columns: &[Vector]) -> Self {
        let mut m = Matrix::zeros(field, n, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), n, "column length");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: FieldElement) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        Matrix { data: self.data.iter().map(|x| x * c).collect(), ..self.clone() }
    }

    /// `self - c·I`
    pub fn shift(&self, c: &FieldElement) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i) - c;
            m.set(i, i, v);
        }
        m
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field, rhs.field));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + &(a * rhs.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Columns of `self` followed by columns of `rhs`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack row count");
        let mut cols = self.columns();
        cols.extend(rhs.columns());
        Matrix::from_columns(self.field, self.rows, &cols)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let f = m.get(i, c).clone();
                if i == r || f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{v : Mv = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors: Vec<Vector> = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.cols, &vectors)
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(self.field, self.rows, &self.columns())
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(self.field, n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// `det(xI - M)`, expanded with polynomial entries so no division occurs.
    pub fn char_poly(&self) -> Poly {
        assert!(self.is_square(), "characteristic polynomial of a non-square matrix");
        let entries: Vec<Vec<Poly>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let c = Poly::constant(-self.get(i, j));
                        if i == j {
                            &c + &Poly::x(self.field)
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        poly_det(self.field, &entries)
    }

    pub fn pow(&self, k: u32) -> Matrix {
        (0..k).fold(Matrix::identity(self.field, self.rows), |acc, _| &acc * self)
    }

    /// Entries as canonical strings, row by row.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(|x| Value::String(x.to_string())).collect()))
                .collect(),
        )
    }

    pub fn from_json(field: Field, value: &Value) -> Result<Matrix> {
        let bad = || Error::Json("matrix must be an array of rows of strings".into());
        let rows = value.as_array().ok_or_else(bad)?;
        let rows = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| match x {
                        Value::String(s) => field.parse(s),
                        Value::Number(n) => field.parse(&n.to_string()),
                        _ => Err(bad()),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, rows)
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
pub(crate) fn poly_det(field: Field, m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    match n {
        0 => Poly::constant(field.one()),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = Poly::zero(field);
            for (j, entry) in m[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = entry * &poly_det(field, &minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product")
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension");
        Matrix { data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(), ..self.clone() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension");
        Matrix { data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(), ..self.clone() }
    }
}

/// Vector helpers.
pub fn is_zero_vector(v: &[FieldElement]) -> bool {
    v.iter().all(FieldElement::is_zero)
}

pub fn scale_vector(v: &[FieldElement], c: &FieldElement) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn add_vectors(u: &[FieldElement], v: &[FieldElement]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn standard_vector(field: Field, n: usize, k: usize) -> Vector {
    (0..n).map(|i| if i == k { field.one() } else { field.zero() }).collect()
}

/// A subspace of `field^ambient`, stored in reduced column echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { basis: Matrix::zeros(field, ambient, 0) }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace { basis: Matrix::identity(field, ambient) }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vector]) -> Self {
        let rows = Matrix::from_columns(field, ambient, vectors).transpose();
        let (r, pivots) = rows.rref();
        let kept: Vec<Vector> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { basis: Matrix::from_columns(field, ambient, &kept) }
    }

    pub fn field(&self) -> Field {
        self.basis.field
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows
    }

    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.basis.columns()
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> bool {
        let mut all = self.vectors();
        all.push(v.to_vec());
        Matrix::from_columns(self.field(), self.ambient(), &all).rank() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.vectors().iter().all(|v| self.contains_vector(v))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        if self.ambient() != other.ambient() {
            return Err(Error::Dimension(format!(
                "ambient {} vs {}",
                self.ambient(),
                other.ambient()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut all = self.vectors();
        all.extend(other.vectors());
        Ok(Subspace::span(self.field(), self.ambient(), &all))
    }

    /// Zassenhaus: row-reduce `[u | u]` over `[w | 0]`; rows whose left half
    /// vanishes carry the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let (field, n) = (self.field(), self.ambient());
        let mut rows: Vec<Vector> = self.vectors().into_iter().map(|u| [u.clone(), u].concat()).collect();
        rows.extend(other.vectors().into_iter().map(|w| [w, vec![field.zero(); n]].concat()));
        if rows.is_empty() {
            return Ok(Subspace::zero(field, n));
        }
        let (r, pivots) = Matrix::from_rows(field, rows)?.rref();
        let meet: Vec<Vector> = (0..pivots.len())
            .filter(|&i| is_zero_vector(&r.row(i)[..n]))
            .map(|i| r.row(i)[n..].to_vec())
            .collect();
        Ok(Subspace::span(field, n, &meet))
    }

    /// `M·self`
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        let images: Vec<Vector> = self.vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.field(), m.rows(), &images)
    }

    pub fn is_invariant(&self, m: &Matrix) -> bool {
        self.vectors().iter().all(|v| self.contains_vector(&m.mul_vec(v)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineOp {
    Sum,
    Intersect,
}

/// Folds a list of subspaces by sum or intersection. An empty list has no
/// ambient space, so it is rejected.
pub fn subspace_combine(parts: &[Subspace], op: CombineOp) -> Result<Subspace> {
    let (first, rest) = parts
        .split_first()
        .ok_or_else(|| Error::Dimension("no subspaces to combine".into()))?;
    rest.iter().try_fold(first.clone(), |acc, s| match op {
        CombineOp::Sum => acc.sum(s),
        CombineOp::Intersect => acc.intersect(s),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenData {
    /// Distinct eigenvalues in the field, ascending.
    pub eigenvalues: Vec<FieldElement>,
    /// Algebraic multiplicities.
    pub multiplicities: Vec<usize>,
    pub eigenspaces: Vec<Subspace>,
    pub diagonalizable: bool,
}

pub fn eigen_data(m: &Matrix) -> Result<EigenData> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("eigen-data of {}x{}", m.rows, m.cols)));
    }
    let roots = m.char_poly().roots();
    let eigenvalues: Vec<FieldElement> = roots.iter().map(|(r, _)| r.clone()).collect();
    let multiplicities = roots.iter().map(|&(_, k)| k).collect();
    let eigenspaces: Vec<Subspace> = eigenvalues.iter().map(|t| m.shift(t).kernel()).collect();
    let total: usize = eigenspaces.iter().map(Subspace::dim).sum();
    let minimal_splits = eigenvalues
        .iter()
        .fold(Matrix::identity(m.field, m.rows), |acc, t| &acc * &m.shift(t))
        .is_zero();
    Ok(EigenData {
        diagonalizable: total == m.rows && minimal_splits,
        eigenvalues,
        multiplicities,
        eigenspaces,
    })
}

/// `E_i = prod_{j != i} (M - θ_j I) / (θ_i - θ_j)`, after checking that the
/// given values are distinct, are eigenvalues, and annihilate `M`.
pub fn primitive_idempotents(m: &Matrix, eigenvalues: &[FieldElement]) -> Result<Vec<Matrix>> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("idempotents of {}x{}", m.rows, m.cols)));
    }
    for (i, a) in eigenvalues.iter().enumerate() {
        if a.field() != m.field {
            return Err(Error::FieldMismatch(m.field, a.field()));
        }
        if eigenvalues[..i].contains(a) {
            return Err(Error::RepeatedEigenvalue(a.to_string()));
        }
    }
    let shifts: Vec<Matrix> = eigenvalues.iter().map(|t| m.shift(t)).collect();
    let annihilates = shifts
        .iter()
        .fold(Matrix::identity(m.field, m.rows), |acc, s| &acc * s)
        .is_zero();
    if !annihilates || shifts.iter().any(|s| s.rank() == m.rows) {
        return Err(Error::NotDiagonalizable);
    }
    Ok((0..eigenvalues.len())
        .map(|i| {
            (0..eigenvalues.len()).filter(|&j| j != i).fold(Matrix::identity(m.field, m.rows), |acc, j| {
                let denom = (&eigenvalues[i] - &eigenvalues[j]).inv().expect("distinct eigenvalues");
                &acc * &shifts[j].scale(&denom)
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn q(n: i64, d: i64) -> FieldElement {
        Q.ratio(n, d).unwrap()
    }

    fn p0_a() -> Matrix {
        Matrix::from_rows(
            Q,
            vec![
                vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)],
                vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)],
                vec![q(0, 1), q(0, 1), q(0, 1), q(0, 1)],
                vec![q(0, 1), q(1, 1), q(-5, 4), q(-1, 1)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn diagonal_eigen_data() {
        let m = Matrix::diag(Q, &[q(1, 1), q(0, 1), q(0, 1), q(-1, 1)]);
        let ed = eigen_data(&m).unwrap();
        assert_eq!(ed.eigenvalues, vec![q(-1, 1), q(0, 1), q(1, 1)]);
        assert_eq!(ed.multiplicities, vec![1, 2, 1]);
        assert!(ed.diagonalizable);
        let es = primitive_idempotents(&m, &[q(1, 1), q(0, 1), q(-1, 1)]).unwrap();
        assert_eq!(es[0], Matrix::from_i64(Q, &[&[1, 0, 0, 0], &[0; 4], &[0; 4], &[0; 4]]));
        assert_eq!(es[1], Matrix::diag(Q, &[q(0, 1), q(1, 1), q(1, 1), q(0, 1)]));
        assert_eq!(es[2], Matrix::diag(Q, &[q(0, 1), q(0, 1), q(0, 1), q(1, 1)]));
    }

    #[test]
    fn jordan_block_is_not_diagonalizable() {
        let j = Matrix::from_i64(Q, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
        let ed = eigen_data(&j).unwrap();
        assert_eq!(ed.eigenvalues, vec![q(0, 1)]);
        assert_eq!(ed.eigenspaces[0].dim(), 1);
        assert!(!ed.diagonalizable);
        assert!(matches!(primitive_idempotents(&j, &[q(0, 1)]), Err(Error::NotDiagonalizable)));
    }

    #[test]
    fn construct_p0_eigen_data_and_e0() {
        let a = p0_a();
        let ed = eigen_data(&a).unwrap();
        assert_eq!(ed.eigenvalues, vec![q(-1, 1), q(0, 1), q(1, 1)]);
        let dims: Vec<usize> = ed.eigenspaces.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![1, 2, 1]);
        let es = primitive_idempotents(&a, &[q(1, 1), q(0, 1), q(-1, 1)]).unwrap();
        let mut e0 = Matrix::zeros(Q, 4, 4);
        for (i, v) in [q(1, 1), q(1, 1), q(0, 1), q(1, 2)].into_iter().enumerate() {
            e0.set(i, 0, v);
        }
        assert_eq!(es[0], e0);
        assert_eq!(&es[0] * &es[0], es[0]);
        assert!((&es[0] * &es[1]).is_zero());
        let sum = es.iter().skip(1).fold(es[0].clone(), |acc, e| &acc + e);
        assert_eq!(sum, Matrix::identity(Q, 4));
    }

    #[test]
    fn repeated_eigenvalue_rejected() {
        let m = Matrix::identity(Q, 4);
        assert!(matches!(
            primitive_idempotents(&m, &[q(1, 1), q(1, 1)]),
            Err(Error::RepeatedEigenvalue(_))
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Matrix::identity(Q, 4).inverse().unwrap(), Matrix::identity(Q, 4));
        let d = Matrix::diag(Q, &[q(2, 1), q(1, 1), q(1, 1), q(3, 1)]);
        assert_eq!(d.inverse().unwrap(), Matrix::diag(Q, &[q(1, 2), q(1, 1), q(1, 1), q(1, 3)]));
        assert!(matches!(p0_a().inverse(), Err(Error::Singular)));
    }

    #[test]
    fn subspace_sum_and_intersection() {
        let e = |k| standard_vector(Q, 4, k);
        let s1 = Subspace::span(Q, 4, &[e(0)]);
        let s2 = Subspace::span(Q, 4, &[e(1)]);
        let sum = subspace_combine(&[s1.clone(), s2.clone()], CombineOp::Sum).unwrap();
        assert_eq!(sum, Subspace::span(Q, 4, &[e(1), add_vectors(&e(0), &e(1))]));
        assert_eq!(sum.dim(), 2);
        assert_eq!(s1.intersect(&s1).unwrap(), s1);
        assert_eq!(s1.intersect(&s2).unwrap().dim(), 0);
        let plane = Subspace::span(Q, 4, &[add_vectors(&e(0), &e(2)), e(1)]);
        let other = Subspace::span(Q, 4, &[e(0), e(2)]);
        let meet = plane.intersect(&other).unwrap();
        assert_eq!(meet, Subspace::span(Q, 4, &[add_vectors(&e(0), &e(2))]));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Subspace::full(Q, 4);
        let b = Subspace::full(Field::Prime(5), 4);
        assert!(matches!(a.sum(&b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn char_poly_in_characteristic_two() {
        let f2 = Field::Prime(2);
        let m = Matrix::from_i64(f2, &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        // (x+1)^4 over GF(2)
        let cp = m.char_poly();
        assert_eq!(cp.roots(), vec![(f2.one(), 4)]);
        assert!(!eigen_data(&m).unwrap().diagonalizable);
    }

    #[test]
    fn matrix_json_roundtrip() {
        let a = p0_a();
        let v = a.to_json();
        assert_eq!(v[3][2], "-5/4");
        assert_eq!(Matrix::from_json(Q, &v).unwrap(), a);
    }
}
