//! Seeded random parameter arrays and matrix pairs for tests, benchmarks and the demo.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::shape121::{admissible, ParameterArray};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform over GF(p); over the rationals a fraction `n/d` with `|n| ≤ 9`, `1 ≤ d ≤ 4`.
pub fn random_element<R: Rng>(field: Field, rng: &mut R) -> FieldElement {
    match field {
        Field::Rationals => {
            let n = rng.gen_range(-9..=9);
            let d = rng.gen_range(1..=4);
            field.ratio(n, d).expect("nonzero denominator")
        }
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

fn random_nonzero<R: Rng>(field: Field, rng: &mut R) -> FieldElement {
    loop {
        let x = random_element(field, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Three pairwise distinct elements. Needs at least three field elements.
fn random_distinct<R: Rng>(field: Field, rng: &mut R) -> [FieldElement; 3] {
    assert_ne!(field, Field::Prime(2), "GF(2) has no three distinct elements");
    loop {
        let x = [random_element(field, rng), random_element(field, rng), random_element(field, rng)];
        if x[0] != x[1] && x[0] != x[2] && x[1] != x[2] {
            return x;
        }
    }
}

/// Every entry independent; the result may fail any condition.
pub fn random_array<R: Rng>(field: Field, rng: &mut R) -> ParameterArray {
    let mut e = || random_element(field, rng);
    ParameterArray { theta: [e(), e(), e()], thetastar: [e(), e(), e()], varphi: e(), phi: e() }
}

/// Random array with `θ0 ≠ θ2` and `θ*0 ≠ θ*2`, so the derived parameters exist.
pub fn random_array_with_denominators<R: Rng>(field: Field, rng: &mut R) -> ParameterArray {
    loop {
        let pa = random_array(field, rng);
        if pa.theta[0] != pa.theta[2] && pa.thetastar[0] != pa.thetastar[2] {
            return pa;
        }
    }
}

pub fn random_admissible<R: Rng>(field: Field, rng: &mut R) -> ParameterArray {
    loop {
        let pa = ParameterArray {
            theta: random_distinct(field, rng),
            thetastar: random_distinct(field, rng),
            varphi: random_nonzero(field, rng),
            phi: random_nonzero(field, rng),
        };
        if admissible(&pa).ok {
            return pa;
        }
    }
}

/// An array satisfying (i) and (ii) with `φ = φ1 φ2`. Writing `u = ϕ − φ`,
/// `φ1 = cu − a` and `φ2 = cu − b` for constants fixed by the eigenvalues, so
/// choosing `u` and setting `φ = (cu − a)(cu − b)`, `ϕ = φ + u` lands on the boundary.
pub fn random_boundary<R: Rng>(field: Field, rng: &mut R) -> ParameterArray {
    loop {
        let theta = random_distinct(field, rng);
        let thetastar = random_distinct(field, rng);
        let [t0, t1, t2] = &theta;
        let [s0, s1, s2] = &thetastar;
        let c = (&(t0 - t2) * &(s0 - s2)).inv().expect("distinct");
        let a = &(t0 - t1) * &(s0 - s1);
        let b = &(t1 - t2) * &(s1 - s2);
        let u = random_element(field, rng);
        let cu = &c * &u;
        let varphi = &(&cu - &a) * &(&cu - &b);
        let phi = &varphi + &u;
        if !varphi.is_zero() && !phi.is_zero() {
            return ParameterArray { theta, thetastar, varphi, phi };
        }
    }
}

pub fn random_matrix<R: Rng>(field: Field, n: usize, rng: &mut R) -> Matrix {
    let rows = (0..n).map(|_| (0..n).map(|_| random_element(field, rng)).collect()).collect();
    Matrix::from_rows(field, rows).expect("square")
}

pub fn random_invertible<R: Rng>(field: Field, n: usize, rng: &mut R) -> Matrix {
    loop {
        let m = random_matrix(field, n, rng);
        if m.rank() == n {
            return m;
        }
    }
}

/// Diagonal entries with no value repeated more than twice.
fn random_spectrum<R: Rng>(field: Field, rng: &mut R) -> Vec<FieldElement> {
    let values: Vec<FieldElement> = match field.elements() {
        Some(all) => all.collect(),
        None => (-3..=3).map(|x| field.from_i64(x)).collect(),
    };
    let mut diag = Vec::with_capacity(4);
    while diag.len() < 4 {
        let v = values.choose(rng).expect("nonempty").clone();
        if diag.iter().filter(|&x| *x == v).count() < 2 {
            diag.push(v);
        }
    }
    diag
}

/// `S D S⁻¹` with `D` diagonal, every eigenvalue repeated at most twice.
pub fn random_diagonalizable<R: Rng>(field: Field, rng: &mut R) -> Matrix {
    let d = Matrix::diag(field, &random_spectrum(field, rng));
    let s = random_invertible(field, 4, rng);
    &(&s * &d) * &s.inverse().expect("invertible")
}

/// A diagonalizable `A` and a partner that is random half the time and
/// otherwise shares a random invariant subspace with `A`, so both answers of
/// the irreducibility test are exercised.
pub fn random_pair<R: Rng>(field: Field, rng: &mut R) -> (Matrix, Matrix) {
    if rng.gen_bool(0.5) {
        return (random_diagonalizable(field, rng), random_matrix(field, 4, rng));
    }
    // In the basis given by the columns of S, A is diagonal and B is block
    // upper triangular, so the span of the first k columns is invariant.
    let k = rng.gen_range(1..=3);
    let mut b = random_matrix(field, 4, rng);
    for i in k..4 {
        for j in 0..k {
            b.set(i, j, field.zero());
        }
    }
    let d = Matrix::diag(field, &random_spectrum(field, rng));
    let s = random_invertible(field, 4, rng);
    let si = s.inverse().expect("invertible");
    let conj = |m: &Matrix| &(&s * m) * &si;
    (conj(&d), conj(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape121::derived_params;

    #[test]
    fn boundary_arrays_sit_on_the_boundary() {
        let mut r = rng(7);
        for field in [Field::Rationals, Field::Prime(101)] {
            for _ in 0..20 {
                let pa = random_boundary(field, &mut r);
                let d = derived_params(&pa).unwrap();
                assert_eq!(pa.varphi, &d.varphi1 * &d.varphi2);
                assert_eq!(admissible(&pa).failed, vec!["(iii)"]);
            }
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = random_admissible(Field::Prime(101), &mut rng(3));
        let b = random_admissible(Field::Prime(101), &mut rng(3));
        assert_eq!(a, b);
    }
}
