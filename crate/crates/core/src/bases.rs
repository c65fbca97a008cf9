//! The six bases built from a seed `η*0 ∈ E*0 V`, the matrices representing
//! `A` and `A*` in them, and the transition matrices between them.
//!
//! Everything here is available two ways: numerically from a [`TdSystem`]
//! and in closed form from a [`ParameterArray`]. The two are compared in the
//! tests rather than derived from each other.

mod closed_form;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::{is_zero_vector, scale_vector, standard_vector, Matrix, Vector};
use crate::shape121::{admissible, extract_parameter_array, ParameterArray};
use crate::tdcore::TdSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisId {
    /// `η*0, (A−θ0)η*0, (A*−θ*2)η2, η2`
    SplitZD,
    /// `η*0, (A−θ2)η*0, (A*−θ*2)η0, η0`
    SplitZZ,
    /// `η*2, (A−θ2)η*2, φ(A*−θ*0)η0, φη0`
    SplitDZ,
    /// `η*2, (A−θ0)η*2, ϕ(A*−θ*0)η2, ϕη2`
    SplitDD,
    /// `η0, E1η*0, E1η*2, η2`
    EigA,
    /// `η*0, E*1η0, E*1η2, η*2`
    EigAstar,
}

impl BasisId {
    pub const ALL: [BasisId; 6] = [
        BasisId::SplitZD,
        BasisId::SplitZZ,
        BasisId::SplitDZ,
        BasisId::SplitDD,
        BasisId::EigA,
        BasisId::EigAstar,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            BasisId::SplitZD => "SplitZD",
            BasisId::SplitZZ => "SplitZZ",
            BasisId::SplitDZ => "SplitDZ",
            BasisId::SplitDD => "SplitDD",
            BasisId::EigA => "EigA",
            BasisId::EigAstar => "EigAstar",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_split(self) -> bool {
        !matches!(self, BasisId::EigA | BasisId::EigAstar)
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for BasisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BasisId::ALL
            .into_iter()
            .find(|b| b.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Malformed(format!("basis {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Operator {
    A,
    Astar,
}

impl Operator {
    pub fn tag(self) -> &'static str {
        match self {
            Operator::A => "A",
            Operator::Astar => "Astar",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaVectors {
    pub eta0star: Vector,
    pub eta0: Vector,
    pub eta2: Vector,
    pub eta2star: Vector,
}

/// `η0 = (A−θ1)(A−θ2)η*0`, `η2 = (A−θ1)(A−θ0)η*0`, `η*2 = (A*−θ*1)(A*−θ*0)η2`.
pub fn eta_vectors(tds: &TdSystem, seed: &[FieldElement]) -> Result<EtaVectors> {
    if seed.len() != tds.a.rows() || is_zero_vector(seed) || tds.estar[0].mul_vec(seed) != seed {
        return Err(Error::InvalidSeed);
    }
    let [t0, t1, t2] = &tds.theta;
    let [s0, s1, _] = &tds.thetastar;
    let a1 = tds.a.shift(t1);
    let eta0 = a1.mul_vec(&tds.a.shift(t2).mul_vec(seed));
    let eta2 = a1.mul_vec(&tds.a.shift(t0).mul_vec(seed));
    let eta2star = tds.astar.shift(s1).mul_vec(&tds.astar.shift(s0).mul_vec(&eta2));
    if [&eta0, &eta2, &eta2star].into_iter().any(|v| is_zero_vector(v)) {
        return Err(Error::ZeroEta);
    }
    Ok(EtaVectors { eta0star: seed.to_vec(), eta0, eta2, eta2star })
}

/// `E*0 e_k` for the first `k` where it is nonzero, scaled so its first
/// nonzero coordinate is 1. For the canonical construction this is `e1`.
pub fn canonical_seed(tds: &TdSystem) -> Result<Vector> {
    let field = tds.field();
    let n = tds.a.rows();
    let v = (0..n)
        .map(|k| tds.estar[0].mul_vec(&standard_vector(field, n, k)))
        .find(|v| !is_zero_vector(v))
        .ok_or(Error::InvalidSeed)?;
    let lead = v.iter().find(|x| !x.is_zero()).expect("nonzero vector").inv()?;
    Ok(scale_vector(&v, &lead))
}

pub fn canonical_eta(tds: &TdSystem) -> Result<EtaVectors> {
    eta_vectors(tds, &canonical_seed(tds)?)
}

/// Columns of the basis `id`. `φ` and `ϕ` are read off the system.
pub fn basis_matrix(tds: &TdSystem, id: BasisId, eta: &EtaVectors) -> Result<Matrix> {
    let pa = extract_parameter_array(tds)?;
    let m = basis_columns(tds, &pa, id, eta);
    if m.rank() < m.rows() {
        return Err(Error::Singular);
    }
    Ok(m)
}

fn basis_columns(tds: &TdSystem, pa: &ParameterArray, id: BasisId, eta: &EtaVectors) -> Matrix {
    let [t0, _, t2] = &tds.theta;
    let [s0, _, s2] = &tds.thetastar;
    let a = |t: &FieldElement, v: &Vector| tds.a.shift(t).mul_vec(v);
    let astar = |s: &FieldElement, v: &Vector| tds.astar.shift(s).mul_vec(v);
    let EtaVectors { eta0star, eta0, eta2, eta2star } = eta;
    let (vp, ph) = (&pa.varphi, &pa.phi);
    let cols = match id {
        BasisId::SplitZD => vec![eta0star.clone(), a(t0, eta0star), astar(s2, eta2), eta2.clone()],
        BasisId::SplitZZ => vec![eta0star.clone(), a(t2, eta0star), astar(s2, eta0), eta0.clone()],
        BasisId::SplitDZ => vec![
            eta2star.clone(),
            a(t2, eta2star),
            scale_vector(&astar(s0, eta0), vp),
            scale_vector(eta0, vp),
        ],
        BasisId::SplitDD => vec![
            eta2star.clone(),
            a(t0, eta2star),
            scale_vector(&astar(s0, eta2), ph),
            scale_vector(eta2, ph),
        ],
        BasisId::EigA => vec![eta0.clone(), tds.e[1].mul_vec(eta0star), tds.e[1].mul_vec(eta2star), eta2.clone()],
        BasisId::EigAstar => vec![
            eta0star.clone(),
            tds.estar[1].mul_vec(eta0),
            tds.estar[1].mul_vec(eta2),
            eta2star.clone(),
        ],
    };
    Matrix::from_columns(tds.field(), tds.a.rows(), &cols)
}

/// All six basis matrices and their inverses for one system and seed.
#[derive(Clone, Debug)]
pub struct BasisSet {
    operators: [Matrix; 2],
    matrices: [Matrix; 6],
    inverses: [Matrix; 6],
}

impl BasisSet {
    pub fn new(tds: &TdSystem, eta: &EtaVectors) -> Result<Self> {
        let pa = extract_parameter_array(tds)?;
        let mut matrices = Vec::with_capacity(6);
        let mut inverses = Vec::with_capacity(6);
        for id in BasisId::ALL {
            let m = basis_columns(tds, &pa, id, eta);
            inverses.push(m.inverse()?);
            matrices.push(m);
        }
        Ok(BasisSet {
            operators: [tds.a.clone(), tds.astar.clone()],
            matrices: matrices.try_into().expect("six bases"),
            inverses: inverses.try_into().expect("six bases"),
        })
    }

    pub fn canonical(tds: &TdSystem) -> Result<Self> {
        BasisSet::new(tds, &canonical_eta(tds)?)
    }

    pub fn basis(&self, id: BasisId) -> &Matrix {
        &self.matrices[id.index()]
    }

    /// `T` with `to_j = Σ_i T_ij from_i`, that is `from⁻¹ · to`.
    pub fn transition(&self, from: BasisId, to: BasisId) -> Matrix {
        &self.inverses[from.index()] * &self.matrices[to.index()]
    }

    /// `T⁻¹ M T` with `T` the basis matrix.
    pub fn represent(&self, which: Operator, id: BasisId) -> Matrix {
        let m = &self.operators[which as usize];
        &(&self.inverses[id.index()] * m) * &self.matrices[id.index()]
    }
}

pub fn represent(tds: &TdSystem, which: Operator, id: BasisId, eta: &EtaVectors) -> Result<Matrix> {
    let t = basis_matrix(tds, id, eta)?;
    let m = match which {
        Operator::A => &tds.a,
        Operator::Astar => &tds.astar,
    };
    Ok(&(&t.inverse()? * m) * &t)
}

pub fn transition_numeric(tds: &TdSystem, from: BasisId, to: BasisId, eta: &EtaVectors) -> Result<Matrix> {
    let f = basis_matrix(tds, from, eta)?;
    let t = basis_matrix(tds, to, eta)?;
    Ok(&f.inverse()? * &t)
}

fn require_admissible(pa: &ParameterArray) -> Result<()> {
    let report = admissible(pa);
    if report.ok {
        Ok(())
    } else {
        Err(Error::Inadmissible(report.failed))
    }
}

/// The displayed transition matrix for `from → to`, or the identity when they coincide.
/// No pair is obtained by composing others.
pub fn transition_formula(pa: &ParameterArray, from: BasisId, to: BasisId) -> Result<Matrix> {
    require_admissible(pa)?;
    if from == to {
        return Ok(Matrix::identity(pa.field(), 4));
    }
    let sym = closed_form::Symbols::new(pa)?;
    Ok(closed_form::transition(&sym, from, to).expect("every ordered pair of distinct bases is tabulated"))
}

/// The displayed matrix representing `which` in basis `id`.
pub fn represent_formula(pa: &ParameterArray, which: Operator, id: BasisId) -> Result<Matrix> {
    require_admissible(pa)?;
    let sym = closed_form::Symbols::new(pa)?;
    Ok(closed_form::representation(&sym, which, id))
}
