//! The closed-form matrices, one entry per displayed matrix.
//!
//! Symbols: `t0, t1, t2` are the eigenvalues, `s0, s1, s2` the dual
//! eigenvalues, `vp` and `ph` the split eigenvalues φ and ϕ, `vp1, vp2, ph1,
//! ph2` the derived parameters, and `iv, ip` the inverses of `vp, ph`.
//! Entries are kept in the shape they are displayed in rather than simplified.

use super::{BasisId, Operator};
use crate::error::Result;
use crate::field::FieldElement;
use crate::linalg::Matrix;
use crate::shape121::{derived_params, ParameterArray};

/// Clones borrowed entries so literals can mix symbols and computed values.
trait Owned {
    fn owned(self) -> FieldElement;
}

impl Owned for FieldElement {
    fn owned(self) -> FieldElement {
        self
    }
}

impl Owned for &FieldElement {
    fn owned(self) -> FieldElement {
        self.clone()
    }
}

fn sq(x: FieldElement) -> FieldElement {
    &x * &x
}

pub(super) struct Symbols {
    t0: FieldElement,
    t1: FieldElement,
    t2: FieldElement,
    s0: FieldElement,
    s1: FieldElement,
    s2: FieldElement,
    vp: FieldElement,
    ph: FieldElement,
    vp1: FieldElement,
    vp2: FieldElement,
    ph1: FieldElement,
    ph2: FieldElement,
    iv: FieldElement,
    ip: FieldElement,
    zero: FieldElement,
    one: FieldElement,
}

impl Symbols {
    /// Needs `φ, ϕ ≠ 0` and the derived parameters; callers check admissibility.
    pub(super) fn new(pa: &ParameterArray) -> Result<Self> {
        let d = derived_params(pa)?;
        let field = pa.field();
        let [t0, t1, t2] = pa.theta.clone();
        let [s0, s1, s2] = pa.thetastar.clone();
        Ok(Symbols {
            t0,
            t1,
            t2,
            s0,
            s1,
            s2,
            iv: pa.varphi.inv()?,
            ip: pa.phi.inv()?,
            vp: pa.varphi.clone(),
            ph: pa.phi.clone(),
            vp1: d.varphi1,
            vp2: d.varphi2,
            ph1: d.phi1,
            ph2: d.phi2,
            zero: field.zero(),
            one: field.one(),
        })
    }
}

macro_rules! m4 {
    ($([$($e:expr),* $(,)?]),* $(,)?) => {
{
        let rows: Vec<Vec<FieldElement>> = vec![$(vec![$(Owned::owned($e)),*]),*];
        Matrix::from_rows(rows[0][0].field(), rows).expect("4x4 literal")
    }
    };
}

/// Matrix of `which` in basis `id`, in the convention `M v_j = sum_i B_ij v_i`.
pub(super) fn representation(sym: &Symbols, which: Operator, id: BasisId) -> Matrix {
    let Symbols { t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, zero, one, .. } = sym;
    match (which, id) {
        (Operator::A, BasisId::SplitZD) => m4![
            [t0, zero, zero, zero],
            [one, t1, zero, zero],
            [zero, zero, t1, zero],
            [zero, one, vp2, t2],
        ],
        (Operator::Astar, BasisId::SplitZD) => m4![
            [s0, vp1, vp, zero],
            [zero, s1, zero, zero],
            [zero, zero, s1, one],
            [zero, zero, zero, s2],
        ],
        (Operator::A, BasisId::SplitZZ) => m4![
            [t2, zero, zero, zero],
            [one, t1, zero, zero],
            [zero, zero, t1, zero],
            [zero, one, ph2, t0],
        ],
        (Operator::Astar, BasisId::SplitZZ) => m4![
            [s0, ph1, ph, zero],
            [zero, s1, zero, zero],
            [zero, zero, s1, one],
            [zero, zero, zero, s2],
        ],
        (Operator::A, BasisId::SplitDZ) => m4![
            [t2, zero, zero, zero],
            [one, t1, zero, zero],
            [zero, zero, t1, zero],
            [zero, one, vp1, t0],
        ],
        (Operator::Astar, BasisId::SplitDZ) => m4![
            [s2, vp2, vp, zero],
            [zero, s1, zero, zero],
            [zero, zero, s1, one],
            [zero, zero, zero, s0],
        ],
        (Operator::A, BasisId::SplitDD) => m4![
            [t0, zero, zero, zero],
            [one, t1, zero, zero],
            [zero, zero, t1, zero],
            [zero, one, ph1, t2],
        ],
        (Operator::Astar, BasisId::SplitDD) => m4![
            [s2, ph2, ph, zero],
            [zero, s1, zero, zero],
            [zero, zero, s1, one],
            [zero, zero, zero, s0],
        ],
        (Operator::A, BasisId::EigA) => m4![
            [t0, zero, zero, zero],
            [zero, t1, zero, zero],
            [zero, zero, t1, zero],
            [zero, zero, zero, t2],
        ],
        (Operator::Astar, BasisId::EigA) => m4![
            [s0 + vp1 / (t0 - t1), vp1 / (sq(t0 - t1) * (t2 - t0)), vp * ph2 / (sq(t0 - t1) * (t2 - t0)), zero],
            [ph / (s0 - s2), s1 + (vp + vp1 * (t1 - t2) * (s0 - s2)) / ((t1 - t0) * (t1 - t2) * (s0 - s2)), vp * ph / ((t1 - t0) * (t1 - t2) * (s0 - s2)), vp / (s0 - s2)],
            [one / (s2 - s0), one / ((t1 - t0) * (t1 - t2) * (s2 - s0)), s1 + (vp + vp2 * (t1 - t0) * (s2 - s0)) / ((t1 - t0) * (t1 - t2) * (s2 - s0)), one / (s2 - s0)],
            [zero, ph1 / (sq(t1 - t2) * (t0 - t2)), ph * vp2 / (sq(t1 - t2) * (t0 - t2)), s2 + vp2 / (t2 - t1)],
        ],
        (Operator::A, BasisId::EigAstar) => m4![
            [t0 + vp1 / (s0 - s1), ph * vp1 / (sq(s0 - s1) * (s2 - s0)), vp * ph1 / (sq(s0 - s1) * (s2 - s0)), zero],
            [one / (t0 - t2), t1 + (vp + vp1 * (t0 - t2) * (s1 - s2)) / ((t0 - t2) * (s1 - s0) * (s1 - s2)), vp / ((t0 - t2) * (s1 - s0) * (s1 - s2)), vp / (t0 - t2)],
            [one / (t2 - t0), ph / ((t2 - t0) * (s1 - s0) * (s1 - s2)), t1 + (vp + vp2 * (t0 - t2) * (s0 - s1)) / ((t2 - t0) * (s1 - s0) * (s1 - s2)), ph / (t2 - t0)],
            [zero, ph2 / (sq(s1 - s2) * (s0 - s2)), vp2 / (sq(s1 - s2) * (s0 - s2)), t2 + vp2 / (s2 - s1)],
        ],
        (Operator::Astar, BasisId::EigAstar) => m4![
            [s0, zero, zero, zero],
            [zero, s1, zero, zero],
            [zero, zero, s1, zero],
            [zero, zero, zero, s2],
        ],
    }
}

/// Transition matrix between two distinct bases; `None` when `from == to`.
pub(super) fn transition(sym: &Symbols, from: BasisId, to: BasisId) -> Option<Matrix> {
    let Symbols { t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2, iv, ip, zero, one } = sym;
    Some(match (from, to) {
        (BasisId::SplitZD, BasisId::SplitZZ) => m4![
            [one, t0 - t2, (t0 - t2) * ph2, (t0 - t2) * (t0 - t1)],
            [zero, one, (t0 - t2) * (s1 - s2), t0 - t2],
            [zero, zero, one, zero],
            [zero, zero, zero, one],
        ],
        (BasisId::SplitZZ, BasisId::SplitZD) => m4![
            [one, t2 - t0, (t2 - t0) * vp2, (t2 - t0) * (t2 - t1)],
            [zero, one, (t2 - t0) * (s1 - s2), t2 - t0],
            [zero, zero, one, zero],
            [zero, zero, zero, one],
        ],
        (BasisId::SplitZZ, BasisId::SplitDZ) => m4![
            [ph, zero, zero, zero],
            [zero, ph, zero, zero],
            [s2 - s0, (s2 - s0) * (t1 - t2), vp, zero],
            [(s2 - s0) * (s2 - s1), (s2 - s0) * vp2, (s2 - s0) * vp, vp],
        ],
        (BasisId::SplitDZ, BasisId::SplitZZ) => m4![
            [ip, zero, zero, zero],
            [zero, ip, zero, zero],
            [(s0 - s2) * iv * ip, (s0 - s2) * (t1 - t2) * iv * ip, iv, zero],
            [(s0 - s2) * (s0 - s1) * iv * ip, (s0 - s2) * ph1 * iv * ip, (s0 - s2) * iv, iv],
        ],
        (BasisId::SplitDZ, BasisId::SplitDD) => m4![
            [one, t2 - t0, (t2 - t0) * ph1, (t2 - t0) * (t2 - t1)],
            [zero, one, (t2 - t0) * (s1 - s0), t2 - t0],
            [zero, zero, one, zero],
            [zero, zero, zero, one],
        ],
        (BasisId::SplitDD, BasisId::SplitDZ) => m4![
            [one, t0 - t2, (t0 - t2) * vp1, (t0 - t2) * (t0 - t1)],
            [zero, one, (t0 - t2) * (s1 - s0), t0 - t2],
            [zero, zero, one, zero],
            [zero, zero, zero, one],
        ],
        (BasisId::SplitDD, BasisId::SplitZD) => m4![
            [iv, zero, zero, zero],
            [zero, iv, zero, zero],
            [(s0 - s2) * iv * ip, (s0 - s2) * (t1 - t0) * iv * ip, ip, zero],
            [(s0 - s2) * (s0 - s1) * iv * ip, (s0 - s2) * vp1 * iv * ip, (s0 - s2) * ip, ip],
        ],
        (BasisId::SplitZD, BasisId::SplitDD) => m4![
            [vp, zero, zero, zero],
            [zero, vp, zero, zero],
            [s2 - s0, (s2 - s0) * (t1 - t0), ph, zero],
            [(s2 - s0) * (s2 - s1), (s2 - s0) * ph2, (s2 - s0) * ph, ph],
        ],
        (BasisId::SplitZD, BasisId::SplitDZ) => m4![
            [vp, (t0 - t2) * vp, (t0 - t2) * vp * vp1, (t0 - t2) * (t0 - t1) * vp],
            [zero, vp, (t0 - t2) * (s1 - s0) * vp, (t0 - t2) * vp],
            [s2 - s0, (s2 - s0) * (t1 - t2), vp, zero],
            [(s2 - s0) * (s2 - s1), (s2 - s0) * vp2, (s2 - s0) * vp, vp],
        ],
        (BasisId::SplitDZ, BasisId::SplitZD) => m4![
            [ip, (t2 - t0) * ip, (t2 - t0) * vp2 * ip, (t2 - t0) * (t2 - t1) * ip],
            [zero, ip, (t2 - t0) * (s1 - s2) * ip, (t2 - t0) * ip],
            [(s0 - s2) * iv * ip, (s0 - s2) * (t1 - t0) * iv * ip, ip, zero],
            [(s0 - s2) * (s0 - s1) * iv * ip, (s0 - s2) * vp1 * iv * ip, (s0 - s2) * ip, ip],
        ],
        (BasisId::SplitZZ, BasisId::SplitDD) => m4![
            [ph, (t2 - t0) * ph, (t2 - t0) * ph * ph1, (t2 - t0) * (t2 - t1) * ph],
            [zero, ph, (t2 - t0) * (s1 - s0) * ph, (t2 - t0) * ph],
            [s2 - s0, (s2 - s0) * (t1 - t0), ph, zero],
            [(s2 - s0) * (s2 - s1), (s2 - s0) * ph2, (s2 - s0) * ph, ph],
        ],
        (BasisId::SplitDD, BasisId::SplitZZ) => m4![
            [iv, (t0 - t2) * iv, (t0 - t2) * ph2 * iv, (t0 - t2) * (t0 - t1) * iv],
            [zero, iv, (t0 - t2) * (s1 - s2) * iv, (t0 - t2) * iv],
            [(s0 - s2) * iv * ip, (s0 - s2) * (t1 - t2) * iv * ip, iv, zero],
            [(s0 - s2) * (s0 - s1) * iv * ip, (s0 - s2) * ph1 * iv * ip, (s0 - s2) * iv, iv],
        ],
        (BasisId::SplitZD, BasisId::EigA) => m4![
            [(t0 - t1) * (t0 - t2), zero, zero, zero],
            [t0 - t2, one / (t1 - t0), vp / (t1 - t0), zero],
            [zero, zero, s2 - s0, zero],
            [one, one / ((t1 - t0) * (t1 - t2)), (vp + vp2 * (t1 - t0) * (s2 - s0)) / ((t1 - t0) * (t1 - t2)), one],
        ],
        (BasisId::EigA, BasisId::SplitZD) => m4![
            [one / ((t0 - t1) * (t0 - t2)), zero, zero, zero],
            [one, t1 - t0, vp / (s0 - s2), zero],
            [zero, zero, one / (s2 - s0), zero],
            [one / ((t2 - t0) * (t2 - t1)), one / (t2 - t1), vp2 / (t2 - t1), one],
        ],
        (BasisId::SplitZZ, BasisId::EigA) => m4![
            [zero, zero, zero, (t2 - t0) * (t2 - t1)],
            [zero, one / (t1 - t2), ph / (t1 - t2), t2 - t0],
            [zero, zero, s2 - s0, zero],
            [one, one / ((t1 - t0) * (t1 - t2)), (ph + ph2 * (t1 - t2) * (s2 - s0)) / ((t1 - t0) * (t1 - t2)), one],
        ],
        (BasisId::EigA, BasisId::SplitZZ) => m4![
            [one / ((t0 - t1) * (t0 - t2)), one / (t0 - t1), ph2 / (t0 - t1), one],
            [one, t1 - t2, ph / (s0 - s2), zero],
            [zero, zero, one / (s2 - s0), zero],
            [one / ((t2 - t0) * (t2 - t1)), zero, zero, zero],
        ],
        (BasisId::SplitDZ, BasisId::EigA) => m4![
            [zero, zero, zero, (t2 - t0) * (t2 - t1) * ip],
            [zero, ip / (t1 - t2), one / (t1 - t2), (t2 - t0) * ip],
            [zero, (s0 - s2) * iv * ip, zero, zero],
            [iv, (ph + ph1 * (t1 - t0) * (s0 - s2)) / ((t1 - t0) * (t1 - t2) * vp * ph), one / ((t1 - t0) * (t1 - t2)), ip],
        ],
        (BasisId::EigA, BasisId::SplitDZ) => m4![
            [vp / ((t0 - t1) * (t0 - t2)), vp / (t0 - t1), vp * vp1 / (t0 - t1), vp],
            [zero, zero, vp * ph / (s0 - s2), zero],
            [one, t1 - t2, vp / (s2 - s0), zero],
            [ph / ((t0 - t2) * (t1 - t2)), zero, zero, zero],
        ],
        (BasisId::SplitDD, BasisId::EigA) => m4![
            [(t0 - t1) * (t0 - t2) * iv, zero, zero, zero],
            [(t0 - t2) * iv, iv / (t1 - t0), one / (t1 - t0), zero],
            [zero, (s0 - s2) * iv * ip, zero, zero],
            [iv, (vp + vp1 * (t1 - t2) * (s0 - s2)) / ((t1 - t0) * (t1 - t2) * vp * ph), one / ((t1 - t0) * (t1 - t2)), ip],
        ],
        (BasisId::EigA, BasisId::SplitDD) => m4![
            [vp / ((t0 - t1) * (t0 - t2)), zero, zero, zero],
            [zero, zero, vp * ph / (s0 - s2), zero],
            [one, t1 - t0, ph / (s2 - s0), zero],
            [ph / ((t0 - t2) * (t1 - t2)), ph / (t2 - t1), ph * ph1 / (t2 - t1), ph],
        ],
        (BasisId::SplitZD, BasisId::EigAstar) => m4![
            [one, (ph + ph2 * (t0 - t2) * (s1 - s0)) / ((s1 - s0) * (s1 - s2)), vp / ((s1 - s0) * (s1 - s2)), vp],
            [zero, t0 - t2, zero, zero],
            [zero, one / (s1 - s2), one / (s1 - s2), s2 - s0],
            [zero, zero, zero, (s2 - s0) * (s2 - s1)],
        ],
        (BasisId::EigAstar, BasisId::SplitZD) => m4![
            [one, vp1 / (s0 - s1), vp / (s0 - s1), vp / ((s0 - s1) * (s0 - s2))],
            [zero, one / (t0 - t2), zero, zero],
            [zero, one / (t2 - t0), s1 - s2, one],
            [zero, zero, zero, one / ((s0 - s2) * (s1 - s2))],
        ],
        (BasisId::SplitZZ, BasisId::EigAstar) => m4![
            [one, ph / ((s1 - s0) * (s1 - s2)), (vp + vp2 * (t0 - t2) * (s0 - s1)) / ((s1 - s0) * (s1 - s2)), ph],
            [zero, zero, t2 - t0, zero],
            [zero, one / (s1 - s2), one / (s1 - s2), s2 - s0],
            [zero, zero, zero, (s2 - s0) * (s2 - s1)],
        ],
        (BasisId::EigAstar, BasisId::SplitZZ) => m4![
            [one, ph1 / (s0 - s1), ph / (s0 - s1), ph / ((s0 - s1) * (s0 - s2))],
            [zero, one / (t0 - t2), s1 - s2, one],
            [zero, one / (t2 - t0), zero, zero],
            [zero, zero, zero, one / ((s0 - s2) * (s1 - s2))],
        ],
        (BasisId::SplitDZ, BasisId::EigAstar) => m4![
            [ip, one / ((s1 - s0) * (s1 - s2)), (vp + vp2 * (t0 - t2) * (s0 - s1)) / ((s1 - s0) * (s1 - s2) * ph), one],
            [zero, zero, (t2 - t0) * ip, zero],
            [(s0 - s2) * iv * ip, iv / (s1 - s0), ip / (s1 - s0), zero],
            [(s0 - s2) * (s0 - s1) * iv * ip, zero, zero, zero],
        ],
        (BasisId::EigAstar, BasisId::SplitDZ) => m4![
            [zero, zero, zero, vp * ph / ((s0 - s1) * (s0 - s2))],
            [zero, vp / (t0 - t2), (s1 - s0) * vp, vp],
            [zero, ph / (t2 - t0), zero, zero],
            [one, vp2 / (s2 - s1), vp / (s2 - s1), vp / ((s2 - s1) * (s2 - s0))],
        ],
        (BasisId::SplitDD, BasisId::EigAstar) => m4![
            [iv, (vp + vp1 * (t0 - t2) * (s1 - s2)) / ((s1 - s0) * (s1 - s2) * vp), one / ((s1 - s0) * (s1 - s2)), one],
            [zero, (t0 - t2) * iv, zero, zero],
            [(s0 - s2) * iv * ip, iv / (s1 - s0), ip / (s1 - s0), zero],
            [(s0 - s2) * (s0 - s1) * iv * ip, zero, zero, zero],
        ],
        (BasisId::EigAstar, BasisId::SplitDD) => m4![
            [zero, zero, zero, vp * ph / ((s1 - s0) * (s2 - s0))],
            [zero, vp / (t0 - t2), zero, zero],
            [zero, ph / (t2 - t0), (s1 - s0) * ph, ph],
            [one, ph2 / (s2 - s1), ph / (s2 - s1), ph / ((s2 - s1) * (s2 - s0))],
        ],
        (BasisId::EigA, BasisId::EigAstar) => m4![
            [one / ((t0 - t1) * (t0 - t2)), (ph + ph2 * (t0 - t2) * (s1 - s0)) / ((t0 - t1) * (t0 - t2) * (s1 - s0) * (s1 - s2)), vp / ((t0 - t1) * (t0 - t2) * (s1 - s0) * (s1 - s2)), vp / ((t0 - t1) * (t0 - t2))],
            [one, ph / ((s0 - s2) * (s1 - s0)), vp / ((s0 - s2) * (s1 - s0)), zero],
            [zero, one / ((s2 - s1) * (s0 - s2)), one / ((s2 - s1) * (s0 - s2)), one],
            [one / ((t0 - t2) * (t1 - t2)), ph / ((t0 - t2) * (t1 - t2) * (s1 - s0) * (s1 - s2)), (vp + vp2 * (t0 - t2) * (s0 - s1)) / ((t0 - t2) * (t1 - t2) * (s1 - s0) * (s1 - s2)), ph / ((t0 - t2) * (t1 - t2))],
        ],
        (BasisId::EigAstar, BasisId::EigA) => m4![
            [ph / ((s0 - s1) * (s0 - s2)), (vp + vp1 * (t1 - t2) * (s0 - s2)) / ((t1 - t0) * (t1 - t2) * (s0 - s1) * (s0 - s2)), vp * ph / ((t1 - t0) * (t1 - t2) * (s0 - s1) * (s0 - s2)), vp / ((s0 - s1) * (s0 - s2))],
            [one, one / ((t1 - t0) * (t0 - t2)), vp / ((t1 - t0) * (t0 - t2)), zero],
            [zero, one / ((t2 - t1) * (t0 - t2)), ph / ((t2 - t1) * (t0 - t2)), one],
            [one / ((s1 - s2) * (s0 - s2)), one / ((t1 - t0) * (t1 - t2) * (s0 - s2) * (s1 - s2)), (vp + vp2 * (t1 - t0) * (s2 - s0)) / ((t1 - t0) * (t1 - t2) * (s0 - s2) * (s1 - s2)), one / ((s0 - s2) * (s1 - s2))],
        ],
        _ => return None,
    })
}
