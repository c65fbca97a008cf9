//! Tridiagonal systems on a 4-dimensional space: the six axioms, split
//! decompositions and the shape.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::invariant::common_invariant_subspace;
use crate::linalg::{eigen_data, primitive_idempotents, CombineOp, Matrix, Subspace, subspace_combine};
use crate::shape121::D4Element;

const DIM: usize = 4;

/// `(A; E0, E1, E2; A*; E*0, E*1, E*2)` with the eigenvalue orderings that index the idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdSystem {
    pub a: Matrix,
    pub astar: Matrix,
    pub theta: [FieldElement; 3],
    pub thetastar: [FieldElement; 3],
    pub e: [Matrix; 3],
    pub estar: [Matrix; 3],
}

fn three(ms: Vec<Matrix>) -> [Matrix; 3] {
    ms.try_into().expect("three idempotents")
}

impl TdSystem {
    /// Computes the idempotents; fails unless both matrices are diagonalizable
    /// with exactly the given eigenvalues. The tridiagonality and
    /// irreducibility axioms are not checked here; see [`verify_td_system`].
    pub fn new(
        a: Matrix,
        astar: Matrix,
        theta: [FieldElement; 3],
        thetastar: [FieldElement; 3],
    ) -> Result<Self> {
        check_shapes(&a, &astar)?;
        let e = three(primitive_idempotents(&a, &theta)?);
        let estar = three(primitive_idempotents(&astar, &thetastar)?);
        Ok(TdSystem { a, astar, theta, thetastar, e, estar })
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    /// The relative `Φ^g`.
    pub fn relative(&self, g: D4Element) -> TdSystem {
        let mut out = self.clone();
        if g.rev_e {
            out.theta.reverse();
            out.e.reverse();
        }
        if g.rev_estar {
            out.thetastar.reverse();
            out.estar.reverse();
        }
        if g.starred {
            std::mem::swap(&mut out.a, &mut out.astar);
            std::mem::swap(&mut out.theta, &mut out.thetastar);
            std::mem::swap(&mut out.e, &mut out.estar);
        }
        out
    }

    pub fn verify(&self) -> Result<VerificationReport> {
        verify_td_system(&self.a, &self.astar, &self.theta, &self.thetastar)
    }

    fn eigenspace(&self, i: usize) -> Subspace {
        self.e[i].image()
    }

    fn dual_eigenspace(&self, i: usize) -> Subspace {
        self.estar[i].image()
    }
}

fn check_shapes(a: &Matrix, astar: &Matrix) -> Result<()> {
    for m in [a, astar] {
        if m.rows() != DIM || m.cols() != DIM {
            return Err(Error::Dimension(format!("expected 4x4, got {}x{}", m.rows(), m.cols())));
        }
    }
    if a.field() != astar.field() {
        return Err(Error::FieldMismatch(a.field(), astar.field()));
    }
    Ok(())
}

/// One flag per axiom. Flags after a failed step are `false` and their ids
/// are listed in `skipped` rather than `failed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// (i)
    pub diagonalizable_a: bool,
    pub diagonalizable_astar: bool,
    /// (ii) and (iii): the given lists are exactly the eigenvalues.
    pub ordering_e: bool,
    pub ordering_estar: bool,
    /// (iv) `E_i A* E_j = 0` for `|i - j| > 1`.
    pub tridiagonal_astar_e: bool,
    /// (v) `E*_i A E*_j = 0` for `|i - j| > 1`.
    pub tridiagonal_a_estar: bool,
    /// (vi)
    pub irreducible: bool,
    pub shape: Option<[usize; 3]>,
    pub overall: bool,
    pub failed: Vec<String>,
    pub skipped: Vec<String>,
    /// A nonzero proper subspace invariant under both matrices, when (vi) fails.
    pub witness: Option<Subspace>,
}

impl VerificationReport {
    fn new() -> Self {
        VerificationReport {
            diagonalizable_a: false,
            diagonalizable_astar: false,
            ordering_e: false,
            ordering_estar: false,
            tridiagonal_astar_e: false,
            tridiagonal_a_estar: false,
            irreducible: false,
            shape: None,
            overall: false,
            failed: Vec::new(),
            skipped: Vec::new(),
            witness: None,
        }
    }

    fn skip_from(mut self, ids: &[&str]) -> Self {
        self.skipped.extend(ids.iter().map(|s| s.to_string()));
        self
    }

    pub fn is_shape_121(&self) -> bool {
        self.overall && self.shape == Some([1, 2, 1])
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.overall {
            write!(f, "TD system, shape {:?}", self.shape.unwrap_or_default())
        } else {
            write!(f, "not a TD system: failed {:?}, skipped {:?}", self.failed, self.skipped)
        }
    }
}

fn tridiagonal(left: &[Matrix; 3], middle: &Matrix) -> bool {
    (&(&left[0] * middle) * &left[2]).is_zero() && (&(&left[2] * middle) * &left[0]).is_zero()
}

fn matches_spectrum(list: &[FieldElement], spectrum: &[FieldElement]) -> bool {
    let mut sorted = list.to_vec();
    sorted.sort();
    sorted.dedup();
    sorted.len() == list.len() && sorted == spectrum
}

/// Checks axioms (i) through (vi) in order and computes the shape when all hold.
/// Axiom failures are reported, never raised; errors mean malformed input.
pub fn verify_td_system(
    a: &Matrix,
    astar: &Matrix,
    theta: &[FieldElement],
    thetastar: &[FieldElement],
) -> Result<VerificationReport> {
    check_shapes(a, astar)?;
    if theta.len() != 3 || thetastar.len() != 3 {
        return Err(Error::Dimension("eigenvalue lists must have length 3".into()));
    }
    if let Some(x) = theta.iter().chain(thetastar).find(|x| x.field() != a.field()) {
        return Err(Error::FieldMismatch(a.field(), x.field()));
    }
    let mut r = VerificationReport::new();

    let (ed, eds) = (eigen_data(a)?, eigen_data(astar)?);
    r.diagonalizable_a = ed.diagonalizable;
    r.diagonalizable_astar = eds.diagonalizable;
    if !(ed.diagonalizable && eds.diagonalizable) {
        r.failed.push("(i)".into());
        return Ok(r.skip_from(&["(ii)", "(iii)", "(iv)", "(v)", "(vi)"]));
    }

    r.ordering_e = matches_spectrum(theta, &ed.eigenvalues);
    r.ordering_estar = matches_spectrum(thetastar, &eds.eigenvalues);
    if !r.ordering_e {
        r.failed.push("(ii)".into());
    }
    if !r.ordering_estar {
        r.failed.push("(iii)".into());
    }
    if !r.failed.is_empty() {
        return Ok(r.skip_from(&["(iv)", "(v)", "(vi)"]));
    }

    let theta: [FieldElement; 3] = theta.to_vec().try_into().expect("length checked");
    let thetastar: [FieldElement; 3] = thetastar.to_vec().try_into().expect("length checked");
    let tds = TdSystem::new(a.clone(), astar.clone(), theta, thetastar)?;
    r.tridiagonal_astar_e = tridiagonal(&tds.e, astar);
    r.tridiagonal_a_estar = tridiagonal(&tds.estar, a);
    if !r.tridiagonal_astar_e {
        r.failed.push("(iv)".into());
    }
    if !r.tridiagonal_a_estar {
        r.failed.push("(v)".into());
    }
    if !r.failed.is_empty() {
        return Ok(r.skip_from(&["(vi)"]));
    }

    r.witness = common_invariant_subspace(a, astar)?;
    r.irreducible = r.witness.is_none();
    if !r.irreducible {
        r.failed.push("(vi)".into());
        return Ok(r);
    }

    match shape(&tds) {
        Ok(s) => {
            r.shape = Some(s);
            r.overall = true;
        }
        Err(_) => r.failed.push("shape".into()),
    }
    Ok(r)
}

/// Verifies a bare pair of matrices. The first ordering pair found by
/// [`find_td_orderings`] is used; when there is none, the ascending spectra are
/// checked instead so the report names the failing axioms. The orderings that
/// were checked are returned alongside the report.
pub fn verify_pair(a: &Matrix, astar: &Matrix) -> Result<(VerificationReport, Option<Orderings>)> {
    check_shapes(a, astar)?;
    let (ed, eds) = (eigen_data(a)?, eigen_data(astar)?);
    let mut r = VerificationReport::new();
    r.diagonalizable_a = ed.diagonalizable;
    r.diagonalizable_astar = eds.diagonalizable;
    if !(ed.diagonalizable && eds.diagonalizable) {
        r.failed.push("(i)".into());
        return Ok((r.skip_from(&["(ii)", "(iii)", "(iv)", "(v)", "(vi)"]), None));
    }
    let as_three = |v: Vec<FieldElement>| -> Option<[FieldElement; 3]> { v.try_into().ok() };
    let (Some(ev), Some(evs)) = (as_three(ed.eigenvalues.clone()), as_three(eds.eigenvalues.clone())) else {
        r.ordering_e = ed.eigenvalues.len() == 3;
        r.ordering_estar = eds.eigenvalues.len() == 3;
        if !r.ordering_e {
            r.failed.push("(ii)".into());
        }
        if !r.ordering_estar {
            r.failed.push("(iii)".into());
        }
        return Ok((r.skip_from(&["(iv)", "(v)", "(vi)"]), None));
    };
    let (theta, thetastar) = find_td_orderings(a, astar)?.into_iter().next().unwrap_or((ev, evs));
    let report = verify_td_system(a, astar, &theta, &thetastar)?;
    Ok((report, Some((theta, thetastar))))
}

/// Eigenvalue orderings for `A` and `A*`.
pub type Orderings = ([FieldElement; 3], [FieldElement; 3]);

/// Every pair of orderings of the eigenvalues that satisfies axioms (iv) and (v).
/// Orderings are listed lexicographically by position in the ascending spectra.
pub fn find_td_orderings(a: &Matrix, astar: &Matrix) -> Result<Vec<Orderings>> {
    check_shapes(a, astar)?;
    let spectrum = |m: &Matrix| -> Result<[FieldElement; 3]> {
        let ed = eigen_data(m)?;
        if !ed.diagonalizable {
            return Err(Error::NotDiagonalizable);
        }
        let found = ed.eigenvalues.len();
        ed.eigenvalues.try_into().map_err(|_| Error::EigenvalueCount { expected: 3, found })
    };
    let (ev, evs) = (spectrum(a)?, spectrum(astar)?);
    let e = three(primitive_idempotents(a, &ev)?);
    let es = three(primitive_idempotents(astar, &evs)?);
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let pick = |xs: &[Matrix; 3], p: [usize; 3]| p.map(|i| xs[i].clone());
    let mut out = Vec::new();
    for p in perms {
        if !tridiagonal(&pick(&e, p), astar) {
            continue;
        }
        for q in perms {
            if tridiagonal(&pick(&es, q), a) {
                out.push((p.map(|i| ev[i].clone()), q.map(|i| evs[i].clone())));
            }
        }
    }
    Ok(out)
}

/// The rows of the decomposition table, with `d = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitDecompositionId {
    /// `[0*D]`
    ZstarD,
    /// `[0*0]`
    ZstarZ,
    /// `[D*0]`
    DstarZ,
    /// `[D*D]`
    DstarD,
    /// `[0D]`, the eigenspaces of `A`
    ZD,
    /// `[0*D*]`, the eigenspaces of `A*`
    ZstarDstar,
}

impl SplitDecompositionId {
    pub const ALL: [SplitDecompositionId; 6] = [
        SplitDecompositionId::ZstarD,
        SplitDecompositionId::ZstarZ,
        SplitDecompositionId::DstarZ,
        SplitDecompositionId::DstarD,
        SplitDecompositionId::ZD,
        SplitDecompositionId::ZstarDstar,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SplitDecompositionId::ZstarD => "[0*D]",
            SplitDecompositionId::ZstarZ => "[0*0]",
            SplitDecompositionId::DstarZ => "[D*0]",
            SplitDecompositionId::DstarD => "[D*D]",
            SplitDecompositionId::ZD => "[0D]",
            SplitDecompositionId::ZstarDstar => "[0*D*]",
        }
    }

    /// For the four split rows: whether the `A*` partial sums start at `E*_d`
    /// and whether the `A` partial sums start at `E_0`.
    fn split_ends(self) -> Option<(bool, bool)> {
        match self {
            SplitDecompositionId::ZstarD => Some((false, false)),
            SplitDecompositionId::ZstarZ => Some((false, true)),
            SplitDecompositionId::DstarZ => Some((true, true)),
            SplitDecompositionId::DstarD => Some((true, false)),
            _ => None,
        }
    }
}

impl fmt::Display for SplitDecompositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn partial_sum(spaces: impl Iterator<Item = Subspace>) -> Result<Subspace> {
    subspace_combine(&spaces.collect::<Vec<_>>(), CombineOp::Sum)
}

/// The components `U0, U1, U2`. The system is assumed to satisfy the axioms;
/// the result is checked to be a direct sum decomposition of the space.
pub fn split_decomposition(tds: &TdSystem, id: SplitDecompositionId) -> Result<[Subspace; 3]> {
    const D: usize = 2;
    let parts: [Subspace; 3] = match id.split_ends() {
        None if id == SplitDecompositionId::ZD => std::array::from_fn(|i| tds.eigenspace(i)),
        None => std::array::from_fn(|i| tds.dual_eigenspace(i)),
        Some((star_from_top, a_from_bottom)) => {
            let mut out = Vec::with_capacity(3);
            for i in 0..=D {
                let star_range: Vec<usize> = if star_from_top { (D - i..=D).collect() } else { (0..=i).collect() };
                let a_range: Vec<usize> = if a_from_bottom { (0..=D - i).collect() } else { (i..=D).collect() };
                let s = partial_sum(star_range.into_iter().map(|k| tds.dual_eigenspace(k)))?;
                let t = partial_sum(a_range.into_iter().map(|k| tds.eigenspace(k)))?;
                out.push(s.intersect(&t)?);
            }
            three_subspaces(out)
        }
    };
    let total: usize = parts.iter().map(Subspace::dim).sum();
    let span = subspace_combine(&parts, CombineOp::Sum)?;
    if total != DIM || span.dim() != DIM {
        return Err(Error::NotADecomposition);
    }
    Ok(parts)
}

fn three_subspaces(v: Vec<Subspace>) -> [Subspace; 3] {
    v.try_into().expect("three components")
}

/// Component dimensions, computed for all six decompositions and required to agree.
pub fn shape(tds: &TdSystem) -> Result<[usize; 3]> {
    let mut found: Option<[usize; 3]> = None;
    for id in SplitDecompositionId::ALL {
        let dims = split_decomposition(tds, id)?.map(|u| u.dim());
        match found {
            Some(prev) if prev != dims => return Err(Error::ShapeMismatch),
            _ => found = Some(dims),
        }
    }
    Ok(found.expect("six decompositions"))
}

/// Checks the action of `A` and `A*` on the components of all six decompositions.
pub fn verify_split_actions(tds: &TdSystem) -> bool {
    SplitDecompositionId::ALL.iter().all(|&id| split_actions_hold(tds, id).unwrap_or(false))
}

fn split_actions_hold(tds: &TdSystem, id: SplitDecompositionId) -> Result<bool> {
    const D: usize = 2;
    let u = split_decomposition(tds, id)?;
    let field = tds.field();
    let zero = Subspace::zero(field, DIM);
    let comp = |i: isize| -> Subspace {
        if (0..=D as isize).contains(&i) {
            u[i as usize].clone()
        } else {
            zero.clone()
        }
    };
    let near = |i: isize| subspace_combine(&[comp(i - 1), comp(i), comp(i + 1)], CombineOp::Sum);
    for (i, ui) in u.iter().enumerate() {
        let ii = i as isize;
        let ok = match id {
            SplitDecompositionId::ZD => {
                ui.image_under(&tds.a.shift(&tds.theta[i])).dim() == 0
                    && near(ii)?.contains(&ui.image_under(&tds.astar))
            }
            SplitDecompositionId::ZstarDstar => {
                ui.image_under(&tds.astar.shift(&tds.thetastar[i])).dim() == 0
                    && near(ii)?.contains(&ui.image_under(&tds.a))
            }
            _ => {
                let (star_from_top, a_from_bottom) = id.split_ends().expect("split row");
                let t = if a_from_bottom { &tds.theta[D - i] } else { &tds.theta[i] };
                let s = if star_from_top { &tds.thetastar[D - i] } else { &tds.thetastar[i] };
                comp(ii + 1).contains(&ui.image_under(&tds.a.shift(t)))
                    && comp(ii - 1).contains(&ui.image_under(&tds.astar.shift(s)))
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape121::{construct, construct_unchecked, derived_params, ParameterArray};

    const Q: Field = Field::Rationals;

    fn p0() -> ParameterArray {
        ParameterArray::from_i64(Q, [1, 0, -1], [1, 0, -1], 2, 1)
    }

    #[test]
    fn p0_is_a_td_system_of_shape_121() {
        let tds = construct(&p0()).unwrap();
        let r = tds.verify().unwrap();
        assert!(r.overall, "{r}");
        assert_eq!(r.shape, Some([1, 2, 1]));
        assert!(r.failed.is_empty() && r.skipped.is_empty());
        assert!(verify_split_actions(&tds));
    }

    #[test]
    fn four_eigenvalues_fail_axiom_two() {
        let d = Matrix::from_i64(Q, &[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 3]]);
        let ev = [Q.from_i64(0), Q.from_i64(1), Q.from_i64(2)];
        let r = verify_td_system(&d, &d, &ev, &ev).unwrap();
        assert!(r.diagonalizable_a && !r.ordering_e && !r.overall);
        assert_eq!(r.failed, vec!["(ii)", "(iii)"]);
        assert_eq!(r.skipped, vec!["(iv)", "(v)", "(vi)"]);
    }

    #[test]
    fn boundary_array_fails_only_irreducibility() {
        // φ = φ1 φ2 with θ = θ* = (1, 0, -1): φ1 = φ2 = (ϕ - φ)/4 - 1. Taking
        // ϕ - φ = 8 gives φ1 = φ2 = 1, so φ = 1 and ϕ = 9.
        let pa = ParameterArray::from_i64(Q, [1, 0, -1], [1, 0, -1], 1, 9);
        let d = derived_params(&pa).unwrap();
        assert_eq!(pa.varphi, &d.varphi1 * &d.varphi2);
        let tds = construct_unchecked(&pa).unwrap();
        let r = tds.verify().unwrap();
        assert_eq!(r.failed, vec!["(vi)"]);
        let w = r.witness.unwrap();
        assert_eq!(w.dim(), 1);
        let expected = vec![Q.zero(), d.varphi2.clone(), Q.from_i64(-1), Q.zero()];
        assert!(w.contains_vector(&expected));
    }

    #[test]
    fn identity_pair_has_one_eigenvalue() {
        let i = Matrix::identity(Q, 4);
        let (r, orderings) = verify_pair(&i, &i).unwrap();
        assert!(orderings.is_none() && !r.overall);
        assert_eq!(r.failed, vec!["(ii)", "(iii)"]);
    }

    #[test]
    fn p0_orderings() {
        let tds = construct(&p0()).unwrap();
        let found = find_td_orderings(&tds.a, &tds.astar).unwrap();
        assert_eq!(found.len(), 4);
        let rev = |x: &[FieldElement; 3]| [x[2].clone(), x[1].clone(), x[0].clone()];
        for (t, s) in [
            (tds.theta.clone(), tds.thetastar.clone()),
            (tds.theta.clone(), rev(&tds.thetastar)),
            (rev(&tds.theta), tds.thetastar.clone()),
            (rev(&tds.theta), rev(&tds.thetastar)),
        ] {
            assert!(found.contains(&(t, s)));
        }
        let swapped = find_td_orderings(&tds.astar, &tds.a).unwrap();
        let mut back: Vec<_> = swapped.into_iter().map(|(t, s)| (s, t)).collect();
        back.sort();
        let mut found = found;
        found.sort();
        assert_eq!(back, found);
    }

    #[test]
    fn repeated_split_with_junk_has_no_orderings() {
        let a = Matrix::from_i64(Q, &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 2]]);
        let s = Matrix::from_i64(Q, &[&[1, 1, 0, 1], &[1, 2, 1, 0], &[0, 1, 1, 1], &[1, 0, 1, 2]]);
        let junk = &(&s * &a) * &s.inverse().unwrap();
        assert!(find_td_orderings(&a, &junk).unwrap().is_empty());
    }

    #[test]
    fn split_components_at_p0() {
        let tds = construct(&p0()).unwrap();
        let u = split_decomposition(&tds, SplitDecompositionId::ZstarD).unwrap();
        assert_eq!(u.clone().map(|s| s.dim()), [1, 2, 1]);
        assert_eq!(u[0], tds.estar[0].image());
        let eig = split_decomposition(&tds, SplitDecompositionId::ZD).unwrap();
        for (space, e) in eig.iter().zip(&tds.e) {
            assert_eq!(*space, e.image());
        }
        let dual = split_decomposition(&tds, SplitDecompositionId::ZstarDstar).unwrap();
        for (space, e) in dual.iter().zip(&tds.estar) {
            assert_eq!(*space, e.image());
        }
    }

    #[test]
    fn corrupted_astar_breaks_the_split_actions() {
        let tds = construct(&p0()).unwrap();
        let mut bad = tds.clone();
        bad.astar.set(1, 2, Q.from_i64(1));
        assert!(!verify_split_actions(&bad));
    }

    #[test]
    fn relatives_are_td_systems() {
        let tds = construct(&p0()).unwrap();
        for g in D4Element::all() {
            let r = tds.relative(g).verify().unwrap();
            assert!(r.is_shape_121(), "{g:?}: {r}");
        }
    }
}
