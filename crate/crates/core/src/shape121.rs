//! Parameter arrays of shape (1,2,1) systems, the canonical construction and
//! its inverse, and the dihedral group D4 acting on arrays.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::tdcore::TdSystem;

/// `(θ0, θ1, θ2; θ*0, θ*1, θ*2; φ, ϕ)`. Nothing is checked on construction
/// beyond field agreement; see [`admissible`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParameterArray {
    pub theta: [FieldElement; 3],
    pub thetastar: [FieldElement; 3],
    pub varphi: FieldElement,
    pub phi: FieldElement,
}

impl ParameterArray {
    pub fn new(
        theta: [FieldElement; 3],
        thetastar: [FieldElement; 3],
        varphi: FieldElement,
        phi: FieldElement,
    ) -> Result<Self> {
        let field = theta[0].field();
        let all = theta.iter().chain(&thetastar).chain([&varphi, &phi]);
        if let Some(bad) = all.map(FieldElement::field).find(|&f| f != field) {
            return Err(Error::FieldMismatch(field, bad));
        }
        Ok(ParameterArray { theta, thetastar, varphi, phi })
    }

    pub fn from_i64(field: Field, theta: [i64; 3], thetastar: [i64; 3], varphi: i64, phi: i64) -> Self {
        ParameterArray {
            theta: theta.map(|x| field.from_i64(x)),
            thetastar: thetastar.map(|x| field.from_i64(x)),
            varphi: field.from_i64(varphi),
            phi: field.from_i64(phi),
        }
    }

    pub fn field(&self) -> Field {
        self.theta[0].field()
    }
}

impl fmt::Display for ParameterArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [t0, t1, t2] = &self.theta;
        let [s0, s1, s2] = &self.thetastar;
        write!(f, "({t0}, {t1}, {t2}; {s0}, {s1}, {s2}; {}, {})", self.varphi, self.phi)
    }
}

/// The scalars `φ1, φ2, ϕ1, ϕ2` by which quadratic products act on `E*0 V` and `E*2 V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DerivedParams {
    pub varphi1: FieldElement,
    pub varphi2: FieldElement,
    pub phi1: FieldElement,
    pub phi2: FieldElement,
}

impl DerivedParams {
    /// `[[φ1, ϕ1], [ϕ2, φ2]]`: ↓ swaps the rows, ⇓ swaps the columns, * transposes.
    pub fn grid(&self) -> [[FieldElement; 2]; 2] {
        [
            [self.varphi1.clone(), self.phi1.clone()],
            [self.phi2.clone(), self.varphi2.clone()],
        ]
    }

    pub fn from_grid(g: [[FieldElement; 2]; 2]) -> Self {
        let [[varphi1, phi1], [phi2, varphi2]] = g;
        DerivedParams { varphi1, varphi2, phi1, phi2 }
    }

    fn act(&self, letter: D4Letter) -> Self {
        let [[a, b], [c, d]] = self.grid();
        DerivedParams::from_grid(match letter {
            D4Letter::Down => [[c, d], [a, b]],
            D4Letter::DoubleDown => [[b, a], [d, c]],
            D4Letter::Star => [[a, c], [b, d]],
        })
    }
}

/// Needs only `θ0 ≠ θ2` and `θ*0 ≠ θ*2`.
pub fn derived_params(pa: &ParameterArray) -> Result<DerivedParams> {
    let [t0, t1, t2] = &pa.theta;
    let [s0, s1, s2] = &pa.thetastar;
    if t0 == t2 {
        return Err(Error::VanishingDenominator("theta0 = theta2"));
    }
    if s0 == s2 {
        return Err(Error::VanishingDenominator("thetastar0 = thetastar2"));
    }
    let gap = &(&pa.phi - &pa.varphi) / &(&(t0 - t2) * &(s0 - s2));
    Ok(DerivedParams {
        varphi1: &gap - &(&(t0 - t1) * &(s0 - s1)),
        phi1: &gap - &(&(t2 - t1) * &(s0 - s1)),
        phi2: &gap - &(&(t1 - t0) * &(s1 - s2)),
        varphi2: &gap - &(&(t1 - t2) * &(s1 - s2)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissibility {
    pub ok: bool,
    /// Condition ids `"(i)"`, `"(ii)"`, `"(iii)"` that fail.
    pub failed: Vec<String>,
}

/// (i) distinct eigenvalues in each sequence, (ii) `φ, ϕ ≠ 0`, (iii) `φ ≠ φ1 φ2`.
/// When `θ0 = θ2` or `θ*0 = θ*2` condition (iii) is undefined and only (i) is reported.
pub fn admissible(pa: &ParameterArray) -> Admissibility {
    let distinct = |x: &[FieldElement; 3]| x[0] != x[1] && x[0] != x[2] && x[1] != x[2];
    let mut failed = Vec::new();
    if !distinct(&pa.theta) || !distinct(&pa.thetastar) {
        failed.push("(i)".to_string());
    }
    if pa.varphi.is_zero() || pa.phi.is_zero() {
        failed.push("(ii)".to_string());
    }
    if let Ok(d) = derived_params(pa) {
        if pa.varphi == &d.varphi1 * &d.varphi2 {
            failed.push("(iii)".to_string());
        }
    }
    Admissibility { ok: failed.is_empty(), failed }
}

/// The canonical pair: `A` lower triangular, `A*` upper triangular, with
/// `E*0 V` spanned by the first coordinate vector.
pub fn canonical_matrices(pa: &ParameterArray) -> Result<(Matrix, Matrix)> {
    let field = pa.field();
    let d = derived_params(pa)?;
    let [t0, t1, t2] = pa.theta.clone();
    let [s0, s1, s2] = pa.thetastar.clone();
    let (z, o) = (field.zero(), field.one());
    let a = Matrix::from_rows(
        field,
        vec![
            vec![t0, z.clone(), z.clone(), z.clone()],
            vec![o.clone(), t1.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), t1, z.clone()],
            vec![z.clone(), o.clone(), d.varphi2, t2],
        ],
    )?;
    let astar = Matrix::from_rows(
        field,
        vec![
            vec![s0, d.varphi1, pa.varphi.clone(), z.clone()],
            vec![z.clone(), s1.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), s1, o],
            vec![z.clone(), z.clone(), z, s2],
        ],
    )?;
    Ok((a, astar))
}

/// Builds the TD system of an admissible array.
pub fn construct(pa: &ParameterArray) -> Result<TdSystem> {
    let report = admissible(pa);
    if !report.ok {
        return Err(Error::Inadmissible(report.failed));
    }
    construct_unchecked(pa)
}

/// Same matrices as [`construct`] without the admissibility gate. Needs
/// condition (i) so that the idempotents exist; used for boundary arrays.
pub fn construct_unchecked(pa: &ParameterArray) -> Result<TdSystem> {
    let (a, astar) = canonical_matrices(pa)?;
    TdSystem::new(a, astar, pa.theta.clone(), pa.thetastar.clone())
}

/// The scalar by which `p` acts on the image of `proj`, if it acts as one.
fn scalar_on_image(p: &Matrix, proj: &Matrix, name: &'static str) -> Result<FieldElement> {
    let v = proj
        .columns()
        .into_iter()
        .find(|c| c.iter().any(|x| !x.is_zero()))
        .ok_or(Error::NotScalar(name))?;
    let pv = p.mul_vec(&v);
    let k = v.iter().position(|x| !x.is_zero()).expect("nonzero column");
    let c = &pv[k] / &v[k];
    if p * proj != proj.scale(&c) {
        return Err(Error::NotScalar(name));
    }
    Ok(c)
}

/// Reads `φ` and `ϕ` off a system as the scalars by which
/// `(A*−θ*1)(A*−θ*2)(A−θ1)(A−θ0)` and `(A*−θ*1)(A*−θ*2)(A−θ1)(A−θ2)` act on `E*0 V`.
/// The scalar action is checked as a matrix identity `P·E*0 = c·E*0`.
pub fn extract_parameter_array(tds: &TdSystem) -> Result<ParameterArray> {
    let [t0, t1, t2] = &tds.theta;
    let [_, s1, s2] = &tds.thetastar;
    let star_part = &tds.astar.shift(s1) * &tds.astar.shift(s2);
    let a1 = tds.a.shift(t1);
    let p_varphi = &(&star_part * &a1) * &tds.a.shift(t0);
    let p_phi = &(&star_part * &a1) * &tds.a.shift(t2);
    let varphi = scalar_on_image(&p_varphi, &tds.estar[0], "varphi product")?;
    let phi = scalar_on_image(&p_phi, &tds.estar[0], "phi product")?;
    ParameterArray::new(tds.theta.clone(), tds.thetastar.clone(), varphi, phi)
}

/// Generators of D4: `*` swaps the roles of `A` and `A*`, `↓` reverses the
/// ordering of the `E*_i`, `⇓` reverses the ordering of the `E_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum D4Letter {
    Star,
    Down,
    DoubleDown,
}

impl D4Letter {
    pub fn symbol(self) -> char {
        match self {
            D4Letter::Star => '*',
            D4Letter::Down => '↓',
            D4Letter::DoubleDown => '⇓',
        }
    }
}

/// A word in the generators, read left to right: `Φ^{↓*}` is `(Φ^↓)^*`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct D4Word(pub Vec<D4Letter>);

impl FromStr for D4Word {
    type Err = Error;

    /// Accepts `*`, `↓`, `⇓` and the ASCII stand-ins `s`, `d`, `D`.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '*' | 's' => Ok(D4Letter::Star),
                '↓' | 'd' => Ok(D4Letter::Down),
                '⇓' | 'D' => Ok(D4Letter::DoubleDown),
                other => Err(Error::Malformed(format!("D4 letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(D4Word)
    }
}

impl fmt::Display for D4Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.symbol()))
    }
}

/// Reduced form of a word: reverse the `E_i` and/or `E*_i`, then optionally star.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct D4Element {
    pub rev_e: bool,
    pub rev_estar: bool,
    pub starred: bool,
}

impl D4Element {
    pub const IDENTITY: D4Element = D4Element { rev_e: false, rev_estar: false, starred: false };

    pub fn all() -> [D4Element; 8] {
        std::array::from_fn(|k| D4Element { rev_estar: k & 1 != 0, rev_e: k & 2 != 0, starred: k & 4 != 0 })
    }

    /// The element reached after also applying `letter`.
    pub fn then(self, letter: D4Letter) -> D4Element {
        let mut g = self;
        match (letter, self.starred) {
            (D4Letter::Star, _) => g.starred = !g.starred,
            (D4Letter::Down, false) | (D4Letter::DoubleDown, true) => g.rev_estar = !g.rev_estar,
            (D4Letter::Down, true) | (D4Letter::DoubleDown, false) => g.rev_e = !g.rev_e,
        }
        g
    }

    pub fn from_word(w: &D4Word) -> D4Element {
        w.0.iter().fold(D4Element::IDENTITY, |g, &l| g.then(l))
    }

    /// One of the 8 canonical words: `↓` then `⇓` then `*`, each optional.
    pub fn canonical_word(self) -> D4Word {
        let mut letters = Vec::new();
        if self.rev_estar {
            letters.push(D4Letter::Down);
        }
        if self.rev_e {
            letters.push(D4Letter::DoubleDown);
        }
        if self.starred {
            letters.push(D4Letter::Star);
        }
        D4Word(letters)
    }
}

fn act(pa: &ParameterArray, letter: D4Letter) -> ParameterArray {
    let rev = |x: &[FieldElement; 3]| [x[2].clone(), x[1].clone(), x[0].clone()];
    let (theta, thetastar, varphi, phi) = match letter {
        D4Letter::Star => (pa.thetastar.clone(), pa.theta.clone(), pa.varphi.clone(), pa.phi.clone()),
        D4Letter::Down => (pa.theta.clone(), rev(&pa.thetastar), pa.phi.clone(), pa.varphi.clone()),
        D4Letter::DoubleDown => (rev(&pa.theta), pa.thetastar.clone(), pa.phi.clone(), pa.varphi.clone()),
    };
    ParameterArray { theta, thetastar, varphi, phi }
}

/// Parameter array of the relative `Φ^w`, applying the letters of `w` in order.
pub fn relative(pa: &ParameterArray, w: &D4Word) -> ParameterArray {
    w.0.iter().fold(pa.clone(), |acc, &l| act(&acc, l))
}

/// Checks, for all 8 group elements, that the derived parameters of the
/// relative array are the matching rearrangement of the original ones.
pub fn derived_of_relative_consistency(pa: &ParameterArray) -> Result<bool> {
    let base = derived_params(pa)?;
    for g in D4Element::all() {
        let word = g.canonical_word();
        let expected = word.0.iter().fold(base.clone(), |d, &l| d.act(l));
        if derived_params(&relative(pa, &word))? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn q(n: i64, d: i64) -> FieldElement {
        Q.ratio(n, d).unwrap()
    }

    fn p0() -> ParameterArray {
        ParameterArray::from_i64(Q, [1, 0, -1], [1, 0, -1], 2, 1)
    }

    #[test]
    fn p0_derived_params() {
        let d = derived_params(&p0()).unwrap();
        assert_eq!((d.varphi1.clone(), d.varphi2.clone()), (q(-5, 4), q(-5, 4)));
        assert_eq!((d.phi1.clone(), d.phi2.clone()), (q(3, 4), q(3, 4)));
        let pa = p0();
        assert_eq!(&pa.varphi - &(&d.varphi1 * &d.varphi2), q(7, 16));
        assert_eq!(&pa.phi - &(&d.phi1 * &d.phi2), q(7, 16));
    }

    #[test]
    fn equal_split_eigenvalues_drop_the_difference_term() {
        let pa = ParameterArray::from_i64(Q, [3, 7, -2], [5, 1, 4], 6, 6);
        let d = derived_params(&pa).unwrap();
        assert_eq!(d.varphi1, -&(&q(3 - 7, 1) * &q(5 - 1, 1)));
    }

    #[test]
    fn admissibility_conditions() {
        assert!(admissible(&p0()).ok);
        let repeated = ParameterArray::from_i64(Q, [1, 1, -1], [1, 0, -1], 2, 1);
        assert_eq!(admissible(&repeated).failed, vec!["(i)"]);
        let zero = ParameterArray::from_i64(Q, [1, 0, -1], [1, 0, -1], 0, 1);
        assert_eq!(admissible(&zero).failed, vec!["(ii)"]);
        assert!(matches!(construct(&zero), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn p0_canonical_matrices() {
        let (a, astar) = canonical_matrices(&p0()).unwrap();
        let expect_a = Matrix::from_rows(
            Q,
            vec![
                vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)],
                vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)],
                vec![q(0, 1), q(0, 1), q(0, 1), q(0, 1)],
                vec![q(0, 1), q(1, 1), q(-5, 4), q(-1, 1)],
            ],
        )
        .unwrap();
        let expect_astar = Matrix::from_rows(
            Q,
            vec![
                vec![q(1, 1), q(-5, 4), q(2, 1), q(0, 1)],
                vec![q(0, 1), q(0, 1), q(0, 1), q(0, 1)],
                vec![q(0, 1), q(0, 1), q(0, 1), q(1, 1)],
                vec![q(0, 1), q(0, 1), q(0, 1), q(-1, 1)],
            ],
        )
        .unwrap();
        assert_eq!(a, expect_a);
        assert_eq!(astar, expect_astar);
    }

    #[test]
    fn p0_estar2_has_one_nonzero_column() {
        let tds = construct(&p0()).unwrap();
        let mut expected = Matrix::zeros(Q, 4, 4);
        for (i, v) in [q(1, 1), q(0, 1), q(-1, 1), q(1, 1)].into_iter().enumerate() {
            expected.set(i, 3, v);
        }
        assert_eq!(tds.estar[2], expected);
    }

    #[test]
    fn extract_roundtrip_and_similarity_invariance() {
        let tds = construct(&p0()).unwrap();
        assert_eq!(extract_parameter_array(&tds).unwrap(), p0());
        let s = Matrix::from_i64(Q, &[&[1, 2, 0, 0], &[0, 1, 3, 0], &[0, 0, 1, -1], &[1, 0, 0, 1]]);
        let si = s.inverse().unwrap();
        let conj = |m: &Matrix| &(&si * m) * &s;
        let moved = TdSystem::new(conj(&tds.a), conj(&tds.astar), tds.theta.clone(), tds.thetastar.clone()).unwrap();
        assert_eq!(extract_parameter_array(&moved).unwrap(), p0());
    }

    #[test]
    fn relative_down_of_p0() {
        let down: D4Word = "↓".parse().unwrap();
        let expected = ParameterArray::from_i64(Q, [1, 0, -1], [-1, 0, 1], 1, 2);
        assert_eq!(relative(&p0(), &down), expected);
        assert_eq!(relative(&p0(), &D4Word::default()), p0());
        assert_eq!(relative(&relative(&p0(), &down), &down), p0());
    }

    #[test]
    fn d4_reduction_has_eight_elements() {
        let words = ["", "*", "↓", "⇓", "↓⇓", "↓*", "⇓*", "↓⇓*", "*↓*", "*⇓↓*⇓"];
        let mut elements: Vec<D4Element> =
            words.iter().map(|w| D4Element::from_word(&w.parse().unwrap())).collect();
        elements.sort();
        elements.dedup();
        assert_eq!(elements.len(), 8);
        for g in D4Element::all() {
            assert_eq!(D4Element::from_word(&g.canonical_word()), g);
        }
    }

    #[test]
    fn relative_respects_reduction() {
        let pa = ParameterArray::from_i64(Q, [2, 5, -3], [7, 1, 0], 4, -9);
        for w in ["*↓", "⇓*", "↓*⇓↓", "**", "⇓↓*↓"] {
            let word: D4Word = w.parse().unwrap();
            let reduced = D4Element::from_word(&word).canonical_word();
            assert_eq!(relative(&pa, &word), relative(&pa, &reduced), "{w}");
        }
    }

    #[test]
    fn derived_consistency_at_p0() {
        assert!(derived_of_relative_consistency(&p0()).unwrap());
    }

    #[test]
    fn symmetric_sequences_with_equal_split_eigenvalues() {
        // θ and θ* symmetric about their middle term, φ = ϕ: φ1 = φ2 and ϕ1 = ϕ2 = -φ1.
        let pa = ParameterArray::from_i64(Q, [4, 1, -2], [3, 0, -3], 5, 5);
        let d = derived_params(&pa).unwrap();
        assert_eq!(d.varphi1, d.varphi2);
        assert_eq!(d.phi1, d.phi2);
        assert_eq!(d.phi1, -&d.varphi1);
    }
}
