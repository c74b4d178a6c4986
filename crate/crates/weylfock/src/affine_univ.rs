//! Truncated universal affine vertex algebras `N(k Lambda_0)`.
//!
//! Elements are exact rational combinations of canonical PBW monomials in
//! the negative modes of a Chevalley basis, ordered by mode (more negative
//! first) and then by basis index. Mode actions implement the affine
//! bracket `[x(m), y(n)] = [x,y](m+n) + m delta_{m+n,0} k <x,y>` with the
//! invariant form normalized so that `<e_theta, f_theta> = 1`, which makes
//! levels literal.
//!
//! Singularity is checked against the standard generating set of raising
//! operators: the zero modes of the simple raising vectors together with
//! `f_theta(1)`; these generate the annihilating nilpotent part of the
//! affinization.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::num::{qi, Q};
use crate::rootlie::chevalley::{Algebra, LieElt};
use crate::rootlie::labels::{LabelTable, RootLabel};
use crate::rootlie::{Series, SeriesLabel, Weight};
use crate::{Error, Result};

/// Default conformal-degree cutoff: deep enough for every explicit
/// singular vector handled here (the deepest is cubic) plus one raising
/// step.
pub const DEFAULT_CUTOFF: i64 = 4;

/// An affine vertex algebra truncation: finite algebra, level, cutoff.
pub struct AffineAlgebra {
    pub alg: Algebra,
    pub level: Q,
    pub cutoff: i64,
}

impl AffineAlgebra {
    pub fn new(label: SeriesLabel, level: Q) -> Result<AffineAlgebra> {
        Ok(AffineAlgebra {
            alg: Algebra::new(label)?,
            level,
            cutoff: DEFAULT_CUTOFF,
        })
    }

    pub fn with_cutoff(mut self, cutoff: i64) -> AffineAlgebra {
        self.cutoff = cutoff;
        self
    }
}

/// A canonical PBW monomial: factors `(mode, basis index)` applied to the
/// vacuum, sorted ascending (so the most negative modes come first), with
/// all modes strictly negative.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PbwMonomial(pub Vec<(i64, u16)>);

impl PbwMonomial {
    pub fn vacuum() -> PbwMonomial {
        PbwMonomial(Vec::new())
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|(n, _)| -n).sum()
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self, alg: &Algebra) -> Weight {
        let mut w = Weight::zero(alg.rs.ambient);
        for (_, b) in &self.0 {
            w = w.add(&alg.basis_weight(*b as usize));
        }
        w
    }
}

/// A finite combination of PBW monomials with a degree cutoff tag.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PbwVector {
    pub terms: BTreeMap<PbwMonomial, Q>,
    pub cutoff: i64,
}

impl PbwVector {
    pub fn zero(cutoff: i64) -> PbwVector {
        PbwVector {
            terms: BTreeMap::new(),
            cutoff,
        }
    }

    pub fn vacuum(cutoff: i64) -> PbwVector {
        let mut terms = BTreeMap::new();
        terms.insert(PbwMonomial::vacuum(), Q::one());
        PbwVector { terms, cutoff }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &PbwVector, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            let entry = self.terms.entry(m.clone()).or_insert_with(Q::zero);
            *entry += v * c;
            if entry.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    pub fn scale(&mut self, c: &Q) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
    }

    /// Maximum conformal degree among the terms.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// The common 𝔤-weight of the terms, when homogeneous.
    pub fn weight(&self, alg: &Algebra) -> Option<Weight> {
        let mut it = self.terms.keys();
        let first = it.next()?.weight(alg);
        for m in it {
            if m.weight(alg) != first {
                return None;
            }
        }
        Some(first)
    }
}

/// All canonical monomials of conformal degree `d`, optionally filtered by
/// 𝔤-weight, in deterministic order.
pub fn pbw_basis(aff: &AffineAlgebra, degree: i64, weight: Option<&Weight>) -> Result<Vec<PbwMonomial>> {
    if degree < 0 {
        return Ok(Vec::new());
    }
    if degree > aff.cutoff {
        return Err(Error::CutoffExceeded(format!(
            "degree {degree} exceeds cutoff {}",
            aff.cutoff
        )));
    }
    let dim = aff.alg.basis_dim() as u16;
    let mut out = Vec::new();
    let mut stack: Vec<(i64, u16)> = Vec::new();
    // Factors are chosen in non-decreasing canonical order (mode, basis).
    fn rec(
        aff: &AffineAlgebra,
        dim: u16,
        remaining: i64,
        min_factor: (i64, u16),
        stack: &mut Vec<(i64, u16)>,
        out: &mut Vec<PbwMonomial>,
        weight: Option<&Weight>,
    ) {
        if remaining == 0 {
            let m = PbwMonomial(stack.clone());
            if weight.map_or(true, |w| &m.weight(&aff.alg) == w) {
                out.push(m);
            }
            return;
        }
        for n in -remaining..=-1 {
            let b0 = if n == min_factor.0 { min_factor.1 } else { 0 };
            for b in b0..dim {
                if (n, b) < min_factor {
                    continue;
                }
                stack.push((n, b));
                rec(aff, dim, remaining + n, (n, b), stack, out, weight);
                stack.pop();
            }
        }
    }
    rec(aff, dim, degree, (i64::MIN, 0), &mut stack, &mut out, weight);
    out.sort();
    Ok(out)
}

/// Straightens `x_b(n) . v` into canonical PBW form.
pub fn act_mode(aff: &AffineAlgebra, basis: u16, n: i64, v: &PbwVector) -> Result<PbwVector> {
    let mut out = PbwVector::zero(v.cutoff);
    for (mono, coeff) in &v.terms {
        let new_deg = mono.degree() - n;
        if new_deg > v.cutoff {
            return Err(Error::CutoffExceeded(format!(
                "degree {new_deg} exceeds cutoff {}",
                v.cutoff
            )));
        }
        let t = mul_mode(aff, basis, n, &mono.0)?;
        out.add_scaled(&t, coeff);
    }
    Ok(out)
}

/// Applies a general Lie element at mode `n`.
pub fn act_lie(aff: &AffineAlgebra, x: &LieElt, n: i64, v: &PbwVector) -> Result<PbwVector> {
    let mut out = PbwVector::zero(v.cutoff);
    for (b, c) in aff.alg.to_basis(x) {
        let t = act_mode(aff, b as u16, n, v)?;
        out.add_scaled(&t, &c);
    }
    Ok(out)
}

fn mul_mode(aff: &AffineAlgebra, basis: u16, n: i64, factors: &[(i64, u16)]) -> Result<PbwVector> {
    let cutoff = aff.cutoff;
    // Vacuum annihilation: nonnegative modes kill the vacuum.
    if factors.is_empty() {
        if n >= 0 {
            return Ok(PbwVector::zero(cutoff));
        }
        let mut terms = BTreeMap::new();
        terms.insert(PbwMonomial(vec![(n, basis)]), Q::one());
        return Ok(PbwVector { terms, cutoff });
    }
    let head = factors[0];
    if n < 0 && (n, basis) <= head {
        // already in canonical position
        let mut mono = Vec::with_capacity(factors.len() + 1);
        mono.push((n, basis));
        mono.extend_from_slice(factors);
        let mut terms = BTreeMap::new();
        terms.insert(PbwMonomial(mono), Q::one());
        return Ok(PbwVector { terms, cutoff });
    }
    // Commute past the head: x(n) y(m) = y(m) x(n) + [x,y](n+m) + n d k <x,y>
    let (m, hb) = head;
    let rest = &factors[1..];
    let mut out = PbwVector::zero(cutoff);

    // y(m) * (x(n) . rest)
    let tail = mul_mode(aff, basis, n, rest)?;
    for (mono, c) in &tail.terms {
        let t = mul_mode(aff, hb, m, &mono.0)?;
        out.add_scaled(&t, c);
    }

    // [x, y](n+m) . rest
    let x = aff.alg.basis_elt(basis as usize);
    let y = aff.alg.basis_elt(hb as usize);
    let br = aff.alg.bracket(&x, &y);
    if !br.is_zero() {
        let rest_vec = PbwVector {
            terms: {
                let mut t = BTreeMap::new();
                t.insert(PbwMonomial(rest.to_vec()), Q::one());
                t
            },
            cutoff,
        };
        for (b, c) in aff.alg.to_basis(&br) {
            let t = mul_mode_vec(aff, b as u16, n + m, &rest_vec)?;
            out.add_scaled(&t, &c);
        }
    }

    // central term
    if n + m == 0 && n != 0 {
        let pairing = aff.alg.form(&x, &y);
        if !pairing.is_zero() {
            let c = qi(n) * &aff.level * pairing;
            let rest_vec = PbwVector {
                terms: {
                    let mut t = BTreeMap::new();
                    t.insert(PbwMonomial(rest.to_vec()), Q::one());
                    t
                },
                cutoff,
            };
            out.add_scaled(&rest_vec, &c);
        }
    }
    Ok(out)
}

fn mul_mode_vec(aff: &AffineAlgebra, basis: u16, n: i64, v: &PbwVector) -> Result<PbwVector> {
    let mut out = PbwVector::zero(v.cutoff);
    for (mono, c) in &v.terms {
        let t = mul_mode(aff, basis, n, &mono.0)?;
        out.add_scaled(&t, c);
    }
    Ok(out)
}

/// The explicit singular vectors verified by this crate, each carried at
/// its distinguished level.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PaperVector {
    /// Quadratic (rank >= 3) or cubic (rank 3 algebra, `ell = 3`) vector in
    /// type `A_{ell-1}` at level -1.
    AType { ell: u8 },
    /// The quadratic type-D vector at level `-ell + 2`.
    DType { ell: u8 },
    /// The quadratic E6 vector at level -3.
    E6,
}

impl PaperVector {
    pub fn default_level(&self) -> Q {
        match self {
            PaperVector::AType { .. } => qi(-1),
            PaperVector::DType { ell } => qi(-(*ell as i64) + 2),
            PaperVector::E6 => qi(-3),
        }
    }
}

/// Builds the chosen vector over its algebra at the given level (the
/// distinguished level if `None`). Labels are resolved through the
/// calibrated sign tables, so the printed unit coefficients are literal.
pub fn build_paper_vector(which: PaperVector, level: Option<Q>) -> Result<(AffineAlgebra, PbwVector)> {
    let level_or = |d: Q| level.clone().unwrap_or(d);
    match which {
        PaperVector::AType { ell } => {
            if ell < 3 {
                return Err(Error::UnsupportedLabel("type-A vector needs ell >= 3".into()));
            }
            let aff = AffineAlgebra::new(
                SeriesLabel::new(Series::A, ell - 1)?,
                level_or(which.default_level()),
            )?;
            let t = LabelTable::new(&aff.alg)?;
            let vac = PbwVector::vacuum(aff.cutoff);
            let v = if ell >= 4 {
                // e_{eps1-epsl}(-1) e_{eps2-eps(l-1)}(-1) 1
                //   - e_{eps2-epsl}(-1) e_{eps1-eps(l-1)}(-1) 1
                let m1 = act_lie(
                    &aff,
                    &t.e(&aff.alg, RootLabel::Diff(1, ell))?,
                    -1,
                    &act_lie(&aff, &t.e(&aff.alg, RootLabel::Diff(2, ell - 1))?, -1, &vac)?,
                )?;
                let m2 = act_lie(
                    &aff,
                    &t.e(&aff.alg, RootLabel::Diff(2, ell))?,
                    -1,
                    &act_lie(&aff, &t.e(&aff.alg, RootLabel::Diff(1, ell - 1))?, -1, &vac)?,
                )?;
                let mut v = m1;
                v.add_scaled(&m2, &qi(-1));
                v
            } else {
                // e23(-1)^2 e12(-1) 1 - e13(-1) e23(-1) h12(-1) 1
                //   - e13(-1)^2 f12(-1) 1
                let e12 = t.e(&aff.alg, RootLabel::Diff(1, 2))?;
                let e13 = t.e(&aff.alg, RootLabel::Diff(1, 3))?;
                let e23 = t.e(&aff.alg, RootLabel::Diff(2, 3))?;
                let f12 = t.f(&aff.alg, RootLabel::Diff(1, 2))?;
                let h12 = t.h(&aff.alg, RootLabel::Diff(1, 2))?;
                let m1 = act_lie(
                    &aff,
                    &e23,
                    -1,
                    &act_lie(&aff, &e23, -1, &act_lie(&aff, &e12, -1, &vac)?)?,
                )?;
                let m2 = act_lie(
                    &aff,
                    &e13,
                    -1,
                    &act_lie(&aff, &e23, -1, &act_lie(&aff, &h12, -1, &vac)?)?,
                )?;
                let m3 = act_lie(
                    &aff,
                    &e13,
                    -1,
                    &act_lie(&aff, &e13, -1, &act_lie(&aff, &f12, -1, &vac)?)?,
                )?;
                let mut v = m1;
                v.add_scaled(&m2, &qi(-1));
                v.add_scaled(&m3, &qi(-1));
                v
            };
            Ok((aff, v))
        }
        PaperVector::DType { ell } => {
            if ell < 3 {
                return Err(Error::UnsupportedLabel("type-D vector needs ell >= 3".into()));
            }
            let aff = AffineAlgebra::new(
                SeriesLabel::new(Series::D, ell)?,
                level_or(which.default_level()),
            )?;
            let t = LabelTable::new(&aff.alg)?;
            let vac = PbwVector::vacuum(aff.cutoff);
            let mut v = PbwVector::zero(aff.cutoff);
            // sum_{i=2}^{ell} e_{eps1-epsi}(-1) e_{eps1+epsi}(-1) 1
            for i in 2..=ell {
                let m = act_lie(
                    &aff,
                    &t.e(&aff.alg, RootLabel::Diff(1, i))?,
                    -1,
                    &act_lie(&aff, &t.e(&aff.alg, RootLabel::Sum(1, i))?, -1, &vac)?,
                )?;
                v.add_scaled(&m, &Q::one());
            }
            Ok((aff, v))
        }
        PaperVector::E6 => {
            let aff = AffineAlgebra::new(
                SeriesLabel::new(Series::E, 6)?,
                level_or(which.default_level()),
            )?;
            let t = LabelTable::new(&aff.alg)?;
            let vac = PbwVector::vacuum(aff.cutoff);
            let mut v = PbwVector::zero(aff.cutoff);
            // (e_(5) e_(12345) + e_(125) e_(345) + e_(135) e_(245)
            //   + e_(235) e_(145))(-1,-1) 1
            let pairs = [
                (0b10000u32, 0b11111u32),
                (0b10011, 0b11100),
                (0b10101, 0b11010),
                (0b10110, 0b11001),
            ];
            for (s1, s2) in pairs {
                let m = act_lie(
                    &aff,
                    &t.e(&aff.alg, RootLabel::Half(s1))?,
                    -1,
                    &act_lie(&aff, &t.e(&aff.alg, RootLabel::Half(s2))?, -1, &vac)?,
                )?;
                v.add_scaled(&m, &Q::one());
            }
            Ok((aff, v))
        }
    }
}

/// Outcome of a singularity check, with the first nonzero raising image
/// as a witness on failure.
#[derive(Clone, Debug)]
pub struct SingularCheck {
    pub singular: bool,
    pub witness: Option<(String, PbwVector)>,
}

/// The raising operators whose kernel defines singular vectors here: the
/// zero modes of the simple raising vectors and `f_theta(1)`.
fn raising_operators(aff: &AffineAlgebra) -> Vec<(String, u16, i64)> {
    let m = aff.alg.npos();
    let mut ops: Vec<(String, u16, i64)> = Vec::new();
    for (i, alpha) in aff.alg.rs.simple_roots.iter().enumerate() {
        let idx = aff.alg.rs.positive_index(alpha).expect("simple root");
        ops.push((format!("e_{}(0)", i + 1), idx as u16, 0));
    }
    let theta_neg = aff.alg.rs.highest_root_idx + m;
    ops.push(("f_theta(1)".into(), theta_neg as u16, 1));
    ops
}

/// Checks `e_i(0) v = 0` for every simple `i` and `f_theta(1) v = 0`.
pub fn is_singular(aff: &AffineAlgebra, v: &PbwVector) -> Result<SingularCheck> {
    if v.is_zero() {
        return Err(Error::BadInput("singularity check of the zero vector".into()));
    }
    for (name, b, n) in raising_operators(aff) {
        let image = act_mode(aff, b, n, v)?;
        if !image.is_zero() {
            return Ok(SingularCheck {
                singular: false,
                witness: Some((name, image)),
            });
        }
    }
    Ok(SingularCheck {
        singular: true,
        witness: None,
    })
}

/// Exact kernel of the raising operators on the `(degree, weight)` slice:
/// every singular vector there, as a deterministic basis.
pub fn singular_space(aff: &AffineAlgebra, degree: i64, weight: &Weight) -> Result<Vec<PbwVector>> {
    let basis = pbw_basis(aff, degree, Some(weight))?;
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let mut rows: Vec<crate::linalg::SparseRow> = Vec::new();
    for (_, b, n) in raising_operators(aff) {
        // column j of the operator: image of basis monomial j
        let mut images = Vec::with_capacity(basis.len());
        let mut target_index: BTreeMap<PbwMonomial, usize> = BTreeMap::new();
        for mono in &basis {
            let v = PbwVector {
                terms: {
                    let mut t = BTreeMap::new();
                    t.insert(mono.clone(), Q::one());
                    t
                },
                cutoff: aff.cutoff,
            };
            let img = act_mode(aff, b, n, &v)?;
            for m in img.terms.keys() {
                let next = target_index.len();
                target_index.entry(m.clone()).or_insert(next);
            }
            images.push(img);
        }
        let mut op_rows: Vec<crate::linalg::SparseRow> = vec![Vec::new(); target_index.len()];
        for (j, img) in images.iter().enumerate() {
            for (m, c) in &img.terms {
                op_rows[target_index[m]].push((j, c.clone()));
            }
        }
        rows.extend(op_rows);
    }
    let kernel = crate::linalg::kernel_basis(&rows, basis.len());
    Ok(kernel
        .into_iter()
        .map(|vec| {
            let mut terms = BTreeMap::new();
            for (j, c) in vec {
                terms.insert(basis[j].clone(), c);
            }
            PbwVector {
                terms,
                cutoff: aff.cutoff,
            }
        })
        .collect())
}

/// Graded dimensions of the submodule generated from `v` by all modes
/// `x(n)`, computed by saturation up to degree `max_degree`.
pub fn ideal_graded_dims(
    aff: &AffineAlgebra,
    v: &PbwVector,
    max_degree: i64,
) -> Result<Vec<(i64, usize)>> {
    if max_degree > aff.cutoff {
        return Err(Error::CutoffExceeded(format!(
            "max degree {max_degree} exceeds cutoff {}",
            aff.cutoff
        )));
    }
    // One echelon per degree; monomial columns are indexed on demand.
    let mut col_index: BTreeMap<PbwMonomial, usize> = BTreeMap::new();
    let index_of = |m: &PbwMonomial, col_index: &mut BTreeMap<PbwMonomial, usize>| -> usize {
        if let Some(i) = col_index.get(m) {
            return *i;
        }
        let next = col_index.len();
        col_index.insert(m.clone(), next);
        next
    };
    let to_row = |vec: &PbwVector, col_index: &mut BTreeMap<PbwMonomial, usize>| {
        let mut row: crate::linalg::SparseRow = vec
            .terms
            .iter()
            .map(|(m, c)| (index_of(m, col_index), c.clone()))
            .collect();
        row.sort_by_key(|(c, _)| *c);
        row
    };
    let mut echelons: BTreeMap<i64, crate::linalg::Echelon> = BTreeMap::new();
    let mut queue: Vec<PbwVector> = Vec::new();

    let deg_v = v.degree();
    if deg_v > max_degree {
        return Ok((0..=max_degree).map(|d| (d, 0)).collect());
    }
    {
        let row = to_row(v, &mut col_index);
        echelons.entry(deg_v).or_default().insert(row);
        queue.push(v.clone());
    }
    let basis_dim = aff.alg.basis_dim() as u16;
    while let Some(w) = queue.pop() {
        let g = w.degree();
        for b in 0..basis_dim {
            for n in (g - max_degree)..=g {
                let img = act_mode(aff, b, n, &w)?;
                if img.is_zero() {
                    continue;
                }
                let d = g - n;
                let row = to_row(&img, &mut col_index);
                if echelons.entry(d).or_default().insert(row) {
                    queue.push(img);
                }
            }
        }
    }
    Ok((0..=max_degree)
        .map(|d| (d, echelons.get(&d).map_or(0, |e| e.rank())))
        .collect())
}

/// Pretty-prints a PBW vector for witnesses and CLI output.
pub fn pbw_to_string(aff: &AffineAlgebra, v: &PbwVector) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let m = aff.alg.npos();
    let name = |b: u16| -> String {
        let b = b as usize;
        if b < m {
            format!("e[{}]", aff.alg.rs.positive_roots[b].coords_string())
        } else if b < 2 * m {
            format!("f[{}]", aff.alg.rs.positive_roots[b - m].coords_string())
        } else {
            format!("h{}", b - 2 * m + 1)
        }
    };
    v.terms
        .iter()
        .map(|(mono, c)| {
            let factors: Vec<String> = mono
                .0
                .iter()
                .map(|(n, b)| format!("{}({})", name(*b), n))
                .collect();
            let body = if factors.is_empty() {
                "1".to_string()
            } else {
                factors.join(" ")
            };
            format!("({}) {}", crate::num::q_string(c), body)
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::qr;

    fn a1_level(k: i64) -> AffineAlgebra {
        AffineAlgebra::new(SeriesLabel::new(Series::A, 1).unwrap(), qi(k)).unwrap()
    }

    #[test]
    fn pbw_counts_rank_one() {
        let aff = a1_level(-1);
        assert_eq!(pbw_basis(&aff, 0, None).unwrap().len(), 1);
        assert_eq!(pbw_basis(&aff, 1, None).unwrap().len(), 3);
        // 3 from x(-2) plus sym^2 of the 3-dim space at mode -1
        assert_eq!(pbw_basis(&aff, 2, None).unwrap().len(), 9);
    }

    #[test]
    fn vacuum_annihilation_and_level_term() {
        let aff = a1_level(5);
        let vac = PbwVector::vacuum(aff.cutoff);
        let m = aff.alg.npos();
        let theta = aff.alg.rs.highest_root_idx;
        // x(0) 1 = 0
        assert!(act_mode(&aff, theta as u16, 0, &vac).unwrap().is_zero());
        // e_theta(1) f_theta(-1) 1 = k 1
        let f = act_mode(&aff, (theta + m) as u16, -1, &vac).unwrap();
        let back = act_mode(&aff, theta as u16, 1, &f).unwrap();
        let mut expected = PbwVector::vacuum(aff.cutoff);
        expected.scale(&qi(5));
        assert_eq!(back, expected);
    }

    #[test]
    fn h_theta_then_annihilate() {
        let aff = a1_level(2);
        let vac = PbwVector::vacuum(aff.cutoff);
        let m = aff.alg.npos();
        let theta = aff.alg.rs.highest_root_idx;
        let f = act_mode(&aff, (theta + m) as u16, -1, &vac).unwrap();
        // h_theta(1) f_theta(-1) 1 = [h,f](0) 1 + 0 = -2 f(0) 1 = 0
        let h_idx = {
            // the simple coroot equals theta's coroot in rank 1
            (2 * m) as u16
        };
        let out = act_mode(&aff, h_idx, 1, &f).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn straightening_is_canonical() {
        let aff = a1_level(-1);
        let vac = PbwVector::vacuum(aff.cutoff);
        let m = aff.alg.npos();
        // build e(-1) f(-2) 1 and f(-2) e(-1) 1; they differ by [e,f](-3)
        let e_then_f = act_mode(
            &aff,
            0,
            -1,
            &act_mode(&aff, m as u16, -2, &vac).unwrap(),
        )
        .unwrap();
        let f_then_e = act_mode(
            &aff,
            m as u16,
            -2,
            &act_mode(&aff, 0, -1, &vac).unwrap(),
        )
        .unwrap();
        let mut diff = e_then_f.clone();
        diff.add_scaled(&f_then_e, &qi(-1));
        // [e, f](-3) 1 = h(-3) 1
        let h = act_mode(&aff, (2 * m) as u16, -3, &vac).unwrap();
        assert_eq!(diff, h);
    }

    #[test]
    fn a_type_vectors_are_singular_at_level_minus_one() {
        for ell in [3u8, 4, 5] {
            let (aff, v) = build_paper_vector(PaperVector::AType { ell }, None).unwrap();
            let expected_degree = if ell == 3 { 3 } else { 2 };
            assert_eq!(v.degree(), expected_degree);
            // weight homogeneity and the expected weight pattern
            let w = v.weight(&aff.alg).expect("homogeneous");
            let mut coords = vec![qi(0); ell as usize];
            if ell >= 4 {
                coords[0] = qi(1);
                coords[1] = qi(1);
                coords[ell as usize - 2] = qi(-1);
                coords[ell as usize - 1] = qi(-1);
            } else {
                coords = vec![qi(1), qi(1), qi(-2)];
            }
            assert_eq!(w, Weight(coords));
            let check = is_singular(&aff, &v).unwrap();
            assert!(check.singular, "ell = {ell}");
        }
    }

    #[test]
    fn a_type_singularity_is_level_specific() {
        for k in [0i64, 1, -2] {
            let (aff, v) =
                build_paper_vector(PaperVector::AType { ell: 4 }, Some(qi(k))).unwrap();
            let check = is_singular(&aff, &v).unwrap();
            assert!(!check.singular, "level {k}");
            assert!(check.witness.is_some());
        }
    }

    #[test]
    fn d_type_vectors_are_singular() {
        for ell in [4u8, 5] {
            let (aff, v) = build_paper_vector(PaperVector::DType { ell }, None).unwrap();
            assert_eq!(v.degree(), 2);
            let w = v.weight(&aff.alg).expect("homogeneous");
            let mut coords = vec![qi(0); ell as usize];
            coords[0] = qi(2);
            assert_eq!(w, Weight(coords));
            let check = is_singular(&aff, &v).unwrap();
            assert!(check.singular, "ell = {ell}");
            let (aff_bad, v_bad) =
                build_paper_vector(PaperVector::DType { ell }, Some(qi(0))).unwrap();
            assert!(!is_singular(&aff_bad, &v_bad).unwrap().singular);
        }
    }

    #[test]
    fn e6_vector_is_singular_at_minus_three() {
        let (aff, v) = build_paper_vector(PaperVector::E6, None).unwrap();
        assert_eq!(v.terms.len(), 4);
        assert!(v.terms.values().all(|c| *c == qi(1) || *c == qi(-1)));
        let check = is_singular(&aff, &v).unwrap();
        assert!(check.singular);
        let (aff0, v0) = build_paper_vector(PaperVector::E6, Some(qi(0))).unwrap();
        let check0 = is_singular(&aff0, &v0).unwrap();
        assert!(!check0.singular);
        assert!(check0.witness.unwrap().0.contains("f_theta"));
    }

    #[test]
    fn e6_singular_space_is_one_dimensional() {
        let (aff, v) = build_paper_vector(PaperVector::E6, None).unwrap();
        let w = v.weight(&aff.alg).unwrap();
        let space = singular_space(&aff, 2, &w).unwrap();
        assert_eq!(space.len(), 1);
        // the kernel vector is proportional to v
        let k = &space[0];
        let (m0, c0) = v.terms.iter().next().unwrap();
        let scale = c0 / k.terms.get(m0).expect("same support");
        let mut scaled = k.clone();
        scaled.scale(&scale);
        assert_eq!(&scaled, &v);
    }

    #[test]
    fn ideal_dims_match_finite_module_dimensions() {
        // degree-2 slice of the submodule generated by the quadratic
        // vector equals the finite-dimensional module of its weight
        let (aff, v) = build_paper_vector(PaperVector::AType { ell: 4 }, None).unwrap();
        let aff = AffineAlgebra {
            alg: aff.alg,
            level: aff.level,
            cutoff: 2,
        };
        let v = PbwVector {
            terms: v.terms,
            cutoff: 2,
        };
        let dims = ideal_graded_dims(&aff, &v, 2).unwrap();
        assert_eq!(dims[0], (0, 0));
        assert_eq!(dims[1], (1, 0));
        // dim V_{A3}(eps1+eps2-eps3-eps4) = dim V(2 omega_2) = 20
        assert_eq!(dims[2], (2, 20));
    }

    #[test]
    fn cutoff_is_enforced() {
        let aff = a1_level(-1).with_cutoff(2);
        let vac = PbwVector::vacuum(2);
        let v = act_mode(&aff, 0, -2, &vac).unwrap();
        assert!(act_mode(&aff, 0, -1, &v).is_err());
        assert!(pbw_basis(&aff, 3, None).is_err());
    }

    #[test]
    fn level_matters_quantitatively() {
        // e_theta(1) f_theta(-1) 1 = k 1 exactly, over a rational level
        let aff = AffineAlgebra::new(SeriesLabel::new(Series::A, 1).unwrap(), qr(-3, 2)).unwrap();
        let vac = PbwVector::vacuum(aff.cutoff);
        let m = aff.alg.npos();
        let f = act_mode(&aff, m as u16, -1, &vac).unwrap();
        let back = act_mode(&aff, 0, 1, &f).unwrap();
        let coeff = back.terms.get(&PbwMonomial::vacuum()).unwrap();
        assert_eq!(coeff, &qr(-3, 2));
    }
}
