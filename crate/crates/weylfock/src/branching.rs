//! Numerical identities and label-level bookkeeping: lowest conformal
//! weights, central charges, the integer fusion monoid, the finite
//! E6 -> D5 branching, classification label families, and machine-readable
//! decomposition reports.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::charact::{weight_multiplicities, DEFAULT_DIM_BOUND};
use crate::fock::{
    graded_character, lowest_weight_vector, singular_scan, SectorIndex,
};
use crate::num::{q_string, qi, qr, Half, Q};
use crate::rootlie::chevalley::LieElt;
use crate::rootlie::embedding::{build_embedding, EmbeddingName};
use crate::rootlie::labels::RootLabel;
use crate::rootlie::{RootSystem, Series, SeriesLabel, Weight};
use crate::{Error, Result};

/// An affine highest weight `c0 * Lambda_0 + sum_i c_i Lambda_i`, tagged
/// with its level (computed through the comarks).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineHighestWeight {
    pub label: SeriesLabel,
    pub level: Q,
    pub lambda0_coeff: Q,
    pub finite_part: Weight,
    finite_coeffs: Vec<i64>,
}

impl AffineHighestWeight {
    pub fn new(rs: &RootSystem, lambda0_coeff: Q, finite_coeffs: &[i64]) -> AffineHighestWeight {
        let comarks = rs.comarks();
        let level = finite_coeffs
            .iter()
            .zip(&comarks)
            .fold(lambda0_coeff.clone(), |acc, (c, m)| acc + qi(c * m));
        AffineHighestWeight {
            label: rs.label,
            level,
            lambda0_coeff,
            finite_part: rs.weight_from_fundamental(finite_coeffs),
            finite_coeffs: finite_coeffs.to_vec(),
        }
    }

    /// Renders as `-3*L0 + 2*L4`.
    pub fn display(&self) -> String {
        let mut out = format!("{}*L0", q_string(&self.lambda0_coeff));
        for (i, c) in self.finite_coeffs.iter().enumerate() {
            if *c != 0 {
                out.push_str(&format!(" + {}*L{}", c, i + 1));
            }
        }
        out
    }
}

/// Lowest conformal weight of the module with finite part `mu` at level
/// `k`, tensored with the Heisenberg module of charge `s` and generator
/// norm `-heis_norm`:
/// `(mu, mu + 2 rho) / (2 (k + h_dual)) - s^2 / (2 heis_norm)`.
pub fn lowest_conformal_weight(
    rs: &RootSystem,
    k: &Q,
    mu: &Weight,
    heis_norm: &Q,
    s: i64,
) -> Result<Q> {
    let hv = qi(rs.coxeter_dual as i64);
    let shifted = k + &hv;
    if shifted.is_zero() {
        return Err(Error::CriticalLevel(format!(
            "level {} is critical for {}",
            q_string(k),
            rs.label
        )));
    }
    if heis_norm.is_zero() {
        return Err(Error::BadInput("Heisenberg norm must be nonzero".into()));
    }
    let mu2rho = mu.add(&rs.rho.scale(&qi(2)));
    let casimir = rs.inner(mu, &mu2rho)?;
    Ok(casimir / (qi(2) * shifted) - qi(s * s) / (qi(2) * heis_norm))
}

/// Sugawara central charge `k dim(g) / (k + h_dual)`.
pub fn central_charge(rs: &RootSystem, k: &Q) -> Result<Q> {
    let hv = qi(rs.coxeter_dual as i64);
    let shifted = k + &hv;
    if shifted.is_zero() {
        return Err(Error::CriticalLevel(format!(
            "level {} is critical for {}",
            q_string(k),
            rs.label
        )));
    }
    Ok(k * qi(rs.dim_algebra as i64) / shifted)
}

/// Charge labels fuse additively; the unit is 0.
pub fn fusion_product(a: i64, b: i64) -> i64 {
    a + b
}

/// Summary of the decomposition of the E6 adjoint under the embedded
/// D5 (+) CH: component dimensions, H-eigenvalues, and the two spinor
/// highest-weight vectors.
#[derive(Clone, Debug)]
pub struct E6Branching {
    /// (dimension, H-eigenvalue) per component: adjoint, trivial, spinor+, spinor-.
    pub components: [(usize, Q); 4],
    /// Fundamental-weight coordinates of the two spinor highest weights.
    pub spinor_plus_weight: Vec<Q>,
    pub spinor_minus_weight: Vec<Q>,
}

/// Decomposes the 78-dimensional adjoint of E6 under the embedded
/// D5 (+) CH and verifies every claim exactly: dimensions 45+1+16+16,
/// H-eigenvalues 0, 0, +1, -1, the spinor weight multisets, and the
/// highest-weight vectors `e_(234)` and `e_{eps5+eps4}`.
pub fn finite_e6_branching() -> Result<E6Branching> {
    let spec = build_embedding(EmbeddingName::D5InE6)?;
    let amb = &spec.ambient;
    let h = spec.cartan_h.clone().expect("embedding has H");

    // Split the root vectors by H-eigenvalue.
    let mut zero = Vec::new();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let npos = amb.npos();
    for idx in 0..2 * npos {
        let w = amb.root_weight(idx);
        let eig = amb.rs.inner(&h, &w)?;
        if eig.is_zero() {
            zero.push(idx);
        } else if eig == qi(1) {
            plus.push(idx);
        } else if eig == qi(-1) {
            minus.push(idx);
        } else {
            return Err(Error::VerificationFailed(format!(
                "unexpected H-eigenvalue {} on a root vector",
                q_string(&eig)
            )));
        }
    }
    // Cartan: the embedded D5 Cartan (5-dim) plus CH.
    let adjoint_dim = zero.len() + 5;
    let trivial_dim = 1;
    if adjoint_dim != 45 || plus.len() != 16 || minus.len() != 16 {
        return Err(Error::VerificationFailed(format!(
            "component dimensions {adjoint_dim}+{trivial_dim}+{}+{} != 45+1+16+16",
            plus.len(),
            minus.len()
        )));
    }
    // H is orthogonal to the embedded Cartan and completes it to rank 6:
    // check H is not in the span of the generator coroots.
    {
        let mut ech = crate::linalg::Echelon::new();
        let to_row = |w: &Weight| -> crate::linalg::SparseRow {
            w.0.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect()
        };
        for hi in &spec.h_images {
            ech.insert(to_row(&hi.cartan));
        }
        if ech.rank() != 5 || !ech.insert(to_row(&h)) {
            return Err(Error::VerificationFailed(
                "embedded Cartan and H do not span a rank-6 torus".into(),
            ));
        }
    }

    // Restriction to the embedded D5: fundamental-weight coordinates are
    // pairings with the generator coroots (in embedding order).
    let d5_coords = |w: &Weight| -> Result<Vec<Q>> {
        spec.h_images
            .iter()
            .map(|hi| amb.rs.inner(&hi.cartan, w))
            .collect()
    };

    // The charge components must match the two spinor characters of D5.
    let d5 = &spec.sub.rs;
    let spinor_plus = weight_multiplicities(d5, d5.omega(3), DEFAULT_DIM_BOUND)?;
    let spinor_minus = weight_multiplicities(d5, d5.omega(4), DEFAULT_DIM_BOUND)?;
    let to_fund = |table: &crate::charact::CharacterTable| -> BTreeMap<Vec<Q>, usize> {
        let mut out: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
        for (w, m) in &table.entries {
            *out.entry(d5.fundamental_coords(w)).or_insert(0) += *m as usize;
        }
        out
    };
    let collect = |idxs: &[usize]| -> Result<BTreeMap<Vec<Q>, usize>> {
        let mut out: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
        for &i in idxs {
            let w = amb.root_weight(i);
            *out.entry(d5_coords(&w)?).or_insert(0) += 1;
        }
        Ok(out)
    };
    if collect(&plus)? != to_fund(&spinor_plus) {
        return Err(Error::VerificationFailed(
            "H = +1 component is not the omega_4 spinor".into(),
        ));
    }
    if collect(&minus)? != to_fund(&spinor_minus) {
        return Err(Error::VerificationFailed(
            "H = -1 component is not the omega_5 spinor".into(),
        ));
    }

    // Highest-weight vectors: e_(234) and e_{eps5+eps4}, each killed by
    // every raising generator image.
    let hw_plus = RootLabel::Half(0b01110).weight(8)?;
    let hw_minus = RootLabel::Sum(5, 4).weight(8)?;
    let mut spinor_weights = Vec::new();
    for (w, expected_eig) in [(&hw_plus, qi(1)), (&hw_minus, qi(-1))] {
        let idx = amb
            .root_index(w)
            .ok_or_else(|| Error::VerificationFailed("missing highest-weight root".into()))?;
        let v = LieElt::root(amb.rs.ambient, idx, qi(1));
        for (k, e) in spec.e_images.iter().enumerate() {
            if !amb.bracket(e, &v).is_zero() {
                return Err(Error::VerificationFailed(format!(
                    "candidate highest-weight vector is not annihilated by generator {k}"
                )));
            }
        }
        let eig = amb.rs.inner(&h, w)?;
        if eig != expected_eig {
            return Err(Error::VerificationFailed("wrong H-eigenvalue".into()));
        }
        spinor_weights.push(d5_coords(w)?);
    }
    // and their restricted weights are the spinor fundamental weights
    let unit = |k: usize| -> Vec<Q> {
        (0..5).map(|i| if i == k { qi(1) } else { qi(0) }).collect()
    };
    if spinor_weights[0] != unit(3) || spinor_weights[1] != unit(4) {
        return Err(Error::VerificationFailed(
            "spinor highest weights are not omega_4 / omega_5".into(),
        ));
    }

    Ok(E6Branching {
        components: [
            (adjoint_dim, qi(0)),
            (trivial_dim, qi(0)),
            (plus.len(), qi(1)),
            (minus.len(), qi(-1)),
        ],
        spinor_plus_weight: spinor_weights[0].clone(),
        spinor_minus_weight: spinor_weights[1].clone(),
    })
}

/// One classification family of ordinary irreducible labels.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationFamily {
    pub name: String,
    pub algebra: String,
    pub level: String,
    /// Parameterized rows for s = 0..s_max.
    pub members: Vec<String>,
}

/// The classification label sets, emitted as structured families
/// parameterized by the charge `s >= 0`. Every member's level is computed
/// through the comarks and must come out constant across the family.
pub fn classification_tables(ell: u8, s_max: i64) -> Result<Vec<ClassificationFamily>> {
    if ell < 3 {
        return Err(Error::BadInput("classification tables need ell >= 3".into()));
    }
    let mut out = Vec::new();
    let family = |rs: &RootSystem,
                  name: &str,
                  expected_level: i64,
                  rows: Vec<AffineHighestWeight>|
     -> Result<ClassificationFamily> {
        for w in &rows {
            if w.level != qi(expected_level) {
                return Err(Error::Inconsistency(format!(
                    "family member {} has level {}, expected {expected_level}",
                    w.display(),
                    q_string(&w.level)
                )));
            }
        }
        Ok(ClassificationFamily {
            name: name.into(),
            algebra: rs.label.to_string(),
            level: expected_level.to_string(),
            members: rows.iter().map(|w| w.display()).collect(),
        })
    };

    let a = crate::rootlie::build_root_system(SeriesLabel::new(Series::A, ell - 1)?)?;
    let mut rows = Vec::new();
    for s in 0..=s_max {
        for node in [0usize, a.rank() - 1] {
            let mut c = vec![0i64; a.rank()];
            c[node] = s;
            rows.push(AffineHighestWeight::new(&a, qi(-(s + 1)), &c));
        }
    }
    out.push(family(&a, "one-row charge families at level -1", -1, rows)?);

    if ell % 2 == 0 {
        let c_rs = crate::rootlie::build_root_system(SeriesLabel::new(Series::C, ell / 2)?)?;
        let mut rows = Vec::new();
        for s in 0..=s_max {
            let mut c = vec![0i64; c_rs.rank()];
            c[0] = s;
            rows.push(AffineHighestWeight::new(&c_rs, qi(-(s + 1)), &c));
        }
        let mut sporadic = vec![0i64; c_rs.rank()];
        sporadic[1] = 1;
        rows.push(AffineHighestWeight::new(&c_rs, qi(-2), &sporadic));
        out.push(family(
            &c_rs,
            "symplectic level -1 families with the sporadic member",
            -1,
            rows,
        )?);
    }
    if ell % 2 == 1 {
        let d = crate::rootlie::build_root_system(SeriesLabel::new(Series::D, ell)?)?;
        let lev = -(ell as i64) + 2;
        let mut rows = Vec::new();
        for s in 0..=s_max {
            for node in [d.rank() - 2, d.rank() - 1] {
                let mut c = vec![0i64; d.rank()];
                c[node] = s;
                rows.push(AffineHighestWeight::new(&d, qi(lev - s), &c));
            }
        }
        out.push(family(&d, "spinor charge families", lev, rows)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFamily {
    /// Charge sectors of the Weyl module over type A at level -1.
    AInWeyl,
    /// Charge sectors of the E6 module at level -3 over D5 (+) Heisenberg.
    E6OverD5,
}

impl ReportFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            ReportFamily::AInWeyl => "a_in_weyl",
            ReportFamily::E6OverD5 => "e6_over_d5",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub s: i64,
    pub weight: String,
    pub level: String,
    pub lowest_weight: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub degree_dims: Vec<usize>,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub family: String,
    pub rows: Vec<ReportRow>,
    pub version: u32,
}

impl DecompositionReport {
    pub fn all_passed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.checks.iter().all(|c| c.status == "pass"))
    }
}

fn check(name: &str, ok: bool, witness: Option<String>) -> CheckOutcome {
    CheckOutcome {
        name: name.into(),
        status: if ok { "pass" } else { "fail" }.into(),
        witness: if ok { None } else { witness },
    }
}

/// Assembles the decomposition report for a charge range. Rows carry the
/// affine highest weight, the Heisenberg label, the exact lowest conformal
/// weight, and the verified per-degree data; any failed check marks the
/// row and the report.
pub fn decomposition_report(
    family: ReportFamily,
    ell: u8,
    s_range: (i64, i64),
    max_extra_degree: i64,
) -> Result<DecompositionReport> {
    let (lo, hi) = s_range;
    if lo > hi {
        return Err(Error::BadInput("empty charge range".into()));
    }
    let mut rows = Vec::new();
    match family {
        ReportFamily::AInWeyl => {
            if ell < 3 {
                return Err(Error::BadInput(
                    "the charge-sector decomposition needs ell >= 3".into(),
                ));
            }
            let rs = crate::rootlie::build_root_system(SeriesLabel::new(Series::A, ell - 1)?)?;
            let level = qi(-1);
            let heis_norm = qi(ell as i64);
            for s in lo..=hi {
                let node = if s >= 0 { 0 } else { rs.rank() - 1 };
                let mut coeffs = vec![0i64; rs.rank()];
                coeffs[node] = s.abs();
                let mu = rs.weight_from_fundamental(&coeffs);
                let lcw = lowest_conformal_weight(&rs, &level, &mu, &heis_norm, s)?;
                let mut checks = Vec::new();
                // closed-form lowest weight |s|/2
                checks.push(check(
                    "lowest_weight_is_half_charge",
                    lcw == qr(s.abs(), 2),
                    Some(q_string(&lcw)),
                ));
                let idx = SectorIndex::new(
                    ell as u16,
                    s,
                    Half::halves(s.abs()) + Half::int(max_extra_degree),
                )?;
                // scan: nothing singular beyond the lowest-weight vector
                let scan = singular_scan(&idx, None)?;
                checks.push(check(
                    "singular_scan_clean",
                    scan.is_clean(),
                    Some(format!(
                        "kernel dims {:?}",
                        scan.entries
                            .iter()
                            .map(|e| (e.degree.to_string(), e.kernel_dim))
                            .collect::<Vec<_>>()
                    )),
                ));
                // the expected lowest-weight vector is singular
                let lw = lowest_weight_vector(ell as u16, s);
                let lw_clean = {
                    let ops = (1..ell as u16)
                        .map(|i| {
                            (
                                crate::rootlie::labels::GlElt::e(i, i + 1).scale(&qi(-1)),
                                0i64,
                            )
                        })
                        .chain(std::iter::once((
                            crate::rootlie::labels::GlElt::e(ell as u16, 1).scale(&qi(-1)),
                            1i64,
                        )))
                        .chain(std::iter::once((
                            crate::fock::heisenberg_h(ell as u16),
                            1i64,
                        )));
                    let mut ok = true;
                    for (x, n) in ops {
                        if !crate::fock::apply_current(ell as u16, &x, n, &lw).is_zero() {
                            ok = false;
                            break;
                        }
                    }
                    ok
                };
                checks.push(check("lowest_weight_vector_singular", lw_clean, None));
                // graded character divides by the free boson, starting at
                // the lowest-component dimension
                let lowest_dim = rs.weyl_dimension(&mu)?;
                let gc = graded_character(&idx);
                let (dims, quotient_ok, quotient_witness) = match &gc {
                    Ok(g) => {
                        let c0 = num_bigint::BigInt::from(g.quotient[0]);
                        (
                            g.degrees.iter().map(|(_, d, _)| *d).collect::<Vec<_>>(),
                            c0 == lowest_dim,
                            Some(format!("quotient {:?}", g.quotient)),
                        )
                    }
                    Err(e) => (Vec::new(), false, Some(e.to_string())),
                };
                checks.push(check("heisenberg_quotient", quotient_ok, quotient_witness));
                // lowest component matches the one-row module of charge s
                if let Ok(g) = &gc {
                    let table = weight_multiplicities(&rs, &mu, DEFAULT_DIM_BOUND)?;
                    let expected: BTreeMap<Vec<Q>, usize> = {
                        let mut out: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
                        for (w, m) in &table.entries {
                            *out.entry(rs.fundamental_coords(w)).or_insert(0) += *m as usize;
                        }
                        out
                    };
                    let got: BTreeMap<Vec<Q>, usize> = {
                        let mut out: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
                        let (_, _, weights) = &g.degrees[0];
                        for (glw, mult) in weights {
                            // project the gl weight onto the traceless part
                            let mut w =
                                Weight(glw.iter().map(|&c| qi(c)).collect::<Vec<Q>>());
                            let trace = glw.iter().sum::<i64>();
                            let avg = qr(trace, ell as i64);
                            for c in w.0.iter_mut() {
                                *c -= &avg;
                            }
                            *out.entry(rs.fundamental_coords(&w)).or_insert(0) += mult;
                        }
                        out
                    };
                    checks.push(check(
                        "lowest_component_character",
                        got == expected,
                        Some("lowest-degree gl weights differ from the one-row module".into()),
                    ));
                }
                let hw = AffineHighestWeight::new(&rs, qi(-(s.abs() + 1)), &coeffs);
                debug_assert_eq!(hw.level, level);
                rows.push(ReportRow {
                    s,
                    weight: hw.display(),
                    level: q_string(&hw.level),
                    lowest_weight: q_string(&lcw),
                    degree_dims: dims,
                    checks,
                });
            }
        }
        ReportFamily::E6OverD5 => {
            // Label-level rows: no free-field model exists here, so the
            // verified content is the finite branching, the singular
            // vector, conformal weights, and central charges.
            let d5 = crate::rootlie::build_root_system(SeriesLabel::new(Series::D, 5)?)?;
            let e6 = crate::rootlie::build_root_system(SeriesLabel::new(Series::E, 6)?)?;
            let level = qi(-3);
            let heis_norm = qi(4); // subtrahend s^2/8
            let branching_ok = finite_e6_branching().is_ok();
            let cc_ok = {
                let c_d5 = central_charge(&d5, &level)?;
                let c_e6 = central_charge(&e6, &level)?;
                c_d5 == qi(-27) && c_e6 == qi(-26) && c_d5 + qi(1) == c_e6
            };
            for s in lo..=hi {
                let node = if s >= 0 { 3 } else { 4 };
                let mut coeffs = vec![0i64; 5];
                coeffs[node] = s.abs();
                let mu = d5.weight_from_fundamental(&coeffs);
                let lcw = lowest_conformal_weight(&d5, &level, &mu, &heis_norm, s)?;
                let mut checks = Vec::new();
                checks.push(check(
                    "lowest_weight_is_abs_charge",
                    lcw == qi(s.abs()),
                    Some(q_string(&lcw)),
                ));
                checks.push(check("finite_branching", branching_ok, None));
                checks.push(check("central_charges_match", cc_ok, None));
                let hw = AffineHighestWeight::new(&d5, qi(-(s.abs() + 3)), &coeffs);
                debug_assert_eq!(hw.level, level);
                rows.push(ReportRow {
                    s,
                    weight: hw.display(),
                    level: q_string(&hw.level),
                    lowest_weight: q_string(&lcw),
                    degree_dims: Vec::new(),
                    checks,
                });
            }
        }
    }
    Ok(DecompositionReport {
        family: family.as_str().into(),
        rows,
        version: 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootlie::build_root_system;

    fn rs(series: Series, rank: u8) -> RootSystem {
        build_root_system(SeriesLabel::new(series, rank).unwrap()).unwrap()
    }

    #[test]
    fn lowest_weight_closed_forms() {
        // A_{ell-1} at level -1 with mu = s omega_1: exactly s/2
        for ell in 3i64..=6 {
            let r = rs(Series::A, (ell - 1) as u8);
            for s in 0..=10 {
                let mut coeffs = vec![0i64; r.rank()];
                coeffs[0] = s;
                let mu = r.weight_from_fundamental(&coeffs);
                let got =
                    lowest_conformal_weight(&r, &qi(-1), &mu, &qi(ell), s).unwrap();
                assert_eq!(got, qr(s, 2), "ell={ell}, s={s}");
            }
        }
        // D5 at level -3 with mu = s omega_4 and subtrahend s^2/8: exactly s
        let d5 = rs(Series::D, 5);
        for s in 0..=10 {
            let mut coeffs = vec![0i64; 5];
            coeffs[3] = s;
            let mu = d5.weight_from_fundamental(&coeffs);
            let got = lowest_conformal_weight(&d5, &qi(-3), &mu, &qi(4), s).unwrap();
            assert_eq!(got, qi(s), "s={s}");
        }
    }

    #[test]
    fn zero_weight_zero_charge() {
        let d5 = rs(Series::D, 5);
        let got =
            lowest_conformal_weight(&d5, &qi(-3), &Weight::zero(5), &qi(4), 0).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn critical_level_rejected() {
        let d5 = rs(Series::D, 5);
        assert!(central_charge(&d5, &qi(-8)).is_err());
        assert!(
            lowest_conformal_weight(&d5, &qi(-8), &Weight::zero(5), &qi(4), 0).is_err()
        );
    }

    #[test]
    fn central_charges() {
        let e6 = rs(Series::E, 6);
        let d5 = rs(Series::D, 5);
        assert_eq!(central_charge(&e6, &qi(-3)).unwrap(), qi(-26));
        assert_eq!(central_charge(&d5, &qi(-3)).unwrap(), qi(-27));
        // symplectic / type-A conformal-embedding central charges agree
        for ell in 2u8..=5 {
            let c = rs(Series::C, ell);
            let a = rs(Series::A, 2 * ell - 1);
            let cc = central_charge(&c, &qi(-1)).unwrap();
            let ca = central_charge(&a, &qi(-1)).unwrap();
            assert_eq!(cc, ca, "ell={ell}");
            assert_eq!(cc, qi(-(2 * ell as i64 + 1)));
        }
        // any algebra at level 0 has central charge 0
        assert!(central_charge(&d5, &qi(0)).unwrap().is_zero());
    }

    #[test]
    fn fusion_monoid() {
        assert_eq!(fusion_product(2, -3), -1);
        for a in -5i64..=5 {
            assert_eq!(fusion_product(0, a), a);
            for b in -5i64..=5 {
                assert_eq!(fusion_product(a, b), fusion_product(b, a));
                for c in -5i64..=5 {
                    assert_eq!(
                        fusion_product(fusion_product(a, b), c),
                        fusion_product(a, fusion_product(b, c))
                    );
                }
            }
        }
    }

    #[test]
    fn e6_branching_summary() {
        let b = finite_e6_branching().unwrap();
        let dims: Vec<usize> = b.components.iter().map(|(d, _)| *d).collect();
        assert_eq!(dims, vec![45, 1, 16, 16]);
        assert_eq!(b.components[2].1, qi(1));
        assert_eq!(b.components[3].1, qi(-1));
    }

    #[test]
    fn a_family_report_passes() {
        let report = decomposition_report(ReportFamily::AInWeyl, 3, (-2, 2), 2).unwrap();
        assert!(report.all_passed(), "{}", serde_json::to_string(&report).unwrap());
        assert_eq!(report.rows.len(), 5);
    }

    #[test]
    fn e6_family_report_passes() {
        let report = decomposition_report(ReportFamily::E6OverD5, 6, (-2, 2), 0).unwrap();
        assert!(report.all_passed());
        let row0 = report.rows.iter().find(|r| r.s == 0).unwrap();
        assert_eq!(row0.lowest_weight, "0");
        let row2 = report.rows.iter().find(|r| r.s == 2).unwrap();
        assert_eq!(row2.lowest_weight, "2");
    }

    #[test]
    fn classification_families() {
        let fams = classification_tables(4, 2).unwrap();
        let a = fams.iter().find(|f| f.algebra == "A3").unwrap();
        assert!(a.members.iter().any(|m| m == "-3*L0 + 2*L1"));
        assert!(a.members.iter().any(|m| m == "-3*L0 + 2*L3"));
        let c = fams.iter().find(|f| f.algebra == "C2").unwrap();
        assert!(c.members.iter().any(|m| m == "-2*L0 + 1*L2"));
        let fams5 = classification_tables(5, 1).unwrap();
        let d = fams5
            .iter()
            .find(|f| f.algebra == "D5" && f.level == "-3")
            .unwrap();
        assert!(d.members.iter().any(|m| m == "-4*L0 + 1*L4"));
        assert!(d.members.iter().any(|m| m == "-4*L0 + 1*L5"));
    }
}
