//! Finite-dimensional characters and tensor-product decompositions.
//!
//! The engine is the Freudenthal recursion over dominant weights with
//! Weyl-orbit expansion; the tensor oracle is pointwise character
//! convolution followed by repeated highest-weight peeling. The closed
//! forms (the type-A one-line rules and the type-D Okada rule for odd
//! rank) are implemented independently and tested against the oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::num::{q_is_integer, qi, Q};
use crate::rootlie::{RootSystem, SeriesLabel, Series, Weight};
use crate::{Error, Result};

/// Default cap on module dimensions (and on products of dimensions for
/// tensor decompositions).
pub const DEFAULT_DIM_BOUND: u64 = 1_000_000;

/// Full weight-multiplicity table of an irreducible module.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub label: SeriesLabel,
    pub highest_weight: Weight,
    pub entries: BTreeMap<Weight, u64>,
}

impl CharacterTable {
    pub fn dimension(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }
}

/// A multiplicity list of highest weights, dominant and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition(pub Vec<(Weight, u64)>);

impl Decomposition {
    /// Checks `sum mult * dim = expected` against the Weyl dimension formula.
    pub fn dimension_total(&self, rs: &RootSystem) -> Result<BigInt> {
        let mut total = BigInt::from(0);
        for (w, m) in &self.0 {
            total += rs.weyl_dimension(w)? * BigInt::from(*m);
        }
        Ok(total)
    }
}

/// Dominant weights of `V(lam)`: all dominant `mu` with `lam - mu` a
/// nonnegative integral combination of simple roots, found by walking down
/// positive-root steps inside the dominant cone.
fn dominant_weights(rs: &RootSystem, lam: &Weight) -> Vec<Weight> {
    let mut seen: BTreeMap<Weight, ()> = BTreeMap::new();
    let mut queue = vec![lam.clone()];
    seen.insert(lam.clone(), ());
    while let Some(w) = queue.pop() {
        for alpha in &rs.positive_roots {
            let cand = w.sub(alpha);
            if seen.contains_key(&cand) || !rs.is_dominant_integral(&cand) {
                continue;
            }
            // keep only weights below lam in the root lattice
            if !in_root_cone(rs, &lam.sub(&cand)) {
                continue;
            }
            seen.insert(cand.clone(), ());
            queue.push(cand);
        }
    }
    seen.into_keys().collect()
}

/// Is `w` a nonnegative integral combination of simple roots?
fn in_root_cone(rs: &RootSystem, w: &Weight) -> bool {
    // Solve the expansion via fundamental-weight pairings on coroots:
    // coefficient of alpha_j in w is (w, omega_j dual) -- use the exact
    // solve against the simple-root Gram matrix instead.
    let n = rs.rank();
    let gram: Vec<Vec<Q>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|k| rs.simple_roots[k].dot(&rs.simple_roots[j]))
                .collect()
        })
        .collect();
    let rhs: Vec<Q> = (0..n).map(|j| w.dot(&rs.simple_roots[j])).collect();
    let coeffs = crate::linalg::solve_dense(&gram, &rhs);
    // w must also lie inside the root span
    let mut recon = Weight::zero(rs.ambient);
    for (k, c) in coeffs.iter().enumerate() {
        recon = recon.add(&rs.simple_roots[k].scale(c));
    }
    if recon != *w {
        return false;
    }
    coeffs.iter().all(|c| q_is_integer(c) && !c.is_negative())
}

/// Weight multiplicities of `V(lam)` by the Freudenthal recursion.
pub fn weight_multiplicities(
    rs: &RootSystem,
    lam: &Weight,
    bound: u64,
) -> Result<CharacterTable> {
    let dim = rs.weyl_dimension(lam)?;
    if dim > BigInt::from(bound) {
        return Err(Error::DimensionBound(format!(
            "dim V({}) = {dim} exceeds bound {bound}",
            lam.coords_string()
        )));
    }
    let dominants = dominant_weights(rs, lam);
    // order by increasing height of lam - mu, so dependencies come first
    let mut order: Vec<usize> = (0..dominants.len()).collect();
    order.sort_by(|&a, &b| {
        rho_height(rs, &lam.sub(&dominants[a]))
            .cmp(&rho_height(rs, &lam.sub(&dominants[b])))
            .then_with(|| dominants[b].cmp(&dominants[a]))
    });

    let lam_rho = lam.add(&rs.rho);
    let lam_rho_sq = rs.inner(&lam_rho, &lam_rho)?;
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    for &i in &order {
        let mu = &dominants[i];
        if mu == lam {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut rhs = Q::zero();
        for alpha in &rs.positive_roots {
            let mut k = 1i64;
            loop {
                let w = mu.add(&alpha.scale(&qi(k)));
                let dom = rs.dominant_rep(&w);
                let Some(&m) = mult.get(&dom) else { break };
                rhs += qi(m as i64) * rs.inner(&w, alpha)?;
                k += 1;
            }
        }
        let mu_rho = mu.add(&rs.rho);
        let denom = &lam_rho_sq - rs.inner(&mu_rho, &mu_rho)?;
        debug_assert!(!denom.is_zero());
        let m = qi(2) * rhs / denom;
        debug_assert!(q_is_integer(&m) && !m.is_negative());
        let m = u64::try_from(m.to_integer()).map_err(|_| {
            Error::Inconsistency("multiplicity out of range".into())
        })?;
        if m > 0 {
            mult.insert(mu.clone(), m);
        }
    }

    // Expand Weyl orbits.
    let mut entries: BTreeMap<Weight, u64> = BTreeMap::new();
    for (mu, m) in &mult {
        for w in rs.weyl_orbit(mu) {
            entries.insert(w, *m);
        }
    }
    let total: u64 = entries.values().sum();
    if BigInt::from(total) != dim {
        return Err(Error::Inconsistency(format!(
            "character total {total} != Weyl dimension {dim} for ({})",
            lam.coords_string()
        )));
    }
    Ok(CharacterTable {
        label: rs.label,
        highest_weight: lam.clone(),
        entries,
    })
}

/// Height of a root-lattice element: sum of its simple-root coefficients.
fn rho_height(rs: &RootSystem, w: &Weight) -> Q {
    // (w, rho_dual) where rho_dual pairs to 1 with every simple root;
    // equivalently solve for the expansion and sum the coefficients.
    let n = rs.rank();
    let gram: Vec<Vec<Q>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|k| rs.simple_roots[k].dot(&rs.simple_roots[j]))
                .collect()
        })
        .collect();
    let rhs: Vec<Q> = (0..n).map(|j| w.dot(&rs.simple_roots[j])).collect();
    crate::linalg::solve_dense(&gram, &rhs)
        .into_iter()
        .fold(Q::zero(), |acc, c| acc + c)
}

/// Brute-force tensor decomposition: convolve the two character tables,
/// then repeatedly peel the lexicographically maximal dominant weight.
pub fn tensor_decompose(
    rs: &RootSystem,
    lam: &Weight,
    mu: &Weight,
    bound: u64,
) -> Result<Decomposition> {
    let dl = rs.weyl_dimension(lam)?;
    let dm = rs.weyl_dimension(mu)?;
    if &dl * &dm > BigInt::from(bound) {
        return Err(Error::DimensionBound(format!(
            "product dimension {} exceeds bound {bound}",
            &dl * &dm
        )));
    }
    let tl = weight_multiplicities(rs, lam, bound)?;
    let tm = weight_multiplicities(rs, mu, bound)?;
    // Convolution as a signed table so peeling can subtract in place.
    let mut conv: BTreeMap<Weight, i64> = BTreeMap::new();
    for (wa, ma) in &tl.entries {
        for (wb, mb) in &tm.entries {
            let w = wa.add(wb);
            *conv.entry(w).or_insert(0) += (*ma as i64) * (*mb as i64);
        }
    }
    conv.retain(|_, v| *v != 0);

    let mut out: Vec<(Weight, u64)> = Vec::new();
    let mut char_cache: BTreeMap<Weight, CharacterTable> = BTreeMap::new();
    while !conv.is_empty() {
        // lexicographically maximal dominant weight still present
        let top = conv
            .iter()
            .filter(|(w, m)| **m != 0 && rs.is_dominant_integral(w))
            .map(|(w, _)| w.clone())
            .max_by(|a, b| a.0.cmp(&b.0))
            .ok_or_else(|| {
                Error::Inconsistency("peeling found no dominant weight".into())
            })?;
        let m = conv[&top];
        if m < 0 {
            return Err(Error::Inconsistency(format!(
                "negative multiplicity {m} at ({}) during peeling",
                top.coords_string()
            )));
        }
        let table = match char_cache.get(&top) {
            Some(t) => t.clone(),
            None => {
                let t = weight_multiplicities(rs, &top, bound)?;
                char_cache.insert(top.clone(), t.clone());
                t
            }
        };
        for (w, c) in &table.entries {
            let e = conv.entry(w.clone()).or_insert(0);
            *e -= m * (*c as i64);
        }
        conv.retain(|_, v| *v != 0);
        out.push((top, m as u64));
    }
    out.sort_by(|(a, _), (b, _)| b.0.cmp(&a.0));
    // dimension balance: sum mult*dim == dim(lam) * dim(mu)
    let total = Decomposition(out.clone()).dimension_total(rs)?;
    if total != &dl * &dm {
        return Err(Error::Inconsistency(format!(
            "tensor dimension balance failed: {total} != {}",
            &dl * &dm
        )));
    }
    Ok(Decomposition(out))
}

/// The three closed-form type-A cases (rank `l >= 2`, `r >= s >= 0`):
/// products of the one-row families supported on the first or last node.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TypeACase {
    /// `V(r w1) (x) V(s w1)`
    FirstFirst,
    /// `V(r wl) (x) V(s wl)`
    LastLast,
    /// `V(r w1) (x) V(s wl)`
    FirstLast,
}

pub fn type_a_rule(rs: &RootSystem, case: TypeACase, r: i64, s: i64) -> Result<Decomposition> {
    if rs.label.series != Series::A || rs.rank() < 2 {
        return Err(Error::UnsupportedLabel(format!(
            "type-A rule needs A_l with l >= 2, got {}",
            rs.label
        )));
    }
    if r < s || s < 0 {
        return Err(Error::BadInput(format!("need r >= s >= 0, got r={r}, s={s}")));
    }
    let l = rs.rank();
    let mut out = Vec::new();
    for k in 0..=s {
        let w = match case {
            TypeACase::FirstFirst => {
                let mut c = vec![0i64; l];
                c[0] = r + s - 2 * k;
                c[1] += k;
                c
            }
            TypeACase::LastLast => {
                let mut c = vec![0i64; l];
                c[l - 1] = r + s - 2 * k;
                c[l - 2] += k;
                c
            }
            TypeACase::FirstLast => {
                let mut c = vec![0i64; l];
                c[0] = r - s + k;
                c[l - 1] += k;
                c
            }
        };
        out.push((rs.weight_from_fundamental(&w), 1u64));
    }
    out.sort_by(|(a, _), (b, _)| b.0.cmp(&a.0));
    Ok(Decomposition(out))
}

/// Answer shape for the type-D rule: the full multiplicity-free list in
/// the equal-chirality case, or the membership statement (`U(t)` occurs
/// iff `t = r + s`, with multiplicity one) for mixed chirality, where the
/// closed form is not reproduced here and the oracle stands in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OkadaAnswer {
    Full(Decomposition),
    Membership { t: i64 },
}

/// The family member `U(s)`: `V(s w_{l-1})` for `s >= 0`, `V(-s w_l)` for
/// `s < 0`.
pub fn u_family_weight(rs: &RootSystem, s: i64) -> Weight {
    let l = rs.rank();
    let mut c = vec![0i64; l];
    if s >= 0 {
        c[l - 2] = s;
    } else {
        c[l - 1] = -s;
    }
    rs.weight_from_fundamental(&c)
}

/// Okada's multiplicity-free rule for odd-rank type D.
pub fn okada_rule(rs: &RootSystem, r: i64, s: i64) -> Result<OkadaAnswer> {
    if rs.label.series != Series::D || rs.rank() % 2 == 0 || rs.rank() < 3 {
        return Err(Error::UnsupportedLabel(format!(
            "the Okada rule applies to odd-rank type D (the even-rank fusion algebra differs), got {}",
            rs.label
        )));
    }
    let l = rs.rank();
    if (r >= 0) != (s >= 0) && r != 0 && s != 0 {
        return Ok(OkadaAnswer::Membership { t: r + s });
    }
    // Equal chirality: decompose with the spinor node of the common side.
    let total = r.abs() + s.abs();
    let node = if r >= 0 && s >= 0 { l - 2 } else { l - 1 };
    // mu = k_1 w_1 + k_3 w_3 + ... + k_{l-2} w_{l-2} + k_{l-1} w_node with
    // 2*(k_1 + k_3 + ... + k_{l-2}) + k_{l-1} = |r| + |s|
    let odd_nodes: Vec<usize> = (0..l - 2).step_by(2).collect(); // 0-based: w1, w3, ...
    let mut out = Vec::new();
    let mut stack: Vec<(usize, i64, Vec<i64>)> = vec![(0, 0, vec![0; l])];
    while let Some((pos, used, coeffs)) = stack.pop() {
        if pos == odd_nodes.len() {
            let spin = total - 2 * used;
            if spin >= 0 {
                let mut c = coeffs;
                c[node] = spin;
                out.push((rs.weight_from_fundamental(&c), 1u64));
            }
            continue;
        }
        let mut k = 0;
        while 2 * (used + k) <= total {
            let mut c = coeffs.clone();
            c[odd_nodes[pos]] = k;
            stack.push((pos + 1, used + k, c));
            k += 1;
        }
    }
    out.sort_by(|(a, _), (b, _)| b.0.cmp(&a.0));
    out.dedup();
    Ok(OkadaAnswer::Full(Decomposition(out)))
}

/// Oracle-side check of the membership statement: in `U(r) (x) U(s)`,
/// `U(t)` occurs exactly for `t = r + s`, with multiplicity one.
pub fn verify_okada_membership(rs: &RootSystem, r: i64, s: i64, bound: u64) -> Result<()> {
    let wr = u_family_weight(rs, r);
    let ws = u_family_weight(rs, s);
    let dec = tensor_decompose(rs, &wr, &ws, bound)?;
    let mut found_target = 0u64;
    for (w, m) in &dec.0 {
        for t in -(r.abs() + s.abs())..=(r.abs() + s.abs()) {
            if *w == u_family_weight(rs, t) {
                if t == r + s {
                    found_target = *m;
                } else {
                    return Err(Error::VerificationFailed(format!(
                        "U({t}) unexpectedly appears in U({r}) (x) U({s})"
                    )));
                }
            }
        }
    }
    if found_target != 1 {
        return Err(Error::VerificationFailed(format!(
            "U({}) appears with multiplicity {found_target} in U({r}) (x) U({s})",
            r + s
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootlie::{build_root_system, Series, SeriesLabel};

    fn rs(series: Series, rank: u8) -> RootSystem {
        build_root_system(SeriesLabel::new(series, rank).unwrap()).unwrap()
    }

    #[test]
    fn a2_defining_rep() {
        let a2 = rs(Series::A, 2);
        let t = weight_multiplicities(&a2, a2.omega(0), DEFAULT_DIM_BOUND).unwrap();
        assert_eq!(t.entries.len(), 3);
        assert!(t.entries.values().all(|&m| m == 1));
    }

    #[test]
    fn a2_adjoint_zero_weight() {
        let a2 = rs(Series::A, 2);
        let adj = a2.weight_from_fundamental(&[1, 1]);
        let t = weight_multiplicities(&a2, &adj, DEFAULT_DIM_BOUND).unwrap();
        assert_eq!(t.multiplicity(&Weight::zero(3)), 2);
        assert_eq!(t.dimension(), 8);
    }

    #[test]
    fn d5_spinor_is_minuscule() {
        let d5 = rs(Series::D, 5);
        let t = weight_multiplicities(&d5, d5.omega(3), DEFAULT_DIM_BOUND).unwrap();
        assert_eq!(t.entries.len(), 16);
        assert!(t.entries.values().all(|&m| m == 1));
    }

    #[test]
    fn character_tables_are_weyl_invariant() {
        let d4 = rs(Series::D, 4);
        let lam = d4.weight_from_fundamental(&[1, 0, 0, 1]);
        let t = weight_multiplicities(&d4, &lam, DEFAULT_DIM_BOUND).unwrap();
        for (w, m) in &t.entries {
            for i in 0..d4.rank() {
                let r = d4.reflect_simple(w, i);
                assert_eq!(t.multiplicity(&r), *m);
            }
        }
    }

    #[test]
    fn a2_fundamental_tensor_square() {
        let a2 = rs(Series::A, 2);
        let dec = tensor_decompose(&a2, a2.omega(0), a2.omega(0), DEFAULT_DIM_BOUND).unwrap();
        let expected = Decomposition(vec![
            (a2.weight_from_fundamental(&[2, 0]), 1),
            (a2.weight_from_fundamental(&[0, 1]), 1),
        ]);
        let mut got = dec.0.clone();
        got.sort();
        let mut want = expected.0.clone();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn tensor_with_trivial_is_identity() {
        for (s, n) in [(Series::A, 3), (Series::D, 4)] {
            let r = rs(s, n);
            let mut coeffs = vec![0i64; r.rank()];
            coeffs[0] = 1;
            let lam = r.weight_from_fundamental(&coeffs);
            let dec =
                tensor_decompose(&r, &Weight::zero(r.ambient), &lam, DEFAULT_DIM_BOUND).unwrap();
            assert_eq!(dec.0, vec![(lam.clone(), 1)]);
        }
    }

    #[test]
    fn d5_spinor_square_dimensions() {
        let d5 = rs(Series::D, 5);
        let dec = tensor_decompose(&d5, d5.omega(3), d5.omega(3), DEFAULT_DIM_BOUND).unwrap();
        let want = vec![
            (d5.weight_from_fundamental(&[1, 0, 0, 0, 0]), 1u64),
            (d5.weight_from_fundamental(&[0, 0, 1, 0, 0]), 1),
            (d5.weight_from_fundamental(&[0, 0, 0, 2, 0]), 1),
        ];
        let mut got = dec.0.clone();
        got.sort();
        let mut want_sorted = want.clone();
        want_sorted.sort();
        assert_eq!(got, want_sorted);
        let dims: Vec<_> = want
            .iter()
            .map(|(w, _)| d5.weyl_dimension(w).unwrap())
            .collect();
        assert_eq!(dims, vec![10.into(), 120.into(), 126.into()]);
        assert_eq!(dec.dimension_total(&d5).unwrap(), 256.into());
    }

    #[test]
    fn type_a_rule_examples() {
        let a2 = rs(Series::A, 2);
        // case (iii), r = s = 1: trivial + adjoint
        let dec = type_a_rule(&a2, TypeACase::FirstLast, 1, 1).unwrap();
        let mut got = dec.0.clone();
        got.sort();
        let mut want = vec![
            (Weight::zero(3), 1u64),
            (a2.weight_from_fundamental(&[1, 1]), 1),
        ];
        want.sort();
        assert_eq!(got, want);
        // case (i), s = 0: single term
        let dec = type_a_rule(&a2, TypeACase::FirstFirst, 3, 0).unwrap();
        assert_eq!(dec.0, vec![(a2.weight_from_fundamental(&[3, 0]), 1)]);
        // r < s rejected
        assert!(type_a_rule(&a2, TypeACase::FirstFirst, 1, 2).is_err());
    }

    #[test]
    fn type_a_rule_matches_oracle_small() {
        let a2 = rs(Series::A, 2);
        let dec = type_a_rule(&a2, TypeACase::FirstFirst, 2, 1).unwrap();
        let oracle = tensor_decompose(
            &a2,
            &a2.weight_from_fundamental(&[2, 0]),
            &a2.weight_from_fundamental(&[1, 0]),
            DEFAULT_DIM_BOUND,
        )
        .unwrap();
        let mut a = dec.0;
        a.sort();
        let mut b = oracle.0;
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn okada_examples() {
        let d5 = rs(Series::D, 5);
        match okada_rule(&d5, 1, 1).unwrap() {
            OkadaAnswer::Full(dec) => {
                let mut got = dec.0;
                got.sort();
                let mut want = vec![
                    (d5.weight_from_fundamental(&[1, 0, 0, 0, 0]), 1u64),
                    (d5.weight_from_fundamental(&[0, 0, 1, 0, 0]), 1),
                    (d5.weight_from_fundamental(&[0, 0, 0, 2, 0]), 1),
                ];
                want.sort();
                assert_eq!(got, want);
            }
            other => panic!("expected full list, got {other:?}"),
        }
        match okada_rule(&d5, 1, 0).unwrap() {
            OkadaAnswer::Full(dec) => {
                assert_eq!(dec.0, vec![(d5.weight_from_fundamental(&[0, 0, 0, 1, 0]), 1)]);
            }
            other => panic!("expected full list, got {other:?}"),
        }
        assert!(matches!(
            okada_rule(&d5, 1, -1).unwrap(),
            OkadaAnswer::Membership { t: 0 }
        ));
        // even rank rejected
        let d4 = rs(Series::D, 4);
        assert!(okada_rule(&d4, 1, 1).is_err());
    }

    #[test]
    fn okada_membership_oracle() {
        let d5 = rs(Series::D, 5);
        verify_okada_membership(&d5, 1, -1, DEFAULT_DIM_BOUND).unwrap();
    }

    #[test]
    fn dimension_bound_is_enforced() {
        let d5 = rs(Series::D, 5);
        let big = d5.weight_from_fundamental(&[0, 0, 0, 3, 0]);
        assert!(tensor_decompose(&d5, &big, &big, 1000).is_err());
    }
}
