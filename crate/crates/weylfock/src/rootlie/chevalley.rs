//! Chevalley bases and exact structure constants.
//!
//! Signs follow the extraspecial-pair convention: positive roots carry the
//! canonical order (height, then descending lex), the extraspecial pair of
//! each non-simple positive root gets `N = +(p+1)`, and every other
//! constant is propagated through the Jacobi identity and the cyclic
//! relation `N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b)` for `a+b+c = 0`.
//! The result is deterministic across runs, and the Jacobi identity is
//! testable exhaustively at these ranks.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::num::{q_is_integer, qi, Q};
use crate::rootlie::{build_root_system, RootSystem, SeriesLabel, Weight};
use crate::{Error, Result};

/// Structure constants `N(a, b)` over signed root indices, together with
/// the extraspecial pair chosen for each non-simple positive root.
pub struct StructureConstants {
    npos: usize,
    n: HashMap<(u32, u32), i64>,
    extraspecial: Vec<Option<(usize, usize)>>,
}

impl StructureConstants {
    /// `N(a, b)` for signed root indices whose roots sum to a root.
    pub fn n_value(&self, a: usize, b: usize) -> i64 {
        self.n.get(&(a as u32, b as u32)).copied().unwrap_or(0)
    }

    pub fn extraspecial_pair(&self, pos_idx: usize) -> Option<(usize, usize)> {
        self.extraspecial[pos_idx]
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }
}

/// An element of the finite Lie algebra: root-vector coefficients over
/// signed root indices plus a Cartan part stored as an epsilon vector
/// (`h_v` acts on `e_b` by the normalized pairing `(v, b)`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieElt {
    pub roots: BTreeMap<usize, Q>,
    pub cartan: Weight,
}

impl LieElt {
    pub fn zero(ambient: usize) -> LieElt {
        LieElt {
            roots: BTreeMap::new(),
            cartan: Weight::zero(ambient),
        }
    }

    pub fn root(ambient: usize, idx: usize, coeff: Q) -> LieElt {
        let mut e = LieElt::zero(ambient);
        if !coeff.is_zero() {
            e.roots.insert(idx, coeff);
        }
        e
    }

    pub fn cartan(v: Weight) -> LieElt {
        LieElt {
            roots: BTreeMap::new(),
            cartan: v,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.roots.is_empty() && self.cartan.is_zero()
    }

    pub fn scale(&self, c: &Q) -> LieElt {
        if c.is_zero() {
            return LieElt::zero(self.cartan.dim());
        }
        LieElt {
            roots: self.roots.iter().map(|(k, v)| (*k, v * c)).collect(),
            cartan: self.cartan.scale(c),
        }
    }

    pub fn add_scaled(&mut self, other: &LieElt, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.roots {
            let entry = self.roots.entry(*k).or_insert_with(Q::zero);
            *entry += v * c;
            if entry.is_zero() {
                self.roots.remove(k);
            }
        }
        self.cartan = self.cartan.add(&other.cartan.scale(c));
    }
}

/// A finite simple Lie algebra in a Chevalley basis: root system plus
/// structure constants. Basis order for enveloping-algebra monomials:
/// positive root vectors (canonical order), then negative root vectors,
/// then the simple coroots.
pub struct Algebra {
    pub rs: RootSystem,
    pub sc: StructureConstants,
}

impl Algebra {
    pub fn new(label: SeriesLabel) -> Result<Algebra> {
        let rs = build_root_system(label)?;
        let sc = chevalley_constants(&rs)?;
        Ok(Algebra { rs, sc })
    }

    pub fn npos(&self) -> usize {
        self.rs.positive_roots.len()
    }

    /// Total Chevalley basis size `2 * #positive + rank`.
    pub fn basis_dim(&self) -> usize {
        2 * self.npos() + self.rs.rank()
    }

    /// Signed index of the negative of a signed root index.
    pub fn neg_root(&self, idx: usize) -> usize {
        let m = self.npos();
        if idx < m {
            idx + m
        } else {
            idx - m
        }
    }

    /// The root (as a weight vector) of a signed root index.
    pub fn root_weight(&self, idx: usize) -> Weight {
        let m = self.npos();
        if idx < m {
            self.rs.positive_roots[idx].clone()
        } else {
            self.rs.positive_roots[idx - m].neg()
        }
    }

    /// Signed root index for a root given as a weight.
    pub fn root_index(&self, w: &Weight) -> Option<usize> {
        self.rs
            .root_lookup(w)
            .map(|(i, pos)| if pos { i } else { i + self.npos() })
    }

    /// The Lie-algebra element of a basis index (root vector or simple coroot).
    pub fn basis_elt(&self, b: usize) -> LieElt {
        let m = self.npos();
        if b < 2 * m {
            LieElt::root(self.rs.ambient, b, qi(1))
        } else {
            let i = b - 2 * m;
            LieElt::cartan(self.rs.coroot(&self.rs.simple_roots[i]))
        }
    }

    /// Bracket of two basis root vectors / coroots, by table lookup.
    pub fn bracket_roots(&self, a: usize, b: usize) -> LieElt {
        let m = self.npos();
        let ra = self.root_weight(a);
        let rb = self.root_weight(b);
        if self.neg_root(a) == b {
            // [e_alpha, e_{-alpha}] = alpha^vee, oriented by the positive one
            let pos = if a < m { &ra } else { &rb };
            let sign = if a < m { qi(1) } else { qi(-1) };
            return LieElt::cartan(self.rs.coroot(pos).scale(&sign));
        }
        let sum = ra.add(&rb);
        match self.root_index(&sum) {
            Some(c) => LieElt::root(
                self.rs.ambient,
                c,
                qi(self.sc.n_value(a, b)),
            ),
            None => LieElt::zero(self.rs.ambient),
        }
    }

    /// Full bilinear bracket.
    pub fn bracket(&self, x: &LieElt, y: &LieElt) -> LieElt {
        let mut out = LieElt::zero(self.rs.ambient);
        for (a, ca) in &x.roots {
            for (b, cb) in &y.roots {
                let t = self.bracket_roots(*a, *b);
                out.add_scaled(&t, &(ca * cb));
            }
        }
        if !x.cartan.is_zero() {
            for (b, cb) in &y.roots {
                let pairing = self.rs.inner(&x.cartan, &self.root_weight(*b)).expect("dims");
                out.add_scaled(
                    &LieElt::root(self.rs.ambient, *b, qi(1)),
                    &(cb * pairing),
                );
            }
        }
        if !y.cartan.is_zero() {
            for (a, ca) in &x.roots {
                let pairing = self.rs.inner(&y.cartan, &self.root_weight(*a)).expect("dims");
                out.add_scaled(
                    &LieElt::root(self.rs.ambient, *a, qi(1)),
                    &(-(ca * pairing)),
                );
            }
        }
        out
    }

    /// Normalized invariant form with `(theta, theta) = 2`:
    /// `<e_a, e_{-a}> = 2/(a,a)`, `<h_v, h_w> = (v,w)`, mixed terms zero.
    pub fn form(&self, x: &LieElt, y: &LieElt) -> Q {
        let mut out = self.rs.inner(&x.cartan, &y.cartan).expect("dims");
        for (a, ca) in &x.roots {
            let na = self.neg_root(*a);
            if let Some(cb) = y.roots.get(&na) {
                let alpha = self.root_weight(*a);
                let norm = self.rs.inner(&alpha, &alpha).expect("dims");
                out += ca * cb * (qi(2) / norm);
            }
        }
        out
    }

    /// Expands a Lie element over the Chevalley basis (root vectors and
    /// simple coroots). The Cartan part must lie in the root span.
    pub fn to_basis(&self, x: &LieElt) -> Vec<(usize, Q)> {
        let m = self.npos();
        let mut out: Vec<(usize, Q)> = x.roots.iter().map(|(k, v)| (*k, v.clone())).collect();
        if !x.cartan.is_zero() {
            // coefficient on the simple coroot alpha_i^vee is (v, omega_i)
            let mut recon = Weight::zero(self.rs.ambient);
            for i in 0..self.rs.rank() {
                let c = self
                    .rs
                    .inner(&x.cartan, &self.rs.fundamental_weights[i])
                    .expect("dims");
                if !c.is_zero() {
                    out.push((2 * m + i, c.clone()));
                    recon = recon.add(&self.rs.coroot(&self.rs.simple_roots[i]).scale(&c));
                }
            }
            debug_assert_eq!(recon, x.cartan, "Cartan part outside the root span");
        }
        out
    }

    /// 𝔤-weight of a basis element: its root, or zero for coroots.
    pub fn basis_weight(&self, b: usize) -> Weight {
        let m = self.npos();
        if b < 2 * m {
            self.root_weight(b)
        } else {
            Weight::zero(self.rs.ambient)
        }
    }
}

/// Largest `k >= 0` with `beta - k*alpha` a root.
fn chain_down(rs: &RootSystem, alpha: &Weight, beta: &Weight) -> i64 {
    let mut k = 0;
    let mut w = beta.sub(alpha);
    while rs.root_lookup(&w).is_some() {
        k += 1;
        w = w.sub(alpha);
    }
    k
}

/// Computes the full signed table of structure constants for `rs`.
pub fn chevalley_constants(rs: &RootSystem) -> Result<StructureConstants> {
    let m = rs.positive_roots.len();
    let norm = |i: usize| -> Q {
        rs.inner(&rs.positive_roots[i], &rs.positive_roots[i])
            .expect("dims")
    };

    // Positive special pairs first, in increasing order of their sum.
    let mut pos: HashMap<(usize, usize), i64> = HashMap::new();
    let mut extraspecial: Vec<Option<(usize, usize)>> = vec![None; m];
    let get_pos = |table: &HashMap<(usize, usize), i64>, a: usize, b: usize| -> i64 {
        if a < b {
            table.get(&(a, b)).copied().unwrap_or(0)
        } else {
            -table.get(&(b, a)).copied().unwrap_or(0)
        }
    };

    for g in 0..m {
        let gamma = &rs.positive_roots[g];
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in 0..m {
            if a >= g {
                break; // summands precede their sum in the canonical order
            }
            let rest = gamma.sub(&rs.positive_roots[a]);
            if let Some(b) = rs.positive_index(&rest) {
                if a < b {
                    pairs.push((a, b));
                }
            }
        }
        if pairs.is_empty() {
            continue; // simple root
        }
        pairs.sort();
        let (a1, b1) = pairs[0];
        extraspecial[g] = Some((a1, b1));
        let p = chain_down(rs, &rs.positive_roots[a1], &rs.positive_roots[b1]);
        pos.insert((a1, b1), p + 1);

        for &(a, b) in &pairs[1..] {
            // Jacobi identity on (alpha1, beta1, -alpha), reduced to
            // positive pairs via the cyclic relation.
            let alpha = &rs.positive_roots[a];
            let alpha1 = &rs.positive_roots[a1];
            let beta1 = &rs.positive_roots[b1];
            let beta = &rs.positive_roots[b];
            let n_a1b1 = qi(get_pos(&pos, a1, b1));
            let gg = rs.inner(gamma, gamma).expect("dims");
            let bb = norm(b);

            let mut t = Q::zero();
            // delta = beta1 - alpha
            let delta = beta1.sub(alpha);
            if let Some(d) = rs.positive_index(&delta) {
                let dd = norm(d);
                let b1b1 = norm(b1);
                let term = -(dd / &b1b1)
                    * qi(get_pos(&pos, a, d))
                    * qi(get_pos(&pos, d, a1));
                t += term;
            }
            // eta = alpha - alpha1
            let eta = alpha.sub(alpha1);
            if let Some(e) = rs.positive_index(&eta) {
                let ee = norm(e);
                let aa = norm(a);
                let b1b1 = norm(b1);
                let term = (ee / aa)
                    * qi(get_pos(&pos, a1, e))
                    * (&bb / &b1b1)
                    * qi(get_pos(&pos, e, b));
                t += term;
            }
            let val = t * gg / (bb * n_a1b1);
            if !q_is_integer(&val) {
                return Err(Error::Inconsistency(format!(
                    "non-integral structure constant at pair ({a},{b}) in {}",
                    rs.label
                )));
            }
            let val = i64::try_from(val.to_integer()).expect("small constant");
            let expected = chain_down(rs, alpha, beta) + 1;
            if val.abs() != expected {
                return Err(Error::Inconsistency(format!(
                    "structure constant magnitude {val} != p+1 = {expected} in {}",
                    rs.label
                )));
            }
            pos.insert((a, b), val);
        }
    }

    // Extend to all signed pairs.
    let mut full: HashMap<(u32, u32), i64> = HashMap::new();
    let weight = |idx: usize| -> Weight {
        if idx < m {
            rs.positive_roots[idx].clone()
        } else {
            rs.positive_roots[idx - m].neg()
        }
    };
    let norm_w = |w: &Weight| -> Q { rs.inner(w, w).expect("dims") };
    for a in 0..2 * m {
        for b in 0..2 * m {
            // [e,e] = 0 and the opposite-root bracket is a coroot; both
            // fall out of the lookup below (neither sum is a root).
            let wa = weight(a);
            let wb = weight(b);
            let sum = wa.add(&wb);
            if rs.root_lookup(&sum).is_none() {
                continue;
            }
            let val = match (a < m, b < m) {
                (true, true) => get_pos(&pos, a, b),
                (false, false) => -get_pos(&pos, a - m, b - m),
                (true, false) => {
                    // a positive, b negative
                    let c = sum.clone();
                    if let Some((ci, true)) = rs.root_lookup(&c) {
                        // sum positive: N(a,b) = -(c,c)/(a,a) * N(-b, c)
                        let ratio = norm_w(&c) / norm_w(&wa);
                        let nb = b - m; // index of -b as positive
                        let v = -ratio * qi(get_pos(&pos, nb, ci));
                        debug_assert!(q_is_integer(&v));
                        i64::try_from(v.to_integer()).expect("small")
                    } else {
                        // sum negative: N(a,b) = -(c,c)/(b,b) * N(a, -c)
                        let (ci, _) = rs.root_lookup(&c).expect("root");
                        let ratio = norm_w(&c) / norm_w(&wb);
                        let v = -ratio * qi(get_pos(&pos, a, ci));
                        debug_assert!(q_is_integer(&v));
                        i64::try_from(v.to_integer()).expect("small")
                    }
                }
                (false, true) => {
                    // antisymmetry against the (pos, neg) case
                    let c = sum.clone();
                    let v = if let Some((ci, true)) = rs.root_lookup(&c) {
                        let ratio = norm_w(&c) / norm_w(&wb);
                        let na = a - m;
                        -ratio * qi(get_pos(&pos, na, ci))
                    } else {
                        let (ci, _) = rs.root_lookup(&c).expect("root");
                        let ratio = norm_w(&c) / norm_w(&wa);
                        -ratio * qi(get_pos(&pos, b, ci))
                    };
                    debug_assert!(q_is_integer(&v));
                    -i64::try_from(v.to_integer()).expect("small")
                }
            };
            if val != 0 {
                full.insert((a as u32, b as u32), val);
            }
        }
    }

    Ok(StructureConstants {
        npos: m,
        n: full,
        extraspecial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootlie::Series;

    fn alg(series: Series, rank: u8) -> Algebra {
        Algebra::new(SeriesLabel::new(series, rank).unwrap()).unwrap()
    }

    fn check_antisymmetry(a: &Algebra) {
        let n = 2 * a.npos();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(a.sc.n_value(i, j), -a.sc.n_value(j, i));
            }
        }
    }

    fn check_chain_magnitudes(a: &Algebra) {
        let n = 2 * a.npos();
        for i in 0..n {
            for j in 0..n {
                let wi = a.root_weight(i);
                let wj = a.root_weight(j);
                let sum = wi.add(&wj);
                if a.root_index(&sum).is_some() {
                    let p = chain_down(&a.rs, &wi, &wj);
                    assert_eq!(
                        a.sc.n_value(i, j).abs(),
                        p + 1,
                        "pair ({i},{j}) in {}",
                        a.rs.label
                    );
                } else if sum.is_zero() {
                    // coroot case, handled separately
                } else {
                    assert_eq!(a.sc.n_value(i, j), 0);
                }
            }
        }
    }

    fn check_jacobi_exhaustive(a: &Algebra) {
        let dim = a.basis_dim();
        let basis: Vec<LieElt> = (0..dim).map(|b| a.basis_elt(b)).collect();
        for x in 0..dim {
            for y in (x + 1)..dim {
                let xy = a.bracket(&basis[x], &basis[y]);
                for z in (y + 1)..dim {
                    let yz = a.bracket(&basis[y], &basis[z]);
                    let zx = a.bracket(&basis[z], &basis[x]);
                    let mut sum = a.bracket(&xy, &basis[z]);
                    sum.add_scaled(&a.bracket(&yz, &basis[x]), &qi(1));
                    sum.add_scaled(&a.bracket(&zx, &basis[y]), &qi(1));
                    assert!(
                        sum.is_zero(),
                        "Jacobi fails at ({x},{y},{z}) in {}",
                        a.rs.label
                    );
                }
            }
        }
    }

    fn check_e_f_coroot(a: &Algebra) {
        let m = a.npos();
        for i in 0..m {
            let e = a.basis_elt(i);
            let f = a.basis_elt(i + m);
            let h = a.bracket(&e, &f);
            assert!(h.roots.is_empty());
            assert_eq!(h.cartan, a.rs.coroot(&a.rs.positive_roots[i]));
        }
    }

    #[test]
    fn a2_matches_matrix_convention() {
        let a = alg(Series::A, 2);
        // alpha1 = eps1-eps2 sorts before alpha2 = eps2-eps3; their
        // extraspecial constant is +1, matching [E12, E23] = E13.
        let i1 = a.root_index(&Weight(vec![qi(1), qi(-1), qi(0)])).unwrap();
        let i2 = a.root_index(&Weight(vec![qi(0), qi(1), qi(-1)])).unwrap();
        assert_eq!(a.sc.n_value(i1, i2), 1);
        check_antisymmetry(&a);
        check_chain_magnitudes(&a);
        check_jacobi_exhaustive(&a);
        check_e_f_coroot(&a);
    }

    #[test]
    fn small_types_satisfy_chevalley_axioms() {
        for (s, r) in [
            (Series::A, 3),
            (Series::B, 2),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 4),
            (Series::F, 4),
        ] {
            let a = alg(s, r);
            check_antisymmetry(&a);
            check_chain_magnitudes(&a);
            check_jacobi_exhaustive(&a);
            check_e_f_coroot(&a);
        }
    }

    #[test]
    fn d5_axioms() {
        let a = alg(Series::D, 5);
        check_antisymmetry(&a);
        check_chain_magnitudes(&a);
        check_e_f_coroot(&a);
    }

    #[test]
    fn e6_full_jacobi() {
        let a = alg(Series::E, 6);
        check_antisymmetry(&a);
        check_chain_magnitudes(&a);
        check_e_f_coroot(&a);
        check_jacobi_exhaustive(&a);
    }

    #[test]
    fn form_normalization() {
        for (s, r) in [(Series::A, 3), (Series::C, 2), (Series::D, 4)] {
            let a = alg(s, r);
            let th = a.rs.highest_root_idx;
            let e = a.basis_elt(th);
            let f = a.basis_elt(th + a.npos());
            assert_eq!(a.form(&e, &f), qi(1));
        }
    }
}
