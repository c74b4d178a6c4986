//! The Weyl vertex algebra engine.
//!
//! `M_ell` is the Fock module for `ell` pairs of half-integer-moded
//! bosonic fields with `[a_i^+(r), a_j^-(s)] = delta_{r+s,0} delta_{ij}`
//! and `a_i^±(r) 1 = 0` for `r > 0`. The gl(ell) currents act as the
//! normally ordered bilinears
//!
//! `E_ij(n) = -sum_r :a_i^+(r) a_j^-(n-r):`
//!
//! (annihilation indices to the right). The overall sign is the one that
//! makes `x -> x(n)` a homomorphism onto a level -1 action with respect to
//! the trace form, with `H = sum_i E_ii` acting by the charge grading:
//! `[H(0), a_i^+(r)] = +a_i^+(r)`.
//!
//! `L(0)` is implemented combinatorially as the mode-index grading, so the
//! Sugawara decomposition of the conformal vector is a falsifiable check
//! rather than a definition.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::affine_univ::{AffineAlgebra, PbwVector};
use crate::num::{qi, qr, q_string, Half, Q};
use crate::qseries::divide_by_heisenberg;
use crate::rootlie::labels::{gl_basis_images, GlElt};
use crate::rootlie::Series;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ModeSign {
    Plus,
    Minus,
}

impl ModeSign {
    pub fn charge(self) -> i64 {
        match self {
            ModeSign::Plus => 1,
            ModeSign::Minus => -1,
        }
    }
}

/// A single Weyl-algebra mode `a_species^sign(r)`, `r` in `1/2 + Z`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WeylMode {
    pub species: u16,
    pub sign: ModeSign,
    pub r: Half,
}

impl WeylMode {
    pub fn new(species: u16, sign: ModeSign, r: Half) -> Result<WeylMode> {
        if r.is_integer() {
            return Err(Error::BadInput(format!(
                "Weyl mode index must lie in 1/2 + Z, got {r}"
            )));
        }
        if species == 0 {
            return Err(Error::BadInput("species are 1-based".into()));
        }
        Ok(WeylMode { species, sign, r })
    }

    pub fn is_creation(&self) -> bool {
        self.r.is_negative()
    }
}

// canonical sort: by index, then species, then sign
impl Ord for WeylMode {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.r
            .cmp(&other.r)
            .then(self.species.cmp(&other.species))
            .then(self.sign.cmp(&other.sign))
    }
}

impl PartialOrd for WeylMode {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A sorted multiset of creation modes applied to the vacuum.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FockMonomial(Vec<WeylMode>);

impl FockMonomial {
    pub fn vacuum() -> FockMonomial {
        FockMonomial(Vec::new())
    }

    pub fn modes(&self) -> &[WeylMode] {
        &self.0
    }

    /// Conformal degree: the sum of `|r|` over the modes.
    pub fn degree(&self) -> Half {
        self.0
            .iter()
            .fold(Half::ZERO, |acc, m| acc + m.r.abs())
    }

    /// Charge: number of plus modes minus number of minus modes.
    pub fn charge(&self) -> i64 {
        self.0.iter().map(|m| m.sign.charge()).sum()
    }

    /// gl weight: `+eps_i` per `a_i^+`, `-eps_i` per `a_i^-`.
    pub fn gl_weight(&self, ell: u16) -> Vec<i64> {
        let mut w = vec![0i64; ell as usize];
        for m in &self.0 {
            w[(m.species - 1) as usize] += m.sign.charge();
        }
        w
    }

    fn with_inserted(&self, mode: WeylMode) -> FockMonomial {
        let mut v = self.0.clone();
        let at = v.partition_point(|m| *m <= mode);
        v.insert(at, mode);
        FockMonomial(v)
    }

    fn without_index(&self, idx: usize) -> FockMonomial {
        let mut v = self.0.clone();
        v.remove(idx);
        FockMonomial(v)
    }
}

/// A finite rational combination of Fock monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FockVector {
    pub terms: BTreeMap<FockMonomial, Q>,
}

impl FockVector {
    pub fn zero() -> FockVector {
        FockVector::default()
    }

    pub fn vacuum() -> FockVector {
        let mut terms = BTreeMap::new();
        terms.insert(FockMonomial::vacuum(), Q::one());
        FockVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &FockVector, c: &Q) {
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

    pub fn max_degree(&self) -> Half {
        self.terms
            .keys()
            .map(|m| m.degree())
            .max()
            .unwrap_or(Half::ZERO)
    }

    pub fn to_display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                let body = if m.0.is_empty() {
                    "1".to_string()
                } else {
                    m.0.iter()
                        .map(|w| {
                            let s = match w.sign {
                                ModeSign::Plus => '+',
                                ModeSign::Minus => '-',
                            };
                            format!("a{}{}({})", w.species, s, w.r)
                        })
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                format!("({}) {}", q_string(c), body)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Applies a single Weyl mode. Creation modes insert; annihilation modes
/// contract against matching creation modes of the opposite sign, with the
/// sign of the canonical commutator (`[a^-(r), a^+(-r)] = -1`).
pub fn apply_weyl_mode(ell: u16, mode: WeylMode, v: &FockVector) -> FockVector {
    debug_assert!(mode.species <= ell);
    let mut out = FockVector::zero();
    for (mono, coeff) in &v.terms {
        if mode.is_creation() {
            out.add_scaled(
                &FockVector {
                    terms: {
                        let mut t = BTreeMap::new();
                        t.insert(mono.with_inserted(mode), Q::one());
                        t
                    },
                },
                coeff,
            );
        } else {
            let contraction_sign = match mode.sign {
                ModeSign::Plus => qi(1),
                ModeSign::Minus => qi(-1),
            };
            for (idx, m) in mono.0.iter().enumerate() {
                if m.species == mode.species && m.sign != mode.sign && m.r + mode.r == Half::ZERO {
                    let rest = mono.without_index(idx);
                    out.add_scaled(
                        &FockVector {
                            terms: {
                                let mut t = BTreeMap::new();
                                t.insert(rest, Q::one());
                                t
                            },
                        },
                        &(coeff * &contraction_sign),
                    );
                }
            }
        }
    }
    out
}

/// Applies the current mode `x(n)` for a gl element `x`, as the normally
/// ordered bilinear with the homomorphism-fixing overall minus sign.
pub fn apply_current(ell: u16, x: &GlElt, n: i64, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    if v.is_zero() {
        return out;
    }
    // r ranges over half-integers with |r| or |n - r| within reach of the
    // vector's degree; everything outside annihilates.
    let max_deg = v.max_degree();
    let bound = max_deg.doubled() / 2 + n.abs() + 2;
    for ((i, j), c) in &x.0 {
        let coeff = -c.clone();
        let mut r2 = -(2 * bound + 1);
        while r2 <= 2 * bound + 1 {
            let r = Half::halves(r2);
            let s = Half::int(n) - r; // index of the a_j^- factor
            let plus = WeylMode {
                species: *i,
                sign: ModeSign::Plus,
                r,
            };
            let minus = WeylMode {
                species: *j,
                sign: ModeSign::Minus,
                r: s,
            };
            // normal order: annihilation to the right
            let term = if plus.is_creation() || !minus.is_creation() {
                // apply a_j^-(s) first, then a_i^+(r)
                let t = apply_weyl_mode(ell, minus, v);
                apply_weyl_mode(ell, plus, &t)
            } else {
                let t = apply_weyl_mode(ell, plus, v);
                apply_weyl_mode(ell, minus, &t)
            };
            out.add_scaled(&term, &coeff);
            r2 += 2;
        }
    }
    out
}

/// The Heisenberg generator `H = sum_i E_ii` as a gl element.
pub fn heisenberg_h(ell: u16) -> GlElt {
    GlElt::identity(ell)
}

/// Sector of fixed charge with a degree ceiling.
#[derive(Clone, Copy, Debug)]
pub struct SectorIndex {
    pub ell: u16,
    pub charge: i64,
    pub max_degree: Half,
}

impl SectorIndex {
    pub fn new(ell: u16, charge: i64, max_degree: Half) -> Result<SectorIndex> {
        if ell == 0 {
            return Err(Error::BadInput("ell must be at least 1".into()));
        }
        if max_degree.is_negative() {
            return Err(Error::BadInput("degree ceiling must be nonnegative".into()));
        }
        Ok(SectorIndex {
            ell,
            charge,
            max_degree,
        })
    }

    /// Lowest conformal degree of the sector: `|charge| / 2`.
    pub fn lowest_degree(&self) -> Half {
        Half::halves(self.charge.abs())
    }
}

/// All monomials of the given charge and exact conformal degree, in
/// deterministic order.
pub fn sector_basis(ell: u16, charge: i64, degree: Half) -> Vec<FockMonomial> {
    let mut out = Vec::new();
    if degree.is_negative() {
        return out;
    }
    // alphabet of creation modes with |r| <= degree, canonically ordered
    let mut alphabet = Vec::new();
    let mut r2 = -1i64;
    while Half::halves(-r2) <= degree {
        for species in 1..=ell {
            for sign in [ModeSign::Plus, ModeSign::Minus] {
                alphabet.push(WeylMode {
                    species,
                    sign,
                    r: Half::halves(r2),
                });
            }
        }
        r2 -= 2;
    }
    alphabet.sort();
    fn rec(
        alphabet: &[WeylMode],
        from: usize,
        remaining: Half,
        charge: i64,
        stack: &mut Vec<WeylMode>,
        out: &mut Vec<FockMonomial>,
    ) {
        if remaining == Half::ZERO {
            if charge == 0 {
                out.push(FockMonomial(stack.clone()));
            }
            return;
        }
        // each remaining half-unit of degree can carry at most one charge
        if charge.abs() > remaining.doubled() {
            return;
        }
        for k in from..alphabet.len() {
            let m = alphabet[k];
            if m.r.abs() > remaining {
                continue;
            }
            stack.push(m);
            rec(
                alphabet,
                k,
                remaining - m.r.abs(),
                charge - m.sign.charge(),
                stack,
                out,
            );
            stack.pop();
        }
    }
    let mut stack = Vec::new();
    rec(&alphabet, 0, degree, charge, &mut stack, &mut out);
    out.sort();
    out
}

/// The three degree-2 charge-0 conformal vectors: the free-field conformal
/// vector `omega`, the Sugawara vector of the level -1 current subalgebra,
/// and the Heisenberg vector `omega_1 = -H(-1)^2 1/(2 ell)`, built exactly
/// from their defining formulas.
pub fn conformal_vectors(ell: u16) -> Result<(FockVector, FockVector, FockVector)> {
    if ell < 2 {
        return Err(Error::BadInput("conformal split needs ell >= 2".into()));
    }
    let vac = FockVector::vacuum();
    // omega = 1/2 sum_i (a_i^-(-3/2) a_i^+(-1/2) - a_i^+(-3/2) a_i^-(-1/2)) 1
    let mut omega = FockVector::zero();
    for i in 1..=ell {
        let m32 = Half::halves(-3);
        let m12 = Half::halves(-1);
        let t1 = apply_weyl_mode(
            ell,
            WeylMode {
                species: i,
                sign: ModeSign::Minus,
                r: m32,
            },
            &apply_weyl_mode(
                ell,
                WeylMode {
                    species: i,
                    sign: ModeSign::Plus,
                    r: m12,
                },
                &vac,
            ),
        );
        let t2 = apply_weyl_mode(
            ell,
            WeylMode {
                species: i,
                sign: ModeSign::Plus,
                r: m32,
            },
            &apply_weyl_mode(
                ell,
                WeylMode {
                    species: i,
                    sign: ModeSign::Minus,
                    r: m12,
                },
                &vac,
            ),
        );
        omega.add_scaled(&t1, &qr(1, 2));
        omega.add_scaled(&t2, &qr(-1, 2));
    }

    // omega_1 = -(1/(2 ell)) H(-1)^2 1
    let h = heisenberg_h(ell);
    let h1 = apply_current(ell, &h, -1, &vac);
    let h2 = apply_current(ell, &h, -1, &h1);
    let mut omega_one = h2;
    omega_one.scale(&qr(-1, 2 * ell as i64));

    // omega_sug = (1/(2(ell-1))) [ sum_{i<j} (e_ij(-1) f_ij(-1)
    //   + f_ij(-1) e_ij(-1)) 1 + sum_i H^(i)(-1)^2 1 / (i(i+1)) ]
    let mut sug = FockVector::zero();
    for i in 1..=ell {
        for j in (i + 1)..=ell {
            // labeled convention: e_{eps_i - eps_j} is the image of -E_ij
            let e = GlElt::e(i, j).scale(&qi(-1));
            let f = GlElt::e(j, i).scale(&qi(-1));
            let ef = apply_current(ell, &e, -1, &apply_current(ell, &f, -1, &vac));
            let fe = apply_current(ell, &f, -1, &apply_current(ell, &e, -1, &vac));
            sug.add_scaled(&ef, &Q::one());
            sug.add_scaled(&fe, &Q::one());
        }
    }
    for i in 1..ell {
        // H^(i) = sum_{r<=i} E_rr - i E_{i+1,i+1}, squared norm i(i+1)
        let mut hi = GlElt::default();
        for r in 1..=i {
            hi = hi.add(&GlElt::e(r, r));
        }
        hi = hi.add(&GlElt::e(i + 1, i + 1).scale(&qi(-(i as i64))));
        let once = apply_current(ell, &hi, -1, &vac);
        let twice = apply_current(ell, &hi, -1, &once);
        sug.add_scaled(&twice, &qr(1, (i as i64) * (i as i64 + 1)));
    }
    sug.scale(&qr(1, 2 * (ell as i64 - 1)));

    Ok((omega, sug, omega_one))
}

/// The image of a truncated universal-affine element at level -1 under the
/// free-field homomorphism: current modes applied to the Fock vacuum in
/// PBW order.
pub fn phi_image(ell: u16, aff: &AffineAlgebra, v: &PbwVector) -> Result<FockVector> {
    if aff.alg.rs.label.series != Series::A || aff.alg.rs.rank() != (ell as usize) - 1 {
        return Err(Error::BadInput(format!(
            "free-field image needs type A of rank ell-1 = {}, got {}",
            ell - 1,
            aff.alg.rs.label
        )));
    }
    if aff.level != qi(-1) {
        return Err(Error::BadInput(
            "the free-field realization exists at level -1".into(),
        ));
    }
    let images = gl_basis_images(&aff.alg)?;
    let mut out = FockVector::zero();
    for (mono, c) in &v.terms {
        let mut acc = FockVector::vacuum();
        for (n, b) in mono.0.iter().rev() {
            acc = apply_current(ell, &images[*b as usize], *n, &acc);
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// One degree of a singular-vector scan.
#[derive(Clone, Debug)]
pub struct ScanEntry {
    pub degree: Half,
    pub kernel_dim: usize,
    pub expected_dim: usize,
    /// Kernel vectors beyond the expected count (empty when clean).
    pub extra: Vec<FockVector>,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub sector: SectorIndex,
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    pub fn is_clean(&self) -> bool {
        self.entries.iter().all(|e| e.kernel_dim == e.expected_dim)
    }
}

/// The raising operators of the scan: simple current zero modes,
/// `f_theta(1)`, and the positive Heisenberg modes `H(n)` up to the degree
/// window. The pair `{e_i(0), f_theta(1)}` generates the affine raising
/// algebra, but the Heisenberg modes are mutually commuting and each
/// `H(n)` must be stacked separately: with `H(1)` alone, descendants like
/// `H(-2) 1` would masquerade as singular vectors.
fn scan_operators(ell: u16, window: i64) -> Vec<(GlElt, i64)> {
    let mut ops = Vec::new();
    for i in 1..ell {
        // labeled e_{eps_i - eps_{i+1}} = image of -E_{i,i+1}
        ops.push((GlElt::e(i, i + 1).scale(&qi(-1)), 0));
    }
    if ell >= 2 {
        // f_theta = image of -E_{ell,1}
        ops.push((GlElt::e(ell, 1).scale(&qi(-1)), 1));
    }
    for n in 1..=window.max(1) {
        ops.push((heisenberg_h(ell), n));
    }
    ops
}

/// Scans the sector degree by degree for vectors killed by every raising
/// operator. Beyond the one expected lowest-weight vector at the bottom
/// degree, anything found is reported.
pub fn singular_scan(idx: &SectorIndex, hard_bound: Option<Half>) -> Result<ScanReport> {
    let bound = hard_bound.unwrap_or(Half::int(6));
    if idx.max_degree > bound {
        return Err(Error::DimensionBound(format!(
            "scan ceiling {} exceeds the configured bound {bound}",
            idx.max_degree
        )));
    }
    if idx.ell < 2 {
        return Err(Error::BadInput("scans need ell >= 2".into()));
    }
    let window = (idx.max_degree - idx.lowest_degree()).doubled() / 2 + 1;
    let ops = scan_operators(idx.ell, window);
    let mut entries = Vec::new();
    let mut d = idx.lowest_degree();
    while d <= idx.max_degree {
        let basis = sector_basis(idx.ell, idx.charge, d);
        if basis.is_empty() {
            d += Half::int(1);
            continue;
        }
        let mut rows: Vec<crate::linalg::SparseRow> = Vec::new();
        for (x, n) in &ops {
            let mut target_index: BTreeMap<FockMonomial, usize> = BTreeMap::new();
            let mut images = Vec::with_capacity(basis.len());
            for mono in &basis {
                let v = FockVector {
                    terms: {
                        let mut t = BTreeMap::new();
                        t.insert(mono.clone(), Q::one());
                        t
                    },
                };
                let img = apply_current(idx.ell, x, *n, &v);
                for m in img.terms.keys() {
                    let next = target_index.len();
                    target_index.entry(m.clone()).or_insert(next);
                }
                images.push(img);
            }
            let mut op_rows: Vec<crate::linalg::SparseRow> = vec![Vec::new(); target_index.len()];
            for (col, img) in images.iter().enumerate() {
                for (m, c) in &img.terms {
                    op_rows[target_index[m]].push((col, c.clone()));
                }
            }
            rows.extend(op_rows);
        }
        let kernel = crate::linalg::kernel_basis(&rows, basis.len());
        let expected = if d == idx.lowest_degree() { 1 } else { 0 };
        let extra = if kernel.len() > expected {
            kernel
                .iter()
                .map(|vec| FockVector {
                    terms: vec
                        .iter()
                        .map(|(c, q)| (basis[*c].clone(), q.clone()))
                        .collect(),
                })
                .collect()
        } else {
            Vec::new()
        };
        entries.push(ScanEntry {
            degree: d,
            kernel_dim: kernel.len(),
            expected_dim: expected,
            extra,
        });
        d += Half::int(1);
    }
    Ok(ScanReport {
        sector: *idx,
        entries,
    })
}

/// The expected lowest-weight vector of a sector:
/// `a_1^+(-1/2)^s 1` for `s >= 0`, `a_ell^-(-1/2)^{-s} 1` for `s < 0`.
pub fn lowest_weight_vector(ell: u16, charge: i64) -> FockVector {
    let mut v = FockVector::vacuum();
    let (species, sign) = if charge >= 0 {
        (1, ModeSign::Plus)
    } else {
        (ell, ModeSign::Minus)
    };
    for _ in 0..charge.abs() {
        v = apply_weyl_mode(
            ell,
            WeylMode {
                species,
                sign,
                r: Half::halves(-1),
            },
            &v,
        );
    }
    v
}

/// Per-degree data of a charge sector.
#[derive(Clone, Debug)]
pub struct GradedCharacter {
    pub sector: SectorIndex,
    /// `(degree, dimension, gl-weight multiset)` per degree step.
    pub degrees: Vec<(Half, usize, BTreeMap<Vec<i64>, usize>)>,
    /// Dimension series divided by the Heisenberg character.
    pub quotient: Vec<i64>,
}

/// Dimensions and exact gl-weight multisets per degree, plus the quotient
/// of the dimension series by the free-boson character. Tensoring with a
/// free boson forces the quotient to have nonnegative integer
/// coefficients, starting at the dimension of the sector's lowest
/// component (1 for the vacuum sector).
pub fn graded_character(idx: &SectorIndex) -> Result<GradedCharacter> {
    let mut degrees = Vec::new();
    let mut dims = Vec::new();
    let mut d = idx.lowest_degree();
    while d <= idx.max_degree {
        let basis = sector_basis(idx.ell, idx.charge, d);
        let mut weights: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for m in &basis {
            *weights.entry(m.gl_weight(idx.ell)).or_insert(0) += 1;
        }
        dims.push(basis.len() as i64);
        degrees.push((d, basis.len(), weights));
        d += Half::int(1);
    }
    let quotient = divide_by_heisenberg(&dims)?;
    Ok(GradedCharacter {
        sector: *idx,
        degrees,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_univ::{build_paper_vector, PaperVector};
    use crate::rootlie::SeriesLabel;

    fn mode(species: u16, sign: ModeSign, halves: i64) -> WeylMode {
        WeylMode {
            species,
            sign,
            r: Half::halves(halves),
        }
    }

    #[test]
    fn ccr_on_vacuum() {
        // a1+(1/2) a1-(-1/2) 1 = 1
        let v = apply_weyl_mode(2, mode(1, ModeSign::Minus, -1), &FockVector::vacuum());
        let back = apply_weyl_mode(2, mode(1, ModeSign::Plus, 1), &v);
        assert_eq!(back, FockVector::vacuum());
        // a1+(1/2) 1 = 0
        assert!(apply_weyl_mode(2, mode(1, ModeSign::Plus, 1), &FockVector::vacuum()).is_zero());
    }

    #[test]
    fn bosonic_contraction_count() {
        // a1+(1/2) (a1-(-1/2))^2 1 = 2 a1-(-1/2) 1
        let one = apply_weyl_mode(2, mode(1, ModeSign::Minus, -1), &FockVector::vacuum());
        let two = apply_weyl_mode(2, mode(1, ModeSign::Minus, -1), &one);
        let back = apply_weyl_mode(2, mode(1, ModeSign::Plus, 1), &two);
        let mut expected = one.clone();
        expected.scale(&qi(2));
        assert_eq!(back, expected);
    }

    #[test]
    fn charge_operator_normalization() {
        // H(0) a_1^+(-1/2) 1 = + the same vector
        let ell = 3;
        let v = apply_weyl_mode(ell, mode(1, ModeSign::Plus, -1), &FockVector::vacuum());
        let hv = apply_current(ell, &heisenberg_h(ell), 0, &v);
        assert_eq!(hv, v);
        // H(0) 1 = 0: no normal-ordering constant on the diagonal
        assert!(apply_current(ell, &heisenberg_h(ell), 0, &FockVector::vacuum()).is_zero());
    }

    #[test]
    fn heisenberg_level() {
        // [H(1), H(-1)] 1 = -ell 1
        for ell in [2u16, 3, 4] {
            let h = heisenberg_h(ell);
            let hm = apply_current(ell, &h, -1, &FockVector::vacuum());
            let hp = apply_current(ell, &h, 1, &hm);
            let mut expected = FockVector::vacuum();
            expected.scale(&qi(-(ell as i64)));
            assert_eq!(hp, expected, "ell = {ell}");
        }
    }

    #[test]
    fn current_commutator_is_level_minus_one() {
        // [e(1), f(-1)] 1 = -1 on the vacuum for e = e_{eps1-eps2}
        let ell = 3;
        let e = GlElt::e(1, 2).scale(&qi(-1));
        let f = GlElt::e(2, 1).scale(&qi(-1));
        let fm = apply_current(ell, &f, -1, &FockVector::vacuum());
        let ef = apply_current(ell, &e, 1, &fm);
        let mut expected = FockVector::vacuum();
        expected.scale(&qi(-1));
        assert_eq!(ef, expected);
    }

    #[test]
    fn sector_sizes() {
        assert_eq!(sector_basis(3, 0, Half::ZERO).len(), 1);
        assert_eq!(sector_basis(3, 0, Half::int(1)).len(), 9);
        assert_eq!(sector_basis(3, 1, Half::halves(1)).len(), 3);
        assert!(sector_basis(3, 1, Half::int(1)).is_empty()); // wrong parity
    }

    #[test]
    fn lowest_component_matches_one_row_module() {
        // charge 1, degree 1/2 weights are the defining-representation
        // weights eps_1, eps_2, eps_3
        let basis = sector_basis(3, 1, Half::halves(1));
        let weights: Vec<Vec<i64>> = basis.iter().map(|m| m.gl_weight(3)).collect();
        assert_eq!(weights.len(), 3);
        assert!(weights.contains(&vec![1, 0, 0]));
        assert!(weights.contains(&vec![0, 1, 0]));
        assert!(weights.contains(&vec![0, 0, 1]));
    }

    #[test]
    fn sugawara_identity_small() {
        let (omega, sug, one) = conformal_vectors(2).unwrap();
        let mut sum = sug.clone();
        sum.add_scaled(&one, &Q::one());
        assert_eq!(sum, omega);
    }

    #[test]
    fn phi_kills_the_quadratic_vector() {
        let (aff, v) = build_paper_vector(PaperVector::AType { ell: 4 }, None).unwrap();
        let img = phi_image(4, &aff, &v).unwrap();
        assert!(img.is_zero(), "nonzero image: {}", img.to_display());
    }

    #[test]
    fn phi_on_a_single_current_state() {
        // e_{eps1-eps2}(-1) 1 maps to a_1^+(-1/2) a_2^-(-1/2) 1
        let aff = AffineAlgebra::new(SeriesLabel::new(Series::A, 2).unwrap(), qi(-1)).unwrap();
        let table = crate::rootlie::labels::LabelTable::new(&aff.alg).unwrap();
        let e = table
            .e(&aff.alg, crate::rootlie::labels::RootLabel::Diff(1, 2))
            .unwrap();
        let v = crate::affine_univ::act_lie(&aff, &e, -1, &PbwVector::vacuum(aff.cutoff)).unwrap();
        let img = phi_image(3, &aff, &v).unwrap();
        let expected = apply_weyl_mode(
            3,
            mode(1, ModeSign::Plus, -1),
            &apply_weyl_mode(3, mode(2, ModeSign::Minus, -1), &FockVector::vacuum()),
        );
        assert_eq!(img, expected);
    }

    #[test]
    fn scan_is_clean_for_ell_three() {
        let idx = SectorIndex::new(3, 0, Half::int(2)).unwrap();
        let report = singular_scan(&idx, None).unwrap();
        assert!(report.is_clean());
        assert_eq!(report.entries[0].kernel_dim, 1);
    }

    #[test]
    fn scan_charge_one_finds_only_the_lowest_vector() {
        let idx = SectorIndex::new(4, 1, Half::halves(5)).unwrap();
        let report = singular_scan(&idx, None).unwrap();
        assert!(report.is_clean());
    }

    #[test]
    fn graded_character_quotient() {
        let idx = SectorIndex::new(3, 0, Half::int(2)).unwrap();
        let gc = graded_character(&idx).unwrap();
        assert_eq!(gc.degrees[0].1, 1);
        assert_eq!(gc.degrees[1].1, 9);
        assert_eq!(gc.quotient[0], 1);
        assert!(gc.quotient.iter().all(|&c| c >= 0));
        // nonzero charge: the quotient starts at the lowest-component
        // dimension, here dim V(omega_1) = ell
        let idx1 = SectorIndex::new(3, 1, Half::halves(5)).unwrap();
        let gc1 = graded_character(&idx1).unwrap();
        assert_eq!(gc1.quotient[0], 3);
        assert!(gc1.quotient.iter().all(|&c| c >= 0));
    }

    #[test]
    fn two_pair_scan_is_diagnostic() {
        // ell = 2 charge components are reducible; the scan records where
        // the extra singular vectors first appear. Frozen findings: the
        // charge-0 sector has one at degree 2, the charge ±1 sectors at
        // degree 7/2.
        let idx = SectorIndex::new(2, 0, Half::int(3)).unwrap();
        let report = singular_scan(&idx, None).unwrap();
        let dims: Vec<(String, usize)> = report
            .entries
            .iter()
            .map(|e| (e.degree.to_string(), e.kernel_dim))
            .collect();
        assert_eq!(
            dims,
            vec![
                ("0".into(), 1),
                ("1".into(), 0),
                ("2".into(), 1),
                ("3".into(), 0)
            ]
        );
        let idx1 = SectorIndex::new(2, 1, Half::halves(7)).unwrap();
        let report1 = singular_scan(&idx1, None).unwrap();
        let kernel_dims: Vec<usize> = report1.entries.iter().map(|e| e.kernel_dim).collect();
        assert_eq!(kernel_dims, vec![1, 0, 0, 1]);
    }

    #[test]
    fn charge_and_degree_bookkeeping() {
        let m = FockMonomial::vacuum()
            .with_inserted(mode(1, ModeSign::Plus, -1))
            .with_inserted(mode(2, ModeSign::Minus, -3));
        assert_eq!(m.degree(), Half::int(2));
        assert_eq!(m.charge(), 0);
        assert_eq!(m.gl_weight(2), vec![1, -1]);
    }
}
