//! Subalgebra embeddings: D5 inside E6 and the symplectic series inside
//! type A. Each embedding carries the images of the subalgebra's Chevalley
//! generators, and construction verifies the Serre relations on those
//! images, so a sign-convention bug in the structure constants surfaces
//! immediately.

use num_traits::Zero;

use crate::num::{qi, qr, Q};
use crate::rootlie::chevalley::{Algebra, LieElt};
use crate::rootlie::labels::{LabelTable, RootLabel};
use crate::rootlie::{Series, SeriesLabel, Weight};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EmbeddingName {
    /// D5 inside E6, centralized by the one-dimensional Cartan piece `H`.
    D5InE6,
    /// C_l inside A_{2l-1} (symplectic fixed points of the diagram flip).
    CInA { half_rank: u8 },
}

pub struct EmbeddingSpec {
    pub name: EmbeddingName,
    pub sub: Algebra,
    pub ambient: Algebra,
    /// Images of the subalgebra's simple raising generators.
    pub e_images: Vec<LieElt>,
    /// Images of the simple lowering generators.
    pub f_images: Vec<LieElt>,
    /// `h_i = [e_i, f_i]` in the ambient algebra.
    pub h_images: Vec<LieElt>,
    /// The centralizing Cartan element, when the embedding has one.
    pub cartan_h: Option<Weight>,
}

/// Builds and verifies an embedding.
pub fn build_embedding(name: EmbeddingName) -> Result<EmbeddingSpec> {
    let spec = match name {
        EmbeddingName::D5InE6 => d5_in_e6()?,
        EmbeddingName::CInA { half_rank } => c_in_a(half_rank)?,
    };
    verify_serre(&spec)?;
    if let Some(h) = &spec.cartan_h {
        // H centralizes every generator image.
        let hel = LieElt::cartan(h.clone());
        for (k, e) in spec.e_images.iter().chain(&spec.f_images).enumerate() {
            if !spec.ambient.bracket(&hel, e).is_zero() {
                return Err(Error::VerificationFailed(format!(
                    "H does not centralize generator image {k}"
                )));
            }
        }
    }
    Ok(spec)
}

/// The five D5 generators inside E6: `e_(5)` and the classical root
/// vectors for `eps1+eps2`, `eps3-eps2`, `eps2-eps1`, `eps4-eps3`; the
/// centralizer is spanned by `H = (h8 - h7 - h6 - 3 h5)/3`.
fn d5_in_e6() -> Result<EmbeddingSpec> {
    let ambient = Algebra::new(SeriesLabel::new(Series::E, 6)?)?;
    let sub = Algebra::new(SeriesLabel::new(Series::D, 5)?)?;
    let table = LabelTable::new(&ambient)?;
    let labels = [
        RootLabel::Half(0b10000), // e_(5)
        RootLabel::Sum(2, 1),
        RootLabel::Diff(3, 2),
        RootLabel::Diff(2, 1),
        RootLabel::Diff(4, 3),
    ];
    let mut e_images = Vec::new();
    let mut f_images = Vec::new();
    let mut h_images = Vec::new();
    for l in labels {
        let e = table.e(&ambient, l)?;
        let f = table.f(&ambient, l)?;
        h_images.push(ambient.bracket(&e, &f));
        e_images.push(e);
        f_images.push(f);
    }
    let mut h = vec![Q::zero(); 8];
    h[7] = qr(1, 3);
    h[6] = qr(-1, 3);
    h[5] = qr(-1, 3);
    h[4] = qi(-1);
    Ok(EmbeddingSpec {
        name: EmbeddingName::D5InE6,
        sub,
        ambient,
        e_images,
        f_images,
        h_images,
        cartan_h: Some(Weight(h)),
    })
}

/// C_l inside A_{2l-1}: `e_k -> e_{eps_k - eps_{k+1}} - e_{eps_{2l-k} -
/// eps_{2l-k+1}}` for `k < l` and `e_l -> e_{eps_l - eps_{l+1}}`, in the
/// labeled (gl-calibrated) convention.
fn c_in_a(half_rank: u8) -> Result<EmbeddingSpec> {
    let ell = half_rank as usize;
    if ell < 2 {
        return Err(Error::UnsupportedLabel(
            "symplectic embedding needs rank >= 2".into(),
        ));
    }
    let ambient = Algebra::new(SeriesLabel::new(Series::A, (2 * ell - 1) as u8)?)?;
    let sub = Algebra::new(SeriesLabel::new(Series::C, half_rank)?)?;
    let table = LabelTable::new(&ambient)?;
    let mut e_images = Vec::new();
    let mut f_images = Vec::new();
    let mut h_images = Vec::new();
    for k in 1..=ell {
        let (e, f) = if k < ell {
            let l1 = RootLabel::Diff(k as u8, (k + 1) as u8);
            let l2 = RootLabel::Diff((2 * ell - k) as u8, (2 * ell - k + 1) as u8);
            let mut e = table.e(&ambient, l1)?;
            e.add_scaled(&table.e(&ambient, l2)?, &qi(-1));
            let mut f = table.f(&ambient, l1)?;
            f.add_scaled(&table.f(&ambient, l2)?, &qi(-1));
            (e, f)
        } else {
            (
                table.e(&ambient, RootLabel::Diff(ell as u8, (ell + 1) as u8))?,
                table.f(&ambient, RootLabel::Diff(ell as u8, (ell + 1) as u8))?,
            )
        };
        h_images.push(ambient.bracket(&e, &f));
        e_images.push(e);
        f_images.push(f);
    }
    Ok(EmbeddingSpec {
        name: EmbeddingName::CInA { half_rank },
        sub,
        ambient,
        e_images,
        f_images,
        h_images,
        cartan_h: None,
    })
}

/// Checks the Serre presentation of the subalgebra on the images:
/// `[h_i, e_j] = A_ij e_j`, `[e_i, f_j] = 0` for `i != j`, and
/// `(ad e_i)^{1 - A_ij} e_j = 0` (same with f's).
fn verify_serre(spec: &EmbeddingSpec) -> Result<()> {
    let n = spec.sub.rs.rank();
    let amb = &spec.ambient;
    for i in 0..n {
        for j in 0..n {
            let a_ij = spec.sub.rs.cartan_entry(i, j);
            let he = amb.bracket(&spec.h_images[i], &spec.e_images[j]);
            let mut diff = he.clone();
            diff.add_scaled(&spec.e_images[j], &qi(-a_ij));
            if !diff.is_zero() {
                return Err(Error::VerificationFailed(format!(
                    "[h_{i}, e_{j}] != A[{i}][{j}] e_{j} on embedding images"
                )));
            }
            if i != j {
                if !amb.bracket(&spec.e_images[i], &spec.f_images[j]).is_zero() {
                    return Err(Error::VerificationFailed(format!(
                        "[e_{i}, f_{j}] != 0 on embedding images"
                    )));
                }
                let power = (1 - a_ij) as usize;
                let mut acc = spec.e_images[j].clone();
                for _ in 0..power {
                    acc = amb.bracket(&spec.e_images[i], &acc);
                }
                if !acc.is_zero() {
                    return Err(Error::VerificationFailed(format!(
                        "(ad e_{i})^{power} e_{j} != 0 on embedding images"
                    )));
                }
                let mut acc = spec.f_images[j].clone();
                for _ in 0..power {
                    acc = amb.bracket(&spec.f_images[i], &acc);
                }
                if !acc.is_zero() {
                    return Err(Error::VerificationFailed(format!(
                        "(ad f_{i})^{power} f_{j} != 0 on embedding images"
                    )));
                }
            }
        }
    }
    Ok(())
}

impl EmbeddingSpec {
    /// Dimension of the bracket closure of the generator images.
    pub fn image_span_dim(&self) -> usize {
        let amb = &self.ambient;
        let nroots = 2 * amb.npos();
        let to_row = |x: &LieElt| -> crate::linalg::SparseRow {
            let mut row: crate::linalg::SparseRow =
                x.roots.iter().map(|(k, v)| (*k, v.clone())).collect();
            for (k, c) in x.cartan.0.iter().enumerate() {
                if !c.is_zero() {
                    row.push((nroots + k, c.clone()));
                }
            }
            row
        };
        let mut echelon = crate::linalg::Echelon::new();
        let mut queue: Vec<LieElt> = Vec::new();
        for g in self
            .e_images
            .iter()
            .chain(&self.f_images)
            .chain(&self.h_images)
        {
            if echelon.insert(to_row(g)) {
                queue.push(g.clone());
            }
        }
        let gens: Vec<LieElt> = self
            .e_images
            .iter()
            .chain(&self.f_images)
            .cloned()
            .collect();
        while let Some(v) = queue.pop() {
            for g in &gens {
                let b = amb.bracket(g, &v);
                if !b.is_zero() && echelon.insert(to_row(&b)) {
                    queue.push(b);
                }
            }
        }
        echelon.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d5_in_e6_builds_and_spans_45() {
        let spec = build_embedding(EmbeddingName::D5InE6).unwrap();
        assert_eq!(spec.image_span_dim(), 45);
    }

    #[test]
    fn h_eigenvalues_on_named_vectors() {
        let spec = build_embedding(EmbeddingName::D5InE6).unwrap();
        let h = spec.cartan_h.clone().unwrap();
        let w234 = RootLabel::Half(0b01110).weight(8).unwrap();
        let w54 = RootLabel::Sum(5, 4).weight(8).unwrap();
        assert_eq!(spec.ambient.rs.inner(&h, &w234).unwrap(), qi(1));
        assert_eq!(spec.ambient.rs.inner(&h, &w54).unwrap(), qi(-1));
    }

    #[test]
    fn symplectic_embeddings_build() {
        for half in [2u8, 3] {
            let spec = build_embedding(EmbeddingName::CInA { half_rank: half }).unwrap();
            // closure spans sp(2l): dim = 2l^2 + l
            let l = half as usize;
            assert_eq!(spec.image_span_dim(), 2 * l * l + l);
        }
    }
}
