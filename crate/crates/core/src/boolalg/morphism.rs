//! Morphisms of finitely presented algebras and their duals on spectra.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::algebra::mask_bit;
use super::term::Compiled;
use super::{spectrum, BoolAlgError, ElementVec, FinBoolAlg, Presentation, Term};
use crate::cap::Cap;

/// A well-defined algebra map, given by the images of the source generators.
#[derive(Debug, Clone)]
pub struct Morphism {
    src: FinBoolAlg,
    dst: FinBoolAlg,
    images: Vec<Term>,
    compiled: Vec<Compiled>,
}

/// Builds the morphism `src → dst` sending each source generator to the
/// given term over `dst`, after checking that every source relation is
/// sent to zero.
pub fn hom(
    src: &Presentation,
    images: &BTreeMap<String, Term>,
    dst: &Presentation,
    cap: Cap,
) -> Result<Morphism, BoolAlgError> {
    if let Some(extra) = images.keys().find(|g| src.gen_index(g).is_none()) {
        return Err(BoolAlgError::UnknownGenerator(extra.clone()));
    }
    let ordered = src
        .gens()
        .iter()
        .map(|g| images.get(g).cloned().ok_or_else(|| BoolAlgError::MissingImage(g.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    for t in &ordered {
        dst.check_term(t)?;
    }
    let dst_alg = spectrum(dst, cap)?;
    for (i, r) in src.rels().iter().enumerate() {
        let image = substitute(src, &ordered, r);
        if !dst_alg.evaluate(&image)?.is_zero() {
            return Err(BoolAlgError::RelationNotKilled(i));
        }
    }
    let src_alg = spectrum(src, cap)?;
    let compiled = ordered
        .iter()
        .map(|t| dst_alg.compile(t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Morphism { src: src_alg, dst: dst_alg, images: ordered, compiled })
}

/// Convenience wrapper taking `(generator, image)` pairs.
pub fn hom_from_pairs<S: Into<String>>(
    src: &Presentation,
    images: impl IntoIterator<Item = (S, Term)>,
    dst: &Presentation,
    cap: Cap,
) -> Result<Morphism, BoolAlgError> {
    let map = images.into_iter().map(|(g, t)| (g.into(), t)).collect();
    hom(src, &map, dst, cap)
}

/// The identity on `p`.
pub fn identity(p: &Presentation, cap: Cap) -> Result<Morphism, BoolAlgError> {
    hom_from_pairs(p, p.gens().iter().map(|g| (g.clone(), Term::gen(g))), p, cap)
}

fn substitute(src: &Presentation, images: &[Term], t: &Term) -> Term {
    let index = src.index_map();
    t.substitute(&|g: &str| index.get(g).map(|&i| images[i].clone()))
}

impl Morphism {
    pub fn src(&self) -> &FinBoolAlg {
        &self.src
    }

    pub fn dst(&self) -> &FinBoolAlg {
        &self.dst
    }

    /// Images of the source generators, in source generator order.
    pub fn images(&self) -> &[Term] {
        &self.images
    }

    /// The image of a source term, as a term over the target.
    pub fn map_term(&self, t: &Term) -> Term {
        substitute(self.src.source(), &self.images, t)
    }

    /// Applies the morphism to an element by realizing it as a term over the
    /// source, substituting the generator images and evaluating in the
    /// target.
    pub fn apply(&self, x: &ElementVec) -> Result<ElementVec, BoolAlgError> {
        let t = self.src.realize(x)?;
        self.dst.evaluate(&self.map_term(&t))
    }

    /// The dual map `Sp(dst) → Sp(src)`, `y ↦ y ∘ m`, as source point
    /// indices for each target point.
    pub fn point_map(&self) -> Vec<usize> {
        let n_src = self.src.gen_count();
        let n_dst = self.dst.gen_count();
        (0..self.dst.len())
            .map(|j| {
                let y = self.dst.point_mask(j);
                let x = self
                    .compiled
                    .iter()
                    .fold(0u64, |acc, c| (acc << 1) | c.eval(|g| mask_bit(y, n_dst, g)) as u64);
                debug_assert!(n_src == 64 || x >> n_src == 0);
                self.src
                    .find_mask(x)
                    .expect("well-defined morphism sends points to points")
            })
            .collect()
    }

    /// `other ∘ self`, requiring `self.dst` and `other.src` to share a
    /// presentation.
    pub fn then(&self, other: &Morphism, cap: Cap) -> Result<Morphism, BoolAlgError> {
        let images = self
            .src
            .source()
            .gens()
            .iter()
            .zip(&self.images)
            .map(|(g, t)| (g.clone(), other.map_term(t)))
            .collect();
        hom(self.src.source(), &images, other.dst.source(), cap)
    }
}

/// Kernel, injectivity and dual point map of a morphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismReport {
    /// Source points whose atoms are sent to zero.
    pub killed_atoms: Vec<usize>,
    /// Generator of the (principal) kernel: the join of the killed atoms.
    pub kernel_top: ElementVec,
    /// `log2` of the kernel's size.
    pub kernel_log2: usize,
    pub injective: bool,
    /// Dual map `Sp(dst) → Sp(src)`.
    pub point_map: Vec<usize>,
    pub point_map_surjective: bool,
    /// `injective ⟺ point_map_surjective`.
    pub axiom2_consistent: bool,
}

impl MorphismReport {
    /// Every kernel element, as subsets of the killed atoms. Meant for small
    /// kernels; the count is `2^kernel_log2`.
    pub fn kernel_elements(&self) -> Vec<ElementVec> {
        let len = self.kernel_top.len();
        (0..1u64 << self.killed_atoms.len())
            .map(|k| {
                let mut v = ElementVec::zeros(len);
                for (b, &i) in self.killed_atoms.iter().enumerate() {
                    v.bits[i] = (k >> b) & 1 == 1;
                }
                v
            })
            .collect()
    }
}

/// Computes the kernel on the algebra side (images of atoms) and the
/// surjectivity of the dual point map on the spectrum side.
pub fn analyze_morphism(m: &Morphism) -> Result<MorphismReport, BoolAlgError> {
    let mut killed_atoms = Vec::new();
    for i in 0..m.src.len() {
        let image = m.dst.evaluate(&m.map_term(&m.src.minterm(i)))?;
        if image.is_zero() {
            killed_atoms.push(i);
        }
    }
    let mut kernel_top = m.src.zero();
    for &i in &killed_atoms {
        kernel_top.bits[i] = true;
    }
    let injective = killed_atoms.is_empty();
    let point_map = m.point_map();
    let mut hit = vec![false; m.src.len()];
    for &i in &point_map {
        hit[i] = true;
    }
    let point_map_surjective = hit.iter().all(|h| *h);
    Ok(MorphismReport {
        kernel_log2: killed_atoms.len(),
        killed_atoms,
        kernel_top,
        injective,
        point_map,
        point_map_surjective,
        axiom2_consistent: injective == point_map_surjective,
    })
}

/// `m = mono ∘ epi` through the quotient of the source by the kernel.
#[derive(Debug, Clone)]
pub struct EpiMonoFactorization {
    pub epi: Morphism,
    pub middle: FinBoolAlg,
    pub mono: Morphism,
}

pub fn epi_mono_factor(m: &Morphism, cap: Cap) -> Result<EpiMonoFactorization, BoolAlgError> {
    let report = analyze_morphism(m)?;
    let src = m.src.source();
    let kernel_term = m.src.realize(&report.kernel_top)?;
    let quotient = if report.injective {
        src.clone()
    } else {
        src.with_relations([kernel_term])?
    };
    let epi = hom_from_pairs(src, src.gens().iter().map(|g| (g.clone(), Term::gen(g))), &quotient, cap)?;
    let mono = hom_from_pairs(
        &quotient,
        src.gens().iter().cloned().zip(m.images.iter().cloned()),
        m.dst.source(),
        cap,
    )?;
    Ok(EpiMonoFactorization { middle: epi.dst.clone(), epi, mono })
}
