use std::collections::BTreeMap;

use super::{ProfiniteError, SeqDiagram};
use crate::boolalg::{hom, llpo_map, Morphism, Presentation, Term};
use crate::cap::Cap;

/// A map of towers given levelwise; every square with the transitions
/// commutes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelwiseMap {
    src: SeqDiagram,
    dst: SeqDiagram,
    maps: Vec<Vec<usize>>,
}

impl LevelwiseMap {
    pub fn new(src: SeqDiagram, dst: SeqDiagram, maps: Vec<Vec<usize>>) -> Result<LevelwiseMap, ProfiniteError> {
        if src.levels() != dst.levels() || maps.len() != src.levels() {
            return Err(ProfiniteError::Invalid("levelwise map needs one map per level".into()));
        }
        for (n, f) in maps.iter().enumerate() {
            if f.len() != src.level_size(n) || f.iter().any(|&y| y >= dst.level_size(n)) {
                return Err(ProfiniteError::Invalid(format!("map at level {n} is not a function")));
            }
        }
        for n in 1..src.levels() {
            let (ts, td) = (src.transition(n - 1), dst.transition(n - 1));
            if (0..src.level_size(n)).any(|x| td[maps[n][x]] != maps[n - 1][ts[x]]) {
                return Err(ProfiniteError::SquareNotCommuting { level: n });
            }
        }
        Ok(LevelwiseMap { src, dst, maps })
    }

    pub fn identity(d: &SeqDiagram) -> LevelwiseMap {
        let maps = (0..d.levels()).map(|n| (0..d.level_size(n)).collect()).collect();
        LevelwiseMap { src: d.clone(), dst: d.clone(), maps }
    }

    pub fn src(&self) -> &SeqDiagram {
        &self.src
    }

    pub fn dst(&self) -> &SeqDiagram {
        &self.dst
    }

    pub fn level(&self, n: usize) -> &[usize] {
        &self.maps[n]
    }

    pub fn is_injective(&self, n: usize) -> bool {
        let mut seen = vec![false; self.dst.level_size(n)];
        self.maps[n].iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self, n: usize) -> bool {
        let mut hit = vec![false; self.dst.level_size(n)];
        for &y in &self.maps[n] {
            hit[y] = true;
        }
        hit.into_iter().all(|b| b)
    }
}

/// Levelwise image factorization `S_n ↠ Im(f_n) ↪ T_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelwiseFactorization {
    pub epi: LevelwiseMap,
    pub middle: SeqDiagram,
    pub mono: LevelwiseMap,
}

pub fn levelwise_factor(f: &LevelwiseMap) -> LevelwiseFactorization {
    let levels = f.src.levels();
    // image points of each level, in the order of the target level
    let images: Vec<Vec<usize>> = (0..levels)
        .map(|n| {
            let mut hit = vec![false; f.dst.level_size(n)];
            for &y in &f.maps[n] {
                hit[y] = true;
            }
            (0..hit.len()).filter(|&y| hit[y]).collect()
        })
        .collect();
    let position: Vec<BTreeMap<usize, usize>> =
        images.iter().map(|im| im.iter().enumerate().map(|(i, &y)| (y, i)).collect()).collect();
    let labels = (0..levels).map(|n| images[n].iter().map(|&y| f.dst.label(n, y).to_string()).collect()).collect();
    let transitions = (1..levels)
        .map(|n| images[n].iter().map(|&y| position[n - 1][&f.dst.transition(n - 1)[y]]).collect())
        .collect();
    let middle = SeqDiagram::new(labels, transitions).expect("images are closed under transitions");
    let epi_maps = (0..levels).map(|n| f.maps[n].iter().map(|y| position[n][y]).collect()).collect();
    let epi = LevelwiseMap::new(f.src.clone(), middle.clone(), epi_maps).expect("corestriction commutes");
    let mono = LevelwiseMap::new(middle.clone(), f.dst.clone(), images).expect("inclusion commutes");
    LevelwiseFactorization { epi, middle, mono }
}

fn spectrum_diagram(levels: &[Morphism], connecting: &[Morphism], src_side: bool) -> SeqDiagram {
    let algebra = |m: &Morphism| if src_side { m.src().clone() } else { m.dst().clone() };
    let labels = levels
        .iter()
        .map(|m| {
            let a = algebra(m);
            (0..a.len()).map(|i| a.point_bitstring(i)).collect()
        })
        .collect();
    let transitions = connecting.iter().map(Morphism::point_map).collect();
    SeqDiagram::new(labels, transitions).expect("point maps go between adjacent spectra")
}

fn inclusion(src: &Presentation, dst: &Presentation, cap: Cap) -> Result<Morphism, ProfiniteError> {
    let images: BTreeMap<String, Term> = src.gens().iter().map(|g| (g.clone(), Term::gen(g.clone()))).collect();
    Ok(hom(src, &images, dst, cap)?)
}

/// The spectrum maps of the LLPO maps at stages `1..=depth`, as a map from
/// the tower of product spectra to the tower of `Sp(binfty(2n))`.
pub fn llpo_tower(depth: usize, cap: Cap) -> Result<LevelwiseMap, ProfiniteError> {
    let maps = (1..=depth).map(|n| llpo_map(n, cap)).collect::<Result<Vec<_>, _>>()?;
    let mut src_connecting = Vec::new();
    let mut dst_connecting = Vec::new();
    for w in maps.windows(2) {
        src_connecting.push(inclusion(w[0].src().source(), w[1].src().source(), cap)?);
        dst_connecting.push(inclusion(w[0].dst().source(), w[1].dst().source(), cap)?);
    }
    let source_tower = spectrum_diagram(&maps, &src_connecting, true);
    let product_tower = spectrum_diagram(&maps, &dst_connecting, false);
    let levels = maps.iter().map(Morphism::point_map).collect();
    LevelwiseMap::new(product_tower, source_tower, levels)
}
