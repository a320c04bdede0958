use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{ProfiniteError, SeqDiagram};
use crate::boolalg::{generator_index, hom, spectrum, BoolAlgError, FinBoolAlg, Morphism, Presentation, Term};
use crate::cap::Cap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSupply {
    Finite(Vec<String>),
    /// `g0, g1, g2, ...`
    Countable,
}

/// A relation family evaluable at every index. Indices past the end of a
/// finite family give `None`.
#[derive(Clone)]
pub enum RelationFamily {
    None,
    /// `g_i & g_j` for `i < j`, enumerated as (0,1), (0,2), (1,2), (0,3), ...
    PairwiseMeetZero,
    Custom(Arc<dyn Fn(usize) -> Option<Term> + Send + Sync>),
}

impl fmt::Debug for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationFamily::None => f.write_str("None"),
            RelationFamily::PairwiseMeetZero => f.write_str("PairwiseMeetZero"),
            RelationFamily::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// A presentation with possibly countably many generators and relations:
/// the relation sequence is the explicit relations followed by the family.
#[derive(Debug, Clone)]
pub struct CountablePresentation {
    pub gens: GeneratorSupply,
    pub explicit: Vec<Term>,
    pub family: RelationFamily,
}

/// The pair `(i, j)`, `i < j`, at position `k` of the enumeration ordered
/// by `j`, then `i`.
fn pair_at(k: usize) -> (usize, usize) {
    let mut j = 1;
    while j * (j + 1) / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}

impl CountablePresentation {
    pub fn cantor() -> CountablePresentation {
        CountablePresentation { gens: GeneratorSupply::Countable, explicit: vec![], family: RelationFamily::None }
    }

    pub fn binfty() -> CountablePresentation {
        CountablePresentation {
            gens: GeneratorSupply::Countable,
            explicit: vec![],
            family: RelationFamily::PairwiseMeetZero,
        }
    }

    /// The `i`-th generator, if there is one.
    pub fn generator(&self, i: usize) -> Option<String> {
        match &self.gens {
            GeneratorSupply::Finite(g) => g.get(i).cloned(),
            GeneratorSupply::Countable => Some(format!("g{i}")),
        }
    }

    /// The `i`-th relation, if there is one.
    pub fn relation(&self, i: usize) -> Option<Term> {
        if let Some(r) = self.explicit.get(i) {
            return Some(r.clone());
        }
        let k = i - self.explicit.len();
        match &self.family {
            RelationFamily::None => None,
            RelationFamily::PairwiseMeetZero => {
                let (a, b) = pair_at(k);
                Some(Term::and(Term::gen(self.generator(a)?), Term::gen(self.generator(b)?)))
            }
            RelationFamily::Custom(f) => f(k),
        }
    }

    /// Position of a generator in the supply order.
    fn position(&self, name: &str) -> Result<usize, BoolAlgError> {
        let pos = match &self.gens {
            GeneratorSupply::Finite(g) => g.iter().position(|x| x == name),
            GeneratorSupply::Countable => generator_index(name),
        };
        pos.ok_or_else(|| BoolAlgError::UnknownGenerator(name.to_string()))
    }

    /// Level `n`: generators `g_i` for `i ≤ n` together with those occurring
    /// in `r_0..r_n`, and the relations `r_0..r_n`.
    pub fn truncation(&self, n: usize) -> Result<Presentation, BoolAlgError> {
        let rels: Vec<Term> = (0..=n).map_while(|i| self.relation(i)).collect();
        let mut gens: BTreeMap<usize, String> = BTreeMap::new();
        for i in 0..=n {
            if let Some(g) = self.generator(i) {
                gens.insert(i, g);
            }
        }
        for r in &rels {
            for g in r.generators() {
                gens.insert(self.position(g)?, g.to_string());
            }
        }
        Presentation::new(gens.into_values().collect(), rels)
    }
}

/// Finite algebras `B_0 → B_1 → ...` with their connecting maps.
#[derive(Debug, Clone)]
pub struct AlgebraTower {
    pub levels: Vec<FinBoolAlg>,
    /// `connecting[n]` maps level `n` into level `n + 1`.
    pub connecting: Vec<Morphism>,
}

/// The first `depth` truncations of `p`, connected by generator inclusions.
pub fn truncation_tower(p: &CountablePresentation, depth: usize, cap: Cap) -> Result<AlgebraTower, ProfiniteError> {
    let mut presentations = Vec::with_capacity(depth);
    for n in 0..depth {
        presentations.push(p.truncation(n)?);
    }
    let levels = presentations.iter().map(|q| spectrum(q, cap)).collect::<Result<Vec<_>, _>>()?;
    let mut connecting = Vec::with_capacity(depth.saturating_sub(1));
    for w in presentations.windows(2) {
        let images: BTreeMap<String, Term> = w[0].gens().iter().map(|g| (g.clone(), Term::gen(g.clone()))).collect();
        connecting.push(hom(&w[0], &images, &w[1], cap)?);
    }
    Ok(AlgebraTower { levels, connecting })
}

/// Spectra of the levels, with transitions given by precomposition along
/// the connecting maps.
pub fn spectrum_tower(t: &AlgebraTower) -> SeqDiagram {
    let labels = t.levels.iter().map(|a| (0..a.len()).map(|i| a.point_bitstring(i)).collect()).collect();
    let transitions = t.connecting.iter().map(Morphism::point_map).collect();
    SeqDiagram::new(labels, transitions).expect("point maps go between adjacent spectra")
}

/// Per-level subsets `{x : x(name) = value}`; levels not yet mentioning the
/// generator impose no constraint.
pub fn generator_constraint(t: &AlgebraTower, name: &str, value: bool) -> Vec<Vec<bool>> {
    t.levels
        .iter()
        .map(|a| match a.source().gen_index(name) {
            Some(g) => (0..a.len()).map(|i| a.value(i, g) == value).collect(),
            None => vec![true; a.len()],
        })
        .collect()
}
