use std::collections::{BTreeSet, HashMap};

use super::{BoolAlgError, Term};

/// Generators plus relations; each relation `r` asserts `r = 0` in the
/// quotient of the free algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    gens: Vec<String>,
    rels: Vec<Term>,
}

impl Presentation {
    pub fn new(gens: Vec<String>, rels: Vec<Term>) -> Result<Presentation, BoolAlgError> {
        let mut seen = BTreeSet::new();
        for g in &gens {
            if !seen.insert(g.as_str()) {
                return Err(BoolAlgError::DuplicateGenerator(g.clone()));
            }
        }
        for r in &rels {
            if let Some(unknown) = r.generators().into_iter().find(|g| !seen.contains(g)) {
                return Err(BoolAlgError::UnknownGenerator(unknown.to_string()));
            }
        }
        Ok(Presentation { gens, rels })
    }

    /// The free algebra on the given names.
    pub fn free<S: Into<String>>(gens: impl IntoIterator<Item = S>) -> Result<Presentation, BoolAlgError> {
        Presentation::new(gens.into_iter().map(Into::into).collect(), Vec::new())
    }

    /// The algebra `2` (no generators, no relations).
    pub fn two() -> Presentation {
        Presentation { gens: Vec::new(), rels: Vec::new() }
    }

    /// The trivial algebra `2/(1)`.
    pub fn trivial() -> Presentation {
        Presentation { gens: Vec::new(), rels: vec![Term::One] }
    }

    /// Generator names `g0, g1, ..., g{n-1}`.
    pub fn indexed_names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("g{i}")).collect()
    }

    /// The free algebra on `g0..g{n-1}`.
    pub fn cantor(n: usize) -> Presentation {
        Presentation { gens: Presentation::indexed_names(n), rels: Vec::new() }
    }

    /// The stage-`n` truncation of B∞: generators `g0..g{n-1}` with
    /// `g_i & g_j = 0` for every `i < j`.
    pub fn binfty(n: usize) -> Presentation {
        let gens = Presentation::indexed_names(n);
        let mut rels = Vec::new();
        for j in 0..n {
            for i in 0..j {
                rels.push(Term::and(Term::gen(&gens[i]), Term::gen(&gens[j])));
            }
        }
        Presentation { gens, rels }
    }

    pub fn gens(&self) -> &[String] {
        &self.gens
    }

    pub fn rels(&self) -> &[Term] {
        &self.rels
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    pub(crate) fn index_map(&self) -> HashMap<&str, usize> {
        self.gens.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect()
    }

    /// Checks that a term only mentions generators of this presentation.
    pub fn check_term(&self, t: &Term) -> Result<(), BoolAlgError> {
        match t.generators().into_iter().find(|g| self.gen_index(g).is_none()) {
            Some(g) => Err(BoolAlgError::UnknownGenerator(g.to_string())),
            None => Ok(()),
        }
    }

    /// Same generators, additional relations appended.
    pub fn with_relations<I: IntoIterator<Item = Term>>(&self, extra: I) -> Result<Presentation, BoolAlgError> {
        let mut rels = self.rels.clone();
        rels.extend(extra);
        Presentation::new(self.gens.clone(), rels)
    }

    /// A presentation of the product algebra `self × other`.
    ///
    /// The generator [`PRODUCT_SIDE`] is the idempotent `(1, 0)`; the
    /// generators of `self` and `other` are renamed with the prefixes
    /// [`LEFT_PREFIX`] and [`RIGHT_PREFIX`] and forced below `side` and
    /// `~side` respectively, so the spectrum is the disjoint union of the two
    /// spectra.
    pub fn product(&self, other: &Presentation) -> Presentation {
        let left = |t: &Term| t.substitute(&|g: &str| Some(Term::gen(format!("{LEFT_PREFIX}{g}"))));
        let right = |t: &Term| t.substitute(&|g: &str| Some(Term::gen(format!("{RIGHT_PREFIX}{g}"))));
        let side = Term::gen(PRODUCT_SIDE);
        let not_side = Term::not(side.clone());

        let mut gens = vec![PRODUCT_SIDE.to_string()];
        gens.extend(self.gens.iter().map(|g| format!("{LEFT_PREFIX}{g}")));
        gens.extend(other.gens.iter().map(|g| format!("{RIGHT_PREFIX}{g}")));

        let mut rels = Vec::new();
        for g in &self.gens {
            rels.push(Term::and(left(&Term::gen(g)), not_side.clone()));
        }
        for g in &other.gens {
            rels.push(Term::and(right(&Term::gen(g)), side.clone()));
        }
        for r in &self.rels {
            rels.push(Term::and(left(r), side.clone()));
        }
        for r in &other.rels {
            rels.push(Term::and(right(r), not_side.clone()));
        }
        Presentation { gens, rels }
    }
}

/// Selector generator of [`Presentation::product`].
pub const PRODUCT_SIDE: &str = "side";
pub const LEFT_PREFIX: &str = "l_";
pub const RIGHT_PREFIX: &str = "r_";

/// The element `(a, b)` of a product presentation, for `a` over the left
/// factor and `b` over the right factor.
pub fn product_pair(a: &Term, b: &Term) -> Term {
    let side = Term::gen(PRODUCT_SIDE);
    let a = a.substitute(&|g: &str| Some(Term::gen(format!("{LEFT_PREFIX}{g}"))));
    let b = b.substitute(&|g: &str| Some(Term::gen(format!("{RIGHT_PREFIX}{g}"))));
    Term::or(Term::and(a, side.clone()), Term::and(b, Term::not(side)))
}
