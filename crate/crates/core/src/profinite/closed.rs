use super::{ProfiniteError, SeqDiagram};

/// A closed subset given levelwise: `selected[n]` marks points of level `n`,
/// and every transition maps selected points to selected points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedTower {
    base: SeqDiagram,
    selected: Vec<Vec<bool>>,
}

fn check_shape(d: &SeqDiagram, subsets: &[Vec<bool>]) -> Result<(), ProfiniteError> {
    if subsets.len() != d.levels() {
        return Err(ProfiniteError::Invalid(format!(
            "{} subsets for {} levels",
            subsets.len(),
            d.levels()
        )));
    }
    for (n, s) in subsets.iter().enumerate() {
        if s.len() != d.level_size(n) {
            return Err(ProfiniteError::Invalid(format!("subset at level {n} has the wrong length")));
        }
    }
    Ok(())
}

impl ClosedTower {
    pub fn new(base: SeqDiagram, selected: Vec<Vec<bool>>) -> Result<ClosedTower, ProfiniteError> {
        check_shape(&base, &selected)?;
        for n in 1..base.levels() {
            let t = base.transition(n - 1);
            if (0..base.level_size(n)).any(|x| selected[n][x] && !selected[n - 1][t[x]]) {
                return Err(ProfiniteError::NotSaturated { level: n });
            }
        }
        Ok(ClosedTower { base, selected })
    }

    pub fn base(&self) -> &SeqDiagram {
        &self.base
    }

    pub fn selected(&self, n: usize) -> &[bool] {
        &self.selected[n]
    }

    pub fn selected_count(&self, n: usize) -> usize {
        self.selected[n].iter().filter(|b| **b).count()
    }

    /// The underlying diagram restricted to the selected points.
    pub fn as_diagram(&self) -> SeqDiagram {
        let index: Vec<Vec<Option<usize>>> = self
            .selected
            .iter()
            .map(|s| {
                let mut next = 0;
                s.iter()
                    .map(|&b| {
                        b.then(|| {
                            next += 1;
                            next - 1
                        })
                    })
                    .collect()
            })
            .collect();
        let labels = (0..self.base.levels())
            .map(|n| {
                (0..self.base.level_size(n))
                    .filter(|&x| self.selected[n][x])
                    .map(|x| self.base.label(n, x).to_string())
                    .collect()
            })
            .collect();
        let transitions = (1..self.base.levels())
            .map(|n| {
                let t = self.base.transition(n - 1);
                (0..self.base.level_size(n))
                    .filter(|&x| self.selected[n][x])
                    .map(|x| index[n - 1][t[x]].expect("closed towers are saturated"))
                    .collect()
            })
            .collect();
        SeqDiagram::new(labels, transitions).expect("restriction of a diagram")
    }
}

/// Intersects per-level subsets with the preimage of the previous level,
/// from the bottom up.
fn forward_pass(d: &SeqDiagram, subsets: &mut [Vec<bool>]) {
    for n in 1..d.levels() {
        let t = d.transition(n - 1);
        let (lower, upper) = subsets.split_at_mut(n);
        for (x, s) in upper[0].iter_mut().enumerate() {
            *s &= lower[n - 1][t[x]];
        }
    }
}

/// Saturates per-level decidable subsets into a closed tower within the
/// given depth. A forward pass intersects each level with the preimage of
/// the level below; a backward pass then keeps only points in the image of
/// the level above. The result is the set of points extending to a chain
/// of the top level, which makes the tower saturated in both directions.
pub fn closed_from_decidables(d: &SeqDiagram, subsets: &[Vec<bool>]) -> Result<ClosedTower, ProfiniteError> {
    check_shape(d, subsets)?;
    let mut s = subsets.to_vec();
    forward_pass(d, &mut s);
    for n in (1..d.levels()).rev() {
        let t = d.transition(n - 1);
        let mut image = vec![false; d.level_size(n - 1)];
        for x in (0..d.level_size(n)).filter(|&x| s[n][x]) {
            image[t[x]] = true;
        }
        for (a, b) in s[n - 1].iter_mut().zip(image) {
            *a &= b;
        }
    }
    ClosedTower::new(d.clone(), s)
}

/// Least level whose selected set is empty.
pub fn emptiness_witness(c: &ClosedTower) -> Option<usize> {
    (0..c.base.levels()).find(|&n| c.selected_count(n) == 0)
}

/// Least level `k` at which no chain `x_0, ..., x_k` satisfies every
/// constraint. Each constraint is a per-level family of decidable subsets.
pub fn constraint_witness(d: &SeqDiagram, constraints: &[Vec<Vec<bool>>]) -> Result<Option<usize>, ProfiniteError> {
    let mut s: Vec<Vec<bool>> = (0..d.levels()).map(|n| vec![true; d.level_size(n)]).collect();
    for c in constraints {
        check_shape(d, c)?;
        for (level, sub) in s.iter_mut().zip(c) {
            for (a, b) in level.iter_mut().zip(sub) {
                *a &= b;
            }
        }
    }
    forward_pass(d, &mut s);
    Ok(s.iter().position(|level| !level.iter().any(|b| *b)))
}

/// All compatible chains `(x_0, ..., x_depth)`, one per point of level
/// `depth`, in the order of that level.
pub fn points_at_depth(d: &SeqDiagram, depth: usize) -> Result<Vec<Vec<usize>>, ProfiniteError> {
    d.check_depth(depth)?;
    Ok((0..d.level_size(depth))
        .map(|top| {
            let mut chain = vec![top];
            let mut x = top;
            for n in (0..depth).rev() {
                x = d.transition(n)[x];
                chain.push(x);
            }
            chain.reverse();
            chain
        })
        .collect())
}
