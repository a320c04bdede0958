use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Which transforms to record while reducing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SnfOptions {
    /// Record `U` and `U⁻¹`.
    pub left: bool,
    /// Record `V` and `V⁻¹`.
    pub right: bool,
}

impl SnfOptions {
    pub const ALL: SnfOptions = SnfOptions { left: true, right: true };
    pub const NONE: SnfOptions = SnfOptions { left: false, right: false };
}

/// `D = U · M · V` with `U`, `V` unimodular and `D` diagonal,
/// `d_1 | d_2 | ... | d_r`, all positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
    pub rank: usize,
}

impl SmithForm {
    /// The nonzero diagonal entries.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

struct Reducer {
    a: IntMatrix,
    u: Option<IntMatrix>,
    u_inv: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let (Some(u), Some(ui)) = (&mut self.u, &mut self.u_inv) {
            u.swap_rows(i, j);
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let (Some(v), Some(vi)) = (&mut self.v, &mut self.v_inv) {
            v.swap_cols(i, j);
            vi.swap_rows(i, j);
        }
    }

    /// `row_i -= q · row_t`, touching only the listed columns of `a`.
    fn subtract_row(&mut self, i: usize, t: usize, q: &BigInt, support: &[usize]) {
        for &j in support {
            let v = self.a.get(t, j) * q;
            *self.a.entry_mut(i, j) -= v;
        }
        if let (Some(u), Some(ui)) = (&mut self.u, &mut self.u_inv) {
            u.add_row_multiple(i, t, &-q);
            ui.add_col_multiple(t, i, q);
        }
    }

    /// `col_j -= q · col_t`.
    fn subtract_col(&mut self, j: usize, t: usize, q: &BigInt) {
        self.a.add_col_multiple(j, t, &-q);
        if let (Some(v), Some(vi)) = (&mut self.v, &mut self.v_inv) {
            v.add_col_multiple(j, t, &-q);
            vi.add_row_multiple(t, j, q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let (Some(u), Some(ui)) = (&mut self.u, &mut self.u_inv) {
            u.negate_row(i);
            ui.negate_col(i);
        }
    }

    /// Position of the smallest nonzero entry in the block `[t.., t..]`,
    /// stopping early at a unit.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                if x.abs().is_one() {
                    return Some((i, j));
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Clears row and column `t` except for the pivot.
    fn clear(&mut self, t: usize) {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        loop {
            let p = self.a.get(t, t).clone();
            let support: Vec<usize> = (t..cols).filter(|&j| !self.a.get(t, j).is_zero()).collect();
            let mut residue = false;
            for i in t + 1..rows {
                if self.a.get(i, t).is_zero() {
                    continue;
                }
                let q = self.a.get(i, t) / &p;
                if !q.is_zero() {
                    self.subtract_row(i, t, &q, &support);
                }
                residue |= !self.a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if self.a.get(t, j).is_zero() {
                    continue;
                }
                let q = self.a.get(t, j) / &p;
                if !q.is_zero() {
                    self.subtract_col(j, t, &q);
                }
                residue |= !self.a.get(t, j).is_zero();
            }
            if !residue {
                return;
            }
            let col_min = (t + 1..rows)
                .filter(|&i| !self.a.get(i, t).is_zero())
                .min_by_key(|&i| self.a.get(i, t).abs());
            let row_min = (t + 1..cols)
                .filter(|&j| !self.a.get(t, j).is_zero())
                .min_by_key(|&j| self.a.get(t, j).abs());
            match (col_min, row_min) {
                (Some(i), Some(j)) if self.a.get(t, j).abs() < self.a.get(i, t).abs() => self.swap_cols(t, j),
                (Some(i), _) => self.swap_rows(t, i),
                (None, Some(j)) => self.swap_cols(t, j),
                (None, None) => unreachable!("a residue is a nonzero entry"),
            }
        }
    }

    /// Replaces `(d_i, d_j)` by `(gcd, lcm)`.
    fn fix_pair(&mut self, i: usize, j: usize) {
        let a = self.a.get(i, i).clone();
        let b = self.a.get(j, j).clone();
        let e = a.extended_gcd(&b);
        let (g, s, t) = (e.gcd, e.x, e.y);
        let (ag, bg) = (&a / &g, &b / &g);
        self.a.set(i, i, g.clone());
        self.a.set(j, j, &a * &bg);
        if let (Some(u), Some(ui)) = (&mut self.u, &mut self.u_inv) {
            u.mix_rows(i, j, &[[s.clone(), t.clone()], [-&bg, ag.clone()]]);
            ui.mix_cols(i, j, &[[ag.clone(), -&t], [bg.clone(), s.clone()]]);
        }
        if let (Some(v), Some(vi)) = (&mut self.v, &mut self.v_inv) {
            v.mix_cols(i, j, &[[BigInt::one(), -(&t * &bg)], [BigInt::one(), &s * &ag]]);
            vi.mix_rows(i, j, &[[&s * &ag, &t * &bg], [-BigInt::one(), BigInt::one()]]);
        }
    }
}

/// Smith normal form. Pivots are chosen by smallest nonzero absolute value;
/// the diagonal is then brought into a divisibility chain by gcd/lcm steps.
pub fn snf_with(m: &IntMatrix, opts: SnfOptions) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = Reducer {
        a: m.clone(),
        u: opts.left.then(|| IntMatrix::identity(rows)),
        u_inv: opts.left.then(|| IntMatrix::identity(rows)),
        v: opts.right.then(|| IntMatrix::identity(cols)),
        v_inv: opts.right.then(|| IntMatrix::identity(cols)),
    };
    let mut rank = 0;
    while rank < rows.min(cols) {
        let Some((i, j)) = r.find_pivot(rank) else { break };
        r.swap_rows(rank, i);
        r.swap_cols(rank, j);
        r.clear(rank);
        if r.a.get(rank, rank).is_negative() {
            r.negate_row(rank);
        }
        rank += 1;
    }
    for i in 0..rank {
        for j in i + 1..rank {
            if !r.a.get(j, j).is_multiple_of(r.a.get(i, i)) {
                r.fix_pair(i, j);
            }
        }
    }
    SmithForm { d: r.a, u: r.u, u_inv: r.u_inv, v: r.v, v_inv: r.v_inv, rank }
}

/// Smith normal form with all four transforms recorded.
pub fn snf(m: &IntMatrix) -> SmithForm {
    snf_with(m, SnfOptions::ALL)
}

/// The nonzero invariant factors `d_1 | d_2 | ...`.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    snf_with(m, SnfOptions::NONE).diagonal()
}

pub fn rank(m: &IntMatrix) -> usize {
    snf_with(m, SnfOptions::NONE).rank
}

/// A basis of `{x : m·x = 0}`, as the columns of the returned matrix.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let s = snf_with(m, SnfOptions { left: false, right: true });
    s.v.expect("right transform recorded").columns(s.rank..m.cols())
}
