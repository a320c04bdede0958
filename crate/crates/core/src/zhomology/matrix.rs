use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::HomologyError;

/// Dense integer matrix, row-major, with exact entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<IntMatrix, HomologyError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(HomologyError::DimensionMismatch("rows of different lengths".into()));
        }
        let data = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigInt) -> IntMatrix {
        let data = (0..rows * cols).map(|k| f(k / cols.max(1), k % cols.max(1))).collect();
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.data[i * self.cols + j] = v.into();
    }

    pub(crate) fn entry_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Product `self · other`, skipping zero entries.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, HomologyError> {
        if self.cols != other.rows {
            return Err(HomologyError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        let other_nz: Vec<Vec<usize>> =
            (0..other.rows).map(|k| (0..other.cols).filter(|&j| !other.get(k, j).is_zero()).collect()).collect();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &j in &other_nz[k] {
                    *out.entry_mut(i, j) += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Columns `range` as a new matrix.
    pub fn columns(&self, range: std::ops::Range<usize>) -> IntMatrix {
        let start = range.start;
        IntMatrix::from_fn(self.rows, range.len(), |i, j| self.get(i, start + j).clone())
    }

    /// `[self | other]`.
    pub fn hcat(&self, other: &IntMatrix) -> Result<IntMatrix, HomologyError> {
        if self.rows != other.rows {
            return Err(HomologyError::DimensionMismatch("hcat of different heights".into()));
        }
        let c = self.cols;
        Ok(IntMatrix::from_fn(self.rows, c + other.cols, |i, j| {
            if j < c {
                self.get(i, j).clone()
            } else {
                other.get(i, j - c).clone()
            }
        }))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row_dst += q · row_src`.
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let v = s * q;
                self.data[dst * self.cols + j] += v;
            }
        }
    }

    /// `col_dst += q · col_src`.
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let v = s * q;
                self.data[i * self.cols + dst] += v;
            }
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -v;
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -v;
        }
    }

    /// Rows `a, b` replaced by `g · (row_a, row_b)` for a 2×2 matrix `g`.
    pub(crate) fn mix_rows(&mut self, a: usize, b: usize, g: &[[BigInt; 2]; 2]) {
        for j in 0..self.cols {
            let x = self.get(a, j).clone();
            let y = self.get(b, j).clone();
            self.set(a, j, &g[0][0] * &x + &g[0][1] * &y);
            self.set(b, j, &g[1][0] * &x + &g[1][1] * &y);
        }
    }

    /// Columns `a, b` replaced by `(col_a, col_b) · g` for a 2×2 matrix `g`.
    pub(crate) fn mix_cols(&mut self, a: usize, b: usize, g: &[[BigInt; 2]; 2]) {
        for i in 0..self.rows {
            let x = self.get(i, a).clone();
            let y = self.get(i, b).clone();
            self.set(i, a, &x * &g[0][0] + &y * &g[1][0]);
            self.set(i, b, &x * &g[0][1] + &y * &g[1][1]);
        }
    }

    /// The dump format: a line `rows cols`, then one line per row of
    /// space-separated decimal entries.
    pub fn dump(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_dump(text: &str) -> Result<IntMatrix, HomologyError> {
        let bad = |m: &str| HomologyError::Parse(m.to_string());
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("missing header line"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("header must be `rows cols`")))
            .collect::<Result<_, _>>()?;
        let [rows, cols] = dims[..] else { return Err(bad("header must be `rows cols`")) };
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows {
            let line = lines.next().ok_or_else(|| bad("too few rows"))?;
            let row: Vec<BigInt> = line
                .split_whitespace()
                .map(|t| BigInt::from_str(t).map_err(|_| bad(&format!("bad entry `{t}`"))))
                .collect::<Result<_, _>>()?;
            if row.len() != cols {
                return Err(bad("row of the wrong length"));
            }
            data.extend(row);
        }
        if lines.next().is_some() {
            return Err(bad("too many rows"));
        }
        Ok(IntMatrix { rows, cols, data })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}
