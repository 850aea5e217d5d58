//! Exact linear algebra: dense rational matrices with reduced row echelon
//! kernels and quotient-space presentations, plus integer matrices with
//! Bareiss determinants and Smith normal form.
//!
//! Pivot selection is deterministic throughout so that every basis produced
//! here (kernel bases, canonical quotient coordinates) is reproducible.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(n.into())
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let nr = rows.len();
        let nc = if nr == 0 { 0 } else { rows[0].len() };
        Self::from_fn(nr, nc, |r, c| rat(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> QMat {
        QMat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, rhs: &QMat) -> QMat {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch in mul");
        let mut out = QMat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c).clone();
                        out.set(r, c, cur + a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &QMat) -> QMat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        QMat::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + rhs.get(r, c))
    }

    pub fn sub(&self, rhs: &QMat) -> QMat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        QMat::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - rhs.get(r, c))
    }

    pub fn scale(&self, s: &Rat) -> QMat {
        QMat::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * s)
    }

    pub fn flatten(&self) -> Vec<Rat> {
        self.data.clone()
    }

    /// Stack the given row vectors into a matrix. All rows must share a length.
    pub fn from_rows_vec(rows: Vec<Vec<Rat>>, cols: usize) -> Self {
        let nr = rows.len();
        let mut m = Self::zeros(nr, cols);
        for (r, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (c, v) in row.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Rat> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            if lead >= self.rows {
                break;
            }
            let mut pivot_row = None;
            for r in lead..self.rows {
                if !self.get(r, col).is_zero() {
                    pivot_row = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot_row else { continue };
            if pr != lead {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, lead * self.cols + c);
                }
            }
            let inv = {
                let p = self.get(lead, col).clone();
                Rat::one() / p
            };
            for c in col..self.cols {
                let v = self.get(lead, c) * &inv;
                self.set(lead, c, v);
            }
            for r in 0..self.rows {
                if r != lead && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &factor * self.get(lead, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right kernel, one column per free variable, in ascending
    /// free-column order. The free coordinate itself is set to 1.
    pub fn kernel_basis(&self) -> QMat {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set[*c]).collect();
        let mut basis = QMat::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, Rat::one());
            for (prow, &pc) in pivots.iter().enumerate() {
                let v = -m.get(prow, fc).clone();
                if !v.is_zero() {
                    basis.set(pc, k, v);
                }
            }
        }
        basis
    }

    /// Solve `self * x = b` for each column of `b`. Returns `None` when the
    /// system is inconsistent; free variables are set to zero.
    pub fn solve(&self, b: &QMat) -> Option<QMat> {
        assert_eq!(self.rows, b.rows, "rhs row mismatch");
        let mut aug = QMat::zeros(self.rows, self.cols + b.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            for c in 0..b.cols {
                aug.set(r, self.cols + c, b.get(r, c).clone());
            }
        }
        let pivots = aug.rref_in_place();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = QMat::zeros(self.cols, b.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(pc, c, aug.get(prow, self.cols + c).clone());
            }
        }
        Some(x)
    }
}

/// A quotient of the coordinate space `Q^ambient` by a spanned subspace,
/// presented by the RREF of the subspace. Canonical coordinates of the
/// quotient are the non-pivot positions after eliminating pivots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientSpace {
    ambient: usize,
    rref: QMat,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl QuotientSpace {
    /// Build from vectors spanning the subspace (given as rows).
    pub fn from_spanning_rows(rows: Vec<Vec<Rat>>, ambient: usize) -> Self {
        let mut m = QMat::from_rows_vec(rows, ambient);
        let pivots = m.rref_in_place();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; ambient];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free = (0..ambient).filter(|c| !pivot_set[*c]).collect();
        QuotientSpace { ambient, rref: m, pivots, free }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn subspace_dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.pivots.len()
    }

    /// Canonical quotient coordinates of an ambient vector.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (prow, &pc) in self.pivots.iter().enumerate() {
            let factor = w[pc].clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..self.ambient {
                let adj = &factor * self.rref.get(prow, c);
                if !adj.is_zero() {
                    w[c] = &w[c] - adj;
                }
            }
        }
        self.free.iter().map(|&c| w[c].clone()).collect()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    /// Ambient unit vector lifting the `k`-th canonical quotient coordinate.
    pub fn lift(&self, k: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.ambient];
        v[self.free[k]] = Rat::one();
        v
    }
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let nr = rows.len();
        let nc = if nr == 0 { 0 } else { rows[0].len() };
        let mut m = Self::zeros(nr, nc);
        for r in 0..nr {
            assert_eq!(rows[r].len(), nc);
            for c in 0..nc {
                m.set(r, c, rows[r][c]);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, rhs: &IMat) -> IMat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = IMat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k) as i128;
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = out.get(r, c) as i128 + a * rhs.get(k, c) as i128;
                    out.set(r, c, i64::try_from(v).expect("integer overflow in mul"));
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &IMat) -> IMat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        let mut out = self.clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c) - rhs.get(r, c));
            }
        }
        out
    }

    pub fn neg(&self) -> IMat {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = -*v;
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let s: i128 = (0..self.cols).map(|c| self.get(r, c) as i128 * v[c] as i128).sum();
                i64::try_from(s).expect("integer overflow in apply")
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination over arbitrary
    /// precision integers; intermediate minors can exceed machine words.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<BigInt> = self.data.iter().map(|&v| BigInt::from(v)).collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let swap = (k + 1..n).find(|&r| !m[r * n + k].is_zero());
                match swap {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(k * n + c, r * n + c);
                        }
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for r in k + 1..n {
                for c in k + 1..n {
                    let num =
                        &m[r * n + c] * &m[k * n + k] - &m[r * n + k] * &m[k * n + c];
                    m[r * n + c] = num / &prev;
                }
                m[r * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        let det = m.swap_remove(n * n - 1);
        if negate {
            -det
        } else {
            det
        }
    }

    /// Invariant factors of the Smith normal form: nonnegative diagonal
    /// entries with successive divisibility, zeros trailing.
    pub fn smith_invariant_factors(&self) -> Vec<i64> {
        let nr = self.rows;
        let nc = self.cols;
        let mut m: Vec<Vec<i128>> =
            (0..nr).map(|r| (0..nc).map(|c| self.get(r, c) as i128).collect()).collect();
        let steps = nr.min(nc);
        let mut diag: Vec<i128> = Vec::new();
        for k in 0..steps {
            // Locate the smallest-magnitude nonzero entry in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for r in k..nr {
                for c in k..nc {
                    if m[r][c] != 0
                        && best.is_none_or(|(br, bc)| m[r][c].abs() < m[br][bc].abs())
                    {
                        best = Some((r, c));
                    }
                }
            }
            let Some((br, bc)) = best else { break };
            m.swap(k, br);
            for row in m.iter_mut() {
                row.swap(k, bc);
            }
            loop {
                let mut clean = true;
                for r in k + 1..nr {
                    let q = m[r][k].div_euclid(m[k][k]);
                    if q != 0 {
                        for c in k..nc {
                            m[r][c] -= q * m[k][c];
                        }
                    }
                    if m[r][k] != 0 {
                        // Remainder became the smaller entry; promote it.
                        m.swap(k, r);
                        clean = false;
                    }
                }
                for c in k + 1..nc {
                    let q = m[k][c].div_euclid(m[k][k]);
                    if q != 0 {
                        for r in k..nr {
                            m[r][c] -= q * m[r][k];
                        }
                    }
                    if m[k][c] != 0 {
                        for row in m.iter_mut() {
                            row.swap(k, c);
                        }
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            diag.push(m[k][k].abs());
        }
        // Enforce the divisibility chain with pairwise gcd/lcm fixes.
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..diag.len() {
                for j in i + 1..diag.len() {
                    if diag[j] % diag[i] != 0 {
                        let g = gcd_i128(diag[i], diag[j]);
                        let l = diag[i] / g * diag[j];
                        diag[i] = g;
                        diag[j] = l;
                        changed = true;
                    }
                }
            }
        }
        diag.sort();
        let mut out: Vec<i64> =
            diag.iter().map(|&v| i64::try_from(v).expect("invariant factor overflow")).collect();
        let zeros = steps - out.len();
        out.extend(std::iter::repeat_n(0, zeros));
        out
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
