//! Small exact linear algebra: Smith normal form over the integers and
//! row reduction over the rationals.
//!
//! Matrices here are tiny (a toric system has at most 16 classes, the
//! polynomial spaces in [`crate::deform`] have dimension at most 9), so the
//! classical algorithms are used without any cleverness.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IMat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Vec<BigInt>>,
}

impl IMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IMat { rows, cols, a: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IMat::zero(n, n);
        for i in 0..n {
            m.a[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        IMat { rows: r, cols: c, a: rows }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IMat::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.a[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = &self.a[i][k] * &other.a[k][j];
                    out.a[i][j] += t;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
    }

    /// row[i] += q * row[j]
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        for c in 0..self.cols {
            let t = q * &self.a[j][c];
            self.a[i][c] += t;
        }
    }

    /// col[i] += q * col[j]
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for r in 0..self.rows {
            let t = q * &self.a[r][j];
            self.a[r][i] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -std::mem::take(&mut self.a[i][c]);
            self.a[i][c] = v;
        }
    }
}

/// Smith normal form: `u * a * v = s` with `u`, `v` unimodular and `s`
/// diagonal, each diagonal entry dividing the next.
pub struct Smith {
    pub u: IMat,
    pub s: IMat,
    pub v: IMat,
}

pub fn smith_normal_form(a: &IMat) -> Smith {
    let mut s = a.clone();
    let mut u = IMat::identity(a.rows);
    let mut v = IMat::identity(a.cols);
    let n = a.rows.min(a.cols);

    for t in 0..n {
        // Find a pivot in the lower-right block.
        let pivot = (t..a.rows)
            .flat_map(|i| (t..a.cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !s.a[i][j].is_zero())
            .min_by_key(|&(i, j)| s.a[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // Clear column t below the pivot, then row t right of it.
            let mut dirty = false;
            for i in t + 1..a.rows {
                if s.a[i][t].is_zero() {
                    continue;
                }
                let q = -(&s.a[i][t] / &s.a[t][t]);
                s.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !s.a[i][t].is_zero() {
                    // Remainder left: swap it up as the smaller pivot.
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..a.cols {
                if s.a[t][j].is_zero() {
                    continue;
                }
                let q = -(&s.a[t][j] / &s.a[t][t]);
                s.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !s.a[t][j].is_zero() {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }

        // Fix divisibility: fold any entry not divisible by the pivot into
        // the pivot position and restart the clearing for this t.  The pivot
        // strictly shrinks each round, so this terminates.
        loop {
            let bad = (t + 1..a.rows)
                .flat_map(|i| (t + 1..a.cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&s.a[i][j] % &s.a[t][t]).is_zero());
            match bad {
                None => break,
                Some((i, _)) => {
                    let one = BigInt::one();
                    s.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                    // Re-clear row t.
                    loop {
                        let mut dirty = false;
                        for j in t + 1..a.cols {
                            if s.a[t][j].is_zero() {
                                continue;
                            }
                            let q = -(&s.a[t][j] / &s.a[t][t]);
                            s.add_col(j, t, &q);
                            v.add_col(j, t, &q);
                            if !s.a[t][j].is_zero() {
                                s.swap_cols(t, j);
                                v.swap_cols(t, j);
                                dirty = true;
                            }
                        }
                        for i2 in t + 1..a.rows {
                            if s.a[i2][t].is_zero() {
                                continue;
                            }
                            let q = -(&s.a[i2][t] / &s.a[t][t]);
                            s.add_row(i2, t, &q);
                            u.add_row(i2, t, &q);
                            if !s.a[i2][t].is_zero() {
                                s.swap_rows(t, i2);
                                u.swap_rows(t, i2);
                                dirty = true;
                            }
                        }
                        if !dirty {
                            break;
                        }
                    }
                }
            }
        }

        if s.a[t][t].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    Smith { u, s, v }
}

/// A particular integer solution `x` of `a x = b`, if one exists.
pub fn solve(a: &IMat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows, b.len());
    let Smith { u, s, v } = smith_normal_form(a);
    // a x = b  <=>  s (v^-1 x) = u b
    let ub: Vec<BigInt> = (0..a.rows)
        .map(|i| (0..a.rows).map(|j| &u.a[i][j] * &b[j]).sum())
        .collect();
    let mut y = vec![BigInt::zero(); a.cols];
    for i in 0..a.rows {
        let d = if i < a.cols { s.a[i][i].clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !ub[i].is_zero() {
                return None;
            }
        } else {
            let (q, r) = ub[i].div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    let x: Vec<BigInt> = (0..a.cols)
        .map(|i| (0..a.cols).map(|j| &v.a[i][j] * &y[j]).sum())
        .collect();
    Some(x)
}

/// Dense rational matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Vec<BigRational>>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, a: vec![vec![BigRational::zero(); cols]; rows] }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        QMat { rows: r, cols: c, a: rows }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.a[i][c].is_zero()) else { continue };
            self.a.swap(r, p);
            let inv = self.a[r][c].clone();
            for j in c..self.cols {
                let v = &self.a[r][j] / &inv;
                self.a[r][j] = v;
            }
            for i in 0..self.rows {
                if i != r && !self.a[i][c].is_zero() {
                    let f = self.a[i][c].clone();
                    for j in c..self.cols {
                        let t = &f * &self.a[r][j];
                        let v = &self.a[i][j] - t;
                        self.a[i][j] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{x : a x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut x = vec![BigRational::zero(); self.cols];
            x[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -m.a[r][f].clone();
            }
            basis.push(x);
        }
        basis
    }
}
