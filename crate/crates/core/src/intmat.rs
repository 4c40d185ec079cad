//! Exact integer matrix algebra: Smith and Hermite normal forms with retained
//! transformation matrices, integer kernels, and linear solves over Z and Q.
//!
//! Everything here is arbitrary-precision; the matrices involved are small
//! (rank times number of roots), so clarity wins over asymptotics.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub type IntVec = Vec<BigInt>;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<IntVec>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        IntMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(cols: Vec<IntVec>) -> Self {
        let c = cols.len();
        let r = cols.first().map(|v| v.len()).unwrap_or(0);
        assert!(cols.iter().all(|v| v.len() == r), "ragged columns");
        let mut m = IntMat::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMat::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
    }

    pub fn row(&self, i: usize) -> IntVec {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn column(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<IntVec> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut m = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut m = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = &self[(i, k)] * &other[(k, j)];
                    m[(i, j)] += t;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> IntVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }
                })
            })
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.rows, other.rows);
        let mut m = IntMat::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let ia = a * self.cols + j;
            let ib = b * self.cols + j;
            self.data.swap(ia, ib);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let ia = i * self.cols + a;
            let ib = i * self.cols + b;
            self.data.swap(ia, ib);
        }
    }

    /// row[a] += k * row[b]
    fn add_row(&mut self, a: usize, b: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = k * &self[(b, j)];
            self[(a, j)] += t;
        }
    }

    /// col[a] += k * col[b]
    fn add_col(&mut self, a: usize, b: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = k * &self[(i, b)];
            self[(i, a)] += t;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let t = -self[(a, j)].clone();
            self[(a, j)] = t;
        }
    }

    fn negate_col(&mut self, a: usize) {
        for i in 0..self.rows {
            let t = -self[(i, a)].clone();
            self[(i, a)] = t;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Smith normal form U * M * V = D with U, V unimodular and D diagonal,
/// diagonal entries nonnegative and each dividing the next.
///
/// The transforms (and their inverses) are retained so that quotient
/// presentations can convert between ambient and canonical coordinates.
#[derive(Debug, Clone)]
pub struct Snf {
    /// Diagonal of D, length min(rows, cols).
    pub diag: Vec<BigInt>,
    pub u: IntMat,
    pub u_inv: IntMat,
    pub v: IntMat,
    pub v_inv: IntMat,
}

pub fn smith_normal_form(m: &IntMat) -> Snf {
    let rows = m.rows;
    let cols = m.cols;
    let mut a = m.clone();
    let mut u = IntMat::identity(rows);
    let mut u_inv = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    let mut v_inv = IntMat::identity(cols);

    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // Find a pivot: the entry of smallest absolute value in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[(i, j)].is_zero()
                    && pivot
                        .map(|(pi, pj)| a[(i, j)].abs() < a[(pi, pj)].abs())
                        .unwrap_or(true)
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        u_inv.swap_cols(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);

        loop {
            // Clear the pivot column with row operations.
            let mut again = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = div_round(&a[(i, t)], &a[(t, t)]);
                a.add_row(i, t, &-&q);
                u.add_row(i, t, &-&q);
                u_inv.add_col(t, i, &q);
                if !a[(i, t)].is_zero() {
                    // Remainder smaller than pivot: swap up and restart.
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    u_inv.swap_cols(t, i);
                    again = true;
                }
            }
            // Clear the pivot row with column operations.
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = div_round(&a[(t, j)], &a[(t, t)]);
                a.add_col(j, t, &-&q);
                v.add_col(j, t, &-&q);
                v_inv.add_row(t, j, &q);
                if !a[(t, j)].is_zero() {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    v_inv.swap_rows(t, j);
                    again = true;
                }
            }
            if !again {
                break;
            }
        }

        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        t += 1;
    }

    // Enforce the divisibility chain d_i | d_{i+1}.
    loop {
        let mut fixed = true;
        for i in 0..n.saturating_sub(1) {
            let di = a[(i, i)].clone();
            let dj = a[(i + 1, i + 1)].clone();
            if di.is_zero() && dj.is_zero() {
                continue;
            }
            if di.is_zero() || (!dj.is_zero() && !(&dj % &di).is_zero()) {
                // Fold d_{i+1} into position (i, i) and re-diagonalize the 2x2 block
                // via one gcd step: add column i+1 to column i, then clear.
                a.add_col(i, i + 1, &BigInt::one());
                v.add_col(i, i + 1, &BigInt::one());
                v_inv.add_row(i + 1, i, &-BigInt::one());
                // The block is now [[di, 0], [dj, dj]] (or [[0,0],[dj,dj]]); reduce it.
                loop {
                    if a[(i + 1, i)].is_zero() {
                        break;
                    }
                    if a[(i, i)].is_zero() {
                        a.swap_rows(i, i + 1);
                        u.swap_rows(i, i + 1);
                        u_inv.swap_cols(i, i + 1);
                        continue;
                    }
                    let q = div_round(&a[(i + 1, i)], &a[(i, i)]);
                    a.add_row(i + 1, i, &-&q);
                    u.add_row(i + 1, i, &-&q);
                    u_inv.add_col(i, i + 1, &q);
                    if !a[(i + 1, i)].is_zero() {
                        a.swap_rows(i, i + 1);
                        u.swap_rows(i, i + 1);
                        u_inv.swap_cols(i, i + 1);
                    }
                }
                let q = div_round(&a[(i, i + 1)], &a[(i, i)]);
                a.add_col(i + 1, i, &-&q);
                v.add_col(i + 1, i, &-&q);
                v_inv.add_row(i, i + 1, &q);
                if a[(i, i)].is_negative() {
                    a.negate_row(i);
                    u.negate_row(i);
                    u_inv.negate_col(i);
                }
                if a[(i + 1, i + 1)].is_negative() {
                    a.negate_row(i + 1);
                    u.negate_row(i + 1);
                    u_inv.negate_col(i + 1);
                }
                fixed = false;
            }
        }
        if fixed {
            break;
        }
    }

    let diag = (0..n).map(|i| a[(i, i)].clone()).collect();
    Snf { diag, u, u_inv, v, v_inv }
}

/// Round-to-nearest quotient, so remainders satisfy |r| <= |b|/2.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r = BigInt::from(2) * r.abs();
    if two_r > b.abs() {
        if (a.is_negative()) != (b.is_negative()) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

/// Basis of the integer kernel {x : M x = 0}, as a list of column vectors.
pub fn kernel_basis(m: &IntMat) -> Vec<IntVec> {
    let snf = smith_normal_form(m);
    let n = snf.diag.len();
    let mut basis = Vec::new();
    for j in 0..m.cols {
        let zero_diag = j >= n || snf.diag[j].is_zero();
        if zero_diag {
            basis.push(snf.v.column(j));
        }
    }
    basis
}

/// One integer solution x of M x = b, if any.
pub fn solve(m: &IntMat, b: &[BigInt]) -> Option<IntVec> {
    assert_eq!(m.rows, b.len());
    let snf = smith_normal_form(m);
    let c = snf.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); m.cols];
    for i in 0..m.rows {
        let d = if i < snf.diag.len() { snf.diag[i].clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !c[i].is_zero() {
                return None;
            }
        } else {
            let (q, r) = c[i].div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Column-style Hermite normal form of the lattice spanned by `columns`.
///
/// Returns a canonical basis (as columns): pivots are positive, each pivot is
/// the first nonzero entry of its column reading top down, pivot rows strictly
/// increase, and entries to the left of a pivot in its row lie in [0, pivot).
#[allow(clippy::needless_range_loop)]
pub fn hnf_basis(ambient_dim: usize, columns: &[IntVec]) -> Vec<IntVec> {
    let mut cols: Vec<IntVec> = columns
        .iter()
        .filter(|c| !c.iter().all(|x| x.is_zero()))
        .cloned()
        .collect();
    for c in &cols {
        assert_eq!(c.len(), ambient_dim);
    }
    let mut result: Vec<IntVec> = Vec::new();
    let mut row = 0;
    while row < ambient_dim && !cols.is_empty() {
        // Gcd-combine all columns with a nonzero entry in this row into one.
        loop {
            let mut nz: Vec<usize> =
                (0..cols.len()).filter(|&j| !cols[j][row].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&j| cols[j][row].abs());
            let (a, b) = (nz[0], nz[1]);
            let q = div_round(&cols[b][row], &cols[a][row]);
            for i in 0..ambient_dim {
                let t = &q * &cols[a][i];
                cols[b][i] -= t;
            }
        }
        if let Some(j) = (0..cols.len()).find(|&j| !cols[j][row].is_zero()) {
            let mut piv = cols.remove(j);
            if piv[row].is_negative() {
                for x in piv.iter_mut() {
                    *x = -x.clone();
                }
            }
            // Reduce earlier pivot columns at this row into [0, pivot).
            for prev in result.iter_mut() {
                let q = prev[row].div_floor(&piv[row]);
                if !q.is_zero() {
                    for i in 0..ambient_dim {
                        let t = &q * &piv[i];
                        prev[i] -= t;
                    }
                }
            }
            result.push(piv);
        }
        cols.retain(|c| !c.iter().all(|x| x.is_zero()));
        row += 1;
    }
    result
}

/// Basis of the intersection of two integer lattices in Z^dim, each given by
/// spanning vectors: solutions of A s = B t realized through the A side.
pub fn lattice_intersection(dim: usize, a: &[IntVec], b: &[IntVec]) -> Vec<IntVec> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut cols: Vec<IntVec> = a.to_vec();
    cols.extend(b.iter().map(|c| c.iter().map(|x| -x.clone()).collect::<IntVec>()));
    let stacked = IntMat::from_columns(cols);
    let members: Vec<IntVec> = kernel_basis(&stacked)
        .into_iter()
        .map(|k| {
            let mut v = vec![BigInt::zero(); dim];
            for (j, col) in a.iter().enumerate() {
                for i in 0..dim {
                    let t = &k[j] * &col[i];
                    v[i] += t;
                }
            }
            v
        })
        .collect();
    hnf_basis(dim, &members)
}

/// Reduce `x` to the canonical representative of the coset x + L, where L is
/// spanned by the HNF basis returned from `hnf_basis`.
pub fn hnf_reduce(x: &[BigInt], basis: &[IntVec]) -> IntVec {
    let mut x = x.to_vec();
    for b in basis {
        let row = b.iter().position(|e| !e.is_zero()).expect("zero basis vector");
        let q = x[row].div_floor(&b[row]);
        if !q.is_zero() {
            for i in 0..x.len() {
                let t = &q * &b[i];
                x[i] -= t;
            }
        }
    }
    x
}

/// Solve M x = b over the rationals; returns None when inconsistent.
#[allow(clippy::needless_range_loop)]
pub fn solve_rational(m: &IntMat, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(m.rows, b.len());
    let mut a: Vec<Vec<BigRational>> = (0..m.rows)
        .map(|i| {
            (0..m.cols)
                .map(|j| BigRational::from(m[(i, j)].clone()))
                .chain(std::iter::once(b[i].clone()))
                .collect()
        })
        .collect();
    let rows = m.rows;
    let cols = m.cols;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        if let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) {
            a.swap(r, p);
            let inv = a[r][c].clone();
            for j in c..=cols {
                a[r][j] = &a[r][j] / &inv;
            }
            for i in 0..rows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in c..=cols {
                        let t = &f * &a[r][j];
                        a[i][j] = &a[i][j] - &t;
                    }
                }
            }
            pivots.push((r, c));
            r += 1;
        }
    }
    for i in r..rows {
        if !a[i][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for &(pr, pc) in &pivots {
        x[pc] = a[pr][cols].clone();
    }
    Some(x)
}

/// Whether b lies in the rational column span of M.
pub fn in_rational_span(m: &IntMat, b: &[BigRational]) -> bool {
    solve_rational(m, b).is_some()
}

pub fn vec_add(a: &[BigInt], b: &[BigInt]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[BigInt], b: &[BigInt]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[BigInt]) -> IntVec {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(k: &BigInt, a: &[BigInt]) -> IntVec {
    a.iter().map(|x| k * x).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len(), "dimension mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_is_zero(a: &[BigInt]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn vec_from_i64(a: &[i64]) -> IntVec {
    a.iter().map(|&x| BigInt::from(x)).collect()
}
