//! Dense integer matrices and Smith normal form.
//!
//! All arithmetic runs in checked `i128`; overflow surfaces as a capacity
//! error, never as silent wraparound. The reduction always pivots on the
//! smallest-absolute-value nonzero entry (ties: lowest row, then lowest
//! column), so output is deterministic.

use std::fmt;

use crate::error::{Error, Result};

/// Row-major dense integer matrix. Zero-row and zero-column shapes are legal
/// and show up routinely as maps to and from the trivial group.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i128>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged row lengths".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i128) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn diagonal(entries: &[i128]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<i128> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row(&self, i: usize) -> &[i128] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// `self · rhs` with overflow detection.
    pub fn mul(&self, rhs: &IntMat) -> Result<IntMat> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc: i128 = 0;
                for k in 0..self.cols {
                    let term = checked_mul(self.get(i, k), rhs.get(k, j))?;
                    acc = checked_add(acc, term)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[i128]) -> Result<Vec<i128>> {
        if x.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        let mut out = vec![0i128; self.rows];
        for i in 0..self.rows {
            let mut acc: i128 = 0;
            for j in 0..self.cols {
                acc = checked_add(acc, checked_mul(self.get(i, j), x[j])?)?;
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | right]`.
    pub fn hstack(&self, right: &IntMat) -> Result<IntMat> {
        if self.rows != right.rows {
            return Err(Error::Shape("hstack with different row counts".into()));
        }
        let mut out = IntMat::zeros(self.rows, self.cols + right.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..right.cols {
                out.set(i, self.cols + j, right.get(i, j));
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> IntMat {
        IntMat::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == i128::from(i == j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += q * row[src]`, checked.
    fn row_axpy(&mut self, dst: usize, src: usize, q: i128) -> Result<()> {
        for j in 0..self.cols {
            let term = checked_mul(q, self.get(src, j))?;
            let v = checked_add(self.get(dst, j), term)?;
            self.set(dst, j, v);
        }
        Ok(())
    }

    /// `col[dst] += q * col[src]`, checked.
    fn col_axpy(&mut self, dst: usize, src: usize, q: i128) -> Result<()> {
        for i in 0..self.rows {
            let term = checked_mul(q, self.get(i, src))?;
            let v = checked_add(self.get(i, dst), term)?;
            self.set(i, dst, v);
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = self.get(i, j);
            self.set(i, j, -v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = self.get(i, j);
            self.set(i, j, -v);
        }
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Quotient with remainder in `(-|p|/2, |p|/2]`: balanced division keeps
/// entry growth under control during the reduction.
#[inline]
fn div_balanced(x: i128, p: i128) -> i128 {
    let pa = p.abs();
    let mut r = x.rem_euclid(pa);
    if 2 * r > pa {
        r -= pa;
    }
    (x - r) / p
}

#[inline]
fn checked_add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or_else(|| Error::Capacity("integer overflow in addition".into()))
}

#[inline]
fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or_else(|| Error::Capacity("integer overflow in multiplication".into()))
}

/// Smith normal form together with the transforms and their inverses:
/// `u * m * v = d`, `u * u_inv = 1`, `v * v_inv = 1`.
pub struct Snf {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
    pub u_inv: IntMat,
    pub v_inv: IntMat,
    /// Number of nonzero diagonal entries of `d`.
    pub rank: usize,
}

/// Full Smith reduction with inverse tracking.
///
/// Runs the checked `i128` reduction first; if entry growth exceeds the wide
/// integer type, the identical reduction is repeated in arbitrary precision
/// and converted back, so only results that genuinely do not fit report a
/// capacity error.
pub fn smith(m: &IntMat) -> Result<Snf> {
    match smith_i128(m) {
        Err(Error::Capacity(_)) => big::smith_big(m),
        other => other,
    }
}

fn smith_i128(m: &IntMat) -> Result<Snf> {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMat::identity(r);
    let mut u_inv = IntMat::identity(r);
    let mut v = IntMat::identity(c);
    let mut v_inv = IntMat::identity(c);

    for t in 0..r.min(c) {
        'pivot: loop {
            // Smallest |entry| in the trailing submatrix; ties by lowest
            // row, then lowest column.
            let mut pivot: Option<(usize, usize, i128)> = None;
            for i in t..r {
                for j in t..c {
                    let x = a.get(i, j);
                    if x != 0 && pivot.is_none_or(|(_, _, p)| x.abs() < p.abs()) {
                        pivot = Some((i, j, x));
                    }
                }
            }
            let Some((pi, pj, _)) = pivot else {
                break 'pivot; // trailing submatrix is zero
            };

            if pi != t {
                a.swap_rows(t, pi);
                u.swap_rows(t, pi);
                u_inv.swap_cols(t, pi);
            }
            if pj != t {
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
                v_inv.swap_rows(t, pj);
            }

            let p = a.get(t, t);
            let mut clean = true;
            for i in t + 1..r {
                let x = a.get(i, t);
                if x != 0 {
                    let q = div_balanced(x, p);
                    if q != 0 {
                        a.row_axpy(i, t, -q)?;
                        u.row_axpy(i, t, -q)?;
                        u_inv.col_axpy(t, i, q)?;
                    }
                    if a.get(i, t) != 0 {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                let x = a.get(t, j);
                if x != 0 {
                    let q = div_balanced(x, p);
                    if q != 0 {
                        a.col_axpy(j, t, -q)?;
                        v.col_axpy(j, t, -q)?;
                        v_inv.row_axpy(t, j, q)?;
                    }
                    if a.get(t, j) != 0 {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue 'pivot; // a strictly smaller entry appeared
            }

            // Pivot must divide every remaining entry; if not, pull the
            // offending row up and reduce again.
            let mut offender = None;
            'scan: for i in t + 1..r {
                for j in t + 1..c {
                    if a.get(i, j).rem_euclid(p.abs()) != 0 {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    a.row_axpy(t, i, 1)?;
                    u.row_axpy(t, i, 1)?;
                    u_inv.col_axpy(i, t, -1)?;
                }
                None => break 'pivot,
            }
        }
    }

    // Nonnegative diagonal, sign absorbed into v.
    for t in 0..r.min(c) {
        if a.get(t, t) < 0 {
            a.negate_col(t);
            v.negate_col(t);
            v_inv.negate_row(t);
        }
    }

    let rank = (0..r.min(c)).take_while(|&t| a.get(t, t) != 0).count();
    Ok(Snf { u, d: a, v, u_inv, v_inv, rank })
}

/// The same reduction over arbitrary-precision integers, used when the
/// `i128` pass overflows. The pivot rule and the balanced division are
/// identical, so both passes compute the same transforms.
mod big {
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};

    use super::{IntMat, Snf};
    use crate::error::{Error, Result};

    struct BigMat {
        rows: usize,
        cols: usize,
        data: Vec<BigInt>,
    }

    impl BigMat {
        fn from_int(m: &IntMat) -> Self {
            let data = (0..m.rows())
                .flat_map(|i| m.row(i).iter().map(|&x| BigInt::from(x)))
                .collect();
            Self { rows: m.rows(), cols: m.cols(), data }
        }

        fn identity(n: usize) -> Self {
            let mut data = vec![BigInt::zero(); n * n];
            for i in 0..n {
                data[i * n + i] = BigInt::from(1);
            }
            Self { rows: n, cols: n, data }
        }

        fn get(&self, i: usize, j: usize) -> &BigInt {
            &self.data[i * self.cols + j]
        }

        fn swap_rows(&mut self, a: usize, b: usize) {
            if a == b {
                return;
            }
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }

        fn swap_cols(&mut self, a: usize, b: usize) {
            if a == b {
                return;
            }
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }

        fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
            for j in 0..self.cols {
                let term = q * &self.data[src * self.cols + j];
                self.data[dst * self.cols + j] += term;
            }
        }

        fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
            for i in 0..self.rows {
                let term = q * &self.data[i * self.cols + src];
                self.data[i * self.cols + dst] += term;
            }
        }

        fn negate_row(&mut self, i: usize) {
            for j in 0..self.cols {
                let v = -self.data[i * self.cols + j].clone();
                self.data[i * self.cols + j] = v;
            }
        }

        fn negate_col(&mut self, j: usize) {
            for i in 0..self.rows {
                let v = -self.data[i * self.cols + j].clone();
                self.data[i * self.cols + j] = v;
            }
        }

        fn into_int(self, what: &str) -> Result<IntMat> {
            let mut out = IntMat::zeros(self.rows, self.cols);
            for i in 0..self.rows {
                for j in 0..self.cols {
                    let v: i128 = i128::try_from(self.get(i, j)).map_err(|_| {
                        Error::Capacity(format!("{what} entry exceeds the wide integer type"))
                    })?;
                    out.set(i, j, v);
                }
            }
            Ok(out)
        }
    }

    fn div_balanced(x: &BigInt, p: &BigInt) -> BigInt {
        let pa = p.abs();
        let mut r = ((x % &pa) + &pa) % &pa;
        if 2 * &r > pa {
            r -= p.abs();
        }
        (x - r) / p
    }

    pub(super) fn smith_big(m: &IntMat) -> Result<Snf> {
        let (r, c) = (m.rows(), m.cols());
        let mut a = BigMat::from_int(m);
        let mut u = BigMat::identity(r);
        let mut u_inv = BigMat::identity(r);
        let mut v = BigMat::identity(c);
        let mut v_inv = BigMat::identity(c);

        for t in 0..r.min(c) {
            'pivot: loop {
                let mut pivot: Option<(usize, usize)> = None;
                for i in t..r {
                    for j in t..c {
                        let x = a.get(i, j);
                        if !x.is_zero()
                            && pivot
                                .is_none_or(|(pi, pj)| x.abs() < a.get(pi, pj).abs())
                        {
                            pivot = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = pivot else {
                    break 'pivot;
                };
                if pi != t {
                    a.swap_rows(t, pi);
                    u.swap_rows(t, pi);
                    u_inv.swap_cols(t, pi);
                }
                if pj != t {
                    a.swap_cols(t, pj);
                    v.swap_cols(t, pj);
                    v_inv.swap_rows(t, pj);
                }
                let p = a.get(t, t).clone();
                let mut clean = true;
                for i in t + 1..r {
                    let x = a.get(i, t).clone();
                    if !x.is_zero() {
                        let q = div_balanced(&x, &p);
                        if !q.is_zero() {
                            a.row_axpy(i, t, &-q.clone());
                            u.row_axpy(i, t, &-q.clone());
                            u_inv.col_axpy(t, i, &q);
                        }
                        if !a.get(i, t).is_zero() {
                            clean = false;
                        }
                    }
                }
                for j in t + 1..c {
                    let x = a.get(t, j).clone();
                    if !x.is_zero() {
                        let q = div_balanced(&x, &p);
                        if !q.is_zero() {
                            a.col_axpy(j, t, &-q.clone());
                            v.col_axpy(j, t, &-q.clone());
                            v_inv.row_axpy(t, j, &q);
                        }
                        if !a.get(t, j).is_zero() {
                            clean = false;
                        }
                    }
                }
                if !clean {
                    continue 'pivot;
                }
                let pa = p.abs();
                let mut offender = None;
                'scan: for i in t + 1..r {
                    for j in t + 1..c {
                        if !(a.get(i, j) % &pa).is_zero() {
                            offender = Some(i);
                            break 'scan;
                        }
                    }
                }
                match offender {
                    Some(i) => {
                        let one = BigInt::from(1);
                        a.row_axpy(t, i, &one);
                        u.row_axpy(t, i, &one);
                        u_inv.col_axpy(i, t, &BigInt::from(-1));
                    }
                    None => break 'pivot,
                }
            }
        }

        for t in 0..r.min(c) {
            if a.get(t, t).is_negative() {
                a.negate_col(t);
                v.negate_col(t);
                v_inv.negate_row(t);
            }
        }

        let rank = (0..r.min(c)).take_while(|&t| !a.get(t, t).is_zero()).count();
        Ok(Snf {
            u: u.into_int("transform")?,
            d: a.into_int("diagonal")?,
            v: v.into_int("transform")?,
            u_inv: u_inv.into_int("transform")?,
            v_inv: v_inv.into_int("transform")?,
            rank,
        })
    }
}

/// `(u, d, v)` with `u·m·v = d`, `d` diagonal, nonnegative, each nonzero
/// entry dividing the next, and `u`, `v` unimodular.
pub fn smith_normal_form(m: &IntMat) -> Result<(IntMat, IntMat, IntMat)> {
    let snf = smith(m)?;
    Ok((snf.u, snf.d, snf.v))
}

/// Basis (as column vectors) of the integer kernel lattice `{x : m·x = 0}`.
pub fn kernel_basis(m: &IntMat) -> Result<Vec<Vec<i128>>> {
    let snf = smith(m)?;
    Ok((snf.rank..m.cols()).map(|j| snf.v.col(j)).collect())
}

/// Determinant by fraction-free (Bareiss) elimination. Square matrices only.
pub fn det(m: &IntMat) -> Result<i128> {
    let n = m.rows();
    if n != m.cols() {
        return Err(Error::Shape("determinant of non-square matrix".into()));
    }
    if n == 0 {
        return Ok(1);
    }
    let mut a = m.clone();
    let mut sign: i128 = 1;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if a.get(k, k) == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a.get(i, k) != 0) else {
                return Ok(0);
            };
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = checked_add(
                    checked_mul(a.get(i, j), a.get(k, k))?,
                    -checked_mul(a.get(i, k), a.get(k, j))?,
                )?;
                a.set(i, j, num / prev);
            }
            a.set(i, k, 0);
        }
        prev = a.get(k, k);
    }
    Ok(sign * a.get(n - 1, n - 1))
}

/// Solve `a·x ≡ b (mod moduli)` (row `i` taken modulo `moduli[i]`), returning
/// any particular solution. `None` means the congruence system is unsolvable.
pub fn solve_congruence(a: &IntMat, b: &[i128], moduli: &[i64]) -> Result<Option<Vec<i128>>> {
    let m = a.rows();
    let k = a.cols();
    if b.len() != m || moduli.len() != m {
        return Err(Error::Shape("solve_congruence: inconsistent row data".into()));
    }
    let diag = IntMat::from_fn(m, m, |i, j| if i == j { i128::from(moduli[i]) } else { 0 });
    let stacked = a.hstack(&diag)?;
    let snf = smith(&stacked)?;
    let w = snf.u.apply(b)?;
    let mut z = vec![0i128; k + m];
    for (i, &wi) in w.iter().enumerate() {
        if i < snf.rank {
            let dii = snf.d.get(i, i);
            if wi.rem_euclid(dii) != 0 {
                return Ok(None);
            }
            z[i] = wi / dii;
        } else if wi != 0 {
            return Ok(None);
        }
    }
    let x = snf.v.apply(&z)?;
    Ok(Some(x[..k].to_vec()))
}
