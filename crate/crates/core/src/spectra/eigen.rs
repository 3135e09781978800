//! Dense real symmetric eigensolver.
//!
//! Householder reduction to tridiagonal form followed by the implicit QL
//! iteration with Wilkinson-type shifts (the EISPACK `tred2`/`tql2` pair).
//! Matrices are stored column-major so the Givens updates in the QL sweep
//! run over contiguous memory.

use alloc::vec;
use alloc::vec::Vec;
use libm::{fabs, hypot, sqrt};

/// QL sweeps allowed per eigenvalue before giving up.
pub const MAX_SWEEPS: usize = 64;

/// Symmetric tridiagonal matrix: `diag[i]` and `off[i]` = T[i, i+1].
#[derive(Debug, Clone)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

/// Output of [`decompose`].
pub struct Decomposition {
    /// Eigenvalues in the order the QL sweep leaves them (unsorted).
    pub values: Vec<f64>,
    /// Column-major `n × n`; column `j` is the eigenvector of `values[j]`.
    pub vectors: Option<Vec<f64>>,
}

/// Householder reduction of the column-major symmetric matrix `a`.
///
/// On return with `accumulate` the buffer holds the orthogonal matrix `Q`
/// with `QᵀAQ = T`; otherwise its contents are scratch.
fn householder(a: &mut [f64], n: usize, accumulate: bool) -> (Vec<f64>, Vec<f64>) {
    // v(r, c) = a[c * n + r]; the algorithm addresses the lower triangle.
    macro_rules! v {
        ($r:expr, $c:expr) => {
            a[($c) * n + ($r)]
        };
    }
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    for j in 0..n {
        d[j] = v!(n - 1, j);
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for x in &d[..i] {
            scale += fabs(*x);
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v!(i - 1, j);
                v!(i, j) = 0.0;
                v!(j, i) = 0.0;
            }
        } else {
            for x in &mut d[..i] {
                *x /= scale;
                h += *x * *x;
            }
            let mut f = d[i - 1];
            let mut g = sqrt(h);
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v!(j, i) = f;
                g = e[j] + v!(j, j) * f;
                for k in j + 1..i {
                    g += v!(k, j) * d[k];
                    e[k] += v!(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v!(k, j) -= f * e[k] + g * d[k];
                }
                d[j] = v!(i - 1, j);
                v!(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    if !accumulate {
        for (i, di) in d.iter_mut().enumerate() {
            *di = v!(i, i);
        }
        e[0] = 0.0;
        return (d, e);
    }

    for i in 0..n.saturating_sub(1) {
        v!(n - 1, i) = v!(i, i);
        v!(i, i) = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v!(k, i + 1) / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v!(k, i + 1) * v!(k, j);
                }
                for k in 0..=i {
                    v!(k, j) -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v!(k, i + 1) = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v!(n - 1, j);
        v!(n - 1, j) = 0.0;
    }
    v!(n - 1, n - 1) = 1.0;
    e[0] = 0.0;
    (d, e)
}

/// Implicit QL on the tridiagonal `(d, e)` where `e[i]` couples `i-1` and
/// `i` (`e[0]` unused). Rotations are applied to `z` when given.
///
/// Returns the index of the eigenvalue that failed to converge.
fn implicit_ql(d: &mut [f64], e: &mut [f64], mut z: Option<&mut [f64]>, n: usize) -> Result<(), usize> {
    if n == 0 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(fabs(d[l]) + fabs(e[l]));
        let mut m = l;
        while m < n - 1 && fabs(e[m]) > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > MAX_SWEEPS {
                    return Err(l);
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = hypot(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(z) = z.as_deref_mut() {
                        let (left, right) = z.split_at_mut((i + 1) * n);
                        let col_i = &mut left[i * n..];
                        let col_next = &mut right[..n];
                        for (zi, zn) in col_i.iter_mut().zip(col_next.iter_mut()) {
                            let t = *zn;
                            *zn = s * *zi + c * t;
                            *zi = c * *zi - s * t;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if fabs(e[l]) <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

/// Eigen-decomposition of the column-major symmetric `n × n` matrix `a`.
///
/// `a` is consumed as workspace.
pub fn decompose(mut a: Vec<f64>, n: usize, vectors: bool) -> Result<Decomposition, usize> {
    debug_assert_eq!(a.len(), n * n);
    if n == 0 {
        return Ok(Decomposition { values: Vec::new(), vectors: vectors.then(Vec::new) });
    }
    let (mut d, mut e) = householder(&mut a, n, vectors);
    if vectors {
        implicit_ql(&mut d, &mut e, Some(&mut a), n)?;
        Ok(Decomposition { values: d, vectors: Some(a) })
    } else {
        implicit_ql(&mut d, &mut e, None, n)?;
        Ok(Decomposition { values: d, vectors: None })
    }
}

/// Householder tridiagonal form of `a` (column-major, consumed).
pub fn tridiagonalize(mut a: Vec<f64>, n: usize) -> Tridiagonal {
    let (diag, e) = householder(&mut a, n, false);
    let off = if n > 1 { e[1..].to_vec() } else { Vec::new() };
    Tridiagonal { diag, off }
}

impl Tridiagonal {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `x` (Sturm count from the
    /// `LDLᵀ` pivots of `T - xI`).
    pub fn count_below(&self, x: f64) -> usize {
        let tiny = sqrt(f64::MIN_POSITIVE);
        let mut count = 0;
        let mut q = 1.0;
        for i in 0..self.len() {
            let coupling = if i == 0 { 0.0 } else { self.off[i - 1] * self.off[i - 1] };
            q = self.diag[i] - x - if i == 0 { 0.0 } else { coupling / q };
            if q == 0.0 {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { fabs(self.off[i - 1]) } else { 0.0 };
            let right = if i + 1 < n { fabs(self.off[i]) } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Every eigenvalue by Sturm bisection, ascending, with the final
    /// bracket half-width of each.
    pub fn bisect_all(&self) -> Vec<(f64, f64)> {
        let (glo, ghi) = self.gershgorin();
        let pad = f64::EPSILON * (fabs(glo).max(fabs(ghi)) + 1.0);
        let (glo, ghi) = (glo - pad, ghi + pad);
        (0..self.len())
            .map(|k| {
                // smallest x with count_below(x) > k
                let (mut lo, mut hi) = (glo, ghi);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    if self.count_below(mid) > k {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                (0.5 * (lo + hi), 0.5 * (hi - lo))
            })
            .collect()
    }
}
