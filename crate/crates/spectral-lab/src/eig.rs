//! Dense complex eigensolver: balancing, Householder reduction to upper
//! Hessenberg form, then explicit single-shift QR with Wilkinson shifts,
//! Givens sweeps, and deflation. Eigenvalues only; the iteration cap is 30·n.

use num_complex::Complex64;

use crate::error::SpectralError;

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    n: usize,
    data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        CMat { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let n = rows.len();
        let mut m = CMat::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n);
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![Complex64::new(0.0, 0.0); self.n];
        for i in 0..self.n {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            let mut acc = Complex64::new(0.0, 0.0);
            for (a, b) in row.iter().zip(x) {
                acc += a * b;
            }
            y[i] = acc;
        }
        y
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        let n = self.n;
        &mut self.data[i * n + j]
    }
}

/// All eigenvalues, sorted by real part, ties by imaginary part.
pub fn eigenvalues(mat: &CMat) -> Result<Vec<Complex64>, SpectralError> {
    let mut a = mat.clone();
    balance(&mut a);
    hessenberg(&mut a);
    let mut vals = hessenberg_qr_eigenvalues(&mut a)?;
    vals.sort_by(|p, q| p.re.total_cmp(&q.re).then(p.im.total_cmp(&q.im)));
    Ok(vals)
}

/// Parlett–Reinsch balancing with radix-2 scaling (similarity by powers of
/// two, so no rounding is introduced).
fn balance(a: &mut CMat) {
    let n = a.n;
    let radix = 2.0f64;
    let sqrdx = radix * radix;
    loop {
        let mut done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].norm();
                    r += a[(i, j)].norm();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / radix;
            while c < g {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while c > g {
                f /= radix;
                c /= sqrdx;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                let ginv = 1.0 / f;
                for j in 0..n {
                    a[(i, j)] *= ginv;
                }
                for j in 0..n {
                    a[(j, i)] *= f;
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Householder reduction to upper Hessenberg form (in place).
fn hessenberg(a: &mut CMat) {
    let n = a.n;
    if n < 3 {
        return;
    }
    let mut v = vec![Complex64::new(0.0, 0.0); n];
    for k in 0..n - 2 {
        // column k below the subdiagonal
        let mut norm_sq = 0.0;
        for i in k + 1..n {
            norm_sq += a[(i, k)].norm_sqr();
        }
        let alpha = norm_sq.sqrt();
        if alpha == 0.0 {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let phase = if x0.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let beta = -phase * alpha;
        // v = x − β·e₁; ‖v‖² = 2α(α + |x₀|)
        let vnorm_sq = 2.0 * alpha * (alpha + x0.norm());
        if vnorm_sq == 0.0 {
            continue;
        }
        v[k + 1] = x0 - beta;
        for i in k + 2..n {
            v[i] = a[(i, k)];
        }
        let scale = 2.0 / vnorm_sq;
        // left: A := A − v (scale · vᴴ A) on rows k+1.., columns k..
        for j in k..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in k + 1..n {
                dot += v[i].conj() * a[(i, j)];
            }
            let w = scale * dot;
            for i in k + 1..n {
                let vi = v[i];
                a[(i, j)] -= vi * w;
            }
        }
        // right: A := A − (scale · A v) vᴴ on all rows, columns k+1..
        for i in 0..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for j in k + 1..n {
                dot += a[(i, j)] * v[j];
            }
            let tau = scale * dot;
            for j in k + 1..n {
                let vj = v[j];
                a[(i, j)] -= tau * vj.conj();
            }
        }
        a[(k + 1, k)] = beta;
        for i in k + 2..n {
            a[(i, k)] = Complex64::new(0.0, 0.0);
        }
    }
}

fn roots_of_2x2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> (Complex64, Complex64) {
    let half_tr = 0.5 * (a + d);
    let disc = (0.5 * (a - d)).powu(2) + b * c;
    let root = disc.sqrt();
    (half_tr + root, half_tr - root)
}

fn wilkinson_shift(a: &CMat, hi: usize) -> Complex64 {
    let (p, q) = roots_of_2x2(a[(hi - 1, hi - 1)], a[(hi - 1, hi)], a[(hi, hi - 1)], a[(hi, hi)]);
    let target = a[(hi, hi)];
    if (p - target).norm() <= (q - target).norm() {
        p
    } else {
        q
    }
}

/// Givens rotation [[c, s], [−s̄, c]] with real c ≥ 0 mapping (f, g) to (r, 0).
fn givens(f: Complex64, g: Complex64) -> (f64, Complex64, Complex64) {
    let fnorm = f.norm();
    let gnorm = g.norm();
    if gnorm == 0.0 {
        return (1.0, Complex64::new(0.0, 0.0), f);
    }
    if fnorm == 0.0 {
        return (0.0, g.conj() / gnorm, Complex64::new(gnorm, 0.0));
    }
    let d = (fnorm * fnorm + gnorm * gnorm).sqrt();
    let phase = f / fnorm;
    (fnorm / d, phase * (g.conj() / d), phase * d)
}

/// Eigenvalues of an upper Hessenberg matrix by explicit shifted QR.
fn hessenberg_qr_eigenvalues(a: &mut CMat) -> Result<Vec<Complex64>, SpectralError> {
    let n = a.n;
    let mut eigs = Vec::with_capacity(n);
    if n == 0 {
        return Ok(eigs);
    }
    let eps = f64::EPSILON;
    let mut anorm = 0.0;
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            anorm += a[(i, j)].norm();
        }
    }
    if anorm == 0.0 {
        return Ok(vec![Complex64::new(0.0, 0.0); n]);
    }

    let cap = 30 * n;
    let mut total_iters = 0usize;
    let mut hi = n - 1;
    let mut since_deflation = 0usize;
    let mut cs: Vec<(f64, Complex64)> = vec![(0.0, Complex64::new(0.0, 0.0)); n];

    loop {
        // deflation scan: zero negligible subdiagonals, find the active block
        let mut lo = hi;
        while lo > 0 {
            let sub = a[(lo, lo - 1)].norm();
            let local = a[(lo - 1, lo - 1)].norm() + a[(lo, lo)].norm();
            let scale = if local > 0.0 { local } else { anorm };
            if sub <= eps * scale {
                a[(lo, lo - 1)] = Complex64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }

        if lo == hi {
            eigs.push(a[(hi, hi)]);
            if hi == 0 {
                break;
            }
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        if lo + 1 == hi {
            let (p, q) = roots_of_2x2(a[(lo, lo)], a[(lo, hi)], a[(hi, lo)], a[(hi, hi)]);
            eigs.push(p);
            eigs.push(q);
            if lo == 0 {
                break;
            }
            hi = lo - 1;
            since_deflation = 0;
            continue;
        }

        if total_iters >= cap {
            return Err(SpectralError::EigensolverStalled { remaining: hi + 1 });
        }
        total_iters += 1;
        since_deflation += 1;

        // exceptional shift breaks rare symmetry stalls
        let sigma = if since_deflation % 10 == 0 {
            let mag = a[(hi, hi - 1)].norm() + a[(hi - 1, hi - 2)].norm();
            a[(hi, hi)] + Complex64::new(1.5 * mag, 0.0)
        } else {
            wilkinson_shift(a, hi)
        };

        for i in lo..=hi {
            let d = a[(i, i)];
            a[(i, i)] = d - sigma;
        }
        // QR factor by a Givens sweep down the subdiagonal
        for k in lo..hi {
            let (c, s, r) = givens(a[(k, k)], a[(k + 1, k)]);
            cs[k] = (c, s);
            a[(k, k)] = r;
            a[(k + 1, k)] = Complex64::new(0.0, 0.0);
            for j in k + 1..=hi {
                let t1 = a[(k, j)];
                let t2 = a[(k + 1, j)];
                a[(k, j)] = c * t1 + s * t2;
                a[(k + 1, j)] = -s.conj() * t1 + c * t2;
            }
        }
        // RQ: apply the adjoint rotations on the right, then restore the shift
        for k in lo..hi {
            let (c, s) = cs[k];
            let top = if k + 1 < hi { k + 1 } else { hi };
            for i in lo..=top {
                let t1 = a[(i, k)];
                let t2 = a[(i, k + 1)];
                a[(i, k)] = c * t1 + s.conj() * t2;
                a[(i, k + 1)] = -s * t1 + c * t2;
            }
        }
        for i in lo..=hi {
            let d = a[(i, i)];
            a[(i, i)] = d + sigma;
        }
    }
    Ok(eigs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use peakon_core::fields::SplitMix64;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_spectra_match(got: Vec<Complex64>, want: Vec<Complex64>, tol: f64) {
        assert_eq!(got.len(), want.len());
        let mut used = vec![false; want.len()];
        for g in &got {
            let mut best = (f64::MAX, usize::MAX);
            for (j, w) in want.iter().enumerate() {
                if !used[j] {
                    let d = (g - w).norm();
                    if d < best.0 {
                        best = (d, j);
                    }
                }
            }
            assert!(best.0 < tol, "{g} has no partner within {tol:e} (closest {:e})", best.0);
            used[best.1] = true;
        }
    }

    #[test]
    fn triangular_matrices_return_their_diagonal() {
        let m = CMat::from_rows(&[
            vec![c(1.0, 2.0), c(5.0, 0.0), c(-1.0, 1.0)],
            vec![c(0.0, 0.0), c(-3.0, 0.5), c(2.0, 2.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(0.25, -4.0)],
        ]);
        let vals = eigenvalues(&m).unwrap();
        assert_spectra_match(vals, vec![c(1.0, 2.0), c(-3.0, 0.5), c(0.25, -4.0)], 1e-12);
    }

    #[test]
    fn rotation_block_has_imaginary_pair() {
        let m = CMat::from_rows(&[vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(-1.0, 0.0), c(0.0, 0.0)]]);
        let vals = eigenvalues(&m).unwrap();
        assert_spectra_match(vals, vec![c(0.0, 1.0), c(0.0, -1.0)], 1e-14);
    }

    #[test]
    fn tridiagonal_chain_matches_the_cosine_formula() {
        // d = 0, e = 1: eigenvalues 2cos(kπ/(n+1))
        let n = 40;
        let mut m = CMat::zeros(n);
        for i in 0..n {
            if i > 0 {
                m[(i, i - 1)] = c(1.0, 0.0);
            }
            if i + 1 < n {
                m[(i, i + 1)] = c(1.0, 0.0);
            }
        }
        let vals = eigenvalues(&m).unwrap();
        let want: Vec<Complex64> = (1..=n)
            .map(|k| c(2.0 * (k as f64 * PI / (n as f64 + 1.0)).cos(), 0.0))
            .collect();
        assert_spectra_match(vals, want, 1e-10);
    }

    #[test]
    fn circulant_matches_the_dft_of_its_symbol() {
        let n = 8;
        let sym: Vec<Complex64> = vec![
            c(1.0, 0.0),
            c(0.5, -0.25),
            c(-2.0, 1.0),
            c(0.0, 0.0),
            c(3.0, 0.0),
            c(0.0, 0.5),
            c(-1.0, -1.0),
            c(0.25, 0.0),
        ];
        let mut m = CMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = sym[(j + n - i) % n];
            }
        }
        let want: Vec<Complex64> = (0..n)
            .map(|k| {
                let mut acc = c(0.0, 0.0);
                for (j, &s) in sym.iter().enumerate() {
                    let ang = 2.0 * PI * (j * k) as f64 / n as f64;
                    acc += s * c(ang.cos(), ang.sin());
                }
                acc
            })
            .collect();
        let vals = eigenvalues(&m).unwrap();
        assert_spectra_match(vals, want, 1e-9);
    }

    #[test]
    fn eigenvalue_sum_equals_trace_for_random_matrices() {
        for seed in [1u64, 2, 3] {
            let mut rng = SplitMix64::new(seed);
            let n = 50;
            let mut m = CMat::zeros(n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = c(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0));
                }
            }
            let tr = m.trace();
            let vals = eigenvalues(&m).unwrap();
            let sum: Complex64 = vals.iter().sum();
            assert!(
                (sum - tr).norm() < 1e-9 * n as f64,
                "seed {seed}: sum {sum} vs trace {tr}"
            );
        }
    }

    #[test]
    fn real_matrices_keep_conjugate_pairs() {
        let mut rng = SplitMix64::new(77);
        let n = 30;
        let mut m = CMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = c(rng.range(-1.0, 1.0), 0.0);
            }
        }
        let vals = eigenvalues(&m).unwrap();
        for v in &vals {
            let conj_dist = vals.iter().map(|w| (w - v.conj()).norm()).fold(f64::MAX, f64::min);
            assert!(conj_dist < 1e-8, "unpaired eigenvalue {v}");
        }
    }

    #[test]
    fn nilpotent_jordan_block_collapses_to_zero() {
        let n = 6;
        let mut m = CMat::zeros(n);
        for i in 0..n - 1 {
            m[(i, i + 1)] = c(1.0, 0.0);
        }
        let vals = eigenvalues(&m).unwrap();
        for v in vals {
            assert!(v.norm() < 1e-2, "Jordan eigenvalue too large: {v}");
        }
    }

    #[test]
    fn sorted_by_real_then_imaginary_part() {
        let m = CMat::from_rows(&[
            vec![c(2.0, -1.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(2.0, 1.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
        ]);
        let vals = eigenvalues(&m).unwrap();
        assert!((vals[0] - c(-1.0, 0.0)).norm() < 1e-14);
        assert!((vals[1] - c(2.0, -1.0)).norm() < 1e-14);
        assert!((vals[2] - c(2.0, 1.0)).norm() < 1e-14);
    }
}
