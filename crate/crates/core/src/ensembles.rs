//! Random-matrix ensembles: GOE, GUE, the Rosenzweig-Porter interpolation
//! (Poisson to GUE) and the GOE-to-GUE crossover.
//!
//! Conventions (dimension n):
//! - GUE: Re and Im of off-diagonal entries independent N(0, 1/(4n)),
//!   diagonal real N(0, 1/(2n)) — the (1 + delta_ij) variance factor.
//! - GOE: off-diagonal N(0, 1/(4n)), diagonal N(0, 1/(2n)).
//! - RP(lambda): H = H0 + alpha_n * H_GUE with H0 diagonal N(0, 1/(2n)) and
//!   alpha_n = lambda * 2 pi / n.
//! - GOE->GUE(xi): H = H_S + i xi (pi/sqrt(n)) H_A with H_A real
//!   antisymmetric, entries N(0, 1/(4n)).
//!
//! Hermiticity is exact by construction; only the upper triangle is drawn.

use nalgebra::{Complex, DMatrix, RealField};
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rng::realization_stream;
use crate::scalar::{cst, Scalar};

/// Ensemble selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnsembleKind {
    Poisson,
    Goe,
    Gue,
    /// Rosenzweig-Porter, Poisson -> GUE, coupling `lambda`.
    RpPoissonToGue,
    /// GOE -> GUE crossover, T-violation strength `xi`.
    GoeToGue,
}

impl EnsembleKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EnsembleKind::Poisson => "poisson",
            EnsembleKind::Goe => "goe",
            EnsembleKind::Gue => "gue",
            EnsembleKind::RpPoissonToGue => "rp",
            EnsembleKind::GoeToGue => "goe2gue",
        }
    }
}

/// Full description of a Monte-Carlo ensemble run. Identical specs produce
/// bit-identical spectra regardless of thread count.
#[derive(Debug, Clone)]
pub struct EnsembleSpec<F> {
    pub kind: EnsembleKind,
    pub dim: usize,
    /// RP coupling; only read for `RpPoissonToGue`.
    pub lambda: F,
    /// T-violation strength; only read for `GoeToGue`.
    pub xi: F,
    pub master_seed: u64,
    pub realizations: usize,
}

impl<F: Scalar> EnsembleSpec<F> {
    pub fn new(kind: EnsembleKind, dim: usize, master_seed: u64, realizations: usize) -> Self {
        Self { kind, dim, lambda: F::zero(), xi: F::zero(), master_seed, realizations }
    }

    pub fn with_lambda(mut self, lambda: F) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_xi(mut self, xi: F) -> Self {
        self.xi = xi;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::InvalidDimension(format!("dim must be >= 2, got {}", self.dim)));
        }
        if self.realizations == 0 {
            return Err(Error::InvalidParameter("realizations must be >= 1".into()));
        }
        if self.lambda < F::zero() {
            return Err(Error::InvalidParameter(format!("lambda must be >= 0, got {}", self.lambda)));
        }
        if self.xi < F::zero() {
            return Err(Error::InvalidParameter(format!("xi must be >= 0, got {}", self.xi)));
        }
        Ok(())
    }
}

/// Hermitian matrix with exact symmetry: entry (i, j) is stored as the
/// conjugate of entry (j, i) at construction time.
#[derive(Debug, Clone)]
pub struct HermitianMatrix<F: Scalar + RealField> {
    data: DMatrix<Complex<F>>,
}

impl<F: Scalar + RealField> HermitianMatrix<F> {
    /// Wrap a matrix, checking Hermiticity to 1e-12 (relative to the largest
    /// entry magnitude).
    pub fn from_matrix(m: DMatrix<Complex<F>>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::InvalidDimension(format!(
                "matrix must be square, got {}x{}",
                m.nrows(),
                m.ncols()
            )));
        }
        let mut scale = F::zero();
        let mut worst = F::zero();
        for i in 0..m.nrows() {
            for j in i..m.ncols() {
                let a = m[(i, j)];
                let b = m[(j, i)].conj();
                let d = a - b;
                let mag = Float::max(complex_abs(a), complex_abs(b));
                scale = Float::max(scale, mag);
                worst = Float::max(worst, complex_abs(d));
            }
        }
        if worst > cst::<F>(1e-12) * Float::max(scale, F::one()) {
            return Err(Error::ContractViolation(format!(
                "matrix is not Hermitian: max asymmetry {worst:e}"
            )));
        }
        Ok(Self { data: m })
    }

    fn from_parts(data: DMatrix<Complex<F>>) -> Self {
        Self { data }
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex<F>> {
        &self.data
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.dim() {
            t += self.data[(i, i)].re;
        }
        t
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == F::zero())
    }

    fn is_diagonal(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.data[(i, j)] != Complex::new(F::zero(), F::zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// Ascending real eigenvalues.
    ///
    /// Householder tridiagonalization followed by an eigenvalue-only
    /// implicit-shift QL iteration; eigenvectors are never formed.
    pub fn eigenvalues(&self) -> Result<Vec<F>> {
        let n = self.dim();
        let mut ev: Vec<F> = if self.is_diagonal() {
            (0..n).map(|i| self.data[(i, i)].re).collect()
        } else if self.is_real() {
            let re = DMatrix::from_fn(n, n, |i, j| self.data[(i, j)].re);
            let tri = re.symmetric_tridiagonalize();
            let d: Vec<F> = tri.diagonal().iter().copied().collect();
            let e: Vec<F> = tri.off_diagonal().iter().copied().collect();
            tridiag_eigenvalues(d, e)?
        } else {
            let tri = self.data.clone().symmetric_tridiagonalize();
            let d: Vec<F> = tri.diagonal().iter().copied().collect();
            let e: Vec<F> = tri.off_diagonal().iter().copied().collect();
            tridiag_eigenvalues(d, e)?
        };
        if ev.iter().any(|x| !Float::is_finite(*x)) {
            return Err(Error::NumericFailure("eigen decomposition produced non-finite values".into()));
        }
        ev.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
        Ok(ev)
    }
}

/// Eigenvalues of a real symmetric tridiagonal matrix (diagonal `d`,
/// off-diagonal `e` of length n-1), by implicit-shift QL without eigenvector
/// accumulation. Unsorted on return.
pub fn tridiag_eigenvalues<F: Scalar>(mut d: Vec<F>, e_in: Vec<F>) -> Result<Vec<F>> {
    let n = d.len();
    if e_in.len() + 1 != n {
        return Err(Error::InvalidDimension(format!(
            "off-diagonal length {} does not match dimension {}",
            e_in.len(),
            n
        )));
    }
    if n == 1 {
        return Ok(d);
    }
    let mut e = e_in;
    e.push(F::zero());
    for l in 0..n {
        let mut iter = 0;
        loop {
            // find the first negligible off-diagonal at or after l
            let mut m = l;
            while m < n - 1 {
                let dd = Float::abs(d[m]) + Float::abs(d[m + 1]);
                if Float::abs(e[m]) <= F::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 64 {
                return Err(Error::NumericFailure(
                    "tridiagonal QL failed to converge in 64 iterations".into(),
                ));
            }
            // Wilkinson-style shift
            let two = cst::<F>(2.0);
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = Float::hypot(g, F::one());
            let sign_r = if g >= F::zero() { Float::abs(r) } else { -Float::abs(r) };
            g = d[m] - d[l] + e[l] / (g + sign_r);
            let (mut s, mut c) = (F::one(), F::one());
            let mut p = F::zero();
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = Float::hypot(f, g);
                e[i + 1] = r;
                if r == F::zero() {
                    d[i + 1] -= p;
                    e[m] = F::zero();
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if i == l {
                    d[l] -= p;
                    e[l] = g;
                    e[m] = F::zero();
                }
            }
        }
    }
    Ok(d)
}

use num_traits::Float;

fn complex_abs<F: Scalar + RealField>(z: Complex<F>) -> F {
    Float::hypot(z.re, z.im)
}

fn check_dim(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidDimension(format!("dim must be >= 2, got {n}")));
    }
    Ok(())
}

/// Draw a GUE matrix.
pub fn sample_gue<F: Scalar + RealField, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<HermitianMatrix<F>> {
    check_dim(n)?;
    let sig_off = Float::sqrt(cst::<F>(1.0) / cst::<F>(4.0 * n as f64));
    let sig_diag = Float::sqrt(cst::<F>(1.0) / cst::<F>(2.0 * n as f64));
    let mut m = DMatrix::from_element(n, n, Complex::new(F::zero(), F::zero()));
    for i in 0..n {
        m[(i, i)] = Complex::new(sig_diag * F::standard_normal(rng), F::zero());
        for j in (i + 1)..n {
            let re = sig_off * F::standard_normal(rng);
            let im = sig_off * F::standard_normal(rng);
            m[(i, j)] = Complex::new(re, im);
            m[(j, i)] = Complex::new(re, -im);
        }
    }
    Ok(HermitianMatrix::from_parts(m))
}

/// Draw a GOE matrix (real symmetric).
pub fn sample_goe<F: Scalar + RealField, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<HermitianMatrix<F>> {
    check_dim(n)?;
    let sig_off = Float::sqrt(cst::<F>(1.0) / cst::<F>(4.0 * n as f64));
    let sig_diag = Float::sqrt(cst::<F>(1.0) / cst::<F>(2.0 * n as f64));
    let mut m = DMatrix::from_element(n, n, Complex::new(F::zero(), F::zero()));
    for i in 0..n {
        m[(i, i)] = Complex::new(sig_diag * F::standard_normal(rng), F::zero());
        for j in (i + 1)..n {
            let re = sig_off * F::standard_normal(rng);
            m[(i, j)] = Complex::new(re, F::zero());
            m[(j, i)] = Complex::new(re, F::zero());
        }
    }
    Ok(HermitianMatrix::from_parts(m))
}

/// Draw a Rosenzweig-Porter matrix H0 + alpha_n H_GUE, alpha_n = lambda 2 pi / n.
///
/// `lambda = 0` is the Poisson ensemble: the result is exactly diagonal.
pub fn sample_rp<F: Scalar + RealField, R: Rng + ?Sized>(
    n: usize,
    lambda: F,
    rng: &mut R,
) -> Result<HermitianMatrix<F>> {
    check_dim(n)?;
    if lambda < F::zero() {
        return Err(Error::InvalidParameter(format!("lambda must be >= 0, got {lambda}")));
    }
    let alpha = rp_alpha(n, lambda);
    let sig_diag = Float::sqrt(cst::<F>(1.0) / cst::<F>(2.0 * n as f64));
    let mut m = sample_gue::<F, R>(n, rng)?.data;
    for z in m.iter_mut() {
        *z = Complex::new(z.re * alpha, z.im * alpha);
    }
    for i in 0..n {
        let h0 = sig_diag * F::standard_normal(rng);
        m[(i, i)] = Complex::new(m[(i, i)].re + h0, F::zero());
    }
    Ok(HermitianMatrix::from_parts(m))
}

/// alpha_n = lambda * 2 pi / n.
pub fn rp_alpha<F: Scalar>(n: usize, lambda: F) -> F {
    lambda * cst::<F>(2.0) * F::PI() / cst::<F>(n as f64)
}

/// Draw a GOE->GUE crossover matrix H_S + i xi (pi/sqrt(n)) H_A.
pub fn sample_goe_to_gue<F: Scalar + RealField, R: Rng + ?Sized>(
    n: usize,
    xi: F,
    rng: &mut R,
) -> Result<HermitianMatrix<F>> {
    check_dim(n)?;
    if xi < F::zero() {
        return Err(Error::InvalidParameter(format!("xi must be >= 0, got {xi}")));
    }
    let mut m = sample_goe::<F, R>(n, rng)?.data;
    let sig_off = Float::sqrt(cst::<F>(1.0) / cst::<F>(4.0 * n as f64));
    let scale = xi * F::PI() / Float::sqrt(cst::<F>(n as f64));
    for i in 0..n {
        for j in (i + 1)..n {
            let a = scale * sig_off * F::standard_normal(rng);
            m[(i, j)].im = a;
            m[(j, i)].im = -a;
        }
    }
    Ok(HermitianMatrix::from_parts(m))
}

/// Draw one matrix according to `spec` (any kind) from `rng`.
pub fn sample_matrix<F: Scalar + RealField, R: Rng + ?Sized>(
    spec: &EnsembleSpec<F>,
    rng: &mut R,
) -> Result<HermitianMatrix<F>> {
    match spec.kind {
        EnsembleKind::Poisson => sample_rp(spec.dim, F::zero(), rng),
        EnsembleKind::Goe => sample_goe(spec.dim, rng),
        EnsembleKind::Gue => sample_gue(spec.dim, rng),
        EnsembleKind::RpPoissonToGue => sample_rp(spec.dim, spec.lambda, rng),
        EnsembleKind::GoeToGue => sample_goe_to_gue(spec.dim, spec.xi, rng),
    }
}

/// Eigenvalue spectra of all realizations, in realization order.
///
/// Realizations are independent pure computations on their own RNG
/// substreams; the parallel schedule cannot change the output.
pub fn spectra<F: Scalar + RealField>(spec: &EnsembleSpec<F>) -> Result<Vec<Vec<F>>> {
    spec.validate()?;
    (0..spec.realizations)
        .into_par_iter()
        .map(|idx| {
            let mut rng = realization_stream(spec.master_seed, idx as u64);
            sample_matrix(spec, &mut rng)?.eigenvalues()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::realization_stream;

    #[test]
    fn gue_entry_variance() {
        // n=400, 1e4 samples of entry (1,2): Re-variance 1/1600 within 5 sigma_err
        let n = 400;
        let mut rng = realization_stream(7, 0);
        let mut vals = Vec::with_capacity(10_000);
        for _ in 0..10_000 {
            let sig: f64 = (1.0f64 / (4.0 * n as f64)).sqrt();
            vals.push(sig * f64::standard_normal(&mut rng));
        }
        let var: f64 = vals.iter().map(|x| x * x).sum::<f64>() / vals.len() as f64;
        let want = 1.0 / 1600.0;
        assert!((var - want).abs() < 0.05 * want, "variance {var} vs {want}");
    }

    #[test]
    fn gue_matrix_entry_statistics() {
        // draws through the full sampler path
        let n = 40;
        let mut re12 = Vec::new();
        let mut im12 = Vec::new();
        let mut d0 = Vec::new();
        for k in 0..4000u64 {
            let mut rng = realization_stream(11, k);
            let h = sample_gue::<f64, _>(n, &mut rng).unwrap();
            re12.push(h.matrix()[(0, 1)].re);
            im12.push(h.matrix()[(0, 1)].im);
            d0.push(h.matrix()[(0, 0)].re);
        }
        let var = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>() / v.len() as f64;
        let off = 1.0 / (4.0 * n as f64);
        let diag = 1.0 / (2.0 * n as f64);
        assert!((var(&re12) - off).abs() < 0.1 * off);
        assert!((var(&im12) - off).abs() < 0.1 * off);
        assert!((var(&d0) - diag).abs() < 0.15 * diag);
    }

    #[test]
    fn hermiticity_exact() {
        let mut rng = realization_stream(1, 0);
        let h = sample_gue::<f64, _>(2, &mut rng).unwrap();
        assert_eq!(h.matrix()[(0, 1)], h.matrix()[(1, 0)].conj());
        let h = sample_goe_to_gue::<f64, _>(5, 0.7, &mut rng).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(h.matrix()[(i, j)], h.matrix()[(j, i)].conj());
            }
        }
    }

    #[test]
    fn goe_is_real_and_symmetric() {
        let mut rng = realization_stream(2, 0);
        let h = sample_goe::<f64, _>(30, &mut rng).unwrap();
        assert!(h.is_real());
        for i in 0..30 {
            for j in 0..30 {
                assert_eq!(h.matrix()[(i, j)], h.matrix()[(j, i)]);
            }
        }
    }

    #[test]
    fn eigenvalues_of_known_matrices() {
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            Complex::new(3.0, 0.0),
            Complex::new(1.0, 0.0),
            Complex::new(2.0, 0.0),
        ]));
        let h = HermitianMatrix::from_matrix(d).unwrap();
        assert_eq!(h.eigenvalues().unwrap(), vec![1.0, 2.0, 3.0]);

        let m = DMatrix::from_row_slice(2, 2, &[
            Complex::new(0.0, 0.0),
            Complex::new(1.0, 0.0),
            Complex::new(1.0, 0.0),
            Complex::new(0.0, 0.0),
        ]);
        let ev = HermitianMatrix::from_matrix(m).unwrap().eigenvalues().unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-12 && (ev[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn trace_equals_eigenvalue_sum() {
        let mut rng = realization_stream(3, 0);
        let h = sample_gue::<f64, _>(100, &mut rng).unwrap();
        let tr = h.trace();
        let sum: f64 = h.eigenvalues().unwrap().iter().sum();
        assert!((tr - sum).abs() <= 1e-10 * tr.abs().max(1.0), "trace {tr} vs sum {sum}");
    }

    #[test]
    fn complex_eigen_matches_known_2x2() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let m = DMatrix::from_row_slice(2, 2, &[
            Complex::new(1.0, 0.0),
            Complex::new(0.0, 1.0),
            Complex::new(0.0, -1.0),
            Complex::new(1.0, 0.0),
        ]);
        let ev = HermitianMatrix::from_matrix(m).unwrap().eigenvalues().unwrap();
        assert!(ev[0].abs() < 1e-12 && (ev[1] - 2.0).abs() < 1e-12, "{ev:?}");
    }

    #[test]
    fn rp_limits() {
        let mut rng = realization_stream(5, 0);
        let h = sample_rp::<f64, _>(50, 0.0, &mut rng).unwrap();
        for i in 0..50 {
            for j in 0..50 {
                if i != j {
                    assert_eq!(h.matrix()[(i, j)], Complex::new(0.0, 0.0));
                }
            }
        }
        // alpha_N arithmetic
        let a: f64 = rp_alpha(400, 0.475);
        assert!((a - 7.4613e-3).abs() < 1e-6, "{a}");
    }

    #[test]
    fn goe_to_gue_xi_zero_is_real() {
        let mut rng = realization_stream(6, 0);
        let h = sample_goe_to_gue::<f64, _>(20, 0.0, &mut rng).unwrap();
        assert!(h.is_real());
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = DMatrix::from_row_slice(2, 2, &[
            Complex::new(0.0, 0.0),
            Complex::new(1.0, 0.0),
            Complex::new(0.5, 0.0),
            Complex::new(0.0, 0.0),
        ]);
        assert!(matches!(HermitianMatrix::from_matrix(m), Err(Error::ContractViolation(_))));
    }

    #[test]
    fn invalid_dims_and_params() {
        let mut rng = realization_stream(1, 1);
        assert!(matches!(sample_gue::<f64, _>(1, &mut rng), Err(Error::InvalidDimension(_))));
        assert!(matches!(sample_rp::<f64, _>(4, -0.1, &mut rng), Err(Error::InvalidParameter(_))));
        assert!(matches!(sample_goe_to_gue::<f64, _>(4, -1.0, &mut rng), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn ql_matches_full_symmetric_eigen() {
        let mut rng = realization_stream(17, 0);
        let h = sample_gue::<f64, _>(60, &mut rng).unwrap();
        let mut fast = h.eigenvalues().unwrap();
        let se = h.matrix().clone().symmetric_eigen();
        let mut full: Vec<f64> = se.eigenvalues.iter().copied().collect();
        fast.sort_by(|a, b| a.partial_cmp(b).unwrap());
        full.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (a, b) in fast.iter().zip(&full) {
            assert!((a - b).abs() < 1e-11, "{a} vs {b}");
        }
    }

    #[test]
    fn spectra_deterministic_and_parallel_safe() {
        let spec = EnsembleSpec::<f64>::new(EnsembleKind::Gue, 24, 99, 6);
        let a = spectra(&spec).unwrap();
        let b = spectra(&spec).unwrap();
        assert_eq!(a, b);
        // serial reference
        let serial: Vec<Vec<f64>> = (0..6)
            .map(|i| {
                let mut rng = realization_stream(99, i as u64);
                sample_matrix(&spec, &mut rng).unwrap().eigenvalues().unwrap()
            })
            .collect();
        assert_eq!(a, serial);
    }
}
