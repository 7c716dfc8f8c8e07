//! Histogram, ECDF, least-squares and 1-D search utilities shared by the
//! estimator and inference modules.

use crate::error::{Error, Result};
use crate::scalar::{cint, cst, Scalar};

/// Normalized density histogram on [lo, hi) with equal bins.
///
/// Returns (bin centers, density values, per-bin standard errors). Counts
/// outside the range are dropped; the density integrates to (kept/total).
pub fn density_histogram<F: Scalar>(samples: &[F], lo: F, hi: F, bins: usize) -> Result<(Vec<F>, Vec<F>, Vec<F>)> {
    if bins == 0 || !(hi > lo) {
        return Err(Error::InvalidParameter("histogram needs bins >= 1 and hi > lo".into()));
    }
    if samples.is_empty() {
        return Err(Error::InsufficientData("histogram of empty sample".into()));
    }
    let width = (hi - lo) / cint::<F>(bins);
    let mut counts = vec![0usize; bins];
    for &x in samples {
        if x >= lo && x < hi {
            let mut b = ((x - lo) / width).to_usize().unwrap_or(0);
            if b >= bins {
                b = bins - 1;
            }
            counts[b] += 1;
        }
    }
    let n = cint::<F>(samples.len());
    let norm = (n * width).recip();
    let centers = (0..bins).map(|b| lo + width * (cint::<F>(b) + cst(0.5))).collect();
    let values = counts.iter().map(|&c| cint::<F>(c) * norm).collect();
    let errs = counts.iter().map(|&c| Float::sqrt(cint::<F>(c)) * norm).collect();
    Ok((centers, values, errs))
}

use num_traits::Float;

/// Empirical CDF of `sorted` evaluated at `x` (right-continuous).
pub fn ecdf<F: Scalar>(sorted: &[F], x: F) -> F {
    let mut lo = 0usize;
    let mut hi = sorted.len();
    while lo < hi {
        let mid = (lo + hi) / 2;
        if sorted[mid] <= x {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    cint::<F>(lo) / cint::<F>(sorted.len())
}

/// Kolmogorov-Smirnov sup-distance of a sorted sample to a model CDF.
pub fn ks_distance<F: Scalar>(sorted: &[F], cdf: impl Fn(F) -> F) -> F {
    let n = cint::<F>(sorted.len());
    let mut worst = F::zero();
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        let hi = cint::<F>(i + 1) / n - f;
        let lo = f - cint::<F>(i) / n;
        worst = Float::max(worst, Float::max(Float::abs(hi), Float::abs(lo)));
    }
    worst
}

pub fn mean<F: Scalar>(xs: &[F]) -> F {
    xs.iter().fold(F::zero(), |a, &b| a + b) / cint::<F>(xs.len())
}

pub fn variance<F: Scalar>(xs: &[F]) -> F {
    let m = mean(xs);
    xs.iter().fold(F::zero(), |a, &b| a + (b - m) * (b - m)) / cint::<F>(xs.len())
}

/// Ordinary least squares y = a + b x; returns (a, b).
pub fn linear_fit<F: Scalar>(x: &[F], y: &[F]) -> Result<(F, F)> {
    if x.len() != y.len() || x.len() < 2 {
        return Err(Error::InsufficientData("linear fit needs >= 2 points".into()));
    }
    let mx = mean(x);
    let my = mean(y);
    let mut sxx = F::zero();
    let mut sxy = F::zero();
    for (&xi, &yi) in x.iter().zip(y) {
        sxx += (xi - mx) * (xi - mx);
        sxy += (xi - mx) * (yi - my);
    }
    if sxx == F::zero() {
        return Err(Error::DegenerateFit("zero abscissa variance".into()));
    }
    let b = sxy / sxx;
    Ok((my - b * mx, b))
}

/// Least-squares polynomial fit of given degree; abscissa is centered and
/// scaled internally. Returned object evaluates p(x) and p'(x).
#[derive(Debug, Clone)]
pub struct PolyFit<F> {
    /// coefficients in the scaled variable t = (x - shift)/scale, ascending
    coeffs: Vec<F>,
    shift: F,
    scale: F,
}

impl<F: Scalar> PolyFit<F> {
    pub fn fit(x: &[F], y: &[F], degree: usize) -> Result<Self> {
        let n = x.len();
        if n != y.len() || n < degree + 1 {
            return Err(Error::InsufficientData(format!(
                "degree-{degree} fit needs at least {} points, got {n}",
                degree + 1
            )));
        }
        let shift = mean(x);
        let sd = Float::sqrt(variance(x));
        let scale = if sd > F::zero() { sd } else { F::one() };
        let dim = degree + 1;
        // normal equations in the scaled variable
        let mut ata = vec![vec![F::zero(); dim]; dim];
        let mut atb = vec![F::zero(); dim];
        for (&xi, &yi) in x.iter().zip(y) {
            let t = (xi - shift) / scale;
            let mut pow = vec![F::one(); dim];
            for k in 1..dim {
                pow[k] = pow[k - 1] * t;
            }
            for i in 0..dim {
                atb[i] += pow[i] * yi;
                for j in 0..dim {
                    ata[i][j] += pow[i] * pow[j];
                }
            }
        }
        let coeffs = gauss_solve(&mut ata, &mut atb)?;
        Ok(Self { coeffs, shift, scale })
    }

    pub fn eval(&self, x: F) -> F {
        let t = (x - self.shift) / self.scale;
        let mut acc = F::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self, x: F) -> F {
        let t = (x - self.shift) / self.scale;
        let mut acc = F::zero();
        for (k, &c) in self.coeffs.iter().enumerate().skip(1).rev() {
            acc = acc * t + c * cint::<F>(k);
        }
        acc / self.scale
    }
}

/// Solve A x = b by Gaussian elimination with partial pivoting (small dense
/// systems only).
fn gauss_solve<F: Scalar>(a: &mut [Vec<F>], b: &mut [F]) -> Result<Vec<F>> {
    let n = b.len();
    for col in 0..n {
        let mut piv = col;
        for r in (col + 1)..n {
            if Float::abs(a[r][col]) > Float::abs(a[piv][col]) {
                piv = r;
            }
        }
        if Float::abs(a[piv][col]) < cst::<F>(1e-300) {
            return Err(Error::DegenerateFit("singular normal equations".into()));
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in (col + 1)..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
            let bv = b[col];
            b[r] -= f * bv;
        }
    }
    let mut x = vec![F::zero(); n];
    for row in (0..n).rev() {
        let mut s = b[row];
        for c in (row + 1)..n {
            s -= a[row][c] * x[c];
        }
        x[row] = s / a[row][row];
    }
    Ok(x)
}

/// Golden-section minimization of a unimodal function on [a, b].
/// Returns (argmin, min). The objective must be finite on the interval.
pub fn golden_section_min<F: Scalar>(f: impl Fn(F) -> F, a: F, b: F, xtol: F) -> (F, F) {
    let inv_phi = cst::<F>(0.618_033_988_749_894_8);
    let (mut a, mut b) = (a, b);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a) > xtol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let xm = (a + b) * cst::<F>(0.5);
    let fm = f(xm);
    if fc < fm && fc < fd {
        (c, fc)
    } else if fd < fm {
        (d, fd)
    } else {
        (xm, fm)
    }
}

/// Piecewise-linear interpolation through strictly increasing knots.
pub fn interp_linear<F: Scalar>(xs: &[F], ys: &[F], x: F) -> F {
    debug_assert_eq!(xs.len(), ys.len());
    if x <= xs[0] {
        return ys[0];
    }
    if x >= xs[xs.len() - 1] {
        return ys[ys.len() - 1];
    }
    let mut i = 1;
    while xs[i] < x {
        i += 1;
    }
    let t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    ys[i - 1] + t * (ys[i] - ys[i - 1])
}
