//! Unfolding: mapping raw level sequences to mean spacing one.
//!
//! Two smooth-staircase models are supported: Weyl's law for billiard
//! eigenfrequencies (with the constant offset fitted) and a low-order
//! polynomial fitted to the empirical counting function, the standard choice
//! for matrix spectra.

use crate::billiards::BilliardGeometry;
use crate::error::{Error, Result};
use crate::scalar::{cint, cst, Scalar};
use crate::stats::PolyFit;
use num_traits::Float;

/// A raw, ascending level sequence (GHz for measurements, dimensionless for
/// matrix eigenvalues).
#[derive(Debug, Clone)]
pub struct RawSpectrum<F> {
    levels: Vec<F>,
    pub source: String,
}

impl<F: Scalar> RawSpectrum<F> {
    /// Validates ordering (non-decreasing; exact degeneracies allowed) and a
    /// minimum length of 10.
    pub fn new(levels: Vec<F>, source: impl Into<String>) -> Result<Self> {
        if levels.len() < 10 {
            return Err(Error::InsufficientData(format!(
                "spectrum needs at least 10 levels, got {}",
                levels.len()
            )));
        }
        for w in levels.windows(2) {
            if !(w[1] >= w[0]) {
                return Err(Error::DegenerateInput("levels must be ascending".into()));
            }
        }
        Ok(Self { levels, source: source.into() })
    }

    pub fn levels(&self) -> &[F] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Central fraction of the spectrum (e.g. 0.6 drops 20% at each edge).
    pub fn central(&self, keep_frac: F) -> Result<Self> {
        if !(keep_frac > F::zero() && keep_frac <= F::one()) {
            return Err(Error::InvalidParameter("keep fraction must be in (0, 1]".into()));
        }
        let n = self.levels.len();
        let drop = ((F::one() - keep_frac) * cst::<F>(0.5) * cint::<F>(n))
            .round()
            .to_usize()
            .unwrap_or(0);
        let kept = self.levels[drop..n - drop].to_vec();
        Self::new(kept, self.source.clone())
    }

    /// Strictly increasing copy: exact degeneracies are split by 1e-9 of the
    /// mean spacing so downstream estimators see strict ordering.
    fn strictly_increasing(&self) -> Vec<F> {
        let n = self.levels.len();
        let span = self.levels[n - 1] - self.levels[0];
        let nudge = cst::<F>(1e-9) * span / cint::<F>(n - 1);
        let mut out = self.levels.clone();
        for i in 1..n {
            if out[i] <= out[i - 1] {
                out[i] = out[i - 1] + nudge;
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnfoldingMethod {
    Weyl,
    Polynomial(u32),
    /// Levels were already unfolded by an external (analytic) mean staircase.
    Analytic,
}

/// Ascending levels with mean spacing ~1.
#[derive(Debug, Clone)]
pub struct UnfoldedSpectrum<F> {
    pub epsilons: Vec<F>,
    pub method: UnfoldingMethod,
    pub warnings: Vec<String>,
}

impl<F: Scalar> UnfoldedSpectrum<F> {
    /// Wrap a sequence that is already on the unfolded scale.
    pub fn from_unfolded(epsilons: Vec<F>) -> Result<Self> {
        if epsilons.len() < 2 {
            return Err(Error::InsufficientData("need at least 2 levels".into()));
        }
        Ok(Self { epsilons, method: UnfoldingMethod::Analytic, warnings: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.epsilons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.epsilons.is_empty()
    }

    pub fn mean_spacing(&self) -> F {
        let n = self.epsilons.len();
        (self.epsilons[n - 1] - self.epsilons[0]) / cint::<F>(n - 1)
    }

    pub fn spacings(&self) -> Vec<F> {
        self.epsilons.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

/// Weyl-formula unfolding for billiard eigenfrequencies in GHz. The constant
/// offset n0 is fitted by least squares against the empirical staircase
/// N(f_i) = i - 1/2.
pub fn unfold_weyl<F: Scalar>(raw: &RawSpectrum<F>, geom: &BilliardGeometry<F>) -> Result<UnfoldedSpectrum<F>> {
    let levels = raw.strictly_increasing();
    // n0 enters linearly: residual mean is the least-squares solution
    let mut resid = F::zero();
    for (i, &f) in levels.iter().enumerate() {
        resid += cint::<F>(i) + cst::<F>(0.5) - geom.weyl_n(f);
    }
    let n0_fit = geom.n0 + resid / cint::<F>(levels.len());
    let mut g = *geom;
    g.n0 = n0_fit;
    let epsilons: Vec<F> = levels.iter().map(|&f| g.weyl_n(f)).collect();
    let mut out = UnfoldedSpectrum { epsilons, method: UnfoldingMethod::Weyl, warnings: Vec::new() };
    check_mean_spacing(&mut out);
    Ok(out)
}

/// Polynomial unfolding: fit the empirical counting function with a degree-2
/// or degree-3 polynomial and evaluate it at the levels.
pub fn unfold_polynomial<F: Scalar>(raw: &RawSpectrum<F>, degree: u32) -> Result<UnfoldedSpectrum<F>> {
    if !(degree == 2 || degree == 3) {
        return Err(Error::InvalidParameter(format!("polynomial degree must be 2 or 3, got {degree}")));
    }
    let levels = raw.strictly_increasing();
    let staircase: Vec<F> = (0..levels.len()).map(|i| cint::<F>(i) + cst::<F>(0.5)).collect();
    let fit = PolyFit::fit(&levels, &staircase, degree as usize)?;
    // the fitted mean staircase must be monotone over the data range
    for &f in &levels {
        if fit.derivative(f) <= F::zero() {
            return Err(Error::DegenerateFit(format!(
                "fitted degree-{degree} staircase is non-monotone at {f}"
            )));
        }
    }
    let epsilons: Vec<F> = levels.iter().map(|&f| fit.eval(f)).collect();
    let mut out = UnfoldedSpectrum { epsilons, method: UnfoldingMethod::Polynomial(degree), warnings: Vec::new() };
    check_mean_spacing(&mut out);
    Ok(out)
}

/// Standard pipeline for matrix-ensemble spectra: keep the central fraction
/// (default 0.6), then degree-2 polynomial unfolding.
pub fn unfold_matrix_spectrum<F: Scalar>(eigenvalues: &[F], keep_frac: F) -> Result<UnfoldedSpectrum<F>> {
    let raw = RawSpectrum::new(eigenvalues.to_vec(), "matrix-spectrum")?.central(keep_frac)?;
    unfold_polynomial(&raw, 2)
}

fn check_mean_spacing<F: Scalar>(u: &mut UnfoldedSpectrum<F>) {
    let ms = u.mean_spacing();
    if Float::abs(ms - F::one()) > cst::<F>(0.5) {
        u.warnings.push(format!(
            "mean unfolded spacing {ms} far from 1; check units and staircase model"
        ));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::billiards::{circle_eigenfrequencies, BilliardGeometry};
    use crate::ensembles::{sample_gue, EnsembleKind, EnsembleSpec};
    use crate::rng::realization_stream;

    #[test]
    fn weyl_unfolding_of_circle_oracle() {
        let geom = BilliardGeometry::circle(0.25f64).unwrap();
        let freqs = circle_eigenfrequencies(&geom, 10.0).unwrap();
        let raw = RawSpectrum::new(freqs, "circle").unwrap();
        let u = unfold_weyl(&raw, &geom).unwrap();
        assert!((u.mean_spacing() - 1.0).abs() < 0.02, "{}", u.mean_spacing());
        assert!(u.warnings.is_empty());
    }

    #[test]
    fn weyl_unfolding_flags_unit_mismatch() {
        let geom = BilliardGeometry::circle(0.25f64).unwrap();
        let freqs = circle_eigenfrequencies(&geom, 10.0).unwrap();
        // pretend the file was in Hz-scaled units
        let wrong: Vec<f64> = freqs.iter().map(|f| f * 1e3).collect();
        let raw = RawSpectrum::new(wrong, "circle-mhz").unwrap();
        let u = unfold_weyl(&raw, &geom).unwrap();
        assert!(!u.warnings.is_empty());
    }

    #[test]
    fn linear_staircase_is_identity() {
        let levels: Vec<f64> = (0..200).map(|i| i as f64 + 0.5).collect();
        let raw = RawSpectrum::new(levels.clone(), "synthetic").unwrap();
        let u = unfold_polynomial(&raw, 2).unwrap();
        for (e, l) in u.epsilons.iter().zip(&levels) {
            assert!((e - l).abs() < 1e-9, "{e} vs {l}");
        }
    }

    #[test]
    fn gue_spectrum_unfolds_to_unit_spacing() {
        let spec = EnsembleSpec::<f64>::new(EnsembleKind::Gue, 400, 31, 1);
        let mut rng = realization_stream(spec.master_seed, 0);
        let ev = sample_gue::<f64, _>(spec.dim, &mut rng).unwrap().eigenvalues().unwrap();
        let u = unfold_matrix_spectrum(&ev, 0.6).unwrap();
        assert_eq!(u.len(), 240);
        assert!((u.mean_spacing() - 1.0).abs() < 0.02, "{}", u.mean_spacing());
    }

    #[test]
    fn constant_shift_leaves_spacings_invariant() {
        let geom = BilliardGeometry::circle(0.25f64).unwrap();
        let freqs = circle_eigenfrequencies(&geom, 8.0).unwrap();
        let raw = RawSpectrum::new(freqs.clone(), "a").unwrap();
        let shifted: Vec<f64> = freqs.iter().map(|f| f + 1e-3).collect();
        let raw2 = RawSpectrum::new(shifted, "b").unwrap();
        let u1 = unfold_weyl(&raw, &geom).unwrap();
        let u2 = unfold_weyl(&raw2, &geom).unwrap();
        let s1 = u1.spacings();
        let s2 = u2.spacings();
        for (a, b) in s1.iter().zip(&s2) {
            assert!((a - b).abs() < 1e-3, "{a} vs {b}");
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(RawSpectrum::new(vec![1.0f64; 5], "short").is_err());
        assert!(RawSpectrum::new(vec![1.0f64, 0.5, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0], "unsorted").is_err());
        let ok: Vec<f64> = (0..20).map(|i| i as f64).collect();
        let raw = RawSpectrum::new(ok, "x").unwrap();
        assert!(unfold_polynomial(&raw, 5).is_err());
    }

    #[test]
    fn degenerate_levels_are_split() {
        let mut levels: Vec<f64> = (0..30).map(|i| i as f64).collect();
        levels[10] = levels[9]; // exact degeneracy
        let raw = RawSpectrum::new(levels, "degen").unwrap();
        let u = unfold_polynomial(&raw, 2).unwrap();
        for w in u.epsilons.windows(2) {
            assert!(w[1] > w[0]);
        }
    }
}
