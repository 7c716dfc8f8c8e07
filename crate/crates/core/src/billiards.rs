//! Closed-form reference spectra for integrable billiards.
//!
//! The circular Dirichlet billiard doubles as a microwave-cavity model below
//! the cutoff frequency: eigenfrequencies are f = c j_{m,n} / (2 pi R) with
//! j_{m,n} the Bessel-J zeros, and classical periodic orbits are the (m, n)
//! polygon stars of length 2 n R sin(pi m / n). Both are used as independent
//! oracles for the unfolding and length-spectrum estimators.

use crate::error::{Error, Result};
use crate::scalar::{cst, Scalar};
use crate::special::bessel_jn;
use num_traits::Float;

/// Speed of light in m * GHz (meters per nanosecond).
pub const SPEED_OF_LIGHT_M_GHZ: f64 = 0.299792458;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BilliardShape {
    CircleDirichlet,
}

/// Billiard geometry; lengths in meters.
#[derive(Debug, Clone, Copy)]
pub struct BilliardGeometry<F> {
    pub shape: BilliardShape,
    pub radius_m: F,
    /// Constant offset of the Weyl formula; fitted downstream unless known.
    pub n0: F,
}

impl<F: Scalar> BilliardGeometry<F> {
    pub fn circle(radius_m: F) -> Result<Self> {
        if !(radius_m > F::zero()) {
            return Err(Error::InvalidParameter(format!("radius must be positive, got {radius_m}")));
        }
        Ok(Self { shape: BilliardShape::CircleDirichlet, radius_m, n0: F::zero() })
    }

    pub fn area_m2(&self) -> F {
        F::PI() * self.radius_m * self.radius_m
    }

    pub fn perimeter_m(&self) -> F {
        cst::<F>(2.0) * F::PI() * self.radius_m
    }

    /// Smooth counting function: Weyl's law for a 2-D Dirichlet billiard,
    /// N(f) = A pi f^2/c^2 - L f/(2c) + n0, with f in GHz.
    pub fn weyl_n(&self, f_ghz: F) -> F {
        let c = cst::<F>(SPEED_OF_LIGHT_M_GHZ);
        self.area_m2() * F::PI() * f_ghz * f_ghz / (c * c)
            - self.perimeter_m() * f_ghz / (cst::<F>(2.0) * c)
            + self.n0
    }

    /// Smooth level density in wave number k = 2 pi f / c (units 1/m):
    /// rho(k) = A k/(2 pi) - L/(4 pi).
    pub fn weyl_density_k(&self, k: F) -> F {
        self.area_m2() * k / (cst::<F>(2.0) * F::PI()) - self.perimeter_m() / (cst::<F>(4.0) * F::PI())
    }
}

/// All zeros of J_m in (0, x_max], ascending, to ~1e-12 relative.
///
/// Sign-scan with step 0.5 (consecutive zeros are separated by at least ~2.9)
/// followed by bisection.
pub fn bessel_zeros_upto<F: Scalar>(m: u32, x_max: F) -> Vec<F> {
    let mut zeros = Vec::new();
    // J_m > 0 on (0, j_{m,1}); start just above the order
    let mut x = if m == 0 { cst::<F>(0.5) } else { cst::<F>(m as f64) };
    let step = cst::<F>(0.5);
    let mut f_prev = bessel_jn(m, x);
    while x < x_max {
        let x_next = x + step;
        let f_next = bessel_jn(m, x_next);
        if f_prev == F::zero() {
            zeros.push(x);
        } else if f_prev.signum() != f_next.signum() && f_next != F::zero() {
            let z = bisect_jm(m, x, x_next, f_prev);
            if z <= x_max {
                zeros.push(z);
            }
        }
        x = x_next;
        f_prev = f_next;
    }
    zeros
}

fn bisect_jm<F: Scalar>(m: u32, mut a: F, mut b: F, f_a: F) -> F {
    let mut sign_a = f_a.signum();
    for _ in 0..200 {
        let mid = (a + b) * cst::<F>(0.5);
        if (b - a) <= cst::<F>(1e-12) * mid {
            return mid;
        }
        let fm = bessel_jn(m, mid);
        if fm == F::zero() {
            return mid;
        }
        if fm.signum() == sign_a {
            a = mid;
            sign_a = fm.signum();
        } else {
            b = mid;
        }
    }
    (a + b) * cst::<F>(0.5)
}

/// Dirichlet eigenfrequencies of the circle billiard up to `f_max_ghz`,
/// ascending; angular orders m > 0 appear twice (degeneracy).
pub fn circle_eigenfrequencies<F: Scalar>(geom: &BilliardGeometry<F>, f_max_ghz: F) -> Result<Vec<F>> {
    if !(f_max_ghz > F::zero()) {
        return Err(Error::InvalidParameter(format!("f_max must be positive, got {f_max_ghz}")));
    }
    let c = cst::<F>(SPEED_OF_LIGHT_M_GHZ);
    let two_pi = cst::<F>(2.0) * F::PI();
    let k_max = two_pi * geom.radius_m * f_max_ghz / c;
    if k_max > cst::<F>(140.0) {
        return Err(Error::InvalidParameter(format!(
            "Bessel-zero enumeration limited to 2 pi R f / c <= 140, got {k_max}"
        )));
    }
    let to_freq = c / (two_pi * geom.radius_m);
    let mut freqs = Vec::new();
    let mut m = 0u32;
    loop {
        let zeros = bessel_zeros_upto(m, k_max);
        if zeros.is_empty() {
            break; // j_{m,1} grows with m: no zeros here means none beyond
        }
        for z in zeros {
            let f = z * to_freq;
            freqs.push(f);
            if m > 0 {
                freqs.push(f);
            }
        }
        m += 1;
    }
    freqs.sort_by(|a, b| a.partial_cmp(b).expect("finite frequencies"));
    Ok(freqs)
}

/// Primitive periodic orbits (winding m, bounces n) of the circle billiard
/// with length <= l_max: L = 2 n R sin(pi m / n), n >= 2m, gcd(m, n) = 1.
/// Sorted by length, deduplicated.
pub fn periodic_orbit_lengths<F: Scalar>(
    geom: &BilliardGeometry<F>,
    l_max_m: F,
) -> Result<Vec<(F, (u32, u32))>> {
    if !(l_max_m > F::zero()) {
        return Err(Error::InvalidParameter(format!("l_max must be positive, got {l_max_m}")));
    }
    let two_r = cst::<F>(2.0) * geom.radius_m;
    // Orbit families accumulate at the whispering-gallery limit L -> 2 pi m R
    // as n grows at fixed winding m, so the bounce count must be capped; 64
    // bounces is far below any realistic length-spectrum resolution.
    const N_MAX_BOUNCES: u32 = 64;
    let mut orbits: Vec<(F, (u32, u32))> = Vec::new();
    for n in 2..=N_MAX_BOUNCES {
        for m in 1..=(n / 2) {
            if gcd(m, n) != 1 {
                continue;
            }
            let len = two_r * cst::<F>(n as f64) * Float::sin(F::PI() * cst::<F>(m as f64) / cst::<F>(n as f64));
            if len <= l_max_m {
                orbits.push((len, (m, n)));
            }
        }
    }
    orbits.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite lengths"));
    orbits.dedup_by(|a, b| Float::abs(a.0 - b.0) < cst::<F>(1e-12) * b.0);
    Ok(orbits)
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}
