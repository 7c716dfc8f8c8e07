//! Special functions needed by the analytic transition curves and the
//! billiard oracle: error functions, the exponential integral Ei, the
//! generalized hypergeometric 2F2(1/2,1;3/2,3/2;x), modified and ordinary
//! Bessel functions, and the sine integral.
//!
//! Everything is series / continued-fraction / asymptotic-expansion based
//! with two-regime switching; relative accuracy is ~1e-12 in f64 except
//! where noted.

use crate::error::{Error, Result};
use crate::scalar::{cst, Scalar};

/// erf(x), via a cancellation-free scaled series for |x| < 1.5 and the
/// continued fraction for erfc beyond.
pub fn erf<F: Scalar>(x: F) -> F {
    if x < F::zero() {
        return -erf(-x);
    }
    if x < cst::<F>(1.5) {
        erf_series(x)
    } else {
        F::one() - erfc_cf(x) * (-x * x).exp()
    }
}

/// Complementary error function erfc(x) = 1 - erf(x).
pub fn erfc<F: Scalar>(x: F) -> F {
    if x < F::zero() {
        return cst::<F>(2.0) - erfc(-x);
    }
    if x < cst::<F>(1.5) {
        F::one() - erf_series(x)
    } else {
        erfc_cf(x) * (-x * x).exp()
    }
}

/// Scaled complement erfcx(x) = exp(x^2) erfc(x); stays finite for large x.
pub fn erfcx<F: Scalar>(x: F) -> F {
    if x < F::zero() {
        // 2 e^{x^2} - erfcx(-x); overflows for x < -26 as the true value does
        return cst::<F>(2.0) * (x * x).exp() - erfcx(-x);
    }
    if x < cst::<F>(1.5) {
        (x * x).exp() * (F::one() - erf_series(x))
    } else {
        erfc_cf(x)
    }
}

/// erf(x) = (2x e^{-x^2}/sqrt(pi)) sum_k (2x^2)^k / (2k+1)!!, all terms positive.
fn erf_series<F: Scalar>(x: F) -> F {
    let two_x2 = cst::<F>(2.0) * x * x;
    let mut term = F::one();
    let mut sum = F::one();
    let mut k = 1usize;
    loop {
        term = term * two_x2 / cst::<F>((2 * k + 1) as f64);
        sum += term;
        if term < sum * F::epsilon() || k > 200 {
            break;
        }
        k += 1;
    }
    cst::<F>(2.0) / F::PI().sqrt() * x * (-x * x).exp() * sum
}

/// Modified-Lentz evaluation of sqrt(pi) e^{x^2} erfc(x) =
/// 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), valid for x >= ~1.
fn erfc_cf<F: Scalar>(x: F) -> F {
    let tiny = cst::<F>(1e-300);
    let mut f = x;
    if f == F::zero() {
        f = tiny;
    }
    let mut c = f;
    let mut d = F::zero();
    for n in 1..500 {
        let a = cst::<F>(n as f64) * cst::<F>(0.5);
        d = x + a * d;
        if d == F::zero() {
            d = tiny;
        }
        c = x + a / c;
        if c == F::zero() {
            c = tiny;
        }
        d = d.recip();
        let delta = c * d;
        f = f * delta;
        if (delta - F::one()).abs() < cst::<F>(1e-16) {
            break;
        }
    }
    f.recip() / F::PI().sqrt()
}

/// Exponential integral Ei(x) for x > 0.
///
/// Power series for x <= 40 (all terms positive on top of gamma + ln x),
/// asymptotic expansion e^x/x sum_k k!/x^k beyond.
pub fn expint_ei<F: Scalar>(x: F) -> Result<F> {
    if !(x > F::zero()) {
        return Err(Error::InvalidParameter(format!("Ei requires x > 0, got {x}")));
    }
    const EULER_GAMMA: f64 = 0.577215664901532860606512090082;
    if x <= cst::<F>(40.0) {
        let mut term = F::one();
        let mut sum = F::zero();
        for k in 1..1000 {
            term = term * x / cst::<F>(k as f64);
            let add = term / cst::<F>(k as f64);
            sum += add;
            if add < (sum.abs() + F::one()) * F::epsilon() {
                break;
            }
        }
        Ok(cst::<F>(EULER_GAMMA) + x.ln() + sum)
    } else {
        // divergent series, truncated at the smallest term
        let mut term = F::one();
        let mut sum = F::one();
        let mut prev = F::one();
        for k in 1..120 {
            term = term * cst::<F>(k as f64) / x;
            if term.abs() > prev.abs() {
                break;
            }
            sum += term;
            prev = term;
            if term.abs() < cst::<F>(1e-18) {
                break;
            }
        }
        Ok(x.exp() / x * sum)
    }
}

/// 2F2(1/2, 1; 3/2, 3/2; x) for x >= 0.
///
/// Power series sum_k x^k / ((2k+1) (3/2)_k) up to x = 50, the integral
/// representation (sqrt(pi)/(2 sqrt(x))) int_0^1 e^{x t^2} erf(sqrt(x) t)/t dt
/// beyond. Overflows (as the function itself does) near x ~ 700; use
/// [`hyp2f2_half_scaled`] there.
pub fn hyp2f2_half<F: Scalar>(x: F) -> Result<F> {
    if x < F::zero() {
        return Err(Error::InvalidParameter(format!("2F2 implemented for x >= 0, got {x}")));
    }
    if x <= cst::<F>(50.0) {
        Ok(hyp2f2_series(x))
    } else {
        Ok(hyp2f2_integral_scaled(x)? * x.exp())
    }
}

/// e^{-x} 2F2(1/2, 1; 3/2, 3/2; x), finite for all x >= 0.
pub fn hyp2f2_half_scaled<F: Scalar>(x: F) -> Result<F> {
    if x < F::zero() {
        return Err(Error::InvalidParameter(format!("2F2 implemented for x >= 0, got {x}")));
    }
    if x <= cst::<F>(50.0) {
        Ok(hyp2f2_series(x) * (-x).exp())
    } else {
        hyp2f2_integral_scaled(x)
    }
}

fn hyp2f2_series<F: Scalar>(x: F) -> F {
    // u_k = x^k / (3/2)_k
    let mut u = F::one();
    let mut sum = F::one();
    for k in 1..2000 {
        u = u * x / (cst::<F>(k as f64) + cst::<F>(0.5));
        let add = u / cst::<F>((2 * k + 1) as f64);
        sum += add;
        if add < sum * F::epsilon() {
            break;
        }
    }
    sum
}

/// e^{-x} 2F2 via the erf integral; the integrand peaks at t = 1 with width
/// ~ 1/sqrt(2x), so only [t_lo, 1] contributes.
fn hyp2f2_integral_scaled<F: Scalar>(x: F) -> Result<F> {
    let t_lo = if x > cst::<F>(45.0) {
        (F::one() - cst::<F>(41.0) / x).max(F::zero()).sqrt()
    } else {
        F::zero()
    };
    let val = crate::quad::integrate(
        |t: F| {
            if t <= F::zero() {
                return (-x).exp() * cst::<F>(2.0) * x.sqrt() / F::PI().sqrt();
            }
            (-x * (F::one() - t * t)).exp() * erf(x.sqrt() * t) / t
        },
        t_lo,
        F::one(),
        cst::<F>(1e-14),
        4000,
    )?;
    Ok(F::PI().sqrt() / (cst::<F>(2.0) * x.sqrt()) * val)
}

/// Modified Bessel function I1(x). Overflows near x ~ 709; see
/// [`bessel_i1_scaled`].
pub fn bessel_i1<F: Scalar>(x: F) -> F {
    if x < F::zero() {
        return -bessel_i1(-x);
    }
    if x <= cst::<F>(15.0) {
        i1_series(x)
    } else {
        i1_asym_scaled(x) * x.exp()
    }
}

/// e^{-|x|} I1(x), finite for all x.
pub fn bessel_i1_scaled<F: Scalar>(x: F) -> F {
    if x < F::zero() {
        return -bessel_i1_scaled(-x);
    }
    if x <= cst::<F>(15.0) {
        i1_series(x) * (-x).exp()
    } else {
        i1_asym_scaled(x)
    }
}

/// ln I1(x) for x > 0, safe for very large arguments.
pub fn ln_bessel_i1<F: Scalar>(x: F) -> F {
    if x <= cst::<F>(15.0) {
        i1_series(x).ln()
    } else {
        x + i1_asym_scaled(x).ln()
    }
}

fn i1_series<F: Scalar>(x: F) -> F {
    let q = x * x * cst::<F>(0.25);
    let mut term = x * cst::<F>(0.5);
    let mut sum = term;
    for k in 1..300 {
        term = term * q / (cst::<F>(k as f64) * cst::<F>((k + 1) as f64));
        sum += term;
        if term < sum * F::epsilon() {
            break;
        }
    }
    sum
}

/// e^{-x} I1(x) ~ (1/sqrt(2 pi x)) sum_k c_k, c_k = c_{k-1} * -(4 - (2k-1)^2)/(8 k x).
fn i1_asym_scaled<F: Scalar>(x: F) -> F {
    let mut c = F::one();
    let mut sum = F::one();
    let mut prev = F::one();
    for k in 1..60 {
        let num = cst::<F>(4.0 - ((2 * k - 1) as f64) * ((2 * k - 1) as f64));
        c = c * -num / (cst::<F>(8.0 * k as f64) * x);
        if c.abs() > prev.abs() {
            break;
        }
        sum += c;
        prev = c;
        if c.abs() < cst::<F>(1e-18) {
            break;
        }
    }
    sum / (cst::<F>(2.0) * F::PI() * x).sqrt()
}

/// Bessel J0.
pub fn bessel_j0<F: Scalar>(x: F) -> F {
    let x = x.abs();
    if x <= cst::<F>(9.0) {
        j_series(0, x)
    } else {
        j_asym(0, x)
    }
}

/// Bessel J1.
pub fn bessel_j1<F: Scalar>(x: F) -> F {
    let s = if x < F::zero() { -F::one() } else { F::one() };
    let x = x.abs();
    s * if x <= cst::<F>(9.0) { j_series(1, x) } else { j_asym(1, x) }
}

/// Bessel J_m for integer order m >= 0 and x >= 0.
///
/// Upward recurrence (stable for x >~ m) or Miller's downward recurrence with
/// normalization for x < m.
pub fn bessel_jn<F: Scalar>(m: u32, x: F) -> F {
    match m {
        0 => return bessel_j0(x),
        1 => return bessel_j1(x),
        _ => {}
    }
    let mf = cst::<F>(m as f64);
    if x <= F::zero() {
        return F::zero();
    }
    if x >= mf {
        // upward recurrence from J0, J1
        let mut jm1 = bessel_j0(x);
        let mut j = bessel_j1(x);
        for k in 1..m {
            let next = cst::<F>(2.0 * k as f64) / x * j - jm1;
            jm1 = j;
            j = next;
        }
        j
    } else {
        jn_miller(m, x)
    }
}

/// Downward recurrence with the sum rule J0 + 2 J2 + 2 J4 + ... = 1.
fn jn_miller<F: Scalar>(m: u32, x: F) -> F {
    let start = (m as usize + 16 + (2.0 * (m as f64).sqrt()) as usize) | 1; // odd start
    let big = cst::<F>(1e250);
    let scale = cst::<F>(1e-250);
    let mut jp = F::zero();
    let mut j = cst::<F>(1e-30);
    let mut norm = F::zero();
    let mut out = F::zero();
    let mut out_set = false;
    for k in (1..=start).rev() {
        let jm = cst::<F>(2.0 * k as f64) / x * j - jp;
        jp = j;
        j = jm;
        if j.abs() > big {
            j = j * scale;
            jp = jp * scale;
            norm = norm * scale;
            if out_set {
                out = out * scale;
            }
        }
        if (k - 1) % 2 == 0 && k > 1 {
            norm += j; // accumulates J_{k-1} for even k-1 > 0
        }
        if (k - 1) as u32 == m {
            out = j;
            out_set = true;
        }
    }
    // j now holds unnormalized J0
    out / (cst::<F>(2.0) * norm + j)
}

/// Power series around 0 for J0/J1, |x| <= 9.
fn j_series<F: Scalar>(nu: u32, x: F) -> F {
    let q = x * x * cst::<F>(0.25);
    let mut term = if nu == 0 { F::one() } else { x * cst::<F>(0.5) };
    let mut sum = term;
    for k in 1..400 {
        term = term * -q / (cst::<F>(k as f64) * cst::<F>((k + nu as usize) as f64));
        sum += term;
        if term.abs() < sum.abs().max(F::one()) * F::epsilon() {
            break;
        }
    }
    sum
}

/// Hankel asymptotic expansion for J_nu, x > 9.
fn j_asym<F: Scalar>(nu: u32, x: F) -> F {
    let mu = cst::<F>(4.0 * (nu as f64) * (nu as f64));
    let mut c = F::one();
    let mut p = F::one();
    let mut q = F::zero();
    let mut prev = F::max_value();
    for j in 1..40 {
        let odd = cst::<F>(((2 * j - 1) as f64) * ((2 * j - 1) as f64));
        c = c * (mu - odd) / (cst::<F>(j as f64) * cst::<F>(8.0) * x);
        if c.abs() > prev {
            break;
        }
        prev = c.abs();
        match j % 4 {
            1 => q += c,
            2 => p -= c,
            3 => q -= c,
            _ => p += c,
        }
        if c.abs() < cst::<F>(1e-18) {
            break;
        }
    }
    let chi = x - (cst::<F>(2.0 * nu as f64) + F::one()) * F::FRAC_PI_4();
    (cst::<F>(2.0) / (F::PI() * x)).sqrt() * (chi.cos() * p - chi.sin() * q)
}

/// Sine integral Si(x) = int_0^x sin(t)/t dt.
///
/// Series to x = 22, asymptotic auxiliary expansion beyond; absolute accuracy
/// bottoms out near 2e-9 at the crossover.
pub fn sine_integral<F: Scalar>(x: F) -> F {
    if x < F::zero() {
        return -sine_integral(-x);
    }
    if x <= cst::<F>(22.0) {
        let x2 = x * x;
        let mut term = x;
        let mut sum = x;
        for k in 1..120 {
            let k2 = cst::<F>((2 * k) as f64);
            let k3 = cst::<F>((2 * k + 1) as f64);
            term = term * -x2 / (k2 * k3);
            sum += term / k3;
            if term.abs() < cst::<F>(1e-18) {
                break;
            }
        }
        sum
    } else {
        // Si = pi/2 - f(x) cos x - g(x) sin x
        let x2 = x * x;
        let (mut f, mut g) = (F::one(), F::one());
        let (mut tf, mut tg) = (F::one(), F::one());
        let mut prev_f = F::max_value();
        for k in 1..40 {
            tf = tf * -cst::<F>(((2 * k - 1) * (2 * k)) as f64) / x2;
            tg = tg * -cst::<F>(((2 * k) * (2 * k + 1)) as f64) / x2;
            if tf.abs() > prev_f {
                break;
            }
            prev_f = tf.abs();
            f += tf;
            g += tg;
        }
        F::FRAC_PI_2() - f / x * x.cos() - g / x2 * x.sin()
    }
}
