//! Floating-point abstraction for the numerical kernels.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Floating point scalar: `f32` or `f64`.
///
/// Everything numeric in this crate is written against this trait. The
/// accuracy figures quoted in the documentation assume `f64`; `f32` works but
/// the special functions bottom out near 1e-6.
pub trait Scalar:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + num_traits::NumAssign
    + rustfft::FftNum
    + std::fmt::Display
    + std::fmt::LowerExp
    + Send
    + Sync
    + 'static
{
    /// One standard-normal draw.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn to_f64_c(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }
}

impl Scalar for f32 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

impl Scalar for f64 {
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

/// An `f64` constant as `F`. Exact for `f64`, rounded for `f32`.
#[inline]
pub fn cst<F: Scalar>(x: f64) -> F {
    F::from_f64(x).expect("finite constant")
}

/// `usize` as `F`.
#[inline]
pub fn cint<F: Scalar>(n: usize) -> F {
    F::from_usize(n).expect("integer fits scalar")
}
