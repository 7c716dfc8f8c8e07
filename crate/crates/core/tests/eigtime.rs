use rmtlab_core::ensembles::{sample_gue, sample_goe};
use rmtlab_core::rng::realization_stream;

#[test]
#[ignore]
fn eig_timing() {
    let mut rng = realization_stream(0, 0);
    let h = sample_gue::<f64, _>(400, &mut rng).unwrap();
    let t0 = std::time::Instant::now();
    let ev = h.eigenvalues().unwrap();
    println!("complex 400: {:?} (ev[0]={})", t0.elapsed(), ev[0]);
    let h = sample_goe::<f64, _>(400, &mut rng).unwrap();
    let t0 = std::time::Instant::now();
    let ev = h.eigenvalues().unwrap();
    println!("real 400: {:?} (ev[0]={})", t0.elapsed(), ev[0]);
    let h = sample_gue::<f64, _>(200, &mut rng).unwrap();
    let t0 = std::time::Instant::now();
    let _ = h.eigenvalues().unwrap();
    println!("complex 200: {:?}", t0.elapsed());
}
