use rmtlab_core::ensembles::sample_gue;
use rmtlab_core::rng::realization_stream;

#[test]
#[ignore]
fn tridiag_timing() {
    let mut rng = realization_stream(0, 0);
    let h = sample_gue::<f64, _>(400, &mut rng).unwrap();
    let m = h.matrix().clone();
    let t0 = std::time::Instant::now();
    let tri = m.symmetric_tridiagonalize();
    println!("tridiagonalize complex 400: {:?}", t0.elapsed());
    let d = tri.diagonal();
    let e = tri.off_diagonal();
    println!("d[0]={:?} e[0]={:?} (is off-diagonal complex?)", d[0], e[0]);
}
