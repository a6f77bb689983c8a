use primorbit_core::chars::*;
use primorbit_core::rootsys::*;
use std::time::Instant;

fn main() {
    let e6 = RootSystem::new(SimpleType::parse("E6").unwrap());
    let w1 = |s: i64| {
        let mut c = vec![0i64; 6];
        c[0] = s;
        DominantWeight::new(c)
    };
    let t0 = Instant::now();
    let d = tensor_decompose(&e6, &w1(1), &w1(1));
    println!("E6 w1 x w1 = {:?} ({:?})", d.entries.iter().map(|(w, m)| (w.coords.clone(), *m)).collect::<Vec<_>>(), t0.elapsed());
    let t0 = Instant::now();
    for s in 0..=4i64 {
        for t in 0..=(4 - s) {
            let d = tensor_decompose(&e6, &w1(s), &w1(t));
            let f = e6_fastpath(s, t);
            assert_eq!(d, f, "s={} t={}", s, t);
        }
    }
    println!("fastpath equality s+t<=4 OK ({:?})", t0.elapsed());
    let t0 = Instant::now();
    let mu = DominantWeight::new(vec![1, 0, 3, 0, 1, 0]);
    let c = lr_coefficient(&e6, &[w1(4), w1(4), w1(3)], &mu);
    println!("c^mu_(4w1,4w1,3w1) = {} ({:?})", c, t0.elapsed());
}
