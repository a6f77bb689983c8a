use primorbit_core::chars::*;
use primorbit_core::rootsys::*;

fn dw(c: &[i64]) -> DominantWeight { DominantWeight::new(c.to_vec()) }

fn main() {
    let e6 = RootSystem::new(SimpleType::parse("E6").unwrap());
    let w = |i: usize, s: i64| {
        let mut c = vec![0i64; 6];
        c[i - 1] = s;
        dw(&c)
    };
    let mu = dw(&[1, 0, 3, 0, 1, 0]);
    for cand in [
        dw(&[1, 0, 3, 0, 1, 0]),
        dw(&[0, 0, 1, 0, 3, 1]),
        dw(&[1, 0, 0, 3, 0, 1]),
        dw(&[1, 0, 1, 0, 3, 0]),
        dw(&[0, 0, 3, 0, 1, 1]),
    ] {
        let c = lr_coefficient(&e6, &[w(1, 4), w(1, 4), w(1, 3)], &cand);
        println!("c^{:?}_(4w1,4w1,3w1) = {}", cand.coords, c);
    }
    // endpoint variants of the tuple
    for (a, b, c3) in [(1usize, 1usize, 6usize), (1, 6, 1), (6, 6, 1), (1, 6, 6)] {
        let c = lr_coefficient(&e6, &[w(a, 4), w(b, 4), w(c3, 3)], &mu);
        println!("c^mu_(4w{},4w{},3w{}) = {}", a, b, c3, c);
    }
    // scaling scan
    for n1 in 0..=5i64 {
        for n2 in 0..=n1 {
            for n3 in 0..=5i64 {
                let c = lr_coefficient(&e6, &[w(1, n1), w(1, n2), w(1, n3)], &mu);
                if c == 2 {
                    println!("scaling ({}, {}, {}) gives 2", n1, n2, n3);
                }
            }
        }
    }
    println!("scan done");
}
