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
    let mu = DominantWeight::new(vec![1, 0, 3, 0, 1, 0]);

    let t0 = Instant::now();
    let d44 = tensor_decompose(&e6, &w1(4), &w1(4));
    let f44 = e6_fastpath(4, 4);
    println!("klimyk(4,4) == fastpath(4,4): {} ({:?})", d44 == f44, t0.elapsed());
    let dim4 = weyl_dim(&e6, &w1(4));
    println!("dim E_4w1 = {}", dim4);
    println!("sum fastpath dims = {}", f44.total_dim(&e6));
    println!("dim^2 = {}", &dim4 * &dim4);

    // association order 2: (4w1 x 3w1) then x 4w1, full decompositions
    let t0 = Instant::now();
    let d43 = tensor_decompose(&e6, &w1(4), &w1(3));
    let mut total = 0u64;
    for (nu, m) in &d43.entries {
        let d = tensor_decompose(&e6, nu, &w1(4));
        total += m * d.mult(&mu);
    }
    println!("assoc2 c = {} ({:?})", total, t0.elapsed());

    // association order 1 with full decompose instead of extraction
    let t0 = Instant::now();
    let mut total1 = 0u64;
    for (nu, m) in &f44.entries {
        let d = tensor_decompose(&e6, nu, &w1(3));
        total1 += m * d.mult(&mu);
    }
    println!("assoc1-full c = {} ({:?})", total1, t0.elapsed());
}
