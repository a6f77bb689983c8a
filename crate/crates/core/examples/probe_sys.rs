use primorbit_core::chars::*;
use primorbit_core::rootsys::*;

fn main() {
    let e6 = RootSystem::new(SimpleType::parse("E6").unwrap());
    let w1 = |s: i64| {
        let mut c = vec![0i64; 6];
        c[0] = s;
        DominantWeight::new(c)
    };
    let zero = DominantWeight::zero(6);
    let mut checked = 0;
    for n1 in 0..=3i64 {
        for n2 in 0..=3i64 {
            for n3 in 0..=3i64 {
                for n4 in 0..=3i64 {
                    let sys = invariant_dim_e6_system([n1, n2, n3, n4]);
                    let lr = lr_coefficient(&e6, &[w1(n1), w1(n2), w1(n3), w1(n4)], &zero);
                    assert_eq!(sys, lr, "mismatch at ({},{},{},{})", n1, n2, n3, n4);
                    checked += 1;
                }
            }
        }
    }
    println!("system vs LR agree on {} cases", checked);
}
