use primorbit_core::quiver::*;
use std::time::Instant;

fn main() {
    // criterion 7: l <= 8, all i, 3 <= d <= l+3, equal-index
    let t0 = Instant::now();
    let mut checked = 0u64;
    for l in 1..=8i64 {
        let n = l + 1;
        for i in 1..=l {
            for d in 3..=(l + 3) {
                let indices = vec![i; d as usize];
                let expect = (d as i128) * (i as i128) * ((n - i) as i128) < (n as i128) * (n as i128);
                assert_eq!(is_primitive_sln_fund(n, &indices), expect, "l={} i={} d={}", l, i, d);
                checked += 1;
            }
        }
    }
    println!("criterion 7: {} cases in {:?}", checked, t0.elapsed());

    // criterion 8: n <= 8, d <= n+2, all ascending fundamental tuples
    let t0 = Instant::now();
    let mut total = 0u64;
    let mut hard = 0u64;
    for n in 2..=8i64 {
        let tn = Instant::now();
        let mut cnt = 0u64;
        for d in 1..=(n as usize + 2) {
            for tuple in ascending_tuples(n - 1, d) {
                let mut gamma = vec![n];
                gamma.extend_from_slice(&tuple);
                let prim = is_primitive_sln_fund(n, &tuple);
                let oracle = open_orbit_oracle(d, &gamma, 20, 42);
                if oracle.is_open() && !prim {
                    panic!("one-sided contradiction at {:?}", gamma);
                }
                if prim != oracle.is_open() {
                    println!("soft mismatch at {:?}: prim={} oracle={:?}", gamma, prim, oracle);
                }
                cnt += 1;
                if !prim {
                    hard += 1;
                }
            }
        }
        total += cnt;
        println!("  n={}: {} tuples in {:?}", n, cnt, tn.elapsed());
    }
    println!("criterion 8: {} tuples ({} non-primitive) in {:?}", total, hard, t0.elapsed());
}
