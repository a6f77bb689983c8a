use primorbit_core::chars::*;
use primorbit_core::rootsys::*;

fn main() {
    let e6 = RootSystem::new(SimpleType::parse("E6").unwrap());
    let w1 = |s: i64| {
        let mut c = vec![0i64; 6];
        c[0] = s;
        DominantWeight::new(c)
    };
    // full triple product
    let f44 = e6_fastpath(4, 4);
    let mut acc: std::collections::BTreeMap<DominantWeight, u64> = Default::default();
    for (nu, m) in &f44.entries {
        let d = tensor_decompose(&e6, nu, &w1(3));
        for (w, k) in d.entries {
            *acc.entry(w).or_insert(0) += m * k;
        }
    }
    // all weights of shape ϖa + 3ϖb + ϖc (a,b,c distinct nodes)
    for a in 0..6 {
        for b in 0..6 {
            for c in 0..6 {
                if a == b || b == c || a == c {
                    continue;
                }
                let mut v = vec![0i64; 6];
                v[a] = 1;
                v[b] = 3;
                v[c] = 1;
                let w = DominantWeight::new(v);
                if let Some(&m) = acc.get(&w) {
                    if m <= 8 {
                        println!("node pattern 1@{} 3@{} 1@{} -> mult {}", a + 1, b + 1, c + 1, m);
                    }
                }
            }
        }
    }
    println!("mult of (1,0,3,0,1,0) = {:?}", acc.get(&DominantWeight::new(vec![1,0,3,0,1,0])));
}
