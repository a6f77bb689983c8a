use primorbit_core::linalg::*;
use primorbit_core::rat::*;
use primorbit_core::rootsys::*;
use num_traits::Zero;

fn main() {
    let rs = RootSystem::new(SimpleType::parse("B3").unwrap());
    let r = rs.rank;
    let theta = rs.dual_highest_root();
    println!("theta_vee = {:?}", theta);
    let mut covectors: Vec<Vec<i64>> = (0..r)
        .map(|j| {
            let mut e = vec![0i64; r];
            e[j] = 1;
            e
        })
        .collect();
    covectors.push(theta.iter().map(|&c| -c).collect());
    for i in 0..r {
        let active: Vec<&Vec<i64>> = (0..=r).filter(|&j| j != i).map(|j| &covectors[j]).collect();
        let mat: QMat = active.iter().map(|l| l.iter().map(|&c| rat(c)).collect()).collect();
        let inv = invert_q(&mat).unwrap();
        let rays: Vec<Vec<Rat>> = (0..r).map(|col| (0..r).map(|row| inv[row][col].clone()).collect()).collect();
        println!("i={} rays {:?}", i, rays.iter().map(|x| x.iter().map(fmt_rat).collect::<Vec<_>>()).collect::<Vec<_>>());
        for weight in 1..6i64 {
            let mut x0 = vec![Rat::zero(); r];
            let mut w = weight;
            for ray in &rays {
                for (xi, ri) in x0.iter_mut().zip(ray) {
                    *xi += ri * rat(w);
                }
                w *= 2;
            }
            // dominantize with step cap
            let mut v = x0.clone();
            let mut steps = 0;
            loop {
                match (0..r).find(|&k| v[k] < Rat::zero()) {
                    None => break,
                    Some(k) => {
                        v = rs.reflect_weight_rat(&v, k);
                        steps += 1;
                        if steps > 200 {
                            println!("  weight {} STUCK after 200 steps, v = {:?}", weight, v.iter().map(fmt_rat).collect::<Vec<_>>());
                            break;
                        }
                    }
                }
            }
            if steps <= 200 {
                println!("  weight {} -> dom {:?} steps {}", weight, v.iter().map(fmt_rat).collect::<Vec<_>>(), steps);
            }
        }
    }
}
