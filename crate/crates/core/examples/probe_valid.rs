use primorbit_core::chars::*;
use primorbit_core::rootsys::*;

fn dw(c: &[i64]) -> DominantWeight { DominantWeight::new(c.to_vec()) }

fn main() {
    let e6 = RootSystem::new(SimpleType::parse("E6").unwrap());
    let w1 = dw(&[1, 0, 0, 0, 0, 0]);
    let zero = DominantWeight::zero(6);
    // E6 cubic invariant of the 27: dim (27^{x3})^G = 1
    println!("c0(27,27,27) = {}", lr_coefficient(&e6, &[w1.clone(), w1.clone(), w1.clone()], &zero));
    println!("c0(27,27,27,27) = {}", lr_coefficient(&e6, &[w1.clone(), w1.clone(), w1.clone(), w1.clone()], &zero));
    // adjoint ^2 of E6: 78x78 = 1 + 78 + 650 + 2430 + 2925
    let adj = dw(&[0, 1, 0, 0, 0, 0]);
    let d = tensor_decompose(&e6, &adj, &adj);
    for (w, m) in &d.entries {
        println!("78x78: {:?} x{} dim {}", w.coords, m, weyl_dim(&e6, w));
    }
    // SL3 adjoint squared: 8x8 = 27+10+10b+8+8+1
    let a2 = RootSystem::new(SimpleType::parse("A2").unwrap());
    let adj = dw(&[1, 1]);
    let d = tensor_decompose(&a2, &adj, &adj);
    for (w, m) in &d.entries {
        println!("8x8: {:?} x{} dim {}", w.coords, m, weyl_dim(&a2, w));
    }
    // SL4: 6x6 = 20' + 15 + 1
    let a3 = RootSystem::new(SimpleType::parse("A3").unwrap());
    let v = dw(&[0, 1, 0]);
    let d = tensor_decompose(&a3, &v, &v);
    for (w, m) in &d.entries {
        println!("6x6: {:?} x{} dim {}", w.coords, m, weyl_dim(&a3, w));
    }
    // E6: 27 x 27bar = 1 + 78 + 650
    let w6 = dw(&[0, 0, 0, 0, 0, 1]);
    let d = tensor_decompose(&e6, &w1, &w6);
    for (w, m) in &d.entries {
        println!("27x27b: {:?} x{} dim {}", w.coords, m, weyl_dim(&e6, w));
    }
}
