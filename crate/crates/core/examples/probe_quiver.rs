use primorbit_core::quiver::*;
fn main() {
    let dec = canonical_decomposition(4, &[4, 3, 3, 3, 3]);
    for s in &dec.summands {
        println!("{:?} x{} {:?}", s.root, s.multiplicity, s.class);
    }
    println!("sum = {:?}", dec.sum(4));
    println!("oracle: {:?}", open_orbit_oracle(4, &[4, 3, 3, 3, 3], 20, 42));
}
