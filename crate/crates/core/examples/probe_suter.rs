use primorbit_core::cones::*;
use primorbit_core::rootsys::*;

fn main() {
    for t in ["A1", "A2", "C2", "G2", "A3", "B3"] {
        println!("type {}", t);
        let rs = RootSystem::new(SimpleType::parse(t).unwrap());
        let ch = suter_chambers(&rs);
        println!("  {} chambers ok", ch.len());
    }
}
