fn sym_pair_simple(x: &[i64], v: usize) -> i64 {
    if v == 0 { 2 * x[0] - x[1..].iter().sum::<i64>() } else { 2 * x[v] - x[0] }
}
fn reflect(x: &[i64], v: usize) -> Vec<i64> {
    let mut y = x.to_vec();
    y[v] = x[v] - sym_pair_simple(x, v);
    y
}
fn canon_rec(d: usize, x: &[i64], out: &mut std::collections::BTreeMap<Vec<i64>, u64>, depth: usize) {
    let pad = "  ".repeat(depth);
    eprintln!("{}canon {:?}", pad, x);
    if x.iter().all(|&c| c == 0) { return; }
    let center = x[0];
    let arm_sum: i64 = x[1..].iter().sum();
    let mut strips: Vec<(usize, i64)> = Vec::new();
    let k_c = (center - arm_sum).max(0);
    if k_c > 0 { strips.push((0, k_c)); }
    for j in 1..=d {
        let k = (x[j] - center).max(0);
        if k > 0 { strips.push((j, k)); }
    }
    if !strips.is_empty() {
        eprintln!("{} strips {:?}", pad, strips);
        let mut rest = x.to_vec();
        for &(v, k) in &strips {
            let mut e = vec![0i64; d + 1];
            e[v] = 1;
            *out.entry(e).or_insert(0) += k as u64;
            rest[v] -= k;
        }
        canon_rec(d, &rest, out, depth + 1);
        return;
    }
    let refl_at = (0..=d)
        .filter(|&v| sym_pair_simple(x, v) > 0)
        .max_by_key(|&v| (sym_pair_simple(x, v), std::cmp::Reverse(v)));
    if let Some(v) = refl_at {
        let y = reflect(x, v);
        eprintln!("{} reflect v={} -> {:?}", pad, v, y);
        let mut inner = std::collections::BTreeMap::new();
        canon_rec(d, &y, &mut inner, depth + 1);
        for (root, m) in inner {
            let back = reflect(&root, v);
            eprintln!("{} pullback {:?} -> {:?}", pad, root, back);
            *out.entry(back).or_insert(0) += m;
        }
        return;
    }
    eprintln!("{} terminal {:?}", pad, x);
    *out.entry(x.to_vec()).or_insert(0) += 1;
}
fn main() {
    let mut out = std::collections::BTreeMap::new();
    canon_rec(4, &[4, 3, 3, 3, 3], &mut out, 0);
    println!("{:?}", out);
}
