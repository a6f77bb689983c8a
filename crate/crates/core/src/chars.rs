//! Characters and tensor-product decompositions of simple modules.
//!
//! The production pipeline is Freudenthal's recursion for weight
//! multiplicities (all-integer arithmetic after scaling the invariant form),
//! the Weyl dimension formula as a consistency oracle, and the
//! Brauer–Klimyk algorithm for pairwise tensor decompositions, iterating
//! over the character of the smaller factor with ρ-shifted reflection into
//! the dominant chamber. Weights on walls are dropped; every surviving term
//! carries the sign of the reflecting element.
//!
//! Two closed formulas act as fast paths for the E6 computations: the
//! multiplicity-free decomposition of E_{sϖ1} ⊗ E_{tϖ1} and the associated
//! 8x8 linear system counting invariants of fourfold products of ϖ1-powers.

use crate::charcache::{self, CharKey};
use crate::rat::Rat;
use crate::rootsys::{DominantWeight, Family, RootSystem, SimpleType};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

/// Dominant weights of one simple module with exact multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub highest: Vec<i64>,
    pub dominant_mults: BTreeMap<Vec<i64>, u64>,
}

impl CharacterTable {
    /// All weights of the module (orbit expansion), with multiplicities.
    pub fn expanded(&self, rs: &RootSystem) -> Vec<(Vec<i64>, u64)> {
        let mut out = Vec::new();
        for (w, &m) in &self.dominant_mults {
            for v in rs.weyl_orbit_int(w) {
                out.push((v, m));
            }
        }
        out
    }

    /// Σ |orbit| · mult, which must equal the Weyl dimension.
    pub fn total_dim(&self, rs: &RootSystem) -> BigInt {
        let mut total = BigInt::zero();
        for (w, &m) in &self.dominant_mults {
            total += BigInt::from(rs.weyl_orbit_int(w).len() as u64) * BigInt::from(m);
        }
        total
    }
}

/// Finite map from dominant weights to positive multiplicities; the result
/// of a tensor decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightMultiset {
    pub entries: BTreeMap<DominantWeight, u64>,
}

impl WeightMultiset {
    pub fn single(w: DominantWeight) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(w, 1);
        WeightMultiset { entries }
    }

    pub fn mult(&self, w: &DominantWeight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn num_summands(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Σ mult(ν) · dim E_ν.
    pub fn total_dim(&self, rs: &RootSystem) -> BigInt {
        let mut total = BigInt::zero();
        for (w, &m) in &self.entries {
            total += weyl_dim(rs, w) * BigInt::from(m);
        }
        total
    }
}

impl Serialize for WeightMultiset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            weight: &'a Vec<i64>,
            mult: u64,
        }
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (w, &m) in &self.entries {
            seq.serialize_element(&Entry {
                weight: &w.coords,
                mult: m,
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for WeightMultiset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Entry {
            weight: Vec<i64>,
            mult: u64,
        }
        let raw = Vec::<Entry>::deserialize(d)?;
        let mut entries = BTreeMap::new();
        for e in raw {
            entries.insert(DominantWeight::new(e.weight), e.mult);
        }
        Ok(WeightMultiset { entries })
    }
}

/// dim E_λ by the Weyl dimension formula, exact.
pub fn weyl_dim(rs: &RootSystem, lam: &DominantWeight) -> BigInt {
    let rho = rs.rho();
    let lam_rho: Vec<i64> = lam
        .coords
        .iter()
        .zip(&rho)
        .map(|(&a, &b)| a + b)
        .collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in &rs.positive_roots {
        num *= BigInt::from(rs.pair_weight_root(&lam_rho, alpha));
        den *= BigInt::from(rs.pair_weight_root(&rho, alpha));
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "Weyl dimension must be integral");
    q
}

/// Dominant candidate grid for weights of E_λ: all dominant μ with
/// λ - μ a nonnegative integer combination of simple roots.
fn dominant_candidates(rs: &RootSystem, lam: &[i64]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let r = rs.rank;
    let lam_rat: Vec<Rat> = lam.iter().map(|&x| crate::rat::rat(x)).collect();
    let cmax_rat = crate::linalg::mat_vec_q(&rs.inv_cartan, &lam_rat);
    let cmax: Vec<i64> = cmax_rat
        .iter()
        .map(|x| {
            let f = x.floor().to_integer();
            i64::try_from(f).expect("candidate box fits i64")
        })
        .collect();
    let mut out = Vec::new();
    let mut c = vec![0i64; r];
    'outer: loop {
        let mu: Vec<i64> = (0..r)
            .map(|i| lam[i] - (0..r).map(|j| rs.cartan[i][j] * c[j]).sum::<i64>())
            .collect();
        if mu.iter().all(|&x| x >= 0) {
            out.push((mu, c.clone()));
        }
        // odometer
        for i in 0..r {
            if c[i] < cmax[i] {
                c[i] += 1;
                continue 'outer;
            }
            c[i] = 0;
        }
        break;
    }
    // by height of λ - μ
    out.sort_by_key(|(_, c)| (c.iter().sum::<i64>(), c.clone()));
    out
}

/// Freudenthal's recursion: every dominant weight of E_λ with its exact
/// multiplicity.
pub fn freudenthal(rs: &RootSystem, lam: &DominantWeight) -> Arc<CharacterTable> {
    let key = CharKey {
        simple_type: rs.simple_type,
        highest: lam.coords.clone(),
    };
    charcache::get_or_compute(&key, || freudenthal_uncached(rs, lam))
}

fn freudenthal_uncached(rs: &RootSystem, lam: &DominantWeight) -> CharacterTable {
    let r = rs.rank;
    let rho = rs.rho();
    let lamv = lam.coords.clone();
    let candidates = dominant_candidates(rs, &lamv);
    let mut mults: HashMap<Vec<i64>, i128> = HashMap::new();
    mults.insert(lamv.clone(), 1);

    for (mu, c) in candidates.iter().skip(1) {
        let mut sum: i128 = 0;
        for alpha in &rs.positive_roots {
            let alpha_w = rs.root_to_weight_coords(alpha);
            let norm2 = rs.root_norm2(alpha) as i128;
            let base = rs.pair_weight_root(mu, alpha) as i128;
            let mut k: i64 = 1;
            loop {
                // μ + kα is a weight only while the root coordinates of
                // λ - (μ + kα) stay nonnegative.
                if (0..r).any(|j| c[j] - k * alpha[j] < 0) {
                    break;
                }
                let nu: Vec<i64> = (0..r).map(|i| mu[i] + k * alpha_w[i]).collect();
                let (dom, _) = rs.dominantize(&nu);
                if let Some(&m) = mults.get(&dom) {
                    if m != 0 {
                        sum += m * (base + (k as i128) * norm2);
                    }
                }
                k += 1;
            }
        }
        if sum == 0 {
            continue; // not a weight
        }
        // denominator (λ-μ, λ+μ+2ρ) over the scaled integral form
        let lmu2rho: Vec<i64> = (0..r).map(|i| lamv[i] + mu[i] + 2 * rho[i]).collect();
        let den = rs.pair_weight_root(&lmu2rho, c) as i128;
        assert!(den > 0);
        let num = 2 * sum;
        assert!(num % den == 0, "Freudenthal division must be exact");
        let m = num / den;
        assert!(m > 0);
        mults.insert(mu.clone(), m);
    }

    let mut dominant_mults = BTreeMap::new();
    for (w, m) in mults {
        if m != 0 {
            dominant_mults.insert(w, u64::try_from(m).expect("multiplicity fits u64"));
        }
    }
    CharacterTable {
        highest: lamv,
        dominant_mults,
    }
}

/// Exact decomposition of E_λ ⊗ E_μ by the Brauer–Klimyk rule, iterating
/// over the character of the smaller-dimensional factor.
pub fn tensor_decompose(
    rs: &RootSystem,
    lam: &DominantWeight,
    mu: &DominantWeight,
) -> WeightMultiset {
    let (big, small) = if weyl_dim(rs, lam) >= weyl_dim(rs, mu) {
        (lam, mu)
    } else {
        (mu, lam)
    };
    let table = freudenthal(rs, small);
    let rho = rs.rho();
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (w, m) in table.expanded(rs) {
        let shifted: Vec<i64> = (0..rs.rank)
            .map(|i| big.coords[i] + rho[i] + w[i])
            .collect();
        if let Some((dom, sign)) = rs.dominantize_signed(&shifted) {
            let target: Vec<i64> = (0..rs.rank).map(|i| dom[i] - rho[i]).collect();
            *acc.entry(target).or_insert(0) += sign * m as i64;
        }
    }
    let mut entries = BTreeMap::new();
    for (w, m) in acc {
        assert!(m >= 0, "Klimyk cancellation left a negative multiplicity");
        if m > 0 {
            entries.insert(DominantWeight::new(w), m as u64);
        }
    }
    WeightMultiset { entries }
}

/// Multiplicity of E_target inside E_a ⊗ E_b without materializing the full
/// decomposition; iterates over the character of `iterate_over`.
fn pair_coefficient(
    rs: &RootSystem,
    fixed: &DominantWeight,
    iterate_over: &DominantWeight,
    target: &DominantWeight,
) -> i64 {
    let table = freudenthal(rs, iterate_over);
    let rho = rs.rho();
    let target_shift: Vec<i64> = (0..rs.rank)
        .map(|i| target.coords[i] + rho[i])
        .collect();
    let mut total: i64 = 0;
    for (w, m) in table.expanded(rs) {
        let shifted: Vec<i64> = (0..rs.rank)
            .map(|i| fixed.coords[i] + rho[i] + w[i])
            .collect();
        if let Some((dom, sign)) = rs.dominantize_signed(&shifted) {
            if dom == target_shift {
                total += sign * m as i64;
            }
        }
    }
    assert!(total >= 0);
    total
}

/// c^target_{a,b}, choosing the cheaper factor to iterate over.
pub fn pair_lr(
    rs: &RootSystem,
    a: &DominantWeight,
    b: &DominantWeight,
    target: &DominantWeight,
) -> u64 {
    let c = if weyl_dim(rs, a) >= weyl_dim(rs, b) {
        pair_coefficient(rs, a, b, target)
    } else {
        pair_coefficient(rs, b, a, target)
    };
    c as u64
}

fn is_e6_w1_multiple(rs: &RootSystem, w: &DominantWeight) -> Option<i64> {
    if rs.simple_type != SimpleType::new(Family::E, 6).unwrap() {
        return None;
    }
    if w.coords[1..].iter().all(|&c| c == 0) {
        Some(w.coords[0])
    } else {
        None
    }
}

/// The Littlewood–Richardson coefficient c^μ_{λ1..λd}: multiplicity of E_μ
/// in E_{λ1} ⊗ ... ⊗ E_{λd}. Pairwise folds ordered by ascending Weyl
/// dimension; pairs of E6 ϖ1-powers go through the closed-formula fast path.
pub fn lr_coefficient(rs: &RootSystem, lambdas: &[DominantWeight], mu: &DominantWeight) -> u64 {
    match lambdas.len() {
        0 => return u64::from(mu.is_zero()),
        1 => return u64::from(lambdas[0] == *mu),
        _ => {}
    }

    // Pair off E6 ϖ1-powers first: their products are free.
    let mut w1_powers: Vec<i64> = Vec::new();
    let mut irreducibles: Vec<DominantWeight> = Vec::new();
    for l in lambdas {
        match is_e6_w1_multiple(rs, l) {
            Some(s) => w1_powers.push(s),
            None => irreducibles.push(l.clone()),
        }
    }
    w1_powers.sort_by_key(|&s| std::cmp::Reverse(s));
    let mut multisets: Vec<WeightMultiset> = Vec::new();
    let mut chunks = w1_powers.chunks_exact(2);
    for pair in &mut chunks {
        multisets.push(e6_fastpath(pair[0], pair[1]));
    }
    if let [s] = chunks.remainder() {
        let mut c = vec![0i64; rs.rank];
        c[0] = *s;
        irreducibles.push(DominantWeight::new(c));
    }

    irreducibles.sort_by_key(|w| weyl_dim(rs, w));
    // Keep the largest irreducible for the final single-target extraction.
    let last = irreducibles.pop();

    let mut acc: Option<WeightMultiset> = None;
    for ms in multisets {
        acc = Some(match acc {
            None => ms,
            Some(a) => multiset_product(rs, &a, &ms),
        });
    }
    for l in &irreducibles {
        acc = Some(match acc {
            None => WeightMultiset::single(l.clone()),
            Some(a) => multiset_tensor(rs, &a, l),
        });
    }

    match (acc, last) {
        (Some(acc), Some(last)) => {
            let mut total: u64 = 0;
            for (nu, m) in &acc.entries {
                total += m * pair_lr(rs, nu, &last, mu);
            }
            total
        }
        (Some(acc), None) => acc.mult(mu),
        (None, Some(last)) => u64::from(last == *mu),
        (None, None) => u64::from(mu.is_zero()),
    }
}

fn multiset_tensor(rs: &RootSystem, a: &WeightMultiset, l: &DominantWeight) -> WeightMultiset {
    let mut entries: BTreeMap<DominantWeight, u64> = BTreeMap::new();
    for (nu, m) in &a.entries {
        let d = tensor_decompose(rs, nu, l);
        for (w, k) in d.entries {
            *entries.entry(w).or_insert(0) += m * k;
        }
    }
    WeightMultiset { entries }
}

fn multiset_product(rs: &RootSystem, a: &WeightMultiset, b: &WeightMultiset) -> WeightMultiset {
    let mut entries: BTreeMap<DominantWeight, u64> = BTreeMap::new();
    for (nu, m) in &a.entries {
        for (ka, k) in &b.entries {
            let d = tensor_decompose(rs, nu, ka);
            for (w, j) in d.entries {
                *entries.entry(w).or_insert(0) += m * k * j;
            }
        }
    }
    WeightMultiset { entries }
}

/// Closed-formula decomposition of E_{sϖ1} ⊗ E_{tϖ1} for E6: one summand
/// E_{(a1+a2)ϖ1 + a3 ϖ3 + a4 ϖ6} for every a1..a4 >= 0 with
/// a1+a3+a4 = s and a2+a3+a4 = t. Multiplicity-free.
pub fn e6_fastpath(s: i64, t: i64) -> WeightMultiset {
    assert!(s >= 0 && t >= 0);
    let mut entries = BTreeMap::new();
    for a3 in 0..=s.min(t) {
        for a4 in 0..=(s.min(t) - a3) {
            let a1 = s - a3 - a4;
            let a2 = t - a3 - a4;
            let w = DominantWeight::new(vec![a1 + a2, 0, a3, 0, 0, a4]);
            let prev = entries.insert(w, 1);
            assert!(prev.is_none(), "fast path must be multiplicity-free");
        }
    }
    WeightMultiset { entries }
}

/// dim (E_{n1 ϖ1} ⊗ E_{n2 ϖ1} ⊗ E_{n3 ϖ1} ⊗ E_{n4 ϖ1})^{E6}: the number of
/// nonnegative integral solutions of the associated 8x8 linear system. The
/// system is nondegenerate, so the count is 0 or 1.
pub fn invariant_dim_e6_system(n: [i64; 4]) -> u64 {
    use crate::linalg::solve_q;
    use crate::rat::rat;
    // variables (a1, a2, a3, a4, b1, b2, b3, b4)
    let rows: Vec<Vec<i64>> = vec![
        vec![0, 0, 0, 1, -1, -1, 0, 0], // a4 = b1 + b2
        vec![0, 0, 1, 0, 0, 0, 0, 0],   // a3 = 0
        vec![0, 0, 0, 0, 0, 0, 1, 0],   // b3 = 0
        vec![1, 1, 0, 0, 0, 0, 0, -1],  // a1 + a2 = b4
        vec![1, 0, 1, 1, 0, 0, 0, 0],   // a1 + a3 + a4 = n1
        vec![0, 1, 1, 1, 0, 0, 0, 0],   // a2 + a3 + a4 = n2
        vec![0, 0, 0, 0, 1, 0, 1, 1],   // b1 + b3 + b4 = n3
        vec![0, 0, 0, 0, 0, 1, 1, 1],   // b2 + b3 + b4 = n4
    ];
    let a: crate::linalg::QMat = rows
        .iter()
        .map(|r| r.iter().map(|&x| rat(x)).collect())
        .collect();
    let b: Vec<Rat> = [0, 0, 0, 0, n[0], n[1], n[2], n[3]]
        .iter()
        .map(|&x| rat(x))
        .collect();
    debug_assert_eq!(crate::linalg::rank_q(&a), 8);
    match solve_q(&a, &b) {
        None => 0,
        Some(x) => {
            let ok = x
                .iter()
                .all(|v| v.denom().is_one() && !v.numer().is_negative());
            u64::from(ok)
        }
    }
}

/// Membership of (μ1..μd) in Γ(G,d): the tensor product has a nonzero
/// invariant.
pub fn gamma_member(rs: &RootSystem, mus: &[DominantWeight]) -> bool {
    lr_coefficient(rs, mus, &DominantWeight::zero(rs.rank)) >= 1
}

/// Dominant weights with coordinate sum at most `height`, in ascending
/// lexicographic order. Utility for small enumerations.
pub fn dominant_weights_up_to(rank: usize, height: i64) -> Vec<DominantWeight> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn rec(cur: &mut Vec<i64>, i: usize, left: i64, out: &mut Vec<DominantWeight>) {
        if i == cur.len() {
            out.push(DominantWeight::new(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(cur, i + 1, left - v, out);
        }
        cur[i] = 0;
    }
    rec(&mut cur, 0, height, &mut out);
    out
}

/// All weights (as coordinate vectors) of E_λ, deduplicated, for small
/// sanity checks.
pub fn weight_support(rs: &RootSystem, lam: &DominantWeight) -> HashSet<Vec<i64>> {
    freudenthal(rs, lam)
        .expanded(rs)
        .into_iter()
        .map(|(w, _)| w)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SimpleType;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(SimpleType::parse(s).unwrap())
    }

    fn dw(c: &[i64]) -> DominantWeight {
        DominantWeight::new(c.to_vec())
    }

    #[test]
    fn weyl_dims() {
        let e6 = rs("E6");
        assert_eq!(weyl_dim(&e6, &dw(&[1, 0, 0, 0, 0, 0])), BigInt::from(27));
        assert_eq!(weyl_dim(&e6, &dw(&[0; 6])), BigInt::from(1));
        let a1 = rs("A1");
        for s in 0..20 {
            assert_eq!(weyl_dim(&a1, &dw(&[s])), BigInt::from(s + 1));
        }
        // adjoint modules
        assert_eq!(weyl_dim(&e6, &dw(&[0, 1, 0, 0, 0, 0])), BigInt::from(78));
        let g2 = rs("G2");
        assert_eq!(weyl_dim(&g2, &dw(&[1, 0])), BigInt::from(7));
        assert_eq!(weyl_dim(&g2, &dw(&[0, 1])), BigInt::from(14));
    }

    #[test]
    fn freudenthal_small() {
        let a1 = rs("A1");
        let t = freudenthal(&a1, &dw(&[2]));
        assert_eq!(t.dominant_mults.get(&vec![2]), Some(&1));
        assert_eq!(t.dominant_mults.get(&vec![0]), Some(&1));
        assert_eq!(t.total_dim(&a1), BigInt::from(3));

        // adjoint of A2: zero weight has multiplicity = rank
        let a2 = rs("A2");
        let t = freudenthal(&a2, &dw(&[1, 1]));
        assert_eq!(t.dominant_mults.get(&vec![0, 0]), Some(&2));
        assert_eq!(t.total_dim(&a2), BigInt::from(8));

        // 5-dim module of C2
        let c2 = rs("C2");
        let t = freudenthal(&c2, &dw(&[0, 1]));
        assert_eq!(t.dominant_mults.get(&vec![0, 0]), Some(&1));
        assert_eq!(t.total_dim(&c2), BigInt::from(5));
    }

    #[test]
    fn clebsch_gordan() {
        let a1 = rs("A1");
        for s in 0..8i64 {
            for t in 0..=s {
                let d = tensor_decompose(&a1, &dw(&[s]), &dw(&[t]));
                let expected: BTreeMap<DominantWeight, u64> =
                    (0..=t).map(|i| (dw(&[s + t - 2 * i]), 1)).collect();
                assert_eq!(d.entries, expected, "s={} t={}", s, t);
            }
        }
    }

    #[test]
    fn unit_of_tensor() {
        let c2 = rs("C2");
        let l = dw(&[2, 1]);
        let d = tensor_decompose(&c2, &DominantWeight::zero(2), &l);
        assert_eq!(d, WeightMultiset::single(l));
    }

    #[test]
    fn e6_fastpath_small() {
        let ms = e6_fastpath(1, 1);
        assert_eq!(ms.entries.len(), 3);
        assert_eq!(ms.mult(&dw(&[2, 0, 0, 0, 0, 0])), 1);
        assert_eq!(ms.mult(&dw(&[0, 0, 1, 0, 0, 0])), 1);
        assert_eq!(ms.mult(&dw(&[0, 0, 0, 0, 0, 1])), 1);
        // lattice count for s = t = 4: a3 + a4 <= 4 gives 15 solutions
        assert_eq!(e6_fastpath(4, 4).entries.len(), 15);
        // s = 0: single summand E_{tϖ1}
        let ms = e6_fastpath(0, 3);
        assert_eq!(ms.entries.len(), 1);
        assert_eq!(ms.mult(&dw(&[3, 0, 0, 0, 0, 0])), 1);
    }

    #[test]
    fn dual_pair_invariants() {
        let a2 = rs("A2");
        let l = dw(&[2, 1]);
        let star = a2.dual_weight(&l);
        let zero = DominantWeight::zero(2);
        assert_eq!(lr_coefficient(&a2, &[l.clone(), star.clone()], &zero), 1);
        assert_eq!(lr_coefficient(&a2, &[l.clone(), l.clone()], &zero), 0);
        // A1 parity
        let a1 = rs("A1");
        let w = dw(&[1]);
        assert_eq!(
            lr_coefficient(&a1, &[w.clone(), w.clone(), w.clone()], &DominantWeight::zero(1)),
            0
        );
    }

    #[test]
    fn det_invariant_for_sl3() {
        let a2 = rs("A2");
        let w = dw(&[1, 0]);
        assert!(gamma_member(&a2, &[w.clone(), w.clone(), w.clone()]));
        assert!(!gamma_member(&a2, &[w.clone(), w.clone()]));
    }

    #[test]
    fn e6_system_unit_cases() {
        assert_eq!(invariant_dim_e6_system([0, 0, 0, 0]), 1);
        for n in [[1, 0, 0, 0], [2, 1, 1, 0], [1, 1, 1, 1], [3, 1, 2, 2]] {
            assert!(invariant_dim_e6_system(n) <= 1);
        }
    }

    #[test]
    fn dimension_bookkeeping_small() {
        for t in ["A2", "C2", "G2"] {
            let r = rs(t);
            let l = dw(&[1, 1]);
            let m = dw(&[2, 0]);
            let d = tensor_decompose(&r, &l, &m);
            assert_eq!(d.total_dim(&r), weyl_dim(&r, &l) * weyl_dim(&r, &m), "{}", t);
        }
    }
}
