//! Open orbits in products of flag varieties of classical groups, decided
//! by a randomized exact-arithmetic oracle: draw group elements as products
//! of elementary unipotents and torus factors, conjugate the standard
//! parabolic subalgebras, and compute the dimension of their intersection
//! by exact rank. A sample realizing the minimal possible stabilizer
//! dimension certifies the open orbit (one-sided certainty).
//!
//! Matrix models: sl_{l+1}; so and sp with the antidiagonal form, so that
//! the Borel is upper triangular and the standard parabolic of a support
//! set S is spanned by the Cartan, all positive root vectors, and the
//! negative root vectors avoiding the nodes of S. Root vectors are built
//! from matrix-unit pairs and verified against the abstract root data at
//! construction time.

use crate::linalg::{invert_q, kernel_basis_q, mat_mul_q, rank_q, QMat};
use crate::quiver::OrbitVerdict;
use crate::rat::{rat, ratio, Rat};
use crate::rootsys::{DominantWeight, Family, RootSystem, SimpleType};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

type IntMat = Vec<Vec<i64>>;

/// A classical simple Lie algebra as explicit matrices, with its root-space
/// basis labelled by the abstract root system.
pub struct ClassicalRealization {
    pub rs: RootSystem,
    pub n: usize,
    /// Diagonal Cartan basis h_1..h_l.
    cartan: Vec<IntMat>,
    /// (root in simple-root coordinates, sign, matrix); sign selects the
    /// positive or negative root.
    roots: Vec<(Vec<i64>, bool, IntMat)>,
}

fn zeros(n: usize) -> IntMat {
    vec![vec![0i64; n]; n]
}

/// ε-coordinate functional of a torus parameter slot: +e_i at position i,
/// -e_i at the mirrored position, 0 in the middle.
fn eps_coeff(family: Family, l: usize, n: usize, a: usize) -> Vec<i64> {
    let mut v = vec![0i64; l];
    match family {
        Family::A => {
            // handled separately (torus has l+1 slots)
            let _ = (n, a);
            unreachable!()
        }
        _ => {
            if a < l {
                v[a] = 1;
            } else if n - 1 - a < l {
                v[n - 1 - a] = -1;
            }
        }
    }
    v
}

/// Simple roots in ε-coordinates per Bourbaki.
fn simple_roots_eps(family: Family, l: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let dim = if family == Family::A { l + 1 } else { l };
    for i in 0..l {
        let mut v = vec![0i64; dim];
        match family {
            Family::A => {
                v[i] = 1;
                v[i + 1] = -1;
            }
            Family::B => {
                if i + 1 < l {
                    v[i] = 1;
                    v[i + 1] = -1;
                } else {
                    v[i] = 1;
                }
            }
            Family::C => {
                if i + 1 < l {
                    v[i] = 1;
                    v[i + 1] = -1;
                } else {
                    v[i] = 2;
                }
            }
            Family::D => {
                if i + 1 < l {
                    v[i] = 1;
                    v[i + 1] = -1;
                } else {
                    v[i - 1] = 1;
                    v[i] = 1;
                }
            }
            _ => unreachable!(),
        }
        out.push(v);
    }
    out
}

/// Expresses an ε-functional in simple-root coordinates (integral for
/// genuine roots).
fn eps_to_root_coords(simples: &[Vec<i64>], f: &[i64]) -> Option<Vec<i64>> {
    let rows = f.len();
    let cols = simples.len();
    let a: QMat = (0..rows)
        .map(|r| (0..cols).map(|c| rat(simples[c][r])).collect())
        .collect();
    let b: Vec<Rat> = f.iter().map(|&x| rat(x)).collect();
    let x = crate::linalg::solve_q(&a, &b)?;
    let mut out = Vec::with_capacity(cols);
    for v in &x {
        if !v.denom().is_one() {
            return None;
        }
        out.push(i64::try_from(v.numer().clone()).ok()?);
    }
    // must actually solve (system can be overdetermined)
    for r in 0..rows {
        let lhs: i64 = (0..cols).map(|c| simples[c][r] * out[c]).sum();
        if lhs != f[r] {
            return None;
        }
    }
    Some(out)
}

impl ClassicalRealization {
    pub fn new(t: SimpleType) -> Option<Self> {
        let rs = RootSystem::new(t);
        let l = t.rank;
        match t.family {
            Family::A => Some(Self::build_sl(rs, l)),
            Family::B => Some(Self::build_form(rs, l, 2 * l + 1, false)),
            Family::D => Some(Self::build_form(rs, l, 2 * l, false)),
            Family::C => Some(Self::build_form(rs, l, 2 * l, true)),
            _ => None,
        }
    }

    fn build_sl(rs: RootSystem, l: usize) -> Self {
        let n = l + 1;
        let mut cartan = Vec::new();
        for i in 0..l {
            let mut h = zeros(n);
            h[i][i] = 1;
            h[i + 1][i + 1] = -1;
            cartan.push(h);
        }
        let simples = simple_roots_eps(Family::A, l);
        let mut roots = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let mut f = vec![0i64; n];
                f[a] = 1;
                f[b] -= 1;
                let c = eps_to_root_coords(&simples, &f).expect("gl weight is a root");
                let positive = c.iter().sum::<i64>() > 0;
                let mut m = zeros(n);
                m[a][b] = 1;
                let abs: Vec<i64> = c.iter().map(|&x| x.abs()).collect();
                roots.push((abs, positive, m));
            }
        }
        let out = ClassicalRealization { rs, n, cartan, roots };
        out.validate();
        out
    }

    /// so (symmetric antidiagonal form) or sp (split-sign antidiagonal).
    fn build_form(rs: RootSystem, l: usize, n: usize, symplectic: bool) -> Self {
        let family = rs.simple_type.family;
        let eta = |a: usize| -> i64 {
            if symplectic && a >= n / 2 {
                -1
            } else {
                1
            }
        };
        let mirror = |a: usize| n - 1 - a;
        let mut cartan = Vec::new();
        for i in 0..l {
            let mut h = zeros(n);
            h[i][i] = 1;
            h[mirror(i)][mirror(i)] = -1;
            cartan.push(h);
        }
        let simples = simple_roots_eps(family, l);
        let mut roots = Vec::new();
        let mut used = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || used.contains(&(a, b)) {
                    continue;
                }
                // companion position with the same torus weight
                let (a2, b2) = (mirror(b), mirror(a));
                used.insert((a, b));
                used.insert((a2, b2));
                let fa = eps_coeff(family, l, n, a);
                let fb = eps_coeff(family, l, n, b);
                let f: Vec<i64> = fa.iter().zip(&fb).map(|(x, y)| x - y).collect();
                if f.iter().all(|&x| x == 0) {
                    continue; // Cartan direction (so odd middle pairings)
                }
                let Some(c) = eps_to_root_coords(&simples, &f) else {
                    continue; // not a root of this system
                };
                let mut m = zeros(n);
                if (a, b) == (a2, b2) {
                    // self-paired position (a, mirror(a)): survives only for sp
                    if !symplectic {
                        continue;
                    }
                    m[a][b] = 1;
                } else {
                    // α E_{ab} + β E_{a2 b2} with α J_{a,ā} + β J_{b,b̄} = 0
                    m[a][b] = eta(b);
                    m[a2][b2] = -eta(a);
                }
                let positive = c.iter().sum::<i64>() > 0;
                let abs: Vec<i64> = c.iter().map(|&x| x.abs()).collect();
                roots.push((abs, positive, m));
            }
        }
        let out = ClassicalRealization { rs, n, cartan, roots };
        out.validate();
        out
    }

    /// Construction-time checks: dimension bookkeeping, an exact match
    /// between matrix root vectors and the abstract positive roots, and the
    /// weight-vector property of every root vector under the Cartan.
    fn validate(&self) {
        assert_eq!(self.dim_g(), self.rs.dim_g);
        let mut pos = 0;
        let mut neg = 0;
        for (c, positive, m) in &self.roots {
            assert!(
                self.rs.positive_roots.contains(c),
                "unmatched root {:?} in {}",
                c,
                self.rs.simple_type
            );
            if *positive {
                pos += 1;
            } else {
                neg += 1;
            }
            // Every root vector is an ad-h eigenvector; the eigenvalue is
            // read off any nonzero matrix position.
            let (a, b) = first_position(m);
            for h in &self.cartan {
                let comm = commutator(h, m);
                let lam = h[a][a] - h[b][b];
                assert_eq!(comm, scale_mat(m, lam), "weight vector in {}", self.rs.simple_type);
            }
        }
        assert_eq!(pos, self.rs.num_positive_roots());
        assert_eq!(neg, self.rs.num_positive_roots());
    }

    pub fn dim_g(&self) -> usize {
        self.rs.rank + self.roots.len()
    }

    /// Basis matrices of the standard parabolic p_S: the Cartan, all
    /// positive root vectors, and negative root vectors whose roots avoid
    /// every node of S.
    pub fn parabolic_basis(&self, support: &BTreeSet<usize>) -> Vec<&IntMat> {
        let mut out: Vec<&IntMat> = self.cartan.iter().collect();
        for (c, positive, m) in &self.roots {
            if *positive || support.iter().all(|&s| c[s - 1] == 0) {
                out.push(m);
            }
        }
        out
    }

    pub fn dim_parabolic(&self, support: &BTreeSet<usize>) -> usize {
        self.parabolic_basis(support).len()
    }

    /// A random rational group element and its exact inverse: a product of
    /// elementary unipotents exp(c X_α) and torus factors.
    pub fn random_element(&self, rng: &mut ChaCha8Rng) -> (QMat, QMat) {
        let n = self.n;
        let mut g = crate::linalg::identity_q(n);
        let mut ginv = crate::linalg::identity_q(n);
        let factors = 3 * self.rs.rank;
        for _ in 0..factors {
            if rng.gen_range(0..5) == 0 {
                // torus factor from a coroot direction
                let i = rng.gen_range(0..self.rs.rank);
                let t = *[2i64, 3, 5].iter().nth(rng.gen_range(0..3)).unwrap();
                let (f, finv) = self.torus_factor(i, t);
                g = mat_mul_q(&g, &f);
                ginv = mat_mul_q(&finv, &ginv);
            } else {
                let k = rng.gen_range(0..self.roots.len());
                let mut c = 0;
                while c == 0 {
                    c = rng.gen_range(-5i64..=5);
                }
                let x = &self.roots[k].2;
                let f = exp_nilpotent(x, c);
                let finv = exp_nilpotent(x, -c);
                g = mat_mul_q(&g, &f);
                ginv = mat_mul_q(&finv, &ginv);
            }
        }
        (g, ginv)
    }

    fn torus_factor(&self, i: usize, t: i64) -> (QMat, QMat) {
        let n = self.n;
        let mut f = crate::linalg::identity_q(n);
        let mut finv = crate::linalg::identity_q(n);
        for (a, row) in self.cartan[i].iter().enumerate() {
            match row[a] {
                1 => {
                    f[a][a] = rat(t);
                    finv[a][a] = ratio(1, t);
                }
                -1 => {
                    f[a][a] = ratio(1, t);
                    finv[a][a] = rat(t);
                }
                _ => {}
            }
        }
        (f, finv)
    }
}

fn first_position(m: &IntMat) -> (usize, usize) {
    for (i, row) in m.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != 0 {
                return (i, j);
            }
        }
    }
    panic!("zero root vector");
}

fn commutator(a: &IntMat, b: &IntMat) -> IntMat {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut v = 0;
            for k in 0..n {
                v += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
            out[i][j] = v;
        }
    }
    out
}

fn scale_mat(a: &IntMat, c: i64) -> IntMat {
    a.iter()
        .map(|r| r.iter().map(|&x| x * c).collect())
        .collect()
}

/// exp(c X) for a nilpotent integer matrix, exact.
fn exp_nilpotent(x: &IntMat, c: i64) -> QMat {
    let n = x.len();
    let xq: QMat = x
        .iter()
        .map(|r| r.iter().map(|&v| rat(v)).collect())
        .collect();
    let mut out = crate::linalg::identity_q(n);
    let mut term = crate::linalg::identity_q(n);
    let mut k = 1i64;
    loop {
        term = mat_mul_q(&term, &xq);
        if term.iter().all(|r| r.iter().all(|v| v.is_zero())) {
            break;
        }
        let coeff = {
            let mut f = Rat::one();
            for j in 1..=k {
                f *= ratio(c, j);
            }
            f
        };
        for i in 0..n {
            for j in 0..n {
                let add = &coeff * &term[i][j];
                out[i][j] += add;
            }
        }
        k += 1;
        assert!(k <= n as i64 + 1);
    }
    out
}

fn flatten(m: &QMat) -> Vec<Rat> {
    m.iter().flat_map(|r| r.iter().cloned()).collect()
}

/// dim of the intersection of the Ad(g_i)-translates of the parabolics,
/// computed inside gl_n by stacking the orthogonal-complement constraints
/// of each translate.
fn intersection_dim(real: &ClassicalRealization, translated: &[Vec<Vec<Rat>>]) -> usize {
    let nn = real.n * real.n;
    let mut constraints: QMat = Vec::new();
    for basis in translated {
        for k in kernel_basis_q(basis) {
            constraints.push(k);
        }
    }
    // intersect within the Lie algebra itself
    let g_basis: Vec<Vec<Rat>> = real
        .cartan
        .iter()
        .map(|m| {
            flatten(
                &m.iter()
                    .map(|r| r.iter().map(|&v| rat(v)).collect())
                    .collect(),
            )
        })
        .chain(real.roots.iter().map(|(_, _, m)| {
            flatten(
                &m.iter()
                    .map(|r| r.iter().map(|&v| rat(v)).collect())
                    .collect(),
            )
        }))
        .collect();
    for k in kernel_basis_q(&g_basis) {
        constraints.push(k);
    }
    nn - rank_q(&constraints)
}

/// Randomized exact one-sided test for an open G-orbit in
/// G/P_{S_1} × ... × G/P_{S_d}.
pub fn open_orbit_flags(
    real: &ClassicalRealization,
    supports: &[BTreeSet<usize>],
    samples: u32,
    seed: u64,
) -> OrbitVerdict {
    assert!(!supports.is_empty());
    for s in supports {
        assert!(!s.is_empty() && s.iter().all(|&i| 1 <= i && i <= real.rs.rank));
    }
    let dim_g = real.dim_g();
    let codims: Vec<usize> = supports
        .iter()
        .map(|s| dim_g - real.dim_parabolic(s))
        .collect();
    let total_codim: usize = codims.iter().sum();
    if total_codim > dim_g {
        return OrbitVerdict::ProbablyNotOpen { samples_used: 0 };
    }
    let target = dim_g - total_codim;
    for sample in 0..samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (sample as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let translated: Vec<Vec<Vec<Rat>>> = supports
            .iter()
            .map(|s| {
                let (g, ginv) = real.random_element(&mut rng);
                real.parabolic_basis(s)
                    .iter()
                    .map(|b| {
                        let bq: QMat = b
                            .iter()
                            .map(|r| r.iter().map(|&v| rat(v)).collect())
                            .collect();
                        flatten(&mat_mul_q(&mat_mul_q(&g, &bq), &ginv))
                    })
                    .collect()
            })
            .collect();
        let dim = intersection_dim(real, &translated);
        assert!(dim >= target, "stabilizer cannot undershoot the bound");
        if dim == target {
            return OrbitVerdict::Open {
                witness_sample: sample,
            };
        }
    }
    OrbitVerdict::ProbablyNotOpen {
        samples_used: samples,
    }
}

/// Evidence produced by combining an orbit verdict with the ampleness
/// bridge for fundamental-multiple tuples.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum BridgeEvidence {
    /// An open orbit forces primitivity.
    PrimitiveCertified { witness_sample: u32 },
    /// No open orbit found and every weight is a fundamental multiple, so
    /// primitivity would force an open orbit; sampling-based, not a proof.
    ProbablyNotPrimitive { samples_used: u32 },
    Unknown { reason: String },
}

pub fn primitivity_bridge(lambdas: &[DominantWeight], verdict: &OrbitVerdict) -> BridgeEvidence {
    match verdict {
        OrbitVerdict::Open { witness_sample } => BridgeEvidence::PrimitiveCertified {
            witness_sample: *witness_sample,
        },
        OrbitVerdict::ProbablyNotOpen { samples_used } => {
            let all_fund = lambdas.iter().all(|l| l.support().len() == 1);
            if all_fund {
                BridgeEvidence::ProbablyNotPrimitive {
                    samples_used: *samples_used,
                }
            } else {
                BridgeEvidence::Unknown {
                    reason: "no open orbit found and the ampleness hypothesis \
                             (fundamental multiples) fails"
                        .to_string(),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(s: &str) -> ClassicalRealization {
        ClassicalRealization::new(SimpleType::parse(s).unwrap()).unwrap()
    }

    fn supp(sets: &[&[usize]]) -> Vec<BTreeSet<usize>> {
        sets.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn realizations_validate() {
        for t in ["A1", "A3", "B3", "C2", "C3", "D4", "B4", "C4", "D5", "A4"] {
            let r = real(t);
            assert_eq!(r.dim_g(), r.rs.dim_g, "{}", t);
        }
    }

    #[test]
    fn parabolic_dims_match_levi_bookkeeping() {
        for t in ["A3", "B3", "C3", "D4"] {
            let r = real(t);
            for i in 1..=r.rs.rank {
                let s: BTreeSet<usize> = [i].into_iter().collect();
                // dim p = (dim g + dim l) / 2
                assert_eq!(
                    2 * r.dim_parabolic(&s),
                    r.rs.dim_g + r.rs.levi_dimension(i),
                    "{} node {}",
                    t,
                    i
                );
            }
        }
    }

    #[test]
    fn sl2_projective_line_products() {
        let r = real("A1");
        for d in 1..=3 {
            let s = vec![[1usize].into_iter().collect(); d];
            assert!(open_orbit_flags(&r, &s, 10, 42).is_open(), "d={}", d);
        }
        let s = vec![[1usize].into_iter().collect(); 4];
        assert!(!open_orbit_flags(&r, &s, 20, 42).is_open());
    }

    #[test]
    fn pairs_always_open_small() {
        for t in ["A2", "C2", "B3"] {
            let r = real(t);
            let all: Vec<Vec<usize>> = match r.rs.rank {
                2 => vec![vec![1], vec![2], vec![1, 2]],
                _ => vec![vec![1], vec![2], vec![3], vec![1, 3], vec![1, 2, 3]],
            };
            for a in &all {
                for b in &all {
                    let s = supp(&[a, b]);
                    assert!(
                        open_orbit_flags(&r, &s, 10, 42).is_open(),
                        "{} {:?} {:?}",
                        t,
                        a,
                        b
                    );
                }
            }
        }
    }

    #[test]
    fn c_type_triples_follow_classification() {
        // C_l, d = 3, equal fundamental: open iff i ∈ {1, l}
        for t in ["C2", "C3"] {
            let r = real(t);
            let l = r.rs.rank;
            for i in 1..=l {
                let s = supp(&[&[i], &[i], &[i]]);
                let open = open_orbit_flags(&r, &s, 20, 42).is_open();
                assert_eq!(open, i == 1 || i == l, "{} i={}", t, i);
            }
        }
    }

    #[test]
    fn bridge_directions() {
        let w = DominantWeight::new(vec![2, 0, 0]);
        let open = OrbitVerdict::Open { witness_sample: 3 };
        assert_eq!(
            primitivity_bridge(&[w.clone()], &open),
            BridgeEvidence::PrimitiveCertified { witness_sample: 3 }
        );
        let closed = OrbitVerdict::ProbablyNotOpen { samples_used: 20 };
        assert!(matches!(
            primitivity_bridge(&[w.clone()], &closed),
            BridgeEvidence::ProbablyNotPrimitive { .. }
        ));
        let mixed = DominantWeight::new(vec![1, 1, 0]);
        assert!(matches!(
            primitivity_bridge(&[mixed], &closed),
            BridgeEvidence::Unknown { .. }
        ));
    }
}
