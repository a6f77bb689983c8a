//! Exact combinatorial models of the irreducible root systems.
//!
//! Weights are stored in the fundamental-weight basis (Bourbaki node
//! numbering), roots in the simple-root basis, and the two are tied together
//! by the Cartan matrix: column `j` of the Cartan matrix is the simple root
//! `α_j` written in fundamental weights. All arithmetic is exact; the only
//! rational data is the inverse Cartan matrix, whose strict positivity for
//! an irreducible system is asserted at construction time.
//!
//! Node numbering (Bourbaki):
//!   A_l   1 - 2 - ... - l
//!   B_l   1 - 2 - ... - (l-1) => l          (α_l short)
//!   C_l   1 - 2 - ... - (l-1) <= l          (α_l long)
//!   D_l   1 - ... - (l-2) < (l-1, l)        (fork at l-2)
//!   E_l   1 - 3 - 4 - 5 - 6 [- 7 [- 8]]     with 2 attached to 4
//!   F_4   1 - 2 => 3 - 4                    (α_1, α_2 long)
//!   G_2   1 <= 2                            (α_1 short, α_2 long)

use crate::linalg::{invert_q, QMat};
use crate::rat::{rat, Rat};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{}", c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeError {
    InvalidRank { family: Family, rank: usize },
    Unparseable(String),
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeError::InvalidRank { family, rank } => {
                write!(f, "invalid rank {} for family {}", rank, family)
            }
            TypeError::Unparseable(s) => write!(f, "cannot parse simple type from {:?}", s),
        }
    }
}

impl std::error::Error for TypeError {}

/// A simple type such as A3, E6, G2. B2 is admitted as an alias of C2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, TypeError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(TypeError::InvalidRank { family, rank });
        }
        if family == Family::B && rank == 2 {
            // B2 = C2 up to node relabelling.
            return Ok(SimpleType {
                family: Family::C,
                rank: 2,
            });
        }
        Ok(SimpleType { family, rank })
    }

    pub fn parse(s: &str) -> Result<Self, TypeError> {
        let s = s.trim();
        let mut chars = s.chars();
        let f = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(TypeError::Unparseable(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| TypeError::Unparseable(s.to_string()))?;
        SimpleType::new(f, rank)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        SimpleType::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Nonnegative integer vector in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DominantWeight {
    pub coords: Vec<i64>,
}

impl DominantWeight {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(coords.iter().all(|&c| c >= 0), "dominant coords must be >= 0");
        DominantWeight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight {
            coords: vec![0; rank],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Indices (1-based) of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn scale(&self, m: i64) -> Self {
        assert!(m >= 0);
        DominantWeight {
            coords: self.coords.iter().map(|&c| c * m).collect(),
        }
    }

    /// λ / gcd of its coordinates (the primitive point on the same ray).
    pub fn primitive(&self) -> Self {
        DominantWeight {
            coords: crate::rat::primitive_part(&self.coords),
        }
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn same_parabolic(a: &DominantWeight, b: &DominantWeight) -> bool {
    a.support() == b.support()
}

/// A Weyl group element as a reduced-ish word in simple reflections plus its
/// matrix acting on weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>, // 1-based simple reflection indices
    pub matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn det(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).map(|(&m, &x)| m * x).sum())
            .collect()
    }

    pub fn apply_rat(&self, v: &[Rat]) -> Vec<Rat> {
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (&m, x)| acc + x * rat(m))
            })
            .collect()
    }
}

/// Immutable Lie datum of a simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub simple_type: SimpleType,
    pub rank: usize,
    /// cartan[i][j] = <α_j, α_i^∨>; column j is α_j in fundamental weights.
    pub cartan: Vec<Vec<i64>>,
    pub inv_cartan: QMat,
    /// Positive roots in simple-root coordinates, by increasing height.
    pub positive_roots: Vec<Vec<i64>>,
    /// Half squared lengths d_i = (α_i, α_i)/2, normalized to small integers.
    pub root_norms: Vec<i64>,
    /// Permutation p with -w0(ϖ_i) = ϖ_{p(i)} (0-based).
    pub w0_perm: Vec<usize>,
    pub dim_g: usize,
}

fn diagram(t: SimpleType) -> (Vec<(usize, usize)>, Vec<i64>) {
    let l = t.rank;
    let path = |n: usize| (1..n).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t.family {
        Family::A => (path(l), vec![1; l]),
        Family::B => {
            let mut d = vec![2; l];
            d[l - 1] = 1;
            (path(l), d)
        }
        Family::C => {
            let mut d = vec![1; l];
            d[l - 1] = 2;
            (path(l), d)
        }
        Family::D => {
            let mut e = path(l - 1);
            e.push((l - 2, l));
            (e, vec![1; l])
        }
        Family::E => {
            let mut e = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if l >= 7 {
                e.push((6, 7));
            }
            if l == 8 {
                e.push((7, 8));
            }
            (e, vec![1; l])
        }
        Family::F => (path(4), vec![2, 2, 1, 1]),
        Family::G => (vec![(1, 2)], vec![1, 3]),
    }
}

impl RootSystem {
    pub fn new(t: SimpleType) -> Self {
        let l = t.rank;
        let (edges, norms) = diagram(t);
        let mut cartan = vec![vec![0i64; l]; l];
        for i in 0..l {
            cartan[i][i] = 2;
        }
        for &(a, b) in &edges {
            let (i, j) = (a - 1, b - 1);
            let m = norms[i].max(norms[j]);
            cartan[i][j] = -m / norms[i];
            cartan[j][i] = -m / norms[j];
        }

        let cartan_q: QMat = cartan
            .iter()
            .map(|row| row.iter().map(|&x| rat(x)).collect())
            .collect();
        let inv_cartan = invert_q(&cartan_q).expect("Cartan matrix is invertible");
        for row in &inv_cartan {
            for x in row {
                assert!(x.is_positive(), "inverse Cartan entries must be positive");
            }
        }

        let positive_roots = positive_roots_closure(&cartan);
        let dim_g = l + 2 * positive_roots.len();

        let w0_perm: Vec<usize> = match (t.family, l) {
            (Family::A, _) => (0..l).map(|i| l - 1 - i).collect(),
            (Family::D, _) if l % 2 == 1 => {
                let mut p: Vec<usize> = (0..l).collect();
                p.swap(l - 2, l - 1);
                p
            }
            (Family::E, 6) => vec![5, 1, 4, 3, 2, 0],
            _ => (0..l).collect(),
        };

        let rs = RootSystem {
            simple_type: t,
            rank: l,
            cartan,
            inv_cartan,
            positive_roots,
            root_norms: norms,
            w0_perm,
            dim_g,
        };
        debug_assert!(rs.check_w0());
        rs
    }

    fn check_w0(&self) -> bool {
        // -w0 sends each fundamental weight to the permuted one.
        (0..self.rank).all(|i| {
            let mut v = vec![0i64; self.rank];
            v[i] = -1;
            let (dom, _) = self.dominantize(&v);
            let mut expect = vec![0i64; self.rank];
            expect[self.w0_perm[i]] = 1;
            dom == expect
        })
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn fundamental_weight(&self, i: usize) -> DominantWeight {
        assert!((1..=self.rank).contains(&i));
        let mut c = vec![0; self.rank];
        c[i - 1] = 1;
        DominantWeight::new(c)
    }

    pub fn rho(&self) -> Vec<i64> {
        vec![1; self.rank]
    }

    /// α_j in fundamental-weight coordinates (column j of the Cartan matrix).
    pub fn simple_root_weight_coords(&self, j: usize) -> Vec<i64> {
        (0..self.rank).map(|i| self.cartan[i][j]).collect()
    }

    /// Root-coordinate vector to fundamental-weight coordinates.
    pub fn root_to_weight_coords(&self, c: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * c[j]).sum())
            .collect()
    }

    /// s_i acting on fundamental-weight coordinates.
    pub fn reflect_weight(&self, v: &[i64], i: usize) -> Vec<i64> {
        let ai = v[i];
        (0..self.rank).map(|k| v[k] - ai * self.cartan[k][i]).collect()
    }

    pub fn reflect_weight_rat(&self, v: &[Rat], i: usize) -> Vec<Rat> {
        let ai = v[i].clone();
        (0..self.rank)
            .map(|k| &v[k] - &ai * rat(self.cartan[k][i]))
            .collect()
    }

    /// Matrix of s_i on weight coordinates.
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let mut m = vec![vec![0i64; self.rank]; self.rank];
        for k in 0..self.rank {
            m[k][k] = 1;
            m[k][i] -= self.cartan[k][i];
        }
        WeylElement {
            word: vec![i + 1],
            matrix: m,
        }
    }

    pub fn identity_element(&self) -> WeylElement {
        let mut m = vec![vec![0i64; self.rank]; self.rank];
        for k in 0..self.rank {
            m[k][k] = 1;
        }
        WeylElement {
            word: vec![],
            matrix: m,
        }
    }

    /// Composes a word of 1-based reflection indices into a Weyl element
    /// (applied right to left, as matrices).
    pub fn element_from_word(&self, word: &[usize]) -> WeylElement {
        let mut el = self.identity_element();
        for &i in word.iter().rev() {
            el = self.compose(&self.simple_reflection(i - 1), &el);
        }
        WeylElement {
            word: word.to_vec(),
            matrix: el.matrix,
        }
    }

    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for k in 0..n {
                if a.matrix[i][k] == 0 {
                    continue;
                }
                for j in 0..n {
                    m[i][j] += a.matrix[i][k] * b.matrix[k][j];
                }
            }
        }
        let mut word = a.word.clone();
        word.extend_from_slice(&b.word);
        WeylElement { word, matrix: m }
    }

    /// Brings an integer weight into the dominant chamber; returns the
    /// dominant representative and the word w (as reflection indices,
    /// leftmost applied last) with w · v dominant.
    pub fn dominantize(&self, v: &[i64]) -> (Vec<i64>, Vec<usize>) {
        let mut v = v.to_vec();
        let mut word = Vec::new();
        loop {
            match (0..self.rank).find(|&i| v[i] < 0) {
                None => return (v, word),
                Some(i) => {
                    v = self.reflect_weight(&v, i);
                    word.push(i + 1);
                }
            }
        }
    }

    /// ρ-shifted dominantization with sign, dropping weights on walls.
    /// Input and output are ρ-shifted (all coordinates of a surviving output
    /// are strictly positive).
    pub fn dominantize_signed(&self, v: &[i64]) -> Option<(Vec<i64>, i64)> {
        let mut v = v.to_vec();
        let mut sign = 1i64;
        loop {
            if v.iter().any(|&c| c == 0) {
                return None;
            }
            match (0..self.rank).find(|&i| v[i] < 0) {
                None => return Some((v, sign)),
                Some(i) => {
                    v = self.reflect_weight(&v, i);
                    sign = -sign;
                }
            }
        }
    }

    /// The highest weight of the dual module: λ* = -w0(λ).
    pub fn dual_weight(&self, lam: &DominantWeight) -> DominantWeight {
        let mut c = vec![0i64; self.rank];
        for i in 0..self.rank {
            c[self.w0_perm[i]] = lam.coords[i];
        }
        DominantWeight::new(c)
    }

    /// Full Weyl orbit of a rational weight vector.
    pub fn weyl_orbit(&self, v: &[Rat]) -> Vec<Vec<Rat>> {
        let mut seen: HashSet<Vec<Rat>> = HashSet::new();
        let mut queue = vec![v.to_vec()];
        seen.insert(v.to_vec());
        while let Some(w) = queue.pop() {
            for i in 0..self.rank {
                let r = self.reflect_weight_rat(&w, i);
                if seen.insert(r.clone()) {
                    queue.push(r);
                }
            }
        }
        let mut out: Vec<Vec<Rat>> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Orbit of an integer weight vector.
    pub fn weyl_orbit_int(&self, v: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = vec![v.to_vec()];
        seen.insert(v.to_vec());
        while let Some(w) = queue.pop() {
            for i in 0..self.rank {
                let r = self.reflect_weight(&w, i);
                if seen.insert(r.clone()) {
                    queue.push(r);
                }
            }
        }
        let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// |W|, by the classical product formulas.
    pub fn weyl_order(&self) -> u128 {
        let l = self.rank as u128;
        let fact = |n: u128| (1..=n).product::<u128>();
        match self.simple_type.family {
            Family::A => fact(l + 1),
            Family::B | Family::C => (1u128 << l) * fact(l),
            Family::D => (1u128 << (l - 1)) * fact(l),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                8 => 696_729_600,
                _ => unreachable!(),
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// dim L_i for the standard maximal parabolic at node i (1-based):
    /// rank plus twice the positive roots avoiding node i.
    pub fn levi_dimension(&self, i: usize) -> usize {
        assert!((1..=self.rank).contains(&i));
        let avoid = self
            .positive_roots
            .iter()
            .filter(|r| r[i - 1] == 0)
            .count();
        self.rank + 2 * avoid
    }

    /// Nodes where dim L_i is maximal, the exact ratio 2 dim G / (dim G - dim L),
    /// and its floor.
    pub fn levi_bound_data(&self) -> (Vec<usize>, Rat, u64) {
        let dims: Vec<usize> = (1..=self.rank).map(|i| self.levi_dimension(i)).collect();
        let max = *dims.iter().max().unwrap();
        let argmax: Vec<usize> = (1..=self.rank).filter(|&i| dims[i - 1] == max).collect();
        let num = rat(2 * self.dim_g as i64);
        let den = rat((self.dim_g - max) as i64);
        let frac = num / den;
        let floor = frac.floor().to_integer();
        let floor_u: u64 = floor.try_into().expect("bound fits in u64");
        (argmax, frac, floor_u)
    }

    /// The open-orbit length bound b_G.
    pub fn bound_b_g(&self) -> u64 {
        self.levi_bound_data().2
    }

    /// Inner product scaled so weights pair integrally:
    /// (μ, α) with μ in fundamental-weight coordinates and α in simple-root
    /// coordinates is Σ_j μ_j c_j d_j.
    pub fn pair_weight_root(&self, mu: &[i64], alpha_root: &[i64]) -> i64 {
        (0..self.rank)
            .map(|j| mu[j] * alpha_root[j] * self.root_norms[j])
            .sum()
    }

    /// (α, α) for α in simple-root coordinates.
    pub fn root_norm2(&self, alpha_root: &[i64]) -> i64 {
        let w = self.root_to_weight_coords(alpha_root);
        self.pair_weight_root(&w, alpha_root)
    }

    /// The highest root of the dual system R^∨ in simple-coroot coordinates.
    pub fn dual_highest_root(&self) -> Vec<i64> {
        // R^∨ has Cartan matrix equal to the transpose.
        let l = self.rank;
        let mut tc = vec![vec![0i64; l]; l];
        for i in 0..l {
            for j in 0..l {
                tc[i][j] = self.cartan[j][i];
            }
        }
        let pos = positive_roots_closure(&tc);
        pos.into_iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .unwrap()
    }
}

/// All positive roots of the system with the given Cartan matrix, in
/// simple-root coordinates, generated by closing the simple roots under the
/// simple reflections. Sorted by height then lexicographically.
fn positive_roots_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for j in 0..l {
        let mut e = vec![0i64; l];
        e[j] = 1;
        seen.insert(e.clone());
        queue.push(e);
    }
    while let Some(r) = queue.pop() {
        // <r, α_i^∨> = Σ_j cartan[i][j] r[j]; s_i(r) = r - <r, α_i^∨> α_i.
        for i in 0..l {
            let pairing: i64 = (0..l).map(|j| cartan[i][j] * r[j]).sum();
            let mut s = r.clone();
            s[i] -= pairing;
            if s.iter().all(|&c| c >= 0) && seen.insert(s.clone()) {
                queue.push(s);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(SimpleType::parse(s).unwrap())
    }

    #[test]
    fn rank_validation() {
        assert!(SimpleType::parse("A1").is_ok());
        assert!(SimpleType::parse("E9").is_err());
        assert!(SimpleType::parse("F3").is_err());
        assert!(SimpleType::parse("D3").is_err());
        // B2 aliases to C2.
        assert_eq!(SimpleType::parse("B2").unwrap(), SimpleType::parse("C2").unwrap());
    }

    #[test]
    fn positive_root_counts_and_dims() {
        for (t, pos, dim) in [
            ("A1", 1, 3),
            ("A3", 6, 15),
            ("B3", 9, 21),
            ("C2", 4, 10),
            ("C4", 16, 36),
            ("D4", 12, 28),
            ("E6", 36, 78),
            ("E7", 63, 133),
            ("E8", 120, 248),
            ("F4", 24, 52),
            ("G2", 6, 14),
        ] {
            let r = rs(t);
            assert_eq!(r.num_positive_roots(), pos, "{}", t);
            assert_eq!(r.dim_g, dim, "{}", t);
        }
    }

    #[test]
    fn cartan_inverse_is_exact_and_positive() {
        for t in ["A4", "B5", "C3", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(t);
            let cq: QMat = r
                .cartan
                .iter()
                .map(|row| row.iter().map(|&x| rat(x)).collect())
                .collect();
            let prod = crate::linalg::mat_mul_q(&cq, &r.inv_cartan);
            assert_eq!(prod, crate::linalg::identity_q(r.rank), "{}", t);
        }
    }

    #[test]
    fn dual_weight_examples() {
        let a3 = rs("A3");
        let l = DominantWeight::new(vec![1, 0, 0]);
        assert_eq!(a3.dual_weight(&l).coords, vec![0, 0, 1]);
        let b3 = rs("B3");
        let l = DominantWeight::new(vec![2, 1, 3]);
        assert_eq!(b3.dual_weight(&l), l);
        let e6 = rs("E6");
        let l = DominantWeight::new(vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(e6.dual_weight(&l).coords, vec![0, 0, 0, 0, 0, 1]);
        // Example-style check: ((a1+a2)ϖ1 + a3 ϖ3 + a4 ϖ6)* = a4 ϖ1 + a3 ϖ5 + (a1+a2) ϖ6.
        let l = DominantWeight::new(vec![3, 0, 2, 0, 0, 5]);
        assert_eq!(e6.dual_weight(&l).coords, vec![5, 0, 0, 0, 2, 3]);
    }

    #[test]
    fn support_and_parabolic() {
        let w = DominantWeight::new(vec![0, 3, 0, 1]);
        assert_eq!(w.support(), vec![2, 4]);
        assert!(DominantWeight::zero(3).support().is_empty());
        assert_eq!(DominantWeight::new(vec![1, 1, 1]).support(), vec![1, 2, 3]);
        let a = DominantWeight::new(vec![2, 0]);
        let b = DominantWeight::new(vec![5, 0]);
        assert!(same_parabolic(&a, &b));
        assert!(!same_parabolic(
            &DominantWeight::new(vec![1, 0]),
            &DominantWeight::new(vec![0, 1])
        ));
    }

    #[test]
    fn weyl_orbits() {
        let a1 = rs("A1");
        assert_eq!(a1.weyl_orbit_int(&[1]).len(), 2);
        let a2 = rs("A2");
        assert_eq!(a2.weyl_orbit_int(&[1, 0]).len(), 3);
        let g2 = rs("G2");
        // Generic interior point has trivial stabilizer: |W(G2)| = 12.
        assert_eq!(g2.weyl_orbit_int(&[1, 2]).len(), 12);
        assert_eq!(g2.weyl_orbit_int(&[1, 1]).len(), 12);
    }

    #[test]
    fn strictly_dominant_orbit_has_weyl_order_cardinality() {
        for t in ["A1", "A2", "A3", "A4", "C2", "B3", "C3", "D4", "B4", "C4", "F4", "G2"] {
            let r = rs(t);
            let v = vec![1i64; r.rank];
            assert_eq!(r.weyl_orbit_int(&v).len() as u128, r.weyl_order(), "{}", t);
        }
    }

    #[test]
    fn levi_dimensions() {
        let a2 = rs("A2");
        assert_eq!(a2.levi_dimension(1), 4);
        let e6 = rs("E6");
        let (m, frac, floor) = e6.levi_bound_data();
        assert_eq!(m, vec![1, 6]);
        assert_eq!(frac, crate::rat::ratio(39, 8));
        assert_eq!(floor, 4);
        let g2 = rs("G2");
        assert_eq!(g2.levi_dimension(1), g2.levi_dimension(2));
    }

    #[test]
    fn bound_b_g_reproduces_selected_entries() {
        assert_eq!(rs("A1").bound_b_g(), 3);
        assert_eq!(rs("A5").bound_b_g(), 7);
        assert_eq!(rs("F4").bound_b_g(), 3);
        assert_eq!(rs("G2").bound_b_g(), 2);
        assert_eq!(rs("E7").bound_b_g(), 4);
    }

    #[test]
    fn dual_highest_root_has_full_support() {
        for t in ["A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
            let r = rs(t);
            let theta = r.dual_highest_root();
            assert!(theta.iter().all(|&c| c > 0), "{}", t);
        }
    }
}
