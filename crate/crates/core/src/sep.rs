//! Separation index of irreducible finite reflection groups.
//!
//! A sequence of Weyl chambers is separating when every nonzero linear form
//! is strictly positive on the closure of one of them (minus the origin).
//! Dualized: the form must lie in the open dual cone of that chamber, and
//! the dual cone of w·C̄ is spanned by the w-images of the simple coroots.
//! Covering the punctured dual space by open simplicial cones is decided
//! exactly on the cells of the arrangement cut out by all facet hyperplanes
//! of all candidate cones: membership in an open cone is constant on each
//! cell and readable off the cell's sign vector. The minimum cover is found
//! by branch and bound with a greedy upper bound; rank ≥ 4 runs under a
//! time budget and reports bracketing bounds on timeout.
//!
//! Dihedral groups I2(p) reduce to covering a circle of 4p half-units by 2p
//! open arcs of length 2p-2, solved exactly in integer arithmetic.

use crate::linalg::rank_q;
use crate::lp::{simplex_max, LpOutcome};
use crate::rat::{fmt_rat, rat, Rat};
use crate::rootsys::{RootSystem, WeylElement};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::HashMap;
use std::time::{Duration, Instant};

/// All Weyl group elements, BFS by word length, deterministically ordered
/// by (length, word).
pub fn enumerate_weyl(rs: &RootSystem) -> Vec<WeylElement> {
    let mut seen: HashMap<Vec<Vec<i64>>, WeylElement> = HashMap::new();
    let id = rs.identity_element();
    seen.insert(id.matrix.clone(), id.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..rs.rank {
                let e = rs.compose(w, &rs.simple_reflection(i));
                if !seen.contains_key(&e.matrix) {
                    let mut word = w.word.clone();
                    word.push(i + 1);
                    let e = WeylElement {
                        word,
                        matrix: e.matrix,
                    };
                    seen.insert(e.matrix.clone(), e.clone());
                    next.push(e);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<WeylElement> = seen.into_values().collect();
    out.sort_by(|a, b| (a.word.len(), &a.word).cmp(&(b.word.len(), &b.word)));
    out
}

/// Arrangement of the facet hyperplanes of the dual cones of `chambers`,
/// with per-chamber facet orientations.
struct Arrangement {
    rank: usize,
    /// Primitive integer normals (in weight coordinates, acting on covectors).
    normals: Vec<Vec<i64>>,
    /// For each chamber, its r facets as (hyperplane index, orientation).
    facets: Vec<Vec<(usize, i8)>>,
}

fn build_arrangement(rs: &RootSystem, chambers: &[WeylElement]) -> Arrangement {
    let r = rs.rank;
    let mut normals: Vec<Vec<i64>> = Vec::new();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut facets = Vec::with_capacity(chambers.len());
    for w in chambers {
        let mut fs = Vec::with_capacity(r);
        for j in 0..r {
            let n: Vec<i64> = (0..r).map(|k| w.matrix[k][j]).collect();
            let prim = crate::rat::primitive_part(&n);
            let flip = prim.iter().find(|&&c| c != 0).map_or(false, |&c| c < 0);
            let key: Vec<i64> = if flip {
                prim.iter().map(|&c| -c).collect()
            } else {
                prim
            };
            let h = *index.entry(key.clone()).or_insert_with(|| {
                normals.push(key.clone());
                normals.len() - 1
            });
            fs.push((h, if flip { -1 } else { 1 }));
        }
        facets.push(fs);
    }
    Arrangement {
        rank: r,
        normals,
        facets,
    }
}

/// Feasibility of a partial sign vector; returns a representative covector
/// when the signs are realizable and not all zero.
fn sign_vector_solve(
    normals: &[Vec<i64>],
    signs: &[i8],
    rank: usize,
) -> Option<Option<Vec<Rat>>> {
    let nz: Vec<usize> = (0..signs.len()).filter(|&h| signs[h] != 0).collect();
    if nz.is_empty() {
        // Realizable iff the zero-constrained normals do not span.
        let rows: crate::linalg::QMat = signs
            .iter()
            .enumerate()
            .map(|(h, _)| normals[h].iter().map(|&c| rat(c)).collect())
            .collect();
        return if rows.is_empty() || rank_q(&rows) < rank {
            Some(None)
        } else {
            None
        };
    }
    // variables: p (rank), q (rank), surplus s_h per strict row, ε
    let nvars = 2 * rank + nz.len() + 1;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    let mut strict_idx = 0;
    for (h, &s) in signs.iter().enumerate() {
        let n = &normals[h];
        let mut row = vec![Rat::zero(); nvars];
        for k in 0..rank {
            let c = rat(n[k] as i64 * s.max(if s == 0 { 1 } else { s }) as i64);
            let _ = c;
        }
        // fill: σ_h ⟨n_h, p - q⟩ - surplus - ε = 0 (strict), ⟨n_h, p - q⟩ = 0 (zero)
        let sgn = if s == 0 { 1i64 } else { s as i64 };
        for k in 0..rank {
            row[k] = rat(sgn * n[k]);
            row[rank + k] = rat(-sgn * n[k]);
        }
        if s != 0 {
            row[2 * rank + strict_idx] = -Rat::one();
            row[nvars - 1] = -Rat::one();
            strict_idx += 1;
        }
        rows.push(row);
        rhs.push(Rat::zero());
    }
    // normalization Σ_strict σ_h ⟨n_h, l⟩ = 1 keeps the LP bounded and
    // excludes the origin
    let mut norm_row = vec![Rat::zero(); nvars];
    for &h in &nz {
        let sgn = signs[h] as i64;
        for k in 0..rank {
            norm_row[k] += rat(sgn * normals[h][k]);
            norm_row[rank + k] += rat(-sgn * normals[h][k]);
        }
    }
    rows.push(norm_row);
    rhs.push(Rat::one());
    let mut obj = vec![Rat::zero(); nvars];
    obj[nvars - 1] = Rat::one();
    match simplex_max(&rows, &rhs, &obj) {
        LpOutcome::Optimal(v, x) if v.is_positive() => {
            let l: Vec<Rat> = (0..rank).map(|k| &x[k] - &x[rank + k]).collect();
            Some(Some(l))
        }
        _ => None,
    }
}

/// One cell of the arrangement: its sign vector and a rational interior
/// representative covector.
#[derive(Debug, Clone, Serialize)]
pub struct Cell {
    pub signs: Vec<i8>,
    pub representative: Vec<String>,
}

fn enumerate_cells(arr: &Arrangement, deadline: Option<Instant>) -> Option<Vec<(Vec<i8>, Vec<Rat>)>> {
    let m = arr.normals.len();
    let mut partials: Vec<Vec<i8>> = vec![vec![]];
    for h in 0..m {
        let mut next = Vec::new();
        for p in &partials {
            for s in [1i8, -1, 0] {
                if let Some(d) = deadline {
                    if Instant::now() > d {
                        return None;
                    }
                }
                let mut q = p.clone();
                q.push(s);
                if sign_vector_solve(&arr.normals[..h + 1], &q, arr.rank).is_some() {
                    next.push(q);
                }
            }
        }
        partials = next;
    }
    let mut out = Vec::new();
    for signs in partials {
        if signs.iter().all(|&s| s == 0) {
            continue; // the origin
        }
        let rep = sign_vector_solve(&arr.normals, &signs, arr.rank)
            .flatten()
            .expect("full sign vector stays feasible");
        out.push((signs, rep));
    }
    Some(out)
}

/// Is the cell inside the open dual cone of chamber `c`?
fn covers(arr: &Arrangement, signs: &[i8], c: usize) -> bool {
    arr.facets[c].iter().all(|&(h, o)| signs[h] as i64 * o as i64 == 1)
}

/// A replayable covering certificate.
#[derive(Debug, Clone, Serialize)]
pub struct SepCertificate {
    /// Chosen chambers as reduced words in simple reflections.
    pub chamber_words: Vec<Vec<usize>>,
    /// Every arrangement cell with the index (into `chamber_words`) of a
    /// chamber covering it.
    pub proof_cells: Vec<(Cell, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub enum SepResult {
    Exact {
        value: usize,
        certificate: SepCertificate,
    },
    /// Budget exhausted: the index lies in [lower, upper]; the certificate
    /// witnesses the upper bound.
    Bounds {
        lower: usize,
        upper: usize,
        certificate: SepCertificate,
    },
}

impl SepResult {
    pub fn value_or_upper(&self) -> usize {
        match self {
            SepResult::Exact { value, .. } => *value,
            SepResult::Bounds { upper, .. } => *upper,
        }
    }
    pub fn certificate(&self) -> &SepCertificate {
        match self {
            SepResult::Exact { certificate, .. } => certificate,
            SepResult::Bounds { certificate, .. } => certificate,
        }
    }
}

struct Cover {
    /// For each cell, the chambers covering it.
    cell_sets: Vec<Vec<u32>>,
    /// For each chamber, the cells it covers, as a bitset.
    chamber_cells: Vec<Vec<u64>>,
    ncells: usize,
}

fn build_cover(arr: &Arrangement, cells: &[(Vec<i8>, Vec<Rat>)]) -> Cover {
    let nch = arr.facets.len();
    let blocks = (cells.len() + 63) / 64;
    let mut cell_sets = vec![Vec::new(); cells.len()];
    let mut chamber_cells = vec![vec![0u64; blocks]; nch];
    for (ci, (signs, _)) in cells.iter().enumerate() {
        for ch in 0..nch {
            if covers(arr, signs, ch) {
                cell_sets[ci].push(ch as u32);
                chamber_cells[ch][ci / 64] |= 1u64 << (ci % 64);
            }
        }
    }
    Cover {
        cell_sets,
        chamber_cells,
        ncells: cells.len(),
    }
}

fn popcount(bits: &[u64]) -> usize {
    bits.iter().map(|b| b.count_ones() as usize).sum()
}

struct Bb<'a> {
    cover: &'a Cover,
    best: Vec<u32>,
    deadline: Option<Instant>,
    complete: bool,
}

impl<'a> Bb<'a> {
    fn run(&mut self, uncovered: &[u64], chosen: &mut Vec<u32>) {
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                self.complete = false;
                return;
            }
        }
        let left = popcount(uncovered);
        if left == 0 {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        // lower bound: ceil(left / best single-chamber coverage of the rest)
        let maxcov = self
            .cover
            .chamber_cells
            .iter()
            .map(|cc| {
                cc.iter()
                    .zip(uncovered)
                    .map(|(a, b)| (a & b).count_ones() as usize)
                    .sum::<usize>()
            })
            .max()
            .unwrap_or(0);
        if maxcov == 0 {
            return; // uncoverable from here
        }
        let lb = (left + maxcov - 1) / maxcov;
        if chosen.len() + lb >= self.best.len() {
            return;
        }
        // branch on the most constrained uncovered cell
        let mut branch_cell = None;
        let mut fewest = usize::MAX;
        for ci in 0..self.cover.ncells {
            if uncovered[ci / 64] >> (ci % 64) & 1 == 1 {
                let options = self.cover.cell_sets[ci].len();
                if options < fewest {
                    fewest = options;
                    branch_cell = Some(ci);
                }
            }
        }
        let ci = branch_cell.unwrap();
        for &ch in &self.cover.cell_sets[ci] {
            let mut next: Vec<u64> = uncovered
                .iter()
                .zip(&self.cover.chamber_cells[ch as usize])
                .map(|(u, c)| u & !c)
                .collect();
            chosen.push(ch);
            self.run(&mut next, chosen);
            chosen.pop();
        }
    }
}

fn greedy_cover(cover: &Cover) -> Option<Vec<u32>> {
    let blocks = (cover.ncells + 63) / 64;
    let mut uncovered = vec![u64::MAX; blocks];
    if cover.ncells % 64 != 0 {
        uncovered[blocks - 1] = (1u64 << (cover.ncells % 64)) - 1;
    }
    if blocks == 0 {
        return Some(vec![]);
    }
    let mut chosen = Vec::new();
    while popcount(&uncovered) > 0 {
        let mut best = (0usize, None);
        for (ch, cc) in cover.chamber_cells.iter().enumerate() {
            let gain: usize = cc
                .iter()
                .zip(&uncovered)
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum();
            if gain > best.0 {
                best = (gain, Some(ch));
            }
        }
        let ch = best.1?;
        for (u, c) in uncovered.iter_mut().zip(&cover.chamber_cells[ch]) {
            *u &= !c;
        }
        chosen.push(ch as u32);
    }
    Some(chosen)
}

fn certificate_for(
    rs: &RootSystem,
    chambers: &[WeylElement],
    chosen: &[u32],
    cells: &[(Vec<i8>, Vec<Rat>)],
    arr: &Arrangement,
) -> SepCertificate {
    let _ = rs;
    let chamber_words: Vec<Vec<usize>> =
        chosen.iter().map(|&c| chambers[c as usize].word.clone()).collect();
    let mut proof_cells = Vec::new();
    for (signs, rep) in cells {
        let k = chosen
            .iter()
            .position(|&c| covers(arr, signs, c as usize))
            .expect("certificate covers every cell");
        proof_cells.push((
            Cell {
                signs: signs.clone(),
                representative: rep.iter().map(fmt_rat).collect(),
            },
            k,
        ));
    }
    SepCertificate {
        chamber_words,
        proof_cells,
    }
}

/// Exact separation index with a replayable certificate; on budget
/// exhaustion, bracketing bounds with the best certificate found.
pub fn sep_index(rs: &RootSystem, budget: Duration) -> SepResult {
    let start = Instant::now();
    let deadline = start + budget;
    let chambers = enumerate_weyl(rs);
    let arr = build_arrangement(rs, &chambers);
    let rank_lb = rs.rank + 1;
    let wall = |upper: usize, cert: SepCertificate| SepResult::Bounds {
        lower: rank_lb,
        upper,
        certificate: cert,
    };

    let cells = match enumerate_cells(&arr, Some(deadline)) {
        Some(c) => c,
        None => {
            // Could not even enumerate cells in budget: all chambers work.
            let all: Vec<u32> = (0..chambers.len() as u32).collect();
            let arr_small = build_arrangement(rs, &chambers);
            let cells = enumerate_cells(&arr_small, None).unwrap();
            let cert = certificate_for(rs, &chambers, &all, &cells, &arr_small);
            return wall(chambers.len(), cert);
        }
    };
    let cover = build_cover(&arr, &cells);
    for cs in &cover.cell_sets {
        assert!(!cs.is_empty(), "every cell is covered by some chamber");
    }
    let greedy = greedy_cover(&cover).expect("full chamber set covers");
    let mut bb = Bb {
        cover: &cover,
        best: greedy,
        deadline: Some(deadline),
        complete: true,
    };
    let blocks = (cover.ncells + 63) / 64;
    let mut uncovered = vec![u64::MAX; blocks];
    if cover.ncells % 64 != 0 {
        uncovered[blocks - 1] = (1u64 << (cover.ncells % 64)) - 1;
    }
    bb.run(&uncovered, &mut Vec::new());
    let mut best = bb.best.clone();
    best.sort_unstable();
    let cert = certificate_for(rs, &chambers, &best, &cells, &arr);
    let value = best.len();
    if bb.complete {
        assert!(rank_lb <= value && value <= chambers.len());
        SepResult::Exact {
            value,
            certificate: cert,
        }
    } else {
        wall(value, cert)
    }
}

/// Do the open dual cones of `chambers` cover the punctured dual space?
/// Decided exactly on the cells of the sub-arrangement cut out by the given
/// chambers' facet hyperplanes.
pub fn verify_separating(rs: &RootSystem, chambers: &[WeylElement]) -> bool {
    if chambers.is_empty() {
        return false;
    }
    let arr = build_arrangement(rs, chambers);
    let cells = enumerate_cells(&arr, None).unwrap();
    cells
        .iter()
        .all(|(signs, _)| (0..chambers.len()).any(|c| covers(&arr, signs, c)))
}

/// Reconstructs Weyl elements from certificate words.
pub fn chambers_from_words(rs: &RootSystem, words: &[Vec<usize>]) -> Vec<WeylElement> {
    words.iter().map(|w| rs.element_from_word(w)).collect()
}

/// Separation index of the dihedral group I2(p), p >= 3, by exact circular
/// arc covering: in half-units of π/p the circle has 4p integer points and
/// the dual of chamber i is the open arc (2i+2-p, 2i+p), whose interior
/// integer points form a run of length 2p-3. Returns the index and one
/// optimal arc selection.
pub fn sep_index_dihedral(p: i64) -> (usize, Vec<usize>) {
    assert!(p >= 3, "dihedral index needs p >= 3");
    let n = 4 * p;
    let len = 2 * p - 3; // interior integer points per arc
    let arcs: Vec<i64> = (0..2 * p).map(|i| (2 * i + 3 - p).rem_euclid(n)).collect();
    let mut best: Option<Vec<usize>> = None;
    for first in 0..arcs.len() {
        let start = arcs[first];
        let mut chain = vec![first];
        let mut end = start + len - 1; // inclusive, unwrapped
        while end - start + 1 < n {
            // furthest-reaching arc starting within [.., end+1]
            let mut pick: Option<(i64, usize)> = None;
            for (j, &s) in arcs.iter().enumerate() {
                // unwrap s to the first position >= start
                let mut su = s;
                while su < start {
                    su += n;
                }
                for su in [su, su + n] {
                    if su <= end + 1 {
                        let e = su + len - 1;
                        if pick.map_or(true, |(pe, _)| e > pe) {
                            pick = Some((e, j));
                        }
                    }
                }
            }
            match pick {
                Some((e, j)) if e > end => {
                    end = e;
                    chain.push(j);
                }
                _ => {
                    chain.clear();
                    break;
                }
            }
            if chain.len() > arcs.len() {
                chain.clear();
                break;
            }
        }
        if !chain.is_empty() && best.as_ref().map_or(true, |b| chain.len() < b.len()) {
            best = Some(chain);
        }
    }
    let best = best.expect("the full arc set covers the circle");
    (best.len(), best)
}

/// Checks an arc selection for I2(p) against every integer point.
pub fn verify_dihedral_cover(p: i64, arcs: &[usize]) -> bool {
    let n = 4 * p;
    let len = 2 * p - 3;
    (0..n).all(|x| {
        arcs.iter().any(|&i| {
            let s = (2 * i as i64 + 3 - p).rem_euclid(n);
            (x - s).rem_euclid(n) < len
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SimpleType;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(SimpleType::parse(s).unwrap())
    }

    #[test]
    fn weyl_enumeration_counts() {
        for t in ["A1", "A2", "C2", "G2", "A3", "B3"] {
            let r = rs(t);
            assert_eq!(enumerate_weyl(&r).len() as u128, r.weyl_order(), "{}", t);
        }
    }

    #[test]
    fn sep_small_types() {
        let budget = Duration::from_secs(60);
        for (t, want) in [("A1", 2usize), ("A2", 6), ("C2", 4), ("G2", 3)] {
            match sep_index(&rs(t), budget) {
                SepResult::Exact { value, certificate } => {
                    assert_eq!(value, want, "{}", t);
                    let r = rs(t);
                    let chosen = chambers_from_words(&r, &certificate.chamber_words);
                    assert!(verify_separating(&r, &chosen), "{}", t);
                    // minimality witness: dropping any chamber breaks the cover
                    for skip in 0..chosen.len() {
                        let rest: Vec<WeylElement> = chosen
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| *i != skip)
                            .map(|(_, c)| c.clone())
                            .collect();
                        assert!(!verify_separating(&r, &rest), "{} drop {}", t, skip);
                    }
                }
                other => panic!("{}: expected exact result, got {:?}", t, other),
            }
        }
    }

    #[test]
    fn single_chamber_never_separates() {
        let r = rs("A1");
        assert!(!verify_separating(&r, &[r.identity_element()]));
        let all = enumerate_weyl(&r);
        assert!(verify_separating(&r, &all));
    }

    #[test]
    fn dihedral_values() {
        assert_eq!(sep_index_dihedral(3).0, 6);
        assert_eq!(sep_index_dihedral(4).0, 4);
        assert_eq!(sep_index_dihedral(5).0, 4);
        assert_eq!(sep_index_dihedral(6).0, 3);
        assert_eq!(sep_index_dihedral(7).0, 3);
        for p in [8i64, 20, 100, 1000] {
            let (v, arcs) = sep_index_dihedral(p);
            assert_eq!(v, 3, "p={}", p);
            assert!(verify_dihedral_cover(p, &arcs));
        }
    }

    #[test]
    fn dihedral_matches_crystallographic_rank2() {
        let budget = Duration::from_secs(60);
        for (t, p) in [("A2", 3i64), ("C2", 4), ("G2", 6)] {
            let v = sep_index(&rs(t), budget).value_or_upper();
            assert_eq!(v, sep_index_dihedral(p).0, "{} vs I2({})", t, p);
        }
    }

    #[test]
    fn b3_within_footnote_bound() {
        // sep(B3) <= 2^{l+1} - 2 = 14
        let res = sep_index(&rs("B3"), Duration::from_secs(30));
        let v = res.value_or_upper();
        assert!(v <= 14, "got {}", v);
        assert!(v >= 4);
    }
}
