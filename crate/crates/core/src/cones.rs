//! Exact rational polyhedral geometry: membership and relative-interior
//! tests for finitely generated cones, convex hulls containing the origin,
//! and the rank+1 chamber construction whose closures force 0 into every
//! convex hull of selected points.
//!
//! Interiors are relative interiors throughout. Strict feasibility is
//! decided by maximizing a slack variable with the exact simplex; the
//! decision threshold is slack > 0, no epsilon. An all-zero generator list
//! yields the zero cone, whose interior is empty by convention.

use crate::lp::{feasible_point, fm_feasible, sup_positive, FmConstraint};
use crate::rat::{is_zero_vec, rat, Rat};
use crate::rootsys::{RootSystem, WeylElement};
use num_traits::{One, Zero};

/// Finitely generated convex cone over the rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalCone {
    pub ambient_dim: usize,
    pub generators: Vec<Vec<Rat>>,
}

impl RationalCone {
    /// Zero generators are filtered out.
    pub fn new(ambient_dim: usize, generators: Vec<Vec<Rat>>) -> Self {
        let generators: Vec<Vec<Rat>> = generators
            .into_iter()
            .filter(|g| !is_zero_vec(g))
            .collect();
        for g in &generators {
            assert_eq!(g.len(), ambient_dim);
        }
        RationalCone {
            ambient_dim,
            generators,
        }
    }

    pub fn from_int(ambient_dim: usize, gens: &[Vec<i64>]) -> Self {
        RationalCone::new(
            ambient_dim,
            gens.iter().map(|g| crate::rat::vec_i64_to_rat(g)).collect(),
        )
    }

    /// Dimension of the linear span of the cone.
    pub fn span_dim(&self) -> usize {
        if self.generators.is_empty() {
            return 0;
        }
        crate::linalg::rank_q(&self.generators.to_vec())
    }
}

/// x ∈ cone(generators); with `strict`, x ∈ relint(cone).
///
/// relint(cone{g_i}) is exactly the set of combinations with all
/// coefficients strictly positive, so the strict test maximizes a common
/// lower bound ε on the coefficients.
pub fn cone_member(cone: &RationalCone, x: &[Rat], strict: bool) -> bool {
    assert_eq!(x.len(), cone.ambient_dim);
    let m = cone.generators.len();
    if m == 0 {
        return !strict && is_zero_vec(x);
    }
    let r = cone.ambient_dim;
    if !strict {
        let a: Vec<Vec<Rat>> = (0..r)
            .map(|row| (0..m).map(|j| cone.generators[j][row].clone()).collect())
            .collect();
        return feasible_point(&a, x).is_some();
    }
    // variables: u_1..u_m >= 0, ε >= 0 with t_j = ε + u_j
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(r);
    for row in 0..r {
        let mut line: Vec<Rat> = (0..m).map(|j| cone.generators[j][row].clone()).collect();
        let s: Rat = (0..m).fold(Rat::zero(), |acc, j| acc + &cone.generators[j][row]);
        line.push(s);
        a.push(line);
    }
    let mut c = vec![Rat::zero(); m + 1];
    c[m] = Rat::one();
    sup_positive(&a, x, &c)
}

/// Independent Fourier–Motzkin route for `cone_member`.
pub fn cone_member_fm(cone: &RationalCone, x: &[Rat], strict: bool) -> bool {
    let m = cone.generators.len();
    if m == 0 {
        return !strict && is_zero_vec(x);
    }
    let r = cone.ambient_dim;
    let mut cons: Vec<FmConstraint> = Vec::new();
    for j in 0..m {
        let mut coeffs = vec![Rat::zero(); m];
        coeffs[j] = Rat::one();
        cons.push(if strict {
            FmConstraint::gt(coeffs, Rat::zero())
        } else {
            FmConstraint::ge(coeffs, Rat::zero())
        });
    }
    for row in 0..r {
        let coeffs: Vec<Rat> = (0..m).map(|j| cone.generators[j][row].clone()).collect();
        cons.extend(FmConstraint::eq(coeffs, x[row].clone()));
    }
    fm_feasible(cons, m)
}

/// 0 ∈ conv(points)?
pub fn zero_in_conv(points: &[Vec<Rat>]) -> bool {
    if points.is_empty() {
        return false;
    }
    let r = points[0].len();
    let n = points.len();
    let mut a: Vec<Vec<Rat>> = (0..r)
        .map(|row| (0..n).map(|j| points[j][row].clone()).collect())
        .collect();
    a.push(vec![Rat::one(); n]);
    let mut b = vec![Rat::zero(); r];
    b.push(Rat::one());
    feasible_point(&a, &b).is_some()
}

/// 0 ∈ int(conv(points)) in the relative sense: a convex combination with
/// every coefficient strictly positive. This is the closed-orbit criterion.
pub fn zero_in_interior_conv(points: &[Vec<Rat>]) -> bool {
    if points.is_empty() {
        return false;
    }
    let r = points[0].len();
    let n = points.len();
    // λ_j = ε + u_j; Σ λ_j p_j = 0; Σ λ_j = 1; maximize ε.
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(r + 1);
    for row in 0..r {
        let mut line: Vec<Rat> = (0..n).map(|j| points[j][row].clone()).collect();
        let s = (0..n).fold(Rat::zero(), |acc, j| acc + &points[j][row]);
        line.push(s);
        a.push(line);
    }
    let mut norm = vec![Rat::one(); n];
    norm.push(rat(n as i64));
    a.push(norm);
    let mut b = vec![Rat::zero(); r];
    b.push(Rat::one());
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::one();
    sup_positive(&a, &b, &c)
}

/// int(cone(A)) ∩ int(cone(B)) ≠ ∅, interiors relative.
pub fn interiors_intersect(a: &RationalCone, b: &RationalCone) -> bool {
    assert_eq!(a.ambient_dim, b.ambient_dim);
    let (ma, mb) = (a.generators.len(), b.generators.len());
    if ma == 0 || mb == 0 {
        return false; // zero cone has empty interior by convention
    }
    let r = a.ambient_dim;
    // Σ (ε+u_i) g_i - Σ (ε+v_j) h_j = 0, maximize ε.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(r);
    for row in 0..r {
        let mut line: Vec<Rat> = Vec::with_capacity(ma + mb + 1);
        for g in &a.generators {
            line.push(g[row].clone());
        }
        for h in &b.generators {
            line.push(-h[row].clone());
        }
        let mut s = Rat::zero();
        for g in &a.generators {
            s += &g[row];
        }
        for h in &b.generators {
            s -= &h[row];
        }
        line.push(s);
        rows.push(line);
    }
    let zero = vec![Rat::zero(); r];
    let mut c = vec![Rat::zero(); ma + mb + 1];
    c[ma + mb] = Rat::one();
    sup_positive(&rows, &zero, &c)
}

/// Does the open ray Q_{>0}·y meet cone(C)? Since the cone is closed under
/// positive scaling this is plain membership of y.
pub fn ray_in_cone(y: &[Rat], cone: &RationalCone) -> bool {
    cone_member(cone, y, false)
}

/// One of the rank+1 chambers whose closures trap the origin.
#[derive(Debug, Clone)]
pub struct SuterChamber {
    pub element: WeylElement,
    /// Extreme rays w·ϖ_k in fundamental-weight coordinates.
    pub rays: Vec<Vec<i64>>,
}

/// Rational dominantization with word tracking; `None` while any coordinate
/// is negative keeps reflecting, and the collected word (as a composition
/// left-to-right) maps the dominant representative back onto the input.
fn dominantize_rat(rs: &RootSystem, v: &[Rat]) -> (Vec<Rat>, Vec<usize>) {
    let mut v = v.to_vec();
    let mut word = Vec::new();
    loop {
        match (0..rs.rank).find(|&i| v[i] < Rat::zero()) {
            None => return (v, word),
            Some(i) => {
                v = rs.reflect_weight_rat(&v, i);
                word.push(i + 1);
            }
        }
    }
}

/// Weyl chambers C_1..C_{r+1} built from the halfspace intersections
/// Z_i = ∩_{j≠i} l_j^+, where l_1..l_r are the simple coroots and l_{r+1}
/// is the lowest coroot. Every selection x_i ∈ closure(C_i) has
/// 0 ∈ conv{x_1..x_{r+1}}.
pub fn suter_chambers(rs: &RootSystem) -> Vec<SuterChamber> {
    let r = rs.rank;
    // Covectors on weight coordinates: l_j(x) = x_j for j <= r, and
    // l_{r+1}(x) = -Σ c_k x_k with c the highest coroot's coordinates.
    let theta = rs.dual_highest_root();
    let mut covectors: Vec<Vec<i64>> = (0..r)
        .map(|j| {
            let mut e = vec![0i64; r];
            e[j] = 1;
            e
        })
        .collect();
    covectors.push(theta.iter().map(|&c| -c).collect());

    let mut out = Vec::new();
    for i in 0..=r {
        if i == r {
            // Z_{r+1} is the dominant cone itself.
            let e = rs.identity_element();
            let rays = (1..=r)
                .map(|k| rs.fundamental_weight(k).coords)
                .collect();
            out.push(SuterChamber { element: e, rays });
            continue;
        }
        let active: Vec<&Vec<i64>> = (0..=r).filter(|&j| j != i).map(|j| &covectors[j]).collect();
        let mat: crate::linalg::QMat = active
            .iter()
            .map(|l| l.iter().map(|&c| rat(c)).collect())
            .collect();
        let inv = crate::linalg::invert_q(&mat).expect("Z_i halfspace normals are independent");
        // Extreme rays of Z_i are the columns of the inverse.
        let rays_zi: Vec<Vec<Rat>> = (0..r)
            .map(|col| (0..r).map(|row| inv[row][col].clone()).collect())
            .collect();
        // A generic interior point; geometric coefficient ladders with
        // growing base change the direction until it avoids every wall.
        let mut base = 2i64;
        let chamber = loop {
            let mut x0 = vec![Rat::zero(); r];
            let mut w = 1i64;
            for ray in &rays_zi {
                for (xi, ri) in x0.iter_mut().zip(ray) {
                    *xi += ri * rat(w);
                }
                w *= base;
            }
            let (dom, word) = dominantize_rat(rs, &x0);
            if dom.iter().all(|c| c > &Rat::zero()) {
                break rs.element_from_word(&word);
            }
            base += 1;
            assert!(base < 100, "interior point search must terminate");
        };
        let rays: Vec<Vec<i64>> = (1..=r)
            .map(|k| chamber.apply_int(&rs.fundamental_weight(k).coords))
            .collect();
        // Closure containment in Z_i: every ray satisfies every active form.
        for ray in &rays {
            for l in &active {
                let v: i64 = l.iter().zip(ray).map(|(&a, &b)| a * b).sum();
                assert!(v >= 0, "chamber must lie inside its halfspace cone");
            }
        }
        out.push(SuterChamber {
            element: chamber,
            rays,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::vec_i64_to_rat;
    use crate::rootsys::SimpleType;

    fn qv(v: &[i64]) -> Vec<Rat> {
        vec_i64_to_rat(v)
    }

    #[test]
    fn member_basics() {
        let c = RationalCone::from_int(2, &[vec![1, 0], vec![0, 1]]);
        assert!(cone_member(&c, &qv(&[1, 1]), true));
        assert!(cone_member(&c, &qv(&[1, 0]), false));
        assert!(!cone_member(&c, &qv(&[1, 0]), true));
        let ray = RationalCone::from_int(2, &[vec![1, 0]]);
        assert!(!cone_member(&ray, &qv(&[-1, 0]), false));
        // zero cone conventions
        let z = RationalCone::from_int(2, &[vec![0, 0]]);
        assert!(cone_member(&z, &qv(&[0, 0]), false));
        assert!(!cone_member(&z, &qv(&[0, 0]), true));
        assert!(!cone_member(&z, &qv(&[1, 0]), false));
    }

    #[test]
    fn fm_oracle_matches_on_examples() {
        let c = RationalCone::from_int(3, &[vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 1]]);
        for x in [
            vec![2, 1, 0],
            vec![0, 0, 1],
            vec![1, 2, 1],
            vec![-1, 0, 0],
            vec![2, 2, 1],
        ] {
            for strict in [false, true] {
                assert_eq!(
                    cone_member(&c, &qv(&x), strict),
                    cone_member_fm(&c, &qv(&x), strict),
                    "x={:?} strict={}",
                    x,
                    strict
                );
            }
        }
    }

    #[test]
    fn zero_in_hulls() {
        assert!(zero_in_interior_conv(&[qv(&[1]), qv(&[-1])]));
        assert!(!zero_in_interior_conv(&[qv(&[1, 0]), qv(&[0, 1])]));
        assert!(!zero_in_conv(&[qv(&[1, 0]), qv(&[0, 1])]));
        assert!(zero_in_conv(&[qv(&[1, 0]), qv(&[-1, 0])]));
        // 0 on the boundary: in conv but not its relative interior
        assert!(zero_in_conv(&[qv(&[0, 0]), qv(&[1, 0])]) );
        // singleton {0}: relint({0}) = {0}
        assert!(zero_in_interior_conv(&[qv(&[0, 0])]));
        // orbit polytope of a regular A2 weight
        let a2 = RootSystem::new(SimpleType::parse("A2").unwrap());
        let orbit: Vec<Vec<Rat>> = a2
            .weyl_orbit_int(&[2, 1])
            .into_iter()
            .map(|v| qv(&v))
            .collect();
        assert!(zero_in_interior_conv(&orbit));
    }

    #[test]
    fn interior_intersections() {
        let full = RationalCone::from_int(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert!(interiors_intersect(&full, &full));
        let neg = RationalCone::from_int(2, &[vec![-1, 0], vec![0, -1]]);
        assert!(!interiors_intersect(&full, &neg));
        // shared boundary ray only: relative interiors still disjoint
        let upper = RationalCone::from_int(2, &[vec![1, 0], vec![0, 1]]);
        let lower = RationalCone::from_int(2, &[vec![1, 0], vec![0, -1]]);
        assert!(!interiors_intersect(&upper, &lower));
        // a ray inside the other cone's interior direction
        let ray = RationalCone::from_int(2, &[vec![1, 1]]);
        assert!(interiors_intersect(&full, &ray));
    }

    #[test]
    fn ray_tests() {
        let c = RationalCone::from_int(2, &[vec![1, 0], vec![1, 1]]);
        assert!(ray_in_cone(&qv(&[2, 1]), &c));
        assert!(!ray_in_cone(&qv(&[0, 1]), &c));
        assert!(ray_in_cone(&qv(&[1, 1]), &c));
    }

    #[test]
    fn suter_chambers_small() {
        let a1 = RootSystem::new(SimpleType::parse("A1").unwrap());
        let ch = suter_chambers(&a1);
        assert_eq!(ch.len(), 2);
        // Two rays: one nonnegative, one nonpositive direction.
        let dirs: Vec<i64> = ch.iter().map(|c| c.rays[0][0]).collect();
        assert!(dirs.contains(&1) && dirs.iter().any(|&d| d < 0));

        for t in ["A2", "C2", "G2", "A3", "B3"] {
            let rs = RootSystem::new(SimpleType::parse(t).unwrap());
            let ch = suter_chambers(&rs);
            assert_eq!(ch.len(), rs.rank + 1, "{}", t);
        }
    }

    #[test]
    fn suter_property_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for t in ["A2", "C2"] {
            let rs = RootSystem::new(SimpleType::parse(t).unwrap());
            let chambers = suter_chambers(&rs);
            for _ in 0..500 {
                let pts: Vec<Vec<Rat>> = chambers
                    .iter()
                    .map(|c| {
                        let mut x = vec![Rat::zero(); rs.rank];
                        for ray in &c.rays {
                            let t: i64 = rng.gen_range(0..8);
                            for (xi, &ri) in x.iter_mut().zip(ray) {
                                *xi += rat(t * ri);
                            }
                        }
                        x
                    })
                    .collect();
                assert!(zero_in_conv(&pts), "{}: points {:?}", t, pts);
            }
        }
    }
}
