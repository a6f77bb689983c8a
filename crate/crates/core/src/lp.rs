//! Exact rational linear programming.
//!
//! Production path: a dense two-phase simplex with Bland's rule, so every
//! decision (feasibility, strict feasibility via a maximized slack) is a
//! terminating exact computation. Oracle path: a Fourier–Motzkin eliminator
//! with strict-inequality tracking, kept independent of the simplex so the
//! two can cross-check each other.

use crate::linalg::QMat;
use crate::rat::Rat;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    /// Optimal objective value and one optimal point.
    Optimal(Rat, Vec<Rat>),
    Unbounded,
}

struct Tableau {
    ncols: usize,
    rows: Vec<Vec<Rat>>, // m x ncols
    rhs: Vec<Rat>,
    basis: Vec<usize>,
    obj: Vec<Rat>, // reduced cost row
    obj_val: Rat,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].clone();
        for j in 0..self.ncols {
            let v = &self.rows[r][j] / &inv;
            self.rows[r][j] = v;
        }
        self.rhs[r] = &self.rhs[r] / &inv;
        for i in 0..self.rows.len() {
            if i != r && !self.rows[i][c].is_zero() {
                let f = self.rows[i][c].clone();
                for j in 0..self.ncols {
                    let sub = &f * &self.rows[r][j];
                    self.rows[i][j] -= sub;
                }
                let sub = &f * &self.rhs[r];
                self.rhs[i] -= sub;
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for j in 0..self.ncols {
                let sub = &f * &self.rows[r][j];
                self.obj[j] -= sub;
            }
            let add = &f * &self.rhs[r];
            self.obj_val += add;
        }
        self.basis[r] = c;
    }

    /// Bland's rule: entering = least index with positive reduced cost,
    /// leaving = least basis index among the minimal ratios.
    fn optimize(&mut self) -> bool {
        loop {
            let Some(c) = (0..self.ncols).find(|&j| self.obj[j].is_positive()) else {
                return true; // optimal
            };
            let mut leave: Option<usize> = None;
            let mut best: Option<Rat> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][c].is_positive() {
                    let ratio = &self.rhs[i] / &self.rows[i][c];
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            ratio < *b || (ratio == *b && self.basis[i] < self.basis[leave.unwrap()])
                        }
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(i);
                    }
                }
            }
            match leave {
                Some(r) => self.pivot(r, c),
                None => return false, // unbounded
            }
        }
    }
}

/// Maximizes c·x subject to A x = b, x >= 0.
pub fn simplex_max(a: &QMat, b: &[Rat], c: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = if m == 0 { c.len() } else { a[0].len() };
    assert_eq!(c.len(), n);

    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = a[i].clone();
        let mut bi = b[i].clone();
        if bi.is_negative() {
            for v in &mut row {
                *v = -v.clone();
            }
            bi = -bi;
        }
        rows.push(row);
        rhs.push(bi);
    }

    // Phase 1: artificial basis, maximize -sum(artificials).
    let ncols = n + m;
    for (i, row) in rows.iter_mut().enumerate() {
        for j in 0..m {
            row.push(if i == j { Rat::one() } else { Rat::zero() });
        }
    }
    let mut t = Tableau {
        ncols,
        rows,
        rhs,
        basis: (n..n + m).collect(),
        obj: vec![Rat::zero(); ncols],
        obj_val: Rat::zero(),
    };
    // Reduced costs of maximize -sum artificials, artificials basic.
    for j in 0..n {
        let mut s = Rat::zero();
        for i in 0..m {
            s += t.rows[i][j].clone();
        }
        t.obj[j] = s;
    }
    for i in 0..m {
        t.obj_val -= t.rhs[i].clone();
    }
    t.optimize();
    if t.obj_val.is_negative() {
        return LpOutcome::Infeasible;
    }
    // Drive remaining artificials out of the basis where possible; rows where
    // that fails are redundant (zero over the original columns) and get dropped.
    for r in 0..m {
        if t.basis[r] >= n {
            if let Some(c) = (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, c);
            }
        }
    }
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut basis = Vec::new();
    for r in 0..m {
        if t.basis[r] < n {
            rows.push(t.rows[r][..n].to_vec());
            rhs.push(t.rhs[r].clone());
            basis.push(t.basis[r]);
        } else {
            debug_assert!(t.rhs[r].is_zero());
        }
    }
    let mrows = rows.len();
    let mut t = Tableau {
        ncols: n,
        rows,
        rhs,
        basis,
        obj: c.to_vec(),
        obj_val: Rat::zero(),
    };
    // Make reduced costs consistent with the current basis.
    for r in 0..mrows {
        let bv = t.basis[r];
        if !t.obj[bv].is_zero() {
            let f = t.obj[bv].clone();
            for j in 0..t.ncols {
                let sub = &f * &t.rows[r][j];
                t.obj[j] -= sub;
            }
            let add = &f * &t.rhs[r];
            t.obj_val += add;
        }
    }
    let bounded = t.optimize();
    if !bounded {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rat::zero(); n];
    for (r, &bv) in t.basis.iter().enumerate() {
        if bv < n {
            x[bv] = t.rhs[r].clone();
        }
    }
    LpOutcome::Optimal(t.obj_val, x)
}

/// One feasible point of {x >= 0 : A x = b}, if any.
pub fn feasible_point(a: &QMat, b: &[Rat]) -> Option<Vec<Rat>> {
    let n = if a.is_empty() { 0 } else { a[0].len() };
    match simplex_max(a, b, &vec![Rat::zero(); n]) {
        LpOutcome::Optimal(_, x) => Some(x),
        LpOutcome::Unbounded => unreachable!("constant objective"),
        LpOutcome::Infeasible => None,
    }
}

/// True iff the supremum of c·x over {x >= 0 : A x = b} is strictly positive
/// (including the unbounded case).
pub fn sup_positive(a: &QMat, b: &[Rat], c: &[Rat]) -> bool {
    match simplex_max(a, b, c) {
        LpOutcome::Infeasible => false,
        LpOutcome::Unbounded => true,
        LpOutcome::Optimal(v, _) => v.is_positive(),
    }
}

/// A linear constraint `coeffs · x >= rhs`, strict when `strict` is set.
#[derive(Debug, Clone)]
pub struct FmConstraint {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
    pub strict: bool,
}

impl FmConstraint {
    pub fn ge(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        FmConstraint {
            coeffs,
            rhs,
            strict: false,
        }
    }
    pub fn gt(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        FmConstraint {
            coeffs,
            rhs,
            strict: true,
        }
    }
    /// Both directions of an equality.
    pub fn eq(coeffs: Vec<Rat>, rhs: Rat) -> [Self; 2] {
        let neg: Vec<Rat> = coeffs.iter().map(|c| -c.clone()).collect();
        [
            FmConstraint::ge(coeffs, rhs.clone()),
            FmConstraint::ge(neg, -rhs),
        ]
    }
}

/// Fourier–Motzkin feasibility for a system of (possibly strict) inequalities.
/// Exponential in the variable count; used only as an independent oracle on
/// small instances.
pub fn fm_feasible(mut cons: Vec<FmConstraint>, nvars: usize) -> bool {
    for var in (0..nvars).rev() {
        let mut lower = Vec::new(); // a_v > 0: x_v >= (...)
        let mut upper = Vec::new(); // a_v < 0
        let mut rest = Vec::new();
        for c in cons {
            let a = c.coeffs[var].clone();
            if a.is_zero() {
                rest.push(c);
            } else if a.is_positive() {
                lower.push(c);
            } else {
                upper.push(c);
            }
        }
        for lo in &lower {
            for up in &upper {
                // lo: a x_v + L(x) >= bl  (a>0)  =>  x_v >= (bl - L)/a
                // up: -a' x_v + U(x) >= bu (a'>0) =>  x_v <= (U - bu)/a'
                let a = lo.coeffs[var].clone();
                let ap = -up.coeffs[var].clone();
                let mut coeffs = vec![Rat::zero(); nvars];
                for j in 0..nvars {
                    if j == var {
                        continue;
                    }
                    coeffs[j] = &lo.coeffs[j] * &ap + &up.coeffs[j] * &a;
                }
                coeffs[var] = Rat::zero();
                let rhs = &lo.rhs * &ap + &up.rhs * &a;
                rest.push(FmConstraint {
                    coeffs,
                    rhs,
                    strict: lo.strict || up.strict,
                });
            }
        }
        cons = rest;
    }
    cons.iter().all(|c| {
        debug_assert!(c.coeffs.iter().all(|a| a.is_zero()));
        if c.strict {
            c.rhs.is_negative()
        } else {
            !c.rhs.is_positive()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn simplex_basic() {
        // max x+y st x+2y=4, x,y>=0 -> x=4
        let a = vec![vec![rat(1), rat(2)]];
        let b = vec![rat(4)];
        match simplex_max(&a, &b, &[rat(1), rat(1)]) {
            LpOutcome::Optimal(v, x) => {
                assert_eq!(v, rat(4));
                assert_eq!(x, vec![rat(4), rat(0)]);
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn simplex_infeasible_and_unbounded() {
        // x = -1, x >= 0
        let a = vec![vec![rat(1)]];
        assert_eq!(simplex_max(&a, &[rat(-1)], &[rat(0)]), LpOutcome::Infeasible);
        // max x st x - y = 0
        let a = vec![vec![rat(1), rat(-1)]];
        assert_eq!(
            simplex_max(&a, &[rat(0)], &[rat(1), rat(0)]),
            LpOutcome::Unbounded
        );
    }

    #[test]
    fn fm_agrees_on_strictness() {
        // x > 0 and -x >= 0 infeasible; x >= 0 and -x >= 0 feasible (x = 0).
        let strict = vec![
            FmConstraint::gt(vec![rat(1)], rat(0)),
            FmConstraint::ge(vec![rat(-1)], rat(0)),
        ];
        assert!(!fm_feasible(strict, 1));
        let weak = vec![
            FmConstraint::ge(vec![rat(1)], rat(0)),
            FmConstraint::ge(vec![rat(-1)], rat(0)),
        ];
        assert!(fm_feasible(weak, 1));
    }
}
