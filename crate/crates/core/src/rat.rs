//! Exact rational scalars and small helpers shared by the geometry modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p/q" or "p" into an exact rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Renders a rational as "p" or "p/q" with positive denominator.
pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn vec_i64_to_rat(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&c| rat(c)).collect()
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// Divides a vector by the gcd of its (integer) entries; no-op on the zero vector.
pub fn primitive_part(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &c| num_integer::gcd(g, c.abs()));
    if g <= 1 {
        v.to_vec()
    } else {
        v.iter().map(|&c| c / g).collect()
    }
}

/// Scales a rational vector to a primitive integer vector with a sign convention:
/// first nonzero entry positive. Used to deduplicate hyperplane normals.
pub fn normalize_direction(v: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in v {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = num_integer::gcd(g, c.abs());
    }
    if !g.is_zero() && !g.is_one() {
        for c in &mut ints {
            *c = &*c / &g;
        }
    }
    if let Some(first) = ints.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            for c in &mut ints {
                *c = -&*c;
            }
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rat("-4").unwrap(), rat(-4));
        assert_eq!(fmt_rat(&ratio(-6, 4)), "-3/2");
        assert_eq!(fmt_rat(&rat(7)), "7");
        assert!(parse_rat("1/0").is_none());
    }

    #[test]
    fn direction_normalization() {
        let v = vec![ratio(-2, 3), ratio(4, 3)];
        assert_eq!(
            normalize_direction(&v),
            vec![BigInt::from(1), BigInt::from(-2)]
        );
    }
}
