//! Exact linear algebra over prime fields: F_p for p > 0, ℚ for p = 0.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};

/// Characteristic of the coefficient field: 0 or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldChar(u64);

impl FieldChar {
    pub const ZERO: FieldChar = FieldChar(0);
    pub const TWO: FieldChar = FieldChar(2);

    pub fn new(p: u64) -> Result<FieldChar> {
        if p == 0 || is_prime(p) {
            Ok(FieldChar(p))
        } else {
            Err(Error::InvalidCharacteristic(p))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Whether `p` divides `n`; in characteristic 0 only `n = 0` qualifies.
    pub fn divides(self, n: i64) -> bool {
        if self.0 == 0 {
            n == 0
        } else {
            n.unsigned_abs().is_multiple_of(self.0)
        }
    }
}

impl fmt::Display for FieldChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for FieldChar {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let p: u64 = s
            .trim()
            .parse()
            .map_err(|_| format!("`{s}` is not a characteristic"))?;
        FieldChar::new(p).map_err(|e| e.to_string())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

trait Scalar: Clone {
    fn is_zero(&self) -> bool;
    fn sub_mul(&self, factor: &Self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
}

#[derive(Clone)]
struct Mod {
    value: u64,
    p: u64,
}

impl Mod {
    fn new(n: i64, p: u64) -> Mod {
        Mod {
            value: n.rem_euclid(p as i64) as u64,
            p,
        }
    }

    fn mul(&self, other: &Mod) -> u64 {
        ((self.value as u128 * other.value as u128) % self.p as u128) as u64
    }

    fn inverse(&self) -> Mod {
        let (mut result, mut base, mut exp) = (
            Mod {
                value: 1,
                p: self.p,
            },
            self.clone(),
            self.p - 2,
        );
        while exp > 0 {
            if exp & 1 == 1 {
                result.value = result.mul(&base);
            }
            base.value = base.mul(&base);
            exp >>= 1;
        }
        result
    }
}

impl Scalar for Mod {
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn sub_mul(&self, factor: &Mod, other: &Mod) -> Mod {
        let prod = factor.mul(other);
        Mod {
            value: (self.value + self.p - prod) % self.p,
            p: self.p,
        }
    }

    fn div(&self, other: &Mod) -> Mod {
        Mod {
            value: self.mul(&other.inverse()),
            p: self.p,
        }
    }
}

impl Scalar for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn sub_mul(&self, factor: &Self, other: &Self) -> Self {
        self - factor * other
    }

    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

/// Reduced row echelon basis, stored as (pivot column, row).
fn echelon<T: Scalar>(rows: Vec<Vec<T>>) -> Vec<(usize, Vec<T>)> {
    let mut basis: Vec<(usize, Vec<T>)> = Vec::new();
    for row in rows {
        if let Some(reduced) = reduce(&basis, row) {
            let pivot = reduced
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero row");
            let lead = reduced[pivot].clone();
            let normalized: Vec<T> = reduced.iter().map(|x| x.div(&lead)).collect();
            for (_, other) in basis.iter_mut() {
                let f = other[pivot].clone();
                if !f.is_zero() {
                    for (o, n) in other.iter_mut().zip(&normalized) {
                        *o = o.sub_mul(&f, n);
                    }
                }
            }
            basis.push((pivot, normalized));
        }
    }
    basis
}

/// Remainder of `row` against the basis, or `None` when it reduces to zero.
fn reduce<T: Scalar>(basis: &[(usize, Vec<T>)], mut row: Vec<T>) -> Option<Vec<T>> {
    for (pivot, b) in basis {
        let f = row[*pivot].clone();
        if !f.is_zero() {
            for (r, x) in row.iter_mut().zip(b) {
                *r = r.sub_mul(&f, x);
            }
        }
    }
    row.iter().any(|x| !x.is_zero()).then_some(row)
}

fn contains<T: Scalar>(rows: Vec<Vec<T>>, target: Vec<T>) -> bool {
    reduce(&echelon(rows), target).is_none()
}

/// Whether `target` is a linear combination of `rows` over the prime field
/// of characteristic `p`. All vectors must have the same length.
pub fn span_contains(rows: &[Vec<i64>], target: &[i64], p: FieldChar) -> bool {
    assert!(
        rows.iter().all(|r| r.len() == target.len()),
        "vectors of unequal length"
    );
    if p.0 == 0 {
        let q = |v: &[i64]| {
            v.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect::<Vec<_>>()
        };
        contains(rows.iter().map(|r| q(r)).collect(), q(target))
    } else {
        let m = |v: &[i64]| v.iter().map(|&x| Mod::new(x, p.0)).collect::<Vec<_>>();
        contains(rows.iter().map(|r| m(r)).collect(), m(target))
    }
}

/// Rank of `rows` over the prime field of characteristic `p`.
pub fn rank(rows: &[Vec<i64>], p: FieldChar) -> usize {
    if p.0 == 0 {
        let q = |v: &[i64]| {
            v.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect::<Vec<_>>()
        };
        echelon(rows.iter().map(|r| q(r)).collect()).len()
    } else {
        echelon(
            rows.iter()
                .map(|r| r.iter().map(|&x| Mod::new(x, p.0)).collect())
                .collect(),
        )
        .len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> FieldChar {
        FieldChar::new(n).unwrap()
    }

    #[test]
    fn characteristic_validation() {
        assert!(FieldChar::new(0).is_ok());
        assert!(FieldChar::new(2).is_ok());
        assert!(FieldChar::new(97).is_ok());
        assert_eq!(FieldChar::new(1), Err(Error::InvalidCharacteristic(1)));
        assert_eq!(FieldChar::new(9), Err(Error::InvalidCharacteristic(9)));
        assert!("4".parse::<FieldChar>().is_err());
        assert_eq!("3".parse::<FieldChar>(), Ok(p(3)));
    }

    #[test]
    fn membership_depends_on_characteristic() {
        let rows = vec![vec![-2]];
        assert!(span_contains(&rows, &[1], p(0)));
        assert!(!span_contains(&rows, &[1], p(2)));
        assert!(span_contains(&rows, &[1], p(3)));
        assert!(span_contains(&rows, &[0], p(2)));
        assert!(!span_contains(&[], &[1], p(5)));
    }

    #[test]
    fn elimination_in_several_columns() {
        let rows = vec![vec![1, -1, 0], vec![0, 1, -1]];
        assert!(span_contains(&rows, &[1, 0, -1], p(0)));
        assert!(!span_contains(&rows, &[1, 1, 1], p(0)));
        assert!(span_contains(&rows, &[1, 1, 1], p(3)));
        assert_eq!(rank(&rows, p(0)), 2);
        assert_eq!(rank(&[vec![2, 4], vec![1, 2]], p(0)), 1);
        assert_eq!(rank(&[vec![2, 4], vec![1, 3]], p(2)), 1);
    }
}
