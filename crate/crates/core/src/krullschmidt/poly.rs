//! Minimal polynomials and roots in the ground field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactlin::sparse::sparsify;
use crate::exactlin::{Echelon, Field, Matrix, Scalar};

/// Monic minimal polynomial of a square matrix, lowest degree first.
pub fn minimal_polynomial(m: &Matrix) -> Vec<Scalar> {
    let field = m.field();
    let n = m.rows();
    let width = n * n;
    // rows are [vec(m^k) | e_k]; a reduced row with zero left part is a relation
    let mut ech = Echelon::new(field, width + n + 1);
    let mut power = Matrix::identity(field, n);
    for k in 0..=n {
        let mut row = sparsify(power.entries());
        row.push((width + k, field.one()));
        let reduced = ech.reduce(row.clone());
        if reduced.first().is_none_or(|(c, _)| *c >= width) {
            let lead = reduced
                .iter()
                .find(|(c, _)| *c == width + k)
                .map(|(_, x)| x.clone())
                .expect("own coefficient survives");
            let inv = lead.inv().expect("nonzero");
            let mut poly = vec![field.zero(); k + 1];
            for (c, x) in reduced {
                poly[c - width] = &x * &inv;
            }
            return poly;
        }
        ech.insert(row);
        power = power.mul(m);
    }
    unreachable!("Cayley-Hamilton bounds the degree")
}

pub fn evaluate(poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in poly.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

const DIVISOR_LIMIT: u64 = 1 << 40;
const BRUTE_FORCE_PRIME: u64 = 1 << 16;

/// Roots of `poly` lying in the ground field. For rationals this uses the
/// rational root theorem; over `F_p` every residue is tried when `p` is small.
/// Returns `None` when the search would be too large to be exhaustive.
pub fn roots_in_field(poly: &[Scalar]) -> Option<Vec<Scalar>> {
    let field = poly.last()?.field();
    match field {
        Field::PrimeField { characteristic } => {
            if characteristic > BRUTE_FORCE_PRIME {
                return None;
            }
            Some(
                (0..characteristic as i64)
                    .map(|v| field.from_i64(v))
                    .filter(|x| evaluate(poly, x).is_zero())
                    .collect(),
            )
        }
        Field::Rationals => rational_roots(field, poly),
    }
}

fn rational_roots(field: Field, poly: &[Scalar]) -> Option<Vec<Scalar>> {
    // clear denominators
    let ratios: Vec<(BigInt, BigInt)> = poly.iter().map(Scalar::to_ratio).collect();
    let lcm = ratios.iter().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
    let mut ints: Vec<BigInt> = ratios.iter().map(|(n, d)| n * (&lcm / d)).collect();
    let mut roots = Vec::new();
    while ints.first().is_some_and(Zero::is_zero) {
        ints.remove(0);
        if roots.is_empty() {
            roots.push(field.zero());
        }
    }
    if ints.len() <= 1 {
        return Some(roots);
    }
    let c0 = ints[0].abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT)?;
    let cd = ints
        .last()
        .unwrap()
        .abs()
        .to_u64()
        .filter(|&v| v <= DIVISOR_LIMIT)?;
    for p in divisors(c0) {
        for q in divisors(cd) {
            if p.gcd(&q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let x = field
                    .from_ratio(&BigInt::from(sign * p as i64), &BigInt::from(q))
                    .expect("nonzero denominator");
                if evaluate(poly, &x).is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    Some(roots)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn minimal_polynomial_of_diagonal() {
        let m = Matrix::from_i64(Q, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        // (x - 2)(x - 3) = 6 - 5x + x^2
        let expected: Vec<Scalar> = [6, -5, 1].iter().map(|&v| Q.from_i64(v)).collect();
        assert_eq!(minimal_polynomial(&m), expected);
        let mut roots = roots_in_field(&expected).unwrap();
        roots.sort_by_key(|r| r.to_string());
        assert_eq!(roots, vec![Q.from_i64(2), Q.from_i64(3)]);
    }

    #[test]
    fn irreducible_has_no_rational_roots() {
        let m = Matrix::from_i64(Q, &[&[0, -1], &[1, 0]]);
        let p = minimal_polynomial(&m);
        assert_eq!(p.len(), 3);
        assert!(roots_in_field(&p).unwrap().is_empty());
        let f5 = Field::prime(5).unwrap();
        let m5 = Matrix::from_i64(f5, &[&[0, -1], &[1, 0]]);
        // x^2 + 1 has roots 2 and 3 mod 5
        assert_eq!(roots_in_field(&minimal_polynomial(&m5)).unwrap().len(), 2);
    }

    #[test]
    fn fractional_root() {
        let m = Matrix::from_i64(Q, &[&[1, 1], &[0, 1]]).scale(&Q.parse("2/3").unwrap());
        let p = minimal_polynomial(&m);
        assert_eq!(roots_in_field(&p).unwrap(), vec![Q.parse("2/3").unwrap()]);
    }
}
