//! Exact integer/rational kernels: fraction-free elimination for determinant
//! signs and matrix rank.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Parses an integer or `p/q` fraction. Anything else (decimal points,
/// exponents, zero denominators) is rejected.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt, String> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("not an exact number: {s:?}"));
        }
        t.parse::<BigInt>()
            .map_err(|_| format!("not an exact number: {s:?}"))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// Scales a rational row by the positive lcm of its denominators.
pub fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Sign of the determinant of a square integer matrix by Bareiss elimination.
pub fn det_sign(rows: &[&[BigInt]]) -> i8 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.to_vec()).collect();
    let mut sign: i8 = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return 0;
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let last = &a[n - 1][n - 1];
    if last.is_zero() {
        0
    } else if last.is_positive() == (sign > 0) {
        1
    } else {
        -1
    }
}

/// Rank of an integer matrix (rows of equal length).
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut a = rows.to_vec();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..a.len() {
            for j in c + 1..cols {
                let v = (&a[i][j] * &a[r][c] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}
