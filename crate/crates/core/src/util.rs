use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Least nonnegative residue of `a` modulo `n` (n > 0).
pub fn modulo(a: &BigInt, n: &BigInt) -> BigInt {
    a.mod_floor(n)
}

pub fn modi(a: i64, n: i64) -> i64 {
    a.rem_euclid(n)
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn to_i64(v: &BigInt) -> i64 {
    v.to_i64().expect("value exceeds i64")
}

/// Additive order of `a` in ℤ/n; the order of 0 is 1.
pub fn additive_order(a: i64, n: i64) -> i64 {
    let a = modi(a, n);
    if a == 0 {
        1
    } else {
        n / a.gcd(&n)
    }
}

/// Extended gcd: returns (g, x, y) with a·x + b·y = g ≥ 0.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All vectors in `[0, m)^len`, lexicographic.
pub fn all_vectors(len: usize, m: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * m as usize);
        for v in &out {
            for x in 0..m {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_binomials() {
        assert_eq!(additive_order(0, 6), 1);
        assert_eq!(additive_order(4, 6), 3);
        assert_eq!(additive_order(-1, 4), 4);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(2, 3), 0);
    }

    #[test]
    fn extended_gcd_sign() {
        let (g, x, y) = ext_gcd(&big(-4), &big(6));
        assert_eq!(g, big(2));
        assert_eq!(big(-4) * x + big(6) * y, big(2));
    }
}
