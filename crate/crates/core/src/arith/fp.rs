//! Arithmetic in F_p and F_p[t] for word-sized primes `p < 2^32`.
//!
//! Polynomials are `Vec<u64>` in ascending degree order with no trailing zeros.

use std::sync::OnceLock;

use num_bigint::BigUint;

pub(crate) type FpPoly = Vec<u64>;

#[cfg(test)]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "inverse of zero mod {p}");
    pow_mod(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Odd primes in increasing order starting at 3.
pub(crate) fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| is_prime(n))
}

/// Primes below `2^31` in decreasing order.
pub(crate) fn large_primes() -> impl Iterator<Item = u64> {
    const CACHED: usize = 256;
    static CACHE: OnceLock<Vec<u64>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| generate_large_primes(u64::MAX).take(CACHED).collect());
    let last = *cache.last().expect("nonempty prime cache");
    cache.iter().copied().chain(generate_large_primes(last))
}

fn generate_large_primes(below: u64) -> impl Iterator<Item = u64> {
    ((1u64 << 30)..(1u64 << 31).min(below)).rev().filter(|&n| n % 2 == 1 && is_prime(n))
}

pub(crate) fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn deg(a: &FpPoly) -> Option<usize> {
    a.len().checked_sub(1)
}

#[cfg(test)]
pub(crate) fn add(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| add_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
            .collect(),
    )
}

pub(crate) fn sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| sub_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
            .collect(),
    )
}

pub(crate) fn mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &FpPoly, c: u64, p: u64) -> FpPoly {
    trim(a.iter().map(|&x| mul_mod(x, c, p)).collect())
}

pub(crate) fn monic(a: &FpPoly, p: u64) -> FpPoly {
    match a.last() {
        Some(&lc) if lc != 1 => scale(a, inv_mod(lc, p), p),
        _ => a.clone(),
    }
}

pub(crate) fn div_rem(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    let db = deg(b).expect("division by zero polynomial");
    let Some(da) = deg(a) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), a.clone());
    }
    let inv = inv_mod(b[db], p);
    let mut rem = a.clone();
    let mut quot = vec![0u64; da - db + 1];
    for k in (0..=da - db).rev() {
        let q = mul_mod(rem[k + db], inv, p);
        if q == 0 {
            continue;
        }
        for (j, &bc) in b.iter().enumerate() {
            rem[k + j] = sub_mod(rem[k + j], mul_mod(q, bc, p), p);
        }
        quot[k] = q;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

pub(crate) fn rem(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    div_rem(a, b, p).1
}

/// Monic gcd.
pub(crate) fn gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub(crate) fn ext_gcd(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let lc = *r0.last().expect("gcd of two zero polynomials");
    let inv = inv_mod(lc, p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

pub(crate) fn derivative(a: &FpPoly, p: u64) -> FpPoly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| mul_mod(c, i as u64 % p, p)).collect())
}

/// `base^e mod m`.
pub(crate) fn pow_poly_mod(base: &FpPoly, e: &BigUint, m: &FpPoly, p: u64) -> FpPoly {
    let mut acc = vec![1u64];
    let b = rem(base, m, p);
    for i in (0..e.bits()).rev() {
        acc = rem(&mul(&acc, &acc, p), m, p);
        if e.bit(i) {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
    }
    rem(&acc, m, p)
}

/// Distinct-degree factorization of a squarefree monic polynomial:
/// pairs `(g_d, d)` where `g_d` is the product of all irreducible factors of degree `d`.
pub(crate) fn distinct_degree(f: &FpPoly, p: u64) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: FpPoly = vec![0, 1];
    let mut h = x.clone();
    let pe = BigUint::from(p);
    let mut d = 0;
    while deg(&f).is_some_and(|n| n >= 2 * (d + 1)) {
        d += 1;
        h = pow_poly_mod(&h, &pe, &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        if deg(&g).is_some_and(|n| n > 0) {
            f = div_rem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, d));
        }
    }
    if let Some(n) = deg(&f) {
        if n > 0 {
            out.push((f, n));
        }
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting (p odd). Deterministic given inputs.
pub(crate) fn equal_degree(f: &FpPoly, d: usize, p: u64, seed: &mut u64) -> Vec<FpPoly> {
    let n = deg(f).unwrap_or(0);
    if n <= d {
        return vec![f.clone()];
    }
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: FpPoly = trim((0..n).map(|_| next_rand(seed) % p).collect());
        if deg(&a).is_none_or(|k| k == 0) {
            continue;
        }
        let b = sub(&pow_poly_mod(&a, &exp, f, p), &vec![1], p);
        let g = gcd(f, &b, p);
        let dg = deg(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let h = div_rem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, seed);
            out.extend(equal_degree(&monic(&h, p), d, p, seed));
            return out;
        }
    }
}

fn next_rand(state: &mut u64) -> u64 {
    // xorshift64*
    let mut x = *state;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    *state = x;
    x.wrapping_mul(0x2545_F491_4F6C_DD1D) >> 16
}

/// Complete factorization of a squarefree polynomial into monic irreducibles
/// (sorted), for odd `p`.
pub(crate) fn factor_squarefree(f: &FpPoly, p: u64) -> Vec<FpPoly> {
    let f = monic(f, p);
    let mut seed = 0x9E37_79B9_7F4A_7C15u64;
    let mut out = Vec::new();
    for (g, d) in distinct_degree(&f, p) {
        out.extend(equal_degree(&g, d, p, &mut seed));
    }
    out.sort();
    out
}

pub(crate) fn is_squarefree(f: &FpPoly, p: u64) -> bool {
    let d = derivative(f, p);
    !d.is_empty() && deg(&gcd(f, &d, p)) == Some(0)
}
