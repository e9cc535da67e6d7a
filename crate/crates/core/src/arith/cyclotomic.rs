use num_traits::{One, Zero};

use super::{Int, Poly};

pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

fn mobius(n: u64) -> i8 {
    let mut m = n;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

fn t_pow_minus_one(d: u64) -> Poly<Int> {
    let mut c = vec![Int::zero(); d as usize + 1];
    c[0] = -Int::one();
    c[d as usize] = Int::one();
    Poly::new(c)
}

/// The `n`-th cyclotomic polynomial, `n >= 1`.
pub fn cyclotomic(n: u64) -> Poly<Int> {
    assert!(n >= 1, "cyclotomic index must be positive");
    // Phi_n = prod_{d | n} (t^d - 1)^{mu(n/d)}
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let mut num = Poly::one();
    let mut den = Poly::one();
    for &d in &divisors {
        match mobius(n / d) {
            1 => num = &num * &t_pow_minus_one(d),
            -1 => den = &den * &t_pow_minus_one(d),
            _ => {}
        }
    }
    num.div_exact(&den).expect("cyclotomic quotient is exact")
}

/// If `f` (up to sign) is a product of cyclotomic polynomials, return the
/// multiplicity of each `Phi_n` (ascending in `n`). Otherwise `None`.
pub fn cyclotomic_decomposition(f: &Poly<Int>) -> Option<Vec<(u64, usize)>> {
    let d = f.degree()? as u64;
    let mut rest = f.with_positive_leading();
    let mut out = Vec::new();
    if d > 0 {
        // phi(n) <= d forces n <= 2 d^2 (phi(n) >= sqrt(n/2)).
        for n in 1..=(2 * d * d).max(2) {
            if euler_phi(n) > rest.degree().unwrap_or(0) as u64 {
                continue;
            }
            let phi = cyclotomic(n);
            let mut m = 0;
            while let Some(q) = rest.div_exact(&phi) {
                rest = q;
                m += 1;
            }
            if m > 0 {
                out.push((n, m));
            }
            if rest.degree() == Some(0) {
                break;
            }
        }
    }
    rest.is_one().then_some(out)
}
