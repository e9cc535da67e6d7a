//! Multimodular determinants of linear matrix pencils.
//!
//! `det(A0 + t*A1)` is an integer polynomial of degree at most `n`. It is
//! evaluated at `n + 1` points modulo several word-sized primes, interpolated
//! modulo each prime, and reconstructed by the Chinese remainder theorem. The
//! number of primes is fixed in advance by a coefficient bound, so the result
//! is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fp::{self, inv_mod, mul_mod, sub_mod};
use super::{ArithError, Int, IntMatrix, Poly, Rat, RatMatrix};

/// Exact `det(a0 + t * a1)` as a polynomial in `t`.
pub fn det_linear_pencil(a0: &IntMatrix, a1: &IntMatrix) -> Result<Poly<Int>, ArithError> {
    a0.require_square()?;
    if a0.rows() != a1.rows() || a0.cols() != a1.cols() {
        return Err(ArithError::DimensionMismatch(format!(
            "pencil {}x{} + t*{}x{}",
            a0.rows(),
            a0.cols(),
            a1.rows(),
            a1.cols()
        )));
    }
    let n = a0.rows();
    if n == 0 {
        return Ok(Poly::one());
    }
    // Sum of |coefficients| of the determinant is bounded by the product of
    // absolute row sums of the pencil.
    let mut bound = Int::one();
    for i in 0..n {
        let s: Int = (0..n).map(|j| a0[(i, j)].abs() + a1[(i, j)].abs()).sum();
        bound *= s;
    }
    let target = bound * 2u32 + 1u32;

    let mut modulus = Int::one();
    let mut acc: Vec<Int> = vec![Int::zero(); n + 1];
    for p in fp::large_primes() {
        let residues = pencil_det_mod(a0, a1, p);
        crt_accumulate(&mut acc, &mut modulus, &residues, p);
        if modulus > target {
            break;
        }
    }
    let half = &modulus / 2u32;
    let coeffs = acc
        .into_iter()
        .map(|c| if c > half { c - &modulus } else { c })
        .collect();
    Ok(Poly::new(coeffs))
}

/// Characteristic polynomial `det(t*I - m)` of an integer matrix.
pub fn char_poly_int(m: &IntMatrix) -> Result<Poly<Int>, ArithError> {
    m.require_square()?;
    det_linear_pencil(&-m, &IntMatrix::identity(m.rows()))
}

/// Characteristic polynomial `det(t*I - h)` of a rational matrix.
pub fn char_poly(h: &RatMatrix) -> Result<Poly<Rat>, ArithError> {
    h.require_square()?;
    let n = h.rows();
    let d = h.common_denominator();
    let scaled = h.map(|v| (v * Rat::from_integer(d.clone())).to_integer());
    // det(tI - M/d) = d^{-n} det((d t) I - M)
    let cm = char_poly_int(&scaled)?;
    let coeffs = (0..=n)
        .map(|k| {
            let c = Rat::from_integer(cm.coeff(k));
            c / Rat::from_integer(num_traits::pow(d.clone(), n - k))
        })
        .collect();
    Ok(Poly::new(coeffs))
}

fn to_mod(v: &Int, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

fn pencil_det_mod(a0: &IntMatrix, a1: &IntMatrix, p: u64) -> Vec<u64> {
    let n = a0.rows();
    let m0: Vec<u64> = a0.entries().iter().map(|v| to_mod(v, p)).collect();
    let m1: Vec<u64> = a1.entries().iter().map(|v| to_mod(v, p)).collect();
    let xs: Vec<u64> = (0..=n as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&x| {
            let mut m: Vec<u64> =
                m0.iter().zip(&m1).map(|(&a, &b)| (a + mul_mod(x, b, p)) % p).collect();
            det_mod(&mut m, n, p)
        })
        .collect();
    interpolate_mod(&xs, &ys, p)
}

fn det_mod(m: &mut [u64], n: usize, p: u64) -> u64 {
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| m[i * n + k] != 0) else {
            return 0;
        };
        if piv != k {
            for j in 0..n {
                m.swap(k * n + j, piv * n + j);
            }
            det = (p - det) % p;
        }
        let pv = m[k * n + k];
        det = mul_mod(det, pv, p);
        let inv = inv_mod(pv, p);
        for i in k + 1..n {
            let f = mul_mod(m[i * n + k], inv, p);
            if f == 0 {
                continue;
            }
            for j in k..n {
                m[i * n + j] = sub_mod(m[i * n + j], mul_mod(f, m[k * n + j], p), p);
            }
        }
    }
    det
}

/// Coefficients (ascending, length = points) of the interpolating polynomial.
fn interpolate_mod(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    // Newton divided differences.
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = sub_mod(c[i], c[i - 1], p);
            let den = sub_mod(xs[i], xs[i - j], p);
            c[i] = mul_mod(num, inv_mod(den, p), p);
        }
    }
    // Horner expansion of the Newton form.
    let mut poly = vec![0u64; n];
    for k in (0..n).rev() {
        // poly = poly * (t - x_k) + c_k
        let mut next = vec![0u64; n];
        for i in 0..n {
            if poly[i] == 0 {
                continue;
            }
            if i + 1 < n {
                next[i + 1] = (next[i + 1] + poly[i]) % p;
            }
            next[i] = sub_mod(next[i], mul_mod(poly[i], xs[k], p), p);
        }
        next[0] = (next[0] + c[k]) % p;
        poly = next;
    }
    poly
}

fn crt_accumulate(acc: &mut [Int], modulus: &mut Int, residues: &[u64], p: u64) {
    let pb = BigInt::from(p);
    let m_mod_p = to_mod(modulus, p);
    let inv = inv_mod(m_mod_p, p);
    for (a, &r) in acc.iter_mut().zip(residues) {
        let cur = to_mod(a, p);
        let k = mul_mod(sub_mod(r, cur, p), inv, p);
        *a += &*modulus * BigInt::from(k);
    }
    *modulus *= pb;
}
