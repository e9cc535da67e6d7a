//! Independent oracles and generators shared by the integration suites.
#![allow(dead_code)]

pub mod props;

use knotforms::{Int, IntMatrix, Rat};
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

fn binomial(n: u64, k: u64) -> Int {
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// `B_0..=B_n` with `B_1 = -1/2`, from `Σ_{j<=m} C(m+1, j) B_j = 0`.
pub fn bernoulli_table(n: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = vec![Rat::one()];
    for m in 1..=n as u64 {
        let s: Rat = (0..m).map(|j| Rat::from_integer(binomial(m + 1, j)) * &b[j as usize]).sum();
        b.push(-s / Rat::from_integer(Int::from(m + 1)));
    }
    b
}

/// `B_{2k} + Σ_{(p-1) | 2k} 1/p` is an integer.
pub fn von_staudt_clausen(b2k: &Rat, k: u64) -> bool {
    let mut s = b2k.clone();
    for p in 2..=2 * k + 1 {
        let prime = (2..p).all(|d| p % d != 0);
        if prime && (2 * k) % (p - 1) == 0 {
            s += Rat::new(Int::one(), Int::from(p));
        }
    }
    s.is_integer()
}

/// `|B_{2k}|` in the index convention where `B_1 = 1/6`.
pub fn milnor_bernoulli(k: u32) -> Rat {
    bernoulli_table(2 * k as usize)[2 * k as usize].abs()
}

pub fn im_j_oracle(k: u32) -> Int {
    (milnor_bernoulli(k) / Rat::from_integer(Int::from(4 * k))).denom().clone()
}

pub fn bp4k_oracle(k: u32) -> Int {
    let num = (milnor_bernoulli(k) * Rat::from_integer(Int::from(4)) / Rat::from_integer(Int::from(k))).numer().clone();
    let two = Int::from(2);
    num_traits::pow(two.clone(), (2 * k - 2) as usize) * (num_traits::pow(two, (2 * k - 1) as usize) - Int::one()) * num
}

pub fn to_f64(m: &IntMatrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)].to_f64().expect("small entries"))
}

/// Signature from floating-point eigenvalues of a symmetric matrix.
pub fn float_signature(m: &IntMatrix) -> i64 {
    let eig = to_f64(m).symmetric_eigen();
    let scale = eig.eigenvalues.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    let tol = 1e-9 * scale;
    eig.eigenvalues.iter().map(|&v| if v > tol { 1 } else if v < -tol { -1 } else { 0 }).sum()
}

/// Arf invariant as the majority value of `Q(x) = x^T A x mod 2`.
pub fn arf_by_majority(a: &IntMatrix) -> u8 {
    let r = a.rows();
    assert!(r <= 16);
    let mut ones = 0u64;
    for mask in 0u32..(1 << r) {
        let mut q = Int::zero();
        for i in 0..r {
            for j in 0..r {
                if mask >> i & 1 == 1 && mask >> j & 1 == 1 {
                    q += &a[(i, j)];
                }
            }
        }
        if q.is_odd() {
            ones += 1;
        }
    }
    u8::from(ones > 1 << (r - 1))
}

/// Characteristic polynomial with eigenvalues `Π ω_i`, `ω_i^{a_i} = 1`, `ω_i ≠ 1`,
/// expanded in complex floating point and rounded.
pub fn pham_char_poly(exponents: &[u32]) -> Vec<i64> {
    let mut roots = vec![Complex64::new(1.0, 0.0)];
    for &a in exponents {
        let mut next = Vec::new();
        for r in &roots {
            for j in 1..a {
                next.push(r * Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / a as f64));
            }
        }
        roots = next;
    }
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        coeffs = next;
    }
    coeffs
        .iter()
        .map(|c| {
            assert!(c.im.abs() < 1e-6 && (c.re - c.re.round()).abs() < 1e-6, "non-integral coefficient {c}");
            c.re.round() as i64
        })
        .collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| Int::from(rng.gen_range(lo..=hi)))
}

/// Product of random elementary row operations and sign flips.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, steps: usize) -> IntMatrix {
    let mut p = IntMatrix::identity(n);
    if n < 2 {
        return p;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = Int::from(rng.gen_range(-2i64..=2));
        for col in 0..n {
            let v = &p[(j, col)] * &c;
            p[(i, col)] += v;
        }
        if rng.gen_bool(0.2) {
            for col in 0..n {
                p[(i, col)] = -p[(i, col)].clone();
            }
        }
    }
    p
}

pub fn congruent(m: &IntMatrix, p: &IntMatrix) -> IntMatrix {
    p.transpose().checked_mul(m).unwrap().checked_mul(p).unwrap()
}

/// gcd of all maximal minors of a full-rank `h × n` matrix, `h <= n`.
pub fn maximal_minor_gcd(rows: &[Vec<Int>]) -> Int {
    let h = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut g = Int::zero();
    let mut cols: Vec<usize> = (0..h).collect();
    loop {
        let m = IntMatrix::from_fn(h, h, |i, j| rows[i][cols[j]].clone());
        g = g.gcd(&m.det().unwrap());
        let mut i = h;
        loop {
            if i == 0 {
                return g;
            }
            i -= 1;
            if cols[i] < n - h + i {
                cols[i] += 1;
                for k in i + 1..h {
                    cols[k] = cols[k - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn bilinear(m: &IntMatrix, x: &[Int], y: &[Int]) -> Int {
    let mut acc = Int::zero();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            acc += &x[i] * &m[(i, j)] * &y[j];
        }
    }
    acc
}

pub fn mat_pow(m: &IntMatrix, mut e: u64) -> IntMatrix {
    let mut base = m.clone();
    let mut acc = IntMatrix::identity(m.rows());
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.checked_mul(&base).unwrap();
        }
        base = base.checked_mul(&base).unwrap();
        e >>= 1;
    }
    acc
}
