//! Factorization in Z[t] (modulo the Laurent units `±t^k`).
//!
//! Squarefree decomposition over Q, then Berlekamp–Zassenhaus on each
//! squarefree part: factor modulo a small prime, Hensel-lift to a power of
//! that prime exceeding the Mignotte-type coefficient bound, and recombine
//! lifted factors by exhaustive subset search with exact trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fp::{self, FpPoly};
use super::{ArithError, Int, LaurentPoly, Poly};

/// `input = sign * t^shift * content * prod(factor_i ^ mult_i)`.
///
/// Factors are primitive, irreducible over Z, have positive leading
/// coefficient and nonzero constant term, and are sorted by degree then
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub shift: i64,
    pub content: Int,
    pub factors: Vec<(Poly<Int>, usize)>,
}

impl Factorization {
    /// Multiply everything back together, including the unit.
    pub fn expand(&self) -> LaurentPoly<Int> {
        let mut p = Poly::constant(&self.content * Int::from(self.sign));
        for (f, m) in &self.factors {
            p = &p * &f.pow(*m);
        }
        LaurentPoly::from_poly(&p, self.shift)
    }

    pub fn irreducible_count(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum()
    }
}

/// Factor a nonzero Laurent polynomial over Z.
pub fn factor_int_poly(p: &LaurentPoly<Int>) -> Result<Factorization, ArithError> {
    if p.is_zero() {
        return Err(ArithError::ZeroPolynomial);
    }
    let (poly, shift) = p.to_poly();
    let sign: i8 = if poly.leading().is_some_and(Signed::is_negative) { -1 } else { 1 };
    let content = poly.content();
    let prim = poly.primitive_part();

    let mut factors: Vec<(Poly<Int>, usize)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&prim) {
        for f in factor_squarefree(&part) {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| {
        a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())).then(ma.cmp(mb))
    });
    // Merge equal factors (cannot happen for a correct squarefree split, kept for safety of the contract).
    let mut merged: Vec<(Poly<Int>, usize)> = Vec::new();
    for (f, m) in factors {
        match merged.last_mut() {
            Some((g, k)) if *g == f => *k += m,
            _ => merged.push((f, m)),
        }
    }
    let out = Factorization { sign, shift, content, factors: merged };
    debug_assert_eq!(out.expand(), *p, "factorization does not reconstruct its input");
    Ok(out)
}

/// Yun's algorithm over Q; returns primitive integer parts with multiplicities.
fn squarefree_decomposition(f: &Poly<Int>) -> Vec<(Poly<Int>, usize)> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let fq = f.to_rat();
    let d = fq.derivative();
    let a0 = fq.gcd(&d);
    let mut b = fq.div_rem(&a0).0;
    let mut c = d.div_rem(&a0).0;
    let mut dd = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&dd);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.to_primitive_int(), i));
        }
        b = b.div_rem(&a).0;
        c = dd.div_rem(&a).0;
        dd = &c - &b.derivative();
        i += 1;
    }
    out
}

fn reduce(f: &Poly<Int>, p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    fp::trim(
        f.coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("small residue"))
            .collect(),
    )
}

fn lift_to_int(f: &FpPoly) -> Poly<Int> {
    Poly::new(f.iter().map(|&c| Int::from(c)).collect())
}

/// Factor a primitive squarefree polynomial with positive leading coefficient.
fn factor_squarefree(f: &Poly<Int>) -> Vec<Poly<Int>> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![f.clone()];
    }
    let lc = f.leading().expect("nonzero").clone();

    // Pick the prime (among a handful of good ones) giving the fewest modular factors.
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for p in fp::small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp_ = reduce(f, p);
        if !fp::is_squarefree(&fp_, p) {
            continue;
        }
        let facs = fp::factor_squarefree(&fp_, p);
        if facs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, modular) = best.expect("some prime keeps the polynomial squarefree");

    // Coefficients of any factor g of f satisfy |g_i| <= 2^deg(f) * ||f||_1.
    let bound = f.l1_norm() * (Int::one() << n) * &lc;
    let target = bound * 2u32 + 1u32;
    let mut modulus = BigInt::from(p);
    let mut k = 1u32;
    while modulus <= target {
        modulus *= p;
        k += 1;
    }
    let lifted = hensel_lift_all(f, &modular, p, k);
    recombine(f, lifted, &modulus)
}

/// Lift `f ≡ lc * prod(factors) (mod p)` (factors monic) to monic factors mod `p^k`.
fn hensel_lift_all(f: &Poly<Int>, factors: &[FpPoly], p: u64, k: u32) -> Vec<Poly<Int>> {
    let mut out = Vec::with_capacity(factors.len());
    let mut rest = f.clone();
    for (idx, g) in factors.iter().enumerate() {
        if idx + 1 == factors.len() {
            // Remaining cofactor: make it monic modulo p^k.
            let m = BigInt::from(p).pow(k);
            let inv = rest.leading().expect("nonzero").modinv(&m).expect("lc is a unit mod p");
            out.push(Poly::new(rest.coeffs().iter().map(|c| (c * &inv).mod_floor(&m)).collect()));
            break;
        }
        let h_mod_p = factors[idx + 1..].iter().fold(vec![1u64], |acc, x| fp::mul(&acc, x, p));
        let (g_lift, h_lift) = hensel_lift_pair(&rest, g, &h_mod_p, p, k);
        out.push(g_lift);
        rest = h_lift;
    }
    out
}

/// Given `F ≡ G*H (mod p)` with `G` monic and `H` carrying `lc(F)`, return
/// `(G', H')` with `F ≡ G'*H' (mod p^k)`, `G'` monic.
fn hensel_lift_pair(
    f: &Poly<Int>,
    g_mod_p: &FpPoly,
    h_monic_mod_p: &FpPoly,
    p: u64,
    k: u32,
) -> (Poly<Int>, Poly<Int>) {
    let pb = BigInt::from(p);
    let lc = f.leading().expect("nonzero").clone();
    let lc_mod_p = lc.mod_floor(&pb).to_u64().expect("small");
    let h_mod_p = fp::scale(h_monic_mod_p, lc_mod_p, p);
    let (one, _s, t) = fp::ext_gcd(g_mod_p, &h_mod_p, p);
    debug_assert_eq!(one, vec![1]);

    let mut g = lift_to_int(g_mod_p);
    let mut h = lift_to_int(&h_mod_p);
    // Force H's leading coefficient to be exactly lc(F).
    let dh = h.degree().expect("nonzero");
    let mut hc = h.coeffs().to_vec();
    hc[dh] = lc.clone();
    h = Poly::new(hc);

    let mut pj = pb.clone();
    for _ in 1..k {
        let err = f - &(&g * &h);
        debug_assert!(err.coeffs().iter().all(|c| (c % &pj).is_zero()));
        let e = reduce(&Poly::new(err.coeffs().iter().map(|c| c / &pj).collect()), p);
        // s*G + t*H = 1 (mod p): dG = t*e mod G, dH = (e - dG*H) / G.
        let dg = fp::rem(&fp::mul(&t, &e, p), g_mod_p, p);
        let num = fp::sub(&e, &fp::mul(&dg, &h_mod_p, p), p);
        let (dh, r) = fp::div_rem(&num, g_mod_p, p);
        debug_assert!(r.is_empty());
        g = &g + &lift_to_int(&dg).scale(&pj);
        h = &h + &lift_to_int(&dh).scale(&pj);
        pj *= &pb;
    }
    let m = pj;
    let g = Poly::new(g.coeffs().iter().map(|c| c.mod_floor(&m)).collect());
    let h = Poly::new(h.coeffs().iter().map(|c| c.mod_floor(&m)).collect());
    (g, h)
}

fn symmetric(c: &Int, m: &Int) -> Int {
    let r = c.mod_floor(m);
    if &r * 2u32 > *m {
        r - m
    } else {
        r
    }
}

/// Subset recombination of lifted monic factors.
fn recombine(f: &Poly<Int>, mut lifted: Vec<Poly<Int>>, modulus: &Int) -> Vec<Poly<Int>> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let lc = rest.leading().expect("nonzero").clone();
        let mut found: Option<(Vec<usize>, Poly<Int>, Poly<Int>)> = None;
        for subset in combinations(lifted.len(), size) {
            let mut cand = Poly::constant(lc.clone());
            for &i in &subset {
                cand = &cand * &lifted[i];
                cand = Poly::new(cand.coeffs().iter().map(|c| c.mod_floor(modulus)).collect());
            }
            let cand = Poly::new(cand.coeffs().iter().map(|c| symmetric(c, modulus)).collect());
            let cand = cand.primitive_part();
            if let Some(q) = rest.div_exact(&cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, factor, quotient)) => {
                out.push(factor);
                rest = quotient.primitive_part();
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest);
    }
    out
}

fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = idx.clone();
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(cur)
    })
}
