//! Strategies and property bodies shared by the property suite and the
//! acceptance harness.

use knotforms::arith::smith_normal_form_z;
use knotforms::cobordism::{null_cobordance_obstructions, search_metaboliser, validate_eps_form, MetaboliserSearch};
use knotforms::quadratic::{arf, signature, QuadraticFormF2, SymmetricForm};
use knotforms::seifert::SeifertMatrix;
use knotforms::{Int, IntMatrix};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use super::{bilinear, congruent, maximal_minor_gcd};

pub fn config(cases: u32, seed: u64) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

pub fn matrix(rows: usize, cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(lo..=hi, rows * cols)
        .prop_map(move |v| IntMatrix::new(rows, cols, v.into_iter().map(Int::from).collect()).unwrap())
}

pub fn square(max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| matrix(n, n, lo, hi))
}

pub fn seifert(max_n: usize, lo: i64, hi: i64) -> impl Strategy<Value = SeifertMatrix> {
    (square(max_n, lo, hi), 0u32..=6).prop_map(|(a, q)| SeifertMatrix::new(a, q).unwrap())
}

/// Unimodular `n × n` matrix as a product of elementary operations.
pub fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n.max(1), 0..n.max(1), -2i64..=2, any::<bool>()), 0..10).prop_map(move |ops| {
        let mut p = IntMatrix::identity(n);
        for (i, j, c, flip) in ops {
            if i != j {
                for col in 0..n {
                    let v = &p[(j, col)] * Int::from(c);
                    p[(i, col)] += v;
                }
            }
            if flip {
                for col in 0..n {
                    p[(i, col)] = -p[(i, col)].clone();
                }
            }
        }
        p
    })
}

pub fn e8() -> IntMatrix {
    let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
    let mut m = IntMatrix::zeros(8, 8);
    for i in 0..8 {
        m[(i, i)] = Int::from(2);
    }
    for (i, j) in edges {
        m[(i, j)] = Int::from(-1);
        m[(j, i)] = Int::from(-1);
    }
    m
}

/// `P^T (⊕ blocks) P` with blocks drawn from `±E8` and the hyperbolic plane.
pub fn even_unimodular() -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(0u8..3, 1..=3)
        .prop_map(|kinds| {
            let h = IntMatrix::from_i64(&[[0, 1], [1, 0]]).unwrap();
            kinds.iter().fold(IntMatrix::zeros(0, 0), |acc, k| {
                let block = match k {
                    0 => e8(),
                    1 => -&e8(),
                    _ => h.clone(),
                };
                acc.block_diag(&block)
            })
        })
        .prop_flat_map(|m| {
            let n = m.rows();
            (Just(m), unimodular(n))
        })
        .prop_map(|(m, p)| congruent(&m, &p))
}

/// Seifert forms of odd-dimensional knots built from small unimodular pieces.
pub fn eps_form(eps: i8, max_blocks: usize) -> impl Strategy<Value = IntMatrix> {
    let bases: Vec<IntMatrix> = if eps == -1 {
        vec![
            IntMatrix::from_i64(&[[-1, 0], [1, -1]]).unwrap(),
            IntMatrix::from_i64(&[[1, 1], [0, 1]]).unwrap(),
            IntMatrix::from_i64(&[[0, 1], [0, 0]]).unwrap(),
            IntMatrix::from_i64(&[[-1, 1], [0, 1]]).unwrap(),
        ]
    } else {
        vec![
            IntMatrix::from_i64(&[[0, 1], [0, 0]]).unwrap(),
            IntMatrix::from_i64(&[[1, 1], [0, 0]]).unwrap(),
            IntMatrix::from_i64(&[[-1, 0], [1, 0]]).unwrap(),
        ]
    };
    prop::collection::vec(prop::sample::select(bases), 1..=max_blocks)
        .prop_map(|bs| bs.iter().fold(IntMatrix::zeros(0, 0), |acc, b| acc.block_diag(b)))
        .prop_flat_map(|m| {
            let n = m.rows();
            (Just(m), unimodular(n))
        })
        .prop_map(|(m, p)| congruent(&m, &p))
}

/// Random invertible matrix over F2 (as 0/1 rows).
pub fn f2_invertible(n: usize) -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec((0..n, 0..n), 0..4 * n).prop_map(move |ops| {
        let mut p: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect();
        for (i, j) in ops {
            if i != j {
                for c in 0..n {
                    p[i][c] ^= p[j][c];
                }
            }
        }
        p
    })
}

fn f2_congruent(b: &[Vec<u8>], p: &[Vec<u8>]) -> Vec<Vec<u8>> {
    // (P^T B P)_{ij} = Σ p_ki b_kl p_lj, columns of P are the new basis.
    let n = b.len();
    let mut out = vec![vec![0u8; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0u8;
            for k in 0..n {
                for l in 0..n {
                    acc ^= p[k][i] & b[k][l] & p[l][j];
                }
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Nondegenerate quadratic refinement in a random symplectic basis, and a
/// random change of basis.
pub fn arf_case() -> impl Strategy<Value = (QuadraticFormF2, Vec<Vec<u8>>)> {
    (1usize..=4)
        .prop_flat_map(|h| {
            let n = 2 * h;
            (Just(n), f2_invertible(n), prop::collection::vec(0u8..2, n), f2_invertible(n))
        })
        .prop_map(|(n, p0, values, p)| {
            let mut j = vec![vec![0u8; n]; n];
            for i in 0..n / 2 {
                j[2 * i][2 * i + 1] = 1;
                j[2 * i + 1][2 * i] = 1;
            }
            let b = f2_congruent(&j, &p0);
            (QuadraticFormF2::new(b, values).unwrap(), p)
        })
}

pub fn symmetrization_identity(s: &SeifertMatrix) -> Result<(), TestCaseError> {
    let a = s.matrix();
    let eps = Int::from(s.epsilon());
    let expected = a.checked_add(&a.transpose().scale(&eps)).unwrap().scale(&eps);
    let i = s.intersection_form();
    prop_assert_eq!(&i, &expected);
    prop_assert_eq!(i.transpose(), i.scale(&eps));
    Ok(())
}

pub fn arf_basis_independent(qf: &QuadraticFormF2, p: &[Vec<u8>]) -> Result<(), TestCaseError> {
    let n = qf.dim();
    let b2 = f2_congruent(qf.bilinear(), p);
    let values: Vec<u8> = (0..n).map(|i| qf.eval(&(0..n).map(|k| p[k][i]).collect::<Vec<_>>())).collect();
    let moved = QuadraticFormF2::new(b2, values).unwrap();
    prop_assert_eq!(arf(qf).unwrap(), arf(&moved).unwrap());
    Ok(())
}

pub fn signature_congruence_invariant(m: &IntMatrix, p: &IntMatrix) -> Result<(), TestCaseError> {
    let s = m.checked_add(&m.transpose()).unwrap();
    let moved = congruent(&s, p);
    prop_assert_eq!(
        signature(&SymmetricForm::new(s).unwrap()),
        signature(&SymmetricForm::new(moved).unwrap())
    );
    Ok(())
}

pub fn even_unimodular_signature(m: &IntMatrix) -> Result<(), TestCaseError> {
    let f = SymmetricForm::new(m.clone()).unwrap();
    prop_assert!(f.is_even());
    prop_assert!(m.det().unwrap().abs().is_one());
    prop_assert_eq!(signature(&f).rem_euclid(8), 0);
    Ok(())
}

/// Divisibility chain, `U M V = D` with unimodular `U`, `V`, and agreement with
/// the determinantal-divisor oracle.
pub fn snf_chain(m: &IntMatrix) -> Result<(), TestCaseError> {
    let snf = smith_normal_form_z(m);
    let d = &snf.diag;
    for w in d.windows(2) {
        prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])), "{:?}", d);
    }
    prop_assert!(d.iter().all(|x| !x.is_negative()));
    prop_assert!(snf.u.det().unwrap().abs().is_one());
    prop_assert!(snf.v.det().unwrap().abs().is_one());
    let dm = IntMatrix::from_fn(m.rows(), m.cols(), |i, j| if i == j { d[i].clone() } else { Int::zero() });
    prop_assert_eq!(snf.u.checked_mul(m).unwrap().checked_mul(&snf.v).unwrap(), dm);

    // d_1 ... d_k = gcd of k×k minors.
    let rows = m.to_rows();
    for k in 1..=m.rows().min(m.cols()) {
        let prod: Int = d[..k].iter().product();
        prop_assert_eq!(prod, minor_gcd(&rows, k), "k = {}", k);
    }
    Ok(())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

fn minor_gcd(rows: &[Vec<Int>], k: usize) -> Int {
    let (r, c) = (rows.len(), rows[0].len());
    let mut g = Int::zero();
    for rs in combinations(r, k) {
        for cs in combinations(c, k) {
            let m = IntMatrix::from_fn(k, k, |i, j| rows[rs[i]][cs[j]].clone());
            g = g.gcd(&m.det().unwrap());
        }
    }
    g
}

/// The search on `F ⊞ -F` must find a witness (the diagonal is one), and the
/// witness must pass an independent check.
pub fn metaboliser_certificate(a: &IntMatrix, eps: i8) -> Result<(), TestCaseError> {
    let f = validate_eps_form(a.clone(), eps).unwrap();
    let double = f.minus(&f).unwrap();
    let w = match search_metaboliser(&double, 1) {
        MetaboliserSearch::Found(w) => w,
        other => return Err(TestCaseError::fail(format!("no witness for F - F: {other:?}"))),
    };
    let basis = w.basis();
    prop_assert_eq!(basis.len() * 2, double.rank());
    for x in basis {
        for y in basis {
            prop_assert!(bilinear(double.matrix(), x, y).is_zero());
        }
    }
    prop_assert!(maximal_minor_gcd(basis).is_one());
    prop_assert!(null_cobordance_obstructions(&double).unwrap().all_pass());
    Ok(())
}
