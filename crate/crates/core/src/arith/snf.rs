//! Smith normal form over Z with unimodular transforms.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Int, IntMatrix};

/// `u * m * v == diag(diag)` (padded with zeros to the shape of `m`),
/// `u` and `v` unimodular, `diag` nonnegative with `diag[i] | diag[i+1]`
/// (zeros last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diag: Vec<Int>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Invariant factors different from 1 (including zeros).
    pub fn nontrivial_factors(&self) -> Vec<Int> {
        self.diag.iter().filter(|d| !(**d == Int::from(1))).cloned().collect()
    }
}

fn row_op(m: &mut IntMatrix, dst: usize, src: usize, c: &Int) {
    // row_dst -= c * row_src
    for j in 0..m.cols() {
        let v = &m[(src, j)] * c;
        m[(dst, j)] -= v;
    }
}

fn col_op(m: &mut IntMatrix, dst: usize, src: usize, c: &Int) {
    for i in 0..m.rows() {
        let v = &m[(i, src)] * c;
        m[(i, dst)] -= v;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for j in 0..m.cols() {
        m[(i, j)] = -m[(i, j)].clone();
    }
}

pub fn smith_normal_form_z(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let n = r.min(c);

    for k in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in k..r {
                for j in k..c {
                    if !a[(i, j)].is_zero()
                        && best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap_rows(k, pi);
            u.swap_rows(k, pi);
            a.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..r {
                let q = a[(i, k)].div_floor(&a[(k, k)]);
                if !q.is_zero() {
                    row_op(&mut a, i, k, &q);
                    row_op(&mut u, i, k, &q);
                }
                clean &= a[(i, k)].is_zero();
            }
            for j in k + 1..c {
                let q = a[(k, j)].div_floor(&a[(k, k)]);
                if !q.is_zero() {
                    col_op(&mut a, j, k, &q);
                    col_op(&mut v, j, k, &q);
                }
                clean &= a[(k, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the rest of the block by the pivot.
            let bad = (k + 1..r)
                .flat_map(|i| (k + 1..c).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&a[(k, k)]));
            match bad {
                Some((i, _)) => {
                    let minus_one = Int::from(-1);
                    row_op(&mut a, k, i, &minus_one);
                    row_op(&mut u, k, i, &minus_one);
                }
                None => break,
            }
        }
        if a[(k, k)].is_negative() {
            negate_row(&mut a, k);
            negate_row(&mut u, k);
        }
    }
    let diag = (0..n).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diag, u, v }
}

/// One integer solution of `a * x = b`, if any exists.
pub fn solve_integer_system(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let s = smith_normal_form_z(a);
    let ub: Vec<Int> = (0..a.rows())
        .map(|i| (0..a.rows()).map(|k| &s.u[(i, k)] * &b[k]).sum())
        .collect();
    let mut y = vec![Int::zero(); a.cols()];
    for (i, ubi) in ub.iter().enumerate() {
        match s.diag.get(i) {
            Some(d) if !d.is_zero() => {
                if !ubi.is_multiple_of(d) {
                    return None;
                }
                y[i] = ubi / d;
            }
            _ => {
                if !ubi.is_zero() {
                    return None;
                }
            }
        }
    }
    Some(
        (0..a.cols())
            .map(|i| (0..a.cols()).map(|k| &s.v[(i, k)] * &y[k]).sum())
            .collect(),
    )
}
