//! Elementary divisors over Q[t, t^-1], a principal ideal domain.

use num_traits::Zero;

use super::{LaurentPoly, Matrix, Poly, Rat};

fn deg(p: &Poly<Rat>) -> usize {
    p.degree().unwrap_or(0)
}

/// Non-unit elementary divisors of a matrix over Q[t, t^-1], in divisibility
/// order. Each is monic with nonzero constant term; a zero polynomial stands
/// for a free summand.
pub fn elementary_divisors_qt(m: &Matrix<LaurentPoly<Rat>>) -> Vec<Poly<Rat>> {
    let (r, c) = (m.rows(), m.cols());
    // Multiply each row by the unit t^{-min}, landing in Q[t].
    let mut a: Vec<Vec<Poly<Rat>>> = (0..r)
        .map(|i| {
            let lo = (0..c).filter_map(|j| m[(i, j)].min_exp()).min().unwrap_or(0);
            (0..c)
                .map(|j| {
                    let (p, s) = m[(i, j)].shift(-lo).to_poly();
                    p.shift(s as usize)
                })
                .collect()
        })
        .collect();

    let n = r.min(c);
    for k in 0..n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(k) {
                for (j, e) in row.iter().enumerate().skip(k) {
                    if !e.is_zero() && best.is_none_or(|(bi, bj)| deg(e) < deg(&a[bi][bj])) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let piv = a[k][k].clone();
            let mut clean = true;
            for i in k + 1..r {
                let q = a[i][k].div_rem(&piv).0;
                if !q.is_zero() {
                    for j in k..c {
                        let v = &a[i][j] - &(&q * &a[k][j]);
                        a[i][j] = v;
                    }
                }
                clean &= a[i][k].is_zero();
            }
            for j in k + 1..c {
                let q = a[k][j].div_rem(&piv).0;
                if !q.is_zero() {
                    for row in a.iter_mut().skip(k) {
                        let v = &row[j] - &(&q * &row[k]);
                        row[j] = v;
                    }
                }
                clean &= a[k][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (k + 1..r).find(|&i| {
                (k + 1..c).any(|j| !a[i][j].div_rem(&piv).1.is_zero())
            });
            match bad {
                Some(i) => {
                    for j in k..c {
                        let v = &a[k][j] + &a[i][j];
                        a[k][j] = v;
                    }
                }
                None => break,
            }
        }
    }

    let mut out = Vec::new();
    for (i, row) in a.iter().enumerate().take(n) {
        let d = &row[i];
        if d.is_zero() {
            out.push(Poly::zero());
            continue;
        }
        let d = d.strip_t().monic();
        if deg(&d) > 0 {
            out.push(d);
        }
    }
    // Zeros (free parts) go last.
    out.sort_by_key(|p| (p.is_zero(), deg(p)));
    out
}
