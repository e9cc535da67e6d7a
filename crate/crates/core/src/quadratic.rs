//! Signatures of integral symmetric forms, quadratic refinements over F2,
//! the Arf invariant and the KARL invariant of a `(4k+1)`-knot.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{Int, IntMatrix, Rat};
use crate::seifert::{conway_normalize, Normalization, SeifertMatrix};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricForm(IntMatrix);

impl SymmetricForm {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Shape(format!("form must be square, got {}x{}", m.rows(), m.cols())));
        }
        for i in 0..m.rows() {
            for j in i + 1..m.cols() {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymmetricForm(m))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.rows()
    }

    pub fn signature(&self) -> i64 {
        signature(self)
    }

    pub fn is_even(&self) -> bool {
        is_even(self)
    }
}

/// `p - n` after congruence diagonalization over Q.
pub fn signature(f: &SymmetricForm) -> i64 {
    let n = f.rank();
    let mut m: Vec<Vec<Rat>> = f.0.to_rows().into_iter().map(|r| r.into_iter().map(Rat::from_integer).collect()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut sig = 0i64;
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !m[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // Zero diagonal: x_i -> x_i + x_j creates the pivot 2 m_ij.
                let Some((i, j)) = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !m[i][j].is_zero())
                else {
                    break;
                };
                for k in 0..n {
                    let v = &m[i][k] + &m[j][k];
                    m[i][k] = v;
                }
                for k in 0..n {
                    let v = &m[k][i] + &m[k][j];
                    m[k][i] = v;
                }
                i
            }
        };
        let pv = m[p][p].clone();
        sig += if pv.is_positive() { 1 } else { -1 };
        active.retain(|&i| i != p);
        for &i in &active {
            if m[i][p].is_zero() {
                continue;
            }
            let c = &m[i][p] / &pv;
            for &k in &active {
                let v = &m[i][k] - &c * &m[p][k];
                m[i][k] = v;
            }
        }
    }
    sig
}

pub fn is_even(f: &SymmetricForm) -> bool {
    (0..f.rank()).all(|i| f.0[(i, i)].is_even())
}

/// Quadratic refinement `q(x + y) = q(x) + q(y) + b(x, y)` of an alternating
/// F2 form, stored by its values on the standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFormF2 {
    b: Vec<Vec<u8>>,
    values: Vec<u8>,
}

impl QuadraticFormF2 {
    pub fn new(b: Vec<Vec<u8>>, values: Vec<u8>) -> Result<Self> {
        let n = values.len();
        if b.len() != n || b.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("bilinear form must be {n}x{n}")));
        }
        let b: Vec<Vec<u8>> = b.into_iter().map(|r| r.into_iter().map(|v| v & 1).collect()).collect();
        check_alternating(&b)?;
        Ok(QuadraticFormF2 { b, values: values.into_iter().map(|v| v & 1).collect() })
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn bilinear(&self) -> &[Vec<u8>] {
        &self.b
    }

    pub fn eval(&self, x: &[u8]) -> u8 {
        let mut acc = 0u8;
        for i in 0..self.dim() {
            if x[i] & 1 == 0 {
                continue;
            }
            acc ^= self.values[i];
            for j in i + 1..self.dim() {
                acc ^= x[j] & self.b[i][j];
            }
        }
        acc & 1
    }
}

fn check_alternating(b: &[Vec<u8>]) -> Result<()> {
    for (i, row) in b.iter().enumerate() {
        if row[i] & 1 != 0 {
            return Err(Error::NotAlternating { row: i, col: i });
        }
        for j in i + 1..row.len() {
            if row[j] & 1 != b[j][i] & 1 {
                return Err(Error::NotAlternating { row: i, col: j });
            }
        }
    }
    Ok(())
}

fn pair(b: &[Vec<u8>], x: &[u8], y: &[u8]) -> u8 {
    let mut acc = 0u8;
    for (i, row) in b.iter().enumerate() {
        if x[i] & 1 == 0 {
            continue;
        }
        for (j, v) in row.iter().enumerate() {
            acc ^= v & y[j];
        }
    }
    acc & 1
}

fn axpy(acc: &mut [u8], x: &[u8]) {
    for (a, v) in acc.iter_mut().zip(x) {
        *a ^= v;
    }
}

/// Greedy symplectic basis `(e_i, f_i)` of a nondegenerate alternating F2 form.
pub fn symplectic_basis_f2(b: &[Vec<u8>]) -> Result<Vec<(Vec<u8>, Vec<u8>)>> {
    let n = b.len();
    if b.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("bilinear form must be square".into()));
    }
    check_alternating(b)?;
    let mut pool: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            let mut v = vec![0u8; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut out = Vec::with_capacity(n / 2);
    while let Some(e) = pool.first().cloned() {
        let Some(k) = (1..pool.len()).find(|&k| pair(b, &e, &pool[k]) == 1) else {
            return Err(Error::Degenerate { radical: e });
        };
        let f = pool.remove(k);
        pool.remove(0);
        for w in pool.iter_mut() {
            let (wf, we) = (pair(b, w, &f), pair(b, w, &e));
            if wf == 1 {
                axpy(w, &e);
            }
            if we == 1 {
                axpy(w, &f);
            }
        }
        out.push((e, f));
    }
    Ok(out)
}

pub fn arf(q: &QuadraticFormF2) -> Result<u8> {
    let basis = symplectic_basis_f2(&q.b)?;
    Ok(basis.iter().fold(0u8, |acc, (e, f)| acc ^ (q.eval(e) & q.eval(f))))
}

/// The form `x -> A(x, x) mod 2` refining `(A - A^T) mod 2`.
pub(crate) fn seifert_quadratic_form(a: &IntMatrix, b: &IntMatrix) -> Result<QuadraticFormF2> {
    let bits = |v: &Int| u8::from(v.is_odd());
    let n = a.rows();
    let bm = (0..n).map(|i| (0..n).map(|j| bits(&b[(i, j)])).collect()).collect();
    QuadraticFormF2::new(bm, (0..n).map(|i| bits(&a[(i, i)])).collect())
}

/// Arf invariant of `Q(x) = A(x, x) mod 2` over the intersection form mod 2.
pub fn karl(s: &SeifertMatrix) -> Result<u8> {
    if s.q() % 2 == 0 {
        return Err(Error::Parity { what: "KARL invariant", expected: "odd", q: s.q() });
    }
    arf(&seifert_quadratic_form(s.matrix(), &s.intersection_form())?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevineCheck {
    /// Conway-normalized `Δ(-1)`.
    pub delta_at_minus_one: Int,
    pub karl: u8,
    pub holds: bool,
}

/// `Δ(-1) ≡ 1 + 4 KARL (mod 8)`.
pub fn levine_congruence_check(s: &SeifertMatrix) -> Result<LevineCheck> {
    let k = karl(s)?;
    let delta = conway_normalize(&s.alexander_polynomial(Normalization::Raw)?)?;
    let value = delta.eval_at_minus_one();
    let holds = (&value - Int::from(1 + 4 * k)).mod_floor(&Int::from(8)).is_zero();
    Ok(LevineCheck { delta_at_minus_one: value, karl: k, holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(rows: &[&[i64]]) -> SymmetricForm {
        SymmetricForm::new(IntMatrix::from_i64(rows).unwrap()).unwrap()
    }

    pub(crate) fn e8() -> SymmetricForm {
        // Cartan matrix of E8 (Bourbaki labelling).
        let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
        let mut m = IntMatrix::zeros(8, 8);
        for i in 0..8 {
            m[(i, i)] = Int::from(2);
        }
        for (i, j) in edges {
            m[(i, j)] = Int::from(-1);
            m[(j, i)] = Int::from(-1);
        }
        SymmetricForm::new(m).unwrap()
    }

    #[test]
    fn signatures() {
        assert_eq!(form(&[&[1, 0], &[0, -1]]).signature(), 0);
        assert_eq!(form(&[&[-2, 1], &[1, -2]]).signature(), -2);
        assert_eq!(e8().signature(), 8);
        assert_eq!(form(&[&[0, 1], &[1, 0]]).signature(), 0);
        assert_eq!(form(&[&[0, 0], &[0, 0]]).signature(), 0);
        assert_eq!(form(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -5]]).signature(), -1);
    }

    #[test]
    fn evenness() {
        assert!(form(&[&[2, 1], &[1, 2]]).is_even());
        assert!(!form(&[&[1]]).is_even());
        assert!(SymmetricForm::new(IntMatrix::zeros(0, 0)).unwrap().is_even());
        assert!(matches!(
            SymmetricForm::new(IntMatrix::from_i64(&[[0, 1], [2, 0]]).unwrap()),
            Err(Error::NotSymmetric { row: 0, col: 1 })
        ));
    }

    #[test]
    fn symplectic_bases() {
        let h = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(symplectic_basis_f2(&h).unwrap(), vec![(vec![1, 0], vec![0, 1])]);
        let h2 = vec![vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0]];
        assert_eq!(symplectic_basis_f2(&h2).unwrap().len(), 2);
        assert_eq!(
            symplectic_basis_f2(&[vec![0, 0], vec![0, 0]]),
            Err(Error::Degenerate { radical: vec![1, 0] })
        );
    }

    #[test]
    fn arf_values() {
        let h = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(arf(&QuadraticFormF2::new(h.clone(), vec![1, 1]).unwrap()).unwrap(), 1);
        assert_eq!(arf(&QuadraticFormF2::new(h, vec![0, 0]).unwrap()).unwrap(), 0);
        let h2 = vec![vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0]];
        assert_eq!(arf(&QuadraticFormF2::new(h2, vec![1, 1, 0, 0]).unwrap()).unwrap(), 1);
    }

    #[test]
    fn karl_values() {
        let trefoil = SeifertMatrix::from_i64(&[[-1, 1], [0, -1]], 1).unwrap();
        assert_eq!(karl(&trefoil).unwrap(), 1);
        assert_eq!(karl(&SeifertMatrix::empty(1)).unwrap(), 0);
        let a1 = SeifertMatrix::from_i64(&[[-1, 0], [1, -1]], 1).unwrap();
        assert_eq!(karl(&a1).unwrap(), 1);
        assert!(matches!(karl(&SeifertMatrix::empty(2)), Err(Error::Parity { .. })));
    }

    #[test]
    fn levine_examples() {
        let trefoil = SeifertMatrix::from_i64(&[[-1, 1], [0, -1]], 1).unwrap();
        let c = levine_congruence_check(&trefoil).unwrap();
        assert_eq!((c.delta_at_minus_one.clone(), c.karl, c.holds), (Int::from(-3), 1, true));
        assert!(levine_congruence_check(&SeifertMatrix::empty(1)).unwrap().holds);
        let a1 = SeifertMatrix::from_i64(&[[-1, 0], [1, -1]], 1).unwrap();
        assert!(levine_congruence_check(&a1).unwrap().holds);
    }
}
