//! Torsion presentations of even-dimensional knot modules.
//!
//! A presentation has generators `x_1..x_α` with `d_j x_j = 0` (`d_j = 0`
//! meaning no torsion relation) and relations `Σ_j (t a_ij - b_ij) x_j = 0`,
//! subject to `d_i a_ij + (-1)^{q+1} d_j b_ji = 0`. The relation is enforced
//! only where `d_i` or `d_j` is nonzero; pairs of free generators are not
//! constrained.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{
    elementary_divisors_qt, smith_normal_form_z, solve_integer_system, Int, IntMatrix,
    LaurentPoly, Matrix, Poly, Rat,
};
use crate::seifert::sign_pow;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionPresentation {
    d: Vec<Int>,
    a: IntMatrix,
    b: IntMatrix,
    q: u32,
}

impl TorsionPresentation {
    pub fn new(d: Vec<Int>, a: IntMatrix, b: IntMatrix, q: u32) -> Result<Self> {
        let n = d.len();
        for (name, m) in [("A", &a), ("B", &b)] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Shape(format!("{name} is {}x{}, expected {n}x{n}", m.rows(), m.cols())));
            }
        }
        if let Some(v) = d.iter().find(|v| *v < &Int::zero()) {
            return Err(Error::InvalidPresentation(format!("negative order {v}")));
        }
        Ok(TorsionPresentation { d, a, b, q })
    }

    pub fn from_i64<R: AsRef<[i64]>>(d: &[i64], a: &[R], b: &[R], q: u32) -> Result<Self> {
        let a = if d.is_empty() { IntMatrix::zeros(0, 0) } else { IntMatrix::from_i64(a)? };
        let b = if d.is_empty() { IntMatrix::zeros(0, 0) } else { IntMatrix::from_i64(b)? };
        TorsionPresentation::new(d.iter().map(|&v| Int::from(v)).collect(), a, b, q)
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    pub fn orders(&self) -> &[Int] {
        &self.d
    }

    pub fn a(&self) -> &IntMatrix {
        &self.a
    }

    pub fn b(&self) -> &IntMatrix {
        &self.b
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Relabel generators: new generator `k` is old generator `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.rank();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Shape("not a permutation".into()));
        }
        let d = perm.iter().map(|&p| self.d[p].clone()).collect();
        TorsionPresentation::new(d, self.a.select(perm, perm), self.b.select(perm, perm), self.q)
    }

    /// Relations evaluated at `t = 1` stacked on the order relations.
    fn relations_at_one(&self) -> IntMatrix {
        let n = self.rank();
        let mut rows: Vec<Vec<Int>> = (0..n)
            .map(|i| (0..n).map(|j| &self.a[(i, j)] - &self.b[(i, j)]).collect())
            .collect();
        for (k, dk) in self.d.iter().enumerate() {
            if !dk.is_zero() {
                let mut r = vec![Int::zero(); n];
                r[k] = dk.clone();
                rows.push(r);
            }
        }
        IntMatrix::new(rows.len(), n, rows.concat()).expect("rectangular")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationCheck {
    /// `(i, j, d_i a_ij + (-1)^{q+1} d_j b_ji)` for each failing pair.
    pub relation_violations: Vec<(usize, usize, Int)>,
    /// `(1 - t)` acts invertibly: the module modulo `t - 1` vanishes.
    pub type_k: bool,
}

impl PresentationCheck {
    pub fn is_valid(&self) -> bool {
        self.relation_violations.is_empty() && self.type_k
    }
}

pub fn validate_presentation(p: &TorsionPresentation) -> PresentationCheck {
    let n = p.rank();
    let sign = Int::from(sign_pow(p.q + 1));
    let mut relation_violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if p.d[i].is_zero() && p.d[j].is_zero() {
                continue;
            }
            let v = &p.d[i] * &p.a[(i, j)] + &sign * &p.d[j] * &p.b[(j, i)];
            if !v.is_zero() {
                relation_violations.push((i, j, v));
            }
        }
    }
    let snf = smith_normal_form_z(&p.relations_at_one());
    let type_k = snf.diag.len() == n && snf.diag.iter().all(One::is_one);
    PresentationCheck { relation_violations, type_k }
}

/// `x mod 1` in `[0, 1)`.
pub fn frac_mod_one(x: &Rat) -> Rat {
    x - Rat::from_integer(x.floor().to_integer())
}

fn rat_matrix_mod_one(m: &Matrix<Rat>) -> Matrix<Rat> {
    m.map(frac_mod_one)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryCheck {
    /// `TA+ = (-1)^q TA-^T` in Q/Z.
    pub proposition: bool,
    /// `TA+ + (-1)^{q+1} TA+^T = -TI`, when `TI` was supplied.
    pub corollary: Option<bool>,
    /// `-(TA+ + (-1)^{q+1} TA+^T)` reduced into `[0, 1)`.
    pub derived_ti: Matrix<Rat>,
}

pub fn torsion_symmetry_check(
    ta_plus: &Matrix<Rat>,
    ta_minus: &Matrix<Rat>,
    q: u32,
    ti: Option<&Matrix<Rat>>,
) -> Result<SymmetryCheck> {
    let n = ta_plus.rows();
    let shapes = [Some(ta_plus), Some(ta_minus), ti];
    if shapes.iter().flatten().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::Shape("torsion forms must all be square of the same size".into()));
    }
    let eps = Rat::from_integer(Int::from(sign_pow(q)));
    let rhs = ta_minus.transpose().scale(&eps);
    let proposition = rat_matrix_mod_one(ta_plus) == rat_matrix_mod_one(&rhs);

    let eps1 = Rat::from_integer(Int::from(sign_pow(q + 1)));
    let sym = ta_plus.checked_add(&ta_plus.transpose().scale(&eps1))?;
    let derived_ti = rat_matrix_mod_one(&-&sym);
    let corollary = ti.map(|t| rat_matrix_mod_one(t) == derived_ti);
    Ok(SymmetryCheck { proposition, corollary, derived_ti })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleStructure {
    /// Generators with `d_k != 0`.
    pub torsion_generators: Vec<usize>,
    /// Invariant factors (`> 1`) of `⊕ Z/d_k` over the torsion generators.
    pub torsion_invariants: Vec<Int>,
    pub torsion_order: Int,
    /// `t x_j = Σ_l tau[l][j] x_l` on the torsion part, entries reduced mod `d_l`;
    /// `None` when the relations do not determine the action.
    pub t_action: Option<IntMatrix>,
    /// Elementary divisors over `Q[t, t^-1]` of the free block.
    pub free_divisors: Vec<Poly<Rat>>,
}

pub fn presented_module_structure(p: &TorsionPresentation) -> Result<ModuleStructure> {
    let check = validate_presentation(p);
    if let Some((i, j, v)) = check.relation_violations.first() {
        return Err(Error::InvalidPresentation(format!("relation fails at ({}, {}): {v} != 0", i + 1, j + 1)));
    }
    if !check.type_k {
        return Err(Error::InvalidPresentation("multiplication by 1 - t is not invertible".into()));
    }
    let tors: Vec<usize> = (0..p.rank()).filter(|&k| !p.d[k].is_zero()).collect();
    let free: Vec<usize> = (0..p.rank()).filter(|&k| p.d[k].is_zero()).collect();

    let diag = IntMatrix::from_fn(tors.len(), tors.len(), |i, j| {
        if i == j {
            p.d[tors[i]].clone()
        } else {
            Int::zero()
        }
    });
    let torsion_invariants: Vec<Int> =
        smith_normal_form_z(&diag).diag.into_iter().filter(|v| !v.is_one()).collect();
    let torsion_order = tors.iter().map(|&k| p.d[k].clone()).product();
    let t_action = t_action(p, &tors);

    let fa = p.a.select(&free, &free);
    let fb = p.b.select(&free, &free);
    let pres = Matrix::from_fn(free.len(), free.len(), |i, j| {
        LaurentPoly::from_terms([(1, fa[(i, j)].clone()), (0, -fb[(i, j)].clone())]).to_rat()
    });
    let free_divisors = elementary_divisors_qt(&pres);
    Ok(ModuleStructure { torsion_generators: tors, torsion_invariants, torsion_order, t_action, free_divisors })
}

/// Solve `Σ_j a_ij tau_lj ≡ b_il (mod d_l)` with `d_j tau_lj ≡ 0 (mod d_l)`,
/// one row `l` at a time.
fn t_action(p: &TorsionPresentation, tors: &[usize]) -> Option<IntMatrix> {
    let n = tors.len();
    let mut tau = IntMatrix::zeros(n, n);
    for (l, &gl) in tors.iter().enumerate() {
        let dl = &p.d[gl];
        // Unknowns: tau_l1..tau_ln, then n slacks for the A-equations, n for the d-equations.
        let cols = 3 * n;
        let mut rows: Vec<Vec<Int>> = Vec::new();
        let mut rhs = Vec::new();
        for (i, &gi) in tors.iter().enumerate() {
            let mut r = vec![Int::zero(); cols];
            for (j, &gj) in tors.iter().enumerate() {
                r[j] = p.a[(gi, gj)].clone();
            }
            r[n + i] = dl.clone();
            rows.push(r);
            rhs.push(p.b[(gi, gl)].clone());
        }
        for (j, &gj) in tors.iter().enumerate() {
            let mut r = vec![Int::zero(); cols];
            r[j] = p.d[gj].clone();
            r[2 * n + j] = dl.clone();
            rows.push(r);
            rhs.push(Int::zero());
        }
        let m = IntMatrix::new(rows.len(), cols, rows.concat()).expect("rectangular");
        let x = solve_integer_system(&m, &rhs)?;
        for j in 0..n {
            tau[(l, j)] = x[j].mod_floor(dl);
        }
    }
    Some(tau)
}
