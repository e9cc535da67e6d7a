//! ε-forms, metabolisers and algebraic cobordism of Seifert forms.
//!
//! `search_metaboliser` enumerates half-rank sublattices by their row Hermite
//! normal form. The enumeration order is fixed:
//!
//! 1. pivot column tuples in lexicographic order;
//! 2. for each tuple, pivot values in lexicographic order from `(1, .., 1)`;
//! 3. rows are filled top to bottom; within a row, free entries run through
//!    `0, 1, -1, 2, -2, ..` as an odometer whose first free column turns fastest.
//!
//! Entries in later pivot columns are reduced into `[0, pivot)`. Partial
//! bases are pruned as soon as two rows fail to be isotropic, and purity is
//! checked at the leaves. Pivot tuples are searched in parallel, but the
//! witness returned is always the first one in the order above.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::{factor_int_poly, smith_normal_form_z, Int, IntMatrix, LaurentPoly, Poly};
use crate::quadratic::{arf, seifert_quadratic_form, signature, SymmetricForm};
use crate::seifert::{Normalization, SeifertMatrix};
use crate::{Error, Result};

/// Bilinear form `A` whose ε-symmetrization `A + εA^T` is unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsForm {
    a: IntMatrix,
    eps: i8,
}

impl EpsForm {
    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn eps(&self) -> i8 {
        self.eps
    }

    pub fn rank(&self) -> usize {
        self.a.rows()
    }

    pub fn symmetrization(&self) -> IntMatrix {
        let at = self.a.transpose().scale(&Int::from(self.eps));
        self.a.checked_add(&at).expect("square")
    }

    /// `self ⊞ -other`.
    pub fn minus(&self, other: &EpsForm) -> Result<EpsForm> {
        if self.eps != other.eps {
            return Err(Error::EpsMismatch { left: self.eps, right: other.eps });
        }
        Ok(EpsForm { a: self.a.block_diag(&(-&other.a)), eps: self.eps })
    }

    pub fn alexander_polynomial(&self) -> Result<LaurentPoly> {
        let q = if self.eps == 1 { 2 } else { 1 };
        SeifertMatrix::new(self.a.clone(), q)?.alexander_polynomial(Normalization::Raw)
    }
}

impl TryFrom<&SeifertMatrix> for EpsForm {
    type Error = Error;

    fn try_from(s: &SeifertMatrix) -> Result<EpsForm> {
        validate_eps_form(s.matrix().clone(), s.epsilon())
    }
}

pub fn validate_eps_form(a: IntMatrix, eps: i8) -> Result<EpsForm> {
    if !a.is_square() {
        return Err(Error::Shape(format!("ε-form must be square, got {}x{}", a.rows(), a.cols())));
    }
    if eps != 1 && eps != -1 {
        return Err(Error::OutOfRange(format!("ε must be ±1, got {eps}")));
    }
    let f = EpsForm { a, eps };
    let det = f.symmetrization().det()?;
    if !det.abs().is_one() {
        return Err(Error::InvalidEpsForm { det });
    }
    Ok(f)
}

/// Basis of a half-rank pure sublattice on which the form vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metaboliser {
    basis: Vec<Vec<Int>>,
}

impl Metaboliser {
    pub fn basis(&self) -> &[Vec<Int>] {
        &self.basis
    }
}

impl fmt::Display for Metaboliser {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (k, v) in self.basis.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = v.iter().map(Int::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotMetaboliser {
    OddRank(usize),
    WrongCount { expected: usize, got: usize },
    WrongLength { index: usize, expected: usize, got: usize },
    /// Invariant factors of the basis matrix other than 1 (zero means dependent).
    Impure(Vec<Int>),
    NotIsotropic { i: usize, j: usize, value: Int },
}

impl fmt::Display for NotMetaboliser {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotMetaboliser::OddRank(r) => write!(f, "odd rank {r} admits no half-rank sublattice"),
            NotMetaboliser::WrongCount { expected, got } => {
                write!(f, "expected {expected} basis vectors, got {got}")
            }
            NotMetaboliser::WrongLength { index, expected, got } => {
                write!(f, "vector {index} has length {got}, expected {expected}")
            }
            NotMetaboliser::Impure(fs) => {
                let parts: Vec<String> = fs.iter().map(Int::to_string).collect();
                write!(f, "sublattice is not pure (invariant factors {})", parts.join(", "))
            }
            NotMetaboliser::NotIsotropic { i, j, value } => {
                write!(f, "A(v{i}, v{j}) = {value} != 0")
            }
        }
    }
}

/// Full certificate check: count, purity, and `A(v_i, v_j) = 0` for all pairs.
pub fn check_metaboliser(f: &EpsForm, basis: &[Vec<Int>]) -> std::result::Result<Metaboliser, NotMetaboliser> {
    let r = f.rank();
    if r % 2 != 0 {
        return Err(NotMetaboliser::OddRank(r));
    }
    if basis.len() != r / 2 {
        return Err(NotMetaboliser::WrongCount { expected: r / 2, got: basis.len() });
    }
    for (index, v) in basis.iter().enumerate() {
        if v.len() != r {
            return Err(NotMetaboliser::WrongLength { index, expected: r, got: v.len() });
        }
    }
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let value = f.a.bilinear(&basis[i], &basis[j]);
            if !value.is_zero() {
                return Err(NotMetaboliser::NotIsotropic { i, j, value });
            }
        }
    }
    if !is_pure(basis, r) {
        let m = IntMatrix::from_rows(basis.to_vec()).expect("rectangular");
        return Err(NotMetaboliser::Impure(smith_normal_form_z(&m).nontrivial_factors()));
    }
    Ok(Metaboliser { basis: basis.to_vec() })
}

pub fn is_metaboliser(f: &EpsForm, basis: &[Vec<Int>]) -> bool {
    check_metaboliser(f, basis).is_ok()
}

fn is_pure(basis: &[Vec<Int>], r: usize) -> bool {
    if basis.is_empty() {
        return true;
    }
    let m = IntMatrix::new(basis.len(), r, basis.concat()).expect("rectangular");
    smith_normal_form_z(&m).diag.iter().all(One::is_one)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MetaboliserSearch {
    Found(Metaboliser),
    NotFoundWithinBound { bound: u32 },
    /// Odd rank: no metaboliser can exist.
    OddRank(usize),
}

pub fn search_metaboliser(f: &EpsForm, bound: u32) -> MetaboliserSearch {
    let r = f.rank();
    if r % 2 != 0 {
        return MetaboliserSearch::OddRank(r);
    }
    let h = r / 2;
    if h == 0 {
        return MetaboliserSearch::Found(Metaboliser { basis: Vec::new() });
    }
    let bound = bound.max(1);
    let pivot_sets: Vec<Vec<usize>> = combinations(r, h).collect();
    let found = pivot_sets.par_iter().find_map_first(|pivots| {
        let mut search = RowSearch { form: &f.a, r, bound: bound as i64, pivots, rows: Vec::new() };
        search.pivot_values(&mut vec![1; h], 0)
    });
    match found {
        Some(basis) => {
            let w = check_metaboliser(f, &basis).expect("search returns certified witnesses");
            MetaboliserSearch::Found(w)
        }
        None => MetaboliserSearch::NotFoundWithinBound { bound },
    }
}

struct RowSearch<'a> {
    form: &'a IntMatrix,
    r: usize,
    bound: i64,
    pivots: &'a [usize],
    rows: Vec<Vec<Int>>,
}

impl RowSearch<'_> {
    /// Odometer over pivot values, first pivot slowest (lexicographic).
    fn pivot_values(&mut self, values: &mut Vec<i64>, k: usize) -> Option<Vec<Vec<Int>>> {
        if k == values.len() {
            return self.fill_row(values, 0);
        }
        for v in 1..=self.bound {
            values[k] = v;
            if let Some(w) = self.pivot_values(values, k + 1) {
                return Some(w);
            }
        }
        None
    }

    fn fill_row(&mut self, pivot_vals: &[i64], i: usize) -> Option<Vec<Vec<Int>>> {
        if i == self.pivots.len() {
            return is_pure(&self.rows, self.r).then(|| self.rows.clone());
        }
        let p = self.pivots[i];
        // Slots after the pivot: later pivot columns range over [0, pivot), others are free.
        let slots: Vec<(usize, Vec<i64>)> = (p + 1..self.r)
            .map(|c| match self.pivots.iter().position(|&q| q == c) {
                Some(k) => (c, (0..pivot_vals[k]).collect()),
                None => (c, signed_range(self.bound)),
            })
            .collect();
        let mut idx = vec![0usize; slots.len()];
        loop {
            let mut row = vec![Int::zero(); self.r];
            row[p] = Int::from(pivot_vals[i]);
            for (s, (c, vals)) in slots.iter().enumerate() {
                row[*c] = Int::from(vals[idx[s]]);
            }
            if self.isotropic_with_previous(&row) {
                self.rows.push(row);
                if let Some(w) = self.fill_row(pivot_vals, i + 1) {
                    return Some(w);
                }
                self.rows.pop();
            }
            // Advance the odometer; the first slot turns fastest.
            let mut s = 0;
            loop {
                if s == slots.len() {
                    return None;
                }
                idx[s] += 1;
                if idx[s] < slots[s].1.len() {
                    break;
                }
                idx[s] = 0;
                s += 1;
            }
        }
    }

    fn isotropic_with_previous(&self, row: &[Int]) -> bool {
        self.form.bilinear(row, row).is_zero()
            && self.rows.iter().all(|v| {
                self.form.bilinear(v, row).is_zero() && self.form.bilinear(row, v).is_zero()
            })
    }
}

fn signed_range(bound: i64) -> Vec<i64> {
    let mut out = vec![0];
    for v in 1..=bound {
        out.push(v);
        out.push(-v);
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

/// `Δ(t) = Q(t) Q(t^-1)` up to units is possible.
pub fn fox_milnor(delta: &LaurentPoly) -> Result<bool> {
    let fac = factor_int_poly(delta)?;
    let root = fac.content.sqrt();
    if &root * &root != fac.content {
        return Ok(false);
    }
    for (f, m) in &fac.factors {
        let recip = reciprocal(f);
        if recip == *f {
            if m % 2 != 0 {
                return Ok(false);
            }
        } else {
            let partner = fac.factors.iter().find(|(g, _)| *g == recip).map_or(0, |(_, k)| *k);
            if partner != *m {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn reciprocal(f: &Poly<Int>) -> Poly<Int> {
    Poly::new(f.coeffs().iter().rev().cloned().collect()).with_positive_leading()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCheck {
    pub name: &'static str,
    pub passed: bool,
    pub certificate: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub checks: Vec<ObstructionCheck>,
}

impl ObstructionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&ObstructionCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Necessary conditions for `F` to be null-cobordant.
pub fn null_cobordance_obstructions(f: &EpsForm) -> Result<ObstructionReport> {
    let mut checks = Vec::new();
    let r = f.rank();
    checks.push(ObstructionCheck {
        name: "rank parity",
        passed: r % 2 == 0,
        certificate: format!("rank {r}"),
    });
    if f.eps == 1 {
        let sigma = signature(&SymmetricForm::new(f.symmetrization())?);
        checks.push(ObstructionCheck {
            name: "signature",
            passed: sigma == 0,
            certificate: format!("signature(A + A^T) = {sigma}"),
        });
    }
    let delta = f.alexander_polynomial()?;
    let fm = !delta.is_zero() && fox_milnor(&delta)?;
    checks.push(ObstructionCheck {
        name: "Fox–Milnor",
        passed: fm,
        certificate: if fm {
            format!("Δ = {} factors as Q(t)Q(t^-1)", delta)
        } else {
            format!("Δ = {} is not of the form Q(t)Q(t^-1)", delta)
        },
    });
    if f.eps == -1 {
        let k = arf(&seifert_quadratic_form(&f.a, &f.symmetrization())?)?;
        checks.push(ObstructionCheck {
            name: "Arf",
            passed: k == 0,
            certificate: format!("KARL = {k}"),
        });
    }
    Ok(ObstructionReport { checks })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CobordismVerdict {
    Cobordant(Metaboliser),
    NotCobordant(ObstructionCheck),
    Unknown { bound: u32 },
}

/// Decide whether `F1 ⊞ -F2` is null-cobordant, as far as the obstructions
/// and a bounded metaboliser search can tell.
pub fn algebraically_cobordant(f1: &EpsForm, f2: &EpsForm, bound: u32) -> Result<CobordismVerdict> {
    let sum = f1.minus(f2)?;
    let report = null_cobordance_obstructions(&sum)?;
    if let Some(fail) = report.first_failure() {
        return Ok(CobordismVerdict::NotCobordant(fail.clone()));
    }
    Ok(match search_metaboliser(&sum, bound) {
        MetaboliserSearch::Found(w) => CobordismVerdict::Cobordant(w),
        MetaboliserSearch::NotFoundWithinBound { bound } => CobordismVerdict::Unknown { bound },
        MetaboliserSearch::OddRank(r) => CobordismVerdict::NotCobordant(ObstructionCheck {
            name: "rank parity",
            passed: false,
            certificate: format!("rank {r}"),
        }),
    })
}

/// Integer vector helper for callers building candidate bases.
pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}
