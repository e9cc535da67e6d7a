//! Seifert matrices and the invariants read off from them directly:
//! intersection form, monodromy, Alexander polynomial, knot module.
//!
//! A Seifert matrix `A` of a `(2q-1)`-dimensional link in `S^{2q+1}` has
//! `ε = (-1)^q` and symmetrization `(-1)^q I = A + (-1)^q A^T`.

use num_traits::{One, Signed, Zero};

use crate::arith::{
    char_poly, cyclotomic_decomposition, det_linear_pencil, elementary_divisors_qt, Int,
    IntMatrix, LaurentPoly, Matrix, Poly, Rat, RatMatrix,
};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    a: IntMatrix,
    q: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// `det(tA + (-1)^q A^T)` verbatim.
    Raw,
    /// Symmetric under `t <-> t^-1` with value `1` at `t = 1`.
    Conway,
}

impl SeifertMatrix {
    /// `q = 0` is allowed: it is the one-variable germ `u^2` and its suspensions' seed.
    pub fn new(a: IntMatrix, q: u32) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Shape(format!("Seifert matrix must be square, got {}x{}", a.rows(), a.cols())));
        }
        Ok(SeifertMatrix { a, q })
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R], q: u32) -> Result<Self> {
        SeifertMatrix::new(IntMatrix::from_i64(rows)?, q)
    }

    /// The unknot in `S^{2q+1}`.
    pub fn empty(q: u32) -> Self {
        SeifertMatrix { a: IntMatrix::zeros(0, 0), q }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.a.rows()
    }

    /// `ε = (-1)^q`.
    pub fn epsilon(&self) -> i8 {
        sign_pow(self.q)
    }

    fn eps_int(&self) -> Int {
        Int::from(self.epsilon())
    }

    /// `A + ε A^T`, i.e. `(-1)^q I`.
    fn symmetrized(&self) -> IntMatrix {
        let at = self.a.transpose().scale(&self.eps_int());
        self.a.checked_add(&at).expect("same shape")
    }

    pub fn intersection_form(&self) -> IntMatrix {
        self.symmetrized().scale(&self.eps_int())
    }

    pub fn intersection_det(&self) -> Int {
        self.intersection_form().det().expect("square")
    }

    pub fn is_unimodular(&self) -> bool {
        self.intersection_det().abs().is_one()
    }

    pub fn is_fibered_form(&self) -> bool {
        self.a.det().expect("square").abs().is_one()
    }

    /// `h = (-1)^{q+1} (A^T)^{-1} A`.
    pub fn monodromy(&self) -> Result<RatMatrix> {
        let at_inv = self.a.transpose().to_rat().inverse().map_err(|_| Error::NotFibered)?;
        let h = at_inv.checked_mul(&self.a.to_rat())?;
        Ok(h.scale(&Rat::from_integer(Int::from(sign_pow(self.q + 1)))))
    }

    /// Integer monodromy, when `det A = ±1`.
    pub fn integral_monodromy(&self) -> Result<IntMatrix> {
        self.monodromy()?.to_int().ok_or(Error::NotFibered)
    }

    /// Presentation matrix `tA + (-1)^q A^T` over `Z[t, t^-1]`.
    pub fn presentation_matrix(&self) -> Matrix<LaurentPoly> {
        let eps = self.eps_int();
        let n = self.rank();
        Matrix::from_fn(n, n, |i, j| {
            LaurentPoly::from_terms([(1, self.a[(i, j)].clone()), (0, &eps * &self.a[(j, i)])])
        })
    }

    pub fn alexander_polynomial(&self, normalize: Normalization) -> Result<LaurentPoly> {
        let at = self.a.transpose().scale(&self.eps_int());
        let raw = LaurentPoly::from_poly(&det_linear_pencil(&at, &self.a)?, 0);
        match normalize {
            Normalization::Raw => Ok(raw),
            Normalization::Conway => conway_normalize(&raw),
        }
    }

    pub fn knot_module(&self) -> KnotModulePresentation {
        let matrix = self.presentation_matrix();
        let rat = matrix.map(LaurentPoly::to_rat);
        let divisors = elementary_divisors_qt(&rat);
        let torsion = divisors.iter().all(|d| !d.is_zero());
        KnotModulePresentation { matrix, divisors, torsion }
    }

    /// `(t - 1)` acts invertibly on the presented module.
    pub fn is_type_k(&self) -> bool {
        self.symmetrized().det().expect("square").abs().is_one()
    }
}

/// Unit choice `±t^k` making `Δ` symmetric with `Δ(1) = 1`.
pub fn conway_normalize(raw: &LaurentPoly) -> Result<LaurentPoly> {
    let at_one = raw.eval_at_one();
    if !at_one.abs().is_one() {
        return Err(Error::NotNormalizable { value_at_one: at_one });
    }
    let (lo, hi) = (raw.min_exp().unwrap_or(0), raw.max_exp().unwrap_or(0));
    if (hi - lo) % 2 != 0 {
        return Err(Error::OddSpan { span: hi - lo });
    }
    let centered = raw.shift(-(lo + hi) / 2).scale(&at_one);
    if !centered.is_symmetric() {
        return Err(Error::NotNormalizable { value_at_one: at_one });
    }
    Ok(centered)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotModulePresentation {
    pub matrix: Matrix<LaurentPoly>,
    /// Non-unit elementary divisors over `Q[t, t^-1]`; a zero entry is a free summand.
    pub divisors: Vec<Poly<Rat>>,
    /// `det(tA + (-1)^q A^T)` is a nonzero polynomial.
    pub torsion: bool,
}

/// All eigenvalues of `h` are roots of unity.
pub fn is_quasi_unipotent(h: &RatMatrix) -> Result<bool> {
    let cp = char_poly(h)?;
    let Some(cp) = cp.to_int() else {
        return Ok(false);
    };
    Ok(cyclotomic_decomposition(&cp).is_some())
}

pub(crate) fn sign_pow(e: u32) -> i8 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}
