//! Seifert matrices of Brieskorn–Pham links `z_0^{a_0} + ... + z_q^{a_q} = 0`
//! via Sakamoto's signed tensor product, and the full invariant report of a germ.
//!
//! The one-variable matrix of `z^a` is the `(a-1)×(a-1)` lower bidiagonal
//! matrix with `1` on the diagonal and `-1` below it. For `a = 2, 3` this is
//! the classical data; for larger `a` it is the natural extrapolation, which
//! has `det(tP + P^T) = 1 + t + ... + t^{a-1}`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{char_poly_int, cyclotomic_decomposition, Int, IntMatrix, LaurentPoly, Poly};
use crate::quadratic::{karl, signature, SymmetricForm};
use crate::seifert::{sign_pow, Normalization, SeifertMatrix};
use crate::sphere_groups::{bp_class, BpClass};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrieskornGerm {
    exponents: Vec<u32>,
}

impl BrieskornGerm {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidGerm("at least one exponent is required".into()));
        }
        if let Some(a) = exponents.iter().find(|&&a| a < 2) {
            return Err(Error::InvalidGerm(format!("exponent {a} < 2")));
        }
        Ok(BrieskornGerm { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Middle dimension: number of variables minus one.
    pub fn q(&self) -> u32 {
        self.exponents.len() as u32 - 1
    }

    /// `Π (a_i - 1)`.
    pub fn milnor_number(&self) -> BigUint {
        self.exponents.iter().map(|&a| BigUint::from(a - 1)).product()
    }
}

impl fmt::Display for BrieskornGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn pham_matrix(a: u32) -> Result<IntMatrix> {
    if a < 2 {
        return Err(Error::InvalidGerm(format!("exponent {a} < 2")));
    }
    let n = (a - 1) as usize;
    Ok(IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Int::one()
        } else if i == j + 1 {
            -Int::one()
        } else {
            Int::from(0)
        }
    }))
}

/// `A_h = (-1)^{(n+1)(m+1)} A_f ⊗ A_g` for `h = f(x_0..x_n) + g(y_0..y_m)`.
pub fn sakamoto(af: &IntMatrix, ag: &IntMatrix, n: u32, m: u32) -> IntMatrix {
    let k = af.kronecker(ag);
    if sign_pow((n + 1) * (m + 1)) < 0 {
        -&k
    } else {
        k
    }
}

/// Left fold of `sakamoto` over the one-variable matrices.
pub fn brieskorn_seifert(g: &BrieskornGerm) -> SeifertMatrix {
    let mut exps = g.exponents.iter();
    let first = *exps.next().expect("nonempty germ");
    let mut acc = pham_matrix(first).expect("validated exponent");
    for (n, &a) in exps.enumerate() {
        acc = sakamoto(&acc, &pham_matrix(a).expect("validated exponent"), n as u32, 0);
    }
    SeifertMatrix::new(acc, g.q()).expect("square")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermReport {
    pub germ: BrieskornGerm,
    pub q: u32,
    pub rank: usize,
    pub seifert: SeifertMatrix,
    pub fibered: bool,
    pub monodromy: Option<IntMatrix>,
    pub char_poly: Option<Poly<Int>>,
    /// Multiplicities of the cyclotomic factors of the characteristic polynomial.
    pub cyclotomic_factors: Option<Vec<(u64, usize)>>,
    pub quasi_unipotent: Option<bool>,
    pub intersection_form: IntMatrix,
    pub intersection_det: Int,
    pub unimodular: bool,
    pub alexander_raw: LaurentPoly,
    pub alexander_conway: Option<LaurentPoly>,
    pub signature: Option<i64>,
    pub karl: Option<u8>,
    pub bp_class: Option<BpClass>,
    /// For `q = 2` the boundary is a 3-dimensional homology sphere and `bP^4`
    /// is trivial; the class of the double suspension `+ u^2 + v^2` (`q = 4`,
    /// `bP^8`) is reported here instead.
    pub suspended_bp_class: Option<BpClass>,
    pub anomalies: Vec<String>,
}

pub fn germ_report(g: &BrieskornGerm) -> GermReport {
    let seifert = brieskorn_seifert(g);
    let q = g.q();
    let mut anomalies = Vec::new();
    let fibered = seifert.is_fibered_form();
    if !fibered {
        anomalies.push("Seifert matrix is not unimodular".to_string());
    }
    let monodromy = seifert.integral_monodromy().ok();
    let char_poly = monodromy.as_ref().map(|h| char_poly_int(h).expect("square"));
    let cyclotomic_factors = char_poly.as_ref().and_then(cyclotomic_decomposition);
    let quasi_unipotent = char_poly.as_ref().map(|_| cyclotomic_factors.is_some());
    if quasi_unipotent == Some(false) {
        anomalies.push("monodromy is not quasi-unipotent".to_string());
    }
    let intersection_form = seifert.intersection_form();
    let intersection_det = seifert.intersection_det();
    let unimodular = seifert.is_unimodular();
    let alexander_raw = seifert.alexander_polynomial(Normalization::Raw).expect("square");
    let alexander_conway = seifert.alexander_polynomial(Normalization::Conway).ok();

    let signature = (q % 2 == 0)
        .then(|| signature(&SymmetricForm::new(intersection_form.clone()).expect("symmetric for even q")));
    let karl = if q % 2 == 1 && unimodular { karl(&seifert).ok() } else { None };
    let bp = if unimodular && q >= 1 {
        match bp_class(&seifert) {
            Ok(c) => Some(c),
            Err(e) => {
                anomalies.push(e.to_string());
                None
            }
        }
    } else {
        None
    };
    let suspended_bp_class = if q == 2 && unimodular {
        let mut exps = g.exponents.clone();
        exps.extend([2, 2]);
        bp_class(&brieskorn_seifert(&BrieskornGerm { exponents: exps })).ok()
    } else {
        None
    };

    GermReport {
        germ: g.clone(),
        q,
        rank: seifert.rank(),
        seifert,
        fibered,
        monodromy,
        char_poly,
        cyclotomic_factors,
        quasi_unipotent,
        intersection_form,
        intersection_det,
        unimodular,
        alexander_raw,
        alexander_conway,
        signature,
        karl,
        bp_class: bp,
        suspended_bp_class,
        anomalies,
    }
}
