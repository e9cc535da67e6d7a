//! Handle data of the Seifert hypersurface (linking numbers of the attaching
//! spheres and framing obstructions) and linking-matrix classification of
//! spherical links.
//!
//! The displayed linking formula is read with `a_ji` in the second term:
//! `L(K_i, K_j) = (-1)^q (a_ij + (-1)^q a_ji)`, which is the off-diagonal of
//! the intersection form.

use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{Int, IntMatrix};
use crate::seifert::{sign_pow, SeifertMatrix};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Framings {
    /// `q` even: `Q_j = 2 a_jj`, an Euler number.
    Integer(Vec<Int>),
    /// `q` odd, `q ∉ {1, 3, 7}`: `Q_j = a_jj mod 2`.
    Mod2(Vec<u8>),
    /// `q ∈ {1, 3, 7}`: no framing obstruction.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandlePresentation {
    pub rank: usize,
    /// `(i, j, L(K_i, K_j))` for `i < j`.
    pub linking: Vec<(usize, usize, Int)>,
    pub framings: Framings,
}

pub fn handle_data(s: &SeifertMatrix) -> HandlePresentation {
    let a = s.matrix();
    let r = s.rank();
    let q = s.q();
    let eps = Int::from(sign_pow(q));
    let mut linking = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let v = &eps * (&a[(i, j)] + &eps * &a[(j, i)]);
            linking.push((i, j, v));
        }
    }
    let framings = if q % 2 == 0 {
        Framings::Integer((0..r).map(|j| &a[(j, j)] * 2).collect())
    } else if matches!(q, 1 | 3 | 7) {
        Framings::None
    } else {
        Framings::Mod2((0..r).map(|j| u8::from(a[(j, j)].is_odd())).collect())
    };
    HandlePresentation { rank: r, linking, framings }
}

/// `(-1)^{m+1}`-symmetric integer matrix with zero diagonal, `m` the dimension
/// of the link components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    m: IntMatrix,
    dim: u32,
}

impl LinkingMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// `(-1)^{m+1}`.
    pub fn symmetry_sign(&self) -> i8 {
        sign_pow(self.dim + 1)
    }
}

pub fn validate_linking_matrix(m: IntMatrix, dim: u32) -> Result<LinkingMatrix> {
    if !m.is_square() {
        return Err(Error::InvalidLinkingMatrix(format!("not square ({}x{})", m.rows(), m.cols())));
    }
    let sign = Int::from(sign_pow(dim + 1));
    for i in 0..m.rows() {
        if !m[(i, i)].is_zero() {
            return Err(Error::InvalidLinkingMatrix(format!("nonzero diagonal entry at ({i}, {i})")));
        }
        for j in i + 1..m.cols() {
            if m[(j, i)] != &sign * &m[(i, j)] {
                let kind = if sign == Int::from(1) { "symmetric" } else { "antisymmetric" };
                return Err(Error::InvalidLinkingMatrix(format!("not {kind} at ({i}, {j})")));
            }
        }
    }
    Ok(LinkingMatrix { m, dim })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsotopyVerdict {
    Isotopic,
    NotIsotopic,
    /// `m = 1`: equal matrices are only a necessary condition.
    NecessaryConditionHolds,
    NecessaryConditionFails,
}

/// For `m >= 2` links with fixed labels and orientations are isotopic iff
/// their linking matrices agree.
pub fn links_isotopic(m1: &LinkingMatrix, m2: &LinkingMatrix) -> Result<IsotopyVerdict> {
    if m1.dim != m2.dim || m1.m.rows() != m2.m.rows() {
        return Err(Error::Shape(format!(
            "links of {} components in dimension {} vs {} components in dimension {}",
            m1.m.rows(),
            m1.dim,
            m2.m.rows(),
            m2.dim
        )));
    }
    let equal = m1.m == m2.m;
    Ok(match (m1.dim >= 2, equal) {
        (true, true) => IsotopyVerdict::Isotopic,
        (true, false) => IsotopyVerdict::NotIsotopic,
        (false, true) => IsotopyVerdict::NecessaryConditionHolds,
        (false, false) => IsotopyVerdict::NecessaryConditionFails,
    })
}
