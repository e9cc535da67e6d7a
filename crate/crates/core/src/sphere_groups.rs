//! Orders of `Im J`, `bP^{4k}`, `bP^{4k+2}` and the group `G^n` of homotopy
//! `n`-spheres that embed in codimension two, plus the `bP`-class of a
//! knot's boundary sphere.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{bernoulli, Int, Rat};
use crate::quadratic::{karl, signature, SymmetricForm};
use crate::seifert::SeifertMatrix;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Trivial,
    Cyclic(Int),
    Z2,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupVerdict {
    pub kind: GroupKind,
    /// Where the answer comes from (formula, exceptional list, parity rule).
    pub provenance: String,
    pub generator: Option<String>,
}

impl GroupVerdict {
    fn new(kind: GroupKind, provenance: impl Into<String>) -> Self {
        GroupVerdict { kind, provenance: provenance.into(), generator: None }
    }

    pub fn order(&self) -> Option<Int> {
        match &self.kind {
            GroupKind::Trivial => Some(Int::one()),
            GroupKind::Cyclic(n) => Some(n.clone()),
            GroupKind::Z2 => Some(Int::from(2)),
            GroupKind::Unknown => None,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Trivial => write!(f, "trivial"),
            GroupKind::Cyclic(n) => write!(f, "Z/{n}"),
            GroupKind::Z2 => write!(f, "Z/2"),
            GroupKind::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExceptionalStatus {
    Trivial,
    Unknown,
}

/// A dimension `4k+2` where `bP^{4k+2}` is not `Z/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExceptionalDimension {
    pub dim: u32,
    pub status: ExceptionalStatus,
    pub provenance: &'static str,
}

/// Dimensions `4k+2` in which a framed manifold of Kervaire invariant one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionTable {
    entries: Vec<ExceptionalDimension>,
}

const CLASSICAL: &[ExceptionalDimension] = &[
    ExceptionalDimension { dim: 2, status: ExceptionalStatus::Trivial, provenance: "S^1 x S^1 has Kervaire invariant one" },
    ExceptionalDimension { dim: 6, status: ExceptionalStatus::Trivial, provenance: "S^3 x S^3 has Kervaire invariant one" },
    ExceptionalDimension { dim: 14, status: ExceptionalStatus::Trivial, provenance: "S^7 x S^7 has Kervaire invariant one" },
    ExceptionalDimension { dim: 30, status: ExceptionalStatus::Trivial, provenance: "Kervaire invariant one exists in dimension 30" },
    ExceptionalDimension { dim: 62, status: ExceptionalStatus::Trivial, provenance: "Kervaire invariant one exists in dimension 62" },
    ExceptionalDimension { dim: 126, status: ExceptionalStatus::Unknown, provenance: "Hill–Hopkins–Ravenel leave dimension 126 open" },
];

impl ExceptionTable {
    /// The state of knowledge after Hill–Hopkins–Ravenel: 126 open.
    pub fn classical() -> Self {
        ExceptionTable { entries: CLASSICAL.to_vec() }
    }

    /// Dimension 126 settled: Kervaire invariant one exists there
    /// (Lin–Wang–Xu, 2024), so `bP^126` is trivial.
    pub fn with_dimension_126_resolved() -> Self {
        let mut t = ExceptionTable::classical();
        for e in &mut t.entries {
            if e.dim == 126 {
                e.status = ExceptionalStatus::Trivial;
                e.provenance = "Lin–Wang–Xu (2024), Kervaire invariant one in dimension 126";
            }
        }
        t
    }

    pub fn entries(&self) -> &[ExceptionalDimension] {
        &self.entries
    }

    fn lookup(&self, dim: u32) -> Option<&ExceptionalDimension> {
        self.entries.iter().find(|e| e.dim == dim)
    }

    /// `bP^{4k+2}`.
    pub fn bp4k2_group(&self, k: u32) -> GroupVerdict {
        let dim = 4 * k + 2;
        match self.lookup(dim) {
            Some(e) => match e.status {
                ExceptionalStatus::Trivial => GroupVerdict::new(GroupKind::Trivial, e.provenance),
                ExceptionalStatus::Unknown => GroupVerdict::new(GroupKind::Unknown, e.provenance),
            },
            None => {
                let mut v = GroupVerdict::new(GroupKind::Z2, "Kervaire invariant one does not exist in this dimension");
                v.generator = Some(format!("Kervaire sphere Σ^{}", dim - 1));
                v
            }
        }
    }

    /// `G^n`, the homotopy `n`-spheres embeddable in `S^{n+2}`.
    pub fn embeddable_spheres_group(&self, n: u32) -> GroupVerdict {
        if n % 2 == 0 {
            return GroupVerdict::new(GroupKind::Trivial, "even n");
        }
        if n <= 4 {
            return GroupVerdict::new(GroupKind::Trivial, "n <= 4");
        }
        if n % 4 == 3 {
            let k = (n + 1) / 4;
            let order = bp4k_order(k).expect("k >= 2 for n >= 7");
            let mut v = GroupVerdict::new(GroupKind::Cyclic(order), format!("|bP^{}| from the Bernoulli formula", n + 1));
            v.generator = Some("boundary of the E8 plumbing".into());
            return v;
        }
        let k = (n - 1) / 4;
        let mut v = self.bp4k2_group(k);
        if v.kind == GroupKind::Trivial {
            v.provenance = format!("{} (exceptional)", v.provenance);
        }
        v
    }
}

impl Default for ExceptionTable {
    fn default() -> Self {
        ExceptionTable::classical()
    }
}

/// `|Im J_{4k-1}| = den(B_k / 4k)`.
pub fn im_j_order(k: u32) -> Result<Int> {
    if k == 0 {
        return Err(Error::OutOfRange("Im J order needs k >= 1".into()));
    }
    let v = bernoulli(k as usize)? / Rat::from_integer(Int::from(4 * k));
    Ok(v.denom().clone())
}

/// `|bP^{4k}| = 2^{2k-2} (2^{2k-1} - 1) num(4 B_k / k)` for `k >= 2`.
pub fn bp4k_order(k: u32) -> Result<Int> {
    if k < 2 {
        return Err(Error::OutOfRange(
            "bP^4k order formula needs k >= 2 (bP^4 is trivial and not given by the formula)".into(),
        ));
    }
    let b = bernoulli(k as usize)?;
    let frac = b * Rat::from_integer(Int::from(4)) / Rat::from_integer(Int::from(k));
    let two = Int::from(2);
    let a = num_traits::pow(two.clone(), (2 * k - 2) as usize);
    let c = num_traits::pow(two, (2 * k - 1) as usize) - Int::one();
    Ok(a * c * frac.numer())
}

pub fn bp4k2_group(k: u32) -> GroupVerdict {
    ExceptionTable::classical().bp4k2_group(k)
}

pub fn embeddable_spheres_group(n: u32) -> GroupVerdict {
    ExceptionTable::classical().embeddable_spheres_group(n)
}

/// Which homotopy sphere a knot's fibre boundary is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BpClass {
    /// `q` even: boundary of dimension `4k-1`, class `σ/8` in `bP^{4k}`.
    /// The class `+1` is the boundary of the (positive definite) E8 plumbing.
    Signature { dimension: u32, sigma: i64, sigma_over_8: i64, order: Int, residue: Int },
    /// `q` odd: boundary of dimension `4k+1`, class `KARL` in `bP^{4k+2}`.
    Karl { dimension: u32, karl: u8, group: GroupVerdict, exotic: Option<bool>, caution: bool },
}

impl BpClass {
    pub fn dimension(&self) -> u32 {
        match self {
            BpClass::Signature { dimension, .. } | BpClass::Karl { dimension, .. } => *dimension,
        }
    }

    /// `Some(true)` for an exotic sphere, `None` when the ambient group is unknown.
    pub fn is_exotic(&self) -> Option<bool> {
        match self {
            BpClass::Signature { residue, .. } => Some(!residue.is_zero()),
            BpClass::Karl { exotic, .. } => *exotic,
        }
    }
}

pub fn bp_class(s: &SeifertMatrix) -> Result<BpClass> {
    bp_class_with(s, &ExceptionTable::classical())
}

pub fn bp_class_with(s: &SeifertMatrix, table: &ExceptionTable) -> Result<BpClass> {
    let q = s.q();
    if q == 0 {
        return Err(Error::OutOfRange("bP class needs q >= 1".into()));
    }
    let det = s.intersection_det();
    if !num_traits::Signed::abs(&det).is_one() {
        return Err(Error::NotUnimodular { det });
    }
    let dimension = 2 * q - 1;
    if q % 2 == 0 {
        let form = SymmetricForm::new(s.intersection_form())?;
        let sigma = signature(&form);
        if sigma % 8 != 0 {
            return Err(Error::SignatureNotDivisible { sigma });
        }
        let k = q / 2;
        let order = if k == 1 { Int::one() } else { bp4k_order(k)? };
        let residue = Int::from(sigma / 8).mod_floor(&order);
        Ok(BpClass::Signature { dimension, sigma, sigma_over_8: sigma / 8, order, residue })
    } else {
        let value = karl(s)?;
        let group = table.bp4k2_group((q - 1) / 2);
        let exotic = match group.kind {
            GroupKind::Trivial => Some(false),
            GroupKind::Unknown => None,
            _ => Some(value == 1),
        };
        let caution = group.kind == GroupKind::Trivial;
        Ok(BpClass::Karl { dimension, karl: value, group, exotic, caution })
    }
}
