//! Complex / dual / double classification of unital systems.
//!
//! Every unital two-dimensional system has a basis `(e, j)` with `e` the unit
//! and `j·j = p e + q j`. Completing the square, `(j - q/2 e)² = (p + q²/4) e`,
//! so the sign of `p + q²/4` decides the isomorphism class.

mod oracles;

use std::fmt;

pub use oracles::{find_idempotents, find_nilpotents};

use crate::element::Element;
use crate::error::{HnsError, Result};
use crate::table::{multiply, StructuralConstants};
use crate::tolerance::Tolerance;
use crate::unit::{unit_element_with, UnitSolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsoClass {
    Complex,
    Dual,
    Double,
    NonUnital,
}

impl IsoClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            IsoClass::Complex => "Complex",
            IsoClass::Dual => "Dual",
            IsoClass::Double => "Double",
            IsoClass::NonUnital => "NonUnital",
        }
    }
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `j·j = p e + q j` in the basis `(unit, complement)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalForm {
    pub p: f64,
    pub q: f64,
    /// The unit `e`, in the original basis.
    pub unit: Element,
    /// The complement `j`, in the original basis.
    pub complement: Element,
}

impl NormalForm {
    pub fn discriminant(&self) -> f64 {
        discriminant(self)
    }

    /// The same algebra written in the `(e, j)` basis.
    pub fn table(&self) -> StructuralConstants {
        StructuralConstants::new(1.0, 0.0, self.p, 0.0, 1.0, self.q)
    }

    /// Discriminant after rescaling `j` to the length of `e`, which makes the
    /// value independent of the overall scale of the structural constants.
    fn scaled_discriminant(&self) -> (f64, f64) {
        let s = self.unit.norm() / self.complement.norm();
        let (p, q) = (self.p * s * s, self.q * s);
        (p + q * q / 4.0, p.abs().max(q * q / 4.0))
    }

    pub fn class_with(&self, tol: Tolerance) -> IsoClass {
        let (d, magnitude) = self.scaled_discriminant();
        if tol.is_zero(d, magnitude) {
            IsoClass::Dual
        } else if d < 0.0 {
            IsoClass::Complex
        } else {
            IsoClass::Double
        }
    }
}

pub fn normal_form(table: &StructuralConstants) -> Result<NormalForm> {
    normal_form_with(table, Tolerance::default())
}

pub fn normal_form_with(table: &StructuralConstants, tol: Tolerance) -> Result<NormalForm> {
    let unit = match unit_element_with(table, tol) {
        UnitSolution::Constant(x) => x,
        _ => return Err(HnsError::NonUnitalSystem),
    };
    Ok(normal_form_from_unit(table, unit))
}

pub(crate) fn normal_form_from_unit(table: &StructuralConstants, unit: Element) -> NormalForm {
    // the basis vector with the smaller |cos| against the unit; ties go to E2
    let base = if unit.m1.abs() < unit.m2.abs() { Element::E1 } else { Element::E2 };
    let complement = base - unit * (base.dot(&unit) / unit.dot(&unit));
    let jj = multiply(table, complement, complement);
    let det = unit.m1 * complement.m2 - complement.m1 * unit.m2;
    let p = (jj.m1 * complement.m2 - complement.m1 * jj.m2) / det;
    let q = (unit.m1 * jj.m2 - jj.m1 * unit.m2) / det;
    NormalForm { p, q, unit, complement }
}

/// `p + q²/4`.
pub fn discriminant(nf: &NormalForm) -> f64 {
    nf.p + nf.q * nf.q / 4.0
}

pub fn classify(table: &StructuralConstants) -> IsoClass {
    classify_with(table, Tolerance::default())
}

pub fn classify_with(table: &StructuralConstants, tol: Tolerance) -> IsoClass {
    match normal_form_with(table, tol) {
        Ok(nf) => nf.class_with(tol),
        Err(_) => IsoClass::NonUnital,
    }
}
