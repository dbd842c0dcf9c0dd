//! Change of basis and the named transitions between system shapes.

mod named;

use std::fmt;

pub use named::{
    diagonal_reduce, double_to_rr, family_5, family_sol2, gamma2_to_gamma3, gamma3_table, gamma4_to_gamma5,
    gamma5_chain, gamma5_table, gamma5_to_double, gamma5_to_gamma7, gamma5_to_rr, gamma5_to_rr_with, gamma7_table,
    rr_to_gamma7, RootSign, RrSolution,
};

use crate::element::Element;
use crate::error::{HnsError, Result};
use crate::table::{multiply, StructuralConstants};
use crate::tolerance::Tolerance;

/// Invertible 2×2 matrix whose rows are the new basis vectors written in
/// the old basis: `f1 = t11 E1 + t12 E2`, `f2 = t21 E1 + t22 E2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisTransform {
    pub t11: f64,
    pub t12: f64,
    pub t21: f64,
    pub t22: f64,
}

impl BasisTransform {
    pub const IDENTITY: Self = Self::new(1.0, 0.0, 0.0, 1.0);

    pub const fn new(t11: f64, t12: f64, t21: f64, t22: f64) -> Self {
        Self { t11, t12, t21, t22 }
    }

    /// Build from the two new basis vectors.
    pub const fn from_rows(f1: Element, f2: Element) -> Self {
        Self::new(f1.m1, f1.m2, f2.m1, f2.m2)
    }

    pub const fn diagonal(d1: f64, d2: f64) -> Self {
        Self::new(d1, 0.0, 0.0, d2)
    }

    pub fn rows(&self) -> [Element; 2] {
        [Element::new(self.t11, self.t12), Element::new(self.t21, self.t22)]
    }

    pub fn to_array(&self) -> [[f64; 2]; 2] {
        [[self.t11, self.t12], [self.t21, self.t22]]
    }

    pub fn det(&self) -> f64 {
        self.t11 * self.t22 - self.t12 * self.t21
    }

    fn magnitude(&self) -> f64 {
        [self.t11, self.t12, self.t21, self.t22].iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    pub fn is_singular(&self, tol: Tolerance) -> bool {
        let det = self.det();
        !det.is_finite() || tol.is_zero(det, self.magnitude().powi(2))
    }

    pub fn check(self) -> Result<Self> {
        if self.is_singular(Tolerance::default()) {
            Err(HnsError::SingularTransform(self.det()))
        } else {
            Ok(self)
        }
    }

    /// Transform back to the old basis: rows are the old basis vectors in
    /// the new basis.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.check()?.det();
        Ok(Self::new(self.t22 / det, -self.t12 / det, -self.t21 / det, self.t11 / det))
    }

    /// Coordinates in the new basis of the element with old coordinates `x`.
    pub fn to_new_coords(&self, x: Element) -> Element {
        let det = self.det();
        Element::new(
            (self.t22 * x.m1 - self.t21 * x.m2) / det,
            (self.t11 * x.m2 - self.t12 * x.m1) / det,
        )
    }

    /// Old coordinates of the element with new coordinates `c`.
    pub fn to_old_coords(&self, c: Element) -> Element {
        Element::new(c.m1 * self.t11 + c.m2 * self.t21, c.m1 * self.t12 + c.m2 * self.t22)
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        let scale = self.magnitude().max(other.magnitude());
        [
            self.t11 - other.t11,
            self.t12 - other.t12,
            self.t21 - other.t21,
            self.t22 - other.t22,
        ]
        .iter()
        .all(|d| tol.is_zero(*d, scale))
    }
}

impl fmt::Display for BasisTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.t11, self.t12, self.t21, self.t22)
    }
}

/// Structural constants of the same algebra in the basis `f = T·E`.
pub fn change_basis(table: &StructuralConstants, transform: &BasisTransform) -> Result<StructuralConstants> {
    let transform = transform.check()?;
    let [f1, f2] = transform.rows();
    let p11 = transform.to_new_coords(multiply(table, f1, f1));
    let p12 = transform.to_new_coords(multiply(table, f1, f2));
    let p22 = transform.to_new_coords(multiply(table, f2, f2));
    Ok(StructuralConstants::new(p11.m1, p12.m1, p22.m1, p11.m2, p12.m2, p22.m2))
}

/// `first` then `second`: the rows of the result express the final basis in
/// the original one, so the matrix is `second · first`.
pub fn compose_transform(first: &BasisTransform, second: &BasisTransform) -> BasisTransform {
    let (a, b) = (first, second);
    BasisTransform::new(
        b.t11 * a.t11 + b.t12 * a.t21,
        b.t11 * a.t12 + b.t12 * a.t22,
        b.t21 * a.t11 + b.t22 * a.t21,
        b.t21 * a.t12 + b.t22 * a.t22,
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainLink {
    pub transform: BasisTransform,
    pub source: String,
    pub target: String,
}

/// A sequence of basis transitions through named intermediate systems.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TransitionChain {
    links: Vec<ChainLink>,
}

impl TransitionChain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, transform: BasisTransform, source: &str, target: &str) -> Result<()> {
        if let Some(last) = self.links.last() {
            if last.target != source {
                return Err(HnsError::BrokenChain { expected: last.target.clone(), found: source.to_owned() });
            }
        }
        self.links.push(ChainLink { transform, source: source.to_owned(), target: target.to_owned() });
        Ok(())
    }

    pub fn then(mut self, transform: BasisTransform, source: &str, target: &str) -> Result<Self> {
        self.push(transform, source, target)?;
        Ok(self)
    }

    pub fn links(&self) -> &[ChainLink] {
        &self.links
    }

    pub fn source(&self) -> Option<&str> {
        self.links.first().map(|l| l.source.as_str())
    }

    pub fn target(&self) -> Option<&str> {
        self.links.last().map(|l| l.target.as_str())
    }

    pub fn composite(&self) -> BasisTransform {
        self.links
            .iter()
            .fold(BasisTransform::IDENTITY, |acc, link| compose_transform(&acc, &link.transform))
    }

    /// Apply every link in order.
    pub fn apply(&self, table: &StructuralConstants) -> Result<StructuralConstants> {
        self.links.iter().try_fold(*table, |t, link| change_basis(&t, &link.transform))
    }
}
