use crate::element::Element;
use crate::error::{HnsError, Result};
use crate::tolerance::Tolerance;

/// Multiplication table of a commutative two-dimensional system.
///
/// The `a` constants are the `E1` coordinates of the basis products and the
/// `b` constants their `E2` coordinates. `E1·E2` and `E2·E1` share the single
/// pair `(a12, b12)`, so every table is commutative.
///
/// Diagonal systems are the special case `a12 = b12 = 0`; there `a11, b11,
/// a22, b22` play the roles of `α11, β11, α22, β22`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructuralConstants {
    pub a11: f64,
    pub a12: f64,
    pub a22: f64,
    pub b11: f64,
    pub b12: f64,
    pub b22: f64,
}

impl StructuralConstants {
    /// Complex numbers: `E2² = -E1`.
    pub const COMPLEX: Self = Self::new(1.0, 0.0, -1.0, 0.0, 1.0, 0.0);
    /// Dual numbers: `E2² = 0`.
    pub const DUAL: Self = Self::new(1.0, 0.0, 0.0, 0.0, 1.0, 0.0);
    /// Double (split-complex) numbers: `E2² = E1`.
    pub const DOUBLE: Self = Self::new(1.0, 0.0, 1.0, 0.0, 1.0, 0.0);
    /// Direct sum R⊕R: two orthogonal idempotents.
    pub const DIRECT_SUM: Self = Self::new(1.0, 0.0, 0.0, 0.0, 0.0, 1.0);
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0, 0.0, 0.0);

    pub const NAMES: [&'static str; 6] = ["a11", "a12", "a22", "b11", "b12", "b22"];

    /// Arguments follow the order `a11, a12, a22, b11, b12, b22`.
    pub const fn new(a11: f64, a12: f64, a22: f64, b11: f64, b12: f64, b22: f64) -> Self {
        Self { a11, a12, a22, b11, b12, b22 }
    }

    /// Like [`new`](Self::new) but rejects NaN and infinite constants.
    pub fn try_new(a11: f64, a12: f64, a22: f64, b11: f64, b12: f64, b22: f64) -> Result<Self> {
        Self::from_array([a11, a12, a22, b11, b12, b22])
    }

    pub fn from_array(values: [f64; 6]) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(HnsError::NonFinite(Self::NAMES[i]));
        }
        let [a11, a12, a22, b11, b12, b22] = values;
        Ok(Self::new(a11, a12, a22, b11, b12, b22))
    }

    /// Diagonal table `α11 f1 + β11 f2 | 0 / 0 | α22 f1 + β22 f2`.
    pub const fn diagonal(alpha11: f64, beta11: f64, alpha22: f64, beta22: f64) -> Self {
        Self::new(alpha11, 0.0, alpha22, beta11, 0.0, beta22)
    }

    pub const fn to_array(self) -> [f64; 6] {
        [self.a11, self.a12, self.a22, self.b11, self.b12, self.b22]
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }

    /// Largest constant in absolute value.
    pub fn magnitude(&self) -> f64 {
        self.to_array().iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn e1_e1(&self) -> Element {
        Element::new(self.a11, self.b11)
    }

    pub fn e1_e2(&self) -> Element {
        Element::new(self.a12, self.b12)
    }

    pub fn e2_e2(&self) -> Element {
        Element::new(self.a22, self.b22)
    }

    pub fn mul(&self, u: Element, v: Element) -> Element {
        multiply(self, u, v)
    }

    pub fn square(&self, u: Element) -> Element {
        multiply(self, u, u)
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        let scale = self.magnitude().max(other.magnitude());
        self.to_array()
            .iter()
            .zip(other.to_array())
            .all(|(a, b)| tol.is_zero(a - b, scale))
    }
}

/// Bilinear product of two elements.
pub fn multiply(table: &StructuralConstants, u: Element, v: Element) -> Element {
    let t = table;
    let p11 = u.m1 * v.m1;
    let p12 = u.m1 * v.m2 + u.m2 * v.m1;
    let p22 = u.m2 * v.m2;
    Element::new(
        p11 * t.a11 + p12 * t.a12 + p22 * t.a22,
        p11 * t.b11 + p12 * t.b12 + p22 * t.b22,
    )
}

/// True when every basis product is a single basis element with a
/// coefficient in {-1, 0, +1}.
pub fn is_canonical(table: &StructuralConstants) -> bool {
    is_canonical_with(table, Tolerance::default())
}

pub fn is_canonical_with(table: &StructuralConstants, tol: Tolerance) -> bool {
    [table.e1_e1(), table.e1_e2(), table.e2_e2()].iter().all(|p| {
        let coeffs = [p.m1, p.m2];
        let nonzero = coeffs.iter().filter(|c| !tol.is_zero(**c, 1.0)).count();
        nonzero <= 1 && coeffs.iter().all(|c| [-1.0, 0.0, 1.0].iter().any(|k| tol.eq(*c, *k)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_i_squared() {
        let i = Element::E2;
        assert_eq!(multiply(&StructuralConstants::COMPLEX, i, i), Element::new(-1.0, 0.0));
    }

    #[test]
    fn family_five_instance_square() {
        // a11=2, a22=3, b22=1, b12=a11: E2·E2 = 3 E1 + 1 E2
        let t = StructuralConstants::new(2.0, 0.0, 3.0, 0.0, 2.0, 1.0);
        assert_eq!(multiply(&t, Element::E2, Element::E2), Element::new(3.0, 1.0));
        assert_eq!(multiply(&t, Element::E1, Element::E2), Element::new(0.0, 2.0));
    }

    #[test]
    fn zero_annihilates() {
        let t = StructuralConstants::new(1.5, -2.0, 3.25, 0.5, 7.0, -1.0);
        assert_eq!(multiply(&t, Element::ZERO, Element::new(3.0, -4.0)), Element::ZERO);
    }

    #[test]
    fn try_new_rejects_nan() {
        assert_eq!(
            StructuralConstants::try_new(1.0, 0.0, f64::NAN, 0.0, 1.0, 0.0),
            Err(HnsError::NonFinite("a22"))
        );
        assert!(StructuralConstants::try_new(1.0, 0.0, 0.0, f64::INFINITY, 1.0, 0.0).is_err());
    }

    #[test]
    fn canonical_tables() {
        assert!(is_canonical(&StructuralConstants::COMPLEX));
        assert!(is_canonical(&StructuralConstants::DUAL));
        assert!(is_canonical(&StructuralConstants::DIRECT_SUM));
        // E1² = 2E1
        assert!(!is_canonical(&StructuralConstants::new(2.0, 0.0, 3.0, 0.0, 2.0, 1.0)));
        // E2² = E1 + E2
        assert!(!is_canonical(&StructuralConstants::new(1.0, 0.0, 1.0, 0.0, 1.0, 1.0)));
    }
}
