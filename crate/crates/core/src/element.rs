use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A point `m1 E1 + m2 E2` of a two-dimensional system, in that system's basis.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Element {
    pub m1: f64,
    pub m2: f64,
}

impl Element {
    pub const ZERO: Element = Element::new(0.0, 0.0);
    pub const E1: Element = Element::new(1.0, 0.0);
    pub const E2: Element = Element::new(0.0, 1.0);

    pub const fn new(m1: f64, m2: f64) -> Self {
        Self { m1, m2 }
    }

    pub fn is_finite(&self) -> bool {
        self.m1.is_finite() && self.m2.is_finite()
    }

    /// Max-norm.
    pub fn norm_inf(&self) -> f64 {
        self.m1.abs().max(self.m2.abs())
    }

    pub fn norm(&self) -> f64 {
        self.m1.hypot(self.m2)
    }

    pub fn dot(&self, other: &Element) -> f64 {
        self.m1 * other.m1 + self.m2 * other.m2
    }

    /// Largest coordinate difference.
    pub fn dist_inf(&self, other: &Element) -> f64 {
        (self.m1 - other.m1).abs().max((self.m2 - other.m2).abs())
    }

    pub fn to_array(self) -> [f64; 2] {
        [self.m1, self.m2]
    }
}

impl From<[f64; 2]> for Element {
    fn from([m1, m2]: [f64; 2]) -> Self {
        Self { m1, m2 }
    }
}

impl From<(f64, f64)> for Element {
    fn from((m1, m2): (f64, f64)) -> Self {
        Self { m1, m2 }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        Element::new(self.m1 + rhs.m1, self.m2 + rhs.m2)
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        Element::new(self.m1 - rhs.m1, self.m2 - rhs.m2)
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::new(-self.m1, -self.m2)
    }
}

impl Mul<f64> for Element {
    type Output = Element;
    fn mul(self, rhs: f64) -> Element {
        Element::new(self.m1 * rhs, self.m2 * rhs)
    }
}

impl Mul<Element> for f64 {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        rhs * self
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} E1 + {} E2", self.m1, self.m2)
    }
}
