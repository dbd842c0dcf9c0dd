/// Mixed absolute/relative comparison threshold.
///
/// A quantity is treated as zero when `|x| <= max(abs, rel * magnitude)`,
/// where `magnitude` is the size of the terms the quantity was computed
/// from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub const fn new(abs: f64, rel: f64) -> Self {
        Self { abs, rel }
    }

    pub const fn uniform(eps: f64) -> Self {
        Self { abs: eps, rel: eps }
    }

    #[inline]
    pub fn threshold(&self, magnitude: f64) -> f64 {
        self.abs.max(self.rel * magnitude.abs())
    }

    #[inline]
    pub fn is_zero(&self, x: f64, magnitude: f64) -> bool {
        x.abs() <= self.threshold(magnitude)
    }

    #[inline]
    pub fn eq(&self, a: f64, b: f64) -> bool {
        self.is_zero(a - b, a.abs().max(b.abs()))
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::uniform(Self::DEFAULT_EPS)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_criterion() {
        let tol = Tolerance::default();
        assert!(tol.eq(1.0, 1.0 + 5e-10));
        assert!(!tol.eq(1.0, 1.0 + 5e-9));
        // relative part takes over for large values
        assert!(tol.eq(1e6, 1e6 + 1e-4));
        assert!(!tol.eq(1e6, 1e6 + 1e-2));
        // absolute floor for tiny values
        assert!(tol.is_zero(1e-10, 0.0));
    }
}
