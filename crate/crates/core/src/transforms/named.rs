//! Family generators and the explicit transitions between them.
//!
//! System shapes used here:
//!
//! ```text
//! Γ2  (family 5)   a11 E1       | a11 E2
//!                  a11 E2       | a22 E1 + b22 E2
//! Γ4  (solution 2) b22 E1       | b22 E2
//!                  b22 E2       | a22 E1 + b22 E2
//! Γ3               f1 | f2  /  f2 | a11 a22 f1 + b22 f2
//! Γ5               f1 | f2  /  f2 | a22 b22 f1 + b22 f2
//! Γ7  (diagonal)   α11 f1 | 0  /  0 | β22 f2
//! R⊕R              R1 | 0   /  0 | R2
//! ```

use super::{compose_transform, BasisTransform, TransitionChain};
use crate::error::{HnsError, Result};
use crate::table::StructuralConstants;
use crate::tolerance::Tolerance;

fn nonzero(value: f64, name: &'static str) -> Result<f64> {
    if value.abs() <= Tolerance::DEFAULT_EPS || !value.is_finite() {
        Err(HnsError::ZeroParameter(name))
    } else {
        Ok(value)
    }
}

/// Family with `b11 = a12 = 0`, `b12 = a11`; unit `E1 / a11`.
pub fn family_5(a11: f64, a22: f64, b22: f64) -> Result<StructuralConstants> {
    let a11 = nonzero(a11, "a11")?;
    Ok(StructuralConstants::new(a11, 0.0, a22, 0.0, a11, b22))
}

/// Family with `b11 = a12 = 0`, `a11 = b12 = b22`, `a22 ≠ 0`; unit `E1 / b22`.
pub fn family_sol2(a22: f64, b22: f64) -> Result<StructuralConstants> {
    let a22 = nonzero(a22, "a22")?;
    let b22 = nonzero(b22, "b22")?;
    Ok(StructuralConstants::new(b22, 0.0, a22, 0.0, b22, b22))
}

/// `f1 = E1 / a11`, `f2 = E2`.
pub fn gamma2_to_gamma3(a11: f64) -> Result<BasisTransform> {
    let a11 = nonzero(a11, "a11")?;
    Ok(BasisTransform::diagonal(1.0 / a11, 1.0))
}

/// `f1 = E1 / b22`, `f2 = E2`.
pub fn gamma4_to_gamma5(b22: f64) -> Result<BasisTransform> {
    let b22 = nonzero(b22, "b22")?;
    Ok(BasisTransform::diagonal(1.0 / b22, 1.0))
}

pub fn gamma3_table(a11: f64, a22: f64, b22: f64) -> StructuralConstants {
    StructuralConstants::new(1.0, 0.0, a11 * a22, 0.0, 1.0, b22)
}

pub fn gamma5_table(a22: f64, b22: f64) -> StructuralConstants {
    StructuralConstants::new(1.0, 0.0, a22 * b22, 0.0, 1.0, b22)
}

pub fn gamma7_table(alpha11: f64, beta22: f64) -> StructuralConstants {
    StructuralConstants::diagonal(alpha11, 0.0, 0.0, beta22)
}

/// Reduce a diagonal table to the constant-unital shape `α11 f1 | 0 / 0 | β22 f2`.
///
/// A diagonal system has a constant unit only when `β11 = α22 = 0`; the
/// unit is then `f1 / α11 + f2 / β22`, so both of those must be nonzero too.
pub fn diagonal_reduce(table: &StructuralConstants) -> Result<StructuralConstants> {
    let tol = Tolerance::default();
    let scale = table.magnitude();
    if !tol.is_zero(table.a12, scale) || !tol.is_zero(table.b12, scale) {
        return Err(HnsError::NotDiagonal { a12: table.a12, b12: table.b12 });
    }
    let vanishes = |x: f64| tol.is_zero(x, scale);
    if !vanishes(table.b11) || !vanishes(table.a22) || vanishes(table.a11) || vanishes(table.b22) {
        return Err(HnsError::NoConstantUnit);
    }
    Ok(gamma7_table(table.a11, table.b22))
}

/// Which of the two solutions of the idempotent system to use for R⊕R → Γ7.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RrSolution {
    /// `R1 = f1 / α11`, `R2 = f2 / β22`.
    First,
    /// `R1 = f2 / β22`, `R2 = f1 / α11`.
    #[default]
    Second,
}

impl TryFrom<u8> for RrSolution {
    type Error = HnsError;

    fn try_from(which: u8) -> Result<Self> {
        match which {
            1 => Ok(RrSolution::First),
            2 => Ok(RrSolution::Second),
            other => Err(HnsError::InvalidSolution(other)),
        }
    }
}

/// Transition from R⊕R to Γ7.
///
/// The returned rows give `f1, f2` in terms of `R1, R2`; its
/// [`inverse`](BasisTransform::inverse) holds the images of `R1, R2` in Γ7.
pub fn rr_to_gamma7(alpha11: f64, beta22: f64, which: RrSolution) -> Result<BasisTransform> {
    let alpha11 = nonzero(alpha11, "alpha11")?;
    let beta22 = nonzero(beta22, "beta22")?;
    Ok(match which {
        RrSolution::First => BasisTransform::diagonal(alpha11, beta22),
        RrSolution::Second => BasisTransform::new(0.0, alpha11, beta22, 0.0),
    })
}

/// Branch of `k = ±√(a22 b22 + b22²/4)`. The negative root swaps `R1` and `R2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootSign {
    #[default]
    Positive,
    Negative,
}

fn gamma5_root(a22: f64, b22: f64, sign: RootSign) -> Result<f64> {
    let p = a22 * b22;
    let k_squared = p + b22 * b22 / 4.0;
    if Tolerance::default().is_zero(k_squared, p.abs().max(b22 * b22 / 4.0)) || k_squared < 0.0 {
        return Err(HnsError::NonPositiveDiscriminant(k_squared));
    }
    let k = k_squared.sqrt();
    Ok(match sign {
        RootSign::Positive => k,
        RootSign::Negative => -k,
    })
}

/// Γ5 → double numbers: `e = E1`, `J = -(b22 / 2k) E1 + (1/k) E2`, with `J² = e`.
pub fn gamma5_to_double(a22: f64, b22: f64, sign: RootSign) -> Result<BasisTransform> {
    let k = gamma5_root(a22, b22, sign)?;
    Ok(BasisTransform::new(1.0, 0.0, -b22 / (2.0 * k), 1.0 / k))
}

/// Double numbers → R⊕R: `R1 = (e + J)/2`, `R2 = (e - J)/2`.
pub fn double_to_rr() -> BasisTransform {
    BasisTransform::new(0.5, 0.5, 0.5, -0.5)
}

/// Γ5 → R⊕R with the positive root `k`.
pub fn gamma5_to_rr(a22: f64, b22: f64) -> Result<BasisTransform> {
    gamma5_to_rr_with(a22, b22, RootSign::Positive)
}

/// Γ5 → R⊕R. Rows are
/// `R1 = (1/2 - b22/4k) E1 + (1/2k) E2` and `R2 = (1/2 + b22/4k) E1 - (1/2k) E2`;
/// conversely `E1 = R1 + R2` and `E2 = (b22/2 + k) R1 + (b22/2 - k) R2`.
pub fn gamma5_to_rr_with(a22: f64, b22: f64, sign: RootSign) -> Result<BasisTransform> {
    let to_double = gamma5_to_double(a22, b22, sign)?;
    Ok(compose_transform(&to_double, &double_to_rr()))
}

/// Γ5 → R⊕R → Γ7, using the second R⊕R → Γ7 solution.
pub fn gamma5_to_gamma7(a22: f64, b22: f64, alpha11: f64, beta22: f64) -> Result<BasisTransform> {
    Ok(gamma5_chain(a22, b22, alpha11, beta22)?.composite())
}

/// The two-link chain behind [`gamma5_to_gamma7`].
pub fn gamma5_chain(a22: f64, b22: f64, alpha11: f64, beta22: f64) -> Result<TransitionChain> {
    let first = gamma5_to_rr(a22, b22)?;
    let second = rr_to_gamma7(alpha11, beta22, RrSolution::Second)?;
    TransitionChain::new().then(first, "gamma5", "rr")?.then(second, "rr", "gamma7")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Element;
    use crate::transforms::change_basis;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn family_5_examples() {
        assert_eq!(family_5(2.0, 3.0, 1.0).unwrap(), StructuralConstants::new(2.0, 0.0, 3.0, 0.0, 2.0, 1.0));
        assert_eq!(family_5(1.0, -1.0, 0.0).unwrap(), StructuralConstants::COMPLEX);
        assert_eq!(family_5(1.0, 0.0, 0.0).unwrap(), StructuralConstants::DUAL);
        assert_eq!(family_5(0.0, 1.0, 1.0), Err(HnsError::ZeroParameter("a11")));
    }

    #[test]
    fn family_sol2_examples() {
        // E2² = E1 + E2
        assert_eq!(family_sol2(1.0, 1.0).unwrap(), StructuralConstants::new(1.0, 0.0, 1.0, 0.0, 1.0, 1.0));
        assert_eq!(family_sol2(0.0, 1.0), Err(HnsError::ZeroParameter("a22")));
        assert_eq!(family_sol2(1.0, 0.0), Err(HnsError::ZeroParameter("b22")));
    }

    #[test]
    fn gamma2_to_gamma3_examples() {
        let g3 = change_basis(&family_5(2.0, 3.0, 1.0).unwrap(), &gamma2_to_gamma3(2.0).unwrap()).unwrap();
        assert!(g3.approx_eq(&gamma3_table(2.0, 3.0, 1.0), tol()));
        assert_eq!(gamma2_to_gamma3(1.0).unwrap(), BasisTransform::IDENTITY);
        let t = gamma2_to_gamma3(-1.0).unwrap();
        assert_eq!(t, BasisTransform::diagonal(-1.0, 1.0));
        // f2² = -a22 f1 + b22 f2
        let g3 = change_basis(&family_5(-1.0, 4.0, 0.5).unwrap(), &t).unwrap();
        assert!(g3.approx_eq(&StructuralConstants::new(1.0, 0.0, -4.0, 0.0, 1.0, 0.5), tol()));
        assert!(gamma2_to_gamma3(0.0).is_err());
    }

    #[test]
    fn gamma4_to_gamma5_examples() {
        assert_eq!(gamma4_to_gamma5(1.0).unwrap(), BasisTransform::IDENTITY);
        assert_eq!(gamma4_to_gamma5(-1.0).unwrap(), BasisTransform::diagonal(-1.0, 1.0));
        // f2² = 6 f1 + 2 f2
        let g5 = change_basis(&family_sol2(3.0, 2.0).unwrap(), &gamma4_to_gamma5(2.0).unwrap()).unwrap();
        assert!(g5.approx_eq(&StructuralConstants::new(1.0, 0.0, 6.0, 0.0, 1.0, 2.0), tol()));
    }

    #[test]
    fn diagonal_reduce_examples() {
        let g7 = diagonal_reduce(&StructuralConstants::diagonal(2.0, 0.0, 0.0, 4.0)).unwrap();
        assert_eq!(g7, gamma7_table(2.0, 4.0));
        assert_eq!(
            diagonal_reduce(&StructuralConstants::diagonal(1.0, 1.0, 0.0, 1.0)),
            Err(HnsError::NoConstantUnit)
        );
        assert_eq!(
            diagonal_reduce(&StructuralConstants::diagonal(1.0, 0.0, 0.0, 1.0)).unwrap(),
            StructuralConstants::DIRECT_SUM
        );
        assert!(matches!(
            diagonal_reduce(&StructuralConstants::COMPLEX),
            Err(HnsError::NotDiagonal { .. })
        ));
    }

    #[test]
    fn rr_to_gamma7_examples() {
        // second solution: R1 = 0.25 f2, R2 = 0.5 f1
        let t = rr_to_gamma7(2.0, 4.0, RrSolution::Second).unwrap();
        let images = t.inverse().unwrap().rows();
        assert!(images[0].dist_inf(&Element::new(0.0, 0.25)) < 1e-15);
        assert!(images[1].dist_inf(&Element::new(0.5, 0.0)) < 1e-15);

        assert_eq!(rr_to_gamma7(1.0, 1.0, RrSolution::First).unwrap(), BasisTransform::IDENTITY);

        // first solution: R1 = 0.5 f1, (0.5 f1)² = 2 · 0.25 f1 = 0.5 f1
        let t = rr_to_gamma7(2.0, 4.0, RrSolution::First).unwrap();
        let images = t.inverse().unwrap().rows();
        assert!(images[0].dist_inf(&Element::new(0.5, 0.0)) < 1e-15);
        assert!(images[1].dist_inf(&Element::new(0.0, 0.25)) < 1e-15);

        assert!(rr_to_gamma7(0.0, 1.0, RrSolution::First).is_err());
        assert_eq!(RrSolution::try_from(3), Err(HnsError::InvalidSolution(3)));
        assert_eq!(RrSolution::default(), RrSolution::Second);
    }

    #[test]
    fn gamma5_to_rr_maps_onto_direct_sum() {
        let t = gamma5_to_rr(2.0, 2.0).unwrap();
        let rr = change_basis(&gamma5_table(2.0, 2.0), &t).unwrap();
        assert!(rr.approx_eq(&StructuralConstants::DIRECT_SUM, tol()));
    }

    #[test]
    fn gamma5_to_rr_hand_values() {
        // a22 = 2, b22 = 2: k² = 5; E1 = R1 + R2, E2 = (1 + √5) R1 + (1 - √5) R2
        let r5 = 5f64.sqrt();
        let back = gamma5_to_rr(2.0, 2.0).unwrap().inverse().unwrap();
        let want = BasisTransform::new(1.0, 1.0, 1.0 + r5, 1.0 - r5);
        assert!(back.approx_eq(&want, tol()), "{back}");

        // a22 = 0, b22 = 2: k = 1; E2 = 2 R1 + 0 R2
        let back = gamma5_to_rr(0.0, 2.0).unwrap().inverse().unwrap();
        assert!(back.approx_eq(&BasisTransform::new(1.0, 1.0, 2.0, 0.0), tol()), "{back}");

        // J-coefficients of the double-number basis with k = 1: J = -0.5 E1 + E2
        let d = gamma5_to_double(0.75, 1.0, RootSign::Positive).unwrap();
        assert!(d.approx_eq(&BasisTransform::new(1.0, 0.0, -0.5, 1.0), tol()));
    }

    #[test]
    fn negative_root_swaps_idempotents() {
        let pos = gamma5_to_rr_with(2.0, 2.0, RootSign::Positive).unwrap();
        let neg = gamma5_to_rr_with(2.0, 2.0, RootSign::Negative).unwrap();
        assert!(neg.approx_eq(&BasisTransform::new(pos.t21, pos.t22, pos.t11, pos.t12), tol()));
    }

    #[test]
    fn gamma5_to_rr_rejects_non_double() {
        assert!(matches!(gamma5_to_rr(-1.0, 1.0), Err(HnsError::NonPositiveDiscriminant(k)) if (k + 0.75).abs() < 1e-15));
        // dual boundary: a22 b22 = -b22²/4
        assert!(matches!(gamma5_to_rr(-0.5, 2.0), Err(HnsError::NonPositiveDiscriminant(_))));
    }

    #[test]
    fn gamma5_to_gamma7_hand_values() {
        // E1 = R1 + R2 = f2 + f1; E2 = (1 + √5) f2 + (1 - √5) f1
        let r5 = 5f64.sqrt();
        let back = gamma5_to_gamma7(2.0, 2.0, 1.0, 1.0).unwrap().inverse().unwrap();
        assert!(back.approx_eq(&BasisTransform::new(1.0, 1.0, 1.0 - r5, 1.0 + r5), tol()), "{back}");

        // k = 1: E1 = R1 + R2, E2 = 1.5 R1 - 0.5 R2
        let back = gamma5_to_rr(0.75, 1.0).unwrap().inverse().unwrap();
        assert!(back.approx_eq(&BasisTransform::new(1.0, 1.0, 1.5, -0.5), tol()), "{back}");
    }

    #[test]
    fn gamma5_to_gamma7_reaches_gamma7() {
        let t = gamma5_to_gamma7(2.0, 2.0, 3.0, -0.5).unwrap();
        assert!(t.det().abs() > 1e-9);
        let g7 = change_basis(&gamma5_table(2.0, 2.0), &t).unwrap();
        assert!(g7.approx_eq(&gamma7_table(3.0, -0.5), tol()), "{g7:?}");
    }
}
