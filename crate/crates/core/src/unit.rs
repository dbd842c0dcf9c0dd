//! Unit-element solver.
//!
//! For a probe `M = (m1, m2)` the equation `X·M = M` is a 2×2 linear system
//! in the unknown unit `X = (x1, x2)`. Its Cramer solution is a ratio of two
//! binary quadratic forms in `(m1, m2)`:
//!
//! ```text
//! x1 = (b12 m1² + (b22 - a12) m1 m2 - a22 m2²) / Δ(m)
//! x2 = (-b11 m1² + (a11 - b12) m1 m2 + a12 m2²) / Δ(m)
//! Δ(m) = (a11 b12 - b11 a12) m1² + (a11 b22 - b11 a22) m1 m2 + (a12 b22 - b12 a22) m2²
//! ```
//!
//! A probe-independent unit exists exactly when both numerator forms are
//! proportional to a nonzero `Δ`.

use crate::element::Element;
use crate::error::{HnsError, Result};
use crate::table::{multiply, StructuralConstants};
use crate::tolerance::Tolerance;

/// Probes tried, in order, when a single nonsingular probe is needed.
pub const DEFAULT_PROBES: [Element; 5] = [
    Element::new(1.0, 0.0),
    Element::new(0.0, 1.0),
    Element::new(1.0, 1.0),
    Element::new(1.0, -1.0),
    Element::new(2.0, 3.0),
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UnitSolution {
    /// `X` with `X·M = M` for every `M`.
    Constant(Element),
    /// The solution of `X·M = M` changes with `M`.
    ProbeDependent,
    /// `Δ` vanishes identically; `X·M = M` has no unique solution for any `M`.
    Degenerate,
}

impl UnitSolution {
    pub fn unit(&self) -> Option<Element> {
        match self {
            UnitSolution::Constant(x) => Some(*x),
            _ => None,
        }
    }
}

/// Coefficients `[m1², m1 m2, m2²]` of a binary quadratic form.
type Form = [f64; 3];

fn eval(form: &Form, m: Element) -> f64 {
    form[0] * m.m1 * m.m1 + form[1] * m.m1 * m.m2 + form[2] * m.m2 * m.m2
}

pub(crate) fn denominator(t: &StructuralConstants) -> Form {
    [
        t.a11 * t.b12 - t.b11 * t.a12,
        t.a11 * t.b22 - t.b11 * t.a22,
        t.a12 * t.b22 - t.b12 * t.a22,
    ]
}

pub(crate) fn numerators(t: &StructuralConstants) -> (Form, Form) {
    (
        [t.b12, t.b22 - t.a12, -t.a22],
        [-t.b11, t.a11 - t.b12, t.a12],
    )
}

fn is_degenerate(t: &StructuralConstants, tol: Tolerance) -> bool {
    let scale = t.magnitude().powi(2);
    denominator(t).iter().all(|c| c.abs() <= tol.rel * scale)
}

fn is_singular_probe(t: &StructuralConstants, probe: Element, tol: Tolerance) -> bool {
    let m2 = probe.dot(&probe);
    m2 == 0.0 || eval(&denominator(t), probe).abs() <= tol.rel * t.magnitude().powi(2) * m2
}

/// `u × v == 0` within a threshold.
fn parallel(u: &Form, v: &Form, threshold: f64) -> bool {
    let cross = [
        u[0] * v[1] - u[1] * v[0],
        u[0] * v[2] - u[2] * v[0],
        u[1] * v[2] - u[2] * v[1],
    ];
    cross.iter().all(|c| c.abs() <= threshold)
}

/// Solution of `X·probe = probe` for a single probe.
pub fn unit_candidate(table: &StructuralConstants, probe: Element) -> Result<Element> {
    unit_candidate_with(table, probe, Tolerance::default())
}

pub fn unit_candidate_with(table: &StructuralConstants, probe: Element, tol: Tolerance) -> Result<Element> {
    if is_singular_probe(table, probe, tol) {
        return Err(HnsError::SingularProbe { m1: probe.m1, m2: probe.m2 });
    }
    let t = table;
    let (m1, m2) = (probe.m1, probe.m2);
    // columns: X·M = x1 (E1·M) + x2 (E2·M)
    let c1 = Element::new(m1 * t.a11 + m2 * t.a12, m1 * t.b11 + m2 * t.b12);
    let c2 = Element::new(m1 * t.a12 + m2 * t.a22, m1 * t.b12 + m2 * t.b22);
    let det = c1.m1 * c2.m2 - c2.m1 * c1.m2;
    Ok(Element::new(
        (m1 * c2.m2 - c2.m1 * m2) / det,
        (c1.m1 * m2 - m1 * c1.m2) / det,
    ))
}

/// Whether the numerator forms are proportional to a non-vanishing
/// denominator form, tested in cross-multiplied form.
pub fn has_constant_unit(table: &StructuralConstants) -> bool {
    has_constant_unit_with(table, Tolerance::default())
}

pub fn has_constant_unit_with(table: &StructuralConstants, tol: Tolerance) -> bool {
    if is_degenerate(table, tol) {
        return false;
    }
    let den = denominator(table);
    let (n1, n2) = numerators(table);
    // every cross term is cubic in the constants
    let threshold = tol.rel * table.magnitude().powi(3);
    parallel(&n1, &den, threshold) && parallel(&n2, &den, threshold)
}

/// Unit element of the system, if one exists independently of the probe.
pub fn unit_element(table: &StructuralConstants) -> UnitSolution {
    unit_element_with(table, Tolerance::default())
}

pub fn unit_element_with(table: &StructuralConstants, tol: Tolerance) -> UnitSolution {
    if is_degenerate(table, tol) {
        return UnitSolution::Degenerate;
    }
    if !has_constant_unit_with(table, tol) {
        return UnitSolution::ProbeDependent;
    }
    let den = denominator(table);
    // best-conditioned default probe
    let probe = DEFAULT_PROBES
        .iter()
        .copied()
        .max_by(|p, q| {
            let wp = eval(&den, *p).abs() / p.dot(p);
            let wq = eval(&den, *q).abs() / q.dot(q);
            wp.total_cmp(&wq)
        })
        .expect("probe list is nonempty");
    let x = match unit_candidate_with(table, probe, tol) {
        Ok(x) => x,
        Err(_) => return UnitSolution::Degenerate,
    };
    let scale = x.norm_inf() * table.magnitude();
    let acts_as_unit = [Element::E1, Element::E2]
        .iter()
        .all(|e| tol.is_zero(multiply(table, x, *e).dist_inf(e), scale));
    if acts_as_unit {
        UnitSolution::Constant(x)
    } else {
        UnitSolution::ProbeDependent
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Element, b: Element) -> bool {
        a.dist_inf(&b) < 1e-12
    }

    #[test]
    fn complex_candidate_is_one() {
        let x = unit_candidate(&StructuralConstants::COMPLEX, Element::new(1.0, 1.0)).unwrap();
        assert!(close(x, Element::E1));
    }

    #[test]
    fn family_five_candidate() {
        let t = StructuralConstants::new(2.0, 0.0, 3.0, 0.0, 2.0, 1.0);
        let x = unit_candidate(&t, Element::E1).unwrap();
        assert!(close(x, Element::new(0.5, 0.0)));
    }

    #[test]
    fn candidates_depend_on_probe_off_family() {
        // complex table with a12 = 1
        let t = StructuralConstants::new(1.0, 1.0, -1.0, 0.0, 1.0, 0.0);
        // probe E1: [[1,1],[0,1]] x = (1,0) -> (1,0)
        // probe E2: [[1,-1],[1,0]] x = (0,1) -> (1,1)
        let x = unit_candidate(&t, Element::E1).unwrap();
        let y = unit_candidate(&t, Element::E2).unwrap();
        assert!(close(x, Element::new(1.0, 0.0)));
        assert!(close(y, Element::new(1.0, 1.0)));
    }

    #[test]
    fn singular_probe_reported() {
        // Γ7: Δ(m) = α11 β22 m1 m2 vanishes on the axes
        let t = StructuralConstants::diagonal(2.0, 0.0, 0.0, 4.0);
        assert!(matches!(unit_candidate(&t, Element::E1), Err(HnsError::SingularProbe { .. })));
        assert!(matches!(unit_candidate(&t, Element::ZERO), Err(HnsError::SingularProbe { .. })));
    }

    #[test]
    fn constant_unit_predicate() {
        assert!(has_constant_unit(&StructuralConstants::new(2.0, 0.0, 3.0, 0.0, 2.0, 1.0)));
        assert!(has_constant_unit(&StructuralConstants::COMPLEX));
        assert!(!has_constant_unit(&StructuralConstants::new(1.0, 1.0, -1.0, 0.0, 1.0, 0.0)));
        assert!(!has_constant_unit(&StructuralConstants::ZERO));
    }

    #[test]
    fn unit_solutions() {
        let t = StructuralConstants::new(2.0, 0.0, 3.0, 0.0, 2.0, 1.0);
        assert_eq!(unit_element(&t).unit().map(|x| close(x, Element::new(0.5, 0.0))), Some(true));

        let diag = StructuralConstants::diagonal(2.0, 0.0, 0.0, 4.0);
        assert_eq!(unit_element(&diag).unit().map(|x| close(x, Element::new(0.5, 0.25))), Some(true));

        assert_eq!(unit_element(&StructuralConstants::ZERO), UnitSolution::Degenerate);
        assert_eq!(
            unit_element(&StructuralConstants::diagonal(1.0, 1.0, 0.0, 1.0)),
            UnitSolution::ProbeDependent
        );
    }

    #[test]
    fn scale_invariant_verdict() {
        // the same algebra scaled by 1e-4 keeps its unit (scaled by 1e4)
        let t = StructuralConstants::new(2e-4, 0.0, 3e-4, 0.0, 2e-4, 1e-4);
        let x = unit_element(&t).unit().expect("unital");
        assert!((x.m1 - 5000.0).abs() < 1e-6 && x.m2.abs() < 1e-6);
    }
}
