//! Idempotent and nilpotent searches, used to cross-check the classifier.
//!
//! Both are closed-form and never consult the unit solver: they work only
//! with the quadratic map `M ↦ M·M`.
//!
//! A nonzero idempotent lies on a line through the origin whose direction
//! `d` satisfies `d·d = λ d` with `λ ≠ 0`; the idempotent is then `d / λ`.
//! Those directions are the real roots of the binary cubic
//! `d1 (d·d)₂ - d2 (d·d)₁`. Nilpotent directions are the common roots of
//! the two quadratic coordinate forms of `d·d`.

use crate::element::Element;
use crate::roots::form_directions;
use crate::table::{multiply, StructuralConstants};

const EPS: f64 = 1e-9;
/// Minimum `|λ|` (relative to the table magnitude) for a direction to carry
/// an idempotent. A dual algebra's nilpotent direction is a double root of
/// the cubic; rounding splits it into roots whose `λ` is `O(√ε)`.
const EIGEN_SEPARATION: f64 = 3.2e-5;
const ORACLE_TOL: f64 = 1e-7;

/// Nonzero, non-unit solutions of `M·M = M`.
///
/// When every direction is an eigen-direction of squaring the solution set
/// is a curve rather than a finite set, and the list is empty. No unital
/// table falls in that case.
pub fn find_idempotents(table: &StructuralConstants) -> Vec<Element> {
    let t = table;
    let magnitude = t.magnitude();
    if magnitude == 0.0 {
        return Vec::new();
    }
    let cubic = [t.b11, 2.0 * t.b12 - t.a11, t.b22 - 2.0 * t.a12, -t.a22];
    let Some(dirs) = form_directions(&cubic, EPS * magnitude) else {
        return Vec::new();
    };
    let mut found = Vec::new();
    for d in dirs {
        let lambda = multiply(t, d, d).dot(&d);
        if lambda.abs() <= EIGEN_SEPARATION * magnitude {
            continue;
        }
        let m = d * (1.0 / lambda);
        let scale = m.norm_inf().max(1.0);
        let is_idempotent = multiply(t, m, m).dist_inf(&m) <= ORACLE_TOL * scale;
        if is_idempotent && !acts_as_unit(t, m) {
            found.push(m);
        }
    }
    found
}

fn acts_as_unit(t: &StructuralConstants, m: Element) -> bool {
    let threshold = ORACLE_TOL * (m.norm_inf() * t.magnitude()).max(1.0);
    [Element::E1, Element::E2]
        .iter()
        .all(|e| multiply(t, m, *e).dist_inf(e) <= threshold)
}

/// Unit directions `M` with `M·M = 0`, one per line.
pub fn find_nilpotents(table: &StructuralConstants) -> Vec<Element> {
    let t = table;
    let magnitude = t.magnitude();
    let zero = EPS * magnitude;
    let first = form_directions(&[t.a11, 2.0 * t.a12, t.a22], zero);
    let second = form_directions(&[t.b11, 2.0 * t.b12, t.b22], zero);
    let candidates: Vec<Element> = match (first, second) {
        (None, None) => return vec![Element::E1, Element::E2],
        (a, b) => a.into_iter().chain(b).flatten().collect(),
    };
    let mut found: Vec<Element> = Vec::new();
    for d in candidates {
        let squared = multiply(t, d, d);
        let duplicate = found.iter().any(|e| (e.m1 * d.m2 - e.m2 * d.m1).abs() < 1e-9);
        if squared.norm_inf() <= zero && !duplicate {
            found.push(d);
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains(list: &[Element], want: Element) -> bool {
        list.iter().any(|m| m.dist_inf(&want) < 1e-12)
    }

    fn parallel(list: &[Element], want: Element) -> bool {
        list.iter().any(|m| (m.m1 * want.m2 - m.m2 * want.m1).abs() < 1e-12)
    }

    #[test]
    fn double_numbers_have_two_idempotents() {
        // m1² + m2² = m1, 2 m1 m2 = m2  =>  m1 = 1/2, m2 = ±1/2
        let found = find_idempotents(&StructuralConstants::DOUBLE);
        assert_eq!(found.len(), 2);
        assert!(contains(&found, Element::new(0.5, 0.5)));
        assert!(contains(&found, Element::new(0.5, -0.5)));
        assert!(find_nilpotents(&StructuralConstants::DOUBLE).is_empty());
    }

    #[test]
    fn complex_numbers_have_neither() {
        assert!(find_idempotents(&StructuralConstants::COMPLEX).is_empty());
        assert!(find_nilpotents(&StructuralConstants::COMPLEX).is_empty());
    }

    #[test]
    fn dual_numbers() {
        assert!(find_idempotents(&StructuralConstants::DUAL).is_empty());
        let nil = find_nilpotents(&StructuralConstants::DUAL);
        assert_eq!(nil.len(), 1);
        assert!(parallel(&nil, Element::E2));
    }

    #[test]
    fn gamma3_dual_instance() {
        // (f2 - f1)² = f2² - 2 f2 + f1 = (-f1 + 2 f2) - 2 f2 + f1 = 0
        let t = StructuralConstants::new(1.0, 0.0, -1.0, 0.0, 1.0, 2.0);
        let nil = find_nilpotents(&t);
        assert_eq!(nil.len(), 1);
        assert!(parallel(&nil, Element::new(-1.0, 1.0)));
        assert!(find_idempotents(&t).is_empty());
    }

    #[test]
    fn direct_sum_idempotents_are_the_axes() {
        let found = find_idempotents(&StructuralConstants::DIRECT_SUM);
        assert_eq!(found.len(), 2);
        assert!(contains(&found, Element::E1));
        assert!(contains(&found, Element::E2));
    }

    #[test]
    fn zero_algebra_is_all_nilpotent() {
        assert_eq!(find_nilpotents(&StructuralConstants::ZERO).len(), 2);
        assert!(find_idempotents(&StructuralConstants::ZERO).is_empty());
    }
}
