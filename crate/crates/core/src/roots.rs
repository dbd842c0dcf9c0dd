//! Closed-form real roots of low-degree polynomials and of binary forms.

use std::f64::consts::PI;

use crate::element::Element;

const DEGREE_DROP: f64 = 1e-14;
const DOUBLE_ROOT: f64 = 1e-12;

/// Real roots of `c[0] + c[1] t + c[2] t² + c[3] t³` (degree at most 3).
///
/// Leading coefficients negligible against the largest one are dropped;
/// the roots they would contribute lie far outside any bounded window.
pub(crate) fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    assert!(coeffs.len() <= 4, "degree above 3");
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if scale == 0.0 {
        return Vec::new();
    }
    let mut deg = coeffs.len().saturating_sub(1);
    while deg > 0 && coeffs[deg].abs() <= DEGREE_DROP * scale {
        deg -= 1;
    }
    let c = &coeffs[..=deg];
    let mut roots = match deg {
        0 => Vec::new(),
        1 => vec![-c[0] / c[1]],
        2 => quadratic(c[2], c[1], c[0]),
        _ => cubic(c[2] / c[3], c[1] / c[3], c[0] / c[3]),
    };
    if deg == 3 {
        for r in roots.iter_mut() {
            *r = polish(c, *r);
        }
    }
    roots
}

/// Roots of `a t² + b t + c`, `a != 0`. Near-zero discriminants collapse
/// to a double root.
fn quadratic(a: f64, b: f64, c: f64) -> Vec<f64> {
    let mut disc = b * b - 4.0 * a * c;
    if disc.abs() <= DOUBLE_ROOT * (b * b + (4.0 * a * c).abs()) {
        disc = 0.0;
    }
    if disc < 0.0 {
        return Vec::new();
    }
    if disc == 0.0 {
        return vec![-b / (2.0 * a)];
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    let mut roots = vec![q / a];
    if q != 0.0 {
        roots.push(c / q);
    }
    roots
}

/// Roots of the monic cubic `t³ + a t² + b t + c`.
fn cubic(a: f64, b: f64, c: f64) -> Vec<f64> {
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let half_q = q / 2.0;
    let third_p = p / 3.0;
    let disc = half_q * half_q + third_p * third_p * third_p;
    if disc > 0.0 {
        let s = disc.sqrt();
        let w = (-half_q - half_q.signum() * s).cbrt();
        let y = if w == 0.0 { 0.0 } else { w - third_p / w };
        vec![y - shift]
    } else if p == 0.0 {
        vec![-shift]
    } else {
        let r = 2.0 * (-third_p).sqrt();
        let arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let phi = arg.acos();
        (0..3)
            .map(|k| r * (phi / 3.0 - 2.0 * PI * k as f64 / 3.0).cos() - shift)
            .collect()
    }
}

/// A couple of Newton steps on the original coefficients; skipped where the
/// derivative is too flat to help.
fn polish(c: &[f64], mut t: f64) -> f64 {
    for _ in 0..2 {
        let (mut f, mut df) = (0.0, 0.0);
        for &ck in c.iter().rev() {
            df = df * t + f;
            f = f * t + ck;
        }
        if df.abs() <= f64::EPSILON * f.abs().max(1.0) {
            break;
        }
        let step = f / df;
        if !step.is_finite() {
            break;
        }
        t -= step;
    }
    t
}

/// Unit directions `(x, y)` on which the binary form
/// `f[0] xⁿ + f[1] xⁿ⁻¹ y + … + f[n] yⁿ` vanishes, one per line through the
/// origin, with `n ≤ 3`.
///
/// Returns `None` when every coefficient is within `zero` of zero, i.e.
/// every direction is a root.
pub(crate) fn form_directions(f: &[f64], zero: f64) -> Option<Vec<Element>> {
    if f.iter().all(|c| c.abs() <= zero) {
        return None;
    }
    let mut dirs: Vec<Element> = Vec::new();
    // chart x = 1, y = t: covers |slope| <= 1
    for t in real_roots(f) {
        if t.abs() <= 1.0 + 1e-9 {
            push_direction(&mut dirs, Element::new(1.0, t));
        }
    }
    // chart y = 1, x = s
    let reversed: Vec<f64> = f.iter().rev().copied().collect();
    for s in real_roots(&reversed) {
        if s.abs() <= 1.0 + 1e-9 {
            push_direction(&mut dirs, Element::new(s, 1.0));
        }
    }
    Some(dirs)
}

fn push_direction(dirs: &mut Vec<Element>, d: Element) {
    let mut d = d * (1.0 / d.norm());
    // canonical sign: first nonzero coordinate positive
    if d.m1 < 0.0 || (d.m1 == 0.0 && d.m2 < 0.0) {
        d = -d;
    }
    let duplicate = dirs.iter().any(|e| (e.m1 * d.m2 - e.m2 * d.m1).abs() < 1e-9);
    if !duplicate {
        dirs.push(d);
    }
}
