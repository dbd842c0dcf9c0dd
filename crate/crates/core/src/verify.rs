//! Isomorphism checking and brute-force unit search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::Element;
use crate::error::Result;
use crate::table::{multiply, StructuralConstants};
use crate::tolerance::Tolerance;
use crate::transforms::BasisTransform;
use crate::unit::unit_element;

pub const DEFAULT_SAMPLES: usize = 64;
pub const DEFAULT_SEED: u64 = 0x5eed_2d15;
const SAMPLE_RANGE: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsoReport {
    pub passed: bool,
    pub max_residual: f64,
    /// Residuals for `E1·E1`, `E1·E2`, `E2·E2` and the unit image.
    pub basis_residuals: [f64; 4],
    pub samples_checked: usize,
    pub tolerance: f64,
}

/// Largest coordinate difference, each scaled by `max(1, |a|, |b|)`.
fn residual(a: Element, b: Element) -> f64 {
    let r = |x: f64, y: f64| (x - y).abs() / 1f64.max(x.abs()).max(y.abs());
    r(a.m1, b.m1).max(r(a.m2, b.m2))
}

fn unit_residual(table: &StructuralConstants, candidate: Element) -> f64 {
    [Element::E1, Element::E2]
        .iter()
        .map(|e| residual(multiply(table, candidate, *e), *e))
        .fold(0.0, f64::max)
}

/// Check that `transform` is an algebra isomorphism from `source` onto
/// `target`.
///
/// The transform is read as a change of basis: its rows are the target
/// basis vectors written in the source basis, so an element with source
/// coordinates `x` has target coordinates `T⁻ᵀ x`. The homomorphism law is
/// checked on the three basis pairs and on `samples` random pairs.
pub fn verify_isomorphism(
    source: &StructuralConstants,
    target: &StructuralConstants,
    transform: &BasisTransform,
    samples: usize,
) -> Result<IsoReport> {
    verify_isomorphism_seeded(source, target, transform, samples, DEFAULT_SEED)
}

pub fn verify_isomorphism_seeded(
    source: &StructuralConstants,
    target: &StructuralConstants,
    transform: &BasisTransform,
    samples: usize,
    seed: u64,
) -> Result<IsoReport> {
    let transform = transform.check()?;
    let map = |x: Element| transform.to_new_coords(x);
    let law = |u: Element, v: Element| residual(map(multiply(source, u, v)), multiply(target, map(u), map(v)));

    let (e1, e2) = (Element::E1, Element::E2);
    // a bijective homomorphism carries a unit of either side to a unit of the other
    let unit = match (unit_element(source).unit(), unit_element(target).unit()) {
        (Some(x), _) => unit_residual(target, map(x)),
        (None, Some(y)) => unit_residual(source, transform.to_old_coords(y)),
        (None, None) => 0.0,
    };
    let basis_residuals = [law(e1, e1), law(e1, e2), law(e2, e2), unit];

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || Element::new(rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE), rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE));
    let sampled = (0..samples).map(|_| law(draw(), draw())).fold(0.0, f64::max);

    let max_residual = basis_residuals.iter().copied().fold(sampled, f64::max);
    let tolerance = Tolerance::DEFAULT_EPS;
    Ok(IsoReport {
        passed: max_residual <= tolerance,
        max_residual,
        basis_residuals,
        samples_checked: samples,
        tolerance,
    })
}

/// Inclusive grid `min, min + step, …, ≤ max` used for both coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl GridSpec {
    pub const fn new(min: f64, max: f64, step: f64) -> Self {
        Self { min, max, step }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + Clone {
        let n = if self.step > 0.0 && self.max >= self.min {
            ((self.max - self.min) / self.step + 1e-9).floor() as usize + 1
        } else {
            0
        };
        let (min, step) = (self.min, self.step);
        (0..n).map(move |i| min + i as f64 * step)
    }
}

/// Every grid point that acts as a unit on both basis elements.
pub fn brute_force_units(table: &StructuralConstants, grid: GridSpec) -> Vec<Element> {
    let tol = Tolerance::default();
    let ys = grid.points();
    grid.points()
        .flat_map(|x1| ys.clone().map(move |x2| Element::new(x1, x2)))
        .filter(|x| {
            [Element::E1, Element::E2]
                .iter()
                .all(|e| tol.is_zero(multiply(table, *x, *e).dist_inf(e), 1.0))
        })
        .collect()
}
