//! Bloch-sphere search utilities: a Fibonacci lattice for coarse coverage and
//! a Nelder–Mead simplex over spherical coordinates for local refinement.
//!
//! Derivative-free on purpose: the objectives maximized here (sums of
//! absolute dot products) have kinks, and the lattice-then-refine combination
//! is robust at the poles.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

/// Dot product of two 3-vectors.
pub fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// Normalizes to unit length; returns `None` for the zero vector.
pub fn normalize(a: [f64; 3]) -> Option<[f64; 3]> {
    let n = norm(a);
    if n > 0.0 && n.is_finite() {
        Some([a[0] / n, a[1] / n, a[2] / n])
    } else {
        None
    }
}

/// Evenly distributed points on the unit sphere by the golden-angle spiral.
pub fn fibonacci_lattice(count: usize) -> Vec<[f64; 3]> {
    let golden_angle = core::f64::consts::PI * (3.0 - 5.0f64.sqrt());
    (0..count)
        .map(|k| {
            let z = 1.0 - 2.0 * (k as f64 + 0.5) / count as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden_angle * k as f64;
            [r * phi.cos(), r * phi.sin(), z]
        })
        .collect()
}

fn from_spherical(theta: f64, phi: f64) -> [f64; 3] {
    [
        theta.sin() * phi.cos(),
        theta.sin() * phi.sin(),
        theta.cos(),
    ]
}

fn to_spherical(v: [f64; 3]) -> (f64, f64) {
    let theta = v[2].clamp(-1.0, 1.0).acos();
    let phi = v[1].atan2(v[0]);
    (theta, phi)
}

/// Maximizes `f` over the unit sphere starting from `start`:
/// Nelder–Mead on (θ, φ) with three restarts of shrinking radius around the
/// incumbent, which shakes off pole degeneracies and simplex collapse.
pub fn refine_max<F: Fn([f64; 3]) -> f64>(f: &F, start: [f64; 3]) -> ([f64; 3], f64) {
    let mut best_point = start;
    let mut best_value = f(start);
    let mut radius = 0.3;
    for _ in 0..3 {
        let (theta, phi) = to_spherical(best_point);
        let (p, v) = nelder_mead_2d(
            &|x: [f64; 2]| f(from_spherical(x[0], x[1])),
            [theta, phi],
            radius,
        );
        if v > best_value {
            best_value = v;
            best_point = from_spherical(p[0], p[1]);
        }
        radius *= 0.1;
    }
    (best_point, best_value)
}

/// Plain Nelder–Mead maximization in two dimensions.
fn nelder_mead_2d<F: Fn([f64; 2]) -> f64>(f: &F, start: [f64; 2], step: f64) -> ([f64; 2], f64) {
    const ALPHA: f64 = 1.0; // reflection
    const GAMMA: f64 = 2.0; // expansion
    const RHO: f64 = 0.5; // contraction
    const SIGMA: f64 = 0.5; // shrink
    const MAX_ITER: usize = 200;
    const TOL: f64 = 1e-12;

    let mut simplex = [
        start,
        [start[0] + step, start[1]],
        [start[0], start[1] + step],
    ];
    let mut values = simplex.map(f);

    for _ in 0..MAX_ITER {
        // Sort descending by value (index 0 = best).
        let mut order = [0usize, 1, 2];
        order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
        simplex = [simplex[order[0]], simplex[order[1]], simplex[order[2]]];
        values = [values[order[0]], values[order[1]], values[order[2]]];

        if values[0] - values[2] < TOL {
            break;
        }

        let centroid = [
            (simplex[0][0] + simplex[1][0]) / 2.0,
            (simplex[0][1] + simplex[1][1]) / 2.0,
        ];
        let worst = simplex[2];
        let xr = [
            centroid[0] + ALPHA * (centroid[0] - worst[0]),
            centroid[1] + ALPHA * (centroid[1] - worst[1]),
        ];
        let fr = f(xr);

        if fr > values[0] {
            // Try expanding past the reflection.
            let xe = [
                centroid[0] + GAMMA * (xr[0] - centroid[0]),
                centroid[1] + GAMMA * (xr[1] - centroid[1]),
            ];
            let fe = f(xe);
            if fe > fr {
                simplex[2] = xe;
                values[2] = fe;
            } else {
                simplex[2] = xr;
                values[2] = fr;
            }
        } else if fr > values[1] {
            simplex[2] = xr;
            values[2] = fr;
        } else {
            let xc = [
                centroid[0] + RHO * (worst[0] - centroid[0]),
                centroid[1] + RHO * (worst[1] - centroid[1]),
            ];
            let fc = f(xc);
            if fc > values[2] {
                simplex[2] = xc;
                values[2] = fc;
            } else {
                for k in 1..3 {
                    simplex[k] = [
                        simplex[0][0] + SIGMA * (simplex[k][0] - simplex[0][0]),
                        simplex[0][1] + SIGMA * (simplex[k][1] - simplex[0][1]),
                    ];
                    values[k] = f(simplex[k]);
                }
            }
        }
    }

    let mut best = 0;
    for k in 1..3 {
        if values[k] > values[best] {
            best = k;
        }
    }
    (simplex[best], values[best])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_points_are_unit() {
        for p in fibonacci_lattice(500) {
            assert!((norm(p) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn lattice_covers_both_hemispheres() {
        let pts = fibonacci_lattice(1000);
        let north = pts.iter().filter(|p| p[2] > 0.0).count();
        assert!((north as i64 - 500).abs() < 10);
    }

    #[test]
    fn refine_finds_a_linear_maximum() {
        // max of r·d over the sphere is ‖d‖ at r = d/‖d‖.
        let d = [0.3, -0.4, 1.2];
        let f = |r: [f64; 3]| dot(r, d);
        let coarse = fibonacci_lattice(500)
            .into_iter()
            .max_by(|a, b| f(*a).total_cmp(&f(*b)))
            .unwrap();
        let (argmax, value) = refine_max(&f, coarse);
        assert!((value - norm(d)).abs() < 1e-9, "value {value}");
        let expected = normalize(d).unwrap();
        for k in 0..3 {
            assert!((argmax[k] - expected[k]).abs() < 1e-5);
        }
    }

    #[test]
    fn refine_handles_pole_start() {
        // Objective peaked at the north pole, started exactly there.
        let f = |r: [f64; 3]| r[2];
        let (_, value) = refine_max(&f, [0.0, 0.0, 1.0]);
        assert!((value - 1.0).abs() < 1e-12);
    }
}
