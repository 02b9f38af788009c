//! Adaptive Simpson quadrature for bounded piecewise-smooth integrands.
//!
//! The conductance integrands are smooth between a handful of known
//! breakpoints (profile edges, kernel endpoints), so the driver accepts an
//! explicit breakpoint list and runs the adaptive rule on each smooth piece.

use crate::{Error, Result};

const MAX_DEPTH: u32 = 48;

/// Integrate `f` over `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if !(tol > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "adaptive_simpson bounds/tolerance: a={a}, b={b}, tol={tol}"
        )));
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    refine(f, a, m, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

/// Integrate `f` over `[a, b]`, splitting first at the given interior
/// breakpoints (values outside `(a, b)` are ignored, duplicates collapsed).
pub fn adaptive_simpson_split<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    tol: f64,
) -> Result<f64> {
    let mut edges: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|x| *x > a && *x < b)
        .collect();
    edges.push(a);
    edges.push(b);
    edges.sort_by(|x, y| x.partial_cmp(y).unwrap());
    edges.dedup();
    let pieces = edges.len() - 1;
    let piece_tol = tol / pieces as f64;
    let mut total = 0.0;
    for w in edges.windows(2) {
        total += adaptive_simpson(f, w[0], w[1], piece_tol)?;
    }
    Ok(total)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    m: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        // Richardson extrapolation term.
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::QuadratureNonConvergence {
            achieved: delta.abs() / 15.0,
            requested: tol,
        });
    }
    let l = refine(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?;
    let r = refine(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?;
    Ok(l + r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        // Simpson is exact for cubics.
        let f = |x: f64| 3.0 * x * x * x - x + 2.0;
        let got = adaptive_simpson(&f, -1.0, 2.0, 1e-12).unwrap();
        let exact = |x: f64| 0.75 * x.powi(4) - 0.5 * x * x + 2.0 * x;
        assert!((got - (exact(2.0) - exact(-1.0))).abs() < 1e-10);
    }

    #[test]
    fn quarter_circle_area() {
        let r = 0.3_f64;
        let f = move |x: f64| (r * r - x * x).max(0.0).sqrt();
        let got = adaptive_simpson(&f, 0.0, r, 1e-10).unwrap();
        assert!((got - std::f64::consts::PI * r * r / 4.0).abs() < 1e-8);
    }

    #[test]
    fn breakpoint_split_handles_kinks() {
        let f = |x: f64| if x < 0.25 { 1.0 } else { x };
        let got = adaptive_simpson_split(&f, 0.0, 1.0, &[0.25], 1e-10).unwrap();
        let exact = 0.25 + (1.0 - 0.25 * 0.25) / 2.0;
        assert!((got - exact).abs() < 1e-9);
    }

    #[test]
    fn empty_interval_is_zero() {
        assert_eq!(adaptive_simpson(&|x: f64| x, 0.4, 0.4, 1e-9).unwrap(), 0.0);
    }

    #[test]
    fn bad_tolerance_is_rejected() {
        assert!(matches!(
            adaptive_simpson(&|x: f64| x, 0.0, 1.0, 0.0),
            Err(Error::InvalidArgument(_))
        ));
    }
}
