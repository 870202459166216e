//! Gauss quadrature rules and an adaptive panel integrator.
//!
//! Nodes and weights come from the Golub-Welsch eigenvalue method applied to
//! the Jacobi matrix of the orthogonal-polynomial recurrence.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

fn golub_welsch(off_diagonal: &[f64], moment0: f64) -> (Vec<f64>, Vec<f64>) {
    let n = off_diagonal.len() + 1;
    let mut jacobi = DMatrix::<f64>::zeros(n, n);
    for (i, &beta) in off_diagonal.iter().enumerate() {
        jacobi[(i, i + 1)] = beta;
        jacobi[(i + 1, i)] = beta;
    }
    let eig = SymmetricEigen::new(jacobi);
    let mut nodes: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    nodes.sort_by(|a, b| a.total_cmp(b));
    polish(off_diagonal, moment0, nodes)
}

/// Orthonormal polynomials p_0..p_n and derivatives at `x` for the symmetric
/// recurrence beta_{k+1} p_{k+1} = x p_k - beta_k p_{k-1}, p_0 = moment0^{-1/2}.
fn orthonormal_eval(off_diagonal: &[f64], moment0: f64, x: f64) -> (Vec<f64>, Vec<f64>) {
    let n = off_diagonal.len() + 1;
    let mut p = Vec::with_capacity(n + 1);
    let mut dp = Vec::with_capacity(n + 1);
    p.push(moment0.sqrt().recip());
    dp.push(0.0);
    for k in 0..n {
        let below = if k == 0 { 0.0 } else { off_diagonal[k - 1] * p[k - 1] };
        let dbelow = if k == 0 { 0.0 } else { off_diagonal[k - 1] * dp[k - 1] };
        p.push((x * p[k] - below) / off_diagonal.get(k).copied().unwrap_or(1.0));
        dp.push((p[k] + x * dp[k] - dbelow) / off_diagonal.get(k).copied().unwrap_or(1.0));
    }
    (p, dp)
}

/// Newton-polish the eigenvalue nodes on the degree-n orthonormal polynomial
/// and take Christoffel weights 1 / sum p_k(x)^2; the eigenvector route loses
/// several digits that matter for high-order rules.
fn polish(off_diagonal: &[f64], moment0: f64, nodes: Vec<f64>) -> (Vec<f64>, Vec<f64>) {
    let n = off_diagonal.len() + 1;
    let mut out_nodes = Vec::with_capacity(n);
    let mut out_weights = Vec::with_capacity(n);
    for mut x in nodes {
        for _ in 0..3 {
            let (p, dp) = orthonormal_eval(off_diagonal, moment0, x);
            if dp[n] != 0.0 {
                x -= p[n] / dp[n];
            }
        }
        let (p, _) = orthonormal_eval(off_diagonal, moment0, x);
        let christoffel: f64 = p[..n].iter().map(|&v| v * v).sum();
        out_nodes.push(x);
        out_weights.push(christoffel.recip());
    }
    (out_nodes, out_weights)
}

/// Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::Domain("quadrature order must be positive".into()));
    }
    let beta: Vec<f64> = (1..n)
        .map(|i| {
            let i = i as f64;
            i / (4.0 * i * i - 1.0).sqrt()
        })
        .collect();
    Ok(golub_welsch(&beta, 2.0))
}

/// Gauss-Legendre rule mapped to [a, b].
pub fn gauss_legendre_on(a: f64, b: f64, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let (x, w) = gauss_legendre(n)?;
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    Ok((
        x.iter().map(|&t| mid + half * t).collect(),
        w.iter().map(|&wi| wi * half).collect(),
    ))
}

/// Gauss-Hermite rule: integrates exp(-x^2) f(x) over the whole line.
pub fn gauss_hermite(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::Domain("quadrature order must be positive".into()));
    }
    let beta: Vec<f64> = (1..n).map(|i| (i as f64 / 2.0).sqrt()).collect();
    Ok(golub_welsch(&beta, std::f64::consts::PI.sqrt()))
}

const PANEL_ORDER: usize = 21;
const MAX_DEPTH: u32 = 28;

fn panel(f: &dyn Fn(f64) -> f64, nodes: &[f64], weights: &[f64], a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (&x, &w) in nodes.iter().zip(weights) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

fn refine(
    f: &dyn Fn(f64) -> f64,
    nodes: &[f64],
    weights: &[f64],
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    worst: &mut f64,
) -> f64 {
    let mid = 0.5 * (a + b);
    let left = panel(f, nodes, weights, a, mid);
    let right = panel(f, nodes, weights, mid, b);
    let err = (left + right - whole).abs();
    if err <= tol || depth >= MAX_DEPTH {
        if depth >= MAX_DEPTH {
            *worst = worst.max(err);
        }
        return left + right;
    }
    refine(f, nodes, weights, a, mid, left, 0.5 * tol, depth + 1, worst)
        + refine(f, nodes, weights, mid, b, right, 0.5 * tol, depth + 1, worst)
}

/// Adaptive panel quadrature of `f` on [a, b].
///
/// Panels are bisected until the local Gauss-Legendre estimates stabilize to
/// `tol`; hitting the maximum refinement depth yields a convergence error
/// carrying the achieved estimate.
pub fn integrate_adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    let (nodes, weights) = gauss_legendre(PANEL_ORDER)?;
    let whole = panel(f, &nodes, &weights, a, b);
    let mut worst = 0.0;
    let value = refine(f, &nodes, &weights, a, b, whole, tol, 0, &mut worst);
    if worst > 0.0 {
        return Err(Error::Convergence(format!(
            "adaptive quadrature stalled at depth {MAX_DEPTH}: estimate {value}, local error {worst} > requested {tol}"
        )));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn legendre_polynomial_exactness() {
        let (x, w) = gauss_legendre(8).unwrap();
        // integral of x^14 over [-1,1] = 2/15, exact for order 8.
        let val: f64 = x.iter().zip(&w).map(|(&x, &w)| w * x.powi(14)).sum();
        assert_relative_eq!(val, 2.0 / 15.0, max_relative = 1e-13);
    }

    #[test]
    fn legendre_gaussian_norm() {
        // integral over [0, 12] of exp(-r^2) r^2 dr = sqrt(pi)/4.
        let (r, w) = gauss_legendre_on(0.0, 12.0, 64).unwrap();
        let val: f64 = r.iter().zip(&w).map(|(&r, &w)| w * r * r * (-r * r).exp()).sum();
        assert_relative_eq!(val, PI.sqrt() / 4.0, max_relative = 1e-13);
    }

    #[test]
    fn hermite_moments() {
        let (x, w) = gauss_hermite(20).unwrap();
        let m0: f64 = w.iter().sum();
        let m2: f64 = x.iter().zip(&w).map(|(&x, &w)| w * x * x).sum();
        assert_relative_eq!(m0, PI.sqrt(), max_relative = 1e-13);
        assert_relative_eq!(m2, PI.sqrt() / 2.0, max_relative = 1e-13);
    }

    #[test]
    fn adaptive_oscillatory() {
        let f = |x: f64| (3.0 * x).cos() * (-x * x).exp();
        let val = integrate_adaptive(&f, 0.0, 10.0, 1e-12).unwrap();
        // Known cosine-Gaussian integral: sqrt(pi)/2 exp(-9/4).
        let exact = 0.5 * PI.sqrt() * (-2.25f64).exp();
        assert_relative_eq!(val, exact, max_relative = 1e-10);
    }
}
