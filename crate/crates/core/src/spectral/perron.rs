use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_ITERATIONS: usize = 2_000_000;

/// Positive eigenvector for the spectral radius, largest entry 1.
#[derive(Debug, Clone, Serialize)]
pub struct PerronVector {
    pub entries: Vec<f64>,
    /// Rayleigh quotient of the final iterate.
    pub rho: f64,
    /// `max_i |(A x)_i - rho x_i|`.
    pub residual: f64,
    pub tol: f64,
}

fn step(g: &Graph, x: &[f64], out: &mut [f64]) {
    for (v, o) in out.iter_mut().enumerate() {
        *o = g.neighbors(v).iter().map(|&u| x[u]).sum();
    }
}

fn residual(g: &Graph, x: &[f64]) -> (f64, f64) {
    let mut ax = vec![0.0; x.len()];
    step(g, x, &mut ax);
    let rho =
        ax.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() / x.iter().map(|b| b * b).sum::<f64>();
    let res = ax
        .iter()
        .zip(x)
        .map(|(a, b)| (a - rho * b).abs())
        .fold(0.0, f64::max);
    (rho, res)
}

/// Power iteration on `A + I` from the all-ones vector. The shift makes the Perron
/// root strictly dominant in modulus even for bipartite graphs.
pub fn perron_vector(g: &Graph, tol: f64) -> Result<PerronVector> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::ToleranceTooSmall(tol));
    }
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut x = vec![1.0; n];
    let mut next = vec![0.0; n];
    for _ in 0..MAX_ITERATIONS {
        step(g, &x, &mut next);
        for (y, &xi) in next.iter_mut().zip(&x) {
            *y += xi;
        }
        let max = next.iter().cloned().fold(0.0, f64::max);
        next.iter_mut().for_each(|y| *y /= max);
        let diff = next
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        std::mem::swap(&mut x, &mut next);
        if diff < tol / 10.0 {
            let (rho, res) = residual(g, &x);
            if res <= tol {
                return Ok(PerronVector {
                    entries: x,
                    rho,
                    residual: res,
                    tol,
                });
            }
        }
    }
    Err(Error::NoConvergence(format!(
        "power iteration did not reach residual {tol:e}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_entries() {
        let pv = perron_vector(&Graph::star(4), 1e-12).unwrap();
        assert!((pv.entries[0] - 1.0).abs() < 1e-12);
        for &e in &pv.entries[1..] {
            assert!((e - 0.5).abs() < 1e-11);
        }
        assert!((pv.rho - 2.0).abs() < 1e-11);
    }

    #[test]
    fn path_entries() {
        let pv = perron_vector(&Graph::path(3), 1e-12).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((pv.entries[1] - 1.0).abs() < 1e-12);
        assert!((pv.entries[0] - r).abs() < 1e-11 && (pv.entries[2] - r).abs() < 1e-11);
        assert!(pv.residual <= 1e-12);
    }

    #[test]
    fn single_vertex_and_errors() {
        let pv = perron_vector(&Graph::path(1), 1e-12).unwrap();
        assert_eq!(pv.entries, vec![1.0]);
        assert_eq!(pv.rho, 0.0);
        assert_eq!(
            perron_vector(&Graph::empty(2), 1e-9).unwrap_err(),
            Error::Disconnected
        );
    }
}
