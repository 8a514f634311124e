//! Exact characteristic polynomials and certified spectral radii.
//!
//! Radii are located by Sturm counting on the squarefree part of the characteristic
//! polynomial, evaluated exactly at dyadic points, so every [`SpectralValue`] carries
//! an enclosure `(lo, hi]` that provably contains ρ.

mod charpoly;
mod dyadic;
mod jt;
mod perron;
mod poly;
mod roots;

use std::cmp::Ordering;

use serde::Serialize;

pub(crate) use charpoly::rooted_char_poly_i64;
pub use charpoly::{char_poly, tree_char_poly_i64};
pub use dyadic::Dyadic;
pub use jt::{tree_eigenvalues_above, tree_inertia, Inertia};
pub use perron::{perron_vector, PerronVector};
pub use poly::{poly_identity_check, CharPolynomial, Polynomial};
pub use roots::{
    compare_largest_roots, has_root_above, newton_from_above, Enclosure, LargestRoot, SturmSequence,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MIN_TOL: f64 = 1e-13;

/// Spectral radius with a certified enclosure of width at most `tol`.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralValue {
    pub rho: f64,
    pub tol: f64,
    pub enclosure: Enclosure,
}

pub fn check_tol(tol: f64) -> Result<()> {
    if tol.is_nan() || tol < MIN_TOL {
        Err(Error::ToleranceTooSmall(tol))
    } else {
        Ok(())
    }
}

/// Certified largest root of `char_poly(g)`; for disconnected graphs this is the
/// maximum over components.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralValue> {
    check_tol(tol)?;
    let root = radius_root(g, tol)?;
    Ok(SpectralValue {
        rho: root.value_f64(),
        tol,
        enclosure: root.enclosure().clone(),
    })
}

/// The refinable root object behind [`spectral_radius`].
pub fn radius_root(g: &Graph, tol: f64) -> Result<LargestRoot> {
    if g.n() == 0 {
        return Err(Error::Precondition("empty graph has no spectrum".into()));
    }
    LargestRoot::new(&char_poly(g), tol, Some(g.max_degree() as f64 + 1e-9))
}

/// Certified comparison of spectral radii; `Equal` means an exact tie.
pub fn compare_spectral_radii(g: &Graph, h: &Graph) -> Result<Ordering> {
    let mut a = radius_root(g, 1e-6)?;
    let mut b = radius_root(h, 1e-6)?;
    Ok(compare_largest_roots(&mut a, &mut b))
}

/// Fast floating-point ρ of a tree from its machine-integer characteristic polynomial
/// `x^k q(x^2)`, by Newton on `q` from above. Accurate to roughly 1e-13; not certified.
pub fn tree_rho_f64(coeffs: &[i64]) -> f64 {
    let d = coeffs.len() - 1;
    if d == 0 {
        return 0.0;
    }
    let k = coeffs.iter().position(|&c| c != 0).unwrap_or(0);
    let q: Vec<f64> = coeffs[k..].iter().step_by(2).map(|&c| c as f64).collect();
    if q.len() <= 1 {
        return 0.0;
    }
    // ρ^2 <= n - 1 for trees.
    newton_from_above(&q, d as f64).max(0.0).sqrt()
}
