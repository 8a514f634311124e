use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::graph::{rooted_order, Graph};

/// Inertia of `A - xI` for a tree, by Jacobs–Trevisan bottom-up diagonalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub above: usize,
    pub equal: usize,
    pub below: usize,
}

pub fn tree_inertia(t: &Graph, x: &BigRational) -> Result<Inertia> {
    t.require_tree()?;
    let n = t.n();
    let (parent, order) = rooted_order(t, 0);
    let mut a = vec![-x.clone(); n];
    // Sum of 1/a(c) over live children, or a zero child to pivot on.
    let mut inv_sum = vec![BigRational::zero(); n];
    let mut zero_child: Vec<Option<usize>> = vec![None; n];
    for &v in order.iter().rev() {
        let mut cut = false;
        if let Some(c) = zero_child[v] {
            a[c] = BigRational::from_integer(2.into());
            a[v] = -BigRational::one() / BigRational::from_integer(2.into());
            cut = true;
        } else {
            a[v] -= &inv_sum[v];
        }
        if v != 0 && !cut {
            let p = parent[v];
            if a[v].is_zero() {
                zero_child[p].get_or_insert(v);
            } else {
                inv_sum[p] += a[v].recip();
            }
        }
    }
    let above = a.iter().filter(|d| d.is_positive()).count();
    let equal = a.iter().filter(|d| d.is_zero()).count();
    Ok(Inertia {
        above,
        equal,
        below: n - above - equal,
    })
}

/// Number of adjacency eigenvalues strictly greater than `x`, with multiplicity.
pub fn tree_eigenvalues_above(t: &Graph, x: &BigRational) -> Result<usize> {
    tree_inertia(t, x).map(|i| i.above)
}
