use serde::Serialize;

use super::{Family, FamilySpec};
use crate::error::{Error, Result};

/// Closed-form minimizer set for `(n, beta)`; ties are listed together.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimizerPrediction {
    pub n: usize,
    pub beta: usize,
    pub trees: Vec<FamilySpec>,
    /// Smallest order for which the closed form is claimed.
    pub valid_from: usize,
}

impl MinimizerPrediction {
    pub fn asserted(&self) -> bool {
        self.n >= self.valid_from
    }
}

fn spec(family: Family, params: &[i64]) -> Result<FamilySpec> {
    let params = params
        .iter()
        .map(|&p| usize::try_from(p))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::OutOfRange(format!("{family} parameters {params:?}")))?;
    FamilySpec::new(family, params)
}

pub fn predicted_minimizer(n: usize, beta: usize) -> Result<MinimizerPrediction> {
    let ni = n as i64;
    let (trees, valid_from) = match beta {
        2 => {
            let m = ni - 3;
            (
                vec![spec(Family::T2ab, &[m.div_euclid(2), m - m.div_euclid(2)])?],
                4,
            )
        }
        3 => {
            let (s, r) = ((ni - 5).div_euclid(3), (ni - 5).rem_euclid(3));
            let mid = match r {
                0 => s - 2,
                1 => s - 1,
                _ => s,
            };
            (vec![spec(Family::T3abc, &[s + 1, mid, s + 1])?], 11)
        }
        4 => {
            let (s, r) = ((ni - 7).div_euclid(4), (ni - 7).rem_euclid(4));
            let trees = match r {
                0 => vec![
                    spec(Family::K6, &[s + 1, s - 1, s - 1, s + 1])?,
                    spec(Family::K10, &[s + 1, s - 3, s + 1, s + 1])?,
                ],
                1 => vec![spec(Family::K10, &[s + 1, s - 2, s + 1, s + 1])?],
                2 => vec![
                    spec(Family::K6, &[s + 1, s, s, s + 1])?,
                    spec(Family::K6, &[s + 2, s - 1, s, s + 1])?,
                    spec(Family::K6, &[s + 2, s - 1, s - 1, s + 2])?,
                ],
                _ => vec![spec(Family::K10, &[s + 2, s - 3, s + 2, s + 2])?],
            };
            (trees, 19)
        }
        _ => {
            return Err(Error::OutOfRange(format!(
                "matching number {beta} (closed forms exist for 2, 3, 4)"
            )))
        }
    };
    Ok(MinimizerPrediction {
        n,
        beta,
        trees,
        valid_from,
    })
}
