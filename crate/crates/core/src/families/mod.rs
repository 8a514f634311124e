//! Parameterised tree families and the predicted spectral minimizers.
//!
//! Every family is a fixed spine with pendant leaves hung on designated spine
//! vertices. Vertex labels: spine vertices first in the order listed in [`Family::spine`],
//! then the `a` leaves, the `b` leaves, and so on.

mod predict;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use predict::{predicted_minimizer, MinimizerPrediction};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    T1ab,
    T2ab,
    T1abc,
    T2abc,
    T3abc,
    T4abc,
    K1,
    K2,
    K3,
    K4,
    K5,
    K6,
    K7,
    K8,
    K9,
    K10,
    K11,
    K12,
    K13,
}

/// Spine size, spine edges, and the spine vertex carrying each parameter's leaves.
struct Shape {
    spine: &'static [&'static str],
    edges: &'static [(usize, usize)],
    attach: &'static [usize],
}

const PATH3: &[(usize, usize)] = &[(0, 1), (1, 2)];
const PATH4: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3)];
const PATH5: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4)];
const PATH6: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)];
const PATH7: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)];

impl Family {
    pub const ALL: [Family; 19] = [
        Family::T1ab,
        Family::T2ab,
        Family::T1abc,
        Family::T2abc,
        Family::T3abc,
        Family::T4abc,
        Family::K1,
        Family::K2,
        Family::K3,
        Family::K4,
        Family::K5,
        Family::K6,
        Family::K7,
        Family::K8,
        Family::K9,
        Family::K10,
        Family::K11,
        Family::K12,
        Family::K13,
    ];

    fn shape(self) -> Shape {
        use Family::*;
        let (spine, edges, attach): (&[&str], &[(usize, usize)], &[usize]) = match self {
            T1ab => (&["c1", "c2"], &[(0, 1)], &[0, 1]),
            T2ab => (&["v1", "m", "v2"], PATH3, &[0, 2]),
            T1abc => (&["v1", "v2", "v3"], PATH3, &[0, 1, 2]),
            T2abc => (&["v1", "m", "v2", "v3"], PATH4, &[0, 2, 3]),
            T3abc => (&["v1", "x", "v2", "y", "v3"], PATH5, &[0, 2, 4]),
            T4abc => (
                &["v1", "v2", "v3", "w"],
                &[(0, 1), (1, 2), (1, 3)],
                &[0, 2, 3],
            ),
            K1 => (&["v1", "v2", "v3", "v4"], PATH4, &[0, 1, 2, 3]),
            K2 => (&["v1", "x", "v2", "v3", "v4"], PATH5, &[0, 2, 3, 4]),
            K3 => (&["v1", "v2", "x", "v3", "v4"], PATH5, &[0, 1, 3, 4]),
            K4 => (&["v1", "x", "v2", "y", "v3", "v4"], PATH6, &[0, 2, 4, 5]),
            K5 => (&["v1", "x", "v2", "v3", "y", "v4"], PATH6, &[0, 2, 3, 5]),
            K6 => (
                &["v1", "u1", "v2", "u2", "v3", "y", "v4"],
                PATH7,
                &[0, 2, 4, 6],
            ),
            K7 => (
                &["v1", "v2", "v3", "v4"],
                &[(0, 1), (1, 2), (1, 3)],
                &[0, 1, 2, 3],
            ),
            K8 => (
                &["v1", "x", "v2", "v3", "v4"],
                &[(0, 1), (1, 2), (2, 3), (2, 4)],
                &[0, 2, 3, 4],
            ),
            K9 => (
                &["v1", "x", "v2", "y", "v3", "v4"],
                &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
                &[0, 2, 4, 5],
            ),
            K10 => (
                &["v1", "x", "v2", "y", "v3", "z", "v4"],
                &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)],
                &[0, 2, 4, 6],
            ),
            K11 => (
                &["u1", "v1", "v2", "v3", "v4"],
                &[(0, 1), (0, 2), (0, 3), (3, 4)],
                &[1, 2, 3, 4],
            ),
            K12 => (
                &["u1", "v1", "v2", "v3", "u2", "v4"],
                &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)],
                &[1, 2, 3, 5],
            ),
            K13 => (
                &["u", "v1", "v2", "v3", "v4"],
                &[(0, 1), (0, 2), (0, 3), (0, 4)],
                &[1, 2, 3, 4],
            ),
        };
        Shape {
            spine,
            edges,
            attach,
        }
    }

    pub fn arity(self) -> usize {
        self.shape().attach.len()
    }

    /// Spine vertex names in label order.
    pub fn spine(self) -> &'static [&'static str] {
        self.shape().spine
    }

    pub fn designed_beta(self) -> usize {
        use Family::*;
        match self {
            T1ab | T2ab => 2,
            T1abc | T2abc | T3abc | T4abc => 3,
            _ => 4,
        }
    }

    /// Name used in text specs, e.g. `T2` or `K10`. `T1` and `T2` are shared by the
    /// two- and three-parameter families and resolved by arity.
    pub fn short_name(self) -> &'static str {
        use Family::*;
        match self {
            T1ab | T1abc => "T1",
            T2ab | T2abc => "T2",
            T3abc => "T3",
            T4abc => "T4",
            K1 => "K1",
            K2 => "K2",
            K3 => "K3",
            K4 => "K4",
            K5 => "K5",
            K6 => "K6",
            K7 => "K7",
            K8 => "K8",
            K9 => "K9",
            K10 => "K10",
            K11 => "K11",
            K12 => "K12",
            K13 => "K13",
        }
    }

    /// Parameter ranges for which the family has its designed matching number and is
    /// used in the elimination arguments.
    pub fn admits(self, p: &[usize]) -> bool {
        use Family::*;
        if p.len() != self.arity() {
            return false;
        }
        let pos = |i: usize| p[i] >= 1;
        match self {
            T1ab => pos(0) && pos(1),
            T2ab => p[0] + p[1] >= 1,
            T1abc | T4abc | K1 | K3 | K7 | K8 | K11 => p.iter().all(|&x| x >= 1),
            T2abc | T3abc => pos(0) && pos(2),
            K2 => pos(0) && pos(2) && pos(3),
            K4 | K5 | K6 => pos(0) && pos(3),
            K9 | K10 => pos(0) && pos(2) && pos(3),
            K12 => p[0] + p[1] >= 1 && p[2] + p[3] >= 1,
            K13 => p.iter().filter(|&&x| x == 0).count() <= 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// A family together with its leaf counts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    /// Checks arity and the family's parameter bounds.
    pub fn new(family: Family, params: Vec<usize>) -> Result<Self> {
        if params.len() != family.arity() {
            return Err(Error::InvalidFamily(format!(
                "{family} takes {} parameters, got {}",
                family.arity(),
                params.len()
            )));
        }
        let spec = FamilySpec { family, params };
        if !family.admits(&spec.params) {
            return Err(Error::InvalidFamily(format!(
                "{spec} is outside the family's parameter range"
            )));
        }
        Ok(spec)
    }

    /// Arity-checked only; any nonnegative leaf counts.
    pub fn raw(family: Family, params: Vec<usize>) -> Result<Self> {
        if params.len() != family.arity() {
            return Err(Error::InvalidFamily(format!(
                "{family} takes {} parameters",
                family.arity()
            )));
        }
        Ok(FamilySpec { family, params })
    }

    pub fn is_admissible(&self) -> bool {
        self.family.admits(&self.params)
    }

    pub fn order(&self) -> usize {
        self.family.spine().len() + self.params.iter().sum::<usize>()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.family, ps.join(","))
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FamilySpec {
    /// Like [`str::parse`] but without the parameter bound check.
    pub fn parse_raw(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!("cannot parse `{s}`"));
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let params = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let name = s[..open].trim().trim_end_matches(['a', 'b', 'c']);
        let family = Family::ALL
            .into_iter()
            .find(|f| f.short_name().eq_ignore_ascii_case(name) && f.arity() == params.len())
            .ok_or_else(bad)?;
        FamilySpec::raw(family, params)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `K10(4,0,4,4)`, `T3(3,1,3)`, `T2(2,3)`; the long names `T2ab`, `T3abc`
    /// are accepted too.
    fn from_str(s: &str) -> Result<Self> {
        let spec = FamilySpec::parse_raw(s)?;
        FamilySpec::new(spec.family, spec.params)
    }
}

/// The labeled tree of `spec`, after checking its parameter bounds.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    if !spec.is_admissible() {
        return Err(Error::InvalidFamily(format!(
            "{spec} is outside the family's parameter range"
        )));
    }
    Ok(build_family_raw(spec))
}

/// The labeled tree of `spec` without bound checks (arity is enforced by construction).
pub fn build_family_raw(spec: &FamilySpec) -> Graph {
    let shape = spec.family.shape();
    let mut edges: Vec<(usize, usize)> = shape.edges.to_vec();
    let mut next = shape.spine.len();
    for (&count, &at) in spec.params.iter().zip(shape.attach) {
        for _ in 0..count {
            edges.push((at, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges).expect("family shapes are trees")
}

/// Closed-form order and designed matching number.
pub fn family_order_and_beta(spec: &FamilySpec) -> (usize, usize) {
    (spec.order(), spec.family.designed_beta())
}

/// All compositions of `total` into `parts` nonnegative integers, lexicographic.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(left - x, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        rec(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Every admissible spec of order `n` among families designed for `beta`.
pub fn specs_of_order(n: usize, beta: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for family in Family::ALL
        .into_iter()
        .filter(|f| f.designed_beta() == beta)
    {
        let Some(leaves) = n.checked_sub(family.spine().len()) else {
            continue;
        };
        for params in compositions(leaves, family.arity()) {
            if family.admits(&params) {
                out.push(FamilySpec { family, params });
            }
        }
    }
    out
}

/// Admissible family specs isomorphic to the tree `t` designed for `beta`.
pub fn identify(t: &Graph, beta: usize) -> Result<Vec<FamilySpec>> {
    let code = canonical_form(t)?;
    Ok(specs_of_order(t.n(), beta)
        .into_iter()
        .filter(|s| {
            canonical_form(&build_family_raw(s))
                .map(|c| c == code)
                .unwrap_or(false)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::matching_number;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(spec("K10(4,0,4,4)").to_string(), "K10(4,0,4,4)");
        assert_eq!(spec("T2(2,3)").family, Family::T2ab);
        assert_eq!(spec("T2(1,0,1)").family, Family::T2abc);
        assert_eq!(spec("T3abc(3,1,3)").family, Family::T3abc);
        assert_eq!(spec(" k6( 1, 1,1,1 ) ").family, Family::K6);
        for bad in [
            "K14(1,1,1,1)",
            "T3(1,1)",
            "K1(1,1,1,0)",
            "K6(1,2,3",
            "T2(x,1)",
            "T2()",
        ] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn documented_examples() {
        let t = build_family(&spec("T2(2,3)")).unwrap();
        assert_eq!((t.n(), matching_number(&t)), (8, 2));
        let t = build_family(&spec("T3(1,1,1)")).unwrap();
        assert_eq!((t.n(), matching_number(&t)), (8, 3));
        let t = build_family(&spec("K6(1,1,1,1)")).unwrap();
        assert_eq!((t.n(), matching_number(&t)), (11, 4));
        assert_eq!(family_order_and_beta(&spec("K10(1,2,3,4)")), (17, 4));
        assert_eq!(family_order_and_beta(&spec("T2(1,4)")), (8, 2));
    }

    #[test]
    fn designed_beta_on_grid() {
        for family in Family::ALL {
            for total in 0..=family.arity() * 5 {
                for params in compositions(total, family.arity()) {
                    if params.iter().any(|&p| p > 5) || !family.admits(&params) {
                        continue;
                    }
                    let s = FamilySpec::new(family, params).unwrap();
                    let t = build_family(&s).unwrap();
                    assert!(t.is_tree());
                    assert_eq!(
                        family_order_and_beta(&s),
                        (t.n(), matching_number(&t)),
                        "{s}"
                    );
                    assert_eq!(t, build_family(&s).unwrap());
                }
            }
        }
    }

    #[test]
    fn isomorphic_aliases() {
        let cf = |s: String| {
            canonical_form(&build_family_raw(&FamilySpec::parse_raw(&s).unwrap())).unwrap()
        };
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for d in 1..=4 {
                        assert_eq!(
                            cf(format!("K3({a},0,{c},{d})")),
                            cf(format!("K2({a},0,{c},{d})"))
                        );
                        assert_eq!(
                            cf(format!("K3({a},{b},0,{d})")),
                            cf(format!("K2({d},0,{b},{a})"))
                        );
                        assert_eq!(
                            cf(format!("K5({a},0,0,{d})")),
                            cf(format!("K4({a},0,0,{d})"))
                        );
                        assert_eq!(
                            cf(format!("K11({a},{b},{c},1)")),
                            cf(format!("K12({a},{b},{c},0)"))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn identify_finds_family() {
        let t = build_family(&spec("T2(2,3)"))
            .unwrap()
            .relabel(&[7, 6, 5, 4, 3, 2, 1, 0])
            .unwrap();
        let found = identify(&t, 2).unwrap();
        assert!(found.contains(&spec("T2(2,3)")));
        assert!(found.contains(&spec("T2(3,2)")));
    }
}
