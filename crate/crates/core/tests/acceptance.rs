//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spex::families::{build_family, build_family_raw, Family, FamilySpec};
use spex::graph::{canonical_form, matching_number, CanonicalForm};
use spex::search::{
    argmin_spectral, enumerate_trees, is_internal_path_edge, is_w_graph, random_connected_graph,
    transform, SearchOptions, Transform,
};
use spex::spectral::{
    char_poly, compare_spectral_radii, perron_vector, spectral_radius, Polynomial,
};
use spex::structure::{
    cycle_clique_check, dominating_control_set, dominating_control_set_literal,
    is_clique_block_graph, quasi_adjacency_graph, spanning_tree_preserving_matching,
};
use spex::Graph;

type Outcome = Result<String, String>;

fn opts() -> SearchOptions {
    SearchOptions {
        workers: std::thread::available_parallelism()
            .map_or(1, |n| n.get())
            .min(8),
        tol: 1e-12,
    }
}

fn family(name: &str, params: &[usize]) -> Graph {
    let f = Family::ALL
        .into_iter()
        .find(|f| f.short_name() == name && f.arity() == params.len())
        .unwrap();
    build_family(&FamilySpec::new(f, params.to_vec()).unwrap()).unwrap()
}

fn admissible(name: &str, params: &[usize]) -> bool {
    let f = Family::ALL
        .into_iter()
        .find(|f| f.short_name() == name && f.arity() == params.len())
        .unwrap();
    FamilySpec::new(f, params.to_vec()).is_ok()
}

fn code(g: &Graph) -> CanonicalForm {
    canonical_form(g).unwrap()
}

fn argmin_matches(n: usize, beta: usize, expected: &[Graph], need_tie: bool) -> Result<(), String> {
    let r = argmin_spectral(n, beta, &opts()).map_err(|e| format!("n = {n}: {e}"))?;
    let found: BTreeSet<CanonicalForm> = r.argmin.iter().map(|m| m.canonical.clone()).collect();
    let want: BTreeSet<CanonicalForm> = expected.iter().map(code).collect();
    if found != want {
        let names: Vec<Vec<String>> = r
            .argmin
            .iter()
            .map(|m| m.families.iter().map(|f| f.to_string()).collect())
            .collect();
        return Err(format!(
            "n = {n}: argmin {names:?} differs from expectation"
        ));
    }
    if need_tie && !(r.argmin.len() > 1 && r.ties_certified) {
        return Err(format!("n = {n}: tie not certified"));
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    for n in 4..=16 {
        let m = n - 3;
        argmin_matches(n, 2, &[family("T2", &[m / 2, m - m / 2])], false)?;
    }
    Ok("beta = 2, n = 4..16".into())
}

fn criterion_2() -> Outcome {
    for n in 11..=18usize {
        let (s, r) = ((n - 5) / 3, (n - 5) % 3);
        let mid = [s - 2, s - 1, s][r];
        argmin_matches(n, 3, &[family("T3", &[s + 1, mid, s + 1])], false)?;
    }
    Ok("beta = 3, n = 11..18".into())
}

fn criterion_3() -> Outcome {
    for n in 19..=22usize {
        let (s, r) = ((n - 7) / 4, (n - 7) % 4);
        let expected = match r {
            0 => vec![
                family("K6", &[s + 1, s - 1, s - 1, s + 1]),
                family("K10", &[s + 1, s - 3, s + 1, s + 1]),
            ],
            1 => vec![family("K10", &[s + 1, s - 2, s + 1, s + 1])],
            2 => vec![
                family("K6", &[s + 1, s, s, s + 1]),
                family("K6", &[s + 2, s - 1, s, s + 1]),
                family("K6", &[s + 2, s - 1, s - 1, s + 2]),
            ],
            _ => vec![family("K10", &[s + 2, s - 3, s + 2, s + 2])],
        };
        let distinct: BTreeSet<CanonicalForm> = expected.iter().map(code).collect();
        argmin_matches(n, 4, &expected, distinct.len() > 1)?;
    }
    Ok("beta = 4, n = 19..22, ties certified exactly".into())
}

fn criterion_4() -> Outcome {
    let mut worst = 0f64;
    for s in 2..=10usize {
        let cases = [
            (s - 2, s as f64 + 1.0 + 3f64.sqrt()),
            (s - 1, s as f64 + 3.0),
            (s, s as f64 + 2.0 + 2f64.sqrt()),
        ];
        for (b, expected) in cases {
            let rho = spectral_radius(&family("T3", &[s + 1, b, s + 1]), 1e-12)
                .map_err(|e| e.to_string())?
                .rho;
            let err = (rho * rho - expected).abs();
            worst = worst.max(err);
            if err > 1e-9 {
                return Err(format!(
                    "s = {s}, b = {b}: rho^2 = {}, expected {expected}",
                    rho * rho
                ));
            }
        }
    }
    Ok(format!("27 values, max error {worst:.1e}"))
}

fn xpoly(coeffs: &[i64]) -> Polynomial {
    Polynomial::from_i64s(coeffs)
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for a in 1..=5usize {
        for b in 1..=5usize {
            for c in 1..=5usize {
                for d in 1..=5usize {
                    let sum = (a + b + c + d) as i64;
                    if admissible("K6", &[a, b - 1, c, d]) && admissible("K12", &[b, a, c, d]) {
                        let lhs = &char_poly(&family("K6", &[a, b - 1, c, d]))
                            - &char_poly(&family("K12", &[b, a, c, d]));
                        let rhs = &(&Polynomial::monomial((sum - 2) as usize)
                            * &xpoly(&[-(d as i64 + 1), 0, 1]))
                            * &xpoly(&[-(b as i64 - 1), 0, 1]);
                        if lhs != rhs {
                            return Err(format!("K6/K12 identity fails at ({a},{b},{c},{d})"));
                        }
                        checked += 1;
                    }
                    if admissible("K12", &[a, b, c - 1, d]) && admissible("K13", &[a, b, c, d]) {
                        let lhs = &char_poly(&family("K12", &[a, b, c - 1, d]))
                            - &char_poly(&family("K13", &[a, b, c, d]));
                        let rhs = &(&Polynomial::monomial((sum - 3) as usize)
                            * &xpoly(&[-(c as i64 - 1), 0, 1]))
                            * &xpoly(&[-((a + b) as i64), 0, 2]);
                        if lhs != rhs {
                            return Err(format!("K12/K13 identity fails at ({a},{b},{c},{d})"));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} parameter tuples"))
}

fn criterion_6() -> Outcome {
    for a in 0..=6i64 {
        for b in 0..=6i64 {
            for c in 0..=6i64 {
                let inner = xpoly(&[
                    -(a + b + a * b + c * (2 * a + b + a * b + 1)),
                    0,
                    3 * a + 2 * b + a * b + c * (a + b + 3) + 3,
                    0,
                    -(a + b + c + 4),
                    0,
                    1,
                ]);
                let expected = if a + b + c == 0 {
                    inner
                        .div_exact(&Polynomial::x())
                        .ok_or("closed form not divisible by x at (0,0,0)")?
                } else {
                    &Polynomial::monomial((a + b + c - 1) as usize) * &inner
                };
                let spec = FamilySpec::raw(Family::T3abc, vec![a as usize, b as usize, c as usize])
                    .unwrap();
                let t = build_family_raw(&spec);
                if char_poly(&t) != expected {
                    return Err(format!("T3({a},{b},{c}) differs from the closed form"));
                }
            }
        }
    }
    Ok("343 parameter triples".into())
}

/// Tree path between `u` and `v`, endpoints included.
fn tree_path(t: &Graph, u: usize, v: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; t.n()];
    let mut queue = std::collections::VecDeque::from([u]);
    parent[u] = u;
    while let Some(x) = queue.pop_front() {
        for &y in t.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![v];
    while *path.last().unwrap() != u {
        path.push(parent[*path.last().unwrap()]);
    }
    path
}

fn criterion_7() -> Outcome {
    let mut trees = 0;
    let mut repaired = 0;
    for n in 3..=12 {
        for t in enumerate_trees(n).unwrap() {
            let beta = matching_number(&t);
            if n < 2 * beta + 1 {
                continue;
            }
            trees += 1;
            if dominating_control_set_literal(&t).is_err() {
                repaired += 1;
            }
            let d = dominating_control_set(&t).map_err(|e| format!("{t:?}: {e}"))?;
            let x = d.control.vertices();
            let in_x = |v: usize| x.contains(&v);
            let fail = |what: &str| Err(format!("{what} for {t:?} with X = {x:?}"));
            if x.len() != beta {
                return fail("|X| != beta");
            }
            if (0..n).any(|v| !in_x(v) && !t.neighbors(v).iter().any(|&u| in_x(u))) {
                return fail("not dominating");
            }
            if (0..n).any(|v| t.neighbors(v).iter().any(|&u| t.degree(u) == 1) && !in_x(v)) {
                return fail("quasi-pendant vertex outside X");
            }
            let mut pairs = BTreeSet::new();
            for (i, &u) in x.iter().enumerate() {
                for &v in &x[i + 1..] {
                    let path = tree_path(&t, u, v);
                    if path[1..path.len() - 1].iter().all(|&w| !in_x(w)) {
                        if path.len() - 1 > 2 {
                            return fail("quasi-adjacent pair at distance > 2");
                        }
                        pairs.insert((u, v));
                    }
                }
            }
            let qg = quasi_adjacency_graph(&d.control);
            let lib_pairs: BTreeSet<(usize, usize)> =
                qg.tree_edges().iter().map(|e| (e.0, e.1)).collect();
            if lib_pairs != pairs {
                return fail("quasi-adjacency graph disagrees with path check");
            }
            if qg.graph.n() != beta || !qg.graph.is_connected() {
                return fail("quasi-adjacency graph not connected on beta vertices");
            }
            if !is_clique_block_graph(&qg.graph) || !cycle_clique_check(&qg) {
                return fail("quasi-adjacency graph not a block graph");
            }
        }
    }
    Ok(format!(
        "{trees} trees, {repaired} needing the completion step"
    ))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0008);
    for i in 0..1000 {
        let n = rng.gen_range(3..=14);
        let g = random_connected_graph(&mut rng, n);
        let t = spanning_tree_preserving_matching(&g).map_err(|e| e.to_string())?;
        if !t.is_tree() || t.n() != g.n() || t.edges().any(|(u, v)| !g.has_edge(u, v)) {
            return Err(format!("sample {i}: not a spanning tree of {g:?}"));
        }
        if matching_number(&t) != matching_number(&g) {
            return Err(format!("sample {i}: matching number changed for {g:?}"));
        }
        if compare_spectral_radii(&t, &g).map_err(|e| e.to_string())? != Ordering::Less {
            return Err(format!(
                "sample {i}: spanning tree radius not strictly below for {g:?}"
            ));
        }
    }
    Ok("1000 graphs".into())
}

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (rng.gen_range(0..v), v))).unwrap()
}

fn strictly(ord: Ordering, want: Ordering, what: &str, g: &Graph) -> Result<(), String> {
    if ord == want {
        Ok(())
    } else {
        Err(format!("{what}: expected {want:?}, got {ord:?} for {g:?}"))
    }
}

fn subdivision_suite(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut count = 0;
    let mut check = |t: &Graph, u: usize, v: usize| -> Result<(), String> {
        let sub = transform(t, &Transform::Subdivision { u, v }).map_err(|e| e.to_string())?;
        strictly(
            compare_spectral_radii(&sub, t).map_err(|e| e.to_string())?,
            Ordering::Less,
            "subdivision",
            t,
        )?;
        count += 1;
        Ok(())
    };
    for n in 2..=10 {
        for t in enumerate_trees(n).unwrap().filter(|t| !is_w_graph(t)) {
            for (u, v) in t.edges().collect::<Vec<_>>() {
                if is_internal_path_edge(&t, u, v) {
                    check(&t, u, v)?;
                }
            }
        }
    }
    let mut sampled = 0;
    while sampled < 200 {
        let t = {
            let n = rng.gen_range(6..=18);
            random_tree(rng, n)
        };
        let internal: Vec<(usize, usize)> = t
            .edges()
            .filter(|&(u, v)| is_internal_path_edge(&t, u, v))
            .collect();
        if internal.is_empty() || is_w_graph(&t) {
            continue;
        }
        let (u, v) = internal[rng.gen_range(0..internal.len())];
        check(&t, u, v)?;
        sampled += 1;
    }
    Ok(count)
}

/// Attaches a path of `len` new vertices at `v`, returning the graph and its first vertex.
fn attach_path(g: &Graph, v: usize, len: usize) -> (Graph, usize) {
    let n = g.n();
    let edges = g
        .edges()
        .chain(std::iter::once((v, n)))
        .chain((1..len).map(|i| (n + i - 1, n + i)));
    (Graph::from_edges(n + len, edges).unwrap(), n)
}

fn shift_suite(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    for _ in 0..250 {
        // a one-vertex base makes both graphs the same path
        let base = {
            let n = rng.gen_range(2..=10);
            random_tree(rng, n)
        };
        let v = rng.gen_range(0..base.n());
        let l = rng.gen_range(1..=4);
        let k = rng.gen_range(l..=6);
        let (g, long) = attach_path(&base, v, k);
        let (g, short) = attach_path(&g, v, l);
        let out = transform(&g, &Transform::PendantShift { v, long, short })
            .map_err(|e| e.to_string())?;
        strictly(
            compare_spectral_radii(&out, &g).map_err(|e| e.to_string())?,
            Ordering::Less,
            "pendant shift",
            &g,
        )?;
    }
    Ok(250)
}

fn balance_suite(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    for _ in 0..250 {
        // two copies of a rooted tree whose roots are joined by a path: swapping the
        // copies exchanges u and v
        let r = {
            let n = rng.gen_range(1..=6);
            random_tree(rng, n)
        };
        let m = rng.gen_range(1..=3);
        let size = r.n();
        let mut edges: Vec<(usize, usize)> = r
            .edges()
            .chain(r.edges().map(|(a, b)| (a + size, b + size)))
            .collect();
        let (u, v) = (0, size);
        let mut prev = u;
        for i in 0..m - 1 {
            edges.push((prev, 2 * size + i));
            prev = 2 * size + i;
        }
        edges.push((prev, v));
        let base = Graph::from_edges(2 * size + m - 1, edges).unwrap();
        let l = rng.gen_range(1..=4);
        let k = rng.gen_range(l..=6);
        let g = base
            .with_pendants(u, k)
            .unwrap()
            .with_pendants(v, l)
            .unwrap();
        let out = transform(
            &g,
            &Transform::PendantBalance {
                to: u,
                from: v,
                k,
                l,
            },
        )
        .map_err(|e| e.to_string())?;
        strictly(
            compare_spectral_radii(&out, &g).map_err(|e| e.to_string())?,
            Ordering::Greater,
            "pendant balance",
            &g,
        )?;
    }
    Ok(250)
}

fn rewire_suite(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut done = 0;
    while done < 250 {
        let g = {
            let n = rng.gen_range(4..=14);
            random_tree(rng, n)
        };
        let x = perron_vector(&g, 1e-12).map_err(|e| e.to_string())?.entries;
        let (mut u, mut v) = (rng.gen_range(0..g.n()), rng.gen_range(0..g.n()));
        if x[u] < x[v] {
            std::mem::swap(&mut u, &mut v);
        }
        if u == v || x[u] - x[v] < 1e-6 {
            continue;
        }
        // keep the result a tree: never move the neighbour of v toward u
        let toward_u = tree_path(&g, u, v)[1];
        let cands: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| w != u && w != toward_u && !g.has_edge(u, w))
            .collect();
        if cands.is_empty() {
            continue;
        }
        let ws: Vec<usize> = cands
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let ws = if ws.is_empty() { vec![cands[0]] } else { ws };
        let out =
            transform(&g, &Transform::PerronRewire { u, v, ws }).map_err(|e| e.to_string())?;
        strictly(
            compare_spectral_radii(&g, &out).map_err(|e| e.to_string())?,
            Ordering::Less,
            "perron rewiring",
            &g,
        )?;
        done += 1;
    }
    Ok(done)
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE_0009);
    let s = subdivision_suite(&mut rng)?;
    let p = shift_suite(&mut rng)?;
    let b = balance_suite(&mut rng)?;
    let r = rewire_suite(&mut rng)?;
    Ok(format!(
        "subdivision {s}, pendant shift {p}, pendant balance {b}, perron rewiring {r}"
    ))
}

fn criterion_10() -> Outcome {
    const COUNTS: [usize; 16] = [
        1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
    ];
    for n in 1..=16 {
        let got = enumerate_trees(n).unwrap().count_trees();
        if got != COUNTS[n - 1] {
            return Err(format!("n = {n}: {got} trees, expected {}", COUNTS[n - 1]));
        }
    }
    Ok("n = 1..16".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("beta = 2 minimizers", criterion_1),
        ("beta = 3 minimizers", criterion_2),
        ("beta = 4 minimizers and exact ties", criterion_3),
        ("closed-form rho^2 values", criterion_4),
        ("K6/K12 and K12/K13 polynomial identities", criterion_5),
        ("T3 characteristic polynomial closed form", criterion_6),
        ("dominating control set properties", criterion_7),
        ("spanning trees of random graphs", criterion_8),
        ("monotonicity under graph transforms", criterion_9),
        ("tree enumeration counts", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}; {secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
