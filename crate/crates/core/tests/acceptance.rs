//! One PASS/FAIL line per acceptance criterion, all at exact equality.
//!
//! Set `BLOCKMEAN_LONG_RUN=1` to add the order-11 block scan and the
//! order-8 connected scan.

use std::collections::BTreeMap;
use std::time::Instant;

use blockmean_core::cis::{mean, phi_brute, phi_fast};
use blockmean_core::ktree::{random_k_tree, KTree};
use blockmean_core::lemmas::{
    family_edge_gluing, family_stretching, family_vertex_gluing, improve_to_path, sweep, Statement,
};
use blockmean_core::search::{extremal_scan, gen_block_graphs, Family};
use blockmean_core::{
    block_decomposition, canonical_cert, is_block_graph, random_block_graph, seeded_rng, Graph,
    Rational,
};
use num_bigint::BigInt;
use rand::Rng;

type Outcome = Result<String, String>;

fn long_run() -> bool {
    std::env::var("BLOCKMEAN_LONG_RUN").is_ok_and(|v| v == "1")
}

fn path_edges(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges).unwrap()
}

fn clique_edges(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// Tree whose vertices of degree at least two induce a path (or nothing).
fn caterpillar_oracle(g: &Graph) -> bool {
    let n = g.order();
    if g.size() + 1 != n || !g.is_connected() {
        return false;
    }
    let spine: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 2).collect();
    let inner = |v: usize| spine.iter().filter(|&&w| g.has_edge(v, w)).count();
    let ends = spine.iter().filter(|&&v| inner(v) <= 1).count();
    spine.len() <= 1 || (spine.iter().all(|&v| inner(v) <= 2) && ends == 2)
}

fn all_block_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| gen_block_graphs(n).unwrap())
        .collect()
}

fn criterion_1() -> Outcome {
    for n in 1..=30usize {
        let got = mean(&path_edges(n)).unwrap().mean;
        if got != Rational::new(n as i64 + 2, 3) {
            return Err(format!("M(P_{n}) = {got}"));
        }
    }
    for n in 1..=20usize {
        let got = mean(&clique_edges(n)).unwrap().mean;
        let num = BigInt::from(n) << (n - 1);
        let den = (BigInt::from(1) << n) - 1;
        if got != Rational::new(num, den) {
            return Err(format!("M(K_{n}) = {got}"));
        }
    }
    Ok("paths n<=30, cliques n<=20".into())
}

fn criterion_2() -> Outcome {
    let exhaustive = all_block_graphs(8);
    for g in &exhaustive {
        if phi_fast(g).unwrap() != phi_brute(g) {
            return Err(format!("mismatch on {:?}", g.edges()));
        }
    }
    let mut rng = seeded_rng(2);
    for _ in 0..500 {
        let n = rng.gen_range(1..=14);
        let g = random_block_graph(n, &mut rng).unwrap();
        if phi_fast(&g).unwrap() != phi_brute(&g) {
            return Err(format!("mismatch on {:?}", g.edges()));
        }
    }
    Ok(format!("{} exhaustive + 500 random", exhaustive.len()))
}

fn min_scan(family: Family, orders: impl Iterator<Item = usize>) -> Outcome {
    let mut seen = Vec::new();
    for n in orders {
        let r = extremal_scan(family, n).unwrap();
        let p = canonical_cert(&path_edges(n));
        if r.argmin != [p] || r.min_m != Rational::new(n as i64 + 2, 3) {
            return Err(format!("n={n}: min {} at {:?}", r.min_m, r.argmin));
        }
        seen.push(format!("{n}:{}", r.family_count));
    }
    Ok(format!(
        "unique argmin P_n (order:classes {})",
        seen.join(" ")
    ))
}

fn criterion_3() -> Outcome {
    let top = if long_run() { 11 } else { 10 };
    min_scan(Family::Block, 3..=top)
}

fn criterion_4() -> Outcome {
    let top = if long_run() { 11 } else { 10 };
    for n in 3..=top {
        let r = extremal_scan(Family::Block, n).unwrap();
        let ok = if n <= 4 {
            r.argmax == [canonical_cert(&clique_edges(n))]
        } else {
            r.argmax.iter().all(|c| caterpillar_oracle(&c.to_graph()))
        };
        if !ok {
            return Err(format!("n={n}: argmax {:?}", r.argmax));
        }
    }
    Ok(format!("K_3, K_4, caterpillars for 5..={top}"))
}

fn criterion_5() -> Outcome {
    let graphs: Vec<Graph> = all_block_graphs(8);
    let report = sweep(&graphs, None);
    if let Some(f) = report.failures().next() {
        return Err(format!("{f:?}"));
    }
    // each characterised equality case must actually occur
    for st in [
        Statement::LocalWeight,
        Statement::AdjacentCount,
        Statement::NoncutCount,
        Statement::Mu,
    ] {
        let equal = report
            .verdicts
            .iter()
            .filter(|v| v.statement == st && v.skipped.is_none() && v.equality);
        let mut n = 0;
        for v in equal {
            n += 1;
            let g = v.witness.cert.to_graph();
            let expected = match st {
                Statement::LocalWeight => g.is_path(),
                Statement::AdjacentCount => true,
                _ => g.size() * 2 == g.order() * (g.order() - 1),
            };
            if !expected {
                return Err(format!("{st}: equality at {:?}", v.witness));
            }
        }
        if n == 0 {
            return Err(format!("{st}: no equality case seen"));
        }
    }
    let checked: usize = report.tallies.values().map(|t| t.checked).sum();
    Ok(format!("{} graphs, {checked} verdicts", report.graphs))
}

fn edge_host(rng: &mut impl Rng) -> (Graph, usize, usize) {
    loop {
        let g = random_block_graph(rng.gen_range(3..=8), rng).unwrap();
        let bct = block_decomposition(&g).unwrap();
        let pairs: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| !bct.is_cut_vertex(u) && !bct.is_cut_vertex(v))
            .collect();
        if !pairs.is_empty() {
            let (u, v) = pairs[rng.gen_range(0..pairs.len())];
            return (g, u, v);
        }
    }
}

fn criterion_6() -> Outcome {
    let mut rng = seeded_rng(6);
    for i in 0..200 {
        let h = random_block_graph(rng.gen_range(2..=8), &mut rng).unwrap();
        let v = rng.gen_range(0..h.order());
        let n = rng.gen_range(3..=12);
        let c = family_vertex_gluing(&h, v, n).unwrap();
        if !(c.chain_ok && c.symmetry_ok == Some(true) && c.closed_form_ok) {
            return Err(format!("vertex gluing #{i}: H={:?} v={v} n={n}", h.edges()));
        }

        let (h, u, v) = edge_host(&mut rng);
        let n = rng.gen_range(4..=12);
        let c = family_edge_gluing(&h, u, v, n).unwrap();
        if !(c.chain_ok && c.symmetry_ok == Some(true) && c.closed_form_ok) {
            return Err(format!(
                "edge gluing #{i}: H={:?} u={u} v={v} n={n}",
                h.edges()
            ));
        }

        let h = random_block_graph(rng.gen_range(2..=8), &mut rng).unwrap();
        let u = rng.gen_range(0..h.order());
        let n = rng.gen_range(3..=12);
        let c = family_stretching(&h, u, n).unwrap();
        if !(c.chain_ok && c.closed_form_ok) {
            return Err(format!("stretching #{i}: H={:?} u={u} n={n}", h.edges()));
        }
        let orders: Vec<usize> = c.graphs().iter().map(Graph::order).collect();
        if orders.iter().any(|&o| o != h.order() + n - 1) {
            return Err(format!("stretching #{i}: orders {orders:?}"));
        }
    }
    Ok("200 instances per family".into())
}

fn criterion_7() -> Outcome {
    let mut graphs = 0;
    let mut steps = 0;
    for n in 3..=8 {
        for g in gen_block_graphs(n).unwrap() {
            if g.is_path() {
                continue;
            }
            graphs += 1;
            let run = improve_to_path(&g).map_err(|e| format!("{:?}: {e}", g.edges()))?;
            let mut prev = mean(&g).unwrap().mean;
            for s in &run {
                let m = mean(&s.graph).unwrap().mean;
                if m >= prev || s.graph.order() != n || !is_block_graph(&s.graph).unwrap() {
                    return Err(format!("bad step from {:?}", g.edges()));
                }
                prev = m;
            }
            if !run.last().unwrap().graph.is_path() {
                return Err(format!("did not reach P_{n} from {:?}", g.edges()));
            }
            steps += run.len();
        }
    }
    Ok(format!("{graphs} graphs, {steps} steps"))
}

fn criterion_8() -> Outcome {
    let top = if long_run() { 8 } else { 7 };
    min_scan(Family::Connected, 1..=top)
}

/// Mean order of vertex sets inducing subtrees, by direct subset enumeration.
fn subtree_mean(g: &Graph) -> Rational {
    let n = g.order();
    let (mut count, mut total) = (0i64, 0i64);
    for mask in 1u64..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.induced(blockmean_core::VertexSet(mask));
        if h.is_connected() && h.size() + 1 == vs.len() {
            count += 1;
            total += vs.len() as i64;
        }
    }
    Rational::new(total, count)
}

fn criterion_9() -> Outcome {
    let mut trees = 0;
    for n in 2..=9 {
        for g in gen_block_graphs(n)
            .unwrap()
            .into_iter()
            .filter(|g| g.size() + 1 == g.order())
        {
            let t = KTree::from_graph(g.clone(), 1).unwrap();
            if t.mean_sub_k_tree().unwrap() != subtree_mean(&g) {
                return Err(format!("tree {:?}", g.edges()));
            }
            trees += 1;
        }
    }
    let mut rng = seeded_rng(9);
    let mut by_k = BTreeMap::new();
    for k in [2, 3] {
        for _ in 0..50 {
            let n = rng.gen_range(k + 1..=10);
            let t = random_k_tree(k, n, &mut rng).unwrap();
            let (formula, oracle) = (
                t.mean_sub_k_tree().unwrap(),
                t.mean_sub_k_tree_brute().unwrap(),
            );
            if formula != oracle {
                return Err(format!(
                    "k={k} {:?}: formula {formula}, oracle {oracle}",
                    t.graph().edges()
                ));
            }
            *by_k.entry(k).or_insert(0) += 1;
        }
    }
    Ok(format!("{trees} trees, k-trees {by_k:?}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("path and clique closed forms", criterion_1),
        ("fast recursion equals enumeration", criterion_2),
        ("path uniquely minimises M over block graphs", criterion_3),
        ("maximisers are K_3, K_4, then caterpillars", criterion_4),
        ("lemma sweep over block graphs n <= 8", criterion_5),
        ("gluing and stretching families", criterion_6),
        ("improvement steps reach the path", criterion_7),
        (
            "path uniquely minimises M over connected graphs",
            criterion_8,
        ),
        ("sub-k-tree mean formula", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}: {name} ({detail}; {secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}: {name} ({detail}; {secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
