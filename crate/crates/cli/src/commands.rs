use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use blockmean_core::cis::{local_mean, mu, phi, CisReport};
use blockmean_core::ktree::ORACLE_CAP;
use blockmean_core::lemmas::{
    family_edge_gluing, family_stretching, family_vertex_gluing, improve_to_path, sweep,
    FamilyChain, Improvement, Statement, Tally,
};
use blockmean_core::search::{max_conjecture_verdict, min_theorem_verdict, BLOCK_HARD_CAP};
use blockmean_core::{
    canonical_cert, edgelist, is_block_graph, random_k_tree, seeded_rng, EdgeList, Family,
    Generator, Graph, IntPolynomial, KTree, Rational, SearchResult,
};
use serde::Serialize;

use crate::output::{decimal, emit, json, table, Failure, Format, Outcome};
use crate::{cache, Common, FamilyArg};

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    edgelist::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn block_cap(c: &Common) -> usize {
    if c.long_run {
        BLOCK_HARD_CAP
    } else {
        10
    }
}

fn scan_cap(c: &Common, family: Family) -> usize {
    match (family, c.long_run) {
        (Family::Block, false) => 10,
        (Family::Block, true) => 11,
        (Family::Connected, false) => 7,
        (Family::Connected, true) => 8,
    }
}

fn generator(family: Family, n: usize) -> Result<Generator, Failure> {
    let mut gen = Generator::new(family);
    cache::load(&mut gen, n)?;
    gen.level(n)?;
    cache::store(&mut gen, n)?;
    Ok(gen)
}

#[derive(Serialize)]
struct VertexRow {
    vertex: usize,
    #[serde(flatten)]
    local: CisReport,
    mu: Option<Rational>,
}

#[derive(Serialize)]
struct ComputeReport {
    n: usize,
    m: usize,
    block_graph: bool,
    phi: IntPolynomial,
    #[serde(flatten)]
    global: CisReport,
    vertices: Vec<VertexRow>,
}

pub fn compute(c: &Common, input: &Path) -> Outcome {
    let g = read_graph(input)?;
    g.require_connected()?;
    let poly = phi(&g);
    let global = CisReport::from_poly(&poly).expect("connected graphs have subgraphs");
    let vertices = (0..g.order())
        .map(|v| {
            Ok(VertexRow {
                vertex: v,
                local: local_mean(&g, v)?,
                mu: mu(&g, v).ok(),
            })
        })
        .collect::<Result<Vec<_>, blockmean_core::Error>>()?;
    let report = ComputeReport {
        n: g.order(),
        m: g.size(),
        block_graph: is_block_graph(&g)?,
        phi: poly,
        global,
        vertices,
    };
    let opt = |r: &Option<Rational>| r.as_ref().map(ToString::to_string).unwrap_or_default();
    let mut rows = vec![vec![
        "graph".into(),
        String::new(),
        report.global.count.to_string(),
        report.global.total.to_string(),
        report.global.mean.to_string(),
        decimal(&report.global.mean),
        String::new(),
    ]];
    for v in &report.vertices {
        rows.push(vec![
            "vertex".into(),
            v.vertex.to_string(),
            v.local.count.to_string(),
            v.local.total.to_string(),
            v.local.mean.to_string(),
            decimal(&v.local.mean),
            opt(&v.mu),
        ]);
    }
    let header = ["scope", "vertex", "N", "W", "M", "M_decimal", "mu"];
    match c.format {
        Format::Json => json(&report),
        Format::Csv => {
            let coeffs = report.phi.to_decimal_strings().join(" ");
            let mut header = header.to_vec();
            header.push("phi");
            for (i, r) in rows.iter_mut().enumerate() {
                r.push(if i == 0 {
                    coeffs.clone()
                } else {
                    String::new()
                });
            }
            crate::output::csv_rows(&header, &rows)
        }
        Format::Table => {
            println!("phi = {}", report.phi);
            println!("M = {}", crate::output::shown(&report.global.mean));
            table(&header, &rows)
        }
    }
}

#[derive(Serialize)]
struct VerifySummary<'a> {
    max_n: usize,
    graphs: usize,
    tallies: &'a BTreeMap<Statement, Tally>,
    failures: Vec<&'a blockmean_core::Verdict>,
}

pub fn verify(c: &Common, max_n: usize, statement: Option<&str>) -> Outcome {
    let cap = block_cap(c);
    if max_n == 0 || max_n > cap {
        return Err(Failure::Usage(format!(
            "--max-n must be in 1..={cap}{}",
            if c.long_run {
                ""
            } else {
                " (raise with --long-run)"
            }
        )));
    }
    let only = match statement {
        None => None,
        Some(s) => match Statement::parse(s) {
            Some(st) if Statement::SWEEP.contains(&st) => Some(vec![st]),
            _ => {
                let names: Vec<&str> = Statement::SWEEP.iter().map(|s| s.name()).collect();
                return Err(Failure::Usage(format!(
                    "unknown statement {s:?}; expected one of {}",
                    names.join(", ")
                )));
            }
        },
    };
    let mut gen = generator(Family::Block, max_n)?;
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend_from_slice(gen.level(n)?);
    }
    let report = sweep(&graphs, only.as_deref());
    let failures: Vec<_> = report.failures().collect();
    match c.format {
        Format::Json => json(&VerifySummary {
            max_n,
            graphs: report.graphs,
            tallies: &report.tallies,
            failures: failures.clone(),
        })?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .verdicts
                .iter()
                .filter(|v| v.skipped.is_none())
                .map(|v| {
                    vec![
                        v.witness.cert.to_hex(),
                        v.statement.to_string(),
                        v.holds.to_string(),
                        v.equality.to_string(),
                        v.lhs.to_string(),
                        v.rhs.to_string(),
                    ]
                })
                .collect();
            crate::output::csv_rows(
                &["cert", "statement", "holds", "equality", "lhs", "rhs"],
                &rows,
            )?;
        }
        Format::Table => {
            println!("{} block graphs of order 1..={max_n}", report.graphs);
            let rows: Vec<Vec<String>> = report
                .tallies
                .iter()
                .map(|(s, t)| {
                    vec![
                        s.to_string(),
                        t.checked.to_string(),
                        t.skipped.to_string(),
                        t.failed.to_string(),
                        t.equalities.to_string(),
                    ]
                })
                .collect();
            table(
                &["statement", "checked", "skipped", "failed", "equalities"],
                &rows,
            )?;
            for f in &failures {
                println!(
                    "FAILED {} cert={} at={:?} lhs={} rhs={}",
                    f.statement, f.witness.cert, f.witness.at, f.lhs, f.rhs
                );
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verdict(format!(
            "{} failed verdicts",
            failures.len()
        )))
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || {
        Failure::Usage(format!(
            "--n expects an order or a range like 3..8, got {s:?}"
        ))
    };
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

#[derive(Serialize)]
struct SearchRow {
    #[serde(flatten)]
    result: SearchResult,
    min_path: bool,
    max_caterpillar: Option<bool>,
}

pub fn search(c: &Common, family: Family, range: &str) -> Outcome {
    let (lo, hi) = parse_range(range)?;
    let cap = scan_cap(c, family);
    if hi > cap {
        return Err(Failure::Usage(format!(
            "{family} scans are capped at n = {cap}{}",
            if c.long_run {
                ""
            } else {
                " (raise with --long-run)"
            }
        )));
    }
    let mut gen = generator(family, hi)?;
    let mut out = Vec::new();
    for n in lo..=hi {
        let result = gen.scan(n)?;
        eprintln!(
            "n={n}: {} graphs in {:.3}s",
            result.family_count,
            result.elapsed.as_secs_f64()
        );
        let min_path = min_theorem_verdict(&result).holds;
        let max_caterpillar =
            (family == Family::Block && n >= 3).then(|| max_conjecture_verdict(&result).holds);
        out.push(SearchRow {
            result,
            min_path,
            max_caterpillar,
        });
    }
    let join = |cs: &[blockmean_core::CanonicalCert]| {
        cs.iter().map(|c| c.to_hex()).collect::<Vec<_>>().join(" ")
    };
    let rows: Vec<Vec<String>> = out
        .iter()
        .map(|r| {
            let s = &r.result;
            vec![
                s.n.to_string(),
                s.family.to_string(),
                s.family_count.to_string(),
                s.min_m.to_string(),
                decimal(&s.min_m),
                s.max_m.to_string(),
                decimal(&s.max_m),
                join(&s.argmin),
                join(&s.argmax),
                r.min_path.to_string(),
                r.max_caterpillar.map(|b| b.to_string()).unwrap_or_default(),
            ]
        })
        .collect();
    let header = [
        "n",
        "family",
        "count",
        "min_m",
        "min_decimal",
        "max_m",
        "max_decimal",
        "argmin",
        "argmax",
        "min_path",
        "max_caterpillar",
    ];
    emit(c.format, &header, &rows, &out)?;
    let failed: Vec<usize> = out
        .iter()
        .filter(|r| !r.min_path || r.max_caterpillar == Some(false))
        .map(|r| r.result.n)
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verdict(format!(
            "extremal checks failed at n = {failed:?}"
        )))
    }
}

#[derive(Serialize)]
struct KTreeReport {
    ktree: KTree,
    k_cliques: usize,
    dual: EdgeList,
    dual_cis: CisReport,
    mean_formula: Rational,
    mean_oracle: Option<Rational>,
}

pub fn ktree(c: &Common, k: usize, input: Option<&Path>, n: Option<usize>) -> Outcome {
    let t = match (input, n) {
        (Some(path), None) => {
            let g = read_graph(path)?;
            KTree::from_graph(g, k).map_err(|e| Failure::Precondition(e.to_string()))?
        }
        (None, Some(n)) => random_k_tree(k, n, &mut seeded_rng(c.seed))?,
        _ => return Err(Failure::Usage("give exactly one of --input and --n".into())),
    };
    let dual = t.check_dual()?;
    let report = KTreeReport {
        k_cliques: t.k_cliques().len(),
        dual: EdgeList::from(&dual),
        dual_cis: blockmean_core::cis::mean(&dual)?,
        mean_formula: t.mean_sub_k_tree()?,
        mean_oracle: (t.order() <= ORACLE_CAP)
            .then(|| t.mean_sub_k_tree_brute())
            .transpose()?,
        ktree: t,
    };
    let opt = |r: &Option<Rational>| r.as_ref().map(ToString::to_string).unwrap_or_default();
    let row = vec![
        report.ktree.k().to_string(),
        report.ktree.order().to_string(),
        report.k_cliques.to_string(),
        dual.order().to_string(),
        report.dual_cis.count.to_string(),
        report.dual_cis.total.to_string(),
        report.mean_formula.to_string(),
        decimal(&report.mean_formula),
        opt(&report.mean_oracle),
    ];
    let header = [
        "k",
        "n",
        "k_cliques",
        "dual_n",
        "dual_N",
        "dual_W",
        "mean",
        "mean_decimal",
        "oracle",
    ];
    emit(c.format, &header, &[row], &report)?;
    match &report.mean_oracle {
        Some(o) if *o != report.mean_formula => Err(Failure::Verdict(format!(
            "oracle mean {o} differs from formula {}",
            report.mean_formula
        ))),
        _ => Ok(()),
    }
}

fn parse_vertices(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("--at expects vertex numbers, got {s:?}")))
        })
        .collect()
}

pub fn family(c: &Common, kind: FamilyArg, input: &Path, at: &str, n: usize) -> Outcome {
    let h = read_graph(input)?;
    let at = parse_vertices(at)?;
    let arity = |k: usize| {
        if at.len() == k {
            Ok(())
        } else {
            Err(Failure::Usage(format!("--at needs {k} vertex(es)")))
        }
    };
    let chain: FamilyChain = match kind {
        FamilyArg::VertexGluing => {
            arity(1)?;
            family_vertex_gluing(&h, at[0], n)?
        }
        FamilyArg::EdgeGluing => {
            arity(2)?;
            family_edge_gluing(&h, at[0], at[1], n)?
        }
        FamilyArg::Stretching => {
            arity(1)?;
            family_stretching(&h, at[0], n)?
        }
    };
    let rows: Vec<Vec<String>> = chain
        .members
        .iter()
        .zip(chain.graphs())
        .map(|(m, g)| {
            vec![
                m.s.to_string(),
                g.order().to_string(),
                m.engine.count.to_string(),
                m.engine.total.to_string(),
                m.count_closed.to_string(),
                m.total_closed.to_string(),
                m.engine.mean.to_string(),
                decimal(&m.engine.mean),
                canonical_cert(&g).to_hex(),
            ]
        })
        .collect();
    let header = [
        "s",
        "order",
        "N",
        "W",
        "N_closed",
        "W_closed",
        "M",
        "M_decimal",
        "cert",
    ];
    emit(c.format, &header, &rows, &chain)?;
    if c.format == Format::Table {
        let sym = chain
            .symmetry_ok
            .map(|b| b.to_string())
            .unwrap_or_else(|| "n/a".into());
        println!(
            "chain_ok={} symmetry_ok={sym} closed_form_ok={}",
            chain.chain_ok, chain.closed_form_ok
        );
    }
    if chain.all_ok() {
        Ok(())
    } else {
        Err(Failure::Verdict("family checks failed".into()))
    }
}

#[derive(Serialize)]
struct ImproveReport<'a> {
    start: EdgeList,
    steps: Vec<(&'a Improvement, EdgeList)>,
}

pub fn improve(c: &Common, input: &Path) -> Outcome {
    let g = read_graph(input)?;
    let steps = if g.is_path() {
        Vec::new()
    } else {
        improve_to_path(&g)?
    };
    let rows: Vec<Vec<String>> = steps
        .iter()
        .enumerate()
        .map(|(i, s)| {
            vec![
                (i + 1).to_string(),
                serde_json::to_value(s.lemma)
                    .ok()
                    .and_then(|v| v.as_str().map(String::from))
                    .unwrap_or_default(),
                format!("{:?}", s.at),
                s.before.to_string(),
                s.after.to_string(),
                decimal(&s.after),
                canonical_cert(&s.graph).to_hex(),
            ]
        })
        .collect();
    let report = ImproveReport {
        start: EdgeList::from(&g),
        steps: steps
            .iter()
            .map(|s| (s, EdgeList::from(&s.graph)))
            .collect(),
    };
    let header = [
        "step",
        "lemma",
        "at",
        "before",
        "after",
        "after_decimal",
        "cert",
    ];
    emit(c.format, &header, &rows, &report)
}
