//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p gallai --test acceptance`.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use gallai::cli::{self, Cli, DecompositionDocument};
use gallai::constructions::{construct, Rotation};
use gallai::enumeration::{
    canonical_form, count_labeled, enumerate_decompositions, labeled_decompositions,
    EnumerationConfig,
};
use gallai::removal::{is_star, is_tadpole, remove_star, remove_tadpole, trim_path_ends};
use gallai::{
    complete_graph, gallai_bound, is_connected, verify_decomposition, Edge, LabeledGraph, Path,
    PathDecomposition, Permutation, Vertex,
};

use clap::Parser;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    check(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn hamiltonian(d: &PathDecomposition) -> bool {
    d.paths().iter().all(|p| p.vertices().len() == d.n())
}

fn complement_of(host: &LabeledGraph) -> BTreeSet<Edge> {
    complete_graph(host.n())
        .unwrap()
        .edges()
        .iter()
        .copied()
        .filter(|e| !host.contains(*e))
        .collect()
}

fn construction_bound() -> Outcome {
    let start = Instant::now();
    for n in 2..=40 {
        let d = construct(n).map_err(|e| format!("n={n}: {e}"))?;
        let report = verify_decomposition(&d);
        check(report.passed(), || format!("n={n}: {report}"))?;
        let bound = gallai_bound(n).unwrap();
        check(d.paths().len() == bound, || {
            format!("n={n}: {} paths, bound {bound}", d.paths().len())
        })?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("n = 2..=40 verified with exactly ⌊(n+1)/2⌋ paths".into())
}

fn walecki_structure() -> Outcome {
    let start = Instant::now();
    for n in (2..=40).step_by(2) {
        let d = construct(n).unwrap();
        check(hamiltonian(&d), || format!("n={n}: non-Hamiltonian path"))?;
        let first = d.paths()[0].vertices();
        for (t, p) in d.paths().iter().enumerate() {
            let rotated = Path::new(Rotation::new(n, t).unwrap().apply_all(first)).unwrap();
            check(&rotated == p, || {
                format!("n={n}: path {t} is {p}, rotation gives {rotated}")
            })?;
        }
    }
    within(start, Duration::from_secs(1))?;
    Ok("even n = 2..=40 Hamiltonian, path t = rotation of path 0 by t".into())
}

fn star_removal() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for n in 3..=20 {
        for m in 1..=n - 2 {
            let s = remove_star(n, m).map_err(|e| format!("({n},{m}): {e}"))?;
            let removed = complement_of(&s.host);
            check(is_connected(&s.host), || {
                format!("({n},{m}): host disconnected")
            })?;
            check(s.host.edge_count() == n * (n - 1) / 2 - m, || {
                format!("({n},{m}): edge count")
            })?;
            check(removed == s.record.removed_edges, || {
                format!("({n},{m}): record mismatch")
            })?;
            let center = s.record.center.unwrap();
            check(removed.len() == m && is_star(&removed, center), || {
                format!("({n},{m}): not a star")
            })?;
            let report = verify_decomposition(&s.decomposition);
            check(report.passed(), || format!("({n},{m}): {report}"))?;
            cases += 1;
        }
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("{cases} (n, m) cases, n = 3..=20"))
}

fn tadpole_removal() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 4..=20 {
        for m in 3..=n - 1 {
            cases += 1;
            let s = match remove_tadpole(n, m) {
                Ok(s) => s,
                Err(e) => {
                    failures.push(format!("({n},{m}): {e}"));
                    continue;
                }
            };
            let removed = complement_of(&s.host);
            let report = verify_decomposition(&s.decomposition);
            let problems: Vec<&str> = [
                (!is_connected(&s.host), "host disconnected"),
                (
                    s.host.edge_count() != n * (n - 1) / 2 - (m + 1),
                    "edge count",
                ),
                (removed != s.record.removed_edges, "record mismatch"),
                (!is_tadpole(&removed, m), "removed subgraph is not T_{m,1}"),
                (!report.passed(), "verification"),
            ]
            .into_iter()
            .filter_map(|(bad, what)| bad.then_some(what))
            .collect();
            if !problems.is_empty() {
                failures.push(format!("({n},{m}): {}", problems.join(", ")));
            }
        }
    }
    within(start, Duration::from_secs(5))?;
    check(failures.is_empty(), || {
        format!(
            "{} of {cases} cases fail: {}",
            failures.len(),
            failures.join("; ")
        )
    })?;
    Ok(format!("{cases} (n, m) cases, n = 4..=20"))
}

fn k6_census() -> Outcome {
    let start = Instant::now();
    let classes =
        enumerate_decompositions(6, &EnumerationConfig::default()).map_err(|e| e.to_string())?;
    check(classes.len() == 3, || format!("{} classes", classes.len()))?;
    for c in &classes {
        check(
            c.representative.paths().len() == 3 && hamiltonian(&c.representative),
            || format!("class {} is not three Hamiltonian paths", c.canonical),
        )?;
    }
    within(start, Duration::from_secs(10))?;
    Ok("3 classes, each of 3 Hamiltonian paths".into())
}

fn small_n_oracle() -> Outcome {
    let start = Instant::now();
    let mut totals = Vec::new();
    for n in 2..=5 {
        let classes = enumerate_decompositions(n, &EnumerationConfig::default())
            .map_err(|e| e.to_string())?;
        let orbit_total: u64 = classes.iter().map(|c| c.labeled_count).sum();
        let naive = count_labeled(n).map_err(|e| e.to_string())?;
        check(orbit_total == naive, || {
            format!("n={n}: orbit sum {orbit_total}, naive {naive}")
        })?;
        let forms: BTreeSet<_> = classes.iter().map(|c| c.canonical.clone()).collect();
        for d in labeled_decompositions(n).unwrap() {
            let form = canonical_form(&d).map_err(|e| e.to_string())?;
            check(forms.contains(&form), || {
                format!("n={n}: naive form {form} missing")
            })?;
        }
        totals.push(format!("{n}:{naive}"));
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("labeled totals agree ({})", totals.join(", ")))
}

fn recorded_census(n: usize) -> Option<(usize, u64)> {
    include_str!("data/census.txt")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|x| x.parse::<u64>().unwrap())
                .collect::<Vec<_>>()
        })
        .find(|row| row[0] == n as u64)
        .map(|row| (row[1] as usize, row[2]))
}

fn k8_census() -> Outcome {
    let start = Instant::now();
    let classes =
        enumerate_decompositions(8, &EnumerationConfig::default()).map_err(|e| e.to_string())?;
    let hamiltonian_classes = classes
        .iter()
        .filter(|c| c.representative.paths().len() == 4 && hamiltonian(&c.representative))
        .count();
    check(hamiltonian_classes >= 2, || {
        format!("{hamiltonian_classes} Hamiltonian classes")
    })?;
    let own = canonical_form(&construct(8).unwrap()).unwrap();
    check(classes.iter().any(|c| c.canonical == own), || {
        "construct(8) class missing".into()
    })?;
    let labeled: u64 = classes.iter().map(|c| c.labeled_count).sum();
    let recorded = recorded_census(8).ok_or("no recorded K_8 census")?;
    check(recorded == (classes.len(), labeled), || {
        format!(
            "found ({}, {labeled}), recorded {recorded:?}",
            classes.len()
        )
    })?;
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "{} classes ({labeled} labeled), all Hamiltonian: {}",
        classes.len(),
        hamiltonian_classes == classes.len()
    ))
}

/// Random decomposition of K_n: grow paths along random unused edges.
fn random_decomposition(n: usize, rng: &mut ChaCha8Rng) -> PathDecomposition {
    let host = complete_graph(n).unwrap();
    let mut unused: BTreeSet<Edge> = host.edges().clone();
    let mut paths = Vec::new();
    while !unused.is_empty() {
        let start = *unused.iter().nth(rng.gen_range(0..unused.len())).unwrap();
        unused.remove(&start);
        let mut p: Vec<Vertex> = vec![start.lo(), start.hi()];
        while rng.gen_bool(0.8) {
            let at_front = rng.gen_bool(0.5);
            let tip = if at_front { p[0] } else { p[p.len() - 1] };
            let options: Vec<Vertex> = (1..=n)
                .filter(|v| !p.contains(v) && unused.contains(&Edge::new(tip, *v)))
                .collect();
            let Some(&v) = options.choose(rng) else { break };
            unused.remove(&Edge::new(tip, v));
            if at_front {
                p.insert(0, v);
            } else {
                p.push(v);
            }
        }
        paths.push(Path::new(p).unwrap());
    }
    PathDecomposition::new(host, paths)
}

fn canonical_invariance() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a11a1);
    for trial in 0..1000 {
        let n = rng.gen_range(2..=7);
        let d = random_decomposition(n, &mut rng);
        let mut images: Vec<Vertex> = (1..=n).collect();
        images.shuffle(&mut rng);
        let shuffled = d.relabel(&Permutation::new(images).unwrap());
        let a = canonical_form(&d).map_err(|e| format!("trial {trial}: {e}"))?;
        let b = canonical_form(&shuffled).map_err(|e| format!("trial {trial}: {e}"))?;
        check(a == b, || format!("trial {trial}: {a} vs {b}"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok("1000 seeded pairs, n ≤ 7".into())
}

fn trim_replay() -> Outcome {
    let d = construct(7).unwrap();
    // End edge then side edge at vertex 7, path by path, stopping at five.
    let mut order = Vec::new();
    for p in d.paths() {
        let s = p.vertices();
        let l = s.len();
        let (end, side) = if s[1] == 7 {
            (Edge::new(s[0], 7), Edge::new(7, s[2]))
        } else if s[l - 2] == 7 {
            (Edge::new(s[l - 1], 7), Edge::new(7, s[l - 3]))
        } else {
            continue;
        };
        order.extend([end, side]);
    }
    order.truncate(5);
    check(order.len() == 5, || {
        format!("only {} star edges next to path ends", order.len())
    })?;
    let (host, trimmed) = trim_path_ends(&d, &order).map_err(|e| e.to_string())?;
    let s = remove_star(7, 5).map_err(|e| e.to_string())?;
    check(host == s.host, || "hosts differ".into())?;
    check(
        trimmed.sorted_paths() == s.decomposition.sorted_paths(),
        || "paths differ from remove_star(7, 5)".into(),
    )?;
    let shown: Vec<String> = order.iter().map(|e| e.to_string()).collect();
    Ok(format!(
        "order {} matches remove_star(7, 5)",
        shown.join(" ")
    ))
}

fn run_cli(args: &[&str], stdin: &str) -> (i32, String) {
    let cli = Cli::try_parse_from(std::iter::once("gallai").chain(args.iter().copied())).unwrap();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(cli, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn dot_graphs(text: &str) -> Vec<String> {
    let mut graphs = Vec::new();
    let mut current = String::new();
    for line in text.lines() {
        current.push_str(line);
        current.push('\n');
        if line == "}" {
            graphs.push(std::mem::take(&mut current));
        }
    }
    graphs
}

fn serialization() -> Outcome {
    let mut commands: Vec<Vec<String>> = Vec::new();
    for n in 2..=12 {
        commands.push(vec!["construct".into(), "--n".into(), n.to_string()]);
    }
    for (n, m) in [(7, 5), (6, 2), (9, 7), (10, 8)] {
        commands.push(
            vec![
                "remove",
                "--kind",
                "star",
                "--n",
                &n.to_string(),
                "--m",
                &m.to_string(),
            ]
            .into_iter()
            .map(String::from)
            .collect(),
        );
    }
    for (n, m) in [(8, 6), (7, 4), (9, 8), (11, 5)] {
        commands.push(
            vec![
                "remove",
                "--kind",
                "tadpole",
                "--n",
                &n.to_string(),
                "--m",
                &m.to_string(),
            ]
            .into_iter()
            .map(String::from)
            .collect(),
        );
    }
    commands.push(vec![
        "feasible".into(),
        "--n".into(),
        "7".into(),
        "--edges".into(),
        "1-7,2-7,3-7".into(),
    ]);

    let mut documents = 0;
    let mut graphs = 0;
    for args in &commands {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, json) = run_cli(&args, "");
        check(code == 0, || format!("{args:?} exited {code}"))?;
        let doc = DecompositionDocument::from_json(&json).map_err(|e| format!("{args:?}: {e}"))?;
        check(doc.to_json() == json, || {
            format!("{args:?}: JSON round trip differs")
        })?;
        documents += 1;

        for extra in [
            &["--format", "dot"][..],
            &["--format", "dot", "--split"][..],
        ] {
            let full: Vec<&str> = args.iter().copied().chain(extra.iter().copied()).collect();
            let (code, dot) = run_cli(&full, "");
            check(code == 0, || format!("{full:?} exited {code}"))?;
            for g in dot_graphs(&dot) {
                graphviz_rust::parse(&g).map_err(|e| format!("{full:?}: {e}"))?;
                graphs += 1;
            }
        }

        let (code, trimmed) = run_cli(&["trim", "--edges", ""], &json);
        check(code == 0, || format!("trim of {args:?} exited {code}"))?;
        let doc = DecompositionDocument::from_json(&trimmed).map_err(|e| e.to_string())?;
        check(doc.to_json() == trimmed, || {
            format!("trim of {args:?}: round trip differs")
        })?;
        documents += 1;
    }

    let (code, census) = run_cli(&["enumerate", "--n", "6"], "");
    check(code == 0, || "enumerate exited non-zero".into())?;
    let census: serde_json::Value = serde_json::from_str(&census).map_err(|e| e.to_string())?;
    for class in census["classes"].as_array().ok_or("no classes")? {
        let doc: DecompositionDocument =
            serde_json::from_value(class.clone()).map_err(|e| e.to_string())?;
        let again = DecompositionDocument::from_json(&doc.to_json()).map_err(|e| e.to_string())?;
        check(again == doc, || "census document round trip differs".into())?;
        documents += 1;
    }
    Ok(format!(
        "{documents} JSON documents byte-stable, {graphs} DOT graphs parsed"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("construction bound", construction_bound),
        ("Walecki structure", walecki_structure),
        ("star removal", star_removal),
        ("tadpole removal", tadpole_removal),
        ("K_6 census", k6_census),
        ("small-n oracle equivalence", small_n_oracle),
        ("K_8 census", k8_census),
        ("canonical-form invariance", canonical_invariance),
        ("trim replay", trim_replay),
        ("serialization", serialization),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
