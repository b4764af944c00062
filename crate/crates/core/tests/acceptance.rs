//! Acceptance suite. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads 1` to see them
//! in order.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use homcx::cli;
use homcx::complex::CellSearch;
use homcx::counterexample::{
    parse_edge, parse_grid, verify_certificates, verify_counts, verify_graph, Class, Tally, PATH_CERTIFICATE,
    SQUARE_EDGES,
};
use homcx::homology::ChainComplex;
use homcx::{build_flip_graph, enumerate_homs, Graph};

fn report(id: &str, what: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("[PASS] {id}: {what}");
    } else {
        println!("[FAIL] {id}: {what}");
        for f in failures {
            println!("       {f}");
        }
    }
    assert!(failures.is_empty(), "{id} failed: {failures:#?}");
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("homcx").chain(args.iter().copied()), &mut out, &mut err);
    let mut text = String::from_utf8(out).unwrap();
    text.push_str(&String::from_utf8(err).unwrap());
    (code, text)
}

fn json_of(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, text) = run_cli(&full);
    assert_eq!(code, 0, "{args:?}: {text}");
    serde_json::from_str(&text).unwrap()
}

macro_rules! expect {
    ($fails:ident, $cond:expr, $($msg:tt)+) => {
        if !$cond {
            $fails.push(format!($($msg)+));
        }
    };
}

#[test]
fn ac1_verify_paper_end_to_end() {
    let start = Instant::now();
    let (code, text) = run_cli(&["verify-paper", "--format", "json"]);
    let elapsed = start.elapsed();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mut f = Vec::new();
    expect!(f, code == 0, "exit code {code}");
    expect!(f, v["chi"] == 5, "chi = {}", v["chi"]);
    expect!(f, v["total"] == 4080, "total = {}", v["total"]);
    expect!(f, v["components"] == 1, "components = {}", v["components"]);
    expect!(f, v["pass"] == true, "pass = {}", v["pass"]);
    expect!(f, elapsed < Duration::from_secs(10), "took {elapsed:?}");
    report("AC1", &format!("verify-paper: chi=5, 4080 colorings, 1 component ({elapsed:.2?})"), &f);
}

#[test]
fn ac2_census_exactness() {
    let g9 = Graph::counterexample_g9();
    let homs = enumerate_homs(&g9, &Graph::complete(5).unwrap()).unwrap();
    let census = verify_counts(homs.colorings());
    let mut f = census.failures.clone();
    expect!(f, census.per_signature.len() == 120, "{} signatures", census.per_signature.len());
    for (sig, tally) in &census.per_signature {
        expect!(f, *tally == Tally::EXPECTED, "signature {sig:?}: {tally:?}");
    }
    expect!(f, census.squares.len() == 960, "{} template squares", census.squares.len());
    for (sq, members) in &census.squares {
        expect!(f, members.len() == 4, "{sq}: {} completions", members.len());
    }
    expect!(f, census.total == 4080, "total {}", census.total);
    let h_a: BTreeSet<String> = ["514", "515", "545", "541"].map(String::from).into();
    let h_c: BTreeSet<String> = ["245", "545", "525", "524"].map(String::from).into();
    let got_a = census.central_rows(&"h_{1234,a}".parse().unwrap());
    let got_c = census.central_rows(&"h_{1234,c}".parse().unwrap());
    expect!(f, got_a == h_a, "h_{{1234,a}} rows {got_a:?}");
    expect!(f, got_c == h_c, "h_{{1234,c}} rows {got_c:?}");
    report("AC2", "census s=1 t=1 h=16 v=16 per signature, 960 squares x 4, quoted central rows", &f);
}

#[test]
fn ac3_certificate_suite() {
    let g9 = Graph::counterexample_g9();
    let homs = enumerate_homs(&g9, &Graph::complete(5).unwrap()).unwrap();
    let census = verify_counts(homs.colorings());
    let fg = build_flip_graph(homs);
    let mut f = Vec::new();

    let path: Vec<_> = PATH_CERTIFICATE.iter().map(|s| parse_grid(s).unwrap()).collect();
    for w in path.windows(2) {
        expect!(f, fg.is_edge(&w[0], &w[1]).unwrap(), "path step {} -> {}", w[0], w[1]);
    }
    let classify = |c: &homcx::Coloring| {
        let i = fg.homset().position(c).unwrap();
        census.classified[i].class()
    };
    for c in &path {
        expect!(f, classify(c).to_string() == "h_{1234,a}", "path member {c} in {}", classify(c));
    }
    for cert in &SQUARE_EDGES {
        let (a, b) = parse_edge(cert.edge).unwrap();
        expect!(f, fg.is_edge(&a, &b).unwrap(), "{} is not a flip", cert.edge);
        let (want_a, want_b): (Class, Class) = (cert.from.parse().unwrap(), cert.to.parse().unwrap());
        expect!(f, classify(&a) == want_a, "{}: first end in {}", cert.edge, classify(&a));
        expect!(f, classify(&b) == want_b, "{}: second end in {}", cert.edge, classify(&b));
    }
    let all = verify_certificates(&fg, &census);
    f.extend(all.failures.iter().cloned());
    report("AC3", &format!("displayed path, six two-colored edges, {} certificate checks", all.checked), &f);
}

#[test]
fn ac4_k2_sphere_family() {
    let mut f = Vec::new();
    let timed = |args: &[&str]| {
        let t = Instant::now();
        let v = json_of(args);
        (v, t.elapsed())
    };
    let limit = Duration::from_secs(5);

    let (v, t) = timed(&["hom", "count", "--g", "family:complete:2", "--h", "family:complete:2"]);
    expect!(f, v["count"] == 2 && t < limit, "Hom(K2,K2) count {} in {t:?}", v["count"]);
    let (v, t) = timed(&["flip", "components", "--g", "family:complete:2", "--h", "family:complete:2"]);
    expect!(f, v["components"] == 2 && t < limit, "Hom(K2,K2) components {} in {t:?}", v["components"]);

    let fg = build_flip_graph(enumerate_homs(&Graph::complete(2).unwrap(), &Graph::complete(3).unwrap()).unwrap());
    let six_cycle =
        fg.homset().len() == 6 && (0..6).all(|i| fg.neighbors(i).len() == 2) && fg.components().component_count == 1;
    expect!(f, six_cycle, "Hom(K2,K3) flip graph is not a 6-cycle");
    let (v, t) = timed(&["complex", "homology", "--g", "family:complete:2", "--h", "family:complete:3"]);
    expect!(
        f,
        v["betti_gf2"] == serde_json::json!([1, 1]) && t < limit,
        "Hom(K2,K3) betti {} in {t:?}",
        v["betti_gf2"]
    );
    expect!(f, v["cells"] == serde_json::json!([6, 6]), "Hom(K2,K3) cells {}", v["cells"]);

    let (v, t) = timed(&["complex", "homology", "--g", "family:complete:2", "--h", "family:complete:4"]);
    let total: u64 = v["cells"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).sum();
    expect!(f, total == 50, "Hom(K2,K4) has {total} cells");
    expect!(f, v["euler"] == 2, "Hom(K2,K4) euler {}", v["euler"]);
    expect!(
        f,
        v["betti_gf2"] == serde_json::json!([1, 0, 1]) && t < limit,
        "Hom(K2,K4) betti {} in {t:?}",
        v["betti_gf2"]
    );
    report("AC4", "Hom(K2,Kn) matches S^(n-2): K2 -> 2 components, K3 -> (1,1), K4 -> 50 cells, euler 2, (1,0,1)", &f);
}

#[test]
fn ac5_oracle_equivalence() {
    let standard = common::small_families();
    let induced = common::g9_induced_six();
    let mut f = Vec::new();
    let (mut hom_pairs, mut flip_pairs, mut complexes) = (0, 0, 0);

    let sources: Vec<&(String, Graph)> = standard.iter().chain(&induced).collect();
    let targets: Vec<&(String, Graph)> = standard.iter().chain(induced.iter().step_by(21)).collect();
    for (gn, g) in &sources {
        for (hn, h) in &targets {
            if (h.n() as f64).powi(g.n() as i32) > 1e6 {
                continue;
            }
            hom_pairs += 1;
            let brute = common::brute_homs(g, h);
            let homs = enumerate_homs(g, h).unwrap();
            let got: Vec<Vec<u8>> = homs.colorings().iter().map(|c| c.as_slice().to_vec()).collect();
            expect!(f, got == brute, "homs {gn} -> {hn}: {} vs brute {}", got.len(), brute.len());
            if got.len() <= 2000 {
                flip_pairs += 1;
                let fg = build_flip_graph(homs);
                let mine: Vec<(usize, usize)> = (0..got.len())
                    .flat_map(|i| fg.neighbors(i).iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
                    .collect();
                let pairs = common::brute_flip_pairs(&brute);
                expect!(f, mine == pairs, "flip adjacency {gn} -> {hn}");
                let comps = common::brute_components(brute.len(), &pairs);
                expect!(f, fg.components().component_count == comps, "components {gn} -> {hn}");
            }
        }
    }

    // Chain complexes: every standard pair whose order complex fits the caps.
    let search = CellSearch { max_cells: 5_000, ..Default::default() };
    for (gn, g) in &standard {
        for (hn, h) in &standard {
            let Ok(fp) = search.run(g, h) else { continue };
            let Ok(cx) = ChainComplex::order_complex(&fp, 200_000) else { continue };
            complexes += 1;
            expect!(f, cx.boundary_squares_to_zero(), "boundary of boundary nonzero for {gn} -> {hn}");
        }
    }
    expect!(f, complexes >= 20, "only {complexes} chain complexes checked");
    report(
        "AC5",
        &format!(
            "{hom_pairs} hom pairs and {flip_pairs} flip graphs match brute force; d∘d = 0 on {complexes} complexes"
        ),
        &f,
    );
}

#[test]
fn ac6_mutation_robustness() {
    let start = Instant::now();
    let g9 = Graph::counterexample_g9();
    let base = common::brute_count_colorings(&g9, 5);
    let mut f = Vec::new();
    expect!(f, base == 4080, "brute force count of g9 is {base}");
    for idx in 0..g9.edge_count() {
        let mutant = g9.without_edge(idx);
        let four = common::brute_count_colorings(&mutant, 4);
        let five = common::brute_count_colorings(&mutant, 5);
        expect!(f, four > 0 || five != 4080, "deleting edge {:?} changes neither chi nor the count", g9.edges()[idx]);
        let r = verify_graph(&mutant, 1);
        expect!(f, !r.pass, "verify passes without edge {:?}", g9.edges()[idx]);
        expect!(f, r.chi != 5 || r.total != 4080, "edge {:?}: chi {} total {}", g9.edges()[idx], r.chi, r.total);
        let (code, _) = run_cli(&["verify-paper", "--delete-edge", &idx.to_string()]);
        expect!(f, code == cli::EXIT_VERIFY, "edge {idx}: exit code {code}");
    }
    let elapsed = start.elapsed();
    expect!(f, elapsed < Duration::from_secs(60), "sweep took {elapsed:?}");
    report("AC6", &format!("all 22 single-edge deletions fail verification ({elapsed:.2?})"), &f);
}

#[test]
fn ac7_thread_determinism() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["chi", "--family", "counterexample_g9"],
        vec!["chi", "--family", "kneser:5,2"],
        vec!["hom", "count", "--g", "family:counterexample_g9", "--h", "family:complete:5"],
        vec!["hom", "list", "--g", "family:counterexample_g9", "--h", "family:complete:5"],
        vec!["hom", "list", "--g", "family:cycle:5", "--h", "family:complete:3", "--format", "json"],
        vec!["flip", "components", "--g", "family:counterexample_g9", "--h", "family:complete:5"],
        vec!["flip", "components", "--g", "family:complete:2", "--h", "family:complete:2", "--format", "json"],
        vec!["flip", "export", "--g", "family:counterexample_g9", "--h", "family:complete:5", "--format", "dot"],
        vec![
            "flip",
            "path",
            "--g",
            "family:counterexample_g9",
            "--h",
            "family:complete:5",
            "--from",
            "1 2 3 4 3 4 1 2 5",
            "--to",
            "1 2 3 4 4 1 2 3 5",
        ],
        vec!["complex", "cells", "--g", "family:cycle:5", "--h", "family:complete:4"],
        vec!["complex", "homology", "--g", "family:complete:2", "--h", "family:complete:4", "--format", "json"],
        vec!["complex", "homology", "--g", "family:path:3", "--h", "family:complete:3"],
        vec!["verify-paper"],
        vec!["verify-paper", "--format", "json"],
        vec!["verify-paper", "--delete-edge", "3"],
    ];
    let mut f = Vec::new();
    for cmd in &commands {
        let mut one = cmd.clone();
        one.extend(["--threads", "1"]);
        let mut four = cmd.clone();
        four.extend(["--threads", "4"]);
        let (c1, o1) = run_cli(&one);
        let (c4, o4) = run_cli(&four);
        expect!(f, c1 == c4 && o1 == o4, "{cmd:?} differs between 1 and 4 threads");
        expect!(f, !o1.is_empty(), "{cmd:?} produced no output");
    }
    report("AC7", &format!("{} commands byte-identical with --threads 1 and 4", commands.len()), &f);
}
