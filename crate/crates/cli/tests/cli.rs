use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use signed_graphs::balance::NegativeCycle;
use signed_graphs::bounds::binomial;
use signed_graphs::coloring::BalancedColoring;
use signed_graphs::io;
use signed_graphs::kst::HypothesisViolation;
use signed_graphs::search::SearchReport;
use signed_graphs::{Sign, SignedGraph};
use signed_graphs_cli::{execute, Execution};

fn run(args: &[&str]) -> Execution {
    execute(std::iter::once("sgraph").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let r = run(&full);
    assert!(r.stderr.is_empty(), "{}", r.stderr);
    (r.code, serde_json::from_str(&r.stdout).unwrap())
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn gen_graph(args: &[&str]) -> SignedGraph {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let r = run(&full);
    assert_eq!(r.code, 0, "{}", r.stderr);
    io::parse(&r.stdout).unwrap().graph
}

fn file_with(name: &str, text: &str) -> String {
    let path = temp(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn kneser_vertex_count() {
    let g = gen_graph(&["kneser", "-n", "6", "-k", "4"]);
    assert_eq!(g.n() as u128, binomial(6, 4).unwrap() * 16);
    assert_eq!(g.label(0), Some("1,2,3,4"));
}

#[test]
fn generated_graphs_round_trip() {
    let kinds: [&[&str]; 8] = [
        &["kneser", "-n", "4", "-k", "2"],
        &["schrijver", "-n", "6", "-k", "4", "--reduce"],
        &["lowerbound", "-p", "3", "-n", "12"],
        &[
            "mycielski",
            "--levels",
            "3",
            "--convention",
            "positive-cross",
        ],
        &["fig13"],
        &["negclique", "-p", "3"],
        &["negclique", "--size", "7"],
        &["cycle", "-n", "6"],
    ];
    for kind in kinds {
        let g = gen_graph(kind);
        assert_eq!(
            io::parse(&io::write(&g, None)).unwrap().graph,
            g,
            "{kind:?}"
        );
    }
}

#[test]
fn fig13_measures() {
    let path = temp("fig13.txt");
    let out = path.display().to_string();
    assert_eq!(run(&["gen", "fig13", "-o", &out]).code, 0);
    let (code, report) = json(&["analyze", &out, "--what", "girth,chib"]);
    assert_eq!(code, 0);
    let g = io::parse(&std::fs::read_to_string(&path).unwrap())
        .unwrap()
        .graph;
    assert_eq!(g.n(), 13);
    assert_eq!(report["results"]["girth"]["value"], "4");
    assert_eq!(report["results"]["chi_b"]["value"], 3);
    let cycle: NegativeCycle =
        serde_json::from_value(report["results"]["girth"]["cycle"].clone()).unwrap();
    cycle.validate(&g).unwrap();
    let coloring: BalancedColoring =
        serde_json::from_value(report["results"]["chi_b"]["coloring"].clone()).unwrap();
    assert!(coloring.validate(&g).unwrap());
}

#[test]
fn negative_clique_chi_b() {
    let g = gen_graph(&["negclique", "-p", "3"]);
    assert_eq!((g.n(), g.edge_count()), (5, 10));
    assert!(g.edges().iter().all(|e| e.sign == Sign::Negative));
    let path = file_with("k5.txt", &io::write(&g, None));
    let (_, report) = json(&["analyze", &path, "--what", "chib"]);
    assert_eq!(report["results"]["chi_b"]["value"], 3);
}

#[test]
fn positive_triangle_is_balanced() {
    let path = file_with("tri.txt", "n 3\ne 0 1 +\ne 1 2 +\ne 0 2 +\n");
    let (code, report) = json(&["analyze", &path, "--what", "balance"]);
    assert_eq!(code, 0);
    assert_eq!(report["results"]["balance"]["balanced"], true);
}

#[test]
fn unbalanced_witness_revalidates() {
    let text = "n 4\ne 0 1 -\ne 1 2 +\ne 2 3 +\ne 0 3 +\n";
    let path = file_with("c4.txt", text);
    let (_, report) = json(&["analyze", &path, "--what", "balance,radius"]);
    let g = io::parse(text).unwrap().graph;
    let witness = &report["results"]["balance"]["witness"];
    let cycle: NegativeCycle = serde_json::from_value(witness["Unbalanced"].clone()).unwrap();
    cycle.validate(&g).unwrap();
    assert_eq!(report["results"]["radius"]["value"], 2);
}

#[test]
fn invalid_coloring_fails() {
    let path = file_with(
        "bad.txt",
        "n 3\ne 0 1 -\ne 1 2 -\ne 0 2 -\nc 0 0\nc 1 0\nc 2 0\n",
    );
    assert_eq!(run(&["analyze", &path, "--what", "balance"]).code, 1);
    let path = file_with(
        "good.txt",
        "n 3\ne 0 1 -\ne 1 2 -\ne 0 2 -\nc 0 0\nc 1 1\nc 2 0\n",
    );
    assert_eq!(run(&["analyze", &path, "--what", "balance"]).code, 0);
}

#[test]
fn verify_suites_pass() {
    let (code, report) = json(&["verify", "lemma21", "--nmax", "6"]);
    assert_eq!(code, 0);
    assert_eq!(report["results"]["rows"].as_array().unwrap().len(), 21);

    let (code, report) = json(&["verify", "thm41", "--corpus", "default"]);
    assert_eq!(code, 0);
    let rows = report["results"]["rows"].as_array().unwrap();
    assert!(rows.len() >= 10);
    assert!(rows.iter().all(|r| r["ok"] == true));

    let (code, report) = json(&[
        "verify", "oracles", "--n", "3", "--random", "40", "--max-n", "8",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["results"]["exhaustive"], 1 + 1 + 4 + 64);
}

#[test]
fn thm31_violations_revalidate() {
    let (code, report) = json(&["verify", "thm31"]);
    assert_eq!(code, 0);
    let graphs: Vec<(String, SignedGraph)> = std::iter::empty()
        .chain([5, 9, 16, 25].map(|n| {
            (
                format!("negative C{n}"),
                gen_graph(&["cycle", "-n", &n.to_string()]),
            )
        }))
        .chain([3, 5, 9].map(|n| {
            (
                format!("(K{n},-)"),
                gen_graph(&["negclique", "--size", &n.to_string()]),
            )
        }))
        .chain(signed_graphs::cert::corpus())
        .collect();
    for row in report["results"]["rows"].as_array().unwrap() {
        let (_, g) = graphs
            .iter()
            .find(|(name, _)| row["graph"] == name.as_str())
            .unwrap();
        let outcome = &row["outcome"];
        if let Some(v) = outcome.get("violation") {
            let v: HypothesisViolation = serde_json::from_value(v.clone()).unwrap();
            assert!(!g.induced(&v.vertices).unwrap().is_balanced().is_balanced());
            assert_eq!(row["hypothesis_holds"], false);
        } else {
            let c: BalancedColoring = serde_json::from_value(outcome["coloring"].clone()).unwrap();
            assert!(c.validate(g).unwrap() && c.used_colors() <= 2);
        }
    }
}

#[test]
fn thm41_skips_low_chromatic_inputs() {
    let path = file_with(
        "c5.txt",
        &io::write(&gen_graph(&["cycle", "-n", "5"]), None),
    );
    let (code, report) = json(&["verify", "thm41", "--graph", &path]);
    assert_eq!(code, 0);
    assert!(report["results"]["rows"][0]["skipped"].is_string());
}

#[test]
fn search_and_resume() {
    let ck = temp("search.ck").display().to_string();
    let out = temp("search.json");
    let (code, _) = json(&[
        "search",
        "--lambda",
        "3",
        "-p",
        "3",
        "--nmax",
        "4",
        "--checkpoint",
        &ck,
    ]);
    assert_eq!(code, 0);
    let args = [
        "search",
        "--lambda",
        "3",
        "-p",
        "3",
        "--nmax",
        "5",
        "--checkpoint",
        &ck,
        "--resume",
    ];
    let mut with_out = args.to_vec();
    with_out.extend(["-o", out.to_str().unwrap()]);
    let (code, report) = json(&with_out);
    assert_eq!(code, 0);
    assert_eq!(report["results"]["resumed_from"], 4);
    let full: SearchReport = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(full.n_s(), Some(5));
    assert!(full
        .levels
        .last()
        .unwrap()
        .witnesses
        .iter()
        .all(|w| w.revalidate(3, 3)));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["search", "--lambda", "4", "-p", "3", "--nmax", "6", "--budget", "50"]).code,
        3
    );
    assert_eq!(run(&["verify", "thm41", "--corpus", "nope"]).code, 2);
    assert_eq!(run(&["analyze", "/definitely/not/here"]).code, 2);
    assert_eq!(run(&["gen", "kneser", "-n", "3"]).code, 2);
    assert_eq!(run(&["gen", "kneser", "-n", "3", "-k", "5"]).code, 2);
    assert_eq!(run(&["verify", "oracles", "--n", "6"]).code, 2);
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("verify"));
}

#[test]
fn harness_csv() {
    let r = run(&[
        "harness",
        "--family",
        "negclique",
        "--sizes",
        "4,5",
        "-p",
        "3",
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "n,girth,chi_b,bound_low,bound_high,status\n4,3,2,1,8,below_p\n5,3,3,1,12,ok\n"
    );
}

#[test]
fn reports_ignore_threads_and_timing() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v.as_object_mut().unwrap().remove("command");
        v.as_object_mut().unwrap().remove("input_digest");
        v
    };
    let a = json(&[
        "verify",
        "oracles",
        "--n",
        "3",
        "--random",
        "30",
        "--threads",
        "1",
    ])
    .1;
    let b = json(&[
        "verify",
        "oracles",
        "--n",
        "3",
        "--random",
        "30",
        "--threads",
        "4",
    ])
    .1;
    assert_eq!(strip(a), strip(b));
    let x = run(&["verify", "thm41", "--json"]).stdout;
    let y = run(&["verify", "thm41", "--json"]).stdout;
    assert_eq!(
        strip(serde_json::from_str(&x).unwrap()),
        strip(serde_json::from_str(&y).unwrap())
    );
}

#[test]
fn digest_covers_inputs() {
    let a = file_with("d1.txt", "n 2\ne 0 1 +\n");
    let (_, first) = json(&["analyze", &a]);
    std::fs::write(&a, "n 2\ne 0 1 -\n").unwrap();
    let (_, second) = json(&["analyze", &a]);
    assert_ne!(first["input_digest"], second["input_digest"]);
    assert_eq!(first["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_sgraph");
    let ok = Command::new(bin).args(["gen", "fig13"]).output().unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8(ok.stdout).unwrap().starts_with("n 13\n"));
    let bad = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
