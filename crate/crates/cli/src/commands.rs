use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use signed_graphs::balance::balanced_by_enumeration;
use signed_graphs::cert::{corpus, layer_certificate, thm41_check};
use signed_graphs::coloring::{
    balanced_chromatic_number, check_coloring, chi_b_oracle, p_colorable, Decision,
};
use signed_graphs::cover::girth_by_cycle_enumeration;
use signed_graphs::distance::{radius_in, radius_with_center};
use signed_graphs::harness::{lambda_s_harness, rows_to_csv, Family, RowStatus};
use signed_graphs::kneser::{
    kneser_girth_formula, kneser_signed, lower_bound_witness, schrijver_signed,
    shift_cycle_witness, GirthValue,
};
use signed_graphs::kst::{ball_hypothesis_check, peel_color, PeelOutcome};
use signed_graphs::mycielski::{fig13, generalized_mycielskian_with, negative_c4, Convention};
use signed_graphs::search::{n_s_search_with, SearchOptions, SearchStatus};
use signed_graphs::{io, Budget, EdgeState, Error, PlainGraph, Sign, SignedGraph};

use crate::args::{
    AnalyzeArgs, ConventionArg, FamilyArg, GenArgs, GenKind, HarnessArgs, Inputs, Measure,
    SearchArgs, Suite,
};
use crate::report::{Body, Status};
use crate::{CliError, Output};

pub(crate) struct Ctx {
    pub budget: Budget,
    pub seed: u64,
}

fn read(path: &Path, inputs: &mut Vec<Vec<u8>>) -> Result<String, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Usage(format!("{}: not valid UTF-8", path.display())))?;
    inputs.push(bytes);
    Ok(text)
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn girth_of(g: &SignedGraph) -> GirthValue {
    GirthValue::of(g.negative_girth().length())
}

fn negative_cycle(n: usize) -> Result<SignedGraph, CliError> {
    if n < 2 {
        return Err(CliError::Usage("a cycle needs at least 2 vertices".into()));
    }
    if n == 2 {
        return Ok(SignedGraph::new(
            2,
            [(0, 1, Sign::Positive), (0, 1, Sign::Negative)],
        )?);
    }
    let sign = |i: usize| {
        if i == 0 {
            Sign::Negative
        } else {
            Sign::Positive
        }
    };
    Ok(SignedGraph::new(
        n,
        (0..n).map(|i| (i, (i + 1) % n, sign(i))),
    )?)
}

fn generate(kind: &GenKind) -> Result<(String, SignedGraph), CliError> {
    Ok(match *kind {
        GenKind::Kneser { n, k, reduce } => {
            let ks = kneser_signed(n, k)?;
            let g = if reduce { ks.reduce()?.graph } else { ks.graph };
            (
                format!("KS({n},{k}){}", if reduce { " reduced" } else { "" }),
                g,
            )
        }
        GenKind::Schrijver { n, k, reduce } => {
            let ss = schrijver_signed(n, k)?;
            let g = if reduce { ss.reduce()?.graph } else { ss.graph };
            (
                format!("SS({n},{k}){}", if reduce { " reduced" } else { "" }),
                g,
            )
        }
        GenKind::Lowerbound { p, n } => (
            format!("lower-bound p={p} n={n}"),
            lower_bound_witness(p, n)?.graph,
        ),
        GenKind::Mycielski { levels, convention } => {
            let conv = match convention {
                ConventionArg::InheritedPositiveApex => Convention::InheritedPositiveApex,
                ConventionArg::InheritedNegativeApex => Convention::InheritedNegativeApex,
                ConventionArg::PositiveCross => Convention::PositiveCross,
            };
            (
                format!("mycielski levels={levels}"),
                generalized_mycielskian_with(&negative_c4(), levels, conv)?,
            )
        }
        GenKind::Fig13 => ("fig13".into(), fig13()),
        GenKind::Negclique { p, size } => {
            let n = match (p, size) {
                (_, Some(s)) => s,
                (Some(p), None) if p >= 1 => 2 * p - 1,
                _ => return Err(CliError::Usage("need -p >= 1 or --size".into())),
            };
            (
                format!("(K{n},-)"),
                PlainGraph::complete(n).to_all_negative(),
            )
        }
        GenKind::Cycle { n } => (format!("negative C{n}"), negative_cycle(n)?),
    })
}

pub(crate) fn gen(_ctx: &Ctx, a: &GenArgs) -> Result<Output, CliError> {
    let (name, g) = generate(&a.kind)?;
    let text = io::write(&g, None);
    let Some(path) = &a.out else {
        return Ok(Output::Raw(text, Status::Pass));
    };
    write(path, &text)?;
    let lines = vec![format!(
        "{name}: {} vertices, {} edges -> {}",
        g.n(),
        g.edge_count(),
        path.display()
    )];
    let results = json!({ "graph": name, "n": g.n(), "edges": g.edge_count(), "path": path });
    Ok(Output::Report(
        Body {
            status: Status::Pass,
            results,
            lines,
        },
        vec![text.into_bytes()],
    ))
}

pub(crate) fn analyze(ctx: &Ctx, a: &AnalyzeArgs) -> Result<Output, CliError> {
    let mut inputs = Vec::new();
    let doc = io::parse(&read(&a.file, &mut inputs)?)?;
    let g = &doc.graph;
    let mut what = a.what.clone();
    if what.is_empty() {
        what = vec![
            Measure::Balance,
            Measure::Girth,
            Measure::Chib,
            Measure::Radius,
        ];
    }
    what.sort();
    what.dedup();
    let mut status = Status::Pass;
    let mut lines = vec![format!(
        "graph: {} vertices, {} edges",
        g.n(),
        g.edge_count()
    )];
    let mut results = serde_json::Map::new();
    results.insert("n".into(), json!(g.n()));
    results.insert("edges".into(), json!(g.edge_count()));
    for m in what {
        match m {
            Measure::Balance => {
                let b = g.is_balanced();
                lines.push(match (b.switching(), b.cycle()) {
                    (Some(s), _) => format!("balance: balanced, switch {:?}", s.flipped_set()),
                    (_, Some(c)) => format!("balance: unbalanced, negative cycle {:?}", c.vertices),
                    _ => unreachable!(),
                });
                results.insert(
                    "balance".into(),
                    json!({ "balanced": b.is_balanced(), "witness": b }),
                );
            }
            Measure::Girth => {
                let girth = g.negative_girth();
                let value = GirthValue::of(girth.length());
                let cycle = girth.witness();
                lines.push(match cycle {
                    Some(c) => format!("girth: {value}, cycle {:?}", c.vertices),
                    None => format!("girth: {value}"),
                });
                results.insert(
                    "girth".into(),
                    json!({ "value": value.to_string(), "cycle": cycle }),
                );
            }
            Measure::Chib => {
                let chi = balanced_chromatic_number(g, ctx.budget);
                lines.push(match chi.value() {
                    Some(v) => format!("chi_b: {v}, coloring {:?}", chi.coloring.colors),
                    None => {
                        status = status.and(Status::BudgetExhausted);
                        format!(
                            "chi_b: between {} and {} (budget exhausted)",
                            chi.lower_bound,
                            chi.upper_bound()
                        )
                    }
                });
                results.insert(
                    "chi_b".into(),
                    json!({
                        "value": chi.value(),
                        "lower_bound": chi.lower_bound,
                        "upper_bound": chi.upper_bound(),
                        "complete": chi.complete,
                        "nodes": chi.nodes,
                        "coloring": chi.coloring,
                    }),
                );
            }
            Measure::Radius => {
                let all: Vec<usize> = (0..g.n()).collect();
                let r = if all.is_empty() {
                    None
                } else {
                    radius_with_center(g, &all)?
                };
                lines.push(match r {
                    Some((radius, center)) => format!("radius: {radius}, center {center}"),
                    None => "radius: inf".into(),
                });
                results.insert(
                    "radius".into(),
                    json!({ "value": r.map(|x| x.0), "center": r.map(|x| x.1) }),
                );
            }
        }
    }
    if let Some(colors) = &doc.coloring {
        let palette = colors.iter().max().map_or(0, |&c| c + 1);
        let valid = check_coloring(g, colors, palette)?;
        if !valid {
            status = status.and(Status::Fail);
        }
        lines.push(format!(
            "given coloring: {} colors, {}",
            palette,
            if valid { "valid" } else { "INVALID" }
        ));
        results.insert(
            "given_coloring".into(),
            json!({ "palette": palette, "valid": valid }),
        );
    }
    Ok(Output::Report(
        Body {
            status,
            results: Value::Object(results),
            lines,
        },
        inputs,
    ))
}

pub(crate) fn verify(ctx: &Ctx, suite: &Suite) -> Result<Output, CliError> {
    let mut inputs = Vec::new();
    let body = match suite {
        Suite::Lemma21 { nmax } => lemma21(*nmax)?,
        Suite::Thm31 { p, q, inputs: i } => {
            let graphs = gather(i, true, &mut inputs)?;
            thm31(ctx, &graphs, *p, *q)?
        }
        Suite::Thm41 { inputs: i } => {
            let graphs = gather(i, false, &mut inputs)?;
            thm41(ctx, &graphs)?
        }
        Suite::Bounds { p, nmax } => bounds(ctx, p, *nmax)?,
        Suite::Oracles { n, random, max_n } => oracles(ctx, *n, *random, *max_n)?,
    };
    Ok(Output::Report(body, inputs))
}

/// Corpus graphs plus files. With nothing requested, the default corpus,
/// preceded by negative cycles and cliques when `small` is set.
fn gather(
    i: &Inputs,
    small: bool,
    inputs: &mut Vec<Vec<u8>>,
) -> Result<Vec<(String, SignedGraph)>, CliError> {
    let mut graphs = Vec::new();
    let use_default = match i.corpus.as_deref() {
        Some("default") => true,
        Some(other) => {
            return Err(CliError::Usage(format!(
                "unknown corpus {other:?}, expected \"default\""
            )))
        }
        None => i.graphs.is_empty(),
    };
    if use_default {
        if small {
            for n in [5, 9, 16, 25] {
                graphs.push((format!("negative C{n}"), negative_cycle(n)?));
            }
            for n in [3, 5, 9] {
                graphs.push((
                    format!("(K{n},-)"),
                    PlainGraph::complete(n).to_all_negative(),
                ));
            }
        }
        graphs.extend(corpus());
    }
    for path in &i.graphs {
        let doc = io::parse(&read(path, inputs)?)?;
        graphs.push((path.display().to_string(), doc.graph));
    }
    Ok(graphs)
}

fn lemma21(nmax: u32) -> Result<Body, CliError> {
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut status = Status::Pass;
    for n in 1..=nmax {
        for k in 1..=n {
            let ks = kneser_signed(n, k)?;
            let measured = girth_of(&ks.graph);
            let formula = kneser_girth_formula(n, k)?;
            let witness = if n > k && n < 2 * k {
                let cycle = shift_cycle_witness(n, k)?.locate(&ks)?;
                let ok =
                    cycle.validate(&ks.graph).is_ok() && GirthValue::Finite(cycle.len()) == formula;
                Some(ok)
            } else {
                None
            };
            let ok = measured == formula && witness != Some(false);
            if !ok {
                status = Status::Fail;
                lines.push(format!(
                    "KS({n},{k}): measured {measured}, formula {formula}, witness {witness:?}"
                ));
            }
            rows.push(json!({
                "n": n, "k": k, "measured": measured.to_string(), "formula": formula.to_string(),
                "witness_valid": witness, "ok": ok,
            }));
        }
    }
    let witnesses = rows
        .iter()
        .filter(|r| r["witness_valid"] == json!(true))
        .count();
    lines.push(format!(
        "{} pairs checked, {} shift witnesses valid",
        rows.len(),
        witnesses
    ));
    Ok(Body {
        status,
        results: json!({ "rows": rows }),
        lines,
    })
}

fn thm31(ctx: &Ctx, graphs: &[(String, SignedGraph)], p: usize, q: u32) -> Result<Body, CliError> {
    if p == 0 || q == 0 {
        return Err(CliError::Usage("p and q must be positive".into()));
    }
    let mut status = Status::Pass;
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for (name, g) in graphs {
        let checked = (|| -> signed_graphs::Result<(bool, bool, String, Value)> {
            let hyp = ball_hypothesis_check(g, p, q, ctx.budget)?;
            Ok(match peel_color(g, p, q, ctx.budget)? {
                PeelOutcome::Colored(c) => {
                    let ok = c.validate(g)? && c.used_colors() <= p * q as usize;
                    let line = format!("{name}: colored with {} colors", c.used_colors());
                    (ok, hyp.holds(), line, json!({ "coloring": c }))
                }
                PeelOutcome::Failure(v) => {
                    let sub = g.induced(&v.vertices)?;
                    let not_colorable = if p == 1 {
                        !sub.is_balanced().is_balanced()
                    } else {
                        match p_colorable(&sub, p, ctx.budget).0 {
                            Decision::NotColorable => true,
                            Decision::Colorable(_) => false,
                            Decision::Unknown => {
                                return Err(Error::BudgetExhausted {
                                    nodes: ctx.budget.nodes,
                                })
                            }
                        }
                    };
                    let radius = radius_in(g, &v.vertices)?;
                    let ok = not_colorable
                        && radius.is_some_and(|r| r as u64 <= v.radius_bound)
                        && !hyp.holds();
                    let line = format!(
                        "{name}: hypothesis violated by {} vertices of radius {} <= {}",
                        v.vertices.len(),
                        v.radius,
                        v.radius_bound
                    );
                    (ok, hyp.holds(), line, json!({ "violation": v }))
                }
            })
        })();
        match checked {
            Ok((ok, hypothesis, line, detail)) => {
                if !ok {
                    status = Status::Fail;
                }
                lines.push(format!("{line}{}", if ok { "" } else { " FAILED" }));
                rows.push(json!({ "graph": name, "ok": ok, "hypothesis_holds": hypothesis, "outcome": detail }));
            }
            Err(Error::BudgetExhausted { .. }) => {
                status = status.and(Status::BudgetExhausted);
                lines.push(format!("{name}: budget exhausted"));
                rows.push(json!({ "graph": name, "ok": null }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Body {
        status,
        results: json!({ "p": p, "q": q, "rows": rows }),
        lines,
    })
}

fn thm41(ctx: &Ctx, graphs: &[(String, SignedGraph)]) -> Result<Body, CliError> {
    let mut status = Status::Pass;
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for (name, g) in graphs {
        match layer_certificate(g, ctx.budget) {
            Ok(c) => {
                let ok = c.holds() && thm41_check(g, ctx.budget)?;
                if !ok {
                    status = Status::Fail;
                }
                let failed: Vec<&str> = c.failures().iter().map(|i| i.name.as_str()).collect();
                lines.push(format!(
                    "{name}: n = {}, girth = {}, t = {}, {}",
                    c.n,
                    c.girth,
                    c.t,
                    if ok {
                        "all inequalities hold".to_string()
                    } else {
                        format!("FAILED {failed:?}")
                    }
                ));
                rows.push(json!({ "graph": name, "ok": ok, "certificate": c }));
            }
            Err(Error::Precondition(msg)) => {
                lines.push(format!("{name}: skipped ({msg})"));
                rows.push(json!({ "graph": name, "ok": null, "skipped": msg }));
            }
            Err(Error::BudgetExhausted { .. }) => {
                status = status.and(Status::BudgetExhausted);
                lines.push(format!("{name}: budget exhausted"));
                rows.push(json!({ "graph": name, "ok": null }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Body {
        status,
        results: json!({ "rows": rows }),
        lines,
    })
}

fn bounds(ctx: &Ctx, ps: &[u32], nmax: usize) -> Result<Body, CliError> {
    let mut status = Status::Pass;
    let mut lines = Vec::new();
    let mut all = Vec::new();
    for &p in ps {
        let sizes: Vec<usize> = (p as usize..=nmax).collect();
        let rows = lambda_s_harness(&Family::LowerBoundSweep { sizes }, p, ctx.budget)?;
        let mut unverified = 0;
        for r in &rows {
            match r.status {
                RowStatus::Ok => {}
                RowStatus::Unverified => unverified += 1,
                _ => {
                    status = Status::Fail;
                    lines.push(format!(
                        "p = {p}: row {} is {}",
                        r.to_csv(),
                        r.status.as_str()
                    ));
                }
            }
        }
        lines.push(format!(
            "p = {p}: {} sizes, {unverified} with chi_b undecided",
            rows.len()
        ));
        all.push(json!({ "p": p, "rows": rows }));
    }
    Ok(Body {
        status,
        results: json!({ "sweeps": all }),
        lines,
    })
}

/// Graph number `code` on `n` vertices, two bits per pair.
fn graph_from_code(n: usize, code: u64) -> SignedGraph {
    let mut states = vec![EdgeState::None; n * n];
    let mut c = code;
    for i in 0..n {
        for j in i + 1..n {
            states[i * n + j] = EdgeState::from_code((c % 4) as u8).expect("code below 4");
            c /= 4;
        }
    }
    SignedGraph::from_states(n, |i, j| states[i.min(j) * n + i.max(j)])
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> SignedGraph {
    let density: f64 = rng.gen_range(0.1..0.9);
    let digons = rng.gen_bool(0.3);
    let mut states = vec![EdgeState::None; n * n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() >= density {
                continue;
            }
            let r: f64 = rng.gen();
            states[i * n + j] = if digons && r < 0.15 {
                EdgeState::Digon
            } else if r < 0.575 {
                EdgeState::Positive
            } else {
                EdgeState::Negative
            };
        }
    }
    SignedGraph::from_states(n, |i, j| states[i.min(j) * n + i.max(j)])
}

/// Names of the quantities on which fast and brute-force answers differ.
fn disagreements(g: &SignedGraph, budget: Budget) -> Vec<&'static str> {
    let mut out = Vec::new();
    if g.is_balanced().is_balanced() != balanced_by_enumeration(g) {
        out.push("balance");
    }
    if g.negative_girth().length() != girth_by_cycle_enumeration(g) {
        out.push("girth");
    }
    if g.n() <= 8 && balanced_chromatic_number(g, budget).value() != chi_b_oracle(g).ok() {
        out.push("chi_b");
    }
    out
}

fn oracles(ctx: &Ctx, n: usize, random: usize, max_n: usize) -> Result<Body, CliError> {
    if n > 5 {
        return Err(CliError::Usage(
            "exhaustive checks are limited to --n 5".into(),
        ));
    }
    if max_n == 0 || max_n > 12 {
        return Err(CliError::Usage("--max-n must be between 1 and 12".into()));
    }
    let mut exhaustive = 0u64;
    let mut bad: Vec<Value> = Vec::new();
    for size in 0..=n {
        let total = 4u64.pow((size * size.saturating_sub(1) / 2) as u32);
        exhaustive += total;
        let found: Vec<Value> = (0..total)
            .into_par_iter()
            .filter_map(|code| {
                let g = graph_from_code(size, code);
                let d = disagreements(&g, ctx.budget);
                (!d.is_empty()).then(|| json!({ "graph": io::write(&g, None), "quantities": d }))
            })
            .collect();
        bad.extend(found);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    for _ in 0..random {
        let size = rng.gen_range(1..=max_n);
        let g = random_graph(&mut rng, size);
        let d = disagreements(&g, ctx.budget);
        if !d.is_empty() {
            bad.push(json!({ "graph": io::write(&g, None), "quantities": d }));
        }
    }
    let status = if bad.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    let lines = vec![format!(
        "{exhaustive} exhaustive (n <= {n}) + {random} random (seed {}, n <= {max_n}): {} disagreements",
        ctx.seed,
        bad.len()
    )];
    let results = json!({
        "exhaustive": exhaustive, "random": random, "seed": ctx.seed, "disagreements": bad,
    });
    Ok(Body {
        status,
        results,
        lines,
    })
}

pub(crate) fn search(ctx: &Ctx, a: &SearchArgs) -> Result<Output, CliError> {
    let opts = SearchOptions {
        checkpoint: a.checkpoint.clone(),
        resume: a.resume,
    };
    let report = n_s_search_with(a.lambda, a.p, a.nmax, ctx.budget, &opts)?;
    let mut status = match report.status {
        SearchStatus::BudgetExhausted => Status::BudgetExhausted,
        _ => Status::Pass,
    };
    let mut lines = Vec::new();
    if let Some(r) = report.resumed_from {
        lines.push(format!("resumed after n = {r}"));
    }
    for level in &report.levels {
        let forms: Vec<&str> = level.witnesses.iter().map(|w| w.form.as_str()).collect();
        lines.push(format!(
            "n = {}: {} classes from {} candidates, {} witnesses {forms:?}",
            level.n,
            level.classes,
            level.generated,
            level.witnesses.len()
        ));
        if !level.witnesses.iter().all(|w| w.revalidate(a.lambda, a.p)) {
            status = Status::Fail;
            lines.push(format!("n = {}: a witness failed revalidation", level.n));
        }
    }
    lines.push(match report.n_s() {
        Some(v) => format!("n_s({}, {}) = {v}", a.lambda, a.p),
        None => format!("n_s({}, {}) >= {}", a.lambda, a.p, report.lower_bound()),
    });
    let results = serde_json::to_value(&report).expect("search reports serialize");
    if let Some(path) = &a.out {
        write(
            path,
            &(serde_json::to_string_pretty(&report).expect("search reports serialize") + "\n"),
        )?;
    }
    Ok(Output::Report(
        Body {
            status,
            results,
            lines,
        },
        Vec::new(),
    ))
}

pub(crate) fn harness(ctx: &Ctx, a: &HarnessArgs) -> Result<Output, CliError> {
    let family = match a.family {
        FamilyArg::LowerBound => Family::LowerBoundSweep {
            sizes: a.sizes.clone(),
        },
        FamilyArg::Negclique => Family::NegativeCliques {
            sizes: a.sizes.clone(),
        },
        FamilyArg::Mycielski => Family::Mycielski {
            levels: a.sizes.clone(),
        },
    };
    let rows = lambda_s_harness(&family, a.p, ctx.budget)?;
    let csv = rows_to_csv(&rows);
    let violated = rows.iter().any(|r| {
        matches!(
            r.status,
            RowStatus::ViolatesLower | RowStatus::ViolatesUpper
        )
    });
    let status = if violated { Status::Fail } else { Status::Pass };
    let Some(path) = &a.out else {
        return Ok(Output::Raw(csv, status));
    };
    write(path, &csv)?;
    let lines = vec![format!("{} rows -> {}", rows.len(), path.display())];
    Ok(Output::Report(
        Body {
            status,
            results: json!({ "rows": rows }),
            lines,
        },
        Vec::new(),
    ))
}
