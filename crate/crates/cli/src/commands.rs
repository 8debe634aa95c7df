use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use antiramsey_core::decomposition::{deck, is_stable, min_decomposition_size, reduced_chromatic, Mode};
use antiramsey_core::error::Budget;
use antiramsey_core::extremal::{
    classify, ex_exact_small, f_exact_tiny, find_f_colored_copy, kst_bound, lb_coloring, turan_number, ClassifyOptions,
    EdgeColoring, ForcingOptions,
};
use antiramsey_core::graph::{named_graph, parse_graph_literal, read_edge_list, write_edge_list};
use antiramsey_core::transversal::{
    find_transversal_exact, itl_multifold, itl_transversal_traced, rainbow_cut, scan_s3_d1, smd_construct,
    PartedDigraph, SmdVariant, Transversal,
};
use antiramsey_core::{Edge, Error, FamilySpec, Result, SimpleGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::{Cli, Command, Global, GraphFamily, ModeArg, Outcome, TransversalArgs, EXIT_ABSENT};

/// Generator literals win over file names.
pub fn load_graph(arg: &str) -> Result<SimpleGraph> {
    if let Some(spec) = parse_graph_literal(arg) {
        return named_graph(&spec);
    }
    read_edge_list(&read_file(arg)?)
}

fn read_file(path: &str) -> Result<String> {
    if !Path::new(path).is_file() {
        return Err(Error::InvalidInput(format!(
            "{path} is neither a generator literal nor a readable file"
        )));
    }
    Ok(fs::read_to_string(path)?)
}

fn write_file(path: &str, text: &str) -> Result<()> {
    fs::write(path, text)?;
    Ok(())
}

fn load_pair(gf: &GraphFamily) -> Result<(SimpleGraph, FamilySpec)> {
    let f: FamilySpec = gf.family.parse()?;
    Ok((load_graph(&gf.graph)?, f))
}

fn mode(m: ModeArg) -> Mode {
    match m {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Bounded => Mode::Bounded,
    }
}

fn budget(g: &Global) -> Budget {
    g.budget.map_or_else(Budget::default, Budget::new)
}

fn edge_list(edges: &[Edge]) -> String {
    let parts: Vec<String> = edges.iter().map(|e| format!("{}-{}", e.u, e.v)).collect();
    if parts.is_empty() {
        "(none)".into()
    } else {
        parts.join(" ")
    }
}

fn edge_pairs(edges: &[Edge]) -> Vec<[usize; 2]> {
    edges.iter().map(|e| [e.u, e.v]).collect()
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let global = cli.global;
    let mut b = budget(&global);
    match cli.command {
        Command::ChiF { gf, mode: m } => {
            let (g, f) = load_pair(&gf)?;
            let r = reduced_chromatic(&g, &f, mode(m), &mut b)?;
            let value = r
                .value
                .map_or_else(|| format!("between {} and {}", r.lo, r.hi), |v| v.to_string());
            let text = format!(
                "chi_F({}, {f}) = {value}\nwitness member: {}\n",
                gf.graph,
                edge_list(&r.witness.edges)
            );
            Ok(Outcome::ok(r.to_json(), text))
        }
        Command::Deck { gf, no_dedupe } => {
            let (g, f) = load_pair(&gf)?;
            let d = deck(&g, &f, !no_dedupe, &mut b)?;
            let mut text = format!("{} deck graphs\n", d.members.len());
            let mut members = Vec::new();
            for h in &d.members {
                let es = h.edges();
                let _ = writeln!(text, "{} edges: {}", es.len(), edge_list(&es));
                members.push(json!({ "n": h.n(), "edges": edge_pairs(&es) }));
            }
            Ok(Outcome::ok(
                json!({ "count": d.members.len(), "deduped": d.deduped, "members": members }),
                text,
            ))
        }
        Command::Stable { gf } => {
            let (g, f) = load_pair(&gf)?;
            let r = is_stable(&g, &f, &mut b)?;
            let witness = r.critical_witness.as_ref().map(|w| edge_pairs(&w.edges));
            let mut text = format!(
                "{} (chi = {}, chi_F = {})\n",
                if r.stable { "stable" } else { "not stable" },
                r.chi,
                r.chi_f
            );
            if let Some(w) = &r.critical_witness {
                let _ = writeln!(text, "critical member: {}", edge_list(&w.edges));
            }
            Ok(Outcome::ok(
                json!({ "stable": r.stable, "chi": r.chi, "chi_f": r.chi_f, "critical_witness": witness }),
                text,
            ))
        }
        Command::DecompSize { gf } => {
            let (g, f) = load_pair(&gf)?;
            let v = min_decomposition_size(&g, &f)?;
            Ok(Outcome::ok(json!({ "value": v }), format!("{v}\n")))
        }
        Command::LbColoring { gf, n, out } => {
            let (g, f) = load_pair(&gf)?;
            let lb = lb_coloring(n, &g, &f, &mut b)?;
            if let Some(path) = &out {
                write_file(path, &lb.coloring.to_text())?;
            }
            let deck: Vec<_> = lb.reduced_deck.iter().map(|h| edge_pairs(&h.edges())).collect();
            let json = json!({
                "n": n,
                "colors": lb.coloring.k(),
                "f_at_least": lb.certified_bound(),
                "ex": lb.ex.to_json(),
                "reduced_deck": deck,
                "containment": "subgraph, isolated vertices ignored",
                "certified": lb.certified,
                "coloring_file": out,
            });
            let mut text = format!(
                "{} colors on K_{n}, no copy of {} with every color class in {f}: f >= {}\nex of reduced deck = {}\n",
                lb.coloring.k(),
                gf.graph,
                lb.certified_bound(),
                lb.ex.value
            );
            if out.is_none() {
                text.push_str(&lb.coloring.to_text());
            }
            Ok(Outcome::ok(json, text))
        }
        Command::CheckCopy { gf, coloring } => {
            let (g, f) = load_pair(&gf)?;
            let psi = EdgeColoring::parse(&read_file(&coloring)?)?;
            match find_f_colored_copy(&psi, &g, &f, &mut b)? {
                Some(cert) => {
                    let mut text = format!("map: {:?}\n", cert.map);
                    for (c, es) in &cert.class_decomposition {
                        let _ = writeln!(text, "color {c}: {}", edge_list(es));
                    }
                    Ok(Outcome::ok(cert.to_json(), text))
                }
                None => Ok(Outcome {
                    json: json!({ "certificate": null, "result": "none" }),
                    text: "none\n".into(),
                    code: EXIT_ABSENT,
                }),
            }
        }
        Command::FExact { gf, n, symmetry, out } => {
            let (g, f) = load_pair(&gf)?;
            let mut opts = ForcingOptions {
                symmetry,
                jobs: global.jobs.unwrap_or(1),
                ..ForcingOptions::default()
            };
            if let Some(limit) = global.budget {
                opts.budget = limit;
            }
            let r = f_exact_tiny(n, &g, &f, opts)?;
            if let (Some(path), Some(av)) = (&out, &r.extremal_avoider) {
                write_file(path, &av.to_text())?;
            }
            let written = out.as_deref().filter(|_| r.extremal_avoider.is_some());
            let text = format!("f({n}, {} | {f}) = {}\n", gf.graph, r.f);
            Ok(Outcome::ok(r.to_json(written), text))
        }
        Command::Transversal(args) => transversal(args, &mut b),
        Command::RainbowCut {
            coloring,
            m,
            classes,
            p,
            s,
        } => {
            let psi = EdgeColoring::parse(&read_file(&coloring)?)?;
            let classes = match (classes, m) {
                (Some(spec), _) => parse_classes(&spec)?,
                (None, Some(m)) => {
                    if m == 0 || psi.n() % m != 0 {
                        return Err(Error::InvalidInput(format!(
                            "{} vertices do not split into {m} equal classes",
                            psi.n()
                        )));
                    }
                    let q = psi.n() / m;
                    (0..m).map(|i| (i * q..(i + 1) * q).collect()).collect()
                }
                (None, None) => return Err(Error::InvalidInput("give --m or --classes".into())),
            };
            let r = rainbow_cut(&psi, &classes, p, s)?;
            let mut text = String::new();
            for (i, x) in r.classes.iter().enumerate() {
                let _ = writeln!(text, "X_{}: {:?} (block {})", i + 1, x, r.blocks[i]);
            }
            Ok(Outcome::ok(serde_json::to_value(&r).expect("serializable"), text))
        }
        Command::Smd { m, d, variant, out } => {
            let v: SmdVariant = variant.parse()?;
            let r = smd_construct(m, d, v, &mut b)?;
            if let Some(path) = &out {
                write_file(path, &r.digraph.to_text())?;
            }
            let status = match r.verified {
                Some(true) => "verified: no independent transversal",
                Some(false) => "refuted",
                None => "unverified (budget)",
            };
            let mut text = format!("s({m},{d}) > {} via {v}; {status}\n", r.claimed_s);
            if out.is_none() {
                text.push_str(&r.digraph.to_text());
            }
            let mut json = r.to_json();
            json["digraph_file"] = json!(out);
            Ok(Outcome::ok(json, text))
        }
        Command::Turan { n, r, kst } => {
            let t = turan_number(n, r)?;
            let mut json = t.to_json();
            let mut text = format!("ex({n}, K_{r}) = {}\n", t.value);
            if let Some(spec) = kst {
                let ab = parse_usizes(&spec)?;
                let [a, bb] = ab[..] else {
                    return Err(Error::InvalidInput(format!("--kst expects a,b, got {spec}")));
                };
                let bound = kst_bound(n, a, bb)?;
                json["kst_bound"] = json!(bound);
                let _ = writeln!(text, "ex({n}, K_{{{a},{bb}}}) <= {bound:.4}");
            }
            Ok(Outcome::ok(json, text))
        }
        Command::ExSmall { n, graph } => {
            let pats = graph.iter().map(|s| load_graph(s)).collect::<Result<Vec<_>>>()?;
            let r = ex_exact_small(n, &pats, &mut b)?;
            let text = format!(
                "ex({n}, {{{}}}) {} {}\n{}",
                graph.join(", "),
                if r.exact { "=" } else { ">=" },
                r.value,
                write_edge_list(&r.extremal_graph)
            );
            let code = if r.exact { crate::EXIT_OK } else { crate::EXIT_BUDGET };
            Ok(Outcome {
                json: r.to_json(),
                text,
                code,
            })
        }
        Command::Classify { gf, mode: m, n } => {
            let (g, f) = load_pair(&gf)?;
            let opts = ClassifyOptions {
                mode: mode(m),
                lower_bound_at: n,
            };
            let r = classify(&g, &f, opts, &mut b)?;
            let case = serde_json::to_value(r.case).expect("serializable");
            let mut text = format!(
                "case {}: f(n, {} | {f}) ~ {}",
                case.as_str().unwrap_or("?"),
                gf.graph,
                r.leading_term
            );
            if let Some((p, q)) = r.coefficient {
                let _ = write!(text, " ~ {p}/{q} n^2");
            }
            text.push('\n');
            if let Some((n, bound)) = r.lower_bound {
                let _ = writeln!(text, "certified: f({n}, {} | {f}) >= {bound}", gf.graph);
            }
            Ok(Outcome::ok(r.to_json(), text))
        }
        Command::ScanS31 { s } => {
            let r = scan_s3_d1(s, Some(global.jobs.unwrap_or(1)))?;
            let json = json!({
                "s": r.s,
                "instances": r.instances,
                "failures": r.failures,
                "first_failure": r.first_failure.as_ref().map(PartedDigraph::to_text),
            });
            let text = format!(
                "s = {s}: {} instances, {} without an independent transversal\n",
                r.instances, r.failures
            );
            Ok(Outcome::ok(json, text))
        }
        Command::Tables => Ok(crate::tables::run(&mut b)),
    }
}

fn parse_usizes(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("not a number: {t:?}")))
        })
        .collect()
}

fn parse_classes(s: &str) -> Result<Vec<Vec<usize>>> {
    s.split(';').map(parse_usizes).collect()
}

fn transversal_outcome(t: &Transversal, text_head: &str, extra: serde_json::Value) -> Outcome {
    let mut json = t.to_json();
    if let (Some(obj), serde_json::Value::Object(more)) = (json.as_object_mut(), extra) {
        obj.extend(more);
    }
    let mut text = format!("{text_head}\n");
    for (i, part) in t.chosen.iter().enumerate() {
        let _ = writeln!(text, "V_{}: {:?}", i + 1, part);
    }
    Outcome::ok(json, text)
}

fn transversal(args: TransversalArgs, b: &mut Budget) -> Result<Outcome> {
    let d = match (&args.digraph, args.seed) {
        (Some(path), _) => PartedDigraph::parse(&read_file(path)?)?,
        (None, Some(seed)) => {
            let (m, s, dp) = (args.m.unwrap_or(0), args.s.unwrap_or(0), args.d.unwrap_or(0));
            PartedDigraph::random(m, s, dp, &mut ChaCha8Rng::seed_from_u64(seed))?
        }
        (None, None) => return Err(Error::InvalidInput("give --digraph or --seed".into())),
    };
    if let Some(r) = args.multifold {
        let t = itl_multifold(&d, r)?;
        return Ok(transversal_outcome(
            &t,
            &format!("{r} pairwise far transversals, merged"),
            json!({}),
        ));
    }
    if args.itl {
        let (t, trace) = itl_transversal_traced(&d)?;
        let surviving: Vec<String> = trace.surviving.iter().map(u128::to_string).collect();
        return Ok(transversal_outcome(
            &t,
            "independent transversal (derandomized)",
            json!({ "surviving_completions": surviving }),
        ));
    }
    match find_transversal_exact(&d, args.fold, b)? {
        Some(t) => Ok(transversal_outcome(&t, "independent transversal", json!({}))),
        None => Ok(Outcome {
            json: json!({ "chosen": null, "result": "no transversal" }),
            text: "no transversal\n".into(),
            code: EXIT_ABSENT,
        }),
    }
}
