use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use kaplansky_core::field::{is_prime, parse_field_spec};
use kaplansky_core::group::parse_group_spec;
use kaplansky_core::groupring::{
    dykema_juschenko_crosscheck, search_idempotents, search_units, search_zero_divisors,
    ProbeVerdict, StableFinitenessProbe,
};
use kaplansky_core::lca::{
    check_equivariance, lca_from_matrix, CellularAutomaton, Configuration, ConsistencyVerdict,
    ExhaustiveReport, GeneralCA, LinearCA,
};
use kaplansky_core::sentence::{
    build_psi_idempotent, build_psi_stable, build_psi_unit, build_psi_zero_divisor, emit_smtlib,
    parse_sentence, pretty_print, Evaluator, Sentence,
};
use kaplansky_core::{checked_pow, Elem, Field, FiniteField, Group, Subset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{
    CompileArgs, CrosscheckArgs, LcaArgs, ProbeArgs, ScanArgs, SearchArgs, SearchKind,
};
use crate::error::{CliError, CliResult, EXIT_NONE, EXIT_WITNESS};
use crate::formats::{
    parse_backend, parse_matrix_source, parse_property, parse_range, parse_rule_table, Backend,
    Property, SourceError,
};
use crate::parallel::scan_chunks;
use crate::report::{element_json, matrix_json};

/// What a command hands back to the driver.
pub struct Outcome {
    pub parameters: Value,
    pub result: Value,
    pub summary: String,
    pub exit_code: i32,
    pub used: Option<u64>,
    /// Written verbatim to standard output instead of the JSON report.
    pub raw_output: Option<String>,
}

pub struct Context {
    pub budget: u64,
    pub jobs: usize,
}

fn group(spec: &str) -> CliResult<Group> {
    Ok(parse_group_spec(spec)?)
}

fn field(spec: &str) -> CliResult<Field> {
    Ok(parse_field_spec(spec)?)
}

fn support(group: &Group, spec: &str) -> CliResult<Subset> {
    let s = Subset::from_labels(group, spec)?;
    if s.is_empty() {
        return Err(CliError::Usage("support must be nonempty".into()));
    }
    Ok(s)
}

fn read_source(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn source_error(path: &Path, e: SourceError) -> CliError {
    CliError::Source {
        path: path.to_path_buf(),
        line: e.line,
        message: e.message,
    }
}

fn field_json(f: &Field) -> Value {
    json!({ "p": f.characteristic(), "k": f.degree(), "q": f.order(), "modulus": f.modulus() })
}

fn group_json(g: &Group) -> Value {
    json!({ "order": g.order(), "labels": g.labels(), "abelian": g.is_abelian() })
}

pub fn probe(args: &ProbeArgs, ctx: &Context) -> CliResult<Outcome> {
    let g = group(&args.group)?;
    let f = field(&args.field)?;
    let s = support(&g, &args.support)?;
    let d = args.d as usize;
    let parameters = json!({
        "group": args.group, "group_info": group_json(&g), "field": field_json(&f),
        "d": d, "support": s.labels(),
    });
    let probe = StableFinitenessProbe::new(&g, &f, d, &s, ctx.budget)?;
    let chunks = scan_chunks(
        probe.candidates(),
        ctx.jobs,
        |r| probe.scan(r),
        |c| c.first_witness.is_some(),
    );
    let verdict = probe.reduce(chunks.into_iter().map(|(_, c)| c).collect());
    let result = probe_result(&verdict)?;
    let summary = match verdict.witness_index {
        Some(i) => format!(
            "witness found at candidate {i} after examining {} of {} candidates",
            verdict.stats.examined, verdict.search_space
        ),
        None => format!(
            "no witness among {} candidates ({} right-invertible)",
            verdict.search_space, verdict.stats.right_invertible
        ),
    };
    Ok(Outcome {
        parameters,
        result,
        summary,
        exit_code: if verdict.found() {
            EXIT_WITNESS
        } else {
            EXIT_NONE
        },
        used: Some(verdict.stats.examined),
        raw_output: None,
    })
}

fn probe_result(v: &ProbeVerdict) -> CliResult<Value> {
    let mut result = json!({
        "verdict": if v.found() { "witness-found" } else { "none-in-scope" },
        "search_space": v.search_space,
        "examined": v.stats.examined,
        "right_invertible": v.stats.right_invertible,
    });
    if let Some(w) = v.witness() {
        if !w.verify() {
            return Err(CliError::Internal(
                "reported witness fails re-verification".into(),
            ));
        }
        result["witness"] = json!({
            "index": v.witness_index,
            "a": matrix_json(&w.a),
            "b": matrix_json(&w.b),
            "verified": true,
        });
    }
    Ok(result)
}

fn build_sentence(g: &Group, property: Property, s: &Subset) -> CliResult<Sentence> {
    Ok(match property {
        Property::Stable(d) => build_psi_stable(g, d, s)?,
        Property::Unit => build_psi_unit(g, s)?,
        Property::ZeroDivisor => build_psi_zero_divisor(g, s)?,
        Property::Idempotent => build_psi_idempotent(g, s)?,
    })
}

fn smtlib_prime(spec: &str) -> CliResult<u32> {
    if let Ok(p) = spec.parse::<u32>() {
        return Ok(p);
    }
    let f = field(spec)?;
    if f.degree() > 1 {
        return Err(kaplansky_core::Error::Unsupported(format!(
            "the SMT-LIB backend handles prime fields only, not GF({}^{})",
            f.characteristic(),
            f.degree()
        ))
        .into());
    }
    Ok(f.characteristic())
}

pub fn compile(args: &CompileArgs, _ctx: &Context) -> CliResult<Outcome> {
    let g = group(&args.group)?;
    let property = parse_property(&args.property).map_err(CliError::Usage)?;
    let backend = parse_backend(&args.backend).map_err(CliError::Usage)?;
    let s = support(&g, &args.support)?;
    let sentence = build_sentence(&g, property, &s)?;
    let stats = sentence.stats();
    let output = match &backend {
        Backend::Text => pretty_print(&sentence),
        Backend::Stats => stats.to_string(),
        Backend::SmtLib(spec) => emit_smtlib(&sentence, smtlib_prime(spec)?)?,
    };
    Ok(Outcome {
        parameters: json!({
            "group": args.group, "property": property.name(),
            "support": s.labels(), "backend": args.backend,
        }),
        result: json!({ "variables": stats.variables, "atoms": stats.atoms }),
        summary: format!(
            "{} over {} with |S| = {}: {} variables, {} atoms",
            property.name(),
            args.group,
            s.len(),
            stats.variables,
            stats.atoms
        ),
        exit_code: EXIT_NONE,
        used: None,
        raw_output: Some(output),
    })
}

const TRANSFER_NOTE: &str = "Truth values are computed in each finite field separately. \
    Transfer between fields via theorems about algebraically closed fields is not tested here.";

pub fn scan_fields(args: &ScanArgs, ctx: &Context) -> CliResult<Outcome> {
    let (sentence, source) = match (&args.sentence, &args.group, &args.property) {
        (Some(path), _, _) => {
            let text = read_source(path)?;
            let s = parse_sentence(&text).map_err(|e| match e {
                kaplansky_core::Error::Syntax {
                    line,
                    column,
                    message,
                } => CliError::Source {
                    path: path.clone(),
                    line,
                    message: format!("column {column}: {message}"),
                },
                other => other.into(),
            })?;
            (s, json!({ "file": path.display().to_string() }))
        }
        (None, Some(g), Some(p)) => {
            let group = group(g)?;
            let property = parse_property(p).map_err(CliError::Usage)?;
            let s = support(&group, &args.support)?;
            let sentence = build_sentence(&group, property, &s)?;
            let source = json!({ "group": g, "property": property.name(), "support": s.labels() });
            (sentence, source)
        }
        _ => {
            return Err(CliError::Usage(
                "give either --sentence FILE or --group with --property".into(),
            ))
        }
    };
    sentence.validate()?;
    let p_range = parse_range(&args.p_range).map_err(CliError::Usage)?;
    let k_range = parse_range(&args.k_range).map_err(CliError::Usage)?;
    if *k_range.start() == 0 {
        return Err(CliError::Usage("extension degrees start at 1".into()));
    }
    let mut rows = Vec::new();
    let mut table = String::new();
    for p in p_range.clone().filter(|&p| is_prime(p)) {
        for k in k_range.clone() {
            let started = Instant::now();
            let mut row = json!({ "p": p, "k": k });
            match scan_one(&sentence, p, k as usize, ctx) {
                Ok((truth, model)) => {
                    row["truth"] = json!(truth);
                    if let Some(model) = model {
                        row["model"] = model;
                    }
                    writeln!(table, "  GF({p}^{k})  {truth}").unwrap();
                }
                Err(e) => {
                    row["truth"] = Value::Null;
                    row["skipped"] = json!(e.to_string());
                    writeln!(table, "  GF({p}^{k})  skipped: {e}").unwrap();
                }
            }
            row["elapsed_ms"] = json!(started.elapsed().as_secs_f64() * 1e3);
            rows.push(row);
        }
    }
    let summary = format!(
        "{} field(s) scanned\n{table}note: {TRANSFER_NOTE}",
        rows.len()
    );
    Ok(Outcome {
        parameters: json!({
            "sentence": source, "p_range": args.p_range, "k_range": args.k_range,
        }),
        result: json!({ "rows": rows, "note": TRANSFER_NOTE }),
        summary,
        exit_code: EXIT_NONE,
        used: None,
        raw_output: None,
    })
}

/// Truth in `GF(p^k)` and, when true, the satisfying assignment of the
/// leading `∃` block with the smallest enumeration index.
fn scan_one(
    sentence: &Sentence,
    p: u32,
    k: usize,
    ctx: &Context,
) -> Result<(bool, Option<Value>), kaplansky_core::Error> {
    let f = FiniteField::new(p, k)?;
    let ev = Evaluator::new(sentence, &f, ctx.budget)?;
    let chunks = scan_chunks(
        ev.assignments(),
        ctx.jobs,
        |r| ev.first_model(r),
        Option::is_some,
    );
    let model = chunks.into_iter().find_map(|(_, m)| m);
    Ok(match model {
        None => (false, None),
        Some((_, values)) => {
            let assignment: serde_json::Map<String, Value> = ev
                .top_vars()
                .iter()
                .zip(values)
                .map(|(v, x)| (v.to_string(), json!(f.format_elem(x))))
                .collect();
            (true, Some(Value::Object(assignment)))
        }
    })
}

pub fn lca(args: &LcaArgs, ctx: &Context) -> CliResult<Outcome> {
    let g = group(&args.group)?;
    match (&args.matrix, &args.rule) {
        (Some(path), None) => {
            let spec = args
                .field
                .as_deref()
                .ok_or_else(|| CliError::Usage("--matrix needs --field".into()))?;
            let f = field(spec)?;
            let text = read_source(path)?;
            let m = parse_matrix_source(&text, &g, &f).map_err(|e| source_error(path, e))?;
            lca_linear(args, &g, &f, &lca_from_matrix(&m))
        }
        (None, Some(path)) => {
            let text = read_source(path)?;
            let ca = parse_rule_table(&text, &g).map_err(|e| source_error(path, e))?;
            lca_general(args, &g, &ca, ctx)
        }
        _ => Err(CliError::Usage(
            "give exactly one of --matrix or --rule".into(),
        )),
    }
}

fn verdict_word(v: &ConsistencyVerdict) -> CliResult<&'static str> {
    if v.passes() {
        Ok("PASS")
    } else {
        Err(CliError::Internal(
            "injective automaton is not surjective".into(),
        ))
    }
}

fn lca_linear(args: &LcaArgs, g: &Group, f: &Field, tau: &LinearCA) -> CliResult<Outcome> {
    let n = g.order() * tau.dim();
    let global = tau.global_matrix();
    let rank = global.rank(f);
    let verdict = tau.check_injective_implies_surjective();
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let q = f.order();
    let mut samples = Vec::with_capacity(args.samples);
    let mut agrees = true;
    for _ in 0..args.samples {
        let flat: Vec<Elem> = (0..n).map(|_| Elem(rng.gen_range(0..q))).collect();
        let x = tau.configuration_from_flat(&flat)?;
        agrees &= LinearCA::flatten(&tau.apply(&x)?) == global.apply(&flat, f);
        samples.push(x);
    }
    let equivariant = check_equivariance(tau, &samples)?;
    let memory: Vec<&str> = tau.memory().labels();
    let result = json!({
        "kind": "linear",
        "d": tau.dim(),
        "memory": memory,
        "global_matrix": global.to_rows().iter()
            .map(|r| r.iter().map(|&c| f.format_elem(c)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "rank": rank,
        "size": n,
        "injective": verdict.injective,
        "surjective": verdict.surjective,
        "equivariant": equivariant,
        "matrix_agrees": agrees,
        "samples": args.samples,
        "consistency": verdict_word(&verdict)?,
    });
    let summary = format!(
        "linear automaton: rank {rank} of {n}, injective={}, surjective={}, equivariant={equivariant} on {} samples, consistency PASS",
        verdict.injective, verdict.surjective, args.samples
    );
    Ok(Outcome {
        parameters: json!({ "group": args.group, "group_info": group_json(g), "field": field_json(f),
                            "matrix": args.matrix.as_ref().map(|p| p.display().to_string()) }),
        result,
        summary,
        exit_code: EXIT_NONE,
        used: None,
        raw_output: None,
    })
}

fn config_labels(ca: &GeneralCA, x: &Configuration<usize>) -> Vec<String> {
    x.values()
        .iter()
        .map(|&v| ca.alphabet()[v].clone())
        .collect()
}

fn lca_general(args: &LcaArgs, g: &Group, ca: &GeneralCA, ctx: &Context) -> CliResult<Outcome> {
    let total = ca.configurations(ctx.budget)?;
    let chunks = scan_chunks(total, ctx.jobs, |r| ca.images(r), |_| false);
    let images: Vec<u64> = chunks.into_iter().flat_map(|(_, c)| c).collect();
    let report = ExhaustiveReport::from_images(total, [images.clone()]);
    let verdict = ConsistencyVerdict {
        injective: report.injective(),
        surjective: report.surjective(),
    };

    // Smallest pair of distinct configurations with the same image, and the
    // smallest configuration outside the image.
    let mut first_preimage = vec![u64::MAX; total as usize];
    let mut collision = None;
    for (i, &y) in images.iter().enumerate() {
        let slot = &mut first_preimage[y as usize];
        if *slot == u64::MAX {
            *slot = i as u64;
        } else if collision.is_none() {
            collision = Some((*slot, i as u64));
        }
    }
    let missing = first_preimage.iter().position(|&p| p == u64::MAX);

    let samples: Vec<Configuration<usize>> = if total as usize <= args.samples {
        (0..total).map(|i| ca.configuration(i)).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        (0..args.samples)
            .map(|_| ca.configuration(rng.gen_range(0..total)))
            .collect()
    };
    let equivariant = check_equivariance(ca, &samples)?;
    let mut result = json!({
        "kind": "general",
        "alphabet": ca.alphabet(),
        "memory": ca.memory().labels(),
        "configurations": total,
        "image_size": report.image_size,
        "injective": verdict.injective,
        "surjective": verdict.surjective,
        "equivariant": equivariant,
        "samples": samples.len(),
        "consistency": verdict_word(&verdict)?,
    });
    if let Some((a, b)) = collision {
        result["collision"] = json!([
            config_labels(ca, &ca.configuration(a)),
            config_labels(ca, &ca.configuration(b)),
        ]);
    }
    if let Some(y) = missing {
        result["not_in_image"] = json!(config_labels(ca, &ca.configuration(y as u64)));
    }
    let summary = format!(
        "automaton over {} letters: image {} of {} configurations, injective={}, surjective={}, equivariant={equivariant}, consistency PASS",
        ca.alphabet().len(),
        report.image_size,
        total,
        verdict.injective,
        verdict.surjective
    );
    Ok(Outcome {
        parameters: json!({ "group": args.group, "group_info": group_json(g),
                            "rule": args.rule.as_ref().map(|p| p.display().to_string()) }),
        result,
        summary,
        exit_code: EXIT_NONE,
        used: Some(total),
        raw_output: None,
    })
}

pub fn search(args: &SearchArgs, ctx: &Context) -> CliResult<Outcome> {
    let g = group(&args.group)?;
    let f = field(&args.field)?;
    let s = support(&g, &args.support)?;
    let q = f.order() as u64;
    let (kind, found, nontrivial, used) = match args.kind {
        SearchKind::Units => {
            let units = search_units(&g, &f, &s, ctx.budget)?;
            let list: Vec<Value> = units
                .iter()
                .map(|u| json!({ "element": element_json(&u.element), "inverse": element_json(&u.inverse), "trivial": u.trivial }))
                .collect();
            let nontrivial = units.iter().filter(|u| !u.trivial).count();
            ("units", list, nontrivial, checked_pow(q, s.len() as u64))
        }
        SearchKind::ZeroDivisors => {
            let pairs = search_zero_divisors(&g, &f, &s, ctx.budget)?;
            let list: Vec<Value> = pairs
                .iter()
                .map(|(a, b)| json!({ "left": element_json(a), "right": element_json(b) }))
                .collect();
            let n = list.len();
            ("zero-divisors", list, n, checked_pow(q, 2 * s.len() as u64))
        }
        SearchKind::Idempotents => {
            let idem = search_idempotents(&g, &f, &s, ctx.budget)?;
            let list: Vec<Value> = idem
                .iter()
                .map(|w| json!({ "element": element_json(&w.element), "trivial": w.trivial }))
                .collect();
            let nontrivial = idem.iter().filter(|w| !w.trivial).count();
            (
                "idempotents",
                list,
                nontrivial,
                checked_pow(q, s.len() as u64),
            )
        }
    };
    let mut summary = format!("{} {kind} found, {nontrivial} non-trivial", found.len());
    for item in found.iter().take(20) {
        let text = item
            .get("element")
            .or_else(|| item.get("left"))
            .and_then(|e| e.get("text"))
            .and_then(Value::as_str)
            .unwrap_or_default();
        let _ = write!(summary, "\n  {text}");
        if let Some(right) = item
            .get("right")
            .and_then(|e| e.get("text"))
            .and_then(Value::as_str)
        {
            let _ = write!(summary, "  *  {right}  = 0");
        }
    }
    if found.len() > 20 {
        let _ = write!(summary, "\n  ... ({} more in the report)", found.len() - 20);
    }
    Ok(Outcome {
        parameters: json!({ "group": args.group, "group_info": group_json(&g), "field": field_json(&f),
                            "kind": kind, "support": s.labels() }),
        result: json!({ "kind": kind, "count": found.len(), "nontrivial": nontrivial, "found": found }),
        summary,
        exit_code: if nontrivial > 0 {
            EXIT_WITNESS
        } else {
            EXIT_NONE
        },
        used,
        raw_output: None,
    })
}

pub fn crosscheck(args: &CrosscheckArgs, ctx: &Context) -> CliResult<Outcome> {
    let g = group(&args.group)?;
    let h = group(&args.with)?;
    let f = field(&args.field)?;
    let report = dykema_juschenko_crosscheck(&g, &h, &f, ctx.budget)?;
    let stable: Vec<Value> = report
        .stable_on_base
        .iter()
        .map(|(d, v)| Ok(json!({ "d": d, "probe": probe_result(v)? })))
        .collect::<CliResult<_>>()?;
    let used = report.direct_on_product.stats.examined
        + report
            .stable_on_base
            .iter()
            .map(|(_, v)| v.stats.examined)
            .sum::<u64>();
    let found = report.direct_witness() || report.stable_witness();
    Ok(Outcome {
        parameters: json!({ "group": args.group, "with": args.with, "field": field_json(&f),
                            "product_order": report.product.order() }),
        result: json!({
            "direct_on_product": probe_result(&report.direct_on_product)?,
            "stable_on_base": stable,
            "consistent": report.consistent(),
        }),
        summary: format!(
            "direct witness on the product: {}; stable witness on the base for d <= {}: {}; consistent={}",
            report.direct_witness(),
            h.order(),
            report.stable_witness(),
            report.consistent()
        ),
        exit_code: if found { EXIT_WITNESS } else { EXIT_NONE },
        used: Some(used),
        raw_output: None,
    })
}
