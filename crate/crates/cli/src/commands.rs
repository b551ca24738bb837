use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use ginv_core::algebra::Algebra;
use ginv_core::enumerate::{basis_methods, one_generator_vector, record_basis, weight_stats, BasisMethod, CodeRecord};
use ginv_core::field::FieldCtx;
use ginv_core::gaussian::{BinomSource, BinomTable};
use ginv_core::group::{GroupTable, DEFAULT_MAX_ORDER};
use ginv_core::isomap::{check_weight_iso, search_weight_iso, RegularBasisRep, SearchOutcome};
use ginv_core::linalg::{format_vector, Matrix, Submodule, Vector};
use ginv_core::modaction::DEFAULT_SCAN_CAP;
use ginv_core::oracle::{oracle_all_submodules, oracle_check_invariant, DEFAULT_ORACLE_CAP};
use ginv_core::pipeline::{Decomposition, PipelineOptions};
use ginv_core::problem::{parse_matrix_file, ProblemSpec};
use ginv_core::Error;
use serde_json::{json, Value};

use crate::{Common, Emit, Format};

fn load(c: &Common) -> Result<(ProblemSpec, PipelineOptions)> {
    let spec = ProblemSpec::from_path(&c.problem)?;
    let opts = PipelineOptions {
        seed: c.seed.or(spec.options.seed).unwrap_or(0),
        scan_cap: c.cap.or(spec.options.cap).unwrap_or(DEFAULT_SCAN_CAP),
        max_order: c.max_order.or(spec.options.max_order).unwrap_or(DEFAULT_MAX_ORDER),
        parallel: c.parallel,
    };
    Ok((spec, opts))
}

fn group(c: &Common) -> Result<GroupTable> {
    let (spec, opts) = load(c)?;
    Ok(GroupTable::close_generators(&spec.field, spec.n, &spec.generators, opts.max_order)?)
}

fn decompose(c: &Common) -> Result<(ProblemSpec, Decomposition)> {
    let (spec, opts) = load(c)?;
    let d = Decomposition::from_problem(&spec, &opts)?;
    Ok((spec, d))
}

fn rows(ctx: &FieldCtx, m: &Submodule) -> Vec<String> {
    m.rows().map(|r| format_vector(ctx, r)).collect()
}

fn matrix_rows(ctx: &FieldCtx, m: &Matrix) -> Vec<String> {
    m.row_iter().map(|r| format_vector(ctx, r)).collect()
}

fn index_set(y: &[usize]) -> String {
    let items: Vec<String> = y.iter().map(|i| i.to_string()).collect();
    format!("[{}]", items.join(","))
}

fn print_json(out: &mut impl Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

pub fn components(c: &Common, out: &mut impl Write) -> Result<()> {
    let (_, d) = decompose(c)?;
    let ctx = d.group.field();
    let alg = d.algebra();
    if c.format == Format::Json {
        let comps: Vec<Value> = d
            .components
            .iter()
            .map(|comp| {
                json!({
                    "idempotent": alg.format(&comp.central_idem),
                    "dim": comp.component.dim(),
                    "simple_dim": comp.simple_dim,
                    "mult_in_m": comp.mult_in_m,
                    "mult_in_a": comp.mult_in_a,
                    "basis": rows(ctx, &comp.component),
                })
            })
            .collect();
        let idems: Vec<String> = d.idempotents.idems.iter().map(|e| alg.format(e)).collect();
        return print_json(out, &json!({"group_order": d.group.order(), "idempotents": idems, "components": comps}));
    }
    writeln!(
        out,
        "|G| = {}, {} central primitive idempotents, {} act nonzero on F^{}",
        d.group.order(),
        d.idempotents.idems.len(),
        d.components.len(),
        d.group.degree()
    )?;
    for (j, comp) in d.components.iter().enumerate() {
        writeln!(
            out,
            "component {j}: dim {}, simple dim {}, n_j {}, k_j {}",
            comp.component.dim(),
            comp.simple_dim,
            comp.mult_in_m,
            comp.mult_in_a
        )?;
        writeln!(out, "  idempotent: {}", alg.format(&comp.central_idem))?;
        for r in rows(ctx, &comp.component) {
            writeln!(out, "  {r}")?;
        }
    }
    Ok(())
}

pub fn simples(c: &Common, out: &mut impl Write) -> Result<()> {
    let (_, d) = decompose(c)?;
    let ctx = d.group.field();
    let gens = |j: usize| -> Vec<String> {
        d.components[j].simples.iter().map(|s| format_vector(ctx, &s.generator)).collect()
    };
    if c.format == Format::Json {
        let comps: Vec<Value> = d
            .components
            .iter()
            .enumerate()
            .map(|(j, comp)| {
                json!({
                    "simple_dim": comp.simple_dim,
                    "mult_in_m": comp.mult_in_m,
                    "mult_in_a": comp.mult_in_a,
                    "generators": gens(j),
                })
            })
            .collect();
        return print_json(out, &json!({ "components": comps }));
    }
    for (j, comp) in d.components.iter().enumerate() {
        writeln!(
            out,
            "component {j}: {} simples of dim {}, n_j {}, k_j {}",
            comp.simples.len(),
            comp.simple_dim,
            comp.mult_in_m,
            comp.mult_in_a
        )?;
        for (i, g) in gens(j).iter().enumerate() {
            writeln!(out, "  {i}: {g}")?;
        }
    }
    Ok(())
}

pub fn sums(c: &Common, out: &mut impl Write) -> Result<()> {
    let (_, d) = decompose(c)?;
    let tables = d.tables()?;
    let sums = d.sums(&tables)?;
    let profiles: Vec<BTreeMap<usize, usize>> = sums
        .iter()
        .map(|s| {
            let mut p = BTreeMap::new();
            for e in &s.f {
                *p.entry(e.module.dim()).or_insert(0) += 1;
            }
            p
        })
        .collect();
    if c.format == Format::Json {
        let comps: Vec<Value> = sums
            .iter()
            .zip(&profiles)
            .map(|(s, p)| {
                let profile: BTreeMap<String, usize> = p.iter().map(|(k, v)| (k.to_string(), *v)).collect();
                json!({"z": s.z, "discarded": s.x.len(), "dims": profile})
            })
            .collect();
        return print_json(out, &json!({ "components": comps }));
    }
    for (j, (s, p)) in sums.iter().zip(&profiles).enumerate() {
        writeln!(out, "component {j}: {} entries, {} discarded index sets", s.f.len(), s.x.len())?;
        let profile: Vec<String> = p.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        writeln!(out, "  dims {}", profile.join(" "))?;
        let max = s.z.iter().map(|y| y.len()).max().unwrap_or(0);
        for k in 1..=max {
            let sets: Vec<String> = s.z_of_size(k).iter().map(|y| index_set(y)).collect();
            writeln!(out, "  size {k} ({}): {}", sets.len(), sets.join(" "))?;
        }
    }
    Ok(())
}

fn methods_for(spec: &ProblemSpec, d: &Decomposition) -> Result<Vec<BasisMethod>> {
    let supplied = d.elements_from_terms(spec)?;
    Ok(basis_methods(&d.algebra(), &d.components, &supplied))
}

pub fn enumerate(c: &Common, emit: Emit, max_dim: Option<usize>, out: &mut impl Write) -> Result<()> {
    let (spec, d) = decompose(c)?;
    let ctx = d.group.field();
    let alg = d.algebra();
    let tables = d.tables()?;
    let sums = d.sums(&tables)?;
    let methods = if emit == Emit::Generators { Vec::new() } else { methods_for(&spec, &d)? };
    let mut emitted: u128 = 0;
    for mut record in d.codes(&sums) {
        if !oracle_check_invariant(&record.code, &d.group)? {
            return Err(Error::InconsistentInput(format!("record {emitted} is not invariant")).into());
        }
        if let Some(m) = max_dim.filter(|&m| record.dim <= m) {
            record.min_weight = weight_stats(ctx, &record.code, m)?.min_weight;
        }
        let basis = match emit {
            Emit::Generators => None,
            Emit::Basis | Emit::Both => Some(record_basis(&alg, &record, &d.components, &methods)?),
        };
        if c.format == Format::Json {
            writeln!(out, "{}", serde_json::to_string(&record.to_json(ctx, basis.as_deref()))?)?;
        } else {
            write_record_text(out, ctx, &record, emit, basis.as_deref())?;
        }
        emitted += 1;
    }
    let expected = d.count_all(&tables)?;
    if num_bigint::BigUint::from(emitted) != expected {
        return Err(Error::InconsistentInput(format!("emitted {emitted} records, expected {expected}")).into());
    }
    Ok(())
}

fn write_record_text(
    out: &mut impl Write,
    ctx: &FieldCtx,
    record: &CodeRecord,
    emit: Emit,
    basis: Option<&[Vector]>,
) -> Result<()> {
    let decomposition: Vec<String> = record.decomposition.iter().map(|y| index_set(y)).collect();
    write!(out, "dim {} {}", record.dim, decomposition.join(" "))?;
    if emit != Emit::Basis {
        write!(out, " gens")?;
        for v in &record.generators {
            write!(out, " {}", format_vector(ctx, v))?;
        }
    }
    if let Some(b) = basis {
        write!(out, " basis")?;
        for v in b {
            write!(out, " {}", format_vector(ctx, v))?;
        }
    }
    if let Some(w) = record.min_weight {
        write!(out, " min_weight {w}")?;
    }
    writeln!(out)?;
    Ok(())
}

fn source_name(t: &BinomTable) -> &'static str {
    match t.source {
        BinomSource::ClosedForm => "closed form",
        BinomSource::Enumerated => "enumerated",
    }
}

pub fn count(c: &Common, one_generator: bool, out: &mut impl Write) -> Result<()> {
    let (_, d) = decompose(c)?;
    let tables = d.tables()?;
    let total = if one_generator { d.count_one_generator(&tables)? } else { d.count_all(&tables)? };
    let table_json = |t: &BinomTable| -> Result<Value> {
        let row = (0..=t.mult()).map(|k| t.binom(k).map(|b| b.to_string())).collect::<ginv_core::Result<Vec<_>>>()?;
        Ok(json!({"b": t.b.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "binom": row, "source": source_name(t)}))
    };
    if c.format == Format::Json {
        let comps = tables.iter().map(table_json).collect::<Result<Vec<_>>>()?;
        return print_json(out, &json!({"count": total.to_string(), "components": comps}));
    }
    writeln!(out, "{total}")?;
    for (j, (comp, t)) in d.components.iter().zip(&tables).enumerate() {
        let b: Vec<String> = t.b.iter().map(|x| x.to_string()).collect();
        let binom = (0..=t.mult()).map(|k| t.binom(k).map(|b| b.to_string())).collect::<ginv_core::Result<Vec<_>>>()?;
        writeln!(
            out,
            "component {j}: n_j {}, k_j {}, d {}, simples in tI [{}], binom(nI, tI) [{}] ({})",
            comp.mult_in_m,
            comp.mult_in_a,
            comp.simple_dim,
            b.join(", "),
            binom.join(", "),
            source_name(t)
        )?;
    }
    Ok(())
}

pub fn basis(c: &Common, which: Option<usize>, out: &mut impl Write) -> Result<()> {
    let (spec, d) = decompose(c)?;
    let ctx = d.group.field();
    let alg = d.algebra();
    let tables = d.tables()?;
    let sums = d.sums(&tables)?;
    let methods = methods_for(&spec, &d)?;
    let method_names: Vec<String> = methods
        .iter()
        .map(|m| match m {
            BasisMethod::Idempotent { e, .. } => alg.format(e),
            BasisMethod::Orbit => "orbit".to_string(),
        })
        .collect();
    let stream = d.codes(&sums);
    let total = stream.len_hint();
    if let Some(k) = which.filter(|&k| k as u128 >= total) {
        return Err(
            Error::Input { location: "--record".into(), message: format!("{k} is out of range (0..{total})") }.into()
        );
    }
    let mut records = Vec::new();
    for (k, record) in stream.enumerate() {
        if which.is_some_and(|w| w != k) {
            continue;
        }
        let b = record_basis(&alg, &record, &d.components, &methods)?;
        let single = one_generator_vector(&d.group, &record)?;
        records.push((k, record, b, single));
        if which.is_some() {
            break;
        }
    }
    if c.format == Format::Json {
        let items: Vec<Value> = records
            .iter()
            .map(|(k, r, b, single)| {
                json!({
                    "record": k,
                    "decomposition": r.decomposition,
                    "basis": b.iter().map(|v| format_vector(ctx, v)).collect::<Vec<_>>(),
                    "one_generator": single.as_ref().map(|v| format_vector(ctx, v)),
                })
            })
            .collect();
        return print_json(out, &json!({"methods": method_names, "records": items}));
    }
    for (j, m) in method_names.iter().enumerate() {
        writeln!(out, "component {j}: {m}")?;
    }
    for (k, r, b, single) in &records {
        let decomposition: Vec<String> = r.decomposition.iter().map(|y| index_set(y)).collect();
        let b: Vec<String> = b.iter().map(|v| format_vector(ctx, v)).collect();
        write!(out, "record {k} {}: {}", decomposition.join(" "), b.join(" "))?;
        if let Some(v) = single {
            write!(out, " generator {}", format_vector(ctx, v))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

pub fn iso_check(c: &Common, matrix: &Path, out: &mut impl Write) -> Result<()> {
    let g = group(c)?;
    let text = std::fs::read_to_string(matrix).with_context(|| format!("reading {}", matrix.display()))?;
    let a = parse_matrix_file(g.field(), &text, g.degree())?;
    let rep = RegularBasisRep::new(&g)?;
    let ok = check_weight_iso(&g, &a, &rep)?;
    if c.format == Format::Json {
        return print_json(out, &json!({ "weight_iso": ok }));
    }
    writeln!(out, "{ok}")?;
    Ok(())
}

pub fn iso_search(c: &Common, budget: u64, out: &mut impl Write) -> Result<()> {
    let g = group(c)?;
    let rep = RegularBasisRep::new(&g)?;
    let found = match search_weight_iso(&g, &rep, budget)? {
        SearchOutcome::Found(a) => Some(matrix_rows(g.field(), &a)),
        SearchOutcome::None => None,
    };
    if c.format == Format::Json {
        return print_json(out, &json!({"found": found.is_some(), "matrix": found}));
    }
    match found {
        Some(rows) => {
            writeln!(out, "found")?;
            for r in rows {
                writeln!(out, "{r}")?;
            }
        }
        None => writeln!(out, "none")?,
    }
    Ok(())
}

pub fn oracle(c: &Common, out: &mut impl Write) -> Result<()> {
    let g = group(c)?;
    let all = oracle_all_submodules(&g, c.cap.unwrap_or(DEFAULT_ORACLE_CAP))?;
    let ctx = g.field();
    if c.format == Format::Json {
        let codes: Vec<Vec<String>> = all.iter().map(|m| rows(ctx, m)).collect();
        return print_json(out, &json!({"count": all.len(), "codes": codes}));
    }
    writeln!(out, "{}", all.len())?;
    for m in &all {
        writeln!(out, "dim {} {}", m.dim(), rows(ctx, m).join(" "))?;
    }
    Ok(())
}

pub fn verify_idempotents(c: &Common, out: &mut impl Write) -> Result<()> {
    let (spec, opts) = load(c)?;
    if spec.idempotents.is_empty() {
        return Err(
            Error::Input { location: "idempotents".into(), message: "the problem file lists none".into() }.into()
        );
    }
    let g = GroupTable::close_generators(&spec.field, spec.n, &spec.generators, opts.max_order)?;
    let alg = Algebra::new(&g);
    let idems = spec.idempotents.iter().map(|t| alg.from_terms(t)).collect::<ginv_core::Result<Vec<_>>>()?;
    let r = alg.verify_basic_set(&idems);
    if c.format == Format::Json {
        return print_json(
            out,
            &json!({
                "idempotent": r.idempotent,
                "central": r.central,
                "non_orthogonal": r.non_orthogonal,
                "sums_to_one": r.sums_to_one,
                "isomorphic_pairs": r.isomorphic_pairs,
                "ideal_dims": r.ideal_dims,
                "orthogonal_set": r.is_orthogonal_set(),
                "basic": r.is_basic(),
            }),
        );
    }
    let bools = |v: &[bool]| v.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" ");
    let pairs = |v: &[(usize, usize)]| v.iter().map(|(i, j)| format!("({i},{j})")).collect::<Vec<_>>().join(" ");
    writeln!(out, "idempotent: {}", bools(&r.idempotent))?;
    writeln!(out, "central: {}", bools(&r.central))?;
    writeln!(out, "non-orthogonal pairs: {}", pairs(&r.non_orthogonal))?;
    writeln!(out, "sums to one: {}", r.sums_to_one)?;
    writeln!(out, "isomorphic pairs: {}", pairs(&r.isomorphic_pairs))?;
    let dims: Vec<String> = r.ideal_dims.iter().map(|d| d.to_string()).collect();
    writeln!(out, "ideal dims: {}", dims.join(" "))?;
    writeln!(out, "orthogonal set: {}", r.is_orthogonal_set())?;
    writeln!(out, "basic: {}", r.is_basic())?;
    Ok(())
}
