//! The `skeletons`, `classify`, `group` and `perturb` commands. Each renders a
//! deterministic artifact string in the requested format.

use std::fmt::Write as _;
use std::time::Instant;

use anyhow::{anyhow, bail, Result};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use sextic_core::classify::{
    classify, e8_perturbation_census, sigma2_census, splitting_markings, CurveKind, LmnCell,
    TableRow, VertexProfile,
};
use sextic_core::cmap::{canonical_code, CombinatorialMap, MapJson, Orientation};
use sextic_core::fpgroup::{EnumerationError, Presentation, Word};
use sextic_core::vankampen::{
    alpha, analyze, global_perturbation, special_group, standard_group, E8Perturbation, GlobalBase,
    GroupReport, LocalChange, SexticGroupSpec, SpecialCase,
};

use crate::cache::Cache;
use crate::config::{Format, RunConfig};
use crate::selector::Selector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SkeletonFilter {
    Sigma2,
    E8Perturbations,
}

impl SkeletonFilter {
    pub fn name(self) -> &'static str {
        match self {
            SkeletonFilter::Sigma2 => "sigma2",
            SkeletonFilter::E8Perturbations => "e8-perturbations",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Irreducible,
    Reducible,
}

impl From<KindArg> for CurveKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Irreducible => CurveKind::Irreducible,
            KindArg::Reducible => CurveKind::Reducible,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BaseArg {
    #[value(name = "G6")]
    G6,
    #[value(name = "Ginf")]
    Ginf,
}

impl From<BaseArg> for GlobalBase {
    fn from(b: BaseArg) -> Self {
        match b {
            BaseArg::G6 => GlobalBase::G6,
            BaseArg::Ginf => GlobalBase::Ginf,
        }
    }
}

pub fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn face_profile(m: &CombinatorialMap) -> Vec<u32> {
    if m.is_circle() {
        return vec![0, 0];
    }
    let mut g: Vec<u32> = m.faces().iter().map(|r| r.gonality).collect();
    g.sort_unstable_by(|a, b| b.cmp(a));
    g
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

// ---- skeletons ----

pub fn skeletons(filter: SkeletonFilter, cfg: &RunConfig, cache: &Cache) -> Result<String> {
    cache.get_or_compute("skeletons", &[filter.name(), cfg.format.name()], || {
        render_skeletons(filter, cfg.format)
    })
}

fn render_skeletons(filter: SkeletonFilter, format: Format) -> Result<String> {
    let mut entries: Vec<Value> = Vec::new();
    match filter {
        SkeletonFilter::Sigma2 => {
            for (i, sk) in sigma2_census().iter().enumerate() {
                let m = &sk.map;
                entries.push(json!({
                    "index": i + 1,
                    "code": hex_code(m),
                    "vertices": m.vertex_count(),
                    "edges": m.edge_count(),
                    "profile": VertexProfile::of(m),
                    "faces": face_profile(m),
                    "markings": splitting_markings(m).len(),
                    "map": MapJson::from(m),
                }));
            }
        }
        SkeletonFilter::E8Perturbations => {
            for (i, p) in e8_perturbation_census().iter().enumerate() {
                let m = &p.map;
                entries.push(json!({
                    "index": i + 1,
                    "code": hex_code(m),
                    "vertices": m.vertex_count(),
                    "edges": m.edge_count(),
                    "pendant": p.pendant,
                    "d": p.d,
                    "faces": face_profile(m),
                    "sets": p.sets.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "map": MapJson::from(m),
                }));
            }
        }
    }
    match format {
        Format::Json => to_json(&json!({
            "schema": 1,
            "filter": filter.name(),
            "count": entries.len(),
            "skeletons": entries,
        })),
        Format::Csv => {
            let mut out = String::from("index,code,vertices,edges,faces,markings,sets\n");
            for e in &entries {
                let faces: Vec<u64> = serde_json::from_value(e["faces"].clone())?;
                let sets: Vec<String> =
                    serde_json::from_value(e.get("sets").cloned().unwrap_or(json!([])))?;
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    e["index"],
                    e["code"].as_str().unwrap_or(""),
                    e["vertices"],
                    e["edges"],
                    join(&faces, " "),
                    e.get("markings").map_or(String::new(), |v| v.to_string()),
                    csv_field(&sets.join(" "))
                )?;
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = format!("{} skeletons ({})\n", entries.len(), filter.name());
            for e in &entries {
                let faces: Vec<u64> = serde_json::from_value(e["faces"].clone())?;
                write!(
                    out,
                    "{:>3}  V={} E={} faces [{}]",
                    e["index"].as_u64().unwrap_or(0),
                    e["vertices"],
                    e["edges"],
                    join(&faces, ",")
                )?;
                if let Some(k) = e.get("markings") {
                    write!(out, "  markings {k}")?;
                }
                if let Some(s) = e.get("sets") {
                    let sets: Vec<String> = serde_json::from_value(s.clone())?;
                    write!(out, "  {}", sets.join(", "))?;
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn hex_code(m: &CombinatorialMap) -> String {
    hex::encode(canonical_code(m, Orientation::Preserve))
}

// ---- classify ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct Totals {
    pub classes: usize,
    pub sets: usize,
    pub n_r: usize,
    pub n_c: usize,
}

pub fn totals(rows: &[TableRow]) -> Totals {
    let mut sets: Vec<String> = rows.iter().map(|r| r.set.to_string()).collect();
    sets.sort();
    sets.dedup();
    let n_r = rows.iter().map(|r| r.n_r).sum();
    let n_c = rows.iter().map(|r| r.n_c).sum::<usize>();
    Totals {
        classes: n_r + 2 * n_c,
        sets: sets.len(),
        n_r,
        n_c,
    }
}

fn lmn_columns(cell: &LmnCell) -> [String; 3] {
    match cell {
        LmnCell::Triple { lmn } => {
            let p = |x: u32| {
                if x == 0 {
                    "-".to_string()
                } else {
                    x.to_string()
                }
            };
            [p(lmn.l), p(lmn.m), p(lmn.n)]
        }
        LmnCell::Rewriting { .. } => [String::new(), String::new(), String::new()],
        LmnCell::Special => ["*".into(), "*".into(), "*".into()],
    }
}

pub fn classify_cmd(kind: CurveKind, cfg: &RunConfig, cache: &Cache) -> Result<String> {
    cache.get_or_compute("classify", &[&kind.to_string(), cfg.format.name()], || {
        render_classify(kind, cfg.format)
    })
}

fn render_classify(kind: CurveKind, format: Format) -> Result<String> {
    let rows = classify(kind);
    let t = totals(&rows);
    match format {
        Format::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "index": r.index,
                        "set": r.set.to_string(),
                        "fragment": r.fragment.name(),
                        "n_r": r.n_r,
                        "n_c": r.n_c,
                        "lmn": r.lmn.to_string(),
                        "reducible": r.reducible,
                    })
                })
                .collect();
            to_json(&json!({ "schema": 1, "kind": kind, "totals": t, "rows": rows_json }))
        }
        Format::Csv => {
            let mut out = String::from("index,set,fragment,n_r,n_c,l,m,n,reducible\n");
            for r in &rows {
                let [l, m, n] = lmn_columns(&r.lmn);
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    r.index, r.set, r.fragment, r.n_r, r.n_c, l, m, n, r.reducible
                )?;
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "{:>3}  {:<18} {:<13} {:<7} {}",
                "No", "set", "fragment", "(nr,nc)", "(l,m,n)"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>3}  {:<18} {:<13} ({},{})   {}",
                    r.index,
                    r.set.to_string(),
                    r.fragment.name(),
                    r.n_r,
                    r.n_c,
                    r.lmn
                )?;
            }
            writeln!(
                out,
                "totals: {} classes, {} sets, {} real, {} pairs",
                t.classes, t.sets, t.n_r, t.n_c
            )?;
            Ok(out)
        }
    }
}

// ---- group ----

/// What a selector resolves to.
#[derive(Clone, Debug)]
pub struct GroupTarget {
    pub label: String,
    pub presentation: Presentation,
    pub central: Option<Word>,
    pub row: Option<Value>,
}

pub fn resolve(selector: &Selector) -> Result<GroupTarget> {
    let row_target = |kind: CurveKind, r: &TableRow| -> GroupTarget {
        let reducible = kind == CurveKind::Reducible;
        let presentation = match (SpecialCase::from_set(&r.set.to_string()), r.lmn.triple()) {
            (Some(case), _) => special_group(case),
            (None, Some(t)) => standard_group(&SexticGroupSpec::lmn(t.l, t.m, t.n)),
            (None, None) => unreachable!("rows without parameters are special cases"),
        };
        GroupTarget {
            label: r.set.to_string(),
            presentation,
            central: reducible.then(|| alpha(2).pow(3)),
            row: Some(json!({
                "kind": kind,
                "index": r.index,
                "set": r.set.to_string(),
                "fragment": r.fragment.name(),
                "lmn": r.lmn.to_string(),
                "n_r": r.n_r,
                "n_c": r.n_c,
                "abelian_by_rewriting": matches!(r.lmn, LmnCell::Rewriting { .. }),
            })),
        }
    };
    match selector {
        Selector::Explicit { l, m, n, extras } => Ok(GroupTarget {
            label: selector.to_string(),
            presentation: standard_group(
                &SexticGroupSpec::lmn(*l, *m, *n).with_extra(extras.iter().cloned()),
            ),
            central: None,
            row: None,
        }),
        Selector::Row { kind, index } => {
            let rows = classify(*kind);
            let r = rows.iter().find(|r| r.index == *index).ok_or_else(|| {
                anyhow!("no row {index} in the {kind} table ({} rows)", rows.len())
            })?;
            Ok(row_target(*kind, r))
        }
        Selector::Set { set, occurrence } => {
            let mut seen = 0;
            for kind in [CurveKind::Irreducible, CurveKind::Reducible] {
                for r in classify(kind) {
                    if &r.set == set {
                        seen += 1;
                        if seen == *occurrence {
                            return Ok(row_target(kind, &r));
                        }
                    }
                }
            }
            bail!("{set} occurs in {seen} classified row(s); occurrence {occurrence} requested")
        }
    }
}

#[derive(Serialize, serde::Deserialize)]
pub struct GroupOutcome {
    pub output: String,
    pub overflow: bool,
}

/// Runs the group analysis. With a cache, the first run's output (timings
/// included) is replayed verbatim.
pub fn group_cmd(
    selector: &Selector,
    quotient_a2_cubed: bool,
    cfg: &RunConfig,
    cache: &Cache,
) -> Result<GroupOutcome> {
    let limit = cfg.coset_limit.to_string();
    let args = [
        selector.to_string(),
        quotient_a2_cubed.to_string(),
        cfg.format.name().to_string(),
        limit,
    ];
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let stored = cache.get_or_compute("group", &args, || {
        let target = resolve(selector)?;
        let central = if quotient_a2_cubed {
            Some(alpha(2).pow(3))
        } else {
            target.central.clone()
        };
        let start = Instant::now();
        let result = analyze(&target.presentation, central.as_ref(), cfg.coset_limit);
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        let (status, report, overflow) = match result {
            Ok(r) => ("ok", Some(r), false),
            Err(EnumerationError::Overflow(_)) => ("overflow", None, true),
        };
        let output = render_group(
            &target,
            central.as_ref(),
            status,
            report.as_ref(),
            elapsed,
            cfg,
        )?;
        Ok(serde_json::to_string(&GroupOutcome { output, overflow })?)
    })?;
    Ok(serde_json::from_str(&stored)?)
}

fn render_group(
    t: &GroupTarget,
    central: Option<&Word>,
    status: &str,
    report: Option<&GroupReport>,
    elapsed_ms: f64,
    cfg: &RunConfig,
) -> Result<String> {
    match cfg.format {
        Format::Json | Format::Csv => to_json(&json!({
            "schema": 1,
            "selector": t.label,
            "row": t.row,
            "presentation": t.presentation.to_string(),
            "quotient": central.map(|c| c.to_string()),
            "status": status,
            "coset_limit": cfg.coset_limit,
            "report": report,
            "timings_ms": { "analyze": (elapsed_ms * 1000.0).round() / 1000.0 },
        })),
        Format::Text => {
            let mut out = format!("{}\n", t.label);
            if let Some(c) = central {
                writeln!(out, "quotient by {c}")?;
            }
            if t.row
                .as_ref()
                .is_some_and(|r| r["abelian_by_rewriting"] == true)
            {
                writeln!(out, "abelian by rewriting the leaf relation")?;
            }
            match report {
                None => writeln!(
                    out,
                    "coset enumeration overflow (limit {})",
                    cfg.coset_limit
                )?,
                Some(r) => {
                    writeln!(out, "order {}", r.order)?;
                    writeln!(
                        out,
                        "abelian invariants [{}]",
                        join(&r.abelian_invariants, ",")
                    )?;
                    writeln!(out, "abelian {}", r.abelian)?;
                    writeln!(
                        out,
                        "derived subgroup order {} ({}), perfect {}",
                        r.derived_order, r.derived_tag, r.derived_perfect
                    )?;
                    writeln!(out, "structure {}", r.tag)?;
                }
            }
            Ok(out)
        }
    }
}

// ---- perturb ----

pub fn parse_change(s: &str) -> Result<LocalChange> {
    if let Some(k) = E8Perturbation::from_name(s.trim()) {
        return Ok(LocalChange::E8(k));
    }
    match s.parse::<Selector>() {
        Ok(Selector::Explicit { l, m, n, extras }) if extras.is_empty() => {
            Ok(LocalChange::Lmn(l, m, n))
        }
        _ => bail!(
            "unknown perturbation {s:?}: expected one of {} or l,m,n",
            E8Perturbation::ALL
                .iter()
                .map(|k| k.name())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    }
}

pub fn perturb_cmd(
    base: GlobalBase,
    change_text: &str,
    cfg: &RunConfig,
    cache: &Cache,
) -> Result<String> {
    let change = parse_change(change_text)?;
    let base_name = match base {
        GlobalBase::G6 => "G6",
        GlobalBase::Ginf => "Ginf",
    };
    cache.get_or_compute(
        "perturb",
        &[
            base_name,
            change_text.trim(),
            cfg.format.name(),
            &cfg.coset_limit.to_string(),
        ],
        || {
            let g = global_perturbation(base, &change, cfg.coset_limit)
                .map_err(|e| anyhow!("coset enumeration failed: {e}"))?;
            let quotient = matches!(base, GlobalBase::Ginf);
            let verdict = if g.order_preserved {
                format!("isomorphism (order preserved: {})", g.report.order)
            } else if g.report.abelian {
                format!(
                    "abelian ({}order {})",
                    if quotient { "quotient " } else { "" },
                    g.report.order
                )
            } else {
                format!("order changed: {} -> {}", g.base_order, g.report.order)
            };
            match cfg.format {
                Format::Text => Ok(format!("{verdict}\n")),
                _ => to_json(&json!({
                    "schema": 1,
                    "base": base_name,
                    "change": change_text.trim(),
                    "quotient": quotient.then(|| alpha(2).pow(3).to_string()),
                    "base_order": g.base_order,
                    "order": g.report.order,
                    "order_preserved": g.order_preserved,
                    "alpha1_cubed_order": g.alpha1_cubed_order,
                    "verdict": verdict,
                    "report": g.report,
                })),
            }
        },
    )
}
