//! The one-shot verification suite behind `sextic verify`.

use std::collections::BTreeMap;

use anyhow::{anyhow, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use sextic_core::classify::table::reference_order;
use sextic_core::classify::{
    dynkin_induced, e8_perturbation_census, sigma2_census, Ade, CurveKind, SingularitySet,
};
use sextic_core::cmap::{canonical_code, CombinatorialMap, Dart, Orientation, Role};
use sextic_core::fpgroup::abelian::mat_mul;
use sextic_core::fpgroup::{
    artin_action, braid_bracket, braid_word, coset_enumerate, group_order, regular_rep,
    smith_normal_form, Presentation, StructureTag, Word,
};
use sextic_core::vankampen::{
    alpha, analyze, b_in_c, dm_perturbations, e8_perturbation_group, e8_perturbation_group_c,
    global_perturbation, lmn_relators, relations_at_infinity, size, size2, special_group,
    standard_group, E8Perturbation, GlobalBase, LocalChange, SexticGroupSpec, SpecialCase,
};

use crate::cache::Cache;
use crate::commands::classify_cmd;
use crate::config::{Format, RunConfig};

#[derive(Clone, Debug)]
pub struct Check {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        format!(
            "criterion {}: {verdict}  {}  {}",
            self.id, self.name, self.detail
        )
    }
}

type Outcome = Result<(bool, String)>;

fn gen(i: u32) -> Word {
    Word::gen(i - 1)
}

/// Rows of `classify <kind>` as (set, n_r, n_c, printed parameters), read back from
/// the JSON artifact so a warm cache skips the census.
fn rows(
    kind: CurveKind,
    cfg: &RunConfig,
    cache: &Cache,
) -> Result<(Value, Vec<(String, usize, usize, String)>)> {
    let json_cfg = RunConfig {
        format: Format::Json,
        ..cfg.clone()
    };
    let v: Value = serde_json::from_str(&classify_cmd(kind, &json_cfg, cache)?)?;
    let rows = v["rows"]
        .as_array()
        .ok_or_else(|| anyhow!("classify artifact without rows"))?
        .iter()
        .map(|r| {
            (
                r["set"].as_str().unwrap_or_default().to_string(),
                r["n_r"].as_u64().unwrap_or(0) as usize,
                r["n_c"].as_u64().unwrap_or(0) as usize,
                r["lmn"].as_str().unwrap_or_default().to_string(),
            )
        })
        .collect();
    Ok((v["totals"].clone(), rows))
}

fn table_match(kind: CurveKind, expect: [u64; 4], cfg: &RunConfig, cache: &Cache) -> Outcome {
    let (totals, got) = rows(kind, cfg, cache)?;
    let t = [
        &totals["classes"],
        &totals["sets"],
        &totals["n_r"],
        &totals["n_c"],
    ]
    .map(|x| x.as_u64().unwrap_or(0));
    let mut ours: Vec<(String, usize, usize)> =
        got.into_iter().map(|(s, r, c, _)| (s, r, c)).collect();
    let mut theirs: Vec<(String, usize, usize)> = reference_order(kind)
        .iter()
        .map(|&(s, r, c, _)| (s.to_string(), r, c))
        .collect();
    ours.sort();
    theirs.sort();
    let pass = t == expect && ours == theirs;
    Ok((
        pass,
        format!(
            "totals {}/{}/{}/{}, {} rows",
            t[0],
            t[1],
            t[2],
            t[3],
            ours.len()
        ),
    ))
}

fn lmn_column(cfg: &RunConfig, cache: &Cache) -> Outcome {
    let mut compared = 0;
    let mut bad = Vec::new();
    for kind in [CurveKind::Irreducible, CurveKind::Reducible] {
        let (_, got) = rows(kind, cfg, cache)?;
        for (i, ((set, _, _, ours), &(_, _, _, printed))) in
            got.iter().zip(reference_order(kind)).enumerate()
        {
            if printed.is_empty() || printed == "*" {
                continue;
            }
            compared += 1;
            if ours != printed {
                let prime = if kind == CurveKind::Reducible {
                    "'"
                } else {
                    ""
                };
                bad.push(format!("row {}{prime} {set}: {ours} vs {printed}", i + 1));
            }
        }
    }
    let detail = if bad.is_empty() {
        format!("{compared} triples match")
    } else {
        format!("{} of {compared} differ: {}", bad.len(), bad.join("; "))
    };
    Ok((bad.is_empty(), detail))
}

fn group_orders(cfg: &RunConfig, cache: &Cache) -> Outcome {
    let lim = cfg.coset_limit;
    let mut bad = Vec::new();
    let mut expect = |what: String, got: Result<usize, _>, want: usize| {
        if got != Ok(want) {
            bad.push(format!("{what}: {got:?} (want {want})"));
        }
    };
    expect("size(5,4,3)".into(), size(5, 4, 3, lim), 720);
    expect("size(-,-,1)".into(), size(0, 0, 1, lim), 6);
    expect("size(3,-,-)".into(), size(3, 0, 0, lim), 6);
    expect("size2(4,3,-)".into(), size2(4, 3, 0, lim), 1800);
    for (kind, printed_rows) in [
        (
            CurveKind::Irreducible,
            rows(CurveKind::Irreducible, cfg, cache)?.1,
        ),
        (
            CurveKind::Reducible,
            rows(CurveKind::Reducible, cfg, cache)?.1,
        ),
    ] {
        for (set, _, _, cell) in printed_rows {
            let Ok(sel) = cell.parse::<crate::selector::Selector>() else {
                continue;
            };
            let crate::selector::Selector::Explicit { l, m, n, .. } = sel else {
                continue;
            };
            match kind {
                CurveKind::Irreducible if (l, m, n) != (5, 4, 3) => {
                    expect(format!("{set} size{cell}"), size(l, m, n, lim), 6)
                }
                CurveKind::Reducible
                    if SpecialCase::from_set(&set).is_none() && (l, m, n) != (4, 3, 0) =>
                {
                    expect(format!("{set} size2{cell}"), size2(l, m, n, lim), 15)
                }
                _ => {}
            }
        }
    }
    let a2_cubed = alpha(2).pow(3);
    expect(
        "2E8+A3".into(),
        group_order(&special_group(SpecialCase::TwoE8A3), lim),
        6,
    );
    expect(
        "E8+E6+D5".into(),
        group_order(&special_group(SpecialCase::E8E6D5), lim),
        6,
    );
    expect(
        "E8+D6+A5 mod a2^3".into(),
        group_order(&special_group(SpecialCase::E8D6A5).with([a2_cubed]), lim),
        15,
    );
    let pass = bad.is_empty();
    Ok((
        pass,
        if pass {
            "all orders exact".into()
        } else {
            bad.join("; ")
        },
    ))
}

fn structure(cfg: &RunConfig) -> Outcome {
    let lim = cfg.coset_limit;
    let g6 = standard_group(&SexticGroupSpec::lmn(5, 4, 3));
    let r = analyze(&g6, None, lim)?;
    let g6_ok = r.order == 720
        && r.derived_order == 120
        && r.derived_perfect
        && r.derived_tag == StructureTag::SL25
        && r.derived_involutions == 1
        && r.generator_orders.iter().all(|&o| o == 12)
        && r.centralizer_of_derived_tag == StructureTag::Cyclic(12)
        && r.centralizer_meet_derived == 2
        && r.centralizer_of_derived_order * r.derived_order / r.centralizer_meet_derived == 720;
    let ginf = standard_group(&SexticGroupSpec::lmn(4, 3, 0));
    let q = analyze(&ginf, Some(&alpha(2).pow(3)), lim)?;
    let ginf_ok = q.order == 1800
        && q.derived_order == 120
        && q.derived_perfect
        && q.centralizer_of_derived_tag == StructureTag::Cyclic(30)
        && q.centralizer_meet_derived == 2;
    let with_brackets = |brackets: &[Word], central: Option<Word>| {
        let mut rels = relations_at_infinity(false);
        rels.extend(brackets.iter().cloned());
        rels.extend(central);
        group_order(&Presentation::new(3, rels), lim)
    };
    let [bl, _, _] = lmn_relators(5, 4, 3).try_into().expect("three brackets");
    let redundant_g6 = with_brackets(&[bl], None) == Ok(720);
    let [il, im, _] = lmn_relators(4, 3, 0).try_into().expect("three brackets");
    let redundant_ginf = with_brackets(&[il], Some(alpha(2).pow(3))) == Ok(1800)
        && with_brackets(&[im], Some(alpha(2).pow(3))) == Ok(1800);
    Ok((
        g6_ok && ginf_ok && redundant_g6 && redundant_ginf,
        format!(
            "G6 {} [{}], derived {} {}; Ginf/a2^3 {}, centralizer {}; redundancy {}/{}",
            r.order,
            r.tag,
            r.derived_order,
            r.derived_tag,
            q.order,
            q.centralizer_of_derived_tag,
            redundant_g6,
            redundant_ginf
        ),
    ))
}

fn local_perturbations(cfg: &RunConfig) -> Outcome {
    let lim = cfg.coset_limit;
    let q = |p: &Presentation, w: Word| group_order(&p.clone().with([w]), lim);
    let b1 = gen(1);
    let cases = [
        (E8Perturbation::A4A3, b1.pow(3), 360),
        (E8Perturbation::A4A2A1, b1.pow(2), 120),
        (E8Perturbation::D5A2, b1.pow(5), 600),
        (E8Perturbation::D5A2, b1.pow(12), 12),
        (E8Perturbation::A6A1, (&gen(1) * &gen(2)).pow(7), 14),
    ];
    let mut got = Vec::new();
    let mut pass = true;
    for (kind, w, want) in cases {
        let o = q(&e8_perturbation_group(kind), w);
        pass &= o == Ok(want);
        got.push(format!(
            "{}:{}",
            kind.name(),
            o.map_or("overflow".into(), |x| x.to_string())
        ));
    }
    let b1_in_c = &b_in_c()[0];
    for (kind, n) in [
        (E8Perturbation::A4A3, 3),
        (E8Perturbation::A4A2A1, 2),
        (E8Perturbation::D5A2, 5),
    ] {
        let pc = e8_perturbation_group_c(kind).ok_or_else(|| anyhow!("no c-basis form"))?;
        let same = q(&e8_perturbation_group(kind), gen(1).pow(n)) == q(&pc, b1_in_c.pow(n));
        pass &= same;
        if !same {
            got.push(format!("basis change differs for {}", kind.name()));
        }
    }
    Ok((pass, got.join(" ")))
}

fn global_perturbations(cfg: &RunConfig) -> Outcome {
    let lim = cfg.coset_limit;
    let mut pass = true;
    let mut notes = Vec::new();
    let local = [
        (
            GlobalBase::G6,
            [
                (E8Perturbation::A4A3, 720),
                (E8Perturbation::A4A2A1, 6),
                (E8Perturbation::D5A2, 6),
            ],
        ),
        (
            GlobalBase::Ginf,
            [
                (E8Perturbation::D5A2, 1800),
                (E8Perturbation::A4A2A1, 15),
                (E8Perturbation::A4A3, 15),
            ],
        ),
    ];
    for (base, cases) in local {
        let mut orders = Vec::new();
        for (i, (kind, want)) in cases.into_iter().enumerate() {
            let g = global_perturbation(base, &LocalChange::E8(kind), lim)?;
            // the first change keeps the group
            pass &= g.report.order == want && g.order_preserved == (i == 0);
            orders.push(format!("{}:{}", kind.name(), g.report.order));
        }
        notes.push(format!("{base:?} {{{}}}", orders.join(",")));
    }
    let modified: [(GlobalBase, (u32, u32, u32), u64); 7] = [
        (GlobalBase::G6, (1, 4, 3), 6),
        (GlobalBase::G6, (5, 2, 3), 6),
        (GlobalBase::G6, (5, 4, 1), 6),
        (GlobalBase::Ginf, (2, 3, 0), 15),
        (GlobalBase::Ginf, (4, 1, 0), 15),
        (GlobalBase::Ginf, (4, 3, 4), 15),
        (GlobalBase::Ginf, (4, 3, 3), 15),
    ];
    let mut bad = Vec::new();
    for (base, (l, m, n), want) in modified {
        let g = global_perturbation(base, &LocalChange::Lmn(l, m, n), lim)?;
        if g.report.order != want {
            bad.push(format!(
                "{base:?}({l},{m},{n}) -> {} (want {want})",
                g.report.order
            ));
        }
    }
    pass &= bad.is_empty();
    notes.extend(bad);
    Ok((pass, notes.join("; ")))
}

fn censuses() -> Outcome {
    let census = e8_perturbation_census();
    let mut from_maps: Vec<SingularitySet> =
        census.iter().flat_map(|p| p.sets.iter().cloned()).collect();
    from_maps.sort();
    let mut from_dynkin = dynkin_induced(Ade::E(8), 7)?;
    from_dynkin.sort();
    let mut nonab: Vec<String> = dm_perturbations(6)
        .into_iter()
        .filter(|p| !p.abelian)
        .map(|p| p.name())
        .collect();
    nonab.sort();
    let pass = census.len() == 7
        && from_maps.len() == 8
        && from_maps == from_dynkin
        && nonab == ["D2+A3", "D3+A2"];
    Ok((
        pass,
        format!(
            "{} skeletons, {} sets; D6 nonabelian: {}",
            census.len(),
            from_maps.len(),
            nonab.join(", ")
        ),
    ))
}

/// The map with darts renamed by `p`.
pub fn relabel(m: &CombinatorialMap, p: &[Dart]) -> CombinatorialMap {
    let n = m.darts();
    let mut sigma = vec![0; n];
    let mut theta = vec![0; n];
    let mut inv = vec![0; n];
    for d in 0..n {
        sigma[p[d] as usize] = p[m.sigma(d as Dart) as usize];
        theta[p[d] as usize] = p[m.theta(d as Dart) as usize];
        inv[p[d] as usize] = d as Dart;
    }
    let draft = CombinatorialMap::from_parts(
        sigma.clone(),
        theta.clone(),
        vec![Role::Black; m.vertex_count()],
    )
    .expect("relabeling keeps a valid map");
    let roles = (0..m.vertex_count() as u32)
        .map(|v| m.role_of(inv[draft.vertex_darts(v)[0] as usize]))
        .collect();
    CombinatorialMap::from_parts(sigma, theta, roles).expect("relabeling keeps a valid map")
}

fn properties(cfg: &RunConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut notes = BTreeMap::new();

    let maps: Vec<CombinatorialMap> = sigma2_census()
        .into_iter()
        .map(|s| s.map)
        .chain(e8_perturbation_census().into_iter().map(|p| p.map))
        .collect();
    let euler = maps
        .iter()
        .all(|m| m.is_circle() || (m.corners_conserved() && m.genus() == 0));
    notes.insert("euler", euler);

    let mut relabel_ok = true;
    for m in maps.iter().filter(|m| !m.is_circle()) {
        let mut p: Vec<Dart> = (0..m.darts() as Dart).collect();
        p.shuffle(&mut rng);
        relabel_ok &= canonical_code(&relabel(m, &p), Orientation::Preserve)
            == canonical_code(m, Orientation::Preserve);
    }
    notes.insert("canonical", relabel_ok);

    let mut braid_ok = true;
    for _ in 0..50 {
        let w = Word::from_powers(
            &(0..rng.gen_range(1..6))
                .map(|_| (rng.gen_range(0..3), rng.gen_range(-3i64..=3)))
                .collect::<Vec<_>>(),
        );
        braid_ok &=
            artin_action(&braid_word(&[1, 2, 1]), &w) == artin_action(&braid_word(&[2, 1, 2]), &w);
        braid_ok &= artin_action(&braid_word(&[1, -1]), &w) == w;
    }
    notes.insert("braid", braid_ok);

    let mut snf_ok = true;
    for _ in 0..50 {
        let (r, c) = (rng.gen_range(1..5), rng.gen_range(1..5));
        let a: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect())
            .collect();
        let s = smith_normal_form(&a, c);
        let wide: Vec<Vec<i128>> = a
            .iter()
            .map(|row| row.iter().map(|&x| x as i128).collect())
            .collect();
        let prod = mat_mul(&mat_mul(&s.u, &wide, r), &s.v, c);
        let diag: Vec<i128> = (0..r.min(c)).map(|i| s.d[i][i]).collect();
        let off_zero = (0..r).all(|i| (0..c).all(|j| i == j || s.d[i][j] == 0));
        let chain = diag
            .windows(2)
            .all(|w| w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0));
        snf_ok &= prod == s.d && off_zero && chain && diag.iter().all(|&x| x >= 0);
    }
    notes.insert("smith", snf_ok);

    let mut faithful = true;
    for p in [
        standard_group(&SexticGroupSpec::lmn(5, 4, 3)),
        standard_group(&SexticGroupSpec::lmn(0, 0, 1)),
        standard_group(&SexticGroupSpec::lmn(4, 3, 0).mod_alpha2_cubed()),
    ] {
        let t = coset_enumerate(&p, &[], cfg.coset_limit)?;
        let g = regular_rep(&t).map_err(|e| anyhow!("{e:?}"))?;
        faithful &= g.degree() == t.index() && g.order() == t.index() as u128;
    }
    notes.insert("regular", faithful);

    let mut gcd_ok = true;
    for _ in 0..8 {
        let (m, n) = (rng.gen_range(1..=6u32), rng.gen_range(1..=6u32));
        let (a, b) = (Word::gen(0), Word::gen(1));
        let base = [a.pow(2), b.pow(2)];
        let both = Presentation::new(
            2,
            base.iter()
                .cloned()
                .chain([braid_bracket(&a, &b, m), braid_bracket(&a, &b, n)]),
        );
        let g = gcd(m, n);
        let one = Presentation::new(2, base.iter().cloned().chain([braid_bracket(&a, &b, g)]));
        gcd_ok &= group_order(&both, cfg.coset_limit) == group_order(&one, cfg.coset_limit)
            && group_order(&one, cfg.coset_limit) == Ok(2 * g as usize);
    }
    notes.insert("gcd", gcd_ok);

    let pass = notes.values().all(|&b| b);
    let detail = notes
        .iter()
        .map(|(k, v)| format!("{k}={}", if *v { "ok" } else { "FAILED" }))
        .collect::<Vec<_>>()
        .join(" ");
    Ok((pass, format!("{detail} (seed {})", cfg.seed)))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn run(cfg: &RunConfig, cache: &Cache) -> Vec<Check> {
    let criteria: [(&'static str, Box<dyn Fn() -> Outcome + '_>); 9] = [
        (
            "irreducible classification",
            Box::new(|| table_match(CurveKind::Irreducible, [39, 26, 21, 9], cfg, cache)),
        ),
        (
            "reducible classification",
            Box::new(|| table_match(CurveKind::Reducible, [18, 17, 16, 1], cfg, cache)),
        ),
        ("(l,m,n) column", Box::new(|| lmn_column(cfg, cache))),
        ("group orders", Box::new(|| group_orders(cfg, cache))),
        ("structure of G6 and Ginf", Box::new(|| structure(cfg))),
        (
            "E8 local perturbations",
            Box::new(|| local_perturbations(cfg)),
        ),
        (
            "global perturbations",
            Box::new(|| global_perturbations(cfg)),
        ),
        ("perturbation censuses", Box::new(censuses)),
        ("property suites", Box::new(|| properties(cfg))),
    ];
    criteria
        .into_iter()
        .enumerate()
        .map(|(i, (name, f))| {
            let (pass, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
            Check {
                id: i as u8 + 1,
                name,
                pass,
                detail,
            }
        })
        .collect()
}
