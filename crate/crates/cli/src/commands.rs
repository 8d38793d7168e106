use num_bigint::BigUint;
use serde_json::{json, Value};

use lielevel_core::branching::{
    branch_g2_sl3, branch_so_even, branch_so_odd, branch_sl, branch_sp, filtration_sl, filtration_sp, restrict_o,
    Filtration, IndexConvention,
};
use lielevel_core::classify::classify as classify_weight;
use lielevel_core::harmonic::stabilizer_generator_report;
use lielevel_core::orbits::{
    centralizer_codim, enumerate_orbit_within, fixed_count, min_orbit_f, orbit_size, regular_in, stabilizer_report,
    WeightShape,
};
use lielevel_core::reduction::{certify, headline_level, verify, Step};
use lielevel_core::weyl::irrep_dim;
use lielevel_core::{DominantWeight, Error, Family, GroupDesc, Label, RepSum};

use crate::render::{fields, table, Outcome};
use crate::{Failure, GroupArg, LabelArg, OrbitArgs, SweepArgs, Target};

pub fn parse_weight(s: &str) -> Result<Vec<i64>, Failure> {
    if s.trim().is_empty() {
        return Err(Failure::Usage("empty weight".into()));
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>().map_err(|_| Failure::Usage(format!("malformed weight entry '{t}' in '{s}'")))
        })
        .collect()
}

pub fn group_of(t: &Target) -> Result<GroupDesc, Failure> {
    let size = || t.n.ok_or_else(|| Failure::Usage(format!("--n is required for {:?}", t.group)));
    Ok(match t.group {
        GroupArg::Sl => GroupDesc::sl(size()?)?,
        GroupArg::Sp => GroupDesc::sp(size()?)?,
        GroupArg::So => GroupDesc::so(size()?)?,
        GroupArg::O => GroupDesc::o(size()?)?,
        GroupArg::G2 => {
            if t.n.is_some() {
                return Err(Failure::Usage("G2 takes no --n".into()));
            }
            GroupDesc::g2()
        }
    })
}

/// Label from the flag; for `O_N` without a flag, `empty` when the weight
/// needs it and `plus` otherwise.
fn label_for(g: &GroupDesc, entries: &[i64], flag: Option<LabelArg>) -> Label {
    match flag {
        Some(LabelArg::Plus) => Label::Plus,
        Some(LabelArg::Minus) => Label::Minus,
        Some(LabelArg::Empty) => Label::Empty,
        None if g.family() == Family::Ofull => {
            if g.size().is_multiple_of(2) && entries.last().is_some_and(|&x| x != 0) {
                Label::Empty
            } else {
                Label::Plus
            }
        }
        None => Label::None,
    }
}

pub fn target(t: &Target) -> Result<(GroupDesc, DominantWeight), Failure> {
    let entries = parse_weight(&t.weight)?;
    let g = group_of(t)?;
    let label = label_for(&g, &entries, t.label);
    let w = DominantWeight::new(&g, entries, label)?;
    Ok((g, w.canonical(&g)))
}

fn entries_string(e: &[i64]) -> String {
    let parts: Vec<String> = e.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn weight_json(g: &GroupDesc, w: &DominantWeight) -> Value {
    json!({ "group": g.to_string(), "weight": entries_string(&w.entries), "label": w.label.name() })
}

pub fn dim(t: &Target) -> Result<Outcome, Failure> {
    let (g, w) = target(t)?;
    let d = irrep_dim(&g, &w)?;
    let mut j = weight_json(&g, &w);
    j["dim"] = json!(d.to_string());
    let text = fields(&[("group", g.to_string()), ("weight", w.to_string()), ("dim", d.to_string())]);
    Ok(Outcome::ok(j, text))
}

/// Subgroup a branch of `g` lands in.
fn branch_target(g: &GroupDesc) -> Result<GroupDesc, Error> {
    let s = g.size();
    match g.family() {
        Family::SL => GroupDesc::sl(s - 1),
        Family::Sp => GroupDesc::sp(s - 1),
        Family::SOodd | Family::SOeven => GroupDesc::so(s - 1),
        Family::Ofull => GroupDesc::o(s - 1),
        Family::G2 => GroupDesc::sl(3),
    }
}

fn branch_sum(g: &GroupDesc, w: &DominantWeight) -> Result<RepSum, Error> {
    let s = g.size();
    match g.family() {
        Family::SL => branch_sl(s, w),
        Family::Sp => branch_sp(s, w),
        Family::SOodd => branch_so_odd(s / 2, w),
        Family::SOeven => branch_so_even(s / 2, w),
        Family::Ofull => restrict_o(s, w),
        Family::G2 => Ok(branch_g2_sl3(w.entries[0] as u32, w.entries[1] as u32)),
    }
}

fn sum_rows(g: &GroupDesc, s: &RepSum) -> Result<(Vec<Value>, Vec<Vec<String>>, BigUint), Error> {
    let mut items = Vec::new();
    let mut rows = Vec::new();
    let mut total = BigUint::from(0u32);
    for (w, m) in s.terms() {
        let d = irrep_dim(g, w)?;
        total += &d * *m;
        items.push(json!({
            "weight": entries_string(&w.entries),
            "label": w.label.name(),
            "multiplicity": m.to_string(),
            "dim": d.to_string(),
        }));
        rows.push(vec![w.to_string(), m.to_string(), d.to_string()]);
    }
    Ok((items, rows, total))
}

pub fn branch(t: &Target) -> Result<Outcome, Failure> {
    let (g, w) = target(t)?;
    let sub = branch_target(&g)?;
    let s = branch_sum(&g, &w)?;
    let (items, rows, total) = sum_rows(&sub, &s)?;
    let parent = irrep_dim(&g, &w)?;
    let mut j = weight_json(&g, &w);
    j["dim"] = json!(parent.to_string());
    j["subgroup"] = json!(sub.to_string());
    j["summands"] = Value::Array(items);
    j["total_dim"] = json!(total.to_string());
    let mut text = format!("{g} {w} (dim {parent}) restricted to {sub}\n");
    text.push_str(&table(&["summand", "mult", "dim"], &rows));
    text.push_str(&format!("total dim {total}\n"));
    Ok(Outcome::ok(j, text))
}

fn level_index(f: &Filtration, i: usize) -> i64 {
    match f.index_convention {
        IndexConvention::SlAscending => i as i64 + 1,
        IndexConvention::SpSymmetric => i as i64 - f.k(),
    }
}

pub fn filtration(t: &Target) -> Result<Outcome, Failure> {
    let (g, w) = target(t)?;
    let f = match g.family() {
        Family::SL => filtration_sl(g.size(), &w)?,
        Family::Sp => filtration_sp(g.size(), &w)?,
        _ => return Err(Error::Unsupported(format!("filtrations are defined for SL and Sp, not {g}")).into()),
    };
    let mut levels = Vec::new();
    let mut rows = Vec::new();
    for (i, q) in f.levels.iter().enumerate() {
        let idx = level_index(&f, i);
        let (items, _, total) = sum_rows(&f.levi, q)?;
        levels.push(json!({ "index": idx, "summands": items, "dim": total.to_string() }));
        rows.push(vec![format!("Q{idx}"), q.to_string(), total.to_string()]);
    }
    let mut j = weight_json(&g, &w);
    j["levi"] = json!(f.levi.to_string());
    j["levels"] = Value::Array(levels);
    let mut text = format!("{g} {w}, graded pieces over {}\n", f.levi);
    text.push_str(&table(&["level", "summands", "dim"], &rows));
    Ok(Outcome::ok(j, text))
}

pub fn classify(t: &Target) -> Result<Outcome, Failure> {
    let (g, w) = target(t)?;
    let c = classify_weight(&g, &w)?;
    let mut j = weight_json(&g, &w);
    j["status"] = json!(c.status.name());
    j["source"] = json!(c.source);
    let text = fields(&[("group", g.to_string()), ("weight", w.to_string()), ("status", c.status.name().into()), ("source", c.source)]);
    Ok(Outcome::ok(j, text))
}

pub fn steps_text(steps: &[Step]) -> String {
    let mut out = String::new();
    for (i, s) in steps.iter().enumerate() {
        out.push_str(&format!("step {}  {}  {}\n", i + 1, s.rule, s.citation));
        if !s.checks.is_empty() {
            let rows: Vec<Vec<String>> = s
                .checks
                .iter()
                .map(|c| {
                    vec![
                        format!("  {}", c.name),
                        c.lhs.to_string(),
                        c.op.symbol().to_string(),
                        c.rhs.to_string(),
                        if c.holds() { "ok" } else { "FAIL" }.to_string(),
                    ]
                })
                .collect();
            out.push_str(&table(&["  check", "lhs", "op", "rhs", ""], &rows));
        }
        if let Some((g, w)) = &s.child {
            out.push_str(&format!("  reduces to {g} {w}\n"));
        }
    }
    out
}

pub fn level(t: &Target) -> Result<Outcome, Failure> {
    let (g, w) = target(t)?;
    let cert = certify(&g, &w)?;
    let verdict = verify(&cert);
    let j = serde_json::to_value(&cert).expect("certificates serialize");
    let mut text = format!("{} {}  level {}\n", cert.group, cert.weight, cert.level);
    text.push_str(&steps_text(&cert.steps));
    match &verdict {
        Ok(()) => text.push_str(&format!("verified ({} checks)\n", cert.check_count())),
        Err(e) => {
            eprintln!("error: {e}");
            text.push_str(&format!("{e}\n"));
        }
    }
    Ok(Outcome::with_status(j, text, verdict.is_ok()))
}

pub fn orbit(a: &OrbitArgs) -> Result<Outcome, Failure> {
    let chi = parse_weight(&a.weight)?;
    let shape = WeightShape::of(&chi);
    let n = shape.n();
    let ks: Vec<usize> = match a.k {
        Some(k) => vec![k],
        None => (1..=n).collect(),
    };
    let size = orbit_size(&shape);
    let enumerated = match enumerate_orbit_within(&chi, a.bound) {
        Ok(o) => Some(o),
        Err(Error::Resource(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let mut fixed = Vec::new();
    let mut rows = Vec::new();
    for &k in &ks {
        let f = fixed_count(&shape, k)?;
        let regular = &size - &f;
        let counted = enumerated.as_ref().map(|o| regular_in(o, k));
        fixed.push(json!({
            "k": k,
            "fixed": f.to_string(),
            "regular": regular.to_string(),
            "regular_enumerated": counted.map(|c| c.to_string()),
        }));
        rows.push(vec![
            k.to_string(),
            f.to_string(),
            regular.to_string(),
            counted.map_or("-".to_string(), |c| c.to_string()),
        ]);
    }
    let mut j = json!({
        "weight": entries_string(&chi),
        "shape": { "n": n, "zeros": shape.zeros(), "blocks": shape.blocks() },
        "orbit_size": size.to_string(),
        "enumerated_size": enumerated.as_ref().map(|o| o.len().to_string()),
        "sign_changes": fixed,
    });
    let mut text = fields(&[
        ("weight", entries_string(&chi)),
        ("zeros", shape.zeros().to_string()),
        ("blocks", format!("{:?}", shape.blocks())),
        ("orbit size", size.to_string()),
        (
            "enumerated",
            enumerated.as_ref().map_or(format!("skipped (rank above {})", a.bound), |o| o.len().to_string()),
        ),
    ]);
    text.push_str(&table(&["k", "fixed", "regular", "enumerated"], &rows));
    if a.list {
        if let Some(o) = &enumerated {
            j["elements"] = Value::Array(o.iter().map(|e| json!(entries_string(e))).collect());
            for e in o {
                text.push_str(&entries_string(e));
                text.push('\n');
            }
        }
    }
    Ok(Outcome::ok(j, text))
}

/// Decreasing tuples of length `n - 1` with entries in `0..=max`, followed by a zero.
fn weights_with_zero_tail(n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn go(pos: usize, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos + 1 >= cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in (0..=hi).rev() {
            cur[pos] = v;
            go(pos + 1, v, cur, out);
        }
        cur[pos] = 0;
    }
    go(0, max, &mut cur, &mut out);
    out
}

pub fn verify_appendix_a(a: &SweepArgs) -> Result<Outcome, Failure> {
    if let Some(ws) = &a.weight {
        let lambda = parse_weight(ws)?;
        let n = a.n.expect("clap enforces --n with --weight");
        if lambda.len() != n {
            return Err(Error::Domain(format!("O_{} expects {n} entries, got {}", 2 * n, lambda.len())).into());
        }
        let r = stabilizer_report(2 * n as u32, &lambda)?;
        let j = serde_json::to_value(&r).expect("reports serialize");
        let mut text = format!("O_{} {}  {}\n", 2 * n, entries_string(&lambda), if r.passed() { "passed" } else { "FAILED" });
        text.push_str(&steps_text(&r.steps));
        return Ok(Outcome::with_status(j, text, r.passed()));
    }
    if a.n_min < 2 || a.n_max < a.n_min || a.max_entry < 0 {
        return Err(Failure::Usage("need 2 <= n-min <= n-max and max-entry >= 0".into()));
    }
    let mut per_rank = Vec::new();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    let mut all_ok = true;
    for n in a.n_min..=a.n_max {
        let (mut passed, mut not_applicable, mut checks) = (0u64, 0u64, 0u64);
        let mut rules: std::collections::BTreeMap<&'static str, u64> = Default::default();
        for lambda in weights_with_zero_tail(n, a.max_entry) {
            match stabilizer_report(2 * n as u32, &lambda) {
                Ok(r) if r.passed() => {
                    passed += 1;
                    checks += r.check_count() as u64;
                    for s in &r.steps {
                        *rules.entry(s.rule).or_default() += 1;
                    }
                }
                Ok(_) => failures.push(json!({ "n": n, "weight": entries_string(&lambda), "error": "failing check" })),
                Err(Error::NotApplicable(_)) => not_applicable += 1,
                Err(e) => failures.push(json!({ "n": n, "weight": entries_string(&lambda), "error": e.to_string() })),
            }
        }
        let failed = failures.iter().filter(|f| f["n"] == json!(n)).count();
        all_ok &= failed == 0;
        per_rank.push(json!({
            "n": n,
            "passed": passed.to_string(),
            "failed": failed.to_string(),
            "e_representations": not_applicable.to_string(),
            "checks": checks.to_string(),
            "rules": rules.iter().map(|(k, v)| (k.to_string(), json!(v.to_string()))).collect::<serde_json::Map<_, _>>(),
        }));
        rows.push(vec![
            format!("O_{}", 2 * n),
            passed.to_string(),
            failed.to_string(),
            not_applicable.to_string(),
            checks.to_string(),
        ]);
    }
    let j = json!({
        "max_entry": a.max_entry.to_string(),
        "passed": all_ok,
        "ranks": per_rank,
        "failures": failures,
    });
    let mut text = format!("extensions with last entry zero, entries <= {}\n", a.max_entry);
    text.push_str(&table(&["group", "passed", "failed", "E", "checks"], &rows));
    for f in &failures {
        text.push_str(&format!("FAILED n={} {} {}\n", f["n"], f["weight"], f["error"]));
    }
    Ok(Outcome::with_status(j, text, all_ok))
}

pub fn verify_harmonic() -> Result<Outcome, Failure> {
    let r = stabilizer_generator_report()?;
    let j = serde_json::to_value(&r).expect("reports serialize");
    let mut text = String::new();
    for s in &r.steps {
        let bad = s.checks.iter().filter(|c| !c.holds()).count();
        text.push_str(&format!("{:<22} {:>3} checks  {}\n", s.rule, s.checks.len(), if bad == 0 { "ok" } else { "FAIL" }));
    }
    text.push_str(if r.passed() { "passed\n" } else { "FAILED\n" });
    Ok(Outcome::with_status(j, text, r.passed()))
}

/// Rows of the headline table: group pattern, range, level formula, smallest size
/// and a constructor by rank.
type Row = (&'static str, &'static str, &'static str, Option<&'static str>, u32, fn(u32) -> GroupDesc);

fn headline_rows() -> [Row; 7] {
    [
        ("SL_n", "n >= 1", "n", None, 1, |n| GroupDesc::sl(n).unwrap()),
        ("SO_2n+1", "n >= 2", "2n+1", None, 2, |n| GroupDesc::so(2 * n + 1).unwrap()),
        ("O_2n+1", "n >= 2", "2n+1", None, 2, |n| GroupDesc::o(2 * n + 1).unwrap()),
        ("Sp_2n", "n >= 4", "2n", None, 4, |n| GroupDesc::sp(n).unwrap()),
        ("SO_2n", "n >= 2", "2n", Some("4n for highest weight c*omega_(n-1) or c*omega_n"), 2, |n| {
            GroupDesc::so(2 * n).unwrap()
        }),
        ("O_2n", "n >= 2", "2n", None, 2, |n| GroupDesc::o(2 * n).unwrap()),
        ("G2", "", "7", None, 2, |_| GroupDesc::g2()),
    ]
}

pub const SAMPLE_RANKS: usize = 5;

pub fn level_table() -> Result<Outcome, Failure> {
    let mut headline = Vec::new();
    let mut rows = Vec::new();
    for (name, range, formula, exception, start, make) in headline_rows() {
        let sizes: Vec<u32> = if name == "G2" { vec![2] } else { (start..start + SAMPLE_RANKS as u32).collect() };
        let samples: Vec<Value> = sizes
            .iter()
            .map(|&n| {
                let g = make(n);
                let h = headline_level(&g);
                json!({
                    "n": n,
                    "group": g.to_string(),
                    "level": h.generic.to_string(),
                    "diagonal_level": h.diagonal.map(|d| d.to_string()),
                })
            })
            .collect();
        let shown: Vec<String> = sizes
            .iter()
            .map(|&n| {
                let h = headline_level(&make(n));
                match h.diagonal {
                    Some(d) => format!("{}/{}", h.generic, d),
                    None => h.generic.to_string(),
                }
            })
            .collect();
        headline.push(json!({
            "group": name,
            "range": range,
            "level": formula,
            "exception": exception,
            "samples": samples,
        }));
        rows.push(vec![
            name.to_string(),
            range.to_string(),
            match exception {
                Some(e) => format!("{formula}, {e}"),
                None => formula.to_string(),
            },
            shown.join(" "),
        ]);
    }

    let mut f_rows_json = Vec::new();
    let mut f_rows = Vec::new();
    for n in [5usize, 4, 3] {
        let vals: Vec<String> = (1..=n)
            .map(|a| min_orbit_f(n, a).map(|f| f.to_string()))
            .collect::<Result<_, _>>()?;
        let square = centralizer_codim(n as u64, n as u64);
        f_rows_json.push(json!({ "n": n, "F": vals, "n_squared": square.to_string() }));
        let mut r = vec![format!("n = {n}")];
        r.extend(vals.iter().cloned());
        r.resize(6, String::new());
        r.push(square.to_string());
        f_rows.push(r);
    }
    let j = json!({ "headline": headline, "least_orbit_contribution": f_rows_json });
    let mut text = table(&["group", "range", "level", "samples"], &rows);
    text.push('\n');
    text.push_str(&table(&["F(n,a)", "a=1", "a=2", "a=3", "a=4", "a=5", "n^2"], &f_rows));
    Ok(Outcome::ok(j, text))
}
