use std::path::Path;

use limcom_core::commute::{bounded_search, cone_witness, decide_commute, foltz_witness, group_witness, Witness};
use limcom_core::fincat::{classify, find_uncovered_diagram, find_uncovered_span, opposite_category, Preset};
use limcom_core::formats::{load_category, load_group, read_json, BiFunctorFile, DiagramFile};
use limcom_core::groups::{nontrivial_quotients_up_to_iso, normal_subgroups, subgroups, subquotient_catalog};
use limcom_core::setfun::comparison_report;
use limcom_core::verify::run_all;
use limcom_core::{Error, FinCategory, FinGroup, Result, Verdict};
use serde_json::{json, Value};

use crate::args::{Command, WitnessCommand};
use crate::config::Settings;

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn group(name: &str) -> Result<FinGroup> {
    load_group(name.strip_prefix("group:").unwrap_or(name))
}

fn category(name: &str) -> Result<FinCategory> {
    load_category(name, None)
}

fn write_bifunctor(file: &BiFunctorFile, out: Option<&Path>) -> Result<()> {
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(file).expect("bifunctor files serialize");
        std::fs::write(path, text + "\n").map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn witness_value(w: &Witness, out: Option<&Path>) -> Result<Value> {
    let file = BiFunctorFile::from(&w.bifunctor);
    write_bifunctor(&file, out)?;
    Ok(json!({ "comparison": w.report, "bifunctor": file }))
}

fn parse_span(text: &str, j: &FinCategory) -> Result<(usize, usize, usize)> {
    let nums: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::BadParams(format!("`{text}` is not a list of morphism and object indices")))?;
    let [j0, j1, j2, beta, gamma] = nums[..] else {
        return Err(Error::BadParams(format!("--span needs 5 values j0,j1,j2,beta,gamma, got {}", nums.len())));
    };
    let m = j.morphism_count();
    if beta >= m || gamma >= m {
        return Err(Error::InvalidDiagram(format!("span legs ({beta}, {gamma}) outside 0..{m}")));
    }
    if j.dst(beta) != j1 || j.dst(gamma) != j2 {
        return Err(Error::InvalidDiagram(format!(
            "legs end at ({}, {}), span says ({j1}, {j2})",
            j.dst(beta),
            j.dst(gamma)
        )));
    }
    Ok((j0, beta, gamma))
}

pub fn run(command: &Command, s: &Settings) -> Result<Value> {
    let caps = &s.caps;
    match command {
        Command::Classify { category: name } => {
            let flags = match name.parse::<Preset>() {
                Ok(p) => p.classify(caps)?,
                Err(_) => classify(&category(name)?, caps)?,
            };
            Ok(to_value(&flags))
        }
        Command::CommuteGroups { g, h, method, witness } => {
            let (g, h) = (group(g)?, group(h)?);
            let report = decide_commute(&g, &h, (*method).into(), caps)?;
            let mut value = to_value(&report);
            if *witness && report.verdict == Verdict::NotCommute {
                let w = group_witness(&g, &h, caps)?;
                value["witness"] = to_value(&w.summary(h.order()));
            }
            Ok(value)
        }
        Command::Witness(WitnessCommand::Foltz { i, j, span, out }) => {
            let (i, j) = (category(i)?, category(j)?);
            let span = match span {
                Some(text) => parse_span(text, &j)?,
                None => find_uncovered_span(&j).ok_or(Error::CoconeExists)?,
            };
            let w = foltz_witness(&i, &j, span, caps)?;
            let mut v = witness_value(&w, out.as_deref())?;
            v["span"] = json!({ "apex": span.0, "legs": [span.1, span.2] });
            Ok(v)
        }
        Command::Witness(WitnessCommand::Cone { i, j, diagram, out }) => {
            let (i, j) = (category(i)?, category(j)?);
            let shape = opposite_category(&i);
            let d = match diagram {
                Some(path) => read_json::<DiagramFile>(path)?.build(shape, &j)?,
                None => find_uncovered_diagram(&shape, &j, caps)?.ok_or(Error::CoconeExists)?,
            };
            let w = cone_witness(&i, &j, &d, caps)?;
            let mut v = witness_value(&w, out.as_deref())?;
            v["diagram"] = json!({ "objects": d.object_assignment(), "morphisms": d.morphism_assignment() });
            Ok(v)
        }
        Command::Witness(WitnessCommand::Group { g, h, out }) => {
            let (g, h) = (group(g)?, group(h)?);
            let w = group_witness(&g, &h, caps)?;
            let summary = to_value(&w.summary(h.order()));
            let mut v = witness_value(&w.witness, out.as_deref())?;
            for key in ["subgroup", "subgroup_pairs", "goursat"] {
                v[key] = summary[key].clone();
            }
            Ok(v)
        }
        Command::Compare { file } => {
            let f: BiFunctorFile = read_json(file)?;
            let b = f.build(file.parent(), caps)?;
            Ok(to_value(&comparison_report(&b, caps)?))
        }
        Command::GroupInfo { group: name } => {
            let g = group(name)?;
            let subs = subgroups(&g, caps)?;
            let normal = normal_subgroups(&g, caps)?;
            let quotients: Vec<Value> = nontrivial_quotients_up_to_iso(&g, caps)?
                .iter()
                .map(|q| json!({ "order": q.group.order(), "abelian": q.group.is_abelian(), "normal_subgroup": q.normal.elements() }))
                .collect();
            let subquotients: Vec<Value> = subquotient_catalog(&g, caps)?
                .iter()
                .map(|e| json!({ "order": e.group.order(), "abelian": e.group.is_abelian(), "k": e.k.elements(), "l": e.l.elements() }))
                .collect();
            Ok(json!({
                "order": g.order(),
                "abelian": g.is_abelian(),
                "center_size": g.center_size(),
                "element_orders": g.elements().map(|a| g.element_order(a)).collect::<Vec<_>>(),
                "subgroup_count": subs.len(),
                "subgroup_orders": subs.iter().map(|s| s.order()).collect::<Vec<_>>(),
                "normal_subgroups": normal.iter().map(|n| n.elements()).collect::<Vec<_>>(),
                "quotients": quotients,
                "subquotients": subquotients,
            }))
        }
        Command::Search { i, j, samples, max_carrier } => {
            let (i, j) = (category(i)?, category(j)?);
            let mut budget = s.budget;
            budget.samples = samples.unwrap_or(budget.samples);
            budget.max_carrier = max_carrier.unwrap_or(budget.max_carrier);
            let outcome = bounded_search(&i, &j, &budget, caps)?;
            let hit = outcome.counterexample.map(|h| {
                json!({
                    "sample_index": h.sample_index,
                    "comparison": h.report,
                    "bifunctor": BiFunctorFile::from(&h.bifunctor),
                })
            });
            Ok(json!({
                "seed": budget.seed,
                "samples_run": outcome.samples_run,
                "counterexample": hit,
            }))
        }
        Command::Verify => {
            let checks = run_all(caps, &s.budget);
            let passed = checks.iter().all(|c| c.passed);
            Ok(json!({ "passed": passed, "checks": checks }))
        }
    }
}
