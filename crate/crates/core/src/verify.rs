//! The acceptance checks as a runnable suite, shared by the CLI.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::commute::{bounded_search, cone_witness, decide_commute, foltz_witness, group_witness};
use crate::config::{Caps, SearchBudget};
use crate::error::Result;
use crate::fincat::{
    connected_components, find_uncovered_span, full_subcategory, has_parallel_pair_cocones, has_span_cocones,
    is_filtered, is_pseudo_filtered, opposite_category, preset, FiniteDiagram, SAMPLE_PRESETS,
};
use crate::groups::{
    direct_product, goursat_decompose, goursat_reconstruct, group_preset, preset_names, subgroups, Elem, FinGroup,
};
use crate::{Method, Verdict};

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit_ms: Option<u128>,
}

type Check = fn(&Caps, &SearchBudget) -> Result<(bool, String)>;

const CHECKS: &[(&str, Option<u64>, Check)] = &[
    ("equalizers vs span colimits: 2 vs 1", Some(1), foltz_sizes),
    ("parallel-pair limits vs C2 colimits: 0 vs 1", Some(1), cone_sizes),
    ("coprime group pairs commute", Some(60), coprime_pairs),
    ("criterion agrees with the orbit scan", Some(300), methods_agree),
    ("cyclic groups of prime order separate", None, prime_separation),
    ("group shapes: span cocones, no parallel-pair cocones", None, group_shapes),
    ("Goursat decomposition roundtrip", None, goursat_roundtrip),
    ("subgroup enumeration matches subset closure", None, subgroup_oracle),
    ("fuzzed bifunctors on commuting pairs are bijective", Some(600), fuzz_commuting),
    ("pseudo-filtered means filtered components", None, pseudo_filtered_components),
];

/// Runs every check in order.
pub fn run_all(caps: &Caps, budget: &SearchBudget) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .enumerate()
        .map(|(k, &(name, limit, check))| {
            let start = Instant::now();
            let result = check(caps, budget);
            let elapsed = start.elapsed();
            let limit = limit.map(Duration::from_secs);
            let (mut passed, mut detail) = match result {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            if let Some(l) = limit.filter(|&l| elapsed > l) {
                passed = false;
                detail = format!("{detail}; took {elapsed:?}, limit {l:?}");
            }
            CheckOutcome {
                id: k + 1,
                name,
                passed,
                detail,
                elapsed_ms: elapsed.as_millis(),
                limit_ms: limit.map(|l| l.as_millis()),
            }
        })
        .collect()
}

/// Every subset of `g` that contains the identity and is closed under
/// multiplication, in order of size then elements. Exponential in `|g|`.
pub fn subset_closure_subgroups(g: &FinGroup) -> Vec<Vec<Elem>> {
    let n = g.order();
    assert!(n <= 20, "subset enumeration is limited to order 20");
    let id = g.identity();
    let others: Vec<Elem> = g.elements().filter(|&x| x != id).collect();
    let mut found = Vec::new();
    for bits in 0u32..(1 << others.len()) {
        let mut member = vec![false; n];
        member[id] = true;
        for (k, &x) in others.iter().enumerate() {
            member[x] = bits >> k & 1 == 1;
        }
        let elems: Vec<Elem> = (0..n).filter(|&x| member[x]).collect();
        if elems.iter().all(|&a| elems.iter().all(|&b| member[g.mul(a, b)])) {
            found.push(elems);
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
}

fn groups() -> Result<Vec<(String, FinGroup)>> {
    preset_names()
        .into_iter()
        .map(|n| group_preset(&n).map(|g| (n, g)))
        .collect()
}

fn pairs_up_to(bound: usize) -> Result<Vec<(String, FinGroup, String, FinGroup)>> {
    let gs = groups()?;
    let mut out = Vec::new();
    for (a, g) in &gs {
        for (b, h) in &gs {
            if g.order() * h.order() <= bound {
                out.push((a.clone(), g.clone(), b.clone(), h.clone()));
            }
        }
    }
    Ok(out)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn foltz_sizes(caps: &Caps, _: &SearchBudget) -> Result<(bool, String)> {
    let (i, j) = (preset("parallel_pair")?, preset("span")?);
    let span = find_uncovered_span(&j).expect("the span preset has an uncovered span");
    let r = foltz_witness(&i, &j, span, caps)?.report;
    let ok = r.colim_lim_size == 2 && r.lim_colim_size == 1 && !r.injective;
    Ok((ok, format!("colim_lim = {}, lim_colim = {}", r.colim_lim_size, r.lim_colim_size)))
}

fn cone_sizes(caps: &Caps, _: &SearchBudget) -> Result<(bool, String)> {
    let (i, j) = (preset("parallel_pair")?, preset("group:c2")?);
    // the opposite parallel pair, sent to the identity and the swap
    let d = FiniteDiagram::new(opposite_category(&i), &j, vec![0, 0], vec![0, 0, 0, 1])?;
    let r = cone_witness(&i, &j, &d, caps)?.report;
    let ok = r.colim_lim_size == 0 && r.lim_colim_size == 1 && !r.surjective;
    Ok((ok, format!("colim_lim = {}, lim_colim = {}", r.colim_lim_size, r.lim_colim_size)))
}

fn coprime_pairs(caps: &Caps, _: &SearchBudget) -> Result<(bool, String)> {
    let mut count = 0;
    for (a, g, b, h) in pairs_up_to(144)? {
        if gcd(g.order(), h.order()) != 1 {
            continue;
        }
        count += 1;
        let r = decide_commute(&g, &h, Method::Both, caps)?;
        let both = r.criterion_verdict == Some(Verdict::Commute) && r.orbit_verdict == Some(Verdict::Commute);
        if r.verdict != Verdict::Commute || !both || r.agreement != Some(true) {
            return Ok((false, format!("{a}/{b} did not commute under both methods")));
        }
    }
    Ok((count >= 20, format!("{count} coprime pairs")))
}

fn methods_agree(caps: &Caps, _: &SearchBudget) -> Result<(bool, String)> {
    let pairs = pairs_up_to(144)?;
    let mut failing = 0;
    for (a, g, b, h) in &pairs {
        let r = decide_commute(g, h, Method::Both, caps)?;
        if r.criterion_verdict != r.orbit_verdict || r.criterion_verdict.is_none() {
            return Ok((false, format!("methods disagree on {a}/{b}")));
        }
        failing += usize::from(r.verdict == Verdict::NotCommute);
    }
    Ok((true, format!("{} pairs, {failing} not commuting", pairs.len())))
}

fn prime_separation(caps: &Caps, _: &SearchBudget) -> Result<(bool, String)> {
    let primes = [2, 3, 5, 7];
    for &p in &primes {
        let cp = group_preset(&format!("c{p}"))?;
        for &q in &primes {
            let cq = group_preset(&format!("c{q}"))?;
            let r = decide_commute(&cp, &cq, Method::Both, caps)?;
            let expected = if p == q { Verdict::NotCommute } else { Verdict::Commute };
            if r.verdict != expected {
                return Ok((false, format!("c{p}/c{q}: {:?}", r.verdict)));
            }
            if p == q {
                let w = group_witness(&cp, &cq, caps)?;
                if w.witness.report.bijective {
                    return Ok((false, format!("witness for c{p}/c{p} is bijective")));
                }
            }
        }
    }
    Ok((true, "12 coprime pairs commute, 4 diagonal pairs fail with witnesses".into()))
}

fn group_shapes(_: &Caps, _: &SearchBudget) -> Result<(bool, String)> {
    let mut count = 0;
    for (name, g) in groups()? {
        if g.order() == 1 {
            continue;
        }
        count += 1;
        let c = g.as_category();
        if !has_span_cocones(&c) || has_parallel_pair_cocones(&c) {
            return Ok((false, format!("{name} has the wrong cocone profile")));
        }
    }
    Ok((true, format!("{count} nontrivial groups")))
}

fn goursat_roundtrip(caps: &Caps, _: &SearchBudget) -> Result<(bool, String)> {
    let mut total = 0;
    for (a, g, b, h) in pairs_up_to(144)? {
        let p = direct_product(&g, &h);
        let subs = subgroups(&p.group, caps)?;
        let mut triples = BTreeSet::new();
        for s in &subs {
            let t = goursat_decompose(&p, s)?;
            if goursat_reconstruct(&p, &t)?.elements() != s.elements() {
                return Ok((false, format!("roundtrip fails on {a}x{b}")));
            }
            triples.insert(t.summary());
        }
        if triples.len() != subs.len() {
            return Ok((false, format!("{a}x{b}: {} triples, {} subgroups", triples.len(), subs.len())));
        }
        total += subs.len();
    }
    Ok((true, format!("{total} subgroups")))
}

/// Every group preset of order at most 16, with products reaching 8 and 16.
pub const SMALL_GROUPS: &[&str] = &[
    "prod:c2:c2",
    "prod:c2:c4",
    "prod:c2:klein4",
    "prod:c4:c4",
    "prod:c2:c8",
    "prod:c2:d4",
    "prod:c2:q8",
    "prod:klein4:klein4",
];

fn subgroup_oracle(caps: &Caps, _: &SearchBudget) -> Result<(bool, String)> {
    let mut names: Vec<String> = groups()?.into_iter().filter(|(_, g)| g.order() <= 16).map(|(n, _)| n).collect();
    names.extend(SMALL_GROUPS.iter().map(|s| s.to_string()));
    for name in &names {
        let g = group_preset(name)?;
        let mine: Vec<Vec<Elem>> = subgroups(&g, caps)?.iter().map(|s| s.elements().to_vec()).collect();
        if mine != subset_closure_subgroups(&g) {
            return Ok((false, format!("mismatch on {name}")));
        }
    }
    Ok((true, format!("{} groups", names.len())))
}

fn fuzz_commuting(caps: &Caps, budget: &SearchBudget) -> Result<(bool, String)> {
    let budget = SearchBudget {
        samples: budget.samples.max(1000),
        ..*budget
    };
    let mut pairs = 0;
    for (a, g, b, h) in pairs_up_to(144)? {
        if decide_commute(&g, &h, Method::Both, caps)?.verdict != Verdict::Commute {
            continue;
        }
        pairs += 1;
        let out = bounded_search(&g.as_category(), &h.as_category(), &budget, caps)?;
        if let Some(hit) = out.counterexample {
            return Ok((false, format!("{a}/{b}: sample {} is not bijective", hit.sample_index)));
        }
    }
    Ok((true, format!("{pairs} commuting pairs, {} samples each", budget.samples)))
}

fn pseudo_filtered_components(_: &Caps, _: &SearchBudget) -> Result<(bool, String)> {
    let mut names: Vec<String> = SAMPLE_PRESETS.iter().map(|s| s.to_string()).collect();
    names.extend(["discrete:2", "jk:2:2", "jk:4:3"].map(String::from));
    for name in &names {
        let c = preset(name)?;
        let by_components = connected_components(&c)
            .iter()
            .all(|objs| is_filtered(&full_subcategory(&c, objs).0));
        if is_pseudo_filtered(&c) != by_components {
            return Ok((false, format!("mismatch on {name}")));
        }
    }
    Ok((true, format!("{} categories", names.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_oracle_on_klein4() {
        let g = group_preset("klein4").unwrap();
        assert_eq!(subset_closure_subgroups(&g).len(), 5);
    }

    #[test]
    fn quick_checks_pass() {
        let caps = Caps::default();
        let budget = SearchBudget::default();
        for check in [foltz_sizes, cone_sizes, prime_separation, group_shapes, pseudo_filtered_components] {
            let (ok, detail) = check(&caps, &budget).unwrap();
            assert!(ok, "{detail}");
        }
    }
}
