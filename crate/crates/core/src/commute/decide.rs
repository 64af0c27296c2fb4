use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{check_cap, Error, Result};
use crate::groups::{
    are_isomorphic, coset_action, direct_product, goursat_decompose, goursat_reconstruct,
    nontrivial_quotients_up_to_iso, quotient_of, subgroups, subquotient_catalog, DirectProduct, Elem, FinGroup,
    GoursatTriple, Subgroup,
};
use crate::setfun::{comparison_report, BiFunctor, ComparisonReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Commute,
    NotCommute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Criterion,
    Orbits,
    #[default]
    Both,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "criterion" => Ok(Method::Criterion),
            "orbits" => Ok(Method::Orbits),
            "both" => Ok(Method::Both),
            _ => Err(Error::BadParams(format!("unknown method `{s}`"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Criterion => "criterion",
            Method::Orbits => "orbits",
            Method::Both => "both",
        })
    }
}

/// A nontrivial quotient `G/N` isomorphic to a subquotient `K/L` of `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionEvidence {
    pub quotient_order: usize,
    /// `N ⊴ G`.
    pub normal_subgroup: Vec<Elem>,
    /// `K ≤ H`.
    pub subquotient_k: Vec<Elem>,
    /// `L ⊴ K`.
    pub subquotient_l: Vec<Elem>,
    /// Least element of each coset of `N`, indexing the quotient.
    pub quotient_representatives: Vec<Elem>,
    /// Least element of each coset of `L` in `K`, indexing the subquotient.
    pub subquotient_representatives: Vec<Elem>,
    /// `isomorphism[a] = b`: quotient element `a` maps to subquotient element `b`.
    pub isomorphism: Vec<usize>,
}

/// A subgroup `S ≤ G × H` whose coset action has a `G`-fixed `H`-orbit but
/// no `G`-fixed point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEvidence {
    /// Elements of `S` as indices into `G × H`.
    pub subgroup: Vec<Elem>,
    /// Elements of `S` as `(g, h)` pairs.
    pub subgroup_pairs: Vec<(Elem, Elem)>,
    pub coset_count: usize,
    pub comparison: ComparisonReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutationReport {
    pub verdict: Verdict,
    pub methods_run: Vec<String>,
    pub limit_group_order: usize,
    pub colimit_group_order: usize,
    pub coprime_orders: bool,
    pub criterion_verdict: Option<Verdict>,
    pub orbit_verdict: Option<Verdict>,
    pub criterion_evidence: Option<CriterionEvidence>,
    pub orbit_evidence: Option<OrbitEvidence>,
    /// Set when both methods ran.
    pub agreement: Option<bool>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn verdict(commutes: bool) -> Verdict {
    if commutes {
        Verdict::Commute
    } else {
        Verdict::NotCommute
    }
}

/// Decides whether limits over `g` commute with colimits over `h` in Set.
///
/// The criterion route compares the nontrivial quotients of `g` with the
/// subquotients of `h` up to isomorphism. The orbit route scans the coset
/// action of every subgroup of `g × h`. Coprime orders short-circuit to
/// `commute` unless both routes are requested, in which case both still run.
pub fn decide_commute(g: &FinGroup, h: &FinGroup, method: Method, caps: &Caps) -> Result<CommutationReport> {
    check_cap("limit group order", g.order(), caps.group_order)?;
    check_cap("colimit group order", h.order(), caps.group_order)?;
    let coprime = gcd(g.order(), h.order()) == 1;
    let mut report = CommutationReport {
        verdict: Verdict::Commute,
        methods_run: Vec::new(),
        limit_group_order: g.order(),
        colimit_group_order: h.order(),
        coprime_orders: coprime,
        criterion_verdict: None,
        orbit_verdict: None,
        criterion_evidence: None,
        orbit_evidence: None,
        agreement: None,
    };
    if coprime && method != Method::Both {
        report.methods_run.push("coprime_fast_path".into());
        return Ok(report);
    }
    if matches!(method, Method::Criterion | Method::Both) {
        let evidence = criterion_scan(g, h, caps)?;
        report.methods_run.push("criterion".into());
        report.criterion_verdict = Some(verdict(evidence.is_none()));
        report.criterion_evidence = evidence;
    }
    if matches!(method, Method::Orbits | Method::Both) {
        check_cap("product group order", g.order() * h.order(), caps.product_order)?;
        let evidence = orbit_scan(g, h, caps)?;
        report.methods_run.push("orbits".into());
        report.orbit_verdict = Some(verdict(evidence.is_none()));
        report.orbit_evidence = evidence;
    }
    let verdicts: Vec<Verdict> = [report.criterion_verdict, report.orbit_verdict].into_iter().flatten().collect();
    if verdicts.len() == 2 {
        let agree = verdicts[0] == verdicts[1];
        report.agreement = Some(agree);
        if !agree {
            return Err(Error::InternalDisagreement(format!(
                "criterion says {:?}, orbit scan says {:?} for orders ({}, {})",
                verdicts[0],
                verdicts[1],
                g.order(),
                h.order()
            )));
        }
    }
    if coprime && verdicts.contains(&Verdict::NotCommute) {
        return Err(Error::InternalDisagreement(
            "coprime orders reported as not commuting".into(),
        ));
    }
    report.verdict = verdicts.first().copied().unwrap_or(Verdict::Commute);
    Ok(report)
}

/// First nontrivial quotient of `g` (catalog order) isomorphic to some
/// subquotient of `h` (catalog order).
fn criterion_scan(g: &FinGroup, h: &FinGroup, caps: &Caps) -> Result<Option<CriterionEvidence>> {
    let quotients = nontrivial_quotients_up_to_iso(g, caps)?;
    if quotients.is_empty() {
        return Ok(None);
    }
    let catalog = subquotient_catalog(h, caps)?;
    for q in &quotients {
        for sq in catalog.iter().filter(|sq| sq.group.order() == q.group.order()) {
            if let Some(iso) = are_isomorphic(&q.group, &sq.group, caps)? {
                let qrep = quotient_of(g, &Subgroup::full(g), &q.normal)?.representatives;
                let srep = quotient_of(h, &sq.k, &sq.l)?.representatives;
                return Ok(Some(CriterionEvidence {
                    quotient_order: q.group.order(),
                    normal_subgroup: q.normal.elements().to_vec(),
                    subquotient_k: sq.k.elements().to_vec(),
                    subquotient_l: sq.l.elements().to_vec(),
                    quotient_representatives: qrep,
                    subquotient_representatives: srep,
                    isomorphism: iso,
                }));
            }
        }
    }
    Ok(None)
}

pub(crate) fn coset_bifunctor(p: &DirectProduct, s: &Subgroup, caps: &Caps) -> Result<BiFunctor> {
    let ca = coset_action(&p.group, s)?;
    BiFunctor::new(
        &p.left.as_category(),
        &p.right.as_category(),
        vec![ca.action.degree],
        ca.action.perms,
        caps,
    )
}

/// Least subgroup `S ≤ G × H` whose coset action has a `G`-fixed `H`-orbit
/// and no `G`-fixed point, read straight off the action.
fn orbit_scan(g: &FinGroup, h: &FinGroup, caps: &Caps) -> Result<Option<OrbitEvidence>> {
    let p = direct_product(g, h);
    let left: Vec<Elem> = g.elements().map(|a| p.pair(a, h.identity())).collect();
    let right: Vec<Elem> = h.elements().map(|b| p.pair(g.identity(), b)).collect();
    for s in subgroups(&p.group, caps)? {
        let ca = coset_action(&p.group, &s)?;
        let act = &ca.action;
        if !act.fixed_points(left.iter().copied()).is_empty() {
            continue;
        }
        let orbit = act.orbits(right.iter().copied());
        let orbit_count = orbit.iter().max().map_or(0, |m| m + 1);
        let mut moved = vec![false; orbit_count];
        for &a in &left {
            for x in 0..act.degree {
                if orbit[act.perms[a][x]] != orbit[x] {
                    moved[orbit[x]] = true;
                }
            }
        }
        if moved.iter().all(|&m| m) {
            continue;
        }
        let comparison = comparison_report(&coset_bifunctor(&p, &s, caps)?, caps)?;
        return Ok(Some(OrbitEvidence {
            subgroup: s.elements().to_vec(),
            subgroup_pairs: s.elements().iter().map(|&x| (p.left_of(x), p.right_of(x))).collect(),
            coset_count: act.degree,
            comparison,
        }));
    }
    Ok(None)
}

/// The subgroup `{(g, h) | θ(gN) = hL}` of `G × H` built from criterion
/// evidence, with `K1 = G`, `L1 = N`, `K2 = K`, `L2 = L`.
pub fn criterion_subgroup(p: &DirectProduct, evidence: &CriterionEvidence) -> Result<(Subgroup, GoursatTriple)> {
    let (g, h) = (&p.left, &p.right);
    let theta = evidence
        .isomorphism
        .iter()
        .enumerate()
        .map(|(a, &b)| (evidence.quotient_representatives[a], evidence.subquotient_representatives[b]))
        .collect();
    let triple = GoursatTriple {
        k1: Subgroup::full(g),
        l1: Subgroup::new(g, evidence.normal_subgroup.iter().copied())?,
        k2: Subgroup::new(h, evidence.subquotient_k.iter().copied())?,
        l2: Subgroup::new(h, evidence.subquotient_l.iter().copied())?,
        theta,
    };
    let s = goursat_reconstruct(p, &triple)?;
    debug_assert_eq!(goursat_decompose(p, &s)?, triple);
    Ok((s, triple))
}
