use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{connected_components, FinCategory, FiniteDiagram, Mor, Obj, Preset};
use crate::config::Caps;
use crate::error::{check_cap, Result};
use crate::uf::DisjointSets;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyFlags {
    pub is_empty: bool,
    pub is_connected: bool,
    pub component_count: usize,
    pub is_conical: bool,
    pub is_filtered: bool,
    pub is_pseudo_filtered: bool,
    pub is_sifted: bool,
    pub has_span_cocones: bool,
    pub has_parallel_pair_cocones: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoconeWitness {
    pub vertex: Obj,
    /// One leg `D(x) → vertex` per shape object.
    pub legs: Vec<Mor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeWitness {
    pub vertex: Obj,
    /// One leg `vertex → i` per object.
    pub legs: Vec<Mor>,
}

/// Depth-first search for the lexicographically least assignment of one
/// candidate per slot such that `ok(prefix)` holds for every prefix.
fn least_assignment(slots: &[&[Mor]], ok: &dyn Fn(&[Mor]) -> bool) -> Option<Vec<Mor>> {
    fn go(slots: &[&[Mor]], ok: &dyn Fn(&[Mor]) -> bool, acc: &mut Vec<Mor>) -> bool {
        if acc.len() == slots.len() {
            return true;
        }
        for &c in slots[acc.len()] {
            acc.push(c);
            if ok(acc) && go(slots, ok, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::with_capacity(slots.len());
    go(slots, ok, &mut acc).then_some(acc)
}

/// Shape morphisms grouped by the later of their two endpoints.
fn morphisms_by_last_endpoint(shape: &FinCategory) -> Vec<Vec<Mor>> {
    let mut by_last = vec![Vec::new(); shape.object_count()];
    for f in shape.morphisms() {
        by_last[shape.src(f).max(shape.dst(f))].push(f);
    }
    by_last
}

/// The least cocone over `d` in `c`, if any.
pub fn cocone_exists(c: &FinCategory, d: &FiniteDiagram) -> Option<CoconeWitness> {
    let shape = d.shape();
    let by_last = morphisms_by_last_endpoint(shape);
    for v in c.objects() {
        let slots: Vec<&[Mor]> = shape.objects().map(|x| c.hom(d.object(x), v)).collect();
        // q_y ∘ D(f) = q_x for f: x → y
        let ok = |q: &[Mor]| {
            by_last[q.len() - 1]
                .iter()
                .all(|&f| c.compose(q[shape.dst(f)], d.morphism(f)) == Some(q[shape.src(f)]))
        };
        if let Some(legs) = least_assignment(&slots, &ok) {
            return Some(CoconeWitness { vertex: v, legs });
        }
    }
    None
}

/// The least cone over the identity functor, if any.
pub fn conical_witness(c: &FinCategory, caps: &Caps) -> Result<Option<ConeWitness>> {
    check_search_caps(c, caps)?;
    let by_last = morphisms_by_last_endpoint(c);
    for v in c.objects() {
        let slots: Vec<&[Mor]> = c.objects().map(|i| c.hom(v, i)).collect();
        // f ∘ p_src = p_dst
        let ok = |p: &[Mor]| {
            by_last[p.len() - 1]
                .iter()
                .all(|&f| c.compose(f, p[c.src(f)]) == Some(p[c.dst(f)]))
        };
        if let Some(legs) = least_assignment(&slots, &ok) {
            return Ok(Some(ConeWitness { vertex: v, legs }));
        }
    }
    Ok(None)
}

pub fn is_conical(c: &FinCategory, caps: &Caps) -> Result<bool> {
    Ok(conical_witness(c, caps)?.is_some())
}

fn check_search_caps(c: &FinCategory, caps: &Caps) -> Result<()> {
    check_cap("object count", c.object_count(), caps.search_objects)?;
    check_cap("morphism count", c.morphism_count(), caps.search_morphisms)
}

fn has_cospan(c: &FinCategory, a: Obj, b: Obj) -> bool {
    c.objects().any(|v| !c.hom(a, v).is_empty() && !c.hom(b, v).is_empty())
}

/// First parallel pair `f, g: a → b` that no `h` coequalizes.
fn uncoequalized_pair(c: &FinCategory) -> Option<(Mor, Mor)> {
    for a in c.objects() {
        for b in c.objects() {
            let hom = c.hom(a, b);
            for (k, &f) in hom.iter().enumerate() {
                for &g in &hom[k + 1..] {
                    if !c.morphisms_from(b).any(|h| c.compose(h, f) == c.compose(h, g)) {
                        return Some((f, g));
                    }
                }
            }
        }
    }
    None
}

pub fn has_parallel_pair_cocones(c: &FinCategory) -> bool {
    uncoequalized_pair(c).is_none()
}

/// First span `(β, γ)` out of a common object with no cocone, in
/// `(source, β, γ)` order.
pub fn find_uncovered_span(c: &FinCategory) -> Option<(Obj, Mor, Mor)> {
    for a in c.objects() {
        let out: Vec<Mor> = c.morphisms_from(a).collect();
        for &beta in &out {
            for &gamma in &out {
                let covered = c.morphisms_from(c.dst(beta)).any(|d| {
                    c.hom(c.dst(gamma), c.dst(d))
                        .iter()
                        .any(|&e| c.compose(d, beta) == c.compose(e, gamma))
                });
                if !covered {
                    return Some((a, beta, gamma));
                }
            }
        }
    }
    None
}

pub fn has_span_cocones(c: &FinCategory) -> bool {
    find_uncovered_span(c).is_none()
}

/// Nonempty, every pair of objects has a cospan, every parallel pair is
/// coequalized.
pub fn is_filtered(c: &FinCategory) -> bool {
    !c.is_empty()
        && c.objects().all(|a| c.objects().all(|b| has_cospan(c, a, b)))
        && has_parallel_pair_cocones(c)
}

/// Filtered within each connected component, checked directly on `c`.
pub fn is_pseudo_filtered(c: &FinCategory) -> bool {
    let mut ds = DisjointSets::new(c.object_count());
    for f in c.morphisms() {
        ds.union(c.src(f), c.dst(f));
    }
    let (label, _) = ds.labels();
    c.objects().all(|a| c.objects().all(|b| label[a] != label[b] || has_cospan(c, a, b)))
        && has_parallel_pair_cocones(c)
}

/// Every comma category of cospans under a pair of objects is nonempty and
/// connected.
pub fn is_sifted(c: &FinCategory, caps: &Caps) -> Result<bool> {
    check_search_caps(c, caps)?;
    if c.is_empty() {
        return Ok(false);
    }
    for i in c.objects() {
        for j in c.objects() {
            let mut cospans = Vec::new();
            for k in c.objects() {
                for &a in c.hom(i, k) {
                    for &b in c.hom(j, k) {
                        cospans.push((a, b));
                    }
                }
            }
            if cospans.is_empty() {
                return Ok(false);
            }
            let index: HashMap<(Mor, Mor), usize> = cospans.iter().enumerate().map(|(n, &p)| (p, n)).collect();
            let mut ds = DisjointSets::new(cospans.len());
            for (n, &(a, b)) in cospans.iter().enumerate() {
                for h in c.morphisms_from(c.dst(a)) {
                    let image = (c.compose(h, a).unwrap(), c.compose(h, b).unwrap());
                    ds.union(n, index[&image]);
                }
            }
            if ds.labels().1.len() != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn classify(c: &FinCategory, caps: &Caps) -> Result<PropertyFlags> {
    let component_count = connected_components(c).len();
    Ok(PropertyFlags {
        is_empty: c.is_empty(),
        is_connected: component_count == 1,
        component_count,
        is_conical: is_conical(c, caps)?,
        is_filtered: is_filtered(c),
        is_pseudo_filtered: is_pseudo_filtered(c),
        is_sifted: is_sifted(c, caps)?,
        has_span_cocones: has_span_cocones(c),
        has_parallel_pair_cocones: has_parallel_pair_cocones(c),
        warnings: Vec::new(),
    })
}

impl Preset {
    /// [`classify`] plus a warning when the preset is a truncation whose last
    /// object distorts the cocone flags.
    pub fn classify(&self, caps: &Caps) -> Result<PropertyFlags> {
        let mut flags = classify(&self.build()?, caps)?;
        if self.is_truncation() {
            flags.warnings.push(
                "finite truncation: spans whose legs reach the last object have no cocone; \
                 cocone and filteredness flags reflect the boundary, not the infinite category"
                    .to_string(),
            );
        }
        Ok(flags)
    }
}

/// The least diagram of shape `shape` in `target` (objects first, then
/// morphisms, lexicographically) over which `target` has no cocone.
pub fn find_uncovered_diagram(shape: &FinCategory, target: &FinCategory, caps: &Caps) -> Result<Option<FiniteDiagram>> {
    check_search_caps(shape, caps)?;
    let n = shape.object_count();
    let all_objects: Vec<Obj> = target.objects().collect();
    let object_slots: Vec<&[Obj]> = vec![&all_objects; n];
    let mut found = None;
    // Walk object assignments in order; for each, walk morphism assignments.
    let mut objs = Vec::with_capacity(n);
    visit_object_assignments(&object_slots, &mut objs, &mut |objs| {
        let slots: Vec<&[Mor]> = shape
            .morphisms()
            .map(|f| target.hom(objs[shape.src(f)], objs[shape.dst(f)]))
            .collect();
        let ok_prefix = |ms: &[Mor]| {
            let f = ms.len() - 1;
            if shape.is_identity(f) && ms[f] != target.identity(objs[shape.src(f)]) {
                return false;
            }
            // check every composite whose three morphisms are assigned
            (0..ms.len()).all(|g| {
                (0..ms.len()).all(|h| match shape.compose(g, h) {
                    Some(gh) if gh < ms.len() && (g == f || h == f || gh == f) => {
                        target.compose(ms[g], ms[h]) == Some(ms[gh])
                    }
                    _ => true,
                })
            })
        };
        let mut result = None;
        visit_morphism_assignments(&slots, &ok_prefix, &mut Vec::new(), &mut |ms| {
            let d = FiniteDiagram::new(shape.clone(), target, objs.to_vec(), ms.to_vec())
                .expect("search only produces functors");
            if cocone_exists(target, &d).is_none() {
                result = Some(d);
                true
            } else {
                false
            }
        });
        if result.is_some() {
            found = result;
            true
        } else {
            false
        }
    });
    Ok(found)
}

fn visit_object_assignments(slots: &[&[Obj]], acc: &mut Vec<Obj>, visit: &mut dyn FnMut(&[Obj]) -> bool) -> bool {
    if acc.len() == slots.len() {
        return visit(acc);
    }
    for &o in slots[acc.len()] {
        acc.push(o);
        if visit_object_assignments(slots, acc, visit) {
            return true;
        }
        acc.pop();
    }
    false
}

fn visit_morphism_assignments(
    slots: &[&[Mor]],
    ok: &dyn Fn(&[Mor]) -> bool,
    acc: &mut Vec<Mor>,
    visit: &mut dyn FnMut(&[Mor]) -> bool,
) -> bool {
    if acc.len() == slots.len() {
        return visit(acc);
    }
    for &m in slots[acc.len()] {
        acc.push(m);
        if ok(acc) && visit_morphism_assignments(slots, ok, acc, visit) {
            return true;
        }
        acc.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{opposite_category, preset};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn span_in_c2_has_cocone() {
        let c2 = preset("group:c2").unwrap();
        let d = FiniteDiagram::new(preset("span").unwrap(), &c2, vec![0, 0, 0], vec![0, 0, 0, 0, 1]).unwrap();
        let w = cocone_exists(&c2, &d).unwrap();
        // legs at the feet: δ·1 = ε·σ with δ = 1, ε = σ
        assert_eq!(w.vertex, 0);
        assert_eq!(&w.legs[1..], &[0, 1]);
    }

    #[test]
    fn parallel_pair_in_c2_has_no_cocone() {
        let c2 = preset("group:c2").unwrap();
        let d = FiniteDiagram::new(preset("parallel_pair").unwrap(), &c2, vec![0, 0], vec![0, 0, 0, 1]).unwrap();
        assert!(cocone_exists(&c2, &d).is_none());
    }

    #[test]
    fn legs_of_span_have_no_cocone_in_span() {
        let span = preset("span").unwrap();
        let d = FiniteDiagram::new(span.clone(), &span, vec![0, 1, 2], vec![0, 1, 2, 3, 4]).unwrap();
        assert!(cocone_exists(&span, &d).is_none());
        assert_eq!(find_uncovered_span(&span), Some((0, 3, 4)));
    }

    #[test]
    fn classify_c2() {
        let f = classify(&preset("group:c2").unwrap(), &caps()).unwrap();
        assert!(f.is_connected && !f.is_conical && !f.is_filtered && !f.is_pseudo_filtered && !f.is_sifted);
        assert!(f.has_span_cocones && !f.has_parallel_pair_cocones);
    }

    #[test]
    fn idempotent_is_conical_via_e() {
        let c = preset("idempotent").unwrap();
        let w = conical_witness(&c, &caps()).unwrap().unwrap();
        assert_eq!(w.legs, vec![1]);
    }

    #[test]
    fn chain_is_filtered() {
        assert!(is_filtered(&preset("chain:3").unwrap()));
    }

    #[test]
    fn jk_lacks_parallel_cocones() {
        assert!(!has_parallel_pair_cocones(&preset("jk:2:3").unwrap()));
    }

    #[test]
    fn empty_category_conventions() {
        let f = classify(&preset("empty").unwrap(), &caps()).unwrap();
        assert!(f.is_empty && !f.is_connected && !f.is_filtered && !f.is_sifted && !f.is_conical);
        assert!(f.is_pseudo_filtered);
    }

    #[test]
    fn jk_preset_carries_warning() {
        let flags = "jk:2:3".parse::<Preset>().unwrap().classify(&caps()).unwrap();
        assert_eq!(flags.warnings.len(), 1);
        assert!(!flags.has_span_cocones);
    }

    #[test]
    fn conical_cap() {
        let c = preset("chain:11").unwrap();
        assert!(is_conical(&c, &caps()).unwrap_err().is_size_cap());
    }

    #[test]
    fn least_uncovered_parallel_diagram_in_c2() {
        let shape = opposite_category(&preset("parallel_pair").unwrap());
        let d = find_uncovered_diagram(&shape, &preset("group:c2").unwrap(), &caps())
            .unwrap()
            .unwrap();
        assert_eq!(d.morphism_assignment(), &[0, 0, 0, 1]);
    }

    #[test]
    fn terminal_has_no_uncovered_diagram() {
        let shape = preset("parallel_pair").unwrap();
        assert!(find_uncovered_diagram(&shape, &preset("terminal").unwrap(), &caps())
            .unwrap()
            .is_none());
    }
}
