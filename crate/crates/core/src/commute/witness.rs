use std::collections::HashMap;

use serde::Serialize;

use super::decide::coset_bifunctor;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::fincat::{
    cocone_exists, connected_components, is_conical, opposite_category, product_category, FinCategory,
    FiniteDiagram, Mor, Obj,
};
use crate::groups::{direct_product, goursat_decompose, subgroups, FinGroup, GoursatTriple, Subgroup};
use crate::setfun::{comparison_report, BiFunctor, ComparisonReport};

/// A bifunctor whose comparison map fails to be bijective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub bifunctor: BiFunctor,
    pub report: ComparisonReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupWitness {
    pub subgroup: Subgroup,
    pub triple: GoursatTriple,
    pub witness: Witness,
}

/// Serializable summary of a [`GroupWitness`].
#[derive(Debug, Clone, Serialize)]
pub struct GroupWitnessSummary {
    pub subgroup: Vec<usize>,
    pub subgroup_pairs: Vec<(usize, usize)>,
    pub goursat: crate::groups::GoursatSummary,
    pub comparison: ComparisonReport,
}

impl GroupWitness {
    pub fn summary(&self, h_order: usize) -> GroupWitnessSummary {
        GroupWitnessSummary {
            subgroup: self.subgroup.elements().to_vec(),
            subgroup_pairs: self.subgroup.elements().iter().map(|&x| (x / h_order, x % h_order)).collect(),
            goursat: self.triple.summary(),
            comparison: self.witness.report.clone(),
        }
    }
}

/// The least `S ≤ G × H` whose Goursat data has `K1 = G` and `L1 ≠ G`,
/// with its coset-action bifunctor. Such an action has a `G`-fixed
/// `H`-orbit and no `G`-fixed point, so the comparison map misses that orbit.
pub fn group_witness(g: &FinGroup, h: &FinGroup, caps: &Caps) -> Result<GroupWitness> {
    let p = direct_product(g, h);
    for s in subgroups(&p.group, caps)? {
        let triple = goursat_decompose(&p, &s)?;
        if triple.k1.order() == g.order() && triple.l1.order() != g.order() {
            let bifunctor = coset_bifunctor(&p, &s, caps)?;
            let report = comparison_report(&bifunctor, caps)?;
            return Ok(GroupWitness {
                subgroup: s,
                triple,
                witness: Witness { bifunctor, report },
            });
        }
    }
    Err(Error::NoWitness)
}

/// `F(i, j) = J(D i, j)` for a diagram `D` of shape `I^op` in `J` with no
/// cocone: `lim_I F(−, j)` is the set of cocones with vertex `j`, hence
/// empty, while each `colim_J F(i, −)` is a point.
pub fn cone_witness(i_cat: &FinCategory, j_cat: &FinCategory, d: &FiniteDiagram, caps: &Caps) -> Result<Witness> {
    if d.shape() != &opposite_category(i_cat) {
        return Err(Error::InvalidDiagram("diagram shape is not the opposite of the limit shape".into()));
    }
    if cocone_exists(j_cat, d).is_some() {
        return Err(Error::CoconeExists);
    }
    let product = product_category(i_cat, j_cat, caps.product_morphisms)?;
    let position = |a: Obj, b: Obj, m: Mor| j_cat.hom(a, b).binary_search(&m).expect("morphism in hom-set");
    let carriers = product
        .category
        .objects()
        .map(|o| {
            let (i, j) = product.object_pair(o);
            j_cat.hom(d.object(i), j).len()
        })
        .collect();
    let action = product
        .category
        .morphisms()
        .map(|k| {
            let (f, g) = product.morphism_pair(k);
            let (i, j) = (i_cat.src(f), j_cat.src(g));
            let (i2, j2) = (i_cat.dst(f), j_cat.dst(g));
            // δ ↦ g ∘ δ ∘ D(f), with D(f): D(i2) → D(i)
            j_cat
                .hom(d.object(i), j)
                .iter()
                .map(|&delta| {
                    let moved = j_cat.compose(g, j_cat.compose(delta, d.morphism(f)).expect("composable"));
                    position(d.object(i2), j2, moved.expect("composable"))
                })
                .collect()
        })
        .collect();
    let bifunctor = BiFunctor::from_functor(
        product.clone(),
        crate::setfun::SetFunctor::new(product.category.clone(), carriers, action)?,
    )?;
    let report = comparison_report(&bifunctor, caps)?;
    Ok(Witness { bifunctor, report })
}

/// The quotient of `(∐_i I(i, −)) × J(j0, −)` identifying `(α, δ)` and
/// `(α', δ)` whenever `δ` factors through `β` or `γ`. For connected,
/// non-conical `I` and a span `(β, γ)` with no cocone, `lim_I` of it is the
/// disjoint union of the images of `J(β, −)` and `J(γ, −)`, whose colimit
/// has two points, while the other side is a single point.
pub fn foltz_witness(
    i_cat: &FinCategory,
    j_cat: &FinCategory,
    span: (Obj, Mor, Mor),
    caps: &Caps,
) -> Result<Witness> {
    let (j0, beta, gamma) = span;
    if j0 >= j_cat.object_count() || beta >= j_cat.morphism_count() || gamma >= j_cat.morphism_count() {
        return Err(Error::InvalidDiagram("span indices out of range".into()));
    }
    if j_cat.src(beta) != j0 || j_cat.src(gamma) != j0 {
        return Err(Error::InvalidDiagram(format!("span legs must both start at object {j0}")));
    }
    let span_shape = crate::fincat::preset("span")?;
    let span_diagram = FiniteDiagram::new(
        span_shape,
        j_cat,
        vec![j0, j_cat.dst(beta), j_cat.dst(gamma)],
        vec![j_cat.identity(j0), j_cat.identity(j_cat.dst(beta)), j_cat.identity(j_cat.dst(gamma)), beta, gamma],
    )?;
    if cocone_exists(j_cat, &span_diagram).is_some() {
        return Err(Error::CoconeExists);
    }
    if connected_components(i_cat).len() != 1 {
        return Err(Error::NotConnected);
    }
    if is_conical(i_cat, caps)? {
        return Err(Error::ConicalShape);
    }
    let product = product_category(i_cat, j_cat, caps.product_morphisms)?;

    // δ: j0 → j factors through β or γ
    let factors = |delta: Mor| {
        [beta, gamma].iter().any(|&leg| {
            j_cat
                .hom(j_cat.dst(leg), j_cat.dst(delta))
                .iter()
                .any(|&e| j_cat.compose(e, leg) == Some(delta))
        })
    };
    let collapsed: Vec<bool> = j_cat.morphisms().map(|m| j_cat.src(m) == j0 && factors(m)).collect();

    // Elements of F(i, j): for δ in J(j0, j) in order, one element if δ
    // factors, else one per α into i.
    #[derive(Clone, Copy, PartialEq, Eq, Hash)]
    enum Elem {
        Pair(Mor, Mor),
        Point(Mor),
    }
    let mut elements: Vec<Vec<Elem>> = Vec::with_capacity(product.category.object_count());
    let mut index: Vec<HashMap<Elem, usize>> = Vec::with_capacity(product.category.object_count());
    for o in product.category.objects() {
        let (i, j) = product.object_pair(o);
        let mut es = Vec::new();
        for &delta in j_cat.hom(j0, j) {
            if collapsed[delta] {
                es.push(Elem::Point(delta));
            } else {
                es.extend(i_cat.morphisms_into(i).map(|alpha| Elem::Pair(alpha, delta)));
            }
        }
        index.push(es.iter().enumerate().map(|(k, &e)| (e, k)).collect());
        elements.push(es);
    }
    let carriers = elements.iter().map(Vec::len).collect();
    let action = product
        .category
        .morphisms()
        .map(|k| {
            let (f, g) = product.morphism_pair(k);
            let target = product.category.dst(k);
            elements[product.category.src(k)]
                .iter()
                .map(|&e| {
                    let image = match e {
                        Elem::Point(delta) => Elem::Point(j_cat.compose(g, delta).unwrap()),
                        Elem::Pair(alpha, delta) => {
                            let gd = j_cat.compose(g, delta).unwrap();
                            if collapsed[gd] {
                                Elem::Point(gd)
                            } else {
                                Elem::Pair(i_cat.compose(f, alpha).unwrap(), gd)
                            }
                        }
                    };
                    index[target][&image]
                })
                .collect()
        })
        .collect();
    let functor = crate::setfun::SetFunctor::new(product.category.clone(), carriers, action)?;
    let bifunctor = BiFunctor::from_functor(product, functor)?;
    let report = comparison_report(&bifunctor, caps)?;
    Ok(Witness { bifunctor, report })
}
