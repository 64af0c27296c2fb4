use super::{Elem, FinGroup, Subgroup};
use crate::config::Caps;
use crate::error::{check_cap, Result};

/// `map[a]` is the image of element `a` of the first group.
pub type Isomorphism = Vec<Elem>;

fn order_profile(g: &FinGroup) -> Vec<usize> {
    let mut orders: Vec<usize> = g.elements().map(|a| g.element_order(a)).collect();
    orders.sort_unstable();
    orders
}

/// Small generating set: greedily add the highest-order element outside the
/// subgroup generated so far.
fn generating_set(g: &FinGroup) -> Vec<Elem> {
    let mut by_order: Vec<Elem> = g.elements().collect();
    by_order.sort_by_key(|&a| (std::cmp::Reverse(g.element_order(a)), a));
    let mut gens = Vec::new();
    let mut span = Subgroup::trivial(g);
    for a in by_order {
        if span.order() == g.order() {
            break;
        }
        if !span.contains(a) {
            gens.push(a);
            span = Subgroup::generated(g, &gens);
        }
    }
    gens
}

/// Extends generator images to a homomorphism on the subgroup they
/// generate; `None` if inconsistent or not injective.
fn extend(g1: &FinGroup, g2: &FinGroup, gens: &[Elem], images: &[Elem]) -> Option<Vec<Option<Elem>>> {
    let mut map = vec![None; g1.order()];
    let mut used = vec![false; g2.order()];
    map[g1.identity()] = Some(g2.identity());
    used[g2.identity()] = true;
    let mut queue = vec![g1.identity()];
    let mut next = 0;
    while next < queue.len() {
        let a = queue[next];
        next += 1;
        let fa = map[a].expect("queued elements are mapped");
        for (&s, &t) in gens.iter().zip(images) {
            let b = g1.mul(s, a);
            let fb = g2.mul(t, fa);
            match map[b] {
                Some(x) if x != fb => return None,
                Some(_) => {}
                None => {
                    if std::mem::replace(&mut used[fb], true) {
                        return None;
                    }
                    map[b] = Some(fb);
                    queue.push(b);
                }
            }
        }
    }
    Some(map)
}

/// Exact isomorphism test. Screens order, element-order multiset,
/// commutativity and centre size, then backtracks over generator images of
/// matching element order, pruning on partial inconsistency.
pub fn are_isomorphic(g1: &FinGroup, g2: &FinGroup, caps: &Caps) -> Result<Option<Isomorphism>> {
    check_cap("group order for isomorphism test", g1.order(), caps.product_order)?;
    check_cap("group order for isomorphism test", g2.order(), caps.product_order)?;
    if g1.order() != g2.order()
        || order_profile(g1) != order_profile(g2)
        || g1.is_abelian() != g2.is_abelian()
        || g1.center_size() != g2.center_size()
    {
        return Ok(None);
    }
    let gens = generating_set(g1);
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| {
            let k = g1.element_order(s);
            g2.elements().filter(|&t| g2.element_order(t) == k).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(g1, g2, &gens, &candidates, &mut images))
}

fn search(
    g1: &FinGroup,
    g2: &FinGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    images: &mut Vec<Elem>,
) -> Option<Isomorphism> {
    let depth = images.len();
    if depth == gens.len() {
        let map = extend(g1, g2, gens, images)?;
        return map.into_iter().collect();
    }
    for &t in &candidates[depth] {
        images.push(t);
        if extend(g1, g2, &gens[..=depth], images).is_some() {
            if let Some(iso) = search(g1, g2, gens, candidates, images) {
                return Some(iso);
            }
        }
        images.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, direct_product, group_preset, CATALOG};

    fn caps() -> Caps {
        Caps::default()
    }

    fn is_iso_witness(g1: &FinGroup, g2: &FinGroup, map: &[Elem]) -> bool {
        let mut seen = vec![false; g2.order()];
        map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
            && g1
                .elements()
                .all(|a| g1.elements().all(|b| map[g1.mul(a, b)] == g2.mul(map[a], map[b])))
    }

    #[test]
    fn c4_is_not_klein4() {
        assert!(are_isomorphic(&cyclic(4), &group_preset("klein4").unwrap(), &caps())
            .unwrap()
            .is_none());
    }

    #[test]
    fn c6_is_c2_times_c3() {
        let p = direct_product(&cyclic(2), &cyclic(3)).group;
        let map = are_isomorphic(&cyclic(6), &p, &caps()).unwrap().unwrap();
        assert!(is_iso_witness(&cyclic(6), &p, &map));
    }

    #[test]
    fn self_isomorphism_is_found() {
        let g = group_preset("s4").unwrap();
        let map = are_isomorphic(&g, &g, &caps()).unwrap().unwrap();
        assert!(is_iso_witness(&g, &g, &map));
    }

    #[test]
    fn d4_and_q8_differ() {
        let d4 = group_preset("d4").unwrap();
        let q8 = group_preset("q8").unwrap();
        assert!(are_isomorphic(&d4, &q8, &caps()).unwrap().is_none());
    }

    #[test]
    fn nonabelian_order_16_products_differ() {
        let a = direct_product(&cyclic(2), &group_preset("d4").unwrap()).group;
        let b = direct_product(&cyclic(2), &group_preset("q8").unwrap()).group;
        assert!(are_isomorphic(&a, &b, &caps()).unwrap().is_none());
    }

    #[test]
    fn equivalence_relation_on_catalog() {
        let groups: Vec<FinGroup> = CATALOG.iter().map(|n| group_preset(n).unwrap()).collect();
        let iso = |a: &FinGroup, b: &FinGroup| are_isomorphic(a, b, &caps()).unwrap().is_some();
        for a in &groups {
            assert!(iso(a, a));
            for b in &groups {
                assert_eq!(iso(a, b), iso(b, a));
                for c in &groups {
                    if iso(a, b) && iso(b, c) {
                        assert!(iso(a, c));
                    }
                }
            }
        }
    }
}
