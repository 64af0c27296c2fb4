use serde::{Deserialize, Serialize};

use super::{DirectProduct, Elem, Subgroup};
use crate::error::{Error, Result};

/// `S = {(g, h) ∈ K1 × K2 | θ(g L1) = h L2}` with `L1 ⊴ K1 ≤ G`,
/// `L2 ⊴ K2 ≤ H` and `θ: K1/L1 → K2/L2` an isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoursatTriple {
    pub k1: Subgroup,
    pub l1: Subgroup,
    pub k2: Subgroup,
    pub l2: Subgroup,
    /// `θ` on coset representatives: `(least element of g L1, least element
    /// of h L2)`, sorted by the first component.
    pub theta: Vec<(Elem, Elem)>,
}

/// Serializable view of a [`GoursatTriple`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GoursatSummary {
    pub k1: Vec<Elem>,
    pub l1: Vec<Elem>,
    pub k2: Vec<Elem>,
    pub l2: Vec<Elem>,
    pub theta: Vec<(Elem, Elem)>,
}

impl GoursatTriple {
    pub fn summary(&self) -> GoursatSummary {
        GoursatSummary {
            k1: self.k1.elements().to_vec(),
            l1: self.l1.elements().to_vec(),
            k2: self.k2.elements().to_vec(),
            l2: self.l2.elements().to_vec(),
            theta: self.theta.clone(),
        }
    }
}

fn check_parent(s: &Subgroup, order: usize) -> Result<()> {
    if s.parent_order() != order {
        return Err(Error::NotASubgroup(format!(
            "subgroup of a group of order {}, expected {order}",
            s.parent_order()
        )));
    }
    Ok(())
}

pub fn goursat_decompose(p: &DirectProduct, s: &Subgroup) -> Result<GoursatTriple> {
    check_parent(s, p.group.order())?;
    let (g, h) = (&p.left, &p.right);
    let mut k1 = vec![false; g.order()];
    let mut k2 = vec![false; h.order()];
    let mut l1 = vec![false; g.order()];
    let mut l2 = vec![false; h.order()];
    for &x in s.elements() {
        let (a, b) = (p.left_of(x), p.right_of(x));
        k1[a] = true;
        k2[b] = true;
        if b == h.identity() {
            l1[a] = true;
        }
        if a == g.identity() {
            l2[b] = true;
        }
    }
    let (k1, k2) = (Subgroup::from_mask(k1), Subgroup::from_mask(k2));
    let (l1, l2) = (Subgroup::from_mask(l1), Subgroup::from_mask(l2));
    let mut theta: Vec<(Elem, Elem)> = s
        .elements()
        .iter()
        .map(|&x| {
            (
                l1.left_coset_rep(g, p.left_of(x)),
                l2.left_coset_rep(h, p.right_of(x)),
            )
        })
        .collect();
    theta.sort_unstable();
    theta.dedup();
    debug_assert!(theta.windows(2).all(|w| w[0].0 != w[1].0), "theta is a function");
    Ok(GoursatTriple { k1, l1, k2, l2, theta })
}

pub fn goursat_reconstruct(p: &DirectProduct, t: &GoursatTriple) -> Result<Subgroup> {
    let (g, h) = (&p.left, &p.right);
    check_parent(&t.k1, g.order())?;
    check_parent(&t.l1, g.order())?;
    check_parent(&t.k2, h.order())?;
    check_parent(&t.l2, h.order())?;
    let mut elements = Vec::new();
    for &a in t.k1.elements() {
        let ra = t.l1.left_coset_rep(g, a);
        let Ok(pos) = t.theta.binary_search_by_key(&ra, |&(x, _)| x) else {
            return Err(Error::NotASubgroup(format!("theta undefined on coset of {a}")));
        };
        let target = t.theta[pos].1;
        for &b in t.k2.elements() {
            if t.l2.left_coset_rep(h, b) == target {
                elements.push(p.pair(a, b));
            }
        }
    }
    Subgroup::new(&p.group, elements)
}
