use std::cmp::Ordering;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use super::{Elem, FinGroup};
use crate::config::Caps;
use crate::error::{check_cap, Error, Result};

/// A subgroup, stored as its sorted element list plus a membership mask
/// sized to the parent group. Ordered by `(order, elements)`.
#[derive(Debug, Clone)]
pub struct Subgroup {
    elements: Vec<Elem>,
    mask: Vec<bool>,
}

impl Subgroup {
    /// Checks identity, closure and inverses.
    pub fn new(g: &FinGroup, elements: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let mut mask = vec![false; g.order()];
        for x in elements {
            if x >= g.order() {
                return Err(Error::NotASubgroup(format!("element {x} not in group of order {}", g.order())));
            }
            mask[x] = true;
        }
        let s = Self::from_mask(mask);
        if !s.contains(g.identity()) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in &s.elements {
            if !s.contains(g.inv(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &s.elements {
                if !s.contains(g.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!("{a}·{b} = {} missing", g.mul(a, b))));
                }
            }
        }
        Ok(s)
    }

    pub(crate) fn from_mask(mask: Vec<bool>) -> Self {
        let elements = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
        Self { elements, mask }
    }

    pub fn trivial(g: &FinGroup) -> Self {
        Self::generated(g, &[])
    }

    pub fn full(g: &FinGroup) -> Self {
        Self::from_mask(vec![true; g.order()])
    }

    /// The subgroup generated by `gens`.
    pub fn generated(g: &FinGroup, gens: &[Elem]) -> Self {
        let mut mask = vec![false; g.order()];
        let mut queue = vec![g.identity()];
        mask[g.identity()] = true;
        let mut next = 0;
        while next < queue.len() {
            let a = queue[next];
            next += 1;
            for &s in gens {
                let b = g.mul(s, a);
                if !mask[b] {
                    mask[b] = true;
                    queue.push(b);
                }
            }
        }
        Self::from_mask(mask)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    /// Order of the parent group.
    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// Normal in `within` (which must contain it), checked by conjugation.
    pub fn is_normal_in(&self, g: &FinGroup, within: &Subgroup) -> bool {
        within
            .elements
            .iter()
            .all(|&x| self.elements.iter().all(|&n| self.contains(g.mul(g.mul(x, n), g.inv(x)))))
    }

    pub fn is_normal(&self, g: &FinGroup) -> bool {
        self.is_normal_in(g, &Subgroup::full(g))
    }

    /// Least element of the left coset `x·self`.
    pub fn left_coset_rep(&self, g: &FinGroup, x: Elem) -> Elem {
        self.elements.iter().map(|&s| g.mul(x, s)).min().expect("subgroups are nonempty")
    }

    /// Least elements of the left cosets of `self` inside `within`, ascending.
    pub fn left_coset_reps(&self, g: &FinGroup, within: &Subgroup) -> Vec<Elem> {
        let mut reps: Vec<Elem> = within.elements.iter().map(|&x| self.left_coset_rep(g, x)).collect();
        reps.sort_unstable();
        reps.dedup();
        reps
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.mask.len() == other.mask.len()
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Every subgroup, sorted by `(order, elements)`.
///
/// Starts from the trivial subgroup and repeatedly joins a known subgroup
/// with a cyclic subgroup it does not contain; every subgroup is a join of
/// cyclic subgroups, so the closure reaches all of them.
pub fn subgroups(g: &FinGroup, caps: &Caps) -> Result<Vec<Subgroup>> {
    check_cap("group order for subgroup enumeration", g.order(), caps.product_order)?;
    let mut cyclic: Vec<(Elem, Subgroup)> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for x in g.elements() {
        let c = Subgroup::generated(g, &[x]);
        if seen_cyclic.insert(c.elements.clone()) {
            cyclic.push((x, c));
        }
    }
    let trivial = Subgroup::trivial(g);
    let mut seen: HashSet<Vec<Elem>> = HashSet::from([trivial.elements.clone()]);
    let mut found = vec![(trivial, Vec::<Elem>::new())];
    let mut next = 0;
    while next < found.len() {
        let (s, gens) = found[next].clone();
        next += 1;
        for (x, c) in &cyclic {
            if c.is_subset_of(&s) {
                continue;
            }
            let mut more = gens.clone();
            more.push(*x);
            let t = Subgroup::generated(g, &more);
            assert_eq!(g.order() % t.order(), 0, "Lagrange violated: |{:?}| ∤ {}", t.elements, g.order());
            if seen.insert(t.elements.clone()) {
                found.push((t, more));
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().map(|(s, _)| s).collect();
    out.sort();
    Ok(out)
}

pub fn normal_subgroups(g: &FinGroup, caps: &Caps) -> Result<Vec<Subgroup>> {
    Ok(subgroups(g, caps)?.into_iter().filter(|s| s.is_normal(g)).collect())
}

/// `K/L` for `L ⊴ K ≤ G`, with cosets ordered by their least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub group: FinGroup,
    /// Least element of each coset, indexed by quotient element.
    pub representatives: Vec<Elem>,
    /// Quotient element of each element of the parent; `None` outside `K`.
    pub projection: Vec<Option<Elem>>,
}

pub fn quotient_of(g: &FinGroup, k: &Subgroup, l: &Subgroup) -> Result<Quotient> {
    if k.parent_order() != g.order() || l.parent_order() != g.order() {
        return Err(Error::NotASubgroup("subgroup belongs to a different group".into()));
    }
    if !l.is_subset_of(k) {
        return Err(Error::NotASubgroup("L is not contained in K".into()));
    }
    if !l.is_normal_in(g, k) {
        return Err(Error::NotNormal(format!("{:?} in {:?}", l.elements(), k.elements())));
    }
    let reps = l.left_coset_reps(g, k);
    let mut projection = vec![None; g.order()];
    for &x in k.elements() {
        let r = l.left_coset_rep(g, x);
        projection[x] = Some(reps.binary_search(&r).expect("rep listed"));
    }
    let q = reps.len();
    let mut table = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            table.push(projection[g.mul(a, b)].expect("K is closed"));
        }
    }
    let identity = projection[g.identity()].expect("identity in K");
    Ok(Quotient {
        group: FinGroup::from_parts(q, table, identity, None),
        representatives: reps,
        projection,
    })
}

pub fn quotient_group(g: &FinGroup, n: &Subgroup) -> Result<Quotient> {
    quotient_of(g, &Subgroup::full(g), n)
}

/// `K` as a group in its own right, plus its embedding into the parent.
pub fn subgroup_as_group(g: &FinGroup, k: &Subgroup) -> (FinGroup, Vec<Elem>) {
    let trivial = Subgroup::trivial(g);
    let q = quotient_of(g, k, &trivial).expect("trivial subgroup is normal");
    (q.group, q.representatives)
}
