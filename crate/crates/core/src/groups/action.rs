use super::{Elem, FinGroup, Subgroup};
use crate::error::{Error, Result};
use crate::uf::DisjointSets;

/// A left action of a group on `0..degree`: `perms[g][x]` is `g·x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    pub degree: usize,
    pub perms: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Checks that the identity acts trivially and that `(ab)·x = a·(b·x)`.
    pub fn new(g: &FinGroup, degree: usize, perms: Vec<Vec<usize>>) -> Result<Self> {
        if perms.len() != g.order() || perms.iter().any(|p| p.len() != degree || p.iter().any(|&x| x >= degree)) {
            return Err(Error::NotAFunctor("action table has the wrong shape".into()));
        }
        if perms[g.identity()].iter().enumerate().any(|(x, &y)| x != y) {
            return Err(Error::NotAFunctor("identity does not act trivially".into()));
        }
        for a in g.elements() {
            for b in g.elements() {
                let ab = &perms[g.mul(a, b)];
                if (0..degree).any(|x| ab[x] != perms[a][perms[b][x]]) {
                    return Err(Error::NotAFunctor(format!("action does not respect {a}·{b}")));
                }
            }
        }
        Ok(Self { degree, perms })
    }

    /// Points fixed by every element of `by`.
    pub fn fixed_points(&self, by: impl Iterator<Item = Elem> + Clone) -> Vec<usize> {
        (0..self.degree)
            .filter(|&x| by.clone().all(|g| self.perms[g][x] == x))
            .collect()
    }

    /// Orbit label of each point under the elements `by`, labels ordered by
    /// least point.
    pub fn orbits(&self, by: impl Iterator<Item = Elem>) -> Vec<usize> {
        let mut ds = DisjointSets::new(self.degree);
        for g in by {
            for x in 0..self.degree {
                ds.union(x, self.perms[g][x]);
            }
        }
        ds.labels().0
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbits(0..self.perms.len()).iter().all(|&l| l == 0)
    }
}

/// Left multiplication on the left cosets of `s`, cosets ordered by least
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetAction {
    pub action: GroupAction,
    pub representatives: Vec<Elem>,
}

pub fn coset_action(p: &FinGroup, s: &Subgroup) -> Result<CosetAction> {
    if s.parent_order() != p.order() {
        return Err(Error::NotASubgroup("subgroup of a different group".into()));
    }
    let reps = s.left_coset_reps(p, &Subgroup::full(p));
    let mut coset_of = vec![0; p.order()];
    for x in p.elements() {
        coset_of[x] = reps.binary_search(&s.left_coset_rep(p, x)).expect("rep listed");
    }
    let perms = p
        .elements()
        .map(|g| reps.iter().map(|&r| coset_of[p.mul(g, r)]).collect())
        .collect();
    Ok(CosetAction {
        action: GroupAction {
            degree: reps.len(),
            perms,
        },
        representatives: reps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::groups::{cyclic, direct_product, group_preset, subgroups};

    #[test]
    fn diagonal_cosets_are_swapped_by_both_factors() {
        let p = direct_product(&cyclic(2), &cyclic(2));
        let diag = Subgroup::new(&p.group, [0, 3]).unwrap();
        let ca = coset_action(&p.group, &diag).unwrap();
        assert_eq!(ca.action.degree, 2);
        assert_eq!(ca.action.perms[p.pair(1, 0)], vec![1, 0]);
        assert_eq!(ca.action.perms[p.pair(0, 1)], vec![1, 0]);
    }

    #[test]
    fn full_and_trivial_subgroups() {
        let g = group_preset("a4").unwrap();
        let full = coset_action(&g, &Subgroup::full(&g)).unwrap();
        assert_eq!(full.action.degree, 1);
        let reg = coset_action(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(reg.action.degree, 12);
        for x in g.elements() {
            assert_eq!(reg.action.perms[x], g.rows()[x]);
        }
    }

    #[test]
    fn coset_actions_are_transitive_with_stabilizer_s() {
        let caps = Caps::default();
        let g = group_preset("d4").unwrap();
        for s in subgroups(&g, &caps).unwrap() {
            let ca = coset_action(&g, &s).unwrap();
            GroupAction::new(&g, ca.action.degree, ca.action.perms.clone()).unwrap();
            assert!(ca.action.is_transitive());
            let home = ca.representatives.binary_search(&s.left_coset_rep(&g, g.identity())).unwrap();
            let stab: Vec<Elem> = g.elements().filter(|&x| ca.action.perms[x][home] == home).collect();
            assert_eq!(stab, s.elements());
        }
    }

    #[test]
    fn broken_action_rejected() {
        let g = cyclic(3);
        let perms = vec![vec![0, 1], vec![1, 0], vec![1, 0]];
        assert!(GroupAction::new(&g, 2, perms).is_err());
    }
}
