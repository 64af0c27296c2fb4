use super::SetFunctor;
use crate::error::{check_cap, Result};
use crate::fincat::{Mor, Obj};
use crate::uf::DisjointSets;

/// Compatible families `(x_0, …, x_{n-1})`, one element per object, in
/// lexicographic order.
///
/// Objects are filled in index order. A morphism into the current object
/// from an earlier one forces its value; every morphism whose endpoints are
/// both filled is checked as soon as the later endpoint is.
pub fn limit(f: &SetFunctor, max_elements: usize) -> Result<Vec<Vec<usize>>> {
    let c = f.domain();
    let n = c.object_count();
    let mut checks: Vec<Vec<Mor>> = vec![Vec::new(); n];
    let mut forcing: Vec<Option<Mor>> = vec![None; n];
    for m in c.morphisms() {
        let (s, d) = (c.src(m), c.dst(m));
        checks[s.max(d)].push(m);
        if s < d && forcing[d].is_none() {
            forcing[d] = Some(m);
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(n);
    extend(f, &checks, &forcing, &mut acc, &mut out, max_elements)?;
    Ok(out)
}

fn extend(
    f: &SetFunctor,
    checks: &[Vec<Mor>],
    forcing: &[Option<Mor>],
    acc: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    let i = acc.len();
    if i == checks.len() {
        out.push(acc.clone());
        return check_cap("limit size", out.len(), cap);
    }
    let c = f.domain();
    let candidates: Box<dyn Iterator<Item = usize>> = match forcing[i] {
        Some(m) => Box::new(std::iter::once(f.apply(m, acc[c.src(m)]))),
        None => Box::new(0..f.carrier(i)),
    };
    for x in candidates {
        acc.push(x);
        if checks[i].iter().all(|&m| f.apply(m, acc[c.src(m)]) == acc[c.dst(m)]) {
            extend(f, checks, forcing, acc, out, cap)?;
        }
        acc.pop();
    }
    Ok(())
}

/// The disjoint union of the carriers modulo `x ~ F(f)(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colimit {
    offsets: Vec<usize>,
    class_of: Vec<usize>,
    /// Least `(object, element)` of each class, classes ordered by it.
    pub representatives: Vec<(Obj, usize)>,
}

impl Colimit {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn class(&self, o: Obj, x: usize) -> usize {
        self.class_of[self.offsets[o] + x]
    }
}

pub fn colimit(f: &SetFunctor) -> Colimit {
    let c = f.domain();
    let mut offsets = Vec::with_capacity(c.object_count() + 1);
    let mut total = 0;
    for o in c.objects() {
        offsets.push(total);
        total += f.carrier(o);
    }
    let mut ds = DisjointSets::new(total);
    for m in c.morphisms() {
        let (s, d) = (offsets[c.src(m)], offsets[c.dst(m)]);
        for (x, &y) in f.table(m).iter().enumerate() {
            ds.union(s + x, d + y);
        }
    }
    let (class_of, leaders) = ds.labels();
    let representatives = leaders
        .into_iter()
        .map(|g| {
            let o = offsets.partition_point(|&off| off <= g) - 1;
            (o, g - offsets[o])
        })
        .collect();
    Colimit {
        offsets,
        class_of,
        representatives,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::preset;

    const CAP: usize = 1 << 20;

    fn on(name: &str, carriers: Vec<usize>, action: Vec<Vec<usize>>) -> SetFunctor {
        SetFunctor::new(preset(name).unwrap(), carriers, action).unwrap()
    }

    #[test]
    fn swap_has_no_fixed_points() {
        let f = on("group:c2", vec![2], vec![vec![0, 1], vec![1, 0]]);
        assert!(limit(&f, CAP).unwrap().is_empty());
        assert_eq!(colimit(&f).len(), 1);
    }

    #[test]
    fn trivial_action_fixes_everything() {
        let f = on("group:c2", vec![2], vec![vec![0, 1], vec![0, 1]]);
        assert_eq!(limit(&f, CAP).unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn empty_category() {
        let f = on("empty", vec![], vec![]);
        assert_eq!(limit(&f, CAP).unwrap(), vec![Vec::<usize>::new()]);
        assert!(colimit(&f).is_empty());
    }

    #[test]
    fn parallel_pair_identity_and_swap() {
        let f = on("parallel_pair", vec![2, 2], vec![vec![0, 1], vec![0, 1], vec![0, 1], vec![1, 0]]);
        assert!(limit(&f, CAP).unwrap().is_empty());
    }

    #[test]
    fn span_glues_feet_through_apex() {
        // 1 ← 3 → 1, apex is object 0
        let f = on("span", vec![3, 1, 1], vec![vec![0, 1, 2], vec![0], vec![0], vec![0, 0, 0], vec![0, 0, 0]]);
        let c = colimit(&f);
        assert_eq!(c.len(), 1);
        assert_eq!(c.representatives, vec![(0, 0)]);
    }

    #[test]
    fn discrete_coproduct() {
        let f = on("discrete:2", vec![2, 3], vec![vec![0, 1], vec![0, 1, 2]]);
        assert_eq!(colimit(&f).len(), 5);
        assert_eq!(limit(&f, CAP).unwrap().len(), 6);
    }

    #[test]
    fn limit_cap() {
        let f = on("discrete:2", vec![2, 3], vec![vec![0, 1], vec![0, 1, 2]]);
        assert!(limit(&f, 5).unwrap_err().is_size_cap());
    }

    #[test]
    fn chain_limit_is_the_first_carrier() {
        // on a category with an initial object the limit is its carrier
        let f = on("chain:2", vec![3, 2], vec![vec![0, 1, 2], vec![0, 1], vec![1, 0, 1]]);
        assert_eq!(limit(&f, CAP).unwrap(), vec![vec![0, 1], vec![1, 0], vec![2, 1]]);
    }
}
