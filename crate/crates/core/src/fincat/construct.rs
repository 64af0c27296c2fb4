use super::{FinCategory, Mor, Obj};
use crate::error::{check_cap, Result};
use crate::uf::DisjointSets;

/// Same objects and morphism indices, sources and targets swapped.
pub fn opposite_category(c: &FinCategory) -> FinCategory {
    let m = c.morphism_count();
    let mut compose = vec![None; m * m];
    for g in c.morphisms() {
        for f in c.morphisms() {
            compose[g * m + f] = c.compose(f, g);
        }
    }
    FinCategory::from_parts(
        c.object_count(),
        c.dst.clone(),
        c.src.clone(),
        c.identities.clone(),
        compose,
    )
}

/// A product category together with its pair indexing: object `(i, j)` is
/// `i * |ob J| + j` and morphism `(f, g)` is `f * |mor J| + g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCategory {
    pub left: FinCategory,
    pub right: FinCategory,
    pub category: FinCategory,
}

impl ProductCategory {
    pub fn object(&self, i: Obj, j: Obj) -> Obj {
        i * self.right.object_count() + j
    }

    pub fn object_pair(&self, o: Obj) -> (Obj, Obj) {
        let n = self.right.object_count();
        (o / n, o % n)
    }

    pub fn morphism(&self, f: Mor, g: Mor) -> Mor {
        f * self.right.morphism_count() + g
    }

    pub fn morphism_pair(&self, k: Mor) -> (Mor, Mor) {
        let m = self.right.morphism_count();
        (k / m, k % m)
    }
}

pub fn product_category(left: &FinCategory, right: &FinCategory, max_morphisms: usize) -> Result<ProductCategory> {
    let (n1, n2) = (left.object_count(), right.object_count());
    let (m1, m2) = (left.morphism_count(), right.morphism_count());
    check_cap("product morphism count", m1 * m2, max_morphisms)?;
    let m = m1 * m2;
    let mut src = Vec::with_capacity(m);
    let mut dst = Vec::with_capacity(m);
    for f in 0..m1 {
        for g in 0..m2 {
            src.push(left.src(f) * n2 + right.src(g));
            dst.push(left.dst(f) * n2 + right.dst(g));
        }
    }
    let mut identities = Vec::with_capacity(n1 * n2);
    for i in 0..n1 {
        for j in 0..n2 {
            identities.push(left.identity(i) * m2 + right.identity(j));
        }
    }
    let mut compose = vec![None; m * m];
    for f2 in 0..m1 {
        for f1 in 0..m1 {
            let Some(f) = left.compose(f2, f1) else { continue };
            for g2 in 0..m2 {
                for g1 in 0..m2 {
                    if let Some(g) = right.compose(g2, g1) {
                        compose[(f2 * m2 + g2) * m + f1 * m2 + g1] = Some(f * m2 + g);
                    }
                }
            }
        }
    }
    Ok(ProductCategory {
        left: left.clone(),
        right: right.clone(),
        category: FinCategory::from_parts(n1 * n2, src, dst, identities, compose),
    })
}

/// Zigzag components, each sorted, ordered by least object.
pub fn connected_components(c: &FinCategory) -> Vec<Vec<Obj>> {
    let mut ds = DisjointSets::new(c.object_count());
    for f in c.morphisms() {
        ds.union(c.src(f), c.dst(f));
    }
    let (labels, leaders) = ds.labels();
    let mut comps = vec![Vec::new(); leaders.len()];
    for (o, &l) in labels.iter().enumerate() {
        comps[l].push(o);
    }
    comps
}

/// The full subcategory on `objects` (taken in the given order), with the
/// morphism indices of the original category it keeps.
pub fn full_subcategory(c: &FinCategory, objects: &[Obj]) -> (FinCategory, Vec<Mor>) {
    let mut new_obj = vec![usize::MAX; c.object_count()];
    for (k, &o) in objects.iter().enumerate() {
        new_obj[o] = k;
    }
    let kept: Vec<Mor> = c
        .morphisms()
        .filter(|&f| new_obj[c.src(f)] != usize::MAX && new_obj[c.dst(f)] != usize::MAX)
        .collect();
    let mut new_mor = vec![usize::MAX; c.morphism_count()];
    for (k, &f) in kept.iter().enumerate() {
        new_mor[f] = k;
    }
    let m = kept.len();
    let mut compose = vec![None; m * m];
    for (gi, &g) in kept.iter().enumerate() {
        for (fi, &f) in kept.iter().enumerate() {
            compose[gi * m + fi] = c.compose(g, f).map(|gf| new_mor[gf]);
        }
    }
    let sub = FinCategory::from_parts(
        objects.len(),
        kept.iter().map(|&f| new_obj[c.src(f)]).collect(),
        kept.iter().map(|&f| new_obj[c.dst(f)]).collect(),
        objects.iter().map(|&o| new_mor[c.identity(o)]).collect(),
        compose,
    );
    (sub, kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::preset;

    #[test]
    fn opposite_of_span_is_cospan() {
        assert_eq!(opposite_category(&preset("span").unwrap()), preset("cospan").unwrap());
    }

    #[test]
    fn opposite_is_involution() {
        for name in ["jk:2:3", "chain:3", "group:s3", "idempotent", "parallel_pair"] {
            let c = preset(name).unwrap();
            assert_eq!(opposite_category(&opposite_category(&c)), c);
        }
    }

    #[test]
    fn opposite_of_group_is_lawful() {
        let op = opposite_category(&preset("group:c2").unwrap());
        assert_eq!(FinCategory::build(&op.to_raw()).unwrap(), op);
        assert_eq!(op.morphism_count(), 2);
    }

    #[test]
    fn product_counts() {
        let p = product_category(&preset("parallel_pair").unwrap(), &preset("group:c2").unwrap(), 1000).unwrap();
        assert_eq!((p.category.object_count(), p.category.morphism_count()), (2, 8));
        assert_eq!(FinCategory::build(&p.category.to_raw()).unwrap(), p.category);
    }

    #[test]
    fn product_with_terminal_is_unit() {
        let c = preset("jk:2:3").unwrap();
        let p = product_category(&preset("terminal").unwrap(), &c, 1000).unwrap();
        assert_eq!(p.category, c);
    }

    #[test]
    fn product_of_discretes() {
        let p = product_category(&preset("discrete:2").unwrap(), &preset("discrete:3").unwrap(), 1000).unwrap();
        assert_eq!(p.category, preset("discrete:6").unwrap());
    }

    #[test]
    fn product_cap() {
        let c = preset("group:s4").unwrap();
        assert!(product_category(&c, &c, 100).unwrap_err().is_size_cap());
    }

    #[test]
    fn pair_indexing_roundtrips() {
        let p = product_category(&preset("span").unwrap(), &preset("parallel_pair").unwrap(), 1000).unwrap();
        for o in p.category.objects() {
            let (i, j) = p.object_pair(o);
            assert_eq!(p.object(i, j), o);
        }
        for k in p.category.morphisms() {
            let (f, g) = p.morphism_pair(k);
            assert_eq!(p.morphism(f, g), k);
            assert_eq!(p.category.src(k), p.object(p.left.src(f), p.right.src(g)));
        }
    }

    #[test]
    fn components() {
        assert_eq!(connected_components(&preset("discrete:2").unwrap()).len(), 2);
        assert_eq!(connected_components(&preset("group:q8").unwrap()).len(), 1);
        assert_eq!(connected_components(&preset("span").unwrap()), vec![vec![0, 1, 2]]);
        assert!(connected_components(&preset("empty").unwrap()).is_empty());
    }

    #[test]
    fn full_subcategory_of_chain() {
        let (sub, kept) = full_subcategory(&preset("chain:3").unwrap(), &[0, 2]);
        assert_eq!(sub, preset("chain:2").unwrap());
        assert_eq!(kept.len(), 3);
    }
}
