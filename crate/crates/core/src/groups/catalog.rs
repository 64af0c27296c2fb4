use super::{are_isomorphic, normal_subgroups, quotient_of, subgroups, FinGroup, Subgroup};
use crate::config::Caps;
use crate::error::Result;

/// A nontrivial quotient `G/N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientEntry {
    pub group: FinGroup,
    pub normal: Subgroup,
}

/// A subquotient `K/L` with `L ⊴ K ≤ H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubquotientEntry {
    pub group: FinGroup,
    pub k: Subgroup,
    pub l: Subgroup,
}

/// Keeps the first entry of each isomorphism class, after sorting by
/// `(order, table)` and then by provenance.
fn dedup_by_iso<T>(mut items: Vec<T>, group: impl Fn(&T) -> &FinGroup, caps: &Caps) -> Result<Vec<T>> {
    items.sort_by(|a, b| {
        let (ga, gb) = (group(a), group(b));
        ga.order().cmp(&gb.order()).then_with(|| ga.table().cmp(gb.table()))
    });
    let mut kept: Vec<T> = Vec::new();
    for item in items {
        let mut duplicate = false;
        for k in &kept {
            if are_isomorphic(group(k), group(&item), caps)?.is_some() {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            kept.push(item);
        }
    }
    Ok(kept)
}

/// Quotients of order > 1, one per isomorphism class.
pub fn nontrivial_quotients_up_to_iso(g: &FinGroup, caps: &Caps) -> Result<Vec<QuotientEntry>> {
    let full = Subgroup::full(g);
    let mut entries = Vec::new();
    // normal subgroups come sorted, so ties in the stable sort keep the
    // smallest N
    for n in normal_subgroups(g, caps)? {
        if n.order() == g.order() {
            continue;
        }
        let q = quotient_of(g, &full, &n)?;
        entries.push(QuotientEntry { group: q.group, normal: n });
    }
    dedup_by_iso(entries, |e| &e.group, caps)
}

/// Every `K/L` with `L ⊴ K ≤ H` (the trivial group included), one per
/// isomorphism class.
pub fn subquotient_catalog(h: &FinGroup, caps: &Caps) -> Result<Vec<SubquotientEntry>> {
    let subs = subgroups(h, caps)?;
    let mut entries = Vec::new();
    for k in &subs {
        for l in subs.iter().filter(|l| l.is_subset_of(k)) {
            if !l.is_normal_in(h, k) {
                continue;
            }
            let q = quotient_of(h, k, l)?;
            entries.push(SubquotientEntry {
                group: q.group,
                k: k.clone(),
                l: l.clone(),
            });
        }
    }
    dedup_by_iso(entries, |e| &e.group, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, group_preset};

    fn caps() -> Caps {
        Caps::default()
    }

    fn orders(gs: &[FinGroup]) -> Vec<usize> {
        gs.iter().map(FinGroup::order).collect()
    }

    #[test]
    fn c2_has_one_nontrivial_quotient() {
        let qs = nontrivial_quotients_up_to_iso(&cyclic(2), &caps()).unwrap();
        assert_eq!(qs.len(), 1);
        assert_eq!(qs[0].group.order(), 2);
        assert_eq!(qs[0].normal.order(), 1);
    }

    #[test]
    fn s3_subquotients() {
        let cat = subquotient_catalog(&group_preset("s3").unwrap(), &caps()).unwrap();
        let gs: Vec<FinGroup> = cat.into_iter().map(|e| e.group).collect();
        assert_eq!(orders(&gs), vec![1, 2, 3, 6]);
    }

    #[test]
    fn trivial_subquotients() {
        let cat = subquotient_catalog(&cyclic(1), &caps()).unwrap();
        assert_eq!(cat.len(), 1);
        assert_eq!(cat[0].group.order(), 1);
    }

    #[test]
    fn s4_quotients() {
        // S4 / A4 = C2, S4 / V4 = S3, S4 / 1 = S4
        let qs = nontrivial_quotients_up_to_iso(&group_preset("s4").unwrap(), &caps()).unwrap();
        let gs: Vec<FinGroup> = qs.into_iter().map(|e| e.group).collect();
        assert_eq!(orders(&gs), vec![2, 6, 24]);
    }

    #[test]
    fn klein4_subquotients_distinguish_c4() {
        let cat = subquotient_catalog(&group_preset("klein4").unwrap(), &caps()).unwrap();
        let gs: Vec<FinGroup> = cat.into_iter().map(|e| e.group).collect();
        assert_eq!(orders(&gs), vec![1, 2, 4]);
        assert!(are_isomorphic(&gs[2], &cyclic(4), &caps()).unwrap().is_none());
    }
}
