use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{colimit, limit, BiFunctor, Colimit, SetFunctor};
use crate::config::Caps;
use crate::error::{Error, Result};

/// The canonical map `colim_J lim_I F → lim_I colim_J F`. The limit over `I`
/// commutes with the colimit over `J` for this `F` iff the map is bijective.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub colim_lim_size: usize,
    pub lim_colim_size: usize,
    pub map_table: Vec<usize>,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
    /// `j<object>:(x_0,…)`, a representative compatible family and the
    /// `J`-object it lives over.
    pub colim_lim_elements: Vec<String>,
    /// `(x_0@j,…)`, one colimit class per `I`-object, named by its least
    /// member.
    pub lim_colim_elements: Vec<String>,
}

pub fn comparison_report(b: &BiFunctor, caps: &Caps) -> Result<ComparisonReport> {
    let (li, rj) = (b.left(), b.right());

    // lim_I F(−, j) for each j, with the induced J-action.
    let lims: Vec<Vec<Vec<usize>>> = rj
        .objects()
        .map(|j| limit(&b.left_slice(j), caps.limit_elements))
        .collect::<Result<_>>()?;
    let index: Vec<HashMap<&[usize], usize>> = lims
        .iter()
        .map(|fams| fams.iter().enumerate().map(|(k, v)| (v.as_slice(), k)).collect())
        .collect();
    let mut action = Vec::with_capacity(rj.morphism_count());
    for g in rj.morphisms() {
        let (s, d) = (rj.src(g), rj.dst(g));
        let mut table = Vec::with_capacity(lims[s].len());
        for fam in &lims[s] {
            let image: Vec<usize> = li.objects().map(|i| b.apply(li.identity(i), g, fam[i])).collect();
            let k = *index[d].get(image.as_slice()).ok_or_else(|| {
                Error::InvalidBiFunctor(format!("J-action of morphism {g} does not preserve compatible families"))
            })?;
            table.push(k);
        }
        action.push(table);
    }
    let lim_functor = SetFunctor::new_unchecked(rj.clone(), lims.iter().map(Vec::len).collect(), action);
    let colim_lim = colimit(&lim_functor);

    // colim_J F(i, −) for each i, with the induced I-action.
    let colims: Vec<Colimit> = li.objects().map(|i| colimit(&b.right_slice(i))).collect();
    let mut action = Vec::with_capacity(li.morphism_count());
    for f in li.morphisms() {
        let (s, d) = (li.src(f), li.dst(f));
        let mut table = vec![usize::MAX; colims[s].len()];
        for j in rj.objects() {
            for x in 0..b.carrier(s, j) {
                let from = colims[s].class(j, x);
                let to = colims[d].class(j, b.apply(f, rj.identity(j), x));
                if table[from] == usize::MAX {
                    table[from] = to;
                } else if table[from] != to {
                    return Err(Error::InvalidBiFunctor(format!(
                        "I-action of morphism {f} is not well defined on colimit classes"
                    )));
                }
            }
        }
        action.push(table);
    }
    let colim_functor = SetFunctor::new_unchecked(li.clone(), colims.iter().map(Colimit::len).collect(), action);
    let lim_colim = limit(&colim_functor, caps.limit_elements)?;
    let lim_colim_index: HashMap<&[usize], usize> =
        lim_colim.iter().enumerate().map(|(k, v)| (v.as_slice(), k)).collect();

    // [j, (x_i)] ↦ ([x_i])_i
    let mut map_table = Vec::with_capacity(colim_lim.len());
    let mut colim_lim_elements = Vec::with_capacity(colim_lim.len());
    for &(j, k) in &colim_lim.representatives {
        let fam = &lims[j][k];
        let classes: Vec<usize> = li.objects().map(|i| colims[i].class(j, fam[i])).collect();
        let target = *lim_colim_index
            .get(classes.as_slice())
            .expect("image of a compatible family is compatible");
        map_table.push(target);
        colim_lim_elements.push(format!("j{j}:({})", join(fam.iter().map(usize::to_string))));
    }
    let lim_colim_elements = lim_colim
        .iter()
        .map(|classes| {
            let parts = classes.iter().enumerate().map(|(i, &c)| {
                let (j, x) = colims[i].representatives[c];
                format!("{x}@j{j}")
            });
            format!("({})", join(parts))
        })
        .collect();

    let mut hit = vec![false; lim_colim.len()];
    let mut injective = true;
    for &t in &map_table {
        injective &= !std::mem::replace(&mut hit[t], true);
    }
    let surjective = hit.iter().all(|&h| h);
    Ok(ComparisonReport {
        colim_lim_size: colim_lim.len(),
        lim_colim_size: lim_colim.len(),
        map_table,
        injective,
        surjective,
        bijective: injective && surjective,
        colim_lim_elements,
        lim_colim_elements,
    })
}

fn join(parts: impl Iterator<Item = String>) -> String {
    parts.collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::preset;
    use crate::groups::{coset_action, cyclic, direct_product, Subgroup};

    fn coset_bifunctor(g: usize, h: usize, s: &[usize]) -> BiFunctor {
        let p = direct_product(&cyclic(g), &cyclic(h));
        let s = Subgroup::new(&p.group, s.iter().copied()).unwrap();
        let ca = coset_action(&p.group, &s).unwrap();
        BiFunctor::new(
            &p.left.as_category(),
            &p.right.as_category(),
            vec![ca.action.degree],
            ca.action.perms,
            &Caps::default(),
        )
        .unwrap()
    }

    #[test]
    fn diagonal_coset_action_of_c2_squared() {
        let r = comparison_report(&coset_bifunctor(2, 2, &[0, 3]), &Caps::default()).unwrap();
        assert_eq!((r.colim_lim_size, r.lim_colim_size), (0, 1));
        assert!(r.injective && !r.surjective && !r.bijective);
    }

    #[test]
    fn regular_action_of_c2_times_c3() {
        let r = comparison_report(&coset_bifunctor(2, 3, &[0]), &Caps::default()).unwrap();
        assert_eq!((r.colim_lim_size, r.lim_colim_size), (0, 0));
        assert!(r.bijective);
    }

    #[test]
    fn terminal_limit_shape_always_commutes() {
        let t = preset("terminal").unwrap();
        let span = preset("span").unwrap();
        let b = BiFunctor::new(
            &t,
            &span,
            vec![3, 2, 1],
            vec![vec![0, 1, 2], vec![0, 1], vec![0], vec![0, 1, 1], vec![0, 0, 0]],
            &Caps::default(),
        )
        .unwrap();
        let r = comparison_report(&b, &Caps::default()).unwrap();
        assert!(r.bijective);
        assert_eq!(r.colim_lim_size, 1);
    }

    #[test]
    fn element_decodings() {
        let t = preset("terminal").unwrap();
        let d2 = preset("discrete:2").unwrap();
        let b = BiFunctor::new(&t, &d2, vec![1, 2], vec![vec![0], vec![0, 1]], &Caps::default()).unwrap();
        let r = comparison_report(&b, &Caps::default()).unwrap();
        assert_eq!(r.colim_lim_elements, vec!["j0:(0)", "j1:(0)", "j1:(1)"]);
        assert_eq!(r.lim_colim_elements, vec!["(0@j0)", "(0@j1)", "(1@j1)"]);
        assert_eq!(r.map_table, vec![0, 1, 2]);
    }
}
