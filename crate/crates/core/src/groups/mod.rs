//! Finite groups as Cayley tables: presets, subgroups, quotients,
//! isomorphism, Goursat decomposition and coset actions.

mod action;
mod catalog;
mod goursat;
mod iso;
mod subgroup;

pub use action::{coset_action, CosetAction, GroupAction};
pub use catalog::{nontrivial_quotients_up_to_iso, subquotient_catalog, QuotientEntry, SubquotientEntry};
pub use goursat::{goursat_decompose, goursat_reconstruct, GoursatSummary, GoursatTriple};
pub use iso::{are_isomorphic, Isomorphism};
pub use subgroup::{normal_subgroups, quotient_group, quotient_of, subgroup_as_group, subgroups, Quotient, Subgroup};

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::fincat::FinCategory;

pub type Elem = usize;

/// A finite group given by its Cayley table; `mul(a, b)` is `a·b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinGroup {
    order: usize,
    table: Vec<Elem>,
    identity: Elem,
    inverse: Vec<Elem>,
    labels: Option<Vec<String>>,
}

impl FinGroup {
    /// Validates a Cayley table: Latin square, identity, associativity.
    pub fn from_table(rows: &[Vec<Elem>], labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup {
                axiom: "nonempty",
                witness: "table has no rows".into(),
            });
        }
        if let Some(labels) = &labels {
            if labels.len() != n {
                return Err(Error::NotAGroup {
                    axiom: "labels",
                    witness: format!("{} labels for {n} elements", labels.len()),
                });
            }
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup {
                    axiom: "square table",
                    witness: format!("row {a} has {} entries, expected {n}", row.len()),
                });
            }
            for (b, &x) in row.iter().enumerate() {
                if x >= n {
                    return Err(Error::NotAGroup {
                        axiom: "closure",
                        witness: format!("{a}·{b} = {x} is out of range"),
                    });
                }
            }
            table.extend_from_slice(row);
        }
        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                let r = table[a * n + b];
                let c = table[b * n + a];
                if std::mem::replace(&mut row_seen[r], true) {
                    return Err(Error::NotAGroup {
                        axiom: "latin square",
                        witness: format!("row {a} repeats {r}"),
                    });
                }
                if std::mem::replace(&mut col_seen[c], true) {
                    return Err(Error::NotAGroup {
                        axiom: "latin square",
                        witness: format!("column {a} repeats {c}"),
                    });
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .ok_or_else(|| Error::NotAGroup {
                axiom: "identity",
                witness: "no two-sided identity element".into(),
            })?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::NotAGroup {
                            axiom: "associativity",
                            witness: format!("({a}·{b})·{c} != {a}·({b}·{c})"),
                        });
                    }
                }
            }
        }
        Ok(Self::from_parts(n, table, identity, labels))
    }

    fn from_parts(order: usize, table: Vec<Elem>, identity: Elem, labels: Option<Vec<String>>) -> Self {
        let mut inverse = vec![0; order];
        for a in 0..order {
            inverse[a] = (0..order)
                .find(|&b| table[a * order + b] == identity)
                .expect("latin square has inverses");
        }
        Self {
            order,
            table,
            identity,
            inverse,
            labels,
        }
    }

    /// Builds the group generated by `gens` under `mul`; elements are sorted
    /// with the identity first.
    pub(crate) fn from_generators<T: Ord + Clone + std::hash::Hash>(
        identity: T,
        gens: &[T],
        mul: impl Fn(&T, &T) -> T,
    ) -> Self {
        let mut elems = vec![identity.clone()];
        let mut seen: HashSet<T> = HashSet::from([identity.clone()]);
        let mut next = 0;
        while next < elems.len() {
            let a = elems[next].clone();
            next += 1;
            for g in gens {
                let b = mul(g, &a);
                if seen.insert(b.clone()) {
                    elems.push(b);
                }
            }
        }
        elems[1..].sort();
        let index: HashMap<&T, Elem> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                table.push(index[&mul(a, b)]);
            }
        }
        Self::from_parts(n, table, 0, None)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.table.chunks(self.order).map(<[Elem]>::to_vec).collect()
    }

    /// Flat row-major table, used as a canonical sort key.
    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(a, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center_size(&self) -> usize {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .count()
    }

    /// One object; morphism `g` composes as `compose(g, f) = g·f`.
    pub fn as_category(&self) -> FinCategory {
        let n = self.order;
        FinCategory::from_parts(
            1,
            vec![0; n],
            vec![0; n],
            vec![self.identity],
            self.table.iter().map(|&x| Some(x)).collect(),
        )
    }
}

/// `G × H` with element `(g, h)` at index `g * |H| + h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectProduct {
    pub left: FinGroup,
    pub right: FinGroup,
    pub group: FinGroup,
}

impl DirectProduct {
    pub fn pair(&self, g: Elem, h: Elem) -> Elem {
        g * self.right.order() + h
    }

    pub fn left_of(&self, p: Elem) -> Elem {
        p / self.right.order()
    }

    pub fn right_of(&self, p: Elem) -> Elem {
        p % self.right.order()
    }
}

pub fn direct_product(left: &FinGroup, right: &FinGroup) -> DirectProduct {
    let (n, m) = (left.order(), right.order());
    let mut table = Vec::with_capacity(n * m * n * m);
    for g1 in 0..n {
        for h1 in 0..m {
            for g2 in 0..n {
                for h2 in 0..m {
                    table.push(left.mul(g1, g2) * m + right.mul(h1, h2));
                }
            }
        }
    }
    let labels = match (left.labels(), right.labels()) {
        (Some(a), Some(b)) => Some(
            a.iter()
                .flat_map(|x| b.iter().map(move |y| format!("({x},{y})")))
                .collect(),
        ),
        _ => None,
    };
    let identity = left.identity() * m + right.identity();
    DirectProduct {
        left: left.clone(),
        right: right.clone(),
        group: FinGroup::from_parts(n * m, table, identity, labels),
    }
}

pub fn cyclic(n: usize) -> FinGroup {
    let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
    FinGroup::from_parts(n, table, 0, None)
}

type Perm = Vec<u8>;

fn perm_mul(p: &Perm, q: &Perm) -> Perm {
    q.iter().map(|&x| p[x as usize]).collect()
}

fn perm_group(degree: u8, gens: &[Perm]) -> FinGroup {
    FinGroup::from_generators((0..degree).collect::<Perm>(), gens, perm_mul)
}

fn dihedral(n: u8) -> FinGroup {
    let rot = (0..n).map(|x| (x + 1) % n).collect();
    let refl = (0..n).map(|x| (n - x) % n).collect();
    perm_group(n, &[rot, refl])
}

fn quaternion() -> FinGroup {
    type Q = [i8; 4];
    fn ham(a: &Q, b: &Q) -> Q {
        [
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        ]
    }
    FinGroup::from_generators([1, 0, 0, 0], &[[0, 1, 0, 0], [0, 0, 1, 0]], ham)
}

/// Names accepted by [`group_preset`] apart from `c<n>` and `prod:<a>:<b>`.
pub const NAMED_PRESETS: &[&str] = &["klein4", "s3", "s4", "a4", "d4", "d5", "q8"];

/// The preset list used by catalog sweeps, trivial group excluded.
pub const CATALOG: &[&str] = &[
    "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c12", "klein4", "s3", "s4", "a4", "d4", "d5", "q8",
];

/// Every non-product group preset: `c1` to `c24`, then the named ones.
pub fn preset_names() -> Vec<String> {
    (1..=24)
        .map(|n| format!("c{n}"))
        .chain(NAMED_PRESETS.iter().map(|s| s.to_string()))
        .collect()
}

/// `c<n>` for `1 <= n <= 24` (`trivial` is `c1`), the named presets, and
/// `prod:<a>:<b>`.
pub fn group_preset(name: &str) -> Result<FinGroup> {
    if let Some(rest) = name.strip_prefix("prod:") {
        let (a, b) = split_product(rest).ok_or_else(|| Error::UnknownPreset(name.to_string()))?;
        return Ok(direct_product(&group_preset(a)?, &group_preset(b)?).group);
    }
    if let Some(n) = name.strip_prefix('c').and_then(|s| s.parse::<usize>().ok()) {
        return if (1..=24).contains(&n) {
            Ok(cyclic(n))
        } else {
            Err(Error::BadParams(format!("cyclic order {n} outside 1..=24")))
        };
    }
    Ok(match name {
        "trivial" => cyclic(1),
        "klein4" => direct_product(&cyclic(2), &cyclic(2)).group,
        "s3" => perm_group(3, &[vec![1, 0, 2], vec![1, 2, 0]]),
        "s4" => perm_group(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]]),
        "a4" => perm_group(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]),
        "d4" => dihedral(4),
        "d5" => dihedral(5),
        "q8" => quaternion(),
        _ => return Err(Error::UnknownPreset(name.to_string())),
    })
}

/// Splits `a:b` where `a` may itself be `prod:x:y`.
fn split_product(s: &str) -> Option<(&str, &str)> {
    let parts: Vec<&str> = s.split(':').collect();
    // prod:a:b has one more token than its operands need
    fn width(tokens: &[&str]) -> Option<usize> {
        match tokens.first()? {
            &"prod" => {
                let a = width(&tokens[1..])?;
                let b = width(&tokens[1 + a..])?;
                Some(1 + a + b)
            }
            _ => Some(1),
        }
    }
    let a = width(&parts)?;
    if a >= parts.len() || a + width(&parts[a..])? != parts.len() {
        return None;
    }
    let split = parts[..a].iter().map(|t| t.len() + 1).sum::<usize>() - 1;
    Some((&s[..split], &s[split + 1..]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_orders() {
        let expected = [
            ("c1", 1),
            ("c2", 2),
            ("c12", 12),
            ("c24", 24),
            ("klein4", 4),
            ("s3", 6),
            ("s4", 24),
            ("a4", 12),
            ("d4", 8),
            ("d5", 10),
            ("q8", 8),
            ("prod:c2:c3", 6),
            ("prod:prod:c2:c2:s3", 24),
            ("prod:c2:prod:c3:c5", 30),
        ];
        for (name, order) in expected {
            let g = group_preset(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            // every preset passes full validation
            FinGroup::from_table(&g.rows(), None).unwrap();
        }
    }

    #[test]
    fn unknown_and_out_of_range() {
        assert!(matches!(group_preset("c25"), Err(Error::BadParams(_))));
        assert!(matches!(group_preset("nope"), Err(Error::UnknownPreset(_))));
        assert!(matches!(group_preset("prod:c2"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn non_latin_square_rejected() {
        let err = FinGroup::from_table(&[vec![0, 1], vec![1, 1]], None).unwrap_err();
        assert!(matches!(err, Error::NotAGroup { axiom: "latin square", .. }));
    }

    #[test]
    fn non_associative_latin_square_rejected() {
        // a loop of order 5 that is not a group
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FinGroup::from_table(&rows, None).unwrap_err();
        assert!(matches!(err, Error::NotAGroup { axiom: "associativity", .. }));
    }

    #[test]
    fn element_orders_of_q8() {
        let q8 = group_preset("q8").unwrap();
        let mut orders: Vec<usize> = q8.elements().map(|a| q8.element_order(a)).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert!(!q8.is_abelian());
        assert_eq!(q8.center_size(), 2);
    }

    #[test]
    fn product_projections() {
        let p = direct_product(&cyclic(2), &cyclic(3));
        for g in 0..2 {
            for h in 0..3 {
                let x = p.pair(g, h);
                assert_eq!((p.left_of(x), p.right_of(x)), (g, h));
            }
        }
    }

    #[test]
    fn group_category_is_lawful() {
        let c = group_preset("d4").unwrap().as_category();
        assert_eq!(FinCategory::build(&c.to_raw()).unwrap(), c);
    }
}
