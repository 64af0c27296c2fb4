use crate::config::Caps;
use crate::error::{Error, Result};
use crate::fincat::{product_category, FinCategory, Mor, Obj, ProductCategory};

/// A functor from a finite category to finite sets. The carrier of object
/// `o` is `0..carriers[o]`; `action[f][x]` is `F(f)(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunctor {
    domain: FinCategory,
    carriers: Vec<usize>,
    action: Vec<Vec<usize>>,
}

impl SetFunctor {
    /// Validates table shapes, identities and composition exhaustively.
    pub fn new(domain: FinCategory, carriers: Vec<usize>, action: Vec<Vec<usize>>) -> Result<Self> {
        if carriers.len() != domain.object_count() {
            return Err(Error::NotAFunctor(format!(
                "{} carriers for {} objects",
                carriers.len(),
                domain.object_count()
            )));
        }
        if action.len() != domain.morphism_count() {
            return Err(Error::NotAFunctor(format!(
                "{} action tables for {} morphisms",
                action.len(),
                domain.morphism_count()
            )));
        }
        for f in domain.morphisms() {
            let (s, d) = (domain.src(f), domain.dst(f));
            if action[f].len() != carriers[s] {
                return Err(Error::NotAFunctor(format!(
                    "table of morphism {f} has length {}, carrier of its source has {}",
                    action[f].len(),
                    carriers[s]
                )));
            }
            if let Some(&y) = action[f].iter().find(|&&y| y >= carriers[d]) {
                return Err(Error::NotAFunctor(format!(
                    "morphism {f} sends an element to {y}, outside the carrier of size {}",
                    carriers[d]
                )));
            }
        }
        for o in domain.objects() {
            let id = domain.identity(o);
            if action[id].iter().enumerate().any(|(x, &y)| x != y) {
                return Err(Error::NotAFunctor(format!("identity morphism {id} does not act trivially")));
            }
        }
        for g in domain.morphisms() {
            for f in domain.morphisms_into(domain.src(g)) {
                let gf = domain.compose(g, f).expect("composable");
                if (0..carriers[domain.src(f)]).any(|x| action[gf][x] != action[g][action[f][x]]) {
                    return Err(Error::NotAFunctor(format!(
                        "composition not preserved on pair (g={g}, f={f})"
                    )));
                }
            }
        }
        Ok(Self::new_unchecked(domain, carriers, action))
    }

    pub(crate) fn new_unchecked(domain: FinCategory, carriers: Vec<usize>, action: Vec<Vec<usize>>) -> Self {
        Self {
            domain,
            carriers,
            action,
        }
    }

    pub fn domain(&self) -> &FinCategory {
        &self.domain
    }

    pub fn carrier(&self, o: Obj) -> usize {
        self.carriers[o]
    }

    pub fn carriers(&self) -> &[usize] {
        &self.carriers
    }

    pub fn apply(&self, f: Mor, x: usize) -> usize {
        self.action[f][x]
    }

    pub fn table(&self, f: Mor) -> &[usize] {
        &self.action[f]
    }

    pub fn tables(&self) -> &[Vec<usize>] {
        &self.action
    }

    /// Pointwise disjoint union.
    pub fn coproduct(&self, other: &SetFunctor) -> Result<SetFunctor> {
        if self.domain != other.domain {
            return Err(Error::NotAFunctor("coproduct of functors on different domains".into()));
        }
        let carriers = self.carriers.iter().zip(&other.carriers).map(|(a, b)| a + b).collect();
        let action = self
            .domain
            .morphisms()
            .map(|f| {
                let shift = self.carriers[self.domain.dst(f)];
                let mut t = self.action[f].clone();
                t.extend(other.action[f].iter().map(|&y| y + shift));
                t
            })
            .collect();
        Ok(Self::new_unchecked(self.domain.clone(), carriers, action))
    }
}

/// A functor on `I × J`, indexed through [`ProductCategory`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiFunctor {
    product: ProductCategory,
    functor: SetFunctor,
}

impl BiFunctor {
    pub fn new(
        left: &FinCategory,
        right: &FinCategory,
        carriers: Vec<usize>,
        action: Vec<Vec<usize>>,
        caps: &Caps,
    ) -> Result<Self> {
        let product = product_category(left, right, caps.product_morphisms)?;
        let functor = SetFunctor::new(product.category.clone(), carriers, action)
            .map_err(|e| Error::InvalidBiFunctor(e.to_string()))?;
        Ok(Self { product, functor })
    }

    pub fn from_functor(product: ProductCategory, functor: SetFunctor) -> Result<Self> {
        if functor.domain() != &product.category {
            return Err(Error::InvalidBiFunctor("functor domain is not the product category".into()));
        }
        Ok(Self { product, functor })
    }

    pub fn left(&self) -> &FinCategory {
        &self.product.left
    }

    pub fn right(&self) -> &FinCategory {
        &self.product.right
    }

    pub fn product(&self) -> &ProductCategory {
        &self.product
    }

    pub fn functor(&self) -> &SetFunctor {
        &self.functor
    }

    pub fn carrier(&self, i: Obj, j: Obj) -> usize {
        self.functor.carrier(self.product.object(i, j))
    }

    /// `F(f, g)(x)`.
    pub fn apply(&self, f: Mor, g: Mor, x: usize) -> usize {
        self.functor.apply(self.product.morphism(f, g), x)
    }

    /// `F(−, j)` as a functor on `I`.
    pub fn left_slice(&self, j: Obj) -> SetFunctor {
        let (l, r) = (&self.product.left, &self.product.right);
        let id = r.identity(j);
        SetFunctor::new_unchecked(
            l.clone(),
            l.objects().map(|i| self.carrier(i, j)).collect(),
            l.morphisms()
                .map(|f| self.functor.table(self.product.morphism(f, id)).to_vec())
                .collect(),
        )
    }

    /// `F(i, −)` as a functor on `J`.
    pub fn right_slice(&self, i: Obj) -> SetFunctor {
        let (l, r) = (&self.product.left, &self.product.right);
        let id = l.identity(i);
        SetFunctor::new_unchecked(
            r.clone(),
            r.objects().map(|j| self.carrier(i, j)).collect(),
            r.morphisms()
                .map(|g| self.functor.table(self.product.morphism(id, g)).to_vec())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::preset;

    #[test]
    fn c2_swap_is_a_functor() {
        let c2 = preset("group:c2").unwrap();
        assert!(SetFunctor::new(c2.clone(), vec![2], vec![vec![0, 1], vec![1, 0]]).is_ok());
        let err = SetFunctor::new(c2, vec![2], vec![vec![1, 0], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, Error::NotAFunctor(_)));
    }

    #[test]
    fn broken_composition_names_pair() {
        let c3 = preset("group:c3").unwrap();
        // generator acts as a transposition, its square as the identity: not a C3 action
        let err = SetFunctor::new(c3, vec![2], vec![vec![0, 1], vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(err.to_string().contains("pair"), "{err}");
    }

    #[test]
    fn bifunctor_rejects_bad_tables() {
        let t = preset("terminal").unwrap();
        let c2 = preset("group:c2").unwrap();
        let err = BiFunctor::new(&t, &c2, vec![2], vec![vec![0, 1], vec![0, 0]], &Caps::default()).unwrap_err();
        assert!(matches!(err, Error::InvalidBiFunctor(_)));
    }
}
