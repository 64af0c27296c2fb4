//! Finite categories given by explicit composition tables, and the
//! structural properties (connectedness, cocones, filteredness, siftedness,
//! conicality) that govern which limits commute with which colimits.

mod construct;
mod diagram;
pub mod presets;
mod props;

pub use construct::{connected_components, full_subcategory, opposite_category, product_category, ProductCategory};
pub use diagram::FiniteDiagram;
pub use presets::{preset, Preset, SAMPLE_PRESETS};
pub use props::{
    classify, cocone_exists, conical_witness, find_uncovered_diagram, find_uncovered_span, has_parallel_pair_cocones,
    has_span_cocones, is_conical, is_filtered, is_pseudo_filtered, is_sifted, ConeWitness,
    CoconeWitness, PropertyFlags,
};

use crate::error::{Error, Result};

pub type Obj = usize;
pub type Mor = usize;

/// Raw input for [`FinCategory::build`]: morphism `k` is `(k, src, dst)`,
/// `compose` lists `(g, f, g∘f)` triples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawCategory {
    pub objects: usize,
    pub morphisms: Vec<(Mor, Obj, Obj)>,
    pub identities: Vec<Mor>,
    pub compose: Vec<(Mor, Mor, Mor)>,
}

/// A validated finite category.
///
/// Composition is stored as a dense table indexed `g * m + f`, holding
/// `Some(g∘f)` exactly when `dst(f) == src(g)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinCategory {
    objects: usize,
    src: Vec<Obj>,
    dst: Vec<Obj>,
    identities: Vec<Mor>,
    compose: Vec<Option<Mor>>,
    hom: Vec<Vec<Mor>>,
}

impl FinCategory {
    /// Validates the four category invariants exhaustively.
    pub fn build(raw: &RawCategory) -> Result<Self> {
        let n = raw.objects;
        let m = raw.morphisms.len();
        let mut src = vec![usize::MAX; m];
        let mut dst = vec![usize::MAX; m];
        for &(id, s, d) in &raw.morphisms {
            check_index("morphism", id, m)?;
            check_index("object", s, n)?;
            check_index("object", d, n)?;
            if src[id] != usize::MAX {
                return Err(Error::MalformedCategory(format!("morphism {id} listed twice")));
            }
            src[id] = s;
            dst[id] = d;
        }
        if raw.identities.len() != n {
            return Err(Error::MalformedCategory(format!(
                "{} identities given for {n} objects",
                raw.identities.len()
            )));
        }
        for (o, &id) in raw.identities.iter().enumerate() {
            check_index("morphism", id, m)?;
            if src[id] != o || dst[id] != o {
                return Err(Error::MalformedCategory(format!(
                    "identity {id} of object {o} is not an endomorphism of {o}"
                )));
            }
        }
        let mut compose = vec![None; m * m];
        for &(g, f, gf) in &raw.compose {
            check_index("morphism", g, m)?;
            check_index("morphism", f, m)?;
            check_index("morphism", gf, m)?;
            if dst[f] != src[g] {
                return Err(Error::BadComposite {
                    g,
                    f,
                    reason: format!("target of f is {} but source of g is {}", dst[f], src[g]),
                });
            }
            if src[gf] != src[f] || dst[gf] != dst[g] {
                return Err(Error::BadComposite {
                    g,
                    f,
                    reason: format!("composite {gf} has the wrong source or target"),
                });
            }
            match compose[g * m + f] {
                Some(prev) if prev != gf => {
                    return Err(Error::BadComposite {
                        g,
                        f,
                        reason: format!("listed twice with composites {prev} and {gf}"),
                    })
                }
                _ => compose[g * m + f] = Some(gf),
            }
        }
        for f in 0..m {
            for g in 0..m {
                if dst[f] == src[g] && compose[g * m + f].is_none() {
                    return Err(Error::CompositionGap { g, f });
                }
            }
        }
        let cat = Self::from_parts(n, src, dst, raw.identities.clone(), compose);
        cat.check_laws()?;
        Ok(cat)
    }

    /// Assembles a category from tables already known to be lawful.
    pub(crate) fn from_parts(
        objects: usize,
        src: Vec<Obj>,
        dst: Vec<Obj>,
        identities: Vec<Mor>,
        compose: Vec<Option<Mor>>,
    ) -> Self {
        let mut hom = vec![Vec::new(); objects * objects];
        for f in 0..src.len() {
            hom[src[f] * objects + dst[f]].push(f);
        }
        Self {
            objects,
            src,
            dst,
            identities,
            compose,
            hom,
        }
    }

    fn check_laws(&self) -> Result<()> {
        for f in self.morphisms() {
            let left = self.identity(self.dst(f));
            let right = self.identity(self.src(f));
            if self.compose(left, f) != Some(f) {
                return Err(Error::IdentityViolation {
                    morphism: f,
                    identity: left,
                    side: "left",
                });
            }
            if self.compose(f, right) != Some(f) {
                return Err(Error::IdentityViolation {
                    morphism: f,
                    identity: right,
                    side: "right",
                });
            }
        }
        for f in self.morphisms() {
            for g in self.morphisms_from(self.dst(f)) {
                let gf = self.compose(g, f).expect("total on composable pairs");
                for h in self.morphisms_from(self.dst(g)) {
                    let hg = self.compose(h, g).expect("total on composable pairs");
                    if self.compose(h, gf) != self.compose(hg, f) {
                        return Err(Error::AssociativityViolation { h, g, f });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.src.len()
    }

    pub fn objects(&self) -> std::ops::Range<Obj> {
        0..self.objects
    }

    pub fn morphisms(&self) -> std::ops::Range<Mor> {
        0..self.src.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects == 0
    }

    pub fn src(&self, f: Mor) -> Obj {
        self.src[f]
    }

    pub fn dst(&self, f: Mor) -> Obj {
        self.dst[f]
    }

    pub fn identity(&self, o: Obj) -> Mor {
        self.identities[o]
    }

    pub fn identities(&self) -> &[Mor] {
        &self.identities
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identities[self.src[f]] == f
    }

    /// `g ∘ f`, or `None` when `dst(f) != src(g)`.
    pub fn compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        self.compose[g * self.src.len() + f]
    }

    /// Morphisms `a → b`, in index order.
    pub fn hom(&self, a: Obj, b: Obj) -> &[Mor] {
        &self.hom[a * self.objects + b]
    }

    pub fn morphisms_from(&self, a: Obj) -> impl Iterator<Item = Mor> + '_ {
        self.objects().flat_map(move |b| self.hom(a, b).iter().copied())
    }

    pub fn morphisms_into(&self, b: Obj) -> impl Iterator<Item = Mor> + '_ {
        self.objects().flat_map(move |a| self.hom(a, b).iter().copied())
    }

    /// All `(g, f, g∘f)` triples in `(f, g)` order, the inverse of [`FinCategory::build`].
    pub fn to_raw(&self) -> RawCategory {
        let mut compose = Vec::new();
        for g in self.morphisms() {
            for f in self.morphisms() {
                if let Some(gf) = self.compose(g, f) {
                    compose.push((g, f, gf));
                }
            }
        }
        RawCategory {
            objects: self.objects,
            morphisms: self.morphisms().map(|f| (f, self.src[f], self.dst[f])).collect(),
            identities: self.identities.clone(),
            compose,
        }
    }
}

fn check_index(what: &'static str, index: usize, bound: usize) -> Result<()> {
    if index < bound {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { what, index, bound })
    }
}
