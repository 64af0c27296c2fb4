use super::{FinCategory, Mor, Obj};
use crate::error::{Error, Result};

/// A functor from a finite shape into some target category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDiagram {
    shape: FinCategory,
    objects: Vec<Obj>,
    morphisms: Vec<Mor>,
}

impl FiniteDiagram {
    /// Checks that the assignment lands in `target` and is functorial.
    pub fn new(shape: FinCategory, target: &FinCategory, objects: Vec<Obj>, morphisms: Vec<Mor>) -> Result<Self> {
        if objects.len() != shape.object_count() || morphisms.len() != shape.morphism_count() {
            return Err(Error::InvalidDiagram(format!(
                "assignment sizes ({}, {}) do not match shape ({}, {})",
                objects.len(),
                morphisms.len(),
                shape.object_count(),
                shape.morphism_count()
            )));
        }
        for &o in &objects {
            if o >= target.object_count() {
                return Err(Error::InvalidDiagram(format!("object {o} not in target")));
            }
        }
        for (f, &df) in morphisms.iter().enumerate() {
            if df >= target.morphism_count() {
                return Err(Error::InvalidDiagram(format!("morphism {df} not in target")));
            }
            if target.src(df) != objects[shape.src(f)] || target.dst(df) != objects[shape.dst(f)] {
                return Err(Error::InvalidDiagram(format!(
                    "image of morphism {f} has the wrong source or target"
                )));
            }
        }
        for o in shape.objects() {
            if morphisms[shape.identity(o)] != target.identity(objects[o]) {
                return Err(Error::InvalidDiagram(format!("identity of object {o} not preserved")));
            }
        }
        for g in shape.morphisms() {
            for f in shape.morphisms_into(shape.src(g)) {
                let gf = shape.compose(g, f).expect("composable");
                if target.compose(morphisms[g], morphisms[f]) != Some(morphisms[gf]) {
                    return Err(Error::InvalidDiagram(format!(
                        "composition of pair (g={g}, f={f}) not preserved"
                    )));
                }
            }
        }
        Ok(Self {
            shape,
            objects,
            morphisms,
        })
    }

    pub fn shape(&self) -> &FinCategory {
        &self.shape
    }

    pub fn object(&self, x: Obj) -> Obj {
        self.objects[x]
    }

    pub fn morphism(&self, f: Mor) -> Mor {
        self.morphisms[f]
    }

    pub fn object_assignment(&self) -> &[Obj] {
        &self.objects
    }

    pub fn morphism_assignment(&self) -> &[Mor] {
        &self.morphisms
    }
}
