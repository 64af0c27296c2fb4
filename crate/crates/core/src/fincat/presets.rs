//! Named small categories.

use std::fmt;
use std::str::FromStr;

use super::{FinCategory, Mor, Obj, RawCategory};
use crate::error::{Error, Result};
use crate::groups::group_preset;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Preset {
    Terminal,
    Empty,
    Discrete(usize),
    /// The poset `0 < 1 < … < n-1`.
    Chain(usize),
    /// `1 ← 0 → 2`, legs 3 and 4.
    Span,
    /// `1 → 0 ← 2`, legs 3 and 4; exactly the opposite of [`Preset::Span`].
    Cospan,
    /// Two morphisms 2, 3 from object 0 to object 1.
    ParallelPair,
    /// The monoid `{1, e}` with `e∘e = e`.
    Idempotent,
    /// A group preset name, e.g. `c2` or `prod:c2:c3`.
    Group(String),
    /// Objects `0..n`, `k` morphisms `a → b` for each `a < b` labelled `0..k`,
    /// composition adds labels mod `k`. A finite truncation of an infinite
    /// category: spans landing on the last object lose their cocones.
    Jk { k: usize, n: usize },
}

impl Preset {
    pub fn build(&self) -> Result<FinCategory> {
        match self {
            Preset::Terminal => Ok(discrete(1)),
            Preset::Empty => Ok(discrete(0)),
            Preset::Discrete(n) => Ok(discrete(*n)),
            Preset::Chain(n) => Ok(chain(*n)),
            Preset::Span => Ok(span(false)),
            Preset::Cospan => Ok(span(true)),
            Preset::ParallelPair => Ok(parallel_pair()),
            Preset::Idempotent => Ok(idempotent()),
            Preset::Group(name) => Ok(group_preset(name)?.as_category()),
            Preset::Jk { k, n } => jk(*k, *n),
        }
    }

    /// True for presets that truncate an infinite category.
    pub fn is_truncation(&self) -> bool {
        matches!(self, Preset::Jk { .. })
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::BadParams(format!("`{t}` is not a natural number in `{s}`")))
        };
        let parts: Vec<&str> = s.split(':').collect();
        Ok(match parts.as_slice() {
            ["terminal"] => Preset::Terminal,
            ["empty"] => Preset::Empty,
            ["discrete", n] => Preset::Discrete(num(n)?),
            ["chain", n] => Preset::Chain(num(n)?),
            ["span"] => Preset::Span,
            ["cospan"] => Preset::Cospan,
            ["parallel_pair"] => Preset::ParallelPair,
            ["idempotent"] => Preset::Idempotent,
            ["group", rest @ ..] if !rest.is_empty() => Preset::Group(rest.join(":")),
            ["jk", k, n] => {
                let k = num(k)?;
                if k < 2 {
                    return Err(Error::BadParams(format!("jk needs k >= 2, got {k}")));
                }
                Preset::Jk { k, n: num(n)? }
            }
            _ => return Err(Error::UnknownPreset(s.to_string())),
        })
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Terminal => f.write_str("terminal"),
            Preset::Empty => f.write_str("empty"),
            Preset::Discrete(n) => write!(f, "discrete:{n}"),
            Preset::Chain(n) => write!(f, "chain:{n}"),
            Preset::Span => f.write_str("span"),
            Preset::Cospan => f.write_str("cospan"),
            Preset::ParallelPair => f.write_str("parallel_pair"),
            Preset::Idempotent => f.write_str("idempotent"),
            Preset::Group(name) => write!(f, "group:{name}"),
            Preset::Jk { k, n } => write!(f, "jk:{k}:{n}"),
        }
    }
}

/// One instance of every preset family, plus a few extra sizes.
pub const SAMPLE_PRESETS: &[&str] = &[
    "terminal",
    "empty",
    "discrete:1",
    "discrete:3",
    "chain:1",
    "chain:2",
    "chain:4",
    "span",
    "cospan",
    "parallel_pair",
    "idempotent",
    "group:c1",
    "group:c2",
    "group:s3",
    "group:q8",
    "group:prod:c2:c3",
    "jk:2:1",
    "jk:2:3",
    "jk:3:4",
];

/// Parses and builds a preset string.
pub fn preset(name: &str) -> Result<FinCategory> {
    name.parse::<Preset>()?.build()
}

/// Assembles a category whose first `objects` morphisms are the identities
/// and whose composition is given by `comp`, then validates it.
fn assemble(objects: usize, extra: &[(Obj, Obj)], comp: impl Fn(Mor, Mor) -> Mor) -> FinCategory {
    let mut morphisms: Vec<(Mor, Obj, Obj)> = (0..objects).map(|o| (o, o, o)).collect();
    for (k, &(s, d)) in extra.iter().enumerate() {
        morphisms.push((objects + k, s, d));
    }
    let mut compose = Vec::new();
    for &(g, gs, _) in &morphisms {
        for &(f, _, fd) in &morphisms {
            if fd == gs {
                let gf = if g < objects {
                    f
                } else if f < objects {
                    g
                } else {
                    comp(g, f)
                };
                compose.push((g, f, gf));
            }
        }
    }
    let raw = RawCategory {
        objects,
        morphisms,
        identities: (0..objects).collect(),
        compose,
    };
    FinCategory::build(&raw).expect("preset tables are lawful")
}

fn discrete(n: usize) -> FinCategory {
    assemble(n, &[], |_, _| unreachable!("no composable non-identities"))
}

fn chain(n: usize) -> FinCategory {
    let mut extra = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            extra.push((a, b));
        }
    }
    let lookup = extra.clone();
    assemble(n, &extra, move |g, f| {
        let (a, _) = lookup[f - n];
        let (_, c) = lookup[g - n];
        n + lookup.iter().position(|&p| p == (a, c)).expect("chain is transitive")
    })
}

fn span(co: bool) -> FinCategory {
    let legs = if co { [(1, 0), (2, 0)] } else { [(0, 1), (0, 2)] };
    assemble(3, &legs, |_, _| unreachable!("legs do not compose"))
}

fn parallel_pair() -> FinCategory {
    assemble(2, &[(0, 1), (0, 1)], |_, _| unreachable!("parallel morphisms do not compose"))
}

fn idempotent() -> FinCategory {
    assemble(1, &[(0, 0)], |_, _| 1)
}

fn jk(k: usize, n: usize) -> Result<FinCategory> {
    if k < 2 {
        return Err(Error::BadParams(format!("jk needs k >= 2, got {k}")));
    }
    let mut extra = Vec::new();
    let mut label = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for l in 0..k {
                extra.push((a, b));
                label.push(l);
            }
        }
    }
    let index: std::collections::HashMap<(Obj, Obj, usize), Mor> = extra
        .iter()
        .zip(&label)
        .enumerate()
        .map(|(i, (&(a, b), &l))| ((a, b, l), n + i))
        .collect();
    let lookup: Vec<(Obj, Obj, usize)> = extra.iter().zip(&label).map(|(&(a, b), &l)| (a, b, l)).collect();
    Ok(assemble(n, &extra, move |g, f| {
        let (a, _, lf) = lookup[f - n];
        let (_, c, lg) = lookup[g - n];
        index[&(a, c, (lf + lg) % k)]
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotent_squares_to_itself() {
        let c = preset("idempotent").unwrap();
        assert_eq!((c.object_count(), c.morphism_count()), (1, 2));
        assert_eq!(c.compose(1, 1), Some(1));
    }

    #[test]
    fn jk_2_3_counts() {
        let c = preset("jk:2:3").unwrap();
        assert_eq!(c.object_count(), 3);
        assert_eq!(c.morphism_count(), 9);
    }

    #[test]
    fn jk_composition_adds_labels() {
        let c = preset("jk:3:3").unwrap();
        // 0→1 label 2 then 1→2 label 2 gives 0→2 label 1.
        let f = c.hom(0, 1)[2];
        let g = c.hom(1, 2)[2];
        assert_eq!(c.compose(g, f), Some(c.hom(0, 2)[1]));
    }

    #[test]
    fn span_counts() {
        let c = preset("span").unwrap();
        assert_eq!((c.object_count(), c.morphism_count()), (3, 5));
    }

    #[test]
    fn chain_counts() {
        assert_eq!(preset("chain:4").unwrap().morphism_count(), 10);
    }

    #[test]
    fn group_preset_is_one_object() {
        let c = preset("group:s3").unwrap();
        assert_eq!((c.object_count(), c.morphism_count()), (1, 6));
    }

    #[test]
    fn bad_params() {
        assert!(matches!("jk:1:3".parse::<Preset>(), Err(Error::BadParams(_))));
        assert!(matches!("discrete:-1".parse::<Preset>(), Err(Error::BadParams(_))));
        assert!(matches!("nosuch".parse::<Preset>(), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn display_roundtrips() {
        for s in ["terminal", "discrete:3", "jk:2:4", "group:prod:c2:c3", "parallel_pair"] {
            assert_eq!(s.parse::<Preset>().unwrap().to_string(), s);
        }
    }
}
