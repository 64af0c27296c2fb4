use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::decide::coset_bifunctor;
use crate::config::{Caps, SearchBudget};
use crate::error::Result;
use crate::fincat::{product_category, FinCategory, ProductCategory};
use crate::groups::{direct_product, subgroups, DirectProduct, FinGroup, Subgroup};
use crate::setfun::{comparison_report, BiFunctor, ComparisonReport, SetFunctor};
use crate::uf::DisjointSets;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub sample_index: usize,
    pub bifunctor: BiFunctor,
    pub report: ComparisonReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub samples_run: usize,
    pub counterexample: Option<SearchHit>,
}

/// One-object categories whose morphisms are all invertible, read back as
/// groups with element `k` the morphism `k`.
fn as_group(c: &FinCategory) -> Option<FinGroup> {
    if c.object_count() != 1 {
        return None;
    }
    let rows: Vec<Vec<usize>> = c
        .morphisms()
        .map(|g| c.morphisms().map(|f| c.compose(g, f).unwrap()).collect())
        .collect();
    FinGroup::from_table(&rows, None).ok()
}

enum Sampler {
    /// Sums of transitive coset actions of `I × J`.
    Groups {
        product: DirectProduct,
        category: Box<ProductCategory>,
        subgroups: Vec<Subgroup>,
        cosets: Vec<OnceLock<SetFunctor>>,
    },
    /// Sums of quotients of representables by random congruences.
    General { product: ProductCategory },
}

/// Samples bifunctors on `I × J` within `budget` and returns the first whose
/// comparison map is not bijective. Sample `k` draws from its own seeded
/// stream, so the result does not depend on the thread count.
pub fn bounded_search(
    i_cat: &FinCategory,
    j_cat: &FinCategory,
    budget: &SearchBudget,
    caps: &Caps,
) -> Result<SearchOutcome> {
    let sampler = match (as_group(i_cat), as_group(j_cat)) {
        (Some(g), Some(h)) => {
            let product = direct_product(&g, &h);
            let subgroups: Vec<Subgroup> = subgroups(&product.group, caps)?
                .into_iter()
                .filter(|s| product.group.order() / s.order() <= budget.max_carrier)
                .collect();
            Sampler::Groups {
                category: Box::new(product_category(i_cat, j_cat, caps.product_morphisms)?),
                cosets: subgroups.iter().map(|_| OnceLock::new()).collect(),
                product,
                subgroups,
            }
        }
        _ => Sampler::General {
            product: product_category(i_cat, j_cat, caps.product_morphisms)?,
        },
    };
    let found = (0..budget.samples)
        .into_par_iter()
        .map(|k| -> Result<Option<SearchHit>> {
            let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
            rng.set_stream(k as u64);
            let bifunctor = sampler.sample(&mut rng, budget.max_carrier, caps)?;
            let report = comparison_report(&bifunctor, caps)?;
            Ok((!report.bijective).then_some(SearchHit {
                sample_index: k,
                bifunctor,
                report,
            }))
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    match found {
        Some(Err(e)) => Err(e),
        Some(Ok(hit)) => Ok(SearchOutcome {
            samples_run: hit.as_ref().map_or(budget.samples, |h| h.sample_index + 1),
            counterexample: hit,
        }),
        None => Ok(SearchOutcome {
            samples_run: budget.samples,
            counterexample: None,
        }),
    }
}

impl Sampler {
    fn sample(&self, rng: &mut ChaCha8Rng, max_carrier: usize, caps: &Caps) -> Result<BiFunctor> {
        let summands = rng.gen_range(1..=3);
        match self {
            Sampler::Groups {
                product,
                category,
                subgroups,
                cosets,
            } => {
                let mut total = 0;
                let mut acc: Option<SetFunctor> = None;
                for _ in 0..summands {
                    if subgroups.is_empty() {
                        break;
                    }
                    let k = rng.gen_range(0..subgroups.len());
                    let degree = product.group.order() / subgroups[k].order();
                    if total + degree > max_carrier {
                        continue;
                    }
                    total += degree;
                    let f = match cosets[k].get() {
                        Some(f) => f,
                        None => {
                            let f = coset_bifunctor(product, &subgroups[k], caps)?.functor().clone();
                            cosets[k].get_or_init(|| f)
                        }
                    };
                    acc = Some(match acc {
                        Some(a) => a.coproduct(f)?,
                        None => f.clone(),
                    });
                }
                let functor = acc.unwrap_or_else(|| empty_functor(&category.category));
                BiFunctor::from_functor((**category).clone(), functor)
            }
            Sampler::General { product } => {
                let c = &product.category;
                let mut total = 0;
                let mut acc: Option<SetFunctor> = None;
                for _ in 0..summands {
                    if c.is_empty() {
                        break;
                    }
                    let f = random_quotient_of_representable(c, rng);
                    let size: usize = f.carriers().iter().sum();
                    if total + size > max_carrier {
                        continue;
                    }
                    total += size;
                    acc = Some(match acc {
                        Some(a) => a.coproduct(&f)?,
                        None => f,
                    });
                }
                let functor = acc.unwrap_or_else(|| empty_functor(c));
                BiFunctor::from_functor(product.clone(), functor)
            }
        }
    }
}

fn empty_functor(c: &FinCategory) -> SetFunctor {
    SetFunctor::new_unchecked(c.clone(), vec![0; c.object_count()], vec![Vec::new(); c.morphism_count()])
}

/// `C(p, −)` for a random `p`, divided by the congruence generated by a few
/// random pairs from the same fibre.
fn random_quotient_of_representable(c: &FinCategory, rng: &mut ChaCha8Rng) -> SetFunctor {
    let p = rng.gen_range(0..c.object_count());
    // element = morphism out of p; fibre over q = hom(p, q)
    let elems: Vec<usize> = c.morphisms_from(p).collect();
    let mut slot = vec![usize::MAX; c.morphism_count()];
    for (k, &m) in elems.iter().enumerate() {
        slot[m] = k;
    }
    let mut ds = DisjointSets::new(elems.len());
    let merges = rng.gen_range(0..=elems.len());
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for _ in 0..merges {
        let a = elems[rng.gen_range(0..elems.len())];
        let fibre = c.hom(p, c.dst(a));
        let b = fibre[rng.gen_range(0..fibre.len())];
        pending.push((a, b));
    }
    while let Some((a, b)) = pending.pop() {
        if ds.union(slot[a], slot[b]) {
            for h in c.morphisms_from(c.dst(a)) {
                pending.push((c.compose(h, a).unwrap(), c.compose(h, b).unwrap()));
            }
        }
    }
    let (labels, leaders) = ds.labels();
    // renumber classes per fibre, in order of least member
    let mut local = vec![0; leaders.len()];
    let mut carriers = vec![0; c.object_count()];
    for (class, &leader) in leaders.iter().enumerate() {
        let q = c.dst(elems[leader]);
        local[class] = carriers[q];
        carriers[q] += 1;
    }
    let mut reps: Vec<Vec<usize>> = vec![Vec::new(); c.object_count()];
    for &leader in &leaders {
        reps[c.dst(elems[leader])].push(elems[leader]);
    }
    let action = c
        .morphisms()
        .map(|h| {
            reps[c.src(h)]
                .iter()
                .map(|&m| local[labels[slot[c.compose(h, m).unwrap()]]])
                .collect()
        })
        .collect();
    SetFunctor::new(c.clone(), carriers, action).expect("quotients of representables are functors")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::preset;

    fn search(i: &str, j: &str, samples: usize) -> SearchOutcome {
        let budget = SearchBudget {
            samples,
            ..SearchBudget::default()
        };
        bounded_search(&preset(i).unwrap(), &preset(j).unwrap(), &budget, &Caps::default()).unwrap()
    }

    #[test]
    fn finds_a_witness_for_c2_c2() {
        let out = search("group:c2", "group:c2", 200);
        let hit = out.counterexample.unwrap();
        assert!(!hit.report.bijective);
        assert_eq!(out.samples_run, hit.sample_index + 1);
    }

    #[test]
    fn nothing_for_coprime_or_trivial() {
        assert!(search("group:c2", "group:c3", 300).counterexample.is_none());
        assert!(search("terminal", "terminal", 50).counterexample.is_none());
    }

    #[test]
    fn general_sampler_finds_foltz_type_failures() {
        // equalizers do not commute with colimits over a bare span
        assert!(search("parallel_pair", "span", 500).counterexample.is_some());
    }

    #[test]
    fn filtered_colimits_commute_with_finite_limits() {
        assert!(search("parallel_pair", "chain:3", 300).counterexample.is_none());
        assert!(search("span", "idempotent", 300).counterexample.is_none());
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| search("group:c2", "group:s3", 400))
        };
        assert_eq!(run(1), run(4));
    }
}
